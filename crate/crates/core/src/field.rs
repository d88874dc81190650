//! Arithmetic in GF(q) for prime powers q up to 1024.
//!
//! Elements are the integers `0..q`, read as base-`p` digit vectors (lowest
//! digit = constant coefficient). The modulus is the smallest monic
//! irreducible polynomial of the required degree in that digit order, found
//! by trial division when the field is built.

pub const MAX_ORDER: u32 = 1024;

/// `Some((p, e))` when `q = p^e` with `p` prime and `e >= 1`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    degree: u32,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn digits(mut a: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `num` modulo the monic `den` over GF(p); coefficient vectors low-first.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - dd;
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        // every monic polynomial of degree d
        for tail in 0..p.pow(d as u32) {
            let mut cand = digits(tail, p, d);
            cand.push(1);
            if poly_rem(poly, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Build GF(`q`); `None` if `q` is not a prime power or exceeds [`MAX_ORDER`].
    pub fn new(q: u32) -> Option<Self> {
        let (p, degree) = prime_power(q)?;
        if q > MAX_ORDER {
            return None;
        }
        let len = degree as usize;
        let modulus: Vec<u32> = (0..q)
            .map(|tail| {
                let mut m = digits(tail, p, len);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");
        let mul_slow = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a, p, len), digits(b, p, len));
            let mut prod = vec![0u32; 2 * len];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let r = poly_rem(&prod, &modulus, p);
            undigits(&r, p)
        };
        // find a primitive element and tabulate its powers
        for g in 1..q {
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut x = 1;
            loop {
                exp.push(x);
                x = mul_slow(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == q as usize - 1 {
                let mut log = vec![0; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                return Some(FiniteField {
                    p,
                    degree,
                    order: q,
                    exp,
                    log,
                });
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        let len = self.degree as usize;
        let (da, db) = (digits(a, self.p, len), digits(b, self.p, len));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        undigits(&sum, self.p)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.order - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(10), None);
        assert_eq!(prime_power(1024), Some((2, 10)));
    }

    #[test]
    fn field_axioms_small_orders() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if a != 0 {
                    assert!((1..q).any(|b| f.mul(a, b) == 1), "no inverse for {a} in GF({q})");
                }
            }
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(FiniteField::new(6).is_none());
        assert!(FiniteField::new(2048).is_none());
        assert_eq!(FiniteField::new(1024).unwrap().order(), 1024);
    }
}
