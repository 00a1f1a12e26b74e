//! Finite fields GF(p^f) with elements indexed `0..q`.
//!
//! An element index is the base-`p` encoding of the coefficient vector of its
//! polynomial representative, so index 0 is zero and index 1 is one. Nonzero
//! elements are also indexed by discrete logarithm to a fixed primitive
//! element `w`.

use crate::error::{Error, Result};

/// Largest field order supported.
pub const MAX_FIELD_ORDER: usize = 4096;

/// Fields up to this order carry full addition and multiplication tables.
const TABLE_LIMIT: usize = 256;

/// Monic irreducible polynomials, one per supported `(p, f)` with `f > 1`.
/// Coefficients are listed from the constant term up to degree `f - 1`; the
/// leading coefficient is implicit. Each is the smallest such polynomial in
/// base-`p` order.
const IRREDUCIBLES: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 0, 0, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0]),
    (2, 9, &[1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 12, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 2, &[1, 0]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 1, 0, 0]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (3, 6, &[2, 1, 0, 0, 0, 0]),
    (3, 7, &[2, 0, 1, 0, 0, 0, 0]),
    (5, 2, &[2, 0]),
    (5, 3, &[1, 1, 0]),
    (5, 4, &[2, 0, 0, 0]),
    (5, 5, &[1, 4, 0, 0, 0]),
    (7, 2, &[1, 0]),
    (7, 3, &[2, 0, 0]),
    (7, 4, &[1, 1, 0, 0]),
    (11, 2, &[1, 0]),
    (11, 3, &[4, 1, 0]),
    (13, 2, &[2, 0]),
    (13, 3, &[2, 0, 0]),
    (17, 2, &[3, 0]),
    (19, 2, &[1, 0]),
    (23, 2, &[1, 0]),
    (29, 2, &[2, 0]),
    (31, 2, &[1, 0]),
    (37, 2, &[2, 0]),
    (41, 2, &[3, 0]),
    (43, 2, &[1, 0]),
    (47, 2, &[1, 0]),
    (53, 2, &[2, 0]),
    (59, 2, &[1, 0]),
    (61, 2, &[2, 0]),
];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, f))` when `q = p^f` for a prime `p`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let mut rest = q;
    let mut f = 0;
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

#[derive(Clone, Debug)]
pub struct FieldTable {
    p: u32,
    f: u32,
    q: usize,
    /// `exp[k] = w^k` for `k in 0..q-1`.
    exp: Vec<u16>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u16>,
    add_table: Option<Vec<u16>>,
    mul_table: Option<Vec<u16>>,
}

impl PartialEq for FieldTable {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.f == other.f
    }
}

impl Eq for FieldTable {}

impl FieldTable {
    pub fn new(p: u32, f: u32) -> Result<Self> {
        if !is_prime(p as u64) || f == 0 {
            return Err(Error::UnsupportedField { p, f });
        }
        let q = (p as usize)
            .checked_pow(f)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::UnsupportedField { p, f })?;
        let modulus: Vec<u32> = if f == 1 {
            Vec::new()
        } else {
            IRREDUCIBLES
                .iter()
                .find(|(pp, ff, _)| *pp == p && *ff == f)
                .map(|(_, _, c)| c.to_vec())
                .ok_or(Error::UnsupportedField { p, f })?
        };

        let digits = |mut a: usize| -> Vec<u32> {
            let mut d = vec![0u32; f as usize];
            for slot in d.iter_mut() {
                *slot = (a % p as usize) as u32;
                a /= p as usize;
            }
            d
        };
        let encode = |d: &[u32]| -> usize {
            d.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };
        // Polynomial product reduced modulo the irreducible.
        let poly_mul = |a: usize, b: usize| -> usize {
            if f == 1 {
                return (a * b) % p as usize;
            }
            let (da, db) = (digits(a), digits(b));
            let n = f as usize;
            let mut prod = vec![0u32; 2 * n - 1];
            for i in 0..n {
                for j in 0..n {
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                }
            }
            for k in (n..2 * n - 1).rev() {
                let c = prod[k];
                if c == 0 {
                    continue;
                }
                prod[k] = 0;
                // x^n = -(modulus)
                for (i, &m) in modulus.iter().enumerate() {
                    let sub = (c * m) % p;
                    prod[k - n + i] = (prod[k - n + i] + p - sub) % p;
                }
            }
            encode(&prod[..n])
        };

        // Smallest-index primitive element.
        let mut exp = Vec::new();
        let mut found = false;
        for w in 1..q {
            exp.clear();
            let mut cur = 1usize;
            loop {
                exp.push(cur as u16);
                cur = poly_mul(cur, w);
                if cur == 1 || cur == 0 {
                    break;
                }
            }
            if cur == 1 && exp.len() == q - 1 {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::UnsupportedField { p, f });
        }
        let mut log = vec![0u16; q];
        for (k, &a) in exp.iter().enumerate() {
            log[a as usize] = k as u16;
        }

        let mut field = FieldTable {
            p,
            f,
            q,
            exp,
            log,
            add_table: None,
            mul_table: None,
        };
        if q <= TABLE_LIMIT {
            let mut add = vec![0u16; q * q];
            let mut mul = vec![0u16; q * q];
            for a in 0..q {
                for b in 0..q {
                    add[a * q + b] = field.add_slow(a as u16, b as u16);
                    mul[a * q + b] = field.mul_slow(a as u16, b as u16);
                }
            }
            field.add_table = Some(add);
            field.mul_table = Some(mul);
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// The distinguished generator of the multiplicative group.
    pub fn generator(&self) -> u16 {
        self.exp[1 % self.exp.len()]
    }

    /// `w^k` for any integer `k`.
    pub fn w_pow(&self, k: i64) -> u16 {
        let m = (self.q - 1) as i64;
        self.exp[k.rem_euclid(m) as usize]
    }

    fn add_slow(&self, a: u16, b: u16) -> u16 {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p as usize;
        let (mut a, mut b) = (a as usize, b as usize);
        let mut out = 0usize;
        let mut scale = 1usize;
        for _ in 0..self.f {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out as u16
    }

    fn mul_slow(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = self.log[a as usize] as usize + self.log[b as usize] as usize;
        self.exp[k % (self.q - 1)]
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        match &self.add_table {
            Some(t) => t[a as usize * self.q + b as usize],
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        match &self.mul_table {
            Some(t) => t[a as usize * self.q + b as usize],
            None => self.mul_slow(a, b),
        }
    }

    pub fn neg(&self, a: u16) -> u16 {
        if self.p == 2 || a == 0 {
            return a;
        }
        // -1 = w^((q-1)/2) for odd q
        self.mul(a, self.w_pow(((self.q - 1) / 2) as i64))
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| {
            let m = self.q - 1;
            self.exp[(m - self.log[a as usize] as usize) % m]
        })
    }

    pub fn pow(&self, a: u16, k: i64) -> u16 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        self.w_pow(self.log[a as usize] as i64 * k)
    }

    /// Discrete log base `w`; `None` for zero.
    pub fn log(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u16) -> Option<usize> {
        let l = self.log(a)? as usize;
        let m = self.q - 1;
        Some(m / gcd(m, l))
    }

    /// Element with the given integer value reduced into the prime subfield.
    pub fn from_int(&self, n: i64) -> u16 {
        n.rem_euclid(self.p as i64) as u16
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(fld: &FieldTable) {
        let q = fld.order() as u16;
        // spot check associativity and distributivity on a sample
        let step = (q / 13).max(1);
        for a in (0..q).step_by(step as usize) {
            for b in (0..q).step_by(step as usize) {
                for c in (0..q).step_by(step as usize) {
                    assert_eq!(fld.add(fld.add(a, b), c), fld.add(a, fld.add(b, c)));
                    assert_eq!(fld.mul(fld.mul(a, b), c), fld.mul(a, fld.mul(b, c)));
                    assert_eq!(
                        fld.mul(a, fld.add(b, c)),
                        fld.add(fld.mul(a, b), fld.mul(a, c))
                    );
                }
            }
            assert_eq!(fld.add(a, fld.neg(a)), 0);
            if a != 0 {
                assert_eq!(fld.mul(a, fld.inv(a).unwrap()), 1);
            }
        }
        assert_eq!(fld.mult_order(fld.generator()), Some(fld.order() - 1));
    }

    #[test]
    fn small_fields() {
        let f2 = FieldTable::new(2, 1).unwrap();
        assert_eq!(f2.generator(), 1);
        let f8 = FieldTable::new(2, 3).unwrap();
        assert_eq!(f8.mult_order(f8.generator()), Some(7));
        let f9 = FieldTable::new(3, 2).unwrap();
        assert_eq!(f9.mult_order(f9.generator()), Some(8));
        for fld in [f2, f8, f9] {
            check_axioms(&fld);
        }
    }

    #[test]
    fn every_tabulated_polynomial_gives_a_field() {
        for &(p, f, _) in IRREDUCIBLES {
            let fld = FieldTable::new(p, f).expect("irreducible");
            check_axioms(&fld);
        }
    }

    #[test]
    fn unsupported() {
        assert!(FieldTable::new(4, 1).is_err());
        assert!(FieldTable::new(2, 13).is_err());
        assert!(FieldTable::new(67, 2).is_err());
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
