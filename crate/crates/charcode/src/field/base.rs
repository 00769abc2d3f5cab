//! F_q = GF(p^e) with eager exp/log, negation and absolute-trace tables.

use super::poly::{self, PrimeCoeffs};
use super::{Elem, FieldError, FiniteField};
use crate::num;

/// Desk-scale cap on q = p^e.
pub const BASE_ORDER_CAP: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

/// GF(p^e) represented as GF(p)[x] modulo the lexicographically smallest
/// monic irreducible of degree e. The designated primitive element `delta`
/// is the lexicographically smallest element of multiplicative order q-1
/// (coefficient lists compared constant term first).
#[derive(Debug, Clone)]
pub struct BaseField {
    p: u64,
    e: u32,
    q: u64,
    modulus: Vec<Elem>,
    delta: Elem,
    exp_tab: Vec<Elem>,
    log_tab: Vec<u32>,
    neg_tab: Vec<Elem>,
    abs_tr: Vec<u32>,
    unit_primes: Vec<u64>,
}

impl BaseField {
    pub fn new(p: u64, e: u32) -> Result<Self, FieldError> {
        if !num::is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if e < 1 {
            return Err(FieldError::DegreeTooLarge {
                requested: 0,
                cap: BASE_ORDER_CAP,
            });
        }
        let q = num::checked_pow(p, e)
            .filter(|&q| q <= BASE_ORDER_CAP)
            .ok_or(FieldError::DegreeTooLarge {
                requested: u64::MAX,
                cap: BASE_ORDER_CAP,
            })?;
        if q > BASE_ORDER_CAP {
            return Err(FieldError::DegreeTooLarge {
                requested: q,
                cap: BASE_ORDER_CAP,
            });
        }

        let fp = PrimeCoeffs { p };
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            poly::smallest_irreducible(&fp, e as usize)
        };

        let mut fld = BaseField {
            p,
            e,
            q,
            modulus,
            delta: 0,
            exp_tab: Vec::new(),
            log_tab: Vec::new(),
            neg_tab: Vec::new(),
            abs_tr: Vec::new(),
            unit_primes: num::prime_divisors(q - 1),
        };

        fld.delta = fld.find_delta();
        fld.build_tables();
        Ok(fld)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.e
    }

    /// Modulus polynomial over GF(p), constant term first, monic.
    pub fn modulus(&self) -> &[Elem] {
        &self.modulus
    }

    pub fn delta(&self) -> Elem {
        self.delta
    }

    /// Coefficients of x over GF(p), constant term first, always e entries.
    pub fn coeffs(&self, x: Elem) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.e as usize);
        let mut r = x as u64;
        for _ in 0..self.e {
            v.push(r % self.p);
            r /= self.p;
        }
        v
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Elem {
        assert!(coeffs.len() <= self.e as usize);
        let mut x = 0u64;
        for &c in coeffs.iter().rev() {
            x = x * self.p + c % self.p;
        }
        x as Elem
    }

    /// Element whose coefficient list has the given lexicographic rank
    /// (constant coefficient compared first).
    fn lex_element(&self, rank: u64) -> Elem {
        let mut r = rank;
        let mut x = 0u64;
        // peel digits of rank, c_0 most significant
        let mut place = 1u64;
        for _ in 0..self.e {
            place *= self.p;
        }
        for i in 0..self.e {
            place /= self.p;
            let c = r / place;
            r %= place;
            x += c * num::checked_pow(self.p, i).unwrap();
        }
        x as Elem
    }

    /// Table-free product, used only while the tables are being built.
    fn mul_raw(&self, x: Elem, y: Elem) -> Elem {
        if self.e == 1 {
            return (x as u64 * y as u64 % self.p) as Elem;
        }
        let fp = PrimeCoeffs { p: self.p };
        let a: Vec<Elem> = self.coeffs(x).iter().map(|&c| c as Elem).collect();
        let b: Vec<Elem> = self.coeffs(y).iter().map(|&c| c as Elem).collect();
        let prod = poly::poly_rem(&fp, &poly::poly_mul(&fp, &a, &b), &self.modulus);
        let digits: Vec<u64> = prod.iter().map(|&c| c as u64).collect();
        self.from_coeffs(&digits)
    }

    fn pow_raw(&self, x: Elem, mut n: u64) -> Elem {
        let mut base = x;
        let mut acc: Elem = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            n >>= 1;
        }
        acc
    }

    fn has_full_order(&self, x: Elem) -> bool {
        if x == 0 {
            return false;
        }
        self.unit_primes
            .iter()
            .all(|&r| self.pow_raw(x, (self.q - 1) / r) != 1)
    }

    fn find_delta(&self) -> Elem {
        for rank in 0..self.q {
            let cand = self.lex_element(rank);
            if self.has_full_order(cand) {
                return cand;
            }
        }
        unreachable!("F_q^* is cyclic, a generator exists");
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let mut exp_tab = Vec::with_capacity(q - 1);
        let mut log_tab = vec![NO_LOG; q];
        let mut acc: Elem = 1;
        for t in 0..q - 1 {
            assert_eq!(log_tab[acc as usize], NO_LOG, "delta order too small");
            exp_tab.push(acc);
            log_tab[acc as usize] = t as u32;
            acc = self.mul_raw(acc, self.delta);
        }
        assert_eq!(acc, 1, "delta^{{q-1}} must be 1");
        self.exp_tab = exp_tab;
        self.log_tab = log_tab;

        self.neg_tab = (0..self.q as Elem).map(|x| self.neg_digits(x)).collect();

        // Tr_{q/p}(x) = sum of x^{p^i}; conjugates via the log table.
        self.abs_tr = (0..self.q as Elem)
            .map(|x| {
                if x == 0 {
                    return 0u32;
                }
                let t = self.log_tab[x as usize] as u64;
                let mut s: Elem = 0;
                let mut tp = t;
                for _ in 0..self.e {
                    s = self.add(s, self.exp_tab[tp as usize]);
                    tp = tp * self.p % (self.q - 1);
                }
                assert!(
                    (s as u64) < self.p,
                    "absolute trace must land in the prime field"
                );
                s
            })
            .collect();
    }

    fn neg_digits(&self, x: Elem) -> Elem {
        if self.e == 1 {
            return if x == 0 {
                0
            } else {
                (self.p - x as u64) as Elem
            };
        }
        let mut out = 0u64;
        let mut r = x as u64;
        let mut place = 1u64;
        for _ in 0..self.e {
            let c = r % self.p;
            r /= self.p;
            if c != 0 {
                out += (self.p - c) * place;
            }
            place *= self.p;
        }
        out as Elem
    }
}

impl FiniteField for BaseField {
    fn order(&self) -> u64 {
        self.q
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn generator(&self) -> Elem {
        self.delta
    }

    fn add(&self, x: Elem, y: Elem) -> Elem {
        if self.e == 1 {
            return ((x as u64 + y as u64) % self.p) as Elem;
        }
        let mut out = 0u64;
        let mut a = x as u64;
        let mut b = y as u64;
        let mut place = 1u64;
        for _ in 0..self.e {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out as Elem
    }

    fn neg(&self, x: Elem) -> Elem {
        self.neg_tab[x as usize]
    }

    fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x == 0 || y == 0 {
            return 0;
        }
        let t = self.log_tab[x as usize] as u64 + self.log_tab[y as usize] as u64;
        self.exp_tab[(t % (self.q - 1)) as usize]
    }

    fn exp(&self, t: u64) -> Elem {
        self.exp_tab[(t % (self.q - 1)) as usize]
    }

    fn dlog(&self, x: Elem) -> Result<u64, FieldError> {
        if x == 0 {
            return Err(FieldError::ZeroInput);
        }
        Ok(self.log_tab[x as usize] as u64)
    }

    fn abs_trace(&self, x: Elem) -> u64 {
        self.abs_tr[x as usize] as u64
    }
}
