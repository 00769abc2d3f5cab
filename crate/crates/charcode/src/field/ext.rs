//! F_{q^k} as a degree-k algebra over F_q, coherent with the base field:
//! gamma^((q^k-1)/(q-1)) equals the base field's delta, so norms and the
//! coset decompositions used by the exponential sums are plain exponent
//! arithmetic.

use super::poly;
use super::{BaseField, Elem, FieldError, FiniteField};
use crate::num;

/// Desk-scale cap on q^k.
pub const EXT_ORDER_CAP: u64 = 1 << 24;

const NO_LOG: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct ExtensionField {
    base: BaseField,
    k: u32,
    order: u64,
    modulus: Vec<Elem>,
    gamma: Elem,
    exp_tab: Vec<Elem>,
    log_tab: Vec<u32>,
    /// Tr_{q^k/q}(gamma^t) as an F_q index, for t in [0, q^k-1).
    trace_by_log: Vec<Elem>,
    unit_primes: Vec<u64>,
}

impl ExtensionField {
    pub fn new(base: BaseField, k: u32) -> Result<Self, FieldError> {
        let q = base.order();
        if k < 2 {
            return Err(FieldError::DegreeTooLarge {
                requested: 0,
                cap: EXT_ORDER_CAP,
            });
        }
        let order = num::checked_pow(q, k)
            .filter(|&n| n <= EXT_ORDER_CAP)
            .ok_or(FieldError::DegreeTooLarge {
                requested: u64::MAX,
                cap: EXT_ORDER_CAP,
            })?;

        let modulus = poly::smallest_irreducible(&base, k as usize);
        let mut fld = ExtensionField {
            base,
            k,
            order,
            modulus,
            gamma: 0,
            exp_tab: Vec::new(),
            log_tab: Vec::new(),
            trace_by_log: Vec::new(),
            unit_primes: num::prime_divisors(order - 1),
        };

        let gamma0 = fld.find_primitive();
        fld.gamma = fld.align_with_delta(gamma0);
        fld.build_tables();
        Ok(fld)
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[Elem] {
        &self.modulus
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    /// (q^k - 1) / (q - 1), the norm exponent.
    pub fn norm_exponent(&self) -> u64 {
        (self.order - 1) / (self.base.order() - 1)
    }

    /// F_q digits of x, constant term first, always k entries.
    pub fn coeffs(&self, x: Elem) -> Vec<Elem> {
        let q = self.base.order();
        let mut v = Vec::with_capacity(self.k as usize);
        let mut r = x as u64;
        for _ in 0..self.k {
            v.push((r % q) as Elem);
            r /= q;
        }
        v
    }

    pub fn from_coeffs(&self, coeffs: &[Elem]) -> Elem {
        let q = self.base.order();
        assert!(coeffs.len() <= self.k as usize);
        let mut x = 0u64;
        for &c in coeffs.iter().rev() {
            debug_assert!((c as u64) < q);
            x = x * q + c as u64;
        }
        x as Elem
    }

    /// The embedded copy of F_q is exactly the constant polynomials.
    pub fn embed(&self, c: Elem) -> Elem {
        debug_assert!((c as u64) < self.base.order());
        c
    }

    pub fn is_in_base(&self, x: Elem) -> bool {
        (x as u64) < self.base.order()
    }

    /// Tr_{q^k/q}(x) as an F_q element.
    pub fn trace(&self, x: Elem) -> Elem {
        if x == 0 {
            return 0;
        }
        self.trace_by_log[self.log_tab[x as usize] as usize]
    }

    /// Tr_{q^k/q}(gamma^t) without an element lookup.
    pub fn trace_of_power(&self, t: u64) -> Elem {
        self.trace_by_log[(t % (self.order - 1)) as usize]
    }

    /// N(x) = x^((q^k-1)/(q-1)) as an F_q element; errors on x = 0.
    pub fn norm(&self, x: Elem) -> Result<Elem, FieldError> {
        let t = self.dlog(x)?;
        Ok(self.base.exp(t % (self.base.order() - 1)))
    }

    /// Monic minimal polynomial of gamma^(-a) over F_q: the product of
    /// (x - gamma^(-a q^i)) over the Frobenius orbit. Its degree divides k.
    pub fn minimal_polynomial(&self, a: u64) -> super::Polynomial {
        let n = self.order - 1;
        let q = self.base.order();
        let root_exp = (n - a % n) % n;
        let mut orbit = Vec::new();
        let mut t = root_exp;
        loop {
            orbit.push(t);
            t = (t as u128 * q as u128 % n as u128) as u64;
            if t == root_exp {
                break;
            }
        }
        let mut coeffs: Vec<Elem> = vec![1];
        for &c in &orbit {
            let neg_root = self.neg(self.exp(c));
            let mut next = vec![0; coeffs.len() + 1];
            for (i, &co) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], co);
                next[i] = self.add(next[i], self.mul(neg_root, co));
            }
            coeffs = next;
        }
        for &c in &coeffs {
            assert!(
                self.is_in_base(c),
                "minimal polynomial coefficients lie in F_q"
            );
        }
        super::Polynomial::new(coeffs)
    }

    fn lex_element(&self, rank: u64) -> Elem {
        let q = self.base.order();
        let mut r = rank;
        let mut x = 0u64;
        let mut place = num::checked_pow(q, self.k).unwrap();
        for i in 0..self.k {
            place /= q;
            let c = r / place;
            r %= place;
            x += c * num::checked_pow(q, i).unwrap();
        }
        x as Elem
    }

    fn mul_raw(&self, x: Elem, y: Elem) -> Elem {
        let a = self.coeffs(x);
        let b = self.coeffs(y);
        let prod = poly::poly_rem(
            &self.base,
            &poly::poly_mul(&self.base, &a, &b),
            &self.modulus,
        );
        self.from_coeffs(&prod)
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

    fn find_primitive(&self) -> Elem {
        let n = self.order - 1;
        'cand: for rank in 0..self.order {
            let cand = self.lex_element(rank);
            if cand == 0 {
                continue;
            }
            for &r in &self.unit_primes {
                if self.pow_raw(cand, n / r) == 1 {
                    continue 'cand;
                }
            }
            return cand;
        }
        unreachable!("F_{{q^k}}^* is cyclic");
    }

    /// Replace gamma0 by gamma0^u, u the smallest exponent coprime to
    /// q^k - 1 with gamma^((q^k-1)/(q-1)) = delta.
    fn align_with_delta(&self, gamma0: Elem) -> Elem {
        let q = self.base.order();
        let n = self.order - 1;
        let m = n / (q - 1);
        let dp = self.pow_raw(gamma0, m);
        assert!(
            self.is_in_base(dp),
            "norm of a unit must land in the embedded base field"
        );
        let s = self.base.dlog(dp).expect("dp is a unit");
        let v = num::mod_inverse(s % (q - 1), q - 1).expect("dp is primitive in F_q");
        let mut u = v;
        loop {
            if u >= 1 && num::gcd(u, n) == 1 {
                break;
            }
            u += q - 1;
        }
        self.pow_raw(gamma0, u)
    }

    fn build_tables(&mut self) {
        let n = (self.order - 1) as usize;
        let mut exp_tab = Vec::with_capacity(n);
        let mut log_tab = vec![NO_LOG; self.order as usize];
        let mut acc: Elem = 1;
        for t in 0..n {
            assert_eq!(log_tab[acc as usize], NO_LOG, "gamma order too small");
            exp_tab.push(acc);
            log_tab[acc as usize] = t as u32;
            acc = self.mul_raw(acc, self.gamma);
        }
        assert_eq!(acc, 1);
        self.exp_tab = exp_tab;
        self.log_tab = log_tab;

        // tower coherence: gamma^((q^k-1)/(q-1)) = delta; the exponent
        // wraps to 0 in the degenerate q = 2 tower
        let m = self.norm_exponent() % (self.order - 1);
        assert_eq!(
            self.exp_tab[m as usize],
            self.embed(self.base.delta()),
            "gamma is aligned so that its norm power is delta"
        );

        let q = self.base.order();
        self.trace_by_log = (0..n as u64)
            .map(|t| {
                let mut s: Elem = 0;
                let mut tq = t;
                for _ in 0..self.k {
                    s = self.add(s, self.exp_tab[tq as usize]);
                    tq = (tq as u128 * q as u128 % (self.order - 1) as u128) as u64;
                }
                assert!(self.is_in_base(s), "trace must land in F_q");
                s
            })
            .collect();
    }
}

impl FiniteField for ExtensionField {
    fn order(&self) -> u64 {
        self.order
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn generator(&self) -> Elem {
        self.gamma
    }

    fn add(&self, x: Elem, y: Elem) -> Elem {
        let q = self.base.order();
        let mut out = 0u64;
        let mut a = x as u64;
        let mut b = y as u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            let s = self.base.add((a % q) as Elem, (b % q) as Elem) as u64;
            out += s * place;
            a /= q;
            b /= q;
            place *= q;
        }
        out as Elem
    }

    fn neg(&self, x: Elem) -> Elem {
        let q = self.base.order();
        let mut out = 0u64;
        let mut a = x as u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            out += self.base.neg((a % q) as Elem) as u64 * place;
            a /= q;
            place *= q;
        }
        out as Elem
    }

    fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x == 0 || y == 0 {
            return 0;
        }
        let t = self.log_tab[x as usize] as u64 + self.log_tab[y as usize] as u64;
        self.exp_tab[(t % (self.order - 1)) as usize]
    }

    fn exp(&self, t: u64) -> Elem {
        self.exp_tab[(t % (self.order - 1)) as usize]
    }

    fn dlog(&self, x: Elem) -> Result<u64, FieldError> {
        if x == 0 {
            return Err(FieldError::ZeroInput);
        }
        Ok(self.log_tab[x as usize] as u64)
    }

    fn abs_trace(&self, x: Elem) -> u64 {
        self.base.abs_trace(self.trace(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::xorshift64;

    fn tower(p: u64, e: u32, k: u32) -> ExtensionField {
        ExtensionField::new(BaseField::new(p, e).unwrap(), k).unwrap()
    }

    #[test]
    fn gf64_over_gf4() {
        let f = tower(2, 2, 3);
        assert_eq!(f.order(), 64);
        assert_eq!(f.elem_order(f.gamma()).unwrap(), 63);
        // gamma^21 = delta of GF(4)
        assert_eq!(f.exp(21), f.embed(f.base().delta()));
    }

    #[test]
    fn gf27_over_gf3() {
        let f = tower(3, 1, 3);
        // gamma^13 = 2, the unique primitive element of GF(3)
        assert_eq!(f.exp(13), 2);
    }

    #[test]
    fn gf729_over_gf9_order_check() {
        let f = tower(3, 2, 3);
        assert_eq!(f.order(), 729);
        for r in crate::num::prime_divisors(728) {
            assert_ne!(f.pow(f.gamma(), 728 / r), 1);
        }
    }

    #[test]
    fn trace_fibers_gf64_over_gf4() {
        let f = tower(2, 2, 3);
        let mut counts = vec![0u32; 4];
        for x in f.elements() {
            counts[f.trace(x) as usize] += 1;
        }
        // |trace^{-1}(c)| = q^{k-1} = 16 for every c in F_q
        assert_eq!(counts, vec![16, 16, 16, 16]);
    }

    #[test]
    fn trace_of_zero_and_subfield() {
        let f = tower(3, 1, 3);
        assert_eq!(f.trace(0), 0);
        // trace of an embedded c is k*c reduced in F_q
        for c in 0..3 {
            let mut expect: Elem = 0;
            for _ in 0..f.k() {
                expect = f.base().add(expect, c);
            }
            assert_eq!(f.trace(f.embed(c)), expect);
        }
    }

    #[test]
    fn norm_fibers_gf27_over_gf3() {
        let f = tower(3, 1, 3);
        let mut counts = vec![0u32; 3];
        for x in 1..f.order() as Elem {
            counts[f.norm(x).unwrap() as usize] += 1;
        }
        // |norm^{-1}(c)| = (q^k-1)/(q-1) = 13 for every c in F_q^*
        assert_eq!(counts, vec![0, 13, 13]);
        assert_eq!(f.norm(f.gamma()).unwrap(), f.base().delta());
        assert_eq!(f.norm(1).unwrap(), 1);
        assert_eq!(f.norm(0).unwrap_err(), FieldError::ZeroInput);
    }

    #[test]
    fn norm_fibers_gf64_over_gf4() {
        let f = tower(2, 2, 3);
        let mut counts = vec![0u32; 4];
        for x in 1..f.order() as Elem {
            counts[f.norm(x).unwrap() as usize] += 1;
        }
        assert_eq!(counts, vec![0, 21, 21, 21]);
    }

    #[test]
    fn frobenius_is_a_homomorphism() {
        let f = tower(2, 2, 3);
        let q = f.base().order();
        let mut st = 0x9e3779b97f4a7c15u64;
        for _ in 0..200 {
            let x = (xorshift64(&mut st) % f.order()) as Elem;
            let y = (xorshift64(&mut st) % f.order()) as Elem;
            assert_eq!(f.pow(f.add(x, y), q), f.add(f.pow(x, q), f.pow(y, q)));
            assert_eq!(f.pow(f.mul(x, y), q), f.mul(f.pow(x, q), f.pow(y, q)));
        }
    }

    #[test]
    fn trace_is_fq_linear() {
        let f = tower(3, 1, 3);
        let mut st = 0xdeadbeefcafef00du64;
        for _ in 0..200 {
            let c = (xorshift64(&mut st) % f.base().order()) as Elem;
            let x = (xorshift64(&mut st) % f.order()) as Elem;
            let y = (xorshift64(&mut st) % f.order()) as Elem;
            let lhs = f.trace(f.add(f.mul(f.embed(c), x), y));
            let rhs = f.base().add(f.base().mul(c, f.trace(x)), f.trace(y));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let f = tower(2, 2, 3);
        let mut st = 0x1234_5678_9abc_def0u64;
        for _ in 0..200 {
            let x = 1 + (xorshift64(&mut st) % (f.order() - 1)) as Elem;
            let y = 1 + (xorshift64(&mut st) % (f.order() - 1)) as Elem;
            let lhs = f.norm(f.mul(x, y)).unwrap();
            let rhs = f.base().mul(f.norm(x).unwrap(), f.norm(y).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn abs_trace_is_transitive() {
        let f = tower(2, 2, 3);
        for x in f.elements() {
            assert_eq!(f.abs_trace(x), f.base().abs_trace(f.trace(x)));
        }
    }

    #[test]
    fn dlog_examples() {
        let f = tower(3, 1, 3);
        assert_eq!(f.dlog(f.gamma()).unwrap(), 1);
        assert_eq!(f.dlog(1).unwrap(), 0);
        assert_eq!(f.dlog(0).unwrap_err(), FieldError::ZeroInput);
    }

    #[test]
    fn gf2_tower_works() {
        // q = 2 exercises the degenerate q-1 = 1 arithmetic
        let f = tower(2, 1, 3);
        assert_eq!(f.order(), 8);
        assert_eq!(f.base().delta(), 1);
        assert_eq!(f.norm(f.gamma()).unwrap(), 1);
    }

    #[test]
    fn minimal_polynomial_degrees_and_roots() {
        let f = tower(2, 2, 3);
        // gamma^{-21} lies in F_4, so its minimal polynomial is linear
        assert_eq!(f.minimal_polynomial(21).degree(), Some(1));
        // gcd(21, 1) = 1: gamma^{-1} generates the full extension
        let h = f.minimal_polynomial(1);
        assert_eq!(h.degree(), Some(3));
        assert_eq!(h.coeffs.last(), Some(&1));
        // minimal polynomial of 1 is x - 1
        assert_eq!(f.minimal_polynomial(0).coeffs, vec![f.base().neg(1), 1]);
        for a in [0u64, 1, 5, 9, 21] {
            let h = f.minimal_polynomial(a);
            let root = f.exp((63 - a % 63) % 63);
            assert_eq!(h.eval_in_ext(&f, root), 0, "h_a(gamma^-a) = 0 for a={a}");
            let deg = h.degree().unwrap() as u32;
            assert_eq!(f.k() % deg, 0, "degree divides k");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use std::sync::OnceLock;

        fn shared() -> &'static ExtensionField {
            static F: OnceLock<ExtensionField> = OnceLock::new();
            F.get_or_init(|| tower(2, 2, 3))
        }

        proptest! {
            #[test]
            fn dlog_roundtrip(t in 0u64..63) {
                let f = shared();
                prop_assert_eq!(f.dlog(f.exp(t)).unwrap(), t);
            }

            #[test]
            fn mul_matches_dlog_addition(s in 0u64..63, t in 0u64..63) {
                let f = shared();
                prop_assert_eq!(f.mul(f.exp(s), f.exp(t)), f.exp(s + t));
            }
        }
    }
}
