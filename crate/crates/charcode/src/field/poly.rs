//! Dense polynomial arithmetic over a coefficient field, plus the public
//! `Polynomial` type over F_q used for minimal and parity-check polynomials.
//!
//! Coefficient vectors are constant term first throughout.

use super::{BaseField, Elem, FiniteField};

/// Coefficient arithmetic needed by the polynomial engine. Implemented by a
/// bare prime field (during BaseField construction) and by `BaseField`
/// itself (during extension construction).
pub(crate) trait Coeffs {
    fn size(&self) -> u64;
    fn cadd(&self, a: Elem, b: Elem) -> Elem;
    fn cneg(&self, a: Elem) -> Elem;
    fn cmul(&self, a: Elem, b: Elem) -> Elem;
    fn cinv(&self, a: Elem) -> Elem;
}

/// GF(p) with elements as plain residues; the bootstrap coefficient field.
pub(crate) struct PrimeCoeffs {
    pub p: u64,
}

impl Coeffs for PrimeCoeffs {
    fn size(&self) -> u64 {
        self.p
    }
    fn cadd(&self, a: Elem, b: Elem) -> Elem {
        ((a as u64 + b as u64) % self.p) as Elem
    }
    fn cneg(&self, a: Elem) -> Elem {
        if a == 0 {
            0
        } else {
            (self.p - a as u64) as Elem
        }
    }
    fn cmul(&self, a: Elem, b: Elem) -> Elem {
        (a as u64 * b as u64 % self.p) as Elem
    }
    fn cinv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        crate::num::mod_inverse(a as u64, self.p).expect("p prime") as Elem
    }
}

impl Coeffs for BaseField {
    fn size(&self) -> u64 {
        self.order()
    }
    fn cadd(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, b)
    }
    fn cneg(&self, a: Elem) -> Elem {
        self.neg(a)
    }
    fn cmul(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, b)
    }
    fn cinv(&self, a: Elem) -> Elem {
        self.inv(a).expect("nonzero")
    }
}

pub(crate) fn deg(p: &[Elem]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

fn trim(mut p: Vec<Elem>) -> Vec<Elem> {
    let d = deg(&p).map_or(0, |d| d + 1);
    p.truncate(d);
    p
}

pub(crate) fn poly_mul<F: Coeffs>(f: &F, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if deg(a).is_none() || deg(b).is_none() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = f.cadd(out[i + j], f.cmul(ai, bj));
        }
    }
    trim(out)
}

/// Remainder of a by the monic polynomial m.
pub(crate) fn poly_rem<F: Coeffs>(f: &F, a: &[Elem], m: &[Elem]) -> Vec<Elem> {
    let md = deg(m).expect("nonzero modulus");
    assert_eq!(m[md], 1, "modulus must be monic");
    let mut r: Vec<Elem> = a.to_vec();
    while let Some(rd) = deg(&r) {
        if rd < md {
            break;
        }
        let c = r[rd];
        for i in 0..md {
            r[rd - md + i] = f.cadd(r[rd - md + i], f.cneg(f.cmul(c, m[i])));
        }
        r[rd] = 0;
    }
    trim(r)
}

/// Quotient and remainder by an arbitrary nonzero divisor.
pub(crate) fn poly_divrem<F: Coeffs>(f: &F, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let bd = deg(b).expect("division by zero polynomial");
    let lead_inv = f.cinv(b[bd]);
    let mut r: Vec<Elem> = a.to_vec();
    let mut q = vec![0; a.len().max(1)];
    while let Some(rd) = deg(&r) {
        if rd < bd {
            break;
        }
        let c = f.cmul(r[rd], lead_inv);
        q[rd - bd] = c;
        for i in 0..=bd {
            r[rd - bd + i] = f.cadd(r[rd - bd + i], f.cneg(f.cmul(c, b[i])));
        }
    }
    (trim(q), trim(r))
}

pub(crate) fn poly_gcd<F: Coeffs>(f: &F, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while deg(&b).is_some() {
        let (_, r) = poly_divrem(f, &a, &b);
        a = b;
        b = r;
    }
    // normalize monic
    if let Some(d) = deg(&a) {
        let inv = f.cinv(a[d]);
        for c in &mut a {
            *c = f.cmul(*c, inv);
        }
    }
    a
}

fn poly_mulmod<F: Coeffs>(f: &F, a: &[Elem], b: &[Elem], m: &[Elem]) -> Vec<Elem> {
    poly_rem(f, &poly_mul(f, a, b), m)
}

/// a^n mod m by square and multiply.
pub(crate) fn poly_powmod<F: Coeffs>(f: &F, a: &[Elem], mut n: u64, m: &[Elem]) -> Vec<Elem> {
    let mut base = poly_rem(f, a, m);
    let mut acc = vec![1];
    while n > 0 {
        if n & 1 == 1 {
            acc = poly_mulmod(f, &acc, &base, m);
        }
        base = poly_mulmod(f, &base, &base, m);
        n >>= 1;
    }
    acc
}

/// Rabin irreducibility test for a monic polynomial of degree n over a field
/// of size S: f is irreducible iff x^{S^n} = x (mod f) and
/// gcd(x^{S^{n/r}} - x, f) = 1 for every prime r | n.
pub(crate) fn is_irreducible<F: Coeffs>(f: &F, m: &[Elem]) -> bool {
    let n = match deg(m) {
        Some(0) | None => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let s = f.size();
    // frob[j] = x^{S^j} mod m, built by repeated S-th powers
    let x = vec![0, 1];
    let mut frob = poly_rem(f, &x, m);
    let mut powers = vec![frob.clone()];
    for _ in 1..=n {
        frob = poly_powmod(f, &frob, s, m);
        powers.push(frob.clone());
    }
    // x^{S^n} == x
    if trim(powers[n].clone()) != trim(poly_rem(f, &x, m)) {
        return false;
    }
    for r in crate::num::prime_divisors(n as u64) {
        let j = n / r as usize;
        let mut diff = powers[j].clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = f.cadd(diff[1], f.cneg(1));
        let g = poly_gcd(f, &diff, m);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of the given degree:
/// candidate coefficient lists (c_0, ..., c_{n-1}) are compared starting at
/// the constant term, each coefficient as its integer index.
pub(crate) fn smallest_irreducible<F: Coeffs>(f: &F, n: usize) -> Vec<Elem> {
    let s = f.size();
    let total = crate::num::checked_pow(s, n as u32).expect("degree within caps");
    for rank in 0..total {
        // digit order: c_0 is the most significant digit of the rank
        let mut cand = vec![0 as Elem; n + 1];
        cand[n] = 1;
        let mut r = rank;
        for i in (0..n).rev() {
            cand[i] = (r % s) as Elem;
            r /= s;
        }
        if is_irreducible(f, &cand) {
            return cand;
        }
    }
    unreachable!("an irreducible of every degree exists over a finite field");
}

/// Monic polynomial over F_q, constant term first. The coefficient vector
/// keeps exactly degree+1 slots; the zero polynomial is an empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub coeffs: Vec<Elem>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Elem>) -> Self {
        Polynomial {
            coeffs: trim(coeffs),
        }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// x^n - 1 over F_q.
    pub fn x_pow_minus_one(fq: &BaseField, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = fq.neg(1);
        coeffs[n] = 1;
        Polynomial::new(coeffs)
    }

    pub fn degree(&self) -> Option<usize> {
        deg(&self.coeffs)
    }

    pub fn mul(&self, fq: &BaseField, rhs: &Polynomial) -> Polynomial {
        Polynomial {
            coeffs: poly_mul(fq, &self.coeffs, &rhs.coeffs),
        }
    }

    pub fn divrem(&self, fq: &BaseField, rhs: &Polynomial) -> (Polynomial, Polynomial) {
        let (q, r) = poly_divrem(fq, &self.coeffs, &rhs.coeffs);
        (Polynomial { coeffs: q }, Polynomial { coeffs: r })
    }

    pub fn divides(&self, fq: &BaseField, dividend: &Polynomial) -> bool {
        dividend.divrem(fq, self).1.is_zero()
    }

    /// Evaluate at an element of the extension, embedding the coefficients.
    pub fn eval_in_ext(&self, ext: &super::ExtensionField, x: Elem) -> Elem {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = ext.add(ext.mul(acc, x), ext.embed(c));
        }
        acc
    }
}
