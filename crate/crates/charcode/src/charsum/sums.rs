//! The exponential sums S, T and the zero-coordinate count Z that tie the
//! code's Hamming weights to Gauss sums.
//!
//! `z_count` and `t_sum_exact` are the integer oracles everything else is
//! judged against; `t_sum_closed_form` and `s_sum_numeric` are the
//! floating-complex routes used to verify the identities.

use super::{gauss_sum, round_to_integer, tol, unit_root, CharSpec, CharsumError};
use crate::code::CodeSpec;
use crate::field::{Elem, ExtensionField, FiniteField};
use num_complex::Complex64;

/// Z(a,b) = #{ i in [0, q^k-1) : a*delta^(e1*i) + Tr(b*gamma^(e2*i)) = 0 },
/// counted by direct iteration over the coordinate index.
pub fn z_count(ext: &ExtensionField, spec: &CodeSpec, a: Elem, b: Elem) -> u64 {
    let base = ext.base();
    let units = base.order() - 1;
    let n = spec.n;
    let e1r = spec.e1 % units;
    let e2r = spec.e2 % n;
    let la = if a == 0 { 0 } else { base.dlog(a).unwrap() };
    let lb = if b == 0 { 0 } else { ext.dlog(b).unwrap() };

    let mut count = 0u64;
    let mut td = 0u64; // e1*i mod (q-1)
    let mut te = lb; // log of b*gamma^(e2*i)
    for _ in 0..n {
        let left = if a == 0 { 0 } else { base.exp(la + td) };
        let right = if b == 0 { 0 } else { ext.trace_of_power(te) };
        if base.add(left, right) == 0 {
            count += 1;
        }
        td += e1r;
        if td >= units {
            td -= units;
        }
        te += e2r;
        if te >= n {
            te -= n;
        }
    }
    count
}

/// T(a,b) = q*Z(a,b) - (q^k - 1), exact.
pub fn t_sum_exact(ext: &ExtensionField, spec: &CodeSpec, a: Elem, b: Elem) -> i64 {
    let q = ext.base().order();
    (q * z_count(ext, spec, a, b)) as i64 - spec.n as i64
}

/// The Gauss-sum closed form of T(a,b) for a, b both nonzero:
/// (-1)^(k-1) * sum_{i=0}^{d-1} conj(phi)^i(c) G(conj(phi)^(ki), chi) G(phi^i, chi)^k
/// with c = b^((q^k-1)/(q-1)) * a^(-k) and phi of order d. The result is
/// checked to be integral within tolerance and returned rounded.
pub fn t_sum_closed_form(
    ext: &ExtensionField,
    spec: &CodeSpec,
    a: Elem,
    b: Elem,
) -> Result<i64, CharsumError> {
    assert!(a != 0 && b != 0, "closed form covers a, b nonzero");
    let base = ext.base();
    let units = base.order() - 1;
    let d = spec.d;
    let k = spec.k as u64;

    // dlog of c = norm(b) * a^(-k) in F_q
    let lb = ext.dlog(b).unwrap() % units;
    let la = base.dlog(a).unwrap();
    let lc = (lb as i128 - (k as i128) * (la as i128)).rem_euclid(units as i128) as u64;

    let phi = CharSpec { order: d, power: 1 };
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..d {
        // conj(phi)^i at c = delta^lc
        let chr = phi.conj().pow(i);
        let chooser = unit_root(chr.power % d * (lc % d) % d, d);
        let g1 = gauss_sum(base, phi.conj().pow(k % d * (i % d) % d));
        let g2 = gauss_sum(base, phi.pow(i)).powu(spec.k);
        acc += chooser * g1 * g2;
    }
    if spec.k % 2 == 0 {
        acc = -acc;
    }
    let scale = (spec.q as f64).powi(spec.k as i32 + 1).sqrt();
    round_to_integer(acc, tol(scale))
}

/// S(a,b) = sum over nonzero x in F_{q^k} of
/// chi(a * x^(((q^k-1)/(q-1))*e1)) * chi'(b * x^(e2)), by direct summation.
pub fn s_sum_numeric(ext: &ExtensionField, spec: &CodeSpec, a: Elem, b: Elem) -> Complex64 {
    let base = ext.base();
    let units = base.order() - 1;
    let p = base.characteristic();
    let n = spec.n;
    let e1r = spec.e1 % units;
    let e2r = spec.e2 % n;
    let la = if a == 0 { 0 } else { base.dlog(a).unwrap() };
    let lb = if b == 0 { 0 } else { ext.dlog(b).unwrap() };

    let mut acc = Complex64::new(0.0, 0.0);
    let mut td = 0u64;
    let mut te = lb;
    for _ in 0..n {
        let left = if a == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            unit_root(base.abs_trace(base.exp(la + td)), p)
        };
        let right = if b == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            unit_root(base.abs_trace(ext.trace_of_power(te)), p)
        };
        acc += left * right;
        td += e1r;
        if td >= units {
            td -= units;
        }
        te += e2r;
        if te >= n {
            te -= n;
        }
    }
    acc
}
