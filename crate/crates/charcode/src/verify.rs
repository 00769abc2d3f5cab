//! The runtime verification suite behind `charcode verify`: character-sum
//! identities, the reference codes, parameter sweeps and dual-distance
//! probes, each reported as a named pass/fail line.

use crate::charsum::{
    additive_char, approx_eq, cubic_ab, gauss_quadratic_exact, gauss_sum, jacobi_cubic, mult_char,
    quartic_decompose, t_sum_closed_form, t_sum_exact, tol, unit_root, CharSpec,
};
use crate::code::{is_griesmer_optimal, pless_moment_check, validate_spec, Code, DualDistance};
use crate::field::{BaseField, Elem, ExtensionField, FiniteField};
use crate::num;
use crate::registry::REFERENCE_CODES;
use crate::theory;
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

fn gf(p: u64, e: u32) -> BaseField {
    BaseField::new(p, e).expect("suite field within caps")
}

/// Character-sum identity suite over small fields.
pub fn property_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let fields: Vec<(u64, u32)> = vec![(2, 2), (5, 1), (7, 1), (3, 2), (13, 1)];

    // orthogonality relations
    for &(p, e) in &fields {
        let f = gf(p, e);
        let q = f.order();
        let t = tol((q as f64).sqrt());
        let mut ok = true;
        for a in f.elements() {
            let s: Complex64 = f.elements().map(|x| additive_char(&f, f.mul(a, x))).sum();
            let expect = if a == 0 { q as f64 } else { 0.0 };
            ok &= approx_eq(s, Complex64::new(expect, 0.0), t);
        }
        for order in num::prime_divisors(q - 1).into_iter().chain([1, q - 1]) {
            let chi = CharSpec::of_order(&f, order).unwrap();
            let s: Complex64 = (1..q as Elem).map(|x| mult_char(&f, chi, x)).sum();
            let expect = if chi.is_trivial() {
                (q - 1) as f64
            } else {
                0.0
            };
            ok &= approx_eq(s, Complex64::new(expect, 0.0), t);
        }
        out.push(check(
            format!("orthogonality q={q}"),
            ok,
            "additive and multiplicative character sums",
        ));
    }

    // |G(psi,chi)|^2 = q for every nontrivial psi
    for &(p, e) in &fields {
        let f = gf(p, e);
        let q = f.order();
        let t = tol(q as f64);
        let ok = (1..q - 1).all(|power| {
            let g = gauss_sum(
                &f,
                CharSpec {
                    order: q - 1,
                    power,
                },
            );
            (g.norm_sqr() - q as f64).abs() < t
        });
        out.push(check(format!("gauss-modulus q={q}"), ok, "|G|^2 = q"));
    }

    // quadratic Gauss sum exact form vs numeric evaluation
    for (p, e) in [(3u64, 1u32), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2)] {
        let f = gf(p, e);
        let exact = gauss_quadratic_exact(p, e).unwrap();
        let numeric = gauss_sum(&f, CharSpec::of_order(&f, 2).unwrap());
        let ok = approx_eq(numeric, exact.value(), tol((f.order() as f64).sqrt()));
        out.push(check(
            format!("quadratic-gauss p={p} e={e}"),
            ok,
            format!("exact form {exact}"),
        ));
    }

    // cubic: G^3 = q J and the Z[omega] congruences
    for q in [4u64, 7, 13, 19] {
        let (p, e) = num::prime_power(q).unwrap();
        let f = gf(p, e);
        let j = jacobi_cubic(&f).unwrap();
        let jc =
            Complex64::new(j.a as f64, 0.0) + Complex64::new(j.b as f64, 0.0) * unit_root(1, 3);
        let g = gauss_sum(&f, CharSpec::of_order(&f, 3).unwrap());
        let ok = approx_eq(g.powu(3), jc * q as f64, tol((q as f64).powf(1.5)));
        out.push(check(format!("cubic-gauss q={q}"), ok, "G^3 = qJ"));

        let ab = cubic_ab(q).unwrap();
        let ok = j.a.rem_euclid(3) == 2
            && j.b.rem_euclid(3) == 0
            && ab.big_a.rem_euclid(3) == 1
            && ab.big_a * ab.big_a + 27 * ab.big_b * ab.big_b == 4 * q as i64;
        out.push(check(
            format!("cubic-decomposition q={q}"),
            ok,
            format!("J = {}{:+}w, A={}, B={}", j.a, j.b, ab.big_a, ab.big_b),
        ));
    }

    // Davenport-Hasse on two tower instances
    for (p, e, k) in [(2u64, 2u32, 3u32), (3, 1, 3)] {
        let base = gf(p, e);
        let ext = ExtensionField::new(base.clone(), k).unwrap();
        let t = tol((ext.order() as f64).sqrt() * base.order() as f64);
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let ok = (1..base.order() - 1).all(|power| {
            let chi = CharSpec {
                order: base.order() - 1,
                power,
            };
            approx_eq(
                gauss_sum(&ext, chi),
                gauss_sum(&base, chi).powu(k) * sign,
                t,
            )
        });
        out.push(check(
            format!("davenport-hasse q={} k={k}", base.order()),
            ok,
            "lifted Gauss sum equals (-1)^(k-1) G^k",
        ));
    }

    // quartic: G^4 = q pi^2 up to conjugation
    for q in [5u64, 9, 13] {
        let (p, e) = num::prime_power(q).unwrap();
        let f = gf(p, e);
        let g4 = gauss_sum(&f, CharSpec::of_order(&f, 4).unwrap()).powu(4);
        let pi = quartic_decompose(q).unwrap();
        let t = tol((q as f64).powi(2));
        let cx = |z: crate::charsum::GaussianInt| Complex64::new(z.m as f64, z.n as f64);
        let ok = (approx_eq(g4, cx(pi.pow(2)) * q as f64, t)
            || approx_eq(g4, cx(pi.conj().pow(2)) * q as f64, t))
            && (g4.norm() / q as f64 - q as f64).abs() < t;
        out.push(check(
            format!("quartic-gauss q={q}"),
            ok,
            format!("pi = {}{:+}i", pi.m, pi.n),
        ));
    }

    // power-sum identity for exponents 2, 3, 4
    {
        let mut st = 0x0dd5_5eedu64;
        let mut ok = true;
        for (p, e) in [(13u64, 1u32), (3, 2)] {
            let f = gf(p, e);
            for n in [2u64, 3, 4] {
                let s = num::gcd(n, f.units());
                let psi = CharSpec::of_order(&f, s).unwrap();
                for _ in 0..5 {
                    let a = 1 + (num::xorshift64(&mut st) % f.units()) as Elem;
                    let b = (num::xorshift64(&mut st) % f.order()) as Elem;
                    let mut lhs = Complex64::new(0.0, 0.0);
                    for x in f.elements() {
                        lhs += additive_char(&f, f.add(f.mul(a, f.pow(x, n)), b));
                    }
                    let mut rhs = Complex64::new(0.0, 0.0);
                    for j in 1..s {
                        rhs += mult_char(&f, psi.conj().pow(j), a) * gauss_sum(&f, psi.pow(j));
                    }
                    rhs *= additive_char(&f, b);
                    ok &= approx_eq(lhs, rhs, tol(f.order() as f64));
                }
            }
        }
        out.push(check(
            "power-sum-identity",
            ok,
            "sum chi(a x^n + b) via Gauss sums, n in {2,3,4}",
        ));
    }

    // T = 1 for every (a, b) pair of the d = 1 code over GF(4), k = 3
    {
        let spec = validate_spec(2, 2, 3, 1, 1).unwrap();
        let code = Code::new(spec.clone()).unwrap();
        let ext = code.ext();
        let mut ok = true;
        for a in 1..spec.q as Elem {
            for lb in 0..spec.n {
                ok &= t_sum_exact(ext, &spec, a, ext.exp(lb)) == 1;
            }
        }
        out.push(check(
            "t-sum-d1",
            ok,
            "T(a,b) = 1 on all unit pairs, q=4 k=3",
        ));
    }

    // closed form vs integer oracle, one spec per d
    for (p, e, k, e1, e2, d) in [
        (2u64, 2u32, 3u32, 1u64, 1u64, 1u64),
        (3, 1, 3, 1, 1, 2),
        (2, 2, 2, 2, 1, 3),
        (5, 1, 3, 1, 3, 4),
    ] {
        let spec = validate_spec(p, e, k, e1, e2).unwrap();
        assert_eq!(spec.d, d);
        let code = Code::new(spec.clone()).unwrap();
        let ext = code.ext();
        let mut ok = true;
        for a in 1..spec.q as Elem {
            for lb in 0..spec.n {
                let b = ext.exp(lb);
                ok &= t_sum_closed_form(ext, &spec, a, b)
                    .map(|v| v == t_sum_exact(ext, &spec, a, b))
                    .unwrap_or(false);
            }
        }
        out.push(check(
            format!("t-sum-closed-form d={d}"),
            ok,
            format!("q={} k={k}, all unit pairs", spec.q),
        ));
    }

    out
}

/// Brute force, closed form and golden enumerator agreement on the
/// reference codes, plus the moment, bound and Griesmer observables.
pub fn reference_suite(threads: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for rc in REFERENCE_CODES {
        let spec = validate_spec(rc.p, rc.e, rc.k, rc.e1, rc.e2).unwrap();
        let code = Code::new(spec.clone()).unwrap();
        match theory::compare(&code, threads) {
            Ok(outcome) => {
                let golden = outcome.brute.entries() == rc.expected;
                out.push(check(
                    format!("reference {}", rc.name),
                    golden,
                    if golden {
                        format!("enumerator {}", outcome.brute.enumerator())
                    } else {
                        format!(
                            "expected {:?}, got {:?}",
                            rc.expected,
                            outcome.brute.entries()
                        )
                    },
                ));

                let h = outcome.brute.min_distance().unwrap();
                let bound = code.min_distance_lower_bound();
                out.push(check(
                    format!("bound {}", rc.name),
                    h as i64 >= bound,
                    format!("min distance {h} >= lower bound {bound}"),
                ));
                let optimal = is_griesmer_optimal(&spec, h);
                out.push(check(
                    format!("griesmer {}", rc.name),
                    if spec.d == 1 { optimal } else { !optimal },
                    if spec.d == 1 {
                        "d=1: Griesmer equality".to_string()
                    } else {
                        "d>1: Griesmer equality must fail".to_string()
                    },
                ));
                let moments = pless_moment_check(&spec, &outcome.brute);
                out.push(check(
                    format!("moments {}", rc.name),
                    moments.is_ok(),
                    "sum A_w and sum w*A_w",
                ));
            }
            Err(e) => out.push(check(
                format!("reference {}", rc.name),
                false,
                e.to_string(),
            )),
        }
    }
    out
}

/// Theory-vs-brute sweep over (e1, e2) in [1, emax]^2 at fixed (p, e, k).
pub fn sweep_suite(p: u64, e: u32, k: u32, emax: u64, threads: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut shared: Option<std::sync::Arc<ExtensionField>> = None;
    let mut skipped = 0u32;
    let mut unsupported = 0u32;
    for e1 in 1..=emax {
        for e2 in 1..=emax {
            let spec = match validate_spec(p, e, k, e1, e2) {
                Ok(s) => s,
                Err(_) => {
                    skipped += 1;
                    continue;
                }
            };
            let ext = match &shared {
                Some(a) => a.clone(),
                None => {
                    let base = BaseField::new(p, e).unwrap();
                    let a = std::sync::Arc::new(ExtensionField::new(base, k).unwrap());
                    shared = Some(a.clone());
                    a
                }
            };
            let code = Code::with_field(spec.clone(), ext).unwrap();
            if spec.d > 4 {
                let err = theory::predict(&code);
                unsupported += 1;
                out.push(check(
                    format!("sweep e1={e1} e2={e2}"),
                    matches!(err, Err(theory::TheoryError::UnsupportedD { .. })),
                    format!("d = {} is out of closed-form range", spec.d),
                ));
                continue;
            }
            let result = theory::compare(&code, threads);
            let name = format!("sweep e1={e1} e2={e2}");
            match result {
                Ok(outcome) => {
                    let h = outcome.brute.min_distance().unwrap();
                    let bound_ok = h as i64 >= code.min_distance_lower_bound();
                    let moments_ok = pless_moment_check(&spec, &outcome.brute).is_ok();
                    let optimal = is_griesmer_optimal(&spec, h);
                    let griesmer_ok = if spec.d == 1 { optimal } else { !optimal };
                    out.push(check(
                        name,
                        bound_ok && moments_ok && griesmer_ok,
                        format!("d={} match, h={h}", spec.d),
                    ));
                }
                Err(err) => out.push(check(name, false, err.to_string())),
            }
        }
    }
    out.push(check(
        format!("sweep q={} k={k} summary", num::checked_pow(p, e).unwrap()),
        true,
        format!("{skipped} invalid pairs skipped, {unsupported} with d > 4"),
    ));
    out
}

/// Dual-distance probes for reference codes with a known answer and a
/// probe-friendly length.
pub fn dual_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for rc in REFERENCE_CODES {
        let Some(expected) = rc.dual_distance else {
            continue;
        };
        let spec = validate_spec(rc.p, rc.e, rc.k, rc.e1, rc.e2).unwrap();
        if spec.n > 3000 {
            continue;
        }
        let code = Code::new(spec).unwrap();
        match code.dual_distance_probe() {
            Ok(d) => {
                let got = match d {
                    DualDistance::Two => 2,
                    DualDistance::Three => 3,
                    DualDistance::GreaterThanThree => u64::MAX,
                };
                out.push(check(
                    format!("dual {}", rc.name),
                    got == expected,
                    format!("probe says {d}, expected {expected}"),
                ));
            }
            Err(e) => out.push(check(format!("dual {}", rc.name), false, e.to_string())),
        }
    }
    out
}

/// Convenience: a suite passes when every line passes.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.pass)
}
