//! Construction of the cyclic code c(a,b), exhaustive weight distributions,
//! minimum distance, the Griesmer sum, the minimum-distance lower bound and
//! a dual-distance probe on the generator matrix.

use crate::field::{BaseField, Elem, ExtensionField, FieldError, FiniteField};
use crate::num;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::sync::Arc;

/// Cap on q^(k+1) * n for exhaustive enumeration.
pub const BRUTE_CAP: u128 = 1_000_000_000;
/// Cap on n for the dual-distance probe (the pair scan is O(n^2 * q)).
pub const DUAL_PROBE_CAP: u64 = 5000;
/// Above this length the weight-3 search samples instead of scanning all
/// column pairs.
pub const DUAL_EXHAUSTIVE_CAP: u64 = 300;
const DUAL_SAMPLES: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    NonPrime(u64),
    TooLarge { what: String, cap: u64 },
    GcdE2Violation { cofactor: u64, e2: u64, g: u64 },
    GcdE1E2Violation { g: u64 },
    BadParameter(String),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::NonPrime(p) => write!(f, "p = {p} is not prime"),
            SpecError::TooLarge { what, cap } => write!(f, "{what} exceeds the cap {cap}"),
            SpecError::GcdE2Violation { cofactor, e2, g } => write!(
                f,
                "gcd((q^k-1)/(q-1), e2) = gcd({cofactor}, {e2}) = {g} != 1"
            ),
            SpecError::GcdE1E2Violation { g } => {
                write!(f, "gcd(q-1, e1, e2) = {g} != 1")
            }
            SpecError::BadParameter(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for SpecError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    TooLarge {
        what: String,
        cap: u128,
    },
    ZeroCode,
    MomentMismatch {
        which: &'static str,
        expected: u128,
        got: u128,
    },
    Field(FieldError),
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::TooLarge { what, cap } => write!(f, "{what} exceeds the cap {cap}"),
            CodeError::ZeroCode => write!(f, "distribution has no nonzero weight"),
            CodeError::MomentMismatch {
                which,
                expected,
                got,
            } => write!(f, "Pless moment {which}: expected {expected}, got {got}"),
            CodeError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CodeError {}

impl From<FieldError> for CodeError {
    fn from(e: FieldError) -> Self {
        CodeError::Field(e)
    }
}

/// Validated parameter bundle (p, e, k, e1, e2) with the derived length,
/// dimension and d = gcd(q-1, k*e1 - e2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub p: u64,
    pub e: u32,
    pub k: u32,
    pub e1: u64,
    pub e2: u64,
    pub q: u64,
    pub n: u64,
    pub dim: u32,
    pub d: u64,
}

/// Checks the standing assumptions and derives (q, n, dim, d).
pub fn validate_spec(p: u64, e: u32, k: u32, e1: u64, e2: u64) -> Result<CodeSpec, SpecError> {
    if !num::is_prime(p) {
        return Err(SpecError::NonPrime(p));
    }
    if e < 1 || k < 2 || e1 < 1 || e2 < 1 {
        return Err(SpecError::BadParameter(
            "need e >= 1, k >= 2, e1 >= 1, e2 >= 1".into(),
        ));
    }
    let q = num::checked_pow(p, e)
        .filter(|&q| q <= crate::field::BASE_ORDER_CAP)
        .ok_or(SpecError::TooLarge {
            what: format!("q = {p}^{e}"),
            cap: crate::field::BASE_ORDER_CAP,
        })?;
    let qk = num::checked_pow(q, k)
        .filter(|&n| n <= crate::field::EXT_ORDER_CAP)
        .ok_or(SpecError::TooLarge {
            what: format!("q^k = {q}^{k}"),
            cap: crate::field::EXT_ORDER_CAP,
        })?;

    let cofactor = (qk - 1) / (q - 1);
    let g2 = num::gcd(cofactor, e2);
    if g2 != 1 {
        return Err(SpecError::GcdE2Violation {
            cofactor,
            e2,
            g: g2,
        });
    }
    let g12 = num::gcd(q - 1, num::gcd(e1, e2));
    if g12 != 1 {
        return Err(SpecError::GcdE1E2Violation { g: g12 });
    }
    let diff = (k as i128 * e1 as i128 - e2 as i128).rem_euclid((q - 1) as i128) as u64;
    let d = num::gcd(q - 1, diff);
    // derivable from the two gcd conditions; asserted, not assumed
    assert_eq!(num::gcd(k as u64, d), 1, "gcd(k, d) = 1");

    Ok(CodeSpec {
        p,
        e,
        k,
        e1,
        e2,
        q,
        n: qk - 1,
        dim: k + 1,
        d,
    })
}

/// Exact weight -> frequency table for the whole code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    entries: Vec<(u64, u64)>,
}

impl WeightDistribution {
    pub fn from_entries(mut entries: Vec<(u64, u64)>) -> Self {
        entries.retain(|&(_, c)| c != 0);
        entries.sort_unstable();
        WeightDistribution { entries }
    }

    pub fn from_histogram(hist: &[u64]) -> Self {
        WeightDistribution::from_entries(
            hist.iter()
                .enumerate()
                .map(|(w, &c)| (w as u64, c))
                .collect(),
        )
    }

    /// Sorted (weight, frequency) pairs, zero weight included.
    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn frequency(&self, w: u64) -> u64 {
        self.entries
            .binary_search_by_key(&w, |&(wt, _)| wt)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn total_codewords(&self) -> u128 {
        self.entries.iter().map(|&(_, c)| c as u128).sum()
    }

    /// Smallest nonzero weight present.
    pub fn min_distance(&self) -> Result<u64, CodeError> {
        self.entries
            .iter()
            .find(|&&(w, _)| w > 0)
            .map(|&(w, _)| w)
            .ok_or(CodeError::ZeroCode)
    }

    pub fn nonzero_weight_count(&self) -> usize {
        self.entries.iter().filter(|&&(w, _)| w > 0).count()
    }

    /// "1+189z^47+63z^48+3z^63" style enumerator string.
    pub fn enumerator(&self) -> String {
        let mut s = String::new();
        for &(w, c) in &self.entries {
            if w == 0 {
                s.push_str(&c.to_string());
            } else {
                if !s.is_empty() {
                    s.push('+');
                }
                s.push_str(&format!("{c}z^{w}"));
            }
        }
        s
    }
}

/// Verdict of the dual-distance probe. `GreaterThanThree` means no
/// weight-3 dual word was found; when the search was sampled rather than
/// exhaustive it is a "not found" marker, not a proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualDistance {
    Two,
    Three,
    GreaterThanThree,
}

impl fmt::Display for DualDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualDistance::Two => write!(f, "2"),
            DualDistance::Three => write!(f, "3"),
            DualDistance::GreaterThanThree => write!(f, ">3"),
        }
    }
}

impl Serialize for DualDistance {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            DualDistance::Two => ser.serialize_u64(2),
            DualDistance::Three => ser.serialize_u64(3),
            DualDistance::GreaterThanThree => ser.serialize_str(">3"),
        }
    }
}

impl<'de> Deserialize<'de> for DualDistance {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(de)?;
        match v {
            serde_json::Value::Number(n) if n.as_u64() == Some(2) => Ok(DualDistance::Two),
            serde_json::Value::Number(n) if n.as_u64() == Some(3) => Ok(DualDistance::Three),
            serde_json::Value::String(s) if s == ">3" => Ok(DualDistance::GreaterThanThree),
            other => Err(D::Error::custom(format!("bad dual distance {other}"))),
        }
    }
}

/// A built code: validated spec plus the field tower. Cheap to clone and
/// share; all tables are immutable.
#[derive(Debug, Clone)]
pub struct Code {
    spec: CodeSpec,
    ext: Arc<ExtensionField>,
}

impl Code {
    pub fn new(spec: CodeSpec) -> Result<Self, CodeError> {
        let base = BaseField::new(spec.p, spec.e)?;
        let ext = Arc::new(ExtensionField::new(base, spec.k)?);
        Ok(Code { spec, ext })
    }

    /// Reuse an already-built tower (it depends only on (p, e, k)).
    pub fn with_field(spec: CodeSpec, ext: Arc<ExtensionField>) -> Result<Self, CodeError> {
        assert_eq!(ext.base().p(), spec.p);
        assert_eq!(ext.base().extension_degree(), spec.e);
        assert_eq!(ext.k(), spec.k);
        Ok(Code { spec, ext })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn ext(&self) -> &ExtensionField {
        &self.ext
    }

    pub fn ext_arc(&self) -> Arc<ExtensionField> {
        Arc::clone(&self.ext)
    }

    pub fn base(&self) -> &BaseField {
        self.ext.base()
    }

    /// c(a,b) with coordinate i = a*delta^(e1*i) + Tr(b*gamma^(e2*i)).
    pub fn build_codeword(&self, a: Elem, b: Elem) -> Vec<Elem> {
        let base = self.base();
        let units = base.order() - 1;
        let n = self.spec.n;
        let e1r = self.spec.e1 % units;
        let e2r = self.spec.e2 % n;
        let la = if a == 0 { 0 } else { base.dlog(a).unwrap() };
        let lb = if b == 0 { 0 } else { self.ext.dlog(b).unwrap() };
        let mut out = Vec::with_capacity(n as usize);
        let mut td = 0u64;
        let mut te = lb;
        for _ in 0..n {
            let left = if a == 0 { 0 } else { base.exp(la + td) };
            let right = if b == 0 {
                0
            } else {
                self.ext.trace_of_power(te)
            };
            out.push(base.add(left, right));
            td += e1r;
            if td >= units {
                td -= units;
            }
            te += e2r;
            if te >= n {
                te -= n;
            }
        }
        out
    }

    pub fn weight(&self, cw: &[Elem]) -> u64 {
        cw.iter().filter(|&&c| c != 0).count() as u64
    }

    /// h(x) = h_{(q^k-1)e1/(q-1)}(x) * h_{e2}(x), the degree-(k+1)
    /// parity-check polynomial; divides x^n - 1.
    pub fn parity_check_polynomial(&self) -> crate::field::Polynomial {
        let m = self.ext.norm_exponent();
        let a1 = (m as u128 * self.spec.e1 as u128 % self.spec.n as u128) as u64;
        let h1 = self.ext.minimal_polynomial(a1);
        let h2 = self.ext.minimal_polynomial(self.spec.e2);
        let h = h1.mul(self.base(), &h2);
        assert_eq!(
            h.degree(),
            Some(self.spec.k as usize + 1),
            "parity-check polynomial has degree k + 1"
        );
        h
    }

    /// Exhaustive weight distribution over all (a, b). The outer loop over b
    /// precomputes the trace row once, then every a is charged O(1) via a
    /// residue histogram; the b-range is split across `threads` workers with
    /// private histograms merged at the end.
    pub fn weight_distribution_brute(
        &self,
        threads: usize,
    ) -> Result<WeightDistribution, CodeError> {
        let spec = &self.spec;
        let cost = spec.q as u128 * (spec.n as u128 + 1) * spec.n as u128;
        if cost > BRUTE_CAP {
            return Err(CodeError::TooLarge {
                what: format!("q^(k+1) * n = {cost}"),
                cap: BRUTE_CAP,
            });
        }
        let base = self.base();
        let q = base.order();
        let units = q - 1;
        let n = spec.n;
        let e1r = spec.e1 % units;
        let e2r = spec.e2 % n;

        // dlog of -v for each nonzero v in F_q
        let neglog: Vec<u64> = (0..q as Elem)
            .map(|v| {
                if v == 0 {
                    0
                } else {
                    base.dlog(base.neg(v)).unwrap()
                }
            })
            .collect();

        let worker = |lb_from: u64, lb_to: u64| -> Vec<u64> {
            let mut wh = vec![0u64; n as usize + 1];
            let mut hist = vec![0u64; units as usize];
            for lb in lb_from..lb_to {
                hist.fill(0);
                let mut zero_t = 0u64;
                let mut td = 0u64;
                let mut te = lb;
                for _ in 0..n {
                    let v = self.ext.trace_of_power(te);
                    if v == 0 {
                        zero_t += 1;
                    } else {
                        let mut r = neglog[v as usize] + units - td;
                        if r >= units {
                            r -= units;
                        }
                        hist[r as usize] += 1;
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
                // a = 0 then a = delta^la
                wh[(n - zero_t) as usize] += 1;
                for la in 0..units as usize {
                    wh[(n - hist[la]) as usize] += 1;
                }
            }
            wh
        };

        let threads = threads.clamp(1, n.max(1) as usize);
        let mut wh = if threads == 1 {
            worker(0, n)
        } else {
            let chunk = n.div_ceil(threads as u64);
            let mut merged = vec![0u64; n as usize + 1];
            std::thread::scope(|scope| {
                let mut handles = Vec::new();
                for t in 0..threads as u64 {
                    let from = t * chunk;
                    let to = ((t + 1) * chunk).min(n);
                    if from >= to {
                        break;
                    }
                    handles.push(scope.spawn(move || worker(from, to)));
                }
                for h in handles {
                    for (m, v) in merged.iter_mut().zip(h.join().expect("worker")) {
                        *m += v;
                    }
                }
            });
            merged
        };

        // b = 0 column: the zero word and the q-1 full-weight words
        wh[0] += 1;
        wh[n as usize] += units;

        let dist = WeightDistribution::from_histogram(&wh);
        debug_assert_eq!(dist.total_codewords(), (q as u128).pow(spec.k + 1));
        Ok(dist)
    }

    /// Lower bound q^(k-1)(q-1) - 1 - (d-1)q^((k-1)/2) on the minimum
    /// distance, floored when k is even.
    pub fn min_distance_lower_bound(&self) -> i64 {
        min_distance_lower_bound(&self.spec)
    }

    /// Builds the (k+1) x n generator matrix over F_q and classifies the
    /// dual minimum distance as 2, 3 or ">3". Column pairs are scanned
    /// exhaustively for n <= 300 and sampled (fixed seed) above that.
    pub fn dual_distance_probe(&self) -> Result<DualDistance, CodeError> {
        let n = self.spec.n;
        if n > DUAL_PROBE_CAP {
            return Err(CodeError::TooLarge {
                what: format!("n = {n} for the dual probe"),
                cap: DUAL_PROBE_CAP as u128,
            });
        }
        let cols = self.generator_columns();
        Ok(probe_columns(
            self.base(),
            &cols,
            DUAL_EXHAUSTIVE_CAP,
            DUAL_SAMPLES,
        ))
    }

    /// Columns (delta^(e1 i), Tr(beta_j gamma^(e2 i)))_j over the polynomial
    /// basis beta_j = x^j of the extension modulus.
    fn generator_columns(&self) -> Vec<Vec<Elem>> {
        let base = self.base();
        let q = base.order();
        let units = q - 1;
        let n = self.spec.n;
        let k = self.spec.k;
        let e1r = self.spec.e1 % units;
        let e2r = self.spec.e2 % n;
        let lbeta: Vec<u64> = (0..k)
            .map(|j| {
                let beta = num::checked_pow(q, j).unwrap() as Elem;
                self.ext.dlog(beta).unwrap()
            })
            .collect();
        let mut cols = Vec::with_capacity(n as usize);
        let mut td = 0u64;
        for i in 0..n {
            let mut col = Vec::with_capacity(k as usize + 1);
            col.push(base.exp(td));
            for &lb in &lbeta {
                col.push(self.ext.trace_of_power(lb + e2r * i));
            }
            cols.push(col);
            td += e1r;
            if td >= units {
                td -= units;
            }
        }
        cols
    }
}

/// Sum_{i=0}^{l-1} ceil(h / q^i), the Griesmer bound on the length of an
/// [n, l, h] code.
pub fn griesmer_sum(l: u32, h: u64, q: u64) -> u64 {
    (0..l)
        .map(|i| {
            let qi = num::checked_pow(q, i).expect("dimension within caps");
            h.div_ceil(qi)
        })
        .sum()
}

pub fn is_griesmer_optimal(spec: &CodeSpec, h: u64) -> bool {
    griesmer_sum(spec.dim, h, spec.q) == spec.n
}

pub fn min_distance_lower_bound(spec: &CodeSpec) -> i64 {
    let qf = spec.q as f64;
    let bound = qf.powi(spec.k as i32 - 1) * (qf - 1.0)
        - 1.0
        - (spec.d - 1) as f64 * qf.powf((spec.k as f64 - 1.0) / 2.0);
    bound.floor() as i64
}

/// First two Pless power moments: sum A_w = q^(k+1) and
/// sum w*A_w = n(q-1)q^k (every coordinate functional is onto).
pub fn pless_moment_check(spec: &CodeSpec, dist: &WeightDistribution) -> Result<(), CodeError> {
    let total = dist.total_codewords();
    let expect0 = (spec.q as u128).pow(spec.k + 1);
    if total != expect0 {
        return Err(CodeError::MomentMismatch {
            which: "sum A_w",
            expected: expect0,
            got: total,
        });
    }
    let first: u128 = dist
        .entries()
        .iter()
        .map(|&(w, c)| w as u128 * c as u128)
        .sum();
    let expect1 = spec.n as u128 * (spec.q as u128 - 1) * (spec.q as u128).pow(spec.k);
    if first != expect1 {
        return Err(CodeError::MomentMismatch {
            which: "sum w*A_w",
            expected: expect1,
            got: first,
        });
    }
    Ok(())
}

/// Dual-distance classification of an explicit column set; exposed for
/// fixture tests. Columns must have no zero column.
pub fn probe_columns(
    base: &BaseField,
    cols: &[Vec<Elem>],
    exhaustive_cap: u64,
    samples: u64,
) -> DualDistance {
    let q = base.order();
    let n = cols.len();
    let normalize = |col: &[Elem]| -> Vec<Elem> {
        let lead = col
            .iter()
            .copied()
            .find(|&c| c != 0)
            .expect("no zero column");
        let scale = base.inv(lead).unwrap();
        col.iter().map(|&c| base.mul(scale, c)).collect()
    };
    let ncols: Vec<Vec<Elem>> = cols.iter().map(|c| normalize(c)).collect();

    let mut index = std::collections::HashMap::new();
    for (i, c) in ncols.iter().enumerate() {
        if index.insert(c.clone(), i).is_some() {
            return DualDistance::Two;
        }
    }

    let combo_hits = |i: usize, j: usize, lam: Elem| -> bool {
        let v: Vec<Elem> = ncols[i]
            .iter()
            .zip(&ncols[j])
            .map(|(&a, &b)| base.add(a, base.mul(lam, b)))
            .collect();
        if v.iter().all(|&c| c == 0) {
            return false; // proportional columns, already ruled out
        }
        let vn = normalize(&v);
        matches!(index.get(&vn), Some(&m) if m != i && m != j)
    };

    if (n as u64) <= exhaustive_cap {
        for i in 0..n {
            for j in i + 1..n {
                for lam in 1..q as Elem {
                    if combo_hits(i, j, lam) {
                        return DualDistance::Three;
                    }
                }
            }
        }
    } else {
        // fixed seed: probe results are reproducible run to run
        let mut st = 0x5eed_0fc0_de70_0131u64;
        for _ in 0..samples {
            let i = (num::xorshift64(&mut st) % n as u64) as usize;
            let j = (num::xorshift64(&mut st) % n as u64) as usize;
            if i == j {
                continue;
            }
            let lam = 1 + (num::xorshift64(&mut st) % (q - 1)) as Elem;
            if combo_hits(i, j, lam) {
                return DualDistance::Three;
            }
        }
    }
    DualDistance::GreaterThanThree
}
