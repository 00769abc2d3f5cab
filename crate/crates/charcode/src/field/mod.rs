//! Exact arithmetic in GF(p), F_q = GF(p^e) and the tower F_{q^k}.
//!
//! Elements are stored as packed coefficient vectors: an element of GF(p^e)
//! with coefficients (c_0, ..., c_{e-1}) over GF(p), constant term first, is
//! the integer index c_0 + c_1*p + ... + c_{e-1}*p^{e-1}. Extension elements
//! pack their F_q digits base q the same way. Every coefficient slot is
//! always present; only display drops trailing zeros.
//!
//! Both field layers precompute exp/log tables for their designated
//! primitive element at construction, so multiplicative work in hot loops is
//! table lookups.

mod base;
mod ext;
pub mod poly;

pub use base::{BaseField, BASE_ORDER_CAP};
pub use ext::{ExtensionField, EXT_ORDER_CAP};
pub use poly::Polynomial;

use std::fmt;

/// Packed-coefficient element index. `0` is the zero element, `1` is one.
pub type Elem = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NonPrime(u64),
    DegreeTooLarge { requested: u64, cap: u64 },
    ZeroInput,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrime(p) => write!(f, "{p} is not prime"),
            FieldError::DegreeTooLarge { requested, cap } => {
                write!(f, "field of {requested} elements exceeds the cap of {cap}")
            }
            FieldError::ZeroInput => write!(f, "zero has no discrete logarithm or inverse"),
        }
    }
}

impl std::error::Error for FieldError {}

/// Shared surface of the two field layers. All methods are pure and the
/// tables behind them are immutable after construction, so a field may be
/// used from many threads at once.
pub trait FiniteField {
    /// Number of elements.
    fn order(&self) -> u64;
    /// Characteristic p.
    fn characteristic(&self) -> u64;
    /// The designated primitive element (delta resp. gamma).
    fn generator(&self) -> Elem;
    fn add(&self, x: Elem, y: Elem) -> Elem;
    fn neg(&self, x: Elem) -> Elem;
    fn mul(&self, x: Elem, y: Elem) -> Elem;
    /// generator^t, t taken mod (order - 1).
    fn exp(&self, t: u64) -> Elem;
    /// Discrete log base the designated generator.
    fn dlog(&self, x: Elem) -> Result<u64, FieldError>;
    /// Absolute trace down to GF(p), returned as an integer in [0, p).
    fn abs_trace(&self, x: Elem) -> u64;

    fn units(&self) -> u64 {
        self.order() - 1
    }

    fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    fn inv(&self, x: Elem) -> Result<Elem, FieldError> {
        let t = self.dlog(x)?;
        Ok(self.exp((self.units() - t) % self.units()))
    }

    fn pow(&self, x: Elem, n: u64) -> Elem {
        if x == 0 {
            return if n == 0 { 1 } else { 0 };
        }
        let t = self.dlog(x).expect("nonzero");
        self.exp((t as u128 * n as u128 % self.units() as u128) as u64)
    }

    /// Multiplicative order of a nonzero element.
    fn elem_order(&self, x: Elem) -> Result<u64, FieldError> {
        let t = self.dlog(x)?;
        Ok(self.units() / crate::num::gcd(self.units(), t))
    }

    fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order() as Elem
    }
}
