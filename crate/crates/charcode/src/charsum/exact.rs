//! Exact integer arithmetic in Z[omega] and Z[i] for Jacobi-sum and quartic
//! Gauss-sum decompositions. Everything that feeds a weight table goes
//! through these types; no floating point.

use super::CharsumError;
use crate::num;

/// a + b*omega with omega = (-1 + sqrt(-3))/2, so omega^2 = -(1 + omega).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub const ONE: EisensteinInt = EisensteinInt { a: 1, b: 0 };

    pub fn omega_pow(j: u32) -> EisensteinInt {
        match j % 3 {
            0 => EisensteinInt { a: 1, b: 0 },
            1 => EisensteinInt { a: 0, b: 1 },
            _ => EisensteinInt { a: -1, b: -1 },
        }
    }

    pub fn mul(self, rhs: EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: self.a * rhs.a - self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a - self.b * rhs.b,
        }
    }

    pub fn pow(self, mut n: u32) -> EisensteinInt {
        let mut base = self;
        let mut acc = EisensteinInt::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }

    pub fn conj(self) -> EisensteinInt {
        EisensteinInt {
            a: self.a - self.b,
            b: -self.b,
        }
    }

    /// 2*Re(a + b*omega) = 2a - b, always an integer.
    pub fn two_re(self) -> i64 {
        2 * self.a - self.b
    }

    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }
}

/// m + n*i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussianInt {
    pub m: i64,
    pub n: i64,
}

impl GaussianInt {
    pub const ONE: GaussianInt = GaussianInt { m: 1, n: 0 };

    pub fn i_pow(j: u32) -> GaussianInt {
        match j % 4 {
            0 => GaussianInt { m: 1, n: 0 },
            1 => GaussianInt { m: 0, n: 1 },
            2 => GaussianInt { m: -1, n: 0 },
            _ => GaussianInt { m: 0, n: -1 },
        }
    }

    pub fn mul(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt {
            m: self.m * rhs.m - self.n * rhs.n,
            n: self.m * rhs.n + self.n * rhs.m,
        }
    }

    pub fn pow(self, mut n: u32) -> GaussianInt {
        let mut base = self;
        let mut acc = GaussianInt::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }

    pub fn conj(self) -> GaussianInt {
        GaussianInt {
            m: self.m,
            n: -self.n,
        }
    }

    pub fn two_re(self) -> i64 {
        2 * self.m
    }

    pub fn norm(self) -> i64 {
        self.m * self.m + self.n * self.n
    }
}

/// The pair (A, B) of 4q = A^2 + 27B^2 with A = 1 (mod 3); A is unique, B
/// is normalized to B >= 0 (the weight multisets are invariant under the
/// sign of B).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicAB {
    pub big_a: i64,
    pub big_b: i64,
}

impl CubicAB {
    pub fn from_jacobi(q: u64, j: EisensteinInt) -> CubicAB {
        let big_a = 2 * j.a - j.b;
        assert_eq!(j.b % 3, 0, "Jacobi b-part is 0 mod 3");
        let big_b = (j.b / 3).abs();
        let out = CubicAB { big_a, big_b };
        assert_eq!(
            out.big_a * out.big_a + 27 * out.big_b * out.big_b,
            4 * q as i64,
            "4q = A^2 + 27B^2"
        );
        assert_eq!(out.big_a.rem_euclid(3), 1, "A = 1 (mod 3)");
        out
    }
}

/// q = m^2 + n^2 with m odd, n even, m > 0, n >= 0, chosen as the power of
/// the Gaussian decomposition of p itself so that (m + ni)^2 matches the
/// fourth power of the quartic Gauss sum up to conjugation.
pub fn quartic_decompose(q: u64) -> Result<GaussianInt, CharsumError> {
    let (p, e) = num::prime_power(q).ok_or(CharsumError::NotPrimePower(q))?;
    if q % 4 != 1 {
        return Err(CharsumError::NotOneModFour(q));
    }
    let pi = if p % 4 == 3 {
        // p inert in Z[i]; e is even because q = 1 (mod 4)
        GaussianInt {
            m: num::checked_pow(p, e / 2).unwrap() as i64,
            n: 0,
        }
    } else {
        let root = decompose_prime(p);
        root.pow(e)
    };
    let mut pi = pi;
    if pi.m < 0 {
        pi = GaussianInt { m: -pi.m, n: -pi.n };
    }
    if pi.n < 0 {
        pi = pi.conj();
    }
    assert_eq!(pi.norm(), q as i64);
    assert_eq!(pi.m.rem_euclid(2), 1, "m odd");
    assert_eq!(pi.n.rem_euclid(2), 0, "n even");
    Ok(pi)
}

/// Unique (up to signs) m^2 + n^2 = p with m odd for a prime p = 1 (mod 4).
fn decompose_prime(p: u64) -> GaussianInt {
    let mut m = 1i64;
    while (m * m) as u64 <= p {
        let rest = p - (m * m) as u64;
        let n = (rest as f64).sqrt().round() as i64;
        if n * n == rest as i64 && n % 2 == 0 {
            return GaussianInt { m, n };
        }
        m += 2;
    }
    unreachable!("every prime 1 mod 4 is a sum of two squares");
}
