//! Cyclic codes c(a,b) indexed by (a, b) in F_q x F_{q^k}, with coordinate
//! a*gamma^(((q^k-1)/(q-1))*e1*i) + Tr(b*gamma^(e2*i)), and their exact
//! weight distributions computed two independent ways: brute-force codeword
//! enumeration and closed forms driven by Gauss/Jacobi sums for
//! d = gcd(q-1, k*e1-e2) in {1, 2, 3, 4}.
//!
//! Layering:
//! - [`field`]: exact GF(p^e) and F_{q^k} tower arithmetic with log tables.
//! - [`charsum`]: characters, Gauss/Jacobi sums, cyclotomic classes and the
//!   exponential sums S, T, Z.
//! - [`code`]: code construction, brute-force weight distribution, Griesmer
//!   and minimum-distance bounds, dual-distance probe.
//! - [`theory`]: closed-form weight distributions and the comparator
//!   against the brute-force oracle.
//! - [`registry`]: built-in reference parameter sets with known
//!   enumerators, used by the CLI verifier and the acceptance suite.

pub mod charsum;
pub mod code;
pub mod field;
pub mod num;
pub mod registry;
pub mod report;
pub mod theory;
pub mod verify;
