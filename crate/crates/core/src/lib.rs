//! Exact knot invariants for twisted torus knots built as braid closures.
//!
//! The crate constructs T(p, q) and T(p, q; r, s) as braid words and computes
//! two independent certificates for them:
//!
//! - the Alexander polynomial, from the reduced Burau representation with a
//!   fraction-free determinant ([`burau`]);
//! - the Jones polynomial, from a Kauffman-bracket transfer over the
//!   Temperley–Lieb basis of noncrossing matchings ([`temperley_lieb`]).
//!
//! Closed forms for torus knots and the algebra of connected sums and
//! mirrors live in [`knot_expr`]. The [`family`] module instantiates the
//! composite family
//!
//! ```text
//! T((a+1)(k1+k2)+1, a(k1+k2)+1; (a+1)(k1+k2)+1-k1, -1)
//!     = T(k1, a*k1+1) # T(k2, -(a+1)*k2-1)
//! ```
//!
//! and compares both sides invariant by invariant. Polynomial invariants are
//! not complete, so a passing comparison means "consistent with", never
//! "proven equal".
//!
//! ```
//! use ttknot::family::{family_verify, FamilyParams, Level, Verdict, VerifyOptions};
//!
//! let fp = FamilyParams::new(1, 2, 2).unwrap();
//! let report = family_verify(fp, VerifyOptions::at(Level::Standard)).unwrap();
//! assert_eq!(report.lhs, "TT(9,5,7,-1)");
//! assert_eq!(report.verdict, Verdict::VerifiedAtLevel);
//! ```

pub mod braid;
pub mod burau;
pub mod cli;
pub mod error;
pub mod family;
pub mod knot_expr;
pub mod laurent;
pub mod selftest;
pub mod temperley_lieb;

pub use braid::{torus_braid, twisted_torus_braid, BraidWord, PdCode, TwistedTorusParams};
pub use burau::{alexander_from_braid, alexander_span, knot_determinant};
pub use error::{Error, Result};
pub use family::{FamilyParams, Level, VerificationReport, Verdict, VerifyOptions};
pub use knot_expr::KnotExpr;
pub use laurent::LaurentPoly;
pub use temperley_lieb::{jones_from_braid, kauffman_bracket, DEFAULT_MAX_STRANDS};
