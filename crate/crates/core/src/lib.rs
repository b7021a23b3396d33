//! Exact filter integrals `integral ((A_n(x) - A_n(0)) / x)^2 w(x) dx` for the
//! classical orthogonal polynomial families, with independent routes that
//! cross-check every value.

pub mod error;
pub mod exactnum;
pub mod gegx;
pub mod integrate;
pub mod orthopoly;
pub mod par;
pub mod polyring;
pub mod quadrature;
pub mod report;

pub use error::{Error, Result};
pub use exactnum::Rational;
pub use integrate::{closed_form, filter_integral};
pub use orthopoly::{ConstantTag, Family, FamilyKind, GegenbauerParam, IntegralValue};
pub use par::Execution;
pub use polyring::Poly;
pub use report::{CheckEntry, Verdict, VerificationReport};
