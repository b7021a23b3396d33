use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Polynomial division left a remainder where an exact quotient was claimed.
    #[error("polynomial division left a nonzero remainder of degree {remainder_degree}")]
    NonZeroRemainder { remainder_degree: isize },

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    /// A Sturm count endpoint is itself a root; the caller must perturb it.
    #[error("interval endpoint {0} is a root of the polynomial")]
    BoundaryRoot(Box<Rational>),

    #[error("empty interval: lower endpoint {lo} is not below upper endpoint {hi}")]
    EmptyInterval { lo: Box<Rational>, hi: Box<Rational> },

    #[error("denominator {denominator} is not invertible modulo {modulus}")]
    DenominatorNotInvertible { denominator: String, modulus: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot combine integral values tagged {left} and {right}")]
    MixedConstantTags {
        left: &'static str,
        right: &'static str,
    },

    #[error("Newton iteration for node {node} of the {order}-point {family} rule did not converge")]
    ConvergenceFailure {
        family: String,
        order: usize,
        node: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
