use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero in Q(sqrt5)")]
    DivisionByZero,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The radical iteration `w -> sqrt(1 + w)` did not reach the disk around φ.
    #[error("argument {re}{im:+}i is outside the domain of g: |w_D - phi| = {distance:e} after {depth} steps")]
    Domain {
        re: f64,
        im: f64,
        distance: f64,
        depth: usize,
    },

    #[error("address {address} failed the primitivity check: |P_n(y)| = {top:e}, min_k<n |P_k(y)| = {lower:e}")]
    NotPrimitive {
        address: String,
        top: f64,
        lower: f64,
    },

    #[error("zero for sigma {sigma} is not simple: |f'(z0)| = {derivative:e}")]
    SimplicityViolation { sigma: String, derivative: f64 },

    #[error("Paris constant routes disagree: g-route {via_g}, zero-route {via_zero}, bisection {via_bisection}")]
    CrossCheck {
        via_g: f64,
        via_zero: f64,
        via_bisection: f64,
    },

    #[error("enumeration needs {needed} nodes, budget is {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
