//! Exact scalars, polynomials in `x`, rational functions, and integer matrices.

pub mod linalg;
mod matrix;
mod poly;
mod ratfunc;
mod vandermonde;

pub use matrix::{IntMatrix, SmithForm};
pub use poly::UniPoly;
pub use ratfunc::RatFunc;
pub(crate) use vandermonde::complete_in_kernel;
pub use vandermonde::{moment_matrix, vandermonde_complete, vandermonde_kernel};

use num_bigint::BigInt;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Reduces `f` to a polynomial, failing when its denominator has positive degree.
pub fn ratfunc_to_poly(f: &RatFunc) -> crate::Result<UniPoly> {
    f.to_poly()
}

/// Invariant factors and rank of an integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    m.smith_normal_form()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        num_integer::binomial(n, k)
    }
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}
