//! Exact scalars and sparse exact linear algebra.

pub mod field;
pub mod poly;
pub mod qscalar;
pub mod series;
pub mod solve;
pub mod sparse;
pub mod subspace;

pub use field::{format_rational, parse_rational, rat, ratio, Field, Rational};
pub use poly::Poly;
pub use qscalar::{q_factorial, q_int, QScalar};
pub use series::{series_exp, TruncatedSeries};
pub use solve::{coordinates, determinant, nullspace, rank, solve_linear, Solution};
pub use sparse::{flip, on_leg, permute_legs, SparseMatrix};
pub use subspace::Subspace;

/// Rational matrix.
pub type QMat = SparseMatrix<Rational>;
/// Matrix over the q-rational field.
pub type QqMat = SparseMatrix<QScalar>;

/// Applies a binary field operation by name: `add`, `sub`, `mul` or `div`.
pub fn field_arithmetic<F: Field>(a: &F, b: &F, op: &str) -> crate::Result<F> {
    match op {
        "add" => Ok(a.add(b)),
        "sub" => Ok(a.sub(b)),
        "mul" => Ok(a.mul(b)),
        "div" => a.div(b),
        other => Err(crate::Error::Invalid(format!("unknown operator `{other}`"))),
    }
}
