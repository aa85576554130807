//! Exact six-vertex partition functions and factorial Schur functions.
//!
//! The crate computes the partition function `Z_λ(x|a)` of square ice with
//! the λ-boundary condition, the factorial Schur function `s_λ(x|a)`, and
//! checks the identities tying them together, all in exact integer and
//! rational arithmetic:
//!
//! * [`ring`]: Laurent polynomials in `x1..xn`, `a1..am` with big-integer coefficients.
//! * [`shapes`]: partitions, tableaux, Gelfand-Tsetlin patterns, staircases.
//! * [`lattice`]: ice states, Boltzmann weights and `Z_λ`.
//! * [`yangbaxter`]: the star-triangle relation for the diagonal crossing weights.
//! * [`fschur`]: `s_λ`, vanishing at `a_μ`, basis expansion, and `Z_λ a^{(λ+ρ)'} = x^δ s_λ`.

pub mod fschur;
pub mod lattice;
pub mod ring;
pub mod shapes;
pub mod yangbaxter;

pub use ring::{LaurentPoly, Rational, Var, VarSpace};
pub use shapes::Partition;
