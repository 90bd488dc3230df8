//! Exact computations with modules over Smith algebras that are free over
//! the polynomial subalgebra `k[h]`.
//!
//! The Smith algebra `S(g)` is generated by `x`, `y`, `h` subject to
//! `[h,y] = y`, `[h,x] = -x` and `[y,x] = g(h)`. Everything here works over
//! the rationals with exact arithmetic:
//!
//! * [`exactpoly`]: rationals and dense univariate polynomials.
//! * [`rootorder`]: root multisets and the integer-step order on them.
//! * [`smith`]: the algebra data, `g <-> u`, central characters and the
//!   dimensions of the finite-dimensional simples `L(lambda)`.
//! * [`rankone`]: the rank-one modules `A_C(X)`, their submodule lattices,
//!   composition series, socles and Grothendieck-group classes.
//! * [`rankn`]: exponential modules realised through the Weyl algebra and
//!   their action matrices.
//! * [`oracle`]: slow definition-level checkers used to cross-validate the
//!   fast paths.

pub mod error;
pub mod exactpoly;
pub mod oracle;
pub mod rankn;
pub mod rankone;
pub mod rootorder;
pub mod serial;
pub mod smith;

pub use error::{Error, Result};
pub use exactpoly::{parse_rational, Degree, Poly, Rational};
pub use rankn::{ExpModule, PolyMatrix, WeylElement};
pub use rankone::{CompositionSeries, K0Decomposition, MinimalElement, RankOneModule};
pub use rootorder::RootMultiset;
pub use smith::{CentralCharacterData, SmithAlgebra};
