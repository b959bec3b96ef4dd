//! Exact computations with finite-dimensional Rota-Baxter Leibniz algebras:
//! axiom checks, induced brackets, representations, the Leibniz, Rota-Baxter
//! operator and combined cochain complexes, truncated deformations and
//! abelian extensions. All arithmetic is over the rationals.

pub mod algebra;
pub mod cohomology;
pub mod deform;
pub mod error;
pub mod extension;
pub mod io;
pub mod linalg;
pub mod par;
pub mod repr;
pub mod samples;
pub mod violation;

pub use algebra::{BilinearMap, LeibnizAlgebra, LinearOperator, RBLeibnizAlgebra};
pub use cohomology::{Cochain, CochainSpace, ComplexKind};
pub use error::{Error, Result};
pub use linalg::{RatMatrix, RatVector, Rational};
pub use repr::Representation;
pub use violation::{Law, Violation};
