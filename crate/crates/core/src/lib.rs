//! Nontrivial p-adic zeros of a system made of one cubic and one quadratic
//! form over an unramified extension of `Q_p`.

pub mod ff;
pub mod format;
pub mod forms;
pub mod hensel;
pub mod linalg;
pub mod minimize;
pub mod oracles;
pub mod padic;
pub mod pipeline;
pub mod poly;
pub mod residue;
pub mod scalar;

pub use ff::{Fq, FqField};
pub use format::SystemFile;
pub use forms::{Form, FqForm, Poly};
pub use hensel::{lift, LiftResult};
pub use minimize::{reduce_fully, HCertificate, Reduction};
pub use oracles::{count_affine_zeros, CountReport, Lemma};
pub use padic::{PadicForm, PadicInt, PadicRing, PadicSystem};
pub use pipeline::{solve, Solution, SolveOptions, SolveReport};
pub use residue::{solve_residue, ResidueSolution};
pub use scalar::Scalar;

pub type RationalForm = Form<num_rational::BigRational>;
