//! The cohomology of `X(p,q)` as a free module over the point ring.

pub mod basis;
pub mod element;
pub mod restrict;
pub mod rewrite;

pub use basis::{basis, position, BasisMonomial, Family, Generator, Position, ProjSpace};
pub use element::{coeff_vector, gen_mul, mod_mul, Element, ModuleElement, ZElement};
pub use restrict::{in_tilde_t, mod_fixed, mod_rho, FixedPair, NoneqPoly};
pub use rewrite::{Fault, Rules};
