//! Exact scalar tower: integers, rationals, cyclotomic numbers, Laurent
//! polynomials over any of them and fractions of those.

mod cyclo;
mod laurent;
pub mod lattice;
mod modp;
mod ratfunc;
mod scalar;

pub use cyclo::{cyclo_embed, cyclotomic_poly, euler_phi, CycloNumber};
pub use laurent::{p_poly, Laurent, Monomial};
pub use modp::ModP;
pub use ratfunc::RatFunc;
pub use scalar::{Coeff, FieldCoeff};
