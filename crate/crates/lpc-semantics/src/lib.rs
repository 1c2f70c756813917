//! Matrix-valued models of LPC logic, the interpretation of derivations into
//! them, and a law checker over small enumerated instances.

mod error;
pub mod interp;
pub mod laws;
mod mat;
mod model;
mod obj;
pub mod smc;
pub mod toolkit;

pub use error::SemError;
pub use interp::{interp_ctx, interp_derivation, interp_obj, iso_pi, iso_tau, Interpreter, Role};
pub use laws::{check_laws, LawFamily, LawReport, Scope};
pub use mat::Mat;
pub use model::{Cat, Mono, Model};
pub use obj::{Elem, Mor, Obj};
