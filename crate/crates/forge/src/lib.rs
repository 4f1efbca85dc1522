//! plactic-forge: an exact symbolic engine for Schubert, Grothendieck and
//! key polynomials, plactic-type noncommutative algebras and their Cauchy
//! kernels, and the surrounding counting identities.

pub mod counting;
pub mod divdiff;
pub mod divided;
pub mod error;
pub mod families;
pub mod kernels;
pub mod lattice;
pub mod perm;
pub mod plactic;
pub mod poly;
pub mod quotients;
pub mod golden;
pub mod verify;

pub use error::ForgeError;
