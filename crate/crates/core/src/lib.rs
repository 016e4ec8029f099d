//! Exact computational algebra for the torus-equivariant K-homology of
//! type-A affine Grassmannians, realized three ways: the Peterson
//! subalgebra of a level-zero K-nil-Hecke ring, equivariantly deformed
//! symmetric functions built by Demazure operators, and the coordinate
//! ring of a centralizer family. All arithmetic is exact.

pub mod coeff;
pub mod error;
pub mod exec;
pub mod ext_weyl;
pub mod partition;
pub mod root_data;

pub mod nilhecke;
pub mod peterson;

pub mod symseries;

pub mod demazure;

pub mod centralizer;

pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
