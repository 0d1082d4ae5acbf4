//! Exact Ehrhart theory for small lattice polytopes.

pub mod counting;
pub mod ehrhart;
pub mod error;
pub mod families;
pub mod hull;
pub mod lattice;
pub mod linalg;
pub mod reflexive;
pub mod report;
pub mod roots;
pub mod serial;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Halfspace, IntPoint, LatticePolytope, RationalPoint};
