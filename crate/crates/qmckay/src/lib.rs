//! Exact computations for the two-parameter quantum McKay correspondence.

pub mod chmap;
pub mod error;
pub mod fock;
pub mod group;
pub mod mckay;
pub mod ring;
pub mod suite;
pub mod toroidal;
pub mod vertex;
pub mod wreath;

pub use error::Error;
pub use ring::{rs_quantum_number, CycScalar, RSLaurent};
