//! Exact scalars and Laurent polynomials.

pub mod cyclotomic;
pub mod laurent;

pub use cyclotomic::CycScalar;
pub use laurent::{rs_quantum_number, Mono, QLaurent, RSLaurent};
