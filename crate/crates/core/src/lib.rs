//! Finite rings and modules, intuitionistic fuzzy subsets over them, and
//! the radical / residual / primary machinery on IF submodules.

pub mod algebra;
pub mod degree;
pub mod ifs;
pub mod theory;

pub use degree::{CutSpec, DegreePair, Rational};
pub use ifs::IfSet;
