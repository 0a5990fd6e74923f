//! Finite commutative rings, finite modules over them, crisp submodules and
//! module homomorphisms. Everything is table driven; element ids are dense
//! indices `0..len`.

mod carrier;
pub mod crisp;
mod hom;
mod module;
mod ring;
mod subset;

use thiserror::Error;

pub use carrier::Carrier;
pub use crisp::{
    crisp_radical, enumerate_submodules, is_primary_submodule, is_prime_submodule, is_submodule, residual, span,
    CrispVerdict,
};
pub use hom::{enumerate_homs, quotient_projection, submodule_inclusion, HomViolation, ModHom};
pub use module::{FinModule, ModuleTables};
pub use ring::{FiniteRing, RingTables};
pub use subset::CrispSubset;

/// Dense element id inside a ring or module.
pub type Elem = usize;

/// First axiom a set of tables fails, with the offending tuple.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("malformed tables: {0}")]
    Shape(String),
    #[error("zero equals one")]
    ZeroEqualsOne,
    #[error("additive identity fails at {a}")]
    AddIdentity { a: Elem },
    #[error("{a} has no additive inverse")]
    AddInverse { a: Elem },
    #[error("addition not commutative at ({a}, {b})")]
    AddCommutativity { a: Elem, b: Elem },
    #[error("addition not associative at ({a}, {b}, {c})")]
    AddAssociativity { a: Elem, b: Elem, c: Elem },
    #[error("multiplicative identity fails at {a}")]
    MulIdentity { a: Elem },
    #[error("multiplication not commutative at ({a}, {b})")]
    MulCommutativity { a: Elem, b: Elem },
    #[error("multiplication not associative at ({a}, {b}, {c})")]
    MulAssociativity { a: Elem, b: Elem, c: Elem },
    #[error("distributivity fails at ({a}, {b}, {c})")]
    Distributivity { a: Elem, b: Elem, c: Elem },
    #[error("1·{x} != {x}")]
    Unitary { x: Elem },
    #[error("({r}+{s})·{x} != {r}·{x} + {s}·{x}")]
    ScalarDistributivity { r: Elem, s: Elem, x: Elem },
    #[error("{r}·({x}+{y}) != {r}·{x} + {r}·{y}")]
    VectorDistributivity { r: Elem, x: Elem, y: Elem },
    #[error("({r}{s})·{x} != {r}·({s}·{x})")]
    ActionAssociativity { r: Elem, s: Elem, x: Elem },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid ring order {0}: need n >= 2")]
    InvalidOrder(usize),
    #[error("component order {order} does not divide ring order {ring_order}")]
    IncompatibleAction { order: usize, ring_order: usize },
    #[error("product modules need a cyclic ring")]
    NotCyclicRing,
    #[error("invalid ring tables: {0}")]
    InvalidRing(Violation),
    #[error("invalid module tables: {0}")]
    InvalidModule(Violation),
    #[error("operands live on different carriers")]
    CarrierMismatch,
    #[error("modules are over different rings")]
    RingMismatch,
    #[error("{0} is not a submodule")]
    NotSubmodule(String),
    #[error("submodule is not proper")]
    NotProper,
    #[error("element {elem} out of range for carrier of size {size}")]
    ElementOutOfRange { elem: Elem, size: usize },
    #[error("map has {found} entries, source has {expected} elements")]
    MapLength { expected: usize, found: usize },
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(HomViolation),
}
