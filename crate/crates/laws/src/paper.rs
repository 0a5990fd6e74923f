//! The three worked examples, modeled on finite quotients.
//!
//! * `Z4`: `ℤ` acting on `ℤ₄` factors through `ℤ₄`, so the module is `ℤ₄`
//!   over itself.
//! * `Z12`: likewise `ℤ₁₂` over itself.
//! * `Z6`: the `ℤ`-example is constant on cosets of `6ℤ`, so it lives on
//!   `ℤ₆` over itself with `0.3` and `0.5` kept exact.

use std::sync::Arc;

use ifmod_core::algebra::{Carrier, FinModule, FiniteRing};
use ifmod_core::{DegreePair, IfSet};

fn cyclic_module(n: usize) -> Carrier {
    let ring = Arc::new(FiniteRing::cyclic(n).expect("n >= 2"));
    Carrier::module(FinModule::product(ring, &[n]).expect("n divides n"))
}

fn half() -> DegreePair {
    DegreePair::frac((1, 2), (1, 2))
}

pub fn z4_example() -> IfSet {
    IfSet::new(cyclic_module(4), vec![DegreePair::TOP, DegreePair::BOTTOM, half(), DegreePair::BOTTOM])
        .expect("four degrees")
}

pub fn z12_example() -> IfSet {
    IfSet::from_fn(&cyclic_module(12), |x| match x {
        0 | 4 | 8 => DegreePair::TOP,
        2 | 6 | 10 => half(),
        _ => DegreePair::BOTTOM,
    })
}

pub fn z6_example() -> IfSet {
    IfSet::from_fn(&cyclic_module(6), |x| match x {
        0 => DegreePair::TOP,
        2 | 4 => DegreePair::frac((3, 10), (1, 2)),
        _ => DegreePair::BOTTOM,
    })
}

/// `(name, A)` for all three examples.
pub fn examples() -> Vec<(&'static str, IfSet)> {
    vec![("z4", z4_example()), ("z12", z12_example()), ("z6", z6_example())]
}

/// The same degrees viewed on the ring carrier (the module is the ring
/// acting on itself in every example).
pub fn as_ring_ifs(a: &IfSet) -> IfSet {
    let ring = Carrier::Ring(a.carrier().ring().clone());
    IfSet::new(ring, a.degrees().to_vec()).expect("regular module has ring size")
}
