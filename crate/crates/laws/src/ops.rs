//! The two evaluation routes every law runs through.

use ifmod_core::algebra::{self, CrispSubset};
use ifmod_core::theory::{self, Pairing, PrimeDefinition};
use ifmod_core::{CutSpec, IfSet};

use crate::oracle;

/// Operations a law may call. `None` means a precondition failed (the
/// argument is not an IF submodule, not an IF ideal, not proper, ...).
pub trait Ops: Sync {
    fn route(&self) -> Route;
    fn is_if_submodule(&self, a: &IfSet) -> bool;
    fn is_if_ideal(&self, a: &IfSet) -> bool;
    fn radical(&self, a: &IfSet) -> Option<IfSet>;
    fn ideal_radical(&self, a: &IfSet) -> Option<IfSet>;
    fn bar(&self, a: &IfSet) -> IfSet;
    fn cut(&self, a: &IfSet, spec: CutSpec) -> CrispSubset;
    fn is_primary(&self, a: &IfSet, pairing: Pairing) -> Option<bool>;
    fn is_weakly_primary(&self, a: &IfSet, pairing: Pairing) -> Option<bool>;
    fn is_prime(&self, a: &IfSet, definition: PrimeDefinition) -> Option<bool>;
    fn crisp_radical(&self, n: &CrispSubset) -> Option<CrispSubset>;
    fn residual(&self, n: &CrispSubset) -> Option<CrispSubset>;
    fn is_primary_submodule(&self, n: &CrispSubset) -> Option<bool>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Optimized,
    Definitional,
}

/// The library code path.
pub struct Optimized;

/// Literal formulas from [`oracle`].
pub struct Definitional;

impl Ops for Optimized {
    fn route(&self) -> Route {
        Route::Optimized
    }

    fn is_if_submodule(&self, a: &IfSet) -> bool {
        theory::is_if_submodule(a).holds
    }

    fn is_if_ideal(&self, a: &IfSet) -> bool {
        theory::is_if_ideal(a).is_ok_and(|v| v.holds)
    }

    fn radical(&self, a: &IfSet) -> Option<IfSet> {
        theory::radical(a).ok()
    }

    fn ideal_radical(&self, a: &IfSet) -> Option<IfSet> {
        theory::ideal_radical(a).ok()
    }

    fn bar(&self, a: &IfSet) -> IfSet {
        theory::bar_residual(a)
    }

    fn cut(&self, a: &IfSet, spec: CutSpec) -> CrispSubset {
        a.cut(spec)
    }

    fn is_primary(&self, a: &IfSet, pairing: Pairing) -> Option<bool> {
        theory::is_primary(a, pairing).ok().map(|v| v.holds)
    }

    fn is_weakly_primary(&self, a: &IfSet, pairing: Pairing) -> Option<bool> {
        theory::is_weakly_primary_ideal(a, pairing).ok().map(|v| v.holds)
    }

    fn is_prime(&self, a: &IfSet, definition: PrimeDefinition) -> Option<bool> {
        theory::is_if_prime_ideal(a, definition).ok().map(|v| v.holds)
    }

    fn crisp_radical(&self, n: &CrispSubset) -> Option<CrispSubset> {
        algebra::crisp_radical(n).ok()
    }

    fn residual(&self, n: &CrispSubset) -> Option<CrispSubset> {
        algebra::residual(n).ok()
    }

    fn is_primary_submodule(&self, n: &CrispSubset) -> Option<bool> {
        algebra::is_primary_submodule(n).ok().map(|v| v.holds)
    }
}

impl Ops for Definitional {
    fn route(&self) -> Route {
        Route::Definitional
    }

    fn is_if_submodule(&self, a: &IfSet) -> bool {
        oracle::is_if_submodule(a)
    }

    fn is_if_ideal(&self, a: &IfSet) -> bool {
        a.carrier().is_ring() && oracle::is_if_ideal(a)
    }

    fn radical(&self, a: &IfSet) -> Option<IfSet> {
        oracle::radical(a)
    }

    fn ideal_radical(&self, a: &IfSet) -> Option<IfSet> {
        a.carrier().is_ring().then(|| oracle::ideal_radical(a))
    }

    fn bar(&self, a: &IfSet) -> IfSet {
        oracle::bar(a)
    }

    fn cut(&self, a: &IfSet, spec: CutSpec) -> CrispSubset {
        oracle::cut(a, spec)
    }

    fn is_primary(&self, a: &IfSet, pairing: Pairing) -> Option<bool> {
        oracle::is_primary(a, pairing)
    }

    fn is_weakly_primary(&self, a: &IfSet, pairing: Pairing) -> Option<bool> {
        if !a.carrier().is_ring() {
            return None;
        }
        oracle::is_weakly_primary(a, pairing)
    }

    fn is_prime(&self, a: &IfSet, definition: PrimeDefinition) -> Option<bool> {
        if !a.carrier().is_ring() {
            return None;
        }
        oracle::is_prime(a, definition)
    }

    fn crisp_radical(&self, n: &CrispSubset) -> Option<CrispSubset> {
        oracle::crisp_radical(n)
    }

    fn residual(&self, n: &CrispSubset) -> Option<CrispSubset> {
        oracle::residual(n)
    }

    fn is_primary_submodule(&self, n: &CrispSubset) -> Option<bool> {
        oracle::is_primary_submodule(n)
    }
}
