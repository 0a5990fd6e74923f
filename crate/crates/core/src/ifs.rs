//! Intuitionistic fuzzy subsets of a finite carrier and their lattice and
//! module-aware operations.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, Carrier, CrispSubset, Elem, ModHom};
use crate::degree::{CutSpec, DegreePair, Rational, ONE, ZERO};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IfsError {
    #[error("operands live on different carriers")]
    CarrierMismatch,
    #[error("expected {expected} degrees, found {found}")]
    NotTotal { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A total map from carrier elements to exact degree pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IfSet {
    carrier: Carrier,
    degrees: Vec<DegreePair>,
}

impl IfSet {
    pub fn new(carrier: Carrier, degrees: Vec<DegreePair>) -> Result<Self, IfsError> {
        if degrees.len() != carrier.len() {
            return Err(IfsError::NotTotal { expected: carrier.len(), found: degrees.len() });
        }
        Ok(IfSet { carrier, degrees })
    }

    pub fn from_fn(carrier: &Carrier, f: impl FnMut(Elem) -> DegreePair) -> Self {
        IfSet { carrier: carrier.clone(), degrees: carrier.elements().map(f).collect() }
    }

    pub fn constant(carrier: &Carrier, d: DegreePair) -> Self {
        Self::from_fn(carrier, |_| d)
    }

    /// `χ_N`: `(1, 0)` on `N`, `(0, 1)` off it.
    pub fn characteristic(n: &CrispSubset) -> Self {
        Self::from_fn(n.carrier(), |x| if n.contains(x) { DegreePair::TOP } else { DegreePair::BOTTOM })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    #[inline]
    pub fn at(&self, x: Elem) -> DegreePair {
        self.degrees[x]
    }

    #[inline]
    pub fn mu(&self, x: Elem) -> Rational {
        self.degrees[x].mu()
    }

    #[inline]
    pub fn nu(&self, x: Elem) -> Rational {
        self.degrees[x].nu()
    }

    pub fn degrees(&self) -> &[DegreePair] {
        &self.degrees
    }

    /// Replaces the carrier by an equal one (same tables) without touching degrees.
    pub fn with_degrees(&self, degrees: Vec<DegreePair>) -> Result<Self, IfsError> {
        IfSet::new(self.carrier.clone(), degrees)
    }

    fn same_carrier(&self, other: &IfSet) -> Result<(), IfsError> {
        if self.carrier != other.carrier {
            return Err(IfsError::CarrierMismatch);
        }
        Ok(())
    }

    /// Inclusion `A ⊆ B`: `μ_A ≤ μ_B` and `ν_A ≥ ν_B` everywhere.
    pub fn leq(&self, other: &IfSet) -> Result<bool, IfsError> {
        self.same_carrier(other)?;
        Ok(self.degrees.iter().zip(&other.degrees).all(|(a, b)| a.le(b)))
    }

    pub fn union(&self, other: &IfSet) -> Result<IfSet, IfsError> {
        self.zip_with(other, |a, b| a.join(&b))
    }

    pub fn intersection(&self, other: &IfSet) -> Result<IfSet, IfsError> {
        self.zip_with(other, |a, b| a.meet(&b))
    }

    fn zip_with(&self, other: &IfSet, f: impl Fn(DegreePair, DegreePair) -> DegreePair) -> Result<IfSet, IfsError> {
        self.same_carrier(other)?;
        let degrees = self.degrees.iter().zip(&other.degrees).map(|(&a, &b)| f(a, b)).collect();
        Ok(IfSet { carrier: self.carrier.clone(), degrees })
    }

    /// `A + B`: `μ(x) = max_{y+z=x} μ_A(y) ∧ μ_B(z)`, `ν(x) = min_{y+z=x} ν_A(y) ∨ ν_B(z)`.
    ///
    /// Uses the carrier's addition; on a ring carrier that is the ring's own
    /// addition, so sums of ideals are covered too.
    pub fn sum(&self, other: &IfSet) -> Result<IfSet, IfsError> {
        self.same_carrier(other)?;
        let c = &self.carrier;
        let mut best: Vec<Option<DegreePair>> = vec![None; c.len()];
        for y in c.elements() {
            for z in c.elements() {
                let d = self.degrees[y].meet(&other.degrees[z]);
                let slot = &mut best[c.add(y, z)];
                *slot = Some(slot.map_or(d, |b| b.join(&d)));
            }
        }
        let degrees = best.into_iter().map(|d| d.expect("every x = x + 0")).collect();
        Ok(IfSet { carrier: c.clone(), degrees })
    }

    pub fn cut(&self, spec: CutSpec) -> CrispSubset {
        CrispSubset::from_predicate(&self.carrier, |x| spec.admits(self.degrees[x]))
    }

    /// `A* = { x : μ(x) > 0, ν(x) < 1 }`.
    pub fn support(&self) -> CrispSubset {
        self.cut(CutSpec::new(ZERO, ONE, true).expect("(0,1) is a valid cut"))
    }

    /// `f(A)(y)`: join over the fiber `f⁻¹(y)`, or `(0, 1)` on an empty fiber.
    pub fn image(&self, f: &ModHom) -> Result<IfSet, IfsError> {
        if f.source() != &self.carrier {
            return Err(IfsError::CarrierMismatch);
        }
        let mut acc: Vec<Option<DegreePair>> = vec![None; f.target().len()];
        for x in self.carrier.elements() {
            let slot = &mut acc[f.apply(x)];
            *slot = Some(slot.map_or(self.degrees[x], |d| d.join(&self.degrees[x])));
        }
        let degrees = acc.into_iter().map(|d| d.unwrap_or(DegreePair::BOTTOM)).collect();
        Ok(IfSet { carrier: f.target().clone(), degrees })
    }

    /// `f⁻¹(B) = B ∘ f`.
    pub fn preimage(&self, f: &ModHom) -> Result<IfSet, IfsError> {
        if f.target() != &self.carrier {
            return Err(IfsError::CarrierMismatch);
        }
        Ok(IfSet::from_fn(f.source(), |x| self.degrees[f.apply(x)]))
    }

    pub fn mu_values(&self) -> BTreeSet<Rational> {
        self.degrees.iter().map(|d| d.mu()).collect()
    }

    pub fn nu_values(&self) -> BTreeSet<Rational> {
        self.degrees.iter().map(|d| d.nu()).collect()
    }

    /// Distinct degree pairs taken, in order of first appearance.
    pub fn image_pairs(&self) -> Vec<DegreePair> {
        let mut out: Vec<DegreePair> = Vec::new();
        for d in &self.degrees {
            if !out.contains(d) {
                out.push(*d);
            }
        }
        out
    }

    /// Whether `A` is constant on every coset `x + K` of the subgroup `K`.
    pub fn is_constant_on_cosets(&self, k: &CrispSubset) -> bool {
        let c = &self.carrier;
        c.elements().all(|x| k.elements().all(|z| self.degrees[c.add(x, z)] == self.degrees[x]))
    }
}

impl fmt::Display for IfSet {
    /// `0: 1,0 | 1: 0,1 | …` in element order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, d) in self.degrees.iter().enumerate() {
            if x > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{}: {}", self.carrier.label(x), d)?;
        }
        Ok(())
    }
}
