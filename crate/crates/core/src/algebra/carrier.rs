use std::fmt;
use std::sync::Arc;

use super::{Elem, FinModule, FiniteRing};

/// The underlying set of a crisp or fuzzy subset: either a module, or a ring
/// viewed as a module over itself.
///
/// Both variants expose the same additive group and scalar action, so radicals
/// and residuals are computed uniformly; ideal-specific predicates require the
/// `Ring` variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    Ring(Arc<FiniteRing>),
    Module(Arc<FinModule>),
}

impl Carrier {
    pub fn ring_of(ring: &Arc<FiniteRing>) -> Self {
        Carrier::Ring(ring.clone())
    }

    pub fn module(m: FinModule) -> Self {
        Carrier::Module(Arc::new(m))
    }

    /// The ring of scalars.
    pub fn ring(&self) -> &Arc<FiniteRing> {
        match self {
            Carrier::Ring(r) => r,
            Carrier::Module(m) => m.ring(),
        }
    }

    pub fn is_ring(&self) -> bool {
        matches!(self, Carrier::Ring(_))
    }

    pub fn len(&self) -> usize {
        match self {
            Carrier::Ring(r) => r.len(),
            Carrier::Module(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn zero(&self) -> Elem {
        match self {
            Carrier::Ring(r) => r.zero(),
            Carrier::Module(m) => m.theta(),
        }
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        match self {
            Carrier::Ring(r) => r.add(x, y),
            Carrier::Module(m) => m.add(x, y),
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        match self {
            Carrier::Ring(r) => r.neg(x),
            Carrier::Module(m) => m.neg(x),
        }
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    /// Scalar action `r·x`; multiplication when the carrier is the ring.
    #[inline]
    pub fn act(&self, r: Elem, x: Elem) -> Elem {
        match self {
            Carrier::Ring(ring) => ring.mul(r, x),
            Carrier::Module(m) => m.act(r, x),
        }
    }

    pub fn label(&self, x: Elem) -> String {
        match self {
            Carrier::Ring(r) => r.label(x),
            Carrier::Module(m) => m.label(x).to_string(),
        }
    }

    /// Looks an element up by its printed label.
    pub fn find_label(&self, label: &str) -> Option<Elem> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.elements().find(|&x| self.label(x) == wanted)
    }

    pub fn name(&self) -> String {
        match self {
            Carrier::Ring(r) => format!("ring {}", r.name()),
            Carrier::Module(m) => m.name().to_string(),
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
