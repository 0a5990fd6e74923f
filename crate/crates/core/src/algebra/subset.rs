use std::cmp::Ordering;
use std::fmt;

use super::{AlgebraError, Carrier, Elem};

/// An ordinary subset of a carrier, stored as a membership bitmap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrispSubset {
    carrier: Carrier,
    members: Vec<bool>,
}

impl CrispSubset {
    pub fn empty(carrier: &Carrier) -> Self {
        CrispSubset { carrier: carrier.clone(), members: vec![false; carrier.len()] }
    }

    pub fn full(carrier: &Carrier) -> Self {
        CrispSubset { carrier: carrier.clone(), members: vec![true; carrier.len()] }
    }

    pub fn from_elements(carrier: &Carrier, elems: impl IntoIterator<Item = Elem>) -> Result<Self, AlgebraError> {
        let mut set = Self::empty(carrier);
        for x in elems {
            if x >= carrier.len() {
                return Err(AlgebraError::ElementOutOfRange { elem: x, size: carrier.len() });
            }
            set.members[x] = true;
        }
        Ok(set)
    }

    pub fn from_predicate(carrier: &Carrier, pred: impl Fn(Elem) -> bool) -> Self {
        let members = carrier.elements().map(pred).collect();
        CrispSubset { carrier: carrier.clone(), members }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members[x]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&b| b)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn bits(&self) -> &[bool] {
        &self.members
    }

    pub fn is_subset_of(&self, other: &CrispSubset) -> bool {
        self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    pub fn intersection(&self, other: &CrispSubset) -> Result<CrispSubset, AlgebraError> {
        self.same_carrier(other)?;
        let members = self.members.iter().zip(&other.members).map(|(&a, &b)| a && b).collect();
        Ok(CrispSubset { carrier: self.carrier.clone(), members })
    }

    pub(crate) fn same_carrier(&self, other: &CrispSubset) -> Result<(), AlgebraError> {
        if self.carrier != other.carrier {
            return Err(AlgebraError::CarrierMismatch);
        }
        Ok(())
    }

    /// Canonical order: by size, then by the sorted member list.
    pub fn canonical_cmp(&self, other: &CrispSubset) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.elements().cmp(other.elements()))
    }
}

impl fmt::Display for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.elements().map(|x| self.carrier.label(x)).collect();
        write!(f, "{{{}}}", labels.join(", "))
    }
}
