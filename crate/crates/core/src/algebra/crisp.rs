//! Crisp submodule theory: residuals, radicals, and the prime / primary
//! predicates on ordinary submodules.

use std::collections::BTreeSet;

use super::{AlgebraError, Carrier, CrispSubset, Elem};

/// Outcome of a crisp predicate; `witness` is the first `(r, m)` that breaks it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrispVerdict {
    pub holds: bool,
    pub witness: Option<(Elem, Elem)>,
}

impl CrispVerdict {
    fn from_witness(witness: Option<(Elem, Elem)>) -> Self {
        CrispVerdict { holds: witness.is_none(), witness }
    }
}

/// True iff `n` contains zero and is closed under addition and every scalar.
pub fn is_submodule(n: &CrispSubset) -> bool {
    let c = n.carrier();
    if !n.contains(c.zero()) {
        return false;
    }
    let members: Vec<Elem> = n.elements().collect();
    for &x in &members {
        for &y in &members {
            if !n.contains(c.add(x, y)) {
                return false;
            }
        }
        if c.ring().elements().any(|r| !n.contains(c.act(r, x))) {
            return false;
        }
    }
    true
}

fn require_submodule(n: &CrispSubset) -> Result<(), AlgebraError> {
    if is_submodule(n) {
        Ok(())
    } else {
        Err(AlgebraError::NotSubmodule(n.to_string()))
    }
}

fn require_proper_submodule(n: &CrispSubset) -> Result<(), AlgebraError> {
    require_submodule(n)?;
    if n.is_full() {
        return Err(AlgebraError::NotProper);
    }
    Ok(())
}

/// `(N : M) = { r : r·M ⊆ N }`, an ideal of the scalar ring.
pub fn residual(n: &CrispSubset) -> Result<CrispSubset, AlgebraError> {
    require_submodule(n)?;
    let c = n.carrier();
    let ring = Carrier::Ring(c.ring().clone());
    Ok(CrispSubset::from_predicate(&ring, |r| c.elements().all(|m| n.contains(c.act(r, m)))))
}

/// `√N = { r : rⁿ·M ⊆ N for some n ≥ 1 }`, scanning the distinct powers of `r`.
pub fn crisp_radical(n: &CrispSubset) -> Result<CrispSubset, AlgebraError> {
    let colon = residual(n)?;
    let ring = colon.carrier().ring().clone();
    Ok(CrispSubset::from_predicate(colon.carrier(), |r| ring.distinct_powers(r).into_iter().any(|p| colon.contains(p))))
}

/// Prime: `r·m ∈ P` implies `m ∈ P` or `r ∈ (P : M)`.
pub fn is_prime_submodule(p: &CrispSubset) -> Result<CrispVerdict, AlgebraError> {
    require_proper_submodule(p)?;
    let colon = residual(p)?;
    Ok(CrispVerdict::from_witness(first_violation(p, |r| colon.contains(r))))
}

/// Primary: `r·m ∈ N` implies `m ∈ N` or `r ∈ √N`.
pub fn is_primary_submodule(n: &CrispSubset) -> Result<CrispVerdict, AlgebraError> {
    require_proper_submodule(n)?;
    let rad = crisp_radical(n)?;
    Ok(CrispVerdict::from_witness(first_violation(n, |r| rad.contains(r))))
}

fn first_violation(n: &CrispSubset, absorbed: impl Fn(Elem) -> bool) -> Option<(Elem, Elem)> {
    let c = n.carrier();
    c.ring().elements().find_map(|r| {
        if absorbed(r) {
            return None;
        }
        c.elements().find(|&m| n.contains(c.act(r, m)) && !n.contains(m)).map(|m| (r, m))
    })
}

/// The smallest submodule containing `gens`.
pub fn span(carrier: &Carrier, gens: impl IntoIterator<Item = Elem>) -> CrispSubset {
    let mut members = vec![false; carrier.len()];
    let mut queue = vec![carrier.zero()];
    members[carrier.zero()] = true;
    let mut found = vec![carrier.zero()];
    for g in gens {
        for r in carrier.ring().elements() {
            let x = carrier.act(r, g);
            if !members[x] {
                members[x] = true;
                queue.push(x);
                found.push(x);
            }
        }
    }
    // Close under addition; scalar closure is preserved because every
    // generator was saturated under the action and the action is additive.
    while let Some(x) = queue.pop() {
        let snapshot = found.clone();
        for y in snapshot {
            let s = carrier.add(x, y);
            if !members[s] {
                members[s] = true;
                queue.push(s);
                found.push(s);
            }
        }
    }
    CrispSubset::from_predicate(carrier, |x| members[x])
}

/// Every submodule exactly once, sorted by size then member list.
pub fn enumerate_submodules(carrier: &Carrier) -> Vec<CrispSubset> {
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let zero = span(carrier, []);
    seen.insert(zero.bits().to_vec());
    let mut frontier = vec![zero];
    let mut all = frontier.clone();
    while let Some(n) = frontier.pop() {
        for x in carrier.elements().filter(|&x| !n.contains(x)) {
            let bigger = span(carrier, n.elements().chain([x]).collect::<Vec<_>>());
            if seen.insert(bigger.bits().to_vec()) {
                frontier.push(bigger.clone());
                all.push(bigger);
            }
        }
    }
    all.sort_by(|a, b| a.canonical_cmp(b));
    all
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{FinModule, FiniteRing};

    fn cyclic(n: usize) -> Carrier {
        let r = Arc::new(FiniteRing::cyclic(n).unwrap());
        Carrier::module(FinModule::product(r, &[n]).unwrap())
    }

    fn set(c: &Carrier, xs: &[Elem]) -> CrispSubset {
        CrispSubset::from_elements(c, xs.iter().copied()).unwrap()
    }

    fn elems(s: &CrispSubset) -> Vec<Elem> {
        s.elements().collect()
    }

    #[test]
    fn submodule_membership() {
        let z12 = cyclic(12);
        assert!(is_submodule(&set(&z12, &[0, 4, 8])));
        assert!(!is_submodule(&set(&z12, &[0, 1])));
        assert!(is_submodule(&set(&cyclic(4), &[0, 2])));
    }

    #[test]
    fn residuals() {
        let z12 = cyclic(12);
        assert_eq!(elems(&residual(&set(&z12, &[0, 4, 8])).unwrap()), [0, 4, 8]);
        assert_eq!(elems(&residual(&set(&z12, &[0, 6])).unwrap()), [0, 6]);
        assert!(residual(&CrispSubset::full(&z12)).unwrap().is_full());
        assert!(residual(&set(&z12, &[0, 1])).is_err());
    }

    #[test]
    fn radicals() {
        let z12 = cyclic(12);
        assert_eq!(elems(&crisp_radical(&set(&z12, &[0, 4, 8])).unwrap()), [0, 2, 4, 6, 8, 10]);
        assert_eq!(elems(&crisp_radical(&set(&cyclic(4), &[0])).unwrap()), [0, 2]);
        assert!(crisp_radical(&CrispSubset::full(&z12)).unwrap().is_full());
    }

    #[test]
    fn prime_predicate() {
        let z12 = cyclic(12);
        assert!(is_prime_submodule(&set(&z12, &[0, 2, 4, 6, 8, 10])).unwrap().holds);
        let v = is_prime_submodule(&set(&z12, &[0, 4, 8])).unwrap();
        assert!(!v.holds);
        let (r, m) = v.witness.unwrap();
        // any witness must satisfy r·m ∈ N, m ∉ N, r ∉ (N:M)
        assert_eq!((r * m) % 4, 0);
        assert_ne!(m % 4, 0);
        assert_ne!(r % 4, 0);
        let v = is_prime_submodule(&set(&cyclic(4), &[0])).unwrap();
        assert_eq!(v.witness, Some((2, 2)));
        assert!(matches!(is_prime_submodule(&CrispSubset::full(&z12)), Err(AlgebraError::NotProper)));
    }

    #[test]
    fn primary_predicate() {
        let z12 = cyclic(12);
        assert!(is_primary_submodule(&set(&z12, &[0, 4, 8])).unwrap().holds);
        let v = is_primary_submodule(&set(&z12, &[0, 6])).unwrap();
        assert_eq!(v.witness, Some((2, 3)));
        assert!(is_primary_submodule(&set(&cyclic(4), &[0, 2])).unwrap().holds);
    }

    #[test]
    fn submodule_lattices() {
        let z4 = cyclic(4);
        let subs: Vec<Vec<Elem>> = enumerate_submodules(&z4).iter().map(elems).collect();
        assert_eq!(subs, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(enumerate_submodules(&cyclic(12)).len(), 6);
        let r2 = Arc::new(FiniteRing::cyclic(2).unwrap());
        let klein = Carrier::module(FinModule::product(r2, &[2, 2]).unwrap());
        assert_eq!(enumerate_submodules(&klein).len(), 5);
    }

    #[test]
    fn enumeration_matches_subset_filter() {
        let r2 = Arc::new(FiniteRing::cyclic(2).unwrap());
        let r4 = Arc::new(FiniteRing::cyclic(4).unwrap());
        for c in [
            cyclic(6),
            cyclic(12),
            Carrier::module(FinModule::product(r2, &[2, 2]).unwrap()),
            Carrier::module(FinModule::product(r4, &[2, 4]).unwrap()),
        ] {
            let n = c.len();
            let mut brute: Vec<CrispSubset> = (0u32..(1 << n))
                .map(|mask| CrispSubset::from_predicate(&c, |x| mask >> x & 1 == 1))
                .filter(is_submodule)
                .collect();
            brute.sort_by(|a, b| a.canonical_cmp(b));
            assert_eq!(enumerate_submodules(&c), brute, "{c}");
        }
    }
}
