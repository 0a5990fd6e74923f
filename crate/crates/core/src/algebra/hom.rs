use std::collections::BTreeMap;

use super::{crisp, AlgebraError, Carrier, CrispSubset, Elem, FinModule, ModuleTables};

/// A module homomorphism between two carriers over the same ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModHom {
    source: Carrier,
    target: Carrier,
    map: Vec<Elem>,
}

/// The clause a candidate map fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomViolation {
    Zero { image: Elem },
    Additive { x: Elem, y: Elem },
    Scalar { r: Elem, x: Elem },
}

impl std::fmt::Display for HomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomViolation::Zero { image } => write!(f, "f(0) = {image} is not zero"),
            HomViolation::Additive { x, y } => write!(f, "f({x}+{y}) != f({x})+f({y})"),
            HomViolation::Scalar { r, x } => write!(f, "f({r}·{x}) != {r}·f({x})"),
        }
    }
}

impl ModHom {
    /// Validates both homomorphism equations over all pairs.
    pub fn new(source: Carrier, target: Carrier, map: Vec<Elem>) -> Result<Self, AlgebraError> {
        if source.ring() != target.ring() {
            return Err(AlgebraError::RingMismatch);
        }
        if map.len() != source.len() {
            return Err(AlgebraError::MapLength { expected: source.len(), found: map.len() });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.len()) {
            return Err(AlgebraError::ElementOutOfRange { elem: bad, size: target.len() });
        }
        if let Some(v) = hom_violation(&source, &target, &map) {
            return Err(AlgebraError::NotHomomorphism(v));
        }
        Ok(ModHom { source, target, map })
    }

    pub fn identity(carrier: &Carrier) -> Self {
        ModHom { source: carrier.clone(), target: carrier.clone(), map: carrier.elements().collect() }
    }

    pub fn source(&self) -> &Carrier {
        &self.source
    }

    pub fn target(&self) -> &Carrier {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn kernel(&self) -> CrispSubset {
        let zero = self.target.zero();
        CrispSubset::from_predicate(&self.source, |x| self.map[x] == zero)
    }

    pub fn image_set(&self) -> CrispSubset {
        let mut hit = vec![false; self.target.len()];
        for &y in &self.map {
            hit[y] = true;
        }
        CrispSubset::from_predicate(&self.target, |y| hit[y])
    }

    pub fn is_epimorphism(&self) -> bool {
        self.image_set().is_full()
    }

    /// `f⁻¹(N)` for a crisp subset `N` of the target.
    pub fn preimage_set(&self, n: &CrispSubset) -> Result<CrispSubset, AlgebraError> {
        if n.carrier() != &self.target {
            return Err(AlgebraError::CarrierMismatch);
        }
        Ok(CrispSubset::from_predicate(&self.source, |x| n.contains(self.map[x])))
    }

    pub fn fiber(&self, y: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.source.elements().filter(move |&x| self.map[x] == y)
    }
}

fn hom_violation(source: &Carrier, target: &Carrier, map: &[Elem]) -> Option<HomViolation> {
    if map[source.zero()] != target.zero() {
        return Some(HomViolation::Zero { image: map[source.zero()] });
    }
    for x in source.elements() {
        for y in source.elements() {
            if map[source.add(x, y)] != target.add(map[x], map[y]) {
                return Some(HomViolation::Additive { x, y });
            }
        }
        for r in source.ring().elements() {
            if map[source.act(r, x)] != target.act(r, map[x]) {
                return Some(HomViolation::Scalar { r, x });
            }
        }
    }
    None
}

/// Every homomorphism `source → target`.
///
/// Picks a generating set of `source`, tries every assignment of generator
/// images, extends each assignment along the span, and keeps the consistent
/// extensions. The output is sorted by the map vector.
pub fn enumerate_homs(source: &Carrier, target: &Carrier) -> Vec<ModHom> {
    if source.ring() != target.ring() {
        return Vec::new();
    }
    let mut gens = Vec::new();
    let mut covered = crisp::span(source, []);
    while let Some(x) = source.elements().find(|&x| !covered.contains(x)) {
        gens.push(x);
        covered = crisp::span(source, gens.iter().copied());
    }
    let mut homs = Vec::new();
    let mut images = vec![0; gens.len()];
    loop {
        if let Some(map) = extend(source, target, &gens, &images) {
            if let Ok(h) = ModHom::new(source.clone(), target.clone(), map) {
                homs.push(h);
            }
        }
        // odometer over target^gens
        let mut i = 0;
        loop {
            if i == images.len() {
                homs.sort_by(|a, b| a.map.cmp(&b.map));
                return homs;
            }
            images[i] += 1;
            if images[i] < target.len() {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

fn extend(source: &Carrier, target: &Carrier, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut map: Vec<Option<Elem>> = vec![None; source.len()];
    let assign = |map: &mut Vec<Option<Elem>>, x: Elem, y: Elem| -> Result<bool, ()> {
        match map[x] {
            Some(old) if old != y => Err(()),
            Some(_) => Ok(false),
            None => {
                map[x] = Some(y);
                Ok(true)
            }
        }
    };
    assign(&mut map, source.zero(), target.zero()).ok()?;
    let mut known = vec![source.zero()];
    for (&g, &img) in gens.iter().zip(images) {
        for r in source.ring().elements() {
            if assign(&mut map, source.act(r, g), target.act(r, img)).ok()? {
                known.push(source.act(r, g));
            }
        }
    }
    let mut i = 0;
    while i < known.len() {
        let x = known[i];
        for j in 0..=i {
            let y = known[j];
            let s = source.add(x, y);
            let fs = target.add(map[x]?, map[y]?);
            if assign(&mut map, s, fs).ok()? {
                known.push(s);
            }
        }
        i += 1;
    }
    map.into_iter().collect()
}

/// The submodule `n` as a module in its own right, with its inclusion map.
pub fn submodule_inclusion(n: &CrispSubset) -> Result<(Carrier, ModHom), AlgebraError> {
    if !crisp::is_submodule(n) {
        return Err(AlgebraError::NotSubmodule(n.to_string()));
    }
    let c = n.carrier();
    let members: Vec<Elem> = n.elements().collect();
    let index: BTreeMap<Elem, Elem> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let tables = ModuleTables {
        add: members.iter().map(|&x| members.iter().map(|&y| index[&c.add(x, y)]).collect()).collect(),
        theta: index[&c.zero()],
        action: c.ring().elements().map(|r| members.iter().map(|&x| index[&c.act(r, x)]).collect()).collect(),
        labels: members.iter().map(|&x| c.label(x)).collect(),
    };
    let name = format!("{n}<{}", c.name());
    let sub = Carrier::module(FinModule::from_tables(c.ring().clone(), tables, name)?);
    let inclusion = ModHom::new(sub.clone(), c.clone(), members)?;
    Ok((sub, inclusion))
}

/// The quotient `M / N` with its canonical projection. Cosets are labelled
/// `[x]` by their smallest representative.
pub fn quotient_projection(n: &CrispSubset) -> Result<(Carrier, ModHom), AlgebraError> {
    if !crisp::is_submodule(n) {
        return Err(AlgebraError::NotSubmodule(n.to_string()));
    }
    let c = n.carrier();
    let mut rep_of = vec![usize::MAX; c.len()];
    let mut reps = Vec::new();
    for x in c.elements() {
        if rep_of[x] != usize::MAX {
            continue;
        }
        let class = reps.len();
        reps.push(x);
        for k in n.elements() {
            rep_of[c.add(x, k)] = class;
        }
    }
    let tables = ModuleTables {
        add: reps.iter().map(|&x| reps.iter().map(|&y| rep_of[c.add(x, y)]).collect()).collect(),
        theta: rep_of[c.zero()],
        action: c.ring().elements().map(|r| reps.iter().map(|&x| rep_of[c.act(r, x)]).collect()).collect(),
        labels: reps.iter().map(|&x| format!("[{}]", c.label(x))).collect(),
    };
    let name = format!("{}/{n}", c.name());
    let quot = Carrier::module(FinModule::from_tables(c.ring().clone(), tables, name)?);
    let projection = ModHom::new(c.clone(), quot.clone(), rep_of)?;
    Ok((quot, projection))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::FiniteRing;

    fn module(n: usize, orders: &[usize]) -> Carrier {
        let r = Arc::new(FiniteRing::cyclic(n).unwrap());
        Carrier::module(FinModule::product(r, orders).unwrap())
    }

    #[test]
    fn reduction_mod_four() {
        let z12 = module(12, &[12]);
        let z4 = module(12, &[4]);
        let f = ModHom::new(z12.clone(), z4, (0..12).map(|x| x % 4).collect()).unwrap();
        assert_eq!(f.kernel().elements().collect::<Vec<_>>(), [0, 4, 8]);
        assert!(f.is_epimorphism());
    }

    #[test]
    fn identity_and_shift() {
        let z4 = module(4, &[4]);
        let id = ModHom::new(z4.clone(), z4.clone(), vec![0, 1, 2, 3]).unwrap();
        assert_eq!(id.kernel().len(), 1);
        let err = ModHom::new(z4.clone(), z4, vec![1, 2, 3, 0]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotHomomorphism(HomViolation::Zero { image: 1 })));
    }

    fn brute_homs(source: &Carrier, target: &Carrier) -> Vec<ModHom> {
        let (s, t) = (source.len(), target.len());
        let total = t.pow(s as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut map = vec![0; s];
            for slot in map.iter_mut().rev() {
                *slot = code % t;
                code /= t;
            }
            if let Ok(h) = ModHom::new(source.clone(), target.clone(), map) {
                out.push(h);
            }
        }
        out.sort_by(|a, b| a.map().cmp(b.map()));
        out
    }

    #[test]
    fn generator_enumeration_matches_brute_force() {
        let cases = [
            (module(4, &[4]), module(4, &[4])),
            (module(4, &[4]), module(4, &[2])),
            (module(6, &[6]), module(6, &[3])),
            (module(2, &[2, 2]), module(2, &[2, 2])),
            (module(2, &[2]), module(2, &[2, 2])),
            (module(12, &[12]), module(12, &[1])),
        ];
        for (s, t) in cases {
            assert_eq!(enumerate_homs(&s, &t), brute_homs(&s, &t), "{s} -> {t}");
        }
        assert_eq!(enumerate_homs(&module(12, &[12]), &module(12, &[12])).len(), 12);
    }

    #[test]
    fn preimage_of_submodule_is_submodule() {
        let z12 = module(12, &[12]);
        let z4 = module(12, &[4]);
        for f in enumerate_homs(&z12, &z4) {
            for n in crisp::enumerate_submodules(&z4) {
                assert!(crisp::is_submodule(&f.preimage_set(&n).unwrap()));
            }
        }
    }

    #[test]
    fn sub_and_quotient() {
        let z12 = module(12, &[12]);
        let n = CrispSubset::from_elements(&z12, [0, 4, 8]).unwrap();
        let (sub, inc) = submodule_inclusion(&n).unwrap();
        assert_eq!(sub.len(), 3);
        assert_eq!(inc.map(), [0, 4, 8]);
        let (quot, proj) = quotient_projection(&n).unwrap();
        assert_eq!(quot.len(), 4);
        assert!(proj.is_epimorphism());
        assert_eq!(proj.kernel(), n);
    }
}
