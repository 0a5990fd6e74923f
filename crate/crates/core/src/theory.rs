//! IF submodules and ideals, the radical `√A`, the residual `Ā = (A : M)`,
//! and the primary / weakly primary / prime predicates.
//!
//! Radicals are computed from the distinct powers of each scalar. For an IF
//! submodule the inner value `⋀_m A(rⁿ·m)` can only grow with `n`, so the
//! supremum is reached at the last distinct power, which sits in the
//! terminal cycle of `r, r², …`.

use std::fmt;

use thiserror::Error;

use crate::algebra::{is_prime_submodule, AlgebraError, Carrier, Elem};
use crate::degree::{CutSpec, DegreeError, DegreePair, Rational};
use crate::ifs::{IfSet, IfsError};

/// How the two alternatives of the primary conditions are read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// `[μ-equality and ν-equality] or [μ-bound and ν-bound]`.
    #[default]
    Joint,
    /// `[μ-equality or μ-bound] and [ν-equality or ν-bound]`.
    Componentwise,
}

impl Pairing {
    pub fn other(self) -> Pairing {
        match self {
            Pairing::Joint => Pairing::Componentwise,
            Pairing::Componentwise => Pairing::Joint,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Pairing::Joint => "joint",
            Pairing::Componentwise => "componentwise",
        }
    }
}

impl std::str::FromStr for Pairing {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "joint" => Ok(Pairing::Joint),
            "componentwise" => Ok(Pairing::Componentwise),
            other => Err(format!("unknown pairing mode {other:?}")),
        }
    }
}

/// Which notion of IF prime ideal the prime predicate uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PrimeDefinition {
    /// `μ(xy) ∈ {μ(x), μ(y)}` and `ν(xy) ∈ {ν(x), ν(y)}` for all `x, y`.
    #[default]
    WeaklyCompletelyPrime,
    /// Every proper `(α, β)`-cut with `(α, β) ∈ Im μ × Im ν` is a prime ideal.
    LevelCuts,
}

impl PrimeDefinition {
    pub fn other(self) -> PrimeDefinition {
        match self {
            PrimeDefinition::WeaklyCompletelyPrime => PrimeDefinition::LevelCuts,
            PrimeDefinition::LevelCuts => PrimeDefinition::WeaklyCompletelyPrime,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PrimeDefinition::WeaklyCompletelyPrime => "weakly-completely-prime",
            PrimeDefinition::LevelCuts => "level-cuts",
        }
    }
}

impl std::str::FromStr for PrimeDefinition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "weakly-completely-prime" => Ok(PrimeDefinition::WeaklyCompletelyPrime),
            "level-cuts" => Ok(PrimeDefinition::LevelCuts),
            other => Err(format!("unknown prime definition {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    /// `A(θ) = (1, 0)`.
    Zero,
    /// `A(x + y) ⊇ A(x) ∩ A(y)`.
    Additive,
    /// `A(r·x) ⊇ A(x)`.
    Scalar,
    /// `A(x − y) ⊇ A(x) ∩ A(y)`.
    Difference,
    /// `A(xy) ⊇ A(x) ∪ A(y)`.
    Product,
    Primary,
    WeaklyPrimary,
    Prime,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::Zero => "zero",
            Clause::Additive => "additive",
            Clause::Scalar => "scalar",
            Clause::Difference => "difference",
            Clause::Product => "product",
            Clause::Primary => "primary",
            Clause::WeaklyPrimary => "weakly-primary",
            Clause::Prime => "prime",
        };
        f.write_str(s)
    }
}

/// The tuple that violates a predicate, with the degrees on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub clause: Clause,
    pub elements: Vec<(&'static str, Elem)>,
    pub values: Vec<(String, DegreePair)>,
}

impl Witness {
    pub fn element(&self, name: &str) -> Option<Elem> {
        self.elements.iter().find(|(n, _)| *n == name).map(|&(_, e)| e)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.clause)?;
        for (name, e) in &self.elements {
            write!(f, " {name}={e}")?;
        }
        if !self.values.is_empty() {
            f.write_str(" |")?;
            for (name, d) in &self.values {
                write!(f, " {name}={d}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of an IF predicate. A witness is present exactly when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PredicateVerdict {
    pub fn pass() -> Self {
        PredicateVerdict { holds: true, witness: None }
    }

    pub fn fail(w: Witness) -> Self {
        PredicateVerdict { holds: false, witness: Some(w) }
    }

    fn from_option(w: Option<Witness>) -> Self {
        w.map_or_else(Self::pass, Self::fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("not an IF submodule: {0}")]
    NotIfSubmodule(Witness),
    #[error("not an IF ideal: {0}")]
    NotIfIdeal(Witness),
    #[error("operation needs a ring carrier, got {0}")]
    NeedsRingCarrier(String),
    #[error("radical at {elem} is not a degree pair: {source}")]
    Degree { elem: Elem, source: DegreeError },
    #[error(transparent)]
    Ifs(#[from] IfsError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn w(clause: Clause, elements: Vec<(&'static str, Elem)>, values: Vec<(&str, DegreePair)>) -> Witness {
    let values = values.into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    Witness { clause, elements, values }
}

/// IF submodule test: `A(θ) = (1,0)`, additive and scalar closure.
pub fn is_if_submodule(a: &IfSet) -> PredicateVerdict {
    let c = a.carrier();
    let theta = c.zero();
    if a.at(theta) != DegreePair::TOP {
        return PredicateVerdict::fail(w(Clause::Zero, vec![("x", theta)], vec![("A(x)", a.at(theta))]));
    }
    for x in c.elements() {
        for y in c.elements() {
            let s = c.add(x, y);
            if !a.at(x).meet(&a.at(y)).le(&a.at(s)) {
                return PredicateVerdict::fail(w(
                    Clause::Additive,
                    vec![("x", x), ("y", y)],
                    vec![("A(x)", a.at(x)), ("A(y)", a.at(y)), ("A(x+y)", a.at(s))],
                ));
            }
        }
    }
    for r in c.ring().elements() {
        for x in c.elements() {
            let rx = c.act(r, x);
            if !a.at(x).le(&a.at(rx)) {
                return PredicateVerdict::fail(w(
                    Clause::Scalar,
                    vec![("r", r), ("x", x)],
                    vec![("A(x)", a.at(x)), ("A(r·x)", a.at(rx))],
                ));
            }
        }
    }
    PredicateVerdict::pass()
}

fn require_ring(a: &IfSet) -> Result<(), TheoryError> {
    if a.carrier().is_ring() {
        Ok(())
    } else {
        Err(TheoryError::NeedsRingCarrier(a.carrier().name()))
    }
}

/// IF ideal test on a ring carrier: difference and product closure.
pub fn is_if_ideal(a: &IfSet) -> Result<PredicateVerdict, TheoryError> {
    require_ring(a)?;
    let ring = a.carrier().ring();
    for x in ring.elements() {
        for y in ring.elements() {
            let d = ring.sub(x, y);
            if !a.at(x).meet(&a.at(y)).le(&a.at(d)) {
                return Ok(PredicateVerdict::fail(w(
                    Clause::Difference,
                    vec![("x", x), ("y", y)],
                    vec![("A(x)", a.at(x)), ("A(y)", a.at(y)), ("A(x-y)", a.at(d))],
                )));
            }
            let p = ring.mul(x, y);
            if !a.at(x).join(&a.at(y)).le(&a.at(p)) {
                return Ok(PredicateVerdict::fail(w(
                    Clause::Product,
                    vec![("x", x), ("y", y)],
                    vec![("A(x)", a.at(x)), ("A(y)", a.at(y)), ("A(xy)", a.at(p))],
                )));
            }
        }
    }
    Ok(PredicateVerdict::pass())
}

fn require_submodule(a: &IfSet) -> Result<(), TheoryError> {
    match is_if_submodule(a).witness {
        None => Ok(()),
        Some(wit) => Err(TheoryError::NotIfSubmodule(wit)),
    }
}

fn require_ideal(a: &IfSet) -> Result<(), TheoryError> {
    match is_if_ideal(a)?.witness {
        None => Ok(()),
        Some(wit) => Err(TheoryError::NotIfIdeal(wit)),
    }
}

/// `(⋀_m μ(s·m), ⋁_m ν(s·m))`.
fn inner(a: &IfSet, s: Elem) -> DegreePair {
    let c = a.carrier();
    c.elements().map(|m| a.at(c.act(s, m))).reduce(|x, y| x.meet(&y)).expect("carriers are nonempty")
}

/// Per-scalar record of the radical computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalStep {
    pub powers: Vec<Elem>,
    pub inner: Vec<DegreePair>,
    pub attained: DegreePair,
}

/// The full power scan behind a radical, one [`RadicalStep`] per ring element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalTrace {
    pub steps: Vec<RadicalStep>,
    radical: IfSet,
}

impl RadicalTrace {
    pub fn radical(&self) -> &IfSet {
        &self.radical
    }

    pub fn into_radical(self) -> IfSet {
        self.radical
    }
}

/// `√A(r) = (⋁_n ⋀_m μ(rⁿ·m), ⋀_n ⋁_m ν(rⁿ·m))` for an IF submodule `A`,
/// evaluated at the last distinct power of each `r`.
pub fn radical(a: &IfSet) -> Result<IfSet, TheoryError> {
    require_submodule(a)?;
    Ok(radical_unchecked(a))
}

fn radical_unchecked(a: &IfSet) -> IfSet {
    let ring = a.carrier().ring().clone();
    let rc = Carrier::Ring(ring.clone());
    IfSet::from_fn(&rc, |r| {
        let powers = ring.distinct_powers(r);
        inner(a, *powers.last().expect("at least r itself"))
    })
}

/// Same value as [`radical`], but scanning every distinct power and keeping
/// the intermediate values. Panics if the inner sequence is not monotone,
/// which cannot happen for an IF submodule.
pub fn radical_trace(a: &IfSet) -> Result<RadicalTrace, TheoryError> {
    require_submodule(a)?;
    let ring = a.carrier().ring().clone();
    let mut steps = Vec::with_capacity(ring.len());
    for r in ring.elements() {
        let powers = ring.distinct_powers(r);
        let inner: Vec<DegreePair> = powers.iter().map(|&p| inner(a, p)).collect();
        assert!(
            inner.windows(2).all(|pair| pair[0].le(&pair[1])),
            "radical inner sequence must be monotone for an IF submodule"
        );
        let attained = inner.iter().copied().reduce(|x, y| x.join(&y)).expect("nonempty");
        steps.push(RadicalStep { powers, inner, attained });
    }
    let rc = Carrier::Ring(ring);
    let radical = IfSet::from_fn(&rc, |r| steps[r].attained);
    Ok(RadicalTrace { steps, radical })
}

/// The radical formula applied to an arbitrary IF subset: `μ` is maximised
/// and `ν` minimised over the distinct powers independently. Fails when the
/// two extremes do not form a valid degree pair.
pub fn radical_relaxed(a: &IfSet) -> Result<IfSet, TheoryError> {
    let ring = a.carrier().ring().clone();
    let mut degrees = Vec::with_capacity(ring.len());
    for r in ring.elements() {
        let values: Vec<DegreePair> = ring.distinct_powers(r).into_iter().map(|p| inner(a, p)).collect();
        let mu = values.iter().map(|d| d.mu()).max().expect("nonempty");
        let nu = values.iter().map(|d| d.nu()).min().expect("nonempty");
        degrees.push(DegreePair::new(mu, nu).map_err(|source| TheoryError::Degree { elem: r, source })?);
    }
    Ok(IfSet::new(Carrier::Ring(ring), degrees)?)
}

/// Radical of an IF ideal via its own powers: `√μ(r) = ⋁_n μ(rⁿ)`,
/// `√ν(r) = ⋀_n ν(rⁿ)`.
pub fn ideal_radical(a: &IfSet) -> Result<IfSet, TheoryError> {
    require_ring(a)?;
    let ring = a.carrier().ring().clone();
    let mut degrees = Vec::with_capacity(ring.len());
    for r in ring.elements() {
        let powers = ring.distinct_powers(r);
        let mu = powers.iter().map(|&p| a.mu(p)).max().expect("nonempty");
        let nu = powers.iter().map(|&p| a.nu(p)).min().expect("nonempty");
        degrees.push(DegreePair::new(mu, nu).map_err(|source| TheoryError::Degree { elem: r, source })?);
    }
    Ok(IfSet::new(a.carrier().clone(), degrees)?)
}

/// `Ā(r) = (⋀_m μ(r·m), ⋁_m ν(r·m))`, an IF subset of the ring.
pub fn bar_residual(a: &IfSet) -> IfSet {
    let ring = a.carrier().ring().clone();
    IfSet::from_fn(&Carrier::Ring(ring), |r| inner(a, r))
}

fn paired(pairing: Pairing, eq: (bool, bool), bound: (bool, bool)) -> bool {
    match pairing {
        Pairing::Joint => (eq.0 && eq.1) || (bound.0 && bound.1),
        Pairing::Componentwise => (eq.0 || bound.0) && (eq.1 || bound.1),
    }
}

/// The primary condition at one `(r, m)`, given the radical of `a`.
pub fn primary_clause(a: &IfSet, rad: &IfSet, r: Elem, m: Elem, pairing: Pairing) -> bool {
    let rm = a.at(a.carrier().act(r, m));
    let am = a.at(m);
    let root = rad.at(r);
    paired(pairing, (rm.mu() == am.mu(), rm.nu() == am.nu()), (rm.mu() <= root.mu(), rm.nu() >= root.nu()))
}

/// Primary check with a caller-supplied radical of `a`.
pub fn primary_given_radical(a: &IfSet, rad: &IfSet, pairing: Pairing) -> PredicateVerdict {
    let c = a.carrier();
    for r in c.ring().elements() {
        for m in c.elements() {
            if !primary_clause(a, rad, r, m, pairing) {
                return PredicateVerdict::fail(w(
                    Clause::Primary,
                    vec![("r", r), ("m", m)],
                    vec![("A(r·m)", a.at(c.act(r, m))), ("A(m)", a.at(m)), ("√A(r)", rad.at(r))],
                ));
            }
        }
    }
    PredicateVerdict::pass()
}

/// IF primary submodule: for all `r, m`, either `A(r·m) = A(m)` or
/// `A(r·m) ⊆ √A(r)`, combined according to `pairing`.
pub fn is_primary(a: &IfSet, pairing: Pairing) -> Result<PredicateVerdict, TheoryError> {
    let rad = radical(a)?;
    Ok(primary_given_radical(a, &rad, pairing))
}

/// Smallest exponents (1-based, over the distinct powers of `y`) meeting
/// the weakly primary bound at `(x, y)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WeakExponents {
    pub mu: Option<usize>,
    pub nu: Option<usize>,
    pub common: Option<usize>,
}

pub fn weakly_primary_exponents(a: &IfSet, x: Elem, y: Elem) -> WeakExponents {
    let ring = a.carrier().ring();
    let xy = a.at(ring.mul(x, y));
    let powers = ring.distinct_powers(y);
    let find = |pred: &dyn Fn(DegreePair) -> bool| powers.iter().position(|&p| pred(a.at(p))).map(|i| i + 1);
    WeakExponents {
        mu: find(&|d| xy.mu() <= d.mu()),
        nu: find(&|d| xy.nu() >= d.nu()),
        common: find(&|d| xy.mu() <= d.mu() && xy.nu() >= d.nu()),
    }
}

/// IF weakly primary ideal: for all `x, y`, `A(xy) = A(x)` or
/// `A(xy) ⊆ A(yⁿ)` for some `n`. Under joint pairing the bound must hold at
/// one common exponent for both degrees.
pub fn is_weakly_primary_ideal(a: &IfSet, pairing: Pairing) -> Result<PredicateVerdict, TheoryError> {
    require_ideal(a)?;
    let ring = a.carrier().ring();
    for x in ring.elements() {
        for y in ring.elements() {
            let xy = a.at(ring.mul(x, y));
            let ax = a.at(x);
            let eq = (xy.mu() == ax.mu(), xy.nu() == ax.nu());
            let exps = weakly_primary_exponents(a, x, y);
            let ok = match pairing {
                Pairing::Joint => (eq.0 && eq.1) || exps.common.is_some(),
                Pairing::Componentwise => (eq.0 || exps.mu.is_some()) && (eq.1 || exps.nu.is_some()),
            };
            if !ok {
                let mut wit = w(Clause::WeaklyPrimary, vec![("x", x), ("y", y)], vec![("A(xy)", xy), ("A(x)", ax)]);
                for (i, p) in ring.distinct_powers(y).into_iter().enumerate() {
                    wit.values.push((format!("A(y^{})", i + 1), a.at(p)));
                }
                return Ok(PredicateVerdict::fail(wit));
            }
        }
    }
    Ok(PredicateVerdict::pass())
}

/// IF prime ideal under the chosen definition.
pub fn is_if_prime_ideal(a: &IfSet, definition: PrimeDefinition) -> Result<PredicateVerdict, TheoryError> {
    require_ideal(a)?;
    let ring = a.carrier().ring();
    match definition {
        PrimeDefinition::WeaklyCompletelyPrime => {
            let bad = ring.elements().find_map(|x| {
                ring.elements().find_map(|y| {
                    let (ax, ay, axy) = (a.at(x), a.at(y), a.at(ring.mul(x, y)));
                    let mu_ok = axy.mu() == ax.mu() || axy.mu() == ay.mu();
                    let nu_ok = axy.nu() == ax.nu() || axy.nu() == ay.nu();
                    (!(mu_ok && nu_ok)).then(|| {
                        w(Clause::Prime, vec![("x", x), ("y", y)], vec![("A(x)", ax), ("A(y)", ay), ("A(xy)", axy)])
                    })
                })
            });
            Ok(PredicateVerdict::from_option(bad))
        }
        PrimeDefinition::LevelCuts => {
            for alpha in a.mu_values() {
                for beta in a.nu_values() {
                    let Ok(spec) = CutSpec::new(alpha, beta, false) else { continue };
                    let cut = a.cut(spec);
                    if cut.is_full() {
                        continue;
                    }
                    if let Some((x, y)) = is_prime_submodule(&cut)?.witness {
                        let pair = DegreePair::new(alpha, beta).expect("checked by CutSpec");
                        return Ok(PredicateVerdict::fail(w(
                            Clause::Prime,
                            vec![("x", x), ("y", y)],
                            vec![("cut", pair), ("A(x)", a.at(x)), ("A(y)", a.at(y))],
                        )));
                    }
                }
            }
            Ok(PredicateVerdict::pass())
        }
    }
}

/// Sup property of an IF subset of a finite carrier.
///
/// Always true here: every subset of a finite carrier is finite, so each
/// degree attains its supremum / infimum on it.
pub fn has_sup_property(_a: &IfSet) -> bool {
    true
}

/// Result of [`sup_attainment`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupAttainment {
    pub subsets: usize,
    /// `sup μ` and `inf ν` are each attained on every subset.
    pub separately: bool,
    /// Some single element attains both at once on every subset.
    pub jointly: bool,
}

/// Checks attainment over every nonempty subset of the image of `A`.
/// Returns `None` when the image has more than 12 distinct pairs.
pub fn sup_attainment(a: &IfSet) -> Option<SupAttainment> {
    let image = a.image_pairs();
    if image.len() > 12 {
        return None;
    }
    let mut report = SupAttainment { subsets: 0, separately: true, jointly: true };
    for mask in 1u32..(1 << image.len()) {
        let subset: Vec<DegreePair> =
            image.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, d)| *d).collect();
        let sup_mu: Rational = subset.iter().map(|d| d.mu()).max().expect("nonempty");
        let inf_nu: Rational = subset.iter().map(|d| d.nu()).min().expect("nonempty");
        report.subsets += 1;
        report.separately &= subset.iter().any(|d| d.mu() == sup_mu) && subset.iter().any(|d| d.nu() == inf_nu);
        report.jointly &= subset.iter().any(|d| d.mu() == sup_mu && d.nu() == inf_nu);
    }
    Some(report)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{crisp_radical, is_primary_submodule, CrispSubset, FinModule, FiniteRing};
    use crate::degree::DegreePair as D;

    fn module(n: usize) -> Carrier {
        let r = Arc::new(FiniteRing::cyclic(n).unwrap());
        Carrier::module(FinModule::product(r, &[n]).unwrap())
    }

    fn ring(n: usize) -> Carrier {
        Carrier::Ring(Arc::new(FiniteRing::cyclic(n).unwrap()))
    }

    fn half() -> D {
        D::frac((1, 2), (1, 2))
    }

    fn z4_paper() -> IfSet {
        IfSet::new(module(4), vec![D::TOP, D::BOTTOM, half(), D::BOTTOM]).unwrap()
    }

    fn z12_paper() -> IfSet {
        IfSet::from_fn(&module(12), |x| match x {
            0 | 4 | 8 => D::TOP,
            2 | 6 | 10 => half(),
            _ => D::BOTTOM,
        })
    }

    fn z6_paper() -> IfSet {
        IfSet::from_fn(&module(6), |x| match x {
            0 => D::TOP,
            2 | 4 => D::frac((3, 10), (1, 2)),
            _ => D::BOTTOM,
        })
    }

    fn chi(c: &Carrier, xs: &[Elem]) -> IfSet {
        IfSet::characteristic(&CrispSubset::from_elements(c, xs.iter().copied()).unwrap())
    }

    #[test]
    fn submodule_predicate() {
        assert!(is_if_submodule(&z4_paper()).holds);
        assert!(is_if_submodule(&z12_paper()).holds);
        let mut d = z4_paper().degrees().to_vec();
        d[0] = D::frac((1, 2), (0, 1));
        let v = is_if_submodule(&z4_paper().with_degrees(d).unwrap());
        assert_eq!(v.witness.unwrap().clause, Clause::Zero);
    }

    #[test]
    fn ideal_predicate() {
        let z4 = ring(4);
        let v = is_if_ideal(&chi(&z4, &[0, 1])).unwrap();
        let wit = v.witness.unwrap();
        assert_eq!(wit.clause, Clause::Difference);
        // re-check: A(x - y) must be strictly below A(x) ∩ A(y)
        let (x, y) = (wit.element("x").unwrap(), wit.element("y").unwrap());
        let a = chi(&z4, &[0, 1]);
        assert!(!a.at(x).meet(&a.at(y)).le(&a.at((x + 4 - y) % 4)));
        assert!(is_if_ideal(&IfSet::constant(&z4, D::TOP)).unwrap().holds);
        assert!(is_if_ideal(&z4_paper()).is_err());
        assert!(is_if_ideal(&bar_residual(&z12_paper())).unwrap().holds);
    }

    #[test]
    fn radical_of_paper_examples() {
        let r4 = radical(&z4_paper()).unwrap();
        assert_eq!(r4.to_string(), "0: 1,0 | 1: 0,1 | 2: 1,0 | 3: 0,1");
        let r12 = radical(&z12_paper()).unwrap();
        for z in 0..12 {
            assert_eq!(r12.at(z), if z % 2 == 0 { D::TOP } else { D::BOTTOM });
        }
        let r6 = radical(&z6_paper()).unwrap();
        assert_eq!(r6.at(2), D::frac((3, 10), (1, 2)));
        let full = IfSet::constant(&module(6), D::TOP);
        assert!(radical(&full).unwrap().degrees().iter().all(|d| *d == D::TOP));
    }

    #[test]
    fn radical_rejects_non_submodules_but_relaxed_computes() {
        let a = chi(&module(4), &[0, 1]);
        assert!(matches!(radical(&a), Err(TheoryError::NotIfSubmodule(_))));
        assert!(radical_relaxed(&a).is_ok());
    }

    #[test]
    fn trace_agrees_with_shortcut() {
        for a in [z4_paper(), z12_paper(), z6_paper()] {
            let trace = radical_trace(&a).unwrap();
            assert_eq!(trace.radical(), &radical(&a).unwrap());
            assert_eq!(trace.radical(), &radical_relaxed(&a).unwrap());
        }
        let t = radical_trace(&z6_paper()).unwrap();
        assert_eq!(t.steps[2].powers, vec![2, 4]);
    }

    #[test]
    fn degenerate_module() {
        let r = Arc::new(FiniteRing::cyclic(4).unwrap());
        let trivial = Carrier::module(FinModule::product(r, &[1]).unwrap());
        let a = IfSet::constant(&trivial, D::TOP);
        assert!(radical(&a).unwrap().degrees().iter().all(|d| *d == D::TOP));
    }

    #[test]
    fn bar_of_paper_examples() {
        let b = bar_residual(&z12_paper());
        for z in 0..12 {
            let expected = match z {
                0 | 4 | 8 => D::TOP,
                2 | 6 | 10 => half(),
                _ => D::BOTTOM,
            };
            assert_eq!(b.at(z), expected, "z = {z}");
        }
        let b4 = bar_residual(&z4_paper());
        assert_eq!(b4.degrees(), &[D::TOP, D::BOTTOM, half(), D::BOTTOM]);
        assert!(bar_residual(&IfSet::constant(&module(4), D::TOP)).degrees().iter().all(|d| *d == D::TOP));
    }

    #[test]
    fn primary_paper_examples() {
        assert!(is_primary(&z4_paper(), Pairing::Joint).unwrap().holds);
        assert!(is_primary(&z12_paper(), Pairing::Joint).unwrap().holds);
        let v = is_primary(&z6_paper(), Pairing::Joint).unwrap();
        let wit = v.witness.unwrap();
        assert_eq!((wit.element("r"), wit.element("m")), (Some(2), Some(3)));
        assert_eq!(wit.values[0].1, D::TOP);
        assert_eq!(wit.values[2].1, D::frac((3, 10), (1, 2)));
        assert!(is_primary(&IfSet::constant(&module(6), D::TOP), Pairing::Joint).unwrap().holds);
    }

    #[test]
    fn characteristic_primary_matches_crisp() {
        let c = module(12);
        for xs in [&[0, 4, 8][..], &[0, 6], &[0, 2, 4, 6, 8, 10], &[0, 3, 6, 9], &[0]] {
            let n = CrispSubset::from_elements(&c, xs.iter().copied()).unwrap();
            let fuzzy = is_primary(&IfSet::characteristic(&n), Pairing::Joint).unwrap().holds;
            assert_eq!(fuzzy, is_primary_submodule(&n).unwrap().holds, "{n}");
            let rad = radical(&IfSet::characteristic(&n)).unwrap();
            assert_eq!(rad, IfSet::characteristic(&crisp_radical(&n).unwrap()));
        }
    }

    #[test]
    fn weakly_primary() {
        let bar = bar_residual(&z12_paper());
        assert!(is_weakly_primary_ideal(&bar, Pairing::Joint).unwrap().holds);
        let six = chi(&ring(12), &[0, 6]);
        let v = is_weakly_primary_ideal(&six, Pairing::Joint).unwrap();
        assert!(!v.holds);
        assert!(is_weakly_primary_ideal(&IfSet::constant(&ring(12), D::TOP), Pairing::Joint).unwrap().holds);
        let e = weakly_primary_exponents(&bar, 2, 10);
        assert_eq!(e, WeakExponents { mu: Some(2), nu: Some(2), common: Some(2) });
    }

    #[test]
    fn prime_ideal() {
        let even = chi(&ring(12), &[0, 2, 4, 6, 8, 10]);
        assert!(is_if_prime_ideal(&even, PrimeDefinition::WeaklyCompletelyPrime).unwrap().holds);
        assert!(is_if_prime_ideal(&even, PrimeDefinition::LevelCuts).unwrap().holds);
        let four = chi(&ring(12), &[0, 4, 8]);
        let v = is_if_prime_ideal(&four, PrimeDefinition::WeaklyCompletelyPrime).unwrap();
        assert!(!v.holds);
        assert!(!is_if_prime_ideal(&four, PrimeDefinition::LevelCuts).unwrap().holds);
        let top = IfSet::constant(&ring(12), D::TOP);
        assert!(is_if_prime_ideal(&top, PrimeDefinition::WeaklyCompletelyPrime).unwrap().holds);
    }

    #[test]
    fn sup_property() {
        assert!(has_sup_property(&z12_paper()));
        let s = sup_attainment(&z4_paper()).unwrap();
        assert_eq!(s, SupAttainment { subsets: 7, separately: true, jointly: true });
    }
}
