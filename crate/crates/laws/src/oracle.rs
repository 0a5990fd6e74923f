//! Definitional evaluation: every quantity is recomputed from its defining
//! formula with explicit loops, no cycle shortcuts and no shared helpers
//! from the optimized code path beyond table lookups.

use ifmod_core::algebra::{Carrier, CrispSubset, Elem};
use ifmod_core::theory::{Pairing, PrimeDefinition};
use ifmod_core::{CutSpec, DegreePair, IfSet, Rational};

fn power(c: &Carrier, r: Elem, n: usize) -> Elem {
    let ring = c.ring();
    let mut p = r;
    for _ in 1..n {
        p = ring.mul(p, r);
    }
    p
}

pub fn is_if_submodule(a: &IfSet) -> bool {
    let c = a.carrier();
    if a.mu(c.zero()) != Rational::from_integer(1) || a.nu(c.zero()) != Rational::from_integer(0) {
        return false;
    }
    for x in c.elements() {
        for y in c.elements() {
            let s = c.add(x, y);
            if a.mu(s) < a.mu(x).min(a.mu(y)) || a.nu(s) > a.nu(x).max(a.nu(y)) {
                return false;
            }
        }
        for r in c.ring().elements() {
            let rx = c.act(r, x);
            if a.mu(rx) < a.mu(x) || a.nu(rx) > a.nu(x) {
                return false;
            }
        }
    }
    true
}

pub fn is_if_ideal(a: &IfSet) -> bool {
    let ring = a.carrier().ring();
    for x in ring.elements() {
        for y in ring.elements() {
            let d = ring.sub(x, y);
            let p = ring.mul(x, y);
            if a.mu(d) < a.mu(x).min(a.mu(y)) || a.nu(d) > a.nu(x).max(a.nu(y)) {
                return false;
            }
            if a.mu(p) < a.mu(x).max(a.mu(y)) || a.nu(p) > a.nu(x).min(a.nu(y)) {
                return false;
            }
        }
    }
    true
}

fn over_ring(a: &IfSet, f: impl Fn(Elem) -> (Rational, Rational)) -> IfSet {
    let ring = Carrier::Ring(a.carrier().ring().clone());
    IfSet::from_fn(&ring, |r| {
        let (mu, nu) = f(r);
        DegreePair::new(mu, nu).expect("oracle degrees stay in range")
    })
}

/// `√A` straight from the formula, `n = 1..=|R|`, with `μ` and `ν`
/// extremised independently.
pub fn brute_radical(a: &IfSet) -> IfSet {
    let c = a.carrier();
    let k = c.ring().len();
    over_ring(a, |r| {
        let mut best_mu = Rational::from_integer(0);
        let mut best_nu = Rational::from_integer(1);
        for n in 1..=k {
            let rn = power(c, r, n);
            let inner_mu = c.elements().map(|m| a.mu(c.act(rn, m))).min().expect("nonempty");
            let inner_nu = c.elements().map(|m| a.nu(c.act(rn, m))).max().expect("nonempty");
            best_mu = best_mu.max(inner_mu);
            best_nu = best_nu.min(inner_nu);
        }
        (best_mu, best_nu)
    })
}

pub fn radical(a: &IfSet) -> Option<IfSet> {
    is_if_submodule(a).then(|| brute_radical(a))
}

pub fn ideal_radical(a: &IfSet) -> IfSet {
    let c = a.carrier();
    let k = c.ring().len();
    over_ring(a, |r| {
        let mu = (1..=k).map(|n| a.mu(power(c, r, n))).max().expect("nonempty");
        let nu = (1..=k).map(|n| a.nu(power(c, r, n))).min().expect("nonempty");
        (mu, nu)
    })
}

pub fn bar(a: &IfSet) -> IfSet {
    let c = a.carrier();
    over_ring(a, |r| {
        let mu = c.elements().map(|m| a.mu(c.act(r, m))).min().expect("nonempty");
        let nu = c.elements().map(|m| a.nu(c.act(r, m))).max().expect("nonempty");
        (mu, nu)
    })
}

fn either(pairing: Pairing, eq_mu: bool, eq_nu: bool, bd_mu: bool, bd_nu: bool) -> bool {
    match pairing {
        Pairing::Joint => (eq_mu && eq_nu) || (bd_mu && bd_nu),
        Pairing::Componentwise => (eq_mu || bd_mu) && (eq_nu || bd_nu),
    }
}

pub fn is_primary(a: &IfSet, pairing: Pairing) -> Option<bool> {
    let rad = radical(a)?;
    let c = a.carrier();
    for r in c.ring().elements() {
        for m in c.elements() {
            let rm = c.act(r, m);
            let ok =
                either(pairing, a.mu(rm) == a.mu(m), a.nu(rm) == a.nu(m), a.mu(rm) <= rad.mu(r), a.nu(rm) >= rad.nu(r));
            if !ok {
                return Some(false);
            }
        }
    }
    Some(true)
}

pub fn is_weakly_primary(a: &IfSet, pairing: Pairing) -> Option<bool> {
    if !is_if_ideal(a) {
        return None;
    }
    let c = a.carrier();
    let ring = c.ring();
    let k = ring.len();
    for x in ring.elements() {
        for y in ring.elements() {
            let xy = ring.mul(x, y);
            let (eq_mu, eq_nu) = (a.mu(xy) == a.mu(x), a.nu(xy) == a.nu(x));
            let powers: Vec<Elem> = (1..=k).map(|n| power(c, y, n)).collect();
            let ok = match pairing {
                Pairing::Joint => {
                    (eq_mu && eq_nu) || powers.iter().any(|&p| a.mu(xy) <= a.mu(p) && a.nu(xy) >= a.nu(p))
                }
                Pairing::Componentwise => {
                    (eq_mu || powers.iter().any(|&p| a.mu(xy) <= a.mu(p)))
                        && (eq_nu || powers.iter().any(|&p| a.nu(xy) >= a.nu(p)))
                }
            };
            if !ok {
                return Some(false);
            }
        }
    }
    Some(true)
}

pub fn is_prime(a: &IfSet, definition: PrimeDefinition) -> Option<bool> {
    if !is_if_ideal(a) {
        return None;
    }
    let ring = a.carrier().ring();
    match definition {
        PrimeDefinition::WeaklyCompletelyPrime => Some(ring.elements().all(|x| {
            ring.elements().all(|y| {
                let p = ring.mul(x, y);
                (a.mu(p) == a.mu(x) || a.mu(p) == a.mu(y)) && (a.nu(p) == a.nu(x) || a.nu(p) == a.nu(y))
            })
        })),
        PrimeDefinition::LevelCuts => {
            for alpha in a.mu_values() {
                for beta in a.nu_values() {
                    let Ok(spec) = CutSpec::new(alpha, beta, false) else { continue };
                    let cut = cut(a, spec);
                    if cut.is_full() {
                        continue;
                    }
                    let colon = residual(&cut)?;
                    let prime = ring.elements().all(|x| {
                        ring.elements().all(|y| !cut.contains(ring.mul(x, y)) || cut.contains(y) || colon.contains(x))
                    });
                    if !prime {
                        return Some(false);
                    }
                }
            }
            Some(true)
        }
    }
}

pub fn cut(a: &IfSet, spec: CutSpec) -> CrispSubset {
    CrispSubset::from_predicate(a.carrier(), |x| {
        if spec.is_strict() {
            a.mu(x) > spec.alpha() && a.nu(x) < spec.beta()
        } else {
            a.mu(x) >= spec.alpha() && a.nu(x) <= spec.beta()
        }
    })
}

pub fn is_submodule(n: &CrispSubset) -> bool {
    let c = n.carrier();
    n.contains(c.zero())
        && c.elements().all(|x| {
            !n.contains(x)
                || (c.elements().all(|y| !n.contains(y) || n.contains(c.add(x, y)))
                    && c.ring().elements().all(|r| n.contains(c.act(r, x))))
        })
}

pub fn residual(n: &CrispSubset) -> Option<CrispSubset> {
    if !is_submodule(n) {
        return None;
    }
    let c = n.carrier();
    let ring = Carrier::Ring(c.ring().clone());
    Some(CrispSubset::from_predicate(&ring, |r| c.elements().all(|m| n.contains(c.act(r, m)))))
}

pub fn crisp_radical(n: &CrispSubset) -> Option<CrispSubset> {
    if !is_submodule(n) {
        return None;
    }
    let c = n.carrier();
    let k = c.ring().len();
    let ring = Carrier::Ring(c.ring().clone());
    Some(CrispSubset::from_predicate(&ring, |r| {
        (1..=k).any(|e| {
            let re = power(c, r, e);
            c.elements().all(|m| n.contains(c.act(re, m)))
        })
    }))
}

/// `None` when `n` is not a proper submodule.
pub fn is_primary_submodule(n: &CrispSubset) -> Option<bool> {
    if n.is_full() {
        return None;
    }
    let rad = crisp_radical(n)?;
    let c = n.carrier();
    Some(
        c.ring().elements().all(|r| c.elements().all(|m| !n.contains(c.act(r, m)) || n.contains(m) || rad.contains(r))),
    )
}
