//! Counterexample minimisation. A candidate replaces the current instance
//! only if it is well formed and still fails on both evaluation routes.

use ifmod_core::algebra::{enumerate_submodules, quotient_projection, submodule_inclusion, CrispSubset};
use ifmod_core::{DegreePair, IfSet};

use crate::catalog::LawId;
use crate::generate::alphabet;
use crate::laws::{evaluate, Ctx, Instance};
use crate::oracle;

pub const MAX_STEPS: usize = 64;

/// Fails on both routes, with every IF subset still an IF submodule.
pub fn confirmed(law: LawId, fast: &Ctx<'_>, slow: &Ctx<'_>, inst: &Instance) -> bool {
    inst.ifsets().iter().all(|a| oracle::is_if_submodule(a))
        && evaluate(law, fast, inst).is_fail()
        && evaluate(law, slow, inst).is_fail()
}

/// Greedy shrink; returns the smallest instance reached and the number of
/// accepted steps.
pub fn shrink(law: LawId, fast: &Ctx<'_>, slow: &Ctx<'_>, start: &Instance) -> (Instance, usize) {
    let mut current = start.clone();
    let mut steps = 0;
    while steps < MAX_STEPS {
        let next = candidates(&current, fast.grid).into_iter().find(|c| confirmed(law, fast, slow, c));
        match next {
            Some(c) => {
                current = c;
                steps += 1;
            }
            None => break,
        }
    }
    (current, steps)
}

fn candidates(inst: &Instance, grid: &[ifmod_core::Rational]) -> Vec<Instance> {
    let mut out = Vec::new();
    match inst {
        Instance::Single(a) => {
            out.extend(restrictions(&[a]).into_iter().map(|mut v| Instance::Single(v.remove(0))));
            out.extend(lowerings(a, grid).into_iter().map(Instance::Single));
        }
        Instance::Pair(a, b) => {
            out.extend(restrictions(&[a, b]).into_iter().map(|mut v| {
                let b2 = v.pop().expect("two");
                Instance::Pair(v.pop().expect("two"), b2)
            }));
            out.extend(lowerings(a, grid).into_iter().map(|a2| Instance::Pair(a2, b.clone())));
            out.extend(lowerings(b, grid).into_iter().map(|b2| Instance::Pair(a.clone(), b2)));
        }
        Instance::Hom(f, a) => {
            out.extend(lowerings(a, grid).into_iter().map(|a2| Instance::Hom(f.clone(), a2)));
        }
        Instance::Crisp(_) => {}
    }
    out
}

/// The same IF subsets restricted to each proper submodule and pushed to
/// each proper quotient, smallest carriers first.
fn restrictions(sets: &[&IfSet]) -> Vec<Vec<IfSet>> {
    let carrier = sets[0].carrier();
    let mut out: Vec<Vec<IfSet>> = Vec::new();
    let subs: Vec<CrispSubset> = enumerate_submodules(carrier);
    for k in &subs {
        if k.is_full() {
            continue;
        }
        if let Ok((_, inc)) = submodule_inclusion(k) {
            out.push(sets.iter().map(|a| a.preimage(&inc).expect("over M")).collect());
        }
        if k.len() > 1 {
            if let Ok((_, proj)) = quotient_projection(k) {
                out.push(sets.iter().map(|a| a.image(&proj).expect("over M")).collect());
            }
        }
    }
    out.sort_by_key(|v| v[0].carrier().len());
    out
}

/// Merges of one degree value into a smaller one, then single-element
/// lowerings, each strictly decreasing the degree vector.
fn lowerings(a: &IfSet, grid: &[ifmod_core::Rational]) -> Vec<IfSet> {
    let mut out = Vec::new();
    let image = a.image_pairs();
    for &v in &image {
        for &w in &image {
            if w.shrink_key() < v.shrink_key() {
                let d: Vec<DegreePair> = a.degrees().iter().map(|&x| if x == v { w } else { x }).collect();
                out.push(a.with_degrees(d).expect("valid pairs"));
            }
        }
    }
    let mut letters = alphabet(grid);
    letters.extend(image);
    letters.sort_by_key(|d| d.shrink_key());
    letters.dedup();
    let theta = a.carrier().zero();
    for x in a.carrier().elements().filter(|&x| x != theta) {
        for &d in letters.iter().filter(|d| d.shrink_key() < a.at(x).shrink_key()) {
            let mut deg = a.degrees().to_vec();
            deg[x] = d;
            out.push(a.with_degrees(deg).expect("valid pairs"));
        }
    }
    out
}
