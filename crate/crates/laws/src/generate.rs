//! Instance generators for IF submodules.
//!
//! The level sets `{x : μ(x) ≥ t}` of an IF submodule are submodules, and so
//! are the sets `{x : ν(x) ≤ t}`. Every IF submodule is therefore described by
//! a chain of submodules for `μ` and an independent chain for `ν`, each
//! labelled with monotone degrees. The chain generator builds exactly those
//! pairs; the exhaustive generator filters all total maps instead.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ifmod_core::algebra::{enumerate_submodules, Carrier, CrispSubset};
use ifmod_core::theory::is_if_submodule;
use ifmod_core::{DegreePair, IfSet, Rational};

/// Degree pairs over `grid` with `μ + ν ≤ 1`, ordered by `(μ, ν)`.
pub fn alphabet(grid: &[Rational]) -> Vec<DegreePair> {
    let mut out = Vec::new();
    for &mu in grid {
        for &nu in grid {
            if let Ok(d) = DegreePair::new(mu, nu) {
                out.push(d);
            }
        }
    }
    out.sort_by_key(|d| (d.mu(), d.nu()));
    out
}

/// All IF submodules with degrees in `grid`, by filtering every total map
/// with `A(θ) = (1,0)`. Output is in odometer order over the alphabet.
pub fn exhaustive(carrier: &Carrier, grid: &[Rational]) -> Vec<IfSet> {
    let alpha = alphabet(grid);
    let theta = carrier.zero();
    let free: Vec<usize> = carrier.elements().filter(|&x| x != theta).collect();
    let mut digits = vec![0usize; free.len()];
    let mut out = Vec::new();
    let mut degrees = vec![DegreePair::TOP; carrier.len()];
    loop {
        for (slot, &x) in free.iter().enumerate() {
            degrees[x] = alpha[digits[slot]];
        }
        let a = IfSet::new(carrier.clone(), degrees.clone()).expect("total");
        if is_if_submodule(&a).holds {
            out.push(a);
        }
        // odometer, last free element fastest
        let mut i = digits.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < alpha.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

fn sort_key(a: &IfSet) -> Vec<(Rational, Rational)> {
    a.degrees().iter().map(|d| (d.mu(), d.nu())).collect()
}

/// Every strictly descending chain `M = C₀ ⊋ C₁ ⊋ … ⊋ C_k`, as indices
/// into `subs` (which must contain `M` last in canonical order).
fn chains(subs: &[CrispSubset]) -> Vec<Vec<usize>> {
    fn extend(subs: &[CrispSubset], chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(chain.clone());
        let last = &subs[*chain.last().expect("nonempty")];
        for (i, s) in subs.iter().enumerate() {
            if s.len() < last.len() && s.is_subset_of(last) {
                chain.push(i);
                extend(subs, chain, out);
                chain.pop();
            }
        }
    }
    let top = subs.iter().position(|s| s.is_full()).expect("M is a submodule of itself");
    let mut out = Vec::new();
    extend(subs, &mut vec![top], &mut out);
    out
}

/// Increasing sequences of length `len` from `pool`, in lexicographic order.
fn combinations(pool: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &v) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[i + 1..], len - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

/// Degree of `x` under a chain labelled by `values`: the value of the
/// deepest chain member containing `x`.
fn level(subs: &[CrispSubset], chain: &[usize], values: &[Rational], x: usize) -> Rational {
    let depth = chain.iter().rposition(|&i| subs[i].contains(x)).expect("C0 = M");
    values[depth]
}

fn mu_labels(grid: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    let one = Rational::from_integer(1);
    let pool: Vec<Rational> = grid.iter().copied().filter(|&q| q != one).collect();
    combinations(&pool, len - 1)
        .into_iter()
        .map(|mut v| {
            v.push(one);
            v
        })
        .collect()
}

fn nu_labels(grid: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    let zero = Rational::from_integer(0);
    let pool: Vec<Rational> = grid.iter().copied().filter(|&q| q != zero).collect();
    combinations(&pool, len - 1)
        .into_iter()
        .map(|mut v| {
            v.reverse();
            v.push(zero);
            v
        })
        .collect()
}

/// Profiles `x ↦ degree` for every labelled chain.
fn profiles(
    carrier: &Carrier,
    subs: &[CrispSubset],
    all_chains: &[Vec<usize>],
    labels: impl Fn(usize) -> Vec<Vec<Rational>>,
) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for chain in all_chains {
        for values in labels(chain.len()) {
            out.push(carrier.elements().map(|x| level(subs, chain, &values, x)).collect());
        }
    }
    out
}

/// Every IF submodule with degrees in `grid`, built from independent `μ` and
/// `ν` chains and sorted like [`exhaustive`] would be after sorting.
pub fn chain_family(carrier: &Carrier, grid: &[Rational]) -> Vec<IfSet> {
    let subs = enumerate_submodules(carrier);
    let all_chains = chains(&subs);
    let mus = profiles(carrier, &subs, &all_chains, |len| mu_labels(grid, len));
    let nus = profiles(carrier, &subs, &all_chains, |len| nu_labels(grid, len));
    let mut out = Vec::new();
    for mu in &mus {
        for nu in &nus {
            let degrees: Option<Vec<DegreePair>> =
                mu.iter().zip(nu).map(|(&m, &n)| DegreePair::new(m, n).ok()).collect();
            if let Some(d) = degrees {
                let a = IfSet::new(carrier.clone(), d).expect("total");
                debug_assert!(is_if_submodule(&a).holds);
                out.push(a);
            }
        }
    }
    out.sort_by_key(sort_key);
    out.dedup();
    out
}

/// Sample number `index` of the seeded chain sampler. Each index draws from
/// its own ChaCha stream, so any prefix or single sample can be regenerated.
pub fn sample(carrier: &Carrier, subs: &[CrispSubset], grid: &[Rational], seed: u64, index: u64) -> IfSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let top = subs.iter().position(|s| s.is_full()).expect("M is a submodule of itself");
    let draw_chain = |rng: &mut ChaCha8Rng| {
        let max_len = grid.len().max(1);
        let mut chain = vec![top];
        while chain.len() < max_len && rng.gen_bool(0.75) {
            let last = &subs[*chain.last().expect("nonempty")];
            let below: Vec<usize> =
                (0..subs.len()).filter(|&i| subs[i].len() < last.len() && subs[i].is_subset_of(last)).collect();
            match below.choose(rng) {
                Some(&i) => chain.push(i),
                None => break,
            }
        }
        chain
    };
    let pick =
        |rng: &mut ChaCha8Rng, options: Vec<Vec<Rational>>| options.choose(rng).cloned().expect("grid holds 0 and 1");
    let mu_chain = draw_chain(&mut rng);
    let mu_values = pick(&mut rng, mu_labels(grid, mu_chain.len()));
    let mu: Vec<Rational> = carrier.elements().map(|x| level(subs, &mu_chain, &mu_values, x)).collect();
    for _ in 0..16 {
        let nu_chain = draw_chain(&mut rng);
        let nu_values = pick(&mut rng, nu_labels(grid, nu_chain.len()));
        let degrees: Option<Vec<DegreePair>> =
            carrier.elements().map(|x| DegreePair::new(mu[x], level(subs, &nu_chain, &nu_values, x)).ok()).collect();
        if let Some(d) = degrees {
            return IfSet::new(carrier.clone(), d).expect("total");
        }
    }
    // ν = 1 − μ always fits and keeps the level sets of μ
    let one = Rational::from_integer(1);
    let degrees = mu.iter().map(|&m| DegreePair::new(m, one - m).expect("complement")).collect();
    IfSet::new(carrier.clone(), degrees).expect("total")
}

/// The quantifier domain over one carrier: exhaustive when small, otherwise
/// `samples` seeded draws.
pub fn stream(carrier: &Carrier, grid: &[Rational], max_exhaustive: usize, samples: usize, seed: u64) -> Vec<IfSet> {
    if carrier.len() <= max_exhaustive {
        return exhaustive(carrier, grid);
    }
    let subs = enumerate_submodules(carrier);
    (0..samples as u64).map(|i| sample(carrier, &subs, grid, seed, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{parse_grid, ModuleSource};

    fn carrier(s: &str) -> Carrier {
        s.parse::<ModuleSource>().unwrap().build().unwrap()
    }

    #[test]
    fn alphabet_size() {
        assert_eq!(alphabet(&parse_grid("0,1/2,1").unwrap()).len(), 6);
        assert_eq!(alphabet(&parse_grid("0,1").unwrap()).len(), 3);
    }

    #[test]
    fn crisp_grid_gives_characteristic_functions() {
        let z2 = carrier("z2");
        let all = exhaustive(&z2, &parse_grid("0,1").unwrap());
        // μ and ν chains may differ: (1,0),(0,0) is allowed next to the two χ
        assert!(all.contains(&IfSet::characteristic(&CrispSubset::full(&z2))));
        assert!(all.contains(&IfSet::characteristic(&CrispSubset::from_elements(&z2, [0]).unwrap())));
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn trivial_module_has_one_instance() {
        let z1 = carrier("z1@z2");
        let all = exhaustive(&z1, &parse_grid("0,1/2,1").unwrap());
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].at(0), DegreePair::TOP);
        assert_eq!(chain_family(&z1, &parse_grid("0,1/2,1").unwrap()), all);
    }

    #[test]
    fn samples_are_sound_and_restartable() {
        let z12 = carrier("z12");
        let grid = parse_grid("0,1/2,1").unwrap();
        let subs = enumerate_submodules(&z12);
        let run = stream(&z12, &grid, 6, 50, 42);
        assert_eq!(run.len(), 50);
        for (i, a) in run.iter().enumerate() {
            assert!(is_if_submodule(a).holds);
            assert_eq!(&sample(&z12, &subs, &grid, 42, i as u64), a);
        }
        assert_ne!(stream(&z12, &grid, 6, 50, 7), run);
    }
}
