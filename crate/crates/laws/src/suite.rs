use std::sync::Arc;

use rayon::prelude::*;

use ifmod_core::algebra::{enumerate_homs, enumerate_submodules, Carrier, FinModule, ModHom};
use ifmod_core::IfSet;

use crate::budget::InstanceBudget;
use crate::catalog::{LawId, Shape, CATALOG};
use crate::generate;
use crate::laws::{evaluate, Ctx, Instance, Outcome};
use crate::ops::{Definitional, Ops, Optimized};
use crate::paper;
use crate::report::{ConfigEcho, Counterexample, Disagreement, LawReport, Origin, SuiteReport, Tally};
use crate::shrink;
use crate::HarnessError;

/// Counterexamples kept (and shrunk) per law.
pub const KEPT_COUNTEREXAMPLES: usize = 3;

/// Validated carriers and their IF submodule streams for one budget.
pub struct Universe {
    budget: InstanceBudget,
    modules: Vec<Carrier>,
    streams: Vec<(Carrier, Vec<IfSet>)>,
}

fn push_unique(list: &mut Vec<Carrier>, c: Carrier) {
    if !list.contains(&c) {
        list.push(c);
    }
}

impl Universe {
    pub fn build(budget: &InstanceBudget) -> Result<Self, HarnessError> {
        budget.validate()?;
        let mut modules = Vec::new();
        for src in &budget.modules {
            push_unique(&mut modules, src.build()?);
        }
        let mut u = Universe { budget: budget.clone(), modules, streams: Vec::new() };
        let mut carriers = Vec::new();
        for m in &u.modules {
            push_unique(&mut carriers, m.clone());
            for t in u.targets(m) {
                push_unique(&mut carriers, t);
            }
            push_unique(&mut carriers, Carrier::Ring(m.ring().clone()));
        }
        let b = &u.budget;
        u.streams = carriers
            .into_par_iter()
            .map(|c| {
                let s = generate::stream(&c, &b.grid, b.max_exhaustive, b.samples, b.seed);
                (c, s)
            })
            .collect();
        Ok(u)
    }

    pub fn modules(&self) -> &[Carrier] {
        &self.modules
    }

    pub fn stream(&self, c: &Carrier) -> &[IfSet] {
        self.streams.iter().find(|(k, _)| k == c).map(|(_, s)| s.as_slice()).unwrap_or(&[])
    }

    /// Hom targets for `m`: budget modules over the same ring, plus every
    /// cyclic `ℤ_d` over `ℤ_n` with `d | n` when the ring is `ℤ_n`.
    pub fn targets(&self, m: &Carrier) -> Vec<Carrier> {
        let mut out = Vec::new();
        for t in &self.modules {
            if t.ring() == m.ring() {
                push_unique(&mut out, t.clone());
            }
        }
        if let Some(n) = m.ring().cyclic_order() {
            for d in (1..=n).filter(|d| n % d == 0) {
                let module = FinModule::product(m.ring().clone(), &[d]).expect("d divides n");
                push_unique(&mut out, Carrier::Module(Arc::new(module)));
            }
        }
        out
    }

    fn homs(&self, m: &Carrier) -> Vec<ModHom> {
        self.targets(m).iter().flat_map(|t| enumerate_homs(m, t)).collect()
    }

    fn paper_sets(&self) -> Vec<IfSet> {
        if self.budget.include_paper_examples {
            paper::examples().into_iter().map(|(_, a)| a).collect()
        } else {
            Vec::new()
        }
    }

    /// Every instance the law quantifies over, in canonical order.
    pub fn instances(&self, law: LawId) -> Vec<(Instance, Origin)> {
        let mut out = Vec::new();
        let exhaustive = |c: &Carrier| c.len() <= self.budget.max_exhaustive;
        match law.shape() {
            Shape::Single => {
                for m in &self.modules {
                    out.extend(self.stream(m).iter().map(|a| (Instance::Single(a.clone()), Origin::Stream)));
                }
                out.extend(self.paper_sets().into_iter().map(|a| (Instance::Single(a), Origin::Paper)));
            }
            Shape::Pair => {
                for m in &self.modules {
                    let s = self.stream(m);
                    if exhaustive(m) {
                        for a in s {
                            for b in s {
                                out.push((Instance::Pair(a.clone(), b.clone()), Origin::Stream));
                            }
                        }
                    } else {
                        for (i, a) in s.iter().enumerate() {
                            let b = &s[(i + 1) % s.len()];
                            out.push((Instance::Pair(a.clone(), b.clone()), Origin::Stream));
                        }
                    }
                }
            }
            Shape::Crisp => {
                for m in &self.modules {
                    out.extend(enumerate_submodules(m).into_iter().map(|n| (Instance::Crisp(n), Origin::Stream)));
                }
            }
            Shape::HomSource => {
                for m in &self.modules {
                    let homs = self.homs(m);
                    for f in &homs {
                        out.extend(
                            self.stream(m).iter().map(|a| (Instance::Hom(f.clone(), a.clone()), Origin::Stream)),
                        );
                    }
                    if law == LawId::P22 {
                        for f in homs.iter().filter(|f| f.is_epimorphism()) {
                            for b in self.stream(f.target()) {
                                let a = b.preimage(f).expect("over target");
                                out.push((Instance::Hom(f.clone(), a), Origin::Targeted));
                            }
                        }
                    }
                }
                for a in self.paper_sets() {
                    for f in self.homs(a.carrier()) {
                        out.push((Instance::Hom(f, a.clone()), Origin::Paper));
                    }
                }
            }
            Shape::HomTarget => {
                for m in &self.modules {
                    for f in self.homs(m) {
                        out.extend(
                            self.stream(f.target())
                                .iter()
                                .map(|b| (Instance::Hom(f.clone(), b.clone()), Origin::Stream)),
                        );
                    }
                }
                for b in self.paper_sets() {
                    for m in &self.modules {
                        for f in self.homs(m).into_iter().filter(|f| f.target() == b.carrier()) {
                            out.push((Instance::Hom(f, b.clone()), Origin::Paper));
                        }
                    }
                }
            }
            Shape::RingIdeal => {
                let mut rings = Vec::new();
                for m in &self.modules {
                    push_unique(&mut rings, Carrier::Ring(m.ring().clone()));
                }
                for r in &rings {
                    out.extend(self.stream(r).iter().map(|a| (Instance::Single(a.clone()), Origin::Stream)));
                }
                for a in self.paper_sets() {
                    out.push((Instance::Single(paper::as_ring_ifs(&a)), Origin::Paper));
                }
            }
        }
        out
    }

    pub fn check_law(&self, law: LawId) -> LawReport {
        self.check_law_with(law, &Optimized, &Definitional)
    }

    /// [`Universe::check_law`] with explicit routes; `slow` is the reference.
    pub fn check_law_with(&self, law: LawId, fast: &dyn Ops, slow: &dyn Ops) -> LawReport {
        let b = &self.budget;
        let fast = Ctx { ops: fast, pairing: b.pairing, prime: b.prime_definition, grid: &b.grid };
        let slow = Ctx { ops: slow, ..fast };
        let instances = self.instances(law);
        let outcomes: Vec<(Outcome, Outcome)> =
            instances.par_iter().map(|(inst, _)| (evaluate(law, &fast, inst), evaluate(law, &slow, inst))).collect();

        let mut report = LawReport {
            law: law.as_str().into(),
            description: law.description().into(),
            must_pass: law.must_pass(),
            all: Tally::default(),
            paper: Tally::default(),
            counterexamples: Vec::new(),
            disagreements: Vec::new(),
        };
        let mut failing = Vec::new();
        for ((inst, origin), (opt, def)) in instances.iter().zip(&outcomes) {
            let tallies: &mut [&mut Tally] = if *origin == Origin::Paper {
                &mut [&mut report.all, &mut report.paper]
            } else {
                &mut [&mut report.all]
            };
            for t in tallies.iter_mut() {
                t.attempted += 1;
            }
            if opt.is_fail() != def.is_fail() {
                report.disagreements.push(Disagreement {
                    origin: *origin,
                    instance: inst.to_string(),
                    optimized: outcome_text(opt),
                    definitional: outcome_text(def),
                });
                continue;
            }
            for t in tallies.iter_mut() {
                match opt {
                    Outcome::Pass => t.passed += 1,
                    Outcome::Vacuous => t.vacuous += 1,
                    Outcome::Fail(_) => t.failed += 1,
                }
            }
            if opt.is_fail() && failing.len() < KEPT_COUNTEREXAMPLES {
                failing.push((inst.clone(), *origin));
            }
        }
        for (inst, origin) in failing {
            let (small, steps) = shrink::shrink(law, &fast, &slow, &inst);
            let clause = outcome_text(&evaluate(law, &slow, &small));
            let alt = Ctx { pairing: b.pairing.other(), ..slow };
            let alternate_prime = law.uses_prime_definition().then(|| {
                let alt_prime = Ctx { prime: b.prime_definition.other(), ..slow };
                format!(
                    "{} -> {}",
                    b.prime_definition.other().as_str(),
                    outcome_text(&evaluate(law, &alt_prime, &small))
                )
            });
            report.counterexamples.push(Counterexample {
                clause,
                origin,
                shrink_steps: steps,
                instance: small.to_string(),
                alternate_pairing: format!(
                    "{} -> {}",
                    b.pairing.other().as_str(),
                    outcome_text(&evaluate(law, &alt, &small))
                ),
                alternate_prime,
            });
        }
        report
    }
}

fn outcome_text(o: &Outcome) -> String {
    match o {
        Outcome::Pass => "pass".into(),
        Outcome::Vacuous => "vacuous".into(),
        Outcome::Fail(msg) => format!("fail: {msg}"),
    }
}

/// Runs the given laws in catalog order.
pub fn run_laws(budget: &InstanceBudget, laws: &[LawId]) -> Result<SuiteReport, HarnessError> {
    let universe = Universe::build(budget)?;
    let mut ids = laws.to_vec();
    ids.sort();
    ids.dedup();
    let reports = ids.into_iter().map(|l| universe.check_law(l)).collect();
    Ok(SuiteReport::new(ConfigEcho::of(budget), reports))
}

pub fn check_law(law: LawId, budget: &InstanceBudget) -> Result<LawReport, HarnessError> {
    Ok(Universe::build(budget)?.check_law(law))
}

/// The full catalog.
pub fn run_suite(budget: &InstanceBudget) -> Result<SuiteReport, HarnessError> {
    run_laws(budget, &CATALOG)
}
