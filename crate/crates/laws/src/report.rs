use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::budget::InstanceBudget;
use crate::HarnessError;

/// Where an instance came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Stream,
    Paper,
    /// Pulled back from a quotient so that a rare hypothesis holds.
    Targeted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub modules: String,
    pub grid: String,
    pub max_exhaustive: usize,
    pub samples: usize,
    pub seed: u64,
    pub pairing: String,
    pub prime_definition: String,
    pub paper_examples: bool,
}

impl ConfigEcho {
    pub fn of(b: &InstanceBudget) -> Self {
        ConfigEcho {
            modules: b.modules_text(),
            grid: b.grid_text(),
            max_exhaustive: b.max_exhaustive,
            samples: b.samples,
            seed: b.seed,
            pairing: b.pairing.as_str().into(),
            prime_definition: b.prime_definition.as_str().into(),
            paper_examples: b.include_paper_examples,
        }
    }
}

/// A failure confirmed on both routes, after shrinking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub clause: String,
    pub origin: Origin,
    pub shrink_steps: usize,
    pub instance: String,
    /// Outcome of the same instance under the other pairing mode.
    pub alternate_pairing: String,
    /// Outcome under the other prime definition, for laws that use one.
    pub alternate_prime: Option<String>,
}

/// The two routes disagree: an implementation bug.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub origin: Origin,
    pub instance: String,
    pub optimized: String,
    pub definitional: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub attempted: usize,
    pub passed: usize,
    pub vacuous: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub description: String,
    pub must_pass: bool,
    pub all: Tally,
    pub paper: Tally,
    /// The first few confirmed counterexamples, minimised.
    pub counterexamples: Vec<Counterexample>,
    pub disagreements: Vec<Disagreement>,
}

impl LawReport {
    pub fn is_vacuous(&self) -> bool {
        self.all.attempted == self.all.vacuous
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    /// Confirmed counterexamples to a must-pass law.
    Counterexamples,
    /// The optimized and definitional routes disagree somewhere.
    Disagreement,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Counterexamples => 1,
            Status::Disagreement => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Counterexamples => "counterexamples",
            Status::Disagreement => "disagreement",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: ConfigEcho,
    pub status: Status,
    pub laws: Vec<LawReport>,
}

impl SuiteReport {
    pub fn new(config: ConfigEcho, laws: Vec<LawReport>) -> Self {
        let status = if laws.iter().any(|l| !l.disagreements.is_empty()) {
            Status::Disagreement
        } else if laws.iter().any(|l| l.must_pass && l.all.failed > 0) {
            Status::Counterexamples
        } else {
            Status::Ok
        };
        SuiteReport { config, status, laws }
    }

    pub fn law(&self, id: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == id)
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut s = String::new();
        let _ = writeln!(s, "ifmod law report");
        let _ = writeln!(s, "modules: {}", c.modules);
        let _ = writeln!(s, "grid: {}", c.grid);
        let _ = writeln!(s, "max-exhaustive: {}", c.max_exhaustive);
        let _ = writeln!(s, "samples: {}", c.samples);
        let _ = writeln!(s, "seed: {}", c.seed);
        let _ = writeln!(s, "pairing: {}", c.pairing);
        let _ = writeln!(s, "prime-definition: {}", c.prime_definition);
        let _ = writeln!(s, "paper-examples: {}", if c.paper_examples { "yes" } else { "no" });
        let _ = writeln!(s, "status: {}", self.status.as_str());
        for l in &self.laws {
            let _ = writeln!(s);
            let _ = writeln!(s, "[{}] {}", l.law, l.description);
            let verdict = match (l.all.failed, l.disagreements.len()) {
                (_, d) if d > 0 => "disagreement",
                (0, _) if l.is_vacuous() => "vacuous",
                (0, _) => "pass",
                _ if l.must_pass => "fail",
                _ => "reported",
            };
            let _ = writeln!(s, "  verdict: {verdict}");
            let _ = writeln!(s, "  must-pass: {}", if l.must_pass { "yes" } else { "no" });
            let t = &l.all;
            let _ = writeln!(
                s,
                "  instances: {} attempted, {} passed, {} vacuous, {} failed",
                t.attempted, t.passed, t.vacuous, t.failed
            );
            let p = &l.paper;
            let _ = writeln!(
                s,
                "  paper instances: {} attempted, {} passed, {} vacuous, {} failed",
                p.attempted, p.passed, p.vacuous, p.failed
            );
            let _ = writeln!(s, "  disagreements: {}", l.disagreements.len());
            for (i, cx) in l.counterexamples.iter().enumerate() {
                let _ = writeln!(s, "  counterexample {}: {}", i + 1, cx.clause);
                let _ = writeln!(s, "    alternate pairing: {}", cx.alternate_pairing);
                if let Some(p) = &cx.alternate_prime {
                    let _ = writeln!(s, "    alternate prime definition: {p}");
                }
                for line in cx.instance.lines() {
                    let _ = writeln!(s, "    {line}");
                }
            }
            for d in &l.disagreements {
                let _ = writeln!(s, "  disagreement: optimized {} / definitional {}", d.optimized, d.definitional);
                for line in d.instance.lines() {
                    let _ = writeln!(s, "    {line}");
                }
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Writes `report.txt`, `report.structured` and one
    /// `witness-<law>-NN.txt` per counterexample into `dir`.
    pub fn write_dir(&self, dir: &Path) -> Result<(), HarnessError> {
        fs::create_dir_all(dir)?;
        // witnesses left by an earlier run would read as current findings
        for entry in fs::read_dir(dir)? {
            let path = entry?.path();
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
            if name.starts_with("witness-") && name.ends_with(".txt") {
                fs::remove_file(&path)?;
            }
        }
        fs::write(dir.join("report.txt"), self.to_text())?;
        fs::write(dir.join("report.structured"), self.to_json() + "\n")?;
        for l in &self.laws {
            for (i, cx) in l.counterexamples.iter().enumerate() {
                let mut w = String::new();
                let _ = writeln!(w, "# {} {}", l.law, l.description);
                let _ = writeln!(w, "# clause: {}", cx.clause);
                let _ = writeln!(w, "# origin: {:?}", cx.origin);
                let _ = writeln!(w, "# pairing {}: fail", self.config.pairing);
                let _ = writeln!(w, "# alternate pairing: {}", cx.alternate_pairing);
                if let Some(p) = &cx.alternate_prime {
                    let _ = writeln!(w, "# alternate prime definition: {p}");
                }
                w.push_str(&cx.instance);
                fs::write(dir.join(format!("witness-{}-{:02}.txt", l.law, i + 1)), w)?;
            }
        }
        Ok(())
    }
}
