use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use ifmod_core::algebra::{
    crisp_radical, is_primary_submodule, is_prime_submodule, residual, AlgebraError, Carrier, FinModule,
};
use ifmod_core::degree::parse_unit;
use ifmod_core::ifs::IfsError;
use ifmod_core::theory::{
    bar_residual, ideal_radical, is_if_ideal, is_if_prime_ideal, is_if_submodule, is_primary, is_weakly_primary_ideal,
    radical, Pairing, PredicateVerdict, PrimeDefinition, TheoryError, Witness,
};
use ifmod_core::{CutSpec, IfSet};
use ifmod_laws::{parse_grid, run_laws, HarnessError, InstanceBudget, LawId, CATALOG};

use crate::golden;
use crate::spec::{parse_spec, SpecDocument, SpecError};

#[derive(Debug, Parser)]
#[command(name = "ifmod", version, about = "Exact IF submodule computations over finite rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a derived set from a spec file.
    Compute(ComputeArgs),
    /// Decide a predicate; exit 0 if it holds, 1 if it fails.
    Check(CheckArgs),
    /// Run the law suite.
    Laws(LawsArgs),
    /// Compare the worked examples with the expected table.
    Paper(PaperArgs),
    /// Print a spec file in canonical form.
    Print {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Radical,
    Bar,
    Cut,
    Support,
    Image,
    Preimage,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub target: Target,
    #[arg(long)]
    pub spec: PathBuf,
    /// Named ifs block.
    #[arg(long)]
    pub ifs: Option<String>,
    /// Named sub line; `radical` and `bar` then compute the crisp radical and colon ideal.
    #[arg(long)]
    pub sub: Option<String>,
    /// Named hom block, for `image` and `preimage`.
    #[arg(long)]
    pub hom: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    /// Strict cut.
    #[arg(long)]
    pub strict: bool,
    /// Ideal radical `⋁ A(rⁿ)` of an IF ideal instead of the module radical.
    #[arg(long)]
    pub ideal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    IfSubmodule,
    IfIdeal,
    Primary,
    WeaklyPrimary,
    Prime,
    CrispPrimary,
    CrispPrime,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub predicate: Predicate,
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long)]
    pub ifs: Option<String>,
    #[arg(long)]
    pub sub: Option<String>,
    /// `joint` or `componentwise`.
    #[arg(long, default_value = "joint")]
    pub pairing: Pairing,
    /// `weakly-completely-prime` or `level-cuts`.
    #[arg(long, default_value = "weakly-completely-prime")]
    pub prime_definition: PrimeDefinition,
}

#[derive(Debug, Args)]
pub struct LawsArgs {
    /// Comma-separated modules, e.g. `z4,z2xz2,z4@z12`.
    #[arg(long)]
    pub modules: Option<String>,
    /// Comma-separated degree grid containing 0 and 1.
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub max_exhaustive: Option<usize>,
    /// Restrict to these laws (repeatable).
    #[arg(long)]
    pub law: Vec<String>,
    #[arg(long, default_value = "joint")]
    pub pairing: Pairing,
    #[arg(long, default_value = "weakly-completely-prime")]
    pub prime_definition: PrimeDefinition,
    /// Leave the worked examples out of the instance set.
    #[arg(long)]
    pub no_paper: bool,
    /// Report directory.
    #[arg(long, default_value = "ifmod-report")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct PaperArgs {
    /// Expected table to compare against instead of the built-in one.
    #[arg(long)]
    pub expected: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{}:{}: {}", .source.line, .source.column, .source.message)]
    Spec { path: String, source: SpecError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error(transparent)]
    Ifs(#[from] IfsError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
}

/// What a command prints on stdout and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Check(a) => check(a),
        Command::Laws(a) => laws(a),
        Command::Paper(a) => paper(a),
        Command::Print { spec } => Ok(Output::ok(load(spec)?.to_string())),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn load(path: &Path) -> Result<SpecDocument, CliError> {
    parse_spec(&read(path)?).map_err(|source| CliError::Spec { path: path.display().to_string(), source })
}

fn need<'a>(what: &str, name: &'a Option<String>) -> Result<&'a str, CliError> {
    name.as_deref().ok_or_else(|| CliError::Usage(format!("this command needs --{what}")))
}

fn ifs<'a>(doc: &'a SpecDocument, name: &Option<String>) -> Result<&'a IfSet, CliError> {
    let name = need("ifs", name)?;
    doc.ifs(name).ok_or_else(|| CliError::Usage(format!("no ifs named {name:?}")))
}

fn sub<'a>(doc: &'a SpecDocument, name: &Option<String>) -> Result<&'a ifmod_core::algebra::CrispSubset, CliError> {
    let name = need("sub", name)?;
    doc.sub(name).ok_or_else(|| CliError::Usage(format!("no sub named {name:?}")))
}

/// Ring-side predicates read an IF set on the regular module `ℤₙ` over `ℤₙ`
/// as the same degrees on the ring.
fn on_ring(set: &IfSet) -> IfSet {
    let ring = set.carrier().ring().clone();
    let regular = ring.cyclic_order().and_then(|n| FinModule::product(ring.clone(), &[n]).ok()).map(Carrier::module);
    if regular.as_ref() == Some(set.carrier()) {
        IfSet::new(Carrier::Ring(ring), set.degrees().to_vec()).expect("same size")
    } else {
        set.clone()
    }
}

fn unit(flag: &str, text: &Option<String>) -> Result<ifmod_core::Rational, CliError> {
    let t = need(flag, text)?;
    parse_unit(t).map_err(|e| CliError::Usage(format!("--{flag} {t}: {e}")))
}

fn compute(a: &ComputeArgs) -> Result<Output, CliError> {
    let doc = load(&a.spec)?;
    if a.sub.is_some() && a.ifs.is_none() {
        let n = sub(&doc, &a.sub)?;
        let set = match a.target {
            Target::Radical => crisp_radical(n)?,
            Target::Bar => residual(n)?,
            _ => return Err(CliError::Usage("with --sub only `radical` and `bar` apply".into())),
        };
        return Ok(Output::ok(format!("{set}\n")));
    }
    let set = ifs(&doc, &a.ifs)?;
    let text = match a.target {
        Target::Radical if a.ideal => ideal_radical(&on_ring(set))?.to_string(),
        Target::Radical => radical(set)?.to_string(),
        Target::Bar => bar_residual(set).to_string(),
        Target::Cut => {
            let spec = CutSpec::new(unit("alpha", &a.alpha)?, unit("beta", &a.beta)?, a.strict)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            set.cut(spec).to_string()
        }
        Target::Support => set.support().to_string(),
        Target::Image | Target::Preimage => {
            let name = need("hom", &a.hom)?;
            let f = doc.hom(name).ok_or_else(|| CliError::Usage(format!("no hom named {name:?}")))?;
            if a.target == Target::Image {
                set.image(f)?.to_string()
            } else {
                set.preimage(f)?.to_string()
            }
        }
    };
    Ok(Output::ok(text + "\n"))
}

/// Witness with element labels: `m` lives on the module, the rest on the ring.
fn render_witness(w: &Witness, carrier: &Carrier) -> String {
    let ring = Carrier::Ring(carrier.ring().clone());
    let mut s = format!("[{}]", w.clause);
    for (name, e) in &w.elements {
        let label = if *name == "m" { carrier.label(*e) } else { ring.label(*e) };
        let _ = write!(s, " {name}={label}");
    }
    if !w.values.is_empty() {
        s.push_str(" |");
        for (name, d) in &w.values {
            let _ = write!(s, " {name}={d}");
        }
    }
    s
}

fn verdict(head: &str, v: &PredicateVerdict, carrier: &Carrier) -> Output {
    let mut text = format!("{head}: {}\n", if v.holds { "holds" } else { "fails" });
    if let Some(w) = &v.witness {
        let _ = writeln!(text, "witness: {}", render_witness(w, carrier));
    }
    Output { text, code: if v.holds { 0 } else { 1 } }
}

fn check(a: &CheckArgs) -> Result<Output, CliError> {
    let doc = load(&a.spec)?;
    let name = a.predicate.to_possible_value().expect("no skipped variants").get_name().to_string();
    match a.predicate {
        Predicate::CrispPrimary | Predicate::CrispPrime => {
            let n = sub(&doc, &a.sub)?;
            let v =
                if a.predicate == Predicate::CrispPrimary { is_primary_submodule(n)? } else { is_prime_submodule(n)? };
            let mut text = format!("{name}: {}\n", if v.holds { "holds" } else { "fails" });
            if let Some((r, m)) = v.witness {
                let ring = Carrier::Ring(n.carrier().ring().clone());
                let _ = writeln!(text, "witness: r={} m={}", ring.label(r), n.carrier().label(m));
            }
            Ok(Output { text, code: if v.holds { 0 } else { 1 } })
        }
        _ => {
            let set = ifs(&doc, &a.ifs)?;
            let (head, v) = match a.predicate {
                Predicate::IfSubmodule => (name, is_if_submodule(set)),
                Predicate::IfIdeal => (name, is_if_ideal(&on_ring(set))?),
                Predicate::Primary => (format!("{name} ({})", a.pairing.as_str()), is_primary(set, a.pairing)?),
                Predicate::WeaklyPrimary => {
                    (format!("{name} ({})", a.pairing.as_str()), is_weakly_primary_ideal(&on_ring(set), a.pairing)?)
                }
                Predicate::Prime => (
                    format!("{name} ({})", a.prime_definition.as_str()),
                    is_if_prime_ideal(&on_ring(set), a.prime_definition)?,
                ),
                Predicate::CrispPrimary | Predicate::CrispPrime => unreachable!("handled above"),
            };
            Ok(verdict(&head, &v, set.carrier()))
        }
    }
}

fn laws(a: &LawsArgs) -> Result<Output, CliError> {
    let mut b = InstanceBudget::desk();
    if let Some(m) = &a.modules {
        b.modules = m
            .split(',')
            .map(|s| s.trim().parse().map_err(|e| CliError::Usage(format!("--modules: {e}"))))
            .collect::<Result<_, _>>()?;
    }
    if let Some(g) = &a.grid {
        b.grid = parse_grid(g)?;
    }
    if let Some(s) = a.seed {
        b.seed = s;
    }
    if let Some(s) = a.samples {
        b.samples = s;
    }
    if let Some(m) = a.max_exhaustive {
        b.max_exhaustive = m;
    }
    b.pairing = a.pairing;
    b.prime_definition = a.prime_definition;
    b.include_paper_examples = !a.no_paper;
    let ids: Vec<LawId> = if a.law.is_empty() {
        CATALOG.to_vec()
    } else {
        a.law.iter().map(|l| l.parse().map_err(|e| CliError::Usage(format!("--law: {e}")))).collect::<Result<_, _>>()?
    };
    let report = run_laws(&b, &ids)?;
    report.write_dir(&a.out)?;
    Ok(Output { text: report.to_text(), code: report.status.exit_code() as u8 })
}

fn paper(a: &PaperArgs) -> Result<Output, CliError> {
    let text = match &a.expected {
        Some(p) => read(p)?,
        None => golden::EXPECTED.to_string(),
    };
    let expected = golden::parse_expected(&text).map_err(CliError::Usage)?;
    let rows = golden::compare(&expected, &golden::computed_rows());
    let all = rows.iter().all(|r| r.matches());
    Ok(Output { text: golden::render(&rows), code: if all { 0 } else { 1 } })
}
