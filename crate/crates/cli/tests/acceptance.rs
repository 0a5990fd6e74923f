//! Acceptance run: one PASS/FAIL line per criterion, each with its time
//! limit. Exits nonzero if any criterion fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use ifmod_cli::parse_spec;
use ifmod_core::theory;
use ifmod_laws::budget::ModuleSource;
use ifmod_laws::{generate, oracle, parse_grid, run_laws, InstanceBudget, LawId};

fn ifmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ifmod")).args(args).output().expect("binary runs")
}

fn spec(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn expect(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// `ifmod` with exit code and exact stdout.
fn expect_run(args: &[&str], code: i32, out: &str) -> Result<(), String> {
    let o = ifmod(args);
    expect(
        o.status.code() == Some(code) && stdout(&o) == out,
        format!("{} -> exit {:?}, {:?}", args[..2].join(" "), o.status.code(), stdout(&o)),
    )
}

/// Lines of the `[id]` block of a law report.
fn law_block<'a>(report: &'a str, id: &str) -> Vec<&'a str> {
    let head = format!("[{id}] ");
    report.lines().skip_while(|l| !l.starts_with(&head)).take_while(|l| !l.is_empty()).collect()
}

fn field<'a>(block: &[&'a str], key: &str) -> Option<&'a str> {
    block.iter().find_map(|l| l.trim_start().strip_prefix(key))
}

fn criterion_1() -> Result<String, String> {
    let z4 = spec("z4_paper.ifspec");
    expect_run(&["compute", "radical", "--spec", &z4, "--ifs", "A"], 0, "0: 1,0 | 1: 0,1 | 2: 1,0 | 3: 0,1\n")?;
    expect_run(&["check", "primary", "--spec", &z4, "--ifs", "A"], 0, "primary (joint): holds\n")?;
    Ok("radical (1,0) on {0,2}, (0,1) on {1,3}; primary holds".into())
}

fn criterion_2() -> Result<String, String> {
    let z12 = spec("z12_paper.ifspec");
    let bar = "0: 1,0 | 1: 0,1 | 2: 1/2,1/2 | 3: 0,1 | 4: 1,0 | 5: 0,1 | 6: 1/2,1/2 | 7: 0,1 | 8: 1,0 | 9: 0,1 | 10: 1/2,1/2 | 11: 0,1\n";
    let rad =
        "0: 1,0 | 1: 0,1 | 2: 1,0 | 3: 0,1 | 4: 1,0 | 5: 0,1 | 6: 1,0 | 7: 0,1 | 8: 1,0 | 9: 0,1 | 10: 1,0 | 11: 0,1\n";
    expect_run(&["compute", "bar", "--spec", &z12, "--ifs", "A"], 0, bar)?;
    expect_run(&["compute", "radical", "--spec", &z12, "--ifs", "A"], 0, rad)?;
    expect_run(&["check", "primary", "--spec", &z12, "--ifs", "A"], 0, "primary (joint): holds\n")?;
    Ok("bar 1 on <4>, 1/2 on <2>-<4>, 0 elsewhere; radical (1,0) on <2>; primary holds".into())
}

fn criterion_3() -> Result<String, String> {
    let z6 = spec("z6_counterexample.ifspec");
    let o = ifmod(&["compute", "radical", "--spec", &z6, "--ifs", "A"]);
    let rad = stdout(&o);
    expect(rad.split(" | ").nth(2) == Some("2: 3/10,1/2"), format!("radical {rad:?}"))?;
    let witness = "primary (joint): fails\nwitness: [primary] r=2 m=3 | A(r·m)=1,0 A(m)=0,1 √A(r)=3/10,1/2\n";
    expect_run(&["check", "primary", "--spec", &z6, "--ifs", "A"], 1, witness)?;
    Ok("radical(2) = (3/10, 1/2); primary fails at r=2 m=3 with mu(6)=1, mu(3)=0, 1 > 3/10".into())
}

fn criterion_4() -> Result<String, String> {
    let grid = parse_grid("0,1/2,1").map_err(|e| e.to_string())?;
    let mut total = 0;
    for (m, samples) in [("z4", 0), ("z6", 0), ("z12", 500)] {
        let c = m.parse::<ModuleSource>()?.build().map_err(|e| e.to_string())?;
        let stream = generate::stream(&c, &grid, 6, samples, 42);
        expect(!stream.is_empty(), format!("{m}: empty stream"))?;
        for a in &stream {
            let fast = theory::radical(a).map_err(|e| e.to_string())?;
            expect(fast == oracle::brute_radical(a), format!("{m}: disagreement on {a}"))?;
        }
        total += stream.len();
    }
    let budget = InstanceBudget {
        modules: vec!["z4".parse()?, "z6".parse()?, "z12".parse()?],
        include_paper_examples: false,
        ..InstanceBudget::desk()
    };
    let law = run_laws(&budget, &[LawId::P24]).map_err(|e| e.to_string())?;
    let p24 = &law.laws[0];
    expect(p24.all.failed == 0 && p24.disagreements.is_empty(), "L-P24 reported a failure")?;
    Ok(format!("{total} IF submodules, 0 disagreements; L-P24 {} instances pass", p24.all.attempted))
}

fn criterion_5() -> Result<String, String> {
    let budget = InstanceBudget {
        modules: ["z4", "z6", "z12", "z2xz2"].iter().map(|m| m.parse()).collect::<Result<_, _>>()?,
        include_paper_examples: false,
        ..InstanceBudget::desk()
    };
    let r = run_laws(&budget, &[LawId::P6, LawId::P10, LawId::P14]).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for l in &r.laws {
        expect(
            l.all.failed == 0 && l.counterexamples.is_empty() && l.disagreements.is_empty(),
            format!("{}: {} failed", l.law, l.all.failed),
        )?;
        parts.push(format!("{} {}", l.law, l.all.attempted));
    }
    // 3 + 4 + 6 + 5 submodules
    for id in ["L-P6", "L-P14"] {
        expect(r.law(id).map(|l| l.all.attempted) == Some(18), format!("{id}: expected 18 submodules"))?;
    }
    Ok(format!("0 counterexamples ({})", parts.join(", ")))
}

const STRUCTURAL: [&str; 18] = [
    "L-P1", "L-P2", "L-P3", "L-P4", "L-P5", "L-P7", "L-P8", "L-P9", "L-P10", "L-P11", "L-P12", "L-P13", "L-P15",
    "L-P16", "L-P17", "L-P20", "L-P21", "L-P23",
];

fn criterion_6(dir: &Path) -> Result<String, String> {
    let out = dir.join("desk");
    let o = ifmod(&["laws", "--out", &out.display().to_string()]);
    let report = stdout(&o);
    expect(o.status.code() != Some(3), "optimized and definitional routes disagree")?;
    let mut instances = 0usize;
    for id in STRUCTURAL {
        let block = law_block(&report, id);
        expect(field(&block, "verdict: ") == Some("pass"), format!("{id}: {:?}", field(&block, "verdict: ")))?;
        expect(field(&block, "disagreements: ") == Some("0"), format!("{id}: disagreement"))?;
        let attempted =
            field(&block, "instances: ").and_then(|s| s.split(' ').next()).and_then(|n| n.parse::<usize>().ok());
        instances += attempted.ok_or(format!("{id}: no instance count"))?;
    }
    let witnesses = fs::read_dir(&out).map_err(|e| e.to_string())?.count().saturating_sub(2);
    expect(o.status.code() == Some(0), format!("suite exit {:?}, {witnesses} witness files", o.status.code()))?;
    Ok(format!("{} laws, {instances} instances, 0 counterexamples, 0 disagreements", STRUCTURAL.len()))
}

fn criterion_7(dir: &Path) -> Result<String, String> {
    let out = dir.join("sensitive");
    let o = ifmod(&["laws", "--law", "L-P18", "--law", "L-P19", "--law", "L-P22", "--out", &out.display().to_string()]);
    let report = stdout(&o);
    expect(o.status.code() != Some(3), "optimized and definitional routes disagree")?;
    expect(report.contains("\npairing: joint\n"), "pairing mode not recorded")?;
    expect(report.contains("\nprime-definition: weakly-completely-prime\n"), "prime definition not recorded")?;
    let mut parts = Vec::new();
    for id in ["L-P18", "L-P19", "L-P22"] {
        let block = law_block(&report, id);
        let paper = field(&block, "paper instances: ").ok_or(format!("{id}: no paper tally"))?;
        let attempted: usize = paper.split(' ').next().and_then(|n| n.parse().ok()).unwrap_or(0);
        expect(attempted > 0 && paper.ends_with(" 0 failed"), format!("{id}: paper instances {paper}"))?;
        // every recorded witness carries the other pairing's verdict
        let cxs = block.iter().filter(|l| l.trim_start().starts_with("counterexample ")).count();
        let alts = block.iter().filter(|l| l.trim_start().starts_with("alternate pairing: ")).count();
        expect(cxs == alts, format!("{id}: witness without dual-mode evaluation"))?;
        parts.push(format!("{id} {attempted} paper instances pass, {cxs} witnesses"));
    }
    Ok(parts.join("; "))
}

fn criterion_8(dir: &Path) -> Result<String, String> {
    let run = |name: &str| {
        let out = dir.join(name);
        let o = ifmod(&["laws", "--out", &out.display().to_string()]);
        let txt = fs::read(out.join("report.txt")).unwrap_or_default();
        let json = fs::read(out.join("report.structured")).unwrap_or_default();
        (o.stdout, txt, json)
    };
    let first = run("det-1");
    let second = run("det-2");
    expect(!first.1.is_empty() && !first.2.is_empty(), "reports not written")?;
    expect(first == second, "two identical runs produced different reports")?;
    let mut files = 0;
    for entry in fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("specs")).map_err(|e| e.to_string())? {
        let path: PathBuf = entry.map_err(|e| e.to_string())?.path();
        let text = fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let doc = parse_spec(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let printed = stdout(&ifmod(&["print", "--spec", &path.display().to_string()]));
        expect(printed == doc.to_string(), format!("{}: print differs", path.display()))?;
        let again = parse_spec(&printed).map_err(|e| format!("{}: reprint {e}", path.display()))?;
        expect(again == doc, format!("{}: round trip changed the document", path.display()))?;
        files += 1;
    }
    Ok(format!("byte-identical report.txt, report.structured and stdout; {files} spec files round-trip"))
}

type Criterion<'a> = (u32, &'static str, u64, Box<dyn Fn() -> Result<String, String> + 'a>);

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let d = dir.path();
    let criteria: Vec<Criterion<'_>> = vec![
        (1, "Z4 example", 1, Box::new(criterion_1)),
        (2, "Z12 example", 1, Box::new(criterion_2)),
        (3, "Z/6Z counterexample", 1, Box::new(criterion_3)),
        (4, "oracle equivalence (L-P24)", 30, Box::new(criterion_4)),
        (5, "crisp bridge (L-P6, L-P10, L-P14)", 30, Box::new(criterion_5)),
        (6, "structural law suite, desk budget", 60, Box::new(|| criterion_6(d))),
        (7, "definition-sensitive laws (L-P18, L-P19, L-P22)", 30, Box::new(|| criterion_7(d))),
        (8, "determinism and spec round trip", 10, Box::new(|| criterion_8(d))),
    ];
    let mut failed = 0;
    for (n, title, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (verdict, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {n} {verdict}: {title}: {detail} [{:.2}s, limit {limit}s]", elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
