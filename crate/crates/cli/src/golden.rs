//! Golden comparison of the three worked examples against an expected table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ifmod_core::theory::{bar_residual, is_primary, radical, Pairing};
use ifmod_core::IfSet;
use ifmod_laws::paper;

/// The checked-in expected values, `key = value` per line.
pub const EXPECTED: &str = include_str!("../data/paper_expected.txt");

/// How each finite model stands in for the original example.
pub const MODELS: [(&str, &str); 3] = [
    ("z4", "Z acting on Z4 factors through Z4; modeled as Z4 over Z4"),
    ("z12", "Z acting on Z12 factors through Z12; modeled as Z12 over Z12"),
    ("z6", "the Z-example is constant on cosets of 6Z; modeled as Z6 over Z6"),
];

fn push_table(rows: &mut Vec<(String, String)>, prefix: &str, a: &IfSet) {
    for x in a.carrier().elements() {
        rows.push((format!("{prefix}.{}", a.carrier().label(x)), a.at(x).to_string()));
    }
}

/// Every computed value, keyed like the expected table.
pub fn computed_rows() -> Vec<(String, String)> {
    let mut rows = Vec::new();
    for (name, a) in paper::examples() {
        let rad = radical(&a).expect("worked examples are IF submodules");
        push_table(&mut rows, &format!("{name}.radical"), &rad);
        push_table(&mut rows, &format!("{name}.bar"), &bar_residual(&a));
        let verdict = is_primary(&a, Pairing::Joint).expect("worked examples are IF submodules");
        rows.push((format!("{name}.primary"), if verdict.holds { "holds" } else { "fails" }.into()));
        if let Some(w) = verdict.witness {
            rows.push((format!("{name}.primary.witness"), w.to_string()));
        }
    }
    rows
}

pub fn parse_expected(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| format!("line {}: expected `key = value`", i + 1))?;
        if out.insert(key.trim().to_string(), value.trim().to_string()).is_some() {
            return Err(format!("line {}: duplicate key {}", i + 1, key.trim()));
        }
    }
    Ok(out)
}

fn normalize(s: &str) -> String {
    s.split_whitespace().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffRow {
    pub key: String,
    pub expected: Option<String>,
    pub computed: Option<String>,
}

impl DiffRow {
    pub fn matches(&self) -> bool {
        match (&self.expected, &self.computed) {
            (Some(e), Some(c)) => normalize(e) == normalize(c),
            _ => false,
        }
    }
}

/// Rows in computed order, then expected keys nothing computed.
pub fn compare(expected: &BTreeMap<String, String>, computed: &[(String, String)]) -> Vec<DiffRow> {
    let mut rows: Vec<DiffRow> = computed
        .iter()
        .map(|(k, v)| DiffRow { key: k.clone(), expected: expected.get(k).cloned(), computed: Some(v.clone()) })
        .collect();
    for (k, v) in expected {
        if !computed.iter().any(|(c, _)| c == k) {
            rows.push(DiffRow { key: k.clone(), expected: Some(v.clone()), computed: None });
        }
    }
    rows
}

pub fn render(rows: &[DiffRow]) -> String {
    let width = rows.iter().map(|r| r.key.len()).max().unwrap_or(3).max(3);
    let mut out = String::new();
    for (name, model) in MODELS {
        let _ = writeln!(out, "model {name}: {model}");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<width$}  {:<6}  expected | computed", "key", "status");
    for r in rows {
        let status = if r.matches() { "ok" } else { "DIFF" };
        let e = r.expected.as_deref().unwrap_or("(missing)");
        let c = r.computed.as_deref().unwrap_or("(missing)");
        if r.matches() {
            let _ = writeln!(out, "{:<width$}  {status:<6}  {c}", r.key);
        } else {
            let _ = writeln!(out, "{:<width$}  {status:<6}  {e} | {c}", r.key);
        }
    }
    let bad = rows.iter().filter(|r| !r.matches()).count();
    let _ = writeln!(out);
    let _ = writeln!(out, "{} values, {bad} mismatched", rows.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_table_matches() {
        let rows = compare(&parse_expected(EXPECTED).unwrap(), &computed_rows());
        let bad: Vec<_> = rows.iter().filter(|r| !r.matches()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn one_perturbed_cell_is_one_diff() {
        let text = EXPECTED.replace("z6.radical.2 = 3/10, 1/2", "z6.radical.2 = 1/3, 1/2");
        assert_ne!(text, EXPECTED);
        let rows = compare(&parse_expected(&text).unwrap(), &computed_rows());
        let bad: Vec<_> = rows.iter().filter(|r| !r.matches()).map(|r| r.key.as_str()).collect();
        assert_eq!(bad, ["z6.radical.2"]);
    }

    #[test]
    fn malformed_expected_file() {
        assert!(parse_expected("z4.primary holds").is_err());
        assert!(parse_expected("a = 1\na = 2").is_err());
    }
}
