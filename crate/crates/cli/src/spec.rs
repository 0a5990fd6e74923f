//! The `.ifspec` text format: one cyclic ring, one module over it, and named
//! IF subsets, crisp submodules and homomorphisms.
//!
//! ```text
//! # leading comment lines are kept as the header
//! ring cyclic 12
//! module 12
//!
//! ifs A
//!   0: 1, 0
//!   1: 0, 1
//!   ...
//! end
//!
//! sub N6 = 0, 6
//!
//! hom f to 4
//!   0: 0
//!   ...
//! end
//! ```

use std::fmt;
use std::sync::Arc;

use ifmod_core::algebra::{is_submodule, Carrier, CrispSubset, FinModule, FiniteRing, ModHom};
use ifmod_core::{DegreePair, IfSet};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SpecError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Which carrier a named object lives on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Over {
    /// The document's module.
    Module,
    /// The ring acting on itself.
    Ring,
    /// Another product `ℤ_{d₁} × …` over the same ring.
    Product(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Ifs { name: String, over: Over, set: IfSet },
    Sub { name: String, over: Over, set: CrispSubset },
    Hom { name: String, target: Vec<usize>, hom: ModHom },
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Ifs { name, .. } | Item::Sub { name, .. } | Item::Hom { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDocument {
    pub header: Vec<String>,
    pub ring_order: usize,
    pub module_orders: Vec<usize>,
    pub ring: Arc<FiniteRing>,
    pub module: Carrier,
    pub items: Vec<Item>,
}

impl SpecDocument {
    pub fn ifs(&self, name: &str) -> Option<&IfSet> {
        self.items.iter().find_map(|i| match i {
            Item::Ifs { name: n, set, .. } if n == name => Some(set),
            _ => None,
        })
    }

    pub fn sub(&self, name: &str) -> Option<&CrispSubset> {
        self.items.iter().find_map(|i| match i {
            Item::Sub { name: n, set, .. } if n == name => Some(set),
            _ => None,
        })
    }

    pub fn hom(&self, name: &str) -> Option<&ModHom> {
        self.items.iter().find_map(|i| match i {
            Item::Hom { name: n, hom, .. } if n == name => Some(hom),
            _ => None,
        })
    }

    fn carrier(&self, over: &Over) -> Result<Carrier, String> {
        match over {
            Over::Module => Ok(self.module.clone()),
            Over::Ring => Ok(Carrier::Ring(self.ring.clone())),
            Over::Product(orders) => product(&self.ring, orders),
        }
    }
}

fn product(ring: &Arc<FiniteRing>, orders: &[usize]) -> Result<Carrier, String> {
    FinModule::product(ring.clone(), orders).map(Carrier::module).map_err(|e| e.to_string())
}

struct Line<'a> {
    number: usize,
    raw: &'a str,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, token: &str, message: impl Into<String>) -> SpecError {
        let column = if token.is_empty() {
            1
        } else {
            self.raw.find(token).map(|b| self.raw[..b].chars().count() + 1).unwrap_or(1)
        };
        SpecError { line: self.number, column, message: message.into() }
    }
}

fn strip_comment(s: &str) -> &str {
    s.split_once('#').map_or(s, |(a, _)| a).trim()
}

fn parse_usize(line: &Line<'_>, tok: &str, what: &str) -> Result<usize, SpecError> {
    tok.parse().map_err(|_| line.err(tok, format!("expected {what}, found {tok:?}")))
}

fn parse_orders(line: &Line<'_>, toks: &[&str]) -> Result<Vec<usize>, SpecError> {
    if toks.is_empty() {
        return Err(line.err("", "expected at least one component order"));
    }
    toks.iter().map(|t| parse_usize(line, t, "a component order")).collect()
}

/// `over ring`, `over module`, `over module 4 2`, or nothing.
fn parse_over(line: &Line<'_>, toks: &[&str]) -> Result<Over, SpecError> {
    match toks {
        [] => Ok(Over::Module),
        ["over", "ring"] => Ok(Over::Ring),
        ["over", "module"] => Ok(Over::Module),
        ["over", "module", rest @ ..] => Ok(Over::Product(parse_orders(line, rest)?)),
        [tok, ..] => Err(line.err(tok, "expected `over ring` or `over module [orders]`")),
    }
}

/// Splits at commas outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn element(line: &Line<'_>, carrier: &Carrier, label: &str) -> Result<usize, SpecError> {
    carrier.find_label(label).ok_or_else(|| line.err(label, format!("no element {label:?} in {}", carrier.name())))
}

pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    let lines: Vec<Line<'_>> =
        text.lines().enumerate().map(|(i, raw)| Line { number: i + 1, raw, text: strip_comment(raw) }).collect();
    let mut header = Vec::new();
    let mut i = 0;
    while i < lines.len() && (lines[i].raw.trim_start().starts_with('#') || lines[i].raw.trim().is_empty()) {
        if let Some(h) = lines[i].raw.trim_start().strip_prefix('#') {
            header.push(h.strip_prefix(' ').unwrap_or(h).trim_end().to_string());
        }
        i += 1;
    }

    let mut ring: Option<(usize, Arc<FiniteRing>)> = None;
    let mut module: Option<(Vec<usize>, Carrier)> = None;
    let mut items: Vec<Item> = Vec::new();

    while i < lines.len() {
        let line = &lines[i];
        i += 1;
        if line.text.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.text.split_whitespace().collect();
        let keyword = toks[0];
        if keyword != "ring" && ring.is_none() {
            return Err(line.err(keyword, "the document must start with `ring cyclic N`"));
        }
        match keyword {
            "ring" => {
                if ring.is_some() {
                    return Err(line.err(keyword, "duplicate ring declaration"));
                }
                let n = match toks.as_slice() {
                    ["ring", "cyclic", n] => parse_usize(line, n, "a ring order")?,
                    _ => return Err(line.err(keyword, "expected `ring cyclic N`")),
                };
                let r = FiniteRing::cyclic(n).map_err(|e| line.err(toks[2], e.to_string()))?;
                ring = Some((n, Arc::new(r)));
            }
            "module" => {
                if module.is_some() || !items.is_empty() {
                    return Err(line.err(keyword, "module must be declared once, before any object"));
                }
                let orders = parse_orders(line, &toks[1..])?;
                let r = &ring.as_ref().expect("checked").1;
                let m = product(r, &orders).map_err(|e| line.err(toks[1], e))?;
                module = Some((orders, m));
            }
            "ifs" | "sub" | "hom" => {
                let r = ring.as_ref().expect("checked").1.clone();
                if module.is_none() {
                    let n = r.len();
                    module = Some((vec![n], product(&r, &[n]).expect("n divides n")));
                }
                let name = *toks.get(1).ok_or_else(|| line.err(keyword, "missing name"))?;
                if items.iter().any(|it| it.name() == name) {
                    return Err(line.err(name, format!("duplicate name {name:?}")));
                }
                let doc_module = &module.as_ref().expect("set above").1;
                let item = match keyword {
                    "ifs" => parse_ifs(&lines, &mut i, line, name, &toks[2..], &r, doc_module)?,
                    "sub" => parse_sub(line, name, &r, doc_module)?,
                    _ => parse_hom(&lines, &mut i, line, name, &toks[2..], &r, doc_module)?,
                };
                items.push(item);
            }
            other => return Err(line.err(other, format!("unknown statement {other:?}"))),
        }
    }

    let (ring_order, ring) = ring.ok_or(SpecError { line: 1, column: 1, message: "missing `ring cyclic N`".into() })?;
    let (module_orders, module) = match module {
        Some(m) => m,
        None => (vec![ring_order], product(&ring, &[ring_order]).expect("n divides n")),
    };
    Ok(SpecDocument { header, ring_order, module_orders, ring, module, items })
}

fn resolve(line: &Line<'_>, over: &Over, ring: &Arc<FiniteRing>, module: &Carrier) -> Result<Carrier, SpecError> {
    match over {
        Over::Module => Ok(module.clone()),
        Over::Ring => Ok(Carrier::Ring(ring.clone())),
        Over::Product(orders) => product(ring, orders).map_err(|e| line.err("over", e)),
    }
}

/// Reads `label: rhs` lines up to `end`, returning `(line, label, rhs)`.
fn block<'a, 'b>(
    lines: &'b [Line<'a>],
    i: &mut usize,
    opener: &'b Line<'a>,
) -> Result<Vec<(&'b Line<'a>, &'a str, &'a str)>, SpecError> {
    let mut out = Vec::new();
    loop {
        let Some(line) = lines.get(*i) else {
            return Err(opener.err("", "block is not closed with `end`"));
        };
        *i += 1;
        if line.text.is_empty() {
            continue;
        }
        if line.text == "end" {
            return Ok(out);
        }
        let (label, rhs) =
            line.text.split_once(':').ok_or_else(|| line.err(line.text, "expected `element: value` or `end`"))?;
        out.push((line, label.trim(), rhs.trim()));
    }
}

fn parse_ifs(
    lines: &[Line<'_>],
    i: &mut usize,
    opener: &Line<'_>,
    name: &str,
    rest: &[&str],
    ring: &Arc<FiniteRing>,
    module: &Carrier,
) -> Result<Item, SpecError> {
    let over = parse_over(opener, rest)?;
    let carrier = resolve(opener, &over, ring, module)?;
    let mut degrees: Vec<Option<DegreePair>> = vec![None; carrier.len()];
    for (line, label, rhs) in block(lines, i, opener)? {
        let x = element(line, &carrier, label)?;
        if degrees[x].is_some() {
            return Err(line.err(label, format!("element {label} assigned twice in ifs {name}")));
        }
        let d: DegreePair = rhs.parse().map_err(|e| line.err(rhs, format!("degree invariant: {e}")))?;
        degrees[x] = Some(d);
    }
    if let Some(missing) = degrees.iter().position(Option::is_none) {
        return Err(
            opener.err(name, format!("totality: element {} is not assigned in ifs {name}", carrier.label(missing)))
        );
    }
    let set = IfSet::new(carrier, degrees.into_iter().map(|d| d.expect("checked")).collect())
        .map_err(|e| opener.err(name, e.to_string()))?;
    Ok(Item::Ifs { name: name.to_string(), over, set })
}

fn parse_sub(line: &Line<'_>, name: &str, ring: &Arc<FiniteRing>, module: &Carrier) -> Result<Item, SpecError> {
    let (head, list) = line.text.split_once('=').ok_or_else(|| line.err(name, "expected `sub NAME = elements`"))?;
    let head: Vec<&str> = head.split_whitespace().collect();
    let over = parse_over(line, &head[2..])?;
    let carrier = resolve(line, &over, ring, module)?;
    let mut members = Vec::new();
    for label in split_top_level(list).into_iter().filter(|s| !s.is_empty()) {
        members.push(element(line, &carrier, label)?);
    }
    let set = CrispSubset::from_elements(&carrier, members).map_err(|e| line.err(name, e.to_string()))?;
    if !is_submodule(&set) {
        return Err(line.err(name, format!("submodule: {set} is not a submodule of {}", carrier.name())));
    }
    Ok(Item::Sub { name: name.to_string(), over, set })
}

fn parse_hom(
    lines: &[Line<'_>],
    i: &mut usize,
    opener: &Line<'_>,
    name: &str,
    rest: &[&str],
    ring: &Arc<FiniteRing>,
    module: &Carrier,
) -> Result<Item, SpecError> {
    let target_orders = match rest {
        ["to", orders @ ..] => parse_orders(opener, orders)?,
        _ => return Err(opener.err(name, "expected `hom NAME to ORDERS`")),
    };
    let target = product(ring, &target_orders).map_err(|e| opener.err("to", e))?;
    let mut map: Vec<Option<usize>> = vec![None; module.len()];
    for (line, label, rhs) in block(lines, i, opener)? {
        let x = element(line, module, label)?;
        if map[x].is_some() {
            return Err(line.err(label, format!("element {label} mapped twice in hom {name}")));
        }
        map[x] = Some(element(line, &target, rhs)?);
    }
    if let Some(missing) = map.iter().position(Option::is_none) {
        return Err(
            opener.err(name, format!("totality: element {} is not mapped in hom {name}", module.label(missing)))
        );
    }
    let map = map.into_iter().map(|y| y.expect("checked")).collect();
    let hom = ModHom::new(module.clone(), target, map).map_err(|e| opener.err(name, e.to_string()))?;
    Ok(Item::Hom { name: name.to_string(), target: target_orders, hom })
}

fn orders_text(orders: &[usize]) -> String {
    orders.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

fn over_text(over: &Over) -> String {
    match over {
        Over::Module => String::new(),
        Over::Ring => " over ring".into(),
        Over::Product(orders) => format!(" over module {}", orders_text(orders)),
    }
}

/// Canonical text; parsing it yields an equal document.
impl fmt::Display for SpecDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in &self.header {
            if h.is_empty() {
                writeln!(f, "#")?;
            } else {
                writeln!(f, "# {h}")?;
            }
        }
        writeln!(f, "ring cyclic {}", self.ring_order)?;
        writeln!(f, "module {}", orders_text(&self.module_orders))?;
        for item in &self.items {
            writeln!(f)?;
            match item {
                Item::Ifs { name, over, set } => {
                    writeln!(f, "ifs {name}{}", over_text(over))?;
                    for x in set.carrier().elements() {
                        let d = set.at(x);
                        writeln!(f, "  {}: {}, {}", set.carrier().label(x), d.mu(), d.nu())?;
                    }
                    writeln!(f, "end")?;
                }
                Item::Sub { name, over, set } => {
                    let labels: Vec<String> = set.elements().map(|x| set.carrier().label(x)).collect();
                    writeln!(f, "sub {name}{} = {}", over_text(over), labels.join(", "))?;
                }
                Item::Hom { name, target, hom } => {
                    writeln!(f, "hom {name} to {}", orders_text(target))?;
                    for x in hom.source().elements() {
                        writeln!(f, "  {}: {}", hom.source().label(x), hom.target().label(hom.apply(x)))?;
                    }
                    writeln!(f, "end")?;
                }
            }
        }
        Ok(())
    }
}

impl SpecDocument {
    /// Carrier of a named object, for diagnostics.
    pub fn describe(&self, over: &Over) -> String {
        self.carrier(over).map(|c| c.name()).unwrap_or_else(|e| e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z4: &str =
        "# Z4 example\nring cyclic 4\nmodule 4\n\nifs A\n  0: 1, 0\n  1: 0, 1\n  2: 0.5, 1/2\n  3: 0, 1\nend\n";

    #[test]
    fn parses_and_prints() {
        let doc = parse_spec(Z4).unwrap();
        assert_eq!(doc.header, vec!["Z4 example"]);
        let a = doc.ifs("A").unwrap();
        assert_eq!(a.at(2), DegreePair::frac((1, 2), (1, 2)));
        let printed = doc.to_string();
        assert!(printed.contains("  2: 1/2, 1/2"));
        assert_eq!(parse_spec(&printed).unwrap(), doc);
    }

    #[test]
    fn totality_error_names_the_element() {
        let text = Z4.replace("  3: 0, 1\n", "");
        let err = parse_spec(&text).unwrap_err();
        assert!(err.message.contains("element 3"), "{err}");
        assert_eq!(err.line, 5);
    }

    #[test]
    fn degree_invariant_error() {
        let text = Z4.replace("  1: 0, 1", "  1: 2/3, 2/3");
        let err = parse_spec(&text).unwrap_err();
        assert_eq!((err.line, err.column), (7, 6));
        assert!(err.message.contains("degree invariant"), "{err}");
    }

    #[test]
    fn syntax_errors_are_located() {
        let err = parse_spec("ring cyclic 4\nmodule 3\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 8));
        let err = parse_spec("ring cyclic 4\nfrobnicate\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_spec("ifs A\nend\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_spec("ring cyclic 4\nifs A\n  0: 1, 0\n").unwrap_err();
        assert!(err.message.contains("end"));
        let err = parse_spec("ring cyclic 4\nsub N = 0, 1\n").unwrap_err();
        assert!(err.message.contains("not a submodule"));
        let err = parse_spec("ring cyclic 4\nhom f to 4\n 0: 1\n 1: 2\n 2: 3\n 3: 0\nend\n").unwrap_err();
        assert!(err.message.contains("not a homomorphism"), "{err}");
    }

    #[test]
    fn product_labels_and_carriers() {
        let text = "ring cyclic 2\nmodule 2 2\nsub K = (0,0), (1, 0)\nsub I over ring = 0\n";
        let doc = parse_spec(text).unwrap();
        assert_eq!(doc.sub("K").unwrap().len(), 2);
        assert!(doc.sub("I").unwrap().carrier().is_ring());
        assert_eq!(parse_spec(&doc.to_string()).unwrap(), doc);
    }
}
