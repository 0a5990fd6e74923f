//! Executable statements of the catalog laws.

use std::fmt;

use ifmod_core::algebra::{CrispSubset, ModHom};
use ifmod_core::theory::{Pairing, PrimeDefinition};
use ifmod_core::{CutSpec, DegreePair, IfSet, Rational};

use crate::catalog::LawId;
use crate::ops::Ops;
use crate::oracle;

/// One quantifier assignment for a law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Single(IfSet),
    Pair(IfSet, IfSet),
    Crisp(CrispSubset),
    /// A hom together with an IF subset of its source or target, as the law
    /// requires.
    Hom(ModHom, IfSet),
}

impl Instance {
    /// Every IF subset in the instance, in order.
    pub fn ifsets(&self) -> Vec<&IfSet> {
        match self {
            Instance::Single(a) | Instance::Hom(_, a) => vec![a],
            Instance::Pair(a, b) => vec![a, b],
            Instance::Crisp(_) => Vec::new(),
        }
    }
}

fn write_ifs(f: &mut fmt::Formatter<'_>, name: &str, a: &IfSet) -> fmt::Result {
    writeln!(f, "ifs {name} over {}", a.carrier().name())?;
    for x in a.carrier().elements() {
        writeln!(f, "  {}: {}", a.carrier().label(x), a.at(x))?;
    }
    Ok(())
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Single(a) => write_ifs(f, "A", a),
            Instance::Pair(a, b) => {
                write_ifs(f, "A", a)?;
                write_ifs(f, "B", b)
            }
            Instance::Crisp(n) => writeln!(f, "sub N over {} = {n}", n.carrier().name()),
            Instance::Hom(h, a) => {
                writeln!(f, "hom f: {} -> {}", h.source().name(), h.target().name())?;
                for x in h.source().elements() {
                    writeln!(f, "  {} -> {}", h.source().label(x), h.target().label(h.apply(x)))?;
                }
                write_ifs(f, "A", a)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The law's hypothesis does not hold on this instance.
    Vacuous,
    /// The violated clause, with the values that violate it.
    Fail(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

/// Evaluation context: route and definition modes.
#[derive(Clone, Copy)]
pub struct Ctx<'a> {
    pub ops: &'a dyn Ops,
    pub pairing: Pairing,
    pub prime: PrimeDefinition,
    pub grid: &'a [Rational],
}

type Eval = Result<Outcome, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn need<T>(v: Option<T>, what: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("precondition failed: {what}"))
}

fn leq(a: &IfSet, b: &IfSet) -> bool {
    a.leq(b).expect("same carrier")
}

fn meet(a: &IfSet, b: &IfSet) -> IfSet {
    a.intersection(b).expect("same carrier")
}

fn sum(a: &IfSet, b: &IfSet) -> IfSet {
    a.sum(b).expect("same carrier")
}

fn first_diff(a: &IfSet, b: &IfSet) -> String {
    match a.carrier().elements().find(|&x| a.at(x) != b.at(x)) {
        Some(x) => format!("at {}: {} vs {}", a.carrier().label(x), a.at(x), b.at(x)),
        None => "equal".into(),
    }
}

fn first_excess(a: &IfSet, b: &IfSet) -> String {
    match a.carrier().elements().find(|&x| !a.at(x).le(&b.at(x))) {
        Some(x) => format!("at {}: {} not below {}", a.carrier().label(x), a.at(x), b.at(x)),
        None => "below".into(),
    }
}

fn eq_ifs(a: &IfSet, b: &IfSet, what: &str) -> Result<(), String> {
    ensure(a == b, || format!("{what}: {}", first_diff(a, b)))
}

fn le_ifs(a: &IfSet, b: &IfSet, what: &str) -> Result<(), String> {
    ensure(leq(a, b), || format!("{what}: {}", first_excess(a, b)))
}

/// Non-strict cuts at `(α, β) ∈ Im μ × Im ν` with `α + β ≤ 1`.
pub fn image_cuts(a: &IfSet) -> Vec<CutSpec> {
    let mut out = Vec::new();
    for alpha in a.mu_values() {
        for beta in a.nu_values() {
            if let Ok(c) = CutSpec::new(alpha, beta, false) {
                out.push(c);
            }
        }
    }
    out
}

/// Strict cuts over `grid ∪ Im μ` × `grid ∪ Im ν`.
pub fn strict_cuts(a: &IfSet, grid: &[Rational]) -> Vec<CutSpec> {
    let mut alphas = a.mu_values();
    alphas.extend(grid.iter().copied());
    let mut betas = a.nu_values();
    betas.extend(grid.iter().copied());
    let mut out = Vec::new();
    for &alpha in &alphas {
        for &beta in &betas {
            if let Ok(c) = CutSpec::new(alpha, beta, true) {
                out.push(c);
            }
        }
    }
    out
}

/// Evaluates `law` on `inst`. Instances of the wrong shape count as vacuous.
pub fn evaluate(law: LawId, ctx: &Ctx<'_>, inst: &Instance) -> Outcome {
    let result = match (law, inst) {
        (LawId::P1, Instance::Single(a)) => p1(ctx, a),
        (LawId::P2, Instance::Single(a)) => p2(ctx, a),
        (LawId::P3, Instance::Pair(a, b)) => p3(ctx, a, b),
        (LawId::P4, Instance::Pair(a, b)) => p4(ctx, a, b),
        (LawId::P5, Instance::Pair(a, b)) => p5(ctx, a, b),
        (LawId::P6, Instance::Crisp(n)) => p6(ctx, n),
        (LawId::P7, Instance::Single(a)) => p7(ctx, a),
        (LawId::P8, Instance::Single(a)) => p8(ctx, a),
        (LawId::P9, Instance::Single(a)) => p9(ctx, a),
        (LawId::P10, Instance::Single(a)) => p10(ctx, a),
        (LawId::P11, Instance::Hom(f, a)) => p11(ctx, f, a),
        (LawId::P12, Instance::Hom(f, b)) => p12(ctx, f, b),
        (LawId::P13, Instance::Pair(a, b)) => p13(ctx, a, b),
        (LawId::P14, Instance::Crisp(n)) => p14(ctx, n),
        (LawId::P15, Instance::Single(a)) => p15(ctx, a),
        (LawId::P16, Instance::Single(a)) => p16(ctx, a),
        (LawId::P17, Instance::Single(a)) => p17(ctx, a),
        (LawId::P18, Instance::Single(a)) => p18(ctx, a),
        (LawId::P19, Instance::Single(a)) => p19(ctx, a),
        (LawId::P20, Instance::Hom(f, a)) => p20(ctx, f, a),
        (LawId::P21, Instance::Hom(f, b)) => p21(ctx, f, b),
        (LawId::P22, Instance::Hom(f, a)) => p22(ctx, f, a),
        (LawId::P23, Instance::Hom(f, b)) => p23(ctx, f, b),
        (LawId::P24, Instance::Single(a)) => p24(a),
        _ => Ok(Outcome::Vacuous),
    };
    result.unwrap_or_else(Outcome::Fail)
}

fn p1(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    let rad = need(ctx.ops.radical(a), "A is an IF submodule")?;
    ensure(ctx.ops.is_if_ideal(&rad), || format!("radical is not an IF ideal: {rad}"))?;
    Ok(Outcome::Pass)
}

fn p2(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    let rad = need(ctx.ops.radical(a), "A is an IF submodule")?;
    let again = need(ctx.ops.radical(&rad), "radical is an IF submodule of R")?;
    eq_ifs(&again, &rad, "radical of radical differs")?;
    Ok(Outcome::Pass)
}

fn p3(ctx: &Ctx<'_>, a: &IfSet, b: &IfSet) -> Eval {
    let lower = meet(a, b);
    let ra = need(ctx.ops.radical(&lower), "A ∩ B is an IF submodule")?;
    let rb = need(ctx.ops.radical(b), "B is an IF submodule")?;
    le_ifs(&ra, &rb, "radical(A ∩ B) not below radical(B)")?;
    Ok(Outcome::Pass)
}

fn p4(ctx: &Ctx<'_>, a: &IfSet, b: &IfSet) -> Eval {
    let lhs = need(ctx.ops.radical(&meet(a, b)), "A ∩ B is an IF submodule")?;
    let ra = need(ctx.ops.radical(a), "A is an IF submodule")?;
    let rb = need(ctx.ops.radical(b), "B is an IF submodule")?;
    eq_ifs(&lhs, &meet(&ra, &rb), "radical(A ∩ B) vs radical(A) ∩ radical(B)")?;
    Ok(Outcome::Pass)
}

fn p5(ctx: &Ctx<'_>, a: &IfSet, b: &IfSet) -> Eval {
    let ra = need(ctx.ops.radical(a), "A is an IF submodule")?;
    let rb = need(ctx.ops.radical(b), "B is an IF submodule")?;
    let lhs = need(ctx.ops.radical(&sum(&ra, &rb)), "radical(A) + radical(B) is an IF submodule")?;
    let rhs = need(ctx.ops.radical(&sum(a, b)), "A + B is an IF submodule")?;
    le_ifs(&lhs, &rhs, "radical(radical(A) + radical(B)) not below radical(A + B)")?;
    Ok(Outcome::Pass)
}

fn p6(ctx: &Ctx<'_>, n: &CrispSubset) -> Eval {
    let lhs = need(ctx.ops.radical(&IfSet::characteristic(n)), "characteristic function is an IF submodule")?;
    let crisp = need(ctx.ops.crisp_radical(n), "N is a submodule")?;
    eq_ifs(&lhs, &IfSet::characteristic(&crisp), "radical of χ_N vs χ of crisp radical")?;
    Ok(Outcome::Pass)
}

fn cut_commutes(
    ctx: &Ctx<'_>,
    spec: CutSpec,
    fuzzy_side: &IfSet,
    a: &IfSet,
    crisp_op: impl Fn(&CrispSubset) -> Option<CrispSubset>,
    what: &str,
) -> Result<(), String> {
    let lhs = ctx.ops.cut(fuzzy_side, spec);
    let level = ctx.ops.cut(a, spec);
    if level.is_empty() {
        return ensure(lhs.is_empty(), || format!("{spec}: cut of A is empty but {what} cut is {lhs}"));
    }
    let rhs = need(crisp_op(&level), &format!("{spec} cut {level} is a submodule"))?;
    ensure(lhs == rhs, || format!("{spec}: {what} cut {lhs} vs crisp {rhs}"))
}

fn p7(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    let rad = need(ctx.ops.radical(a), "A is an IF submodule")?;
    for spec in image_cuts(a).into_iter().chain(strict_cuts(a, ctx.grid)) {
        cut_commutes(ctx, spec, &rad, a, |n| ctx.ops.crisp_radical(n), "radical")?;
    }
    Ok(Outcome::Pass)
}

fn p8(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    let bar = ctx.ops.bar(a);
    ensure(ctx.ops.is_if_ideal(&bar), || format!("residual is not an IF ideal: {bar}"))?;
    Ok(Outcome::Pass)
}

fn p9(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    let lhs = need(ctx.ops.ideal_radical(&ctx.ops.bar(a)), "residual lives on the ring")?;
    let rad = need(ctx.ops.radical(a), "A is an IF submodule")?;
    eq_ifs(&lhs, &rad, "ideal radical of residual vs radical")?;
    Ok(Outcome::Pass)
}

fn p10(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    let bar = ctx.ops.bar(a);
    for spec in image_cuts(a).into_iter().chain(strict_cuts(a, ctx.grid)) {
        cut_commutes(ctx, spec, &bar, a, |n| ctx.ops.residual(n), "residual")?;
    }
    Ok(Outcome::Pass)
}

fn p11(ctx: &Ctx<'_>, f: &ModHom, a: &IfSet) -> Eval {
    if !f.is_epimorphism() {
        return Ok(Outcome::Vacuous);
    }
    let img = a.image(f).expect("A over source");
    ensure(ctx.ops.is_if_submodule(&img), || format!("image is not an IF submodule: {img}"))?;
    le_ifs(&ctx.ops.bar(a), &ctx.ops.bar(&img), "residual(A) not below residual(f(A))")?;
    Ok(Outcome::Pass)
}

fn p12(ctx: &Ctx<'_>, f: &ModHom, b: &IfSet) -> Eval {
    let pre = b.preimage(f).expect("B over target");
    let (bb, bp) = (ctx.ops.bar(b), ctx.ops.bar(&pre));
    le_ifs(&bb, &bp, "residual(B) not below residual(f⁻¹(B))")?;
    if f.is_epimorphism() {
        eq_ifs(&bp, &bb, "epimorphism: residual(f⁻¹(B)) vs residual(B)")?;
    }
    Ok(Outcome::Pass)
}

fn p13(ctx: &Ctx<'_>, a: &IfSet, b: &IfSet) -> Eval {
    let (ba, bb) = (ctx.ops.bar(a), ctx.ops.bar(b));
    eq_ifs(&ctx.ops.bar(&ba), &ba, "residual of residual")?;
    let low = meet(a, b);
    let bl = ctx.ops.bar(&low);
    le_ifs(&bl, &bb, "residual(A ∩ B) not below residual(B)")?;
    eq_ifs(&bl, &meet(&ba, &bb), "residual(A ∩ B) vs residual(A) ∩ residual(B)")?;
    le_ifs(&sum(&ba, &bb), &ctx.ops.bar(&sum(a, b)), "residual(A) + residual(B) not below residual(A + B)")?;
    Ok(Outcome::Pass)
}

fn p14(ctx: &Ctx<'_>, n: &CrispSubset) -> Eval {
    let Some(crisp) = ctx.ops.is_primary_submodule(n) else { return Ok(Outcome::Vacuous) };
    let fuzzy = need(ctx.ops.is_primary(&IfSet::characteristic(n), ctx.pairing), "χ_N is an IF submodule")?;
    ensure(fuzzy == crisp, || format!("χ_N primary = {fuzzy}, N primary = {crisp}"))?;
    Ok(Outcome::Pass)
}

/// `Some(cut)` for the first proper image cut that is not crisp primary.
fn non_primary_cut(ctx: &Ctx<'_>, a: &IfSet) -> Result<Option<(CutSpec, CrispSubset)>, String> {
    for spec in image_cuts(a) {
        let level = ctx.ops.cut(a, spec);
        if level.is_full() {
            continue;
        }
        if !need(ctx.ops.is_primary_submodule(&level), &format!("{spec} cut is a submodule"))? {
            return Ok(Some((spec, level)));
        }
    }
    Ok(None)
}

fn p15(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    if !need(ctx.ops.is_primary(a, ctx.pairing), "A is an IF submodule")? {
        return Ok(Outcome::Vacuous);
    }
    if let Some((spec, level)) = non_primary_cut(ctx, a)? {
        return Err(format!("A is primary but {spec} cut {level} is not"));
    }
    Ok(Outcome::Pass)
}

fn p16(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    if non_primary_cut(ctx, a)?.is_some() {
        return Ok(Outcome::Vacuous);
    }
    let primary = need(ctx.ops.is_primary(a, ctx.pairing), "A is an IF submodule")?;
    ensure(primary, || "every proper level cut is primary but A is not".into())?;
    Ok(Outcome::Pass)
}

fn p17(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    if !need(ctx.ops.is_primary(a, ctx.pairing), "A is an IF submodule")? {
        return Ok(Outcome::Vacuous);
    }
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    let support = ctx.ops.cut(a, CutSpec::new(zero, one, true).expect("(0,1)"));
    if support.is_full() {
        return Ok(Outcome::Vacuous);
    }
    let primary = need(ctx.ops.is_primary_submodule(&support), "support is a submodule")?;
    ensure(primary, || format!("A is primary but its support {support} is not"))?;
    Ok(Outcome::Pass)
}

fn p18(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    if !need(ctx.ops.is_primary(a, ctx.pairing), "A is an IF submodule")? {
        return Ok(Outcome::Vacuous);
    }
    let bar = ctx.ops.bar(a);
    let weak = need(ctx.ops.is_weakly_primary(&bar, ctx.pairing), "residual is an IF ideal")?;
    ensure(weak, || format!("A is primary but residual {bar} is not weakly primary"))?;
    let rad = need(ctx.ops.radical(a), "A is an IF submodule")?;
    let prime = need(ctx.ops.is_prime(&rad, ctx.prime), "radical is an IF ideal")?;
    ensure(prime, || format!("A is primary but radical {rad} is not prime"))?;
    Ok(Outcome::Pass)
}

fn p19(ctx: &Ctx<'_>, a: &IfSet) -> Eval {
    if !a.carrier().is_ring() || a.at(a.carrier().zero()) != DegreePair::TOP || !ctx.ops.is_if_ideal(a) {
        return Ok(Outcome::Vacuous);
    }
    let primary = need(ctx.ops.is_primary(a, ctx.pairing), "A is an IF submodule of R")?;
    let weak = need(ctx.ops.is_weakly_primary(a, ctx.pairing), "A is an IF ideal")?;
    ensure(primary == weak, || format!("primary = {primary}, weakly primary = {weak}"))?;
    Ok(Outcome::Pass)
}

fn p20(ctx: &Ctx<'_>, f: &ModHom, a: &IfSet) -> Eval {
    if !f.is_epimorphism() {
        return Ok(Outcome::Vacuous);
    }
    let img = a.image(f).expect("A over source");
    let ra = need(ctx.ops.radical(a), "A is an IF submodule")?;
    let ri = need(ctx.ops.radical(&img), "f(A) is an IF submodule")?;
    le_ifs(&ra, &ri, "radical(A) not below radical(f(A))")?;
    if a.is_constant_on_cosets(&f.kernel()) {
        eq_ifs(&ri, &ra, "constant on kernel: radical(f(A)) vs radical(A)")?;
    }
    Ok(Outcome::Pass)
}

fn p21(ctx: &Ctx<'_>, f: &ModHom, b: &IfSet) -> Eval {
    let pre = b.preimage(f).expect("B over target");
    let rb = need(ctx.ops.radical(b), "B is an IF submodule")?;
    let rp = need(ctx.ops.radical(&pre), "f⁻¹(B) is an IF submodule")?;
    le_ifs(&rb, &rp, "radical(B) not below radical(f⁻¹(B))")?;
    if f.is_epimorphism() {
        eq_ifs(&rp, &rb, "epimorphism: radical(f⁻¹(B)) vs radical(B)")?;
    }
    Ok(Outcome::Pass)
}

fn p22(ctx: &Ctx<'_>, f: &ModHom, a: &IfSet) -> Eval {
    if !f.is_epimorphism() || !a.is_constant_on_cosets(&f.kernel()) {
        return Ok(Outcome::Vacuous);
    }
    if !need(ctx.ops.is_primary(a, ctx.pairing), "A is an IF submodule")? {
        return Ok(Outcome::Vacuous);
    }
    let img = a.image(f).expect("A over source");
    let primary = need(ctx.ops.is_primary(&img, ctx.pairing), "f(A) is an IF submodule")?;
    ensure(primary, || format!("A is primary but f(A) = {img} is not"))?;
    Ok(Outcome::Pass)
}

fn p23(ctx: &Ctx<'_>, f: &ModHom, b: &IfSet) -> Eval {
    if !need(ctx.ops.is_primary(b, ctx.pairing), "B is an IF submodule")? {
        return Ok(Outcome::Vacuous);
    }
    let pre = b.preimage(f).expect("B over target");
    let primary = need(ctx.ops.is_primary(&pre, ctx.pairing), "f⁻¹(B) is an IF submodule")?;
    ensure(primary, || format!("B is primary but f⁻¹(B) = {pre} is not"))?;
    Ok(Outcome::Pass)
}

fn p24(a: &IfSet) -> Eval {
    let fast = need(ifmod_core::theory::radical(a).ok(), "A is an IF submodule")?;
    eq_ifs(&fast, &oracle::brute_radical(a), "shortcut radical vs brute force")?;
    Ok(Outcome::Pass)
}
