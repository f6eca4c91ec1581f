use std::path::Path;
use std::sync::Arc;

use semidual_core::bialgebra::{check_bialgebra_axioms, congruence_closure, quotient_grouplikes, BialgebraError};
use semidual_core::corpus::{self, CorpusError};
use semidual_core::exactlin::{fmt_rational, parse_rational, Rational};
use semidual_core::graded::{act_character, ut_graded, GradedError, GradedFDAlgebra};
use semidual_core::letterplace::{embed_word, LPPoly, LetterplaceError, ParityContext};
use semidual_core::nbar_dual::{
    grouplike_decompose, in_finite_dual, is_character, special_det, translate_span_basis, StepFunctional,
};
use semidual_core::semilattice::{character_labels, DualityError, FiniteSemilattice, SemilatticeError};
use semidual_core::{NunderPoint, ParseError};

use crate::report::Report;
use crate::{BalgCmd, FunctionalArgs, GradedCmd, GradedInput, LpArgs, LpCmd, NbarCmd, SlatCmd};

type CmdResult = Result<Report, String>;

fn load_slat(path: &Path) -> Result<FiniteSemilattice, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    FiniteSemilattice::parse(&text).map_err(|e| match e {
        SemilatticeError::Parse(pe) => format!("{}:{pe}", path.display()),
        e => format!("{}: {e}", path.display()),
    })
}

fn load_graded(path: &Path) -> Result<Arc<GradedFDAlgebra>, String> {
    corpus::load_graded(path).map(Arc::new).map_err(|e| match e {
        CorpusError::Graded { name, source: GradedError::Parse(pe) } => format!("{name}:{pe}"),
        e => e.to_string(),
    })
}

fn flag_error(flag: &str, column: usize, message: String) -> String {
    format!("--{flag}: {}", ParseError::new(1, column, message))
}

/// Comma-separated tokens with their 1-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    if text.trim().is_empty() {
        return Vec::new();
    }
    let mut col = 1;
    text.split(',')
        .map(|t| {
            let here = col;
            col += t.chars().count() + 1;
            (here, t)
        })
        .collect()
}

fn rational_list(flag: &str, text: &str) -> Result<Vec<Rational>, String> {
    tokens(text)
        .into_iter()
        .map(|(col, t)| {
            parse_rational(t.trim()).ok_or_else(|| flag_error(flag, col, format!("invalid rational `{t}`")))
        })
        .collect()
}

fn natural_list<T: std::str::FromStr>(flag: &str, text: &str) -> Result<Vec<T>, String> {
    tokens(text)
        .into_iter()
        .map(|(col, t)| t.trim().parse().map_err(|_| flag_error(flag, col, format!("invalid natural number `{t}`"))))
        .collect()
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn slat(cmd: SlatCmd) -> CmdResult {
    let mut r = Report::default();
    let size_err = |e: SemilatticeError| e.to_string();
    match cmd {
        SlatCmd::Check { file } => {
            let s = load_slat(&file)?;
            r.pair("elements", s.len());
            r.pair("identity", s.label(s.identity()));
            r.verdict("partial order", s.induced_order().is_partial_order());
            r.verdict("valid", true);
        }
        SlatCmd::Order { file } => {
            let s = load_slat(&file)?;
            for (a, b) in s.induced_order().strict_pairs() {
                r.pair("order", format!("{} < {}", s.label(a), s.label(b)));
            }
        }
        SlatCmd::Characters { file } => {
            let s = load_slat(&file)?;
            let chars = s.characters().map_err(size_err)?;
            for (name, c) in character_labels(chars.len()).iter().zip(&chars) {
                r.pair(name, c);
            }
        }
        SlatCmd::Dual { file } => {
            let s = load_slat(&file)?;
            let chars = s.characters().map_err(size_err)?;
            for (name, c) in character_labels(chars.len()).iter().zip(&chars) {
                r.pair(name, c);
            }
            let d = s.dual().map_err(size_err)?;
            r.text(d.to_text());
            r.tsv("identity", d.label(d.identity()));
            for i in 0..d.len() {
                for j in i..d.len() {
                    r.tsv(format!("{} * {}", d.label(i), d.label(j)), d.label(d.op(i, j)));
                }
            }
        }
        SlatCmd::DoubleDual { file } => {
            let s = load_slat(&file)?;
            match s.double_dual_iso() {
                Ok(map) => {
                    for i in 0..s.len() {
                        r.pair(format!("ev({})", s.label(i)), map.target.label(map.apply(i)));
                    }
                    r.verdict("isomorphism", true);
                }
                Err(DualityError::Semilattice(e)) => return Err(e.to_string()),
                Err(e) => {
                    r.pair("reason", e);
                    r.verdict("isomorphism", false);
                }
            }
        }
        SlatCmd::EvRank { file } => {
            let s = load_slat(&file)?;
            let rank = s.ev_matrix_rank().map_err(size_err)?;
            r.pair("rank", rank);
            r.pair("elements", s.len());
            r.verdict("full rank", rank == s.len());
        }
    }
    Ok(r)
}

/// Splits on commas outside braces, so labels like `{1,2}` survive.
fn glue_tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start, mut col, mut start_col) = (0i32, 0, 1, 1);
    for (i, ch) in text.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start_col, &text[start..i]));
                start = i + 1;
                start_col = col + 1;
            }
            _ => {}
        }
        col += 1;
    }
    out.push((start_col, &text[start..]));
    out
}

fn glue_pairs(text: &str) -> Result<Vec<(&str, &str)>, String> {
    glue_tokens(text)
        .into_iter()
        .map(|(col, t)| match t.split_once('=') {
            Some((a, b)) if !a.trim().is_empty() && !b.trim().is_empty() => Ok((a.trim(), b.trim())),
            _ => Err(flag_error("glue", col, format!("expected `a=b`, got `{t}`"))),
        })
        .collect()
}

pub fn balg(cmd: BalgCmd) -> CmdResult {
    let mut r = Report::default();
    match cmd {
        BalgCmd::Axioms { file } => {
            let s = Arc::new(load_slat(&file)?);
            let report = check_bialgebra_axioms(&s);
            for c in &report.checks {
                let value = match &c.witness {
                    None => "PASS".to_string(),
                    Some(w) => format!("FAIL {w}"),
                };
                r.pair(format!("axiom {}", c.name), value);
            }
            r.failed = !report.all_passed();
        }
        BalgCmd::Quotient { file, glue } => {
            let s = Arc::new(load_slat(&file)?);
            let pairs = glue_pairs(&glue)?;
            let c = congruence_closure(&s, &pairs).map_err(|e: BialgebraError| e.to_string())?;
            let q = quotient_grouplikes(&c);
            r.pair("quotient", format!("{} classes", q.quotient.len()));
            for (k, coset) in q.cosets.iter().enumerate() {
                let members: Vec<&str> = coset.iter().map(|&m| s.label(m)).collect();
                r.pair(format!("grouplike {}", q.quotient.label(k)), members.join(" "));
            }
            let exhaustive = q.forcing.passed(q.quotient.len());
            r.pair("check grouplike", pass_fail(q.each_grouplike));
            r.pair("check independent", pass_fail(q.independent));
            r.pair("check exhaustive", pass_fail(exhaustive));
            r.failed = !q.verified();
        }
    }
    Ok(r)
}

fn require<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, String> {
    value.as_deref().ok_or_else(|| format!("--{flag} is required"))
}

fn graded_err(flag: &str) -> impl Fn(GradedError) -> String + '_ {
    move |e| match e {
        GradedError::Parse(pe) => format!("--{flag}: {pe}"),
        e => format!("--{flag}: {e}"),
    }
}

pub fn graded(cmd: GradedCmd) -> CmdResult {
    let mut r = Report::default();
    match cmd {
        GradedCmd::Verify(GradedInput { file, .. }) => {
            let a = load_graded(&file)?;
            r.checks("check", &a.verify_grading());
        }
        GradedCmd::Act(GradedInput { file, character, element }) => {
            let a = load_graded(&file)?;
            let name = require(&character, "char")?;
            let f = a.character_by_name(name).map_err(|_| format!("--char: unknown character `{name}`"))?;
            let x = a.parse_element(require(&element, "element")?).map_err(graded_err("element"))?;
            let y = act_character(&f, &x).map_err(|e| e.to_string())?;
            r.text(y.to_string());
            r.tsv("result", y);
        }
        GradedCmd::ModuleAlgebra(GradedInput { file, .. }) => {
            let a = load_graded(&file)?;
            r.checks("check", &a.check_module_algebra().map_err(|e| e.to_string())?);
        }
        GradedCmd::ActionTable(GradedInput { file, .. }) => {
            let a = load_graded(&file)?;
            let table = a.dual_monoid_action().map_err(|e| e.to_string())?;
            r.tsv("basis", a.basis_labels().join(" "));
            for (name, m) in table.names.iter().zip(&table.matrices) {
                r.text(format!("{name}:\n{m}"));
                for i in 0..m.rows() {
                    let row: Vec<String> = m.row(i).iter().map(fmt_rational).collect();
                    r.tsv(format!("{name} row {}", i + 1), row.join(" "));
                }
            }
            r.checks("check", &table.report);
        }
        GradedCmd::Ut { size, labels, out } => {
            let labels: Vec<u64> = match labels {
                Some(text) => natural_list("labels", &text)?,
                None => (1..=size as u64).collect(),
            };
            let a = ut_graded(size, &labels).map_err(|e| e.to_string())?;
            let slat_name = format!("ut{size}-grading.slat");
            let galg_name = format!("ut{size}.galg");
            let slat_text = a.grading().to_text();
            let galg_text = a.to_text(&slat_name);
            match out {
                Some(dir) => {
                    for (name, text) in [(&slat_name, &slat_text), (&galg_name, &galg_text)] {
                        let path = dir.join(name);
                        std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                        r.pair("wrote", name);
                    }
                }
                None => {
                    r.raw(format!("# {slat_name}\n{slat_text}"));
                    r.raw(format!("# {galg_name}\n{galg_text}"));
                }
            }
        }
    }
    Ok(r)
}

fn functional(args: &FunctionalArgs) -> Result<StepFunctional, String> {
    let prefix = rational_list("prefix", &args.prefix)?;
    let tail = parse_rational(args.tail.trim())
        .ok_or_else(|| flag_error("tail", 1, format!("invalid rational `{}`", args.tail)))?;
    Ok(StepFunctional::new(prefix, tail))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn nbar(cmd: NbarCmd) -> CmdResult {
    let mut r = Report::default();
    match cmd {
        NbarCmd::IsChar(args) => {
            let f = functional(&args)?;
            r.pair("functional", &f);
            match is_character(&f) {
                Some(c) => r.pair("character", format!("f_{c}")),
                None => r.pair("character", "none"),
            }
            r.pair("translate span dimension", in_finite_dual(&f).dimension);
        }
        NbarCmd::Decompose(args) => {
            let f = functional(&args)?;
            let d = grouplike_decompose(&f).map_err(|e| e.to_string())?;
            r.text(d.to_string());
            for (c, v) in d.coeffs.iter().rev() {
                r.tsv(format!("coeff {c}"), fmt_rational(v));
            }
            r.verdict("verified", d.verified());
        }
        NbarCmd::TranslateBasis(args) => {
            let f = functional(&args)?;
            let b = translate_span_basis(&f);
            r.pair("breakpoints", join(&b.breakpoints));
            r.pair("points", join(&b.points));
            r.pair("dimension", b.dimension);
            r.verdict("verified", b.verified);
        }
        NbarCmd::Det { row } => {
            let row = rational_list("row", &row)?;
            if row.is_empty() {
                return Err("--row: expected at least one entry".into());
            }
            let d = special_det(&row);
            r.pair("direct", fmt_rational(&d.direct));
            r.pair("closed form", fmt_rational(&d.closed_form));
            r.pair("preconditions", if d.preconditions_hold { "hold" } else { "fail" });
            r.verdict("agree", d.agree());
        }
    }
    Ok(r)
}

fn parity_context(args: &LpArgs) -> Result<ParityContext, String> {
    Ok(ParityContext::new(
        natural_list::<u32>("odd-letters", &args.odd_letters)?,
        natural_list::<u32>("odd-places", &args.odd_places)?,
    ))
}

fn parse_polys(args: &LpArgs, ctx: &ParityContext) -> Result<Vec<LPPoly>, String> {
    args.exprs
        .iter()
        .enumerate()
        .map(|(i, e)| {
            LPPoly::parse(e, ctx).map_err(|err| match err {
                LetterplaceError::Parse(pe) => format!("expression {}: {pe}", i + 1),
                err => format!("expression {}: {err}", i + 1),
            })
        })
        .collect()
}

pub fn lp(cmd: LpCmd) -> CmdResult {
    let mut r = Report::default();
    match cmd {
        LpCmd::Mul(args) => {
            let ctx = parity_context(&args)?;
            let mut product = LPPoly::one(&ctx);
            for p in parse_polys(&args, &ctx)? {
                product = product.multiply(&p).map_err(|e| e.to_string())?;
            }
            r.pair("product", product);
        }
        LpCmd::Weight(args) => {
            let ctx = parity_context(&args)?;
            for (e, p) in args.exprs.iter().zip(parse_polys(&args, &ctx)?) {
                r.pair("expression", e.trim());
                let parity = match p.parity() {
                    Some(false) => "even",
                    Some(true) => "odd",
                    None => "mixed",
                };
                r.pair("parity", parity);
                for (w, comp) in p.weight_components() {
                    r.pair(format!("weight {w}"), comp);
                }
            }
        }
        LpCmd::Act(args) => {
            let ctx = parity_context(&args)?;
            let text = require(&args.z, "z")?;
            let z: NunderPoint =
                text.trim().parse().map_err(|_| flag_error("z", 1, format!("invalid point `{text}`")))?;
            for p in parse_polys(&args, &ctx)? {
                r.pair(format!("act {z}"), p.act_min(z));
            }
        }
        LpCmd::Embed(args) => {
            let ctx = parity_context(&args)?;
            for word in &args.exprs {
                let letters: Vec<u32> = natural_list("word", word)?;
                r.pair(format!("embed {}", word.trim()), embed_word(&letters, &ctx));
            }
        }
    }
    Ok(r)
}
