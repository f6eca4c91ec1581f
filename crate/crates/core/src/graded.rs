//! Finite-dimensional semilattice-graded algebras and the character action.
//!
//! An algebra is given by structure constants `b_i b_j = Σ_k c_ij^k b_k` over
//! a basis whose elements are homogeneous. A character `f` of the grading
//! semilattice acts by `γ(f ⊗ a) = Σ_s f(s) a_s`, which for the {0,1}-valued
//! characters of a semilattice keeps the components on which `f` is 1.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{fmt_rational, parse_rational, rat, RatMatrix, Rational};
use crate::semilattice::{character_labels, Character, FiniteSemilattice, SemilatticeError};
use crate::text::{column_of, content_lines, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown basis label `{0}`")]
    UnknownBasis(String),
    #[error("unknown semilattice element `{0}`")]
    UnknownDegree(String),
    #[error("basis element `{0}` has no degree")]
    MissingDegree(String),
    #[error("conflicting products for `{0} * {1}`")]
    ConflictingProduct(String, String),
    #[error("character does not belong to the grading semilattice")]
    CharacterMismatch,
    #[error("operands belong to different algebras")]
    ParentMismatch,
    #[error("bad labels: {0}")]
    BadLabels(String),
    #[error(transparent)]
    Semilattice(#[from] SemilatticeError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

type Vector = BTreeMap<usize, Rational>;

/// `(i, j, terms)`: `b_i b_j = Σ c b_k`.
pub type Product = (usize, usize, Vec<(usize, Rational)>);

fn add_into(v: &mut Vector, k: usize, c: Rational) {
    let e = v.entry(k).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&k);
    }
}

/// Finite-dimensional algebra with a homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedFDAlgebra {
    basis: Vec<String>,
    structure: Vec<Vec<Vector>>,
    unit: Vector,
    grading: Arc<FiniteSemilattice>,
    degree: Vec<usize>,
}

impl GradedFDAlgebra {
    /// Assembles an algebra. `products` lists the nonzero products
    /// `(i, j, b_i b_j)`; absent pairs multiply to zero. Only shape is checked
    /// here, the algebra laws are checked by [`verify_grading`](Self::verify_grading).
    pub fn new(
        basis: Vec<String>,
        products: Vec<Product>,
        unit: Vec<(usize, Rational)>,
        grading: Arc<FiniteSemilattice>,
        degree: Vec<usize>,
    ) -> Result<Self, GradedError> {
        let n = basis.len();
        let mut seen = HashMap::new();
        for b in &basis {
            if seen.insert(b.as_str(), ()).is_some() {
                return Err(GradedError::DuplicateLabel(b.clone()));
            }
        }
        if degree.len() != n {
            return Err(GradedError::MissingDegree(basis.get(degree.len()).cloned().unwrap_or_default()));
        }
        if let Some(&d) = degree.iter().find(|&&d| d >= grading.len()) {
            return Err(GradedError::UnknownDegree(format!("#{d}")));
        }
        let bad = |k: usize| GradedError::UnknownBasis(format!("#{k}"));
        let mut structure = vec![vec![Vector::new(); n]; n];
        let mut defined = vec![vec![false; n]; n];
        for (i, j, terms) in products {
            if i >= n || j >= n {
                return Err(bad(i.max(j)));
            }
            if defined[i][j] {
                return Err(GradedError::ConflictingProduct(basis[i].clone(), basis[j].clone()));
            }
            defined[i][j] = true;
            for (k, c) in terms {
                if k >= n {
                    return Err(bad(k));
                }
                add_into(&mut structure[i][j], k, c);
            }
        }
        let mut u = Vector::new();
        for (k, c) in unit {
            if k >= n {
                return Err(bad(k));
            }
            add_into(&mut u, k, c);
        }
        Ok(GradedFDAlgebra { basis, structure, unit: u, grading, degree })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn grading(&self) -> &Arc<FiniteSemilattice> {
        &self.grading
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    /// The same algebra with a different degree assignment.
    pub fn with_degrees(&self, degree: Vec<usize>) -> Result<Self, GradedError> {
        let products = self.product_list();
        let unit = self.unit.iter().map(|(&k, c)| (k, c.clone())).collect();
        Self::new(self.basis.clone(), products, unit, Arc::clone(&self.grading), degree)
    }

    fn product_list(&self) -> Vec<Product> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.structure[i][j].is_empty())
            .map(|(i, j)| (i, j, self.structure[i][j].iter().map(|(&k, c)| (k, c.clone())).collect()))
            .collect()
    }

    fn mul_vectors(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&i, x) in a {
            for (&j, y) in b {
                for (&k, c) in &self.structure[i][j] {
                    add_into(&mut out, k, x * y * c);
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vector {
        Vector::from([(i, Rational::one())])
    }

    /// The unit is concentrated in the identity degree of the grading.
    pub fn unit_is_homogeneous_identity(&self) -> bool {
        self.unit.keys().all(|&k| self.degree[k] == self.grading.identity())
    }

    /// Checks associativity, the unit law, the grading law, and where the
    /// unit sits. A unit spread over several degrees is reported as INFO.
    pub fn verify_grading(&self) -> CheckReport {
        let n = self.dim();
        let l = |i: usize| self.basis[i].as_str();
        let mut report = CheckReport::default();

        let assoc = (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).find(|&(i, j, k)| {
            let (bi, bj, bk) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
            self.mul_vectors(&self.mul_vectors(&bi, &bj), &bk) != self.mul_vectors(&bi, &self.mul_vectors(&bj, &bk))
        });
        report.pass_or_fail("associativity", assoc.map(|(i, j, k)| format!("({}, {}, {})", l(i), l(j), l(k))));

        let unit = (0..n).find(|&i| {
            let b = self.basis_vector(i);
            self.mul_vectors(&self.unit, &b) != b || self.mul_vectors(&b, &self.unit) != b
        });
        report.pass_or_fail("unit", unit.map(|i| l(i).to_string()));

        let grading = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find_map(|(i, j)| {
            let target = self.grading.op(self.degree[i], self.degree[j]);
            self.structure[i][j].keys().find(|&&k| self.degree[k] != target).map(|&k| (i, j, k))
        });
        report.pass_or_fail(
            "grading",
            grading.map(|(i, j, k)| {
                let d = |x: usize| self.grading.label(x);
                format!(
                    "({}, {}, {}): {} * {} lands in {} but {} has degree {}",
                    l(i),
                    l(j),
                    l(k),
                    d(self.degree[i]),
                    d(self.degree[j]),
                    d(self.grading.op(self.degree[i], self.degree[j])),
                    l(k),
                    d(self.degree[k])
                )
            }),
        );
        if self.unit_is_homogeneous_identity() {
            report.push("unit-degree", Status::Pass, None);
        } else {
            report.push("unit-degree", Status::Info, Some(self.unit_spread()));
        }
        report
    }

    fn unit_spread(&self) -> String {
        let mut degrees: Vec<&str> = self.unit.keys().map(|&k| self.grading.label(self.degree[k])).collect();
        degrees.dedup();
        format!("unit spans degrees {}", degrees.join(","))
    }

    /// Looks up a character of the grading by its name `f1`, `f2`, …
    pub fn character_by_name(&self, name: &str) -> Result<Character, GradedError> {
        let chars = self.grading.characters()?;
        character_labels(chars.len())
            .iter()
            .position(|l| l == name)
            .map(|i| chars[i].clone())
            .ok_or(GradedError::CharacterMismatch)
    }

    /// For each character `f` and basis pair: `γ_f(b_i b_j) = γ_f(b_i) γ_f(b_j)`.
    /// The unit law `γ_f(1) = 1` is checked per character when the unit sits
    /// in the identity degree, and reported once as INFO otherwise.
    pub fn check_module_algebra(self: &Arc<Self>) -> Result<CheckReport, GradedError> {
        let chars = self.grading.characters()?;
        let names = character_labels(chars.len());
        let n = self.dim();
        let mut report = CheckReport::default();
        let qualifies = self.unit_is_homogeneous_identity();
        for (f, name) in chars.iter().zip(&names) {
            let witness = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
                let (bi, bj) = (self.element_basis(i), self.element_basis(j));
                let lhs = act_character(f, &bi.multiply(&bj).unwrap()).unwrap();
                let rhs = act_character(f, &bi).unwrap().multiply(&act_character(f, &bj).unwrap()).unwrap();
                lhs != rhs
            });
            report.pass_or_fail(
                &format!("multiplicative {name}"),
                witness.map(|(i, j)| format!("({}, {})", self.basis[i], self.basis[j])),
            );
            if qualifies {
                let one = self.one();
                let ok = act_character(f, &one)? == one;
                report.pass_or_fail(&format!("unit {name}"), (!ok).then(|| "γ(f⊗1) ≠ 1".to_string()));
            }
        }
        if !qualifies {
            report.push(
                "unit",
                Status::Info,
                Some(format!("{}; γ(f⊗1) = Σ f(s)1_s is not 1 for every character", self.unit_spread())),
            );
        }
        Ok(report)
    }

    pub fn element_basis(self: &Arc<Self>, i: usize) -> AlgebraElement {
        AlgebraElement { parent: Arc::clone(self), coords: self.basis_vector(i) }
    }

    pub fn one(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement { parent: Arc::clone(self), coords: self.unit.clone() }
    }

    pub fn element(self: &Arc<Self>, coords: impl IntoIterator<Item = (usize, Rational)>) -> AlgebraElement {
        let mut v = Vector::new();
        for (k, c) in coords {
            add_into(&mut v, k, c);
        }
        AlgebraElement { parent: Arc::clone(self), coords: v }
    }

    /// Parses `label:coeff` pairs separated by commas or whitespace.
    pub fn parse_element(self: &Arc<Self>, text: &str) -> Result<AlgebraElement, GradedError> {
        let mut coords = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let col = column_of(text, tok);
            let (label, coeff) =
                tok.split_once(':').ok_or_else(|| ParseError::new(1, col, "expected `label:coefficient`"))?;
            let k = self.basis_index(label).ok_or_else(|| GradedError::UnknownBasis(label.to_string()))?;
            let c = parse_rational(coeff)
                .ok_or_else(|| ParseError::new(1, col + label.len() + 1, format!("invalid rational `{coeff}`")))?;
            coords.push((k, c));
        }
        Ok(self.element(coords))
    }

    /// The action of every character as a matrix, checked to be a monoid
    /// homomorphism from the dual semilattice into End(A).
    pub fn dual_monoid_action(self: &Arc<Self>) -> Result<ActionReport, GradedError> {
        let dual = self.grading.dual()?;
        let chars = self.grading.characters()?;
        let names = character_labels(chars.len());
        let n = self.dim();
        let matrices: Vec<RatMatrix> = chars
            .iter()
            .map(|f| {
                let cols: Vec<AlgebraElement> =
                    (0..n).map(|j| act_character(f, &self.element_basis(j)).unwrap()).collect();
                RatMatrix::from_fn(n, n, |i, j| cols[j].coeff(i))
            })
            .collect();
        let module = self.check_module_algebra()?;
        let mut report = CheckReport::default();
        for line in module.lines {
            report.lines.push(line);
        }
        for (a, fa) in names.iter().enumerate() {
            for (b, fb) in names.iter().enumerate() {
                let prod = dual.op(a, b);
                let composed = matrices[a].mul(&matrices[b]).expect("square");
                report.pass_or_fail(
                    &format!("compose {fa}·{fb} = {}", names[prod]),
                    (composed != matrices[prod]).then(|| "matrices differ".to_string()),
                );
            }
        }
        let id = dual.identity();
        report.pass_or_fail(
            &format!("identity {}", names[id]),
            (matrices[id] != RatMatrix::identity(n)).then(|| "not the identity".to_string()),
        );
        Ok(ActionReport { names, matrices, report })
    }

    /// Text form referencing the grading semilattice by `semilattice_path`.
    pub fn to_text(&self, semilattice_path: &str) -> String {
        let mut out = format!("basis: {}\n", self.basis.join(" "));
        let unit: Vec<String> =
            self.unit.iter().map(|(&k, c)| format!("{}:{}", self.basis[k], fmt_rational(c))).collect();
        out.push_str(&format!("unit: {}\n", unit.join(" ")));
        out.push_str(&format!("semilattice: {semilattice_path}\n"));
        for (i, b) in self.basis.iter().enumerate() {
            out.push_str(&format!("degree {} {}\n", b, self.grading.label(self.degree[i])));
        }
        for (i, j, terms) in self.product_list() {
            let rhs: Vec<String> =
                terms.iter().map(|(k, c)| format!("{}:{}", self.basis[*k], fmt_rational(c))).collect();
            out.push_str(&format!("mul {} {} = {}\n", self.basis[i], self.basis[j], rhs.join(" + ")));
        }
        out
    }

    /// Parses the graded-algebra text format. `load` resolves the
    /// `semilattice:` reference.
    pub fn parse(
        text: &str,
        mut load: impl FnMut(&str) -> Result<FiniteSemilattice, GradedError>,
    ) -> Result<Self, GradedError> {
        let mut basis: Option<Vec<String>> = None;
        let mut unit_text: Option<(usize, &str, &str)> = None;
        let mut grading: Option<FiniteSemilattice> = None;
        let mut degrees: Vec<(usize, &str, &str, &str)> = Vec::new();
        let mut muls: Vec<(usize, &str, &str, &str, &str)> = Vec::new();
        for (ln, line) in content_lines(text) {
            let body = line.trim();
            let err = |at: &str, msg: &str| ParseError::new(ln, column_of(line, at), msg);
            if let Some(rest) = body.strip_prefix("basis:") {
                basis = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if let Some(rest) = body.strip_prefix("unit:") {
                unit_text = Some((ln, line, rest));
            } else if let Some(rest) = body.strip_prefix("semilattice:") {
                let path = rest.trim();
                if path.is_empty() {
                    return Err(err(body, "expected a semilattice path").into());
                }
                grading = Some(load(path)?);
            } else if let Some(rest) = body.strip_prefix("degree ") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(err(body, "expected `degree <basis> <element>`").into());
                }
                degrees.push((ln, line, parts[0], parts[1]));
            } else if let Some(rest) = body.strip_prefix("mul ") {
                let Some((lhs, rhs)) = rest.split_once('=') else {
                    return Err(err(body, "expected `mul <a> <b> = ...`").into());
                };
                let parts: Vec<&str> = lhs.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(err(body, "expected two basis labels before `=`").into());
                }
                muls.push((ln, line, parts[0], parts[1], rhs));
            } else {
                return Err(err(body, "unrecognized line").into());
            }
        }
        let last = text.lines().count().max(1);
        let basis = basis.ok_or_else(|| ParseError::new(last, 1, "missing `basis:` line"))?;
        let grading = Arc::new(grading.ok_or_else(|| ParseError::new(last, 1, "missing `semilattice:` line"))?);
        let bidx = |l: &str| basis.iter().position(|b| b == l).ok_or_else(|| GradedError::UnknownBasis(l.to_string()));

        let parse_terms =
            |ln: usize, line: &str, s: &str, sep_plus: bool| -> Result<Vec<(usize, Rational)>, GradedError> {
                let mut out = Vec::new();
                let toks: Vec<&str> = if sep_plus {
                    s.split('+').map(str::trim).filter(|t| !t.is_empty()).collect()
                } else {
                    s.split_whitespace().collect()
                };
                for tok in toks {
                    let (label, coeff) = tok
                        .split_once(':')
                        .ok_or_else(|| ParseError::new(ln, column_of(line, tok), "expected `label:coefficient`"))?;
                    let c = parse_rational(coeff.trim()).ok_or_else(|| {
                        ParseError::new(ln, column_of(line, coeff), format!("invalid rational `{}`", coeff.trim()))
                    })?;
                    out.push((bidx(label.trim())?, c));
                }
                Ok(out)
            };

        let unit = match unit_text {
            Some((ln, line, rest)) => parse_terms(ln, line, rest, false)?,
            None => return Err(ParseError::new(last, 1, "missing `unit:` line").into()),
        };
        let mut degree = vec![None; basis.len()];
        for (_, _, b, d) in &degrees {
            let i = bidx(b)?;
            let s = grading.index_of(d).ok_or_else(|| GradedError::UnknownDegree(d.to_string()))?;
            degree[i] = Some(s);
        }
        let degree = degree
            .iter()
            .enumerate()
            .map(|(i, d)| d.ok_or_else(|| GradedError::MissingDegree(basis[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut products = Vec::new();
        for (ln, line, a, b, rhs) in muls {
            products.push((bidx(a)?, bidx(b)?, parse_terms(ln, line, rhs, true)?));
        }
        Self::new(basis, products, unit, grading, degree)
    }
}

/// Upper-triangular `m × m` matrices graded by `({n_l}, max)`.
///
/// The matrix unit `E_pq` gets degree `n_{labels[m − p]}`: the bottom row is
/// the lowest degree and the first row the highest.
pub fn ut_graded(m: usize, labels: &[u64]) -> Result<GradedFDAlgebra, GradedError> {
    if m == 0 {
        return Err(GradedError::BadLabels("size must be at least 1".into()));
    }
    if labels.len() != m {
        return Err(GradedError::BadLabels(format!("expected {m} labels, got {}", labels.len())));
    }
    if labels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(GradedError::BadLabels("labels must be strictly increasing".into()));
    }
    let names: Vec<String> = labels.iter().map(|l| format!("n{l}")).collect();
    let table = (0..m).map(|i| (0..m).map(|j| i.max(j)).collect()).collect();
    let grading = Arc::new(FiniteSemilattice::from_table(names, table, 0)?);
    let units: Vec<(usize, usize)> = (1..=m).flat_map(|p| (p..=m).map(move |q| (p, q))).collect();
    let name = |p: usize, q: usize| if m < 10 { format!("E{p}{q}") } else { format!("E{p}_{q}") };
    let basis = units.iter().map(|&(p, q)| name(p, q)).collect();
    let index: HashMap<(usize, usize), usize> = units.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let mut products = Vec::new();
    for (i, &(p, q)) in units.iter().enumerate() {
        for (j, &(r, s)) in units.iter().enumerate() {
            if q == r {
                products.push((i, j, vec![(index[&(p, s)], Rational::one())]));
            }
        }
    }
    let unit = (1..=m).map(|p| (index[&(p, p)], Rational::one())).collect();
    let degree = units.iter().map(|&(p, _)| m - p).collect();
    GradedFDAlgebra::new(basis, products, unit, grading, degree)
}

/// An element of a graded algebra in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    parent: Arc<GradedFDAlgebra>,
    coords: Vector,
}

impl AlgebraElement {
    pub fn parent(&self) -> &Arc<GradedFDAlgebra> {
        &self.parent
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coords.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn check_parent(&self, other: &Self) -> Result<(), GradedError> {
        if Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(GradedError::ParentMismatch)
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, GradedError> {
        self.check_parent(other)?;
        Ok(AlgebraElement {
            parent: Arc::clone(&self.parent),
            coords: self.parent.mul_vectors(&self.coords, &other.coords),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, GradedError> {
        self.check_parent(other)?;
        let mut coords = self.coords.clone();
        for (&k, c) in &other.coords {
            add_into(&mut coords, k, c.clone());
        }
        Ok(AlgebraElement { parent: Arc::clone(&self.parent), coords })
    }

    /// Splits into homogeneous components keyed by semilattice element.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, AlgebraElement> {
        let mut out: BTreeMap<usize, AlgebraElement> = BTreeMap::new();
        for (&k, c) in &self.coords {
            out.entry(self.parent.degree(k))
                .or_insert_with(|| AlgebraElement { parent: Arc::clone(&self.parent), coords: Vector::new() })
                .coords
                .insert(k, c.clone());
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> =
            self.coords.iter().map(|(&k, c)| format!("{}:{}", self.parent.basis[k], fmt_rational(c))).collect();
        f.write_str(&terms.join(" "))
    }
}

/// `γ(f ⊗ a) = Σ_s f(s) a_s`.
pub fn act_character(f: &Character, a: &AlgebraElement) -> Result<AlgebraElement, GradedError> {
    let grading = a.parent.grading();
    if f.values.len() != grading.len() || !f.is_character_of(grading) {
        return Err(GradedError::CharacterMismatch);
    }
    let coords = a.coords.iter().filter(|(&k, _)| f.value(a.parent.degree(k))).map(|(&k, c)| (k, c.clone())).collect();
    Ok(AlgebraElement { parent: Arc::clone(&a.parent), coords })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub status: Status,
    pub detail: Option<String>,
}

/// A list of named checks printed as `check <name>: PASS|FAIL|INFO [detail]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    fn push(&mut self, name: &str, status: Status, detail: Option<String>) {
        self.lines.push(CheckLine { name: name.to_string(), status, detail });
    }

    fn pass_or_fail(&mut self, name: &str, witness: Option<String>) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.push(name, status, witness);
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            match &l.detail {
                Some(d) => writeln!(f, "check {}: {} {}", l.name, l.status, d)?,
                None => writeln!(f, "check {}: {}", l.name, l.status)?,
            }
        }
        Ok(())
    }
}

/// Matrices of `γ_f` for every character, plus the checks that make
/// `f ↦ γ_f` a monoid homomorphism into unital-where-possible algebra
/// endomorphisms.
#[derive(Debug, Clone)]
pub struct ActionReport {
    pub names: Vec<String>,
    pub matrices: Vec<RatMatrix>,
    pub report: CheckReport,
}

impl ActionReport {
    pub fn matrix(&self, name: &str) -> Option<&RatMatrix> {
        self.names.iter().position(|n| n == name).map(|i| &self.matrices[i])
    }
}

/// Convenience for tests and examples: the element with integer coordinates.
pub fn int_element(a: &Arc<GradedFDAlgebra>, coords: &[(&str, i64)]) -> AlgebraElement {
    a.element(coords.iter().map(|&(l, c)| (a.basis_index(l).expect("known basis label"), rat(c))))
}
