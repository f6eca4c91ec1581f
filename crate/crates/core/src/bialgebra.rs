//! The monoid algebra kS of a finite semilattice as a bialgebra.
//!
//! Basis elements are the monoid elements, with `Δ(s) = s ⊗ s` and
//! `ε(s) = 1`. Quotients are taken by congruences: a congruence `~` yields the
//! biideal `I = span{s − t : s ~ t}` and `kS / I ≅ k(S/~)`, so group-likes in
//! the quotient are classified exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{fmt_rational, rat, RatMatrix, Rational};
use crate::semilattice::{Character, FiniteSemilattice, SemilatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BialgebraError {
    #[error("operands belong to different monoid algebras")]
    ParentMismatch,
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("not a congruence: {0}")]
    NotACongruence(String),
    #[error(transparent)]
    Semilattice(#[from] SemilatticeError),
}

/// A finitely supported rational combination of monoid elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidAlgebraElement {
    parent: Arc<FiniteSemilattice>,
    coeffs: BTreeMap<usize, Rational>,
}

impl MonoidAlgebraElement {
    pub fn zero(parent: &Arc<FiniteSemilattice>) -> Self {
        MonoidAlgebraElement { parent: Arc::clone(parent), coeffs: BTreeMap::new() }
    }

    /// The unit `1·e`.
    pub fn one(parent: &Arc<FiniteSemilattice>) -> Self {
        Self::basis(parent, parent.identity())
    }

    pub fn basis(parent: &Arc<FiniteSemilattice>, s: usize) -> Self {
        Self::from_terms(parent, [(s, Rational::one())])
    }

    pub fn from_terms(parent: &Arc<FiniteSemilattice>, terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut out = Self::zero(parent);
        for (s, c) in terms {
            out.add_term(s, c);
        }
        out
    }

    /// Builds an element from labelled coefficients.
    pub fn from_labels(parent: &Arc<FiniteSemilattice>, terms: &[(&str, Rational)]) -> Result<Self, BialgebraError> {
        let mut out = Self::zero(parent);
        for (label, c) in terms {
            let s = parent.index_of(label).ok_or_else(|| BialgebraError::UnknownLabel(label.to_string()))?;
            out.add_term(s, c.clone());
        }
        Ok(out)
    }

    fn add_term(&mut self, s: usize, c: Rational) {
        let entry = self.coeffs.entry(s).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&s);
        }
    }

    pub fn parent(&self) -> &Arc<FiniteSemilattice> {
        &self.parent
    }

    pub fn coeff(&self, s: usize) -> Rational {
        self.coeffs.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&s, c)| (s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_parent(&self, other: &Self) -> Result<(), BialgebraError> {
        if Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(BialgebraError::ParentMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, BialgebraError> {
        self.same_parent(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_terms(&self.parent, self.terms().map(|(s, c)| (s, c * k)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, BialgebraError> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Bilinear extension of the monoid operation.
    pub fn multiply(&self, other: &Self) -> Result<Self, BialgebraError> {
        self.same_parent(other)?;
        let mut out = Self::zero(&self.parent);
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                out.add_term(self.parent.op(s, t), a * b);
            }
        }
        Ok(out)
    }

    /// `Σ αₛ s ↦ Σ αₛ s ⊗ s`.
    pub fn comultiply(&self) -> TensorElement {
        TensorElement::from_terms(self.terms().map(|(s, c)| ((s, s), c.clone())))
    }

    /// Sum of coefficients.
    pub fn counit(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn tensor_square(&self) -> TensorElement {
        TensorElement::tensor(self, self)
    }

    /// `Δ(a) = a ⊗ a` and `ε(a) = 1`.
    pub fn is_grouplike(&self) -> bool {
        self.counit().is_one() && self.comultiply() == self.tensor_square()
    }
}

impl fmt::Display for MonoidAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> =
            self.terms().map(|(s, c)| format!("{}:{}", self.parent.label(s), fmt_rational(c))).collect();
        f.write_str(&terms.join(" "))
    }
}

/// Sparse element of kS ⊗ kS.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    coeffs: BTreeMap<(usize, usize), Rational>,
}

impl TensorElement {
    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), Rational)>) -> Self {
        let mut out = TensorElement::default();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, key: (usize, usize), c: Rational) {
        let entry = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn tensor(a: &MonoidAlgebraElement, b: &MonoidAlgebraElement) -> Self {
        Self::from_terms(a.terms().flat_map(|(s, x)| b.terms().map(move |(t, y)| ((s, t), x * y))))
    }

    pub fn coeff(&self, s: usize, t: usize) -> Rational {
        self.coeffs.get(&(s, t)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }

    /// Product in the tensor-square algebra kS ⊗ kS.
    pub fn multiply(&self, other: &Self, s: &FiniteSemilattice) -> Self {
        Self::from_terms(
            self.terms()
                .flat_map(|((a, b), x)| other.terms().map(move |((c, d), y)| ((s.op(a, c), s.op(b, d)), x * y))),
        )
    }
}

/// One line of an axiom report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: &'static str, witness: Option<String>) {
        self.checks.push(AxiomCheck { name, passed: witness.is_none(), witness });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "axiom {}: PASS", c.name)?,
                Some(w) => writeln!(f, "axiom {}: FAIL {}", c.name, w)?,
            }
        }
        Ok(())
    }
}

type Triple = BTreeMap<(usize, usize, usize), Rational>;

fn add_triple(map: &mut Triple, key: (usize, usize, usize), c: Rational) {
    let e = map.entry(key).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// Checks the bialgebra axioms of kS on all basis elements and basis pairs.
pub fn check_bialgebra_axioms(s: &Arc<FiniteSemilattice>) -> AxiomReport {
    let n = s.len();
    let basis: Vec<MonoidAlgebraElement> = (0..n).map(|i| MonoidAlgebraElement::basis(s, i)).collect();
    let one = MonoidAlgebraElement::one(s);
    let label = |i: usize| s.label(i).to_string();
    let mut report = AxiomReport::default();

    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    let triples = || (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))));

    report.record(
        "associativity",
        triples().find_map(|(i, j, k)| {
            let lhs = basis[i].multiply(&basis[j]).unwrap().multiply(&basis[k]).unwrap();
            let rhs = basis[i].multiply(&basis[j].multiply(&basis[k]).unwrap()).unwrap();
            (lhs != rhs).then(|| format!("({}, {}, {})", label(i), label(j), label(k)))
        }),
    );
    report.record(
        "unit",
        (0..n).find_map(|i| {
            let ok = one.multiply(&basis[i]).unwrap() == basis[i] && basis[i].multiply(&one).unwrap() == basis[i];
            (!ok).then(|| label(i))
        }),
    );
    report.record(
        "coassociativity",
        (0..n).find_map(|i| {
            let delta = basis[i].comultiply();
            let mut left = Triple::new();
            let mut right = Triple::new();
            for ((a, b), c) in delta.terms() {
                for ((x, y), d) in basis[a].comultiply().terms() {
                    add_triple(&mut left, (x, y, b), c * d);
                }
                for ((x, y), d) in basis[b].comultiply().terms() {
                    add_triple(&mut right, (a, x, y), c * d);
                }
            }
            (left != right).then(|| label(i))
        }),
    );
    report.record(
        "counit",
        (0..n).find_map(|i| {
            let delta = basis[i].comultiply();
            let left = MonoidAlgebraElement::from_terms(s, delta.terms().map(|((a, b), c)| (b, c * basis[a].counit())));
            let right =
                MonoidAlgebraElement::from_terms(s, delta.terms().map(|((a, b), c)| (a, c * basis[b].counit())));
            (left != basis[i] || right != basis[i]).then(|| label(i))
        }),
    );
    report.record(
        "comultiplication-multiplicative",
        pairs().find_map(|(i, j)| {
            let lhs = basis[i].multiply(&basis[j]).unwrap().comultiply();
            let rhs = basis[i].comultiply().multiply(&basis[j].comultiply(), s);
            (lhs != rhs).then(|| format!("({}, {})", label(i), label(j)))
        }),
    );
    report.record(
        "counit-multiplicative",
        pairs().find_map(|(i, j)| {
            let lhs = basis[i].multiply(&basis[j]).unwrap().counit();
            (lhs != basis[i].counit() * basis[j].counit()).then(|| format!("({}, {})", label(i), label(j)))
        }),
    );
    let unit_delta = one.comultiply() == TensorElement::tensor(&one, &one);
    report.record("comultiplication-unit", (!unit_delta).then(|| label(s.identity())));
    report.record("counit-unit", (!one.counit().is_one()).then(|| label(s.identity())));
    report
}

/// The algebra maps kS → k, i.e. the group-likes of the finite dual (kS)°.
/// For finite S these are exactly the characters of S.
pub fn alg_homs(s: &FiniteSemilattice) -> Result<Vec<Character>, SemilatticeError> {
    s.characters()
}

/// A monoid congruence, stored as a class index per element. Classes are
/// numbered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    parent: Arc<FiniteSemilattice>,
    class_of: Vec<usize>,
}

impl Congruence {
    pub fn discrete(parent: &Arc<FiniteSemilattice>) -> Self {
        Congruence { parent: Arc::clone(parent), class_of: (0..parent.len()).collect() }
    }

    /// Validates an explicit partition.
    pub fn from_classes(parent: &Arc<FiniteSemilattice>, classes: &[Vec<usize>]) -> Result<Self, BialgebraError> {
        let n = parent.len();
        let mut owner = vec![None; n];
        for (k, class) in classes.iter().enumerate() {
            for &s in class {
                if s >= n || owner[s].is_some() {
                    return Err(BialgebraError::NotACongruence(format!("element #{s} is out of range or repeated")));
                }
                owner[s] = Some(k);
            }
        }
        if let Some(s) = owner.iter().position(Option::is_none) {
            return Err(BialgebraError::NotACongruence(format!("`{}` is in no class", parent.label(s))));
        }
        let raw: Vec<usize> = owner.into_iter().map(Option::unwrap).collect();
        let c = Congruence { parent: Arc::clone(parent), class_of: renumber(&raw) };
        c.check_compatible()?;
        Ok(c)
    }

    fn check_compatible(&self) -> Result<(), BialgebraError> {
        let p = &self.parent;
        let n = p.len();
        for s in 0..n {
            for s2 in 0..n {
                if self.class_of[s] != self.class_of[s2] {
                    continue;
                }
                for t in 0..n {
                    if self.class_of[p.op(s, t)] != self.class_of[p.op(s2, t)] {
                        return Err(BialgebraError::NotACongruence(format!(
                            "`{}` ~ `{}` but `{}` * `{}` and `{}` * `{}` fall in different classes",
                            p.label(s),
                            p.label(s2),
                            p.label(s),
                            p.label(t),
                            p.label(s2),
                            p.label(t)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn parent(&self) -> &Arc<FiniteSemilattice> {
        &self.parent
    }

    pub fn class_of(&self, s: usize) -> usize {
        self.class_of[s]
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (s, &k) in self.class_of.iter().enumerate() {
            out[k].push(s);
        }
        out
    }

    /// The quotient monoid S/~. Classes are labelled by joining their members'
    /// labels with `~`.
    pub fn quotient(&self) -> FiniteSemilattice {
        let classes = self.classes();
        let labels =
            classes.iter().map(|c| c.iter().map(|&s| self.parent.label(s)).collect::<Vec<_>>().join("~")).collect();
        let table = classes
            .iter()
            .map(|a| classes.iter().map(|b| self.class_of[self.parent.op(a[0], b[0])]).collect())
            .collect();
        FiniteSemilattice::from_table(labels, table, self.class_of[self.parent.identity()])
            .expect("quotient of a semilattice by a congruence is a semilattice")
    }
}

fn renumber(raw: &[usize]) -> Vec<usize> {
    let mut map = BTreeMap::new();
    raw.iter()
        .map(|&k| {
            let next = map.len();
            *map.entry(k).or_insert(next)
        })
        .collect()
}

/// Smallest congruence containing the given label pairs.
pub fn congruence_closure(s: &Arc<FiniteSemilattice>, pairs: &[(&str, &str)]) -> Result<Congruence, BialgebraError> {
    let idx = |l: &str| s.index_of(l).ok_or_else(|| BialgebraError::UnknownLabel(l.to_string()));
    let n = s.len();
    let mut uf = UnionFind::new(n);
    for (a, b) in pairs {
        uf.union(idx(a)?, idx(b)?);
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in a + 1..n {
                if uf.find(a) != uf.find(b) {
                    continue;
                }
                for t in 0..n {
                    changed |= uf.union(s.op(a, t), s.op(b, t));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let raw: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
    Ok(Congruence { parent: Arc::clone(s), class_of: renumber(&raw) })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Image of an element of kS in kS/I ≅ k(S/~).
pub fn project(a: &MonoidAlgebraElement, c: &Congruence, quotient: &Arc<FiniteSemilattice>) -> MonoidAlgebraElement {
    MonoidAlgebraElement::from_terms(quotient, a.terms().map(|(s, x)| (c.class_of(s), x.clone())))
}

/// Group-like test for the coset `a + I`.
pub fn is_grouplike_mod(a: &MonoidAlgebraElement, c: &Congruence) -> bool {
    let q = Arc::new(c.quotient());
    project(a, c, &q).is_grouplike()
}

/// A polynomial of degree at most two in the coordinates `α_q` of a generic
/// element. Monomial keys are sorted variable lists.
pub type QuadPoly = BTreeMap<Vec<usize>, Rational>;

fn add_mono(p: &mut QuadPoly, mut vars: Vec<usize>, c: Rational) {
    vars.sort_unstable();
    let e = p.entry(vars.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&vars);
    }
}

/// Result of the symbolic classification of group-likes in a monoid algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingCheck {
    /// Number of polynomial equations in the system (tensor coordinates plus
    /// the counit equation).
    pub equations: usize,
    /// Every off-diagonal coordinate of `Δa − a⊗a` is a nonzero multiple of
    /// a single product `α_p α_q`.
    pub cross_terms_are_products: bool,
    /// Every diagonal coordinate is `α_q − α_q²`.
    pub diagonal_is_idempotent: bool,
    /// Basis indices whose indicator vectors solve the whole system; by the
    /// two shape conditions these are all solutions.
    pub solutions: Vec<usize>,
}

impl ForcingCheck {
    /// The only solutions are the basis elements, each one of them.
    pub fn passed(&self, dim: usize) -> bool {
        self.cross_terms_are_products && self.diagonal_is_idempotent && self.solutions == (0..dim).collect::<Vec<_>>()
    }
}

/// Builds the equations `Δa − a⊗a = 0`, `ε(a) = 1` for a generic
/// `a = Σ α_q q` in kQ and checks that they force `a` to be a basis element.
///
/// Off-diagonal equations `α_p α_q = 0` leave at most one nonzero
/// coordinate, the diagonal ones `α_q² = α_q` make it 0 or 1 and the counit
/// equation makes it 1. Over a field of characteristic 0 this is the
/// complete solution set.
pub fn grouplike_forcing(q: &Arc<FiniteSemilattice>) -> ForcingCheck {
    let n = q.len();
    let mut system: BTreeMap<(usize, usize), QuadPoly> = BTreeMap::new();
    for v in 0..n {
        for ((a, b), c) in MonoidAlgebraElement::basis(q, v).comultiply().terms() {
            add_mono(system.entry((a, b)).or_default(), vec![v], c.clone());
        }
    }
    for a in 0..n {
        for b in 0..n {
            add_mono(system.entry((a, b)).or_default(), vec![a, b], -Rational::one());
        }
    }
    let mut counit = QuadPoly::new();
    for v in 0..n {
        add_mono(&mut counit, vec![v], MonoidAlgebraElement::basis(q, v).counit());
    }
    add_mono(&mut counit, vec![], -Rational::one());

    let cross_terms_are_products = system
        .iter()
        .filter(|((a, b), _)| a != b)
        .all(|(&(a, b), p)| p.len() == 1 && p.keys().next() == Some(&sorted(vec![a, b])));
    let diagonal_is_idempotent = (0..n).all(|a| {
        let p = &system[&(a, a)];
        p.len() == 2 && p.get(&vec![a]) == Some(&Rational::one()) && p.get(&vec![a, a]) == Some(&-Rational::one())
    });
    let eval = |p: &QuadPoly, point: &[Rational]| {
        p.iter().fold(Rational::zero(), |acc, (vars, c)| acc + vars.iter().fold(c.clone(), |m, &v| m * &point[v]))
    };
    let solutions = (0..n)
        .filter(|&v| {
            let point: Vec<Rational> = (0..n).map(|i| rat((i == v) as i64)).collect();
            system.values().all(|p| eval(p, &point).is_zero()) && eval(&counit, &point).is_zero()
        })
        .collect();
    ForcingCheck { equations: system.len() + 1, cross_terms_are_products, diagonal_is_idempotent, solutions }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// The group-likes of kS/I for a congruence-generated I.
#[derive(Debug, Clone)]
pub struct QuotientGrouplikes {
    pub quotient: Arc<FiniteSemilattice>,
    /// Members in S of each coset `s + I`, one entry per class.
    pub cosets: Vec<Vec<usize>>,
    /// Each coset image `[s]` passes the group-like test.
    pub each_grouplike: bool,
    /// The coset images are linearly independent in the quotient.
    pub independent: bool,
    pub forcing: ForcingCheck,
}

impl QuotientGrouplikes {
    pub fn verified(&self) -> bool {
        self.each_grouplike && self.independent && self.forcing.passed(self.quotient.len())
    }
}

impl fmt::Display for QuotientGrouplikes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quotient: {} classes", self.quotient.len())?;
        for (k, coset) in self.cosets.iter().enumerate() {
            let rep = self.quotient.label(k);
            writeln!(f, "grouplike {}: {} + I ({} members)", rep, rep.split('~').next().unwrap_or(rep), coset.len())?;
        }
        let pf = |b: bool| if b { "PASS" } else { "FAIL" };
        writeln!(f, "check grouplike: {}", pf(self.each_grouplike))?;
        writeln!(f, "check independent: {}", pf(self.independent))?;
        writeln!(f, "check exhaustive: {}", pf(self.forcing.passed(self.quotient.len())))
    }
}

pub fn quotient_grouplikes(c: &Congruence) -> QuotientGrouplikes {
    let s = c.parent();
    let quotient = Arc::new(c.quotient());
    let cosets = c.classes();
    let images: Vec<MonoidAlgebraElement> =
        cosets.iter().map(|class| project(&MonoidAlgebraElement::basis(s, class[0]), c, &quotient)).collect();
    let each_grouplike =
        cosets.iter().all(|class| class.iter().all(|&m| is_grouplike_mod(&MonoidAlgebraElement::basis(s, m), c)));
    let m = RatMatrix::from_fn(images.len(), quotient.len(), |i, j| images[i].coeff(j));
    let independent = m.rank() == images.len();
    QuotientGrouplikes { forcing: grouplike_forcing(&quotient), quotient, cosets, each_grouplike, independent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exactlin::ratio;

    fn two_chain() -> Arc<FiniteSemilattice> {
        Arc::new(corpus::chain(2))
    }

    fn el(s: &Arc<FiniteSemilattice>, terms: &[(&str, i64)]) -> MonoidAlgebraElement {
        let t: Vec<(&str, Rational)> = terms.iter().map(|&(l, c)| (l, rat(c))).collect();
        MonoidAlgebraElement::from_labels(s, &t).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let s = two_chain();
        assert_eq!(el(&s, &[("n1", 1)]).multiply(&el(&s, &[("n2", 1)])).unwrap(), el(&s, &[("n2", 1)]));
        let a = el(&s, &[("n1", 2), ("n2", -5)]);
        assert_eq!(MonoidAlgebraElement::one(&s).multiply(&a).unwrap(), a);
        let lhs = el(&s, &[("n1", 1), ("n2", 1)]).multiply(&el(&s, &[("n1", 1), ("n2", -1)])).unwrap();
        assert_eq!(lhs, el(&s, &[("n1", 1), ("n2", -1)]));
        let other = Arc::new(corpus::chain(3));
        assert_eq!(a.multiply(&MonoidAlgebraElement::one(&other)), Err(BialgebraError::ParentMismatch));
    }

    #[test]
    fn coalgebra_examples() {
        let s = two_chain();
        let n1 = el(&s, &[("n1", 1)]);
        assert_eq!(n1.comultiply(), TensorElement::from_terms([((0, 0), rat(1))]));
        let a = el(&s, &[("n1", 2), ("n2", 3)]);
        assert_eq!(a.comultiply(), TensorElement::from_terms([((0, 0), rat(2)), ((1, 1), rat(3))]));
        assert!(MonoidAlgebraElement::zero(&s).comultiply().is_zero());
        assert_eq!(n1.counit(), rat(1));
        assert_eq!(a.counit(), rat(5));
        assert_eq!(el(&s, &[("n1", 1), ("n2", -1)]).counit(), rat(0));
    }

    #[test]
    fn grouplike_examples() {
        let s = two_chain();
        assert!(el(&s, &[("n1", 1)]).is_grouplike());
        assert!(el(&s, &[("n2", 1)]).is_grouplike());
        assert!(!el(&s, &[("n1", 1), ("n2", 1)]).is_grouplike());
        let half = MonoidAlgebraElement::from_terms(&s, [(0, ratio(1, 2)), (1, ratio(1, 2))]);
        assert!(half.counit().is_one());
        // Δa − a⊗a has cross coefficient −1/4 at (n1, n2).
        let diff = half.comultiply().sub(&half.tensor_square());
        assert_eq!(diff.coeff(0, 1), ratio(-1, 4));
        assert!(!half.is_grouplike());
    }

    #[test]
    fn axioms_hold() {
        let s = two_chain();
        let report = check_bialgebra_axioms(&s);
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), 8);
        assert!(check_bialgebra_axioms(&Arc::new(corpus::chain(1))).all_passed());
        let dual = Arc::new(corpus::boolean(2).dual().unwrap());
        assert!(check_bialgebra_axioms(&dual).all_passed());
    }

    #[test]
    fn report_format() {
        let text = check_bialgebra_axioms(&two_chain()).to_string();
        assert!(text.starts_with("axiom associativity: PASS\n"));
        assert_eq!(text.lines().count(), 8);
    }

    #[test]
    fn alg_homs_examples() {
        let homs = alg_homs(&corpus::chain(2)).unwrap();
        assert_eq!(homs.iter().map(ToString::to_string).collect::<Vec<_>>(), ["1 0", "1 1"]);
        assert_eq!(alg_homs(&corpus::chain(1)).unwrap().len(), 1);
        // Solve f(max(a, b)) = f(a) f(b) over {0,1}^3 with f(n1) = 1 directly.
        let c3 = corpus::chain(3);
        let brute: Vec<[u8; 3]> = (0..8u8)
            .map(|m| [m & 1, m >> 1 & 1, m >> 2 & 1])
            .filter(|f| f[0] == 1 && (0..3).all(|a| (0..3).all(|b| f[a.max(b)] == f[a] * f[b])))
            .collect();
        assert_eq!(brute.len(), 3);
        assert_eq!(alg_homs(&c3).unwrap().len(), 3);
    }

    #[test]
    fn closure_examples() {
        let c3 = Arc::new(
            FiniteSemilattice::validate(&["a", "b", "c"], &[("a", "b", "b"), ("a", "c", "c"), ("b", "c", "c")], "a")
                .unwrap(),
        );
        let discrete = congruence_closure(&c3, &[]).unwrap();
        assert_eq!(discrete.classes(), vec![vec![0], vec![1], vec![2]]);
        let glued = congruence_closure(&c3, &[("b", "c")]).unwrap();
        assert_eq!(glued.classes(), vec![vec![0], vec![1, 2]]);
        let c2 = two_chain();
        let full = congruence_closure(&c2, &[("n1", "n2")]).unwrap();
        assert_eq!(full.num_classes(), 1);
        assert_eq!(full.quotient().len(), 1);
        assert_eq!(congruence_closure(&c2, &[("n1", "zz")]).unwrap_err(), BialgebraError::UnknownLabel("zz".into()));
        // Gluing a with b in the 3-chain forces nothing else.
        assert_eq!(congruence_closure(&c3, &[("a", "b")]).unwrap().classes(), vec![vec![0, 1], vec![2]]);
        // In the Boolean lattice gluing {} with {1} forces {2} ~ {1,2}.
        let b = Arc::new(corpus::boolean(2));
        let g = congruence_closure(&b, &[("{}", "{1}")]).unwrap();
        assert_eq!(g.num_classes(), 2);
    }

    #[test]
    fn from_classes_rejects_non_congruence() {
        let c3 = Arc::new(corpus::chain(3));
        // {n1, n3} vs {n2}: n1 ~ n3 but n1*n2 = n2, n3*n2 = n3.
        let err = Congruence::from_classes(&c3, &[vec![0, 2], vec![1]]).unwrap_err();
        assert!(matches!(err, BialgebraError::NotACongruence(_)));
        assert!(Congruence::from_classes(&c3, &[vec![0], vec![1, 2]]).is_ok());
    }

    #[test]
    fn quotient_examples() {
        let c3 = Arc::new(corpus::chain(3));
        let glued = congruence_closure(&c3, &[("n2", "n3")]).unwrap();
        let q = quotient_grouplikes(&glued);
        assert_eq!(q.cosets, vec![vec![0], vec![1, 2]]);
        assert!(q.verified(), "{q}");
        assert_eq!(q.quotient.labels(), ["n1", "n2~n3"]);
        // n2 − n3 ∈ I, so n2 + I = n3 + I and (n2 + n3)/2 + I is group-like.
        let avg = MonoidAlgebraElement::from_terms(&c3, [(1, ratio(1, 2)), (2, ratio(1, 2))]);
        assert!(!avg.is_grouplike());
        assert!(is_grouplike_mod(&avg, &glued));

        let discrete = quotient_grouplikes(&Congruence::discrete(&c3));
        assert_eq!(discrete.cosets.len(), 3);
        assert!(discrete.verified());

        let c2 = two_chain();
        let full = quotient_grouplikes(&congruence_closure(&c2, &[("n1", "n2")]).unwrap());
        assert_eq!(full.cosets, vec![vec![0, 1]]);
        assert!(full.verified());
    }

    #[test]
    fn forcing_shape() {
        let f = grouplike_forcing(&Arc::new(corpus::chain(3)));
        assert_eq!(f.equations, 10);
        assert!(f.cross_terms_are_products && f.diagonal_is_idempotent);
        assert_eq!(f.solutions, vec![0, 1, 2]);
    }
}
