//! Finite bounded semilattices and their Pontryagin duals.
//!
//! A bounded semilattice is a commutative idempotent monoid. We read the
//! operation as a join: `s ⊑ t` iff `s * t = t`, which makes the identity the
//! bottom element.
//!
//! Characters take values in B = T ∪ {0}. Every element of a semilattice is
//! idempotent and the only idempotents of B are 0 and 1, so a character is a
//! {0,1}-valued map, i.e. the indicator of a subset `F` that contains the
//! identity, is closed under the operation, and whose complement absorbs:
//! `s ∉ F` implies `s * t ∉ F`. Finite semilattices are discrete, so
//! continuity never enters.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::exactlin::{rat, RatMatrix};
use crate::text::{column_of, content_lines, ParseError};

/// Largest semilattice accepted by the character enumerator.
pub const MAX_ENUMERATION_SIZE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemilatticeError {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("conflicting entries for `{0} * {1}`")]
    ConflictingEntry(String, String),
    #[error("missing product for the pair `{0}`, `{1}`")]
    MissingPair(String, String),
    #[error("operation is not idempotent at `{0}`")]
    NotIdempotent(String),
    #[error("operation is not associative at (`{0}`, `{1}`, `{2}`)")]
    NotAssociative(String, String, String),
    #[error("`{0}` is not an identity element")]
    NoIdentity(String),
    #[error("semilattice has {size} elements, the limit is {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A validated finite bounded semilattice. Elements are addressed by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemilattice {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteSemilattice {
    /// Validates a semilattice given by labelled products.
    ///
    /// One orientation per unordered pair is enough; the other is filled in by
    /// commutativity. Diagonal products may be omitted, in which case they are
    /// taken to be idempotent.
    pub fn validate<S: AsRef<str>>(
        elements: &[S],
        products: &[(S, S, S)],
        identity: &str,
    ) -> Result<Self, SemilatticeError> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(SemilatticeError::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| SemilatticeError::UnknownLabel(l.to_string()));
        let n = labels.len();
        let mut partial = vec![vec![None; n]; n];
        for (a, b, c) in products {
            let (a, b, c) = (lookup(a.as_ref())?, lookup(b.as_ref())?, lookup(c.as_ref())?);
            for (x, y) in [(a, b), (b, a)] {
                match partial[x][y] {
                    Some(prev) if prev != c => {
                        return Err(SemilatticeError::ConflictingEntry(labels[a].clone(), labels[b].clone()))
                    }
                    _ => partial[x][y] = Some(c),
                }
            }
        }
        let identity = lookup(identity)?;
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = match partial[i][j] {
                    Some(v) => v,
                    None if i == j => i,
                    None => return Err(SemilatticeError::MissingPair(labels[i].clone(), labels[j].clone())),
                };
            }
        }
        Self::from_table(labels, table, identity)
    }

    /// Validates a full operation table.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self, SemilatticeError> {
        let n = labels.len();
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(SemilatticeError::DuplicateLabel(l.clone()));
            }
        }
        if identity >= n {
            return Err(SemilatticeError::NoIdentity(format!("#{identity}")));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(SemilatticeError::MissingPair(labels[0].clone(), labels[0].clone()));
        }
        let l = |i: usize| labels[i].clone();
        let mut pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        if let Some((i, j)) = pairs.find(|&(i, j)| table[i][j] != table[j][i]) {
            return Err(SemilatticeError::ConflictingEntry(l(i), l(j)));
        }
        if let Some(s) = (0..n).find(|&s| table[s][s] != s) {
            return Err(SemilatticeError::NotIdempotent(l(s)));
        }
        if (0..n).any(|s| table[identity][s] != s) {
            return Err(SemilatticeError::NoIdentity(l(identity)));
        }
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    if table[table[s][t]][u] != table[s][table[t][u]] {
                        return Err(SemilatticeError::NotAssociative(l(s), l(t), l(u)));
                    }
                }
            }
        }
        Ok(FiniteSemilattice { labels, table, identity })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, s: usize, t: usize) -> usize {
        self.table[s][t]
    }

    /// The relation `s ⊑ t` iff `s * t = t`.
    pub fn induced_order(&self) -> InducedOrder {
        let n = self.len();
        let leq = (0..n).map(|s| (0..n).map(|t| self.op(s, t) == t).collect()).collect();
        InducedOrder { leq }
    }

    /// All characters, ordered by ascending support size and then by bit
    /// vector with earlier elements preferred.
    pub fn characters(&self) -> Result<Vec<Character>, SemilatticeError> {
        let n = self.len();
        if n > MAX_ENUMERATION_SIZE {
            return Err(SemilatticeError::SizeLimit { size: n, limit: MAX_ENUMERATION_SIZE });
        }
        let mut out = Vec::new();
        let mut bits = vec![None; n];
        bits[self.identity] = Some(true);
        self.extend_characters(&mut bits, 0, &mut out);
        sort_characters(&mut out);
        Ok(out)
    }

    fn extend_characters(&self, bits: &mut Vec<Option<bool>>, next: usize, out: &mut Vec<Character>) {
        if next == bits.len() {
            out.push(Character { values: bits.iter().map(|b| b.unwrap_or(false)).collect() });
            return;
        }
        let choices: &[bool] = match bits[next] {
            Some(true) => &[true],
            Some(false) => &[false],
            None => &[true, false],
        };
        let preset = bits[next].is_some();
        for &b in choices {
            bits[next] = Some(b);
            if self.consistent_at(bits, next) {
                self.extend_characters(bits, next + 1, out);
            }
        }
        if !preset {
            bits[next] = None;
        }
    }

    /// Checks every product constraint that involves `k` and whose three
    /// elements are all decided.
    fn consistent_at(&self, bits: &[Option<bool>], k: usize) -> bool {
        let n = bits.len();
        (0..n).all(|s| {
            (s..n).all(|t| {
                let u = self.op(s, t);
                if s != k && t != k && u != k {
                    return true;
                }
                match (bits[s], bits[t], bits[u]) {
                    (Some(a), Some(b), Some(c)) => c == (a && b),
                    _ => true,
                }
            })
        })
    }

    /// The character monoid under pointwise product, labelled `f1, f2, …` in
    /// the order returned by [`characters`](Self::characters).
    pub fn dual(&self) -> Result<FiniteSemilattice, SemilatticeError> {
        let chars = self.characters()?;
        let index: HashMap<&[bool], usize> = chars.iter().enumerate().map(|(i, c)| (c.values.as_slice(), i)).collect();
        let labels = character_labels(chars.len());
        let table =
            chars.iter().map(|a| chars.iter().map(|b| index[a.product(b).values.as_slice()]).collect()).collect();
        let identity = chars.iter().position(|c| c.values.iter().all(|&v| v)).expect("constant 1 is a character");
        FiniteSemilattice::from_table(labels, table, identity)
    }

    /// The evaluation map `s ↦ (χ ↦ χ(s))` into the double dual, checked to be
    /// a bijective monoid homomorphism.
    pub fn double_dual_iso(&self) -> Result<MonoidMap, DualityError> {
        let chars = self.characters()?;
        let dual = self.dual()?;
        let dual_chars = dual.characters()?;
        let double = dual.dual()?;
        let index: HashMap<&[bool], usize> =
            dual_chars.iter().enumerate().map(|(i, c)| (c.values.as_slice(), i)).collect();
        let mut assignment = Vec::with_capacity(self.len());
        for s in 0..self.len() {
            let ev: Vec<bool> = chars.iter().map(|c| c.values[s]).collect();
            match index.get(ev.as_slice()) {
                Some(&i) => assignment.push(i),
                None => {
                    return Err(DualityError::NotMultiplicative(self.label(s).to_string(), self.label(s).to_string()))
                }
            }
        }
        let map = MonoidMap { source: self.clone(), target: double, assignment };
        map.verify_isomorphism()?;
        Ok(map)
    }

    /// Rank of the `|S| × |Ŝ|` matrix `χ(s)`.
    pub fn ev_matrix_rank(&self) -> Result<usize, SemilatticeError> {
        let chars = self.characters()?;
        let m = RatMatrix::from_fn(self.len(), chars.len(), |s, j| rat(chars[j].values[s] as i64));
        Ok(m.rank())
    }

    /// Parses the line-oriented semilattice text format.
    pub fn parse(text: &str) -> Result<Self, SemilatticeError> {
        let mut elements: Option<Vec<&str>> = None;
        let mut identity: Option<&str> = None;
        let mut products = Vec::new();
        for (ln, line) in content_lines(text) {
            let body = line.trim();
            if let Some(rest) = body.strip_prefix("elements:") {
                if elements.is_some() {
                    return Err(ParseError::new(ln, column_of(line, body), "repeated `elements:` line").into());
                }
                elements = Some(rest.split_whitespace().collect());
            } else if let Some(rest) = body.strip_prefix("identity:") {
                let id = rest.trim();
                if id.is_empty() || id.contains(char::is_whitespace) {
                    return Err(ParseError::new(ln, column_of(line, body), "expected a single identity label").into());
                }
                identity = Some(id);
            } else {
                let Some((lhs, rhs)) = body.split_once('=') else {
                    return Err(ParseError::new(ln, column_of(line, body), "expected `<a> * <b> = <c>`").into());
                };
                let Some((a, b)) = lhs.split_once('*') else {
                    return Err(ParseError::new(ln, column_of(line, body), "expected `*` in product line").into());
                };
                let parts = [a.trim(), b.trim(), rhs.trim()];
                if let Some(bad) = parts.iter().find(|p| p.is_empty() || p.contains(char::is_whitespace)) {
                    let col = if bad.is_empty() { column_of(line, body) } else { column_of(line, bad) };
                    return Err(ParseError::new(ln, col, "expected a single label").into());
                }
                products.push((parts[0], parts[1], parts[2]));
            }
        }
        let last = text.lines().count().max(1);
        let elements = elements.ok_or_else(|| ParseError::new(last, 1, "missing `elements:` line"))?;
        let identity = identity.ok_or_else(|| ParseError::new(last, 1, "missing `identity:` line"))?;
        Self::validate(&elements, &products, identity)
    }

    /// Canonical text form: every unordered off-diagonal pair once, in index
    /// order.
    pub fn to_text(&self) -> String {
        let mut out = format!("elements: {}\nidentity: {}\n", self.labels.join(" "), self.label(self.identity));
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                out.push_str(&format!("{} * {} = {}\n", self.label(i), self.label(j), self.label(self.op(i, j))));
            }
        }
        out
    }
}

/// `f1`, `f2`, … used to name characters.
pub fn character_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("f{i}")).collect()
}

pub(crate) fn sort_characters(chars: &mut [Character]) {
    chars.sort_by(|a, b| a.support_size().cmp(&b.support_size()).then_with(|| b.values.cmp(&a.values)));
}

/// The relation `s ⊑ t` of a semilattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedOrder {
    leq: Vec<Vec<bool>>,
}

impl InducedOrder {
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.leq[s][t]
    }

    /// Strictly related pairs `(s, t)` with `s ⊏ t`, in index order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.leq.len();
        (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).filter(|&(s, t)| s != t && self.leq[s][t]).collect()
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.leq.len();
        (0..n).all(|s| self.leq[s][s])
            && (0..n).all(|s| (0..n).all(|t| s == t || !(self.leq[s][t] && self.leq[t][s])))
            && (0..n).all(|s| (0..n).all(|t| (0..n).all(|u| !(self.leq[s][t] && self.leq[t][u]) || self.leq[s][u])))
    }
}

/// A {0,1}-valued multiplicative map on a semilattice, indexed like the
/// semilattice's elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    pub values: Vec<bool>,
}

impl Character {
    pub fn value(&self, s: usize) -> bool {
        self.values[s]
    }

    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|&&v| v).count()
    }

    /// Pointwise product.
    pub fn product(&self, other: &Character) -> Character {
        Character { values: self.values.iter().zip(&other.values).map(|(&a, &b)| a && b).collect() }
    }

    /// Checks the identity and multiplicativity conditions against `s`.
    pub fn is_character_of(&self, s: &FiniteSemilattice) -> bool {
        let n = s.len();
        self.values.len() == n
            && self.values[s.identity()]
            && (0..n).all(|a| (0..n).all(|b| self.values[s.op(a, b)] == (self.values[a] && self.values[b])))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<&str> = self.values.iter().map(|&b| if b { "1" } else { "0" }).collect();
        f.write_str(&bits.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("`{0}` and `{1}` have the same image")]
    NotInjective(String, String),
    #[error("`{0}` is not in the image")]
    NotSurjective(String),
    #[error("map is not multiplicative at (`{0}`, `{1}`)")]
    NotMultiplicative(String, String),
    #[error(transparent)]
    Semilattice(#[from] SemilatticeError),
}

/// An assignment between two semilattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidMap {
    pub source: FiniteSemilattice,
    pub target: FiniteSemilattice,
    pub assignment: Vec<usize>,
}

impl MonoidMap {
    pub fn apply(&self, s: usize) -> usize {
        self.assignment[s]
    }

    pub fn verify_homomorphism(&self) -> Result<(), DualityError> {
        let (src, tgt) = (&self.source, &self.target);
        if self.apply(src.identity()) != tgt.identity() {
            let id = src.label(src.identity()).to_string();
            return Err(DualityError::NotMultiplicative(id.clone(), id));
        }
        for s in 0..src.len() {
            for t in 0..src.len() {
                if self.apply(src.op(s, t)) != tgt.op(self.apply(s), self.apply(t)) {
                    return Err(DualityError::NotMultiplicative(src.label(s).into(), src.label(t).into()));
                }
            }
        }
        Ok(())
    }

    pub fn verify_isomorphism(&self) -> Result<(), DualityError> {
        let mut preimage = vec![None; self.target.len()];
        for (s, &img) in self.assignment.iter().enumerate() {
            if let Some(prev) = preimage[img] {
                return Err(DualityError::NotInjective(self.source.label(prev).into(), self.source.label(s).into()));
            }
            preimage[img] = Some(s);
        }
        if let Some(missing) = preimage.iter().position(Option::is_none) {
            return Err(DualityError::NotSurjective(self.target.label(missing).into()));
        }
        self.verify_homomorphism()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> FiniteSemilattice {
        FiniteSemilattice::validate(&["n1", "n2"], &[("n1", "n2", "n2")], "n1").unwrap()
    }

    fn boolean2() -> FiniteSemilattice {
        let products = [
            ("{}", "{1}", "{1}"),
            ("{}", "{2}", "{2}"),
            ("{}", "{1,2}", "{1,2}"),
            ("{1}", "{2}", "{1,2}"),
            ("{1}", "{1,2}", "{1,2}"),
            ("{2}", "{1,2}", "{1,2}"),
        ];
        FiniteSemilattice::validate(&["{}", "{1}", "{2}", "{1,2}"], &products, "{}").unwrap()
    }

    /// Exhaustive search over all subsets, independent of the pruned enumerator.
    fn all_bitvector_characters(s: &FiniteSemilattice) -> Vec<Character> {
        let n = s.len();
        let mut out: Vec<Character> = (0u32..1 << n)
            .map(|mask| Character { values: (0..n).map(|i| mask >> i & 1 == 1).collect() })
            .filter(|c| c.is_character_of(s))
            .collect();
        sort_characters(&mut out);
        out
    }

    #[test]
    fn validate_examples() {
        assert_eq!(two_chain().len(), 2);
        let single = FiniteSemilattice::validate::<&str>(&["e"], &[], "e").unwrap();
        assert_eq!(single.op(0, 0), 0);
        let err = FiniteSemilattice::validate(&["a", "b"], &[("a", "b", "a"), ("b", "b", "a")], "a").unwrap_err();
        assert_eq!(err, SemilatticeError::NotIdempotent("b".into()));
    }

    #[test]
    fn validate_errors_name_offenders() {
        use SemilatticeError::*;
        let v =
            |els: &[&str], ps: &[(&str, &str, &str)], id: &str| FiniteSemilattice::validate(els, ps, id).unwrap_err();
        assert_eq!(v(&["a", "a"], &[], "a"), DuplicateLabel("a".into()));
        assert_eq!(v(&["a", "b"], &[], "a"), MissingPair("a".into(), "b".into()));
        assert_eq!(v(&["a", "b"], &[("a", "b", "b")], "b"), NoIdentity("b".into()));
        assert_eq!(v(&["a", "b"], &[("a", "b", "b"), ("b", "a", "a")], "a"), ConflictingEntry("b".into(), "a".into()));
        assert_eq!(v(&["a"], &[("a", "z", "a")], "a"), UnknownLabel("z".into()));
        // Commutative, idempotent, has identity, but not associative.
        let err = v(
            &["e", "a", "b", "c"],
            &[("e", "a", "a"), ("e", "b", "b"), ("e", "c", "c"), ("a", "b", "c"), ("a", "c", "c"), ("b", "c", "a")],
            "e",
        );
        assert!(matches!(err, NotAssociative(..)), "{err:?}");
    }

    #[test]
    fn induced_order_examples() {
        let ord = two_chain().induced_order();
        assert!(ord.leq(0, 1) && !ord.leq(1, 0));
        let single = FiniteSemilattice::validate::<&str>(&["e"], &[], "e").unwrap();
        assert_eq!(single.induced_order().strict_pairs(), vec![]);
        let b = boolean2();
        let sets: [&[u8]; 4] = [&[], &[1], &[2], &[1, 2]];
        let ord = b.induced_order();
        assert!(ord.is_partial_order());
        for s in 0..4 {
            for t in 0..4 {
                let subset = sets[s].iter().all(|x| sets[t].contains(x));
                assert_eq!(ord.leq(s, t), subset);
            }
        }
    }

    #[test]
    fn characters_examples() {
        let chars = two_chain().characters().unwrap();
        assert_eq!(chars.iter().map(ToString::to_string).collect::<Vec<_>>(), ["1 0", "1 1"]);
        let single = FiniteSemilattice::validate::<&str>(&["e"], &[], "e").unwrap();
        assert_eq!(single.characters().unwrap().len(), 1);
        let b = boolean2();
        let chars = b.characters().unwrap();
        assert_eq!(chars.len(), 4);
        assert_eq!(chars, all_bitvector_characters(&b));
        // Indicators of principal down-sets.
        let ord = b.induced_order();
        for c in &chars {
            let top =
                (0..4).filter(|&t| c.value(t)).max_by_key(|&t| (0..4).filter(|&s| ord.leq(s, t)).count()).unwrap();
            for s in 0..4 {
                assert_eq!(c.value(s), ord.leq(s, top));
            }
        }
    }

    #[test]
    fn dual_of_two_chain_is_min() {
        let d = two_chain().dual().unwrap();
        assert_eq!(d.labels(), ["f1", "f2"]);
        assert_eq!(d.identity(), 1);
        // f1 * f2 = f1, i.e. the chain under min with identity at the top.
        assert_eq!(d.op(0, 1), 0);
        assert_eq!(d.op(1, 1), 1);
    }

    #[test]
    fn dual_of_four_chain_is_min_chain() {
        let chain = crate::corpus::chain(4);
        let d = chain.dual().unwrap();
        assert_eq!(d.len(), 4);
        // Characters are thresholds: f_k is 1 on the first k elements.
        let chars = chain.characters().unwrap();
        for (k, c) in chars.iter().enumerate() {
            assert_eq!(c.values, (0..4).map(|i| i <= k).collect::<Vec<_>>());
        }
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(d.op(a, b), a.min(b));
            }
        }
    }

    #[test]
    fn double_dual_examples() {
        let iso = two_chain().double_dual_iso().unwrap();
        assert_eq!(iso.assignment.len(), 2);
        let single = FiniteSemilattice::validate::<&str>(&["e"], &[], "e").unwrap();
        assert_eq!(single.double_dual_iso().unwrap().assignment, vec![0]);
        let d12 = crate::corpus::divisors(12);
        assert_eq!(d12.double_dual_iso().unwrap().target.len(), 6);
    }

    #[test]
    fn ev_rank_examples() {
        assert_eq!(two_chain().ev_matrix_rank().unwrap(), 2);
        let single = FiniteSemilattice::validate::<&str>(&["e"], &[], "e").unwrap();
        assert_eq!(single.ev_matrix_rank().unwrap(), 1);
        assert_eq!(boolean2().ev_matrix_rank().unwrap(), 4);
    }

    #[test]
    fn size_limit() {
        let big = crate::corpus::chain(21);
        assert_eq!(big.characters(), Err(SemilatticeError::SizeLimit { size: 21, limit: 20 }));
        assert_eq!(crate::corpus::chain(20).characters().unwrap().len(), 20);
    }

    #[test]
    fn text_format() {
        let text = "# two-chain\nelements: n1 n2\nidentity: n1\n\nn2 * n1 = n2   # reversed orientation\n";
        let s = FiniteSemilattice::parse(text).unwrap();
        assert_eq!(s, two_chain());
        assert_eq!(FiniteSemilattice::parse(&s.to_text()).unwrap(), s);
        let conflict = "elements: a b\nidentity: a\na * b = b\nb * a = a\n";
        assert_eq!(
            FiniteSemilattice::parse(conflict).unwrap_err(),
            SemilatticeError::ConflictingEntry("b".into(), "a".into())
        );
        match FiniteSemilattice::parse("elements: a b\nidentity: a\na + b = b\n").unwrap_err() {
            SemilatticeError::Parse(e) => assert_eq!((e.line, e.column), (3, 1)),
            other => panic!("{other:?}"),
        }
        match FiniteSemilattice::parse("elements: a b\nidentity: a\n  a * b b = b\n").unwrap_err() {
            SemilatticeError::Parse(e) => assert_eq!((e.line, e.column), (3, 7)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn exhaustive_agreement_on_small_structures() {
        for s in [two_chain(), boolean2(), crate::corpus::chain(6), crate::corpus::divisors(30)] {
            assert_eq!(s.characters().unwrap(), all_bitvector_characters(&s));
        }
    }
}
