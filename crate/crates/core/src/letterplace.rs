//! The free supercommutative letterplace algebra on variables `(x_i|j)`.
//!
//! A variable has parity `|x_i| + |j|` (mod 2). Monomials are kept sorted by
//! `(letter, place)`; sorting a word costs a sign of −1 for every transposition
//! of two odd variables, and a repeated odd variable kills the monomial.
//!
//! The weight of a monomial is the largest place occurring in it (−∞ for the
//! empty monomial). Weight is a grading by `(N̄, max)`, and the threshold
//! characters give an action of `(N̲, min)` that deletes every term heavier
//! than the threshold.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactlin::{fmt_rational, Rational};
use crate::extnat::{NbarPoint, NunderPoint};
use crate::text::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LetterplaceError {
    #[error("operands use different parity contexts")]
    ContextMismatch,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Which letters and places are odd. Everything not listed is even.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct ParityContext {
    odd_letters: BTreeSet<u32>,
    odd_places: BTreeSet<u32>,
}

impl ParityContext {
    pub fn new(odd_letters: impl IntoIterator<Item = u32>, odd_places: impl IntoIterator<Item = u32>) -> Self {
        ParityContext { odd_letters: odd_letters.into_iter().collect(), odd_places: odd_places.into_iter().collect() }
    }

    /// Every letter and place even: the ordinary polynomial ring.
    pub fn even() -> Self {
        Self::default()
    }

    pub fn is_odd(&self, v: LPVariable) -> bool {
        self.odd_letters.contains(&v.letter) != self.odd_places.contains(&v.place)
    }

    pub fn monomial_parity(&self, m: &LPMonomial) -> bool {
        m.0.iter().filter(|&&v| self.is_odd(v)).count() % 2 == 1
    }
}

/// The variable `(x_letter|place)`; both indices start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LPVariable {
    pub letter: u32,
    pub place: u32,
}

impl LPVariable {
    pub fn new(letter: u32, place: u32) -> Self {
        LPVariable { letter, place }
    }
}

impl fmt::Display for LPVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x{}|{})", self.letter, self.place)
    }
}

/// A sorted product of variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LPMonomial(Vec<LPVariable>);

impl LPMonomial {
    pub fn one() -> Self {
        LPMonomial(Vec::new())
    }

    pub fn vars(&self) -> &[LPVariable] {
        &self.0
    }

    /// Largest place, or −∞ for the empty monomial.
    pub fn weight(&self) -> NbarPoint {
        self.0.iter().map(|v| NbarPoint::Finite(v.place as u64)).max().unwrap_or(NbarPoint::NegInfinity)
    }
}

impl fmt::Display for LPMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Sorts a word into canonical order. Returns `None` when an odd variable
/// repeats, otherwise the Koszul sign (+1 or −1) and the sorted monomial.
pub fn normalize(word: &[LPVariable], ctx: &ParityContext) -> Option<(i8, LPMonomial)> {
    let mut inversions = 0usize;
    for (i, &a) in word.iter().enumerate() {
        if !ctx.is_odd(a) {
            continue;
        }
        inversions += word[i + 1..].iter().filter(|&&b| b < a && ctx.is_odd(b)).count();
    }
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1] && ctx.is_odd(w[0])) {
        return None;
    }
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, LPMonomial(sorted)))
}

/// A finitely supported rational combination of normal-form monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPPoly {
    terms: BTreeMap<LPMonomial, Rational>,
    ctx: ParityContext,
}

impl LPPoly {
    pub fn zero(ctx: &ParityContext) -> Self {
        LPPoly { terms: BTreeMap::new(), ctx: ctx.clone() }
    }

    pub fn constant(c: Rational, ctx: &ParityContext) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(LPMonomial::one(), c);
        p
    }

    pub fn one(ctx: &ParityContext) -> Self {
        Self::constant(Rational::one(), ctx)
    }

    /// The normalized image of a word, scaled by `c`.
    pub fn from_word(word: &[LPVariable], c: Rational, ctx: &ParityContext) -> Self {
        let mut p = Self::zero(ctx);
        if let Some((sign, m)) = normalize(word, ctx) {
            p.add_term(m, if sign < 0 { -c } else { c });
        }
        p
    }

    pub fn var(letter: u32, place: u32, ctx: &ParityContext) -> Self {
        Self::from_word(&[LPVariable::new(letter, place)], Rational::one(), ctx)
    }

    fn add_term(&mut self, m: LPMonomial, c: Rational) {
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn context(&self) -> &ParityContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LPMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &LPMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_ctx(&self, other: &Self) -> Result<(), LetterplaceError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(LetterplaceError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LetterplaceError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LetterplaceError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, LetterplaceError> {
        self.check_ctx(other)?;
        let mut out = Self::zero(&self.ctx);
        for (m, a) in self.terms() {
            for (n, b) in other.terms() {
                let word: Vec<LPVariable> = m.0.iter().chain(&n.0).copied().collect();
                if let Some((sign, mono)) = normalize(&word, &self.ctx) {
                    let c = a * b;
                    out.add_term(mono, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// `Some(parity)` when every term has the same parity; zero counts as even.
    pub fn parity(&self) -> Option<bool> {
        let mut parities = self.terms.keys().map(|m| self.ctx.monomial_parity(m));
        match parities.next() {
            None => Some(false),
            Some(first) => parities.all(|p| p == first).then_some(first),
        }
    }

    /// Components of fixed weight; they sum to `self`.
    pub fn weight_components(&self) -> BTreeMap<NbarPoint, LPPoly> {
        let mut out: BTreeMap<NbarPoint, LPPoly> = BTreeMap::new();
        for (m, c) in self.terms() {
            out.entry(m.weight()).or_insert_with(|| LPPoly::zero(&self.ctx)).add_term(m.clone(), c.clone());
        }
        out
    }

    /// `γ(z ⊗ p) = Σ_n f_z(n) p_n`: drops every term of weight above `z`.
    pub fn act_min(&self, z: NunderPoint) -> LPPoly {
        let mut out = LPPoly::zero(&self.ctx);
        for (m, c) in self.terms() {
            if NunderPoint::from(m.weight()) <= z {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Terms ordered by `(weight, monomial)`, the order used for printing.
    pub fn sorted_terms(&self) -> Vec<(&LPMonomial, &Rational)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| (a.0.weight(), a.0).cmp(&(b.0.weight(), b.0)));
        terms
    }

    /// Parses an expression such as `3/2*(x1|2)*(x2|1) - (x1|3) + 5`.
    pub fn parse(text: &str, ctx: &ParityContext) -> Result<Self, LetterplaceError> {
        Parser { src: text, pos: 0, ctx }.poly()
    }
}

/// `x_{i_1} … x_{i_n} ↦ (x_{i_1}|1) … (x_{i_n}|n)`, normalized.
pub fn embed_word(letters: &[u32], ctx: &ParityContext) -> LPPoly {
    let word: Vec<LPVariable> = letters.iter().enumerate().map(|(k, &l)| LPVariable::new(l, k as u32 + 1)).collect();
    LPPoly::from_word(&word, Rational::one(), ctx)
}

impl fmt::Display for LPPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.0.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ctx: &'a ParityContext,
}

impl Parser<'_> {
    fn err(&self, at: usize, msg: impl Into<String>) -> LetterplaceError {
        let col = self.src[..at.min(self.src.len())].chars().count() + 1;
        ParseError::new(1, col, msg).into()
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), LetterplaceError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(self.pos, format!("expected `{c}`")))
        }
    }

    fn digits(&mut self) -> Result<&str, LetterplaceError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.err(start, "expected a number"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn index(&mut self) -> Result<u32, LetterplaceError> {
        self.skip_ws();
        let start = self.pos;
        let d = self.digits()?;
        match d.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(self.err(start, "indices start at 1")),
        }
    }

    fn rational(&mut self) -> Result<Rational, LetterplaceError> {
        let num: num_bigint::BigInt = self.digits()?.parse().expect("digits");
        if self.eat('/') {
            let at = self.pos;
            let den: num_bigint::BigInt = self.digits()?.parse().expect("digits");
            if den.is_zero() {
                return Err(self.err(at, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn factor(&mut self) -> Result<LPPoly, LetterplaceError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                self.expect('x')?;
                let letter = self.index()?;
                self.expect('|')?;
                let place = self.index()?;
                self.expect(')')?;
                Ok(LPPoly::var(letter, place, self.ctx))
            }
            Some(c) if c.is_ascii_digit() => Ok(LPPoly::constant(self.rational()?, self.ctx)),
            _ => Err(self.err(self.pos, "expected `(x<letter>|<place>)` or a rational")),
        }
    }

    fn term(&mut self) -> Result<LPPoly, LetterplaceError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.multiply(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn poly(&mut self) -> Result<LPPoly, LetterplaceError> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { first.scale(&-Rational::one()) } else { first };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.err(self.pos, "unexpected input"));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn v(letter: u32, place: u32) -> LPVariable {
        LPVariable::new(letter, place)
    }

    #[test]
    fn normalize_examples() {
        let odd = ParityContext::new([1, 2], []);
        // (x2|1)(x1|1): both odd, out of order.
        assert_eq!(normalize(&[v(2, 1), v(1, 1)], &odd), Some((-1, LPMonomial(vec![v(1, 1), v(2, 1)]))));
        let even = ParityContext::even();
        let sorted = [v(1, 1), v(1, 2), v(3, 1)];
        assert_eq!(normalize(&sorted, &even), Some((1, LPMonomial(sorted.to_vec()))));
        assert_eq!(normalize(&[v(1, 1), v(1, 1)], &odd), None);
        // Even variables commute past odd ones without a sign.
        let mixed = ParityContext::new([1], []);
        assert_eq!(normalize(&[v(2, 1), v(1, 1)], &mixed).unwrap().0, 1);
        // Three odd variables reversed: three transpositions.
        assert_eq!(normalize(&[v(3, 1), v(2, 1), v(1, 1)], &ParityContext::new([1, 2, 3], [])).unwrap().0, -1);
    }

    #[test]
    fn multiply_examples() {
        let even = ParityContext::even();
        let x = LPPoly::var(1, 1, &even);
        let sq = x.multiply(&x).unwrap();
        assert_eq!(sq.terms().next().unwrap().0.vars(), &[v(1, 1), v(1, 1)]);
        let odd = ParityContext::new([1, 2], []);
        let (a, b) = (LPPoly::var(1, 1, &odd), LPPoly::var(2, 1, &odd));
        assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap().scale(&rat(-1)));
        // Letter 1 odd, place 2 even: total parity odd.
        let ctx = ParityContext::new([1], []);
        let y = LPPoly::var(1, 2, &ctx);
        assert!(y.multiply(&y).unwrap().is_zero());
        // Odd letter on an odd place is even, so its square survives.
        let ctx2 = ParityContext::new([1], [2]);
        let z = LPPoly::var(1, 2, &ctx2);
        assert!(!z.multiply(&z).unwrap().is_zero());
        assert_eq!(x.multiply(&z), Err(LetterplaceError::ContextMismatch));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(LPMonomial::one().weight(), NbarPoint::NegInfinity);
        assert_eq!(LPMonomial(vec![v(3, 5)]).weight(), NbarPoint::Finite(5));
        let even = ParityContext::even();
        let p = LPPoly::from_word(&[v(1, 2), v(2, 7), v(1, 3)], rat(1), &even);
        assert_eq!(p.terms().next().unwrap().0.weight(), NbarPoint::Finite(7));
    }

    #[test]
    fn components_examples() {
        let even = ParityContext::even();
        let x = LPPoly::parse("(x1|1)*(x2|1)", &even).unwrap();
        assert_eq!(x.weight_components().len(), 1);
        let p = LPPoly::parse("(x1|1) + (x1|2)", &even).unwrap();
        let comps = p.weight_components();
        assert_eq!(comps[&NbarPoint::Finite(1)], LPPoly::var(1, 1, &even));
        assert_eq!(comps[&NbarPoint::Finite(2)], LPPoly::var(1, 2, &even));
        let q = LPPoly::parse("1 + (x1|3)", &even).unwrap();
        let comps = q.weight_components();
        assert_eq!(comps[&NbarPoint::NegInfinity], LPPoly::one(&even));
        assert_eq!(comps[&NbarPoint::Finite(3)], LPPoly::var(1, 3, &even));
    }

    #[test]
    fn act_examples() {
        let even = ParityContext::even();
        let p = LPPoly::parse("(x1|1)*(x2|2) + (x1|3)", &even).unwrap();
        assert_eq!(p.act_min(NunderPoint::Finite(2)), LPPoly::parse("(x1|1)*(x2|2)", &even).unwrap());
        assert_eq!(p.act_min(NunderPoint::PosInfinity), p);
        let q = LPPoly::parse("5 + (x1|1)", &even).unwrap();
        assert_eq!(q.act_min(NunderPoint::NegInfinity), LPPoly::constant(rat(5), &even));
    }

    #[test]
    fn embed_examples() {
        let even = ParityContext::even();
        let e = embed_word(&[2, 1], &even);
        assert_eq!(e.to_string(), "(x1|2)*(x2|1)");
        assert_eq!(embed_word(&[], &even), LPPoly::one(&even));
        let odd = ParityContext::new([1], []);
        let w = embed_word(&[1, 1], &odd);
        assert_eq!(w.to_string(), "(x1|1)*(x1|2)");
        // Odd letters in reversed order pick up a sign.
        let both = ParityContext::new([1, 2], []);
        assert_eq!(embed_word(&[2, 1], &both).to_string(), "-(x1|2)*(x2|1)");
    }

    #[test]
    fn embed_is_injective_on_short_words() {
        let ctx = ParityContext::new([2], []);
        let mut seen = std::collections::HashSet::new();
        for len in 0..=5u32 {
            for mask in 0..(1u32 << len) {
                let word: Vec<u32> = (0..len).map(|i| 1 + (mask >> i & 1)).collect();
                let image = embed_word(&word, &ctx);
                assert!(!image.is_zero());
                assert!(seen.insert(image.to_string()), "collision at {word:?}");
            }
        }
        assert_eq!(seen.len(), 63);
    }

    #[test]
    fn printing_and_parsing() {
        let even = ParityContext::even();
        let p = LPPoly::parse("-3/2*(x1|3) + 5 + 2*(x2|1)*(x1|1) - (x1|1)", &even).unwrap();
        assert_eq!(p.to_string(), "5 - (x1|1) + 2*(x1|1)*(x2|1) - 3/2*(x1|3)");
        assert_eq!(LPPoly::parse(&p.to_string(), &even).unwrap(), p);
        assert_eq!(LPPoly::parse("(x1|1) - (x1|1)", &even).unwrap().to_string(), "0");
        assert_eq!(LPPoly::parse("2*3*(x1|1)", &even).unwrap().to_string(), "6*(x1|1)");
        let err = |s: &str| match LPPoly::parse(s, &even).unwrap_err() {
            LetterplaceError::Parse(e) => e.column,
            other => panic!("{other:?}"),
        };
        assert_eq!(err("(x0|1)"), 3);
        assert_eq!(err("(x1|1) +"), 9);
        assert_eq!(err("(y1|1)"), 2);
        assert_eq!(err("1/0"), 3);
        assert_eq!(err("(x1|1) (x2|2)"), 8);
    }
}
