//! The finite dual of H = k(N̄, max), where N̄ = N ∪ {−∞}.
//!
//! A functional on H belongs to the finite dual exactly when it is eventually
//! constant, so [`StepFunctional`] stores finitely many leading values and a
//! tail value. The algebra maps H → k are the threshold characters `f_n`
//! (1 up to `n`, 0 beyond) together with `f_{+∞} ≡ 1`; under pointwise product
//! they multiply as `f_s f_t = f_{min(s, t)}`. Every step functional is a
//! unique combination of threshold characters.
//!
//! All checks below compare functionals on the window of positions up to the
//! tail onset plus two. Every functional built here, including each
//! threshold character used, is constant from the tail onset on, so agreement
//! on the window implies agreement on all of N̄.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{fmt_rational, LinalgError, RatMatrix, Rational};
use crate::extnat::{NbarPoint, NunderPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NbarError {
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An eventually constant functional on N̄: `prefix[k]` is the value at
/// position `k` of −∞, 0, 1, …, and every later point takes `tail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepFunctional {
    prefix: Vec<Rational>,
    tail: Rational,
}

impl StepFunctional {
    /// Builds the canonical form: trailing prefix entries equal to the tail
    /// are dropped.
    pub fn new(mut prefix: Vec<Rational>, tail: Rational) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        StepFunctional { prefix, tail }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(Vec::new(), c)
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    pub fn tail(&self) -> &Rational {
        &self.tail
    }

    pub fn eval(&self, m: NbarPoint) -> Rational {
        self.eval_pos(m.position()).clone()
    }

    fn eval_pos(&self, pos: usize) -> &Rational {
        self.prefix.get(pos).unwrap_or(&self.tail)
    }

    /// First point from which the functional is constant.
    pub fn tail_onset(&self) -> NbarPoint {
        NbarPoint::from_position(self.prefix.len())
    }

    /// Positions checked when comparing functionals.
    pub fn window(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.prefix.len() + 2
    }

    /// `(n·f)(m) = f(max(n, m))`.
    pub fn translate(&self, n: NbarPoint) -> StepFunctional {
        let p = n.position();
        let prefix = (0..self.prefix.len()).map(|k| self.eval_pos(k.max(p)).clone()).collect();
        StepFunctional::new(prefix, self.tail.clone())
    }

    /// Pointwise product.
    pub fn product(&self, other: &StepFunctional) -> StepFunctional {
        let len = self.prefix.len().max(other.prefix.len());
        let prefix = (0..len).map(|k| self.eval_pos(k) * other.eval_pos(k)).collect();
        StepFunctional::new(prefix, &self.tail * &other.tail)
    }

    /// Maximal constant runs as `(last position, value)`; the final run is the
    /// infinite tail and has no last position.
    pub fn runs(&self) -> Vec<(Option<usize>, Rational)> {
        let mut out: Vec<(Option<usize>, Rational)> = Vec::new();
        for (k, v) in self.prefix.iter().enumerate() {
            match out.last_mut() {
                Some((end, value)) if value == v => *end = Some(k),
                _ => out.push((Some(k), v.clone())),
            }
        }
        out.push((None, self.tail.clone()));
        out
    }

    /// Number of distinct consecutive values.
    pub fn run_count(&self) -> usize {
        self.runs().len()
    }
}

impl fmt::Display for StepFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: Vec<String> = self.prefix.iter().map(fmt_rational).collect();
        write!(f, "prefix ({}) tail {}", prefix.join(","), fmt_rational(&self.tail))
    }
}

/// The threshold character `f_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThresholdCharacter {
    pub threshold: NunderPoint,
}

impl ThresholdCharacter {
    pub fn new(threshold: NunderPoint) -> Self {
        ThresholdCharacter { threshold }
    }

    pub fn eval(&self, m: NbarPoint) -> bool {
        m <= self.threshold
    }

    pub fn to_functional(self) -> StepFunctional {
        match self.threshold {
            NunderPoint::PosInfinity => StepFunctional::constant(Rational::one()),
            NunderPoint::NegInfinity => StepFunctional::new(vec![Rational::one()], Rational::zero()),
            NunderPoint::Finite(n) => StepFunctional::new(vec![Rational::one(); n as usize + 2], Rational::zero()),
        }
    }
}

fn point_of_threshold(pos: usize) -> NunderPoint {
    NbarPoint::from_position(pos).into()
}

fn window_matrix(fs: &[StepFunctional], window: std::ops::RangeInclusive<usize>) -> RatMatrix {
    let points: Vec<usize> = window.collect();
    RatMatrix::from_fn(points.len(), fs.len(), |i, j| fs[j].eval_pos(points[i]).clone())
}

/// A basis of the translate span `N̄·f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslateBasis {
    /// Last point of every run except the tail: `s_1 < … < s_t`.
    pub breakpoints: Vec<NbarPoint>,
    /// Points whose translates form the basis: the breakpoints, plus the
    /// tail onset when the tail value is nonzero.
    pub points: Vec<NbarPoint>,
    pub dimension: usize,
    /// The basis translates are independent and span every translate.
    pub verified: bool,
}

/// Translating by any point of a run gives the same functional as
/// translating by the last point of that run, so one point per run spans;
/// the run representatives evaluated at the same points form the matrix
/// `(v_{max(i,j)})`, whose determinant is nonzero because consecutive run
/// values differ. The constant tail translate is dropped when it is zero.
pub fn translate_span_basis(f: &StepFunctional) -> TranslateBasis {
    let runs = f.runs();
    let breakpoints: Vec<NbarPoint> = runs.iter().filter_map(|(end, _)| end.map(NbarPoint::from_position)).collect();
    let mut points = breakpoints.clone();
    if !f.tail.is_zero() {
        points.push(f.tail_onset());
    }
    let basis: Vec<StepFunctional> = points.iter().map(|&p| f.translate(p)).collect();
    let all: Vec<StepFunctional> = f.window().map(|p| f.translate(NbarPoint::from_position(p))).collect();
    let window = f.window();
    let basis_rank = window_matrix(&basis, window.clone()).rank();
    let all_rank = window_matrix(&all, window.clone()).rank();
    let combined: Vec<StepFunctional> = basis.iter().chain(&all).cloned().collect();
    let combined_rank = window_matrix(&combined, window).rank();
    let dimension = points.len();
    let verified = basis_rank == dimension && all_rank == dimension && combined_rank == dimension;
    TranslateBasis { breakpoints, points, dimension, verified }
}

/// Membership in the finite dual, witnessed by a finite translate span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDualCertificate {
    pub dimension: usize,
    pub basis: TranslateBasis,
}

/// Every step functional lies in the finite dual: its translate span is
/// finite-dimensional. Conversely a functional whose translate span is
/// finite-dimensional must be eventually constant, which is why no other
/// representation is needed.
pub fn in_finite_dual(f: &StepFunctional) -> FiniteDualCertificate {
    let basis = translate_span_basis(f);
    FiniteDualCertificate { dimension: basis.dimension, basis }
}

/// Recognizes threshold characters: returns `c` when `f = f_c`.
pub fn is_character(f: &StepFunctional) -> Option<NunderPoint> {
    let one = Rational::one();
    let candidate = if f.prefix.is_empty() {
        f.tail.is_one().then_some(NunderPoint::PosInfinity)
    } else if f.tail.is_zero() && f.prefix.iter().all(|v| *v == one) {
        Some(point_of_threshold(f.prefix.len() - 1))
    } else {
        None
    }?;
    // f(max(a, b)) = f(a) f(b) on the window, and f(−∞) = 1.
    let window: Vec<usize> = f.window().collect();
    let multiplicative =
        window.iter().all(|&a| window.iter().all(|&b| *f.eval_pos(a.max(b)) == f.eval_pos(a) * f.eval_pos(b)));
    (multiplicative && f.eval_pos(0).is_one()).then_some(candidate)
}

/// `f_s · f_t = f_{min(s, t)}`, computed by pointwise multiplication and
/// recognized again with [`is_character`].
pub fn char_mult(s: NunderPoint, t: NunderPoint) -> Result<NunderPoint, NbarError> {
    let product = ThresholdCharacter::new(s).to_functional().product(&ThresholdCharacter::new(t).to_functional());
    match is_character(&product) {
        Some(c) if c == s.min(t) => Ok(c),
        other => Err(NbarError::CrossCheck(format!("f_{s} · f_{t} recognized as {other:?}"))),
    }
}

/// Determinant of the matrix with entry `(i, j) = row[max(i, j)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialDet {
    pub direct: Rational,
    /// `row[n−1] · Π (row[i] − row[i+1])`.
    pub closed_form: Rational,
    /// Last entry nonzero and consecutive entries distinct.
    pub preconditions_hold: bool,
}

impl SpecialDet {
    pub fn agree(&self) -> bool {
        self.direct == self.closed_form
    }
}

pub fn special_matrix(row: &[Rational]) -> RatMatrix {
    let n = row.len();
    RatMatrix::from_fn(n, n, |i, j| row[i.max(j)].clone())
}

/// Subtracting row `i + 1` from row `i` clears everything right of the
/// diagonal and leaves `row[i] − row[i+1]` on it, so the determinant
/// telescopes to the closed form.
pub fn special_det(row: &[Rational]) -> SpecialDet {
    let direct = special_matrix(row).det().expect("square by construction");
    let closed_form = match row.last() {
        None => Rational::one(),
        Some(last) => row.windows(2).fold(last.clone(), |acc, w| acc * (&w[0] - &w[1])),
    };
    let preconditions_hold = row.last().is_some_and(|l| !l.is_zero()) && row.windows(2).all(|w| w[0] != w[1]);
    SpecialDet { direct, closed_form, preconditions_hold }
}

/// Expansion of a step functional over threshold characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Coefficient of `f_c` keyed by `c`, one entry per run of `f`. The
    /// `f_{+∞}` entry is present even when the tail value is zero.
    pub coeffs: BTreeMap<NunderPoint, Rational>,
    /// Same coefficients from solving the evaluation system directly.
    pub solved: BTreeMap<NunderPoint, Rational>,
    /// `Σ c_n f_n` equals `f` on the window.
    pub reconstructs: bool,
    /// The evaluation vectors of the characters used are independent.
    pub independent: bool,
}

impl Decomposition {
    /// Characters with a nonzero coefficient.
    pub fn support(&self) -> BTreeMap<NunderPoint, Rational> {
        self.coeffs.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (*k, v.clone())).collect()
    }

    pub fn routes_agree(&self) -> bool {
        self.coeffs == self.solved
    }

    pub fn verified(&self) -> bool {
        self.reconstructs && self.independent && self.routes_agree()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().rev().map(|(c, v)| format!("{c}:{}", fmt_rational(v))).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Writes `f` as `c_{+∞} f_{+∞} + Σ c_n f_n` with one character per run:
/// `f_{+∞}` carries the tail value and the run ending at `s` contributes
/// `f_s` with the jump to the next run as coefficient. The same coefficients
/// are obtained independently by solving the evaluation system at one point
/// per run.
pub fn grouplike_decompose(f: &StepFunctional) -> Result<Decomposition, NbarError> {
    let runs = f.runs();
    let mut coeffs = BTreeMap::new();
    coeffs.insert(NunderPoint::PosInfinity, f.tail.clone());
    for pair in runs.windows(2) {
        let end = pair[0].0.expect("only the last run is unbounded");
        coeffs.insert(point_of_threshold(end), &pair[0].1 - &pair[1].1);
    }

    let thresholds: Vec<NunderPoint> = coeffs.keys().copied().collect();
    let chars: Vec<StepFunctional> = thresholds.iter().map(|&c| ThresholdCharacter::new(c).to_functional()).collect();
    // One evaluation point per run: the run ends, then the tail onset.
    let points: Vec<usize> = runs.iter().map(|(end, _)| end.unwrap_or(f.prefix.len())).collect();
    let system = RatMatrix::from_fn(points.len(), chars.len(), |i, j| chars[j].eval_pos(points[i]).clone());
    let rhs: Vec<Rational> = points.iter().map(|&p| f.eval_pos(p).clone()).collect();
    let solution = system.solve(&rhs)?.ok_or_else(|| NbarError::CrossCheck("evaluation system is singular".into()))?;
    let solved = thresholds.iter().copied().zip(solution).collect();

    let reconstructs = f.window().all(|p| {
        let sum = chars.iter().zip(coeffs.values()).fold(Rational::zero(), |acc, (ch, c)| acc + c * ch.eval_pos(p));
        sum == *f.eval_pos(p)
    });
    let independent = window_matrix(&chars, f.window()).rank() == chars.len();
    Ok(Decomposition { coeffs, solved, reconstructs, independent })
}
