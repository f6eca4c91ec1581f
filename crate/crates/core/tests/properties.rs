use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use semidual_core::bialgebra::{
    check_bialgebra_axioms, congruence_closure, quotient_grouplikes, MonoidAlgebraElement, TensorElement,
};
use semidual_core::corpus::brute_characters;
use semidual_core::exactlin::{rat, ratio};
use semidual_core::graded::{act_character, ut_graded};
use semidual_core::letterplace::{LPPoly, LPVariable, ParityContext};
use semidual_core::nbar_dual::{grouplike_decompose, in_finite_dual, translate_span_basis, StepFunctional};
use semidual_core::{FiniteSemilattice, NbarPoint};

/// Union-closed families of subsets of a 4-element set, containing the empty
/// set: every finite semilattice of size ≤ 16 arises this way up to iso.
fn semilattice() -> impl Strategy<Value = FiniteSemilattice> {
    prop::collection::btree_set(1u8..16, 0..5).prop_map(|gens| {
        let mut closed: BTreeSet<u8> = BTreeSet::from([0]);
        loop {
            let next: BTreeSet<u8> =
                closed.iter().flat_map(|&a| gens.iter().map(move |&g| a | g)).chain(closed.iter().copied()).collect();
            if next == closed {
                break;
            }
            closed = next;
        }
        let masks: Vec<u8> = closed.into_iter().collect();
        let labels = masks.iter().map(|m| format!("s{m}")).collect();
        let table = masks
            .iter()
            .map(|a| masks.iter().map(|b| masks.iter().position(|c| *c == a | b).unwrap()).collect())
            .collect();
        FiniteSemilattice::from_table(labels, table, 0).unwrap()
    })
}

fn element(s: &Arc<FiniteSemilattice>, coeffs: &[i64]) -> MonoidAlgebraElement {
    MonoidAlgebraElement::from_terms(s, coeffs.iter().enumerate().take(s.len()).map(|(i, &c)| (i, rat(c))))
}

fn functional() -> impl Strategy<Value = StepFunctional> {
    let value = (-6i64..=6).prop_map(|n| ratio(n, 2));
    (prop::collection::vec(value.clone(), 0..8), value).prop_map(|(p, t)| StepFunctional::new(p, t))
}

fn point() -> impl Strategy<Value = NbarPoint> {
    prop_oneof![Just(NbarPoint::NegInfinity), (0u64..10).prop_map(NbarPoint::Finite)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn characters_match_brute_force(s in semilattice()) {
        prop_assert_eq!(s.characters().unwrap(), brute_characters(&s).unwrap());
    }

    #[test]
    fn duality_holds(s in semilattice()) {
        let map = s.double_dual_iso().unwrap();
        prop_assert!(map.verify_isomorphism().is_ok());
        prop_assert_eq!(s.ev_matrix_rank().unwrap(), s.len());
        prop_assert_eq!(s.dual().unwrap().len(), s.len());
    }

    #[test]
    fn text_round_trip(s in semilattice()) {
        prop_assert_eq!(FiniteSemilattice::parse(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn monoid_algebra_laws(
        s in semilattice(),
        a in prop::collection::vec(-3i64..=3, 16),
        b in prop::collection::vec(-3i64..=3, 16),
        c in prop::collection::vec(-3i64..=3, 16),
    ) {
        let s = Arc::new(s);
        prop_assert!(check_bialgebra_axioms(&s).all_passed());
        let (a, b, c) = (element(&s, &a), element(&s, &b), element(&s, &c));
        let ab = a.multiply(&b).unwrap();
        prop_assert_eq!(ab.multiply(&c).unwrap(), a.multiply(&b.multiply(&c).unwrap()).unwrap());
        prop_assert_eq!(ab.clone(), b.multiply(&a).unwrap());
        prop_assert_eq!(ab.comultiply(), a.comultiply().multiply(&b.comultiply(), &s));
        prop_assert_eq!(ab.counit(), a.counit() * b.counit());
        let grouplike = a.is_grouplike();
        let is_basis = a.terms().count() == 1 && a.terms().all(|(_, c)| *c == rat(1));
        prop_assert_eq!(grouplike, is_basis);
        prop_assert_eq!(TensorElement::tensor(&a, &a), a.tensor_square());
    }

    #[test]
    fn congruence_quotients_have_coset_grouplikes(s in semilattice(), i in 0usize..16, j in 0usize..16) {
        let s = Arc::new(s);
        let (x, y) = (s.label(i % s.len()).to_string(), s.label(j % s.len()).to_string());
        let c = congruence_closure(&s, &[(&x, &y)]).unwrap();
        for a in 0..s.len() {
            for b in 0..s.len() {
                for t in 0..s.len() {
                    if c.class_of(a) == c.class_of(b) {
                        prop_assert_eq!(c.class_of(s.op(a, t)), c.class_of(s.op(b, t)));
                    }
                }
            }
        }
        let q = quotient_grouplikes(&c);
        prop_assert_eq!(q.cosets.len(), c.num_classes());
        prop_assert!(q.verified());
    }

    #[test]
    fn translates_compose_by_max(f in functional(), m in point(), n in point()) {
        prop_assert_eq!(f.translate(m).translate(n), f.translate(m.max(n)));
        for k in 0..12 {
            let p = NbarPoint::from_position(k);
            prop_assert_eq!(f.translate(m).eval(p), f.eval(m.max(p)));
        }
    }

    #[test]
    fn products_are_pointwise(f in functional(), g in functional()) {
        let h = f.product(&g);
        for k in 0..12 {
            let p = NbarPoint::from_position(k);
            prop_assert_eq!(h.eval(p), f.eval(p) * g.eval(p));
        }
    }

    #[test]
    fn decomposition_round_trip(f in functional()) {
        let d = grouplike_decompose(&f).unwrap();
        prop_assert!(d.verified());
        prop_assert_eq!(d.coeffs.len(), f.run_count());
        let tail_zero = *f.tail() == rat(0);
        let expected_dim = f.run_count() - usize::from(tail_zero);
        let cert = in_finite_dual(&f);
        prop_assert_eq!(cert.dimension, expected_dim);
        prop_assert!(translate_span_basis(&f).verified);
    }

    #[test]
    fn ut_gradings_are_module_algebras(m in 1usize..=4, gaps in prop::collection::vec(1u64..4, 4), coords in prop::collection::vec(-2i64..=2, 20)) {
        let labels: Vec<u64> = gaps.iter().take(m).scan(0, |acc, g| { *acc += g; Some(*acc) }).collect();
        let a = Arc::new(ut_graded(m, &labels).unwrap());
        prop_assert!(a.verify_grading().passed());
        prop_assert!(a.check_module_algebra().unwrap().passed());
        let x = a.element(coords.iter().take(a.dim()).enumerate().map(|(i, &c)| (i, rat(c))));
        let y = a.element(coords.iter().rev().take(a.dim()).enumerate().map(|(i, &c)| (i, rat(c))));
        for f in a.grading().characters().unwrap() {
            let lhs = act_character(&f, &x.multiply(&y).unwrap()).unwrap();
            let rhs = act_character(&f, &x).unwrap().multiply(&act_character(&f, &y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

type Word = Vec<(u32, u32)>;

fn poly_terms() -> impl Strategy<Value = Vec<(i64, Word)>> {
    prop::collection::vec((-3i64..=3, prop::collection::vec((1u32..4, 1u32..5), 0..4)), 0..4)
}

fn ctx() -> impl Strategy<Value = ParityContext> {
    (prop::collection::btree_set(1u32..4, 0..3), prop::collection::btree_set(1u32..5, 0..3))
        .prop_map(|(l, p)| ParityContext::new(l, p))
}

fn build(terms: &[(i64, Word)], ctx: &ParityContext) -> LPPoly {
    terms.iter().fold(LPPoly::zero(ctx), |acc, (c, w)| {
        let vars: Vec<LPVariable> = w.iter().map(|&(l, p)| LPVariable::new(l, p)).collect();
        acc.add(&LPPoly::from_word(&vars, rat(*c), ctx)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn letterplace_ring_laws(ctx in ctx(), p in poly_terms(), q in poly_terms(), r in poly_terms()) {
        let (p, q, r) = (build(&p, &ctx), build(&q, &ctx), build(&r, &ctx));
        let pq = p.multiply(&q).unwrap();
        prop_assert_eq!(pq.multiply(&r).unwrap(), p.multiply(&q.multiply(&r).unwrap()).unwrap());
        prop_assert_eq!(
            p.multiply(&q.add(&r).unwrap()).unwrap(),
            pq.add(&p.multiply(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(p.multiply(&LPPoly::one(&ctx)).unwrap(), p.clone());
    }

    #[test]
    fn letterplace_text_round_trip(ctx in ctx(), p in poly_terms()) {
        let p = build(&p, &ctx);
        prop_assert_eq!(LPPoly::parse(&p.to_string(), &ctx).unwrap(), p);
    }

    #[test]
    fn weight_components_sum_back(ctx in ctx(), p in poly_terms()) {
        let p = build(&p, &ctx);
        let mut sum = LPPoly::zero(&ctx);
        for (w, comp) in p.weight_components() {
            for (m, _) in comp.terms() {
                prop_assert_eq!(m.weight(), w);
            }
            sum = sum.add(&comp).unwrap();
        }
        prop_assert_eq!(sum, p);
    }
}

#[test]
fn halves_parse() {
    let ctx = ParityContext::even();
    let p = LPPoly::parse("-3/2*(x1|2) + 1/2", &ctx).unwrap();
    let want = LPPoly::var(1, 2, &ctx).scale(&ratio(-3, 2)).add(&LPPoly::constant(ratio(1, 2), &ctx)).unwrap();
    assert_eq!(p, want);
}
