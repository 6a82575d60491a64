//! Invariants over randomly generated sr-lattices and their twists.

mod common;

use common::{arb_srl, imp_oracle};
use proptest::prelude::*;
use snalab_core::algebra::hom::{hom_failure, is_injective};
use snalab_core::algebra::suites::{derived_properties_suite, verify_kleene, verify_nelson, verify_sna};
use snalab_core::centered::{check_ck, find_center, Condition};
use snalab_core::congruence::{
    congruences, congruences_bruteforce, generate_oif, open_implicative_filters, CongruenceError,
};
use snalab_core::par;
use snalab_core::residuation::{residuated_view, term_translation_gap, verify_nelson_lattice, verify_translation};
use snalab_core::srl::{subresiduated_filters, verify_implication_laws, verify_srl};
use snalab_core::twist::{alpha, rho, twist_filtered, twist_full};
use snalab_core::varieties::check_chain_variety;
use snalab_core::{CheckMode, ElemSet, FiniteAlgebra};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn implication_is_the_relative_maximum(s in arb_srl()) {
        for a in 0..s.size() {
            for b in 0..s.size() {
                prop_assert_eq!(s.imp(a, b), imp_oracle(&s, a, b));
            }
        }
        prop_assert!(verify_srl(&s, CheckMode::FullReport).passed());
        prop_assert!(verify_implication_laws(&s).passed());
    }

    #[test]
    fn twists_are_subresiduated_nelson_algebras(s in arb_srl()) {
        let k = twist_full(&s).unwrap();
        let t = k.algebra();
        prop_assert!(verify_kleene(t, CheckMode::FullReport).passed());
        prop_assert!(verify_sna(t, CheckMode::FullReport).passed());
        if t.size() <= 15 {
            prop_assert!(derived_properties_suite(t, CheckMode::FullReport).unwrap().passed());
        }
        if s.is_heyting() {
            prop_assert!(verify_nelson(t, CheckMode::FullReport).passed());
        }
    }

    #[test]
    fn full_twists_are_centered_and_recovered(s in arb_srl()) {
        let k = twist_full(&s).unwrap();
        let t = k.algebra();
        let c = find_center(t).unwrap().unwrap();
        prop_assert_eq!(k.pair(c), (s.bottom(), s.bottom()));
        prop_assert_eq!(check_ck(t).unwrap(), Condition::Holds);
        let r = rho(t).unwrap();
        prop_assert!(r.surjective);
        let a = alpha(&s).unwrap();
        prop_assert!(is_injective(&a.map));
        prop_assert!(hom_failure(&s.signature(), &a.quotient.srl.signature(), &a.map).is_none());
    }

    #[test]
    fn filtered_twists_are_subalgebras(s in arb_srl()) {
        let full = twist_full(&s).unwrap();
        for f in subresiduated_filters(&s).unwrap() {
            let k = twist_filtered(&s, &f).unwrap();
            let carrier = ElemSet::from_elems(
                full.size(),
                k.pairs().iter().map(|&(a, b)| full.index_of(a, b).unwrap()),
            );
            prop_assert!(full.algebra().signature().is_subuniverse(&carrier));
            prop_assert!(verify_sna(k.algebra(), CheckMode::FirstFailure).passed());
        }
    }

    #[test]
    fn gap_is_where_translation_fails(s in arb_srl()) {
        let k = twist_full(&s).unwrap();
        let v = residuated_view(&k).unwrap();
        let translation = verify_translation(&v, CheckMode::FullReport);
        let gap = term_translation_gap(&s);
        prop_assert_eq!(gap.is_some(), translation.failure("weak-from-residuated").is_some());
        if s.is_heyting() {
            prop_assert!(translation.passed());
            prop_assert!(gap.is_none());
            prop_assert!(verify_nelson_lattice(&v, CheckMode::FullReport).passed());
        }
    }

    #[test]
    fn congruences_match_the_oracle(s in arb_srl()) {
        let k = twist_full(&s).unwrap();
        let t = k.algebra();
        prop_assume!(t.size() <= 12);
        let mut fast = congruences(t).unwrap();
        let mut brute = congruences_bruteforce(t, 12).unwrap();
        fast.sort();
        brute.sort();
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn generated_filters_are_least(s in arb_srl(), picks in prop::collection::vec(any::<usize>(), 1..3)) {
        let k = twist_full(&s).unwrap();
        let t = k.algebra();
        let x = ElemSet::from_elems(t.size(), picks.iter().map(|p| p % t.size()));
        let g = generate_oif(t, &x).unwrap();
        let containing: Vec<_> = open_implicative_filters(t)
            .unwrap()
            .into_iter()
            .filter(|f| x.is_subset(&f.members))
            .collect();
        for f in &containing {
            prop_assert!(g.members.is_subset(&f.members));
        }
        prop_assert!(containing.iter().any(|f| f.members == g.members));
    }

    #[test]
    fn empty_generator_set_is_rejected(s in arb_srl()) {
        let k = twist_full(&s).unwrap();
        let empty = ElemSet::empty(k.size());
        prop_assert_eq!(generate_oif(k.algebra(), &empty), Err(CongruenceError::EmptyGeneratorSet));
    }

    #[test]
    fn chain_twists_are_in_the_chain_variety(k in 2usize..=5) {
        let l = common::chain_product(&[k]);
        let d = ElemSet::full(k);
        let s = snalab_core::make_srl(l, d).unwrap();
        let t = twist_full(&s).unwrap();
        prop_assert!(check_chain_variety(t.algebra()).unwrap().member());
    }

    #[test]
    fn parallel_and_sequential_agree(s in arb_srl()) {
        let k = twist_full(&s).unwrap();
        let t = k.algebra();
        let both = |f: &dyn Fn() -> String| (f(), par::sequential(f));
        let (p, q) = both(&|| format!("{:?}", verify_nelson(t, CheckMode::FullReport)));
        prop_assert_eq!(p, q);
        let (p, q) = both(&|| format!("{:?}", verify_sna(t, CheckMode::FullReport)));
        prop_assert_eq!(p, q);
    }
}
