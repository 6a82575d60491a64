//! Library results compared against direct brute force on the corpus.

use std::collections::BTreeMap;

use snalab_core::algebra::hom::{find_isomorphism, hom_failure, homomorphisms};
use snalab_core::algebra::term::{box_join_identity, eval_term, parse_identity, s_term, satisfies_identity, t_term};
use snalab_core::centered::{find_center, verify_center_laws};
use snalab_core::congruence::s_value;
use snalab_core::corpus::{self, CorpusSna};
use snalab_core::partition::congruences_bruteforce;
use snalab_core::residuation::{residuated_view, term_translation_gap, verify_nelson_lattice};
use snalab_core::twist::{check_alpha_naturality, check_rho_naturality, twist_full};
use snalab_core::varieties::{box_join_values, t_value};
use snalab_core::{CheckMode, Elem, ElemSet, FiniteAlgebra, SnaAlgebra};

fn snas() -> Vec<CorpusSna> {
    corpus::snas()
}

fn assign(pairs: &[(&str, Elem)]) -> BTreeMap<String, Elem> {
    pairs.iter().map(|&(v, x)| (v.to_string(), x)).collect()
}

/// Every map `src -> dst`, as base-`m` counters.
fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = m.pow(n as u32);
    (0..total).map(move |mut i| {
        (0..n)
            .map(|_| {
                let d = i % m;
                i /= m;
                d
            })
            .collect()
    })
}

#[test]
fn terms_evaluate_like_the_direct_formulas() {
    for e in snas() {
        let t = &e.algebra;
        let (bl, br) = box_join_identity();
        for x in 0..t.size() {
            for y in 0..t.size() {
                let a = assign(&[("x", x), ("y", y)]);
                assert_eq!(eval_term(t, &t_term(), &a).unwrap(), t_value(t, x, y), "{}", e.name);
                assert_eq!(eval_term(t, &s_term(), &a).unwrap(), s_value(t, x, y), "{}", e.name);
                let (l, r) = box_join_values(t, x, y);
                assert_eq!(eval_term(t, &bl, &a).unwrap(), l);
                assert_eq!(eval_term(t, &br, &a).unwrap(), r);
            }
        }
    }
}

#[test]
fn identity_checker_finds_the_least_witness() {
    let k = corpus::k_s1();
    let t = k.algebra();
    let (l, r) = parse_identity("x ^ (x -> y) = x ^ (~x v y)").unwrap();
    let v = satisfies_identity(t, &l, &r).unwrap();
    let n = t.size();
    let direct = (0..n * n)
        .map(|i| (i / n, i % n))
        .find(|&(x, y)| t.meet(x, t.imp(x, y)) != t.meet(x, t.join(t.neg(x), y)));
    let (x, y) = direct.unwrap();
    assert_eq!(v.failures[0].witness, vec![x, y]);
}

#[test]
fn homomorphism_search_matches_enumeration() {
    let small: Vec<CorpusSna> = snas().into_iter().filter(|e| e.algebra.size() <= 5).collect();
    for a in &small {
        for b in &small {
            let (sa, sb) = (a.algebra.signature(), b.algebra.signature());
            let mut brute: Vec<Vec<Elem>> = all_maps(a.algebra.size(), b.algebra.size())
                .filter(|f| hom_failure(&sa, &sb, f).is_none())
                .collect();
            let mut found = homomorphisms(&sa, &sb);
            brute.sort();
            found.sort();
            assert_eq!(found, brute, "{} -> {}", a.name, b.name);
        }
    }
}

#[test]
fn product_of_chain_twists_is_the_boolean_twist() {
    let all = snas();
    let by_name = |n: &str| all.iter().find(|e| e.name == n).unwrap().algebra.clone();
    let p = by_name("K(C2)xK(C2)");
    let b = by_name("K(B4H)");
    let iso = find_isomorphism(&p.signature(), &b.signature()).unwrap();
    assert!(hom_failure(&p.signature(), &b.signature(), &iso).is_none());
}

#[test]
fn subuniverses_match_subset_enumeration() {
    for e in snas().iter().filter(|e| e.algebra.size() <= 9) {
        let t = &e.algebra;
        let sig = t.signature();
        let n = t.size();
        let mut brute: Vec<ElemSet> = (0u32..1 << n)
            .map(|mask| ElemSet::from_elems(n, (0..n).filter(|&i| mask & (1 << i) != 0)))
            .filter(|s| {
                let closed2 = |tab: &[Elem]| s.iter().all(|x| s.iter().all(|y| s.contains(tab[x * n + y])));
                s.contains(t.bottom())
                    && s.contains(t.top())
                    && closed2(t.lattice().meet_table())
                    && closed2(t.lattice().join_table())
                    && closed2(t.imp_table())
                    && s.iter().all(|x| s.contains(t.neg(x)))
            })
            .collect();
        let mut found = sig.all_subuniverses();
        brute.sort();
        found.sort();
        assert_eq!(found, brute, "{}", e.name);
    }
}

#[test]
fn quotient_maps_are_homomorphisms() {
    for e in snas().iter().filter(|e| e.algebra.size() <= 9) {
        let t = &e.algebra;
        for p in congruences_bruteforce(&t.signature(), 12).unwrap() {
            let (q, class_of) = t.quotient(&p).unwrap();
            assert_eq!(q.size(), p.num_blocks());
            assert!(
                hom_failure(&t.signature(), &q.signature(), &class_of).is_none(),
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn alpha_is_natural_on_corpus_homomorphisms() {
    let srls = corpus::srls();
    let mut checked = 0;
    for (_, a) in &srls {
        for (_, b) in &srls {
            for f in homomorphisms(&a.signature(), &b.signature()) {
                check_alpha_naturality(a, b, &f).unwrap();
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn rho_is_natural_and_centers_are_preserved() {
    let small: Vec<CorpusSna> = snas().into_iter().filter(|e| e.algebra.size() <= 9).collect();
    let mut checked = 0;
    for a in &small {
        for b in &small {
            let (t, u) = (&a.algebra, &b.algebra);
            for g in homomorphisms(&t.signature(), &u.signature()) {
                check_rho_naturality(t, u, &g).unwrap();
                if let Some(c) = find_center(t).unwrap() {
                    assert_eq!(u.neg(g[c]), g[c], "{} -> {}", a.name, b.name);
                    assert_eq!(find_center(u).unwrap(), Some(g[c]));
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn center_laws_hold_on_centered_algebras() {
    for e in snas() {
        if find_center(&e.algebra).unwrap().is_some() {
            assert!(verify_center_laws(&e.algebra).unwrap().passed(), "{}", e.name);
        }
    }
}

fn view_passes(s: &snalab_core::Srl) -> bool {
    let k = twist_full(s).unwrap();
    verify_nelson_lattice(&residuated_view(&k).unwrap(), CheckMode::FullReport).passed()
}

#[test]
fn residuated_views() {
    assert!(view_passes(&corpus::b4_heyting()));
    assert!(view_passes(&corpus::c2()));
    assert!(view_passes(&corpus::c3_heyting()));
    let k = corpus::k_s1();
    let v = residuated_view(&k).unwrap();
    let t: &SnaAlgebra = v.algebra();
    // 1 * (c,d) = (c, box d ^ ~c), which is not (c,d) once box d != d.
    let first = (0..t.size()).find(|&x| v.star(t.top(), x) != x).unwrap();
    assert_eq!(t.name(first), "(0,a)");
    let verdict = verify_nelson_lattice(&v, CheckMode::FullReport);
    assert_eq!(verdict.failure("star-unit").unwrap().witness, vec![first]);
}

#[test]
fn translation_gap_in_s1() {
    let s = corpus::s1();
    let g = term_translation_gap(&s).unwrap();
    let names: Vec<&str> = [g.a, g.b, g.c, g.d, g.lhs, g.rhs].iter().map(|&x| s.name(x)).collect();
    assert_eq!(names, ["a", "0", "a", "b", "1", "0"]);
    assert!(term_translation_gap(&corpus::c3_heyting()).is_none());
}
