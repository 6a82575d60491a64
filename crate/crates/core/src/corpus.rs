//! A fixed collection of small algebras used by tests, benches and the
//! command line examples.

use crate::algebra::SnaAlgebra;
use crate::lattice::build_lattice;
use crate::srl::{make_srl, Srl};
use crate::twist::{twist_filtered, twist_full, TwistAlgebra};

fn srl(names: &[&str], covers: &[(&str, &str)], d: &[&str]) -> Srl {
    let l = build_lattice(names, covers).expect("corpus lattice");
    let d = l.subset(d).expect("corpus D");
    make_srl(l, d).expect("corpus srl")
}

const B4: &[&str] = &["0", "a", "b", "1"];
const B4_COVERS: &[(&str, &str)] = &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")];

/// The four element Boolean lattice with `D = {0, 1}`.
pub fn s1() -> Srl {
    srl(B4, B4_COVERS, &["0", "1"])
}

/// The four element Boolean lattice with `D = {0, a, 1}`.
pub fn s2() -> Srl {
    srl(B4, B4_COVERS, &["0", "a", "1"])
}

/// The four element Boolean algebra as a Heyting algebra.
pub fn b4_heyting() -> Srl {
    srl(B4, B4_COVERS, B4)
}

pub fn c2() -> Srl {
    srl(&["0", "1"], &[("0", "1")], &["0", "1"])
}

/// The three element chain as a Heyting algebra.
pub fn c3_heyting() -> Srl {
    srl(&["0", "m", "1"], &[("0", "m"), ("m", "1")], &["0", "m", "1"])
}

/// The three element chain with `D = {0, 1}`.
pub fn c3_bounds() -> Srl {
    srl(&["0", "m", "1"], &[("0", "m"), ("m", "1")], &["0", "1"])
}

/// `2 x 3` with `D` the chain `00 < 10 < 12`.
pub fn grid() -> Srl {
    srl(
        &["00", "01", "02", "10", "11", "12"],
        &[
            ("00", "01"),
            ("01", "02"),
            ("10", "11"),
            ("11", "12"),
            ("00", "10"),
            ("01", "11"),
            ("02", "12"),
        ],
        &["00", "10", "12"],
    )
}

/// Every subresiduated lattice in the corpus, by name.
pub fn srls() -> Vec<(&'static str, Srl)> {
    vec![
        ("S1", s1()),
        ("S2", s2()),
        ("B4H", b4_heyting()),
        ("C2", c2()),
        ("C3H", c3_heyting()),
        ("C3B", c3_bounds()),
        ("grid", grid()),
    ]
}

fn twist(a: &Srl) -> TwistAlgebra {
    twist_full(a).expect("corpus twist")
}

pub fn k_s1() -> TwistAlgebra {
    twist(&s1())
}

fn sub_of_k_s1(pairs: &[(&str, &str)]) -> SnaAlgebra {
    let k = k_s1();
    let idx = pairs
        .iter()
        .map(|(a, b)| k.index_by_names(a, b).expect("pair of K(S1)"));
    let s = crate::elemset::ElemSet::from_elems(k.size(), idx);
    k.algebra().subalgebra(&s).expect("corpus subalgebra").0
}

/// The seven element centered subalgebra of `K(S1)` where (CK) fails.
pub fn t7() -> SnaAlgebra {
    sub_of_k_s1(&[
        ("0", "1"),
        ("0", "b"),
        ("0", "a"),
        ("0", "0"),
        ("a", "0"),
        ("b", "0"),
        ("1", "0"),
    ])
}

/// `{(0,1), (1,0)}`, which has no center.
pub fn u2() -> SnaAlgebra {
    sub_of_k_s1(&[("0", "1"), ("1", "0")])
}

/// One algebra of the corpus together with its twist structure, if built
/// as a twist.
#[derive(Debug, Clone)]
pub struct CorpusSna {
    pub name: &'static str,
    pub algebra: SnaAlgebra,
    pub twist: Option<TwistAlgebra>,
}

fn entry(name: &'static str, k: TwistAlgebra) -> CorpusSna {
    CorpusSna {
        name,
        algebra: k.algebra().clone(),
        twist: Some(k),
    }
}

fn plain(name: &'static str, algebra: SnaAlgebra) -> CorpusSna {
    CorpusSna {
        name,
        algebra,
        twist: None,
    }
}

/// Every subresiduated Nelson algebra in the corpus.
pub fn snas() -> Vec<CorpusSna> {
    let b4h = b4_heyting();
    let top = b4h.lattice().subset(&["1"]).expect("top");
    let kc2 = twist(&c2());
    vec![
        plain("trivial", SnaAlgebra::trivial()),
        plain("U", u2()),
        entry("K(C2)", kc2.clone()),
        entry("K(C3H)", twist(&c3_heyting())),
        entry("K(C3B)", twist(&c3_bounds())),
        entry("K(S1)", k_s1()),
        entry("K(S2)", twist(&s2())),
        entry("K(B4H)", twist(&b4h)),
        plain("T7", t7()),
        plain("K(C2)xK(C2)", kc2.algebra().product(kc2.algebra())),
        entry("K(B4H,{1})", twist_filtered(&b4h, &top).expect("corpus filtered twist")),
        entry("K(grid)", twist(&grid())),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes: Vec<_> = snas().iter().map(|e| e.algebra.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 5, 5, 9, 9, 9, 7, 9, 4, 15]);
        assert_eq!(srls().len(), 7);
    }
}
