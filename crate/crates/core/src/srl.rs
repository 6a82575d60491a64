//! Subresiduated lattices `(A, D)`: a bounded distributive lattice with a
//! bounded sublattice `D` such that `a -> b = max{d in D : a ^ d <= b}`
//! exists for all `a, b`.

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::lattice::FiniteLattice;
use crate::signature::{FiniteAlgebra, Signature};
use crate::verdict::{check_axioms, Axiom, CheckMode, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrlError {
    #[error("D is not a bounded sublattice: {0}")]
    NotASublattice(String),
    #[error("{{d in D : {a} ^ d <= {b}}} has no greatest element")]
    NoMaximum { a: String, b: String },
    #[error("subset belongs to a carrier of size {found}, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("implication table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// A finite subresiduated lattice with cached `->`, box (`1 -> a`) and
/// pseudo-negation (`a -> 0`) tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Srl {
    lattice: FiniteLattice,
    d_set: ElemSet,
    imp: Vec<Elem>,
    boxed: Vec<Elem>,
    neg: Vec<Elem>,
}

/// Builds `(L, D)`, computing `a -> b` by scanning `D`.
pub fn make_srl(lattice: FiniteLattice, d_set: ElemSet) -> Result<Srl, SrlError> {
    let n = lattice.size();
    if d_set.universe() != n {
        return Err(SrlError::UniverseMismatch {
            expected: n,
            found: d_set.universe(),
        });
    }
    if let Some(why) = lattice.sublattice_witness(&d_set) {
        return Err(SrlError::NotASublattice(why));
    }
    let mut imp = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let candidates: Vec<Elem> = d_set.iter().filter(|&d| lattice.leq(lattice.meet(a, d), b)).collect();
            let max = candidates
                .iter()
                .copied()
                .find(|&m| candidates.iter().all(|&d| lattice.leq(d, m)))
                .ok_or_else(|| SrlError::NoMaximum {
                    a: lattice.name(a).to_string(),
                    b: lattice.name(b).to_string(),
                })?;
            imp[a * n + b] = max;
        }
    }
    Ok(Srl::assemble(lattice, d_set, imp))
}

impl Srl {
    fn assemble(lattice: FiniteLattice, d_set: ElemSet, imp: Vec<Elem>) -> Srl {
        let n = lattice.size();
        let (top, bottom) = (lattice.top(), lattice.bottom());
        let boxed = (0..n).map(|a| imp[top * n + a]).collect();
        let neg = (0..n).map(|a| imp[a * n + bottom]).collect();
        Srl {
            lattice,
            d_set,
            imp,
            boxed,
            neg,
        }
    }

    /// Wraps a lattice and a given `->` table without checking it; `D` is
    /// taken to be `{1 -> a}`. Call [`Srl::validate`] or [`verify_srl`] to
    /// inspect the result.
    pub fn from_imp_table(lattice: FiniteLattice, imp: Vec<Elem>) -> Result<Srl, SrlError> {
        let n = lattice.size();
        if imp.len() != n * n || imp.iter().any(|&v| v >= n) {
            return Err(SrlError::TableSize {
                expected: n * n,
                found: imp.len(),
            });
        }
        let top = lattice.top();
        let d_set = ElemSet::from_elems(n, (0..n).map(|a| imp[top * n + a]));
        Ok(Srl::assemble(lattice, d_set, imp))
    }

    /// Checks the type invariants: `D` is a bounded sublattice, each
    /// `a -> b` is the maximum of `{d in D : a ^ d <= b}`, and
    /// `D = {a : 1 -> a = a} = {1 -> a}`.
    pub fn validate(&self) -> Result<(), SrlError> {
        let l = &self.lattice;
        let n = l.size();
        if let Some(why) = l.sublattice_witness(&self.d_set) {
            return Err(SrlError::NotASublattice(why));
        }
        for a in 0..n {
            for b in 0..n {
                let v = self.imp(a, b);
                let ok = self.d_set.contains(v)
                    && l.leq(l.meet(a, v), b)
                    && self.d_set.iter().all(|d| !l.leq(l.meet(a, d), b) || l.leq(d, v));
                if !ok {
                    return Err(SrlError::Invariant(format!(
                        "{} -> {} = {} is not max{{d in D : {} ^ d <= {}}}",
                        l.name(a),
                        l.name(b),
                        l.name(v),
                        l.name(a),
                        l.name(b)
                    )));
                }
            }
        }
        let fixed = ElemSet::from_elems(n, (0..n).filter(|&a| self.boxed(a) == a));
        let image = ElemSet::from_elems(n, (0..n).map(|a| self.boxed(a)));
        if fixed != self.d_set || image != self.d_set {
            return Err(SrlError::Invariant(
                "D differs from {a : 1 -> a = a} or from {1 -> a}".into(),
            ));
        }
        Ok(())
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn d_set(&self) -> &ElemSet {
        &self.d_set
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn names(&self) -> &[String] {
        self.lattice.names()
    }

    pub fn name(&self, a: Elem) -> &str {
        self.lattice.name(a)
    }

    pub fn elem(&self, name: &str) -> Option<Elem> {
        self.lattice.elem(name).ok()
    }

    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.size() + b]
    }

    pub fn imp_table(&self) -> &[Elem] {
        &self.imp
    }

    /// `1 -> a`.
    pub fn boxed(&self, a: Elem) -> Elem {
        self.boxed[a]
    }

    /// `a -> 0`.
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.meet(a, b)
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.join(a, b)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn top(&self) -> Elem {
        self.lattice.top()
    }

    pub fn bottom(&self) -> Elem {
        self.lattice.bottom()
    }

    /// `D = A`, i.e. the implication is the Heyting residual.
    pub fn is_heyting(&self) -> bool {
        self.d_set.is_full()
    }
}

impl FiniteAlgebra for Srl {
    fn signature(&self) -> Signature<'_> {
        Signature {
            names: self.lattice.names(),
            binary: vec![
                ("meet", self.lattice.meet_table()),
                ("join", self.lattice.join_table()),
                ("imp", &self.imp),
            ],
            unary: vec![],
            constants: vec![("0", self.bottom()), ("1", self.top())],
        }
    }
}

const SRL_AXIOMS: &[Axiom<Srl>] = &[
    Axiom::new("1", "(a v b) -> c = (a -> c) ^ (b -> c)", &["a", "b", "c"], |s, t| {
        s.imp(s.join(t[0], t[1]), t[2]) == s.meet(s.imp(t[0], t[2]), s.imp(t[1], t[2]))
    }),
    Axiom::new("2", "c -> (a ^ b) = (c -> a) ^ (c -> b)", &["a", "b", "c"], |s, t| {
        s.imp(t[2], s.meet(t[0], t[1])) == s.meet(s.imp(t[2], t[0]), s.imp(t[2], t[1]))
    }),
    Axiom::new("3", "(a -> b) ^ (b -> c) <= a -> c", &["a", "b", "c"], |s, t| {
        s.leq(s.meet(s.imp(t[0], t[1]), s.imp(t[1], t[2])), s.imp(t[0], t[2]))
    }),
    Axiom::new("4", "a -> a = 1", &["a"], |s, t| s.imp(t[0], t[0]) == s.top()),
    Axiom::new("5", "a ^ (a -> b) <= b", &["a", "b"], |s, t| {
        s.leq(s.meet(t[0], s.imp(t[0], t[1])), t[1])
    }),
    Axiom::new("6", "a -> b <= c -> (a -> b)", &["a", "b", "c"], |s, t| {
        let ab = s.imp(t[0], t[1]);
        s.leq(ab, s.imp(t[2], ab))
    }),
    Axiom::new("quasi", "a <= b -> c implies a ^ b <= c", &["a", "b", "c"], |s, t| {
        !s.leq(t[0], s.imp(t[1], t[2])) || s.leq(s.meet(t[0], t[1]), t[2])
    }),
];

/// Checks the six defining conditions and the quasi-identity exhaustively.
pub fn verify_srl(s: &Srl, mode: CheckMode) -> Verdict {
    check_axioms("srl", s, s.names(), SRL_AXIOMS, mode)
}

const IMPLICATION_LAWS: &[Axiom<Srl>] = &[
    Axiom::new(
        "distributes-over-imp",
        "a -> (b -> c) <= (a -> b) -> (a -> c)",
        &["a", "b", "c"],
        |s, t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            s.leq(s.imp(a, s.imp(b, c)), s.imp(s.imp(a, b), s.imp(a, c)))
        },
    ),
    Axiom::new(
        "box-exchange",
        "box a -> (box b -> c) = box b -> (box a -> c)",
        &["a", "b", "c"],
        |s, t| {
            let (ba, bb, c) = (s.boxed(t[0]), s.boxed(t[1]), t[2]);
            s.imp(ba, s.imp(bb, c)) == s.imp(bb, s.imp(ba, c))
        },
    ),
    Axiom::new("box-meet", "box b <= a -> (a ^ b)", &["a", "b"], |s, t| {
        s.leq(s.boxed(t[1]), s.imp(t[0], s.meet(t[0], t[1])))
    }),
    Axiom::new(
        "monotone",
        "a <= b implies c -> a <= c -> b and b -> c <= a -> c",
        &["a", "b", "c"],
        |s, t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            !s.leq(a, b) || (s.leq(s.imp(c, a), s.imp(c, b)) && s.leq(s.imp(b, c), s.imp(a, c)))
        },
    ),
    Axiom::new("box-deflationary", "box a <= a", &["a"], |s, t| {
        s.leq(s.boxed(t[0]), t[0])
    }),
    Axiom::new("box-idempotent", "box box a = box a", &["a"], |s, t| {
        s.boxed(s.boxed(t[0])) == s.boxed(t[0])
    }),
    Axiom::new("box-top", "box 1 = 1", &[], |s, _| s.boxed(s.top()) == s.top()),
];

/// Derived implication laws that hold in every subresiduated lattice,
/// checked exhaustively with a full report.
pub fn verify_implication_laws(s: &Srl) -> Verdict {
    check_axioms(
        "srl implication laws",
        s,
        s.names(),
        IMPLICATION_LAWS,
        CheckMode::FullReport,
    )
}

/// `De(A) = {a : a -> 0 = 0}`, cross-checked against `{a v (a -> 0)}`.
pub fn dense_elements(s: &Srl) -> Result<ElemSet, SrlError> {
    let n = s.size();
    let dense = ElemSet::from_elems(n, (0..n).filter(|&a| s.neg(a) == s.bottom()));
    let joins = ElemSet::from_elems(n, (0..n).map(|a| s.join(a, s.neg(a))));
    if dense != joins {
        return Err(SrlError::Invariant(format!(
            "dense elements {} differ from {{a v -a}} = {}",
            dense.display_with(s.names()),
            joins.display_with(s.names())
        )));
    }
    Ok(dense)
}

/// A lattice filter closed under `box`.
pub fn is_open_filter(s: &Srl, f: &ElemSet) -> bool {
    s.lattice().is_filter(f) && f.iter().all(|a| f.contains(s.boxed(a)))
}

/// All open filters, ordered by the index of their least element.
///
/// Every filter of a finite lattice is the principal upset of its meet, so
/// the candidates are the upsets `{y : x <= y}`; each is then tested for
/// meet closure and box closure.
pub fn open_filters(s: &Srl) -> Vec<ElemSet> {
    let l = s.lattice();
    (0..s.size())
        .map(|x| l.upset(x))
        .filter(|f| is_open_filter(s, f))
        .collect()
}

/// Open filters containing every dense element.
pub fn subresiduated_filters(s: &Srl) -> Result<Vec<ElemSet>, SrlError> {
    let dense = dense_elements(s)?;
    Ok(open_filters(s).into_iter().filter(|f| dense.is_subset(f)).collect())
}

pub fn is_subresiduated_filter(s: &Srl, f: &ElemSet) -> Result<bool, SrlError> {
    Ok(is_open_filter(s, f) && dense_elements(s)?.is_subset(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;

    fn b4() -> FiniteLattice {
        build_lattice(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap()
    }

    fn srl(d: &[&str]) -> Srl {
        let l = b4();
        let d = l.subset(d).unwrap();
        make_srl(l, d).unwrap()
    }

    fn e(s: &Srl, name: &str) -> Elem {
        s.elem(name).unwrap()
    }

    #[test]
    fn example_boolean_with_two_element_d() {
        let s1 = srl(&["0", "1"]);
        let (a, b, zero) = (e(&s1, "a"), e(&s1, "b"), e(&s1, "0"));
        assert_eq!(s1.imp(a, zero), zero);
        assert_ne!(s1.imp(a, zero), b);
        assert!(verify_srl(&s1, CheckMode::FullReport).passed());
        assert!(s1.validate().is_ok());
    }

    #[test]
    fn three_element_d() {
        let s2 = srl(&["0", "a", "1"]);
        let (a, b, zero) = (e(&s2, "a"), e(&s2, "b"), e(&s2, "0"));
        assert_eq!(s2.imp(b, zero), a);
        assert_eq!(s2.imp(a, b), zero);
        assert!(verify_srl(&s2, CheckMode::FirstFailure).passed());
    }

    #[test]
    fn heyting_case_gives_complement() {
        let h = srl(&["0", "a", "b", "1"]);
        assert!(h.is_heyting());
        assert_eq!(h.imp(e(&h, "a"), e(&h, "0")), e(&h, "b"));
    }

    #[test]
    fn not_a_sublattice_rejected() {
        let l = b4();
        let d = l.subset(&["0", "a", "b"]).unwrap();
        assert!(matches!(make_srl(l, d), Err(SrlError::NotASublattice(_))));
    }

    #[test]
    fn injected_reflexivity_failure() {
        let s1 = srl(&["0", "1"]);
        let a = e(&s1, "a");
        let mut imp = s1.imp_table().to_vec();
        imp[a * 4 + a] = e(&s1, "0");
        let broken = Srl::from_imp_table(s1.lattice().clone(), imp).unwrap();
        let v = verify_srl(&broken, CheckMode::FullReport);
        let f = v.failure("4").expect("condition 4 must fail");
        assert_eq!(f.witness, vec![a]);
        assert!(broken.validate().is_err());
    }

    #[test]
    fn dense_elements_examples() {
        let s1 = srl(&["0", "1"]);
        assert_eq!(
            dense_elements(&s1).unwrap(),
            s1.lattice().subset(&["a", "b", "1"]).unwrap()
        );
        let c2 = make_srl(build_lattice(&["0", "1"], &[("0", "1")]).unwrap(), ElemSet::full(2)).unwrap();
        assert_eq!(dense_elements(&c2).unwrap().to_vec(), vec![1]);
    }

    #[test]
    fn filters_of_example() {
        let s1 = srl(&["0", "1"]);
        let open = open_filters(&s1);
        assert_eq!(open, vec![ElemSet::full(4), ElemSet::from_elems(4, [3])]);
        assert_eq!(subresiduated_filters(&s1).unwrap(), vec![ElemSet::full(4)]);

        let h = srl(&["0", "a", "b", "1"]);
        assert_eq!(open_filters(&h).len(), 4);
        assert_eq!(subresiduated_filters(&h).unwrap().len(), 4);
    }

    #[test]
    fn implication_laws_hold() {
        for d in [&["0", "1"][..], &["0", "a", "1"], &["0", "a", "b", "1"]] {
            let v = verify_implication_laws(&srl(d));
            assert!(v.passed(), "{v}");
        }
    }
}
