//! Finite algebras of signature `(^, v, ->, ~, 0, 1)` given by tables.

pub mod hom;
pub mod suites;
pub mod term;

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::lattice::{FiniteLattice, LatticeError};
use crate::partition::{congruence_witness, Partition};
use crate::signature::{FiniteAlgebra, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{what} table has {found} entries, expected {expected}")]
    TableSize {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what} table refers to element index {value} outside the carrier")]
    ValueOutOfRange { what: &'static str, value: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("not a subalgebra: {0}")]
    NotASubalgebra(String),
    #[error("not a congruence: {0}")]
    NotACongruence(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// A finite algebra `(T, ^, v, ->, ~, 0, 1)` whose lattice reduct is a
/// bounded distributive lattice. The Kleene and implication laws are not
/// enforced here; use the verifiers in [`suites`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnaAlgebra {
    lattice: FiniteLattice,
    imp: Vec<Elem>,
    neg: Vec<Elem>,
    boxed: Vec<Elem>,
    imp_image: ElemSet,
    center: Option<Elem>,
}

impl SnaAlgebra {
    pub fn new(lattice: FiniteLattice, imp: Vec<Elem>, neg: Vec<Elem>) -> Result<Self, AlgebraError> {
        let n = lattice.size();
        if imp.len() != n * n {
            return Err(AlgebraError::TableSize {
                what: "implication",
                expected: n * n,
                found: imp.len(),
            });
        }
        if neg.len() != n {
            return Err(AlgebraError::TableSize {
                what: "negation",
                expected: n,
                found: neg.len(),
            });
        }
        if let Some(&value) = imp.iter().find(|&&v| v >= n) {
            return Err(AlgebraError::ValueOutOfRange {
                what: "implication",
                value,
            });
        }
        if let Some(&value) = neg.iter().find(|&&v| v >= n) {
            return Err(AlgebraError::ValueOutOfRange {
                what: "negation",
                value,
            });
        }
        let top = lattice.top();
        let boxed = (0..n).map(|x| imp[top * n + x]).collect();
        let imp_image = ElemSet::from_elems(n, imp.iter().copied());
        let fixed: Vec<Elem> = (0..n).filter(|&x| neg[x] == x).collect();
        let center = match fixed.as_slice() {
            [c] => Some(*c),
            _ => None,
        };
        Ok(SnaAlgebra {
            lattice,
            imp,
            neg,
            boxed,
            imp_image,
            center,
        })
    }

    /// The one-element algebra.
    pub fn trivial() -> Self {
        let lattice = crate::lattice::build_lattice(&["0"], &[]).expect("one-element lattice");
        SnaAlgebra::new(lattice, vec![0], vec![0]).expect("one-element tables")
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn names(&self) -> &[String] {
        self.lattice.names()
    }

    pub fn name(&self, x: Elem) -> &str {
        self.lattice.name(x)
    }

    pub fn elem(&self, name: &str) -> Option<Elem> {
        self.lattice.elem(name).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.lattice.meet(x, y)
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.lattice.join(x, y)
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.lattice.leq(x, y)
    }

    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp[x * self.size() + y]
    }

    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    /// `1 -> x`.
    pub fn boxed(&self, x: Elem) -> Elem {
        self.boxed[x]
    }

    pub fn top(&self) -> Elem {
        self.lattice.top()
    }

    pub fn bottom(&self) -> Elem {
        self.lattice.bottom()
    }

    pub fn imp_table(&self) -> &[Elem] {
        &self.imp
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    /// True iff `x` is a value of `->`.
    pub fn is_implication_value(&self, x: Elem) -> bool {
        self.imp_image.contains(x)
    }

    /// The unique fixed point of `~`, if there is exactly one.
    pub fn center(&self) -> Option<Elem> {
        self.center
    }

    /// Elements fixed by `~`.
    pub fn negation_fixed_points(&self) -> Vec<Elem> {
        (0..self.size()).filter(|&x| self.neg(x) == x).collect()
    }

    /// The subalgebra on a subuniverse `s`, together with its embedding
    /// into `self` (position `i` of the subalgebra maps to `embedding[i]`).
    pub fn subalgebra(&self, s: &ElemSet) -> Result<(SnaAlgebra, Vec<Elem>), AlgebraError> {
        if !self.signature().is_subuniverse(s) {
            return Err(AlgebraError::NotASubalgebra(format!(
                "{} is not closed under the operations",
                s.display_with(self.names())
            )));
        }
        let (lattice, members) = self.lattice.restrict(s)?;
        let k = members.len();
        let pos = |x: Elem| members.iter().position(|&m| m == x).expect("closed subset");
        let mut imp = vec![0; k * k];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                imp[i * k + j] = pos(self.imp(x, y));
            }
        }
        let neg = members.iter().map(|&x| pos(self.neg(x))).collect();
        Ok((SnaAlgebra::new(lattice, imp, neg)?, members))
    }

    /// The quotient by a congruence. Classes are named after their least
    /// member in brackets; `class_of[x]` is the class index of `x`.
    pub fn quotient(&self, p: &Partition) -> Result<(SnaAlgebra, Vec<Elem>), AlgebraError> {
        if let Some(why) = congruence_witness(&self.signature(), p) {
            return Err(AlgebraError::NotACongruence(why));
        }
        let reps = p.representatives();
        let k = reps.len();
        let class_of: Vec<Elem> = (0..self.size()).map(|x| p.block_of(x)).collect();
        let names = reps.iter().map(|&r| format!("[{}]", self.name(r))).collect();
        let mut leq = vec![false; k * k];
        let mut imp = vec![0; k * k];
        for (i, &x) in reps.iter().enumerate() {
            for (j, &y) in reps.iter().enumerate() {
                leq[i * k + j] = class_of[self.meet(x, y)] == i;
                imp[i * k + j] = class_of[self.imp(x, y)];
            }
        }
        let neg = reps.iter().map(|&x| class_of[self.neg(x)]).collect();
        let lattice = FiniteLattice::from_leq(names, leq)?;
        Ok((SnaAlgebra::new(lattice, imp, neg)?, class_of))
    }

    /// Direct product with componentwise operations. Element `(x, y)` has
    /// index `x * other.size() + y` and name `<x|y>`.
    pub fn product(&self, other: &SnaAlgebra) -> SnaAlgebra {
        let (n, m) = (self.size(), other.size());
        let k = n * m;
        let split = |i: Elem| (i / m, i % m);
        let names = (0..k)
            .map(|i| {
                let (x, y) = split(i);
                format!("<{}|{}>", self.name(x), other.name(y))
            })
            .collect();
        let mut leq = vec![false; k * k];
        let mut imp = vec![0; k * k];
        for i in 0..k {
            let (x, y) = split(i);
            for j in 0..k {
                let (u, v) = split(j);
                leq[i * k + j] = self.leq(x, u) && other.leq(y, v);
                imp[i * k + j] = self.imp(x, u) * m + other.imp(y, v);
            }
        }
        let neg = (0..k)
            .map(|i| {
                let (x, y) = split(i);
                self.neg(x) * m + other.neg(y)
            })
            .collect();
        let lattice = FiniteLattice::from_leq(names, leq).expect("product of lattices");
        SnaAlgebra::new(lattice, imp, neg).expect("product tables")
    }
}

impl FiniteAlgebra for SnaAlgebra {
    fn signature(&self) -> Signature<'_> {
        Signature {
            names: self.lattice.names(),
            binary: vec![
                ("meet", self.lattice.meet_table()),
                ("join", self.lattice.join_table()),
                ("imp", &self.imp),
            ],
            unary: vec![("neg", &self.neg)],
            constants: vec![("0", self.bottom()), ("1", self.top())],
        }
    }
}
