//! A uniform table view over the finite algebras in this crate, so that
//! subuniverse tests, homomorphism search and congruence enumeration are
//! written once.

use crate::elemset::{Elem, ElemSet};

/// Operation tables of a finite algebra. Binary tables are row-major
/// `n * n`, unary tables have length `n`.
pub struct Signature<'a> {
    pub names: &'a [String],
    pub binary: Vec<(&'static str, &'a [Elem])>,
    pub unary: Vec<(&'static str, &'a [Elem])>,
    pub constants: Vec<(&'static str, Elem)>,
}

impl Signature<'_> {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    /// Same operation symbols in the same order.
    pub fn same_shape(&self, other: &Signature<'_>) -> bool {
        let keys = |s: &Signature<'_>| {
            (
                s.binary.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
                s.unary.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
                s.constants.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
            )
        };
        keys(self) == keys(other)
    }

    /// True iff `s` contains the constants and is closed under every
    /// operation.
    pub fn is_subuniverse(&self, s: &ElemSet) -> bool {
        let n = self.size();
        self.constants.iter().all(|&(_, c)| s.contains(c))
            && self.unary.iter().all(|(_, t)| s.iter().all(|x| s.contains(t[x])))
            && self
                .binary
                .iter()
                .all(|(_, t)| s.iter().all(|x| s.iter().all(|y| s.contains(t[x * n + y]))))
    }

    /// The least subuniverse containing `generators`.
    pub fn generated_subuniverse(&self, generators: &ElemSet) -> ElemSet {
        let n = self.size();
        let mut s = generators.clone();
        for &(_, c) in &self.constants {
            s.insert(c);
        }
        loop {
            let mut grew = false;
            let current = s.to_vec();
            for &x in &current {
                for (_, t) in &self.unary {
                    grew |= s.insert(t[x]);
                }
                for &y in &current {
                    for (_, t) in &self.binary {
                        grew |= s.insert(t[x * n + y]);
                    }
                }
            }
            if !grew {
                return s;
            }
        }
    }

    /// Every subuniverse, found by closing each subset. Exponential in `n`.
    pub fn all_subuniverses(&self) -> Vec<ElemSet> {
        let n = self.size();
        assert!(n <= 20, "subuniverse enumeration limited to 20 elements");
        let mut out: Vec<ElemSet> = Vec::new();
        for mask in 0u32..(1u32 << n) {
            let s = ElemSet::from_elems(n, (0..n).filter(|&i| mask & (1 << i) != 0));
            if self.is_subuniverse(&s) {
                out.push(s);
            }
        }
        out
    }
}

/// Implemented by every finite algebra type in the crate.
pub trait FiniteAlgebra {
    fn signature(&self) -> Signature<'_>;

    fn size(&self) -> usize {
        self.signature().size()
    }
}
