//! Finite bounded distributive lattices built from Hasse-diagram data.

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order is not a partial order: {0}")]
    NotAPoset(String),
    #[error("`{x}` and `{y}` have no {missing}")]
    NotALattice {
        x: String,
        y: String,
        missing: &'static str,
    },
    #[error("distributivity fails at x={x}, y={y}, z={z}")]
    NotDistributive { x: String, y: String, z: String },
    #[error("order has no {0} element")]
    NotBounded(&'static str),
}

/// A finite bounded distributive lattice with precomputed order, meet and
/// join tables. Elements are dense indices in input order.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("names", &self.names)
            .field("covers", &self.covers())
            .finish()
    }
}

/// Builds a lattice from element names and cover pairs `(lower, upper)`.
/// The order is the reflexive-transitive closure of the covers.
pub fn build_lattice<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<FiniteLattice, LatticeError> {
    let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    if names.is_empty() {
        return Err(LatticeError::Empty);
    }
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(LatticeError::DuplicateName(name.clone()));
        }
    }
    let n = names.len();
    let lookup = |s: &str| {
        names
            .iter()
            .position(|m| m == s)
            .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
    };
    let mut leq = vec![false; n * n];
    for x in 0..n {
        leq[x * n + x] = true;
    }
    for (lo, hi) in covers {
        let (lo, hi) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
        leq[lo * n + hi] = true;
    }
    // Warshall closure.
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in (x + 1)..n {
            if leq[x * n + y] && leq[y * n + x] {
                return Err(LatticeError::NotAPoset(format!(
                    "covers form a cycle through `{}` and `{}`",
                    names[x], names[y]
                )));
            }
        }
    }
    FiniteLattice::from_leq(names, leq)
}

impl FiniteLattice {
    /// Builds a lattice from a full order table (`leq[x * n + y]` is `x <= y`),
    /// checking every lattice invariant.
    pub fn from_leq(names: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        assert_eq!(leq.len(), n * n, "order table has wrong size");
        let le = |x: Elem, y: Elem| leq[x * n + y];
        for x in 0..n {
            if !le(x, x) {
                return Err(LatticeError::NotAPoset(format!("`{}` is not <= itself", names[x])));
            }
            for y in 0..n {
                if x != y && le(x, y) && le(y, x) {
                    return Err(LatticeError::NotAPoset(format!(
                        "`{}` and `{}` are mutually below each other",
                        names[x], names[y]
                    )));
                }
                for z in 0..n {
                    if le(x, y) && le(y, z) && !le(x, z) {
                        return Err(LatticeError::NotAPoset(format!(
                            "transitivity fails at `{}` <= `{}` <= `{}`",
                            names[x], names[y], names[z]
                        )));
                    }
                }
            }
        }

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let glb = (0..n).find(|&z| le(z, x) && le(z, y) && (0..n).all(|w| !(le(w, x) && le(w, y)) || le(w, z)));
                let lub = (0..n).find(|&z| le(x, z) && le(y, z) && (0..n).all(|w| !(le(x, w) && le(y, w)) || le(z, w)));
                let missing = match (glb, lub) {
                    (None, _) => "meet",
                    (_, None) => "join",
                    (Some(m), Some(j)) => {
                        meet[x * n + y] = m;
                        join[x * n + y] = j;
                        continue;
                    }
                };
                return Err(LatticeError::NotALattice {
                    x: names[x].clone(),
                    y: names[y].clone(),
                    missing,
                });
            }
        }

        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| le(b, x)))
            .ok_or(LatticeError::NotBounded("bottom"))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| le(x, t)))
            .ok_or(LatticeError::NotBounded("top"))?;

        let lattice = FiniteLattice {
            names,
            leq,
            meet,
            join,
            bottom,
            top,
        };
        if let Some((x, y, z)) = lattice.distributivity_witness() {
            return Err(LatticeError::NotDistributive {
                x: lattice.names[x].clone(),
                y: lattice.names[y].clone(),
                z: lattice.names[z].clone(),
            });
        }
        Ok(lattice)
    }

    fn distributivity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.size();
        par::find_first(par::tuple_count(n, 3), |i| {
            let mut t = [0; 3];
            par::decode_tuple(i, n, 3, &mut t);
            let [x, y, z] = t;
            self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
        })
        .map(|i| {
            let mut t = [0; 3];
            par::decode_tuple(i, n, 3, &mut t);
            (t[0], t[1], t[2])
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    /// Resolves an element name to its index.
    pub fn elem(&self, name: &str) -> Result<Elem, LatticeError> {
        self.names
            .iter()
            .position(|m| m == name)
            .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
    }

    /// Resolves a list of names to a subset.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<ElemSet, LatticeError> {
        let mut set = ElemSet::empty(self.size());
        for s in names {
            set.insert(self.elem(s.as_ref())?);
        }
        Ok(set)
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size() + y]
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.size() + y]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.size() + y]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn meet_table(&self) -> &[Elem] {
        &self.meet
    }

    pub fn join_table(&self) -> &[Elem] {
        &self.join
    }

    /// The one-element lattice, where `0 = 1`.
    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    pub fn is_chain(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// True iff `s` contains both bounds and is closed under meet and join.
    pub fn is_sublattice(&self, s: &ElemSet) -> bool {
        self.sublattice_witness(s).is_none()
    }

    /// First reason `s` is not a bounded sublattice, if any.
    pub fn sublattice_witness(&self, s: &ElemSet) -> Option<String> {
        if !s.contains(self.bottom) {
            return Some(format!("missing bottom `{}`", self.name(self.bottom)));
        }
        if !s.contains(self.top) {
            return Some(format!("missing top `{}`", self.name(self.top)));
        }
        for x in s.iter() {
            for y in s.iter() {
                if !s.contains(self.meet(x, y)) {
                    return Some(format!("`{}` ^ `{}` not in set", self.name(x), self.name(y)));
                }
                if !s.contains(self.join(x, y)) {
                    return Some(format!("`{}` v `{}` not in set", self.name(x), self.name(y)));
                }
            }
        }
        None
    }

    /// Cover pairs `(lower, upper)` of the Hasse diagram, sorted by index.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.size();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && self.leq(x, y) && !(0..n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The principal filter `{y : x <= y}`.
    pub fn upset(&self, x: Elem) -> ElemSet {
        ElemSet::from_elems(self.size(), (0..self.size()).filter(|&y| self.leq(x, y)))
    }

    /// The principal ideal `{y : y <= x}`.
    pub fn downset(&self, x: Elem) -> ElemSet {
        ElemSet::from_elems(self.size(), (0..self.size()).filter(|&y| self.leq(y, x)))
    }

    /// Lattice filter test: nonempty upset closed under meets.
    pub fn is_filter(&self, s: &ElemSet) -> bool {
        !s.is_empty()
            && s.iter()
                .all(|x| (0..self.size()).all(|y| !self.leq(x, y) || s.contains(y)))
            && s.iter().all(|x| s.iter().all(|y| s.contains(self.meet(x, y))))
    }

    /// The meet of a nonempty subset (the top for the empty set).
    pub fn meet_all(&self, s: &ElemSet) -> Elem {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Sublattice on `s` with the inherited order. `s` must be a sublattice.
    pub fn restrict(&self, s: &ElemSet) -> Result<(FiniteLattice, Vec<Elem>), LatticeError> {
        let members = s.to_vec();
        let names = members.iter().map(|&x| self.names[x].clone()).collect();
        let k = members.len();
        let mut leq = vec![false; k * k];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                leq[i * k + j] = self.leq(x, y);
            }
        }
        Ok((FiniteLattice::from_leq(names, leq)?, members))
    }
}
