//! Partitions of a finite carrier and the brute-force congruence oracle.

use std::fmt;

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::par;
use crate::signature::Signature;

/// Default carrier bound for [`congruences_bruteforce`].
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute-force congruence enumeration refused: {size} elements exceeds the limit of {limit}")]
pub struct TooLarge {
    pub size: usize,
    pub limit: usize,
}

/// An equivalence relation, stored as block labels numbered in order of
/// first appearance. Two partitions are equal iff their label vectors are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block: Vec<usize>,
}

impl Partition {
    /// Normalizes arbitrary labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let block = labels
            .iter()
            .map(|&l| match seen.iter().find(|(old, _)| *old == l) {
                Some(&(_, b)) => b,
                None => {
                    let b = seen.len();
                    seen.push((l, b));
                    b
                }
            })
            .collect();
        Partition { block }
    }

    /// Builds a partition from an equivalence predicate. The predicate is
    /// trusted to be an equivalence relation.
    pub fn from_relation(n: usize, related: impl Fn(Elem, Elem) -> bool) -> Self {
        let mut block = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if block[x] != usize::MAX {
                continue;
            }
            for (y, b) in block.iter_mut().enumerate().skip(x) {
                if *b == usize::MAX && related(x, y) {
                    *b = next;
                }
            }
            next += 1;
        }
        Partition { block }
    }

    pub fn identity(n: usize) -> Self {
        Partition {
            block: (0..n).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Partition { block: vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.block.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.block
    }

    pub fn num_blocks(&self) -> usize {
        self.block.iter().max().map_or(0, |m| m + 1)
    }

    pub fn block_of(&self, x: Elem) -> usize {
        self.block[x]
    }

    pub fn same(&self, x: Elem, y: Elem) -> bool {
        self.block[x] == self.block[y]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Blocks in label order, each sorted ascending.
    pub fn classes(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.block.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    pub fn class_of(&self, x: Elem) -> ElemSet {
        let b = self.block[x];
        ElemSet::from_elems(self.size(), (0..self.size()).filter(|&y| self.block[y] == b))
    }

    /// Least element of each block, in label order (hence ascending).
    pub fn representatives(&self) -> Vec<Elem> {
        self.classes().into_iter().map(|c| c[0]).collect()
    }

    /// `self ⊆ other` as relations.
    pub fn is_finer_than(&self, other: &Partition) -> bool {
        let n = self.size();
        (0..n).all(|x| (x..n).all(|y| !self.same(x, y) || other.same(x, y)))
    }

    /// Intersection of two equivalence relations.
    pub fn intersect(&self, other: &Partition) -> Partition {
        Partition::from_relation(self.size(), |x, y| self.same(x, y) && other.same(x, y))
    }

    /// Restriction to the elements of `s`, relabelled `0..|s|` in index order.
    pub fn restrict(&self, s: &ElemSet) -> Partition {
        let members = s.to_vec();
        Partition::from_relation(members.len(), |i, j| self.same(members[i], members[j]))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayPartition { p: self, names }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.classes())
    }
}

struct DisplayPartition<'a> {
    p: &'a Partition,
    names: &'a [String],
}

impl fmt::Display for DisplayPartition<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.p.classes().iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            let names: Vec<&str> = class.iter().map(|&x| self.names[x].as_str()).collect();
            f.write_str(&names.join(" "))?;
        }
        Ok(())
    }
}

/// First operation under which `p` is not compatible, if any.
pub fn congruence_witness(sig: &Signature<'_>, p: &Partition) -> Option<String> {
    let n = sig.size();
    for x in 0..n {
        for x2 in (x + 1)..n {
            if !p.same(x, x2) {
                continue;
            }
            for &(name, t) in &sig.unary {
                if !p.same(t[x], t[x2]) {
                    return Some(format!("{name} at {} ~ {}", sig.names[x], sig.names[x2]));
                }
            }
            for &(name, t) in &sig.binary {
                for y in 0..n {
                    if !p.same(t[x * n + y], t[x2 * n + y]) || !p.same(t[y * n + x], t[y * n + x2]) {
                        return Some(format!(
                            "{name} at {} ~ {} with {}",
                            sig.names[x], sig.names[x2], sig.names[y]
                        ));
                    }
                }
            }
        }
    }
    None
}

pub fn is_congruence(sig: &Signature<'_>, p: &Partition) -> bool {
    p.size() == sig.size() && congruence_witness(sig, p).is_none()
}

/// Least congruence containing `pairs`, by union-find saturation.
pub fn generated_congruence(sig: &Signature<'_>, pairs: &[(Elem, Elem)]) -> Partition {
    let n = sig.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    fn union(parent: &mut [usize], a: usize, b: usize) -> bool {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        parent[hi] = lo;
        true
    }
    for &(a, b) in pairs {
        union(&mut parent, a, b);
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            for x2 in (x + 1)..n {
                if find(&mut parent, x) != find(&mut parent, x2) {
                    continue;
                }
                for &(_, t) in &sig.unary {
                    changed |= union(&mut parent, t[x], t[x2]);
                }
                for &(_, t) in &sig.binary {
                    for y in 0..n {
                        changed |= union(&mut parent, t[x * n + y], t[x2 * n + y]);
                        changed |= union(&mut parent, t[y * n + x], t[y * n + x2]);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    Partition::from_labels(&roots)
}

/// Compatibility constraint "if x ~ x2 then p ~ q", bucketed by the largest
/// index it mentions so it is checked exactly once, as soon as it can be.
#[derive(Clone, Copy)]
struct Constraint {
    x: usize,
    x2: usize,
    p: usize,
    q: usize,
}

fn constraint_buckets(sig: &Signature<'_>) -> Vec<Vec<Constraint>> {
    let n = sig.size();
    let mut buckets = vec![Vec::new(); n];
    let mut push = |c: Constraint| {
        if c.p != c.q {
            let top = c.x.max(c.x2).max(c.p).max(c.q);
            buckets[top].push(c);
        }
    };
    for x in 0..n {
        for x2 in (x + 1)..n {
            for &(_, t) in &sig.unary {
                push(Constraint {
                    x,
                    x2,
                    p: t[x],
                    q: t[x2],
                });
            }
            for &(_, t) in &sig.binary {
                for y in 0..n {
                    push(Constraint {
                        x,
                        x2,
                        p: t[x * n + y],
                        q: t[x2 * n + y],
                    });
                    push(Constraint {
                        x,
                        x2,
                        p: t[y * n + x],
                        q: t[y * n + x2],
                    });
                }
            }
        }
    }
    buckets
}

fn consistent(buckets: &[Vec<Constraint>], labels: &[usize], k: usize) -> bool {
    buckets[k]
        .iter()
        .all(|c| labels[c.x] != labels[c.x2] || labels[c.p] == labels[c.q])
}

fn search(buckets: &[Vec<Constraint>], labels: &mut Vec<usize>, next_label: usize, n: usize, out: &mut Vec<Partition>) {
    let k = labels.len();
    if k == n {
        out.push(Partition { block: labels.clone() });
        return;
    }
    for label in 0..=next_label {
        labels.push(label);
        if consistent(buckets, labels, k) {
            search(buckets, labels, next_label.max(label + 1), n, out);
        }
        labels.pop();
    }
}

/// Every congruence of the algebra, by exhaustive enumeration of
/// partitions (restricted growth strings) with incremental pruning.
/// Returned in lexicographic order of label vectors, so the total
/// congruence comes first and the identity last.
pub fn congruences_bruteforce(sig: &Signature<'_>, limit: usize) -> Result<Vec<Partition>, TooLarge> {
    let n = sig.size();
    if n > limit {
        return Err(TooLarge { size: n, limit });
    }
    if n == 0 {
        return Ok(vec![Partition { block: vec![] }]);
    }
    let buckets = constraint_buckets(sig);

    // Split the search tree at a shallow depth and explore subtrees in
    // parallel; concatenating in prefix order keeps the output sorted.
    let depth = n.min(4);
    let mut prefixes: Vec<(Vec<usize>, usize)> = vec![(vec![0], 1)];
    if !consistent(&buckets, &[0], 0) {
        prefixes.clear();
    }
    for k in 1..depth {
        let mut grown = Vec::new();
        for (prefix, next_label) in &prefixes {
            for label in 0..=*next_label {
                let mut p = prefix.clone();
                p.push(label);
                if consistent(&buckets, &p, k) {
                    grown.push((p, (*next_label).max(label + 1)));
                }
            }
        }
        prefixes = grown;
    }
    let chunks = par::map_coarse(prefixes.len(), |i| {
        let (prefix, next_label) = &prefixes[i];
        let mut labels = prefix.clone();
        let mut out = Vec::new();
        search(&buckets, &mut labels, *next_label, n, &mut out);
        out
    });
    Ok(chunks.into_iter().flatten().collect())
}
