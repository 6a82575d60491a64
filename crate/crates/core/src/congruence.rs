//! Congruences of subresiduated Nelson algebras through open implicative
//! filters: `Θ(F) = {(x, y) : s(x, y) in F}` and `θ ↦ 1/θ` are mutually
//! inverse, so everything here is computed on filters and checked against
//! partitions.

use thiserror::Error;

use crate::algebra::suites::verify_sna;
use crate::algebra::{AlgebraError, SnaAlgebra};
use crate::elemset::{Elem, ElemSet};
use crate::partition::{congruence_witness, generated_congruence, Partition, TooLarge};
use crate::signature::FiniteAlgebra;
use crate::verdict::{CheckMode, Failure, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("{0} is not an open implicative filter")]
    NotOpenImplicative(String),
    #[error("not a congruence: {0}")]
    NotACongruence(String),
    #[error("not a subalgebra: {0}")]
    NotASubalgebra(String),
    #[error("the criterion is stated for nontrivial algebras")]
    TrivialAlgebra,
    #[error("not a subresiduated Nelson algebra: {0}")]
    NotAnSna(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    TooLarge(#[from] TooLarge),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub(crate) fn require_sna(t: &SnaAlgebra) -> Result<(), CongruenceError> {
    match verify_sna(t, CheckMode::FirstFailure).first_failure() {
        None => Ok(()),
        Some(f) => Err(CongruenceError::NotAnSna(f.to_string())),
    }
}

/// A subset of an algebra with its filter properties.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImplicativeFilter {
    pub members: ElemSet,
    pub open: bool,
    pub prime: bool,
}

impl ImplicativeFilter {
    /// Classifies `members`, which must already be an implicative filter.
    fn classify(t: &SnaAlgebra, members: ElemSet) -> Self {
        ImplicativeFilter {
            open: is_open(t, &members),
            prime: is_prime(t, &members),
            members,
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_full()
    }
}

/// `s(x,y) = (x->y) ^ (y->x) ^ (~x->~y) ^ (~y->~x)`.
pub fn s_value(t: &SnaAlgebra, x: Elem, y: Elem) -> Elem {
    let (nx, ny) = (t.neg(x), t.neg(y));
    t.meet(t.meet(t.imp(x, y), t.imp(y, x)), t.meet(t.imp(nx, ny), t.imp(ny, nx)))
}

/// `1 in F`, and `x in F`, `x -> y in F` imply `y in F`.
pub fn is_implicative_filter(t: &SnaAlgebra, f: &ElemSet) -> bool {
    f.contains(t.top())
        && f.iter()
            .all(|x| (0..t.size()).all(|y| !f.contains(t.imp(x, y)) || f.contains(y)))
}

fn is_open(t: &SnaAlgebra, f: &ElemSet) -> bool {
    f.iter().all(|x| f.contains(t.boxed(x)))
}

pub fn is_open_implicative_filter(t: &SnaAlgebra, f: &ElemSet) -> bool {
    f.universe() == t.size() && is_implicative_filter(t, f) && is_open(t, f)
}

/// Proper, and `x v y in F` implies `x in F` or `y in F`.
pub fn is_prime(t: &SnaAlgebra, f: &ElemSet) -> bool {
    !f.is_full()
        && (0..t.size()).all(|x| (0..t.size()).all(|y| !f.contains(t.join(x, y)) || f.contains(x) || f.contains(y)))
}

/// Every open implicative filter, ordered by the index of its least
/// element. Open implicative filters are lattice filters, so only the
/// principal upsets need testing.
pub fn open_implicative_filters(t: &SnaAlgebra) -> Result<Vec<ImplicativeFilter>, CongruenceError> {
    require_sna(t)?;
    let l = t.lattice();
    Ok((0..t.size())
        .map(|x| l.upset(x))
        .filter(|f| is_open_implicative_filter(t, f))
        .map(|f| ImplicativeFilter::classify(t, f))
        .collect())
}

fn meet_closure(t: &SnaAlgebra, x: &ElemSet) -> ElemSet {
    let mut m = x.clone();
    loop {
        let current = m.to_vec();
        let mut grew = false;
        for &a in &current {
            for &b in &current {
                grew |= m.insert(t.meet(a, b));
            }
        }
        if !grew {
            return m;
        }
    }
}

fn check_oif(t: &SnaAlgebra, f: &ElemSet, what: &str) -> Result<(), CongruenceError> {
    if is_open_implicative_filter(t, f) {
        Ok(())
    } else {
        Err(CongruenceError::Invariant(format!(
            "{what} {} is not an open implicative filter",
            f.display_with(t.names())
        )))
    }
}

/// `<X> = {y : box(x1 ^ ... ^ xn) -> y = 1 for some x1, ..., xn in X}`,
/// checked against the intersection of all open implicative filters
/// containing `X`.
pub fn generate_oif(t: &SnaAlgebra, x: &ElemSet) -> Result<ImplicativeFilter, CongruenceError> {
    if x.is_empty() {
        return Err(CongruenceError::EmptyGeneratorSet);
    }
    let meets = meet_closure(t, x);
    let n = t.size();
    let one = t.top();
    let generated = ElemSet::from_elems(n, (0..n).filter(|&y| meets.iter().any(|m| t.imp(t.boxed(m), y) == one)));
    check_oif(t, &generated, "generated set")?;
    let mut oracle = ElemSet::full(n);
    for f in open_implicative_filters(t)? {
        if x.is_subset(&f.members) {
            oracle = oracle.intersection(&f.members);
        }
    }
    if oracle != generated {
        return Err(CongruenceError::Invariant(format!(
            "generated filter {} differs from the intersection {}",
            generated.display_with(t.names()),
            oracle.display_with(t.names())
        )));
    }
    Ok(ImplicativeFilter::classify(t, generated))
}

/// `<F ∪ {x}> = {y : (f ^ box x) -> y = 1 for some f in F}`, checked against
/// [`generate_oif`].
pub fn extend_oif(t: &SnaAlgebra, f: &ElemSet, x: Elem) -> Result<ImplicativeFilter, CongruenceError> {
    if !is_open_implicative_filter(t, f) {
        return Err(CongruenceError::NotOpenImplicative(
            f.display_with(t.names()).to_string(),
        ));
    }
    let n = t.size();
    let bx = t.boxed(x);
    let one = t.top();
    let extended = ElemSet::from_elems(n, (0..n).filter(|&y| f.iter().any(|g| t.imp(t.meet(g, bx), y) == one)));
    let mut generators = f.clone();
    generators.insert(x);
    let expected = generate_oif(t, &generators)?;
    if expected.members != extended {
        return Err(CongruenceError::Invariant(format!(
            "extension {} differs from the generated filter {}",
            extended.display_with(t.names()),
            expected.members.display_with(t.names())
        )));
    }
    Ok(expected)
}

/// `Θ(F) = {(x, y) : s(x, y) in F}`.
pub fn theta_of_filter(t: &SnaAlgebra, f: &ElemSet) -> Result<Partition, CongruenceError> {
    if !is_open_implicative_filter(t, f) {
        return Err(CongruenceError::NotOpenImplicative(
            f.display_with(t.names()).to_string(),
        ));
    }
    let p = Partition::from_relation(t.size(), |x, y| f.contains(s_value(t, x, y)));
    for x in 0..t.size() {
        for y in 0..t.size() {
            if p.same(x, y) != f.contains(s_value(t, x, y)) {
                return Err(CongruenceError::Invariant(format!(
                    "Θ({}) is not transitive",
                    f.display_with(t.names())
                )));
            }
        }
    }
    if let Some(why) = congruence_witness(&t.signature(), &p) {
        return Err(CongruenceError::Invariant(format!(
            "Θ({}) is not a congruence: {why}",
            f.display_with(t.names())
        )));
    }
    Ok(p)
}

/// `1/θ` for a congruence `θ`.
pub fn filter_of_congruence(t: &SnaAlgebra, p: &Partition) -> Result<ImplicativeFilter, CongruenceError> {
    if p.size() != t.size() {
        return Err(CongruenceError::NotACongruence(
            "partition of a different carrier".into(),
        ));
    }
    if let Some(why) = congruence_witness(&t.signature(), p) {
        return Err(CongruenceError::NotACongruence(why));
    }
    let f = p.class_of(t.top());
    check_oif(t, &f, "1-class")?;
    Ok(ImplicativeFilter::classify(t, f))
}

/// `Con(T)`, computed as `{Θ(F) : F open implicative}` in filter order.
pub fn congruences(t: &SnaAlgebra) -> Result<Vec<Partition>, CongruenceError> {
    open_implicative_filters(t)?
        .iter()
        .map(|f| theta_of_filter(t, &f.members))
        .collect()
}

/// The brute-force oracle, re-exported with this module's error type.
pub fn congruences_bruteforce(t: &SnaAlgebra, limit: usize) -> Result<Vec<Partition>, CongruenceError> {
    Ok(crate::partition::congruences_bruteforce(&t.signature(), limit)?)
}

/// `(z, w) in θ(x, y) iff s(x, y) -> s(z, w) = 1`.
pub fn in_principal(t: &SnaAlgebra, x: Elem, y: Elem, z: Elem, w: Elem) -> bool {
    t.imp(s_value(t, x, y), s_value(t, z, w)) == t.top()
}

/// `θ(x, y)` from the formula, checked against the least congruence
/// containing `(x, y)` obtained by closure.
pub fn principal_congruence(t: &SnaAlgebra, x: Elem, y: Elem) -> Result<Partition, CongruenceError> {
    let p = Partition::from_relation(t.size(), |z, w| in_principal(t, x, y, z, w));
    let closure = generated_congruence(&t.signature(), &[(x, y)]);
    if p != closure {
        return Err(CongruenceError::Invariant(format!(
            "principal congruence formula disagrees with closure at ({}, {})",
            t.name(x),
            t.name(y)
        )));
    }
    Ok(p)
}

fn require_nontrivial(t: &SnaAlgebra) -> Result<(), CongruenceError> {
    if t.is_trivial() {
        Err(CongruenceError::TrivialAlgebra)
    } else {
        Ok(())
    }
}

/// `x != 1` implies `box x -> 0 = 1`; checked against there being exactly
/// two open implicative filters.
pub fn is_simple(t: &SnaAlgebra) -> Result<bool, CongruenceError> {
    require_nontrivial(t)?;
    let (one, zero) = (t.top(), t.bottom());
    let criterion = (0..t.size()).all(|x| x == one || t.imp(t.boxed(x), zero) == one);
    let count = open_implicative_filters(t)?.len();
    if criterion != (count == 2) {
        return Err(CongruenceError::Invariant(format!(
            "simplicity criterion gives {criterion} but there are {count} congruences"
        )));
    }
    Ok(criterion)
}

/// Some `x != 1` has `box y -> x = 1` for every `y != 1`; checked against
/// the nonzero open implicative filters having a least member.
pub fn is_subdirectly_irreducible(t: &SnaAlgebra) -> Result<bool, CongruenceError> {
    require_nontrivial(t)?;
    let one = t.top();
    let criterion = (0..t.size())
        .filter(|&x| x != one)
        .any(|x| (0..t.size()).all(|y| y == one || t.imp(t.boxed(y), x) == one));
    let nonzero: Vec<ElemSet> = open_implicative_filters(t)?
        .into_iter()
        .map(|f| f.members)
        .filter(|f| f.len() > 1)
        .collect();
    let has_least = nonzero.iter().any(|f| nonzero.iter().all(|g| f.is_subset(g)));
    if criterion != has_least {
        return Err(CongruenceError::Invariant(format!(
            "subdirect irreducibility criterion gives {criterion}, filter lattice gives {has_least}"
        )));
    }
    Ok(criterion)
}

/// Extends a congruence `p` of the subalgebra on `u` to `T` by generating
/// the open implicative filter of its `s`-values, and checks that the
/// result restricts back to `p`. Indices in `p` are positions within `u`.
pub fn check_cep(t: &SnaAlgebra, u: &ElemSet, p: &Partition) -> Result<Verdict, CongruenceError> {
    let (sub, embedding) = t.subalgebra(u).map_err(|e| match e {
        AlgebraError::NotASubalgebra(why) => CongruenceError::NotASubalgebra(why),
        other => other.into(),
    })?;
    if p.size() != sub.size() {
        return Err(CongruenceError::NotACongruence(
            "partition of a different carrier".into(),
        ));
    }
    if let Some(why) = congruence_witness(&sub.signature(), p) {
        return Err(CongruenceError::NotACongruence(why));
    }
    let pairs: Vec<(Elem, Elem)> = (0..sub.size())
        .flat_map(|i| (0..sub.size()).map(move |j| (i, j)))
        .filter(|&(i, j)| p.same(i, j))
        .map(|(i, j)| (embedding[i], embedding[j]))
        .collect();
    let generators = ElemSet::from_elems(t.size(), pairs.iter().map(|&(x, y)| s_value(t, x, y)));
    let filter = generate_oif(t, &generators)?;
    let extended = theta_of_filter(t, &filter.members)?;
    let closure = generated_congruence(&t.signature(), &pairs);
    if closure != extended {
        return Err(CongruenceError::Invariant(
            "filter-generated congruence differs from closure".into(),
        ));
    }
    let mut verdict = Verdict::pass("cep");
    for i in 0..sub.size() {
        for j in 0..sub.size() {
            if extended.same(embedding[i], embedding[j]) != p.same(i, j) {
                verdict.failures.push(Failure::new(
                    "restriction",
                    "the generated congruence restricted to U equals the given one",
                    &["x", "y"],
                    vec![i, j],
                    sub.names(),
                ));
                return Ok(verdict);
            }
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;

    fn chain3() -> SnaAlgebra {
        let l = build_lattice(&["0", "c", "1"], &[("0", "c"), ("c", "1")]).unwrap();
        SnaAlgebra::new(l, vec![2, 2, 2, 2, 2, 2, 0, 1, 2], vec![2, 1, 0]).unwrap()
    }

    #[test]
    fn three_chain_filters_and_congruences() {
        let t = chain3();
        let fs = open_implicative_filters(&t).unwrap();
        // {c, 1} is a filter but not implicative: c -> 0 = 1.
        assert_eq!(fs.len(), 2);
        assert!(is_simple(&t).unwrap());
        assert!(is_subdirectly_irreducible(&t).unwrap());
        let brute = congruences_bruteforce(&t, 12).unwrap();
        assert_eq!(brute.len(), 2);
    }

    #[test]
    fn s_is_symmetric_and_one_on_diagonal() {
        let t = chain3();
        for x in 0..3 {
            assert_eq!(s_value(&t, x, x), t.top());
            for y in 0..3 {
                assert_eq!(s_value(&t, x, y), s_value(&t, y, x));
            }
        }
    }

    #[test]
    fn generators_and_errors() {
        let t = chain3();
        assert_eq!(
            generate_oif(&t, &ElemSet::empty(3)),
            Err(CongruenceError::EmptyGeneratorSet)
        );
        let top = ElemSet::from_elems(3, [2]);
        assert_eq!(generate_oif(&t, &top).unwrap().members, top);
        assert_eq!(extend_oif(&t, &top, 2).unwrap().members, top);
        assert!(theta_of_filter(&t, &top).unwrap().is_identity());
        assert!(theta_of_filter(&t, &ElemSet::full(3)).unwrap().is_total());
        let bad = ElemSet::from_elems(3, [1, 2]);
        assert!(matches!(
            theta_of_filter(&t, &bad),
            Err(CongruenceError::NotOpenImplicative(_))
        ));
        assert_eq!(is_simple(&SnaAlgebra::trivial()), Err(CongruenceError::TrivialAlgebra));
    }

    #[test]
    fn principal_congruences_of_the_chain() {
        let t = chain3();
        assert!(principal_congruence(&t, 1, 1).unwrap().is_identity());
        assert!(principal_congruence(&t, 0, 2).unwrap().is_total());
    }
}
