//! The variety generated by totally ordered subresiduated Nelson algebras,
//! axiomatized by `box(x v y) = box x v box y` and `t(x, y) = 1`, and the
//! subdirect decomposition of its members into chains.

use std::fmt;

use thiserror::Error;

use crate::algebra::hom::{hom_failure, is_injective};
use crate::algebra::term::{box_join_identity, satisfies_identity, t_term, Term};
use crate::algebra::SnaAlgebra;
use crate::congruence::{open_implicative_filters, require_sna, theta_of_filter, CongruenceError, ImplicativeFilter};
use crate::elemset::{Elem, ElemSet};
use crate::partition::Partition;
use crate::signature::FiniteAlgebra;
use crate::verdict::Failure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("t(x,y) = 1 fails: {0}")]
    IdentityNotSatisfied(String),
    #[error("not in the chain variety: {0}")]
    NotInVariety(String),
    #[error("the decomposition is stated for nontrivial algebras")]
    TrivialAlgebra,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}

/// `t(x,y) = ((x->y) ^ (~y->~x)) v ((y->x) ^ (~x->~y))`.
pub fn t_value(t: &SnaAlgebra, x: Elem, y: Elem) -> Elem {
    let forward = t.meet(t.imp(x, y), t.imp(t.neg(y), t.neg(x)));
    let backward = t.meet(t.imp(y, x), t.imp(t.neg(x), t.neg(y)));
    t.join(forward, backward)
}

/// `(box(x v y), box x v box y)`.
pub fn box_join_values(t: &SnaAlgebra, x: Elem, y: Elem) -> (Elem, Elem) {
    (t.boxed(t.join(x, y)), t.join(t.boxed(x), t.boxed(y)))
}

/// Outcome of checking the two defining identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainVarietyVerdict {
    pub box_join: Option<Failure>,
    pub t_identity: Option<Failure>,
}

impl ChainVarietyVerdict {
    pub fn satisfies_box_join(&self) -> bool {
        self.box_join.is_none()
    }

    pub fn satisfies_t_identity(&self) -> bool {
        self.t_identity.is_none()
    }

    pub fn member(&self) -> bool {
        self.satisfies_box_join() && self.satisfies_t_identity()
    }
}

impl fmt::Display for ChainVarietyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "member: {}", if self.member() { "yes" } else { "no" })?;
        match &self.box_join {
            None => writeln!(f, "box(x v y) = box(x) v box(y): holds")?,
            Some(fail) => writeln!(f, "box(x v y) = box(x) v box(y): fails at {}", fail.witness_string())?,
        }
        match &self.t_identity {
            None => write!(f, "t(x,y) = 1: holds"),
            Some(fail) => write!(f, "t(x,y) = 1: fails at {}", fail.witness_string()),
        }
    }
}

fn identity_failure(t: &SnaAlgebra, lhs: &Term, rhs: &Term) -> Option<Failure> {
    satisfies_identity(t, lhs, rhs)
        .expect("two-variable identity")
        .failures
        .into_iter()
        .next()
}

pub fn check_chain_variety(t: &SnaAlgebra) -> Result<ChainVarietyVerdict, VarietyError> {
    require_sna(t)?;
    let (lhs, rhs) = box_join_identity();
    Ok(ChainVarietyVerdict {
        box_join: identity_failure(t, &lhs, &rhs),
        t_identity: identity_failure(t, &t_term(), &Term::One),
    })
}

/// Open implicative filters that are proper and prime.
pub fn prime_oifs(t: &SnaAlgebra) -> Result<Vec<ImplicativeFilter>, VarietyError> {
    Ok(open_implicative_filters(t)?.into_iter().filter(|f| f.prime).collect())
}

/// A prime open implicative filter `P` containing `f` and disjoint from
/// `ideal`, if one exists.
pub fn separating_prime(
    t: &SnaAlgebra,
    f: &ElemSet,
    ideal: &ElemSet,
) -> Result<Option<ImplicativeFilter>, VarietyError> {
    Ok(prime_oifs(t)?
        .into_iter()
        .find(|p| f.is_subset(&p.members) && p.members.is_disjoint(ideal)))
}

/// `T/Θ(P)` for one prime `P`.
#[derive(Debug, Clone)]
pub struct ChainFactor {
    pub filter: ImplicativeFilter,
    pub congruence: Partition,
    pub quotient: SnaAlgebra,
    /// `class_of[x]` is the element of `quotient` that `x` maps to.
    pub class_of: Vec<Elem>,
}

/// The quotients by every prime open implicative filter, each checked to be
/// a chain. Requires `t(x, y) = 1`.
pub fn chain_quotients(t: &SnaAlgebra) -> Result<Vec<ChainFactor>, VarietyError> {
    require_sna(t)?;
    if let Some(fail) = identity_failure(t, &t_term(), &Term::One) {
        return Err(VarietyError::IdentityNotSatisfied(fail.witness_string()));
    }
    prime_oifs(t)?
        .into_iter()
        .map(|filter| {
            let congruence = theta_of_filter(t, &filter.members)?;
            let (quotient, class_of) = t.quotient(&congruence).map_err(CongruenceError::from)?;
            if !quotient.lattice().is_chain() {
                return Err(VarietyError::Invariant(format!(
                    "T/P is not a chain for P = {}",
                    filter.members.display_with(t.names())
                )));
            }
            Ok(ChainFactor {
                filter,
                congruence,
                quotient,
                class_of,
            })
        })
        .collect()
}

/// `x ↦ (x/P)_P` into the product of the chain quotients.
#[derive(Debug, Clone)]
pub struct SubdirectEmbedding {
    pub factors: Vec<ChainFactor>,
    /// `map[x][i]` is the image of `x` in factor `i`.
    pub map: Vec<Vec<Elem>>,
    /// Intersection of the prime open implicative filters.
    pub intersection: ElemSet,
}

/// Builds the subdirect embedding and checks that the intersection of the
/// primes is `{1}`, that each component is a homomorphism and that the
/// combined map is injective.
pub fn subdirect_embedding(t: &SnaAlgebra) -> Result<SubdirectEmbedding, VarietyError> {
    if t.is_trivial() {
        return Err(VarietyError::TrivialAlgebra);
    }
    let verdict = check_chain_variety(t)?;
    if !verdict.member() {
        return Err(VarietyError::NotInVariety(verdict.to_string().replace('\n', "; ")));
    }
    let factors = chain_quotients(t)?;
    let mut intersection = ElemSet::full(t.size());
    for f in &factors {
        intersection = intersection.intersection(&f.filter.members);
    }
    if intersection != ElemSet::from_elems(t.size(), [t.top()]) {
        return Err(VarietyError::Invariant(format!(
            "the primes intersect in {}",
            intersection.display_with(t.names())
        )));
    }
    for f in &factors {
        if let Some(why) = hom_failure(&t.signature(), &f.quotient.signature(), &f.class_of) {
            return Err(VarietyError::Invariant(format!(
                "quotient map is not a homomorphism: {why}"
            )));
        }
    }
    let map: Vec<Vec<Elem>> = (0..t.size())
        .map(|x| factors.iter().map(|f| f.class_of[x]).collect())
        .collect();
    let keys: Vec<Elem> = {
        let mut sorted = map.clone();
        sorted.sort();
        sorted.dedup();
        map.iter().map(|v| sorted.binary_search(v).expect("present")).collect()
    };
    if !is_injective(&keys) {
        return Err(VarietyError::Invariant("the subdirect map is not injective".into()));
    }
    Ok(SubdirectEmbedding {
        factors,
        map,
        intersection,
    })
}
