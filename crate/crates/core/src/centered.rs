//! Centered algebras: the fixed point `c` of `~`, the conditions (CK) and
//! (C), and which algebras are isomorphic to a full twist `K(A)`.

use thiserror::Error;

use crate::algebra::suites::{verify_kleene, verify_sna};
use crate::algebra::SnaAlgebra;
use crate::elemset::Elem;
use crate::srl::Srl;
use crate::twist::{rho, RhoMap, TwistError};
use crate::verdict::{check_axioms, Axiom, CheckMode, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("~ has several fixed points: {0:?}")]
    MultipleFixedPoints(Vec<String>),
    #[error("the algebra has no center")]
    NoCenter,
    #[error("not a Kleene algebra: {0}")]
    NotKleene(String),
    #[error("not a subresiduated Nelson algebra: {0}")]
    NotAnSna(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Twist(#[from] TwistError),
}

/// Outcome of (CK) or (C): holds, or fails at the least pair `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    Holds,
    Fails { x: Elem, y: Elem },
}

impl Condition {
    pub fn holds(self) -> bool {
        self == Condition::Holds
    }

    pub fn render(self, t: &SnaAlgebra) -> String {
        match self {
            Condition::Holds => "holds".into(),
            Condition::Fails { x, y } => format!("fails at x={}, y={}", t.name(x), t.name(y)),
        }
    }
}

/// The unique fixed point of `~`, if any.
pub fn find_center(t: &SnaAlgebra) -> Result<Option<Elem>, CenterError> {
    if let Some(f) = verify_kleene(t, CheckMode::FirstFailure).first_failure() {
        return Err(CenterError::NotKleene(f.to_string()));
    }
    match t.negation_fixed_points().as_slice() {
        [] => Ok(None),
        [c] => Ok(Some(*c)),
        many => Err(CenterError::MultipleFixedPoints(
            many.iter().map(|&x| t.name(x).to_string()).collect(),
        )),
    }
}

fn center_of(t: &SnaAlgebra) -> Result<Elem, CenterError> {
    find_center(t)?.ok_or(CenterError::NoCenter)
}

fn first_failure(t: &SnaAlgebra, fails: impl Fn(Elem, Elem) -> bool) -> Condition {
    let n = t.size();
    for x in 0..n {
        for y in 0..n {
            if fails(x, y) {
                return Condition::Fails { x, y };
            }
        }
    }
    Condition::Holds
}

/// (CK): if `x, y >= c` and `x ^ y <= c` then some `z` has `z v c = x` and
/// `~z v c = y`.
pub fn check_ck(t: &SnaAlgebra) -> Result<Condition, CenterError> {
    let c = center_of(t)?;
    Ok(first_failure(t, |x, y| {
        t.leq(c, x)
            && t.leq(c, y)
            && t.leq(t.meet(x, y), c)
            && !(0..t.size()).any(|z| t.join(z, c) == x && t.join(t.neg(z), c) == y)
    }))
}

fn check_c_direct(t: &SnaAlgebra, c: Elem) -> Condition {
    let (zero, one) = (t.bottom(), t.top());
    first_failure(t, |x, y| {
        let (xc, yc) = (t.join(x, c), t.join(y, c));
        t.imp(t.meet(x, y), zero) == one && !(0..t.size()).any(|z| t.join(z, c) == xc && t.join(t.neg(z), c) == yc)
    })
}

fn require_sna(t: &SnaAlgebra) -> Result<(), CenterError> {
    match verify_sna(t, CheckMode::FirstFailure).first_failure() {
        None => Ok(()),
        Some(f) => Err(CenterError::NotAnSna(f.to_string())),
    }
}

/// (C): if `(x ^ y) -> 0 = 1` then some `z` has `z v c = x v c` and
/// `~z v c = y v c`. Checked to agree with (CK) in holding or not.
pub fn check_c(t: &SnaAlgebra) -> Result<Condition, CenterError> {
    require_sna(t)?;
    let c = center_of(t)?;
    let cond = check_c_direct(t, c);
    if cond.holds() != check_ck(t)?.holds() {
        return Err(CenterError::Invariant("(C) and (CK) disagree".into()));
    }
    Ok(cond)
}

/// Center, (CK), (C) and surjectivity of `ρ`, with their equivalences
/// checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterReport {
    pub center: Option<Elem>,
    /// `None` when there is no center.
    pub ck: Option<Condition>,
    pub c: Option<Condition>,
    pub rho_surjective: bool,
}

impl CenterReport {
    pub fn render(&self, t: &SnaAlgebra) -> String {
        let na = || "not applicable (no center)".to_string();
        format!(
            "center: {}\n(CK): {}\n(C): {}\nrho surjective: {}",
            self.center.map_or("none".to_string(), |c| t.name(c).to_string()),
            self.ck.map_or_else(na, |k| k.render(t)),
            self.c.map_or_else(na, |k| k.render(t)),
            if self.rho_surjective { "yes" } else { "no" }
        )
    }
}

pub fn center_report(t: &SnaAlgebra) -> Result<CenterReport, CenterError> {
    require_sna(t)?;
    let center = find_center(t)?;
    let rho_surjective = rho(t)?.surjective;
    let (ck, c) = match center {
        None => (None, None),
        Some(_) => {
            let c = check_c(t)?;
            let ck = check_ck(t)?;
            if c.holds() != rho_surjective {
                return Err(CenterError::Invariant("(C) and surjectivity of ρ disagree".into()));
            }
            (Some(ck), Some(c))
        }
    };
    Ok(CenterReport {
        center,
        ck,
        c,
        rho_surjective,
    })
}

/// Whether a subresiduated Nelson algebra is isomorphic to some `K(A)`.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Representation {
    /// `ρ : T -> K(T/θ)` is an isomorphism.
    Twist {
        srl: Srl,
        rho: RhoMap,
    },
    NoCenter,
    ConditionFails(Condition),
}

impl Representation {
    pub fn is_twist(&self) -> bool {
        matches!(self, Representation::Twist { .. })
    }
}

pub fn representable_as_twist(t: &SnaAlgebra) -> Result<Representation, CenterError> {
    require_sna(t)?;
    let r = rho(t)?;
    let Some(_) = find_center(t)? else {
        if r.surjective {
            return Err(CenterError::Invariant("centerless algebra with surjective ρ".into()));
        }
        return Ok(Representation::NoCenter);
    };
    let ck = check_ck(t)?;
    if !ck.holds() {
        if r.surjective {
            return Err(CenterError::Invariant("(CK) fails but ρ is surjective".into()));
        }
        return Ok(Representation::ConditionFails(ck));
    }
    if !r.surjective {
        return Err(CenterError::Invariant("(CK) holds but ρ is not surjective".into()));
    }
    Ok(Representation::Twist {
        srl: r.quotient.srl.clone(),
        rho: r,
    })
}

fn c_of(a: &SnaAlgebra) -> Elem {
    a.center().expect("centered algebra")
}

/// Laws of the center in a centered subresiduated Nelson algebra.
pub const CENTER_LAWS: &[Axiom<SnaAlgebra>] = &[
    Axiom::new("center-implies-all", "c -> x = 1", &["x"], |a, t| {
        a.imp(c_of(a), t[0]) == a.top()
    }),
    Axiom::new(
        "center-join-negation",
        "((x ^ y) v c) -> 0 = (x ^ y) -> 0",
        &["x", "y"],
        |a, t| {
            let m = a.meet(t[0], t[1]);
            a.imp(a.join(m, c_of(a)), a.bottom()) == a.imp(m, a.bottom())
        },
    ),
    Axiom::new(
        "below-center",
        "(x ^ y) -> 0 = 1 iff x ^ y <= c",
        &["x", "y"],
        |a, t| {
            let m = a.meet(t[0], t[1]);
            (a.imp(m, a.bottom()) == a.top()) == a.leq(m, c_of(a))
        },
    ),
];

pub fn verify_center_laws(t: &SnaAlgebra) -> Result<Verdict, CenterError> {
    center_of(t)?;
    Ok(check_axioms("center", t, t.names(), CENTER_LAWS, CheckMode::FullReport))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;

    fn chain3() -> SnaAlgebra {
        let l = build_lattice(&["0", "c", "1"], &[("0", "c"), ("c", "1")]).unwrap();
        SnaAlgebra::new(l, vec![2, 2, 2, 2, 2, 2, 0, 1, 2], vec![2, 1, 0]).unwrap()
    }

    fn two() -> SnaAlgebra {
        let l = build_lattice(&["0", "1"], &[("0", "1")]).unwrap();
        SnaAlgebra::new(l, vec![1, 1, 0, 1], vec![1, 0]).unwrap()
    }

    #[test]
    fn chain_is_a_twist() {
        let t = chain3();
        assert_eq!(find_center(&t).unwrap(), Some(1));
        assert_eq!(check_ck(&t).unwrap(), Condition::Holds);
        assert_eq!(check_c(&t).unwrap(), Condition::Holds);
        assert!(representable_as_twist(&t).unwrap().is_twist());
        assert!(verify_center_laws(&t).unwrap().passed());
    }

    #[test]
    fn two_element_algebra_is_centerless() {
        let t = two();
        assert_eq!(find_center(&t).unwrap(), None);
        assert_eq!(check_ck(&t), Err(CenterError::NoCenter));
        assert!(matches!(representable_as_twist(&t).unwrap(), Representation::NoCenter));
        let report = center_report(&t).unwrap();
        assert_eq!(report.ck, None);
        assert!(!report.rho_surjective);
    }

    #[test]
    fn trivial_algebra_is_centered() {
        let t = SnaAlgebra::trivial();
        assert_eq!(find_center(&t).unwrap(), Some(0));
        assert_eq!(check_c(&t).unwrap(), Condition::Holds);
    }
}
