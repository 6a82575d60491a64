//! Residuated operations on twists,
//!
//! ```text
//! (a,b) * (c,d)  = (a ^ c, (a -> d) ^ (c -> b))
//! (a,b) -> (c,d) = ((a -> c) ^ (d -> b), a ^ d)
//! ```
//!
//! and how far they are from a Nelson lattice when `A` is not Heyting.
//! Nothing here assumes the laws hold; every check reports what it finds.

use thiserror::Error;

use crate::algebra::SnaAlgebra;
use crate::elemset::Elem;
use crate::srl::Srl;
use crate::twist::{pair_name, TwistAlgebra};
use crate::verdict::{check_axioms, Axiom, CheckMode, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResiduationError {
    #[error("{0} leaves the carrier of the twist")]
    NotClosed(String),
}

/// A twist with the residuated product and implication as tables.
#[derive(Debug, Clone)]
pub struct ResiduatedView {
    twist: TwistAlgebra,
    star: Vec<Elem>,
    rimp: Vec<Elem>,
}

impl ResiduatedView {
    pub fn twist(&self) -> &TwistAlgebra {
        &self.twist
    }

    pub fn algebra(&self) -> &SnaAlgebra {
        self.twist.algebra()
    }

    pub fn size(&self) -> usize {
        self.twist.size()
    }

    pub fn names(&self) -> &[String] {
        self.algebra().names()
    }

    pub fn star(&self, x: Elem, y: Elem) -> Elem {
        self.star[x * self.size() + y]
    }

    /// The residuated implication (not the weak implication of the twist).
    pub fn rimp(&self, x: Elem, y: Elem) -> Elem {
        self.rimp[x * self.size() + y]
    }

    /// `x -> 0` for the residuated implication.
    pub fn rneg(&self, x: Elem) -> Elem {
        self.rimp(x, self.algebra().bottom())
    }

    pub fn star_table(&self) -> &[Elem] {
        &self.star
    }

    pub fn rimp_table(&self) -> &[Elem] {
        &self.rimp
    }
}

/// Computes both tables over the source lattice, checking that they stay
/// inside the carrier.
pub fn residuated_view(k: &TwistAlgebra) -> Result<ResiduatedView, ResiduationError> {
    let a = k.source();
    let n = k.size();
    let mut star = vec![0; n * n];
    let mut rimp = vec![0; n * n];
    for x in 0..n {
        let (p, q) = k.pair(x);
        for y in 0..n {
            let (r, s) = k.pair(y);
            let product = (a.meet(p, r), a.meet(a.imp(p, s), a.imp(r, q)));
            let implication = (a.meet(a.imp(p, r), a.imp(s, q)), a.meet(p, s));
            let lookup = |pair: (Elem, Elem), op: &str| {
                k.index_of(pair.0, pair.1).ok_or_else(|| {
                    ResiduationError::NotClosed(format!(
                        "{} {op} {} = {}",
                        pair_name(a, (p, q)),
                        pair_name(a, (r, s)),
                        pair_name(a, pair)
                    ))
                })
            };
            star[x * n + y] = lookup(product, "*")?;
            rimp[x * n + y] = lookup(implication, "->")?;
        }
    }
    Ok(ResiduatedView {
        twist: k.clone(),
        star,
        rimp,
    })
}

type Law = Axiom<ResiduatedView>;

fn leq(v: &ResiduatedView, x: Elem, y: Elem) -> bool {
    v.algebra().leq(x, y)
}

/// Nelson lattice axioms beyond the lattice reduct.
pub const NELSON_LATTICE_LAWS: &[Law] = &[
    Axiom::new("star-associative", "(x*y)*z = x*(y*z)", &["x", "y", "z"], |v, t| {
        v.star(v.star(t[0], t[1]), t[2]) == v.star(t[0], v.star(t[1], t[2]))
    }),
    Axiom::new("star-commutative", "x*y = y*x", &["x", "y"], |v, t| {
        v.star(t[0], t[1]) == v.star(t[1], t[0])
    }),
    Axiom::new("star-unit", "1*x = x", &["x"], |v, t| {
        v.star(v.algebra().top(), t[0]) == t[0]
    }),
    Axiom::new("residuation", "x*y <= z iff x <= y->z", &["x", "y", "z"], |v, t| {
        leq(v, v.star(t[0], t[1]), t[2]) == leq(v, t[0], v.rimp(t[1], t[2]))
    }),
    Axiom::new("involutive", "(x->0)->0 = x", &["x"], |v, t| {
        v.rneg(v.rneg(t[0])) == t[0]
    }),
    Axiom::new(
        "nelson-inequality",
        "((x*x)->y) ^ (((y->0)*(y->0))->(x->0)) <= x->y",
        &["x", "y"],
        |v, t| {
            let (x, y) = (t[0], t[1]);
            let a = v.algebra();
            let ny = v.rneg(y);
            let lhs = a.meet(v.rimp(v.star(x, x), y), v.rimp(v.star(ny, ny), v.rneg(x)));
            leq(v, lhs, v.rimp(x, y))
        },
    ),
];

/// The term translations between the weak implication `=>` and negation `~`
/// of the twist and the residuated operations.
pub const TRANSLATION_LAWS: &[Law] = &[
    Axiom::new("negation-agrees", "~x = x->0", &["x"], |v, t| {
        v.algebra().neg(t[0]) == v.rneg(t[0])
    }),
    Axiom::new("weak-from-residuated", "x=>y = (x*x)->y", &["x", "y"], |v, t| {
        v.algebra().imp(t[0], t[1]) == v.rimp(v.star(t[0], t[0]), t[1])
    }),
    Axiom::new(
        "residuated-from-weak",
        "x->y = (x=>y) ^ (~y=>~x)",
        &["x", "y"],
        |v, t| {
            let a = v.algebra();
            v.rimp(t[0], t[1]) == a.meet(a.imp(t[0], t[1]), a.imp(a.neg(t[1]), a.neg(t[0])))
        },
    ),
    Axiom::new("star-from-weak", "x*y = ~(x=>~y) v ~(y=>~x)", &["x", "y"], |v, t| {
        let a = v.algebra();
        let (x, y) = (t[0], t[1]);
        v.star(x, y) == a.join(a.neg(a.imp(x, a.neg(y))), a.neg(a.imp(y, a.neg(x))))
    }),
];

pub fn verify_nelson_lattice(v: &ResiduatedView, mode: CheckMode) -> Verdict {
    check_axioms("nelson-lattice", v, v.names(), NELSON_LATTICE_LAWS, mode)
}

pub fn verify_translation(v: &ResiduatedView, mode: CheckMode) -> Verdict {
    check_axioms("translation", v, v.names(), TRANSLATION_LAWS, mode)
}

/// A tuple with `a ^ b = c ^ d = 0` and `a -> c` not below `d -> (a -> b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gap {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
    /// `a -> c`.
    pub lhs: Elem,
    /// `d -> (a -> b)`.
    pub rhs: Elem,
}

impl Gap {
    pub fn render(&self, s: &Srl) -> String {
        format!(
            "a={}, b={}, c={}, d={}: a->c = {} is not below d->(a->b) = {}",
            s.name(self.a),
            s.name(self.b),
            s.name(self.c),
            s.name(self.d),
            s.name(self.lhs),
            s.name(self.rhs)
        )
    }
}

/// The least tuple `(a, b, c, d)` violating `a -> c <= d -> (a -> b)` under
/// `a ^ b = c ^ d = 0`, if any. Such a tuple is exactly where
/// `(a,b) => (c,d)` and `(a,b)^2 -> (c,d)` differ in `K(A)`.
pub fn term_translation_gap(s: &Srl) -> Option<Gap> {
    let n = s.size();
    let zero = s.bottom();
    for a in 0..n {
        for b in (0..n).filter(|&b| s.meet(a, b) == zero) {
            for c in 0..n {
                for d in (0..n).filter(|&d| s.meet(c, d) == zero) {
                    let lhs = s.imp(a, c);
                    let rhs = s.imp(d, s.imp(a, b));
                    if !s.leq(lhs, rhs) {
                        return Some(Gap { a, b, c, d, lhs, rhs });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;
    use crate::srl::make_srl;
    use crate::twist::twist_full;

    fn b4(d: &[&str]) -> Srl {
        let l = build_lattice(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap();
        let d = l.subset(d).unwrap();
        make_srl(l, d).unwrap()
    }

    #[test]
    fn heyting_twist_is_a_nelson_lattice() {
        let k = twist_full(&b4(&["0", "a", "b", "1"])).unwrap();
        let v = residuated_view(&k).unwrap();
        assert!(verify_nelson_lattice(&v, CheckMode::FullReport).passed());
        assert!(verify_translation(&v, CheckMode::FullReport).passed());
    }

    #[test]
    fn gap_in_s2() {
        let s = b4(&["0", "a", "1"]);
        let g = term_translation_gap(&s).unwrap();
        assert_eq!((s.name(g.c), s.name(g.d)), ("a", "b"));
        assert_eq!((s.name(g.lhs), s.name(g.rhs)), ("1", "a"));
        assert!(term_translation_gap(&b4(&["0", "a", "b", "1"])).is_none());
    }
}
