//! Exhaustive axiom suites for Kleene, Nelson and subresiduated Nelson
//! algebras, plus the derived laws every subresiduated Nelson algebra obeys.

use super::{AlgebraError, SnaAlgebra};
use crate::elemset::Elem;
use crate::verdict::{check_axioms, Axiom, CheckMode, Verdict};

type Law = Axiom<SnaAlgebra>;

impl SnaAlgebra {
    fn s(&self, x: Elem) -> Elem {
        self.neg(x)
    }
    fn is_one(&self, x: Elem) -> bool {
        x == self.top()
    }
}

pub const KLEENE_AXIOMS: &[Law] = &[
    Axiom::new("Ne1", "~~x = x", &["x"], |a, t| a.s(a.s(t[0])) == t[0]),
    Axiom::new("Ne2", "~(x^y) = ~x v ~y", &["x", "y"], |a, t| {
        a.s(a.meet(t[0], t[1])) == a.join(a.s(t[0]), a.s(t[1]))
    }),
    Axiom::new("Ne3", "(x^~x)^(y v ~y) = x^~x", &["x", "y"], |a, t| {
        let xx = a.meet(t[0], a.s(t[0]));
        a.meet(xx, a.join(t[1], a.s(t[1]))) == xx
    }),
];

pub const NELSON_AXIOMS: &[Law] = &[
    Axiom::new("Ne4", "x->x = 1", &["x"], |a, t| a.is_one(a.imp(t[0], t[0]))),
    Axiom::new("Ne5", "x->(y->z) = (x^y)->z", &["x", "y", "z"], |a, t| {
        a.imp(t[0], a.imp(t[1], t[2])) == a.imp(a.meet(t[0], t[1]), t[2])
    }),
    Axiom::new("Ne6", "x^(x->y) = x^(~x v y)", &["x", "y"], |a, t| {
        a.meet(t[0], a.imp(t[0], t[1])) == a.meet(t[0], a.join(a.s(t[0]), t[1]))
    }),
    Axiom::new("Ne7", "~x v y <= x->y", &["x", "y"], |a, t| {
        a.leq(a.join(a.s(t[0]), t[1]), a.imp(t[0], t[1]))
    }),
    Axiom::new("Ne8", "x->(y^z) = (x->y)^(x->z)", &["x", "y", "z"], |a, t| {
        a.imp(t[0], a.meet(t[1], t[2])) == a.meet(a.imp(t[0], t[1]), a.imp(t[0], t[2]))
    }),
];

pub const SNA_AXIOMS: &[Law] = &[
    Axiom::new("1", "(x v y)->z = (x->z)^(y->z)", &["x", "y", "z"], |a, t| {
        a.imp(a.join(t[0], t[1]), t[2]) == a.meet(a.imp(t[0], t[2]), a.imp(t[1], t[2]))
    }),
    Axiom::new("2", "z->(x^y) = (z->x)^(z->y)", &["x", "y", "z"], |a, t| {
        a.imp(t[2], a.meet(t[0], t[1])) == a.meet(a.imp(t[2], t[0]), a.imp(t[2], t[1]))
    }),
    Axiom::new("3", "((x->y)^(y->z))->(x->z) = 1", &["x", "y", "z"], |a, t| {
        let lhs = a.meet(a.imp(t[0], t[1]), a.imp(t[1], t[2]));
        a.is_one(a.imp(lhs, a.imp(t[0], t[2])))
    }),
    Axiom::new("4", "x->x = 1", &["x"], |a, t| a.is_one(a.imp(t[0], t[0]))),
    Axiom::new("5", "x^(x->y) <= x^(~x v y)", &["x", "y"], |a, t| {
        a.leq(a.meet(t[0], a.imp(t[0], t[1])), a.meet(t[0], a.join(a.s(t[0]), t[1])))
    }),
    Axiom::new("6", "x->y <= z->(x->y)", &["x", "y", "z"], |a, t| {
        let xy = a.imp(t[0], t[1]);
        a.leq(xy, a.imp(t[2], xy))
    }),
    Axiom::new("7", "~(x->y)->(x^~y) = 1", &["x", "y"], |a, t| {
        a.is_one(a.imp(a.s(a.imp(t[0], t[1])), a.meet(t[0], a.s(t[1]))))
    }),
    Axiom::new("8", "(x^~y)->~(x->y) = 1", &["x", "y"], |a, t| {
        a.is_one(a.imp(a.meet(t[0], a.s(t[1])), a.s(a.imp(t[0], t[1]))))
    }),
];

/// Laws that hold in every subresiduated Nelson algebra.
pub const DERIVED_LAWS: &[Law] = &[
    Axiom::new("box-deflationary", "1->x <= x", &["x"], |a, t| {
        a.leq(a.boxed(t[0]), t[0])
    }),
    Axiom::new(
        "monotone",
        "x <= y implies z->x <= z->y and y->z <= x->z",
        &["x", "y", "z"],
        |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !a.leq(x, y) || (a.leq(a.imp(z, x), a.imp(z, y)) && a.leq(a.imp(y, z), a.imp(x, z)))
        },
    ),
    Axiom::new("order-implies-top", "x <= y implies x->y = 1", &["x", "y"], |a, t| {
        !a.leq(t[0], t[1]) || a.is_one(a.imp(t[0], t[1]))
    }),
    Axiom::new("modus-ponens", "(x^(x->y))->y = 1", &["x", "y"], |a, t| {
        a.is_one(a.imp(a.meet(t[0], a.imp(t[0], t[1])), t[1]))
    }),
    Axiom::new(
        "top-collapse",
        "x->y = 1 implies x = x^(~x v y)",
        &["x", "y"],
        |a, t| {
            let (x, y) = (t[0], t[1]);
            !a.is_one(a.imp(x, y)) || x == a.meet(x, a.join(a.s(x), y))
        },
    ),
    Axiom::new(
        "top-antisymmetric",
        "x->y = 1 and ~y->~x = 1 imply x <= y",
        &["x", "y"],
        |a, t| {
            let (x, y) = (t[0], t[1]);
            !(a.is_one(a.imp(x, y)) && a.is_one(a.imp(a.s(y), a.s(x)))) || a.leq(x, y)
        },
    ),
    Axiom::new(
        "top-transitive",
        "x->y = 1 and y->z = 1 imply x->z = 1",
        &["x", "y", "z"],
        |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !(a.is_one(a.imp(x, y)) && a.is_one(a.imp(y, z))) || a.is_one(a.imp(x, z))
        },
    ),
    Axiom::new(
        "top-lattice-compatible",
        "x->y = 1 implies (x^z)->(y^z) = 1 and (x v z)->(y v z) = 1",
        &["x", "y", "z"],
        |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !a.is_one(a.imp(x, y))
                || (a.is_one(a.imp(a.meet(x, z), a.meet(y, z))) && a.is_one(a.imp(a.join(x, z), a.join(y, z))))
        },
    ),
    Axiom::new(
        "top-imp-compatible",
        "x->y = 1 implies (y->z)->(x->z) = 1 and (z->x)->(z->y) = 1",
        &["x", "y", "z"],
        |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !a.is_one(a.imp(x, y))
                || (a.is_one(a.imp(a.imp(y, z), a.imp(x, z))) && a.is_one(a.imp(a.imp(z, x), a.imp(z, y))))
        },
    ),
    Axiom::new(
        "imp-distributes",
        "x->(y->z) <= (x->y)->(x->z)",
        &["x", "y", "z"],
        |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            a.leq(a.imp(x, a.imp(y, z)), a.imp(a.imp(x, y), a.imp(x, z)))
        },
    ),
    Axiom::new(
        "exchange",
        "(x->v)->((y->w)->z) = (y->w)->((x->v)->z)",
        &["x", "y", "z", "v", "w"],
        |a, t| {
            let xv = a.imp(t[0], t[3]);
            let yw = a.imp(t[1], t[4]);
            a.imp(xv, a.imp(yw, t[2])) == a.imp(yw, a.imp(xv, t[2]))
        },
    ),
    Axiom::new("imp-open", "1->(x->y) = x->y", &["x", "y"], |a, t| {
        let xy = a.imp(t[0], t[1]);
        a.boxed(xy) == xy
    }),
    Axiom::new("box-meet", "1->y <= x->(x^y)", &["x", "y"], |a, t| {
        a.leq(a.boxed(t[1]), a.imp(t[0], a.meet(t[0], t[1])))
    }),
    Axiom::new("box-neg", "1->x <= ~x->0", &["x"], |a, t| {
        a.leq(a.boxed(t[0]), a.imp(a.s(t[0]), a.bottom()))
    }),
];

pub fn verify_kleene(a: &SnaAlgebra, mode: CheckMode) -> Verdict {
    check_axioms("kleene", a, a.names(), KLEENE_AXIOMS, mode)
}

/// Kleene axioms followed by the Nelson axioms.
pub fn verify_nelson(a: &SnaAlgebra, mode: CheckMode) -> Verdict {
    run_suites("nelson", a, &[KLEENE_AXIOMS, NELSON_AXIOMS], mode)
}

/// Kleene axioms followed by the eight subresiduated Nelson conditions.
pub fn verify_sna(a: &SnaAlgebra, mode: CheckMode) -> Verdict {
    run_suites("sna", a, &[KLEENE_AXIOMS, SNA_AXIOMS], mode)
}

/// Checks [`DERIVED_LAWS`]. Refuses algebras that fail [`verify_sna`].
pub fn derived_properties_suite(a: &SnaAlgebra, mode: CheckMode) -> Result<Verdict, AlgebraError> {
    require_sna(a)?;
    Ok(check_axioms("derived", a, a.names(), DERIVED_LAWS, mode))
}

/// Errors with the first failing axiom unless `a` passes [`verify_sna`].
pub fn require_sna(a: &SnaAlgebra) -> Result<(), AlgebraError> {
    let v = verify_sna(a, CheckMode::FirstFailure);
    match v.first_failure() {
        None => Ok(()),
        Some(f) => Err(AlgebraError::Precondition(format!(
            "not a subresiduated Nelson algebra: {f}"
        ))),
    }
}

fn run_suites(suite: &str, a: &SnaAlgebra, parts: &[&[Law]], mode: CheckMode) -> Verdict {
    let mut verdict = Verdict::pass(suite);
    for laws in parts {
        verdict.absorb(check_axioms(suite, a, a.names(), laws, mode));
        if mode == CheckMode::FirstFailure && !verdict.passed() {
            break;
        }
    }
    verdict
}
