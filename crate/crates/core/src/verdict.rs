//! Exhaustive axiom checking with deterministic witnesses.
//!
//! Each axiom is a predicate over a tuple of carrier elements. Checking walks
//! all `n^arity` tuples in lexicographic index order and reports the least
//! failing tuple, so reports are stable across runs and thread counts.

use std::fmt;

use crate::elemset::Elem;
use crate::par;

/// A universally quantified law over a finite algebra `A`. Conditional laws
/// (quasi-identities) return `true` when their hypothesis fails.
pub struct Axiom<A: ?Sized> {
    pub name: &'static str,
    pub statement: &'static str,
    pub vars: &'static [&'static str],
    pub holds: fn(&A, &[Elem]) -> bool,
}

impl<A: ?Sized> Axiom<A> {
    pub const fn new(
        name: &'static str,
        statement: &'static str,
        vars: &'static [&'static str],
        holds: fn(&A, &[Elem]) -> bool,
    ) -> Self {
        Axiom {
            name,
            statement,
            vars,
            holds,
        }
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CheckMode {
    /// Stop at the first failing axiom.
    #[default]
    FirstFailure,
    /// Check every axiom and report each failing one.
    FullReport,
}

/// One failing law with its least witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub axiom: String,
    pub statement: String,
    pub vars: Vec<String>,
    pub witness: Vec<Elem>,
    pub witness_names: Vec<String>,
    /// Number of failing tuples in the whole search space.
    pub failing_tuples: usize,
}

impl Failure {
    pub fn new(
        axiom: impl Into<String>,
        statement: impl Into<String>,
        vars: &[&str],
        witness: Vec<Elem>,
        names: &[String],
    ) -> Self {
        Failure {
            axiom: axiom.into(),
            statement: statement.into(),
            vars: vars.iter().map(|v| v.to_string()).collect(),
            witness_names: witness.iter().map(|&x| names[x].clone()).collect(),
            witness,
            failing_tuples: 1,
        }
    }

    /// `x=(1,0), y=(a,b)` style rendering.
    pub fn witness_string(&self) -> String {
        self.vars
            .iter()
            .zip(&self.witness_names)
            .map(|(v, w)| format!("{v}={w}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.statement)?;
        if !self.vars.is_empty() {
            write!(f, " fails at {}", self.witness_string())?;
        } else {
            write!(f, " fails")?;
        }
        if self.failing_tuples > 1 {
            write!(f, " ({} failing tuples)", self.failing_tuples)?;
        }
        Ok(())
    }
}

/// Outcome of a suite of checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub suite: String,
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub fn pass(suite: impl Into<String>) -> Self {
        Verdict {
            suite: suite.into(),
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: &str) -> Option<&Failure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    /// Appends the failures of `other`, keeping this suite name.
    pub fn absorb(&mut self, other: Verdict) {
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{}: PASS", self.suite);
        }
        write!(f, "{}: FAIL", self.suite)?;
        for failure in &self.failures {
            write!(f, "\n  {failure}")?;
        }
        Ok(())
    }
}

/// Least failing tuple of `axiom` over a carrier of size `n`.
pub fn least_witness<A: Sync + ?Sized>(alg: &A, n: usize, axiom: &Axiom<A>) -> Option<Vec<Elem>> {
    let arity = axiom.arity();
    let holds = axiom.holds;
    par::find_first(par::tuple_count(n, arity), |i| {
        let mut t = [0; 8];
        par::decode_tuple(i, n, arity, &mut t);
        !holds(alg, &t[..arity])
    })
    .map(|i| {
        let mut t = vec![0; arity];
        par::decode_tuple(i, n, arity, &mut t);
        t
    })
}

/// Every failing tuple of `axiom`, in lexicographic order.
pub fn failing_instances<A: Sync + ?Sized>(alg: &A, n: usize, axiom: &Axiom<A>) -> Vec<Vec<Elem>> {
    let arity = axiom.arity();
    let holds = axiom.holds;
    par::filter(par::tuple_count(n, arity), |i| {
        let mut t = [0; 8];
        par::decode_tuple(i, n, arity, &mut t);
        !holds(alg, &t[..arity])
    })
    .into_iter()
    .map(|i| {
        let mut t = vec![0; arity];
        par::decode_tuple(i, n, arity, &mut t);
        t
    })
    .collect()
}

/// Checks `axioms` in order over a carrier of size `n` with element names
/// `names`.
pub fn check_axioms<A: Sync + ?Sized>(
    suite: &str,
    alg: &A,
    names: &[String],
    axioms: &[Axiom<A>],
    mode: CheckMode,
) -> Verdict {
    let n = names.len();
    let mut verdict = Verdict::pass(suite);
    for axiom in axioms {
        if let Some(witness) = least_witness(alg, n, axiom) {
            let arity = axiom.arity();
            let holds = axiom.holds;
            let mut failure = Failure::new(axiom.name, axiom.statement, axiom.vars, witness, names);
            failure.failing_tuples = par::count(par::tuple_count(n, arity), |i| {
                let mut t = [0; 8];
                par::decode_tuple(i, n, arity, &mut t);
                !holds(alg, &t[..arity])
            });
            verdict.failures.push(failure);
            if mode == CheckMode::FirstFailure {
                break;
            }
        }
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Mod(usize);

    const LAWS: &[Axiom<Mod>] = &[
        Axiom::new("comm", "max(x,y) = max(y,x)", &["x", "y"], |_, t| {
            t[0].max(t[1]) == t[1].max(t[0])
        }),
        Axiom::new("small", "x+y < m", &["x", "y"], |m, t| t[0] + t[1] < m.0),
        Axiom::new("nonzero", "x != 0", &["x"], |_, t| t[0] != 0),
    ];

    #[test]
    fn least_witness_and_modes() {
        let names: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let first = check_axioms("demo", &Mod(4), &names, LAWS, CheckMode::FirstFailure);
        assert_eq!(first.failures.len(), 1);
        let f = &first.failures[0];
        assert_eq!(f.axiom, "small");
        assert_eq!(f.witness, vec![1, 3]);
        assert_eq!(f.failing_tuples, 6);
        assert_eq!(f.witness_string(), "x=1, y=3");

        let full = check_axioms("demo", &Mod(4), &names, LAWS, CheckMode::FullReport);
        assert_eq!(full.failures.len(), 2);
        assert_eq!(full.failure("nonzero").unwrap().witness, vec![0]);
        assert_eq!(failing_instances(&Mod(4), 4, &LAWS[2]), vec![vec![0]]);
    }
}
