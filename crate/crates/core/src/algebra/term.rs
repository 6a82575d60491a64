//! Terms over `^ v -> ~ 0 1` with the derived `box(t) = 1 -> t`.
//!
//! Text syntax, loosest binding first: `->` (right associative), `v`, `^`,
//! then prefix `~`, `box(...)`, constants, variables and parentheses. The
//! letter `v` is a variable in operand position and join in operator
//! position, so `v v x` parses as `v ∨ x`. Unicode `∧ ∨ → ∼ □` are accepted.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::SnaAlgebra;
use crate::elemset::Elem;
use crate::par;
use crate::verdict::{Failure, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Box(Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("identity has {0} variables; at most 16 are supported")]
    TooManyVariables(usize),
}

const MAX_VARS: usize = 16;

pub fn var(name: &str) -> Term {
    Term::Var(name.to_string())
}

pub fn meet(a: Term, b: Term) -> Term {
    Term::Meet(Box::new(a), Box::new(b))
}

pub fn join(a: Term, b: Term) -> Term {
    Term::Join(Box::new(a), Box::new(b))
}

pub fn imp(a: Term, b: Term) -> Term {
    Term::Imp(Box::new(a), Box::new(b))
}

pub fn neg(a: Term) -> Term {
    Term::Neg(Box::new(a))
}

pub fn boxed(a: Term) -> Term {
    Term::Box(Box::new(a))
}

/// `t(x,y) = ((x->y) ^ (~y->~x)) v ((y->x) ^ (~x->~y))`.
pub fn t_term() -> Term {
    let (x, y) = (var("x"), var("y"));
    join(
        meet(imp(x.clone(), y.clone()), imp(neg(y.clone()), neg(x.clone()))),
        meet(imp(y.clone(), x.clone()), imp(neg(x), neg(y))),
    )
}

/// `s(x,y) = (x->y) ^ (y->x) ^ (~x->~y) ^ (~y->~x)`.
pub fn s_term() -> Term {
    let (x, y) = (var("x"), var("y"));
    meet(
        meet(imp(x.clone(), y.clone()), imp(y.clone(), x.clone())),
        meet(imp(neg(x.clone()), neg(y.clone())), imp(neg(y), neg(x))),
    )
}

/// The pair `box(x v y)`, `box(x) v box(y)`.
pub fn box_join_identity() -> (Term, Term) {
    let (x, y) = (var("x"), var("y"));
    (boxed(join(x.clone(), y.clone())), join(boxed(x), boxed(y)))
}

const CANONICAL_VARS: [&str; 5] = ["x", "y", "z", "w", "v"];

fn var_rank(name: &str) -> (usize, &str) {
    match CANONICAL_VARS.iter().position(|&v| v == name) {
        Some(i) => (i, ""),
        None => (CANONICAL_VARS.len(), name),
    }
}

impl Term {
    /// Variables in canonical order: `x, y, z, w, v` first, then any others
    /// alphabetically.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort_by(|a, b| var_rank(a).cmp(&var_rank(b)));
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => out.push(v.clone()),
            Term::Zero | Term::One => {}
            Term::Meet(a, b) | Term::Join(a, b) | Term::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Neg(a) | Term::Box(a) => a.collect_vars(out),
        }
    }

    /// Evaluates with a by-index assignment for the variables in `vars`.
    fn eval_indexed(&self, a: &SnaAlgebra, vars: &[String], values: &[Elem]) -> Elem {
        match self {
            Term::Var(v) => values[vars.iter().position(|w| w == v).expect("bound variable")],
            Term::Zero => a.bottom(),
            Term::One => a.top(),
            Term::Meet(l, r) => a.meet(l.eval_indexed(a, vars, values), r.eval_indexed(a, vars, values)),
            Term::Join(l, r) => a.join(l.eval_indexed(a, vars, values), r.eval_indexed(a, vars, values)),
            Term::Imp(l, r) => a.imp(l.eval_indexed(a, vars, values), r.eval_indexed(a, vars, values)),
            Term::Neg(t) => a.neg(t.eval_indexed(a, vars, values)),
            Term::Box(t) => a.boxed(t.eval_indexed(a, vars, values)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Imp(..) => 0,
            Term::Join(..) => 1,
            Term::Meet(..) => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, t: &Term, min: u8| {
            if t.precedence() < min {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        };
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Zero => write!(f, "0"),
            Term::One => write!(f, "1"),
            Term::Meet(a, b) => {
                wrap(f, a, 2)?;
                write!(f, " ^ ")?;
                wrap(f, b, 3)
            }
            Term::Join(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " v ")?;
                wrap(f, b, 2)
            }
            Term::Imp(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " -> ")?;
                wrap(f, b, 0)
            }
            Term::Neg(a) => {
                write!(f, "~")?;
                wrap(f, a, 3)
            }
            Term::Box(a) => write!(f, "box({a})"),
        }
    }
}

impl std::str::FromStr for Term {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Meet,
    Arrow,
    Neg,
    Box,
    JoinSym,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, TermError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = match c {
            '^' | '∧' => Tok::Meet,
            '∨' => Tok::JoinSym,
            '~' | '∼' => Tok::Neg,
            '□' => Tok::Box,
            '→' => Tok::Arrow,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0' => Tok::Zero,
            '1' => Tok::One,
            '-' => {
                chars.next();
                match chars.peek() {
                    Some(&(_, '>')) => Tok::Arrow,
                    _ => {
                        return Err(TermError::Parse {
                            offset: i,
                            message: "expected '->'".into(),
                        })
                    }
                }
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((i, if ident == "box" { Tok::Box } else { Tok::Ident(ident) }));
                continue;
            }
            other => {
                return Err(TermError::Parse {
                    offset: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        chars.next();
        out.push((i, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, TermError> {
        Err(TermError::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn is_join(&self) -> bool {
        matches!(self.peek(), Some(Tok::JoinSym)) || matches!(self.peek(), Some(Tok::Ident(s)) if s == "v")
    }

    fn imp(&mut self) -> Result<Term, TermError> {
        let lhs = self.join()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.imp()?;
            return Ok(imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn join(&mut self) -> Result<Term, TermError> {
        let mut lhs = self.meet()?;
        while self.is_join() {
            self.pos += 1;
            lhs = join(lhs, self.meet()?);
        }
        Ok(lhs)
    }

    fn meet(&mut self) -> Result<Term, TermError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::Meet) {
            self.pos += 1;
            lhs = meet(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Term, TermError> {
        let Some(tok) = self.peek().cloned() else {
            return self.error("unexpected end of term");
        };
        self.pos += 1;
        match tok {
            Tok::Neg => Ok(neg(self.unary()?)),
            Tok::Box => Ok(boxed(self.unary()?)),
            Tok::Zero => Ok(Term::Zero),
            Tok::One => Ok(Term::One),
            Tok::Ident(name) => Ok(Term::Var(name)),
            Tok::LParen => {
                let inner = self.imp()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                self.error("expected a term")
            }
        }
    }
}

pub fn parse_term(s: &str) -> Result<Term, TermError> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
        end: s.len(),
    };
    let t = p.imp()?;
    if p.pos != p.toks.len() {
        return p.error("trailing input");
    }
    Ok(t)
}

/// Parses `lhs = rhs`.
pub fn parse_identity(s: &str) -> Result<(Term, Term), TermError> {
    let Some((l, r)) = s.split_once('=') else {
        return Err(TermError::Parse {
            offset: s.len(),
            message: "expected '='".into(),
        });
    };
    let rhs = parse_term(r).map_err(|e| match e {
        TermError::Parse { offset, message } => TermError::Parse {
            offset: offset + l.len() + 1,
            message,
        },
        other => other,
    })?;
    Ok((parse_term(l)?, rhs))
}

/// Evaluates `term` under `assignment`.
pub fn eval_term(a: &SnaAlgebra, term: &Term, assignment: &BTreeMap<String, Elem>) -> Result<Elem, TermError> {
    let vars = term.variables();
    let mut values = Vec::with_capacity(vars.len());
    for v in &vars {
        match assignment.get(v) {
            Some(&x) => values.push(x),
            None => return Err(TermError::UnboundVariable(v.clone())),
        }
    }
    Ok(term.eval_indexed(a, &vars, &values))
}

/// Checks `lhs = rhs` under every assignment; a failure carries the least
/// assignment in variable order.
pub fn satisfies_identity(a: &SnaAlgebra, lhs: &Term, rhs: &Term) -> Result<Verdict, TermError> {
    let mut vars = lhs.variables();
    vars.extend(rhs.variables());
    vars.sort_by(|x, y| var_rank(x).cmp(&var_rank(y)));
    vars.dedup();
    let k = vars.len();
    if k > MAX_VARS {
        return Err(TermError::TooManyVariables(k));
    }
    let n = a.size();
    let fails = |i: usize| {
        let mut t = [0; MAX_VARS];
        par::decode_tuple(i, n, k, &mut t);
        lhs.eval_indexed(a, &vars, &t[..k]) != rhs.eval_indexed(a, &vars, &t[..k])
    };
    let statement = format!("{lhs} = {rhs}");
    let mut verdict = Verdict::pass("identity");
    if let Some(i) = par::find_first(par::tuple_count(n, k), fails) {
        let mut t = vec![0; k];
        par::decode_tuple(i, n, k, &mut t);
        let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        let mut failure = Failure::new(statement.clone(), statement, &var_refs, t, a.names());
        failure.failing_tuples = par::count(par::tuple_count(n, k), fails);
        verdict.failures.push(failure);
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for src in [
            "x -> y -> z",
            "(x -> y) -> z",
            "x ^ y v z",
            "x ^ (y v z)",
            "~~x",
            "box(x v y)",
            "box(x) v box(y)",
            "v v x",
            "~(x -> y) -> x ^ ~y",
            "0 -> 1",
        ] {
            let t = parse_term(src).unwrap();
            let again = parse_term(&t.to_string()).unwrap();
            assert_eq!(t, again, "{src}");
        }
    }

    #[test]
    fn contextual_v_and_unicode() {
        assert_eq!(parse_term("v v x").unwrap(), join(var("v"), var("x")));
        assert_eq!(
            parse_term("□(x ∨ y) → ∼x ∧ y").unwrap(),
            parse_term("box(x v y) -> ~x ^ y").unwrap()
        );
        assert_eq!(
            parse_term("x -> y -> z").unwrap(),
            imp(var("x"), imp(var("y"), var("z")))
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_term("x ^"), Err(TermError::Parse { .. })));
        assert!(matches!(parse_term("(x"), Err(TermError::Parse { .. })));
        assert!(matches!(parse_term("x - y"), Err(TermError::Parse { offset: 2, .. })));
        assert!(matches!(parse_term("x y"), Err(TermError::Parse { .. })));
        assert!(parse_identity("x -> x").is_err());
    }

    #[test]
    fn variable_order_is_canonical() {
        let t = parse_term("w ^ v ^ z ^ y ^ x ^ q").unwrap();
        assert_eq!(t.variables(), ["x", "y", "z", "w", "v", "q"]);
    }

    #[test]
    fn eval_and_identity_in_trivial() {
        let t = SnaAlgebra::trivial();
        let term = parse_term("x -> x").unwrap();
        assert!(matches!(eval_term(&t, &term, &BTreeMap::new()), Err(TermError::UnboundVariable(v)) if v == "x"));
        let mut asg = BTreeMap::new();
        asg.insert("x".to_string(), 0);
        assert_eq!(eval_term(&t, &term, &asg).unwrap(), 0);
        assert!(satisfies_identity(&t, &term, &Term::One).unwrap().passed());
    }
}
