//! Algebra files: a `key: value` text format and the same schema as JSON.
//!
//! ```text
//! # comments start with '#'
//! kind: sna
//! elements: 0 c 1
//! covers: 0 c; c 1
//! neg: 1 c 0
//! imp:
//!   0: 1 1 1
//!   c: 1 1 1
//!   1: 0 c 1
//! ```
//!
//! An `sna` file may instead say `twist_of: <srl file>` with an optional
//! `filter:` listing the members of a subresiduated filter.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use snalab_core::twist::{twist_filtered, twist_full, TwistAlgebra};
use snalab_core::{build_lattice, make_srl, Elem, FiniteLattice, SnaAlgebra, Srl};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Validation { field: String, message: String },
}

fn invalid(field: &str, message: impl ToString) -> InputError {
    InputError::Validation {
        field: field.into(),
        message: message.to_string(),
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> InputError {
    InputError::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lattice,
    Srl,
    Sna,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Lattice => "lattice",
            Kind::Srl => "srl",
            Kind::Sna => "sna",
        }
    }
}

/// The schema shared by both formats. Absent and empty lists are kept
/// apart so that parsing and rendering are mutually inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filter: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<String>>,
    /// Row `i` lists `x_i -> y` for every `y`, in element order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<Vec<String>>>,
}

impl AlgebraFile {
    fn empty(kind: Kind) -> Self {
        AlgebraFile {
            kind,
            elements: None,
            covers: None,
            d_set: None,
            twist_of: None,
            filter: None,
            neg: None,
            imp: None,
        }
    }

    pub fn from_lattice(l: &FiniteLattice) -> Self {
        let name = |x: Elem| l.name(x).to_string();
        AlgebraFile {
            elements: Some(l.names().to_vec()),
            covers: Some(l.covers().into_iter().map(|(x, y)| (name(x), name(y))).collect()),
            ..AlgebraFile::empty(Kind::Lattice)
        }
    }

    pub fn from_srl(s: &Srl) -> Self {
        AlgebraFile {
            kind: Kind::Srl,
            d_set: Some(s.d_set().iter().map(|x| s.name(x).to_string()).collect()),
            ..AlgebraFile::from_lattice(s.lattice())
        }
    }

    pub fn from_sna(t: &SnaAlgebra) -> Self {
        let n = t.size();
        let name = |x: Elem| t.name(x).to_string();
        AlgebraFile {
            kind: Kind::Sna,
            neg: Some((0..n).map(|x| name(t.neg(x))).collect()),
            imp: Some((0..n).map(|x| (0..n).map(|y| name(t.imp(x, y))).collect()).collect()),
            ..AlgebraFile::from_lattice(t.lattice())
        }
    }
}

const KEYS: &[&str] = &[
    "kind", "elements", "covers", "d_set", "twist_of", "filter", "neg", "imp",
];

fn check_name(name: &str) -> Result<(), String> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || matches!(c, ';' | ':' | '#')) {
        Err(format!("`{name}` is not a valid element name"))
    } else {
        Ok(())
    }
}

fn names(line: usize, value: &str) -> Result<Vec<String>, InputError> {
    value
        .split_whitespace()
        .map(|w| check_name(w).map(|_| w.to_string()).map_err(|m| parse_error(line, m)))
        .collect()
}

fn pairs(line: usize, value: &str) -> Result<Vec<(String, String)>, InputError> {
    value
        .split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| match names(line, p)?.as_slice() {
            [a, b] => Ok((a.clone(), b.clone())),
            _ => Err(parse_error(line, format!("`{}` is not a pair of names", p.trim()))),
        })
        .collect()
}

/// Parses the text format.
pub fn parse_text(src: &str) -> Result<AlgebraFile, InputError> {
    let mut kind = None;
    let mut file = AlgebraFile::empty(Kind::Lattice);
    let mut seen: Vec<&str> = Vec::new();
    let mut in_imp = false;
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if raw.starts_with(char::is_whitespace) {
            if !in_imp {
                return Err(parse_error(line, "indented line outside an `imp:` block"));
            }
            let (row, values) = trimmed
                .split_once(':')
                .ok_or_else(|| parse_error(line, "expected `name: values`"))?;
            let row = row.trim();
            check_name(row).map_err(|m| parse_error(line, m))?;
            let rows = file.imp.get_or_insert_with(Vec::new);
            let expected = file.elements.as_ref().and_then(|e| e.get(rows.len()));
            if expected.map(String::as_str) != Some(row) {
                return Err(parse_error(
                    line,
                    format!("row `{row}` is out of element order or names an unknown element"),
                ));
            }
            rows.push(names(line, values)?);
            continue;
        }
        in_imp = false;
        let (key, value) = trimmed
            .split_once(':')
            .ok_or_else(|| parse_error(line, "expected `key: value`"))?;
        let (key, value) = (key.trim(), value.trim());
        let key = *KEYS
            .iter()
            .find(|k| **k == key)
            .ok_or_else(|| parse_error(line, format!("unknown key `{key}`")))?;
        if seen.contains(&key) {
            return Err(parse_error(line, format!("duplicate key `{key}`")));
        }
        seen.push(key);
        match key {
            "kind" => {
                kind = Some(match value {
                    "lattice" => Kind::Lattice,
                    "srl" => Kind::Srl,
                    "sna" => Kind::Sna,
                    other => return Err(parse_error(line, format!("unknown kind `{other}`"))),
                })
            }
            "elements" => file.elements = Some(names(line, value)?),
            "covers" => file.covers = Some(pairs(line, value)?),
            "d_set" => file.d_set = Some(names(line, value)?),
            "twist_of" => {
                if value.is_empty() {
                    return Err(parse_error(line, "`twist_of` needs a path"));
                }
                file.twist_of = Some(value.to_string());
            }
            "filter" => file.filter = Some(names(line, value)?),
            "neg" => file.neg = Some(names(line, value)?),
            "imp" => {
                if !value.is_empty() {
                    return Err(parse_error(
                        line,
                        "`imp:` takes its rows on the following indented lines",
                    ));
                }
                file.imp = Some(Vec::new());
                in_imp = true;
            }
            _ => unreachable!("key list is exhaustive"),
        }
    }
    file.kind = kind.ok_or_else(|| parse_error(0, "missing `kind`"))?;
    Ok(file)
}

/// Renders the text format. Names are assumed valid.
pub fn render_text(f: &AlgebraFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", f.kind.as_str());
    let list = |v: &[String]| v.join(" ");
    let mut line = |key: &str, value: String| {
        if value.is_empty() {
            let _ = writeln!(out, "{key}:");
        } else {
            let _ = writeln!(out, "{key}: {value}");
        }
    };
    if let Some(e) = &f.elements {
        line("elements", list(e));
    }
    if let Some(c) = &f.covers {
        line(
            "covers",
            c.iter().map(|(a, b)| format!("{a} {b}")).collect::<Vec<_>>().join("; "),
        );
    }
    if let Some(d) = &f.d_set {
        line("d_set", list(d));
    }
    if let Some(t) = &f.twist_of {
        line("twist_of", t.clone());
    }
    if let Some(x) = &f.filter {
        line("filter", list(x));
    }
    if let Some(n) = &f.neg {
        line("neg", list(n));
    }
    if let Some(rows) = &f.imp {
        let _ = writeln!(out, "imp:");
        let empty = Vec::new();
        let elements = f.elements.as_ref().unwrap_or(&empty);
        for (name, row) in elements.iter().zip(rows) {
            if row.is_empty() {
                let _ = writeln!(out, "  {name}:");
            } else {
                let _ = writeln!(out, "  {name}: {}", list(row));
            }
        }
    }
    out
}

/// Either format, told apart by a leading `{`.
pub fn parse_str(src: &str) -> Result<AlgebraFile, InputError> {
    if src.trim_start().starts_with('{') {
        let file: AlgebraFile = serde_json::from_str(src)?;
        for name in file.elements.iter().flatten() {
            check_name(name).map_err(|m| invalid("elements", m))?;
        }
        Ok(file)
    } else {
        parse_text(src)
    }
}

pub fn render_json(f: &AlgebraFile) -> String {
    serde_json::to_string_pretty(f).expect("plain data serializes") + "\n"
}

/// A validated algebra.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Loaded {
    Lattice(FiniteLattice),
    Srl(Srl),
    Sna {
        algebra: SnaAlgebra,
        /// Present when the file was a `twist_of` directive.
        twist: Option<TwistAlgebra>,
    },
}

impl Loaded {
    pub fn lattice(&self) -> &FiniteLattice {
        match self {
            Loaded::Lattice(l) => l,
            Loaded::Srl(s) => s.lattice(),
            Loaded::Sna { algebra, .. } => algebra.lattice(),
        }
    }
}

fn require<'a, T>(field: &'a Option<T>, name: &str, kind: Kind) -> Result<&'a T, InputError> {
    field
        .as_ref()
        .ok_or_else(|| invalid(name, format!("required for kind {}", kind.as_str())))
}

fn forbid<T>(field: &Option<T>, name: &str, why: &str) -> Result<(), InputError> {
    match field {
        Some(_) => Err(invalid(name, format!("not allowed {why}"))),
        None => Ok(()),
    }
}

fn lattice_of(f: &AlgebraFile) -> Result<FiniteLattice, InputError> {
    let elements = require(&f.elements, "elements", f.kind)?;
    let covers = require(&f.covers, "covers", f.kind)?;
    let elements: Vec<&str> = elements.iter().map(String::as_str).collect();
    let covers: Vec<(&str, &str)> = covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    build_lattice(&elements, &covers).map_err(|e| invalid("covers", e))
}

fn indices(l: &FiniteLattice, field: &str, names: &[String]) -> Result<Vec<Elem>, InputError> {
    names.iter().map(|n| l.elem(n).map_err(|e| invalid(field, e))).collect()
}

/// Validates a parsed file. Relative `twist_of` paths are resolved against
/// `base`.
pub fn validate(f: &AlgebraFile, base: &Path) -> Result<Loaded, InputError> {
    match f.kind {
        Kind::Lattice | Kind::Srl => {
            forbid(&f.twist_of, "twist_of", "for lattices and sr-lattices")?;
            forbid(&f.filter, "filter", "for lattices and sr-lattices")?;
            forbid(&f.neg, "neg", "for lattices and sr-lattices")?;
            forbid(&f.imp, "imp", "for lattices and sr-lattices")?;
            let l = lattice_of(f)?;
            if f.kind == Kind::Lattice {
                forbid(&f.d_set, "d_set", "for kind lattice")?;
                return Ok(Loaded::Lattice(l));
            }
            let d = l
                .subset(require(&f.d_set, "d_set", f.kind)?)
                .map_err(|e| invalid("d_set", e))?;
            make_srl(l, d).map(Loaded::Srl).map_err(|e| invalid("d_set", e))
        }
        Kind::Sna => match &f.twist_of {
            Some(path) => {
                for (present, name) in [
                    (f.elements.is_some(), "elements"),
                    (f.covers.is_some(), "covers"),
                    (f.d_set.is_some(), "d_set"),
                    (f.neg.is_some(), "neg"),
                    (f.imp.is_some(), "imp"),
                ] {
                    if present {
                        return Err(invalid(name, "not allowed together with twist_of"));
                    }
                }
                let target = base.join(path);
                let Loaded::Srl(s) = load(&target)? else {
                    return Err(invalid("twist_of", format!("{} is not an srl file", target.display())));
                };
                let twist = match &f.filter {
                    None => twist_full(&s),
                    Some(members) => {
                        let members = s.lattice().subset(members).map_err(|e| invalid("filter", e))?;
                        twist_filtered(&s, &members)
                    }
                }
                .map_err(|e| invalid("twist_of", e))?;
                Ok(Loaded::Sna {
                    algebra: twist.algebra().clone(),
                    twist: Some(twist),
                })
            }
            None => {
                forbid(&f.filter, "filter", "without twist_of")?;
                forbid(&f.d_set, "d_set", "for kind sna")?;
                let l = lattice_of(f)?;
                let n = l.size();
                let neg = indices(&l, "neg", require(&f.neg, "neg", f.kind)?)?;
                let rows = require(&f.imp, "imp", f.kind)?;
                if rows.len() != n {
                    return Err(invalid("imp", format!("expected {n} rows, found {}", rows.len())));
                }
                let mut imp = Vec::with_capacity(n * n);
                for row in rows {
                    imp.extend(indices(&l, "imp", row)?);
                }
                let algebra = SnaAlgebra::new(l, imp, neg).map_err(|e| invalid("imp", e))?;
                Ok(Loaded::Sna { algebra, twist: None })
            }
        },
    }
}

pub fn read_file(path: &Path) -> Result<AlgebraFile, InputError> {
    let src = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_str(&src)
}

/// Reads, parses and validates.
pub fn load(path: &Path) -> Result<Loaded, InputError> {
    let file = read_file(path)?;
    validate(&file, path.parent().unwrap_or(Path::new(".")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use snalab_core::corpus;

    const S1: &str = "kind: srl\nelements: 0 a b 1\ncovers: 0 a; 0 b; a 1; b 1\nd_set: 0 1\n";

    #[test]
    fn parses_s1() {
        let f = parse_text(S1).unwrap();
        let Loaded::Srl(s) = validate(&f, Path::new(".")).unwrap() else {
            panic!("not an srl");
        };
        assert_eq!(s.name(s.imp(1, 0)), "0");
        assert_eq!(render_text(&f), S1);
    }

    #[test]
    fn rejects_cycles_and_unknown_keys() {
        let cyclic = parse_text("kind: lattice\nelements: 0 a 1\ncovers: 0 a; a 1; 1 0\n").unwrap();
        let err = validate(&cyclic, Path::new(".")).unwrap_err();
        assert!(err.to_string().contains("cycle"), "{err}");
        let err = parse_text("kind: srl\ncolour: red\n").unwrap_err();
        assert!(matches!(err, InputError::Parse { line: 2, .. }), "{err}");
        let err = parse_str(r#"{"kind": "srl", "colour": "red"}"#).unwrap_err();
        assert!(matches!(err, InputError::Json(_)));
    }

    #[test]
    fn rows_must_follow_element_order() {
        let src = "kind: sna\nelements: 0 1\ncovers: 0 1\nneg: 1 0\nimp:\n  1: 0 1\n  0: 1 1\n";
        assert!(matches!(parse_text(src), Err(InputError::Parse { line: 6, .. })));
    }

    #[test]
    fn corpus_round_trips() {
        let mut files: Vec<AlgebraFile> = corpus::srls().iter().map(|(_, s)| AlgebraFile::from_srl(s)).collect();
        files.extend(corpus::snas().iter().map(|e| AlgebraFile::from_sna(&e.algebra)));
        for f in files {
            let text = render_text(&f);
            assert_eq!(parse_str(&text).unwrap(), f, "{text}");
            assert_eq!(parse_str(&render_json(&f)).unwrap(), f);
            let loaded = validate(&f, Path::new(".")).unwrap();
            let again = match &loaded {
                Loaded::Lattice(l) => AlgebraFile::from_lattice(l),
                Loaded::Srl(s) => AlgebraFile::from_srl(s),
                Loaded::Sna { algebra, .. } => AlgebraFile::from_sna(algebra),
            };
            assert_eq!(again, f);
        }
    }

    fn arb_name() -> impl Strategy<Value = String> {
        "[a-z0-9(),<>|\\[\\]]{1,4}"
    }

    fn arb_file() -> impl Strategy<Value = AlgebraFile> {
        let names = || prop::collection::vec(arb_name(), 0..5);
        (
            prop_oneof![Just(Kind::Lattice), Just(Kind::Srl), Just(Kind::Sna)],
            prop::option::of(prop::collection::vec(arb_name(), 1..5)),
            prop::option::of(prop::collection::vec((arb_name(), arb_name()), 0..4)),
            prop::option::of(names()),
            prop::option::of("[a-z_./]{1,12}"),
            prop::option::of(names()),
            prop::option::of(names()),
            any::<bool>(),
        )
            .prop_flat_map(|(kind, elements, covers, d_set, twist_of, filter, neg, with_imp)| {
                let rows = elements.as_ref().map_or(0, Vec::len);
                let imp = if with_imp && elements.is_some() {
                    prop::option::of(prop::collection::vec(
                        prop::collection::vec(arb_name(), 0..4),
                        rows..=rows,
                    ))
                    .boxed()
                } else {
                    Just(None).boxed()
                };
                imp.prop_map(move |imp| AlgebraFile {
                    kind,
                    elements: elements.clone(),
                    covers: covers.clone(),
                    d_set: d_set.clone(),
                    twist_of: twist_of.clone(),
                    filter: filter.clone(),
                    neg: neg.clone(),
                    imp,
                })
            })
    }

    proptest! {
        #[test]
        fn text_round_trip(f in arb_file()) {
            prop_assert_eq!(parse_str(&render_text(&f)).unwrap(), f);
        }

        #[test]
        fn json_round_trip(f in arb_file()) {
            prop_assert_eq!(parse_str(&render_json(&f)).unwrap(), f);
        }
    }
}
