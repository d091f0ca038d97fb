//! Plain-text formats for algebras and bundles.
//!
//! An algebra file:
//!
//! ```text
//! # comments start with '#'
//! format 1
//! field Q            # or: field GF 5
//! dim 2
//! b 1 2 1 1          # [e1, e2] = 1·e1
//! t 1 2 1 2 -1       # ⟦e1, e2, e1⟧ = −1·e2
//! ```
//!
//! Indices are 1-based. A binary entry also fixes its antisymmetric partner, and so does a
//! ternary entry in its first two slots; writing both orientations is allowed when they agree.
//!
//! A bundle file holds named sections `algebra g` and `algebra h` (each with its own `dim`, `b`
//! and `t` lines), an optional `repdim m` for a bare representation space, action entries
//! `rho i a b c`, `mu i j a b c`, `psi i a b c`, `nu i j a b c` (entry `(a, b)` of the matrix of
//! the action of the basis element(s)), and dense maps `map NAME rows cols` followed by `rows`
//! lines `row c1 c2 …`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::algebra::{BinaryBracket, LieYamagutiAlgebra, TernaryBracket};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;
use crate::matched_pair::MatchedPair;
use crate::representation::Representation;

pub const FORMAT_VERSION: u32 = 1;

fn at(line: usize, message: impl Into<String>) -> Error {
    Error::ParseAt { line, message: message.into() }
}

/// Sparse coefficients keyed by 0-based index tuples, remembering where each was given.
#[derive(Default)]
struct Entries {
    values: HashMap<Vec<usize>, Scalar>,
    given: HashMap<Vec<usize>, usize>,
}

impl Entries {
    /// Sets `key` and fills its antisymmetric `partner` with the negated value. Giving a key
    /// twice is an error; a partner given explicitly must agree with the completion.
    fn set(&mut self, line: usize, key: Vec<usize>, value: Scalar, partner: Vec<usize>) -> Result<()> {
        if let Some(first) = self.given.get(&key) {
            return Err(at(line, format!("duplicate entry, first given on line {first}")));
        }
        if partner == key {
            if !value.is_zero() {
                return Err(at(line, "entry with a repeated antisymmetric index must be zero"));
            }
        } else if let Some(existing) = self.values.get(&key) {
            if existing != &value {
                let first = self.given[&partner];
                return Err(at(
                    line,
                    format!("inconsistent with the antisymmetric entry on line {first}: expected {existing}"),
                ));
            }
        } else {
            self.values.insert(partner, -value.clone());
            self.values.insert(key.clone(), value);
        }
        self.given.insert(key, line);
        Ok(())
    }

    fn get(&self, key: &[usize], field: Field) -> Scalar {
        self.values.get(key).cloned().unwrap_or_else(|| field.zero())
    }
}

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        (!words.is_empty()).then_some(Line { number: k + 1, words })
    })
}

fn parse_usize(line: usize, word: &str) -> Result<usize> {
    word.parse::<usize>().map_err(|_| at(line, format!("expected a non-negative integer, got '{word}'")))
}

fn parse_index(line: usize, word: &str, bound: usize) -> Result<usize> {
    let k = parse_usize(line, word)?;
    if k == 0 || k > bound {
        return Err(at(line, format!("index {k} out of range 1..={bound}")));
    }
    Ok(k - 1)
}

fn parse_field(line: &Line) -> Result<Field> {
    match line.words[1..] {
        ["Q"] => Ok(Field::Rational),
        ["GF", p] => {
            let p = p.parse::<u64>().map_err(|_| at(line.number, format!("invalid prime '{p}'")))?;
            Field::prime(p).map_err(|e| at(line.number, e.to_string()))
        }
        _ => Err(at(line.number, "expected 'field Q' or 'field GF p'")),
    }
}

fn expect_arity(line: &Line, arity: usize) -> Result<()> {
    if line.words.len() != arity + 1 {
        return Err(at(
            line.number,
            format!("'{}' takes {arity} arguments, got {}", line.words[0], line.words.len() - 1),
        ));
    }
    Ok(())
}

/// Bracket entries of one algebra section.
struct AlgebraSection {
    dim: Option<(usize, usize)>,
    binary: Entries,
    ternary: Entries,
    start: usize,
}

impl AlgebraSection {
    fn new(start: usize) -> Self {
        AlgebraSection { dim: None, binary: Entries::default(), ternary: Entries::default(), start }
    }

    fn dim(&self, line: usize) -> Result<usize> {
        self.dim.map(|d| d.0).ok_or_else(|| at(line, "bracket entry before 'dim'"))
    }

    /// Handles `dim`, `b` and `t`; returns false for other keywords.
    fn accept(&mut self, field: Option<Field>, line: &Line) -> Result<bool> {
        match line.words[0] {
            "dim" => {
                expect_arity(line, 1)?;
                if let Some((_, first)) = self.dim {
                    return Err(at(line.number, format!("'dim' already given on line {first}")));
                }
                self.dim = Some((parse_usize(line.number, line.words[1])?, line.number));
            }
            "b" => {
                expect_arity(line, 4)?;
                let n = self.dim(line.number)?;
                let f = field.ok_or_else(|| at(line.number, "entry before 'field'"))?;
                let idx: Vec<usize> =
                    line.words[1..4].iter().map(|w| parse_index(line.number, w, n)).collect::<Result<_>>()?;
                let c = f.parse_scalar(line.words[4]).map_err(|e| at(line.number, e.to_string()))?;
                let partner = vec![idx[1], idx[0], idx[2]];
                self.binary.set(line.number, idx, c, partner)?;
            }
            "t" => {
                expect_arity(line, 5)?;
                let n = self.dim(line.number)?;
                let f = field.ok_or_else(|| at(line.number, "entry before 'field'"))?;
                let idx: Vec<usize> =
                    line.words[1..5].iter().map(|w| parse_index(line.number, w, n)).collect::<Result<_>>()?;
                let c = f.parse_scalar(line.words[5]).map_err(|e| at(line.number, e.to_string()))?;
                let partner = vec![idx[1], idx[0], idx[2], idx[3]];
                self.ternary.set(line.number, idx, c, partner)?;
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn finish(&self, field: Field) -> Result<LieYamagutiAlgebra> {
        let n = self.dim.ok_or_else(|| at(self.start, "missing 'dim'"))?.0;
        let mut b = Vec::with_capacity(n * n * n);
        let mut t = Vec::with_capacity(n * n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    b.push(self.binary.get(&[i, j, k], field));
                    for l in 0..n {
                        t.push(self.ternary.get(&[i, j, k, l], field));
                    }
                }
            }
        }
        let binary = BinaryBracket::new(field, n, b).map_err(|e| at(self.start, e.to_string()))?;
        let ternary = TernaryBracket::new(field, n, t).map_err(|e| at(self.start, e.to_string()))?;
        LieYamagutiAlgebra::new(binary, ternary)
    }
}

fn check_format(line: &Line) -> Result<()> {
    expect_arity(line, 1)?;
    match line.words[1].parse::<u32>() {
        Ok(FORMAT_VERSION) => Ok(()),
        _ => Err(at(line.number, format!("unsupported format version '{}'", line.words[1]))),
    }
}

/// Parses an algebra file into an unvalidated candidate.
pub fn parse_algebra(text: &str) -> Result<LieYamagutiAlgebra> {
    let mut field = None;
    let mut section = AlgebraSection::new(1);
    for line in lines(text) {
        match line.words[0] {
            "format" => check_format(&line)?,
            "field" => {
                if field.is_some() {
                    return Err(at(line.number, "'field' given twice"));
                }
                field = Some(parse_field(&line)?);
            }
            _ => {
                if !section.accept(field, &line)? {
                    return Err(at(line.number, format!("unknown keyword '{}'", line.words[0])));
                }
            }
        }
    }
    let field = field.ok_or_else(|| at(1, "missing 'field'"))?;
    section.finish(field)
}

fn write_brackets(out: &mut String, a: &LieYamagutiAlgebra) {
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let c = a.binary().coeff(i, j, k);
                if !c.is_zero() {
                    writeln!(out, "b {} {} {} {c}", i + 1, j + 1, k + 1).unwrap();
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                for l in 0..n {
                    let c = a.ternary().coeff(i, j, k, l);
                    if !c.is_zero() {
                        writeln!(out, "t {} {} {} {} {c}", i + 1, j + 1, k + 1, l + 1).unwrap();
                    }
                }
            }
        }
    }
}

/// Canonical text of an algebra: only the `i < j` orientation, nonzero entries, sorted.
pub fn write_algebra(a: &LieYamagutiAlgebra) -> String {
    let mut out = format!("format {FORMAT_VERSION}\nfield {}\ndim {}\n", a.field(), a.dim());
    write_brackets(&mut out, a);
    out
}

/// The action tensors a bundle may carry, with the number of algebra indices of each.
const ACTIONS: [(&str, usize); 4] = [("rho", 1), ("mu", 2), ("psi", 1), ("nu", 2)];

/// Algebras, actions and maps read from a bundle file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub field: Field,
    pub algebras: BTreeMap<String, LieYamagutiAlgebra>,
    pub repdim: Option<usize>,
    /// Dense action matrices, indexed like [`Representation`]: `i` or `i·n + j`.
    pub actions: BTreeMap<String, Vec<Matrix>>,
    pub maps: BTreeMap<String, Matrix>,
}

struct PendingAction {
    name: String,
    line: usize,
    indices: Vec<String>,
    coeff: Scalar,
}

impl Bundle {
    pub fn algebra(&self, name: &str) -> Result<&LieYamagutiAlgebra> {
        self.algebras.get(name).ok_or_else(|| Error::Parse(format!("bundle has no algebra '{name}'")))
    }

    pub fn map(&self, name: &str) -> Result<&Matrix> {
        self.maps.get(name).ok_or_else(|| Error::Parse(format!("bundle has no map '{name}'")))
    }

    fn action(&self, name: &str, acting: usize, space: usize) -> Vec<Matrix> {
        let arity = ACTIONS.iter().find(|a| a.0 == name).map(|a| a.1).unwrap_or(1);
        self.actions.get(name).cloned().unwrap_or_else(|| {
            vec![Matrix::zeros(self.field, space, space); if arity == 1 { acting } else { acting * acting }]
        })
    }

    /// The representation `(rho, mu)` of `g` on `h`, or on a bare space of dimension `repdim`.
    pub fn representation(&self) -> Result<Representation> {
        let g = self.algebra("g")?.clone();
        let space = match (self.repdim, self.algebras.get("h")) {
            (Some(m), _) => m,
            (None, Some(h)) => h.dim(),
            (None, None) => return Err(Error::Parse("bundle needs 'repdim' or an algebra h".into())),
        };
        let n = g.dim();
        Representation::new(g, space, self.action("rho", n, space), self.action("mu", n, space))
    }

    /// The matched pair with `g` acting on `h` by `(rho, mu)` and `h` on `g` by `(psi, nu)`;
    /// missing actions are zero. The pair is not validated.
    pub fn matched_pair(&self) -> Result<MatchedPair> {
        let g = self.algebra("g")?.clone();
        let h = self.algebra("h")?.clone();
        let (m, n) = (g.dim(), h.dim());
        let on_h = Representation::new(g, n, self.action("rho", m, n), self.action("mu", m, n))?;
        let on_g = Representation::new(h, m, self.action("psi", n, m), self.action("nu", n, m))?;
        MatchedPair::new(on_h, on_g)
    }

    /// A bundle holding the algebras and actions of a matched pair.
    pub fn from_pair(mp: &MatchedPair) -> Bundle {
        let mut algebras = BTreeMap::new();
        algebras.insert("g".to_string(), mp.g().clone());
        algebras.insert("h".to_string(), mp.h().clone());
        let mut actions = BTreeMap::new();
        actions.insert("rho".to_string(), mp.on_h().rho_all().to_vec());
        actions.insert("mu".to_string(), mp.on_h().mu_all().to_vec());
        actions.insert("psi".to_string(), mp.on_g().rho_all().to_vec());
        actions.insert("nu".to_string(), mp.on_g().mu_all().to_vec());
        Bundle { field: mp.field(), algebras, repdim: None, actions, maps: BTreeMap::new() }
    }
}

/// A `map` section being read: name, rows, cols, rows so far, declaring line.
type OpenMap = (String, usize, usize, Vec<Vec<Scalar>>, usize);

/// Parses a bundle file.
pub fn parse_bundle(text: &str) -> Result<Bundle> {
    let mut field = None;
    let mut sections: Vec<(String, AlgebraSection)> = Vec::new();
    let mut repdim: Option<usize> = None;
    let mut pending: Vec<PendingAction> = Vec::new();
    let mut maps: BTreeMap<String, Matrix> = BTreeMap::new();
    let mut open_map: Option<OpenMap> = None;

    let close_map = |open: &mut Option<OpenMap>,
                     maps: &mut BTreeMap<String, Matrix>|
     -> Result<()> {
        if let Some((name, rows, cols, data, line)) = open.take() {
            if data.len() != rows {
                return Err(at(line, format!("map '{name}' declares {rows} rows, found {}", data.len())));
            }
            let f = data.first().and_then(|r| r.first()).map(Scalar::field);
            let field = f.unwrap_or(Field::Rational);
            maps.insert(name, Matrix::from_fn(field, rows, cols, |i, j| data[i][j].clone()));
        }
        Ok(())
    };

    for line in lines(text) {
        if line.words[0] != "row" {
            close_map(&mut open_map, &mut maps)?;
        }
        match line.words[0] {
            "format" => check_format(&line)?,
            "field" => {
                if field.is_some() {
                    return Err(at(line.number, "'field' given twice"));
                }
                field = Some(parse_field(&line)?);
            }
            "algebra" => {
                expect_arity(&line, 1)?;
                let name = line.words[1].to_string();
                if sections.iter().any(|s| s.0 == name) {
                    return Err(at(line.number, format!("algebra '{name}' defined twice")));
                }
                sections.push((name, AlgebraSection::new(line.number)));
            }
            "repdim" => {
                expect_arity(&line, 1)?;
                if repdim.is_some() {
                    return Err(at(line.number, "'repdim' given twice"));
                }
                repdim = Some(parse_usize(line.number, line.words[1])?);
            }
            "map" => {
                expect_arity(&line, 3)?;
                let name = line.words[1].to_string();
                if maps.contains_key(&name) {
                    return Err(at(line.number, format!("map '{name}' defined twice")));
                }
                let rows = parse_usize(line.number, line.words[2])?;
                let cols = parse_usize(line.number, line.words[3])?;
                open_map = Some((name, rows, cols, Vec::new(), line.number));
                if rows == 0 {
                    let f = field.ok_or_else(|| at(line.number, "map before 'field'"))?;
                    let (name, ..) = open_map.take().unwrap();
                    maps.insert(name, Matrix::zeros(f, 0, cols));
                }
            }
            "row" => {
                let f = field.ok_or_else(|| at(line.number, "row before 'field'"))?;
                let Some((name, rows, cols, data, _)) = open_map.as_mut() else {
                    return Err(at(line.number, "'row' outside a map"));
                };
                if line.words.len() - 1 != *cols {
                    return Err(at(line.number, format!("map '{name}' rows need {cols} entries")));
                }
                if data.len() == *rows {
                    return Err(at(line.number, format!("map '{name}' has more than {rows} rows")));
                }
                let row: Vec<Scalar> = line.words[1..]
                    .iter()
                    .map(|w| f.parse_scalar(w).map_err(|e| at(line.number, e.to_string())))
                    .collect::<Result<_>>()?;
                data.push(row);
            }
            word => {
                if let Some(&(name, arity)) = ACTIONS.iter().find(|a| a.0 == word) {
                    expect_arity(&line, arity + 3)?;
                    let f = field.ok_or_else(|| at(line.number, "entry before 'field'"))?;
                    let coeff = f.parse_scalar(line.words[arity + 3]).map_err(|e| at(line.number, e.to_string()))?;
                    pending.push(PendingAction {
                        name: name.to_string(),
                        line: line.number,
                        indices: line.words[1..arity + 3].iter().map(|s| s.to_string()).collect(),
                        coeff,
                    });
                    continue;
                }
                let Some((_, section)) = sections.last_mut() else {
                    return Err(at(line.number, format!("'{word}' outside an algebra section")));
                };
                if !section.accept(field, &line)? {
                    return Err(at(line.number, format!("unknown keyword '{word}'")));
                }
            }
        }
    }
    close_map(&mut open_map, &mut maps)?;
    let field = field.ok_or_else(|| at(1, "missing 'field'"))?;
    let mut algebras = BTreeMap::new();
    for (name, section) in &sections {
        algebras.insert(name.clone(), section.finish(field)?);
    }
    for (name, m) in &maps {
        if m.rows() > 0 && m.field() != field {
            return Err(Error::Parse(format!("map '{name}' is over a different field")));
        }
    }

    // actions: g acts by rho/mu on h (or repdim), h acts by psi/nu on g
    let dim_of = |name: &str| algebras.get(name).map(LieYamagutiAlgebra::dim);
    let mut actions: BTreeMap<String, Vec<Matrix>> = BTreeMap::new();
    let mut seen: HashMap<(String, Vec<usize>), usize> = HashMap::new();
    for p in pending {
        let (acting, space) = if p.name == "rho" || p.name == "mu" {
            (dim_of("g"), repdim.or(dim_of("h")))
        } else {
            (dim_of("h"), dim_of("g"))
        };
        let (Some(acting), Some(space)) = (acting, space) else {
            return Err(at(p.line, format!("'{}' needs the acting algebra and the space acted on", p.name)));
        };
        let arity = p.indices.len() - 2;
        let mut idx = Vec::new();
        for (k, w) in p.indices.iter().enumerate() {
            let bound = if k < arity { acting } else { space };
            idx.push(parse_index(p.line, w, bound)?);
        }
        if let Some(first) = seen.insert((p.name.clone(), idx.clone()), p.line) {
            return Err(at(p.line, format!("duplicate entry, first given on line {first}")));
        }
        let count = if arity == 1 { acting } else { acting * acting };
        let slot = if arity == 1 { idx[0] } else { idx[0] * acting + idx[1] };
        let list = actions.entry(p.name.clone()).or_insert_with(|| vec![Matrix::zeros(field, space, space); count]);
        list[slot].set(idx[arity], idx[arity + 1], p.coeff);
    }
    Ok(Bundle { field, algebras, repdim, actions, maps })
}

/// Canonical text of a bundle.
pub fn write_bundle(bundle: &Bundle) -> String {
    let mut out = format!("format {FORMAT_VERSION}\nfield {}\n", bundle.field);
    for (name, a) in &bundle.algebras {
        writeln!(out, "algebra {name}\ndim {}", a.dim()).unwrap();
        write_brackets(&mut out, a);
    }
    if let Some(m) = bundle.repdim {
        writeln!(out, "repdim {m}").unwrap();
    }
    for (name, arity) in ACTIONS {
        let Some(list) = bundle.actions.get(name) else { continue };
        let acting = if arity == 1 { list.len() } else { (list.len() as f64).sqrt().round() as usize };
        for (slot, m) in list.iter().enumerate() {
            let prefix = if arity == 1 {
                format!("{}", slot + 1)
            } else {
                format!("{} {}", slot / acting + 1, slot % acting + 1)
            };
            for a in 0..m.rows() {
                for b in 0..m.cols() {
                    let c = m.get(a, b);
                    if !c.is_zero() {
                        writeln!(out, "{name} {prefix} {} {} {c}", a + 1, b + 1).unwrap();
                    }
                }
            }
        }
    }
    for (name, m) in &bundle.maps {
        writeln!(out, "map {name} {} {}", m.rows(), m.cols()).unwrap();
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(Scalar::to_string).collect();
            writeln!(out, "row {}", row.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_entry_list_is_the_zero_algebra() {
        let a = parse_algebra("field Q\ndim 2\n").unwrap();
        assert!(a.binary().is_zero() && a.ternary().is_zero());
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn single_entry_with_completion() {
        let a = parse_algebra("format 1\nfield Q\ndim 2\nb 1 2 1 1\n").unwrap();
        assert_eq!(a.binary().coeff(0, 1, 0), &Field::Rational.one());
        assert_eq!(a.binary().coeff(1, 0, 0), &Field::Rational.from_i64(-1));
    }

    #[test]
    fn consistent_orientations_are_accepted() {
        assert!(parse_algebra("field Q\ndim 2\nb 1 2 1 1\nb 2 1 1 -1\n").is_ok());
    }

    #[test]
    fn inconsistent_orientation_is_rejected_with_its_line() {
        let err = parse_algebra("field Q\ndim 2\nb 1 2 1 1\nb 2 1 1 1\n").unwrap_err();
        assert!(matches!(err, Error::ParseAt { line: 4, .. }), "{err}");
    }

    #[test]
    fn duplicate_and_range_errors() {
        let dup = parse_algebra("field Q\ndim 2\nt 1 2 1 1 1\nt 1 2 1 1 1\n").unwrap_err();
        assert!(matches!(dup, Error::ParseAt { line: 4, .. }), "{dup}");
        let range = parse_algebra("field Q\ndim 2\n\n# gap\nb 1 3 1 1\n").unwrap_err();
        assert!(matches!(range, Error::ParseAt { line: 5, .. }), "{range}");
        let diag = parse_algebra("field GF 2\ndim 2\nb 1 1 1 1\n").unwrap_err();
        assert!(matches!(diag, Error::ParseAt { line: 3, .. }), "{diag}");
        let field = parse_algebra("field GF 2\ndim 2\nb 1 2 1 1/2\n").unwrap_err();
        assert!(matches!(field, Error::ParseAt { line: 3, .. }), "{field}");
        assert!(parse_algebra("field GF 4\ndim 1\n").is_err());
        assert!(parse_algebra("dim 1\n").is_err());
        assert!(parse_algebra("field Q\ndim 1\nfrobnicate\n").is_err());
        assert!(parse_algebra("format 2\nfield Q\ndim 1\n").is_err());
    }

    #[test]
    fn bundle_round_trip() {
        let text = "\
format 1
field GF 3
algebra g
dim 2
b 1 2 2 1
algebra h
dim 1
rho 2 1 1 2
psi 1 2 1 1
map r 2 1
row 1
row 2
";
        let b = parse_bundle(text).unwrap();
        assert_eq!(b.algebra("g").unwrap().dim(), 2);
        assert_eq!(b.actions["rho"][1].get(0, 0), &Field::prime(3).unwrap().from_i64(2));
        assert_eq!(b.map("r").unwrap().rows(), 2);
        let canonical = write_bundle(&b);
        assert_eq!(parse_bundle(&canonical).unwrap(), b);
        assert_eq!(write_bundle(&parse_bundle(&canonical).unwrap()), canonical);
        let mp = b.matched_pair().unwrap();
        assert_eq!(mp.on_h().rho(1), &b.actions["rho"][1]);
    }

    #[test]
    fn bundle_errors() {
        assert!(matches!(
            parse_bundle("field Q\nalgebra g\ndim 1\nmap r 2 1\nrow 1\n").unwrap_err(),
            Error::ParseAt { line: 4, .. }
        ));
        assert!(matches!(
            parse_bundle("field Q\nalgebra g\ndim 1\nalgebra h\ndim 1\nrho 1 1 1 1\nrho 1 1 1 2\n").unwrap_err(),
            Error::ParseAt { line: 7, .. }
        ));
        assert!(parse_bundle("field Q\nb 1 2 1 1\n").is_err());
        assert!(parse_bundle("field Q\nalgebra g\ndim 1\nrho 1 1 1 1\n").is_err());
    }

    fn algebra_strategy() -> impl Strategy<Value = LieYamagutiAlgebra> {
        (prop_oneof![Just(Field::Rational), Just(Field::prime(2).unwrap()), Just(Field::prime(5).unwrap())], 0usize..4)
            .prop_flat_map(|(field, n)| {
                let b = proptest::collection::vec(-3i64..4, n * n * n);
                let t = proptest::collection::vec(-3i64..4, n * n * n * n);
                (Just(field), Just(n), b, t)
            })
            .prop_map(|(field, n, b, t)| {
                let binary = BinaryBracket::from_fn(field, n, |i, j| {
                    let v = (0..n)
                        .map(|k| {
                            let (lo, hi) = (i.min(j), i.max(j));
                            let c = if i == j { 0 } else { b[(lo * n + hi) * n + k] };
                            field.from_i64(if i < j { c } else { -c })
                        })
                        .collect();
                    crate::linalg::Vector(v)
                })
                .unwrap();
                let ternary = TernaryBracket::from_fn(field, n, |i, j, k| {
                    let v = (0..n)
                        .map(|l| {
                            let (lo, hi) = (i.min(j), i.max(j));
                            let c = if i == j { 0 } else { t[((lo * n + hi) * n + k) * n + l] };
                            field.from_i64(if i < j { c } else { -c })
                        })
                        .collect();
                    crate::linalg::Vector(v)
                })
                .unwrap();
                LieYamagutiAlgebra::new(binary, ternary).unwrap()
            })
    }

    proptest! {
        #[test]
        fn algebra_round_trip(a in algebra_strategy()) {
            let text = write_algebra(&a);
            let back = parse_algebra(&text).unwrap();
            prop_assert_eq!(back.binary(), a.binary());
            prop_assert_eq!(back.ternary(), a.ternary());
            prop_assert_eq!(write_algebra(&back), text);
        }
    }
}
