//! Text formats: poset files and facet lists.
//!
//! A poset file is line based. `#` starts a comment. A line `key: rest`
//! opens a section; lines without a key continue the current one.
//!
//! ```text
//! elements: 0^ a b 1^
//! covers: 0^<a a<1^ 0^<b b<1^
//! equiv: classes
//! class: [0^,a] [b,1^]
//! ideal: [0^,a]
//! ```
//!
//! `equiv:` is `trivial` (default), `semigroup` (then every element needs a
//! `coords:` line `name = 1,0,2`) or `classes` (then `class:` lines group
//! intervals; unlisted intervals are singletons).

use std::fmt;

use crate::algebra::IncidenceAlgebra;
use crate::error::{Error, Result};
use crate::interval::{IntervalEquivalence, RelationKind};
use crate::poset::{Interval, Poset};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivSpec {
    Trivial,
    Semigroup(Vec<Vec<i64>>),
    Classes(Vec<Vec<(String, String)>>),
}

/// A parsed poset file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetFile {
    pub poset: Poset,
    pub equiv: EquivSpec,
    /// Generator intervals of a monomial right ideal, by element names.
    pub ideal: Option<Vec<(String, String)>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Elements,
    Covers,
    Equiv,
    Class,
    Coords,
    Ideal,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace- or comma-separated tokens with their 1-based columns.
fn tokens(text: &str, offset: usize, separators: &[char]) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        let sep = ch.is_whitespace() || separators.contains(&ch);
        match (sep, start) {
            (true, Some(s)) => {
                out.push((offset + s + 1, text[s..i].to_string()));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((offset + s + 1, text[s..].to_string()));
    }
    out
}

/// Bracketed intervals `[a,b]` with the column of each opening bracket.
fn intervals(text: &str, offset: usize, line: usize) -> Result<Vec<(usize, String, String)>> {
    let mut out = Vec::new();
    let mut rest = text;
    let mut pos = 0;
    loop {
        let trimmed = rest.trim_start();
        pos += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            return Ok(out);
        }
        let column = offset + pos + 1;
        if !rest.starts_with('[') {
            return Err(parse_error(line, column, "expected an interval '[a,b]'"));
        }
        let close = rest
            .find(']')
            .ok_or_else(|| parse_error(line, column, "unterminated interval"))?;
        let inner = &rest[1..close];
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 2 || parts.iter().any(|p| p.is_empty()) {
            return Err(parse_error(line, column, "an interval needs two endpoints '[a,b]'"));
        }
        out.push((column, parts[0].to_string(), parts[1].to_string()));
        pos += close + 1;
        rest = &rest[close + 1..];
        let after = rest.trim_start_matches([' ', '\t']);
        if let Some(r) = after.strip_prefix(',') {
            pos += rest.len() - r.len();
            rest = r;
        }
    }
}

impl PosetFile {
    pub fn parse(text: &str) -> Result<PosetFile> {
        let mut section = Section::None;
        let mut elements: Vec<(usize, usize, String)> = Vec::new();
        let mut covers: Vec<(usize, usize, String, String)> = Vec::new();
        let mut equiv: Option<(usize, usize, String)> = None;
        let mut classes: Vec<Vec<(usize, usize, String, String)>> = Vec::new();
        let mut coords: Vec<(usize, usize, String, Vec<i64>)> = Vec::new();
        let mut ideal: Option<Vec<(usize, usize, String, String)>> = None;

        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let mut body = content;
            let mut offset = 0;
            if let Some(colon) = content.find(':') {
                let key = content[..colon].trim();
                let next = match key {
                    "elements" => Some(Section::Elements),
                    "covers" => Some(Section::Covers),
                    "equiv" => Some(Section::Equiv),
                    "class" => Some(Section::Class),
                    "coords" => Some(Section::Coords),
                    "ideal" => Some(Section::Ideal),
                    _ => None,
                };
                if let Some(next) = next {
                    section = next;
                    body = &content[colon + 1..];
                    offset = colon + 1;
                    match section {
                        Section::Class => classes.push(Vec::new()),
                        Section::Ideal if ideal.is_none() => ideal = Some(Vec::new()),
                        _ => {}
                    }
                } else if !key.contains(char::is_whitespace) && section != Section::Coords {
                    let col = content.len() - content.trim_start().len() + 1;
                    return Err(parse_error(line, col, format!("unknown section '{key}'")));
                }
            }
            match section {
                Section::None => {
                    let col = content.len() - content.trim_start().len() + 1;
                    return Err(parse_error(line, col, "expected a section such as 'elements:'"));
                }
                Section::Elements => {
                    for (col, name) in tokens(body, offset, &[',']) {
                        elements.push((line, col, name));
                    }
                }
                Section::Covers => {
                    for (col, tok) in tokens(body, offset, &[',']) {
                        let parts: Vec<&str> = tok.split('<').collect();
                        if parts.len() < 2 || parts.iter().any(|p| p.is_empty()) {
                            return Err(parse_error(line, col, format!("expected 'a<b', found '{tok}'")));
                        }
                        for w in parts.windows(2) {
                            covers.push((line, col, w[0].to_string(), w[1].to_string()));
                        }
                    }
                }
                Section::Equiv => {
                    for (col, tok) in tokens(body, offset, &[]) {
                        if equiv.is_some() {
                            return Err(parse_error(line, col, "equiv takes a single value"));
                        }
                        equiv = Some((line, col, tok));
                    }
                }
                Section::Class => {
                    let group = classes.last_mut().expect("opened by the key");
                    for (col, lo, hi) in intervals(body, offset, line)? {
                        group.push((line, col, lo, hi));
                    }
                }
                Section::Ideal => {
                    let gens = ideal.as_mut().expect("opened by the key");
                    for (col, lo, hi) in intervals(body, offset, line)? {
                        gens.push((line, col, lo, hi));
                    }
                }
                Section::Coords => {
                    if body.trim().is_empty() {
                        continue;
                    }
                    let col = offset + body.len() - body.trim_start().len() + 1;
                    let (name, values) = body
                        .split_once('=')
                        .ok_or_else(|| parse_error(line, col, "expected 'name = 1,0,2'"))?;
                    let name = name.trim();
                    if name.is_empty() {
                        return Err(parse_error(line, col, "missing element name"));
                    }
                    let eq = body.find('=').expect("split at '='");
                    let values = tokens(values, offset + eq + 1, &[','])
                        .into_iter()
                        .map(|(c, v)| {
                            v.parse::<i64>()
                                .map_err(|_| parse_error(line, c, format!("'{v}' is not an integer")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    coords.push((line, col, name.to_string(), values));
                }
            }
        }

        if elements.is_empty() {
            return Err(parse_error(1, 1, "no elements listed"));
        }
        let mut names: Vec<String> = Vec::new();
        for (line, col, name) in &elements {
            if names.contains(name) {
                return Err(parse_error(*line, *col, format!("element '{name}' listed twice")));
            }
            names.push(name.clone());
        }
        let lookup = |line: usize, col: usize, name: &str| -> Result<usize> {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| parse_error(line, col, format!("unknown element '{name}'")))
        };
        let mut relations = Vec::new();
        for (line, col, a, b) in &covers {
            relations.push((lookup(*line, *col, a)?, lookup(*line, *col, b)?));
        }
        let poset = Poset::from_index_relations(names.clone(), &relations).map_err(|e| {
            let (line, col) = covers.first().map_or((1, 1), |c| (c.0, c.1));
            parse_error(line, col, e.to_string())
        })?;
        let interval_of = |line: usize, col: usize, lo: &str, hi: &str| -> Result<(String, String)> {
            let (x, y) = (lookup(line, col, lo)?, lookup(line, col, hi)?);
            poset
                .check_interval(x, y)
                .map_err(|e| parse_error(line, col, e.to_string()))?;
            Ok((lo.to_string(), hi.to_string()))
        };

        let kind = equiv.as_ref().map_or("trivial", |e| e.2.as_str());
        let equiv_spec = match kind {
            "trivial" => EquivSpec::Trivial,
            "classes" => {
                let groups = classes
                    .iter()
                    .map(|g| {
                        g.iter()
                            .map(|(line, col, lo, hi)| interval_of(*line, *col, lo, hi))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                EquivSpec::Classes(groups)
            }
            "semigroup" => {
                let mut table: Vec<Option<Vec<i64>>> = vec![None; names.len()];
                let mut dim = None;
                for (line, col, name, values) in &coords {
                    let x = lookup(*line, *col, name)?;
                    if table[x].is_some() {
                        return Err(parse_error(*line, *col, format!("coordinates for '{name}' given twice")));
                    }
                    if *dim.get_or_insert(values.len()) != values.len() {
                        return Err(parse_error(*line, *col, "coordinate vectors differ in length"));
                    }
                    table[x] = Some(values.clone());
                }
                let last = coords.last().map_or(1, |c| c.0);
                let table = table
                    .into_iter()
                    .enumerate()
                    .map(|(x, c)| {
                        c.ok_or_else(|| {
                            parse_error(last, 1, format!("no coordinates for '{}'", names[x]))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                EquivSpec::Semigroup(table)
            }
            other => {
                let (line, col, _) = equiv.as_ref().expect("non-default kind");
                return Err(parse_error(
                    *line,
                    *col,
                    format!("equiv must be trivial, semigroup or classes, not '{other}'"),
                ));
            }
        };
        if kind != "classes" {
            if let Some(g) = classes.iter().flatten().next() {
                return Err(parse_error(g.0, g.1, "class lines need 'equiv: classes'"));
            }
        }
        if kind != "semigroup" {
            if let Some(c) = coords.first() {
                return Err(parse_error(c.0, c.1, "coords need 'equiv: semigroup'"));
            }
        }
        let ideal = ideal
            .map(|gens| {
                gens.iter()
                    .map(|(line, col, lo, hi)| interval_of(*line, *col, lo, hi))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(PosetFile {
            poset,
            equiv: equiv_spec,
            ideal,
        })
    }

    pub fn from_poset(poset: Poset) -> Self {
        PosetFile {
            poset,
            equiv: EquivSpec::Trivial,
            ideal: None,
        }
    }

    pub fn relation(&self) -> Result<IntervalEquivalence> {
        match &self.equiv {
            EquivSpec::Trivial => Ok(IntervalEquivalence::trivial(&self.poset)),
            EquivSpec::Semigroup(coords) => IntervalEquivalence::semigroup(&self.poset, coords.clone()),
            EquivSpec::Classes(groups) => {
                let groups = groups
                    .iter()
                    .map(|g| {
                        g.iter()
                            .map(|(lo, hi)| {
                                Ok(Interval::new(self.poset.index_of(lo)?, self.poset.index_of(hi)?))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                IntervalEquivalence::from_class_list(&self.poset, &groups)
            }
        }
    }

    /// The algebra of the file's relation: a semigroup relation failing only
    /// concatenation is accepted as a window of its ambient semigroup.
    pub fn algebra(&self) -> Result<IncidenceAlgebra> {
        let rel = self.relation()?;
        if rel.kind() == RelationKind::Semigroup {
            match IncidenceAlgebra::new(rel.clone()) {
                Err(Error::AxiomViolation(_)) => IncidenceAlgebra::semigroup_window(rel),
                other => other,
            }
        } else {
            IncidenceAlgebra::new(rel)
        }
    }

    /// Class ids of the `ideal:` generators.
    pub fn ideal_generators(&self, algebra: &IncidenceAlgebra) -> Result<Option<Vec<usize>>> {
        self.ideal
            .as_ref()
            .map(|gens| {
                gens.iter()
                    .map(|(lo, hi)| algebra.relation().class_by_names(lo, hi))
                    .collect()
            })
            .transpose()
    }
}

impl fmt::Display for PosetFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.poset;
        writeln!(f, "elements: {}", p.names().join(" "))?;
        let covers: Vec<String> = p
            .cover_relations()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", p.name(a), p.name(b)))
            .collect();
        if covers.is_empty() {
            writeln!(f, "covers:")?;
        } else {
            writeln!(f, "covers: {}", covers.join(" "))?;
        }
        let show = |v: &[(String, String)]| -> String {
            v.iter().map(|(a, b)| format!("[{a},{b}]")).collect::<Vec<_>>().join(" ")
        };
        match &self.equiv {
            EquivSpec::Trivial => writeln!(f, "equiv: trivial")?,
            EquivSpec::Classes(groups) => {
                writeln!(f, "equiv: classes")?;
                for g in groups {
                    writeln!(f, "class: {}", show(g))?;
                }
            }
            EquivSpec::Semigroup(coords) => {
                writeln!(f, "equiv: semigroup")?;
                writeln!(f, "coords:")?;
                for (name, c) in p.names().iter().zip(coords) {
                    let c: Vec<String> = c.iter().map(i64::to_string).collect();
                    writeln!(f, "  {name} = {}", c.join(","))?;
                }
            }
        }
        if let Some(gens) = &self.ideal {
            writeln!(f, "ideal: {}", show(gens))?;
        }
        Ok(())
    }
}

/// Parses `1 2; 1 3; 2 3`. The empty string is the void complex and `{}`
/// denotes the empty face. With `vertices = Some(n)` the universe is
/// `1..=n` and labels must lie in it; otherwise the universe is the set of
/// labels used, numerically sorted when all are integers.
pub fn parse_facet_list(text: &str, vertices: Option<usize>) -> Result<SimplicialComplex> {
    let mut faces: Vec<Vec<(usize, String)>> = Vec::new();
    if !text.trim().is_empty() {
        let mut start = 0;
        let pieces: Vec<&str> = text.split(';').collect();
        let last = pieces.len() - 1;
        for (k, piece) in pieces.into_iter().enumerate() {
            let toks = tokens(piece, start, &[]);
            start += piece.len() + 1;
            if toks.is_empty() {
                if k == last {
                    continue;
                }
                return Err(parse_error(1, start - piece.len() - 1 + 1, "empty face; write {} for the empty face"));
            }
            if toks.len() == 1 && toks[0].1 == "{}" {
                faces.push(Vec::new());
                continue;
            }
            if let Some((col, _)) = toks.iter().find(|t| t.1.contains(['{', '}'])) {
                return Err(parse_error(1, *col, "braces may only appear as '{}' on their own"));
            }
            faces.push(toks);
        }
    }
    let universe: Vec<String> = match vertices {
        Some(n) => (1..=n).map(|i| i.to_string()).collect(),
        None => {
            let mut labels: Vec<String> = faces.iter().flatten().map(|t| t.1.clone()).collect();
            labels.sort();
            labels.dedup();
            if labels.iter().all(|l| l.parse::<u64>().is_ok()) {
                labels.sort_by_key(|l| l.parse::<u64>().expect("checked"));
            }
            labels
        }
    };
    let faces = faces
        .into_iter()
        .map(|face| {
            face.into_iter()
                .map(|(col, label)| {
                    universe.iter().position(|u| *u == label).ok_or_else(|| {
                        parse_error(1, col, format!("vertex '{label}' is not in 1..={}", universe.len()))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialComplex::new(universe, faces))
}
