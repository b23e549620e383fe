//! Plain-text file formats. Tokens are whitespace-separated and `#` starts a
//! comment running to the end of the line.
//!
//! ```text
//! # .m2 / .m4                # .ss            # .mat          # .g                 # .gr
//! field gf4                  elements 1 2 3   elements a b c  vertices u v w       vertices 1 2 3
//! elements 1 2 3             set -            basis a b       edge a u v           edge 1 2
//! row 1 0 1 w                set 1 2          basis a c       edge b v v           loop 3
//! ```
//!
//! A matrix whose row labels are a permutation of its elements is square;
//! any other labelling gives a representation with those row names.

use crate::bits::{self, Mask};
use crate::error::{parse_err, Error, Result};
use crate::field::{Field, Gf4};
use crate::graph::Graph;
use crate::ground::Ground;
use crate::matrix::{RectMatrix, SquareMatrix};
use crate::matroid::Matroid;
use crate::setsys::SetSystem;
use crate::vector::PackedVec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixFile {
    Square(SquareMatrix),
    Rect(RectMatrix),
}

/// A multigraph with named edges; a loop has equal ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, String)>,
}

impl Multigraph {
    /// The cycle matroid, with the incidence matrix as representation.
    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::graphic(&self.vertices, &self.edges)
    }
}

struct Line<'a> {
    no: usize,
    key: &'a str,
    args: Vec<&'a str>,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = body.split_whitespace();
        let key = toks.next()?;
        Some(Line { no: i + 1, key, args: toks.collect() })
    })
}

/// Reads the single header line `key`, which must precede everything else.
fn header<'a>(it: &mut impl Iterator<Item = Line<'a>>, key: &str) -> Result<Line<'a>> {
    match it.next() {
        Some(l) if l.key == key => Ok(l),
        Some(l) => parse_err(l.no, format!("expected `{key}`, found `{}`", l.key)),
        None => parse_err(0, format!("missing `{key}` line")),
    }
}

fn ground_from(l: &Line) -> Result<Ground> {
    Ground::new(l.args.iter().copied()).or_else(|e| parse_err(l.no, e.to_string()))
}

/// A member line's labels; `-` alone is the empty set.
fn member(ground: &Ground, l: &Line) -> Result<Mask> {
    if l.args == ["-"] {
        return Ok(0);
    }
    let mut m = 0;
    for a in &l.args {
        let i = ground.index_of(a).or_else(|e| parse_err(l.no, e.to_string()))?;
        if bits::contains(m, i) {
            return parse_err(l.no, format!("element `{a}` repeated"));
        }
        m |= bits::bit(i);
    }
    Ok(m)
}

fn write_members(ground: &Ground, key: &str, family: &[Mask]) -> String {
    let mut out = format!("elements {}\n", ground.labels().join(" "));
    for &m in family {
        let labels = ground.labels_in(m);
        let body = if labels.is_empty() { "-".to_string() } else { labels.join(" ") };
        out.push_str(&format!("{key} {body}\n"));
    }
    out
}

fn parse_members(text: &str, key: &str) -> Result<SetSystem> {
    let mut it = lines(text);
    let ground = ground_from(&header(&mut it, "elements")?)?;
    let mut family = Vec::new();
    for l in it {
        if l.key != key {
            return parse_err(l.no, format!("expected `{key}`, found `{}`", l.key));
        }
        family.push(member(&ground, &l)?);
    }
    SetSystem::new(ground, family)
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    parse_members(text, "set")
}

pub fn write_set_system(m: &SetSystem) -> String {
    write_members(m.ground(), "set", m.family())
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    Matroid::from_bases(parse_members(text, "basis")?)
}

pub fn write_matroid(m: &Matroid) -> String {
    write_members(m.ground(), "basis", m.bases())
}

pub fn parse_matrix(text: &str) -> Result<MatrixFile> {
    let mut it = lines(text);
    let fl = header(&mut it, "field")?;
    let field: Field = match fl.args.as_slice() {
        [f] => f.parse().or_else(|e: String| parse_err(fl.no, e))?,
        _ => return parse_err(fl.no, "expected `field gf2` or `field gf4`"),
    };
    let ground = ground_from(&header(&mut it, "elements")?)?;
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for l in it {
        if l.key != "row" {
            return parse_err(l.no, format!("expected `row`, found `{}`", l.key));
        }
        let Some((label, toks)) = l.args.split_first() else {
            return parse_err(l.no, "row without a label");
        };
        if toks.len() != ground.len() {
            return parse_err(l.no, format!("row has {} entries, expected {}", toks.len(), ground.len()));
        }
        let mut row = PackedVec::ZERO;
        for (j, t) in toks.iter().enumerate() {
            let x: Gf4 = t.parse().or_else(|e: String| parse_err(l.no, e))?;
            if !field.contains(x) {
                return parse_err(l.no, format!("entry `{t}` is not in {field}"));
            }
            row.set(j, x);
        }
        if labels.contains(&label.to_string()) {
            return parse_err(l.no, format!("row `{label}` repeated"));
        }
        labels.push(label.to_string());
        rows.push(row);
    }
    let square = labels.len() == ground.len() && labels.iter().all(|l| ground.index_of(l).is_ok());
    if square {
        let mut ordered = vec![PackedVec::ZERO; ground.len()];
        for (l, r) in labels.iter().zip(rows) {
            ordered[ground.index_of(l)?] = r;
        }
        Ok(MatrixFile::Square(SquareMatrix::new(field, ground, ordered)?))
    } else {
        Ok(MatrixFile::Rect(RectMatrix::new(field, labels, ground, rows)?))
    }
}

fn write_rows(field: Field, ground: &Ground, rows: impl Iterator<Item = (String, PackedVec)>) -> String {
    let mut out = format!("field {field}\nelements {}\n", ground.labels().join(" "));
    for (l, r) in rows {
        let toks: Vec<String> = (0..ground.len()).map(|j| r.get(j).to_string()).collect();
        out.push_str(&format!("row {l} {}\n", toks.join(" ")));
    }
    out
}

pub fn write_square(a: &SquareMatrix) -> String {
    let g = a.ground();
    write_rows(a.field(), g, g.labels().iter().cloned().zip(a.rows().iter().copied()))
}

pub fn write_rect(a: &RectMatrix) -> String {
    write_rows(a.field(), a.ground(), a.row_labels().iter().cloned().zip(a.rows().iter().copied()))
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let mut it = lines(text);
    let vl = header(&mut it, "vertices")?;
    let vg = ground_from(&vl)?;
    let mut edges = Vec::new();
    let mut seen = Vec::new();
    for l in it {
        match (l.key, l.args.as_slice()) {
            ("edge", [e, u, v]) => {
                for x in [u, v] {
                    vg.index_of(x).or_else(|err| parse_err(l.no, err.to_string()))?;
                }
                if seen.contains(e) {
                    return parse_err(l.no, format!("edge `{e}` repeated"));
                }
                seen.push(*e);
                edges.push((e.to_string(), u.to_string(), v.to_string()));
            }
            ("edge", _) => return parse_err(l.no, "expected `edge <label> <u> <v>`"),
            (k, _) => return parse_err(l.no, format!("expected `edge`, found `{k}`")),
        }
    }
    Ok(Multigraph { vertices: vg.labels().to_vec(), edges })
}

pub fn write_multigraph(g: &Multigraph) -> String {
    let mut out = format!("vertices {}\n", g.vertices.join(" "));
    for (e, u, v) in &g.edges {
        out.push_str(&format!("edge {e} {u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let vertices = ground_from(&header(&mut it, "vertices")?)?;
    let mut edges = Vec::new();
    let mut loops = 0;
    for l in it {
        let idx = |x: &str| vertices.index_of(x).or_else(|e| parse_err(l.no, e.to_string()));
        match (l.key, l.args.as_slice()) {
            ("edge", [u, v]) => {
                let (a, b) = (idx(u)?, idx(v)?);
                if a == b {
                    return parse_err(l.no, "use `loop` for a loop");
                }
                if edges.contains(&(a, b)) || edges.contains(&(b, a)) {
                    return parse_err(l.no, format!("edge {{{u} {v}}} repeated"));
                }
                edges.push((a, b));
            }
            ("loop", [u]) => loops |= bits::bit(idx(u)?),
            ("edge", _) => return parse_err(l.no, "expected `edge <u> <v>`"),
            ("loop", _) => return parse_err(l.no, "expected `loop <u>`"),
            (k, _) => return parse_err(l.no, format!("expected `edge` or `loop`, found `{k}`")),
        }
    }
    Graph::from_edges(vertices, &edges, loops)
}

pub fn write_graph(g: &Graph) -> String {
    g.to_string()
}

/// Parses `"1 2 3"` or `"1,2,3"` into a mask; `-` or an empty string is ∅.
pub fn parse_subset(ground: &Ground, text: &str) -> Result<Mask> {
    let labels: Vec<&str> = text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty() && *s != "-").collect();
    let mut m = 0;
    for l in labels {
        let i = ground.index_of(l)?;
        if bits::contains(m, i) {
            return Err(Error::DuplicateElement(l.to_string()));
        }
        m |= bits::bit(i);
    }
    Ok(m)
}
