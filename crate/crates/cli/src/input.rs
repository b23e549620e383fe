//! Loading fixture files by extension.

use std::fs;
use std::path::Path;

use deltamat::format::{self, MatrixFile};
use deltamat::{Error, Graph, Matroid, SetSystem, SquareMatrix};

/// What a file described, before it is viewed as a set system or matroid.
pub enum Input {
    Sets(SetSystem),
    Matroid(Matroid),
    Matrix(SquareMatrix),
    Graph(Graph),
}

#[derive(Debug)]
pub struct LoadError(pub String);

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn load(path: &Path) -> Result<Input, LoadError> {
    let text = fs::read_to_string(path).map_err(|e| LoadError(format!("{}: {e}", path.display())))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let wrap = |e: Error| LoadError(format!("{}: {e}", path.display()));
    match ext {
        "ss" => format::parse_set_system(&text).map(Input::Sets).map_err(wrap),
        "mat" => format::parse_matroid(&text).map(Input::Matroid).map_err(wrap),
        "g" => format::parse_multigraph(&text).and_then(|g| g.matroid()).map(Input::Matroid).map_err(wrap),
        "gr" => format::parse_graph(&text).map(Input::Graph).map_err(wrap),
        "m2" | "m4" => match format::parse_matrix(&text).map_err(wrap)? {
            MatrixFile::Square(a) => Ok(Input::Matrix(a)),
            MatrixFile::Rect(b) => Ok(Input::Matroid(Matroid::column_matroid(&b))),
        },
        _ => Err(LoadError(format!("{}: unknown extension `{ext}` (expected .ss, .mat, .g, .gr, .m2 or .m4)", path.display()))),
    }
}

impl Input {
    /// The set system: members, bases, M_A or M_G.
    pub fn set_system(&self) -> SetSystem {
        match self {
            Input::Sets(s) => s.clone(),
            Input::Matroid(m) => m.set_system().clone(),
            Input::Matrix(a) => a.delta_matroid(),
            Input::Graph(g) => g.delta_matroid(),
        }
    }

    /// A matroid, when the family is a valid basis system.
    pub fn matroid(&self) -> Result<Matroid, Error> {
        match self {
            Input::Matroid(m) => Ok(m.clone()),
            _ => Matroid::from_bases(self.set_system()),
        }
    }
}
