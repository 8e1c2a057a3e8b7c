use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// An entry `m(i, j)` of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    /// Whether the pair is joined by an edge of the Coxeter graph (`m >= 3`).
    pub fn is_edge(self) -> bool {
        !matches!(self, Label::Finite(m) if m <= 2)
    }
}

/// The four families with explicit matchings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "B")]
    B,
    #[serde(rename = "tA")]
    TildeA,
    #[serde(rename = "tC")]
    TildeC,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::TildeA, Family::TildeC];

    pub fn graph(self, n: usize) -> Result<CoxeterGraph, Error> {
        match self {
            Family::A => CoxeterGraph::a(n),
            Family::B => CoxeterGraph::b(n),
            Family::TildeA => CoxeterGraph::tilde_a(n),
            Family::TildeC => CoxeterGraph::tilde_c(n),
        }
    }

    /// Smallest `n` for which the family is defined here.
    pub fn min_n(self) -> usize {
        match self {
            Family::A | Family::B => 1,
            Family::TildeA | Family::TildeC => 2,
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(self, Family::TildeA | Family::TildeC)
    }

    /// Label of internal vertex 0 when printing.
    pub fn label_offset(self) -> usize {
        if self.is_affine() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::TildeA => "tA",
            Family::TildeC => "tC",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "tA" => Ok(Family::TildeA),
            "tC" => Ok(Family::TildeC),
            _ => Err(Error::BadParams(format!("unknown family {s:?} (expected A, B, tA or tC)"))),
        }
    }
}

/// A Coxeter graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    n: usize,
    matrix: Vec<Label>,
    adjacency: Vec<u64>,
    family: Option<(Family, usize)>,
}

impl CoxeterGraph {
    /// The graph with no edges (all `m = 2`).
    pub fn discrete(n: usize) -> Result<Self, Error> {
        if n == 0 || n > 63 {
            return Err(Error::BadParams(format!("vertex count {n} outside 1..=63")));
        }
        Ok(CoxeterGraph {
            n,
            matrix: (0..n * n)
                .map(|k| Label::Finite(if k / n == k % n { 1 } else { 2 }))
                .collect(),
            adjacency: vec![0; n],
            family: None,
        })
    }

    pub fn set_label(&mut self, i: usize, j: usize, label: Label) -> Result<(), Error> {
        if i >= self.n || j >= self.n || i == j {
            return Err(Error::GraphFormat(format!("bad edge ({i}, {j})")));
        }
        if let Label::Finite(m) = label {
            if m < 2 {
                return Err(Error::GraphFormat(format!("label {m} on ({i}, {j}) must be >= 2")));
            }
        }
        self.matrix[i * self.n + j] = label;
        self.matrix[j * self.n + i] = label;
        if label.is_edge() {
            self.adjacency[i] |= 1 << j;
            self.adjacency[j] |= 1 << i;
        } else {
            self.adjacency[i] &= !(1 << j);
            self.adjacency[j] &= !(1 << i);
        }
        self.family = None;
        Ok(())
    }

    fn path(n: usize) -> Result<Self, Error> {
        let mut g = Self::discrete(n)?;
        for i in 1..n {
            g.set_label(i - 1, i, Label::Finite(3))?;
        }
        Ok(g)
    }

    /// `A_n`: a path on `n` vertices, printed as `1..n`.
    pub fn a(n: usize) -> Result<Self, Error> {
        let mut g = Self::path(n)?;
        g.family = Some((Family::A, n));
        Ok(g)
    }

    /// `B_n`: a path with the label 4 on the first edge.
    pub fn b(n: usize) -> Result<Self, Error> {
        let mut g = Self::path(n)?;
        if n >= 2 {
            g.set_label(0, 1, Label::Finite(4))?;
        }
        g.family = Some((Family::B, n));
        Ok(g)
    }

    /// `Ã_n`: a cycle on `n + 1` vertices `0..=n`.
    pub fn tilde_a(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::BadParams("tA needs n >= 2".into()));
        }
        let mut g = Self::path(n + 1)?;
        g.set_label(n, 0, Label::Finite(3))?;
        g.family = Some((Family::TildeA, n));
        Ok(g)
    }

    /// `C̃_n`: a path on `0..=n` with label 4 on `{0,1}` and `{n-1,n}`.
    pub fn tilde_c(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::BadParams("tC needs n >= 2".into()));
        }
        let mut g = Self::path(n + 1)?;
        g.set_label(0, 1, Label::Finite(4))?;
        g.set_label(n - 1, n, Label::Finite(4))?;
        g.family = Some((Family::TildeC, n));
        Ok(g)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.matrix[i * self.n + j]
    }

    /// Bitmask of neighbours of `v` in the Coxeter graph.
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    /// `(family, n)` when the graph was built by a family constructor.
    pub fn family(&self) -> Option<(Family, usize)> {
        self.family
    }

    /// Printed name of internal vertex `v`.
    pub fn vertex_label(&self, v: usize) -> usize {
        v + self.family.map_or(0, |(f, _)| f.label_offset())
    }

    /// Parses the JSON edge-list format
    /// `{"vertices": n, "edges": [[i, j, m], ...]}` with 0-based vertices and
    /// `m` an integer or `"inf"`. Unlisted pairs have `m = 2`.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::GraphFormat(e.to_string()))?;
        let mut g = Self::discrete(file.vertices)?;
        for (i, j, m) in file.edges {
            let label = match m {
                EdgeLabel::Int(m) => Label::Finite(
                    u32::try_from(m).map_err(|_| Error::GraphFormat(format!("label {m} too large")))?,
                ),
                EdgeLabel::Word(w) if w == "inf" => Label::Infinite,
                EdgeLabel::Word(w) => {
                    return Err(Error::GraphFormat(format!("label {w:?} is neither an integer nor \"inf\"")))
                }
            };
            g.set_label(i, j, label)?;
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                match self.label(i, j) {
                    Label::Finite(2) => {}
                    Label::Finite(m) => edges.push((i, j, EdgeLabel::Int(m as u64))),
                    Label::Infinite => edges.push((i, j, EdgeLabel::Word("inf".into()))),
                }
            }
        }
        serde_json::to_string(&GraphFile { vertices: self.n, edges }).expect("graph serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: usize,
    #[serde(default)]
    edges: Vec<(usize, usize, EdgeLabel)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EdgeLabel {
    Int(u64),
    Word(String),
}
