//! The right-angled Artin group `KUV_n(c)`: its commutation graph, canonical
//! normal forms of δ-words, and the graph certificates (clique number,
//! induced P3, `F2 × F2` quadruple, dominating vertices).

mod certificates;
mod clique;
mod normal_form;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{Params, Sign};

pub use certificates::{dominating_vertices, f2xf2_witness, is_f2xf2_pattern, is_p3_free, F2xF2, P3Witness};
pub use clique::{clique_number, clique_number_with, is_clique, maximum_clique, maximum_clique_with};
pub use normal_form::normal_form;

/// A generator δ_{i,j,t} without sign: an ordered strand pair and a colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub i: usize,
    pub j: usize,
    pub t: usize,
}

impl Vertex {
    pub fn new(i: usize, j: usize, t: usize) -> Vertex {
        Vertex { i, j, t }
    }

    /// `{i,j} ∩ {k,l} = ∅`; colours are ignored.
    pub fn disjoint(&self, other: &Vertex) -> bool {
        self.i != other.i && self.i != other.j && self.j != other.i && self.j != other.j
    }

    pub fn in_range(&self, params: Params) -> bool {
        self.i != self.j
            && (1..=params.n).contains(&self.i)
            && (1..=params.n).contains(&self.j)
            && (1..=params.c).contains(&self.t)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}.{}.{}", self.i, self.j, self.t)
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A signed generator δ_{i,j,t}^{±1}. Ordered by vertex, then sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Delta {
    pub vertex: Vertex,
    pub sign: Sign,
}

impl Delta {
    pub fn new(i: usize, j: usize, t: usize, sign: Sign) -> Delta {
        Delta { vertex: Vertex::new(i, j, t), sign }
    }

    pub fn pos(i: usize, j: usize, t: usize) -> Delta {
        Delta::new(i, j, t, Sign::Pos)
    }

    pub fn neg(i: usize, j: usize, t: usize) -> Delta {
        Delta::new(i, j, t, Sign::Neg)
    }

    pub fn inverse(self) -> Delta {
        Delta { vertex: self.vertex, sign: self.sign.flip() }
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Vertex { i, j, t } = self.vertex;
        match self.sign {
            Sign::Pos => write!(f, "d{i}.{j}.{t}"),
            Sign::Neg => write!(f, "D{i}.{j}.{t}"),
        }
    }
}

impl FromStr for Delta {
    type Err = Error;

    fn from_str(token: &str) -> Result<Delta> {
        let bad = |reason: &str| Error::Parse { position: 0, token: token.to_string(), reason: reason.to_string() };
        let sign = match token.chars().next() {
            Some('d') => Sign::Pos,
            Some('D') => Sign::Neg,
            _ => return Err(bad("expected d<i>.<j>.<t> or D<i>.<j>.<t>")),
        };
        let parts: Vec<&str> = token[1..].split('.').collect();
        if parts.len() != 3 {
            return Err(bad("expected three dot-separated indices"));
        }
        let mut nums = [0usize; 3];
        for (slot, part) in nums.iter_mut().zip(&parts) {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("indices must be decimal"));
            }
            *slot = part.parse().map_err(|_| bad("index too large"))?;
        }
        Ok(Delta::new(nums[0], nums[1], nums[2], sign))
    }
}

impl Serialize for Delta {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A word in the δ generators of `KUV_n(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaWord {
    params: Params,
    letters: Vec<Delta>,
}

impl DeltaWord {
    pub fn new(params: Params, letters: Vec<Delta>) -> Result<DeltaWord> {
        if let Some(bad) = letters.iter().find(|d| !d.vertex.in_range(params)) {
            return Err(Error::NotAVertex(bad.to_string()));
        }
        Ok(DeltaWord { params, letters })
    }

    pub fn identity(params: Params) -> DeltaWord {
        DeltaWord { params, letters: Vec::new() }
    }

    pub fn parse(text: &str, params: Params) -> Result<DeltaWord> {
        let letters = text
            .split_whitespace()
            .enumerate()
            .map(|(position, tok)| {
                tok.parse::<Delta>().map_err(|e| match e {
                    Error::Parse { token, reason, .. } => Error::Parse { position, token, reason },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DeltaWord::new(params, letters)
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn letters(&self) -> &[Delta] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> DeltaWord {
        DeltaWord { params: self.params, letters: self.letters.iter().rev().map(|d| d.inverse()).collect() }
    }

    pub fn concat(&self, other: &DeltaWord) -> Result<DeltaWord> {
        if self.params != other.params {
            return Err(Error::Mismatch(format!("{} vs {}", self.params, other.params)));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(DeltaWord { params: self.params, letters })
    }

    pub fn tokens(&self) -> Vec<String> {
        self.letters.iter().map(|d| d.to_string()).collect()
    }
}

impl fmt::Display for DeltaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens().join(" "))
    }
}

/// The commutation graph Γ_{n,c}: vertices (i, j, t) with i ≠ j, adjacent
/// exactly when the strand pairs are disjoint.
#[derive(Clone, Debug)]
pub struct CommGraph {
    params: Params,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    adjacency: Vec<Vec<bool>>,
}

impl CommGraph {
    pub fn build(params: Params) -> Result<CommGraph> {
        if params.n < 2 {
            return Err(Error::InvalidParams(format!("the commutation graph needs n >= 2, got n = {}", params.n)));
        }
        let mut vertices = Vec::with_capacity(params.n * (params.n - 1) * params.c);
        for i in 1..=params.n {
            for j in 1..=params.n {
                if i == j {
                    continue;
                }
                for t in 1..=params.c {
                    vertices.push(Vertex::new(i, j, t));
                }
            }
        }
        let index = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let adjacency = vertices.iter().map(|u| vertices.iter().map(|v| u.disjoint(v)).collect()).collect();
        Ok(CommGraph { params, vertices, index, adjacency })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// Vertices in lexicographic (i, j, t) order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().flatten().filter(|&&a| a).count() / 2
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn adjacent_idx(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b]
    }

    /// Panics if either vertex is missing from the graph.
    pub fn adjacent(&self, a: &Vertex, b: &Vertex) -> bool {
        self.adjacency[self.index[a]][self.index[b]]
    }

    pub fn neighbors_idx(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[a].iter().enumerate().filter(|(_, &x)| x).map(|(k, _)| k)
    }

    /// Graphviz rendering, vertices labelled `d<i>.<j>.<t>`.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph Gamma_{}_{} {{\n", self.params.n, self.params.c);
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for a in 0..self.vertices.len() {
            for b in self.neighbors_idx(a).filter(|&b| b > a) {
                out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.vertices[a], self.vertices[b]));
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_graph(params: Params) -> Result<CommGraph> {
    CommGraph::build(params)
}
