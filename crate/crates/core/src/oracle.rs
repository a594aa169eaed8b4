//! Bounded equality prover working directly on the presentation.
//!
//! Starting from `free_reduce(u·v^{-1})` the search applies relator rewrites
//! `x → y` wherever `x·y^{-1}` is a cyclic rotation of a defining relator or
//! its inverse (this covers insertion, deletion and replacement), followed by
//! free reduction. Reaching the empty word proves `u = v`, and the path of
//! rewrites is returned so it can be replayed. Running out of budget only
//! ever yields `Unknown`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::words::{defining_relations, free_reduce_letters, Letter, Params, Relation, UVWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    pub max_depth: usize,
    /// Words kept per breadth-first level (the shortest ones win).
    pub max_width: usize,
    /// Also insert whole relator rotations (`x` empty). Costly: one child
    /// per rotation and position.
    pub insertions: bool,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_depth: 8, max_width: 200_000, insertions: true }
    }
}

/// One rewrite: relation `relation` (index into the defining relations),
/// optionally inverted, rotated left by `rotation`, split after `split`
/// letters into `x | y^{-1}`; the occurrence of `x` at `position` is
/// replaced by `y`, then the word is freely reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Step {
    pub relation: usize,
    pub inverted: bool,
    pub rotation: usize,
    pub split: usize,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ProvenEqual,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofResult {
    pub verdict: Verdict,
    pub path: Option<Vec<Step>>,
    pub explored: u64,
}

#[derive(Clone, Debug)]
struct Piece {
    x: Vec<Letter>,
    y: Vec<Letter>,
    relation: usize,
    inverted: bool,
    rotation: usize,
    split: usize,
}

fn piece_of(relations: &[Relation], relation: usize, inverted: bool, rotation: usize, split: usize) -> Option<Piece> {
    let rel = relations.get(relation)?;
    let mut cyc = rel.relator();
    if inverted {
        cyc = cyc.iter().rev().map(|l| l.inverse()).collect();
    }
    if rotation >= cyc.len().max(1) || split > cyc.len() {
        return None;
    }
    cyc.rotate_left(rotation);
    let x = cyc[..split].to_vec();
    let y = cyc[split..].iter().rev().map(|l| l.inverse()).collect();
    Some(Piece { x, y, relation, inverted, rotation, split })
}

/// Rewrite rules for `params`, duplicates removed.
fn pieces(relations: &[Relation]) -> Vec<Piece> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (k, rel) in relations.iter().enumerate() {
        let len = rel.relator().len();
        if free_reduce_letters(&rel.relator()).is_empty() {
            // ρ_i² = 1: already handled by free reduction
            continue;
        }
        for inverted in [false, true] {
            for rotation in 0..len {
                for split in 0..=len {
                    let piece = piece_of(relations, k, inverted, rotation, split).unwrap();
                    if piece.x == piece.y {
                        continue;
                    }
                    if seen.insert((piece.x.clone(), piece.y.clone())) {
                        out.push(piece);
                    }
                }
            }
        }
    }
    out
}

fn apply(word: &[Letter], piece: &Piece, position: usize) -> Option<Vec<Letter>> {
    let end = position + piece.x.len();
    if end > word.len() || word[position..end] != piece.x[..] {
        return None;
    }
    let mut out = Vec::with_capacity(word.len() - piece.x.len() + piece.y.len());
    out.extend_from_slice(&word[..position]);
    out.extend_from_slice(&piece.y);
    out.extend_from_slice(&word[end..]);
    Some(free_reduce_letters(&out))
}

/// Rewrite rules grouped for matching: by the first letter of `x`, with
/// the insertions (`x` empty) kept apart.
struct RuleSet {
    by_first: HashMap<Letter, Vec<Piece>>,
    inserts: Vec<Piece>,
}

impl RuleSet {
    fn new(relations: &[Relation]) -> RuleSet {
        let mut by_first: HashMap<Letter, Vec<Piece>> = HashMap::new();
        let mut inserts = Vec::new();
        for piece in pieces(relations) {
            match piece.x.first() {
                Some(&l) => by_first.entry(l).or_default().push(piece),
                None => inserts.push(piece),
            }
        }
        RuleSet { by_first, inserts }
    }

    fn children(&self, word: &[Letter], insertions: bool) -> Vec<(Vec<Letter>, Step)> {
        let mut out = Vec::new();
        let mut emit = |piece: &Piece, position: usize| {
            if let Some(next) = apply(word, piece, position) {
                out.push((
                    next,
                    Step {
                        relation: piece.relation,
                        inverted: piece.inverted,
                        rotation: piece.rotation,
                        split: piece.split,
                        position,
                    },
                ));
            }
        };
        for (position, letter) in word.iter().enumerate() {
            for piece in self.by_first.get(letter).into_iter().flatten() {
                emit(piece, position);
            }
        }
        if insertions {
            for piece in &self.inserts {
                for position in 0..=word.len() {
                    emit(piece, position);
                }
            }
        }
        out
    }
}

/// Breadth-first search for a proof that `u = v`.
pub fn bfs_equal(u: &UVWord, v: &UVWord, budget: OracleBudget) -> Result<ProofResult> {
    bfs_equal_with(u, v, budget, Execution::default())
}

pub fn bfs_equal_with(u: &UVWord, v: &UVWord, budget: OracleBudget, exec: Execution) -> Result<ProofResult> {
    if u.params() != v.params() {
        return Err(Error::Mismatch(format!("{} vs {}", u.params(), v.params())));
    }
    let rules = RuleSet::new(&defining_relations(u.params()));
    let start = u.concat(&v.inverse())?.free_reduce().letters().to_vec();
    if start.is_empty() {
        return Ok(ProofResult { verdict: Verdict::ProvenEqual, path: Some(Vec::new()), explored: 1 });
    }

    // arena of (parent, step) for path reconstruction
    let mut arena: Vec<(usize, Option<Step>)> = vec![(usize::MAX, None)];
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([start.clone()]);
    let mut frontier: Vec<(Vec<Letter>, usize)> = vec![(start, 0)];
    let mut explored = 1u64;

    for _ in 0..budget.max_depth {
        let expanded = exec.map(&frontier, |(word, _)| rules.children(word, budget.insertions));
        let mut next: Vec<(Vec<Letter>, usize)> = Vec::new();
        for ((_, parent), kids) in frontier.iter().zip(expanded) {
            for (word, step) in kids {
                if !seen.insert(word.clone()) {
                    continue;
                }
                explored += 1;
                arena.push((*parent, Some(step)));
                let id = arena.len() - 1;
                if word.is_empty() {
                    return Ok(ProofResult { verdict: Verdict::ProvenEqual, path: Some(trace(&arena, id)), explored });
                }
                next.push((word, id));
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        next.truncate(budget.max_width);
        frontier = next;
    }
    Ok(ProofResult { verdict: Verdict::Unknown, path: None, explored })
}

fn trace(arena: &[(usize, Option<Step>)], mut id: usize) -> Vec<Step> {
    let mut path = Vec::new();
    while let (parent, Some(step)) = arena[id] {
        path.push(step);
        id = parent;
    }
    path.reverse();
    path
}

/// Every word reachable from `w` by one rewrite, with the step used.
pub fn neighbours(w: &UVWord) -> Vec<(UVWord, Step)> {
    RuleSet::new(&defining_relations(w.params()))
        .children(w.free_reduce().letters(), true)
        .into_iter()
        .map(|(letters, step)| (UVWord::new(w.params(), letters).expect("rewrites stay in range"), step))
        .collect()
}

/// Applies `path` to `free_reduce(u·v^{-1})` and returns the final word.
pub fn replay(u: &UVWord, v: &UVWord, path: &[Step]) -> Result<UVWord> {
    let params: Params = u.params();
    let relations = defining_relations(params);
    let mut word = u.concat(&v.inverse())?.free_reduce().letters().to_vec();
    for (k, step) in path.iter().enumerate() {
        let piece = piece_of(&relations, step.relation, step.inverted, step.rotation, step.split)
            .ok_or_else(|| Error::Invalid(format!("step {k} names no rewrite rule")))?;
        word = apply(&word, &piece, step.position)
            .ok_or_else(|| Error::Invalid(format!("step {k} does not match at position {}", step.position)))?;
    }
    UVWord::new(params, word)
}
