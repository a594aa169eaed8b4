//! The word problem in `UV_n(c)` through `UV_n(c) = KUV_n(c) ⋊ S_n`.
//!
//! A word is scanned left to right while tracking the `π^K` image `p` of the
//! prefix read so far. A ρ_i letter replaces `p` by `p·s_i`; a letter
//! σ_{i,t}^{±1} is rewritten as `ι(p) σ_{i,t}^{±1} ι(p)^{-1} = δ_{p(i),p(i+1),t}^{±1}`.
//! The word then equals (product of emitted δ's) · ι(π^K(w)), and the
//! δ-part is put in RAAG normal form.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perms::{iota, Perm};
use crate::raag::{build_graph, normal_form, CommGraph, Delta, DeltaWord};
use crate::words::{Letter, Params, UVWord};

/// `(k, w)` with `k` canonical in `KUV_n(c)` and `w ∈ S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UVNormalForm {
    pub delta_nf: DeltaWord,
    pub perm: Perm,
}

impl UVNormalForm {
    pub fn is_identity(&self) -> bool {
        self.delta_nf.is_empty() && self.perm.is_identity()
    }
}

impl Serialize for UVNormalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("UVNormalForm", 3)?;
        st.serialize_field("delta_nf", &self.delta_nf.tokens())?;
        st.serialize_field("perm", &self.perm.to_string())?;
        st.serialize_field("perm_images", &self.perm.images())?;
        st.end()
    }
}

/// Normal-form engine for one `(n, c)`, holding the commutation graph.
#[derive(Clone, Debug)]
pub struct WordProblem {
    params: Params,
    // None for n = 1, where every word is empty
    graph: Option<CommGraph>,
}

impl WordProblem {
    pub fn new(params: Params) -> WordProblem {
        let graph = if params.n >= 2 { Some(build_graph(params).expect("n >= 2")) } else { None };
        WordProblem { params, graph }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn graph(&self) -> Option<&CommGraph> {
        self.graph.as_ref()
    }

    fn check(&self, w: &UVWord) -> Result<()> {
        if w.params() != self.params {
            return Err(Error::Mismatch(format!("word over {} given to engine for {}", w.params(), self.params)));
        }
        Ok(())
    }

    pub fn to_normal_form(&self, w: &UVWord) -> Result<UVNormalForm> {
        self.check(w)?;
        let (raw, perm) = emit_deltas(w);
        let delta_nf = match &self.graph {
            Some(g) => normal_form(&raw, g)?,
            None => raw,
        };
        Ok(UVNormalForm { delta_nf, perm })
    }

    pub fn is_trivial(&self, w: &UVWord) -> Result<bool> {
        Ok(self.to_normal_form(w)?.is_identity())
    }

    pub fn are_equal(&self, u: &UVWord, v: &UVWord) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.to_normal_form(u)? == self.to_normal_form(v)?)
    }
}

/// The raw δ-word emitted by prefix rewriting, and `π^K(w)`.
pub fn emit_deltas(w: &UVWord) -> (DeltaWord, Perm) {
    let params = w.params();
    let mut p = Perm::identity(params.n);
    let mut out = Vec::new();
    for letter in w.letters() {
        match *letter {
            Letter::Rho(i) => p.mul_adjacent_in_place(i),
            Letter::Sigma { i, t, sign } => out.push(Delta::new(p.apply(i), p.apply(i + 1), t, sign)),
        }
    }
    let raw = DeltaWord::new(params, out).expect("emitted letters are in range");
    (raw, p)
}

pub fn to_normal_form(w: &UVWord) -> Result<UVNormalForm> {
    WordProblem::new(w.params()).to_normal_form(w)
}

/// Decides `w = 1` in `UV_n(c)`.
pub fn is_trivial(w: &UVWord) -> Result<bool> {
    WordProblem::new(w.params()).is_trivial(w)
}

pub fn are_equal(u: &UVWord, v: &UVWord) -> Result<bool> {
    if u.params() != v.params() {
        return Err(Error::Mismatch(format!("{} vs {}", u.params(), v.params())));
    }
    WordProblem::new(u.params()).are_equal(u, v)
}

/// `π^P(w) = 1`, i.e. `w ∈ PUV_n(c)`.
pub fn is_pure(w: &UVWord) -> bool {
    crate::perms::pi_p(w).is_identity()
}

/// The explicit word for δ_{i,j,t}^{±1}: σ_{min,t} conjugated by the ρ-path
/// carrying `(min, min+1)` to `(i, j)`.
pub fn delta_to_uvword(d: Delta, params: Params) -> Result<UVWord> {
    if !d.vertex.in_range(params) {
        return Err(Error::NotAVertex(d.to_string()));
    }
    let (i, j, t) = (d.vertex.i, d.vertex.j, d.vertex.t);
    let (lo, hi) = (i.min(j), i.max(j));
    // outer conjugator ρ_{hi-1} … ρ_{lo+1}
    let mut left: Vec<Letter> = (lo + 1..hi).rev().map(Letter::Rho).collect();
    if i > j {
        left.push(Letter::Rho(lo));
    }
    let mut letters = left.clone();
    letters.push(Letter::Sigma { i: lo, t, sign: d.sign });
    letters.extend(left.iter().rev());
    UVWord::new(params, letters)
}

/// Substitutes the explicit word for every δ letter.
pub fn expand_delta_word(w: &DeltaWord) -> Result<UVWord> {
    let mut letters = Vec::new();
    for &d in w.letters() {
        letters.extend_from_slice(delta_to_uvword(d, w.params())?.letters());
    }
    UVWord::new(w.params(), letters)
}

/// `ι(p) δ_{i,j,t} ι(p)^{-1} = δ_{p(i),p(j),t}`.
pub fn conjugate_action(p: &Perm, d: Delta) -> Result<Delta> {
    let n = p.degree();
    if d.vertex.i > n || d.vertex.j > n {
        return Err(Error::Mismatch(format!("{d} acted on by a permutation of degree {n}")));
    }
    Ok(Delta::new(p.apply(d.vertex.i), p.apply(d.vertex.j), d.vertex.t, d.sign))
}

/// `expansion(delta_nf) · ι(perm)`, a word equal to the original.
pub fn reconstruct(nf: &UVNormalForm) -> Result<UVWord> {
    expand_delta_word(&nf.delta_nf)?.concat(&iota(&nf.perm, nf.delta_nf.params())?)
}
