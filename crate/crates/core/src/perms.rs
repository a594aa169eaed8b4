//! Permutations of `{1..n}` and the projections `π^K`, `π^P` with the
//! section `ι`.
//!
//! Products compose like functions: `(a·b)(x) = a(b(x))`. With this order
//! `ι(w)δ_{i,j,t}ι(w)^{-1} = δ_{w(i),w(j),t}` holds verbatim and a word
//! `ρ_{a1}…ρ_{ak}` maps to `s_{a1}∘…∘s_{ak}`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{Letter, Params, UVWord};

/// A permutation stored as its one-line image array (0-based internally).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// Builds from 1-based images, `images[k-1] = image of k`.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Ok(Perm { images: out })
    }

    /// The transposition `(a b)` on `n` points (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n, "transposition ({a} {b}) outside 1..={n}");
        let mut p = Perm::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// The Coxeter generator `s_i = (i i+1)`.
    pub fn adjacent(n: usize, i: usize) -> Perm {
        Perm::transposition(n, i, i + 1)
    }

    /// Builds from disjoint cycles written with 1-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n + 1];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || touched[x] {
                    return Err(Error::Invalid(format!("bad cycle {cycle:?} for n = {n}")));
                }
                touched[x] = true;
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            out[x] = k;
        }
        Perm { images: out }
    }

    /// `self · other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::Mismatch(format!("permutations of degree {} and {}", self.degree(), other.degree())));
        }
        Ok(self.mul(other))
    }

    /// Unchecked `self · other`; panics on mismatched degree.
    pub fn mul(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    /// Right multiplication by `s_i` in place: swaps the images of `i` and `i+1`.
    pub fn mul_adjacent_in_place(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    pub fn pow(&self, e: u32) -> Perm {
        (0..e).fold(Perm::identity(self.degree()), |acc, _| acc.mul(self))
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// All of `S_n` in lexicographic order of the one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut current: Vec<usize> = (0..n).collect();
        let mut out = vec![Perm { images: current.clone() }];
        // next-permutation
        loop {
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| current[k] < current[k + 1]) else {
                return out;
            };
            let l = (k + 1..n).rev().find(|&l| current[k] < current[l]).unwrap();
            current.swap(k, l);
            current[k + 1..].reverse();
            out.push(Perm { images: current.clone() });
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let parts: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Perm::from_images(&images).map_err(serde::de::Error::custom)
    }
}

/// `π^K`: ρ_i ↦ s_i, σ_{i,t} ↦ 1.
pub fn pi_k(w: &UVWord) -> Perm {
    let mut p = Perm::identity(w.params().n);
    for letter in w.letters() {
        if let Letter::Rho(i) = *letter {
            p.mul_adjacent_in_place(i);
        }
    }
    p
}

/// `π^P`: every letter with index `i` maps to s_i.
pub fn pi_p(w: &UVWord) -> Perm {
    let mut p = Perm::identity(w.params().n);
    for letter in w.letters() {
        p.mul_adjacent_in_place(letter.index());
    }
    p
}

/// Adjacent-transposition indices `a1..ak` with `s_{a1}∘…∘s_{ak} = p`,
/// read off a bubble sort of the one-line notation.
pub fn coxeter_word(p: &Perm) -> Vec<usize> {
    let mut work = p.clone();
    let mut swaps = Vec::new();
    let n = work.degree();
    for pass in 0..n {
        let mut swapped = false;
        for k in 0..n.saturating_sub(1 + pass) {
            if work.images[k] > work.images[k + 1] {
                // work ∘ s_{k+1}
                work.images.swap(k, k + 1);
                swaps.push(k + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    // p ∘ s_{b1} ∘ … ∘ s_{bk} = id, so p = s_{bk} ∘ … ∘ s_{b1}.
    swaps.reverse();
    swaps
}

/// The section `ι`: a ρ-only word mapping to `p` under `π^K`.
pub fn iota(p: &Perm, params: Params) -> Result<UVWord> {
    if p.degree() != params.n {
        return Err(Error::Mismatch(format!("permutation of degree {} for {params}", p.degree())));
    }
    Ok(UVWord::from_letters_unchecked(params, coxeter_word(p).into_iter().map(Letter::Rho).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_word;
    use crate::words::defining_relations;
    use proptest::prelude::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::transposition(3, 1, 2);
        let b = Perm::transposition(3, 2, 3);
        let ab = a.compose(&b).unwrap();
        // pointwise: b first, then a
        for x in 1..=3 {
            assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
        assert_eq!(ab.images(), vec![2, 3, 1]);
        assert_eq!(ab.to_string(), "(1 2 3)");
        assert_eq!(a.compose(&Perm::identity(3)).unwrap(), a);
        assert!(ab.compose(&ab.inverse()).unwrap().is_identity());
        assert!(a.compose(&Perm::identity(4)).is_err());
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(Perm::identity(4).to_string(), "()");
        let p = Perm::from_cycles(5, &[vec![1, 3], vec![2, 5, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 5 4)");
        assert_eq!(p.images(), vec![3, 5, 1, 2, 4]);
        assert!(Perm::from_images(&[1, 1, 2]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
    }

    #[test]
    fn enumerates_symmetric_groups() {
        for (n, order) in [(0, 1), (1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
            let all = Perm::all(n);
            assert_eq!(all.len(), order);
            let mut sorted = all.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), order);
        }
    }

    #[test]
    fn projection_examples() {
        let params = Params::new(3, 1).unwrap();
        let w = |s| UVWord::parse(s, params).unwrap();
        assert_eq!(pi_k(&w("s1.1 r2")), Perm::transposition(3, 2, 3));
        assert!(pi_k(&w("")).is_identity());
        assert!(pi_k(&w("r1 r1")).is_identity());
        let s1s2 = Perm::adjacent(3, 1).mul(&Perm::adjacent(3, 2));
        assert_eq!(pi_p(&w("s1.1 r2")), s1s2);
        assert!(pi_p(&w("s1.1 S1.1")).is_identity());
        assert_eq!(pi_p(&w("r1")), Perm::transposition(3, 1, 2));
    }

    #[test]
    fn iota_examples() {
        let params = Params::new(3, 1).unwrap();
        assert!(iota(&Perm::identity(3), params).unwrap().is_empty());
        assert_eq!(iota(&Perm::transposition(3, 1, 2), params).unwrap().to_string(), "r1");
    }

    #[test]
    fn iota_is_a_section_up_to_six_strands() {
        for n in 1..=6 {
            let params = Params::new(n, 1).unwrap();
            for p in Perm::all(n) {
                let w = iota(&p, params).unwrap();
                assert_eq!(pi_k(&w), p);
                assert!(w.letters().iter().all(|l| matches!(l, Letter::Rho(_))));
            }
        }
    }

    #[test]
    fn relators_vanish_under_both_projections() {
        for n in 1..=7 {
            for c in 1..=3 {
                let params = Params::new(n, c).unwrap();
                for rel in defining_relations(params) {
                    let w = rel.relator_word(params);
                    assert!(pi_k(&w).is_identity(), "{}", rel.label());
                    assert!(pi_p(&w).is_identity(), "{}", rel.label());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn projections_are_homomorphisms(u in arb_word(5, 2, 20), v in arb_word(5, 2, 20)) {
            let uv = u.concat(&v).unwrap();
            prop_assert_eq!(pi_k(&uv), pi_k(&u).mul(&pi_k(&v)));
            prop_assert_eq!(pi_p(&uv), pi_p(&u).mul(&pi_p(&v)));
        }

        #[test]
        fn json_round_trip(k in 0usize..120) {
            let p = Perm::all(5)[k].clone();
            let text = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<Perm>(&text).unwrap(), p);
        }
    }
}
