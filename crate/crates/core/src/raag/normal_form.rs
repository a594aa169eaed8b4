use super::{CommGraph, Delta, DeltaWord};
use crate::error::{Error, Result};

/// Canonical form of a δ-word in the RAAG on `g`.
///
/// First every letter is appended to a reduced stack, cancelling against an
/// inverse found across a suffix of letters that commute with it. The
/// resulting reduced word is then rewritten into the lexicographically least
/// word of its commutation class: repeatedly take the least letter that can
/// be shuffled to the front. Reduced words of the same element differ only
/// by commutations, so the output is unique per group element.
pub fn normal_form(w: &DeltaWord, g: &CommGraph) -> Result<DeltaWord> {
    if w.params() != g.params() {
        return Err(Error::Mismatch(format!("word over {} on graph of {}", w.params(), g.params())));
    }
    let mut indexed = Vec::with_capacity(w.len());
    for d in w.letters() {
        let idx = g.index_of(&d.vertex).ok_or_else(|| Error::NotAVertex(d.to_string()))?;
        indexed.push((*d, idx));
    }
    let reduced = reduce(&indexed, g);
    let letters = lex_sort(reduced, g);
    Ok(DeltaWord { params: w.params(), letters })
}

fn commute(g: &CommGraph, a: usize, b: usize) -> bool {
    g.adjacent_idx(a, b)
}

fn reduce(letters: &[(Delta, usize)], g: &CommGraph) -> Vec<(Delta, usize)> {
    let mut stack: Vec<(Delta, usize)> = Vec::with_capacity(letters.len());
    for &(d, idx) in letters {
        let mut cancel_at = None;
        for k in (0..stack.len()).rev() {
            let (e, eidx) = stack[k];
            if e == d.inverse() {
                cancel_at = Some(k);
                break;
            }
            if !commute(g, eidx, idx) {
                break;
            }
        }
        match cancel_at {
            Some(k) => {
                stack.remove(k);
            }
            None => stack.push((d, idx)),
        }
    }
    stack
}

fn lex_sort(mut rest: Vec<(Delta, usize)>, g: &CommGraph) -> Vec<Delta> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..rest.len() {
            let idx = rest[p].1;
            let movable = rest[..p].iter().all(|&(_, q)| commute(g, q, idx));
            if movable && best.is_none_or(|b| rest[p].0 < rest[b].0) {
                best = Some(p);
            }
        }
        // the first remaining letter is always movable
        let p = best.expect("non-empty word has a movable letter");
        out.push(rest.remove(p).0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raag::build_graph;
    use crate::words::{Params, Sign};
    use proptest::prelude::*;

    fn params(n: usize, c: usize) -> Params {
        Params::new(n, c).unwrap()
    }

    fn nf(text: &str, n: usize, c: usize) -> String {
        let p = params(n, c);
        let g = build_graph(p).unwrap();
        normal_form(&DeltaWord::parse(text, p).unwrap(), &g).unwrap().to_string()
    }

    #[test]
    fn sorts_commuting_letters() {
        assert_eq!(nf("d3.4.1 d1.2.1", 4, 1), "d1.2.1 d3.4.1");
    }

    #[test]
    fn cancels_across_commuting_letters() {
        assert_eq!(nf("d1.2.1 d3.4.1 D1.2.1", 4, 1), "d3.4.1");
        assert_eq!(nf("d1.2.1 d3.4.1 d4.3.2 D1.2.1", 4, 2), "d3.4.1 d4.3.2");
    }

    #[test]
    fn blocked_letters_stay_put() {
        assert_eq!(nf("d1.2.1 d2.1.1 D1.2.1", 4, 1), "d1.2.1 d2.1.1 D1.2.1");
        // same pair, other colour: not adjacent
        assert_eq!(nf("d1.2.1 d1.2.2 D1.2.1", 4, 2), "d1.2.1 d1.2.2 D1.2.1");
    }

    #[test]
    fn cancellation_exposes_further_cancellation() {
        assert_eq!(nf("d1.2.1 d2.3.1 D2.3.1 D1.2.1", 4, 1), "");
        assert_eq!(nf("d3.4.1 d1.2.1 D3.4.1", 4, 1), "d1.2.1");
    }

    #[test]
    fn rejects_foreign_letters() {
        let g = build_graph(params(4, 1)).unwrap();
        let w = DeltaWord::parse("d1.2.1", params(5, 1)).unwrap();
        assert!(normal_form(&w, &g).is_err());
    }

    fn arb_delta_word(n: usize, c: usize, max_len: usize) -> impl Strategy<Value = DeltaWord> {
        let letter = (1..=n, 1..n, 1..=c, any::<bool>()).prop_map(move |(i, dj, t, pos)| {
            let j = (i - 1 + dj) % n + 1;
            Delta::new(i, j, t, if pos { Sign::Pos } else { Sign::Neg })
        });
        proptest::collection::vec(letter, 0..=max_len)
            .prop_map(move |ls| DeltaWord::new(Params::new(n, c).unwrap(), ls).unwrap())
    }

    /// Brute force: the lexicographically least word among everything
    /// reachable by commuting adjacent letters and deleting adjacent inverse
    /// pairs, shortest length first.
    fn brute_force(w: &DeltaWord, g: &CommGraph) -> Vec<Delta> {
        use std::collections::{BTreeSet, VecDeque};
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.letters().to_vec());
        queue.push_back(w.letters().to_vec());
        while let Some(cur) = queue.pop_front() {
            for k in 0..cur.len().saturating_sub(1) {
                let (a, b) = (cur[k], cur[k + 1]);
                let mut nexts = Vec::new();
                if a == b.inverse() {
                    let mut v = cur.clone();
                    v.drain(k..k + 2);
                    nexts.push(v);
                } else if g.adjacent(&a.vertex, &b.vertex) {
                    let mut v = cur.clone();
                    v.swap(k, k + 1);
                    nexts.push(v);
                }
                for v in nexts {
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen.into_iter().min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b))).unwrap()
    }

    #[test]
    fn matches_brute_force_on_small_words() {
        use rand::{Rng, SeedableRng};
        let p = params(4, 1);
        let g = build_graph(p).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        // few letters so the commutation closure stays small
        let alphabet = [Delta::pos(1, 2, 1), Delta::pos(3, 4, 1), Delta::pos(2, 1, 1), Delta::pos(4, 3, 1)];
        for _ in 0..400 {
            let len = rng.random_range(0..=7);
            let letters: Vec<Delta> = (0..len)
                .map(|_| {
                    let d = alphabet[rng.random_range(0..alphabet.len())];
                    if rng.random_bool(0.5) {
                        d
                    } else {
                        d.inverse()
                    }
                })
                .collect();
            let w = DeltaWord::new(p, letters).unwrap();
            assert_eq!(normal_form(&w, &g).unwrap().letters(), brute_force(&w, &g).as_slice(), "{w}");
        }
    }

    proptest! {
        #[test]
        fn idempotent(w in arb_delta_word(5, 2, 20)) {
            let g = build_graph(w.params()).unwrap();
            let once = normal_form(&w, &g).unwrap();
            prop_assert_eq!(normal_form(&once, &g).unwrap(), once);
        }

        #[test]
        fn word_times_inverse_is_empty(w in arb_delta_word(5, 2, 20)) {
            let g = build_graph(w.params()).unwrap();
            let ww = w.concat(&w.inverse()).unwrap();
            prop_assert!(normal_form(&ww, &g).unwrap().is_empty());
        }

        #[test]
        fn congruence(u in arb_delta_word(5, 2, 15), v in arb_delta_word(5, 2, 15)) {
            let g = build_graph(u.params()).unwrap();
            let direct = normal_form(&u.concat(&v).unwrap(), &g).unwrap();
            let nu = normal_form(&u, &g).unwrap();
            let nv = normal_form(&v, &g).unwrap();
            prop_assert_eq!(normal_form(&nu.concat(&nv).unwrap(), &g).unwrap(), direct);
        }

        #[test]
        fn edgeless_cases_are_free_reduction(w in arb_delta_word(3, 2, 25)) {
            let g = build_graph(w.params()).unwrap();
            let mut stack: Vec<Delta> = Vec::new();
            for &d in w.letters() {
                if stack.last() == Some(&d.inverse()) { stack.pop(); } else { stack.push(d); }
            }
            let nf = normal_form(&w, &g).unwrap();
            prop_assert_eq!(nf.letters(), stack.as_slice());
        }
    }
}
