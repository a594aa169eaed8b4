//! Generators of `UV_n(c)`, the word token format, free reduction and the
//! defining relations.
//!
//! Token grammar: `r<i>` is ρ_i (`R<i>` is accepted and normalized, ρ_i being
//! an involution), `s<i>.<t>` is σ_{i,t} and `S<i>.<t>` its inverse.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strand count `n` and number of crossing types `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub c: usize,
}

impl Params {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams(format!("n must be >= 1, got {n}")));
        }
        if c < 1 {
            return Err(Error::InvalidParams(format!("c must be >= 1, got {c}")));
        }
        Ok(Params { n, c })
    }

    /// Every generator, ρ's first, then σ's grouped by crossing type.
    pub fn generators(&self) -> Vec<Generator> {
        let mut gens: Vec<Generator> = (1..self.n).map(Generator::Rho).collect();
        for t in 1..=self.c {
            gens.extend((1..self.n).map(|i| Generator::Sigma(i, t)));
        }
        gens
    }

    pub fn check_letter(&self, letter: Letter) -> std::result::Result<(), String> {
        let i = letter.index();
        if i == 0 || i >= self.n {
            return Err(format!("strand index {i} outside 1..={}", self.n.saturating_sub(1)));
        }
        if let Letter::Sigma { t, .. } = letter {
            if t == 0 || t > self.c {
                return Err(format!("crossing type {t} exceeds c = {}", self.c));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, c={}", self.n, self.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator without exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Rho(usize),
    Sigma(usize, usize),
}

/// One letter of a word. ρ letters carry no sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Rho(usize),
    Sigma { i: usize, t: usize, sign: Sign },
}

impl Letter {
    pub fn sigma(i: usize, t: usize) -> Letter {
        Letter::Sigma { i, t, sign: Sign::Pos }
    }

    pub fn sigma_inv(i: usize, t: usize) -> Letter {
        Letter::Sigma { i, t, sign: Sign::Neg }
    }

    pub fn index(self) -> usize {
        match self {
            Letter::Rho(i) | Letter::Sigma { i, .. } => i,
        }
    }

    pub fn generator(self) -> Generator {
        match self {
            Letter::Rho(i) => Generator::Rho(i),
            Letter::Sigma { i, t, .. } => Generator::Sigma(i, t),
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Rho(i) => Letter::Rho(i),
            Letter::Sigma { i, t, sign } => Letter::Sigma { i, t, sign: sign.flip() },
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.inverse() == other
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Rho(i) => write!(f, "r{i}"),
            Letter::Sigma { i, t, sign: Sign::Pos } => write!(f, "s{i}.{t}"),
            Letter::Sigma { i, t, sign: Sign::Neg } => write!(f, "S{i}.{t}"),
        }
    }
}

fn parse_letter(token: &str) -> std::result::Result<Letter, String> {
    let mut chars = token.chars();
    let head = chars.next().ok_or("empty token")?;
    let rest = chars.as_str();
    let number = |s: &str| -> std::result::Result<usize, String> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("expected a decimal index, found `{s}`"));
        }
        s.parse::<usize>().map_err(|e| e.to_string())
    };
    match head {
        'r' | 'R' => Ok(Letter::Rho(number(rest)?)),
        's' | 'S' => {
            let (i, t) = rest.split_once('.').ok_or_else(|| "sigma token needs the form s<i>.<t>".to_string())?;
            let sign = if head == 's' { Sign::Pos } else { Sign::Neg };
            Ok(Letter::Sigma { i: number(i)?, t: number(t)?, sign })
        }
        other => Err(format!("unknown generator prefix `{other}`")),
    }
}

/// A word in the generators of `UV_n(c)`. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UVWord {
    params: Params,
    letters: Vec<Letter>,
}

impl UVWord {
    pub fn identity(params: Params) -> Self {
        UVWord { params, letters: Vec::new() }
    }

    pub fn new(params: Params, letters: Vec<Letter>) -> Result<Self> {
        for (position, &letter) in letters.iter().enumerate() {
            params.check_letter(letter).map_err(|reason| Error::Parse {
                position,
                token: letter.to_string(),
                reason,
            })?;
        }
        Ok(UVWord { params, letters })
    }

    /// Caller guarantees the letters are in range.
    pub(crate) fn from_letters_unchecked(params: Params, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| params.check_letter(l).is_ok()));
        UVWord { params, letters }
    }

    pub fn parse(text: &str, params: Params) -> Result<Self> {
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let letter =
                parse_letter(token).map_err(|reason| Error::Parse { position, token: token.to_string(), reason })?;
            params.check_letter(letter).map_err(|reason| Error::Parse {
                position,
                token: token.to_string(),
                reason,
            })?;
            letters.push(letter);
        }
        Ok(UVWord { params, letters })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> UVWord {
        UVWord { params: self.params, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &UVWord) -> Result<UVWord> {
        if self.params != other.params {
            return Err(Error::Mismatch(format!("{} vs {}", self.params, other.params)));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(UVWord { params: self.params, letters })
    }

    /// Concatenation of words sharing `params`.
    pub fn product<'a>(params: Params, parts: impl IntoIterator<Item = &'a UVWord>) -> Result<UVWord> {
        let mut out = UVWord::identity(params);
        for part in parts {
            out = out.concat(part)?;
        }
        Ok(out)
    }

    pub fn free_reduce(&self) -> UVWord {
        UVWord { params: self.params, letters: free_reduce_letters(&self.letters) }
    }
}

impl fmt::Display for UVWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Cancels ρ_iρ_i and σσ^{-1} pairs until none remain.
pub fn free_reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &letter in letters {
        match stack.last() {
            Some(&top) if top.cancels(letter) => {
                stack.pop();
            }
            _ => stack.push(letter),
        }
    }
    stack
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationKind {
    PR1,
    PR2,
    PR3,
    CR,
    MR1,
    MR2,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One instance `lhs = rhs` of a defining relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: Vec<Letter>,
    pub rhs: Vec<Letter>,
}

impl Relation {
    /// The relator `lhs · rhs^{-1}`.
    pub fn relator(&self) -> Vec<Letter> {
        let mut out = self.lhs.clone();
        out.extend(self.rhs.iter().rev().map(|l| l.inverse()));
        out
    }

    pub fn relator_word(&self, params: Params) -> UVWord {
        UVWord::from_letters_unchecked(params, self.relator())
    }

    pub fn label(&self) -> String {
        let side = |ls: &[Letter]| {
            if ls.is_empty() {
                "1".to_string()
            } else {
                ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
            }
        };
        format!("{}: {} = {}", self.kind, side(&self.lhs), side(&self.rhs))
    }
}

/// Every instance of the defining relations (PR1)-(MR2) for `params`.
pub fn defining_relations(params: Params) -> Vec<Relation> {
    let n = params.n;
    let c = params.c;
    let rho = Letter::Rho;
    let sigma = Letter::sigma;
    let mut out = Vec::new();
    let mut push = |kind, lhs: Vec<Letter>, rhs: Vec<Letter>| out.push(Relation { kind, lhs, rhs });

    for i in 1..n.saturating_sub(1) {
        push(RelationKind::PR1, vec![rho(i), rho(i + 1), rho(i)], vec![rho(i + 1), rho(i), rho(i + 1)]);
    }
    for i in 1..n {
        for j in i + 2..n {
            push(RelationKind::PR2, vec![rho(i), rho(j)], vec![rho(j), rho(i)]);
        }
    }
    for i in 1..n {
        push(RelationKind::PR3, vec![rho(i), rho(i)], vec![]);
    }
    for i in 1..n {
        for j in i + 2..n {
            for t in 1..=c {
                for l in 1..=c {
                    push(RelationKind::CR, vec![sigma(i, t), sigma(j, l)], vec![sigma(j, l), sigma(i, t)]);
                }
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                for t in 1..=c {
                    push(RelationKind::MR1, vec![sigma(i, t), rho(j)], vec![rho(j), sigma(i, t)]);
                }
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        for t in 1..=c {
            push(RelationKind::MR2, vec![rho(i), rho(i + 1), sigma(i, t)], vec![sigma(i + 1, t), rho(i), rho(i + 1)]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_word;
    use proptest::prelude::*;

    fn p(n: usize, c: usize) -> Params {
        Params::new(n, c).unwrap()
    }

    #[test]
    fn parses_tokens() {
        let w = UVWord::parse("r1 s2.1", p(3, 1)).unwrap();
        assert_eq!(w.letters(), &[Letter::Rho(1), Letter::sigma(2, 1)]);
        assert!(UVWord::parse("", p(3, 1)).unwrap().is_empty());
        assert!(UVWord::parse("  \t ", p(3, 1)).unwrap().is_empty());
    }

    #[test]
    fn upper_rho_is_normalized() {
        let w = UVWord::parse("R2 S1.1", p(3, 1)).unwrap();
        assert_eq!(w.to_string(), "r2 S1.1");
    }

    #[test]
    fn rejects_bad_tokens_with_position() {
        match UVWord::parse("s1.3", p(3, 2)) {
            Err(Error::Parse { position: 0, reason, .. }) => assert!(reason.contains("crossing type 3")),
            other => panic!("unexpected {other:?}"),
        }
        match UVWord::parse("r1 r3", p(3, 1)) {
            Err(Error::Parse { position: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        for bad in ["x1", "s1", "s.1", "r", "r-1", "s1.1.1", "s0.1"] {
            assert!(UVWord::parse(bad, p(4, 2)).is_err(), "{bad}");
        }
    }

    #[test]
    fn n_one_only_has_the_empty_word() {
        let params = p(1, 3);
        assert!(UVWord::parse("", params).unwrap().is_empty());
        assert!(UVWord::parse("r1", params).is_err());
        assert!(params.generators().is_empty());
        assert!(defining_relations(params).is_empty());
    }

    #[test]
    fn free_reduction_examples() {
        let params = p(3, 1);
        let reduce = |s: &str| UVWord::parse(s, params).unwrap().free_reduce().to_string();
        assert_eq!(reduce("r1 r1"), "");
        assert_eq!(reduce("s1.1 S1.1"), "");
        assert_eq!(reduce("r1 s2.1"), "r1 s2.1");
        assert_eq!(reduce("s1.1 r2 r2 S1.1 r1"), "r1");
    }

    #[test]
    fn relation_counts() {
        // n=4, c=2: PR1 2, PR2 1, PR3 3, CR 1*4, MR1 2*2, MR2 2*2
        let rels = defining_relations(p(4, 2));
        let count = |k| rels.iter().filter(|r| r.kind == k).count();
        assert_eq!(count(RelationKind::PR1), 2);
        assert_eq!(count(RelationKind::PR2), 1);
        assert_eq!(count(RelationKind::PR3), 3);
        assert_eq!(count(RelationKind::CR), 4);
        assert_eq!(count(RelationKind::MR1), 4);
        assert_eq!(count(RelationKind::MR2), 4);
        let mr2 = rels.iter().find(|r| r.kind == RelationKind::MR2).unwrap();
        assert_eq!(mr2.relator_word(p(4, 2)).to_string(), "r1 r2 s1.1 r2 r1 S2.1");
    }

    proptest! {
        #[test]
        fn serialize_then_parse_is_identity(w in arb_word(5, 3, 30)) {
            let back = UVWord::parse(&w.to_string(), w.params()).unwrap();
            prop_assert_eq!(back, w);
        }

        #[test]
        fn free_reduce_is_idempotent_and_shrinks(w in arb_word(4, 2, 30)) {
            let once = w.free_reduce();
            prop_assert!(once.len() <= w.len());
            prop_assert_eq!(once.free_reduce(), once.clone());
            let fully = once.letters().windows(2).all(|p| !p[0].cancels(p[1]));
            prop_assert!(fully);
        }

        #[test]
        fn word_times_inverse_reduces_to_empty(w in arb_word(5, 2, 30)) {
            prop_assert!(w.concat(&w.inverse()).unwrap().free_reduce().is_empty());
        }
    }
}
