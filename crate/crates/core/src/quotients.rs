//! Finite quotients `(Z/d)^c ⋊ S_n` (trivial action) of `UV_n(c)`:
//! Θ(ρ_i) = (0, s_i), Θ(σ_{i,t}^{±1}) = (±e_t, s_i).

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perms::Perm;
use crate::words::{Letter, Params, UVWord};

/// Closure computations are attempted up to this many elements.
pub const CLOSURE_LIMIT: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FinQuotElem {
    pub vec: Vec<i64>,
    pub perm: Perm,
}

/// The group `(Z/d)^c × S_n`; `d = 0` stands for `Z^c × S_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteQuotient {
    params: Params,
    d: u64,
}

impl FiniteQuotient {
    pub fn new(params: Params, d: u64) -> Result<FiniteQuotient> {
        if d == 1 {
            return Err(Error::InvalidParams("modulus d must be 0 (integers) or >= 2".into()));
        }
        Ok(FiniteQuotient { params, d })
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    fn reduce(&self, x: i64) -> i64 {
        if self.d == 0 {
            x
        } else {
            x.rem_euclid(self.d as i64)
        }
    }

    pub fn identity(&self) -> FinQuotElem {
        FinQuotElem { vec: vec![0; self.params.c], perm: Perm::identity(self.params.n) }
    }

    pub fn mul(&self, a: &FinQuotElem, b: &FinQuotElem) -> FinQuotElem {
        FinQuotElem {
            vec: a.vec.iter().zip(&b.vec).map(|(x, y)| self.reduce(x + y)).collect(),
            perm: a.perm.mul(&b.perm),
        }
    }

    pub fn inverse(&self, a: &FinQuotElem) -> FinQuotElem {
        FinQuotElem { vec: a.vec.iter().map(|x| self.reduce(-x)).collect(), perm: a.perm.inverse() }
    }

    pub fn letter_image(&self, letter: Letter) -> FinQuotElem {
        let n = self.params.n;
        let mut vec = vec![0; self.params.c];
        if let Letter::Sigma { t, sign, .. } = letter {
            vec[t - 1] = self.reduce(sign.as_i64());
        }
        FinQuotElem { vec, perm: Perm::adjacent(n, letter.index()) }
    }

    /// Θ on a word.
    pub fn theta(&self, w: &UVWord) -> Result<FinQuotElem> {
        if w.params() != self.params {
            return Err(Error::Mismatch(format!("word over {} for quotient of {}", w.params(), self.params)));
        }
        Ok(w.letters().iter().fold(self.identity(), |acc, &l| self.mul(&acc, &self.letter_image(l))))
    }

    /// `d^c · n!`.
    pub fn order(&self) -> Option<BigUint> {
        if self.d == 0 {
            return None;
        }
        let factorial: BigUint = (1..=self.params.n as u64).map(BigUint::from).product();
        Some(BigUint::from(self.d).pow(self.params.c as u32) * factorial)
    }

    /// Size of the subgroup generated by Θ of the generators, by breadth-first
    /// right multiplication. `None` past `limit` elements.
    pub fn generated_subgroup_size(&self, limit: u64) -> Option<u64> {
        let gens: Vec<FinQuotElem> = self
            .params
            .generators()
            .into_iter()
            .map(|g| match g {
                crate::words::Generator::Rho(i) => self.letter_image(Letter::Rho(i)),
                crate::words::Generator::Sigma(i, t) => self.letter_image(Letter::sigma(i, t)),
            })
            .collect();
        let start = self.identity();
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.mul(&x, g);
                if seen.insert(y.clone()) {
                    if seen.len() as u64 > limit {
                        return None;
                    }
                    queue.push_back(y);
                }
            }
        }
        Some(seen.len() as u64)
    }
}

/// Why Θ is onto.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurjectivityCertificate {
    /// The generated subgroup was enumerated and has the full order.
    Closure { elements: u64 },
    /// Θ(σ_{1,t} ρ_1) = (e_t, 1) for every t, and the Θ(ρ_i) = (0, s_i)
    /// are the Coxeter generators of S_n.
    Structural { unit_vectors: Vec<Vec<i64>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientOrder {
    pub order: BigUint,
    pub n_factorial: BigUint,
    pub certificate: Option<SurjectivityCertificate>,
}

impl QuotientOrder {
    pub fn exceeds_n_factorial(&self) -> bool {
        self.order > self.n_factorial
    }
}

pub fn theta(w: &UVWord, d: u64) -> Result<FinQuotElem> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("modulus d must be >= 2, got {d}")));
    }
    FiniteQuotient::new(w.params(), d)?.theta(w)
}

/// `d^c · n!` with a certificate that Θ is onto; `certificate` is `None`
/// only if neither check succeeds.
pub fn quotient_order(params: Params, d: u64) -> Result<QuotientOrder> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("modulus d must be >= 2, got {d}")));
    }
    let q = FiniteQuotient::new(params, d)?;
    let order = q.order().expect("finite modulus");
    let n_factorial: BigUint = (1..=params.n as u64).map(BigUint::from).product();
    let small = u64::try_from(&order).ok().filter(|&o| o <= CLOSURE_LIMIT);
    let certificate = match small {
        Some(o) => q
            .generated_subgroup_size(CLOSURE_LIMIT)
            .filter(|&size| size == o)
            .map(|elements| SurjectivityCertificate::Closure { elements }),
        None => structural_certificate(&q, params),
    };
    Ok(QuotientOrder { order, n_factorial, certificate })
}

fn structural_certificate(q: &FiniteQuotient, params: Params) -> Option<SurjectivityCertificate> {
    if params.n < 2 {
        return None;
    }
    let mut unit_vectors = Vec::new();
    for t in 1..=params.c {
        let x = q.mul(&q.letter_image(Letter::sigma(1, t)), &q.inverse(&q.letter_image(Letter::Rho(1))));
        let mut expected = vec![0; params.c];
        expected[t - 1] = 1;
        if !x.perm.is_identity() || x.vec != expected {
            return None;
        }
        unit_vectors.push(x.vec);
    }
    let rho_ok = (1..params.n).all(|i| {
        let img = q.letter_image(Letter::Rho(i));
        img.vec.iter().all(|&v| v == 0) && img.perm == Perm::adjacent(params.n, i)
    });
    rho_ok.then_some(SurjectivityCertificate::Structural { unit_vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homs::abelianize;
    use crate::testutil::arb_word;
    use crate::words::defining_relations;
    use proptest::prelude::*;

    fn params(n: usize, c: usize) -> Params {
        Params::new(n, c).unwrap()
    }

    #[test]
    fn theta_examples() {
        let p = params(3, 1);
        let x = theta(&UVWord::parse("s1.1", p).unwrap(), 2).unwrap();
        assert_eq!(x, FinQuotElem { vec: vec![1], perm: Perm::transposition(3, 1, 2) });
        let x = theta(&UVWord::parse("r1 r1", p).unwrap(), 2).unwrap();
        assert_eq!(x, FiniteQuotient::new(p, 2).unwrap().identity());
        let x = theta(&UVWord::parse("S1.1", p).unwrap(), 3).unwrap();
        assert_eq!(x.vec, vec![2]);
        assert!(theta(&UVWord::parse("s1.1", p).unwrap(), 1).is_err());
    }

    #[test]
    fn theta_kills_relators() {
        for n in 2..=7 {
            for c in 1..=3 {
                for d in [2, 3] {
                    let q = FiniteQuotient::new(params(n, c), d).unwrap();
                    for rel in defining_relations(params(n, c)) {
                        assert_eq!(q.theta(&rel.relator_word(params(n, c))).unwrap(), q.identity(), "{}", rel.label());
                    }
                }
            }
        }
    }

    #[test]
    fn orders() {
        let o = quotient_order(params(5, 2), 2).unwrap();
        assert_eq!(o.order, BigUint::from(480u32));
        assert!(o.exceeds_n_factorial());
        assert_eq!(o.certificate, Some(SurjectivityCertificate::Closure { elements: 480 }));
        assert_eq!(quotient_order(params(2, 1), 2).unwrap().order, BigUint::from(4u32));
        assert_eq!(quotient_order(params(6, 1), 3).unwrap().order, BigUint::from(2160u32));
    }

    #[test]
    fn large_orders_are_exact_and_structural() {
        let o = quotient_order(params(30, 4), 7).unwrap();
        let expected: BigUint = (1..=30u64).map(BigUint::from).product::<BigUint>() * BigUint::from(7u32).pow(4);
        assert_eq!(o.order, expected);
        assert!(matches!(o.certificate, Some(SurjectivityCertificate::Structural { .. })));
    }

    #[test]
    fn surjective_for_small_parameters() {
        for n in 2..=5 {
            for c in 1..=2 {
                for d in [2u64, 3] {
                    let q = FiniteQuotient::new(params(n, c), d).unwrap();
                    let order = u64::try_from(q.order().unwrap()).unwrap();
                    assert_eq!(q.generated_subgroup_size(CLOSURE_LIMIT), Some(order));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn theta_is_a_homomorphism(u in arb_word(5, 2, 20), v in arb_word(5, 2, 20)) {
            let q = FiniteQuotient::new(u.params(), 3).unwrap();
            let uv = q.theta(&u.concat(&v).unwrap()).unwrap();
            prop_assert_eq!(uv, q.mul(&q.theta(&u).unwrap(), &q.theta(&v).unwrap()));
        }

        #[test]
        fn integer_variant_recovers_sigma_exponents(w in arb_word(5, 3, 30)) {
            let q = FiniteQuotient::new(w.params(), 0).unwrap();
            prop_assert_eq!(q.theta(&w).unwrap().vec, abelianize(&w).sigma_exponents);
        }
    }
}
