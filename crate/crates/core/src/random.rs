//! Seeded random words for the randomized sweeps.

use rand::Rng;

use crate::words::{Letter, Params, Sign, UVWord};

/// A word of exactly `len` letters drawn uniformly from
/// `{ρ_i} ∪ {σ_{i,t}^{±1}}`.
pub fn random_word<R: Rng + ?Sized>(params: Params, len: usize, rng: &mut R) -> UVWord {
    let strands = params.n.saturating_sub(1);
    if strands == 0 {
        return UVWord::identity(params);
    }
    // ρ letters plus both signs of each σ letter
    let alphabet = strands * (1 + 2 * params.c);
    let letters = (0..len)
        .map(|_| {
            let k = rng.random_range(0..alphabet);
            let i = k % strands + 1;
            match k / strands {
                0 => Letter::Rho(i),
                r => {
                    let r = r - 1;
                    let sign = if r % 2 == 0 { Sign::Pos } else { Sign::Neg };
                    Letter::Sigma { i, t: r / 2 + 1, sign }
                }
            }
        })
        .collect();
    UVWord::new(params, letters).expect("generated letters are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn covers_the_alphabet_deterministically() {
        let params = Params::new(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let w = random_word(params, 2000, &mut rng);
        assert_eq!(w.len(), 2000);
        let mut distinct: Vec<Letter> = w.letters().to_vec();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 2 * (1 + 2 * 2));
        let mut again = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(random_word(params, 2000, &mut again), w);
        assert!(random_word(Params::new(1, 1).unwrap(), 5, &mut rng).is_empty());
    }
}
