use proptest::prelude::*;

use crate::words::{Letter, Params, Sign, UVWord};

pub(crate) fn arb_word(n: usize, c: usize, max_len: usize) -> impl Strategy<Value = UVWord> {
    let letter = prop_oneof![
        (1..n).prop_map(Letter::Rho),
        (1..n, 1..=c, any::<bool>()).prop_map(|(i, t, pos)| Letter::Sigma {
            i,
            t,
            sign: if pos { Sign::Pos } else { Sign::Neg },
        }),
    ];
    proptest::collection::vec(letter, 0..=max_len)
        .prop_map(move |ls| UVWord::new(Params::new(n, c).unwrap(), ls).unwrap())
}
