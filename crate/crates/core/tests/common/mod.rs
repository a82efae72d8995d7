#![allow(dead_code)]

use gassner_core::braid::{pure_generator, BraidWord};
use gassner_core::rings::{ExponentVector, LaurentPoly};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

/// Product of `len` random `A_{rs}^{±1}` letters.
pub fn random_pure_word<R: Rng>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let mut w = BraidWord::empty(strands);
    for _ in 0..len {
        let r = rng.gen_range(1..strands);
        let s = rng.gen_range(r + 1..=strands);
        let a = pure_generator(r, s, strands).unwrap();
        w = w.concat(&if rng.gen_bool(0.5) { a } else { a.inverse() }).unwrap();
    }
    w
}

pub fn random_word<R: Rng>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let n = (strands - 1) as i32;
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            if rng.gen_bool(0.5) { i } else { -i }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

pub fn laurent(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, nvars), -5i64..=5), 0..5).prop_map(move |terms| {
        LaurentPoly::from_terms(
            nvars,
            terms.into_iter().map(|(e, c)| (ExponentVector::from_slice(&e), BigInt::from(c))),
        )
    })
}

pub fn braid_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let n = (strands - 1) as i32;
    prop::collection::vec((1..=n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        BraidWord::new(strands, ls.into_iter().map(|(i, s)| if s { i } else { -i }).collect()).unwrap()
    })
}
