mod common;

use gassner_core::braid::{full_twist, permutation_image, pure_generator, pure_generators, BraidWord, Permutation};
use gassner_core::Error;
use proptest::prelude::*;

#[test]
fn permutation_examples() {
    let s1 = BraidWord::generator(3, 1).unwrap();
    assert_eq!(permutation_image(&s1), Permutation::transposition(3, 0, 1));
    assert!(permutation_image(&s1.pow(2)).is_identity());
    let a = BraidWord::new(3, vec![1, 2, 1]).unwrap();
    let b = BraidWord::new(3, vec![2, 1, 2]).unwrap();
    assert_eq!(permutation_image(&a), permutation_image(&b));
    assert_eq!(permutation_image(&a), Permutation::transposition(3, 0, 2));
}

#[test]
fn pure_generator_examples() {
    assert_eq!(pure_generator(1, 2, 3).unwrap().letters(), &[1, 1]);
    let a13 = pure_generator(1, 3, 3).unwrap();
    assert_eq!(a13.letters(), &[-2, 1, 1, 2]);
    assert!(permutation_image(&a13).is_identity());
    assert!(matches!(pure_generator(2, 2, 3), Err(Error::IndexOutOfRange(_))));
    assert!(matches!(pure_generator(1, 4, 3), Err(Error::IndexOutOfRange(_))));
}

#[test]
fn full_twist_examples() {
    assert_eq!(full_twist(1, 2, 2).unwrap().letters(), &[1]);
    assert_eq!(full_twist(1, 3, 3).unwrap().letters(), &[1, 2, 1]);
    assert!(permutation_image(&full_twist(1, 4, 4).unwrap().pow(2)).is_identity());
    assert_eq!(full_twist(2, 4, 5).unwrap().letters(), &[2, 3, 2]);
    assert!(full_twist(3, 3, 4).is_err());
}

#[test]
fn pure_generators_are_pure() {
    for strands in 2..=8 {
        let gens = pure_generators(strands);
        assert_eq!(gens.len(), strands * (strands - 1) / 2);
        for (_, w) in gens {
            assert!(w.is_pure());
        }
    }
}

#[test]
fn twists_square_to_pure() {
    for strands in 2..=8 {
        for a in 1..strands {
            for b in a + 1..=strands {
                assert!(full_twist(a, b, strands).unwrap().pow(2).is_pure());
            }
        }
    }
}

#[test]
fn parsing_and_display() {
    let w = BraidWord::parse(4, "s1 s2^-1 s3^2").unwrap();
    assert_eq!(w.letters(), &[1, -2, 3, 3]);
    assert_eq!(w.to_string(), "s1 s2^-1 s3 s3");
    assert_eq!(BraidWord::parse(4, &w.to_string()).unwrap(), w);
    assert!(BraidWord::parse(3, "s3").is_err());
    assert!(BraidWord::new(3, vec![0]).is_err());
    assert!(matches!(BraidWord::generator(3, 1).unwrap().require_pure(), Err(Error::NonPureWord(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn permutation_image_is_a_homomorphism(u in common::braid_word(6, 12), v in common::braid_word(6, 12)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(permutation_image(&uv), permutation_image(&u).compose(&permutation_image(&v)));
        prop_assert!(permutation_image(&u.concat(&u.inverse()).unwrap()).is_identity());
        prop_assert_eq!(permutation_image(&u.inverse()), permutation_image(&u).inverse());
    }
}
