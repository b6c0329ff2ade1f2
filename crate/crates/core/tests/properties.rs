use proptest::prelude::*;

use braidtrace::braid::{BraidWord, Sign};
use braidtrace::hecke::{perm_length, reduced_word, HeckeElement};
use braidtrace::invariants::{homfly_of_braid, jones_of_braid};
use braidtrace::laurent::{LaurentPoly, TraceValue};
use braidtrace::trace::trace_of_braid;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -4i32..=4, -3i32..=3), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn value() -> impl Strategy<Value = TraceValue> {
    (poly(), 0u32..4).prop_map(|(p, k)| TraceValue::new(p, k))
}

fn word(max_rank: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_rank).prop_flat_map(move |rank| {
        let letter = if rank == 1 {
            Just(0).boxed()
        } else {
            (1..rank as i32, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }).boxed()
        };
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| {
            let letters = l.into_iter().filter(|&x| x != 0).collect();
            BraidWord::new(rank, letters).unwrap()
        })
    })
}

fn word_pair(rank: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    let letter = (1..rank as i32, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i });
    let w = prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(rank, l).unwrap());
    (w.clone(), w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(x in poly(), d in nonzero_poly()) {
        prop_assert_eq!((&x * &d).div_exact(&d).unwrap(), x);
    }

    #[test]
    fn poly_text_round_trip(x in poly()) {
        prop_assert_eq!(x.to_string().parse::<LaurentPoly>().unwrap(), x.clone());
        prop_assert_eq!(x.to_canonical_string().parse::<LaurentPoly>().unwrap(), x);
    }

    #[test]
    fn trace_values_stay_canonical(x in value(), y in value()) {
        let s = &x + &y;
        let p = &x * &y;
        prop_assert!(s.is_canonical());
        prop_assert!(p.is_canonical());
        prop_assert!((&s - &y).cross_eq(&x));
        prop_assert_eq!(&s - &y, x.clone());
        prop_assert_eq!(TraceValue::new(x.numerator_at(x.denom_exp() + 2), x.denom_exp() + 2), x);
    }

    #[test]
    fn trace_value_text_round_trip(x in value()) {
        prop_assert_eq!(x.to_string().parse::<TraceValue>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<TraceValue>(&json).unwrap(), x);
    }

    #[test]
    fn braid_word_text_round_trip(w in word(6, 12)) {
        prop_assert_eq!(BraidWord::parse(&w.to_string(), Some(w.rank())).unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<BraidWord>(&json).unwrap(), w);
    }

    #[test]
    fn free_reduction(w in word(5, 14)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert_eq!(r.permutation(), w.permutation());
        prop_assert!(r.letters().windows(2).all(|p| p[0] != -p[1]));
        prop_assert_eq!(trace_of_braid(&r), trace_of_braid(&w));
    }

    #[test]
    fn component_counts(w in word(5, 10)) {
        let c = w.closure_component_count();
        prop_assert_eq!(w.stabilize(Sign::Positive).closure_component_count(), c);
        prop_assert_eq!(w.shift_disjoint().closure_component_count(), c + 1);
        prop_assert_eq!(w.permutation().cycle_count(), c);
    }

    #[test]
    fn reduced_words_have_permutation_length(w in word(6, 12)) {
        let p = w.permutation();
        let rw = reduced_word(&p);
        prop_assert_eq!(rw.len(), perm_length(&p));
        let letters = rw.iter().map(|&i| i as i32).collect();
        prop_assert_eq!(BraidWord::new(w.rank(), letters).unwrap().permutation(), p);
    }

    #[test]
    fn hecke_product_of_words((u, v) in word_pair(4, 6), w in word_pair(4, 4).prop_map(|p| p.0)) {
        let (hu, hv, hw) = (
            HeckeElement::from_braid_word(&u),
            HeckeElement::from_braid_word(&v),
            HeckeElement::from_braid_word(&w),
        );
        prop_assert_eq!(HeckeElement::from_braid_word(&u.concat(&v).unwrap()), hu.mul(&hv).unwrap());
        prop_assert_eq!(hu.mul(&hv).unwrap().mul(&hw).unwrap(), hu.mul(&hv.mul(&hw).unwrap()).unwrap());
        prop_assert!(!hu.involves_a());
    }

    #[test]
    fn trace_is_a_class_function((u, v) in word_pair(5, 6)) {
        let uv = u.concat(&v).unwrap();
        let vu = v.concat(&u).unwrap();
        prop_assert_eq!(trace_of_braid(&uv), trace_of_braid(&vu));
    }

    #[test]
    fn relation_rewrites_preserve_hecke_image(w in word(5, 8), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let s = w.scramble(&mut rng, 6);
        prop_assert_eq!(HeckeElement::from_braid_word(&s), HeckeElement::from_braid_word(&w));
    }

    #[test]
    fn markov_moves_preserve_invariants(w in word(4, 8), neg in any::<bool>()) {
        let sign = if neg { Sign::Negative } else { Sign::Positive };
        let s = w.stabilize(sign);
        prop_assert_eq!(homfly_of_braid(&s), homfly_of_braid(&w));
        prop_assert_eq!(jones_of_braid(&s).unwrap(), jones_of_braid(&w).unwrap());
    }
}
