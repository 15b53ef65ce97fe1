use mzeta_core::admissible::word_to_admissible;
use mzeta_core::stats;
use mzeta_core::unitary::{unitary_factor_scan, Cyclotomics, ScanBounds};
use mzeta_core::{BiPoly, BlockContext, Composition, SignedPermutation, Word};
use num::{BigInt, BigRational};
use proptest::prelude::*;

/// A composition with 1–4 parts of size 1–3 and a shuffle of its trivial word.
fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(1usize..=3, 1..=4).prop_flat_map(|parts| {
        let eta = Composition::new(parts).unwrap();
        Just(eta.trivial_letters())
            .prop_shuffle()
            .prop_map(move |letters| Word::new(eta.clone(), letters).unwrap())
    })
}

fn signed(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(abs, signs)| {
            let window = abs
                .into_iter()
                .zip(signs)
                .map(|(v, neg)| if neg { -v } else { v })
                .collect();
            SignedPermutation::new(window).unwrap()
        })
}

fn poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..5, 0u32..4, -6i64..=6), 0..8).prop_map(BiPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = BiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn den_transports_denh(w in word()) {
        let eta = w.composition().clone();
        let ctx = BlockContext::new(eta);
        let sigma = word_to_admissible(&w);
        prop_assert!(ctx.is_admissible(&sigma));
        prop_assert_eq!(ctx.den(&sigma).unwrap(), w.denh());
        prop_assert_eq!(ctx.iexc(&sigma), w.exc());
        prop_assert_eq!(ctx.admissible_to_word(&sigma).unwrap(), w);
    }

    #[test]
    fn n_plus_splits_into_inv_and_imv_parts(w in word()) {
        let ctx = BlockContext::new(w.composition().clone());
        let sigma = word_to_admissible(&w);
        let (weak, strict) = ctx.n_plus_split(&sigma);
        prop_assert_eq!(weak.len(), stats::inv(&w.nonexceeding_subword()));
        prop_assert_eq!(
            strict.len(),
            stats::imv(&w.exceeding_subword()) + ctx.n_minus_set(&sigma).len() + ctx.iexc(&sigma)
        );
    }

    #[test]
    fn word_statistics_are_consistent(w in word()) {
        let des = w.descent_set();
        prop_assert_eq!(w.des(), des.len());
        prop_assert_eq!(w.maj(), des.iter().sum::<usize>());
        let parts = w.denh_parts();
        prop_assert_eq!(parts.exc_sum, w.exc_set().iter().sum::<usize>());
        prop_assert_eq!(w.exceeding_subword().len(), w.exc());
        prop_assert_eq!(w.exceeding_subword().len() + w.nonexceeding_subword().len(), w.n());
        // standardisation keeps descents
        prop_assert_eq!(w.standardize().descent_set(), des);
    }

    #[test]
    fn signed_statistics_identities(s in signed(7)) {
        let b = s.b_stats();
        let (des, maj) = s.type_a_stats();
        prop_assert_eq!(b.fdes, 2 * des + usize::from(s.window()[0] < 0));
        prop_assert_eq!(b.fmaj, 2 * maj + b.neg);
        prop_assert!(s.excabs() >= b.neg);
        if s.is_even() {
            let d = s.d_stats().unwrap();
            let neg_sum: i64 = s.window().iter().filter(|&&v| v < -1).sum();
            prop_assert_eq!(d.nsp as i64, -neg_sum - d.dneg as i64);
            prop_assert_eq!(d.ddes, des + d.dneg);
        } else {
            prop_assert!(s.d_stats().is_err());
        }
    }

    #[test]
    fn multiplication_is_exact_and_invertible(f in poly(), g in nonzero_poly()) {
        let fg = &f * &g;
        prop_assert_eq!(&fg, &(&g * &f));
        prop_assert_eq!(fg.divide_exact(&g).unwrap(), Some(f.clone()));
        let x = BigRational::new(BigInt::from(3), BigInt::from(7));
        let y = BigRational::new(BigInt::from(-5), BigInt::from(2));
        prop_assert_eq!(fg.eval(&x, &y), f.eval(&x, &y) * g.eval(&x, &y));
        prop_assert_eq!(&(&fg - &fg), &BiPoly::zero());
    }

    #[test]
    fn divide_exact_never_lies(f in poly(), g in nonzero_poly()) {
        if let Some(h) = f.divide_exact(&g).unwrap() {
            prop_assert_eq!(&g * &h, f);
        }
    }

    #[test]
    fn json_round_trips(f in poly()) {
        let text = f.to_json();
        prop_assert_eq!(BiPoly::from_json(&text).unwrap(), f);
    }

    #[test]
    fn scan_detects_planted_unitary_factors(
        g in nonzero_poly(),
        d in 1usize..=6,
        a in 0u32..=2,
        b in 1u32..=2,
    ) {
        let factor = BiPoly::compose_monomial(&Cyclotomics::new().get(d), a, b);
        let f = &g * &factor;
        let found = unitary_factor_scan(&f, ScanBounds { max_a: 2, max_b: 2, max_d: 6 });
        prop_assert!(found.iter().any(|u| u.factor == factor));
        for u in found {
            prop_assert!(f.divide_exact(&u.factor).unwrap().is_some());
        }
    }
}
