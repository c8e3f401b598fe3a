//! Randomized invariants across the library, mostly cross-checking
//! independent routes to the same answer.

use proptest::prelude::*;

use braid_core::band::{artin_to_band, band_equal, band_to_artin, bkl_nf, delta_band_word};
use braid_core::free::{act_free, free_reduce, FreeWord};
use braid_core::garside::{braid_equal, delta_word, garside_nf};
use braid_core::inverse::{ef_image, pb_from_word, IBGen, IBWord, PartialBraid};
use braid_core::sampling;
use braid_core::singular::{
    base, conjugate_by, pair_rewrites, positive_closure, singular_nf, PosGen, SBandGen,
    SBandWord,
};
use braid_core::word::{BraidGen, BraidWord};

fn braid_word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, prop::bool::ANY), 0..=max_len).prop_map(move |ls| {
        BraidWord::from_letters(
            n,
            ls.into_iter()
                .map(|(i, pos)| BraidGen::new(i, if pos { 1 } else { -1 }))
                .collect(),
        )
        .unwrap()
    })
}

fn band_word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = SBandWord> {
    prop::collection::vec((2..=n, prop::bool::ANY, 0u8..4), 0..=max_len).prop_map(
        move |ls| {
            SBandWord::from_letters(
                n,
                ls.into_iter()
                    .map(|(t, pos, kind)| {
                        let s = 1 + (kind as usize) % (t - 1);
                        if kind == 3 {
                            SBandGen::B { q: t, p: s }
                        } else {
                            SBandGen::A {
                                t,
                                s,
                                sign: if pos { 1 } else { -1 },
                            }
                        }
                    })
                    .collect(),
            )
            .unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn garside_equality_matches_free_group_action(
        w1 in braid_word_strategy(4, 10),
        w2 in braid_word_strategy(4, 10),
    ) {
        let by_nf = braid_equal(&w1, &w2).unwrap();
        let by_action = act_free(&w1) == act_free(&w2);
        prop_assert_eq!(by_nf, by_action);
    }

    #[test]
    fn garside_nf_is_idempotent_and_faithful(w in braid_word_strategy(5, 12)) {
        let nf = garside_nf(&w);
        prop_assert_eq!(&garside_nf(&nf.to_word()), &nf);
        prop_assert!(braid_equal(&nf.to_word(), &w).unwrap());
        // adjacent factors are left-weighted
        for pair in nf.factors().windows(2) {
            prop_assert_eq!(pair[1].starting_mask() & !pair[0].finishing_mask(), 0);
        }
        for f in nf.factors() {
            prop_assert!(!f.is_identity() && !f.is_delta());
        }
    }

    #[test]
    fn delta_squared_is_central(w in braid_word_strategy(5, 10)) {
        let d2 = delta_word(5).pow(2);
        prop_assert!(braid_equal(&d2.concat(&w).unwrap(), &w.concat(&d2).unwrap()).unwrap());
    }

    #[test]
    fn permutation_is_multiplicative(
        u in braid_word_strategy(5, 8),
        v in braid_word_strategy(5, 8),
    ) {
        let prod = u.concat(&v).unwrap();
        prop_assert_eq!(prod.permutation(), u.permutation().then(&v.permutation()));
    }

    #[test]
    fn delete_strand_respects_concatenation(
        u in braid_word_strategy(5, 8),
        v in braid_word_strategy(5, 8),
        s in 1usize..=5,
    ) {
        let (du, p) = u.delete_strand_traced(s).unwrap();
        let dv = v.delete_strand(p).unwrap();
        let direct = u.concat(&v).unwrap().delete_strand(s).unwrap();
        prop_assert_eq!(direct, du.concat(&dv).unwrap());
    }

    #[test]
    fn free_reduction_is_confluent(letters in prop::collection::vec(-4i32..=4, 0..24), seed in any::<u64>()) {
        let letters: Vec<i32> = letters.into_iter().filter(|&x| x != 0).collect();
        let reference = free_reduce(4, &letters);
        // reduce with a randomized cancellation order
        let mut rng_state = seed;
        let mut work = letters.clone();
        loop {
            let cancel_at: Vec<usize> = (0..work.len().saturating_sub(1))
                .filter(|&k| work[k] == -work[k + 1])
                .collect();
            if cancel_at.is_empty() {
                break;
            }
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let pick = cancel_at[(rng_state >> 33) as usize % cancel_at.len()];
            work.drain(pick..pick + 2);
        }
        prop_assert_eq!(FreeWord::reduced(4, &work), reference);
    }

    #[test]
    fn bkl_and_garside_verdicts_agree(
        w1 in band_word_strategy(4, 8),
        w2 in band_word_strategy(4, 8),
    ) {
        // restrict to the invertible (a-letter) part for the braid engines
        let keep_a = |w: &SBandWord| {
            w.letters().iter().all(|l| matches!(l, SBandGen::A { .. }))
        };
        prop_assume!(keep_a(&w1) && keep_a(&w2));
        let to_band = |w: &SBandWord| {
            braid_core::band::BandWord::from_letters(
                w.strands(),
                w.letters()
                    .iter()
                    .map(|l| match *l {
                        SBandGen::A { t, s, sign } => braid_core::band::BandGen::new(t, s, sign),
                        _ => unreachable!(),
                    })
                    .collect(),
            )
            .unwrap()
        };
        let b1 = to_band(&w1);
        let b2 = to_band(&w2);
        let by_band = band_equal(&b1, &b2).unwrap();
        let by_artin = braid_equal(&band_to_artin(&b1), &band_to_artin(&b2)).unwrap();
        prop_assert_eq!(by_band, by_artin);
    }

    #[test]
    fn singular_nf_is_idempotent(w in band_word_strategy(4, 8)) {
        let nf = singular_nf(&w).unwrap();
        prop_assert_eq!(&singular_nf(&nf.to_word()).unwrap(), &nf);
    }

    #[test]
    fn singular_conjugation_preserves_invariants(
        u in band_word_strategy(4, 6),
        g in braid_word_strategy(4, 5),
    ) {
        let gb = artin_to_band(&g);
        let nf = conjugate_by(&u, &gb).unwrap();
        let (b_before, a_before) = u.b_count_and_a_exponent();
        let (b_after, a_after) = nf.to_word().b_count_and_a_exponent();
        prop_assert_eq!(b_before, b_after);
        prop_assert_eq!(a_before, a_after);
    }

    #[test]
    fn partial_braid_multiplication_is_associative(
        a in ib_word_strategy(4, 6),
        b in ib_word_strategy(4, 6),
        c in ib_word_strategy(4, 6),
    ) {
        let pa = pb_from_word(&a).unwrap();
        let pb_ = pb_from_word(&b).unwrap();
        let pc = pb_from_word(&c).unwrap();
        let left = pa.multiply(&pb_).unwrap().multiply(&pc).unwrap();
        let right = pa.multiply(&pb_.multiply(&pc).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_monoid_axioms_hold(a in ib_word_strategy(5, 8)) {
        let pa = pb_from_word(&a).unwrap();
        let inv = pa.inverse();
        prop_assert_eq!(&pa.multiply(&inv).unwrap().multiply(&pa).unwrap(), &pa);
        prop_assert_eq!(&inv.multiply(&pa).unwrap().multiply(&inv).unwrap(), &inv);
    }

    #[test]
    fn triple_equality_matches_ef_oracle(
        a in ib_word_strategy(4, 7),
        b in ib_word_strategy(4, 7),
    ) {
        let by_triple = pb_from_word(&a).unwrap() == pb_from_word(&b).unwrap();
        let by_iso = ef_image(&a).unwrap() == ef_image(&b).unwrap();
        prop_assert_eq!(by_triple, by_iso);
    }
}

fn ib_word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = IBWord> {
    prop::collection::vec((0u8..3, 1..=n, prop::bool::ANY), 0..=max_len).prop_map(
        move |ls| {
            IBWord::from_letters(
                n,
                ls.into_iter()
                    .map(|(kind, i, pos)| match kind {
                        0 => IBGen::Eps { i },
                        _ => IBGen::Sigma {
                            i: 1 + (i - 1) % (n - 1),
                            sign: if pos { 1 } else { -1 },
                        },
                    })
                    .collect(),
            )
            .unwrap()
        },
    )
}

#[test]
fn closure_members_share_base_and_length() {
    let mut r = sampling::rng(17);
    for _ in 0..20 {
        let w = sampling::random_sband_word(&mut r, 4, 5, false, 0.4);
        let letters = w.positive_letters().unwrap();
        let closure = positive_closure(&letters).unwrap();
        let expect = base(&letters).unwrap();
        for member in &closure {
            assert_eq!(member.len(), letters.len());
            assert_eq!(base(member).unwrap(), expect);
        }
    }
}

#[test]
fn rewrites_are_length_preserving_and_symmetric() {
    for n in 2..=6 {
        for x in braid_core::singular::all_generators(n) {
            for y in braid_core::singular::all_generators(n) {
                for (x2, y2) in pair_rewrites(x, y) {
                    // every relation equates two-letter words
                    assert!(pair_rewrites(x2, y2).contains(&(x, y)));
                }
            }
        }
    }
}

#[test]
fn delta_conjugation_on_b_letters() {
    // b_ts δ ≐ δ b_(t+1)(s+1) with wraparound, checked through the normal form
    for n in 2..=5usize {
        let delta: Vec<SBandGen> = delta_band_word(n)
            .letters()
            .iter()
            .map(|l| SBandGen::A {
                t: l.t,
                s: l.s,
                sign: l.sign,
            })
            .collect();
        for t in 2..=n {
            for s in 1..t {
                let lhs = SBandWord::from_letters(
                    n,
                    std::iter::once(SBandGen::B { q: t, p: s })
                        .chain(delta.iter().cloned())
                        .collect(),
                )
                .unwrap();
                let cycled = PosGen::b(t, s).cycled(n, true);
                let rhs = SBandWord::from_letters(
                    n,
                    delta
                        .iter()
                        .cloned()
                        .chain(std::iter::once(SBandGen::B {
                            q: cycled.hi,
                            p: cycled.lo,
                        }))
                        .collect(),
                )
                .unwrap();
                assert!(braid_core::singular::singular_equal(&lhs, &rhs).unwrap());
            }
        }
    }
}

#[test]
fn epsilon_idempotents_commute() {
    // all partial identities commute pairwise
    let n = 4;
    let subsets: Vec<Vec<usize>> = (0..(1 << n))
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    let eps_of = |missing: &Vec<usize>| {
        let mut acc = PartialBraid::identity(n);
        for &i in missing {
            acc = acc.multiply(&PartialBraid::epsilon(n, i).unwrap()).unwrap();
        }
        acc
    };
    for a in &subsets {
        for b in &subsets {
            let ea = eps_of(a);
            let eb = eps_of(b);
            assert!(ea.is_idempotent());
            assert_eq!(
                ea.multiply(&eb).unwrap(),
                eb.multiply(&ea).unwrap()
            );
        }
    }
}

#[test]
fn bkl_nf_factors_are_left_weighted_divisors() {
    let mut r = sampling::rng(5);
    for _ in 0..30 {
        let w = sampling::random_band_word(&mut r, 5, 10);
        let nf = bkl_nf(&w);
        assert!(band_equal(&nf.to_band_word(), &w).unwrap());
        for f in nf.factors() {
            assert!(!f.is_identity() && !f.is_delta());
        }
        for pair in nf.factors().windows(2) {
            assert!(pair[0].complement().refine_meet(&pair[1]).is_identity());
        }
    }
}
