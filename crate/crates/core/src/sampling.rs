//! Seeded random word generators used by the benchmark and the test
//! harnesses; fixed seeds keep every run reproducible.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::band::{BandGen, BandWord};
use crate::inverse::{IBGen, IBWord};
use crate::singular::{SBandGen, SBandWord};
use crate::word::{BraidGen, BraidWord};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_braid_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    assert!(n >= 2);
    let letters = (0..len)
        .map(|_| {
            BraidGen::new(
                rng.gen_range(1..n),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            )
        })
        .collect();
    BraidWord::from_letters(n, letters).expect("indices in range")
}

pub fn random_band_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BandWord {
    assert!(n >= 2);
    let letters = (0..len)
        .map(|_| {
            let t = rng.gen_range(2..=n);
            let s = rng.gen_range(1..t);
            BandGen::new(t, s, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    BandWord::from_letters(n, letters).expect("indices in range")
}

/// A singular band word; `negative` admits a-letter inverses, `b_share` is
/// the chance of a singular letter.
pub fn random_sband_word(
    rng: &mut ChaCha8Rng,
    n: usize,
    len: usize,
    negative: bool,
    b_share: f64,
) -> SBandWord {
    assert!(n >= 2);
    let letters = (0..len)
        .map(|_| {
            let t = rng.gen_range(2..=n);
            let s = rng.gen_range(1..t);
            if rng.gen_bool(b_share) {
                SBandGen::B { q: t, p: s }
            } else {
                SBandGen::A {
                    t,
                    s,
                    sign: if negative && rng.gen_bool(0.5) { -1 } else { 1 },
                }
            }
        })
        .collect();
    SBandWord::from_letters(n, letters).expect("indices in range")
}

pub fn random_ib_word(rng: &mut ChaCha8Rng, n: usize, len: usize, eps_share: f64) -> IBWord {
    assert!(n >= 2);
    let letters = (0..len)
        .map(|_| {
            if rng.gen_bool(eps_share) {
                IBGen::Eps {
                    i: rng.gen_range(1..=n),
                }
            } else {
                IBGen::Sigma {
                    i: rng.gen_range(1..n),
                    sign: if rng.gen_bool(0.5) { 1 } else { -1 },
                }
            }
        })
        .collect();
    IBWord::from_letters(n, letters).expect("indices in range")
}

/// A word equivalent to `w` by construction: random free insertions of
/// cancelling pairs, far commutations and braid-relation moves.
pub fn equivalent_braid_word(rng: &mut ChaCha8Rng, w: &BraidWord, moves: usize) -> BraidWord {
    let n = w.strands();
    let mut letters: Vec<BraidGen> = w.letters().to_vec();
    for _ in 0..moves {
        match rng.gen_range(0..4) {
            // insert a cancelling pair
            0 if n >= 2 => {
                let i = rng.gen_range(1..n);
                let pos = rng.gen_range(0..=letters.len());
                let sign: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
                letters.insert(pos, BraidGen::new(i, -sign));
                letters.insert(pos, BraidGen::new(i, sign));
            }
            // far commutation
            1 if letters.len() >= 2 => {
                let pos = rng.gen_range(0..letters.len() - 1);
                let (a, b) = (letters[pos], letters[pos + 1]);
                if a.index.abs_diff(b.index) > 1 {
                    letters.swap(pos, pos + 1);
                }
            }
            // braid relation σᵢσᵢ₊₁σᵢ ↔ σᵢ₊₁σᵢσᵢ₊₁ on a positive or
            // negative run
            2 if letters.len() >= 3 => {
                let pos = rng.gen_range(0..letters.len() - 2);
                let (a, b, c) = (letters[pos], letters[pos + 1], letters[pos + 2]);
                if a.sign == b.sign && b.sign == c.sign && a.index == c.index {
                    let (i, j) = (a.index, b.index);
                    if i.abs_diff(j) == 1 {
                        letters[pos] = BraidGen::new(j, a.sign);
                        letters[pos + 1] = BraidGen::new(i, a.sign);
                        letters[pos + 2] = BraidGen::new(j, a.sign);
                    }
                }
            }
            // delete a cancelling pair
            _ => {
                if let Some(pos) = (0..letters.len().saturating_sub(1))
                    .find(|&k| letters[k] == letters[k + 1].inverse())
                {
                    letters.drain(pos..pos + 2);
                }
            }
        }
    }
    BraidWord::from_letters(n, letters).expect("moves preserve validity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::braid_equal;

    #[test]
    fn equivalent_words_stay_equal() {
        let mut r = rng(7);
        for _ in 0..20 {
            let w = random_braid_word(&mut r, 4, 10);
            let v = equivalent_braid_word(&mut r, &w, 12);
            assert!(braid_equal(&w, &v).unwrap());
        }
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let w1 = random_braid_word(&mut rng(42), 5, 12);
        let w2 = random_braid_word(&mut rng(42), 5, 12);
        assert_eq!(w1, w2);
    }
}
