//! Garside normal form for the braid group.

use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationBraid};
use crate::word::{BraidGen, BraidWord};

/// Garside's fundamental word Δ on n strands:
/// σ1…σ_{n−1} σ1…σ_{n−2} … σ1.
pub fn delta_word(n: usize) -> BraidWord {
    let mut letters = Vec::new();
    if n >= 2 {
        for k in (1..n).rev() {
            for i in 1..=k {
                letters.push(BraidGen::new(i, 1));
            }
        }
    }
    BraidWord::from_letters(n, letters).expect("delta word is valid")
}

/// The left-greedy normal form Δ^power · A_1 ⋯ A_k, where the A_i are
/// positive permutation braids, none equal to the identity or to Δ, and each
/// adjacent pair is left-weighted. The representation is unique per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNF {
    strands: usize,
    power: i64,
    factors: Vec<PermutationBraid>,
}

impl GarsideNF {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.factors.is_empty()
    }

    /// Canonical word: Δ^power followed by the factor words.
    pub fn to_word(&self) -> BraidWord {
        let mut w = delta_word(self.strands).pow(self.power);
        for f in &self.factors {
            for i in f.word() {
                w.push(BraidGen::new(i, 1)).expect("factor letters are in range");
            }
        }
        w
    }

    /// Exponent sum of the element.
    pub fn exponent_sum(&self) -> i64 {
        let n = self.strands as i64;
        self.power * n * (n - 1) / 2
            + self.factors.iter().map(|f| f.len() as i64).sum::<i64>()
    }

    /// The permutation the element projects to.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        let mut p = if self.power.rem_euclid(2) == 0 {
            Permutation::identity(n)
        } else {
            Permutation::reversal(n)
        };
        for f in &self.factors {
            p = p.then(f.permutation());
        }
        p
    }

    pub fn inverse(&self) -> GarsideNF {
        garside_nf(&self.to_word().inverse())
    }

    /// Factors of the right-greedy form Δ^power · B_1 ⋯ B_k (same power,
    /// factors right-weighted). Derived from the left form of the reversed
    /// word, so it is a formatting variant of the same data.
    pub fn right_greedy_factors(&self) -> Vec<PermutationBraid> {
        let rev_word = {
            let w = self.to_word();
            let letters = w.letters().iter().rev().cloned().collect();
            BraidWord::from_letters(self.strands, letters).unwrap()
        };
        let nf = garside_nf(&rev_word);
        debug_assert_eq!(nf.power, self.power);
        let mut out: Vec<PermutationBraid> = nf
            .factors
            .iter()
            .rev()
            .map(|f| PermutationBraid::from_permutation(f.permutation().inverse()))
            .collect();
        if self.power.rem_euclid(2) == 1 {
            for f in &mut out {
                f.flip();
            }
        }
        out
    }
}

/// Makes the adjacent pair (left, right) left-weighted by sliding material
/// from the head of `right` into `left`. Returns true if anything moved.
fn weight_pair(left: &mut PermutationBraid, right: &mut PermutationBraid) -> bool {
    let mut changed = false;
    loop {
        let movable = right.starting_mask() & !left.finishing_mask();
        if movable == 0 {
            return changed;
        }
        let i = movable.trailing_zeros() as usize;
        left.mul_generator_right(i);
        right.div_generator_left(i);
        changed = true;
    }
}

/// Left-greedy normalization of a positive factor list. Identity factors are
/// removed; on return every adjacent pair is left-weighted, so all Δ factors
/// sit at the front.
fn normalize(factors: &mut Vec<PermutationBraid>) {
    factors.retain(|f| !f.is_identity());
    let mut i = 1;
    while i < factors.len() {
        let (a, b) = factors.split_at_mut(i);
        let changed = weight_pair(&mut a[i - 1], &mut b[0]);
        if factors[i].is_identity() {
            factors.remove(i);
            if i > 1 {
                i -= 1;
            }
        } else if changed && i > 1 {
            i -= 1;
        } else {
            i += 1;
        }
    }
    debug_assert!(is_left_weighted(factors));
}

fn is_left_weighted(factors: &[PermutationBraid]) -> bool {
    factors
        .windows(2)
        .all(|w| w[1].starting_mask() & !w[0].finishing_mask() == 0)
}

/// Computes the Garside normal form of a braid word.
///
/// Negative letters are absorbed through σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹) and the
/// accumulated Δ⁻¹ powers are pushed to the left; the remaining positive part
/// is then put in left-greedy form and leading Δ factors merge into the power.
pub fn garside_nf(w: &BraidWord) -> GarsideNF {
    let n = w.strands();
    let neg_total = w.letters().iter().filter(|l| l.sign < 0).count() as i64;

    // Conjugation by Δ is an involution (σ_i ↦ σ_{n−i}); a factor created at
    // position j must be flipped once per negative letter to its right.
    let mut negs_after = neg_total;
    let mut flips = Vec::with_capacity(w.len());
    for l in w.letters() {
        if l.sign < 0 {
            negs_after -= 1;
        }
        flips.push(negs_after % 2 == 1);
    }

    let mut factors: Vec<PermutationBraid> = Vec::with_capacity(w.len());
    for (l, flip) in w.letters().iter().zip(flips) {
        let mut f = if l.sign > 0 {
            PermutationBraid::generator(n, l.index)
        } else {
            PermutationBraid::delta_over_generator(n, l.index)
        };
        if flip {
            f.flip();
        }
        factors.push(f);
    }

    normalize(&mut factors);

    let mut power = -neg_total;
    let mut start = 0;
    while start < factors.len() && factors[start].is_delta() {
        power += 1;
        start += 1;
    }
    factors.drain(..start);

    GarsideNF {
        strands: n,
        power,
        factors,
    }
}

/// Decides whether two words represent the same element of the braid group.
pub fn braid_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch {
            left: w1.strands(),
            right: w2.strands(),
        });
    }
    Ok(garside_nf(w1) == garside_nf(w2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta_word(2), w(2, &[1]));
        assert_eq!(delta_word(3), w(3, &[1, 2, 1]));
        assert_eq!(delta_word(1), w(1, &[]));
    }

    #[test]
    fn delta_permutation_is_reversal() {
        let p = delta_word(4).permutation();
        assert_eq!(p.images(), &[4, 3, 2, 1]);
    }

    #[test]
    fn nf_of_delta_is_bare_power() {
        let nf = garside_nf(&w(3, &[1, 2, 1]));
        assert_eq!(nf.power(), 1);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn nf_of_empty_word() {
        let nf = garside_nf(&w(3, &[]));
        assert_eq!(nf.power(), 0);
        assert!(nf.factors().is_empty());
        let nf0 = garside_nf(&w(0, &[]));
        assert!(nf0.is_identity());
    }

    #[test]
    fn nf_of_negative_generator() {
        // Oracle (kept below in `delta_over_sigma1_oracle`): the unique
        // positive 2-letter word equal to Δσ1⁻¹ in Br_3 is σ1σ2, whose
        // permutation is [3,1,2].
        let nf = garside_nf(&w(3, &[-1]));
        assert_eq!(nf.power(), -1);
        assert_eq!(nf.factors().len(), 1);
        assert_eq!(nf.factors()[0].permutation().images(), &[3, 1, 2]);
    }

    #[test]
    fn delta_over_sigma1_oracle() {
        // brute force over positive words of length ≤ 2: which equal Δσ1⁻¹?
        // independence: compare via the free-group action, not via garside_nf.
        use crate::free::act_free;
        let target = act_free(&w(3, &[1, 2, 1, -1]));
        let mut hits = Vec::new();
        for a in 1..3 {
            for b in 1..3 {
                let cand = w(3, &[a, b]);
                if act_free(&cand) == target {
                    hits.push((a, b));
                }
            }
        }
        assert_eq!(hits, vec![(1, 2)]);
        assert_eq!(w(3, &[1, 2]).permutation().images(), &[3, 1, 2]);
    }

    #[test]
    fn nf_is_idempotent() {
        for signed in [
            vec![1, 2, -1, 2, 2, -1],
            vec![-1, -2, -1],
            vec![2, 2, 2, 1, -2, 1],
        ] {
            let nf = garside_nf(&w(3, &signed));
            let nf2 = garside_nf(&nf.to_word());
            assert_eq!(nf, nf2);
        }
    }

    #[test]
    fn braid_relation_equalities() {
        assert!(braid_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(!braid_equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(braid_equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(braid_equal(&w(2, &[1, -1]), &w(2, &[])).unwrap());
    }

    #[test]
    fn strand_mismatch_is_reported() {
        assert!(braid_equal(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn delta_squared_is_central() {
        let d2 = delta_word(4).pow(2);
        for signed in [vec![1, -2, 3], vec![3, 3, 1], vec![-2, -2, 1, 3]] {
            let x = w(4, &signed);
            let lhs = d2.concat(&x).unwrap();
            let rhs = x.concat(&d2).unwrap();
            assert!(braid_equal(&lhs, &rhs).unwrap());
        }
    }

    #[test]
    fn right_greedy_agrees_with_element() {
        for signed in [vec![1, 2, -1, 2], vec![-1, 2, -1], vec![1, 1, 2, 1]] {
            let nf = garside_nf(&w(3, &signed));
            let mut word = delta_word(3).pow(nf.power());
            for f in nf.right_greedy_factors() {
                for i in f.word() {
                    word.push(BraidGen::new(i, 1)).unwrap();
                }
            }
            assert!(braid_equal(&word, &w(3, &signed)).unwrap());
        }
    }
}
