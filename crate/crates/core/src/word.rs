//! Braid words over the Artin generators.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One signed Artin letter: `index` is 1-based, `sign` is `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidGen {
    pub index: usize,
    pub sign: i8,
}

impl BraidGen {
    pub fn new(index: usize, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        BraidGen { index, sign }
    }

    pub fn inverse(self) -> Self {
        BraidGen {
            index: self.index,
            sign: -self.sign,
        }
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// The empty word is the identity; words on 0 or 1 strands are legal and
/// always empty. Letters are applied left to right (top to bottom of the
/// diagram).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidGen>,
}

impl BraidWord {
    /// The identity word on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(strands: usize, letters: Vec<BraidGen>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index + 1 > strands {
                return Err(Error::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Convenience constructor from signed indices: `2` means σ2, `-2` means σ2⁻¹.
    pub fn from_signed(strands: usize, signed: &[i32]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&x| BraidGen::new(x.unsigned_abs() as usize, if x > 0 { 1 } else { -1 }))
            .collect();
        Self::from_letters(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidGen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: BraidGen) -> Result<()> {
        if letter.index == 0 || letter.index + 1 > self.strands {
            return Err(Error::IndexOutOfRange {
                index: letter.index,
                strands: self.strands,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Concatenation `self · other`; both words must live on the same strand count.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The inverse word (letters reversed, signs flipped).
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| l.inverse())
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Exponent sum of the word (image in the abelianization of the group).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// Image under the canonical projection to the symmetric group;
    /// σ_i maps to the transposition (i, i+1), letters act left to right.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_values_mut(l.index, l.index + 1);
        }
        p
    }

    /// Deletes the strand at top position `s`, producing a word on one
    /// strand fewer. The marked strand's current position is tracked down
    /// the word: a crossing involving it is dropped (toggling the position),
    /// any other crossing is kept and, when it lies above the marked strand,
    /// shifted down by one.
    pub fn delete_strand(&self, s: usize) -> Result<BraidWord> {
        Ok(self.delete_strand_traced(s)?.0)
    }

    /// Same as [`delete_strand`](Self::delete_strand) but also returns the
    /// marked strand's bottom position.
    pub fn delete_strand_traced(&self, s: usize) -> Result<(BraidWord, usize)> {
        if s == 0 || s > self.strands {
            return Err(Error::StrandOutOfRange {
                position: s,
                strands: self.strands,
            });
        }
        let mut p = s;
        let mut letters = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let i = l.index;
            if p == i {
                p = i + 1;
            } else if p == i + 1 {
                p = i;
            } else if i + 1 < p {
                letters.push(*l);
            } else {
                // i > p: the crossing lies entirely above the marked strand
                letters.push(BraidGen::new(i - 1, l.sign));
            }
        }
        Ok((
            BraidWord {
                strands: self.strands - 1,
                letters,
            },
            p,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn permutation_of_single_generator() {
        let p = w(2, &[1]).permutation();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 1);
    }

    #[test]
    fn permutation_of_empty_word_is_identity() {
        assert!(w(3, &[]).permutation().is_identity());
    }

    #[test]
    fn permutation_respects_defining_relation() {
        assert_eq!(w(3, &[1, 2, 1]).permutation(), w(3, &[2, 1, 2]).permutation());
        // both are the transposition (1 3)
        let p = w(3, &[1, 2, 1]).permutation();
        assert_eq!(p.apply(1), 3);
        assert_eq!(p.apply(2), 2);
        assert_eq!(p.apply(3), 1);
    }

    #[test]
    fn permutation_is_homomorphism() {
        let u = w(4, &[1, -3, 2]);
        let v = w(4, &[2, 2, -1]);
        let uv = u.concat(&v).unwrap();
        assert_eq!(uv.permutation(), u.permutation().then(&v.permutation()));
    }

    #[test]
    fn delete_only_strand_of_crossing() {
        assert_eq!(w(2, &[1]).delete_strand(1).unwrap(), w(1, &[]));
        assert_eq!(w(2, &[1, 1]).delete_strand(2).unwrap(), w(1, &[]));
    }

    #[test]
    fn delete_untouched_strand_keeps_word() {
        assert_eq!(w(3, &[1]).delete_strand(3).unwrap(), w(2, &[1]));
    }

    #[test]
    fn delete_reindexes_higher_crossings() {
        // deleting strand 1 of σ2 shifts the crossing down
        assert_eq!(w(3, &[2]).delete_strand(1).unwrap(), w(2, &[1]));
    }

    #[test]
    fn delete_strand_splits_over_concatenation() {
        let u = w(4, &[1, 3, -2]);
        let v = w(4, &[2, -1, 3, 3]);
        let uv = u.concat(&v).unwrap();
        for s in 1..=4 {
            let (du, p) = u.delete_strand_traced(s).unwrap();
            let dv = v.delete_strand(p).unwrap();
            assert_eq!(uv.delete_strand(s).unwrap(), du.concat(&dv).unwrap());
        }
    }

    #[test]
    fn index_bounds_are_validated() {
        assert!(BraidWord::from_signed(2, &[2]).is_err());
        assert!(BraidWord::from_signed(1, &[1]).is_err());
        assert!(BraidWord::from_signed(0, &[]).is_ok());
    }
}
