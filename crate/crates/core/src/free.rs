//! Reduced words in a free group, braid automorphisms and the monoid of
//! partial isomorphisms of braid-conjugation type.

use crate::word::BraidWord;

/// A word in the free group F_rank, letters encoded as ±index (1-based).
/// Construction through [`FreeWord::reduced`] keeps words freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn empty(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= rank);
        FreeWord {
            rank,
            letters: vec![i as i32],
        }
    }

    /// Builds a reduced word from arbitrary letters.
    pub fn reduced(rank: usize, letters: &[i32]) -> Self {
        let mut buf: Vec<i32> = Vec::with_capacity(letters.len());
        for &x in letters {
            debug_assert!(x != 0 && x.unsigned_abs() as usize <= rank);
            if buf.last().is_some_and(|&y| x == -y) {
                buf.pop();
            } else {
                buf.push(x);
            }
        }
        FreeWord {
            rank,
            letters: buf,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord::reduced(self.rank, &letters)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&x| -x).collect(),
        }
    }

    /// w ↦ c⁻¹ w c.
    pub fn conjugate_by(&self, c: &FreeWord) -> FreeWord {
        c.inverse().concat(self).concat(c)
    }

    /// Replaces every letter ±i by images[i−1]^{±1} and reduces.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Vec::new();
        for &x in &self.letters {
            let img = &images[(x.unsigned_abs() as usize) - 1];
            if x > 0 {
                out.extend_from_slice(&img.letters);
            } else {
                out.extend(img.letters.iter().rev().map(|&y| -y));
            }
        }
        FreeWord::reduced(rank, &out)
    }
}

/// Free reduction exposed as the plain operation on letter slices.
pub fn free_reduce(rank: usize, letters: &[i32]) -> FreeWord {
    FreeWord::reduced(rank, letters)
}

/// An automorphism of F_rank given by the reduced images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        FreeAutomorphism {
            rank,
            images: (1..=rank).map(|i| FreeWord::generator(rank, i)).collect(),
        }
    }

    pub fn from_images(rank: usize, images: Vec<FreeWord>) -> Self {
        debug_assert_eq!(images.len(), rank);
        FreeAutomorphism { rank, images }
    }

    /// The braid generator σ_i^{±1} acting on F_n:
    /// x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1} (inverse accordingly).
    pub fn braid_generator(rank: usize, i: usize, sign: i8) -> Self {
        let mut images: Vec<FreeWord> =
            (1..=rank).map(|j| FreeWord::generator(rank, j)).collect();
        let xi = FreeWord::generator(rank, i);
        let xi1 = FreeWord::generator(rank, i + 1);
        if sign > 0 {
            images[i - 1] = xi1.clone();
            images[i] = xi.conjugate_by(&xi1);
        } else {
            images[i - 1] = xi1.conjugate_by(&xi.inverse());
            images[i] = xi;
        }
        FreeAutomorphism { rank, images }
    }

    /// The transposition automorphism x_i ↔ x_{i+1}.
    pub fn swap_generator(rank: usize, i: usize) -> Self {
        let mut images: Vec<FreeWord> =
            (1..=rank).map(|j| FreeWord::generator(rank, j)).collect();
        images.swap(i - 1, i);
        FreeAutomorphism { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image_of(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism {
            rank: self.rank,
            images: self
                .images
                .iter()
                .map(|w| w.substitute(&next.images))
                .collect(),
        }
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }
}

/// The braid word acting on the free group, letters applied left to right:
/// act_free(uv) = act_free(u) followed by act_free(v).
pub fn act_free(w: &BraidWord) -> FreeAutomorphism {
    let rank = w.strands();
    let mut a = FreeAutomorphism::identity(rank);
    for l in w.letters() {
        a = a.then(&FreeAutomorphism::braid_generator(rank, l.index, l.sign));
    }
    a
}

/// A partial isomorphism of braid-conjugation type: defined on a subset of
/// the generators, sending x_i to a conjugate w⁻¹ x_{a(i)} w of a generator.
#[derive(Debug, Clone, Eq)]
pub struct PartialFreeIso {
    rank: usize,
    /// injection on indices; None marks points outside the domain
    injection: Vec<Option<usize>>,
    /// reduced image words, present exactly on the domain
    images: Vec<Option<FreeWord>>,
}

impl PartialFreeIso {
    pub fn identity(rank: usize) -> Self {
        PartialFreeIso {
            rank,
            injection: (1..=rank).map(Some).collect(),
            images: (1..=rank)
                .map(|i| Some(FreeWord::generator(rank, i)))
                .collect(),
        }
    }

    /// An everywhere-undefined element, to be filled point by point.
    pub fn partial_with_rank(rank: usize) -> Self {
        PartialFreeIso {
            rank,
            injection: vec![None; rank],
            images: vec![None; rank],
        }
    }

    /// Defines the element at `i`: x_i ↦ `word`, with center index `target`.
    pub fn set_image(&mut self, i: usize, target: usize, word: FreeWord) {
        self.injection[i - 1] = Some(target);
        self.images[i - 1] = Some(word);
    }

    /// The partial identity undefined exactly at `i`.
    pub fn partial_identity_without(rank: usize, i: usize) -> Self {
        let mut e = Self::identity(rank);
        e.injection[i - 1] = None;
        e.images[i - 1] = None;
        e
    }

    /// Total element from an automorphism of braid-conjugation type.
    pub fn from_automorphism(a: &FreeAutomorphism) -> Self {
        let rank = a.rank();
        let injection = (1..=rank)
            .map(|i| Some(center_of(a.image_of(i)).0))
            .collect();
        PartialFreeIso {
            rank,
            injection,
            images: a.images().iter().cloned().map(Some).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn domain(&self) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&i| self.injection[i - 1].is_some())
            .collect()
    }

    pub fn injection_of(&self, i: usize) -> Option<usize> {
        self.injection[i - 1]
    }

    pub fn image_of(&self, i: usize) -> Option<&FreeWord> {
        self.images[i - 1].as_ref()
    }

    pub fn image_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.injection.iter().flatten().cloned().collect();
        out.sort_unstable();
        out
    }

    /// Composition `self` followed by `next`. The image words of `self` are
    /// pushed through `next`, letters outside the domain of `next` being set
    /// to the empty word first.
    pub fn then(&self, next: &PartialFreeIso) -> PartialFreeIso {
        let rank = self.rank;
        let mut injection = vec![None; rank];
        let mut images = vec![None; rank];
        for i in 1..=rank {
            let Some(a) = self.injection[i - 1] else {
                continue;
            };
            let Some(b) = next.injection[a - 1] else {
                continue;
            };
            injection[i - 1] = Some(b);
            let word = self.images[i - 1].as_ref().unwrap();
            let killed: Vec<i32> = word
                .letters()
                .iter()
                .cloned()
                .filter(|&x| next.injection[(x.unsigned_abs() as usize) - 1].is_some())
                .collect();
            let killed = FreeWord::reduced(rank, &killed);
            let substituted = killed.substitute(
                &(1..=rank)
                    .map(|j| {
                        next.images[j - 1]
                            .clone()
                            .unwrap_or_else(|| FreeWord::empty(rank))
                    })
                    .collect::<Vec<_>>(),
            );
            images[i - 1] = Some(substituted);
        }
        PartialFreeIso {
            rank,
            injection,
            images,
        }
    }

    /// Canonical form: each image word rewritten over the alphabet of the
    /// element's own image set (letters outside it are set to 1).
    pub fn canonical(&self) -> PartialFreeIso {
        let image_set: Vec<bool> = {
            let mut s = vec![false; self.rank];
            for j in self.injection.iter().flatten() {
                s[j - 1] = true;
            }
            s
        };
        let images = self
            .images
            .iter()
            .map(|w| {
                w.as_ref().map(|w| {
                    let kept: Vec<i32> = w
                        .letters()
                        .iter()
                        .cloned()
                        .filter(|&x| image_set[(x.unsigned_abs() as usize) - 1])
                        .collect();
                    FreeWord::reduced(self.rank, &kept)
                })
            })
            .collect();
        PartialFreeIso {
            rank: self.rank,
            injection: self.injection.clone(),
            images,
        }
    }
}

/// Equality in the monoid: canonical forms compared componentwise.
impl PartialEq for PartialFreeIso {
    fn eq(&self, other: &Self) -> bool {
        if self.rank != other.rank || self.injection != other.injection {
            return false;
        }
        let a = self.canonical();
        let b = other.canonical();
        a.images == b.images
    }
}

impl std::hash::Hash for PartialFreeIso {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let c = self.canonical();
        c.rank.hash(state);
        c.injection.hash(state);
        c.images.hash(state);
    }
}

/// Splits a reduced conjugate-of-a-generator word w⁻¹ x_a w into (a, w).
/// Panics if the word is not of that shape.
pub fn center_of(word: &FreeWord) -> (usize, FreeWord) {
    let l = word.len();
    assert!(l % 2 == 1, "not a conjugate of a generator: {word:?}");
    let mid = l / 2;
    let letters = word.letters();
    for k in 0..mid {
        assert_eq!(
            letters[k],
            -letters[l - 1 - k],
            "not a conjugate of a generator: {word:?}"
        );
    }
    let c = letters[mid];
    assert!(c > 0, "center letter must be positive: {word:?}");
    (
        c as usize,
        FreeWord::reduced(word.rank(), &letters[mid + 1..]),
    )
}
