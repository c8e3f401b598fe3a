//! Permutations and positive permutation braids.

use std::fmt;

/// A permutation of `{1..n}` stored as its image array (1-based values).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.image)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image array; panics on non-bijections.
    pub fn from_images(image: Vec<usize>) -> Self {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            assert!(v >= 1 && v <= n && !seen[v - 1], "not a bijection");
            seen[v - 1] = true;
        }
        Permutation { image }
    }

    /// The transposition (i, i+1) inside the identity on n points.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.swap_values_mut(i, i + 1);
        p
    }

    /// The transposition (a, b).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(a - 1, b - 1);
        p
    }

    /// Order reversal i ↦ n+1−i.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            image: (1..=n).rev().collect(),
        }
    }

    /// The n-cycle i ↦ i+1 (n ↦ 1).
    pub fn forward_cycle(n: usize) -> Self {
        Permutation {
            image: (1..=n).map(|i| if i == n { 1 } else { i + 1 }).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Post-composes with the transposition (a b): new(i) = (a b)(old(i)).
    pub fn swap_values_mut(&mut self, a: usize, b: usize) {
        for v in &mut self.image {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    /// Swap of two entries: new = old ∘ (a b) as functions applied on the right.
    pub fn swap_positions_mut(&mut self, a: usize, b: usize) {
        self.image.swap(a - 1, b - 1);
    }

    /// `self` followed by `next`: (self.then(next))(i) = next(self(i)).
    pub fn then(&self, next: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), next.size());
        Permutation {
            image: self.image.iter().map(|&v| next.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v - 1] = k + 1;
        }
        Permutation { image }
    }

    /// Number of inversions (pairs i<j with π(i)>π(j)); the word length of the
    /// corresponding positive permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.size();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Cycle decomposition, each cycle starting from its minimum, cycles
    /// sorted by minimum. Fixed points are included as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cyc.push(cur);
                cur = self.apply(cur);
            }
            out.push(cyc);
        }
        out
    }
}

/// A positive braid in which every pair of strands crosses at most once.
/// These biject with permutations, so only the permutation is stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PermutationBraid {
    perm: Permutation,
}

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        PermutationBraid {
            perm: Permutation::identity(n),
        }
    }

    pub fn generator(n: usize, i: usize) -> Self {
        PermutationBraid {
            perm: Permutation::adjacent_transposition(n, i),
        }
    }

    /// The half twist Δ on n strands.
    pub fn delta(n: usize) -> Self {
        PermutationBraid {
            perm: Permutation::reversal(n),
        }
    }

    /// The permutation braid Δσ_i⁻¹.
    pub fn delta_over_generator(n: usize, i: usize) -> Self {
        // X σ_i = Δ, so X(j) = t_i(rev(j))
        let image = (1..=n)
            .map(|j| {
                let r = n + 1 - j;
                if r == i {
                    i + 1
                } else if r == i + 1 {
                    i
                } else {
                    r
                }
            })
            .collect();
        PermutationBraid {
            perm: Permutation::from_images(image),
        }
    }

    pub fn from_permutation(perm: Permutation) -> Self {
        PermutationBraid { perm }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn strands(&self) -> usize {
        self.perm.size()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.perm.images().iter().enumerate().all(|(k, &v)| v == n - k)
    }

    pub fn len(&self) -> usize {
        self.perm.inversions()
    }

    /// Bitmask over `i = 1..n-1` of the generators that left-divide the braid.
    pub fn starting_mask(&self) -> u128 {
        descent_mask(&self.perm)
    }

    /// Bitmask of the generators that right-divide the braid.
    pub fn finishing_mask(&self) -> u128 {
        descent_mask(&self.perm.inverse())
    }

    /// Right-multiplies by σ_i. Only valid (kept square-free) when i is not
    /// in the finishing set; callers uphold this.
    pub fn mul_generator_right(&mut self, i: usize) {
        self.perm.swap_values_mut(i, i + 1);
    }

    /// Removes σ_i from the front. Only valid when i is in the starting set.
    pub fn div_generator_left(&mut self, i: usize) {
        self.perm.swap_positions_mut(i, i + 1);
    }

    /// Conjugation by Δ (σ_i ↦ σ_{n−i}).
    pub fn flip(&mut self) {
        let n = self.strands();
        let image = (1..=n)
            .map(|j| n + 1 - self.perm.apply(n + 1 - j))
            .collect();
        self.perm = Permutation::from_images(image);
    }

    /// A positive word realizing the braid (smallest starting generator first).
    pub fn word(&self) -> Vec<usize> {
        let mut p = self.perm.clone();
        let mut out = Vec::with_capacity(p.inversions());
        loop {
            let n = p.size();
            let mut found = None;
            for i in 1..n {
                if p.apply(i) > p.apply(i + 1) {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    out.push(i);
                    p.swap_positions_mut(i, i + 1);
                }
                None => break,
            }
        }
        out
    }
}

fn descent_mask(p: &Permutation) -> u128 {
    let n = p.size();
    debug_assert!(n <= 128, "descent masks support at most 128 strands");
    let mut m = 0u128;
    for i in 1..n {
        if p.apply(i) > p.apply(i + 1) {
            m |= 1 << i;
        }
    }
    m
}
