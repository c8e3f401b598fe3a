//! The inverse braid monoid of partial braids: canonical triples, partial
//! multiplication through strand deletion, the faithful free-group oracle,
//! projections to partial (signed) permutation monoids, Brunnian tests and
//! the type-B / welded / virtual variants.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::free::{act_free, FreeAutomorphism, FreeWord, PartialFreeIso};
use crate::garside::{garside_nf, GarsideNF};
use crate::word::{BraidGen, BraidWord};

/// One letter of a word in the inverse braid monoid (type-B variant adds τ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IBGen {
    Sigma { i: usize, sign: i8 },
    Eps { i: usize },
    Tau { sign: i8 },
}

/// A word over σ_i^{±1}, ε_i (and τ^{±1} in the type-B variant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IBWord {
    strands: usize,
    letters: Vec<IBGen>,
}

impl IBWord {
    pub fn identity(strands: usize) -> Self {
        IBWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(strands: usize, letters: Vec<IBGen>) -> Result<Self> {
        for l in &letters {
            match l {
                IBGen::Sigma { i, .. } => {
                    if *i == 0 || *i + 1 > strands {
                        return Err(Error::IndexOutOfRange { index: *i, strands });
                    }
                }
                IBGen::Eps { i } => {
                    if *i == 0 || *i > strands {
                        return Err(Error::IndexOutOfRange { index: *i, strands });
                    }
                }
                IBGen::Tau { .. } => {}
            }
        }
        Ok(IBWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[IBGen] {
        &self.letters
    }

    pub fn has_tau(&self) -> bool {
        self.letters.iter().any(|l| matches!(l, IBGen::Tau { .. }))
    }

    pub fn concat(&self, other: &IBWord) -> Result<IBWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(IBWord {
            strands: self.strands,
            letters,
        })
    }
}

/// A partial braid in canonical form: the ascending sets of surviving top and
/// bottom endpoints and the Garside normal form of the braid induced on the
/// surviving strands. Two partial braids are equal iff all three components
/// coincide, so derived equality is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialBraid {
    ambient: usize,
    top: Vec<usize>,
    bottom: Vec<usize>,
    core: GarsideNF,
}

impl PartialBraid {
    /// The total identity braid.
    pub fn identity(n: usize) -> Self {
        PartialBraid {
            ambient: n,
            top: (1..=n).collect(),
            bottom: (1..=n).collect(),
            core: garside_nf(&BraidWord::identity(n)),
        }
    }

    /// The empty braid (no strands at all); the absorbing element.
    pub fn empty(n: usize) -> Self {
        PartialBraid {
            ambient: n,
            top: Vec::new(),
            bottom: Vec::new(),
            core: garside_nf(&BraidWord::identity(0)),
        }
    }

    /// The idempotent ε_i: the identity braid with strand i removed.
    pub fn epsilon(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, strands: n });
        }
        let pts: Vec<usize> = (1..=n).filter(|&j| j != i).collect();
        Ok(PartialBraid {
            ambient: n,
            top: pts.clone(),
            bottom: pts,
            core: garside_nf(&BraidWord::identity(n - 1)),
        })
    }

    /// A total braid as a partial braid.
    pub fn from_braid(w: &BraidWord) -> Self {
        PartialBraid {
            ambient: w.strands(),
            top: (1..=w.strands()).collect(),
            bottom: (1..=w.strands()).collect(),
            core: garside_nf(w),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn core(&self) -> &GarsideNF {
        &self.core
    }

    pub fn rank(&self) -> usize {
        self.top.len()
    }

    pub fn is_total(&self) -> bool {
        self.rank() == self.ambient
    }

    pub fn is_empty_braid(&self) -> bool {
        self.rank() == 0
    }

    /// Idempotents are exactly the partial identities.
    pub fn is_idempotent(&self) -> bool {
        self.top == self.bottom && self.core.is_identity()
    }

    /// Where the strand starting at the r-th surviving top point ends:
    /// bottom label of strand I_r.
    pub fn strand_end(&self, r: usize) -> usize {
        self.bottom[self.core.permutation().apply(r) - 1]
    }

    /// Multiplication of partial braids: strands that fail to continue
    /// through both factors are deleted and the surviving cores concatenate.
    pub fn multiply(&self, other: &PartialBraid) -> Result<PartialBraid> {
        if self.ambient != other.ambient {
            return Err(Error::StrandMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        // middle-plane contact points
        let middle: Vec<usize> = self
            .bottom
            .iter()
            .cloned()
            .filter(|j| other.top.binary_search(j).is_ok())
            .collect();

        // survivors of self: strands ending in the middle set
        let perm_a = self.core.permutation();
        let mut new_top = Vec::with_capacity(middle.len());
        for r in 1..=self.rank() {
            let end = self.bottom[perm_a.apply(r) - 1];
            if middle.binary_search(&end).is_ok() {
                new_top.push(self.top[r - 1]);
            }
        }
        // survivors of other: strands starting in the middle set
        let perm_b = other.core.permutation();
        let mut new_bottom = Vec::with_capacity(middle.len());
        for q in 1..=other.rank() {
            if middle.binary_search(&other.top[q - 1]).is_ok() {
                new_bottom.push(other.bottom[perm_b.apply(q) - 1]);
            }
        }
        new_bottom.sort_unstable();

        let core_a = delete_dead_strands(&self.core.to_word(), &{
            // dead top positions of self
            (1..=self.rank())
                .filter(|&r| {
                    let end = self.bottom[perm_a.apply(r) - 1];
                    middle.binary_search(&end).is_err()
                })
                .collect::<Vec<_>>()
        });
        let core_b = delete_dead_strands(&other.core.to_word(), &{
            (1..=other.rank())
                .filter(|&q| middle.binary_search(&other.top[q - 1]).is_err())
                .collect::<Vec<_>>()
        });
        let core = garside_nf(&core_a.concat(&core_b)?);
        Ok(PartialBraid {
            ambient: self.ambient,
            top: new_top,
            bottom: new_bottom,
            core,
        })
    }

    /// The inverse in the inverse-monoid sense: top and bottom swap and the
    /// core inverts. Satisfies A·A⁻¹·A = A and A⁻¹·A·A⁻¹ = A⁻¹.
    pub fn inverse(&self) -> PartialBraid {
        PartialBraid {
            ambient: self.ambient,
            top: self.bottom.clone(),
            bottom: self.top.clone(),
            core: self.core.inverse(),
        }
    }

    /// The faithful image in the monoid of partial free-group isomorphisms:
    /// the generator indexed by the r-th top point maps to the core's image
    /// of x_r with letters relabelled along the bottom set.
    pub fn phi(&self) -> PartialFreeIso {
        let n = self.ambient;
        let k = self.rank();
        let aut = act_free(&self.core.to_word());
        let mut iso = PartialFreeIso::partial_with_rank(n);
        for r in 1..=k {
            let relabelled: Vec<i32> = aut
                .image_of(r)
                .letters()
                .iter()
                .map(|&x| {
                    let j = self.bottom[(x.unsigned_abs() as usize) - 1] as i32;
                    if x > 0 {
                        j
                    } else {
                        -j
                    }
                })
                .collect();
            iso.set_image(
                self.top[r - 1],
                self.bottom[aut_injection(&aut, r) - 1],
                FreeWord::reduced(n, &relabelled),
            );
        }
        iso
    }

    /// The canonical projection to the symmetric inverse monoid.
    pub fn tau(&self) -> PartialInjection {
        let mut map = vec![None; self.ambient];
        let p = self.core.permutation();
        for r in 1..=self.rank() {
            map[self.top[r - 1] - 1] = Some(self.bottom[p.apply(r) - 1]);
        }
        PartialInjection {
            size: self.ambient,
            map,
        }
    }

    /// Serializes the canonical form: a lifting word for the top set, the
    /// ε-block, the core in Garside form, the ε-block again and the
    /// inverse lifting word for the bottom set.
    pub fn canonical_word(&self) -> IBWord {
        let n = self.ambient;
        let k = self.rank();
        let mut letters: Vec<IBGen> = Vec::new();
        // lift: strand at position top[r] moves to position r (run of σ's)
        for r in 1..=k {
            for i in (r..self.top[r - 1]).rev() {
                letters.push(IBGen::Sigma { i, sign: 1 });
            }
        }
        let eps_block: Vec<IBGen> = ((k + 1)..=n).map(|i| IBGen::Eps { i }).collect();
        letters.extend(eps_block.iter().cloned());
        for l in self.core.to_word().letters() {
            letters.push(IBGen::Sigma {
                i: l.index,
                sign: l.sign,
            });
        }
        letters.extend(eps_block.iter().cloned());
        for r in (1..=k).rev() {
            for i in r..self.bottom[r - 1] {
                letters.push(IBGen::Sigma { i, sign: 1 });
            }
        }
        IBWord::from_letters(n, letters).expect("canonical word is valid")
    }
}

/// Removes the listed top positions (ascending) from a braid word.
fn delete_dead_strands(w: &BraidWord, dead_tops: &[usize]) -> BraidWord {
    let mut out = w.clone();
    for &pos in dead_tops.iter().rev() {
        out = out.delete_strand(pos).expect("dead position is valid");
    }
    out
}

fn aut_injection(aut: &FreeAutomorphism, r: usize) -> usize {
    crate::free::center_of(aut.image_of(r)).0
}

/// Evaluates a word over σ_i^{±1}, ε_i as a partial braid (τ is rejected;
/// see [`typeb_embed`] for the type-B variant).
pub fn pb_from_word(w: &IBWord) -> Result<PartialBraid> {
    let n = w.strands();
    let mut acc = PartialBraid::identity(n);
    for l in w.letters() {
        let next = match *l {
            IBGen::Sigma { i, sign } => PartialBraid::from_braid(&BraidWord::from_letters(
                n,
                vec![BraidGen::new(i, sign)],
            )?),
            IBGen::Eps { i } => PartialBraid::epsilon(n, i)?,
            IBGen::Tau { .. } => {
                return Err(Error::NotInvertible {
                    token: "t (type-B generator outside typeb_embed)".into(),
                })
            }
        };
        acc = acc.multiply(&next)?;
    }
    Ok(acc)
}

/// The same evaluation in the monoid of partial free-group isomorphisms,
/// composing generator images letter by letter. Used as the independent
/// equality oracle for the canonical triples.
pub fn ef_image(w: &IBWord) -> Result<PartialFreeIso> {
    let n = w.strands();
    let mut acc = PartialFreeIso::identity(n);
    for l in w.letters() {
        let next = match *l {
            IBGen::Sigma { i, sign } => PartialFreeIso::from_automorphism(
                &FreeAutomorphism::braid_generator(n, i, sign),
            ),
            IBGen::Eps { i } => PartialFreeIso::partial_identity_without(n, i),
            IBGen::Tau { .. } => {
                return Err(Error::NotInvertible {
                    token: "t (type-B generator outside typeb_embed)".into(),
                })
            }
        };
        acc = acc.then(&next);
    }
    Ok(acc)
}

/// A partial injection of `{1..n}`; the elements of the symmetric inverse
/// monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInjection {
    size: usize,
    map: Vec<Option<usize>>,
}

impl PartialInjection {
    pub fn identity(n: usize) -> Self {
        PartialInjection {
            size: n,
            map: (1..=n).map(Some).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        PartialInjection {
            size: n,
            map: vec![None; n],
        }
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.map.swap(i - 1, i);
        p
    }

    pub fn partial_identity_without(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.map[i - 1] = None;
        p
    }

    pub fn from_map(size: usize, map: Vec<Option<usize>>) -> Result<Self> {
        let mut seen = vec![false; size];
        for v in map.iter().flatten() {
            if *v == 0 || *v > size || seen[*v - 1] {
                return Err(Error::Graph("not injective".into()));
            }
            seen[*v - 1] = true;
        }
        Ok(PartialInjection { size, map })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.map[i - 1]
    }

    pub fn then(&self, next: &PartialInjection) -> PartialInjection {
        PartialInjection {
            size: self.size,
            map: self
                .map
                .iter()
                .map(|v| v.and_then(|j| next.map[j - 1]))
                .collect(),
        }
    }

    pub fn domain(&self) -> Vec<usize> {
        (1..=self.size)
            .filter(|&i| self.map[i - 1].is_some())
            .collect()
    }
}

/// A partial injection with a sign carried on each domain point, modelling
/// sign-equivariant partial bijections of `{±1..±n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPartialPermutation {
    size: usize,
    map: Vec<Option<(usize, i8)>>,
}

impl SignedPartialPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPartialPermutation {
            size: n,
            map: (1..=n).map(|i| Some((i, 1))).collect(),
        }
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.map.swap(i - 1, i);
        p
    }

    /// The sign flip at point 1 (image of τ).
    pub fn flip_first(n: usize) -> Self {
        let mut p = Self::identity(n);
        p.map[0] = Some((1, -1));
        p
    }

    pub fn flip_first_inverse(n: usize) -> Self {
        // the flip is an involution
        Self::flip_first(n)
    }

    pub fn partial_identity_without(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.map[i - 1] = None;
        p
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, i: usize) -> Option<(usize, i8)> {
        self.map[i - 1]
    }

    pub fn then(&self, next: &SignedPartialPermutation) -> SignedPartialPermutation {
        SignedPartialPermutation {
            size: self.size,
            map: self
                .map
                .iter()
                .map(|v| {
                    v.and_then(|(j, s)| next.map[j - 1].map(|(k, s2)| (k, s * s2)))
                })
                .collect(),
        }
    }

    pub fn domain(&self) -> Vec<usize> {
        (1..=self.size)
            .filter(|&i| self.map[i - 1].is_some())
            .collect()
    }
}

/// Decides whether ε_i·b = ε_i, i.e. whether deleting the strand starting at
/// position i (and returning there) trivializes the braid. Without an index
/// the test runs over every strand, deciding full Brunnian-ness.
pub fn brunnian_test(b: &BraidWord, strand: Option<usize>) -> Result<bool> {
    let n = b.strands();
    let total = PartialBraid::from_braid(b);
    let indices: Vec<usize> = match strand {
        Some(i) => {
            if i == 0 || i > n {
                return Err(Error::StrandOutOfRange {
                    position: i,
                    strands: n,
                });
            }
            vec![i]
        }
        None => (1..=n).collect(),
    };
    for i in indices {
        let eps = PartialBraid::epsilon(n, i)?;
        if eps.multiply(&total)? != eps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The words x_i = σ_{i−1}⁻¹…σ_1⁻¹ · σ_1² · σ_1…σ_{i−1} for i = 1..n−1.
pub fn brunnian_free_generators(n: usize) -> Result<Vec<BraidWord>> {
    if n < 2 {
        return Err(Error::BoundExceeded {
            requested: n,
            max: usize::MAX,
        });
    }
    let mut out = Vec::with_capacity(n - 1);
    for i in 1..n {
        let mut letters = Vec::new();
        for j in (1..i).rev() {
            letters.push(BraidGen::new(j, -1));
        }
        letters.push(BraidGen::new(1, 1));
        letters.push(BraidGen::new(1, 1));
        for j in 1..i {
            letters.push(BraidGen::new(j, 1));
        }
        out.push(BraidWord::from_letters(n, letters)?);
    }
    Ok(out)
}

/// Image in the abelianization: an ε flag and the σ exponent sum, the latter
/// quotiented to zero once ε is present; the type-B variant also carries the
/// τ exponent sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianImage {
    pub eps: bool,
    pub sigma_exp: i64,
    pub tau_exp: Option<i64>,
}

pub fn abelianize_word(w: &IBWord) -> AbelianImage {
    let mut eps = false;
    let mut sigma = 0i64;
    let mut tau = 0i64;
    let mut has_tau = false;
    for l in w.letters() {
        match l {
            IBGen::Sigma { sign, .. } => sigma += *sign as i64,
            IBGen::Eps { .. } => eps = true,
            IBGen::Tau { sign } => {
                has_tau = true;
                tau += *sign as i64;
            }
        }
    }
    if eps {
        sigma = 0;
        tau = 0;
    }
    AbelianImage {
        eps,
        sigma_exp: sigma,
        tau_exp: if has_tau { Some(tau) } else { None },
    }
}

pub fn abelianize(a: &PartialBraid) -> AbelianImage {
    let eps = !a.is_total();
    AbelianImage {
        eps,
        sigma_exp: if eps { 0 } else { a.core().exponent_sum() },
        tau_exp: None,
    }
}

/// Embeds a type-B word into the inverse braid monoid on n+1 strands via
/// σ_i ↦ σ_{i+1}, ε_i ↦ ε_{i+1}, τ ↦ σ1².
pub fn typeb_embed(w: &IBWord) -> Result<PartialBraid> {
    let n = w.strands();
    let mut letters = Vec::new();
    for l in w.letters() {
        match *l {
            IBGen::Sigma { i, sign } => letters.push(IBGen::Sigma { i: i + 1, sign }),
            IBGen::Eps { i } => letters.push(IBGen::Eps { i: i + 1 }),
            IBGen::Tau { sign } => {
                letters.push(IBGen::Sigma { i: 1, sign });
                letters.push(IBGen::Sigma { i: 1, sign });
            }
        }
    }
    pb_from_word(&IBWord::from_letters(n + 1, letters)?)
}

/// The action of a type-B word on signed points: σ_i swaps i and i+1
/// carrying signs, τ negates point 1, ε_i removes point i from the domain.
pub fn rho_b(w: &IBWord) -> SignedPartialPermutation {
    let n = w.strands();
    let mut acc = SignedPartialPermutation::identity(n);
    for l in w.letters() {
        let next = match *l {
            IBGen::Sigma { i, .. } => SignedPartialPermutation::transposition(n, i),
            IBGen::Eps { i } => SignedPartialPermutation::partial_identity_without(n, i),
            IBGen::Tau { .. } => SignedPartialPermutation::flip_first(n),
        };
        acc = acc.then(&next);
    }
    acc
}

/// One letter of a partial welded / virtual braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IBPGen {
    Sigma { i: usize, sign: i8 },
    Xi { i: usize },
    Eps { i: usize },
}

/// Evaluates a word over σ_i^{±1}, ξ_i, ε_i in the monoid of partial
/// free-group isomorphisms of braid-conjugation type; ξ_i acts as the plain
/// transposition of x_i and x_{i+1}.
pub fn ibp_model(n: usize, letters: &[IBPGen]) -> Result<PartialFreeIso> {
    let mut acc = PartialFreeIso::identity(n);
    for l in letters {
        let next = match *l {
            IBPGen::Sigma { i, sign } => {
                if i == 0 || i + 1 > n {
                    return Err(Error::IndexOutOfRange { index: i, strands: n });
                }
                PartialFreeIso::from_automorphism(&FreeAutomorphism::braid_generator(
                    n, i, sign,
                ))
            }
            IBPGen::Xi { i } => {
                if i == 0 || i + 1 > n {
                    return Err(Error::IndexOutOfRange { index: i, strands: n });
                }
                PartialFreeIso::from_automorphism(&FreeAutomorphism::swap_generator(n, i))
            }
            IBPGen::Eps { i } => {
                if i == 0 || i > n {
                    return Err(Error::IndexOutOfRange { index: i, strands: n });
                }
                PartialFreeIso::partial_identity_without(n, i)
            }
        };
        acc = acc.then(&next);
    }
    Ok(acc)
}

/// Distinct partial braids reachable by words of bounded length over the
/// generators σ1^{±1}, ε_i; used for small-scale enumerations.
pub fn enumerate_partial_braids(n: usize, max_len: usize) -> Result<BTreeSet<Vec<u8>>> {
    let mut gens: Vec<IBGen> = Vec::new();
    for i in 1..n {
        gens.push(IBGen::Sigma { i, sign: 1 });
        gens.push(IBGen::Sigma { i, sign: -1 });
    }
    for i in 1..=n {
        gens.push(IBGen::Eps { i });
    }
    let mut words: Vec<Vec<IBGen>> = vec![Vec::new()];
    let mut keys = BTreeSet::new();
    for len in 0..=max_len {
        for w in &words {
            let pb = pb_from_word(&IBWord::from_letters(n, w.clone())?)?;
            keys.insert(format!("{pb:?}").into_bytes());
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for w in &words {
            for g in &gens {
                let mut v = w.clone();
                v.push(*g);
                next.push(v);
            }
        }
        words = next;
    }
    Ok(keys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::delta_word;

    fn ib(n: usize, ls: Vec<IBGen>) -> IBWord {
        IBWord::from_letters(n, ls).unwrap()
    }

    fn s(i: usize, sign: i8) -> IBGen {
        IBGen::Sigma { i, sign }
    }

    fn e(i: usize) -> IBGen {
        IBGen::Eps { i }
    }

    #[test]
    fn epsilon_is_idempotent() {
        let eps = pb_from_word(&ib(2, vec![e(1)])).unwrap();
        let eps2 = pb_from_word(&ib(2, vec![e(1), e(1)])).unwrap();
        assert_eq!(eps, eps2);
        assert!(eps.is_idempotent());
    }

    #[test]
    fn eps_sigma_slide() {
        let lhs = pb_from_word(&ib(2, vec![e(1), s(1, 1)])).unwrap();
        let rhs = pb_from_word(&ib(2, vec![s(1, 1), e(2)])).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.top(), &[2]);
        assert_eq!(lhs.bottom(), &[1]);
        assert!(lhs.core().is_identity());
    }

    #[test]
    fn all_epsilons_give_empty_braid() {
        let w = ib(3, vec![e(1), e(2), e(3)]);
        let pb = pb_from_word(&w).unwrap();
        assert!(pb.is_empty_braid());
        assert_eq!(pb, PartialBraid::empty(3));
    }

    #[test]
    fn empty_braid_absorbs() {
        let a = pb_from_word(&ib(3, vec![s(1, 1), e(2), s(2, -1)])).unwrap();
        let empty = PartialBraid::empty(3);
        assert_eq!(a.multiply(&empty).unwrap(), empty);
        assert_eq!(empty.multiply(&a).unwrap(), empty);
    }

    #[test]
    fn total_braids_multiply_as_braids() {
        let u = BraidWord::from_signed(3, &[1, -2]).unwrap();
        let v = BraidWord::from_signed(3, &[2, 2, 1]).unwrap();
        let prod = PartialBraid::from_braid(&u)
            .multiply(&PartialBraid::from_braid(&v))
            .unwrap();
        assert_eq!(prod, PartialBraid::from_braid(&u.concat(&v).unwrap()));
    }

    #[test]
    fn inverse_monoid_axioms() {
        for letters in [
            vec![e(1), s(1, 1), s(2, -1)],
            vec![s(2, 1), e(3), s(1, 1), e(1)],
            vec![s(1, -1), s(1, -1), e(2)],
        ] {
            let a = pb_from_word(&ib(3, letters)).unwrap();
            let inv = a.inverse();
            assert_eq!(a.multiply(&inv).unwrap().multiply(&a).unwrap(), a);
            assert_eq!(inv.multiply(&a).unwrap().multiply(&inv).unwrap(), inv);
        }
    }

    #[test]
    fn inverse_examples() {
        let eps = PartialBraid::epsilon(3, 2).unwrap();
        assert_eq!(eps.inverse(), eps);
        let s1 = pb_from_word(&ib(2, vec![s(1, 1)])).unwrap();
        assert_eq!(s1.inverse(), pb_from_word(&ib(2, vec![s(1, -1)])).unwrap());
        let hook = pb_from_word(&ib(2, vec![e(1), s(1, 1)])).unwrap();
        let hook_inv = hook.inverse();
        assert_eq!(hook_inv.top(), &[1]);
        assert_eq!(hook_inv.bottom(), &[2]);
    }

    #[test]
    fn balanced_relations_hold() {
        // the ε_i / σ_i relation family evaluated on canonical triples
        for n in 2..=4usize {
            for i in 1..n {
                for j in 1..=n {
                    if j != i && j != i + 1 {
                        let lhs = pb_from_word(&ib(n, vec![e(j), s(i, 1)])).unwrap();
                        let rhs = pb_from_word(&ib(n, vec![s(i, 1), e(j)])).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
                let lhs = pb_from_word(&ib(n, vec![e(i), s(i, 1)])).unwrap();
                let rhs = pb_from_word(&ib(n, vec![s(i, 1), e(i + 1)])).unwrap();
                assert_eq!(lhs, rhs);
                let lhs = pb_from_word(&ib(n, vec![e(i + 1), s(i, 1)])).unwrap();
                let rhs = pb_from_word(&ib(n, vec![s(i, 1), e(i)])).unwrap();
                assert_eq!(lhs, rhs);
                let e1 = pb_from_word(&ib(n, vec![e(i + 1)])).unwrap();
                let sq = pb_from_word(&ib(n, vec![e(i + 1), s(i, 1), s(i, 1)])).unwrap();
                let sq2 = pb_from_word(&ib(n, vec![s(i, 1), s(i, 1), e(i + 1)])).unwrap();
                assert_eq!(e1, sq);
                assert_eq!(e1, sq2);
                let ee = pb_from_word(&ib(n, vec![e(i), e(i + 1)])).unwrap();
                let ee_s = pb_from_word(&ib(n, vec![e(i), e(i + 1), s(i, 1)])).unwrap();
                let s_ee = pb_from_word(&ib(n, vec![s(i, 1), e(i), e(i + 1)])).unwrap();
                assert_eq!(ee, ee_s);
                assert_eq!(ee, s_ee);
            }
        }
    }

    #[test]
    fn phi_of_epsilon_matches_partial_identity() {
        let eps = PartialBraid::epsilon(3, 1).unwrap();
        let iso = eps.phi();
        assert_eq!(iso.injection_of(1), None);
        assert_eq!(iso.injection_of(2), Some(2));
        assert_eq!(iso.image_of(2).unwrap().letters(), &[2]);
        assert_eq!(iso.image_of(3).unwrap().letters(), &[3]);
    }

    #[test]
    fn phi_of_total_braid_is_act_free() {
        let w = BraidWord::from_signed(3, &[1, -2, 1]).unwrap();
        let pb = PartialBraid::from_braid(&w);
        let iso = pb.phi();
        let aut = act_free(&w);
        for i in 1..=3 {
            assert_eq!(iso.image_of(i).unwrap(), aut.image_of(i));
        }
    }

    #[test]
    fn phi_oracle_matches_triples() {
        let words = [
            vec![e(1), s(1, 1)],
            vec![s(1, 1), e(2)],
            vec![s(1, 1), s(1, 1), e(1)],
            vec![e(1), s(1, 1), s(1, 1)],
            vec![e(2), s(1, -1)],
            vec![s(1, -1), s(1, -1)],
        ];
        for w1 in &words {
            for w2 in &words {
                let t1 = pb_from_word(&ib(2, w1.clone())).unwrap();
                let t2 = pb_from_word(&ib(2, w2.clone())).unwrap();
                let f1 = ef_image(&ib(2, w1.clone())).unwrap();
                let f2 = ef_image(&ib(2, w2.clone())).unwrap();
                assert_eq!(t1 == t2, f1 == f2, "{w1:?} vs {w2:?}");
                if t1 == t2 {
                    assert_eq!(t1.phi(), f1);
                }
            }
        }
    }

    #[test]
    fn tau_examples() {
        let total = pb_from_word(&ib(2, vec![s(1, 1)])).unwrap();
        assert_eq!(total.tau(), PartialInjection::transposition(2, 1));
        let eps = PartialBraid::epsilon(3, 1).unwrap();
        assert_eq!(eps.tau(), PartialInjection::partial_identity_without(3, 1));
        assert_eq!(PartialBraid::empty(3).tau(), PartialInjection::empty(3));
    }

    #[test]
    fn brunnian_examples() {
        let s1 = BraidWord::from_signed(2, &[1]).unwrap();
        assert!(!brunnian_test(&s1, Some(1)).unwrap());
        let s1sq = BraidWord::from_signed(2, &[1, 1]).unwrap();
        assert!(brunnian_test(&s1sq, None).unwrap());
        for n in 2..=4 {
            for x in brunnian_free_generators(n).unwrap() {
                assert!(brunnian_test(&x, Some(1)).unwrap());
            }
        }
    }

    #[test]
    fn brunnian_generators_shape() {
        let gens = brunnian_free_generators(2).unwrap();
        assert_eq!(gens, vec![BraidWord::from_signed(2, &[1, 1]).unwrap()]);
        let gens = brunnian_free_generators(3).unwrap();
        assert_eq!(gens[1], BraidWord::from_signed(3, &[-1, 1, 1, 1]).unwrap());
    }

    #[test]
    fn abelianization_examples() {
        let w = ib(3, vec![s(1, 1), s(2, -1)]);
        assert_eq!(
            abelianize_word(&w),
            AbelianImage {
                eps: false,
                sigma_exp: 0,
                tau_exp: None
            }
        );
        let w = ib(3, vec![e(1), s(1, 1)]);
        assert_eq!(
            abelianize_word(&w),
            AbelianImage {
                eps: true,
                sigma_exp: 0,
                tau_exp: None
            }
        );
        assert_eq!(
            abelianize(&PartialBraid::empty(3)),
            AbelianImage {
                eps: true,
                sigma_exp: 0,
                tau_exp: None
            }
        );
        // ε absorbs the σ exponent: εσ1 and ε map to the same image
        assert_eq!(
            abelianize_word(&ib(2, vec![e(1), s(1, 1)])),
            abelianize_word(&ib(2, vec![e(1)]))
        );
    }

    #[test]
    fn typeb_embed_relations() {
        let n = 3;
        let t = IBGen::Tau { sign: 1 };
        // ε_1τ = τε_1 = ε_1
        let a = typeb_embed(&ib(n, vec![e(1), t])).unwrap();
        let b = typeb_embed(&ib(n, vec![t, e(1)])).unwrap();
        let c = typeb_embed(&ib(n, vec![e(1)])).unwrap();
        assert_eq!(a, c);
        assert_eq!(b, c);
        // τσ1τσ1 = σ1τσ1τ
        let lhs = typeb_embed(&ib(n, vec![t, s(1, 1), t, s(1, 1)])).unwrap();
        let rhs = typeb_embed(&ib(n, vec![s(1, 1), t, s(1, 1), t])).unwrap();
        assert_eq!(lhs, rhs);
        // image keeps the first strand present and fixed
        let img = typeb_embed(&ib(n, vec![t, s(1, 1), e(2)])).unwrap();
        assert!(img.top().contains(&1));
        assert_eq!(img.tau().apply(1), Some(1));
    }

    #[test]
    fn rho_b_generator_actions() {
        let n = 3;
        let tau = rho_b(&ib(n, vec![IBGen::Tau { sign: 1 }]));
        assert_eq!(tau.apply(1), Some((1, -1)));
        assert_eq!(tau.apply(2), Some((2, 1)));
        let eps = rho_b(&ib(n, vec![e(1)]));
        assert_eq!(eps.domain(), vec![2, 3]);
        let sig = rho_b(&ib(n, vec![s(1, 1)]));
        assert_eq!(sig.apply(1), Some((2, 1)));
        assert_eq!(sig.apply(2), Some((1, 1)));
        // τ² = 1 on signed points
        let tau2 = rho_b(&ib(n, vec![IBGen::Tau { sign: 1 }, IBGen::Tau { sign: 1 }]));
        assert_eq!(tau2, SignedPartialPermutation::identity(n));
    }

    #[test]
    fn ibp_model_relations() {
        let n = 3;
        let xi = |i: usize| IBPGen::Xi { i };
        let sg = |i: usize| IBPGen::Sigma { i, sign: 1 };
        // ξ_i² = 1
        assert_eq!(
            ibp_model(n, &[xi(1), xi(1)]).unwrap(),
            PartialFreeIso::identity(n)
        );
        // mixed relation σ1σ2ξ1 = ξ2σ1σ2 (the move deleted in the virtual
        // variant still holds in this model)
        let lhs = ibp_model(n, &[sg(1), sg(2), xi(1)]).unwrap();
        let rhs = ibp_model(n, &[xi(2), sg(1), sg(2)]).unwrap();
        assert_eq!(lhs, rhs);
        // and ξ1ξ2σ1 = σ2ξ1ξ2
        let lhs = ibp_model(n, &[xi(1), xi(2), sg(1)]).unwrap();
        let rhs = ibp_model(n, &[sg(2), xi(1), xi(2)]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn epsilon_delta_commutation() {
        for n in 2..=5usize {
            let delta = delta_word(n);
            let dw: Vec<IBGen> = delta
                .letters()
                .iter()
                .map(|l| s(l.index, l.sign))
                .collect();
            for i in 1..=n {
                let mut lhs = vec![e(i)];
                lhs.extend(dw.iter().cloned());
                let mut rhs = dw.clone();
                rhs.push(e(n + 1 - i));
                assert_eq!(
                    pb_from_word(&ib(n, lhs)).unwrap(),
                    pb_from_word(&ib(n, rhs)).unwrap()
                );
            }
        }
    }

    #[test]
    fn canonical_word_round_trip() {
        for letters in [
            vec![e(1), s(1, 1), s(2, -1)],
            vec![s(2, 1), e(3), s(1, 1)],
            vec![e(1), e(2), e(3)],
            vec![s(1, -1), s(2, -1), s(1, -1)],
        ] {
            let pb = pb_from_word(&ib(3, letters)).unwrap();
            let round = pb_from_word(&pb.canonical_word()).unwrap();
            assert_eq!(pb, round);
        }
    }

    #[test]
    fn i2_has_seven_elements() {
        let keys = enumerate_partial_braids(2, 2).unwrap();
        // distinct triples map onto I_2 via tau; count the tau images instead
        let mut taus = BTreeSet::new();
        let gens = [s(1, 1), s(1, -1), e(1), e(2)];
        let mut words: Vec<Vec<IBGen>> = vec![vec![]];
        for _ in 0..2 {
            let mut next = vec![];
            for w in &words {
                for g in &gens {
                    let mut v = w.clone();
                    v.push(*g);
                    next.push(v);
                }
            }
            for w in &next {
                taus.insert(pb_from_word(&ib(2, w.clone())).unwrap().tau());
            }
            words = next;
        }
        taus.insert(PartialInjection::identity(2));
        assert_eq!(taus.len(), 7);
        assert!(keys.len() >= 7);
    }
}
