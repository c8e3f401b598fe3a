//! Presentation objects for the families catalogued here (classical,
//! few-generator, surface, singular, inverse and welded/virtual variants)
//! and a homomorphism verifier against computable models.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::free::FreeAutomorphism;
use crate::garside::{garside_nf, GarsideNF};
use crate::inverse::{
    ibp_model, pb_from_word, IBGen, IBPGen, IBWord, PartialBraid, PartialInjection,
    SignedPartialPermutation,
};
use crate::perm::Permutation;
use crate::singular::{singular_nf, SBandGen, SBandWord, SingularNF};
use crate::word::BraidWord;

/// A generator label; non-invertible labels admit no negative exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenLabel {
    pub name: String,
    pub invertible: bool,
}

/// One letter of a relation word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PLetter {
    pub gen: usize,
    pub sign: i8,
}

/// A finite monoid/group presentation: labelled generators and a list of
/// relations, each a pair of words over the labels.
#[derive(Debug, Clone)]
pub struct Presentation {
    name: String,
    generators: Vec<GenLabel>,
    relations: Vec<(Vec<PLetter>, Vec<PLetter>)>,
}

impl Presentation {
    pub fn new(
        name: String,
        generators: Vec<GenLabel>,
        relations: Vec<(Vec<PLetter>, Vec<PLetter>)>,
    ) -> Result<Self> {
        let p = Presentation {
            name,
            generators,
            relations,
        };
        p.validate()?;
        Ok(p)
    }

    /// Structural validation: letters reference declared generators and
    /// inverses appear only on invertible labels.
    pub fn validate(&self) -> Result<()> {
        for (lhs, rhs) in &self.relations {
            for l in lhs.iter().chain(rhs.iter()) {
                let lab = self
                    .generators
                    .get(l.gen)
                    .ok_or_else(|| Error::MissingImage(format!("generator #{}", l.gen)))?;
                if l.sign < 0 && !lab.invertible {
                    return Err(Error::NotInvertible {
                        token: lab.name.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: String) {
        self.name = name;
    }

    pub fn generators(&self) -> &[GenLabel] {
        &self.generators
    }

    pub fn relations(&self) -> &[(Vec<PLetter>, Vec<PLetter>)] {
        &self.relations
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn push_relation(&mut self, lhs: Vec<PLetter>, rhs: Vec<PLetter>) -> Result<()> {
        self.relations.push((lhs, rhs));
        self.validate()
    }

    pub fn word_display(&self, w: &[PLetter]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter()
            .map(|l| {
                format!(
                    "{}{}",
                    self.generators[l.gen].name,
                    if l.sign < 0 { "'" } else { "" }
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn relation_display(&self, lhs: &[PLetter], rhs: &[PLetter]) -> String {
        format!("{} = {}", self.word_display(lhs), self.word_display(rhs))
    }

    /// The export format: a generator header line, then one relation per line.
    pub fn export(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "generators: {}\n",
            self.generators
                .iter()
                .map(|g| if g.invertible {
                    g.name.clone()
                } else {
                    format!("{}+", g.name)
                })
                .collect::<Vec<_>>()
                .join(" ")
        ));
        for (lhs, rhs) in &self.relations {
            out.push_str(&self.relation_display(lhs, rhs));
            out.push('\n');
        }
        out
    }
}

/// A decidable-equality model a presentation can be verified against.
pub trait Monoid {
    type Elem: Clone;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
}

/// An assignment of model elements (with inverses where needed) to labels.
pub struct Assignment<M: Monoid> {
    pub model: M,
    pub images: HashMap<String, (M::Elem, Option<M::Elem>)>,
}

impl<M: Monoid> Assignment<M> {
    pub fn evaluate(&self, p: &Presentation, w: &[PLetter]) -> Result<M::Elem> {
        let mut acc = self.model.one();
        for l in w {
            let name = &p.generators()[l.gen].name;
            let (img, inv) = self
                .images
                .get(name)
                .ok_or_else(|| Error::MissingImage(name.clone()))?;
            let factor = if l.sign >= 0 {
                img
            } else {
                inv.as_ref()
                    .ok_or_else(|| Error::NotInvertible { token: name.clone() })?
            };
            acc = self.model.mul(&acc, factor)?;
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails { lhs: String, rhs: String },
    Skipped,
}

/// Per-relation verdicts of a verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub presentation: String,
    pub model: String,
    pub verdicts: Vec<(String, Verdict)>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts
            .iter()
            .all(|(_, v)| matches!(v, Verdict::Holds))
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut held = 0;
        let mut failed = 0;
        let mut skipped = 0;
        for (_, v) in &self.verdicts {
            match v {
                Verdict::Holds => held += 1,
                Verdict::Fails { .. } => failed += 1,
                Verdict::Skipped => skipped += 1,
            }
        }
        (held, failed, skipped)
    }
}

/// Evaluates both sides of every relation in the model. The verdicts state
/// only that the assignment extends to a homomorphism; faithfulness is never
/// claimed.
pub fn verify_homomorphism<M: Monoid>(
    p: &Presentation,
    a: &Assignment<M>,
    model_name: &str,
) -> Result<VerificationReport> {
    // fail fast on missing images
    for g in p.generators() {
        if !a.images.contains_key(&g.name) {
            return Err(Error::MissingImage(g.name.clone()));
        }
    }
    let mut verdicts = Vec::new();
    for (lhs, rhs) in p.relations() {
        let l = a.evaluate(p, lhs)?;
        let r = a.evaluate(p, rhs)?;
        let verdict = if a.model.eq(&l, &r) {
            Verdict::Holds
        } else {
            Verdict::Fails {
                lhs: p.word_display(lhs),
                rhs: p.word_display(rhs),
            }
        };
        verdicts.push((p.relation_display(lhs, rhs), verdict));
    }
    Ok(VerificationReport {
        presentation: p.name().to_string(),
        model: model_name.to_string(),
        verdicts,
    })
}

// ---------------------------------------------------------------------------
// models

pub struct BraidModel {
    pub strands: usize,
}

impl Monoid for BraidModel {
    type Elem = GarsideNF;
    fn one(&self) -> GarsideNF {
        garside_nf(&BraidWord::identity(self.strands))
    }
    fn mul(&self, a: &GarsideNF, b: &GarsideNF) -> Result<GarsideNF> {
        Ok(garside_nf(&a.to_word().concat(&b.to_word())?))
    }
    fn eq(&self, a: &GarsideNF, b: &GarsideNF) -> bool {
        a == b
    }
}

pub struct FreeAutModel {
    pub rank: usize,
}

impl Monoid for FreeAutModel {
    type Elem = FreeAutomorphism;
    fn one(&self) -> FreeAutomorphism {
        FreeAutomorphism::identity(self.rank)
    }
    fn mul(&self, a: &FreeAutomorphism, b: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        Ok(a.then(b))
    }
    fn eq(&self, a: &FreeAutomorphism, b: &FreeAutomorphism) -> bool {
        a == b
    }
}

pub struct SingularModel {
    pub strands: usize,
}

impl Monoid for SingularModel {
    type Elem = SingularNF;
    fn one(&self) -> SingularNF {
        singular_nf(&SBandWord::identity(self.strands)).expect("identity normalizes")
    }
    fn mul(&self, a: &SingularNF, b: &SingularNF) -> Result<SingularNF> {
        singular_nf(&a.to_word().concat(&b.to_word())?)
    }
    fn eq(&self, a: &SingularNF, b: &SingularNF) -> bool {
        a == b
    }
}

pub struct InverseBraidModel {
    pub strands: usize,
}

impl Monoid for InverseBraidModel {
    type Elem = PartialBraid;
    fn one(&self) -> PartialBraid {
        PartialBraid::identity(self.strands)
    }
    fn mul(&self, a: &PartialBraid, b: &PartialBraid) -> Result<PartialBraid> {
        a.multiply(b)
    }
    fn eq(&self, a: &PartialBraid, b: &PartialBraid) -> bool {
        a == b
    }
}

pub struct EfModel {
    pub rank: usize,
}

impl Monoid for EfModel {
    type Elem = crate::free::PartialFreeIso;
    fn one(&self) -> Self::Elem {
        crate::free::PartialFreeIso::identity(self.rank)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(a.then(b))
    }
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }
}

pub struct InjectionModel {
    pub size: usize,
}

impl Monoid for InjectionModel {
    type Elem = PartialInjection;
    fn one(&self) -> PartialInjection {
        PartialInjection::identity(self.size)
    }
    fn mul(&self, a: &PartialInjection, b: &PartialInjection) -> Result<PartialInjection> {
        Ok(a.then(b))
    }
    fn eq(&self, a: &PartialInjection, b: &PartialInjection) -> bool {
        a == b
    }
}

pub struct SignedModel {
    pub size: usize,
}

impl Monoid for SignedModel {
    type Elem = SignedPartialPermutation;
    fn one(&self) -> SignedPartialPermutation {
        SignedPartialPermutation::identity(self.size)
    }
    fn mul(
        &self,
        a: &SignedPartialPermutation,
        b: &SignedPartialPermutation,
    ) -> Result<SignedPartialPermutation> {
        Ok(a.then(b))
    }
    fn eq(&self, a: &SignedPartialPermutation, b: &SignedPartialPermutation) -> bool {
        a == b
    }
}

pub struct SymmetricModel {
    pub size: usize,
}

impl Monoid for SymmetricModel {
    type Elem = Permutation;
    fn one(&self) -> Permutation {
        Permutation::identity(self.size)
    }
    fn mul(&self, a: &Permutation, b: &Permutation) -> Result<Permutation> {
        Ok(a.then(b))
    }
    fn eq(&self, a: &Permutation, b: &Permutation) -> bool {
        a == b
    }
}

// ---------------------------------------------------------------------------
// builtin families

struct Builder {
    generators: Vec<GenLabel>,
    index: HashMap<String, usize>,
    relations: Vec<(Vec<PLetter>, Vec<PLetter>)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            generators: Vec::new(),
            index: HashMap::new(),
            relations: Vec::new(),
        }
    }

    fn gen(&mut self, name: &str, invertible: bool) -> usize {
        if let Some(&k) = self.index.get(name) {
            return k;
        }
        let k = self.generators.len();
        self.generators.push(GenLabel {
            name: name.to_string(),
            invertible,
        });
        self.index.insert(name.to_string(), k);
        k
    }

    fn rel(&mut self, lhs: Vec<PLetter>, rhs: Vec<PLetter>) {
        if lhs == rhs {
            return;
        }
        if self
            .relations
            .iter()
            .any(|(l, r)| (l == &lhs && r == &rhs) || (l == &rhs && r == &lhs))
        {
            return;
        }
        self.relations.push((lhs, rhs));
    }

    fn finish(self, name: &str) -> Presentation {
        Presentation::new(name.to_string(), self.generators, self.relations)
            .expect("builtin families are well-formed")
    }
}

fn g(k: usize) -> Vec<PLetter> {
    vec![PLetter { gen: k, sign: 1 }]
}

fn cat(parts: &[&[PLetter]]) -> Vec<PLetter> {
    let mut out = Vec::new();
    for p in parts {
        out.extend_from_slice(p);
    }
    out
}

fn pw(k: usize, e: i64) -> Vec<PLetter> {
    let sign: i8 = if e >= 0 { 1 } else { -1 };
    (0..e.unsigned_abs())
        .map(|_| PLetter { gen: k, sign })
        .collect()
}

/// Alternating word x y x y … with `len` letters.
fn alternating(x: usize, y: usize, len: usize) -> Vec<PLetter> {
    (0..len)
        .map(|i| PLetter {
            gen: if i % 2 == 0 { x } else { y },
            sign: 1,
        })
        .collect()
}

fn braid_relations(b: &mut Builder, s: &[usize]) {
    let n1 = s.len();
    for i in 0..n1 {
        for j in i + 1..n1 {
            if j - i > 1 {
                b.rel(cat(&[&g(s[i]), &g(s[j])]), cat(&[&g(s[j]), &g(s[i])]));
            }
        }
    }
    for i in 0..n1.saturating_sub(1) {
        b.rel(
            cat(&[&g(s[i]), &g(s[i + 1]), &g(s[i])]),
            cat(&[&g(s[i + 1]), &g(s[i]), &g(s[i + 1])]),
        );
    }
}

fn invertibility(b: &mut Builder, k: usize) {
    b.rel(
        vec![PLetter { gen: k, sign: 1 }, PLetter { gen: k, sign: -1 }],
        vec![],
    );
    b.rel(
        vec![PLetter { gen: k, sign: -1 }, PLetter { gen: k, sign: 1 }],
        vec![],
    );
}

/// Relations of the two-generator presentation on labels (s1, s):
/// s1 s^i s1 s^{-i} = s^i s1 s^{-i} s1 for 2 ≤ i ≤ n/2, s^n = (s s1)^{n−1}.
fn two_generator_core(b: &mut Builder, s1: usize, s: usize, n: usize) {
    for i in 2..=(n / 2) {
        let conj = cat(&[&pw(s, i as i64), &g(s1), &pw(s, -(i as i64))]);
        b.rel(cat(&[&g(s1), &conj]), cat(&[&conj, &g(s1)]));
    }
    let mut rhs = Vec::new();
    for _ in 0..n - 1 {
        rhs.extend(cat(&[&g(s), &g(s1)]));
    }
    b.rel(pw(s, n as i64), rhs);
}

fn require_n(family: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParams {
            family: family.to_string(),
            reason: format!("needs n ≥ {min}, got {n}"),
        });
    }
    Ok(())
}

/// Parameters for the builtin families: `n` for most, `(e, r)` for the
/// complex-reflection series.
#[derive(Debug, Clone, Copy, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub e: Option<usize>,
    pub r: Option<usize>,
}

/// Every builtin presentation family by CLI name.
pub const FAMILIES: &[&str] = &[
    "artin",
    "two-gen",
    "lin",
    "type-b",
    "type-d",
    "type-b-few",
    "type-d-few",
    "e8",
    "b2eer",
    "beer",
    "g30",
    "g34",
    "sphere",
    "sphere-few",
    "bp",
    "bp-few",
    "sb",
    "sb-few",
    "sb-bkl",
    "sb-ann",
    "ib",
    "ib-balanced",
    "ib-few",
    "sym-inverse",
    "ib-sphere",
    "ib-type-b",
    "inv-type-b",
    "ibp",
    "ivb",
    "psb",
];

/// Builds one of the catalogued presentations.
pub fn builtin_presentation(family: &str, params: FamilyParams) -> Result<Presentation> {
    let n = params.n.unwrap_or(0);
    match family {
        "artin" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            braid_relations(&mut b, &s);
            Ok(b.finish("artin"))
        }
        "two-gen" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s1 = b.gen("s1", true);
            let s = b.gen("s", true);
            two_generator_core(&mut b, s1, s, n);
            Ok(b.finish("two-gen"))
        }
        "lin" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s = b.gen("s", true);
            let bb = b.gen("b", true);
            for i in 2..=(n / 2) {
                let i = i as i64;
                // b s^{i-1} b = s^i b s^{-i-1} b s^i
                b.rel(
                    cat(&[&g(bb), &pw(s, i - 1), &g(bb)]),
                    cat(&[&pw(s, i), &g(bb), &pw(s, -i - 1), &g(bb), &pw(s, i)]),
                );
            }
            b.rel(pw(s, n as i64), pw(bb, n as i64 - 1));
            Ok(b.finish("lin"))
        }
        "type-b" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let t = b.gen("t", true);
            braid_relations(&mut b, &s);
            for i in 1..n - 1 {
                b.rel(cat(&[&g(t), &g(s[i])]), cat(&[&g(s[i]), &g(t)]));
            }
            b.rel(
                cat(&[&g(t), &g(s[0]), &g(t), &g(s[0])]),
                cat(&[&g(s[0]), &g(t), &g(s[0]), &g(t)]),
            );
            Ok(b.finish("type-b"))
        }
        "type-d" => {
            require_n(family, n, 3)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let r = b.gen("r", true);
            braid_relations(&mut b, &s);
            // r commutes with every σ_i except σ2
            for i in (1..n).filter(|&i| i != 2) {
                b.rel(cat(&[&g(r), &g(s[i - 1])]), cat(&[&g(s[i - 1]), &g(r)]));
            }
            b.rel(
                cat(&[&g(r), &g(s[1]), &g(r)]),
                cat(&[&g(s[1]), &g(r), &g(s[1])]),
            );
            Ok(b.finish("type-d"))
        }
        "type-b-few" => {
            require_n(family, n, 3)?;
            let mut b = Builder::new();
            let s1 = b.gen("s1", true);
            let s = b.gen("s", true);
            let t = b.gen("t", true);
            two_generator_core(&mut b, s1, s, n);
            for i in 2..=(n as i64 - 2) {
                let conj = cat(&[&pw(s, i), &g(s1), &pw(s, -i)]);
                b.rel(cat(&[&g(t), &conj]), cat(&[&conj, &g(t)]));
            }
            b.rel(
                cat(&[&g(t), &g(s1), &g(t), &g(s1)]),
                cat(&[&g(s1), &g(t), &g(s1), &g(t)]),
            );
            Ok(b.finish("type-b-few"))
        }
        "type-d-few" => {
            require_n(family, n, 3)?;
            let mut b = Builder::new();
            let s1 = b.gen("s1", true);
            let s = b.gen("s", true);
            let r = b.gen("r", true);
            two_generator_core(&mut b, s1, s, n);
            for i in std::iter::once(0).chain(2..=(n as i64 - 2)) {
                let conj = cat(&[&pw(s, i), &g(s1), &pw(s, -i)]);
                b.rel(cat(&[&g(r), &conj]), cat(&[&conj, &g(r)]));
            }
            let c = cat(&[&g(s), &g(s1), &pw(s, -1)]);
            b.rel(cat(&[&g(r), &c, &g(r)]), cat(&[&c, &g(r), &c]));
            Ok(b.finish("type-d-few"))
        }
        "e8" => {
            let mut b = Builder::new();
            let s1 = b.gen("s1", true);
            let s = b.gen("s", true);
            let w = b.gen("w", true);
            for i in [2i64, 3, 4] {
                let conj = cat(&[&pw(s, i), &g(s1), &pw(s, -i)]);
                b.rel(cat(&[&g(s1), &conj]), cat(&[&conj, &g(s1)]));
            }
            let mut rhs = Vec::new();
            for _ in 0..7 {
                rhs.extend(cat(&[&g(s), &g(s1)]));
            }
            b.rel(pw(s, 8), rhs);
            for i in [0i64, 1, 3, 4, 5, 6] {
                let conj = cat(&[&pw(s, i), &g(s1), &pw(s, -i)]);
                b.rel(cat(&[&g(w), &conj]), cat(&[&conj, &g(w)]));
            }
            let c = cat(&[&pw(s, 2), &g(s1), &pw(s, -2)]);
            b.rel(cat(&[&g(w), &c, &g(w)]), cat(&[&c, &g(w), &c]));
            Ok(b.finish("e8"))
        }
        "b2eer" => {
            let (e, r) = (params.e.unwrap_or(0), params.r.unwrap_or(0));
            if e < 2 || r < 2 {
                return Err(Error::InvalidParams {
                    family: family.into(),
                    reason: "needs e ≥ 2 and r ≥ 2".into(),
                });
            }
            let mut b = Builder::new();
            let t2 = b.gen("t2", true);
            let t = b.gen("t", true);
            let s = b.gen("s", true);
            let t2p = b.gen("t2p", true);
            two_generator_core(&mut b, t2, t, r);
            for i in 1..=(r as i64 - 2) {
                let conj = cat(&[&pw(t, i), &g(t2), &pw(t, -i)]);
                b.rel(cat(&[&g(s), &conj]), cat(&[&conj, &g(s)]));
            }
            b.rel(
                cat(&[&g(s), &g(t2p), &g(t2)]),
                cat(&[&g(t2p), &g(t2), &g(s)]),
            );
            let c = cat(&[&g(t), &g(t2), &pw(t, -1)]);
            b.rel(cat(&[&g(t2p), &c, &g(t2p)]), cat(&[&c, &g(t2p), &c]));
            b.rel(
                cat(&[&c, &g(t2p), &g(t2), &c, &g(t2p), &g(t2)]),
                cat(&[&g(t2p), &g(t2), &c, &g(t2p), &g(t2), &c]),
            );
            // length-(e+1) alternating relation
            let mut lhs = vec![PLetter { gen: t2, sign: 1 }];
            lhs.extend(alternating(s, t2p, e));
            let mut lhs = lhs;
            // interleave: t2 s t2p t2 t2p …  (after s the letters alternate t2p, t2)
            lhs.truncate(2);
            lhs.extend(alternating(t2p, t2, e - 1));
            let rhs = {
                let mut w = vec![PLetter { gen: s, sign: 1 }];
                w.extend(alternating(t2p, t2, e));
                w
            };
            b.rel(lhs, rhs);
            Ok(b.finish("b2eer"))
        }
        "beer" => {
            let (e, r) = (params.e.unwrap_or(0), params.r.unwrap_or(0));
            if e < 2 || r < 3 {
                return Err(Error::InvalidParams {
                    family: family.into(),
                    reason: "needs e ≥ 2 and r ≥ 3".into(),
                });
            }
            let mut b = Builder::new();
            let t2 = b.gen("t2", true);
            let t = b.gen("t", true);
            let t2p = b.gen("t2p", true);
            two_generator_core(&mut b, t2, t, r);
            let c = cat(&[&g(t), &g(t2), &pw(t, -1)]);
            b.rel(cat(&[&g(t2p), &c, &g(t2p)]), cat(&[&c, &g(t2p), &c]));
            b.rel(
                cat(&[&c, &g(t2p), &g(t2), &c, &g(t2p), &g(t2)]),
                cat(&[&g(t2p), &g(t2), &c, &g(t2p), &g(t2), &c]),
            );
            b.rel(alternating(t2, t2p, e), alternating(t2p, t2, e));
            Ok(b.finish("beer"))
        }
        "g30" => {
            let mut b = Builder::new();
            let s1 = b.gen("s1", true);
            let s = b.gen("s", true);
            let t = b.gen("t", true);
            let conj = cat(&[&pw(s, 2), &g(s1), &pw(s, -2)]);
            b.rel(cat(&[&g(s1), &conj]), cat(&[&conj, &g(s1)]));
            let mut rhs = Vec::new();
            for _ in 0..3 {
                rhs.extend(cat(&[&g(s), &g(s1)]));
            }
            b.rel(pw(s, 4), rhs);
            for i in [2i64, 3] {
                let conj = cat(&[&pw(s, i), &g(s1), &pw(s, -i)]);
                b.rel(cat(&[&g(t), &conj]), cat(&[&conj, &g(t)]));
            }
            b.rel(
                cat(&[&g(t), &g(s1), &g(t), &g(s1), &g(t)]),
                cat(&[&g(s1), &g(t), &g(s1), &g(t), &g(s1)]),
            );
            Ok(b.finish("g30"))
        }
        "g34" => {
            let mut b = Builder::new();
            let s = b.gen("s", true);
            let z = b.gen("z", true);
            let w = b.gen("w", true);
            for i in [2i64, 3] {
                let conj = cat(&[&pw(z, i), &g(s), &pw(z, -i)]);
                b.rel(cat(&[&g(s), &conj]), cat(&[&conj, &g(s)]));
            }
            let mut rhs = Vec::new();
            for _ in 0..5 {
                rhs.extend(cat(&[&g(z), &g(s)]));
            }
            b.rel(pw(z, 6), rhs);
            for i in [0i64, 3, 4] {
                let conj = cat(&[&pw(z, i), &g(s), &pw(z, -i)]);
                b.rel(cat(&[&g(w), &conj]), cat(&[&conj, &g(w)]));
            }
            for i in [1i64, 2] {
                let conj = cat(&[&pw(z, i), &g(s), &pw(z, -i)]);
                b.rel(
                    cat(&[&g(w), &conj, &g(w)]),
                    cat(&[&conj, &g(w), &conj]),
                );
            }
            let c1 = cat(&[&pw(z, 2), &g(s), &pw(z, -2)]);
            let c2 = cat(&[&pw(z, 1), &g(s), &pw(z, -1)]);
            b.rel(
                cat(&[&g(w), &c1, &g(w), &c2, &g(w), &c1]),
                cat(&[&c2, &g(w), &c1, &g(w), &c2, &g(w)]),
            );
            Ok(b.finish("g34"))
        }
        "sphere" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let d: Vec<usize> = (1..n).map(|i| b.gen(&format!("d{i}"), true)).collect();
            braid_relations(&mut b, &d);
            // d1 d2 … d_{n−2} d_{n−1}² d_{n−2} … d2 d1 = 1
            let mut lhs = Vec::new();
            for i in 0..n - 1 {
                lhs.extend(g(d[i]));
            }
            for i in (0..n - 1).rev() {
                lhs.extend(g(d[i]));
            }
            b.rel(lhs, vec![]);
            Ok(b.finish("sphere"))
        }
        "sphere-few" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let d1 = b.gen("d1", true);
            let d = b.gen("d", true);
            two_generator_core(&mut b, d1, d, n);
            // d^n (d1 d^{-1})^{n−1} = 1
            let mut lhs = pw(d, n as i64);
            for _ in 0..n - 1 {
                lhs.extend(cat(&[&g(d1), &pw(d, -1)]));
            }
            b.rel(lhs, vec![]);
            Ok(b.finish("sphere-few"))
        }
        "bp" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let k: Vec<usize> = (1..n).map(|i| b.gen(&format!("xi{i}"), true)).collect();
            braid_relations(&mut b, &s);
            // symmetric group relations for ξ
            for i in 0..n - 1 {
                for j in i + 1..n - 1 {
                    if j - i > 1 {
                        b.rel(cat(&[&g(k[i]), &g(k[j])]), cat(&[&g(k[j]), &g(k[i])]));
                    }
                }
            }
            for i in 0..n.saturating_sub(2) {
                b.rel(
                    cat(&[&g(k[i]), &g(k[i + 1]), &g(k[i])]),
                    cat(&[&g(k[i + 1]), &g(k[i]), &g(k[i + 1])]),
                );
            }
            for i in 0..n - 1 {
                b.rel(cat(&[&g(k[i]), &g(k[i])]), vec![]);
            }
            // mixed relations
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    if i.abs_diff(j) > 1 {
                        b.rel(cat(&[&g(s[i]), &g(k[j])]), cat(&[&g(k[j]), &g(s[i])]));
                    }
                }
            }
            for i in 0..n.saturating_sub(2) {
                b.rel(
                    cat(&[&g(k[i]), &g(k[i + 1]), &g(s[i])]),
                    cat(&[&g(s[i + 1]), &g(k[i]), &g(k[i + 1])]),
                );
                b.rel(
                    cat(&[&g(s[i]), &g(s[i + 1]), &g(k[i])]),
                    cat(&[&g(k[i + 1]), &g(s[i]), &g(s[i + 1])]),
                );
            }
            Ok(b.finish("bp"))
        }
        "bp-few" => {
            require_n(family, n, 3)?;
            let mut b = Builder::new();
            let s1 = b.gen("s1", true);
            let s = b.gen("s", true);
            let k1 = b.gen("xi1", true);
            two_generator_core(&mut b, s1, s, n);
            for i in 2..=(n as i64 - 2) {
                let conj_s = cat(&[&pw(s, i), &g(s1), &pw(s, -i)]);
                b.rel(cat(&[&g(k1), &conj_s]), cat(&[&conj_s, &g(k1)]));
                let conj_k = cat(&[&pw(s, i), &g(k1), &pw(s, -i)]);
                b.rel(cat(&[&g(k1), &conj_k]), cat(&[&conj_k, &g(k1)]));
            }
            // ξ1 s ξ1 s^{-1} σ1 = s σ1 s^{-1} ξ1 s ξ1 s^{-1}
            let kk = cat(&[&g(k1), &g(s), &g(k1), &pw(s, -1)]);
            let ss = cat(&[&g(s), &g(s1), &pw(s, -1)]);
            b.rel(cat(&[&kk, &g(s1)]), cat(&[&ss, &kk]));
            // ξ1 s ξ1 s^{-1} ξ1 = s ξ1 s^{-1} ξ1 s ξ1 s^{-1}
            let sk = cat(&[&g(s), &g(k1), &pw(s, -1)]);
            b.rel(cat(&[&kk, &g(k1)]), cat(&[&sk, &g(k1), &sk]));
            b.rel(cat(&[&g(k1), &g(k1)]), vec![]);
            Ok(b.finish("bp-few"))
        }
        "sb" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let x: Vec<usize> = (1..n).map(|i| b.gen(&format!("x{i}"), false)).collect();
            sb_relations(&mut b, &s, &x);
            Ok(b.finish("sb"))
        }
        "sb-few" => {
            require_n(family, n, 3)?;
            let mut b = Builder::new();
            let s1 = b.gen("s1", true);
            let s = b.gen("s", true);
            let x1 = b.gen("x1", false);
            two_generator_core(&mut b, s1, s, n);
            for i in std::iter::once(0).chain(2..=(n as i64 - 2)) {
                let conj = cat(&[&pw(s, i), &g(s1), &pw(s, -i)]);
                b.rel(cat(&[&g(x1), &conj]), cat(&[&conj, &g(x1)]));
            }
            for i in 2..=(n as i64 / 2) {
                let conj = cat(&[&pw(s, i), &g(x1), &pw(s, -i)]);
                b.rel(cat(&[&g(x1), &conj]), cat(&[&conj, &g(x1)]));
            }
            b.rel(
                cat(&[&pw(s, n as i64), &g(x1)]),
                cat(&[&g(x1), &pw(s, n as i64)]),
            );
            // x1 s σ1 s^{-1} σ1 = s σ1 s^{-1} σ1 s x1 s^{-1}
            let c = cat(&[&g(s), &g(s1), &pw(s, -1)]);
            b.rel(
                cat(&[&g(x1), &c, &g(s1)]),
                cat(&[&c, &g(s1), &g(s), &g(x1), &pw(s, -1)]),
            );
            invertibility(&mut b, s1);
            invertibility(&mut b, s);
            Ok(b.finish("sb-few"))
        }
        "sb-bkl" => {
            require_n(family, n, 2)?;
            Ok(sb_bkl_presentation(n))
        }
        "sb-ann" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let x: Vec<usize> = (1..n).map(|i| b.gen(&format!("x{i}"), false)).collect();
            let t = b.gen("t", true);
            // R1–R6: the plane singular relations
            sb_plane_relations(&mut b, &s, &x);
            // R7: τ σ1 τ σ1 = σ1 τ σ1 τ
            b.rel(
                cat(&[&g(t), &g(s[0]), &g(t), &g(s[0])]),
                cat(&[&g(s[0]), &g(t), &g(s[0]), &g(t)]),
            );
            // R8: τ σ1 τ x1 = x1 τ σ1 τ
            b.rel(
                cat(&[&g(t), &g(s[0]), &g(t), &g(x[0])]),
                cat(&[&g(x[0]), &g(t), &g(s[0]), &g(t)]),
            );
            // R9, R10: τ commutes with σ_i, x_i for i ≥ 2
            for i in 1..n - 1 {
                b.rel(cat(&[&g(t), &g(s[i])]), cat(&[&g(s[i]), &g(t)]));
                b.rel(cat(&[&g(t), &g(x[i])]), cat(&[&g(x[i]), &g(t)]));
            }
            // R11: invertibility
            for &si in &s {
                invertibility(&mut b, si);
            }
            invertibility(&mut b, t);
            Ok(b.finish("sb-ann"))
        }
        "ib" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let e = b.gen("e", false);
            braid_relations(&mut b, &s);
            ib_epsilon_relations(&mut b, &s, e);
            Ok(b.finish("ib"))
        }
        "ib-balanced" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let e: Vec<usize> = (1..=n).map(|i| b.gen(&format!("e{i}"), false)).collect();
            braid_relations(&mut b, &s);
            for &si in &s {
                invertibility(&mut b, si);
            }
            for i in 0..n - 1 {
                for j in 0..n {
                    if j != i && j != i + 1 {
                        b.rel(cat(&[&g(e[j]), &g(s[i])]), cat(&[&g(s[i]), &g(e[j])]));
                    }
                }
                b.rel(cat(&[&g(e[i]), &g(s[i])]), cat(&[&g(s[i]), &g(e[i + 1])]));
                b.rel(cat(&[&g(e[i + 1]), &g(s[i])]), cat(&[&g(s[i]), &g(e[i])]));
                b.rel(
                    cat(&[&g(e[i + 1]), &g(s[i]), &g(s[i])]),
                    cat(&[&g(s[i]), &g(s[i]), &g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i + 1]), &g(s[i]), &g(s[i])]),
                    cat(&[&g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i]), &g(e[i + 1]), &g(s[i])]),
                    cat(&[&g(s[i]), &g(e[i]), &g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i]), &g(e[i + 1]), &g(s[i])]),
                    cat(&[&g(e[i]), &g(e[i + 1])]),
                );
            }
            for &ei in &e {
                b.rel(cat(&[&g(ei)]), cat(&[&g(ei), &g(ei)]));
            }
            Ok(b.finish("ib-balanced"))
        }
        "ib-few" => {
            require_n(family, n, 3)?;
            let mut b = Builder::new();
            let s1 = b.gen("s1", true);
            let s = b.gen("s", true);
            let e = b.gen("e", false);
            invertibility(&mut b, s1);
            invertibility(&mut b, s);
            for i in 1..=(n as i64 - 2) {
                let conj = cat(&[&pw(s, i), &g(s1), &pw(s, -i)]);
                b.rel(cat(&[&g(e), &conj]), cat(&[&conj, &g(e)]));
            }
            let ese = cat(&[&g(e), &g(s1), &g(e)]);
            b.rel(ese.clone(), cat(&[&g(s1), &g(e), &g(s1), &g(e)]));
            b.rel(ese, cat(&[&g(e), &g(s1), &g(e), &g(s1)]));
            b.rel(g(e), cat(&[&g(e), &g(e)]));
            b.rel(g(e), cat(&[&g(e), &g(s1), &g(s1)]));
            b.rel(g(e), cat(&[&g(s1), &g(s1), &g(e)]));
            two_generator_core(&mut b, s1, s, n);
            Ok(b.finish("ib-few"))
        }
        "sym-inverse" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let e = b.gen("e", false);
            braid_relations(&mut b, &s);
            for &si in &s {
                b.rel(cat(&[&g(si), &g(si)]), vec![]);
            }
            for i in 1..n - 1 {
                b.rel(cat(&[&g(e), &g(s[i])]), cat(&[&g(s[i]), &g(e)]));
            }
            let ese = cat(&[&g(e), &g(s[0]), &g(e)]);
            b.rel(ese.clone(), cat(&[&g(s[0]), &g(e), &g(s[0]), &g(e)]));
            b.rel(ese, cat(&[&g(e), &g(s[0]), &g(e), &g(s[0])]));
            b.rel(g(e), cat(&[&g(e), &g(e)]));
            Ok(b.finish("sym-inverse"))
        }
        "ib-sphere" => {
            require_n(family, n, 2)?;
            let mut p = builtin_presentation("ib", params)?;
            let s: Vec<usize> = (1..n)
                .map(|i| p.generator_index(&format!("s{i}")).unwrap())
                .collect();
            let mut lhs = Vec::new();
            for &si in &s {
                lhs.push(PLetter { gen: si, sign: 1 });
            }
            for &si in s.iter().rev() {
                lhs.push(PLetter { gen: si, sign: 1 });
            }
            p.push_relation(lhs, Vec::new())?;
            p.set_name("ib-sphere".to_string());
            Ok(p)
        }
        "ib-type-b" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let e = b.gen("e", false);
            let t = b.gen("t", true);
            braid_relations(&mut b, &s);
            ib_epsilon_relations(&mut b, &s, e);
            for i in 1..n - 1 {
                b.rel(cat(&[&g(t), &g(s[i])]), cat(&[&g(s[i]), &g(t)]));
            }
            b.rel(
                cat(&[&g(t), &g(s[0]), &g(t), &g(s[0])]),
                cat(&[&g(s[0]), &g(t), &g(s[0]), &g(t)]),
            );
            invertibility(&mut b, t);
            b.rel(cat(&[&g(e), &g(t)]), cat(&[&g(t), &g(e)]));
            b.rel(cat(&[&g(e), &g(t)]), g(e));
            Ok(b.finish("ib-type-b"))
        }
        "inv-type-b" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let e = b.gen("e", false);
            let t = b.gen("t", true);
            braid_relations(&mut b, &s);
            for &si in &s {
                b.rel(cat(&[&g(si), &g(si)]), vec![]);
            }
            for i in 1..n - 1 {
                b.rel(cat(&[&g(e), &g(s[i])]), cat(&[&g(s[i]), &g(e)]));
            }
            let ese = cat(&[&g(e), &g(s[0]), &g(e)]);
            b.rel(ese.clone(), cat(&[&g(s[0]), &g(e), &g(s[0]), &g(e)]));
            b.rel(ese, cat(&[&g(e), &g(s[0]), &g(e), &g(s[0])]));
            b.rel(g(e), cat(&[&g(e), &g(e)]));
            for i in 1..n - 1 {
                b.rel(cat(&[&g(t), &g(s[i])]), cat(&[&g(s[i]), &g(t)]));
            }
            b.rel(
                cat(&[&g(t), &g(s[0]), &g(t), &g(s[0])]),
                cat(&[&g(s[0]), &g(t), &g(s[0]), &g(t)]),
            );
            b.rel(cat(&[&g(t), &g(t)]), vec![]);
            b.rel(cat(&[&g(e), &g(t)]), cat(&[&g(t), &g(e)]));
            b.rel(cat(&[&g(e), &g(t)]), g(e));
            Ok(b.finish("inv-type-b"))
        }
        "ibp" | "ivb" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let k: Vec<usize> = (1..n).map(|i| b.gen(&format!("xi{i}"), true)).collect();
            let e = b.gen("e", false);
            braid_relations(&mut b, &s);
            for i in 0..n - 1 {
                for j in i + 1..n - 1 {
                    if j - i > 1 {
                        b.rel(cat(&[&g(k[i]), &g(k[j])]), cat(&[&g(k[j]), &g(k[i])]));
                    }
                }
            }
            for i in 0..n.saturating_sub(2) {
                b.rel(
                    cat(&[&g(k[i]), &g(k[i + 1]), &g(k[i])]),
                    cat(&[&g(k[i + 1]), &g(k[i]), &g(k[i + 1])]),
                );
            }
            for i in 0..n - 1 {
                b.rel(cat(&[&g(k[i]), &g(k[i])]), vec![]);
            }
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    if i.abs_diff(j) > 1 {
                        b.rel(cat(&[&g(s[i]), &g(k[j])]), cat(&[&g(k[j]), &g(s[i])]));
                    }
                }
            }
            for i in 0..n.saturating_sub(2) {
                b.rel(
                    cat(&[&g(k[i]), &g(k[i + 1]), &g(s[i])]),
                    cat(&[&g(s[i + 1]), &g(k[i]), &g(k[i + 1])]),
                );
                if family == "ibp" {
                    // the move deleted in the virtual variant
                    b.rel(
                        cat(&[&g(s[i]), &g(s[i + 1]), &g(k[i])]),
                        cat(&[&g(k[i + 1]), &g(s[i]), &g(s[i + 1])]),
                    );
                }
            }
            ib_epsilon_relations(&mut b, &s, e);
            // the analogous relations between ξ and ε
            for i in 1..n - 1 {
                b.rel(cat(&[&g(e), &g(k[i])]), cat(&[&g(k[i]), &g(e)]));
            }
            let eke = cat(&[&g(e), &g(k[0]), &g(e)]);
            b.rel(eke.clone(), cat(&[&g(k[0]), &g(e), &g(k[0]), &g(e)]));
            b.rel(eke, cat(&[&g(e), &g(k[0]), &g(e), &g(k[0])]));
            b.rel(g(e), cat(&[&g(e), &g(k[0]), &g(k[0])]));
            b.rel(g(e), cat(&[&g(k[0]), &g(k[0]), &g(e)]));
            Ok(b.finish(family))
        }
        "psb" => {
            require_n(family, n, 2)?;
            let mut b = Builder::new();
            let s: Vec<usize> = (1..n).map(|i| b.gen(&format!("s{i}"), true)).collect();
            let x: Vec<usize> = (1..n).map(|i| b.gen(&format!("x{i}"), false)).collect();
            let e: Vec<usize> = (1..=n).map(|i| b.gen(&format!("e{i}"), false)).collect();
            sb_relations(&mut b, &s, &x);
            for i in 0..n - 1 {
                for j in 0..n {
                    if j != i && j != i + 1 {
                        b.rel(cat(&[&g(e[j]), &g(s[i])]), cat(&[&g(s[i]), &g(e[j])]));
                        b.rel(cat(&[&g(e[j]), &g(x[i])]), cat(&[&g(x[i]), &g(e[j])]));
                    }
                }
                b.rel(cat(&[&g(e[i]), &g(s[i])]), cat(&[&g(s[i]), &g(e[i + 1])]));
                b.rel(cat(&[&g(e[i + 1]), &g(s[i])]), cat(&[&g(s[i]), &g(e[i])]));
                b.rel(cat(&[&g(e[i]), &g(x[i])]), cat(&[&g(x[i]), &g(e[i + 1])]));
                b.rel(cat(&[&g(e[i + 1]), &g(x[i])]), cat(&[&g(x[i]), &g(e[i])]));
                b.rel(
                    cat(&[&g(e[i + 1]), &g(s[i]), &g(s[i])]),
                    cat(&[&g(s[i]), &g(s[i]), &g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i + 1]), &g(s[i]), &g(s[i])]),
                    cat(&[&g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i + 1]), &g(x[i]), &g(x[i])]),
                    cat(&[&g(x[i]), &g(x[i]), &g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i + 1]), &g(x[i]), &g(x[i])]),
                    cat(&[&g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i]), &g(e[i + 1]), &g(s[i])]),
                    cat(&[&g(s[i]), &g(e[i]), &g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i]), &g(e[i + 1]), &g(s[i])]),
                    cat(&[&g(e[i]), &g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i]), &g(e[i + 1]), &g(x[i])]),
                    cat(&[&g(x[i]), &g(e[i]), &g(e[i + 1])]),
                );
                b.rel(
                    cat(&[&g(e[i]), &g(e[i + 1]), &g(x[i])]),
                    cat(&[&g(e[i]), &g(e[i + 1])]),
                );
            }
            for &ei in &e {
                b.rel(g(ei), cat(&[&g(ei), &g(ei)]));
            }
            Ok(b.finish("psb"))
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// The ε–σ relation block with a single ε generator.
fn ib_epsilon_relations(b: &mut Builder, s: &[usize], e: usize) {
    for &si in s {
        invertibility(b, si);
    }
    for &si in s.iter().skip(1) {
        b.rel(cat(&[&g(e), &g(si)]), cat(&[&g(si), &g(e)]));
    }
    let ese = cat(&[&g(e), &g(s[0]), &g(e)]);
    b.rel(ese.clone(), cat(&[&g(s[0]), &g(e), &g(s[0]), &g(e)]));
    b.rel(ese, cat(&[&g(e), &g(s[0]), &g(e), &g(s[0])]));
    b.rel(g(e), cat(&[&g(e), &g(e)]));
    b.rel(g(e), cat(&[&g(e), &g(s[0]), &g(s[0])]));
    b.rel(g(e), cat(&[&g(s[0]), &g(s[0]), &g(e)]));
}

/// The plane singular-monoid relation families R1–R6 over σ_i, x_i.
fn sb_plane_relations(b: &mut Builder, s: &[usize], x: &[usize]) {
    let n1 = s.len();
    for i in 0..n1 {
        for j in 0..n1 {
            if i < j && j - i > 1 {
                b.rel(cat(&[&g(s[i]), &g(s[j])]), cat(&[&g(s[j]), &g(s[i])]));
                b.rel(cat(&[&g(x[i]), &g(x[j])]), cat(&[&g(x[j]), &g(x[i])]));
            }
            if i.abs_diff(j) != 1 {
                b.rel(cat(&[&g(x[i]), &g(s[j])]), cat(&[&g(s[j]), &g(x[i])]));
            }
        }
    }
    for i in 0..n1.saturating_sub(1) {
        b.rel(
            cat(&[&g(s[i]), &g(s[i + 1]), &g(s[i])]),
            cat(&[&g(s[i + 1]), &g(s[i]), &g(s[i + 1])]),
        );
        b.rel(
            cat(&[&g(s[i]), &g(s[i + 1]), &g(x[i])]),
            cat(&[&g(x[i + 1]), &g(s[i]), &g(s[i + 1])]),
        );
        b.rel(
            cat(&[&g(s[i + 1]), &g(s[i]), &g(x[i + 1])]),
            cat(&[&g(x[i]), &g(s[i + 1]), &g(s[i])]),
        );
    }
}

/// The full singular braid monoid presentation over σ_i^{±1}, x_i.
fn sb_relations(b: &mut Builder, s: &[usize], x: &[usize]) {
    sb_plane_relations(b, s, x);
    for &si in s {
        invertibility(b, si);
    }
}

/// The band-generator presentation of the singular braid monoid.
fn sb_bkl_presentation(n: usize) -> Presentation {
    let mut b = Builder::new();
    let mut a_idx: HashMap<(usize, usize), usize> = HashMap::new();
    let mut b_idx: HashMap<(usize, usize), usize> = HashMap::new();
    for t in 2..=n {
        for s in 1..t {
            a_idx.insert((t, s), b.gen(&format!("a({t},{s})"), true));
        }
    }
    for q in 2..=n {
        for p in 1..q {
            b_idx.insert((q, p), b.gen(&format!("b({q},{p})"), false));
        }
    }
    let commuting = |t: usize, s: usize, r: usize, q: usize| {
        (t as i64 - r as i64) * (t as i64 - q as i64) * (s as i64 - r as i64)
            * (s as i64 - q as i64)
            > 0
    };
    let pairs: Vec<(usize, usize)> = a_idx.keys().cloned().collect();
    let mut pairs = pairs;
    pairs.sort_unstable();
    for &(t, s) in &pairs {
        for &(r, q) in &pairs {
            if (t, s) < (r, q) && commuting(t, s, r, q) {
                b.rel(
                    cat(&[&g(a_idx[&(t, s)]), &g(a_idx[&(r, q)])]),
                    cat(&[&g(a_idx[&(r, q)]), &g(a_idx[&(t, s)])]),
                );
                b.rel(
                    cat(&[&g(b_idx[&(t, s)]), &g(b_idx[&(r, q)])]),
                    cat(&[&g(b_idx[&(r, q)]), &g(b_idx[&(t, s)])]),
                );
            }
            if commuting(t, s, r, q) {
                b.rel(
                    cat(&[&g(a_idx[&(t, s)]), &g(b_idx[&(r, q)])]),
                    cat(&[&g(b_idx[&(r, q)]), &g(a_idx[&(t, s)])]),
                );
            }
        }
    }
    for t in 3..=n {
        for s in 2..t {
            for r in 1..s {
                // a_ts a_sr = a_tr a_ts = a_sr a_tr
                let (ats, asr, atr) = (a_idx[&(t, s)], a_idx[&(s, r)], a_idx[&(t, r)]);
                b.rel(cat(&[&g(ats), &g(asr)]), cat(&[&g(atr), &g(ats)]));
                b.rel(cat(&[&g(ats), &g(asr)]), cat(&[&g(asr), &g(atr)]));
                // a_ts b_sr = b_tr a_ts; a_sr b_tr = b_ts a_sr; a_tr b_ts = b_sr a_tr
                let (bts, bsr, btr) = (b_idx[&(t, s)], b_idx[&(s, r)], b_idx[&(t, r)]);
                b.rel(cat(&[&g(ats), &g(bsr)]), cat(&[&g(btr), &g(ats)]));
                b.rel(cat(&[&g(asr), &g(btr)]), cat(&[&g(bts), &g(asr)]));
                b.rel(cat(&[&g(atr), &g(bts)]), cat(&[&g(bsr), &g(atr)]));
            }
        }
    }
    for t in 2..=n {
        for s in 1..t {
            b.rel(
                cat(&[&g(a_idx[&(t, s)]), &g(b_idx[&(t, s)])]),
                cat(&[&g(b_idx[&(t, s)]), &g(a_idx[&(t, s)])]),
            );
            invertibility(&mut b, a_idx[&(t, s)]);
        }
    }
    b.finish("sb-bkl")
}

// ---------------------------------------------------------------------------
// standard assignments for the verifiable families

fn braid_assignment(
    n: usize,
    images: Vec<(&str, BraidWord)>,
) -> Assignment<BraidModel> {
    let model = BraidModel { strands: n };
    let images = images
        .into_iter()
        .map(|(name, w)| {
            let nf = garside_nf(&w);
            let inv = garside_nf(&w.inverse());
            (name.to_string(), (nf, Some(inv)))
        })
        .collect();
    Assignment { model, images }
}

fn full_cycle_word(n: usize, shift: usize) -> BraidWord {
    // σ_{1+shift} σ_{2+shift} … σ_{n−1+shift} on n+shift strands
    let letters: Vec<i32> = (1..n).map(|i| (i + shift) as i32).collect();
    BraidWord::from_signed(n + shift, &letters).unwrap()
}

/// The canonical model for every verifiable builtin family; returns the
/// model's display name and the verification report.
pub fn verify_builtin(family: &str, params: FamilyParams) -> Result<VerificationReport> {
    let p = builtin_presentation(family, params)?;
    let n = params.n.unwrap_or(0);
    match family {
        "artin" => {
            let imgs = (1..n)
                .map(|i| {
                    (
                        format!("s{i}"),
                        BraidWord::from_signed(n, &[i as i32]).unwrap(),
                    )
                })
                .collect::<Vec<_>>();
            let asg = braid_assignment(
                n,
                imgs.iter().map(|(k, v)| (k.as_str(), v.clone())).collect(),
            );
            verify_homomorphism(&p, &asg, &format!("braid group on {n} strands"))
        }
        "two-gen" => {
            let asg = braid_assignment(
                n,
                vec![
                    ("s1", BraidWord::from_signed(n, &[1]).unwrap()),
                    ("s", full_cycle_word(n, 0)),
                ],
            );
            verify_homomorphism(&p, &asg, &format!("braid group on {n} strands"))
        }
        "lin" => {
            let sigma = full_cycle_word(n, 0);
            let beta = sigma
                .concat(&BraidWord::from_signed(n, &[1]).unwrap())
                .unwrap();
            let asg = braid_assignment(n, vec![("s", sigma), ("b", beta)]);
            verify_homomorphism(&p, &asg, &format!("braid group on {n} strands"))
        }
        "type-b" => {
            // embed into the braid group on n+1 strands: τ ↦ σ1², σ_i ↦ σ_{i+1}
            let mut imgs: Vec<(String, BraidWord)> = (1..n)
                .map(|i| {
                    (
                        format!("s{i}"),
                        BraidWord::from_signed(n + 1, &[(i + 1) as i32]).unwrap(),
                    )
                })
                .collect();
            imgs.push((
                "t".to_string(),
                BraidWord::from_signed(n + 1, &[1, 1]).unwrap(),
            ));
            let asg = braid_assignment(
                n + 1,
                imgs.iter().map(|(k, v)| (k.as_str(), v.clone())).collect(),
            );
            verify_homomorphism(&p, &asg, &format!("braid group on {} strands", n + 1))
        }
        "type-b-few" => {
            let asg = braid_assignment(
                n + 1,
                vec![
                    ("s1", BraidWord::from_signed(n + 1, &[2]).unwrap()),
                    ("s", full_cycle_word(n, 1)),
                    ("t", BraidWord::from_signed(n + 1, &[1, 1]).unwrap()),
                ],
            );
            verify_homomorphism(&p, &asg, &format!("braid group on {} strands", n + 1))
        }
        "bp" => {
            let model = FreeAutModel { rank: n };
            let mut images = HashMap::new();
            for i in 1..n {
                let a = FreeAutomorphism::braid_generator(n, i, 1);
                let ai = FreeAutomorphism::braid_generator(n, i, -1);
                images.insert(format!("s{i}"), (a, Some(ai)));
                let x = FreeAutomorphism::swap_generator(n, i);
                images.insert(format!("xi{i}"), (x.clone(), Some(x)));
            }
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("Aut(F_{n})"))
        }
        "bp-few" => {
            let model = FreeAutModel { rank: n };
            let mut sigma = FreeAutomorphism::identity(n);
            let mut sigma_inv = FreeAutomorphism::identity(n);
            for i in 1..n {
                sigma = sigma.then(&FreeAutomorphism::braid_generator(n, i, 1));
            }
            for i in (1..n).rev() {
                sigma_inv = sigma_inv.then(&FreeAutomorphism::braid_generator(n, i, -1));
            }
            let mut images = HashMap::new();
            images.insert(
                "s1".to_string(),
                (
                    FreeAutomorphism::braid_generator(n, 1, 1),
                    Some(FreeAutomorphism::braid_generator(n, 1, -1)),
                ),
            );
            images.insert("s".to_string(), (sigma, Some(sigma_inv)));
            let x = FreeAutomorphism::swap_generator(n, 1);
            images.insert("xi1".to_string(), (x.clone(), Some(x)));
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("Aut(F_{n})"))
        }
        "sb" | "sb-bkl" | "sb-few" | "sb-ann" => {
            let shift = if family == "sb-ann" { 1 } else { 0 };
            let m = n + shift;
            let model = SingularModel { strands: m };
            let mut images: HashMap<String, (SingularNF, Option<SingularNF>)> =
                HashMap::new();
            let sig = |i: usize| SBandGen::A {
                t: i + 1,
                s: i,
                sign: 1,
            };
            let sig_inv = |i: usize| SBandGen::A {
                t: i + 1,
                s: i,
                sign: -1,
            };
            let nf = |ls: Vec<SBandGen>| {
                singular_nf(&SBandWord::from_letters(m, ls).unwrap()).unwrap()
            };
            match family {
                "sb" | "sb-ann" => {
                    for i in 1..n {
                        images.insert(
                            format!("s{i}"),
                            (nf(vec![sig(i + shift)]), Some(nf(vec![sig_inv(i + shift)]))),
                        );
                        images.insert(
                            format!("x{i}"),
                            (
                                nf(vec![SBandGen::B {
                                    q: i + shift + 1,
                                    p: i + shift,
                                }]),
                                None,
                            ),
                        );
                    }
                    if family == "sb-ann" {
                        images.insert(
                            "t".to_string(),
                            (nf(vec![sig(1), sig(1)]), Some(nf(vec![sig_inv(1), sig_inv(1)]))),
                        );
                    }
                }
                "sb-few" => {
                    let sigma: Vec<SBandGen> = (1..n).map(sig).collect();
                    let sigma_inv: Vec<SBandGen> = (1..n).rev().map(sig_inv).collect();
                    images.insert("s1".to_string(), (nf(vec![sig(1)]), Some(nf(vec![sig_inv(1)]))));
                    images.insert("s".to_string(), (nf(sigma), Some(nf(sigma_inv))));
                    images.insert(
                        "x1".to_string(),
                        (nf(vec![SBandGen::B { q: 2, p: 1 }]), None),
                    );
                }
                "sb-bkl" => {
                    for t in 2..=n {
                        for s in 1..t {
                            images.insert(
                                format!("a({t},{s})"),
                                (
                                    nf(vec![SBandGen::A { t, s, sign: 1 }]),
                                    Some(nf(vec![SBandGen::A { t, s, sign: -1 }])),
                                ),
                            );
                            images.insert(
                                format!("b({t},{s})"),
                                (nf(vec![SBandGen::B { q: t, p: s }]), None),
                            );
                        }
                    }
                }
                _ => unreachable!(),
            }
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("singular braid monoid on {m} strands"))
        }
        "ib" | "ib-balanced" | "ib-few" | "ib-sphere-NOMODEL" => {
            let model = InverseBraidModel { strands: n };
            let mut images: HashMap<String, (PartialBraid, Option<PartialBraid>)> =
                HashMap::new();
            let sig = |i: usize, sign: i8| {
                pb_from_word(&IBWord::from_letters(n, vec![IBGen::Sigma { i, sign }]).unwrap())
                    .unwrap()
            };
            match family {
                "ib" | "ib-balanced" => {
                    for i in 1..n {
                        images.insert(format!("s{i}"), (sig(i, 1), Some(sig(i, -1))));
                    }
                    if family == "ib" {
                        images.insert(
                            "e".to_string(),
                            (PartialBraid::epsilon(n, 1)?, None),
                        );
                    } else {
                        for i in 1..=n {
                            images.insert(
                                format!("e{i}"),
                                (PartialBraid::epsilon(n, i)?, None),
                            );
                        }
                    }
                }
                "ib-few" => {
                    let mut sig_word: Vec<IBGen> = Vec::new();
                    for i in 1..n {
                        sig_word.push(IBGen::Sigma { i, sign: 1 });
                    }
                    let mut sig_word_inv: Vec<IBGen> = Vec::new();
                    for i in (1..n).rev() {
                        sig_word_inv.push(IBGen::Sigma { i, sign: -1 });
                    }
                    images.insert("s1".to_string(), (sig(1, 1), Some(sig(1, -1))));
                    images.insert(
                        "s".to_string(),
                        (
                            pb_from_word(&IBWord::from_letters(n, sig_word).unwrap())?,
                            Some(pb_from_word(
                                &IBWord::from_letters(n, sig_word_inv).unwrap(),
                            )?),
                        ),
                    );
                    images.insert("e".to_string(), (PartialBraid::epsilon(n, 1)?, None));
                }
                _ => unreachable!(),
            }
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("inverse braid monoid on {n} strands"))
        }
        "ib-type-b" => {
            // embed into the inverse braid monoid on n+1 strands
            let m = n + 1;
            let model = InverseBraidModel { strands: m };
            let mut images: HashMap<String, (PartialBraid, Option<PartialBraid>)> =
                HashMap::new();
            let sig = |i: usize, sign: i8| {
                pb_from_word(&IBWord::from_letters(m, vec![IBGen::Sigma { i, sign }]).unwrap())
                    .unwrap()
            };
            for i in 1..n {
                images.insert(format!("s{i}"), (sig(i + 1, 1), Some(sig(i + 1, -1))));
            }
            images.insert("e".to_string(), (PartialBraid::epsilon(m, 2)?, None));
            let tau = pb_from_word(
                &IBWord::from_letters(
                    m,
                    vec![IBGen::Sigma { i: 1, sign: 1 }, IBGen::Sigma { i: 1, sign: 1 }],
                )
                .unwrap(),
            )?;
            let tau_inv = tau.inverse();
            images.insert("t".to_string(), (tau, Some(tau_inv)));
            let asg = Assignment { model, images };
            verify_homomorphism(
                &p,
                &asg,
                &format!("inverse braid monoid on {m} strands, first strand fixed"),
            )
        }
        "sym-inverse" => {
            let model = InjectionModel { size: n };
            let mut images = HashMap::new();
            for i in 1..n {
                let t = PartialInjection::transposition(n, i);
                images.insert(format!("s{i}"), (t.clone(), Some(t)));
            }
            images.insert(
                "e".to_string(),
                (PartialInjection::partial_identity_without(n, 1), None),
            );
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("symmetric inverse monoid I_{n}"))
        }
        "inv-type-b" => {
            let model = SignedModel { size: n };
            let mut images = HashMap::new();
            for i in 1..n {
                let t = SignedPartialPermutation::transposition(n, i);
                images.insert(format!("s{i}"), (t.clone(), Some(t)));
            }
            let f = SignedPartialPermutation::flip_first(n);
            images.insert("t".to_string(), (f.clone(), Some(f)));
            images.insert(
                "e".to_string(),
                (SignedPartialPermutation::partial_identity_without(n, 1), None),
            );
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("partial signed permutations on {n} points"))
        }
        "ibp" => {
            let model = EfModel { rank: n };
            let mut images = HashMap::new();
            let iso = |letters: Vec<IBPGen>| ibp_model(n, &letters).unwrap();
            for i in 1..n {
                images.insert(
                    format!("s{i}"),
                    (
                        iso(vec![IBPGen::Sigma { i, sign: 1 }]),
                        Some(iso(vec![IBPGen::Sigma { i, sign: -1 }])),
                    ),
                );
                let x = iso(vec![IBPGen::Xi { i }]);
                images.insert(format!("xi{i}"), (x.clone(), Some(x)));
            }
            images.insert("e".to_string(), (iso(vec![IBPGen::Eps { i: 1 }]), None));
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("partial free-group isomorphisms EF_{n}"))
        }
        other => Err(Error::UnknownFamily(format!(
            "{other} has no computable model; generate it instead"
        ))),
    }
}

/// Quotient checks (necessary conditions) for the model-less families that
/// project onto symmetric / signed-permutation / partial-injection monoids.
pub fn verify_quotient(family: &str, params: FamilyParams) -> Result<Option<VerificationReport>> {
    let p = builtin_presentation(family, params)?;
    let n = params.n.unwrap_or(0);
    match family {
        "sphere" => {
            let model = SymmetricModel { size: n };
            let mut images = HashMap::new();
            for i in 1..n {
                let t = Permutation::adjacent_transposition(n, i);
                images.insert(format!("d{i}"), (t.clone(), Some(t)));
            }
            let asg = Assignment { model, images };
            Ok(Some(verify_homomorphism(&p, &asg, "symmetric group quotient")?))
        }
        "sphere-few" => {
            let model = SymmetricModel { size: n };
            let mut images = HashMap::new();
            let t = Permutation::adjacent_transposition(n, 1);
            images.insert("d1".to_string(), (t.clone(), Some(t)));
            let mut c = Permutation::identity(n);
            for i in 1..n {
                c = c.then(&Permutation::adjacent_transposition(n, i));
            }
            images.insert("d".to_string(), (c.inverse(), Some(c.clone())));
            images.insert("d".to_string(), (c.clone(), Some(c.inverse())));
            let asg = Assignment { model, images };
            Ok(Some(verify_homomorphism(&p, &asg, "symmetric group quotient")?))
        }
        "type-d" => {
            let model = SignedModel { size: n };
            let mut images = HashMap::new();
            for i in 1..n {
                let t = SignedPartialPermutation::transposition(n, i);
                images.insert(format!("s{i}"), (t.clone(), Some(t)));
            }
            let r = signed_negative_transposition(n);
            images.insert("r".to_string(), (r.clone(), Some(r)));
            let asg = Assignment { model, images };
            Ok(Some(verify_homomorphism(&p, &asg, "signed permutation quotient")?))
        }
        "type-d-few" => {
            let model = SignedModel { size: n };
            let mut images = HashMap::new();
            let t = SignedPartialPermutation::transposition(n, 1);
            images.insert("s1".to_string(), (t.clone(), Some(t)));
            let mut c = SignedPartialPermutation::identity(n);
            for i in 1..n {
                c = c.then(&SignedPartialPermutation::transposition(n, i));
            }
            let mut c_inv = SignedPartialPermutation::identity(n);
            for i in (1..n).rev() {
                c_inv = c_inv.then(&SignedPartialPermutation::transposition(n, i));
            }
            images.insert("s".to_string(), (c, Some(c_inv)));
            let r = signed_negative_transposition(n);
            images.insert("r".to_string(), (r.clone(), Some(r)));
            let asg = Assignment { model, images };
            Ok(Some(verify_homomorphism(&p, &asg, "signed permutation quotient")?))
        }
        "ib-sphere" | "ivb" | "psb" => {
            let model = InjectionModel { size: n };
            let mut images = HashMap::new();
            for i in 1..n {
                let t = PartialInjection::transposition(n, i);
                images.insert(format!("s{i}"), (t.clone(), Some(t.clone())));
                images.insert(format!("x{i}"), (t.clone(), None));
                images.insert(format!("xi{i}"), (t.clone(), Some(t)));
            }
            images.insert(
                "e".to_string(),
                (PartialInjection::partial_identity_without(n, 1), None),
            );
            for i in 1..=n {
                images.insert(
                    format!("e{i}"),
                    (PartialInjection::partial_identity_without(n, i), None),
                );
            }
            // keep only the images the presentation actually uses
            let used: Vec<String> = p.generators().iter().map(|g| g.name.clone()).collect();
            images.retain(|k, _| used.contains(k));
            let asg = Assignment { model, images };
            Ok(Some(verify_homomorphism(&p, &asg, "partial injection quotient")?))
        }
        _ => Ok(None),
    }
}

fn signed_negative_transposition(n: usize) -> SignedPartialPermutation {
    // 1 ↦ −2, 2 ↦ −1, fixes the rest
    let t = SignedPartialPermutation::transposition(n, 1);
    let f1 = SignedPartialPermutation::flip_first(n);
    // (−2)(−1): flip 1, swap, flip 1 gives 1↦−2, 2↦−1
    f1.then(&t).then(&f1)
}
