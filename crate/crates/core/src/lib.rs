//! Exact computational algebra for braid groups and their monoid relatives:
//! Artin words with Garside normal forms, the band-generator calculus with
//! its non-crossing-partition divisor lattice, the singular braid monoid in
//! band generators (word and conjugacy problems), the inverse braid monoid of
//! partial braids, and generators/verifiers for a catalog of presentations.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything can be shared freely across threads.

pub mod band;
pub mod bench;
pub mod error;
pub mod free;
pub mod grammar;
pub mod graph;
pub mod graph_verify;
pub mod garside;
pub mod inverse;
pub mod perm;
pub mod pres;
pub mod sampling;
pub mod singular;
pub mod word;

pub use band::{artin_to_band, band_equal, band_to_artin, bkl_nf, delta_band_word, delta_divisors, factor_join, factor_meet, BandGen, BandWord, BklNF, CanonicalFactor};
pub use error::{Error, Result};
pub use free::{act_free, free_reduce, FreeAutomorphism, FreeWord, PartialFreeIso};
pub use garside::{braid_equal, delta_word, garside_nf, GarsideNF};
pub use inverse::{abelianize, abelianize_word, brunnian_free_generators, brunnian_test, ef_image, ibp_model, pb_from_word, rho_b, typeb_embed, AbelianImage, IBGen, IBPGen, IBWord, PartialBraid, PartialInjection, SignedPartialPermutation};
pub use perm::{Permutation, PermutationBraid};
pub use pres::{builtin_presentation, verify_builtin, verify_homomorphism, verify_quotient, Assignment, FamilyParams, GenLabel, Monoid, PLetter, Presentation, VerificationReport, Verdict};
pub use graph::{sergiescu, GraphVariant, PlanarGraph};
pub use singular::{band_to_classical, classical_to_band, conjugacy_test, conjugate_by, delta_divide, left_cancel, pair_lcm, positive_closure, positive_conjugates, singular_equal, singular_nf, PosGen, SBandGen, SBandWord, SingularGen, SingularNF, SingularWord};
pub use word::{BraidGen, BraidWord};
