//! Finite-group engine for matched pairs and bicrossed (Zappa–Szép)
//! products.
//!
//! Groups are dense Cayley tables ([`FiniteGroup`]). A [`MatchedPair`]
//! carries a left action of `G` on `H` and a right action of `H` on `G`;
//! [`BicrossedGroup::build`] turns it into `H ⋈ G`. The [`factorization`]
//! module goes the other way, and [`cyclic`] enumerates every matched pair
//! of two cyclic groups and shows each product `C_p ⋈ C_m` is a semidirect
//! product of the same cyclic groups.

pub mod bicrossed;
pub mod cyclic;
pub mod error;
pub mod factorization;
pub mod group;
pub mod io;
pub mod iso;
pub mod matched_pair;

pub use bicrossed::{
    bicrossed_table, chi_xi_isomorphisms, decompose_from, decompose_to, induced_morphism, mediating_from,
    mediating_to, semidirect_product, BicrossedGroup, ChiXi, Mediator,
};
pub use cyclic::{
    enumerate_matched_pairs, enumerate_seeds, enumerate_semidirects, expand_seed, verify_main_theorem,
    witness_decomposition, CyclicPair, CyclicSeed, Orientation, SemidirectWitness, TheoremReport,
    DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use factorization::{find_exact_factorizations, recover_matched_pair, ExactFactorization};
pub use group::{FiniteGroup, OrderProfile, Subgroup};
pub use iso::{are_isomorphic, classify, Fingerprint, IsomorphismCertificate};
pub use matched_pair::{matched_pair_morphism, validate_actions, LeftAction, MatchedPair, RightAction};
