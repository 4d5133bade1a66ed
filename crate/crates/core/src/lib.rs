//! Exact computational kernel for low-dimensional topology bookkeeping.
//!
//! The crate is organized around five independent engines:
//!
//! - [`braid`]: words in the Artin braid group `B_n`, free reduction,
//!   closure permutations and component counts.
//! - [`canonical`]: the Garside left-greedy normal form, solving the word
//!   problem in `B_n` exactly. [`handle`] provides an independent second
//!   engine (Dehornoy handle reduction) used as a cross-check.
//! - [`qp`]: quasipositive factorizations and the topology (Euler
//!   characteristic, boundary components, genus) of the positively braided
//!   surfaces they define, plus band attachment and boundary sums.
//! - [`presentation`]: finitely presented groups with Tietze-style
//!   simplification, abelianization via Smith normal form, and the
//!   one-relator proper-subword test.
//! - [`lattice`] and [`stein`]: negative-definite intersection forms with
//!   complete short-vector enumeration and the adjunction-inequality sphere
//!   obstruction, fed by Legendrian handle data (tb, rotation, framings).
//!
//! Every decision path uses integer or rational arithmetic; there is no
//! floating point anywhere in the crate.

pub mod braid;
pub mod canonical;
pub mod error;
pub mod handle;
pub mod lattice;
pub mod presentation;
pub mod qp;
pub mod stein;

#[cfg(test)]
pub(crate) mod testwords;

pub use error::Error;
