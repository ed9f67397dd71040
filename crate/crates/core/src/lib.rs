//! Morse groups of the nearby cycles sheaf for the three symmetric spaces
//! `sl_n`, `sl_n/so_n` and `sl_2n/sp_2n`, whose small Weyl group is the
//! symmetric group.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinatorics`]: partitions, critical-point labels ([`BetaMap`]),
//!   permutations, Young subgroups and Kostka numbers.
//! * [`braid`]: braid words, colored braids, cabling and the mirror map.
//! * [`hecke`]: the Hecke algebra of `S_n` with the quadratic relation
//!   `(T - 1)^2 = 0`, exact over the rationals.
//! * [`morse`]: the Morse group as an explicit module with the family and
//!   microlocal monodromy matrices, and a verifier for their identities.
//! * [`geometry`]: conormal pairs `(A, B)`, the quotient map, Jordan types,
//!   the normal-form verifier, and normal slices with critical points.
//! * [`tracker`]: numerical monodromy of critical values along braid paths.
//!
//! Everything is `no_std` + `alloc`; IO and file formats live in the
//! companion `symmorse-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod braid;
pub mod combinatorics;
pub mod error;
pub mod geometry;
pub mod hecke;
pub mod matrix;
pub mod morse;
pub mod numeric;
pub mod poly;
pub mod rational;
pub mod tracker;

pub use braid::{BraidLetter, BraidWord, ColoredBraid};
pub use combinatorics::{BetaMap, Partition, Permutation};
pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use matrix::Matrix;
pub use morse::{Case, ModuleRep};
pub use rational::Q;
