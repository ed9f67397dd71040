//! Partitions, critical-point labels, permutations and Young subgroups.

mod beta;
mod kostka;
mod partition;
mod perm;

pub use beta::{enumerate_beta, in_young_subgroup, min_coset_rep_of, min_coset_reps, sigma_action_on_beta, BetaMap};
pub use kostka::{class_size, irreducible_character, irreducible_dim, kostka_decomposition, kostka_number};
pub(crate) use partition::from_block_counts;
pub use partition::Partition;
pub use perm::Permutation;

/// `n! / (n_1! ... n_k!)`.
pub fn multinomial_dim(p: &Partition) -> u64 {
    p.multinomial_dim()
}
