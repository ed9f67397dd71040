use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::perm::next_permutation;
use super::{Partition, Permutation};
use crate::error::{Error, Result};

/// A critical-point label: a map from the letters `{1, ..., n}` (the
/// eigenvalues `lambda_i`) to the parts `{1, ..., k}` with fiber sizes `n_i`.
///
/// Stored 0-based on both sides.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BetaMap {
    assignment: Vec<usize>,
}

impl BetaMap {
    /// Validates fiber sizes against `p`.
    pub fn new(p: &Partition, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != p.n() {
            return Err(Error::SizeMismatch { expected: p.n(), found: assignment.len() });
        }
        let mut counts = alloc::vec![0usize; p.k()];
        for &b in &assignment {
            if b >= p.k() {
                return Err(Error::Invalid(format!("part index {} out of range", b + 1)));
            }
            counts[b] += 1;
        }
        if counts != p.parts() {
            return Err(Error::Invalid(format!("fiber sizes {counts:?} differ from {p}")));
        }
        Ok(BetaMap { assignment })
    }

    /// From 1-based assignment tuples, e.g. `[1, 2, 2]`.
    pub fn from_one_based(p: &Partition, assignment: &[usize]) -> Result<Self> {
        if assignment.contains(&0) {
            return Err(Error::Invalid("assignments are 1-based".into()));
        }
        BetaMap::new(p, assignment.iter().map(|b| b - 1).collect())
    }

    /// The monotone map `beta_0`.
    pub fn base(p: &Partition) -> Self {
        BetaMap { assignment: p.block_of_letter() }
    }

    /// 0-based part index of each 0-based letter.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.assignment.iter().map(|b| b + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    /// Letters sent to part `i`, ascending.
    pub fn fiber(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&x| self.assignment[x] == i).collect()
    }

    /// `w . beta = beta ∘ w^{-1}`.
    pub fn act(&self, w: &Permutation) -> Result<BetaMap> {
        if w.n() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: w.n() });
        }
        let inv = w.inverse();
        Ok(BetaMap { assignment: (0..self.n()).map(|x| self.assignment[inv.apply(x)]).collect() })
    }

    /// Post-composition `pi ∘ beta` by a permutation of the parts. The result
    /// is a label only when `pi` preserves part sizes.
    pub fn relabel(&self, p: &Partition, pi: &Permutation) -> Result<BetaMap> {
        if pi.n() != p.k() {
            return Err(Error::SizeMismatch { expected: p.k(), found: pi.n() });
        }
        BetaMap::new(p, self.assignment.iter().map(|&b| pi.apply(b)).collect())
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.one_based().iter().map(|x| format!("{x}")).collect();
        parts.join(" ")
    }
}

impl fmt::Display for BetaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

/// All labels of `p`, lexicographic on assignment tuples; `beta_0` first.
pub fn enumerate_beta(p: &Partition) -> Vec<BetaMap> {
    let mut cur = p.block_of_letter();
    let mut out = Vec::with_capacity(p.multinomial_dim() as usize);
    loop {
        out.push(BetaMap { assignment: cur.clone() });
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// `w . beta = beta ∘ w^{-1}`.
pub fn sigma_action_on_beta(w: &Permutation, b: &BetaMap) -> Result<BetaMap> {
    b.act(w)
}

/// Minimal-length representatives of the left cosets `w (S_{n_1} x ... x S_{n_k})`,
/// ordered to match [`enumerate_beta`] under `w ↦ w . beta_0`.
pub fn min_coset_reps(p: &Partition) -> Vec<Permutation> {
    let blocks = p.blocks();
    enumerate_beta(p)
        .iter()
        .map(|beta| {
            let mut images = alloc::vec![0; p.n()];
            for (i, block) in blocks.iter().enumerate() {
                for (letter, target) in block.clone().zip(beta.fiber(i)) {
                    images[letter] = target;
                }
            }
            Permutation::from_images(images).expect("coset representative is a bijection")
        })
        .collect()
}

/// The minimal representative of `v (S_{n_1} x ... x S_{n_k})`, by greedy
/// descent: multiply on the right by Young generators that shorten `v`.
pub fn min_coset_rep_of(v: &Permutation, p: &Partition) -> Permutation {
    let gens = p.young_generators();
    let mut w = v.clone();
    while let Some(&j) = gens.iter().find(|&&j| w.has_right_descent(j)) {
        w = w.right_mul_simple(j);
    }
    w
}

/// Whether `w` lies in the Young subgroup of `p` (maps every block to itself).
pub fn in_young_subgroup(w: &Permutation, p: &Partition) -> bool {
    let block = p.block_of_letter();
    (0..w.n()).all(|x| block[w.apply(x)] == block[x])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let p = part(&[1, 1]);
        let all: Vec<_> = enumerate_beta(&p).iter().map(BetaMap::one_based).collect();
        assert_eq!(all, vec![vec![1, 2], vec![2, 1]]);

        // brute force: every map {1,2,3} -> {1,2} with fibers (1, 2)
        let p = part(&[1, 2]);
        let mut brute = Vec::new();
        for a in 1..=2 {
            for b in 1..=2 {
                for c in 1..=2 {
                    let t = [a, b, c];
                    if t.iter().filter(|&&x| x == 1).count() == 1 {
                        brute.push(t.to_vec());
                    }
                }
            }
        }
        let got: Vec<_> = enumerate_beta(&p).iter().map(BetaMap::one_based).collect();
        assert_eq!(got, brute);
        assert_eq!(got[0], vec![1, 2, 2]);

        let p = part(&[3]);
        assert_eq!(enumerate_beta(&p).len(), 1);
        assert_eq!(enumerate_beta(&p)[0].one_based(), vec![1, 1, 1]);
    }

    #[test]
    fn action_examples() {
        let p = part(&[1, 1]);
        let b0 = BetaMap::base(&p);
        assert_eq!(b0.act(&Permutation::identity(2)).unwrap(), b0);
        assert_eq!(b0.act(&Permutation::simple(1, 2)).unwrap().one_based(), vec![2, 1]);
        assert!(b0.act(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn action_is_left_action_n3() {
        let p = part(&[1, 2]);
        for u in Permutation::all(3) {
            for v in Permutation::all(3) {
                for b in enumerate_beta(&p) {
                    let lhs = b.act(&u.compose(&v)).unwrap();
                    let rhs = b.act(&v).unwrap().act(&u).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn coset_reps_examples() {
        assert_eq!(min_coset_reps(&part(&[2])), vec![Permutation::identity(2)]);
        let p = part(&[1, 2]);
        assert_eq!(p.young_generators(), vec![2]);
        // brute force: scan S_3 for the shortest member of each left coset
        let reps = min_coset_reps(&p);
        assert_eq!(reps.len(), 3);
        for w in &reps {
            for v in Permutation::all(3) {
                let same_coset = in_young_subgroup(&w.inverse().compose(&v), &p);
                if same_coset {
                    assert!(w.length() <= v.length());
                }
            }
        }
        assert_eq!(min_coset_reps(&part(&[2, 2])).len(), 6);
    }

    #[test]
    fn coset_reps_match_labels() {
        for n in 1..=5 {
            for p in Partition::all(n) {
                let b0 = BetaMap::base(&p);
                for (w, b) in min_coset_reps(&p).iter().zip(enumerate_beta(&p)) {
                    assert_eq!(b0.act(w).unwrap(), b);
                    assert_eq!(&min_coset_rep_of(w, &p), w);
                }
            }
        }
    }
}
