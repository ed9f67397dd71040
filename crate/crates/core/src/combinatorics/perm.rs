use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Stored 0-based. Products are compositions of maps: `(u * v)(x) = u(v(x))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 0-based images; fails unless a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::Invalid(format!("one-line notation is 1-based: {one_line:?}")));
        }
        Permutation::from_images(one_line.iter().map(|x| x - 1).collect())
    }

    /// The simple transposition `s_i` (1-based `i`) exchanging `i` and `i + 1`.
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "simple reflection s_{i} out of range for n = {n}");
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `s_i ∘ self` (swap the values `i`, `i + 1`).
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        for x in images.iter_mut() {
            if *x == i - 1 {
                *x = i;
            } else if *x == i {
                *x = i - 1;
            }
        }
        Permutation { images }
    }

    /// `self ∘ s_i` (swap the positions `i`, `i + 1`).
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Whether `l(s_i self) < l(self)`: the value `i + 1` precedes `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] > inv.images[i]
    }

    /// Whether `l(self s_i) < l(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// A reduced word `i_1 ... i_l` with `self = s_{i_1} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = (1..w.n()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// All permutations of `n` letters, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation { images: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.one_line().iter().map(|x| format!("{x}")).collect();
        parts.join(" ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

/// Advances to the next lexicographic arrangement; handles repeated entries.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
