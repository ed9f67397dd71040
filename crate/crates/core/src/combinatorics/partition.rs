use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{Error, Result};

/// A partition `n = n_1 + ... + n_k`, stored with parts ascending.
///
/// The ascending order fixes every block convention downstream: the `i`-th
/// part owns the consecutive letters `n_1 + ... + n_{i-1} + 1 ..= n_1 + ... + n_i`,
/// and the `j`-th color is the `j`-th smallest distinct part size.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    /// Parses comma separated positive integers, e.g. `"1,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// All partitions of `n`, each sorted ascending, in a fixed order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                let mut parts = cur.clone();
                parts.reverse();
                out.push(Partition { parts });
                return;
            }
            for p in (1..=max.min(remaining)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Parts in weakly decreasing order, the usual Young-diagram convention.
    pub fn descending(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    /// Total `n`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `k`.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// The `l` distinct part sizes, ascending.
    pub fn distinct_sizes(&self) -> Vec<usize> {
        let mut d = self.parts.clone();
        d.dedup();
        d
    }

    /// Multiplicities `m_1, ..., m_l` of the distinct sizes.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 && self.parts[i - 1] == *p {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
        }
        out
    }

    /// Number of colors `l`.
    pub fn colors(&self) -> usize {
        self.multiplicities().len()
    }

    /// Color (0-based) of every part.
    pub fn coloring(&self) -> Vec<usize> {
        let mut color = 0;
        let mut out = Vec::with_capacity(self.k());
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 && self.parts[i - 1] != *p {
                color += 1;
            }
            out.push(color);
        }
        out
    }

    /// 0-based letter range of every part.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    /// Part index (0-based) owning each 0-based letter.
    pub fn block_of_letter(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        for (i, &p) in self.parts.iter().enumerate() {
            out.extend(core::iter::repeat_n(i, p));
        }
        out
    }

    /// `n! / (n_1! ... n_k!)`, computed as a product of binomials.
    pub fn multinomial_dim(&self) -> u64 {
        let mut acc: u128 = 1;
        let mut total = 0usize;
        for &p in &self.parts {
            for j in 1..=p {
                total += 1;
                acc = acc * total as u128 / j as u128;
            }
        }
        u64::try_from(acc).expect("multinomial overflows u64")
    }

    /// 1-based simple reflections `s_j` with `j`, `j + 1` in the same block;
    /// they generate the Young subgroup `S_{n_1} x ... x S_{n_k}`.
    pub fn young_generators(&self) -> Vec<usize> {
        let block = self.block_of_letter();
        (1..self.n()).filter(|&j| block[j - 1] == block[j]).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("{p}"));
        }
        s
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let desc = self.descending();
        let parts: Vec<usize> = (0..desc[0]).map(|c| desc.iter().filter(|&&r| r > c).count()).collect();
        Partition::new(parts).expect("conjugate of a partition is a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

/// Partition from a Jordan-type count vector (`counts[s]` blocks of size `s`).
pub(crate) fn from_block_counts(counts: &[usize]) -> Result<Partition> {
    let mut parts = vec![];
    for (size, &c) in counts.iter().enumerate() {
        parts.extend(core::iter::repeat_n(size, c));
    }
    Partition::new(parts)
}
