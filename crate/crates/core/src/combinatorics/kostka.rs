//! Kostka numbers by semistandard tableau enumeration, irreducible
//! dimensions by the hook length formula, and irreducible characters of
//! `S_n` by the Murnaghan–Nakayama rule.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::Partition;

/// Number of semistandard tableaux of shape `shape` and content `content`.
///
/// Tableaux are built one value at a time: the cells holding value `i`
/// form a horizontal strip of size `content[i]` added to the current shape.
pub fn kostka_number(shape: &Partition, content: &[usize]) -> u64 {
    let target = shape.descending();
    if content.iter().sum::<usize>() != target.iter().sum::<usize>() {
        return 0;
    }
    fn strips(
        cur: &[usize],
        target: &[usize],
        size: usize,
        row: usize,
        next: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == target.len() {
            if size == 0 {
                out.push(next.clone());
            }
            return;
        }
        // a horizontal strip may extend row r at most up to the old length of row r-1
        let cap = if row == 0 { target[0] } else { cur[row - 1] };
        let hi = cap.min(target[row]);
        let lo = cur[row];
        for len in lo..=hi.max(lo) {
            let added = len - lo;
            if added > size {
                break;
            }
            next[row] = len;
            strips(cur, target, size - added, row + 1, next, out);
        }
        next[row] = cur[row];
    }
    fn count(cur: Vec<usize>, target: &[usize], content: &[usize]) -> u64 {
        let Some((&first, rest)) = content.split_first() else {
            return u64::from(cur == target);
        };
        let mut next = cur.clone();
        let mut out = Vec::new();
        strips(&cur, target, first, 0, &mut next, &mut out);
        out.into_iter().map(|s| count(s, target, rest)).sum()
    }
    count(vec![0; target.len()], &target, content)
}

/// Multiplicity of every irreducible (indexed by shape) in the permutation
/// module on `S_n / (S_{n_1} x ... x S_{n_k})`; shapes with multiplicity
/// zero are included.
pub fn kostka_decomposition(p: &Partition) -> BTreeMap<Partition, u64> {
    Partition::all(p.n())
        .into_iter()
        .map(|shape| {
            let k = kostka_number(&shape, p.parts());
            (shape, k)
        })
        .collect()
}

/// Dimension of the irreducible of the given shape (hook length formula).
pub fn irreducible_dim(shape: &Partition) -> u64 {
    let rows = shape.descending();
    let cols = shape.conjugate().descending();
    let n = shape.n();
    let mut num: u128 = (1..=n as u128).product();
    let mut den: u128 = 1;
    for (r, &len) in rows.iter().enumerate() {
        for (c, &height) in cols.iter().enumerate().take(len) {
            den *= ((len - c - 1) + (height - r - 1) + 1) as u128;
        }
    }
    num /= den;
    num as u64
}

/// Irreducible character of shape `shape` at a permutation of cycle type
/// `cycle_type`, via rim-hook removal on abacus positions.
pub fn irreducible_character(shape: &Partition, cycle_type: &[usize]) -> i64 {
    let rows = shape.descending();
    let len = rows.len();
    // first-column hook lengths (beta numbers)
    let beads: Vec<usize> = rows.iter().enumerate().map(|(i, &r)| r + len - 1 - i).collect();
    mn(beads, cycle_type)
}

fn mn(beads: Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let between = beads.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beads.clone();
        next[idx] = b - r;
        total += sign * mn(next, rest);
    }
    total
}

/// Size of the conjugacy class of cycle type `cycle_type` in `S_n`.
pub fn class_size(cycle_type: &[usize]) -> u64 {
    let n: usize = cycle_type.iter().sum();
    let mut z: u128 = 1;
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for &c in cycle_type {
        *counts.entry(c).or_default() += 1;
    }
    for (&len, &m) in &counts {
        z *= (len as u128).pow(m) * (1..=m as u128).product::<u128>();
    }
    ((1..=n as u128).product::<u128>() / z) as u64
}
