//! Braid words, colored braids, cabling and the mirror homomorphism.
//!
//! Braid equality is never decided on words; every comparison in this crate
//! happens inside a finite-dimensional representation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{Partition, Permutation};
use crate::error::{Error, Result};

/// `sigma_index^{+1}` or `sigma_index^{-1}`, with a 1-based index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn pos(index: usize) -> Self {
        BraidLetter { index, inverse: false }
    }

    pub fn neg(index: usize) -> Self {
        BraidLetter { index, inverse: true }
    }

    pub fn inverted(self) -> Self {
        BraidLetter { index: self.index, inverse: !self.inverse }
    }

    pub fn signed(self) -> i64 {
        if self.inverse {
            -(self.index as i64)
        } else {
            self.index as i64
        }
    }
}

/// A word in the standard generators of the braid group on `strands` strands.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::GeneratorOutOfRange { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// From signed indices: `[2, -1, 3]` is `sigma_2 sigma_1^{-1} sigma_3`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&s| {
                if s == 0 {
                    Err(Error::Parse("generator index 0".into()))
                } else if s > 0 {
                    Ok(BraidLetter::pos(s as usize))
                } else {
                    Ok(BraidLetter::neg(s.unsigned_abs() as usize))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    /// Parses whitespace separated signed integers, e.g. `"2 -1 3"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let signed = text
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad braid letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::from_signed(strands, &signed)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| format!("{}", l.signed())).collect();
        parts.join(" ")
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::SizeMismatch { expected: self.strands, found: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The inverse braid: letters reversed and inverted.
    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn pow(&self, e: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() * e);
        for _ in 0..e {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.inverse {
                write!(f, "s{}^-1", l.index)?;
            } else {
                write!(f, "s{}", l.index)?;
            }
        }
        Ok(())
    }
}

/// Image under `B_n -> S_n`, `sigma_i^{±1} ↦ s_i`, with
/// `pi(w_1 w_2) = pi(w_1) ∘ pi(w_2)`.
pub fn strand_permutation(w: &BraidWord) -> Permutation {
    w.letters
        .iter()
        .fold(Permutation::identity(w.strands), |acc, l| acc.compose(&Permutation::simple(l.index, w.strands)))
}

/// Cancels adjacent `sigma_i sigma_i^{-1}` pairs until none remain.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut out: Vec<BraidLetter> = Vec::with_capacity(w.len());
    for &l in &w.letters {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    BraidWord { strands: w.strands, letters: out }
}

/// The mirror homomorphism `sigma_i ↦ sigma_i^{-1}`.
pub fn invert_gens_obar(w: &BraidWord) -> BraidWord {
    BraidWord { strands: w.strands, letters: w.letters.iter().map(|l| l.inverted()).collect() }
}

/// Positive cable of one crossing: the rope of `left` strands starting after
/// `offset` strands is crossed by the rope of `right` strands to its right.
/// `right` descending runs of `left` letters each.
fn positive_rope_crossing(offset: usize, left: usize, right: usize) -> Vec<BraidLetter> {
    let mut letters = Vec::with_capacity(left * right);
    for r in 0..right {
        for q in 0..left {
            letters.push(BraidLetter::pos(offset + left + r - q));
        }
    }
    letters
}

/// Cabling `B_k -> B_n`: each strand becomes a rope of parallel strands,
/// with rope sizes taken from the parts of `p` in ascending order.
///
/// Rope sizes are carried along the word, so a letter acting on positions
/// `i, i + 1` cables the ropes currently sitting there. For the first letter,
/// and whenever the two ropes have equal size, this is the fixed formula
/// with partial sums of the parts.
pub fn cabling_zeta(p: &Partition, w: &BraidWord) -> Result<BraidWord> {
    if w.strands != p.k() {
        return Err(Error::SizeMismatch { expected: p.k(), found: w.strands });
    }
    let mut sizes = p.parts().to_vec();
    let mut letters = Vec::new();
    for l in &w.letters {
        let i = l.index - 1;
        let offset: usize = sizes[..i].iter().sum();
        let (a, b) = (sizes[i], sizes[i + 1]);
        if l.inverse {
            // inverse of the positive crossing that produced the current arrangement
            let pos = positive_rope_crossing(offset, b, a);
            letters.extend(pos.iter().rev().map(|x| x.inverted()));
        } else {
            letters.extend(positive_rope_crossing(offset, a, b));
        }
        sizes.swap(i, i + 1);
    }
    BraidWord::new(p.n().max(1), letters)
}

/// A braid on `k` strands whose strand permutation preserves the coloring by
/// part size: an element of the colored braid group of `p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredBraid {
    partition: Partition,
    word: BraidWord,
}

impl ColoredBraid {
    pub fn new(partition: &Partition, word: BraidWord) -> Result<Self> {
        if word.strands != partition.k() {
            return Err(Error::SizeMismatch { expected: partition.k(), found: word.strands });
        }
        let pi = strand_permutation(&word);
        let color = partition.coloring();
        if (0..partition.k()).any(|s| color[pi.apply(s)] != color[s]) {
            return Err(Error::NotColorPreserving);
        }
        Ok(ColoredBraid { partition: partition.clone(), word })
    }

    pub fn parse(partition: &Partition, text: &str) -> Result<Self> {
        ColoredBraid::new(partition, BraidWord::parse(partition.k(), text)?)
    }

    pub fn identity(partition: &Partition) -> Self {
        ColoredBraid { partition: partition.clone(), word: BraidWord::identity(partition.k()) }
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Underlying permutation of the `k` strands.
    pub fn strand_permutation(&self) -> Permutation {
        strand_permutation(&self.word)
    }

    pub fn concat(&self, other: &ColoredBraid) -> Result<ColoredBraid> {
        if self.partition != other.partition {
            return Err(Error::Invalid("colored braids over different partitions".into()));
        }
        Ok(ColoredBraid { partition: self.partition.clone(), word: self.word.concat(&other.word)? })
    }

    pub fn inverse(&self) -> ColoredBraid {
        ColoredBraid { partition: self.partition.clone(), word: self.word.inverse() }
    }
}

/// `psi`: the restriction of the strand permutation to each color class,
/// renumbered within the class; one permutation in `S_{m_j}` per color.
pub fn color_projection_psi(c: &ColoredBraid) -> Result<Vec<Permutation>> {
    let p = &c.partition;
    let pi = c.strand_permutation();
    let color = p.coloring();
    let mut out = Vec::with_capacity(p.colors());
    for j in 0..p.colors() {
        let class: Vec<usize> = (0..p.k()).filter(|&s| color[s] == j).collect();
        let images = class
            .iter()
            .map(|&s| class.iter().position(|&t| t == pi.apply(s)).ok_or(Error::NotColorPreserving))
            .collect::<Result<Vec<_>>>()?;
        out.push(Permutation::from_images(images)?);
    }
    Ok(out)
}

/// `kappa_a` as a colored braid, valid when strands `a` and `a + 1` share a color.
pub fn kappa(p: &Partition, a: usize) -> Result<ColoredBraid> {
    ColoredBraid::new(p, BraidWord::new(p.k(), alloc::vec![BraidLetter::pos(a)])?)
}

/// The pure braid `varsigma_{i,j}` (1-based colors `i < j`): with
/// `M_t = m_1 + ... + m_t`,
/// `kappa_{M_{j-1}}^{-1} ... kappa_{M_i+1}^{-1} kappa_{M_i}^2 kappa_{M_i+1} ... kappa_{M_{j-1}}`.
pub fn varsigma_generator(p: &Partition, i: usize, j: usize) -> Result<ColoredBraid> {
    let l = p.colors();
    if i == 0 || i >= j || j > l {
        return Err(Error::ColorIndex { i, j, colors: l });
    }
    let m = p.multiplicities();
    let partial = |t: usize| -> usize { m[..t].iter().sum() };
    let (lo, hi) = (partial(i), partial(j - 1));
    let mut letters = Vec::new();
    for a in (lo + 1..=hi).rev() {
        letters.push(BraidLetter::neg(a));
    }
    letters.push(BraidLetter::pos(lo));
    letters.push(BraidLetter::pos(lo));
    for a in lo + 1..=hi {
        letters.push(BraidLetter::pos(a));
    }
    ColoredBraid::new(p, BraidWord::new(p.k(), letters)?)
}

/// A named generator of the colored braid group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ColoredGenerator {
    /// `kappa_a` with strands `a`, `a + 1` of the same color.
    Kappa(usize),
    /// `varsigma_{i,j}`.
    Varsigma(usize, usize),
}

impl ColoredGenerator {
    pub fn braid(&self, p: &Partition) -> Result<ColoredBraid> {
        match *self {
            ColoredGenerator::Kappa(a) => kappa(p, a),
            ColoredGenerator::Varsigma(i, j) => varsigma_generator(p, i, j),
        }
    }

    pub fn name(&self) -> String {
        match self {
            ColoredGenerator::Kappa(a) => format!("kappa_{a}"),
            ColoredGenerator::Varsigma(i, j) => format!("varsigma_{i},{j}"),
        }
    }
}

/// The generating set: every same-color `kappa_a`, then every `varsigma_{i,j}`.
pub fn colored_generators(p: &Partition) -> Vec<ColoredGenerator> {
    let color = p.coloring();
    let mut out: Vec<ColoredGenerator> =
        (1..p.k()).filter(|&a| color[a - 1] == color[a]).map(ColoredGenerator::Kappa).collect();
    let l = p.colors();
    for i in 1..=l {
        for j in i + 1..=l {
            out.push(ColoredGenerator::Varsigma(i, j));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn strand_permutation_examples() {
        assert!(strand_permutation(&BraidWord::identity(3)).is_identity());
        let w = BraidWord::from_signed(3, &[1, 2]).unwrap();
        let s1s2 = Permutation::simple(1, 3).compose(&Permutation::simple(2, 3));
        assert_eq!(strand_permutation(&w), s1s2);
        assert!(strand_permutation(&BraidWord::from_signed(3, &[1, 1]).unwrap()).is_identity());
    }

    #[test]
    fn free_reduce_examples() {
        let r = |s: &[i64]| free_reduce(&BraidWord::from_signed(3, s).unwrap()).to_signed();
        assert_eq!(r(&[1, -1]), Vec::<i64>::new());
        assert_eq!(r(&[1, 2, -2, 1]), vec![1, 1]);
        assert_eq!(r(&[1, 2]), vec![1, 2]);
    }

    #[test]
    fn obar_examples() {
        let w = BraidWord::from_signed(3, &[1]).unwrap();
        assert_eq!(invert_gens_obar(&w).to_signed(), vec![-1]);
        let w = BraidWord::from_signed(3, &[1, -2]).unwrap();
        assert_eq!(invert_gens_obar(&w).to_signed(), vec![-1, 2]);
    }

    #[test]
    fn cabling_examples() {
        let k1 = BraidWord::from_signed(2, &[1]).unwrap();
        assert_eq!(cabling_zeta(&part(&[1, 1]), &k1).unwrap().to_signed(), vec![1]);
        let z = cabling_zeta(&part(&[2, 2]), &k1).unwrap();
        assert_eq!(z.to_signed(), vec![2, 1, 3, 2]);
        assert_eq!(strand_permutation(&z).one_line(), vec![3, 4, 1, 2]);
        assert!(cabling_zeta(&part(&[1, 2]), &BraidWord::identity(2)).unwrap().is_empty());
        assert!(cabling_zeta(&part(&[1, 2]), &BraidWord::identity(3)).is_err());
        // inverse letters cable to inverse braids
        let p = part(&[1, 2]);
        let w = BraidWord::from_signed(2, &[1, -1]).unwrap();
        assert!(free_reduce(&cabling_zeta(&p, &w).unwrap()).is_empty());
    }

    #[test]
    fn psi_examples() {
        let p = part(&[1, 1]);
        let psi = color_projection_psi(&kappa(&p, 1).unwrap()).unwrap();
        assert_eq!(psi, vec![Permutation::simple(1, 2)]);
        assert_eq!(kappa(&part(&[1, 2]), 1), Err(Error::NotColorPreserving));
        let pure = ColoredBraid::parse(&part(&[1, 2]), "1 1").unwrap();
        assert!(color_projection_psi(&pure).unwrap().iter().all(Permutation::is_identity));
    }

    #[test]
    fn varsigma_examples() {
        assert_eq!(varsigma_generator(&part(&[1, 2]), 1, 2).unwrap().word().to_signed(), vec![1, 1]);
        assert_eq!(varsigma_generator(&part(&[1, 2, 3]), 1, 3).unwrap().word().to_signed(), vec![-2, 1, 1, 2]);
        assert!(varsigma_generator(&part(&[1, 2]), 2, 2).is_err());
        assert!(varsigma_generator(&part(&[1, 2]), 1, 3).is_err());
        for n in 1..=7 {
            for p in Partition::all(n) {
                for g in colored_generators(&p) {
                    let c = g.braid(&p).unwrap();
                    if let ColoredGenerator::Varsigma(..) = g {
                        assert!(c.strand_permutation().is_identity());
                    }
                }
            }
        }
    }
}
