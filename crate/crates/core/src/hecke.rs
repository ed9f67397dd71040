//! The algebra `H = C[B_n] / (sigma_1 - 1)^2` on the basis `T_w`, `w ∈ S_n`,
//! with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::braid::BraidWord;
use crate::combinatorics::{min_coset_rep_of, min_coset_reps, Partition, Permutation};
use crate::error::{Error, Result};
use crate::matrix::Subspace;
use crate::rational::{q, Q};

/// A finitely supported combination of basis elements `T_w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    n: usize,
    coeffs: BTreeMap<Permutation, Q>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, coeffs: BTreeMap::new() }
    }

    /// `T_e`.
    pub fn one(n: usize) -> Self {
        HeckeElement::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        let n = w.n();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w, Q::one());
        HeckeElement { n, coeffs }
    }

    /// `T_{s_i}`.
    pub fn generator(i: usize, n: usize) -> Self {
        HeckeElement::basis(Permutation::simple(i, n))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Q)>) -> Result<Self> {
        let mut x = HeckeElement::zero(n);
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::SizeMismatch { expected: n, found: w.n() });
            }
            x.add_term(w, c);
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Q)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> Q {
        self.coeffs.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, w: Permutation, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> HeckeElement {
        if c.is_zero() {
            return HeckeElement::zero(self.n);
        }
        HeckeElement { n: self.n, coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    fn check(&self, other: &HeckeElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    /// `T_{s_i} · self`.
    pub fn left_mul_generator(&self, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.coeffs {
            let sw = w.left_mul_simple(i);
            if w.has_left_descent(i) {
                out.add_term(w.clone(), c * q(2));
                out.add_term(sw, -c.clone());
            } else {
                out.add_term(sw, c.clone());
            }
        }
        out
    }

    /// `self · T_{s_i}`.
    pub fn right_mul_generator(&self, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.coeffs {
            let ws = w.right_mul_simple(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), c * q(2));
                out.add_term(ws, -c.clone());
            } else {
                out.add_term(ws, c.clone());
            }
        }
        out
    }

    /// `self · T_{s_i}^{-1} = self · (2 T_e - T_{s_i})`.
    pub fn right_mul_generator_inverse(&self, i: usize) -> HeckeElement {
        let mut out = self.scale(&q(2));
        for (w, c) in self.right_mul_generator(i).coeffs {
            out.add_term(w, -c);
        }
        out
    }

    /// Coordinates on a fixed list of basis permutations.
    pub fn to_vector(&self, basis: &[Permutation]) -> Vec<Q> {
        basis.iter().map(|w| self.coeff(w)).collect()
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})T{w}")?;
        }
        Ok(())
    }
}

/// Product in `H`, using `T_{s} T_w = T_{sw}` if `l(sw) > l(w)` and
/// `2 T_w - T_{sw}` otherwise.
pub fn hecke_multiply(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    a.check(b)?;
    let mut out = HeckeElement::zero(a.n);
    for (u, c) in &a.coeffs {
        let mut term = b.clone();
        for &i in u.reduced_word().iter().rev() {
            term = term.left_mul_generator(i);
        }
        for (w, x) in term.coeffs {
            out.add_term(w, x * c);
        }
    }
    Ok(out)
}

/// `sigma_i ↦ T_{s_i}`, `sigma_i^{-1} ↦ 2 T_e - T_{s_i}`.
pub fn braid_to_hecke(w: &BraidWord) -> HeckeElement {
    let mut x = HeckeElement::one(w.strands());
    for l in w.letters() {
        x = if l.inverse { x.right_mul_generator_inverse(l.index) } else { x.right_mul_generator(l.index) };
    }
    x
}

/// Image in the induced module `H ⊗_{H_P} 1`, as coordinates on
/// [`min_coset_reps`]. Each `T_v` with `v = w p` (`w` minimal, `p` in the
/// Young subgroup, lengths adding) becomes `T_w`.
pub fn reduce_mod_parabolic(x: &HeckeElement, p: &Partition) -> Result<Vec<Q>> {
    reduce_on(x, p, &min_coset_reps(p))
}

pub(crate) fn reduce_on(x: &HeckeElement, p: &Partition, reps: &[Permutation]) -> Result<Vec<Q>> {
    if x.n != p.n() {
        return Err(Error::SizeMismatch { expected: p.n(), found: x.n });
    }
    let index: BTreeMap<&Permutation, usize> = reps.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut out = alloc::vec![Q::zero(); reps.len()];
    for (v, c) in &x.coeffs {
        let w = min_coset_rep_of(v, p);
        out[index[&w]] += c;
    }
    Ok(out)
}

/// The left ideal `H · span{T_t - T_e : t Young-simple}`, i.e. the kernel of
/// `H -> H ⊗_{H_P} 1`, as a subspace of coordinates on `Permutation::all(n)`.
#[derive(Clone, Debug)]
pub struct ParabolicKernel {
    all: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
    span: Subspace,
}

impl ParabolicKernel {
    pub fn new(p: &Partition) -> Self {
        let n = p.n();
        let all = Permutation::all(n);
        let index: BTreeMap<Permutation, usize> = all.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut span = Subspace::new(all.len());
        for t in p.young_generators() {
            for v in &all {
                let x = HeckeElement::basis(v.clone()).right_mul_generator(t).sub(&HeckeElement::basis(v.clone()));
                let x = x.expect("same degree");
                span.insert(&to_coords(&x, &index, all.len()));
            }
        }
        ParabolicKernel { all, index, span }
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.all.len()
    }

    pub fn contains(&self, x: &HeckeElement) -> bool {
        self.span.contains(&to_coords(x, &self.index, self.all.len()))
    }
}

fn to_coords(x: &HeckeElement, index: &BTreeMap<Permutation, usize>, dim: usize) -> Vec<Q> {
    let mut v = alloc::vec![Q::zero(); dim];
    for (w, c) in &x.coeffs {
        v[index[w]] = c.clone();
    }
    v
}
