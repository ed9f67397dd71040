//! Matrix models of the three symmetric spaces: conormal pairs `(A, B)`,
//! the invariant quotient map, nilpotent orbit classification, generic
//! conormal construction and sampling, the normal-form verifier, and (for
//! `sl_n`) normal slices with their critical points.
//!
//! Construction and algebraic checks are exact over the rationals.

mod normal_form;
mod slice;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::combinatorics::{from_block_counts, Partition};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::morse::Case;
use crate::poly::{char_poly, elementary_symmetric_from_char_poly, Poly};
use crate::rational::{q, Q};

pub use normal_form::{generalized_eigenspaces, verify_normal_form, Eigenspace, NormalFormReport};
pub use slice::{slice_and_critical_points_I, CriticalPoint, SliceData, SliceReport};

/// A point `(A, B)` of `V x V`, together with the bilinear form defining
/// the space: symmetric `nu` in case II, skew `omega` in case III.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConormalPair {
    pub case: Case,
    pub a: Matrix<Q>,
    pub b: Matrix<Q>,
    pub form: Option<Matrix<Q>>,
}

impl ConormalPair {
    /// Size of the underlying vector space (`2n` in case III).
    pub fn size(&self) -> usize {
        self.a.rows()
    }

    /// Whether `m` lies in the space: trace zero, and self-adjoint for the
    /// form when there is one.
    pub fn in_space(&self, m: &Matrix<Q>) -> bool {
        in_space(self.case, self.form.as_ref(), m)
    }

    /// Conjugates by `g`: `A ↦ g A g^{-1}`, forms transform as
    /// `g^{-T} F g^{-1}`.
    pub fn conjugate(&self, g: &Matrix<Q>) -> Result<ConormalPair> {
        let gi = g.inverse()?;
        let conj = |m: &Matrix<Q>| g.mul_mat(m).mul_mat(&gi);
        let form = self.form.as_ref().map(|f| gi.transpose().mul_mat(f).mul_mat(&gi));
        Ok(ConormalPair { case: self.case, a: conj(&self.a), b: conj(&self.b), form })
    }
}

fn in_space(case: Case, form: Option<&Matrix<Q>>, m: &Matrix<Q>) -> bool {
    if !m.is_square() || !m.trace().is_zero() {
        return false;
    }
    match (case, form) {
        (Case::I, _) => true,
        (Case::II, Some(f)) => *f == f.transpose() && m.transpose().mul_mat(f) == f.mul_mat(m),
        (Case::III, Some(f)) => *f == -&f.transpose() && m.transpose().mul_mat(f) == f.mul_mat(m),
        _ => false,
    }
}

/// The regular nilpotent `J_n` (ones on the superdiagonal).
pub fn jordan_block(n: usize) -> Matrix<Q> {
    Matrix::from_fn(n, n, |r, c| if c == r + 1 { Q::one() } else { Q::zero() })
}

/// The antidiagonal symmetric form `F`, with `F J^T F = J`.
pub fn antidiagonal(n: usize) -> Matrix<Q> {
    Matrix::from_fn(n, n, |r, c| if r + c + 1 == n { Q::one() } else { Q::zero() })
}

/// `[[0, I], [-I, 0]]` of size `2n`.
pub fn standard_symplectic(n: usize) -> Matrix<Q> {
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if c == r + n {
            Q::one()
        } else if r == c + n {
            -Q::one()
        } else {
            Q::zero()
        }
    })
}

/// `(e_2, ..., e_n)` of the eigenvalues of `m` (of the halved spectrum in
/// case III), read off the characteristic polynomial.
pub fn quotient_map_f(case: Case, m: &Matrix<Q>) -> Result<Vec<Q>> {
    if !m.is_square() {
        return Err(Error::SizeMismatch { expected: m.rows(), found: m.cols() });
    }
    let cp = char_poly(m);
    let coeffs = if case == Case::III {
        Poly::new(cp).exact_sqrt().ok_or(Error::SpectrumNotDoubled)?.coeffs().to_vec()
    } else {
        cp
    };
    let mut e = elementary_symmetric_from_char_poly(&coeffs);
    e.remove(0);
    Ok(e)
}

/// Jordan type of a nilpotent matrix from the ranks of its powers; in case
/// III every block size must occur an even number of times and the
/// multiplicities are halved.
pub fn jordan_partition(case: Case, a: &Matrix<Q>) -> Result<Partition> {
    if !a.is_square() || !a.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let n = a.rows();
    // ranks[j] = rank(A^j)
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        power = power.mul_mat(a);
        ranks.push(power.rank());
    }
    // at_least[j] = number of blocks of size >= j
    let mut counts = vec![0usize; ranks.len()];
    for s in 1..ranks.len() {
        let at_least = ranks[s - 1] - ranks[s];
        let longer = if s + 1 < ranks.len() { ranks[s] - ranks[s + 1] } else { 0 };
        counts[s] = at_least - longer;
    }
    if case == Case::III {
        for (size, &c) in counts.iter().enumerate() {
            if c % 2 != 0 {
                return Err(Error::OddBlockMultiplicity { size, count: c });
            }
        }
        counts.iter_mut().for_each(|c| *c /= 2);
    }
    from_block_counts(&counts)
}

/// Whether `(A, B)` is conormal to the orbit of `A`: `A` nilpotent, both in
/// the space, and `AB = BA`.
pub fn is_conormal(pair: &ConormalPair) -> bool {
    pair.a.is_square()
        && pair.a.is_nilpotent()
        && pair.in_space(&pair.a)
        && pair.in_space(&pair.b)
        && pair.a.commutator(&pair.b).is_zero()
}

/// `u_i I + sum_d c_d N^d`.
fn poly_in(u: &Q, coeffs: &[Q], nil: &Matrix<Q>) -> Matrix<Q> {
    let mut out = Matrix::identity(nil.rows()).scale(u);
    let mut power = Matrix::identity(nil.rows());
    for c in coeffs {
        power = power.mul_mat(nil);
        out = out.add_mat(&power.scale(c));
    }
    out
}

/// The generic conormal in normal form: `A` block-diagonal with a regular
/// nilpotent on each `U_i`, and `B|U_i = u_i + P_i(A|U_i)`, where
/// `higher[i]` lists the coefficients of `x, x^2, ...` in `P_i`.
///
/// Case II uses the per-block antidiagonal form, case III the paired blocks
/// `diag(J, J^T)` on `U_i^+ ⊕ U_i^-` with `omega = [[0, I], [-I, 0]]` per part.
pub fn realize_conormal(case: Case, p: &Partition, u: &[Q], higher: &[Vec<Q>]) -> Result<ConormalPair> {
    let k = p.k();
    if u.len() != k {
        return Err(Error::SizeMismatch { expected: k, found: u.len() });
    }
    if !higher.is_empty() && higher.len() != k {
        return Err(Error::SizeMismatch { expected: k, found: higher.len() });
    }
    for i in 0..k {
        if u[..i].contains(&u[i]) {
            return Err(Error::RepeatedEigenvalue);
        }
    }
    let trace: Q = p.parts().iter().zip(u).map(|(&n, x)| x * q(n as i64)).sum();
    if !trace.is_zero() {
        return Err(Error::TraceCondition);
    }
    let none = Vec::new();
    let coeffs = |i: usize| higher.get(i).unwrap_or(&none);
    let mut a_blocks = Vec::with_capacity(k);
    let mut b_blocks = Vec::with_capacity(k);
    let mut f_blocks = Vec::with_capacity(k);
    for (i, &n) in p.parts().iter().enumerate() {
        let a = match case {
            Case::I | Case::II => jordan_block(n),
            Case::III => Matrix::block_diagonal(&[jordan_block(n), jordan_block(n).transpose()]),
        };
        b_blocks.push(poly_in(&u[i], coeffs(i), &a));
        a_blocks.push(a);
        match case {
            Case::I => {}
            Case::II => f_blocks.push(antidiagonal(n)),
            Case::III => f_blocks.push(standard_symplectic(n)),
        }
    }
    let form = (case != Case::I).then(|| Matrix::block_diagonal(&f_blocks));
    Ok(ConormalPair { case, a: Matrix::block_diagonal(&a_blocks), b: Matrix::block_diagonal(&b_blocks), form })
}

/// Random data for [`realize_conormal`]: distinct eigenvalues `u` with
/// `sum n_i u_i = 0` (the last one solved for, possibly fractional), and
/// small integer coefficients for the higher terms of each `P_i`.
pub fn sample_normal_form_data<R: Rng + ?Sized>(p: &Partition, rng: &mut R) -> (Vec<Q>, Vec<Vec<Q>>) {
    let k = p.k();
    let parts = p.parts();
    let u = loop {
        let mut u: Vec<Q> = (0..k - 1).map(|_| q(rng.random_range(-9..=9))).collect();
        let partial: Q = parts.iter().zip(&u).map(|(&n, x)| x * q(n as i64)).sum();
        u.push(-partial / q(parts[k - 1] as i64));
        if (0..k).all(|i| !u[..i].contains(&u[i])) {
            break u;
        }
    };
    let higher = parts.iter().map(|&n| (1..n).map(|_| q(rng.random_range(-3..=3))).collect()).collect();
    (u, higher)
}

/// A unit lower times unit upper triangular integer matrix: invertible over
/// the integers, entries small.
pub fn random_unimodular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix<Q> {
    let mut entry = |r: usize, c: usize, lower: bool| {
        if r == c {
            Q::one()
        } else if (r > c) == lower {
            q(rng.random_range(-2..=2))
        } else {
            Q::zero()
        }
    };
    let l = Matrix::from_fn(n, n, |r, c| entry(r, c, true));
    let u = Matrix::from_fn(n, n, |r, c| entry(r, c, false));
    l.mul_mat(&u)
}

/// A random generic conormal to the orbit of type `p`: the normal form of
/// [`realize_conormal`] with random data, conjugated by a random
/// unimodular matrix (forms transform accordingly).
pub fn sample_conormal<R: Rng + ?Sized>(case: Case, p: &Partition, rng: &mut R) -> Result<ConormalPair> {
    let (u, higher) = sample_normal_form_data(p, rng);
    let pair = realize_conormal(case, p, &u, &higher)?;
    let g = random_unimodular(pair.size(), rng);
    pair.conjugate(&g)
}

/// A short description of the space, for diagnostics.
pub fn describe_case(case: Case, n: usize) -> alloc::string::String {
    match case {
        Case::I => format!("sl_{n}"),
        Case::II => format!("sl_{n}/so_{n}"),
        Case::III => format!("sl_{}/sp_{}", 2 * n, 2 * n),
    }
}
