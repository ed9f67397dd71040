//! Floating-point complex linear algebra for the slice computations:
//! elimination, kernels, Gram–Schmidt, Jacobi eigenvalues, and hyper-dual
//! numbers for exact first and second derivatives.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Ring;

pub type C64 = Complex64;

pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn vec_norm(v: &[C64]) -> f64 {
    sqrt(v.iter().map(|z| z.norm_sqr()).sum())
}

pub fn frobenius_norm(m: &Matrix<C64>) -> f64 {
    vec_norm(m.data())
}

/// Hermitian inner product `<a, b> = sum conj(a_i) b_i`.
pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Solves the square system `a x = b` by Gaussian elimination with partial
/// pivoting.
pub fn solve(a: &Matrix<C64>, b: &[C64]) -> Result<Vec<C64>> {
    let n = a.rows();
    if !a.is_square() || b.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: b.len() });
    }
    let scale = frobenius_norm(a).max(f64::MIN_POSITIVE);
    let mut m: Vec<Vec<C64>> = (0..n)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r]);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| m[x][col].norm().total_cmp(&m[y][col].norm())).unwrap_or(col);
        if m[piv][col].norm() <= 1e-14 * scale {
            return Err(Error::Singular);
        }
        m.swap(col, piv);
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            if f.is_zero() {
                continue;
            }
            let (top, bottom) = m.split_at_mut(r);
            for (x, v) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= f * v;
            }
        }
    }
    let mut x = vec![C64::zero(); n];
    for r in (0..n).rev() {
        let mut acc = m[r][n];
        for c in r + 1..n {
            acc -= m[r][c] * x[c];
        }
        x[r] = acc / m[r][r];
    }
    Ok(x)
}

/// Minimum-norm least squares via the normal equations `a^H a x = a^H b`
/// (adequate for the tiny well-conditioned systems used here).
pub fn least_squares(a: &Matrix<C64>, b: &[C64]) -> Result<Vec<C64>> {
    let ah = conj_transpose(a);
    solve(&ah.mul_mat(a), &ah.mul_vec(b))
}

pub fn conj_transpose(a: &Matrix<C64>) -> Matrix<C64> {
    Matrix::from_fn(a.cols(), a.rows(), |r, c| a[(c, r)].conj())
}

/// An orthonormal basis of the kernel of `a`: rows of `a` are
/// orthonormalised, and the standard basis is projected off their span.
pub fn kernel_orthonormal(a: &Matrix<C64>, tol: f64) -> Vec<Vec<C64>> {
    let n = a.cols();
    // orthonormal basis of the row space of conj(a)
    let rows: Vec<Vec<C64>> = (0..a.rows()).map(|r| a.row(r).iter().map(|z| z.conj()).collect()).collect();
    let rowspace = gram_schmidt(&rows, tol);
    let mut basis = rowspace.clone();
    let start = basis.len();
    for i in 0..n {
        let mut e = vec![C64::zero(); n];
        e[i] = C64::one();
        if let Some(v) = orthonormal_extend(&basis, e, tol) {
            basis.push(v);
        }
    }
    basis.split_off(start)
}

fn orthonormal_extend(basis: &[Vec<C64>], mut v: Vec<C64>, tol: f64) -> Option<Vec<C64>> {
    for _ in 0..2 {
        for b in basis {
            let c = inner(b, &v);
            for (x, y) in v.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
    }
    let nrm = vec_norm(&v);
    (nrm > tol).then(|| v.iter().map(|x| x / nrm).collect())
}

/// Modified Gram–Schmidt with reorthogonalisation; drops vectors whose
/// residual norm falls below `tol` times their original norm.
pub fn gram_schmidt(vectors: &[Vec<C64>], tol: f64) -> Vec<Vec<C64>> {
    let mut out: Vec<Vec<C64>> = Vec::new();
    for v in vectors {
        let nrm = vec_norm(v);
        if nrm == 0.0 {
            continue;
        }
        let unit: Vec<C64> = v.iter().map(|x| x / nrm).collect();
        if let Some(u) = orthonormal_extend(&out, unit, tol) {
            out.push(u);
        }
    }
    out
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// ascending.
pub fn symmetric_eigenvalues(m: &Matrix<f64>) -> Vec<f64> {
    let n = m.rows();
    let mut a = m.clone();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum();
        let diag: f64 = (0..n).map(|i| a[(i, i)] * a[(i, i)]).sum();
        if off <= 1e-30 * diag.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Singular values of a complex matrix, ascending, from the eigenvalues of
/// the real embedding of `h^H h` (each appears twice there).
pub fn singular_values(h: &Matrix<C64>) -> Vec<f64> {
    let g = conj_transpose(h).mul_mat(h);
    let n = g.rows();
    let real = Matrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = g[(r % n, c % n)];
        match (r < n, c < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let ev = symmetric_eigenvalues(&real);
    ev.iter().step_by(2).map(|&x| sqrt(x.max(0.0))).collect()
}

/// `a + b e1 + c e2 + d e1 e2` with `e1^2 = e2^2 = 0`: evaluating a
/// polynomial map at `x + e1 u + e2 v` yields the value, the two
/// directional derivatives and the mixed second derivative exactly.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct HyperDual {
    pub re: C64,
    pub e1: C64,
    pub e2: C64,
    pub e12: C64,
}

impl HyperDual {
    pub fn new(re: C64, e1: C64, e2: C64) -> Self {
        HyperDual { re, e1, e2, e12: C64::zero() }
    }

    pub fn constant(re: C64) -> Self {
        HyperDual::new(re, C64::zero(), C64::zero())
    }
}

impl Add for HyperDual {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        HyperDual { re: self.re + o.re, e1: self.e1 + o.e1, e2: self.e2 + o.e2, e12: self.e12 + o.e12 }
    }
}

impl Sub for HyperDual {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        HyperDual { re: self.re - o.re, e1: self.e1 - o.e1, e2: self.e2 - o.e2, e12: self.e12 - o.e12 }
    }
}

impl Mul for HyperDual {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        HyperDual {
            re: self.re * o.re,
            e1: self.re * o.e1 + self.e1 * o.re,
            e2: self.re * o.e2 + self.e2 * o.re,
            e12: self.re * o.e12 + self.e1 * o.e2 + self.e2 * o.e1 + self.e12 * o.re,
        }
    }
}

impl Neg for HyperDual {
    type Output = Self;
    fn neg(self) -> Self {
        HyperDual { re: -self.re, e1: -self.e1, e2: -self.e2, e12: -self.e12 }
    }
}

impl Zero for HyperDual {
    fn zero() -> Self {
        HyperDual::constant(C64::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.e1.is_zero() && self.e2.is_zero() && self.e12.is_zero()
    }
}

impl One for HyperDual {
    fn one() -> Self {
        HyperDual::constant(C64::one())
    }
}

impl Ring for HyperDual {
    fn from_i64(k: i64) -> Self {
        HyperDual::constant(C64::new(k as f64, 0.0))
    }

    fn div_int(&self, k: i64) -> Self {
        let k = k as f64;
        HyperDual { re: self.re / k, e1: self.e1 / k, e2: self.e2 / k, e12: self.e12 / k }
    }
}
