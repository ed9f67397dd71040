//! Characteristic polynomials over any commutative ring with division by
//! integers, exact univariate polynomials over the rationals, and a
//! numerical root finder.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::rational::{q, Q};

/// Scalars for which the Faddeev–LeVerrier recursion makes sense.
pub trait Ring:
    Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_i64(k: i64) -> Self;
    fn div_int(&self, k: i64) -> Self;
}

impl Ring for Q {
    fn from_i64(k: i64) -> Self {
        q(k)
    }

    fn div_int(&self, k: i64) -> Self {
        self / q(k)
    }
}

impl Ring for f64 {
    fn from_i64(k: i64) -> Self {
        k as f64
    }

    fn div_int(&self, k: i64) -> Self {
        self / k as f64
    }
}

impl Ring for Complex64 {
    fn from_i64(k: i64) -> Self {
        Complex64::new(k as f64, 0.0)
    }

    fn div_int(&self, k: i64) -> Self {
        self / k as f64
    }
}

/// Coefficients `c_0, ..., c_n` of `det(x I - M) = sum c_i x^i`, by the
/// Faddeev–LeVerrier recursion (no division by ring elements).
pub fn char_poly<T: Ring>(m: &Matrix<T>) -> Vec<T> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut c = vec![T::zero(); n + 1];
    c[n] = T::one();
    let mut mk = Matrix::<T>::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul_mat(&mk);
        for i in 0..n {
            next[(i, i)] = next[(i, i)].clone() + c[n - k + 1].clone();
        }
        mk = next;
        let tr = m.mul_mat(&mk).trace();
        c[n - k] = -tr.div_int(k as i64);
    }
    c
}

/// `e_1, ..., e_n` of the eigenvalues, from the characteristic polynomial:
/// `e_k = (-1)^k c_{n-k}`.
pub fn elementary_symmetric_from_char_poly<T: Ring>(c: &[T]) -> Vec<T> {
    let n = c.len() - 1;
    (1..=n).map(|k| if k % 2 == 0 { c[n - k].clone() } else { -c[n - k].clone() }).collect()
}

/// Coefficients of `prod (x - r_i)`, low degree first.
pub fn poly_from_roots<T: Ring>(roots: &[T]) -> Vec<T> {
    let mut c = vec![T::one()];
    for r in roots {
        let mut next = vec![T::zero(); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + a.clone();
            next[i] = next[i].clone() - a.clone() * r.clone();
        }
        c = next;
    }
    c
}

/// Dense univariate polynomial over the rationals, low degree first, with
/// no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
        Poly::new((0..len).map(|i| get(self, i) - get(other, i)).collect())
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        let Some(rd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if rd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rd - dd + 1];
        for k in (0..=rd - dd).rev() {
            let c = &r[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        (Poly::new(quot), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: the product of the distinct irreducible factors.
    pub fn square_free_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// The monic `s` with `s^2 = self`, if `self` is monic and a perfect square.
    pub fn exact_sqrt(&self) -> Option<Poly> {
        let d = self.degree()?;
        if d % 2 != 0 || !self.leading().is_one() {
            return None;
        }
        let h = d / 2;
        // solve for the top coefficients of s by matching self from the top down
        let mut s = vec![Q::zero(); h + 1];
        s[h] = Q::one();
        for k in (0..h).rev() {
            // coefficient of x^{h+k} in s^2 is 2 s_k + sum_{i+j=h+k, i,j>k} s_i s_j
            let mut acc = Q::zero();
            for i in k + 1..=h {
                let j = h + k - i;
                if j > k && j <= h {
                    acc += &s[i] * &s[j];
                }
            }
            s[k] = (&self.coeffs[h + k] - acc) / q(2);
        }
        let s = Poly::new(s);
        (s.mul(&s) == *self).then_some(s)
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| Complex64::new(crate::rational::to_f64(c), 0.0)).collect()
    }
}

/// All complex roots of a polynomial (low degree first, nonzero leading
/// coefficient), by Durand–Kerner iteration followed by Newton polishing.
pub fn complex_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let a: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |x: Complex64| a.iter().rev().fold(Complex64::zero(), |acc, c| acc * x + c);
    let bound = 1.0 + a[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32) * bound).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::one();
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * bound {
            break;
        }
    }
    let da: Vec<Complex64> = a.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    let deval = |x: Complex64| da.iter().rev().fold(Complex64::zero(), |acc, c| acc * x + c);
    for r in z.iter_mut() {
        for _ in 0..3 {
            let d = deval(*r);
            if d.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    #[test]
    fn char_poly_examples() {
        let m = Matrix::from_i64(&[&[2, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        let c = char_poly(&m);
        // (x - 2)(x + 1)^2 = x^3 - 3x - 2
        assert_eq!(c, vec![q(-2), q(-3), q(0), q(1)]);
        let e = elementary_symmetric_from_char_poly(&c);
        assert_eq!(e, vec![q(0), q(-3), q(2)]);
        assert_eq!(poly_from_roots(&[q(2), q(-1), q(-1)]), c);
    }

    #[test]
    fn char_poly_matches_determinant() {
        let m = Matrix::from_i64(&[&[1, 2, 0], &[3, -1, 4], &[0, 5, 2]]);
        let c = char_poly(&m);
        for x in -3..=3 {
            let shifted = Matrix::<Q>::identity(3).scale(&q(x)).sub_mat(&m);
            assert_eq!(Poly::new(c.clone()).eval(&q(x)), shifted.determinant());
        }
    }

    #[test]
    fn gcd_and_square_free() {
        let p = Poly::new(poly_from_roots(&[q(1), q(1), q(2), q_frac(1, 3)]));
        let sf = p.square_free_part();
        assert_eq!(sf, Poly::new(poly_from_roots(&[q(1), q(2), q_frac(1, 3)])));
        let (quot, rem) = p.div_rem(&sf);
        assert!(rem.is_zero());
        assert_eq!(quot, Poly::from_i64(&[-1, 1]));
    }

    #[test]
    fn square_roots() {
        let s = Poly::from_i64(&[-4, 1, 1]);
        assert_eq!(s.mul(&s).exact_sqrt(), Some(s));
        assert_eq!(Poly::from_i64(&[1, 0, 1, 1]).exact_sqrt(), None);
        assert_eq!(Poly::from_i64(&[2, 0, 1]).exact_sqrt(), None);
    }

    #[test]
    fn roots() {
        let p = Poly::new(poly_from_roots(&[q(3), q(-1), q_frac(1, 2)]));
        let mut r: Vec<f64> = complex_roots(&p.to_complex()).iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        for (a, b) in r.iter().zip([-1.0, 0.5, 3.0]) {
            assert!((a - b).abs() < 1e-10);
        }
    }
}
