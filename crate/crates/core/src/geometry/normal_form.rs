use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{is_conormal, jordan_partition, ConormalPair};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::morse::Case;
use crate::poly::{char_poly, complex_roots, Poly};
use crate::rational::{q, rationalize, to_f64, Q};

/// A generalized eigenspace of `B`: eigenvalue and a basis (columns).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Eigenspace {
    pub value: Q,
    pub basis: Matrix<Q>,
}

impl Eigenspace {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Generalized eigenspaces of a matrix with rational spectrum, ordered by
/// dimension and then eigenvalue.
///
/// Eigenvalues are located numerically on the square-free part of the
/// characteristic polynomial, rounded to nearby fractions and confirmed
/// exactly; a spectrum that is not rational is rejected.
pub fn generalized_eigenspaces(b: &Matrix<Q>) -> Result<Vec<Eigenspace>> {
    let n = b.rows();
    let sf = Poly::new(char_poly(b)).square_free_part();
    let mut values = Vec::new();
    for z in complex_roots(&sf.to_complex()) {
        let scale = 1.0 + z.norm();
        if z.im.abs() > 1e-6 * scale {
            return Err(Error::NonRationalSpectrum);
        }
        let r = rationalize(z.re, 1_000_000).ok_or(Error::NonRationalSpectrum)?;
        if !sf.eval(&r).is_zero() {
            return Err(Error::NonRationalSpectrum);
        }
        if !values.contains(&r) {
            values.push(r);
        }
    }
    if Some(values.len()) != sf.degree() {
        return Err(Error::NonRationalSpectrum);
    }
    let mut spaces: Vec<Eigenspace> = values
        .into_iter()
        .map(|value| {
            let shifted = b.sub_mat(&Matrix::identity(n).scale(&value)).pow(n);
            let kernel = shifted.nullspace();
            Eigenspace { value, basis: Matrix::from_columns(n, &kernel) }
        })
        .collect();
    spaces.sort_by(|x, y| x.dim().cmp(&y.dim()).then_with(|| x.value.cmp(&y.value)));
    Ok(spaces)
}

/// Outcome of [`verify_normal_form`].
#[derive(Clone, PartialEq, Debug)]
pub struct NormalFormReport {
    pub case: Case,
    pub conormal: bool,
    /// Orbit type of `A` (halved in case III).
    pub partition: Partition,
    pub eigenvalues: Vec<Q>,
    pub dims: Vec<usize>,
    pub expected_dims: Vec<usize>,
    pub a_invariant: Vec<bool>,
    pub regular: Vec<bool>,
    pub orthogonal: bool,
    /// Coefficients of `P_i`, low degree first, with `B|U_i = P_i(A|U_i)`.
    pub polynomials: Vec<Option<Vec<Q>>>,
    pub degrees: Vec<Option<usize>>,
    /// Largest `|B|U_i - P_i(A|U_i)|` entry relative to the largest entry of `B`.
    pub residual: f64,
}

impl NormalFormReport {
    pub fn passed(&self) -> bool {
        self.conormal
            && self.dims == self.expected_dims
            && self.a_invariant.iter().all(|&x| x)
            && self.regular.iter().all(|&x| x)
            && self.orthogonal
            && self.polynomials.iter().all(Option::is_some)
            && self.residual == 0.0
    }
}

/// Coordinates `X` with `basis X = m basis`, if `m` preserves the span.
fn restrict(m: &Matrix<Q>, basis: &Matrix<Q>) -> Option<Matrix<Q>> {
    let image = m.mul_mat(basis);
    let cols = (0..basis.cols()).map(|c| basis.solve(&image.column(c))).collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_columns(basis.cols(), &cols))
}

/// Checks the normal form of a generic conormal `(A, B)`: the generalized
/// eigenspaces `U_i` of `B` have the dimensions of the orbit type of `A`,
/// are `A`-invariant with `A|U_i` regular, are mutually orthogonal for the
/// form, and `B|U_i` is a polynomial in `A|U_i` of degree at most `n_i`.
pub fn verify_normal_form(pair: &ConormalPair) -> Result<NormalFormReport> {
    let case = pair.case;
    let partition = jordan_partition(case, &pair.a)?;
    let k = partition.k();
    let spaces = generalized_eigenspaces(&pair.b)?;
    if spaces.len() != k {
        return Err(Error::EigenvalueCount { expected: k, found: spaces.len() });
    }
    let factor = if case == Case::III { 2 } else { 1 };
    let expected_dims: Vec<usize> = partition.parts().iter().map(|n| n * factor).collect();
    let dims: Vec<usize> = spaces.iter().map(Eigenspace::dim).collect();

    let mut a_invariant = Vec::new();
    let mut regular = Vec::new();
    let mut polynomials = Vec::new();
    let mut degrees = Vec::new();
    let mut worst = Q::zero();
    for (i, s) in spaces.iter().enumerate() {
        let a_i = restrict(&pair.a, &s.basis);
        let b_i = restrict(&pair.b, &s.basis);
        a_invariant.push(a_i.is_some());
        let (Some(a_i), Some(b_i)) = (a_i, b_i) else {
            regular.push(false);
            polynomials.push(None);
            degrees.push(None);
            continue;
        };
        let d = s.dim();
        let reg = match case {
            Case::I | Case::II => a_i.is_nilpotent() && a_i.rank() + 1 == d,
            Case::III => {
                let half = d / 2;
                jordan_partition(Case::I, &a_i).ok() == Partition::new([half, half]).ok()
            }
        };
        regular.push(reg);
        // B_i = sum_{j <= n_i} c_j A_i^j, as a linear system in the c_j
        let n_i = partition.parts().get(i).copied().unwrap_or(d);
        let mut powers = Vec::with_capacity(n_i + 1);
        let mut pw = Matrix::identity(d);
        for _ in 0..=n_i {
            powers.push(pw.clone());
            pw = pw.mul_mat(&a_i);
        }
        let system = Matrix::from_columns(d * d, &powers.iter().map(|m| m.data().to_vec()).collect::<Vec<_>>());
        match system.solve(b_i.data()) {
            Some(c) => {
                let fitted = powers.iter().zip(&c).fold(Matrix::zeros(d, d), |acc, (m, x)| acc.add_mat(&m.scale(x)));
                for x in fitted.sub_mat(&b_i).data() {
                    if x.abs() > worst {
                        worst = x.abs();
                    }
                }
                degrees.push(Some(c.iter().rposition(|x| !x.is_zero()).unwrap_or(0)));
                polynomials.push(Some(c));
            }
            None => {
                polynomials.push(None);
                degrees.push(None);
            }
        }
    }

    let orthogonal = match &pair.form {
        None => true,
        Some(f) => (0..k).all(|i| {
            (0..k)
                .filter(|&j| j != i)
                .all(|j| spaces[i].basis.transpose().mul_mat(f).mul_mat(&spaces[j].basis).is_zero())
        }),
    };
    let bmax = pair.b.data().iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero);
    let residual = if worst.is_zero() { 0.0 } else { to_f64(&(worst / bmax.max(q(1)))) };

    Ok(NormalFormReport {
        case,
        conormal: is_conormal(pair),
        partition,
        eigenvalues: spaces.iter().map(|s| s.value.clone()).collect(),
        dims,
        expected_dims,
        a_invariant,
        regular,
        orthogonal,
        polynomials,
        degrees,
        residual,
    })
}
