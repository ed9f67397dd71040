//! Normal slices to nilpotent orbits in `sl_n` and the critical points of a
//! generic covector on the Milnor fiber of the slice.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_traits::{One, Zero};

use super::{generalized_eigenspaces, ConormalPair};
use crate::combinatorics::{enumerate_beta, BetaMap, Partition};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::morse::Case;
use crate::numeric::{
    frobenius_norm, kernel_orthonormal, least_squares, singular_values, solve, vec_norm, HyperDual, C64,
};
use crate::poly::{char_poly, poly_from_roots};
use crate::rational::{to_f64, Q};

const NEWTON_TOL: f64 = 1e-12;
const NEWTON_MAX_ITER: usize = 100;

/// The normal slice `A + N̄` at a conormal pair, written in a basis adapted
/// to the generalized eigenspaces `U_1, ..., U_k` of `B`.
/// Block position `(i, j)` and a basis of `N̄_{i,j}` there.
pub type NbarBlock = ((usize, usize), Vec<Matrix<Q>>);

#[derive(Clone, Debug)]
pub struct SliceData {
    /// `S`, whose columns are the adapted basis.
    pub change_of_basis: Matrix<Q>,
    /// `A` and `B` in the adapted basis.
    pub base: Matrix<Q>,
    pub covector: Matrix<Q>,
    pub partition: Partition,
    pub eigenvalues: Vec<Q>,
    pub blocks: Vec<Range<usize>>,
    /// `dim T`, `T = [sl_n, A]`.
    pub tangent_dim: usize,
    /// `N̄_{i,j}` inside `Hom(U_i, U_j)`: the Frobenius-orthogonal
    /// complement of `T ∩ Hom(U_i, U_j)`.
    pub nbar_blocks: Vec<NbarBlock>,
    /// Basis of `N̄ = (⊕ N̄_{i,j}) ∩ sl_n`.
    pub nbar: Vec<Matrix<Q>>,
    /// Basis of `N̄_bd = (⊕ N̄_{i,i}) ∩ sl_n`.
    pub nbar_bd: Vec<Matrix<Q>>,
}

impl SliceData {
    pub fn n(&self) -> usize {
        self.base.rows()
    }

    /// Builds the slice for a case I pair whose `B` has rational spectrum.
    pub fn new(pair: &ConormalPair) -> Result<SliceData> {
        if pair.case != Case::I {
            return Err(Error::Invalid("normal slices are built for sl_n only".into()));
        }
        let n = pair.size();
        let spaces = generalized_eigenspaces(&pair.b)?;
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let partition = Partition::new(dims.clone())?;
        let columns: Vec<Vec<Q>> = spaces.iter().flat_map(|s| (0..s.dim()).map(|c| s.basis.column(c))).collect();
        let s = Matrix::from_columns(n, &columns);
        let si = s.inverse()?;
        let base = si.mul_mat(&pair.a).mul_mat(&s);
        let covector = si.mul_mat(&pair.b).mul_mat(&s);
        let blocks = partition.blocks();

        let commutators: Vec<Matrix<Q>> = (0..n * n)
            .map(|e| {
                let unit = Matrix::from_fn(n, n, |r, c| if r * n + c == e { Q::one() } else { Q::zero() });
                unit.commutator(&base)
            })
            .collect();
        let tangent_dim = Matrix::from_rows(&commutators.iter().map(|m| m.data().to_vec()).collect::<Vec<_>>()).rank();

        let mut nbar_blocks = Vec::new();
        for (i, bi) in blocks.iter().enumerate() {
            for (j, bj) in blocks.iter().enumerate() {
                // Hom(U_i, U_j): rows in block j, columns in block i
                let coords: Vec<(usize, usize)> = bj.clone().flat_map(|r| bi.clone().map(move |c| (r, c))).collect();
                let rows: Vec<Vec<Q>> =
                    commutators.iter().map(|m| coords.iter().map(|&(r, c)| m[(r, c)].clone()).collect()).collect();
                let kernel = Matrix::from_rows(&rows).nullspace();
                let mats: Vec<Matrix<Q>> = kernel
                    .iter()
                    .map(|v| {
                        let mut m = Matrix::zeros(n, n);
                        for (x, &(r, c)) in v.iter().zip(&coords) {
                            m[(r, c)] = x.clone();
                        }
                        m
                    })
                    .collect();
                nbar_blocks.push(((i, j), mats));
            }
        }
        let traceless = |mats: Vec<&Matrix<Q>>| -> Vec<Matrix<Q>> {
            let row = Matrix::from_rows(&[mats.iter().map(|m| m.trace()).collect::<Vec<_>>()]);
            row.nullspace()
                .iter()
                .map(|v| v.iter().zip(&mats).fold(Matrix::zeros(n, n), |acc, (x, m)| acc.add_mat(&m.scale(x))))
                .collect()
        };
        let nbar = traceless(nbar_blocks.iter().flat_map(|(_, v)| v.iter()).collect());
        let nbar_bd = traceless(nbar_blocks.iter().filter(|((i, j), _)| i == j).flat_map(|(_, v)| v.iter()).collect());
        if nbar.len() + tangent_dim + 1 != n * n {
            return Err(Error::Invalid(format!(
                "slice of dimension {} is not complementary to a tangent space of dimension {tangent_dim}",
                nbar.len()
            )));
        }
        Ok(SliceData {
            change_of_basis: s,
            base,
            covector,
            partition,
            eigenvalues: spaces.into_iter().map(|s| s.value).collect(),
            blocks,
            tangent_dim,
            nbar_blocks,
            nbar,
            nbar_bd,
        })
    }
}

/// A critical point `C_beta` of `xi = tr(B ·)` on the Milnor fiber of the slice.
#[derive(Clone, Debug)]
pub struct CriticalPoint {
    pub beta: BetaMap,
    /// `C_beta` in the original coordinates.
    pub c: Matrix<C64>,
    pub newton_residual: f64,
    pub newton_iterations: usize,
    /// `tr(B C_beta)`.
    pub xi: C64,
    /// `tau sum_i lambda_i u_{beta(i)} + tr(B A)`.
    pub xi_closed_form: C64,
    /// Relative residual of the Lagrange condition `grad xi = G^T mu`.
    pub criticality_residual: f64,
    /// Smallest singular value of the Hessian of `xi` on the fiber, on an
    /// orthonormal tangent basis; `None` when the fiber is a point.
    pub hessian_min_singular_value: Option<f64>,
}

/// Output of [`slice_and_critical_points_I`].
#[derive(Clone, Debug)]
pub struct SliceReport {
    pub slice: SliceData,
    pub points: Vec<CriticalPoint>,
    /// Smallest Frobenius distance between two critical points.
    pub min_separation: f64,
    /// `|B|_F`, the scale for the Hessian check.
    pub scale: f64,
    pub tau: C64,
}

impl SliceReport {
    /// The numerical acceptance thresholds: count, separation, Newton
    /// residual, Hessian nondegeneracy, criticality and the closed-form value.
    pub fn passed(&self) -> bool {
        let tau = self.tau.norm();
        self.points.len() as u64 == self.slice.partition.multinomial_dim()
            && (self.points.len() < 2 || self.min_separation > 1e-6 * tau)
            && self.points.iter().all(|p| {
                p.newton_residual < 1e-10
                    && p.criticality_residual < 1e-8
                    && p.hessian_min_singular_value.is_none_or(|s| s > 1e-6 * self.scale)
                    && (p.xi - p.xi_closed_form).norm() < 1e-9
            })
    }
}

fn to_c(m: &Matrix<Q>) -> Matrix<C64> {
    m.map(|x| C64::new(to_f64(x), 0.0))
}

fn lift(m: &Matrix<C64>, e1: Option<&Matrix<C64>>, e2: Option<&Matrix<C64>>) -> Matrix<HyperDual> {
    Matrix::from_fn(m.rows(), m.cols(), |r, c| HyperDual {
        re: m[(r, c)],
        e1: e1.map_or(C64::zero(), |d| d[(r, c)]),
        e2: e2.map_or(C64::zero(), |d| d[(r, c)]),
        e12: C64::zero(),
    })
}

fn combine(basis: &[Matrix<C64>], t: &[C64], size: usize) -> Matrix<C64> {
    basis.iter().zip(t).fold(Matrix::zeros(size, size), |acc, (m, x)| acc.add_mat(&m.scale(x)))
}

/// Solves for the block `A_ii + sum t_a N_a` with prescribed spectrum by
/// damped Newton iteration on the characteristic-polynomial coefficients.
fn newton_block(a: &Matrix<C64>, basis: &[Matrix<C64>], roots: &[C64]) -> Result<(Vec<C64>, f64, usize)> {
    let d = a.rows();
    let target = &poly_from_roots(roots)[..d];
    let eval = |t: &[C64]| -> Vec<C64> {
        let cp = char_poly(&a.add_mat(&combine(basis, t, d)));
        cp[..d].iter().zip(target).map(|(x, y)| x - y).collect()
    };
    let tol = NEWTON_TOL * (1.0 + vec_norm(target));
    // seed: A_ii plus the mean eigenvalue times the identity
    let mean = roots.iter().sum::<C64>() / d as f64;
    let cols: Vec<Vec<C64>> = basis.iter().map(|m| m.data().to_vec()).collect();
    let design = Matrix::from_columns(d * d, &cols);
    let shift = Matrix::<C64>::identity(d).scale(&mean);
    let mut t = least_squares(&design, shift.data()).unwrap_or_else(|_| vec![C64::zero(); basis.len()]);
    let mut res = eval(&t);
    let mut norm = vec_norm(&res);
    for iter in 0..NEWTON_MAX_ITER {
        if norm < tol {
            return Ok((t, norm, iter));
        }
        let x = lift(&a.add_mat(&combine(basis, &t, d)), None, None);
        let jac_cols: Vec<Vec<C64>> = basis
            .iter()
            .map(|dir| {
                let m = x.add_mat(&lift(&Matrix::zeros(d, d), Some(dir), None));
                char_poly(&m)[..d].iter().map(|h| h.e1).collect()
            })
            .collect();
        let jac = Matrix::from_columns(d, &jac_cols);
        let rhs: Vec<C64> = res.iter().map(|r| -r).collect();
        let step = if jac.is_square() { solve(&jac, &rhs)? } else { least_squares(&jac, &rhs)? };
        let mut alpha = 1.0;
        loop {
            let trial: Vec<C64> = t.iter().zip(&step).map(|(x, s)| x + s * alpha).collect();
            let r = eval(&trial);
            let nr = vec_norm(&r);
            if nr < norm || alpha < 1e-6 {
                t = trial;
                res = r;
                norm = nr;
                break;
            }
            alpha /= 2.0;
        }
    }
    if norm < tol {
        Ok((t, norm, NEWTON_MAX_ITER))
    } else {
        Err(Error::NewtonDivergence { residual: norm })
    }
}

/// The critical points of `xi = tr(B ·)` on the Milnor fiber
/// `{C ∈ A + N̄ : spectrum(C) = tau · lambda}` of a case I conormal pair.
///
/// Each `C_beta` is found inside `A + N̄_bd` block by block, with block `i`
/// carrying the eigenvalues `tau · lambda_j` for `beta(j) = i`. Criticality
/// is confirmed through Lagrange multipliers for the constraints
/// `e_2, ..., e_n`, and nondegeneracy through the Hessian on the fiber.
#[allow(non_snake_case)]
pub fn slice_and_critical_points_I(pair: &ConormalPair, lambdas: &[C64], tau: C64) -> Result<SliceReport> {
    let slice = SliceData::new(pair)?;
    let n = slice.n();
    if lambdas.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: lambdas.len() });
    }
    let lscale = 1.0 + lambdas.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if lambdas.iter().sum::<C64>().norm() > 1e-12 * lscale {
        return Err(Error::Invalid("the lambdas must sum to zero".into()));
    }
    for i in 0..n {
        for j in 0..i {
            if (lambdas[i] - lambdas[j]).norm() <= 1e-12 * lscale {
                return Err(Error::Invalid("the lambdas must be distinct".into()));
            }
        }
    }
    if tau.is_zero() {
        return Err(Error::Invalid("tau must be nonzero".into()));
    }
    let p = slice.partition.clone();
    let a = to_c(&slice.base);
    let b = to_c(&slice.covector);
    let s = to_c(&slice.change_of_basis);
    let si = to_c(&slice.change_of_basis.inverse()?);
    let u: Vec<C64> = slice.eigenvalues.iter().map(|x| C64::new(to_f64(x), 0.0)).collect();
    let offset = b.mul_mat(&a).trace();
    let scale = frobenius_norm(&b);

    // per-block slice directions, restricted to the block
    let block_bases: Vec<Vec<Matrix<C64>>> = slice
        .blocks
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mats = &slice.nbar_blocks.iter().find(|((x, y), _)| *x == i && *y == i).expect("diagonal block").1;
            mats.iter()
                .map(|m| to_c(&m.select(&r.clone().collect::<Vec<_>>(), &r.clone().collect::<Vec<_>>())))
                .collect()
        })
        .collect();
    let full_basis: Vec<Matrix<C64>> = slice.nbar.iter().map(to_c).collect();

    let mut points = Vec::new();
    for beta in enumerate_beta(&p) {
        let mut c = a.clone();
        let mut worst = 0.0f64;
        let mut iterations = 0;
        for (i, r) in slice.blocks.iter().enumerate() {
            let idx: Vec<usize> = r.clone().collect();
            let a_ii = a.select(&idx, &idx);
            let roots: Vec<C64> = beta.fiber(i).iter().map(|&j| tau * lambdas[j]).collect();
            let (t, res, it) = newton_block(&a_ii, &block_bases[i], &roots)?;
            worst = worst.max(res);
            iterations = iterations.max(it);
            let block = a_ii.add_mat(&combine(&block_bases[i], &t, idx.len()));
            for (x, &rr) in idx.iter().enumerate() {
                for (y, &cc) in idx.iter().enumerate() {
                    c[(rr, cc)] = block[(x, y)];
                }
            }
        }
        let xi = b.mul_mat(&c).trace();
        let closed: C64 = (0..n).map(|j| lambdas[j] * u[beta.assignment()[j]]).sum::<C64>() * tau + offset;
        let (criticality_residual, hessian_min_singular_value) = hessian_data(&c, &b, &full_basis, n)?;
        points.push(CriticalPoint {
            beta,
            c: s.mul_mat(&c).mul_mat(&si),
            newton_residual: worst,
            newton_iterations: iterations,
            xi,
            xi_closed_form: closed,
            criticality_residual,
            hessian_min_singular_value,
        });
    }

    let mut min_separation = f64::INFINITY;
    for i in 0..points.len() {
        for j in 0..i {
            let d = frobenius_norm(&points[i].c.sub_mat(&points[j].c));
            if d <= 1e-6 * tau.norm() {
                return Err(Error::DuplicateCriticalPoint(j, i));
            }
            min_separation = min_separation.min(d);
        }
    }
    Ok(SliceReport { slice, points, min_separation, scale, tau })
}

/// Lagrange-multiplier data at `c` for `xi = tr(B ·)` restricted to the
/// fiber `{e_2 = const, ..., e_n = const}` inside the slice spanned by
/// `basis`: the relative criticality residual, and the smallest singular
/// value of the Hessian on an orthonormal basis of the fiber's tangent space.
fn hessian_data(c: &Matrix<C64>, b: &Matrix<C64>, basis: &[Matrix<C64>], n: usize) -> Result<(f64, Option<f64>)> {
    let dim = basis.len();
    let constraints = n.saturating_sub(1);
    if dim == 0 {
        return Ok((0.0, None));
    }
    let x = lift(c, None, None);
    let zero = Matrix::<C64>::zeros(n, n);
    // g_k = c_k of the characteristic polynomial, k = 0 .. n-2
    let grads: Vec<Vec<C64>> = basis
        .iter()
        .map(|dir| {
            let cp = char_poly(&x.add_mat(&lift(&zero, Some(dir), None)));
            cp[..constraints].iter().map(|h| h.e1).collect()
        })
        .collect();
    // G is constraints x dim; G^T is dim x constraints with rows `grads`
    let gt = Matrix::from_rows(&grads);
    let grad_xi: Vec<C64> = basis.iter().map(|m| b.mul_mat(m).trace()).collect();
    let (mu, residual) = if constraints == 0 {
        (Vec::new(), vec_norm(&grad_xi))
    } else {
        let mu = least_squares(&gt, &grad_xi)?;
        let fit = gt.mul_vec(&mu);
        let r: Vec<C64> = fit.iter().zip(&grad_xi).map(|(x, y)| x - y).collect();
        (mu, vec_norm(&r))
    };
    let criticality = residual / (vec_norm(&grad_xi) + frobenius_norm(b)).max(f64::MIN_POSITIVE);

    let g = Matrix::from_fn(constraints, dim, |r, col| gt[(col, r)]);
    let tangent = if constraints == 0 {
        (0..dim).map(|i| (0..dim).map(|j| if i == j { C64::one() } else { C64::zero() }).collect()).collect()
    } else {
        kernel_orthonormal(&g, 1e-9)
    };
    if tangent.is_empty() {
        return Ok((criticality, None));
    }
    let dirs: Vec<Matrix<C64>> = tangent.iter().map(|v| combine(basis, v, n)).collect();
    let m = dirs.len();
    let mut h = Matrix::<C64>::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let cp = char_poly(&x.add_mat(&lift(&zero, Some(&dirs[i]), Some(&dirs[j]))));
            let v: C64 = -cp[..constraints].iter().zip(&mu).map(|(g, l)| g.e12 * l).sum::<C64>();
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    let sv = singular_values(&h);
    Ok((criticality, sv.first().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::realize_conormal;
    use crate::rational::q;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn two_points_for_11() {
        let pair = realize_conormal(Case::I, &part(&[1, 1]), &[q(-1), q(1)], &[]).unwrap();
        let r = slice_and_critical_points_I(&pair, &[c(1.0), c(-1.0)], c(0.1)).unwrap();
        assert_eq!(r.points.len(), 2);
        let d0 = Matrix::diagonal(&[c(0.1), c(-0.1)]);
        assert!(frobenius_norm(&r.points[0].c.sub_mat(&d0)) < 1e-12);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn single_point_for_2() {
        let pair = realize_conormal(Case::I, &part(&[2]), &[q(0)], &[]).unwrap();
        let r = slice_and_critical_points_I(&pair, &[c(1.0), c(-1.0)], c(0.1)).unwrap();
        assert_eq!(r.points.len(), 1);
        let cp = char_poly(&r.points[0].c);
        assert!((cp[0] - c(-0.01)).norm() < 1e-12 && cp[1].norm() < 1e-12);
        assert!(r.passed());
    }

    #[test]
    fn counts_for_n3() {
        let lambdas = [c(-1.3), c(0.4), c(0.9)];
        for p in Partition::all(3) {
            let u: Vec<Q> = match p.parts() {
                [3] => vec![q(0)],
                [1, 2] => vec![q(-2), q(1)],
                _ => vec![q(-1), q(0), q(1)],
            };
            let pair = realize_conormal(Case::I, &p, &u, &[]).unwrap();
            let r = slice_and_critical_points_I(&pair, &lambdas, C64::new(0.05, 0.02)).unwrap();
            assert_eq!(r.points.len() as u64, p.multinomial_dim());
            assert!(r.passed(), "{p}: {r:?}");
        }
    }
}
