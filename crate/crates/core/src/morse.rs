//! The Morse group as an explicit module, with the family monodromy of
//! `B_n` and the microlocal monodromy of the colored braid group.
//!
//! Cases I and III share one module: the permutation module on labels.
//! Case II is the induced module `H ⊗_{H_P} 1` of the Hecke algebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::braid::{
    cabling_zeta, color_projection_psi, colored_generators, invert_gens_obar, BraidWord, ColoredBraid, ColoredGenerator,
};
use crate::combinatorics::{
    class_size, enumerate_beta, irreducible_character, min_coset_reps, BetaMap, Partition, Permutation,
};
use crate::error::{Error, Result};
use crate::hecke::{braid_to_hecke, hecke_multiply, reduce_on, HeckeElement, ParabolicKernel};
use crate::matrix::{Matrix, Subspace};
use crate::rational::{q, Q};

/// Which symmetric space: `sl_n` (I), `sl_n/so_n` (II), `sl_2n/sp_2n` (III).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Case {
    I,
    II,
    III,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::I, Case::II, Case::III];

    pub fn name(self) -> &'static str {
        match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
        }
    }

    /// Whether the family action factors through the Hecke algebra rather
    /// than the symmetric group.
    pub fn is_hecke(self) -> bool {
        self == Case::II
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" | "1" => Ok(Case::I),
            "II" | "2" => Ok(Case::II),
            "III" | "3" => Ok(Case::III),
            other => Err(Error::Parse(format!("unknown case {other:?}"))),
        }
    }
}

/// Basis of the module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Basis {
    /// Critical-point labels, in [`enumerate_beta`] order.
    Labels(Vec<BetaMap>),
    /// Minimal coset representatives `w`, standing for `[T_w]`.
    Cosets(Vec<Permutation>),
}

impl Basis {
    pub fn len(&self) -> usize {
        match self {
            Basis::Labels(v) => v.len(),
            Basis::Cosets(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn describe(&self, i: usize) -> String {
        match self {
            Basis::Labels(v) => format!("{}", v[i]),
            Basis::Cosets(v) => format!("T{}", v[i]),
        }
    }
}

/// The Morse group with its family monodromy matrices, acting on column
/// vectors.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    case: Case,
    partition: Partition,
    basis: Basis,
    family: Vec<Matrix<Q>>,
    kernel: Option<Arc<ParabolicKernel>>,
    microlocal_cache: BTreeMap<ColoredGenerator, Matrix<Q>>,
}

/// Builds the module and the matrices of `sigma_1, ..., sigma_{n-1}`.
pub fn family_monodromy_rep(case: Case, p: &Partition) -> Result<ModuleRep> {
    let n = p.n();
    let (basis, family) = if case.is_hecke() {
        let reps = min_coset_reps(p);
        let family = (1..n)
            .map(|i| {
                let columns = reps
                    .iter()
                    .map(|w| reduce_on(&HeckeElement::basis(w.clone()).left_mul_generator(i), p, &reps))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(reps.len(), &columns))
            })
            .collect::<Result<Vec<_>>>()?;
        (Basis::Cosets(reps), family)
    } else {
        let labels = enumerate_beta(p);
        let index: BTreeMap<&BetaMap, usize> = labels.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let family = (1..n)
            .map(|i| {
                let s = Permutation::simple(i, n);
                let mut m = Matrix::zeros(labels.len(), labels.len());
                for (col, b) in labels.iter().enumerate() {
                    m[(index[&b.act(&s)?], col)] = Q::one();
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        (Basis::Labels(labels), family)
    };
    Ok(ModuleRep { case, partition: p.clone(), basis, family, kernel: None, microlocal_cache: BTreeMap::new() })
}

impl ModuleRep {
    pub fn case(&self) -> Case {
        self.case
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrices of `sigma_1, ..., sigma_{n-1}`.
    pub fn family_generators(&self) -> &[Matrix<Q>] {
        &self.family
    }

    /// Matrix of `sigma_i^{-1}`.
    pub fn family_generator_inverse(&self, i: usize) -> Matrix<Q> {
        let m = &self.family[i - 1];
        if self.case.is_hecke() {
            Matrix::identity(m.rows()).scale(&q(2)).sub_mat(m)
        } else {
            m.clone()
        }
    }

    /// Family monodromy of a braid word: `mu(w_1 w_2) = mu(w_1) mu(w_2)`.
    pub fn family_matrix(&self, w: &BraidWord) -> Result<Matrix<Q>> {
        if w.strands() != self.partition.n() {
            return Err(Error::SizeMismatch { expected: self.partition.n(), found: w.strands() });
        }
        let mut m = Matrix::identity(self.dim());
        for l in w.letters() {
            let g = if l.inverse { self.family_generator_inverse(l.index) } else { self.family[l.index - 1].clone() };
            m = m.mul_mat(&g);
        }
        Ok(m)
    }

    fn kernel(&mut self) -> Arc<ParabolicKernel> {
        self.kernel.get_or_insert_with(|| Arc::new(ParabolicKernel::new(&self.partition))).clone()
    }

    /// Microlocal monodromy of a colored braid.
    ///
    /// Cases I/III give a homomorphism. Case II is right multiplication on
    /// the induced module, so a concatenation `c_1 c_2` maps to
    /// `h(c_2) h(c_1)`.
    pub fn microlocal(&mut self, c: &ColoredBraid) -> Result<Matrix<Q>> {
        if c.partition() != &self.partition {
            return Err(Error::Invalid("colored braid over a different partition".into()));
        }
        match self.case {
            Case::I | Case::III => microlocal_rep_I(&self.partition, c),
            Case::II => {
                let ker = self.kernel();
                microlocal_ii_with(&self.partition, c, &ker)
            }
        }
    }

    /// Microlocal matrix of a named generator, cached.
    pub fn microlocal_generator(&mut self, g: &ColoredGenerator) -> Result<Matrix<Q>> {
        if let Some(m) = self.microlocal_cache.get(g) {
            return Ok(m.clone());
        }
        let m = self.microlocal(&g.braid(&self.partition)?)?;
        self.microlocal_cache.insert(g.clone(), m.clone());
        Ok(m)
    }

    /// Fills the cache for the standard generating set.
    pub fn cache_microlocal_generators(&mut self) -> Result<()> {
        for g in colored_generators(&self.partition) {
            self.microlocal_generator(&g)?;
        }
        Ok(())
    }

    pub fn microlocal_cache(&self) -> &BTreeMap<ColoredGenerator, Matrix<Q>> {
        &self.microlocal_cache
    }

    /// Evaluates a product `g_1 g_2 ... g_r` of generators from the cached
    /// matrices, honouring the (anti-)homomorphism convention of the case.
    pub fn microlocal_product(&mut self, gens: &[ColoredGenerator]) -> Result<Matrix<Q>> {
        let mut m = Matrix::identity(self.dim());
        for g in gens {
            let x = self.microlocal_generator(g)?;
            m = if self.case.is_hecke() { x.mul_mat(&m) } else { m.mul_mat(&x) };
        }
        Ok(m)
    }

    /// `e_0`: the basis vector of `beta_0`, or of `[T_e]`.
    pub fn e0(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[0] = Q::one();
        v
    }
}

/// Microlocal monodromy in cases I and III: the signed relabeling
/// `e_beta ↦ chi · e_{pi ∘ beta}`, where `pi` is the strand permutation of `c`
/// and `chi = prod_j sgn(w_j)^{n_(j)}` over the color projections `w_j`.
#[allow(non_snake_case)]
pub fn microlocal_rep_I(p: &Partition, c: &ColoredBraid) -> Result<Matrix<Q>> {
    let psi = color_projection_psi(c)?;
    let sizes = p.distinct_sizes();
    let odd = psi.iter().zip(&sizes).filter(|(w, &size)| w.sign() < 0 && size % 2 == 1).count();
    let chi = if odd % 2 == 0 { Q::one() } else { -Q::one() };
    let pi = c.strand_permutation();
    let labels = enumerate_beta(p);
    let index: BTreeMap<&BetaMap, usize> = labels.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut m = Matrix::zeros(labels.len(), labels.len());
    for (col, b) in labels.iter().enumerate() {
        m[(index[&b.relabel(p, &pi)?], col)] = chi.clone();
    }
    Ok(m)
}

/// `r = ` image in `H` of the mirrored cabling of `c`.
pub fn microlocal_hecke_element(p: &Partition, c: &ColoredBraid) -> Result<HeckeElement> {
    let cabled = cabling_zeta(p, c.word())?;
    Ok(braid_to_hecke(&invert_gens_obar(&cabled)))
}

/// Microlocal monodromy in case II: right multiplication by the image `r`
/// of the mirrored cabling of `c`, `[T_w] ↦ [T_w · r]`. Fails unless right
/// multiplication by `r` preserves the kernel of `H -> H ⊗_{H_P} 1`.
#[allow(non_snake_case)]
pub fn microlocal_rep_II(p: &Partition, c: &ColoredBraid) -> Result<Matrix<Q>> {
    microlocal_ii_with(p, c, &ParabolicKernel::new(p))
}

fn microlocal_ii_with(p: &Partition, c: &ColoredBraid, ker: &ParabolicKernel) -> Result<Matrix<Q>> {
    let r = microlocal_hecke_element(p, c)?;
    let n = p.n();
    for t in p.young_generators() {
        let lhs = HeckeElement::generator(t, n).sub(&HeckeElement::one(n))?;
        let prod = hecke_multiply(&lhs, &r)?;
        if !ker.contains(&prod) {
            return Err(Error::NotWellDefined(format!(
                "(T_s{t} - 1) r leaves the parabolic kernel for {} on {p}",
                c.word()
            )));
        }
    }
    let reps = min_coset_reps(p);
    let columns = reps
        .iter()
        .map(|w| reduce_on(&hecke_multiply(&HeckeElement::basis(w.clone()), &r)?, p, &reps))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(reps.len(), &columns))
}

/// One named identity and whether it held.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Outcome of [`verify_rep`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: String, passed: bool) {
        self.checks.push(Check { name, passed });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks the family and microlocal identities:
///
/// * braid relations among the family generators;
/// * `M^2 = I` (cases I/III) or `(M - I)^2 = 0` (case II);
/// * each microlocal generator commutes with each family generator;
/// * the microlocal generators are invertible, respect the relations among
///   the same-color `kappa`'s, and evaluating products from cached
///   generator matrices agrees with evaluating the concatenated word.
pub fn verify_rep(rep: &mut ModuleRep, generators: &[ColoredGenerator]) -> Result<Report> {
    let mut report = Report::default();
    let dim = rep.dim();
    let id = Matrix::<Q>::identity(dim);
    report.push(format!("dim = {}", rep.partition.multinomial_dim()), dim as u64 == rep.partition.multinomial_dim());

    let fam = rep.family.clone();
    for (a, m) in fam.iter().enumerate() {
        let ok = if rep.case.is_hecke() {
            let d = m.sub_mat(&id);
            d.mul_mat(&d).is_zero()
        } else {
            m.mul_mat(m) == id
        };
        let rel = if rep.case.is_hecke() { "(M-1)^2 = 0" } else { "M^2 = 1" };
        report.push(format!("{rel} for sigma_{}", a + 1), ok);
    }
    for a in 0..fam.len() {
        for b in a + 1..fam.len() {
            let (x, y) = (&fam[a], &fam[b]);
            let ok = if b == a + 1 {
                x.mul_mat(y).mul_mat(x) == y.mul_mat(x).mul_mat(y)
            } else {
                x.mul_mat(y) == y.mul_mat(x)
            };
            report.push(format!("braid relation sigma_{} sigma_{}", a + 1, b + 1), ok);
        }
    }

    let mut mats = Vec::new();
    for g in generators {
        let h = rep.microlocal_generator(g)?;
        report.push(format!("{} invertible", g.name()), h.inverse().is_ok());
        for (a, m) in fam.iter().enumerate() {
            report.push(format!("[{}, sigma_{}] = 0", g.name(), a + 1), h.mul_mat(m) == m.mul_mat(&h));
        }
        mats.push(h);
    }

    // relations among same-color kappas, checked on the relation words themselves
    let p = rep.partition.clone();
    let kappas: Vec<usize> =
        generators.iter().filter_map(|g| if let ColoredGenerator::Kappa(a) = g { Some(*a) } else { None }).collect();
    for &a in &kappas {
        for &b in &kappas {
            if b <= a {
                continue;
            }
            let (lhs, rhs) = if b == a + 1 {
                (vec![a as i64, b as i64, a as i64], vec![b as i64, a as i64, b as i64])
            } else {
                (vec![a as i64, b as i64], vec![b as i64, a as i64])
            };
            let l = rep.microlocal(&ColoredBraid::new(&p, BraidWord::from_signed(p.k(), &lhs)?)?)?;
            let r = rep.microlocal(&ColoredBraid::new(&p, BraidWord::from_signed(p.k(), &rhs)?)?)?;
            report.push(format!("relation kappa_{a} kappa_{b}"), l == r);
        }
    }

    // products of cached generators agree with the concatenated words
    for (x, g) in generators.iter().enumerate() {
        let gw = g.braid(&p)?;
        for (y, h) in generators.iter().enumerate() {
            let direct = rep.microlocal(&gw.concat(&h.braid(&p)?)?)?;
            let cached = if rep.case.is_hecke() { mats[y].mul_mat(&mats[x]) } else { mats[x].mul_mat(&mats[y]) };
            report.push(format!("product {} {}", g.name(), h.name()), direct == cached);
        }
        let inv = rep.microlocal(&gw.inverse())?;
        report.push(format!("{} inverse word", g.name()), inv.mul_mat(&mats[x]) == id);
    }
    Ok(report)
}

/// A permutation with the given cycle type, cycles on consecutive letters.
fn class_representative(cycle_type: &[usize]) -> Permutation {
    let n: usize = cycle_type.iter().sum();
    let mut images = vec![0; n];
    let mut start = 0;
    for &len in cycle_type {
        for j in 0..len {
            images[start + j] = start + (j + 1) % len;
        }
        start += len;
    }
    Permutation::from_images(images).expect("cycle representative")
}

/// Family matrix of a permutation in cases I/III, via a reduced word.
fn permutation_matrix(rep: &ModuleRep, w: &Permutation) -> Matrix<Q> {
    w.reduced_word().iter().fold(Matrix::identity(rep.dim()), |acc, &i| acc.mul_mat(&rep.family[i - 1]))
}

/// Multiplicity of each irreducible `S_n`-module (by shape) in the family
/// representation of a case I/III module, from character inner products of
/// the traces of the representation matrices.
pub fn irreducible_multiplicities(rep: &ModuleRep) -> Result<BTreeMap<Partition, u64>> {
    if rep.case.is_hecke() {
        return Err(Error::Invalid("character decomposition needs a symmetric group action".into()));
    }
    let n = rep.partition.n();
    let classes: Vec<Vec<usize>> = Partition::all(n).iter().map(Partition::descending).collect();
    let traces: Vec<Q> = classes.iter().map(|c| permutation_matrix(rep, &class_representative(c)).trace()).collect();
    let order: i64 = (1..=n as i64).product();
    let mut out = BTreeMap::new();
    for shape in Partition::all(n) {
        let mut s = Q::zero();
        for (c, tr) in classes.iter().zip(&traces) {
            s += tr * q(class_size(c) as i64 * irreducible_character(&shape, c));
        }
        let m = s / q(order);
        if !m.is_integer() || m < Q::zero() {
            return Err(Error::Invalid(format!("non-integral multiplicity {m} for {shape}")));
        }
        out.insert(shape, m.to_integer().try_into().unwrap_or(u64::MAX));
    }
    Ok(out)
}

/// Dimension of the span of the orbit of `e_0` under the family generators.
pub fn cyclic_rank(rep: &ModuleRep) -> usize {
    let mut span = Subspace::new(rep.dim());
    let mut frontier = vec![rep.e0()];
    span.insert(&frontier[0]);
    while let Some(v) = frontier.pop() {
        for m in &rep.family {
            let w = m.mul_vec(&v);
            if span.insert(&w) {
                frontier.push(w);
            }
        }
    }
    span.rank()
}

/// Whether `e_0` is fixed by the family action of every Young generator.
pub fn young_fixes_e0(rep: &ModuleRep) -> bool {
    let e0 = rep.e0();
    rep.partition.young_generators().iter().all(|&j| rep.family[j - 1].mul_vec(&e0) == e0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::varsigma_generator;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn goldens_11() {
        let p = part(&[1, 1]);
        let k1 = ColoredBraid::parse(&p, "1").unwrap();

        let mut one = family_monodromy_rep(Case::I, &p).unwrap();
        assert_eq!(one.family_generators()[0], Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(one.microlocal(&k1).unwrap(), Matrix::from_i64(&[&[0, -1], &[-1, 0]]));

        let mut two = family_monodromy_rep(Case::II, &p).unwrap();
        let fam = two.family_generators()[0].clone();
        assert_eq!(fam, Matrix::from_i64(&[&[0, -1], &[1, 2]]));
        let h = two.microlocal(&k1).unwrap();
        assert_eq!(h, Matrix::from_i64(&[&[2, 1], &[-1, 0]]));
        assert_eq!(h, fam.inverse().unwrap());
    }

    #[test]
    fn single_part_is_trivial() {
        for case in Case::ALL {
            let rep = family_monodromy_rep(case, &part(&[3])).unwrap();
            assert_eq!(rep.dim(), 1);
            assert!(rep.family_generators().iter().all(|m| *m == Matrix::identity(1)));
        }
    }

    #[test]
    fn even_parts_have_no_sign() {
        let p = part(&[2, 2]);
        let h = microlocal_rep_I(&p, &ColoredBraid::parse(&p, "1").unwrap()).unwrap();
        assert!(h.data().iter().all(|x| *x >= Q::zero()));
        assert!(h.mul_mat(&h) == Matrix::identity(6));
        let pure = ColoredBraid::parse(&p, "1 1").unwrap();
        assert_eq!(microlocal_rep_I(&p, &pure).unwrap(), Matrix::identity(6));
    }

    #[test]
    fn varsigma_in_case_ii() {
        let p = part(&[1, 2]);
        let mut rep = family_monodromy_rep(Case::II, &p).unwrap();
        let h = rep.microlocal(&varsigma_generator(&p, 1, 2).unwrap()).unwrap();
        assert_eq!(h.rows(), 3);
        assert!(h.inverse().is_ok());
        for m in rep.family_generators() {
            assert_eq!(h.mul_mat(m), m.mul_mat(&h));
        }
        assert_eq!(rep.microlocal(&ColoredBraid::identity(&p)).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn plain_cabled_letter_is_rejected_when_not_descending() {
        // kappa_1 on (1,2) is not color preserving; its cabled Hecke image
        // does not descend, which the membership test must detect.
        let p = part(&[1, 2]);
        let ker = ParabolicKernel::new(&p);
        let w = BraidWord::from_signed(2, &[1]).unwrap();
        let r = braid_to_hecke(&invert_gens_obar(&cabling_zeta(&p, &w).unwrap()));
        let lhs = HeckeElement::generator(2, 3).sub(&HeckeElement::one(3)).unwrap();
        assert!(!ker.contains(&hecke_multiply(&lhs, &r).unwrap()));
    }

    #[test]
    fn verify_small() {
        for n in 1..=4 {
            for p in Partition::all(n) {
                for case in Case::ALL {
                    let mut rep = family_monodromy_rep(case, &p).unwrap();
                    let gens = colored_generators(&p);
                    let report = verify_rep(&mut rep, &gens).unwrap();
                    assert!(report.passed(), "{case} {p}: {:?}", report.failures().collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn kostka_and_cyclic() {
        for n in 1..=4 {
            for p in Partition::all(n) {
                let rep = family_monodromy_rep(Case::I, &p).unwrap();
                assert_eq!(irreducible_multiplicities(&rep).unwrap(), crate::combinatorics::kostka_decomposition(&p));
                for case in Case::ALL {
                    let rep = family_monodromy_rep(case, &p).unwrap();
                    assert_eq!(cyclic_rank(&rep), rep.dim());
                    assert!(young_fixes_e0(&rep));
                }
            }
        }
    }
}
