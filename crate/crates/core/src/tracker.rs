//! Numerical monodromy of the critical values `W_beta = tau · sum_i lambda_i u_{beta(i)}`.
//!
//! Braid generators are realized as counterclockwise half-turns exchanging
//! two points about their midpoint. The values are recomputed from the
//! unordered configuration at every step and followed by nearest-successor
//! matching with adaptive step control, so the end permutation of labels is
//! obtained without reference to the algebra; it is then compared with the
//! algebraic prediction.
//!
//! A word `l_1 ... l_m` is traversed starting from `l_m`, so that tracking is
//! multiplicative in the same order as `strand_permutation`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::{One, Zero};

use crate::braid::{BraidLetter, BraidWord, ColoredBraid};
use crate::combinatorics::{enumerate_beta, sigma_action_on_beta, BetaMap, Partition, Permutation};
use crate::error::{Error, Result};
use crate::morse::{microlocal_rep_II, Case};
use crate::numeric::C64;

/// Default eigenvalues of `A`-side data; chosen so that every partition of
/// `n <= 5` has well separated critical values.
const DEFAULT_LAMBDAS: [f64; 5] = [-3.06, -1.819, 0.671, 1.687, 2.103];
const DEFAULT_US: [f64; 5] = [-2.085, -0.736, 0.239, 2.393, 2.482];

/// Smallest angular step before giving up on a near-collision.
const MIN_ANGLE: f64 = PI / (1u64 << 40) as f64;

/// Cap on steps (accepted or not) per generator.
const MAX_ATTEMPTS: usize = 1 << 20;

#[derive(Clone, PartialEq, Debug)]
pub struct TrackerProblem {
    pub partition: Partition,
    pub lambdas: Vec<C64>,
    pub us: Vec<C64>,
    pub tau: C64,
    /// Subdivisions of each half-turn (the largest step taken).
    pub steps: usize,
    pub min_separation: f64,
}

impl TrackerProblem {
    pub fn new(partition: Partition, lambdas: Vec<C64>, us: Vec<C64>, tau: C64) -> Result<Self> {
        let prob = TrackerProblem { partition, lambdas, us, tau, steps: 32, min_separation: 1e-8 };
        prob.validate()?;
        Ok(prob)
    }

    /// Real increasing `lambda` and `u`, `tau = 1`.
    pub fn with_defaults(partition: Partition) -> Result<Self> {
        let lambdas = default_points(&DEFAULT_LAMBDAS, partition.n(), 0.0);
        let us = default_points(&DEFAULT_US, partition.k(), 0.5);
        TrackerProblem::new(partition, lambdas, us, C64::one())
    }

    pub fn validate(&self) -> Result<()> {
        let p = &self.partition;
        if self.lambdas.len() != p.n() {
            return Err(Error::SizeMismatch { expected: p.n(), found: self.lambdas.len() });
        }
        if self.us.len() != p.k() {
            return Err(Error::SizeMismatch { expected: p.k(), found: self.us.len() });
        }
        if !distinct(&self.lambdas) || !distinct(&self.us) {
            return Err(Error::Invalid("lambdas and us must be pairwise distinct".into()));
        }
        if self.tau.is_zero() || self.steps == 0 || self.min_separation.is_nan() || self.min_separation <= 0.0 {
            return Err(Error::Invalid("tau must be nonzero, steps and min_separation positive".into()));
        }
        let values: Vec<C64> = critical_values_unchecked(self).into_iter().map(|(_, v)| v).collect();
        check_gap(&values, self.min_separation)?;
        Ok(())
    }
}

fn default_points(table: &[f64], count: usize, offset: f64) -> Vec<C64> {
    (0..count)
        .map(|i| match table.get(i) {
            Some(&x) => C64::new(x, 0.0),
            // beyond the table: spread out increasing points with irrational offsets
            None => C64::new(i as f64 + offset + 0.5 * fract(i as f64 * core::f64::consts::SQRT_2), 0.0),
        })
        .collect()
}

fn fract(x: f64) -> f64 {
    x - libm::floor(x)
}

fn distinct(z: &[C64]) -> bool {
    z.iter().enumerate().all(|(i, a)| z[..i].iter().all(|b| b != a))
}

fn min_gap(values: &[C64]) -> f64 {
    let mut gap = f64::INFINITY;
    for (i, a) in values.iter().enumerate() {
        for b in &values[..i] {
            gap = gap.min((a - b).norm());
        }
    }
    gap
}

fn check_gap(values: &[C64], min_separation: f64) -> Result<f64> {
    let gap = min_gap(values);
    if gap < min_separation {
        return Err(Error::Collision { separation: gap, min_separation });
    }
    Ok(gap)
}

fn critical_values_unchecked(prob: &TrackerProblem) -> Vec<(BetaMap, C64)> {
    enumerate_beta(&prob.partition)
        .into_iter()
        .map(|b| {
            let v = b.assignment().iter().zip(&prob.lambdas).map(|(&j, l)| l * prob.us[j]).sum::<C64>();
            (b, prob.tau * v)
        })
        .collect()
}

/// `W_beta` for every label, in [`enumerate_beta`] order.
pub fn critical_values(prob: &TrackerProblem) -> Result<Vec<(BetaMap, C64)>> {
    prob.validate()?;
    Ok(critical_values_unchecked(prob))
}

/// Outcome of comparing a tracked permutation with the algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Match,
    Mismatch,
    /// No permutation prediction exists (case II matrix that is not a
    /// signed permutation).
    NotComparable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotComparable => "not comparable",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct TrackResult {
    pub labels: Vec<BetaMap>,
    /// Label `i` (in `labels` order) ends at label `permutation.apply(i)`.
    pub permutation: Permutation,
    pub predicted: Option<Permutation>,
    pub verdict: Verdict,
    pub min_gap_observed: f64,
    pub steps_used: usize,
    pub refinements: u32,
}

/// Exchanging two points `x, y` by opposite displacements `±d` moves `W_beta`
/// by `tau · d · (coefficient of x - coefficient of y)`; returns the largest
/// such coefficient difference over all labels.
fn rate(prob: &TrackerProblem, mover: Mover, labels: &[BetaMap]) -> f64 {
    match mover {
        Mover::Lambdas => {
            let u = &prob.us;
            u.iter().flat_map(|a| u.iter().map(move |b| (a - b).norm())).fold(0.0, f64::max)
        }
        Mover::Us => {
            let k = prob.us.len();
            let mut worst = 0.0f64;
            for b in labels {
                let mut sums = vec![C64::zero(); k];
                for (i, &j) in b.assignment().iter().enumerate() {
                    sums[j] += prob.lambdas[i];
                }
                for x in &sums {
                    for y in &sums {
                        worst = worst.max((x - y).norm());
                    }
                }
            }
            worst
        }
    }
}

/// Which set of points moves.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mover {
    Lambdas,
    Us,
}

struct Tracker<'a> {
    prob: &'a TrackerProblem,
    mover: Mover,
    labels: Vec<BetaMap>,
    /// Initial positions; a letter `sigma_i` exchanges the points sitting at
    /// anchors `i` and `i + 1`.
    anchors: Vec<C64>,
    /// Current positions, indexed by point identity.
    points: Vec<C64>,
    /// Color of each point (all zero when the lambdas move).
    colors: Vec<usize>,
    /// `at_anchor[s]` = point currently sitting at anchor `s`.
    at_anchor: Vec<usize>,
    /// Bounds how fast any value moves per unit displacement of a point.
    speed_factor: f64,
    /// Current index of the value that started at each label.
    tracked: Vec<usize>,
    values: Vec<C64>,
    min_gap: f64,
    steps_used: usize,
    refinements: u32,
}

impl<'a> Tracker<'a> {
    fn new(prob: &'a TrackerProblem, mover: Mover) -> Result<Self> {
        prob.validate()?;
        let p = &prob.partition;
        let labels = enumerate_beta(p);
        let (anchors, colors) = match mover {
            Mover::Lambdas => (prob.lambdas.clone(), vec![0; p.n()]),
            Mover::Us => (prob.us.clone(), p.coloring()),
        };
        let speed_factor = rate(prob, mover, &labels);
        let mut t = Tracker {
            prob,
            mover,
            tracked: (0..labels.len()).collect(),
            labels,
            points: anchors.clone(),
            at_anchor: (0..anchors.len()).collect(),
            anchors,
            colors,
            speed_factor,
            values: Vec::new(),
            min_gap: f64::INFINITY,
            steps_used: 0,
            refinements: 0,
        };
        t.values = t.evaluate(&t.points, &t.anchor_labeling(&t.points));
        t.min_gap = check_gap(&t.values, prob.min_separation)?;
        Ok(t)
    }

    /// Labeling of an unordered configuration: each slot gets the point of
    /// its color that is `r`-th in `(re, im)` order, where the slot is the
    /// `r`-th of its color.
    fn sorted_labeling(&self, points: &[C64]) -> Vec<usize> {
        let mut slot_of_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for s in 0..points.len() {
            slot_of_color.entry(self.slot_color(s)).or_default().push(s);
        }
        let mut labeling = vec![0; points.len()];
        for (color, slots) in slot_of_color {
            let mut members: Vec<usize> = (0..points.len()).filter(|&x| self.colors[x] == color).collect();
            members.sort_by(|&x, &y| points[x].re.total_cmp(&points[y].re).then(points[x].im.total_cmp(&points[y].im)));
            for (s, x) in slots.into_iter().zip(members) {
                labeling[s] = x;
            }
        }
        labeling
    }

    /// Labeling at the start and end: each anchor gets the nearest point.
    fn anchor_labeling(&self, points: &[C64]) -> Vec<usize> {
        self.anchors
            .iter()
            .map(|a| {
                (0..points.len())
                    .min_by(|&x, &y| (points[x] - a).norm().total_cmp(&(points[y] - a).norm()))
                    .unwrap_or(0)
            })
            .collect()
    }

    fn slot_color(&self, s: usize) -> usize {
        match self.mover {
            Mover::Lambdas => 0,
            Mover::Us => self.prob.partition.coloring()[s],
        }
    }

    /// Values of all labels, with slot `s` read off from point `labeling[s]`.
    fn evaluate(&self, points: &[C64], labeling: &[usize]) -> Vec<C64> {
        let prob = self.prob;
        self.labels
            .iter()
            .map(|b| {
                let v: C64 = match self.mover {
                    Mover::Lambdas => {
                        b.assignment().iter().enumerate().map(|(i, &j)| points[labeling[i]] * prob.us[j]).sum()
                    }
                    Mover::Us => {
                        b.assignment().iter().enumerate().map(|(i, &j)| prob.lambdas[i] * points[labeling[j]]).sum()
                    }
                };
                prob.tau * v
            })
            .collect()
    }

    /// Maps each old value to its nearest new value, provided the nearest is
    /// within `bound` and every other is beyond `3 · bound`.
    fn match_values(old: &[C64], new: &[C64], bound: f64) -> Option<Vec<usize>> {
        let mut map = Vec::with_capacity(old.len());
        let mut hit = vec![false; new.len()];
        for a in old {
            let (mut best, mut d1, mut d2) = (0, f64::INFINITY, f64::INFINITY);
            for (j, b) in new.iter().enumerate() {
                let d = (a - b).norm();
                if d < d1 {
                    d2 = d1;
                    d1 = d;
                    best = j;
                } else if d < d2 {
                    d2 = d;
                }
            }
            if d1 > bound || d2 <= 3.0 * bound || hit[best] {
                return None;
            }
            hit[best] = true;
            map.push(best);
        }
        Some(map)
    }

    fn letter(&mut self, l: BraidLetter, last: bool) -> Result<()> {
        let (s, t) = (l.index - 1, l.index);
        let (x, y) = (self.at_anchor[s], self.at_anchor[t]);
        let (px, py) = (self.anchors[s], self.anchors[t]);
        let mid = (px + py) * 0.5;
        let radius = (px - py).norm() * 0.5;
        let direction = if l.inverse { -1.0 } else { 1.0 };
        let max_step = PI / self.prob.steps as f64;
        // any value moves by at most |tau| · chord · speed_factor
        let speed = self.prob.tau.norm() * 2.0 * radius * self.speed_factor;

        let (mut theta, mut step) = (0.0f64, max_step);
        let mut attempts = 0usize;
        while theta < PI {
            attempts += 1;
            if attempts > MAX_ATTEMPTS {
                return Err(Error::TrackingFailure { refinements: self.refinements, t: theta / PI });
            }
            let dt = step.min(PI - theta);
            let next = if theta + dt >= PI { PI } else { theta + dt };
            let rot = C64::from_polar(1.0, direction * next);
            let mut points = self.points.clone();
            points[x] = mid + (px - mid) * rot;
            points[y] = mid + (py - mid) * rot;
            if next >= PI {
                // snap onto the anchors to avoid drift
                points[x] = py;
                points[y] = px;
            }
            // only the final configuration is read off against the anchors
            let labeling =
                if next >= PI && last { self.anchor_labeling(&points) } else { self.sorted_labeling(&points) };
            let values = self.evaluate(&points, &labeling);
            let bound = speed * libm::sin(0.5 * (next - theta)) + 1e-12 * (1.0 + speed);
            let gap = min_gap(&values);
            let matched = if gap >= self.prob.min_separation {
                Tracker::match_values(&self.values, &values, bound)
            } else {
                None
            };
            match matched {
                Some(map) => {
                    for v in self.tracked.iter_mut() {
                        *v = map[*v];
                    }
                    self.values = values;
                    self.points = points;
                    self.min_gap = self.min_gap.min(gap);
                    self.steps_used += 1;
                    theta = next;
                    step = (2.0 * step).min(max_step);
                }
                None => {
                    step *= 0.5;
                    self.refinements += 1;
                    if step < MIN_ANGLE {
                        if gap < self.prob.min_separation {
                            return Err(Error::Collision { separation: gap, min_separation: self.prob.min_separation });
                        }
                        return Err(Error::TrackingFailure { refinements: self.refinements, t: theta / PI });
                    }
                }
            }
        }
        self.at_anchor.swap(s, t);
        Ok(())
    }

    fn run(mut self, letters: &[BraidLetter]) -> Result<(Permutation, f64, usize, u32)> {
        for (i, &l) in letters.iter().rev().enumerate() {
            self.letter(l, i + 1 == letters.len())?;
        }
        let perm = Permutation::from_images(self.tracked.clone())
            .map_err(|_| Error::Invalid(format!("tracked values do not close up on {} labels", self.labels.len())))?;
        Ok((perm, self.min_gap, self.steps_used, self.refinements))
    }
}

fn finish(
    labels: Vec<BetaMap>,
    tracked: (Permutation, f64, usize, u32),
    predicted: Option<Permutation>,
) -> TrackResult {
    let (permutation, min_gap_observed, steps_used, refinements) = tracked;
    let verdict = match &predicted {
        None => Verdict::NotComparable,
        Some(p) if *p == permutation => Verdict::Match,
        Some(_) => Verdict::Mismatch,
    };
    TrackResult { labels, permutation, predicted, verdict, min_gap_observed, steps_used, refinements }
}

/// Permutation of label indices induced by `f`.
fn label_permutation(labels: &[BetaMap], f: impl Fn(&BetaMap) -> Result<BetaMap>) -> Result<Permutation> {
    let index: BTreeMap<&BetaMap, usize> = labels.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let images = labels
        .iter()
        .map(|b| {
            let image = f(b)?;
            index.get(&image).copied().ok_or_else(|| Error::Invalid(format!("{image} is not a label")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(images)
}

/// Moves the lambdas along `w` and compares with `beta ↦ strand_permutation(w) · beta`.
pub fn track_family_monodromy(prob: &TrackerProblem, w: &BraidWord) -> Result<TrackResult> {
    if w.strands() != prob.partition.n() {
        return Err(Error::SizeMismatch { expected: prob.partition.n(), found: w.strands() });
    }
    let tracker = Tracker::new(prob, Mover::Lambdas)?;
    let labels = tracker.labels.clone();
    let tracked = tracker.run(w.letters())?;
    let pi = crate::braid::strand_permutation(w);
    let predicted = label_permutation(&labels, |b| sigma_action_on_beta(&pi, b))?;
    Ok(finish(labels, tracked, Some(predicted)))
}

/// Moves the us along `c` and compares with the permutation part of the
/// microlocal action: the relabeling `beta ↦ pi ∘ beta` in cases I and III,
/// and in case II the microlocal matrix when it is a signed permutation.
pub fn track_microlocal_monodromy(prob: &TrackerProblem, c: &ColoredBraid, case: Case) -> Result<TrackResult> {
    if c.partition() != &prob.partition {
        return Err(Error::Invalid(format!("colored braid is for {}, not {}", c.partition(), prob.partition)));
    }
    let tracker = Tracker::new(prob, Mover::Us)?;
    let labels = tracker.labels.clone();
    let tracked = tracker.run(c.word().letters())?;
    let p = &prob.partition;
    let predicted = match case {
        Case::I | Case::III => {
            let pi = c.strand_permutation();
            Some(label_permutation(&labels, |b| b.relabel(p, &pi))?)
        }
        Case::II => signed_permutation(&microlocal_rep_II(p, c)?),
    };
    Ok(finish(labels, tracked, predicted))
}

/// Column `j ↦` row of its only nonzero entry, if that entry is `±1` and the
/// result is a permutation.
fn signed_permutation(m: &crate::matrix::Matrix<crate::rational::Q>) -> Option<Permutation> {
    let images = (0..m.cols())
        .map(|c| {
            let nonzero: Vec<usize> = (0..m.rows()).filter(|&r| !m[(r, c)].is_zero()).collect();
            match nonzero.as_slice() {
                [r] if m[(*r, c)].is_one() || (-&m[(*r, c)]).is_one() => Some(*r),
                _ => None,
            }
        })
        .collect::<Option<Vec<_>>>()?;
    Permutation::from_images(images).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{kappa, varsigma_generator};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn reals(v: &[f64]) -> Vec<C64> {
        v.iter().map(|&x| C64::new(x, 0.0)).collect()
    }

    fn random_word(n: usize, len: usize, rng: &mut ChaCha8Rng) -> BraidWord {
        let signed: Vec<i64> = (0..len)
            .map(|_| {
                let i = rng.random_range(1..n as i64);
                if rng.random_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::from_signed(n, &signed).unwrap()
    }

    #[test]
    fn critical_value_examples() {
        let prob = TrackerProblem::new(part(&[1, 1]), reals(&[1.0, -1.0]), reals(&[1.0, -1.0]), C64::one()).unwrap();
        let v = critical_values(&prob).unwrap();
        assert_eq!(v[0].1, C64::new(2.0, 0.0));
        assert_eq!(v[1].1, C64::new(-2.0, 0.0));

        let prob = TrackerProblem::new(part(&[3]), reals(&[1.0, 2.0, 4.0]), reals(&[0.5]), C64::new(0.0, 2.0)).unwrap();
        let v = critical_values(&prob).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].1, C64::new(0.0, 7.0));

        let prob =
            TrackerProblem::new(part(&[1, 2]), reals(&[1.0, 0.0, -1.0]), reals(&[-2.0, 1.0]), C64::one()).unwrap();
        let v: Vec<C64> = critical_values(&prob).unwrap().into_iter().map(|x| x.1).collect();
        assert!(min_gap(&v) > 1.0);
    }

    #[test]
    fn invalid_problems() {
        assert!(TrackerProblem::new(part(&[1, 1]), reals(&[1.0, 1.0]), reals(&[1.0, 2.0]), C64::one()).is_err());
        assert!(TrackerProblem::new(part(&[1, 1]), reals(&[1.0, 2.0]), reals(&[1.0, 2.0]), C64::zero()).is_err());
        // lambda = (1, 0, -1), u = (1, 2) on (1, 2): beta = (1,2,2) and (2,2,1) coincide? no, but (1,1,1)-type ties do
        let tie = TrackerProblem::new(part(&[1, 1, 1]), reals(&[1.0, 0.0, -1.0]), reals(&[0.0, 1.0, 2.0]), C64::one());
        assert!(matches!(tie, Err(Error::Collision { .. })));
    }

    #[test]
    fn family_examples() {
        let prob = TrackerProblem::with_defaults(part(&[1, 1])).unwrap();
        let r = track_family_monodromy(&prob, &BraidWord::identity(2)).unwrap();
        assert!(r.permutation.is_identity());
        assert_eq!(r.verdict, Verdict::Match);
        let r = track_family_monodromy(&prob, &BraidWord::parse(2, "1").unwrap()).unwrap();
        assert_eq!(r.permutation.images(), &[1, 0]);
        assert_eq!(r.verdict, Verdict::Match);

        let prob = TrackerProblem::with_defaults(part(&[1, 2])).unwrap();
        let r = track_family_monodromy(&prob, &BraidWord::parse(3, "1 1").unwrap()).unwrap();
        assert!(r.permutation.is_identity());
        assert_eq!(r.verdict, Verdict::Match);
    }

    #[test]
    fn non_involutive_words_match() {
        let prob = TrackerProblem::with_defaults(part(&[1, 1, 1])).unwrap();
        for w in ["1 2", "2 1", "1 -2 1", "2 2 1"] {
            let r = track_family_monodromy(&prob, &BraidWord::parse(3, w).unwrap()).unwrap();
            assert_eq!(r.verdict, Verdict::Match, "{w}");
        }
    }

    #[test]
    fn random_words_match() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..=4 {
            for p in Partition::all(n) {
                let prob = TrackerProblem::with_defaults(p.clone()).unwrap();
                for _ in 0..10 {
                    let len = rng.random_range(0..=8);
                    let w = random_word(n, len, &mut rng);
                    let r = track_family_monodromy(&prob, &w).unwrap();
                    assert_eq!(r.verdict, Verdict::Match, "{p} {w}");
                    assert!(r.min_gap_observed >= prob.min_separation);
                }
            }
        }
    }

    #[test]
    fn composition_is_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let prob = TrackerProblem::with_defaults(part(&[1, 1, 2])).unwrap();
        for _ in 0..5 {
            let a = random_word(4, 4, &mut rng);
            let b = random_word(4, 4, &mut rng);
            let ta = track_family_monodromy(&prob, &a).unwrap().permutation;
            let tb = track_family_monodromy(&prob, &b).unwrap().permutation;
            let tab = track_family_monodromy(&prob, &a.concat(&b).unwrap()).unwrap().permutation;
            assert_eq!(tab, ta.compose(&tb));
        }
    }

    #[test]
    fn full_twists_close_up() {
        let prob = TrackerProblem::with_defaults(part(&[1, 1, 1, 1])).unwrap();
        for i in 1..4 {
            let w = BraidWord::from_signed(4, &[i, i]).unwrap();
            assert!(track_family_monodromy(&prob, &w).unwrap().permutation.is_identity());
        }
    }

    #[test]
    fn affine_invariance() {
        let p = part(&[1, 1, 2]);
        let base = TrackerProblem::with_defaults(p.clone()).unwrap();
        let (a, b) = (C64::new(0.3, -1.7), C64::new(2.0, 5.0));
        let mut moved = base.clone();
        moved.us = base.us.iter().map(|u| a * u + b).collect();
        let w = BraidWord::parse(4, "1 -2 3 2 1").unwrap();
        let c = kappa(&p, 1).unwrap();
        assert_eq!(
            track_family_monodromy(&base, &w).unwrap().permutation,
            track_family_monodromy(&moved, &w).unwrap().permutation
        );
        assert_eq!(
            track_microlocal_monodromy(&base, &c, Case::I).unwrap().permutation,
            track_microlocal_monodromy(&moved, &c, Case::I).unwrap().permutation
        );
    }

    #[test]
    fn microlocal_examples() {
        let p = part(&[1, 1]);
        let prob = TrackerProblem::with_defaults(p.clone()).unwrap();
        let r = track_microlocal_monodromy(&prob, &kappa(&p, 1).unwrap(), Case::I).unwrap();
        assert_eq!(r.permutation.images(), &[1, 0]);
        assert_eq!(r.verdict, Verdict::Match);
        // the case II matrix is not a signed permutation
        let r = track_microlocal_monodromy(&prob, &kappa(&p, 1).unwrap(), Case::II).unwrap();
        assert_eq!(r.verdict, Verdict::NotComparable);

        let p = part(&[2, 2]);
        let prob = TrackerProblem::with_defaults(p.clone()).unwrap();
        let r = track_microlocal_monodromy(&prob, &kappa(&p, 1).unwrap(), Case::III).unwrap();
        assert_eq!(r.labels.len(), 6);
        assert_eq!(r.verdict, Verdict::Match);
        assert!(!r.permutation.is_identity());
        assert!(r.permutation.compose(&r.permutation).is_identity());

        let p = part(&[1, 2, 3]);
        let prob = TrackerProblem::with_defaults(p.clone()).unwrap();
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let r = track_microlocal_monodromy(&prob, &varsigma_generator(&p, i, j).unwrap(), Case::I).unwrap();
            assert!(r.permutation.is_identity());
            assert_eq!(r.verdict, Verdict::Match);
        }
    }
}
