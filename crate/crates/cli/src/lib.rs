//! Command implementations and JSON formats for the `symmorse` binary.
//!
//! Every command returns a JSON document together with an overall verdict;
//! the binary maps the verdict to its exit code. Rationals are written as
//! strings (`"p/q"`, or `"p"` for integers), complex numbers as `[re, im]`,
//! permutations as 1-based image lists. Object keys are sorted, so output is
//! byte-for-byte reproducible.

use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use symmorse::braid::{colored_generators, ColoredGenerator};
use symmorse::geometry::{
    random_unimodular, realize_conormal, sample_conormal, sample_normal_form_data, slice_and_critical_points_I,
    verify_normal_form, ConormalPair, NormalFormReport, SliceReport,
};
use symmorse::morse::{family_monodromy_rep, verify_rep, Basis};
use symmorse::rational::{format_q, parse_q};
use symmorse::tracker::{track_family_monodromy, track_microlocal_monodromy, TrackResult, TrackerProblem, Verdict};
use symmorse::{BraidWord, Case, ColoredBraid, Matrix, Partition, Permutation, Q};

pub const SCHEMA_VERSION: u32 = 1;

fn schema(kind: &str) -> String {
    format!("symmorse/{kind}/v{SCHEMA_VERSION}")
}

pub fn q_json(x: &Q) -> Value {
    Value::String(format_q(x))
}

pub fn matrix_json(m: &Matrix<Q>) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array((0..m.cols()).map(|c| q_json(&m[(r, c)])).collect())).collect())
}

pub fn complex_json(z: C64) -> Value {
    json!([z.re, z.im])
}

pub fn complex_matrix_json(m: &Matrix<C64>) -> Value {
    Value::Array(
        (0..m.rows()).map(|r| Value::Array((0..m.cols()).map(|c| complex_json(m[(r, c)])).collect())).collect(),
    )
}

pub fn permutation_json(p: &Permutation) -> Value {
    json!(p.one_line())
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

/// Parses `"1.5"`, `"-2i"`, `"0.3+1.2i"` or `"1e-3-4i"`.
pub fn parse_complex(s: &str) -> Result<C64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || anyhow!("bad complex number {s:?}");
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|x| C64::new(x, 0.0)).map_err(|_| bad());
    };
    // split before the last sign that is not the leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        x => x,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    Ok(C64::new(re, im))
}

/// Comma separated complex numbers.
pub fn parse_complex_list(s: &str) -> Result<Vec<C64>> {
    s.split(',').map(parse_complex).collect()
}

/// Comma separated rationals.
pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(|t| parse_q(t.trim()).map_err(|e| anyhow!("{e}"))).collect()
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    Partition::parse(s).map_err(|e| anyhow!("{e}"))
}

/// `"i,j"` for `varsigma_{i,j}`.
pub fn parse_varsigma(s: &str) -> Result<ColoredGenerator> {
    let (i, j) = s.split_once(',').ok_or_else(|| anyhow!("expected i,j, got {s:?}"))?;
    Ok(ColoredGenerator::Varsigma(i.trim().parse()?, j.trim().parse()?))
}

pub fn cmd_dim(partition: &Partition) -> (Value, bool) {
    let doc = json!({
        "schema": schema("dim"),
        "partition": partition_json(partition),
        "dim": partition.multinomial_dim(),
    });
    (doc, true)
}

fn basis_json(b: &Basis) -> Value {
    Value::Array((0..b.len()).map(|i| Value::String(b.describe(i))).collect())
}

/// Module dump: family matrices, the requested microlocal matrices (all
/// colored generators when `generators` is empty) and the verification report.
pub fn cmd_rep(
    case: Case,
    partition: &Partition,
    generators: &[ColoredGenerator],
    colored_braid: Option<&str>,
) -> Result<(Value, bool)> {
    let mut rep = family_monodromy_rep(case, partition)?;
    let gens = if generators.is_empty() { colored_generators(partition) } else { generators.to_vec() };
    for g in &gens {
        g.braid(partition).with_context(|| format!("generator {}", g.name()))?;
    }
    let report = verify_rep(&mut rep, &gens)?;
    let mut microlocal = serde_json::Map::new();
    for g in &gens {
        microlocal.insert(g.name(), matrix_json(&rep.microlocal_generator(g)?));
    }
    let braid = match colored_braid {
        Some(text) => {
            let c = ColoredBraid::parse(partition, text)?;
            json!({ "word": c.word().to_text(), "matrix": matrix_json(&rep.microlocal(&c)?) })
        }
        None => Value::Null,
    };
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "result": if c.passed { "pass" } else { "fail" } }))
        .collect();
    let passed = report.passed();
    let doc = json!({
        "schema": schema("rep"),
        "case": case.name(),
        "partition": partition_json(partition),
        "dim": rep.dim(),
        "basis": basis_json(rep.basis()),
        "family": rep.family_generators().iter().map(matrix_json).collect::<Vec<_>>(),
        "microlocal": microlocal,
        "colored_braid": braid,
        "checks": checks,
        "passed": passed,
    });
    Ok((doc, passed))
}

/// Tracker input as read from `--input`.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrackInput {
    pub partition: String,
    #[serde(default)]
    pub lambdas: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub us: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub tau: Option<[f64; 2]>,
    #[serde(default)]
    pub braid: Option<String>,
    #[serde(default)]
    pub colored: Option<String>,
    #[serde(default)]
    pub case: Option<String>,
}

pub struct TrackRequest {
    pub partition: Partition,
    pub lambdas: Option<Vec<C64>>,
    pub us: Option<Vec<C64>>,
    pub tau: Option<C64>,
    pub braid: Option<String>,
    pub colored: Option<String>,
    pub case: Case,
    pub steps: Option<usize>,
    pub min_separation: Option<f64>,
}

impl TrackRequest {
    pub fn from_input(input: &TrackInput) -> Result<Self> {
        let pairs = |v: &Option<Vec<[f64; 2]>>| v.as_ref().map(|v| v.iter().map(|z| C64::new(z[0], z[1])).collect());
        Ok(TrackRequest {
            partition: parse_partition(&input.partition)?,
            lambdas: pairs(&input.lambdas),
            us: pairs(&input.us),
            tau: input.tau.map(|z| C64::new(z[0], z[1])),
            braid: input.braid.clone(),
            colored: input.colored.clone(),
            case: match &input.case {
                Some(c) => c.parse().map_err(|e| anyhow!("{e}"))?,
                None => Case::I,
            },
            steps: None,
            min_separation: None,
        })
    }
}

fn track_json(mode: &str, prob: &TrackerProblem, word: &str, r: &TrackResult) -> Value {
    json!({
        "schema": schema("track"),
        "mode": mode,
        "partition": partition_json(&prob.partition),
        "lambdas": prob.lambdas.iter().map(|&z| complex_json(z)).collect::<Vec<_>>(),
        "us": prob.us.iter().map(|&z| complex_json(z)).collect::<Vec<_>>(),
        "tau": complex_json(prob.tau),
        "word": word,
        "labels": r.labels.iter().map(|b| json!(b.one_based())).collect::<Vec<_>>(),
        "permutation": permutation_json(&r.permutation),
        "predicted": r.predicted.as_ref().map(permutation_json),
        "verdict": r.verdict.name(),
        "min_gap_observed": r.min_gap_observed,
        "steps_used": r.steps_used,
        "refinements": r.refinements,
    })
}

/// Tracks a braid word of the lambdas, or a colored braid of the us when
/// `colored` is set. Fails on a mismatch only through the returned verdict.
pub fn cmd_track(req: &TrackRequest) -> Result<(Value, bool)> {
    let mut prob = TrackerProblem::with_defaults(req.partition.clone())?;
    if let Some(l) = &req.lambdas {
        prob.lambdas = l.clone();
    }
    if let Some(u) = &req.us {
        prob.us = u.clone();
    }
    if let Some(t) = req.tau {
        prob.tau = t;
    }
    if let Some(s) = req.steps {
        prob.steps = s;
    }
    if let Some(m) = req.min_separation {
        prob.min_separation = m;
    }
    prob.validate()?;
    let (doc, verdict) = match (&req.braid, &req.colored) {
        (Some(_), Some(_)) => bail!("give either a braid of the lambdas or a colored braid, not both"),
        (None, Some(text)) => {
            let c = ColoredBraid::parse(&req.partition, text)?;
            let r = track_microlocal_monodromy(&prob, &c, req.case)?;
            let mut doc = track_json("microlocal", &prob, &c.word().to_text(), &r);
            doc["case"] = json!(req.case.name());
            (doc, r.verdict)
        }
        (braid, None) => {
            let w = BraidWord::parse(req.partition.n(), braid.as_deref().unwrap_or(""))?;
            let r = track_family_monodromy(&prob, &w)?;
            (track_json("family", &prob, &w.to_text(), &r), r.verdict)
        }
    };
    Ok((doc, verdict != Verdict::Mismatch))
}

pub struct GeometryRequest {
    pub case: Case,
    pub partition: Partition,
    pub seed: u64,
    /// Eigenvalues of `B` on the blocks; sampled when absent.
    pub u: Option<Vec<Q>>,
    pub critical_points: bool,
    pub lambdas: Option<Vec<C64>>,
    pub tau: Option<C64>,
    pub tol: f64,
}

fn pair_json(pair: &ConormalPair) -> Value {
    json!({
        "A": matrix_json(&pair.a),
        "B": matrix_json(&pair.b),
        "form": pair.form.as_ref().map(matrix_json),
    })
}

fn normal_form_json(r: &NormalFormReport, tol: f64) -> (Value, bool) {
    let passed = r.passed() && r.residual < tol;
    let polys: Vec<Value> = r
        .polynomials
        .iter()
        .map(|p| p.as_ref().map_or(Value::Null, |c| json!(c.iter().map(q_json).collect::<Vec<_>>())))
        .collect();
    let doc = json!({
        "conormal": r.conormal,
        "orbit_type": partition_json(&r.partition),
        "eigenvalues": r.eigenvalues.iter().map(q_json).collect::<Vec<_>>(),
        "eigenspace_dims": r.dims,
        "expected_dims": r.expected_dims,
        "a_invariant": r.a_invariant,
        "regular": r.regular,
        "orthogonal": r.orthogonal,
        "polynomials": polys,
        "degrees": r.degrees,
        "relative_residual": r.residual,
        "passed": passed,
    });
    (doc, passed)
}

fn critical_points_json(r: &SliceReport) -> Value {
    let points: Vec<Value> = r
        .points
        .iter()
        .map(|p| {
            json!({
                "label": p.beta.one_based(),
                "point": complex_matrix_json(&p.c),
                "xi": complex_json(p.xi),
                "xi_closed_form": complex_json(p.xi_closed_form),
                "newton_residual": p.newton_residual,
                "newton_iterations": p.newton_iterations,
                "criticality_residual": p.criticality_residual,
                "hessian_min_singular_value": p.hessian_min_singular_value,
            })
        })
        .collect();
    json!({
        "count": r.points.len(),
        "expected_count": r.slice.partition.multinomial_dim(),
        "tangent_dim": r.slice.tangent_dim,
        "min_separation": r.min_separation,
        "scale": r.scale,
        "tau": complex_json(r.tau),
        "points": points,
        "passed": r.passed(),
    })
}

/// Lambdas summing to zero for the critical-point computation.
pub fn default_slice_lambdas(n: usize) -> Vec<C64> {
    let base: Vec<f64> = (0..n).map(|i| i as f64 + 0.3 * ((i * i) as f64 * 0.7).sin()).collect();
    let mean = base.iter().sum::<f64>() / n as f64;
    base.iter().map(|x| C64::new(x - mean, 0.0)).collect()
}

/// Samples (or realizes from `u`) a generic conormal pair, verifies its
/// normal form, and optionally computes the critical points on the slice.
pub fn cmd_geometry(req: &GeometryRequest) -> Result<(Value, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
    let p = &req.partition;
    let pair = match (&req.u, req.critical_points) {
        (None, false) => sample_conormal(req.case, p, &mut rng)?,
        (u, _) => {
            // the closed form for the critical values needs B semisimple on each block
            let u = match u {
                Some(u) => u.clone(),
                None => sample_normal_form_data(p, &mut rng).0,
            };
            let pair = realize_conormal(req.case, p, &u, &[])?;
            let g = random_unimodular(pair.size(), &mut rng);
            pair.conjugate(&g)?
        }
    };
    let (normal_form, mut passed) = normal_form_json(&verify_normal_form(&pair)?, req.tol);
    let critical = if req.critical_points {
        if req.case != Case::I {
            bail!("critical points are implemented for case I only");
        }
        let lambdas = req.lambdas.clone().unwrap_or_else(|| default_slice_lambdas(p.n()));
        let tau = req.tau.unwrap_or(C64::new(0.05, 0.02));
        let report = slice_and_critical_points_I(&pair, &lambdas, tau)?;
        passed &= report.passed();
        critical_points_json(&report)
    } else {
        Value::Null
    };
    let doc = json!({
        "schema": schema("geometry"),
        "case": req.case.name(),
        "partition": partition_json(p),
        "seed": req.seed,
        "pair": pair_json(&pair),
        "normal_form": normal_form,
        "critical_points": critical,
        "passed": passed,
    });
    Ok((doc, passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("1.5").unwrap(), C64::new(1.5, 0.0));
        assert_eq!(parse_complex("-2i").unwrap(), C64::new(0.0, -2.0));
        assert_eq!(parse_complex("0.3+1.2i").unwrap(), C64::new(0.3, 1.2));
        assert_eq!(parse_complex("1e-3-4i").unwrap(), C64::new(1e-3, -4.0));
        assert_eq!(parse_complex("-1-i").unwrap(), C64::new(-1.0, -1.0));
        assert_eq!(parse_complex("i").unwrap(), C64::new(0.0, 1.0));
        assert!(parse_complex("1+x").is_err());
        assert_eq!(parse_complex_list("1, -1").unwrap().len(), 2);
    }

    #[test]
    fn varsigma_parsing() {
        assert_eq!(parse_varsigma("1,3").unwrap(), ColoredGenerator::Varsigma(1, 3));
        assert!(parse_varsigma("13").is_err());
    }

    #[test]
    fn slice_lambdas_sum_to_zero() {
        for n in 1..6 {
            let l = default_slice_lambdas(n);
            assert!(l.iter().sum::<C64>().norm() < 1e-12);
        }
    }

    #[test]
    fn dim_document() {
        let (doc, ok) = cmd_dim(&parse_partition("1,1,2").unwrap());
        assert!(ok);
        assert_eq!(doc["dim"], 12);
        assert_eq!(doc["schema"], "symmorse/dim/v1");
    }

    #[test]
    fn rep_golden() {
        let (doc, ok) = cmd_rep(Case::II, &parse_partition("1,1").unwrap(), &[], None).unwrap();
        assert!(ok);
        assert_eq!(doc["family"][0], json!([["0", "-1"], ["1", "2"]]));
        assert_eq!(doc["microlocal"]["kappa_1"], json!([["2", "1"], ["-1", "0"]]));
    }
}
