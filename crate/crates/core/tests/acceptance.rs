//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::thread;
use std::time::Instant;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symmorse::braid::{colored_generators, ColoredGenerator};
use symmorse::combinatorics::kostka_decomposition;
use symmorse::geometry::{
    jordan_partition, random_unimodular, realize_conormal, sample_conormal, slice_and_critical_points_I,
    verify_normal_form,
};
use symmorse::morse::{cyclic_rank, family_monodromy_rep, irreducible_multiplicities, verify_rep, Report};
use symmorse::rational::q;
use symmorse::tracker::{track_family_monodromy, TrackerProblem, Verdict};
use symmorse::{BraidWord, Case, ColoredBraid, Matrix, Partition, Q};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    match failures.first() {
        None => Outcome { passed: true, detail: summary },
        Some(f) => Outcome { passed: false, detail: format!("{} failure(s), first: {f}", failures.len()) },
    }
}

fn partitions(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(Partition::all).collect()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Full verification reports (family relations and every microlocal
/// generator) for every case and partition with `n <= 5`; computed once and
/// shared by criteria 2-4.
fn reports() -> &'static BTreeMap<(String, Partition), Result<Report, String>> {
    static REPORTS: OnceLock<BTreeMap<(String, Partition), Result<Report, String>>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let jobs: Vec<(Case, Partition)> =
            Case::ALL.iter().flat_map(|&c| partitions(5).into_iter().map(move |p| (c, p))).collect();
        let handles: Vec<_> = jobs
            .into_iter()
            .map(|(case, p)| {
                thread::spawn(move || {
                    let res = family_monodromy_rep(case, &p)
                        .and_then(|mut rep| verify_rep(&mut rep, &colored_generators(&p)))
                        .map_err(|e| e.to_string());
                    ((case.name().to_string(), p), res)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification thread")).collect()
    })
}

fn report_checks(select: impl Fn(&str) -> bool, label: &str) -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for ((case, p), res) in reports() {
        match res {
            Ok(r) => {
                for c in r.checks.iter().filter(|c| select(&c.name)) {
                    count += 1;
                    if !c.passed {
                        failures.push(format!("case {case} {p}: {}", c.name));
                    }
                }
            }
            Err(e) => failures.push(format!("case {case} {p}: {e}")),
        }
    }
    outcome(&failures, format!("{count} {label} identities exact over {} modules", reports().len()))
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for p in partitions(6) {
        let expected = factorial(p.n()) / p.parts().iter().map(|&m| factorial(m)).product::<u64>();
        for case in Case::ALL {
            count += 1;
            match family_monodromy_rep(case, &p) {
                Ok(rep) if rep.dim() as u64 == expected && rep.family_generators().len() + 1 == p.n().max(1) => {}
                Ok(rep) => failures.push(format!("case {case} {p}: dim {} vs {expected}", rep.dim())),
                Err(e) => failures.push(format!("case {case} {p}: {e}")),
            }
        }
    }
    outcome(&failures, format!("{count} modules, n <= 6"))
}

fn criterion_2() -> Outcome {
    report_checks(|n| n.starts_with("M^2") || n.starts_with("(M-1)^2") || n.starts_with("braid relation"), "family")
}

fn criterion_3() -> Outcome {
    report_checks(|n| n.starts_with('['), "commutation")
}

fn criterion_4() -> Outcome {
    // building the case II module runs the descent membership test for each
    // generator and fails on the first violation
    let mut failures = Vec::new();
    let mut count = 0;
    for ((case, p), res) in reports() {
        if case != Case::II.name() {
            continue;
        }
        count += colored_generators(p).len();
        if let Err(e) = res {
            failures.push(format!("{p}: {e}"));
        }
    }
    outcome(&failures, format!("{count} generators pass the kernel membership test"))
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    for p in partitions(5) {
        let rep = family_monodromy_rep(Case::I, &p).expect("case I module");
        match irreducible_multiplicities(&rep) {
            Ok(m) if m == kostka_decomposition(&p) => {}
            Ok(m) => failures.push(format!("{p}: {m:?}")),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    outcome(&failures, format!("{} partitions", partitions(5).len()))
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for p in partitions(4) {
        for case in Case::ALL {
            count += 1;
            let rep = family_monodromy_rep(case, &p).expect("module");
            if cyclic_rank(&rep) != rep.dim() {
                failures.push(format!("case {case} {p}: e0 spans {} of {}", cyclic_rank(&rep), rep.dim()));
            }
            if !symmorse::morse::young_fixes_e0(&rep) {
                failures.push(format!("case {case} {p}: e0 not fixed by the Young generators"));
            }
        }
    }
    outcome(&failures, format!("{count} modules, n <= 4"))
}

fn random_word(n: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let len = rng.random_range(0..=8);
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
    BraidWord::from_signed(n, &signed).expect("word")
}

fn criterion_7() -> Outcome {
    let handles: Vec<_> = partitions(5)
        .into_iter()
        .enumerate()
        .map(|(seed, p)| {
            thread::spawn(move || {
                let mut rng = ChaCha8Rng::seed_from_u64(700 + seed as u64);
                let prob = TrackerProblem::with_defaults(p.clone()).expect("default problem");
                let mut failures = Vec::new();
                let mut gap = f64::INFINITY;
                for _ in 0..100 {
                    let w = random_word(p.n(), &mut rng);
                    match track_family_monodromy(&prob, &w) {
                        Ok(r) if r.verdict == Verdict::Match && r.min_gap_observed >= 1e-8 => {
                            gap = gap.min(r.min_gap_observed)
                        }
                        Ok(r) => failures.push(format!("{p} [{w}]: {}", r.verdict.name())),
                        Err(e) => failures.push(format!("{p} [{w}]: {e}")),
                    }
                }
                (failures, gap)
            })
        })
        .collect();
    let mut failures = Vec::new();
    let mut gap = f64::INFINITY;
    for h in handles {
        let (f, g) = h.join().expect("tracker thread");
        failures.extend(f);
        gap = gap.min(g);
    }
    outcome(&failures, format!("{} words, smallest value gap {gap:.3e}", 100 * partitions(5).len()))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(800);
    let mut failures = Vec::new();
    let mut count = 0;
    let mut worst = 0.0f64;
    for case in Case::ALL {
        for n in 1..=4 {
            let parts = Partition::all(n);
            for s in 0..50 {
                let p = &parts[s % parts.len()];
                count += 1;
                let pair = match sample_conormal(case, p, &mut rng) {
                    Ok(pair) => pair,
                    Err(e) => {
                        failures.push(format!("case {case} {p}: {e}"));
                        continue;
                    }
                };
                if jordan_partition(case, &pair.a).as_ref() != Ok(p) {
                    failures.push(format!("case {case} {p}: Jordan type does not round-trip"));
                }
                match verify_normal_form(&pair) {
                    Ok(r) => {
                        worst = worst.max(r.residual);
                        if !r.passed() || r.residual >= 1e-9 {
                            failures.push(format!("case {case} {p}: {r:?}"));
                        }
                    }
                    Err(e) => failures.push(format!("case {case} {p}: {e}")),
                }
            }
        }
    }
    outcome(&failures, format!("{count} sampled pairs, worst relative residual {worst:e}"))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(900);
    let lambdas = [C64::new(-1.3, 0.0), C64::new(0.4, 0.0), C64::new(0.9, 0.0)];
    let tau = C64::new(0.05, 0.02);
    let mut failures = Vec::new();
    let mut points = 0;
    let mut worst_newton = 0.0f64;
    let mut worst_hessian = f64::INFINITY;
    for p in partitions(3) {
        let n = p.n();
        let lam: Vec<C64> = match n {
            1 => vec![C64::new(0.0, 0.0)],
            2 => vec![C64::new(1.0, 0.0), C64::new(-1.0, 0.0)],
            _ => lambdas.to_vec(),
        };
        // distinct u with sum n_i u_i = 0, and B semisimple on each U_i
        let k = p.k();
        let mut u: Vec<Q> = (0..k).map(|i| q(i as i64 * 2 + rng.random_range(0..2))).collect();
        let shift: Q = p.parts().iter().zip(&u).map(|(&m, x)| x * q(m as i64)).sum::<Q>() / q(n as i64);
        u.iter_mut().for_each(|x| *x -= &shift);
        let pair =
            realize_conormal(Case::I, &p, &u, &[]).and_then(|pair| pair.conjugate(&random_unimodular(n, &mut rng)));
        let report = pair.and_then(|pair| slice_and_critical_points_I(&pair, &lam, tau));
        match report {
            Ok(r) => {
                points += r.points.len();
                for c in &r.points {
                    worst_newton = worst_newton.max(c.newton_residual);
                    if let Some(s) = c.hessian_min_singular_value {
                        worst_hessian = worst_hessian.min(s / r.scale);
                    }
                }
                if !r.passed() {
                    failures.push(format!("{p}: {r:?}"));
                }
            }
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    outcome(
        &failures,
        format!(
            "{points} critical points, worst Newton residual {worst_newton:.1e}, smallest relative Hessian singular value {worst_hessian:.1e}"
        ),
    )
}

fn criterion_10() -> Outcome {
    let p = Partition::new(vec![1, 1]).expect("partition");
    let k1 = ColoredGenerator::Kappa(1);
    let m = |rows: &[&[i64]]| Matrix::<Q>::from_i64(rows);
    let expected = [
        (Case::I, m(&[&[0, 1], &[1, 0]]), m(&[&[0, -1], &[-1, 0]])),
        (Case::II, m(&[&[0, -1], &[1, 2]]), m(&[&[2, 1], &[-1, 0]])),
    ];
    let mut failures = Vec::new();
    for (case, fam, micro) in expected {
        let mut rep = family_monodromy_rep(case, &p).expect("module");
        if rep.family_generators()[0] != fam {
            failures.push(format!("case {case} family {:?}", rep.family_generators()[0]));
        }
        let via_word = rep.microlocal(&ColoredBraid::parse(&p, "1").expect("braid")).expect("microlocal");
        let via_gen = rep.microlocal_generator(&k1).expect("microlocal");
        if via_word != micro || via_gen != micro {
            failures.push(format!("case {case} microlocal {via_word:?}"));
        }
    }
    outcome(&failures, "case I and II (1,1) family and microlocal matrices bit-exact".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("dimension formula", criterion_1),
        ("factorization and braid relations", criterion_2),
        ("microlocal/family commutation", criterion_3),
        ("well-definedness of the microlocal action", criterion_4),
        ("Kostka multiplicities", criterion_5),
        ("cyclic generation and Young-fixed e0", criterion_6),
        ("tracker vs algebra", criterion_7),
        ("normal form geometry", criterion_8),
        ("critical points", criterion_9),
        ("regression goldens", criterion_10),
    ];
    let start = Instant::now();
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        all &= o.passed;
        println!(
            "criterion {:>2} {}: {} ({}; {:.1}s)",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            name,
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} in {:.1}s",
        if all { "all criteria pass" } else { "FAILED" },
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
