use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symmorse::braid::{colored_generators, strand_permutation};
use symmorse::combinatorics::{enumerate_beta, min_coset_rep_of, sigma_action_on_beta};
use symmorse::geometry::{jordan_partition, random_unimodular, sample_conormal, verify_normal_form};
use symmorse::hecke::{braid_to_hecke, hecke_multiply, reduce_mod_parabolic};
use symmorse::morse::{family_monodromy_rep, microlocal_rep_I};
use symmorse::rational::{format_q, parse_q, q_frac};
use symmorse::tracker::{track_family_monodromy, TrackerProblem};
use symmorse::{BraidWord, Case, ColoredBraid, HeckeElement, Partition, Permutation};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|images| Permutation::from_images(images).unwrap())
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letters = if n < 2 {
        Just(Vec::new()).boxed()
    } else {
        prop::collection::vec((1..n as i64, any::<bool>()), 0..=max_len)
            .prop_map(|v| v.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect())
            .boxed()
    };
    letters.prop_map(move |signed: Vec<i64>| BraidWord::from_signed(n, &signed).unwrap())
}

fn hecke(n: usize) -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((permutation(n), -3i64..=3, 1i64..=2), 1..4).prop_map(move |terms| {
        HeckeElement::from_terms(n, terms.into_iter().map(|(w, a, b)| (w, q_frac(a, b)))).unwrap()
    })
}

fn partition_and_word(max_n: usize, max_len: usize) -> impl Strategy<Value = (Partition, BraidWord)> {
    partition(max_n).prop_flat_map(move |p| {
        let n = p.n();
        (Just(p), word(n, max_len))
    })
}

/// A colored braid as a product of generators and their inverses.
fn colored_word(p: &Partition, picks: &[(usize, bool)]) -> ColoredBraid {
    let gens = colored_generators(p);
    picks.iter().fold(ColoredBraid::identity(p), |acc, &(i, inv)| {
        if gens.is_empty() {
            return acc;
        }
        let g = gens[i % gens.len()].braid(p).unwrap();
        acc.concat(&if inv { g.inverse() } else { g }).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hecke_multiplication_is_associative(a in hecke(4), b in hecke(4), c in hecke(4)) {
        let left = hecke_multiply(&hecke_multiply(&a, &b).unwrap(), &c).unwrap();
        let right = hecke_multiply(&a, &hecke_multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn braid_image_is_invertible(w in word(4, 8)) {
        let x = hecke_multiply(&braid_to_hecke(&w), &braid_to_hecke(&w.inverse())).unwrap();
        prop_assert_eq!(x, HeckeElement::one(4));
    }

    #[test]
    fn braid_image_is_multiplicative(a in word(4, 5), b in word(4, 5)) {
        let ab = braid_to_hecke(&a.concat(&b).unwrap());
        prop_assert_eq!(ab, hecke_multiply(&braid_to_hecke(&a), &braid_to_hecke(&b)).unwrap());
    }

    #[test]
    fn reduction_is_constant_on_cosets(p in partition(4), seed in any::<u64>()) {
        // T_v T_y reduces like T_v for y in the Young subgroup (T_y acts by 1)
        let n = p.n();
        let all = Permutation::all(n);
        let v = &all[seed as usize % all.len()];
        let young: Vec<&Permutation> = all.iter().filter(|y| symmorse::combinatorics::in_young_subgroup(y, &p)).collect();
        let y = young[(seed >> 32) as usize % young.len()];
        let lhs = reduce_mod_parabolic(&HeckeElement::basis(v.compose(y)), &p).unwrap();
        let rhs = reduce_mod_parabolic(&HeckeElement::basis(v.clone()), &p).unwrap();
        if v.length() + y.length() == v.compose(y).length() {
            prop_assert_eq!(lhs, rhs);
        }
        prop_assert_eq!(min_coset_rep_of(&v.compose(y), &p), min_coset_rep_of(v, &p));
    }

    #[test]
    fn label_action_is_a_left_action(p in partition_of(5), u in permutation(5), v in permutation(5)) {
        for b in enumerate_beta(&p) {
            let once = sigma_action_on_beta(&u.compose(&v), &b).unwrap();
            let twice = sigma_action_on_beta(&u, &sigma_action_on_beta(&v, &b).unwrap()).unwrap();
            prop_assert_eq!(once, twice);
        }
    }

    #[test]
    fn family_matrices_are_multiplicative((p, a) in partition_and_word(4, 5), b_seed in any::<u64>()) {
        let n = p.n();
        let b = BraidWord::from_signed(n, &if n < 2 { vec![] } else { vec![1 + (b_seed % (n as u64 - 1)) as i64, -1] }).unwrap();
        for case in Case::ALL {
            let rep = family_monodromy_rep(case, &p).unwrap();
            let ab = rep.family_matrix(&a.concat(&b).unwrap()).unwrap();
            prop_assert_eq!(ab, rep.family_matrix(&a).unwrap().mul_mat(&rep.family_matrix(&b).unwrap()));
        }
    }

    #[test]
    fn family_permutation_part_is_the_label_action((p, w) in partition_and_word(4, 6)) {
        let rep = family_monodromy_rep(Case::I, &p).unwrap();
        let m = rep.family_matrix(&w).unwrap();
        let labels = enumerate_beta(&p);
        let pi = strand_permutation(&w);
        for (col, b) in labels.iter().enumerate() {
            let row = labels.iter().position(|x| *x == sigma_action_on_beta(&pi, b).unwrap()).unwrap();
            prop_assert!(m[(row, col)] == symmorse::rational::q(1));
        }
    }

    #[test]
    fn microlocal_i_is_a_homomorphism(p in partition(5), a in prop::collection::vec((0usize..8, any::<bool>()), 0..4), b in prop::collection::vec((0usize..8, any::<bool>()), 0..4)) {
        let (ca, cb) = (colored_word(&p, &a), colored_word(&p, &b));
        let ab = microlocal_rep_I(&p, &ca.concat(&cb).unwrap()).unwrap();
        prop_assert_eq!(ab, microlocal_rep_I(&p, &ca).unwrap().mul_mat(&microlocal_rep_I(&p, &cb).unwrap()));
    }

    #[test]
    fn microlocal_ii_reverses_products(p in partition(3), a in prop::collection::vec((0usize..8, any::<bool>()), 0..3), b in prop::collection::vec((0usize..8, any::<bool>()), 0..3)) {
        let mut rep = family_monodromy_rep(Case::II, &p).unwrap();
        let (ca, cb) = (colored_word(&p, &a), colored_word(&p, &b));
        let ab = rep.microlocal(&ca.concat(&cb).unwrap()).unwrap();
        let ha = rep.microlocal(&ca).unwrap();
        let hb = rep.microlocal(&cb).unwrap();
        prop_assert_eq!(ab, hb.mul_mat(&ha));
    }

    #[test]
    fn rationals_round_trip(a in -1000i64..1000, b in 1i64..1000) {
        let x = q_frac(a, b);
        prop_assert_eq!(parse_q(&format_q(&x)).unwrap(), x);
    }

    #[test]
    fn normal_form_survives_conjugation(case_index in 0usize..3, p in partition(3), seed in any::<u64>()) {
        let case = Case::ALL[case_index];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pair = sample_conormal(case, &p, &mut rng).unwrap();
        let again = pair.conjugate(&random_unimodular(pair.size(), &mut rng)).unwrap();
        prop_assert_eq!(jordan_partition(case, &again.a).unwrap(), p);
        let (r1, r2) = (verify_normal_form(&pair).unwrap(), verify_normal_form(&again).unwrap());
        prop_assert!(r1.passed() && r2.passed());
        prop_assert_eq!(r1.eigenvalues, r2.eigenvalues);
        prop_assert_eq!(r1.polynomials, r2.polynomials);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tracking_composes((p, a) in partition_and_word(4, 4), b_letters in prop::collection::vec((1i64..4, any::<bool>()), 0..4)) {
        let n = p.n();
        let signed: Vec<i64> = if n < 2 { vec![] } else {
            b_letters.iter().map(|&(i, pos)| { let i = 1 + (i - 1) % (n as i64 - 1); if pos { i } else { -i } }).collect()
        };
        let b = BraidWord::from_signed(n, &signed).unwrap();
        let prob = TrackerProblem::with_defaults(p).unwrap();
        let ta = track_family_monodromy(&prob, &a).unwrap().permutation;
        let tb = track_family_monodromy(&prob, &b).unwrap().permutation;
        let tab = track_family_monodromy(&prob, &a.concat(&b).unwrap()).unwrap().permutation;
        prop_assert_eq!(tab, ta.compose(&tb));
    }
}
