use hodge_core::hodge::{check_1n, HodgeProblem1N, LabeledPoint1N};
use hodge_core::lowrank::*;
use hodge_core::{RecordKind, WeightedPoint1N, Q};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

fn p12(label: &str, alpha: Q, beta1: Q, beta2: Q) -> Point12 {
    Point12 { label: label.into(), alpha, beta1, beta2 }
}

fn example_one() -> HodgeProblem12 {
    HodgeProblem12 {
        points: vec![
            p12("0", q(-1, 2), q(-1, 3), q(0, 1)),
            p12("1", q(-1, 12), q(-1, 4), q(1, 4)),
            p12("inf", q(-1, 12), q(-1, 4), q(1, 4)),
        ],
        deg_l: 1,
        deg_v: 0,
    }
}

fn example_two() -> HodgeProblem12 {
    HodgeProblem12 {
        points: ["0", "1", "inf"].iter().map(|l| p12(l, q(-1, 6), q(-1, 3), q(1, 6))).collect(),
        deg_l: 1,
        deg_v: 0,
    }
}

fn essential_lines(rep: &hodge_core::ExistenceReport) -> Vec<String> {
    let mut recs: Vec<_> = rep.records.iter().filter(|r| r.essential).collect();
    recs.sort_by_key(|r| (r.kind, r.subsets.clone()));
    recs.iter().map(|r| r.inequality()).collect()
}

#[test]
fn classification_examples() {
    let c = classify_points_12(&example_one());
    assert_eq!((c.l(), c.m(), c.special.clone()), (3, 2, vec![1, 2]));
    let c = classify_points_12(&example_two());
    assert_eq!((c.l(), c.m()), (3, 3));
    let mut none = example_two();
    for p in &mut none.points {
        p.alpha = q(1, 3);
    }
    let c = classify_points_12(&none);
    assert_eq!((c.l(), c.m()), (0, 0));
    assert!(check_12(&none, false).is_err());
}

#[test]
fn shifted_splittings_of_examples() {
    let s = shifted_splitting_12(&example_one()).unwrap();
    assert_eq!(s.w_tilde, SplittingType::new(3, 2));
    assert_eq!(s.v_tilde, SplittingType::new(2, 1));
    assert_eq!(s.v, SplittingType::new(0, 0));
    let s = shifted_splitting_12(&example_two()).unwrap();
    assert_eq!(s.w_tilde, SplittingType::new(4, 1));
    assert_eq!(s.v_tilde, SplittingType::new(3, 0));
}

#[test]
fn example_one_golden() {
    let prob = example_one();
    assert_eq!(prob.parabolic_degree(), Q::zero());
    let rep = check_12(&prob, false).unwrap();
    assert_eq!(
        essential_lines(&rep),
        vec![
            "beta1(0) + beta2(1) + beta2(inf) <= 0",
            "beta2(0) + beta1(1) + beta2(inf) <= 0",
            "beta2(0) + beta2(1) + beta1(inf) <= 0",
            "(1 + alpha(0) + beta1(0) + alpha(1) + beta2(1) + alpha(inf) + beta2(inf))/2 <= 0",
        ]
    );
    assert!(rep.records.iter().filter(|r| r.essential && r.kind == RecordKind::TypeI).all(|r| r.delta == Some(0)));
}

#[test]
fn example_two_golden() {
    let rep = check_12(&example_two(), false).unwrap();
    let lines = essential_lines(&rep);
    assert_eq!(lines[0], "beta2(0) + beta2(1) + beta2(inf) <= 0");
    assert_eq!(lines.len(), 2);
    assert_eq!(rep.records.iter().filter(|r| r.kind == RecordKind::TypeI && r.essential).count(), 1);
}

#[test]
fn twisting_everything_keeps_verdicts() {
    let base = example_one();
    let before = check_12(&base, false).unwrap();
    for t in -3..=3 {
        let mut tw = base.clone();
        tw.deg_l += t;
        tw.deg_v += 2 * t;
        let after = check_12(&tw, false).unwrap();
        assert_eq!(before.exists, after.exists);
        let gaps = |r: &hodge_core::ExistenceReport| r.records.iter().map(|x| (x.subsets.clone(), x.gap(), x.satisfied)).collect::<Vec<_>>();
        assert_eq!(gaps(&before), gaps(&after));
    }
}

fn random_sorted(rng: &mut StdRng, den: i64, count: usize) -> Vec<Q> {
    let mut v: Vec<i64> = Vec::new();
    while v.len() < count {
        let x = rng.gen_range(0..den);
        if !v.contains(&x) {
            v.push(x);
        }
    }
    v.sort_unstable();
    v.into_iter().map(|x| q(x, den)).collect()
}

fn generic_pole_problem(rng: &mut StdRng) -> HodgeProblem12 {
    let den = 60;
    let mut pts: Vec<Vec<Q>> = (0..3)
        .map(|_| random_sorted(rng, den, 3).into_iter().map(|x| x - q(1, 2)).collect())
        .collect();
    let total: Q = pts.iter().flatten().sum();
    let shift = (total.clone() - total.floor()) / Q::from_integer(3.into());
    for w in &mut pts[0] {
        *w -= shift.clone();
    }
    let deg_l = rng.gen_range(-1..=2);
    let deg_v = -deg_l - i64::try_from(total.floor().to_integer()).unwrap();
    HodgeProblem12 {
        points: pts.iter().enumerate().map(|(i, w)| p12(&i.to_string(), w[0].clone(), w[1].clone(), w[2].clone())).collect(),
        deg_l,
        deg_v,
    }
}

#[test]
fn generic_flags_are_never_looser_than_rank_n_checker() {
    let mut rng = StdRng::seed_from_u64(5);
    let (mut feasible, mut disagree, trials) = (0, 0, 1500);
    for _ in 0..trials {
        let prob = generic_pole_problem(&mut rng);
        assert!(prob.parabolic_degree().is_zero());
        assert_eq!(classify_points_12(&prob).m(), 0);
        let other = HodgeProblem1N {
            n: 2,
            points: prob
                .points
                .iter()
                .map(|p| LabeledPoint1N {
                    label: p.label.clone(),
                    weights: WeightedPoint1N { alpha: p.alpha.clone(), betas: vec![p.beta1.clone(), p.beta2.clone()] },
                })
                .collect(),
            deg_l: prob.deg_l,
            deg_v: prob.deg_v,
        };
        let a = check_12(&prob, false).unwrap().exists;
        let b = check_1n(&other.normalized().unwrap().0, false).unwrap().exists;
        assert!(!a || b, "{prob:?}");
        feasible += b as usize;
        disagree += (a != b) as usize;
    }
    assert!(feasible >= 5, "{feasible}");
    assert!(disagree * 20 < trials, "{disagree}/{trials}");
}

fn chain_points(cols: &[Vec<Q>]) -> Vec<ChainPoint> {
    (0..cols[0].len())
        .map(|p| ChainPoint { label: p.to_string(), weights: cols.iter().map(|c| c[p].clone()).collect() })
        .collect()
}

#[test]
fn chain_of_two_matches_eleven() {
    let mut rng = StdRng::seed_from_u64(9);
    let mut seen = [0usize; 2];
    let mut done = 0;
    while done < 500 {
        let a: Vec<Q> = (0..3).map(|_| q(rng.gen_range(0..12), 12)).collect();
        let b: Vec<Q> = (0..3).map(|_| q(rng.gen_range(0..12), 12)).collect();
        let total = a.iter().chain(&b).fold(Q::zero(), |x, y| x + y);
        if !total.is_integer() {
            continue;
        }
        let sum: i64 = total.to_integer().try_into().unwrap();
        let d1 = rng.gen_range(-4..=2);
        let d2 = -sum - d1;
        let pts: Vec<Point11> = (0..3).map(|i| Point11 { label: i.to_string(), alpha: a[i].clone(), alpha_prime: b[i].clone() }).collect();
        for strict in [false, true] {
            let eleven = check_11(&pts, strict).unwrap().solutions.iter().any(|s| s.degrees == vec![d1, d2]);
            let chain = check_chain(&ChainProblem { points: chain_points(&[a.clone(), b.clone()]), degrees: vec![d1, d2] }, strict).unwrap().exists;
            assert_eq!(eleven, chain);
            seen[eleven as usize] += 1;
        }
        done += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn chain_of_three_matches_three_step_check() {
    let mut rng = StdRng::seed_from_u64(10);
    let mut seen = [0usize; 2];
    for _ in 0..1000 {
        let mut cols: Vec<Vec<Q>> = (0..3).map(|_| (0..3).map(|_| q(rng.gen_range(-5..6), 12)).collect()).collect();
        let total = cols.iter().flatten().fold(Q::zero(), |x, y| x + y);
        cols[0][0] -= total;
        let pts = chain_points(&cols);
        if pts.iter().any(|p| {
            let hi = p.weights.iter().max().unwrap();
            let lo = p.weights.iter().min().unwrap();
            hi - lo >= Q::from_integer(1.into())
        }) {
            continue;
        }
        for strict in [false, true] {
            let found = check_111(&pts, None, strict).unwrap();
            let d1 = rng.gen_range(-3..=3);
            let d2 = rng.gen_range(-3..=3);
            let mut trials = vec![[d1, d2, -d1 - d2]];
            trials.extend(found.solutions.iter().map(|s| [s.degrees[0], s.degrees[1], s.degrees[2]]));
            for ds in trials {
                let a = check_111(&pts, Some(ds), strict).unwrap().exists;
                let b = check_chain(&ChainProblem { points: pts.clone(), degrees: ds.to_vec() }, strict).unwrap().exists;
                assert_eq!(a, b);
                assert_eq!(a, found.solutions.iter().any(|s| s.degrees == ds.to_vec()));
                seen[a as usize] += 1;
            }
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn three_step_examples() {
    // alpha_1 = 0 < alpha_2 < alpha_3 at every point: l_1 = l_2 = 3
    let cols = vec![vec![q(-1, 4); 3], vec![q(0, 1); 3], vec![q(1, 4); 3]];
    let pts = chain_points(&cols);
    let rep = check_111(&pts, None, false).unwrap();
    assert!(rep.exists);
    for s in &rep.solutions {
        assert_eq!(s.degrees.iter().sum::<i64>(), 0);
        assert!(check_111(&pts, Some([s.degrees[0], s.degrees[1], s.degrees[2]]), false).unwrap().exists);
    }
    assert_eq!(rep.solutions.iter().map(|s| s.degrees.clone()).collect::<Vec<_>>(), vec![vec![1, 0, -1]]);

    // weights pushing the lower end of the chain above its upper end
    let cols = vec![vec![q(-1, 2); 3], vec![q(1, 4); 3], vec![q(1, 4); 3]];
    let rep = check_111(&chain_points(&cols), None, false).unwrap();
    assert!(!rep.exists);
    assert!(rep.solutions.is_empty());
}

#[test]
fn incompatible_with_biswas() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..2000 {
        let xs: Vec<Q> = (0..3).map(|_| q(rng.gen_range(-49..=49), 100)).collect();
        let pts: Vec<Point11> = xs.iter().enumerate().map(|(i, x)| Point11 { label: i.to_string(), alpha: x.clone(), alpha_prime: -x.clone() }).collect();
        let pairs: Vec<(String, Q, Q)> = xs.iter().enumerate().map(|(i, x)| {
            let (a, b) = if *x >= -x.clone() { (x.clone(), -x.clone()) } else { (-x.clone(), x.clone()) };
            (i.to_string(), a, b)
        }).collect();
        let both = check_11(&pts, true).unwrap().exists && biswas_check(&pairs).unwrap();
        assert!(!both, "{xs:?}");
    }
}
