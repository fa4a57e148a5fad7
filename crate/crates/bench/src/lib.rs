use hodge_core::{HodgeProblem1N, LabeledPoint1N, WeightedPoint1N, Q};

fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

/// Three points with identical weights on a rank `n` bundle, L = O(1), V = O.
pub fn flat_problem(n: usize) -> HodgeProblem1N {
    let den = 4 * (n as i64 + 1);
    let betas: Vec<Q> = (0..n as i64).map(|j| q(2 * j + 1 - n as i64, den)).collect();
    let points = ["0", "1", "inf"]
        .iter()
        .map(|l| LabeledPoint1N {
            label: l.to_string(),
            weights: WeightedPoint1N { alpha: q(-(n as i64) - 1, den), betas: betas.clone() },
        })
        .collect();
    HodgeProblem1N { n, points, deg_l: 1, deg_v: 0 }
}
