//! Independent oracles and random-instance generators used by the test
//! suites. Nothing here is called from the library's own algorithms, so the
//! checks stay two-sided.

use rand::Rng;

use crate::prob::{
    mutual_information, ConditionalTable, FiniteDistribution, TablePerturbation,
};

/// Random full-support input distribution and channel.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    nx: usize,
    ny: usize,
) -> (FiniteDistribution, ConditionalTable) {
    let px = random_distribution(rng, nx);
    let rows = (0..nx).map(|_| random_distribution(rng, ny).probs().to_vec());
    (px, ConditionalTable::from_rows(rows.collect()).unwrap())
}

/// Full-support distribution with entries bounded away from zero.
pub fn random_distribution<R: Rng>(rng: &mut R, k: usize) -> FiniteDistribution {
    let weights: Vec<f64> = (0..k).map(|_| 0.1 + rng.random::<f64>()).collect();
    FiniteDistribution::from_weights(&weights).unwrap()
}

/// Random tangent perturbation with max-norm `scale`.
pub fn random_perturbation<R: Rng>(
    rng: &mut R,
    nx: usize,
    ny: usize,
    scale: f64,
) -> TablePerturbation {
    let deltas = (0..nx)
        .map(|_| {
            let mut row: Vec<f64> = (0..ny).map(|_| rng.random::<f64>() - 0.5).collect();
            let mean = row.iter().sum::<f64>() / ny as f64;
            let max = row
                .iter()
                .map(|d| (d - mean).abs())
                .fold(f64::MIN_POSITIVE, f64::max);
            for d in &mut row {
                *d = (*d - mean) / max * scale;
            }
            // exact zero sum after scaling
            let resid = row.iter().sum::<f64>() / ny as f64;
            for d in &mut row {
                *d -= resid;
            }
            row
        })
        .collect();
    TablePerturbation::new(deltas).unwrap()
}

/// Best mutual information attainable by a factorized binary code
/// `p(y|x) = prod_i Bern(theta_i(x))` with every `theta_i(x)` restricted to
/// the grid `{0, step, 2*step, .., 1}`, found by exhaustive per-coordinate
/// scans (cyclic coordinate maximization over the full grid) from several
/// deterministic starts, run to a fixed point. Built directly on the joint
/// table and [`mutual_information`], independent of the optimizer's
/// parameterization.
pub fn best_factorized_mi_grid(
    px: &FiniteDistribution,
    n: usize,
    step: f64,
) -> f64 {
    let nx = px.len();
    let levels: Vec<f64> = {
        let k = (1.0 / step).round() as usize;
        (0..=k).map(|j| j as f64 * step).collect()
    };
    let mi_of = |params: &[Vec<f64>]| -> f64 {
        let rows: Vec<Vec<f64>> = (0..nx)
            .map(|x| {
                (0..(1usize << n))
                    .map(|m| {
                        (0..n)
                            .map(|i| {
                                let t = params[i][x];
                                if (m >> i) & 1 == 1 { t } else { 1.0 - t }
                            })
                            .product()
                    })
                    .collect()
            })
            .collect();
        let table = ConditionalTable::from_rows(rows).unwrap();
        mutual_information(px, &table).unwrap()
    };

    let mut best = f64::NEG_INFINITY;
    // deterministic starts: distinct grid patterns per neuron, plus flat 0.5
    let starts: Vec<Vec<Vec<f64>>> = (0..=n)
        .map(|shift| {
            (0..n)
                .map(|i| {
                    (0..nx)
                        .map(|x| {
                            if shift == n {
                                0.5
                            } else if (x >> ((i + shift) % n.max(1))) & 1 == 1 {
                                0.9
                            } else {
                                0.1
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    for start in starts {
        let mut params = start;
        let mut current = mi_of(&params);
        loop {
            let mut improved = false;
            for i in 0..n {
                for x in 0..nx {
                    let held = params[i][x];
                    let mut best_level = held;
                    let mut best_val = current;
                    for &lv in &levels {
                        params[i][x] = lv;
                        let v = mi_of(&params);
                        if v > best_val + 1e-15 {
                            best_val = v;
                            best_level = lv;
                        }
                    }
                    params[i][x] = best_level;
                    if best_val > current + 1e-15 {
                        current = best_val;
                        improved = true;
                    }
                }
            }
            if !improved {
                break;
            }
        }
        best = best.max(current);
    }
    best
}

/// Central finite difference `(I(p + dp) - I(p - dp)) / 2` of the mutual
/// information, the independent check on the analytic first variation.
pub fn central_difference_mi(
    px: &FiniteDistribution,
    pyx: &ConditionalTable,
    dp: &TablePerturbation,
) -> f64 {
    let shift = |sign: f64| -> f64 {
        let rows: Vec<Vec<f64>> = pyx
            .rows()
            .iter()
            .zip(dp.deltas())
            .map(|(row, d)| {
                let mut r: Vec<f64> = row
                    .probs()
                    .iter()
                    .zip(d)
                    .map(|(p, d)| p + sign * d)
                    .collect();
                // absorb rounding so the constructor's 1e-12 check holds
                let sum: f64 = r.iter().sum();
                for p in &mut r {
                    *p /= sum;
                }
                r
            })
            .collect();
        let table = ConditionalTable::from_rows(rows).unwrap();
        mutual_information(px, &table).unwrap()
    };
    (shift(1.0) - shift(-1.0)) / 2.0
}
