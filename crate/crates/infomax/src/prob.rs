//! Exact finite-alphabet probability calculus.
//!
//! Everything downstream (the chase game, the mean-field code, the filters,
//! the spiking network) is validated against the quantities computed here:
//! entropies, mutual information, its first variation, and a brute-force
//! channel search. All information quantities are in nats.
//!
//! ```
//! use infomax::prob::{FiniteDistribution, entropy};
//!
//! let d = FiniteDistribution::uniform(2);
//! assert!((entropy(&d) - std::f64::consts::LN_2).abs() < 1e-12);
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Probability floor: logs evaluate on `max(p, EPS)` so that interior-point
/// formulas never see `-inf`.
pub const EPS: f64 = 1e-9;

/// Absolute tolerance for normalization checks.
pub const NORM_TOL: f64 = 1e-12;

/// A probability vector over a finite alphabet `{0, .., K-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct FiniteDistribution {
    probs: Vec<f64>,
}

impl FiniteDistribution {
    /// Validates non-negativity and normalization (within `1e-12`).
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution("empty alphabet".into()));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::InvalidDistribution(format!("bad entry {p}")));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidDistribution(format!(
                "entries sum to {sum}, expected 1"
            )));
        }
        Ok(Self { probs })
    }

    /// Normalizes arbitrary non-negative weights.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let sum: f64 = weights.iter().sum();
        if !(sum > 0.0) || weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidDistribution("weights must be >= 0 with positive sum".into()));
        }
        Self::new(weights.iter().map(|w| w / sum).collect())
    }

    pub fn uniform(k: usize) -> Self {
        Self {
            probs: vec![1.0 / k as f64; k],
        }
    }

    pub fn point_mass(k: usize, at: usize) -> Self {
        let mut probs = vec![0.0; k];
        probs[at] = 1.0;
        Self { probs }
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // K >= 1 by construction
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, i: usize) -> f64 {
        self.probs[i]
    }

    /// Inverse-CDF sampling with a uniform draw in `[0, 1)`.
    pub fn sample<R: rand::Rng>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.random();
        let mut acc = 0.0;
        for (i, p) in self.probs.iter().enumerate() {
            acc += p;
            if u < acc {
                return i;
            }
        }
        self.probs.len() - 1
    }
}

impl TryFrom<Vec<f64>> for FiniteDistribution {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<FiniteDistribution> for Vec<f64> {
    fn from(d: FiniteDistribution) -> Self {
        d.probs
    }
}

/// A row-stochastic table: one [`FiniteDistribution`] over a shared outcome
/// alphabet per condition symbol.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct ConditionalTable {
    rows: Vec<FiniteDistribution>,
}

impl ConditionalTable {
    pub fn new(rows: Vec<FiniteDistribution>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDistribution("table has no rows".into()));
        }
        let k = rows[0].len();
        if let Some(r) = rows.iter().find(|r| r.len() != k) {
            return Err(Error::AlphabetMismatch {
                expected: k,
                got: r.len(),
            });
        }
        Ok(Self { rows })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(rows.into_iter().map(FiniteDistribution::new).collect::<Result<_>>()?)
    }

    pub fn n_conditions(&self) -> usize {
        self.rows.len()
    }

    pub fn n_outcomes(&self) -> usize {
        self.rows[0].len()
    }

    pub fn row(&self, x: usize) -> &FiniteDistribution {
        &self.rows[x]
    }

    pub fn rows(&self) -> &[FiniteDistribution] {
        &self.rows
    }
}

impl TryFrom<Vec<Vec<f64>>> for ConditionalTable {
    type Error = Error;
    fn try_from(v: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_rows(v)
    }
}

impl From<ConditionalTable> for Vec<Vec<f64>> {
    fn from(t: ConditionalTable) -> Self {
        t.rows.into_iter().map(Vec::from).collect()
    }
}

/// A tangent perturbation of a [`ConditionalTable`]: per-row deltas summing
/// to zero, so `p + delta` stays row-normalized.
#[derive(Debug, Clone)]
pub struct TablePerturbation {
    deltas: Vec<Vec<f64>>,
}

impl TablePerturbation {
    pub fn new(deltas: Vec<Vec<f64>>) -> Result<Self> {
        for (row, d) in deltas.iter().enumerate() {
            let sum: f64 = d.iter().sum();
            if sum.abs() > NORM_TOL {
                return Err(Error::UnbalancedPerturbation { row, sum });
            }
        }
        Ok(Self { deltas })
    }

    pub fn deltas(&self) -> &[Vec<f64>] {
        &self.deltas
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            deltas: self
                .deltas
                .iter()
                .map(|row| row.iter().map(|d| d * c).collect())
                .collect(),
        }
    }
}

fn xlogx(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        p * p.max(EPS).ln()
    }
}

/// Shannon entropy `-sum p log p` in nats, with `0 log 0 := 0`.
pub fn entropy(d: &FiniteDistribution) -> f64 {
    -d.probs().iter().map(|&p| xlogx(p)).sum::<f64>()
}

/// The output marginal `p(y) = sum_x p(x) p(y|x)`.
pub fn marginal(px: &FiniteDistribution, pyx: &ConditionalTable) -> Result<FiniteDistribution> {
    if px.len() != pyx.n_conditions() {
        return Err(Error::AlphabetMismatch {
            expected: px.len(),
            got: pyx.n_conditions(),
        });
    }
    let ny = pyx.n_outcomes();
    let mut py = vec![0.0; ny];
    for (x, row) in pyx.rows().iter().enumerate() {
        let w = px.prob(x);
        for (y, p) in row.probs().iter().enumerate() {
            py[y] += w * p;
        }
    }
    // renormalize away accumulated rounding so the invariant check passes
    let sum: f64 = py.iter().sum();
    FiniteDistribution::new(py.iter().map(|p| p / sum).collect())
}

/// Mutual information `I(x;y) = H(y) - H(y|x)` in nats.
pub fn mutual_information(px: &FiniteDistribution, pyx: &ConditionalTable) -> Result<f64> {
    let py = marginal(px, pyx)?;
    let hy = entropy(&py);
    let hyx: f64 = pyx
        .rows()
        .iter()
        .enumerate()
        .map(|(x, row)| px.prob(x) * entropy(row))
        .sum();
    Ok(hy - hyx)
}

/// First variation of the mutual information under a tangent perturbation of
/// the channel:
/// `dI = E_{x~p(x)} sum_y log(p(y|x)/p(y)) dp(y|x)`.
///
/// Linear in `dp`. Errors when some `p(y)` is (numerically) zero while the
/// perturbation touches that outcome, since the log-ratio is singular there.
pub fn mi_variation(
    px: &FiniteDistribution,
    pyx: &ConditionalTable,
    dp: &TablePerturbation,
) -> Result<f64> {
    if dp.deltas().len() != pyx.n_conditions() {
        return Err(Error::AlphabetMismatch {
            expected: pyx.n_conditions(),
            got: dp.deltas().len(),
        });
    }
    let py = marginal(px, pyx)?;
    for y in 0..py.len() {
        if py.prob(y) < EPS && dp.deltas().iter().any(|row| row[y].abs() > 0.0) {
            return Err(Error::ZeroMarginal { outcome: y });
        }
    }
    let mut total = 0.0;
    for (x, row) in pyx.rows().iter().enumerate() {
        let w = px.prob(x);
        for (y, &d) in dp.deltas()[x].iter().enumerate() {
            if d != 0.0 {
                let ratio = row.prob(y).max(EPS) / py.prob(y).max(EPS);
                total += w * ratio.ln() * d;
            }
        }
    }
    Ok(total)
}

/// Brute-force size cap for [`capacity_oracle`].
pub const CAPACITY_CAP: usize = 6;

/// Maximal `I(x;y)` over all row-stochastic channels `p(y|x)`, found by
/// restarted per-row grid refinement: each row hill-climbs over mass moves of
/// step `h`, and `h` is halved until a full sweep improves by less than 1e-6.
///
/// Deliberately shares no code with the iterative optimizers it validates.
pub fn capacity_oracle(
    px: &FiniteDistribution,
    y_alphabet_size: usize,
) -> Result<(f64, ConditionalTable)> {
    let nx = px.len();
    let ny = y_alphabet_size;
    if nx > CAPACITY_CAP || ny > CAPACITY_CAP {
        return Err(Error::SizeCap(format!(
            "capacity_oracle limited to {CAPACITY_CAP}x{CAPACITY_CAP}, got {nx}x{ny}"
        )));
    }
    if ny == 0 {
        return Err(Error::InvalidDistribution("empty output alphabet".into()));
    }

    let mi_of = |rows: &[Vec<f64>]| -> f64 {
        let table = ConditionalTable::from_rows(rows.to_vec()).expect("rows stay stochastic");
        mutual_information(px, &table).expect("shapes fixed")
    };

    let mut best_val = f64::NEG_INFINITY;
    let mut best_rows: Vec<Vec<f64>> = Vec::new();

    // Restarts: the cyclic identity-like assignments plus uniform rows.
    let mut starts: Vec<Vec<Vec<f64>>> = Vec::new();
    for shift in 0..ny {
        let mut rows = Vec::with_capacity(nx);
        for x in 0..nx {
            let mut row = vec![0.0; ny];
            row[(x + shift) % ny] = 1.0;
            rows.push(row);
        }
        starts.push(rows);
    }
    starts.push(vec![vec![1.0 / ny as f64; ny]; nx]);

    for mut rows in starts {
        let mut h = 0.25;
        let mut current = mi_of(&rows);
        while h >= 1e-6 {
            loop {
                let mut improved = false;
                for x in 0..nx {
                    loop {
                        let mut best_move: Option<(usize, usize, f64)> = None;
                        for from in 0..ny {
                            if rows[x][from] < h {
                                continue;
                            }
                            for to in 0..ny {
                                if to == from {
                                    continue;
                                }
                                rows[x][from] -= h;
                                rows[x][to] += h;
                                let val = mi_of(&rows);
                                rows[x][from] += h;
                                rows[x][to] -= h;
                                if val > current + 1e-12
                                    && best_move.map_or(true, |(_, _, v)| val > v)
                                {
                                    best_move = Some((from, to, val));
                                }
                            }
                        }
                        match best_move {
                            Some((from, to, val)) => {
                                rows[x][from] -= h;
                                rows[x][to] += h;
                                current = val;
                                improved = true;
                            }
                            None => break,
                        }
                    }
                }
                if !improved {
                    break;
                }
            }
            h /= 2.0;
        }
        if current > best_val + 1e-6 {
            best_val = current;
            best_rows = rows;
        }
    }

    Ok((best_val, ConditionalTable::from_rows(best_rows)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_uniform_binary() {
        let d = FiniteDistribution::uniform(2);
        assert!((entropy(&d) - std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn entropy_point_mass() {
        let d = FiniteDistribution::point_mass(5, 2);
        assert_eq!(entropy(&d), 0.0);
    }

    #[test]
    fn entropy_quarter_three_quarters() {
        // frozen from an independent high-precision evaluation of -sum p ln p
        let d = FiniteDistribution::new(vec![0.25, 0.75]).unwrap();
        assert!((entropy(&d) - 0.5623351446188083).abs() < 1e-12);
    }

    #[test]
    fn mi_zero_for_identical_rows() {
        let px = FiniteDistribution::uniform(3);
        let pyx =
            ConditionalTable::from_rows(vec![vec![0.2, 0.8]; 3]).unwrap();
        assert!(mutual_information(&px, &pyx).unwrap().abs() < 1e-12);
    }

    #[test]
    fn mi_identity_channel() {
        let px = FiniteDistribution::uniform(4);
        let rows = (0..4)
            .map(|x| {
                let mut r = vec![0.0; 4];
                r[x] = 1.0;
                r
            })
            .collect();
        let pyx = ConditionalTable::from_rows(rows).unwrap();
        let mi = mutual_information(&px, &pyx).unwrap();
        assert!((mi - 4.0_f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn mi_binary_symmetric_channel() {
        // log 2 - H_b(0.1), cross-checked by the joint-table oracle below
        let px = FiniteDistribution::uniform(2);
        let pyx = ConditionalTable::from_rows(vec![vec![0.9, 0.1], vec![0.1, 0.9]]).unwrap();
        let mi = mutual_information(&px, &pyx).unwrap();
        assert!((mi - 0.3680642071684971).abs() < 1e-9);
        assert!((mi - joint_mi_oracle(&px, &pyx)).abs() < 1e-12);
    }

    #[test]
    fn mi_alphabet_mismatch_errors() {
        let px = FiniteDistribution::uniform(3);
        let pyx = ConditionalTable::from_rows(vec![vec![0.5, 0.5]; 2]).unwrap();
        assert!(mutual_information(&px, &pyx).is_err());
    }

    /// Independent route: I = sum_{x,y} p(x,y) log( p(x,y) / (p(x)p(y)) ).
    pub(crate) fn joint_mi_oracle(px: &FiniteDistribution, pyx: &ConditionalTable) -> f64 {
        let py = marginal(px, pyx).unwrap();
        let mut mi = 0.0;
        for (x, row) in pyx.rows().iter().enumerate() {
            for y in 0..row.len() {
                let pxy = px.prob(x) * row.prob(y);
                if pxy > 0.0 {
                    mi += pxy * (pxy / (px.prob(x) * py.prob(y))).ln();
                }
            }
        }
        mi
    }

    #[test]
    fn variation_zero_for_null_perturbation() {
        let px = FiniteDistribution::uniform(2);
        let pyx = ConditionalTable::from_rows(vec![vec![0.7, 0.3], vec![0.4, 0.6]]).unwrap();
        let dp = TablePerturbation::new(vec![vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(mi_variation(&px, &pyx, &dp).unwrap(), 0.0);
    }

    #[test]
    fn variation_is_linear_in_dp() {
        let px = FiniteDistribution::new(vec![0.3, 0.7]).unwrap();
        let pyx = ConditionalTable::from_rows(vec![vec![0.6, 0.4], vec![0.2, 0.8]]).unwrap();
        let dp = TablePerturbation::new(vec![vec![1e-4, -1e-4], vec![-2e-4, 2e-4]]).unwrap();
        let v1 = mi_variation(&px, &pyx, &dp).unwrap();
        let v3 = mi_variation(&px, &pyx, &dp.scale(3.0)).unwrap();
        assert!((v3 - 3.0 * v1).abs() < 1e-15);
    }

    #[test]
    fn variation_matches_finite_difference_3x3() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let (px, pyx) = crate::testutil::random_instance(&mut rng, 3, 3);
        let dp = crate::testutil::random_perturbation(&mut rng, 3, 3, 1e-5);
        let analytic = mi_variation(&px, &pyx, &dp).unwrap();
        let numeric = crate::testutil::central_difference_mi(&px, &pyx, &dp);
        let denom = numeric.abs().max(1e-10);
        assert!(
            (analytic - numeric).abs() / denom < 1e-4,
            "analytic={analytic} numeric={numeric}"
        );
    }

    #[test]
    fn capacity_binary_uniform_is_log2() {
        let px = FiniteDistribution::uniform(2);
        let (c, table) = capacity_oracle(&px, 2).unwrap();
        assert!((c - std::f64::consts::LN_2).abs() < 1e-6);
        // maximizer is deterministic
        for row in table.rows() {
            assert!(row.probs().iter().any(|&p| p > 1.0 - 1e-6));
        }
    }

    #[test]
    fn capacity_single_output_is_zero() {
        let px = FiniteDistribution::new(vec![0.2, 0.5, 0.3]).unwrap();
        let (c, _) = capacity_oracle(&px, 1).unwrap();
        assert!(c.abs() < 1e-9);
    }

    #[test]
    fn capacity_size_cap_enforced() {
        let px = FiniteDistribution::uniform(7);
        assert!(capacity_oracle(&px, 2).is_err());
    }

    #[test]
    fn capacity_3x2_matches_deterministic_enumeration() {
        // The maximum over channels of I is attained at a deterministic table
        // (I is convex in p(y|x)), so enumerating all ny^nx maps is an exact
        // independent oracle.
        let px = FiniteDistribution::uniform(3);
        let (c, _) = capacity_oracle(&px, 2).unwrap();
        let mut best = f64::NEG_INFINITY;
        for assign in 0..(2usize.pow(3)) {
            let rows: Vec<Vec<f64>> = (0..3)
                .map(|x| {
                    let mut r = vec![0.0; 2];
                    r[(assign >> x) & 1] = 1.0;
                    r
                })
                .collect();
            let t = ConditionalTable::from_rows(rows).unwrap();
            best = best.max(mutual_information(&px, &t).unwrap());
        }
        assert!((c - best).abs() < 1e-3, "refined={c} enumerated={best}");
    }
}
