//! Score (softmax) parameterization of the simplex shared by the tabular
//! optimizers. Gradient steps act on unconstrained scores, so the
//! corresponding probabilities never leave the simplex.

use crate::prob::EPS;

/// `softmax(scores)`, max-shifted, floored at [`EPS`] and renormalized.
pub fn softmax(scores: &[f64]) -> Vec<f64> {
    let max = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut probs: Vec<f64> = scores.iter().map(|s| (s - max).exp()).collect();
    let sum: f64 = probs.iter().sum();
    for p in &mut probs {
        *p = (*p / sum).max(EPS);
    }
    let sum: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= sum;
    }
    probs
}

/// Pulls a probability-space direction `d` back to score space through the
/// softmax Jacobian: `(J d)_k = p_k (d_k - p . d)`.
pub fn score_gradient(probs: &[f64], d: &[f64]) -> Vec<f64> {
    let dot: f64 = probs.iter().zip(d).map(|(p, g)| p * g).sum();
    probs.iter().zip(d).map(|(p, g)| p * (g - dot)).collect()
}

/// One ascent step on scores along the probability-space direction `d`.
pub fn ascend(scores: &mut [f64], probs: &[f64], d: &[f64], eta: f64) {
    for (s, g) in scores.iter_mut().zip(score_gradient(probs, d)) {
        *s += eta * g;
    }
}

/// First-order change of the probabilities per unit learning rate for the
/// step taken by [`ascend`]: `J (J d)`. Tangent to the simplex.
pub fn realized_direction(probs: &[f64], d: &[f64]) -> Vec<f64> {
    let g = score_gradient(probs, d);
    score_gradient(probs, &g)
}

/// Scores whose softmax reproduces `probs` (up to the [`EPS`] floor).
pub fn scores_from_probs(probs: &[f64]) -> Vec<f64> {
    probs.iter().map(|p| p.max(EPS).ln()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn softmax_round_trips_probs() {
        let p = [0.2, 0.5, 0.3];
        let q = softmax(&scores_from_probs(&p));
        for (a, b) in p.iter().zip(&q) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn score_gradient_is_tangent() {
        let p = [0.1, 0.6, 0.3];
        let g = score_gradient(&p, &[1.0, -2.0, 0.5]);
        assert!(g.iter().sum::<f64>().abs() < 1e-15);
    }

    #[test]
    fn ascend_moves_probability_along_direction_binary() {
        // with two outcomes the realized direction has the sign of d
        let mut scores = scores_from_probs(&[0.3, 0.7]);
        let before = softmax(&scores);
        let d = [1.0, -1.0];
        let p = before.clone();
        ascend(&mut scores, &p, &d, 0.1);
        let after = softmax(&scores);
        assert!(after[0] > before[0]);
        assert!(after[1] < before[1]);
    }
}
