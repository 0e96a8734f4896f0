//! Euclidean projection onto the probability simplex and the projected
//! gradient solver for the mixture weights.

/// Closest point of `{p : p_i >= 0, sum p_i = 1}` to `y` (sort-based).
pub fn project_to_simplex(y: &[f64]) -> Vec<f64> {
    assert!(!y.is_empty(), "cannot project an empty vector");
    let mut sorted = y.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (idx, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let candidate = (cumulative - 1.0) / (idx + 1) as f64;
        if u - candidate > 0.0 {
            theta = candidate;
        }
    }
    y.iter().map(|&v| (v - theta).max(0.0)).collect()
}

/// Minimizes `p^T G p - 2 b^T p` over the simplex by projected gradient
/// descent with step `1 / L`, `L = 2 * (max row sum of |G|)`, starting from
/// `p`. Stops when no coordinate moves by more than `tol` or after
/// `max_iter` steps.
pub fn minimize_quadratic_on_simplex(
    gram: &[Vec<f64>],
    linear: &[f64],
    start: &[f64],
    tol: f64,
    max_iter: usize,
) -> Vec<f64> {
    let m = start.len();
    let lipschitz = 2.0
        * gram
            .iter()
            .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0_f64, f64::max);
    if lipschitz == 0.0 {
        return start.to_vec();
    }
    let step = 1.0 / lipschitz;
    let mut p = project_to_simplex(start);
    for _ in 0..max_iter {
        let trial: Vec<f64> = (0..m)
            .map(|i| {
                let gp: f64 = gram[i].iter().zip(&p).map(|(g, x)| g * x).sum();
                p[i] - step * 2.0 * (gp - linear[i])
            })
            .collect();
        let next = project_to_simplex(&trial);
        let moved = next
            .iter()
            .zip(&p)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0_f64, f64::max);
        p = next;
        if moved <= tol {
            break;
        }
    }
    p
}
