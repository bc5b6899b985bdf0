//! Deterministic scalar searches shared by the profile functionals.

/// Golden-section minimization of `f` on `[a, b]`.
///
/// Returns `(x_min, f_min)`. Deterministic: fixed iteration budget, no
/// stochastic restarts.
pub fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iters = 0;
    while (b - a).abs() > tol && iters < 200 {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        iters += 1;
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Golden-section maximization of `f` on `[a, b]`.
pub fn golden_max(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, neg) = golden_min(|x| -f(x), a, b, tol);
    (x, -neg)
}

/// Minimize a sampled function: coarse grid of `grid_points` over `[a, b]`,
/// then golden-section refinement bracketed by the best node's neighbors.
/// Ties on the grid are broken toward the smallest argument.
pub fn grid_then_golden_min(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    grid_points: usize,
    tol: f64,
) -> (f64, f64) {
    debug_assert!(grid_points >= 3);
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    let step = (b - a) / (grid_points - 1) as f64;
    for i in 0..grid_points {
        let v = f(a + step * i as f64);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    let lo = a + step * best_i.saturating_sub(1) as f64;
    let hi = (a + step * (best_i + 1) as f64).min(b);
    let (x, v) = golden_min(&f, lo, hi, tol);
    if v < best_v {
        (x, v)
    } else {
        (a + step * best_i as f64, best_v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, v) = golden_min(|x| (x - 1.3) * (x - 1.3) + 2.0, -4.0, 4.0, 1e-12);
        assert!((x - 1.3).abs() < 1e-9);
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn grid_then_golden_handles_multimodal() {
        // Global minimum of cos(3x) + 0.1 x on [0, 4] is near x = pi/3-ish well.
        let f = |x: f64| (3.0 * x).cos() + 0.1 * x;
        let (x, v) = grid_then_golden_min(f, 0.0, 4.0, 129, 1e-10);
        // Reference by brute force.
        let mut best = (0.0, f64::INFINITY);
        for i in 0..400001 {
            let xx = 4.0 * i as f64 / 400000.0;
            let vv = f(xx);
            if vv < best.1 {
                best = (xx, vv);
            }
        }
        assert!((x - best.0).abs() < 1e-4);
        assert!((v - best.1).abs() < 1e-8);
    }
}
