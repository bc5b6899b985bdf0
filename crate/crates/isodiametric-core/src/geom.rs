//! Dimension-generic scalar geometry on the unit sphere.
//!
//! Everything here is a pure function of its inputs: spherical-cap measures
//! and their inverse, ball volumes, the law-of-cosines chord, the clearance
//! angle `psi` used by the diameter argument of the nearly-optimal
//! constructions, and the explicit stability constant `C(n)`.
//!
//! Cap areas are computed through the exact antiderivative of `sin^(n-2)`
//! (closed forms for n = 2, 3, a stable three-term recurrence above), which
//! keeps the evaluation O(n) and lets the corpus runs stay cheap. A composite
//! Gauss-Legendre quadrature of the same integrand is kept as an independent
//! route ([`cap_area_quadrature`]) and the two are required to agree to
//! 1e-12 in the test suite.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Smallest supported ambient dimension.
pub const MIN_DIMENSION: usize = 2;
/// Largest supported ambient dimension. All phenomena of interest are visible
/// by n = 5; capping at 8 keeps every quadrature and Monte Carlo budget small.
pub const MAX_DIMENSION: usize = 8;

/// Ambient dimension n with 2 <= n <= 8.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Dimension(usize);

impl Dimension {
    pub fn new(n: usize) -> Result<Self> {
        if (MIN_DIMENSION..=MAX_DIMENSION).contains(&n) {
            Ok(Dimension(n))
        } else {
            Err(Error::DimensionOutOfRange(n, MIN_DIMENSION, MAX_DIMENSION))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// The conjugate exponent n' = n/(n-1).
    pub fn conjugate_exponent(self) -> f64 {
        self.0 as f64 / (self.0 as f64 - 1.0)
    }
}

impl TryFrom<usize> for Dimension {
    type Error = Error;
    fn try_from(n: usize) -> Result<Self> {
        Dimension::new(n)
    }
}

impl From<Dimension> for usize {
    fn from(d: Dimension) -> usize {
        d.0
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Geodesic radius of a spherical cap, in radians, in [0, pi].
///
/// Values outside the range are rejected by [`CapAngle::new`]; clamping only
/// happens through the explicit [`CapAngle::clamped`] constructor.
#[derive(Clone, Copy, PartialEq, PartialOrd, Debug)]
pub struct CapAngle(f64);

impl CapAngle {
    pub const ZERO: CapAngle = CapAngle(0.0);
    pub const FULL: CapAngle = CapAngle(PI);

    pub fn new(radians: f64) -> Result<Self> {
        if (0.0..=PI).contains(&radians) {
            Ok(CapAngle(radians))
        } else {
            Err(Error::AngleOutOfRange(radians))
        }
    }

    /// Explicitly clamp a raw value into [0, pi].
    pub fn clamped(radians: f64) -> Self {
        CapAngle(radians.clamp(0.0, PI))
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }
}

/// arccos with the argument clamped to [-1, 1]. A clamp larger than 1e-9
/// indicates a logic error upstream and is logged rather than hidden.
pub(crate) fn safe_acos(x: f64) -> f64 {
    if x > 1.0 + 1e-9 || x < -1.0 - 1e-9 {
        log::warn!("acos argument {x} clamped by {:e}", (x.abs() - 1.0));
    }
    x.clamp(-1.0, 1.0).acos()
}

/// Volume of the unit ball in R^n for 1 <= n <= 8, via the exact recursion
/// V_n = V_{n-2} * 2*pi / n with V_1 = 2 and V_2 = pi.
pub fn unit_ball_volume(n: usize) -> Result<f64> {
    if n == 0 || n > MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange(n, 1, MAX_DIMENSION));
    }
    let mut v = if n % 2 == 0 { PI } else { 2.0 };
    let mut k = if n % 2 == 0 { 2 } else { 1 };
    while k < n {
        k += 2;
        v *= 2.0 * PI / k as f64;
    }
    Ok(v)
}

/// Surface measure H^{n-1}(S^{n-1}) of the unit sphere in R^n, equal to
/// n * |B^n|. For n = 1 this is the counting measure of two points.
pub fn sphere_area(n: usize) -> Result<f64> {
    Ok(n as f64 * unit_ball_volume(n)?)
}

/// Measure of the (n-2)-sphere of slice directions, i.e. H^{n-2}(S^{n-2});
/// the constant in front of the `sin^(n-2)` cap integrand.
fn slice_sphere_area(n: usize) -> f64 {
    // n >= 2, so n-1 >= 1 is always a valid sphere dimension.
    sphere_area(n - 1).expect("n-1 in range")
}

/// Antiderivative I_k(a) = \int_0^a sin^k(x) dx via the three-term
/// recurrence I_m = ((m-1) I_{m-2} - cos(a) sin^{m-1}(a)) / m.
pub(crate) fn sin_power_integral(k: usize, alpha: f64) -> f64 {
    let (s, c) = alpha.sin_cos();
    if k == 0 {
        return alpha;
    }
    if k == 1 {
        return 1.0 - c;
    }
    let mut i_even = alpha; // I_0
    let mut i_odd = 1.0 - c; // I_1
    for m in 2..=k {
        let prev = if m % 2 == 0 { i_even } else { i_odd };
        let next = ((m as f64 - 1.0) * prev - c * s.powi(m as i32 - 1)) / m as f64;
        if m % 2 == 0 {
            i_even = next;
        } else {
            i_odd = next;
        }
    }
    if k % 2 == 0 {
        i_even
    } else {
        i_odd
    }
}

/// H^{n-1} measure of the spherical cap of geodesic radius `alpha` on the
/// unit sphere S^{n-1} in R^n.
///
/// Endpoints are exact: 0 at alpha = 0 and the full sphere area at alpha = pi.
pub fn cap_area(n: Dimension, alpha: CapAngle) -> f64 {
    cap_area_raw(n.get(), alpha.radians())
}

/// Unchecked-core of [`cap_area`]; `alpha` must already lie in [0, pi].
#[inline]
pub(crate) fn cap_area_raw(n: usize, alpha: f64) -> f64 {
    if alpha <= 0.0 {
        return 0.0;
    }
    if alpha >= PI {
        return sphere_area(n).expect("dimension validated");
    }
    match n {
        2 => 2.0 * alpha,
        3 => 2.0 * PI * (1.0 - alpha.cos()),
        _ => slice_sphere_area(n) * sin_power_integral(n - 2, alpha),
    }
}

/// Cap measure by composite Gauss-Legendre quadrature of
/// `s_{n-2} * \int_0^alpha sin^(n-2)`, 64 nodes per panel of length <= pi/2.
///
/// This is the independent cross-check route for [`cap_area`]; the smooth
/// integrand makes the rule spectrally accurate.
pub fn cap_area_quadrature(n: Dimension, alpha: CapAngle) -> f64 {
    let a = alpha.radians();
    if a == 0.0 {
        return 0.0;
    }
    let k = (n.get() - 2) as i32;
    let panels = (a / (PI / 2.0)).ceil().max(1.0) as usize;
    let nodes = quad::gauss_legendre(64);
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a * p as f64 / panels as f64;
        let hi = a * (p + 1) as f64 / panels as f64;
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut acc = 0.0;
        for &(x, w) in nodes {
            let theta = mid + half * x;
            acc += w * theta.sin().powi(k);
        }
        total += acc * half;
    }
    slice_sphere_area(n.get()) * total
}

/// Inverse of [`cap_area`] in the angle argument, by bisection.
///
/// `area` must lie in [0, sphere_area(n)] (a slack of 1e-9 relative is
/// tolerated for roundoff in callers). The result round-trips through
/// [`cap_area`] to well below 1e-12 absolute.
pub fn inverse_cap_area(n: Dimension, area: f64) -> Result<CapAngle> {
    let full = sphere_area(n.get())?;
    let slack = 1e-9 * full;
    if !(area >= -slack && area <= full + slack) {
        return Err(Error::AreaOutOfRange(area, full));
    }
    let a = area.clamp(0.0, full);
    if a == 0.0 {
        return Ok(CapAngle::ZERO);
    }
    if a == full {
        return Ok(CapAngle::FULL);
    }
    let nd = n.get();
    let (mut lo, mut hi) = (0.0_f64, PI);
    // Bisection is robust here: the derivative of the cap measure degenerates
    // at both endpoints, which rules out plain Newton steps.
    for _ in 0..200 {
        if hi - lo <= 1e-14 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if cap_area_raw(nd, mid) < a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(CapAngle(0.5 * (lo + hi)))
}

/// Distance between two points at radii `r1`, `r2` whose directions are
/// separated by the angle `theta`:
/// sqrt(r1^2 + r2^2 - 2 r1 r2 cos theta), evaluated in the cancellation-free
/// form (r1-r2)^2 + 4 r1 r2 sin^2(theta/2).
pub fn chord(r1: f64, r2: f64, theta: CapAngle) -> Result<f64> {
    if r1 < 0.0 {
        return Err(Error::NegativeRadius(r1));
    }
    if r2 < 0.0 {
        return Err(Error::NegativeRadius(r2));
    }
    Ok(chord_raw(r1, r2, theta.radians()))
}

#[inline]
pub(crate) fn chord_raw(r1: f64, r2: f64, theta: f64) -> f64 {
    let s = (0.5 * theta).sin();
    ((r1 - r2) * (r1 - r2) + 4.0 * r1 * r2 * s * s).sqrt()
}

/// Geodesic radius `psi(s, t)` of the cap, centered at the antipode `-p`, cut
/// out of the sphere of radius `1 - eps + t` by the ball of radius 2 around
/// `(1 + eps - s) p`.
///
/// With a = 1 + eps - s and b = 1 - eps + t this is
/// arccos((4 - a^2 - b^2) / (2ab)); it vanishes at s = t and satisfies the
/// clearance bound `psi(s, t) <= pi * sqrt(t - s)`.
pub fn psi(s: f64, t: f64, eps: f64) -> Result<CapAngle> {
    if !(0.0 <= s && s <= t && t <= eps && eps < 4.0 / 9.0) {
        return Err(Error::PsiArguments { s, t, eps });
    }
    let a = 1.0 + eps - s;
    let b = 1.0 - eps + t;
    let x = (4.0 - a * a - b * b) / (2.0 * a * b);
    Ok(CapAngle(safe_acos(x)))
}

/// Explicit constants attached to a dimension: the quantitative isoperimetric
/// constant C0(n) = 181 n^3 / (2 - 2^(1/n'))^(3/2), the stability constant
/// C(n) = C0(n) + 1, the unit-ball volume one dimension down (the
/// Cauchy-formula normalizer), and the sphere area.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ConstantsTable {
    pub n: Dimension,
    /// Quantitative isoperimetric constant C0(n).
    pub c0: f64,
    /// Stability constant C(n) = C0(n) + 1.
    pub c: f64,
    /// |B^{n-1}|, the projection normalizer in the Cauchy formula.
    pub omega_prev: f64,
    /// H^{n-1}(S^{n-1}).
    pub sphere_area: f64,
}

impl ConstantsTable {
    pub fn for_dimension(n: Dimension) -> Self {
        let inv_conjugate = 1.0 / n.conjugate_exponent();
        let base: f64 = 2.0 - 2f64.powf(inv_conjugate);
        let c0 = 181.0 * (n.get() as f64).powi(3) / base.powf(1.5);
        ConstantsTable {
            n,
            c0,
            c: c0 + 1.0,
            omega_prev: unit_ball_volume(n.get() - 1).expect("n-1 valid"),
            sphere_area: sphere_area(n.get()).expect("n valid"),
        }
    }
}

pub(crate) mod quad {
    //! Gauss-Legendre nodes on [-1, 1], generated once by Newton iteration on
    //! the Legendre recurrence, plus a segment-integration helper.

    use std::sync::OnceLock;

    fn newton_nodes(order: usize) -> Vec<(f64, f64)> {
        let n = order;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            // Standard initial guess for the i-th root of P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            out.push((x, w));
        }
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        out
    }

    /// Value and derivative of the Legendre polynomial P_n at x.
    fn legendre(n: usize, x: f64) -> (f64, f64) {
        let mut p0 = 1.0_f64;
        let mut p1 = x;
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        (p1, d)
    }

    macro_rules! gl_cache {
        ($name:ident, $order:expr) => {
            fn $name() -> &'static [(f64, f64)] {
                static CACHE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
                CACHE.get_or_init(|| newton_nodes($order))
            }
        };
    }

    gl_cache!(gl4, 4);
    gl_cache!(gl8, 8);
    gl_cache!(gl16, 16);
    gl_cache!(gl64, 64);

    /// Cached nodes/weights for the orders used in this crate.
    pub fn gauss_legendre(order: usize) -> &'static [(f64, f64)] {
        match order {
            4 => gl4(),
            8 => gl8(),
            16 => gl16(),
            64 => gl64(),
            _ => panic!("unsupported Gauss-Legendre order {order}"),
        }
    }

    /// Integrate `f` over `[lo, hi]` with a single Gauss-Legendre rule.
    pub fn integrate_segment(f: &mut impl FnMut(f64) -> f64, lo: f64, hi: f64, order: usize) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut acc = 0.0;
        for &(x, w) in gauss_legendre(order) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }

    /// Integrate `f` over consecutive segments of a sorted breakpoint list.
    pub fn integrate_over_grid(grid: &[f64], order: usize, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mut total = 0.0;
        for w in grid.windows(2) {
            if w[1] > w[0] {
                total += integrate_segment(&mut f, w[0], w[1], order);
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TAU: f64 = 1e-12;

    #[test]
    fn ball_volumes_match_closed_forms() {
        assert!((unit_ball_volume(1).unwrap() - 2.0).abs() < TAU);
        assert!((unit_ball_volume(2).unwrap() - PI).abs() < TAU);
        assert!((unit_ball_volume(3).unwrap() - 4.0 * PI / 3.0).abs() < TAU);
        assert!((unit_ball_volume(4).unwrap() - PI * PI / 2.0).abs() < TAU);
        assert!((unit_ball_volume(5).unwrap() - 8.0 * PI * PI / 15.0).abs() < TAU);
        assert!(unit_ball_volume(0).is_err());
        assert!(unit_ball_volume(9).is_err());
    }

    #[test]
    fn ball_volume_dimension_four_vs_monte_carlo() {
        // Independent oracle: hit rate of the unit ball in [-1,1]^4.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(40404);
        let total = 400_000usize;
        let mut hits = 0usize;
        for _ in 0..total {
            let p: [f64; 4] = [
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ];
            if p.iter().map(|x| x * x).sum::<f64>() <= 1.0 {
                hits += 1;
            }
        }
        let frac = hits as f64 / total as f64;
        let est = frac * 16.0;
        let se = 16.0 * (frac * (1.0 - frac) / total as f64).sqrt();
        let exact = unit_ball_volume(4).unwrap();
        assert!(
            (est - exact).abs() <= 3.0 * se,
            "MC {est} vs exact {exact} (se {se})"
        );
    }

    #[test]
    fn cap_area_closed_forms() {
        let n2 = Dimension::new(2).unwrap();
        let n3 = Dimension::new(3).unwrap();
        assert!((cap_area(n2, CapAngle::FULL) - 2.0 * PI).abs() < TAU);
        assert!((cap_area(n3, CapAngle::new(PI / 2.0).unwrap()) - 2.0 * PI).abs() < TAU);
        // 2*pi*(1 - cos(pi/3)) = pi.
        assert!((cap_area(n3, CapAngle::new(PI / 3.0).unwrap()) - PI).abs() < TAU);
    }

    #[test]
    fn cap_area_endpoints_exact_all_dimensions() {
        for n in MIN_DIMENSION..=MAX_DIMENSION {
            let d = Dimension::new(n).unwrap();
            assert_eq!(cap_area(d, CapAngle::ZERO), 0.0);
            assert_eq!(cap_area(d, CapAngle::FULL), sphere_area(n).unwrap());
        }
    }

    #[test]
    fn cap_area_agrees_with_quadrature_route() {
        for n in MIN_DIMENSION..=MAX_DIMENSION {
            let d = Dimension::new(n).unwrap();
            for i in 1..200 {
                let alpha = CapAngle::new(PI * i as f64 / 200.0).unwrap();
                let exact = cap_area(d, alpha);
                let gl = cap_area_quadrature(d, alpha);
                assert!(
                    (exact - gl).abs() < 1e-12 * sphere_area(n).unwrap().max(1.0),
                    "n={n} alpha={} exact={exact} quad={gl}",
                    alpha.radians()
                );
            }
        }
    }

    #[test]
    fn cap_area_strictly_increasing() {
        for n in MIN_DIMENSION..=MAX_DIMENSION {
            let d = Dimension::new(n).unwrap();
            let mut prev = 0.0;
            for i in 1..=1000 {
                let a = cap_area(d, CapAngle::new(PI * i as f64 / 1000.0).unwrap());
                assert!(a > prev, "not increasing at n={n}, i={i}");
                prev = a;
            }
        }
    }

    #[test]
    fn inverse_cap_area_round_trips() {
        for n in MIN_DIMENSION..=MAX_DIMENSION {
            let d = Dimension::new(n).unwrap();
            for i in 0..=1000 {
                let alpha = PI * i as f64 / 1000.0;
                let a = cap_area(d, CapAngle::new(alpha).unwrap());
                let back = inverse_cap_area(d, a).unwrap().radians();
                assert!(
                    (back - alpha).abs() < 1e-10,
                    "n={n} alpha={alpha} back={back}"
                );
            }
        }
    }

    #[test]
    fn inverse_cap_area_examples_and_errors() {
        let n3 = Dimension::new(3).unwrap();
        let n2 = Dimension::new(2).unwrap();
        let hemi = inverse_cap_area(n3, 2.0 * PI).unwrap().radians();
        assert!((hemi - PI / 2.0).abs() < 1e-12);
        assert_eq!(inverse_cap_area(n2, 0.0).unwrap().radians(), 0.0);
        // Invert 2*pi*(1 - cos a) = pi  =>  a = pi/3.
        let third = inverse_cap_area(n3, PI).unwrap().radians();
        assert!((third - PI / 3.0).abs() < 1e-12);
        assert!(inverse_cap_area(n3, -1e-3).is_err());
        assert!(inverse_cap_area(n3, 4.0 * PI + 1e-3).is_err());
    }

    #[test]
    fn chord_examples() {
        assert!((chord(1.0, 1.0, CapAngle::FULL).unwrap() - 2.0).abs() < TAU);
        assert_eq!(chord(1.0, 1.0, CapAngle::ZERO).unwrap(), 0.0);
        // sqrt(1.1^2 + 1 - 0) = sqrt(2.21)
        let c = chord(1.1, 1.0, CapAngle::new(PI / 2.0).unwrap()).unwrap();
        assert!((c - 2.21_f64.sqrt()).abs() < TAU);
        assert!((c - 1.486_606_874_731_850_5).abs() < 1e-12);
        assert!(chord(-0.1, 1.0, CapAngle::ZERO).is_err());
    }

    #[test]
    fn chord_matches_trig_identity() {
        for i in 0..=100 {
            let theta = PI * i as f64 / 100.0;
            for &r in &[0.3, 1.0, 2.7] {
                let direct = chord(r, r, CapAngle::new(theta).unwrap()).unwrap();
                let identity = 2.0 * r * (theta / 2.0).sin();
                assert!((direct - identity).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn psi_vanishes_on_diagonal_and_validates() {
        for &(t, eps) in &[(0.0, 0.1), (0.05, 0.1), (0.3, 0.4)] {
            assert_eq!(psi(t, t, eps).unwrap().radians(), 0.0);
        }
        assert!(psi(0.2, 0.1, 0.3).is_err());
        assert!(psi(0.0, 0.1, 0.5).is_err());
        assert!(psi(-0.1, 0.1, 0.3).is_err());
        // Closed-form spot value: arccos(1.79/2.2).
        let v = psi(0.0, 0.1, 0.1).unwrap().radians();
        assert!((v - (1.79_f64 / 2.2).acos()).abs() < TAU);
        assert!((v - 0.619_382_9).abs() < 1e-6);
    }

    #[test]
    fn psi_clearance_bound_on_grids() {
        // psi(s,t) <= pi*sqrt(t-s) with 1e-12 slack, on 100x100 grids.
        for &eps in &[0.1, 0.2, 0.4] {
            for i in 0..100 {
                for j in i..100 {
                    let s = eps * i as f64 / 99.0;
                    let t = eps * j as f64 / 99.0;
                    let p = psi(s, t, eps).unwrap().radians();
                    assert!(
                        p <= PI * (t - s).sqrt() + 1e-12,
                        "eps={eps} s={s} t={t}: {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn constants_table_matches_paper_formula() {
        let t2 = ConstantsTable::for_dimension(Dimension::new(2).unwrap());
        let expect2 = 181.0 * 8.0 / (2.0 - 2f64.sqrt()).powf(1.5);
        assert!((t2.c0 - expect2).abs() < 1e-9 * expect2);
        assert!((t2.c - (t2.c0 + 1.0)).abs() == 0.0);
        assert!((t2.omega_prev - 2.0).abs() < TAU);

        let t3 = ConstantsTable::for_dimension(Dimension::new(3).unwrap());
        let expect3 = 181.0 * 27.0 / (2.0 - 2f64.powf(2.0 / 3.0)).powf(1.5);
        assert!((t3.c0 - expect3).abs() < 1e-9 * expect3);
        assert!((t3.omega_prev - PI).abs() < TAU);
        for n in MIN_DIMENSION..=MAX_DIMENSION {
            let t = ConstantsTable::for_dimension(Dimension::new(n).unwrap());
            assert!(t.c0 > 0.0);
            assert_eq!(t.c, t.c0 + 1.0);
            assert_eq!(t.omega_prev, unit_ball_volume(n - 1).unwrap());
        }
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // Order-8 rule must integrate x^15 exactly.
        let val = quad::integrate_segment(&mut |x| x.powi(15), 0.0, 1.0, 8);
        assert!((val - 1.0 / 16.0).abs() < 1e-14);
        let val64 = quad::integrate_segment(&mut |x| (5.0 * x).sin(), 0.0, 1.0, 64);
        assert!((val64 - (1.0 - 5f64.cos()) / 5.0).abs() < 1e-14);
    }
}
