//! Builders for nearly-optimal sets: the cap-function construction
//! `E[eps, f, g, p]`, its upper deficit bound, the three sharp families, the
//! ball-with-notch example, and regular Reuleaux polygons.
//!
//! The construction takes the unit ball, grows outward caps
//! `(1 + eps - t) K[p, f(t)]` around the north pole and removes inward caps
//! `(1 - eps + t) K[-p, g(t)]` around the south pole. When `g` is the
//! envelope `g(t) = max { f(s) + pi sqrt(t - s) : 0 <= s <= t }` the set has
//! diameter exactly 2, and its isodiametric deficit is bounded by
//! `(1/|E|) \int_0^eps cap(g(t)) - cap(f(t)) dt`.

use crate::geom::{self, quad, Dimension};
use crate::profile::RadialProfile;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Upper bound for admissible `eps`.
pub const EPS_LIMIT: f64 = 4.0 / 9.0;
/// Upper bound for the outward cap function `f`.
pub const F_LIMIT: f64 = PI / 8.0;

/// Relative radial gap used to encode the jump discontinuities of the
/// construction profile at r = 1 - eps and r = 1 within a piecewise-linear
/// angle function. Scaled by eps so it stays below the t-grid spacing; the
/// induced volume error is O(1e-6 * eps), far below every tolerance here.
const JUMP_GAP_REL: f64 = 1e-6;

/// Optional parameters describing which sharp family produced a pair.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct FamilyParams {
    pub rho: Option<f64>,
    pub c: Option<f64>,
    pub theta: Option<f64>,
    /// l = |log eps| of the generating (unshifted) family.
    pub log_eps: Option<f64>,
}

/// The data (eps, f, g) of the construction, sampled on a shared t-grid over
/// `[0, eps]` with linear interpolation between nodes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CapFunctionPair {
    eps: f64,
    t_grid: Vec<f64>,
    f: Vec<f64>,
    g: Vec<f64>,
    /// argmax s of the envelope at each node, when `g` was computed here.
    envelope_maximizer: Option<Vec<f64>>,
    pub family_params: Option<FamilyParams>,
}

impl CapFunctionPair {
    /// Validate and build a pair. Requires `0 < eps < 4/9`, `f` in
    /// `[0, pi/8]` (the right endpoint may touch pi/8, as the sharp n = 2
    /// family does), `g` in `[0, pi)` nondecreasing with `g >= f`.
    pub fn new(
        eps: f64,
        t_grid: Vec<f64>,
        f: Vec<f64>,
        g: Vec<f64>,
        family_params: Option<FamilyParams>,
    ) -> Result<Self> {
        if !(eps > 0.0 && eps < EPS_LIMIT) {
            return Err(Error::InvalidParameter(format!(
                "eps must lie in (0, 4/9), got {eps}"
            )));
        }
        if t_grid.len() < 2 || t_grid.len() != f.len() || t_grid.len() != g.len() {
            return Err(Error::InvalidParameter(
                "t_grid, f, g must share a length >= 2".into(),
            ));
        }
        if t_grid[0] != 0.0 || (t_grid[t_grid.len() - 1] - eps).abs() > 1e-12 * eps.max(1.0) {
            return Err(Error::InvalidParameter(
                "t_grid must span [0, eps]".into(),
            ));
        }
        for w in t_grid.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::InvalidParameter(
                    "t_grid must increase strictly".into(),
                ));
            }
        }
        for (i, &fv) in f.iter().enumerate() {
            if !(0.0..=F_LIMIT + 1e-12).contains(&fv) {
                return Err(Error::InvalidParameter(format!(
                    "f({}) = {fv} outside [0, pi/8]",
                    t_grid[i]
                )));
            }
        }
        let mut prev = 0.0_f64;
        for (i, &gv) in g.iter().enumerate() {
            if !(0.0..PI).contains(&gv) {
                return Err(Error::InvalidParameter(format!(
                    "g({}) = {gv} outside [0, pi)",
                    t_grid[i]
                )));
            }
            if gv < f[i] {
                return Err(Error::InvalidParameter(format!(
                    "g must dominate f, violated at t = {}",
                    t_grid[i]
                )));
            }
            if gv + 1e-12 < prev {
                return Err(Error::InvalidParameter(format!(
                    "g must be nondecreasing, violated at t = {}",
                    t_grid[i]
                )));
            }
            prev = gv;
        }
        Ok(CapFunctionPair {
            eps,
            t_grid,
            f,
            g,
            envelope_maximizer: None,
            family_params,
        })
    }

    #[inline]
    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn t_grid(&self) -> &[f64] {
        &self.t_grid
    }

    pub fn f_samples(&self) -> &[f64] {
        &self.f
    }

    pub fn g_samples(&self) -> &[f64] {
        &self.g
    }

    /// argmax s(t) of the envelope maximization, for diagnostics.
    pub fn envelope_maximizer(&self) -> Option<&[f64]> {
        self.envelope_maximizer.as_deref()
    }

    pub fn f_at(&self, t: f64) -> f64 {
        interp(&self.t_grid, &self.f, t)
    }

    pub fn g_at(&self, t: f64) -> f64 {
        interp(&self.t_grid, &self.g, t)
    }

    /// Largest gap g - f over the grid.
    pub fn max_gap(&self) -> f64 {
        self.g
            .iter()
            .zip(&self.f)
            .map(|(g, f)| g - f)
            .fold(0.0, f64::max)
    }
}

fn interp(grid: &[f64], vals: &[f64], t: f64) -> f64 {
    if t <= grid[0] {
        return vals[0];
    }
    if t >= grid[grid.len() - 1] {
        return vals[vals.len() - 1];
    }
    let i = grid.partition_point(|&x| x < t);
    let (g0, g1) = (grid[i - 1], grid[i]);
    let w = (t - g0) / (g1 - g0);
    vals[i - 1] * (1.0 - w) + vals[i] * w
}

/// The shared construction grid over `[0, eps]`: quadratically clustered at
/// t = 0 so that linear interpolation resolves the sqrt(t) behavior of the
/// envelope to the tolerances the diameter and deficit checks need.
pub fn construction_grid(eps: f64, nodes: usize) -> Vec<f64> {
    let m = nodes.max(64);
    (0..=m)
        .map(|i| {
            let u = i as f64 / m as f64;
            eps * u * u
        })
        .collect()
}

/// Discrete upper envelope `g(t) = max { f(s) + pi sqrt(t - s) : 0 <= s <= t }`
/// on the given grid. For each `t`, the maximization scans 512 uniform
/// s-candidates plus 64 extra candidates geometrically clustered at `s -> t`
/// (where the square-root slope blows up), plus the exact endpoints.
pub fn envelope_g(t_grid: &[f64], f: &[f64]) -> Result<Vec<f64>> {
    Ok(envelope_g_with_maximizer(t_grid, f)?.0)
}

/// Like [`envelope_g`] but also reports the maximizing `s` per node.
pub fn envelope_g_with_maximizer(t_grid: &[f64], f: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    if t_grid.is_empty() || t_grid.len() != f.len() {
        return Err(Error::InvalidParameter(
            "envelope needs a nonempty grid with matching samples".into(),
        ));
    }
    let mut g = Vec::with_capacity(t_grid.len());
    let mut arg = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let mut best = (f64::NEG_INFINITY, 0.0);
        let mut consider = |s: f64| {
            let val = interp(t_grid, f, s) + PI * (t - s).max(0.0).sqrt();
            if val > best.0 {
                best = (val, s);
            }
        };
        consider(0.0);
        consider(t);
        for j in 1..512 {
            consider(t * j as f64 / 512.0);
        }
        let mut delta = 0.75 * t;
        for _ in 0..64 {
            consider(t - delta);
            delta *= 0.75;
        }
        g.push(best.0);
        arg.push(best.1);
    }
    // The exact envelope is nondecreasing; guard the discrete one against
    // grid artifacts.
    for i in 1..g.len() {
        if g[i] < g[i - 1] {
            g[i] = g[i - 1];
        }
    }
    Ok((g, arg))
}

/// Build the profile of `E[eps, f, g, p]`:
/// v = pi inside `B_{1-eps}`, `pi - g(r - 1 + eps)` on the notch shell
/// `[1 - eps, 1]`, and `f(1 + eps - r)` on the outward shell `(1, 1 + eps]`.
/// The jump discontinuities at `1 - eps` and `1` are encoded with a 1e-9
/// radial gap.
pub fn build_profile(n: Dimension, pair: &CapFunctionPair) -> Result<RadialProfile> {
    let eps = pair.eps;
    let gap = eps * JUMP_GAP_REL;
    let inner_end = 1.0 - eps - gap;
    let mut grid = Vec::new();
    let mut v = Vec::new();

    // Solid ball region.
    let base = 512usize;
    for i in 0..=base {
        grid.push(inner_end * i as f64 / base as f64);
        v.push(PI);
    }
    // Notch shell: r = 1 - eps + t, angle pi - g(t).
    for (i, &t) in pair.t_grid.iter().enumerate() {
        grid.push(1.0 - eps + t);
        v.push((PI - pair.g[i]).max(0.0));
    }
    // Jump at r = 1 from pi - g(eps) down to f(eps).
    grid.push(1.0 + gap);
    v.push(pair.f_at(eps - gap));
    // Outward shell: r = 1 + eps - t for t descending below eps.
    for i in (0..pair.t_grid.len() - 1).rev() {
        grid.push(1.0 + eps - pair.t_grid[i]);
        v.push(pair.f[i]);
    }
    RadialProfile::new(n, grid, v)
}

/// The deficit upper bound `(1/vol) \int_0^eps cap(g) - cap(f) dt`, evaluated
/// with the same per-segment Gauss-Legendre rule as the profile volume so the
/// comparison with the measured deficit stays consistent to quadrature
/// precision.
pub fn deficit_upper_bound(n: Dimension, pair: &CapFunctionPair, vol: f64) -> Result<f64> {
    if !(vol > 0.0) {
        return Err(Error::ZeroVolume);
    }
    let nd = n.get();
    let mut total = 0.0;
    for i in 0..pair.t_grid.len() - 1 {
        let (t0, t1) = (pair.t_grid[i], pair.t_grid[i + 1]);
        let (f0, f1) = (pair.f[i], pair.f[i + 1]);
        let (g0, g1) = (pair.g[i], pair.g[i + 1]);
        let mut f = |t: f64| {
            let w = (t - t0) / (t1 - t0);
            let fv = f0 * (1.0 - w) + f1 * w;
            let gv = g0 * (1.0 - w) + g1 * w;
            geom::cap_area_raw(nd, gv) - geom::cap_area_raw(nd, fv)
        };
        total += quad::integrate_segment(&mut f, t0, t1, 8);
    }
    Ok(total / vol)
}

/// Sharp family for n = 2: `f(t) = pi t / (8 eps)` with the envelope `g`.
/// Requires `0 < eps < 1/16`.
pub fn family_n2(eps: f64) -> Result<CapFunctionPair> {
    if !(eps > 0.0 && eps < 1.0 / 16.0) {
        return Err(Error::InvalidParameter(format!(
            "family n2 needs eps in (0, 1/16), got {eps}"
        )));
    }
    let t_grid = construction_grid(eps, 2048);
    let f: Vec<f64> = t_grid.iter().map(|&t| PI * t / (8.0 * eps)).collect();
    let (g, arg) = envelope_g_with_maximizer(&t_grid, &f)?;
    let mut pair = CapFunctionPair::new(eps, t_grid, f, g, None)?;
    pair.envelope_maximizer = Some(arg);
    Ok(pair)
}

/// Sharp family for n >= 4: `f(0) = rho`, `f = 0` otherwise, so the envelope
/// is `g(t) = rho + pi sqrt(t)`. Requires `0 < eps < 4/9`, `0 < rho < pi/8`.
pub fn family_high(eps: f64, rho: f64) -> Result<CapFunctionPair> {
    if !(eps > 0.0 && eps < EPS_LIMIT) {
        return Err(Error::InvalidParameter(format!(
            "family high needs eps in (0, 4/9), got {eps}"
        )));
    }
    if !(rho > 0.0 && rho < F_LIMIT) {
        return Err(Error::InvalidParameter(format!(
            "family high needs rho in (0, pi/8), got {rho}"
        )));
    }
    let t_grid = construction_grid(eps, 2048);
    let mut f = vec![0.0; t_grid.len()];
    f[0] = rho;
    let (g, arg) = envelope_g_with_maximizer(&t_grid, &f)?;
    let mut pair = CapFunctionPair::new(
        eps,
        t_grid,
        f,
        g,
        Some(FamilyParams {
            rho: Some(rho),
            ..FamilyParams::default()
        }),
    )?;
    pair.envelope_maximizer = Some(arg);
    Ok(pair)
}

/// Unshifted n = 3 family data `f~(t) = c (t/eps)^l` with `l = |log eps|`,
/// sampled on `[0, eps]` together with its envelope. Used to derive the
/// shifted sharp family and by the diagnostic tests of its properties.
pub fn family_n3_unshifted(eps: f64, c: f64) -> Result<CapFunctionPair> {
    validate_n3(eps, c, 0.75)?;
    let l = -eps.ln();
    let t_grid = construction_grid(eps, 2048);
    let f: Vec<f64> = t_grid
        .iter()
        .map(|&t| {
            if t <= 0.0 {
                0.0
            } else {
                c * (l * (t / eps).ln()).exp()
            }
        })
        .collect();
    let (g, arg) = envelope_g_with_maximizer(&t_grid, &f)?;
    let mut pair = CapFunctionPair::new(
        eps,
        t_grid,
        f,
        g,
        Some(FamilyParams {
            c: Some(c),
            log_eps: Some(l),
            ..FamilyParams::default()
        }),
    )?;
    pair.envelope_maximizer = Some(arg);
    Ok(pair)
}

fn validate_n3(eps: f64, c: f64, theta: f64) -> Result<()> {
    if !(eps > 0.0 && eps < (-2.0_f64).exp()) {
        return Err(Error::InvalidParameter(format!(
            "family n3 needs eps in (0, e^-2), got {eps}"
        )));
    }
    if !(c > 0.0 && c < F_LIMIT) {
        return Err(Error::InvalidParameter(format!(
            "family n3 needs c in (0, pi/8), got {c}"
        )));
    }
    let lo = (-0.5_f64).exp();
    if !(theta > lo && theta < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "family n3 needs theta in (e^-1/2, 1), got {theta}"
        )));
    }
    Ok(())
}

/// Sharp family for n = 3: the shifted pair
/// `f(t) = f~(t + theta eps) = c ((t + theta eps)/eps)^l` on
/// `(0, (1 - theta) eps]`, with `g` the numerical envelope. Defaults used by
/// the experiments: `c = pi/16`, `theta = 0.7`.
pub fn family_n3(eps: f64, c: f64, theta: f64) -> Result<CapFunctionPair> {
    validate_n3(eps, c, theta)?;
    let l = -eps.ln();
    let shifted_eps = (1.0 - theta) * eps;
    let t_grid = construction_grid(shifted_eps, 2048);
    let f: Vec<f64> = t_grid
        .iter()
        .map(|&t| c * (l * ((t + theta * eps) / eps).ln()).exp())
        .collect();
    let (g, arg) = envelope_g_with_maximizer(&t_grid, &f)?;
    let mut pair = CapFunctionPair::new(
        shifted_eps,
        t_grid,
        f,
        g,
        Some(FamilyParams {
            c: Some(c),
            theta: Some(theta),
            log_eps: Some(l),
            ..FamilyParams::default()
        }),
    )?;
    pair.envelope_maximizer = Some(arg);
    Ok(pair)
}

pub const N3_DEFAULT_C: f64 = PI / 16.0;
pub const N3_DEFAULT_THETA: f64 = 0.7;

/// Profile of `B \ B_r(x)` with the notch ball centered at distance `offset`
/// from the origin along the negative axis (the cap-around-the-north-pole
/// encoding forces the notch to the south side). Requires strict containment
/// `0 < r < 1 - offset`.
pub fn ball_minus_ball(n: Dimension, r: f64, offset: f64) -> Result<RadialProfile> {
    if !(r > 0.0 && offset >= 0.0 && r < 1.0 - offset) {
        return Err(Error::InvalidParameter(format!(
            "ball_minus_ball needs 0 < r < 1 - offset, got r={r}, offset={offset}"
        )));
    }
    let d = offset;
    // Kept cap angle on the sphere of radius rr.
    let angle = |rr: f64| -> f64 {
        if rr <= 0.0 {
            return if d < r { 0.0 } else { PI };
        }
        if d < 1e-12 {
            return if rr < r { 0.0 } else { PI };
        }
        let q = (r * r - rr * rr - d * d) / (2.0 * rr * d);
        geom::safe_acos(q.clamp(-1.0, 1.0))
    };

    let inner_edge = (d - r).abs();
    let outer_edge = d + r;
    let mut grid: Vec<f64> = Vec::new();
    // Uniform base over [0, 1].
    let base = 768;
    for i in 0..=base {
        grid.push(i as f64 / base as f64);
    }
    // sqrt-kink resolution: quadratic clustering inward from both notch
    // edges plus a uniform fill across the notch.
    let zone = 0.45 * (outer_edge - inner_edge);
    let m = 768;
    for i in 0..=m {
        let off = zone * (i as f64 / m as f64).powi(2);
        if inner_edge > 1e-12 {
            grid.push(inner_edge + off);
        }
        grid.push(outer_edge - off);
    }
    for i in 0..=256 {
        grid.push(inner_edge + (outer_edge - inner_edge) * i as f64 / 256.0);
    }
    grid.push(inner_edge);
    grid.push(outer_edge);
    grid.retain(|&x| (0.0..=1.0).contains(&x));
    grid.push(0.0);
    grid.push(1.0);
    grid.sort_by(|a, b| a.total_cmp(b));
    grid.dedup_by(|a, b| (*a - *b).abs() < 1e-14);

    let v: Vec<f64> = grid.iter().map(|&rr| angle(rr)).collect();
    RadialProfile::new(n, grid, v)
}

/// One circular arc of a Reuleaux polygon: centered at a vertex, radius d,
/// sweeping from `start` to `end` (radians, end > start).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReuleauxArc {
    pub center: [f64; 2],
    pub start: f64,
    pub end: f64,
}

/// Regular Reuleaux polygon with an odd number k of arcs and width d.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReuleauxShape {
    pub k: usize,
    pub d: f64,
    pub arcs: Vec<ReuleauxArc>,
}

/// Regular Reuleaux k-gon of diameter `d`: arcs of radius `d` centered at the
/// vertices of a regular k-gon, each passing through the two vertices of the
/// opposite edge. Requires odd `k >= 3` and `d > 0`.
pub fn reuleaux(k: usize, d: f64) -> Result<ReuleauxShape> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "reuleaux needs odd k >= 3, got {k}"
        )));
    }
    if !(d > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "reuleaux needs d > 0, got {d}"
        )));
    }
    // Circumradius making opposite vertices lie at distance d.
    let circum = d / (2.0 * (PI / (2.0 * k as f64)).cos());
    let vertex = |j: usize| -> [f64; 2] {
        let phi = 2.0 * PI * (j % k) as f64 / k as f64 + PI / 2.0;
        [circum * phi.cos(), circum * phi.sin()]
    };
    let m = (k - 1) / 2;
    let mut arcs = Vec::with_capacity(k);
    for j in 0..k {
        let c = vertex(j);
        let a = vertex(j + m);
        let b = vertex(j + m + 1);
        let start = (a[1] - c[1]).atan2(a[0] - c[0]);
        let mut end = (b[1] - c[1]).atan2(b[0] - c[0]);
        while end <= start {
            end += 2.0 * PI;
        }
        arcs.push(ReuleauxArc {
            center: c,
            start,
            end,
        });
    }
    Ok(ReuleauxShape { k, d, arcs })
}

impl ReuleauxShape {
    /// Exact perimeter: sum of arc length d * sweep.
    pub fn perimeter(&self) -> f64 {
        self.arcs
            .iter()
            .map(|a| self.d * (a.end - a.start))
            .sum()
    }

    /// `total` points along the boundary, distributed over the arcs.
    pub fn boundary_points(&self, total: usize) -> Vec<[f64; 2]> {
        let per = (total / self.k).max(2);
        let mut pts = Vec::with_capacity(per * self.k);
        for arc in &self.arcs {
            for i in 0..per {
                let th = arc.start + (arc.end - arc.start) * i as f64 / per as f64;
                pts.push([
                    arc.center[0] + self.d * th.cos(),
                    arc.center[1] + self.d * th.sin(),
                ]);
            }
        }
        pts
    }

    /// Max pairwise distance over sampled boundary points. The arcs stay at
    /// distance exactly d from their centering vertex, so the sampled value
    /// reproduces d to roundoff.
    pub fn diameter_sampled(&self, total: usize) -> f64 {
        let pts = self.boundary_points(total);
        let mut best = 0.0_f64;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let dx = pts[i][0] - pts[j][0];
                let dy = pts[i][1] - pts[j][1];
                best = best.max(dx * dx + dy * dy);
            }
        }
        best.sqrt()
    }

    /// Support function about the center, sampled at `angles` directions;
    /// returns max |h - d/2|, which decays to 0 as k grows (the shape tends
    /// to the disk of radius d/2).
    pub fn support_deviation(&self, angles: usize) -> f64 {
        let pts = self.boundary_points(4096);
        let mut worst = 0.0_f64;
        for i in 0..angles {
            let th = 2.0 * PI * i as f64 / angles as f64;
            let (s, c) = th.sin_cos();
            let h = pts
                .iter()
                .map(|p| p[0] * c + p[1] * s)
                .fold(f64::NEG_INFINITY, f64::max);
            worst = worst.max((h - self.d / 2.0).abs());
        }
        worst
    }

    /// Width (support + opposite support) sampled at `angles` directions;
    /// returns (min, max). Constant equal to d for exact arcs.
    pub fn width_range(&self, angles: usize) -> (f64, f64) {
        let pts = self.boundary_points(8192);
        let support = |th: f64| -> f64 {
            let (s, c) = th.sin_cos();
            pts.iter()
                .map(|p| p[0] * c + p[1] * s)
                .fold(f64::NEG_INFINITY, f64::max)
        };
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..angles {
            let th = PI * i as f64 / angles as f64;
            let w = support(th) + support(th + PI);
            lo = lo.min(w);
            hi = hi.max(w);
        }
        (lo, hi)
    }
}
