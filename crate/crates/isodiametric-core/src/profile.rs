//! Axially symmetric sets and their deficit/asymmetry functionals.
//!
//! A [`RadialProfile`] encodes the set `E = { q : q in |q| K[e, v(|q|)] }`
//! for a fixed axis direction `e`: at each radius `r` the set meets the
//! sphere of radius `r` in the spherical cap of geodesic radius `v(r)`
//! around the north pole. `v` is stored at grid nodes and interpolated
//! linearly between them.
//!
//! Radii where `v = 0` on a whole neighborhood carry no points of the set;
//! the diameter, circumradius and distance computations all work with the
//! closure of the represented set, so an isolated `v = 0` node adjacent to a
//! positive segment still contributes its axis point (the tip of a
//! construction, say), while a gap shell contributes nothing.

use crate::geom::{self, quad, CapAngle, ConstantsTable, Dimension};
use crate::opt;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Minimum number of grid intervals in a valid profile.
pub const MIN_GRID_INTERVALS: usize = 64;

/// Axially symmetric set encoded by a cap-angle function over a radial grid.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "ProfileData", into = "ProfileData")]
pub struct RadialProfile {
    n: Dimension,
    grid: Vec<f64>,
    v: Vec<f64>,
}

/// Serialized form: `{ "n": 3, "r_grid": [...], "v": [...] }`, radii in units
/// of the normalized diameter-2 scale.
#[derive(Serialize, Deserialize)]
struct ProfileData {
    n: usize,
    r_grid: Vec<f64>,
    v: Vec<f64>,
}

impl TryFrom<ProfileData> for RadialProfile {
    type Error = Error;
    fn try_from(d: ProfileData) -> Result<Self> {
        RadialProfile::new(Dimension::new(d.n)?, d.r_grid, d.v)
    }
}

impl From<RadialProfile> for ProfileData {
    fn from(p: RadialProfile) -> ProfileData {
        ProfileData {
            n: p.n.get(),
            r_grid: p.grid,
            v: p.v,
        }
    }
}

impl RadialProfile {
    /// Validate and build a profile. The grid must start at 0, increase
    /// strictly, contain at least [`MIN_GRID_INTERVALS`] intervals, and all
    /// angles must lie in `[0, pi]`.
    pub fn new(n: Dimension, grid: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        if grid.len() != v.len() {
            return Err(Error::InvalidProfile(format!(
                "grid has {} nodes but v has {}",
                grid.len(),
                v.len()
            )));
        }
        if grid.len() < MIN_GRID_INTERVALS + 1 {
            return Err(Error::InvalidProfile(format!(
                "need at least {} grid intervals, got {}",
                MIN_GRID_INTERVALS,
                grid.len().saturating_sub(1)
            )));
        }
        if grid[0] != 0.0 {
            return Err(Error::InvalidProfile("grid must start at r = 0".into()));
        }
        for w in grid.windows(2) {
            if !(w[1] > w[0]) || !w[1].is_finite() {
                return Err(Error::InvalidProfile(
                    "grid radii must be finite and strictly increasing".into(),
                ));
            }
        }
        for &a in &v {
            if !(0.0..=PI).contains(&a) {
                return Err(Error::InvalidProfile(format!(
                    "cap angle {a} outside [0, pi]"
                )));
            }
        }
        Ok(RadialProfile { n, grid, v })
    }

    /// The unit-ball profile on a default grid.
    pub fn ball(n: Dimension) -> Self {
        let nodes = 257;
        let grid = (0..nodes).map(|i| i as f64 / (nodes - 1) as f64).collect();
        let v = vec![PI; nodes];
        RadialProfile { n, grid, v }
    }

    /// Constant-angle profile on [0, 1]; `CapAngle` output of [`Self::ball`]
    /// generalized to half-balls and cones.
    pub fn constant_angle(n: Dimension, angle: CapAngle) -> Self {
        let nodes = 257;
        let grid = (0..nodes).map(|i| i as f64 / (nodes - 1) as f64).collect();
        let v = vec![angle.radians(); nodes];
        RadialProfile { n, grid, v }
    }

    #[inline]
    pub fn dimension(&self) -> Dimension {
        self.n
    }

    #[inline]
    pub fn r_max(&self) -> f64 {
        *self.grid.last().unwrap()
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn angles(&self) -> &[f64] {
        &self.v
    }

    /// Linear interpolation of `v` at radius `r`; zero outside `[0, r_max]`.
    pub fn angle_at(&self, r: f64) -> f64 {
        if r < 0.0 || r > self.r_max() {
            return 0.0;
        }
        let i = self.grid.partition_point(|&g| g < r);
        if i == 0 {
            return self.v[0];
        }
        if i >= self.grid.len() {
            return *self.v.last().unwrap();
        }
        let (g0, g1) = (self.grid[i - 1], self.grid[i]);
        let w = (r - g0) / (g1 - g0);
        self.v[i - 1] * (1.0 - w) + self.v[i] * w
    }

    /// A node belongs to the closure of the set iff its own angle is positive
    /// or an adjacent segment carries positive angles.
    fn node_active(&self, i: usize) -> bool {
        if self.v[i] > 0.0 {
            return true;
        }
        (i > 0 && self.v[i - 1] > 0.0) || (i + 1 < self.v.len() && self.v[i + 1] > 0.0)
    }

    /// Segment `i -> i+1` carries points of the set.
    fn segment_active(&self, i: usize) -> bool {
        self.v[i] > 0.0 || self.v[i + 1] > 0.0
    }

    /// Rescale all radii by `lambda > 0`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "scale factor must be positive, got {lambda}"
            )));
        }
        Ok(RadialProfile {
            n: self.n,
            grid: self.grid.iter().map(|&r| r * lambda).collect(),
            v: self.v.clone(),
        })
    }

    /// Rescale so that the diameter equals 2. Returns the rescaled profile
    /// and the original diameter.
    pub fn normalized_to_diameter_two(&self) -> Result<(Self, f64)> {
        let d = self.diameter();
        if !(d > 0.0) {
            return Err(Error::ZeroVolume);
        }
        if (d - 2.0).abs() <= 1e-13 {
            return Ok((self.clone(), d));
        }
        Ok((self.scaled(2.0 / d)?, d))
    }

    /// Lebesgue measure of the represented set:
    /// `\int_0^{r_max} r^{n-1} H^{n-1}(K[e, v(r)]) dr`, Gauss-Legendre per
    /// grid segment (exact for the ball profile).
    pub fn volume(&self) -> f64 {
        let n = self.n.get();
        let mut total = 0.0;
        for i in 0..self.grid.len() - 1 {
            let (g0, g1) = (self.grid[i], self.grid[i + 1]);
            let (v0, v1) = (self.v[i], self.v[i + 1]);
            if v0 == 0.0 && v1 == 0.0 {
                continue;
            }
            let mut f = |r: f64| {
                let w = (r - g0) / (g1 - g0);
                let ang = v0 * (1.0 - w) + v1 * w;
                r.powi(n as i32 - 1) * geom::cap_area_raw(n, ang)
            };
            total += quad::integrate_segment(&mut f, g0, g1, 8);
        }
        total
    }

    /// Diameter of the closure of the represented set.
    ///
    /// Uses the meridian reduction: the largest distance between the caps at
    /// radii r1, r2 is `chord(r1, r2, min(v(r1) + v(r2), pi))`. The grid
    /// maximum over node pairs is polished by coordinate-wise golden-section
    /// ascent inside the winning cells.
    pub fn diameter(&self) -> f64 {
        let nodes = self.grid.len();
        let mut idx = Vec::with_capacity(nodes);
        let mut cs = Vec::with_capacity(nodes);
        let mut sn = Vec::with_capacity(nodes);
        for i in 0..nodes {
            if self.node_active(i) {
                idx.push(i);
                let (s, c) = self.v[i].sin_cos();
                sn.push(s);
                cs.push(c);
            }
        }
        if idx.is_empty() {
            return 0.0;
        }
        // Grid stage: track the best few pairs for polishing.
        const KEEP: usize = 8;
        let mut top: Vec<(f64, usize, usize)> = Vec::with_capacity(KEEP + 1);
        for (a, &i) in idx.iter().enumerate() {
            let ri = self.grid[i];
            for (b, &j) in idx.iter().enumerate().skip(a) {
                let rj = self.grid[j];
                let cos_sep = if self.v[i] + self.v[j] >= PI {
                    -1.0
                } else {
                    cs[a] * cs[b] - sn[a] * sn[b]
                };
                let d2 = ri * ri + rj * rj - 2.0 * ri * rj * cos_sep;
                if top.len() < KEEP || d2 > top.last().unwrap().0 {
                    top.push((d2, i, j));
                    top.sort_by(|x, y| y.0.total_cmp(&x.0));
                    top.truncate(KEEP);
                }
            }
        }
        let mut best = top[0].0.max(0.0).sqrt();
        for &(_, i, j) in &top {
            best = best.max(self.polish_pair(i, j));
        }
        best
    }

    /// Coordinate golden-section ascent of the chord objective around the
    /// node pair (i, j), restricted to adjacent segments that carry points.
    fn polish_pair(&self, i: usize, j: usize) -> f64 {
        let window = |k: usize| {
            let lo = if k > 0 && self.segment_active(k - 1) {
                self.grid[k - 1]
            } else {
                self.grid[k]
            };
            let hi = if k + 1 < self.grid.len() && self.segment_active(k) {
                self.grid[k + 1]
            } else {
                self.grid[k]
            };
            (lo, hi)
        };
        let obj = |r1: f64, r2: f64| {
            let ang = (self.angle_at(r1) + self.angle_at(r2)).min(PI);
            geom::chord_raw(r1, r2, ang)
        };
        let (lo1, hi1) = window(i);
        let (lo2, hi2) = window(j);
        let mut r1 = self.grid[i];
        let mut r2 = self.grid[j];
        let mut val = obj(r1, r2);
        for _ in 0..4 {
            if hi1 > lo1 {
                let (x, v) = opt::golden_max(|r| obj(r, r2), lo1, hi1, 1e-12);
                if v > val {
                    val = v;
                    r1 = x;
                }
            }
            if hi2 > lo2 {
                let (x, v) = opt::golden_max(|r| obj(r1, r), lo2, hi2, 1e-12);
                if v > val {
                    val = v;
                    r2 = x;
                }
            }
        }
        val
    }

    /// Isodiametric deficit `(diam/2)^n |B| / |E| - 1`; zero exactly for
    /// balls, invariant under rescaling.
    pub fn isodiametric_deficit(&self) -> Result<f64> {
        let vol = self.volume();
        if !(vol > f64::MIN_POSITIVE) {
            return Err(Error::ZeroVolume);
        }
        let d = self.diameter();
        let ball = geom::unit_ball_volume(self.n.get())?;
        Ok((0.5 * d).powi(self.n.get() as i32) * ball / vol - 1.0)
    }

    fn deficit_given(&self, diameter: f64, volume: f64) -> Result<f64> {
        if !(volume > f64::MIN_POSITIVE) {
            return Err(Error::ZeroVolume);
        }
        let ball = geom::unit_ball_volume(self.n.get())?;
        Ok((0.5 * diameter).powi(self.n.get() as i32) * ball / volume - 1.0)
    }

    /// Cap angle cut on the sphere of radius `r` by the unit ball centered at
    /// `t e`; the cap sits around `sign(t) e`.
    fn ball_section_angle(r: f64, t: f64) -> f64 {
        let at = t.abs();
        if at < 1e-14 {
            return if r <= 1.0 { PI } else { 0.0 };
        }
        if r == 0.0 {
            return if at < 1.0 { PI } else { 0.0 };
        }
        let c = (r * r + t * t - 1.0) / (2.0 * r * at);
        if c >= 1.0 {
            0.0
        } else if c <= -1.0 {
            PI
        } else {
            c.acos()
        }
    }

    /// `|E Delta B(t e)|` by radial decomposition into per-sphere cap
    /// symmetric differences.
    pub fn symdiff_axis_ball(&self, t: f64) -> f64 {
        let n = self.n.get();
        let hi = self.r_max().max(1.0 + t.abs());
        // Breakpoints: profile grid, kink radii of the ball section, and a
        // uniform tail past r_max.
        let mut brk: Vec<f64> = self.grid.clone();
        for r in [(1.0 - t.abs()).abs(), 1.0 + t.abs()] {
            if r > 0.0 && r < hi {
                brk.push(r);
            }
        }
        if hi > self.r_max() {
            let tail0 = self.r_max();
            for k in 0..=32 {
                brk.push(tail0 + (hi - tail0) * k as f64 / 32.0);
            }
        }
        brk.sort_by(|a, b| a.total_cmp(b));
        brk.dedup_by(|a, b| (*a - *b).abs() < 1e-15);

        let f = |r: f64| {
            let a = self.angle_at(r);
            let b = Self::ball_section_angle(r, t);
            let fa = geom::cap_area_raw(n, a);
            let fb = geom::cap_area_raw(n, b);
            let sd = if t >= 0.0 {
                (fa - fb).abs()
            } else {
                let inter = if a + b > PI {
                    (fa - geom::cap_area_raw(n, PI - b)).max(0.0)
                } else {
                    0.0
                };
                fa + fb - 2.0 * inter
            };
            r.powi(n as i32 - 1) * sd
        };
        quad::integrate_over_grid(&brk, 4, f)
    }

    /// Minimize `|E Delta B(t e)|` over axis centers: 257-point coarse grid
    /// on `[-(1 + r_max), 1 + r_max]`, then golden-section refinement around
    /// the best node. Grid ties break toward the smallest `t`.
    pub fn best_symdiff(&self) -> (f64, f64) {
        let lim = 1.0 + self.r_max();
        opt::grid_then_golden_min(|t| self.symdiff_axis_ball(t), -lim, lim, 257, 1e-10)
    }

    /// Largest distance from the axis point `t e` to the closure of the set.
    fn circumradius_about(&self, t: f64) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..self.grid.len() {
            if !self.node_active(i) {
                continue;
            }
            let r = self.grid[i];
            let d2 = if t >= 0.0 {
                // farthest cap point has polar angle v_i
                r * r + t * t - 2.0 * r * t * self.v[i].cos()
            } else {
                // farthest point is the axis tip at angle 0
                let d = r - t;
                d * d
            };
            best = best.max(d2);
        }
        best.sqrt()
    }

    /// Outer radial deviation `r_out`: the least `r` such that the set fits
    /// in `B_{1+r}(x)`, minimized over axis centers (exact for axially
    /// symmetric sets: the circumradius is convex and rotation-invariant).
    pub fn r_out(&self) -> f64 {
        let rm = self.r_max();
        let (_, circ) = opt::golden_min(|t| self.circumradius_about(t), -rm, rm, 1e-13);
        (circ - 1.0).max(0.0)
    }

    /// Inner radial deviation `r_in`: the least `r` such that some unit ball
    /// `B(x)` is contained in `E + B_r`, with the center restricted to the
    /// axis (documented heuristic; the paper's optimal center need not be
    /// axial, but every construction here has an axially symmetric worst
    /// point).
    pub fn r_in(&self) -> f64 {
        let boundary = MeridianBoundary::build(self);
        let rm = self.r_max();
        let eval = |t: f64| self.deepest_gap_in_ball(&boundary, t);
        // Coarse scan plus golden refinement; the objective is continuous in
        // t but not convex in general.
        let mut best = (0.0, f64::INFINITY);
        let coarse = 21;
        for i in 0..coarse {
            let t = -rm + 2.0 * rm * i as f64 / (coarse - 1) as f64;
            let v = eval(t);
            if v < best.1 {
                best = (t, v);
            }
        }
        let span = 2.0 * rm / (coarse - 1) as f64;
        let (_, refined) = opt::golden_min(eval, best.0 - span, best.0 + span, 1e-6);
        refined.min(best.1)
    }

    /// `sup_{y in B(t e)} dist(y, E)` through meridian coordinates: hierarchic
    /// grids over the half-disk; grid points outside the ball are projected
    /// onto its boundary so the sphere is always sampled.
    fn deepest_gap_in_ball(&self, boundary: &MeridianBoundary, t: f64) -> f64 {
        let clip = |rho: f64, z: f64| -> (f64, f64) {
            let d2 = rho * rho + (z - t) * (z - t);
            if d2 <= 1.0 {
                (rho, z)
            } else {
                let s = 1.0 / d2.sqrt();
                (rho * s, t + (z - t) * s)
            }
        };
        let dist = |rho: f64, z: f64| -> f64 {
            let (rho, z) = clip(rho.max(0.0), z);
            boundary.distance(self, rho, z)
        };

        // Stage 1: coarse sweep.
        let (cols, rows) = (25usize, 49usize);
        let mut cands: Vec<(f64, f64, f64)> = Vec::new();
        for i in 0..cols {
            let rho = i as f64 / (cols - 1) as f64;
            for j in 0..rows {
                let z = t - 1.0 + 2.0 * j as f64 / (rows - 1) as f64;
                let d = dist(rho, z);
                cands.push((d, rho, z));
            }
        }
        cands.sort_by(|a, b| b.0.total_cmp(&a.0));
        cands.truncate(4);

        // Stage 2: zoom around the leading candidates.
        let mut best = cands.first().map(|c| c.0).unwrap_or(0.0);
        for &(_, rho0, z0) in &cands {
            let (mut rho_c, mut z_c) = (rho0, z0);
            let mut w = 2.0 / (cols - 1) as f64;
            for _ in 0..6 {
                let m = 9;
                let mut local = (dist(rho_c, z_c), rho_c, z_c);
                for a in 0..m {
                    for b in 0..m {
                        let rho = rho_c + w * (a as f64 / (m - 1) as f64 - 0.5);
                        let z = z_c + w * (b as f64 / (m - 1) as f64 - 0.5);
                        let d = dist(rho, z);
                        if d > local.0 {
                            local = (d, rho.max(0.0), z);
                        }
                    }
                }
                rho_c = local.1;
                z_c = local.2;
                best = best.max(local.0);
                w /= 3.0;
            }
        }
        best
    }

    /// Sample points `(rho, z)` of the meridian boundary of the set: the
    /// cap-edge curve at the grid nodes plus the sphere arcs closing each
    /// maximal run of nonempty shells, resolved to `arc_step` radians. The
    /// convex hull of these points (and their mirror images) is the meridian
    /// section of the convex envelope.
    pub fn meridian_boundary_samples(&self, arc_step: f64) -> Vec<(f64, f64)> {
        let step = arc_step.max(1e-6);
        let nodes = self.grid.len();
        let mut pts = Vec::new();
        for i in 0..nodes {
            if self.node_active(i) {
                let (s, c) = self.v[i].sin_cos();
                pts.push((self.grid[i] * s, self.grid[i] * c));
            }
        }
        for i in 0..nodes {
            let before = i > 0 && self.segment_active(i - 1);
            let after = i + 1 < nodes && self.segment_active(i);
            if (before && after) || self.v[i] == 0.0 || self.grid[i] == 0.0 {
                continue;
            }
            if before || after {
                let r = self.grid[i];
                let steps = ((self.v[i] / step).ceil() as usize).max(2);
                for k in 0..=steps {
                    let th = self.v[i] * k as f64 / steps as f64;
                    let (s, c) = th.sin_cos();
                    pts.push((r * s, r * c));
                }
            }
        }
        pts
    }

    /// Full deficit report, computed at the normalized diameter-2 scale.
    pub fn report(&self) -> Result<DeficitReport> {
        let vol_raw = self.volume();
        if !(vol_raw > f64::MIN_POSITIVE) {
            return Err(Error::ZeroVolume);
        }
        let (norm, original_diameter) = self.normalized_to_diameter_two()?;
        let volume = norm.volume();
        let delta = norm.deficit_given(2.0, volume)?;
        let r_out = norm.r_out();
        let r_in = norm.r_in();
        let (symdiff_center, symdiff_min) = norm.best_symdiff();
        let table = ConstantsTable::for_dimension(self.n);
        let ball = geom::unit_ball_volume(self.n.get())?;
        let h = r_in.max(r_out);
        Ok(DeficitReport {
            diameter: original_diameter,
            volume,
            delta,
            r_out,
            r_in,
            hausdorff_lo: h,
            hausdorff_hi: 2.0 * h,
            symdiff_min,
            symdiff_center,
            thm_main_margin: table.c * delta.max(0.0).sqrt() - symdiff_min / (3.0 * ball),
            r_in_center_restricted_to_axis: true,
        })
    }
}

/// Boundary of the meridian region in (rho, z) coordinates: the cap-edge
/// polyline plus sampled end arcs of each maximal run of nonempty shells.
struct MeridianBoundary {
    /// Edge point per node (rho, z) = r (sin v, cos v).
    pts: Vec<(f64, f64)>,
    /// Sampled arcs (radius, polyline) closing run boundaries.
    arcs: Vec<(f64, Vec<(f64, f64)>)>,
    /// Longest edge segment, used as pruning slack.
    max_seg: f64,
}

impl MeridianBoundary {
    fn build(p: &RadialProfile) -> Self {
        let nodes = p.grid.len();
        let mut pts = Vec::with_capacity(nodes);
        for i in 0..nodes {
            let (s, c) = p.v[i].sin_cos();
            pts.push((p.grid[i] * s, p.grid[i] * c));
        }
        let mut max_seg = 0.0_f64;
        for i in 0..nodes - 1 {
            if p.segment_active(i) {
                let dx = pts[i + 1].0 - pts[i].0;
                let dy = pts[i + 1].1 - pts[i].1;
                max_seg = max_seg.max((dx * dx + dy * dy).sqrt());
            }
        }
        // Arcs close the sphere at the extremes of every run of active
        // segments (the region boundary contains the whole arc theta in
        // [0, v] there).
        let mut arcs = Vec::new();
        let mut push_arc = |i: usize| {
            let r = p.grid[i];
            let v = p.v[i];
            if r <= 0.0 || v <= 0.0 {
                return;
            }
            let steps = ((v / 0.01).ceil() as usize).clamp(2, 400);
            let mut line = Vec::with_capacity(steps + 1);
            for k in 0..=steps {
                let th = v * k as f64 / steps as f64;
                let (s, c) = th.sin_cos();
                line.push((r * s, r * c));
            }
            arcs.push((r, line));
        };
        for i in 0..nodes {
            let before = i > 0 && p.segment_active(i - 1);
            let after = i + 1 < nodes && p.segment_active(i);
            if (!before && after) || (before && !after) {
                push_arc(i);
            }
        }
        MeridianBoundary {
            pts,
            arcs,
            max_seg,
        }
    }

    /// Distance from the meridian point (rho, z) to the region; 0 inside.
    fn distance(&self, p: &RadialProfile, rho: f64, z: f64) -> f64 {
        let r = (rho * rho + z * z).sqrt();
        if r <= p.r_max() {
            let v = p.angle_at(r);
            if v > 0.0 {
                let theta = geom::safe_acos(if r > 0.0 { (z / r).clamp(-1.0, 1.0) } else { 1.0 });
                if theta <= v {
                    return 0.0;
                }
            }
        }
        let mut best = f64::INFINITY;
        // Nodes sorted by radius allow pruning by | r - r_i |.
        let start = p.grid.partition_point(|&g| g < r);
        let scan = |i: usize, best: &mut f64| {
            let gap = (r - p.grid[i]).abs();
            if gap - self.max_seg > *best {
                return false;
            }
            if p.node_active(i) {
                *best = (*best).min(point_dist(self.pts[i], rho, z));
                if i + 1 < p.grid.len() && p.segment_active(i) {
                    *best = (*best).min(segment_dist(self.pts[i], self.pts[i + 1], rho, z));
                }
            }
            true
        };
        let mut lo = start;
        while lo > 0 {
            lo -= 1;
            if !scan(lo, &mut best) {
                break;
            }
        }
        let mut hi = start;
        while hi < p.grid.len() {
            if !scan(hi, &mut best) {
                break;
            }
            hi += 1;
        }
        for (arc_r, line) in &self.arcs {
            if (r - arc_r).abs() > best {
                continue;
            }
            for w in line.windows(2) {
                best = best.min(segment_dist(w[0], w[1], rho, z));
            }
        }
        best
    }
}

fn point_dist(p: (f64, f64), x: f64, y: f64) -> f64 {
    let dx = p.0 - x;
    let dy = p.1 - y;
    (dx * dx + dy * dy).sqrt()
}

fn segment_dist(a: (f64, f64), b: (f64, f64), x: f64, y: f64) -> f64 {
    let (abx, aby) = (b.0 - a.0, b.1 - a.1);
    let len2 = abx * abx + aby * aby;
    if len2 == 0.0 {
        return point_dist(a, x, y);
    }
    let t = (((x - a.0) * abx + (y - a.1) * aby) / len2).clamp(0.0, 1.0);
    point_dist((a.0 + t * abx, a.1 + t * aby), x, y)
}

/// Bundle of deficit and asymmetry functionals of a profile, evaluated after
/// normalizing the diameter to 2. `diameter` is the diameter of the profile
/// as given; every other entry refers to the normalized scale.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeficitReport {
    pub diameter: f64,
    pub volume: f64,
    /// Isodiametric deficit.
    pub delta: f64,
    pub r_out: f64,
    pub r_in: f64,
    /// Lower end of the Hausdorff-distance bracket: max(r_in, r_out).
    pub hausdorff_lo: f64,
    /// Upper end of the bracket: 2 max(r_in, r_out).
    pub hausdorff_hi: f64,
    /// min over axis centers t of |E Delta B(t e)|.
    pub symdiff_min: f64,
    /// The minimizing axis center.
    pub symdiff_center: f64,
    /// C(n) sqrt(delta) - symdiff_min / (3 |B|); nonnegative by the main
    /// stability theorem (the axis minimum over 3 bounds the full infimum).
    pub thm_main_margin: f64,
    /// The r_in center search is restricted to the symmetry axis.
    pub r_in_center_restricted_to_axis: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::unit_ball_volume;

    fn dim(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn validation_rejects_bad_profiles() {
        let n = dim(3);
        let grid: Vec<f64> = (0..65).map(|i| i as f64 / 64.0).collect();
        assert!(RadialProfile::new(n, grid.clone(), vec![1.0; 64]).is_err());
        assert!(RadialProfile::new(n, grid.clone(), vec![4.0; 65]).is_err());
        let mut bad = grid.clone();
        bad[0] = 0.5;
        assert!(RadialProfile::new(n, bad, vec![1.0; 65]).is_err());
        let short: Vec<f64> = (0..10).map(|i| i as f64 / 9.0).collect();
        assert!(RadialProfile::new(n, short, vec![1.0; 10]).is_err());
        assert!(RadialProfile::new(n, grid, vec![1.0; 65]).is_ok());
    }

    #[test]
    fn ball_volume_is_exact() {
        for n in 2..=8 {
            let p = RadialProfile::ball(dim(n));
            let exact = unit_ball_volume(n).unwrap();
            assert!(
                (p.volume() - exact).abs() < 1e-12 * exact,
                "n={n}: {} vs {exact}",
                p.volume()
            );
        }
    }

    #[test]
    fn half_ball_volume() {
        let p = RadialProfile::constant_angle(dim(3), CapAngle::new(PI / 2.0).unwrap());
        assert!((p.volume() - 2.0 * PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn ball_diameter_and_half_space_diameter() {
        let b = RadialProfile::ball(dim(4));
        assert!((b.diameter() - 2.0).abs() < 1e-12);
        // Equatorial antipodes realize the diameter when v = pi/2.
        let h = RadialProfile::constant_angle(dim(3), CapAngle::new(PI / 2.0).unwrap());
        assert!((h.diameter() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn deficit_zero_for_ball_and_scale_invariant() {
        for n in 2..=5 {
            let b = RadialProfile::ball(dim(n));
            assert!(b.isodiametric_deficit().unwrap().abs() < 1e-12);
            for lam in [0.1, 1.0, 7.3, 0.37] {
                let s = b.scaled(lam).unwrap();
                assert!(s.isodiametric_deficit().unwrap().abs() < 1e-10);
            }
        }
    }

    #[test]
    fn deficit_scale_invariance_nontrivial_profile() {
        // A lens-like profile: v decreasing from pi to 0.
        let nodes = 301;
        let grid: Vec<f64> = (0..nodes).map(|i| 1.2 * i as f64 / (nodes - 1) as f64).collect();
        let v: Vec<f64> = (0..nodes)
            .map(|i| PI * (1.0 - i as f64 / (nodes - 1) as f64))
            .collect();
        let p = RadialProfile::new(dim(3), grid, v).unwrap();
        let d0 = p.isodiametric_deficit().unwrap();
        for lam in [0.1, 1.0, 7.3] {
            let dl = p.scaled(lam).unwrap().isodiametric_deficit().unwrap();
            assert!((dl - d0).abs() < 1e-10, "lambda={lam}: {dl} vs {d0}");
        }
        assert!(d0 > 0.0);
    }

    #[test]
    fn zero_volume_profile_errors() {
        let nodes = 65;
        let grid: Vec<f64> = (0..nodes).map(|i| i as f64 / (nodes - 1) as f64).collect();
        let p = RadialProfile::new(dim(2), grid, vec![0.0; nodes]).unwrap();
        assert!(matches!(
            p.isodiametric_deficit(),
            Err(Error::ZeroVolume)
        ));
        assert!(matches!(p.report(), Err(Error::ZeroVolume)));
        assert_eq!(p.diameter(), 0.0);
    }

    #[test]
    fn symdiff_ball_centered_is_zero() {
        let b = RadialProfile::ball(dim(3));
        assert!(b.symdiff_axis_ball(0.0).abs() < 1e-10);
        let (t, v) = b.best_symdiff();
        assert!(v < 1e-8, "value {v}");
        assert!(t.abs() < 1e-3, "center {t}");
    }

    #[test]
    fn symdiff_disks_at_distance_one_matches_lens_formula() {
        // Independent oracle for n = 2: two unit disks with centers distance
        // d apart overlap in a lens of area 2 acos(d/2) - (d/2) sqrt(4 - d^2).
        let d = 1.0;
        let lens = 2.0 * (d / 2.0_f64).acos() - (d / 2.0) * (4.0 - d * d).sqrt();
        let expect = 2.0 * (PI - lens);
        assert!((expect - 3.826_457_558_587_583).abs() < 1e-12);
        let b = RadialProfile::ball(dim(2));
        let got = b.symdiff_axis_ball(1.0);
        assert!((got - expect).abs() < 1e-8, "{got} vs {expect}");
        // And the same by symmetry on the other side.
        let got_neg = b.symdiff_axis_ball(-1.0);
        assert!((got_neg - expect).abs() < 1e-8);
    }

    #[test]
    fn symdiff_far_ball_is_sum_of_volumes() {
        let b = RadialProfile::ball(dim(3));
        let vol = unit_ball_volume(3).unwrap();
        let got = b.symdiff_axis_ball(5.0);
        assert!((got - 2.0 * vol).abs() < 1e-9);
    }

    #[test]
    fn r_out_zero_for_ball_and_subsets_of_ball() {
        let b = RadialProfile::ball(dim(3));
        assert!(b.r_out() < 1e-12);
    }

    #[test]
    fn r_in_zero_for_ball() {
        let b = RadialProfile::ball(dim(3));
        assert!(b.r_in() < 1e-6, "{}", b.r_in());
    }

    #[test]
    fn report_on_ball_is_all_zeros() {
        let b = RadialProfile::ball(dim(2));
        let rep = b.report().unwrap();
        assert!((rep.diameter - 2.0).abs() < 1e-12);
        assert!(rep.delta.abs() < 1e-10);
        assert!(rep.r_out < 1e-10);
        assert!(rep.r_in < 1e-5);
        assert!(rep.symdiff_min < 1e-8);
        assert!(rep.thm_main_margin > -1e-8);
        assert!(rep.hausdorff_lo <= rep.hausdorff_hi + 1e-15);
    }

    #[test]
    fn profile_json_round_trip() {
        let b = RadialProfile::ball(dim(3));
        let s = serde_json::to_string(&b).unwrap();
        assert!(s.contains("\"r_grid\""));
        let back: RadialProfile = serde_json::from_str(&s).unwrap();
        assert_eq!(back.dimension().get(), 3);
        assert_eq!(back.grid(), b.grid());
        // Corrupted angles must fail validation, not crash downstream.
        let bad = s.replace("3.141592653589793", "9.0");
        assert!(serde_json::from_str::<RadialProfile>(&bad).is_err());
    }

    #[test]
    fn gap_shells_do_not_create_phantom_diameter() {
        // Thin shell at radii [0.9, 1.0] only: the diameter is achieved by
        // antipodal shell points (2.0), and the empty inner region must not
        // contribute axis points.
        let mut grid = vec![0.0];
        for i in 1..=200 {
            grid.push(i as f64 / 200.0);
        }
        let v: Vec<f64> = grid
            .iter()
            .map(|&r| if r >= 0.9 { PI } else { 0.0 })
            .collect();
        let p = RadialProfile::new(dim(3), grid, v).unwrap();
        assert!((p.diameter() - 2.0).abs() < 1e-12);

        // Off-axis shell wedge: radii in [0.5, 0.6], small cap angle. The
        // farthest pair lies within the wedge, not between a phantom axis
        // point and the wedge.
        let mut grid2 = vec![0.0];
        for i in 1..=240 {
            grid2.push(0.6 * i as f64 / 240.0);
        }
        let v2: Vec<f64> = grid2
            .iter()
            .map(|&r| if r >= 0.5 { 0.3 } else { 0.0 })
            .collect();
        let p2 = RadialProfile::new(dim(3), grid2, v2).unwrap();
        let expected = geom::chord_raw(0.6, 0.6, 0.6_f64.min(PI));
        assert!(
            (p2.diameter() - expected).abs() < 1e-9,
            "{} vs {expected}",
            p2.diameter()
        );
    }
}
