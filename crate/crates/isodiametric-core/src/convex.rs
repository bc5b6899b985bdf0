//! Convex bodies: hulls, perimeter and volume, the Cauchy projection
//! formula, the fixed-diameter perimeter bound, and the comparison between
//! the isoperimetric deficit of the convex envelope and the isodiametric
//! deficit of the original set.
//!
//! Two representations cover what the checks need: vertex polytopes in
//! dimensions 2 and 3, and bodies of revolution (any supported dimension)
//! described by the meridian chain of their convex planar section.

use crate::geom::{self, Dimension};
use crate::profile::RadialProfile;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// Vertex polytope in R^2 or R^3. 2D vertices are stored in counterclockwise
/// hull order; 3D polytopes also carry their triangulated faces.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "PolytopeData", into = "PolytopeData")]
pub struct Polytope {
    n: usize,
    vertices: Vec<Vec<f64>>,
    #[serde(skip)]
    faces: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
struct PolytopeData {
    n: usize,
    vertices: Vec<Vec<f64>>,
}

impl TryFrom<PolytopeData> for Polytope {
    type Error = Error;
    fn try_from(d: PolytopeData) -> Result<Self> {
        match convex_hull(&d.vertices, d.n)? {
            ConvexBody::Polytope(p) => Ok(p),
            ConvexBody::Revolution(_) => unreachable!("hull of points is a polytope"),
        }
    }
}

impl From<Polytope> for PolytopeData {
    fn from(p: Polytope) -> PolytopeData {
        PolytopeData {
            n: p.n,
            vertices: p.vertices,
        }
    }
}

/// Body of revolution around the z axis: the convex meridian section is the
/// region between the chain `(z, rho(z))` and its mirror image `rho -> -rho`.
/// The chain is stored with nondecreasing z and closes to the axis at both
/// ends (vertical edges encode flat faces).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Revolution {
    n: Dimension,
    /// (z, rho) with rho >= 0, first and last entries on the axis.
    chain: Vec<(f64, f64)>,
}

/// A convex body in one of the two supported representations.
#[derive(Clone, Debug)]
pub enum ConvexBody {
    Polytope(Polytope),
    Revolution(Revolution),
}

impl Polytope {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }
}

impl ConvexBody {
    pub fn dimension(&self) -> usize {
        match self {
            ConvexBody::Polytope(p) => p.n,
            ConvexBody::Revolution(r) => r.n.get(),
        }
    }
}

// ---------------------------------------------------------------------------
// hulls

/// Convex hull of a point cloud in R^2 or R^3. Errors on flat input.
pub fn convex_hull(points: &[Vec<f64>], n: usize) -> Result<ConvexBody> {
    if n != 2 && n != 3 {
        return Err(Error::DimensionOutOfRange(n, 2, 3));
    }
    if points.len() < n + 1 {
        return Err(Error::DegenerateInput(format!(
            "need at least {} points, got {}",
            n + 1,
            points.len()
        )));
    }
    for p in points {
        if p.len() != n {
            return Err(Error::DegenerateInput(format!(
                "point of length {} in dimension {n}",
                p.len()
            )));
        }
    }
    if n == 2 {
        let pts: Vec<(f64, f64)> = points.iter().map(|p| (p[0], p[1])).collect();
        let hull = hull_2d(&pts)?;
        Ok(ConvexBody::Polytope(Polytope {
            n: 2,
            vertices: hull.into_iter().map(|(x, y)| vec![x, y]).collect(),
            faces: Vec::new(),
        }))
    } else {
        let pts: Vec<[f64; 3]> = points.iter().map(|p| [p[0], p[1], p[2]]).collect();
        let (verts, faces) = hull_3d(&pts)?;
        Ok(ConvexBody::Polytope(Polytope {
            n: 3,
            vertices: verts.into_iter().map(|p| p.to_vec()).collect(),
            faces,
        }))
    }
}

/// Andrew monotone chain; returns the hull in counterclockwise order.
fn hull_2d(points: &[(f64, f64)]) -> Result<Vec<(f64, f64)>> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    if pts.len() < 3 {
        return Err(Error::DegenerateInput("fewer than 3 distinct points".into()));
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateInput("flat 2d point set".into()));
    }
    Ok(lower)
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

/// Incremental 3D convex hull. Suitable for the moderate point counts used
/// here; errors on degenerate (flat) input.
fn hull_3d(points: &[[f64; 3]]) -> Result<(Vec<[f64; 3]>, Vec<[usize; 3]>)> {
    let scale = points
        .iter()
        .map(|p| norm3(*p))
        .fold(0.0_f64, f64::max)
        .max(1e-12);
    let eps = 1e-12 * scale.max(1.0);

    // Initial tetrahedron: spread points.
    let i0 = (0..points.len())
        .min_by(|&a, &b| points[a][0].total_cmp(&points[b][0]))
        .unwrap();
    let i1 = (0..points.len())
        .max_by(|&a, &b| {
            norm3(sub(points[a], points[i0])).total_cmp(&norm3(sub(points[b], points[i0])))
        })
        .unwrap();
    if norm3(sub(points[i1], points[i0])) < eps {
        return Err(Error::DegenerateInput("all points coincide".into()));
    }
    let line = sub(points[i1], points[i0]);
    let i2 = (0..points.len())
        .max_by(|&a, &b| {
            let da = norm3(cross3(line, sub(points[a], points[i0])));
            let db = norm3(cross3(line, sub(points[b], points[i0])));
            da.total_cmp(&db)
        })
        .unwrap();
    if norm3(cross3(line, sub(points[i2], points[i0]))) < eps * norm3(line) {
        return Err(Error::DegenerateInput("collinear point set".into()));
    }
    let normal = cross3(line, sub(points[i2], points[i0]));
    let i3 = (0..points.len())
        .max_by(|&a, &b| {
            let da = dot3(normal, sub(points[a], points[i0])).abs();
            let db = dot3(normal, sub(points[b], points[i0])).abs();
            da.total_cmp(&db)
        })
        .unwrap();
    if dot3(normal, sub(points[i3], points[i0])).abs() < eps * norm3(normal) {
        return Err(Error::DegenerateInput("coplanar point set".into()));
    }

    let centroid = |idx: &[usize]| -> [f64; 3] {
        let mut c = [0.0; 3];
        for &i in idx {
            for k in 0..3 {
                c[k] += points[i][k];
            }
        }
        for k in &mut c {
            *k /= idx.len() as f64;
        }
        c
    };
    let inner = centroid(&[i0, i1, i2, i3]);

    // Faces oriented so the inner point has negative signed distance.
    let orient = |f: [usize; 3]| -> [usize; 3] {
        let nrm = cross3(
            sub(points[f[1]], points[f[0]]),
            sub(points[f[2]], points[f[0]]),
        );
        if dot3(nrm, sub(inner, points[f[0]])) > 0.0 {
            [f[0], f[2], f[1]]
        } else {
            f
        }
    };
    let mut faces: Vec<[usize; 3]> = vec![
        orient([i0, i1, i2]),
        orient([i0, i1, i3]),
        orient([i0, i2, i3]),
        orient([i1, i2, i3]),
    ];

    let signed = |f: &[usize; 3], p: [f64; 3]| -> f64 {
        let nrm = cross3(
            sub(points[f[1]], points[f[0]]),
            sub(points[f[2]], points[f[0]]),
        );
        dot3(nrm, sub(p, points[f[0]])) / norm3(nrm)
    };

    for (pi, &p) in points.iter().enumerate() {
        if pi == i0 || pi == i1 || pi == i2 || pi == i3 {
            continue;
        }
        let visible: Vec<usize> = (0..faces.len())
            .filter(|&fi| signed(&faces[fi], p) > eps)
            .collect();
        if visible.is_empty() {
            continue;
        }
        use std::collections::HashSet;
        let vis_set: HashSet<usize> = visible.iter().copied().collect();
        let mut directed: HashSet<(usize, usize)> = HashSet::new();
        for &fi in &visible {
            let f = faces[fi];
            for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
                directed.insert((u, v));
            }
        }
        // Horizon: directed edges of visible faces whose reverse belongs to a
        // hidden face.
        let mut horizon: Vec<(usize, usize)> = directed
            .iter()
            .filter(|&&(u, v)| !directed.contains(&(v, u)))
            .copied()
            .collect();
        horizon.sort();
        let mut next: Vec<[usize; 3]> = faces
            .iter()
            .enumerate()
            .filter(|(fi, _)| !vis_set.contains(fi))
            .map(|(_, f)| *f)
            .collect();
        for (u, v) in horizon {
            next.push([u, v, pi]);
        }
        faces = next;
    }

    let mut used: Vec<usize> = faces.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let remap: std::collections::HashMap<usize, usize> =
        used.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let verts: Vec<[f64; 3]> = used.iter().map(|&i| points[i]).collect();
    let faces: Vec<[usize; 3]> = faces
        .iter()
        .map(|f| [remap[&f[0]], remap[&f[1]], remap[&f[2]]])
        .collect();
    Ok((verts, faces))
}

/// Convex envelope of a profile set as a body of revolution. The meridian
/// section of the hull equals the planar hull of the meridian section
/// together with its axis reflection; `arc_step` controls how finely the
/// spherical boundary pieces are sampled before hulling.
pub fn hull_of_profile(p: &RadialProfile, arc_step: f64) -> Result<ConvexBody> {
    let samples = p.meridian_boundary_samples(arc_step);
    if samples.is_empty() {
        return Err(Error::ZeroVolume);
    }
    // (z, rho) plus the mirrored copy.
    let mut pts: Vec<(f64, f64)> = Vec::with_capacity(2 * samples.len());
    for &(rho, z) in &samples {
        pts.push((z, rho));
        pts.push((z, -rho));
    }
    let hull = hull_2d(&pts)?;
    // The input is mirror-symmetric, so the hull vertices with rho >= 0 are
    // exactly the upper chain (plus axis endpoints), z-monotone after sorting.
    let mut chain: Vec<(f64, f64)> = hull
        .into_iter()
        .filter(|&(_, rho)| rho >= -1e-15)
        .map(|(z, rho)| (z, rho.max(0.0)))
        .collect();
    chain.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    chain.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-15 && (a.1 - b.1).abs() < 1e-15);
    // Close to the axis at both ends.
    if let Some(&(z0, r0)) = chain.first() {
        if r0 > 0.0 {
            chain.insert(0, (z0, 0.0));
        }
    }
    if let Some(&(z1, r1)) = chain.last() {
        if r1 > 0.0 {
            chain.push((z1, 0.0));
        }
    }
    Ok(ConvexBody::Revolution(Revolution {
        n: p.dimension(),
        chain,
    }))
}

impl Revolution {
    pub fn chain(&self) -> &[(f64, f64)] {
        &self.chain
    }

    /// Meridian radius at height z (0 outside the body).
    pub fn radius_at(&self, z: f64) -> f64 {
        let m = self.chain.len();
        if m == 0 || z < self.chain[0].0 || z > self.chain[m - 1].0 {
            return 0.0;
        }
        let mut best = 0.0_f64;
        for w in self.chain.windows(2) {
            let (z0, r0) = w[0];
            let (z1, r1) = w[1];
            if z0 <= z && z <= z1 {
                if z1 > z0 {
                    let u = (z - z0) / (z1 - z0);
                    best = best.max(r0 * (1.0 - u) + r1 * u);
                } else {
                    best = best.max(r0.max(r1));
                }
            }
        }
        best
    }

    /// Volume by the exact per-edge integral of omega_{n-1} rho^{n-1} dz.
    pub fn volume(&self) -> f64 {
        let n = self.n.get();
        let omega_prev = geom::unit_ball_volume(n - 1).expect("n-1 valid");
        let mut total = 0.0;
        for w in self.chain.windows(2) {
            let (z0, r0) = w[0];
            let (z1, r1) = w[1];
            total += (z1 - z0) * power_mean(r0, r1, n as i32 - 1);
        }
        omega_prev * total
    }

    /// Lateral measure by the exact per-edge integral of
    /// s_{n-2} rho^{n-2} ds; vertical closing edges reproduce flat disk
    /// faces exactly.
    pub fn perimeter(&self) -> f64 {
        let n = self.n.get();
        let s_prev = geom::sphere_area(n - 1).expect("n-1 valid");
        let mut total = 0.0;
        for w in self.chain.windows(2) {
            let (z0, r0) = w[0];
            let (z1, r1) = w[1];
            let len = ((z1 - z0).powi(2) + (r1 - r0).powi(2)).sqrt();
            total += len * power_mean(r0, r1, n as i32 - 2);
        }
        s_prev * total
    }

    /// Diameter of the solid of revolution: the diameter of the full planar
    /// section, by rotating calipers on the symmetric polygon.
    pub fn diameter(&self) -> f64 {
        let mut poly: Vec<(f64, f64)> = Vec::with_capacity(2 * self.chain.len());
        for &(z, r) in &self.chain {
            poly.push((z, r));
        }
        for &(z, r) in self.chain.iter().rev() {
            if r > 0.0 {
                poly.push((z, -r));
            }
        }
        polygon_diameter(&poly)
    }

    pub fn scaled(&self, lambda: f64) -> Revolution {
        Revolution {
            n: self.n,
            chain: self
                .chain
                .iter()
                .map(|&(z, r)| (z * lambda, r * lambda))
                .collect(),
        }
    }
}

/// Mean of u^k over the segment [a, b]: \int_0^1 (a + t(b-a))^k dt.
fn power_mean(a: f64, b: f64, k: i32) -> f64 {
    if k == 0 {
        return 1.0;
    }
    if (a - b).abs() < 1e-14 * a.abs().max(b.abs()).max(1e-300) {
        return (0.5 * (a + b)).powi(k);
    }
    (b.powi(k + 1) - a.powi(k + 1)) / ((k + 1) as f64 * (b - a))
}

/// Diameter of a convex polygon given in vertex order (max pairwise vertex
/// distance). O(m^2) is fine for the small polygons; larger ones use the
/// monotone structure via a calipers sweep.
fn polygon_diameter(poly: &[(f64, f64)]) -> f64 {
    let m = poly.len();
    if m <= 1 {
        return 0.0;
    }
    if m <= 512 {
        let mut best = 0.0_f64;
        for i in 0..m {
            for j in i + 1..m {
                let dx = poly[i].0 - poly[j].0;
                let dy = poly[i].1 - poly[j].1;
                best = best.max(dx * dx + dy * dy);
            }
        }
        return best.sqrt();
    }
    // Rotating calipers over antipodal pairs.
    let d2 = |a: (f64, f64), b: (f64, f64)| {
        let dx = a.0 - b.0;
        let dy = a.1 - b.1;
        dx * dx + dy * dy
    };
    let area2 = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        ((a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)).abs()
    };
    let mut best = 0.0_f64;
    let mut j = 1usize;
    for i in 0..m {
        let ni = (i + 1) % m;
        loop {
            let nj = (j + 1) % m;
            if area2(poly[i], poly[ni], poly[nj]) > area2(poly[i], poly[ni], poly[j]) {
                j = nj;
            } else {
                break;
            }
        }
        best = best.max(d2(poly[i], poly[j])).max(d2(poly[ni], poly[j]));
    }
    best.sqrt()
}

// ---------------------------------------------------------------------------
// measures

/// Perimeter (boundary measure): edge-length sum for 2D polytopes, facet-area
/// sum for 3D polytopes, exact chain integral for revolution bodies.
pub fn perimeter(body: &ConvexBody) -> f64 {
    match body {
        ConvexBody::Polytope(p) => {
            if p.n == 2 {
                let m = p.vertices.len();
                (0..m)
                    .map(|i| {
                        let a = &p.vertices[i];
                        let b = &p.vertices[(i + 1) % m];
                        ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
                    })
                    .sum()
            } else {
                p.faces
                    .iter()
                    .map(|f| {
                        let a = arr3(&p.vertices[f[0]]);
                        let b = arr3(&p.vertices[f[1]]);
                        let c = arr3(&p.vertices[f[2]]);
                        0.5 * norm3(cross3(sub(b, a), sub(c, a)))
                    })
                    .sum()
            }
        }
        ConvexBody::Revolution(r) => r.perimeter(),
    }
}

/// Enclosed volume.
pub fn volume(body: &ConvexBody) -> f64 {
    match body {
        ConvexBody::Polytope(p) => {
            if p.n == 2 {
                let m = p.vertices.len();
                0.5 * (0..m)
                    .map(|i| {
                        let a = &p.vertices[i];
                        let b = &p.vertices[(i + 1) % m];
                        a[0] * b[1] - b[0] * a[1]
                    })
                    .sum::<f64>()
                    .abs()
            } else {
                let o = arr3(&p.vertices[0]);
                p.faces
                    .iter()
                    .map(|f| {
                        let a = sub(arr3(&p.vertices[f[0]]), o);
                        let b = sub(arr3(&p.vertices[f[1]]), o);
                        let c = sub(arr3(&p.vertices[f[2]]), o);
                        dot3(a, cross3(b, c)) / 6.0
                    })
                    .sum::<f64>()
                    .abs()
            }
        }
        ConvexBody::Revolution(r) => r.volume(),
    }
}

/// Diameter (largest pairwise distance).
pub fn diameter(body: &ConvexBody) -> f64 {
    match body {
        ConvexBody::Polytope(p) => {
            let m = p.vertices.len();
            let mut best = 0.0_f64;
            for i in 0..m {
                for j in i + 1..m {
                    let d2: f64 = p.vertices[i]
                        .iter()
                        .zip(&p.vertices[j])
                        .map(|(a, b)| (a - b) * (a - b))
                        .sum();
                    best = best.max(d2);
                }
            }
            best.sqrt()
        }
        ConvexBody::Revolution(r) => r.diameter(),
    }
}

/// Rescale a body by `lambda`.
pub fn scaled(body: &ConvexBody, lambda: f64) -> ConvexBody {
    match body {
        ConvexBody::Polytope(p) => ConvexBody::Polytope(Polytope {
            n: p.n,
            vertices: p
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * lambda).collect())
                .collect(),
            faces: p.faces.clone(),
        }),
        ConvexBody::Revolution(r) => ConvexBody::Revolution(r.scaled(lambda)),
    }
}

fn arr3(v: &[f64]) -> [f64; 3] {
    [v[0], v[1], v[2]]
}

/// Signed distance of every input point to the hull boundary; nonpositive
/// means inside. Used by the containment tests.
pub fn max_signed_distance(p: &Polytope, points: &[Vec<f64>]) -> f64 {
    let mut worst = f64::NEG_INFINITY;
    if p.n == 2 {
        let m = p.vertices.len();
        for q in points {
            let mut inside = f64::NEG_INFINITY;
            for i in 0..m {
                let a = &p.vertices[i];
                let b = &p.vertices[(i + 1) % m];
                // Outward side of edge (a, b) in CCW order is to the right.
                let ex = b[0] - a[0];
                let ey = b[1] - a[1];
                let len = (ex * ex + ey * ey).sqrt();
                let d = ((q[0] - a[0]) * ey - (q[1] - a[1]) * ex) / len;
                inside = inside.max(d);
            }
            worst = worst.max(inside);
        }
    } else {
        for q in points {
            let qa = arr3(q);
            let mut inside = f64::NEG_INFINITY;
            for f in &p.faces {
                let a = arr3(&p.vertices[f[0]]);
                let b = arr3(&p.vertices[f[1]]);
                let c = arr3(&p.vertices[f[2]]);
                let nrm = cross3(sub(b, a), sub(c, a));
                inside = inside.max(dot3(nrm, sub(qa, a)) / norm3(nrm));
            }
            worst = worst.max(inside);
        }
    }
    worst
}

// ---------------------------------------------------------------------------
// Cauchy formula

/// Monte Carlo evaluation of the Cauchy formula
/// `P(F) = (|S^{n-1}| / omega_{n-1}) E_nu[ H^{n-1}(F_nu) ]` with uniform
/// directions `nu`; returns the estimate and its standard error.
pub fn cauchy_perimeter(p: &Polytope, directions: usize, seed: u64) -> Result<(f64, f64)> {
    if directions < 1000 {
        return Err(Error::InvalidParameter(format!(
            "need at least 1000 directions, got {directions}"
        )));
    }
    if p.vertices.len() < p.n + 1 {
        return Err(Error::DegenerateInput("too few vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = 0.0;
    let mut sumsq = 0.0;
    for _ in 0..directions {
        let measure = if p.n == 2 {
            let (mut x, mut y): (f64, f64) = (rng.sample(StandardNormal), rng.sample(StandardNormal));
            let nn = (x * x + y * y).sqrt();
            if nn < 1e-12 {
                x = 1.0;
                y = 0.0;
            } else {
                x /= nn;
                y /= nn;
            }
            // Projection onto the line orthogonal to nu = (x, y).
            let (wx, wy) = (-y, x);
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for v in &p.vertices {
                let t = v[0] * wx + v[1] * wy;
                lo = lo.min(t);
                hi = hi.max(t);
            }
            hi - lo
        } else {
            let mut nu = [0.0_f64; 3];
            loop {
                for c in &mut nu {
                    *c = rng.sample(StandardNormal);
                }
                let nn = norm3(nu);
                if nn > 1e-12 {
                    for c in &mut nu {
                        *c /= nn;
                    }
                    break;
                }
            }
            // Orthonormal basis of nu^perp.
            let seed_axis = if nu[0].abs() < 0.9 {
                [1.0, 0.0, 0.0]
            } else {
                [0.0, 1.0, 0.0]
            };
            let mut u = cross3(seed_axis, nu);
            let un = norm3(u);
            for c in &mut u {
                *c /= un;
            }
            let w = cross3(nu, u);
            let proj: Vec<(f64, f64)> = p
                .vertices
                .iter()
                .map(|v| {
                    let a = arr3(v);
                    (dot3(a, u), dot3(a, w))
                })
                .collect();
            match hull_2d(&proj) {
                Ok(h) => {
                    let m = h.len();
                    0.5 * (0..m)
                        .map(|i| {
                            let a = h[i];
                            let b = h[(i + 1) % m];
                            a.0 * b.1 - b.0 * a.1
                        })
                        .sum::<f64>()
                        .abs()
                }
                Err(_) => 0.0,
            }
        };
        sum += measure;
        sumsq += measure * measure;
    }
    let m = directions as f64;
    let mean = sum / m;
    let var = (sumsq / m - mean * mean).max(0.0) / (m - 1.0);
    let factor = geom::sphere_area(p.n)? / geom::unit_ball_volume(p.n - 1)?;
    Ok((factor * mean, factor * var.sqrt()))
}

// ---------------------------------------------------------------------------
// deficits and bounds

/// Isoperimetric deficit `P / (n |B|^{1/n} |F|^{(n-1)/n}) - 1`.
pub fn delta_prime(body: &ConvexBody) -> Result<f64> {
    let n = body.dimension();
    let vol = volume(body);
    if !(vol > f64::MIN_POSITIVE) {
        return Err(Error::ZeroVolume);
    }
    let per = perimeter(body);
    let ball = geom::unit_ball_volume(n)?;
    Ok(per / (n as f64 * ball.powf(1.0 / n as f64) * vol.powf((n as f64 - 1.0) / n as f64)) - 1.0)
}

/// Fixed-diameter perimeter bound: rescale the body to diameter 2 and return
/// `P(B) - P(F)`, which the perimeter bound keeps nonnegative (Reuleaux
/// polygons achieve equality in the plane).
pub fn check_perimeter_bound(body: &ConvexBody) -> Result<f64> {
    let d = diameter(body);
    if !(d > 0.0) {
        return Err(Error::DegenerateInput("zero-diameter body".into()));
    }
    let rescaled = scaled(body, 2.0 / d);
    let n = body.dimension();
    Ok(geom::sphere_area(n)? - perimeter(&rescaled))
}

/// Deficit comparison for a profile: returns
/// `(delta(E), delta'(convex envelope of E))` at the diameter-2 scale; the
/// second never exceeds the first (up to tolerance).
pub fn check_deficit_lemma(p: &RadialProfile) -> Result<(f64, f64)> {
    let (norm, _) = p.normalized_to_diameter_two()?;
    let delta = norm.isodiametric_deficit()?;
    let hull = hull_of_profile(&norm, 8e-5)?;
    let dp = delta_prime(&hull)?;
    Ok((delta, dp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::geom::unit_ball_volume;
    use std::f64::consts::PI;

    fn dim(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn square_hull_perimeter_area() {
        let pts = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
            vec![0.5, 0.5],
            vec![0.25, 0.75],
        ];
        let hull = convex_hull(&pts, 2).unwrap();
        if let ConvexBody::Polytope(p) = &hull {
            assert_eq!(p.vertices().len(), 4);
            assert!(max_signed_distance(p, &pts) < 1e-12);
        }
        assert!((perimeter(&hull) - 4.0).abs() < 1e-12);
        assert!((volume(&hull) - 1.0).abs() < 1e-12);
        assert!((diameter(&hull) - 2f64.sqrt()).abs() < 1e-12);
        // delta'(square) = 2/sqrt(pi) - 1.
        let dp = delta_prime(&hull).unwrap();
        assert!((dp - (2.0 / PI.sqrt() - 1.0)).abs() < 1e-12);
        assert!((dp - 0.128_379_167_095_512_57).abs() < 1e-12);
    }

    #[test]
    fn triangle_hull_absorbs_interior_points() {
        let pts = vec![
            vec![0.0, 0.0],
            vec![2.0, 0.0],
            vec![0.0, 2.0],
            vec![0.5, 0.5],
            vec![0.3, 0.2],
        ];
        let hull = convex_hull(&pts, 2).unwrap();
        if let ConvexBody::Polytope(p) = &hull {
            assert_eq!(p.vertices().len(), 3);
        }
        assert!((volume(&hull) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn tetrahedron_surface_area() {
        // Regular tetrahedron from alternating cube vertices (edge sqrt(2)).
        let hull = convex_hull(
            &[
                vec![0.0, 0.0, 0.0],
                vec![1.0, 1.0, 0.0],
                vec![1.0, 0.0, 1.0],
                vec![0.0, 1.0, 1.0],
            ],
            3,
        )
        .unwrap();
        let edge = 2f64.sqrt();
        let expect = 3f64.sqrt() * edge * edge;
        assert!((perimeter(&hull) - expect).abs() < 1e-12);
        assert!((volume(&hull) - 1.0 / 3.0).abs() < 1e-12);
        // Edge-1 tetrahedron by rescaling: surface area sqrt(3).
        let unit = scaled(&hull, 1.0 / edge);
        assert!((perimeter(&unit) - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hull3_of_cube_with_interior_points() {
        let mut pts = Vec::new();
        for x in [0.0, 1.0] {
            for y in [0.0, 1.0] {
                for z in [0.0, 1.0] {
                    pts.push(vec![x, y, z]);
                }
            }
        }
        pts.push(vec![0.5, 0.5, 0.5]);
        pts.push(vec![0.2, 0.8, 0.4]);
        let hull = convex_hull(&pts, 3).unwrap();
        assert!((volume(&hull) - 1.0).abs() < 1e-12);
        assert!((perimeter(&hull) - 6.0).abs() < 1e-12);
        if let ConvexBody::Polytope(p) = &hull {
            assert_eq!(p.vertices().len(), 8);
            assert!(max_signed_distance(p, &pts) < 1e-12);
        }
    }

    #[test]
    fn degenerate_hulls_error() {
        let flat3 = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 1.0, 0.0],
        ];
        assert!(convex_hull(&flat3, 3).is_err());
        let collinear = vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0]];
        assert!(convex_hull(&collinear, 2).is_err());
    }

    #[test]
    fn hull_of_ball_profile_is_ball() {
        let p = RadialProfile::ball(dim(3));
        let hull = hull_of_profile(&p, 8e-5).unwrap();
        let nb = unit_ball_volume(3).unwrap();
        assert!((volume(&hull) - nb).abs() < 1e-4 * nb);
        assert!((perimeter(&hull) - 3.0 * nb).abs() < 1e-4 * nb);
        assert!((diameter(&hull) - 2.0).abs() < 1e-9);
        // Polygonized hull stays inside the ball: margin nonnegative.
        let margin = check_perimeter_bound(&hull).unwrap();
        assert!(margin >= 0.0 && margin < 1e-4);
    }

    #[test]
    fn hull_of_notched_ball_is_ball() {
        let p = construct::ball_minus_ball(dim(3), 0.3, 0.4).unwrap();
        let hull = hull_of_profile(&p, 8e-5).unwrap();
        let nb = unit_ball_volume(3).unwrap();
        assert!((volume(&hull) - nb).abs() < 1e-4 * nb);
        assert!((diameter(&hull) - 2.0).abs() < 1e-9);
        let (delta, dp) = check_deficit_lemma(&p).unwrap();
        assert!((delta - 0.027 / 0.973).abs() < 1e-6);
        assert!(dp <= delta + 1e-8);
        assert!(dp.abs() < 1e-6);
    }

    #[test]
    fn revolution_of_half_ball_profile() {
        // v = pi/2 on [0, 1] is the upper half ball; its hull adds the flat
        // disk face, giving volume |B|/2 and perimeter |S|/2 + disk.
        let p = crate::profile::RadialProfile::constant_angle(
            dim(3),
            crate::geom::CapAngle::new(PI / 2.0).unwrap(),
        );
        let hull = hull_of_profile(&p, 8e-5).unwrap();
        let vb = unit_ball_volume(3).unwrap();
        assert!((volume(&hull) - vb / 2.0).abs() < 1e-4);
        let expect_p = 0.5 * geom::sphere_area(3).unwrap() + PI;
        assert!((perimeter(&hull) - expect_p).abs() < 1e-3);
    }

    #[test]
    fn cauchy_formula_matches_direct_perimeter() {
        // 256-gon approximating the unit disk.
        let pts: Vec<Vec<f64>> = (0..256)
            .map(|i| {
                let th = 2.0 * PI * i as f64 / 256.0;
                vec![th.cos(), th.sin()]
            })
            .collect();
        let hull = convex_hull(&pts, 2).unwrap();
        if let ConvexBody::Polytope(p) = &hull {
            let direct = perimeter(&hull);
            let (est, se) = cauchy_perimeter(p, 20_000, 7).unwrap();
            assert!((est - direct).abs() < 3.0 * se + 1e-9, "est {est} direct {direct} se {se}");
            assert!((est - 2.0 * PI).abs() < 0.02);
        }
        // Unit square: mean width based perimeter 4.
        let sq = convex_hull(
            &[
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0],
                vec![0.0, 1.0],
            ],
            2,
        )
        .unwrap();
        if let ConvexBody::Polytope(p) = &sq {
            let (est, se) = cauchy_perimeter(p, 50_000, 11).unwrap();
            assert!((est - 4.0).abs() < 3.0 * se);
        }
        // Regular tetrahedron, direct facet sum as oracle.
        let tet = convex_hull(
            &[
                vec![0.0, 0.0, 0.0],
                vec![1.0, 1.0, 0.0],
                vec![1.0, 0.0, 1.0],
                vec![0.0, 1.0, 1.0],
            ],
            3,
        )
        .unwrap();
        if let ConvexBody::Polytope(p) = &tet {
            let direct = perimeter(&tet);
            let (est, se) = cauchy_perimeter(p, 50_000, 13).unwrap();
            assert!((est - direct).abs() < 3.0 * se, "{est} vs {direct} ({se})");
        }
        if let ConvexBody::Polytope(p) = &sq {
            assert!(cauchy_perimeter(p, 10, 1).is_err());
        }
    }

    #[test]
    fn perimeter_bound_for_reuleaux_and_thin_bodies() {
        // Reuleaux triangle as a fine polygon: margin tends to 0+.
        let shape = construct::reuleaux(3, 2.0).unwrap();
        let pts: Vec<Vec<f64>> = shape
            .boundary_points(4096)
            .into_iter()
            .map(|p| p.to_vec())
            .collect();
        let hull = convex_hull(&pts, 2).unwrap();
        let margin = check_perimeter_bound(&hull).unwrap();
        assert!(margin >= -1e-6, "margin {margin}");
        assert!(margin < 1e-4, "margin should vanish, got {margin}");
        // Thin sliver: margin near P(B).
        let thin = convex_hull(
            &[
                vec![-1.0, 0.0],
                vec![1.0, 0.0],
                vec![0.0, 0.01],
                vec![0.0, -0.01],
            ],
            2,
        )
        .unwrap();
        let thin_margin = check_perimeter_bound(&thin).unwrap();
        assert!(thin_margin > 0.0);
        assert!(thin_margin > 0.3 * geom::sphere_area(2).unwrap());
    }

    #[test]
    fn delta_prime_scale_invariant() {
        let pts = vec![
            vec![0.0, 0.0],
            vec![1.3, 0.2],
            vec![1.1, 1.4],
            vec![-0.2, 0.9],
        ];
        let hull = convex_hull(&pts, 2).unwrap();
        let d0 = delta_prime(&hull).unwrap();
        for lam in [0.1, 7.3] {
            let dl = delta_prime(&scaled(&hull, lam)).unwrap();
            assert!((dl - d0).abs() < 1e-10);
        }
        assert!(d0 >= 0.0);
    }

    #[test]
    fn polytope_json_round_trip() {
        let pts = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ];
        let hull = convex_hull(&pts, 2).unwrap();
        if let ConvexBody::Polytope(p) = hull {
            let s = serde_json::to_string(&p).unwrap();
            assert!(s.contains("\"vertices\""));
            let back: Polytope = serde_json::from_str(&s).unwrap();
            assert_eq!(back.vertices().len(), 4);
        }
    }

    #[test]
    fn profile_boundary_points_inside_hull() {
        let p = construct::build_profile(dim(3), &construct::family_high(0.2, 0.05).unwrap())
            .unwrap();
        let hull = hull_of_profile(&p, 8e-5).unwrap();
        if let ConvexBody::Revolution(rev) = &hull {
            let samples = p.meridian_boundary_samples(1e-3);
            let mut step = samples.len() / 1000;
            if step == 0 {
                step = 1;
            }
            for (rho, z) in samples.into_iter().step_by(step) {
                assert!(
                    rho <= rev.radius_at(z) + 1e-9,
                    "boundary point ({rho}, {z}) outside hull (radius {})",
                    rev.radius_at(z)
                );
            }
        }
    }
}
