//! Seeded experiment harness: decay-rate sweeps over the nearly-optimal
//! families, log-log slope fits, seeded corpora, and the verification suite
//! behind the CLI `verify` subcommand.

use crate::construct::{self, CapFunctionPair, ReuleauxShape};
use crate::convex::{self, ConvexBody};
use crate::geom::{self, ConstantsTable, Dimension};
use crate::profile::RadialProfile;
use crate::rearrange::{self, IndicatorSet, SignedBall};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{E, PI, TAU};

// ---------------------------------------------------------------------------
// decay laws

/// The sharp decay law phi_n for the outer radius:
/// sqrt(delta) for n = 2, sqrt(delta max(|log delta|, 1)) for n = 3,
/// delta^(2/(n+1)) for n >= 4.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DecayLaw {
    Sqrt,
    SqrtLog,
    Power(f64),
}

impl DecayLaw {
    pub fn for_dimension(n: Dimension) -> DecayLaw {
        match n.get() {
            2 => DecayLaw::Sqrt,
            3 => DecayLaw::SqrtLog,
            m => DecayLaw::Power(2.0 / (m as f64 + 1.0)),
        }
    }

    pub fn eval(self, delta: f64) -> f64 {
        match self {
            DecayLaw::Sqrt => delta.sqrt(),
            DecayLaw::SqrtLog => (delta * delta.ln().abs().max(1.0)).sqrt(),
            DecayLaw::Power(p) => delta.powf(p),
        }
    }
}

/// phi_n(delta) for positive delta; increasing with phi_n(0+) = 0, and
/// phi_n(t) <= 3 e^-1 t^(1/n) for t <= e^-1.
pub fn phi(n: Dimension, delta: f64) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "phi needs positive delta, got {delta}"
        )));
    }
    let val = DecayLaw::for_dimension(n).eval(delta);
    debug_assert!(
        delta > 1.0 / E || val <= 3.0 / E * delta.powf(1.0 / n.get() as f64) + 1e-12
    );
    Ok(val)
}

// ---------------------------------------------------------------------------
// families

/// A buildable family, parsed from the CLI grammar:
/// `n2`, `high:n=4,rho=0.01`, `n3:c=0.19,theta=0.7`,
/// `ballminus:r=0.2,x=0.5`, `reuleaux:k=7`.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    N2,
    High { n: usize, rho: f64 },
    N3 { c: f64, theta: f64 },
    BallMinus { n: usize, r: Option<f64>, offset: f64 },
    Reuleaux { k: usize },
}

impl Family {
    pub fn parse(spec: &str) -> Result<Family> {
        let (head, rest) = match spec.split_once(':') {
            Some((h, r)) => (h, r),
            None => (spec, ""),
        };
        let mut kv = std::collections::BTreeMap::new();
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::UnknownFamily(format!("bad parameter `{part}` in `{spec}`")))?;
            let num: f64 = v
                .parse()
                .map_err(|_| Error::UnknownFamily(format!("bad number `{v}` in `{spec}`")))?;
            kv.insert(k.trim().to_string(), num);
        }
        match head {
            "n2" => Ok(Family::N2),
            "high" => Ok(Family::High {
                n: kv.get("n").copied().unwrap_or(4.0) as usize,
                rho: kv.get("rho").copied().unwrap_or(0.01),
            }),
            "n3" => Ok(Family::N3 {
                c: kv.get("c").copied().unwrap_or(construct::N3_DEFAULT_C),
                theta: kv
                    .get("theta")
                    .copied()
                    .unwrap_or(construct::N3_DEFAULT_THETA),
            }),
            "ballminus" => Ok(Family::BallMinus {
                n: kv.get("n").copied().unwrap_or(3.0) as usize,
                r: kv.get("r").copied(),
                offset: kv.get("x").copied().unwrap_or(0.5),
            }),
            "reuleaux" => Ok(Family::Reuleaux {
                k: kv.get("k").copied().unwrap_or(3.0) as usize,
            }),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn dimension(&self) -> Result<Dimension> {
        match self {
            Family::N2 | Family::Reuleaux { .. } => Dimension::new(2),
            Family::N3 { .. } => Dimension::new(3),
            Family::High { n, .. } => Dimension::new(*n),
            Family::BallMinus { n, .. } => Dimension::new(*n),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Family::N2 => "n2".into(),
            Family::High { n, rho } => format!("high:n={n},rho={rho}"),
            Family::N3 { c, theta } => format!("n3:c={c},theta={theta}"),
            Family::BallMinus { n, r, offset } => match r {
                Some(r) => format!("ballminus:n={n},r={r},x={offset}"),
                None => format!("ballminus:n={n},x={offset}"),
            },
            Family::Reuleaux { k } => format!("reuleaux:k={k}"),
        }
    }

    /// The epsilon grid the experiments default to.
    pub fn default_eps_grid(&self) -> Vec<f64> {
        match self {
            Family::N2 => (4..=10).map(|k| 2f64.powi(-k)).collect(),
            Family::High { .. } => (2..=6).map(|k| 2f64.powi(-k)).collect(),
            Family::N3 { .. } => (3..=7).map(|k| (-(k as f64)).exp()).collect(),
            Family::BallMinus { .. } => vec![0.4, 0.3, 0.2, 0.15, 0.1],
            Family::Reuleaux { .. } => Vec::new(),
        }
    }
}

/// Outcome of building one family member.
pub enum Built {
    Profile {
        profile: RadialProfile,
        pair: Option<CapFunctionPair>,
    },
    Shape(ReuleauxShape),
}

/// Build one member of a family. `eps` is the family parameter: epsilon for
/// the cap constructions, the notch radius for `ballminus`; ignored for
/// `reuleaux`.
pub fn build_family(family: &Family, eps: Option<f64>) -> Result<Built> {
    let need_eps = || {
        eps.ok_or_else(|| {
            Error::InvalidParameter(format!("family {} needs --eps", family.label()))
        })
    };
    match family {
        Family::N2 => {
            let pair = construct::family_n2(need_eps()?)?;
            let profile = construct::build_profile(Dimension::new(2)?, &pair)?;
            Ok(Built::Profile {
                profile,
                pair: Some(pair),
            })
        }
        Family::High { n, rho } => {
            let pair = construct::family_high(need_eps()?, *rho)?;
            let profile = construct::build_profile(Dimension::new(*n)?, &pair)?;
            Ok(Built::Profile {
                profile,
                pair: Some(pair),
            })
        }
        Family::N3 { c, theta } => {
            let pair = construct::family_n3(need_eps()?, *c, *theta)?;
            let profile = construct::build_profile(Dimension::new(3)?, &pair)?;
            Ok(Built::Profile {
                profile,
                pair: Some(pair),
            })
        }
        Family::BallMinus { n, r, offset } => {
            let radius = eps.or(*r).ok_or_else(|| {
                Error::InvalidParameter("ballminus needs r= or --eps".into())
            })?;
            let profile = construct::ball_minus_ball(Dimension::new(*n)?, radius, *offset)?;
            Ok(Built::Profile {
                profile,
                pair: None,
            })
        }
        Family::Reuleaux { k } => Ok(Built::Shape(construct::reuleaux(*k, 2.0)?)),
    }
}

// ---------------------------------------------------------------------------
// decay experiments

/// One experiment row: every functional evaluated on one family member.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecayRow {
    pub eps: f64,
    pub diam: f64,
    pub volume: f64,
    pub delta: f64,
    /// Deficit upper bound from the cap-pair integral (NaN when the family
    /// has no cap pair).
    pub bound: f64,
    pub delta_prime_hull: f64,
    pub r_out: f64,
    pub r_in: f64,
    pub symdiff_min: f64,
    pub thm_main_margin: f64,
    pub perimeter_margin: f64,
}

/// Least-squares fit of log(delta) against log(eps) plus the monitored ratio
/// series of a family sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecayFit {
    pub family: String,
    pub n: usize,
    pub eps_grid: Vec<f64>,
    pub deltas: Vec<f64>,
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the log-log fit.
    pub residual: f64,
    pub ratio_name: String,
    pub ratio_series: Vec<f64>,
    pub rows: Vec<DecayRow>,
    /// Whether the largest epsilon was dropped from the fit as
    /// pre-asymptotic (residual more than twice the median).
    pub dropped_largest_eps: bool,
}

/// Ordinary least squares of y against x; returns (slope, intercept, rms).
pub fn fit_line(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let m = x.len() as f64;
    let mx = x.iter().sum::<f64>() / m;
    let my = y.iter().sum::<f64>() / m;
    let sxx: f64 = x.iter().map(|v| (v - mx) * (v - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rms = (x
        .iter()
        .zip(y)
        .map(|(a, b)| {
            let r = b - (intercept + slope * a);
            r * r
        })
        .sum::<f64>()
        / m)
        .sqrt();
    (slope, intercept, rms)
}

fn evaluate_row(family: &Family, eps: f64) -> Result<DecayRow> {
    let built = build_family(family, Some(eps))?;
    let (profile, pair) = match built {
        Built::Profile { profile, pair } => (profile, pair),
        Built::Shape(_) => {
            return Err(Error::InvalidParameter(
                "decay experiments need a profile family".into(),
            ))
        }
    };
    let n = profile.dimension();
    let rep = profile.report()?;
    let bound = match &pair {
        Some(p) => construct::deficit_upper_bound(n, p, profile.volume())?,
        None => f64::NAN,
    };
    let (_, dp_hull) = convex::check_deficit_lemma(&profile)?;
    let hull = convex::hull_of_profile(&profile, 8e-5)?;
    let perimeter_margin = convex::check_perimeter_bound(&hull)?;
    Ok(DecayRow {
        eps,
        diam: rep.diameter,
        volume: rep.volume,
        delta: rep.delta,
        bound,
        delta_prime_hull: dp_hull,
        r_out: rep.r_out,
        r_in: rep.r_in,
        symdiff_min: rep.symdiff_min,
        thm_main_margin: rep.thm_main_margin,
        perimeter_margin,
    })
}

/// Run a family sweep over a strictly decreasing epsilon grid (at least 5
/// values), fit the log-log decay slope, and populate the family's monitored
/// ratio series. The `seed` only matters for families with stochastic
/// functionals; the sweep itself is deterministic.
pub fn decay_experiment(family: &Family, eps_list: &[f64], _seed: u64) -> Result<DecayFit> {
    if eps_list.len() < 5 {
        return Err(Error::InvalidParameter(format!(
            "need at least 5 epsilons, got {}",
            eps_list.len()
        )));
    }
    for w in eps_list.windows(2) {
        if !(w[1] < w[0]) {
            return Err(Error::InvalidParameter(
                "epsilon grid must decrease strictly".into(),
            ));
        }
    }
    let n = family.dimension()?;
    let rows: Vec<DecayRow> = eps_list
        .par_iter()
        .map(|&eps| evaluate_row(family, eps))
        .collect::<Result<Vec<_>>>()?;

    let deltas: Vec<f64> = rows.iter().map(|r| r.delta).collect();
    for (&d, &e) in deltas.iter().zip(eps_list) {
        if !(d > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "nonpositive deficit {d} at eps {e}"
            )));
        }
    }
    let lx: Vec<f64> = eps_list.iter().map(|e| e.ln()).collect();
    let ly: Vec<f64> = deltas.iter().map(|d| d.ln()).collect();
    let (mut slope, mut intercept, mut residual) = fit_line(&lx, &ly);

    // Drop the largest epsilon when clearly pre-asymptotic: its residual
    // exceeding twice the median residual magnitude.
    let mut dropped = false;
    {
        let mut res: Vec<f64> = lx
            .iter()
            .zip(&ly)
            .map(|(a, b)| (b - (intercept + slope * a)).abs())
            .collect();
        let head = res[0];
        res.sort_by(|a, b| a.total_cmp(b));
        let median = res[res.len() / 2];
        if eps_list.len() > 5 && head > 2.0 * median && median > 0.0 {
            let (s2, i2, r2) = fit_line(&lx[1..], &ly[1..]);
            slope = s2;
            intercept = i2;
            residual = r2;
            dropped = true;
        }
    }

    let (ratio_name, ratio_series): (String, Vec<f64>) = match family {
        Family::N3 { .. } => (
            "delta*|log eps|/eps^2".into(),
            rows.iter()
                .map(|r| r.delta * r.eps.ln().abs() / (r.eps * r.eps))
                .collect(),
        ),
        Family::BallMinus { .. } => (
            "r_in/delta^(1/n)".into(),
            rows.iter()
                .map(|r| r.r_in / r.delta.powf(1.0 / n.get() as f64))
                .collect(),
        ),
        _ => (
            "r_out/phi_n(delta)".into(),
            rows.iter()
                .map(|r| r.r_out / DecayLaw::for_dimension(n).eval(r.delta))
                .collect(),
        ),
    };

    Ok(DecayFit {
        family: family.label(),
        n: n.get(),
        eps_grid: eps_list.to_vec(),
        deltas,
        slope,
        intercept,
        residual,
        ratio_name,
        ratio_series,
        rows,
        dropped_largest_eps: dropped,
    })
}

/// Flat CSV of experiment rows, one line per (family, eps).
pub fn decay_csv(fits: &[DecayFit]) -> String {
    let mut out = String::from(
        "family,eps,diam,volume,delta,bound,delta_prime_hull,r_out,r_in,symdiff_min,thm_main_margin,perimeter_margin\n",
    );
    for fit in fits {
        for r in &fit.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                fit.family,
                r.eps,
                r.diam,
                r.volume,
                r.delta,
                r.bound,
                r.delta_prime_hull,
                r.r_out,
                r.r_in,
                r.symdiff_min,
                r.thm_main_margin,
                r.perimeter_margin
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// corpora

pub mod corpus {
    //! Seeded corpora: random profiles, random polytopes, disjoint ball
    //! unions. Everything is a pure function of (dimension, seed).

    use super::*;

    /// Random piecewise-smooth profile on [0, 1] with 256 grid intervals.
    pub fn random_profile(n: Dimension, seed: u64) -> RadialProfile {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nodes = 257usize;
        let base: f64 = rng.gen_range(0.2..0.95);
        let tilt: f64 = rng.gen_range(-0.6..0.4);
        let amp1: f64 = rng.gen_range(0.0..0.35);
        let freq1: f64 = rng.gen_range(0.5..3.0);
        let phase1: f64 = rng.gen_range(0.0..TAU);
        let amp2: f64 = rng.gen_range(0.0..0.12);
        let freq2: f64 = rng.gen_range(3.0..8.0);
        let phase2: f64 = rng.gen_range(0.0..TAU);
        let mut grid = Vec::with_capacity(nodes);
        let mut v = Vec::with_capacity(nodes);
        for i in 0..nodes {
            let x = i as f64 / (nodes - 1) as f64;
            grid.push(x);
            let raw = base
                + tilt * x
                + amp1 * (TAU * freq1 * x + phase1).sin()
                + amp2 * (TAU * freq2 * x + phase2).sin();
            v.push(PI * raw.clamp(0.0, 1.0));
        }
        // Keep the set solid enough to have positive volume.
        let vmax = v.iter().fold(0.0_f64, |a, &b| a.max(b));
        if vmax < 0.15 * PI {
            for val in &mut v {
                *val = (*val + 0.3 * PI).min(PI);
            }
        }
        RadialProfile::new(n, grid, v).expect("generated profile is valid")
    }

    /// `count` points uniform in the unit ball of R^n.
    pub fn uniform_ball_points(n: usize, count: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
        let mut pts = Vec::with_capacity(count);
        for _ in 0..count {
            let mut p: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
            let nn = p.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-12);
            let radius: f64 = rng.gen_range(0.0f64..1.0).powf(1.0 / n as f64);
            for c in &mut p {
                *c *= radius / nn;
            }
            pts.push(p);
        }
        pts
    }

    /// Random hull of 10..=200 uniform points in the ball, rescaled to
    /// diameter 2.
    pub fn random_polytope(n: usize, seed: u64) -> Result<ConvexBody> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(10..=200);
        let pts = uniform_ball_points(n, m, &mut rng);
        let hull = convex::convex_hull(&pts, n)?;
        let d = convex::diameter(&hull);
        Ok(convex::scaled(&hull, 2.0 / d))
    }

    /// 2 to 4 pairwise disjoint balls with known union volume and diameter.
    pub fn random_disjoint_balls(n: Dimension, seed: u64) -> Vec<SignedBall> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let count = rng.gen_range(2..=4usize);
        let mut balls: Vec<SignedBall> = Vec::new();
        let mut radius_cap = 0.35;
        while balls.len() < count {
            let mut placed = false;
            for _ in 0..64 {
                let mut c: Vec<f64> = (0..n.get())
                    .map(|_| rng.sample::<f64, _>(StandardNormal))
                    .collect();
                let nn = c.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-12);
                let rad_pos: f64 = rng.gen_range(0.0f64..0.8);
                for x in &mut c {
                    *x *= rad_pos / nn;
                }
                let r = rng.gen_range(0.08..radius_cap);
                let ok = balls.iter().all(|b| {
                    let d: f64 = b
                        .center
                        .iter()
                        .zip(&c)
                        .map(|(a, q)| (a - q) * (a - q))
                        .sum::<f64>()
                        .sqrt();
                    d >= b.radius + r + 0.02
                });
                if ok {
                    balls.push(SignedBall {
                        center: c,
                        radius: r,
                        sign: 1,
                    });
                    placed = true;
                    break;
                }
            }
            if !placed {
                radius_cap = (radius_cap * 0.7).max(0.05);
            }
        }
        balls
    }
}

// ---------------------------------------------------------------------------
// verification suite

/// Corpus sizes for the verification checks; the defaults match the
/// acceptance tolerances and budgets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusSizes {
    pub random_profiles_per_dim: usize,
    pub random_hulls: usize,
    pub profile_hulls: usize,
    pub rearrange_sets: usize,
    pub rearrange_grid: usize,
    pub rearrange_samples: usize,
    pub cauchy_polytopes: usize,
    pub cauchy_directions: usize,
}

impl Default for CorpusSizes {
    fn default() -> Self {
        CorpusSizes {
            random_profiles_per_dim: 1000,
            random_hulls: 1000,
            profile_hulls: 200,
            rearrange_sets: 50,
            rearrange_grid: 512,
            rearrange_samples: 10_000,
            cauchy_polytopes: 20,
            cauchy_directions: 100_000,
        }
    }
}

/// One verification check: pass flag, the worst margin observed (positive
/// means slack), and a short human-readable summary.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub worst_margin: f64,
    pub details: String,
}

impl CheckResult {
    fn new(name: &str, pass: bool, worst_margin: f64, details: String) -> Self {
        CheckResult {
            name: name.into(),
            pass,
            worst_margin,
            details,
        }
    }
}

/// Full verification report; serializes to deterministic JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub sizes: CorpusSizes,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The decay fits of the four sharp-family sweeps, shared by several checks.
pub struct FamilyFits {
    pub n2: DecayFit,
    pub high4: DecayFit,
    pub high5: DecayFit,
    pub n3: DecayFit,
}

pub mod checks {
    //! Individual verification checks. Each returns a [`CheckResult`] whose
    //! `worst_margin` is positive when the property holds with slack.

    use super::*;

    /// Closed-form agreement of cap areas and ball volumes, quadrature-route
    /// agreement, and the inverse-cap round trip.
    pub fn closed_forms() -> CheckResult {
        let mut worst = f64::INFINITY;
        let mut fail = String::new();
        let tol = 1e-10;

        let cases: Vec<(f64, f64)> = vec![
            (geom::unit_ball_volume(2).unwrap(), PI),
            (geom::unit_ball_volume(3).unwrap(), 4.0 * PI / 3.0),
            (geom::unit_ball_volume(4).unwrap(), PI * PI / 2.0),
            (geom::unit_ball_volume(5).unwrap(), 8.0 * PI * PI / 15.0),
            (geom::unit_ball_volume(6).unwrap(), PI.powi(3) / 6.0),
            (
                geom::cap_area(Dimension::new(2).unwrap(), geom::CapAngle::FULL),
                2.0 * PI,
            ),
            (
                geom::cap_area(
                    Dimension::new(3).unwrap(),
                    geom::CapAngle::new(PI / 2.0).unwrap(),
                ),
                2.0 * PI,
            ),
            (
                geom::cap_area(
                    Dimension::new(3).unwrap(),
                    geom::CapAngle::new(PI / 3.0).unwrap(),
                ),
                PI,
            ),
        ];
        for (got, want) in cases {
            worst = worst.min(tol - (got - want).abs());
        }
        for n in 2..=8 {
            let d = Dimension::new(n).unwrap();
            for i in 0..=200 {
                let alpha = PI * i as f64 / 200.0;
                let a = geom::cap_area(d, geom::CapAngle::new(alpha).unwrap());
                let q = geom::cap_area_quadrature(d, geom::CapAngle::new(alpha).unwrap());
                worst = worst.min(tol - (a - q).abs());
                let back = geom::inverse_cap_area(d, a).unwrap().radians();
                worst = worst.min(tol - (back - alpha).abs());
            }
        }
        if worst < 0.0 {
            fail = "a closed-form comparison exceeded 1e-10".into();
        }
        CheckResult::new(
            "closed_forms",
            worst >= 0.0,
            worst,
            if fail.is_empty() {
                format!("max closed-form error {:.3e}", tol - worst)
            } else {
                fail
            },
        )
    }

    /// psi(s, t) <= pi sqrt(t - s) on 100x100 grids, 1e-12 slack.
    pub fn psi_bound() -> CheckResult {
        let mut worst = f64::INFINITY;
        for &eps in &[0.1, 0.2, 0.4] {
            for i in 0..100 {
                for j in i..100 {
                    let s = eps * i as f64 / 99.0;
                    let t = eps * j as f64 / 99.0;
                    let p = geom::psi(s, t, eps).unwrap().radians();
                    worst = worst.min(PI * (t - s).sqrt() + 1e-12 - p);
                }
            }
        }
        CheckResult::new(
            "psi_clearance_bound",
            worst >= 0.0,
            worst,
            format!("min(pi*sqrt(t-s) + 1e-12 - psi) = {worst:.3e}"),
        )
    }

    /// Notched-ball oracle: delta = r^n/(1 - r^n) (1e-6), r_in = r (1e-4),
    /// r_out = 0 (1e-8), for r in {0.1..0.5} and n in {2,3,4}.
    pub fn ball_minus_ball_oracle() -> CheckResult {
        let radii = [0.1, 0.2, 0.3, 0.4, 0.5];
        let dims = [2usize, 3, 4];
        let cases: Vec<(usize, f64)> = dims
            .iter()
            .flat_map(|&n| radii.iter().map(move |&r| (n, r)))
            .collect();
        let results: Vec<(f64, f64, f64)> = cases
            .par_iter()
            .map(|&(n, r)| {
                let d = Dimension::new(n).unwrap();
                let offset = 0.5 * (1.0 - r);
                let p = construct::ball_minus_ball(d, r, offset).unwrap();
                let delta = p.isodiametric_deficit().unwrap();
                let expect = r.powi(n as i32) / (1.0 - r.powi(n as i32));
                (
                    (delta - expect).abs(),
                    (p.r_in() - r).abs(),
                    p.r_out().abs(),
                )
            })
            .collect();
        let delta_err = results.iter().map(|r| r.0).fold(0.0, f64::max);
        let rin_err = results.iter().map(|r| r.1).fold(0.0, f64::max);
        let rout_err = results.iter().map(|r| r.2).fold(0.0, f64::max);
        let worst = (1e-6 - delta_err)
            .min(1e-4 - rin_err)
            .min(1e-8 - rout_err);
        CheckResult::new(
            "ball_minus_ball_oracle",
            worst >= 0.0,
            worst,
            format!(
                "max |delta err| {delta_err:.2e}, |r_in err| {rin_err:.2e}, r_out {rout_err:.2e}"
            ),
        )
    }

    /// Build the four family sweeps once.
    pub fn family_fits(seed: u64) -> Result<FamilyFits> {
        let n2 = decay_experiment(&Family::N2, &Family::N2.default_eps_grid(), seed)?;
        let high = |n: usize| Family::High { n, rho: 0.01 };
        let high4 = decay_experiment(&high(4), &high(4).default_eps_grid(), seed)?;
        let high5 = decay_experiment(&high(5), &high(5).default_eps_grid(), seed)?;
        let fam3 = Family::N3 {
            c: construct::N3_DEFAULT_C,
            theta: construct::N3_DEFAULT_THETA,
        };
        let n3 = decay_experiment(&fam3, &fam3.default_eps_grid(), seed)?;
        Ok(FamilyFits {
            n2,
            high4,
            high5,
            n3,
        })
    }

    /// |diam - 2| <= 1e-5 across every constructed family member.
    pub fn construction_diameter(fits: &FamilyFits) -> CheckResult {
        let mut err = 0.0_f64;
        for fit in [&fits.n2, &fits.high4, &fits.high5, &fits.n3] {
            for r in &fit.rows {
                err = err.max((r.diam - 2.0).abs());
            }
        }
        CheckResult::new(
            "construction_diameter",
            err <= 1e-5,
            1e-5 - err,
            format!("max |diam - 2| = {err:.3e}"),
        )
    }

    /// delta <= bound + 1e-8 for every constructed pair.
    pub fn deficit_bound(fits: &FamilyFits) -> CheckResult {
        let mut excess = f64::NEG_INFINITY;
        for fit in [&fits.n2, &fits.high4, &fits.high5, &fits.n3] {
            for r in &fit.rows {
                excess = excess.max(r.delta - r.bound);
            }
        }
        CheckResult::new(
            "deficit_upper_bound",
            excess <= 1e-8,
            1e-8 - excess,
            format!("max(delta - bound) = {excess:.3e}"),
        )
    }

    /// n = 2 rates: slope in [1.9, 2.1], r_out >= eps/3 - 1e-5, ratio band
    /// bounded by a factor 10.
    pub fn rate_n2(fits: &FamilyFits) -> CheckResult {
        let fit = &fits.n2;
        let slope_ok = (1.9..=2.1).contains(&fit.slope);
        let mut rout_margin = f64::INFINITY;
        for r in &fit.rows {
            rout_margin = rout_margin.min(r.r_out - (r.eps / 3.0 - 1e-5));
        }
        let ratio_hi = fit.ratio_series.iter().fold(0.0_f64, |a, &b| a.max(b));
        let ratio_lo = fit
            .ratio_series
            .iter()
            .fold(f64::INFINITY, |a, &b| a.min(b));
        let band = ratio_hi / ratio_lo;
        let pass = slope_ok && rout_margin >= 0.0 && band <= 10.0 && fit.residual <= 0.05;
        CheckResult::new(
            "rate_n2",
            pass,
            rout_margin.min(10.0 - band),
            format!(
                "slope {:.4}, residual {:.4}, min(r_out - eps/3) margin {:.2e}, ratio band {:.2}",
                fit.slope, fit.residual, rout_margin, band
            ),
        )
    }

    /// n >= 4 rates: slope in [2.4, 2.6] for n = 4 and [2.9, 3.1] for n = 5.
    pub fn rate_high(fits: &FamilyFits) -> CheckResult {
        let s4 = fits.high4.slope;
        let s5 = fits.high5.slope;
        let pass = (2.4..=2.6).contains(&s4)
            && (2.9..=3.1).contains(&s5)
            && fits.high4.residual <= 0.05
            && fits.high5.residual <= 0.05;
        let margin = (s4 - 2.4)
            .min(2.6 - s4)
            .min(s5 - 2.9)
            .min(3.1 - s5);
        CheckResult::new(
            "rate_high_n",
            pass,
            margin,
            format!(
                "slope(n=4) {:.4} (residual {:.4}), slope(n=5) {:.4} (residual {:.4})",
                s4, fits.high4.residual, s5, fits.high5.residual
            ),
        )
    }

    /// n = 3 log-corrected rate: delta |log eps| / eps^2 positive with
    /// max/min <= 3 over the epsilon grid.
    pub fn rate_n3(fits: &FamilyFits) -> CheckResult {
        let ratios = &fits.n3.ratio_series;
        let hi = ratios.iter().fold(0.0_f64, |a, &b| a.max(b));
        let lo = ratios.iter().fold(f64::INFINITY, |a, &b| a.min(b));
        let pass = lo > 0.0 && hi / lo <= 3.0;
        CheckResult::new(
            "rate_n3_log",
            pass,
            3.0 - hi / lo,
            format!("ratio range [{lo:.4}, {hi:.4}], max/min = {:.3}", hi / lo),
        )
    }

    /// Stability-theorem sign: C(n) sqrt(delta) - symdiff/(3|B|) >= -1e-8 on
    /// the families and on seeded random profiles in n = 2, 3, 4.
    pub fn main_theorem_margin(fits: &FamilyFits, seed: u64, per_dim: usize) -> CheckResult {
        let mut worst = f64::INFINITY;
        for fit in [&fits.n2, &fits.high4, &fits.high5, &fits.n3] {
            for r in &fit.rows {
                worst = worst.min(r.thm_main_margin);
            }
        }
        let corpus_worst: f64 = [2usize, 3, 4]
            .par_iter()
            .map(|&n| {
                let d = Dimension::new(n).unwrap();
                let table = ConstantsTable::for_dimension(d);
                let ball = geom::unit_ball_volume(n).unwrap();
                (0..per_dim)
                    .into_par_iter()
                    .map(|i| {
                        let p =
                            corpus::random_profile(d, seed ^ (n as u64) << 32 ^ i as u64);
                        let (norm, _) = p.normalized_to_diameter_two().unwrap();
                        let delta = norm.isodiametric_deficit().unwrap();
                        let (_, sd) = norm.best_symdiff();
                        table.c * delta.max(0.0).sqrt() - sd / (3.0 * ball)
                    })
                    .reduce(|| f64::INFINITY, f64::min)
            })
            .reduce(|| f64::INFINITY, f64::min);
        worst = worst.min(corpus_worst);
        CheckResult::new(
            "main_theorem_margin",
            worst >= -1e-8,
            worst + 1e-8,
            format!("min margin {worst:.3e} over families and {per_dim}x3 random profiles"),
        )
    }

    /// Perimeter bound P(F) <= P(B) + 1e-6 on random hulls and profile
    /// hulls, delta'(hull) <= delta(E) + 1e-8 on profile hulls, and Reuleaux
    /// perimeters equal to pi d both exactly and polygonized.
    pub fn perimeter_bound_and_lemma(
        seed: u64,
        hulls: usize,
        profile_hulls: usize,
    ) -> CheckResult {
        // Random polytopes in n = 2, 3.
        let hull_margin: f64 = (0..hulls)
            .into_par_iter()
            .map(|i| {
                let n = if i % 2 == 0 { 2 } else { 3 };
                let body = corpus::random_polytope(n, seed ^ 0xabc0 ^ i as u64).unwrap();
                convex::check_perimeter_bound(&body).unwrap()
            })
            .reduce(|| f64::INFINITY, f64::min);

        // Profile hulls across n = 2..6.
        let dims = [2usize, 3, 4, 5, 6];
        let (lemma_margin, profile_margin): (f64, f64) = (0..profile_hulls)
            .into_par_iter()
            .map(|i| {
                let n = dims[i % dims.len()];
                let d = Dimension::new(n).unwrap();
                let p = corpus::random_profile(d, seed ^ 0xdef0 ^ i as u64);
                let (delta, dp) = convex::check_deficit_lemma(&p).unwrap();
                let (norm, _) = p.normalized_to_diameter_two().unwrap();
                let hull = convex::hull_of_profile(&norm, 8e-5).unwrap();
                let pm = convex::check_perimeter_bound(&hull).unwrap();
                (delta - dp, pm)
            })
            .reduce(
                || (f64::INFINITY, f64::INFINITY),
                |a, b| (a.0.min(b.0), a.1.min(b.1)),
            );

        // Reuleaux polygons: exact arcs and polygonization.
        let mut reuleaux_exact = 0.0_f64;
        let mut reuleaux_poly = 0.0_f64;
        for &k in &[3usize, 5, 7] {
            let shape = construct::reuleaux(k, 2.0).unwrap();
            reuleaux_exact = reuleaux_exact.max((shape.perimeter() - 2.0 * PI).abs());
            let pts: Vec<Vec<f64>> = shape
                .boundary_points(4096)
                .into_iter()
                .map(|p| p.to_vec())
                .collect();
            let hull = convex::convex_hull(&pts, 2).unwrap();
            reuleaux_poly = reuleaux_poly.max((convex::perimeter(&hull) - 2.0 * PI).abs());
        }

        let worst = (hull_margin + 1e-6)
            .min(profile_margin + 1e-6)
            .min(lemma_margin + 1e-8)
            .min(1e-9 - reuleaux_exact)
            .min(1e-4 - reuleaux_poly);
        CheckResult::new(
            "perimeter_bound_and_lemma",
            worst >= 0.0,
            worst,
            format!(
                "min perimeter margin {:.3e} (hulls) / {:.3e} (profiles), min(delta - delta') {:.3e}, reuleaux |P - pi d| exact {:.2e} poly {:.2e}",
                hull_margin, profile_margin, lemma_margin, reuleaux_exact, reuleaux_poly
            ),
        )
    }

    /// Cauchy-formula Monte Carlo against the direct perimeter: within 1%
    /// relative error and 3 reported standard errors, for random polytopes.
    pub fn cauchy_formula(seed: u64, polytopes: usize, directions: usize) -> CheckResult {
        let results: Vec<(f64, f64)> = (0..polytopes)
            .into_par_iter()
            .map(|i| {
                let n = if i % 2 == 0 { 2 } else { 3 };
                let body = corpus::random_polytope(n, seed ^ 0x0ca0 ^ i as u64).unwrap();
                let direct = convex::perimeter(&body);
                if let ConvexBody::Polytope(p) = &body {
                    let (est, se) = convex::cauchy_perimeter(p, directions, seed ^ i as u64)
                        .unwrap();
                    ((est - direct).abs() / direct, (est - direct).abs() / se)
                } else {
                    unreachable!()
                }
            })
            .collect();
        let worst_rel = results.iter().map(|r| r.0).fold(0.0, f64::max);
        let worst_z = results.iter().map(|r| r.1).fold(0.0, f64::max);
        let worst = (0.01 - worst_rel).min(3.0 - worst_z);
        CheckResult::new(
            "cauchy_formula",
            worst >= 0.0,
            worst,
            format!("max relative error {worst_rel:.4e}, max |z| {worst_z:.2}"),
        )
    }

    /// Unbiasedness across seeds: the mean signed error over 20 seeds stays
    /// within 3 pooled standard errors of zero.
    pub fn cauchy_unbiased(seed: u64) -> CheckResult {
        let body = convex::convex_hull(
            &[
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0],
                vec![0.0, 1.0],
            ],
            2,
        )
        .unwrap();
        let (errs, ses): (Vec<f64>, Vec<f64>) = (0..20u64)
            .into_par_iter()
            .map(|i| {
                if let ConvexBody::Polytope(p) = &body {
                    let (est, se) = convex::cauchy_perimeter(p, 20_000, seed ^ (101 + i)).unwrap();
                    (est - 4.0, se)
                } else {
                    unreachable!()
                }
            })
            .unzip();
        let mean = errs.iter().sum::<f64>() / errs.len() as f64;
        let pooled = (ses.iter().map(|s| s * s).sum::<f64>()).sqrt() / ses.len() as f64;
        let pass = mean.abs() <= 3.0 * pooled;
        CheckResult::new(
            "cauchy_unbiased",
            pass,
            3.0 * pooled - mean.abs(),
            format!("mean error {mean:.3e}, pooled se {pooled:.3e}"),
        )
    }

    /// Rearrangement: volume preservation within 3 sigma and diameter
    /// monotonicity on disjoint ball unions; pointwise slice reproduction on
    /// a profile set.
    pub fn rearrangement(seed: u64, sets: usize, grid: usize, samples: usize) -> CheckResult {
        let results: Vec<(f64, f64)> = (0..sets)
            .into_par_iter()
            .map(|i| {
                let n = Dimension::new(2 + i % 3).unwrap();
                let balls = corpus::random_disjoint_balls(n, seed ^ 0xbead ^ i as u64);
                let set = IndicatorSet::from_balls(n, balls).unwrap();
                let known_vol = set.known_volume.unwrap();
                let known_diam = set.known_diameter.unwrap();
                let out = rearrange::rearrange_sc(&set, grid, samples, seed ^ i as u64).unwrap();
                let vol_margin =
                    3.0 * out.volume_se - (out.profile.volume() - known_vol).abs();
                let diam_margin = known_diam + 2.0 * out.diameter_tolerance()
                    - out.profile.diameter();
                (vol_margin, diam_margin)
            })
            .collect();
        let vol_worst = results.iter().map(|r| r.0).fold(f64::INFINITY, f64::min);
        let diam_worst = results.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);

        // Idempotence on a profile set: slice fractions reproduce the
        // profile's cap fractions within 3 sigma at 32 probe radii.
        let d3 = Dimension::new(3).unwrap();
        let base = construct::ball_minus_ball(d3, 0.3, 0.4).unwrap();
        let oracle = IndicatorSet::from_profile(&base).unwrap();
        let sphere = geom::sphere_area(3).unwrap();
        let idem_worst: f64 = (1..=32)
            .into_par_iter()
            .map(|j| {
                let r = oracle.r_bound() * j as f64 / 33.0;
                let est = rearrange::slice_angle(&oracle, r, samples.max(2000), seed ^ j as u64)
                    .unwrap();
                let expect = geom::cap_area_raw(3, base.angle_at(r)) / sphere;
                3.0 * est.se_fraction.max(1.0 / samples as f64) - (est.fraction - expect).abs()
            })
            .reduce(|| f64::INFINITY, f64::min);

        let worst = vol_worst.min(diam_worst).min(idem_worst);
        CheckResult::new(
            "rearrangement",
            worst >= 0.0,
            worst,
            format!(
                "min margins: volume 3sigma {vol_worst:.3e}, diameter {diam_worst:.3e}, idempotence {idem_worst:.3e}"
            ),
        )
    }

    /// phi examples and the inequality phi_n(t) <= 3/e t^(1/n) on (0, 1/e].
    pub fn phi_inequality() -> CheckResult {
        let mut worst = f64::INFINITY;
        let d2 = Dimension::new(2).unwrap();
        let d3 = Dimension::new(3).unwrap();
        let d5 = Dimension::new(5).unwrap();
        worst = worst.min(1e-12 - (phi(d2, 0.04).unwrap() - 0.2).abs());
        worst = worst.min(
            1e-12 - (phi(d3, (-2.0_f64).exp()).unwrap() - (2.0 * (-2.0_f64).exp()).sqrt()).abs(),
        );
        worst = worst.min(1e-12 - (phi(d5, 1e-3).unwrap() - 0.1).abs());
        for n in 2..=8 {
            let d = Dimension::new(n).unwrap();
            for i in 1..=500 {
                let t = (1.0 / E) * i as f64 / 500.0;
                let margin = 3.0 / E * t.powf(1.0 / n as f64) - phi(d, t).unwrap();
                worst = worst.min(margin);
            }
        }
        CheckResult::new(
            "phi_inequality",
            worst >= 0.0,
            worst,
            format!("min margin {worst:.3e}"),
        )
    }

    /// Byte-identical outputs for identical seeds.
    pub fn determinism(seed: u64) -> CheckResult {
        let fam = Family::BallMinus {
            n: 2,
            r: None,
            offset: 0.4,
        };
        let grid = fam.default_eps_grid();
        let a = decay_experiment(&fam, &grid, seed).unwrap();
        let b = decay_experiment(&fam, &grid, seed).unwrap();
        let csv_a = decay_csv(std::slice::from_ref(&a));
        let csv_b = decay_csv(std::slice::from_ref(&b));
        let d2 = Dimension::new(2).unwrap();
        let set = IndicatorSet::from_balls(
            d2,
            vec![SignedBall {
                center: vec![0.2, 0.0],
                radius: 0.5,
                sign: 1,
            }],
        )
        .unwrap();
        let ra = rearrange::rearrange_sc(&set, 64, 1500, seed).unwrap();
        let rb = rearrange::rearrange_sc(&set, 64, 1500, seed).unwrap();
        let ja = serde_json::to_string(&ra.profile).unwrap();
        let jb = serde_json::to_string(&rb.profile).unwrap();
        let pass = csv_a == csv_b && ja == jb;
        CheckResult::new(
            "seed_determinism",
            pass,
            if pass { 1.0 } else { -1.0 },
            "identical seeds reproduce identical CSV and profile bytes".into(),
        )
    }

    /// Corrupted inputs surface as validation errors, not panics.
    pub fn validation_surface() -> CheckResult {
        let good = serde_json::to_string(&RadialProfile::ball(Dimension::new(2).unwrap()))
            .unwrap();
        let bad = good.replacen("3.141592653589793", "9.5", 1);
        let profile_err = serde_json::from_str::<RadialProfile>(&bad).is_err();
        let angle_err = geom::CapAngle::new(4.0).is_err();
        let dim_err = Dimension::new(9).is_err();
        let pass = profile_err && angle_err && dim_err;
        CheckResult::new(
            "validation_surface",
            pass,
            if pass { 1.0 } else { -1.0 },
            "out-of-range angles, dimensions and corrupted profiles are rejected".into(),
        )
    }
}

/// Run every check on seeded corpora. Failures are report entries, never
/// panics; the report serializes to byte-stable JSON for a fixed seed.
pub fn verify_suite(seed: u64, sizes: &CorpusSizes) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    checks.push(checks::closed_forms());
    checks.push(checks::psi_bound());
    checks.push(checks::phi_inequality());
    checks.push(checks::validation_surface());
    checks.push(checks::ball_minus_ball_oracle());

    let fits = checks::family_fits(seed)?;
    checks.push(checks::construction_diameter(&fits));
    checks.push(checks::deficit_bound(&fits));
    checks.push(checks::rate_n2(&fits));
    checks.push(checks::rate_high(&fits));
    checks.push(checks::rate_n3(&fits));
    checks.push(checks::main_theorem_margin(
        &fits,
        seed,
        sizes.random_profiles_per_dim,
    ));
    checks.push(checks::perimeter_bound_and_lemma(
        seed,
        sizes.random_hulls,
        sizes.profile_hulls,
    ));
    checks.push(checks::cauchy_formula(
        seed,
        sizes.cauchy_polytopes,
        sizes.cauchy_directions,
    ));
    checks.push(checks::cauchy_unbiased(seed));
    checks.push(checks::rearrangement(
        seed,
        sizes.rearrange_sets,
        sizes.rearrange_grid,
        sizes.rearrange_samples,
    ));
    checks.push(checks::determinism(seed));

    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport {
        seed,
        sizes: sizes.clone(),
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples_and_errors() {
        let d2 = Dimension::new(2).unwrap();
        assert!((phi(d2, 0.04).unwrap() - 0.2).abs() < 1e-15);
        assert!(phi(d2, 0.0).is_err());
        assert!(phi(d2, -1.0).is_err());
        let d4 = Dimension::new(4).unwrap();
        assert!((phi(d4, 1e-5).unwrap() - 1e-2).abs() < 1e-12);
    }

    #[test]
    fn family_parsing() {
        assert_eq!(Family::parse("n2").unwrap(), Family::N2);
        assert_eq!(
            Family::parse("high:n=4,rho=0.01").unwrap(),
            Family::High { n: 4, rho: 0.01 }
        );
        match Family::parse("n3:c=0.19,theta=0.7").unwrap() {
            Family::N3 { c, theta } => {
                assert!((c - 0.19).abs() < 1e-12);
                assert!((theta - 0.7).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
        match Family::parse("ballminus:r=0.2,x=0.5").unwrap() {
            Family::BallMinus { n, r, offset } => {
                assert_eq!(n, 3);
                assert_eq!(r, Some(0.2));
                assert!((offset - 0.5).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(Family::parse("reuleaux:k=7").unwrap(), Family::Reuleaux { k: 7 });
        assert!(Family::parse("dodecahedron").is_err());
        assert!(Family::parse("high:rho").is_err());
    }

    #[test]
    fn fit_line_recovers_slope() {
        let x: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let y: Vec<f64> = x.iter().map(|v| 3.0 * v - 1.0).collect();
        let (s, i, r) = fit_line(&x, &y);
        assert!((s - 3.0).abs() < 1e-12);
        assert!((i + 1.0).abs() < 1e-12);
        assert!(r < 1e-12);
    }

    #[test]
    fn decay_experiment_validates_grid() {
        let fam = Family::N2;
        assert!(decay_experiment(&fam, &[0.01, 0.02, 0.005, 0.002, 0.001], 0).is_err());
        assert!(decay_experiment(&fam, &[0.01, 0.005, 0.002], 0).is_err());
    }

    #[test]
    fn ballminus_decay_has_slope_n() {
        // delta = r^n/(1 - r^n) ~ r^n, so the log-log slope approaches n.
        let fam = Family::BallMinus {
            n: 2,
            r: None,
            offset: 0.3,
        };
        let grid = [0.2, 0.15, 0.1, 0.075, 0.05];
        let fit = decay_experiment(&fam, &grid, 0).unwrap();
        assert!(
            (fit.slope - 2.0).abs() < 0.1,
            "slope {} should be near 2",
            fit.slope
        );
        // r_in/delta^(1/n) ratio is (1 - r^n)^(1/n), close to 1.
        for v in &fit.ratio_series {
            assert!((v - 1.0).abs() < 0.05, "ratio {v}");
        }
        let csv = decay_csv(std::slice::from_ref(&fit));
        assert!(csv.lines().count() == 6);
        assert!(csv.starts_with("family,eps,diam"));
    }

    #[test]
    fn corpus_profiles_are_valid_and_deterministic() {
        let d = Dimension::new(3).unwrap();
        for seed in 0..20 {
            let p = corpus::random_profile(d, seed);
            assert!(p.volume() > 0.0, "seed {seed}");
            let q = corpus::random_profile(d, seed);
            assert_eq!(p.angles(), q.angles());
        }
    }

    #[test]
    fn corpus_balls_disjoint() {
        let d = Dimension::new(3).unwrap();
        for seed in 0..20 {
            let balls = corpus::random_disjoint_balls(d, seed);
            assert!(balls.len() >= 2);
            for (i, a) in balls.iter().enumerate() {
                for b in &balls[i + 1..] {
                    let dist: f64 = a
                        .center
                        .iter()
                        .zip(&b.center)
                        .map(|(x, y)| (x - y) * (x - y))
                        .sum::<f64>()
                        .sqrt();
                    assert!(dist >= a.radius + b.radius);
                }
            }
        }
    }

    #[test]
    fn quick_checks_pass() {
        assert!(checks::closed_forms().pass);
        assert!(checks::psi_bound().pass);
        assert!(checks::phi_inequality().pass);
        assert!(checks::validation_surface().pass);
    }
}
