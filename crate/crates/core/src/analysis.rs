//! Closed forms behind the per-edge rounding guarantee, plus grid certifiers and a
//! Monte Carlo cross-check.
//!
//! For one edge write `x = x_u·x_0`, `y = x_v·x_0`, `z = x_u·x_v`. With
//!
//! ```text
//! ρ(x, y, z) = (z - xy) / (√(1-x²) √(1-y²))            (0 when x or y is ±1)
//! F(x, y, z) = arccos ρ - (π/4)(1 - z + x - y)/(1 - y)
//! Δ(x, y)    = 4π⁴(1-x²)(1-y²) - 64π²(1-y)²
//! α(x, y)    = (π/4) √(1-x²) √(1-y²) / (1 - y)
//! G(x, y)    = π - arccsc α - (π/4)(1 + x) - √(α² - 1)
//! ```
//!
//! the rounding separates `u` and `v` with probability at least `(1 - z + y - x)/4`
//! whenever the four triangle inequalities hold. The certifiers scan closed lattices
//! over the relevant domains and report the worst margin found; they are numerical
//! evidence, not proofs.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::rounding::Rounder;
use crate::sdp::{build_relaxation, mix_seed, VectorSolution};

/// `ρ` values this far outside `[-1, 1]` are rounding noise and get clamped.
pub const RHO_CLAMP: f64 = 1e-12;

/// Slack used when testing membership in the triangle box and the unit cube.
pub const DOMAIN_TOL: f64 = 1e-12;

/// `(x, y, z) = (x_u·x_0, x_v·x_0, x_u·x_v)` for one edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfigTriple {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ConfigTriple {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let t = Self { x, y, z };
        if [x, y, z].iter().any(|v| v.is_nan() || v.abs() > 1.0 + DOMAIN_TOL) {
            return Err(t.invalid("coordinates must lie in [-1, 1]"));
        }
        Ok(t)
    }

    fn invalid(&self, reason: &'static str) -> Error {
        Error::InvalidTriple {
            x: self.x,
            y: self.y,
            z: self.z,
            reason,
        }
    }

    /// Determinant of the Gram matrix of `x_0, x_u, x_v`.
    pub fn gram_det(&self) -> f64 {
        let Self { x, y, z } = *self;
        1.0 + 2.0 * x * y * z - x * x - y * y - z * z
    }

    /// `|x + y| - 1 ≤ z ≤ 1 - |y - x|`, i.e. `(x_0 ± x_u)·(x_0 ± x_v) ≥ 0`.
    pub fn in_triangle_box(&self) -> bool {
        let Self { x, y, z } = *self;
        (x + y).abs() - 1.0 <= z + DOMAIN_TOL && z <= 1.0 - (y - x).abs() + DOMAIN_TOL
    }

    /// Per-edge objective term `(1 - z + y - x)/4`.
    pub fn dicut_term(&self) -> f64 {
        (1.0 - self.z + self.y - self.x) / 4.0
    }

    /// Applies the swap `(x, y) ↦ (y, x)` and the swap-and-negate `(x, y) ↦ (-y, -x)`
    /// until `|x| ≤ y`.
    pub fn reduced(&self) -> Self {
        let (mut x, mut y) = (self.x, self.y);
        if x > y {
            std::mem::swap(&mut x, &mut y);
        }
        if x.abs() > y.abs() {
            (x, y) = (-y, -x);
        }
        Self { x, y, z: self.z }
    }
}

impl fmt::Display for ConfigTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

pub fn rho(t: &ConfigTriple) -> Result<f64> {
    let ConfigTriple { x, y, z } = *t;
    if x.abs() == 1.0 || y.abs() == 1.0 {
        return Ok(0.0);
    }
    let r = (z - x * y) / ((1.0 - x * x).sqrt() * (1.0 - y * y).sqrt());
    if r.is_nan() || r.abs() > 1.0 + RHO_CLAMP {
        return Err(t.invalid("not realizable by unit vectors (|ρ| > 1)"));
    }
    Ok(r.clamp(-1.0, 1.0))
}

pub fn big_f(t: &ConfigTriple) -> Result<f64> {
    if t.y >= 1.0 {
        return Err(Error::Domain("F needs y < 1".into()));
    }
    let ConfigTriple { x, y, z } = *t;
    Ok(rho(t)?.acos() - FRAC_PI_4 * (1.0 - z + x - y) / (1.0 - y))
}

pub fn delta(x: f64, y: f64) -> f64 {
    4.0 * PI.powi(4) * (1.0 - x * x) * (1.0 - y * y) - 64.0 * PI * PI * (1.0 - y).powi(2)
}

pub fn alpha(x: f64, y: f64) -> Result<f64> {
    if y >= 1.0 {
        return Err(Error::Domain("α needs y < 1".into()));
    }
    Ok(FRAC_PI_4 * (1.0 - x * x).sqrt() * (1.0 - y * y).sqrt() / (1.0 - y))
}

/// `arccsc a = arcsin(1/a)` on `a ≥ 1`.
pub fn arccsc(a: f64) -> f64 {
    (1.0 / a).asin()
}

pub fn big_g(x: f64, y: f64) -> Result<f64> {
    let a = alpha(x, y)?;
    if a < 1.0 - RHO_CLAMP {
        return Err(Error::Domain(format!("G needs α ≥ 1, got α = {a}")));
    }
    let a = a.max(1.0);
    Ok(PI - arccsc(a) - FRAC_PI_4 * (1.0 + x) - (a * a - 1.0).sqrt())
}

/// Lower stationary point of `z ↦ F(x, y, z)`, `xy - √Δ/(2π²)`, when `Δ ≥ 0`.
pub fn stationary_min(x: f64, y: f64) -> Option<f64> {
    let d = delta(x, y);
    (d >= 0.0).then(|| x * y - d.sqrt() / (2.0 * PI * PI))
}

/// Exact probability that the threshold-plus-hyperplane rounding separates `u` and `v`,
/// with `a` uniform on `[0, 1]` and a uniform hyperplane conditioned on `H(x_0) = 1`.
pub fn separation_probability(t: &ConfigTriple) -> Result<f64> {
    if !t.in_triangle_box() {
        return Err(t.invalid("outside the triangle box"));
    }
    let r = t.reduced();
    let hyperplane = (1.0 - r.y) / PI * rho(&r)?.acos();
    let p = if r.x <= 0.0 {
        -r.x + (r.x + r.y) / 2.0 + hyperplane
    } else {
        (r.y - r.x) / 2.0 + hyperplane
    };
    Ok(p.clamp(0.0, 1.0))
}

/// Unit vectors in `R³` with Gram matrix `[[1, x, y], [x, 1, z], [y, z, 1]]` over
/// `(x_0, x_u, x_v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealizedTriple {
    pub x0: [f64; 3],
    pub xu: [f64; 3],
    pub xv: [f64; 3],
}

pub fn realize_vectors(t: &ConfigTriple) -> Result<RealizedTriple> {
    let ConfigTriple { x, y, z } = *t;
    if t.gram_det() < -DOMAIN_TOL {
        return Err(t.invalid("Gram matrix is not positive semidefinite"));
    }
    let su = (1.0 - x * x).max(0.0).sqrt();
    let (b, c) = if su > 1e-15 {
        let b = (z - x * y) / su;
        (b, (1.0 - y * y - b * b).max(0.0).sqrt())
    } else {
        // x_u = ±x_0, so z = ±y and x_v only needs the right component along x_0.
        ((1.0 - y * y).max(0.0).sqrt(), 0.0)
    };
    let out = RealizedTriple {
        x0: [1.0, 0.0, 0.0],
        xu: [x, su, 0.0],
        xv: [y, b, c],
    };
    let dot = |p: &[f64; 3], q: &[f64; 3]| p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
    let errors = [
        dot(&out.xu, &out.x0) - x,
        dot(&out.xv, &out.x0) - y,
        dot(&out.xu, &out.xv) - z,
        dot(&out.xu, &out.xu) - 1.0,
        dot(&out.xv, &out.xv) - 1.0,
    ];
    if errors.iter().any(|e| e.abs() > 1e-9) {
        return Err(t.invalid("Gram matrix is not positive semidefinite"));
    }
    Ok(out)
}

/// Worst margin of an inequality over a scanned domain.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificationReport {
    pub domain: String,
    pub step: f64,
    pub points: usize,
    /// Lattice points dropped by a domain filter (non-realizable, hypothesis not met, ...).
    pub skipped: usize,
    pub min_margin: f64,
    /// `(x, y, z)` at the minimum margin.
    pub witness: [f64; 3],
    pub tol: f64,
    pub passed: bool,
}

impl CertificationReport {
    fn new(domain: impl Into<String>, step: f64, tol: f64) -> Self {
        Self {
            domain: domain.into(),
            step,
            points: 0,
            skipped: 0,
            min_margin: f64::INFINITY,
            witness: [f64::NAN; 3],
            tol,
            passed: false,
        }
    }

    fn record(&mut self, point: [f64; 3], margin: f64) {
        self.points += 1;
        if margin < self.min_margin {
            self.min_margin = margin;
            self.witness = point;
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.points > 0 && self.min_margin >= -self.tol;
        self
    }

    pub const CSV_HEADER: &'static str = "x,y,z,margin";

    pub fn witness_csv_row(&self) -> String {
        let [x, y, z] = self.witness;
        [x, y, z, self.min_margin].map(sig12).join(",")
    }

    pub fn to_text(&self) -> String {
        format!(
            "{}: {} (step {}, {} points, {} skipped, min margin {:.6e} at {}, tol {:e})",
            self.domain,
            if self.passed { "PASS" } else { "FAIL" },
            self.step,
            self.points,
            self.skipped,
            self.min_margin,
            self.witness.map(sig12).join(", "),
            self.tol
        )
    }
}

/// Decimal rendering with 12 significant digits.
pub fn sig12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

/// `lo, lo + step, …` strictly below `hi`, then `hi` itself.
pub fn closed_lattice(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    if hi < lo {
        return Vec::new();
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    let mut out: Vec<f64> = (0..=count).map(|k| lo + k as f64 * step).collect();
    if out.last().is_some_and(|&v| hi - v > 1e-9 * step) {
        out.push(hi);
    } else if let Some(last) = out.last_mut() {
        *last = hi;
    }
    out
}

fn check_step(step: f64) -> Result<()> {
    if !(step > 0.0 && step <= 0.1) {
        return Err(Error::Domain(format!("grid step {step} outside (0, 0.1]")));
    }
    Ok(())
}

/// `y ∈ [0, 1)` (or `[0, 1]` with `include_top`) and `x ∈ [-y, y]` on a lattice of the
/// given step; `x` and `y` are multiples of `step` except at the box edges.
fn reduced_xy(step: f64, include_top: bool) -> impl Iterator<Item = (f64, f64)> {
    closed_lattice(0.0, 1.0, step)
        .into_iter()
        .filter(move |&y| include_top || y < 1.0)
        .flat_map(move |y| closed_lattice(-y, y, step).into_iter().map(move |x| (x, y)))
}

/// `F(x, y, z) ≥ 0` for `|x| ≤ y < 1`, `x + y - 1 ≤ z ≤ 1 - y + x`.
pub fn certify_f_nonneg(step: f64, tol: f64) -> Result<CertificationReport> {
    check_step(step)?;
    let mut report = CertificationReport::new("F(x,y,z) >= 0 on |x| <= y < 1, x+y-1 <= z <= 1-y+x", step, tol);
    for (x, y) in reduced_xy(step, false) {
        for z in closed_lattice(x + y - 1.0, 1.0 - y + x, step) {
            match big_f(&ConfigTriple { x, y, z }) {
                Ok(f) => report.record([x, y, z], f),
                Err(_) => report.skipped += 1,
            }
        }
    }
    Ok(report.finish())
}

/// `G(x, y) ≥ 0` for `|x| ≤ y < 1`, `Δ ≥ 0` and `xy - √Δ/(2π²) ≥ x + y - 1`.
pub fn certify_g_nonneg(step: f64, tol: f64) -> Result<CertificationReport> {
    check_step(step)?;
    let mut report = CertificationReport::new(
        "G(x,y) >= 0 on |x| <= y < 1, Delta >= 0, xy - sqrt(Delta)/(2 pi^2) >= x+y-1",
        step,
        tol,
    );
    for (x, y) in reduced_xy(step, false) {
        match g_domain_point(x, y) {
            Some(z) => match big_g(x, y) {
                Ok(g) => report.record([x, y, z], g),
                Err(_) => report.skipped += 1,
            },
            None => report.skipped += 1,
        }
    }
    Ok(report.finish())
}

/// The local-minimum location when `(x, y)` satisfies the hypotheses of the `G` bound.
pub fn g_domain_point(x: f64, y: f64) -> Option<f64> {
    if !(x.abs() <= y && y < 1.0) {
        return None;
    }
    stationary_min(x, y).filter(|&z| z >= x + y - 1.0)
}

/// `((1 - y)/π) arccos ρ ≥ (1 - z + x - y)/4` for `|x| ≤ y ≤ 1`,
/// `x + y - 1 ≤ z ≤ 1 - y + x`, including the `y = 1` edge.
pub fn certify_bound(step: f64, tol: f64) -> Result<CertificationReport> {
    check_step(step)?;
    let mut report = CertificationReport::new(
        "((1-y)/pi) acos(rho) >= (1-z+x-y)/4 on |x| <= y <= 1, x+y-1 <= z <= 1-y+x",
        step,
        tol,
    );
    for (x, y) in reduced_xy(step, true) {
        for z in closed_lattice(x + y - 1.0, 1.0 - y + x, step) {
            match bound_margin(&ConfigTriple { x, y, z }) {
                Ok(m) => report.record([x, y, z], m),
                Err(_) => report.skipped += 1,
            }
        }
    }
    Ok(report.finish())
}

pub fn bound_margin(t: &ConfigTriple) -> Result<f64> {
    let ConfigTriple { x, y, z } = *t;
    Ok((1.0 - y) / PI * rho(t)?.acos() - (1.0 - z + x - y) / 4.0)
}

/// Closed-form per-edge guarantee: `separation_probability ≥ (1 - z + y - x)/4` on every
/// lattice point of the full triangle box.
pub fn certify_configuration(step: f64, tol: f64) -> Result<CertificationReport> {
    check_step(step)?;
    let mut report = CertificationReport::new(
        "Pr[c(u) != c(v)] >= (1-z+y-x)/4 on the triangle box",
        step,
        tol,
    );
    let grid = closed_lattice(-1.0, 1.0, step);
    for &x in &grid {
        for &y in &grid {
            for z in closed_lattice((x + y).abs() - 1.0, 1.0 - (y - x).abs(), step) {
                let t = ConfigTriple { x, y, z };
                match separation_probability(&t) {
                    Ok(p) => report.record([x, y, z], p - t.dicut_term()),
                    Err(_) => report.skipped += 1,
                }
            }
        }
    }
    Ok(report.finish())
}

/// Checks at `z = xy - √Δ/(2π²)` that `arccos ρ = π - arccsc α` and
/// `(π/4)(1 - z + x - y)/(1 - y) = (π/4)(1 + x) + √(α² - 1)`, for `samples` seeded
/// `(x, y)` with `Δ ≥ 0`. Where the two stationary points are well separated it also
/// checks by central differences that `F` turns from decreasing to increasing at the
/// lower one and back at the upper one.
pub fn certify_substitutions(samples: usize, seed: u64) -> CertificationReport {
    const TOL: f64 = 1e-9;
    const FD_H: f64 = 1e-7;
    let mut report = CertificationReport::new(
        "arccos rho = pi - arccsc alpha and the linear-term identity at z = xy - sqrt(Delta)/(2 pi^2); \
         F' sign changes at xy -+ sqrt(Delta)/(2 pi^2)",
        0.0,
        TOL,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while report.points < samples {
        let x: f64 = rng.gen_range(-1.0..1.0);
        let y: f64 = rng.gen_range(-1.0..1.0);
        let d = delta(x, y);
        if d < 0.0 || x.abs() == 1.0 || y.abs() == 1.0 {
            report.skipped += 1;
            continue;
        }
        let root = d.sqrt() / (2.0 * PI * PI);
        let z = x * y - root;
        let t = ConfigTriple { x, y, z };
        let (Ok(r), Ok(a)) = (rho(&t), alpha(x, y)) else {
            report.record([x, y, z], f64::NEG_INFINITY);
            continue;
        };
        let a = a.max(1.0);
        let first = r.acos() - (PI - arccsc(a));
        let second = FRAC_PI_4 * (1.0 - z + x - y) / (1.0 - y) - (FRAC_PI_4 * (1.0 + x) + (a * a - 1.0).sqrt());
        let mut margin = -first.abs().max(second.abs());

        // Stationary points lie strictly inside the realizable z-interval
        // [xy - s, xy + s] with s = √((1-x²)(1-y²)).
        let s = ((1.0 - x * x) * (1.0 - y * y)).sqrt();
        let probe = (root / 4.0).min((s - root) / 4.0).min(1e-3);
        if probe > 100.0 * FD_H {
            let slope = |z: f64| {
                let f = |z| big_f(&ConfigTriple { x, y, z }).unwrap_or(f64::NAN);
                (f(z + FD_H) - f(z - FD_H)) / (2.0 * FD_H)
            };
            let lower = x * y - root;
            let upper = x * y + root;
            let turns = slope(lower - probe) < 0.0
                && slope(lower + probe) > 0.0
                && slope(upper - probe) > 0.0
                && slope(upper + probe) < 0.0;
            if !turns {
                margin = f64::NEG_INFINITY;
            }
        }
        report.record([x, y, z], margin);
    }
    report.finish()
}

/// `z ↦ F(x, y, z)` sampled on `[z_lo, z_hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FCurve {
    pub x: f64,
    pub y: f64,
    pub rows: Vec<(f64, f64)>,
    /// Lattice points outside `[x + y - 1, 1 - y + x]` or not realizable.
    pub omitted: usize,
}

impl FCurve {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("z,F\n");
        for &(z, f) in &self.rows {
            out.push_str(&format!("{},{}\n", sig12(z), sig12(f)));
        }
        out
    }

    /// Index of the smallest `F`.
    pub fn argmin(&self) -> Option<usize> {
        (0..self.rows.len()).min_by(|&a, &b| self.rows[a].1.total_cmp(&self.rows[b].1))
    }
}

pub fn emit_f_curve(x: f64, y: f64, z_lo: f64, z_hi: f64, step: f64) -> Result<FCurve> {
    if y.is_nan() || y >= 1.0 {
        return Err(Error::Domain("F needs y < 1".into()));
    }
    if step.is_nan() || step <= 0.0 || z_lo.is_nan() || z_hi.is_nan() || z_lo > z_hi {
        return Err(Error::Domain("need step > 0 and z_lo <= z_hi".into()));
    }
    let (box_lo, box_hi) = (x + y - 1.0, 1.0 - y + x);
    let mut curve = FCurve {
        x,
        y,
        rows: Vec::new(),
        omitted: 0,
    };
    for z in closed_lattice(z_lo, z_hi, step) {
        let inside = z >= box_lo - 1e-9 && z <= box_hi + 1e-9;
        match big_f(&ConfigTriple { x, y, z }) {
            Ok(f) if inside => curve.rows.push((z, f)),
            _ => curve.omitted += 1,
        }
    }
    Ok(curve)
}

/// One triple of the Monte Carlo cross-check.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloTriple {
    pub triple: ConfigTriple,
    pub closed_form: f64,
    pub bound: f64,
    pub frequency: f64,
    pub std_error: f64,
}

impl MonteCarloTriple {
    pub fn above_bound(&self) -> bool {
        self.frequency >= self.bound - 4.0 * self.std_error
    }

    pub fn matches_closed_form(&self) -> bool {
        (self.frequency - self.closed_form).abs() <= 4.0 * self.std_error
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloReport {
    pub samples: usize,
    pub seed: u64,
    pub triples: Vec<MonteCarloTriple>,
}

impl MonteCarloReport {
    pub fn passed(&self) -> bool {
        self.triples.iter().all(|t| t.above_bound() && t.matches_closed_form())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("x,y,z,closed_form,bound,frequency,std_error,above_bound,matches\n");
        for t in &self.triples {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                sig12(t.triple.x),
                sig12(t.triple.y),
                sig12(t.triple.z),
                sig12(t.closed_form),
                sig12(t.bound),
                sig12(t.frequency),
                sig12(t.std_error),
                t.above_bound(),
                t.matches_closed_form()
            ));
        }
        out
    }
}

/// Seeded triple drawn uniformly from the triangle box.
pub fn random_box_triple<R: Rng>(rng: &mut R) -> ConfigTriple {
    loop {
        let t = ConfigTriple {
            x: rng.gen_range(-1.0..=1.0),
            y: rng.gen_range(-1.0..=1.0),
            z: rng.gen_range(-1.0..=1.0),
        };
        if t.in_triangle_box() && t.gram_det() >= 0.0 {
            return t;
        }
    }
}

/// Empirical separation frequency of the actual rounding code on realized vectors.
pub fn monte_carlo_separation(t: &ConfigTriple, samples: usize, seed: u64) -> Result<MonteCarloTriple> {
    let v = realize_vectors(t)?;
    let edge = DirectedGraph::new(2, vec![(0, 1)])?;
    let inst = build_relaxation(&edge)?;
    let sol = VectorSolution::from_rows(&inst, vec![v.x0.to_vec(), v.xu.to_vec(), v.xv.to_vec()])?;
    let rounder = Rounder::new(&sol);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut separated = 0usize;
    for _ in 0..samples {
        let a: f64 = rng.gen_range(0.0..=1.0);
        let h = rounder.hyperplane(rng.gen());
        let r = rounder.round_with(a, &h);
        if r[0].sign != r[1].sign {
            separated += 1;
        }
    }
    let p = separation_probability(t)?;
    let n = samples as f64;
    Ok(MonteCarloTriple {
        triple: *t,
        closed_form: p,
        bound: t.dicut_term(),
        frequency: separated as f64 / n,
        // Half a sample of slack keeps degenerate p ∈ {0, 1} from demanding exactness.
        std_error: (p * (1.0 - p) / n).sqrt().max(0.5 / n),
    })
}

/// `triples` seeded box triples, each rounded `samples` times.
pub fn monte_carlo_configuration(triples: usize, samples: usize, seed: u64) -> Result<MonteCarloReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen: Vec<ConfigTriple> = (0..triples).map(|_| random_box_triple(&mut rng)).collect();
    let triples = chosen
        .iter()
        .enumerate()
        .map(|(i, t)| monte_carlo_separation(t, samples, mix_seed(seed, i as u64)))
        .collect::<Result<_>>()?;
    Ok(MonteCarloReport {
        samples,
        seed,
        triples,
    })
}

/// `α` value at which the `G` bound becomes tight in `y`: `√(1 + (π²/16)(1 - x)²)`.
pub fn alpha_cap(x: f64) -> f64 {
    (1.0 + PI * PI / 16.0 * (1.0 - x).powi(2)).sqrt()
}

/// `π - arccsc(α_cap(x)) - π/2`, the final lower bound on `G`.
pub fn g_floor(x: f64) -> f64 {
    PI - arccsc(alpha_cap(x)) - FRAC_PI_2
}
