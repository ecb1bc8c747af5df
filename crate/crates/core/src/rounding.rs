//! Threshold-plus-hyperplane rounding and the deterministic driver.
//!
//! For a threshold `a ∈ [0, 1]` and a random hyperplane `H` with `H(x_0) = 1`, vertex `w`
//! gets `sgn(x_w·x_0)` when `|x_w·x_0| ≥ a` and `H(y_w)` otherwise, where `y_w` is the
//! normalized projection of `x_w` orthogonal to `x_0`. Only the position of `a` relative
//! to the magnitudes `|x_w·x_0|` matters, so the driver searches one representative per
//! interval together with a stream of seeded hyperplanes, stopping once the cut reaches
//! the integer target implied by the relaxation value.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::graph::{CutAssignment, CutValue, DirectedGraph};
use crate::sdp::{dot, mix_seed, VectorSolution};

/// `|x_w·x_0|` at or above this counts as `x_w ∈ ⟨x_0⟩`.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Hyperplanes whose normal is this close to orthogonal to `x_0` or some `y_w` are redrawn.
pub const HYPERPLANE_MARGIN: f64 = 1e-12;

/// Slack subtracted from the relaxation value before forming the integer target.
pub const DRIVE_SLACK: f64 = 1e-6;

/// Rounds per threshold candidate in the default drive budget.
pub const ROUNDS_PER_CANDIDATE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundingParams {
    pub a: f64,
    pub hyperplane_seed: u64,
}

impl RoundingParams {
    pub fn new(a: f64, hyperplane_seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::Domain(format!("threshold {a} outside [0, 1]")));
        }
        Ok(Self { a, hyperplane_seed })
    }
}

/// `x_0` and the projected vectors `y_w`, padded into a common dimension. Vertices with
/// `x_w ∈ ⟨x_0⟩` get their own appended axis.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedVectors {
    pub dim: usize,
    pub x0: Vec<f64>,
    pub y: Vec<Vec<f64>>,
    /// `x_w·x_0` per vertex.
    pub dots: Vec<f64>,
}

pub fn project_perp(sol: &VectorSolution) -> ProjectedVectors {
    let n = sol.num_vectors() - 1;
    let base = sol.dim();
    let x0 = sol.x0();
    let dots: Vec<f64> = (0..n).map(|w| dot(sol.vertex(w), x0)).collect();
    let degenerate = dots.iter().filter(|d| d.abs() >= 1.0 - DEGENERACY_TOL).count();
    let dim = base + degenerate;

    let mut fresh = base;
    let y = dots
        .iter()
        .enumerate()
        .map(|(w, &d)| {
            let mut out = vec![0.0; dim];
            if d.abs() >= 1.0 - DEGENERACY_TOL {
                out[fresh] = 1.0;
                fresh += 1;
            } else {
                let scale = (1.0 - d * d).sqrt();
                for ((o, xi), x0i) in out.iter_mut().zip(sol.vertex(w)).zip(x0) {
                    *o = (xi - d * x0i) / scale;
                }
            }
            out
        })
        .collect();

    let mut x0_padded = x0.to_vec();
    x0_padded.resize(dim, 0.0);
    ProjectedVectors {
        dim,
        x0: x0_padded,
        y,
        dots,
    }
}

/// `z_w = y_w` when `|x_w·x_0| < a`, otherwise `sgn(x_w·x_0)·x_0` with `sgn(0) = +1`.
pub fn z_vectors(sol: &VectorSolution, a: f64) -> Vec<Vec<f64>> {
    let p = project_perp(sol);
    p.dots
        .iter()
        .zip(&p.y)
        .map(|(&d, y)| {
            if d.abs() < a {
                y.clone()
            } else {
                let s = if d >= 0.0 { 1.0 } else { -1.0 };
                p.x0.iter().map(|v| s * v).collect()
            }
        })
        .collect()
}

/// A hyperplane through the origin, oriented so that `x_0` lies on its positive side.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: Vec<f64>,
}

impl Hyperplane {
    /// Draws a spherically symmetric normal from `seed`, redrawing near-degenerate ones,
    /// and reflects it so that `H(x_0) = 1`.
    pub fn sample(p: &ProjectedVectors, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut normal: Vec<f64> = (0..p.dim).map(|_| StandardNormal.sample(&mut rng)).collect();
            let along = dot(&normal, &p.x0);
            if along.abs() < HYPERPLANE_MARGIN
                || p.y.iter().any(|y| dot(&normal, y).abs() < HYPERPLANE_MARGIN)
            {
                continue;
            }
            if along < 0.0 {
                normal.iter_mut().for_each(|v| *v = -*v);
            }
            return Self { normal };
        }
    }

    pub fn normal(&self) -> &[f64] {
        &self.normal
    }

    /// `sgn(normal·v)` with `0` on the hyperplane itself.
    pub fn side(&self, v: &[f64]) -> i8 {
        let s = dot(&self.normal, v);
        if s > 0.0 {
            1
        } else if s < 0.0 {
            -1
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `|x_w·x_0| ≥ a`: the sign of `x_w·x_0`.
    Threshold,
    /// `|x_w·x_0| < a`: the side of `y_w`.
    Hyperplane,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Threshold => "threshold",
            Branch::Hyperplane => "hyperplane",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexRecord {
    pub dot_x0: f64,
    pub branch: Branch,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoundingTranscript {
    pub params: RoundingParams,
    pub records: Vec<VertexRecord>,
    pub assignment: CutAssignment,
    pub cut: CutValue,
}

impl RoundingTranscript {
    /// One line `w x_w·x_0 branch c(w)` per vertex (1-based), then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (w, r) in self.records.iter().enumerate() {
            out.push_str(&format!("{} {:.16e} {} {:+}\n", w + 1, r.dot_x0, r.branch, r.sign));
        }
        out.push_str(&format!(
            "summary a={:.16e} seed={} numerator={} edges={}\n",
            self.params.a, self.params.hyperplane_seed, self.cut.numerator, self.cut.edges
        ));
        out
    }
}

/// Precomputed projections for repeated rounding of one solution.
#[derive(Debug, Clone)]
pub struct Rounder {
    projected: ProjectedVectors,
}

impl Rounder {
    pub fn new(sol: &VectorSolution) -> Self {
        Self {
            projected: project_perp(sol),
        }
    }

    pub fn projected(&self) -> &ProjectedVectors {
        &self.projected
    }

    pub fn hyperplane(&self, seed: u64) -> Hyperplane {
        Hyperplane::sample(&self.projected, seed)
    }

    /// `c(w) = +1` if `x_w·x_0 ≥ a`, or if `x_w·x_0 > -a` and `H(y_w) = 1`; else `-1`.
    pub fn round_with(&self, a: f64, h: &Hyperplane) -> Vec<VertexRecord> {
        self.projected
            .dots
            .iter()
            .zip(&self.projected.y)
            .map(|(&d, y)| {
                let (branch, sign) = if d >= a {
                    (Branch::Threshold, 1)
                } else if d <= -a {
                    (Branch::Threshold, -1)
                } else {
                    (Branch::Hyperplane, if h.side(y) == 1 { 1 } else { -1 })
                };
                VertexRecord {
                    dot_x0: d,
                    branch,
                    sign,
                }
            })
            .collect()
    }

    pub fn round(&self, params: RoundingParams) -> Vec<VertexRecord> {
        self.round_with(params.a, &self.hyperplane(params.hyperplane_seed))
    }
}

fn assignment_of(records: &[VertexRecord]) -> CutAssignment {
    CutAssignment::new(records.iter().map(|r| r.sign).collect()).expect("signs are ±1")
}

pub fn randomized_round(
    g: &DirectedGraph,
    sol: &VectorSolution,
    params: RoundingParams,
) -> Result<RoundingTranscript> {
    if sol.num_vectors() != g.n() + 1 {
        return Err(Error::DimensionMismatch {
            expected: g.n() + 1,
            got: sol.num_vectors(),
        });
    }
    let records = Rounder::new(sol).round(params);
    let assignment = assignment_of(&records);
    let cut = g.cut_value(&assignment)?;
    Ok(RoundingTranscript {
        params,
        records,
        assignment,
        cut,
    })
}

/// One threshold per interval cut out of `[0, 1]` by the distinct magnitudes `|x_w·x_0|`:
/// `0`, the midpoints between consecutive magnitudes and, if the largest is below 1,
/// the midpoint between it and 1.
pub fn threshold_candidates(sol: &VectorSolution) -> Vec<f64> {
    let x0 = sol.x0();
    let mut mags: Vec<f64> = (0..sol.num_vectors() - 1)
        .map(|w| dot(sol.vertex(w), x0).abs().min(1.0))
        .collect();
    mags.sort_by(f64::total_cmp);
    mags.dedup();

    let mut out = vec![0.0];
    out.extend(mags.windows(2).map(|p| 0.5 * (p[0] + p[1])));
    if let Some(&top) = mags.last() {
        if top < 1.0 {
            out.push(0.5 * (top + 1.0));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct DriveConfig {
    /// Total rounds; `None` means [`ROUNDS_PER_CANDIDATE`] per threshold candidate.
    pub budget: Option<usize>,
    pub seed: u64,
    pub slack: f64,
}

impl Default for DriveConfig {
    fn default() -> Self {
        Self {
            budget: None,
            seed: 0,
            slack: DRIVE_SLACK,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DriveOutcome {
    pub transcript: RoundingTranscript,
    /// `ceil(|E|·(objective − slack))`.
    pub target_numerator: usize,
    pub rounds_used: usize,
    pub budget: usize,
    /// Budget ran out before the target was met; `transcript` is the best cut found.
    pub shortfall: bool,
}

impl DriveOutcome {
    pub fn assignment(&self) -> &CutAssignment {
        &self.transcript.assignment
    }

    pub fn cut(&self) -> CutValue {
        self.transcript.cut
    }
}

/// Rounds `(r, i)` in order: round `r` draws one hyperplane from `mix_seed(seed, r)` and
/// applies it with every threshold candidate `i`. The first cut reaching the target is
/// returned; otherwise the best one, with `shortfall` set.
pub fn deterministic_drive(
    g: &DirectedGraph,
    sol: &VectorSolution,
    cfg: &DriveConfig,
) -> Result<DriveOutcome> {
    if sol.num_vectors() != g.n() + 1 {
        return Err(Error::DimensionMismatch {
            expected: g.n() + 1,
            got: sol.num_vectors(),
        });
    }
    if g.num_edges() == 0 {
        return Err(Error::EmptyEdges);
    }
    let candidates = threshold_candidates(sol);
    let budget = cfg.budget.unwrap_or(ROUNDS_PER_CANDIDATE * candidates.len());
    if budget == 0 {
        return Err(Error::Domain("drive budget must be at least 1".into()));
    }
    let m = g.num_edges();
    let target = (m as f64 * (sol.achieved_objective - cfg.slack)).ceil().clamp(0.0, m as f64) as usize;

    let rounder = Rounder::new(sol);
    let mut best: Option<RoundingTranscript> = None;
    let mut used = 0;
    'search: for round in 0.. {
        let seed = mix_seed(cfg.seed, round as u64);
        let h = rounder.hyperplane(seed);
        for &a in &candidates {
            if used == budget {
                break 'search;
            }
            used += 1;
            let records = rounder.round_with(a, &h);
            let assignment = assignment_of(&records);
            let cut = g.cut_value(&assignment)?;
            if best.as_ref().is_none_or(|b| cut.numerator > b.cut.numerator) {
                best = Some(RoundingTranscript {
                    params: RoundingParams { a, hyperplane_seed: seed },
                    records,
                    assignment,
                    cut,
                });
            }
            if cut.numerator >= target {
                break 'search;
            }
        }
    }
    let transcript = best.expect("budget is at least one round");
    Ok(DriveOutcome {
        shortfall: transcript.cut.numerator < target,
        transcript,
        target_numerator: target,
        rounds_used: used,
        budget,
    })
}

/// The rotation function `f_a`: angles within `arccos a` of `0` (or `π`) snap to `0`
/// (or `π`); everything in between goes to `π/2`.
pub fn rotation_function(a: f64, theta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::Domain(format!("threshold {a} outside [0, 1]")));
    }
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain(format!("angle {theta} outside [0, π]")));
    }
    let edge = a.acos();
    Ok(if theta < edge {
        0.0
    } else if theta > PI - edge {
        PI
    } else {
        FRAC_PI_2
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sdp::{build_relaxation, SdpInstance};

    fn solution(inst: &SdpInstance, rows: Vec<Vec<f64>>) -> VectorSolution {
        VectorSolution::from_rows(inst, rows).unwrap()
    }

    /// Random unit vertex vectors with `x_0 = e_1`; some pinned to `±x_0`.
    fn random_solution(g: &DirectedGraph, seed: u64) -> VectorSolution {
        let inst = build_relaxation(g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = g.n() + 1;
        let mut rows = vec![{
            let mut e = vec![0.0; d];
            e[0] = 1.0;
            e
        }];
        for w in 0..g.n() {
            let mut v: Vec<f64> = (0..d).map(|_| StandardNormal.sample(&mut rng)).collect();
            match (seed + w as u64) % 7 {
                0 => v = rows[0].clone(),
                1 => v = rows[0].iter().map(|x| -x).collect(),
                _ => {}
            }
            let norm = dot(&v, &v).sqrt();
            rows.push(v.iter().map(|x| x / norm).collect());
        }
        solution(&inst, rows)
    }

    #[test]
    fn orthogonal_vectors_project_to_themselves() {
        let inst = build_relaxation(&fixtures::single_edge()).unwrap();
        let sol = solution(&inst, vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.6, 0.8]]);
        let p = project_perp(&sol);
        assert_eq!(p.dim, 3);
        assert_eq!(p.y[0], vec![0.0, 1.0, 0.0]);
        assert_eq!(p.y[1], vec![0.0, 0.6, 0.8]);
    }

    #[test]
    fn pinned_vectors_get_fresh_axes() {
        let inst = build_relaxation(&fixtures::single_edge()).unwrap();
        let sol = solution(&inst, vec![vec![1.0, 0.0], vec![1.0, 0.0], vec![-1.0, 0.0]]);
        let p = project_perp(&sol);
        assert_eq!(p.dim, 4);
        assert_eq!(p.y[0], vec![0.0, 0.0, 1.0, 0.0]);
        assert_eq!(p.y[1], vec![0.0, 0.0, 0.0, 1.0]);
        assert_eq!(dot(&p.y[0], &p.x0), 0.0);
    }

    #[test]
    fn projection_removes_common_component() {
        // x·x_0 = y·x_0 = 0.6 and x_u·x_v = 0.36 = 0.6², so the residuals are orthogonal.
        let inst = build_relaxation(&fixtures::single_edge()).unwrap();
        let sol = solution(&inst, vec![vec![1.0, 0.0, 0.0], vec![0.6, 0.8, 0.0], vec![0.6, 0.0, 0.8]]);
        let p = project_perp(&sol);
        assert!(dot(&p.y[0], &p.y[1]).abs() < 1e-15);
        assert!((dot(&p.y[0], &p.y[0]) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_threshold_is_sign_rounding() {
        let g = fixtures::oriented_bipartite(2, 3);
        for seed in 0..20 {
            let sol = random_solution(&g, seed);
            let t = randomized_round(&g, &sol, RoundingParams::new(0.0, seed).unwrap()).unwrap();
            for r in &t.records {
                assert_eq!(r.branch, Branch::Threshold);
                assert_eq!(r.sign, if r.dot_x0 >= 0.0 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn unit_threshold_is_pure_hyperplane_rounding() {
        let g = fixtures::oriented_bipartite(2, 3);
        let sol = random_solution(&g, 3);
        let rounder = Rounder::new(&sol);
        let h = rounder.hyperplane(9);
        for (w, r) in rounder.round_with(1.0, &h).iter().enumerate() {
            if r.dot_x0.abs() < 1.0 {
                assert_eq!(r.branch, Branch::Hyperplane);
                assert_eq!(r.sign, h.side(&rounder.projected().y[w]));
            }
        }
    }

    #[test]
    fn integral_edge_rounds_across_for_any_threshold() {
        let g = fixtures::single_edge();
        let inst = build_relaxation(&g).unwrap();
        let c = CutAssignment::new(vec![-1, 1]).unwrap();
        let sol = VectorSolution::integral(&inst, &c, 2).unwrap();
        for (i, a) in [0.0, 0.3, 0.999, 1.0].into_iter().enumerate() {
            let t = randomized_round(&g, &sol, RoundingParams::new(a, i as u64).unwrap()).unwrap();
            assert_eq!(t.assignment.signs(), &[-1, 1]);
            assert_eq!(t.cut, CutValue::new(1, 1));
        }
    }

    #[test]
    fn hyperplane_is_conditioned_on_x0() {
        let g = fixtures::directed_triangle();
        let sol = random_solution(&g, 12);
        let p = project_perp(&sol);
        for seed in 0..200 {
            let h = Hyperplane::sample(&p, seed);
            assert_eq!(h.side(&p.x0), 1);
            let neg: Vec<f64> = p.x0.iter().map(|v| -v).collect();
            assert_eq!(h.side(&neg), -1);
        }
    }

    #[test]
    fn boundary_tie_takes_threshold_branch() {
        let inst = build_relaxation(&fixtures::single_edge()).unwrap();
        let sol = solution(&inst, vec![vec![1.0, 0.0], vec![0.5, 0.75f64.sqrt()], vec![-0.5, 0.75f64.sqrt()]]);
        let a = dot(sol.vertex(0), sol.x0());
        let records = Rounder::new(&sol).round(RoundingParams::new(a, 0).unwrap());
        assert_eq!(records[0].branch, Branch::Threshold);
        assert_eq!(records[0].sign, 1);
        assert_eq!(records[1].branch, Branch::Threshold);
        assert_eq!(records[1].sign, -1);
    }

    #[test]
    fn z_vector_extremes() {
        let g = fixtures::oriented_bipartite(2, 2);
        let sol = random_solution(&g, 2);
        let p = project_perp(&sol);
        for (w, z) in z_vectors(&sol, 0.0).iter().enumerate() {
            let s = if p.dots[w] >= 0.0 { 1.0 } else { -1.0 };
            assert!(z.iter().zip(&p.x0).all(|(a, b)| *a == s * b));
        }
        for (w, z) in z_vectors(&sol, 1.0).iter().enumerate() {
            if p.dots[w].abs() < 1.0 {
                assert_eq!(z, &p.y[w]);
            }
        }
    }

    #[test]
    fn hyperplane_on_z_vectors_matches_randomized_round() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for seed in 0..60 {
            let g = fixtures::random_digraph(&mut rng, 2 + (seed as usize % 7), 6);
            let sol = random_solution(&g, seed);
            let rounder = Rounder::new(&sol);
            for k in 0..10 {
                let a = (k as f64) / 9.0;
                let h = rounder.hyperplane(seed * 100 + k);
                let direct = rounder.round_with(a, &h);
                let via_z: Vec<i8> = z_vectors(&sol, a).iter().map(|z| h.side(z)).collect();
                let direct: Vec<i8> = direct.iter().map(|r| r.sign).collect();
                assert_eq!(direct, via_z, "seed {seed} a {a}");
            }
        }
    }

    #[test]
    fn candidate_spot_values() {
        let inst = build_relaxation(&fixtures::single_edge()).unwrap();
        let flat = solution(&inst, vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]);
        assert_eq!(threshold_candidates(&flat), vec![0.0, 0.5]);

        let s = |d: f64| (1.0 - d * d).sqrt();
        let two = solution(&inst, vec![vec![1.0, 0.0, 0.0], vec![0.2, s(0.2), 0.0], vec![-0.8, 0.0, s(0.8)]]);
        let c = threshold_candidates(&two);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], 0.0);
        assert!((c[1] - 0.5).abs() < 1e-12 && (c[2] - 0.9).abs() < 1e-12);
    }

    #[test]
    fn candidates_cover_each_interval_once() {
        let g = DirectedGraph::new(6, vec![(0, 1)]).unwrap();
        let sol = random_solution(&g, 5);
        let p = project_perp(&sol);
        let mut mags: Vec<f64> = p.dots.iter().map(|d| d.abs().min(1.0)).collect();
        mags.sort_by(f64::total_cmp);
        mags.dedup();
        let c = threshold_candidates(&sol);
        let expected = mags.len() + usize::from(*mags.last().unwrap() < 1.0);
        assert_eq!(c.len(), expected);
        assert!(c.len() <= g.n() + 2);
        // Distinct candidates induce distinct threshold sets.
        let sets: Vec<Vec<bool>> = c.iter().map(|&a| p.dots.iter().map(|d| d.abs() >= a).collect()).collect();
        for i in 1..sets.len() {
            assert_ne!(sets[i - 1], sets[i]);
        }
    }

    #[test]
    fn drive_on_single_edge_succeeds_immediately() {
        let g = fixtures::single_edge();
        let inst = build_relaxation(&g).unwrap();
        let sol = crate::sdp::solve_relaxation(&inst, &crate::SolverConfig::with_seed(1)).unwrap();
        let out = deterministic_drive(&g, &sol, &DriveConfig::default()).unwrap();
        assert_eq!(out.cut(), CutValue::new(1, 1));
        assert_eq!(out.rounds_used, 1);
        assert!(!out.shortfall);
    }

    #[test]
    fn drive_on_footnote_reaches_two_thirds() {
        let g = fixtures::footnote();
        let inst = build_relaxation(&g).unwrap();
        let sol = crate::sdp::solve_relaxation(&inst, &crate::SolverConfig::with_seed(4)).unwrap();
        let out = deterministic_drive(&g, &sol, &DriveConfig::default()).unwrap();
        assert!(out.cut() >= CutValue::new(2, 3));
        assert_eq!(out.target_numerator, 2);
    }

    #[test]
    fn drive_is_monotone_in_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..15 {
            let g = fixtures::random_digraph(&mut rng, 6, 10);
            let sol = random_solution(&g, seed);
            let mut last = 0;
            for budget in [1, 2, 3, 5, 8, 20, 50] {
                let cfg = DriveConfig { budget: Some(budget), seed, ..Default::default() };
                let out = deterministic_drive(&g, &sol, &cfg).unwrap();
                assert!(out.cut().numerator >= last);
                assert!(out.rounds_used <= budget);
                last = out.cut().numerator;
            }
        }
    }

    #[test]
    fn shortfall_is_flagged() {
        // An infeasible point claiming objective 1 cannot be met by any cut of the triangle.
        let g = fixtures::directed_triangle();
        let mut sol = random_solution(&g, 1);
        sol.achieved_objective = 1.0;
        let cfg = DriveConfig { budget: Some(5), ..Default::default() };
        let out = deterministic_drive(&g, &sol, &cfg).unwrap();
        assert!(out.shortfall);
        assert_eq!(out.rounds_used, 5);
        assert_eq!(out.target_numerator, 3);
        assert!(deterministic_drive(&g, &sol, &DriveConfig { budget: Some(0), ..Default::default() }).is_err());
    }

    #[test]
    fn transcript_dump_format() {
        let g = fixtures::single_edge();
        let inst = build_relaxation(&g).unwrap();
        let c = CutAssignment::new(vec![-1, 1]).unwrap();
        let sol = VectorSolution::integral(&inst, &c, 2).unwrap();
        let t = randomized_round(&g, &sol, RoundingParams::new(0.25, 7).unwrap()).unwrap();
        let text = t.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "1 -1.0000000000000000e0 threshold -1");
        assert_eq!(lines[1], "2 1.0000000000000000e0 threshold +1");
        assert_eq!(lines[2], "summary a=2.5000000000000000e-1 seed=7 numerator=1 edges=1");
    }

    #[test]
    fn rotation_function_plateaus() {
        for a in [0.0, 0.2, 0.7, 1.0] {
            assert_eq!(rotation_function(a, 0.0).unwrap(), if a == 1.0 { FRAC_PI_2 } else { 0.0 });
        }
        for a in [0.1, 0.5, 1.0] {
            assert_eq!(rotation_function(a, FRAC_PI_2).unwrap(), FRAC_PI_2);
        }
        for theta in [1e-9, 0.3, 2.0, PI - 1e-9] {
            assert_eq!(rotation_function(1.0, theta).unwrap(), FRAC_PI_2);
        }
        assert!(rotation_function(1.5, 0.0).is_err());
        assert!(rotation_function(0.5, 4.0).is_err());
        assert!(RoundingParams::new(-0.1, 0).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rotation_is_monotone(a in 0.0..=1.0f64, t1 in 0.0..=PI, t2 in 0.0..=PI) {
                let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
                prop_assert!(rotation_function(a, lo).unwrap() <= rotation_function(a, hi).unwrap());
            }

            #[test]
            fn rotation_is_odd_about_the_centre(a in 0.0..=1.0f64, theta in 0.0..=PI) {
                let edge = a.acos();
                prop_assume!((theta - edge).abs() > 1e-9 && (theta - (PI - edge)).abs() > 1e-9);
                let f = rotation_function(a, theta).unwrap();
                let g = rotation_function(a, PI - theta).unwrap();
                prop_assert!((f + g - PI).abs() < 1e-15);
            }
        }
    }
}
