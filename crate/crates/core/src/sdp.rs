//! Triangle-constrained vector relaxation of Max-DiCut.
//!
//! ```text
//! maximize   E_{(u,v)∈E} (1 - x_u·x_v + x_0·x_v - x_0·x_u) / 4
//! subject to ||x_w||² = 1                        for w ∈ V ∪ {0}
//!            (x_0 ± x_u)·(x_0 ± x_v) ≥ 0         for (u, v) ∈ E, all four sign pairs
//! ```
//!
//! The solver optimizes the unit vectors directly (low-rank factorization of the Gram
//! matrix). The triangle inequalities are handled by an augmented Lagrangian; the
//! inner problem is Riemannian gradient descent on the product of spheres with
//! Barzilai-Borwein trial steps and Armijo halving. `x_0` is pinned to the first
//! coordinate axis throughout.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CutAssignment, DirectedGraph};

/// Sign patterns `(s_u, s_v)` of the four triangle constraints of an edge.
pub const SIGN_PATTERNS: [(f64, f64); 4] = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];

/// Relaxation of one graph. Vector index 0 is `x_0`; vertex `w` (0-based) is index `w + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdpInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SdpInstance {
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_vectors(&self) -> usize {
        self.n + 1
    }

    /// Edges as vector indices (already shifted past `x_0`).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_constraints(&self) -> usize {
        4 * self.edges.len()
    }

    /// `(x_0 + s_u x_u)·(x_0 + s_v x_v)` for every edge and sign pattern, edge-major.
    pub fn constraint_values(&self, sol: &VectorSolution) -> Vec<f64> {
        let x0 = sol.vector(0);
        let mut out = Vec::with_capacity(self.num_constraints());
        for &(u, v) in &self.edges {
            let (xu, xv) = (sol.vector(u), sol.vector(v));
            let (a, b, c) = (dot(x0, xu), dot(x0, xv), dot(xu, xv));
            for (su, sv) in SIGN_PATTERNS {
                out.push(1.0 + su * a + sv * b + su * sv * c);
            }
        }
        out
    }
}

pub fn build_relaxation(g: &DirectedGraph) -> Result<SdpInstance> {
    if g.num_edges() == 0 {
        return Err(Error::EmptyEdges);
    }
    Ok(SdpInstance {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
    })
}

/// Unit vectors `x_0, x_1, …, x_n` stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorSolution {
    dim: usize,
    data: Vec<f64>,
    pub achieved_objective: f64,
}

impl VectorSolution {
    /// Wraps explicit vectors and evaluates their objective on `inst`.
    pub fn from_rows(inst: &SdpInstance, rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.len() != inst.num_vectors() {
            return Err(Error::DimensionMismatch {
                expected: inst.num_vectors(),
                got: rows.len(),
            });
        }
        let dim = rows[0].len();
        if dim == 0 {
            return Err(Error::Domain("vectors must have positive dimension".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: r.len(),
            });
        }
        let mut sol = Self {
            dim,
            data: rows.concat(),
            achieved_objective: 0.0,
        };
        sol.achieved_objective = sdp_objective(inst, &sol)?;
        Ok(sol)
    }

    /// `x_0 = e_1` and `x_w = c(w)·x_0`.
    pub fn integral(inst: &SdpInstance, c: &CutAssignment, dim: usize) -> Result<Self> {
        if c.len() != inst.num_vertices() {
            return Err(Error::AssignmentSize {
                expected: inst.num_vertices(),
                got: c.len(),
            });
        }
        let rows = std::iter::once(1.0)
            .chain(c.signs().iter().map(|&s| f64::from(s)))
            .map(|s| {
                let mut r = vec![0.0; dim.max(1)];
                r[0] = s;
                r
            })
            .collect();
        Self::from_rows(inst, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vectors(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn x0(&self) -> &[f64] {
        self.vector(0)
    }

    /// `x_w` for 0-based vertex `w`.
    pub fn vertex(&self, w: usize) -> &[f64] {
        self.vector(w + 1)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim)
    }

    /// One row per vector, row 0 = `x_0`, 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Reads a dump written by [`VectorSolution::to_text`].
    pub fn parse(inst: &SdpInstance, text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<f64>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("'{t}' is not a number"),
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
        }
        Self::from_rows(inst, rows)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Average of `(1 - x_u·x_v + x_0·x_v - x_0·x_u) / 4` over the edges.
pub fn sdp_objective(inst: &SdpInstance, sol: &VectorSolution) -> Result<f64> {
    if sol.num_vectors() != inst.num_vectors() {
        return Err(Error::DimensionMismatch {
            expected: inst.num_vectors(),
            got: sol.num_vectors(),
        });
    }
    if inst.edges.is_empty() {
        return Err(Error::EmptyEdges);
    }
    let x0 = sol.x0();
    let total: f64 = inst
        .edges
        .iter()
        .map(|&(u, v)| {
            let (xu, xv) = (sol.vector(u), sol.vector(v));
            (1.0 - dot(xu, xv) + dot(x0, xv) - dot(x0, xu)) / 4.0
        })
        .sum();
    Ok(total / inst.edges.len() as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    /// `max_w |1 - ||x_w||²|` and the vector index attaining it.
    pub worst_norm_deviation: f64,
    pub worst_norm_index: usize,
    /// `max(0, -min constraint value)`.
    pub worst_violation: f64,
    /// Edge (0-based vertices) and sign pattern of the smallest constraint value.
    pub worst_edge: (usize, usize),
    pub worst_signs: (i8, i8),
    pub min_constraint_value: f64,
    pub tol: f64,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.worst_norm_deviation <= self.tol && self.worst_violation <= self.tol
    }
}

pub fn check_feasibility(inst: &SdpInstance, sol: &VectorSolution, tol: f64) -> Result<FeasibilityReport> {
    if sol.num_vectors() != inst.num_vectors() {
        return Err(Error::DimensionMismatch {
            expected: inst.num_vectors(),
            got: sol.num_vectors(),
        });
    }
    let (worst_norm_index, worst_norm_deviation) = sol
        .rows()
        .map(|r| (1.0 - dot(r, r)).abs())
        .enumerate()
        .fold((0, 0.0), |acc, (i, d)| if d > acc.1 { (i, d) } else { acc });

    let values = inst.constraint_values(sol);
    let (k, min_value) = values
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, g)| if g < acc.1 { (i, g) } else { acc });
    let (u, v) = inst.edges.get(k / 4).copied().unwrap_or((1, 1));
    let (su, sv) = SIGN_PATTERNS[k % 4];
    Ok(FeasibilityReport {
        worst_norm_deviation,
        worst_norm_index,
        worst_violation: (-min_value).max(0.0),
        worst_edge: (u - 1, v - 1),
        worst_signs: (su as i8, sv as i8),
        min_constraint_value: min_value,
        tol,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Embedding dimension; `None` uses `n + 1`.
    pub rank: Option<usize>,
    pub max_outer: usize,
    pub max_inner: usize,
    pub initial_step: f64,
    pub initial_penalty: f64,
    pub penalty_growth: f64,
    pub max_penalty: f64,
    /// Riemannian gradient norm at which an inner solve counts as converged.
    pub inner_tol: f64,
    pub norm_tol: f64,
    pub feas_tol: f64,
    pub obj_tol: f64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            rank: None,
            max_outer: 80,
            max_inner: 4000,
            initial_step: 0.5,
            initial_penalty: 4.0,
            penalty_growth: 4.0,
            max_penalty: 1e6,
            inner_tol: 1e-9,
            norm_tol: 1e-7,
            feas_tol: 1e-7,
            obj_tol: 1e-6,
            restarts: 5,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("norm_tol", self.norm_tol),
            ("feas_tol", self.feas_tol),
            ("obj_tol", self.obj_tol),
            ("inner_tol", self.inner_tol),
            ("initial_step", self.initial_step),
            ("initial_penalty", self.initial_penalty),
        ];
        if let Some((name, _)) = positive.iter().find(|(_, v)| v.is_nan() || *v <= 0.0) {
            return Err(Error::InvalidConfig(format!("{name} must be positive")));
        }
        if self.rank.is_some_and(|r| r < 2) {
            return Err(Error::InvalidConfig("rank must be at least 2".into()));
        }
        if self.restarts == 0 || self.max_outer == 0 || self.max_inner == 0 {
            return Err(Error::InvalidConfig("iteration counts must be positive".into()));
        }
        if self.penalty_growth < 1.0 || self.max_penalty < self.initial_penalty {
            return Err(Error::InvalidConfig("penalty schedule must be non-decreasing".into()));
        }
        Ok(())
    }
}

/// Outcome of one restart, kept for diagnostics.
#[derive(Debug, Clone)]
pub struct RestartSummary {
    pub index: usize,
    pub objective: f64,
    /// Worst constraint violation before the final feasibility shift.
    pub raw_violation: f64,
    pub outer_rounds: usize,
    pub inner_steps: usize,
    pub accepted: bool,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub solution: VectorSolution,
    pub restarts: Vec<RestartSummary>,
    pub best_restart: usize,
}

/// Solves `inst` and returns the best restart whose violation is within `feas_tol`.
pub fn solve_relaxation(inst: &SdpInstance, cfg: &SolverConfig) -> Result<VectorSolution> {
    solve_relaxation_with_report(inst, cfg).map(|r| r.solution)
}

pub fn solve_relaxation_with_report(inst: &SdpInstance, cfg: &SolverConfig) -> Result<SolveReport> {
    cfg.validate()?;
    if inst.edges.is_empty() {
        return Err(Error::EmptyEdges);
    }
    let runs: Vec<(RestartSummary, VectorSolution)> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(cfg.seed, r as u64));
            AugmentedLagrangian::new(inst, cfg, &mut rng).run(r)
        })
        .collect::<Result<_>>()?;

    let best = runs
        .iter()
        .filter(|(s, _)| s.accepted)
        .fold(None::<&(RestartSummary, VectorSolution)>, |best, run| match best {
            Some(b) if b.0.objective >= run.0.objective => Some(b),
            _ => Some(run),
        });
    match best {
        Some((summary, solution)) => Ok(SolveReport {
            solution: solution.clone(),
            best_restart: summary.index,
            restarts: runs.iter().map(|(s, _)| s.clone()).collect(),
        }),
        None => {
            let least_violating = runs
                .iter()
                .min_by(|a, b| a.0.raw_violation.total_cmp(&b.0.raw_violation))
                .expect("at least one restart");
            Err(Error::NonConvergence {
                restarts: cfg.restarts,
                best_violation: least_violating.0.raw_violation,
                best_objective: least_violating.0.objective,
            })
        }
    }
}

/// SplitMix64 finalizer over `seed + index`, used to derive independent stream seeds.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct AugmentedLagrangian<'a> {
    inst: &'a SdpInstance,
    cfg: &'a SolverConfig,
    dim: usize,
    /// Row-major vectors; row 0 (`x_0 = e_1`) never moves.
    x: Vec<f64>,
    multipliers: Vec<f64>,
    penalty: f64,
}

impl<'a> AugmentedLagrangian<'a> {
    fn new(inst: &'a SdpInstance, cfg: &'a SolverConfig, rng: &mut ChaCha8Rng) -> Self {
        let dim = cfg.rank.unwrap_or(inst.num_vectors()).max(2);
        let mut x: Vec<f64> = (0..inst.num_vectors() * dim)
            .map(|_| StandardNormal.sample(rng))
            .collect();
        x[..dim].fill(0.0);
        x[0] = 1.0;
        for row in x.chunks_exact_mut(dim).skip(1) {
            normalize(row);
        }
        Self {
            inst,
            cfg,
            dim,
            x,
            multipliers: vec![0.0; inst.num_constraints()],
            penalty: cfg.initial_penalty,
        }
    }

    fn run(mut self, index: usize) -> Result<(RestartSummary, VectorSolution)> {
        let mut inner_steps = 0;
        let mut outer_rounds = 0;
        let mut previous_gap = f64::INFINITY;
        for _ in 0..self.cfg.max_outer {
            outer_rounds += 1;
            let (steps, converged) = self.minimize_inner();
            inner_steps += steps;

            // Infeasibility-plus-complementarity measure ||min(g, λ/μ)||∞, then the
            // first-order multiplier update.
            let values = self.constraint_values(&self.x);
            let mut gap = 0.0f64;
            for (lambda, g) in self.multipliers.iter_mut().zip(&values) {
                gap = gap.max(g.min(*lambda / self.penalty).abs());
                *lambda = (*lambda - self.penalty * g).max(0.0);
            }
            if converged && gap <= 0.01 * self.cfg.feas_tol {
                break;
            }
            if gap > 0.25 * previous_gap {
                self.penalty = (self.penalty * self.cfg.penalty_growth).min(self.cfg.max_penalty);
            }
            previous_gap = gap;
        }

        let raw_violation = self
            .constraint_values(&self.x)
            .iter()
            .fold(0.0f64, |acc, g| acc.max(-g));
        let rows = if raw_violation > 0.0 {
            self.shifted_rows(raw_violation)
        } else {
            self.x.chunks_exact(self.dim).map(<[f64]>::to_vec).collect()
        };
        let solution = VectorSolution::from_rows(self.inst, rows)?;
        let report = check_feasibility(self.inst, &solution, self.cfg.feas_tol)?;
        let accepted = raw_violation <= self.cfg.feas_tol
            && report.worst_norm_deviation <= self.cfg.norm_tol
            && report.worst_violation <= self.cfg.feas_tol;
        Ok((
            RestartSummary {
                index,
                objective: solution.achieved_objective,
                raw_violation,
                outer_rounds,
                inner_steps,
                accepted,
            },
            solution,
        ))
    }

    /// Mixes the Gram matrix with the identity, `(1 - t)·X + t·I`, realized exactly by
    /// appending `√t·e_i` to `√(1 - t)·x_i`. Every triangle constraint between distinct
    /// vertices has value 1 at the identity, so `t` slightly above `v / (1 + v)` clears
    /// a violation of `v`.
    fn shifted_rows(&self, violation: f64) -> Vec<Vec<f64>> {
        let t = (violation / (1.0 + violation)) * (1.0 + 1e-6) + 1e-15;
        let (keep, add) = ((1.0 - t).sqrt(), t.sqrt());
        let k = self.inst.num_vectors();
        self.x
            .chunks_exact(self.dim)
            .enumerate()
            .map(|(i, row)| {
                let mut out: Vec<f64> = row.iter().map(|v| v * keep).collect();
                out.extend((0..k).map(|j| if i == j { add } else { 0.0 }));
                normalize(&mut out);
                out
            })
            .collect()
    }

    fn constraint_values(&self, x: &[f64]) -> Vec<f64> {
        let d = self.dim;
        let x0 = &x[..d];
        let mut out = Vec::with_capacity(self.inst.num_constraints());
        for &(u, v) in &self.inst.edges {
            let (xu, xv) = (&x[u * d..(u + 1) * d], &x[v * d..(v + 1) * d]);
            let (a, b, c) = (dot(x0, xu), dot(x0, xv), dot(xu, xv));
            for (su, sv) in SIGN_PATTERNS {
                out.push(1.0 + su * a + sv * b + su * sv * c);
            }
        }
        out
    }

    /// Augmented Lagrangian value (to be minimized) and, if `grad` is given, its
    /// Euclidean gradient with respect to every row.
    fn merit(&self, x: &[f64], grad: Option<&mut [f64]>) -> f64 {
        let d = self.dim;
        let mu = self.penalty;
        let x0 = &x[..d];
        let mut value = 0.0;
        let mut grad = grad;
        if let Some(g) = grad.as_deref_mut() {
            g.fill(0.0);
        }
        for (e, &(u, v)) in self.inst.edges.iter().enumerate() {
            let (xu, xv) = (&x[u * d..(u + 1) * d], &x[v * d..(v + 1) * d]);
            let (a, b, c) = (dot(x0, xu), dot(x0, xv), dot(xu, xv));
            // -objective term: -(1 - c + b - a) / 4
            value -= (1.0 - c + b - a) / 4.0;
            // Coefficients of x_0, x_v in ∂/∂x_u and of x_0, x_u in ∂/∂x_v.
            let (mut du0, mut duv, mut dv0, mut dvu) = (0.25, 0.25, -0.25, 0.25);
            for (k, (su, sv)) in SIGN_PATTERNS.iter().enumerate() {
                let g = 1.0 + su * a + sv * b + su * sv * c;
                let lambda = self.multipliers[4 * e + k];
                let w = lambda - mu * g;
                if w > 0.0 {
                    value += -lambda * g + 0.5 * mu * g * g;
                    // ∂ψ/∂g = -w
                    du0 -= w * su;
                    duv -= w * su * sv;
                    dv0 -= w * sv;
                    dvu -= w * su * sv;
                } else {
                    value -= lambda * lambda / (2.0 * mu);
                }
            }
            if let Some(gr) = grad.as_deref_mut() {
                for i in 0..d {
                    gr[u * d + i] += du0 * x0[i] + duv * xv[i];
                    gr[v * d + i] += dv0 * x0[i] + dvu * xu[i];
                }
            }
        }
        value
    }

    /// Riemannian gradient descent on the free rows. Returns the number of accepted
    /// steps and whether the gradient tolerance was reached.
    fn minimize_inner(&mut self) -> (usize, bool) {
        let d = self.dim;
        let len = self.x.len();
        let mut grad = vec![0.0; len];
        let mut value = self.merit(&self.x, Some(&mut grad));
        let mut tangent = vec![0.0; len];
        let mut norm2 = project_tangent(&self.x, &grad, &mut tangent, d);
        let mut step = self.cfg.initial_step;
        let mut trial = vec![0.0; len];
        let mut trial_grad = vec![0.0; len];
        let mut trial_tangent = vec![0.0; len];
        let mut checkpoint = value;

        for it in 0..self.cfg.max_inner {
            if norm2.sqrt() <= self.cfg.inner_tol {
                return (it, true);
            }
            let mut eta = step;
            let accepted = loop {
                trial.copy_from_slice(&self.x);
                for (row, t_row) in trial.chunks_exact_mut(d).zip(tangent.chunks_exact(d)).skip(1) {
                    for (xi, ti) in row.iter_mut().zip(t_row) {
                        *xi -= eta * ti;
                    }
                    normalize(row);
                }
                let trial_value = self.merit(&trial, None);
                if trial_value <= value - 1e-4 * eta * norm2 {
                    break Some(trial_value);
                }
                eta *= 0.5;
                if eta < 1e-18 {
                    break None;
                }
            };
            let Some(new_value) = accepted else {
                // Numerical floor: no representable descent left.
                return (it, true);
            };
            self.merit(&trial, Some(&mut trial_grad));
            let new_norm2 = project_tangent(&trial, &trial_grad, &mut trial_tangent, d);

            // Barzilai-Borwein trial step for the next iteration.
            let (mut ss, mut sy) = (0.0, 0.0);
            for i in d..len {
                let s = trial[i] - self.x[i];
                ss += s * s;
                sy += s * (trial_tangent[i] - tangent[i]);
            }
            step = if sy > 0.0 { (ss / sy).clamp(1e-10, 1e4) } else { (2.0 * eta).min(1e4) };

            std::mem::swap(&mut self.x, &mut trial);
            std::mem::swap(&mut tangent, &mut trial_tangent);
            value = new_value;
            norm2 = new_norm2;

            // Near vectors pinned at ±x_0 the merit stops resolving changes while the
            // gradient still sits around √ε; stagnation counts as convergence.
            if it % STAGNATION_WINDOW == STAGNATION_WINDOW - 1 {
                if checkpoint - value <= 1e-14 * (1.0 + value.abs()) {
                    return (it + 1, true);
                }
                checkpoint = value;
            }
        }
        (self.cfg.max_inner, norm2.sqrt() <= self.cfg.inner_tol)
    }
}

const STAGNATION_WINDOW: usize = 50;

/// Writes the sphere-tangent part of `grad` (row 0 zeroed) and returns its squared norm.
fn project_tangent(x: &[f64], grad: &[f64], out: &mut [f64], d: usize) -> f64 {
    out[..d].fill(0.0);
    let mut norm2 = 0.0;
    for ((xr, gr), or) in x
        .chunks_exact(d)
        .zip(grad.chunks_exact(d))
        .zip(out.chunks_exact_mut(d))
        .skip(1)
    {
        let radial = dot(xr, gr);
        for i in 0..d {
            or[i] = gr[i] - radial * xr[i];
            norm2 += or[i] * or[i];
        }
    }
    norm2
}

fn normalize(v: &mut [f64]) {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    } else {
        v[0] = 1.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle;

    fn inst(g: &DirectedGraph) -> SdpInstance {
        build_relaxation(g).unwrap()
    }

    fn all_equal_to_x0(inst: &SdpInstance) -> VectorSolution {
        VectorSolution::integral(inst, &CutAssignment::constant(inst.num_vertices(), 1), 3).unwrap()
    }

    #[test]
    fn structure_counts() {
        for (g, vectors, constraints) in [
            (fixtures::single_edge(), 3, 4),
            (fixtures::footnote(), 6, 12),
            (fixtures::directed_triangle(), 4, 12),
        ] {
            let i = inst(&g);
            assert_eq!(i.num_vectors(), vectors);
            assert_eq!(i.num_constraints(), constraints);
        }
        let empty = DirectedGraph::new(3, vec![]).unwrap();
        assert!(matches!(build_relaxation(&empty), Err(Error::EmptyEdges)));
    }

    #[test]
    fn objective_spot_values() {
        let tri = inst(&fixtures::directed_triangle());
        assert_eq!(all_equal_to_x0(&tri).achieved_objective, 0.0);

        let edge = inst(&fixtures::single_edge());
        let c = CutAssignment::new(vec![-1, 1]).unwrap();
        assert_eq!(VectorSolution::integral(&edge, &c, 2).unwrap().achieved_objective, 1.0);

        // Vertex vectors at mutual inner product -1/2 in the plane orthogonal to x_0.
        let s = 3f64.sqrt() / 2.0;
        let rows = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, -0.5, s],
            vec![0.0, -0.5, -s],
        ];
        let sol = VectorSolution::from_rows(&tri, rows).unwrap();
        assert!((sol.achieved_objective - 0.375).abs() < 1e-15);
    }

    #[test]
    fn objective_rejects_dimension_mismatch() {
        let tri = inst(&fixtures::directed_triangle());
        let other = all_equal_to_x0(&inst(&fixtures::footnote()));
        assert!(matches!(sdp_objective(&tri, &other), Err(Error::DimensionMismatch { .. })));
        assert!(VectorSolution::from_rows(&tri, vec![vec![1.0]; 3]).is_err());
    }

    #[test]
    fn feasibility_report_spot_values() {
        let edge = inst(&fixtures::single_edge());
        let r = check_feasibility(&edge, &all_equal_to_x0(&edge), 1e-9).unwrap();
        assert_eq!(r.worst_violation, 0.0);
        assert!(r.is_feasible());

        let c = CutAssignment::new(vec![-1, 1]).unwrap();
        let sol = VectorSolution::integral(&edge, &c, 2).unwrap();
        let r = check_feasibility(&edge, &sol, 1e-9).unwrap();
        assert_eq!(r.worst_violation, 0.0);
        assert_eq!(r.min_constraint_value, 0.0);

        let rows = vec![vec![1.0, 0.0], vec![0.0, 0.9], vec![0.0, 1.0]];
        let sol = VectorSolution::from_rows(&edge, rows).unwrap();
        let r = check_feasibility(&edge, &sol, 1e-7).unwrap();
        assert!((r.worst_norm_deviation - 0.19).abs() < 1e-12);
        assert_eq!(r.worst_norm_index, 1);
        assert!(!r.is_feasible());
    }

    #[test]
    fn violated_constraint_is_located() {
        // x_u = x_v = e_2 orthogonal to x_0 is fine; push x_v towards -x_u and off x_0.
        let edge = inst(&fixtures::single_edge());
        let rows = vec![vec![1.0, 0.0], vec![0.6, 0.8], vec![0.6, -0.8]];
        let sol = VectorSolution::from_rows(&edge, rows).unwrap();
        let r = check_feasibility(&edge, &sol, 1e-9).unwrap();
        // (x0 - xu)·(x0 + xv) = 1 + 0.6 - 0.6 - (0.36 - 0.64) = 1.28 ≥ 0;
        // (x0 - xu)·(x0 - xv) = 1 - 0.6 - 0.6 + (-0.28) = -0.48.
        assert!((r.worst_violation - 0.48).abs() < 1e-12);
        assert_eq!(r.worst_signs, (-1, -1));
        assert_eq!(r.worst_edge, (0, 1));
    }

    #[test]
    fn integral_solutions_are_feasible_and_match_dicut() {
        let g = fixtures::footnote();
        let i = inst(&g);
        for mask in 0..1u64 << g.n() {
            let c = CutAssignment::from_mask(g.n(), mask);
            let sol = VectorSolution::integral(&i, &c, 4).unwrap();
            assert!(check_feasibility(&i, &sol, 0.0).unwrap().worst_violation == 0.0);
            let dicut = g.dicut_value(&c).unwrap().as_f64();
            assert!((sol.achieved_objective - dicut).abs() < 1e-15);
        }
    }

    #[test]
    fn dump_round_trips_bit_exactly() {
        let i = inst(&fixtures::directed_triangle());
        let sol = solve_relaxation(&i, &SolverConfig::with_seed(3)).unwrap();
        let back = VectorSolution::parse(&i, &sol.to_text()).unwrap();
        assert_eq!(back, sol);
        assert!(matches!(
            VectorSolution::parse(&i, "1 0\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn config_validation() {
        assert!(SolverConfig::default().validate().is_ok());
        let bad = [
            SolverConfig { rank: Some(1), ..Default::default() },
            SolverConfig { feas_tol: 0.0, ..Default::default() },
            SolverConfig { restarts: 0, ..Default::default() },
        ];
        for cfg in bad {
            assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))));
        }
    }

    #[test]
    fn single_edge_reaches_one() {
        let sol = solve_relaxation(&inst(&fixtures::single_edge()), &SolverConfig::with_seed(1)).unwrap();
        assert!((sol.achieved_objective - 1.0).abs() < 1e-6, "{}", sol.achieved_objective);
    }

    #[test]
    fn relaxation_dominates_dicut_on_fixtures() {
        for g in [fixtures::footnote(), fixtures::directed_triangle(), fixtures::oriented_bipartite(3, 3)] {
            let i = inst(&g);
            let sol = solve_relaxation(&i, &SolverConfig::with_seed(7)).unwrap();
            let exact = oracle::exact_dicut(&g, 24).unwrap().value.as_f64();
            assert!(sol.achieved_objective >= exact - 1e-6, "{} < {exact}", sol.achieved_objective);
            assert!(sol.achieved_objective <= 1.0 + 1e-12);
            let r = check_feasibility(&i, &sol, 1e-7).unwrap();
            assert!(r.is_feasible(), "{r:?}");
            let recomputed = sdp_objective(&i, &sol).unwrap();
            assert!((recomputed - sol.achieved_objective).abs() <= 1e-12);
        }
    }

    #[test]
    fn solver_is_deterministic() {
        let i = inst(&fixtures::footnote());
        let cfg = SolverConfig::with_seed(42);
        assert_eq!(solve_relaxation(&i, &cfg).unwrap(), solve_relaxation(&i, &cfg).unwrap());
    }

    #[test]
    fn non_convergence_is_reported() {
        // Planar vectors on a dense graph start far from feasible.
        let i = inst(&fixtures::oriented_bipartite(4, 4));
        let cfg = SolverConfig {
            rank: Some(2),
            max_outer: 1,
            max_inner: 1,
            restarts: 2,
            ..SolverConfig::with_seed(5)
        };
        match solve_relaxation(&i, &cfg) {
            Err(Error::NonConvergence { restarts, best_violation, .. }) => {
                assert_eq!(restarts, 2);
                assert!(best_violation > cfg.feas_tol);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn mixed_seeds_differ() {
        assert_ne!(mix_seed(0, 0), mix_seed(0, 1));
        assert_ne!(mix_seed(0, 1), mix_seed(1, 0));
    }
}
