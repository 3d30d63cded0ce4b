//! Derivative-free angle optimization and the end-to-end twisted pipeline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cut::{cutsize, max_cut_exact, Cut};
use crate::graph::Graph;
use crate::operators::twisted_hamiltonian;
use crate::postprocess::{fkl, hlz, PostMethod};
use crate::qaoa::{expectation_from_table, sample, Angles, Simulator};
use crate::{Error, Result};

/// Per-restart evaluation budget.
pub const MAX_EVALUATIONS: usize = 10_000;
/// Simplex diameter below which a restart stops.
pub const DIAMETER_TOLERANCE: f64 = 1e-8;

/// Maximizes `objective` over level-p angles with multistart Nelder-Mead.
///
/// Each restart begins at a seeded uniform point of `[0, 2pi)^{2p}`;
/// restarts run independently and the best value wins, ties by restart
/// index. Deterministic for a fixed seed.
pub fn optimize_angles<F>(
    objective: F,
    p: usize,
    restarts: usize,
    seed: u64,
) -> Result<(Angles, f64)>
where
    F: Fn(&Angles) -> Result<f64> + Sync,
{
    assert!(restarts >= 1, "at least one restart required");
    let results: Vec<Result<(Vec<f64>, f64)>> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(seed.wrapping_add((r as u64).wrapping_mul(0x9E37_79B9)));
            let x0: Vec<f64> = (0..2 * p)
                .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
                .collect();
            nelder_mead_max(&objective, &x0)
        })
        .collect();
    let mut best: Option<(Vec<f64>, f64)> = None;
    for r in results {
        let (x, v) = r?;
        let better = best.as_ref().is_none_or(|(_, bv)| v > *bv);
        if better {
            best = Some((x, v));
        }
    }
    let (x, v) = best.expect("restarts >= 1");
    Ok((Angles::from_flat(&x), v))
}

/// One Nelder-Mead ascent (standard reflection/expansion/contraction/shrink
/// coefficients) from `x0`, with the crate-wide budget and tolerance.
fn nelder_mead_max<F>(objective: &F, x0: &[f64]) -> Result<(Vec<f64>, f64)>
where
    F: Fn(&Angles) -> Result<f64>,
{
    let dim = x0.len();
    let evals = std::cell::Cell::new(0usize);
    let eval = |x: &[f64]| -> Result<f64> {
        evals.set(evals.get() + 1);
        let v = objective(&Angles::from_flat(x))?;
        if !v.is_finite() {
            return Err(Error::NonFiniteObjective);
        }
        Ok(v)
    };

    // Simplex of (point, value), kept sorted descending by value.
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let v0 = eval(x0)?;
    simplex.push((x0.to_vec(), v0));
    for i in 0..dim {
        let mut x = x0.to_vec();
        x[i] += 0.5;
        let v = eval(&x)?;
        simplex.push((x, v));
    }

    loop {
        simplex.sort_by(|a, b| b.1.total_cmp(&a.1));
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max)
            })
            .fold(0.0f64, f64::max);
        if diameter < DIAMETER_TOLERANCE || evals.get() >= MAX_EVALUATIONS {
            return Ok(simplex.swap_remove(0));
        }

        let centroid: Vec<f64> = (0..dim)
            .map(|i| simplex[..dim].iter().map(|(x, _)| x[i]).sum::<f64>() / dim as f64)
            .collect();
        let worst = simplex[dim].clone();
        let second_worst = simplex[dim - 1].1;
        let best = simplex[0].1;

        let reflect: Vec<f64> = centroid
            .iter()
            .zip(&worst.0)
            .map(|(c, w)| c + (c - w))
            .collect();
        let v_reflect = eval(&reflect)?;

        if v_reflect > best {
            let expand: Vec<f64> = centroid
                .iter()
                .zip(&worst.0)
                .map(|(c, w)| c + 2.0 * (c - w))
                .collect();
            let v_expand = eval(&expand)?;
            simplex[dim] = if v_expand > v_reflect {
                (expand, v_expand)
            } else {
                (reflect, v_reflect)
            };
            continue;
        }
        if v_reflect > second_worst {
            simplex[dim] = (reflect, v_reflect);
            continue;
        }
        let contract: Vec<f64> = centroid
            .iter()
            .zip(&worst.0)
            .map(|(c, w)| c + 0.5 * (w - c))
            .collect();
        let v_contract = eval(&contract)?;
        if v_contract > worst.1 {
            simplex[dim] = (contract, v_contract);
            continue;
        }
        // Shrink toward the best vertex.
        let anchor = simplex[0].0.clone();
        for entry in simplex.iter_mut().skip(1) {
            let x: Vec<f64> = entry
                .0
                .iter()
                .zip(&anchor)
                .map(|(x, a)| a + 0.5 * (x - a))
                .collect();
            let v = eval(&x)?;
            *entry = (x, v);
        }
    }
}

/// Record of one end-to-end twisted run.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub post: PostMethod,
    pub p: usize,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
    /// Optimized expectation of the (possibly twisted) cost Hamiltonian.
    pub optimized_value: f64,
    pub best_cut: String,
    pub best_cutsize: usize,
    pub max_cut: usize,
    /// Empirical mean of post-processed cut size over max cut.
    pub mean_ratio: f64,
}

/// Restarts used by [`twisted_qaoa_run`].
pub const RUN_RESTARTS: usize = 8;

/// The full pipeline: optimize the twisted energy, sample cuts from the
/// optimal state, post-process each, report the best cut and the empirical
/// mean approximation ratio.
pub fn twisted_qaoa_run(
    g: &Graph,
    p: usize,
    post: PostMethod,
    shots: usize,
    seed: u64,
) -> Result<RunRecord> {
    if !g.is_three_regular() {
        return Err(Error::NotThreeRegular);
    }
    if post == PostMethod::Hlz && g.has_triangle() {
        return Err(Error::TriangleFound);
    }
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let sim = Simulator::new(g)?;
    let objective_table = twisted_hamiltonian(g, post)?.value_table(g.n())?;
    let objective = |a: &Angles| -> Result<f64> {
        Ok(expectation_from_table(&sim.prepare(a), &objective_table))
    };
    let (angles, optimized_value) = optimize_angles(objective, p, RUN_RESTARTS, seed)?;

    let state = sim.prepare(&angles);
    let cuts = sample(&state, seed ^ 0x5EED_CAFE, shots)?;
    let (max_cut, _) = max_cut_exact(g)?;

    let mut best: Option<(usize, Cut)> = None;
    let mut total = 0usize;
    for c in cuts {
        let improved = match post {
            PostMethod::None => c,
            PostMethod::Fkl => fkl(g, &c)?,
            PostMethod::Hlz => hlz(g, &c)?,
        };
        let size = cutsize(g, &improved)?;
        total += size;
        let better = best.as_ref().is_none_or(|(bs, _)| size > *bs);
        if better {
            best = Some((size, improved));
        }
    }
    let (best_cutsize, best_cut) = best.expect("shots >= 1");
    Ok(RunRecord {
        post,
        p,
        beta: angles.beta.clone(),
        gamma: angles.gamma.clone(),
        optimized_value,
        best_cut: best_cut.to_string(),
        best_cutsize,
        max_cut,
        mean_ratio: total as f64 / shots as f64 / max_cut as f64,
    })
}
