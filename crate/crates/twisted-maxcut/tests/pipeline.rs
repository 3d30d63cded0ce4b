//! Sampling-level checks that the twisted energies really do lower-bound the
//! post-processed cut sizes (the classical guarantees hold per shot, so the
//! sampled means must dominate the modified-Hamiltonian expectations up to
//! Monte Carlo noise).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twisted_maxcut::cut::cutsize;
use twisted_maxcut::graph::{girth, random_three_regular, Graph};
use twisted_maxcut::operators::twisted_hamiltonian;
use twisted_maxcut::postprocess::{fkl, hlz, PostMethod};
use twisted_maxcut::qaoa::{expectation, prepare_state, sample, Angles};

fn triangle_free(n: usize, seed0: u64) -> Graph {
    let mut seed = seed0;
    loop {
        seed += 1;
        let g = random_three_regular(n, seed).unwrap();
        if girth(&g).is_none_or(|c| c >= 4) {
            return g;
        }
    }
}

fn mean_and_sigma(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[test]
fn sampled_fkl_mean_dominates_twisted_energy() {
    let g = triangle_free(12, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for trial in 0..3 {
        let a = Angles::new(
            vec![rng.gen::<f64>() * std::f64::consts::TAU],
            vec![rng.gen::<f64>() * std::f64::consts::TAU],
        );
        let state = prepare_state(&g, &a).unwrap();
        let energy =
            expectation(&state, &twisted_hamiltonian(&g, PostMethod::Fkl).unwrap()).unwrap();
        let sizes: Vec<f64> = sample(&state, 100 + trial, 4000)
            .unwrap()
            .iter()
            .map(|c| cutsize(&g, &fkl(&g, c).unwrap()).unwrap() as f64)
            .collect();
        let (mean, sigma) = mean_and_sigma(&sizes);
        assert!(
            mean >= energy - 3.0 * sigma,
            "trial {trial}: mean {mean:.3} energy {energy:.3} sigma {sigma:.3}"
        );
    }
}

#[test]
fn twisted_runs_dominate_bare_runs_on_paired_seeds() {
    use twisted_maxcut::optimize::twisted_qaoa_run;
    let shots = 500usize;
    let mut graphs = 0;
    while graphs < 20 {
        let n = [8usize, 10, 12][graphs % 3];
        let g = random_three_regular(n, 7000 + graphs as u64).unwrap();
        let seed = 400 + graphs as u64;
        let bare = twisted_qaoa_run(&g, 1, PostMethod::None, shots, seed).unwrap();
        let twisted = twisted_qaoa_run(&g, 1, PostMethod::Fkl, shots, seed).unwrap();
        // Sample means sit within 3 sigma; cut sizes spread at most |E|/2
        // around their mean, so this allowance is conservative.
        let allowance = 3.0 * (g.edge_count() as f64 / 2.0) / (shots as f64).sqrt();
        let bare_mean = bare.mean_ratio * bare.max_cut as f64;
        let twisted_mean = twisted.mean_ratio * twisted.max_cut as f64;
        assert!(
            twisted_mean >= bare_mean - allowance,
            "n={n} seed={seed}: twisted {twisted_mean:.3} bare {bare_mean:.3}"
        );
        graphs += 1;
    }
}

#[test]
fn sampled_hlz_mean_dominates_twisted_energy() {
    let g = triangle_free(12, 50);
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for trial in 0..3 {
        let a = Angles::new(
            vec![rng.gen::<f64>() * std::f64::consts::TAU],
            vec![rng.gen::<f64>() * std::f64::consts::TAU],
        );
        let state = prepare_state(&g, &a).unwrap();
        let energy =
            expectation(&state, &twisted_hamiltonian(&g, PostMethod::Hlz).unwrap()).unwrap();
        let sizes: Vec<f64> = sample(&state, 200 + trial, 4000)
            .unwrap()
            .iter()
            .map(|c| cutsize(&g, &hlz(&g, c).unwrap()).unwrap() as f64)
            .collect();
        let (mean, sigma) = mean_and_sigma(&sizes);
        assert!(
            mean >= energy - 3.0 * sigma,
            "trial {trial}: mean {mean:.3} energy {energy:.3} sigma {sigma:.3}"
        );
    }
}
