//! Cross-check the two expectation backends: exact statevector simulation
//! against trajectory message passing on the certification trees, then show
//! the treeval backend alone reaching depths no statevector can.
//!
//! Run with: cargo run --release --example backend_agreement

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twisted_maxcut::certify::witness_angles;
use twisted_maxcut::certify::Method;
use twisted_maxcut::graph::EnvKind;
use twisted_maxcut::qaoa::{expectation, prepare_state, Angles};
use twisted_maxcut::treeval::{canonical_bound_parts, certified_tree_bound, tree_expectation};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    println!("statevector vs treeval on the certification trees:");
    for p in 1..=2usize {
        let mut worst: f64 = 0.0;
        for _ in 0..5 {
            let a = Angles::new(
                (0..p)
                    .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
                    .collect(),
                (0..p)
                    .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
                    .collect(),
            );
            for kind in [EnvKind::Edge, EnvKind::Triplet, EnvKind::Star] {
                let (tree, obs, _) = canonical_bound_parts(kind, p);
                let sv = expectation(&prepare_state(&tree.graph, &a).unwrap(), &obs).unwrap();
                let tv = tree_expectation(&tree, &a, &obs).unwrap();
                worst = worst.max((sv - tv).abs());
            }
        }
        println!("  p={p}: max |statevector - treeval| = {worst:.2e} over 15 comparisons");
    }

    println!("\ntreeval beyond the statevector budget (trees with hundreds of vertices):");
    for p in 3..=6 {
        let start = std::time::Instant::now();
        let a = witness_angles(Method::Hlz, p).unwrap();
        let bound = certified_tree_bound(EnvKind::Star, p, &a).unwrap();
        let vertices = 4 + 6 * ((1usize << p) - 1);
        println!(
            "  p={p}: star tree with {vertices} vertices -> bound {bound:.6} in {:.2}s",
            start.elapsed().as_secs_f64()
        );
    }
}
