//! The end-to-end hybrid pipeline on a concrete instance: optimize the
//! (twisted) energy, sample cuts, post-process, compare bare against twisted.
//!
//! Run with: cargo run --release --example twisted_pipeline

use twisted_maxcut::graph::{girth, random_three_regular, Graph};
use twisted_maxcut::optimize::twisted_qaoa_run;
use twisted_maxcut::postprocess::PostMethod;

fn show(label: &str, g: &Graph, post: PostMethod, seed: u64) {
    let record = twisted_qaoa_run(g, 1, post, 2000, seed).expect("pipeline runs");
    println!(
        "  {label:<12} optimized energy {:.4}  best cut {}/{}  mean ratio {:.4}",
        record.optimized_value, record.best_cutsize, record.max_cut, record.mean_ratio
    );
}

fn main() {
    println!("K_{{3,3}}, level 1, 2000 shots:");
    let k33 = Graph::complete_bipartite(3, 3);
    show("bare", &k33, PostMethod::None, 7);
    show("twisted FKL", &k33, PostMethod::Fkl, 7);
    show("twisted HLZ", &k33, PostMethod::Hlz, 7);

    let g = (1..)
        .map(|s| random_three_regular(16, s).unwrap())
        .find(|g| girth(g).is_none_or(|c| c >= 4))
        .unwrap();
    println!("\nrandom triangle-free cubic graph on 16 vertices, level 1, 2000 shots:");
    show("bare", &g, PostMethod::None, 11);
    show("twisted FKL", &g, PostMethod::Fkl, 11);
    show("twisted HLZ", &g, PostMethod::Hlz, 11);
}
