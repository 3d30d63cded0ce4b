//! Classify the 1-environments of random 3-regular graphs against the
//! edge, triplet and star catalogs, and show how the mix shifts with girth.
//!
//! Run with: cargo run --release --example classify_environments

use twisted_maxcut::graph::{
    girth, p_environment, random_three_regular, star_catalog, triplet_catalog, triplets,
};

fn main() {
    let triplet_cat = triplet_catalog();
    let star_cat = star_catalog();

    let mut triplet_counts = vec![0usize; triplet_cat.len()];
    let mut star_counts = vec![0usize; star_cat.len()];
    let mut graphs = 0;
    let mut star_graphs = 0;

    for n in (8..=18).step_by(2) {
        for seed in 0..6 {
            let g = random_three_regular(n, seed * 101 + n as u64).unwrap();
            graphs += 1;
            for t in triplets(&g) {
                let env = p_environment(&g, &[t.c, t.j, t.k], 1);
                triplet_counts[triplet_cat.classify(&env).expect("catalog is complete")] += 1;
            }
            if girth(&g).is_none_or(|c| c >= 4) {
                star_graphs += 1;
                for c in 0..g.n() {
                    let nb = g.neighbors(c);
                    let env = p_environment(&g, &[c, nb[0], nb[1], nb[2]], 1);
                    star_counts[star_cat.classify(&env).expect("catalog is complete")] += 1;
                }
            }
        }
    }

    println!("triplet environments over {graphs} random cubic graphs:");
    for (entry, count) in triplet_cat.entries.iter().zip(&triplet_counts) {
        println!("  {:<4} {count}", entry.name);
    }
    println!("\nstar environments over the {star_graphs} triangle-free ones:");
    for (entry, count) in star_cat.entries.iter().zip(&star_counts) {
        println!("  {:<4} {count}", entry.name);
    }
    println!("\nno environment fell outside the catalogs");
}
