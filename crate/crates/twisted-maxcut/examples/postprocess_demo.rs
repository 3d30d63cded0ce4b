//! Apply the FKL and HLZ greedy improvements to a random cut of a random
//! 3-regular graph, tracing every flip and checking the guaranteed gains.
//!
//! Run with: cargo run --release --example postprocess_demo

use twisted_maxcut::cut::{cutsize, good_triplets, max_cut_exact, unsat_sets, Cut};
use twisted_maxcut::graph::{girth, random_three_regular};
use twisted_maxcut::postprocess::{fkl_traced, hlz_traced};

fn main() {
    // A triangle-free instance so both procedures apply.
    let (g, seed) = (0..)
        .map(|s| (random_three_regular(14, s).unwrap(), s))
        .find(|(g, _)| girth(g).is_none_or(|c| c >= 4))
        .unwrap();
    let cut = Cut::from_mask(14, 0b10010110101100);
    let before = cutsize(&g, &cut).unwrap();
    let (mc, _) = max_cut_exact(&g).unwrap();
    println!("graph: n=14 seed={seed}, MC = {mc}; starting cut {cut} with cutsize {before}");

    let good = good_triplets(&g, &cut).unwrap().len();
    let out = fkl_traced(&g, &cut).unwrap();
    println!(
        "\nFKL ({} good triplets, guaranteed gain {:.2}):",
        good,
        good as f64 / 3.0
    );
    for rec in &out.trace {
        let verts: Vec<String> = rec.vertices.iter().map(|v| v.to_string()).collect();
        println!(
            "  flip {{{}}}: {} -> {}",
            verts.join(" "),
            rec.before,
            rec.after
        );
    }
    let after = cutsize(&g, &out.cut).unwrap();
    println!(
        "  result {} with cutsize {} (gain {})",
        out.cut,
        after,
        after - before
    );
    assert!(3 * (after - before) >= good);

    let (v2, v3) = unsat_sets(&g, &cut).unwrap();
    let guaranteed = 0.4 * v2.len() as f64 + 17.0 / 15.0 * v3.len() as f64;
    let out = hlz_traced(&g, &cut).unwrap();
    println!(
        "\nHLZ (|V2| = {}, |V3| = {}, guaranteed gain {:.2}):",
        v2.len(),
        v3.len(),
        guaranteed
    );
    for rec in &out.trace {
        let verts: Vec<String> = rec.vertices.iter().map(|v| v.to_string()).collect();
        println!(
            "  flip {{{}}}: {} -> {}",
            verts.join(" "),
            rec.before,
            rec.after
        );
    }
    let after = cutsize(&g, &out.cut).unwrap();
    println!(
        "  result {} with cutsize {} (gain {})",
        out.cut,
        after,
        after - before
    );
    let (r2, r3) = unsat_sets(&g, &out.cut).unwrap();
    assert!(r2.is_empty() && r3.is_empty());
    println!("  no doubly or triply unsatisfied vertices remain");
}
