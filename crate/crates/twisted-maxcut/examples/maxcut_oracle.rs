//! The exact MaxCut solver and the combinatorial upper bounds around it:
//! frustrated triangles, crossed squares, and the per-edge and per-triplet
//! local MaxCut fractions.
//!
//! Run with: cargo run --release --example maxcut_oracle

use num_rational::Rational64;
use twisted_maxcut::cut::{l_edge, l_triplet, max_cut_exact, mc_upper_bound};
use twisted_maxcut::graph::{
    crossed_squares, girth, isolated_triangles, random_three_regular, triplets, Graph,
};

fn main() {
    let zoo: Vec<(&str, Graph)> = vec![
        ("K4", Graph::complete(4)),
        ("K_{3,3}", Graph::complete_bipartite(3, 3)),
        ("3-prism", Graph::prism()),
        ("Petersen", Graph::petersen()),
        ("McGee", Graph::mcgee()),
        ("random n=14", random_three_regular(14, 5).unwrap()),
        ("random n=18", random_three_regular(18, 5).unwrap()),
    ];
    println!("graph        n   |E|  girth  MC  bound  iso-tri  crossed  sum L_e");
    for (name, g) in &zoo {
        let (mc, _) = max_cut_exact(g).unwrap();
        let bound = mc_upper_bound(g).unwrap();
        let l_sum: Rational64 = g.edges().iter().map(|&e| l_edge(g, e)).sum();
        let l_triplet_sum: Rational64 = triplets(g).iter().map(|t| l_triplet(g, t)).sum();
        assert_eq!(l_sum, l_triplet_sum);
        assert!(bound >= mc);
        assert!(l_sum >= Rational64::from_integer(mc as i64));
        println!(
            "{:<11} {:>3}  {:>3}  {:>5}  {:>2}  {:>5}  {:>7}  {:>7}  {}",
            name,
            g.n(),
            g.edge_count(),
            girth(g).map_or("inf".into(), |c| c.to_string()),
            mc,
            bound,
            isolated_triangles(g).len(),
            crossed_squares(g).len(),
            l_sum,
        );
    }
    println!("\nevery bound dominates the exact optimum; edge and triplet L-sums agree");
}
