//! The level-1 worst-environment arguments in detail: the local operator
//! expectation in every 1-environment, the local MaxCut fractions, and the
//! mediant step that turns the worst ratio into a graph-wide guarantee.
//!
//! Run with: cargo run --release --example environment_breakdown

use twisted_maxcut::certify::{certify_p1_fkl, certify_p1_hlz};

fn main() {
    let fkl = certify_p1_fkl().expect("fkl certificate runs");
    println!("FKL level 1: triplet operator over the 11 triplet environments");
    println!("  env   <T>        L       <T>/L");
    for env in &fkl.breakdown {
        println!(
            "  {:<4}  {:.6}   {:.2}    {:.6}",
            env.name, env.expectation, env.l_fraction, env.ratio
        );
    }
    println!(
        "  tree environment minimal: {}; certified bound {:.6} (target {:.4})\n",
        fkl.worst_environment_first, fkl.bound, fkl.target
    );

    let hlz = certify_p1_hlz().expect("hlz certificate runs");
    println!("HLZ level 1: star operator over the 8 triangle-free star environments");
    println!("  env   <S>");
    for env in &hlz.breakdown {
        println!("  {:<4}  {:.6}", env.name, env.expectation);
    }
    println!(
        "  tree environment minimal: {}; certified bound (2/3)*min = {:.6} (target {:.4})",
        hlz.worst_environment_first, hlz.bound, hlz.target
    );
}
