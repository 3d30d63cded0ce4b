//! The FKL and HLZ greedy cut-improvement procedures.
//!
//! Both take a 3-regular graph and a starting cut and repeatedly flip vertex
//! sets until no improvable structure remains. FKL removes good (i.e.
//! monochromatic) triplets; its result gains at least a third of the initial
//! good-triplet count. HLZ removes vertices with two or three unsatisfied
//! edges from triangle-free graphs; its result gains at least
//! `(2/5)|V2| + (17/15)|V3|`.

use serde::{Deserialize, Serialize};

use crate::cut::{cutsize, flip, good_triplets, unsat_sets, Cut};
use crate::graph::{Graph, Triplet};
use crate::{Error, Result};

/// Classical post-processing selector used across the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PostMethod {
    None,
    Fkl,
    Hlz,
}

impl PostMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            PostMethod::None => "none",
            PostMethod::Fkl => "fkl",
            PostMethod::Hlz => "hlz",
        }
    }
}

impl std::str::FromStr for PostMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(PostMethod::None),
            "fkl" => Ok(PostMethod::Fkl),
            "hlz" => Ok(PostMethod::Hlz),
            other => Err(format!("unknown post-processing method {other:?}")),
        }
    }
}

/// One recorded flip: the vertex set and the cut sizes around it.
#[derive(Debug, Clone, Serialize)]
pub struct FlipRecord {
    pub vertices: Vec<usize>,
    pub before: usize,
    pub after: usize,
}

/// Result of a traced post-processing run.
#[derive(Debug, Clone)]
pub struct PostOutcome {
    pub cut: Cut,
    pub trace: Vec<FlipRecord>,
}

/// FKL improvement; see [`fkl_traced`] for the traced variant.
pub fn fkl(g: &Graph, c: &Cut) -> Result<Cut> {
    Ok(fkl_traced(g, c)?.cut)
}

/// Runs the FKL procedure: while monochromatic triplets from the initial set
/// survive, pick the one whose cheapest member flip destroys the fewest of
/// them, flip its best member (greatest cut gain per destroyed triplet) and
/// drop the destroyed ones.
pub fn fkl_traced(g: &Graph, c: &Cut) -> Result<PostOutcome> {
    if !g.is_three_regular() {
        return Err(Error::NotThreeRegular);
    }
    let mut cut = c.clone();
    let mut size = cutsize(g, &cut)?;
    let mut survivors: Vec<Triplet> = good_triplets(g, &cut)?;
    let mut trace = Vec::new();

    while !survivors.is_empty() {
        // Number of surviving triplets containing each vertex: flipping a
        // vertex destroys exactly the survivors it belongs to.
        let mut occurrences = vec![0usize; g.n()];
        for t in &survivors {
            for v in t.members() {
                occurrences[v] += 1;
            }
        }
        // The triplet whose least-destructive member flip is cheapest;
        // survivors are kept in lexicographic order, so the first minimum
        // realizes the lexicographic tie-break.
        let chosen = *survivors
            .iter()
            .min_by_key(|t| t.members().iter().map(|&v| occurrences[v]).min().unwrap())
            .expect("survivors nonempty");

        // Best member by gain per destroyed survivor, compared exactly via
        // cross-multiplication; earlier members win ties.
        let mut best: Option<(i64, usize, usize)> = None; // (gain, destroyed, vertex)
        for v in chosen.members() {
            let unsat = g
                .neighbors(v)
                .iter()
                .filter(|&&u| cut.color(u) == cut.color(v))
                .count() as i64;
            let gain = 2 * unsat - 3;
            let destroyed = occurrences[v];
            assert!(
                destroyed >= 1,
                "flipping a member destroys the chosen triplet"
            );
            let better = match best {
                None => true,
                Some((bg, bd, _)) => gain * bd as i64 > bg * destroyed as i64,
            };
            if better {
                best = Some((gain, destroyed, v));
            }
        }
        let (_, _, v) = best.expect("triplet has members");

        let next = flip(&cut, &[v]);
        let next_size = cutsize(g, &next)?;
        trace.push(FlipRecord {
            vertices: vec![v],
            before: size,
            after: next_size,
        });
        cut = next;
        size = next_size;
        survivors.retain(|t| cut.color(t.c) == cut.color(t.j) && cut.color(t.c) == cut.color(t.k));
    }

    Ok(PostOutcome { cut, trace })
}

/// HLZ improvement; see [`hlz_traced`] for the traced variant.
pub fn hlz(g: &Graph, c: &Cut) -> Result<Cut> {
    Ok(hlz_traced(g, c)?.cut)
}

/// Runs the HLZ procedure on a triangle-free 3-regular graph: flip fully
/// unsatisfied vertices first (fewest such neighbors wins), then alternate
/// flips along paths or cycles of doubly-unsatisfied vertices, until both
/// sets are empty. Every iteration must strictly increase the cut size.
pub fn hlz_traced(g: &Graph, c: &Cut) -> Result<PostOutcome> {
    if !g.is_three_regular() {
        return Err(Error::NotThreeRegular);
    }
    if g.has_triangle() {
        return Err(Error::TriangleFound);
    }
    let mut cut = c.clone();
    let mut size = cutsize(g, &cut)?;
    let (mut v2, mut v3) = unsat_sets(g, &cut)?;
    let mut trace = Vec::new();

    while !(v2.is_empty() && v3.is_empty()) {
        let to_flip: Vec<usize> = if !v3.is_empty() {
            // Vertex of V3 with the fewest V3 neighbors, smallest index on
            // ties; v3 is sorted, so the first minimum suffices.
            let v = *v3
                .iter()
                .min_by_key(|&&v| g.neighbors(v).iter().filter(|u| v3.contains(u)).count())
                .expect("v3 nonempty");
            vec![v]
        } else {
            let v = v2[0];
            let chain = extract_chain(g, &cut, &v2, v);
            chain.iter().copied().step_by(2).collect()
        };

        let next = flip(&cut, &to_flip);
        let next_size = cutsize(g, &next)?;
        if next_size <= size {
            return Err(Error::NoProgress);
        }
        trace.push(FlipRecord {
            vertices: to_flip,
            before: size,
            after: next_size,
        });
        cut = next;
        size = next_size;
        let sets = unsat_sets(g, &cut)?;
        v2 = sets.0;
        v3 = sets.1;
    }

    Ok(PostOutcome { cut, trace })
}

/// The path or cycle of unsatisfied edges through `v` among the doubly
/// unsatisfied vertices, listed in flip order (position 1 first).
///
/// Every vertex of `v2` has exactly two unsatisfied edges, so the subgraph
/// of unsatisfied edges inside `v2` has maximum degree two and its components
/// are plain paths and cycles. A path is read from its smaller endpoint; a
/// cycle is read starting at `v` towards its smaller neighbor. Alternate
/// flips along such a chain always gain at least one edge: every chain edge
/// flips to satisfied and at most every second vertex sacrifices its one
/// satisfied edge.
fn extract_chain(g: &Graph, cut: &Cut, v2: &[usize], v: usize) -> Vec<usize> {
    let in_v2 = |u: usize| v2.binary_search(&u).is_ok();
    let unsat_neighbors = |u: usize| -> Vec<usize> {
        g.neighbors(u)
            .iter()
            .copied()
            .filter(|&w| in_v2(w) && cut.color(w) == cut.color(u))
            .collect()
    };
    // Connected component of v under unsatisfied edges within V2.
    let mut comp = vec![v];
    let mut seen = std::collections::HashSet::from([v]);
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for w in unsat_neighbors(u) {
            if seen.insert(w) {
                comp.push(w);
                stack.push(w);
            }
        }
    }
    comp.sort_unstable();
    debug_assert!(comp.iter().all(|&u| unsat_neighbors(u).len() <= 2));

    if comp.len() <= 2 {
        return comp;
    }
    let endpoints: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&u| unsat_neighbors(u).len() == 1)
        .collect();
    if endpoints.is_empty() {
        // A cycle: walk from v towards its smaller neighbor.
        return walk_chain(v, *unsat_neighbors(v).iter().min().unwrap(), &unsat_neighbors, comp.len());
    }
    // A path: walk from the smaller endpoint.
    let start = *endpoints.iter().min().unwrap();
    let next = unsat_neighbors(start)[0];
    walk_chain(start, next, &unsat_neighbors, comp.len())
}

fn walk_chain(
    start: usize,
    second: usize,
    comp_neighbors: &dyn Fn(usize) -> Vec<usize>,
    len: usize,
) -> Vec<usize> {
    let mut chain = vec![start, second];
    while chain.len() < len {
        let head = chain[chain.len() - 1];
        let prev = chain[chain.len() - 2];
        let next = comp_neighbors(head)
            .into_iter()
            .find(|&u| u != prev && !chain.contains(&u));
        match next {
            Some(u) => chain.push(u),
            None => break,
        }
    }
    chain
}
