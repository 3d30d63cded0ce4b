//! Cuts, cut sizes, good triplets, exact MaxCut and combinatorial bounds.

use num_rational::Rational64;
use rayon::prelude::*;

use crate::graph::{crossed_squares, isolated_triangles, triplets, Graph, Triplet};
use crate::{Error, Result};

/// Budget for exact MaxCut enumeration.
pub const MAX_EXACT_VERTICES: usize = 26;

/// A two-coloring of the vertices; bit `i` is the color of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    bits: Vec<u8>,
}

impl Cut {
    pub fn new(bits: Vec<u8>) -> Cut {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Cut { bits }
    }

    /// The constant cut assigning `color` to every vertex.
    pub fn constant(n: usize, color: u8) -> Cut {
        Cut {
            bits: vec![color & 1; n],
        }
    }

    /// Decodes the low `n` bits of `mask`, vertex `i` from bit `i`.
    pub fn from_mask(n: usize, mask: u64) -> Cut {
        Cut {
            bits: (0..n).map(|i| ((mask >> i) & 1) as u8).collect(),
        }
    }

    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.bits.len() <= 64);
        self.bits
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, &b)| m | ((b as u64) << i))
    }

    /// Parses a 0/1 string, vertex 0 leftmost.
    pub fn parse(s: &str) -> Result<Cut> {
        let bits: Result<Vec<u8>> = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::BadCutString(format!("unexpected character {ch:?}"))),
            })
            .collect();
        Ok(Cut { bits: bits? })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn color(&self, v: usize) -> u8 {
        self.bits[v]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.bits.len() != g.n() {
            return Err(Error::CutSizeMismatch {
                cut: self.bits.len(),
                n: g.n(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for Cut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Number of edges whose endpoints receive different colors.
pub fn cutsize(g: &Graph, c: &Cut) -> Result<usize> {
    c.check(g)?;
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| c.color(u) != c.color(v))
        .count())
}

/// The cut with colors inverted exactly on `w`.
pub fn flip(c: &Cut, w: &[usize]) -> Cut {
    let mut bits = c.bits.clone();
    for &v in w {
        bits[v] ^= 1;
    }
    Cut { bits }
}

/// The triplets that are monochromatic under `c`.
pub fn good_triplets(g: &Graph, c: &Cut) -> Result<Vec<Triplet>> {
    c.check(g)?;
    Ok(triplets(g)
        .into_iter()
        .filter(|t| c.color(t.c) == c.color(t.j) && c.color(t.c) == c.color(t.k))
        .collect())
}

/// `(V2, V3)`: vertices with exactly 2 and exactly 3 incident unsatisfied
/// (monochromatic) edges. Requires a 3-regular graph.
pub fn unsat_sets(g: &Graph, c: &Cut) -> Result<(Vec<usize>, Vec<usize>)> {
    c.check(g)?;
    if !g.is_three_regular() {
        return Err(Error::NotThreeRegular);
    }
    let mut v2 = Vec::new();
    let mut v3 = Vec::new();
    for v in 0..g.n() {
        let unsat = g
            .neighbors(v)
            .iter()
            .filter(|&&u| c.color(u) == c.color(v))
            .count();
        match unsat {
            2 => v2.push(v),
            3 => v3.push(v),
            _ => {}
        }
    }
    Ok((v2, v3))
}

/// Exact maximum cut by enumerating all cuts with vertex 0 fixed to color 0.
///
/// Returns the optimum size and a witness. Ties resolve to the smallest cut
/// mask, so the result is deterministic.
pub fn max_cut_exact(g: &Graph) -> Result<(usize, Cut)> {
    let n = g.n();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooManyVertices(n, MAX_EXACT_VERTICES));
    }
    if n == 0 {
        return Ok((0, Cut::new(Vec::new())));
    }
    let edge_masks: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u64 << u) | (1u64 << v))
        .collect();
    let total: u64 = 1u64 << (n - 1);
    let best = (0..total)
        .into_par_iter()
        .map(|mask| {
            let size = edge_masks
                .iter()
                .filter(|&&em| (mask & em).count_ones() == 1)
                .count();
            (size, mask)
        })
        .reduce(
            || (0usize, u64::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        );
    Ok((best.0, Cut::from_mask(n, best.1)))
}

/// Combinatorial upper bound on the maximum cut of a 3-regular graph:
/// every isolated triangle and every crossed square frustrates at least one
/// edge. K4 components are scored exactly.
pub fn mc_upper_bound(g: &Graph) -> Result<usize> {
    if !g.is_three_regular() {
        return Err(Error::NotThreeRegular);
    }
    let comp = components(g);
    let iso = isolated_triangles(g);
    let crossed = crossed_squares(g);
    let mut bound = 0usize;
    let comp_count = comp.iter().copied().max().map_or(0, |m| m + 1);
    for id in 0..comp_count {
        let verts: Vec<usize> = (0..g.n()).filter(|&v| comp[v] == id).collect();
        let edges = g.edges().iter().filter(|&&(u, _)| comp[u] == id).count();
        if verts.len() == 4 && edges == 6 {
            bound += 4;
            continue;
        }
        let iso_here = iso.iter().filter(|t| comp[t[0]] == id).count();
        let crossed_here = crossed.iter().filter(|(t, _)| comp[t[0]] == id).count();
        bound += edges - iso_here - crossed_here;
    }
    Ok(bound)
}

fn components(g: &Graph) -> Vec<usize> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut next = 0;
    for start in 0..g.n() {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = next;
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if comp[v] == usize::MAX {
                    comp[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Local averaged MaxCut fraction of an edge: 1, or 4/5 when the edge lies in
/// a triangle.
pub fn l_edge(g: &Graph, e: (usize, usize)) -> Rational64 {
    let (u, v) = e;
    let in_triangle = g.neighbors(u).iter().any(|&w| w != v && g.has_edge(v, w));
    if in_triangle {
        Rational64::new(4, 5)
    } else {
        Rational64::from_integer(1)
    }
}

/// Local averaged MaxCut fraction of a triplet: a quarter of the sum over its
/// two edges.
pub fn l_triplet(g: &Graph, t: &Triplet) -> Rational64 {
    (l_edge(g, (t.c, t.j)) + l_edge(g, (t.c, t.k))) / 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_three_regular;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bipartition(n: usize) -> Cut {
        // For K_{a,a} built by Graph::complete_bipartite.
        Cut::new((0..n).map(|v| u8::from(v >= n / 2)).collect())
    }

    #[test]
    fn cutsize_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(cutsize(&k4, &Cut::constant(4, 0)).unwrap(), 0);
        assert_eq!(cutsize(&k4, &Cut::parse("0011").unwrap()).unwrap(), 4);
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(cutsize(&k33, &bipartition(6)).unwrap(), 9);
        assert!(matches!(
            cutsize(&k4, &Cut::constant(3, 0)),
            Err(Error::CutSizeMismatch { cut: 3, n: 4 })
        ));
    }

    #[test]
    fn flip_behaves_like_involution() {
        let c = Cut::parse("0000").unwrap();
        assert_eq!(flip(&c, &[1, 2]).to_string(), "0110");
        assert_eq!(flip(&c, &[]), c);
        let g = random_three_regular(10, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let c = Cut::from_mask(10, rng.gen::<u64>() & 0x3ff);
            let w: Vec<usize> = (0..10).filter(|_| rng.gen_bool(0.5)).collect();
            assert_eq!(flip(&flip(&c, &w), &w), c);
            let all: Vec<usize> = (0..10).collect();
            assert_eq!(
                cutsize(&g, &flip(&c, &all)).unwrap(),
                cutsize(&g, &c).unwrap()
            );
        }
    }

    #[test]
    fn good_triplets_examples() {
        let g = random_three_regular(12, 9).unwrap();
        let all = good_triplets(&g, &Cut::constant(12, 1)).unwrap();
        assert_eq!(all.len(), 2 * g.edge_count());
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(good_triplets(&k33, &bipartition(6)).unwrap().is_empty());
    }

    #[test]
    fn exhaustive_expected_good_triplets_is_quarter() {
        // Sum over all cuts of |Good| equals |T| * 2^(n-2) exactly.
        for g in [Graph::prism(), Graph::complete_bipartite(3, 3)] {
            let n = g.n();
            let t = triplets(&g).len() as u64;
            let total: u64 = (0u64..1 << n)
                .map(|m| good_triplets(&g, &Cut::from_mask(n, m)).unwrap().len() as u64)
                .sum();
            assert_eq!(total, t << (n - 2));
        }
    }

    #[test]
    fn unsat_sets_examples() {
        let g = random_three_regular(10, 2).unwrap();
        let (v2, v3) = unsat_sets(&g, &Cut::constant(10, 0)).unwrap();
        assert!(v2.is_empty());
        assert_eq!(v3.len(), 10);
        let k33 = Graph::complete_bipartite(3, 3);
        let (v2, v3) = unsat_sets(&k33, &bipartition(6)).unwrap();
        assert!(v2.is_empty() && v3.is_empty());
        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            unsat_sets(&path, &Cut::constant(3, 0)),
            Err(Error::NotThreeRegular)
        ));
    }

    #[test]
    fn exhaustive_unsat_set_sizes() {
        // Per vertex: P[3 unsatisfied] = 1/8 and P[exactly 2] = 3/8 under a
        // uniform cut, so the sums over all cuts are n*2^(n-3) and 3n*2^(n-3).
        for g in [
            Graph::prism(),
            Graph::complete_bipartite(3, 3),
            Graph::petersen(),
        ] {
            let n = g.n();
            let (mut s2, mut s3) = (0u64, 0u64);
            for m in 0u64..1 << n {
                let (v2, v3) = unsat_sets(&g, &Cut::from_mask(n, m)).unwrap();
                s2 += v2.len() as u64;
                s3 += v3.len() as u64;
            }
            assert_eq!(s3, (n as u64) << (n - 3));
            assert_eq!(s2, (3 * (n as u64)) << (n - 3));
        }
    }

    #[test]
    fn exact_maxcut_small_graphs() {
        assert_eq!(max_cut_exact(&Graph::complete(4)).unwrap().0, 4);
        assert_eq!(
            max_cut_exact(&Graph::complete_bipartite(3, 3)).unwrap().0,
            9
        );
        assert_eq!(max_cut_exact(&Graph::petersen()).unwrap().0, 12);
        assert_eq!(max_cut_exact(&Graph::prism()).unwrap().0, 7);
        let (size, witness) = max_cut_exact(&Graph::petersen()).unwrap();
        assert_eq!(cutsize(&Graph::petersen(), &witness).unwrap(), size);
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(mc_upper_bound(&Graph::prism()).unwrap(), 7);
        assert_eq!(mc_upper_bound(&Graph::complete_bipartite(3, 3)).unwrap(), 9);
        assert_eq!(mc_upper_bound(&Graph::complete(4)).unwrap(), 4);
    }

    #[test]
    fn upper_bound_dominates_exact_on_random_graphs() {
        let mut checked = 0;
        for n in [6usize, 8, 10, 12, 14] {
            for seed in 0..12 {
                let g = random_three_regular(n, seed * 31 + n as u64).unwrap();
                let (mc, _) = max_cut_exact(&g).unwrap();
                assert!(mc_upper_bound(&g).unwrap() >= mc);
                checked += 1;
            }
        }
        assert!(checked >= 50);
        for g in [
            Graph::complete(4),
            Graph::complete_bipartite(3, 3),
            Graph::prism(),
            Graph::petersen(),
        ] {
            assert!(mc_upper_bound(&g).unwrap() >= max_cut_exact(&g).unwrap().0);
        }
    }

    #[test]
    fn l_fractions() {
        let k4 = Graph::complete(4);
        for &e in k4.edges() {
            assert_eq!(l_edge(&k4, e), Rational64::new(4, 5));
        }
        for t in triplets(&k4) {
            assert_eq!(l_triplet(&k4, &t), Rational64::new(2, 5));
        }
        let k33 = Graph::complete_bipartite(3, 3);
        for &e in k33.edges() {
            assert_eq!(l_edge(&k33, e), Rational64::from_integer(1));
        }
    }

    #[test]
    fn l_sum_bounds_maxcut() {
        for n in [6usize, 8, 10, 12, 14] {
            for seed in 0..4 {
                let g = random_three_regular(n, seed + 1000 + n as u64).unwrap();
                let by_triplets: Rational64 = triplets(&g).iter().map(|t| l_triplet(&g, t)).sum();
                let by_edges: Rational64 = g.edges().iter().map(|&e| l_edge(&g, e)).sum();
                assert_eq!(by_triplets, by_edges);
                let (mc, _) = max_cut_exact(&g).unwrap();
                assert!(by_triplets >= Rational64::from_integer(mc as i64));
            }
        }
    }

    #[test]
    fn single_flip_gain_identity() {
        let g = random_three_regular(12, 77).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let c = Cut::from_mask(12, rng.gen::<u64>() & 0xfff);
            let v = rng.gen_range(0..12);
            let unsat = g
                .neighbors(v)
                .iter()
                .filter(|&&u| c.color(u) == c.color(v))
                .count() as i64;
            let sat = 3 - unsat;
            let before = cutsize(&g, &c).unwrap() as i64;
            let after = cutsize(&g, &flip(&c, &[v])).unwrap() as i64;
            assert_eq!(after - before, unsat - sat);
        }
    }
}
