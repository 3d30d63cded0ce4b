//! Isomorphism of marked graphs by exhaustive backtracking.
//!
//! Environments have at most a few dozen vertices, so a simple search with
//! degree and adjacency pruning is plenty fast and avoids a canonical-labeling
//! dependency.

use super::{EnvKind, MarkedGraph};

/// Permutations of the marked positions under which two environments count as
/// equivalent. The center of a triplet or star stays fixed; the symmetric
/// outer members may be exchanged (the local operators are invariant under
/// exactly these exchanges).
fn allowed_marked_permutations(kind: EnvKind) -> Vec<Vec<usize>> {
    match kind {
        EnvKind::Edge => vec![vec![0, 1], vec![1, 0]],
        EnvKind::Triplet => vec![vec![0, 1, 2], vec![0, 2, 1]],
        EnvKind::Star => vec![
            vec![0, 1, 2, 3],
            vec![0, 1, 3, 2],
            vec![0, 2, 1, 3],
            vec![0, 2, 3, 1],
            vec![0, 3, 1, 2],
            vec![0, 3, 2, 1],
        ],
    }
}

/// Whether `a` and `b` are isomorphic with an isomorphism mapping the marked
/// tuple of `a` onto the marked tuple of `b` (up to the symmetry of `kind`).
pub fn marked_isomorphic(a: &MarkedGraph, b: &MarkedGraph, kind: EnvKind) -> bool {
    if a.graph.n() != b.graph.n() || a.graph.edge_count() != b.graph.edge_count() {
        return false;
    }
    if a.marked.len() != b.marked.len() {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..a.graph.n()).map(|v| a.graph.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..b.graph.n()).map(|v| b.graph.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }

    let order = mapping_order(a);
    for perm in allowed_marked_permutations(kind) {
        let mut map = vec![usize::MAX; a.graph.n()];
        let mut used = vec![false; b.graph.n()];
        let mut ok = true;
        for (pos, &va) in a.marked.iter().enumerate() {
            let vb = b.marked[perm[pos]];
            if map[va] != usize::MAX || used[vb] {
                // Repeated marked vertices are not supported.
                ok = false;
                break;
            }
            if !assign_consistent(a, b, &map, va, vb) {
                ok = false;
                break;
            }
            map[va] = vb;
            used[vb] = true;
        }
        if ok && extend(a, b, &order, a.marked.len(), &mut map, &mut used) {
            return true;
        }
    }
    false
}

/// Vertices of `a` in the order they are assigned: marked tuple first, then
/// breadth-first from it, then any remaining vertices.
fn mapping_order(a: &MarkedGraph) -> Vec<usize> {
    let n = a.graph.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for &v in &a.marked {
        order.push(v);
        seen[v] = true;
    }
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in a.graph.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order.extend((0..n).filter(|&v| !seen[v]));
    order
}

fn assign_consistent(
    a: &MarkedGraph,
    b: &MarkedGraph,
    map: &[usize],
    va: usize,
    vb: usize,
) -> bool {
    if a.graph.degree(va) != b.graph.degree(vb) {
        return false;
    }
    for (ua, &ub) in map.iter().enumerate() {
        if ub != usize::MAX && a.graph.has_edge(va, ua) != b.graph.has_edge(vb, ub) {
            return false;
        }
    }
    true
}

fn extend(
    a: &MarkedGraph,
    b: &MarkedGraph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let va = order[depth];
    for vb in 0..b.graph.n() {
        if used[vb] || !assign_consistent(a, b, map, va, vb) {
            continue;
        }
        map[va] = vb;
        used[vb] = true;
        if extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        map[va] = usize::MAX;
        used[vb] = false;
    }
    false
}
