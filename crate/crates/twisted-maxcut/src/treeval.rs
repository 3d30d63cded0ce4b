//! Exact QAOA expectations on trees of arbitrary size.
//!
//! A diagonal expectation in a level-p QAOA state is a sum over one forward
//! and one backward basis-state trajectory per vertex (p+1 labels each,
//! sharing the measured final label). Grouping the 2p+1 free bits of a vertex
//! into a configuration, the summand factorizes into per-vertex mixer weights
//! and per-edge phase weights, so on a tree the sum contracts exactly by
//! leaf-to-root message passing. Identical support-free subtrees exchange
//! identical messages, which a shape cache exploits; the regular trees used
//! for certification then need only O(p) distinct messages.

use std::collections::HashMap;
use std::rc::Rc;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::graph::{
    edge_tree, p_environment, star_tree, triplet_tree, EnvKind, Graph, MarkedGraph,
};
use crate::operators::{star_operator, triplet_operator, DiagonalObservable, Term};
use crate::qaoa::Angles;
use crate::{Error, Result};

/// Largest imaginary residue tolerated in the final scalar.
const IMAG_TOLERANCE: f64 = 1e-9;

/// Exact `<psi_t(a)| obs |psi_t(a)>` for a tree `t` whose marked region
/// contains the observable support.
///
/// The tree is first pruned to the p-environment of the support (vertices
/// beyond the light cone cancel exactly), so trees deeper than `p` are fine.
pub fn tree_expectation(tree: &MarkedGraph, a: &Angles, obs: &DiagonalObservable) -> Result<f64> {
    tree_expectation_impl(tree, a, obs, true)
}

pub(crate) fn tree_expectation_impl(
    tree: &MarkedGraph,
    a: &Angles,
    obs: &DiagonalObservable,
    memoize: bool,
) -> Result<f64> {
    let g = &tree.graph;
    if g.edge_count() + 1 != g.n() || !g.is_connected() {
        return Err(Error::NotATree);
    }
    let mut support: Vec<usize> = obs
        .terms
        .iter()
        .flat_map(|t| t.support.iter().copied())
        .collect();
    support.sort_unstable();
    support.dedup();
    if support.is_empty() {
        return Ok(0.0);
    }
    if support.iter().any(|v| !tree.marked.contains(v)) {
        return Err(Error::SupportOutsideMarked);
    }
    let table = combined_table(obs, &support);

    let env = p_environment(g, &support, a.p());
    if env.graph.edge_count() + 1 != env.graph.n() || !env.graph.is_connected() {
        return Err(Error::NotATree);
    }

    let ctx = Contraction::new(&env.graph, &env.marked, a, memoize);
    let value = ctx.run(&table);
    assert!(
        value.im.abs() < IMAG_TOLERANCE,
        "imaginary residue {} exceeds tolerance",
        value.im
    );
    Ok(value.re)
}

/// Collapses all terms of `obs` into one table over the union support
/// (ascending vertex order).
fn combined_table(obs: &DiagonalObservable, support: &[usize]) -> Vec<f64> {
    let k = support.len();
    let mut table = vec![0.0f64; 1 << k];
    for term in &obs.terms {
        let positions: Vec<usize> = term
            .support
            .iter()
            .map(|v| support.binary_search(v).expect("support is the union"))
            .collect();
        for (s, slot) in table.iter_mut().enumerate() {
            let mut pat = 0usize;
            for (i, &pos) in positions.iter().enumerate() {
                pat |= ((s >> pos) & 1) << i;
            }
            *slot += term.table[pat].to_f64().expect("rational fits f64");
        }
    }
    table
}

/// A partially contracted factor: complex data indexed by the configuration
/// of one vertex and by the measured bits of the support vertices already
/// swallowed by the subtree.
struct Msg {
    /// Ascending indices into the union support; bit `j` of a support
    /// assignment refers to `sup_positions[j]`.
    sup_positions: Vec<usize>,
    /// Layout `[sup_assignment][config]`, config fastest.
    data: Vec<Complex64>,
}

struct Contraction<'a> {
    graph: &'a Graph,
    /// Environment vertex of each union-support position.
    support: &'a [usize],
    traj: usize,
    cfgs: usize,
    weights: Vec<Complex64>,
    kernel: Vec<Complex64>,
    memoize: bool,
}

impl<'a> Contraction<'a> {
    fn new(graph: &'a Graph, support: &'a [usize], a: &Angles, memoize: bool) -> Contraction<'a> {
        let traj = 1usize << a.p();
        Contraction {
            graph,
            support,
            traj,
            cfgs: traj * traj * 2,
            weights: vertex_weights(a),
            kernel: edge_kernel(a),
            memoize,
        }
    }

    fn run(&self, table: &[f64]) -> Complex64 {
        let root = self.support[0];
        let mut cache = HashMap::new();
        let acc = self.combine(root, usize::MAX, &mut cache);
        // The root accumulation has swallowed every support vertex, so its
        // assignment index ranges over the full observable table.
        debug_assert_eq!(acc.sup_positions.len(), self.support.len());
        let mut total = Complex64::new(0.0, 0.0);
        for (s, &value) in table.iter().enumerate() {
            let base = s * self.cfgs;
            let sum: Complex64 = acc.data[base..base + self.cfgs].iter().sum();
            total += sum * value;
        }
        total
    }

    /// Vertex weight times all children messages, with the measured bit bound
    /// into the support dimensions when `v` itself carries observable support.
    fn combine(&self, v: usize, parent: usize, cache: &mut HashMap<String, Rc<Msg>>) -> Msg {
        let mut acc = Msg {
            sup_positions: Vec::new(),
            data: self.weights.clone(),
        };
        for &w in self.graph.neighbors(v) {
            if w != parent {
                let msg = self.message(w, v, cache);
                acc = self.multiply(acc, &msg);
            }
        }
        if let Some(pos) = self.support.iter().position(|&s| s == v) {
            acc = self.bind_measured_bit(acc, pos);
        }
        acc
    }

    /// Message from the subtree rooted at `v` toward `parent`, as a function
    /// of the parent configuration.
    fn message(&self, v: usize, parent: usize, cache: &mut HashMap<String, Rc<Msg>>) -> Rc<Msg> {
        let key = if self.memoize && !self.subtree_has_support(v, parent) {
            let key = self.shape_key(v, parent);
            if let Some(hit) = cache.get(&key) {
                return Rc::clone(hit);
            }
            Some(key)
        } else {
            None
        };

        let acc = self.combine(v, parent, cache);
        let traj = self.traj;
        let fb = traj * traj;
        let sup_count = acc.sup_positions.len();

        // The edge weight ignores measured bits: pre-sum the child's final
        // bit, contract the trajectory block, then replicate over the
        // parent's final bit.
        let mut inner = vec![Complex64::new(0.0, 0.0); (1 << sup_count) * fb];
        for s in 0..1usize << sup_count {
            for x in 0..fb {
                inner[s * fb + x] = acc.data[s * self.cfgs + x] + acc.data[s * self.cfgs + fb + x];
            }
        }
        let mut data = vec![Complex64::new(0.0, 0.0); (1 << sup_count) * self.cfgs];
        for s in 0..1usize << sup_count {
            let inner = &inner[s * fb..(s + 1) * fb];
            let out = &mut data[s * self.cfgs..(s + 1) * self.cfgs];
            for fu in 0..traj {
                for bu in 0..traj {
                    let mut z = Complex64::new(0.0, 0.0);
                    for fv in 0..traj {
                        let kern_row = &self.kernel[(fu ^ fv)..];
                        let inner_row = &inner[fv..];
                        for bv in 0..traj {
                            z += kern_row[(bu ^ bv) * traj] * inner_row[bv * traj];
                        }
                    }
                    out[fu + bu * traj] = z;
                    out[fb + fu + bu * traj] = z;
                }
            }
        }
        let msg = Rc::new(Msg {
            sup_positions: acc.sup_positions,
            data,
        });
        if let Some(key) = key {
            cache.insert(key, Rc::clone(&msg));
        }
        msg
    }

    fn multiply(&self, a: Msg, b: &Msg) -> Msg {
        let mut sup_positions = a.sup_positions.clone();
        sup_positions.extend_from_slice(&b.sup_positions);
        sup_positions.sort_unstable();
        let bits = |positions: &[usize], merged: usize| -> usize {
            positions.iter().enumerate().fold(0usize, |acc, (j, pos)| {
                let idx = sup_positions.binary_search(pos).unwrap();
                acc | (((merged >> idx) & 1) << j)
            })
        };
        let mut data = vec![Complex64::new(0.0, 0.0); (1 << sup_positions.len()) * self.cfgs];
        for s in 0..1usize << sup_positions.len() {
            let sa = bits(&a.sup_positions, s);
            let sb = bits(&b.sup_positions, s);
            let pa = &a.data[sa * self.cfgs..(sa + 1) * self.cfgs];
            let pb = &b.data[sb * self.cfgs..(sb + 1) * self.cfgs];
            let out = &mut data[s * self.cfgs..(s + 1) * self.cfgs];
            for (o, (x, y)) in out.iter_mut().zip(pa.iter().zip(pb)) {
                *o = x * y;
            }
        }
        Msg {
            sup_positions,
            data,
        }
    }

    /// Adds the support dimension for position `pos`, keeping only the
    /// configurations whose measured bit matches the assignment.
    fn bind_measured_bit(&self, acc: Msg, pos: usize) -> Msg {
        let mut sup_positions = acc.sup_positions.clone();
        sup_positions.push(pos);
        sup_positions.sort_unstable();
        let new_idx = sup_positions.binary_search(&pos).unwrap();
        let fb = self.traj * self.traj;
        let mut data = vec![Complex64::new(0.0, 0.0); (1 << sup_positions.len()) * self.cfgs];
        for s in 0..1usize << sup_positions.len() {
            let bit = (s >> new_idx) & 1;
            let old_s = ((s >> (new_idx + 1)) << new_idx) | (s & ((1 << new_idx) - 1));
            let src = &acc.data[old_s * self.cfgs..(old_s + 1) * self.cfgs];
            let out = &mut data[s * self.cfgs..(s + 1) * self.cfgs];
            let offset = bit * fb;
            out[offset..offset + fb].copy_from_slice(&src[offset..offset + fb]);
        }
        Msg {
            sup_positions,
            data,
        }
    }

    fn subtree_has_support(&self, v: usize, parent: usize) -> bool {
        if self.support.contains(&v) {
            return true;
        }
        self.graph
            .neighbors(v)
            .iter()
            .any(|&w| w != parent && self.subtree_has_support(w, v))
    }

    /// Canonical encoding of the rooted subtree shape below `v`.
    fn shape_key(&self, v: usize, parent: usize) -> String {
        let mut children: Vec<String> = self
            .graph
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| self.shape_key(w, v))
            .collect();
        children.sort_unstable();
        format!("({})", children.join(""))
    }
}

/// Per-vertex trajectory weight: half the product of mixer matrix elements
/// along the forward trajectory times the conjugated backward ones.
///
/// Configuration layout: bits `0..p` forward labels, bits `p..2p` backward
/// labels, bit `2p` the shared measured label. The diagonal phase of layer m
/// reads the label after mixer layer m-1, i.e. trajectory slot m-1.
fn vertex_weights(a: &Angles) -> Vec<Complex64> {
    let p = a.p();
    let traj = 1usize << p;
    let cfgs = traj * traj * 2;
    let elems: Vec<[Complex64; 2]> = a
        .beta
        .iter()
        .map(|&beta| {
            [
                Complex64::new(beta.cos(), 0.0),
                Complex64::new(0.0, -beta.sin()),
            ]
        })
        .collect();
    let mut out = Vec::with_capacity(cfgs);
    for cfg in 0..cfgs {
        let f = cfg & (traj - 1);
        let b = (cfg >> p) & (traj - 1);
        let t = (cfg >> (2 * p)) & 1;
        let mut fwd = Complex64::new(0.5, 0.0);
        let mut bwd = Complex64::new(1.0, 0.0);
        for (m, elem) in elems.iter().enumerate() {
            let f_prev = (f >> m) & 1;
            let f_next = if m + 1 < p { (f >> (m + 1)) & 1 } else { t };
            fwd *= elem[f_prev ^ f_next];
            let b_prev = (b >> m) & 1;
            let b_next = if m + 1 < p { (b >> (m + 1)) & 1 } else { t };
            bwd *= elem[b_prev ^ b_next];
        }
        out.push(fwd * bwd.conj());
    }
    out
}

/// Per-edge weight as a function of the XOR of the endpoint trajectories:
/// an uncut layer contributes no phase, a cut one `exp(-i gamma)` forward and
/// `exp(+i gamma)` backward.
fn edge_kernel(a: &Angles) -> Vec<Complex64> {
    let p = a.p();
    let traj = 1usize << p;
    let mut out = Vec::with_capacity(traj * traj);
    for idx in 0..traj * traj {
        let f_xor = idx & (traj - 1);
        let b_xor = idx >> p;
        let mut phase = 0.0;
        for (m, &gamma) in a.gamma.iter().enumerate() {
            if (f_xor >> m) & 1 == 1 {
                phase -= gamma;
            }
            if (b_xor >> m) & 1 == 1 {
                phase += gamma;
            }
        }
        out.push(Complex64::from_polar(1.0, phase));
    }
    out
}

/// The certified per-environment bound for one support kind: the canonical
/// local operator evaluated on the depth-p tree, scaled by how often the
/// support occurs per edge (1 per edge, 2 triplets per edge, 2/3 stars per
/// edge).
pub fn certified_tree_bound(kind: EnvKind, p: usize, a: &Angles) -> Result<f64> {
    if !(1..=6).contains(&p) || a.p() != p {
        return Err(Error::UnsupportedLevel(p));
    }
    let (tree, obs, factor) = canonical_bound_parts(kind, p);
    Ok(factor * tree_expectation(&tree, a, &obs)?)
}

/// Tree, canonical operator and combinatorial factor used by
/// [`certified_tree_bound`] (shared with the statevector route).
pub fn canonical_bound_parts(kind: EnvKind, p: usize) -> (MarkedGraph, DiagonalObservable, f64) {
    match kind {
        EnvKind::Edge => (edge_tree(p), edge_term_observable(0, 1), 1.0),
        EnvKind::Triplet => (
            triplet_tree(p),
            triplet_operator(&crate::graph::Triplet::new(0, 1, 2)),
            2.0,
        ),
        EnvKind::Star => (star_tree(p), star_operator(0, [1, 2, 3]), 2.0 / 3.0),
    }
}

/// The single MaxCut edge term on `(u, v)`.
pub fn edge_term_observable(u: usize, v: usize) -> DiagonalObservable {
    use num_rational::Rational64;
    let zero = Rational64::from_integer(0);
    let one = Rational64::from_integer(1);
    DiagonalObservable::new(vec![Term::new(vec![u, v], vec![zero, one, one, zero])])
}
