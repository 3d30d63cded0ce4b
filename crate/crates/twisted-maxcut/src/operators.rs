//! Diagonal observables as explicit truth tables over small supports.
//!
//! Everything this crate measures is diagonal in the computational basis, so
//! an observable is a sum of local terms, each a value table over the bit
//! patterns of its support. Coefficients stay exact rationals; the identities
//! between operators are then exact equalities.

use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::cut::Cut;
use crate::graph::{triplets, Graph, Triplet};
use crate::postprocess::PostMethod;
use crate::{Error, Result};

/// One local term: a value per bit pattern of the support.
///
/// Bit `i` of a pattern index is the color of `support[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub support: Vec<usize>,
    pub table: Vec<Rational64>,
}

impl Term {
    pub fn new(support: Vec<usize>, table: Vec<Rational64>) -> Term {
        assert_eq!(table.len(), 1 << support.len());
        Term { support, table }
    }

    fn pattern(&self, c: &Cut) -> usize {
        self.support
            .iter()
            .enumerate()
            .fold(0usize, |p, (i, &v)| p | ((c.color(v) as usize) << i))
    }
}

/// A sum of local diagonal terms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiagonalObservable {
    pub terms: Vec<Term>,
}

impl DiagonalObservable {
    pub fn new(terms: Vec<Term>) -> DiagonalObservable {
        DiagonalObservable { terms }
    }

    /// Exact value on a full cut.
    pub fn evaluate(&self, c: &Cut) -> Rational64 {
        self.terms.iter().map(|t| t.table[t.pattern(c)]).sum()
    }

    pub fn evaluate_f64(&self, c: &Cut) -> f64 {
        self.evaluate(c).to_f64().expect("rational fits f64")
    }

    /// Largest vertex mentioned by any term, plus one.
    pub fn min_qubits(&self) -> usize {
        self.terms
            .iter()
            .flat_map(|t| t.support.iter().copied())
            .max()
            .map_or(0, |v| v + 1)
    }

    /// Scales every term by `r`.
    pub fn scaled(mut self, r: Rational64) -> DiagonalObservable {
        for t in &mut self.terms {
            for v in &mut t.table {
                *v *= r;
            }
        }
        self
    }

    /// Concatenates the terms of `other` onto `self`.
    pub fn plus(mut self, other: DiagonalObservable) -> DiagonalObservable {
        self.terms.extend(other.terms);
        self
    }

    /// Dense table of values over all `2^n` basis states (vertex `i` read
    /// from bit `i`). Used by hot loops that evaluate many cuts.
    pub fn value_table(&self, n: usize) -> Result<Vec<f64>> {
        if self.min_qubits() > n {
            return Err(Error::VertexOutOfRange {
                vertex: self.min_qubits() - 1,
                n,
            });
        }
        let mut out = vec![0.0; 1 << n];
        for t in &self.terms {
            let float_table: Vec<f64> = t
                .table
                .iter()
                .map(|r| r.to_f64().expect("rational fits f64"))
                .collect();
            for (z, slot) in out.iter_mut().enumerate() {
                let mut p = 0usize;
                for (i, &v) in t.support.iter().enumerate() {
                    p |= ((z >> v) & 1) << i;
                }
                *slot += float_table[p];
            }
        }
        Ok(out)
    }
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// The MaxCut Hamiltonian: one term per edge, value 1 on bichromatic
/// patterns. Evaluating it on a cut gives the cut size.
pub fn maxcut_hamiltonian(g: &Graph) -> DiagonalObservable {
    let terms = g
        .edges()
        .iter()
        .map(|&(u, v)| Term::new(vec![u, v], vec![r(0, 1), r(1, 1), r(1, 1), r(0, 1)]))
        .collect();
    DiagonalObservable::new(terms)
}

/// The good-triplet number operator: one term per triplet, value 1 on the
/// monochromatic patterns 000 and 111.
pub fn good_triplet_number(g: &Graph) -> DiagonalObservable {
    let terms = triplets(g)
        .into_iter()
        .map(|t| {
            let mut table = vec![r(0, 1); 8];
            table[0] = r(1, 1);
            table[7] = r(1, 1);
            Term::new(vec![t.c, t.j, t.k], table)
        })
        .collect();
    DiagonalObservable::new(terms)
}

/// Closed neighborhood `(c, A(c))` of a vertex of a 3-regular graph.
fn closed_neighborhood(g: &Graph, c: usize) -> Result<[usize; 4]> {
    let nbrs = g.neighbors(c);
    if nbrs.len() != 3 {
        return Err(Error::NotThreeRegular);
    }
    Ok([c, nbrs[0], nbrs[1], nbrs[2]])
}

fn unsat_count(pattern: usize) -> u32 {
    let b = pattern & 1;
    (1..4).filter(|&i| (pattern >> i) & 1 == b).count() as u32
}

/// Counts vertices with exactly two incident unsatisfied edges: one 4-vertex
/// term per vertex, value 1 iff exactly one neighbor color differs from the
/// center's.
pub fn m2(g: &Graph) -> Result<DiagonalObservable> {
    let mut terms = Vec::with_capacity(g.n());
    for c in 0..g.n() {
        let support = closed_neighborhood(g, c)?;
        let table = (0..16)
            .map(|p| {
                if unsat_count(p) == 2 {
                    r(1, 1)
                } else {
                    r(0, 1)
                }
            })
            .collect();
        terms.push(Term::new(support.to_vec(), table));
    }
    Ok(DiagonalObservable::new(terms))
}

/// Counts vertices whose entire closed neighborhood is monochromatic.
pub fn m3(g: &Graph) -> Result<DiagonalObservable> {
    let mut terms = Vec::with_capacity(g.n());
    for c in 0..g.n() {
        let support = closed_neighborhood(g, c)?;
        let table = (0..16)
            .map(|p| if p == 0 || p == 15 { r(1, 1) } else { r(0, 1) })
            .collect();
        terms.push(Term::new(support.to_vec(), table));
    }
    Ok(DiagonalObservable::new(terms))
}

/// FKL improvement operator: a third of the good-triplet number.
pub fn delta_fkl(g: &Graph) -> DiagonalObservable {
    good_triplet_number(g).scaled(r(1, 3))
}

/// HLZ improvement operator: (2/5) M2 + (17/15) M3, merged per vertex.
pub fn delta_hlz(g: &Graph) -> Result<DiagonalObservable> {
    let mut terms = Vec::with_capacity(g.n());
    for c in 0..g.n() {
        let support = closed_neighborhood(g, c)?;
        let table = (0..16)
            .map(|p| match unsat_count(p) {
                2 => r(2, 5),
                3 => r(17, 15),
                _ => r(0, 1),
            })
            .collect();
        terms.push(Term::new(support.to_vec(), table));
    }
    Ok(DiagonalObservable::new(terms))
}

/// The twisted cost Hamiltonian `H + Delta` for the chosen post-processing
/// (plain `H` for [`PostMethod::None`]).
pub fn twisted_hamiltonian(g: &Graph, post: PostMethod) -> Result<DiagonalObservable> {
    let h = maxcut_hamiltonian(g);
    Ok(match post {
        PostMethod::None => h,
        PostMethod::Fkl => h.plus(delta_fkl(g)),
        PostMethod::Hlz => h.plus(delta_hlz(g)?),
    })
}

/// The triplet operator: a quarter of the two incident edge terms plus a
/// third of the good-triplet projector. Summed over all triplets it
/// reproduces the FKL-twisted Hamiltonian.
pub fn triplet_operator(t: &Triplet) -> DiagonalObservable {
    let table = (0..8)
        .map(|p| {
            let bc = p & 1;
            let bj = (p >> 1) & 1;
            let bk = (p >> 2) & 1;
            let cuts = r((bc != bj) as i64 + (bc != bk) as i64, 4);
            let good = if p == 0 || p == 7 { r(1, 3) } else { r(0, 1) };
            cuts + good
        })
        .collect();
    DiagonalObservable::new(vec![Term::new(vec![t.c, t.j, t.k], table)])
}

/// The star operator around `c` with ordered neighborhood `nbrs`: half of the
/// three incident edge terms plus the HLZ improvement projectors. Summed over
/// all vertices it reproduces the HLZ-twisted Hamiltonian.
pub fn star_operator(c: usize, nbrs: [usize; 3]) -> DiagonalObservable {
    let table = (0..16)
        .map(|p| {
            let bc = p & 1;
            let cuts: i64 = (1..4).map(|i| ((p >> i) & 1 != bc) as i64).sum();
            let bonus = match unsat_count(p) {
                2 => r(2, 5),
                3 => r(17, 15),
                _ => r(0, 1),
            };
            r(cuts, 2) + bonus
        })
        .collect();
    DiagonalObservable::new(vec![Term::new(vec![c, nbrs[0], nbrs[1], nbrs[2]], table)])
}

/// FKL-twisted Hamiltonian expressed as the sum of all triplet operators.
pub fn triplet_operator_sum(g: &Graph) -> DiagonalObservable {
    triplets(g)
        .iter()
        .fold(DiagonalObservable::default(), |acc, t| {
            acc.plus(triplet_operator(t))
        })
}

/// HLZ-twisted Hamiltonian expressed as the sum of all star operators.
pub fn star_operator_sum(g: &Graph) -> Result<DiagonalObservable> {
    let mut acc = DiagonalObservable::default();
    for c in 0..g.n() {
        let [_, a, b, d] = closed_neighborhood(g, c)?;
        acc = acc.plus(star_operator(c, [a, b, d]));
    }
    Ok(acc)
}
