//! Exact statevector simulation of QAOA states and diagonal expectations.
//!
//! Qubit `i` (little-endian bit `i` of a basis index) carries the color of
//! vertex `i`. One level applies the diagonal cost phase, then the product
//! transverse mixer; levels are applied in ascending order.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cut::Cut;
use crate::graph::Graph;
use crate::operators::DiagonalObservable;
use crate::{Error, Result};

/// Statevector budget: beyond this the treeval backend takes over.
pub const MAX_QUBITS: usize = 24;

/// Level-p QAOA parameters in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct Angles {
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
}

impl Angles {
    pub fn new(beta: Vec<f64>, gamma: Vec<f64>) -> Angles {
        assert_eq!(
            beta.len(),
            gamma.len(),
            "beta and gamma must share the level p"
        );
        Angles { beta, gamma }
    }

    pub fn p(&self) -> usize {
        self.beta.len()
    }

    /// Flat `[beta..., gamma...]` vector, the optimizer's coordinate layout.
    pub fn to_flat(&self) -> Vec<f64> {
        let mut v = self.beta.clone();
        v.extend_from_slice(&self.gamma);
        v
    }

    pub fn from_flat(x: &[f64]) -> Angles {
        assert!(x.len().is_multiple_of(2));
        let p = x.len() / 2;
        Angles::new(x[..p].to_vec(), x[p..].to_vec())
    }
}

/// A normalized n-qubit state.
#[derive(Debug, Clone)]
pub struct Statevector {
    n: usize,
    amps: Vec<Complex64>,
}

impl Statevector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// The computational basis state `|mask>`.
    pub fn basis(n: usize, mask: u64) -> Statevector {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[mask as usize] = Complex64::new(1.0, 0.0);
        Statevector { n, amps }
    }

    pub fn norm_squared(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// Reusable simulator for one graph: the per-basis-state cut sizes are
/// computed once and shared across all angle evaluations.
pub struct Simulator {
    n: usize,
    cut_table: Vec<u16>,
}

impl Simulator {
    pub fn new(g: &Graph) -> Result<Simulator> {
        let n = g.n();
        if n > MAX_QUBITS {
            return Err(Error::TooManyVertices(n, MAX_QUBITS));
        }
        let edges: Vec<(usize, usize)> = g.edges().to_vec();
        let mut cut_table = vec![0u16; 1 << n];
        for (z, slot) in cut_table.iter_mut().enumerate() {
            let mut c = 0u16;
            for &(u, v) in &edges {
                c += (((z >> u) ^ (z >> v)) & 1) as u16;
            }
            *slot = c;
        }
        Ok(Simulator { n, cut_table })
    }

    /// Prepares the level-p state: uniform superposition, then for each level
    /// the cost phase followed by the mixer.
    pub fn prepare(&self, a: &Angles) -> Statevector {
        let dim = 1usize << self.n;
        let amp0 = 1.0 / (dim as f64).sqrt();
        let mut amps = vec![Complex64::new(amp0, 0.0); dim];
        let max_cut = *self.cut_table.iter().max().unwrap_or(&0) as usize;
        for m in 0..a.p() {
            let gamma = a.gamma[m];
            let phases: Vec<Complex64> = (0..=max_cut)
                .map(|k| Complex64::from_polar(1.0, -gamma * k as f64))
                .collect();
            for (z, amp) in amps.iter_mut().enumerate() {
                *amp *= phases[self.cut_table[z] as usize];
            }
            let beta = a.beta[m];
            let cos = Complex64::new(beta.cos(), 0.0);
            let isin = Complex64::new(0.0, -beta.sin());
            for q in 0..self.n {
                let step = 1usize << q;
                let mut base = 0usize;
                while base < dim {
                    for i0 in base..base + step {
                        let i1 = i0 + step;
                        let a0 = amps[i0];
                        let a1 = amps[i1];
                        amps[i0] = cos * a0 + isin * a1;
                        amps[i1] = isin * a0 + cos * a1;
                    }
                    base += 2 * step;
                }
            }
        }
        Statevector { n: self.n, amps }
    }
}

/// Prepares the QAOA state of `g` at angles `a`.
pub fn prepare_state(g: &Graph, a: &Angles) -> Result<Statevector> {
    Ok(Simulator::new(g)?.prepare(a))
}

/// Expectation of a diagonal observable, term by term through the marginal
/// distribution on each term's support.
pub fn expectation(s: &Statevector, o: &DiagonalObservable) -> Result<f64> {
    if o.min_qubits() > s.n {
        return Err(Error::VertexOutOfRange {
            vertex: o.min_qubits() - 1,
            n: s.n,
        });
    }
    let mut total = 0.0;
    for term in &o.terms {
        let k = term.support.len();
        let mut marginal = vec![0.0f64; 1 << k];
        for (z, amp) in s.amps.iter().enumerate() {
            let mut pat = 0usize;
            for (i, &v) in term.support.iter().enumerate() {
                pat |= ((z >> v) & 1) << i;
            }
            marginal[pat] += amp.norm_sqr();
        }
        for (pat, prob) in marginal.iter().enumerate() {
            total += prob * term.table[pat].to_f64().expect("rational fits f64");
        }
    }
    Ok(total)
}

/// Expectation against a precomputed dense value table (one slot per basis
/// state), the fast path for optimizers.
pub fn expectation_from_table(s: &Statevector, table: &[f64]) -> f64 {
    assert_eq!(table.len(), s.amps.len());
    s.amps
        .iter()
        .zip(table)
        .map(|(a, &v)| a.norm_sqr() * v)
        .sum()
}

/// Expectation of the global spin flip, `<X^n>`; QAOA states are +1
/// eigenstates of it.
pub fn global_flip_expectation(s: &Statevector) -> f64 {
    let dim = s.amps.len();
    let mask = dim - 1;
    (0..dim)
        .map(|z| (s.amps[z].conj() * s.amps[!z & mask]).re)
        .sum()
}

/// Samples `shots` cuts from the measurement distribution; deterministic for
/// a fixed seed.
pub fn sample(s: &Statevector, seed: u64, shots: usize) -> Result<Vec<Cut>> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws: Vec<(f64, usize)> = (0..shots).map(|i| (rng.gen::<f64>(), i)).collect();
    draws.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out = vec![0u64; shots];
    let mut acc = 0.0;
    let mut draw_idx = 0;
    for (z, amp) in s.amps.iter().enumerate() {
        acc += amp.norm_sqr();
        while draw_idx < shots && draws[draw_idx].0 < acc {
            out[draws[draw_idx].1] = z as u64;
            draw_idx += 1;
        }
        if draw_idx == shots {
            break;
        }
    }
    // Guard against accumulated rounding at the tail: leftovers take the last
    // basis state.
    for d in &draws[draw_idx..] {
        out[d.1] = (s.amps.len() - 1) as u64;
    }
    Ok(out.into_iter().map(|m| Cut::from_mask(s.n, m)).collect())
}
