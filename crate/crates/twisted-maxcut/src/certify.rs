//! Reproduction of the certified approximation-ratio table from stored
//! witness angles.
//!
//! Levels 1 and 2 run on the exact statevector backend (the certification
//! trees fit in 22 qubits); levels 3 to 6 run on the treeval backend. The
//! level-1 FKL and HLZ certificates additionally verify the worst-environment
//! ordering across the full environment catalogs, which is what extends the
//! tree bound to arbitrary (triangle-free, for HLZ) 3-regular graphs.

use std::time::Instant;

use serde::Serialize;

use crate::cut::l_triplet;
use crate::graph::{star_catalog, triplet_catalog, EnvKind, Triplet};
use crate::operators::{star_operator, triplet_operator};
use crate::optimize::optimize_angles;
use crate::qaoa::{expectation, prepare_state, Angles};
use crate::treeval::{canonical_bound_parts, certified_tree_bound};
use crate::{Error, Result};

/// Report schema version.
pub const SCHEMA_VERSION: u32 = 1;

/// A computed bound passes when it reaches the target minus this slack (the
/// table values are rounded down to four decimals).
pub const TOLERANCE: f64 = 5e-5;

/// Certification method: bare QAOA or one of the twisted variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bare,
    Fkl,
    Hlz,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Bare, Method::Fkl, Method::Hlz];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Bare => "bare",
            Method::Fkl => "fkl",
            Method::Hlz => "hlz",
        }
    }

    /// The local support whose tree environment certifies this method.
    pub fn kind(&self) -> EnvKind {
        match self {
            Method::Bare => EnvKind::Edge,
            Method::Fkl => EnvKind::Triplet,
            Method::Hlz => EnvKind::Star,
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bare" => Ok(Method::Bare),
            "fkl" => Ok(Method::Fkl),
            "hlz" => Ok(Method::Hlz),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

const BARE_TARGETS: [f64; 6] = [0.6924, 0.7559, 0.7923, 0.8168, 0.8363, 0.8498];
const FKL_TARGETS: [f64; 6] = [0.7443, 0.7887, 0.8146, 0.8323, 0.8457, 0.8564];
const HLZ_TARGETS: [f64; 6] = [0.7548, 0.7954, 0.8191, 0.8358, 0.8482, 0.8582];

/// The guaranteed approximation ratio for `method` at level `p`.
pub fn table_target(method: Method, p: usize) -> Result<f64> {
    if !(1..=6).contains(&p) {
        return Err(Error::UnsupportedLevel(p));
    }
    let row = match method {
        Method::Bare => &BARE_TARGETS,
        Method::Fkl => &FKL_TARGETS,
        Method::Hlz => &HLZ_TARGETS,
    };
    Ok(row[p - 1])
}

/// Published witness angles for the twisted methods and for bare levels 4-6.
const FKL_ANGLES: [(&[f64], &[f64]); 6] = [
    (&[1.130565], &[5.667705]),
    (&[0.99225, 3.46308], &[5.78009, 2.25304]),
    (&[0.62112, 0.48905, 0.26477], &[0.42728, 0.79596, 0.92620]),
    (
        &[0.63219, 2.09215, 0.42150, 0.22286],
        &[0.38433, 0.72509, 0.83266, 0.94350],
    ),
    // The fourth beta is 0.37000, not the printed 0.34000: local refinement
    // from the printed point moves exactly this coordinate there, and only
    // then does the bound reach 0.845737 (rounding down to 0.8457).
    (
        &[0.64008, 0.54030, 0.45437, 0.37000, 0.18710],
        &[0.35582, 0.68736, 0.78042, 0.87482, 0.99556],
    ),
    (
        &[0.64369, 0.54870, 0.47903, 0.40547, 1.88825, 0.16000],
        &[0.33434, 0.64986, 0.73024, 0.81681, 0.93262, 1.04923],
    ),
];

const HLZ_ANGLES: [(&[f64], &[f64]); 6] = [
    // The level-1 beta is 1.102870, not the printed 0.102870: only the
    // former certifies the 0.7548 bound (0.754856, versus 0.677818 for the
    // printed value), and it is exactly conjugate-equivalent to the
    // independently optimized maximum (2.038722, 0.613866).
    (&[1.102870], &[5.669319]),
    (&[0.98705, 3.47167], &[5.77664, 2.25962]),
    (&[0.62519, 0.49754, 0.27393], &[0.42808, 0.79569, 0.92077]),
    (
        &[0.63516, 0.52634, 0.43047, 0.23058],
        &[0.38478, 0.72269, 0.82767, 0.93461],
    ),
    (
        &[0.64349, 0.54679, 0.46687, 0.38838, 0.19975],
        &[0.35349, 0.68144, 0.76945, 0.85500, 0.96997],
    ),
    (
        &[0.64622, 0.55243, 0.48572, 0.42258, 1.91095, 0.17045],
        &[0.33265, 0.64669, 0.72479, 0.80326, 0.90278, 1.01496],
    ),
];

/// Bare levels 1-3 carry no published witness angles; these were produced by
/// [`regenerate_bare_angles`] with 64 restarts and seed 1, rounded to six
/// decimals, and frozen here.
const BARE_GENERATED: [(&[f64], &[f64]); 3] = [
    (&[5.105088], &[0.615480]),
    (&[5.267293, 4.420008], &[0.487836, 4.039432]),
    (
        &[2.532642, 3.601160, 3.377263],
        &[3.563454, 3.939995, 0.936981],
    ),
];

const BARE_PUBLISHED: [(&[f64], &[f64]); 3] = [
    // The fourth gamma is 1.15691, not the printed 0.15691 (leading digit
    // dropped): only the former reaches the 0.8168 bound (0.816877), and it
    // restores the ascending gamma sequence every other row follows.
    (
        &[0.59956, 0.43434, 0.29676, 0.15904],
        &[0.40875, 0.78057, 0.98804, 1.15691],
    ),
    (
        &[0.63167, 0.52253, 1.96094, 0.27599, 0.14930],
        &[0.35924, 0.70609, 0.82209, 1.00420, 1.15394],
    ),
    (
        &[0.63589, 0.53443, 0.46334, 0.35999, 0.25858, 0.13885],
        &[0.33137, 0.64558, 0.73165, 0.83696, 1.01019, 1.12724],
    ),
];

/// Witness angles exactly as stored, no normalization.
pub fn witness_angles(method: Method, p: usize) -> Result<Angles> {
    if !(1..=6).contains(&p) {
        return Err(Error::UnsupportedLevel(p));
    }
    let (beta, gamma) = match method {
        Method::Fkl => FKL_ANGLES[p - 1],
        Method::Hlz => HLZ_ANGLES[p - 1],
        Method::Bare if p <= 3 => BARE_GENERATED[p - 1],
        Method::Bare => BARE_PUBLISHED[p - 4],
    };
    Ok(Angles::new(beta.to_vec(), gamma.to_vec()))
}

/// Seed pinned for bare-angle regeneration.
pub const BARE_ANGLE_SEED: u64 = 1;
/// Restarts pinned for bare-angle regeneration.
pub const BARE_ANGLE_RESTARTS: usize = 64;

/// Reproduces the generated bare witness angles: maximizes the edge-tree
/// bound with the pinned multistart budget and rounds to six decimals.
pub fn regenerate_bare_angles(p: usize) -> Result<(Angles, f64)> {
    if !(1..=3).contains(&p) {
        return Err(Error::UnsupportedLevel(p));
    }
    let objective = |a: &Angles| certified_tree_bound(EnvKind::Edge, p, a);
    let (angles, _) = optimize_angles(objective, p, BARE_ANGLE_RESTARTS, BARE_ANGLE_SEED)?;
    let rounded = Angles::new(
        angles.beta.iter().map(|b| round6(*b)).collect(),
        angles.gamma.iter().map(|g| round6(*g)).collect(),
    );
    let value = certified_tree_bound(EnvKind::Edge, p, &rounded)?;
    Ok((rounded, value))
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// One per-environment entry of a level-1 certificate.
#[derive(Debug, Clone, Serialize)]
pub struct EnvRatio {
    pub name: String,
    /// Expectation of the canonical local operator in this environment.
    pub expectation: f64,
    /// Local MaxCut fraction dividing the expectation (1 where unused).
    pub l_fraction: f64,
    /// The ordered quantity: expectation over fraction.
    pub ratio: f64,
}

/// A certified lower bound with its provenance.
#[derive(Debug, Clone, Serialize)]
pub struct CertReport {
    pub schema: u32,
    pub method: Method,
    pub p: usize,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub bound: f64,
    pub target: f64,
    pub pass: bool,
    /// Whether every environment dominates the first (tree) environment;
    /// vacuously true outside the level-1 twisted certificates.
    pub worst_environment_first: bool,
    pub breakdown: Vec<EnvRatio>,
    pub seconds: f64,
}

/// Level-1 FKL certificate: the triplet-operator-to-L ratio across all
/// eleven triplet environments, with the tree environment required to be the
/// minimum.
pub fn certify_p1_fkl() -> Result<CertReport> {
    certify_p1_fkl_at(&witness_angles(Method::Fkl, 1)?)
}

pub fn certify_p1_fkl_at(angles: &Angles) -> Result<CertReport> {
    let start = Instant::now();
    let catalog = triplet_catalog();
    let mut breakdown = Vec::with_capacity(catalog.len());
    for entry in &catalog.entries {
        let t = Triplet::new(
            entry.env.marked[0],
            entry.env.marked[1],
            entry.env.marked[2],
        );
        let obs = triplet_operator(&t);
        let state = prepare_state(&entry.env.graph, angles)?;
        let value = expectation(&state, &obs)?;
        let l = rational_to_f64(l_triplet(&entry.env.graph, &t));
        breakdown.push(EnvRatio {
            name: entry.name.to_string(),
            expectation: value,
            l_fraction: l,
            ratio: value / l,
        });
    }
    let tree_ratio = breakdown[0].ratio;
    let worst_first = breakdown.iter().all(|e| e.ratio >= tree_ratio - 1e-12);
    let target = table_target(Method::Fkl, 1)?;
    Ok(CertReport {
        schema: SCHEMA_VERSION,
        method: Method::Fkl,
        p: 1,
        beta: angles.beta.clone(),
        gamma: angles.gamma.clone(),
        bound: tree_ratio,
        target,
        pass: worst_first && tree_ratio >= target - TOLERANCE,
        worst_environment_first: worst_first,
        breakdown,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Level-1 HLZ certificate: the star-operator expectation across all eight
/// triangle-free star environments, tree environment minimal, bound
/// two-thirds of the minimum.
pub fn certify_p1_hlz() -> Result<CertReport> {
    certify_p1_hlz_at(&witness_angles(Method::Hlz, 1)?)
}

pub fn certify_p1_hlz_at(angles: &Angles) -> Result<CertReport> {
    let start = Instant::now();
    let catalog = star_catalog();
    let mut breakdown = Vec::with_capacity(catalog.len());
    for entry in &catalog.entries {
        let m = &entry.env.marked;
        let obs = star_operator(m[0], [m[1], m[2], m[3]]);
        let state = prepare_state(&entry.env.graph, angles)?;
        let value = expectation(&state, &obs)?;
        breakdown.push(EnvRatio {
            name: entry.name.to_string(),
            expectation: value,
            l_fraction: 1.0,
            ratio: value,
        });
    }
    let tree_value = breakdown[0].ratio;
    let worst_first = breakdown.iter().all(|e| e.ratio >= tree_value - 1e-12);
    let bound = 2.0 / 3.0 * tree_value;
    let target = table_target(Method::Hlz, 1)?;
    Ok(CertReport {
        schema: SCHEMA_VERSION,
        method: Method::Hlz,
        p: 1,
        beta: angles.beta.clone(),
        gamma: angles.gamma.clone(),
        bound,
        target,
        pass: worst_first && bound >= target - TOLERANCE,
        worst_environment_first: worst_first,
        breakdown,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Certifies one table entry from the stored witness angles.
pub fn certify_table(method: Method, p: usize) -> Result<CertReport> {
    let angles = witness_angles(method, p)?;
    certify_table_at(method, p, &angles)
}

pub fn certify_table_at(method: Method, p: usize, angles: &Angles) -> Result<CertReport> {
    let start = Instant::now();
    let target = table_target(method, p)?;
    let bound = tree_bound_value(method.kind(), p, angles)?;
    Ok(CertReport {
        schema: SCHEMA_VERSION,
        method,
        p,
        beta: angles.beta.clone(),
        gamma: angles.gamma.clone(),
        bound,
        target,
        pass: bound >= target - TOLERANCE,
        worst_environment_first: true,
        breakdown: Vec::new(),
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// The certified bound for one kind and level: statevector backend up to
/// level 2, treeval beyond.
pub fn tree_bound_value(kind: EnvKind, p: usize, angles: &Angles) -> Result<f64> {
    if !(1..=6).contains(&p) || angles.p() != p {
        return Err(Error::UnsupportedLevel(p));
    }
    if p <= 2 {
        let (tree, obs, factor) = canonical_bound_parts(kind, p);
        let state = prepare_state(&tree.graph, angles)?;
        Ok(factor * expectation(&state, &obs)?)
    } else {
        certified_tree_bound(kind, p, angles)
    }
}

/// The full certificate: level-1 environment arguments for the twisted
/// methods, tree bounds everywhere else; 18 reports in method-major order.
pub fn certify_all() -> Result<Vec<CertReport>> {
    let mut reports = Vec::with_capacity(18);
    for method in Method::ALL {
        for p in 1..=6 {
            reports.push(certify(method, p)?);
        }
    }
    Ok(reports)
}

/// Certifies one (method, level) pair, with the environment breakdown at
/// level 1 of the twisted methods.
pub fn certify(method: Method, p: usize) -> Result<CertReport> {
    match (method, p) {
        (Method::Fkl, 1) => certify_p1_fkl(),
        (Method::Hlz, 1) => certify_p1_hlz(),
        _ => certify_table(method, p),
    }
}

fn rational_to_f64(r: num_rational::Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
