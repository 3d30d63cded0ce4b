//! Twisted QAOA for MaxCut on 3-regular graphs.
//!
//! This crate simulates level-p QAOA states, applies the FKL and HLZ greedy
//! cut-improvement procedures, and certifies guaranteed approximation ratios
//! of the resulting twisted hybrid algorithms from explicit witness angles.
//!
//! The main entry points are:
//!
//! - [`graph`]: 3-regular graph combinatorics, p-environments and their
//!   catalogs, tree environments, random instance generation.
//! - [`cut`]: cuts, cut sizes, good triplets, exact MaxCut, combinatorial
//!   MaxCut upper bounds.
//! - [`postprocess`]: the FKL and HLZ greedy improvement procedures.
//! - [`operators`]: diagonal observables (cost Hamiltonian, improvement
//!   operators, triplet and star operators).
//! - [`qaoa`]: exact statevector simulation of QAOA states.
//! - [`treeval`]: exact QAOA expectations on trees of arbitrary size via
//!   trajectory message passing.
//! - [`optimize`]: multistart Nelder-Mead angle optimization and the
//!   end-to-end twisted pipeline.
//! - [`certify`]: reproduction of the certified approximation-ratio table.
//!
//! See the crate examples for runnable demonstrations of each capability,
//! and the `twisted-maxcut` binary for a command-line interface.

pub mod certify;
pub mod cli;
pub mod cut;
mod error;
pub mod graph;
pub mod operators;
pub mod optimize;
pub mod postprocess;
pub mod qaoa;
pub mod treeval;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
