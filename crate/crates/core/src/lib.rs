//! Entropic uncertainty bounds for pairs of quantum measurements.
//!
//! For two POVMs with overlap triplet (c_A, c_B, c_{A,B}), the sum of the
//! generalized (h,φ)-entropies of their outcome distributions is bounded
//! below by a triplet-dependent value, computed here by minimizing the sum
//! of fixed-max-probability minimal entropies along the Landau–Pollak
//! constraint curve. The crate also evaluates the classical comparison
//! bounds (Deutsch, Maassen–Uffink, Rastegin, Coles–Piani, the worst-case
//! majorization element) and ships brute-force oracles that validate all
//! of it from first principles.
//!
//! ```
//! use eur_core::bounds::{deutsch, proposition_bound};
//! use eur_core::entropy::{EntropySpec, Index};
//! use eur_core::OverlapTriplet;
//!
//! let spec = EntropySpec::renyi(Index::Infinite)?;
//! let t = OverlapTriplet::nondegenerate(0.9)?;
//! let bound = proposition_bound(&spec, &spec, &t);
//! assert!((bound.value - deutsch(0.9)?).abs() < 1e-8);
//! # Ok::<(), eur_core::Error>(())
//! ```

// negated float comparisons are deliberate throughout: they reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod entropy;
pub mod error;
pub mod landau_pollak;
pub mod maxprob;
pub mod oracle;
pub mod quantum;

pub use bounds::{BoundResult, Branch};
pub use entropy::{EntropySpec, Index, ProbabilityVector};
pub use error::{Error, Result};
pub use landau_pollak::OverlapTriplet;
pub use oracle::{Argmin, OracleReport};
pub use quantum::{DensityOperator, Povm, Purity, Sampler, UnitaryMatrix};
