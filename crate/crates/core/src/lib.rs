//! Monomial ideals through their cellular resolutions: Scarf complexes,
//! irreducible decompositions and symbolic residue currents.

pub mod complex;
pub mod decomposition;
pub mod error;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod par;
pub mod residue;
pub mod resolution;
pub mod scarf;
pub mod staircase;

pub use complex::{Face, FaceSpec, LabeledComplex, DEFAULT_VERTEX_CAP, MAX_VERTEX_CAP};
pub use decomposition::{
    associated_primes, decompose_brute, decompose_minimal, decompose_scarf, primary_grouping, Decomposition, Method,
    DEFAULT_CANDIDATE_CAP,
};
pub use error::{Error, ErrorKind, Result};
pub use monomial::{IrreducibleIdeal, Monomial, MonomialIdeal};
pub use par::Execution;
pub use resolution::{is_resolution, DifferentialEntry, FreeComplex};
pub use scarf::{contains_scarf_complex, scarf_complex, scarf_pairs, star_ideal, GhostedIdeal, ScarfPair, StarVertex};
pub use residue::{
    annihilator_bounds, classify, duality_check, primary_parts, residue_current, DualityReport, Limits, ResidueCurrent,
    ResidueEntry, Rule, Status, Verdict,
};
pub use staircase::Staircase;
