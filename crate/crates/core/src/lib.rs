//! Exact computations for complements of complex hyperplane arrangements:
//! Orlik-Solomon algebras on the NBC basis, Aomoto complexes, cohomology at
//! rational weights and mod `N`, resonance and non-resonance tests, and
//! two-sided bounds for rank-one local system Betti numbers.

pub mod arrangement;
pub mod catalog;
pub mod cohom;
pub mod error;
pub mod exactla;
pub mod format;
pub mod osalg;
pub mod resonance;
pub mod sets;

pub use arrangement::{Arrangement, Flat, IntersectionLattice, Realization};
pub use cohom::{
    kunneth_product, modn_cohomology_ranks, os_cohomology_dims, render_poincare,
    scaling_equivalence_check, CoefficientRing, CohomologyReport, WeightVector,
};
pub use error::{Error, Result};
pub use exactla::{NfElem, NumberField, Rational};
pub use osalg::{AomotoComplex, AomotoMatrix, LinearForm};
pub use sets::IndexSet;
