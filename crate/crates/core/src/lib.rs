//! Exact computations with finitely generated abelian groups: canonical
//! forms, `⊗`/`Hom`/`Ext¹`/`Tor₁`, nilpotent multipliers, and checks of how
//! the multiplier interacts with those functors.
//!
//! ```
//! use nilmult::{nilpotent_multiplier, tensor, FgAbGroup};
//!
//! let g = FgAbGroup::from_cyclic_orders([0u32, 4])?; // Z + Z4
//! let m = nilpotent_multiplier(&g, 2)?;
//! assert_eq!(m, FgAbGroup::cyclic(4u32).power(&2u32.into()));
//! assert_eq!(tensor(&g, &g).to_string(), "Z + Z4^3");
//! # Ok::<(), nilmult::Error>(())
//! ```

pub mod commutators;
pub mod compositions;
pub mod error;
pub mod fgab;
pub mod grid;
pub mod homalg;
pub mod matrix;
pub mod multiplier;

pub use commutators::{
    hall_basis, letter_multiset, mobius, tensor_t, witt_count, BasicCommutator, MultiplierParams,
};
pub use compositions::{
    check_commutation, closed_form, counterexample_suite, free_rank_witness, pipeline, sweep,
    CommutationReport, CompositionId, CounterexampleReport, Functor, SweepSummary,
};
pub use error::{Error, Result};
pub use fgab::{Cardinality, Cyclic, FgAbGroup};
pub use homalg::{ext1, ext_n, hom, tensor, tor1, tor_n};
pub use matrix::{smith_normal_form, IntMatrix, SmithNormalForm};
pub use multiplier::{
    free_product_coprime_cyclic, free_product_n2, free_product_n2_all, nilpotent_multiplier,
    schur_direct_product, schur_multiplier,
};
