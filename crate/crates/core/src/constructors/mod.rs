//! Quantum categories built from small categories, bialgebras and Hopf group
//! coalgebras.

mod bialgebra;
mod fincat;
mod hopf;
mod small;

pub use bialgebra::{bialgebra_category, bialgebra_law_failures, from_bialgebra, Bialgebra, BialgebraVerdict, OpVect};
pub use fincat::{categories_with_homs, small_categories, FinCat};
pub use hopf::{from_hopf_group_coalgebra, Component, HopfGroupCoalgebraData, HopfVerdict};
pub use small::{
    all_functors, all_naturals, from_small_category, from_small_category_unchecked, linearize, to_small_category,
    FinFunctor, FinNatural,
};
