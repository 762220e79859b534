//! Exact graph invariants: α, ω, χ, ψ, ρ, χ* and LP-dual weights.

pub mod clique;
pub mod coloring;
pub mod exponent;
pub mod fractional;
pub mod hall;
pub mod simplex;
pub mod stable_sets;
pub mod subsets;

pub use clique::{alpha, max_clique, max_stable_set, omega};
pub use coloring::{chi, chromatic_number};
pub use exponent::{empirical_exponent, EmpiricalExponent};
pub use fractional::{chi_star, dual_weights, DualWitness, FractionalColouring};
pub use hall::{hall_ratio, hall_ratio_with, psi, HallOptions};
pub use stable_sets::maximal_stable_sets;
pub use subsets::SubsetTable;
