//! Certificate-producing engines, the φ schedule and the certificate validator.

pub mod anti;
pub mod certificate;
pub mod phi;
pub mod pq;
pub mod trichotomy;

pub use anti::{anti_decompose, AntiDecomposition, Partition, TraceStep};
pub use certificate::{validate_certificate, Certificate, Check, Verdict};
pub use phi::{induction_step_inequality, phi, phi_lower_bound_check, y_grid};
pub use pq::{check_pq_sparse, pq_sparsity_threshold};
pub use trichotomy::{trichotomy_search, trichotomy_search_with, SearchSummary, TrichotomyReport, DEFAULT_D};
