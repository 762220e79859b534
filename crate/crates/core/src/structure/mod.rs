//! Induced P5 detection, pair and blockade searches, cutsets and the comb procedure.

pub mod blockade;
pub mod comb;
pub mod cutset;
pub mod p5;
pub mod pairs;
pub mod restricted;

pub use blockade::{find_complete_blockade, Blockade, BlockadeKind, BlockadeSearch};
pub use comb::{comb, validate_comb, CombOutcome};
pub use cutset::{classify_attachments, cutset_attachment_split, minimal_cutset, verify_minimal_cutset, Attachment};
pub use p5::{find_induced_p5, is_induced_p5, is_p5_free};
pub use pairs::{find_anticomplete_pair, PairSearch, SearchMode};
pub use restricted::find_eps_restricted_subgraph;
