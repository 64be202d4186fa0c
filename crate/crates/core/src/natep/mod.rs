//! Eventually periodic subsets of `ℕ` and eventually periodic sequences.

mod covers;
mod epset;
mod sequence;

pub use covers::{
    cogap_diagnostic, even_odd_split, finitely_insensitive_probe, in_g, in_h, inn_cogap_witness, out_cogap,
    residue_cover_search, CoGapDiagnostic, CoverSearch,
};
pub use epset::EpSet;
pub use sequence::{seq_limit, seq_preimage, seq_push, EpSequence, NamedFamily};
