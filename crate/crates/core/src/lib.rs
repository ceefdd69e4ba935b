//! Non-overlapping binary matrix codes: two matrices are non-overlapping
//! when no translation of one over the other produces a control window in
//! which every co-located pair of entries agrees.
//!
//! The crate builds families of such matrices from binary strings that avoid
//! the runs `0^k` and `1^k`, counts them exactly, and verifies the
//! non-overlap property by exhaustive translation scans.
//!
//! # Module map
//!
//! * [`seq`] — the exact integer sequences behind the counting formulas
//!   (k-generalized Fibonacci numbers and the run-avoiding string counts).
//! * [`gf`] — rational generating functions for those sequences and exact
//!   series extraction.
//! * [`words`] — run-avoiding string classes: counting by automaton,
//!   lexicographic enumeration, ranking and unranking.
//! * [`grid`] — the bit-packed [`BitMatrix`] and the overlap relation.
//! * [`codeset`] — family construction, cardinality formulas, whole-set
//!   verification and cross-family overlap probes.
//!
//! The counting code is generic over the integer scalar through
//! [`CountInt`]; the default instantiation is the arbitrary-precision
//! [`Count`], since the counts grow like `2^n`.

pub mod codeset;
pub mod error;
pub mod gf;
pub mod grid;
pub mod scalar;
pub mod seq;
pub mod words;

pub use codeset::{
    build_matrix, code_size_fib, code_size_product, enumerate_code, matches_family_template,
    union_overlap_probe, verify_code, CodeEnumerator, CodeParams, ProbeHit, RowSelections,
    VerificationReport, DEFAULT_COMPARISON_BUDGET,
};
pub use error::{Error, Result};
pub use gf::{binet_f2, gf_for, gf_series, hadamard_series, Poly, RationalGf};
pub use grid::{
    classify_window, general_overlap_witness, overlap_witness, parse_matrices, parse_matrix,
    self_overlap_witness, serialize_matrices, serialize_matrix, BitMatrix, OverlapWitness,
    WindowCase,
};
pub use scalar::CountInt;
pub use seq::{
    b_series, b_term, d_term, kgen_fib, kgen_fib_series, r_series, r_term, z_series, z_term,
    RMethod, SeqKind,
};
pub use words::{
    avoids_runs, count_class, enumerate_class, in_class, rank_class, unrank_class, ClassIter,
    RowClass,
};

/// Exact counting scalar used throughout the public API.
pub type Count = num_bigint::BigInt;
