//! Binary matrices and the translation-overlap relation.

mod matrix;
mod overlap;
mod text;

pub use matrix::BitMatrix;
pub use overlap::{
    classify_window, general_overlap_witness, overlap_witness, self_overlap_witness,
    OverlapWitness, WindowCase,
};
pub use text::{parse_matrices, parse_matrix, serialize_matrices, serialize_matrix};

pub(crate) use overlap::{first_witness, sorted_translations};
