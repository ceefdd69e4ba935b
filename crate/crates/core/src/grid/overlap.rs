//! The translation-overlap relation between binary matrices.
//!
//! Sliding one matrix over another produces a rectangular control window
//! (the intersection of the two cell grids). A translation is a witness of
//! overlap when every cell of its window holds equal entries in both
//! matrices.
//!
//! Translations are scanned in a fixed order so the reported witness is
//! reproducible: increasing `|dr|`, then increasing `|dc|`, then sign
//! (non-negative first, row sign before column sign).

use crate::error::{Error, Result};
use crate::grid::BitMatrix;

/// A translation that produces an all-equal control window, together with
/// the window dimensions.
///
/// `row_offset`/`col_offset` place the second matrix's cell `(0, 0)` at the
/// first matrix's cell `(row_offset, col_offset)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OverlapWitness {
    pub row_offset: isize,
    pub col_offset: isize,
    pub window_rows: usize,
    pub window_cols: usize,
}

/// Which argument rules out an overlapping window of a given shape for
/// matrices built on the run-avoiding frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowCase {
    /// The window would copy a `k`-run from one frame into a row that must
    /// avoid it.
    ForbiddenRun,
    /// Fixed frame entries of the two matrices land on the same cell with
    /// different values.
    FrameMismatch,
}

/// All translations of `b` over `a` with nonempty intersection, in the
/// documented scan order. `skip_zero` omits the identity translation.
pub(crate) fn sorted_translations(
    a_rows: usize,
    a_cols: usize,
    b_rows: usize,
    b_cols: usize,
    skip_zero: bool,
) -> Vec<(isize, isize)> {
    let mut out = Vec::with_capacity((a_rows + b_rows - 1) * (a_cols + b_cols - 1));
    let dr_max = a_rows as isize - 1;
    let dr_min = -(b_rows as isize - 1);
    let dc_max = a_cols as isize - 1;
    let dc_min = -(b_cols as isize - 1);
    for dr in dr_min..=dr_max {
        for dc in dc_min..=dc_max {
            if skip_zero && dr == 0 && dc == 0 {
                continue;
            }
            out.push((dr, dc));
        }
    }
    out.sort_by_key(|&(dr, dc)| (dr.abs(), dc.abs(), dr < 0, dc < 0));
    out
}

/// The window produced by translating `b` by `(dr, dc)` over `a`; `None`
/// unless every co-located pair of entries is equal.
pub(crate) fn window_match(
    a: &BitMatrix,
    b: &BitMatrix,
    dr: isize,
    dc: isize,
) -> Option<OverlapWitness> {
    let a_row0 = dr.max(0) as usize;
    let b_row0 = (-dr).max(0) as usize;
    let a_col0 = dc.max(0) as usize;
    let b_col0 = (-dc).max(0) as usize;
    let window_rows = (a.rows() - a_row0).min(b.rows() - b_row0);
    let window_cols = (a.cols() - a_col0).min(b.cols() - b_col0);
    debug_assert!(window_rows >= 1 && window_cols >= 1);
    for t in 0..window_rows {
        if !a.segment_eq(a_row0 + t, a_col0, b, b_row0 + t, b_col0, window_cols) {
            return None;
        }
    }
    Some(OverlapWitness {
        row_offset: dr,
        col_offset: dc,
        window_rows,
        window_cols,
    })
}

pub(crate) fn first_witness(
    a: &BitMatrix,
    b: &BitMatrix,
    translations: &[(isize, isize)],
) -> Option<OverlapWitness> {
    translations
        .iter()
        .find_map(|&(dr, dc)| window_match(a, b, dr, dc))
}

/// First overlapping window between two equal-dimension matrices, scanning
/// every nonzero translation; `None` means the pair is non-overlapping.
///
/// Entrywise-equal inputs are handled exactly like
/// [`self_overlap_witness`]: the identity translation is excluded and any
/// other match counts.
pub fn overlap_witness(a: &BitMatrix, b: &BitMatrix) -> Result<Option<OverlapWitness>> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    let translations = sorted_translations(a.rows(), a.cols(), b.rows(), b.cols(), true);
    Ok(first_witness(a, b, &translations))
}

/// First overlapping window of `a` against a translated copy of itself;
/// `None` means `a` is unbordered.
pub fn self_overlap_witness(a: &BitMatrix) -> Option<OverlapWitness> {
    let translations = sorted_translations(a.rows(), a.cols(), a.rows(), a.cols(), true);
    first_witness(a, a, &translations)
}

/// Overlap scan for matrices of any dimensions.
///
/// When one grid fits entirely inside the other, the window is the smaller
/// matrix, so containment counts as overlap. The identity translation is
/// scanned too, except for entrywise-equal inputs (that is the self case,
/// served by [`self_overlap_witness`]).
pub fn general_overlap_witness(a: &BitMatrix, b: &BitMatrix) -> Option<OverlapWitness> {
    let skip_zero = a == b;
    let translations = sorted_translations(a.rows(), a.cols(), b.rows(), b.cols(), skip_zero);
    first_witness(a, b, &translations)
}

/// The refutation case for a control window of shape `r x s` between two
/// members of a run-avoiding family with parameters `(k, m, n)`.
///
/// Requires `3 <= k`, `2k <= n`, `m >= 2`, `1 <= r <= m`, `1 <= s <= n` and
/// `(r, s) != (m, n)`.
pub fn classify_window(k: usize, m: usize, n: usize, r: usize, s: usize) -> Result<WindowCase> {
    if k < 3 {
        return Err(Error::InvalidK { k, min: 3 });
    }
    if n < 2 * k {
        return Err(Error::params(format!("need n >= 2k, got k={k} n={n}")));
    }
    if m < 2 {
        return Err(Error::params(format!("need m >= 2, got m={m}")));
    }
    if r < 1 || r > m || s < 1 || s > n {
        return Err(Error::params(format!(
            "window {r}x{s} out of range for {m}x{n}"
        )));
    }
    if (r, s) == (m, n) {
        return Err(Error::params(
            "the full-size window is the identity translation, not a slipping",
        ));
    }
    let case = if r == 1 {
        if s <= 2 * k - 2 || s > n - k {
            WindowCase::FrameMismatch
        } else {
            WindowCase::ForbiddenRun
        }
    } else if r < m {
        if s <= k {
            WindowCase::FrameMismatch
        } else {
            WindowCase::ForbiddenRun
        }
    } else {
        // r == m, s < n
        if s < 2 * k || s > n - k {
            WindowCase::FrameMismatch
        } else {
            WindowCase::ForbiddenRun
        }
    };
    Ok(case)
}
