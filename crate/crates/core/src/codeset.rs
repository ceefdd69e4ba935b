//! Construction, enumeration, counting and verification of the
//! non-overlapping matrix families.
//!
//! A family is parameterized by `(k, m, n, h)` with `3 <= k <= n/2`,
//! `m >= 2` and `0 <= h <= n - 2k`. Its members are the `m x n` binary
//! matrices with
//!
//! * first row `1^(h+k-1) 0 w 1 0^(k-1)`, the middle part being any
//!   run-avoiding string that starts with `0` and ends with `1`;
//! * middle rows: any run-avoiding string of length `n` ending with `0`;
//! * last row `1^(h+k) v 0^k`, `v` any run-avoiding string.
//!
//! The fixed frame forces every slipping of one member over another to hit
//! either a forbidden run or a frame mismatch, which is what the
//! verification routines here check exhaustively.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grid::{
    first_witness, self_overlap_witness, sorted_translations, BitMatrix, OverlapWitness,
};
use crate::seq::{d_term, kgen_fib};
use crate::words::{count_class, unrank_class, RowClass};
use crate::Count;

/// Default cap on the number of window comparisons a verification or probe
/// run may need before it refuses to start.
pub const DEFAULT_COMPARISON_BUDGET: u64 = 10_000_000;

/// Parameters `(k, m, n, h)` of one matrix family; `h = 0` is the base
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    k: usize,
    m: usize,
    n: usize,
    h: usize,
}

impl CodeParams {
    pub fn new(k: usize, m: usize, n: usize, h: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::params(format!(
                "k must be at least 3, got {k} (k = 2 admits no middle rows)"
            )));
        }
        if n < 2 * k {
            return Err(Error::params(format!("need n >= 2k, got k={k} n={n}")));
        }
        if m < 2 {
            return Err(Error::params(format!("need m >= 2, got m={m}")));
        }
        if h > n - 2 * k {
            return Err(Error::params(format!(
                "need h <= n - 2k = {}, got h={h}",
                n - 2 * k
            )));
        }
        Ok(CodeParams { k, m, n, h })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// Length of the variable `0w1` part of the first row.
    pub fn first_row_core_len(&self) -> usize {
        self.n - 2 * self.k + 2 - self.h
    }

    /// Length of the variable part of the last row.
    pub fn last_row_core_len(&self) -> usize {
        self.n - 2 * self.k - self.h
    }
}

/// Indices selecting one member of a family: lexicographic ranks into the
/// row classes of [`crate::words`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSelections {
    pub first: Count,
    pub middles: Vec<Count>,
    pub last: Count,
}

impl RowSelections {
    pub fn zero(p: &CodeParams) -> Self {
        RowSelections {
            first: Count::from(0u32),
            middles: vec![Count::from(0u32); p.m() - 2],
            last: Count::from(0u32),
        }
    }
}

/// Materialize the member of the family selected by `sel`.
pub fn build_matrix(p: &CodeParams, sel: &RowSelections) -> Result<BitMatrix> {
    if sel.middles.len() != p.m - 2 {
        return Err(Error::SelectionShape {
            expected: p.m - 2,
            got: sel.middles.len(),
        });
    }
    let mut rows = Vec::with_capacity(p.m);

    let v1 = unrank_class(RowClass::R, p.k, p.first_row_core_len(), &sel.first)?;
    rows.push(format!(
        "{}{}{}",
        "1".repeat(p.h + p.k - 1),
        v1,
        "0".repeat(p.k - 1)
    ));

    for idx in &sel.middles {
        rows.push(unrank_class(RowClass::Z, p.k, p.n, idx)?);
    }

    let vm = unrank_class(RowClass::B, p.k, p.last_row_core_len(), &sel.last)?;
    rows.push(format!(
        "{}{}{}",
        "1".repeat(p.h + p.k),
        vm,
        "0".repeat(p.k)
    ));

    debug_assert!(rows.iter().all(|r| r.len() == p.n));
    BitMatrix::from_rows(&rows)
}

/// `|family|` as the product of its row-class counts: one factor for the
/// first row, `m - 2` for the middles, one for the last row.
pub fn code_size_product(p: &CodeParams) -> Result<Count> {
    let first: Count = count_class(RowClass::R, p.k, p.first_row_core_len())?;
    let middle: Count = count_class(RowClass::Z, p.k, p.n)?;
    let last: Count = count_class(RowClass::B, p.k, p.last_row_core_len())?;
    Ok(first * middle.pow(p.m as u32 - 2) * last)
}

/// `|family|` in terms of the order-`(k-1)` Fibonacci numbers; only defined
/// for `h = 0`.
pub fn code_size_fib(p: &CodeParams) -> Result<Count> {
    if p.h != 0 {
        return Err(Error::params(
            "the Fibonacci form of the family size is only defined for h = 0",
        ));
    }
    let (k, m, n) = (p.k, p.m, p.n);
    let middle_factor: Count = kgen_fib(k - 1, n - 1)?;
    if n == 2 * k {
        return Ok(middle_factor.pow(m as u32 - 2));
    }
    let low: Count = kgen_fib(k - 1, n - 2 * k - 1)?;
    let mid: Count =
        kgen_fib::<Count>(k - 1, n - 2 * k + 1)? + Count::from(d_term(k, n - 2 * k + 2)?);
    Ok(low * mid * middle_factor.pow(m as u32 - 2))
}

/// Ordered stream over a whole family; see [`enumerate_code`].
pub struct CodeEnumerator {
    params: CodeParams,
    radices: Vec<Count>,
    current: Option<Vec<Count>>,
}

/// Enumerate every member of the family, ordered lexicographically by
/// `(first, middles..., last)` selection indices with the first row most
/// significant.
pub fn enumerate_code(p: &CodeParams) -> Result<CodeEnumerator> {
    let mut radices = Vec::with_capacity(p.m);
    radices.push(count_class(RowClass::R, p.k, p.first_row_core_len())?);
    let z_count: Count = count_class(RowClass::Z, p.k, p.n)?;
    for _ in 0..p.m - 2 {
        radices.push(z_count.clone());
    }
    radices.push(count_class(RowClass::B, p.k, p.last_row_core_len())?);

    let zero = Count::from(0u32);
    let current = if radices.contains(&zero) {
        None
    } else {
        Some(vec![zero; p.m])
    };
    Ok(CodeEnumerator {
        params: *p,
        radices,
        current,
    })
}

impl Iterator for CodeEnumerator {
    type Item = BitMatrix;

    fn next(&mut self) -> Option<BitMatrix> {
        let digits = self.current.as_mut()?;
        let sel = RowSelections {
            first: digits[0].clone(),
            middles: digits[1..digits.len() - 1].to_vec(),
            last: digits[digits.len() - 1].clone(),
        };
        let matrix = build_matrix(&self.params, &sel)
            .expect("enumerator indices are below the class counts");
        // Mixed-radix increment, last position fastest.
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1u32;
            if digits[pos] < self.radices[pos] {
                break;
            }
            digits[pos] = Count::from(0u32);
        }
        Some(matrix)
    }
}

/// Outcome of a whole-set verification: which matrices overlap themselves
/// under a nonzero translation, and which pairs overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub matrix_count: usize,
    pub self_failures: Vec<(usize, OverlapWitness)>,
    pub pair_failures: Vec<(usize, usize, OverlapWitness)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.self_failures.is_empty() && self.pair_failures.is_empty()
    }
}

/// Exhaustively check that `matrices` is a non-overlapping set: every member
/// unbordered, every unordered pair non-overlapping.
///
/// All matrices must share dimensions and be pairwise distinct. Refuses to
/// start if the scan would need more than `max_comparisons` translation
/// windows.
pub fn verify_code(matrices: &[BitMatrix], max_comparisons: u64) -> Result<VerificationReport> {
    if matrices.is_empty() {
        return Ok(VerificationReport {
            matrix_count: 0,
            self_failures: Vec::new(),
            pair_failures: Vec::new(),
        });
    }
    let (rows, cols) = (matrices[0].rows(), matrices[0].cols());
    for m in matrices.iter() {
        if m.rows() != rows || m.cols() != cols {
            return Err(Error::DimensionMismatch {
                left_rows: rows,
                left_cols: cols,
                right_rows: m.rows(),
                right_cols: m.cols(),
            });
        }
    }
    let mut seen: HashMap<&BitMatrix, usize> = HashMap::with_capacity(matrices.len());
    for (i, m) in matrices.iter().enumerate() {
        if let Some(&first) = seen.get(m) {
            return Err(Error::DuplicateMatrices { first, second: i });
        }
        seen.insert(m, i);
    }

    let per_scan = ((2 * rows - 1) * (2 * cols - 1) - 1) as u128;
    let n = matrices.len() as u128;
    let needed = per_scan * (n + n * (n - 1) / 2);
    if needed > max_comparisons as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: max_comparisons,
        });
    }

    let translations = sorted_translations(rows, cols, rows, cols, true);
    let mut report = VerificationReport {
        matrix_count: matrices.len(),
        self_failures: Vec::new(),
        pair_failures: Vec::new(),
    };
    for (i, m) in matrices.iter().enumerate() {
        if let Some(w) = self_overlap_witness(m) {
            report.self_failures.push((i, w));
        }
    }
    for i in 0..matrices.len() {
        for j in i + 1..matrices.len() {
            if let Some(w) = first_witness(&matrices[i], &matrices[j], &translations) {
                report.pair_failures.push((i, j, w));
            }
        }
    }
    Ok(report)
}

/// An overlapping pair found between two families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeHit {
    pub left_index: usize,
    pub right_index: usize,
    pub left: BitMatrix,
    pub right: BitMatrix,
    pub witness: OverlapWitness,
}

/// Search the cross product of two families for an overlapping pair.
///
/// Pairs are scanned in enumeration order (left family outer); the first
/// overlapping pair is returned, `None` if the two families are mutually
/// non-overlapping. Families of differing dimensions are compared with the
/// generalized scan, where containment counts as overlap.
pub fn union_overlap_probe(
    p1: &CodeParams,
    p2: &CodeParams,
    max_comparisons: u64,
) -> Result<Option<ProbeHit>> {
    let size1 = code_size_product(p1)?;
    let size2 = code_size_product(p2)?;
    let same_dims = p1.m() == p2.m() && p1.n() == p2.n();
    let per_pair = (p1.m() + p2.m() - 1) * (p1.n() + p2.n() - 1) - usize::from(same_dims);
    let needed = size1 * size2 * Count::from(per_pair);
    if needed > Count::from(max_comparisons) {
        let needed_u128: u128 = needed.try_into().unwrap_or(u128::MAX);
        return Err(Error::BudgetExceeded {
            needed: needed_u128,
            budget: max_comparisons,
        });
    }

    let left: Vec<BitMatrix> = enumerate_code(p1)?.collect();
    let right: Vec<BitMatrix> = enumerate_code(p2)?.collect();
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            // Entrywise-equal pairs fall back to the self scan, so probing a
            // family against itself stays well-defined.
            let skip_zero = same_dims && a == b;
            let translations =
                sorted_translations(a.rows(), a.cols(), b.rows(), b.cols(), skip_zero);
            if let Some(witness) = first_witness(a, b, &translations) {
                return Ok(Some(ProbeHit {
                    left_index: i,
                    right_index: j,
                    left: a.clone(),
                    right: b.clone(),
                    witness,
                }));
            }
        }
    }
    Ok(None)
}

/// True iff `m` has the row structure of the family `p`: the fixed frame
/// entries, run avoidance of every variable part, and middle rows that avoid
/// runs and end with `0`.
pub fn matches_family_template(p: &CodeParams, m: &BitMatrix) -> bool {
    use crate::words::in_class;
    if m.rows() != p.m() || m.cols() != p.n() {
        return false;
    }
    let first = m.row_string(0);
    let head = p.h() + p.k() - 1;
    let core = &first[head..head + p.first_row_core_len()];
    if !first[..head].bytes().all(|b| b == b'1')
        || !first[head + p.first_row_core_len()..]
            .bytes()
            .all(|b| b == b'0')
        || !in_class(core, RowClass::R, p.k())
        || core.len() < 2
    {
        return false;
    }
    for i in 1..p.m() - 1 {
        if !in_class(&m.row_string(i), RowClass::Z, p.k()) {
            return false;
        }
    }
    let last = m.row_string(p.m() - 1);
    let head = p.h() + p.k();
    let core = &last[head..head + p.last_row_core_len()];
    last[..head].bytes().all(|b| b == b'1')
        && last[head + p.last_row_core_len()..]
            .bytes()
            .all(|b| b == b'0')
        && in_class(core, RowClass::B, p.k())
}
