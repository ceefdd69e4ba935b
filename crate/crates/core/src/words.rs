//! Binary strings avoiding the runs `0^k` and `1^k`, with optional end
//! constraints: counting, lexicographic enumeration, ranking and unranking.
//!
//! Counting here is done by a run-length automaton, independently of the
//! recurrences in [`crate::seq`]; the two routes are held to agreement by
//! tests, which is the point of keeping them separate.

use crate::error::{Error, Result};
use crate::scalar::CountInt;
use crate::Count;

/// End constraint of a string class. All classes avoid both runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowClass {
    /// Starts with `0`, ends with `1` (lengths >= 2; the empty string is the
    /// sole member at length 0, and length 1 is empty).
    R,
    /// Ends with `0` (the empty string is the sole member at length 0).
    Z,
    /// No end constraints.
    B,
}

impl RowClass {
    fn end_ok(self, bit: usize) -> bool {
        match self {
            RowClass::R => bit == 1,
            RowClass::Z => bit == 0,
            RowClass::B => true,
        }
    }

    fn first_bit_ok(self, bit: usize) -> bool {
        match self {
            RowClass::R => bit == 0,
            RowClass::Z | RowClass::B => true,
        }
    }
}

/// True iff `s` contains no run of `k` or more equal symbols.
pub fn avoids_runs(s: &str, k: usize) -> bool {
    let mut run = 0usize;
    let mut last = None;
    let mut max_run = 0usize;
    for ch in s.chars() {
        if Some(ch) == last {
            run += 1;
        } else {
            last = Some(ch);
            run = 1;
        }
        max_run = max_run.max(run);
    }
    max_run < k
}

/// Membership test for `class` at run parameter `k` (any length).
pub fn in_class(s: &str, class: RowClass, k: usize) -> bool {
    if !s.chars().all(|c| c == '0' || c == '1') || !avoids_runs(s, k) {
        return false;
    }
    match class {
        RowClass::B => true,
        RowClass::Z => s.is_empty() || s.ends_with('0'),
        RowClass::R => s.is_empty() || (s.len() >= 2 && s.starts_with('0') && s.ends_with('1')),
    }
}

/// Completion-count table for the run-length automaton.
///
/// `ways(rem, bit, run)` is the number of admissible suffixes of length
/// `rem`, given that the last emitted symbol is `bit` repeated `run` times
/// (`1 <= run <= k-1`).
struct ClassDp<T> {
    class: RowClass,
    k: usize,
    n: usize,
    ways: Vec<T>,
}

impl<T: CountInt> ClassDp<T> {
    fn new(class: RowClass, k: usize, n: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidK { k, min: 3 });
        }
        let runs = k - 1;
        let mut ways = vec![T::zero(); (n + 1) * 2 * runs];
        let idx = |rem: usize, bit: usize, run: usize| (rem * 2 + bit) * runs + (run - 1);
        for bit in 0..2 {
            let end = if class.end_ok(bit) {
                T::one()
            } else {
                T::zero()
            };
            for run in 1..=runs {
                ways[idx(0, bit, run)] = end.clone();
            }
        }
        for rem in 1..=n {
            for bit in 0..2 {
                for run in 1..=runs {
                    let mut w = ways[idx(rem - 1, 1 - bit, 1)].clone();
                    if run < runs {
                        w = w + ways[idx(rem - 1, bit, run + 1)].clone();
                    }
                    ways[idx(rem, bit, run)] = w;
                }
            }
        }
        Ok(ClassDp { class, k, n, ways })
    }

    fn ways(&self, rem: usize, bit: usize, run: usize) -> &T {
        &self.ways[(rem * 2 + bit) * (self.k - 1) + (run - 1)]
    }

    fn count(&self) -> T {
        if self.n == 0 {
            return T::one();
        }
        let mut total = T::zero();
        for bit in 0..2 {
            if self.class.first_bit_ok(bit) {
                total = total + self.ways(self.n - 1, bit, 1).clone();
            }
        }
        total
    }

    /// Candidate next bits at position `pos` in ascending order, with the
    /// run length that choosing each would produce.
    fn candidates(&self, pos: usize, state: Option<(usize, usize)>) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(2);
        for bit in 0..2usize {
            match state {
                None => {
                    if pos == 0 && self.class.first_bit_ok(bit) {
                        out.push((bit, 1));
                    }
                }
                Some((last, run)) => {
                    if bit == last {
                        if run < self.k - 1 {
                            out.push((bit, run + 1));
                        }
                    } else {
                        out.push((bit, 1));
                    }
                }
            }
        }
        out
    }

    fn unrank(&self, index: &T) -> Result<String> {
        let count = self.count();
        if index < &T::zero() || index >= &count {
            return Err(Error::RankOutOfRange {
                index: index.to_string(),
                count: count.to_string(),
            });
        }
        let mut remaining = index.clone();
        let mut out = String::with_capacity(self.n);
        let mut state: Option<(usize, usize)> = None;
        for pos in 0..self.n {
            let rem = self.n - 1 - pos;
            let mut chosen = None;
            for (bit, run) in self.candidates(pos, state) {
                let w = self.ways(rem, bit, run).clone();
                if remaining < w {
                    chosen = Some((bit, run));
                    break;
                }
                remaining = remaining - w;
            }
            let (bit, run) = chosen.expect("index checked against count");
            out.push(if bit == 0 { '0' } else { '1' });
            state = Some((bit, run));
        }
        Ok(out)
    }

    fn rank(&self, s: &str) -> Result<T> {
        if s.len() != self.n || !in_class(s, self.class, self.k) {
            return Err(Error::NotInClass {
                string: s.to_string(),
            });
        }
        let mut rank = T::zero();
        let mut state: Option<(usize, usize)> = None;
        for (pos, ch) in s.chars().enumerate() {
            let rem = self.n - 1 - pos;
            let actual = if ch == '1' { 1 } else { 0 };
            let mut next_state = None;
            for (bit, run) in self.candidates(pos, state) {
                if bit < actual {
                    rank = rank + self.ways(rem, bit, run).clone();
                } else if bit == actual {
                    next_state = Some((bit, run));
                }
            }
            state = Some(next_state.expect("membership was checked"));
        }
        Ok(rank)
    }
}

/// Number of length-`n` members of `class`, by dynamic programming over run
/// states. Requires `k >= 3`.
pub fn count_class<T: CountInt>(class: RowClass, k: usize, n: usize) -> Result<T> {
    Ok(ClassDp::<T>::new(class, k, n)?.count())
}

/// The `index`-th member of `class` in lexicographic order (`0 < 1`).
pub fn unrank_class<T: CountInt>(class: RowClass, k: usize, n: usize, index: &T) -> Result<String> {
    ClassDp::new(class, k, n)?.unrank(index)
}

/// Lexicographic position of `s` within its class; inverse of
/// [`unrank_class`].
pub fn rank_class<T: CountInt>(class: RowClass, k: usize, n: usize, s: &str) -> Result<T> {
    ClassDp::new(class, k, n)?.rank(s)
}

/// All members of `class` at length `n` in lexicographic order.
pub fn enumerate_class(class: RowClass, k: usize, n: usize) -> Result<ClassIter> {
    let dp = ClassDp::new(class, k, n)?;
    let total = dp.count();
    Ok(ClassIter {
        dp,
        next: Count::from(0u32),
        total,
    })
}

/// Stream over a string class; see [`enumerate_class`].
pub struct ClassIter {
    dp: ClassDp<Count>,
    next: Count,
    total: Count,
}

impl Iterator for ClassIter {
    type Item = String;

    fn next(&mut self) -> Option<String> {
        if self.next >= self.total {
            return None;
        }
        let s = self.dp.unrank(&self.next).expect("index below count");
        self.next += 1u32;
        Some(s)
    }
}
