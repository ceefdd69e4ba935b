//! Exact integer sequences counting binary strings that avoid the runs
//! `0^k` and `1^k`.
//!
//! Five families are covered, each indexed by a parameter `k >= 2`:
//!
//! * `f` — k-generalized Fibonacci numbers (order-`k` sum recurrence,
//!   seeded with `2^n`); these count strings avoiding `0^k` alone.
//! * `b` — strings avoiding both runs, no end constraints.
//! * `z` — strings avoiding both runs and ending with `0`.
//! * `r` — strings avoiding both runs, starting with `0` and ending with `1`.
//! * `d` — the periodic `1, -1, 0, ..., 0` correction term that links `r`
//!   to the Fibonacci family.
//!
//! Three distinct recurrences are implemented for `r` (see [`RMethod`]);
//! they must agree everywhere, and the crate's tests hold them to that.

use crate::error::{Error, Result};
use crate::scalar::{pow2, CountInt};

/// Identifies one of the five sequence families together with its `k`.
///
/// `F` uses `k` as the order of the sum recurrence; the other four use it as
/// the forbidden run length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    F(usize),
    D(usize),
    R(usize),
    B(usize),
    Z(usize),
}

impl SeqKind {
    pub fn k(&self) -> usize {
        match *self {
            SeqKind::F(k) | SeqKind::D(k) | SeqKind::R(k) | SeqKind::B(k) | SeqKind::Z(k) => k,
        }
    }
}

/// Which recurrence to use for the `r` sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RMethod {
    /// Convolution with the crescendo-pyramidal coefficient pattern
    /// `1; 1,2; 1,2,3; ...` folded back down past lag `k`.
    Pyramidal,
    /// Plus the `k` previous terms, minus the `k-1` terms before those.
    Signed,
    /// Sum of the `k-1` previous terms plus the `d` correction.
    FibCorrected,
}

/// `f_n` for the order-`k` generalized Fibonacci numbers.
///
/// Seeded with `f_n = 2^n` for `n < k`, then each term is the sum of the `k`
/// preceding ones. Requires `k >= 2`.
pub fn kgen_fib<T: CountInt>(k: usize, n: usize) -> Result<T> {
    Ok(kgen_fib_series(k, n)?.pop().unwrap())
}

/// The prefix `f_0 ..= f_n_max`.
pub fn kgen_fib_series<T: CountInt>(k: usize, n_max: usize) -> Result<Vec<T>> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let two = T::from_u32(2).unwrap();
    let mut v: Vec<T> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let t = if n == 0 {
            T::one()
        } else if n < k {
            v[n - 1].clone() * two.clone()
        } else {
            sum_window(&v, n, k)
        };
        v.push(t);
    }
    Ok(v)
}

/// The correction term: `1` when `n % k == 0`, `-1` when `n % k == 1`,
/// `0` otherwise. Requires `k >= 2`.
pub fn d_term(k: usize, n: usize) -> Result<i32> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    Ok(match n % k {
        0 => 1,
        1 => -1,
        _ => 0,
    })
}

/// `r_n`: the number of length-`n` strings avoiding both runs that start
/// with `0` and end with `1`.
///
/// All three methods agree; `k = 2` is served by the closed alternating form
/// (`1` at even `n`, `0` at odd `n`) rather than the recurrences, which are
/// only stated for `k >= 3`.
pub fn r_term<T: CountInt>(k: usize, n: usize, method: RMethod) -> Result<T> {
    Ok(r_series(k, n, method)?.pop().unwrap())
}

/// The prefix `r_0 ..= r_n_max`.
pub fn r_series<T: CountInt>(k: usize, n_max: usize, method: RMethod) -> Result<Vec<T>> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    if k == 2 {
        return Ok((0..=n_max)
            .map(|n| if n % 2 == 0 { T::one() } else { T::zero() })
            .collect());
    }
    let mut v: Vec<T> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let t = match n {
            0 => T::one(),
            1 => T::zero(),
            _ => match method {
                RMethod::Pyramidal => {
                    if n <= k {
                        pow2(n - 2)
                    } else {
                        let mut acc = T::zero();
                        for h in 2..=k {
                            if h <= n {
                                let c = T::from_usize(h - 1).unwrap();
                                acc = acc + c * v[n - h].clone();
                            }
                        }
                        for h in (k + 1)..=(2 * k - 2) {
                            if h <= n {
                                let c = T::from_usize(2 * k - h - 1).unwrap();
                                acc = acc + c * v[n - h].clone();
                            }
                        }
                        acc
                    }
                }
                RMethod::Signed => {
                    let mut acc = T::zero();
                    for j in 1..=k {
                        if j <= n {
                            acc = acc + v[n - j].clone();
                        }
                    }
                    for j in (k + 1)..=(2 * k - 1) {
                        if j <= n {
                            acc = acc - v[n - j].clone();
                        }
                    }
                    acc
                }
                RMethod::FibCorrected => {
                    let mut acc = T::from_i32(d_term(k, n)?).unwrap();
                    for j in 1..=(k - 1) {
                        if j <= n {
                            acc = acc + v[n - j].clone();
                        }
                    }
                    acc
                }
            },
        };
        v.push(t);
    }
    Ok(v)
}

/// `b_n`: the number of length-`n` strings avoiding both runs.
///
/// Seeded with `2^n` for `n < k`, then each term is the sum of the `k-1`
/// preceding ones. Requires `k >= 3`.
pub fn b_term<T: CountInt>(k: usize, n: usize) -> Result<T> {
    Ok(b_series(k, n)?.pop().unwrap())
}

/// The prefix `b_0 ..= b_n_max`.
pub fn b_series<T: CountInt>(k: usize, n_max: usize) -> Result<Vec<T>> {
    if k < 3 {
        return Err(Error::InvalidK { k, min: 3 });
    }
    let mut v: Vec<T> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let t = if n < k {
            pow2(n)
        } else {
            sum_window(&v, n, k - 1)
        };
        v.push(t);
    }
    Ok(v)
}

/// `z_n`: the number of length-`n` strings avoiding both runs and ending
/// with `0`. Equals `b_n / 2` for `n >= 1` (`b_n` is even there, since
/// complementation swaps the two end symbols). Requires `k >= 3`.
pub fn z_term<T: CountInt>(k: usize, n: usize) -> Result<T> {
    Ok(z_series(k, n)?.pop().unwrap())
}

/// The prefix `z_0 ..= z_n_max`.
pub fn z_series<T: CountInt>(k: usize, n_max: usize) -> Result<Vec<T>> {
    let b = b_series::<T>(k, n_max)?;
    let two = T::from_u32(2).unwrap();
    Ok(b.into_iter()
        .enumerate()
        .map(|(n, bn)| {
            if n == 0 {
                T::one()
            } else {
                assert!(bn.is_even(), "b_{n} must be even");
                bn / two.clone()
            }
        })
        .collect())
}

fn sum_window<T: CountInt>(v: &[T], n: usize, width: usize) -> T {
    let mut acc = T::zero();
    for j in 1..=width {
        if j <= n {
            acc = acc + v[n - j].clone();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Count;
    use num_integer::Integer;

    fn c(v: i64) -> Count {
        Count::from(v)
    }

    #[test]
    fn kgen_fib_examples() {
        assert_eq!(kgen_fib::<Count>(2, 0).unwrap(), c(1));
        assert_eq!(kgen_fib::<Count>(2, 9).unwrap(), c(89));
        assert_eq!(
            kgen_fib_series::<Count>(2, 9).unwrap(),
            [1, 2, 3, 5, 8, 13, 21, 34, 55, 89].map(c)
        );
        // f_5^(2) must equal z_6^(3) = b_6^(3) / 2 = 26 / 2.
        assert_eq!(kgen_fib::<Count>(2, 5).unwrap(), c(13));
        assert_eq!(z_term::<Count>(3, 6).unwrap(), c(13));
        assert_eq!(b_term::<Count>(3, 6).unwrap(), c(26));
    }

    #[test]
    fn kgen_fib_rejects_small_k() {
        assert!(matches!(
            kgen_fib::<Count>(1, 3),
            Err(Error::InvalidK { k: 1, min: 2 })
        ));
    }

    #[test]
    fn d_term_examples() {
        assert_eq!(d_term(3, 0).unwrap(), 1);
        assert_eq!(d_term(3, 10).unwrap(), -1);
        assert_eq!(d_term(4, 6).unwrap(), 0);
        assert!(d_term(1, 0).is_err());
    }

    #[test]
    fn d_window_sums_to_zero() {
        for k in 2..=10 {
            for n in 0..=50 {
                let s: i32 = (0..k).map(|i| d_term(k, n + i).unwrap()).sum();
                assert_eq!(s, 0, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn r_term_examples() {
        for method in [RMethod::Pyramidal, RMethod::Signed, RMethod::FibCorrected] {
            assert_eq!(r_term::<Count>(3, 6, method).unwrap(), c(7));
            assert_eq!(r_term::<Count>(4, 15, method).unwrap(), c(2884));
            assert_eq!(r_term::<Count>(3, 10, method).unwrap(), c(44));
        }
        // Cross-check r_10^(3) against (f_9^(2) + d_10^(3)) / 2 = (89 - 1) / 2.
        let f9: Count = kgen_fib(2, 9).unwrap();
        let d10 = Count::from(d_term(3, 10).unwrap());
        assert_eq!(
            c(2) * r_term::<Count>(3, 10, RMethod::Signed).unwrap(),
            f9 + d10
        );
    }

    #[test]
    fn r_term_k2_special_case() {
        for n in 0..=20 {
            let want = if n % 2 == 0 { c(1) } else { c(0) };
            for method in [RMethod::Pyramidal, RMethod::Signed, RMethod::FibCorrected] {
                assert_eq!(r_term::<Count>(2, n, method).unwrap(), want);
            }
        }
        assert!(r_term::<Count>(1, 0, RMethod::Signed).is_err());
    }

    #[test]
    fn r_methods_agree() {
        for k in 3..=8 {
            let a = r_series::<Count>(k, 60, RMethod::Pyramidal).unwrap();
            let b = r_series::<Count>(k, 60, RMethod::Signed).unwrap();
            let c = r_series::<Count>(k, 60, RMethod::FibCorrected).unwrap();
            assert_eq!(a, b, "k={k}");
            assert_eq!(b, c, "k={k}");
        }
    }

    #[test]
    fn b_term_examples() {
        assert_eq!(b_term::<Count>(3, 10).unwrap(), c(178));
        assert_eq!(b_term::<Count>(4, 10).unwrap(), c(548));
        assert_eq!(b_term::<Count>(5, 0).unwrap(), c(1));
        assert!(matches!(
            b_term::<Count>(2, 4),
            Err(Error::InvalidK { k: 2, min: 3 })
        ));
    }

    #[test]
    fn z_term_examples() {
        assert_eq!(z_term::<Count>(3, 10).unwrap(), c(89));
        assert_eq!(z_term::<Count>(3, 0).unwrap(), c(1));
        assert_eq!(z_term::<Count>(4, 7).unwrap(), c(44));
        assert!(z_term::<Count>(2, 1).is_err());
    }

    #[test]
    fn fibonacci_identities_small() {
        for k in 3..=6 {
            let f = kgen_fib_series::<Count>(k - 1, 40).unwrap();
            let b = b_series::<Count>(k, 41).unwrap();
            let z = z_series::<Count>(k, 41).unwrap();
            let r = r_series::<Count>(k, 41, RMethod::FibCorrected).unwrap();
            for n in 1..=41usize {
                assert_eq!(b[n], c(2) * f[n - 1].clone(), "b k={k} n={n}");
                assert_eq!(z[n], f[n - 1], "z k={k} n={n}");
                let d = Count::from(d_term(k, n).unwrap());
                assert_eq!(c(2) * r[n].clone(), f[n - 1].clone() + d, "r k={k} n={n}");
                assert!((f[n - 1].clone() + Count::from(d_term(k, n).unwrap())).is_even());
            }
        }
    }

    #[test]
    fn terms_agree_across_scalar_types() {
        for k in 3..=5 {
            let big = b_series::<Count>(k, 30).unwrap();
            let small = b_series::<i128>(k, 30).unwrap();
            for (lhs, rhs) in big.iter().zip(&small) {
                assert_eq!(lhs, &Count::from(*rhs));
            }
        }
    }
}
