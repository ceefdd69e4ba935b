//! Rational generating functions for the sequence families and exact
//! Maclaurin-coefficient extraction.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::CountInt;
use crate::seq::SeqKind;

/// Dense integer-coefficient polynomial, ascending powers, trailing zeros
/// trimmed. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T>(Vec<T>);

impl<T: CountInt> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.0
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> T {
        self.0.get(i).cloned().unwrap_or_else(T::zero)
    }

    fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `1 + x + ... + x^(len-1)`.
    fn ones(len: usize) -> Self {
        Poly(vec![T::one(); len])
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly(Vec::new());
        }
        let mut out = vec![T::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    fn scaled(&self, c: &T) -> Self {
        Poly::new(self.0.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^j`.
    fn shifted(&self, j: usize) -> Self {
        if self.0.is_empty() {
            return Poly(Vec::new());
        }
        let mut out = vec![T::zero(); j];
        out.extend(self.0.iter().cloned());
        Poly(out)
    }

    /// Divide every coefficient by two; `None` if any is odd.
    fn halved(&self) -> Option<Self> {
        let two = T::from_u32(2).unwrap();
        let mut out = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            if !c.is_even() {
                return None;
            }
            out.push(c.clone() / two.clone());
        }
        Some(Poly(out))
    }
}

/// A rational generating function `numerator / denominator` over the
/// integers. The denominator must have a nonzero constant term so the series
/// expansion is well-defined; extraction additionally requires that constant
/// term to be a unit (`1` or `-1`) so every coefficient stays an exact
/// integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf<T> {
    numer: Poly<T>,
    denom: Poly<T>,
}

impl<T: CountInt> RationalGf<T> {
    pub fn new(numer: Poly<T>, denom: Poly<T>) -> Result<Self> {
        if denom.coeff(0).is_zero() {
            return Err(Error::ZeroDenominatorConstant);
        }
        Ok(RationalGf { numer, denom })
    }

    pub fn numerator(&self) -> &[T] {
        self.numer.coeffs()
    }

    pub fn denominator(&self) -> &[T] {
        self.denom.coeffs()
    }

    /// Maclaurin coefficients `c_0 ..= c_order` by power-series long
    /// division.
    pub fn series(&self, order: usize) -> Result<Vec<T>> {
        let q0 = self.denom.coeff(0);
        if !(q0 == T::one() || q0 == -T::one()) {
            return Err(Error::NonUnitDenominator {
                found: q0.to_string(),
            });
        }
        let deg_q = self.denom.coeffs().len().saturating_sub(1);
        let mut c: Vec<T> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = self.numer.coeff(i);
            for j in 1..=deg_q.min(i) {
                acc = acc - self.denom.coeff(j) * c[i - j].clone();
            }
            // 1/q0 == q0 for a unit constant term.
            c.push(acc * q0.clone());
        }
        Ok(c)
    }
}

/// The generating function of the given sequence family.
///
/// `F` and `D` accept `k >= 2`; `R`, `B` and `Z` need `k >= 3` since they are
/// built from the order-`(k-1)` Fibonacci function.
pub fn gf_for<T: CountInt>(kind: SeqKind) -> Result<RationalGf<T>> {
    match kind {
        SeqKind::F(k) => {
            if k < 2 {
                return Err(Error::InvalidK { k, min: 2 });
            }
            RationalGf::new(Poly::ones(k), f_denominator(k))
        }
        SeqKind::D(k) => {
            if k < 2 {
                return Err(Error::InvalidK { k, min: 2 });
            }
            RationalGf::new(Poly::constant(T::one()), Poly::ones(k))
        }
        SeqKind::B(k) => {
            if k < 3 {
                return Err(Error::InvalidK { k, min: 3 });
            }
            // b(x) = 2x f(x) + 1 with f of order k-1.
            let nf = Poly::ones(k - 1);
            let df = f_denominator(k - 1);
            let two = T::from_u32(2).unwrap();
            RationalGf::new(nf.shifted(1).scaled(&two).add(&df), df)
        }
        SeqKind::Z(k) => {
            if k < 3 {
                return Err(Error::InvalidK { k, min: 3 });
            }
            // z(x) = x f(x) + 1 with f of order k-1.
            let nf = Poly::ones(k - 1);
            let df = f_denominator(k - 1);
            RationalGf::new(nf.shifted(1).add(&df), df)
        }
        SeqKind::R(k) => {
            if k < 3 {
                return Err(Error::InvalidK { k, min: 3 });
            }
            // r(x) = (x f(x) + d(x) + 1) / 2 over the common denominator
            // df * dd; the constant +1 supplies the n = 0 term. Every
            // numerator coefficient is even, so halving it keeps the
            // coefficients integral.
            let nf = Poly::ones(k - 1);
            let df = f_denominator(k - 1);
            let dd = Poly::ones(k);
            let one_plus_dd = Poly::constant(T::one()).add(&dd);
            let unhalved = nf.mul(&dd).shifted(1).add(&df.mul(&one_plus_dd));
            let numer = unhalved
                .halved()
                .expect("numerator of the r generating function is even");
            RationalGf::new(numer, df.mul(&dd))
        }
    }
}

/// `1 - x - x^2 - ... - x^k`.
fn f_denominator<T: CountInt>(k: usize) -> Poly<T> {
    let mut coeffs = vec![-T::one(); k + 1];
    coeffs[0] = T::one();
    Poly::new(coeffs)
}

/// Maclaurin coefficients `c_0 ..= c_order` of `gf`.
pub fn gf_series<T: CountInt>(gf: &RationalGf<T>, order: usize) -> Result<Vec<T>> {
    gf.series(order)
}

/// Element-wise product of two coefficient lists of equal length.
pub fn hadamard_series<T: CountInt>(a: &[T], b: &[T]) -> Result<Vec<T>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() * y.clone())
        .collect())
}

/// Closed-form approximation of the order-2 Fibonacci term `f_n^(2)` via the
/// golden ratio: `(phi^(n+2) - psi^(n+2)) / sqrt(5)`.
///
/// Rounding to the nearest integer recovers the exact value as long as it
/// fits the mantissa (up to roughly `2^52` for `f64`).
pub fn binet_f2<F: Float>(n: usize) -> F {
    let five = F::from(5).unwrap();
    let sqrt5 = five.sqrt();
    let half = F::from(0.5).unwrap();
    let phi = (F::one() + sqrt5) * half;
    let psi = (F::one() - sqrt5) * half;
    let e = n as i32 + 2;
    (phi.powi(e) - psi.powi(e)) / sqrt5
}
