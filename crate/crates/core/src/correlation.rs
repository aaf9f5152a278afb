//! Periodic and aperiodic correlation by direct summation.
//!
//! Sequences over `q ∈ {1, 2, 4}` are correlated in Gaussian integers and the
//! resulting profiles compare exactly. Every other modulus goes through `f64`
//! with a zero threshold of `1e-9 · N`.

use std::ops::{Add, Mul, Neg};

use num_complex::{Complex, Complex64};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::seqcore::{ComplementarySet, ComplexValue, PhaseSequence};

/// Relative zero threshold for the floating-point path.
pub const FLOAT_ZERO_SCALE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Periodicity {
    /// Shifts `0..N`; negative shifts wrap to `N + τ`.
    Periodic,
    /// Shifts `-(N-1)..=N-1`; anything outside is zero.
    Aperiodic,
}

#[derive(Debug, Clone, PartialEq)]
enum Values {
    Exact(Vec<Complex<i64>>),
    Float(Vec<Complex64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    periodicity: Periodicity,
    len: usize,
    values: Values,
}

impl CorrelationProfile {
    /// Length `N` of the correlated sequences.
    pub fn sequence_len(&self) -> usize {
        self.len
    }

    pub fn periodicity(&self) -> Periodicity {
        self.periodicity
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.values, Values::Exact(_))
    }

    /// Zero threshold used by [`Self::is_zero_at`]; 0 on the exact path.
    pub fn epsilon(&self) -> f64 {
        if self.is_exact() {
            0.0
        } else {
            FLOAT_ZERO_SCALE * self.len as f64
        }
    }

    /// Smallest and largest stored shift.
    pub fn shift_bounds(&self) -> (isize, isize) {
        let n = self.len as isize;
        match self.periodicity {
            Periodicity::Periodic => (0, n - 1),
            Periodicity::Aperiodic => (1 - n, n - 1),
        }
    }

    fn index(&self, tau: isize) -> Option<usize> {
        let n = self.len as isize;
        match self.periodicity {
            Periodicity::Periodic => Some(tau.rem_euclid(n) as usize),
            Periodicity::Aperiodic if tau.abs() < n => Some((tau + n - 1) as usize),
            Periodicity::Aperiodic => None,
        }
    }

    /// Value at shift `τ`. Aperiodic shifts with `|τ| >= N` are zero; periodic
    /// shifts are taken mod `N`.
    pub fn at(&self, tau: isize) -> ComplexValue {
        match (&self.values, self.index(tau)) {
            (Values::Exact(v), Some(i)) => ComplexValue::Exact(v[i]),
            (Values::Float(v), Some(i)) => ComplexValue::Float(v[i]),
            (Values::Exact(_), None) => ComplexValue::Exact(Complex::zero()),
            (Values::Float(_), None) => ComplexValue::Float(Complex64::zero()),
        }
    }

    pub fn is_zero_at(&self, tau: isize) -> bool {
        self.at(tau).is_zero(self.epsilon())
    }

    /// `(τ, value)` over the stored shift range, in increasing `τ`.
    pub fn iter(&self) -> impl Iterator<Item = (isize, ComplexValue)> + '_ {
        let (lo, hi) = self.shift_bounds();
        (lo..=hi).map(move |t| (t, self.at(t)))
    }

    /// Exact integer values, if this profile is on the Gaussian path.
    pub fn exact_values(&self) -> Option<&[Complex<i64>]> {
        match &self.values {
            Values::Exact(v) => Some(v),
            Values::Float(_) => None,
        }
    }

    /// Real parts as integers for an exact, purely real profile.
    pub fn real_integers(&self) -> Option<Vec<i64>> {
        let v = self.exact_values()?;
        v.iter().map(|z| (z.im == 0).then_some(z.re)).collect()
    }

    /// Shift-wise sum of two profiles of the same shape.
    pub fn try_add(&self, other: &CorrelationProfile) -> Result<CorrelationProfile> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        if self.periodicity != other.periodicity {
            return Err(Error::Shape(
                "cannot add periodic and aperiodic profiles".into(),
            ));
        }
        let values = match (&self.values, &other.values) {
            (Values::Exact(x), Values::Exact(y)) => {
                Values::Exact(x.iter().zip(y).map(|(a, b)| a + b).collect())
            }
            _ => Values::Float(
                self.iter()
                    .zip(other.iter())
                    .map(|((_, a), (_, b))| a.to_complex64() + b.to_complex64())
                    .collect(),
            ),
        };
        Ok(CorrelationProfile {
            periodicity: self.periodicity,
            len: self.len,
            values,
        })
    }
}

fn check_pair(a: &PhaseSequence, b: &PhaseSequence) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch(a.modulus(), b.modulus()));
    }
    Ok(())
}

fn aperiodic_sum<T>(a: &[Complex<T>], b_conj: &[Complex<T>]) -> Vec<Complex<T>>
where
    T: Clone + num_traits::Num,
{
    let n = a.len();
    let mut out = vec![Complex::<T>::zero(); 2 * n - 1];
    for (slot, tau) in out.iter_mut().zip(1 - n as isize..n as isize) {
        let mut acc = Complex::<T>::zero();
        if tau >= 0 {
            let t = tau as usize;
            for k in 0..n - t {
                acc = acc + a[k].clone() * b_conj[k + t].clone();
            }
        } else {
            let t = (-tau) as usize;
            for k in 0..n - t {
                acc = acc + a[k + t].clone() * b_conj[k].clone();
            }
        }
        *slot = acc;
    }
    out
}

fn periodic_sum<T>(a: &[Complex<T>], b_conj: &[Complex<T>]) -> Vec<Complex<T>>
where
    T: Clone + num_traits::Num,
{
    let n = a.len();
    (0..n)
        .map(|t| {
            (0..n).fold(Complex::<T>::zero(), |acc, k| {
                acc + a[k].clone() * b_conj[(k + t) % n].clone()
            })
        })
        .collect()
}

fn conj_all<T: Clone + num_traits::Num + Neg<Output = T>>(v: Vec<Complex<T>>) -> Vec<Complex<T>> {
    v.into_iter().map(|z| z.conj()).collect()
}

fn correlate(
    a: &PhaseSequence,
    b: &PhaseSequence,
    periodicity: Periodicity,
) -> Result<CorrelationProfile> {
    check_pair(a, b)?;
    let values = match (a.to_gaussian(), b.to_gaussian()) {
        (Some(x), Some(y)) => {
            let y = conj_all(y);
            Values::Exact(match periodicity {
                Periodicity::Periodic => periodic_sum(&x, &y),
                Periodicity::Aperiodic => aperiodic_sum(&x, &y),
            })
        }
        _ => {
            let x = a.to_complex();
            let y = conj_all(b.to_complex());
            Values::Float(match periodicity {
                Periodicity::Periodic => periodic_sum(&x, &y),
                Periodicity::Aperiodic => aperiodic_sum(&x, &y),
            })
        }
    };
    Ok(CorrelationProfile {
        periodicity,
        len: a.len(),
        values,
    })
}

/// Periodic cross-correlation `R_{a,b}(τ) = Σ_k a_k · conj(b_{(k+τ) mod N})`.
pub fn pccf(a: &PhaseSequence, b: &PhaseSequence) -> Result<CorrelationProfile> {
    correlate(a, b, Periodicity::Periodic)
}

pub fn pacf(a: &PhaseSequence) -> CorrelationProfile {
    correlate(a, a, Periodicity::Periodic).expect("a sequence matches itself")
}

/// Aperiodic cross-correlation over `τ ∈ [-(N-1), N-1]`.
pub fn accf(a: &PhaseSequence, b: &PhaseSequence) -> Result<CorrelationProfile> {
    correlate(a, b, Periodicity::Aperiodic)
}

pub fn aacf(a: &PhaseSequence) -> CorrelationProfile {
    correlate(a, a, Periodicity::Aperiodic).expect("a sequence matches itself")
}

/// Sum of the rows' aperiodic autocorrelations.
pub fn aacs_sum(set: &ComplementarySet) -> CorrelationProfile {
    let mut rows = set.rows().iter();
    let first = aacf(rows.next().expect("sets are non-empty"));
    rows.fold(first, |acc, r| {
        acc.try_add(&aacf(r)).expect("rows share length")
    })
}

/// `Σ_m accf(x_m, y_m)` over paired rows of two sets.
pub fn set_cross_sum(x: &ComplementarySet, y: &ComplementarySet) -> Result<CorrelationProfile> {
    if x.set_size() != y.set_size() {
        return Err(Error::SetSizeMismatch(x.set_size(), y.set_size()));
    }
    let mut total: Option<CorrelationProfile> = None;
    for (a, b) in x.rows().iter().zip(y.rows()) {
        let c = accf(a, b)?;
        total = Some(match total {
            None => c,
            Some(t) => t.try_add(&c)?,
        });
    }
    Ok(total.expect("sets are non-empty"))
}

/// Folds an aperiodic profile into the periodic one:
/// `R(τ) = C(τ) + C(τ - N)` for `0 <= τ < N`.
pub fn periodic_from_aperiodic(profile: &CorrelationProfile) -> Result<CorrelationProfile> {
    if profile.periodicity != Periodicity::Aperiodic {
        return Err(Error::Shape("expected an aperiodic profile".into()));
    }
    let n = profile.len as isize;
    let values = match &profile.values {
        Values::Exact(_) => Values::Exact(
            (0..n)
                .map(|t| fold_exact(profile.at(t)) + fold_exact(profile.at(t - n)))
                .collect(),
        ),
        Values::Float(_) => Values::Float(
            (0..n)
                .map(|t| profile.at(t).to_complex64() + profile.at(t - n).to_complex64())
                .collect(),
        ),
    };
    Ok(CorrelationProfile {
        periodicity: Periodicity::Periodic,
        len: profile.len,
        values,
    })
}

fn fold_exact(v: ComplexValue) -> Complex<i64> {
    match v {
        ComplexValue::Exact(z) => z,
        ComplexValue::Float(_) => unreachable!("exact profile yields exact values"),
    }
}

/// Product of two correlation values, exact when both are.
pub fn value_mul(x: ComplexValue, y: ComplexValue) -> ComplexValue {
    match (x, y) {
        (ComplexValue::Exact(a), ComplexValue::Exact(b)) => ComplexValue::Exact(a.mul(b)),
        _ => ComplexValue::Float(x.to_complex64() * y.to_complex64()),
    }
}

pub fn value_add(x: ComplexValue, y: ComplexValue) -> ComplexValue {
    match (x, y) {
        (ComplexValue::Exact(a), ComplexValue::Exact(b)) => ComplexValue::Exact(a.add(b)),
        _ => ComplexValue::Float(x.to_complex64() + y.to_complex64()),
    }
}
