//! Unimodular sequences over q-th roots of unity.
//!
//! A [`PhaseSequence`] with modulus `q >= 1` stores phase exponents `e` so that
//! entry `k` is `exp(2πi·e_k/q)`. Modulus `0` is the escape hatch for arbitrary
//! unit-magnitude complex entries. Binary sequences use `q = 2`, quadriphase
//! sequences `q = 4`; for `q ∈ {1, 2, 4}` every entry is a Gaussian integer and
//! the correlation engine works without rounding.

use std::f64::consts::PI;
use std::fmt;

use num_complex::{Complex, Complex64};
use num_integer::Integer;

use crate::error::{Error, Result};

/// Tolerance on `|z| - 1` for raw complex entries.
pub const UNIMODULAR_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
enum Entries {
    Phase { modulus: u32, exps: Vec<u32> },
    Raw(Vec<Complex64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSequence {
    entries: Entries,
}

/// `i^e` for `e` taken mod 4.
pub(crate) fn gaussian_unit(quarter_turns: u32) -> Complex<i64> {
    match quarter_turns % 4 {
        0 => Complex::new(1, 0),
        1 => Complex::new(0, 1),
        2 => Complex::new(-1, 0),
        _ => Complex::new(0, -1),
    }
}

pub(crate) fn root_of_unity(exp: u32, modulus: u32) -> Complex64 {
    // Exact values on the axes keep the float path free of spurious residue.
    let e = (exp % modulus) as u64;
    let q = modulus as u64;
    if (4 * e).is_multiple_of(q) {
        return match (4 * e / q) % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * e as f64 / q as f64)
}

impl PhaseSequence {
    /// Builds a sequence of `exp(2πi·e/q)` entries. `modulus` must be at least 1.
    pub fn new(modulus: u32, exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((index, &exponent)) = exps.iter().enumerate().find(|(_, &e)| e >= modulus) {
            return Err(Error::ExponentOutOfRange {
                index,
                exponent,
                modulus,
            });
        }
        Ok(Self {
            entries: Entries::Phase { modulus, exps },
        })
    }

    /// Builds a modulus-0 sequence from raw unit-magnitude complex entries.
    pub fn from_complex(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        for (index, v) in values.iter().enumerate() {
            let magnitude = v.norm();
            if (magnitude - 1.0).abs() > UNIMODULAR_TOLERANCE {
                return Err(Error::NotUnimodular { index, magnitude });
            }
        }
        Ok(Self {
            entries: Entries::Raw(values),
        })
    }

    /// Binary sequence from `±1` entries.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        let exps = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(0),
                -1 => Ok(1),
                _ => Err(Error::InvalidSign),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(2, exps)
    }

    pub fn len(&self) -> usize {
        match &self.entries {
            Entries::Phase { exps, .. } => exps.len(),
            Entries::Raw(v) => v.len(),
        }
    }

    /// Always false; sequences hold at least one entry.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Phase modulus `q`, or 0 for raw complex entries.
    pub fn modulus(&self) -> u32 {
        match &self.entries {
            Entries::Phase { modulus, .. } => *modulus,
            Entries::Raw(_) => 0,
        }
    }

    pub fn exponents(&self) -> Option<&[u32]> {
        match &self.entries {
            Entries::Phase { exps, .. } => Some(exps),
            Entries::Raw(_) => None,
        }
    }

    pub fn is_binary(&self) -> bool {
        self.modulus() == 2
    }

    /// True when every entry is a Gaussian integer (`q ∈ {1, 2, 4}`).
    pub fn is_gaussian(&self) -> bool {
        matches!(self.modulus(), 1 | 2 | 4)
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        match &self.entries {
            Entries::Phase { modulus, exps } => {
                exps.iter().map(|&e| root_of_unity(e, *modulus)).collect()
            }
            Entries::Raw(v) => v.clone(),
        }
    }

    /// Entries as exact Gaussian integers, when the modulus allows it.
    pub fn to_gaussian(&self) -> Option<Vec<Complex<i64>>> {
        match &self.entries {
            Entries::Phase { modulus, exps } if matches!(modulus, 1 | 2 | 4) => {
                let step = 4 / modulus;
                Some(exps.iter().map(|&e| gaussian_unit(e * step)).collect())
            }
            _ => None,
        }
    }

    /// `±1` entries of a binary sequence.
    pub fn to_signs(&self) -> Option<Vec<i8>> {
        match &self.entries {
            Entries::Phase { modulus: 2, exps } => {
                Some(exps.iter().map(|&e| if e == 0 { 1 } else { -1 }).collect())
            }
            _ => None,
        }
    }

    pub fn reverse(&self) -> Self {
        let entries = match &self.entries {
            Entries::Phase { modulus, exps } => Entries::Phase {
                modulus: *modulus,
                exps: exps.iter().rev().copied().collect(),
            },
            Entries::Raw(v) => Entries::Raw(v.iter().rev().copied().collect()),
        };
        Self { entries }
    }

    pub fn conjugate(&self) -> Self {
        let entries = match &self.entries {
            Entries::Phase { modulus, exps } => Entries::Phase {
                modulus: *modulus,
                exps: exps.iter().map(|&e| (modulus - e) % modulus).collect(),
            },
            Entries::Raw(v) => Entries::Raw(v.iter().map(|z| z.conj()).collect()),
        };
        Self { entries }
    }

    /// Entrywise negation. Odd moduli have no `-1` and are rejected.
    pub fn negate(&self) -> Result<Self> {
        let entries = match &self.entries {
            Entries::Phase { modulus, exps } => {
                if modulus % 2 == 1 {
                    return Err(Error::OddModulus(*modulus));
                }
                let half = modulus / 2;
                Entries::Phase {
                    modulus: *modulus,
                    exps: exps.iter().map(|&e| (e + half) % modulus).collect(),
                }
            }
            Entries::Raw(v) => Entries::Raw(v.iter().map(|z| -z).collect()),
        };
        Ok(Self { entries })
    }

    /// Multiplies by `+1` or `-1`.
    pub fn scale_sign(&self, sign: i8) -> Result<Self> {
        match sign {
            1 => Ok(self.clone()),
            -1 => self.negate(),
            _ => Err(Error::InvalidSign),
        }
    }

    /// Re-expresses the sequence over a multiple of its modulus.
    pub fn lift(&self, modulus: u32) -> Result<Self> {
        match &self.entries {
            Entries::Phase { modulus: q, exps } => {
                if modulus == 0 {
                    return Ok(Self {
                        entries: Entries::Raw(self.to_complex()),
                    });
                }
                if !modulus.is_multiple_of(*q) {
                    return Err(Error::ModulusMismatch(*q, modulus));
                }
                let factor = modulus / q;
                Ok(Self {
                    entries: Entries::Phase {
                        modulus,
                        exps: exps.iter().map(|e| e * factor).collect(),
                    },
                })
            }
            Entries::Raw(_) if modulus == 0 => Ok(self.clone()),
            Entries::Raw(_) => Err(Error::ModulusMismatch(0, modulus)),
        }
    }

    /// Multiplies every entry by `ω_order^exp`; the modulus becomes `lcm(q, order)`.
    pub fn rotate(&self, exp: u32, order: u32) -> Self {
        assert!(order >= 1, "root order must be positive");
        match &self.entries {
            Entries::Phase { modulus, exps } => {
                let target = modulus.lcm(&order);
                let own = target / modulus;
                let shift = (exp % order) * (target / order);
                Self {
                    entries: Entries::Phase {
                        modulus: target,
                        exps: exps.iter().map(|e| (e * own + shift) % target).collect(),
                    },
                }
            }
            Entries::Raw(v) => {
                let w = root_of_unity(exp, order);
                Self {
                    entries: Entries::Raw(v.iter().map(|z| z * w).collect()),
                }
            }
        }
    }

    /// Concatenation `parts[0] || parts[1] || ...`; all parts must share the modulus.
    pub fn concat(parts: &[PhaseSequence]) -> Result<Self> {
        let first = parts.first().ok_or(Error::EmptySequence)?;
        let q = first.modulus();
        if let Some(bad) = parts.iter().find(|p| p.modulus() != q) {
            return Err(Error::ModulusMismatch(q, bad.modulus()));
        }
        let entries = if q == 0 {
            Entries::Raw(parts.iter().flat_map(|p| p.to_complex()).collect())
        } else {
            Entries::Phase {
                modulus: q,
                exps: parts
                    .iter()
                    .flat_map(|p| p.exponents().unwrap_or_default().iter().copied())
                    .collect(),
            }
        };
        Ok(Self { entries })
    }

    /// Kronecker product: entry `k1·N2 + k2` is `x[k1]·y[k2]`.
    pub fn kronecker(&self, other: &PhaseSequence) -> Self {
        match (&self.entries, &other.entries) {
            (
                Entries::Phase {
                    modulus: q1,
                    exps: x,
                },
                Entries::Phase {
                    modulus: q2,
                    exps: y,
                },
            ) => {
                let q = q1.lcm(q2);
                let (f1, f2) = (q / q1, q / q2);
                let exps = x
                    .iter()
                    .flat_map(|&a| y.iter().map(move |&b| (a * f1 + b * f2) % q))
                    .collect();
                Self {
                    entries: Entries::Phase { modulus: q, exps },
                }
            }
            _ => {
                let y = other.to_complex();
                let values = self
                    .to_complex()
                    .into_iter()
                    .flat_map(|a| y.iter().map(move |b| a * b))
                    .collect();
                Self {
                    entries: Entries::Raw(values),
                }
            }
        }
    }
}

impl fmt::Display for PhaseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.entries {
            Entries::Phase { modulus, exps } => {
                write!(f, "q={modulus} [")?;
                for (i, e) in exps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("]")
            }
            Entries::Raw(v) => {
                f.write_str("q=0 [")?;
                for (i, z) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{},{}", z.re, z.im)?;
                }
                f.write_str("]")
            }
        }
    }
}

/// `M` rows of equal length and modulus.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplementarySet {
    rows: Vec<PhaseSequence>,
}

impl ComplementarySet {
    pub fn new(rows: Vec<PhaseSequence>) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::Shape("a set needs at least one row".into()))?;
        let (n, q) = (first.len(), first.modulus());
        for r in &rows[1..] {
            if r.len() != n {
                return Err(Error::LengthMismatch(n, r.len()));
            }
            if r.modulus() != q {
                return Err(Error::ModulusMismatch(q, r.modulus()));
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[PhaseSequence] {
        &self.rows
    }

    pub fn row(&self, index: usize) -> &PhaseSequence {
        &self.rows[index]
    }

    /// Number of rows `M`.
    pub fn set_size(&self) -> usize {
        self.rows.len()
    }

    /// Row length `N`.
    pub fn len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn modulus(&self) -> u32 {
        self.rows[0].modulus()
    }

    pub fn into_rows(self) -> Vec<PhaseSequence> {
        self.rows
    }
}

/// `M` complementary sets of `M` rows each, all of length `N`.
///
/// Set `k`, row `m` is written `c^k_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompleteComplementaryCode {
    sets: Vec<ComplementarySet>,
}

impl CompleteComplementaryCode {
    /// Checks the square shape; complementarity is checked by `ccc::verify_ccc`.
    pub fn new(sets: Vec<ComplementarySet>) -> Result<Self> {
        let first = sets
            .first()
            .ok_or_else(|| Error::Shape("a code needs at least one set".into()))?;
        let (n, q) = (first.len(), first.modulus());
        for (k, s) in sets.iter().enumerate() {
            if s.set_size() != sets.len() {
                return Err(Error::Shape(format!(
                    "set {k} has {} rows but the code has {} sets",
                    s.set_size(),
                    sets.len()
                )));
            }
            if s.len() != n {
                return Err(Error::LengthMismatch(n, s.len()));
            }
            if s.modulus() != q {
                return Err(Error::ModulusMismatch(q, s.modulus()));
            }
        }
        Ok(Self { sets })
    }

    /// Builds a code from `sets[k][m]` rows.
    pub fn from_rows(rows: Vec<Vec<PhaseSequence>>) -> Result<Self> {
        let sets = rows
            .into_iter()
            .map(ComplementarySet::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(sets)
    }

    pub fn sets(&self) -> &[ComplementarySet] {
        &self.sets
    }

    pub fn set(&self, k: usize) -> &ComplementarySet {
        &self.sets[k]
    }

    /// `c^k_m`.
    pub fn row(&self, k: usize, m: usize) -> &PhaseSequence {
        self.sets[k].row(m)
    }

    /// Number of sets, equal to rows per set.
    pub fn set_size(&self) -> usize {
        self.sets.len()
    }

    /// Row length `N`.
    pub fn len(&self) -> usize {
        self.sets[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn modulus(&self) -> u32 {
        self.sets[0].modulus()
    }
}

/// A correlation value. Exact values are Gaussian integers and compare without
/// tolerance; float values come from the general-modulus path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComplexValue {
    Exact(Complex<i64>),
    Float(Complex64),
}

impl ComplexValue {
    pub fn is_exact(&self) -> bool {
        matches!(self, ComplexValue::Exact(_))
    }

    pub fn re(&self) -> f64 {
        match self {
            ComplexValue::Exact(z) => z.re as f64,
            ComplexValue::Float(z) => z.re,
        }
    }

    pub fn im(&self) -> f64 {
        match self {
            ComplexValue::Exact(z) => z.im as f64,
            ComplexValue::Float(z) => z.im,
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re(), self.im())
    }

    pub fn magnitude(&self) -> f64 {
        self.to_complex64().norm()
    }

    /// Zero test: exact comparison on the Gaussian path, `|z| <= eps` otherwise.
    pub fn is_zero(&self, eps: f64) -> bool {
        match self {
            ComplexValue::Exact(z) => z.re == 0 && z.im == 0,
            ComplexValue::Float(z) => z.norm() <= eps,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            ComplexValue::Exact(z) => ComplexValue::Exact(z.conj()),
            ComplexValue::Float(z) => ComplexValue::Float(z.conj()),
        }
    }
}

impl From<Complex<i64>> for ComplexValue {
    fn from(z: Complex<i64>) -> Self {
        ComplexValue::Exact(z)
    }
}

impl From<i64> for ComplexValue {
    fn from(re: i64) -> Self {
        ComplexValue::Exact(Complex::new(re, 0))
    }
}
