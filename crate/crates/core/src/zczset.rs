//! Golay-ZCZ sets from complete complementary codes, zero-correlation-zone
//! measurement and optimality factors.
//!
//! A set of `M` sequences of length `L` is a Golay-ZCZ set with zone `Z` when
//! the aperiodic autocorrelations sum to zero off the peak (C1), every
//! periodic autocorrelation vanishes for `1 <= |τ| <= Z` (C2), and every
//! periodic cross-correlation vanishes for `|τ| <= Z` (C3).

use num_complex::Complex64;
use num_rational::Ratio;

use crate::ccc::verify_ccc;
use crate::correlation::{aacf, pacf, pccf};
use crate::error::{Error, Result};
use crate::seqcore::{root_of_unity, CompleteComplementaryCode, PhaseSequence};

/// Unnormalised `M × M` inverse DFT matrix, `f_{i,j} = ω_M^{i·j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdftMatrix {
    order: u32,
}

impl IdftMatrix {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "IDFT order must be positive");
        Self { order }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Exponent `e` with `f_{i,j} = ω_M^e`.
    pub fn exponent(&self, i: u32, j: u32) -> u32 {
        ((i as u64 * j as u64) % self.order as u64) as u32
    }

    pub fn entry(&self, i: u32, j: u32) -> Complex64 {
        root_of_unity(self.exponent(i, j), self.order)
    }
}

/// Builds `M` sequences of length `M²N` from an `(M, M, N)` code.
///
/// Sequence `k` is the row-major flattening of the `M × MN` block matrix whose
/// block `(i, j)` is `f_{i,j} · c^j_k`. The output modulus is `lcm(q, M)`
/// (or 0 for raw complex codes).
pub fn build_zcz_set(code: &CompleteComplementaryCode) -> Result<Vec<PhaseSequence>> {
    if !verify_ccc(code) {
        return Err(Error::InvalidCcc);
    }
    let m = code.set_size();
    let idft = IdftMatrix::new(m as u32);
    (0..m)
        .map(|k| {
            let mut blocks = Vec::with_capacity(m * m);
            for i in 0..m {
                for j in 0..m {
                    blocks.push(
                        code.row(j, k)
                            .rotate(idft.exponent(i as u32, j as u32), idft.order()),
                    );
                }
            }
            PhaseSequence::concat(&blocks)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// Zone bound `L / M`.
    Polyphase,
    /// Conjectured zone bound `L / (2M)`.
    Binary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZczReport {
    pub set_size: usize,
    pub length: usize,
    pub modulus: u32,
    /// Largest `Z_a` with every periodic autocorrelation zero on `1 <= |τ| <= Z_a`.
    pub measured_zacz: usize,
    /// Largest `Z_c` with every periodic cross-correlation zero on `|τ| <= Z_c`;
    /// `None` when some pair already correlates at `τ = 0`. Sets of one
    /// sequence report `L - 1`.
    pub measured_zccz: Option<usize>,
    pub z_min: usize,
    /// Aperiodic autocorrelations sum to zero at every `τ ≠ 0`.
    pub complementary: bool,
    pub claimed_z: usize,
    pub pass: bool,
}

impl ZczReport {
    /// Measured zone exceeds `floor(L / M)`, which no polyphase set can do.
    pub fn exceeds_polyphase_bound(&self) -> bool {
        self.z_min > self.length / self.set_size
    }

    /// Binary set whose zone exceeds the conjectured `floor(L / 2M)`.
    pub fn exceeds_binary_conjecture(&self) -> bool {
        self.modulus == 2 && self.z_min > self.length / (2 * self.set_size)
    }
}

/// Optimal zone width `Z_opti` for `M` sequences of length `L`.
pub fn optimal_width(length: usize, set_size: usize, alphabet: Alphabet) -> usize {
    match alphabet {
        Alphabet::Polyphase => length / set_size,
        Alphabet::Binary => length / (2 * set_size),
    }
}

/// `C = Z_min / Z_opti`; `None` when `Z_opti` is 0.
pub fn optimality_factor(report: &ZczReport, alphabet: Alphabet) -> Option<Ratio<u64>> {
    let opt = optimal_width(report.length, report.set_size, alphabet);
    (opt > 0).then(|| Ratio::new(report.z_min as u64, opt as u64))
}

/// Checks conditions C1–C3 and measures the achieved zone widths.
pub fn verify_golay_zcz(seqs: &[PhaseSequence], claimed_z: usize) -> Result<ZczReport> {
    let first = seqs
        .first()
        .ok_or_else(|| Error::Shape("empty sequence set".into()))?;
    let l = first.len();
    for s in seqs {
        if s.len() != l {
            return Err(Error::LengthMismatch(l, s.len()));
        }
        if s.modulus() != first.modulus() {
            return Err(Error::ModulusMismatch(first.modulus(), s.modulus()));
        }
    }
    let li = l as isize;

    let mut aacs = aacf(first);
    for s in &seqs[1..] {
        aacs = aacs.try_add(&aacf(s))?;
    }
    let complementary = (1..li).all(|t| aacs.is_zero_at(t) && aacs.is_zero_at(-t));

    // R_a(-τ) = conj(R_a(τ)), so scanning positive shifts covers |τ|.
    let measured_zacz = seqs
        .iter()
        .map(|s| {
            let r = pacf(s);
            (1..li)
                .find(|&t| !r.is_zero_at(t))
                .map_or(l - 1, |t| t as usize - 1)
        })
        .min()
        .expect("non-empty");

    let mut measured_zccz = Some(l - 1);
    for i in 0..seqs.len() {
        for j in i + 1..seqs.len() {
            let r = pccf(&seqs[i], &seqs[j])?;
            let width = (0..li)
                .find(|&t| !(r.is_zero_at(t) && r.is_zero_at(-t)))
                .map_or(Some(l - 1), |t| (t as usize).checked_sub(1));
            measured_zccz = match (measured_zccz, width) {
                (Some(a), Some(b)) => Some(a.min(b)),
                _ => None,
            };
        }
    }

    let z_min = measured_zccz.map_or(0, |c| c.min(measured_zacz));
    let pass = complementary && measured_zccz.is_some() && z_min >= claimed_z;
    Ok(ZczReport {
        set_size: seqs.len(),
        length: l,
        modulus: first.modulus(),
        measured_zacz,
        measured_zccz,
        z_min,
        complementary,
        claimed_z,
        pass,
    })
}
