//! Complete complementary codes: verification, transposition, Kronecker
//! composition and the built-in seed codes.

use std::collections::BTreeSet;

use crate::correlation::set_cross_sum;
use crate::error::{Error, Result};
use crate::golay::{mate_property, GolayPair};
use crate::seqcore::{ComplementarySet, CompleteComplementaryCode, PhaseSequence};

/// True iff `Σ_m C_{c^{k1}_m, c^{k2}_m}(τ) = M·N·δ(k1-k2)·δ(τ)` for all
/// `k1, k2` and every shift.
pub fn verify_ccc(code: &CompleteComplementaryCode) -> bool {
    let m = code.set_size();
    let n = code.len() as isize;
    let peak = (m as f64) * (n as f64);
    for k1 in 0..m {
        for k2 in 0..m {
            let sum = match set_cross_sum(code.set(k1), code.set(k2)) {
                Ok(s) => s,
                Err(_) => return false,
            };
            for t in 1 - n..n {
                let ok = if k1 == k2 && t == 0 {
                    let v = sum.at(0);
                    (v.re() - peak).abs() <= sum.epsilon() && v.im().abs() <= sum.epsilon()
                } else {
                    sum.is_zero_at(t)
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Exchanges set and row indices: output set `i` is `(c^0_i, c^1_i, …, c^{M-1}_i)`.
pub fn transpose_ccc(code: &CompleteComplementaryCode) -> CompleteComplementaryCode {
    let m = code.set_size();
    let rows = (0..m)
        .map(|i| (0..m).map(|k| code.row(k, i).clone()).collect())
        .collect();
    CompleteComplementaryCode::from_rows(rows).expect("transpose of a square code is square")
}

/// Composes an `(M, M, N1)` and an `(M, M, N2)` code into an `(M, M, M·N1·N2)` code.
///
/// Row `l` of set `m` is `c^m_0 ⊗ d^l_0 || c^m_1 ⊗ d^l_1 || … || c^m_{M-1} ⊗ d^l_{M-1}`.
pub fn kronecker_ccc(
    first: &CompleteComplementaryCode,
    second: &CompleteComplementaryCode,
) -> Result<CompleteComplementaryCode> {
    let m = first.set_size();
    if second.set_size() != m {
        return Err(Error::SetSizeMismatch(m, second.set_size()));
    }
    let mut sets = Vec::with_capacity(m);
    for s in 0..m {
        let mut rows = Vec::with_capacity(m);
        for l in 0..m {
            let blocks: Vec<PhaseSequence> = (0..m)
                .map(|j| first.row(s, j).kronecker(second.row(l, j)))
                .collect();
            rows.push(PhaseSequence::concat(&blocks)?);
        }
        sets.push(ComplementarySet::new(rows)?);
    }
    CompleteComplementaryCode::new(sets)
}

/// A GCP with one of its mates forms the `(2, 2, N)` code `{[a; b], [c; d]}`.
pub fn gcp_to_ccc(pair: &GolayPair, mate: &GolayPair) -> Result<CompleteComplementaryCode> {
    if pair.len() != mate.len() {
        return Err(Error::LengthMismatch(pair.len(), mate.len()));
    }
    if pair.modulus() != mate.modulus() {
        return Err(Error::ModulusMismatch(pair.modulus(), mate.modulus()));
    }
    if !mate_property(pair, mate)? {
        return Err(Error::Mate);
    }
    CompleteComplementaryCode::from_rows(vec![
        vec![pair.a().clone(), pair.b().clone()],
        vec![mate.a().clone(), mate.b().clone()],
    ])
}

/// Identifiers accepted by [`seed`].
pub const SEED_NAMES: [&str; 6] = [
    "table3-N3",
    "table3-N5",
    "table3-N7",
    "table3-N11",
    "table3-N13",
    "example3-N4",
];

/// Binary `(4, 4, N)` codes as powers of `-1`, one string per set, rows
/// separated by spaces.
const SEARCHED_CODES: [(usize, [&str; 4]); 5] = [
    (
        3,
        [
            "000 001 001 010",
            "010 001 110 111",
            "011 000 101 100",
            "011 010 000 011",
        ],
    ),
    (
        5,
        [
            "00001 01100 01000 01011",
            "00010 00101 01111 00110",
            "00101 11101 00110 10000",
            "01100 11110 01011 10111",
        ],
    ),
    (
        7,
        [
            "0000001 0011010 0011010 0100011",
            "0011101 0011010 1100101 1000000",
            "0101100 0100011 1111110 1010011",
            "0101100 0111111 0011101 0101100",
        ],
    ),
    (
        11,
        [
            "01110110110 00111000101 00011010100 00000001101",
            "00011010100 00000001101 10001001001 11000111010",
            "10110000000 11010100111 10100011100 10010010001",
            "01011100011 01101101110 10110000000 11010100111",
        ],
    ),
    (
        13,
        [
            "0111011010100 0011101001101 0001100001001 0000000111010",
            "0001100001001 0000000111010 1000100101011 1100010110010",
            "0101110000000 0110111100111 1011001011100 1101010010001",
            "0100110100011 0010101101110 0101110000000 0110111100111",
        ],
    ),
];

const LENGTH4_CODE: [[[i8; 4]; 4]; 4] = [
    [[1, 1, 1, 1], [1, 1, -1, -1], [-1, 1, -1, 1], [-1, 1, 1, -1]],
    [
        [-1, -1, 1, 1],
        [-1, -1, -1, -1],
        [1, -1, -1, 1],
        [1, -1, 1, -1],
    ],
    [[-1, 1, -1, 1], [-1, 1, 1, -1], [1, 1, 1, 1], [1, 1, -1, -1]],
    [
        [1, -1, -1, 1],
        [1, -1, 1, -1],
        [-1, -1, 1, 1],
        [-1, -1, -1, -1],
    ],
];

fn decode_exponent_sets(sets: &[&str; 4]) -> CompleteComplementaryCode {
    let rows = sets
        .iter()
        .map(|set| {
            set.split_whitespace()
                .map(|row| {
                    let exps = row.bytes().map(|b| u32::from(b - b'0')).collect();
                    PhaseSequence::new(2, exps).expect("seed exponents are 0 or 1")
                })
                .collect()
        })
        .collect();
    CompleteComplementaryCode::from_rows(rows).expect("seed codes are square")
}

/// Returns a built-in seed code by name.
///
/// # Panics
///
/// Panics if the stored code fails [`verify_ccc`]; that is a data error in the
/// registry, not a caller error.
pub fn seed(name: &str) -> Result<CompleteComplementaryCode> {
    let code = if name == "example3-N4" {
        let rows = LENGTH4_CODE
            .iter()
            .map(|set| {
                set.iter()
                    .map(|r| PhaseSequence::from_signs(r).expect("±1 entries"))
                    .collect()
            })
            .collect();
        CompleteComplementaryCode::from_rows(rows).expect("seed codes are square")
    } else {
        let n: usize = name
            .strip_prefix("table3-N")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::UnknownSeed(name.to_string()))?;
        let (_, sets) = SEARCHED_CODES
            .iter()
            .find(|(len, _)| *len == n)
            .ok_or_else(|| Error::UnknownSeed(name.to_string()))?;
        decode_exponent_sets(sets)
    };
    assert!(verify_ccc(&code), "seed {name} is not a valid CCC");
    Ok(code)
}

/// Lengths of the built-in `(4, 4, N)` seed codes.
pub const SEED_LENGTHS: [usize; 6] = [3, 4, 5, 7, 11, 13];

/// Lengths up to 200 listed in the literature as reachable from the seed codes
/// when an additional set-size-changing Kronecker rule is also allowed.
pub const REFERENCE_LENGTHS_200: [usize; 29] = [
    12, 13, 20, 24, 28, 36, 40, 44, 48, 52, 56, 60, 72, 80, 84, 88, 96, 112, 120, 132, 140, 144,
    156, 160, 168, 176, 192, 196, 200,
];

/// Every `N <= bound` reachable from [`SEED_LENGTHS`] under `(N1, N2) ↦ 4·N1·N2`,
/// closed transitively, including the seeds themselves. Sorted ascending.
pub fn reachable_lengths(bound: usize) -> Vec<usize> {
    let mut reached: BTreeSet<usize> = SEED_LENGTHS
        .iter()
        .copied()
        .filter(|&n| n <= bound)
        .collect();
    loop {
        let current: Vec<usize> = reached.iter().copied().collect();
        let mut grew = false;
        for (i, &x) in current.iter().enumerate() {
            for &y in &current[i..] {
                let n = 4 * x * y;
                if n <= bound && reached.insert(n) {
                    grew = true;
                }
            }
        }
        if !grew {
            return reached.into_iter().collect();
        }
    }
}
