//! Golay complementary pairs, Golay mates and the `(2, 4N, N)` Golay-ZCZ pair.

use crate::correlation::{aacf, accf};
use crate::error::{Error, Result};
use crate::seqcore::PhaseSequence;

/// Two sequences whose aperiodic autocorrelations sum to zero off the peak.
#[derive(Debug, Clone, PartialEq)]
pub struct GolayPair {
    a: PhaseSequence,
    b: PhaseSequence,
}

impl GolayPair {
    /// Fails with [`Error::NotComplementary`] unless `(a, b)` passes [`verify_gcp`].
    pub fn new(a: PhaseSequence, b: PhaseSequence) -> Result<Self> {
        if !verify_gcp(&a, &b)? {
            return Err(Error::NotComplementary);
        }
        Ok(Self { a, b })
    }

    /// The binary length-1 pair `((1), (1))`.
    pub fn unit() -> Self {
        let one = PhaseSequence::from_signs(&[1]).expect("valid sign");
        Self {
            a: one.clone(),
            b: one,
        }
    }

    pub fn a(&self) -> &PhaseSequence {
        &self.a
    }

    pub fn b(&self) -> &PhaseSequence {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn modulus(&self) -> u32 {
        self.a.modulus()
    }

    pub fn into_parts(self) -> (PhaseSequence, PhaseSequence) {
        (self.a, self.b)
    }

    /// Standard doubling `(a||b, a||-b)`.
    pub fn doubled(&self) -> Result<Self> {
        let a = PhaseSequence::concat(&[self.a.clone(), self.b.clone()])?;
        let b = PhaseSequence::concat(&[self.a.clone(), self.b.negate()?])?;
        Ok(Self { a, b })
    }

    /// `self`, then `steps` successive doublings.
    pub fn doubling_family(&self, steps: usize) -> Result<Vec<Self>> {
        let mut out = vec![self.clone()];
        for _ in 0..steps {
            let next = out.last().expect("non-empty").doubled()?;
            out.push(next);
        }
        Ok(out)
    }
}

/// True iff `C_a(τ) + C_b(τ) = 0` for every `τ ≠ 0`.
pub fn verify_gcp(a: &PhaseSequence, b: &PhaseSequence) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let sum = aacf(a).try_add(&aacf(b))?;
    let n = a.len() as isize;
    Ok((1..n).all(|t| sum.is_zero_at(t)))
}

/// The canonical mate `(c, d) = (rev(b*), -rev(a*))`.
pub fn golay_mate(pair: &GolayPair) -> Result<GolayPair> {
    let c = pair.b.conjugate().reverse();
    let d = pair.a.conjugate().reverse().negate()?;
    Ok(GolayPair { a: c, b: d })
}

/// True iff `C_{a,b}(τ) + C_{c,d}(τ) = 0` at every shift.
pub fn mate_property(pair: &GolayPair, mate: &GolayPair) -> Result<bool> {
    let sum = accf(&pair.a, &pair.b)?.try_add(&accf(&mate.a, &mate.b)?)?;
    let n = pair.len() as isize;
    Ok((1 - n..n).all(|t| sum.is_zero_at(t)))
}

/// Block signs `(x1, x2, x3, x4)` with `x1·x2 + x3·x4 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignQuadruple([i8; 4]);

impl SignQuadruple {
    pub fn new(x1: i8, x2: i8, x3: i8, x4: i8) -> Result<Self> {
        let s = [x1, x2, x3, x4];
        if s.iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::InvalidSign);
        }
        if x1 * x2 + x3 * x4 != 0 {
            return Err(Error::SignCondition);
        }
        Ok(Self(s))
    }

    /// All eight valid quadruples in lexicographic order of `(+1 < -1)`.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(8);
        for bits in 0u8..16 {
            let s: [i8; 4] = std::array::from_fn(|i| if bits >> (3 - i) & 1 == 0 { 1 } else { -1 });
            if let Ok(q) = Self::new(s[0], s[1], s[2], s[3]) {
                out.push(q);
            }
        }
        out
    }

    pub fn signs(&self) -> [i8; 4] {
        self.0
    }

    /// Every sign flipped.
    pub fn negated(&self) -> Self {
        Self(self.0.map(|x| -x))
    }
}

/// `p = x1·a || x2·b || x3·a || x4·b`, `q = x1·c || x2·d || x3·c || x4·d`.
///
/// The result is a `(2, 4N, N)` Golay-ZCZ pair.
pub fn build_zcz_pair(
    pair: &GolayPair,
    mate: &GolayPair,
    signs: SignQuadruple,
) -> Result<(PhaseSequence, PhaseSequence)> {
    if pair.len() != mate.len() {
        return Err(Error::LengthMismatch(pair.len(), mate.len()));
    }
    if !mate_property(pair, mate)? {
        return Err(Error::Mate);
    }
    let [x1, x2, x3, x4] = signs.0;
    let blocks = |u: &PhaseSequence, v: &PhaseSequence| -> Result<PhaseSequence> {
        PhaseSequence::concat(&[
            u.scale_sign(x1)?,
            v.scale_sign(x2)?,
            u.scale_sign(x3)?,
            v.scale_sign(x4)?,
        ])
    };
    Ok((blocks(&pair.a, &pair.b)?, blocks(&mate.a, &mate.b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{pacf, pccf};

    fn bin(s: &[i8]) -> PhaseSequence {
        PhaseSequence::from_signs(s).unwrap()
    }

    fn quad(e: &[u32]) -> PhaseSequence {
        PhaseSequence::new(4, e.to_vec()).unwrap()
    }

    fn binary10() -> GolayPair {
        GolayPair::new(
            bin(&[1, 1, -1, 1, 1, 1, 1, 1, -1, -1]),
            bin(&[1, 1, -1, 1, -1, 1, -1, -1, 1, 1]),
        )
        .unwrap()
    }

    fn quad5() -> GolayPair {
        // a = (1, i, -i, -1, i), b = (1, 1, 1, i, -i)
        GolayPair::new(quad(&[0, 1, 3, 2, 1]), quad(&[0, 0, 0, 1, 3])).unwrap()
    }

    #[test]
    fn printed_pairs_are_gcps() {
        let p = binary10();
        assert!(verify_gcp(p.a(), p.b()).unwrap());
        let q = quad5();
        assert!(verify_gcp(q.a(), q.b()).unwrap());
        assert!(!verify_gcp(&bin(&[1, 1]), &bin(&[1, 1])).unwrap());
        assert_eq!(
            verify_gcp(&bin(&[1, 1]), &bin(&[1])),
            Err(Error::LengthMismatch(2, 1))
        );
        assert_eq!(
            GolayPair::new(bin(&[1, 1]), bin(&[1, 1])),
            Err(Error::NotComplementary)
        );
    }

    #[test]
    fn binary10_mate_entries() {
        let m = golay_mate(&binary10()).unwrap();
        assert_eq!(m.a(), &bin(&[1, 1, -1, -1, 1, -1, 1, -1, 1, 1]));
        assert_eq!(m.b(), &bin(&[1, 1, -1, -1, -1, -1, -1, 1, -1, -1]));
        assert!(mate_property(&binary10(), &m).unwrap());
    }

    #[test]
    fn mate_of_mate_is_gcp() {
        let mm = golay_mate(&golay_mate(&binary10()).unwrap()).unwrap();
        assert!(verify_gcp(mm.a(), mm.b()).unwrap());
    }

    #[test]
    fn quadriphase_mate() {
        let p = quad5();
        let m = golay_mate(&p).unwrap();
        assert!(verify_gcp(m.a(), m.b()).unwrap());
        assert!(mate_property(&p, &m).unwrap());
    }

    #[test]
    fn self_is_not_a_mate() {
        let p = binary10();
        assert!(!mate_property(&p, &p).unwrap());
    }

    #[test]
    fn unit_pair_and_negated_mate() {
        let p = GolayPair::unit();
        let m = GolayPair::new(bin(&[1]), bin(&[-1])).unwrap();
        assert!(mate_property(&p, &m).unwrap());
    }

    #[test]
    fn odd_modulus_has_no_mate() {
        let one = PhaseSequence::new(3, vec![0]).unwrap();
        let p = GolayPair::new(one.clone(), one).unwrap();
        assert_eq!(golay_mate(&p), Err(Error::OddModulus(3)));
    }

    #[test]
    fn sign_quadruples() {
        assert_eq!(SignQuadruple::all().len(), 8);
        assert_eq!(SignQuadruple::new(1, 1, 1, 1), Err(Error::SignCondition));
        assert_eq!(SignQuadruple::new(1, 2, 1, 1), Err(Error::InvalidSign));
        assert!(SignQuadruple::new(1, 1, 1, -1).is_ok());
    }

    #[test]
    fn zcz_pair_length40_profiles() {
        let pair = binary10();
        let mate = golay_mate(&pair).unwrap();
        let (p, q) =
            build_zcz_pair(&pair, &mate, SignQuadruple::new(1, 1, 1, -1).unwrap()).unwrap();
        assert_eq!(p.len(), 40);
        let mut rp = vec![40];
        rp.extend([0; 10]);
        rp.extend([
            -4, -8, 4, 8, -4, 0, 4, 0, 12, 0, 12, 0, 4, 0, -4, 8, 4, -8, -4,
        ]);
        rp.extend([0; 10]);
        let rq: Vec<i64> = rp
            .iter()
            .enumerate()
            .map(|(t, &v)| if t == 0 { v } else { -v })
            .collect();
        let mut rpq = vec![0; 11];
        rpq.extend([
            -4, -8, 4, 16, 4, 0, 4, -8, -4, 0, 4, -8, 12, 0, 12, 0, -4, 8, 4,
        ]);
        rpq.extend([0; 10]);
        assert_eq!(pacf(&p).real_integers().unwrap(), rp);
        assert_eq!(pacf(&q).real_integers().unwrap(), rq);
        assert_eq!(pccf(&p, &q).unwrap().real_integers().unwrap(), rpq);
    }

    #[test]
    fn zcz_pair_rejects_non_mate() {
        let pair = binary10();
        let s = SignQuadruple::new(1, 1, 1, -1).unwrap();
        assert_eq!(build_zcz_pair(&pair, &pair, s), Err(Error::Mate));
    }

    #[test]
    fn global_sign_flip_keeps_profiles() {
        let pair = binary10();
        let mate = golay_mate(&pair).unwrap();
        for s in SignQuadruple::all() {
            let (p, q) = build_zcz_pair(&pair, &mate, s).unwrap();
            let (p2, q2) = build_zcz_pair(&pair, &mate, s.negated()).unwrap();
            assert_eq!(pacf(&p), pacf(&p2));
            assert_eq!(pacf(&q), pacf(&q2));
            assert_eq!(pccf(&p, &q).unwrap(), pccf(&p2, &q2).unwrap());
        }
    }

    #[test]
    fn doubling_family_lengths() {
        let fam = GolayPair::unit().doubling_family(4).unwrap();
        let lens: Vec<_> = fam.iter().map(GolayPair::len).collect();
        assert_eq!(lens, vec![1, 2, 4, 8, 16]);
        for p in &fam {
            assert!(verify_gcp(p.a(), p.b()).unwrap());
            assert!(mate_property(p, &golay_mate(p).unwrap()).unwrap());
        }
    }
}
