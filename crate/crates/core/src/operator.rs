//! Banded difference operators `sum_l h_l(x) Sh_l` with polynomial bands,
//! where `Sh_l p = p(x+l)`, and exact recovery of such operators from a
//! finite stretch of an orthogonal family.
//!
//! Recovery sets up one homogeneous linear system over the rationals: the
//! unknowns are the band coefficients together with one eigenvalue per
//! fitted member, so `D q_n = lambda_n q_n` is linear in everything at
//! once. The identity operator always spans part of the nullspace; a
//! family is genuinely bispectral at radius `r` exactly when the
//! nullspace contains a vector using the outermost shifts.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::matrix::RatMatrix;
use crate::poly::Poly;
use crate::rat::{rat, Rat};
use crate::{Error, Result};

/// Difference operator with shifts `-r..=r` and polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandedDifferenceOperator {
    /// Band for shift `l` lives at index `l + r`. Length is `2r + 1`.
    bands: Vec<Poly>,
}

impl BandedDifferenceOperator {
    pub fn new(bands: Vec<Poly>) -> Result<Self> {
        if bands.len().is_multiple_of(2) || bands.is_empty() {
            return Err(Error::DegenerateParameter(format!(
                "band list must have odd length, got {}",
                bands.len()
            )));
        }
        Ok(BandedDifferenceOperator { bands })
    }

    pub fn identity() -> Self {
        BandedDifferenceOperator {
            bands: vec![Poly::one()],
        }
    }

    /// Largest shift magnitude.
    pub fn radius(&self) -> i64 {
        (self.bands.len() as i64 - 1) / 2
    }

    /// Band attached to shift `l`; zero outside the stored radius.
    pub fn band(&self, l: i64) -> Poly {
        let idx = l + self.radius();
        if idx < 0 || idx >= self.bands.len() as i64 {
            return Poly::zero();
        }
        self.bands[idx as usize].clone()
    }

    /// Pairs `(l, band)` over the stored radius.
    pub fn bands(&self) -> impl Iterator<Item = (i64, &Poly)> {
        let r = self.radius();
        self.bands.iter().enumerate().map(move |(i, p)| (i as i64 - r, p))
    }

    /// `sum_l h_l(x) p(x + l)`.
    pub fn apply(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (l, h) in self.bands() {
            if h.is_zero() {
                continue;
            }
            out += &(h * &p.shift(&rat(l)));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.bands.iter().all(Poly::is_zero)
    }

    /// True when a shift of the largest magnitude carries a nonzero band.
    pub fn uses_full_radius(&self) -> bool {
        let r = self.radius();
        r > 0 && (!self.band(r).is_zero() || !self.band(-r).is_zero())
    }

    /// True when the operator is a constant multiple of the identity.
    pub fn is_identity_multiple(&self) -> bool {
        self.bands()
            .all(|(l, h)| if l == 0 { h.deg_i() <= 0 } else { h.is_zero() })
    }
}

/// One nullspace direction: an operator together with its eigenvalue on
/// every fitted member, in the order the members were supplied.
#[derive(Clone, Debug)]
pub struct EigenCandidate {
    pub operator: BandedDifferenceOperator,
    pub lambdas: Vec<Rat>,
}

/// Basis of all radius-`r` eigenoperators fitted on a member stretch.
#[derive(Clone, Debug)]
pub struct OperatorSearch {
    radius: i64,
    band_degree: usize,
    indices: Vec<i64>,
    basis: Vec<EigenCandidate>,
}

impl OperatorSearch {
    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn band_degree(&self) -> usize {
        self.band_degree
    }

    /// Member indices the system was fitted on.
    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    pub fn basis(&self) -> &[EigenCandidate] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// First basis direction whose operator reaches the outermost shifts.
    pub fn nontrivial(&self) -> Option<&EigenCandidate> {
        self.basis.iter().find(|c| c.operator.uses_full_radius())
    }

    /// True when every solution is a constant multiple of the identity.
    pub fn identity_only(&self) -> bool {
        self.basis.iter().all(|c| c.operator.is_identity_multiple())
    }

    /// Interpolating polynomial through `(n, lambda_n)` for a candidate.
    pub fn eigenvalue_polynomial(&self, candidate: &EigenCandidate) -> Poly {
        let points: Vec<(Rat, Rat)> = self
            .indices
            .iter()
            .zip(candidate.lambdas.iter())
            .map(|(n, l)| (rat(*n), l.clone()))
            .collect();
        Poly::interpolate(&points)
    }
}

/// Exact eigenoperator search at shift radius `radius`, band degrees at
/// most `band_degree`, fitted on the given members. Returns the full
/// nullspace basis, scaled to primitive integer coordinate vectors.
pub fn find_operator(
    members: &[(i64, Poly)],
    radius: i64,
    band_degree: usize,
) -> Result<OperatorSearch> {
    if radius < 0 {
        return Err(Error::DegenerateParameter(format!(
            "shift radius must be nonnegative, got {radius}"
        )));
    }
    if members.is_empty() {
        return Err(Error::DegenerateParameter(
            "eigenoperator fit needs at least one member".into(),
        ));
    }
    let width = (2 * radius + 1) as usize;
    let band_cols = width * (band_degree + 1);
    let cols = band_cols + members.len();
    let rows: usize = members
        .iter()
        .map(|(_, q)| band_degree + q.deg_i().max(0) as usize + 1)
        .sum();
    let mut system = RatMatrix::zero(rows, cols);
    let mut row = 0;
    for (j, (_, q)) in members.iter().enumerate() {
        let shifts: Vec<Poly> = (-radius..=radius).map(|l| q.shift(&rat(l))).collect();
        let top = band_degree + q.deg_i().max(0) as usize;
        for k in 0..=top {
            // coefficient of x^k in  sum_l g_l(x) q(x+l) - lambda_j q(x)
            for (li, sh) in shifts.iter().enumerate() {
                for d in 0..=band_degree.min(k) {
                    let c = sh.coeff(k - d);
                    if !c.is_zero() {
                        system.set(row, li * (band_degree + 1) + d, c);
                    }
                }
            }
            let c = q.coeff(k);
            if !c.is_zero() {
                system.set(row, band_cols + j, -c);
            }
            row += 1;
        }
    }
    let basis = system
        .nullspace()
        .into_iter()
        .map(|v| {
            let bands: Vec<Poly> = (0..width)
                .map(|li| {
                    Poly::new(
                        (0..=band_degree)
                            .map(|d| Rat::from(v[li * (band_degree + 1) + d].clone()))
                            .collect(),
                    )
                })
                .collect();
            EigenCandidate {
                operator: BandedDifferenceOperator { bands },
                lambdas: (0..members.len())
                    .map(|j| Rat::from(v[band_cols + j].clone()))
                    .collect(),
            }
        })
        .collect();
    Ok(OperatorSearch {
        radius,
        band_degree,
        indices: members.iter().map(|(n, _)| *n).collect(),
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::meixner;
    use crate::krall_meixner::KrallMeixnerFamily;
    use crate::rat::rat_pq;
    use crate::sets::{FiniteSet, SetPair};

    fn p(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn apply_shifts_and_scales() {
        // x p(x+1) - p(x-1)
        let op = BandedDifferenceOperator::new(vec![p(&[-1]), Poly::zero(), p(&[0, 1])]).unwrap();
        assert_eq!(op.radius(), 1);
        let q = p(&[0, 1]); // x
        assert_eq!(op.apply(&q), p(&[1, 0, 1])); // x(x+1) - (x-1)
        assert!(op.uses_full_radius());
        assert!(!op.is_identity_multiple());
        assert!(BandedDifferenceOperator::identity().is_identity_multiple());
        assert!(BandedDifferenceOperator::new(vec![Poly::one(), Poly::zero()]).is_err());
    }

    #[test]
    fn recovers_classical_meixner_operator() {
        // the second order Meixner difference equation:
        //   a(x+c) p(x+1) - (x + a(x+c)) p(x) + x p(x-1) = (a-1) n p(x)
        let (a, c) = (rat_pq(1, 2), rat(3));
        let members: Vec<(i64, Poly)> = (0..=6)
            .map(|n| (n, meixner(n, &a, &c)))
            .collect();
        let search = find_operator(&members, 1, 1).unwrap();
        assert_eq!(search.dimension(), 2);
        let cand = search.nontrivial().unwrap();
        // the two outer bands are fixed up to one scale s:
        //   band(-1) = s x,  band(+1) = s a (x + c)
        let down = cand.operator.band(-1);
        assert!(down.coeff(0).is_zero());
        let s = down.coeff(1);
        assert!(!s.is_zero());
        let up = cand.operator.band(1);
        assert_eq!(up, Poly::new(vec![&(&a * &c) * &s, &a * &s]));
        let lam = search.eigenvalue_polynomial(cand);
        assert_eq!(lam.deg_i(), 1);
        assert_eq!(lam.coeff(1), &s * &(&a - &rat(1)));
        // eigen-relation holds beyond the fitted stretch
        for n in 7..=9 {
            let q = meixner(n, &a, &c);
            assert_eq!(
                cand.operator.apply(&q),
                q.scale(&lam.eval_i(n))
            );
        }
    }

    #[test]
    fn krall_family_needs_radius_three() {
        let fam = KrallMeixnerFamily::new(
            rat_pq(1, 2),
            -1,
            SetPair::new(FiniteSet::new(vec![1]), FiniteSet::new(vec![1])),
        )
        .unwrap();
        let members: Vec<(i64, Poly)> = (0..=8)
            .map(|n| (n, fam.poly(n).unwrap()))
            .collect();
        // at radius 1 nothing beyond the identity exists
        let narrow = find_operator(&members, 1, 4).unwrap();
        assert!(narrow.identity_only());
        // at the theorem radius a genuine operator appears
        let search = find_operator(&members, 3, 4).unwrap();
        assert_eq!(search.dimension(), 2);
        let cand = search.nontrivial().expect("no full-width operator found");
        for l in -3..=3 {
            assert_eq!(cand.operator.band(l).deg_i(), 3);
        }
        let lam = search.eigenvalue_polynomial(cand);
        assert_eq!(lam.deg_i(), 3);
        for n in 9..=10 {
            let q = fam.poly(n).unwrap();
            assert_eq!(cand.operator.apply(&q), q.scale(&lam.eval_i(n)));
        }
    }
}
