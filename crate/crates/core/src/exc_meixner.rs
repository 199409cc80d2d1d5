//! Exceptional Meixner families: determinantal members indexed by a gapped
//! degree set, eigenfunctions of a second order difference operator with
//! rational coefficients.
//!
//! The member of degree `n` is a `(k+1) x (k+1)` determinant bordering the
//! Casorati matrix of the pair with a sliding classical row of degree
//! `n - u`, where `u` is the pair's degree offset.  Degrees `u + f` for `f`
//! in the first set are genuinely missing: the determinant there loses
//! rank and no family member exists.

use alloc::format;
use alloc::vec;

use num_traits::{One, Zero};

use crate::classical::meixner;
use crate::matrix::PolyMatrix;
use crate::measure::DiscreteMeasure;
use crate::poly::Poly;
use crate::rat::{factorial, pow_i, rat, Rat};
use crate::ratfunc::RatFunc;
use crate::sets::{
    admissible, covering_holds, measure_nodes, vandermonde, AdmissibilityReport, FiniteSet,
    SetPair,
};
use crate::{Error, Result};

/// Degree-`n` member as the bordered Casorati determinant: the top row
/// slides the degree-`(n - u)` classical polynomial across the columns
/// `x, x+1, ..., x+k`, the remaining rows repeat the pair's rows one column
/// wider than in the plain determinant.
pub fn exc_meixner_poly(pair: &SetPair, a: &Rat, c_hat: &Rat, n: i64) -> Poly {
    let k = pair.k();
    let k1 = pair.k1();
    let u = pair.u();
    let inv_a = Rat::one() / a;
    PolyMatrix::from_fn(k + 1, |i, j| {
        let col = rat(j as i64);
        if i == 0 {
            meixner(n - u, a, c_hat).shift(&col)
        } else if i - 1 < k1 {
            meixner(pair.f1.elems()[i - 1], a, c_hat).shift(&col)
        } else {
            let f = pair.f2.elems()[i - 1 - k1];
            meixner(f, &inv_a, c_hat).shift(&col).scale(&pow_i(a, -(j as i64)))
        }
    })
    .det()
    .expect("square by construction")
}

/// Column-combined form of the same determinant: entry `(i, j)` drops the
/// shift in `x` and instead raises the parameter by `j`, lowering the
/// degree index on the rows from the first set.  Equal to
/// [`exc_meixner_poly`] coefficient for coefficient.
pub fn exc_meixner_poly_alt(pair: &SetPair, a: &Rat, c_hat: &Rat, n: i64) -> Poly {
    let k = pair.k();
    let k1 = pair.k1();
    let u = pair.u();
    let inv_a = Rat::one() / a;
    let ratio = (Rat::one() - a) / a;
    PolyMatrix::from_fn(k + 1, |i, j| {
        let cj = c_hat + rat(j as i64);
        let ji = j as i64;
        if i == 0 {
            meixner(n - u - ji, a, &cj)
        } else if i - 1 < k1 {
            meixner(pair.f1.elems()[i - 1] - ji, a, &cj)
        } else {
            let f = pair.f2.elems()[i - 1 - k1];
            meixner(f, &inv_a, &cj).scale(&pow_i(&ratio, ji))
        }
    })
    .det()
    .expect("square by construction")
}

/// Closed form for the leading coefficient of the degree-`n` member, valid
/// whenever `n` lies in the family's degree set.
pub fn exc_meixner_leading(pair: &SetPair, a: &Rat, c_hat: &Rat, n: i64) -> Rat {
    let _ = c_hat;
    let k1 = pair.k1() as i64;
    let k2 = pair.k2() as i64;
    let u = pair.u();
    let mut num = pow_i(&(a - &Rat::one()), k2 * (k1 + 1))
        * vandermonde(&pair.f1)
        * vandermonde(&pair.f2);
    for f in pair.f1.iter() {
        num *= rat(f - n + u);
    }
    let mut den = pow_i(a, k1 * k2 + k2 * (k2 + 1) / 2) * factorial((n - u) as u64);
    for f in pair.f1.iter().chain(pair.f2.iter()) {
        den *= factorial(f as u64);
    }
    let sign = if (k2 * (k1 + 1)) % 2 == 0 { rat(1) } else { rat(-1) };
    sign * num / den
}

/// Casorati-style determinant with the last column offset skipped ahead by
/// one: columns evaluate at `x, x+1, ..., x+k-2, x+k`, second-set rows
/// divided by the matching power of `a`.  Feeds the middle coefficient of
/// the difference operator.  An empty pair contributes no correction, so
/// the value is zero.
pub fn lambda_meixner(pair: &SetPair, a: &Rat, c: &Rat) -> Poly {
    let k = pair.k();
    if k == 0 {
        return Poly::zero();
    }
    let k1 = pair.k1();
    let inv_a = Rat::one() / a;
    // offsets 0..k-2 then k
    let offset = |j: usize| -> i64 {
        if j + 1 < k {
            j as i64
        } else {
            k as i64
        }
    };
    PolyMatrix::from_fn(k, |i, j| {
        let col = rat(offset(j));
        if i < k1 {
            meixner(pair.f1.elems()[i], a, c).shift(&col)
        } else {
            let f = pair.f2.elems()[i - k1];
            meixner(f, &inv_a, c).shift(&col).scale(&pow_i(a, -offset(j)))
        }
    })
    .det()
    .expect("square by construction")
}

/// Difference operator coefficients `(h_{-1}, h_0, h_1)` for any pair and
/// real parameter; the degree-set members are eigenfunctions with
/// eigenvalue `n` regardless of covering or positivity.
pub fn exc_meixner_operator(pair: &SetPair, a: &Rat, c_hat: &Rat) -> [RatFunc; 3] {
    let k = rat(pair.k() as i64);
    let c = c_hat.clone();
    let u = rat(pair.u());
    let am1 = a - &Rat::one();
    let om = crate::krall_meixner::omega_meixner(pair, a, c_hat);
    let lambda = lambda_meixner(pair, a, c_hat);
    let om_up = om.shift(&rat(1));
    let x = Poly::x();

    let h_minus = RatFunc::new(&x * &om_up, om.scale(&am1));
    let h_plus = RatFunc::new(
        &(&x + &Poly::constant(&c + &k)).scale(a) * &om,
        om_up.scale(&am1),
    );
    // middle term: -((1+a)(x+k) + a c) / (a-1) + u, plus the forward
    // difference of a (x + c + k - 1) Lambda(x) / ((a - 1) Omega(x))
    let linear = RatFunc::from_poly(Poly::new(vec![
        -((Rat::one() + a) * &k + a * &c) / &am1 + &u,
        -(Rat::one() + a) / &am1,
    ]));
    let g = RatFunc::new(
        &(&x + &Poly::constant(&c + &k - rat(1))).scale(a) * &lambda,
        om.scale(&am1),
    );
    let h_zero = &(&linear + &g.shift(&rat(1))) - &g;
    [h_minus, h_zero, h_plus]
}

/// Apply a three-term difference operator at unit steps.
pub fn apply_difference(h: &[RatFunc; 3], p: &Poly) -> RatFunc {
    let down = RatFunc::from_poly(p.shift(&rat(-1)));
    let here = RatFunc::from_poly(p.clone());
    let up = RatFunc::from_poly(p.shift(&rat(1)));
    &(&(&h[0] * &down) + &(&h[1] * &here)) + &(&h[2] * &up)
}

/// Exceptional family for an admissible-shape instance: `0 < a < 1`, a
/// negative integer parameter, and a covering pair of positive integers.
#[derive(Clone, Debug)]
pub struct ExceptionalMeixnerFamily {
    a: Rat,
    c_hat: i64,
    pair: SetPair,
    nodes: FiniteSet,
    omega: Poly,
}

impl ExceptionalMeixnerFamily {
    pub fn new(a: Rat, c_hat: i64, pair: SetPair) -> Result<Self> {
        if a <= Rat::zero() || a >= Rat::one() {
            return Err(Error::DegenerateParameter(
                "geometric ratio must satisfy 0 < a < 1".into(),
            ));
        }
        if c_hat > -1 {
            return Err(Error::DegenerateParameter(format!(
                "parameter shift must be a negative integer, got {c_hat}"
            )));
        }
        if !pair.zero_free() || pair.f1.min() < 0 || pair.f2.min() < 0 {
            return Err(Error::DegenerateParameter(format!(
                "exclusion sets must consist of positive integers, got {pair}; \
                 normalize the pair first"
            )));
        }
        if !covering_holds(c_hat, &pair) {
            return Err(Error::DegenerateParameter(format!(
                "pair {pair} does not cover 0..{} jointly with its reflection",
                -c_hat
            )));
        }
        let omega = crate::krall_meixner::omega_meixner(&pair, &a, &rat(c_hat));
        let nodes = measure_nodes(c_hat, &pair);
        Ok(ExceptionalMeixnerFamily { a, c_hat, pair, nodes, omega })
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn c_hat(&self) -> i64 {
        self.c_hat
    }

    pub fn pair(&self) -> &SetPair {
        &self.pair
    }

    pub fn omega(&self) -> &Poly {
        &self.omega
    }

    /// Degree offset: members have degrees `u, u+1, ...` minus the gaps.
    pub fn u(&self) -> i64 {
        self.pair.u()
    }

    pub fn sigma_contains(&self, n: i64) -> bool {
        self.pair.sigma_contains(n)
    }

    pub fn positivity(&self) -> AdmissibilityReport {
        admissible(self.c_hat, &self.pair)
    }

    /// Member of degree `n`; the degree set has gaps, and indices off the
    /// set are rejected rather than returning a degenerate determinant.
    pub fn poly(&self, n: i64) -> Result<Poly> {
        if !self.pair.sigma_contains(n) {
            return Err(Error::IndexOutsideSigma { n });
        }
        let p = exc_meixner_poly(&self.pair, &self.a, &rat(self.c_hat), n);
        if p.deg_i() != n {
            return Err(Error::Degeneracy(format!(
                "determinant for degree {n} collapsed to degree {}",
                p.deg_i()
            )));
        }
        Ok(p)
    }

    /// The three coefficients `(h_{-1}, h_0, h_1)` of the second order
    /// difference operator having the members as eigenfunctions with
    /// eigenvalue `n`.
    pub fn operator(&self) -> [RatFunc; 3] {
        exc_meixner_operator(&self.pair, &self.a, &rat(self.c_hat))
    }

    /// Apply the difference operator to a polynomial; exceptional members
    /// come back as polynomial multiples of themselves.
    pub fn apply_operator(&self, p: &Poly) -> RatFunc {
        apply_difference(&self.operator(), p)
    }

    /// Orthogonality weight: mass `a^x (x+1)_(c+k-1) / (Omega(x) Omega(x+1))`
    /// on the nonnegative integers.  The rising factorial is the usual
    /// gamma-over-factorial weight, polynomial because the covering forces
    /// `c + k >= 1`.
    pub fn measure(&self) -> Result<DiscreteMeasure> {
        let m = self.c_hat + self.pair.k() as i64;
        debug_assert!(m >= 1, "covering forces c + k >= 1");
        let num = Poly::new(vec![Rat::one(), Rat::one()]).pochhammer((m - 1) as u64);
        let den = &self.omega * &self.omega.shift(&rat(1));
        DiscreteMeasure::ratio_geometric(RatFunc::new(num, den), self.a.clone(), FiniteSet::empty())
    }

    /// Closed form of the squared norm of the degree-`n` member:
    /// `a^(n-u+k1-2k) / (1-a)^(c+2n-2u-k) * prod_{h in nodes} (n - u - h)`.
    pub fn norm_closed(&self, n: i64) -> Result<Rat> {
        if !self.pair.sigma_contains(n) {
            return Err(Error::IndexOutsideSigma { n });
        }
        let k1 = self.pair.k1() as i64;
        let k = self.pair.k() as i64;
        let u = self.pair.u();
        let mut v = pow_i(&self.a, n - u + k1 - 2 * k)
            * pow_i(&(Rat::one() - &self.a), -(self.c_hat + 2 * n - 2 * u - k));
        for h in self.nodes.iter() {
            v *= rat(n - u - h);
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_pq, rat_to_f64};
    use num_traits::Signed;
    use crate::sets::collapse_target;

    fn fs(v: &[i64]) -> FiniteSet {
        FiniteSet::new(v.to_vec())
    }

    fn pair(f1: &[i64], f2: &[i64]) -> SetPair {
        SetPair::new(fs(f1), fs(f2))
    }

    #[test]
    fn bordered_and_column_forms_agree() {
        for (p, c) in [
            (pair(&[1], &[1]), rat(-1)),
            (pair(&[1, 2], &[]), rat_pq(3, 7)),
            (pair(&[2], &[1, 3]), rat(-2)),
            (pair(&[1, 3], &[2]), rat_pq(-5, 2)),
        ] {
            let a = rat_pq(2, 5);
            for n in p.sigma_prefix(4) {
                assert_eq!(
                    exc_meixner_poly(&p, &a, &c, n),
                    exc_meixner_poly_alt(&p, &a, &c, n),
                    "pair {p}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn leading_coefficient_closed_form() {
        let a = rat_pq(1, 2);
        for (p, c) in [
            (pair(&[1], &[1]), rat(-1)),
            (pair(&[1, 2], &[]), rat_pq(3, 7)),
            (pair(&[2], &[1, 3]), rat(-2)),
        ] {
            for n in p.sigma_prefix(5) {
                let m = exc_meixner_poly(&p, &a, &c, n);
                assert_eq!(m.deg_i(), n, "pair {p}, n = {n}");
                assert_eq!(
                    m.leading(),
                    exc_meixner_leading(&p, &a, &c, n),
                    "pair {p}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn members_are_operator_eigenfunctions() {
        let a = rat_pq(1, 2);
        let fam = ExceptionalMeixnerFamily::new(a, -1, pair(&[1], &[1])).unwrap();
        let u = fam.u();
        for n in fam.pair().sigma_to(u + 8) {
            let m = fam.poly(n).unwrap();
            assert_eq!(
                fam.apply_operator(&m),
                RatFunc::from_poly(m.scale(&rat(n))),
                "n = {n}"
            );
        }
    }

    #[test]
    fn operator_works_without_covering() {
        // generic real parameter, pair with no covering structure
        let a = rat_pq(1, 2);
        let p = pair(&[1, 2], &[]);
        let c = rat_pq(3, 7);
        let h = exc_meixner_operator(&p, &a, &c);
        for n in p.sigma_prefix(4) {
            let m = exc_meixner_poly(&p, &a, &c, n);
            assert_eq!(apply_difference(&h, &m), RatFunc::from_poly(m.scale(&rat(n))));
        }
    }

    #[test]
    fn empty_pair_reduces_to_classical() {
        let a = rat_pq(1, 2);
        let empty = pair(&[], &[]);
        let c = rat_pq(5, 2);
        let h = exc_meixner_operator(&empty, &a, &c);
        for n in 0..5 {
            let m = exc_meixner_poly(&empty, &a, &c, n);
            assert_eq!(m, meixner(n, &a, &c));
            assert_eq!(apply_difference(&h, &m), RatFunc::from_poly(m.scale(&rat(n))));
        }
    }

    #[test]
    fn gap_indices_are_rejected() {
        let fam = ExceptionalMeixnerFamily::new(rat_pq(1, 2), -1, pair(&[1], &[1])).unwrap();
        // u = 1; degree 2 = u + 1 is the gap, degrees below u never exist
        assert_eq!(fam.u(), 1);
        assert!(matches!(fam.poly(2), Err(Error::IndexOutsideSigma { n: 2 })));
        assert!(matches!(fam.poly(0), Err(Error::IndexOutsideSigma { n: 0 })));
        assert!(fam.norm_closed(2).is_err());
    }

    #[test]
    fn norms_match_closed_form_within_tail() {
        let fam = ExceptionalMeixnerFamily::new(rat_pq(1, 2), -1, pair(&[1], &[1])).unwrap();
        assert!(fam.positivity().admissible);
        let mu = fam.measure().unwrap();
        for n in [1i64, 3, 4] {
            let m = fam.poly(n).unwrap();
            let (val, tail) = mu.inner_product_bounded(&m, &m, 80).unwrap();
            let closed = fam.norm_closed(n).unwrap();
            // closed form here is 2^(n-1)
            assert_eq!(closed, pow_i(&rat(2), n - 1));
            let err = (&val - &closed).abs();
            assert!(err <= tail.bound, "n = {n}: {} > {}", rat_to_f64(&err).unwrap(), rat_to_f64(&tail.bound).unwrap());
        }
    }

    #[test]
    fn members_are_orthogonal_within_tail() {
        let fam = ExceptionalMeixnerFamily::new(rat_pq(1, 2), -1, pair(&[1], &[1])).unwrap();
        let mu = fam.measure().unwrap();
        for (m, n) in [(1i64, 3i64), (1, 4), (3, 4)] {
            let pm = fam.poly(m).unwrap();
            let pn = fam.poly(n).unwrap();
            let (val, tail) = mu.inner_product_bounded(&pm, &pn, 80).unwrap();
            assert!(val.abs() <= tail.bound, "({m}, {n})");
        }
    }

    #[test]
    fn zero_bearing_pairs_collapse_proportionally() {
        let a = rat_pq(1, 2);
        for (c_hat, p, want_kappa) in [
            (-2i64, pair(&[0, 2], &[1]), rat(-1)),
            (-1, pair(&[0, 1, 3], &[2]), rat(1)),
        ] {
            let (d, target) = collapse_target(c_hat, &p);
            assert_eq!(p.sigma_prefix(4), target.sigma_prefix(4));
            for n in p.sigma_prefix(4) {
                let lhs = exc_meixner_poly(&p, &a, &rat(c_hat), n);
                let rhs = exc_meixner_poly(&target, &a, &rat(d), n);
                let kappa = lhs.leading() / rhs.leading();
                assert_eq!(lhs, rhs.scale(&kappa), "pair {p}, n = {n}");
                // the proportionality constant happens not to move with n here
                assert_eq!(kappa, want_kappa, "pair {p}, n = {n}");
            }
        }
    }
}
