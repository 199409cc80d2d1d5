//! Discrete measures on the nonnegative integers and their exact or
//! rigorously bounded inner products.
//!
//! Three mass shapes cover every measure the constructions produce: a
//! polynomial density times a geometric factor (closed-form summable), a
//! rational-function density times a geometric factor (truncated sums with
//! exact tail bounds), and a finite table on a bounded lattice.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::rat::{pow_i, rat, Rat};
use crate::ratfunc::RatFunc;
use crate::sets::FiniteSet;
use crate::{Error, Result};

/// Exact value of `sum_{x=0}^inf p(x) a^x` for `|a| < 1`, via the Newton
/// expansion `sum_i (Delta^i p)(0) a^i / (1-a)^{i+1}`.
pub fn geometric_poly_sum(p: &Poly, a: &Rat) -> Result<Rat> {
    if a.abs() >= Rat::one() {
        return Err(Error::DivergentSum);
    }
    let one_minus = Rat::one() - a;
    let mut total = Rat::zero();
    let mut diff = p.clone();
    let mut factor = one_minus.recip();
    while !diff.is_zero() {
        total += diff.eval_i(0) * &factor;
        factor *= a / &one_minus;
        diff = diff.forward_difference();
    }
    Ok(total)
}

/// Exact value of `sum_{x > x0} x^d a^x` for `0 <= a < 1`, by shifting the
/// index to zero and summing the resulting polynomial.
pub fn geometric_tail_sum(d: usize, a: &Rat, x0: i64) -> Result<Rat> {
    let shifted = Poly::new(alloc::vec![rat(x0 + 1), Rat::one()]).pow(d as u32);
    Ok(geometric_poly_sum(&shifted, a)? * pow_i(a, x0 + 1))
}

/// Where the measure lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Support {
    /// All nonnegative integers except the listed points.
    NatsExcept(FiniteSet),
    /// The lattice `{0..upper}` except the listed points.
    RangeExcept { upper: i64, excluded: FiniteSet },
}

impl Support {
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        match self {
            Support::NatsExcept(ex) => !ex.contains(x),
            Support::RangeExcept { upper, excluded } => x <= *upper && !excluded.contains(x),
        }
    }

    pub fn excluded(&self) -> &FiniteSet {
        match self {
            Support::NatsExcept(ex) => ex,
            Support::RangeExcept { excluded, .. } => excluded,
        }
    }
}

/// Closed-form mass descriptor.
#[derive(Clone, Debug)]
pub enum MassForm {
    /// `density(x) * base^x`.
    PolyGeometric { density: Poly, base: Rat },
    /// `density(x) * base^x` with a rational-function density.
    RatioGeometric { density: RatFunc, base: Rat },
    /// Mass at `x` is `table[x]`, zero beyond the table.
    Table(Vec<Rat>),
}

/// Exact bound on the truncated remainder of an infinite sum: the true
/// value differs from the reported partial sum by at most `bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct TailBound {
    pub x0: i64,
    pub bound: Rat,
}

#[derive(Clone, Debug)]
pub struct DiscreteMeasure {
    support: Support,
    mass: MassForm,
}

impl DiscreteMeasure {
    /// Measure with mass `density(x) base^x` on the naturals minus `excluded`.
    pub fn poly_geometric(density: Poly, base: Rat, excluded: FiniteSet) -> Result<Self> {
        if base.abs() >= Rat::one() || base.is_zero() {
            return Err(Error::DivergentSum);
        }
        Ok(DiscreteMeasure {
            support: Support::NatsExcept(excluded),
            mass: MassForm::PolyGeometric { density, base },
        })
    }

    /// Measure with mass `density(x) base^x`, a rational density, on the
    /// naturals minus `excluded`. The density must be finite at every
    /// support point; this is checked lazily at evaluation.
    pub fn ratio_geometric(density: RatFunc, base: Rat, excluded: FiniteSet) -> Result<Self> {
        if base.abs() >= Rat::one() || base.is_zero() {
            return Err(Error::DivergentSum);
        }
        Ok(DiscreteMeasure {
            support: Support::NatsExcept(excluded),
            mass: MassForm::RatioGeometric { density, base },
        })
    }

    /// Finite measure given by a mass table on `{0..table.len()-1}` minus
    /// `excluded`.
    pub fn finite_table(table: Vec<Rat>, excluded: FiniteSet) -> Self {
        let upper = table.len() as i64 - 1;
        DiscreteMeasure {
            support: Support::RangeExcept { upper, excluded },
            mass: MassForm::Table(table),
        }
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn mass_form(&self) -> &MassForm {
        &self.mass
    }

    /// Mass at the point `x`: zero off the support, the closed form on it.
    pub fn mass_at(&self, x: i64) -> Result<Rat> {
        if !self.support.contains(x) {
            return Ok(Rat::zero());
        }
        self.formula_at(x)
    }

    /// The mass formula evaluated at `x` regardless of support membership.
    fn formula_at(&self, x: i64) -> Result<Rat> {
        match &self.mass {
            MassForm::PolyGeometric { density, base } => {
                Ok(density.eval_i(x) * pow_i(base, x))
            }
            MassForm::RatioGeometric { density, base } => density
                .eval(&rat(x))
                .map(|v| v * pow_i(base, x))
                .ok_or_else(|| {
                    Error::InvalidWeight(alloc::format!("density has a pole at x = {x}"))
                }),
            MassForm::Table(table) => Ok(table
                .get(x as usize)
                .cloned()
                .unwrap_or_else(Rat::zero)),
        }
    }

    /// Exact `sum p(x) q(x) dmu(x)` when the mass admits a closed-form sum:
    /// polynomial-geometric masses (full geometric sum minus the excluded
    /// points) and finite tables. Rational-geometric masses must go through
    /// `inner_product_bounded`.
    pub fn inner_product_exact(&self, p: &Poly, q: &Poly) -> Result<Rat> {
        let pq = p * q;
        match (&self.mass, &self.support) {
            (MassForm::PolyGeometric { density, base }, Support::NatsExcept(excluded)) => {
                let full = geometric_poly_sum(&(&pq * density), base)?;
                let mut correction = Rat::zero();
                for x in excluded.iter() {
                    if x >= 0 {
                        correction += pq.eval_i(x) * density.eval_i(x) * pow_i(base, x);
                    }
                }
                Ok(full - correction)
            }
            (MassForm::Table(table), Support::RangeExcept { excluded, .. }) => {
                let mut total = Rat::zero();
                for (x, m) in table.iter().enumerate() {
                    let x = x as i64;
                    if !excluded.contains(x) {
                        total += pq.eval_i(x) * m;
                    }
                }
                Ok(total)
            }
            _ => Err(Error::WrongEntryPoint(
                "mass has no closed-form sum; use inner_product_bounded".into(),
            )),
        }
    }

    /// Smallest truncation point accepted by `inner_product_bounded`: past
    /// every support gap and far enough out that the denominator is at
    /// least half its leading term.
    pub fn min_truncation(&self) -> i64 {
        let den_margin = match &self.mass {
            MassForm::RatioGeometric { density, .. } => {
                let den = density.den();
                let mut s = Rat::zero();
                for c in &den.coeffs()[..den.coeffs().len().saturating_sub(1)] {
                    s += c.abs();
                }
                let two_s = rat(2) * s;
                let mut m = 1i64;
                while rat(m) < two_s {
                    m += 1;
                }
                m
            }
            _ => 1,
        };
        den_margin.max(self.support.excluded().max() + 1).max(1)
    }

    /// Truncated `sum_{x <= x0} p q dmu` plus an exact bound on the
    /// remainder. For mass `num/den * a^x` (den monic, degree e) the bound
    /// uses `|num p q|(x) <= S x^g` for `x >= 1` with `S` the coefficient
    /// norm and `g` the degree, and `den(x) >= x^e / 2` for
    /// `x >= 2 sum|den coeffs|`, giving remainder `<= 2 S sum_{x>x0} x^{g-e} a^x`.
    pub fn inner_product_bounded(&self, p: &Poly, q: &Poly, x0: i64) -> Result<(Rat, TailBound)> {
        let (density, base) = match &self.mass {
            MassForm::RatioGeometric { density, base } => (density.clone(), base.clone()),
            MassForm::PolyGeometric { density, base } => {
                (RatFunc::from_poly(density.clone()), base.clone())
            }
            MassForm::Table(_) => {
                return Err(Error::WrongEntryPoint(
                    "finite table sums are exact; use inner_product_exact".into(),
                ))
            }
        };
        if base.is_negative() {
            return Err(Error::InvalidTruncation(
                "tail bounds require a positive geometric ratio".into(),
            ));
        }
        if x0 < self.min_truncation() {
            return Err(Error::InvalidTruncation(alloc::format!(
                "truncation {x0} below the safe point {}",
                self.min_truncation()
            )));
        }
        let mut partial = Rat::zero();
        let pq = p * q;
        for x in 0..=x0 {
            if self.support.contains(x) {
                let d = density.eval(&rat(x)).ok_or_else(|| {
                    Error::InvalidWeight(alloc::format!("density has a pole at x = {x}"))
                })?;
                partial += pq.eval_i(x) * d * pow_i(&base, x);
            }
        }
        let top = &pq * density.num();
        let bound = if top.is_zero() {
            Rat::zero()
        } else {
            let g = top.degree().unwrap_or(0);
            let e = density.den().degree().unwrap_or(0);
            let growth = g.saturating_sub(e);
            rat(2) * top.coeff_abs_sum() * geometric_tail_sum(growth, &base, x0)?
        };
        Ok((partial, TailBound { x0, bound }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_pq;
    use alloc::vec;

    #[test]
    fn geometric_sum_base_cases() {
        let half = rat_pq(1, 2);
        assert_eq!(geometric_poly_sum(&Poly::one(), &half).unwrap(), rat(2));
        let x2 = Poly::monomial(Rat::one(), 2);
        assert_eq!(geometric_poly_sum(&x2, &half).unwrap(), rat(6));
        assert!(geometric_poly_sum(&Poly::one(), &rat(1)).is_err());
    }

    #[test]
    fn geometric_sum_matches_partial_sums() {
        let third = rat_pq(1, 3);
        let p = Poly::new(vec![rat(0), rat(-1), rat(0), rat(1)]);
        let closed = geometric_poly_sum(&p, &third).unwrap();
        let mut partial = Rat::zero();
        for x in 0..200 {
            partial += p.eval_i(x) * pow_i(&third, x);
        }
        // remaining terms are below the coarse tail bound at 200
        let tail = rat(2) * p.coeff_abs_sum() * geometric_tail_sum(3, &third, 199).unwrap();
        assert!((closed - partial).abs() <= tail);
    }

    #[test]
    fn geometric_sum_shift_identity() {
        // sum p(x) a^x = p(0) + a sum p(x+1) a^x
        let a = rat_pq(2, 7);
        let p = Poly::new(vec![rat(3), rat(-2), rat(5)]);
        let lhs = geometric_poly_sum(&p, &a).unwrap();
        let rhs = p.eval_i(0) + &a * geometric_poly_sum(&p.shift(&Rat::one()), &a).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn geometric_sum_is_linear() {
        let a = rat_pq(1, 5);
        let p = Poly::new(vec![rat(1), rat(4)]);
        let q = Poly::new(vec![rat(-2), rat(0), rat(3)]);
        let sum_pq = geometric_poly_sum(&(&p + &q), &a).unwrap();
        assert_eq!(
            sum_pq,
            geometric_poly_sum(&p, &a).unwrap() + geometric_poly_sum(&q, &a).unwrap()
        );
    }

    #[test]
    fn excluded_point_subtracts_mass() {
        // mass (1/2)^x on naturals minus {1}: total mass 2 - 1/2 = 3/2
        let mu = DiscreteMeasure::poly_geometric(
            Poly::one(),
            rat_pq(1, 2),
            FiniteSet::new(vec![1]),
        )
        .unwrap();
        assert_eq!(
            mu.inner_product_exact(&Poly::one(), &Poly::one()).unwrap(),
            rat_pq(3, 2)
        );
        assert_eq!(mu.mass_at(1).unwrap(), rat(0));
        assert_eq!(mu.mass_at(2).unwrap(), rat_pq(1, 4));
    }

    #[test]
    fn finite_table_inner_product() {
        let mu = DiscreteMeasure::finite_table(
            vec![rat(3), rat(4), rat(3)],
            FiniteSet::empty(),
        );
        let x = Poly::x();
        // sum x * mass = 0*3 + 1*4 + 2*3 = 10
        assert_eq!(mu.inner_product_exact(&x, &Poly::one()).unwrap(), rat(10));
        // naive pointwise agreement
        let mut naive = Rat::zero();
        for pt in 0..3 {
            naive += x.eval_i(pt) * mu.mass_at(pt).unwrap();
        }
        assert_eq!(naive, rat(10));
    }

    #[test]
    fn bounded_sum_with_quadratic_denominator() {
        // mass (1/2)^x / (x^2+1): tail bound at x0=40 is within 2 * (1/2)^40
        let den = Poly::new(vec![rat(1), rat(0), rat(1)]);
        let mu = DiscreteMeasure::ratio_geometric(
            RatFunc::new(Poly::one(), den),
            rat_pq(1, 2),
            FiniteSet::empty(),
        )
        .unwrap();
        let (partial, tail) = mu
            .inner_product_bounded(&Poly::one(), &Poly::one(), 40)
            .unwrap();
        assert!(partial > rat(1));
        assert!(tail.bound <= rat(2) * pow_i(&rat_pq(1, 2), 40));
        // moving the truncation out stays within the earlier bound
        let (partial50, tail50) = mu
            .inner_product_bounded(&Poly::one(), &Poly::one(), 50)
            .unwrap();
        assert!((partial50.clone() - partial).abs() <= tail.bound);
        assert!(tail50.bound <= tail.bound);
    }

    #[test]
    fn bounded_sum_of_zero_is_zero() {
        let den = Poly::new(vec![rat(1), rat(0), rat(1)]);
        let mu = DiscreteMeasure::ratio_geometric(
            RatFunc::new(Poly::one(), den),
            rat_pq(1, 2),
            FiniteSet::empty(),
        )
        .unwrap();
        let (partial, tail) = mu
            .inner_product_bounded(&Poly::zero(), &Poly::one(), 10)
            .unwrap();
        assert!(partial.is_zero());
        assert!(tail.bound.is_zero());
    }

    #[test]
    fn truncation_below_safe_point_rejected() {
        // denominator x^2 - 30x + 1 needs x0 >= 2*31
        let den = Poly::new(vec![rat(1), rat(-30), rat(1)]);
        let mu = DiscreteMeasure::ratio_geometric(
            RatFunc::new(Poly::one(), den),
            rat_pq(1, 2),
            FiniteSet::empty(),
        )
        .unwrap();
        assert!(mu.min_truncation() >= 62);
        assert!(mu
            .inner_product_bounded(&Poly::one(), &Poly::one(), 40)
            .is_err());
    }

    #[test]
    fn exact_entry_point_rejects_rational_masses() {
        let den = Poly::new(vec![rat(1), rat(0), rat(1)]);
        let mu = DiscreteMeasure::ratio_geometric(
            RatFunc::new(Poly::one(), den),
            rat_pq(1, 2),
            FiniteSet::empty(),
        )
        .unwrap();
        assert!(matches!(
            mu.inner_product_exact(&Poly::one(), &Poly::one()),
            Err(Error::WrongEntryPoint(_))
        ));
    }

    #[test]
    fn symmetry_of_inner_product() {
        let mu = DiscreteMeasure::poly_geometric(
            Poly::new(vec![rat(1), rat(1)]),
            rat_pq(1, 3),
            FiniteSet::new(vec![2]),
        )
        .unwrap();
        let p = Poly::new(vec![rat(1), rat(2)]);
        let q = Poly::new(vec![rat(-1), rat(0), rat(1)]);
        assert_eq!(
            mu.inner_product_exact(&p, &q).unwrap(),
            mu.inner_product_exact(&q, &p).unwrap()
        );
    }
}
