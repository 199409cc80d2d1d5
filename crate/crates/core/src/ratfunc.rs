//! Rational functions in one variable, kept reduced at all times.
//!
//! Invariants: numerator and denominator share no common factor, the
//! denominator is monic and nonzero. Operator coefficients and eigenfunction
//! identities are checked by exact arithmetic on these.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::{render_poly, Poly};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Build `num/den`, reducing by the gcd and making `den` monic.
    /// Panics when `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lc = den.leading();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The polynomial this reduces to; `None` when the denominator has
    /// positive degree.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_polynomial() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// Exact value at `x`; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Substitute `x + t` for `x`.
    pub fn shift(&self, t: &Rat) -> RatFunc {
        RatFunc::new(self.num.shift(t), self.den.shift(t))
    }

    pub fn recip(&self) -> RatFunc {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

/// Canonical rendering: `num` alone when the denominator is 1, otherwise
/// `(num)/(den)` with both sides in canonical polynomial form.
pub fn render_ratfunc(r: &RatFunc) -> String {
    if r.is_polynomial() {
        render_poly(&r.num)
    } else {
        alloc::format!("({})/({})", render_poly(&r.num), render_poly(&r.den))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ratfunc(self))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ratfunc(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use alloc::vec;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn reduction_and_monic_denominator() {
        // (x^2-1)/(2x-2) = (x+1)/2
        let r = RatFunc::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert!(r.is_polynomial());
        assert_eq!(r.to_poly().unwrap(), Poly::new(vec![rat(1) / rat(2), rat(1) / rat(2)]));
    }

    #[test]
    fn arithmetic_cancels() {
        let a = RatFunc::new(p(&[1]), p(&[0, 1])); // 1/x
        let b = RatFunc::new(p(&[0, 1]), p(&[1])); // x
        let prod = &a * &b;
        assert_eq!(prod, RatFunc::one());
        let s = &a + &a;
        assert_eq!(s, RatFunc::new(p(&[2]), p(&[0, 1])));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn eval_and_poles() {
        let r = RatFunc::new(p(&[1]), p(&[-1, 1])); // 1/(x-1)
        assert_eq!(r.eval(&rat(3)), Some(rat(1) / rat(2)));
        assert_eq!(r.eval(&rat(1)), None);
    }

    #[test]
    fn shift_matches_pointwise() {
        let r = RatFunc::new(p(&[0, 1, 1]), p(&[2, 1])); // (x^2+x)/(x+2)
        let s = r.shift(&rat(1));
        for x in 0..6 {
            assert_eq!(s.eval(&rat(x)), r.eval(&rat(x + 1)));
        }
    }

    #[test]
    fn rendering() {
        let r = RatFunc::new(p(&[-2, 2]), p(&[1, 0, 1]));
        assert_eq!(render_ratfunc(&r), "(2*x - 2)/(x^2 + 1)");
        assert_eq!(render_ratfunc(&RatFunc::from_poly(p(&[1, 2]))), "2*x + 1");
    }
}
