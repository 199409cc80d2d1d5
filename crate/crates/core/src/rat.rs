//! Exact rational scalars and the small combinatorial kernels everything
//! else leans on.
//!
//! * `Rat` is a `BigRational`: always in lowest terms, denominator positive.
//! * rising/falling factorials and generalized binomials for rational
//!   arguments,
//! * the sign of Gamma at rational non-pole points,
//! * `"p/q"` parsing and formatting used by the wire formats.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact scalar: arbitrary-precision rational, lowest terms, positive
/// denominator (both enforced by the underlying representation).
pub type Rat = BigRational;

/// `n` as a `Rat`.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` as a `Rat`. Panics on `q == 0`.
pub fn rat_pq(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `n!` as a `Rat`.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    BigRational::from_integer(acc)
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`; empty product for `k = 0`.
pub fn pochhammer(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x + rat(i as i64);
    }
    acc
}

/// Falling factorial `x (x-1) ... (x-k+1)`.
pub fn falling(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x - rat(i as i64);
    }
    acc
}

/// Generalized binomial `C(x, k)` for rational `x` and integer `k >= 0`.
pub fn binom(x: &Rat, k: u64) -> Rat {
    falling(x, k) / factorial(k)
}

/// Integer power with negative exponents allowed. Panics on `0^negative`.
pub fn pow_i(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::Pow::pow(x.clone(), e as u64)
    } else {
        assert!(!x.is_zero(), "zero to a negative power");
        num_traits::pow::Pow::pow(x.clone(), (-e) as u64).recip()
    }
}

/// Sign of `Gamma(x)` for rational non-pole `x`: `+1` on `(0, inf)` and
/// `(-1)^k` on `(-k, -k+1)`. Errors at the poles `x = 0, -1, -2, ...`.
pub fn sign_gamma(x: &Rat) -> Result<i8, Error> {
    if x.is_integer() && !x.is_positive() {
        return Err(Error::DegenerateParameter(
            "Gamma pole at a nonpositive integer".into(),
        ));
    }
    if x.is_positive() {
        return Ok(1);
    }
    // x in (-k, -k+1) with k = ceil(-x)
    let k = (-x).ceil().to_integer();
    Ok(if (&k % BigInt::from(2)).is_zero() { 1 } else { -1 })
}

/// `Gamma(x + c) / Gamma(1 + frac(c))` as an exact rational, where
/// `c = eps - k` with integer `k` and `eps = c + k` in `(0, 1)`, and `x` is a
/// nonnegative integer. Both Gamma arguments stay off the poles because
/// `eps` is not an integer.
pub fn gamma_ratio_to_eps(c: &Rat, x: u64) -> Result<Rat, Error> {
    if c.is_integer() {
        return Err(Error::DegenerateParameter(
            "gamma_ratio_to_eps needs a non-integer offset".into(),
        ));
    }
    // Gamma(1 + eps) with eps = c - floor(c) - ... take base point 1 + frac
    // part of c; walk the recurrence Gamma(z+1) = z Gamma(z) between z = x + c
    // and z = 1 + eps.
    let eps = c - Rat::from_integer(c.floor().to_integer());
    let mut target = rat(x as i64) + c;
    let base = Rat::one() + &eps;
    let mut acc = Rat::one();
    while target > base {
        target -= Rat::one();
        acc *= &target;
    }
    while target < base {
        acc /= &target;
        target += Rat::one();
    }
    Ok(acc)
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        let mut s = x.numer().to_string();
        s.push('/');
        s.push_str(&x.denom().to_string());
        s
    }
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::InvalidSpec(alloc::format!("not a rational: {s:?}"));
    let mut parts = s.splitn(2, '/');
    let p = parts.next().ok_or_else(bad)?;
    let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
    match parts.next() {
        None => Ok(BigRational::from_integer(p)),
        Some(q) => {
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Exact `f64` conversion helper for diagnostics; `None` when out of range.
pub fn rat_to_f64(x: &Rat) -> Option<f64> {
    num_traits::ToPrimitive::to_f64(x)
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denominator_lcm(xs: &[Rat]) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        l = num_integer::lcm(l, x.denom().clone());
    }
    l
}

/// Greatest common divisor of a slice of integers; 0 for an empty slice.
pub fn bigint_gcd(xs: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in xs {
        g = num_integer::gcd(g, x.clone());
    }
    g
}

/// All rationals in a slice, scaled to a common integer vector and divided by
/// their gcd ("integer-primitive" scaling). Zero vectors stay zero.
pub fn integer_primitive(xs: &[Rat]) -> Vec<BigInt> {
    let l = denominator_lcm(xs);
    let ints: Vec<BigInt> = xs
        .iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect();
    let g = bigint_gcd(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_small() {
        // (3)_4 = 3*4*5*6
        assert_eq!(pochhammer(&rat(3), 4), rat(360));
        assert_eq!(pochhammer(&rat(-2), 3), rat(0));
        assert_eq!(pochhammer(&rat_pq(1, 2), 2), rat_pq(3, 4));
        assert_eq!(pochhammer(&rat(7), 0), rat(1));
    }

    #[test]
    fn binom_generalized() {
        assert_eq!(binom(&rat(5), 2), rat(10));
        // C(-1/2, 2) = (-1/2)(-3/2)/2 = 3/8
        assert_eq!(binom(&rat_pq(-1, 2), 2), rat_pq(3, 8));
        assert_eq!(binom(&rat(3), 0), rat(1));
        assert_eq!(binom(&rat(2), 5), rat(0));
    }

    #[test]
    fn gamma_sign_windows() {
        assert_eq!(sign_gamma(&rat_pq(1, 2)).unwrap(), 1);
        assert_eq!(sign_gamma(&rat_pq(-1, 2)).unwrap(), -1);
        assert_eq!(sign_gamma(&rat_pq(-3, 2)).unwrap(), 1);
        assert_eq!(sign_gamma(&rat_pq(-5, 2)).unwrap(), -1);
        assert!(sign_gamma(&rat(0)).is_err());
        assert!(sign_gamma(&rat(-3)).is_err());
    }

    #[test]
    fn gamma_ratio_recurrence() {
        // Gamma(x + c)/Gamma(1 + eps) satisfies r(x+1) = (x + c) r(x).
        let c = rat_pq(-3, 2); // eps = 1/2, k = 2
        for x in 0..6u64 {
            let r0 = gamma_ratio_to_eps(&c, x).unwrap();
            let r1 = gamma_ratio_to_eps(&c, x + 1).unwrap();
            assert_eq!(r1, r0 * (rat(x as i64) + &c));
        }
        // base point: x + c = 1 + eps  =>  ratio 1
        assert_eq!(gamma_ratio_to_eps(&rat_pq(-1, 2), 2).unwrap(), rat(1));
    }

    #[test]
    fn rat_strings() {
        assert_eq!(fmt_rat(&rat_pq(-4, 6)), "-2/3");
        assert_eq!(fmt_rat(&rat(17)), "17");
        assert_eq!(parse_rat("-2/3").unwrap(), rat_pq(-2, 3));
        assert_eq!(parse_rat("7").unwrap(), rat(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn primitive_scaling() {
        let v = [rat_pq(1, 2), rat_pq(-1, 3), rat(2)];
        let ints = integer_primitive(&v);
        assert_eq!(ints, vec![3.into(), (-2).into(), 12.into()]);
    }
}
