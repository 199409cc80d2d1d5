//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty vector. Everything here is exact; the only
//! panics are programming errors (division by the zero polynomial, inexact
//! `div_exact`).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::rat::{binom, fmt_rat, rat, Rat};

/// Polynomial with `Rat` coefficients, low degree first, trailing zeros
/// stripped.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Build from low-to-high coefficients; trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `prod (x - r_i)`.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Poly::one();
        for r in roots {
            p = &p * &Poly::new(vec![-r.clone(), Rat::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the `-1` convention for the zero polynomial.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Low-to-high coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_i(&self, x: i64) -> Rat {
        self.eval(&rat(x))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `p(x + t)` by binomial expansion of each monomial.
    pub fn shift(&self, t: &Rat) -> Poly {
        if t.is_zero() || self.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![Rat::zero(); n];
        // powers t^0..t^n
        let mut tp = Vec::with_capacity(n);
        let mut acc = Rat::one();
        for _ in 0..n {
            tp.push(acc.clone());
            acc *= t;
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c (x+t)^k = c sum_j C(k,j) t^(k-j) x^j
            for j in 0..=k {
                out[j] += c * binom(&rat(k as i64), (k - j) as u64) * &tp[k - j];
            }
        }
        Poly::new(out)
    }

    /// `p(x + 1) - p(x)`, the forward difference.
    pub fn forward_difference(&self) -> Poly {
        &self.shift(&Rat::one()) - self
    }

    /// `p(alpha x + beta)`.
    pub fn compose_linear(&self, alpha: &Rat, beta: &Rat) -> Poly {
        let mut acc = Poly::zero();
        let lin = Poly::new(vec![beta.clone(), alpha.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `p(q(x))`, Horner over the outer coefficients.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Unique interpolating polynomial through the given points, which
    /// must have pairwise distinct abscissas. Newton's divided differences.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Poly {
        let mut dd: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
        let mut out = Poly::zero();
        let mut basis = Poly::one();
        for k in 0..points.len() {
            out += &basis.scale(&dd[0]);
            basis = &basis * &Poly::new(vec![-&points[k].0, Rat::one()]);
            for i in 0..dd.len().saturating_sub(k + 1) {
                let num = &dd[i + 1] - &dd[i];
                dd[i] = num / (&points[i + k + 1].0 - &points[i].0);
            }
        }
        out
    }

    /// k-th derivative.
    pub fn derivative(&self, k: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                return p;
            }
            let coeffs = p
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect();
            p = Poly::new(coeffs);
        }
        p
    }

    /// Quotient and remainder with `deg r < deg d`. Panics if `d` is zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let dl = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &dl;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let v = dc * &c;
                    rem[k + i] -= v;
                }
            }
            quo[k] = c;
            // top coefficient is exactly cancelled
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Poly::new(quo), Poly::new(rem))
    }

    /// Exact division; panics when the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Scale to leading coefficient 1 (zero stays zero).
    pub fn into_monic(self) -> Poly {
        if self.is_zero() {
            return self;
        }
        let l = self.leading();
        if l.is_one() {
            return self;
        }
        self.scale(&l.recip())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of absolute values of the coefficients.
    pub fn coeff_abs_sum(&self) -> Rat {
        let mut s = Rat::zero();
        for c in &self.coeffs {
            s += c.abs();
        }
        s
    }

    /// Cauchy root bound: every complex root has modulus at most
    /// `1 + max |c_i| / |lc|`. Returns 0 for constants.
    pub fn cauchy_root_bound(&self) -> Rat {
        if self.coeffs.len() <= 1 {
            return Rat::zero();
        }
        let lc = self.leading().abs();
        let mut m = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        Rat::one() + m / lc
    }

    /// Rising factorial with polynomial base: `p (p+1) ... (p+k-1)`.
    pub fn pochhammer(&self, k: u64) -> Poly {
        let mut acc = Poly::one();
        for i in 0..k {
            acc = &acc * &(self + &Poly::constant(rat(i as i64)));
        }
        acc
    }
}

// ---- Arithmetic ----

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c += r;
            }
            out.push(c);
        }
        Poly::new(out)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Poly> for Poly {
    fn mul_assign(&mut self, rhs: &Poly) {
        *self = &*self * rhs;
    }
}

// ---- Rendering ----

/// Canonical text form: descending powers, explicit signs, `*` between a
/// non-unit coefficient and the variable, e.g. `-x^3 - 3*x^2 - x + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self))
    }
}

/// Canonical rendering shared by `Display`/`Debug` and the report writers.
pub fn render_poly(p: &Poly) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    let deg = p.degree().unwrap();
    let mut first = true;
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one();
        if k == 0 {
            out.push_str(&fmt_rat(&mag));
        } else {
            if !unit {
                out.push_str(&fmt_rat(&mag));
                out.push('*');
            }
            if k == 1 {
                out.push('x');
            } else {
                out.push_str(&alloc::format!("x^{k}"));
            }
        }
    }
    out
}
