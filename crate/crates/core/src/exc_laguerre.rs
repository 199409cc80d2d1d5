//! Exceptional Laguerre families: the continuous limit of the exceptional
//! Meixner construction, built from Wronskian-style determinants of
//! Laguerre polynomials and orthogonal on `[0, inf)` against
//! `x^e exp(-x)` divided by the square of the family's key polynomial.

use alloc::format;
use alloc::vec;

use num_traits::One;

use crate::classical::laguerre;
use crate::exc_meixner::exc_meixner_poly;
use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::quadrature::ContinuousWeight;
use crate::rat::{factorial, pow_i, rat, Rat};
use crate::ratfunc::RatFunc;
use crate::sets::{
    admissible, covering_holds, measure_nodes, vandermonde, AdmissibilityReport, FiniteSet,
    SetPair,
};
use crate::sturm::nonvanishing_on_nonneg;
use crate::{Error, Result};

/// Wronskian-style determinant of the pair at parameter `alpha`: rows from
/// the first set differentiate `L_f` across the columns, rows from the
/// second evaluate `L_f` at `-x` with the parameter raised by the column
/// index.  Degree `u + k1` for generic data; the empty pair gives `1`.
pub fn laguerre_casorati(pair: &SetPair, alpha: &Rat) -> Poly {
    let k = pair.k();
    if k == 0 {
        return Poly::one();
    }
    let k1 = pair.k1();
    PolyMatrix::from_fn(k, |i, j| {
        if i < k1 {
            laguerre(pair.f1.elems()[i], alpha).derivative(j)
        } else {
            let f = pair.f2.elems()[i - k1];
            laguerre(f, &(alpha + &rat(j as i64))).compose_linear(&rat(-1), &rat(0))
        }
    })
    .det()
    .expect("square by construction")
}

/// Degree-`n` member: the same determinant bordered by a sliding classical
/// row of degree `n - u` differentiated across the columns.
pub fn exc_laguerre_poly(pair: &SetPair, alpha: &Rat, n: i64) -> Poly {
    let k = pair.k();
    let k1 = pair.k1();
    let u = pair.u();
    PolyMatrix::from_fn(k + 1, |i, j| {
        if i == 0 {
            laguerre(n - u, alpha).derivative(j)
        } else if i - 1 < k1 {
            laguerre(pair.f1.elems()[i - 1], alpha).derivative(j)
        } else {
            let f = pair.f2.elems()[i - 1 - k1];
            laguerre(f, &(alpha + &rat(j as i64))).compose_linear(&rat(-1), &rat(0))
        }
    })
    .det()
    .expect("square by construction")
}

/// Closed form for the leading coefficient of the degree-`n` member, valid
/// on the family's degree set.
pub fn exc_laguerre_leading(pair: &SetPair, n: i64) -> Rat {
    let u = pair.u();
    let mut num = vandermonde(&pair.f1) * vandermonde(&pair.f2);
    for f in pair.f1.iter() {
        num *= rat(f - n + u);
    }
    let mut den = factorial((n - u) as u64);
    for f in pair.f1.iter().chain(pair.f2.iter()) {
        den *= factorial(f as u64);
    }
    let e = n - u + pair.f1.sum();
    let sign = if e % 2 == 0 { rat(1) } else { rat(-1) };
    sign * num / den
}

/// The discrete member rescaled onto the continuous lattice:
/// `(a-1)^(n-(k1+1)k2) m_n(x / (1-a))` at parameter `alpha + 1`.  As `a`
/// approaches 1 this converges coefficientwise to the degree-`n` member
/// times `(-1)^(C(k+1,2) + sum F2)`.
pub fn meixner_scaled_toward_laguerre(pair: &SetPair, a: &Rat, alpha_hat: i64, n: i64) -> Poly {
    let k1 = pair.k1() as i64;
    let k2 = pair.k2() as i64;
    let c_hat = rat(alpha_hat + 1);
    let m = exc_meixner_poly(pair, a, &c_hat, n);
    let stretch = Rat::one() / (Rat::one() - a);
    m.compose_linear(&stretch, &rat(0))
        .scale(&pow_i(&(a - &Rat::one()), n - (k1 + 1) * k2))
}

/// Sign matching the continuous limit of the discrete members:
/// `(-1)^(C(k+1,2) + sum F2)`.
pub fn limit_sign(pair: &SetPair) -> Rat {
    let k = pair.k() as i64;
    let e = k * (k + 1) / 2 + pair.f2.sum();
    if e % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Coefficients `(h_1, h_0)` of the second-order operator
/// `x d^2/dx^2 + h_1 d/dx + h_0` attached to the pair at parameter
/// `alpha`.  The degree-`n` member is an eigenfunction with eigenvalue
/// `-n`; the empty pair reproduces the classical Laguerre operator.
pub fn exc_laguerre_operator(pair: &SetPair, alpha: &Rat) -> [RatFunc; 2] {
    let k = rat(pair.k() as i64);
    let k1 = rat(pair.k1() as i64);
    let u = rat(pair.u());
    let om = laguerre_casorati(pair, alpha);
    let dom = om.derivative(1);
    let ddom = om.derivative(2);
    let x = Poly::x();
    let h1 = &RatFunc::from_poly(Poly::new(vec![alpha + &k + Rat::one(), rat(-1)]))
        - &RatFunc::new((&x * &dom).scale(&rat(2)), om.clone());
    let lin = Poly::new(vec![-(alpha + &k), Rat::one()]);
    let h0 = &(&RatFunc::constant(-(&k1 + &u)) + &RatFunc::new(&lin * &dom, om.clone()))
        + &RatFunc::new(&x * &ddom, om);
    [h1, h0]
}

/// Apply `x d^2/dx^2 + h_1 d/dx + h_0` to a polynomial.
pub fn apply_differential(h: &[RatFunc; 2], p: &Poly) -> RatFunc {
    let xpp = RatFunc::from_poly(&Poly::x() * &p.derivative(2));
    let p1 = RatFunc::from_poly(p.derivative(1));
    let p0 = RatFunc::from_poly(p.clone());
    &(&xpp + &(&h[0] * &p1)) + &(&h[1] * &p0)
}

/// Exceptional Laguerre family for `alpha <= -2` and a covering pair of
/// positive integers (covering is taken at the shifted parameter
/// `alpha + 1`, matching the discrete construction it limits from).
#[derive(Clone, Debug)]
pub struct ExceptionalLaguerreFamily {
    alpha_hat: i64,
    pair: SetPair,
    nodes: FiniteSet,
    omega: Poly,
}

impl ExceptionalLaguerreFamily {
    pub fn new(alpha_hat: i64, pair: SetPair) -> Result<Self> {
        if alpha_hat > -2 {
            return Err(Error::DegenerateParameter(format!(
                "parameter must be an integer at most -2, got {alpha_hat}"
            )));
        }
        if !pair.zero_free() || pair.f1.min() < 0 || pair.f2.min() < 0 {
            return Err(Error::DegenerateParameter(format!(
                "exclusion sets must consist of positive integers, got {pair}; \
                 normalize the pair first"
            )));
        }
        if !covering_holds(alpha_hat + 1, &pair) {
            return Err(Error::DegenerateParameter(format!(
                "pair {pair} does not cover 0..{} jointly with its reflection",
                -alpha_hat - 1
            )));
        }
        let omega = laguerre_casorati(&pair, &rat(alpha_hat));
        let nodes = measure_nodes(alpha_hat + 1, &pair);
        Ok(ExceptionalLaguerreFamily { alpha_hat, pair, nodes, omega })
    }

    pub fn alpha_hat(&self) -> i64 {
        self.alpha_hat
    }

    pub fn pair(&self) -> &SetPair {
        &self.pair
    }

    pub fn omega(&self) -> &Poly {
        &self.omega
    }

    pub fn u(&self) -> i64 {
        self.pair.u()
    }

    pub fn sigma_contains(&self, n: i64) -> bool {
        self.pair.sigma_contains(n)
    }

    /// Discrete-side admissibility at the shifted parameter.
    pub fn positivity(&self) -> AdmissibilityReport {
        admissible(self.alpha_hat + 1, &self.pair)
    }

    /// Real-line positivity: the key polynomial keeps a fixed sign on the
    /// closed half line.  Equivalent to the discrete-side admissibility.
    pub fn omega_nonvanishing(&self) -> bool {
        nonvanishing_on_nonneg(&self.omega)
    }

    pub fn poly(&self, n: i64) -> Result<Poly> {
        if !self.pair.sigma_contains(n) {
            return Err(Error::IndexOutsideSigma { n });
        }
        let p = exc_laguerre_poly(&self.pair, &rat(self.alpha_hat), n);
        if p.deg_i() != n {
            return Err(Error::Degeneracy(format!(
                "determinant for degree {n} collapsed to degree {}",
                p.deg_i()
            )));
        }
        Ok(p)
    }

    /// Operator coefficients `(h_1, h_0)`; members satisfy
    /// `x p'' + h_1 p' + h_0 p = -n p`.
    pub fn operator(&self) -> [RatFunc; 2] {
        exc_laguerre_operator(&self.pair, &rat(self.alpha_hat))
    }

    /// Apply the differential operator to a polynomial.
    pub fn apply_operator(&self, p: &Poly) -> RatFunc {
        apply_differential(&self.operator(), p)
    }

    /// Orthogonality weight `x^(alpha + k) exp(-x) / omega(x)^2`; the
    /// covering makes the exponent a nonnegative integer, and admissibility
    /// keeps the denominator nonzero on the half line.
    pub fn weight(&self) -> Result<ContinuousWeight> {
        let e = self.alpha_hat + self.pair.k() as i64;
        if e < 0 {
            return Err(Error::InvalidWeight(format!(
                "negative lattice exponent {e}"
            )));
        }
        ContinuousWeight::new(e as u64, self.omega.clone())
    }

    /// Squared norm of the degree-`n` member: the plain node product
    /// `prod_{h in nodes} (n - u - h)`.
    pub fn norm_closed(&self, n: i64) -> Result<Rat> {
        if !self.pair.sigma_contains(n) {
            return Err(Error::IndexOutsideSigma { n });
        }
        let u = self.pair.u();
        let mut v = Rat::one();
        for h in self.nodes.iter() {
            v *= rat(n - u - h);
        }
        Ok(v)
    }

    /// The lowest-degree member equals the key polynomial of the collapsed
    /// pair at the raised parameter, up to the sign
    /// `(-1)^(C(s,2) + s k1)` with `s` the first set's segment index.
    pub fn lowest_member_collapse(&self) -> (Rat, SetPair, i64) {
        let s = self.pair.f1.segment_index();
        let dropped = SetPair::new(self.pair.f1.collapse_segment(), self.pair.f2.clone());
        let e = s * (s - 1) / 2 + s * self.pair.k1() as i64;
        let sign = if e % 2 == 0 { rat(1) } else { rat(-1) };
        (sign, dropped, self.alpha_hat + s)
    }
}
