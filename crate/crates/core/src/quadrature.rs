//! Gauss-Laguerre quadrature at arbitrary working precision, for inner
//! products against continuous weights `x^e exp(-x) / omega(x)^2` on
//! `[0, inf)`.
//!
//! Nodes are the roots of the classical Laguerre polynomial, found by
//! Newton iteration from the usual staircase of initial guesses; the
//! `exp(-x)` factor is absorbed by the quadrature weights, so integrands
//! stay rational and evaluate exactly in `BigFloat` arithmetic up to
//! truncation.

use alloc::vec::Vec;

use crate::bigfloat::{BigFloat, FloatCtx};
use crate::poly::Poly;
use crate::sturm::nonvanishing_on_nonneg;
use crate::{Error, Result};

/// `(L_n(x), L_{n-1}(x))` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}`.
fn laguerre_pair(n: usize, x: &BigFloat, ctx: &FloatCtx) -> (BigFloat, BigFloat) {
    let one = ctx.from_i64(1);
    if n == 0 {
        return (one, BigFloat::zero());
    }
    let mut prev = one.clone();
    let mut cur = ctx.sub(&one, x);
    for k in 1..n {
        let a = ctx.sub(&ctx.from_i64(2 * k as i64 + 1), x);
        let next = ctx.div(
            &ctx.sub(&ctx.mul(&a, &cur), &ctx.mul(&ctx.from_i64(k as i64), &prev)),
            &ctx.from_i64(k as i64 + 1),
        );
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// One Newton step for a root of `L_n`, using
/// `L_n'(x) = n (L_n(x) - L_{n-1}(x)) / x`.
fn newton_step(n: usize, z: &BigFloat, ctx: &FloatCtx) -> (BigFloat, BigFloat) {
    let (ln, lnm1) = laguerre_pair(n, z, ctx);
    let deriv = ctx.div(
        &ctx.mul(&ctx.from_i64(n as i64), &ctx.sub(&ln, &lnm1)),
        z,
    );
    let dz = ctx.div(&ln, &deriv);
    (ctx.sub(z, &dz), dz)
}

fn refine_root(n: usize, guess: BigFloat, ctx: &FloatCtx) -> BigFloat {
    let mut z = guess;
    let target = ctx.pow2(16 - ctx.bits as i64);
    let quadratic_regime = ctx.pow2(-(ctx.bits as i64) / 2);
    let mut last_step: Option<BigFloat> = None;
    for _ in 0..120 {
        let (next, dz) = newton_step(n, &z, ctx);
        z = next;
        if dz.is_zero() {
            return z;
        }
        let rel = ctx.div(&dz.abs(), &z.abs());
        if ctx.lt(&rel, &target) {
            return z;
        }
        // once steps are small they shrink quadratically until truncation
        // noise takes over; a small step that stopped shrinking means the
        // root is as good as the working precision allows
        if ctx.lt(&rel, &quadratic_regime) {
            if let Some(prev) = &last_step {
                if !ctx.lt(&dz.abs(), prev) {
                    return z;
                }
            }
        }
        last_step = Some(dz.abs());
    }
    panic!("Newton iteration for Laguerre root did not converge");
}

/// Nodes and weights of the `n`-point rule: `integral_0^inf f(x) exp(-x) dx
/// ~ sum w_i f(x_i)`, exact for polynomials of degree < 2n.
pub struct GaussLaguerre {
    n: usize,
    ctx: FloatCtx,
    nodes: Vec<BigFloat>,
    weights: Vec<BigFloat>,
}

impl GaussLaguerre {
    pub fn new(n: usize, bits: u64) -> GaussLaguerre {
        assert!(n >= 1);
        let ctx = FloatCtx::new(bits + 16);
        let coarse = FloatCtx::new(96);
        let nf = n as f64;
        let mut nodes: Vec<BigFloat> = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            // staircase guesses, each extrapolated from the two previous
            // converged roots
            let g = match i {
                0 => 3.0 / (1.0 + 2.4 * nf),
                1 => nodes[0].to_f64() + 15.0 / (1.0 + 2.5 * nf),
                _ => {
                    let ai = i as f64 - 1.0;
                    let zl = nodes[i - 1].to_f64();
                    zl + (1.0 + 2.55 * ai) / (1.9 * ai) * (zl - nodes[i - 2].to_f64())
                }
            };
            let rough = refine_root(n, coarse.from_f64(g), &coarse);
            let z = refine_root(n, rough, &ctx);
            if i > 0 {
                let prev: &BigFloat = &nodes[i - 1];
                assert!(ctx.lt(prev, &z), "Laguerre nodes out of order");
            }
            // w = x / (n L_{n-1}(x))^2 at a root x of L_n
            let (_, lnm1) = laguerre_pair(n, &z, &ctx);
            let d = ctx.mul(&ctx.from_i64(n as i64), &lnm1);
            weights.push(ctx.div(&z, &ctx.mul(&d, &d)));
            nodes.push(z);
        }
        GaussLaguerre {
            n,
            ctx,
            nodes,
            weights,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nodes(&self) -> &[BigFloat] {
        &self.nodes
    }

    pub fn weights(&self) -> &[BigFloat] {
        &self.weights
    }

    /// `sum w_i f(x_i)` for a caller-supplied integrand factor `f` (the
    /// `exp(-x)` is already inside the weights).
    pub fn sum<F: Fn(&BigFloat, &FloatCtx) -> BigFloat>(&self, f: F) -> BigFloat {
        let mut acc = BigFloat::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc = self.ctx.add(&acc, &self.ctx.mul(w, &f(x, &self.ctx)));
        }
        acc
    }
}

fn lift_poly(p: &Poly, ctx: &FloatCtx) -> Vec<BigFloat> {
    p.coeffs().iter().map(|c| ctx.from_rat(c)).collect()
}

fn horner(coeffs: &[BigFloat], x: &BigFloat, ctx: &FloatCtx) -> BigFloat {
    let mut acc = BigFloat::zero();
    for c in coeffs.iter().rev() {
        acc = ctx.add(&ctx.mul(&acc, x), c);
    }
    acc
}

/// Weight `x^exponent exp(-x) / omega(x)^2` on `[0, inf)`. The denominator
/// must stay away from zero on the whole ray, which is checked exactly.
#[derive(Clone, Debug)]
pub struct ContinuousWeight {
    exponent: u64,
    omega: Poly,
}

impl ContinuousWeight {
    pub fn new(exponent: u64, omega: Poly) -> Result<ContinuousWeight> {
        if !nonvanishing_on_nonneg(&omega) {
            return Err(Error::InvalidWeight(alloc::format!(
                "denominator {omega} vanishes on [0, inf)"
            )));
        }
        Ok(ContinuousWeight { exponent, omega })
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn omega(&self) -> &Poly {
        &self.omega
    }
}

/// Quadrature value of `integral p q d(weight)` with a node-doubling error
/// estimate: `value` uses the stated rule, `refined` twice the nodes.
#[derive(Clone, Debug)]
pub struct QuadratureEstimate {
    pub value: BigFloat,
    pub refined: BigFloat,
    pub estimate: f64,
}

fn weighted_sum(
    rule: &GaussLaguerre,
    w: &ContinuousWeight,
    p: &Poly,
    q: &Poly,
) -> BigFloat {
    let ctx = FloatCtx::new(rule.ctx.bits);
    let pq = lift_poly(&(p * q), &ctx);
    let om = lift_poly(&w.omega, &ctx);
    rule.sum(|x, c| {
        let mut v = horner(&pq, x, c);
        for _ in 0..w.exponent {
            v = c.mul(&v, x);
        }
        let o = horner(&om, x, c);
        c.div(&v, &c.mul(&o, &o))
    })
}

/// `integral_0^inf p(x) q(x) x^e exp(-x) / omega(x)^2 dx` by the `nodes`-
/// point rule at `bits` working precision, with the doubled-rule estimate.
pub fn gauss_laguerre_inner(
    w: &ContinuousWeight,
    p: &Poly,
    q: &Poly,
    nodes: usize,
    bits: u64,
) -> QuadratureEstimate {
    let base = GaussLaguerre::new(nodes, bits);
    let double = GaussLaguerre::new(2 * nodes, bits);
    let ctx = FloatCtx::new(bits);
    let value = weighted_sum(&base, w, p, q);
    let refined = weighted_sum(&double, w, p, q);
    let estimate = ctx.sub(&value, &refined).abs().to_f64();
    QuadratureEstimate {
        value,
        refined,
        estimate,
    }
}
