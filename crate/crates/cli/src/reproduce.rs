//! `krall reproduce laguerre-example`: rebuild the canonical exceptional
//! Laguerre example from scratch and compare every artifact against the
//! values it must reproduce. The expected strings are frozen here; any
//! drift in the construction shows up as a named mismatch.

use crate::report::{Runner, Status, VerificationReport};
use crate::spec::FamilySpec;
use crate::suites::SuiteOptions;
use krall_core::bigfloat::FloatCtx;
use krall_core::exc_laguerre::ExceptionalLaguerreFamily;
use krall_core::poly::Poly;
use krall_core::quadrature::gauss_laguerre_inner;
use krall_core::rat::{fmt_rat, rat, Rat};
use krall_core::ratfunc::RatFunc;
use krall_core::sets::{FiniteSet, SetPair};
use num_traits::{One, Signed, Zero};

const ALPHA_HAT: i64 = -2;
const OMEGA: &str = "x^2 + 1";
const WEIGHT: &str = "e^(-x) / (x^2 + 1)^2";
const H1: &str = "(-x^3 - 3*x^2 - x + 1)/(x^2 + 1)";
const H0: &str = "(2*x - 2)/(x^2 + 1)";
const INDEX_SET: &str = "1, 3, 4, 5, 6, ...";
const NORM: &str = "1";

fn sign_normalized(p: &Poly) -> Poly {
    match p.degree() {
        Some(d) if p.coeff(d).is_negative() => -p,
        _ => p.clone(),
    }
}

fn artifact(computed: String, expected: &str) -> (Status, String) {
    if computed == expected {
        (Status::Pass, computed)
    } else {
        (
            Status::Fail,
            format!("computed {computed:?}, expected {expected:?}"),
        )
    }
}

pub fn run_reproduce(opts: &SuiteOptions) -> Result<VerificationReport, String> {
    let pair = SetPair::new(FiniteSet::new(vec![1]), FiniteSet::new(vec![1]));
    let fam = ExceptionalLaguerreFamily::new(ALPHA_HAT, pair).map_err(|e| e.to_string())?;
    let mut r = Runner::new(opts.deterministic);

    r.check("artifact-omega", || {
        let canon = sign_normalized(fam.omega());
        Ok(artifact(canon.to_string(), OMEGA))
    })?;

    let weight = fam.weight().map_err(|e| e.to_string())?;
    r.check("artifact-weight", || {
        let om = sign_normalized(weight.omega());
        let rendered = if weight.exponent() == 0 {
            format!("e^(-x) / ({om})^2")
        } else {
            format!("e^(-x) x^{} / ({om})^2", weight.exponent())
        };
        Ok(artifact(rendered, WEIGHT))
    })?;

    let [h1, h0] = fam.operator();
    r.check("artifact-operator-h1", || Ok(artifact(h1.to_string(), H1)))
        ?;
    r.check("artifact-operator-h0", || Ok(artifact(h0.to_string(), H0)))
        ?;

    r.check("artifact-index-set", || {
        let prefix = fam.pair().sigma_prefix(5);
        let rendered = format!(
            "{}, ...",
            prefix
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
        Ok(artifact(rendered, INDEX_SET))
    })?;

    r.check("artifact-norms", || {
        for n in fam.pair().sigma_prefix(5) {
            let norm = fam.norm_closed(n)?;
            if !norm.is_one() {
                return Ok((
                    Status::Fail,
                    format!("computed <q_{n}, q_{n}> = {}, expected {NORM}", fmt_rat(&norm)),
                ));
            }
        }
        Ok((Status::Pass, format!("{NORM} for every degree-set member")))
    })?;

    let n_max = opts.n_max.unwrap_or(6);
    let degrees = fam.pair().sigma_to(n_max);
    r.check("eigenfunction", || {
        for &n in &degrees {
            let q = fam.poly(n)?;
            let want = RatFunc::from_poly(q.scale(&rat(-n)));
            if fam.apply_operator(&q) != want {
                return Ok((Status::Fail, format!("D q_{n} != -{n} q_{n}")));
            }
        }
        Ok((
            Status::Pass,
            format!("D q_n = -n q_n exactly for n in {degrees:?}"),
        ))
    })?;

    let bits = opts.precision_bits;
    let tol = 1e-9;
    r.check("orthogonality-quadrature", || {
        let ctx = FloatCtx::new(bits);
        let members: Vec<(i64, Poly)> = degrees
            .iter()
            .map(|&n| fam.poly(n).map(|p| (n, p)))
            .collect::<Result<_, _>>()?;
        let mut worst = 0f64;
        for (i, (n, p)) in members.iter().enumerate() {
            for (m, q) in members.iter().take(i + 1) {
                let est = gauss_laguerre_inner(&weight, p, q, 128, bits);
                let expect = if n == m { Rat::one() } else { Rat::zero() };
                let gap = ctx
                    .sub(&est.refined, &ctx.from_rat(&expect))
                    .abs()
                    .to_f64();
                if gap > tol {
                    return Ok((
                        Status::Fail,
                        format!("<q_{n}, q_{m}> off by {gap:.3e} (tolerance {tol:.0e})"),
                    ));
                }
                worst = worst.max(gap);
            }
        }
        Ok((
            Status::Pass,
            format!(
                "Gram matrix is the identity within {tol:.0e} for n in {degrees:?} (worst {worst:.3e}, 128 nodes)"
            ),
        ))
    })?;

    let echo = FamilySpec::echo(
        crate::spec::bundled("exceptional-laguerre-example").expect("bundled"),
    );
    Ok(r.finish("reproduce laguerre-example".to_string(), echo))
}
