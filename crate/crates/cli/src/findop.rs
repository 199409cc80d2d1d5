//! `krall find-operator`: search for a banded difference operator having the
//! family members as eigenfunctions, report one primitive basis element, and
//! verify it beyond the fitted stretch when the family is infinite.

use crate::report::{Runner, Status, VerificationReport};
use crate::spec::{set_pair, FamilySpec, Scalar};
use crate::suites::SuiteOptions;
use crate::Failure;
use krall_core::krall_hahn::{KrallHahnFamily, Quartet};
use krall_core::krall_meixner::KrallMeixnerFamily;
use krall_core::operator::find_operator;
use krall_core::poly::Poly;
use krall_core::rat::rat;
use krall_core::sets::FiniteSet;
use serde_json::Value;

pub struct FindOpOptions {
    pub order: Option<i64>,
    pub band_degree: Option<usize>,
}

struct Target {
    members: Vec<(i64, Poly)>,
    /// Members beyond the fitted stretch, empty for finite families.
    holdout: Vec<(i64, Poly)>,
    default_order: i64,
    label: String,
}

fn build_target(spec: &FamilySpec, opts: &SuiteOptions) -> Result<Target, Failure> {
    match spec {
        FamilySpec::KrallMeixner { a, c_hat, f1, f2 } => {
            let a = a.to_rat().map_err(Failure::Schema)?;
            let pair = set_pair(f1, f2);
            if *c_hat > -1 || !pair.zero_free() {
                return Err(Failure::Schema(
                    "spec is degenerate; reduce it to its normal form before the operator search"
                        .to_string(),
                ));
            }
            let fam = KrallMeixnerFamily::new(a, *c_hat, pair)
                .map_err(|e| Failure::Internal(e.to_string()))?;
            let n_top = opts.n_max.unwrap_or(8);
            let members = (0..=n_top)
                .map(|n| fam.poly(n).map(|p| (n, p)))
                .collect::<Result<_, _>>()
                .map_err(|e| Failure::Internal(e.to_string()))?;
            let holdout = (n_top + 1..=n_top + 2)
                .map(|n| fam.poly(n).map(|p| (n, p)))
                .collect::<Result<_, _>>()
                .map_err(|e| Failure::Internal(e.to_string()))?;
            Ok(Target {
                members,
                holdout,
                default_order: fam.operator_order(),
                label: format!("krall-meixner members 0..={n_top}"),
            })
        }
        FamilySpec::KrallHahn {
            a_hat,
            b,
            big_n,
            f1,
            f2,
            f3,
            f4,
        } => {
            let b = b.to_rat().map_err(Failure::Schema)?;
            let quartet = Quartet::new(
                FiniteSet::new(f1.clone()),
                FiniteSet::new(f2.clone()),
                FiniteSet::new(f3.clone()),
                FiniteSet::new(f4.clone()),
            );
            let fam = KrallHahnFamily::new(*a_hat, b, *big_n, quartet)
                .map_err(|e| Failure::Internal(e.to_string()))?;
            finite_target(&fam)
        }
        FamilySpec::HahnDeleted {
            c,
            d,
            big_n,
            set_a,
            set_b,
        } => {
            let a_set = FiniteSet::new(set_a.to_vec());
            let d_rat = d.to_rat().map_err(Failure::Schema)?;
            let fam = if set_b.is_empty() {
                KrallHahnFamily::from_one_sided_deletion(*c, d_rat, *big_n, &a_set)
            } else {
                let d_int = match d {
                    Scalar::Int(v) => *v,
                    Scalar::Text(_) => {
                        return Err(Failure::Schema(
                            "two-sided deletion requires an integer d".to_string(),
                        ))
                    }
                };
                KrallHahnFamily::from_two_sided_deletion(
                    *c,
                    d_int,
                    *big_n,
                    &a_set,
                    &FiniteSet::new(set_b.to_vec()),
                )
            }
            .map_err(|e| Failure::Internal(e.to_string()))?;
            finite_target(&fam)
        }
        FamilySpec::ExceptionalMeixner { .. } | FamilySpec::ExceptionalLaguerre { .. } => {
            Err(Failure::Schema(
                "exceptional families carry a second order operator already; \
                 find-operator targets the banded higher order kind"
                    .to_string(),
            ))
        }
    }
}

fn finite_target(fam: &KrallHahnFamily) -> Result<Target, Failure> {
    let last = fam.last_member();
    let members = (0..=last)
        .map(|n| fam.poly(n).map(|p| (n, p)))
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    Ok(Target {
        members,
        holdout: Vec::new(),
        default_order: fam.operator_order(),
        label: format!("finite family, members 0..={last}"),
    })
}

fn render_bands(op: &krall_core::operator::BandedDifferenceOperator) -> String {
    op.bands()
        .filter(|(_, h)| !h.is_zero())
        .map(|(l, h)| format!("h[{l}] = {h}"))
        .collect::<Vec<_>>()
        .join(";  ")
}

/// Returns the report and whether a full-width operator was found.
pub fn run_find_operator(
    spec: &FamilySpec,
    echo: Value,
    fo: &FindOpOptions,
    opts: &SuiteOptions,
) -> Result<(VerificationReport, bool), Failure> {
    let target = build_target(spec, opts)?;
    let order = fo.order.unwrap_or(target.default_order);
    if order < 1 {
        return Err(Failure::Schema(format!(
            "operator order must be positive, got {order}"
        )));
    }
    let ladder: Vec<usize> = match fo.band_degree {
        Some(d) => vec![d],
        None => (2..=(2 * order as usize + 2)).collect(),
    };
    let max_d = *ladder.last().unwrap();

    let mut r = Runner::new(opts.deterministic);
    let mut found = false;

    let mut hit = None;
    for &band_degree in &ladder {
        let search = find_operator(&target.members, order, band_degree)
            .map_err(|e| Failure::Internal(e.to_string()))?;
        if search.nontrivial().is_some() {
            hit = Some((band_degree, search));
            break;
        }
    }

    match hit {
        Some((band_degree, search)) => {
            found = true;
            let cand = search.nontrivial().expect("checked above");
            let lambda = search.eigenvalue_polynomial(cand);
            r.check("search", || {
                Ok((
                    Status::Pass,
                    format!(
                        "order {order} operator on {} at band degree {band_degree}, solution space dimension {}",
                        target.label,
                        search.dimension(),
                    ),
                ))
            }).map_err(Failure::Internal)?;
            r.check("operator", || {
                Ok((Status::Pass, render_bands(&cand.operator)))
            }).map_err(Failure::Internal)?;
            r.check("eigenvalue", || {
                Ok((Status::Pass, format!("lambda(n) = {lambda}")))
            }).map_err(Failure::Internal)?;
            if target.holdout.is_empty() {
                r.skip("out-of-sample", "finite family; every member was fitted");
            } else {
                r.check("out-of-sample", || {
                    let ns: Vec<i64> = target.holdout.iter().map(|(n, _)| *n).collect();
                    for (n, p) in &target.holdout {
                        let want = p.scale(&lambda.eval(&rat(*n)));
                        if cand.operator.apply(p) != want {
                            return Ok((
                                Status::Fail,
                                format!("D q_{n} != lambda({n}) q_{n} outside the fit"),
                            ));
                        }
                    }
                    Ok((
                        Status::Pass,
                        format!("D q_n = lambda(n) q_n holds for unfitted n in {ns:?}"),
                    ))
                }).map_err(Failure::Internal)?;
                found = r.passed_so_far();
            }
        }
        None => {
            r.check("search", || {
                Ok((
                    Status::Fail,
                    format!(
                        "no full-width operator of order {order} up to band degree {max_d}; \
                         retry with --D {} or a different --r",
                        max_d + 2
                    ),
                ))
            }).map_err(Failure::Internal)?;
        }
    }

    Ok((
        r.finish(format!("find-operator {}", spec.family_name()), echo),
        found,
    ))
}
