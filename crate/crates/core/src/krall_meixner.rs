//! Deformed Meixner families on the nonnegative integer lattice.
//!
//! A pair of finite exclusion sets together with a negative integer shift
//! of the Meixner parameter produces a discrete measure whose orthogonal
//! polynomials come out of a quasi-Casorati determinant.  The plain
//! Casorati determinant [`omega_meixner`] of the same data controls
//! everything: its values on the nonnegative integers decide whether the
//! construction degenerates, its sign pattern decides positivity, and its
//! consecutive values enter the norm law.

use alloc::format;
use alloc::vec;

use num_traits::{One, Signed, Zero};

use crate::classical::meixner;
use crate::matrix::PolyMatrix;
use crate::measure::DiscreteMeasure;
use crate::poly::Poly;
use crate::rat::{factorial, gamma_ratio_to_eps, pochhammer, pow_i, rat, Rat};
use crate::sets::{
    admissible, covering_holds, measure_nodes, node_product, AdmissibilityReport, FiniteSet,
    SetPair,
};
use crate::{Error, Result};

/// Casorati determinant of the pair: one row per set element `f`, with
/// columns evaluating the degree-`f` member at `x, x+1, ..., x+k-1`.
/// Rows from the first set carry parameters `(a, c)`; rows from the second
/// carry `(1/a, c)` with the entry in column `j` divided by `a^j`
/// (columns counted from zero).  The empty pair gives the constant `1`.
///
/// For generic parameters the degree is
/// `sum F1 + sum F2 - C(k1, 2) - C(k2, 2)`.
pub fn omega_meixner(pair: &SetPair, a: &Rat, c: &Rat) -> Poly {
    let k = pair.k();
    if k == 0 {
        return Poly::one();
    }
    let k1 = pair.k1();
    let inv_a = Rat::one() / a;
    PolyMatrix::from_fn(k, |i, j| {
        let col = rat(j as i64);
        if i < k1 {
            meixner(pair.f1.elems()[i], a, c).shift(&col)
        } else {
            let row = meixner(pair.f2.elems()[i - k1], &inv_a, c).shift(&col);
            row.scale(&pow_i(a, -(j as i64)))
        }
    })
    .det()
    .expect("square by construction")
}

/// Deformed measure `sum_{x >= 0, x not in F1} prod_{h in nodes} (x - h) a^x`.
///
/// The node set comes from the covering combinatorics of the pair; the
/// density polynomial absorbs every pole left by the negative parameter,
/// so the mass is a plain polynomial times a geometric term.  Works for
/// any pair, including ones the family constructor rejects; reductions of
/// degenerate pairs are checked against this form pointwise.
pub fn deformed_measure(a: &Rat, c_hat: i64, pair: &SetPair) -> Result<DiscreteMeasure> {
    let density = node_product(&measure_nodes(c_hat, pair));
    DiscreteMeasure::poly_geometric(density, a.clone(), pair.f1.clone())
}

/// Orthogonal family for the deformed measure with `0 < a < 1`, a negative
/// integer parameter shift, and a covering pair of positive integers.
#[derive(Clone, Debug)]
pub struct KrallMeixnerFamily {
    a: Rat,
    c_hat: i64,
    pair: SetPair,
    /// Meixner parameter of the determinant rows, `c_hat + max F1 + max F2 + 2`.
    c: i64,
    g1: FiniteSet,
    g2: FiniteSet,
    nodes: FiniteSet,
    omega: Poly,
}

impl KrallMeixnerFamily {
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
        let c = c_hat + pair.f1.max() + pair.f2.max() + 2;
        let g1 = pair.f1.involution();
        let g2 = pair.f2.involution();
        let nodes = measure_nodes(c_hat, &pair);
        let omega = omega_meixner(&pair, &a, &rat(c_hat));
        Ok(KrallMeixnerFamily { a, c_hat, pair, c, g1, g2, nodes, omega })
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

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn nodes(&self) -> &FiniteSet {
        &self.nodes
    }

    /// Casorati determinant at the family's own parameters.
    pub fn omega(&self) -> &Poly {
        &self.omega
    }

    /// Order of the lattice operator having the family as eigenfunctions:
    /// `1 + sum F1 + sum F2 - C(k1, 2) - C(k2, 2)`.
    pub fn operator_order(&self) -> i64 {
        let k1 = self.pair.k1() as i64;
        let k2 = self.pair.k2() as i64;
        1 + self.pair.f1.sum() + self.pair.f2.sum() - k1 * (k1 - 1) / 2 - k2 * (k2 - 1) / 2
    }

    /// The orthogonality measure.
    pub fn nu(&self) -> Result<DiscreteMeasure> {
        deformed_measure(&self.a, self.c_hat, &self.pair)
    }

    pub fn positivity(&self) -> AdmissibilityReport {
        admissible(self.c_hat, &self.pair)
    }

    /// Sign test equivalent to positivity of the measure: consecutive values
    /// of the Casorati determinant have a common sign at every nonnegative
    /// integer.  Scans past the largest real root, where the sign freezes.
    pub fn omega_sign_condition(&self) -> bool {
        let bound = self.omega.cauchy_root_bound();
        let mut n = 0i64;
        loop {
            let prod = self.omega.eval_i(n) * self.omega.eval_i(n + 1);
            if !prod.is_positive() {
                return false;
            }
            if rat(n) > bound {
                return true;
            }
            n += 1;
        }
    }

    /// Degree-`n` member, built as an `(m+1) x (m+1)` determinant whose top
    /// row slides through degrees `n, n-1, ..., n-m` (negative degrees give
    /// zero entries) and whose remaining rows are scalars indexed by the
    /// involuted sets.  Fails with a degeneracy when the scalar minor
    /// vanishes and the degree drops below `n`.
    pub fn poly(&self, n: i64) -> Result<Poly> {
        if n < 0 {
            return Err(Error::InvalidSpec(format!("negative degree {n}")));
        }
        let m = self.g1.len() + self.g2.len();
        let shift = rat(-(self.pair.f1.max() + 1));
        let c_row = rat(self.c);
        let c_dual = rat(2 - self.c);
        let a = &self.a;
        let inv_a = Rat::one() / a;
        let am1 = a - &Rat::one();
        let q = PolyMatrix::from_fn(m + 1, |i, j| {
            let ji = j as i64;
            if i == 0 {
                let row = meixner(n - ji, a, &c_row).shift(&shift);
                return row.scale(&pow_i(&am1, -ji));
            }
            // scalar rows: the argument walks -n-1, -n, ..., -n+m-1
            let arg = rat(-n + ji - 1);
            let v = if i - 1 < self.g1.len() {
                meixner(self.g1.elems()[i - 1], a, &c_dual).eval(&arg)
            } else {
                let g = self.g2.elems()[i - 1 - self.g1.len()];
                meixner(g, &inv_a, &c_dual).eval(&arg) * pow_i(a, -ji)
            };
            Poly::constant(v)
        })
        .det()
        .expect("square by construction");
        if q.deg_i() != n {
            return Err(Error::Degeneracy(format!(
                "determinant for degree {n} collapsed to degree {}",
                q.deg_i()
            )));
        }
        Ok(q)
    }

    /// Norm law up to one family constant:
    /// `a^n (n + k + c_hat - 1)! omega(n) omega(n+1) / ((1-a)^(2n+c_hat) n!)`.
    /// The covering condition guarantees `k + c_hat >= 1`, so the factorial
    /// argument is a nonnegative integer.
    pub fn norm_reference(&self, n: u64) -> Rat {
        let k = self.pair.k() as i64;
        let gamma_arg = n as i64 + k + self.c_hat - 1;
        debug_assert!(gamma_arg >= 0, "covering forces k + c_hat >= 1");
        let one_minus_a = Rat::one() - &self.a;
        pow_i(&self.a, n as i64) * factorial(gamma_arg as u64)
            * self.omega.eval_i(n as i64)
            * self.omega.eval_i(n as i64 + 1)
            / (pow_i(&one_minus_a, 2 * n as i64 + self.c_hat) * factorial(n))
    }
}

/// Meixner weight multiplied by the polynomial with roots in the first set
/// and, reflected through the parameter, the second set: mass
/// `prod_{f in F1} (x - f) prod_{f in F2} (x + d + f) (d)_x a^x / x!`.
/// The rising-factorial form absorbs the usual gamma normalization, so `d`
/// may be any value outside `{0, -1, -2, ...}`.
#[derive(Clone, Debug)]
pub struct ChristoffelMeixner {
    a: Rat,
    d: Rat,
    pair: SetPair,
}

impl ChristoffelMeixner {
    pub fn new(a: Rat, d: Rat, pair: SetPair) -> Result<Self> {
        if a <= Rat::zero() || a >= Rat::one() {
            return Err(Error::DegenerateParameter(
                "geometric ratio must satisfy 0 < a < 1".into(),
            ));
        }
        if d.is_integer() && d <= Rat::zero() {
            return Err(Error::DegenerateParameter(
                "weight parameter must avoid the nonpositive integers".into(),
            ));
        }
        Ok(ChristoffelMeixner { a, d, pair })
    }

    pub fn d(&self) -> &Rat {
        &self.d
    }

    pub fn pair(&self) -> &SetPair {
        &self.pair
    }

    /// Mass at a lattice point.  Zero exactly at the roots contributed by
    /// the first set.
    pub fn mass_at(&self, x: u64) -> Rat {
        let xr = rat(x as i64);
        let mut m = pochhammer(&self.d, x) * pow_i(&self.a, x as i64) / factorial(x);
        for f in self.pair.f1.iter() {
            m *= &xr - rat(f);
        }
        for f in self.pair.f2.iter() {
            m *= &xr + &self.d + rat(f);
        }
        m
    }

    /// The measure itself, available when `d` is a positive integer: the
    /// rising factorial `(d)_x / x!` then equals the polynomial
    /// `(x+1)_(d-1) / (d-1)!` and the mass is polynomial-times-geometric.
    pub fn to_measure(&self) -> Result<DiscreteMeasure> {
        if !self.d.is_integer() || self.d <= Rat::zero() {
            return Err(Error::NotRepresentable(format!(
                "mass is polynomial in x only for positive integer d, got {}",
                self.d
            )));
        }
        let d_int = self.d.to_integer();
        let d_u = u64::try_from(&d_int).map_err(|_| {
            Error::NotRepresentable(format!("parameter {} out of range", self.d))
        })?;
        let mut density = Poly::new(vec![Rat::one(), Rat::one()]).pochhammer(d_u - 1);
        density = density.scale(&(Rat::one() / factorial(d_u - 1)));
        for f in self.pair.f1.iter() {
            density = &density * &Poly::new(vec![rat(-f), Rat::one()]);
        }
        for f in self.pair.f2.iter() {
            density = &density * &Poly::new(vec![&self.d + rat(f), Rat::one()]);
        }
        DiscreteMeasure::poly_geometric(density, self.a.clone(), FiniteSet::empty())
    }

    /// Mass carrying the full gamma factor `Gamma(x + d)` instead of the
    /// rising factorial, normalized by the gamma value just above the
    /// nearest integer.  This is the form whose pointwise limit, as `d`
    /// slides down to a negative integer, is the deformed measure; the
    /// polynomial roots cancel the gamma poles along the way.  Only
    /// non-integer `d` keeps the gamma factor finite.
    pub fn limit_mass_at(&self, x: u64) -> Result<Rat> {
        let xr = rat(x as i64);
        let mut m = gamma_ratio_to_eps(&self.d, x)? * pow_i(&self.a, x as i64) / factorial(x);
        for f in self.pair.f1.iter() {
            m *= &xr - rat(f);
        }
        for f in self.pair.f2.iter() {
            m *= &xr + &self.d + rat(f);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::meixner_mass;
    use alloc::vec::Vec;
    use crate::rat::rat_pq;
    use crate::sets::{normalize_pair, CanonicalForm};

    fn fs(v: &[i64]) -> FiniteSet {
        FiniteSet::new(v.to_vec())
    }

    fn pair(f1: &[i64], f2: &[i64]) -> SetPair {
        SetPair::new(fs(f1), fs(f2))
    }

    #[test]
    fn casorati_determinant_oracle() {
        // 2x2 case worked by hand: rows (x+1, x+2) and (x-2, 2(x-1))
        let om = omega_meixner(&pair(&[1], &[1]), &rat_pq(1, 2), &rat(-1));
        assert_eq!(om, Poly::new(vec![rat(2), rat(0), rat(1)]));
    }

    #[test]
    fn casorati_degree_catalog() {
        let a = rat_pq(1, 3);
        let c = rat_pq(5, 3);
        for (f1, f2, want) in [
            (fs(&[]), fs(&[]), 0i64),
            (fs(&[1]), fs(&[]), 1),
            (fs(&[]), fs(&[2]), 2),
            (fs(&[1, 2]), fs(&[1, 2]), 4),
            (fs(&[2, 3]), fs(&[1]), 5),
            (fs(&[1, 3]), fs(&[2, 4]), 8),
        ] {
            let p = SetPair::new(f1, f2);
            let om = omega_meixner(&p, &a, &c);
            assert_eq!(om.deg_i(), want, "pair {p}");
        }
    }

    #[test]
    fn casorati_duality_reflection() {
        // reflecting the variable and the parameter lands on the involuted
        // pair, up to a constant
        let a = rat_pq(1, 3);
        for (p, d) in [
            (pair(&[1, 2], &[1]), rat(-1)),
            (pair(&[1, 2], &[1]), rat_pq(2, 3)),
            (pair(&[1, 3], &[2]), rat(-2)),
        ] {
            let dual = SetPair::new(p.f1.involution(), p.f2.involution());
            let d_dual = -&d - rat(p.f1.max() + p.f2.max());
            let lhs = omega_meixner(&p, &a, &d);
            let rhs = omega_meixner(&dual, &a, &d_dual).compose_linear(&rat(-1), &rat(0));
            assert_eq!(lhs.deg_i(), rhs.deg_i(), "pair {p}");
            let kappa = lhs.leading() / rhs.leading();
            assert_eq!(lhs, rhs.scale(&kappa), "pair {p}, shift {d}");
        }
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(KrallMeixnerFamily::new(rat(2), -1, pair(&[1], &[1])).is_err());
        assert!(KrallMeixnerFamily::new(rat_pq(1, 2), 0, pair(&[1], &[1])).is_err());
        // zero must be normalized away first
        assert!(KrallMeixnerFamily::new(rat_pq(1, 2), -1, pair(&[0, 1], &[1])).is_err());
        // {0, 1, 2} not covered by {1} and (2 - {1})
        assert!(KrallMeixnerFamily::new(rat_pq(1, 2), -2, pair(&[1], &[1])).is_err());
    }

    #[test]
    fn two_point_family_shape() {
        let fam = KrallMeixnerFamily::new(rat_pq(1, 2), -1, pair(&[1], &[1])).unwrap();
        assert_eq!(fam.c(), 3);
        assert_eq!(fam.pair().f1.involution(), fs(&[1]));
        assert_eq!(fam.nodes(), &FiniteSet::empty());
        assert_eq!(fam.operator_order(), 3);
        for n in 0..=6i64 {
            assert_eq!(fam.poly(n).unwrap().deg_i(), n);
        }
        // mass is a bare geometric term with the point 1 removed
        let nu = fam.nu().unwrap();
        assert_eq!(nu.mass_at(0).unwrap(), rat(1));
        assert_eq!(nu.mass_at(1).unwrap(), rat(0));
        assert_eq!(nu.mass_at(4).unwrap(), rat_pq(1, 16));
    }

    #[test]
    fn family_orthogonality_spot() {
        let fam = KrallMeixnerFamily::new(rat_pq(1, 2), -1, pair(&[1], &[1])).unwrap();
        let nu = fam.nu().unwrap();
        let q: Vec<Poly> = (0..=4).map(|n| fam.poly(n).unwrap()).collect();
        for m in 0..q.len() {
            for n in 0..m {
                assert_eq!(nu.inner_product_exact(&q[m], &q[n]).unwrap(), rat(0));
            }
            assert!(nu.inner_product_exact(&q[m], &q[m]).unwrap().is_positive());
        }
    }

    #[test]
    fn norm_ratio_is_constant() {
        let fam = KrallMeixnerFamily::new(rat_pq(1, 2), -1, pair(&[1], &[1])).unwrap();
        let nu = fam.nu().unwrap();
        for n in 0..=5u64 {
            let q = fam.poly(n as i64).unwrap();
            let norm = nu.inner_product_exact(&q, &q).unwrap();
            assert_eq!(norm, rat(8) * fam.norm_reference(n), "n = {n}");
        }
    }

    #[test]
    fn sign_condition_matches_admissibility() {
        for (c_hat, p, want) in [
            (-1i64, pair(&[1], &[1]), true),
            // node at 2 makes the mass negative at the origin
            (-1, pair(&[1, 2], &[1]), false),
            (-1, pair(&[1], &[1, 2]), true),
            // intersection part puts a node at 1, so the origin mass flips
            (-2, pair(&[1, 2], &[1, 2]), false),
            (-2, pair(&[1, 2], &[2]), true),
        ] {
            let fam = KrallMeixnerFamily::new(rat_pq(1, 2), c_hat, p.clone()).unwrap();
            assert_eq!(fam.positivity().admissible, want, "pair {p}");
            assert_eq!(fam.omega_sign_condition(), want, "pair {p}");
        }
    }

    #[test]
    fn covering_pairs_force_shared_element() {
        // zero-free covering pairs always contain -c_hat in both sets, and
        // the node set never reaches it or the origin
        for c_hat in [-1i64, -2, -3] {
            for bits1 in 0u32..32 {
                for bits2 in 0u32..32 {
                    let f1 = fs(&(1..=5).filter(|i| bits1 >> (i - 1) & 1 == 1).collect::<Vec<_>>());
                    let f2 = fs(&(1..=5).filter(|i| bits2 >> (i - 1) & 1 == 1).collect::<Vec<_>>());
                    let p = SetPair::new(f1, f2);
                    if !covering_holds(c_hat, &p) {
                        continue;
                    }
                    assert!(p.f1.contains(-c_hat), "{c_hat}, {p}");
                    assert!(p.f2.contains(-c_hat), "{c_hat}, {p}");
                    let nodes = measure_nodes(c_hat, &p);
                    assert!(!nodes.contains(-c_hat), "{c_hat}, {p}");
                    assert!(!nodes.contains(0), "{c_hat}, {p}");
                }
            }
        }
    }

    #[test]
    fn reduction_reproduces_degenerate_measure() {
        // (-1; {0,1,3}, {2}) reduces to a Christoffel form translated by 2
        let p0 = pair(&[0, 1, 3], &[2]);
        let a = rat_pq(2, 5);
        let reduced = normalize_pair(-1, &p0).unwrap();
        let (d, u) = match &reduced.canonical {
            CanonicalForm::Christoffel { d, pair } => (*d, pair.clone()),
            other => panic!("expected Christoffel form, got {other:?}"),
        };
        let chr = ChristoffelMeixner::new(a.clone(), rat(d), u).unwrap();
        let lhs = deformed_measure(&a, -1, &p0).unwrap();
        let scale = reduced.scale(&a);
        for x in 0..=30i64 {
            let want = if x < reduced.shift {
                Rat::zero()
            } else {
                &scale * chr.mass_at((x - reduced.shift) as u64)
            };
            assert_eq!(lhs.mass_at(x).unwrap(), want, "x = {x}");
        }
    }

    #[test]
    fn christoffel_mass_forms_agree() {
        let a = rat_pq(1, 3);
        let chr = ChristoffelMeixner::new(a.clone(), rat(1), pair(&[1], &[2])).unwrap();
        let mu = chr.to_measure().unwrap();
        for x in 0..=20u64 {
            assert_eq!(mu.mass_at(x as i64).unwrap(), chr.mass_at(x), "x = {x}");
        }
        // non-integer parameter has no polynomial mass
        let frac = ChristoffelMeixner::new(a, rat_pq(1, 2), pair(&[1], &[])).unwrap();
        assert!(frac.to_measure().is_err());
    }

    #[test]
    fn gamma_form_mass_at_origin() {
        // d = -1 + 1/8: the root at x = 1 cancels the gamma pole, and the
        // origin mass is 1/(1 - eps)
        let d = rat(-1) + rat_pq(1, 8);
        let chr = ChristoffelMeixner::new(rat_pq(1, 2), d, pair(&[1], &[1])).unwrap();
        assert_eq!(chr.limit_mass_at(0).unwrap(), rat_pq(8, 7));
        assert_eq!(chr.limit_mass_at(1).unwrap(), rat(0));
        // integer parameter keeps the gamma factor singular
        let whole = ChristoffelMeixner::new(rat_pq(1, 2), rat(2), pair(&[1], &[1])).unwrap();
        assert!(whole.limit_mass_at(0).is_err());
    }

    #[test]
    fn deleted_mass_point_family() {
        // removing the point 1 from the parameter-2 weight
        let spec = crate::sets::deleted_mass_pair(2, &fs(&[1])).unwrap();
        let a = rat_pq(1, 3);
        let fam = KrallMeixnerFamily::new(a.clone(), spec.c_hat, spec.pair.clone()).unwrap();
        assert!(fam.positivity().admissible);
        let nu = fam.nu().unwrap();
        for x in 0..=12u64 {
            let want = if x == 1 { rat(0) } else { meixner_mass(x, &a, 2).unwrap() };
            assert_eq!(nu.mass_at(x as i64).unwrap(), want, "x = {x}");
        }
        let q: Vec<Poly> = (0..=2).map(|n| fam.poly(n).unwrap()).collect();
        for m in 0..q.len() {
            for n in 0..m {
                assert_eq!(nu.inner_product_exact(&q[m], &q[n]).unwrap(), rat(0));
            }
        }
    }
}
