//! Krall-Hahn families: orthogonal polynomials for Christoffel transforms
//! of the finite Hahn measure at integer parameter degenerations, built
//! from determinants whose block rows mix dual Hahn values with rational
//! correction factors.
//!
//! The printed construction divides the determinant by an explicit
//! normalizer that vanishes at certain degrees.  Both sides vanish
//! together, so every block minor is computed here as a polynomial in the
//! degree index and the quotient is reduced before evaluating; that makes
//! the members well defined at every admissible degree.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::classical::{dual_hahn, hahn, hahn_mass};
use crate::matrix::PolyMatrix;
use crate::measure::DiscreteMeasure;
use crate::poly::Poly;
use crate::rat::{factorial, pochhammer, rat, Rat};
use crate::ratfunc::RatFunc;
use crate::sets::{covering_holds, deleted_mass_pair, measure_nodes, FiniteSet, SetPair};
use crate::{Error, Result};

/// Double product `prod_{h=1}^{r-1} prod_{i=1}^{h} (2x + u - i - h)`.
pub fn psi(r: i64, u: &Rat) -> Poly {
    let mut out = Poly::one();
    for h in 1..r {
        for i in 1..=h {
            out = &out * &Poly::new(vec![u - rat(i + h), rat(2)]);
        }
    }
    out
}

/// Single product `prod_{i=1}^{r1-1} (x + a - r + 1)_{r1-i}`.
pub fn phi(r: i64, r1: i64, a: &Rat) -> Poly {
    let base = Poly::new(vec![a - rat(r) + Rat::one(), Rat::one()]);
    let mut out = Poly::one();
    for i in 1..r1 {
        out = &out * &base.pochhammer((r1 - i) as u64);
    }
    out
}

/// The four scalar correction factors attached to the lowering structure,
/// indexed `h = 1..4`.  `j = 0` gives 1 for every kind.
pub fn xi(h: u8, x: &Rat, j: i64, a: &Rat, b: &Rat, big_n: &Rat) -> Result<Rat> {
    if j < 0 {
        return Err(Error::DegenerateParameter(format!(
            "negative factor length {j}"
        )));
    }
    let j = j as u64;
    let sign = if j.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    let xj = x - rat(j as i64);
    match h {
        1 | 2 => {
            let den = pochhammer(&(&xj + a + b + big_n + rat(2)), j);
            if den.is_zero() {
                return Err(Error::DegenerateParameter(format!(
                    "factor denominator vanishes at x = {x}, j = {j}"
                )));
            }
            let num = if h == 1 {
                sign * pochhammer(&(&xj - big_n), j) * pochhammer(&(&xj + a + Rat::one()), j)
            } else {
                pochhammer(&(&xj + b + Rat::one()), j) * pochhammer(&(&xj - big_n), j)
            };
            Ok(num / den)
        }
        3 => Ok(pochhammer(&(&xj + a + Rat::one()), j)),
        4 => Ok(sign * pochhammer(&(&xj + b + Rat::one()), j)),
        _ => Err(Error::DegenerateParameter(format!("no factor kind {h}"))),
    }
}

/// Quartet of exclusion sets. The first two act on the left edge of the
/// support and must be positive; the last two mark deleted points and may
/// contain 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quartet {
    pub f1: FiniteSet,
    pub f2: FiniteSet,
    pub f3: FiniteSet,
    pub f4: FiniteSet,
}

impl Quartet {
    pub fn new(f1: FiniteSet, f2: FiniteSet, f3: FiniteSet, f4: FiniteSet) -> Self {
        Quartet { f1, f2, f3, f4 }
    }

    fn slots(&self) -> [&FiniteSet; 4] {
        [&self.f1, &self.f2, &self.f3, &self.f4]
    }

    /// Order of the banded operator the members satisfy:
    /// `1 + sum_i (sum F_i - C(k_i, 2))`.
    pub fn operator_order(&self) -> i64 {
        let mut r = 1;
        for s in self.slots() {
            let k = s.len() as i64;
            r += s.sum() - k * (k - 1) / 2;
        }
        r
    }
}

impl core::fmt::Display for Quartet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.f1, self.f2, self.f3, self.f4)
    }
}

/// Krall-Hahn family at a negative integer left parameter.  The right
/// parameter is rational in general; when it is also a negative integer
/// the mirrored covering condition applies and the measure loses its
/// Gamma factors entirely.
#[derive(Clone, Debug)]
pub struct KrallHahnFamily {
    a_hat: i64,
    b_hat: Rat,
    big_n: i64,
    quartet: Quartet,
    a: Rat,
    b: Rat,
    n_tilde: i64,
    m_sizes: [usize; 4],
    nodes_p: FiniteSet,
    nodes_i: Option<FiniteSet>,
    /// Reduced coefficient of the sliding classical row per column; the
    /// first entry is the degree gate evaluated at the member index.
    coefs: Vec<RatFunc>,
}

impl KrallHahnFamily {
    pub fn new(a_hat: i64, b_hat: Rat, big_n: i64, quartet: Quartet) -> Result<Self> {
        if big_n < 1 {
            return Err(Error::DegenerateParameter(format!(
                "support length must be a positive integer, got {big_n}"
            )));
        }
        if a_hat > -1 {
            return Err(Error::DegenerateParameter(format!(
                "left parameter must be a negative integer, got {a_hat}"
            )));
        }
        if quartet.f1.min() == 0 || quartet.f2.min() == 0 {
            return Err(Error::DegenerateParameter(format!(
                "edge sets must consist of positive integers, got {quartet}"
            )));
        }
        for s in quartet.slots() {
            if s.min() < -1 || (s.min() == -1 && !s.is_empty()) {
                return Err(Error::DegenerateParameter(format!(
                    "negative exclusion in {quartet}"
                )));
            }
        }
        let pair_p = SetPair::new(quartet.f4.clone(), quartet.f2.clone());
        if !covering_holds(a_hat + 1, &pair_p) {
            return Err(Error::DegenerateParameter(format!(
                "sets {} and {} do not cover 0..{}",
                quartet.f4,
                quartet.f2,
                -a_hat - 1
            )));
        }
        let two_sided = b_hat.is_integer() && b_hat <= rat(-1);
        let pair_i = SetPair::new(quartet.f3.clone(), quartet.f1.clone());
        if two_sided {
            let bh: i64 = b_hat.to_integer().try_into().map_err(|_| {
                Error::DegenerateParameter(format!("right parameter {b_hat} out of range"))
            })?;
            if !covering_holds(bh + 1, &pair_i) {
                return Err(Error::DegenerateParameter(format!(
                    "sets {} and {} do not cover 0..{}",
                    quartet.f3,
                    quartet.f1,
                    -bh - 1
                )));
            }
        }
        if 2 * quartet.f3.max() >= big_n || 2 * quartet.f4.max() >= big_n {
            return Err(Error::DegenerateParameter(format!(
                "deleted points of {quartet} reach past the middle of 0..{big_n}"
            )));
        }
        let a = rat(a_hat + quartet.f2.max() + quartet.f4.max() + 2);
        let b = &b_hat + rat(quartet.f1.max() + quartet.f3.max() + 2);
        let n_tilde = big_n - quartet.f3.max() - quartet.f4.max() - 2;
        if rat(n_tilde) < -(rat(2) + &a + &b) || n_tilde < 0 {
            return Err(Error::DegenerateParameter(format!(
                "effective support length {n_tilde} is too short for parameters \
                 {a}, {b}"
            )));
        }
        let g: Vec<FiniteSet> = quartet.slots().iter().map(|s| s.involution()).collect();
        let m_sizes = [g[0].len(), g[1].len(), g[2].len(), g[3].len()];
        let nodes_p = measure_nodes(a_hat + 1, &pair_p);
        let nodes_i = if two_sided {
            let bh: i64 = b_hat.to_integer().try_into().unwrap();
            Some(measure_nodes(bh + 1, &pair_i))
        } else {
            None
        };
        let coefs = column_coefficients(&g, &m_sizes, &a, &b, n_tilde)?;
        Ok(KrallHahnFamily {
            a_hat,
            b_hat,
            big_n,
            quartet,
            a,
            b,
            n_tilde,
            m_sizes,
            nodes_p,
            nodes_i,
            coefs,
        })
    }

    /// Removing the masses at `a_set` from the Hahn measure with
    /// nonnegative integer left parameter `c` and right parameter `d`
    /// produces a one-sided family.
    pub fn from_one_sided_deletion(c: i64, d: Rat, big_n: i64, a_set: &FiniteSet) -> Result<Self> {
        if c < 0 {
            return Err(Error::DegenerateParameter(format!(
                "left parameter must be a nonnegative integer, got {c}"
            )));
        }
        let spec = deleted_mass_pair(c + 1, a_set)?;
        let quartet = Quartet::new(
            FiniteSet::empty(),
            spec.pair.f2.clone(),
            FiniteSet::empty(),
            spec.pair.f1.clone(),
        );
        KrallHahnFamily::new(spec.c_hat - 1, d, big_n, quartet)
    }

    /// Removing the masses at `a_set` and at the reflection of `b_set`
    /// produces a two-sided family; all parameters must be nonnegative
    /// integers here.
    pub fn from_two_sided_deletion(
        c: i64,
        d: i64,
        big_n: i64,
        a_set: &FiniteSet,
        b_set: &FiniteSet,
    ) -> Result<Self> {
        if c < 0 || d < 0 {
            return Err(Error::DegenerateParameter(format!(
                "parameters must be nonnegative integers, got {c}, {d}"
            )));
        }
        let spec_p = deleted_mass_pair(c + 1, a_set)?;
        let spec_i = deleted_mass_pair(d + 1, b_set)?;
        let quartet = Quartet::new(
            spec_i.pair.f2.clone(),
            spec_p.pair.f2.clone(),
            spec_i.pair.f1.clone(),
            spec_p.pair.f1.clone(),
        );
        KrallHahnFamily::new(spec_p.c_hat - 1, rat(spec_i.c_hat - 1), big_n, quartet)
    }

    pub fn a_hat(&self) -> i64 {
        self.a_hat
    }

    pub fn b_hat(&self) -> &Rat {
        &self.b_hat
    }

    pub fn big_n(&self) -> i64 {
        self.big_n
    }

    pub fn quartet(&self) -> &Quartet {
        &self.quartet
    }

    pub fn derived_params(&self) -> (Rat, Rat, i64) {
        (self.a.clone(), self.b.clone(), self.n_tilde)
    }

    pub fn two_sided(&self) -> bool {
        self.nodes_i.is_some()
    }

    pub fn nodes(&self) -> (&FiniteSet, Option<&FiniteSet>) {
        (&self.nodes_p, self.nodes_i.as_ref())
    }

    pub fn block_size(&self) -> usize {
        self.m_sizes.iter().sum()
    }

    /// Index of the last orthogonal member.
    pub fn last_member(&self) -> i64 {
        self.n_tilde + (self.m_sizes[2] + self.m_sizes[3]) as i64
    }

    pub fn operator_order(&self) -> i64 {
        self.quartet.operator_order()
    }

    /// Degree gate at index `n`; the degree-`n` member has degree exactly
    /// `n` when this is nonzero.
    pub fn omega(&self, n: i64) -> Result<Rat> {
        self.coefs[0].eval(&rat(n)).ok_or_else(|| {
            Error::Degeneracy(format!("degree gate has a pole at index {n}"))
        })
    }

    /// The gate must be nonzero at 0 through one past the last member for
    /// the orthogonality theorem to apply.
    pub fn gate_open(&self) -> bool {
        (0..=self.last_member() + 1).all(|n| match self.omega(n) {
            Ok(v) => !v.is_zero(),
            Err(_) => false,
        })
    }

    /// Degree-`n` member.
    pub fn poly(&self, n: i64) -> Result<Poly> {
        let shift = rat(-self.quartet.f4.max() - 1);
        let mut out = Poly::zero();
        for (idx, coef) in self.coefs.iter().enumerate() {
            let c = coef.eval(&rat(n)).ok_or_else(|| {
                Error::Degeneracy(format!("column weight has a pole at index {n}"))
            })?;
            if c.is_zero() {
                continue;
            }
            let row = hahn(n - idx as i64, &self.a, &self.b, &rat(self.n_tilde))?;
            out += &row.shift(&shift).scale(&c);
        }
        Ok(out)
    }

    /// Orthogonality measure, tabulated on `0..=N`.
    pub fn nu(&self) -> DiscreteMeasure {
        let n_big = self.big_n;
        let mut excluded: Vec<i64> = self.quartet.f4.iter().collect();
        if self.two_sided() {
            excluded.extend(self.quartet.f3.iter().map(|f| n_big - f));
        }
        let excluded = FiniteSet::new(excluded);
        let table: Vec<Rat> = (0..=n_big)
            .map(|x| {
                if excluded.contains(x) {
                    return Rat::zero();
                }
                self.raw_mass(x)
            })
            .collect();
        DiscreteMeasure::finite_table(table, excluded)
    }

    /// Mass at one support point, before deletion bookkeeping.  One-sided
    /// families keep a Gamma tail on the right, normalized to the
    /// Pochhammer form; two-sided families are pure node products.
    fn raw_mass(&self, x: i64) -> Rat {
        let n_big = self.big_n;
        let mut mass = Rat::one();
        for h in self.nodes_p.iter() {
            mass *= rat(x - h);
        }
        match &self.nodes_i {
            Some(nodes) => {
                for h in nodes.iter() {
                    mass *= rat(n_big - x - h);
                }
            }
            None => {
                for f in self.quartet.f1.iter() {
                    mass *= rat(n_big - x) + &self.b_hat + Rat::one() + rat(f);
                }
                for f in self.quartet.f3.iter() {
                    mass *= rat(n_big - f - x);
                }
                mass *= pochhammer(&(&self.b_hat + Rat::one()), (n_big - x) as u64)
                    / factorial((n_big - x) as u64);
            }
        }
        mass
    }

    /// Exact Gram entry `sum_x p_n(x) p_m(x) nu(x)`.
    pub fn inner(&self, n: i64, m: i64) -> Result<Rat> {
        let mu = self.nu();
        mu.inner_product_exact(&self.poly(n)?, &self.poly(m)?)
    }

    /// Pointwise agreement with a plain Hahn measure with masses removed,
    /// up to one fixed positive constant: the left factorial, joined by
    /// the right one when both edges are integral.
    pub fn matches_deleted_hahn(&self, c: i64, d: &Rat) -> Result<bool> {
        let mut scale = factorial(c as u64);
        if self.two_sided() {
            let dv: u64 = match d.is_integer().then(|| d.to_integer().try_into().ok()).flatten() {
                Some(v) => v,
                None => return Ok(false),
            };
            scale *= factorial(dv);
        }
        for x in 0..=self.big_n {
            let expect = if self.quartet.f4.contains(x)
                || (self.two_sided() && self.quartet.f3.contains(self.big_n - x))
            {
                Rat::zero()
            } else {
                hahn_mass(x as u64, &rat(c), d, self.big_n as u64)? * &scale
            };
            if self.nu().mass_at(x)? != expect {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Reduced column weights for the sliding-row expansion: entry `j` is the
/// minor of the block matrix without column `j`, over the normalizer and
/// the cleared denominators, as a rational function of the degree index.
fn column_coefficients(
    g: &[FiniteSet],
    m_sizes: &[usize; 4],
    a: &Rat,
    b: &Rat,
    n_tilde: i64,
) -> Result<Vec<RatFunc>> {
    let m = m_sizes.iter().sum::<usize>();
    let nn = rat(n_tilde);
    let ab = a + b;
    // denominators cleared from columns: base n - m + a + b + N + 2,
    // length m - j for column j
    let den_base = Poly::new(vec![-rat(m as i64) + &ab + &nn + rat(2), Rat::one()]);
    // per-column block entries as polynomials in the degree index; the
    // correction-factor subscripts telescope so each Pochhammer base is
    // column independent and only the length m - j varies
    let shifted = |c: Rat| Poly::new(vec![c - rat(m as i64), Rat::one()]);
    let mut cleared = Vec::with_capacity(m);
    for (slot, set) in g.iter().enumerate() {
        for gv in set.iter() {
            let (ra, rb, rn) = match slot {
                0 => (-b.clone(), -a.clone(), &ab + &nn),
                1 => (-a.clone(), -b.clone(), &ab + &nn),
                2 => (-b.clone(), -a.clone(), -&nn - rat(2)),
                _ => (-a.clone(), -b.clone(), -&nn - rat(2)),
            };
            let dual = dual_hahn(gv, &ra, &rb, &rn);
            let mut row = Vec::with_capacity(m + 1);
            for j in 0..=m as i64 {
                // spectral argument (j - 1 - n)(j - a - b - n) in n
                let t = Poly::new(vec![rat(j - 1), rat(-1)]);
                let arg = &t * &(&t - &Poly::constant(&ab - Rat::one()));
                let value = dual.compose(&arg);
                let len = (m as i64 - j) as u64;
                let sign = if len.is_multiple_of(2) { rat(1) } else { rat(-1) };
                let factor = match slot {
                    0 => &shifted(-&nn).pochhammer(len).scale(&sign)
                        * &shifted(a + Rat::one()).pochhammer(len),
                    1 => &shifted(b + Rat::one()).pochhammer(len)
                        * &shifted(-&nn).pochhammer(len),
                    2 => &shifted(a + Rat::one()).pochhammer(len)
                        * &den_base.pochhammer(len),
                    _ => &shifted(b + Rat::one()).pochhammer(len).scale(&sign)
                        * &den_base.pochhammer(len),
                };
                row.push(&value * &factor);
            }
            cleared.push(row);
        }
    }
    // normalizer evaluated at the degree index
    let norm = &(&phi(m as i64, (m_sizes[0] + m_sizes[2]) as i64, a)
        * &phi(m as i64, (m_sizes[1] + m_sizes[3]) as i64, b))
        * &psi(m as i64, &ab);
    let mut coefs = Vec::with_capacity(m + 1);
    for drop in 0..=m {
        let minor = if m == 0 {
            Poly::one()
        } else {
            let kept: Vec<usize> = (0..=m).filter(|&j| j != drop).collect();
            PolyMatrix::from_fn(m, |i, j| cleared[i][kept[j]].clone()).det()?
        };
        let mut den = norm.clone();
        for (j, _) in (0..=m).enumerate().filter(|&(j, _)| j != drop) {
            den = &den * &den_base.pochhammer((m - j) as u64);
        }
        coefs.push(RatFunc::new(minor, den));
    }
    Ok(coefs)
}
