//! Classical discrete and continuous families entering the determinantal
//! constructions: geometric-lattice polynomials (Meixner normalization with
//! leading coefficient `1/n!`), Laguerre, Hahn, and dual Hahn.
//!
//! Indices are `i64` throughout; a negative index yields the zero
//! polynomial, which is what the determinant rows expect when an entry
//! falls off the family.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::measure::DiscreteMeasure;
use crate::poly::Poly;
use crate::rat::{binom, factorial, pochhammer, pow_i, rat, Rat};
use crate::sets::FiniteSet;
use crate::Error;

/// `C(base, k)` with a polynomial base: `base (base-1) ... (base-k+1) / k!`.
pub fn binom_poly(base: &Poly, k: u64) -> Poly {
    let mut acc = Poly::one();
    for i in 0..k {
        acc = &acc * &(base - &Poly::constant(rat(i as i64)));
    }
    acc.scale(&factorial(k).recip())
}

/// Meixner polynomial `m_n^{a,c}`, leading coefficient `1/n!`:
/// `(a/(1-a))^n sum_j a^{-j} C(x, j) C(-x-c, n-j)`.
/// Zero for negative `n`.
pub fn meixner(n: i64, a: &Rat, c: &Rat) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    let n = n as u64;
    let x = Poly::x();
    let neg_x_c = &(-&x) - &Poly::constant(c.clone());
    let mut sum = Poly::zero();
    for j in 0..=n {
        let term = &binom_poly(&x, j) * &binom_poly(&neg_x_c, n - j);
        sum += &term.scale(&pow_i(a, -(j as i64)));
    }
    sum.scale(&pow_i(&(a / (Rat::one() - a)), n as i64))
}

/// Norm `a^n Gamma(n+c) / (n! (1-a)^{2n+c})` of `m_n^{a,c}` for integer
/// `c` with `n + c >= 1`.
pub fn meixner_norm(n: u64, a: &Rat, c: i64) -> Result<Rat, Error> {
    let nc = n as i64 + c;
    if nc < 1 {
        return Err(Error::DegenerateParameter(alloc::format!(
            "gamma factor at nonpositive integer {nc}"
        )));
    }
    Ok(pow_i(a, n as i64) * factorial((nc - 1) as u64)
        / (factorial(n) * pow_i(&(Rat::one() - a), 2 * n as i64 + c)))
}

/// Scale-free norm `a^n (c)_n / (n! (1-a)^{2n})`: the norm of `m_n^{a,c}`
/// divided by the constant `Gamma(c) (1-a)^{-c}`, well defined for any
/// rational `c` off the nonpositive integers.
pub fn meixner_norm_normalized(n: u64, a: &Rat, c: &Rat) -> Rat {
    pow_i(a, n as i64) * pochhammer(c, n)
        / (factorial(n) * pow_i(&(Rat::one() - a), 2 * n as i64))
}

/// Mass `a^x Gamma(x+c) / x!` of the geometric-lattice measure at `x`, for
/// integer `c >= 1`: the gamma ratio is the polynomial `(x+1)...(x+c-1)`.
pub fn meixner_mass(x: u64, a: &Rat, c: i64) -> Result<Rat, Error> {
    if c < 1 {
        return Err(Error::DegenerateParameter(alloc::format!(
            "mass needs a positive integer parameter, got {c}"
        )));
    }
    Ok(pow_i(a, x as i64) * pochhammer(&rat(x as i64 + 1), (c - 1) as u64))
}

/// Laguerre polynomial `L_n^{alpha}(x) = sum_j (-x)^j / j! C(n+alpha, n-j)`.
/// Zero for negative `n`.
pub fn laguerre(n: i64, alpha: &Rat) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    let n = n as u64;
    let na = rat(n as i64) + alpha;
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        let c = binom(&na, n - j) / factorial(j);
        coeffs.push(if j % 2 == 0 { c } else { -c });
    }
    Poly::new(coeffs)
}

/// Hahn polynomial in the normalization
/// `sum_j (-x)_j (N-n+1)_{n-j} (a+b+1)_{j+n} (a+j+1)_{n-j} /
///  ((2+a+b+N)_n (n-j)! j!)`.
/// Zero for negative `n`. Errors when the normalizing Pochhammer vanishes.
pub fn hahn(n: i64, a: &Rat, b: &Rat, big_n: &Rat) -> Result<Poly, Error> {
    if n < 0 {
        return Ok(Poly::zero());
    }
    let n = n as u64;
    let denom_base = rat(2) + a + b + big_n;
    let denom = pochhammer(&denom_base, n);
    if denom.is_zero() {
        return Err(Error::DegenerateParameter(alloc::format!(
            "Pochhammer (2+a+b+N)_{n} vanishes"
        )));
    }
    let neg_x = -&Poly::x();
    let mut sum = Poly::zero();
    for j in 0..=n {
        let scalar = pochhammer(&(big_n - rat(n as i64) + rat(1)), n - j)
            * pochhammer(&(a + b + Rat::one()), j + n)
            * pochhammer(&(a + rat(j as i64) + Rat::one()), n - j)
            / (factorial(n - j) * factorial(j));
        sum += &neg_x.pochhammer(j).scale(&scalar);
    }
    Ok(sum.scale(&denom.recip()))
}

/// Dual Hahn polynomial of degree `n` in the quadratic spectral variable:
/// `sum_j (-n)_j (-N+j)_{n-j} (a+j+1)_{n-j} / ((-1)^j j!) *
///  prod_{i<j} (y - i(i+a+b+1))`.
pub fn dual_hahn(n: i64, a: &Rat, b: &Rat, big_n: &Rat) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    let n = n as u64;
    let mut sum = Poly::zero();
    let mut node_prod = Poly::one();
    let abp1 = a + b + Rat::one();
    for j in 0..=n {
        if j > 0 {
            let i = rat(j as i64 - 1);
            let node = &i * (&i + &abp1);
            node_prod = &node_prod * &Poly::new(vec![-node, Rat::one()]);
        }
        let mut scalar = pochhammer(&rat(-(n as i64)), j)
            * pochhammer(&(rat(j as i64) - big_n), n - j)
            * pochhammer(&(a + rat(j as i64) + Rat::one()), n - j)
            / factorial(j);
        if j % 2 == 1 {
            scalar = -scalar;
        }
        sum += &node_prod.scale(&scalar);
    }
    sum
}

/// Eigenvalue `n(n+u+1)` of the lattice operator attached to the bounded
/// family, with `u = a + b`.
pub fn theta(n: i64, u: &Rat) -> Rat {
    rat(n) * (rat(n) + u + Rat::one())
}

/// Geometric-lattice measure for integer `c >= 1`, in the normalization
/// with mass `(c)_x a^x / x! = (x+1)_{c-1} a^x / (c-1)!` (the constant
/// gamma factor is divided out to keep every mass rational).
pub fn meixner_measure(a: &Rat, c: i64) -> Result<DiscreteMeasure, Error> {
    if c < 1 {
        return Err(Error::DegenerateParameter(alloc::format!(
            "measure parameter must be a positive integer, got {c}"
        )));
    }
    let density = Poly::new(alloc::vec![Rat::one(), Rat::one()])
        .pochhammer((c - 1) as u64)
        .scale(&factorial((c - 1) as u64).recip());
    DiscreteMeasure::poly_geometric(density, a.clone(), FiniteSet::empty())
}

/// Bounded-lattice measure on `{0..N}` as a finite mass table, normalized
/// as in `hahn_mass`. Errors when a Pochhammer factor vanishes somewhere
/// on the lattice, which would break the three-term recurrence.
pub fn hahn_measure(a: &Rat, b: &Rat, n_points: u64) -> Result<DiscreteMeasure, Error> {
    for name in ["a", "b"] {
        let v = if name == "a" { a } else { b };
        if v.is_integer() {
            let vi = v.to_integer();
            if vi <= rat(-1).to_integer() && vi >= rat(-(n_points as i64)).to_integer() {
                return Err(Error::DegenerateParameter(alloc::format!(
                    "parameter {name} = {v} lies in the excluded lattice -1..-N"
                )));
            }
        }
    }
    let table: Result<Vec<Rat>, Error> =
        (0..=n_points).map(|x| hahn_mass(x, a, b, n_points)).collect();
    Ok(DiscreteMeasure::finite_table(table?, FiniteSet::empty()))
}

/// Positivity of the bounded-lattice measure: all masses share one sign
/// exactly when both parameters exceed -1 or both lie below -N.
pub fn hahn_measure_positive(a: &Rat, b: &Rat, n_points: u64) -> bool {
    let neg_n = rat(-(n_points as i64));
    (a > &rat(-1) && b > &rat(-1)) || (a < &neg_n && b < &neg_n)
}

/// Normalized mass `(a+1)_x (b+1)_{N-x} / (x! (N-x)!)` of the bounded-lattice
/// measure at `x in {0..N}` (the gamma-function prefactors are dropped; they
/// are constant across the support).
pub fn hahn_mass(x: u64, a: &Rat, b: &Rat, n_points: u64) -> Result<Rat, Error> {
    if x > n_points {
        return Err(Error::InvalidSpec(alloc::format!(
            "point {x} outside the lattice 0..{n_points}"
        )));
    }
    let nx = n_points - x;
    Ok(
        pochhammer(&(a + Rat::one()), x) * pochhammer(&(b + Rat::one()), nx)
            / (factorial(x) * factorial(nx)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_pq;

    #[test]
    fn meixner_base_cases() {
        let a = rat_pq(1, 2);
        let c = rat(3);
        assert_eq!(meixner(0, &a, &c), Poly::one());
        // m_1 = x - ac/(1-a)
        let m1 = meixner(1, &a, &c);
        let expect = Poly::new(vec![-(&a * &c) / (Rat::one() - &a), Rat::one()]);
        assert_eq!(m1, expect);
        assert!(meixner(-1, &a, &c).is_zero());
        assert!(meixner(-3, &a, &c).is_zero());
    }

    #[test]
    fn meixner_leading_coefficient() {
        let a = rat_pq(2, 5);
        let c = rat_pq(-7, 3);
        for n in 0..7i64 {
            let m = meixner(n, &a, &c);
            assert_eq!(m.deg_i(), n);
            assert_eq!(m.leading(), factorial(n as u64).recip());
        }
    }

    #[test]
    fn meixner_difference_equation() {
        // a(x+c) f(x+1) - (x + a(x+c)) f(x) + x f(x-1) = n(a-1) f(x)
        let a = rat_pq(1, 2);
        let c = rat_pq(5, 3);
        let x = Poly::x();
        let axc = Poly::new(vec![&a * &c, a.clone()]);
        for n in 0..6i64 {
            let f = meixner(n, &a, &c);
            let lhs = &(&(&axc * &f.shift(&Rat::one())) - &(&(&x + &axc) * &f))
                + &(&x * &f.shift(&rat(-1)));
            let rhs = f.scale(&(rat(n) * (&a - Rat::one())));
            assert_eq!(lhs, rhs, "failed at degree {n}");
        }
    }

    #[test]
    fn meixner_packing_identity() {
        // for nonpositive integer c and n >= -c+1:
        // m_n^{a,c}(x) = prod_{j=0}^{-c}(x-j) / prod_{j=0}^{-c}(n-j)
        //               * m_{n+c-1}^{a,2-c}(x+c-1)
        let a = rat_pq(1, 2);
        for c in [0i64, -1, -2] {
            for n in (-c + 1)..(-c + 4) {
                let lhs = meixner(n, &a, &rat(c));
                let roots: Vec<Rat> = (0..=-c).map(rat).collect();
                let numer = Poly::from_roots(&roots);
                let mut denom = Rat::one();
                for j in 0..=-c {
                    denom *= rat(n - j);
                }
                let tail = meixner(n + c - 1, &a, &rat(2 - c)).shift(&rat(c - 1));
                let rhs = (&numer * &tail).scale(&denom.recip());
                assert_eq!(lhs, rhs, "failed at c={c} n={n}");
            }
        }
    }

    #[test]
    fn meixner_norm_value() {
        let a = rat_pq(1, 2);
        // n=2, c=3: a^2 * 4! / (2! * (1/2)^7) = 6 * 2^7 / 4... compute directly
        let got = meixner_norm(2, &a, 3).unwrap();
        let expect = rat_pq(1, 4) * rat(24) / (rat(2) * pow_i(&rat_pq(1, 2), 7));
        assert_eq!(got, expect);
        assert!(meixner_norm(0, &a, 0).is_err());
    }

    #[test]
    fn laguerre_base_cases() {
        let al = rat(-2);
        assert_eq!(laguerre(0, &al), Poly::one());
        // L_1^alpha = -x + alpha + 1
        assert_eq!(laguerre(1, &al), Poly::new(vec![rat(-1), rat(-1)]));
        assert!(laguerre(-2, &al).is_zero());
        for n in 0..6i64 {
            let l = laguerre(n, &al);
            assert_eq!(l.deg_i(), n);
            // leading coefficient (-1)^n / n!
            let lc = factorial(n as u64).recip();
            assert_eq!(l.leading(), if n % 2 == 0 { lc } else { -lc });
        }
    }

    #[test]
    fn laguerre_derivative_lowers_index() {
        // (L_n^alpha)' = -L_{n-1}^{alpha+1}
        let al = rat_pq(-7, 2);
        for n in 0..6i64 {
            let lhs = laguerre(n, &al).derivative(1);
            let rhs = -&laguerre(n - 1, &(&al + &Rat::one()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn laguerre_differential_equation() {
        // x y'' + (alpha + 1 - x) y' + n y = 0
        let al = rat_pq(3, 4);
        let x = Poly::x();
        for n in 0..6i64 {
            let y = laguerre(n, &al);
            let term = &(&x * &y.derivative(2))
                + &(&Poly::new(vec![&al + &Rat::one(), rat(-1)]) * &y.derivative(1));
            let lhs = &term + &y.scale(&rat(n));
            assert!(lhs.is_zero(), "failed at degree {n}");
        }
    }

    #[test]
    fn hahn_eigen_equation() {
        // B(x) f(x+1) - (B(x)+D(x)) f(x) + D(x) f(x-1) = n(n+a+b+1) f(x)
        // with B = (x+a+1)(x-N), D = x(x-b-N-1)
        for (a, b) in [(rat(2), rat(1)), (rat_pq(1, 3), rat_pq(-1, 2))] {
            let big_n = rat(7);
            let x = Poly::x();
            let bpoly = &(&x + &Poly::constant(&a + &Rat::one()))
                * &(&x - &Poly::constant(big_n.clone()));
            let dpoly = &x * &(&x - &Poly::constant(&b + &big_n + &Rat::one()));
            for n in 0..5i64 {
                let f = hahn(n, &a, &b, &big_n).unwrap();
                assert_eq!(f.deg_i(), n);
                let lhs = &(&(&bpoly * &f.shift(&Rat::one())) - &(&(&bpoly + &dpoly) * &f))
                    + &(&dpoly * &f.shift(&rat(-1)));
                let lam = rat(n) * (rat(n) + &a + &b + Rat::one());
                assert_eq!(lhs, f.scale(&lam), "failed at degree {n}, a={a}, b={b}");
            }
        }
        assert!(hahn(-1, &rat(2), &rat(1), &rat(7)).unwrap().is_zero());
    }

    #[test]
    fn hahn_dual_hahn_duality() {
        // h_n(x) prod_{i<x} (i+a+1)(i-N) = h_n(0) R_x(theta_n) on the lattice
        let (a, b, big_n) = (rat(2), rat(1), rat(7));
        let u = &a + &b;
        for n in 0..4i64 {
            let h = hahn(n, &a, &b, &big_n).unwrap();
            let h0 = h.eval_i(0);
            let mut prefix = Rat::one();
            for x in 0..5i64 {
                let lhs = h.eval_i(x) * &prefix;
                let rhs = &h0 * dual_hahn(x, &a, &b, &big_n).eval(&theta(n, &u));
                assert_eq!(lhs, rhs, "failed at n={n} x={x}");
                prefix *= (rat(x) + &a + Rat::one()) * (rat(x) - &big_n);
            }
        }
    }

    #[test]
    fn dual_hahn_degrees() {
        let (a, b, big_n) = (rat_pq(-3, 1), rat_pq(-2, 1), rat(10));
        for n in 0..5i64 {
            assert_eq!(dual_hahn(n, &a, &b, &big_n).deg_i(), n);
        }
        assert!(dual_hahn(-1, &a, &b, &big_n).is_zero());
    }

    #[test]
    fn meixner_measure_masses() {
        // c = 1: mass is a^x; c = 3: mass is (x+1)(x+2)/2 * a^x
        let a = rat_pq(1, 2);
        let mu1 = meixner_measure(&a, 1).unwrap();
        assert_eq!(mu1.mass_at(4).unwrap(), rat_pq(1, 16));
        let mu3 = meixner_measure(&a, 3).unwrap();
        assert_eq!(mu3.mass_at(2).unwrap(), rat(6) * rat_pq(1, 4));
        assert_eq!(mu3.mass_at(0).unwrap(), rat(1));
        assert!(meixner_measure(&a, 0).is_err());
    }

    #[test]
    fn meixner_norm_matches_measure_moments() {
        let a = rat_pq(1, 2);
        let mu = meixner_measure(&a, 3).unwrap();
        for n in 0..4i64 {
            let m = meixner(n, &a, &rat(3));
            let got = mu.inner_product_exact(&m, &m).unwrap();
            // the measure drops the Gamma(c) factor, so the moments do too
            let expect = meixner_norm(n as u64, &a, 3).unwrap() / factorial(2);
            assert_eq!(got, expect, "norm mismatch at degree {n}");
            assert_eq!(
                expect,
                meixner_norm_normalized(n as u64, &a, &rat(3)) * pow_i(&(Rat::one() - &a), -3),
            );
        }
    }

    #[test]
    fn hahn_measure_table() {
        // a = b = 0, N = 3: every normalized mass is 1
        let mu = hahn_measure(&rat(0), &rat(0), 3).unwrap();
        for x in 0..=3 {
            assert_eq!(mu.mass_at(x).unwrap(), rat(1));
        }
        assert!(hahn_measure(&rat(-2), &rat(0), 3).is_err());
        assert!(hahn_measure_positive(&rat(0), &rat(0), 3));
        assert!(hahn_measure_positive(&rat(-5), &rat_pq(-9, 2), 4));
        assert!(!hahn_measure_positive(&rat(-2), &rat(0), 5));
    }

    #[test]
    fn hahn_orthogonality_small() {
        let (a, b, big_n) = (rat(1), rat(2), rat(6));
        let mu = hahn_measure(&a, &b, 6).unwrap();
        for n in 0..=4i64 {
            for m in 0..n {
                let hn = hahn(n, &a, &b, &big_n).unwrap();
                let hm = hahn(m, &a, &b, &big_n).unwrap();
                assert_eq!(
                    mu.inner_product_exact(&hn, &hm).unwrap(),
                    rat(0),
                    "pair ({n},{m}) not orthogonal"
                );
            }
        }
    }

    #[test]
    fn hahn_mass_values() {
        // integer a=1, b=1, N=2: masses (a+1)_x (b+1)_{N-x} / (x!(N-x)!)
        let a = rat(1);
        let b = rat(1);
        assert_eq!(hahn_mass(0, &a, &b, 2).unwrap(), rat(3));
        assert_eq!(hahn_mass(1, &a, &b, 2).unwrap(), rat(4));
        assert_eq!(hahn_mass(2, &a, &b, 2).unwrap(), rat(3));
        assert!(hahn_mass(3, &a, &b, 2).is_err());
    }
}
