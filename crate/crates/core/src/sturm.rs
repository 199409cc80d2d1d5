//! Exact real-root counting through Sturm sequences over the rationals.
//!
//! The positivity arguments for the continuous weights reduce to "this
//! polynomial has no root on [0, inf)", which is decided here with no
//! floating point involved.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::poly::Poly;
use crate::rat::Rat;

/// `p` divided by `gcd(p, p')`: same distinct roots, all simple. Monic.
pub fn square_free_part(p: &Poly) -> Poly {
    assert!(!p.is_zero(), "square-free part of the zero polynomial");
    if p.degree() == Some(0) {
        return Poly::one();
    }
    let g = p.gcd(&p.derivative(1));
    p.div_exact(&g).into_monic()
}

/// Evaluation point for sign queries, closed under the two infinities.
#[derive(Clone, Debug)]
pub enum Endpoint {
    NegInf,
    Finite(Rat),
    PosInf,
}

fn sign_at(p: &Poly, at: &Endpoint) -> i8 {
    if p.is_zero() {
        return 0;
    }
    let s = match at {
        Endpoint::Finite(x) => p.eval(x),
        Endpoint::PosInf => p.leading(),
        Endpoint::NegInf => {
            let lead = p.leading();
            if p.degree().unwrap_or(0) % 2 == 1 {
                -lead
            } else {
                lead
            }
        }
    };
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of a square-free polynomial: `p, p', then negated remainders`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return seq;
    }
    seq.push(p.derivative(1));
    loop {
        let len = seq.len();
        let (_, rem) = seq[len - 2].divrem(&seq[len - 1]);
        if rem.is_zero() {
            break;
        }
        seq.push(-&rem);
        if seq.last().unwrap().degree() == Some(0) {
            break;
        }
    }
    seq
}

/// Number of sign changes along the chain at the given point, zeros skipped.
pub fn variations(seq: &[Poly], at: &Endpoint) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let s = sign_at(p, at);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &Poly) -> usize {
    assert!(!p.is_zero());
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let seq = sturm_sequence(&square_free_part(p));
    variations(&seq, &Endpoint::NegInf) - variations(&seq, &Endpoint::PosInf)
}

/// Number of distinct real roots of `p` in the closed ray `[lo, inf)`.
pub fn count_roots_from(p: &Poly, lo: &Rat) -> usize {
    assert!(!p.is_zero());
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    // shift so the ray starts at zero, split off a root at the endpoint
    let mut q = square_free_part(&p.shift(lo));
    let mut at_endpoint = 0;
    if q.eval_i(0).is_zero() {
        at_endpoint = 1;
        q = q.div_exact(&Poly::x());
    }
    if q.degree().unwrap_or(0) == 0 {
        return at_endpoint;
    }
    let seq = sturm_sequence(&q);
    at_endpoint + variations(&seq, &Endpoint::Finite(Rat::zero()))
        - variations(&seq, &Endpoint::PosInf)
}

/// True when `p` never vanishes on `[0, inf)`.
pub fn nonvanishing_on_nonneg(p: &Poly) -> bool {
    !p.is_zero() && count_roots_from(p, &Rat::zero()) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn no_real_roots() {
        let p = Poly::new(vec![rat(1), rat(0), rat(1)]);
        assert_eq!(count_real_roots(&p), 0);
        assert_eq!(count_roots_from(&p, &rat(0)), 0);
        assert!(nonvanishing_on_nonneg(&p));
    }

    #[test]
    fn counts_split_at_zero() {
        // roots -1, 0, 1
        let p = Poly::new(vec![rat(0), rat(-1), rat(0), rat(1)]);
        assert_eq!(count_real_roots(&p), 3);
        assert_eq!(count_roots_from(&p, &rat(0)), 2);
        assert!(!nonvanishing_on_nonneg(&p));
    }

    #[test]
    fn negative_roots_only() {
        let p = Poly::from_roots(&[rat(-2), rat(-1)]);
        assert_eq!(count_real_roots(&p), 2);
        assert_eq!(count_roots_from(&p, &rat(0)), 0);
        assert!(nonvanishing_on_nonneg(&p));
    }

    #[test]
    fn multiplicities_collapse() {
        // (x-1)^2 (x+3): distinct roots 1 and -3
        let p = &Poly::from_roots(&[rat(1), rat(1)]) * &Poly::from_roots(&[rat(-3)]);
        assert_eq!(count_real_roots(&p), 2);
        assert_eq!(count_roots_from(&p, &rat(0)), 1);
    }

    #[test]
    fn closed_ray_includes_endpoint() {
        let p = Poly::from_roots(&[rat(1), rat(3)]);
        assert_eq!(count_roots_from(&p, &rat(1)), 2);
        assert_eq!(count_roots_from(&p, &rat(2)), 1);
        assert_eq!(count_roots_from(&p, &rat(4)), 0);
    }

    #[test]
    fn dense_cluster_of_roots() {
        let roots: Vec<Rat> = (-3..4).map(rat).collect();
        let p = Poly::from_roots(&roots);
        assert_eq!(count_real_roots(&p), 7);
        assert_eq!(count_roots_from(&p, &rat(0)), 4);
        assert_eq!(count_roots_from(&p, &rat(-10)), 7);
    }
}
