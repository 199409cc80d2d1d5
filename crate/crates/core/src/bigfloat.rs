//! Minimal arbitrary-precision binary floating point: a `BigInt` mantissa
//! times a power of two, truncated to a context-chosen bit budget.
//!
//! Only what the quadrature needs: field operations, conversions, and
//! comparisons. Truncation error is swept into the node-doubling
//! convergence estimate, so no careful rounding is attempted.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn neg(&self) -> BigFloat {
        BigFloat {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Nearest-enough `f64`; overflows to infinity for huge exponents.
    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let (m, e) = if bits > 64 {
            (&self.mant >> (bits - 53), self.exp + bits - 53)
        } else {
            (self.mant.clone(), self.exp)
        };
        m.to_f64().unwrap_or(0.0) * pow2(e)
    }
}

/// `2^e` as `f64` by binary exponentiation (core has no `powi`).
fn pow2(e: i64) -> f64 {
    let mut base = if e < 0 { 0.5_f64 } else { 2.0_f64 };
    let mut k = e.unsigned_abs();
    let mut out = 1.0_f64;
    while k > 0 {
        if k & 1 == 1 {
            out *= base;
        }
        base *= base;
        k >>= 1;
    }
    out
}

/// Working-precision context; every operation truncates its result to
/// `bits` mantissa bits.
#[derive(Clone, Copy, Debug)]
pub struct FloatCtx {
    pub bits: u64,
}

impl FloatCtx {
    pub fn new(bits: u64) -> Self {
        assert!(bits >= 16, "precision below 16 bits is meaningless here");
        FloatCtx { bits }
    }

    fn norm(&self, mant: BigInt, exp: i64) -> BigFloat {
        if mant.is_zero() {
            return BigFloat::zero();
        }
        let b = mant.bits() as i64;
        let excess = b - self.bits as i64;
        if excess > 0 {
            BigFloat {
                mant: mant >> excess,
                exp: exp + excess,
            }
        } else {
            BigFloat { mant, exp }
        }
    }

    pub fn from_i64(&self, v: i64) -> BigFloat {
        self.norm(BigInt::from(v), 0)
    }

    pub fn from_rat(&self, r: &Rat) -> BigFloat {
        let num = BigFloat {
            mant: r.numer().clone(),
            exp: 0,
        };
        let den = BigFloat {
            mant: r.denom().clone(),
            exp: 0,
        };
        self.div(&num, &den)
    }

    pub fn from_f64(&self, x: f64) -> BigFloat {
        if x == 0.0 {
            return BigFloat::zero();
        }
        assert!(x.is_finite(), "cannot lift a non-finite f64");
        let bits = x.to_bits();
        let sign_neg = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        let mant = if sign_neg {
            -BigInt::from(m)
        } else {
            BigInt::from(m)
        };
        self.norm(mant, e)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let (hi, lo) = if a.exp >= b.exp { (a, b) } else { (b, a) };
        let shift = hi.exp - lo.exp;
        // far below one ulp of hi: the sum truncates back to hi anyway
        if shift > self.bits as i64 + 64 {
            return hi.clone();
        }
        self.norm((&hi.mant << shift) + &lo.mant, lo.exp)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        self.add(a, &b.neg())
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        if a.is_zero() || b.is_zero() {
            return BigFloat::zero();
        }
        self.norm(&a.mant * &b.mant, a.exp + b.exp)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        assert!(!b.is_zero(), "division by a zero BigFloat");
        if a.is_zero() {
            return BigFloat::zero();
        }
        let shift =
            self.bits as i64 + 2 + (b.mant.bits() as i64 - a.mant.bits() as i64).max(0);
        self.norm((&a.mant << shift) / &b.mant, a.exp - b.exp - shift)
    }

    /// True when `a < b` as real numbers (up to one truncation ulp).
    pub fn lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        self.sub(a, b).is_negative()
    }

    /// Exact `2^e`.
    pub fn pow2(&self, e: i64) -> BigFloat {
        BigFloat {
            mant: BigInt::from(1),
            exp: e,
        }
    }
}
