//! Exact rationals and their canonical text form.

use alloc::string::String;

use num_bigint::BigInt;
use num_traits::Signed;

pub type Rational = num_rational::BigRational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` in lowest terms with positive denominator; zero is `0/1`.
pub fn to_pq(r: &Rational) -> String {
    alloc::format!("{}/{}", r.numer(), r.denom())
}

/// Exact value of a finite float.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Precomputed answers to `b <= eps * s` for all `0 <= b <= s <= max_size`.
/// Keeps big-integer arithmetic out of inner search loops.
#[derive(Debug, Clone)]
pub(crate) struct RatioTable {
    max_size: usize,
    ok: alloc::vec::Vec<bool>,
}

impl RatioTable {
    pub(crate) fn new(eps: &Rational, max_size: usize) -> Self {
        debug_assert!(!eps.is_negative());
        let stride = max_size + 1;
        let mut ok = alloc::vec![false; stride * stride];
        for s in 0..=max_size {
            for b in 0..=s {
                let lhs = BigInt::from(b) * eps.denom();
                let rhs = eps.numer() * BigInt::from(s);
                ok[s * stride + b] = lhs <= rhs;
            }
        }
        Self { max_size, ok }
    }

    /// Whether a set of size `s` with boundary size `b` meets the threshold.
    pub(crate) fn accepts(&self, b: usize, s: usize) -> bool {
        s <= self.max_size && b <= s && self.ok[s * (self.max_size + 1) + b]
    }
}
