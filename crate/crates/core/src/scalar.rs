//! Coefficient scalars for exact linear algebra.
//!
//! Homology ranks are computed over the rationals by fraction-free integer
//! elimination, or over a large prime field when speed matters more than a
//! characteristic-zero guarantee. Floating point types deliberately do not
//! implement [`Field`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedMul, CheckedSub, FromPrimitive, One, Signed, Zero};

/// An exact field usable by the elimination routines in [`crate::linalg`].
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + FromPrimitive
    + Send
    + Sync
{
}

impl Field for BigRational {}
impl<const P: u64> Field for ModP<P> {}

/// An exact integer type for fraction-free elimination. Checked operations
/// return `None` on overflow, which makes the caller retry with a wider type.
pub trait ExactInteger:
    Clone + fmt::Debug + Integer + Signed + CheckedMul + CheckedSub + From<i64> + Send + Sync
{
}

impl<T> ExactInteger for T where
    T: Clone + fmt::Debug + Integer + Signed + CheckedMul + CheckedSub + From<i64> + Send + Sync
{
}

/// Integers modulo the prime `P`, with `P < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModP<const P: u64>(u64);

impl<const P: u64> ModP<P> {
    pub fn new(v: u64) -> Self {
        ModP(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in a prime field");
        self.pow(P - 2)
    }
}

impl<const P: u64> Add for ModP<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        ModP(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for ModP<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ModP(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u64> Mul for ModP<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        ModP(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for ModP<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u64> Neg for ModP<P> {
    type Output = Self;
    fn neg(self) -> Self {
        ModP(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for ModP<P> {
    fn zero() -> Self {
        ModP(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for ModP<P> {
    fn one() -> Self {
        ModP(1 % P)
    }
}

impl<const P: u64> FromPrimitive for ModP<P> {
    fn from_i64(n: i64) -> Option<Self> {
        let r = n.rem_euclid(P as i64) as u64;
        Some(ModP(r))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(ModP(n % P))
    }
}

impl<const P: u64> fmt::Display for ModP<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Binomial coefficient `C(n, k)` over `u64`; zero when `k > n` or `k < 0`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient fits in u64")
}
