//! Exact scalar tower used by every certificate.
//!
//! Four kinds of quantity appear in the certified arithmetic:
//!
//! * [`ExactRational`] — arbitrary-precision rationals, always reduced, denominator
//!   always positive, serialized as the string `"p/q"` (bare `"p"` when `q = 1`).
//! * [`SurdQuantity`] — numbers of the form `c·√r` with `c` rational and `r` a
//!   squarefree positive integer, compared exactly by sign analysis and squaring.
//! * [`PiSqQuantity`] — rational multiples of π², the unit in which curvature
//!   energies are budgeted. π² itself never needs a numeric value for these
//!   comparisons; only the rational coefficients are compared.
//! * [`RatInterval`] — closed intervals with rational endpoints, used as enclosures
//!   for irrational targets (roots, π).
//!
//! The only route to a numeric π in the whole crate is [`pi_enclosure`], which
//! returns a certified rational interval from a Machin-style arctangent series with
//! alternating-series partial-sum bounds.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from constructing or parsing exact scalars.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactNumError {
    /// A rational was given a zero denominator.
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    /// A string did not parse as `p` or `p/q`.
    #[error("cannot parse {0:?} as a rational of the form p/q")]
    InvalidRational(String),
}

// ---------------------------------------------------------------------------
// ExactRational
// ---------------------------------------------------------------------------

/// An arbitrary-precision rational, always in lowest terms with positive denominator.
///
/// Backed by [`num_rational::BigRational`], which maintains exactly those invariants;
/// this wrapper pins down the `"p/q"` serialization and the decimal rendering used
/// in reports.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `numer/denom`. Panics if `denom == 0`; use [`Self::from_bigints`]
    /// for fallible construction from untrusted input.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "denominator must be nonzero");
        ExactRational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// The integer `n` as a rational.
    pub fn from_int(n: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Fallible construction from big integers.
    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self, ExactNumError> {
        if denom.is_zero() {
            return Err(ExactNumError::ZeroDenominator);
        }
        Ok(ExactRational(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    /// Numerator in lowest terms (sign lives here).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator in lowest terms, always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Sign as −1, 0, or 1.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        ExactRational(self.0.recip())
    }

    /// Integer power (negative exponents invert; panics on `0^negative`).
    pub fn pow(&self, exp: i32) -> Self {
        if exp < 0 {
            assert!(!self.is_zero(), "cannot raise zero to a negative power");
        }
        ExactRational(self.0.pow(exp))
    }

    /// Nearest `f64`, for advisory display only — never used in a certificate.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Truncated decimal rendering with `sig` significant digits, for advisory
    /// display next to the exact value. Deterministic; never rounds up.
    pub fn decimal_string(&self, sig: usize) -> String {
        assert!(sig > 0, "need at least one significant digit");
        if self.is_zero() {
            return "0".to_string();
        }
        let sign = if self.is_negative() { "-" } else { "" };
        let m = self.numer().abs();
        let d = self.denom().clone();
        let int_part: BigInt = &m / &d;
        let frac_digits = if int_part.is_zero() {
            // Count leading zeros after the decimal point: smallest k >= 0 with
            // m * 10^(k+1) >= d, then emit k + sig digits.
            let mut k = 0usize;
            let mut scaled = &m * 10;
            while scaled < d {
                scaled *= 10;
                k += 1;
            }
            k + sig
        } else {
            sig.saturating_sub(int_part.to_string().len())
        };
        if frac_digits == 0 {
            return format!("{sign}{int_part}");
        }
        let rem: BigInt = &m % &d;
        let scaled: BigInt = rem * BigInt::from(10).pow(frac_digits as u32) / &d;
        let frac = format!("{:0>width$}", scaled.to_string(), width = frac_digits);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExactRational {
    type Err = ExactNumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let invalid = || ExactNumError::InvalidRational(s.to_string());
        match t.split_once('/') {
            None => {
                let n = BigInt::from_str(t).map_err(|_| invalid())?;
                Ok(ExactRational(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let n = BigInt::from_str(p.trim()).map_err(|_| invalid())?;
                let d = BigInt::from_str(q.trim()).map_err(|_| invalid())?;
                Self::from_bigints(n, d)
            }
        }
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_int(n)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

macro_rules! impl_rat_binop {
    ($imp:ident, $method:ident) => {
        impl std::ops::$imp for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(std::ops::$imp::$method(self.0, rhs.0))
            }
        }
        impl std::ops::$imp<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(std::ops::$imp::$method(&self.0, &rhs.0))
            }
        }
        impl std::ops::$imp<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(std::ops::$imp::$method(self.0, &rhs.0))
            }
        }
        impl std::ops::$imp<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(std::ops::$imp::$method(&self.0, rhs.0))
            }
        }
    };
}

impl_rat_binop!(Add, add);
impl_rat_binop!(Sub, sub);
impl_rat_binop!(Mul, mul);
impl_rat_binop!(Div, div);

impl std::ops::Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl std::ops::Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

// ---------------------------------------------------------------------------
// SurdQuantity
// ---------------------------------------------------------------------------

/// A quantity `coeff · √radicand` with squarefree positive radicand.
///
/// Normalization extracts square factors into the coefficient (`√12 → 2√3`) and
/// canonicalizes zero as `0·√1`, so equal values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurdQuantity {
    coeff: ExactRational,
    radicand: u64,
}

/// Splits `n = s²·r` with `r` squarefree; returns `(s, r)`.
fn squarefree_decompose(n: u64) -> (u64, u64) {
    assert!(n > 0);
    let (mut s, mut r, mut m) = (1u64, 1u64, n);
    let mut d = 2u64;
    while d * d <= m {
        let mut e = 0u32;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        s *= d.pow(e / 2);
        if e % 2 == 1 {
            r *= d;
        }
        d += 1;
    }
    (s, r * m)
}

impl SurdQuantity {
    /// Builds `coeff·√radicand` in normalized form. Panics if `radicand == 0`
    /// (a zero surd is written `SurdQuantity::new(0, 1)`).
    pub fn new(coeff: ExactRational, radicand: u64) -> Self {
        assert!(radicand > 0, "radicand must be a positive integer");
        if coeff.is_zero() {
            return SurdQuantity {
                coeff,
                radicand: 1,
            };
        }
        let (s, r) = squarefree_decompose(radicand);
        SurdQuantity {
            coeff: coeff * ExactRational::from_int(s as i64),
            radicand: r,
        }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(coeff: i64, radicand: u64) -> Self {
        SurdQuantity::new(ExactRational::from_int(coeff), radicand)
    }

    pub fn coeff(&self) -> &ExactRational {
        &self.coeff
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Sign of the value (the radicand is positive, so this is the coefficient sign).
    pub fn signum(&self) -> i32 {
        self.coeff.signum()
    }

    /// The exact square `coeff² · radicand`.
    pub fn square(&self) -> ExactRational {
        &self.coeff * &self.coeff * ExactRational::from_int(self.radicand as i64)
    }

    /// Exact product; radicands multiply and re-normalize.
    pub fn mul(&self, other: &SurdQuantity) -> SurdQuantity {
        SurdQuantity::new(
            &self.coeff * &other.coeff,
            self.radicand
                .checked_mul(other.radicand)
                .expect("radicand product overflows u64"),
        )
    }

    /// Exact quotient: `(c√r)/(d√s) = (c/(d·s))·√(r·s)`. Panics if `other` is zero.
    pub fn div(&self, other: &SurdQuantity) -> SurdQuantity {
        assert!(!other.is_zero(), "cannot divide by the zero surd");
        let denom = &other.coeff * ExactRational::from_int(other.radicand as i64);
        SurdQuantity::new(
            &self.coeff / denom,
            self.radicand
                .checked_mul(other.radicand)
                .expect("radicand product overflows u64"),
        )
    }

    /// Scales by a rational factor.
    pub fn scale(&self, q: &ExactRational) -> SurdQuantity {
        SurdQuantity::new(&self.coeff * q, self.radicand)
    }

    /// Exact square root of a nonnegative rational as a surd:
    /// `√(p/q) = (1/q)·√(p·q)`. Returns `None` for negative input or when the
    /// product `p·q` does not fit the `u64` radicand (all uses here are small).
    pub fn sqrt_of_rational(q: &ExactRational) -> Option<SurdQuantity> {
        if q.is_negative() {
            return None;
        }
        if q.is_zero() {
            return Some(SurdQuantity::from_ints(0, 1));
        }
        let pq = (q.numer() * q.denom()).to_u64()?;
        let coeff = ExactRational::from_bigints(BigInt::one(), q.denom().clone())
            .expect("denominator is positive");
        Some(SurdQuantity::new(coeff, pq))
    }

    /// Approximate value, advisory only.
    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for SurdQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self.coeff)
        } else if self.coeff == ExactRational::one() {
            write!(f, "sqrt({})", self.radicand)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

impl fmt::Debug for SurdQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Total order on surd values, decided exactly: compare signs first, then compare
/// squares (which are rational) on the side the signs select.
pub fn compare_surds(a: &SurdQuantity, b: &SurdQuantity) -> Ordering {
    let (sa, sb) = (a.signum(), b.signum());
    if sa != sb {
        return sa.cmp(&sb);
    }
    match sa {
        0 => Ordering::Equal,
        1 => a.square().cmp(&b.square()),
        _ => b.square().cmp(&a.square()),
    }
}

impl PartialOrd for SurdQuantity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SurdQuantity {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_surds(self, other)
    }
}

// ---------------------------------------------------------------------------
// PiSqQuantity
// ---------------------------------------------------------------------------

/// A rational multiple of π². Curvature energies are compared in these units,
/// so the comparisons reduce to exact rational comparisons of the coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiSqQuantity {
    pi2_coeff: ExactRational,
}

impl PiSqQuantity {
    pub fn new(pi2_coeff: ExactRational) -> Self {
        PiSqQuantity { pi2_coeff }
    }

    pub fn from_ints(numer: i64, denom: i64) -> Self {
        PiSqQuantity::new(ExactRational::new(numer, denom))
    }

    pub fn coeff(&self) -> &ExactRational {
        &self.pi2_coeff
    }

    pub fn is_zero(&self) -> bool {
        self.pi2_coeff.is_zero()
    }

    pub fn add(&self, other: &PiSqQuantity) -> PiSqQuantity {
        PiSqQuantity::new(&self.pi2_coeff + &other.pi2_coeff)
    }

    pub fn sub(&self, other: &PiSqQuantity) -> PiSqQuantity {
        PiSqQuantity::new(&self.pi2_coeff - &other.pi2_coeff)
    }

    pub fn scale(&self, q: &ExactRational) -> PiSqQuantity {
        PiSqQuantity::new(&self.pi2_coeff * q)
    }

    /// Approximate value, advisory only.
    pub fn to_f64(&self) -> f64 {
        self.pi2_coeff.to_f64() * std::f64::consts::PI * std::f64::consts::PI
    }
}

impl PartialOrd for PiSqQuantity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PiSqQuantity {
    // pi^2 > 0, so multiples compare as their coefficients.
    fn cmp(&self, other: &Self) -> Ordering {
        self.pi2_coeff.cmp(&other.pi2_coeff)
    }
}

impl fmt::Display for PiSqQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*pi^2", self.pi2_coeff)
    }
}

impl fmt::Debug for PiSqQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// RatInterval
// ---------------------------------------------------------------------------

/// A closed interval `[lo, hi]` with rational endpoints, `lo ≤ hi`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatInterval {
    lo: ExactRational,
    hi: ExactRational,
}

impl RatInterval {
    /// Builds `[lo, hi]`. Panics if `lo > hi`.
    pub fn new(lo: ExactRational, hi: ExactRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: ExactRational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &ExactRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExactRational {
        &self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> ExactRational {
        (&self.lo + &self.hi) * ExactRational::new(1, 2)
    }

    /// Membership in the closed interval.
    pub fn contains(&self, x: &ExactRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Whether `other ⊆ self` (closed containment).
    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Whether the closed intervals share any point.
    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Membership test exposed as a free function for certificate replay code.
pub fn interval_contains(interval: &RatInterval, x: &ExactRational) -> bool {
    interval.contains(x)
}

// ---------------------------------------------------------------------------
// pi enclosure
// ---------------------------------------------------------------------------

/// One alternating arctangent series `arctan(1/x) = Σ (−1)^k / ((2k+1) x^(2k+1))`
/// with certified partial-sum bounds: after an added (even-k) term the partial sum
/// is an upper bound, after a subtracted (odd-k) term a lower bound.
struct AltArctanSeries {
    x_sq: BigInt,
    pow: BigInt, // x^(2k+1) for the NEXT term
    k: u64,
    sum: ExactRational,
    low: Option<ExactRational>,
    high: Option<ExactRational>,
}

impl AltArctanSeries {
    fn new(x: i64) -> Self {
        let x = BigInt::from(x);
        AltArctanSeries {
            x_sq: &x * &x,
            pow: x,
            k: 0,
            sum: ExactRational::zero(),
            low: None,
            high: None,
        }
    }

    fn step(&mut self) {
        let denom = BigInt::from(2 * self.k + 1) * &self.pow;
        let term = ExactRational::from_bigints(BigInt::from(1), denom)
            .expect("series denominator is positive");
        if self.k.is_multiple_of(2) {
            self.sum = &self.sum + &term;
            self.high = Some(self.sum.clone());
        } else {
            self.sum = &self.sum - &term;
            self.low = Some(self.sum.clone());
        }
        self.pow = &self.pow * &self.x_sq;
        self.k += 1;
    }
}

/// Certified rational enclosure of π with width at most `max_width` (which must be
/// positive), from `π = 16·arctan(1/5) − 4·arctan(1/239)`.
///
/// Successive calls with smaller widths return nested intervals: both series'
/// partial-sum bounds tighten monotonically as terms are added.
pub fn pi_enclosure(max_width: &ExactRational) -> RatInterval {
    assert!(max_width.is_positive(), "enclosure width must be positive");
    let mut a = AltArctanSeries::new(5);
    let mut b = AltArctanSeries::new(239);
    let sixteen = ExactRational::from_int(16);
    let four = ExactRational::from_int(4);
    loop {
        a.step();
        b.step();
        let (Some(a_lo), Some(a_hi), Some(b_lo), Some(b_hi)) = (&a.low, &a.high, &b.low, &b.high)
        else {
            continue;
        };
        let pi_lo = &sixteen * a_lo - &four * b_hi;
        let pi_hi = &sixteen * a_hi - &four * b_lo;
        if &pi_hi - &pi_lo <= *max_width {
            return RatInterval::new(pi_lo, pi_hi);
        }
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    #[test]
    fn rational_construction_reduces_and_normalizes_sign() {
        let a = ExactRational::new(6, 8);
        assert_eq!(a.to_string(), "3/4");
        let b = ExactRational::new(3, -9);
        assert_eq!(b.to_string(), "-1/3");
        assert!(b.denom().is_positive());
        assert_eq!(ExactRational::new(-0, 5).to_string(), "0");
    }

    #[test]
    fn rational_parse_and_display_round_trip() {
        for s in ["0", "8", "-3/4", "2919/409", "7/2", "-1000003"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert_eq!(q("6/8").to_string(), "3/4");
        assert_eq!(q(" 14 / -6 ").to_string(), "-7/3");
        assert!(matches!(
            "1/0".parse::<ExactRational>(),
            Err(ExactNumError::ZeroDenominator)
        ));
        assert!(matches!(
            "abc".parse::<ExactRational>(),
            Err(ExactNumError::InvalidRational(_))
        ));
        assert!("3/4/5".parse::<ExactRational>().is_err());
    }

    #[test]
    fn rational_arithmetic_basics() {
        let a = q("2/3");
        let b = q("-5/7");
        assert_eq!((&a + &b).to_string(), "-1/21");
        assert_eq!((&a * &b).to_string(), "-10/21");
        assert_eq!((&a - &b).to_string(), "29/21");
        assert_eq!((&a / &b).to_string(), "-14/15");
        assert_eq!(a.pow(3).to_string(), "8/27");
        assert_eq!(b.pow(-2).to_string(), "49/25");
        assert_eq!(b.abs().to_string(), "5/7");
        assert_eq!(b.signum(), -1);
        assert_eq!(ExactRational::zero().signum(), 0);
    }

    #[test]
    fn decimal_rendering_truncates_significant_digits() {
        assert_eq!(q("2919/409").decimal_string(15), "7.13691931540342");
        assert_eq!(q("1/3").decimal_string(15), "0.333333333333333");
        assert_eq!(q("8").decimal_string(15), "8");
        assert_eq!(q("-1/8").decimal_string(3), "-0.125");
        assert_eq!(q("1/400").decimal_string(2), "0.0025");
        assert_eq!(q("0").decimal_string(5), "0");
    }

    #[test]
    fn surd_normalization_extracts_squares() {
        let s = SurdQuantity::from_ints(1, 12);
        assert_eq!(s.coeff(), &q("2"));
        assert_eq!(s.radicand(), 3);
        let t = SurdQuantity::from_ints(3, 50);
        assert_eq!(t.coeff(), &q("15"));
        assert_eq!(t.radicand(), 2);
        let z = SurdQuantity::new(ExactRational::zero(), 7);
        assert_eq!(z.radicand(), 1);
        assert!(z.is_zero());
    }

    #[test]
    fn surd_comparison_exact_cases() {
        // 2*sqrt(2) = sqrt(8)
        let a = SurdQuantity::from_ints(2, 2);
        let b = SurdQuantity::from_ints(1, 8);
        assert_eq!(compare_surds(&a, &b), Ordering::Equal);
        // 2*sqrt(2) < 3
        let three = SurdQuantity::from_ints(3, 1);
        assert_eq!(compare_surds(&a, &three), Ordering::Less);
        // negative side ordering flips
        let na = SurdQuantity::from_ints(-2, 2);
        let nb = SurdQuantity::from_ints(-3, 1);
        assert_eq!(compare_surds(&na, &nb), Ordering::Greater);
        assert_eq!(compare_surds(&na, &a), Ordering::Less);
    }

    #[test]
    fn surd_algebra() {
        // (24*sqrt(2)) / (4*sqrt(6)) = sqrt(12) = 2*sqrt(3)
        let num = SurdQuantity::from_ints(24, 2);
        let den = SurdQuantity::from_ints(4, 6);
        let ratio = num.div(&den);
        assert_eq!(ratio.coeff(), &q("2"));
        assert_eq!(ratio.radicand(), 3);
        assert_eq!(ratio.square(), q("12"));
        // sqrt(96) = 4*sqrt(6)
        let y = SurdQuantity::sqrt_of_rational(&q("96")).unwrap();
        assert_eq!((y.coeff().clone(), y.radicand()), (q("4"), 6));
        // sqrt(9/4) = 3/2
        let h = SurdQuantity::sqrt_of_rational(&q("9/4")).unwrap();
        assert_eq!((h.coeff().clone(), h.radicand()), (q("3/2"), 1));
        assert!(SurdQuantity::sqrt_of_rational(&q("-1")).is_none());
        let p = SurdQuantity::from_ints(2, 3).mul(&SurdQuantity::from_ints(1, 6));
        assert_eq!((p.coeff().clone(), p.radicand()), (q("6"), 2));
    }

    #[test]
    fn pi_squared_quantities_compare_by_coefficient() {
        let a = PiSqQuantity::from_ints(68, 3);
        let b = PiSqQuantity::from_ints(23, 1);
        assert!(a < b);
        assert_eq!(b.sub(&a).coeff(), &q("1/3"));
        assert_eq!(a.to_string(), "68/3*pi^2");
    }

    #[test]
    fn interval_operations() {
        let i = RatInterval::new(q("7"), q("8"));
        assert!(i.contains(&q("15/2")));
        assert!(i.contains(&q("7")));
        assert!(!i.contains(&q("55/8")));
        assert!(!i.contains(&q("65/8")));
        assert_eq!(i.width(), q("1"));
        assert_eq!(i.midpoint(), q("15/2"));
        let j = RatInterval::new(q("29/4"), q("15/2"));
        assert!(i.contains_interval(&j));
        assert!(!j.contains_interval(&i));
        assert!(interval_contains(&i, &q("8")));
    }

    #[test]
    #[should_panic(expected = "out of order")]
    fn interval_rejects_reversed_endpoints() {
        let _ = RatInterval::new(q("2"), q("1"));
    }

    #[test]
    fn pi_enclosure_brackets_known_bounds() {
        let coarse = pi_enclosure(&q("1/10"));
        assert!(coarse.width() <= q("1/10"));
        assert!(coarse.lo() > &q("3") && coarse.hi() < &q("16/5"));
        // at width 1/1000 the enclosure beats the classical bounds 223/71 < pi < 22/7
        let e = pi_enclosure(&q("1/1000"));
        assert!(e.lo() > &q("223/71"));
        assert!(e.hi() < &q("22/7"));
        assert!(e.width() <= q("1/1000"));
    }

    #[test]
    fn pi_enclosure_contains_fifty_digit_truncation_and_nests() {
        // pi truncated to 50 decimal digits; the true value lies strictly between
        // this and this + 10^-50.
        let p50 = ExactRational::from_bigints(
            "314159265358979323846264338327950288419716939937510"
                .parse()
                .unwrap(),
            num_bigint::BigInt::from(10).pow(50),
        )
        .unwrap();
        let widths = ["1", "1/10", "1/1000000", "1/1000000000000"];
        let mut prev: Option<RatInterval> = None;
        for w in widths {
            let e = pi_enclosure(&q(w));
            assert!(e.width() <= q(w));
            assert!(e.contains(&p50), "width {w} enclosure must contain pi");
            if let Some(outer) = &prev {
                assert!(outer.contains_interval(&e), "enclosures must be nested");
            }
            prev = Some(e);
        }
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn pi_enclosure_rejects_nonpositive_width() {
        let _ = pi_enclosure(&ExactRational::zero());
    }

    #[test]
    fn serde_round_trips() {
        let x = q("-2919/409");
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, "\"-2919/409\"");
        assert_eq!(serde_json::from_str::<ExactRational>(&js).unwrap(), x);

        let s = SurdQuantity::from_ints(2, 3);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"coeff":"2","radicand":3}"#);
        assert_eq!(serde_json::from_str::<SurdQuantity>(&js).unwrap(), s);

        let p = PiSqQuantity::from_ints(4, 3);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"pi2_coeff":"4/3"}"#);
        assert_eq!(serde_json::from_str::<PiSqQuantity>(&js).unwrap(), p);

        let i = RatInterval::new(q("7"), q("8"));
        let js = serde_json::to_string(&i).unwrap();
        assert_eq!(js, r#"{"lo":"7","hi":"8"}"#);
        assert_eq!(serde_json::from_str::<RatInterval>(&js).unwrap(), i);
    }
}
