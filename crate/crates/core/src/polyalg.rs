//! Exact univariate polynomial algebra over the rationals.
//!
//! Everything a root certificate needs, with no numerical step anywhere:
//!
//! * [`Polynomial`] — dense coefficients in ascending order, trailing zeros
//!   stripped, exact evaluation and ring operations.
//! * [`RationalFunctionQ`] — quotients of polynomials, reduced by a monic gcd.
//! * [`SturmChain`] — a Sturm sequence over cleared denominators; every scaling
//!   applied to a chain element is positive, so sign variations are preserved.
//! * [`RootEnclosure`] — a rational interval certified (by a Sturm count of one)
//!   to contain exactly one root.
//! * [`certify_positive_on_ray`] — positivity of a polynomial on `x > 0`, decided
//!   by nonnegative coefficients, by a zero Sturm count plus a positive sample,
//!   or refuted by an explicit rational counterexample.
//!
//! Root isolation works over `(0, B)` with the Cauchy bound
//! `B = 1 + max |c_i / c_lead|`, bisecting at midpoints; when a midpoint happens
//! to be a root, it is nudged by `1/(1000003·2^j)` for the smallest `j` that keeps
//! the nudge inside a quarter width and off every root. All choices are
//! deterministic, so isolation output is reproducible byte for byte.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{ExactRational, RatInterval};

/// Errors from root counting and rational-function evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// A Sturm count was requested on an interval whose endpoint is a root.
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointRoot(ExactRational),
    /// The polynomial shares a factor with its derivative.
    #[error("polynomial is not squarefree (gcd with derivative is nonconstant)")]
    NotSquarefree,
    /// A rational function was evaluated where its denominator vanishes.
    #[error("denominator vanishes at {0}")]
    PoleAt(ExactRational),
    /// A rational function was constructed with the zero denominator.
    #[error("denominator polynomial is zero")]
    ZeroDenominator,
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over [`ExactRational`], coefficients ascending,
/// trailing zeros stripped. The zero polynomial has an empty coefficient vector
/// and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

impl Polynomial {
    /// Builds from ascending coefficients, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| ExactRational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients with trailing zeros stripped.
    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at `x`: −1, 0, or 1.
    pub fn sign_at(&self, x: &ExactRational) -> i32 {
        self.eval(x).signum()
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * ExactRational::from_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &ExactRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Quotient and remainder of division by `d`. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let dlead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ExactRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &dlead;
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[shift + i] = &rem[shift + i] - &(dc * &factor);
                }
                quot[shift] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "polynomial division is not exact");
        q
    }

    /// Divides by the leading coefficient (identity on the zero polynomial).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Writes `self = x^k · q` with `q(0) ≠ 0`; returns `(k, q)`.
    /// For the zero polynomial returns `(0, 0)`.
    pub fn factor_out_x(&self) -> (usize, Polynomial) {
        if self.is_zero() {
            return (0, Polynomial::zero());
        }
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial has a nonzero coefficient");
        (k, Polynomial::new(self.coeffs[k..].to_vec()))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self′)`: same roots, all simple. Requires `self ≠ 0`.
    pub fn squarefree_part(&self) -> Polynomial {
        assert!(!self.is_zero(), "squarefree part of the zero polynomial");
        let g = Polynomial::gcd(self, &self.derivative());
        self.exact_div(&g)
    }

    /// Whether the polynomial is nonzero with only simple roots.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && Polynomial::gcd(self, &self.derivative()).degree() == Some(0)
    }

    /// Rescales by a positive rational so all coefficients are integers with
    /// content 1. Signs are untouched; the zero polynomial maps to itself.
    pub fn primitive_positive(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer_gcd = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &denom_lcm / c.denom())));
        let scale = ExactRational::from_bigints(denom_lcm, numer_gcd)
            .expect("content of a nonzero polynomial is nonzero")
            .abs();
        self.scale(&scale)
    }

    /// Cauchy root bound: every real root lies strictly inside `(−B, B)` for
    /// `B = 1 + max |c_i / c_lead|`. Requires a nonzero polynomial.
    pub fn cauchy_bound(&self) -> ExactRational {
        let lead = self.leading().expect("root bound of the zero polynomial");
        let mut max = ExactRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let ratio = (c / lead).abs();
            if ratio > max {
                max = ratio;
            }
        }
        ExactRational::one() + max
    }

    /// Number of strict sign alternations in the coefficient sequence
    /// (Descartes' bound on the number of positive roots).
    pub fn descartes_sign_changes(&self) -> usize {
        let signs: Vec<i32> = self
            .coeffs
            .iter()
            .map(|c| c.signum())
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag == ExactRational::one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<ExactRational>::deserialize(deserializer)?;
        Ok(Polynomial::new(coeffs))
    }
}

// ---------------------------------------------------------------------------
// RationalFunctionQ
// ---------------------------------------------------------------------------

/// A quotient of polynomials, reduced so `gcd(num, den) = 1` and the denominator
/// is monic. The representation is canonical: equal functions compare equal.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct RationalFunctionQ {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunctionQ {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunctionQ {
                num,
                den: Polynomial::constant(ExactRational::one()),
            });
        }
        let g = Polynomial::gcd(&num, &den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let lead = den.leading().expect("reduced denominator is nonzero").recip();
        Ok(RationalFunctionQ {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// Exact evaluation; reports a pole where the (reduced) denominator vanishes.
    pub fn eval(&self, x: &ExactRational) -> Result<ExactRational, PolyError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(PolyError::PoleAt(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Derivative `(n′d − nd′)/d²`, reduced.
    pub fn derivative(&self) -> RationalFunctionQ {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RationalFunctionQ::new(n, d).expect("square of a nonzero polynomial is nonzero")
    }
}

impl fmt::Display for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Evaluation as a free function, mirroring the certificate replay vocabulary.
pub fn ratfunc_eval(r: &RationalFunctionQ, x: &ExactRational) -> Result<ExactRational, PolyError> {
    r.eval(x)
}

// ---------------------------------------------------------------------------
// Sturm chains
// ---------------------------------------------------------------------------

/// A Sturm chain with every element rescaled to primitive integer coefficients.
/// Only positive scalings are applied, so sign variations at any point agree with
/// the classical rational chain.
pub struct SturmChain {
    seq: Vec<Polynomial>,
}

impl SturmChain {
    /// Builds the chain for a nonzero polynomial `p`; fails with
    /// [`PolyError::NotSquarefree`] when `gcd(p, p′)` is nonconstant (detected as
    /// a nonconstant final chain element).
    pub fn new(p: &Polynomial) -> Result<Self, PolyError> {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let p0 = p.primitive_positive();
        let p1 = p0.derivative().primitive_positive();
        let mut seq = vec![p0];
        if p1.is_zero() {
            // constant polynomial: no roots, chain of length one
            return Ok(SturmChain { seq });
        }
        seq.push(p1);
        loop {
            let r = pseudo_rem(&seq[seq.len() - 2], &seq[seq.len() - 1]);
            if r.is_zero() {
                break;
            }
            seq.push((-&r).primitive_positive());
        }
        if seq.last().unwrap().degree() != Some(0) {
            return Err(PolyError::NotSquarefree);
        }
        Ok(SturmChain { seq })
    }

    /// The primitive representative of the input polynomial (same roots).
    pub fn polynomial(&self) -> &Polynomial {
        &self.seq[0]
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of sign changes in the chain values at `x`, zeros skipped.
    pub fn variations_at(&self, x: &ExactRational) -> usize {
        let signs: Vec<i32> = self
            .seq
            .iter()
            .map(|s| s.sign_at(x))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Exact number of distinct real roots in `(a, b)`; requires `a < b` and
    /// that neither endpoint is a root.
    pub fn count_roots_in(&self, a: &ExactRational, b: &ExactRational) -> Result<usize, PolyError> {
        assert!(a < b, "need a < b for a root count");
        for e in [a, b] {
            if self.seq[0].sign_at(e) == 0 {
                return Err(PolyError::EndpointRoot(e.clone()));
            }
        }
        let (va, vb) = (self.variations_at(a), self.variations_at(b));
        Ok(va.saturating_sub(vb))
    }
}

/// Remainder of `|lc(b)|^(δ+1) · a` divided by `b` (δ = deg a − deg b): the
/// premultiplier is positive, so the result is a positive multiple of the
/// classical remainder and keeps integer coefficients for integer inputs.
fn pseudo_rem(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (da, db) = (a.degree().unwrap_or(0), b.degree().expect("nonzero divisor"));
    let delta = da.saturating_sub(db);
    let factor = b.leading().unwrap().abs().pow(delta as i32 + 1);
    a.scale(&factor).div_rem(b).1
}

// ---------------------------------------------------------------------------
// Root enclosures
// ---------------------------------------------------------------------------

/// A rational interval containing exactly one root of a fixed polynomial, with
/// the (nonzero) signs of the polynomial at the two endpoints.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEnclosure {
    interval: RatInterval,
    lo_sign: i32,
    hi_sign: i32,
}

impl RootEnclosure {
    fn new(p: &Polynomial, lo: ExactRational, hi: ExactRational) -> Self {
        let lo_sign = p.sign_at(&lo);
        let hi_sign = p.sign_at(&hi);
        debug_assert!(lo_sign != 0 && hi_sign != 0);
        RootEnclosure {
            interval: RatInterval::new(lo, hi),
            lo_sign,
            hi_sign,
        }
    }

    pub fn interval(&self) -> &RatInterval {
        &self.interval
    }

    pub fn lo(&self) -> &ExactRational {
        self.interval.lo()
    }

    pub fn hi(&self) -> &ExactRational {
        self.interval.hi()
    }

    pub fn width(&self) -> ExactRational {
        self.interval.width()
    }

    pub fn lo_sign(&self) -> i32 {
        self.lo_sign
    }

    pub fn hi_sign(&self) -> i32 {
        self.hi_sign
    }
}

impl fmt::Debug for RootEnclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.interval)
    }
}

/// Midpoint of `(a, b)`, nudged off any root of `p`: when `p(mid) = 0` the point
/// becomes `mid + 1/(1000003·2^j)` for the smallest `j ≥ 0` that stays inside a
/// quarter of the width and misses every root. Deterministic.
fn split_point(p: &Polynomial, a: &ExactRational, b: &ExactRational) -> ExactRational {
    let mid = (a + b) * ExactRational::new(1, 2);
    if p.sign_at(&mid) != 0 {
        return mid;
    }
    let quarter = (b - a) * ExactRational::new(1, 4);
    let mut delta = ExactRational::new(1, 1_000_003);
    loop {
        if delta < quarter {
            let candidate = &mid + &delta;
            if p.sign_at(&candidate) != 0 {
                return candidate;
            }
        }
        delta = delta * ExactRational::new(1, 2);
    }
}

/// Exact number of distinct roots of `p` in the open interval `(a, b)`.
///
/// Errors: [`PolyError::NotSquarefree`] when `gcd(p, p′)` is nonconstant (checked
/// first), [`PolyError::EndpointRoot`] when `p(a) = 0` or `p(b) = 0`.
pub fn sturm_root_count(
    p: &Polynomial,
    a: &ExactRational,
    b: &ExactRational,
) -> Result<usize, PolyError> {
    SturmChain::new(p)?.count_roots_in(a, b)
}

/// Isolates every root of a squarefree `p` in `(0, ∞)`: returns pairwise-disjoint
/// enclosures inside the open ray, sorted increasingly, each certified by a Sturm
/// count of one. A factor `x^k` (k ≤ 1 for a squarefree input) is stripped first,
/// so a root at the origin is never reported.
pub fn isolate_positive_roots(p: &Polynomial) -> Result<Vec<RootEnclosure>, PolyError> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    let (k, q) = p.factor_out_x();
    if k >= 2 {
        return Err(PolyError::NotSquarefree);
    }
    if q.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&q)?;
    let q = chain.polynomial().clone();
    let bound = q.cauchy_bound();
    let zero = ExactRational::zero();
    let total = chain.count_roots_in(&zero, &bound)?;
    let mut work = vec![(zero, bound, total)];
    let mut found = Vec::new();
    while let Some((a, b, n)) = work.pop() {
        match n {
            0 => {}
            1 => found.push(RootEnclosure::new(&q, a, b)),
            _ => {
                let m = split_point(&q, &a, &b);
                let left = chain.count_roots_in(&a, &m)?;
                work.push((a, m.clone(), left));
                work.push((m, b, n - left));
            }
        }
    }
    found.sort_by(|x, y| x.lo().cmp(y.lo()));
    // The first interval may start at 0; shrink it into the open ray.
    if let Some(first) = found.first_mut() {
        while first.lo().is_zero() {
            *first = bisect_once(&q, first);
        }
    }
    // Adjacent intervals can share a (non-root) bisection endpoint; shrink the
    // left one until the closed intervals are pairwise disjoint.
    for i in 0..found.len().saturating_sub(1) {
        while found[i].hi() == found[i + 1].lo() {
            let shrunk = bisect_once(&q, &found[i]);
            found[i] = shrunk;
        }
    }
    Ok(found)
}

/// One sign-based bisection step (used by refinement; preserves the invariant
/// that the enclosed root stays inside and endpoint signs stay nonzero).
fn bisect_once(p: &Polynomial, e: &RootEnclosure) -> RootEnclosure {
    let m = split_point(p, e.lo(), e.hi());
    let sm = p.sign_at(&m);
    debug_assert!(sm != 0);
    if sm == e.lo_sign {
        RootEnclosure::new(p, m, e.hi().clone())
    } else {
        RootEnclosure::new(p, e.lo().clone(), m)
    }
}

/// Shrinks a valid enclosure until its width is at most `target_width` (which
/// must be positive). The result is contained in the input. Panics if `e` is not
/// a sign-change enclosure for `p` (precondition violation, not a data error).
pub fn refine_enclosure(
    p: &Polynomial,
    e: &RootEnclosure,
    target_width: &ExactRational,
) -> RootEnclosure {
    assert!(target_width.is_positive(), "target width must be positive");
    let (slo, shi) = (p.sign_at(e.lo()), p.sign_at(e.hi()));
    assert!(
        slo != 0 && shi != 0 && slo != shi,
        "refine_enclosure requires a sign-change enclosure"
    );
    let mut cur = e.clone();
    while cur.width() > *target_width {
        cur = bisect_once(p, &cur);
    }
    cur
}

// ---------------------------------------------------------------------------
// Positivity on the ray
// ---------------------------------------------------------------------------

/// Outcome of [`certify_positive_on_ray`].
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RayPositivity {
    /// Every coefficient is ≥ 0 and at least one is > 0, so `p > 0` for `x > 0`.
    CoefficientCertificate { strict_terms: usize },
    /// `p` has no root in `(0, ∞)` (Sturm count zero) and `p(1) > 0`.
    SturmCertificate { sample_at_one: ExactRational },
    /// An explicit rational `x > 0` with `p(x) ≤ 0`.
    Counterexample {
        x: ExactRational,
        value: ExactRational,
    },
    /// `p` vanishes somewhere on the ray (an even-multiplicity irrational root),
    /// but no rational witness with `p ≤ 0` exists. Positivity still fails.
    MultipleRootOnRay { enclosure: RatInterval },
}

impl fmt::Debug for RayPositivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RayPositivity::CoefficientCertificate { strict_terms } => {
                write!(f, "CoefficientCertificate({strict_terms} strict terms)")
            }
            RayPositivity::SturmCertificate { sample_at_one } => {
                write!(f, "SturmCertificate(p(1) = {sample_at_one})")
            }
            RayPositivity::Counterexample { x, value } => {
                write!(f, "Counterexample(p({x}) = {value})")
            }
            RayPositivity::MultipleRootOnRay { enclosure } => {
                write!(f, "MultipleRootOnRay({enclosure:?})")
            }
        }
    }
}

impl RayPositivity {
    /// Whether the outcome certifies positivity (as opposed to refuting it).
    pub fn is_certificate(&self) -> bool {
        matches!(
            self,
            RayPositivity::CoefficientCertificate { .. } | RayPositivity::SturmCertificate { .. }
        )
    }
}

/// Enumerates rational root candidates of a primitive integer polynomial inside
/// `[lo, hi]` (divisor pairs of constant and leading coefficient), smallest first.
/// Gives up (empty) when the coefficients are too large to enumerate divisors.
fn rational_root_in(
    p: &Polynomial,
    lo: &ExactRational,
    hi: &ExactRational,
) -> Option<ExactRational> {
    let c0 = p.coeff(0);
    let lead = p.leading()?.clone();
    let (c0, lead) = (c0.numer().abs().to_u64()?, lead.numer().abs().to_u64()?);
    if c0 == 0 || c0 > 1_000_000_000 || lead > 1_000_000_000 {
        return None;
    }
    let divisors = |n: u64| -> Vec<u64> {
        let mut out = Vec::new();
        let mut d = 1;
        while d * d <= n {
            if n.is_multiple_of(d) {
                out.push(d);
                out.push(n / d);
            }
            d += 1;
        }
        out
    };
    let mut candidates = Vec::new();
    for u in divisors(c0) {
        for &v in &divisors(lead) {
            let c = ExactRational::new(u as i64, v as i64);
            if &c >= lo && &c <= hi {
                candidates.push(c);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    candidates.into_iter().find(|c| p.sign_at(c) == 0)
}

/// Decides strict positivity of a nonzero `p` on the open ray `x > 0`.
///
/// Tries, in order: the coefficient certificate; the Sturm certificate (no
/// positive roots, positive sample at 1); otherwise hunts an explicit rational
/// counterexample around each isolated root of the squarefree part. The rare
/// fourth outcome ([`RayPositivity::MultipleRootOnRay`]) records a vanishing
/// point that admits no rational witness.
pub fn certify_positive_on_ray(p: &Polynomial) -> RayPositivity {
    assert!(!p.is_zero(), "positivity of the zero polynomial is not certified");
    if p.coeffs().iter().all(|c| !c.is_negative()) {
        return RayPositivity::CoefficientCertificate {
            strict_terms: p.coeffs().iter().filter(|c| c.is_positive()).count(),
        };
    }
    let sf = p.squarefree_part();
    let enclosures =
        isolate_positive_roots(&sf).expect("squarefree part is squarefree by construction");
    if enclosures.is_empty() {
        let v = p.eval(&ExactRational::one());
        return if v.is_positive() {
            RayPositivity::SturmCertificate { sample_at_one: v }
        } else {
            RayPositivity::Counterexample {
                x: ExactRational::one(),
                value: v,
            }
        };
    }
    // Sample p near each root of the squarefree part, refining a few times:
    // any odd-multiplicity root yields a strictly negative sample on one side.
    for enc in &enclosures {
        let mut cur = enc.clone();
        for _ in 0..64 {
            for t in [cur.lo(), cur.hi()] {
                if t.is_positive() {
                    let v = p.eval(t);
                    if !v.is_positive() {
                        return RayPositivity::Counterexample { x: t.clone(), value: v };
                    }
                }
            }
            if cur.width().is_zero() {
                break;
            }
            cur = bisect_once(&sf, &cur);
        }
    }
    // Even multiplicity everywhere on the ray: a rational root is itself a
    // witness (p vanishes there); an irrational one has no rational witness.
    let first = &enclosures[0];
    match rational_root_in(&sf.primitive_positive(), first.lo(), first.hi()) {
        Some(r) => {
            let value = p.eval(&r);
            RayPositivity::Counterexample { x: r, value }
        }
        None => RayPositivity::MultipleRootOnRay {
            enclosure: first.interval().clone(),
        },
    }
}

// ---------------------------------------------------------------------------
