//! The normalized energy of the bilaterally symmetric Kähler classes.
//!
//! On classes `[ω] = (β+ε)(F₁+F₂) − εE` the normalized energy is a function of
//! the shape parameter `x = ε/β` alone:
//!
//! ```text
//! f(x) = 3·(32 + 176x + 318x² + 280x³ + 132x⁴ + 32x⁵ + 3x⁶)
//!        ───────────────────────────────────────────────────
//!         12 + 72x + 138x² + 120x³ + 54x⁴ + 12x⁵ + x⁶
//! ```
//!
//! The same quantity is assembled a second, independent way from the lattice:
//! `(c₁·[ω])²/[ω]²` minus `1/(32π²)` times the Futaki contribution, built from
//! [`t_variance`], [`futaki_generator`], and [`lambda_coeff`]. [`calabi_A`] takes
//! only the geometric route; tests and the report pin the two routes against each
//! other at exact rational points. They must agree identically — that redundancy
//! is the point.
//!
//! Four certificates live here:
//! * [`certify_critical_point`] — the unique critical point x₀ of `f` on the ray,
//!   enclosed to a requested width, with a decrease certificate on `(0, x₀)` and
//!   the value bound `f < 8` near x₀.
//! * [`certify_boundary_L`] — the unique positive solution of `f(x) = 8`,
//!   obtained from the exact factorization `3N − 8D = x·(x⁵ − 36x³ − 120x² −
//!   150x − 48)`, with a grid certificate inside `(0, L)` and one sample beyond.
//! * [`certify_scalar_positive`] — positivity of the scalar-curvature minimum,
//!   reduced to a degree-7 polynomial with nonnegative coefficients.
//! * [`certify_c0_bound`] — the curvature C⁰ bound, reduced to the residual
//!   `9(2+4x+x²) − (4+3x)² = 2 + 12x > 0`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{ExactRational, PiSqQuantity};
use crate::polyalg::{
    certify_positive_on_ray, isolate_positive_roots, refine_enclosure, Polynomial,
    RationalFunctionQ, RayPositivity, RootEnclosure,
};
use crate::surface::{c1, pair, KahlerParams};

/// Ascending coefficients of the numerator polynomial `N` (the energy is `3N/D`).
pub const NUMERATOR_COEFFS: [i64; 7] = [32, 176, 318, 280, 132, 32, 3];

/// Ascending coefficients of the denominator polynomial `D`.
pub const DENOMINATOR_COEFFS: [i64; 7] = [12, 72, 138, 120, 54, 12, 1];

/// Ascending coefficients of the boundary quintic `x⁵ − 36x³ − 120x² − 150x − 48`.
pub const BOUNDARY_QUINTIC_COEFFS: [i64; 6] = [-48, -150, -120, -36, 0, 1];

/// Errors from the functional certificates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    /// A critical-point enclosure was requested at width ≥ 1.
    #[error("requested enclosure width {width} is too coarse (must be < 1)")]
    WidthTooCoarse { width: ExactRational },
    /// An exact polynomial identity failed to reproduce its target — a
    /// transcription bug, never a marginal numerical outcome.
    #[error("polynomial reconstruction failed: expected {expected}, computed {actual}")]
    ReconstructionMismatch {
        expected: Polynomial,
        actual: Polynomial,
    },
}

/// The energy function `f = 3N/D` in reduced form, with construction-time
/// self-checks of its defining identities.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct FunctionalF {
    f: RationalFunctionQ,
}

impl FunctionalF {
    /// Builds `f` and asserts `f(0) = 8` and leading-coefficient ratio 9 exactly.
    pub fn new() -> Self {
        let num = Polynomial::from_ints(&NUMERATOR_COEFFS).scale(&ExactRational::from_int(3));
        let den = Polynomial::from_ints(&DENOMINATOR_COEFFS);
        let f = RationalFunctionQ::new(num, den).expect("denominator is nonzero");
        let at_zero = f.eval(&ExactRational::zero()).expect("D(0) = 12");
        assert_eq!(at_zero, ExactRational::from_int(8), "f(0) must equal 8");
        let ratio = f.num().leading().expect("numerator nonzero")
            / f.den().leading().expect("denominator nonzero");
        assert_eq!(ratio, ExactRational::from_int(9), "f(∞) must equal 9");
        FunctionalF { f }
    }

    pub fn as_ratfunc(&self) -> &RationalFunctionQ {
        &self.f
    }

    /// Exact evaluation; the denominator has positive coefficients, so the ray
    /// `x ≥ 0` is pole-free.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.f.eval(x).expect("denominator is positive on the ray")
    }

    pub fn derivative(&self) -> RationalFunctionQ {
        self.f.derivative()
    }
}

impl Default for FunctionalF {
    fn default() -> Self {
        FunctionalF::new()
    }
}

/// The energy function as a free constructor.
pub fn functional_f() -> FunctionalF {
    FunctionalF::new()
}

// ---------------------------------------------------------------------------
// Homogeneous building blocks
// ---------------------------------------------------------------------------

/// The sextic `12β⁶ + 72β⁵ε + 138β⁴ε² + 120β³ε³ + 54β²ε⁴ + 12βε⁵ + ε⁶`
/// (the homogenization of `D`). Degenerate inputs are permitted — it is a plain
/// polynomial evaluation.
pub fn t_variance(beta: &ExactRational, eps: &ExactRational) -> ExactRational {
    let mut acc = ExactRational::zero();
    for (i, &c) in DENOMINATOR_COEFFS.iter().enumerate() {
        acc = acc
            + ExactRational::from_int(c) * beta.pow(6 - i as i32) * eps.pow(i as i32);
    }
    acc
}

/// The Futaki pairing of the extremal generator against `[ω]`:
/// `4βε(ε²/3 + βε + β²) / (2β² + 4βε + ε²)`. Requires `(β, ε) ≠ (0, 0)`.
pub fn futaki_generator(beta: &ExactRational, eps: &ExactRational) -> ExactRational {
    let four = ExactRational::from_int(4);
    let num = &four * beta * eps
        * (eps * eps * ExactRational::new(1, 3) + beta * eps + beta * beta);
    let den = ExactRational::from_int(2) * beta * beta + four * beta * eps + eps * eps;
    assert!(!den.is_zero(), "futaki_generator requires (beta, eps) != (0, 0)");
    num / den
}

/// The extremal eigenvalue `λ = −(12π)²·4βε(ε²/3 + βε + β²) / t_variance`,
/// returned as its exact π² coefficient.
pub fn lambda_coeff(beta: &ExactRational, eps: &ExactRational) -> PiSqQuantity {
    let t = t_variance(beta, eps);
    assert!(!t.is_zero(), "lambda_coeff requires a nonzero variance");
    let four = ExactRational::from_int(4);
    let num = &four * beta * eps
        * (eps * eps * ExactRational::new(1, 3) + beta * eps + beta * beta);
    PiSqQuantity::new(ExactRational::from_int(-144) * num / t)
}

/// The normalized energy assembled geometrically:
/// `(c₁·[ω])²/[ω]²  −  (1/32π²)·λ·ℱ(Ξ,[ω])`, the π² cancelling exactly.
///
/// This is deliberately NOT computed through `f`; agreement with
/// `f.eval(ε/β)` is a certified cross-check, not a definition.
#[allow(non_snake_case)]
pub fn calabi_A(params: &KahlerParams) -> ExactRational {
    let omega = params.omega_class();
    let anticanonical = c1();
    let projection = pair(&anticanonical, &omega).pow(2) / omega.square();
    let futaki_term = lambda_coeff(params.beta(), params.eps()).coeff().clone()
        * futaki_generator(params.beta(), params.eps())
        * ExactRational::new(1, 32);
    projection - futaki_term
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// An exact evaluation of `f`, with the signed margin from the threshold 8
/// (negative below 8, positive above).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueSample {
    pub x: ExactRational,
    pub value: ExactRational,
    pub margin_from_8: ExactRational,
}

fn sample(f: &FunctionalF, x: ExactRational) -> ValueSample {
    let value = f.eval(&x);
    let margin_from_8 = &value - &ExactRational::from_int(8);
    ValueSample {
        x,
        value,
        margin_from_8,
    }
}

/// Certificate for the unique interior critical point x₀ of `f` on `(0, ∞)`.
#[derive(Clone, Serialize)]
pub struct CriticalCertificate {
    /// Numerator of `f′` in reduced form (degree 10; the denominator `D²` is
    /// positive on the ray, so critical points are exactly its positive roots).
    pub derivative_numerator: Polynomial,
    /// `f′(0)`, exactly −4: the energy initially decreases.
    pub derivative_at_zero: ExactRational,
    /// `f′(1)`, positive: the energy has turned back up by x = 1.
    pub derivative_at_one: ExactRational,
    /// Sturm-certified number of positive roots of the derivative numerator — 1.
    pub positive_root_count: usize,
    /// Cauchy bound: every root of the numerator lies below this.
    pub search_bound: ExactRational,
    /// The isolated, refined enclosure of x₀.
    pub enclosure: RootEnclosure,
    /// Roots of the derivative numerator in `(0, lo)` — 0, so `f′` keeps the
    /// sign it has at `lo` on all of `(0, lo]`.
    pub roots_below_enclosure: usize,
    /// Sign of `f′(lo)` — negative: combined with the two fields above, `f`
    /// strictly decreases on `(0, x₀)`.
    pub derivative_sign_at_lo: i32,
    /// Exact values of `f` at `lo`, `hi`, and one step beyond, all below 8.
    pub value_at_lo: ValueSample,
    pub value_at_hi: ValueSample,
    pub value_beyond: ValueSample,
    /// The width that was requested.
    pub requested_width: ExactRational,
}

/// Encloses the unique critical point of `f` in `(0, ∞)` to the requested width.
///
/// Errors with [`ExtremalError::WidthTooCoarse`] when `width ≥ 1`; panics on a
/// nonpositive width (caller contract).
pub fn certify_critical_point(width: &ExactRational) -> Result<CriticalCertificate, ExtremalError> {
    assert!(width.is_positive(), "enclosure width must be positive");
    if width >= &ExactRational::one() {
        return Err(ExtremalError::WidthTooCoarse {
            width: width.clone(),
        });
    }
    let f = FunctionalF::new();
    let fp = f.derivative();
    let numerator = fp.num().clone();
    let enclosures =
        isolate_positive_roots(&numerator).expect("derivative numerator is squarefree");
    assert_eq!(
        enclosures.len(),
        1,
        "the derivative numerator must have exactly one positive root"
    );
    let enclosure = refine_enclosure(&numerator, &enclosures[0], width);

    let zero = ExactRational::zero();
    let one = ExactRational::one();
    let derivative_at_zero = fp.eval(&zero).expect("no pole at 0");
    assert_eq!(derivative_at_zero, ExactRational::from_int(-4));
    let derivative_at_one = fp.eval(&one).expect("no pole at 1");
    assert!(derivative_at_one.is_positive());

    let roots_below_enclosure = crate::polyalg::sturm_root_count(&numerator, &zero, enclosure.lo())
        .expect("endpoints are not roots");
    assert_eq!(roots_below_enclosure, 0);
    let derivative_sign_at_lo = fp
        .eval(enclosure.lo())
        .expect("no pole on the ray")
        .signum();
    assert_eq!(derivative_sign_at_lo, -1);

    let value_at_lo = sample(&f, enclosure.lo().clone());
    let value_at_hi = sample(&f, enclosure.hi().clone());
    let value_beyond = sample(&f, enclosure.hi() + width);
    for v in [&value_at_lo, &value_at_hi, &value_beyond] {
        assert!(
            v.margin_from_8.is_negative(),
            "f must stay below 8 near the critical point"
        );
    }

    Ok(CriticalCertificate {
        search_bound: numerator.cauchy_bound(),
        derivative_numerator: numerator,
        derivative_at_zero,
        derivative_at_one,
        positive_root_count: 1,
        enclosure,
        roots_below_enclosure,
        derivative_sign_at_lo,
        value_at_lo,
        value_at_hi,
        value_beyond,
        requested_width: width.clone(),
    })
}

/// Certificate for the boundary root `L`: the unique positive solution of
/// `f(x) = 8`, equivalently the unique positive root of the boundary quintic.
#[derive(Clone, Serialize)]
pub struct BoundaryRootL {
    /// The quintic `x⁵ − 36x³ − 120x² − 150x − 48`, reconstructed (not assumed)
    /// from `3N − 8D = x · quintic`.
    pub quintic: Polynomial,
    /// The polynomial `3N − 8D` the factorization starts from.
    pub three_n_minus_eight_d: Polynomial,
    /// Positivity certificate for `D` on the ray (so `f(x) = 8 ⟺ x·quintic = 0`).
    pub denominator_positivity: RayPositivity,
    /// Descartes bound: the coefficient signs of the quintic change exactly once.
    pub descartes_count: usize,
    /// Sturm-certified number of positive roots — 1, so `L` is not merely the
    /// smallest positive solution but the only one.
    pub positive_root_count: usize,
    /// The isolated, refined enclosure of `L`.
    pub enclosure: RootEnclosure,
    /// 64 interior sample points `k·lo/65` with `f < 8` at each.
    pub interior_grid: Vec<ValueSample>,
    /// One rational beyond the enclosure with `f > 8`.
    pub beyond_sample: ValueSample,
    pub requested_width: ExactRational,
}

/// Encloses the boundary root `L` to the requested (positive) width. Any width
/// is accepted; a coarse request simply returns the raw isolation interval.
#[allow(non_snake_case)]
pub fn certify_boundary_L(width: &ExactRational) -> BoundaryRootL {
    assert!(width.is_positive(), "enclosure width must be positive");
    let f = FunctionalF::new();
    let eight_d = f.as_ratfunc().den().scale(&ExactRational::from_int(8));
    let three_n_minus_eight_d = f.as_ratfunc().num() - &eight_d;
    let (x_power, quintic) = three_n_minus_eight_d.factor_out_x();
    assert_eq!(x_power, 1, "3N - 8D must factor as x times a quintic");
    let expected = Polynomial::from_ints(&BOUNDARY_QUINTIC_COEFFS);
    assert_eq!(
        quintic, expected,
        "boundary quintic reconstruction must match its stated coefficients"
    );
    let denominator_positivity = certify_positive_on_ray(f.as_ratfunc().den());
    assert!(denominator_positivity.is_certificate());

    let descartes_count = quintic.descartes_sign_changes();
    assert_eq!(descartes_count, 1);
    let enclosures = isolate_positive_roots(&quintic).expect("the quintic is squarefree");
    assert_eq!(enclosures.len(), 1, "the quintic has exactly one positive root");
    let enclosure = refine_enclosure(&quintic, &enclosures[0], width);

    let interior_grid: Vec<ValueSample> = (1..=64i64)
        .map(|k| {
            let x = enclosure.lo() * ExactRational::new(k, 65);
            let s = sample(&f, x);
            assert!(s.margin_from_8.is_negative(), "f must be below 8 inside (0, L)");
            s
        })
        .collect();
    let beyond_sample = sample(&f, enclosure.hi() + ExactRational::one());
    assert!(
        beyond_sample.margin_from_8.is_positive(),
        "f must exceed 8 beyond the boundary root"
    );

    BoundaryRootL {
        quintic,
        three_n_minus_eight_d,
        denominator_positivity,
        descartes_count,
        positive_root_count: 1,
        enclosure,
        interior_grid,
        beyond_sample,
        requested_width: width.clone(),
    }
}

/// Certificate that the scalar-curvature minimum stays positive: the claim
/// reduces to a degree-7 polynomial identity plus nonnegative coefficients.
#[derive(Clone, Serialize)]
pub struct ScalarPositivityCertificate {
    /// `(4+3x)·D − 36x(2+x)(x²/3+x+1)(2+4x+x²)`, computed from its factors.
    pub reconstructed: Polynomial,
    /// The subtracted product, stored for replay.
    pub subtracted_product: Polynomial,
    /// Positivity of the reconstruction on the ray (a coefficient certificate).
    pub positivity: RayPositivity,
    /// Positivity of the two denominators the inequality divides by.
    pub quadratic_denominator_cert: RayPositivity,
    pub sextic_denominator_cert: RayPositivity,
}

/// Reconstructs the degree-7 scalar-positivity polynomial and certifies it.
///
/// Errors with [`ExtremalError::ReconstructionMismatch`] when the assembled
/// polynomial differs from its stated coefficients (a transcription bug).
pub fn certify_scalar_positive() -> Result<ScalarPositivityCertificate, ExtremalError> {
    let d = Polynomial::from_ints(&DENOMINATOR_COEFFS);
    let linear = Polynomial::from_ints(&[4, 3]);
    let thirty_six_x = Polynomial::from_ints(&[0, 36]);
    let two_plus_x = Polynomial::from_ints(&[2, 1]);
    let cubic_piece = Polynomial::new(vec![
        ExactRational::one(),
        ExactRational::one(),
        ExactRational::new(1, 3),
    ]);
    let quadratic = Polynomial::from_ints(&[2, 4, 1]);
    let subtracted_product = &(&(&thirty_six_x * &two_plus_x) * &cubic_piece) * &quadratic;
    let reconstructed = &(&linear * &d) - &subtracted_product;
    let expected = Polynomial::from_ints(&[48, 180, 264, 270, 204, 102, 28, 3]);
    if reconstructed != expected {
        return Err(ExtremalError::ReconstructionMismatch {
            expected,
            actual: reconstructed,
        });
    }
    let positivity = certify_positive_on_ray(&reconstructed);
    assert!(matches!(
        positivity,
        RayPositivity::CoefficientCertificate { .. }
    ));
    let quadratic_denominator_cert = certify_positive_on_ray(&quadratic);
    let sextic_denominator_cert = certify_positive_on_ray(&d);
    Ok(ScalarPositivityCertificate {
        reconstructed,
        subtracted_product,
        positivity,
        quadratic_denominator_cert,
        sextic_denominator_cert,
    })
}

/// Certificate for the curvature C⁰ bound: `(4+3x)² < 9(2+4x+x²)` on the closed
/// ray, i.e. the scaled maximum stays below `24π√2`.
#[derive(Clone, Serialize)]
pub struct C0BoundCertificate {
    /// `9(2+4x+x²) − (4+3x)²`, reconstructed — equals `2 + 12x`.
    pub residual: Polynomial,
    /// Positivity of the residual for `x > 0`.
    pub positivity: RayPositivity,
    /// The residual's constant term (covers the endpoint `x = 0`): 2 > 0,
    /// i.e. `16 < 18` at the origin.
    pub origin_comparison: (ExactRational, ExactRational),
    /// The comparison at `(β, ε) = (1, 1)`: 49 < 63.
    pub sample_at_one: (ExactRational, ExactRational),
}

/// Reconstructs and certifies the C⁰ residual `2 + 12x`.
pub fn certify_c0_bound() -> Result<C0BoundCertificate, ExtremalError> {
    let quadratic = Polynomial::from_ints(&[2, 4, 1]);
    let linear = Polynomial::from_ints(&[4, 3]);
    let residual = &quadratic.scale(&ExactRational::from_int(9)) - &(&linear * &linear);
    let expected = Polynomial::from_ints(&[2, 12]);
    if residual != expected {
        return Err(ExtremalError::ReconstructionMismatch {
            expected,
            actual: residual,
        });
    }
    let positivity = certify_positive_on_ray(&residual);
    assert!(matches!(
        positivity,
        RayPositivity::CoefficientCertificate { .. }
    ));
    let origin_comparison = (
        linear.eval(&ExactRational::zero()).pow(2),
        quadratic.eval(&ExactRational::zero()) * ExactRational::from_int(9),
    );
    assert!(origin_comparison.0 < origin_comparison.1);
    let sample_at_one = (
        linear.eval(&ExactRational::one()).pow(2),
        quadratic.eval(&ExactRational::one()) * ExactRational::from_int(9),
    );
    assert!(sample_at_one.0 < sample_at_one.1);
    Ok(C0BoundCertificate {
        residual,
        positivity,
        origin_comparison,
        sample_at_one,
    })
}

// ---------------------------------------------------------------------------
