//! Analytic comparison constants, with π and surd bookkeeping kept exact.
//!
//! Four pieces:
//! * [`certify_A_below_9`] — the energy stays below 9 everywhere on the ray, by
//!   a coefficientwise comparison `N ≤ 3D` (so `f = 3N/D < 9`).
//! * [`cone_membership`] — membership in the controlled cone `𝒜 < (3/2)c₁²`,
//!   the threshold `21/2` imported from the lattice pairing, never re-hardcoded.
//! * [`yamabe_lower`] — the conformal-invariant lower bound
//!   `Y² ≥ 64π²(21/2 − 𝒜)`; at `𝒜 ≤ 9` the coefficient is ≥ 96, i.e. `Y ≥ 4π√6`.
//! * [`sobolev_upper`] — the Sobolev constant bound `C_S ≤ max(6, 24π√2)/(4π√6)`.
//!   The only place π matters is the max gate, which a width-1 rational
//!   enclosure settles; the quotient itself cancels π symbolically and
//!   simplifies to `2√3` exactly.
//!
//! The underlying integral identity `∫ s² dμ = 32π²·𝒜` and the Gauss–Bonnet /
//! signature bookkeeping behind the Yamabe inequality are taken as the
//! contract; everything downstream of them is certified arithmetic.

use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{compare_surds, pi_enclosure, ExactRational, PiSqQuantity, SurdQuantity};
use crate::extremal::{DENOMINATOR_COEFFS, NUMERATOR_COEFFS};
use crate::polyalg::{certify_positive_on_ray, Polynomial, RayPositivity};
use crate::surface::{c1, pair};

/// Errors from the analytic bounds.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    /// The Yamabe bound is vacuous outside the controlled cone.
    #[error("energy value {a_value} is not below the cone threshold 21/2")]
    OutsideCone { a_value: ExactRational },
}

/// The controlled-cone threshold `(3/2)·c₁²`, computed from the lattice.
/// Aborts if the lattice pairing stops giving `c₁² = 7` — that would mean the
/// surface model and the analytic constants have drifted apart.
pub fn cone_threshold() -> ExactRational {
    let anticanonical = c1();
    let c1_squared = pair(&anticanonical, &anticanonical);
    assert_eq!(
        c1_squared,
        ExactRational::from_int(7),
        "anticanonical self-intersection must equal 7"
    );
    ExactRational::new(3, 2) * c1_squared
}

/// Certificate that the energy is dominated by 9 on the whole closed ray.
#[derive(Clone, Serialize)]
pub struct DominationCertificate {
    /// The numerator `N` (the energy is `3N/D`, so `N < 3D` suffices).
    pub numerator: Polynomial,
    /// `3D`, the comparison polynomial.
    pub tripled_denominator: Polynomial,
    /// Coefficientwise gaps `3D_i − N_i`, all nonnegative.
    pub coefficient_gaps: Vec<ExactRational>,
    /// How many gaps are strictly positive (all but the leading one).
    pub strict_gap_count: usize,
    /// Positivity of `D` on the ray, which makes the division legitimate.
    pub denominator_positivity: RayPositivity,
}

/// Compares `N` against `3D` coefficient by coefficient: every gap is ≥ 0 and
/// six of seven are strictly positive, so `f(x) < 9` for every `x ≥ 0` while
/// the limit at infinity is exactly 9.
#[allow(non_snake_case)]
pub fn certify_A_below_9() -> DominationCertificate {
    let numerator = Polynomial::from_ints(&NUMERATOR_COEFFS);
    let denominator = Polynomial::from_ints(&DENOMINATOR_COEFFS);
    let tripled_denominator = denominator.scale(&ExactRational::from_int(3));
    let coefficient_gaps: Vec<ExactRational> = (0..NUMERATOR_COEFFS.len())
        .map(|i| tripled_denominator.coeff(i) - numerator.coeff(i))
        .collect();
    assert!(
        coefficient_gaps.iter().all(|g| !g.is_negative()),
        "every coefficient of N must be at most the matching coefficient of 3D"
    );
    let strict_gap_count = coefficient_gaps.iter().filter(|g| g.is_positive()).count();
    assert!(strict_gap_count > 0, "at least one gap must be strict");
    let denominator_positivity = certify_positive_on_ray(&denominator);
    assert!(denominator_positivity.is_certificate());
    DominationCertificate {
        numerator,
        tripled_denominator,
        coefficient_gaps,
        strict_gap_count,
        denominator_positivity,
    }
}

/// Membership record for the controlled cone.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct ConeMembership {
    pub a_value: ExactRational,
    /// `21/2 − a_value`; membership is equivalent to this being positive.
    pub margin: ExactRational,
    pub inside: bool,
}

/// Tests `a_value < (3/2)c₁² = 21/2` and records the exact margin.
pub fn cone_membership(a_value: ExactRational) -> ConeMembership {
    let margin = cone_threshold() - &a_value;
    let inside = margin.is_positive();
    ConeMembership {
        a_value,
        margin,
        inside,
    }
}

/// The Yamabe lower bound `Y² ≥ 64π²(21/2 − 𝒜)` in exact π² units.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct YamabeBound {
    /// The certified lower bound for `Y²`, as a π² multiple.
    pub y_squared_pi2: PiSqQuantity,
    /// Whether the coefficient reaches 96, i.e. whether `Y ≥ 4π√6` follows.
    pub exceeds_4pi_sqrt6: bool,
}

/// Evaluates the Yamabe bound at an energy value inside the controlled cone.
pub fn yamabe_lower(a_value: &ExactRational) -> Result<YamabeBound, BoundsError> {
    let membership = cone_membership(a_value.clone());
    if !membership.inside {
        return Err(BoundsError::OutsideCone {
            a_value: a_value.clone(),
        });
    }
    let coefficient = ExactRational::from_int(64) * membership.margin;
    let exceeds_4pi_sqrt6 = coefficient >= ExactRational::from_int(96);
    Ok(YamabeBound {
        y_squared_pi2: PiSqQuantity::new(coefficient),
        exceeds_4pi_sqrt6,
    })
}

/// Which arm of `max(6, s_max·V^{1/2})` is active, with the exact witness that
/// decided it.
#[derive(Clone, Serialize)]
#[serde(tag = "arm")]
pub enum MaxArm {
    /// The curvature branch `s_max·V^{1/2} = 24π√2` wins: a rational lower
    /// bound for π already pushes `24·π_lo·√2` above 6.
    ScalarBranch {
        pi_lower: ExactRational,
        witness: SurdQuantity,
        constant_branch: ExactRational,
    },
}

/// The Sobolev upper bound, fully simplified.
#[derive(Clone, Serialize)]
pub struct SobolevBound {
    /// `max(6, 24π√2)/(4π√6)` with π cancelled: exactly `2√3`.
    pub value: SurdQuantity,
    /// The gate record showing the curvature branch of the max was active.
    pub max_arm: MaxArm,
    /// The π-free quotient `6√2 / √6` before simplification, kept for replay.
    pub cancelled_numerator: SurdQuantity,
    pub cancelled_denominator: SurdQuantity,
}

/// Certifies `C_S ≤ max(6, 24π√2)/(4π√6) = 2√3` using a π enclosure of the
/// requested width for the max gate. The returned value is width-independent:
/// the enclosure only decides which arm wins, never enters the value.
pub fn sobolev_upper_with_pi_width(max_width: &ExactRational) -> SobolevBound {
    let pi = pi_enclosure(max_width);
    let pi_lower = pi.lo().clone();
    // 24·π√2 > 24·π_lo·√2, and the latter beats 6 already at width 1.
    let witness = SurdQuantity::new(ExactRational::from_int(24) * &pi_lower, 2);
    let constant_branch = ExactRational::from_int(6);
    let six_surd = SurdQuantity::new(constant_branch.clone(), 1);
    assert_eq!(
        compare_surds(&witness, &six_surd),
        std::cmp::Ordering::Greater,
        "the curvature arm must dominate the constant arm"
    );
    // (24π√2)/(4π√6): π cancels, 24/4 = 6, leaving 6√2/√6.
    let cancelled_numerator = SurdQuantity::new(ExactRational::from_int(6), 2);
    let cancelled_denominator = SurdQuantity::new(ExactRational::one(), 6);
    let value = cancelled_numerator.div(&cancelled_denominator);
    assert_eq!(value.square(), ExactRational::from_int(12));
    SobolevBound {
        value,
        max_arm: MaxArm::ScalarBranch {
            pi_lower,
            witness,
            constant_branch,
        },
        cancelled_numerator,
        cancelled_denominator,
    }
}

/// [`sobolev_upper_with_pi_width`] at the default width 1 (which suffices).
pub fn sobolev_upper() -> SobolevBound {
    sobolev_upper_with_pi_width(&ExactRational::one())
}

// ---------------------------------------------------------------------------
