//! Intersection lattice of the two-point blow-up of the complex projective plane.
//!
//! Classes are written in the basis `(F₁, F₂, E)`, where `F₁, F₂` are the two
//! fibration classes and `E` is the exceptional class, with Gram matrix
//!
//! ```text
//!        ⎡ 0  1  0 ⎤
//!        ⎢ 1  0  0 ⎥
//!        ⎣ 0  0 −1 ⎦
//! ```
//!
//! The anticanonical class is `c₁ = 2F₁ + 2F₂ − E` with `c₁² = 7`. The Kähler
//! classes considered are the bilaterally symmetric ones
//! `[ω] = (β+ε)(F₁+F₂) − εE` with `β, ε > 0`; the swap involution exchanges
//! `F₁ ↔ F₂` and fixes every such class. The lattice signature `(1, 2)` is
//! computed from the Gram matrix by exact symmetric diagonalization, never
//! hardcoded — it is what bounds the second Betti number of bubbles later.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::ExactRational;

/// Errors from constructing Kähler data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    /// Kähler parameters must be strictly positive.
    #[error("Kähler parameters must be positive (got beta = {beta}, eps = {eps})")]
    NonPositiveParams { beta: ExactRational, eps: ExactRational },
}

/// A second-cohomology class `f1·F₁ + f2·F₂ + e·E` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyClass {
    pub f1: ExactRational,
    pub f2: ExactRational,
    pub e: ExactRational,
}

impl CohomologyClass {
    pub fn new(f1: ExactRational, f2: ExactRational, e: ExactRational) -> Self {
        CohomologyClass { f1, f2, e }
    }

    pub fn from_ints(f1: i64, f2: i64, e: i64) -> Self {
        CohomologyClass::new(
            ExactRational::from_int(f1),
            ExactRational::from_int(f2),
            ExactRational::from_int(e),
        )
    }

    pub fn scale(&self, k: &ExactRational) -> CohomologyClass {
        CohomologyClass::new(&self.f1 * k, &self.f2 * k, &self.e * k)
    }

    pub fn add(&self, other: &CohomologyClass) -> CohomologyClass {
        CohomologyClass::new(
            &self.f1 + &other.f1,
            &self.f2 + &other.f2,
            &self.e + &other.e,
        )
    }

    /// Self-intersection number.
    pub fn square(&self) -> ExactRational {
        pair(self, self)
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})F1 + ({})F2 + ({})E", self.f1, self.f2, self.e)
    }
}

impl fmt::Debug for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Gram matrix of the intersection form in the basis `(F₁, F₂, E)`.
pub fn gram_matrix() -> [[i64; 3]; 3] {
    [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
}

/// Intersection pairing: `a·b = a₁b₂ + a₂b₁ − a₃b₃`.
pub fn pair(a: &CohomologyClass, b: &CohomologyClass) -> ExactRational {
    &a.f1 * &b.f2 + &a.f2 * &b.f1 - &a.e * &b.e
}

/// The anticanonical class `c₁ = 2F₁ + 2F₂ − E`.
pub fn c1() -> CohomologyClass {
    CohomologyClass::from_ints(2, 2, -1)
}

/// The swap involution `F₁ ↔ F₂`, `E ↦ E`.
pub fn swap_involution(c: &CohomologyClass) -> CohomologyClass {
    CohomologyClass::new(c.f2.clone(), c.f1.clone(), c.e.clone())
}

/// Signature `(n₊, n₋, n₀)` of a symmetric rational matrix, by exact congruence
/// diagonalization (symmetric row/column elimination; a zero diagonal pivot is
/// repaired by adding — or if that cancels, subtracting — another row and column).
#[allow(clippy::needless_range_loop)] // paired row/column updates read best with indices
pub fn symmetric_signature(matrix: &[Vec<ExactRational>]) -> (usize, usize, usize) {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    for i in 0..n {
        for j in 0..i {
            assert_eq!(matrix[i][j], matrix[j][i], "matrix must be symmetric");
        }
    }
    let mut m: Vec<Vec<ExactRational>> = matrix.to_vec();
    let add_row_col = |m: &mut Vec<Vec<ExactRational>>, i: usize, j: usize, sign: i64| {
        let s = ExactRational::from_int(sign);
        for c in 0..n {
            let v = &m[j][c] * &s;
            m[i][c] = &m[i][c] + &v;
        }
        for r in 0..n {
            let v = &m[r][j] * &s;
            m[r][i] = &m[r][i] + &v;
        }
    };
    for i in 0..n {
        if m[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !m[i][j].is_zero()) {
                add_row_col(&mut m, i, j, 1);
                if m[i][i].is_zero() {
                    // the addition cancelled (m[j][j] = -2 m[i][j]); subtracting
                    // twice gives diagonal -4 m[i][j] ≠ 0
                    add_row_col(&mut m, i, j, -2);
                }
            } else {
                continue; // genuinely degenerate direction
            }
        }
        let pivot = m[i][i].clone();
        for r in i + 1..n {
            if m[r][i].is_zero() {
                continue;
            }
            let f = &m[r][i] / &pivot;
            for c in 0..n {
                let v = &m[i][c] * &f;
                m[r][c] = &m[r][c] - &v;
            }
            for c in 0..n {
                let v = &m[c][i] * &f;
                m[c][r] = &m[c][r] - &v;
            }
        }
    }
    let mut sig = (0, 0, 0);
    for (i, row) in m.iter().enumerate() {
        match row[i].signum() {
            1 => sig.0 += 1,
            -1 => sig.1 += 1,
            _ => sig.2 += 1,
        }
    }
    sig
}

/// Signature `(b₊, b₋)` of the intersection lattice, computed (not assumed) from
/// the Gram matrix. Panics if the form were degenerate — it is not.
pub fn lattice_signature() -> (usize, usize) {
    let g: Vec<Vec<ExactRational>> = gram_matrix()
        .iter()
        .map(|row| row.iter().map(|&v| ExactRational::from_int(v)).collect())
        .collect();
    let (pos, neg, zero) = symmetric_signature(&g);
    assert_eq!(zero, 0, "intersection form must be nondegenerate");
    (pos, neg)
}

/// Strictly positive Kähler parameters `(β, ε)` for the bilaterally symmetric
/// classes `[ω] = (β+ε)(F₁+F₂) − εE`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KahlerParams {
    beta: ExactRational,
    eps: ExactRational,
}

impl KahlerParams {
    #[allow(clippy::result_large_err)] // the error carries the offending exact values
    pub fn new(beta: ExactRational, eps: ExactRational) -> Result<Self, SurfaceError> {
        if !beta.is_positive() || !eps.is_positive() {
            return Err(SurfaceError::NonPositiveParams { beta, eps });
        }
        Ok(KahlerParams { beta, eps })
    }

    #[allow(clippy::result_large_err)]
    pub fn from_ints(beta: i64, eps: i64) -> Result<Self, SurfaceError> {
        KahlerParams::new(ExactRational::from_int(beta), ExactRational::from_int(eps))
    }

    pub fn beta(&self) -> &ExactRational {
        &self.beta
    }

    pub fn eps(&self) -> &ExactRational {
        &self.eps
    }

    /// The shape parameter `x = ε/β`.
    pub fn x(&self) -> ExactRational {
        &self.eps / &self.beta
    }

    /// The Kähler class `(β+ε)(F₁+F₂) − εE`.
    pub fn omega_class(&self) -> CohomologyClass {
        let be = &self.beta + &self.eps;
        CohomologyClass::new(be.clone(), be, -&self.eps)
    }

    /// Volume `[ω]²/2 = (2β² + 4βε + ε²)/2`.
    pub fn volume(&self) -> ExactRational {
        self.omega_class().square() * ExactRational::new(1, 2)
    }
}

impl fmt::Debug for KahlerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KahlerParams(beta = {}, eps = {})", self.beta, self.eps)
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
    fn pairing_matches_gram_matrix() {
        let basis = [
            CohomologyClass::from_ints(1, 0, 0),
            CohomologyClass::from_ints(0, 1, 0),
            CohomologyClass::from_ints(0, 0, 1),
        ];
        let g = gram_matrix();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                assert_eq!(pair(a, b), ExactRational::from_int(g[i][j]));
            }
        }
    }

    #[test]
    fn anticanonical_squares_to_seven() {
        assert_eq!(pair(&c1(), &c1()), q("7"));
    }

    #[test]
    fn exceptional_and_difference_classes() {
        let e = CohomologyClass::from_ints(0, 0, 1);
        assert_eq!(e.square(), q("-1"));
        let f1_minus_e = CohomologyClass::from_ints(1, 0, -1);
        let f2_minus_e = CohomologyClass::from_ints(0, 1, -1);
        assert_eq!(f1_minus_e.square(), q("-1"));
        assert_eq!(f2_minus_e.square(), q("-1"));
    }

    #[test]
    fn signature_is_one_two() {
        assert_eq!(lattice_signature(), (1, 2));
    }

    #[test]
    fn symmetric_signature_handles_zero_and_degenerate_pivots() {
        // hyperbolic plane: signature (1,1)
        let h = vec![vec![q("0"), q("1")], vec![q("1"), q("0")]];
        assert_eq!(symmetric_signature(&h), (1, 1, 0));
        // the pivot-repair cancellation case: [[0,1],[1,-2]]
        let c = vec![vec![q("0"), q("1")], vec![q("1"), q("-2")]];
        assert_eq!(symmetric_signature(&c), (1, 1, 0));
        // rank-deficient
        let d = vec![vec![q("1"), q("1")], vec![q("1"), q("1")]];
        assert_eq!(symmetric_signature(&d), (1, 0, 1));
    }

    #[test]
    fn kahler_class_and_volume() {
        let p = KahlerParams::from_ints(1, 1).unwrap();
        let omega = p.omega_class();
        assert_eq!(omega, CohomologyClass::from_ints(2, 2, -1));
        assert_eq!(omega.square(), q("7"));
        assert_eq!(p.volume(), q("7/2"));
        assert_eq!(p.x(), q("1"));
        let p2 = KahlerParams::new(q("2"), q("1/2")).unwrap();
        // 2b^2 + 4be + e^2 = 8 + 4 + 1/4 = 49/4, volume 49/8
        assert_eq!(p2.volume(), q("49/8"));
        assert_eq!(p2.x(), q("1/4"));
    }

    #[test]
    fn kahler_params_must_be_positive() {
        assert!(matches!(
            KahlerParams::from_ints(0, 1),
            Err(SurfaceError::NonPositiveParams { .. })
        ));
        assert!(KahlerParams::new(q("1"), q("-1/2")).is_err());
    }

    #[test]
    fn swap_involution_fixes_symmetric_classes() {
        let p = KahlerParams::new(q("3/2"), q("2/3")).unwrap();
        let omega = p.omega_class();
        assert_eq!(swap_involution(&omega), omega);
        assert_eq!(swap_involution(&c1()), c1());
        let asym = CohomologyClass::from_ints(1, 2, 3);
        let swapped = swap_involution(&asym);
        assert_eq!(swapped, CohomologyClass::from_ints(2, 1, 3));
        // the involution is an isometry
        assert_eq!(pair(&swapped, &swapped), pair(&asym, &asym));
    }
}
