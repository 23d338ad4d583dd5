//! Numeric cross-check of the exact positive-root counter. Random integer
//! polynomials are sent through two independent programs — the Sturm-chain
//! counter working in exact rationals, and a floating-point companion-matrix
//! eigensolver — and the counts must agree whenever floating point is
//! unambiguous. Draws whose eigenvalues sit near a decision boundary (almost
//! real, almost zero, or clustered) are skipped rather than guessed at; the
//! test demands a minimum number of clean comparisons so the skips cannot
//! hollow it out.

use extremal_cert_core::exactnum::ExactRational;
use extremal_cert_core::polyalg::{sturm_root_count, Polynomial};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Count of positive real eigenvalues of the companion matrix, or `None`
/// when f64 cannot decide safely.
fn numeric_positive_roots(coeffs: &[i64]) -> Option<usize> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n] as f64;
    let companion = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -(coeffs[i] as f64) / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eigen = companion.complex_eigenvalues();
    for i in 0..eigen.len() {
        for j in (i + 1)..eigen.len() {
            let dre = eigen[i].re - eigen[j].re;
            let dim = eigen[i].im - eigen[j].im;
            if (dre * dre + dim * dim).sqrt() < 1e-4 {
                return None; // clustered: forward error may flip the count
            }
        }
    }
    let mut count = 0;
    for lambda in eigen.iter() {
        let im = lambda.im.abs();
        if im > 1e-9 && im < 1e-3 {
            return None; // ambiguous: could be a real root with rounding noise
        }
        if im <= 1e-9 {
            if lambda.re.abs() < 1e-6 {
                return None; // too close to the origin boundary
            }
            if lambda.re > 0.0 {
                count += 1;
            }
        }
    }
    Some(count)
}

#[test]
fn sturm_counts_match_companion_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut checked = 0usize;
    let mut attempts = 0usize;
    while checked < 120 && attempts < 4000 {
        attempts += 1;
        let degree = rng.gen_range(3..=7usize);
        let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-9..=9i64)).collect();
        if coeffs[0] == 0 {
            continue; // root at the origin sits on the count boundary
        }
        if coeffs[degree] == 0 {
            coeffs[degree] = rng.gen_range(1..=9);
        }
        let p = Polynomial::from_ints(&coeffs);
        if !p.is_squarefree() {
            continue;
        }
        let Some(numeric) = numeric_positive_roots(&coeffs) else {
            continue;
        };
        let bound = p.cauchy_bound();
        let exact = sturm_root_count(&p, &ExactRational::zero(), &bound).unwrap();
        assert_eq!(exact, numeric, "count disagreement at coefficients {coeffs:?}");
        checked += 1;
    }
    assert!(
        checked >= 100,
        "only {checked} clean comparisons in {attempts} draws"
    );
    println!("exact and numeric root counts agree on {checked} random polynomials");
}
