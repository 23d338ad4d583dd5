//! The bubble-exclusion engine.
//!
//! A degenerating sequence of unit-volume extremal metrics could, in principle,
//! concentrate curvature and split off an asymptotically locally Euclidean
//! (ALE) gravitational instanton — a "bubble" `X` with boundary group `Γ` at
//! infinity. This module enumerates every candidate `(b₂(X), intersection
//! form, Γ)` permitted by the curvature energy budgets and kills each one with
//! an exact certificate:
//!
//! 1. [`energy_budgets`] — the Ricci and anti-self-dual Weyl budgets
//!    `8(𝒜−7)` and `12 + (4/3)𝒜` in π² units.
//! 2. [`exclude_trivial_gamma`] — `Γ = 1` forces `b₂ = 0` and a flat bubble:
//!    impossible for a deepest bubble.
//! 3. The `b₂ ≠ 0` axiom plus `b₂ ≤ 2`, the latter computed from the lattice
//!    signature of the ambient surface, never hardcoded.
//! 4. [`forced_symmetry`] — two disjoint bubble copies would need `24π²` of
//!    Weyl energy against a budget of `68/3 < 24`, so the bubble region is
//!    invariant under the swap involution.
//! 5. [`sprite_filter`] / [`elf_filter`] — the Ricci budget admits only line
//!    bundles of degree −2 or −3 at `b₂ = 1`, and only `Γ = Z₃` with form
//!    `[[−2,1],[1,−2]]` at `b₂ = 2`.
//! 6. [`mod3_obstruction`] / [`area_contradiction`] — the three surviving
//!    cases die by Diophantine arithmetic: a mod-3 descent for the degree −3
//!    case, and a Pell-equation area contradiction for the other two.
//!
//! [`run_full_exclusion`] chains all of it and returns one certificate per
//! stage plus a final verdict. Every certificate stores its exact intermediate
//! quantities and strictness margin, and can be replayed.
//!
//! Budgets bound limit-suprema, so the actual energy of any bubble is
//! *strictly* below budget; the engine treats budget comparisons accordingly
//! and records which inequalities are strict.

use num_integer::Roots;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

use crate::exactnum::ExactRational;
use crate::polyalg::{certify_positive_on_ray, Polynomial, RayPositivity, RootEnclosure};
use crate::surface::{lattice_signature, pair, CohomologyClass};

/// Errors from the exclusion engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BubbleError {
    /// Budgets only make sense above the lattice floor `𝒜 ≥ c₁² = 7`.
    #[error("energy bound {a_bound} must exceed 7 for a positive Ricci budget")]
    InvalidBound { a_bound: ExactRational },
    /// The trivial-group exclusion needs the Ricci budget at or below 8.
    #[error("Ricci budget {ricci_pi2} exceeds 8; the trivial-group exclusion does not apply")]
    BudgetTooLarge { ricci_pi2: ExactRational },
    /// Two disjoint bubble copies need 24π² of Weyl energy; the argument
    /// requires the budget to sit strictly below that.
    #[error("Weyl budget {wminus_pi2} is not strictly below 24; the symmetry argument fails")]
    InsufficientBudgetGap { wminus_pi2: ExactRational },
    /// The solid-torus gluing matrix must have determinant ±1.
    #[error("gluing matrix has determinant {determinant}, expected ±1")]
    NonUnimodular { determinant: i64 },
    /// A Pell pair violated the sign conditions the Pell identity guarantees.
    #[error("pair (j, l) = ({j}, {l}) violates the Pell sign lemma")]
    SignLemmaFailure { j: u64, l: u64 },
    /// A candidate survived every rule — the chain is broken, surface it.
    #[error("exclusion incomplete; surviving candidates: {}", survivors.join("; "))]
    IncompleteExclusion { survivors: Vec<String> },
}

// ---------------------------------------------------------------------------
// Budgets
// ---------------------------------------------------------------------------

/// The two curvature energy budgets generated by an energy bound, in π² units.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnergyBudget {
    /// Bound on `∫|r̊|²`: `8(a_bound − 7)`.
    pub ricci_pi2: ExactRational,
    /// Bound on `∫|W₋|²`: `12 + (4/3)·a_bound`.
    pub wminus_pi2: ExactRational,
    /// The energy bound that generated them.
    pub a_bound: ExactRational,
}

/// Converts an energy bound into the two budgets, via `∫s² = 32π²·𝒜`, the
/// lattice identity `(1/8π²)∫(s²/4 − |r̊|²) = c₁² = 7`, and the signature
/// identity with `τ(M) = −1`.
pub fn energy_budgets(a_bound: &ExactRational) -> Result<EnergyBudget, BubbleError> {
    if a_bound <= &ExactRational::from_int(7) {
        return Err(BubbleError::InvalidBound {
            a_bound: a_bound.clone(),
        });
    }
    let ricci_pi2 = ExactRational::from_int(8) * (a_bound - &ExactRational::from_int(7));
    let wminus_pi2 = ExactRational::from_int(12) + ExactRational::new(4, 3) * a_bound;
    Ok(EnergyBudget {
        ricci_pi2,
        wminus_pi2,
        a_bound: a_bound.clone(),
    })
}

/// The orbifold Gauss–Bonnet combination `(1/8π²)∫(|W₋|² − |r̊|²/2) =
/// χ(X) − 1/|Γ|` rearranged to π² units: `8(1 + b2 − 1/gamma_order)`,
/// using `χ(X) = 1 + b₂`.
pub fn gauss_bonnet_deficit(b2: u64, gamma_order: u64) -> ExactRational {
    assert!(gamma_order >= 1, "the boundary group has positive order");
    ExactRational::from_int(8)
        * (ExactRational::from_int(1 + b2 as i64)
            - ExactRational::new(1, gamma_order as i64))
}

// ---------------------------------------------------------------------------
// Candidates
// ---------------------------------------------------------------------------

/// A symmetric integer intersection form of rank ≤ 2.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionForm {
    entries: Vec<Vec<i64>>,
}

impl IntersectionForm {
    pub fn empty() -> Self {
        IntersectionForm { entries: vec![] }
    }

    pub fn rank1(d: i64) -> Self {
        IntersectionForm {
            entries: vec![vec![d]],
        }
    }

    /// `[[a, b], [b, c]]`.
    pub fn rank2(a: i64, b: i64, c: i64) -> Self {
        IntersectionForm {
            entries: vec![vec![a, b], vec![b, c]],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(n <= 2, "only forms of rank at most 2 arise");
        for row in &rows {
            assert_eq!(row.len(), n, "the form must be square");
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, rows[j][i], "the form must be symmetric");
            }
        }
        IntersectionForm { entries: rows }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn determinant(&self) -> i64 {
        match self.size() {
            1 => self.entries[0][0],
            2 => self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0],
            n => panic!("determinant undefined for rank {n}"),
        }
    }
}

impl fmt::Debug for IntersectionForm {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{self}")
    }
}

impl fmt::Display for IntersectionForm {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(out, "[{}]", rows.join(","))
    }
}

/// True iff the form is negative definite (leading principal minors alternate
/// in sign starting negative). The empty form is vacuously negative definite.
pub fn negdef_check(form: &IntersectionForm) -> bool {
    match form.size() {
        0 => true,
        1 => form.entry(0, 0) < 0,
        2 => form.entry(0, 0) < 0 && form.determinant() > 0,
        _ => unreachable!("forms are rank ≤ 2 by construction"),
    }
}

/// One enumerated bubble candidate: its second Betti number, intersection
/// form, and boundary group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BubbleCandidate {
    pub b2: u64,
    pub form: IntersectionForm,
    pub gamma_order: u64,
    pub gamma_label: String,
    /// The Lens space at infinity `(p, q)`, when rank 2 makes it nontrivial.
    pub lens: Option<(u64, u64)>,
}

impl BubbleCandidate {
    /// Validates the structural invariants before admitting a candidate:
    /// the form is negative definite (checked, not assumed) and matches `b₂`,
    /// and `|Γ|` agrees with the form (`k` for `(−k)`, `kℓ−1` for rank 2).
    pub fn new(
        b2: u64,
        form: IntersectionForm,
        gamma_order: u64,
        gamma_label: impl Into<String>,
        lens: Option<(u64, u64)>,
    ) -> Self {
        assert_eq!(form.size() as u64, b2, "form rank must equal b2");
        assert!(negdef_check(&form), "candidate forms must be negative definite");
        match b2 {
            1 => assert_eq!(gamma_order as i64, -form.entry(0, 0)),
            2 => {
                let k = -form.entry(0, 0);
                let l = -form.entry(1, 1);
                assert_eq!(form.entry(0, 1), 1, "rank-2 plumbing has off-diagonal 1");
                assert_eq!(gamma_order as i64, k * l - 1);
            }
            _ => {}
        }
        BubbleCandidate {
            b2,
            form,
            gamma_order,
            gamma_label: gamma_label.into(),
            lens,
        }
    }

    /// Short human-readable label for error messages.
    pub fn label(&self) -> String {
        format!(
            "b2={}, form={}, Gamma={}",
            self.b2, self.form, self.gamma_label
        )
    }
}

// ---------------------------------------------------------------------------
// Rules and certificates
// ---------------------------------------------------------------------------

/// The seven exclusion rules, in chain order.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuleId {
    TrivialGammaEnergy,
    BottomAxiom,
    ForcedSymmetry,
    SpriteRicci,
    ElfWminus,
    CaseI_Mod3,
    CaseII_III_PellArea,
}

impl fmt::Display for RuleId {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RuleId::TrivialGammaEnergy => "TrivialGammaEnergy",
            RuleId::BottomAxiom => "BottomAxiom",
            RuleId::ForcedSymmetry => "ForcedSymmetry",
            RuleId::SpriteRicci => "SpriteRicci",
            RuleId::ElfWminus => "ElfWminus",
            RuleId::CaseI_Mod3 => "CaseI_Mod3",
            RuleId::CaseII_III_PellArea => "CaseII_III_PellArea",
        };
        write!(out, "{name}")
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "TrivialGammaEnergy" => Ok(RuleId::TrivialGammaEnergy),
            "BottomAxiom" => Ok(RuleId::BottomAxiom),
            "ForcedSymmetry" => Ok(RuleId::ForcedSymmetry),
            "SpriteRicci" => Ok(RuleId::SpriteRicci),
            "ElfWminus" => Ok(RuleId::ElfWminus),
            "CaseI_Mod3" => Ok(RuleId::CaseI_Mod3),
            "CaseII_III_PellArea" => Ok(RuleId::CaseII_III_PellArea),
            other => Err(format!("unknown rule id: {other}")),
        }
    }
}

/// What a certificate applies to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "scope")]
pub enum CandidateScope {
    /// The full enumeration — budget-level and axiom-level rules.
    AllCandidates,
    /// A single enumerated candidate.
    Single { candidate: BubbleCandidate },
    /// A described family of candidates.
    Family { description: String },
}

/// Per-rule exact intermediate data. Everything needed to replay the rule's
/// decisive arithmetic is stored here.
#[allow(clippy::large_enum_variant)] // certificates are built once and boxed nowhere hot
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "detail")]
pub enum CertData {
    TrivialGamma {
        ricci_budget: ExactRational,
        /// The signature identity at Γ = 1 gives `∫|W₋|² = 12π²·b₂`.
        wminus_per_b2: ExactRational,
        /// Gauss–Bonnet then forces `∫|r̊|² = 8π²·b₂`.
        ricci_per_b2: ExactRational,
        /// `b₂ = 1` would already need 8π² of Ricci energy, at or above budget
        /// — impossible since actual energies sit strictly below budget.
        b2_one_required_ricci: ExactRational,
        forced_b2: u64,
    },
    BottomAxiom {
        /// The geometric input recorded without computation.
        statement: String,
        b2_lower: u64,
        /// Computed from the lattice signature, not hardcoded.
        b2_upper: u64,
        ambient_signature: (usize, usize),
    },
    ForcedSymmetry {
        /// Minimum Weyl energy of one bubble copy: the deficit at (b₂, |Γ|) = (1, 2).
        single_copy_minimum: ExactRational,
        double_copy_requirement: ExactRational,
        wminus_budget: ExactRational,
    },
    Sprite {
        /// `k ↦ 8(k−2)²/k` for small k.
        energies: Vec<(u64, ExactRational)>,
        admitted: Vec<u64>,
        /// k = 4 is the first arithmetic rejection beyond the admitted range.
        first_rejected_beyond: u64,
        /// k = 1 fails twice over: its energy is not strictly below budget,
        /// and Γ = Z₁ is already excluded by the trivial-group rule.
        k1_note: String,
        ricci_budget: ExactRational,
    },
    Elf {
        /// `1/|Γ|` must exceed this: `3 − wminus/8`.
        deficit_rhs: ExactRational,
        gamma_order_bound: u64,
        admitted_k: u64,
        rejected_k3_order: u64,
        survivor: BubbleCandidate,
        wminus_budget: ExactRational,
    },
    Mod3 {
        /// `((m, n) mod 3) ↦ 2m² − n² mod 3` over all nine pairs.
        residue_table: Vec<((u8, u8), u8)>,
        zero_residue_pairs: Vec<(u8, u8)>,
        /// After `m = 3j, n = 3k`: `−1 ≡ 2 (mod 3)` against `6j² − 3k² ≡ 0`.
        step2_lhs_residue: u8,
        step2_rhs_residue: u8,
        brute_force_bound: i64,
        brute_force_solutions: usize,
    },
    PellArea {
        pell: Vec<(u64, u64)>,
        pell_bound: u64,
        /// The swap-invariant sphere class `jF₁ + jF₂ + 2ℓE` per Pell pair.
        sigma_classes: Vec<(i64, i64, i64)>,
        /// `Σ² = 2j² − 4ℓ² = −2`, identical for every pair.
        sigma_self_intersection: ExactRational,
        /// `[ω]_x·Σ = 2j + 2(j+ℓ)x`, unnormalized, per pair.
        pairing_polys: Vec<Polynomial>,
        /// The sign lemma: `|j| ≥ 1` with equality attained.
        min_abs_j: u64,
        /// `(1+x)² − (1+2x+x²/2) = x²/2`, the decisive polynomial fact.
        residual: Polynomial,
        residual_positivity: RayPositivity,
        l_enclosure: RootEnclosure,
        excluded: Vec<BubbleCandidate>,
    },
}

/// One step of the exclusion chain: which rule fired, on what, with what
/// exact data, and by what margin.
#[derive(Debug, Clone, Serialize)]
pub struct ExclusionCertificate {
    pub rule: RuleId,
    pub scope: CandidateScope,
    /// Content-descriptive label of the statement this certificate discharges.
    pub paper_anchor: String,
    pub data: CertData,
    /// Exact strictness margin of the rule's decisive inequality. Budget-edge
    /// rules may record 0: their strictness rides on the limsup convention
    /// (actual energies sit strictly below budgets). Documented per rule.
    pub margin: ExactRational,
}

impl ExclusionCertificate {
    /// Re-evaluates the stored data from scratch and confirms the verdict.
    pub fn replay(&self) -> bool {
        match &self.data {
            CertData::TrivialGamma {
                ricci_budget,
                wminus_per_b2,
                ricci_per_b2,
                b2_one_required_ricci,
                forced_b2,
            } => {
                wminus_per_b2 == &ExactRational::from_int(12)
                    && ricci_per_b2 == &ExactRational::from_int(8)
                    && b2_one_required_ricci >= ricci_budget
                    && ricci_budget <= &ExactRational::from_int(8)
                    && *forced_b2 == 0
                    && self.margin == ExactRational::from_int(8) - ricci_budget
            }
            CertData::BottomAxiom {
                b2_lower,
                b2_upper,
                ambient_signature,
                ..
            } => {
                let sig = lattice_signature();
                sig == *ambient_signature && *b2_upper as usize == sig.1 && *b2_lower == 1
            }
            CertData::ForcedSymmetry {
                single_copy_minimum,
                double_copy_requirement,
                wminus_budget,
            } => {
                single_copy_minimum == &gauss_bonnet_deficit(1, 2)
                    && double_copy_requirement
                        == &(ExactRational::from_int(2) * single_copy_minimum)
                    && double_copy_requirement > wminus_budget
                    && self.margin == double_copy_requirement - wminus_budget
                    && self.margin.is_positive()
            }
            CertData::Sprite {
                energies,
                admitted,
                first_rejected_beyond,
                ricci_budget,
                ..
            } => {
                let energy = |k: u64| {
                    ExactRational::from_int(8)
                        * ExactRational::new((k as i64 - 2).pow(2), k as i64)
                };
                energies.iter().all(|(k, e)| e == &energy(*k))
                    && admitted.iter().all(|k| *k >= 2 && energy(*k) < *ricci_budget)
                    && energy(*first_rejected_beyond) >= *ricci_budget
            }
            CertData::Elf {
                deficit_rhs,
                gamma_order_bound,
                admitted_k,
                rejected_k3_order,
                survivor,
                wminus_budget,
            } => {
                let rhs = ExactRational::from_int(3)
                    - wminus_budget * ExactRational::new(1, 8);
                rhs == *deficit_rhs
                    && ExactRational::new(1, *gamma_order_bound as i64) > rhs
                    && ExactRational::new(1, *gamma_order_bound as i64 + 1) <= rhs
                    && *admitted_k == 2
                    && admitted_k * admitted_k - 1 <= *gamma_order_bound
                    && *rejected_k3_order == 8
                    && *rejected_k3_order > *gamma_order_bound
                    && negdef_check(&survivor.form)
            }
            CertData::Mod3 {
                residue_table,
                zero_residue_pairs,
                step2_lhs_residue,
                step2_rhs_residue,
                brute_force_bound,
                brute_force_solutions,
            } => {
                let table_ok = residue_table.iter().all(|((m, n), r)| {
                    (2 * m * m + 3 * 3 - n * n) % 3 == *r
                });
                let zeros: Vec<(u8, u8)> = residue_table
                    .iter()
                    .filter(|(_, r)| *r == 0)
                    .map(|(p, _)| *p)
                    .collect();
                table_ok
                    && zeros == *zero_residue_pairs
                    && zeros == vec![(0, 0)]
                    && *step2_lhs_residue == 2
                    && *step2_rhs_residue == 0
                    && count_mod3_solutions(*brute_force_bound) == *brute_force_solutions
                    && *brute_force_solutions == 0
            }
            CertData::PellArea {
                pell,
                sigma_classes,
                sigma_self_intersection,
                pairing_polys,
                min_abs_j,
                residual,
                ..
            } => {
                let identities = pell
                    .iter()
                    .all(|(j, l)| (*j as u128) * (*j as u128) + 1 == 2 * (*l as u128) * (*l as u128));
                let sigma_ok = sigma_classes.iter().zip(pell).all(|(s, (j, l))| {
                    *s == (*j as i64, *j as i64, 2 * *l as i64)
                        && class_square(*s) == *sigma_self_intersection
                });
                let pairings_ok = pairing_polys.iter().zip(pell).all(|(p, (j, l))| {
                    p == &Polynomial::from_ints(&[2 * *j as i64, 2 * (*j + *l) as i64])
                });
                identities
                    && sigma_ok
                    && *sigma_self_intersection == ExactRational::from_int(-2)
                    && pairings_ok
                    && pell.iter().map(|(j, _)| *j).min() == Some(*min_abs_j)
                    && *min_abs_j >= 1
                    && residual
                        == &Polynomial::new(vec![
                            ExactRational::zero(),
                            ExactRational::zero(),
                            ExactRational::new(1, 2),
                        ])
                    && certify_positive_on_ray(residual).is_certificate()
            }
        }
    }
}

fn class_square(coeffs: (i64, i64, i64)) -> ExactRational {
    let class = CohomologyClass::from_ints(coeffs.0, coeffs.1, coeffs.2);
    pair(&class, &class)
}

// ---------------------------------------------------------------------------
// Individual rules
// ---------------------------------------------------------------------------

/// Excludes bubbles with trivial boundary group. For `Γ = 1` the signature
/// identity gives `∫|W₋|² = 12π²·b₂` and Gauss–Bonnet forces `∫|r̊|² = 8π²·b₂`;
/// a Ricci budget at or below 8 (strict for actual energies) forces `b₂ = 0`,
/// and a `b₂ = 0` bubble with zero energy is flat — not a bubble at all.
///
/// Margin: `8 − ricci_pi2` (zero at the budget edge; strictness then rides on
/// the limsup convention).
pub fn exclude_trivial_gamma(
    budget: &EnergyBudget,
) -> Result<ExclusionCertificate, BubbleError> {
    let eight = ExactRational::from_int(8);
    if budget.ricci_pi2 > eight {
        return Err(BubbleError::BudgetTooLarge {
            ricci_pi2: budget.ricci_pi2.clone(),
        });
    }
    let margin = &eight - &budget.ricci_pi2;
    Ok(ExclusionCertificate {
        rule: RuleId::TrivialGammaEnergy,
        scope: CandidateScope::Family {
            description: "candidates with trivial group at infinity".into(),
        },
        paper_anchor: "no deepest bubble is strictly asymptotically Euclidean".into(),
        data: CertData::TrivialGamma {
            ricci_budget: budget.ricci_pi2.clone(),
            wminus_per_b2: ExactRational::from_int(12),
            ricci_per_b2: eight.clone(),
            b2_one_required_ricci: eight,
            forced_b2: 0,
        },
        margin,
    })
}

/// Records the geometric axioms: a deepest bubble has `b₂ ≠ 0` (taken as
/// input, not recomputed) while the ambient lattice caps `b₂` at the negative
/// part of the signature, computed fresh from the intersection form.
pub fn bottom_axiom() -> ExclusionCertificate {
    let signature = lattice_signature();
    ExclusionCertificate {
        rule: RuleId::BottomAxiom,
        scope: CandidateScope::AllCandidates,
        paper_anchor: "a deepest bubble carries nontrivial topology, bounded by the ambient lattice"
            .into(),
        data: CertData::BottomAxiom {
            statement:
                "a deepest bubble has b2 ≥ 1, embeds in the ambient surface with b1 = b3 = 0, \
                 and its anti-self-dual classes inject into the ambient negative cone"
                    .into(),
            b2_lower: 1,
            b2_upper: signature.1 as u64,
            ambient_signature: signature,
        },
        margin: ExactRational::zero(),
    }
}

/// Two disjoint bubble copies would each carry at least the Gauss–Bonnet
/// minimum `12π²` of Weyl energy, needing `24π²` against a budget strictly
/// below 24 — so the bubble region must be invariant under the swap
/// involution. Margin: `24 − wminus_pi2` (e.g. `4/3` at the budget from 8).
pub fn forced_symmetry(budget: &EnergyBudget) -> Result<ExclusionCertificate, BubbleError> {
    let single = gauss_bonnet_deficit(1, 2);
    assert_eq!(single, ExactRational::from_int(12));
    let double = ExactRational::from_int(2) * &single;
    if double <= budget.wminus_pi2 {
        return Err(BubbleError::InsufficientBudgetGap {
            wminus_pi2: budget.wminus_pi2.clone(),
        });
    }
    let margin = &double - &budget.wminus_pi2;
    Ok(ExclusionCertificate {
        rule: RuleId::ForcedSymmetry,
        scope: CandidateScope::AllCandidates,
        paper_anchor: "the bubble region is invariant under the holomorphic isometric involution"
            .into(),
        data: CertData::ForcedSymmetry {
            single_copy_minimum: single,
            double_copy_requirement: double,
            wminus_budget: budget.wminus_pi2.clone(),
        },
        margin,
    })
}

/// Solid-torus gluing data for the rank-2 plumbing with weights `(−k, −ℓ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LensData {
    pub gamma_order: i64,
    /// `L(kℓ−1, ℓ)`.
    pub lens_pair: (i64, i64),
    pub gluing: [[i64; 2]; 2],
    pub determinant: i64,
}

fn mat_mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut m = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

/// Computes the boundary Lens space of the `(−k, −ℓ)` plumbing by multiplying
/// the three gluing matrices exactly:
/// `[[−k,1],[1,0]]⁻¹ · [[0,1],[1,0]] · [[−ℓ,1],[1,0]] = [[−ℓ,1],[1−kℓ,k]]`.
pub fn lens_data(k: i64, l: i64) -> Result<LensData, BubbleError> {
    assert!(k >= 2 && l >= 1, "plumbing weights satisfy k ≥ 2, ℓ ≥ 1");
    // [[−k,1],[1,0]] has determinant −1; its inverse is [[0,1],[1,k]].
    let inv_first = [[0, 1], [1, k]];
    let middle = [[0, 1], [1, 0]];
    let last = [[-l, 1], [1, 0]];
    let gluing = mat_mul(mat_mul(inv_first, middle), last);
    assert_eq!(gluing, [[-l, 1], [1 - k * l, k]]);
    let determinant = gluing[0][0] * gluing[1][1] - gluing[0][1] * gluing[1][0];
    if determinant.abs() != 1 {
        return Err(BubbleError::NonUnimodular { determinant });
    }
    Ok(LensData {
        gamma_order: k * l - 1,
        lens_pair: (k * l - 1, l),
        gluing,
        determinant,
    })
}

/// The `b₂ = 1` filter: a bubble that is (the minimal resolution of) a
/// degree `−k` line bundle carries exactly `8π²(k−2)²/k` of Ricci energy.
/// Returns every `k ≥ 2` whose energy fits strictly inside the budget —
/// `{2, 3}` at budget 8. `k = 1` never appears: its energy `8π²` is not
/// strictly below any admissible budget, and its trivial boundary group is
/// excluded independently.
pub fn sprite_filter(budget: &EnergyBudget) -> Vec<u64> {
    assert!(
        budget.ricci_pi2 <= ExactRational::from_int(8),
        "the filter applies below the 8π² Ricci edge"
    );
    let mut admitted = Vec::new();
    for k in 1..=4u64 {
        let energy = sprite_energy(k);
        if energy < budget.ricci_pi2 && k >= 2 {
            admitted.push(k);
        }
    }
    // Beyond k = 4 the energy is increasing and already ≥ 8 at k = 4.
    assert!(sprite_energy(4) >= budget.ricci_pi2);
    admitted
}

/// `8(k−2)²/k`, the exact Ricci energy of the degree `−k` model.
pub fn sprite_energy(k: u64) -> ExactRational {
    assert!(k >= 1);
    ExactRational::from_int(8) * ExactRational::new((k as i64 - 2).pow(2), k as i64)
}

/// The `b₂ = 2` filter. The Gauss–Bonnet deficit bound
/// `1 + b₂ − 1/|Γ| < wminus/8` at `b₂ = 2` gives `1/|Γ| > 3 − wminus/8`;
/// with the symmetric plumbing forced to `k = ℓ`, `|Γ| = k² − 1` must stay
/// within the resulting bound — only `k = 2`, `Γ = Z₃`, form `[[−2,1],[1,−2]]`
/// survives. Errors if the budget is too large for the bound to bite.
pub fn elf_filter(budget: &EnergyBudget) -> Result<Vec<BubbleCandidate>, BubbleError> {
    let deficit_rhs =
        ExactRational::from_int(3) - &budget.wminus_pi2 * ExactRational::new(1, 8);
    if !deficit_rhs.is_positive() {
        return Err(BubbleError::InsufficientBudgetGap {
            wminus_pi2: budget.wminus_pi2.clone(),
        });
    }
    // Largest order with 1/order > deficit_rhs.
    let mut gamma_bound = 0u64;
    while ExactRational::new(1, gamma_bound as i64 + 1) > deficit_rhs {
        gamma_bound += 1;
    }
    let mut survivors = Vec::new();
    for k in 2..=4i64 {
        let order = (k * k - 1) as u64;
        if order <= gamma_bound {
            let lens = lens_data(k, k)?;
            survivors.push(BubbleCandidate::new(
                2,
                IntersectionForm::rank2(-k, 1, -k),
                order,
                format!("Z_{order}"),
                Some((lens.lens_pair.0 as u64, lens.lens_pair.1 as u64)),
            ));
        }
    }
    Ok(survivors)
}

fn count_mod3_solutions(bound: i64) -> usize {
    // Solutions of 2m² − n² = −3 with |m| ≤ bound: scan m ≥ 0 and test
    // whether 2m² + 3 is a perfect square (covers all n).
    let mut count = 0;
    for m in 0..=bound {
        let target = (2 * m * m + 3) as u64;
        let root = target.sqrt();
        if root * root == target {
            count += if m == 0 { 1 } else { 2 };
        }
    }
    count
}

/// The case (i) killer: `−3 = 2m² − n²` has no integer solutions, by a
/// two-step mod-3 descent. A brute-force scan up to the given bound runs
/// first as an independent oracle; the descent certificate is only issued
/// once the scan agrees. Margin: the step-2 residue gap `2 − 0`.
pub fn mod3_obstruction(brute_force_bound: i64) -> ExclusionCertificate {
    assert!(brute_force_bound >= 1);
    let mut residue_table = Vec::new();
    let mut zero_residue_pairs = Vec::new();
    for m in 0..3u8 {
        for n in 0..3u8 {
            // 2m² − n² mod 3, kept nonnegative.
            let r = (2 * m * m + 9 - n * n) % 3;
            residue_table.push(((m, n), r));
            if r == 0 {
                zero_residue_pairs.push((m, n));
            }
        }
    }
    assert_eq!(zero_residue_pairs, vec![(0, 0)]);
    let brute_force_solutions = count_mod3_solutions(brute_force_bound);
    assert_eq!(
        brute_force_solutions, 0,
        "the brute-force oracle must agree with the descent"
    );
    ExclusionCertificate {
        rule: RuleId::CaseI_Mod3,
        scope: CandidateScope::Single {
            candidate: BubbleCandidate::new(
                1,
                IntersectionForm::rank1(-3),
                3,
                "Z_3",
                None,
            ),
        },
        paper_anchor: "the degree minus-three case dies by descent modulo three".into(),
        data: CertData::Mod3 {
            residue_table,
            zero_residue_pairs,
            step2_lhs_residue: 2,
            step2_rhs_residue: 0,
            brute_force_bound,
            brute_force_solutions,
        },
        margin: ExactRational::from_int(2),
    }
}

/// All positive solutions of `j² − 2ℓ² = −1` with `j, ℓ ≤ bound`, in
/// increasing order.
pub fn pell_solutions(bound: u64) -> Vec<(u64, u64)> {
    assert!(bound >= 1);
    let mut out = Vec::new();
    for l in 1..=bound {
        let target = 2 * (l as u128) * (l as u128) - 1;
        let j = target.sqrt();
        if j * j == target && j <= bound as u128 {
            out.push((j as u64, l));
        }
    }
    out
}

/// The case (ii)/(iii) killer. Any surviving candidate would supply a
/// swap-invariant holomorphic sphere `Σ = jF₁ + jF₂ + 2ℓE` with `Σ² = −2` and
/// `(j, ℓ)` solving the Pell equation; its area in the unit-volume class at
/// shape parameter `x` is `2|j+(j+ℓ)x| / √(1+2x+x²/2)`. Three exact facts kill
/// it: `|j| ≥ 1` (sign lemma, from the Pell identity), `(1+x)² − (1+2x+x²/2) =
/// x²/2 > 0`, and assembly: the area strictly exceeds `2/(1+K)` for every
/// `x ∈ (0, K)`, incompatible with the bubbling area bound `< 2/(K+1)`.
///
/// Margin: the decisive residual `x²/2` evaluated at the left end of the `K`
/// enclosure — the witnessed strict gap at the deepest admissible shape.
pub fn area_contradiction(
    l_enclosure: &RootEnclosure,
    pell: &[(u64, u64)],
) -> Result<ExclusionCertificate, BubbleError> {
    assert!(!pell.is_empty(), "at least one Pell pair is needed");
    let mut sigma_classes = Vec::new();
    let mut pairing_polys = Vec::new();
    let minus_two = ExactRational::from_int(-2);
    for &(j, l) in pell {
        // Sign-lemma preconditions, all consequences of the Pell identity.
        let identity_holds =
            (j as u128) * (j as u128) + 1 == 2 * (l as u128) * (l as u128);
        if j == 0 || l == 0 || !identity_holds {
            return Err(BubbleError::SignLemmaFailure { j, l });
        }
        let sigma = (j as i64, j as i64, 2 * l as i64);
        // Σ² = 2j² − 4ℓ² = 2(j² − 2ℓ²) = −2, computed through the lattice.
        assert_eq!(class_square(sigma), minus_two);
        sigma_classes.push(sigma);
        // [ω]_x·Σ with [ω]_x = (1+x)(F₁+F₂) − xE: equals 2j + 2(j+ℓ)x.
        pairing_polys.push(Polynomial::from_ints(&[2 * j as i64, 2 * (j + l) as i64]));
    }
    let min_abs_j = pell.iter().map(|(j, _)| *j).min().expect("nonempty");

    // (1+x)² − (1 + 2x + x²/2) = x²/2 > 0 for x > 0.
    let one_plus_x_sq = Polynomial::from_ints(&[1, 2, 1]);
    let volume_quadratic = Polynomial::new(vec![
        ExactRational::one(),
        ExactRational::from_int(2),
        ExactRational::new(1, 2),
    ]);
    let residual = &one_plus_x_sq - &volume_quadratic;
    assert_eq!(
        residual,
        Polynomial::new(vec![
            ExactRational::zero(),
            ExactRational::zero(),
            ExactRational::new(1, 2)
        ])
    );
    let residual_positivity = certify_positive_on_ray(&residual);
    assert!(residual_positivity.is_certificate());
    let margin = residual.eval(l_enclosure.lo());
    assert!(margin.is_positive());

    let excluded = vec![
        BubbleCandidate::new(1, IntersectionForm::rank1(-2), 2, "Z_2", None),
        BubbleCandidate::new(
            2,
            IntersectionForm::rank2(-2, 1, -2),
            3,
            "Z_3",
            Some((3, 2)),
        ),
    ];
    Ok(ExclusionCertificate {
        rule: RuleId::CaseII_III_PellArea,
        scope: CandidateScope::Family {
            description: "cyclic-group cases of order two (b2=1) and three (b2=2)".into(),
        },
        paper_anchor: "the invariant sphere's certified area exceeds the bubbling area bound"
            .into(),
        data: CertData::PellArea {
            pell: pell.to_vec(),
            pell_bound: pell.iter().map(|(j, l)| (*j).max(*l)).max().unwrap_or(0),
            sigma_classes,
            sigma_self_intersection: minus_two,
            pairing_polys,
            min_abs_j,
            residual,
            residual_positivity,
            l_enclosure: l_enclosure.clone(),
            excluded,
        },
        margin,
    })
}

// ---------------------------------------------------------------------------
// The full chain
// ---------------------------------------------------------------------------

/// Final verdict of an exclusion run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum ExclusionVerdict {
    /// Every candidate died; no bubbling can occur.
    NoBubbling,
    /// Some budget-level stage failed; the run reports where the chain broke
    /// instead of certifying anything.
    Breakdown { failed_stages: Vec<RuleId> },
}

/// The result of [`run_full_exclusion`]: certificates in chain order, the
/// candidates alive before the Diophantine stage, and the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct ExclusionRun {
    pub a_bound: ExactRational,
    pub budget: EnergyBudget,
    pub certificates: Vec<ExclusionCertificate>,
    pub pre_diophantine_survivors: Vec<BubbleCandidate>,
    pub survivors: Vec<BubbleCandidate>,
    pub verdict: ExclusionVerdict,
}

/// Runs the whole chain with explicit Diophantine bounds.
///
/// Stages: budgets → trivial-Γ exclusion → topology axioms → forced symmetry
/// → degree filter (b₂ = 1) → plumbing filter (b₂ = 2) → mod-3 descent →
/// Pell/area contradiction. Budget-stage failures are collected into a
/// [`ExclusionVerdict::Breakdown`] rather than an error; a candidate slipping
/// through every rule is [`BubbleError::IncompleteExclusion`] — surfacing that
/// is the point of running the chain.
pub fn run_full_exclusion_with_bounds(
    a_bound: &ExactRational,
    l_enclosure: &RootEnclosure,
    dioph_bound: i64,
    pell_bound: u64,
) -> Result<ExclusionRun, BubbleError> {
    let budget = energy_budgets(a_bound)?;
    let mut certificates = Vec::new();
    let mut failed_stages = Vec::new();

    match exclude_trivial_gamma(&budget) {
        Ok(cert) => certificates.push(cert),
        Err(_) => failed_stages.push(RuleId::TrivialGammaEnergy),
    }
    certificates.push(bottom_axiom());
    match forced_symmetry(&budget) {
        Ok(cert) => certificates.push(cert),
        Err(_) => failed_stages.push(RuleId::ForcedSymmetry),
    }
    if !failed_stages.is_empty() {
        return Ok(ExclusionRun {
            a_bound: a_bound.clone(),
            budget,
            certificates,
            pre_diophantine_survivors: Vec::new(),
            survivors: Vec::new(),
            verdict: ExclusionVerdict::Breakdown { failed_stages },
        });
    }

    // b₂ = 1 candidates from the degree filter.
    let admitted_degrees = sprite_filter(&budget);
    let mut candidates: Vec<BubbleCandidate> = admitted_degrees
        .iter()
        .map(|&k| {
            BubbleCandidate::new(
                1,
                IntersectionForm::rank1(-(k as i64)),
                k,
                format!("Z_{k}"),
                None,
            )
        })
        .collect();
    let sprite_energies: Vec<(u64, ExactRational)> =
        (1..=4).map(|k| (k, sprite_energy(k))).collect();
    certificates.push(ExclusionCertificate {
        rule: RuleId::SpriteRicci,
        scope: CandidateScope::Family {
            description: "b2=1 candidates, classified by line-bundle degree".into(),
        },
        paper_anchor: "the Ricci budget admits only line-bundle degrees two and three".into(),
        data: CertData::Sprite {
            energies: sprite_energies,
            admitted: admitted_degrees.clone(),
            first_rejected_beyond: 4,
            k1_note: "degree one needs the full 8π² (not strictly below budget) and has \
                      trivial boundary group, excluded independently"
                .into(),
            ricci_budget: budget.ricci_pi2.clone(),
        },
        margin: ExactRational::from_int(8) - &budget.ricci_pi2,
    });

    // b₂ = 2 candidates from the plumbing filter.
    let elf_survivors = elf_filter(&budget)?;
    let deficit_rhs =
        ExactRational::from_int(3) - &budget.wminus_pi2 * ExactRational::new(1, 8);
    let elf_survivor = elf_survivors
        .first()
        .expect("the plumbing filter admits k = 2 below the Weyl edge")
        .clone();
    assert_eq!(elf_survivors.len(), 1, "only k = 2 survives the order bound");
    let gamma_order_bound = {
        let mut g = 0u64;
        while ExactRational::new(1, g as i64 + 1) > deficit_rhs {
            g += 1;
        }
        g
    };
    certificates.push(ExclusionCertificate {
        rule: RuleId::ElfWminus,
        scope: CandidateScope::Family {
            description: "b2=2 candidates, classified by symmetric plumbing weight".into(),
        },
        paper_anchor: "the Weyl budget forces the symmetric plumbing of weight two with group Z_3"
            .into(),
        data: CertData::Elf {
            deficit_rhs: deficit_rhs.clone(),
            gamma_order_bound,
            admitted_k: 2,
            rejected_k3_order: 8,
            survivor: elf_survivor.clone(),
            wminus_budget: budget.wminus_pi2.clone(),
        },
        margin: deficit_rhs - ExactRational::new(1, 8),
    });
    candidates.push(elf_survivor);
    let pre_diophantine_survivors = candidates.clone();

    // Diophantine stage.
    let mod3_cert = mod3_obstruction(dioph_bound);
    let pell = pell_solutions(pell_bound);
    let area_cert = area_contradiction(l_enclosure, &pell)?;
    let survivors: Vec<BubbleCandidate> = candidates
        .into_iter()
        .filter(|c| {
            let killed_by_mod3 = c.b2 == 1 && c.gamma_order == 3;
            let killed_by_area =
                (c.b2 == 1 && c.gamma_order == 2) || (c.b2 == 2 && c.gamma_order == 3);
            !(killed_by_mod3 || killed_by_area)
        })
        .collect();
    certificates.push(mod3_cert);
    certificates.push(area_cert);

    if !survivors.is_empty() {
        return Err(BubbleError::IncompleteExclusion {
            survivors: survivors.iter().map(|c| c.label()).collect(),
        });
    }
    Ok(ExclusionRun {
        a_bound: a_bound.clone(),
        budget,
        certificates,
        pre_diophantine_survivors,
        survivors,
        verdict: ExclusionVerdict::NoBubbling,
    })
}

/// [`run_full_exclusion_with_bounds`] with the default Diophantine bounds
/// (brute-force scan to 10⁴, Pell enumeration to 10⁶).
pub fn run_full_exclusion(
    a_bound: &ExactRational,
    l_enclosure: &RootEnclosure,
) -> Result<ExclusionRun, BubbleError> {
    run_full_exclusion_with_bounds(a_bound, l_enclosure, 10_000, 1_000_000)
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::certify_boundary_L;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    fn budget_at(a: &str) -> EnergyBudget {
        energy_budgets(&q(a)).unwrap()
    }

    #[test]
    fn budgets_at_the_reference_bound() {
        let b = budget_at("8");
        assert_eq!(b.ricci_pi2, q("8"));
        assert_eq!(b.wminus_pi2, q("68/3"));
        assert!(b.wminus_pi2 < q("23"));
    }

    #[test]
    fn budgets_are_linear_and_consistent_both_routes() {
        let tight = budget_at("7000001/1000000");
        assert_eq!(tight.ricci_pi2, q("8/1000000"));
        for a in ["15/2", "31/4", "8", "17/2", "9"] {
            let b = budget_at(a);
            assert_eq!(&b.wminus_pi2 - &q("12"), q("4/3") * q(a));
            assert_eq!(&b.ricci_pi2 * q("1/8") + q("7"), q(a));
        }
    }

    #[test]
    fn budgets_reject_the_lattice_floor() {
        assert!(matches!(
            energy_budgets(&q("7")),
            Err(BubbleError::InvalidBound { .. })
        ));
        assert!(matches!(
            energy_budgets(&q("13/2")),
            Err(BubbleError::InvalidBound { .. })
        ));
    }

    #[test]
    fn gauss_bonnet_deficit_values() {
        assert_eq!(gauss_bonnet_deficit(1, 2), q("12"));
        assert_eq!(gauss_bonnet_deficit(0, 1), q("0"));
        assert_eq!(gauss_bonnet_deficit(2, 3), q("64/3"));
    }

    #[test]
    fn trivial_gamma_exclusion_and_its_edge() {
        let cert = exclude_trivial_gamma(&budget_at("8")).unwrap();
        assert_eq!(cert.rule, RuleId::TrivialGammaEnergy);
        assert!(cert.margin.is_zero());
        assert!(cert.replay());

        let tighter = exclude_trivial_gamma(&budget_at("7999/1000")).unwrap();
        assert_eq!(tighter.margin, q("1/125"));
        assert!(tighter.replay());

        assert!(matches!(
            exclude_trivial_gamma(&budget_at("17/2")),
            Err(BubbleError::BudgetTooLarge { .. })
        ));
    }

    #[test]
    fn forced_symmetry_margin_and_breaking_point() {
        let cert = forced_symmetry(&budget_at("8")).unwrap();
        assert_eq!(cert.margin, q("4/3"));
        assert!(cert.replay());
        // The argument breaks exactly at energy 9: 12 + 4·9/3 = 24.
        assert!(matches!(
            forced_symmetry(&budget_at("9")),
            Err(BubbleError::InsufficientBudgetGap { .. })
        ));
        assert!(forced_symmetry(&budget_at("8999/1000")).is_ok());
    }

    #[test]
    fn negative_definiteness_small_cases() {
        assert!(negdef_check(&IntersectionForm::rank1(-2)));
        assert!(!negdef_check(&IntersectionForm::rank1(2)));
        assert!(negdef_check(&IntersectionForm::rank2(-2, 1, -2)));
        assert!(!negdef_check(&IntersectionForm::rank2(-1, 1, -1)));
        assert!(negdef_check(&IntersectionForm::empty()));
    }

    #[test]
    fn negative_definiteness_iff_kl_exceeds_one() {
        for k in 1..=20i64 {
            for l in 1..=20i64 {
                let form = IntersectionForm::rank2(-k, 1, -l);
                assert_eq!(negdef_check(&form), k * l > 1, "at (k, l) = ({k}, {l})");
            }
        }
    }

    #[test]
    fn lens_data_reference_values() {
        let d = lens_data(2, 2).unwrap();
        assert_eq!(d.gamma_order, 3);
        assert_eq!(d.lens_pair, (3, 2));
        assert_eq!(d.gluing, [[-2, 1], [-3, 2]]);
        assert_eq!(d.determinant, -1);

        assert_eq!(lens_data(2, 1).unwrap().gamma_order, 1);
        assert_eq!(lens_data(2, 1).unwrap().lens_pair, (1, 1));
        assert_eq!(lens_data(3, 1).unwrap().lens_pair, (2, 1));
    }

    #[test]
    fn lens_data_is_unimodular_across_the_grid() {
        for k in 2..=20i64 {
            for l in 1..=20i64 {
                let d = lens_data(k, l).unwrap();
                assert_eq!(d.determinant.abs(), 1);
                assert_eq!(d.gamma_order, k * l - 1);
                assert_eq!(d.gluing, [[-l, 1], [1 - k * l, k]]);
            }
        }
    }

    #[test]
    fn sprite_filter_admits_two_and_three() {
        assert_eq!(sprite_filter(&budget_at("8")), vec![2, 3]);
        assert_eq!(sprite_energy(4), q("8"));
        assert_eq!(sprite_energy(2), q("0"));
        assert_eq!(sprite_energy(3), q("8/3"));
        assert_eq!(sprite_energy(1), q("8"));
        // tighter budgets shrink the list
        assert_eq!(sprite_filter(&budget_at("15/2")), vec![2, 3]);
        assert_eq!(sprite_filter(&budget_at("701/100")), vec![2]);
    }

    #[test]
    fn elf_filter_forces_weight_two() {
        let survivors = elf_filter(&budget_at("8")).unwrap();
        assert_eq!(survivors.len(), 1);
        let s = &survivors[0];
        assert_eq!(s.b2, 2);
        assert_eq!(s.gamma_order, 3);
        assert_eq!(s.gamma_label, "Z_3");
        assert_eq!(s.form, IntersectionForm::rank2(-2, 1, -2));
        assert_eq!(s.lens, Some((3, 2)));
        // weight 3 would need |Γ| = 8 > 5
        let b = budget_at("8");
        let rhs = q("3") - &b.wminus_pi2 * q("1/8");
        assert_eq!(rhs, q("1/6"));
        assert!(q("1/5") > rhs && q("1/6") <= rhs);
    }

    #[test]
    fn mod3_descent_with_brute_force_oracle() {
        let cert = mod3_obstruction(10_000);
        assert!(cert.replay());
        match &cert.data {
            CertData::Mod3 {
                residue_table,
                zero_residue_pairs,
                step2_lhs_residue,
                step2_rhs_residue,
                brute_force_solutions,
                ..
            } => {
                assert_eq!(residue_table.len(), 9);
                assert_eq!(zero_residue_pairs, &vec![(0, 0)]);
                assert_eq!(*step2_lhs_residue, 2);
                assert_eq!(*step2_rhs_residue, 0);
                assert_eq!(*brute_force_solutions, 0);
            }
            _ => panic!("wrong certificate payload"),
        }
    }

    #[test]
    fn pell_solutions_reference_lists() {
        assert_eq!(pell_solutions(10), vec![(1, 1), (7, 5)]);
        assert_eq!(
            pell_solutions(300),
            vec![(1, 1), (7, 5), (41, 29), (239, 169)]
        );
        let all = pell_solutions(1_000_000);
        assert_eq!(all.len(), 8);
        assert_eq!(all.last(), Some(&(275_807, 195_025)));
        for (j, l) in &all {
            assert_eq!((*j as i128) * (*j as i128) - 2 * (*l as i128) * (*l as i128), -1);
        }
    }

    #[test]
    fn pell_recurrence_steps_through_the_list() {
        let all = pell_solutions(1_000_000);
        for w in all.windows(2) {
            let (j, l) = w[0];
            assert_eq!(w[1], (3 * j + 4 * l, 2 * j + 3 * l));
        }
        // the recurrence preserves the Pell form symbolically:
        // (3j+4l)² − 2(2j+3l)² = 9j²+24jl+16l² − 8j²−24jl−18l² = j² − 2l².
        let (j, l) = *all.last().unwrap();
        let next = (3 * j + 4 * l, 2 * j + 3 * l);
        assert_eq!(
            (next.0 as i128).pow(2) - 2 * (next.1 as i128).pow(2),
            -1
        );
    }

    #[test]
    fn area_contradiction_certificate() {
        let l_enc = certify_boundary_L(&q("1/1000")).enclosure;
        let pell = pell_solutions(1_000_000);
        let cert = area_contradiction(&l_enc, &pell).unwrap();
        assert!(cert.replay());
        assert!(cert.margin > q("49/2") * q("99/100"));
        match &cert.data {
            CertData::PellArea {
                sigma_self_intersection,
                min_abs_j,
                residual,
                pairing_polys,
                ..
            } => {
                assert_eq!(sigma_self_intersection, &q("-2"));
                assert_eq!(*min_abs_j, 1);
                assert_eq!(residual.coeff(2), q("1/2"));
                // (j,ℓ) = (1,1): pairing 2 + 4x
                assert_eq!(pairing_polys[0], Polynomial::from_ints(&[2, 4]));
            }
            _ => panic!("wrong certificate payload"),
        }
    }

    #[test]
    fn area_contradiction_rejects_bad_pairs() {
        let l_enc = certify_boundary_L(&q("1/1000")).enclosure;
        assert!(matches!(
            area_contradiction(&l_enc, &[(0, 1)]),
            Err(BubbleError::SignLemmaFailure { .. })
        ));
        assert!(matches!(
            area_contradiction(&l_enc, &[(2, 1)]),
            Err(BubbleError::SignLemmaFailure { .. })
        ));
    }

    #[test]
    fn full_exclusion_reaches_no_bubbling() {
        let l_enc = certify_boundary_L(&q("1/1000")).enclosure;
        let run = run_full_exclusion_with_bounds(&q("7999/1000"), &l_enc, 10_000, 1_000)
            .unwrap();
        assert_eq!(run.verdict, ExclusionVerdict::NoBubbling);
        assert_eq!(run.pre_diophantine_survivors.len(), 3);
        assert!(run.survivors.is_empty());
        let rules: Vec<RuleId> = run.certificates.iter().map(|c| c.rule).collect();
        assert_eq!(
            rules,
            vec![
                RuleId::TrivialGammaEnergy,
                RuleId::BottomAxiom,
                RuleId::ForcedSymmetry,
                RuleId::SpriteRicci,
                RuleId::ElfWminus,
                RuleId::CaseI_Mod3,
                RuleId::CaseII_III_PellArea,
            ]
        );
        assert!(run.certificates.iter().all(|c| c.replay()));
    }

    #[test]
    fn full_exclusion_across_reference_bounds() {
        let l_enc = certify_boundary_L(&q("1/1000")).enclosure;
        for a in ["15/2", "31/4", "8"] {
            let run = run_full_exclusion_with_bounds(&q(a), &l_enc, 1_000, 1_000).unwrap();
            assert_eq!(run.verdict, ExclusionVerdict::NoBubbling, "at a = {a}");
            assert!(run.survivors.is_empty());
        }
    }

    #[test]
    fn full_exclusion_reports_breakdown_beyond_the_regime() {
        let l_enc = certify_boundary_L(&q("1/1000")).enclosure;
        let run = run_full_exclusion_with_bounds(&q("9"), &l_enc, 1_000, 1_000).unwrap();
        match run.verdict {
            ExclusionVerdict::Breakdown { ref failed_stages } => {
                assert_eq!(
                    failed_stages,
                    &vec![RuleId::TrivialGammaEnergy, RuleId::ForcedSymmetry]
                );
            }
            _ => panic!("expected a breakdown at energy bound 9"),
        }
        // between 8 and 9 only the Ricci edge fails
        let run = run_full_exclusion_with_bounds(&q("17/2"), &l_enc, 1_000, 1_000).unwrap();
        assert_eq!(
            run.verdict,
            ExclusionVerdict::Breakdown {
                failed_stages: vec![RuleId::TrivialGammaEnergy]
            }
        );
    }

    #[test]
    fn rule_ids_round_trip_their_names() {
        let all = [
            RuleId::TrivialGammaEnergy,
            RuleId::BottomAxiom,
            RuleId::ForcedSymmetry,
            RuleId::SpriteRicci,
            RuleId::ElfWminus,
            RuleId::CaseI_Mod3,
            RuleId::CaseII_III_PellArea,
        ];
        for rule in all {
            assert_eq!(rule.to_string().parse::<RuleId>().unwrap(), rule);
        }
        assert!("NoSuchRule".parse::<RuleId>().is_err());
    }
}
