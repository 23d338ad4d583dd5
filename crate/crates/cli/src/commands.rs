//! The command implementations behind the CLI surface.
//!
//! [`cmd_verify_all`] runs the nine pipeline sections in a fixed order and
//! assembles the report; the focused commands (`functional`, `bubbles`,
//! `budgets`, `dioph`) expose individual stages with the same exact
//! arithmetic. Sections run sequentially: every stage is pure and fast, and a
//! fixed order keeps the certified payload deterministic. The advisory
//! `EXTREMAL_CERT_THREADS` environment variable is accepted but has no effect
//! on output.
//!
//! Margin conventions per section (each certificate row stores the exact
//! strictness margin of its decisive inequality):
//! * f-properties — the positive slope at 1 (the only inequality among the
//!   four identities).
//! * critical-point / boundary-root — the smallest distance of any stored
//!   sample of `f` from the threshold 8.
//! * scalar-positivity / c0-bound — the reconstructed polynomial's value at 0,
//!   its minimum over the closed ray (all coefficients are nonnegative).
//! * calabi-below-9 — the smallest strictly positive coefficient gap.
//! * cone-membership — the exact distance to the cone threshold 21/2.
//! * yamabe-sobolev — the certified Y² coefficient, and for the Sobolev gate
//!   the squared slack of the curvature arm over the constant arm.
//! * bubble-exclusion — each rule's own documented margin.

use std::time::Instant;

use serde_json::{json, Value};

use extremal_cert_core::bounds::{
    certify_A_below_9, cone_membership, sobolev_upper, yamabe_lower, MaxArm,
};
use extremal_cert_core::bubbles::{
    area_contradiction, bottom_axiom, elf_filter, energy_budgets, exclude_trivial_gamma,
    forced_symmetry, mod3_obstruction, pell_solutions, run_full_exclusion_with_bounds,
    sprite_energy, sprite_filter, BubbleCandidate, CertData, ExclusionCertificate,
    ExclusionVerdict, RuleId,
};
use extremal_cert_core::exactnum::ExactRational;
use extremal_cert_core::extremal::{
    certify_boundary_L, certify_c0_bound, certify_critical_point, certify_scalar_positive,
    functional_f, CriticalCertificate,
};

use crate::config::{ConfigError, RunConfig};
use crate::report::{CertificateEntry, Section, SectionStatus, VerificationReport};

/// Result of a focused command: the text to print and whether it certified.
pub struct CmdOutcome {
    pub text: String,
    pub success: bool,
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("certificates serialize")
}

fn failure_entry(rule: &str, message: String) -> CertificateEntry {
    CertificateEntry::new(
        rule,
        "stage did not certify",
        json!({ "error": message }),
        ExactRational::zero(),
    )
}

fn finish(name: &str, start: Instant, status: SectionStatus, certs: Vec<CertificateEntry>) -> Section {
    Section {
        name: name.into(),
        status,
        certificates: certs,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

// ---------------------------------------------------------------------------
// Sections
// ---------------------------------------------------------------------------

fn section_f_properties() -> Section {
    let start = Instant::now();
    let f = functional_f();
    let fp = f.derivative();
    let f_at_zero = f.eval(&ExactRational::zero());
    let dz = fp.eval(&ExactRational::zero()).expect("no pole at 0");
    let d1 = fp.eval(&ExactRational::one()).expect("no pole at 1");
    let ratio = f.as_ratfunc().num().leading().expect("nonzero")
        / f.as_ratfunc().den().leading().expect("nonzero");
    let ok = f_at_zero == ExactRational::from_int(8)
        && dz == ExactRational::from_int(-4)
        && d1.is_positive()
        && ratio == ExactRational::from_int(9);
    let entry = CertificateEntry::new(
        "FunctionalIdentities",
        "the energy starts at 8 with slope -4, has positive slope at 1, and tends to 9",
        json!({
            "f_at_zero": f_at_zero.to_string(),
            "derivative_at_zero": dz.to_string(),
            "derivative_at_one": d1.to_string(),
            "limit_ratio": ratio.to_string(),
        }),
        d1,
    );
    let status = if ok { SectionStatus::Certified } else { SectionStatus::Failed };
    finish("f-properties", start, status, vec![entry])
}

fn critical_margin(cert: &CriticalCertificate) -> ExactRational {
    [&cert.value_at_lo, &cert.value_at_hi, &cert.value_beyond]
        .iter()
        .map(|s| s.margin_from_8.abs())
        .min()
        .expect("three samples")
}

fn section_critical(cfg: &RunConfig) -> (Section, Option<CriticalCertificate>) {
    let start = Instant::now();
    match certify_critical_point(&cfg.x0_width) {
        Ok(cert) => {
            let entry = CertificateEntry::new(
                "CriticalPointEnclosure",
                "the energy has a unique interior critical point, enclosed with value below 8",
                to_value(&cert),
                critical_margin(&cert),
            );
            (
                finish("critical-point", start, SectionStatus::Certified, vec![entry]),
                Some(cert),
            )
        }
        Err(e) => (
            finish(
                "critical-point",
                start,
                SectionStatus::Failed,
                vec![failure_entry("CriticalPointEnclosure", e.to_string())],
            ),
            None,
        ),
    }
}

fn section_boundary(cfg: &RunConfig) -> (Section, extremal_cert_core::polyalg::RootEnclosure) {
    let start = Instant::now();
    let cert = certify_boundary_L(&cfg.l_width);
    let margin = cert
        .interior_grid
        .iter()
        .chain(std::iter::once(&cert.beyond_sample))
        .map(|s| s.margin_from_8.abs())
        .min()
        .expect("grid is nonempty");
    let enclosure = cert.enclosure.clone();
    let entry = CertificateEntry::new(
        "BoundaryRootEnclosure",
        "the level f = 8 is crossed exactly once on the positive ray, between 7 and 8",
        to_value(&cert),
        margin,
    );
    (
        finish("boundary-root", start, SectionStatus::Certified, vec![entry]),
        enclosure,
    )
}

fn section_scalar() -> Section {
    let start = Instant::now();
    match certify_scalar_positive() {
        Ok(cert) => {
            let margin = cert.reconstructed.eval(&ExactRational::zero());
            let entry = CertificateEntry::new(
                "ScalarPositivity",
                "the scalar-curvature minimum reduces to a degree-7 polynomial with nonnegative coefficients",
                to_value(&cert),
                margin,
            );
            finish("scalar-positivity", start, SectionStatus::Certified, vec![entry])
        }
        Err(e) => finish(
            "scalar-positivity",
            start,
            SectionStatus::Failed,
            vec![failure_entry("ScalarPositivity", e.to_string())],
        ),
    }
}

fn section_c0() -> Section {
    let start = Instant::now();
    match certify_c0_bound() {
        Ok(cert) => {
            let margin = cert.residual.eval(&ExactRational::zero());
            let entry = CertificateEntry::new(
                "C0Residual",
                "the curvature C0 bound reduces to the residual 2 + 12x, positive on the closed ray",
                to_value(&cert),
                margin,
            );
            finish("c0-bound", start, SectionStatus::Certified, vec![entry])
        }
        Err(e) => finish(
            "c0-bound",
            start,
            SectionStatus::Failed,
            vec![failure_entry("C0Residual", e.to_string())],
        ),
    }
}

fn section_domination() -> Section {
    let start = Instant::now();
    let cert = certify_A_below_9();
    let margin = cert
        .coefficient_gaps
        .iter()
        .filter(|g| g.is_positive())
        .min()
        .cloned()
        .expect("six strict gaps");
    let entry = CertificateEntry::new(
        "CoefficientDomination",
        "the energy stays below 9 everywhere: numerator dominated coefficientwise by thrice the denominator",
        to_value(&cert),
        margin,
    );
    finish("calabi-below-9", start, SectionStatus::Certified, vec![entry])
}

fn section_cone(critical: Option<&CriticalCertificate>) -> Section {
    let start = Instant::now();
    let Some(cert) = critical else {
        return finish("cone-membership", start, SectionStatus::Skipped, vec![]);
    };
    // The critical value is at most f at either enclosure endpoint; the
    // smaller endpoint value is a certified upper bound for it.
    let upper = cert
        .value_at_lo
        .value
        .clone()
        .min(cert.value_at_hi.value.clone());
    let at_critical = cone_membership(upper);
    let at_domination = cone_membership(ExactRational::from_int(9));
    let ok = at_critical.inside && at_domination.inside;
    let entries = vec![
        CertificateEntry::new(
            "ConeMembershipAtCriticalValue",
            "the certified upper bound for the critical energy lies inside the controlled cone",
            to_value(&at_critical),
            at_critical.margin.clone(),
        ),
        CertificateEntry::new(
            "ConeMembershipAtDominationBound",
            "the global energy bound 9 lies inside the controlled cone of threshold 21/2",
            to_value(&at_domination),
            at_domination.margin.clone(),
        ),
    ];
    let status = if ok { SectionStatus::Certified } else { SectionStatus::Failed };
    finish("cone-membership", start, status, entries)
}

fn section_yamabe_sobolev(cfg: &RunConfig) -> Section {
    let start = Instant::now();
    let mut entries = Vec::new();
    let mut ok = true;

    let at_nine = yamabe_lower(&ExactRational::from_int(9));
    match at_nine {
        Ok(bound) => {
            let margin = bound.y_squared_pi2.coeff().clone();
            ok &= bound.exceeds_4pi_sqrt6;
            entries.push(CertificateEntry::new(
                "YamabeAtDominationBound",
                "below energy 9 the Yamabe invariant satisfies Y^2 >= 96 pi^2, i.e. Y >= 4 pi sqrt(6)",
                to_value(&bound),
                margin,
            ));
        }
        Err(e) => {
            ok = false;
            entries.push(failure_entry("YamabeAtDominationBound", e.to_string()));
        }
    }
    match yamabe_lower(&cfg.a_bound) {
        Ok(bound) => {
            let margin = bound.y_squared_pi2.coeff().clone();
            entries.push(CertificateEntry::new(
                "YamabeAtConfiguredBound",
                "the configured energy bound also sits inside the cone with a positive Yamabe coefficient",
                to_value(&bound),
                margin,
            ));
        }
        Err(e) => {
            ok = false;
            entries.push(failure_entry("YamabeAtConfiguredBound", e.to_string()));
        }
    }
    let sobolev = sobolev_upper();
    let MaxArm::ScalarBranch { ref witness, ref constant_branch, .. } = sobolev.max_arm;
    let gate_margin = witness.square() - constant_branch * constant_branch;
    entries.push(CertificateEntry::new(
        "SobolevUpper",
        "the Sobolev constant is bounded by exactly 2 sqrt(3) after the pi factors cancel",
        to_value(&sobolev),
        gate_margin,
    ));
    let status = if ok { SectionStatus::Certified } else { SectionStatus::Failed };
    finish("yamabe-sobolev", start, status, entries)
}

/// The roman-numeral case label of an enumerated candidate, as reports name
/// the three pre-Diophantine survivors.
fn case_label(c: &BubbleCandidate) -> &'static str {
    match (c.b2, c.gamma_order) {
        (1, 3) => "(i)",
        (1, 2) => "(ii)",
        (2, _) => "(iii)",
        _ => "(?)",
    }
}

fn exclusion_entry(cert: &ExclusionCertificate) -> CertificateEntry {
    CertificateEntry::new(
        cert.rule.to_string(),
        cert.paper_anchor.clone(),
        json!({
            "scope": to_value(&cert.scope),
            "payload": to_value(&cert.data),
        }),
        cert.margin.clone(),
    )
}

fn section_bubbles(
    cfg: &RunConfig,
    l_enclosure: &extremal_cert_core::polyalg::RootEnclosure,
) -> Section {
    let start = Instant::now();
    match run_full_exclusion_with_bounds(
        &cfg.a_bound,
        l_enclosure,
        cfg.dioph_bound,
        cfg.pell_bound,
    ) {
        Ok(run) => {
            let mut entries = vec![CertificateEntry::new(
                "EnergyBudgets",
                "curvature energy budgets in pi^2 units generated by the energy bound",
                to_value(&run.budget),
                ExactRational::zero(),
            )];
            entries.extend(run.certificates.iter().map(exclusion_entry));
            let mut labeled: Vec<Value> = run
                .pre_diophantine_survivors
                .iter()
                .map(|c| json!({ "case": case_label(c), "candidate": to_value(c) }))
                .collect();
            labeled.sort_by_key(|v| v["case"].as_str().unwrap_or("").to_string());
            entries.push(CertificateEntry::new(
                "CandidateEnumeration",
                "three candidates survive to the Diophantine stage; none survives it",
                json!({
                    "pre_diophantine_survivors": labeled,
                    "survivors": to_value(&run.survivors),
                }),
                ExactRational::zero(),
            ));
            match run.verdict {
                ExclusionVerdict::NoBubbling => {
                    finish("bubble-exclusion", start, SectionStatus::Certified, entries)
                }
                ExclusionVerdict::Breakdown { ref failed_stages } => {
                    let stages: Vec<String> =
                        failed_stages.iter().map(|r| r.to_string()).collect();
                    entries.push(CertificateEntry::new(
                        "ExclusionBreakdown",
                        "the exclusion chain does not close at this energy bound",
                        json!({ "failed_stages": stages }),
                        ExactRational::zero(),
                    ));
                    finish("bubble-exclusion", start, SectionStatus::Failed, entries)
                }
            }
        }
        Err(e) => finish(
            "bubble-exclusion",
            start,
            SectionStatus::Failed,
            vec![failure_entry("ExclusionRun", e.to_string())],
        ),
    }
}

/// Runs the full pipeline in fixed order and assembles the report.
pub fn cmd_verify_all(cfg: &RunConfig) -> VerificationReport {
    let mut sections = Vec::new();
    sections.push(section_f_properties());
    let (critical_section, critical) = section_critical(cfg);
    sections.push(critical_section);
    let (boundary_section, l_enclosure) = section_boundary(cfg);
    sections.push(boundary_section);
    sections.push(section_scalar());
    sections.push(section_c0());
    sections.push(section_domination());
    sections.push(section_cone(critical.as_ref()));
    sections.push(section_yamabe_sobolev(cfg));
    sections.push(section_bubbles(cfg, &l_enclosure));
    VerificationReport::new(cfg, sections)
}

// ---------------------------------------------------------------------------
// Focused commands
// ---------------------------------------------------------------------------

/// `functional eval --x p/q`: exact value plus a 15-digit decimal hint.
pub fn cmd_functional_eval(x: &str) -> Result<CmdOutcome, ConfigError> {
    let x = crate::config::parse_rational("x", x)?;
    if x.is_negative() {
        return Err(ConfigError::NegativeEvaluationPoint {
            value: x.to_string(),
        });
    }
    let f = functional_f();
    let value = f.eval(&x);
    let decimal = value.decimal_string(15);
    let text = if decimal == value.to_string() {
        format!("f({x}) = {value}")
    } else {
        format!("f({x}) = {value} ≈ {decimal}")
    };
    Ok(CmdOutcome { text, success: true })
}

/// `functional critical --width p/q`.
pub fn cmd_functional_critical(width: &str) -> Result<CmdOutcome, ConfigError> {
    let w = crate::config::parse_rational("width", width)?;
    if !w.is_positive() {
        return Err(ConfigError::NonPositive {
            flag: "width".into(),
            value: width.into(),
        });
    }
    let cert = certify_critical_point(&w).map_err(|_| ConfigError::WidthTooCoarse {
        value: width.into(),
    })?;
    let enc = &cert.enclosure;
    let text = format!(
        "unique interior critical point of the energy\n\
         enclosure: {} (width {} ≤ requested {})\n\
         decimal hint: x0 ≈ {}\n\
         positive roots of the derivative numerator: {} (search bound {})\n\
         decrease certificate: f'(0) = {}, no derivative root in (0, lo), sign at lo = {}\n\
         values below 8: f(lo) = {}, f(hi) = {}, f(hi + width) = {}",
        enc.interval(),
        enc.width(),
        cert.requested_width,
        enc.lo().decimal_string(8),
        cert.positive_root_count,
        cert.search_bound,
        cert.derivative_at_zero,
        cert.derivative_sign_at_lo,
        cert.value_at_lo.value,
        cert.value_at_hi.value,
        cert.value_beyond.value,
    );
    Ok(CmdOutcome { text, success: true })
}

/// `functional boundary --width p/q`.
pub fn cmd_functional_boundary(width: &str) -> Result<CmdOutcome, ConfigError> {
    let w = crate::config::parse_rational("width", width)?;
    if !w.is_positive() {
        return Err(ConfigError::NonPositive {
            flag: "width".into(),
            value: width.into(),
        });
    }
    let cert = certify_boundary_L(&w);
    let enc = &cert.enclosure;
    let text = format!(
        "unique positive solution of f(x) = 8 (the admissible-shape endpoint)\n\
         factorization: 3N - 8D = x · ({})\n\
         sign changes in the quintic's coefficients: {}\n\
         positive roots: {}\n\
         enclosure: {} (width {})\n\
         decimal hint: L ≈ {}\n\
         interior grid: f < 8 at all {} samples k·lo/65\n\
         beyond: f({}) = {} > 8",
        cert.quintic,
        cert.descartes_count,
        cert.positive_root_count,
        enc.interval(),
        enc.width(),
        enc.lo().decimal_string(8),
        cert.interior_grid.len(),
        cert.beyond_sample.x,
        cert.beyond_sample.value,
    );
    Ok(CmdOutcome { text, success: true })
}

fn cert_text(cert: &ExclusionCertificate) -> String {
    format!("{} (margin {}): {}", cert.rule, cert.margin, cert.paper_anchor)
}

/// `bubbles [--only RULE]`.
pub fn cmd_bubbles(cfg: &RunConfig, only: Option<&str>) -> Result<CmdOutcome, ConfigError> {
    let rule = match only {
        Some(s) => Some(s.parse::<RuleId>().map_err(|_| ConfigError::UnknownRule {
            value: s.to_string(),
        })?),
        None => None,
    };
    let Some(rule) = rule else {
        return Ok(run_bubble_chain(cfg));
    };
    Ok(run_single_rule(cfg, rule))
}

fn run_bubble_chain(cfg: &RunConfig) -> CmdOutcome {
    let l_enclosure = certify_boundary_L(&cfg.l_width).enclosure;
    match run_full_exclusion_with_bounds(
        &cfg.a_bound,
        &l_enclosure,
        cfg.dioph_bound,
        cfg.pell_bound,
    ) {
        Ok(run) => {
            let mut lines = vec![format!(
                "budgets at energy bound {}: ricci {} pi^2, wminus {} pi^2",
                run.a_bound, run.budget.ricci_pi2, run.budget.wminus_pi2
            )];
            lines.extend(run.certificates.iter().map(cert_text));
            let mut survivors: Vec<(&'static str, String)> = run
                .pre_diophantine_survivors
                .iter()
                .map(|c| (case_label(c), c.label()))
                .collect();
            survivors.sort();
            lines.push("pre-Diophantine survivors:".into());
            for (case, label) in survivors {
                lines.push(format!("  {case} {label}"));
            }
            let success = run.verdict == ExclusionVerdict::NoBubbling;
            lines.push(match &run.verdict {
                ExclusionVerdict::NoBubbling => {
                    "verdict: NoBubbling (all candidates excluded)".into()
                }
                ExclusionVerdict::Breakdown { failed_stages } => {
                    let stages: Vec<String> =
                        failed_stages.iter().map(|r| r.to_string()).collect();
                    format!("verdict: Breakdown at stages [{}]", stages.join(", "))
                }
            });
            CmdOutcome {
                text: lines.join("\n"),
                success,
            }
        }
        Err(e) => CmdOutcome {
            text: format!("exclusion run failed: {e}"),
            success: false,
        },
    }
}

fn run_single_rule(cfg: &RunConfig, rule: RuleId) -> CmdOutcome {
    let budget = match energy_budgets(&cfg.a_bound) {
        Ok(b) => b,
        Err(e) => {
            return CmdOutcome {
                text: format!("no budgets: {e}"),
                success: false,
            }
        }
    };
    match rule {
        RuleId::TrivialGammaEnergy => match exclude_trivial_gamma(&budget) {
            Ok(cert) => CmdOutcome {
                text: cert_text(&cert),
                success: true,
            },
            Err(e) => CmdOutcome {
                text: format!("stage failed: {e}"),
                success: false,
            },
        },
        RuleId::BottomAxiom => {
            let cert = bottom_axiom();
            CmdOutcome {
                text: cert_text(&cert),
                success: true,
            }
        }
        RuleId::ForcedSymmetry => match forced_symmetry(&budget) {
            Ok(cert) => CmdOutcome {
                text: format!(
                    "{}\nmargin detail: 24 - {} = {}",
                    cert_text(&cert),
                    budget.wminus_pi2,
                    cert.margin
                ),
                success: true,
            },
            Err(e) => CmdOutcome {
                text: format!("stage failed: {e}"),
                success: false,
            },
        },
        RuleId::SpriteRicci => {
            let admitted = sprite_filter(&budget);
            let mut lines = vec![format!(
                "Ricci budget {} pi^2 admits line-bundle degrees {:?}",
                budget.ricci_pi2, admitted
            )];
            for k in 1..=4u64 {
                lines.push(format!("  k = {k}: energy 8(k-2)^2/k = {}", sprite_energy(k)));
            }
            CmdOutcome {
                text: lines.join("\n"),
                success: true,
            }
        }
        RuleId::ElfWminus => match elf_filter(&budget) {
            Ok(survivors) => {
                let mut lines = vec![format!(
                    "Weyl budget {} pi^2 leaves the b2 = 2 survivors:",
                    budget.wminus_pi2
                )];
                for s in survivors {
                    lines.push(format!("  {}", s.label()));
                }
                CmdOutcome {
                    text: lines.join("\n"),
                    success: true,
                }
            }
            Err(e) => CmdOutcome {
                text: format!("stage failed: {e}"),
                success: false,
            },
        },
        RuleId::CaseI_Mod3 => {
            let cert = mod3_obstruction(cfg.dioph_bound);
            let mut lines = vec![cert_text(&cert)];
            if let CertData::Mod3 {
                residue_table,
                zero_residue_pairs,
                step2_lhs_residue,
                step2_rhs_residue,
                brute_force_bound,
                brute_force_solutions,
            } = &cert.data
            {
                lines.push("residues of 2m^2 - n^2 (mod 3):".into());
                for ((m, n), r) in residue_table {
                    lines.push(format!("  (m, n) ≡ ({m}, {n}): {r}"));
                }
                lines.push(format!("zero residue only at {zero_residue_pairs:?}"));
                lines.push(format!(
                    "after m = 3j, n = 3k: -1 ≡ {step2_lhs_residue} but 6j^2 - 3k^2 ≡ {step2_rhs_residue} (mod 3)"
                ));
                lines.push(format!(
                    "brute force |m| ≤ {brute_force_bound}: {brute_force_solutions} solutions of 2m^2 - n^2 = -3"
                ));
            }
            CmdOutcome {
                text: lines.join("\n"),
                success: true,
            }
        }
        RuleId::CaseII_III_PellArea => {
            let l_enclosure = certify_boundary_L(&cfg.l_width).enclosure;
            let pell = pell_solutions(cfg.pell_bound);
            match area_contradiction(&l_enclosure, &pell) {
                Ok(cert) => {
                    let mut lines = vec![cert_text(&cert)];
                    lines.push(format!(
                        "Pell solutions of j^2 - 2l^2 = -1 up to {}:",
                        cfg.pell_bound
                    ));
                    for (j, l) in &pell {
                        lines.push(format!("  (j, l) = ({j}, {l})"));
                    }
                    if let CertData::PellArea {
                        sigma_self_intersection,
                        min_abs_j,
                        residual,
                        ..
                    } = &cert.data
                    {
                        lines.push(format!(
                            "each sphere class has self-intersection {sigma_self_intersection}; min |j| = {min_abs_j}"
                        ));
                        lines.push(format!("decisive residual: {residual} > 0 on the ray"));
                    }
                    CmdOutcome {
                        text: lines.join("\n"),
                        success: true,
                    }
                }
                Err(e) => CmdOutcome {
                    text: format!("stage failed: {e}"),
                    success: false,
                },
            }
        }
    }
}

/// `budgets --a-bound p/q`.
pub fn cmd_budgets(a_bound: &str) -> Result<CmdOutcome, ConfigError> {
    let a = crate::config::parse_rational("a-bound", a_bound)?;
    if a <= ExactRational::from_int(7) {
        return Err(ConfigError::ABoundTooSmall {
            value: a_bound.to_string(),
        });
    }
    let b = energy_budgets(&a).expect("validated above the floor");
    let below_23 = b.wminus_pi2 < ExactRational::from_int(23);
    let text = format!(
        "energy bound: {}\nricci budget:  {} pi^2\nwminus budget: {} pi^2 (below 23: {})",
        b.a_bound, b.ricci_pi2, b.wminus_pi2, below_23
    );
    Ok(CmdOutcome { text, success: true })
}

/// `dioph pell --bound N`.
pub fn cmd_dioph_pell(bound: u64) -> Result<CmdOutcome, ConfigError> {
    if bound < 1 {
        return Err(ConfigError::BoundTooSmall {
            flag: "bound".into(),
            value: bound as i64,
        });
    }
    let sols = pell_solutions(bound);
    let mut lines = vec![format!(
        "positive solutions of j^2 - 2l^2 = -1 with j, l ≤ {bound}: {}",
        sols.len()
    )];
    for (j, l) in &sols {
        lines.push(format!("  (j, l) = ({j}, {l})"));
    }
    Ok(CmdOutcome {
        text: lines.join("\n"),
        success: true,
    })
}
