//! The verification report: a deterministic, archivable record of a pipeline
//! run.
//!
//! The report separates a *certified payload* — everything that must be
//! byte-identical across runs with the same configuration — from advisory
//! metadata (per-section runtimes). Serialization goes through
//! `serde_json::Value`, whose object maps keep keys sorted, so two identical
//! payloads serialize to identical bytes.
//!
//! Stable JSON schema:
//!
//! ```text
//! {"version", "inputs", "sections": [{"name", "status",
//!   "certificates": [{"rule", "paper_anchor", "data", "margin"}],
//!   "runtime_ms"}], "verdict", "einstein_annotation"}
//! ```
//!
//! Every rational value is a `"p/q"` string; surds are `{"coeff", "radicand"}`;
//! π² multiples are `{"pi2_coeff"}`. Structural integers (bounds, counts,
//! lattice entries) stay JSON integers.

use extremal_cert_core::exactnum::ExactRational;
use serde_json::{json, Map, Value};

use crate::config::RunConfig;

/// The concluding geometric step, recorded as an annotation and never claimed
/// as a computed result.
pub const EINSTEIN_ANNOTATION: &str = "These certificates establish arithmetic premises only: \
the extremal representative of the distinguished Kähler class has strictly positive scalar \
curvature s with the certified curvature and Sobolev bounds, and every candidate bubble is \
excluded, so degenerating sequences converge smoothly. The concluding step — that conformally \
rescaling the resulting extremal metric g by the inverse square of its scalar curvature, \
h = s^{-2} g, produces an Einstein metric on the blown-up projective plane — is a theorem of \
geometric analysis outside the scope of this tool, and is recorded here as an annotation.";

/// Outcome of one report section.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionStatus {
    Certified,
    Failed,
    Skipped,
}

impl SectionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SectionStatus::Certified => "Certified",
            SectionStatus::Failed => "Failed",
            SectionStatus::Skipped => "Skipped",
        }
    }
}

/// One certificate row: which rule fired, the statement it discharges, its
/// exact data, and the exact strictness margin of its decisive inequality.
#[derive(Debug, Clone)]
pub struct CertificateEntry {
    pub rule: String,
    pub paper_anchor: String,
    pub data: Value,
    pub margin: ExactRational,
}

impl CertificateEntry {
    pub fn new(
        rule: impl Into<String>,
        paper_anchor: impl Into<String>,
        data: Value,
        margin: ExactRational,
    ) -> Self {
        CertificateEntry {
            rule: rule.into(),
            paper_anchor: paper_anchor.into(),
            data,
            margin,
        }
    }

    fn to_value(&self) -> Value {
        json!({
            "rule": self.rule,
            "paper_anchor": self.paper_anchor,
            "data": self.data,
            "margin": self.margin.to_string(),
        })
    }
}

/// One ordered section of the pipeline.
#[derive(Debug, Clone)]
pub struct Section {
    pub name: String,
    pub status: SectionStatus,
    pub certificates: Vec<CertificateEntry>,
    /// Advisory timing; excluded from the certified payload.
    pub runtime_ms: u64,
}

impl Section {
    fn to_value(&self, with_runtime: bool) -> Value {
        let mut obj = Map::new();
        obj.insert("name".into(), Value::String(self.name.clone()));
        obj.insert("status".into(), Value::String(self.status.as_str().into()));
        obj.insert(
            "certificates".into(),
            Value::Array(self.certificates.iter().map(|c| c.to_value()).collect()),
        );
        if with_runtime {
            obj.insert("runtime_ms".into(), Value::from(self.runtime_ms));
        }
        Value::Object(obj)
    }
}

/// The assembled report.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub version: String,
    pub inputs: Value,
    pub sections: Vec<Section>,
    pub verdict: bool,
    pub einstein_annotation: String,
}

/// The `inputs` object recorded in every report, straight from the config.
pub fn inputs_value(cfg: &RunConfig) -> Value {
    json!({
        "a_bound": cfg.a_bound.to_string(),
        "widths": {
            "x0_width": cfg.x0_width.to_string(),
            "L_width": cfg.l_width.to_string(),
        },
        "brute_force_bounds": {
            "dioph_bound": cfg.dioph_bound,
            "pell_bound": cfg.pell_bound,
        },
    })
}

impl VerificationReport {
    pub fn new(cfg: &RunConfig, sections: Vec<Section>) -> Self {
        let verdict = sections
            .iter()
            .all(|s| s.status != SectionStatus::Failed);
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs: inputs_value(cfg),
            sections,
            verdict,
            einstein_annotation: EINSTEIN_ANNOTATION.to_string(),
        }
    }

    fn render(&self, with_runtime: bool) -> Value {
        json!({
            "version": self.version,
            "inputs": self.inputs,
            "sections": Value::Array(
                self.sections.iter().map(|s| s.to_value(with_runtime)).collect()
            ),
            "verdict": self.verdict,
            "einstein_annotation": self.einstein_annotation,
        })
    }

    /// Full JSON, including advisory runtimes.
    pub fn to_json(&self) -> Value {
        self.render(true)
    }

    /// The canonical bytes that must match across identical runs: the same
    /// JSON with every `runtime_ms` removed, compactly serialized with sorted
    /// keys.
    pub fn certified_payload(&self) -> String {
        serde_json::to_string(&self.render(false)).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
    }

    /// Human-readable rendering of the same content.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# Certification report (v{})\n\n", self.version));
        out.push_str(&format!(
            "Inputs: `{}`\n\n",
            serde_json::to_string(&self.inputs).expect("inputs serialize")
        ));
        for s in &self.sections {
            out.push_str(&format!(
                "## {} — {} ({} ms)\n\n",
                s.name,
                s.status.as_str(),
                s.runtime_ms
            ));
            for c in &s.certificates {
                out.push_str(&format!(
                    "- **{}** (margin {}): {}\n",
                    c.rule, c.margin, c.paper_anchor
                ));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "**Verdict: {}**\n\n",
            if self.verdict { "CERTIFIED" } else { "FAILED" }
        ));
        out.push_str(&format!("> {}\n", self.einstein_annotation));
        out
    }
}
