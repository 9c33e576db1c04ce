//! Whole-polynomial analysis and its serializable report.
//!
//! All integers in the report are decimal strings so that no consumer loses
//! precision. The schema tag is [`SCHEMA`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::audit;
use crate::criteria::{self, CertificateTag, Conclusion, CriteriaConfig, Criterion, CriterionOutcome};
use crate::error::{Error, Result};
use crate::oracle::{self, FactorizationResult, OracleConfig};
use crate::poly::{self, Polynomial};

pub const SCHEMA: &str = "irreducia/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    On,
    Off,
    /// Run the oracle only when the degree is within `max_oracle_degree`.
    Auto,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisConfig {
    pub criteria: Vec<Criterion>,
    pub criteria_config: CriteriaConfig,
    pub oracle: OracleMode,
    pub max_oracle_degree: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            criteria: Criterion::ALL.to_vec(),
            criteria_config: CriteriaConfig::default(),
            oracle: OracleMode::Auto,
            max_oracle_degree: OracleConfig::default().max_degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub text: String,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NormalizationRecord {
    pub content: String,
    pub z_power: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConclusionRecord {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

impl From<&Conclusion> for ConclusionRecord {
    fn from(c: &Conclusion) -> Self {
        ConclusionRecord {
            kind: c.kind().to_string(),
            bound: c.bound(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OutcomeRecord {
    pub criterion: String,
    pub applicable: bool,
    pub witnesses: BTreeMap<String, String>,
    pub conclusion: ConclusionRecord,
    pub certificate_mode: String,
}

impl From<&CriterionOutcome> for OutcomeRecord {
    fn from(o: &CriterionOutcome) -> Self {
        OutcomeRecord {
            criterion: o.criterion.name().to_string(),
            applicable: o.applicable,
            witnesses: o
                .witnesses
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
            conclusion: (&o.conclusion).into(),
            certificate_mode: o.certificate.as_str().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StrongestRecord {
    pub criterion: String,
    pub conclusion: ConclusionRecord,
    pub witnesses: BTreeMap<String, String>,
    pub certificate_mode: String,
    /// Factor-count bound for the original input: the primitive part's bound
    /// plus one factor `z` per unit of `zPower`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_factor_bound: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub coeffs: Vec<String>,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleRecord {
    pub content: String,
    pub factors: Vec<FactorRecord>,
    pub factor_count: usize,
    /// Whether the strongest conclusion agrees with the factorization.
    pub consistent: bool,
}

impl OracleRecord {
    fn new(result: &FactorizationResult, consistent: bool) -> Self {
        let r = FactorizationRecord::from(result);
        OracleRecord {
            content: r.content,
            factors: r.factors,
            factor_count: r.factor_count,
            consistent,
        }
    }
}

/// A factorization on its own, in the same shape as [`OracleRecord`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FactorizationRecord {
    pub content: String,
    pub factors: Vec<FactorRecord>,
    pub factor_count: usize,
}

impl From<&FactorizationResult> for FactorizationRecord {
    fn from(result: &FactorizationResult) -> Self {
        FactorizationRecord {
            content: result.content.to_string(),
            factors: result
                .factors
                .iter()
                .map(|(g, e)| FactorRecord {
                    coeffs: g.coeffs().iter().map(|c| c.to_string()).collect(),
                    multiplicity: *e,
                })
                .collect(),
            factor_count: result.count(),
        }
    }
}

impl FactorizationRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema: String,
    pub input: InputEcho,
    pub normalization: NormalizationRecord,
    pub outcomes: Vec<OutcomeRecord>,
    pub strongest: Option<StrongestRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleRecord>,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// True when some criterion (or the trivial degree-one case) reached a
    /// conclusion, or the primitive part is a constant.
    pub fn is_decisive(&self) -> bool {
        self.strongest
            .as_ref()
            .map_or(false, |s| s.conclusion.kind != Conclusion::NoConclusion.kind())
            || self.input.coeffs.len() == self.normalization.z_power + 1
    }

    /// False only when the oracle ran and contradicts the strongest conclusion.
    pub fn is_consistent(&self) -> bool {
        self.oracle.as_ref().map_or(true, |o| o.consistent)
    }

    /// One line per criterion, then the strongest conclusion.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input: {}\n", self.input.text));
        out.push_str(&format!(
            "content: {}  zPower: {}\n",
            self.normalization.content, self.normalization.z_power
        ));
        for o in &self.outcomes {
            let w: Vec<String> = o.witnesses.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let line = format!(
                "{:<24} {:<20} {:<20} {}",
                o.criterion,
                render_conclusion(&o.conclusion),
                o.certificate_mode,
                w.join(" ")
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        match &self.strongest {
            Some(s) => {
                let w: Vec<String> = s.witnesses.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let line = format!(
                    "strongest: {} via {} [{}] {}",
                    render_conclusion(&s.conclusion),
                    s.criterion,
                    s.certificate_mode,
                    w.join(" ")
                );
                out.push_str(line.trim_end());
                out.push('\n');
                if let (Some(t), true) = (s.total_factor_bound, self.normalization.z_power > 0) {
                    out.push_str(&format!("original input: at most {t} irreducible factors\n"));
                }
            }
            None => out.push_str("strongest: none\n"),
        }
        if let Some(o) = &self.oracle {
            out.push_str(&format!(
                "oracle: {} irreducible factor(s), consistent: {}\n",
                o.factor_count, o.consistent
            ));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn render_conclusion(c: &ConclusionRecord) -> String {
    match c.bound {
        Some(b) => format!("{}({})", c.kind, b),
        None => c.kind.clone(),
    }
}

/// Pseudo-criterion name used when the primitive part is linear.
pub const DEGREE_ONE: &str = "degree_one";

pub fn analyze(f: &Polynomial, config: &AnalysisConfig) -> Result<AnalysisReport> {
    let norm = poly::normalize(f)?;
    let g = &norm.primitive_part;
    let m = g.degree().expect("nonzero");
    let mut warnings = Vec::new();
    let mut outcomes: Vec<CriterionOutcome> = Vec::new();

    if m == 0 {
        warnings.push(format!(
            "primitive part is constant: the input is {} · z^{}",
            norm.content, norm.z_power
        ));
    } else {
        for (criterion, result) in criteria::run_all(g, &config.criteria, &config.criteria_config) {
            match result {
                Ok(o) => {
                    if o.certificate == CertificateTag::NumericConditional
                        && o.conclusion != Conclusion::NoConclusion
                    {
                        warnings.push(format!(
                            "{criterion}: conditionally {} (numeric root location)",
                            describe(&o.conclusion)
                        ));
                    }
                    outcomes.push(o);
                }
                Err(e) => warnings.push(format!("{criterion} skipped: {e}")),
            }
        }
    }

    let best = outcomes
        .iter()
        .filter(|o| o.conclusion != Conclusion::NoConclusion)
        .min_by_key(|o| (o.conclusion.rank(), o.certificate));
    let mut strongest = match best {
        Some(o) => Some(StrongestRecord {
            criterion: o.criterion.name().to_string(),
            conclusion: (&o.conclusion).into(),
            witnesses: OutcomeRecord::from(o).witnesses,
            certificate_mode: o.certificate.as_str().to_string(),
            total_factor_bound: o.conclusion.factor_bound().map(|b| b + norm.z_power),
        }),
        None if m > 0 => Some(StrongestRecord {
            criterion: "none".to_string(),
            conclusion: (&Conclusion::NoConclusion).into(),
            witnesses: BTreeMap::new(),
            certificate_mode: CertificateTag::Exact.as_str().to_string(),
            total_factor_bound: None,
        }),
        None => None,
    };
    let strongest_conclusion = best.map(|o| o.conclusion);
    if m == 1 && strongest_conclusion != Some(Conclusion::Irreducible) {
        strongest = Some(StrongestRecord {
            criterion: DEGREE_ONE.to_string(),
            conclusion: (&Conclusion::Irreducible).into(),
            witnesses: BTreeMap::new(),
            certificate_mode: CertificateTag::Exact.as_str().to_string(),
            total_factor_bound: Some(1 + norm.z_power),
        });
    }

    let run_oracle = match config.oracle {
        OracleMode::On => true,
        OracleMode::Off => false,
        OracleMode::Auto => f.degree().map_or(false, |d| d <= config.max_oracle_degree),
    };
    let mut oracle_record = None;
    if run_oracle {
        let oc = OracleConfig {
            max_degree: config.max_oracle_degree,
            ..OracleConfig::default()
        };
        match oracle::factor_with(f, &oc) {
            Ok(result) => {
                let primitive = primitive_factors(&result);
                let conclusion = if m == 1 {
                    Conclusion::Irreducible
                } else {
                    strongest_conclusion.unwrap_or(Conclusion::NoConclusion)
                };
                let consistent = audit::is_sound(&conclusion, &primitive);
                if !consistent {
                    warnings.push(format!(
                        "oracle contradicts the strongest conclusion {conclusion}"
                    ));
                }
                oracle_record = Some(OracleRecord::new(&result, consistent));
            }
            Err(e) => warnings.push(format!("oracle skipped: {e}")),
        }
    }

    Ok(AnalysisReport {
        schema: SCHEMA.to_string(),
        input: InputEcho {
            text: f.to_string(),
            coeffs: f.coeffs().iter().map(|c| c.to_string()).collect(),
        },
        normalization: NormalizationRecord {
            content: norm.content.to_string(),
            z_power: norm.z_power,
        },
        outcomes: outcomes.iter().map(OutcomeRecord::from).collect(),
        strongest,
        oracle: oracle_record,
        warnings,
    })
}

fn describe(c: &Conclusion) -> String {
    match c {
        Conclusion::Irreducible => "irreducible".into(),
        Conclusion::AtMostFactors(n) => format!("at most {n} irreducible factors"),
        Conclusion::FactorDegreeBound(k) => format!("irreducible or with a factor of degree <= {k}"),
        Conclusion::NoConclusion => "inconclusive".into(),
    }
}

/// The factorization with the factor `z` removed: the factorization of the
/// primitive part (up to sign).
pub fn primitive_factors(result: &FactorizationResult) -> FactorizationResult {
    let z = Polynomial::monomial(1);
    FactorizationResult {
        content: BigInt::from(if result.content < BigInt::zero() { -1 } else { 1 }),
        factors: result.factors.iter().filter(|(g, _)| *g != z).cloned().collect(),
    }
}
