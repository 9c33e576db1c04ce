//! Auditing criterion verdicts against the factorization oracle.

use std::collections::BTreeMap;
use std::ops::AddAssign;

use rayon::prelude::*;

use crate::corpus::{self, ExhaustiveCorpus, Family, FamilySpec};
use crate::criteria::{
    self, CertificateTag, Conclusion, CriteriaConfig, Criterion, CriterionOutcome,
};
use crate::error::{Error, Result};
use crate::oracle::{self, FactorizationResult, OracleConfig};
use crate::poly::Polynomial;
use crate::report::primitive_factors;

/// Whether `conclusion` is compatible with the factorization of the
/// polynomial it was drawn about.
pub fn is_sound(conclusion: &Conclusion, fact: &FactorizationResult) -> bool {
    let count = fact.count();
    match *conclusion {
        Conclusion::Irreducible => count == 1,
        Conclusion::AtMostFactors(n) => count <= n,
        Conclusion::FactorDegreeBound(k) => {
            count <= 1 || fact.min_factor_degree().map_or(false, |d| d <= k)
        }
        Conclusion::NoConclusion => true,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub fired: u64,
    pub sound: u64,
    pub no_conclusion: u64,
    pub violations: u64,
    /// Unsound numeric-conditional conclusions; reported, not failures.
    pub numeric_warnings: u64,
    pub errors: u64,
}

impl AddAssign for Tally {
    fn add_assign(&mut self, o: Tally) {
        self.fired += o.fired;
        self.sound += o.sound;
        self.no_conclusion += o.no_conclusion;
        self.violations += o.violations;
        self.numeric_warnings += o.numeric_warnings;
        self.errors += o.errors;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Position in the audited corpus.
    pub index: u64,
    pub poly: Polynomial,
    pub criterion: Criterion,
    pub conclusion: Conclusion,
    pub certificate: CertificateTag,
    pub factorization: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct AuditSummary {
    pub items: u64,
    /// Items the oracle could not factor within its limits.
    pub skipped: u64,
    pub tallies: BTreeMap<Criterion, Tally>,
    /// Exact-certificate conclusions contradicted by the oracle.
    pub violations: Vec<Violation>,
    /// Numeric-conditional conclusions contradicted by the oracle.
    pub warnings: Vec<Violation>,
}

impl AuditSummary {
    pub fn violation_count(&self) -> u64 {
        self.tallies.values().map(|t| t.violations).sum()
    }

    fn merge(mut self, other: AuditSummary) -> AuditSummary {
        self.items += other.items;
        self.skipped += other.skipped;
        for (c, t) in other.tallies {
            *self.tallies.entry(c).or_default() += t;
        }
        self.violations.extend(other.violations);
        self.warnings.extend(other.warnings);
        self
    }

    fn sort(&mut self) {
        self.violations.sort_by_key(|v| (v.index, v.criterion));
        self.warnings.sort_by_key(|v| (v.index, v.criterion));
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("items: {}  skipped: {}\n", self.items, self.skipped);
        out.push_str(&format!(
            "{:<24} {:>9} {:>9} {:>9} {:>10} {:>9} {:>7}\n",
            "criterion", "fired", "sound", "none", "violations", "numeric", "errors"
        ));
        for (c, t) in &self.tallies {
            out.push_str(&format!(
                "{:<24} {:>9} {:>9} {:>9} {:>10} {:>9} {:>7}\n",
                c.name(),
                t.fired,
                t.sound,
                t.no_conclusion,
                t.violations,
                t.numeric_warnings,
                t.errors
            ));
        }
        for v in &self.violations {
            out.push_str(&format!(
                "VIOLATION #{} {}: {} concluded {} but {}\n",
                v.index, v.poly, v.criterion, v.conclusion, v.factorization
            ));
        }
        for v in &self.warnings {
            out.push_str(&format!(
                "numeric warning #{} {}: {} concluded {} but {}\n",
                v.index, v.poly, v.criterion, v.conclusion, v.factorization
            ));
        }
        out.push_str(&format!("violations: {}\n", self.violation_count()));
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditConfig {
    pub criteria: Vec<Criterion>,
    pub criteria_config: CriteriaConfig,
    pub oracle: OracleConfig,
    /// Worker threads; 0 means rayon's default.
    pub jobs: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            criteria: Criterion::ALL.to_vec(),
            criteria_config: CriteriaConfig::default(),
            oracle: OracleConfig::default(),
            jobs: 0,
        }
    }
}

/// Audits one primitive polynomial with nonzero constant term.
pub fn audit_one(index: u64, f: &Polynomial, config: &AuditConfig) -> AuditSummary {
    let mut summary = AuditSummary {
        items: 1,
        ..Default::default()
    };
    let fact = match oracle::factor_with(f, &config.oracle) {
        Ok(r) => primitive_factors(&r),
        Err(_) => {
            summary.skipped = 1;
            return summary;
        }
    };
    for (criterion, result) in criteria::run_all(f, &config.criteria, &config.criteria_config) {
        let tally = summary.tallies.entry(criterion).or_default();
        let outcome = match result {
            Ok(o) => o,
            Err(_) => {
                tally.errors += 1;
                continue;
            }
        };
        record(index, f, &fact, &outcome, tally, &mut summary.violations, &mut summary.warnings);
    }
    summary
}

fn record(
    index: u64,
    f: &Polynomial,
    fact: &FactorizationResult,
    outcome: &CriterionOutcome,
    tally: &mut Tally,
    violations: &mut Vec<Violation>,
    warnings: &mut Vec<Violation>,
) {
    if outcome.conclusion == Conclusion::NoConclusion {
        tally.no_conclusion += 1;
        return;
    }
    tally.fired += 1;
    if is_sound(&outcome.conclusion, fact) {
        tally.sound += 1;
        return;
    }
    let v = Violation {
        index,
        poly: f.clone(),
        criterion: outcome.criterion,
        conclusion: outcome.conclusion,
        certificate: outcome.certificate,
        factorization: fact.to_string(),
    };
    match outcome.certificate {
        CertificateTag::Exact => {
            tally.violations += 1;
            violations.push(v);
        }
        CertificateTag::NumericConditional => {
            tally.numeric_warnings += 1;
            warnings.push(v);
        }
    }
}

fn with_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(work());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(work))
}

/// Audits an explicit list; indices are list positions.
pub fn audit_polys(polys: &[Polynomial], config: &AuditConfig) -> Result<AuditSummary> {
    with_pool(config.jobs, || {
        let mut s = polys
            .par_iter()
            .enumerate()
            .map(|(i, f)| audit_one(i as u64, f, config))
            .reduce(AuditSummary::default, AuditSummary::merge);
        s.sort();
        s
    })
}

/// Audits the exhaustive corpus; indices are raw corpus indices.
pub fn audit_exhaustive(corpus: &ExhaustiveCorpus, config: &AuditConfig) -> Result<AuditSummary> {
    with_pool(config.jobs, || {
        let mut s = (0..corpus.raw_len())
            .into_par_iter()
            .filter_map(|i| corpus.get(i).map(|f| audit_one(i, &f, config)))
            .reduce(AuditSummary::default, AuditSummary::merge);
        s.sort();
        s
    })
}

/// One family instance checked against the conclusion its construction
/// promises.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyCheck {
    pub spec: FamilySpec,
    pub poly: Polynomial,
    pub criterion: Criterion,
    pub expected: String,
    pub outcome: Option<CriterionOutcome>,
    /// `None` when the oracle was out of range for this instance.
    pub oracle_count: Option<usize>,
    pub passed: bool,
}

/// The criterion each family is built for.
pub fn family_criterion(family: Family) -> Criterion {
    match family {
        Family::P1 => Criterion::EisensteinGeneralized,
        Family::P2 => Criterion::ConstantTerm,
        Family::P3 => Criterion::LeadingCoeff,
        Family::P4 => Criterion::DominantCoefficient,
    }
}

/// Smallest `j >= 1` with `p ∤ a_j`.
fn first_unit_index(coeffs: impl IntoIterator<Item = i64>, p: u64) -> usize {
    coeffs
        .into_iter()
        .position(|c| c.rem_euclid(p as i64) != 0)
        .map_or(usize::MAX, |i| i + 1)
}

/// Checks one family instance: the designated criterion must reach the
/// promised conclusion and the oracle, when in range, must agree.
pub fn check_family(spec: &FamilySpec, config: &AuditConfig) -> Result<FamilyCheck> {
    let poly = corpus::gen_family(spec)?;
    let criterion = family_criterion(spec.family());
    let outcome = criterion.run(&poly, &config.criteria_config).ok();
    let conclusion = outcome.as_ref().map(|o| o.conclusion);
    let (expected, ok) = match spec {
        FamilySpec::P1 { p, m, .. } => {
            let o = outcome.as_ref();
            let w = |name: &str| o.and_then(|o| o.witness(name)).map(|v| v.to_string());
            let ok = conclusion == Some(Conclusion::Irreducible)
                && w("p") == Some(p.to_string())
                && w("k") == Some((m - 1).to_string())
                && w("j") == Some(m.to_string());
            (format!("Irreducible with p={p}, k={}, j={m}", m - 1), ok)
        }
        FamilySpec::P2 { p, k, coeffs, .. } => {
            let bound = (*k as usize).min(first_unit_index(coeffs.iter().copied(), *p));
            let ok = conclusion
                .and_then(|c| c.factor_bound())
                .map_or(false, |b| b <= bound);
            (format!("at most {bound} factors"), ok)
        }
        FamilySpec::P3 { p, k, a0, coeffs, .. } => {
            // a_{m-1}, …, a_1, a_0
            let from_top = coeffs.iter().rev().copied().chain([*a0]);
            let bound = (*k as usize).min(first_unit_index(from_top, *p));
            let ok = conclusion
                .and_then(|c| c.factor_bound())
                .map_or(false, |b| b <= bound);
            (format!("at most {bound} factors"), ok)
        }
        FamilySpec::P4 { m, j, .. } => {
            let want = if m - j <= 1 {
                Conclusion::Irreducible
            } else {
                Conclusion::AtMostFactors(m - j)
            };
            (want.to_string(), conclusion == Some(want))
        }
    };
    let mut passed = ok;
    let oracle_count = match oracle::factor_with(&poly, &config.oracle) {
        Ok(fact) => {
            let fact = primitive_factors(&fact);
            if let Some(c) = &conclusion {
                passed &= is_sound(c, &fact);
            }
            Some(fact.count())
        }
        Err(_) => None,
    };
    Ok(FamilyCheck {
        spec: spec.clone(),
        poly,
        criterion,
        expected,
        outcome,
        oracle_count,
        passed,
    })
}

/// The standard grid for a family.
pub fn family_grid(family: Family) -> Vec<FamilySpec> {
    match family {
        Family::P1 => corpus::p1_grid(),
        Family::P2 => {
            let mut g = corpus::p2_grid(1, &[-1, 0, 1]);
            g.extend(corpus::p2_grid(2, &[-1, 0, 1]));
            g
        }
        Family::P3 => corpus::p3_grid(),
        Family::P4 => corpus::p4_grid(),
    }
}

pub fn audit_families(families: &[Family], config: &AuditConfig) -> Result<Vec<FamilyCheck>> {
    let specs: Vec<FamilySpec> = families.iter().flat_map(|&f| family_grid(f)).collect();
    with_pool(config.jobs, || {
        specs
            .par_iter()
            .map(|s| check_family(s, config))
            .collect::<Result<Vec<_>>>()
    })?
}
