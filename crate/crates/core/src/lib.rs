//! Irreducibility criteria for integer polynomials.
//!
//! Given `f ∈ ℤ[z]`, [`analyze`] runs a set of criteria on its primitive part.
//! Each criterion searches for its own parameter witnesses (a prime, an index,
//! a divisor of the leading coefficient) and either proves irreducibility,
//! bounds the number of irreducible factors, bounds the degree of some factor,
//! or gives up. Every verdict can be checked against an exact Kronecker
//! factorization ([`oracle`]), and [`audit`] does so over whole corpora.
//!
//! ```
//! use irreducia::{analyze, parse_poly, AnalysisConfig};
//!
//! let f = parse_poly("z^3 + 4z + 4").unwrap();
//! let report = analyze(&f, &AnalysisConfig::default()).unwrap();
//! let best = report.strongest.unwrap();
//! assert_eq!(best.criterion, "eisenstein_generalized");
//! assert_eq!(best.conclusion.kind, "Irreducible");
//! ```

pub mod audit;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod numutil;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod report;
pub mod rootloc;

pub use criteria::{
    CertificateTag, Conclusion, CriteriaConfig, Criterion, CriterionOutcome, WitnessValue,
};
pub use error::{Error, Result};
pub use oracle::{factor, FactorizationResult, OracleConfig};
pub use parse::parse_poly;
pub use poly::{normalize, NormalizedInput, Polynomial};
pub use report::{analyze, AnalysisConfig, AnalysisReport, OracleMode};
pub use rootloc::{RootLocationCertificate, RootMode};
