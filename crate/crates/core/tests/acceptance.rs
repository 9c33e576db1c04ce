//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use irreducia::corpus::{self, ExhaustiveCorpus, FamilySpec};
use irreducia::criteria::{self, CertificateTag, Conclusion, CriteriaConfig, Criterion};
use irreducia::numutil;
use irreducia::oracle::{self, FactorizationResult};
use irreducia::poly::Polynomial;
use irreducia::rootloc::{self, DEFAULT_TOLERANCE};

const ROOT_MARGIN: f64 = 1e-6;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

/// Soundness, restated from the factorization alone.
fn consistent(c: Conclusion, fact: &FactorizationResult) -> bool {
    let count: usize = fact.factors.iter().map(|(_, e)| *e as usize).sum();
    match c {
        Conclusion::Irreducible => count == 1,
        Conclusion::AtMostFactors(n) => count <= n,
        Conclusion::FactorDegreeBound(k) => {
            count == 1 || fact.factors.iter().any(|(g, _)| g.degree().unwrap() <= k)
        }
        Conclusion::NoConclusion => true,
    }
}

fn abs_rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.abs())
}

/// The dominant inequality with `a_m` scaled away (`b = |a_m|`) at index
/// `j`, in exact rationals.
fn monic_scale_holds(f: &Polynomial, j: usize) -> bool {
    let m = f.degree().unwrap();
    let a = f.coeffs();
    let am = abs_rat(&a[m]);
    let mut rhs = abs_rat(&a[j + 1]) / &am;
    for i in 0..j {
        rhs += abs_rat(&a[i]) * num_traits::pow(am.clone(), j - i);
    }
    for i in j + 2..=m {
        rhs += abs_rat(&a[i]) / num_traits::pow(am.clone(), i - j);
    }
    abs_rat(&a[j]) > rhs
}

#[derive(Default)]
struct Sweep {
    items: u64,
    oracle_skipped: u64,
    verdicts: u64,
    violations: Vec<String>,
    monic_scale_instances: u64,
    monic_scale_misses: Vec<String>,
    cor2_fired: u64,
    cor2_unsound: Vec<String>,
    disk_certs: u64,
    disk_contradictions: Vec<String>,
}

impl Sweep {
    fn merge(mut self, o: Sweep) -> Sweep {
        self.items += o.items;
        self.oracle_skipped += o.oracle_skipped;
        self.verdicts += o.verdicts;
        self.violations.extend(o.violations);
        self.monic_scale_instances += o.monic_scale_instances;
        self.monic_scale_misses.extend(o.monic_scale_misses);
        self.cor2_fired += o.cor2_fired;
        self.cor2_unsound.extend(o.cor2_unsound);
        self.disk_certs += o.disk_certs;
        self.disk_contradictions.extend(o.disk_contradictions);
        self
    }
}

fn sweep_one(f: &Polynomial) -> Sweep {
    let mut s = Sweep {
        items: 1,
        ..Default::default()
    };
    let m = f.degree().unwrap();
    let Ok(fact) = oracle::factor(f) else {
        s.oracle_skipped = 1;
        return s;
    };
    let config = CriteriaConfig::default();
    for c in Criterion::ALL {
        let o = c.run(f, &config).expect("corpus inputs are valid");
        if o.conclusion == Conclusion::NoConclusion {
            continue;
        }
        s.verdicts += 1;
        if !consistent(o.conclusion, &fact) {
            s.violations.push(format!("{f}: {c} -> {} vs {fact}", o.conclusion));
        }
        if c == Criterion::Cor2 {
            s.cor2_fired += 1;
            if !consistent(o.conclusion, &fact) {
                s.cor2_unsound.push(format!("{f}: {}", o.conclusion));
            }
        }
    }

    if m >= 2 {
        let am = f.leading().unwrap().abs();
        let mut best_monic_scale = None;
        for j in (0..m).filter(|&j| monic_scale_holds(f, j)) {
            s.monic_scale_instances += 1;
            best_monic_scale = Some(m - j);
            if !criteria::dominant_inequality_holds(f, j, &am) {
                s.monic_scale_misses.push(format!("{f}: j={j} not reproduced with b=|a_m|"));
            }
        }
        if let Some(bound) = best_monic_scale {
            let o = criteria::dominant_coefficient(f).unwrap();
            if o.conclusion.factor_bound().map_or(true, |b| b > bound) {
                s.monic_scale_misses
                    .push(format!("{f}: dominant gave {} above monic-scale bound {bound}", o.conclusion));
            }
        }
    }

    let mut disks: Vec<BigInt> = Vec::new();
    for end in [f.constant_term().clone(), f.leading().unwrap().clone()] {
        for (p, k) in numutil::factorize(&end).unwrap().factors {
            disks.push(end.abs() / p.pow(k));
        }
    }
    disks.sort();
    disks.dedup();
    let mut roots = None;
    for d in disks {
        if !rootloc::symbolic_outside_disk(f, &BigRational::from_integer(d.clone())).unwrap() {
            continue;
        }
        s.disk_certs += 1;
        let roots = roots.get_or_insert_with(|| rootloc::numeric_roots(f, DEFAULT_TOLERANCE));
        let limit = d.to_f64().unwrap() * (1.0 + ROOT_MARGIN);
        match roots {
            Ok(rs) => {
                if let Some(r) = rs.iter().find(|r| r.norm() <= limit) {
                    s.disk_contradictions.push(format!("{f}: root {r} inside |z| <= {d}"));
                }
            }
            Err(e) => s.disk_contradictions.push(format!("{f}: no numeric roots ({e})")),
        }
    }
    s
}

fn exhaustive_sweep() -> Sweep {
    let corpus = ExhaustiveCorpus::new(5, 5).unwrap();
    (0..corpus.raw_len())
        .into_par_iter()
        .filter_map(|i| corpus.get(i))
        .map(|f| sweep_one(&f))
        .reduce(Sweep::default, Sweep::merge)
}

fn first(v: &[String]) -> &str {
    v.first().map_or("", String::as_str)
}

fn exhaustive_soundness(s: &Sweep) -> Verdict {
    verdict(
        s.violations.is_empty() && s.oracle_skipped == 0,
        format!(
            "{} polynomials, {} verdicts, {} violations, {} oracle skips {}",
            s.items,
            s.verdicts,
            s.violations.len(),
            s.oracle_skipped,
            first(&s.violations)
        ),
    )
}

fn p1_family() -> Verdict {
    let config = CriteriaConfig::default();
    let mut bad = Vec::new();
    let grid = corpus::p1_grid();
    for spec in &grid {
        let FamilySpec::P1 { p, m, .. } = *spec else { unreachable!() };
        let f = corpus::gen_family(spec).unwrap();
        let o = Criterion::EisensteinGeneralized.run(&f, &config).unwrap();
        let w = |n: &str| o.witness(n).cloned();
        let ok = o.conclusion == Conclusion::Irreducible
            && w("p") == Some(p.into())
            && w("k") == Some((m - 1).into())
            && w("j") == Some(m.into())
            && (m > 8 || oracle::count_irreducible_factors(&f).unwrap() == 1);
        if !ok {
            bad.push(format!("{spec:?}: {:?}", o));
        }
    }
    verdict(
        bad.is_empty() && grid.len() == 90,
        format!("{} instances, {} failures {}", grid.len(), bad.len(), first(&bad)),
    )
}

fn p2_family() -> Verdict {
    let config = CriteriaConfig::default();
    let mut bad = Vec::new();
    let k1 = corpus::p2_grid(1, &[-1, 0, 1]);
    for spec in &k1 {
        let f = corpus::gen_family(spec).unwrap();
        let o = Criterion::ConstantTerm.run(&f, &config).unwrap();
        let ok = o.conclusion == Conclusion::Irreducible
            && o.certificate == CertificateTag::Exact
            && oracle::count_irreducible_factors(&f).unwrap() == 1;
        if !ok {
            bad.push(format!("k=1 {spec:?}: {:?}", o));
        }
    }
    let mut k2_count = 0;
    for spec in corpus::p2_grid(2, &[-1, 0, 1]) {
        let FamilySpec::P2 { p, ref coeffs, .. } = spec else { unreachable!() };
        let j = 1 + coeffs.iter().position(|c| c % p as i64 != 0).unwrap();
        if j < 2 {
            continue;
        }
        k2_count += 1;
        let f = corpus::gen_family(&spec).unwrap();
        let o = Criterion::ConstantTerm.run(&f, &config).unwrap();
        let count = oracle::count_irreducible_factors(&f).unwrap();
        let ok = o.conclusion == Conclusion::AtMostFactors(2)
            && o.witness("p") == Some(&p.into())
            && o.certificate == CertificateTag::Exact
            && count <= 2;
        if !ok {
            bad.push(format!("k=2 {spec:?}: {:?}, oracle {count}", o));
        }
    }
    verdict(
        bad.is_empty() && !k1.is_empty() && k2_count > 0,
        format!(
            "{} k=1 instances, {} k=2 instances with j >= 2, {} failures {}",
            k1.len(),
            k2_count,
            bad.len(),
            first(&bad)
        ),
    )
}

fn p4_family() -> Verdict {
    let mut bad = Vec::new();
    let mut n = 0;
    for a in [3u64, 4, 5] {
        for b in [1, a - 2] {
            if b >= a - b {
                continue;
            }
            for m in 3..=5usize {
                for j in 1..m {
                    let (ar, br) = (
                        BigRational::from_integer(a.into()),
                        BigRational::from_integer(b.into()),
                    );
                    let aj = num_traits::pow(ar.clone(), j);
                    let bj = num_traits::pow(br.clone(), j);
                    let lhs = &aj - &bj + BigRational::one();
                    let rhs = &br * (&aj - &bj) / (&ar - &br)
                        + BigRational::one() / num_traits::pow(br.clone(), m - 1 - j);
                    if lhs <= rhs {
                        bad.push(format!("a={a} b={b} m={m} j={j}: displayed inequality fails"));
                    }
                }
            }
        }
    }
    let want = |m: usize, j: usize| {
        if m - j == 1 {
            Conclusion::Irreducible
        } else {
            Conclusion::AtMostFactors(m - j)
        }
    };
    for spec in corpus::p4_grid() {
        let FamilySpec::P4 { m, j, .. } = spec else { unreachable!() };
        n += 1;
        let f = corpus::gen_family(&spec).unwrap();
        let o = criteria::dominant_coefficient(&f).unwrap();
        let fact = oracle::factor(&f).unwrap();
        if o.conclusion != want(m, j) || !consistent(o.conclusion, &fact) {
            bad.push(format!("{spec:?}: {} vs {fact}", o.conclusion));
        }
    }
    verdict(
        bad.is_empty() && n > 0,
        format!("{n} instances, {} failures {}", bad.len(), first(&bad)),
    )
}

/// A random polynomial of degree `m` whose `a_{m-1}` is inflated past the
/// non-monic Perron bound.
fn perron_instance(rng: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let m = rng.gen_range(2..=6usize);
        let mut c: Vec<i64> = (0..=m).map(|_| rng.gen_range(-3..=3)).collect();
        if c[0] == 0 {
            c[0] = 1;
        }
        c[m] = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let am = c[m].abs();
        let sum: i64 = (0..m - 1).map(|i| c[i].abs() * am.pow((m - 1 - i) as u32)).sum();
        let top = 1 + sum + rng.gen_range(1..=5);
        c[m - 1] = if rng.gen_bool(0.5) { top } else { -top };
        let f = Polynomial::from_i64s(&c);
        if f.is_primitive() {
            return f;
        }
    }
}

fn perron_regression() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b);
    let mut bad = Vec::new();
    for _ in 0..200 {
        let f = perron_instance(&mut rng);
        let o = criteria::perron_nonmonic(&f).unwrap();
        let count = oracle::count_irreducible_factors(&f).unwrap();
        if o.conclusion != Conclusion::Irreducible || count != 1 {
            bad.push(format!("{f}: {} with oracle count {count}", o.conclusion));
        }
    }
    verdict(bad.is_empty(), format!("200 instances, {} failures {}", bad.len(), first(&bad)))
}

fn dominant_subsumption(s: &Sweep) -> Verdict {
    verdict(
        s.monic_scale_misses.is_empty() && s.cor2_unsound.is_empty() && s.monic_scale_instances > 0,
        format!(
            "{} monic-scale instances, {} not subsumed; {} cor2 conclusions, {} unsound {}{}",
            s.monic_scale_instances,
            s.monic_scale_misses.len(),
            s.cor2_fired,
            s.cor2_unsound.len(),
            first(&s.monic_scale_misses),
            first(&s.cor2_unsound)
        ),
    )
}

fn root_cross_validation(s: &Sweep) -> Verdict {
    verdict(
        s.disk_contradictions.is_empty() && s.disk_certs > 0,
        format!(
            "{} symbolic disk certificates, {} contradictions at margin {ROOT_MARGIN:e} {}",
            s.disk_certs,
            s.disk_contradictions.len(),
            first(&s.disk_contradictions)
        ),
    )
}

fn oracle_self_consistency() -> Verdict {
    let fs = corpus::gen_random(500, 4, 5, 8001).unwrap();
    let gs = corpus::gen_random(500, 4, 5, 8002).unwrap();
    let bad: Vec<String> = fs
        .par_iter()
        .zip(&gs)
        .filter_map(|(f, g)| {
            let h = f * g;
            let counted = oracle::factor(&h).and_then(|fh| {
                let cf = oracle::count_irreducible_factors(f)?;
                let cg = oracle::count_irreducible_factors(g)?;
                Ok((fh, cf + cg))
            });
            match counted {
                Ok((fh, sum)) if oracle::verify(&fh, &h) && fh.count() == sum => None,
                Ok((fh, sum)) => Some(format!("({f})·({g}) = {fh}, expected {sum} factors")),
                Err(e) => Some(format!("({f})·({g}): {e}")),
            }
        })
        .collect();
    verdict(
        bad.is_empty(),
        format!("500 pairs, {} failures {}", bad.len(), first(&bad)),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let sweep = exhaustive_sweep();
    let sweep_time = start.elapsed();
    let results: Vec<(&str, Verdict)> = vec![
        ("exhaustive soundness (degree <= 5, |a_i| <= 5)", exhaustive_soundness(&sweep)),
        ("P1 family: generalized Eisenstein", p1_family()),
        ("P2 family: constant-term criterion", p2_family()),
        ("P4 family: dominant coefficient", p4_family()),
        ("non-monic Perron regression", perron_regression()),
        ("dominant-coefficient subsumption and cor2 soundness", dominant_subsumption(&sweep)),
        ("root-location cross-validation", root_cross_validation(&sweep)),
        ("oracle self-consistency", oracle_self_consistency()),
    ];
    let mut failed = 0;
    for (i, (name, v)) in results.iter().enumerate() {
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!("acceptance {}: {tag}  {name}: {}", i + 1, v.detail.trim_end());
        failed += usize::from(!v.passed);
    }
    println!(
        "exhaustive sweep {:.1?}, total {:.1?}",
        sweep_time,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
