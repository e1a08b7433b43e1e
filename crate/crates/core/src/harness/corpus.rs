use std::collections::BTreeMap;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::report::{
    quartic_ratio, rational_string, sha256_hex, verify_with, Status, CHECK_NAMES, REPORT_VERSION,
};
use super::solver::Solver;
use crate::boolfn::{BooleanFunction, Family, FamilyParams};
use crate::error::{Error, Result};
use crate::limits::check_cap;
use crate::poly::Rational;

/// Largest arity for exhaustive enumeration.
pub const MAX_EXHAUSTIVE_N: usize = 4;

/// Which functions a corpus run covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    /// All `2^(2^n)` truth tables, in index order.
    Exhaustive { n: usize },
    /// `count` tables drawn from a ChaCha8 stream seeded with `seed`.
    Sampled { n: usize, count: usize, seed: u64 },
    /// Named total family members.
    Families(Vec<(Family, FamilyParams)>),
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CorpusSpec::Exhaustive { n } => {
                if n > MAX_EXHAUSTIVE_N {
                    return Err(Error::InvalidArgument(format!(
                        "exhaustive mode allows n <= {MAX_EXHAUSTIVE_N}, got {n}"
                    )));
                }
                check_cap(n)
            }
            CorpusSpec::Sampled { n, count, .. } => {
                if count == 0 {
                    return Err(Error::InvalidArgument("sample count must be positive".into()));
                }
                check_cap(n)
            }
            CorpusSpec::Families(ref list) => {
                if list.is_empty() {
                    return Err(Error::InvalidArgument("empty family list".into()));
                }
                Ok(())
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CorpusSpec::Exhaustive { n } => format!("exhaustive n={n}"),
            CorpusSpec::Sampled { n, count, seed } => {
                format!("sampled n={n} count={count} seed={seed}")
            }
            CorpusSpec::Families(list) => {
                let names: Vec<String> = list
                    .iter()
                    .map(|(f, p)| family_label(*f, p))
                    .collect();
                format!("families {}", names.join(","))
            }
        }
    }

    /// The functions of the corpus with optional names, in a fixed order.
    pub fn functions(&self) -> Result<Vec<(Option<String>, BooleanFunction)>> {
        self.validate()?;
        match *self {
            CorpusSpec::Exhaustive { n } => (0..1u64 << (1u64 << n))
                .map(|i| Ok((None, BooleanFunction::from_index(n, i)?)))
                .collect(),
            CorpusSpec::Sampled { n, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let size = 1usize << n;
                let mut bytes = vec![0u8; size.div_ceil(8)];
                (0..count)
                    .map(|_| {
                        rng.fill_bytes(&mut bytes);
                        let table = (0..size).map(|k| bytes[k / 8] >> (k % 8) & 1 == 1).collect();
                        Ok((None, BooleanFunction::new(n, table)?))
                    })
                    .collect()
            }
            CorpusSpec::Families(ref list) => list
                .iter()
                .map(|(f, p)| Ok((Some(family_label(*f, p)), f.build(*p)?.into_total()?)))
                .collect(),
        }
    }
}

fn family_label(f: Family, p: &FamilyParams) -> String {
    match (p.n, p.m) {
        (Some(n), _) => format!("{f}(n={n})"),
        (None, Some(m)) => format!("{f}(m={m})"),
        (None, None) => f.to_string(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub function: String,
    pub table: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub spec_version: u32,
    pub corpus: String,
    pub functions: usize,
    pub constant_functions: usize,
    pub passed_functions: usize,
    pub failed_functions: usize,
    pub checks: BTreeMap<String, CheckTally>,
    pub skipped_checks: usize,
    /// Largest `D(f) / rdeg(f)^4` seen (observation only).
    pub max_d_over_rdeg4: Option<String>,
    pub max_ratio_table: Option<String>,
    /// Digest of all truth tables in corpus order.
    pub corpus_digest: String,
    pub failures: Vec<FailureRecord>,
}

impl CorpusSummary {
    pub fn passed(&self) -> bool {
        self.failed_functions == 0
    }
}

struct Outcome {
    table: String,
    function: String,
    constant: bool,
    statuses: Vec<Status>,
    failures: Vec<(String, String)>,
    ratio: Option<Rational>,
}

/// Runs [`verify_with`] over the corpus with a shared solver cache. The
/// map runs in parallel; the reduction walks results in corpus order, so
/// the summary does not depend on scheduling.
pub fn verify_corpus(spec: &CorpusSpec) -> Result<CorpusSummary> {
    let functions = spec.functions()?;
    let solver = Solver::new();
    let outcomes: Vec<Outcome> = functions
        .par_iter()
        .map(|(label, f)| {
            let r = verify_with(f, label.as_deref(), &solver)?;
            Ok(Outcome {
                statuses: CHECK_NAMES.iter().map(|c| r.checks[*c].status).collect(),
                failures: r
                    .failures()
                    .map(|(c, v)| (c.to_string(), v.detail.clone()))
                    .collect(),
                ratio: quartic_ratio(&r),
                constant: f.is_constant(),
                table: r.table,
                function: r.function,
            })
        })
        .collect::<Result<_>>()?;

    let mut checks: BTreeMap<String, CheckTally> = CHECK_NAMES
        .iter()
        .map(|c| (c.to_string(), CheckTally::default()))
        .collect();
    let mut failures = Vec::new();
    let mut failed_functions = 0;
    let mut best: Option<(Rational, String)> = None;
    let mut all_tables = String::new();
    for o in &outcomes {
        for (name, st) in CHECK_NAMES.iter().zip(&o.statuses) {
            let t = checks.get_mut(*name).expect("known check");
            match st {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skipped => t.skipped += 1,
            }
        }
        if !o.failures.is_empty() {
            failed_functions += 1;
        }
        for (check, detail) in &o.failures {
            failures.push(FailureRecord {
                function: o.function.clone(),
                table: o.table.clone(),
                check: check.clone(),
                detail: detail.clone(),
            });
        }
        if let Some(r) = &o.ratio {
            if best.as_ref().is_none_or(|(b, _)| r > b) {
                best = Some((r.clone(), o.table.clone()));
            }
        }
        all_tables.push_str(&o.table);
        all_tables.push('\n');
    }
    let skipped_checks = checks.values().map(|t| t.skipped).sum();
    Ok(CorpusSummary {
        spec_version: REPORT_VERSION,
        corpus: spec.describe(),
        functions: outcomes.len(),
        constant_functions: outcomes.iter().filter(|o| o.constant).count(),
        passed_functions: outcomes.len() - failed_functions,
        failed_functions,
        checks,
        skipped_checks,
        max_d_over_rdeg4: best.as_ref().map(|(r, _)| rational_string(r)),
        max_ratio_table: best.map(|(_, t)| t),
        corpus_digest: sha256_hex(&all_tables),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::report::NONCONSTANT_ONLY;

    #[test]
    fn exhaustive_n2() {
        let s = verify_corpus(&CorpusSpec::Exhaustive { n: 2 }).unwrap();
        assert_eq!(s.functions, 16);
        assert!(s.passed(), "{:?}", s.failures);
        assert_eq!(s.constant_functions, 2);
        assert_eq!(s.skipped_checks, 2 * NONCONSTANT_ONLY.len());
        // Two-bit parity: D = 2, rdeg = 1.
        assert_eq!(s.max_d_over_rdeg4.as_deref(), Some("2/1"));
    }

    #[test]
    fn sampling_is_seeded() {
        let spec = CorpusSpec::Sampled { n: 3, count: 5, seed: 7 };
        let a = spec.functions().unwrap();
        let b = spec.functions().unwrap();
        assert_eq!(a, b);
        let other = CorpusSpec::Sampled { n: 3, count: 5, seed: 8 }.functions().unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn invalid_specs() {
        assert!(CorpusSpec::Exhaustive { n: 5 }.validate().is_err());
        assert!(CorpusSpec::Sampled { n: 3, count: 0, seed: 1 }.validate().is_err());
        assert!(CorpusSpec::Families(vec![]).validate().is_err());
    }

    #[test]
    fn family_corpus() {
        let spec = CorpusSpec::Families(vec![
            (Family::Parity, FamilyParams::n(2)),
            (Family::AndOr, FamilyParams::m(2)),
        ]);
        let s = verify_corpus(&spec).unwrap();
        assert_eq!(s.functions, 2);
        assert!(s.passed());
        assert_eq!(s.corpus, "families parity(n=2),andor(m=2)");
    }
}
