use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::solver::Solver;
use crate::boolfn::{
    block_sensitivity_at_point, decision_tree_complexity, influence, BooleanFunction,
};
use crate::cube;
use crate::degrees::{deg, rdeg_from_witnesses, RationalRepresentation};
use crate::dtree::{build_tree_with, hitting_set, Side, TreeBuild, TreeVerdict};
use crate::error::Result;
use crate::limits::check_cap;
use crate::poly::{pow2_neg, Rational};
use crate::symmetry::nonzero_probability;

pub const REPORT_VERSION: u32 = 1;

/// Every check name, in report order.
pub const CHECK_NAMES: [&str; 14] = [
    "cor_final",
    "cor_final_ndeg",
    "cor_hitset_upper_combined",
    "eq_inf_bounds",
    "eq_infi_bound",
    "fact_rdeg_deg",
    "fact_rdeg_ndeg",
    "fact_sdeg_rdeg",
    "lem_hitset_upper",
    "lem_sdeg_lower",
    "thm_d_upper_progress",
    "thm_ns94",
    "tree_valid",
    "witness_validity",
];

/// Checks that only make sense for nonconstant functions; constants get
/// `skipped`.
pub const NONCONSTANT_ONLY: [&str; 6] = [
    "cor_hitset_upper_combined",
    "eq_inf_bounds",
    "eq_infi_bound",
    "lem_hitset_upper",
    "lem_sdeg_lower",
    "thm_ns94",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    fn test(ok: bool, detail: String) -> Self {
        Verdict {
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn skipped(reason: &str) -> Self {
        Verdict {
            status: Status::Skipped,
            detail: reason.into(),
        }
    }
}

/// All measures of one function, their witnesses' digests and the verdict
/// of every check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasureReport {
    pub spec_version: u32,
    pub function: String,
    pub table: String,
    pub n: usize,
    pub deg: usize,
    pub ndeg: usize,
    pub ndeg_neg: usize,
    pub rdeg: usize,
    pub sdeg: usize,
    #[serde(rename = "D_oracle")]
    pub d_oracle: usize,
    pub tree_depth: usize,
    pub tree_iterations: usize,
    pub min_bs: usize,
    pub min_bs_0: Option<usize>,
    pub min_bs_1: Option<usize>,
    pub influence_total: String,
    pub checks: BTreeMap<String, Verdict>,
    pub witness_digests: BTreeMap<String, String>,
}

impl MeasureReport {
    pub fn failures(&self) -> impl Iterator<Item = (&str, &Verdict)> {
        self.checks
            .iter()
            .filter(|(_, v)| v.status == Status::Fail)
            .map(|(k, v)| (k.as_str(), v))
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// `"num/den"`, also for integers.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Identity used when no name is given: a digest of the table.
pub fn table_identity(f: &BooleanFunction) -> String {
    format!("table:{}", &sha256_hex(&format!("{f}"))[..16])
}

pub fn verify_function(f: &BooleanFunction) -> Result<MeasureReport> {
    verify_with(f, None, &Solver::new())
}

/// Computes every measure of `f` and evaluates every check. `label` names
/// the function in the report; the solver cache may be shared.
pub fn verify_with(f: &BooleanFunction, label: Option<&str>, solver: &Solver) -> Result<MeasureReport> {
    let n = f.arity();
    check_cap(n)?;
    let negation = f.negate();
    let p = solver.ndeg(f);
    let q = solver.ndeg(&negation);
    let s = solver.sdeg(f);
    let exact = deg(f);
    let r = rdeg_from_witnesses(f, p.clone(), q.clone());
    let d_oracle = decision_tree_complexity(f);
    let tb: TreeBuild = build_tree_with(f, &p.polynomial, &q.polynomial)?;
    let packings: Vec<_> = cube::points(n).map(|x| block_sensitivity_at_point(f, x)).collect();
    let level_min = |b: bool| {
        packings
            .iter()
            .filter(|pk| f.value(pk.base) == b)
            .map(|pk| pk.size())
            .min()
    };
    let (min_bs_0, min_bs_1) = (level_min(false), level_min(true));
    let min_bs = packings.iter().map(|pk| pk.size()).min().unwrap_or(0);
    let influences: Vec<Rational> = (0..n).map(|i| influence(f, i)).collect::<Result<_>>()?;
    let inf_total: Rational = influences.iter().sum();
    let relevant = f.relevant_variables();

    let (dg, nd, nn, rd, sd) = (exact.degree, p.degree, q.degree, r.degree, s.degree);
    let depth = tb.depth;
    let mut checks = BTreeMap::new();
    let mut put = |name: &str, v: Verdict| {
        checks.insert(name.to_string(), v);
    };

    put(
        "fact_sdeg_rdeg",
        Verdict::test(sd <= 2 * rd, format!("sdeg={sd} <= 2*rdeg={}", 2 * rd)),
    );
    put(
        "fact_rdeg_deg",
        Verdict::test(rd <= dg, format!("rdeg={rd} <= deg={dg}")),
    );
    let complement_ok = r
        .representation
        .complement_numerator()
        .map(|c| {
            RationalRepresentation {
                numerator: c,
                denominator: r.representation.denominator.clone(),
            }
            .is_valid_for(&negation)
        })
        .unwrap_or(false);
    let rep_ok = r.representation.is_valid_for(f) && r.representation.degree() <= rd;
    put(
        "fact_rdeg_ndeg",
        Verdict::test(
            rd == nd.max(nn) && rep_ok && complement_ok,
            format!(
                "rdeg={rd}, max(ndeg={nd}, ndeg_neg={nn}); representation valid={rep_ok}; (q-p)/q represents not-f={complement_ok}"
            ),
        ),
    );

    let mut invalid = Vec::new();
    if !p.is_valid_for(f) {
        invalid.push("ndeg");
    }
    if !q.is_valid_for(&negation) {
        invalid.push("ndeg_neg");
    }
    if !s.is_valid_for(f) {
        invalid.push("sdeg");
    }
    let interpolates = exact
        .polynomial
        .values()
        .iter()
        .zip(f.table())
        .all(|(v, &b)| *v == Rational::from_integer((b as i64).into()));
    if !interpolates {
        invalid.push("deg");
    }
    if !rep_ok {
        invalid.push("rdeg");
    }
    if !packings.iter().all(|pk| pk.is_valid_for(f)) {
        invalid.push("block_packing");
    }
    put(
        "witness_validity",
        Verdict::test(
            invalid.is_empty(),
            if invalid.is_empty() {
                "all witnesses re-validated".into()
            } else {
                format!("invalid: {}", invalid.join(", "))
            },
        ),
    );

    let verdict = tb.tree.verify(f);
    put(
        "tree_valid",
        Verdict::test(
            verdict == TreeVerdict::Pass && tb.tree.depth() == depth,
            format!("{verdict:?}, depth={depth}"),
        ),
    );

    let b4 = 4 * sd * sd * rd * rd;
    let b16 = 16 * rd.pow(4);
    put(
        "cor_final",
        Verdict::test(
            dg <= d_oracle && d_oracle <= depth && depth <= b4 && b4 <= b16,
            format!("deg={dg} <= D={d_oracle} <= depth={depth} <= 4 sdeg^2 rdeg^2={b4} <= 16 rdeg^4={b16}"),
        ),
    );
    let bn = 2 * nd * nd * nn * nn;
    put(
        "cor_final_ndeg",
        Verdict::test(
            d_oracle <= depth && depth <= bn,
            format!("D={d_oracle} <= depth={depth} <= 2 ndeg^2 ndeg_neg^2={bn}"),
        ),
    );
    put(
        "thm_d_upper_progress",
        Verdict::test(
            tb.progress_ok && tb.max_iterations <= nd + nn && nd + nn <= 2 * rd,
            format!(
                "degree dropped on every query={}; iterations={} <= deg p + deg q={} <= 2 rdeg={}",
                tb.progress_ok,
                tb.max_iterations,
                nd + nn,
                2 * rd
            ),
        ),
    );

    if f.is_constant() {
        for name in NONCONSTANT_ONLY {
            put(name, Verdict::skipped("constant function"));
        }
    } else {
        put(
            "lem_sdeg_lower",
            Verdict::test(
                min_bs <= 2 * sd * sd,
                format!("min bs={min_bs} <= 2 sdeg^2={}", 2 * sd * sd),
            ),
        );

        let hp = hitting_set(&p.polynomial, Side::P)?;
        let hq = hitting_set(&q.polynomial, Side::Q)?;
        let (b0, b1) = (min_bs_0.unwrap_or(0), min_bs_1.unwrap_or(0));
        put(
            "lem_hitset_upper",
            Verdict::test(
                hp.size() <= nd * b0 && hq.size() <= nn * b1,
                format!(
                    "|H_p|={} <= ndeg*min bs_0={}; |H_q|={} <= ndeg_neg*min bs_1={}",
                    hp.size(),
                    nd * b0,
                    hq.size(),
                    nn * b1
                ),
            ),
        );

        let mut bad = Vec::new();
        for e in &tb.trace {
            let si = solver.sdeg(&e.function).degree;
            let bound_p = 2 * e.deg_p * si * si;
            let bound_q = 2 * e.deg_q * si * si;
            if e.p_set_size > bound_p && e.q_set_size > bound_q {
                bad.push(format!(
                    "iteration {} [{}]: |H_p|={} > {bound_p}, |H_q|={} > {bound_q}",
                    e.iteration, e.path, e.p_set_size, e.q_set_size
                ));
            }
        }
        put(
            "cor_hitset_upper_combined",
            Verdict::test(
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{} iterations within bound", tb.trace.len())
                } else {
                    bad.join("; ")
                },
            ),
        );

        let pr_p = nonzero_probability(&p.polynomial);
        let pr_q = nonzero_probability(&q.polynomial);
        put(
            "thm_ns94",
            Verdict::test(
                pr_p >= pow2_neg(nd) && pr_q >= pow2_neg(nn),
                format!(
                    "Pr[p!=0]={} >= 2^-{nd}; Pr[q!=0]={} >= 2^-{nn}",
                    rational_string(&pr_p),
                    rational_string(&pr_q)
                ),
            ),
        );

        let k = relevant.len();
        let floor = pow2_neg(2 * rd);
        let lower = Rational::from_integer((k as i64).into()) * &floor;
        let upper = Rational::from_integer((dg as i64).into());
        put(
            "eq_inf_bounds",
            Verdict::test(
                lower <= inf_total && inf_total <= upper,
                format!(
                    "{k} relevant vars: {} <= Inf={} <= deg={dg}",
                    rational_string(&lower),
                    rational_string(&inf_total)
                ),
            ),
        );

        let low: Vec<String> = relevant
            .iter()
            .filter(|&&i| influences[i] < floor)
            .map(|&i| format!("Inf_{}={}", i + 1, rational_string(&influences[i])))
            .collect();
        put(
            "eq_infi_bound",
            Verdict::test(
                low.is_empty(),
                if low.is_empty() {
                    format!("every relevant Inf_i >= {}", rational_string(&floor))
                } else {
                    format!("below {}: {}", rational_string(&floor), low.join(", "))
                },
            ),
        );
    }
    debug_assert_eq!(checks.len(), CHECK_NAMES.len());

    let mut digests = BTreeMap::new();
    digests.insert("deg".into(), sha256_hex(&exact.polynomial.to_string()));
    digests.insert("ndeg".into(), sha256_hex(&p.polynomial.to_string()));
    digests.insert("ndeg_neg".into(), sha256_hex(&q.polynomial.to_string()));
    digests.insert("sdeg".into(), sha256_hex(&s.polynomial.to_string()));
    digests.insert(
        "rdeg".into(),
        sha256_hex(&format!(
            "({}) / ({})",
            r.representation.numerator, r.representation.denominator
        )),
    );
    digests.insert("tree".into(), sha256_hex(&tb.tree.to_string()));

    Ok(MeasureReport {
        spec_version: REPORT_VERSION,
        function: label.map(str::to_string).unwrap_or_else(|| table_identity(f)),
        table: f.table_string(),
        n,
        deg: dg,
        ndeg: nd,
        ndeg_neg: nn,
        rdeg: rd,
        sdeg: sd,
        d_oracle,
        tree_depth: depth,
        tree_iterations: tb.max_iterations,
        min_bs,
        min_bs_0,
        min_bs_1,
        influence_total: rational_string(&inf_total),
        checks,
        witness_digests: digests,
    })
}

/// `D(f) / rdeg(f)^4`, or `None` for constants.
pub fn quartic_ratio(report: &MeasureReport) -> Option<Rational> {
    (report.rdeg > 0).then(|| {
        Rational::new(
            (report.d_oracle as i64).into(),
            (report.rdeg.pow(4) as i64).into(),
        )
    })
}
