use num_traits::Zero;
use serde::Serialize;

use super::report::{Status, REPORT_VERSION};
use super::solver::Solver;
use crate::boolfn::{
    block_sensitivity_at_point, decision_tree_complexity, BooleanFunction, Family, FamilyParams,
};
use crate::cube;
use crate::degrees::{deg, hypercube_nullstellensatz, partial_degree, rdeg_from_witnesses};
use crate::error::Result;
use crate::poly::{int, MultilinearPoly};
use crate::symmetry::counterexample_symmetrization;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySummary {
    pub spec_version: u32,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<FamilyCheck>,
}

impl FamilySummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn total(f: Family, p: FamilyParams) -> Result<BooleanFunction> {
    f.build(p)?.into_total()
}

/// The linear constraints of the `2n`-variable counterexample:
/// `g1 = Σ x_i` and `g2 = Σ x_i + Σ y_i - (n+1)`.
pub fn counterexample_constraints(n: usize) -> Result<(MultilinearPoly, MultilinearPoly)> {
    let mut g1 = MultilinearPoly::zero(2 * n);
    for i in 0..n {
        g1 = g1.add(&MultilinearPoly::var(2 * n, i)?)?;
    }
    let mut g2 = MultilinearPoly::constant(2 * n, -int((n + 1) as i64));
    for i in 0..2 * n {
        g2 = g2.add(&MultilinearPoly::var(2 * n, i)?)?;
    }
    Ok((g1, g2))
}

/// Named point values for the families, the counterexample pipeline and
/// certificates for every nonconstant 3-bit function.
pub fn verify_families() -> Result<FamilySummary> {
    let solver = Solver::new();
    let mut checks = Vec::new();
    let mut check = |name: String, ok: bool, detail: String| {
        checks.push(FamilyCheck {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        });
    };
    let rdeg_of = |f: &BooleanFunction| {
        rdeg_from_witnesses(f, solver.ndeg(f), solver.ndeg(&f.negate())).degree
    };

    for n in 1..=4 {
        let f = total(Family::And, FamilyParams::n(n))?;
        let nd = solver.ndeg(&f).degree;
        check(format!("ndeg_and_{n}"), nd == n, format!("ndeg(AND_{n}) = {nd}"));
        let rd = rdeg_of(&f);
        check(format!("rdeg_and_{n}"), rd == n, format!("rdeg(AND_{n}) = {rd}"));
    }
    for n in [2, 4] {
        let f = total(Family::Parity, FamilyParams::n(n))?;
        let nd = solver.ndeg(&f).degree;
        let rd = rdeg_of(&f);
        check(
            format!("parity_{n}_ndeg_rdeg"),
            2 * nd >= n && 2 * rd == n,
            format!("ndeg = {nd} >= n/2, rdeg = {rd} = n/2"),
        );
    }
    for n in 1..=4 {
        let f = total(Family::Parity, FamilyParams::n(n))?;
        let sd = solver.sdeg(&f).degree;
        check(format!("sdeg_parity_{n}"), sd == n, format!("sdeg(PARITY_{n}) = {sd}"));
    }
    for n in [3, 5] {
        let f = total(Family::Majority, FamilyParams::n(n))?;
        let sd = solver.sdeg(&f).degree;
        let nd = solver.ndeg(&f).degree;
        let nn = solver.ndeg(&f.negate()).degree;
        check(
            format!("maj_{n}"),
            sd == 1 && 2 * nd.min(nn) >= n,
            format!("sdeg = {sd}, min(ndeg = {nd}, ndeg_neg = {nn}) >= n/2"),
        );
    }
    {
        let f = total(Family::Equator, FamilyParams::n(4))?;
        let sd = solver.sdeg(&f).degree;
        let (x, _) = cube::parse("1100")?;
        let bs = block_sensitivity_at_point(&f, x).size();
        check(
            "equator_4".into(),
            sd <= 2 && bs >= 4,
            format!("sdeg = {sd} <= 2, bs at 1100 = {bs} >= 4"),
        );
    }
    {
        let f = total(Family::Parity, FamilyParams::n(2))?;
        let d = decision_tree_complexity(&f);
        let rd = rdeg_of(&f);
        check(
            "parity_2_tight".into(),
            d == 2 && d == 2 * rd.pow(4),
            format!("D = {d}, 2 rdeg^4 = {}", 2 * rd.pow(4)),
        );
    }
    {
        let f = total(Family::AndOr, FamilyParams::m(2))?;
        let rd = rdeg_of(&f);
        let dg = deg(&f).degree;
        check(
            "andor_2".into(),
            rd == 2 && dg == 4,
            format!("rdeg = {rd}, deg = {dg}"),
        );
    }
    {
        let f = total(Family::And, FamilyParams::n(2))?;
        let g1 = solver.ndeg(&f).polynomial;
        let g2 = solver.ndeg(&f.negate()).polynomial;
        let c = hypercube_nullstellensatz(&g1, &g2)?;
        check(
            "nullstellensatz_and_2".into(),
            c.verified && c.within_bound,
            format!(
                "max(deg h1g1, deg h2g2) = {} <= {}",
                c.deg_h1g1.max(c.deg_h2g2),
                c.degree_bound
            ),
        );
    }
    for n in [2, 3] {
        let (g1, g2) = counterexample_constraints(n)?;
        let v1 = g1.values();
        let v2 = g2.values();
        let common = cube::points(2 * n).find(|&x| v1[x as usize].is_zero() && v2[x as usize].is_zero());
        check(
            format!("counterexample_{n}_constraints"),
            g1.degree() == 1 && g2.degree() == 1 && common.is_none(),
            format!(
                "deg g1 = {}, deg g2 = {}, common zero: {}",
                g1.degree(),
                g2.degree(),
                common.map_or("none".into(), |x| cube::format(x, 2 * n))
            ),
        );
        let pf = Family::Counterexample.build(FamilyParams::n(n))?.into_partial();
        let pd = partial_degree(&pf);
        check(
            format!("counterexample_{n}_degree"),
            pd.degree >= n,
            format!("partial degree = {} >= {n}", pd.degree),
        );
        let sym = counterexample_symmetrization(n, &pd.interpolant)?;
        check(
            format!("counterexample_{n}_symmetrization"),
            sym.passed(),
            format!(
                "P(s,t) = {}; P(0,t) = 0: {}; P(s,n+1-s) = 1: {}",
                sym.polynomial, sym.zero_side, sym.one_side
            ),
        );
    }
    {
        let mut bad = Vec::new();
        let mut count = 0;
        for idx in 1..255u64 {
            let f = BooleanFunction::from_index(3, idx)?;
            let g1 = solver.ndeg(&f).polynomial;
            let g2 = solver.ndeg(&f.negate()).polynomial;
            let c = hypercube_nullstellensatz(&g1, &g2)?;
            count += 1;
            if !(c.verified && c.within_bound) {
                bad.push(f.table_string());
            }
        }
        check(
            "nullstellensatz_all_3".into(),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{count} certificates verified within bound")
            } else {
                format!("failed for {}", bad.join(", "))
            },
        );
    }

    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    Ok(FamilySummary {
        spec_version: REPORT_VERSION,
        passed: checks.len() - failed,
        failed,
        checks,
    })
}
