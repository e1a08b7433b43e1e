use serde::Serialize;

use super::hitting::{hitting_set, HittingSet, Side};
use super::tree::DecisionTree;
use crate::boolfn::BooleanFunction;
use crate::cube::Assignment;
use crate::degrees::{is_nondeterministic_rep, ndeg};
use crate::error::{Error, Result};
use crate::poly::MultilinearPoly;

/// One query-making iteration of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    /// 1-based iteration number along the current path.
    pub iteration: usize,
    /// Assignments made before this iteration, e.g. `x1=0 x3=1`.
    pub path: String,
    pub side: Side,
    pub set_size: usize,
    pub p_set_size: usize,
    pub q_set_size: usize,
    pub deg_p: usize,
    pub deg_q: usize,
    /// Queried variables (1-based, original numbering).
    pub queried: Vec<usize>,
    /// The restricted function `f^i` over the unassigned variables.
    #[serde(skip)]
    pub function: BooleanFunction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeBuild {
    pub tree: DecisionTree,
    pub depth: usize,
    /// Preorder over the recursion.
    pub trace: Vec<TraceEntry>,
    /// Largest number of query-making iterations on any root-to-leaf path.
    pub max_iterations: usize,
    /// Every queried set lowered the degree of its source polynomial.
    pub progress_ok: bool,
}

/// Builds a tree for `f` from minimum-degree witnesses for `f` and `¬f`.
pub fn build_tree(f: &BooleanFunction) -> TreeBuild {
    let p = ndeg(f).polynomial;
    let q = ndeg(&f.negate()).polynomial;
    build_tree_with(f, &p, &q).expect("fresh witnesses are valid")
}

/// As [`build_tree`] with the witnesses supplied. `p` must be nonzero exactly
/// on `f⁻¹(1)` and `q` exactly on `f⁻¹(0)`.
///
/// While `f^i` is nonconstant, both restricted witnesses have positive
/// degree: a constant witness would force `f^i` constant. Querying every
/// variable of a hitting set kills all maxonomials, so the queried side
/// loses degree and the loop stops after at most `deg p + deg q` rounds.
pub fn build_tree_with(
    f: &BooleanFunction,
    p: &MultilinearPoly,
    q: &MultilinearPoly,
) -> Result<TreeBuild> {
    if !is_nondeterministic_rep(p, f) {
        return Err(Error::InvalidArgument("p does not represent f".into()));
    }
    if !is_nondeterministic_rep(q, &f.negate()) {
        return Err(Error::InvalidArgument("q does not represent ¬f".into()));
    }
    let mut b = Builder {
        trace: Vec::new(),
        progress_ok: true,
        path: Vec::new(),
    };
    let vars: Vec<usize> = (0..f.arity()).collect();
    let (tree, max_iterations) = b.grow(f, p, q, &vars, 1);
    Ok(TreeBuild {
        depth: tree.depth(),
        tree,
        trace: b.trace,
        max_iterations,
        progress_ok: b.progress_ok,
    })
}

struct Builder {
    trace: Vec<TraceEntry>,
    progress_ok: bool,
    path: Vec<(usize, bool)>,
}

impl Builder {
    /// `vars[j]` is the original index of local variable `j`.
    fn grow(
        &mut self,
        f: &BooleanFunction,
        p: &MultilinearPoly,
        q: &MultilinearPoly,
        vars: &[usize],
        iteration: usize,
    ) -> (DecisionTree, usize) {
        if let Some(b) = f.constant_value() {
            return (DecisionTree::Leaf(b), 0);
        }
        let hp = hitting_set(p, Side::P).expect("witness of a nonconstant function");
        let hq = hitting_set(q, Side::Q).expect("witness of a nonconstant function");
        let chosen: &HittingSet = if hp.size() <= hq.size() { &hp } else { &hq };
        let local = chosen.indices();
        let n = f.arity();
        self.trace.push(TraceEntry {
            iteration,
            path: self
                .path
                .iter()
                .map(|&(v, b)| format!("x{}={}", v + 1, b as u8))
                .collect::<Vec<_>>()
                .join(" "),
            side: chosen.source,
            set_size: chosen.size(),
            p_set_size: hp.size(),
            q_set_size: hq.size(),
            deg_p: p.degree(),
            deg_q: q.degree(),
            queried: local.iter().map(|&j| vars[j] + 1).collect(),
            function: f.clone(),
        });
        let rest: Vec<usize> = (0..n)
            .filter(|j| chosen.variables >> j & 1 == 0)
            .map(|j| vars[j])
            .collect();
        let k = local.len();
        let mut children = Vec::with_capacity(1 << k);
        let mut deepest = 0;
        for a in 0u32..1 << k {
            let pairs: Vec<(usize, bool)> = local
                .iter()
                .enumerate()
                .map(|(t, &j)| (j, a >> t & 1 == 1))
                .collect();
            let asg = Assignment::new(n, &pairs).expect("indices are local");
            let f2 = f.restrict(&asg).expect("same arity");
            let p2 = p.restrict(&asg).expect("same arity");
            let q2 = q.restrict(&asg).expect("same arity");
            let lowered = match chosen.source {
                Side::P => p2.degree() < p.degree(),
                Side::Q => q2.degree() < q.degree(),
            };
            self.progress_ok &= lowered;
            let depth_before = self.path.len();
            self.path.extend(pairs.iter().map(|&(j, b)| (vars[j], b)));
            let (child, iters) = self.grow(&f2, &p2, &q2, &rest, iteration + 1);
            self.path.truncate(depth_before);
            deepest = deepest.max(iters);
            children.push(child);
        }
        let originals: Vec<usize> = local.iter().map(|&j| vars[j]).collect();
        let mut children: Vec<Option<DecisionTree>> = children.into_iter().map(Some).collect();
        (nest(&originals, 0, 0, &mut children), deepest + 1)
    }
}

/// Expands a query of several variables into a chain of single queries;
/// bit `t` of the child index is the value of `vars[t]`.
fn nest(vars: &[usize], t: usize, a: usize, children: &mut [Option<DecisionTree>]) -> DecisionTree {
    if t == vars.len() {
        return children[a].take().expect("each child used once");
    }
    let zero = nest(vars, t + 1, a, children);
    let one = nest(vars, t + 1, a | 1 << t, children);
    DecisionTree::query(vars[t], zero, one)
}
