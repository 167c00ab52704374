//! Brute-force ground truth on small shapes.
//!
//! Nothing here uses Maya diagrams: Bruhat order comes from the sorted-prefix
//! criterion on full permutations or from closing transposition covers, and
//! chain degrees come from an exhaustive multi-objective search over the
//! labeled adjacency graph of `W^P`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::maya::RimHookSpec;
use crate::qdegree::{greedy_min_degree, lower_bound_vector, root_degree, DegreeVector};
use crate::weyl::{bruhat_leq_full, reflection_word, CosetRep, FlagShape, Permutation};

/// Oracle operations refuse shapes with more cosets than this.
pub const ORACLE_LIMIT: u128 = 50_000;

fn guard(shape: &FlagShape) -> Result<()> {
    let count = shape.coset_count();
    if count > ORACLE_LIMIT {
        return Err(Error::SizeLimit { count, limit: ORACLE_LIMIT });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabeledEdge<'a> {
    pub source: &'a CosetRep,
    pub target: &'a CosetRep,
    pub degree: &'a DegreeVector,
}

/// Every coset of a shape, joined by an edge `u -> u s_{e_a - e_b}` for each
/// pair of positions `a < b` in different blocks, labeled with the degree of
/// that transposition.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    shape: FlagShape,
    nodes: Vec<CosetRep>,
    index: HashMap<CosetRep, usize>,
    adj: Vec<Vec<(usize, DegreeVector)>>,
}

impl CosetGraph {
    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    pub fn nodes(&self) -> &[CosetRep] {
        &self.nodes
    }

    pub fn index_of(&self, c: &CosetRep) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = LabeledEdge<'_>> {
        self.adj.iter().enumerate().flat_map(move |(u, out)| {
            out.iter().map(move |(x, d)| LabeledEdge {
                source: &self.nodes[u],
                target: &self.nodes[*x],
                degree: d,
            })
        })
    }

    /// Componentwise-minimal degrees (bounded by `cap`) of chains
    /// `u_0, ..., u_r` with `u_0 <= v` and `w <= u_r`.
    ///
    /// Label-correcting search: each node keeps an antichain of degrees with
    /// which it can be reached from some `u_0 <= v`.
    pub fn pareto_min_degrees(&self, v: &CosetRep, w: &CosetRep, cap: &DegreeVector) -> Result<Vec<DegreeVector>> {
        v.check_same_shape(w)?;
        if v.shape() != &self.shape {
            return Err(Error::ShapeMismatch(v.shape().to_string(), self.shape.to_string()));
        }
        if cap.len() != self.shape.k() {
            return Err(Error::DegreeLength { got: cap.len(), expected: self.shape.k() });
        }
        let zero = DegreeVector::zero(self.shape.k());
        let mut labels: Vec<Vec<DegreeVector>> = vec![Vec::new(); self.nodes.len()];
        let mut queue = VecDeque::new();
        for (u, node) in self.nodes.iter().enumerate() {
            if bruhat_leq_full(node.perm(), v.perm()) {
                labels[u].push(zero.clone());
                queue.push_back((u, zero.clone()));
            }
        }
        while let Some((u, d)) = queue.pop_front() {
            if !labels[u].contains(&d) {
                continue; // superseded
            }
            for (x, e) in &self.adj[u] {
                let nd = &d + e;
                if !nd.leq(cap) || labels[*x].iter().any(|l| l.leq(&nd)) {
                    continue;
                }
                labels[*x].retain(|l| !nd.leq(l));
                labels[*x].push(nd.clone());
                queue.push_back((*x, nd));
            }
        }
        let mut found: Vec<DegreeVector> = Vec::new();
        for (u, node) in self.nodes.iter().enumerate() {
            if bruhat_leq_full(w.perm(), node.perm()) {
                found.extend(labels[u].iter().cloned());
            }
        }
        Ok(minimal_elements(found))
    }
}

/// The antichain of componentwise-minimal elements, sorted and deduplicated.
pub fn minimal_elements(mut items: Vec<DegreeVector>) -> Vec<DegreeVector> {
    items.sort();
    items.dedup();
    let keep: Vec<bool> = items
        .iter()
        .map(|d| !items.iter().any(|o| o != d && o.leq(d)))
        .collect();
    items.into_iter().zip(keep).filter_map(|(d, k)| k.then_some(d)).collect()
}

pub fn adjacency_graph(shape: &FlagShape) -> Result<CosetGraph> {
    guard(shape)?;
    let nodes: Vec<CosetRep> = shape.cosets().collect();
    let index: HashMap<CosetRep, usize> = nodes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let n = shape.n();
    let mut moves = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if shape.block_of(a)? != shape.block_of(b)? {
                moves.push((a, b, root_degree(shape, a, b)?));
            }
        }
    }
    let mut adj = Vec::with_capacity(nodes.len());
    for u in &nodes {
        let mut out = Vec::with_capacity(moves.len());
        for (a, b, d) in &moves {
            let x = u.apply_transposition(*a, *b)?;
            out.push((index[&x], d.clone()));
        }
        adj.push(out);
    }
    Ok(CosetGraph { shape: shape.clone(), nodes, index, adj })
}

/// Convenience wrapper building the graph for a single query.
pub fn pareto_min_degrees(v: &CosetRep, w: &CosetRep, cap: &DegreeVector) -> Result<Vec<DegreeVector>> {
    adjacency_graph(v.shape())?.pareto_min_degrees(v, w, cap)
}

/// Bruhat order on `W^P` as the reflexive-transitive closure of the covers
/// `u -> u s_{e_a - e_b}` that raise the length by exactly one.
#[derive(Clone, Debug)]
pub struct BruhatClosure {
    index: HashMap<CosetRep, usize>,
    // above[u] is a bitset of every x with u <= x
    above: Vec<Vec<u64>>,
}

impl BruhatClosure {
    /// `u <= x`; `None` if either is not a coset of this shape.
    pub fn leq(&self, u: &CosetRep, x: &CosetRep) -> Option<bool> {
        let (i, j) = (*self.index.get(u)?, *self.index.get(x)?);
        Some(self.above[i][j / 64] >> (j % 64) & 1 == 1)
    }
}

pub fn bruhat_closure(shape: &FlagShape) -> Result<BruhatClosure> {
    guard(shape)?;
    let nodes: Vec<CosetRep> = shape.cosets().collect();
    let index: HashMap<CosetRep, usize> = nodes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let n = shape.n();
    let words = nodes.len().div_ceil(64);
    let lengths: Vec<usize> = nodes.iter().map(CosetRep::length).collect();
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(lengths[u]));
    let mut above = vec![vec![0u64; words]; nodes.len()];
    for &u in &order {
        let mut bits = vec![0u64; words];
        bits[u / 64] |= 1 << (u % 64);
        for a in 1..=n {
            for b in a + 1..=n {
                let x = index[&nodes[u].apply_transposition(a, b)?];
                if lengths[x] == lengths[u] + 1 {
                    for (dst, src) in bits.iter_mut().zip(&above[x]) {
                        *dst |= src;
                    }
                }
            }
        }
        above[u] = bits;
    }
    Ok(BruhatClosure { index, above })
}

/// Checks both halves of the rim hook / Hecke correspondence for one step:
/// the reflection word multiplies out to the transposition of positions
/// `(i_{q-1}+1, i_t)`, and its Hecke action carries `prev` to `result`.
pub fn hecke_step_consistent(prev: &CosetRep, spec: RimHookSpec, result: &CosetRep) -> Result<bool> {
    let shape = prev.shape();
    let word = reflection_word(shape, spec.q, spec.t)?;
    let n = shape.n();
    let product = Permutation::from_word(n, &word);
    let transposition = Permutation::transposition(n, shape.bound(spec.q - 1) + 1, shape.bound(spec.t));
    Ok(product == transposition && &prev.hecke_word_action(&word)? == result)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub v: CosetRep,
    pub w: CosetRep,
    pub greedy: Option<DegreeVector>,
    pub pareto: Vec<DegreeVector>,
    pub lower_bound: Option<DegreeVector>,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Pareto search cap is the greedy degree plus this in every component.
    pub cap_margin: u32,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { cap_margin: 1, jobs: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub shape: FlagShape,
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub bruhat_mismatches: usize,
    pub hecke_mismatches: usize,
    pub hecke_steps_checked: usize,
    /// Pairs whose greedy degree is unchanged when `v` and `w` are swapped.
    pub symmetric_pairs: usize,
}

impl VerifyReport {
    pub fn mismatch_count(&self) -> usize {
        self.mismatches.len() + self.bruhat_mismatches + self.hecke_mismatches
    }

    pub fn is_success(&self) -> bool {
        self.mismatch_count() == 0
    }

    fn merge(&mut self, other: VerifyReport) {
        self.pairs_checked += other.pairs_checked;
        self.mismatches.extend(other.mismatches);
        self.bruhat_mismatches += other.bruhat_mismatches;
        self.hecke_mismatches += other.hecke_mismatches;
        self.hecke_steps_checked += other.hecke_steps_checked;
        self.symmetric_pairs += other.symmetric_pairs;
    }

    fn empty(shape: &FlagShape) -> Self {
        VerifyReport {
            shape: shape.clone(),
            pairs_checked: 0,
            mismatches: Vec::new(),
            bruhat_mismatches: 0,
            hecke_mismatches: 0,
            hecke_steps_checked: 0,
            symmetric_pairs: 0,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} pairs, {} mismatches", self.pairs_checked, self.mismatch_count())?;
        writeln!(f, "shape: {}", self.shape)?;
        writeln!(f, "degree mismatches: {}", self.mismatches.len())?;
        writeln!(f, "bruhat mismatches: {}", self.bruhat_mismatches)?;
        writeln!(f, "hecke mismatches: {} of {} steps", self.hecke_mismatches, self.hecke_steps_checked)?;
        writeln!(f, "symmetric pairs: {} of {}", self.symmetric_pairs, self.pairs_checked)?;
        for m in &self.mismatches {
            let show = |d: &Option<DegreeVector>| d.as_ref().map_or("-".to_string(), |d| d.to_string());
            let pareto: Vec<String> = m.pareto.iter().map(|d| format!("({d})")).collect();
            writeln!(
                f,
                "mismatch v={} w={} greedy={} lower={} pareto=[{}]: {}",
                m.v,
                m.w,
                show(&m.greedy),
                show(&m.lower_bound),
                pareto.join(" "),
                m.reason
            )?;
        }
        Ok(())
    }
}

/// Runs every check on every ordered pair `(v, w)` of the shape:
/// greedy degree against the projection lower bound and the exhaustive
/// Pareto search, diagram order against the cover closure, and the Hecke
/// identity on every greedy step.
pub fn verify_space(shape: &FlagShape, options: VerifyOptions) -> Result<VerifyReport> {
    let graph = adjacency_graph(shape)?;
    let closure = bruhat_closure(shape)?;
    let nodes = graph.nodes();
    let mayas: Vec<_> = nodes.iter().map(CosetRep::to_maya).collect();
    let greedy: Vec<Vec<std::result::Result<DegreeVector, Error>>> = nodes
        .iter()
        .map(|v| nodes.iter().map(|w| greedy_min_degree(v, w).map(|(d, _)| d)).collect())
        .collect();

    let check_row = |i: usize| -> VerifyReport {
        let mut report = VerifyReport::empty(shape);
        let v = &nodes[i];
        for (j, w) in nodes.iter().enumerate() {
            report.pairs_checked += 1;
            match (mayas[j].leq(&mayas[i]), closure.leq(w, v)) {
                (Ok(a), Some(b)) if a == b => {}
                _ => report.bruhat_mismatches += 1,
            }
            let mut mismatch = |greedy: Option<DegreeVector>, pareto: Vec<DegreeVector>, lower: Option<DegreeVector>, reason: String| {
                report.mismatches.push(Mismatch { v: v.clone(), w: w.clone(), greedy, pareto, lower_bound: lower, reason });
            };
            let trace = match greedy_min_degree(v, w) {
                Ok((_, trace)) => trace,
                Err(e) => {
                    mismatch(None, Vec::new(), None, format!("greedy failed: {e}"));
                    continue;
                }
            };
            let total = trace.total.clone();
            if let Err(e) = trace.validate() {
                mismatch(Some(total.clone()), Vec::new(), None, format!("invalid trace: {e}"));
            }
            for (prev, step) in trace.nodes().zip(&trace.steps) {
                report.hecke_steps_checked += 1;
                if !matches!(hecke_step_consistent(prev, step.spec, &step.result), Ok(true)) {
                    report.hecke_mismatches += 1;
                }
            }
            let lower = lower_bound_vector(v, w).ok();
            let cap = total.widen(options.cap_margin);
            let pareto = graph.pareto_min_degrees(v, w, &cap).unwrap_or_default();
            if lower.as_ref() != Some(&total) {
                mismatch(Some(total.clone()), pareto.clone(), lower.clone(), "lower bound differs from greedy".into());
            }
            if pareto != [total.clone()] {
                mismatch(Some(total.clone()), pareto, lower, "pareto set is not {greedy}".into());
            }
            if let (Ok(a), Ok(b)) = (&greedy[i][j], &greedy[j][i]) {
                if a == b {
                    report.symmetric_pairs += 1;
                }
            }
        }
        report
    };

    let rows: Vec<VerifyReport> = if options.jobs <= 1 {
        (0..nodes.len()).map(check_row).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| (0..nodes.len()).into_par_iter().map(check_row).collect())
    };
    let mut report = VerifyReport::empty(shape);
    for row in rows {
        report.merge(row);
    }
    Ok(report)
}
