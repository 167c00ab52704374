//! Degree vectors and the greedy rim-hook chain that realizes the minimal
//! quantum degree of `σ^v ⋆ σ_w`.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maya::{MayaDiagram, RimHookSpec};
use crate::weyl::{CosetRep, FlagShape};

/// Exponent vector `(d_1, ..., d_k)` of `q^d = q_1^{d_1} ... q_k^{d_k}`,
/// ordered componentwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn zero(k: usize) -> Self {
        DegreeVector(vec![0; k])
    }

    pub fn from_entries(entries: Vec<u32>) -> Self {
        DegreeVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// Componentwise `self <= other`. Vectors of different length compare false.
    pub fn leq(&self, other: &DegreeVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Adds `margin` to every component.
    pub fn widen(&self, margin: u32) -> DegreeVector {
        DegreeVector(self.0.iter().map(|d| d + margin).collect())
    }

    /// Run-length form used for degrees in the literature, e.g. `(0,2,1,1,0)`
    /// becomes `0^1 2^1 1^2 0^1`.
    pub fn exponent_form(&self) -> String {
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &d in &self.0 {
            match runs.last_mut() {
                Some((v, len)) if *v == d => *len += 1,
                _ => runs.push((d, 1)),
            }
        }
        runs.iter()
            .map(|(v, len)| format!("{v}^{len}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl AddAssign<&DegreeVector> for DegreeVector {
    fn add_assign(&mut self, rhs: &DegreeVector) {
        assert_eq!(self.len(), rhs.len(), "adding degree vectors of different length");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Add<&DegreeVector> for &DegreeVector {
    type Output = DegreeVector;

    fn add(self, rhs: &DegreeVector) -> DegreeVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

/// Degree `0^{q-1} 1^{t-q} 0^{k+1-t}` carried by a `qt`-rim hook.
pub fn step_degree(shape: &FlagShape, spec: RimHookSpec) -> Result<DegreeVector> {
    let RimHookSpec { q, t } = RimHookSpec::new(shape, spec.q, spec.t)?;
    Ok(DegreeVector(
        (1..=shape.k()).map(|j| u32::from(q <= j && j < t)).collect(),
    ))
}

/// Degree of the adjacency given by the transposition of positions `a < b`:
/// `d_j = 1` exactly when `a <= i_j < b`.
pub fn root_degree(shape: &FlagShape, a: usize, b: usize) -> Result<DegreeVector> {
    let n = shape.n();
    for pos in [a, b] {
        if pos == 0 || pos > n {
            return Err(Error::OutOfRange { pos, n });
        }
    }
    if a >= b {
        return Err(Error::InvalidCoset(format!("transposition needs a < b, got ({a},{b})")));
    }
    Ok(DegreeVector(
        shape.dims().iter().map(|&i| u32::from(a <= i && i < b)).collect(),
    ))
}

/// `Σ d_j (i_{j+1} - i_{j-1})`.
pub fn graded_degree(shape: &FlagShape, d: &DegreeVector) -> Result<u64> {
    if d.len() != shape.k() {
        return Err(Error::DegreeLength { got: d.len(), expected: shape.k() });
    }
    let mut total = 0u64;
    for (j, &dj) in d.entries().iter().enumerate() {
        total += u64::from(dj) * shape.qweight(j + 1)? as u64;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub spec: RimHookSpec,
    pub degree: DegreeVector,
    pub result: CosetRep,
}

/// The chain `v = v_0 -> v_1 -> ... -> v_r` produced by the greedy algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTrace {
    pub start: CosetRep,
    pub target: CosetRep,
    pub steps: Vec<ChainStep>,
    pub total: DegreeVector,
}

impl ChainTrace {
    /// Cosets `v_0, ..., v_r`.
    pub fn nodes(&self) -> impl Iterator<Item = &CosetRep> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.result))
    }

    pub fn end(&self) -> &CosetRep {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    /// Checks the chain invariants: degrees add up, every step is a strict
    /// Bruhat increase, and only the final node lies above the target.
    pub fn validate(&self) -> Result<()> {
        let shape = self.start.shape();
        let mut sum = DegreeVector::zero(shape.k());
        let target = self.target.to_maya();
        let nodes: Vec<MayaDiagram> = self.nodes().map(CosetRep::to_maya).collect();
        for (i, step) in self.steps.iter().enumerate() {
            if step.degree != step_degree(shape, step.spec)? {
                return Err(Error::Internal(format!("step {i} has degree {} for hook {}", step.degree, step.spec)));
            }
            sum += &step.degree;
            let (prev, next) = (&nodes[i], &nodes[i + 1]);
            if !prev.leq(next)? || prev == next {
                return Err(Error::Internal(format!("step {i} is not a strict Bruhat increase")));
            }
            if target.leq(prev)? {
                return Err(Error::Internal(format!("node {i} already dominates the target")));
            }
        }
        if sum != self.total {
            return Err(Error::Internal(format!("total {} but steps sum to {sum}", self.total)));
        }
        if !target.leq(nodes.last().expect("chain has a start"))? {
            return Err(Error::Internal("final node does not dominate the target".into()));
        }
        Ok(())
    }
}

/// Minimal degree `d` such that `q^d` occurs in `σ^v ⋆ σ_w`, with the chain
/// of rim hooks that witnesses it.
///
/// Each step applies `R_(v_j, w)`, the rim hook over the longest run of rows
/// of `M^{v_j}` that are Bruhat-incompatible with `M^w`, until
/// `M^{v_r} >= M^w`.
pub fn greedy_min_degree(v: &CosetRep, w: &CosetRep) -> Result<(DegreeVector, ChainTrace)> {
    greedy_min_degree_with(v, w, |_| 0)
}

/// [`greedy_min_degree`] with a caller-chosen tie-break: `choose` gets every
/// longest incompatible run and returns the index of the one to apply.
pub fn greedy_min_degree_with<F>(v: &CosetRep, w: &CosetRep, mut choose: F) -> Result<(DegreeVector, ChainTrace)>
where
    F: FnMut(&[RimHookSpec]) -> usize,
{
    v.check_same_shape(w)?;
    let shape = v.shape();
    let cap = shape.n() * shape.n();
    let target = w.to_maya();
    let mut current = v.to_maya();
    let mut steps = Vec::new();
    let mut total = DegreeVector::zero(shape.k());
    loop {
        let candidates = current.rim_hook_candidates(&target)?;
        if candidates.is_empty() {
            break;
        }
        if steps.len() >= cap {
            return Err(Error::Internal(format!("greedy chain from {v} to {w} exceeded {cap} steps")));
        }
        let pick = choose(&candidates);
        let spec = *candidates
            .get(pick)
            .ok_or_else(|| Error::Internal(format!("tie-break chose {pick} of {}", candidates.len())))?;
        let next = current.rim_hook(spec)?;
        if next == current || !current.leq(&next)? {
            return Err(Error::Internal(format!("rim hook {spec} made no Bruhat progress")));
        }
        let degree = step_degree(shape, spec)?;
        total += &degree;
        steps.push(ChainStep { spec, degree, result: next.to_coset()? });
        current = next;
    }
    let trace = ChainTrace { start: v.clone(), target: w.clone(), steps, total: total.clone() };
    Ok((total, trace))
}

/// Image of `c` under the projection to `Gr(i_j, n)`.
pub fn project(c: &CosetRep, j: usize) -> Result<CosetRep> {
    let shape = c.shape();
    if j == 0 || j > shape.k() {
        return Err(Error::InvalidBlock { index: j, k: shape.k() });
    }
    let gr = FlagShape::grassmannian(shape.bound(j), shape.n())?;
    let mut prefix = c.prefix(j).to_vec();
    prefix.sort_unstable();
    let text: Vec<String> = prefix.iter().map(|v| v.to_string()).collect();
    CosetRep::parse(&gr, &text.join(","))
}

/// `deg_j(v, w)`: number of greedy rim hooks needed in `Gr(i_j, n)` to carry
/// the projection of `v` above the projection of `w`.
pub fn projection_degree(v: &CosetRep, w: &CosetRep, j: usize) -> Result<u32> {
    v.check_same_shape(w)?;
    let (pv, pw) = (project(v, j)?, project(w, j)?);
    let (d, _) = greedy_min_degree(&pv, &pw)?;
    Ok(d.entries()[0])
}

/// `(deg_1(v, w), ..., deg_k(v, w))`, a lower bound for the degree of every
/// chain between `v` and `w`.
pub fn lower_bound_vector(v: &CosetRep, w: &CosetRep) -> Result<DegreeVector> {
    v.check_same_shape(w)?;
    let entries = (1..=v.shape().k())
        .map(|j| projection_degree(v, w, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(DegreeVector(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(n: usize, dims: &[usize]) -> FlagShape {
        FlagShape::new(n, dims).unwrap()
    }

    fn coset(s: &FlagShape, text: &str) -> CosetRep {
        CosetRep::parse(s, text).unwrap()
    }

    #[test]
    fn step_degrees() {
        let s = shape(13, &[1, 3, 5, 7, 9]);
        let d = step_degree(&s, RimHookSpec { q: 2, t: 5 }).unwrap();
        assert_eq!(d.entries(), &[0, 1, 1, 1, 0]);
        assert_eq!(d.exponent_form(), "0^1 1^3 0^1");
        let d = step_degree(&s, RimHookSpec { q: 2, t: 3 }).unwrap();
        assert_eq!(d.exponent_form(), "0^1 1^1 0^3");
        let gr = shape(7, &[3]);
        assert_eq!(step_degree(&gr, RimHookSpec { q: 1, t: 2 }).unwrap().entries(), &[1]);
        assert!(step_degree(&gr, RimHookSpec { q: 2, t: 2 }).is_err());
    }

    #[test]
    fn root_degrees() {
        let s = shape(13, &[1, 3, 5, 7, 9]);
        assert_eq!(root_degree(&s, 2, 9).unwrap().entries(), &[0, 1, 1, 1, 0]);
        // position 10 already sits in the complement block
        assert_eq!(root_degree(&s, 2, 10).unwrap().entries(), &[0, 1, 1, 1, 1]);
        assert!(root_degree(&s, 10, 12).unwrap().is_zero());
        assert_eq!(root_degree(&shape(4, &[1, 2]), 1, 4).unwrap().entries(), &[1, 1]);
        assert!(root_degree(&s, 3, 3).is_err());
        assert!(root_degree(&s, 3, 14).is_err());
        for a in 1..13 {
            for b in a + 1..=13 {
                let (qa, tb) = (s.block_of(a).unwrap(), s.block_of(b).unwrap());
                let d = root_degree(&s, a, b).unwrap();
                if qa == tb {
                    assert!(d.is_zero());
                } else {
                    assert_eq!(d, step_degree(&s, RimHookSpec { q: qa, t: tb }).unwrap());
                }
            }
        }
    }

    #[test]
    fn graded_degrees() {
        let s = shape(13, &[1, 3, 5, 7, 9]);
        let d = DegreeVector::from_entries(vec![0, 2, 1, 1, 0]);
        assert_eq!(graded_degree(&s, &d).unwrap(), 16);
        assert_eq!(graded_degree(&s, &DegreeVector::zero(5)).unwrap(), 0);
        assert_eq!(graded_degree(&shape(12, &[8]), &DegreeVector::from_entries(vec![1])).unwrap(), 12);
        assert!(graded_degree(&s, &DegreeVector::zero(4)).is_err());
    }

    #[test]
    fn exponent_forms() {
        assert_eq!(DegreeVector::from_entries(vec![0, 2, 1, 1, 0]).exponent_form(), "0^1 2^1 1^2 0^1");
        assert_eq!(DegreeVector::from_entries(vec![3]).exponent_form(), "3^1");
        assert_eq!(DegreeVector::zero(4).exponent_form(), "0^4");
        assert_eq!(DegreeVector::from_entries(vec![0, 2, 1, 1, 0]).to_string(), "0,2,1,1,0");
    }

    #[test]
    fn headline_chain() {
        let s = shape(13, &[1, 3, 5, 7, 9]);
        let v = coset(&s, "2|3,8|10,13|9,11|1,5");
        let w = coset(&s, "1|9,10|5,11|6,7|2,3");
        let (d, trace) = greedy_min_degree(&v, &w).unwrap();
        assert_eq!(d.entries(), &[0, 2, 1, 1, 0]);
        let specs: Vec<_> = trace.steps.iter().map(|s| (s.spec.q, s.spec.t)).collect();
        assert_eq!(specs, vec![(2, 5), (2, 3)]);
        assert_eq!(trace.steps[1].result.to_string(), "2|11,13|8,10|5,9|1,3");
        trace.validate().unwrap();
        assert_eq!(lower_bound_vector(&v, &w).unwrap(), d);
        assert_eq!(projection_degree(&v, &w, 2).unwrap(), 2);
        assert_eq!(projection_degree(&v, &w, 1).unwrap(), 0);
        assert_eq!(projection_degree(&v, &w, 5).unwrap(), 0);
    }

    #[test]
    fn trivial_chains() {
        let s = shape(6, &[2, 4]);
        let c = coset(&s, "3,5|1,6");
        let (d, trace) = greedy_min_degree(&c, &c).unwrap();
        assert!(d.is_zero());
        assert!(trace.steps.is_empty());
        assert!(lower_bound_vector(&c, &c).unwrap().is_zero());
    }

    #[test]
    fn small_flag_chain() {
        let s = shape(3, &[1, 2]);
        let (d, trace) = greedy_min_degree(&coset(&s, "2|1"), &coset(&s, "1|3")).unwrap();
        assert_eq!(d.entries(), &[0, 1]);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].spec, RimHookSpec { q: 2, t: 3 });
    }

    #[test]
    fn projections() {
        let s = shape(13, &[1, 3, 5, 7, 9]);
        let v = coset(&s, "2|3,8|10,13|9,11|1,5");
        let p = project(&v, 2).unwrap();
        assert_eq!(p.shape(), &FlagShape::grassmannian(3, 13).unwrap());
        assert_eq!(p.to_string(), "2,3,8");
        assert_eq!(project(&v, 1).unwrap().to_string(), "2");
        let id = CosetRep::identity(&s);
        assert_eq!(project(&id, 3).unwrap(), CosetRep::identity(&FlagShape::grassmannian(5, 13).unwrap()));
        assert!(project(&v, 0).is_err());
        assert!(project(&v, 6).is_err());
        // projected Maya diagram: top row full, bottom row m_j
        let m = p.to_maya();
        assert_eq!(m.row(1), v.to_maya().row(2));
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let a = CosetRep::identity(&shape(4, &[2]));
        let b = CosetRep::identity(&shape(4, &[1]));
        assert!(greedy_min_degree(&a, &b).is_err());
        assert!(lower_bound_vector(&a, &b).is_err());
    }

    #[test]
    fn tie_break_index_out_of_range_is_internal() {
        let s = shape(3, &[1, 2]);
        let err = greedy_min_degree_with(&coset(&s, "2|1"), &coset(&s, "1|3"), |_| 7).unwrap_err();
        assert!(err.is_internal());
    }
}
