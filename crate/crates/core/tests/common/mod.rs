//! Checks shared by the property and acceptance suites. Each returns a
//! description of the first failure, if any.

#![allow(dead_code)]

use std::collections::HashSet;

use qmindeg::maya::MayaDiagram;
use qmindeg::oracle::{adjacency_graph, bruhat_closure, hecke_step_consistent};
use qmindeg::qdegree::greedy_min_degree_with;
use qmindeg::weyl::{bruhat_leq_full, reflection_word};
use qmindeg::{greedy_min_degree, lower_bound_vector, CosetRep, DegreeVector, FlagShape, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn shape(n: usize, dims: &[usize]) -> FlagShape {
    FlagShape::new(n, dims).unwrap()
}

/// Fl(1,2;4), Fl(1,2,3;4), Gr(2,5), Gr(2,6), Fl(1,3;5).
pub fn sweep_spaces() -> Vec<FlagShape> {
    vec![shape(4, &[1, 2]), shape(4, &[1, 2, 3]), shape(5, &[2]), shape(6, &[2]), shape(5, &[1, 3])]
}

/// Fl(1,2;4), Fl(1,2,3;4), Gr(2,5).
pub fn oracle_spaces() -> Vec<FlagShape> {
    vec![shape(4, &[1, 2]), shape(4, &[1, 2, 3]), shape(5, &[2])]
}

/// Every shape with ambient dimension `n`.
pub fn shapes_of(n: usize) -> Vec<FlagShape> {
    (1u32..1 << (n - 1))
        .map(|mask| {
            let dims: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            shape(n, &dims)
        })
        .collect()
}

pub fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Every permutation of `1..=n` by Heap's algorithm.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation::new(a.clone()).unwrap());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Bruhat order on `S_n` as the closure of `p < p t` covers, `t` any
/// transposition with `l(p t) = l(p) + 1`.
pub fn full_closure(n: usize) -> (Vec<Permutation>, Vec<Vec<bool>>) {
    let mut perms = all_perms(n);
    perms.sort_by_key(|p| std::cmp::Reverse(p.length()));
    let index: std::collections::HashMap<Permutation, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut above = vec![vec![false; perms.len()]; perms.len()];
    for u in 0..perms.len() {
        above[u][u] = true;
        for a in 1..=n {
            for b in a + 1..=n {
                let x = perms[u].compose(&Permutation::transposition(n, a, b));
                if x.length() == perms[u].length() + 1 {
                    let xi = index[&x];
                    let row = above[xi].clone();
                    for (dst, src) in above[u].iter_mut().zip(row) {
                        *dst |= src;
                    }
                }
            }
        }
    }
    (perms, above)
}

pub fn check_full_bruhat(n: usize) -> Check {
    let (perms, above) = full_closure(n);
    for (i, u) in perms.iter().enumerate() {
        for (j, v) in perms.iter().enumerate() {
            if bruhat_leq_full(u, v) != above[i][j] {
                return Err(format!("S_{n}: {u} <= {v} disagrees with cover closure"));
            }
        }
    }
    Ok(())
}

/// `(u · v) v^{-1} <= u` on random pairs.
pub fn check_hecke_cancellation(n: usize, samples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut base: Vec<usize> = (1..=n).collect();
    for _ in 0..samples {
        base.shuffle(&mut rng);
        let u = Permutation::new(base.clone()).unwrap();
        base.shuffle(&mut rng);
        let v = Permutation::new(base.clone()).unwrap();
        let lhs = u.hecke_product(&v).compose(&v.inverse());
        if !bruhat_leq_full(&lhs, &u) {
            return Err(format!("(u·v)v^-1 = {lhs} not <= u = {u} (v = {v})"));
        }
    }
    Ok(())
}

/// A reduced word for `p` chosen by picking random descents.
pub fn random_reduced_word(p: &Permutation, rng: &mut impl Rng) -> Vec<usize> {
    let mut img = p.as_slice().to_vec();
    let mut word = Vec::new();
    loop {
        let descents: Vec<usize> = (0..img.len() - 1).filter(|&i| img[i] > img[i + 1]).collect();
        let Some(&i) = descents.choose(rng) else { break };
        img.swap(i, i + 1);
        word.push(i + 1);
    }
    word.reverse();
    word
}

pub fn check_reflection_words(max_n: usize) -> Check {
    for n in 2..=max_n {
        for s in shapes_of(n) {
            for q in 1..=s.k() {
                for t in q + 1..=s.block_count() {
                    let word = reflection_word(&s, q, t).unwrap();
                    let want = Permutation::transposition(n, s.bound(q - 1) + 1, s.bound(t));
                    if Permutation::from_word(n, &word) != want {
                        return Err(format!("{s}: word for ({q},{t}) is not the transposition"));
                    }
                    if word.len() != want.length() {
                        return Err(format!("{s}: word for ({q},{t}) is not reduced"));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn check_round_trips(max_n: usize) -> Check {
    for n in 2..=max_n {
        for s in shapes_of(n) {
            let mut count = 0u128;
            for c in s.cosets() {
                count += 1;
                let text = c.to_string();
                if CosetRep::parse(&s, &text).as_ref() != Ok(&c) {
                    return Err(format!("{s}: `{text}` does not parse back"));
                }
                if c.to_maya().to_coset().as_ref() != Ok(&c) {
                    return Err(format!("{s}: Maya round trip fails for {c}"));
                }
                let rows = c.to_maya().rows();
                if MayaDiagram::from_rows(&s, &rows).map(|m| m.to_coset()) != Ok(Ok(c.clone())) {
                    return Err(format!("{s}: from_rows fails for {c}"));
                }
            }
            let multinomial = factorial(n as u128)
                / (1..=s.block_count()).map(|j| factorial(s.block_size(j) as u128)).product::<u128>();
            if count != multinomial || count != s.coset_count() {
                return Err(format!("{s}: enumerated {count} cosets, expected {multinomial}"));
            }
        }
    }
    Ok(())
}

/// Diagram order against the cover-closure oracle and against the sorted
/// prefix criterion on representatives, on every pair.
pub fn check_diagram_order(s: &FlagShape) -> Check {
    let closure = bruhat_closure(s).map_err(|e| e.to_string())?;
    let cosets: Vec<CosetRep> = s.cosets().collect();
    let mayas: Vec<MayaDiagram> = cosets.iter().map(CosetRep::to_maya).collect();
    for (i, u) in cosets.iter().enumerate() {
        for (j, x) in cosets.iter().enumerate() {
            let by_diagram = mayas[i].leq(&mayas[j]).unwrap();
            if Some(by_diagram) != closure.leq(u, x) {
                return Err(format!("{s}: M^{u} <= M^{x} is {by_diagram}, closure disagrees"));
            }
            if by_diagram != bruhat_leq_full(u.perm(), x.perm()) {
                return Err(format!("{s}: diagram order and prefix criterion disagree on {u}, {x}"));
            }
            let incompatible = mayas[j].incompatible_rows(&mayas[i]).unwrap();
            if incompatible.is_empty() != by_diagram {
                return Err(format!("{s}: incompatible rows of M^{x} vs M^{u} disagree with order"));
            }
        }
    }
    Ok(())
}

pub fn check_partial_order(s: &FlagShape) -> Check {
    let mayas: Vec<MayaDiagram> = s.cosets().map(|c| c.to_maya()).collect();
    let m = mayas.len();
    let leq: Vec<Vec<bool>> = mayas.iter().map(|a| mayas.iter().map(|b| a.leq(b).unwrap()).collect()).collect();
    for i in 0..m {
        if !leq[i][i] {
            return Err(format!("{s}: not reflexive"));
        }
        for j in 0..m {
            if i != j && leq[i][j] && leq[j][i] {
                return Err(format!("{s}: not antisymmetric"));
            }
            if !leq[i][j] {
                continue;
            }
            for (l, &jl) in leq[j].iter().enumerate() {
                if jl && !leq[i][l] {
                    return Err(format!("{s}: not transitive"));
                }
            }
        }
    }
    Ok(())
}

/// Totals reachable by every sequence of longest-run choices.
pub fn all_branch_totals(v: &CosetRep, w: &CosetRep) -> HashSet<DegreeVector> {
    fn go(cur: &MayaDiagram, target: &MayaDiagram, acc: DegreeVector, out: &mut HashSet<DegreeVector>) {
        let cands = cur.rim_hook_candidates(target).unwrap();
        if cands.is_empty() {
            out.insert(acc);
            return;
        }
        for spec in cands {
            let next = cur.rim_hook(spec).unwrap();
            let d = qmindeg::step_degree(cur.shape(), spec).unwrap();
            go(&next, target, &acc + &d, out);
        }
    }
    let mut out = HashSet::new();
    go(&v.to_maya(), &w.to_maya(), DegreeVector::zero(v.shape().k()), &mut out);
    out
}

/// Greedy total equals the projection lower bound and the trace is valid.
pub fn check_greedy_is_lower_bound(s: &FlagShape) -> Check {
    let cosets: Vec<CosetRep> = s.cosets().collect();
    for v in &cosets {
        for w in &cosets {
            let (total, trace) = greedy_min_degree(v, w).map_err(|e| e.to_string())?;
            let lower = lower_bound_vector(v, w).map_err(|e| e.to_string())?;
            if lower != total {
                return Err(format!("{s}: v={v} w={w}: greedy {total}, lower bound {lower}"));
            }
            let mut sum = DegreeVector::zero(s.k());
            for step in &trace.steps {
                sum += &step.degree;
            }
            if sum != total {
                return Err(format!("{s}: v={v} w={w}: steps sum to {sum}, total {total}"));
            }
            trace.validate().map_err(|e| format!("{s}: v={v} w={w}: {e}"))?;
            if trace.steps.len() > s.n() * s.n() {
                return Err(format!("{s}: trace longer than n^2"));
            }
            let dominated = w.to_maya().leq(&v.to_maya()).unwrap();
            if total.is_zero() != dominated {
                return Err(format!("{s}: v={v} w={w}: zero degree iff w <= v fails"));
            }
        }
    }
    Ok(())
}

pub fn check_tie_break_independence(s: &FlagShape) -> Check {
    let cosets: Vec<CosetRep> = s.cosets().collect();
    for v in &cosets {
        for w in &cosets {
            let (total, _) = greedy_min_degree(v, w).unwrap();
            let totals = all_branch_totals(v, w);
            if totals.len() != 1 || !totals.contains(&total) {
                return Err(format!("{s}: v={v} w={w}: branch totals {totals:?} vs {total}"));
            }
            let (last, _) = greedy_min_degree_with(v, w, |c| c.len() - 1).unwrap();
            if last != total {
                return Err(format!("{s}: v={v} w={w}: largest-q tie-break gives {last}"));
            }
        }
    }
    Ok(())
}

/// Pareto-minimal chain degrees (cap = greedy + 1) are exactly `{greedy}`.
pub fn check_oracle(s: &FlagShape) -> Check {
    let graph = adjacency_graph(s).map_err(|e| e.to_string())?;
    for v in graph.nodes() {
        for w in graph.nodes() {
            let (total, _) = greedy_min_degree(v, w).unwrap();
            let pareto = graph.pareto_min_degrees(v, w, &total.widen(1)).unwrap();
            if pareto != [total.clone()] {
                return Err(format!("{s}: v={v} w={w}: pareto {pareto:?}, greedy {total}"));
            }
        }
    }
    Ok(())
}

/// Rim hook equals Hecke action on every greedy step between cosets of the shape. Returns the
/// number of steps checked.
pub fn check_hecke_steps(s: &FlagShape) -> Result<usize, String> {
    let cosets: Vec<CosetRep> = s.cosets().collect();
    let mut steps = 0;
    for v in &cosets {
        for w in &cosets {
            steps += check_trace_hecke(v, w)?;
        }
    }
    Ok(steps)
}

pub fn check_trace_hecke(v: &CosetRep, w: &CosetRep) -> Result<usize, String> {
    let (_, trace) = greedy_min_degree(v, w).map_err(|e| e.to_string())?;
    for (prev, step) in trace.nodes().zip(&trace.steps) {
        if hecke_step_consistent(prev, step.spec, &step.result) != Ok(true) {
            return Err(format!("hook {} from {prev} is not the Hecke action", step.spec));
        }
    }
    Ok(trace.steps.len())
}

/// A random coset of a random shape with `2 <= n <= max_n`.
pub fn random_coset(rng: &mut impl Rng, max_n: usize) -> CosetRep {
    let n = rng.gen_range(2..=max_n);
    let mut dims: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
    if dims.is_empty() {
        dims.push(rng.gen_range(1..n));
    }
    let s = shape(n, &dims);
    let mut image: Vec<usize> = (1..=n).collect();
    image.shuffle(rng);
    CosetRep::from_perm(&s, &Permutation::new(image).unwrap()).unwrap()
}

pub fn random_coset_of(rng: &mut impl Rng, s: &FlagShape) -> CosetRep {
    let mut image: Vec<usize> = (1..=s.n()).collect();
    image.shuffle(rng);
    CosetRep::from_perm(s, &Permutation::new(image).unwrap()).unwrap()
}

/// Random rim hooks on shapes with `n <= max_n`: result is a valid diagram,
/// equals the Hecke action, and greedy-selected hooks strictly go up.
pub fn check_rim_hook_fuzz(samples: usize, max_n: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let c = random_coset(&mut rng, max_n);
        let s = c.shape().clone();
        let q = rng.gen_range(1..=s.k());
        let t = rng.gen_range(q + 1..=s.block_count());
        let spec = qmindeg::RimHookSpec::new(&s, q, t).unwrap();
        let m = c.to_maya();
        let out = m.rim_hook(spec).map_err(|e| format!("{c} {spec}: {e}"))?;
        let back = MayaDiagram::from_rows(&s, &out.rows()).map_err(|e| format!("{c} {spec}: {e}"))?;
        let result = back.to_coset().unwrap();
        let word = reflection_word(&s, q, t).unwrap();
        if result != c.hecke_word_action(&word).unwrap() {
            return Err(format!("{s}: hook {spec} on {c} differs from Hecke action"));
        }
        if !m.leq(&out).unwrap() {
            return Err(format!("{s}: hook {spec} on {c} went down"));
        }

        let w = random_coset_of(&mut rng, &s);
        let mw = w.to_maya();
        if let Some(sel) = m.select_rim_hook(&mw).unwrap() {
            let up = m.rim_hook(sel).unwrap();
            if !(m.leq(&up).unwrap() && !up.leq(&m).unwrap()) {
                return Err(format!("{s}: selected hook {sel} on {c} toward {w} is not a strict increase"));
            }
        }
    }
    Ok(())
}

/// Hecke action is monotone and independent of the reduced word used.
pub fn check_hecke_monotone(samples: usize, max_n: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let c = random_coset(&mut rng, max_n);
        let n = c.shape().n();
        let len = rng.gen_range(0..3 * n);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..n)).collect();
        let out = c.hecke_word_action(&word).unwrap();
        if !bruhat_leq_full(c.perm(), out.perm()) {
            return Err(format!("Hecke action of {word:?} on {c} is not above it"));
        }
        let mut image: Vec<usize> = (1..=n).collect();
        image.shuffle(&mut rng);
        let p = Permutation::new(image).unwrap();
        let alt = random_reduced_word(&p, &mut rng);
        if c.perm().hecke_word(&alt) != c.perm().hecke_word(&p.reduced_word()) {
            return Err(format!("Hecke product by {p} depends on the reduced word"));
        }
    }
    Ok(())
}
