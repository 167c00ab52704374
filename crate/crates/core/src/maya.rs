//! Maya diagrams of elements of `W^P`.
//!
//! `M^w` is a `(k+1) x n` grid: row `j` (counted from the bottom) has an x
//! in column `w(i)` for every `i <= i_j`. Rows are nested and the top row is
//! full. Bruhat order, the generalized rim hook and the incompatibility test
//! that drives hook selection are all prefix-count manipulations of rows.

use std::fmt;

use crate::error::{Error, Result};
use crate::weyl::{CosetRep, FlagShape, Permutation};

/// A set of columns `1..=128`, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColumnSet(u128);

impl ColumnSet {
    pub const EMPTY: ColumnSet = ColumnSet(0);

    /// `{1, ..., b}`.
    pub fn upto(b: usize) -> ColumnSet {
        if b >= 128 {
            ColumnSet(u128::MAX)
        } else {
            ColumnSet((1u128 << b) - 1)
        }
    }

    pub fn contains(self, col: usize) -> bool {
        (1..=128).contains(&col) && self.0 >> (col - 1) & 1 == 1
    }

    pub fn insert(&mut self, col: usize) {
        self.0 |= 1 << (col - 1);
    }

    pub fn remove(&mut self, col: usize) {
        self.0 &= !(1 << (col - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColumnSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn difference(self, other: ColumnSet) -> ColumnSet {
        ColumnSet(self.0 & !other.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 128 - self.0.leading_zeros() as usize)
    }

    /// Number of members in `1..=b`.
    pub fn count_upto(self, b: usize) -> usize {
        (self.0 & ColumnSet::upto(b).0).count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=128).filter(move |&c| self.contains(c))
    }
}

impl FromIterator<usize> for ColumnSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ColumnSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

/// A pair `q < t` of block indices naming the generalized `qt`-rim hook.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RimHookSpec {
    pub q: usize,
    pub t: usize,
}

impl RimHookSpec {
    pub fn new(shape: &FlagShape, q: usize, t: usize) -> Result<Self> {
        if q == 0 || q >= t || t > shape.block_count() {
            return Err(Error::InvalidRimHook { q, t, max: shape.block_count() });
        }
        Ok(RimHookSpec { q, t })
    }
}

impl fmt::Display for RimHookSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MayaDiagram {
    shape: FlagShape,
    // rows[j - 1] is row j; rows[k] is the full top row
    rows: Vec<ColumnSet>,
}

impl MayaDiagram {
    pub fn from_coset(c: &CosetRep) -> Self {
        let shape = c.shape();
        let rows = (1..=shape.block_count())
            .map(|j| c.prefix(j).iter().copied().collect())
            .collect();
        MayaDiagram { shape: shape.clone(), rows }
    }

    /// Builds a diagram from explicit rows, bottom row first.
    pub fn from_rows(shape: &FlagShape, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() != shape.block_count() {
            return Err(Error::InvalidDiagram(format!(
                "expected {} rows, got {}",
                shape.block_count(),
                rows.len()
            )));
        }
        let mut sets = Vec::with_capacity(rows.len());
        for row in rows {
            if let Some(&c) = row.iter().find(|&&c| c == 0 || c > shape.n()) {
                return Err(Error::InvalidDiagram(format!("column {c} outside 1..={}", shape.n())));
            }
            sets.push(row.iter().copied().collect::<ColumnSet>());
        }
        let m = MayaDiagram { shape: shape.clone(), rows: sets };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let shape = &self.shape;
        for j in 1..=shape.block_count() {
            let row = self.row(j);
            if row.len() != shape.bound(j) {
                return Err(Error::InvalidDiagram(format!(
                    "row {j} has {} x's, expected {}",
                    row.len(),
                    shape.bound(j)
                )));
            }
            if !row.is_subset(ColumnSet::upto(shape.n())) {
                return Err(Error::InvalidDiagram(format!("row {j} leaves the grid")));
            }
            if !self.row(j - 1).is_subset(row) {
                return Err(Error::InvalidDiagram(format!("row {} is not inside row {j}", j - 1)));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    /// Row `j` for `0 <= j <= k+1`; row 0 is empty.
    pub fn row(&self, j: usize) -> ColumnSet {
        if j == 0 {
            ColumnSet::EMPTY
        } else {
            self.rows[j - 1]
        }
    }

    /// Rows bottom-up as sorted column lists.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.iter().collect()).collect()
    }

    pub fn to_coset(&self) -> Result<CosetRep> {
        self.validate()?;
        let mut image = Vec::with_capacity(self.shape.n());
        for j in 1..=self.shape.block_count() {
            image.extend(self.row(j).difference(self.row(j - 1)).iter());
        }
        CosetRep::new(&self.shape, Permutation::new(image)?)
    }

    /// `S_j(M, b)`: number of x's in row `j` among columns `1..=b`.
    pub fn prefix_count(&self, j: usize, b: usize) -> usize {
        self.row(j).count_upto(b)
    }

    /// `self <= other` in the diagram order: every prefix count of `self`
    /// dominates the matching count of `other`. Decides Bruhat order on `W^P`.
    pub fn leq(&self, other: &MayaDiagram) -> Result<bool> {
        self.check_same_shape(other)?;
        let n = self.shape.n();
        Ok((1..=self.shape.block_count()).all(|j| {
            (1..=n).all(|b| self.prefix_count(j, b) >= other.prefix_count(j, b))
        }))
    }

    /// Least column with an x in row `r` but not in row `r-1`.
    pub fn phi(&self, r: usize) -> Option<usize> {
        self.row(r).difference(self.row(r - 1)).min()
    }

    /// Greatest column with an x in row `r+1` but not in row `r`.
    pub fn psi(&self, r: usize) -> Option<usize> {
        self.row(r + 1).difference(self.row(r)).max()
    }

    /// Applies the generalized `qt`-rim hook.
    ///
    /// Up phase, `j = q..t-1`: remove the x at `(j, φ(j))`. Down phase,
    /// `j = t-1..q`: add an x at `(j, ψ(j))`. Both φ and ψ are read off the
    /// working diagram as it stands when row `j` is visited.
    pub fn rim_hook(&self, spec: RimHookSpec) -> Result<MayaDiagram> {
        let RimHookSpec { q, t } = RimHookSpec::new(&self.shape, spec.q, spec.t)?;
        let mut work = self.clone();
        for j in q..t {
            let col = work
                .phi(j)
                .ok_or_else(|| Error::Internal(format!("φ undefined at row {j} during {spec}")))?;
            work.rows[j - 1].remove(col);
        }
        for j in (q..t).rev() {
            let col = work
                .psi(j)
                .ok_or_else(|| Error::Internal(format!("ψ undefined at row {j} during {spec}")))?;
            work.rows[j - 1].insert(col);
        }
        work.validate()
            .map_err(|e| Error::Internal(format!("rim hook {spec} broke the diagram: {e}")))?;
        Ok(work)
    }

    /// Rows `j in 1..=k` of `self` (playing `M^v`) holding a position
    /// `(j, b)` with `S_j(M^v, b) > S_j(M^w, b)`.
    pub fn incompatible_rows(&self, target: &MayaDiagram) -> Result<Vec<usize>> {
        self.check_same_shape(target)?;
        let n = self.shape.n();
        Ok((1..=self.shape.k())
            .filter(|&j| (1..=n).any(|b| self.prefix_count(j, b) > target.prefix_count(j, b)))
            .collect())
    }

    /// Every maximal run `q..t-1` of consecutive incompatible rows whose
    /// length `t - q` is greatest, in increasing `q`.
    pub fn rim_hook_candidates(&self, target: &MayaDiagram) -> Result<Vec<RimHookSpec>> {
        let rows = self.incompatible_rows(target)?;
        let mut runs: Vec<RimHookSpec> = Vec::new();
        for j in rows {
            match runs.last_mut() {
                Some(run) if run.t == j => run.t = j + 1,
                _ => runs.push(RimHookSpec { q: j, t: j + 1 }),
            }
        }
        let best = runs.iter().map(|r| r.t - r.q).max().unwrap_or(0);
        runs.retain(|r| r.t - r.q == best);
        Ok(runs)
    }

    /// The hook `R_(v,w)`: the longest run of incompatible rows, smallest `q`
    /// on ties. `None` when `M^w <= M^v`.
    pub fn select_rim_hook(&self, target: &MayaDiagram) -> Result<Option<RimHookSpec>> {
        Ok(self.rim_hook_candidates(target)?.into_iter().next())
    }

    /// Text rendering, top row first. `X` marks the bottom x of each column,
    /// `x` any other x and `.` an empty cell; cells are separated by a space.
    /// With `color`, `X` is bold and `x` is blue.
    pub fn render(&self, color: bool) -> String {
        let n = self.shape.n();
        let mut out = String::new();
        for j in (1..=self.shape.block_count()).rev() {
            let row = self.row(j);
            let below = self.row(j - 1);
            let cells: Vec<&str> = (1..=n)
                .map(|c| match (row.contains(c), below.contains(c), color) {
                    (false, _, _) => ".",
                    (true, false, false) => "X",
                    (true, true, false) => "x",
                    (true, false, true) => "\x1b[1mX\x1b[0m",
                    (true, true, true) => "\x1b[34mx\x1b[0m",
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    fn check_same_shape(&self, other: &MayaDiagram) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(self.shape.to_string(), other.shape.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl CosetRep {
    pub fn to_maya(&self) -> MayaDiagram {
        MayaDiagram::from_coset(self)
    }
}

/// `M^w <= M^v`.
pub fn diagram_leq(mw: &MayaDiagram, mv: &MayaDiagram) -> Result<bool> {
    mw.leq(mv)
}
