use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ambient dimension supported. Maya rows are stored as 128-bit
/// column sets.
pub const MAX_N: usize = 128;

/// The dimension vector `0 = i_0 < i_1 < ... < i_k < i_{k+1} = n` of a
/// partial flag variety `Fl(i_1, ..., i_k; n)`.
///
/// Blocks are numbered `1..=k+1`; block `j` holds positions
/// `i_{j-1}+1 ..= i_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagShape {
    n: usize,
    // i_0, i_1, ..., i_k, i_{k+1}
    bounds: Vec<usize>,
}

impl FlagShape {
    pub fn new(n: usize, dims: &[usize]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidShape(format!("n = {n} must be at least 2")));
        }
        if n > MAX_N {
            return Err(Error::InvalidShape(format!("n = {n} exceeds the maximum {MAX_N}")));
        }
        if dims.is_empty() {
            return Err(Error::InvalidShape("need at least one dimension".into()));
        }
        for &d in dims {
            if d == 0 || d >= n {
                return Err(Error::InvalidShape(format!(
                    "dimension {d} outside 1..={}",
                    n - 1
                )));
            }
        }
        if dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidShape(format!(
                "dimensions {dims:?} are not strictly increasing"
            )));
        }
        let mut bounds = Vec::with_capacity(dims.len() + 2);
        bounds.push(0);
        bounds.extend_from_slice(dims);
        bounds.push(n);
        Ok(FlagShape { n, bounds })
    }

    /// The Grassmannian `Gr(m, n)`.
    pub fn grassmannian(m: usize, n: usize) -> Result<Self> {
        FlagShape::new(n, &[m])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of proper subspaces in the flag (the number of quantum parameters).
    pub fn k(&self) -> usize {
        self.bounds.len() - 2
    }

    pub fn block_count(&self) -> usize {
        self.k() + 1
    }

    /// `i_1, ..., i_k`.
    pub fn dims(&self) -> &[usize] {
        &self.bounds[1..self.bounds.len() - 1]
    }

    /// `i_j` for `0 <= j <= k+1`.
    pub fn bound(&self, j: usize) -> usize {
        self.bounds[j]
    }

    /// Size of block `j` (1-based).
    pub fn block_size(&self, j: usize) -> usize {
        self.bounds[j] - self.bounds[j - 1]
    }

    /// Positions `i_{j-1}+1 ..= i_j` of block `j`, as a 0-based half-open range.
    pub fn block_range(&self, j: usize) -> std::ops::Range<usize> {
        self.bounds[j - 1]..self.bounds[j]
    }

    /// The unique block `j` with `i_{j-1} < a <= i_j`.
    pub fn block_of(&self, a: usize) -> Result<usize> {
        if a == 0 || a > self.n {
            return Err(Error::OutOfRange { pos: a, n: self.n });
        }
        // bounds is sorted; first index with bounds[j] >= a
        Ok(self.bounds.partition_point(|&b| b < a))
    }

    /// Degree of the quantum parameter `q_j`: `i_{j+1} - i_{j-1}`.
    pub fn qweight(&self, j: usize) -> Result<usize> {
        if j == 0 || j > self.k() {
            return Err(Error::InvalidBlock { index: j, k: self.k() });
        }
        Ok(self.bounds[j + 1] - self.bounds[j - 1])
    }

    /// Number of cosets, `n! / prod (i_j - i_{j-1})!`.
    pub fn coset_count(&self) -> u128 {
        // product of binomials C(i_j, block_size(j)) avoids overflow for moderate n
        let mut total: u128 = 1;
        for j in 1..=self.block_count() {
            total = total.saturating_mul(binomial(self.bounds[j] as u128, self.block_size(j) as u128));
        }
        total
    }
}

fn binomial(n: u128, r: u128) -> u128 {
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

impl fmt::Display for FlagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims().iter().map(|d| d.to_string()).collect();
        write!(f, "{}/{}", dims.join(","), self.n)
    }
}

impl FromStr for FlagShape {
    type Err = Error;

    /// Parses `i1,i2,...,ik/n`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (dims, n) = compact
            .split_once('/')
            .ok_or_else(|| Error::InvalidShape(format!("expected `i1,...,ik/n`, got `{s}`")))?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::InvalidShape(format!("bad ambient dimension `{n}`")))?;
        let dims = dims
            .split(',')
            .map(|d| {
                d.parse::<usize>()
                    .map_err(|_| Error::InvalidShape(format!("bad dimension `{d}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        FlagShape::new(n, &dims)
    }
}
