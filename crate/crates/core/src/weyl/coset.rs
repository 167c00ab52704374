use std::fmt;

use super::{FlagShape, Permutation};
use crate::error::{Error, Result};

/// A minimal length representative of a coset in `S_n / W_P`: a permutation
/// whose one-line notation increases inside every block of the shape.
///
/// The full permutation is stored, complement block included. The textual
/// form shows only the first `k` blocks, e.g. `2|3,8|10,13|9,11`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetRep {
    shape: FlagShape,
    perm: Permutation,
}

impl CosetRep {
    /// Wraps an already block-increasing permutation.
    pub fn new(shape: &FlagShape, perm: Permutation) -> Result<Self> {
        if perm.n() != shape.n() {
            return Err(Error::InvalidCoset(format!(
                "permutation of degree {} for a shape with n = {}",
                perm.n(),
                shape.n()
            )));
        }
        for j in 1..=shape.block_count() {
            let block = &perm.as_slice()[shape.block_range(j)];
            if block.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidCoset(format!(
                    "block {j} of {perm} is not increasing"
                )));
            }
        }
        Ok(CosetRep { shape: shape.clone(), perm })
    }

    /// The minimal representative of `perm W_P`: every block sorted.
    pub fn from_perm(shape: &FlagShape, perm: &Permutation) -> Result<Self> {
        if perm.n() != shape.n() {
            return Err(Error::InvalidCoset(format!(
                "permutation of degree {} for a shape with n = {}",
                perm.n(),
                shape.n()
            )));
        }
        Ok(Self::minimize(shape, perm.as_slice().to_vec()))
    }

    pub(crate) fn minimize(shape: &FlagShape, mut image: Vec<usize>) -> Self {
        for j in 1..=shape.block_count() {
            image[shape.block_range(j)].sort_unstable();
        }
        CosetRep {
            shape: shape.clone(),
            perm: Permutation::from_vec_unchecked(image),
        }
    }

    pub fn identity(shape: &FlagShape) -> Self {
        CosetRep {
            shape: shape.clone(),
            perm: Permutation::identity(shape.n()),
        }
    }

    /// Parses block notation: `block ('|' block)*` with `block := int (',' int)*`.
    ///
    /// Either the first `k` blocks or all `k+1` are accepted; `<` is a synonym
    /// for `,` and whitespace is ignored.
    pub fn parse(shape: &FlagShape, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let blocks: Vec<&str> = compact.split('|').collect();
        let k = shape.k();
        if blocks.len() != k && blocks.len() != k + 1 {
            return Err(Error::InvalidCoset(format!(
                "expected {k} or {} blocks, found {}",
                k + 1,
                blocks.len()
            )));
        }
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        let mut image = Vec::with_capacity(n);
        for (idx, block) in blocks.iter().enumerate() {
            let j = idx + 1;
            let values = block
                .split([',', '<'])
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::InvalidCoset(format!("bad entry `{tok}` in block {j}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if values.len() != shape.block_size(j) {
                return Err(Error::InvalidCoset(format!(
                    "block {j} has {} entries, expected {}",
                    values.len(),
                    shape.block_size(j)
                )));
            }
            for &v in &values {
                if v == 0 || v > n {
                    return Err(Error::InvalidCoset(format!("value {v} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidCoset(format!("value {v} repeated")));
                }
            }
            if values.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidCoset(format!("block {j} is not increasing")));
            }
            image.extend(values);
        }
        image.extend((1..=n).filter(|&v| !seen[v]));
        Ok(CosetRep {
            shape: shape.clone(),
            perm: Permutation::from_vec_unchecked(image),
        })
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    /// The minimal length representative as a full permutation.
    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Values of block `j` (1-based), ascending.
    pub fn block(&self, j: usize) -> &[usize] {
        &self.perm.as_slice()[self.shape.block_range(j)]
    }

    /// The first `i_j` values, in block order (not sorted).
    pub fn prefix(&self, j: usize) -> &[usize] {
        &self.perm.as_slice()[..self.shape.bound(j)]
    }

    pub fn length(&self) -> usize {
        self.perm.length()
    }

    /// The coset of `self * s_{e_a - e_b}`: swap positions `a` and `b`, then
    /// re-sort the blocks.
    pub fn apply_transposition(&self, a: usize, b: usize) -> Result<Self> {
        let n = self.shape.n();
        for pos in [a, b] {
            if pos == 0 || pos > n {
                return Err(Error::OutOfRange { pos, n });
            }
        }
        let mut image = self.perm.as_slice().to_vec();
        image.swap(a - 1, b - 1);
        Ok(Self::minimize(&self.shape, image))
    }

    pub(crate) fn check_same_shape(&self, other: &CosetRep) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(
                self.shape.to_string(),
                other.shape.to_string(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.shape.k() {
            if j > 1 {
                f.write_str("|")?;
            }
            for (i, v) in self.block(j).iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
