use super::{CosetRep, FlagShape, Permutation};

/// Iterates over every coset of a shape in lexicographic order of the block
/// notation. The first item is the identity.
#[derive(Clone, Debug)]
pub struct CosetIter {
    shape: FlagShape,
    current: Option<Vec<usize>>,
    started: bool,
}

impl CosetIter {
    pub fn new(shape: &FlagShape) -> Self {
        CosetIter {
            shape: shape.clone(),
            current: Some((1..=shape.n()).collect()),
            started: false,
        }
    }

    fn advance(&mut self) {
        let Some(image) = self.current.as_mut() else { return };
        let shape = &self.shape;
        let n = shape.n();
        for j in (1..=shape.k()).rev() {
            let start = shape.bound(j - 1);
            let size = shape.block_size(j);
            let mut used = vec![false; n + 1];
            for &v in &image[..start] {
                used[v] = true;
            }
            let avail: Vec<usize> = (1..=n).filter(|&v| !used[v]).collect();
            let mut idx: Vec<usize> = image[start..start + size]
                .iter()
                .map(|v| avail.binary_search(v).expect("block value is available"))
                .collect();
            let m = avail.len();
            let Some(i) = (0..size).rev().find(|&i| idx[i] < m - size + i) else {
                continue;
            };
            idx[i] += 1;
            for l in i + 1..size {
                idx[l] = idx[l - 1] + 1;
            }
            for (slot, &ix) in idx.iter().enumerate() {
                image[start + slot] = avail[ix];
                used[avail[ix]] = true;
            }
            // later blocks take the smallest remaining values
            let rest: Vec<usize> = (1..=n).filter(|&v| !used[v]).collect();
            image[start + size..].copy_from_slice(&rest);
            return;
        }
        self.current = None;
    }
}

impl Iterator for CosetIter {
    type Item = CosetRep;

    fn next(&mut self) -> Option<CosetRep> {
        if self.started {
            self.advance();
        }
        self.started = true;
        let image = self.current.as_ref()?.clone();
        Some(CosetRep::new(&self.shape, Permutation::from_vec_unchecked(image)).expect("enumerated coset is minimal"))
    }
}

impl FlagShape {
    /// Every element of `W^P` exactly once, in lexicographic block order.
    pub fn cosets(&self) -> CosetIter {
        CosetIter::new(self)
    }
}
