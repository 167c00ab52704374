use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation: `image[i-1] = p(i)`.
///
/// Right multiplication by a simple reflection `s_i` swaps the entries in
/// positions `i` and `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    /// The simple reflection `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.image.swap(i - 1, i);
        p
    }

    /// The transposition exchanging positions `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.image.swap(a - 1, b - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `p(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.image
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.image;
        let mut inv = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                if p[a] > p[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Ordinary composition `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation {
            image: other.image.iter().map(|&x| self.image[x - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { image: inv }
    }

    /// `self * s_i` (ordinary product).
    pub fn mul_simple(&self, i: usize) -> Permutation {
        let mut image = self.image.clone();
        image.swap(i - 1, i);
        Permutation { image }
    }

    /// `s_{w_1} s_{w_2} ... s_{w_m}` as an ordinary product.
    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        let mut p = Permutation::identity(n);
        for &i in word {
            p.image.swap(i - 1, i);
        }
        p
    }

    /// A reduced word for `self`, produced by bubble-sorting the one-line
    /// notation. Its length equals [`Permutation::length`].
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.image.clone();
        let mut sorting = Vec::with_capacity(self.length());
        // p * s_{i_1} * ... * s_{i_m} = id, each step removing one inversion
        loop {
            let mut swapped = false;
            for i in 0..p.len().saturating_sub(1) {
                if p[i] > p[i + 1] {
                    p.swap(i, i + 1);
                    sorting.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        sorting.reverse();
        sorting
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Bruhat order on `S_n`: `u <= v` iff for every prefix length `a` the sorted
/// values `u(1..=a)` are entrywise at most the sorted values `v(1..=a)`.
///
/// Permutations of different degree are never comparable.
pub fn bruhat_leq_full(u: &Permutation, v: &Permutation) -> bool {
    if u.n() != v.n() {
        return false;
    }
    let n = u.n();
    let mut su: Vec<usize> = Vec::with_capacity(n);
    let mut sv: Vec<usize> = Vec::with_capacity(n);
    for a in 0..n {
        let x = u.image[a];
        let y = v.image[a];
        su.insert(su.partition_point(|&z| z < x), x);
        sv.insert(sv.partition_point(|&z| z < y), y);
        if su.iter().zip(&sv).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}
