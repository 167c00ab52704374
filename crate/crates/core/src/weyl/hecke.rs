use super::{CosetRep, FlagShape, Permutation};
use crate::error::{Error, Result};

/// Hecke product with a simple reflection: `p s_i` if that is longer, else `p`.
pub fn hecke_step(p: &Permutation, i: usize) -> Permutation {
    // l(p s_i) > l(p) exactly when p(i) < p(i+1)
    if p.get(i) < p.get(i + 1) {
        p.mul_simple(i)
    } else {
        p.clone()
    }
}

impl Permutation {
    /// Left fold of [`hecke_step`] over a word.
    pub fn hecke_word(&self, word: &[usize]) -> Permutation {
        word.iter().fold(self.clone(), |p, &i| hecke_step(&p, i))
    }

    /// The Hecke product `self · other`.
    pub fn hecke_product(&self, other: &Permutation) -> Permutation {
        self.hecke_word(&other.reduced_word())
    }
}

impl CosetRep {
    /// Acts on the right by the Hecke product of `word`, returning the
    /// minimal representative of the result. The result is Bruhat-above `self`.
    pub fn hecke_word_action(&self, word: &[usize]) -> Result<CosetRep> {
        let n = self.shape().n();
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::OutOfRange { pos: bad, n: n - 1 });
        }
        let lifted = self.perm().hecke_word(word);
        Ok(CosetRep::minimize(self.shape(), lifted.into_vec()))
    }
}

/// The palindromic word
/// `s_{i_{q-1}+1} s_{i_{q-1}+2} ... s_{i_t-1} ... s_{i_{q-1}+2} s_{i_{q-1}+1}`,
/// a reduced expression for the transposition of positions `i_{q-1}+1` and `i_t`.
pub fn reflection_word(shape: &FlagShape, q: usize, t: usize) -> Result<Vec<usize>> {
    if q == 0 || q >= t || t > shape.block_count() {
        return Err(Error::InvalidRimHook { q, t, max: shape.block_count() });
    }
    let lo = shape.bound(q - 1) + 1;
    let hi = shape.bound(t) - 1;
    Ok((lo..=hi).chain((lo..hi).rev()).collect())
}
