//! Braid words on `n+1` strands: linking numbers, the band generators, the
//! pure-braid generators `A_{i,j}`, Garside normal form, combing and
//! half-twist factorizations.

mod comb;
mod factor;
mod normal;

pub use comb::{comb, forget_strand, CombedForm};
pub use factor::{a_letter_word, claim_b_factor, factor_free_half_twists, factors_product, HalfTwistFactor};
pub use normal::{braid_equal, normal_form, NormalForm};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A word in the Artin generators: letter `+k` is `σ_k`, `-k` is `σ_k^{-1}`,
/// `1 <= k < strands`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    pub word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Braid("need at least 2 strands".into()));
        }
        for &l in &word {
            let k = l.unsigned_abs() as usize;
            if l == 0 || k >= strands {
                return Err(Error::Braid(format!("letter {} out of range for {} strands", l, strands)));
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, word: Vec::new() }
    }

    pub fn generator(strands: usize, k: usize, sign: i8) -> Self {
        debug_assert!(k >= 1 && k < strands);
        BraidWord { strands, word: vec![if sign >= 0 { k as i32 } else { -(k as i32) }] }
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            word: self.word.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::Braid(format!(
                "strand mismatch: {} vs {}",
                self.strands, other.strands
            )));
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(BraidWord { strands: self.strands, word })
    }

    pub fn power(&self, e: i64) -> Self {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut word = Vec::with_capacity(base.word.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            word.extend_from_slice(&base.word);
        }
        BraidWord { strands: self.strands, word }
    }

    /// The underlying permutation: `perm[i]` is the final position (0-based)
    /// of the strand starting at position `i`.
    pub fn permutation(&self) -> Vec<usize> {
        let s = self.strands;
        let mut occupant: Vec<usize> = (0..s).collect();
        for &l in &self.word {
            let k = l.unsigned_abs() as usize;
            occupant.swap(k - 1, k);
        }
        let mut perm = vec![0usize; s];
        for (pos, &strand) in occupant.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Half the signed count of crossings between strands `i` and `j`
    /// (1-based strand ids). For a pure braid this is an integer.
    pub fn linking(&self, i: usize, j: usize) -> Result<i64> {
        if !self.is_pure() {
            return Err(Error::Braid("linking numbers require a pure braid".into()));
        }
        if i == j || i < 1 || j < 1 || i > self.strands || j > self.strands {
            return Err(Error::Braid(format!("bad strand pair ({}, {})", i, j)));
        }
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        let mut signed = 0i64;
        for &l in &self.word {
            let k = l.unsigned_abs() as usize;
            let (u, v) = (occupant[k - 1] + 1, occupant[k] + 1);
            if (u, v) == (i, j) || (u, v) == (j, i) {
                signed += l.signum() as i64;
            }
            occupant.swap(k - 1, k);
        }
        debug_assert!(signed % 2 == 0, "pure braid has even crossing parity per pair");
        Ok(signed / 2)
    }

    /// Linking number of strand `i` around the distinguished last strand.
    pub fn epsilon_i(&self, i: usize) -> Result<i64> {
        self.linking(i, self.strands)
    }

    /// Total linking number: the sum of `epsilon_i` over `i <= n`.
    pub fn epsilon_total(&self) -> Result<i64> {
        let mut total = 0;
        for i in 1..self.strands {
            total += self.epsilon_i(i)?;
        }
        Ok(total)
    }
}

impl fmt::Display for BraidWord {
    /// Notation `n=3: [1,2,-1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}: [", self.strands)?;
        for (k, l) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, "]")
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let rest = text.strip_prefix("n=").ok_or_else(|| Error::parse("expected `n=`"))?;
        let (npart, wpart) = rest
            .split_once(':')
            .ok_or_else(|| Error::parse("expected `:` after strand count"))?;
        let strands: usize = npart
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad strand count `{}`", npart.trim())))?;
        let wpart = wpart.trim();
        let inner = wpart
            .strip_prefix('[')
            .and_then(|w| w.strip_suffix(']'))
            .ok_or_else(|| Error::parse("expected bracketed letter list"))?;
        let mut word = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            word.push(
                tok.parse::<i32>()
                    .map_err(|_| Error::parse(format!("bad letter `{}`", tok)))?,
            );
        }
        BraidWord::new(strands, word)
    }
}

/// The pure-braid generator `A_{i,j}` for `j < i`:
/// `σ_{i-1} … σ_{j+1} σ_j² σ_{j+1}^{-1} … σ_{i-1}^{-1}`.
pub fn a_gen(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
    if !(1 <= j && j < i && i <= strands) {
        return Err(Error::Braid(format!("A_{{{},{}}} needs 1 <= j < i <= strands", i, j)));
    }
    let mut word = Vec::new();
    for k in ((j + 1)..i).rev() {
        word.push(k as i32);
    }
    word.push(j as i32);
    word.push(j as i32);
    for k in (j + 1)..i {
        word.push(-(k as i32));
    }
    BraidWord::new(strands, word)
}

/// The band generator `σ_{i,j}` for `i < j`: the half twist exchanging `i`
/// and `j` along a band passing in front of the intermediate strands,
/// `σ_{j-1} … σ_{i+1} σ_i σ_{i+1}^{-1} … σ_{j-1}^{-1}`. The convention is the
/// one under which the conjugation identity below holds.
pub fn sigma_band(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= strands) {
        return Err(Error::Braid(format!("σ_{{{},{}}} needs 1 <= i < j <= strands", i, j)));
    }
    let mut word = Vec::new();
    for k in ((i + 1)..j).rev() {
        word.push(k as i32);
    }
    word.push(i as i32);
    for k in (i + 1)..j {
        word.push(-(k as i32));
    }
    BraidWord::new(strands, word)
}

/// Both sides of the conjugation identity
/// `A_{i,n+1}^k A_{j,n+1}^{-k} = σ_{i,n+1}^{2k} σ_{i,j}^{ε} σ_{i,n+1}^{-2k} σ_{i,j}^{-ε}`
/// with `n+1 = strands` and `ε = sign(j - i)`; both sides are equal in the
/// braid group. The disk of the inner half twist is pushed around the last
/// strand by the band on the positively powered pair; the handedness of the
/// inner twist and the choice of conjugating band are the stacking
/// convention under which the identity holds for the letter conventions used
/// here.
pub fn conjugation_identity(
    i: usize,
    j: usize,
    k: i64,
    strands: usize,
) -> Result<(BraidWord, BraidWord)> {
    let s = strands;
    if i == j || i >= s || j >= s || i < 1 || j < 1 {
        return Err(Error::Braid(format!("need distinct i, j <= n for strands {}", s)));
    }
    let lhs = a_gen(s, i, s)?.power(k).concat(&a_gen(s, j, s)?.power(-k))?;
    let (lo, hi) = (i.min(j), i.max(j));
    let band_ij = sigma_band(lo, hi, s)?;
    let mid = if i < j { band_ij.clone() } else { band_ij.inverse() };
    let band_in = sigma_band(i, s, s)?;
    let rhs = band_in
        .power(2 * k)
        .concat(&mid)?
        .concat(&band_in.power(-2 * k))?
        .concat(&mid.inverse())?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: usize, w: &[i32]) -> BraidWord {
        BraidWord::new(s, w.to_vec()).unwrap()
    }

    #[test]
    fn braid_relation_and_free_reduction() {
        assert!(braid_equal(&bw(3, &[1, 2, 1]), &bw(3, &[2, 1, 2])).unwrap());
        assert!(!braid_equal(&bw(3, &[1]), &bw(3, &[-1])).unwrap());
        assert!(braid_equal(&bw(3, &[1, -1]), &bw(3, &[])).unwrap());
        assert!(braid_equal(&bw(3, &[1, -1]), &BraidWord::identity(3)).unwrap());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(braid_equal(&bw(3, &[1]), &bw(4, &[1])).is_err());
    }

    #[test]
    fn a_gen_examples() {
        assert_eq!(a_gen(2, 1, 3).unwrap().word, vec![1, 1]);
        assert_eq!(a_gen(3, 1, 3).unwrap().word, vec![2, 1, 1, -2]);
        assert!(a_gen(1, 2, 3).is_err());
        for s in 2..=5 {
            for i in 2..=s {
                for j in 1..i {
                    assert!(a_gen(i, j, s).unwrap().is_pure());
                }
            }
        }
    }

    #[test]
    fn band_generator_examples() {
        // Adjacent strands give the plain Artin generator.
        assert_eq!(sigma_band(1, 2, 3).unwrap().word, vec![1]);
        assert_eq!(sigma_band(2, 3, 3).unwrap().word, vec![2]);
        // Permutation is the transposition of the support.
        let b = sigma_band(1, 3, 4).unwrap();
        assert_eq!(b.permutation(), vec![2, 1, 0, 3]);
        // The square of the band is the pure generator.
        let sq = b.concat(&b).unwrap();
        assert!(braid_equal(&sq, &a_gen(3, 1, 4).unwrap()).unwrap());
    }

    #[test]
    fn linking_of_a_generators() {
        // ε_k(A_{k,n+1}) = 1 for every k.
        for s in 3..=5 {
            for k in 1..s {
                let a = a_gen(s, k, s).unwrap();
                assert_eq!(a.epsilon_i(k).unwrap(), 1);
                assert_eq!(a.epsilon_total().unwrap(), 1);
            }
        }
        assert_eq!(BraidWord::identity(3).epsilon_total().unwrap(), 0);
    }

    #[test]
    fn linking_requires_pure_input() {
        assert!(bw(3, &[1]).linking(1, 2).is_err());
    }

    #[test]
    fn conjugation_identity_small_instance() {
        // Figure instance: i=1, j=2, k=2 on 3 strands.
        let (lhs, rhs) = conjugation_identity(1, 2, 2, 3).unwrap();
        assert!(braid_equal(&lhs, &rhs).unwrap());
        // k = 0 degenerates to the identity on both sides.
        let (lhs, rhs) = conjugation_identity(1, 2, 0, 3).unwrap();
        assert!(braid_equal(&lhs, &BraidWord::identity(3)).unwrap());
        assert!(braid_equal(&rhs, &BraidWord::identity(3)).unwrap());
    }

    #[test]
    fn braid_notation_round_trip() {
        let b = bw(3, &[1, 2, -1]);
        assert_eq!(b.to_string(), "n=3: [1,2,-1]");
        assert_eq!("n=3: [1,2,-1]".parse::<BraidWord>().unwrap(), b);
        assert!("n=3: [3]".parse::<BraidWord>().is_err());
    }
}
