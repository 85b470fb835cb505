//! Half-twist factorizations: writing pure braids as products of half twists
//! supported in disks disjoint from the distinguished last strand.

use super::{a_gen, comb, sigma_band, BraidWord};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A half twist `conjugator · σ_core^{sign} · conjugator^{-1}` whose
/// permutation is the transposition of `support` and whose disk avoids the
/// strand `avoid`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfTwistFactor {
    pub strands: usize,
    pub conjugator: Vec<i32>,
    pub core: usize,
    pub sign: i8,
    pub support: (usize, usize),
    pub avoid: usize,
}

impl HalfTwistFactor {
    pub fn elementary(strands: usize, m: usize, sign: i8, avoid: usize) -> Self {
        HalfTwistFactor { strands, conjugator: Vec::new(), core: m, sign, support: (m, m + 1), avoid }
    }

    /// The band half twist on the pair `lo < hi`, conjugated by `pre`.
    pub fn banded(strands: usize, pre: Vec<i32>, lo: usize, hi: usize, sign: i8, avoid: usize) -> Self {
        let mut conjugator = pre;
        for k in ((lo + 1)..hi).rev() {
            conjugator.push(k as i32);
        }
        HalfTwistFactor { strands, conjugator, core: lo, sign, support: (lo, hi), avoid }
    }

    pub fn to_word(&self) -> BraidWord {
        let mut word = self.conjugator.clone();
        word.push(if self.sign >= 0 { self.core as i32 } else { -(self.core as i32) });
        word.extend(self.conjugator.iter().rev().map(|&l| -l));
        BraidWord { strands: self.strands, word }
    }

    /// Signed crossing count of the given strand pair over the factor word.
    fn signed_crossings_between(word: &BraidWord, a: usize, b: usize) -> i64 {
        let mut occupant: Vec<usize> = (0..word.strands).collect();
        let mut total = 0i64;
        for &l in &word.word {
            let k = l.unsigned_abs() as usize;
            let (u, v) = (occupant[k - 1] + 1, occupant[k] + 1);
            if (u, v) == (a, b) || (u, v) == (b, a) {
                total += l.signum() as i64;
            }
            occupant.swap(k - 1, k);
        }
        total
    }

    /// Checks the defining invariants.
    pub fn validate(&self) -> Result<()> {
        let (a, b) = self.support;
        if a == self.avoid || b == self.avoid {
            return Err(Error::Braid("half twist support meets the avoided strand".into()));
        }
        let word = self.to_word();
        let perm = word.permutation();
        for i in 0..self.strands {
            let expect = if i + 1 == a {
                b - 1
            } else if i + 1 == b {
                a - 1
            } else {
                i
            };
            if perm[i] != expect {
                return Err(Error::Braid(format!(
                    "half twist permutation is not the transposition of {:?}",
                    self.support
                )));
            }
        }
        // Linking with the avoided strand vanishes; for the swapped pair
        // only the total over the orbit {a, b} is well defined.
        let pair_total = Self::signed_crossings_between(&word, self.avoid, a)
            + Self::signed_crossings_between(&word, self.avoid, b);
        if pair_total != 0 {
            return Err(Error::Braid("avoided strand winds around the support".into()));
        }
        for s in 1..=self.strands {
            if s != self.avoid
                && s != a
                && s != b
                && Self::signed_crossings_between(&word, self.avoid, s) != 0
            {
                return Err(Error::Braid("avoided strand has nonzero winding".into()));
            }
        }
        Ok(())
    }
}

/// Product word of a factor list.
pub fn factors_product(factors: &[HalfTwistFactor], strands: usize) -> BraidWord {
    let mut out = BraidWord::identity(strands);
    for f in factors {
        out = out.concat(&f.to_word()).expect("uniform strand count");
    }
    out
}

/// Factors a word in the letters `A_{i,n+1}` with vanishing total linking
/// into half twists supported away from strand `n+1`, by telescoping into
/// pairs `A_{i,n+1}^{K} A_{j,n+1}^{-K}` and applying the conjugation
/// identity to each pair.
pub fn claim_b_factor(letters: &[(usize, i8)], strands: usize) -> Result<Vec<HalfTwistFactor>> {
    let s = strands;
    for &(i, _) in letters {
        if i < 1 || i >= s {
            return Err(Error::Braid(format!("letter A_{{{},{}}} out of range", i, s)));
        }
    }
    if letters.iter().map(|&(_, e)| e as i64).sum::<i64>() != 0 {
        return Err(Error::Braid("total linking number must be trivial".into()));
    }
    // Merge adjacent letters with the same lower index into powers.
    let mut runs: Vec<(usize, i64)> = Vec::new();
    for &(i, e) in letters {
        match runs.last_mut() {
            Some((j, k)) if *j == i => *k += e as i64,
            _ => runs.push((i, e as i64)),
        }
    }
    runs.retain(|&(_, k)| k != 0);

    let mut out = Vec::new();
    let mut partial = 0i64;
    for t in 0..runs.len() {
        let (i, k) = runs[t];
        partial += k;
        if t + 1 == runs.len() {
            debug_assert_eq!(partial, 0);
            break;
        }
        let j = runs[t + 1].0;
        if partial == 0 || i == j {
            continue;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let eps: i8 = if i < j { 1 } else { -1 };
        let band_is = sigma_band(i, s, s)?;
        let pre = band_is.power(2 * partial).word;
        out.push(HalfTwistFactor::banded(s, pre, lo, hi, eps, s));
        out.push(HalfTwistFactor::banded(s, Vec::new(), lo, hi, -eps, s));
    }
    Ok(out)
}

/// Expands an `A_{i,n+1}`-letter list into a braid word.
pub fn a_letter_word(letters: &[(usize, i8)], strands: usize) -> Result<BraidWord> {
    let mut out = BraidWord::identity(strands);
    for &(i, e) in letters {
        let a = a_gen(strands, i, strands)?;
        let a = if e >= 0 { a } else { a.inverse() };
        out = out.concat(&a)?;
    }
    Ok(out)
}

/// Writes a pure braid as a product of half twists avoiding the last strand,
/// after absorbing the total linking into a power of the horizontal twist
/// `A_{n,n+1}`. Returns the factors and the absorbed exponent `t`: the factor
/// product equals `b · A_{n,n+1}^{-t}` in the braid group.
pub fn factor_free_half_twists(b: &BraidWord) -> Result<(Vec<HalfTwistFactor>, i64)> {
    if !b.is_pure() {
        return Err(Error::Braid("factorization requires a pure braid".into()));
    }
    let s = b.strands;
    let t = b.epsilon_total()?;
    let horizontal = a_gen(s, s - 1, s)?;
    let corrected = b.concat(&horizontal.power(-t))?;
    debug_assert_eq!(corrected.epsilon_total()?, 0);

    let combed = comb(&corrected)?;
    let mut out = Vec::new();
    for (idx, layer) in combed.layers.iter().enumerate() {
        let k = idx + 2;
        if k < s {
            // Supported on strands 1..n: expand into elementary generators.
            for &(j, sign) in layer {
                let a = a_gen(k, j, s)?;
                let word = if sign >= 0 { a } else { a.inverse() };
                for &l in &word.word {
                    out.push(HalfTwistFactor::elementary(s, l.unsigned_abs() as usize, l.signum() as i8, s));
                }
            }
        } else {
            let letters: Vec<(usize, i8)> = layer.iter().map(|&(j, e)| (j, e)).collect();
            out.extend(claim_b_factor(&letters, s)?);
        }
    }
    Ok((out, t))
}
