//! Combing of pure braids: the decomposition `ρ = β_2 β_3 ⋯ β_{n+1}` where
//! layer `β_k` is a word in the letters `A_{1,k}, …, A_{k-1,k}`.
//!
//! Layer `k` is the kernel part of forgetting strand `k`: it is recovered as
//! `ι(ρ̄)^{-1} ρ` and rewritten into `A`-letters by reading off the loop that
//! strand `k` traces around the lower punctures, computed with the Artin
//! action on the free group.

use super::{a_gen, BraidWord};
use crate::error::{Error, Result};

/// Layers of a combed pure braid; `layers[k-2]` is the `A_{j,k}`-word for
/// strand level `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombedForm {
    pub strands: usize,
    pub layers: Vec<Vec<(usize, i8)>>,
}

impl CombedForm {
    /// Expands the layers back into one braid word `β_2 ⋯ β_{n+1}`.
    pub fn to_braid_word(&self) -> BraidWord {
        let mut out = BraidWord::identity(self.strands);
        for (idx, layer) in self.layers.iter().enumerate() {
            let k = idx + 2;
            for &(j, sign) in layer {
                let a = a_gen(k, j, self.strands).expect("valid layer letter");
                let a = if sign >= 0 { a } else { a.inverse() };
                out = out.concat(&a).expect("same strand count");
            }
        }
        out
    }
}

/// Deletes the strand that starts at position `strand` (1-based) from the
/// word, reindexing the remaining letters. For pure braids this is the
/// strand-forgetting homomorphism.
pub fn forget_strand(b: &BraidWord, strand: usize) -> BraidWord {
    let mut pos = strand;
    let mut word = Vec::new();
    for &l in &b.word {
        let k = l.unsigned_abs() as usize;
        if k == pos {
            pos = k + 1;
        } else if k + 1 == pos {
            pos = k;
        } else if k > pos {
            word.push(l.signum() * (k as i32 - 1));
        } else {
            word.push(l);
        }
    }
    BraidWord { strands: b.strands - 1, word }
}

/// Image of the free generator `x_g` under the Artin action of the word,
/// as a reduced free word (letters `±x_i`).
fn artin_image(b: &BraidWord, g: usize) -> Vec<i32> {
    let mut expr = vec![g as i32];
    for &l in &b.word {
        let k = l.unsigned_abs() as usize;
        let mut next = Vec::with_capacity(expr.len() * 3);
        for &x in &expr {
            let xi = x.unsigned_abs() as usize;
            let image: Vec<i32> = if l > 0 {
                if xi == k {
                    vec![k as i32, (k + 1) as i32, -(k as i32)]
                } else if xi == k + 1 {
                    vec![k as i32]
                } else {
                    vec![xi as i32]
                }
            } else if xi == k {
                vec![(k + 1) as i32]
            } else if xi == k + 1 {
                vec![-((k + 1) as i32), k as i32, (k + 1) as i32]
            } else {
                vec![xi as i32]
            };
            if x > 0 {
                push_reduced(&mut next, image.iter().copied());
            } else {
                push_reduced(&mut next, image.iter().rev().map(|&v| -v));
            }
        }
        expr = next;
    }
    expr
}

fn push_reduced(out: &mut Vec<i32>, letters: impl Iterator<Item = i32>) {
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
}

/// Combs a pure braid into layers; the product of the layers equals the
/// input in the braid group.
pub fn comb(b: &BraidWord) -> Result<CombedForm> {
    if !b.is_pure() {
        return Err(Error::Braid("combing requires a pure braid".into()));
    }
    let mut layers_rev: Vec<Vec<(usize, i8)>> = Vec::new();
    let mut current = b.clone();
    for s in (2..=b.strands).rev() {
        let bar = forget_strand(&current, s);
        // ι(bar) uses letters < s-1, so it is also a word on s strands.
        let iota = BraidWord { strands: s, word: bar.word.clone() };
        let kappa = iota.inverse().concat(&current)?;
        let image = artin_image(&kappa, s);
        // A kernel element conjugates x_s by a word in the lower generators.
        let m = image.len();
        if m % 2 == 0 || image[m / 2] != s as i32 {
            return Err(Error::Braid(format!(
                "combing: strand {} image is not a conjugate of its generator",
                s
            )));
        }
        // Deleting strand s kills its generator: project the conjugator to
        // the lower free group before reading off the layer letters.
        let mut conjugator: Vec<i32> = Vec::new();
        push_reduced(
            &mut conjugator,
            image[..m / 2].iter().copied().filter(|l| l.unsigned_abs() as usize != s),
        );
        let mut layer = Vec::with_capacity(conjugator.len());
        for &l in &conjugator {
            let j = l.unsigned_abs() as usize;
            debug_assert!(j < s);
            layer.push((j, l.signum() as i8));
        }
        layers_rev.push(layer);
        current = bar;
    }
    layers_rev.reverse();
    Ok(CombedForm { strands: b.strands, layers: layers_rev })
}
