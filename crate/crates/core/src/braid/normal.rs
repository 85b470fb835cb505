//! Garside left-normal form with permutation-braid factors; decides the word
//! problem exactly.

use super::BraidWord;
use crate::error::{Error, Result};

type Perm = Vec<usize>;

fn id(s: usize) -> Perm {
    (0..s).collect()
}

fn is_id(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// `a` then `b`.
fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&v| b[v]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &v) in a.iter().enumerate() {
        out[v] = i;
    }
    out
}

/// Longest element: the half twist Δ as a permutation.
fn w0(s: usize) -> Perm {
    (0..s).rev().collect()
}

fn transposition(s: usize, k: usize) -> Perm {
    let mut p = id(s);
    p.swap(k - 1, k);
    p
}

fn inv_count(p: &Perm) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

/// Crossing-set containment: the prefix order on permutation braids.
fn prefix_le(x: &Perm, y: &Perm) -> bool {
    let n = x.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if x[i] > x[j] && y[i] <= y[j] {
                return false;
            }
        }
    }
    true
}

/// Greatest common prefix of two permutation braids (meet in the lattice),
/// computed by greedy ascent along the covering relations.
fn meet(a: &Perm, b: &Perm) -> Perm {
    let s = a.len();
    let mut m = id(s);
    let mut len = 0usize;
    loop {
        let mut progressed = false;
        for k in 1..s {
            let cand = compose(&m, &transposition(s, k));
            let cl = inv_count(&cand);
            if cl == len + 1 && prefix_le(&cand, a) && prefix_le(&cand, b) {
                m = cand;
                len = cl;
                progressed = true;
            }
        }
        if !progressed {
            return m;
        }
    }
}

/// The right complement `∂A = A^{-1} Δ`.
fn complement(a: &Perm) -> Perm {
    compose(&inverse(a), &w0(a.len()))
}

/// Conjugation by Δ.
fn tau(f: &Perm, s: usize) -> Perm {
    let d = w0(s);
    compose(&compose(&d, f), &d)
}

/// Garside left-normal form `Δ^inf · f_1 ⋯ f_m` with left-weighted
/// permutation-braid factors strictly between the identity and Δ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub strands: usize,
    pub inf: i64,
    pub factors: Vec<Vec<usize>>,
}

pub fn normal_form(b: &BraidWord) -> NormalForm {
    let s = b.strands;
    let mut inf: i64 = 0;
    let mut factors: Vec<Perm> = Vec::new();
    for &l in &b.word {
        let k = l.unsigned_abs() as usize;
        if l > 0 {
            factors.push(transposition(s, k));
        } else {
            inf -= 1;
            for f in factors.iter_mut() {
                *f = tau(f, s);
            }
            factors.push(compose(&w0(s), &transposition(s, k)));
        }
    }

    // Left-weight the factor list.
    let cap = (factors.len() + 2) * (factors.len() + 2);
    let mut passes = 0;
    loop {
        factors.retain(|f| !is_id(f));
        let mut changed = false;
        for i in (0..factors.len().saturating_sub(1)).rev() {
            let t = meet(&complement(&factors[i]), &factors[i + 1]);
            if !is_id(&t) {
                factors[i] = compose(&factors[i], &t);
                factors[i + 1] = compose(&inverse(&t), &factors[i + 1]);
                changed = true;
            }
        }
        if !changed {
            break;
        }
        passes += 1;
        assert!(passes <= cap, "normal form failed to stabilize");
    }
    factors.retain(|f| !is_id(f));
    while factors.first().map_or(false, |f| *f == w0(s)) {
        factors.remove(0);
        inf += 1;
    }
    NormalForm { strands: s, inf, factors }
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// A positive word for a permutation-braid factor.
    pub fn factor_word(factor: &[usize]) -> Vec<i32> {
        let mut w = factor.to_vec();
        let mut out = Vec::new();
        loop {
            let mut k = None;
            for i in 1..w.len() {
                if w[i - 1] > w[i] {
                    k = Some(i);
                    break;
                }
            }
            match k {
                None => break,
                Some(i) => {
                    out.push(i as i32);
                    let s = w.len();
                    w = compose(&transposition(s, i), &w);
                }
            }
        }
        out
    }

    /// Expands the normal form back into a braid word.
    pub fn to_word(&self) -> BraidWord {
        let s = self.strands;
        let delta = Self::factor_word(&w0(s));
        let mut word = Vec::new();
        for _ in 0..self.inf.unsigned_abs() {
            if self.inf >= 0 {
                word.extend_from_slice(&delta);
            } else {
                word.extend(delta.iter().rev().map(|&l| -l));
            }
        }
        for f in &self.factors {
            word.extend(Self::factor_word(f));
        }
        BraidWord { strands: s, word }
    }
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "inf={}; factors=", self.inf)?;
        if self.factors.is_empty() {
            write!(f, "[]")?;
        }
        for fac in &self.factors {
            let letters = NormalForm::factor_word(fac)
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            write!(f, "[{}]", letters)?;
        }
        Ok(())
    }
}

/// Whether two words represent the same element of the braid group.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands != b.strands {
        return Err(Error::Braid(format!(
            "strand mismatch: {} vs {}",
            a.strands, b.strands
        )));
    }
    Ok(normal_form(a) == normal_form(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meet_agrees_with_brute_force_on_s4() {
        // Enumerate S_4 and check the greedy meet against the lattice
        // definition (maximal common lower bound in the prefix order).
        let mut perms: Vec<Perm> = Vec::new();
        let mut items: Vec<usize> = (0..4).collect();
        permutations(&mut items, 0, &mut perms);
        for a in &perms {
            for b in &perms {
                let m = meet(a, b);
                let mut best: Option<&Perm> = None;
                for c in &perms {
                    if prefix_le(c, a) && prefix_le(c, b) {
                        if best.map_or(true, |x| inv_count(c) > inv_count(x)) {
                            best = Some(c);
                        }
                    }
                }
                assert_eq!(&m, best.unwrap());
            }
        }
    }

    fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permutations(items, k + 1, out);
            items.swap(k, i);
        }
    }

    #[test]
    fn delta_cubed_relation() {
        // σ1σ2σ1 is the Garside element of B_3.
        let b = BraidWord::new(3, vec![1, 2, 1]).unwrap();
        let nf = normal_form(&b);
        assert_eq!(nf.inf, 1);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn normal_form_round_trips_through_words() {
        for word in [vec![1, 2, -1, 2, 2], vec![-1, -2, -1], vec![2, 2, 1, -2, 1]] {
            let b = BraidWord::new(3, word).unwrap();
            let nf = normal_form(&b);
            let back = nf.to_word();
            assert_eq!(normal_form(&back), nf);
        }
    }

    #[test]
    fn inverse_cancels() {
        let b = BraidWord::new(4, vec![1, 2, 3, -1, 2]).unwrap();
        let e = b.concat(&b.inverse()).unwrap();
        assert!(normal_form(&e).is_identity());
    }
}
