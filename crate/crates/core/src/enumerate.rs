//! Exhaustive generation and classification of all canonical diagrams for a
//! given orbit count.
//!
//! Words that differ only by permutations inside adjacency blocks describe
//! the same class; since swapping two same-sign ends toggles exactly that
//! pair's crossing, the crossing-minimal representatives are the words in
//! which no crossing pair shares a block. Enumeration keeps exactly those,
//! deduplicated by canonical form.

use crate::diagram::{Diagram, Endpoint, Sign};
use crate::error::{Error, Result};
use crate::walls::{compute_walls, irreducible_constraints, DiagramWithWalls};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Classification outcome for one diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// All orbit-carrying areas are translation areas: realized by exactly
    /// one class, a flow.
    #[serde(rename = "Determinant-Flow")]
    DeterminantFlow,
    /// Some area is irreducible and satisfies all combinatorial constraints:
    /// realized by infinitely many classes.
    NonDeterminant,
    /// The decomposition contradicts the constraints on irreducible areas;
    /// no class realizes the word (or realizability is not decided here).
    Unconstrained,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::DeterminantFlow => write!(f, "Determinant-Flow"),
            Verdict::NonDeterminant => write!(f, "NonDeterminant"),
            Verdict::Unconstrained => write!(f, "Unconstrained"),
        }
    }
}

/// All canonical crossing-minimal diagrams with `r` orbits, in lexicographic
/// order. Deterministic across runs.
pub fn enumerate_diagrams(r: u32) -> Result<Vec<Diagram>> {
    if r < 1 {
        return Err(Error::InvalidDiagram("orbit count must be at least 1".into()));
    }
    let n = 2 * r as usize;
    let mut found: BTreeSet<Vec<Endpoint>> = BTreeSet::new();
    let mut signs = vec![Sign::Minus; n];
    gen_signs(&mut signs, 1, r as usize - 1, r as usize, &mut |signs| {
        let minus_pos: Vec<usize> =
            (0..n).filter(|&k| signs[k] == Sign::Minus).collect();
        let plus_pos: Vec<usize> = (0..n).filter(|&k| signs[k] == Sign::Plus).collect();
        let mut assign: Vec<usize> = (0..r as usize).collect();
        permute(&mut assign, 0, &mut |perm| {
            let mut cyc = vec![Endpoint::minus(1); n];
            for (orbit0, &mp) in minus_pos.iter().enumerate() {
                cyc[mp] = Endpoint::minus(orbit0 as u32 + 1);
            }
            for (orbit0, &pi) in perm.iter().enumerate() {
                cyc[plus_pos[pi]] = Endpoint::plus(orbit0 as u32 + 1);
            }
            let d = Diagram::new(r, cyc).expect("constructed word is valid");
            if d.is_crossing_minimal() {
                found.insert(d.canonical_form().endpoints().to_vec());
            }
        });
    });
    Ok(found
        .into_iter()
        .map(|cyc| Diagram::new(r, cyc).expect("canonical word is valid"))
        .collect())
}

fn gen_signs(
    signs: &mut Vec<Sign>,
    pos: usize,
    minus_left: usize,
    plus_left: usize,
    emit: &mut impl FnMut(&[Sign]),
) {
    if pos == signs.len() {
        emit(signs);
        return;
    }
    if minus_left > 0 {
        signs[pos] = Sign::Minus;
        gen_signs(signs, pos + 1, minus_left - 1, plus_left, emit);
    }
    if plus_left > 0 {
        signs[pos] = Sign::Plus;
        gen_signs(signs, pos + 1, minus_left, plus_left - 1, emit);
    }
}

fn permute(items: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        emit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, emit);
        items.swap(k, i);
    }
}

/// One classified diagram.
#[derive(Debug, Clone)]
pub struct Classified {
    pub dw: DiagramWithWalls,
    pub verdict: Verdict,
}

/// Classifies a single canonical diagram from its wall decomposition.
pub fn classify(d: &Diagram) -> Classified {
    let dw = compute_walls(d);
    let mut verdict = Verdict::DeterminantFlow;
    for area in dw.irreducible_areas() {
        if irreducible_constraints(d, area).is_empty() {
            if verdict == Verdict::DeterminantFlow {
                verdict = Verdict::NonDeterminant;
            }
        } else {
            verdict = Verdict::Unconstrained;
        }
    }
    Classified { dw, verdict }
}

/// Enumerates and classifies every diagram with `r` orbits.
pub fn classify_all(r: u32) -> Result<Vec<Classified>> {
    Ok(enumerate_diagrams(r)?.iter().map(classify).collect())
}

/// One line of the machine-readable enumeration report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub diagram: String,
    pub rprime: u32,
    pub crossings: Vec<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walls: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<bool>,
}

impl DiagramRecord {
    pub fn bare(d: &Diagram) -> Self {
        DiagramRecord {
            diagram: d.to_string(),
            rprime: d.adjacency_profile().r_prime(),
            crossings: d.crossings().into_iter().map(|(i, j)| [i, j]).collect(),
            walls: None,
            verdict: None,
            forbidden: None,
        }
    }

    pub fn classified(c: &Classified) -> Self {
        let mut rec = Self::bare(&c.dw.diagram);
        rec.walls = Some(c.dw.walls_notation());
        rec.verdict = Some(c.verdict);
        rec
    }
}
