//! Planarization of a diagram: the disk with arrow chords, crossings and the
//! induced face structure.
//!
//! Arrows are chords of the disk between their two endpoint positions; two
//! arrows whose endpoints interleave cross in exactly one interior vertex.
//! Connected groups of mutually crossing arrows attach to the boundary circle
//! at their endpoint set, so the complement components that touch the
//! boundary are classified by one boundary arc per group ("welded groups" of
//! different crossing components never interleave, which makes the arc
//! structure laminar). Pocket faces enclosed by ≥ 3 pairwise crossing arrows
//! touch no boundary gap; they are accounted for by the Euler relation.

use crate::diagram::Diagram;
use std::collections::BTreeSet;

/// Face structure of the planarized diagram disk.
///
/// Gaps are the boundary arcs `g0..g_{2r-1}`, gap `k` lying between
/// consecutive endpoints `k` and `k+1 (mod 2r)`. Each gap borders exactly one
/// interior face.
#[derive(Debug, Clone)]
pub struct FaceComplex {
    n: usize,
    crossings: Vec<(u32, u32)>,
    /// Interior face id bordered by each gap.
    gap_face: Vec<usize>,
    /// Total number of interior faces (boundary faces plus pockets).
    interior_faces: usize,
}

/// Builds the face complex by rotation-system bookkeeping on the welded
/// crossing groups. Faces are numbered deterministically: boundary-touching
/// faces in order of their least gap, pockets afterwards.
pub fn planarize(d: &Diagram) -> FaceComplex {
    let n = d.len();
    let crossings: Vec<(u32, u32)> = d.crossings().into_iter().collect();
    let groups = d.crossing_groups();

    // Signature of a gap: for every group, the index of the boundary arc
    // (between consecutive group endpoints) the gap lies on. Two gaps border
    // the same face iff their signatures agree.
    let mut arcs_per_group: Vec<Vec<usize>> = Vec::new();
    for group in &groups {
        let mut positions: Vec<usize> = Vec::new();
        for e in d.endpoints().iter().enumerate() {
            if group.contains(&e.1.orbit) {
                positions.push(e.0);
            }
        }
        positions.sort_unstable();
        // Arc index of gap k: which consecutive pair of group positions it
        // falls between.
        let mut arc_of_gap = vec![0usize; n];
        for (gap, arc) in arc_of_gap.iter_mut().enumerate() {
            // gap k sits between endpoint k and k+1; find the arc containing
            // the circle point "k + 1/2": the one after the largest group
            // position <= k, wrapping around when there is none.
            let mut idx = positions.len() - 1;
            for (a, &p) in positions.iter().enumerate() {
                if p <= gap {
                    idx = a;
                }
            }
            *arc = idx;
        }
        arcs_per_group.push(arc_of_gap);
    }

    let mut signatures: Vec<Vec<usize>> = vec![Vec::new(); n];
    for arc_of_gap in &arcs_per_group {
        for (gap, sig) in signatures.iter_mut().enumerate() {
            sig.push(arc_of_gap[gap]);
        }
    }

    let mut gap_face = vec![usize::MAX; n];
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for gap in 0..n {
        let sig = &signatures[gap];
        match seen.iter().position(|s| s == sig) {
            Some(f) => gap_face[gap] = f,
            None => {
                gap_face[gap] = seen.len();
                seen.push(sig.clone());
            }
        }
    }

    // Euler: V = n + X, E = n + C + 2X, connected complex on the sphere gives
    // F = 2 + C + X with the outer face included.
    let c = d.r() as usize;
    let x = crossings.len();
    let interior_faces = 1 + c + x;
    assert!(
        seen.len() <= interior_faces,
        "boundary faces exceed Euler count: diagram {}",
        d
    );

    FaceComplex { n, crossings, gap_face, interior_faces }
}

impl FaceComplex {
    pub fn gap_count(&self) -> usize {
        self.n
    }

    pub fn interior_face_count(&self) -> usize {
        self.interior_faces
    }

    /// Number of interior faces with at least one boundary gap.
    pub fn boundary_face_count(&self) -> usize {
        self.gap_face.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn face_of_gap(&self, gap: usize) -> usize {
        self.gap_face[gap]
    }

    pub fn crossing_vertices(&self) -> &[(u32, u32)] {
        &self.crossings
    }

    /// Gaps bordering the given face, in circular order.
    pub fn gaps_of_face(&self, face: usize) -> Vec<usize> {
        (0..self.n).filter(|&g| self.gap_face[g] == face).collect()
    }
}
