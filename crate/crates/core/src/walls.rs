//! Reducing chords, walls and the stable-area decomposition of a diagram.
//!
//! A reducing chord is a proper chord of the diagram disk, disjoint from the
//! arrows, whose two sides each contain at least one whole orbit. Its isotopy
//! class is the pair of boundary gaps it joins together with its face route,
//! and it exists exactly when both gaps border the same face.
//!
//! Walls are the chords that survive for every mapping class realizing the
//! diagram. A pair of orbits that is neither backward nor forward adjacent,
//! whose relative order does not alternate, and that can be fenced off with
//! one orbit on each outer side supports classes (products of a flow with
//! free half twists on the pair) for which every chord separating the pair
//! fails to be reducing. Filtering those chords out and then keeping the
//! chords disjoint from all remaining ones yields the wall set; its
//! complement splits into translation areas, irreducible areas and areas
//! without orbits.

use crate::diagram::{Diagram, Sign};
use crate::error::{Error, Result};
use crate::face::{planarize, FaceComplex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A reducing chord class: the two boundary gaps it joins and its face route.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Wall {
    /// Gap indices, stored with `gaps.0 < gaps.1`.
    pub gaps: (usize, usize),
    /// Faces traversed; a chord disjoint from the arrows stays in one face.
    pub route: Vec<usize>,
    /// Orbits strictly inside the arc from `gaps.0` to `gaps.1`.
    pub inside: BTreeSet<u32>,
}

impl Wall {
    /// True iff the chord puts `x` and `y` on opposite sides.
    pub fn separates(&self, x: u32, y: u32) -> bool {
        self.inside.contains(&x) != self.inside.contains(&y)
    }

    fn interval(&self) -> (usize, usize) {
        // Endpoint positions gaps.0+1 ..= gaps.1 lie inside.
        (self.gaps.0 + 1, self.gaps.1)
    }

    pub fn notation(&self) -> String {
        let route = self
            .route
            .iter()
            .map(|f| format!("f{}", f))
            .collect::<Vec<_>>()
            .join(".");
        format!("(g{},g{};{})", self.gaps.0, self.gaps.1, route)
    }
}

/// All reducing chord classes of the diagram, in deterministic order.
pub fn reducing_chords(d: &Diagram) -> Vec<Wall> {
    let fc = planarize(d);
    reducing_chords_in(d, &fc)
}

fn reducing_chords_in(d: &Diagram, fc: &FaceComplex) -> Vec<Wall> {
    let n = d.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if fc.face_of_gap(a) != fc.face_of_gap(b) {
                continue;
            }
            let inside = orbits_in_arc(d, a, b);
            if inside.is_empty() || inside.len() == d.r() as usize {
                continue;
            }
            debug_assert!(is_whole(d, &inside), "chord through a face splits an orbit");
            out.push(Wall { gaps: (a, b), route: vec![fc.face_of_gap(a)], inside });
        }
    }
    out
}

fn orbits_in_arc(d: &Diagram, gap_a: usize, gap_b: usize) -> BTreeSet<u32> {
    // Endpoints at positions gap_a+1 ..= gap_b; keep orbits with both ends there.
    let mut count = std::collections::BTreeMap::new();
    for p in (gap_a + 1)..=gap_b {
        *count.entry(d.endpoints()[p].orbit).or_insert(0u32) += 1;
    }
    count.into_iter().filter(|&(_, c)| c == 2).map(|(o, _)| o).collect()
}

fn is_whole(d: &Diagram, orbits: &BTreeSet<u32>) -> bool {
    // Complement side must also consist of whole orbits.
    let mut count = std::collections::BTreeMap::new();
    for e in d.endpoints() {
        if !orbits.contains(&e.orbit) {
            *count.entry(e.orbit).or_insert(0u32) += 1;
        }
    }
    count.values().all(|&c| c == 2)
}

/// Two chord classes admit disjoint representatives iff they lie in distinct
/// faces or their gap pairs do not strictly interleave around the circle.
pub fn chords_disjoint(w1: &Wall, w2: &Wall, _fc: &FaceComplex) -> bool {
    if w1.route != w2.route {
        return true;
    }
    let (a1, b1) = w1.gaps;
    let (a2, b2) = w2.gaps;
    if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
        return true; // shared gap: parallel copies slide apart
    }
    let in1 = |g: usize| g > a1 && g < b1;
    in1(a2) == in1(b2)
}

/// The kind of a stable area per the trichotomy: translation areas,
/// irreducible areas, and areas without orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AreaKind {
    Translation,
    Irreducible,
    Empty,
}

/// A connected component of the disk minus the walls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableArea {
    pub orbits: BTreeSet<u32>,
    /// Indices into the wall list of the bounding walls.
    pub boundary: BTreeSet<usize>,
    pub kind: AreaKind,
}

/// A diagram together with its wall set and stable-area decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramWithWalls {
    pub diagram: Diagram,
    pub walls: Vec<Wall>,
    pub areas: Vec<StableArea>,
}

/// Orbit pairs that support free-half-twist products with an irreducible area
/// between two fenced-off sides.
pub fn capable_pairs(d: &Diagram) -> Vec<(u32, u32)> {
    let cuts = reducing_chords(d);
    let fc = planarize(d);
    let mut out = Vec::new();
    for x in 1..=d.r() {
        for y in (x + 1)..=d.r() {
            if pair_is_capable(d, &cuts, &fc, x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

fn pair_is_capable(d: &Diagram, cuts: &[Wall], fc: &FaceComplex, x: u32, y: u32) -> bool {
    let set: BTreeSet<u32> = [x, y].into_iter().collect();
    if d.ends_in_one_block(&set, Sign::Minus) || d.ends_in_one_block(&set, Sign::Plus) {
        return false;
    }
    if relative_alternates(d, &set) {
        return false;
    }
    // Two disjoint fences, neither separating the pair, with exactly the pair
    // in the middle and at least one orbit on each outer side.
    let keep: Vec<&Wall> = cuts.iter().filter(|c| !c.separates(x, y)).collect();
    for (i, c1) in keep.iter().enumerate() {
        for c2 in keep.iter().skip(i + 1) {
            if !chords_disjoint(c1, c2, fc) {
                continue;
            }
            let (outer1, outer2, middle) = three_regions(d, c1, c2);
            if middle == set && !outer1.is_empty() && !outer2.is_empty() {
                return true;
            }
        }
    }
    false
}

/// Orbit contents of the three regions cut off by two disjoint chords.
fn three_regions(d: &Diagram, c1: &Wall, c2: &Wall) -> (BTreeSet<u32>, BTreeSet<u32>, BTreeSet<u32>) {
    let all: BTreeSet<u32> = (1..=d.r()).collect();
    let (s1, e1) = c1.interval();
    let (s2, e2) = c2.interval();
    let nested12 = s1 <= s2 && e2 <= e1;
    let nested21 = s2 <= s1 && e1 <= e2;
    let (outer1, outer2) = if nested12 {
        (all.difference(&c1.inside).copied().collect::<BTreeSet<u32>>(), c2.inside.clone())
    } else if nested21 {
        (c1.inside.clone(), all.difference(&c2.inside).copied().collect())
    } else {
        (c1.inside.clone(), c2.inside.clone())
    };
    let middle: BTreeSet<u32> =
        all.difference(&outer1).copied().collect::<BTreeSet<u32>>().difference(&outer2).copied().collect();
    (outer1, outer2, middle)
}

/// Whether the orbits of `set` alternate in the diagram induced on them.
pub fn relative_alternates(d: &Diagram, set: &BTreeSet<u32>) -> bool {
    let sub: Vec<Sign> = d
        .endpoints()
        .iter()
        .filter(|e| set.contains(&e.orbit))
        .map(|e| e.sign)
        .collect();
    let m = sub.len();
    (0..m).all(|k| sub[k] != sub[(k + 1) % m])
}

/// Wall set of the diagram as a conjugacy invariant shared by every class
/// realizing it: chords separating a capable pair are discarded (a free half
/// twist on the pair obstructs them), then only chords disjoint from every
/// remaining chord are kept.
pub fn compute_walls(d: &Diagram) -> DiagramWithWalls {
    let protected = capable_pairs(d).into_iter().next();
    walls_with_protection(d, protected)
}

/// Wall set seen by a flow realizing the diagram: every reducing chord is a
/// reducing line of the flow, so nothing is discarded beforehand.
pub fn flow_walls(d: &Diagram) -> DiagramWithWalls {
    walls_with_protection(d, None)
}

pub fn walls_with_protection(d: &Diagram, protected: Option<(u32, u32)>) -> DiagramWithWalls {
    let fc = planarize(d);
    let cuts = reducing_chords_in(d, &fc);
    let surviving: Vec<Wall> = cuts
        .into_iter()
        .filter(|c| protected.map_or(true, |(x, y)| !c.separates(x, y)))
        .collect();
    let mut walls: Vec<Wall> = surviving
        .iter()
        .filter(|c| surviving.iter().all(|o| chords_disjoint(c, o, &fc)))
        .cloned()
        .collect();
    walls.sort();
    let areas = areas_of(d, &walls);
    DiagramWithWalls { diagram: d.clone(), walls, areas }
}

/// Splits the disk along the (pairwise disjoint, hence laminar) walls and
/// labels each region by the trichotomy.
fn areas_of(d: &Diagram, walls: &[Wall]) -> Vec<StableArea> {
    let nw = walls.len();
    // parent[i] = index of the smallest wall interval properly containing i.
    let mut parent: Vec<Option<usize>> = vec![None; nw];
    for i in 0..nw {
        let (si, ei) = walls[i].interval();
        let mut best: Option<usize> = None;
        for j in 0..nw {
            if i == j {
                continue;
            }
            let (sj, ej) = walls[j].interval();
            if sj <= si && ei <= ej && (sj, ej) != (si, ei) {
                if best.map_or(true, |b| {
                    let (sb, eb) = walls[b].interval();
                    (ej - sj) < (eb - sb)
                }) {
                    best = Some(j);
                }
            }
        }
        parent[i] = best;
    }

    // Assign each orbit to the smallest wall interval containing it.
    let mut region_orbits: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); nw + 1]; // last = root
    for orbit in 1..=d.r() {
        let p = d.position(crate::diagram::Endpoint::minus(orbit));
        let q = d.position(crate::diagram::Endpoint::plus(orbit));
        let mut best: Option<usize> = None;
        for (i, w) in walls.iter().enumerate() {
            let (s, e) = w.interval();
            if s <= p && p <= e {
                debug_assert!(s <= q && q <= e, "wall splits an orbit");
                if best.map_or(true, |b| {
                    let (sb, eb) = walls[b].interval();
                    (e - s) < (eb - sb)
                }) {
                    best = Some(i);
                }
            }
        }
        match best {
            Some(i) => region_orbits[i].insert(orbit),
            None => region_orbits[nw].insert(orbit),
        };
    }

    let mut areas = Vec::new();
    for i in 0..=nw {
        let mut boundary = BTreeSet::new();
        if i < nw {
            boundary.insert(i);
            for (j, p) in parent.iter().enumerate() {
                if *p == Some(i) {
                    boundary.insert(j);
                }
            }
        } else {
            for (j, p) in parent.iter().enumerate() {
                if p.is_none() {
                    boundary.insert(j);
                }
            }
        }
        let orbits = region_orbits[i].clone();
        let kind = if orbits.is_empty() {
            AreaKind::Empty
        } else if d.ends_in_one_block(&orbits, Sign::Minus) && d.ends_in_one_block(&orbits, Sign::Plus)
        {
            AreaKind::Translation
        } else {
            AreaKind::Irreducible
        };
        areas.push(StableArea { orbits, boundary, kind });
    }
    areas.sort_by(|a, b| a.orbits.cmp(&b.orbits).then(a.boundary.cmp(&b.boundary)));
    areas
}

impl DiagramWithWalls {
    /// Rebuilds the decomposition induced by an explicit wall set.
    pub fn from_walls(diagram: Diagram, walls: Vec<Wall>) -> Self {
        let mut walls = walls;
        walls.sort();
        let areas = areas_of(&diagram, &walls);
        DiagramWithWalls { diagram, walls, areas }
    }

    /// Transports the walls into the canonical frame of the diagram.
    pub fn canonicalized(&self) -> Self {
        let (start, relabel) = self.diagram.canonical_map();
        let n = self.diagram.len();
        let canonical = self.diagram.canonical_form();
        let fc = crate::face::planarize(&canonical);
        let walls = self
            .walls
            .iter()
            .map(|w| {
                let a = (w.gaps.0 + n - start) % n;
                let b = (w.gaps.1 + n - start) % n;
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                // The stored side is the one cut off by the forward arc.
                let inside = orbits_in_arc(&canonical, a, b);
                debug_assert!({
                    let relabeled: BTreeSet<u32> =
                        w.inside.iter().map(|&o| relabel[(o - 1) as usize]).collect();
                    relabeled == inside
                        || relabeled
                            == (1..=canonical.r()).filter(|o| !inside.contains(o)).collect()
                });
                Wall { gaps: (a, b), route: vec![fc.face_of_gap(a)], inside }
            })
            .collect();
        DiagramWithWalls::from_walls(canonical, walls)
    }

    pub fn irreducible_areas(&self) -> impl Iterator<Item = &StableArea> {
        self.areas.iter().filter(|a| a.kind == AreaKind::Irreducible)
    }

    pub fn has_irreducible_area(&self) -> bool {
        self.irreducible_areas().next().is_some()
    }

    /// Walls in the text notation `(g2,g7;f0),(g4,g5;f1)`.
    pub fn walls_notation(&self) -> String {
        self.walls.iter().map(Wall::notation).collect::<Vec<_>>().join(",")
    }

    /// Parses a wall list in the text notation against the given diagram.
    pub fn parse(diagram: Diagram, walls_text: &str) -> Result<Self> {
        let fc = planarize(&diagram);
        let mut walls = Vec::new();
        let text = walls_text.trim().trim_start_matches("walls=");
        if !text.is_empty() {
            for part in split_wall_list(text)? {
                walls.push(parse_wall(&diagram, &fc, &part)?);
            }
        }
        Ok(DiagramWithWalls::from_walls(diagram, walls))
    }
}

fn split_wall_list(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for chunk in text.split("),") {
        let chunk = chunk.trim().trim_start_matches('(').trim_end_matches(')');
        if !chunk.is_empty() {
            out.push(chunk.to_string());
        }
    }
    if out.is_empty() {
        return Err(Error::parse("empty wall list"));
    }
    Ok(out)
}

fn parse_wall(d: &Diagram, fc: &FaceComplex, body: &str) -> Result<Wall> {
    let (gaps_part, route_part) = body
        .split_once(';')
        .ok_or_else(|| Error::parse(format!("wall `{}` missing `;`", body)))?;
    let mut gap_it = gaps_part.split(',').map(|g| {
        g.trim()
            .strip_prefix('g')
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| Error::parse(format!("bad gap in `{}`", body)))
    });
    let a = gap_it.next().ok_or_else(|| Error::parse("missing gap"))??;
    let b = gap_it.next().ok_or_else(|| Error::parse("missing gap"))??;
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if b >= d.len() || a == b {
        return Err(Error::parse(format!("gap pair (g{},g{}) out of range", a, b)));
    }
    for f in route_part.split('.') {
        f.trim()
            .strip_prefix('f')
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| Error::parse(format!("bad face in `{}`", body)))?;
    }
    if fc.face_of_gap(a) != fc.face_of_gap(b) {
        return Err(Error::parse(format!(
            "gaps g{} and g{} do not border a common face",
            a, b
        )));
    }
    let inside = orbits_in_arc(d, a, b);
    if inside.is_empty() || inside.len() == d.r() as usize {
        return Err(Error::parse(format!("chord (g{},g{}) does not split the orbits", a, b)));
    }
    Ok(Wall { gaps: (a, b), route: vec![fc.face_of_gap(a)], inside })
}

/// True iff no stable area of the decomposition is irreducible.
pub fn is_determinant(dw: &DiagramWithWalls) -> bool {
    !dw.has_irreducible_area()
}

/// The combinatorial conditions an irreducible area must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Orbits all backward adjacent or all forward adjacent.
    AdjacentEnds,
    /// Fewer than two boundary components.
    BoundaryCount,
    /// The orbits of the area alternate relative to each other.
    AlternatingOrbits,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AdjacentEnds => write!(f, "orbits all backward or all forward adjacent"),
            Violation::BoundaryCount => write!(f, "fewer than two boundary components"),
            Violation::AlternatingOrbits => write!(f, "relative orbits alternate"),
        }
    }
}

/// Checks the necessary conditions for irreducibility of an area; an empty
/// list means all three hold.
pub fn irreducible_constraints(d: &Diagram, area: &StableArea) -> Vec<Violation> {
    let mut v = Vec::new();
    if d.ends_in_one_block(&area.orbits, Sign::Minus)
        || d.ends_in_one_block(&area.orbits, Sign::Plus)
    {
        v.push(Violation::AdjacentEnds);
    }
    if area.boundary.len() < 2 {
        v.push(Violation::BoundaryCount);
    }
    if relative_alternates(d, &area.orbits) {
        v.push(Violation::AlternatingOrbits);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::diagram;

    #[test]
    fn r1_has_no_reducing_chords() {
        assert!(reducing_chords(&diagram("r=1; cyc=1- 1+")).is_empty());
    }

    #[test]
    fn translation_diagram_has_one_chord_one_wall() {
        let d = diagram("r=2; cyc=1- 2- 2+ 1+");
        let chords = reducing_chords(&d);
        assert_eq!(chords.len(), 1);
        assert_eq!(chords[0].gaps, (0, 2));
        let dw = compute_walls(&d);
        assert_eq!(dw.walls.len(), 1);
        assert_eq!(dw.areas.len(), 2);
        assert!(dw.areas.iter().all(|a| a.kind == AreaKind::Translation));
    }

    #[test]
    fn alternating_r2_single_wall_two_translation_areas() {
        // Derived: the two hugging representatives between the lobes are
        // isotopic in the face complex, so the alternating two-orbit diagram
        // carries a single wall separating two translation areas.
        let d = diagram("r=2; cyc=1- 1+ 2- 2+");
        let chords = reducing_chords(&d);
        assert_eq!(chords.len(), 1);
        let dw = compute_walls(&d);
        assert_eq!(dw.walls.len(), 1);
        assert!(dw.areas.iter().all(|a| a.kind == AreaKind::Translation));
    }

    #[test]
    fn chord_disjointness_rules() {
        let d = diagram("r=4; cyc=1- 1+ 2- 2+ 3- 3+ 4- 4+");
        let fc = planarize(&d);
        let chords = reducing_chords(&d);
        // A chord is disjoint from itself (parallel copies).
        for c in &chords {
            assert!(chords_disjoint(c, c, &fc));
        }
        // The two 2+2 cuts of the four-lobe diagram interleave.
        let s1 = chords.iter().find(|c| c.gaps == (1, 5)).expect("cut {1,4}|{2,3}");
        let s2 = chords.iter().find(|c| c.gaps == (3, 7)).expect("cut {2,...}");
        assert!(!chords_disjoint(s1, s2, &fc));
    }

    #[test]
    fn nondeterminant_pattern_noncrossing() {
        // Two head-to-head hairpins fenced between two lobes: the middle pair
        // is irreducible, the outer lobes are translation areas.
        let d = diagram("r=4; cyc=1- 2- 2+ 3- 3+ 4- 4+ 1+");
        let dw = compute_walls(&d);
        assert_eq!(dw.walls.len(), 2);
        let irr: Vec<_> = dw.irreducible_areas().collect();
        assert_eq!(irr.len(), 1);
        assert_eq!(irr[0].orbits.iter().copied().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(irr[0].boundary.len(), 2);
        assert!(irreducible_constraints(&d, irr[0]).is_empty());
        assert!(!is_determinant(&dw));
        // A flow with the same diagram sees the finer, all-translation walls.
        let fine = flow_walls(&d);
        assert!(is_determinant(&fine));
        assert!(fine.walls.len() > 2);
    }

    #[test]
    fn nondeterminant_pattern_crossing() {
        // The crossing variant: the welded pair is walled inside, one orbit
        // on each outer side.
        let d = diagram("r=4; cyc=1- 2- 2+ 3- 1+ 4- 4+ 3+");
        assert_eq!(d.crossings().len(), 1);
        let dw = compute_walls(&d);
        assert_eq!(dw.walls.len(), 2);
        let irr: Vec<_> = dw.irreducible_areas().collect();
        assert_eq!(irr.len(), 1);
        assert_eq!(irr[0].orbits.len(), 2);
        assert!(irreducible_constraints(&d, irr[0]).is_empty());
    }

    #[test]
    fn determinant_examples() {
        assert!(is_determinant(&compute_walls(&diagram("r=1; cyc=1- 1+"))));
        // r' = 1 (stack) and r' = r (lobes).
        assert!(is_determinant(&compute_walls(&diagram(
            "r=4; cyc=1- 2- 3- 4- 4+ 3+ 2+ 1+"
        ))));
        assert!(is_determinant(&compute_walls(&diagram(
            "r=4; cyc=1- 1+ 2- 2+ 3- 3+ 4- 4+"
        ))));
    }

    #[test]
    fn constraint_violations_reported() {
        // Minus ends of the whole-disk area form blocks spanning everything:
        // the alternating crossing word has no chords at all and its single
        // area violates the boundary-count condition.
        let d = diagram("r=3; cyc=1- 3+ 2- 1+ 3- 2+");
        let dw = compute_walls(&d);
        assert!(dw.walls.is_empty());
        let irr: Vec<_> = dw.irreducible_areas().collect();
        assert_eq!(irr.len(), 1);
        let v = irreducible_constraints(&d, irr[0]);
        assert!(v.contains(&Violation::BoundaryCount));
    }

    #[test]
    fn walls_notation_round_trip() {
        let d = diagram("r=4; cyc=1- 2- 2+ 3- 3+ 4- 4+ 1+");
        let dw = compute_walls(&d);
        let text = dw.walls_notation();
        let back = DiagramWithWalls::parse(d, &text).unwrap();
        assert_eq!(back, dw);
    }
}
