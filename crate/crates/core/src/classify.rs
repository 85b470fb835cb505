//! The total conjugacy invariant relative to four orbits: invariant couples
//! (diagram with walls, tangle), conjugacy decisions, realization recipes and
//! deflectors.

use crate::braid::{factor_free_half_twists, factors_product, BraidWord, HalfTwistFactor};
use crate::diagram::{Diagram, Endpoint};
use crate::error::{Error, Result};
use crate::tangle::{
    act_braid, adaptedness, solve_word, tangle_equal, tangle_of_braid, Adaptedness, Curve,
    MarkedCirclePair, McgLetter, McgWord, Tangle,
};
use crate::walls::{capable_pairs, flow_walls, walls_with_protection, DiagramWithWalls};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// The conjugacy invariant of a Brouwer mapping class relative to four
/// orbits: its diagram with walls and its tangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCouple {
    pub dw: DiagramWithWalls,
    pub tangle: Tangle,
}

impl InvariantCouple {
    /// Validates the coupling invariants: the tangle is trivial exactly when
    /// no area is irreducible, and a nontrivial tangle is adapted to the
    /// crossing status of the diagram.
    pub fn new(dw: DiagramWithWalls, tangle: Tangle) -> Result<Self> {
        if dw.diagram.r() != 4 {
            return Err(Error::Classify("the total invariant is defined for four orbits".into()));
        }
        if !dw.diagram.is_canonical() {
            return Err(Error::Classify("couple diagram must be canonical".into()));
        }
        let has_irr = dw.has_irreducible_area();
        if tangle.trivial != !has_irr {
            return Err(Error::Classify(
                "tangle is trivial iff the walls leave no irreducible area".into(),
            ));
        }
        let crossing = !dw.diagram.crossings().is_empty();
        match adaptedness(&tangle) {
            Adaptedness::NotApplicable => {
                if crossing {
                    return Err(Error::Classify(
                        "a crossing diagram cannot carry a trivial tangle".into(),
                    ));
                }
            }
            Adaptedness::NonCrossingDiagram => {
                if crossing {
                    return Err(Error::Classify("tangle not adapted: upper point above a crossing diagram".into()));
                }
            }
            Adaptedness::CrossingDiagram => {
                if !crossing {
                    return Err(Error::Classify("tangle not adapted: lower point above a non-crossing diagram".into()));
                }
            }
        }
        Ok(InvariantCouple { dw, tangle })
    }

    /// Couple of the flow realizing a non-crossing diagram.
    pub fn flow(diagram: &Diagram) -> Result<Self> {
        let canonical = diagram.canonical_form();
        if !canonical.crossings().is_empty() {
            return Err(Error::Classify("flows have non-crossing diagrams".into()));
        }
        InvariantCouple::new(flow_walls(&canonical), Tangle::trivial())
    }
}

/// Constructive realization: a flow diagram plus lifted free half twists on
/// the irreducible pair, with strictly decreasing fundamental domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    /// Non-crossing diagram realized by the underlying flow.
    pub flow_diagram: Diagram,
    /// The two orbits carrying the twists (labels of `flow_diagram`).
    pub pair: (u32, u32),
    /// Half twists on the cylinder of the pair (strands: 1 = upper marked
    /// point, 2 = lower marked point, 3 = the extra strand), rightmost
    /// domain first in the product.
    pub lifts: Vec<(HalfTwistFactor, i64)>,
}

/// Which orbit of an irreducible pair plays the upper marked point: the one
/// whose forward arc (from its `-` end to its `+` end) passes the other's
/// `-` end.
pub fn pair_roles(d: &Diagram, u: u32, v: u32) -> Result<(u32, u32)> {
    let n = d.len();
    let in_arc = |x: u32, pos: usize| {
        let a0 = d.position(Endpoint::minus(x));
        let a1 = d.position(Endpoint::plus(x));
        (pos + n - a0) % n < (a1 + n - a0) % n && pos != a0
    };
    let u_side = in_arc(u, d.position(Endpoint::minus(v)));
    let v_side = in_arc(v, d.position(Endpoint::minus(u)));
    match (u_side, v_side) {
        (true, false) => Ok((u, v)),
        (false, true) => Ok((v, u)),
        _ => Err(Error::Classify(format!(
            "orbits {} and {} have no marked-point roles in {}",
            u, v, d
        ))),
    }
}

/// Computes the invariant couple of a recipe.
pub fn invariant_of(rec: &Recipe) -> Result<InvariantCouple> {
    let flow = &rec.flow_diagram;
    if !flow.crossings().is_empty() {
        return Err(Error::Classify("recipe flow diagram must be non-crossing".into()));
    }
    if !flow.is_canonical() {
        return Err(Error::Classify("recipe flow diagram must be canonical".into()));
    }
    for (f, _) in &rec.lifts {
        if f.strands != 3 || f.avoid != 3 {
            return Err(Error::Classify("lifts live on the three-strand cylinder".into()));
        }
        f.validate().map_err(|e| Error::Classify(format!("invalid lift: {}", e)))?;
    }
    let mut domains = rec.lifts.iter().map(|&(_, d)| d);
    if let Some(first) = domains.next() {
        let mut prev = first;
        for d in domains {
            if d >= prev {
                return Err(Error::Classify("lift domains must strictly decrease".into()));
            }
            prev = d;
        }
    }

    let word = factors_product(
        &rec.lifts.iter().map(|(f, _)| f.clone()).collect::<Vec<_>>(),
        3,
    );
    let tangle = tangle_of_braid(&word);

    if tangle.trivial {
        return InvariantCouple::new(flow_walls(flow), tangle);
    }

    let (u, v) = rec.pair;
    if !capable_pairs(flow).contains(&(u.min(v), u.max(v))) {
        return Err(Error::Classify(format!(
            "pair ({},{}) does not support an irreducible area in {}",
            u, v, flow
        )));
    }
    match adaptedness(&tangle) {
        Adaptedness::NonCrossingDiagram => {
            InvariantCouple::new(walls_with_protection(flow, Some((u.min(v), u.max(v)))), tangle)
        }
        Adaptedness::CrossingDiagram => {
            let crossed = flow.swap_plus_ends(u, v).canonical_form();
            let pair = *crossed
                .crossings()
                .iter()
                .next()
                .ok_or_else(|| Error::Classify("head swap produced no crossing".into()))?;
            InvariantCouple::new(walls_with_protection(&crossed, Some(pair)), tangle)
        }
        Adaptedness::NotApplicable => unreachable!("nontrivial tangle"),
    }
}

/// Decides conjugacy: equality of canonical couples. When the diagram has an
/// automorphism exchanging the marked-point roles of the irreducible pair,
/// tangles are compared up to that exchange.
pub fn conjugate_equal(c1: &InvariantCouple, c2: &InvariantCouple) -> bool {
    if c1.dw != c2.dw {
        return false;
    }
    if tangle_equal(&c1.tangle, &c2.tangle) {
        return true;
    }
    if let Some(area) = c1.dw.irreducible_areas().next() {
        if area.orbits.len() == 2 && pair_swap_automorphism(&c1.dw.diagram, &area.orbits) {
            let s = McgWord::letter(McgLetter::S, 1);
            for e in [&s, &s.inverse()] {
                let swapped = crate::tangle::tangle_of_curve(crate::tangle::act(
                    e,
                    &c2.tangle.representative,
                ));
                if tangle_equal(&c1.tangle, &swapped) {
                    return true;
                }
            }
        }
    }
    false
}

fn pair_swap_automorphism(d: &Diagram, orbits: &BTreeSet<u32>) -> bool {
    let pair: Vec<u32> = orbits.iter().copied().collect();
    d.automorphisms()
        .iter()
        .any(|(_, relabel)| relabel[(pair[0] - 1) as usize] == pair[1])
}

/// Produces a recipe realizing the couple: a flow when the tangle is
/// trivial, otherwise a flow composed with lifted free half twists.
pub fn realize(c: &InvariantCouple) -> Result<Recipe> {
    if c.tangle.trivial {
        return Ok(Recipe {
            flow_diagram: c.dw.diagram.clone(),
            pair: (0, 0),
            lifts: Vec::new(),
        });
    }
    let area = c
        .dw
        .irreducible_areas()
        .next()
        .expect("nontrivial tangle comes with an irreducible area");
    if area.orbits.len() != 2 {
        return Err(Error::Classify("irreducible areas carry exactly two orbits".into()));
    }
    let pair: Vec<u32> = area.orbits.iter().copied().collect();
    let crossing = !c.dw.diagram.crossings().is_empty();

    // Flow diagram and the pair expressed in its labels.
    let (flow_diagram, flow_pair) = if crossing {
        let uncrossed = c.dw.diagram.swap_plus_ends(pair[0], pair[1]).canonical_form();
        let candidates = capable_pairs(&uncrossed);
        let target = candidates
            .into_iter()
            .find(|&(a, b)| {
                uncrossed.swap_plus_ends(a, b).canonical_form() == c.dw.diagram
            })
            .ok_or_else(|| Error::Classify("could not locate the crossing pair in the flow diagram".into()))?;
        (uncrossed, target)
    } else {
        (c.dw.diagram.clone(), (pair[0], pair[1]))
    };

    // A braid word whose class carries the standard circle to the tangle.
    let w = solve_word(&Curve::standard(), &c.tangle.representative)?;
    let b0 = w.to_braid_word();
    let mut lifts: Vec<HalfTwistFactor> = Vec::new();
    let pure = if b0.is_pure() {
        b0
    } else {
        // Left-correct by a half twist; emit its inverse as the first lift.
        lifts.push(HalfTwistFactor::elementary(3, 1, -1, 3));
        BraidWord::new(3, vec![1])?.concat(&b0)?
    };
    let (factors, _twist) = factor_free_half_twists(&pure)?;
    lifts.extend(factors);

    let count = lifts.len() as i64;
    let lifts: Vec<(HalfTwistFactor, i64)> =
        lifts.into_iter().enumerate().map(|(i, f)| (f, count - i as i64)).collect();
    Ok(Recipe { flow_diagram, pair: flow_pair, lifts })
}

/// A deflector: half twists avoiding the extra strand whose product carries
/// one family of marked circles to another, index-preservingly, with
/// vanishing total linking.
pub fn deflector(
    alphas: &MarkedCirclePair,
    betas: &MarkedCirclePair,
) -> Result<Vec<(HalfTwistFactor, i64)>> {
    if alphas.separating.partition() != betas.separating.partition() {
        return Err(Error::Classify(
            "families with mismatched marked-point sides admit no index-preserving deflector"
                .into(),
        ));
    }
    if alphas == betas {
        return Ok(Vec::new());
    }
    let u = solve_word(&alphas.separating, &Curve::standard())?;
    let v = solve_word(&betas.separating, &Curve::standard())?;
    let raw = v.inverse().to_braid_word().concat(&u.to_braid_word())?;
    if !raw.is_pure() {
        return Err(Error::Classify("deflector word must fix the marked points".into()));
    }
    let t = raw.epsilon_total()?;
    // Insert the horizontal correction at the standard-circle moment: the
    // full word is v^{-1} · H^{-t} · u with H the horizontal twist.
    let horizontal = crate::braid::a_gen(3, 2, 3)?;
    let word = v
        .inverse()
        .to_braid_word()
        .concat(&horizontal.power(-t))?
        .concat(&u.to_braid_word())?;
    debug_assert_eq!(word.epsilon_total()?, 0);
    let (factors, residual) = factor_free_half_twists(&word)?;
    debug_assert_eq!(residual, 0);
    debug_assert_eq!(act_braid(&factors_product(&factors, 3), &alphas.separating), betas.separating);
    let count = factors.len() as i64;
    Ok(factors.into_iter().enumerate().map(|(i, f)| (f, count - i as i64)).collect())
}

/// `k` pairwise non-conjugate couples over one non-determinant diagram,
/// witnessing the infinitude of classes.
pub fn generate_distinct(dw: &DiagramWithWalls, k: usize) -> Result<Vec<InvariantCouple>> {
    if !dw.has_irreducible_area() {
        return Err(Error::Classify("determinant diagrams admit a single class".into()));
    }
    let crossing = !dw.diagram.crossings().is_empty();
    let mut out = Vec::with_capacity(k);
    for m in 1..=k as i64 {
        let e = if crossing { 2 * m + 1 } else { 2 * m };
        let tangle = crate::tangle::tangle_of(&McgWord::letter(McgLetter::S, e));
        out.push(InvariantCouple::new(dw.clone(), tangle)?);
    }
    Ok(out)
}

/// Couple file content: `{"diagram":"...","walls":"...","tangle":"..."}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoupleFile {
    pub diagram: String,
    pub walls: String,
    pub tangle: String,
}

impl CoupleFile {
    pub fn from_couple(c: &InvariantCouple) -> Self {
        CoupleFile {
            diagram: c.dw.diagram.to_string(),
            walls: c.dw.walls_notation(),
            tangle: c.tangle.to_string(),
        }
    }

    pub fn to_couple(&self) -> Result<InvariantCouple> {
        let diagram: Diagram = self.diagram.parse()?;
        let dw = DiagramWithWalls::parse(diagram, &self.walls)?.canonicalized();
        let tangle: Tangle = self.tangle.parse()?;
        InvariantCouple::new(dw, tangle)
    }
}

/// Recipe file content.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecipeFile {
    pub flow: String,
    pub pair: [u32; 2],
    pub lifts: Vec<LiftFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiftFile {
    pub factor: FactorFile,
    pub domain: i64,
}

/// Factor serialization: `{"conjugator":[...],"core":k,"sign":1,"support":[i,j]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorFile {
    pub conjugator: Vec<i32>,
    pub core: usize,
    pub sign: i8,
    pub support: [usize; 2],
}

impl RecipeFile {
    pub fn from_recipe(rec: &Recipe) -> Self {
        RecipeFile {
            flow: rec.flow_diagram.to_string(),
            pair: [rec.pair.0, rec.pair.1],
            lifts: rec
                .lifts
                .iter()
                .map(|(f, d)| LiftFile {
                    factor: FactorFile {
                        conjugator: f.conjugator.clone(),
                        core: f.core,
                        sign: f.sign,
                        support: [f.support.0, f.support.1],
                    },
                    domain: *d,
                })
                .collect(),
        }
    }

    pub fn to_recipe(&self) -> Result<Recipe> {
        let flow_diagram: Diagram = self.flow.parse()?;
        let lifts = self
            .lifts
            .iter()
            .map(|l| {
                (
                    HalfTwistFactor {
                        strands: 3,
                        conjugator: l.factor.conjugator.clone(),
                        core: l.factor.core,
                        sign: l.factor.sign,
                        support: (l.factor.support[0], l.factor.support[1]),
                        avoid: 3,
                    },
                    l.domain,
                )
            })
            .collect();
        Ok(Recipe { flow_diagram, pair: (self.pair[0], self.pair[1]), lifts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::diagram;
    use crate::walls::compute_walls;

    fn noncrossing_nondet() -> Diagram {
        diagram("r=4; cyc=1- 2- 2+ 3- 3+ 4- 4+ 1+")
    }

    fn crossing_nondet() -> Diagram {
        diagram("r=4; cyc=1- 2- 2+ 3- 1+ 4- 4+ 3+")
    }

    #[test]
    fn flow_couples_round_trip() {
        let c = InvariantCouple::flow(&noncrossing_nondet()).unwrap();
        let rec = realize(&c).unwrap();
        assert!(rec.lifts.is_empty());
        let back = invariant_of(&rec).unwrap();
        assert!(conjugate_equal(&c, &back));
    }

    #[test]
    fn twisted_couples_round_trip_noncrossing() {
        let dw = compute_walls(&noncrossing_nondet());
        for c in generate_distinct(&dw, 3).unwrap() {
            let rec = realize(&c).unwrap();
            assert!(!rec.lifts.is_empty());
            let back = invariant_of(&rec).unwrap();
            assert!(conjugate_equal(&c, &back));
        }
    }

    #[test]
    fn twisted_couples_round_trip_crossing() {
        let dw = compute_walls(&crossing_nondet());
        for c in generate_distinct(&dw, 3).unwrap() {
            let rec = realize(&c).unwrap();
            let back = invariant_of(&rec).unwrap();
            assert!(conjugate_equal(&c, &back));
        }
    }

    #[test]
    fn distinct_tangles_are_not_conjugate() {
        let dw = compute_walls(&noncrossing_nondet());
        let couples = generate_distinct(&dw, 4).unwrap();
        for i in 0..couples.len() {
            for j in 0..couples.len() {
                assert_eq!(conjugate_equal(&couples[i], &couples[j]), i == j);
            }
        }
    }

    #[test]
    fn flow_vs_twisted_differ_on_the_same_diagram() {
        let d = noncrossing_nondet();
        let flow = InvariantCouple::flow(&d).unwrap();
        let twisted = generate_distinct(&compute_walls(&d), 1).unwrap().pop().unwrap();
        assert!(!conjugate_equal(&flow, &twisted));
    }

    #[test]
    fn non_adapted_couples_are_rejected() {
        // A lower-point-above tangle on a non-crossing diagram.
        let dw = compute_walls(&noncrossing_nondet());
        let bad = crate::tangle::tangle_of(&McgWord::letter(McgLetter::S, 3));
        assert!(InvariantCouple::new(dw, bad).is_err());
    }

    #[test]
    fn generate_distinct_needs_nondeterminant_input() {
        let dw = compute_walls(&diagram("r=4; cyc=1- 2- 3- 4- 4+ 3+ 2+ 1+"));
        assert!(generate_distinct(&dw, 2).is_err());
    }

    #[test]
    fn deflector_identity_is_empty() {
        let std = MarkedCirclePair::standard();
        assert!(deflector(&std, &std).unwrap().is_empty());
    }

    #[test]
    fn deflector_transports_families() {
        let std = MarkedCirclePair::standard();
        let moved = std.transported(&"S^2 T^-1".parse().unwrap()).unwrap();
        let lifts = deflector(&std, &moved).unwrap();
        let factors: Vec<HalfTwistFactor> = lifts.iter().map(|(f, _)| f.clone()).collect();
        for f in &factors {
            f.validate().unwrap();
            assert_eq!(f.avoid, 3);
        }
        let word = factors_product(&factors, 3);
        assert_eq!(word.epsilon_total().unwrap(), 0);
        assert_eq!(act_braid(&word, &std.separating), moved.separating);
        // Domains strictly decrease.
        for w in lifts.windows(2) {
            assert!(w[0].1 > w[1].1);
        }
    }

    #[test]
    fn couple_files_round_trip() {
        let dw = compute_walls(&crossing_nondet());
        let c = generate_distinct(&dw, 1).unwrap().pop().unwrap();
        let file = CoupleFile::from_couple(&c);
        let json = serde_json::to_string(&file).unwrap();
        let back: CoupleFile = serde_json::from_str(&json).unwrap();
        assert!(conjugate_equal(&back.to_couple().unwrap(), &c));
    }
}
