//! Curves on the cylinder with two marked points and the tangle invariant.
//!
//! The open cylinder with marked points `p` above `q` is the sphere with four
//! punctures: top end `t`, bottom end `b`, and the marked points. Essential
//! simple closed curves are stored as normal coordinates with respect to the
//! ideal triangulation with vertex set `{t, p, q, b}`, edge set
//! `(tp, tq, tb, pq, pb, qb)` and the four triangular faces of the
//! tetrahedron. Under the covering-torus correspondence a curve carries a
//! reduced slope `p/q`; the edge coordinates are
//! `tp = qb = |p|`, `tq = pb = |p - q|`, `tb = pq = |q|`, and the residues of
//! `(p, q)` mod 2 record which pair of punctures lies on each side.
//!
//! Mapping classes fixing the ends act through exact unipotent rules frozen
//! against this chart: `S` is the half twist exchanging the marked points,
//! `T` the left Dehn twist around the horizontal core circle between them,
//! and the end-parallel twists act trivially on curve classes.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which pair of punctures lies on each side of the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Partition {
    /// `{t, p} | {b, q}`: the upper marked point is above the curve.
    TpBq,
    /// `{t, q} | {b, p}`: the lower marked point is above the curve.
    TqBp,
    /// `{t, b} | {p, q}`: both marked points on one side (not a tangle).
    TbPq,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Partition::TpBq => write!(f, "tp|bq"),
            Partition::TqBp => write!(f, "tq|bp"),
            Partition::TbPq => write!(f, "tb|pq"),
        }
    }
}

/// An essential simple closed curve in normal coordinates
/// `(tp, tq, tb, pq, pb, qb)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Curve {
    pub coords: [u64; 6],
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Curve {
    /// The curve of reduced slope `p/q`; normalized so that `q > 0`, or
    /// `(p, q) = (1, 0)`.
    pub fn from_slope(p: i64, q: i64) -> Result<Curve> {
        if p == 0 && q == 0 {
            return Err(Error::Tangle("slope 0/0 is not a curve".into()));
        }
        if gcd(p, q) != 1 {
            return Err(Error::Tangle(format!("slope {}/{} is not primitive", p, q)));
        }
        let (p, q) = if q < 0 || (q == 0 && p < 0) { (-p, -q) } else { (p, q) };
        let a = p.unsigned_abs();
        let b = (p - q).unsigned_abs();
        let c = q.unsigned_abs();
        Ok(Curve { coords: [a, b, c, c, b, a] })
    }

    /// The horizontal core circle between the marked points.
    pub fn standard() -> Curve {
        Curve::from_slope(0, 1).expect("standard slope is primitive")
    }

    /// The matching conditions plus primitivity pin a unique slope.
    pub fn validate(&self) -> Result<(i64, i64)> {
        let [tp, tq, tb, pq, pb, qb] = self.coords;
        if tp != qb || tq != pb || tb != pq {
            return Err(Error::Tangle("opposite edge coordinates must match".into()));
        }
        // Triangle conditions on each face of the tetrahedron.
        for tri in [[tp, pq, tq], [tp, pb, tb], [tq, qb, tb], [pq, qb, pb]] {
            let sum = tri[0] + tri[1] + tri[2];
            if sum % 2 != 0 {
                return Err(Error::Tangle("odd triangle coordinate sum".into()));
            }
            for i in 0..3 {
                if tri[i] > sum - tri[i] {
                    return Err(Error::Tangle("triangle inequality violated".into()));
                }
            }
        }
        let p = tp as i64;
        let q = tb as i64;
        // Recover the sign of p from |p - q|.
        let candidates = [(p, q), (-p, q)];
        for (cp, cq) in candidates {
            if (cp - cq).unsigned_abs() == tq && gcd(cp, cq) == 1 {
                let norm = Curve::from_slope(cp, cq)?;
                if norm == *self {
                    return Ok(if cq < 0 || (cq == 0 && cp < 0) { (-cp, -cq) } else { (cp, cq) });
                }
            }
        }
        Err(Error::Tangle("coordinates are not a single essential curve".into()))
    }

    pub fn slope(&self) -> (i64, i64) {
        self.validate().expect("curve invariants hold by construction")
    }

    pub fn partition(&self) -> Partition {
        let (p, q) = self.slope();
        match ((p.rem_euclid(2)), (q.rem_euclid(2))) {
            (0, 1) => Partition::TpBq,
            (1, 1) => Partition::TqBp,
            (1, 0) => Partition::TbPq,
            _ => unreachable!("reduced slope has a odd coordinate"),
        }
    }

    /// Geometric intersection number with another slope curve.
    pub fn intersection(&self, other: &Curve) -> u64 {
        let (p1, q1) = self.slope();
        let (p2, q2) = other.slope();
        2 * (p1 * q2 - p2 * q1).unsigned_abs()
    }

    pub fn is_horizontal(&self) -> bool {
        *self == Curve::standard()
    }
}

/// Alphabet of the mapping class group of the marked cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum McgLetter {
    /// Half twist exchanging the marked points.
    S,
    /// Left Dehn twist around the core circle between the marked points.
    T,
    /// Twist parallel to the top end.
    Tt,
    /// Twist parallel to the bottom end.
    Tb,
}

/// A word in the mapping class group, letters with nonzero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McgWord {
    pub letters: Vec<(McgLetter, i64)>,
}

impl McgWord {
    pub fn identity() -> Self {
        McgWord { letters: Vec::new() }
    }

    pub fn letter(l: McgLetter, e: i64) -> Self {
        if e == 0 {
            Self::identity()
        } else {
            McgWord { letters: vec![(l, e)] }
        }
    }

    pub fn concat(&self, other: &McgWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        McgWord { letters }
    }

    pub fn inverse(&self) -> Self {
        McgWord {
            letters: self.letters.iter().rev().map(|&(l, e)| (l, -e)).collect(),
        }
    }

    /// The braid word on three strands (marked points and the extra strand)
    /// inducing this class: `S = σ_1`, `T = σ_2^2`, the end twists central
    /// or trivial.
    pub fn to_braid_word(&self) -> crate::braid::BraidWord {
        let mut word = Vec::new();
        for &(l, e) in &self.letters {
            let (letter, reps) = match l {
                McgLetter::S => (1i32, e),
                McgLetter::T => (2, 2 * e),
                McgLetter::Tt | McgLetter::Tb => (0, 0),
            };
            for _ in 0..reps.unsigned_abs() {
                word.push(if reps >= 0 { letter } else { -letter });
            }
        }
        crate::braid::BraidWord { strands: 3, word }
    }
}

impl fmt::Display for McgWord {
    /// Notation `S^2 T^-1 Tt`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &(l, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let name = match l {
                McgLetter::S => "S",
                McgLetter::T => "T",
                McgLetter::Tt => "Tt",
                McgLetter::Tb => "Tb",
            };
            if e == 1 {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}^{}", name, e)?;
            }
        }
        Ok(())
    }
}

impl FromStr for McgWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|_| Error::parse(format!("bad exponent in `{}`", tok)))?,
                ),
                None => (tok, 1),
            };
            let letter = match name {
                "S" => McgLetter::S,
                "T" => McgLetter::T,
                "Tt" => McgLetter::Tt,
                "Tb" => McgLetter::Tb,
                _ => return Err(Error::parse(format!("unknown letter `{}`", name))),
            };
            if exp != 0 {
                letters.push((letter, exp));
            }
        }
        Ok(McgWord { letters })
    }
}

/// 2x2 integer matrices acting on slopes as column vectors.
type Mat = [[i64; 2]; 2];

const MAT_ID: Mat = [[1, 0], [0, 1]];
/// `S`: the half twist, `σ_1` downstairs.
const MAT_S: Mat = [[1, 1], [0, 1]];
/// `σ_2` downstairs; `T = σ_2^2`.
const MAT_SIGMA2: Mat = [[1, 0], [-1, 1]];

fn mat_mul(a: Mat, b: Mat) -> Mat {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn mat_inv(a: Mat) -> Mat {
    // Determinant one throughout.
    [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
}

fn mat_pow(a: Mat, e: i64) -> Mat {
    let base = if e >= 0 { a } else { mat_inv(a) };
    let mut out = MAT_ID;
    for _ in 0..e.unsigned_abs() {
        out = mat_mul(out, base);
    }
    out
}

fn word_matrix(word: &McgWord) -> Mat {
    let mut m = MAT_ID;
    for &(l, e) in &word.letters {
        let lm = match l {
            McgLetter::S => mat_pow(MAT_S, e),
            McgLetter::T => mat_pow(MAT_SIGMA2, 2 * e),
            McgLetter::Tt | McgLetter::Tb => MAT_ID,
        };
        m = mat_mul(m, lm);
    }
    m
}

/// Matrix of a braid word on three strands (for classes fixing the ends).
pub fn braid_matrix(word: &crate::braid::BraidWord) -> Mat {
    debug_assert_eq!(word.strands, 3);
    let mut m = MAT_ID;
    for &l in &word.word {
        let lm = match l.unsigned_abs() {
            1 => mat_pow(MAT_S, l.signum() as i64),
            2 => mat_pow(MAT_SIGMA2, l.signum() as i64),
            _ => unreachable!("three-strand word"),
        };
        m = mat_mul(m, lm);
    }
    m
}

fn apply_mat(m: Mat, c: &Curve) -> Curve {
    let (p, q) = c.slope();
    let np = m[0][0] * p + m[0][1] * q;
    let nq = m[1][0] * p + m[1][1] * q;
    Curve::from_slope(np, nq).expect("unimodular image of a primitive slope")
}

/// The mapping class action on curves; a group action:
/// `act(uv, c) = act(u, act(v, c))`.
pub fn act(word: &McgWord, c: &Curve) -> Curve {
    apply_mat(word_matrix(word), c)
}

/// Action of a three-strand braid word on curves.
pub fn act_braid(word: &crate::braid::BraidWord, c: &Curve) -> Curve {
    apply_mat(braid_matrix(word), c)
}

/// A tangle: the T-orbit of a curve separating the marked points, stored by
/// its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tangle {
    pub representative: Curve,
    pub trivial: bool,
}

/// Canonical T-orbit representative: `T^n` shifts `q` by `2np`, so reduce
/// `q` into `(-|p|, |p|]`; the horizontal curve (slope `0/1`) is fixed.
fn t_canonical(c: &Curve) -> Curve {
    let (p, q) = c.slope();
    if p == 0 {
        return *c;
    }
    let m = 2 * p.abs();
    let mut q2 = q.rem_euclid(m);
    if q2 > p.abs() {
        q2 -= m;
    }
    Curve::from_slope(p, q2).expect("shift preserves primitivity")
}

/// The tangle of a mapping class word: the T-orbit of the image of the
/// standard separating circle. Flow words (acting trivially on it) give the
/// trivial tangle.
pub fn tangle_of(word: &McgWord) -> Tangle {
    tangle_of_curve(act(word, &Curve::standard()))
}

pub fn tangle_of_braid(word: &crate::braid::BraidWord) -> Tangle {
    tangle_of_curve(act_braid(word, &Curve::standard()))
}

pub fn tangle_of_curve(c: Curve) -> Tangle {
    let rep = t_canonical(&c);
    Tangle { representative: rep, trivial: rep.is_horizontal() }
}

impl Tangle {
    pub fn trivial() -> Tangle {
        Tangle { representative: Curve::standard(), trivial: true }
    }
}

/// Equality of tangles: equality of canonical representatives.
pub fn tangle_equal(a: &Tangle, b: &Tangle) -> bool {
    a == b
}

/// Which diagrams a tangle is adapted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Adaptedness {
    /// The upper marked point lies above the curve.
    NonCrossingDiagram,
    /// The lower marked point lies above the curve.
    CrossingDiagram,
    /// Trivial (horizontal) tangle: no irreducible area.
    NotApplicable,
}

pub fn adaptedness(t: &Tangle) -> Adaptedness {
    if t.trivial {
        return Adaptedness::NotApplicable;
    }
    match t.representative.partition() {
        Partition::TpBq => Adaptedness::NonCrossingDiagram,
        Partition::TqBp => Adaptedness::CrossingDiagram,
        Partition::TbPq => unreachable!("tangle curves separate the marked points"),
    }
}

impl fmt::Display for Tangle {
    /// Notation `tangle=<p>/<q>@<partition>` or `tangle=trivial`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trivial {
            return write!(f, "tangle=trivial");
        }
        let (p, q) = self.representative.slope();
        write!(f, "tangle={}/{}@{}", p, q, self.representative.partition())
    }
}

impl FromStr for Tangle {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let body = text.trim().trim_start_matches("tangle=");
        if body == "trivial" {
            return Ok(Tangle::trivial());
        }
        let (slope_part, partition_part) = body
            .split_once('@')
            .ok_or_else(|| Error::parse("expected `@partition`"))?;
        let (ps, qs) = slope_part
            .split_once('/')
            .ok_or_else(|| Error::parse("expected `p/q`"))?;
        let p: i64 = ps.trim().parse().map_err(|_| Error::parse("bad numerator"))?;
        let q: i64 = qs.trim().parse().map_err(|_| Error::parse("bad denominator"))?;
        let curve = Curve::from_slope(p, q)?;
        let tangle = tangle_of_curve(curve);
        if tangle.representative != curve {
            return Err(Error::parse(format!("{}/{} is not T-canonical", p, q)));
        }
        let expect = match partition_part.trim() {
            "tp|bq" => Partition::TpBq,
            "tq|bp" => Partition::TqBp,
            other => return Err(Error::parse(format!("unknown partition `{}`", other))),
        };
        if curve.partition() != expect {
            return Err(Error::parse("partition does not match the slope parity"));
        }
        Ok(tangle)
    }
}

/// Two disjoint marked circles, one through each marked point, both isotopic
/// to the core circle of the unmarked cylinder. The pair is determined by
/// the separating curve between the two circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkedCirclePair {
    pub separating: Curve,
}

impl MarkedCirclePair {
    pub fn standard() -> Self {
        MarkedCirclePair { separating: Curve::standard() }
    }

    pub fn new(separating: Curve) -> Result<Self> {
        if separating.partition() == Partition::TbPq {
            return Err(Error::Tangle(
                "marked circles must have one marked point on each side".into(),
            ));
        }
        Ok(MarkedCirclePair { separating })
    }

    pub fn transported(&self, word: &McgWord) -> Result<Self> {
        Self::new(act(word, &self.separating))
    }
}

/// A word in `S` and `T` carrying `from` to `to`, found by Euclidean descent
/// on slopes. Exists whenever both curves separate the marked points.
pub fn solve_word(from: &Curve, to: &Curve) -> Result<McgWord> {
    let u = reduce_to_base(from)?;
    let v = reduce_to_base(to)?;
    if act(&u, from) != act(&v, to) {
        return Err(Error::Tangle("curves lie in different orbits".into()));
    }
    Ok(v.inverse().concat(&u))
}

/// Reduces a marked-point-separating curve to the standard circle and
/// returns the word that does it.
fn reduce_to_base(c: &Curve) -> Result<McgWord> {
    if c.partition() == Partition::TbPq {
        return Err(Error::Tangle("curve does not separate the marked points".into()));
    }
    let mut word = McgWord::identity();
    let mut cur = *c;
    loop {
        let (p, q) = cur.slope();
        if p == 0 {
            break;
        }
        // T^k: q -> q - 2kp. Reduce q into (-|p|, |p|].
        let canon = t_canonical(&cur);
        if canon != cur {
            let (_, qc) = canon.slope();
            let k = (q - qc) / (2 * p);
            word = McgWord::letter(McgLetter::T, k).concat(&word);
            cur = canon;
            continue;
        }
        // S^k: p -> p + kq. For q != 0 reduce |p| strictly below |q|.
        if q != 0 {
            let k = -p.div_euclid(q);
            let k = if (p + k * q).abs() >= q.abs() { k + 1 } else { k };
            let mut best = k;
            for cand in [k - 1, k, k + 1] {
                if (p + cand * q).abs() < (p + best * q).abs() {
                    best = cand;
                }
            }
            if (p + best * q).abs() >= p.abs() {
                return Err(Error::Tangle("descent stalled".into()));
            }
            word = McgWord::letter(McgLetter::S, best).concat(&word);
            cur = act(&McgWord::letter(McgLetter::S, best), &cur);
            continue;
        }
        break;
    }
    if cur != Curve::standard() {
        return Err(Error::Tangle(format!(
            "reduction finished away from the base at {:?}",
            cur.slope()
        )));
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_acts_trivially() {
        let c = Curve::from_slope(3, 2).unwrap();
        assert_eq!(act(&McgWord::identity(), &c), c);
    }

    #[test]
    fn twist_fixes_its_core() {
        let std = Curve::standard();
        assert_eq!(act(&McgWord::letter(McgLetter::T, 5), &std), std);
    }

    #[test]
    fn end_twists_act_trivially_on_curves() {
        let c = Curve::from_slope(3, 2).unwrap();
        assert_eq!(act(&McgWord::letter(McgLetter::Tt, 2), &c), c);
        assert_eq!(act(&McgWord::letter(McgLetter::Tb, -1), &c), c);
    }

    #[test]
    fn action_is_a_group_action() {
        let u: McgWord = "S^2 T^-1".parse().unwrap();
        let v: McgWord = "T S^-1 T^2".parse().unwrap();
        let c = Curve::from_slope(5, 3).unwrap();
        assert_eq!(act(&u.concat(&v), &c), act(&u, &act(&v, &c)));
        assert_eq!(act(&u.inverse(), &act(&u, &c)), c);
    }

    #[test]
    fn action_preserves_intersection_numbers() {
        let pairs = [((0i64, 1i64), (1i64, 0i64)), ((1, 1), (3, 2)), ((0, 1), (5, 3))];
        let w: McgWord = "S T^2 S^-3 T".parse().unwrap();
        for ((p1, q1), (p2, q2)) in pairs {
            let a = Curve::from_slope(p1, q1).unwrap();
            let b = Curve::from_slope(p2, q2).unwrap();
            assert_eq!(act(&w, &a).intersection(&act(&w, &b)), a.intersection(&b));
        }
    }

    #[test]
    fn s_swaps_the_marked_point_partitions() {
        let std = Curve::standard();
        let image = act(&McgWord::letter(McgLetter::S, 1), &std);
        assert_eq!(std.partition(), Partition::TpBq);
        assert_eq!(image.partition(), Partition::TqBp);
        // The curve around both marked points is fixed by the exchange.
        let around = Curve::from_slope(1, 0).unwrap();
        assert_eq!(act(&McgWord::letter(McgLetter::S, 1), &around), around);
    }

    #[test]
    fn tangle_is_t_invariant() {
        let mu: McgWord = "S^2 T S^-1".parse().unwrap();
        for n in [-3i64, 1, 7] {
            let shifted = McgWord::letter(McgLetter::T, n).concat(&mu);
            assert!(tangle_equal(&tangle_of(&mu), &tangle_of(&shifted)));
        }
        assert!(tangle_equal(
            &tangle_of(&McgWord::letter(McgLetter::T, 3)),
            &tangle_of(&McgWord::identity())
        ));
    }

    #[test]
    fn flow_words_have_trivial_tangle() {
        assert!(tangle_of(&McgWord::identity()).trivial);
        assert!(tangle_of(&McgWord::letter(McgLetter::T, 3)).trivial);
    }

    #[test]
    fn even_s_powers_give_distinct_nontrivial_tangles() {
        let t2 = tangle_of(&McgWord::letter(McgLetter::S, 2));
        let t4 = tangle_of(&McgWord::letter(McgLetter::S, 4));
        assert!(!t2.trivial && !t4.trivial);
        assert!(!tangle_equal(&t2, &t4));
        assert_eq!(adaptedness(&t2), Adaptedness::NonCrossingDiagram);
    }

    #[test]
    fn adaptedness_examples() {
        let crossing = tangle_of(&McgWord::letter(McgLetter::S, 3));
        assert_eq!(adaptedness(&crossing), Adaptedness::CrossingDiagram);
        assert_eq!(adaptedness(&Tangle::trivial()), Adaptedness::NotApplicable);
    }

    #[test]
    fn tangle_notation_round_trip() {
        let t = tangle_of(&McgWord::letter(McgLetter::S, 2));
        let text = t.to_string();
        let back: Tangle = text.parse().unwrap();
        assert_eq!(back, t);
        assert_eq!("tangle=trivial".parse::<Tangle>().unwrap(), Tangle::trivial());
    }

    #[test]
    fn solve_word_moves_curves() {
        let cases = [
            (Curve::standard(), Curve::from_slope(2, 1).unwrap()),
            (Curve::from_slope(4, 3).unwrap(), Curve::from_slope(5, -3).unwrap()),
            (Curve::from_slope(1, 1).unwrap(), Curve::standard()),
        ];
        for (from, to) in cases {
            let w = solve_word(&from, &to).unwrap();
            assert_eq!(act(&w, &from), to);
        }
    }

    #[test]
    fn braid_and_mcg_actions_agree() {
        let w: McgWord = "S^2 T^-1 S".parse().unwrap();
        let b = w.to_braid_word();
        let c = Curve::from_slope(4, 3).unwrap();
        assert_eq!(act(&w, &c), act_braid(&b, &c));
    }
}
