//! Diagrams of Brouwer mapping classes as cyclic words of signed endpoints.
//!
//! A diagram records the cyclic order at infinity of the backward/forward
//! proper half streamlines of a nice family: one `-` and one `+` endpoint per
//! orbit. Two diagrams are identified when they differ by a rotation of the
//! cyclic word composed with a relabeling of the orbits. Reflections are never
//! applied: conjugating homeomorphisms preserve orientation.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    /// Backward proper arc end.
    Minus,
    /// Forward proper arc end.
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// One endpoint of an arrow: an orbit index (1-based) with a sign.
///
/// Ordering is sign-major (`1- < 2- < ... < 1+ < 2+ < ...`); this is the token
/// order under which canonical forms are lexicographically least.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Endpoint {
    pub sign: Sign,
    pub orbit: u32,
}

impl Endpoint {
    pub fn minus(orbit: u32) -> Self {
        Endpoint { sign: Sign::Minus, orbit }
    }
    pub fn plus(orbit: u32) -> Self {
        Endpoint { sign: Sign::Plus, orbit }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Minus => '-',
            Sign::Plus => '+',
        };
        write!(f, "{}{}", self.orbit, s)
    }
}

/// A cyclic word of `2r` signed endpoints, one `-` and one `+` per orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    r: u32,
    cyc: Vec<Endpoint>,
}

impl Diagram {
    /// Validates multiplicities: each orbit in `1..=r` appears exactly once
    /// with each sign and the word has length `2r`.
    pub fn new(r: u32, cyc: Vec<Endpoint>) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidDiagram("orbit count must be at least 1".into()));
        }
        if cyc.len() != 2 * r as usize {
            return Err(Error::InvalidDiagram(format!(
                "expected {} endpoints for r={}, got {}",
                2 * r,
                r,
                cyc.len()
            )));
        }
        let mut seen = vec![[false; 2]; r as usize];
        for e in &cyc {
            if e.orbit < 1 || e.orbit > r {
                return Err(Error::InvalidDiagram(format!(
                    "orbit {} out of range 1..={}",
                    e.orbit, r
                )));
            }
            let slot = &mut seen[(e.orbit - 1) as usize][(e.sign == Sign::Plus) as usize];
            if *slot {
                return Err(Error::InvalidDiagram(format!("orbit {} has two {} ends", e.orbit, e)));
            }
            *slot = true;
        }
        Ok(Diagram { r, cyc })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn endpoints(&self) -> &[Endpoint] {
        &self.cyc
    }

    pub fn len(&self) -> usize {
        self.cyc.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of the given endpoint in the word.
    pub fn position(&self, e: Endpoint) -> usize {
        self.cyc.iter().position(|&x| x == e).expect("endpoint present by validation")
    }

    fn rotation_relabeled(&self, start: usize) -> Vec<Endpoint> {
        // Relabel orbits by first appearance from `start`; for a fixed
        // rotation this is the lexicographically least relabeling.
        let n = self.cyc.len();
        let mut map = vec![0u32; self.r as usize + 1];
        let mut next = 1u32;
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let e = self.cyc[(start + k) % n];
            let m = &mut map[e.orbit as usize];
            if *m == 0 {
                *m = next;
                next += 1;
            }
            out.push(Endpoint { sign: e.sign, orbit: *m });
        }
        out
    }

    /// Canonical representative: the lexicographically least word over all
    /// rotations composed with orbit relabelings, endpoints compared
    /// sign-major. Idempotent; two diagrams are equal up to rotation and
    /// relabeling iff their canonical forms are identical sequences.
    pub fn canonical_form(&self) -> Diagram {
        let (start, _) = self.canonical_map();
        Diagram { r: self.r, cyc: self.rotation_relabeled(start) }
    }

    /// The rotation start and orbit relabeling realizing the canonical form;
    /// `relabel[old - 1]` is the new label of orbit `old`.
    pub fn canonical_map(&self) -> (usize, Vec<u32>) {
        let n = self.cyc.len();
        let mut best: Option<(Vec<Endpoint>, usize)> = None;
        for start in 0..n {
            let cand = self.rotation_relabeled(start);
            if best.as_ref().map_or(true, |(b, _)| cand < *b) {
                best = Some((cand, start));
            }
        }
        let (_, start) = best.expect("nonempty word");
        let mut relabel = vec![0u32; self.r as usize];
        let mut next = 1u32;
        for k in 0..n {
            let e = self.cyc[(start + k) % n];
            if relabel[(e.orbit - 1) as usize] == 0 {
                relabel[(e.orbit - 1) as usize] = next;
                next += 1;
            }
        }
        (start, relabel)
    }

    /// All diagram automorphisms: pairs (rotation, relabeling) mapping the
    /// word to itself.
    pub fn automorphisms(&self) -> Vec<(usize, Vec<u32>)> {
        let n = self.cyc.len();
        let mut out = Vec::new();
        for start in 0..n {
            // Relabeling forced by matching position k to position start+k.
            let mut relabel = vec![0u32; self.r as usize];
            let mut ok = true;
            for k in 0..n {
                let from = self.cyc[k];
                let to = self.cyc[(start + k) % n];
                if from.sign != to.sign {
                    ok = false;
                    break;
                }
                let slot = &mut relabel[(from.orbit - 1) as usize];
                if *slot == 0 {
                    *slot = to.orbit;
                } else if *slot != to.orbit {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push((start, relabel));
            }
        }
        out
    }

    pub fn is_canonical(&self) -> bool {
        self.cyc == self.canonical_form().cyc
    }

    /// Maximal runs of equal sign in cyclic order.
    pub fn adjacency_profile(&self) -> AdjacencyProfile {
        let n = self.cyc.len();
        // Start scanning at a run boundary so the wrap-around run is whole.
        let mut start = 0;
        while start < n && self.cyc[(start + n - 1) % n].sign == self.cyc[start].sign {
            start += 1;
            if start == n {
                unreachable!("a valid diagram has both signs");
            }
        }
        let mut blocks: Vec<Block> = Vec::new();
        let mut k = 0;
        while k < n {
            let sign = self.cyc[(start + k) % n].sign;
            let mut orbits = Vec::new();
            while k < n && self.cyc[(start + k) % n].sign == sign {
                orbits.push(self.cyc[(start + k) % n].orbit);
                k += 1;
            }
            blocks.push(Block { sign, orbits });
        }
        debug_assert!(blocks.len() % 2 == 0);
        AdjacencyProfile { blocks }
    }

    /// Block index (in `adjacency_profile` order) of each endpoint.
    pub fn block_of(&self, e: Endpoint) -> usize {
        let profile = self.adjacency_profile();
        for (i, b) in profile.blocks.iter().enumerate() {
            if b.sign == e.sign && b.orbits.contains(&e.orbit) {
                return i;
            }
        }
        unreachable!("endpoint present by validation")
    }

    /// Whether the given orbits' ends of `sign` all lie in one adjacency block.
    pub fn ends_in_one_block(&self, orbits: &BTreeSet<u32>, sign: Sign) -> bool {
        let profile = self.adjacency_profile();
        let mut blocks = orbits.iter().map(|&o| {
            profile
                .blocks
                .iter()
                .position(|b| b.sign == sign && b.orbits.contains(&o))
                .expect("orbit present")
        });
        let first = match blocks.next() {
            Some(b) => b,
            None => return true,
        };
        blocks.all(|b| b == first)
    }

    /// Unordered orbit pairs whose endpoints strictly interleave in the
    /// cyclic order: `{i,j}` is present iff the four ends read
    /// `i- j- i+ j+` or `i- j+ i+ j-` around the circle.
    pub fn crossings(&self) -> BTreeSet<(u32, u32)> {
        let mut out = BTreeSet::new();
        for i in 1..=self.r {
            for j in (i + 1)..=self.r {
                if self.pair_crosses(i, j) {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    pub fn pair_crosses(&self, i: u32, j: u32) -> bool {
        let a0 = self.position(Endpoint::minus(i));
        let a1 = self.position(Endpoint::plus(i));
        // j's ends interleave i's iff exactly one of them lies on the arc
        // from i- to i+ (going forward).
        let in_arc = |p: usize| {
            let n = self.len();
            (p + n - a0) % n < (a1 + n - a0) % n && p != a0
        };
        in_arc(self.position(Endpoint::minus(j))) != in_arc(self.position(Endpoint::plus(j)))
    }

    /// A word is crossing-minimal when no permutation inside an adjacency
    /// block lowers the crossing count. Since swapping two same-sign ends
    /// toggles exactly that pair's crossing status, this holds iff no crossing
    /// pair shares a minus block or a plus block.
    pub fn is_crossing_minimal(&self) -> bool {
        for &(i, j) in &self.crossings() {
            let set: BTreeSet<u32> = [i, j].into_iter().collect();
            if self.ends_in_one_block(&set, Sign::Minus) || self.ends_in_one_block(&set, Sign::Plus)
            {
                return false;
            }
        }
        true
    }

    /// Transitive closure of the crossing relation: orbits that cannot be
    /// separated by any chord disjoint from the arrows.
    pub fn crossing_groups(&self) -> Vec<BTreeSet<u32>> {
        let r = self.r as usize;
        let mut parent: Vec<usize> = (0..r).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let root = find(p, p[x]);
                p[x] = root;
            }
            p[x]
        }
        for &(i, j) in &self.crossings() {
            let (a, b) = (find(&mut parent, i as usize - 1), find(&mut parent, j as usize - 1));
            parent[a] = b;
        }
        let mut groups: std::collections::BTreeMap<usize, BTreeSet<u32>> = Default::default();
        for o in 0..r {
            let root = find(&mut parent, o);
            groups.entry(root).or_default().insert(o as u32 + 1);
        }
        groups.into_values().collect()
    }

    /// Swaps the `+` ends of orbits `i` and `j` in place of each other,
    /// turning a crossing of the pair into a nested pair or back.
    pub fn swap_plus_ends(&self, i: u32, j: u32) -> Diagram {
        let pi = self.position(Endpoint::plus(i));
        let pj = self.position(Endpoint::plus(j));
        let mut cyc = self.cyc.clone();
        cyc.swap(pi, pj);
        Diagram { r: self.r, cyc }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={}; cyc=", self.r)?;
        for (k, e) in self.cyc.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = Error;

    /// Parses the notation `r=<int>; cyc=<tok> <tok> ...`, `<tok> = <orbit><sign>`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let rest = text
            .strip_prefix("r=")
            .ok_or_else(|| Error::parse("expected leading `r=`"))?;
        let (rpart, cycpart) = rest
            .split_once(';')
            .ok_or_else(|| Error::parse("expected `;` after orbit count"))?;
        let r: u32 = rpart
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad orbit count `{}`", rpart.trim())))?;
        let cyc_str = cycpart
            .trim()
            .strip_prefix("cyc=")
            .ok_or_else(|| Error::parse("expected `cyc=` after orbit count"))?;
        let mut cyc = Vec::new();
        for tok in cyc_str.split_whitespace() {
            let (orbit_str, sign) = tok.split_at(tok.len() - 1);
            let sign = match sign {
                "-" => Sign::Minus,
                "+" => Sign::Plus,
                _ => return Err(Error::parse(format!("malformed token `{}`", tok))),
            };
            let orbit: u32 = orbit_str
                .parse()
                .map_err(|_| Error::parse(format!("malformed token `{}`", tok)))?;
            cyc.push(Endpoint { sign, orbit });
        }
        Diagram::new(r, cyc)
    }
}

/// Endpoints of one adjacency subfamily: a maximal same-sign run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub sign: Sign,
    pub orbits: Vec<u32>,
}

/// The sequence of adjacency subfamilies; `2 r'` is their number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyProfile {
    pub blocks: Vec<Block>,
}

impl AdjacencyProfile {
    pub fn r_prime(&self) -> u32 {
        (self.blocks.len() / 2) as u32
    }
}

/// Convenience: parse a diagram or panic (test and fixture helper).
pub fn diagram(text: &str) -> Diagram {
    text.parse().expect("valid diagram literal")
}
