//! Shared test oracles, independent of the library's implementation paths.

use brouwer_core::diagram::{Diagram, Endpoint, Sign};
use rand::Rng;

/// Dehornoy handle reduction: decides triviality of a braid word without
/// normal forms. Used as the independent word-problem oracle.
pub fn handle_reduction_trivial(strands: usize, word: &[i32]) -> bool {
    let mut w: Vec<i32> = Vec::new();
    for &l in word {
        push_free(&mut w, l);
    }
    let mut steps = 0usize;
    loop {
        if w.is_empty() {
            return true;
        }
        let main = w.iter().map(|l| l.unsigned_abs()).min().unwrap();
        let signs: Vec<i32> = w
            .iter()
            .filter(|l| l.unsigned_abs() == main)
            .map(|l| l.signum())
            .collect();
        if signs.iter().all(|&s| s == signs[0]) {
            // A reduced word whose main generator occurs with one sign only
            // is nontrivial.
            return false;
        }
        // First handle of the main generator: earliest closing letter.
        let mut start = None;
        let mut handle = None;
        for (q, &l) in w.iter().enumerate() {
            if l.unsigned_abs() != main {
                continue;
            }
            if let Some((p, e)) = start {
                if l.signum() != e {
                    handle = Some((p, q));
                    break;
                }
            }
            start = Some((q, l.signum()));
        }
        let (p, q) = handle.expect("mixed signs imply a handle");
        let e = w[p].signum();
        let i = main as i32;
        let mut reduced: Vec<i32> = w[..p].to_vec();
        for &l in &w[p + 1..q] {
            if l.unsigned_abs() == main + 1 {
                // σ_{i+1}^{±1} -> σ_{i+1}^{-e} σ_i^{±1} σ_{i+1}^{e}
                push_free(&mut reduced, -(e * (i + 1)));
                push_free(&mut reduced, l.signum() * i);
                push_free(&mut reduced, e * (i + 1));
            } else {
                push_free(&mut reduced, l);
            }
        }
        for &l in &w[q + 1..] {
            push_free(&mut reduced, l);
        }
        w = reduced;
        steps += 1;
        assert!(steps < 2_000_000, "handle reduction exploded on {} strands", strands);
    }
}

fn push_free(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Brute-force enumeration of all canonical crossing-minimal diagrams,
/// generating every permutation of the endpoint multiset directly.
pub fn brute_force_diagrams(r: u32) -> Vec<Diagram> {
    let mut tokens: Vec<Endpoint> = Vec::new();
    for orbit in 1..=r {
        tokens.push(Endpoint::minus(orbit));
        tokens.push(Endpoint::plus(orbit));
    }
    let mut found = std::collections::BTreeSet::new();
    permute_tokens(&mut tokens, 0, &mut |word| {
        let d = Diagram::new(r, word.to_vec()).unwrap();
        if d.is_crossing_minimal() {
            found.insert(d.canonical_form().endpoints().to_vec());
        }
    });
    found.into_iter().map(|cyc| Diagram::new(r, cyc).unwrap()).collect()
}

fn permute_tokens(items: &mut Vec<Endpoint>, k: usize, emit: &mut impl FnMut(&[Endpoint])) {
    if k == items.len() {
        emit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_tokens(items, k + 1, emit);
        items.swap(k, i);
    }
}

/// Brute-force reducing-chord oracle: a chord class per gap pair whose two
/// boundary arcs both contain at least one whole orbit and whose endpoints
/// can be joined without meeting an arrow. The latter is decided by checking
/// that every arrow and every welded crossing group lies entirely on one
/// side.
pub fn brute_force_chords(d: &Diagram) -> Vec<(usize, usize)> {
    let n = d.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let mut side = vec![false; n];
            for (p, s) in side.iter_mut().enumerate() {
                *s = p > a && p <= b;
            }
            let mut whole = true;
            let mut left = 0;
            let mut right = 0;
            for orbit in 1..=d.r() {
                let pm = d.position(Endpoint::minus(orbit));
                let pp = d.position(Endpoint::plus(orbit));
                if side[pm] != side[pp] {
                    whole = false;
                    break;
                }
                if side[pm] {
                    left += 1;
                } else {
                    right += 1;
                }
            }
            if !whole || left == 0 || right == 0 {
                continue;
            }
            // Welded groups must not straddle the cut.
            let mut welded_ok = true;
            for group in d.crossing_groups() {
                let mut sides = group
                    .iter()
                    .map(|&o| side[d.position(Endpoint::minus(o))]);
                let first = sides.next().unwrap();
                if sides.any(|s| s != first) {
                    welded_ok = false;
                    break;
                }
            }
            if welded_ok {
                out.push((a, b));
            }
        }
    }
    out
}

/// A random braid word with letters below `strands`, length up to `max_len`.
pub fn random_word(rng: &mut impl Rng, strands: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let k = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect()
}

/// Rejection-samples a random pure braid word of length at most `max_len`.
pub fn random_pure_word(rng: &mut impl Rng, strands: usize, max_len: usize) -> Vec<i32> {
    loop {
        let word = random_word(rng, strands, max_len);
        let b = brouwer_core::braid::BraidWord::new(strands, word.clone()).unwrap();
        if b.is_pure() {
            return word;
        }
    }
}

/// A random diagram obtained by shuffling endpoint tokens until valid
/// minimality holds.
pub fn random_minimal_diagram(rng: &mut impl Rng, r: u32) -> Diagram {
    let mut tokens: Vec<Endpoint> = Vec::new();
    for orbit in 1..=r {
        tokens.push(Endpoint::minus(orbit));
        tokens.push(Endpoint::plus(orbit));
    }
    loop {
        for i in (1..tokens.len()).rev() {
            let j = rng.gen_range(0..=i);
            tokens.swap(i, j);
        }
        let d = Diagram::new(r, tokens.clone()).unwrap();
        if d.is_crossing_minimal() {
            return d;
        }
    }
}

/// Sanity helper: a diagram word rotated and relabeled at random.
pub fn random_rotation_relabel(rng: &mut impl Rng, d: &Diagram) -> Diagram {
    let n = d.len();
    let start = rng.gen_range(0..n);
    let mut relabel: Vec<u32> = (1..=d.r()).collect();
    for i in (1..relabel.len()).rev() {
        let j = rng.gen_range(0..=i);
        relabel.swap(i, j);
    }
    let cyc: Vec<Endpoint> = (0..n)
        .map(|k| {
            let e = d.endpoints()[(start + k) % n];
            Endpoint {
                sign: e.sign,
                orbit: relabel[(e.orbit - 1) as usize],
            }
        })
        .collect();
    Diagram::new(d.r(), cyc).unwrap()
}

/// The spec's sign alphabet, re-exported for convenience in tests.
pub fn sign_of(e: &Endpoint) -> Sign {
    e.sign
}
