use brouwer_core::enumerate::{classify_all, Verdict};
use brouwer_core::walls::{capable_pairs, flow_walls};

fn main() {
    // Capable pairs of the nondeterminant diagrams (wall-set variants).
    let mut variants = 0;
    for c in classify_all(4).unwrap() {
        match c.verdict {
            Verdict::NonDeterminant => {
                let pairs = capable_pairs(&c.dw.diagram);
                variants += pairs.len();
                println!("{} capable {:?}", c.dw.diagram, pairs);
            }
            _ => {}
        }
    }
    println!("wall-set variants over nondeterminant diagrams: {}", variants);
    // Flow walls of every non-crossing diagram leave no irreducible area.
    for r in 1..=4u32 {
        let mut bad = 0;
        for d in brouwer_core::enumerate::enumerate_diagrams(r).unwrap() {
            if d.crossings().is_empty() && flow_walls(&d).has_irreducible_area() {
                bad += 1;
                println!("BAD flow walls: {}", d);
            }
        }
        println!("r={}: non-crossing with irreducible flow walls: {}", r, bad);
    }
}
