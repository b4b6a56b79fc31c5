//! The explicit construction over `Z ⋊ H`, one set per case.
//!
//! ```bash
//! cargo run -p weak-freiman --example semidirect_construction
//! ```

use weak_freiman::groups::{Element, Group};
use weak_freiman::sequencing::{sequence_semidirect_over_z, zigzag_order};

fn main() {
    let g = Group::semidirect_z(vec![4], vec![-1]).unwrap();
    let sets: [(&str, Vec<(i64, u64)>); 6] = [
        ("no flips", vec![(1, 0), (-2, 2), (3, 0)]),
        ("flips only", vec![(3, 1), (-1, 3), (4, 1), (2, 3)]),
        ("flips, one base value", vec![(2, 1), (2, 3)]),
        ("flips and zero base", vec![(5, 1), (-1, 3), (0, 2)]),
        ("everything", vec![(4, 0), (-3, 2), (0, 2), (1, 1), (7, 3), (-2, 1)]),
        ("singleton", vec![(-9, 3)]),
    ];
    for (label, raw) in sets {
        let set: Vec<Element> = raw.iter().map(|&(x, h)| Element::semi(x, &[h])).collect();
        let c = sequence_semidirect_over_z(&g, &set).unwrap();
        let ord: Vec<String> = c.sequencing.ordering.iter().map(ToString::to_string).collect();
        let sums: Vec<String> = c.sequencing.partial_sums.iter().map(ToString::to_string).collect();
        println!("{label:<22} {:?}{}", c.case, if c.negated { " (mirrored)" } else { "" });
        println!("    ordering {}", ord.join(" "));
        println!("    sums     {}", sums.join(" "));
    }

    let flips: Vec<Element> = [5, -1, 3, 2, 8].iter().map(|&y| Element::semi(y, &[1])).collect();
    let z: Vec<String> = zigzag_order(&g, &flips).unwrap().iter().map(ToString::to_string).collect();
    println!("zigzag of flips: {}", z.join(" "));
}
