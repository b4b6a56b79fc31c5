//! Moving a small subset of `Z_m` or `Z_m ⋊ H` into `Z` or `Z ⋊ H`.
//!
//! ```bash
//! cargo run -p weak-freiman --example rectify_cyclic
//! ```

use weak_freiman::groups::{Element, Group};
use weak_freiman::rectify::{build_system, check_weak_isomorphism, rectify, RectifyOptions};

fn report(g: &Group, set: &[Element]) {
    let res = rectify(g, set, RectifyOptions::default()).unwrap();
    println!("{} -> {}", g.spec(), res.target_group.spec());
    for (a, b) in res.pairing() {
        println!("    {a:>10} -> {b}");
    }
    match &res.pivot {
        Some(p) => println!("    pivot rows {:?} cols {:?} det {} (≡ {} mod m)", p.rows, p.cols, p.det_q, p.det_mod_m),
        None => println!("    no zero sums to preserve"),
    }
    println!("    cleared by {}, bound {}", res.cleared_by, res.bound.to_json());
    let iso = check_weak_isomorphism(g, &res.source, &res.target_group, &res.target, res.order);
    println!("    weak isomorphism of order {}: {}", res.order, iso);
}

fn main() {
    let z7 = Group::cyclic(7).unwrap();
    report(&z7, &[Element::cyc(1), Element::cyc(2), Element::cyc(4)]);

    let z127 = Group::cyclic(127).unwrap();
    report(&z127, &[Element::cyc(100), Element::cyc(50), Element::cyc(104), Element::cyc(7)]);

    let d = Group::dihedral(29).unwrap();
    let set = [Element::semi(2, &[1]), Element::semi(1, &[0]), Element::semi(1, &[1])];
    let system = build_system(&d, &set, 3).unwrap();
    println!("zero-sum rows of {}:", d.spec());
    for (row, w) in system.rows.iter().zip(&system.witnesses) {
        println!("    {row:?} from positions {w:?}");
    }
    report(&d, &set);

    // below the bound: the report says so and strict mode refuses
    let z5 = Group::cyclic(5).unwrap();
    let all: Vec<Element> = (1..5).map(Element::cyc).collect();
    report(&z5, &all);
    let strict = RectifyOptions {
        strict_bounds: true,
        ..Default::default()
    };
    println!("strict: {}", rectify(&z5, &all, strict).unwrap_err());
}
