//! Checking candidate orderings and reading the verdict.
//!
//! ```bash
//! cargo run -p weak-freiman --example check_orderings
//! ```

use weak_freiman::groups::{Element, Group};
use weak_freiman::sequencing::{is_sequencing, partial_sums};

fn show(g: &Group, ordering: &[Element]) {
    let v = is_sequencing(g, ordering).unwrap();
    let sums: Vec<String> = v.partial_sums.iter().map(ToString::to_string).collect();
    let items: Vec<String> = ordering.iter().map(ToString::to_string).collect();
    print!("{:<12} [{}]  sums {}", g.spec().to_string(), items.join(", "), sums.join(" "));
    match v.collision {
        None if v.terminal_exception_used => println!("  valid (returns to 0)"),
        None => println!("  valid"),
        Some((i, j)) => println!("  s_{i} = s_{j}"),
    }
}

fn main() {
    let z = Group::integers();
    show(&z, &[Element::int(1), Element::int(-1), Element::int(2)]);
    show(&z, &[Element::int(-1), Element::int(2), Element::int(1)]);
    show(&z, &[Element::int(1), Element::int(2), Element::int(-3)]);

    let z7 = Group::cyclic(7).unwrap();
    show(&z7, &[Element::cyc(1), Element::cyc(2), Element::cyc(4)]);
    show(&z7, &[Element::cyc(2), Element::cyc(4), Element::cyc(1)]);

    let d = Group::dihedral(29).unwrap();
    show(&d, &[Element::semi(1, &[1]), Element::semi(6, &[1])]);
    show(&d, &[Element::semi(6, &[1]), Element::semi(1, &[1])]);

    // duplicates are rejected, sums of arbitrary words are not
    println!("{:?}", is_sequencing(&z7, &[Element::cyc(1), Element::cyc(1)]).unwrap_err());
    println!("{:?}", partial_sums(&z7, &[Element::cyc(3), Element::cyc(3)]).unwrap());
}
