//! Backtracking search: integer sets, budgets and sets with no sequencing.
//!
//! ```bash
//! cargo run -p weak-freiman --example integer_search
//! ```

use weak_freiman::groups::{Element, Group};
use weak_freiman::sequencing::{search_sequencing, sequence_integers, SequencingError};

fn ints(xs: &[i64]) -> Vec<Element> {
    xs.iter().copied().map(Element::int).collect()
}

fn fmt(items: &[Element]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn main() {
    for set in [&[1, 2, -3][..], &[1, -1, 2], &[5], &[3, -7, 4, 10, -2, -8]] {
        let s = sequence_integers(&ints(set)).unwrap();
        println!("{{{}}} -> ({})  sums {}", fmt(&ints(set)), fmt(&s.ordering), fmt(&s.partial_sums));
    }

    // past ten elements the generic search wants a budget
    let big = ints(&[1, -2, 3, -4, 5, -6, 7, -8, 9, -10, 11, -12]);
    if let Err(SequencingError::BudgetRequired(n)) = search_sequencing(&Group::integers(), &big, None) {
        println!("{n} elements: budget required");
    }
    println!("sequence_integers: ({})", fmt(&sequence_integers(&big).unwrap().ordering));
    let s = search_sequencing(&Group::integers(), &big, Some(1_000_000)).unwrap();
    println!("with budget: ({})", fmt(&s.ordering));

    // D_6 \ {0} is the classic set with no sequencing
    let d6 = Group::dihedral(3).unwrap();
    let zero = d6.identity();
    let all: Vec<Element> = d6.enumerate().unwrap().into_iter().filter(|a| *a != zero).collect();
    println!("D_6 \\ {{0}}: {}", search_sequencing(&d6, &all, None).unwrap_err());
    match search_sequencing(&d6, &all, Some(10)) {
        Err(e) => println!("with a 10-node budget: {e}"),
        Ok(s) => println!("{:?}", s.ordering),
    }
}
