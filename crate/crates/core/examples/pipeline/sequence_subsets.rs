//! End-to-end sequencing in every finite family, with the path that produced it.
//!
//! ```bash
//! cargo run -p weak-freiman --example sequence_subsets
//! ```

use weak_freiman::groups::{Element, Group};
use weak_freiman::pipeline::{
    sequence, sequence_cyclic_subset, sequence_dicyclic_subset, sequence_dihedral_subset, Method, SequenceOptions,
    SequenceOutcome,
};

fn show(label: &str, out: &SequenceOutcome) {
    let ord: Vec<String> = out.sequencing.ordering.iter().map(ToString::to_string).collect();
    println!("{label:<28} {:<18} {}", out.path.to_string(), ord.join("  "));
    for d in &out.diagnostics {
        println!("{:<28} note: {d}", "");
    }
}

fn main() {
    let opts = SequenceOptions::default();
    let z = |xs: &[u64]| xs.iter().copied().map(Element::cyc).collect::<Vec<_>>();

    show("Z_7 {1,2,4}", &sequence_cyclic_subset(7, &z(&[1, 2, 4]), &opts).unwrap());
    show("Z_13 {1,3,9,12}", &sequence_cyclic_subset(13, &z(&[1, 3, 9, 12]), &opts).unwrap());

    let d = [Element::semi(1, &[1]), Element::semi(6, &[1])];
    show("D_58 two reflections", &sequence_dihedral_subset(29, &d, &opts).unwrap());
    let d = [Element::semi(3, &[0]), Element::semi(26, &[0]), Element::semi(4, &[1])];
    show("D_58 mixed", &sequence_dihedral_subset(29, &d, &opts).unwrap());

    let q = [Element::dic(1, 2), Element::dic(2, 3), Element::dic(1, 5)];
    show("Dic_29 triple", &sequence_dicyclic_subset(29, &q, &opts).unwrap());

    let g = Group::semidirect_zm(31, vec![2, 2], vec![-1, 1]).unwrap();
    let set = [Element::semi(5, &[1, 0]), Element::semi(26, &[0, 1]), Element::semi(0, &[1, 1])];
    show("Z_31 ⋊ (Z_2 × Z_2)", &sequence(&g, &set, &opts).unwrap());

    // too small for the bound: rectification may still work, otherwise search takes over
    let d8 = Group::dihedral(4).unwrap();
    let set = [Element::semi(1, &[0]), Element::semi(2, &[0]), Element::semi(0, &[1]), Element::semi(1, &[1])];
    show("D_8 (below the bound)", &sequence(&d8, &set, &opts).unwrap());

    let search = SequenceOptions {
        method: Method::Search,
        ..Default::default()
    };
    show("Z_7 {1,2,4}, search only", &sequence(&Group::cyclic(7).unwrap(), &z(&[1, 2, 4]), &search).unwrap());

    let d6 = Group::dihedral(3).unwrap();
    let zero = d6.identity();
    let all: Vec<Element> = d6.enumerate().unwrap().into_iter().filter(|a| *a != zero).collect();
    println!("{:<28} {}", "D_6 \\ {0}", sequence(&d6, &all, &opts).unwrap_err());

    let out = sequence_cyclic_subset(7, &z(&[1, 2, 4]), &opts).unwrap();
    println!("{}", out.to_json(&Group::cyclic(7).unwrap()));
}
