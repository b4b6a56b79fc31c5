//! Arithmetic in the supported group families.
//!
//! ```bash
//! cargo run -p weak-freiman --example group_arithmetic
//! ```

use weak_freiman::groups::{Element, Group, GroupSpec};

fn main() {
    let z13 = Group::cyclic(13).unwrap();
    println!("{}: 9 + 7 = {}", z13.spec(), z13.add(&Element::cyc(9), &Element::cyc(7)).unwrap());

    // (x, h) + (x', h') = (x + ε(h)·x', h + h')
    let d58 = Group::dihedral(29).unwrap();
    let refl = Element::semi(6, &[1]);
    let rot = Element::semi(1, &[0]);
    println!(
        "{}: {refl} + {rot} = {}, {rot} + {refl} = {}",
        d58.spec(),
        d58.add(&refl, &rot).unwrap(),
        d58.add(&rot, &refl).unwrap()
    );
    println!("dihedral is sugar for {}", d58.desugared_spec());

    let dic = Group::dicyclic(29).unwrap();
    let s = Element::dic(1, 0);
    let r = Element::dic(0, 1);
    println!(
        "{}: s + r = {}, r + s = {}, 2s = {}, 4s = {}",
        dic.spec(),
        dic.add(&s, &r).unwrap(),
        dic.add(&r, &s).unwrap(),
        dic.sum(&[s.clone(), s.clone()]).unwrap(),
        dic.sum(&[s.clone(), s.clone(), s.clone(), s.clone()]).unwrap()
    );

    let h = Group::semidirect_z(vec![2, 4], vec![1, -1]).unwrap();
    let a = Element::semi(5, &[1, 3]);
    println!("{}: -{a} = {}, sign {}", h.spec(), h.neg(&a).unwrap(), h.sign(&a));

    let spec: GroupSpec = serde_json::from_str(r#"{"family":"semidirect_zm","m":29,"h_factors":[2],"gen_signs":[-1]}"#).unwrap();
    let g = spec.validate().unwrap();
    println!("parsed {} with {} elements, equal to D_58: {}", g.spec(), g.order().unwrap(), g == d58);
    println!("encoded: {}", g.encode_elements(&[refl, rot]));
}
