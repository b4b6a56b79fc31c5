//! Band reduction on `Z_{2m}` and the embedding of `Dic_m` subsets into `Z ⋊ Z_4`.
//!
//! ```bash
//! cargo run -p weak-freiman --example dicyclic_embedding
//! ```

use weak_freiman::groups::{Element, Group};
use weak_freiman::rectify::{band_reduce, crt_inverse, rectify, RectifyOptions};

fn main() {
    let m = 29;
    println!("CRT⁻¹(1, 3) in Z_58 = {}", crt_inverse(m, 1, 3));
    for (set, k) in [(vec![20u64, 7], 2), (vec![10, 7], 3), (vec![10, 40, 23], 3)] {
        let b = band_reduce(m, &set, k).unwrap();
        println!("band ⌊{m}/{k}⌋ = {}: {set:?} -> {:?} (a = {}, unit {})", b.band, b.images, b.multiplier, b.unit);
    }
    println!("{}", band_reduce(9, &[1, 2, 4, 5, 7, 8, 3, 6], 8).unwrap_err());

    let dic = Group::dicyclic(m).unwrap();
    let triples = [
        [Element::dic(1, 2), Element::dic(2, 3), Element::dic(1, 5)],
        [Element::dic(1, 5), Element::dic(2, 2), Element::dic(1, 3)],
        [Element::dic(0, 10), Element::dic(0, 7), Element::dic(1, 0)],
    ];
    for set in triples {
        let res = rectify(&dic, &set, RectifyOptions::default()).unwrap();
        let t = &res.target_group;
        println!("{} -> {} (a = {})", dic.spec(), t.spec(), res.multiplier.unwrap());
        for (a, b) in res.pairing() {
            println!("    {a:>8} -> {b}");
        }
        println!(
            "    sum {} in Dic, {} in Z ⋊ Z_4",
            dic.sum(&set).unwrap(),
            t.sum(&res.target).unwrap()
        );
    }
}
