use std::collections::HashMap;

use crate::groups::{Element, Group};

/// Outcome of a homomorphism check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakCheck {
    pub holds: bool,
    /// First violating source tuple by `(length, positions)`.
    pub witness: Option<Vec<Element>>,
    /// Zero-sum source tuples examined.
    pub zero_sums: usize,
}

/// Whether the position-wise map `src[i] ↦ dst[i]` is a weak Freiman
/// homomorphism of order `order`: every ordered tuple of distinct elements of
/// `src` of length at most `order` summing to zero is sent to a tuple summing
/// to zero.
pub fn check_weak_homomorphism(src_group: &Group, src: &[Element], dst_group: &Group, dst: &[Element], order: usize) -> WeakCheck {
    assert_eq!(src.len(), dst.len(), "pairing must be a bijection");
    struct Walk<'a> {
        sg: &'a Group,
        dg: &'a Group,
        src: &'a [Element],
        dst: &'a [Element],
        order: usize,
        s_zero: Element,
        d_zero: Element,
        used: Vec<bool>,
        path: Vec<usize>,
        best: Option<Vec<usize>>,
        zero_sums: usize,
    }

    fn go(w: &mut Walk<'_>, s: &Element, d: &Element) {
        for i in 0..w.src.len() {
            if w.used[i] {
                continue;
            }
            let s2 = w.sg.add_unchecked(s, &w.src[i]);
            let d2 = w.dg.add_unchecked(d, &w.dst[i]);
            w.path.push(i);
            if s2 == w.s_zero {
                w.zero_sums += 1;
                if d2 != w.d_zero {
                    let better = match &w.best {
                        None => true,
                        Some(b) => (w.path.len(), &w.path) < (b.len(), b),
                    };
                    if better {
                        w.best = Some(w.path.clone());
                    }
                }
            }
            if w.path.len() < w.order {
                w.used[i] = true;
                go(w, &s2, &d2);
                w.used[i] = false;
            }
            w.path.pop();
        }
    }

    let mut w = Walk {
        sg: src_group,
        dg: dst_group,
        src,
        dst,
        order: order.min(src.len()),
        s_zero: src_group.identity(),
        d_zero: dst_group.identity(),
        used: vec![false; src.len()],
        path: Vec::new(),
        best: None,
        zero_sums: 0,
    };
    if w.order > 0 {
        go(&mut w, &src_group.identity(), &dst_group.identity());
    }
    WeakCheck {
        holds: w.best.is_none(),
        witness: w.best.map(|p| p.iter().map(|&i| src[i].clone()).collect()),
        zero_sums: w.zero_sums,
    }
}

/// Weak Freiman isomorphism of order `order`: the homomorphism check in both
/// directions.
pub fn check_weak_isomorphism(a_group: &Group, a: &[Element], b_group: &Group, b: &[Element], order: usize) -> bool {
    check_weak_homomorphism(a_group, a, b_group, b, order).holds
        && check_weak_homomorphism(b_group, b, a_group, a, order).holds
}

/// Whether `src[i] ↦ dst[i]` is a Freiman homomorphism of order `order`:
/// equal `order`-fold sums (repetition allowed, left to right) have equal
/// images. Returns the first pair of index tuples breaking it.
pub fn check_freiman_homomorphism(
    src_group: &Group,
    src: &[Element],
    dst_group: &Group,
    dst: &[Element],
    order: usize,
) -> Result<(), (Vec<usize>, Vec<usize>)> {
    assert_eq!(src.len(), dst.len(), "pairing must be a bijection");
    let n = src.len();
    if n == 0 || order == 0 {
        return Ok(());
    }
    let mut seen: HashMap<Element, (Element, Vec<usize>)> = HashMap::new();
    let mut idx = vec![0usize; order];
    loop {
        let s = src_group.sum(idx.iter().map(|&i| &src[i])).expect("members");
        let d = dst_group.sum(idx.iter().map(|&i| &dst[i])).expect("members");
        match seen.get(&s) {
            Some((d0, w)) if *d0 != d => return Err((w.clone(), idx)),
            Some(_) => {}
            None => {
                seen.insert(s, (d, idx.clone()));
            }
        }
        // odometer
        let mut p = order;
        loop {
            if p == 0 {
                return Ok(());
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
        }
    }
}
