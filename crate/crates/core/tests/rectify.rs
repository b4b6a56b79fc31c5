use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use weak_freiman::groups::{Element, Group};
use weak_freiman::rectify::{
    band_reduce, bareiss_det, crt_inverse, det_i8, rank, rectify, zero_sum_orderings, RectifyOptions,
};

/// Ordered tuples of distinct positions (length ≤ `max_len`) summing to zero, by brute force.
fn zero_tuples(g: &Group, set: &[Element], max_len: usize) -> Vec<Vec<usize>> {
    fn go(g: &Group, set: &[Element], max_len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !path.is_empty() {
            let items: Vec<Element> = path.iter().map(|&i| set[i].clone()).collect();
            if g.is_zero(&g.sum(&items).unwrap()).unwrap() {
                out.push(path.clone());
            }
        }
        if path.len() == max_len {
            return;
        }
        for i in 0..set.len() {
            if !path.contains(&i) {
                path.push(i);
                go(g, set, max_len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, set, max_len, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn subset_of(g: &Group, picks: &[prop::sample::Index], k: usize) -> Vec<Element> {
    let zero = g.identity();
    let mut pool: Vec<Element> = g.enumerate().unwrap().into_iter().filter(|a| *a != zero).collect();
    let mut out = Vec::new();
    for p in picks.iter().take(k) {
        out.push(pool.remove(p.index(pool.len())));
    }
    out
}

fn finite_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        Just(Group::cyclic(127).unwrap()),
        Just(Group::cyclic(131).unwrap()),
        Just(Group::dihedral(127).unwrap()),
        Just(Group::semidirect_zm(127, vec![4], vec![-1]).unwrap()),
        Just(Group::semidirect_zm(131, vec![2, 2], vec![-1, 1]).unwrap()),
        Just(Group::semidirect_zm(127, vec![3], vec![1]).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn determinant_bound(n in 1usize..=5, entries in prop::collection::vec(-1i8..=1, 25)) {
        let m: Vec<Vec<i8>> = (0..n).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
        let d = det_i8(&m);
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        prop_assert_eq!(&d, &bareiss_det(&big));
        prop_assert!(d.magnitude() <= &BigUint::from(factorial(n)));
        prop_assert_eq!(!d.is_zero(), rank(&big) == n);
        prop_assert_eq!(!d.is_zero(), !d.mod_floor(&BigInt::from(127)).is_zero());
    }

    #[test]
    fn rectification_is_a_weak_isomorphism(g in finite_group(), k in 1usize..=5, picks in prop::collection::vec(any::<prop::sample::Index>(), 5)) {
        let set = subset_of(&g, &picks, k);
        let res = rectify(&g, &set, RectifyOptions::default()).unwrap();
        prop_assert!(res.bound.satisfied);
        prop_assert_eq!(&res.target_group, &g.lifted().unwrap());
        for (a, b) in res.pairing() {
            prop_assert_eq!(a.h_part(), b.h_part());
        }
        let src = zero_tuples(&g, &res.source, k);
        prop_assert_eq!(&src, &zero_tuples(&res.target_group, &res.target, k));
        prop_assert_eq!(&src, &zero_sum_orderings(&g, &set, k).unwrap());
    }

    #[test]
    fn scaling_preserves_zero_sums(raw in prop::collection::btree_set((-5i64..=5, 0u64..2), 1..=5), c in 1i64..=7) {
        let g = Group::semidirect_z(vec![2], vec![-1]).unwrap();
        let set: Vec<Element> = raw.iter().filter(|p| **p != (0, 0)).map(|&(x, h)| Element::semi(x, &[h])).collect();
        prop_assume!(!set.is_empty());
        let scaled: Vec<Element> = raw.iter().filter(|p| **p != (0, 0)).map(|&(x, h)| Element::semi(c * x, &[h])).collect();
        prop_assert_eq!(zero_tuples(&g, &set, set.len()), zero_tuples(&g, &scaled, set.len()));
    }

    #[test]
    fn band_reduction_lands_in_band(m in prop::sample::select(vec![29u64, 31, 37, 53, 101, 127]), k in 1usize..=3, raw in prop::collection::btree_set(0u64..254, 1..=3)) {
        let set: Vec<u64> = raw.into_iter().map(|x| x % (2 * m)).collect::<std::collections::BTreeSet<_>>().into_iter().take(k).collect();
        let b = band_reduce(m, &set, k).unwrap();
        let band = (m / k as u64) as i64;
        let two_m = 2 * m as i64;
        for (&x, &y) in set.iter().zip(&b.images) {
            prop_assert_eq!(x * b.unit % (2 * m), y);
            let y = y as i64;
            prop_assert!((-band..=band).any(|c| (y - c).rem_euclid(two_m) == 0 || (y - m as i64 - c).rem_euclid(two_m) == 0));
        }
        let mut hit = vec![false; 2 * m as usize];
        for x in 0..2 * m {
            hit[(x * b.unit % (2 * m)) as usize] = true;
        }
        prop_assert!(hit.iter().all(|&h| h));
        prop_assert_eq!(b.unit.gcd(&(2 * m)), 1);
    }

    #[test]
    fn crt_inverse_splits(m in prop::sample::select(vec![3u64, 29, 127]), x1 in 0u64..2, x2 in 0u64..127) {
        let x2 = x2 % m;
        let v = crt_inverse(m, x1, x2);
        prop_assert_eq!((v % 2, v % m), (x1, x2));
    }
}

#[test]
fn dicyclic_embedding_is_faithful() {
    let g = Group::dicyclic(29).unwrap();
    let zero = g.identity();
    let pool: Vec<Element> = g.enumerate().unwrap().into_iter().filter(|a| *a != zero).collect();
    let n = pool.len();
    let mut checked = 0u64;
    let mut check = |set: Vec<Element>| {
        let res = rectify(&g, &set, RectifyOptions::default()).unwrap();
        assert_eq!(
            zero_tuples(&g, &set, set.len()),
            zero_tuples(&res.target_group, &res.target, set.len()),
            "{set:?}"
        );
        checked += 1;
    };
    for i in 0..n {
        check(vec![pool[i].clone()]);
        for j in i + 1..n {
            check(vec![pool[i].clone(), pool[j].clone()]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                check(vec![pool[i].clone(), pool[j].clone(), pool[l].clone()]);
            }
        }
    }
    assert_eq!(checked, 115 + 6555 + 246_905);
}
