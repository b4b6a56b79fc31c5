use proptest::prelude::*;

use weak_freiman::groups::{AbelianSpec, Element, Group, GroupSpec, SignCharacter};

fn small_groups() -> Vec<Group> {
    let mut gs = Vec::new();
    for m in [2, 5, 12, 31, 60] {
        gs.push(Group::cyclic(m).unwrap());
    }
    for m in [3, 5, 7, 15, 29] {
        gs.push(Group::dihedral(m).unwrap());
    }
    for m in [3, 5, 7, 9, 15] {
        gs.push(Group::dicyclic(m).unwrap());
    }
    gs.push(Group::semidirect_zm(5, vec![2, 2], vec![-1, 1]).unwrap());
    gs.push(Group::semidirect_zm(3, vec![4, 2], vec![-1, -1]).unwrap());
    gs.push(Group::semidirect_zm(7, vec![4], vec![1]).unwrap());
    gs
}

#[test]
fn associativity_up_to_order_60() {
    for g in small_groups() {
        let all = g.enumerate().unwrap();
        assert!(all.len() <= 60, "{}", g.spec());
        let step = if all.len() > 40 { 3 } else { 1 };
        for a in all.iter().step_by(step) {
            for b in &all {
                let ab = g.add(a, b).unwrap();
                for c in all.iter().step_by(step) {
                    assert_eq!(g.add(&ab, c).unwrap(), g.add(a, &g.add(b, c).unwrap()).unwrap(), "{}", g.spec());
                }
            }
        }
    }
}

#[test]
fn identity_is_idempotent() {
    for g in small_groups() {
        let zero = g.identity();
        for a in g.enumerate().unwrap() {
            assert_eq!(g.add(&a, &zero).unwrap(), a);
            assert_eq!(g.add(&zero, &a).unwrap(), a);
            assert!(g.is_zero(&g.add(&a, &g.neg(&a).unwrap()).unwrap()).unwrap());
        }
    }
}

#[test]
fn dicyclic_presentation() {
    for m in [3u64, 5, 7, 9] {
        let g = Group::dicyclic(m).unwrap();
        let r = Element::dic(0, 1);
        let s = Element::dic(1, 0);
        assert_eq!(g.add(&r, &s).unwrap(), g.add(&s, &g.neg(&r).unwrap()).unwrap());
        assert!(g.is_zero(&g.sum(&[s.clone(), s.clone(), s.clone(), s.clone()]).unwrap()).unwrap());
        let m_r = g.sum(&vec![r.clone(); m as usize]).unwrap();
        assert_eq!(g.add(&s, &s).unwrap(), m_r);
        assert_eq!(g.order(), Some(4 * m));
    }
}

type Mat = [[u64; 2]; 2];

fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % p;
        }
    }
    c
}

fn mat_pow(a: &Mat, e: u64, p: u64) -> Mat {
    (0..e).fold([[1, 0], [0, 1]], |acc, _| mat_mul(&acc, a, p))
}

/// `r ↦ diag(ζ, ζ⁻¹)`, `s ↦ [[0, -1], [1, 0]]` over `F_p` with `ζ` of order `2m`.
#[test]
fn dicyclic_matches_matrix_representation() {
    for (m, p) in [(3u64, 7u64), (5, 11), (7, 29), (9, 19), (29, 59)] {
        let order_of = |z: u64| (1..p).find(|&e| (0..e).fold(1, |acc, _| acc * z % p) == 1).unwrap();
        let zeta = (2..p).find(|&z| order_of(z) == 2 * m).unwrap();
        let zinv = (1..p).find(|&z| z * zeta % p == 1).unwrap();
        let r_mat: Mat = [[zeta, 0], [0, zinv]];
        let s_mat: Mat = [[0, p - 1], [1, 0]];
        let g = Group::dicyclic(m).unwrap();
        let rep = |a: &Element| -> Mat {
            match a {
                Element::Dic { s, r } => {
                    let e = i64::try_from(r).unwrap().rem_euclid(2 * m as i64) as u64;
                    mat_mul(&mat_pow(&s_mat, u64::from(*s), p), &mat_pow(&r_mat, e, p), p)
                }
                _ => unreachable!(),
            }
        };
        let all = g.enumerate().unwrap();
        let images: Vec<Mat> = all.iter().map(rep).collect();
        let mut distinct = images.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), all.len(), "faithful for m = {m}");
        for (a, ra) in all.iter().zip(&images) {
            for (b, rb) in all.iter().zip(&images) {
                assert_eq!(rep(&g.add(a, b).unwrap()), mat_mul(ra, rb, p));
            }
        }
    }
}

#[test]
fn dihedral_desugars_to_semidirect() {
    for m in 2..=15 {
        let d = Group::dihedral(m).unwrap();
        let s = Group::semidirect_zm(m, vec![2], vec![-1]).unwrap();
        assert_eq!(d.desugared_spec(), s.desugared_spec());
        let all = d.enumerate().unwrap();
        assert_eq!(all, s.enumerate().unwrap());
        for a in &all {
            for b in &all {
                assert_eq!(d.add(a, b).unwrap(), s.add(a, b).unwrap());
            }
        }
    }
    assert_eq!(
        Group::dihedral_z().desugared_spec(),
        Group::semidirect_z(vec![2], vec![-1]).unwrap().desugared_spec()
    );
}

#[test]
fn spec_json_round_trips() {
    for g in small_groups() {
        let text = serde_json::to_string(g.spec()).unwrap();
        let back: GroupSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, g.spec());
        for a in g.enumerate().unwrap() {
            assert_eq!(g.decode_element(&g.encode_element(&a)).unwrap(), a);
        }
    }
}

fn h_strategy() -> impl Strategy<Value = (Vec<u64>, Vec<i8>)> {
    prop::collection::vec((2u64..=8, prop::bool::ANY), 1..=3)
        .prop_filter("|H| ≤ 64", |fs| fs.iter().map(|f| f.0).product::<u64>() <= 64)
        .prop_map(|fs| fs.into_iter().map(|(f, neg)| (f, if neg && f % 2 == 0 { -1 } else { 1 })).unzip())
}

proptest! {
    #[test]
    fn sign_character_is_a_homomorphism((factors, signs) in h_strategy()) {
        let h = AbelianSpec::new(factors);
        let eps = SignCharacter::new(signs);
        let all = h.elements();
        for a in &all {
            for b in &all {
                prop_assert_eq!(eps.eval(&h.add(a, b)), eps.eval(a) * eps.eval(b));
            }
        }
    }

    #[test]
    fn semidirect_z_associates((factors, signs) in h_strategy(), xs in prop::collection::vec(-20i64..=20, 3), seed in 0usize..1000) {
        let g = Group::semidirect_z(factors.clone(), signs).unwrap();
        let hs = AbelianSpec::new(factors).elements();
        let pick = |i: usize| Element::semi(xs[i], &hs[(seed * (i + 7)) % hs.len()]);
        let (a, b, c) = (pick(0), pick(1), pick(2));
        prop_assert_eq!(
            g.add(&g.add(&a, &b).unwrap(), &c).unwrap(),
            g.add(&a, &g.add(&b, &c).unwrap()).unwrap()
        );
    }
}
