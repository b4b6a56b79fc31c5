//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic, zero
//! tolerance. Every pipeline answer is re-checked by oracles written here.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weak_freiman::groups::{Element, Group};
use weak_freiman::pipeline::{
    sequence, sequence_cyclic_subset, sequence_dicyclic_subset, sequence_dihedral_subset, Method, Path, SequenceOptions,
};
use weak_freiman::rectify::{band_reduce, bareiss_det, check_weak_homomorphism, rectify, RectifyOptions};
use weak_freiman::sequencing::{search_sequencing, sequence_semidirect_over_z, SequencingError};

/// No contiguous block `a_{i+1} + … + a_j` with `(i, j) ≠ (0, k)` sums to zero.
fn blocks_nonzero(g: &Group, ord: &[Element]) -> bool {
    let k = ord.len();
    let zero = g.identity();
    for i in 0..k {
        for j in i + 1..=k {
            if (i, j) != (0, k) && g.sum(&ord[i..j]).unwrap() == zero {
                return false;
            }
        }
    }
    true
}

fn is_permutation_of(ord: &[Element], set: &[Element]) -> bool {
    let mut a = ord.to_vec();
    let mut b = set.to_vec();
    a.sort();
    b.sort();
    a == b
}

fn oracle_ok(g: &Group, ord: &[Element], set: &[Element]) -> bool {
    is_permutation_of(ord, set) && blocks_nonzero(g, ord)
}

fn permutations(items: &[Element]) -> Vec<Vec<Element>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

fn brute_sequenceable(g: &Group, set: &[Element]) -> bool {
    permutations(set).iter().any(|p| blocks_nonzero(g, p))
}

/// All `k`-subsets of `pool`, lexicographic by position.
fn for_each_subset(pool: &[Element], k: usize, f: &mut dyn FnMut(&[Element])) {
    fn go(pool: &[Element], k: usize, start: usize, cur: &mut Vec<Element>, f: &mut dyn FnMut(&[Element])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=pool.len() - (k - cur.len()) {
            cur.push(pool[i].clone());
            go(pool, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k <= pool.len() {
        go(pool, k, 0, &mut Vec::new(), f);
    }
}

fn nonzero(g: &Group) -> Vec<Element> {
    let zero = g.identity();
    g.enumerate().unwrap().into_iter().filter(|a| *a != zero).collect()
}

fn random_subset(rng: &mut ChaCha8Rng, pool: &[Element], k: usize) -> Vec<Element> {
    rand::seq::index::sample(rng, pool.len(), k)
        .into_iter()
        .map(|i| pool[i].clone())
        .collect()
}

struct Report {
    lines: Vec<(bool, String)>,
}

impl Report {
    fn record(&mut self, n: usize, ok: bool, what: &str, detail: String, start: Instant) {
        let line = format!(
            "{} criterion {n}: {what} ({detail}; {:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        println!("{line}");
        self.lines.push((ok, line));
    }
}

fn criterion_1(r: &mut Report) {
    let t = Instant::now();
    let g = Group::cyclic(13).unwrap();
    let pool = nonzero(&g);
    let (mut tested, mut bad, mut fallbacks) = (0u64, 0u64, 0u64);
    for k in 1..=4 {
        for_each_subset(&pool, k, &mut |set| {
            tested += 1;
            match sequence_cyclic_subset(13, set, &SequenceOptions::default()) {
                Ok(o) => {
                    if o.path != Path::Rectified {
                        fallbacks += 1;
                    }
                    if !oracle_ok(&g, &o.sequencing.ordering, set) {
                        bad += 1;
                    }
                }
                Err(_) => bad += 1,
            }
        });
    }
    let ok = tested == 12 + 66 + 220 + 495 && bad == 0 && fallbacks == 0;
    r.record(
        1,
        ok,
        "Z_13, every subset of size ≤ 4 sequenced through Z",
        format!("{tested} subsets, {bad} failures, {fallbacks} fallbacks"),
        t,
    );
}

fn criterion_2(r: &mut Report) {
    let t = Instant::now();
    let g = Group::dihedral(29).unwrap();
    let pool = nonzero(&g);
    let (mut tested, mut bad, mut fallbacks) = (0u64, 0u64, 0u64);
    for k in 1..=4 {
        for_each_subset(&pool, k, &mut |set| {
            tested += 1;
            match sequence_dihedral_subset(29, set, &SequenceOptions::default()) {
                Ok(o) => {
                    fallbacks += u64::from(o.path != Path::Rectified);
                    bad += u64::from(!oracle_ok(&g, &o.sequencing.ordering, set));
                }
                Err(_) => bad += 1,
            }
        });
    }
    let expected = 57 + 1596 + 29260 + 395_010;
    let g127 = Group::dihedral(127).unwrap();
    let pool127 = nonzero(&g127);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut bad5, mut fallbacks5) = (0u64, 0u64);
    for _ in 0..10_000 {
        let set = random_subset(&mut rng, &pool127, 5);
        match sequence_dihedral_subset(127, &set, &SequenceOptions::default()) {
            Ok(o) => {
                fallbacks5 += u64::from(o.path != Path::Rectified);
                bad5 += u64::from(!oracle_ok(&g127, &o.sequencing.ordering, &set));
            }
            Err(_) => bad5 += 1,
        }
    }
    let ok = tested == expected && bad == 0 && fallbacks == 0 && bad5 == 0 && fallbacks5 == 0;
    r.record(
        2,
        ok,
        "D_58 every subset of size ≤ 4, and 10^4 random 5-subsets of D_254",
        format!(
            "{tested} exhaustive subsets, {bad} failures, {fallbacks} fallbacks; 10000 samples, {bad5} failures, {fallbacks5} fallbacks"
        ),
        t,
    );
}

fn criterion_3(r: &mut Report) {
    let t = Instant::now();
    let g = Group::dicyclic(29).unwrap();
    let pool = nonzero(&g);
    let (mut tested, mut bad, mut fallbacks) = (0u64, 0u64, 0u64);
    for k in 1..=3 {
        for_each_subset(&pool, k, &mut |set| {
            tested += 1;
            match sequence_dicyclic_subset(29, set, &SequenceOptions::default()) {
                Ok(o) => {
                    fallbacks += u64::from(o.path != Path::Rectified);
                    bad += u64::from(!oracle_ok(&g, &o.sequencing.ordering, set));
                }
                Err(_) => bad += 1,
            }
        });
    }
    let ok = tested == 115 + 6555 + 246_905 && bad == 0 && fallbacks == 0;
    r.record(
        3,
        ok,
        "Dic_29, every subset of size ≤ 3 sequenced through Z ⋊ Z_4",
        format!("{tested} subsets, {bad} failures, {fallbacks} fallbacks"),
        t,
    );
}

/// Independent weak-homomorphism oracle: every permutation of every subset.
fn weak_hom_oracle(sg: &Group, src: &[Element], dg: &Group, dst: &[Element]) -> bool {
    let n = src.len();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let chosen: Vec<Element> = idx.iter().map(|&i| Element::int(i as i64)).collect();
        for p in permutations(&chosen) {
            let order: Vec<usize> = p.iter().map(|e| usize::try_from(e.base().unwrap()).unwrap()).collect();
            let s: Vec<Element> = order.iter().map(|&i| src[i].clone()).collect();
            let d: Vec<Element> = order.iter().map(|&i| dst[i].clone()).collect();
            if sg.sum(&s).unwrap() == sg.identity() && dg.sum(&d).unwrap() != dg.identity() {
                return false;
            }
        }
    }
    true
}

fn criterion_4(r: &mut Report) {
    let t = Instant::now();
    let g = Group::semidirect_zm(127, vec![2], vec![-1]).unwrap();
    let pool = nonzero(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad = 0u64;
    let mut with_pivot = 0u64;
    for _ in 0..1000 {
        let k = rng.gen_range(1..=5);
        let set = random_subset(&mut rng, &pool, k);
        match rectify(&g, &set, RectifyOptions::default()) {
            Ok(res) => {
                with_pivot += u64::from(res.pivot.is_some());
                let fwd = check_weak_homomorphism(&g, &res.source, &res.target_group, &res.target, k).holds;
                let back = check_weak_homomorphism(&res.target_group, &res.target, &g, &res.source, k).holds;
                let o_fwd = weak_hom_oracle(&g, &res.source, &res.target_group, &res.target);
                let o_back = weak_hom_oracle(&res.target_group, &res.target, &g, &res.source);
                let h_same = res.pairing().all(|(a, b)| a.h_part() == b.h_part());
                if !(fwd && back && o_fwd && o_back && h_same && res.bound.satisfied) {
                    bad += 1;
                }
            }
            Err(_) => bad += 1,
        }
    }
    r.record(
        4,
        bad == 0,
        "Z_127 ⋊ Z_2, 10^3 random subsets rectify to weak isomorphisms at order k",
        format!("1000 subsets, {with_pivot} with a nontrivial system, {bad} failures"),
        t,
    );
}

fn random_semidirect_set(rng: &mut ChaCha8Rng, h: u64) -> Vec<Element> {
    let k = rng.gen_range(1..=8);
    let mut set: Vec<Element> = Vec::new();
    while set.len() < k {
        let hv = rng.gen_range(0..h);
        let x = if rng.gen_bool(0.25) {
            0
        } else {
            let v = rng.gen_range(1..=50);
            if rng.gen_bool(0.5) {
                v
            } else {
                -v
            }
        };
        let a = Element::semi(x, &[hv]);
        if (x != 0 || hv != 0) && !set.contains(&a) {
            set.push(a);
        }
    }
    set
}

fn criterion_5(r: &mut Report) {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut construction_failed, mut fallback_failed, mut other, mut bad) = (0u64, 0u64, 0u64, 0u64);
    let mut tested = 0u64;
    for h in [2u64, 4] {
        let g = Group::semidirect_z(vec![h], vec![-1]).unwrap();
        for _ in 0..10_000 {
            let set = random_semidirect_set(&mut rng, h);
            tested += 1;
            match sequence_semidirect_over_z(&g, &set) {
                Ok(c) => bad += u64::from(!oracle_ok(&g, &c.sequencing.ordering, &set)),
                Err(SequencingError::ConstructionFailed(_)) => construction_failed += 1,
                Err(SequencingError::SearchFallbackFailed(_)) => fallback_failed += 1,
                Err(_) => other += 1,
            }
        }
    }
    let ok = construction_failed == 0 && fallback_failed == 0 && other == 0 && bad == 0;
    r.record(
        5,
        ok,
        "Z ⋊ Z_2 and Z ⋊ Z_4, 10^4 random sets each (k ≤ 8) sequenced constructively",
        format!(
            "{tested} sets, {construction_failed} ConstructionFailed, {fallback_failed} SearchFallbackFailed, {other} other errors, {bad} oracle rejections"
        ),
        t,
    );
}

/// Determinant modulo a prime by Gaussian elimination over `F_p`.
fn det_mod_p(m: &[Vec<i64>], p: i64) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let mut det = 1i64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| a[i][c] != 0) else {
            return 0;
        };
        if piv != c {
            a.swap(piv, c);
            det = (p - det) % p;
        }
        det = det * a[c][c] % p;
        let inv = (0..p).find(|&x| x * a[c][c] % p == 1).unwrap();
        for i in c + 1..n {
            let f = a[i][c] * inv % p;
            for j in c..n {
                a[i][j] = (a[i][j] - f * a[c][j]).rem_euclid(p);
            }
        }
    }
    det
}

/// Determinant by permutation expansion.
fn leibniz(m: &[Vec<i64>]) -> i64 {
    fn go(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>, sign: i64) -> i64 {
        let n = m.len();
        if row == n {
            return sign;
        }
        let mut total = 0;
        for c in 0..n {
            if used[c] || m[row][c] == 0 {
                continue;
            }
            // sign flips by the number of used columns to the right of c
            let inversions = (c + 1..n).filter(|&j| used[j]).count() as i64;
            used[c] = true;
            total += m[row][c] * go(m, row + 1, used, if inversions % 2 == 0 { sign } else { -sign });
            used[c] = false;
        }
        total
    }
    go(m, 0, &mut vec![false; m.len()], 1)
}

fn criterion_6(r: &mut Report) {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut mismatches, mut nonsingular, mut over_bound) = (0u64, 0u64, 0u64);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=5);
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-1..=1)).collect()).collect();
        let det_q = leibniz(&m);
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        if bareiss_det(&big) != BigInt::from(det_q) {
            mismatches += 1;
        }
        let fact: i64 = (1..=n as i64).product();
        over_bound += u64::from(det_q.abs() > fact);
        nonsingular += u64::from(det_q != 0);
        if (det_q != 0) != (det_mod_p(&m, 127) != 0) {
            mismatches += 1;
        }
    }
    r.record(
        6,
        mismatches == 0 && over_bound == 0,
        "10^4 random {-1,0,1} matrices up to 5×5: det ≠ 0 over Q ⟺ invertible mod 127",
        format!("{nonsingular} nonsingular, {mismatches} mismatches, {over_bound} above k'!"),
        t,
    );
}

fn criterion_7(r: &mut Report) {
    let t = Instant::now();
    let mut tested = 0u64;
    let mut disagreements = 0u64;
    let mut unsequenceable = 0u64;
    let constructive = SequenceOptions {
        method: Method::Constructive,
        ..Default::default()
    };
    for g in [Group::cyclic(11).unwrap(), Group::dihedral(7).unwrap()] {
        let pool = nonzero(&g);
        for k in 1..=3 {
            for_each_subset(&pool, k, &mut |set| {
                tested += 1;
                let built = sequence(&g, set, &constructive);
                let built_ok = matches!(&built, Ok(o) if oracle_ok(&g, &o.sequencing.ordering, set));
                let searched = search_sequencing(&g, set, None).is_ok();
                let brute = brute_sequenceable(&g, set);
                unsequenceable += u64::from(!brute);
                if built_ok != searched || searched != brute {
                    disagreements += 1;
                }
            });
        }
    }
    r.record(
        7,
        disagreements == 0,
        "Z_11 and D_14, subsets of size ≤ 3: construction ⟺ search ⟺ block oracle",
        format!("{tested} subsets, {unsequenceable} unsequenceable, {disagreements} disagreements"),
        t,
    );
}

fn criterion_8(r: &mut Report) {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bad = 0u64;
    let mut scaled = 0u64;
    for m in [29u64, 127] {
        for _ in 0..1000 {
            let k = rng.gen_range(1..=3);
            let mut set: Vec<u64> = Vec::new();
            while set.len() < k {
                let x = rng.gen_range(0..2 * m);
                if !set.contains(&x) {
                    set.push(x);
                }
            }
            let band = (m / k as u64) as i64;
            match band_reduce(m, &set, k) {
                Ok(b) => {
                    scaled += u64::from(b.multiplier > 1);
                    let unit_ok = b.unit % 2 == 1 && b.unit % m == b.multiplier && gcd(b.unit, 2 * m) == 1;
                    let in_band = b.images.iter().all(|&y| {
                        let y = y as i64;
                        let m = m as i64;
                        (-band..=band).any(|c| (y - c).rem_euclid(2 * m) == 0 || (y - m - c).rem_euclid(2 * m) == 0)
                    });
                    let consistent = set.iter().zip(&b.images).all(|(&x, &y)| x * b.unit % (2 * m) == y);
                    if !(unit_ok && in_band && consistent) {
                        bad += 1;
                    }
                }
                Err(_) => bad += 1,
            }
        }
    }
    r.record(
        8,
        bad == 0,
        "band reduction for m ∈ {29, 127}, 10^3 random sets each of size ≤ 3",
        format!("2000 sets, {scaled} needed a multiplier > 1, {bad} failures"),
        t,
    );
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn main() -> ExitCode {
    let mut r = Report { lines: Vec::new() };
    criterion_1(&mut r);
    criterion_2(&mut r);
    criterion_3(&mut r);
    criterion_4(&mut r);
    criterion_5(&mut r);
    criterion_6(&mut r);
    criterion_7(&mut r);
    criterion_8(&mut r);
    let failed = r.lines.iter().filter(|(ok, _)| !ok).count();
    println!("acceptance: {} of {} criteria passed", r.lines.len() - failed, r.lines.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
