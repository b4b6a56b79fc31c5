use crate::groups::{Base, Element, Group, GroupKind};

use super::RectifyError;

/// Largest tuple length for which zero-sum orderings are enumerated.
pub const MAX_ORDER: usize = 8;

/// Visits every ordered tuple of distinct positions of length `1..=max_len`,
/// depth first in lexicographic position order, together with its left-to-right
/// sum. `visit` returns `false` to stop the walk.
pub(crate) fn walk_tuples<F>(group: &Group, set: &[Element], max_len: usize, mut visit: F)
where
    F: FnMut(&[usize], &Element) -> bool,
{
    fn go<F: FnMut(&[usize], &Element) -> bool>(
        group: &Group,
        set: &[Element],
        max_len: usize,
        used: &mut [bool],
        path: &mut Vec<usize>,
        sum: &Element,
        visit: &mut F,
    ) -> bool {
        for i in 0..set.len() {
            if used[i] {
                continue;
            }
            let next = group.add_unchecked(sum, &set[i]);
            path.push(i);
            if !visit(path, &next) {
                return false;
            }
            if path.len() < max_len {
                used[i] = true;
                let go_on = go(group, set, max_len, used, path, &next, visit);
                used[i] = false;
                if !go_on {
                    return false;
                }
            }
            path.pop();
        }
        true
    }

    if max_len == 0 {
        return;
    }
    let mut used = vec![false; set.len()];
    let mut path = Vec::with_capacity(max_len);
    go(group, set, max_len, &mut used, &mut path, &group.identity(), &mut visit);
}

pub(crate) fn check_order(order: usize) -> Result<(), RectifyError> {
    if order > MAX_ORDER {
        Err(RectifyError::OrderTooLarge(order))
    } else {
        Ok(())
    }
}

/// All ordered tuples of distinct elements of length `≤ max_len` summing to the
/// identity, as position lists sorted by `(length, positions)`.
pub fn zero_sum_orderings(group: &Group, set: &[Element], max_len: usize) -> Result<Vec<Vec<usize>>, RectifyError> {
    crate::sequencing::validate_set(group, set).map_err(RectifyError::InvalidSet)?;
    let max_len = max_len.min(set.len());
    check_order(max_len)?;
    let zero = group.identity();
    let mut out = Vec::new();
    walk_tuples(group, set, max_len, |path, sum| {
        if *sum == zero {
            out.push(path.to_vec());
        }
        true
    });
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// The linear system over `Z_m` induced by the zero-sum orderings of a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumSystem {
    pub set: Vec<Element>,
    /// One row per zero-sum ordering; entry `j` is the coefficient of the base
    /// component of `set[j]`.
    pub rows: Vec<Vec<i8>>,
    /// The ordering each row came from.
    pub witnesses: Vec<Vec<usize>>,
}

/// Row of prefix signs for one ordering: the coefficient of `x_{ω(i)}` is the
/// product of `ε` over the `H` parts of `x_{ω(1)}, …, x_{ω(i-1)}`.
pub(crate) fn prefix_sign_row(group: &Group, set: &[Element], ordering: &[usize]) -> Vec<i8> {
    let mut row = vec![0i8; set.len()];
    let mut sign = 1i8;
    for &j in ordering {
        row[j] = sign;
        sign *= group.sign(&set[j]);
    }
    row
}

/// Builds the zero-sum system of a subset of `Z_m` or `Z_m ⋊ H`.
pub fn build_system(group: &Group, set: &[Element], max_len: usize) -> Result<ZeroSumSystem, RectifyError> {
    if !matches!(
        group.kind(),
        GroupKind::Cyclic(_) | GroupKind::Semidirect { base: Base::Cyclic(_), .. }
    ) {
        return Err(RectifyError::WrongFamily {
            expected: "Z_m or Z_m ⋊ H",
            found: group.spec().to_string(),
        });
    }
    let witnesses = zero_sum_orderings(group, set, max_len)?;
    let rows = witnesses.iter().map(|w| prefix_sign_row(group, set, w)).collect();
    Ok(ZeroSumSystem {
        set: set.to_vec(),
        rows,
        witnesses,
    })
}
