use num_traits::Signed;

use super::{validate_set, verdict, Sequencing, SequencingError};
use crate::groups::{Element, Group};
use crate::law::Law;

/// Sets up to this size are searched without a node budget.
pub const SEARCH_UNLIMITED_MAX: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SearchOutcome {
    /// Indices into the input, in sequencing order.
    Found(Vec<usize>),
    NotFound,
    BudgetExhausted,
}

/// Depth-first search over orderings of `items`, branching in input order.
///
/// A prefix is pruned as soon as two of its partial sums collide; the
/// terminal exception `s_k = s_0` is accepted only at full depth. The first
/// solution in lexicographic index order is returned.
pub(crate) fn backtrack<L: Law>(law: &L, items: &[L::Elem], budget: Option<u64>) -> SearchOutcome {
    struct State<'a, L: Law> {
        law: &'a L,
        items: &'a [L::Elem],
        used: Vec<bool>,
        path: Vec<usize>,
        sums: Vec<L::Elem>,
        nodes: u64,
        budget: Option<u64>,
    }

    enum Step {
        Done,
        Exhausted,
        Continue,
    }

    fn go<L: Law>(st: &mut State<'_, L>) -> Step {
        let k = st.items.len();
        let depth = st.path.len();
        if depth == k {
            return Step::Done;
        }
        for i in 0..k {
            if st.used[i] {
                continue;
            }
            st.nodes += 1;
            if st.budget.is_some_and(|b| st.nodes > b) {
                return Step::Exhausted;
            }
            let next = st.law.op(&st.sums[depth], &st.items[i]);
            let closes = depth + 1 == k && next == st.sums[0];
            if !closes && st.sums.contains(&next) {
                continue;
            }
            st.used[i] = true;
            st.path.push(i);
            st.sums.push(next);
            match go(st) {
                Step::Continue => {}
                other => return other,
            }
            st.sums.pop();
            st.path.pop();
            st.used[i] = false;
        }
        Step::Continue
    }

    let mut st = State {
        law,
        items,
        used: vec![false; items.len()],
        path: Vec::with_capacity(items.len()),
        sums: vec![law.zero()],
        nodes: 0,
        budget,
    };
    match go(&mut st) {
        Step::Done => SearchOutcome::Found(st.path),
        Step::Exhausted => SearchOutcome::BudgetExhausted,
        Step::Continue => SearchOutcome::NotFound,
    }
}

fn effective_budget(len: usize, budget: Option<u64>) -> Result<Option<u64>, SequencingError> {
    match budget {
        Some(b) => Ok(Some(b)),
        None if len <= SEARCH_UNLIMITED_MAX => Ok(None),
        None => Err(SequencingError::BudgetRequired(len)),
    }
}

fn search_in_order(group: &Group, items: Vec<Element>, budget: Option<u64>) -> Result<Sequencing, SequencingError> {
    match backtrack(group, &items, budget) {
        SearchOutcome::Found(order) => Ok(verdict(group, order.into_iter().map(|i| items[i].clone()).collect())),
        SearchOutcome::NotFound => Err(SequencingError::NotFound),
        SearchOutcome::BudgetExhausted => Err(SequencingError::BudgetExhausted(budget.unwrap_or(0))),
    }
}

/// Exhaustive search for a sequencing; returns the first one in canonical
/// element order.
///
/// `budget` caps the number of visited nodes. It may be omitted for sets of at
/// most [`SEARCH_UNLIMITED_MAX`] elements.
pub fn search_sequencing(group: &Group, set: &[Element], budget: Option<u64>) -> Result<Sequencing, SequencingError> {
    validate_set(group, set)?;
    let budget = effective_budget(set.len(), budget)?;
    let mut items = set.to_vec();
    items.sort();
    search_in_order(group, items, budget)
}

/// Sequences a finite subset of `Z \ {0}`.
///
/// Such a sequencing always exists, so the search runs without a budget and a
/// failure is reported as [`SequencingError::CounterexampleFound`]. Branches
/// are tried by increasing absolute value, negatives first.
pub fn sequence_integers(set: &[Element]) -> Result<Sequencing, SequencingError> {
    let group = Group::integers();
    validate_set(&group, set)?;
    let mut items = set.to_vec();
    items.sort_by(|a, b| match (a, b) {
        (Element::Int(x), Element::Int(y)) => x.abs().cmp(&y.abs()).then(x.cmp(y)),
        _ => unreachable!("validated as integers"),
    });
    match search_in_order(&group, items, None) {
        Err(SequencingError::NotFound) => {
            let shown: Vec<String> = set.iter().map(|a| a.to_string()).collect();
            Err(SequencingError::CounterexampleFound(format!("{{{}}}", shown.join(", "))))
        }
        other => other,
    }
}
