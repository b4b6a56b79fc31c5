//! Sequencings: the partial-sum checker, backtracking search, and the
//! constructive sequencing of subsets of `Z ⋊ H`.
//!
//! An ordering `(x_1, …, x_k)` of a subset is a *sequencing* when its partial
//! sums `s_0 = 0, s_i = x_1 + … + x_i` are pairwise distinct, except that
//! `s_k = s_0` is allowed (the terminal exception).

mod search;
mod semidirect;

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::groups::{Element, Group, GroupError};
use crate::law::Law;

pub use search::{search_sequencing, sequence_integers, SEARCH_UNLIMITED_MAX};
pub use semidirect::{sequence_semidirect_over_z, zigzag_order, Construction, ConstructionCase};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequencingError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("the set contains the identity {0}")]
    ContainsZero(String),
    #[error("element {0} occurs more than once")]
    DuplicateElement(String),
    #[error("no ordering of the set is a sequencing")]
    NotFound,
    #[error("search budget of {0} nodes exhausted before a sequencing was found")]
    BudgetExhausted(u64),
    #[error("sets of size {0} need an explicit search budget")]
    BudgetRequired(usize),
    #[error("no sequencing exists for integer set {0}; this contradicts the sequenceability of finite subsets of Z \\ {{0}}")]
    CounterexampleFound(String),
    #[error("element {0} does not act by negation")]
    SignMismatch(String),
    #[error("constructed ordering failed verification: {0}")]
    ConstructionFailed(String),
    #[error("direct-product fallback found no sequencing for {0}")]
    SearchFallbackFailed(String),
    #[error("operation needs {expected}, got {found}")]
    WrongFamily { expected: &'static str, found: String },
}

/// An ordering together with its partial sums and the checker's verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequencing {
    pub ordering: Vec<Element>,
    /// `s_0, …, s_k`.
    pub partial_sums: Vec<Element>,
    pub valid: bool,
    pub terminal_exception_used: bool,
    /// First colliding pair `(i, j)`, `i < j`, ordered by `j` then `i`.
    pub collision: Option<(usize, usize)>,
}

impl Sequencing {
    pub fn len(&self) -> usize {
        self.ordering.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordering.is_empty()
    }
}

/// Partial sums of `items` under an arbitrary law, plus the first collision.
pub(crate) fn check_with<L: Law>(law: &L, items: &[L::Elem]) -> (Vec<L::Elem>, Option<(usize, usize)>) {
    let k = items.len();
    let mut sums = Vec::with_capacity(k + 1);
    sums.push(law.zero());
    for a in items {
        let next = law.op(sums.last().unwrap(), a);
        sums.push(next);
    }
    let mut seen: HashMap<&L::Elem, usize> = HashMap::with_capacity(k + 1);
    let mut collision = None;
    for (j, s) in sums.iter().enumerate() {
        if let Some(&i) = seen.get(s) {
            if !(i == 0 && j == k) {
                collision = Some((i, j));
                break;
            }
        } else {
            seen.insert(s, j);
        }
    }
    (sums, collision)
}

/// Whether `items` is a sequencing under `law` (no validation of the items).
pub fn is_sequencing_under<L: Law>(law: &L, items: &[L::Elem]) -> bool {
    check_with(law, items).1.is_none()
}

pub fn partial_sums(group: &Group, ordering: &[Element]) -> Result<Vec<Element>, SequencingError> {
    for a in ordering {
        group.check(a)?;
    }
    Ok(check_with(group, ordering).0)
}

/// Rejects foreign elements, the identity, and repeats.
pub(crate) fn validate_set(group: &Group, set: &[Element]) -> Result<(), SequencingError> {
    let zero = group.identity();
    let mut seen = HashSet::with_capacity(set.len());
    for a in set {
        group.check(a)?;
        if *a == zero {
            return Err(SequencingError::ContainsZero(a.to_string()));
        }
        if !seen.insert(a) {
            return Err(SequencingError::DuplicateElement(a.to_string()));
        }
    }
    Ok(())
}

pub fn is_sequencing(group: &Group, ordering: &[Element]) -> Result<Sequencing, SequencingError> {
    validate_set(group, ordering)?;
    Ok(verdict(group, ordering.to_vec()))
}

pub(crate) fn verdict(group: &Group, ordering: Vec<Element>) -> Sequencing {
    let (partial_sums, collision) = check_with(group, &ordering);
    let terminal_exception_used = !ordering.is_empty() && partial_sums.last() == partial_sums.first();
    Sequencing {
        valid: collision.is_none(),
        terminal_exception_used,
        collision,
        ordering,
        partial_sums,
    }
}
