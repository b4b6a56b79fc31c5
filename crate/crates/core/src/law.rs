//! A minimal "binary operation with identity" abstraction.
//!
//! The checker and the backtracking search only ever need an identity and an
//! associative operation, so they are written against [`Law`] instead of a
//! concrete group. This lets the same search run over a whole ambient group,
//! over the finite abelian factor `H` of a semidirect product, or over an
//! opposite law in tests.

use std::fmt::Debug;
use std::hash::Hash;

pub trait Law {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn zero(&self) -> Self::Elem;

    /// `a + b`. Callers guarantee both operands belong to the law.
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The opposite law `a ∘ b = b + a`.
#[derive(Clone, Copy, Debug)]
pub struct Opposite<'a, L>(pub &'a L);

impl<L: Law> Law for Opposite<'_, L> {
    type Elem = L::Elem;

    fn zero(&self) -> L::Elem {
        self.0.zero()
    }

    fn op(&self, a: &L::Elem, b: &L::Elem) -> L::Elem {
        self.0.op(b, a)
    }
}
