//! Sequencings of small subsets of cyclic, dihedral, semidirect-product and
//! dicyclic groups.
//!
//! A subset `S` of a group is *sequenceable* when its elements can be ordered
//! as `x_1, …, x_k` with pairwise distinct partial sums `0, x_1, x_1 + x_2, …`,
//! except that the last may return to `0`. Small subsets of `Z_m ⋊ H` are
//! sequenced by moving them into `Z ⋊ H` with a weak Freiman isomorphism
//! ([`rectify`]), sequencing them there with an explicit construction
//! ([`sequencing`]) and pulling the ordering back ([`pipeline`]).
//!
//! ```
//! use weak_freiman::groups::{Element, Group};
//! use weak_freiman::pipeline::{sequence, SequenceOptions};
//!
//! let z7 = Group::cyclic(7).unwrap();
//! let set = [Element::cyc(1), Element::cyc(2), Element::cyc(4)];
//! let out = sequence(&z7, &set, &SequenceOptions::default()).unwrap();
//! assert_eq!(out.sequencing.ordering, [Element::cyc(2), Element::cyc(4), Element::cyc(1)]);
//! ```

pub mod cli;
pub mod groups;
pub mod law;
pub mod pipeline;
pub mod rectify;
pub mod sequencing;
