//! Constructive sequencing of finite subsets of `Z ⋊ H`.
//!
//! `H` is a finite abelian group acting on `Z` through a sign character `ε`.
//! The set is split into
//!
//! * `Z`: elements `(0, g)` with `ε(g) = +1`,
//! * `P`, `N`: elements `(x, h)` with `ε(h) = +1` and `x > 0`, resp. `x < 0`,
//! * `F`: elements `(y, f)` with `ε(f) = -1`,
//!
//! and each shape of `(Z, P, N, F)` gets an explicit ordering. The `F` block is
//! laid out along the zigzag `… ≤ y_5 ≤ y_3 ≤ y_1 ≤ y_2 ≤ y_4 ≤ …`, so that
//! consecutive differences `y_{2i} - y_{2i+1}` and `y_{2i-1} - y_{2i}` have
//! constant sign and every contiguous block with an even number of `F`
//! elements has a non-zero base component unless it sits inside the run of
//! elements tied with `y_1`. That run (`F_1`) is ordered by a sequencing of its
//! `H` projection.
//!
//! Every ordering produced here is re-checked before it is returned.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::search::{backtrack, search_sequencing, SearchOutcome, SEARCH_UNLIMITED_MAX};
use super::{validate_set, verdict, Sequencing, SequencingError};
use crate::groups::{AbelianSpec, Base, Element, Group, GroupKind};

/// Node budget for the searches the construction delegates to, on sets larger
/// than [`SEARCH_UNLIMITED_MAX`].
const DELEGATED_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionCase {
    /// `F = ∅`: the set lives in `Z × H`; sequenced by search.
    DirectProduct,
    /// `P = N = Z = ∅` and all `F` base components equal.
    AllFlipsConstant,
    /// `P = N = Z = ∅`, zigzag with `y_1` moved to the end.
    AllFlips,
    /// `P = N = ∅`, `Z ≠ ∅`, all `F` base components equal.
    ZeroBaseConstant,
    /// `P = N = ∅`, `Z ≠ ∅`, zigzag preceded by a sequencing of `F_1 ∪ Z_1`.
    ZeroBase,
    /// `P ∪ N ≠ ∅`.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub sequencing: Sequencing,
    pub case: ConstructionCase,
    /// The construction ran on the image under `(x, h) ↦ (-x, h)` and was
    /// mapped back.
    pub negated: bool,
}

struct Ctx<'a> {
    group: &'a Group,
    h: &'a AbelianSpec,
}

#[derive(Default)]
struct Parts {
    zero_base: Vec<Element>,
    positive: Vec<Element>,
    negative: Vec<Element>,
    flips: Vec<Element>,
}

fn base(a: &Element) -> &BigInt {
    a.base().expect("semidirect element")
}

fn h_of(a: &Element) -> &[u64] {
    a.h_part().expect("semidirect element")
}

fn negate_base(a: &Element) -> Element {
    match a {
        Element::Semi { x, h } => Element::Semi { x: -x, h: h.clone() },
        _ => unreachable!("semidirect element"),
    }
}

impl Ctx<'_> {
    fn partition(&self, set: &[Element]) -> Parts {
        let mut parts = Parts::default();
        for a in set {
            let x = base(a);
            let bucket = if self.group.sign(a) == -1 {
                &mut parts.flips
            } else if x.is_zero() {
                &mut parts.zero_base
            } else if x.is_positive() {
                &mut parts.positive
            } else {
                &mut parts.negative
            };
            bucket.push(a.clone());
        }
        for v in [&mut parts.zero_base, &mut parts.positive, &mut parts.negative, &mut parts.flips] {
            v.sort();
        }
        parts
    }

    fn sum(&self, items: &[Element]) -> Element {
        self.group.sum(items).expect("members of the group")
    }

    /// Orders `items` so that their `H` projections form a sequencing of `H`.
    fn by_h_sequencing(&self, items: &[Element]) -> Result<Vec<Element>, SequencingError> {
        let mut items = items.to_vec();
        items.sort_by(|a, b| h_of(a).cmp(h_of(b)).then_with(|| a.cmp(b)));
        let hs: Vec<Vec<u64>> = items.iter().map(|a| h_of(a).to_vec()).collect();
        let budget = (hs.len() > SEARCH_UNLIMITED_MAX).then_some(DELEGATED_BUDGET);
        match backtrack(self.h, &hs, budget) {
            SearchOutcome::Found(order) => Ok(order.into_iter().map(|i| items[i].clone()).collect()),
            _ => Err(SequencingError::ConstructionFailed(format!(
                "H projection {hs:?} admits no sequencing in H{:?}",
                self.h.factors
            ))),
        }
    }

    /// Sets whose `H` projection is injective: sequence through `H`. An
    /// element with trivial `H` part is placed first and the rest is
    /// sequenced through `H`.
    fn through_h_projection(&self, set: &[Element]) -> Result<Vec<Element>, SequencingError> {
        let zero_h = vec![0; self.h.rank()];
        match set.iter().position(|a| h_of(a) == zero_h.as_slice()) {
            // Unreachable from the all-flips case (ε(0) = +1 keeps (y, 0) out of
            // F); kept for sets that mix zero-base elements in.
            Some(i) => {
                let mut rest = set.to_vec();
                let first = rest.remove(i);
                let mut out = vec![first];
                out.extend(self.by_h_sequencing(&rest)?);
                Ok(out)
            }
            None => self.by_h_sequencing(set),
        }
    }

    /// Chooses which member of the tied run `run` plays `(y_1, f_1)`, trying
    /// candidates in canonical order. Returns the representative and the rest
    /// of the run (`F_1`).
    fn pick_representative(
        &self,
        run: &[Element],
        partner: Option<&Element>,
    ) -> Option<(Element, Vec<Element>)> {
        let mut candidates = run.to_vec();
        candidates.sort();
        candidates.into_iter().find_map(|cand| {
            let rest: Vec<Element> = run.iter().filter(|a| **a != cand).cloned().collect();
            let sum_ok = rest.is_empty() || !self.group.is_zero(&self.sum(&rest)).unwrap();
            let partner_ok = partner.is_none_or(|p| !self.group.is_zero(&self.group.add_unchecked(&cand, p)).unwrap());
            (sum_ok && partner_ok).then_some((cand, rest))
        })
    }

    fn all_flips(&self, flips: &[Element]) -> Result<Vec<Element>, Stuck> {
        let zig = zigzag_unchecked(flips);
        let run = tied_run(&zig);
        let last = zig.last().unwrap();
        let (rep, f1) = self.pick_representative(&zig[..run], Some(last)).ok_or(Stuck(None))?;
        let mut out = self.by_h_sequencing(&f1).map_err(Stuck::from)?;
        out.extend(zig[run..].iter().cloned());
        out.push(rep);
        Ok(out)
    }

    fn zero_base(&self, zero_base: &[Element], flips: &[Element]) -> Result<Vec<Element>, SequencingError> {
        let zig = zigzag_unchecked(flips);
        let run = tied_run(&zig);
        let mut pool: Vec<Element> = zig[..run].to_vec();
        pool.extend(zero_base.iter().cloned());
        // Σ(F_1 ∪ Z) does not depend on the order of summation.
        let dropped = if self.group.is_zero(&self.sum(&pool)).unwrap() {
            let g1 = zero_base[0].clone();
            pool.retain(|a| *a != g1);
            Some(g1)
        } else {
            None
        };
        let budget = (pool.len() > SEARCH_UNLIMITED_MAX).then_some(DELEGATED_BUDGET);
        let head = search_sequencing(self.group, &pool, budget).map_err(|e| {
            SequencingError::ConstructionFailed(format!("no sequencing of F_1 ∪ Z_1 ({e})"))
        })?;
        let mut out = head.ordering;
        out.extend(zig[run..].iter().cloned());
        out.extend(dropped);
        Ok(out)
    }

    fn mixed(&self, parts: &Parts) -> Result<Vec<Element>, SequencingError> {
        let zig = zigzag_unchecked(&parts.flips);
        let run = tied_run(&zig);
        let (rep, f1) = self.pick_representative(&zig[..run], None).ok_or_else(|| {
            SequencingError::ConstructionFailed("no representative with Σ F_1 ≠ 0".into())
        })?;
        let mut zs = self.by_h_sequencing(&parts.zero_base)?;
        let mut head = vec![rep];
        if !zs.is_empty() && self.group.is_zero(&self.sum(&zs)).unwrap() {
            head.push(zs.pop().unwrap());
        }
        let mut out = zs;
        out.extend(parts.negative.iter().cloned());
        out.extend(head);
        out.extend(parts.positive.iter().cloned());
        out.extend(self.by_h_sequencing(&f1)?);
        out.extend(zig[run..].iter().cloned());
        Ok(out)
    }

    fn construct(&self, set: &[Element]) -> Result<(Vec<Element>, ConstructionCase, bool), SequencingError> {
        let parts = self.partition(set);
        if parts.flips.is_empty() {
            let budget = (set.len() > SEARCH_UNLIMITED_MAX).then_some(DELEGATED_BUDGET);
            return match search_sequencing(self.group, set, budget) {
                Ok(s) => Ok((s.ordering, ConstructionCase::DirectProduct, false)),
                Err(e) => Err(SequencingError::SearchFallbackFailed(format!("{} ({e})", show(set)))),
            };
        }
        let constant = parts.flips.iter().all(|a| base(a) == base(&parts.flips[0]));
        if parts.positive.is_empty() && parts.negative.is_empty() {
            if parts.zero_base.is_empty() {
                if constant {
                    return Ok((self.through_h_projection(set)?, ConstructionCase::AllFlipsConstant, false));
                }
                return match self.all_flips(&parts.flips) {
                    Ok(order) => Ok((order, ConstructionCase::AllFlips, false)),
                    // The tied run can be a singleton while y_ℓ = y_1 with
                    // opposite H parts, e.g. {(0,1), (0,3), (1,1)} in Z ⋊ Z_4;
                    // the mirrored instance then has a longer tied run.
                    Err(Stuck(_)) => {
                        let mirrored: Vec<Element> = parts.flips.iter().map(negate_base).collect();
                        let order = self.all_flips(&mirrored).map_err(|Stuck(e)| {
                            e.unwrap_or_else(|| {
                                SequencingError::ConstructionFailed(format!(
                                    "no admissible (y_1, f_1) in {} or its mirror image",
                                    show(set)
                                ))
                            })
                        })?;
                        Ok((order.iter().map(negate_base).collect(), ConstructionCase::AllFlips, true))
                    }
                };
            }
            if constant {
                return Ok((self.through_h_projection(set)?, ConstructionCase::ZeroBaseConstant, false));
            }
            return Ok((
                self.zero_base(&parts.zero_base, &parts.flips)?,
                ConstructionCase::ZeroBase,
                false,
            ));
        }
        if parts.positive.is_empty() {
            let mirrored: Vec<Element> = set.iter().map(negate_base).collect();
            let (order, case, _) = self.construct(&mirrored)?;
            return Ok((order.iter().map(negate_base).collect(), case, true));
        }
        Ok((self.mixed(&parts)?, ConstructionCase::Mixed, false))
    }
}

/// Failure to find an admissible representative, or a hard error underneath.
struct Stuck(Option<SequencingError>);

impl From<SequencingError> for Stuck {
    fn from(e: SequencingError) -> Self {
        Stuck(Some(e))
    }
}

fn show(set: &[Element]) -> String {
    let parts: Vec<String> = set.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Length of the run `y_1 = y_2 = … = y_t` at the start of a zigzag.
fn tied_run(zig: &[Element]) -> usize {
    let y1 = base(&zig[0]);
    1 + zig[1..].iter().take_while(|a| base(a) == y1).count()
}

fn zigzag_unchecked(flips: &[Element]) -> Vec<Element> {
    let mut sorted = flips.to_vec();
    // ascending base component, ties by H part
    sorted.sort();
    let len = sorted.len();
    let mid = len.div_ceil(2);
    (0..len)
        .map(|i| {
            // position i holds y_{i+1}
            let t = i / 2;
            if i % 2 == 0 {
                sorted[mid - 1 - t].clone()
            } else {
                sorted[mid + t].clone()
            }
        })
        .collect()
}

/// Arranges elements with `ε = -1` as `(y_1, …, y_ℓ)` along the chain
/// `… ≤ y_5 ≤ y_3 ≤ y_1 ≤ y_2 ≤ y_4 ≤ …`.
pub fn zigzag_order(group: &Group, flips: &[Element]) -> Result<Vec<Element>, SequencingError> {
    for a in flips {
        group.check(a)?;
        if group.sign(a) != -1 {
            return Err(SequencingError::SignMismatch(a.to_string()));
        }
    }
    Ok(zigzag_unchecked(flips))
}

/// Sequences a subset of `Z ⋊ H \ {0}` by explicit construction.
pub fn sequence_semidirect_over_z(group: &Group, set: &[Element]) -> Result<Construction, SequencingError> {
    let h = match group.kind() {
        GroupKind::Semidirect { base: Base::Integers, h, .. } => h,
        _ => {
            return Err(SequencingError::WrongFamily {
                expected: "a semidirect product Z ⋊ H",
                found: group.spec().to_string(),
            })
        }
    };
    validate_set(group, set)?;
    if set.is_empty() {
        return Ok(Construction {
            sequencing: verdict(group, Vec::new()),
            case: ConstructionCase::DirectProduct,
            negated: false,
        });
    }
    let ctx = Ctx { group, h };
    let (order, case, negated) = ctx.construct(set)?;
    let sequencing = verdict(group, order);
    if !sequencing.valid || sequencing.len() != set.len() {
        return Err(SequencingError::ConstructionFailed(format!(
            "{case:?} ordering {} of {} has colliding partial sums at {:?}",
            show(&sequencing.ordering),
            show(set),
            sequencing.collision
        )));
    }
    Ok(Construction {
        sequencing,
        case,
        negated,
    })
}
