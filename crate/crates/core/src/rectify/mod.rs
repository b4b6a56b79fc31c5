//! Weak Freiman rectification.
//!
//! A subset `S` of `Z_m ⋊ H` is replaced by a subset `S'` of `Z ⋊ H` with the
//! same `H` parts such that an ordered tuple of distinct elements of `S` sums
//! to zero exactly when the corresponding tuple of `S'` does. The base
//! components of `S'` solve the zero-sum system of `S` over the rationals,
//! with the free variables pinned to the least non-negative lifts.

mod band;
mod dicyclic;
mod linalg;
mod system;
mod weak;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};
use thiserror::Error;

use crate::groups::{factorial, smallest_prime_factor, Element, Group, GroupError, GroupKind};
use crate::sequencing::{validate_set, SequencingError};

pub use band::{band_reduce, crt_inverse, BandReduction};
pub use dicyclic::dicyclic_embed;
pub use linalg::{bareiss_det, det_i8, rank};
pub use system::{build_system, zero_sum_orderings, ZeroSumSystem, MAX_ORDER};
pub use weak::{check_freiman_homomorphism, check_weak_homomorphism, check_weak_isomorphism, WeakCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RectifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    InvalidSet(SequencingError),
    #[error("order {0} exceeds the enumeration cap of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("operation needs {expected}, got {found}")]
    WrongFamily { expected: &'static str, found: String },
    #[error("pivot determinant {det} is not invertible modulo {m}: rational and modular ranks disagree")]
    RankCertificateMismatch { det: String, m: u64 },
    #[error("no multiplier brings {set:?} into the band of width {band} modulo {m}")]
    NoMultiplierFound { m: u64, band: u64, set: Vec<u64> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("weak isomorphism self-check failed: {0}")]
    SelfCheckFailed(String),
    #[error("bound not met: smallest prime factor {spf} of m must exceed {required} ({mode})")]
    BoundViolated { spf: u64, required: String, mode: BoundMode },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// `k!/2`, trivial action.
    HalfFactorial,
    /// `k!`, some element acts by negation.
    Factorial,
    /// `k^k`, dicyclic groups.
    Power,
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundMode::HalfFactorial => "k!/2",
            BoundMode::Factorial => "k!",
            BoundMode::Power => "k^k",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub k: usize,
    pub spf: u64,
    pub mode: BoundMode,
    pub required: BigRational,
    pub satisfied: bool,
}

impl BoundReport {
    pub fn new(k: usize, m: u64, mode: BoundMode) -> Self {
        let required = match mode {
            BoundMode::HalfFactorial => BigRational::new(factorial(k), BigInt::from(2)),
            BoundMode::Factorial => BigRational::from_integer(factorial(k)),
            BoundMode::Power => BigRational::from_integer(BigInt::from(k).pow(k as u32)),
        };
        let spf = smallest_prime_factor(m);
        let satisfied = BigRational::from_integer(BigInt::from(spf)) > required;
        BoundReport {
            k,
            spf,
            mode,
            required,
            satisfied,
        }
    }

    /// The bound for rectifying a `k`-subset of `group`.
    pub fn for_group(group: &Group, k: usize) -> Option<Self> {
        let m = group.modulus()?.get();
        let mode = match group.kind() {
            GroupKind::Dicyclic(_) => BoundMode::Power,
            GroupKind::Semidirect { eps, .. } if !eps.is_trivial() => BoundMode::Factorial,
            _ => BoundMode::HalfFactorial,
        };
        Some(Self::new(k, m, mode))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "spf": self.spf,
            "required": self.required.to_string(),
            "mode": self.mode.to_string(),
            "satisfied": self.satisfied,
        })
    }

    fn enforce(&self) -> Result<(), RectifyError> {
        if self.satisfied {
            Ok(())
        } else {
            Err(RectifyError::BoundViolated {
                spf: self.spf,
                required: self.required.to_string(),
                mode: self.mode,
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotCertificate {
    /// Indices into [`ZeroSumSystem::rows`].
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det_q: BigInt,
    pub det_mod_m: BigInt,
    pub k_prime: usize,
}

impl PivotCertificate {
    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "det": self.det_q.to_string(),
            "det_mod_m": self.det_mod_m.to_string(),
            "k_prime": self.k_prime,
        })
    }
}

/// Picks a maximal nonsingular square submatrix of the system, rows and then
/// columns chosen greedily in index order. `None` when the system is empty or
/// has rank zero.
pub fn select_pivot(system: &ZeroSumSystem, m: u64) -> Result<Option<PivotCertificate>, RectifyError> {
    // drop repeated rows, remembering the first index of each
    let mut seen = std::collections::HashSet::new();
    let mut distinct: Vec<usize> = Vec::new();
    for (i, r) in system.rows.iter().enumerate() {
        if seen.insert(r) {
            distinct.push(i);
        }
    }
    let big_rows: Vec<Vec<BigInt>> = distinct
        .iter()
        .map(|&i| system.rows[i].iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let chosen = linalg::greedy_basis(&big_rows);
    if chosen.is_empty() {
        return Ok(None);
    }
    let width = system.set.len();
    let columns: Vec<Vec<BigInt>> = (0..width)
        .map(|j| chosen.iter().map(|&i| big_rows[i][j].clone()).collect())
        .collect();
    let cols = linalg::greedy_basis(&columns);
    debug_assert_eq!(cols.len(), chosen.len());
    let sub: Vec<Vec<BigInt>> = chosen
        .iter()
        .map(|&i| cols.iter().map(|&j| big_rows[i][j].clone()).collect())
        .collect();
    let det_q = bareiss_det(&sub);
    let mb = BigInt::from(m);
    if !linalg::is_unit_mod(&det_q, &mb) {
        return Err(RectifyError::RankCertificateMismatch {
            det: det_q.to_string(),
            m,
        });
    }
    Ok(Some(PivotCertificate {
        rows: chosen.iter().map(|&i| distinct[i]).collect(),
        k_prime: cols.len(),
        cols,
        det_mod_m: det_q.mod_floor(&mb),
        det_q,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RectifyOptions {
    /// Fail upfront when the smallest prime factor of `m` is below the bound.
    pub strict_bounds: bool,
    /// Maximal tuple length; defaults to the size of the set.
    pub order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectificationResult {
    pub source_group: Group,
    pub source: Vec<Element>,
    pub target_group: Group,
    /// `target[i]` is the image of `source[i]`.
    pub target: Vec<Element>,
    pub pivot: Option<PivotCertificate>,
    pub cleared_by: BigInt,
    pub bound: BoundReport,
    /// The band-reduction multiplier (dicyclic embedding only).
    pub multiplier: Option<u64>,
    pub order: usize,
}

impl RectificationResult {
    pub fn pairing(&self) -> impl Iterator<Item = (&Element, &Element)> {
        self.source.iter().zip(&self.target)
    }

    /// Image of a source element.
    pub fn image(&self, a: &Element) -> Option<&Element> {
        self.source.iter().position(|x| x == a).map(|i| &self.target[i])
    }

    /// Pulls an ordering of the target back to the source.
    pub fn pull_back(&self, ordering: &[Element]) -> Option<Vec<Element>> {
        ordering
            .iter()
            .map(|b| self.target.iter().position(|y| y == b).map(|i| self.source[i].clone()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "source": {
                "group": self.source_group.spec(),
                "set": self.source_group.encode_elements(&self.source),
            },
            "target": {
                "group": self.target_group.spec(),
                "set": self.target_group.encode_elements(&self.target),
            },
            "pairing": self
                .pairing()
                .map(|(a, b)| json!([self.source_group.encode_element(a), self.target_group.encode_element(b)]))
                .collect::<Vec<_>>(),
            "pivot": self.pivot.as_ref().map(PivotCertificate::to_json),
            "cleared_by": self.cleared_by.to_string(),
            "bound": self.bound.to_json(),
            "order": self.order,
        });
        if let Some(a) = self.multiplier {
            v["multiplier"] = json!(a);
        }
        v
    }
}

fn self_check(result: &RectificationResult) -> Result<(), RectifyError> {
    if let Err(e) = validate_set(&result.target_group, &result.target) {
        return Err(RectifyError::SelfCheckFailed(format!("target set is degenerate: {e}")));
    }
    let forward = check_weak_homomorphism(
        &result.source_group,
        &result.source,
        &result.target_group,
        &result.target,
        result.order,
    );
    let backward = check_weak_homomorphism(
        &result.target_group,
        &result.target,
        &result.source_group,
        &result.source,
        result.order,
    );
    for (dir, check) in [("source → target", forward), ("target → source", backward)] {
        if let Some(w) = check.witness {
            let shown: Vec<String> = w.iter().map(|a| a.to_string()).collect();
            return Err(RectifyError::SelfCheckFailed(format!(
                "{dir}: zero-sum tuple ({}) maps to a non-zero sum; bound {} (spf {}, {} required, satisfied: {})",
                shown.join(", "),
                result.bound.mode,
                result.bound.spf,
                result.bound.required,
                result.bound.satisfied
            )));
        }
    }
    Ok(())
}

/// Rectifies a subset of `Z_m`, `Z_m ⋊ H` or `D_{2m}` into `Z`, `Z ⋊ H` or
/// `D_∞`; dicyclic sets are embedded into `Z ⋊ Z_4` instead.
pub fn rectify(group: &Group, set: &[Element], opts: RectifyOptions) -> Result<RectificationResult, RectifyError> {
    if let GroupKind::Dicyclic(_) = group.kind() {
        return dicyclic_embed(group, set, opts);
    }
    let target_group = match (group.kind(), group.lifted()) {
        (GroupKind::Cyclic(_) | GroupKind::Semidirect { .. }, Some(t)) => t,
        _ => {
            return Err(RectifyError::WrongFamily {
                expected: "Z_m, Z_m ⋊ H, D_2m or Dic_m",
                found: group.spec().to_string(),
            })
        }
    };
    validate_set(group, set).map_err(RectifyError::InvalidSet)?;
    let order = opts.order.unwrap_or(set.len()).min(set.len());
    system::check_order(order)?;
    let m = group.modulus().expect("finite base").get();
    let bound = BoundReport::for_group(group, order).expect("finite base");
    if opts.strict_bounds {
        bound.enforce()?;
    }

    let system = build_system(group, set, order)?;
    let pivot = select_pivot(&system, m)?;
    let lifts: Vec<BigInt> = set.iter().map(|a| a.base().expect("base component").clone()).collect();
    let mut values: Vec<BigRational> = lifts.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    if let Some(p) = &pivot {
        let row = |i: usize, j: usize| BigInt::from(system.rows[i][j]);
        let free: Vec<usize> = (0..set.len()).filter(|j| !p.cols.contains(j)).collect();
        // M' x_P = -M_F x_F
        let rhs: Vec<BigInt> = p
            .rows
            .iter()
            .map(|&i| -free.iter().map(|&f| row(i, f) * &lifts[f]).sum::<BigInt>())
            .collect();
        let square: Vec<Vec<BigInt>> = p.rows.iter().map(|&i| p.cols.iter().map(|&j| row(i, j)).collect()).collect();
        for (c, &j) in p.cols.iter().enumerate() {
            let mut replaced = square.clone();
            for (r, line) in replaced.iter_mut().enumerate() {
                line[c] = rhs[r].clone();
            }
            values[j] = BigRational::new(bareiss_det(&replaced), p.det_q.clone());
        }
    }
    let cleared_by = values.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom())).abs();
    let target: Vec<Element> = set
        .iter()
        .zip(&values)
        .map(|(a, v)| {
            let x = (v * BigRational::from_integer(cleared_by.clone())).to_integer();
            match a {
                Element::Cyc(_) => Element::Int(x),
                Element::Semi { h, .. } => Element::Semi { x, h: h.clone() },
                _ => unreachable!("validated family"),
            }
        })
        .collect();
    let result = RectificationResult {
        source_group: group.clone(),
        source: set.to_vec(),
        target_group,
        target,
        pivot,
        cleared_by,
        bound,
        multiplier: None,
        order,
    };
    self_check(&result)?;
    Ok(result)
}
