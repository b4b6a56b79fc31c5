//! End-to-end sequencing: rectify into an infinite group, sequence there, and
//! pull the ordering back.

mod sweep;

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::groups::{Base, Element, Group, GroupError, GroupKind};
use crate::rectify::{rectify, RectificationResult, RectifyError, RectifyOptions};
use crate::sequencing::{
    search_sequencing, sequence_integers, sequence_semidirect_over_z, validate_set, verdict, ConstructionCase, Sequencing,
    SequencingError, SEARCH_UNLIMITED_MAX,
};

pub use sweep::{colex_unrank, sweep, SweepFailure, SweepMode, SweepOptions, SweepReport};

/// Node budget used by the search fallback on sets larger than
/// [`SEARCH_UNLIMITED_MAX`] when the caller gives none.
pub const FALLBACK_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sequencing(#[from] SequencingError),
    #[error(transparent)]
    Rectify(#[from] RectifyError),
    #[error("pulled-back ordering is not a sequencing of the original set: {0}")]
    PullBackFailed(String),
    #[error("sweep parameters rejected: {0}")]
    Sweep(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Constructive path, falling back to search when rectification fails.
    #[default]
    Auto,
    /// Constructive path only.
    Constructive,
    /// Backtracking search in the original group.
    Search,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Method::Auto),
            "constructive" => Ok(Method::Constructive),
            "search" => Ok(Method::Search),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    /// Backtracking over `Z`, whose success is guaranteed.
    Integers,
    /// The explicit construction in `Z ⋊ H`.
    SemidirectConstruction,
    /// Rectified, then sequenced in the infinite group and pulled back.
    Rectified,
    /// Search requested by the caller.
    Search,
    /// Search after the rectification step failed.
    SearchFallback,
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Path::Integers => "integers",
            Path::SemidirectConstruction => "semidirect_construction",
            Path::Rectified => "rectified",
            Path::Search => "search",
            Path::SearchFallback => "search_fallback",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SequenceOptions {
    pub method: Method,
    pub strict_bounds: bool,
    /// Node budget for any search that runs.
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceOutcome {
    pub sequencing: Sequencing,
    pub path: Path,
    pub case: Option<ConstructionCase>,
    pub rectification: Option<RectificationResult>,
    pub diagnostics: Vec<String>,
}

impl SequenceOutcome {
    pub fn is_fallback(&self) -> bool {
        self.path == Path::SearchFallback
    }

    pub fn to_json(&self, group: &Group) -> Value {
        let s = &self.sequencing;
        json!({
            "group": group.spec(),
            "ordering": group.encode_elements(&s.ordering),
            "partial_sums": group.encode_elements(&s.partial_sums),
            "valid": s.valid,
            "terminal_exception_used": s.terminal_exception_used,
            "path": self.path.to_string(),
            "case": self.case.map(|c| format!("{c:?}")),
            "rectification": self.rectification.as_ref().map(RectificationResult::to_json),
            "diagnostics": self.diagnostics,
        })
    }
}

fn search_budget(len: usize, budget: Option<u64>) -> Option<u64> {
    budget.or((len > SEARCH_UNLIMITED_MAX).then_some(FALLBACK_BUDGET))
}

fn searched(group: &Group, set: &[Element], opts: &SequenceOptions, path: Path, diagnostics: Vec<String>) -> Result<SequenceOutcome, PipelineError> {
    let budget = match path {
        Path::Search => opts.budget,
        _ => search_budget(set.len(), opts.budget),
    };
    Ok(SequenceOutcome {
        sequencing: search_sequencing(group, set, budget)?,
        path,
        case: None,
        rectification: None,
        diagnostics,
    })
}

/// Failures below the sufficient bounds that the search can still recover from.
fn recoverable(e: &RectifyError) -> bool {
    matches!(
        e,
        RectifyError::RankCertificateMismatch { .. }
            | RectifyError::SelfCheckFailed(_)
            | RectifyError::NoMultiplierFound { .. }
            | RectifyError::OrderTooLarge(_)
    )
}

fn via_rectification(group: &Group, set: &[Element], opts: &SequenceOptions) -> Result<SequenceOutcome, PipelineError> {
    validate_set(group, set)?;
    let ropts = RectifyOptions {
        strict_bounds: opts.strict_bounds,
        order: None,
    };
    let r = match rectify(group, set, ropts) {
        Ok(r) => r,
        Err(e) if opts.method == Method::Auto && recoverable(&e) => {
            return searched(group, set, opts, Path::SearchFallback, vec![e.to_string()]);
        }
        Err(e) => return Err(e.into()),
    };
    let (image, case) = match r.target_group.kind() {
        GroupKind::Integers => (sequence_integers(&r.target)?, None),
        _ => {
            let c = sequence_semidirect_over_z(&r.target_group, &r.target)?;
            (c.sequencing, Some(c.case))
        }
    };
    let ordering = r
        .pull_back(&image.ordering)
        .ok_or_else(|| PipelineError::PullBackFailed("ordering leaves the target set".into()))?;
    let sequencing = verdict(group, ordering);
    if !sequencing.valid {
        let shown: Vec<String> = sequencing.ordering.iter().map(|a| a.to_string()).collect();
        return Err(PipelineError::PullBackFailed(format!(
            "({}) collides at {:?}",
            shown.join(", "),
            sequencing.collision
        )));
    }
    let mut diagnostics = Vec::new();
    if !r.bound.satisfied {
        diagnostics.push(format!(
            "bound {} not met (spf {} ≤ {}); the self-check passed",
            r.bound.mode, r.bound.spf, r.bound.required
        ));
    }
    Ok(SequenceOutcome {
        sequencing,
        path: Path::Rectified,
        case,
        rectification: Some(r),
        diagnostics,
    })
}

fn expect_kind(group: &Group, ok: bool, expected: &'static str) -> Result<(), PipelineError> {
    if ok {
        Ok(())
    } else {
        Err(SequencingError::WrongFamily {
            expected,
            found: group.spec().to_string(),
        }
        .into())
    }
}

/// Sequences a subset of `Z_m \ {0}` through `Z`.
pub fn sequence_cyclic_subset(m: u64, set: &[Element], opts: &SequenceOptions) -> Result<SequenceOutcome, PipelineError> {
    via_rectification(&Group::cyclic(m)?, set, opts)
}

/// Sequences a subset of `Z_m ⋊ H \ {0}` through `Z ⋊ H`.
pub fn sequence_semidirect_cyclic_subset(group: &Group, set: &[Element], opts: &SequenceOptions) -> Result<SequenceOutcome, PipelineError> {
    let ok = matches!(group.kind(), GroupKind::Semidirect { base: Base::Cyclic(_), .. });
    expect_kind(group, ok, "a semidirect product Z_m ⋊ H")?;
    via_rectification(group, set, opts)
}

pub fn sequence_dihedral_subset(m: u64, set: &[Element], opts: &SequenceOptions) -> Result<SequenceOutcome, PipelineError> {
    sequence_semidirect_cyclic_subset(&Group::dihedral(m)?, set, opts)
}

/// Sequences a subset of `Dic_m \ {0}` through `Z ⋊ Z_4`.
pub fn sequence_dicyclic_subset(m: u64, set: &[Element], opts: &SequenceOptions) -> Result<SequenceOutcome, PipelineError> {
    via_rectification(&Group::dicyclic(m)?, set, opts)
}

/// Sequences `set` by the path appropriate for the family of `group`.
pub fn sequence(group: &Group, set: &[Element], opts: &SequenceOptions) -> Result<SequenceOutcome, PipelineError> {
    if opts.method == Method::Search {
        validate_set(group, set)?;
        return searched(group, set, opts, Path::Search, Vec::new());
    }
    match group.kind() {
        GroupKind::Integers => Ok(SequenceOutcome {
            sequencing: sequence_integers(set)?,
            path: Path::Integers,
            case: None,
            rectification: None,
            diagnostics: Vec::new(),
        }),
        GroupKind::Semidirect { base: Base::Integers, .. } => {
            let c = sequence_semidirect_over_z(group, set)?;
            Ok(SequenceOutcome {
                sequencing: c.sequencing,
                path: Path::SemidirectConstruction,
                case: Some(c.case),
                rectification: None,
                diagnostics: if c.negated {
                    vec!["constructed on the image under (x, h) ↦ (-x, h)".into()]
                } else {
                    Vec::new()
                },
            })
        }
        _ => via_rectification(group, set, opts),
    }
}
