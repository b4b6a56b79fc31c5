//! Embedding small subsets of `Dic_m` into `Z ⋊ Z_4`.
//!
//! The automorphism `σ: s ↦ s, r ↦ u·r` of `Dic_m` comes from band reduction
//! on `⟨r⟩ ≅ Z_{2m}`. After it every element reads `δ1·s + δ2·r` with
//! `|δ2| ≤ ⌊m/k⌋` and is sent to `(δ2, δ1)`. That pair multiplies with the
//! sign of the later summand; `ψ(x, h) = ((-1)^h x, h)` moves it to the
//! prefix law used everywhere else.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::band::{band_reduce, centered};
use super::{self_check, system, BoundReport, RectificationResult, RectifyError, RectifyOptions};
use crate::groups::{Element, Group, GroupKind};
use crate::sequencing::validate_set;

pub fn dicyclic_embed(group: &Group, set: &[Element], opts: RectifyOptions) -> Result<RectificationResult, RectifyError> {
    let m = match group.kind() {
        GroupKind::Dicyclic(m) => m.get(),
        _ => {
            return Err(RectifyError::WrongFamily {
                expected: "a dicyclic group",
                found: group.spec().to_string(),
            })
        }
    };
    validate_set(group, set).map_err(RectifyError::InvalidSet)?;
    let order = opts.order.unwrap_or(set.len()).min(set.len());
    system::check_order(order)?;
    let bound = BoundReport::for_group(group, order).expect("finite");
    if opts.strict_bounds {
        bound.enforce()?;
    }
    let two_m = BigInt::from(2 * m);
    let parts: Vec<(u8, u64)> = set
        .iter()
        .map(|a| match a {
            Element::Dic { s, r } => (*s, r.mod_floor(&two_m).to_u64().expect("residue")),
            _ => unreachable!("validated"),
        })
        .collect();
    let mut residues: Vec<u64> = parts.iter().map(|&(_, r)| r).collect();
    residues.sort_unstable();
    residues.dedup();
    let reduction = band_reduce(m, &residues, set.len().max(1))?;
    let image_of = |r: u64| reduction.images[residues.binary_search(&r).expect("collected")];

    let target: Vec<Element> = parts
        .iter()
        .map(|&(s, r)| {
            let v = image_of(r);
            let mu = centered(v, m);
            // v ≡ m + μ (mod 2m) trades m·r for 2s
            let d1 = if (v as i64 - mu).rem_euclid(2 * m as i64) == 0 { s } else { (s + 2) % 4 };
            let x = if d1 % 2 == 0 { mu } else { -mu };
            Element::Semi {
                x: BigInt::from(x),
                h: vec![d1 as u64],
            }
        })
        .collect();
    let result = RectificationResult {
        source_group: group.clone(),
        source: set.to_vec(),
        target_group: Group::semidirect_z(vec![4], vec![-1]).expect("valid"),
        target,
        pivot: None,
        cleared_by: BigInt::from(1),
        bound,
        multiplier: Some(reduction.multiplier),
        order,
    };
    self_check(&result)?;
    Ok(result)
}
