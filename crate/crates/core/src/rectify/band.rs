//! Band reduction in `Z_{2m}`, `m` odd.
//!
//! Through `Z_{2m} ≅ Z_2 × Z_m`, `x ↦ (x mod 2, x mod m)`, every unit `a` of
//! `Z_m` gives the automorphism `α(x) = CRT⁻¹(x mod 2, a·x mod m)`. The
//! multipliers are scanned in increasing order until the centered residues of
//! all `a·x_i` have magnitude at most `⌊m/k⌋`.

use num_integer::Integer;

use super::RectifyError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandReduction {
    pub m: u64,
    pub band: u64,
    pub multiplier: u64,
    /// `α` as multiplication by this unit of `Z_{2m}`.
    pub unit: u64,
    /// `α(x)` for each input, in `[0, 2m)`.
    pub images: Vec<u64>,
}

/// `CRT⁻¹(x1, x2) = m·x1 + (m+1)·x2 mod 2m`.
pub fn crt_inverse(m: u64, x1: u64, x2: u64) -> u64 {
    let two_m = 2 * m as u128;
    ((m as u128 * (x1 % 2) as u128 + (m as u128 + 1) * (x2 % m) as u128) % two_m) as u64
}

pub(crate) fn centered(x: u64, m: u64) -> i64 {
    let r = (x % m) as i64;
    if r > (m / 2) as i64 {
        r - m as i64
    } else {
        r
    }
}

pub fn band_reduce(m: u64, set: &[u64], k: usize) -> Result<BandReduction, RectifyError> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(RectifyError::Precondition(format!("band reduction needs an odd m ≥ 3, got {m}")));
    }
    if k == 0 || set.len() > k {
        return Err(RectifyError::Precondition(format!("{} residues do not fit k = {k}", set.len())));
    }
    if let Some(x) = set.iter().find(|&&x| x >= 2 * m) {
        return Err(RectifyError::Precondition(format!("{x} is not a residue modulo {}", 2 * m)));
    }
    let band = m / k as u64;
    let fits = |a: u64| {
        set.iter()
            .all(|&x| centered(((a as u128 * x as u128) % m as u128) as u64, m).unsigned_abs() <= band)
    };
    let a = (1..m)
        .filter(|a| a.gcd(&m) == 1)
        .find(|&a| fits(a))
        .ok_or_else(|| RectifyError::NoMultiplierFound {
            m,
            band,
            set: set.to_vec(),
        })?;
    let unit = crt_inverse(m, 1, a);
    let images = set
        .iter()
        .map(|&x| crt_inverse(m, x % 2, ((a as u128 * x as u128) % m as u128) as u64))
        .collect();
    Ok(BandReduction {
        m,
        band,
        multiplier: a,
        unit,
        images,
    })
}
