//! Ambient groups and their normal-form elements.
//!
//! Every group handled by the crate is one of:
//!
//! * `Z` and `Z_m`;
//! * a semidirect product `Z ⋊ H` or `Z_m ⋊ H`, where `H = Z_{n_1} × … × Z_{n_r}`
//!   acts on the base through a sign character `ε: H → {±1}` (each `h` either
//!   fixes the base or negates it);
//! * the dihedral groups `D_{2m}` and `Dih(Z)`, which are sugar for the
//!   semidirect products with `H = Z_2` and `ε(1) = -1`;
//! * the dicyclic group `Dic_m` (odd `m`), generated by `s`, `r` subject to
//!   `r + s = s - r`, `4s = 0`, `2s = mr`.
//!
//! Semidirect products use the prefix law `(x, h) + (x', h') = (x + ε(h)x', h + h')`
//! throughout. Dicyclic elements are kept as `λ1·s + λ2·r` with `λ1 ∈ [0, 3]` and
//! `|λ2| ≤ ⌊m/2⌋`.

mod json;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::law::Law;

pub use json::{decode_int, encode_int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("element {element} does not belong to {group}")]
    SpecMismatch { group: String, element: String },
    #[error("{0} is infinite and cannot be enumerated")]
    InfiniteGroup(String),
    #[error("cannot decode element: {0}")]
    Decode(String),
}

/// `H = Z_{n_1} × … × Z_{n_r}`; an empty factor list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianSpec {
    pub factors: Vec<u64>,
}

impl AbelianSpec {
    pub fn new(factors: Vec<u64>) -> Self {
        Self { factors }
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.iter().all(|&n| n == 1)
    }

    pub fn contains(&self, h: &[u64]) -> bool {
        h.len() == self.factors.len() && h.iter().zip(&self.factors).all(|(&a, &n)| a < n)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &n)| (n - x) % n)
            .collect()
    }

    pub fn reduce(&self, raw: &[i64]) -> Vec<u64> {
        raw.iter()
            .zip(&self.factors)
            .map(|(&x, &n)| x.rem_euclid(n as i64) as u64)
            .collect()
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::with_capacity(self.rank())];
        for &n in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..n).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

impl Law for AbelianSpec {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    fn op(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        self.add(a, b)
    }
}

/// The sign character `ε: H → {±1}`, given by its values on the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignCharacter {
    pub gen_signs: Vec<i8>,
}

impl SignCharacter {
    pub fn new(gen_signs: Vec<i8>) -> Self {
        Self { gen_signs }
    }

    pub fn trivial(rank: usize) -> Self {
        Self { gen_signs: vec![1; rank] }
    }

    pub fn is_trivial(&self) -> bool {
        self.gen_signs.iter().all(|&s| s == 1)
    }

    /// `ε(h) = Π gen_signs[i]^{h_i}`.
    pub fn eval(&self, h: &[u64]) -> i8 {
        let odd = self
            .gen_signs
            .iter()
            .zip(h)
            .filter(|(&s, &a)| s == -1 && a % 2 == 1)
            .count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Declarative description of an ambient group, as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    Integers,
    Cyclic {
        m: u64,
    },
    SemidirectZ {
        #[serde(rename = "h_factors")]
        h: AbelianSpec,
        #[serde(rename = "gen_signs")]
        eps: SignCharacter,
    },
    SemidirectZm {
        m: u64,
        #[serde(rename = "h_factors")]
        h: AbelianSpec,
        #[serde(rename = "gen_signs")]
        eps: SignCharacter,
    },
    Dihedral {
        m: u64,
    },
    DihedralZ,
    Dicyclic {
        m: u64,
    },
}

impl GroupSpec {
    pub fn validate(self) -> Result<Group, GroupError> {
        validate_spec(self)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Integers => write!(f, "Z"),
            GroupSpec::Cyclic { m } => write!(f, "Z_{m}"),
            GroupSpec::SemidirectZ { h, eps } => write!(f, "Z ⋊ H{:?} (ε {:?})", h.factors, eps.gen_signs),
            GroupSpec::SemidirectZm { m, h, eps } => {
                write!(f, "Z_{m} ⋊ H{:?} (ε {:?})", h.factors, eps.gen_signs)
            }
            GroupSpec::Dihedral { m } => write!(f, "D_{}", 2 * m),
            GroupSpec::DihedralZ => write!(f, "Dih(Z)"),
            GroupSpec::Dicyclic { m } => write!(f, "Dic_{m}"),
        }
    }
}

/// A modulus `m ≥ 2` with its big-integer forms precomputed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modulus {
    value: u64,
    big: BigInt,
    half: BigInt,
}

impl Modulus {
    fn new(value: u64) -> Self {
        Self {
            value,
            big: BigInt::from(value),
            half: BigInt::from(value / 2),
        }
    }

    pub fn get(&self) -> u64 {
        self.value
    }

    pub fn big(&self) -> &BigInt {
        &self.big
    }

    pub fn reduce(&self, x: &BigInt) -> BigInt {
        x.mod_floor(&self.big)
    }

    /// Representative in `[-⌊m/2⌋, ⌊m/2⌋]` (ties go to the non-negative side).
    pub fn centered(&self, x: &BigInt) -> BigInt {
        let r = self.reduce(x);
        if r > self.half {
            r - &self.big
        } else {
            r
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Base {
    Integers,
    Cyclic(Modulus),
}

impl Base {
    pub fn modulus(&self) -> Option<&Modulus> {
        match self {
            Base::Integers => None,
            Base::Cyclic(m) => Some(m),
        }
    }

    fn reduce(&self, x: BigInt) -> BigInt {
        match self {
            Base::Integers => x,
            Base::Cyclic(m) => m.reduce(&x),
        }
    }

    fn contains(&self, x: &BigInt) -> bool {
        match self {
            Base::Integers => true,
            Base::Cyclic(m) => !x.is_negative() && *x < m.big,
        }
    }
}

/// Desugared structure of a validated group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Integers,
    Cyclic(Modulus),
    Semidirect {
        base: Base,
        h: AbelianSpec,
        eps: SignCharacter,
    },
    Dicyclic(Modulus),
}

/// Normal-form group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Int(BigInt),
    Cyc(BigInt),
    Semi { x: BigInt, h: Vec<u64> },
    Dic { s: u8, r: BigInt },
}

impl Element {
    pub fn int(x: i64) -> Self {
        Element::Int(BigInt::from(x))
    }

    /// Already reduced residue; use [`Group::normalize`] for arbitrary integers.
    pub fn cyc(x: u64) -> Self {
        Element::Cyc(BigInt::from(x))
    }

    pub fn semi(x: i64, h: &[u64]) -> Self {
        Element::Semi {
            x: BigInt::from(x),
            h: h.to_vec(),
        }
    }

    pub fn dic(s: u8, r: i64) -> Self {
        Element::Dic {
            s,
            r: BigInt::from(r),
        }
    }

    /// Base component for integer, cyclic and semidirect elements.
    pub fn base(&self) -> Option<&BigInt> {
        match self {
            Element::Int(x) | Element::Cyc(x) | Element::Semi { x, .. } => Some(x),
            Element::Dic { .. } => None,
        }
    }

    pub fn h_part(&self) -> Option<&[u64]> {
        match self {
            Element::Semi { h, .. } => Some(h),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(x) | Element::Cyc(x) => write!(f, "{x}"),
            Element::Semi { x, h } => {
                write!(f, "({x}, ")?;
                if h.len() == 1 {
                    write!(f, "{})", h[0])
                } else {
                    write!(f, "{h:?})")
                }
            }
            Element::Dic { s, r } => write!(f, "{s}s{}{}r", if r.is_negative() { "" } else { "+" }, r),
        }
    }
}

/// A validated group: the spec as given plus its desugared structure.
///
/// Equality compares structure only, so `Dihedral(m)` equals
/// `SemidirectZm(m, [2], [-1])`.
#[derive(Debug, Clone)]
pub struct Group {
    spec: GroupSpec,
    kind: GroupKind,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Group {}

pub fn validate_spec(spec: GroupSpec) -> Result<Group, GroupError> {
    fn modulus(m: u64) -> Result<Modulus, GroupError> {
        if m < 2 {
            return Err(GroupError::InvalidSpec(format!("modulus must be at least 2, got {m}")));
        }
        Ok(Modulus::new(m))
    }

    fn check_h(h: &AbelianSpec, eps: &SignCharacter) -> Result<(), GroupError> {
        if let Some(n) = h.factors.iter().find(|&&n| n == 0) {
            return Err(GroupError::InvalidSpec(format!("H factor must be at least 1, got {n}")));
        }
        if h.factors.len() != eps.gen_signs.len() {
            return Err(GroupError::InvalidSpec(format!(
                "{} H factors but {} generator signs",
                h.factors.len(),
                eps.gen_signs.len()
            )));
        }
        for (i, (&n, &s)) in h.factors.iter().zip(&eps.gen_signs).enumerate() {
            match s {
                1 => {}
                -1 if n % 2 == 0 => {}
                -1 => {
                    return Err(GroupError::InvalidSpec(format!(
                        "generator {i} of odd order {n} cannot act by negation (sign character not a homomorphism)"
                    )))
                }
                _ => return Err(GroupError::InvalidSpec(format!("generator sign must be +1 or -1, got {s}"))),
            }
        }
        Ok(())
    }

    let kind = match &spec {
        GroupSpec::Integers => GroupKind::Integers,
        GroupSpec::Cyclic { m } => GroupKind::Cyclic(modulus(*m)?),
        GroupSpec::SemidirectZ { h, eps } => {
            check_h(h, eps)?;
            GroupKind::Semidirect {
                base: Base::Integers,
                h: h.clone(),
                eps: eps.clone(),
            }
        }
        GroupSpec::SemidirectZm { m, h, eps } => {
            let m = modulus(*m)?;
            check_h(h, eps)?;
            GroupKind::Semidirect {
                base: Base::Cyclic(m),
                h: h.clone(),
                eps: eps.clone(),
            }
        }
        GroupSpec::Dihedral { m } => GroupKind::Semidirect {
            base: Base::Cyclic(modulus(*m)?),
            h: AbelianSpec::new(vec![2]),
            eps: SignCharacter::new(vec![-1]),
        },
        GroupSpec::DihedralZ => GroupKind::Semidirect {
            base: Base::Integers,
            h: AbelianSpec::new(vec![2]),
            eps: SignCharacter::new(vec![-1]),
        },
        GroupSpec::Dicyclic { m } => {
            let m = modulus(*m)?;
            if m.get() % 2 == 0 {
                return Err(GroupError::InvalidSpec(format!(
                    "dicyclic group needs odd m for a unique normal form, got {}",
                    m.get()
                )));
            }
            GroupKind::Dicyclic(m)
        }
    };
    Ok(Group { spec, kind })
}

/// Least prime dividing `m` (trial division).
pub fn smallest_prime_factor(m: u64) -> u64 {
    assert!(m >= 2, "smallest_prime_factor needs m >= 2");
    if m.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    m
}

/// Distinct prime factors of `m`, ascending.
pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while m > 1 {
        let p = smallest_prime_factor(m);
        out.push(p);
        while m.is_multiple_of(p) {
            m /= p;
        }
    }
    out
}

impl Group {
    pub fn integers() -> Self {
        validate_spec(GroupSpec::Integers).unwrap()
    }

    pub fn cyclic(m: u64) -> Result<Self, GroupError> {
        validate_spec(GroupSpec::Cyclic { m })
    }

    pub fn dihedral(m: u64) -> Result<Self, GroupError> {
        validate_spec(GroupSpec::Dihedral { m })
    }

    pub fn dihedral_z() -> Self {
        validate_spec(GroupSpec::DihedralZ).unwrap()
    }

    pub fn dicyclic(m: u64) -> Result<Self, GroupError> {
        validate_spec(GroupSpec::Dicyclic { m })
    }

    pub fn semidirect_z(h_factors: Vec<u64>, gen_signs: Vec<i8>) -> Result<Self, GroupError> {
        validate_spec(GroupSpec::SemidirectZ {
            h: AbelianSpec::new(h_factors),
            eps: SignCharacter::new(gen_signs),
        })
    }

    pub fn semidirect_zm(m: u64, h_factors: Vec<u64>, gen_signs: Vec<i8>) -> Result<Self, GroupError> {
        validate_spec(GroupSpec::SemidirectZm {
            m,
            h: AbelianSpec::new(h_factors),
            eps: SignCharacter::new(gen_signs),
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    /// The spec this group desugars to (dihedral families become semidirect ones).
    pub fn desugared_spec(&self) -> GroupSpec {
        match &self.kind {
            GroupKind::Integers => GroupSpec::Integers,
            GroupKind::Cyclic(m) => GroupSpec::Cyclic { m: m.get() },
            GroupKind::Semidirect { base: Base::Integers, h, eps } => GroupSpec::SemidirectZ {
                h: h.clone(),
                eps: eps.clone(),
            },
            GroupKind::Semidirect { base: Base::Cyclic(m), h, eps } => GroupSpec::SemidirectZm {
                m: m.get(),
                h: h.clone(),
                eps: eps.clone(),
            },
            GroupKind::Dicyclic(m) => GroupSpec::Dicyclic { m: m.get() },
        }
    }

    /// `m` for `Z_m`, `Z_m ⋊ H`, `D_{2m}` and `Dic_m`.
    pub fn modulus(&self) -> Option<&Modulus> {
        match &self.kind {
            GroupKind::Cyclic(m) | GroupKind::Dicyclic(m) => Some(m),
            GroupKind::Semidirect { base, .. } => base.modulus(),
            GroupKind::Integers => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn order(&self) -> Option<u64> {
        match &self.kind {
            GroupKind::Integers => None,
            GroupKind::Cyclic(m) => Some(m.get()),
            GroupKind::Semidirect { base: Base::Integers, .. } => None,
            GroupKind::Semidirect { base: Base::Cyclic(m), h, .. } => Some(m.get() * h.order()),
            GroupKind::Dicyclic(m) => Some(4 * m.get()),
        }
    }

    /// `H` and `ε` for semidirect products; `None` otherwise.
    pub fn action(&self) -> Option<(&AbelianSpec, &SignCharacter)> {
        match &self.kind {
            GroupKind::Semidirect { h, eps, .. } => Some((h, eps)),
            _ => None,
        }
    }

    pub fn identity(&self) -> Element {
        match &self.kind {
            GroupKind::Integers => Element::Int(BigInt::zero()),
            GroupKind::Cyclic(_) => Element::Cyc(BigInt::zero()),
            GroupKind::Semidirect { h, .. } => Element::Semi {
                x: BigInt::zero(),
                h: vec![0; h.rank()],
            },
            GroupKind::Dicyclic(_) => Element::Dic { s: 0, r: BigInt::zero() },
        }
    }

    /// Whether `a` has the right variant and is in normal form.
    pub fn contains(&self, a: &Element) -> bool {
        match (&self.kind, a) {
            (GroupKind::Integers, Element::Int(_)) => true,
            (GroupKind::Cyclic(m), Element::Cyc(x)) => !x.is_negative() && x < m.big(),
            (GroupKind::Semidirect { base, h: hs, .. }, Element::Semi { x, h }) => base.contains(x) && hs.contains(h),
            (GroupKind::Dicyclic(m), Element::Dic { s, r }) => *s < 4 && r.abs() <= m.half,
            _ => false,
        }
    }

    pub fn check(&self, a: &Element) -> Result<(), GroupError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(self.mismatch(a))
        }
    }

    pub(crate) fn mismatch(&self, a: &Element) -> GroupError {
        GroupError::SpecMismatch {
            group: self.spec.to_string(),
            element: format!("{a:?}"),
        }
    }

    /// Brings an element with the right variant but arbitrary integer entries
    /// into normal form.
    pub fn normalize(&self, a: Element) -> Result<Element, GroupError> {
        match (&self.kind, a) {
            (GroupKind::Integers, a @ Element::Int(_)) => Ok(a),
            (GroupKind::Cyclic(m), Element::Cyc(x)) => Ok(Element::Cyc(m.reduce(&x))),
            (GroupKind::Semidirect { base, h: hs, .. }, Element::Semi { x, h }) if h.len() == hs.rank() => {
                let h = h.iter().zip(&hs.factors).map(|(&a, &n)| a % n).collect();
                Ok(Element::Semi { x: base.reduce(x), h })
            }
            (GroupKind::Dicyclic(m), Element::Dic { s, r }) => Ok(dic_normalize(m, BigInt::from(s), r)),
            (_, a) => Err(self.mismatch(&a)),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub(crate) fn add_unchecked(&self, a: &Element, b: &Element) -> Element {
        match (&self.kind, a, b) {
            (GroupKind::Integers, Element::Int(x), Element::Int(y)) => Element::Int(x + y),
            (GroupKind::Cyclic(m), Element::Cyc(x), Element::Cyc(y)) => {
                let s = x + y;
                Element::Cyc(if s >= *m.big() { s - m.big() } else { s })
            }
            (GroupKind::Semidirect { base, h: hs, eps }, Element::Semi { x, h }, Element::Semi { x: x2, h: h2 }) => {
                let raw = if eps.eval(h) == 1 { x + x2 } else { x - x2 };
                Element::Semi {
                    x: base.reduce(raw),
                    h: hs.add(h, h2),
                }
            }
            (GroupKind::Dicyclic(m), Element::Dic { s, r }, Element::Dic { s: s2, r: r2 }) => {
                // (λ1 s + λ2 r) + (μ1 s + μ2 r) = (λ1 + μ1) s + ((-1)^{μ1} λ2 + μ2) r
                let lam2 = if s2 % 2 == 0 { r + r2 } else { r2 - r };
                dic_normalize(m, BigInt::from(s + s2), lam2)
            }
            _ => panic!("operands {a:?}, {b:?} do not belong to {}", self.spec),
        }
    }

    pub fn neg(&self, a: &Element) -> Result<Element, GroupError> {
        self.check(a)?;
        Ok(self.neg_unchecked(a))
    }

    pub(crate) fn neg_unchecked(&self, a: &Element) -> Element {
        match (&self.kind, a) {
            (GroupKind::Integers, Element::Int(x)) => Element::Int(-x),
            (GroupKind::Cyclic(m), Element::Cyc(x)) => Element::Cyc(m.reduce(&-x)),
            (GroupKind::Semidirect { base, h: hs, eps }, Element::Semi { x, h }) => {
                // (x, h) + (x', -h) = 0  ⇔  x' = -ε(h)·x
                let x = if eps.eval(h) == 1 { -x } else { x.clone() };
                Element::Semi {
                    x: base.reduce(x),
                    h: hs.neg(h),
                }
            }
            (GroupKind::Dicyclic(m), Element::Dic { s, r }) => {
                // -(λ1 s + λ2 r) = -λ2 r - λ1 s = (-λ1) s + (-(-1)^{λ1} λ2) r
                let r = if s % 2 == 0 { -r } else { r.clone() };
                dic_normalize(m, BigInt::from(4 - *s as i64), r)
            }
            _ => panic!("operand {a:?} does not belong to {}", self.spec),
        }
    }

    pub fn is_zero(&self, a: &Element) -> Result<bool, GroupError> {
        self.check(a)?;
        Ok(*a == self.identity())
    }

    /// Left-to-right sum of a sequence of elements.
    pub fn sum<'a, I>(&self, items: I) -> Result<Element, GroupError>
    where
        I: IntoIterator<Item = &'a Element>,
    {
        let mut acc = self.identity();
        for a in items {
            self.check(a)?;
            acc = self.add_unchecked(&acc, a);
        }
        Ok(acc)
    }

    /// `ε(π_H(a))` for semidirect elements, `+1` for everything else.
    pub fn sign(&self, a: &Element) -> i8 {
        match (&self.kind, a) {
            (GroupKind::Semidirect { eps, .. }, Element::Semi { h, .. }) => eps.eval(h),
            _ => 1,
        }
    }

    /// All elements in canonical (ascending) order.
    pub fn enumerate(&self) -> Result<Vec<Element>, GroupError> {
        match &self.kind {
            GroupKind::Integers | GroupKind::Semidirect { base: Base::Integers, .. } => {
                Err(GroupError::InfiniteGroup(self.spec.to_string()))
            }
            GroupKind::Cyclic(m) => Ok((0..m.get()).map(Element::cyc).collect()),
            GroupKind::Semidirect { base: Base::Cyclic(m), h, .. } => {
                let hs = h.elements();
                let mut out = Vec::with_capacity((m.get() * h.order()) as usize);
                for x in 0..m.get() {
                    for h in &hs {
                        out.push(Element::Semi {
                            x: BigInt::from(x),
                            h: h.clone(),
                        });
                    }
                }
                Ok(out)
            }
            GroupKind::Dicyclic(m) => {
                let half = (m.get() / 2) as i64;
                let mut out = Vec::with_capacity(4 * m.get() as usize);
                for s in 0..4 {
                    for r in -half..=half {
                        out.push(Element::dic(s, r));
                    }
                }
                Ok(out)
            }
        }
    }

    /// `(π_base(a), π_H(a))`. Integers and cyclic groups count as semidirect
    /// products with trivial `H`, so their `H` part is the empty tuple.
    pub fn project(&self, a: &Element) -> Result<(BigInt, Vec<u64>), GroupError> {
        self.check(a)?;
        match a {
            Element::Int(x) | Element::Cyc(x) => Ok((x.clone(), Vec::new())),
            Element::Semi { x, h } => Ok((x.clone(), h.clone())),
            Element::Dic { .. } => Err(self.mismatch(a)),
        }
    }

    /// The group with the base `Z_m` replaced by `Z` (rectification target).
    pub fn lifted(&self) -> Option<Group> {
        let spec = match &self.spec {
            GroupSpec::Cyclic { .. } => GroupSpec::Integers,
            GroupSpec::SemidirectZm { h, eps, .. } => GroupSpec::SemidirectZ {
                h: h.clone(),
                eps: eps.clone(),
            },
            GroupSpec::Dihedral { .. } => GroupSpec::DihedralZ,
            _ => return None,
        };
        Some(validate_spec(spec).expect("lifted spec is valid"))
    }
}

fn dic_normalize(m: &Modulus, lam1: BigInt, lam2: BigInt) -> Element {
    // 2s = mr: every shift of λ2 by ±m adds 2 to λ1.
    let centered = m.centered(&lam2);
    let shifts: BigInt = (&lam2 - &centered) / m.big();
    let s = (lam1 + (shifts << 1u32)).mod_floor(&BigInt::from(4));
    let s: u8 = s.try_into().expect("residue mod 4");
    Element::Dic { s, r: centered }
}

impl Law for Group {
    type Elem = Element;

    fn zero(&self) -> Element {
        self.identity()
    }

    fn op(&self, a: &Element, b: &Element) -> Element {
        debug_assert!(self.contains(a) && self.contains(b));
        self.add_unchecked(a, b)
    }
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
