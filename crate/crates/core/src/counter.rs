//! Counting conjugacy classes without eigenvalue −1.
//!
//! `E(g)` is the dimension of `{x : g·x = −x}`. The number of supertraces on
//! the observable superalgebra of the Calogero model built on R is the number
//! of conjugacy classes of W(R) with `E(g) = 0`, independently of the
//! coupling constants.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{ExactMatrix, ExactPoly, Scalar};
use crate::group::{conjugacy_classes, generate, Budget, ConjugacyClass, FiniteGroup};
use crate::roots::RootSystem;

/// Dimension of the −1 eigenspace, as the nullity of `g + I`.
pub fn e_grade(m: &ExactMatrix) -> usize {
    (m + &ExactMatrix::identity(m.dim())).nullity()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub size: u64,
    pub order: u64,
    pub det: Scalar,
    pub trace: Scalar,
    pub charpoly: ExactPoly,
    pub e_grade: usize,
    pub rep_word: Vec<u8>,
}

impl From<&ConjugacyClass> for ClassRecord {
    fn from(c: &ConjugacyClass) -> Self {
        ClassRecord {
            size: c.size,
            order: c.order,
            det: c.det.clone(),
            trace: c.trace.clone(),
            charpoly: c.charpoly.clone(),
            e_grade: c.e_grade,
            rep_word: c.rep_word.clone(),
        }
    }
}

/// The count Q(R) with its provenance. Field order is part of the JSON
/// format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QReport {
    #[serde(rename = "type")]
    pub label: String,
    pub rank: usize,
    #[serde(with = "json_int")]
    pub group_order: BigUint,
    pub num_classes: Option<u64>,
    #[serde(with = "json_int")]
    pub q: BigUint,
    pub method: Method,
    pub classes: Vec<ClassRecord>,
    /// Closed form next to brute force, when both were run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<CrossCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    #[serde(with = "json_int")]
    pub q_closed: BigUint,
    #[serde(with = "json_int")]
    pub q_brute: BigUint,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl QReport {
    pub fn from_classes(
        system: &RootSystem,
        group_order: usize,
        classes: &[ConjugacyClass],
    ) -> QReport {
        QReport {
            label: system.label().to_string(),
            rank: system.rank(),
            group_order: BigUint::from(group_order),
            num_classes: Some(classes.len() as u64),
            q: BigUint::from(classes.iter().filter(|c| c.e_grade == 0).count()),
            method: Method::Brute,
            classes: classes.iter().map(ClassRecord::from).collect(),
            cross_check: None,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Big integers as plain JSON numbers.
pub(crate) mod json_int {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        let n: Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let n = Number::deserialize(d)?;
        n.to_string().parse().map_err(D::Error::custom)
    }
}

/// Q for an already enumerated group.
pub fn q_of_group(group: &FiniteGroup) -> QReport {
    QReport::from_classes(group.system(), group.order(), &conjugacy_classes(group))
}

/// Enumerates W(R), classifies it and counts classes with `E(g) = 0`.
pub fn q_bruteforce(system: &RootSystem, budget: &Budget) -> Result<QReport> {
    Ok(q_of_group(&generate(system, budget)?))
}

/// Checks `Q(R₁ ⊕ R₂) = Q(R₁)·Q(R₂)`, every side by brute force.
pub fn verify_multiplicativity(r1: &RootSystem, r2: &RootSystem, budget: &Budget) -> Result<bool> {
    let sum = r1.direct_sum(r2)?;
    let q1 = q_bruteforce(r1, budget)?.q;
    let q2 = q_bruteforce(r2, budget)?.q;
    let q = q_bruteforce(&sum, budget)?.q;
    Ok(q == q1 * q2)
}
