//! Root systems of the finite reflection groups in exact coordinates.
//!
//! Every concrete system stores its roots with the simple roots first, so the
//! images of the simple roots under a group element form a prefix of the
//! permutation that element induces on the whole root list.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{dot, rank_of, ExactMatrix, Scalar, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    BC,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    H3,
    H4,
    I2,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::A,
        Family::B,
        Family::C,
        Family::BC,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::H3,
        Family::H4,
        Family::I2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::BC => "BC",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::H3 => "H3",
            Family::H4 => "H4",
            Family::I2 => "I2",
        }
    }

    /// Rank of the exceptional types; `None` for the infinite families.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            Family::H3 => Some(3),
            Family::H4 => Some(4),
            _ => None,
        }
    }
}

/// An irreducible type. For the classical families `n` is the rank (so
/// `A(n)` is `A_n`, the symmetric group on `n + 1` letters); for `I2` it is
/// the dihedral parameter; for exceptional types it equals the fixed rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    n: u32,
}

impl CartanType {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        if let Some(r) = family.fixed_rank() {
            return Ok(CartanType { family, n: r });
        }
        let min = match family {
            Family::D | Family::I2 => 2,
            _ => 1,
        };
        if n < min {
            return Err(Error::InvalidRank {
                family: family.name().to_string(),
                rank: n,
            });
        }
        Ok(CartanType { family, n })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn rank(self) -> u32 {
        match self.family {
            Family::I2 => 2,
            _ => self.n,
        }
    }

    /// Degrees of the basic invariants; their product is `|W|`.
    pub fn degrees(self) -> Vec<u64> {
        let n = self.n as u64;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C | Family::BC => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d
            }
            Family::E6 => vec![2, 5, 6, 8, 9, 12],
            Family::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            Family::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            Family::F4 => vec![2, 6, 8, 12],
            Family::G2 => vec![2, 6],
            Family::H3 => vec![2, 6, 10],
            Family::H4 => vec![2, 12, 20, 30],
            Family::I2 => vec![2, n],
        }
    }

    /// `|W|` as the product of the degrees, saturating at `u128::MAX`.
    pub fn group_order(self) -> u128 {
        self.degrees()
            .iter()
            .fold(1u128, |acc, &d| acc.saturating_mul(d as u128))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.n),
            fam if fam.fixed_rank().is_some() => f.write_str(fam.name()),
            fam => write!(f, "{}{}", fam.name(), self.n),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `A4`, `BC3`, `E6`, `I2(5)` and `I2_5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(s.to_string());
        let s = s.trim();
        let upper = s.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2") {
            let digits = rest.trim_matches(|c| c == '(' || c == ')' || c == '_');
            let n = digits.parse().map_err(|_| bad())?;
            return CartanType::new(Family::I2, n);
        }
        for fam in [
            Family::E6,
            Family::E7,
            Family::E8,
            Family::F4,
            Family::G2,
            Family::H3,
            Family::H4,
        ] {
            if upper == fam.name() {
                return CartanType::new(fam, 0);
            }
        }
        let split = upper.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (name, digits) = upper.split_at(split);
        let family = match name {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "BC" => Family::BC,
            "D" => Family::D,
            _ => return Err(bad()),
        };
        CartanType::new(family, digits.parse().map_err(|_| bad())?)
    }
}

/// Label of a root system: a direct sum of irreducible types, or a free-form
/// name for hand-built systems.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Cartan(Vec<CartanType>),
    Custom(String),
}

impl Label {
    pub fn components(&self) -> &[CartanType] {
        match self {
            Label::Cartan(c) => c,
            Label::Custom(_) => &[],
        }
    }

    /// `|W|` from the degree products, when the type is known.
    pub fn group_order(&self) -> Option<u128> {
        match self {
            Label::Cartan(c) => Some(
                c.iter()
                    .fold(1u128, |acc, t| acc.saturating_mul(t.group_order())),
            ),
            Label::Custom(_) => None,
        }
    }

    pub fn contains(&self, family: Family) -> bool {
        self.components().iter().any(|t| t.family == family)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Cartan(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Label::Custom(s) => f.write_str(s),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split('+')
            .map(str::parse)
            .collect::<Result<Vec<CartanType>>>()
            .map(Label::Cartan)
    }
}

/// A concrete root system, or the symbolic stand-in used for `I2(n)`.
#[derive(Clone, Debug)]
pub enum Realization {
    Concrete(RootSystem),
    Dihedral(u32),
}

/// Finite set of roots closed under its own reflections.
#[derive(Clone)]
pub struct RootSystem {
    label: Label,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Vector>,
    simple_count: usize,
    index: FxHashMap<Vector, usize>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("label", &self.label.to_string())
            .field("rank", &self.rank)
            .field("ambient_dim", &self.ambient_dim)
            .field("roots", &self.roots.len())
            .finish()
    }
}

/// `x − 2(x,v)/(v,v)·v`
pub fn reflect(v: &[Scalar], x: &[Scalar]) -> Vector {
    let c = Scalar::from_int(2) * dot(x, v);
    if c.is_zero() {
        return x.to_vec();
    }
    let c = c
        .checked_div(&dot(v, v))
        .expect("reflection vector must be nonzero");
    x.iter().zip(v).map(|(xi, vi)| xi - &(&c * vi)).collect()
}

/// Matrix of the reflection in the hyperplane orthogonal to `v`.
pub fn reflection_matrix_of(v: &[Scalar]) -> Result<ExactMatrix> {
    let vv = dot(v, v);
    if vv.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let c = Scalar::from_int(2).checked_div(&vv)?;
    let n = v.len();
    Ok(ExactMatrix::from_fn(n, |i, j| {
        let d = if i == j {
            Scalar::one()
        } else {
            Scalar::zero()
        };
        d - &c * &(&v[i] * &v[j])
    }))
}

fn unit(dim: usize, i: usize, c: Scalar) -> Vector {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = c;
    v
}

fn combo(dim: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = vec![Scalar::zero(); dim];
    for &(i, c) in terms {
        v[i] = &v[i] + &Scalar::from_int(c);
    }
    v
}

/// `±e_i ± e_j`, `i < j`.
fn pm_pairs(dim: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(combo(dim, &[(i, si), (j, sj)]));
            }
        }
    }
    out
}

fn pm_units(dim: usize, scale: i64) -> Vec<Vector> {
    (0..dim)
        .flat_map(|i| {
            [
                unit(dim, i, Scalar::from_int(scale)),
                unit(dim, i, Scalar::from_int(-scale)),
            ]
        })
        .collect()
}

/// `½(±1, …, ±1)`; with `even_minus`, only sign patterns with an even number
/// of minus signs.
fn half_spin(dim: usize, even_minus: bool) -> Vec<Vector> {
    (0u32..1 << dim)
        .filter(|m| !even_minus || m.count_ones() % 2 == 0)
        .map(|m| {
            (0..dim)
                .map(|i| Scalar::ratio(if m >> i & 1 == 1 { -1 } else { 1 }, 2))
                .collect()
        })
        .collect()
}

fn e8_roots() -> Vec<Vector> {
    let mut r = pm_pairs(8);
    r.extend(half_spin(8, true));
    r
}

/// The 120 unit icosians: the vertices of the 600-cell in quaternion
/// coordinates `(w, x, y, z)`.
pub fn icosians() -> Vec<Vector> {
    let mut out = pm_units(4, 1);
    out.extend(half_spin(4, false));
    let half = Scalar::ratio(1, 2);
    let phi_half = Scalar::quadratic(1, 4, 1, 4);
    let inv_phi_half = Scalar::quadratic(-1, 4, 1, 4);
    let base = [phi_half, half, inv_phi_half];
    for perm in even_permutations_of_4() {
        for signs in 0..8u32 {
            let mut vals: Vec<Scalar> = base
                .iter()
                .enumerate()
                .map(|(i, x)| if signs >> i & 1 == 1 { -x } else { x.clone() })
                .collect();
            vals.push(Scalar::zero());
            let mut v = vec![Scalar::zero(); 4];
            for (k, &p) in perm.iter().enumerate() {
                v[p] = vals[k].clone();
            }
            out.push(v);
        }
    }
    out
}

fn even_permutations_of_4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    if !distinct {
                        continue;
                    }
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// The roots `e_2`, `½(−e_1 + k·e_2 + k⁻¹·e_3)` and `e_1` with `k` the golden
/// ratio, whose reflections generate H3.
pub fn h3_seed_roots() -> [Vector; 3] {
    let k = Scalar::golden();
    let k_inv = &k - &Scalar::one();
    let half = Scalar::ratio(1, 2);
    [
        unit(3, 1, Scalar::one()),
        vec![-&half, &half * &k, &half * &k_inv],
        unit(3, 0, Scalar::one()),
    ]
}

/// A simple system of H4 among the unit icosians.
pub fn h4_seed_roots() -> [Vector; 4] {
    let z = Scalar::zero;
    let half = || Scalar::ratio(1, 2);
    let p = || Scalar::quadratic(1, 4, 1, 4);
    let q = || Scalar::quadratic(-1, 4, 1, 4);
    [
        vec![z(), q(), half(), -p()],
        vec![-q(), half(), z(), p()],
        vec![q(), -p(), half(), z()],
        vec![z(), half(), -p(), -q()],
    ]
}

/// Closes `seeds` under all reflections in its own elements.
pub fn close_under_reflections(seeds: &[Vector]) -> Vec<Vector> {
    let mut roots: Vec<Vector> = Vec::new();
    let mut seen: FxHashMap<Vector, usize> = FxHashMap::default();
    let mut push = |v: Vector, roots: &mut Vec<Vector>| {
        if !seen.contains_key(&v) {
            seen.insert(v.clone(), roots.len());
            roots.push(v);
        }
    };
    for s in seeds {
        push(s.clone(), &mut roots);
    }
    let mut i = 0;
    while i < roots.len() {
        for j in 0..=i {
            let a = reflect(&roots[i], &roots[j]);
            let b = reflect(&roots[j], &roots[i]);
            push(a, &mut roots);
            push(b, &mut roots);
        }
        i += 1;
    }
    roots
}

/// Picks a linear functional that vanishes on no root, from a fixed sequence
/// of candidates.
fn generic_functional(roots: &[Vector], dim: usize) -> Vector {
    for base in [2i64, 3, 5, 7, 11, 13] {
        let f: Vector = (0..dim)
            .map(|i| Scalar::from_int(base.pow((dim - 1 - i) as u32)))
            .collect();
        if roots.iter().all(|r| !dot(&f, r).is_zero()) {
            return f;
        }
    }
    // irrational tilt as a last resort
    (0..dim)
        .map(|i| Scalar::quadratic(17i64.pow((dim - 1 - i) as u32), 1, i as i64 + 1, 97))
        .collect()
}

/// Simple roots with respect to a generic functional: the positive
/// indivisible roots whose reflection permutes the other positive
/// indivisible roots. Returned in decreasing order of the functional.
pub fn find_simple_roots(roots: &[Vector]) -> Vec<Vector> {
    let Some(dim) = roots.first().map(Vec::len) else {
        return Vec::new();
    };
    let f = generic_functional(roots, dim);
    let set: FxHashMap<&Vector, ()> = roots.iter().map(|r| (r, ())).collect();
    let half = Scalar::ratio(1, 2);
    let positive: Vec<&Vector> = roots
        .iter()
        .filter(|r| dot(&f, r).is_positive())
        .filter(|r| {
            let h: Vector = r.iter().map(|x| x * &half).collect();
            !set.contains_key(&h)
        })
        .collect();
    let mut simple: Vec<(Scalar, &Vector)> = positive
        .iter()
        .filter(|&&a| {
            positive
                .iter()
                .filter(|&&b| b != a)
                .all(|b| dot(&f, &reflect(a, b)).is_positive())
        })
        .map(|&a| (dot(&f, a), a))
        .collect();
    simple.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(y.1)));
    simple.into_iter().map(|(_, v)| v.clone()).collect()
}

impl RootSystem {
    /// Builds the standard realization of an irreducible type.
    pub fn build(ty: CartanType) -> Result<RootSystem> {
        let n = ty.n as usize;
        let roots = match ty.family {
            Family::A => {
                let dim = n + 1;
                let mut r = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            r.push(combo(dim, &[(i, 1), (j, -1)]));
                        }
                    }
                }
                r
            }
            Family::B => {
                let mut r = pm_units(n, 1);
                r.extend(pm_pairs(n));
                r
            }
            Family::C => {
                let mut r = pm_units(n, 2);
                r.extend(pm_pairs(n));
                r
            }
            Family::BC => {
                let mut r = pm_units(n, 1);
                r.extend(pm_units(n, 2));
                r.extend(pm_pairs(n));
                r
            }
            Family::D => pm_pairs(n),
            Family::E8 => e8_roots(),
            Family::E7 => {
                let w = combo(8, &[(6, 1), (7, 1)]);
                e8_roots()
                    .into_iter()
                    .filter(|r| dot(r, &w).is_zero())
                    .collect()
            }
            Family::E6 => {
                let w1 = combo(8, &[(6, 1), (7, 1)]);
                let w2 = combo(8, &[(5, 1), (6, -1)]);
                e8_roots()
                    .into_iter()
                    .filter(|r| dot(r, &w1).is_zero() && dot(r, &w2).is_zero())
                    .collect()
            }
            Family::F4 => {
                let mut r = pm_units(4, 1);
                r.extend(pm_pairs(4));
                r.extend(half_spin(4, false));
                r
            }
            Family::G2 => {
                let mut r = Vec::new();
                for i in 0..3 {
                    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                    r.push(combo(3, &[(i, 2), (j, -1), (k, -1)]));
                    r.push(combo(3, &[(i, -2), (j, 1), (k, 1)]));
                    r.push(combo(3, &[(j, 1), (k, -1)]));
                    r.push(combo(3, &[(j, -1), (k, 1)]));
                }
                r
            }
            Family::H3 => close_under_reflections(&h3_seed_roots()),
            Family::H4 => close_under_reflections(&h4_seed_roots()),
            Family::I2 => return Err(Error::Symbolic(ty.to_string())),
        };
        let simple = find_simple_roots(&roots);
        RootSystem::assemble(Label::Cartan(vec![ty]), roots, simple)?.validated()
    }

    /// Closure of `generators` under reflections; the generators themselves
    /// become the distinguished basis.
    pub fn from_generators(label: Label, generators: Vec<Vector>) -> Result<RootSystem> {
        let roots = close_under_reflections(&generators);
        RootSystem::assemble(label, roots, generators)?.validated()
    }

    /// Unvalidated system from explicit data; see [`RootSystem::verify`].
    pub fn from_raw(label: Label, roots: Vec<Vector>, simple: Vec<Vector>) -> Result<RootSystem> {
        RootSystem::assemble(label, roots, simple)
    }

    fn assemble(label: Label, roots: Vec<Vector>, simple: Vec<Vector>) -> Result<RootSystem> {
        let invalid = |reason: &str| Error::InvalidRootSystem {
            label: label.to_string(),
            reason: reason.to_string(),
        };
        let ambient_dim = roots
            .first()
            .map(Vec::len)
            .ok_or_else(|| invalid("no roots"))?;
        if roots.iter().chain(&simple).any(|r| r.len() != ambient_dim) {
            return Err(invalid("roots of different dimensions"));
        }
        let members: FxHashMap<&Vector, ()> = roots.iter().map(|r| (r, ())).collect();
        if simple.iter().any(|s| !members.contains_key(s)) {
            return Err(invalid("simple roots must belong to the root list"));
        }
        let mut ordered: Vec<Vector> = Vec::with_capacity(roots.len());
        let mut index = FxHashMap::default();
        for (i, r) in simple.iter().chain(&roots).enumerate() {
            if index.contains_key(r) {
                if i < simple.len() {
                    return Err(invalid("repeated simple root"));
                }
                continue;
            }
            index.insert(r.clone(), ordered.len());
            ordered.push(r.clone());
        }
        Ok(RootSystem {
            rank: rank_of(ordered.clone(), ambient_dim),
            label,
            ambient_dim,
            roots: ordered,
            simple_count: simple.len(),
            index,
        })
    }

    fn validated(self) -> Result<RootSystem> {
        let report = self.verify();
        if let Some(c) = report.checks.iter().find(|c| !c.passed) {
            if c.name == "closure" {
                return Err(Error::NotClosed {
                    label: self.label.to_string(),
                });
            }
            return Err(Error::InvalidRootSystem {
                label: self.label.to_string(),
                reason: format!("{}: {}", c.name, c.detail),
            });
        }
        Ok(self)
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Vector {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.roots[..self.simple_count]
    }

    pub fn root_index(&self, v: &[Scalar]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Matrix of `R_v`; `v` must be one of the roots.
    pub fn reflection_matrix(&self, v: &[Scalar]) -> Result<ExactMatrix> {
        if self.root_index(v).is_none() {
            return Err(Error::NotARoot {
                label: self.label.to_string(),
            });
        }
        reflection_matrix_of(v)
    }

    /// `table[a·|R| + b]` is the index of `R_{root a}(root b)`.
    pub fn reflection_table(&self) -> Result<Vec<u16>> {
        let n = self.roots.len();
        if n > u16::MAX as usize {
            return Err(Error::Internal(format!(
                "{n} roots exceed the 16-bit index"
            )));
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let img = reflect(&self.roots[a], &self.roots[b]);
                let idx = self.root_index(&img).ok_or_else(|| Error::NotClosed {
                    label: self.label.to_string(),
                })?;
                table[a * n + b] = idx as u16;
            }
        }
        Ok(table)
    }

    /// Checks every structural invariant and reports each one.
    pub fn verify(&self) -> RootSystemReport {
        let mut checks = Vec::new();
        let mut check = |name: &'static str, passed: bool, detail: String| {
            checks.push(Check {
                name,
                passed,
                detail,
            });
        };

        let zero = self
            .roots
            .iter()
            .position(|r| r.iter().all(Scalar::is_zero));
        check(
            "nonzero",
            zero.is_none(),
            zero.map(|i| format!("root {i} is zero"))
                .unwrap_or_default(),
        );
        if zero.is_some() {
            return RootSystemReport { checks };
        }

        let mut missing_image = None;
        'outer: for a in &self.roots {
            for b in &self.roots {
                if self.root_index(&reflect(a, b)).is_none() {
                    missing_image = Some(format!("R_{a:?}({b:?}) is not a root"));
                    break 'outer;
                }
            }
        }
        check(
            "closure",
            missing_image.is_none(),
            missing_image.unwrap_or_default(),
        );

        let unpaired = self.roots.iter().find(|r| {
            let neg: Vector = r.iter().map(|x| -x).collect();
            self.root_index(&neg).is_none()
        });
        check(
            "plus_minus_pairs",
            unpaired.is_none(),
            unpaired
                .map(|r| format!("{r:?} has no negative"))
                .unwrap_or_default(),
        );

        let simple_rank = rank_of(self.simple_roots().to_vec(), self.ambient_dim);
        check(
            "simple_roots",
            self.simple_count == self.rank && simple_rank == self.rank,
            format!(
                "{} simple roots of rank {simple_rank}, system rank {}",
                self.simple_count, self.rank
            ),
        );

        let non_reduced_ok = self.label.contains(Family::BC);
        let mut parallel = None;
        if !non_reduced_ok {
            'p: for (i, a) in self.roots.iter().enumerate() {
                for b in &self.roots[i + 1..] {
                    if rank_of(vec![a.clone(), b.clone()], self.ambient_dim) == 1 {
                        let neg = a.iter().zip(b).all(|(x, y)| (x + y).is_zero());
                        if !neg {
                            parallel = Some(format!("{a:?} and {b:?} are parallel"));
                            break 'p;
                        }
                    }
                }
            }
        }
        check("reduced", parallel.is_none(), parallel.unwrap_or_default());

        RootSystemReport { checks }
    }

    /// Block-diagonal direct sum; roots of `other` follow in the extra
    /// coordinates.
    pub fn direct_sum(&self, other: &RootSystem) -> Result<RootSystem> {
        let (d1, d2) = (self.ambient_dim, other.ambient_dim);
        let left = |v: &Vector| -> Vector {
            v.iter()
                .cloned()
                .chain(std::iter::repeat_n(Scalar::zero(), d2))
                .collect()
        };
        let right = |v: &Vector| -> Vector {
            std::iter::repeat_n(Scalar::zero(), d1)
                .chain(v.iter().cloned())
                .collect()
        };
        let simple: Vec<Vector> = self
            .simple_roots()
            .iter()
            .map(left)
            .chain(other.simple_roots().iter().map(right))
            .collect();
        let roots: Vec<Vector> = self
            .roots
            .iter()
            .map(left)
            .chain(other.roots.iter().map(right))
            .collect();
        let label = match (&self.label, &other.label) {
            (Label::Cartan(a), Label::Cartan(b)) => {
                Label::Cartan(a.iter().chain(b).copied().collect())
            }
            (a, b) => Label::Custom(format!("{a}+{b}")),
        };
        RootSystem::assemble(label, roots, simple)?.validated()
    }

    pub fn to_document(&self) -> RootSystemDocument {
        RootSystemDocument {
            label: self.label.to_string(),
            rank: self.rank,
            ambient_dim: self.ambient_dim,
            roots: self.roots.clone(),
            simple_roots: (0..self.simple_count).collect(),
        }
    }

    pub fn from_document(doc: RootSystemDocument) -> Result<RootSystem> {
        let label = doc
            .label
            .parse()
            .unwrap_or_else(|_| Label::Custom(doc.label.clone()));
        let simple = doc
            .simple_roots
            .iter()
            .map(|&i| {
                doc.roots
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidRootSystem {
                        label: doc.label.clone(),
                        reason: format!("simple root index {i} out of range"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let rs = RootSystem::assemble(label, doc.roots, simple)?.validated()?;
        if rs.rank != doc.rank || rs.ambient_dim != doc.ambient_dim {
            return Err(Error::InvalidRootSystem {
                label: doc.label,
                reason: "rank or dimension disagrees with the roots".into(),
            });
        }
        Ok(rs)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_document())?)
    }

    pub fn from_json(s: &str) -> Result<RootSystem> {
        RootSystem::from_document(serde_json::from_str(s)?)
    }
}

/// Builds a root system, returning the symbolic marker for `I2(n)`.
pub fn build_root_system(ty: CartanType) -> Result<Realization> {
    match ty.family {
        Family::I2 => Ok(Realization::Dihedral(ty.n)),
        _ => RootSystem::build(ty).map(Realization::Concrete),
    }
}

/// Direct sum of the irreducible systems named by a label.
pub fn build_label(label: &Label) -> Result<RootSystem> {
    let parts = label.components();
    let Some((first, rest)) = parts.split_first() else {
        return Err(Error::InvalidType(label.to_string()));
    };
    rest.iter().try_fold(RootSystem::build(*first)?, |acc, t| {
        acc.direct_sum(&RootSystem::build(*t)?)
    })
}

/// Serialized form of a root system.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootSystemDocument {
    pub label: String,
    pub rank: usize,
    pub ambient_dim: usize,
    pub roots: Vec<Vector>,
    pub simple_roots: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct RootSystemReport {
    pub checks: Vec<Check>,
}

impl RootSystemReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect()
    }
}
