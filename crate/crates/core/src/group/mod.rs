//! Enumeration of W(R) and its conjugacy classes.
//!
//! An element is identified by the roots it sends the simple roots to. Since
//! the simple roots come first in the root list, this key is the prefix of
//! the element's permutation of all roots, and it determines that permutation
//! (the simple roots span the root space). Left multiplication by a simple
//! reflection acts on keys by table lookup, which makes breadth-first
//! enumeration cheap; the full permutation is rebuilt on demand by replaying
//! how each root arises from the simple roots.

mod cache;
mod classes;

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::exact::{nullspace, ExactMatrix, Scalar, Vector};
use crate::roots::{Family, RootSystem};

pub use cache::{cache_load, cache_store, FORMAT_VERSION, MAGIC};
pub use classes::{
    conjugacy_classes, verify_class_invariants, ClassPartition, ConjugacyClass, Invariants,
};

/// Packed canonical key: the simple-root images, first image in the most
/// significant bits, so numeric order is lexicographic order.
pub type ElementKey = u128;

/// Resource limits for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_order: u128,
    pub slow_threshold: u128,
    pub slow_ok: bool,
    pub force_e8: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_order: 5_000_000,
            slow_threshold: 1_000_000,
            slow_ok: false,
            force_e8: false,
        }
    }
}

impl Budget {
    pub fn slow() -> Self {
        Budget {
            slow_ok: true,
            ..Budget::default()
        }
    }

    /// Refuses a system whose predicted order is out of budget.
    pub fn admit(&self, system: &RootSystem) -> Result<()> {
        let label = system.label();
        let Some(order) = label.group_order() else {
            return Ok(());
        };
        let has_e8 = label.contains(Family::E8);
        if has_e8 && !self.force_e8 {
            return Err(Error::BudgetExceeded {
                label: label.to_string(),
                order,
                limit: self.max_order,
            });
        }
        if order > self.max_order && !(has_e8 && self.force_e8) {
            return Err(Error::BudgetExceeded {
                label: label.to_string(),
                order,
                limit: self.max_order,
            });
        }
        if order > self.slow_threshold && !self.slow_ok && !(has_e8 && self.force_e8) {
            return Err(Error::SlowRequired {
                label: label.to_string(),
                order,
            });
        }
        Ok(())
    }

    /// Would a system with this predicted order be admitted?
    pub fn allows_order(&self, order: u128) -> bool {
        order <= self.max_order && (order <= self.slow_threshold || self.slow_ok)
    }
}

#[derive(Clone, Debug)]
enum Derivation {
    /// `root = s_gen(from)`
    Reflect { root: u16, gen: u16, from: u16 },
    /// `root = c·from` with `scaled[map][x]` the index of `c·x`
    Scale { root: u16, map: usize, from: u16 },
}

/// Precomputed action of W on root indices.
#[derive(Clone, Debug)]
struct RootAction {
    n_roots: usize,
    rank: usize,
    bits: u32,
    reflections: Vec<u16>,
    derivations: Vec<Derivation>,
    scaled: Vec<Vec<u16>>,
}

impl RootAction {
    fn new(system: &RootSystem) -> Result<Self> {
        let n = system.len();
        let rank = system.simple_roots().len();
        let bits = usize::BITS - (n.max(2) - 1).leading_zeros();
        if rank as u32 * bits > 128 {
            return Err(Error::KeyTooWide { rank, bits });
        }
        let reflections = system.reflection_table()?;

        // breadth-first from the simple roots under simple reflections
        let mut known = vec![false; n];
        let mut derivations = Vec::new();
        let mut queue: Vec<usize> = (0..rank).collect();
        known[..rank].fill(true);
        let mut head = 0;
        while head < queue.len() {
            let r = queue[head];
            head += 1;
            for j in 0..rank {
                let img = reflections[j * n + r] as usize;
                if !known[img] {
                    known[img] = true;
                    derivations.push(Derivation::Reflect {
                        root: img as u16,
                        gen: j as u16,
                        from: r as u16,
                    });
                    queue.push(img);
                }
            }
        }

        // roots outside the orbits of the simple roots are multiples of
        // roots inside them
        let mut scaled: Vec<(Scalar, Vec<u16>)> = Vec::new();
        for r in 0..n {
            if known[r] {
                continue;
            }
            let target = system.root(r);
            let (from, c) = (0..n)
                .filter(|&x| known[x])
                .find_map(|x| parallel_factor(system.root(x), target).map(|c| (x, c)))
                .ok_or_else(|| Error::Internal(format!("root {r} is not reachable")))?;
            let map = match scaled.iter().position(|(s, _)| *s == c) {
                Some(m) => m,
                None => {
                    let table = (0..n)
                        .map(|x| {
                            let v: Vector = system.root(x).iter().map(|y| y * &c).collect();
                            system.root_index(&v).map_or(u16::MAX, |i| i as u16)
                        })
                        .collect();
                    scaled.push((c, table));
                    scaled.len() - 1
                }
            };
            derivations.push(Derivation::Scale {
                root: r as u16,
                map,
                from: from as u16,
            });
        }

        Ok(RootAction {
            n_roots: n,
            rank,
            bits,
            reflections,
            derivations,
            scaled: scaled.into_iter().map(|(_, t)| t).collect(),
        })
    }

    fn pack(&self, entries: impl Iterator<Item = u16>) -> ElementKey {
        entries.fold(0u128, |acc, e| (acc << self.bits) | e as u128)
    }

    fn unpack(&self, key: ElementKey, out: &mut [u16]) {
        let mask = (1u128 << self.bits) - 1;
        for (i, slot) in out[..self.rank].iter_mut().enumerate() {
            let shift = self.bits as usize * (self.rank - 1 - i);
            *slot = ((key >> shift) & mask) as u16;
        }
    }

    fn identity_key(&self) -> ElementKey {
        self.pack(0..self.rank as u16)
    }

    /// Key of `s_j · g`.
    fn left_mul(&self, key: ElementKey, j: usize) -> ElementKey {
        let n = self.n_roots;
        let mask = (1u128 << self.bits) - 1;
        let mut out = 0u128;
        for i in 0..self.rank {
            let shift = self.bits as usize * (self.rank - 1 - i);
            let e = ((key >> shift) & mask) as usize;
            out = (out << self.bits) | self.reflections[j * n + e] as u128;
        }
        out
    }

    /// Full root permutation of the element with this key.
    fn permutation(&self, key: ElementKey, out: &mut [u16]) {
        let n = self.n_roots;
        self.unpack(key, &mut out[..self.rank]);
        for d in &self.derivations {
            match *d {
                Derivation::Reflect { root, gen, from } => {
                    let axis = out[gen as usize] as usize;
                    out[root as usize] = self.reflections[axis * n + out[from as usize] as usize];
                }
                Derivation::Scale { root, map, from } => {
                    out[root as usize] = self.scaled[map][out[from as usize] as usize];
                }
            }
        }
    }
}

/// `c` with `target = c·v`, if the two vectors are parallel.
fn parallel_factor(v: &[Scalar], target: &[Scalar]) -> Option<Scalar> {
    let i = v.iter().position(|x| !x.is_zero())?;
    let c = target[i].checked_div(&v[i]).ok()?;
    v.iter()
        .zip(target)
        .all(|(a, b)| &(a * &c) == b)
        .then_some(c)
}

/// An element with its matrix and a word in the simple reflections.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub index: u32,
    pub key: ElementKey,
    pub matrix: ExactMatrix,
    /// Generator indices `w` with element `= s_{w[0]}·s_{w[1]}·…`.
    pub word: Vec<u8>,
}

/// W(R), enumerated.
pub struct FiniteGroup {
    system: Arc<RootSystem>,
    action: RootAction,
    keys: Vec<ElementKey>,
    index: FxHashMap<ElementKey, u32>,
    parent: Vec<u32>,
    via: Vec<u8>,
    generators: Vec<u32>,
    basis_inverse: ExactMatrix,
    complement: Vec<Vector>,
    partition: OnceLock<ClassPartition>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("system", &self.system.label().to_string())
            .field("order", &self.keys.len())
            .finish()
    }
}

const NO_PARENT: u32 = u32::MAX;

/// Enumerates W(R) breadth-first from the identity under left multiplication
/// by the simple reflections.
pub fn generate(system: &RootSystem, budget: &Budget) -> Result<FiniteGroup> {
    FiniteGroup::generate(Arc::new(system.clone()), budget)
}

impl FiniteGroup {
    pub fn generate(system: Arc<RootSystem>, budget: &Budget) -> Result<FiniteGroup> {
        budget.admit(&system)?;
        let predicted = system.label().group_order();
        let cap = predicted.map_or(budget.max_order, |o| o.max(1));
        let mut group = FiniteGroup::empty(system)?;
        let rank = group.action.rank;

        group.push(group.action.identity_key(), NO_PARENT, 0);
        let mut frontier: Vec<u32> = vec![0];
        while !frontier.is_empty() {
            let action = &group.action;
            let keys = &group.keys;
            let candidates: Vec<(ElementKey, u32, u8)> = frontier
                .par_iter()
                .flat_map_iter(|&idx| {
                    let key = keys[idx as usize];
                    (0..rank).map(move |j| (action.left_mul(key, j), idx, j as u8))
                })
                .collect();
            let mut next = Vec::new();
            for (key, parent, j) in candidates {
                if !group.index.contains_key(&key) {
                    next.push(group.push(key, parent, j));
                    if group.keys.len() as u128 > cap {
                        return Err(match predicted {
                            Some(_) => Error::Internal(format!(
                                "enumeration of W({}) exceeded its predicted order {cap}",
                                group.system.label()
                            )),
                            None => Error::BudgetExceeded {
                                label: group.system.label().to_string(),
                                order: group.keys.len() as u128,
                                limit: cap,
                            },
                        });
                    }
                }
            }
            frontier = next;
        }

        group.generators = (0..rank)
            .map(|j| group.index[&group.action.left_mul(group.action.identity_key(), j)])
            .collect();
        Ok(group)
    }

    fn empty(system: Arc<RootSystem>) -> Result<FiniteGroup> {
        let action = RootAction::new(&system)?;
        let dim = system.ambient_dim();
        let complement = nullspace(system.simple_roots(), dim);
        let basis: Vec<Vector> = system
            .simple_roots()
            .iter()
            .cloned()
            .chain(complement.iter().cloned())
            .collect();
        let basis_inverse = ExactMatrix::from_columns(&basis).inverse()?;
        Ok(FiniteGroup {
            system,
            action,
            keys: Vec::new(),
            index: FxHashMap::default(),
            parent: Vec::new(),
            via: Vec::new(),
            generators: Vec::new(),
            basis_inverse,
            complement,
            partition: OnceLock::new(),
        })
    }

    fn push(&mut self, key: ElementKey, parent: u32, via: u8) -> u32 {
        let idx = self.keys.len() as u32;
        self.keys.push(key);
        self.index.insert(key, idx);
        self.parent.push(parent);
        self.via.push(via);
        idx
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn rank(&self) -> usize {
        self.action.rank
    }

    pub fn identity(&self) -> u32 {
        0
    }

    /// Element indices of the simple reflections.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn key(&self, idx: u32) -> ElementKey {
        self.keys[idx as usize]
    }

    pub fn keys(&self) -> &[ElementKey] {
        &self.keys
    }

    pub fn find(&self, key: ElementKey) -> Option<u32> {
        self.index.get(&key).copied()
    }

    /// Images of the simple roots, as root indices.
    pub fn simple_images(&self, idx: u32) -> Vec<u16> {
        let mut out = vec![0; self.action.rank];
        self.action.unpack(self.keys[idx as usize], &mut out);
        out
    }

    pub fn key_of_images(&self, images: &[u16]) -> ElementKey {
        self.action.pack(images.iter().copied())
    }

    /// Permutation the element induces on the root list.
    pub fn root_permutation(&self, idx: u32) -> Vec<u16> {
        let mut out = vec![0; self.action.n_roots];
        self.action.permutation(self.keys[idx as usize], &mut out);
        out
    }

    pub(crate) fn permutation_into(&self, idx: u32, out: &mut [u16]) {
        self.action.permutation(self.keys[idx as usize], out);
    }

    /// Word in the simple reflections (generator indices, leftmost first).
    pub fn word(&self, idx: u32) -> Vec<u8> {
        let mut w = Vec::new();
        let mut cur = idx;
        while self.parent[cur as usize] != NO_PARENT {
            w.push(self.via[cur as usize]);
            cur = self.parent[cur as usize];
        }
        w
    }

    /// `(parent, j)` with `element = s_j · parent`; `None` for the identity.
    pub fn parent_link(&self, idx: u32) -> Option<(u32, usize)> {
        let p = self.parent[idx as usize];
        (p != NO_PARENT).then(|| (p, self.via[idx as usize] as usize))
    }

    /// Matrix in ambient coordinates, fixing the complement of the root span.
    pub fn matrix(&self, idx: u32) -> ExactMatrix {
        let images = self.simple_images(idx);
        let cols: Vec<Vector> = images
            .iter()
            .map(|&r| self.system.root(r as usize).clone())
            .chain(self.complement.iter().cloned())
            .collect();
        &ExactMatrix::from_columns(&cols) * &self.basis_inverse
    }

    /// Action on the span of the roots, in the basis of simple roots.
    pub fn span_matrix(&self, idx: u32) -> ExactMatrix {
        let rank = self.action.rank;
        let cols: Vec<Vector> = self
            .simple_images(idx)
            .iter()
            .map(|&r| self.basis_inverse.apply(self.system.root(r as usize))[..rank].to_vec())
            .collect();
        ExactMatrix::from_columns(&cols)
    }

    pub fn element(&self, idx: u32) -> GroupElement {
        GroupElement {
            index: idx,
            key: self.keys[idx as usize],
            matrix: self.matrix(idx),
            word: self.word(idx),
        }
    }

    /// `a · b`
    pub fn multiply(&self, a: u32, b: u32) -> u32 {
        let pa = self.root_permutation(a);
        let images: Vec<u16> = self
            .simple_images(b)
            .iter()
            .map(|&r| pa[r as usize])
            .collect();
        self.index[&self.key_of_images(&images)]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        let p = self.root_permutation(a);
        let mut inv = vec![0u16; p.len()];
        for (i, &x) in p.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        self.index[&self.key_of_images(&inv[..self.action.rank])]
    }

    /// Index of `s_j · g · s_j` given the root permutation of `g`.
    pub(crate) fn conjugate_by_generator(&self, perm: &[u16], j: usize) -> ElementKey {
        let n = self.action.n_roots;
        let sigma = &self.action.reflections[j * n..(j + 1) * n];
        self.action
            .pack((0..self.action.rank).map(|i| sigma[perm[sigma[i] as usize] as usize]))
    }

    /// Least `m ≥ 1` with `gᵐ = 1`, from the cycle type of the root
    /// permutation.
    pub fn element_order(&self, idx: u32) -> u64 {
        permutation_order(&self.root_permutation(idx))
    }

    /// Conjugacy classes as a partition of element indices; computed once.
    pub fn class_partition(&self) -> &ClassPartition {
        self.partition.get_or_init(|| ClassPartition::compute(self))
    }

    pub(crate) fn set_partition(&self, p: ClassPartition) {
        let _ = self.partition.set(p);
    }
}

pub(crate) fn permutation_order(perm: &[u16]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut order = 1u64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur] as usize;
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;

    fn group(name: &str) -> FiniteGroup {
        let ty: CartanType = name.parse().unwrap();
        generate(&RootSystem::build(ty).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(group("A2").order(), 6);
        assert_eq!(group("B2").order(), 8);
        assert_eq!(group("BC2").order(), 8);
        assert_eq!(group("G2").order(), 12);
        assert_eq!(group("H3").order(), 120);
    }

    #[test]
    fn keys_are_prefixes_of_permutations() {
        let g = group("B3");
        for idx in 0..g.order() as u32 {
            let p = g.root_permutation(idx);
            assert_eq!(&p[..3], g.simple_images(idx).as_slice());
        }
    }

    #[test]
    fn matrices_agree_with_words() {
        let g = group("H3");
        let sys = g.system();
        let gens: Vec<ExactMatrix> = sys
            .simple_roots()
            .iter()
            .map(|r| sys.reflection_matrix(r).unwrap())
            .collect();
        for idx in 0..g.order() as u32 {
            let from_word = g
                .word(idx)
                .iter()
                .fold(ExactMatrix::identity(3), |acc, &j| &acc * &gens[j as usize]);
            let m = g.matrix(idx);
            assert_eq!(m, from_word);
            assert!(m.is_orthogonal());
        }
    }

    #[test]
    fn permutation_matches_matrix_action() {
        let g = group("BC2");
        let sys = g.system();
        for idx in 0..g.order() as u32 {
            let m = g.matrix(idx);
            let p = g.root_permutation(idx);
            for (r, &img) in p.iter().enumerate() {
                assert_eq!(&m.apply(sys.root(r)), sys.root(img as usize));
            }
        }
    }

    #[test]
    fn element_orders() {
        let g = group("A3");
        assert_eq!(g.element_order(g.identity()), 1);
        for &s in g.generators() {
            assert_eq!(g.element_order(s), 2);
        }
        for idx in 0..g.order() as u32 {
            let m = g.matrix(idx);
            let k = g.element_order(idx) as u32;
            assert!(m.pow(k).is_identity());
            assert!((1..k).all(|j| !m.pow(j).is_identity()));
        }
    }

    #[test]
    fn inverse_and_multiply() {
        let g = group("D4");
        for idx in (0..g.order() as u32).step_by(7) {
            let inv = g.inverse(idx);
            assert_eq!(g.multiply(idx, inv), g.identity());
            assert_eq!(g.multiply(inv, idx), g.identity());
        }
    }

    #[test]
    fn budget_refusals() {
        let e8 = RootSystem::build("E8".parse().unwrap()).unwrap();
        assert!(matches!(
            generate(&e8, &Budget::default()),
            Err(Error::BudgetExceeded {
                order: 696_729_600,
                ..
            })
        ));
        let e7 = RootSystem::build("E7".parse().unwrap()).unwrap();
        assert!(matches!(
            Budget::default().admit(&e7),
            Err(Error::SlowRequired {
                order: 2_903_040,
                ..
            })
        ));
        assert!(Budget::slow().admit(&e7).is_ok());
        let b9 = RootSystem::build("B9".parse().unwrap()).unwrap();
        assert!(matches!(
            Budget::slow().admit(&b9),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
