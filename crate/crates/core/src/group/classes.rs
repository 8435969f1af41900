use rayon::prelude::*;

use super::{ElementKey, FiniteGroup};
use crate::counter::e_grade;
use crate::error::{Error, Result};
use crate::exact::{ExactPoly, Scalar};

/// Partition of the elements into conjugacy classes.
///
/// Classes are numbered in `(size, representative key)` order, the
/// representative being the member with the smallest key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    class_of: Vec<u32>,
    reps: Vec<u32>,
    sizes: Vec<u64>,
}

impl ClassPartition {
    pub(super) fn compute(group: &FiniteGroup) -> ClassPartition {
        let n = group.order();
        let rank = group.rank();
        let n_roots = group.system().len();

        // conjugates of every element by every generator
        let mut conj = vec![0u32; n * rank];
        conj.par_chunks_mut(rank.max(1)).enumerate().for_each_init(
            || vec![0u16; n_roots],
            |perm, (i, out)| {
                group.permutation_into(i as u32, perm);
                for (j, slot) in out.iter_mut().enumerate() {
                    let key = group.conjugate_by_generator(perm, j);
                    *slot = group.find(key).expect("conjugate is a group element");
                }
            },
        );

        const UNSET: u32 = u32::MAX;
        let mut label = vec![UNSET; n];
        let mut found: Vec<(u64, ElementKey, u32)> = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if label[start] != UNSET {
                continue;
            }
            let id = found.len() as u32;
            label[start] = id;
            stack.push(start as u32);
            let (mut size, mut rep) = (0u64, start as u32);
            while let Some(x) = stack.pop() {
                size += 1;
                if group.key(x) < group.key(rep) {
                    rep = x;
                }
                for &y in &conj[x as usize * rank..(x as usize + 1) * rank] {
                    if label[y as usize] == UNSET {
                        label[y as usize] = id;
                        stack.push(y);
                    }
                }
            }
            found.push((size, group.key(rep), rep));
        }

        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by_key(|&c| (found[c].0, found[c].1));
        let mut renumber = vec![0u32; found.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new as u32;
        }
        for l in label.iter_mut() {
            *l = renumber[*l as usize];
        }
        ClassPartition {
            class_of: label,
            reps: order.iter().map(|&c| found[c].2).collect(),
            sizes: order.iter().map(|&c| found[c].0).collect(),
        }
    }

    pub(crate) fn from_parts(class_of: Vec<u32>, reps: Vec<u32>, sizes: Vec<u64>) -> Self {
        ClassPartition {
            class_of,
            reps,
            sizes,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_of(&self, idx: u32) -> usize {
        self.class_of[idx as usize] as usize
    }

    pub fn class_ids(&self) -> &[u32] {
        &self.class_of
    }

    pub fn representative(&self, class: usize) -> u32 {
        self.reps[class]
    }

    pub fn representatives(&self) -> &[u32] {
        &self.reps
    }

    pub fn size(&self, class: usize) -> u64 {
        self.sizes[class]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Members of each class, in index order.
    pub fn members(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self
            .sizes
            .iter()
            .map(|&s| Vec::with_capacity(s as usize))
            .collect();
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(i as u32);
        }
        out
    }
}

/// Class functions recorded for a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Invariants {
    pub order: u64,
    pub det: Scalar,
    pub trace: Scalar,
    pub charpoly: ExactPoly,
    pub e_grade: usize,
}

impl Invariants {
    pub fn of(group: &FiniteGroup, idx: u32) -> Invariants {
        let m = group.matrix(idx);
        Invariants {
            order: group.element_order(idx),
            det: m.det(),
            trace: m.trace(),
            charpoly: m.char_poly(),
            e_grade: e_grade(&m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub id: usize,
    pub representative: u32,
    pub rep_key: ElementKey,
    pub size: u64,
    pub order: u64,
    pub det: Scalar,
    pub trace: Scalar,
    /// `det(t·I − g)`
    pub charpoly: ExactPoly,
    pub e_grade: usize,
    pub rep_word: Vec<u8>,
}

impl ConjugacyClass {
    pub fn invariants(&self) -> Invariants {
        Invariants {
            order: self.order,
            det: self.det.clone(),
            trace: self.trace.clone(),
            charpoly: self.charpoly.clone(),
            e_grade: self.e_grade,
        }
    }

    /// Multiplicity of −1 as a root of the characteristic polynomial.
    pub fn charpoly_minus_one_multiplicity(&self) -> usize {
        self.charpoly.root_multiplicity(&Scalar::from_int(-1))
    }
}

/// Class records with their invariants, in partition order.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<ConjugacyClass> {
    let p = group.class_partition();
    (0..p.len())
        .into_par_iter()
        .map(|c| {
            let rep = p.representative(c);
            let inv = Invariants::of(group, rep);
            ConjugacyClass {
                id: c,
                representative: rep,
                rep_key: group.key(rep),
                size: p.size(c),
                order: inv.order,
                det: inv.det,
                trace: inv.trace,
                charpoly: inv.charpoly,
                e_grade: inv.e_grade,
                rep_word: group.word(rep),
            }
        })
        .collect()
}

/// Recomputes the invariants of up to `samples` members of every class
/// (spread evenly through the class) and compares them with the records.
pub fn verify_class_invariants(
    group: &FiniteGroup,
    classes: &[ConjugacyClass],
    samples: usize,
) -> Result<()> {
    let members = group.class_partition().members();
    let picks: Vec<(usize, u32)> = classes
        .iter()
        .flat_map(|c| {
            let m = &members[c.id];
            let k = samples.min(m.len()).max(1);
            (0..k).map(move |s| (c.id, m[s * m.len() / k]))
        })
        .collect();
    picks.par_iter().try_for_each(|&(class, idx)| {
        let got = Invariants::of(group, idx);
        let want = classes[class].invariants();
        if got != want {
            return Err(Error::ClassInvariant {
                class,
                detail: format!("element {idx}: {got:?} != {want:?}"),
            });
        }
        Ok(())
    })
}
