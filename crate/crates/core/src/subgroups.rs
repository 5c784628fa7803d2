//! Conjugacy classes of subgroups by cyclic extension.
//!
//! Starting from the trivial subgroup, every class representative is joined
//! with every element of the ambient group; since each subgroup is reached
//! by a chain `⟨g₁⟩ ⊂ ⟨g₁,g₂⟩ ⊂ …`, this visits every class. Each class is
//! represented by the conjugate with the lexicographically smallest sorted
//! element list.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub rep: Arc<Group>,
    pub normalizer: Arc<Group>,
    pub label: String,
    /// Sorted indices of `rep` inside the ambient group.
    members: Vec<u32>,
    /// Ambient index to index in `rep`, `u32::MAX` outside.
    local: Vec<u32>,
    element_orders: Vec<usize>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.rep.order()
    }

    /// Number of conjugates, `|G : N_G(H)|`.
    pub fn class_size(&self, ambient_order: usize) -> usize {
        ambient_order / self.normalizer.order()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    #[inline]
    pub fn local_index(&self, ambient: usize) -> Option<usize> {
        match self.local[ambient] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupClassTable {
    ambient: Arc<Group>,
    classes: Vec<SubgroupClass>,
}

impl SubgroupClassTable {
    pub fn new(ambient: Arc<Group>) -> SubgroupClassTable {
        let raw = enumerate_classes(&ambient);
        let mut keyed: Vec<(usize, Vec<usize>, Vec<u32>)> = raw
            .into_iter()
            .map(|members| {
                let mut orders: Vec<usize> = members
                    .iter()
                    .map(|&i| ambient.element_order_idx(i as usize))
                    .collect();
                orders.sort_unstable();
                (members.len(), orders, members)
            })
            .collect();
        keyed.sort();

        let mut classes: Vec<SubgroupClass> = keyed
            .into_iter()
            .map(|(_, element_orders, members)| {
                let rep = Arc::new(ambient.subgroup_from_indices(&members));
                let normalizer = Arc::new(ambient.normalizer(&rep).expect("rep is a subgroup"));
                let mut local = alloc::vec![u32::MAX; ambient.order()];
                for (k, &i) in members.iter().enumerate() {
                    local[i as usize] = k as u32;
                }
                SubgroupClass {
                    rep,
                    normalizer,
                    label: String::new(),
                    members,
                    local,
                    element_orders,
                }
            })
            .collect();
        let labels = crate::labels::subgroup_labels(&classes);
        for (class, label) in classes.iter_mut().zip(labels) {
            class.label = label;
        }
        SubgroupClassTable { ambient, classes }
    }

    pub fn ambient(&self) -> &Arc<Group> {
        &self.ambient
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn index_by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Class of `sub` together with some `t` such that `sub^t` is the representative.
    pub fn identify(&self, sub: &Group) -> Result<(usize, Perm)> {
        let members = self.ambient.indices_of(sub)?;
        let (class, t) = self.identify_indices(&members)?;
        Ok((class, self.ambient.element(t).clone()))
    }

    /// As [`identify`](Self::identify) for a sorted list of ambient indices
    /// forming a subgroup; returns the conjugator as an ambient index (the
    /// smallest one that works).
    pub fn identify_indices(&self, members: &[u32]) -> Result<(usize, usize)> {
        let g = &*self.ambient;
        let mut orders: Vec<usize> = members
            .iter()
            .map(|&i| g.element_order_idx(i as usize))
            .collect();
        orders.sort_unstable();
        let gens = generators_of(g, members);
        for (ci, class) in self.classes.iter().enumerate() {
            if class.members.len() != members.len() || class.element_orders != orders {
                continue;
            }
            for t in 0..g.order() {
                if gens.iter().all(|&x| class.local[g.conj_idx(x, t)] != u32::MAX) {
                    return Ok((ci, t));
                }
            }
        }
        Err(Error::NotASubgroup)
    }
}

/// A generating set for a subgroup given by sorted ambient indices.
pub(crate) fn generators_of(g: &Group, members: &[u32]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = g.closure_idx(&gens);
    for &x in members {
        if !current.contains(x as usize) {
            gens.push(x as usize);
            current = g.closure_idx(&gens);
        }
        if current.len() == members.len() {
            break;
        }
    }
    gens
}

fn enumerate_classes(g: &Group) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut reps: Vec<Vec<u32>> = Vec::new();
    let mut rep_gens: Vec<Vec<usize>> = Vec::new();
    let mut known: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut seen: BTreeSet<BitSet> = BTreeSet::new();

    let trivial = alloc::vec![0u32];
    known.insert(trivial.clone(), 0);
    reps.push(trivial);
    rep_gens.push(Vec::new());

    let mut next = 0;
    while next < reps.len() {
        let base = reps[next].clone();
        let base_set = {
            let mut s = BitSet::new(n);
            for &i in &base {
                s.insert(i as usize);
            }
            s
        };
        let mut gens = rep_gens[next].clone();
        next += 1;
        for x in 0..n {
            if base_set.contains(x) {
                continue;
            }
            gens.push(x);
            let closure = g.closure_idx(&gens);
            gens.pop();
            if !seen.insert(closure.clone()) {
                continue;
            }
            let canon = minimal_conjugate(g, &closure);
            if known.contains_key(&canon) {
                continue;
            }
            known.insert(canon.clone(), reps.len());
            // generators for the canonical conjugate, not the one we built
            rep_gens.push(generators_of(g, &canon));
            reps.push(canon);
        }
    }
    reps
}

/// Lexicographically smallest sorted index list among the conjugates of `sub`.
fn minimal_conjugate(g: &Group, sub: &BitSet) -> Vec<u32> {
    let elems: Vec<usize> = sub.iter().collect();
    let mut best: Option<Vec<u32>> = None;
    let mut buf: Vec<u32> = Vec::with_capacity(elems.len());
    for t in 0..g.order() {
        buf.clear();
        buf.extend(elems.iter().map(|&x| g.conj_idx(x, t) as u32));
        buf.sort_unstable();
        if best.as_ref().map_or(true, |b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.expect("group is nonempty")
}

/// Human-readable summary used in diagnostics.
pub fn describe(class: &SubgroupClass) -> String {
    let gens: Vec<String> = class.rep.generators().iter().map(|p| format!("{p}")).collect();
    format!("{} = <{}>", class.label, gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::group_from_spec;

    fn table(spec: &str) -> SubgroupClassTable {
        SubgroupClassTable::new(Arc::new(group_from_spec(spec).unwrap()))
    }

    #[test]
    fn class_counts() {
        let t = table("S4");
        let orders: Vec<usize> = t.classes().iter().map(|c| c.order()).collect();
        assert_eq!(orders, [1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24]);
        assert_eq!(table("S5").len(), 19);
        assert_eq!(table("C2").len(), 2);
        assert_eq!(table("A5").len(), 9);
        assert_eq!(table("D8").len(), 8);
    }

    #[test]
    fn class_sizes_sum_to_subgroup_count() {
        // S4 has 30 subgroups
        let t = table("S4");
        let total: usize = t.classes().iter().map(|c| c.class_size(24)).sum();
        assert_eq!(total, 30);
        for c in t.classes() {
            assert!(c.rep.is_subgroup_of(&c.normalizer));
        }
    }

    #[test]
    fn identify_finds_conjugator() {
        let t = table("S5");
        let g = t.ambient().clone();
        let x = Perm::parse_cycles(5, "(1 3)(2 5)").unwrap();
        let y = Perm::parse_cycles(5, "(1 2)(3 5)").unwrap();
        let sub = Group::generate(5, alloc::vec![x, y]).unwrap();
        let (ci, t_perm) = t.identify(&sub).unwrap();
        assert_eq!(t.class(ci).label, "V2");
        assert_eq!(sub.conjugate(&t_perm), *t.class(ci).rep);
        let _ = g;
    }

    #[test]
    fn labels_follow_structure() {
        let t = table("S4");
        let labels: Vec<&str> = t.classes().iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["1", "C2a", "C2b", "C3", "V1", "V2", "C4", "S3", "D8", "A4", "S4"]);
        let t = table("S5");
        let labels: Vec<&str> = t.classes().iter().map(|c| c.label.as_str()).collect();
        for l in ["H6", "H10", "H20", "S3xS2", "V1", "V2", "D8", "A4", "S4", "A5", "S5", "C6"] {
            assert!(labels.contains(&l), "{l} missing from {labels:?}");
        }
    }
}
