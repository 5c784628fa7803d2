//! Finite permutation groups held as a fully enumerated, sorted element list
//! together with their Cayley table.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the order of any group that gets enumerated.
pub const DEFAULT_MAX_ORDER: usize = 1000;

#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Group) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

impl Group {
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Result<Group> {
        Group::generate_with_cap(degree, generators, DEFAULT_MAX_ORDER)
    }

    pub fn generate_with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen = BTreeSet::new();
        seen.insert(id.clone());
        let mut frontier = alloc::vec![id];
        while let Some(x) = frontier.pop() {
            for s in &generators {
                let y = x.then(s);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    if seen.len() > cap {
                        return Err(Error::Capacity {
                            what: "group order",
                            limit: cap,
                        });
                    }
                    frontier.push(y);
                }
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(Group::from_sorted(degree, generators, seen.into_iter().collect()))
    }

    pub fn trivial(degree: usize) -> Group {
        Group::from_sorted(degree, Vec::new(), alloc::vec![Perm::identity(degree)])
    }

    /// `elements` must be sorted and closed under multiplication.
    fn from_sorted(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Group {
        let n = elements.len();
        let find = |p: &Perm| elements.binary_search(p).expect("element set is closed") as u32;
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(find(&a.then(b)));
            }
        }
        let inv = elements.iter().map(|a| find(&a.inverse())).collect();
        Group {
            degree,
            generators,
            elements,
            mul,
            inv,
        }
    }

    /// The subgroup on the given (sorted) element indices of `self`.
    pub fn subgroup_from_indices(&self, indices: &[u32]) -> Group {
        let n = indices.len();
        let mut local = alloc::vec![u32::MAX; self.order()];
        for (k, &i) in indices.iter().enumerate() {
            local[i as usize] = k as u32;
        }
        let mut mul = Vec::with_capacity(n * n);
        for &a in indices {
            for &b in indices {
                mul.push(local[self.mul_idx(a as usize, b as usize)]);
            }
        }
        debug_assert!(mul.iter().all(|&x| x != u32::MAX), "indices are not closed");
        let inv = indices.iter().map(|&a| local[self.inv_idx(a as usize)]).collect();
        let mut group = Group {
            degree: self.degree,
            generators: Vec::new(),
            elements: indices.iter().map(|&i| self.elements[i as usize].clone()).collect(),
            mul,
            inv,
        };
        group.generators = group
            .small_generating_set()
            .into_iter()
            .map(|i| group.elements[i].clone())
            .collect();
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv_idx(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Index of `g⁻¹ x g`.
    #[inline]
    pub fn conj_idx(&self, x: usize, g: usize) -> usize {
        self.mul_idx(self.mul_idx(self.inv_idx(g), x), g)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul_idx(a, b) == self.mul_idx(b, a)))
    }

    pub fn element_order_idx(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul_idx(x, i);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, i| num_integer::lcm(acc, self.element_order_idx(i)))
    }

    /// Closure of a set of element indices under multiplication.
    pub fn closure_idx(&self, gens: &[usize]) -> BitSet {
        let mut set = BitSet::new(self.order());
        set.insert(0);
        let mut list = alloc::vec![0usize];
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            k += 1;
            for &s in gens {
                let y = self.mul_idx(x, s);
                if set.insert(y) {
                    list.push(y);
                }
            }
        }
        set
    }

    /// A short generating set: greedily adjoin the element that enlarges the
    /// generated subgroup the most, lowest index on ties.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut current = self.closure_idx(&gens);
        while current.len() < n {
            let mut best: Option<(usize, BitSet)> = None;
            for x in 1..n {
                if current.contains(x) {
                    continue;
                }
                gens.push(x);
                let c = self.closure_idx(&gens);
                gens.pop();
                if best.as_ref().map_or(true, |(_, b)| c.len() > b.len()) {
                    let full = c.len() == n;
                    best = Some((x, c));
                    if full {
                        break;
                    }
                }
            }
            let (x, c) = best.expect("a proper subgroup misses some element");
            gens.push(x);
            current = c;
        }
        gens
    }

    /// Sorted indices in `self` of the elements of `sub`.
    pub fn indices_of(&self, sub: &Group) -> Result<Vec<u32>> {
        sub.elements
            .iter()
            .map(|p| self.index_of(p).map(|i| i as u32).ok_or(Error::NotASubgroup))
            .collect()
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// `self^g = g⁻¹ self g`
    pub fn conjugate(&self, g: &Perm) -> Group {
        let mut elements: Vec<Perm> = self.elements.iter().map(|x| x.conjugate_by(g)).collect();
        elements.sort();
        let generators = self.generators.iter().map(|x| x.conjugate_by(g)).collect();
        Group::from_sorted(self.degree, generators, elements)
    }

    pub fn intersection(&self, other: &Group) -> Group {
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|p| other.contains(p))
            .cloned()
            .collect();
        let indices: Vec<u32> = elements
            .iter()
            .map(|p| self.index_of(p).unwrap() as u32)
            .collect();
        self.subgroup_from_indices(&indices)
    }

    /// Conjugacy classes as (minimal element, class size), ordered by representative.
    pub fn conjugacy_classes(&self) -> Vec<(Perm, usize)> {
        self.conjugacy_class_indices()
            .into_iter()
            .map(|class| (self.elements[class[0]].clone(), class.len()))
            .collect()
    }

    /// Each class as a sorted list of element indices, classes ordered by minimum.
    pub fn conjugacy_class_indices(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let gens = self.small_generating_set();
        let mut class_of = alloc::vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[x] = id;
            let mut orbit = alloc::vec![x];
            let mut k = 0;
            while k < orbit.len() {
                let y = orbit[k];
                k += 1;
                for &g in &gens {
                    let z = self.conj_idx(y, g);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        orbit.push(z);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        classes
    }

    pub fn centralizer(&self, h: &Perm) -> Result<Group> {
        let hi = self.index_of(h).ok_or(Error::NotInGroup)?;
        let indices: Vec<u32> = (0..self.order())
            .filter(|&g| self.mul_idx(g, hi) == self.mul_idx(hi, g))
            .map(|g| g as u32)
            .collect();
        Ok(self.subgroup_from_indices(&indices))
    }

    /// `N_G(sub) = {g : sub^g = sub}`
    pub fn normalizer(&self, sub: &Group) -> Result<Group> {
        let members = self.member_set(sub)?;
        let gens = self.generator_indices(sub)?;
        let indices: Vec<u32> = (0..self.order())
            .filter(|&g| gens.iter().all(|&s| members.contains(self.conj_idx(s, g))))
            .map(|g| g as u32)
            .collect();
        Ok(self.subgroup_from_indices(&indices))
    }

    /// One representative per double coset `K g H`, each the minimal element
    /// of its double coset, in increasing order.
    pub fn double_coset_reps(&self, k: &Group, h: &Group) -> Result<Vec<Perm>> {
        Ok(self
            .double_coset_rep_indices(k, h)?
            .into_iter()
            .map(|(g, _)| self.elements[g].clone())
            .collect())
    }

    /// Pairs (representative index, double coset size).
    pub fn double_coset_rep_indices(&self, k: &Group, h: &Group) -> Result<Vec<(usize, usize)>> {
        let ks = self.indices_of(k)?;
        let hs = self.indices_of(h)?;
        let mut covered = BitSet::new(self.order());
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if covered.contains(g) {
                continue;
            }
            let mut size = 0;
            for &a in &ks {
                let ag = self.mul_idx(a as usize, g);
                for &b in &hs {
                    if covered.insert(self.mul_idx(ag, b as usize)) {
                        size += 1;
                    }
                }
            }
            reps.push((g, size));
        }
        Ok(reps)
    }

    /// `{g ∈ G : H ⊆ K^g}`
    pub fn transporter(&self, h: &Group, k: &Group) -> Result<Vec<Perm>> {
        Ok(self
            .transporter_indices(h, k)?
            .into_iter()
            .map(|g| self.elements[g].clone())
            .collect())
    }

    pub fn transporter_indices(&self, h: &Group, k: &Group) -> Result<Vec<usize>> {
        let kset = self.member_set(k)?;
        let hgens = self.generator_indices(h)?;
        // h ∈ K^g  ⇔  g h g⁻¹ ∈ K
        Ok((0..self.order())
            .filter(|&g| {
                let gi = self.inv_idx(g);
                hgens.iter().all(|&x| kset.contains(self.conj_idx(x, gi)))
            })
            .collect())
    }

    pub(crate) fn member_set(&self, sub: &Group) -> Result<BitSet> {
        let mut set = BitSet::new(self.order());
        for i in self.indices_of(sub)? {
            set.insert(i as usize);
        }
        Ok(set)
    }

    pub(crate) fn generator_indices(&self, sub: &Group) -> Result<Vec<usize>> {
        if sub.order() > 1 && sub.generators.is_empty() {
            return Err(Error::Invalid("subgroup without generators".into()));
        }
        sub.generators
            .iter()
            .map(|p| self.index_of(p).ok_or(Error::NotASubgroup))
            .collect()
    }
}
