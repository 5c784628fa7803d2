//! Schur multipliers `M(H) = H²(H, C^×)` of permutation groups.
//!
//! For each prime `p | n` the `p`-part is computed over `R = Z/p^a`,
//! `p^a ∥ n`, as `Z²(H, R) / (B²(H, R) + δ Hom(H, R))`, where `δ` is the
//! connecting map of `0 → Z/p^a → Q/Z → Q/Z → 0`. The parts are then
//! recombined into invariant factors `d_1 | d_2 | …`.
//!
//! A normalised cocycle is determined by its values `c(s, w)` for `s` in a
//! generating set `S`: along a spanning tree of the Cayley graph with edges
//! `y → s·y`, the identity at `(s, y, z)` gives
//! `c(sy, z) = c(y, z) + c(s, yz) - c(s, y)`. Those values are the unknowns;
//! the remaining identities at `(s, y, z)` for non-tree edges `(s, y)`
//! are the constraints and already imply the rest.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cochain::Cochain2;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::modular::{factorize, p_valuation, Echelon, PrimePowerRing, Smith};
use crate::perm::Perm;

/// Largest host order accepted by [`SchurMultiplier::new`].
pub const DEFAULT_MAX_COHOMOLOGY_ORDER: usize = 120;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplierElement {
    coords: Vec<u32>,
}

impl MultiplierElement {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// A character of `M(H)`, sending generator `i` to `ζ_{d_i}^{exponents[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplierCharacter {
    exponents: Vec<u32>,
}

impl MultiplierCharacter {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&c| c == 0)
    }
}

/// The spanning tree and unknown layout shared by all primes.
#[derive(Clone, Debug)]
struct Layout {
    gens: Vec<usize>,
    /// BFS order of the elements, starting at the identity.
    order: Vec<usize>,
    /// `parent[x] = (j, y)` with `x = s_j · y`; unused for the identity.
    parent: Vec<(usize, usize)>,
}

impl Layout {
    fn new(h: &Group) -> Layout {
        let n = h.order();
        let gens = h.small_generating_set();
        let mut parent = alloc::vec![(usize::MAX, usize::MAX); n];
        let mut seen = alloc::vec![false; n];
        seen[0] = true;
        let mut order = alloc::vec![0];
        let mut k = 0;
        while k < order.len() {
            let y = order[k];
            k += 1;
            for (j, &s) in gens.iter().enumerate() {
                let x = h.mul_idx(s, y);
                if !seen[x] {
                    seen[x] = true;
                    parent[x] = (j, y);
                    order.push(x);
                }
            }
        }
        Layout { gens, order, parent }
    }

    fn width(&self, n: usize) -> usize {
        self.gens.len() * (n - 1)
    }

    #[inline]
    fn param(&self, n: usize, j: usize, w: usize) -> Option<usize> {
        (w != 0).then(|| j * (n - 1) + w - 1)
    }

    fn is_tree_edge(&self, h: &Group, j: usize, y: usize) -> bool {
        let x = h.mul_idx(self.gens[j], y);
        x != 0 && self.parent[x] == (j, y)
    }

    /// Full value table from the unknowns `c(s_j, w)`.
    fn expand(&self, h: &Group, ring: PrimePowerRing, params: &[u64]) -> Vec<u64> {
        let n = h.order();
        let mut values = alloc::vec![0u64; n * n];
        for &x in &self.order[1..] {
            let (j, y) = self.parent[x];
            let at = |w: usize| self.param(n, j, w).map_or(0, |i| params[i]);
            let cy = at(y);
            for z in 0..n {
                let v = ring.add(values[y * n + z], at(h.mul_idx(y, z)));
                values[x * n + z] = ring.sub(v, cy);
            }
        }
        values
    }
}

/// One prime's share of the presentation.
#[derive(Clone, Debug)]
struct PrimePart {
    ring: PrimePowerRing,
    /// Rows of `Y⁻¹` for the cycle-space columns, with their exponents `κ_i`.
    cycle_coords: Vec<(Vec<u64>, u32)>,
    /// Change of basis on the `κ`-coordinates diagonalising the relations.
    quotient: Vec<Vec<u64>>,
    /// `(column of quotient, f)` for the cyclic factors `Z/p^f`, `f > 0`, ascending.
    factors: Vec<(usize, u32)>,
    /// Generators as full value tables over `Z/p^a`, aligned with `factors`.
    generators: Vec<Vec<u64>>,
}

impl PrimePart {
    fn compute(h: &Group, layout: &Layout, p: u64, a: u32) -> PrimePart {
        let ring = PrimePowerRing::new(p, a);
        let n = h.order();
        let width = layout.width(n);

        // expressions of every c(x, z) in the unknowns
        let mut expr: Vec<Vec<u64>> = alloc::vec![Vec::new(); n * n];
        for z in 0..n {
            expr[z] = alloc::vec![0; width];
        }
        for &x in &layout.order[1..] {
            let (j, y) = layout.parent[x];
            for z in 0..n {
                let mut e = expr[y * n + z].clone();
                if let Some(i) = layout.param(n, j, h.mul_idx(y, z)) {
                    e[i] = ring.add(e[i], 1);
                }
                if let Some(i) = layout.param(n, j, y) {
                    e[i] = ring.sub(e[i], 1);
                }
                expr[x * n + z] = e;
            }
        }

        let mut echelon = Echelon::new(ring, width);
        for (j, &s) in layout.gens.iter().enumerate() {
            for y in 0..n {
                if y == 0 || layout.is_tree_edge(h, j, y) {
                    continue;
                }
                let sy = h.mul_idx(s, y);
                for z in 1..n {
                    // c(s,y) + c(sy,z) - c(y,z) - c(s,yz)
                    let mut row = expr[sy * n + z].clone();
                    for (r, &e) in row.iter_mut().zip(&expr[y * n + z]) {
                        *r = ring.sub(*r, e);
                    }
                    if let Some(i) = layout.param(n, j, y) {
                        row[i] = ring.add(row[i], 1);
                    }
                    if let Some(i) = layout.param(n, j, h.mul_idx(y, z)) {
                        row[i] = ring.sub(row[i], 1);
                    }
                    echelon.insert(row);
                }
            }
        }
        drop(expr);

        let smith = Smith::new(ring, echelon.into_rows(), width);
        let mut cycle_cols = Vec::new();
        let mut cycle_coords = Vec::new();
        for (i, &kappa) in smith.valuations().iter().enumerate() {
            if kappa == 0 {
                continue;
            }
            let scale = ring.pow_p(a - kappa);
            cycle_cols.push(smith.y().iter().map(|row| ring.mul(row[i], scale)).collect::<Vec<u64>>());
            cycle_coords.push((smith.y_inv()[i].clone(), kappa));
        }
        let k = cycle_coords.len();

        let mut part = PrimePart {
            ring,
            cycle_coords,
            quotient: Vec::new(),
            factors: Vec::new(),
            generators: Vec::new(),
        };

        // relations: coboundaries, Bockstein images, and the orders κ_i
        let mut relations: Vec<Vec<u64>> = Vec::new();
        for x in 1..n {
            let mut v = alloc::vec![0u64; width];
            for (j, &s) in layout.gens.iter().enumerate() {
                for w in 1..n {
                    let mut d = 0i64;
                    if s == x {
                        d += 1;
                    }
                    if w == x {
                        d += 1;
                    }
                    if h.mul_idx(s, w) == x {
                        d -= 1;
                    }
                    if d != 0 {
                        v[layout.param(n, j, w).expect("w ≠ 1")] = ring.reduce(d);
                    }
                }
            }
            relations.push(part.cycle_coordinates(&v));
        }
        for chi in homomorphisms(h, layout, ring) {
            let q = ring.modulus();
            let mut v = alloc::vec![0u64; width];
            for (j, &s) in layout.gens.iter().enumerate() {
                for w in 1..n {
                    let carry = (chi[s] + chi[w] - chi[h.mul_idx(s, w)]) / q;
                    v[layout.param(n, j, w).expect("w ≠ 1")] = carry;
                }
            }
            relations.push(part.cycle_coordinates(&v));
        }
        for (i, &(_, kappa)) in part.cycle_coords.iter().enumerate() {
            let mut r = alloc::vec![0u64; k];
            r[i] = ring.pow_p(kappa);
            relations.push(r);
        }

        let rel = Smith::new(ring, relations, k);
        let mut factors: Vec<(usize, u32)> = rel
            .valuations()
            .iter()
            .enumerate()
            .filter(|(_, &f)| f > 0)
            .map(|(j, &f)| (j, f))
            .collect();
        factors.sort_by_key(|&(j, f)| (f, j));

        for &(j, _) in &factors {
            let coeffs = &rel.y_inv()[j];
            let mut params = alloc::vec![0u64; width];
            for (c, col) in coeffs.iter().zip(&cycle_cols) {
                if *c != 0 {
                    for (p, &z) in params.iter_mut().zip(col) {
                        *p = ring.add(*p, ring.mul(*c, z));
                    }
                }
            }
            part.generators.push(layout.expand(h, ring, &params));
        }
        part.quotient = rel.y().to_vec();
        part.factors = factors;
        part
    }

    /// Coordinates in `⊕ Z/p^{κ_i}` of a cycle given by its unknowns.
    fn cycle_coordinates(&self, params: &[u64]) -> Vec<u64> {
        let ring = self.ring;
        self.cycle_coords
            .iter()
            .map(|(row, kappa)| {
                let w = ring.dot(row, params);
                ring.div_pow(w, ring.exponent() - kappa)
            })
            .collect()
    }

    fn classify(&self, params: &[u64]) -> Vec<u32> {
        let ring = self.ring;
        let a = self.cycle_coordinates(params);
        self.factors
            .iter()
            .map(|&(j, f)| {
                let mut b = 0;
                for (ai, row) in a.iter().zip(&self.quotient) {
                    b = ring.add(b, ring.mul(*ai, row[j]));
                }
                (b % ring.prime().pow(f)) as u32
            })
            .collect()
    }
}

/// Generators of `Hom(H, Z/q)` as value lists over all elements.
fn homomorphisms(h: &Group, layout: &Layout, ring: PrimePowerRing) -> Vec<Vec<u64>> {
    let n = h.order();
    let r = layout.gens.len();
    let mut expr: Vec<Vec<u64>> = alloc::vec![alloc::vec![0; r]; n];
    for &x in &layout.order[1..] {
        let (j, y) = layout.parent[x];
        let mut e = expr[y].clone();
        e[j] = ring.add(e[j], 1);
        expr[x] = e;
    }
    let mut rows = Vec::new();
    for (j, &s) in layout.gens.iter().enumerate() {
        for y in 0..n {
            if layout.is_tree_edge(h, j, y) {
                continue;
            }
            let mut row = expr[h.mul_idx(s, y)].clone();
            for (a, &b) in row.iter_mut().zip(&expr[y]) {
                *a = ring.sub(*a, b);
            }
            row[j] = ring.sub(row[j], 1);
            rows.push(row);
        }
    }
    Smith::new(ring, rows, r)
        .kernel_generators()
        .into_iter()
        .map(|(v, _)| expr.iter().map(|e| ring.dot(e, &v)).collect())
        .collect()
}

/// Presentation of `M(H)` by invariant factors and generating cocycles,
/// together with what is needed to put any cocycle into normal form.
#[derive(Clone, Debug)]
pub struct SchurMultiplier {
    host: Arc<Group>,
    modulus: u32,
    layout: Layout,
    parts: Vec<PrimePart>,
    invariants: Vec<u32>,
    generators: Vec<Cochain2>,
}

impl SchurMultiplier {
    /// Presentation with cocycles over `Z/|H|`.
    pub fn new(host: Arc<Group>) -> Result<SchurMultiplier> {
        let n = host.order() as u32;
        SchurMultiplier::with_modulus(host, n, DEFAULT_MAX_COHOMOLOGY_ORDER)
    }

    /// Presentation with cocycles over `Z/modulus`; `|H|` must divide `modulus`.
    pub fn with_modulus(host: Arc<Group>, modulus: u32, max_order: usize) -> Result<SchurMultiplier> {
        let n = host.order();
        if n > max_order {
            return Err(Error::Capacity {
                what: "cohomology host order",
                limit: max_order,
            });
        }
        if modulus == 0 || modulus as usize % n != 0 {
            return Err(Error::ModulusIncompatible {
                modulus,
                presentation: n as u32,
            });
        }
        let layout = Layout::new(&host);
        let parts: Vec<PrimePart> = factorize(n as u64)
            .into_iter()
            .map(|(p, _)| PrimePart::compute(&host, &layout, p, p_valuation(modulus as u64, p)))
            .collect();

        let len = parts.iter().map(|p| p.factors.len()).max().unwrap_or(0);
        let mut invariants = alloc::vec![1u32; len];
        let mut values = alloc::vec![alloc::vec![0u64; n * n]; len];
        for part in &parts {
            let q = part.ring.modulus();
            let embed = modulus as u64 / q;
            let offset = len - part.factors.len();
            for (k, (&(_, f), gen)) in part.factors.iter().zip(&part.generators).enumerate() {
                invariants[offset + k] *= part.ring.prime().pow(f) as u32;
                for (v, &g) in values[offset + k].iter_mut().zip(gen) {
                    *v = (*v + g * embed) % modulus as u64;
                }
            }
        }
        let generators = values
            .into_iter()
            .map(|v| {
                Cochain2::from_values(host.clone(), modulus, v.into_iter().map(|x| x as u32).collect())
                    .expect("generators are normalised")
            })
            .collect();
        Ok(SchurMultiplier {
            host,
            modulus,
            layout,
            parts,
            invariants,
            generators,
        })
    }

    pub fn host(&self) -> &Arc<Group> {
        &self.host
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn invariant_factors(&self) -> &[u32] {
        &self.invariants
    }

    pub fn order(&self) -> usize {
        self.invariants.iter().map(|&d| d as usize).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Exponent of `M(H)`: the last invariant factor, or 1.
    pub fn exponent(&self) -> u32 {
        self.invariants.last().copied().unwrap_or(1)
    }

    pub fn generators(&self) -> &[Cochain2] {
        &self.generators
    }

    pub fn identity(&self) -> MultiplierElement {
        MultiplierElement {
            coords: alloc::vec![0; self.invariants.len()],
        }
    }

    pub fn element(&self, coords: &[u32]) -> Result<MultiplierElement> {
        if coords.len() != self.invariants.len() {
            return Err(Error::Invalid("wrong number of multiplier coordinates".into()));
        }
        Ok(MultiplierElement {
            coords: coords.iter().zip(&self.invariants).map(|(&c, &d)| c % d).collect(),
        })
    }

    /// All elements, in lexicographic order of coordinates.
    pub fn elements(&self) -> Vec<MultiplierElement> {
        let mut out = alloc::vec![self.identity()];
        for (i, &d) in self.invariants.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for c in 0..d {
                    let mut e = e.clone();
                    e.coords[i] = c;
                    next.push(e);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn add(&self, a: &MultiplierElement, b: &MultiplierElement) -> MultiplierElement {
        MultiplierElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.invariants)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect(),
        }
    }

    /// Representative cocycle `Σ coords_i · generator_i` over `Z/modulus`.
    pub fn cocycle(&self, e: &MultiplierElement) -> Cochain2 {
        let m = self.modulus as u64;
        let n = self.host.order();
        let mut values = alloc::vec![0u64; n * n];
        for (&c, g) in e.coords.iter().zip(&self.generators) {
            if c != 0 {
                for (v, &x) in values.iter_mut().zip(g.values()) {
                    *v = (*v + c as u64 * x as u64) % m;
                }
            }
        }
        Cochain2::from_values(self.host.clone(), self.modulus, values.into_iter().map(|x| x as u32).collect())
            .expect("normalised")
    }

    /// Class of a cocycle on the host (or an equal group). Values over `Z/m`
    /// are read as `ζ_m`-exponents; `m` may have primes not dividing `|H|`
    /// but no larger prime powers than the presentation modulus.
    pub fn classify(&self, c: &Cochain2) -> Result<MultiplierElement> {
        if **c.host() != *self.host {
            return Err(Error::HostMismatch);
        }
        let m = c.modulus();
        let n = self.host.order();
        let h = &*self.host;
        let mm = m as u64;
        for &s in &self.layout.gens {
            for y in 0..n {
                let sy = h.mul_idx(s, y);
                let csy = c.value(s, y) as u64;
                for z in 0..n {
                    let lhs = csy + c.value(sy, z) as u64;
                    let rhs = c.value(y, z) as u64 + c.value(s, h.mul_idx(y, z)) as u64;
                    if lhs % mm != rhs % mm {
                        return Err(Error::NotACocycle);
                    }
                }
            }
        }
        self.classify_with(m, |x, y| c.value(x, y))
    }

    /// As [`classify`](Self::classify) for a cocycle given by a value function
    /// over host indices, assumed to satisfy the cocycle identity.
    pub fn classify_with(&self, m: u32, value: impl Fn(usize, usize) -> u32) -> Result<MultiplierElement> {
        let n = self.host.order();
        let mut per_prime = Vec::with_capacity(self.parts.len());
        for part in &self.parts {
            let p = part.ring.prime();
            let a = part.ring.exponent();
            let b = p_valuation(m as u64, p);
            if b > a {
                return Err(Error::ModulusIncompatible {
                    modulus: m,
                    presentation: self.modulus,
                });
            }
            if part.factors.is_empty() {
                per_prime.push(Vec::new());
                continue;
            }
            let width = self.layout.width(n);
            let mut params = alloc::vec![0u64; width];
            if b > 0 {
                let pb = p.pow(b);
                let small = PrimePowerRing::new(p, b);
                let factor = small.unit_inverse((m as u64 / pb) % pb);
                let lift = p.pow(a - b);
                for j in 0..self.layout.gens.len() {
                    let s = self.layout.gens[j];
                    for w in 1..n {
                        let x = value(s, w) as u64 % pb;
                        params[self.layout.param(n, j, w).expect("w ≠ 1")] = small.mul(x, factor) * lift;
                    }
                }
            }
            per_prime.push(part.classify(&params));
        }
        let len = self.invariants.len();
        let mut coords = alloc::vec![0u32; len];
        for (k, d) in self.invariants.iter().enumerate() {
            // Chinese remaindering of the per-prime coordinates
            let mut acc = 0u64;
            let d = *d as u64;
            for (part, b) in self.parts.iter().zip(&per_prime) {
                let offset = len - part.factors.len();
                if k < offset {
                    continue;
                }
                let (_, f) = part.factors[k - offset];
                let pf = part.ring.prime().pow(f);
                let rest = d / pf;
                let inv = PrimePowerRing::new(part.ring.prime(), f).unit_inverse(rest % pf);
                acc = (acc + b[k - offset] as u64 % pf * inv % pf * rest) % d;
            }
            coords[k] = acc as u32;
        }
        Ok(MultiplierElement { coords })
    }

    /// Images of the generators under `g ∈ N(H)`: `c ↦ c^g`, as coordinate rows.
    pub fn action_matrix(&self, g: &Perm) -> Result<Vec<Vec<u32>>> {
        let h = &*self.host;
        // c^g(a, b) = c(g a g⁻¹, g b g⁻¹)
        let gi = g.inverse();
        let map: Vec<usize> = h
            .elements()
            .iter()
            .map(|a| h.index_of(&a.conjugate_by(&gi)).ok_or(Error::NotInGroup))
            .collect::<Result<_>>()?;
        self.generators
            .iter()
            .map(|gen| {
                self.classify_with(self.modulus, |x, y| gen.value(map[x], map[y]))
                    .map(|e| e.coords)
            })
            .collect()
    }

    fn apply(&self, matrix: &[Vec<u32>], e: &MultiplierElement) -> MultiplierElement {
        let mut coords = alloc::vec![0u64; self.invariants.len()];
        for (&c, row) in e.coords.iter().zip(matrix) {
            for (k, &t) in row.iter().enumerate() {
                coords[k] += c as u64 * t as u64;
            }
        }
        MultiplierElement {
            coords: coords
                .into_iter()
                .zip(&self.invariants)
                .map(|(c, &d)| (c % d as u64) as u32)
                .collect(),
        }
    }

    /// Orbits of `M(H)` under the group generated by `acting` (elements
    /// normalising `H`). Each orbit is sorted; orbits are ordered by their
    /// least element, so the identity orbit comes first.
    pub fn element_orbits(&self, acting: &[Perm]) -> Result<Vec<Vec<MultiplierElement>>> {
        let matrices: Vec<Vec<Vec<u32>>> = acting
            .iter()
            .map(|g| self.action_matrix(g))
            .collect::<Result<_>>()?;
        Ok(orbits(self.elements(), |e| {
            matrices.iter().map(|t| self.apply(t, e)).collect()
        }))
    }

    /// Value of `χ` on `e` as an exponent of `ζ_D`, `D` the exponent of `M(H)`.
    pub fn pair(&self, e: &MultiplierElement, chi: &MultiplierCharacter) -> u32 {
        let big = self.exponent() as u64;
        let mut acc = 0u64;
        for ((&c, &x), &d) in e.coords.iter().zip(&chi.exponents).zip(&self.invariants) {
            acc = (acc + c as u64 * x as u64 % d as u64 * (big / d as u64)) % big;
        }
        acc as u32
    }

    pub fn characters(&self) -> Vec<MultiplierCharacter> {
        self.elements()
            .into_iter()
            .map(|e| MultiplierCharacter { exponents: e.coords })
            .collect()
    }

    pub fn trivial_character(&self) -> MultiplierCharacter {
        MultiplierCharacter {
            exponents: alloc::vec![0; self.invariants.len()],
        }
    }

    /// Orbit representatives (least exponent vectors) of characters under
    /// `φ ↦ φ^g`, `φ^g(μ) = φ(μ^g)`, in ascending order.
    pub fn character_orbits(&self, acting: &[Perm]) -> Result<Vec<Vec<MultiplierCharacter>>> {
        let matrices: Vec<Vec<Vec<u32>>> = acting
            .iter()
            .map(|g| self.action_matrix(g))
            .collect::<Result<_>>()?;
        let big = self.exponent() as u64;
        let inv = &self.invariants;
        let act = |t: &Vec<Vec<u32>>, chi: &MultiplierCharacter| {
            let exponents = t
                .iter()
                .zip(inv)
                .map(|(row, &dj)| {
                    let mut acc = 0u64;
                    for ((&tji, &x), &di) in row.iter().zip(&chi.exponents).zip(inv) {
                        acc = (acc + tji as u64 * x as u64 % big * (big / di as u64)) % big;
                    }
                    let step = big / dj as u64;
                    debug_assert_eq!(acc % step, 0);
                    (acc / step) as u32
                })
                .collect();
            MultiplierCharacter { exponents }
        };
        Ok(orbits(self.characters(), |chi| {
            matrices.iter().map(|t| act(t, chi)).collect()
        }))
    }
}

fn orbits<T: Ord + Clone>(all: Vec<T>, images: impl Fn(&T) -> Vec<T>) -> Vec<Vec<T>> {
    let mut seen: BTreeSet<T> = BTreeSet::new();
    let mut out = Vec::new();
    for start in all {
        if seen.contains(&start) {
            continue;
        }
        seen.insert(start.clone());
        let mut orbit = alloc::vec![start];
        let mut k = 0;
        while k < orbit.len() {
            for y in images(&orbit[k]) {
                if seen.insert(y.clone()) {
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort();
        out.push(orbit);
    }
    out.sort();
    out
}

pub fn schur_multiplier(host: Arc<Group>) -> Result<SchurMultiplier> {
    SchurMultiplier::new(host)
}

pub fn reduce_to_class(presentation: &SchurMultiplier, c: &Cochain2) -> Result<MultiplierElement> {
    presentation.classify(c)
}

pub fn validate_cocycle(c: &Cochain2) -> bool {
    c.is_cocycle()
}

pub fn restrict_cocycle(c: &Cochain2, sub: &Arc<Group>) -> Result<Cochain2> {
    c.restrict(sub)
}

pub fn conjugate_cocycle(c: &Cochain2, g: &Perm) -> Cochain2 {
    c.conjugate(g)
}

/// Orbit representatives of the characters of `M(H)` under `N`.
pub fn multiplier_characters(presentation: &SchurMultiplier, normalizer: &Group) -> Result<Vec<MultiplierCharacter>> {
    Ok(presentation
        .character_orbits(normalizer.generators())?
        .into_iter()
        .map(|o| o[0].clone())
        .collect())
}

/// Invariant factors of `M(H)` for every class representative, by label.
pub fn multiplier_summary(table: &crate::subgroups::SubgroupClassTable) -> Result<BTreeMap<alloc::string::String, Vec<u32>>> {
    table
        .classes()
        .iter()
        .map(|c| Ok((c.label.clone(), SchurMultiplier::new(c.rep.clone())?.invariants)))
        .collect()
}
