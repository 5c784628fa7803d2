//! The extended Burnside ring: basis classes `⟨H^μ⟩` for a subgroup class
//! `H` and an `N_G(H)`-orbit of `μ ∈ M(H)`, the double-coset product, and the
//! mark homomorphisms
//!
//! ```text
//! f_H^φ(⟨K^μ⟩) = 1/|K| · Σ_{g ∈ G, H ⊆ K^g} φ(Res_H μ^g).
//! ```
//!
//! All cocycles are written over `Z/|G|`, which every subgroup's
//! presentation accepts, so restricted and added cocycles never need a
//! change of modulus.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cochain::Cochain2;
use crate::cyclo::CycloValue;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::multiplier::{MultiplierCharacter, MultiplierElement, SchurMultiplier, DEFAULT_MAX_COHOMOLOGY_ORDER};
use crate::regular::regular_class_count;
use crate::subgroups::SubgroupClassTable;

/// Multiplier of one subgroup class with its normaliser orbits.
#[derive(Clone, Debug)]
pub struct ClassMultiplier {
    pub multiplier: SchurMultiplier,
    pub element_orbits: Vec<Vec<MultiplierElement>>,
    pub character_orbits: Vec<Vec<MultiplierCharacter>>,
    orbit_of: BTreeMap<MultiplierElement, usize>,
}

impl ClassMultiplier {
    pub fn orbit_of(&self, e: &MultiplierElement) -> usize {
        self.orbit_of[e]
    }
}

/// Presentation of `M(H)` for class `i`, over `Z/|G|`.
pub fn class_multiplier(table: &SubgroupClassTable, i: usize) -> Result<ClassMultiplier> {
    let class = table.class(i);
    let modulus = table.ambient().order() as u32;
    let multiplier = SchurMultiplier::with_modulus(class.rep.clone(), modulus, DEFAULT_MAX_COHOMOLOGY_ORDER)?;
    let acting = class.normalizer.generators();
    let element_orbits = multiplier.element_orbits(acting)?;
    let character_orbits = multiplier.character_orbits(acting)?;
    let mut orbit_of = BTreeMap::new();
    for (k, orbit) in element_orbits.iter().enumerate() {
        for e in orbit {
            orbit_of.insert(e.clone(), k);
        }
    }
    Ok(ClassMultiplier {
        multiplier,
        element_orbits,
        character_orbits,
        orbit_of,
    })
}

#[derive(Clone, Debug)]
pub struct ExtBasisClass {
    pub subgroup: usize,
    /// Index of the normaliser orbit in [`ClassMultiplier::element_orbits`].
    pub orbit: usize,
    pub mu: MultiplierElement,
    pub label: String,
    pub cocycle: Cochain2,
    /// Number of `μ`-regular classes of `H`.
    pub m: usize,
}

#[derive(Clone, Debug)]
pub struct MarkHom {
    pub subgroup: usize,
    pub orbit: usize,
    pub character: MultiplierCharacter,
    pub label: String,
}

/// Integer combination of basis classes, without zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElement {
    coeffs: BTreeMap<usize, i64>,
}

impl ExtElement {
    pub fn zero() -> ExtElement {
        ExtElement::default()
    }

    pub fn basis(i: usize) -> ExtElement {
        ExtElement::term(i, 1)
    }

    pub fn term(i: usize, c: i64) -> ExtElement {
        let mut e = ExtElement::zero();
        e.add_term(i, c);
        e
    }

    pub fn add_term(&mut self, i: usize, c: i64) {
        let v = self.coeffs.entry(i).or_insert(0);
        *v += c;
        if *v == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn add(&self, other: &ExtElement) -> ExtElement {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> ExtElement {
        let mut out = ExtElement::zero();
        for (i, c) in self.terms() {
            out.add_term(i, c * k);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct ExtBurnsideRing {
    group: Arc<Group>,
    table: SubgroupClassTable,
    multipliers: Vec<ClassMultiplier>,
    basis: Vec<ExtBasisClass>,
    homs: Vec<MarkHom>,
    basis_index: BTreeMap<(usize, usize), usize>,
    conductor: u32,
}

fn primed(label: &str, orbit: usize, count: usize) -> String {
    match (orbit, count) {
        (0, _) => String::from(label),
        (_, 2) => format!("{label}'"),
        (k, _) => format!("{label}'{k}"),
    }
}

impl ExtBurnsideRing {
    pub fn new(group: Arc<Group>) -> Result<ExtBurnsideRing> {
        let table = SubgroupClassTable::new(group);
        let multipliers = (0..table.len())
            .map(|i| class_multiplier(&table, i))
            .collect::<Result<Vec<_>>>()?;
        ExtBurnsideRing::from_parts(table, multipliers)
    }

    /// Assembles the ring from class multipliers computed elsewhere,
    /// one per class of `table`, in order.
    pub fn from_parts(table: SubgroupClassTable, multipliers: Vec<ClassMultiplier>) -> Result<ExtBurnsideRing> {
        if multipliers.len() != table.len() {
            return Err(Error::Invalid("one multiplier per subgroup class expected".into()));
        }
        let group = table.ambient().clone();
        let mut basis = Vec::new();
        let mut homs = Vec::new();
        let mut conductor = 1u32;
        for (i, cm) in multipliers.iter().enumerate() {
            if **cm.multiplier.host() != *table.class(i).rep {
                return Err(Error::HostMismatch);
            }
            for &d in cm.multiplier.invariant_factors() {
                conductor = num_integer::lcm(conductor, d);
            }
            let label = &table.class(i).label;
            let count = cm.element_orbits.len();
            if cm.character_orbits.len() != count {
                return Err(Error::Invalid(format!("orbit counts differ for {label}")));
            }
            for (k, orbit) in cm.element_orbits.iter().enumerate() {
                let mu = orbit[0].clone();
                let cocycle = cm.multiplier.cocycle(&mu);
                let m = regular_class_count(&cocycle)?;
                basis.push(ExtBasisClass {
                    subgroup: i,
                    orbit: k,
                    mu,
                    label: primed(label, k, count),
                    cocycle,
                    m,
                });
            }
            for (k, orbit) in cm.character_orbits.iter().enumerate() {
                homs.push(MarkHom {
                    subgroup: i,
                    orbit: k,
                    character: orbit[0].clone(),
                    label: primed(label, k, count),
                });
            }
        }
        // untwisted classes first, so the classical table of marks is the leading block
        basis.sort_by_key(|b| (b.orbit != 0, b.subgroup, b.orbit));
        homs.sort_by_key(|h| (h.orbit != 0, h.subgroup, h.orbit));
        let basis_index = basis
            .iter()
            .enumerate()
            .map(|(k, b)| ((b.subgroup, b.orbit), k))
            .collect();
        Ok(ExtBurnsideRing {
            group,
            table,
            multipliers,
            basis,
            homs,
            basis_index,
            conductor,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn subgroup_table(&self) -> &SubgroupClassTable {
        &self.table
    }

    pub fn multipliers(&self) -> &[ClassMultiplier] {
        &self.multipliers
    }

    pub fn multiplier(&self, class: usize) -> &ClassMultiplier {
        &self.multipliers[class]
    }

    pub fn ext_basis(&self) -> &[ExtBasisClass] {
        &self.basis
    }

    pub fn mark_homomorphisms(&self) -> &[MarkHom] {
        &self.homs
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// lcm of all invariant factors; every mark lies in `Q(ζ_e)`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn basis_index(&self, subgroup: usize, orbit: usize) -> Option<usize> {
        self.basis_index.get(&(subgroup, orbit)).copied()
    }

    /// Basis class `⟨H^triv⟩` for subgroup class `i`.
    pub fn untwisted(&self, subgroup: usize) -> usize {
        self.basis_index[&(subgroup, 0)]
    }

    pub fn basis_by_label(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn hom_by_label(&self, label: &str) -> Option<usize> {
        self.homs.iter().position(|h| h.label == label)
    }

    /// `⟨H⟩·⟨K⟩ = Σ_{KgH} ⟨H ∩ K^g⟩` in the ordinary Burnside ring.
    pub fn ordinary_product(&self, h_class: usize, k_class: usize) -> Result<ExtElement> {
        let mut out = ExtElement::zero();
        for sub in self.summands(h_class, k_class)? {
            out.add_term(self.untwisted(sub.class), 1);
        }
        Ok(out)
    }

    /// `⟨H^μ⟩·⟨K^ν⟩ = Σ_{KgH} ⟨(H ∩ K^g)^{Res μ + Res ν^g}⟩`
    pub fn ext_product(&self, a: usize, b: usize) -> Result<ExtElement> {
        let (x, y) = (&self.basis[a], &self.basis[b]);
        let g = &*self.group;
        let hc = self.table.class(x.subgroup);
        let kc = self.table.class(y.subgroup);
        let modulus = g.order() as u64;
        let mut out = ExtElement::zero();
        for sub in self.summands(x.subgroup, y.subgroup)? {
            let lc = self.table.class(sub.class);
            let cm = &self.multipliers[sub.class];
            let orbit = if cm.multiplier.is_trivial() || (x.orbit == 0 && y.orbit == 0) {
                0
            } else {
                // rep element a ↦ t a t⁻¹ ∈ H and g t a t⁻¹ g⁻¹ ∈ K
                let t_inv = g.inv_idx(sub.conjugator);
                let into_h: Vec<usize> = lc
                    .members()
                    .iter()
                    .map(|&a| {
                        let u = g.conj_idx(a as usize, t_inv);
                        hc.local_index(u).expect("intersection lies in H")
                    })
                    .collect();
                let g_inv = g.inv_idx(sub.coset_rep);
                let into_k: Vec<usize> = lc
                    .members()
                    .iter()
                    .map(|&a| {
                        let u = g.conj_idx(g.conj_idx(a as usize, t_inv), g_inv);
                        kc.local_index(u).expect("intersection lies in K^g")
                    })
                    .collect();
                let e = cm.multiplier.classify_with(modulus as u32, |p, q| {
                    let s = x.cocycle.value(into_h[p], into_h[q]) as u64 + y.cocycle.value(into_k[p], into_k[q]) as u64;
                    (s % modulus) as u32
                })?;
                cm.orbit_of(&e)
            };
            out.add_term(self.basis_index[&(sub.class, orbit)], 1);
        }
        Ok(out)
    }

    pub fn product(&self, x: &ExtElement, y: &ExtElement) -> Result<ExtElement> {
        let mut out = ExtElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                out = out.add(&self.ext_product(i, j)?.scale(a * b));
            }
        }
        Ok(out)
    }

    /// One entry per double coset `K g H`: the class of `H ∩ K^g`.
    fn summands(&self, h_class: usize, k_class: usize) -> Result<Vec<Summand>> {
        let g = &*self.group;
        let hc = self.table.class(h_class);
        let kc = self.table.class(k_class);
        let mut out = Vec::new();
        for (rep, _) in g.double_coset_rep_indices(&kc.rep, &hc.rep)? {
            let rep_inv = g.inv_idx(rep);
            // x ∈ K^g  ⇔  g x g⁻¹ ∈ K
            let members: Vec<u32> = hc
                .members()
                .iter()
                .copied()
                .filter(|&x| kc.local_index(g.conj_idx(x as usize, rep_inv)).is_some())
                .collect();
            let (class, conjugator) = self.table.identify_indices(&members)?;
            out.push(Summand {
                coset_rep: rep,
                class,
                conjugator,
            });
        }
        Ok(out)
    }

    /// `f_H^φ(⟨K^μ⟩)`
    pub fn mark_value(&self, hom: usize, x: usize) -> Result<CycloValue> {
        let f = &self.homs[hom];
        let b = &self.basis[x];
        let g = &*self.group;
        let hc = self.table.class(f.subgroup);
        let kc = self.table.class(b.subgroup);
        let e = self.conductor;
        let transporter = g.transporter_indices(&hc.rep, &kc.rep)?;
        let k_order = kc.order() as i64;
        let cm = &self.multipliers[f.subgroup];
        if f.character.is_trivial() || b.orbit == 0 {
            let count = transporter.len() as i64;
            if count % k_order != 0 {
                return Err(Error::Invalid(format!(
                    "mark {}/{} is not an integer for {} on {}",
                    count, k_order, f.label, b.label
                )));
            }
            return Ok(CycloValue::from_integer(e, count / k_order));
        }
        let big = cm.multiplier.exponent();
        let step = (e / big) as usize;
        let mut counts = alloc::vec![0i64; e as usize];
        let modulus = g.order() as u32;
        for &t in &transporter {
            // Res_H μ^t: (a, b) ↦ μ(t a t⁻¹, t b t⁻¹)
            let t_inv = g.inv_idx(t);
            let into_k: Vec<usize> = hc
                .members()
                .iter()
                .map(|&a| kc.local_index(g.conj_idx(a as usize, t_inv)).expect("H ⊆ K^t"))
                .collect();
            let class = cm
                .multiplier
                .classify_with(modulus, |p, q| b.cocycle.value(into_k[p], into_k[q]))?;
            let k = cm.multiplier.pair(&class, &f.character) as usize;
            counts[k * step] += 1;
        }
        Ok(CycloValue::from_exponent_counts(e, &counts, k_order))
    }

    pub fn mark_of(&self, hom: usize, x: &ExtElement) -> Result<CycloValue> {
        let mut acc = CycloValue::zero(self.conductor);
        for (i, c) in x.terms() {
            acc = acc.add(&self.mark_value(hom, i)?.scale(&num_rational::BigRational::from_integer(c.into())));
        }
        Ok(acc)
    }

    /// Rows are basis classes, columns mark homomorphisms.
    pub fn extended_table(&self) -> Result<Vec<Vec<CycloValue>>> {
        (0..self.rank())
            .map(|x| (0..self.rank()).map(|f| self.mark_value(f, x)).collect())
            .collect()
    }

    /// Classical table of marks, rows `K` and columns `H` in subgroup class
    /// order: `|{g : H ⊆ K^g}| / |K|`.
    pub fn table_of_marks(&self) -> Result<Vec<Vec<i64>>> {
        table_of_marks(&self.table)
    }

    /// Linear extension of the regular class count.
    pub fn m_of(&self, x: &ExtElement) -> i64 {
        x.terms().map(|(i, c)| c * self.basis[i].m as i64).sum()
    }

    /// Terms with largest basis index first, e.g. `2*[S3] + [C2a]`; `0` when empty.
    pub fn format_element(&self, x: &ExtElement) -> String {
        if x.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, c) in x.terms().rev() {
            let sign = match (out.is_empty(), c < 0) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            let label = &self.basis[i].label;
            match c.unsigned_abs() {
                1 => out.push_str(&format!("{sign}[{label}]")),
                k => out.push_str(&format!("{sign}{k}*[{label}]")),
            }
        }
        out
    }
}

struct Summand {
    coset_rep: usize,
    class: usize,
    conjugator: usize,
}

pub fn table_of_marks(table: &SubgroupClassTable) -> Result<Vec<Vec<i64>>> {
    let g = table.ambient();
    table
        .classes()
        .iter()
        .map(|k| {
            table
                .classes()
                .iter()
                .map(|h| {
                    let s = g.transporter_indices(&h.rep, &k.rep)?.len();
                    if s % k.order() != 0 {
                        return Err(Error::Invalid("non-integral mark".into()));
                    }
                    Ok((s / k.order()) as i64)
                })
                .collect()
        })
        .collect()
}
