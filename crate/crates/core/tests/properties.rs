mod common;

use std::sync::{Arc, OnceLock};

use common::*;
use ebr_core::multiplier::{reduce_to_class, SchurMultiplier};
use ebr_core::regular::regular_class_count;
use ebr_core::{Cochain2, ExtBurnsideRing, ExtElement, Group, MultiplierElement, SubgroupClassTable};
use proptest::prelude::*;

struct Host {
    group: Arc<Group>,
    multiplier: SchurMultiplier,
    homs: Vec<Vec<u32>>,
    subgroups: Vec<Arc<Group>>,
}

/// All homomorphisms `H → Z/n`, by extending generator images.
fn homomorphisms(h: &Group, n: u32) -> Vec<Vec<u32>> {
    let gens = h.small_generating_set();
    let combos = (n as usize).pow(gens.len() as u32);
    let mut out = Vec::new();
    for code in 0..combos {
        let mut imgs = Vec::new();
        let mut c = code;
        for _ in &gens {
            imgs.push((c % n as usize) as u32);
            c /= n as usize;
        }
        let mut chi = vec![u32::MAX; h.order()];
        chi[0] = 0;
        let mut queue = vec![0usize];
        let mut ok = true;
        while let Some(x) = queue.pop() {
            for (s, &v) in gens.iter().zip(&imgs) {
                let y = h.mul_idx(x, *s);
                let val = (chi[x] + v) % n;
                if chi[y] == u32::MAX {
                    chi[y] = val;
                    queue.push(y);
                } else if chi[y] != val {
                    ok = false;
                }
            }
        }
        if ok && (0..h.order()).all(|a| (0..h.order()).all(|b| chi[h.mul_idx(a, b)] == (chi[a] + chi[b]) % n)) {
            out.push(chi);
        }
    }
    out
}

fn hosts() -> &'static [Host] {
    static HOSTS: OnceLock<Vec<Host>> = OnceLock::new();
    HOSTS.get_or_init(|| {
        let mut specs: Vec<Arc<Group>> = ["C4", "D8", "A4", "S4", "perm:6:(1 2),(3 4),(5 6)", "perm:6:(1 2 3),(4 5 6)"]
            .iter()
            .map(|s| group(s))
            .collect();
        let t = table("S5");
        specs.push(t.class(t.index_by_label("S3xS2").unwrap()).rep.clone());
        specs.push(t.class(t.index_by_label("H20").unwrap()).rep.clone());
        specs
            .into_iter()
            .map(|g| {
                let multiplier = SchurMultiplier::new(g.clone()).unwrap();
                let homs = homomorphisms(&g, multiplier.modulus());
                let subgroups = SubgroupClassTable::new(g.clone()).classes().iter().map(|c| c.rep.clone()).collect();
                Host { group: g, multiplier, homs, subgroups }
            })
            .collect()
    })
}

fn random_cochain(h: &Host, seed: &[u32]) -> Vec<u32> {
    let m = h.multiplier.modulus();
    (0..h.group.order()).map(|i| if i == 0 { 0 } else { seed[i % seed.len()].wrapping_mul(i as u32 + 1) % m }).collect()
}

fn class_cocycle(h: &Host, pick: usize) -> (MultiplierElement, Cochain2) {
    let elements = h.multiplier.elements();
    let e = elements[pick % elements.len()].clone();
    let c = h.multiplier.cocycle(&e);
    (e, c)
}

fn seeds() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 1..32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classes_ignore_coboundaries(host in 0..8usize, pick in any::<usize>(), seed in seeds()) {
        let h = &hosts()[host];
        let (e, c) = class_cocycle(h, pick);
        let f = random_cochain(h, &seed);
        let moved = c.add(&Cochain2::coboundary(h.group.clone(), c.modulus(), &f).unwrap()).unwrap();
        prop_assert!(moved.is_cocycle());
        prop_assert_eq!(reduce_to_class(&h.multiplier, &moved).unwrap(), e);
    }

    #[test]
    fn bockstein_images_vanish(host in 0..8usize, pick in any::<usize>()) {
        let h = &hosts()[host];
        let chi = &h.homs[pick % h.homs.len()];
        let b = Cochain2::bockstein(h.group.clone(), h.multiplier.modulus(), chi).unwrap();
        prop_assert!(b.is_cocycle());
        prop_assert!(h.multiplier.classify(&b).unwrap().is_identity());
    }

    #[test]
    fn regular_count_is_a_class_invariant(host in 0..8usize, pick in any::<usize>(), seed in seeds(), g in any::<usize>()) {
        let h = &hosts()[host];
        let (_, c) = class_cocycle(h, pick);
        let expected = regular_class_count(&c).unwrap();
        let f = random_cochain(h, &seed);
        let moved = c.add(&Cochain2::coboundary(h.group.clone(), c.modulus(), &f).unwrap()).unwrap();
        prop_assert_eq!(regular_class_count(&moved).unwrap(), expected);
        let t = h.group.element(g % h.group.order()).clone();
        prop_assert_eq!(regular_class_count(&moved.conjugate(&t)).unwrap(), expected);
    }

    #[test]
    fn restriction_and_conjugation_give_cocycles(host in 0..8usize, pick in any::<usize>(), seed in seeds(), sub in any::<usize>(), g in any::<usize>()) {
        let h = &hosts()[host];
        let (_, c) = class_cocycle(h, pick);
        let f = random_cochain(h, &seed);
        let c = c.add(&Cochain2::coboundary(h.group.clone(), c.modulus(), &f).unwrap()).unwrap();
        let k = &h.subgroups[sub % h.subgroups.len()];
        let r = c.restrict(k).unwrap();
        prop_assert!(r.is_cocycle());
        let t = h.group.element(g % h.group.order()).clone();
        let d = r.conjugate(&t);
        prop_assert!(d.is_cocycle());
        prop_assert_eq!(d.host().order(), k.order());
    }

    #[test]
    fn transported_classes_are_consistent(host in 0..8usize, pick in any::<usize>(), g in any::<usize>()) {
        // conjugating by an element of H itself acts trivially on M(H)
        let h = &hosts()[host];
        let (e, c) = class_cocycle(h, pick);
        let t = h.group.element(g % h.group.order()).clone();
        prop_assert_eq!(h.multiplier.classify(&c.conjugate(&t)).unwrap(), e);
    }
}

fn s4_ring() -> &'static ExtBurnsideRing {
    static RING: OnceLock<ExtBurnsideRing> = OnceLock::new();
    RING.get_or_init(|| ExtBurnsideRing::new(group("S4")).unwrap())
}

fn element() -> impl Strategy<Value = ExtElement> {
    prop::collection::vec((0..16usize, -3i64..=3), 0..4).prop_map(|terms| {
        let mut x = ExtElement::zero();
        for (i, c) in terms {
            x.add_term(i, c);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_is_commutative_and_associative(x in element(), y in element(), z in element()) {
        let r = s4_ring();
        let xy = r.product(&x, &y).unwrap();
        prop_assert_eq!(&xy, &r.product(&y, &x).unwrap());
        let left = r.product(&xy, &z).unwrap();
        let right = r.product(&x, &r.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn marks_are_multiplicative(x in element(), y in element(), f in 0..16usize) {
        let r = s4_ring();
        let xy = r.product(&x, &y).unwrap();
        prop_assert_eq!(r.mark_of(f, &xy).unwrap(), r.mark_of(f, &x).unwrap().mul(&r.mark_of(f, &y).unwrap()));
    }

    #[test]
    fn ring_is_distributive(x in element(), y in element(), z in element()) {
        let r = s4_ring();
        let lhs = r.product(&x, &y.add(&z)).unwrap();
        let rhs = r.product(&x, &y).unwrap().add(&r.product(&x, &z).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
