//! Text labels for subgroup classes.
//!
//! Structural names where they can be read off the permutation action
//! (`C4`, `V1`, `S3`, `A4`, `S3xS2`, `D8`), `H<order>` for a lone unnamed
//! class of its order, `o<order>n<index>` otherwise. Repeated names get a
//! letter suffix (`C2a`, `C2b`), except Klein four-groups which are numbered.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::group::Group;
use crate::subgroups::SubgroupClass;

pub fn subgroup_labels(classes: &[SubgroupClass]) -> Vec<String> {
    let structural: Vec<Option<String>> = classes.iter().map(|c| structural_name(&c.rep)).collect();

    let mut unnamed_per_order: BTreeMap<usize, usize> = BTreeMap::new();
    for (c, name) in classes.iter().zip(&structural) {
        if name.is_none() {
            *unnamed_per_order.entry(c.order()).or_default() += 1;
        }
    }

    let mut index_in_order: BTreeMap<usize, usize> = BTreeMap::new();
    let mut base: Vec<String> = Vec::with_capacity(classes.len());
    for (c, name) in classes.iter().zip(structural) {
        let idx = index_in_order.entry(c.order()).or_default();
        *idx += 1;
        base.push(match name {
            Some(n) => n,
            None if unnamed_per_order[&c.order()] == 1 => format!("H{}", c.order()),
            None => format!("o{}n{}", c.order(), idx),
        });
    }

    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for b in &base {
        *counts.entry(b.clone()).or_default() += 1;
    }
    let mut used: BTreeMap<String, usize> = BTreeMap::new();
    base.into_iter()
        .map(|b| {
            if counts[&b] == 1 {
                return b;
            }
            let k = used.entry(b.clone()).or_default();
            *k += 1;
            if b == "V" {
                format!("V{k}")
            } else {
                format!("{b}{}", suffix_letter(*k))
            }
        })
        .collect()
}

fn suffix_letter(k: usize) -> String {
    // a..z, then aa, ab, ...
    let mut k = k - 1;
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (k % 26) as u8);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

fn structural_name(h: &Group) -> Option<String> {
    let n = h.order();
    if n == 1 {
        return Some(String::from("1"));
    }
    let orders: Vec<usize> = (0..n).map(|i| h.element_order_idx(i)).collect();
    if orders.contains(&n) {
        return Some(format!("C{n}"));
    }
    if n == 4 {
        return Some(String::from("V"));
    }
    let orbits = nontrivial_orbits(h);
    let all_even = h.elements().iter().all(|p| {
        p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    });
    if let [o] = orbits.as_slice() {
        let k = o.len();
        if n == factorial(k) {
            return Some(format!("S{k}"));
        }
        if k >= 4 && n == factorial(k) / 2 && all_even {
            return Some(format!("A{k}"));
        }
    }
    if let [a, b] = orbits.as_slice() {
        let (a, b) = (a.len().max(b.len()), a.len().min(b.len()));
        if n == factorial(a) * factorial(b) {
            return Some(format!("S{a}xS{b}"));
        }
    }
    if n == 8 && !h.is_abelian() && orders.contains(&4) && orders.iter().filter(|&&o| o == 2).count() == 5 {
        return Some(String::from("D8"));
    }
    None
}

fn nontrivial_orbits(h: &Group) -> Vec<Vec<usize>> {
    let deg = h.degree();
    let mut seen = alloc::vec![false; deg];
    let mut out = Vec::new();
    for start in 0..deg {
        if seen[start] {
            continue;
        }
        let mut orbit = alloc::vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            k += 1;
            for g in h.generators() {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        if orbit.len() > 1 {
            out.push(orbit);
        }
    }
    out
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}
