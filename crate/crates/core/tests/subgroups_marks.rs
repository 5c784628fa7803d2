//! Subgroup classes and classical marks against brute force.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use ebr_core::burnside::table_of_marks;
use ebr_core::Group;

fn closure(g: &Group, gens: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul_idx(x, s);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    (0..g.order() as u32).filter(|&i| seen[i as usize]).collect()
}

/// All subgroups generated by at most two elements.
fn two_generated(g: &Group) -> BTreeSet<Vec<u32>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            out.insert(closure(g, &[a, b]));
        }
    }
    out
}

fn conjugate(g: &Group, members: &[u32], t: usize) -> Vec<u32> {
    let mut v: Vec<u32> = members.iter().map(|&x| g.conj_idx(x as usize, t) as u32).collect();
    v.sort_unstable();
    v
}

fn check_classes(spec: &str, total: usize, classes: usize) {
    let table = table(spec);
    let g = table.ambient().clone();
    let all = two_generated(&g);
    assert_eq!(all.len(), total, "{spec} subgroup count");

    let mut orbits: Vec<BTreeSet<Vec<u32>>> = Vec::new();
    let mut placed = BTreeSet::new();
    for s in &all {
        if placed.contains(s) {
            continue;
        }
        let orbit: BTreeSet<Vec<u32>> = (0..g.order()).map(|t| conjugate(&g, s, t)).collect();
        placed.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    assert_eq!(orbits.len(), classes);
    assert_eq!(table.len(), classes);

    for orbit in &orbits {
        let rep = orbit.iter().next().unwrap();
        let (ci, _) = table.identify_indices(rep).unwrap();
        let class = table.class(ci);
        assert_eq!(class.class_size(g.order()), orbit.len());
        assert!(orbit.contains(class.members()));
        for s in orbit {
            assert_eq!(table.identify_indices(s).unwrap().0, ci);
        }
    }

    let orders: Vec<usize> = table.classes().iter().map(|c| c.order()).collect();
    assert!(orders.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn s4_subgroups_by_brute_force() {
    check_classes("S4", 30, 11);
}

#[test]
fn s5_subgroups_by_brute_force() {
    check_classes("S5", 156, 19);
}

#[test]
fn small_group_subgroup_counts() {
    check_classes("C2", 2, 2);
    check_classes("D8", 10, 8);
    check_classes("A4", 10, 5);
}

/// Number of right cosets `Kt` fixed by every element of `H`.
fn coset_marks(spec: &str) -> Vec<Vec<i64>> {
    let table = table(spec);
    let g = table.ambient().clone();
    table
        .classes()
        .iter()
        .map(|k| {
            let mut cosets: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
            for t in 0..g.order() {
                let mut c: Vec<u32> = k.members().iter().map(|&x| g.mul_idx(x as usize, t) as u32).collect();
                c.sort_unstable();
                cosets.insert(c, ());
            }
            assert_eq!(cosets.len() * k.order(), g.order());
            table
                .classes()
                .iter()
                .map(|h| {
                    cosets
                        .keys()
                        .filter(|c| {
                            h.members().iter().all(|&x| {
                                let mut moved: Vec<u32> = c.iter().map(|&y| g.mul_idx(y as usize, x as usize) as u32).collect();
                                moved.sort_unstable();
                                moved == **c
                            })
                        })
                        .count() as i64
                })
                .collect()
        })
        .collect()
}

#[test]
fn marks_match_fixed_point_counts() {
    for spec in ["S3", "D8", "A4", "S4", "S5"] {
        assert_eq!(table_of_marks(&table(spec)).unwrap(), coset_marks(spec), "{spec}");
    }
}

#[test]
fn s4_table_of_marks_rows() {
    let t = table("S4");
    let marks = table_of_marks(&t).unwrap();
    let c2a = t.index_by_label("C2a").unwrap();
    assert_eq!(&marks[c2a][..3], &[12, 2, 0]);
    assert_eq!(marks[0][0], 24);
    assert!(marks[0][1..].iter().all(|&x| x == 0));
    let n = t.len();
    assert!((0..n).all(|i| marks[n - 1][i] == 1));
}
