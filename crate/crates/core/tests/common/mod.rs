#![allow(dead_code)]

use std::sync::Arc;

use ebr_core::{group_from_spec, Group, SubgroupClassTable};

pub fn group(spec: &str) -> Arc<Group> {
    Arc::new(group_from_spec(spec).unwrap())
}

pub fn table(spec: &str) -> SubgroupClassTable {
    SubgroupClassTable::new(group(spec))
}

/// Subgroup class representatives of S4 and S5 of order at most `max`.
pub fn small_subgroups(max: usize) -> Vec<(String, Arc<Group>)> {
    let mut out = Vec::new();
    for spec in ["S4", "S5"] {
        for c in table(spec).classes() {
            if c.order() <= max {
                out.push((format!("{spec}/{}", c.label), c.rep.clone()));
            }
        }
    }
    out
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut a = 0;
        while n % p == 0 {
            n /= p;
            a += 1;
        }
        if a > 0 {
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Rank of a matrix over the prime field `F_l`.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, l: u64) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] % l != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow_mod(rows[rank][col], l - 2, l);
        let pivot: Vec<u64> = rows[rank].iter().map(|&x| x * inv % l).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] % l != 0 {
                let f = row[col] % l;
                for (t, &s) in row.iter_mut().zip(&pivot) {
                    *t = (*t + l - f * s % l) % l;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}
