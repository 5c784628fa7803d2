//! Textual group specifications:
//!
//! ```text
//! S<n> | A<n> | C<n> | D<2n> | perm:<degree>:<cycles>[,<cycles>]*
//! ```
//!
//! Cycles are 1-based, e.g. `perm:5:(1 2),(1 2 3 4 5)`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_MAX_ORDER};
use crate::perm::Perm;

pub fn group_from_spec(spec: &str) -> Result<Group> {
    group_from_spec_with_cap(spec, DEFAULT_MAX_ORDER)
}

pub fn group_from_spec_with_cap(spec: &str, cap: usize) -> Result<Group> {
    let spec = spec.trim();
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: String::from(message),
    };
    if let Some(rest) = spec.strip_prefix("perm:") {
        let colon = rest.find(':').ok_or_else(|| err(5, "expected ':' after degree"))?;
        let degree: usize = rest[..colon]
            .trim()
            .parse()
            .map_err(|_| err(5, "bad degree"))?;
        if degree == 0 {
            return Err(err(5, "degree must be positive"));
        }
        let body_start = 5 + colon + 1;
        let mut gens = Vec::new();
        for (offset, piece) in split_generators(&rest[colon + 1..]) {
            let perm = Perm::parse_cycles(degree, piece).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: body_start + offset + position,
                    message,
                },
                other => other,
            })?;
            gens.push(perm);
        }
        return Group::generate_with_cap(degree, gens, cap);
    }

    let family = spec.chars().next().ok_or_else(|| err(0, "empty group spec"))?;
    let n: usize = spec[family.len_utf8()..]
        .parse()
        .map_err(|_| err(1, "expected a positive integer after the family letter"))?;
    if n == 0 {
        return Err(err(1, "size must be positive"));
    }
    let cycle = |deg: usize, pts: core::ops::Range<u32>| {
        Perm::from_cycles(deg, &[pts.collect()]).expect("valid cycle")
    };
    let (degree, gens) = match family {
        'S' => {
            if n < 2 {
                (1, Vec::new())
            } else {
                (n, alloc::vec![cycle(n, 0..2), cycle(n, 0..n as u32)])
            }
        }
        'A' => {
            // 3-cycles (1 2 k) generate the alternating group
            let gens = (2..n as u32).map(|k| cycle_of(n, &[0, 1, k])).collect();
            (n, gens)
        }
        'C' => (n, alloc::vec![cycle(n, 0..n as u32)]),
        'D' => {
            if n % 2 != 0 {
                return Err(err(1, "dihedral groups are written D<2n> with even order"));
            }
            match n / 2 {
                1 => (2, alloc::vec![cycle(2, 0..2)]),
                2 => (4, alloc::vec![cycle_of(4, &[0, 1]), cycle_of(4, &[2, 3])]),
                m => {
                    let reflection: Vec<Vec<u32>> =
                        (1..m as u32).take((m - 1) / 2).map(|i| alloc::vec![i, m as u32 - i]).collect();
                    let reflection = Perm::from_cycles(m, &reflection).expect("valid reflection");
                    (m, alloc::vec![cycle(m, 0..m as u32), reflection])
                }
            }
        }
        _ => return Err(err(0, "unknown group family")),
    };
    Group::generate_with_cap(degree, gens, cap)
}

fn cycle_of(degree: usize, points: &[u32]) -> Perm {
    Perm::from_cycles(degree, &[points.to_vec()]).expect("valid cycle")
}

/// Splits the generator list on commas that sit outside parentheses.
fn split_generators(body: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &body[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &body[start..]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        assert_eq!(group_from_spec("S4").unwrap().order(), 24);
        assert_eq!(group_from_spec("S5").unwrap().order(), 120);
        assert_eq!(group_from_spec("A4").unwrap().order(), 12);
        assert_eq!(group_from_spec("A5").unwrap().order(), 60);
        assert_eq!(group_from_spec("C6").unwrap().order(), 6);
        assert_eq!(group_from_spec("D8").unwrap().order(), 8);
        assert_eq!(group_from_spec("D10").unwrap().order(), 10);
        assert_eq!(group_from_spec("D4").unwrap().order(), 4);
        assert_eq!(group_from_spec("S1").unwrap().order(), 1);
        assert_eq!(group_from_spec("A2").unwrap().order(), 1);
    }

    #[test]
    fn explicit_generators() {
        let g = group_from_spec("perm:5:(1 2),(1 2 3 4 5)").unwrap();
        assert_eq!(g.order(), 120);
        let g = group_from_spec("perm:4:(1 2)(3 4), (1 3)(2 4)").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(group_from_spec("perm:3:()").unwrap().order(), 1);
    }

    #[test]
    fn malformed_specs() {
        for bad in ["", "X4", "S", "Sx", "D7", "perm:4", "perm:0:()", "perm:3:(1 5)", "perm:3:(1 2"] {
            assert!(matches!(group_from_spec(bad), Err(Error::Parse { .. })), "{bad}");
        }
        assert!(matches!(group_from_spec("S7"), Err(Error::Capacity { .. })));
        assert_eq!(group_from_spec_with_cap("S7", 5040).unwrap().order(), 5040);
    }
}
