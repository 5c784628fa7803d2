//! Property suites run by `ebr verify`.

use ebr_core::cyclo::{determinant, rank};
use ebr_core::{CycloValue, ExtBurnsideRing, ExtElement};
use num_rational::BigRational;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

/// Marks of an element through the precomputed table.
pub fn mark_of(table: &[Vec<CycloValue>], conductor: u32, x: &ExtElement, hom: usize) -> CycloValue {
    let mut acc = CycloValue::zero(conductor);
    for (i, c) in x.terms() {
        acc = acc.add(&table[i][hom].scale(&BigRational::from_integer(c.into())));
    }
    acc
}

/// `f(x·y) = f(x) f(y)` for all basis pairs and all marks.
pub fn homomorphism(ring: &ExtBurnsideRing, table: &[Vec<CycloValue>], products: &[Vec<ExtElement>]) -> Check {
    let r = ring.rank();
    let e = ring.conductor();
    let mut failures = Vec::new();
    for x in 0..r {
        for y in 0..r {
            for f in 0..r {
                let lhs = mark_of(table, e, &products[x][y], f);
                let rhs = table[x][f].mul(&table[y][f]);
                if lhs != rhs {
                    failures.push((x, y, f));
                }
            }
        }
    }
    let basis = ring.ext_basis();
    let homs = ring.mark_homomorphisms();
    Check {
        name: "hom",
        passed: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{} products x {} marks multiplicative", r * r, r),
            Some(&(x, y, f)) => format!(
                "{} of {} triples fail, first {} at [{}]*[{}]",
                failures.len(),
                r * r * r,
                homs[f].label,
                basis[x].label,
                basis[y].label
            ),
        },
    }
}

pub fn full_rank(ring: &ExtBurnsideRing, table: &[Vec<CycloValue>]) -> Check {
    let r = ring.rank();
    let homs = ring.mark_homomorphisms().len();
    let k = rank(table);
    Check {
        name: "rank",
        passed: homs == r && k == r,
        detail: format!("{r} basis classes, {homs} marks, mark matrix rank {k}"),
    }
}

pub fn nonzero_det(ring: &ExtBurnsideRing, table: &[Vec<CycloValue>]) -> Check {
    let d = determinant(table, ring.conductor());
    Check {
        name: "det",
        passed: !d.is_zero(),
        detail: format!("determinant {d}"),
    }
}

/// For `H ≤ K` (up to conjugacy) of odd index with both multipliers of
/// order 2: `f'_H(⟨K'⟩) = -f_H(⟨K⟩)`.
pub fn sign_lemma(ring: &ExtBurnsideRing, table: &[Vec<CycloValue>]) -> Check {
    let classes = ring.subgroup_table();
    let g = ring.group();
    let mut pairs = 0;
    let mut failures = Vec::new();
    for h in 0..classes.len() {
        for k in 0..classes.len() {
            let (hc, kc) = (classes.class(h), classes.class(k));
            let order_two = |i: usize| ring.multiplier(i).multiplier.order() == 2;
            if kc.order() % hc.order() != 0 || (kc.order() / hc.order()) % 2 == 0 || !order_two(h) || !order_two(k) {
                continue;
            }
            if g.transporter_indices(&hc.rep, &kc.rep).map_or(true, |t| t.is_empty()) {
                continue;
            }
            pairs += 1;
            let hom = |orbit| {
                ring.mark_homomorphisms()
                    .iter()
                    .position(|f| f.subgroup == h && f.orbit == orbit)
                    .expect("mark exists")
            };
            let (f, f1) = (hom(0), hom(1));
            let (x, x1) = (ring.untwisted(k), ring.basis_index(k, 1).expect("primed class"));
            if table[x1][f1] != table[x][f].neg() {
                failures.push(format!("{} on {}", ring.mark_homomorphisms()[f1].label, ring.ext_basis()[x1].label));
            }
        }
    }
    Check {
        name: "lemma-sign",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{pairs} qualifying pairs")
        } else {
            format!("{} of {pairs} pairs fail: {}", failures.len(), failures.join(", "))
        },
    }
}

/// The untwisted leading block equals the classical table of marks.
pub fn ordinary_marks(ring: &ExtBurnsideRing, table: &[Vec<CycloValue>]) -> Check {
    let classical = match ring.table_of_marks() {
        Ok(t) => t,
        Err(e) => {
            return Check {
                name: "marks",
                passed: false,
                detail: e.to_string(),
            }
        }
    };
    let e = ring.conductor();
    let n = classical.len();
    let mut bad = 0;
    for k in 0..n {
        for h in 0..n {
            let x = ring.untwisted(k);
            let f = ring
                .mark_homomorphisms()
                .iter()
                .position(|m| m.subgroup == h && m.orbit == 0)
                .expect("untwisted mark");
            if table[x][f] != CycloValue::from_integer(e, classical[k][h]) {
                bad += 1;
            }
        }
    }
    Check {
        name: "marks",
        passed: bad == 0,
        detail: format!("{n}x{n} classical block, {bad} mismatches"),
    }
}

pub fn unit_law(ring: &ExtBurnsideRing, products: &[Vec<ExtElement>]) -> Check {
    let unit = ring.untwisted(ring.subgroup_table().len() - 1);
    let bad = (0..ring.rank())
        .filter(|&x| products[unit][x] != ExtElement::basis(x) || products[x][unit] != ExtElement::basis(x))
        .count();
    Check {
        name: "unit",
        passed: bad == 0,
        detail: format!("[{}] is a two-sided unit on {} of {} classes", ring.ext_basis()[unit].label, ring.rank() - bad, ring.rank()),
    }
}

pub fn commutative(ring: &ExtBurnsideRing, products: &[Vec<ExtElement>]) -> Check {
    let r = ring.rank();
    let bad = (0..r)
        .flat_map(|x| (0..r).map(move |y| (x, y)))
        .filter(|&(x, y)| products[x][y] != products[y][x])
        .count();
    Check {
        name: "commutative",
        passed: bad == 0,
        detail: format!("{bad} non-commuting basis pairs"),
    }
}

/// Transitive classes `M` with `m(M·M) = 5`, and the dichotomy: for distinct
/// such `M, N` with `m(M·N) = 3`, one of `M·M`, `N·N` is the unit.
pub fn bfo_set(ring: &ExtBurnsideRing, products: &[Vec<ExtElement>]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let r = ring.rank();
    let unit = ExtElement::basis(ring.untwisted(ring.subgroup_table().len() - 1));
    let set: Vec<usize> = (0..r).filter(|&x| ring.m_of(&products[x][x]) == 5).collect();
    let mut violations = Vec::new();
    for &a in &set {
        for &b in &set {
            if a < b && ring.m_of(&products[a][b]) == 3 && products[a][a] != unit && products[b][b] != unit {
                violations.push((a, b));
            }
        }
    }
    (set, violations)
}

pub fn bfo(ring: &ExtBurnsideRing, products: &[Vec<ExtElement>]) -> Check {
    let (set, violations) = bfo_set(ring, products);
    let labels: Vec<&str> = set.iter().map(|&i| ring.ext_basis()[i].label.as_str()).collect();
    Check {
        name: "bfo",
        passed: violations.is_empty(),
        detail: format!(
            "m(M*M)=5 for {{{}}}; {} dichotomy violations",
            labels.join(", "),
            violations.len()
        ),
    }
}
