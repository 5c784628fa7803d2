//! Linear algebra over the chain rings `Z/p^k`.
//!
//! Every ideal of `Z/p^k` is `(p^v)`, so pivoting on an entry of minimal
//! valuation always divides the rest of its row and column. Both the
//! incremental echelon form and the Smith form below rely on that.

use alloc::vec::Vec;

/// `Z/p^k` with `p^k` small enough that products fit in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePowerRing {
    p: u64,
    exp: u32,
    q: u64,
}

impl PrimePowerRing {
    pub fn new(p: u64, exp: u32) -> PrimePowerRing {
        let q = p.checked_pow(exp).expect("modulus overflow");
        assert!(q < 1 << 31, "modulus too large for u64 products");
        PrimePowerRing { p, exp, q }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.q as i64) as u64
    }

    /// `v_p(a)`, with `v_p(0) = k`.
    pub fn valuation(&self, a: u64) -> u32 {
        let mut a = a % self.q;
        if a == 0 {
            return self.exp;
        }
        let mut v = 0;
        while a % self.p == 0 {
            a /= self.p;
            v += 1;
        }
        v
    }

    pub fn pow_p(&self, v: u32) -> u64 {
        if v >= self.exp {
            0
        } else {
            self.p.pow(v)
        }
    }

    /// Writes `a = p^v · u` with `u` a unit; `a` must be nonzero.
    pub fn split(&self, a: u64) -> (u32, u64) {
        let v = self.valuation(a);
        debug_assert!(v < self.exp);
        (v, a / self.p.pow(v))
    }

    pub fn unit_inverse(&self, u: u64) -> u64 {
        let (mut r0, mut r1) = (self.q as i64, (u % self.q) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let k = r0 / r1;
            (r0, r1) = (r1, r0 - k * r1);
            (t0, t1) = (t1, t0 - k * t1);
        }
        assert_eq!(r0, 1, "{u} is not a unit mod {}", self.q);
        self.reduce(t0)
    }

    /// `a / p^v`, assuming `p^v` divides `a` as an integer in `[0, q)`.
    #[inline]
    pub fn div_pow(&self, a: u64, v: u32) -> u64 {
        let d = self.p.pow(v);
        debug_assert_eq!(a % d, 0);
        a / d
    }

    /// `row ← row - f · other`
    #[inline]
    pub fn axpy_neg(&self, row: &mut [u64], f: u64, other: &[u64]) {
        if f == 0 {
            return;
        }
        let nf = self.neg(f);
        for (r, &o) in row.iter_mut().zip(other) {
            if o != 0 {
                *r = (*r + nf * o) % self.q;
            }
        }
    }

    pub fn scale(&self, row: &mut [u64], f: u64) {
        for r in row.iter_mut() {
            *r = *r * f % self.q;
        }
    }

    pub fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc = (acc + x * y) % self.q;
        }
        acc
    }
}

/// Row span of a growing set of vectors, kept in echelon form: one row per
/// pivot column, each pivot normalised to a power of `p`.
#[derive(Clone, Debug)]
pub struct Echelon {
    ring: PrimePowerRing,
    width: usize,
    rows: Vec<Vec<u64>>,
    pivot_row: Vec<usize>,
}

impl Echelon {
    pub fn new(ring: PrimePowerRing, width: usize) -> Echelon {
        Echelon {
            ring,
            width,
            rows: Vec::new(),
            pivot_row: alloc::vec![usize::MAX; width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u64>> {
        self.rows
    }

    pub fn insert(&mut self, mut v: Vec<u64>) {
        debug_assert_eq!(v.len(), self.width);
        let ring = self.ring;
        let mut col = 0;
        loop {
            while col < self.width && v[col] == 0 {
                col += 1;
            }
            if col == self.width {
                return;
            }
            let (vv, unit) = ring.split(v[col]);
            let r = self.pivot_row[col];
            if r == usize::MAX {
                ring.scale(&mut v, ring.unit_inverse(unit));
                self.pivot_row[col] = self.rows.len();
                self.rows.push(v);
                return;
            }
            let pv = ring.valuation(self.rows[r][col]);
            if vv < pv {
                ring.scale(&mut v, ring.unit_inverse(unit));
                core::mem::swap(&mut v, &mut self.rows[r]);
            }
            let pv = ring.valuation(self.rows[r][col]);
            let f = ring.div_pow(v[col], pv);
            ring.axpy_neg(&mut v, f, &self.rows[r]);
            debug_assert_eq!(v[col], 0);
            col += 1;
        }
    }
}

/// Smith form `X · A · Y = D` of an `m × n` matrix, recording `Y` and `Y⁻¹`.
#[derive(Clone, Debug)]
pub struct Smith {
    ring: PrimePowerRing,
    /// `v_p(d_i)` for each column `i`; columns with no nonzero diagonal entry get `k`.
    valuations: Vec<u32>,
    rank: usize,
    y: Vec<Vec<u64>>,
    y_inv: Vec<Vec<u64>>,
}

impl Smith {
    pub fn new(ring: PrimePowerRing, rows: Vec<Vec<u64>>, cols: usize) -> Smith {
        let mut a = rows;
        let m = a.len();
        let n = cols;
        let mut y: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut r = alloc::vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        let mut y_inv = y.clone();
        let mut valuations = alloc::vec![ring.exponent(); n];
        let mut t = 0;
        while t < m.min(n) {
            // entry of least valuation in the trailing block
            let mut best: Option<(u32, usize, usize)> = None;
            'search: for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 {
                        let v = ring.valuation(x);
                        if best.map_or(true, |b| v < b.0) {
                            best = Some((v, i, j));
                            if v == 0 {
                                break 'search;
                            }
                        }
                    }
                }
            }
            let Some((v, pi, pj)) = best else { break };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in y.iter_mut() {
                    row.swap(t, pj);
                }
                y_inv.swap(t, pj);
            }
            let (_, unit) = ring.split(a[t][t]);
            let inv = ring.unit_inverse(unit);
            ring.scale(&mut a[t], inv);
            let pivot_row = a[t].clone();
            for row in a.iter_mut().skip(t + 1) {
                if row[t] != 0 {
                    let f = ring.div_pow(row[t], v);
                    ring.axpy_neg(row, f, &pivot_row);
                }
            }
            for j in t + 1..n {
                let x = a[t][j];
                if x == 0 {
                    continue;
                }
                let f = ring.div_pow(x, v);
                a[t][j] = 0;
                // column j -= f · column t
                for row in y.iter_mut() {
                    let yt = row[t];
                    row[j] = ring.sub(row[j], ring.mul(f, yt));
                }
                // inverse: row t of Y⁻¹ += f · row j
                let (head, tail) = y_inv.split_at_mut(j);
                let rt = &mut head[t];
                for (a_t, &b_j) in rt.iter_mut().zip(&tail[0]) {
                    *a_t = ring.add(*a_t, ring.mul(f, b_j));
                }
            }
            valuations[t] = v;
            t += 1;
        }
        Smith {
            ring,
            valuations,
            rank: t,
            y,
            y_inv,
        }
    }

    pub fn ring(&self) -> PrimePowerRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn valuations(&self) -> &[u32] {
        &self.valuations
    }

    pub fn y(&self) -> &[Vec<u64>] {
        &self.y
    }

    pub fn y_inv(&self) -> &[Vec<u64>] {
        &self.y_inv
    }

    /// Generators of `{v : A v = 0}` as (vector, exponent e) with the vector of order `p^e`.
    pub fn kernel_generators(&self) -> Vec<(Vec<u64>, u32)> {
        let k = self.ring.exponent();
        self.valuations
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, &v)| {
                let s = self.ring.pow_p(k - v);
                let col: Vec<u64> = self.y.iter().map(|row| self.ring.mul(row[i], s)).collect();
                (col, v)
            })
            .collect()
    }

    /// Order of the row span of `A`, as `log_p`.
    pub fn row_span_log_order(&self) -> u32 {
        let k = self.ring.exponent();
        self.valuations[..self.rank].iter().map(|&v| k - v).sum()
    }
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn p_valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Exponent `y` with `ζ_{p^a}^y` the `p`-primary part of `ζ_m^x`.
/// Requires `v_p(m) ≤ a`.
pub fn p_component(x: u64, m: u64, p: u64, a: u32) -> u64 {
    let b = p_valuation(m, p);
    debug_assert!(b <= a);
    if b == 0 {
        return 0;
    }
    let pb = p.pow(b);
    let cofactor = m / pb;
    let ring = PrimePowerRing::new(p, b);
    let y = ring.mul(x % pb, ring.unit_inverse(cofactor % pb));
    y * p.pow(a - b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let r = PrimePowerRing::new(2, 3);
        assert_eq!(r.valuation(4), 2);
        assert_eq!(r.valuation(0), 3);
        assert_eq!(r.split(6), (1, 3));
        assert_eq!(r.mul(3, r.unit_inverse(3)), 1);
        assert_eq!(r.reduce(-1), 7);
    }

    #[test]
    fn smith_of_small_matrix() {
        // over Z/8: [[2, 4], [4, 0]] has diagonal (2, 8·?) → valuations (1, 3): 4·4 - 0 ...
        let r = PrimePowerRing::new(2, 3);
        let s = Smith::new(r, alloc::vec![alloc::vec![2, 4], alloc::vec![4, 0]], 2);
        // det = -16 ≡ 0 mod 8; after pivot 2: row2 → [0, -8] ≡ 0
        assert_eq!(s.valuations(), &[1, 3]);
        let kernel = s.kernel_generators();
        // kernel of [[2,4],[4,0]] over Z/8 has order 2^1 · 2^3 = 16
        assert_eq!(kernel.iter().map(|k| k.1).sum::<u32>(), 4);
        for (v, _) in kernel {
            assert_eq!(r.add(r.mul(2, v[0]), r.mul(4, v[1])), 0);
            assert_eq!(r.mul(4, v[0]), 0);
        }
    }

    #[test]
    fn p_components_recombine() {
        // ζ_12^x = ζ_4^y2 · ζ_3^y3
        for x in 0..12u64 {
            let y2 = p_component(x, 12, 2, 2);
            let y3 = p_component(x, 12, 3, 1);
            assert_eq!((y2 * 3 + y3 * 4) % 12, x);
        }
        // embedding a smaller p-part: ζ_2 = ζ_8^4
        assert_eq!(p_component(1, 2, 2, 3), 4);
        assert_eq!(p_component(1, 3, 2, 3), 0);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(120), [(2, 3), (3, 1), (5, 1)]);
        assert_eq!(factorize(1), []);
        assert_eq!(factorize(97), [(97, 1)]);
    }
}
