//! Exact arithmetic in the cyclotomic field `Q(ζ_e)`, elements written in
//! the power basis `1, ζ, …, ζ^{φ(e)-1}` modulo the cyclotomic polynomial `Φ_e`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer coefficients of `Φ_e`, lowest degree first.
pub fn cyclotomic_polynomial(e: u32) -> Vec<BigInt> {
    assert!(e >= 1);
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut poly: Vec<BigInt> = alloc::vec![BigInt::zero(); e as usize + 1];
    poly[0] = -BigInt::one();
    poly[e as usize] = BigInt::one();
    for d in 1..e {
        if e % d == 0 {
            poly = divide_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Quotient of monic-divisor division with zero remainder.
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut quot = alloc::vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dd] / lead;
        if !c.is_zero() {
            for (k, dk) in den.iter().enumerate() {
                rem[i + k] -= &c * dk;
            }
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloValue {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl CycloValue {
    pub fn zero(e: u32) -> CycloValue {
        let d = cyclotomic_polynomial(e).len() - 1;
        CycloValue {
            conductor: e,
            coeffs: alloc::vec![BigRational::zero(); d],
        }
    }

    pub fn from_rational(e: u32, r: BigRational) -> CycloValue {
        let mut v = CycloValue::zero(e);
        v.coeffs[0] = r;
        v
    }

    pub fn from_integer(e: u32, k: i64) -> CycloValue {
        CycloValue::from_rational(e, BigRational::from_integer(BigInt::from(k)))
    }

    pub fn one(e: u32) -> CycloValue {
        CycloValue::from_integer(e, 1)
    }

    /// `ζ_e^k`
    pub fn zeta_power(e: u32, k: u64) -> CycloValue {
        let k = (k % e as u64) as usize;
        let mut poly = alloc::vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        cyclo_normalize(e, &poly)
    }

    /// `Σ counts[k] ζ_e^k / denominator`
    pub fn from_exponent_counts(e: u32, counts: &[i64], denominator: i64) -> CycloValue {
        let poly: Vec<BigRational> = counts
            .iter()
            .map(|&c| BigRational::new(BigInt::from(c), BigInt::from(denominator)))
            .collect();
        cyclo_normalize(e, &poly)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    fn check(&self, other: &CycloValue) {
        assert_eq!(self.conductor, other.conductor, "mixed cyclotomic conductors");
    }

    pub fn add(&self, other: &CycloValue) -> CycloValue {
        self.check(other);
        CycloValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CycloValue) -> CycloValue {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycloValue {
        CycloValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> CycloValue {
        CycloValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    pub fn mul(&self, other: &CycloValue) -> CycloValue {
        self.check(other);
        let d = self.coeffs.len();
        let mut prod = alloc::vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        cyclo_normalize(self.conductor, &prod)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<CycloValue> {
        if self.is_zero() {
            return None;
        }
        let e = self.conductor;
        let d = self.coeffs.len();
        // columns: self · ζ^j, solve for the combination giving 1
        let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        for j in 0..d {
            columns.push(self.mul(&CycloValue::zeta_power(e, j as u64)).coeffs);
        }
        let mut rows: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut r: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
                r.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                r
            })
            .collect();
        let x = solve(&mut rows, d)?;
        Some(CycloValue { conductor: e, coeffs: x })
    }
}

/// Reduction of `Σ poly[k] ζ^k` modulo `Φ_e`.
pub fn cyclo_normalize(e: u32, poly: &[BigRational]) -> CycloValue {
    let phi = cyclotomic_polynomial(e);
    let d = phi.len() - 1;
    let mut rem: Vec<BigRational> = poly.to_vec();
    // reduce high powers with ζ^e = 1 first, then by Φ_e (monic)
    if rem.len() > e as usize {
        let mut folded = alloc::vec![BigRational::zero(); e as usize];
        for (k, c) in rem.into_iter().enumerate() {
            folded[k % e as usize] += c;
        }
        rem = folded;
    }
    for i in (d..rem.len()).rev() {
        let c = core::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        for (k, pk) in phi.iter().enumerate().take(d) {
            rem[i - d + k] -= &c * BigRational::from_integer(pk.clone());
        }
    }
    rem.resize(d, BigRational::zero());
    CycloValue {
        conductor: e,
        coeffs: rem,
    }
}

/// Gaussian elimination on an augmented `n × (n+1)` system; `None` if singular.
fn solve(rows: &mut [Vec<BigRational>], n: usize) -> Option<Vec<BigRational>> {
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(rows.iter().map(|r| r[n].clone()).collect())
}

/// Determinant of a square matrix over `Q(ζ_e)`.
pub fn determinant(matrix: &[Vec<CycloValue>], e: u32) -> CycloValue {
    let n = matrix.len();
    let mut a: Vec<Vec<CycloValue>> = matrix.to_vec();
    let mut det = CycloValue::one(e);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return CycloValue::zero(e);
        };
        if pivot != col {
            a.swap(col, pivot);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        let inv = a[col][col].inverse().expect("nonzero pivot");
        let pivot_row = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].mul(&inv);
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = x.sub(&f.mul(p));
            }
        }
    }
    det
}

/// Rank of a matrix over `Q(ζ_e)`.
pub fn rank(matrix: &[Vec<CycloValue>]) -> usize {
    let mut a: Vec<Vec<CycloValue>> = matrix.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        let inv = a[r][col].inverse().expect("nonzero pivot");
        let pivot_row = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].mul(&inv);
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = x.sub(&f.mul(p));
            }
        }
        r += 1;
    }
    r
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycloValue {
    /// Rational values at conductor ≤ 2 print plainly; otherwise `[a0, a1, …]@e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor <= 2 {
            return f.write_str(&fmt_rational(&self.coeffs[0]));
        }
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&fmt_rational(c))?;
        }
        write!(f, "]@{}", self.conductor)
    }
}

impl fmt::Debug for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")?;
        if self.conductor <= 2 {
            write!(f, "@{}", self.conductor)?;
        }
        Ok(())
    }
}

impl PartialOrd for CycloValue {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycloValue {
    /// Arbitrary but fixed total order, for use in sorted containers.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.conductor.cmp(&other.conductor).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Sign of a rational value (`-1`, `0`, `1`), `None` off the rationals.
pub fn rational_sign(v: &CycloValue) -> Option<i32> {
    v.to_rational().map(|r| {
        if r.is_zero() {
            0
        } else if r.is_positive() {
            1
        } else {
            -1
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn normalisation() {
        assert_eq!(CycloValue::zeta_power(2, 1), CycloValue::from_integer(2, -1));
        assert!(cyclo_normalize(4, &rats(&[1, 1, 1, 1])).is_zero());
        assert_eq!(cyclo_normalize(6, &rats(&[0, 0, 1])), cyclo_normalize(6, &rats(&[-1, 1])));
        assert_eq!(CycloValue::zeta_power(5, 5), CycloValue::one(5));
    }

    #[test]
    fn inverses_and_determinants() {
        let z = CycloValue::zeta_power(5, 1);
        let x = z.add(&CycloValue::from_integer(5, 2));
        assert_eq!(x.mul(&x.inverse().unwrap()), CycloValue::one(5));
        let m = alloc::vec![
            alloc::vec![CycloValue::from_integer(2, 2), CycloValue::from_integer(2, 1)],
            alloc::vec![CycloValue::from_integer(2, 4), CycloValue::from_integer(2, 3)],
        ];
        assert_eq!(determinant(&m, 2), CycloValue::from_integer(2, 2));
        assert_eq!(rank(&m), 2);
        let singular = alloc::vec![m[0].clone(), m[0].clone()];
        assert_eq!(rank(&singular), 1);
        assert!(determinant(&singular, 2).is_zero());
        assert_eq!(alloc::format!("{}", CycloValue::from_integer(2, -3)), "-3");
        assert_eq!(alloc::format!("{}", CycloValue::zeta_power(3, 1)), "[0, 1]@3");
    }
}
