//! Normalised 2-cochains `H × H → Z/n`, standing for roots of unity `ζ_n^c(x,y)`.
//!
//! Cocycle condition (trivial action): `c(x,y) + c(xy,z) = c(y,z) + c(x,yz)`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    host: Arc<Group>,
    modulus: u32,
    /// Row-major over element indices of `host`.
    values: Vec<u32>,
}

impl Cochain2 {
    pub fn zero(host: Arc<Group>, modulus: u32) -> Cochain2 {
        assert!(modulus > 0);
        let n = host.order();
        Cochain2 {
            host,
            modulus,
            values: alloc::vec![0; n * n],
        }
    }

    /// Fails with [`Error::NotNormalized`] unless `f(1, x) = f(x, 1) = 0`.
    pub fn from_fn(host: Arc<Group>, modulus: u32, mut f: impl FnMut(usize, usize) -> u64) -> Result<Cochain2> {
        let n = host.order();
        let mut values = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                values.push((f(x, y) % modulus as u64) as u32);
            }
        }
        Cochain2::from_values(host, modulus, values)
    }

    pub fn from_values(host: Arc<Group>, modulus: u32, mut values: Vec<u32>) -> Result<Cochain2> {
        let n = host.order();
        if modulus == 0 {
            return Err(Error::Invalid("cochain modulus must be positive".into()));
        }
        if values.len() != n * n {
            return Err(Error::Invalid("cochain needs |H|² values".into()));
        }
        for v in values.iter_mut() {
            *v %= modulus;
        }
        if (0..n).any(|x| values[x] != 0 || values[x * n] != 0) {
            return Err(Error::NotNormalized);
        }
        Ok(Cochain2 { host, modulus, values })
    }

    pub fn host(&self) -> &Arc<Group> {
        &self.host
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    pub fn value(&self, x: usize, y: usize) -> u32 {
        self.values[x * self.host.order() + y]
    }

    pub fn value_at(&self, x: &Perm, y: &Perm) -> Option<u32> {
        Some(self.value(self.host.index_of(x)?, self.host.index_of(y)?))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Checks the cocycle identity on all triples.
    pub fn is_cocycle(&self) -> bool {
        let g = &*self.host;
        let n = g.order();
        let m = self.modulus as u64;
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul_idx(x, y);
                let cxy = self.value(x, y) as u64;
                for z in 0..n {
                    let lhs = cxy + self.value(xy, z) as u64;
                    let rhs = self.value(y, z) as u64 + self.value(x, g.mul_idx(y, z)) as u64;
                    if lhs % m != rhs % m {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(δf)(x,y) = f(x) + f(y) - f(xy)` for a normalised 1-cochain `f`.
    pub fn coboundary(host: Arc<Group>, modulus: u32, f: &[u32]) -> Result<Cochain2> {
        if f.len() != host.order() {
            return Err(Error::Invalid("1-cochain needs |H| values".into()));
        }
        if f[0] % modulus != 0 {
            return Err(Error::NotNormalized);
        }
        let m = modulus as u64;
        let g = host.clone();
        Cochain2::from_fn(host, modulus, |x, y| {
            (f[x] as u64 % m + f[y] as u64 % m + m - f[g.mul_idx(x, y)] as u64 % m) % m
        })
    }

    /// Connecting image of a homomorphism `χ: H → Z/n` (given by its values),
    /// `(x,y) ↦ (χ̃(x) + χ̃(y) - χ̃(xy)) / n mod n` with lifts `χ̃` in `[0, n)`.
    pub fn bockstein(host: Arc<Group>, modulus: u32, chi: &[u32]) -> Result<Cochain2> {
        let n = host.order();
        if chi.len() != n {
            return Err(Error::Invalid("homomorphism needs |H| values".into()));
        }
        let m = modulus as u64;
        let lift: Vec<u64> = chi.iter().map(|&c| c as u64 % m).collect();
        for x in 0..n {
            for y in 0..n {
                if (lift[x] + lift[y]) % m != lift[host.mul_idx(x, y)] {
                    return Err(Error::NotAHomomorphism { modulus });
                }
            }
        }
        let g = host.clone();
        Cochain2::from_fn(host, modulus, |x, y| (lift[x] + lift[y] - lift[g.mul_idx(x, y)]) / m)
    }

    /// Restriction to a subgroup of the host.
    pub fn restrict(&self, sub: &Arc<Group>) -> Result<Cochain2> {
        let idx = self.host.indices_of(sub)?;
        let n = self.host.order();
        let values = idx
            .iter()
            .flat_map(|&x| idx.iter().map(move |&y| (x as usize, y as usize)))
            .map(|(x, y)| self.values[x * n + y])
            .collect();
        Ok(Cochain2 {
            host: sub.clone(),
            modulus: self.modulus,
            values,
        })
    }

    /// Transport to `H^g = g⁻¹Hg`: `c^g(a,b) = c(g a g⁻¹, g b g⁻¹)`.
    pub fn conjugate(&self, g: &Perm) -> Cochain2 {
        let target = Arc::new(self.host.conjugate(g));
        let gi = g.inverse();
        let back: Vec<usize> = target
            .elements()
            .iter()
            .map(|a| {
                self.host
                    .index_of(&a.conjugate_by(&gi))
                    .expect("conjugate lands in host")
            })
            .collect();
        let n = self.host.order();
        let values = back
            .iter()
            .flat_map(|&x| back.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.values[x * n + y])
            .collect();
        Cochain2 {
            host: target,
            modulus: self.modulus,
            values,
        }
    }

    /// Same roots of unity written over `Z/modulus`, which must be a multiple of the current modulus.
    pub fn rescale(&self, modulus: u32) -> Result<Cochain2> {
        if modulus == 0 || modulus % self.modulus != 0 {
            return Err(Error::ModulusIncompatible {
                modulus: self.modulus,
                presentation: modulus,
            });
        }
        let k = modulus / self.modulus;
        Ok(Cochain2 {
            host: self.host.clone(),
            modulus,
            values: self.values.iter().map(|&v| v * k).collect(),
        })
    }

    /// Pointwise product of the roots of unity, over the lcm of the moduli.
    pub fn add(&self, other: &Cochain2) -> Result<Cochain2> {
        if *self.host != *other.host {
            return Err(Error::HostMismatch);
        }
        let m = num_integer::lcm(self.modulus, other.modulus);
        let a = self.rescale(m)?;
        let b = other.rescale(m)?;
        Ok(Cochain2 {
            host: a.host,
            modulus: m,
            values: a
                .values
                .iter()
                .zip(&b.values)
                .map(|(&x, &y)| ((x as u64 + y as u64) % m as u64) as u32)
                .collect(),
        })
    }

    pub fn scale(&self, k: i64) -> Cochain2 {
        let m = self.modulus as i64;
        let k = k.rem_euclid(m);
        Cochain2 {
            host: self.host.clone(),
            modulus: self.modulus,
            values: self
                .values
                .iter()
                .map(|&v| (v as i64 * k % m) as u32)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cochain2 {
        self.scale(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::group_from_spec;

    #[test]
    fn bockstein_of_sign() {
        let h = Arc::new(group_from_spec("C4").unwrap());
        // χ(g^k) = k, n = 4: carries when exponents overflow
        let gen = h.generators()[0].clone();
        let mut chi = alloc::vec![0u32; 4];
        let mut x = Perm::identity(4);
        for k in 0..4 {
            chi[h.index_of(&x).unwrap()] = k;
            x = &x * &gen;
        }
        let b = Cochain2::bockstein(h.clone(), 4, &chi).unwrap();
        assert!(b.is_cocycle());
        assert!(!b.is_zero());
        assert!(Cochain2::bockstein(h, 4, &[0, 1, 1, 1]).is_err());
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let s = group_from_spec("S4").unwrap();
        let gens = alloc::vec![Perm::parse_cycles(4, "(1 2)").unwrap(), Perm::parse_cycles(4, "(1 2 3)").unwrap()];
        let h = Arc::new(Group::generate(4, gens).unwrap());
        let f: Vec<u32> = (0..6).map(|i| if i == 0 { 0 } else { (i * 7 % 5) as u32 }).collect();
        let c = Cochain2::coboundary(h.clone(), 5, &f).unwrap();
        assert!(c.is_cocycle());
        let g = s.element(7).clone();
        let conj = c.conjugate(&g);
        assert!(conj.is_cocycle());
        assert_eq!(**conj.host(), h.conjugate(&g));
    }

    #[test]
    fn normalisation_is_enforced() {
        let h = Arc::new(group_from_spec("C2").unwrap());
        assert!(matches!(
            Cochain2::from_values(h, 2, alloc::vec![0, 1, 0, 0]),
            Err(Error::NotNormalized)
        ));
    }
}
