//! Counting `c`-regular conjugacy classes: `h` is regular when
//! `c(h, g) = c(g, h)` for every `g` commuting with `h`. The count is the
//! number of irreducible projective representations with cocycle `c`.

use crate::cochain::Cochain2;
use crate::error::{Error, Result};

pub fn is_regular(c: &Cochain2, h: usize) -> bool {
    let g = &**c.host();
    (0..g.order()).all(|x| g.mul_idx(x, h) != g.mul_idx(h, x) || c.value(h, x) == c.value(x, h))
}

pub fn regular_class_count(c: &Cochain2) -> Result<usize> {
    if !c.is_cocycle() {
        return Err(Error::NotACocycle);
    }
    Ok(c.host()
        .conjugacy_class_indices()
        .iter()
        .filter(|class| is_regular(c, class[0]))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::SchurMultiplier;
    use crate::spec::group_from_spec;
    use alloc::sync::Arc;

    fn counts(spec: &str) -> (usize, usize) {
        let p = SchurMultiplier::new(Arc::new(group_from_spec(spec).unwrap())).unwrap();
        let untwisted = regular_class_count(&Cochain2::zero(p.host().clone(), p.modulus())).unwrap();
        (untwisted, regular_class_count(&p.generators()[0]).unwrap())
    }

    #[test]
    fn known_counts() {
        assert_eq!(counts("S4"), (5, 3));
        assert_eq!(counts("A4"), (4, 3));
        assert_eq!(counts("D4"), (4, 1));
        assert_eq!(counts("D8"), (5, 2));
    }
}
