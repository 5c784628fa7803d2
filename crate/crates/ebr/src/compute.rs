//! Parallel construction of rings, tables and product tables. Every result
//! is collected in index order, so output does not depend on scheduling.

use std::sync::Arc;

use ebr_core::burnside::class_multiplier;
use ebr_core::{CycloValue, ExtBurnsideRing, ExtElement, Group, Result, SubgroupClassTable};
use rayon::prelude::*;

pub fn build_ring(group: Arc<Group>) -> Result<ExtBurnsideRing> {
    let table = SubgroupClassTable::new(group);
    let multipliers = (0..table.len())
        .into_par_iter()
        .map(|i| class_multiplier(&table, i))
        .collect::<Result<Vec<_>>>()?;
    ExtBurnsideRing::from_parts(table, multipliers)
}

/// Rows are basis classes, columns mark homomorphisms.
pub fn extended_table(ring: &ExtBurnsideRing) -> Result<Vec<Vec<CycloValue>>> {
    let r = ring.rank();
    let cells = (0..r * r)
        .into_par_iter()
        .map(|k| ring.mark_value(k % r, k / r))
        .collect::<Result<Vec<_>>>()?;
    Ok(cells.chunks(r).map(|c| c.to_vec()).collect())
}

/// `products[a][b] = basis[a] · basis[b]`
pub fn product_table(ring: &ExtBurnsideRing) -> Result<Vec<Vec<ExtElement>>> {
    let r = ring.rank();
    let cells = (0..r * r)
        .into_par_iter()
        .map(|k| ring.ext_product(k / r, k % r))
        .collect::<Result<Vec<_>>>()?;
    Ok(cells.chunks(r).map(|c| c.to_vec()).collect())
}
