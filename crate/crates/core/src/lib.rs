//! Permutation groups, their subgroup classes, degree-two cohomology with
//! roots-of-unity coefficients, and the extended Burnside ring built on top.

#![no_std]

extern crate alloc;

mod bits;
pub mod burnside;
pub mod cochain;
pub mod cyclo;
pub mod error;
pub mod group;
mod labels;
pub mod modular;
pub mod multiplier;
pub mod perm;
pub mod regular;
pub mod spec;
pub mod subgroups;

pub use burnside::{ExtBasisClass, ExtBurnsideRing, ExtElement, MarkHom};
pub use cochain::Cochain2;
pub use cyclo::CycloValue;
pub use error::{Error, Result};
pub use group::Group;
pub use multiplier::{MultiplierCharacter, MultiplierElement, SchurMultiplier};
pub use perm::Perm;
pub use spec::{group_from_spec, group_from_spec_with_cap};
pub use subgroups::{SubgroupClass, SubgroupClassTable};
