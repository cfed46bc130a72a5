//! Exact-arithmetic classification of rigid hyperelliptic fourfolds.
//!
//! The library recomputes, from first principles, the complete classification
//! of rigid hyperelliptic fourfolds up to biholomorphism and diffeomorphism:
//! holonomy-group screening, kernel enumeration, free-action counting,
//! special cohomology classes and normalizer orbits. All arithmetic is exact
//! (Eisenstein integers, torsion points, cyclotomic numbers), so every result
//! is an integer that either matches its expected value or does not.

pub mod eisenstein;
pub mod groups;
pub mod cyclotomic;
pub mod characters;
pub mod lattice;
pub mod actions;
pub mod cohomology;
pub mod verify;
