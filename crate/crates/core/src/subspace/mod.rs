//! Finite fields, subspace lattices `B_n(q)` and their edge labeling.
//!
//! An atom is labeled by the position of the rightmost nonzero coordinate of
//! a spanning vector; a cover `X ⋖ Y` is labeled by the one atom label that
//! occurs in `Y` but not in `X`.

mod field;
mod lattice;

pub use field::{is_irreducible, is_prime, prime_power, Elem, FiniteField, DEFAULT_FIELD_BOUND};
pub use lattice::{
    atom_label, build_bnq, build_bnq_bounded, build_segre_bnq, build_segre_bnq_bounded,
    edge_label, enumerate_subspaces, enumerate_subspaces_bounded, subspace_count, AtomLabel,
    SegreSubspaceLattice, Subspace, SubspaceLattice, DEFAULT_SUBSPACE_BOUND,
};

/// `F_{p^k}` with the default order bound.
pub fn field_make(p: u64, k: u32) -> crate::Result<FiniteField> {
    FiniteField::new(p, k)
}
