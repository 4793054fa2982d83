//! Symmetric functions in two alphabets, the product Frobenius map, and
//! characters of `S_n × S_n` on the top homology of `P_n`, the proper part
//! of `B_n ∘ B_n`.

mod characters;
mod lefschetz;
mod partition;
mod symfun;
mod verify;

pub use characters::{
    class_representative, cycle_type, induce_product_character, induce_product_character_bounded,
    irreducible_characters, is_orthonormal, product_frobenius, Character, CharacterTable2,
    DEFAULT_INDUCTION_BOUND,
};
pub use lefschetz::{
    lefschetz_character, lefschetz_character_bounded, segre_boolean_proper_part,
    DEFAULT_LEFSCHETZ_BOUND,
};
pub use partition::{factorial, partitions_of, z_of, Partition, MAX_PARTITION_SIZE};
pub use symfun::{h_to_p, SymFun, SymFun2};
pub use verify::{
    homology_characteristic, principal_specialization, q_pochhammer, specialized_whitney_terms,
    theorem_48_sides, verify_prop_26, verify_prop_26_bounded, verify_theorem_31,
    verify_theorem_48, whitney_characteristic, whitney_characteristics, Prop26Report,
    DEFAULT_PROP26_BOUND,
};

/// `symfun2_mul`.
pub fn symfun2_mul(a: &SymFun2, b: &SymFun2) -> SymFun2 {
    a * b
}
