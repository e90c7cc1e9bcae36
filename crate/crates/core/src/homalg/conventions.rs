//! Sign conventions, fixed once for the whole crate.
//!
//! Shifted dual: `(Σ^{-g} C^*)_i = Hom(C_{g-i}, Q)` with differential
//! `(-1)^g (∂_{g-i+1})^T`.
//!
//! Mapping cone of `ι: A -> B`: `Cone_i = B_i ⊕ A_{i-1}` with differential
//! `[[∂^B, ι], [0, -∂^A]]`.

/// Sign applied to every transposed differential of a `g`-fold shifted dual.
pub const fn dual_sign(g: i32) -> i64 {
    if g.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the source block `-∂^A` in a mapping cone.
pub const CONE_SOURCE_SIGN: i64 = -1;
