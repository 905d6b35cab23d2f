//! Grassmann-bundle pushforwards: the localization sum, the residue
//! integral, and the checks tying both to lattice partition functions and
//! skew Grothendieck polynomials.

pub mod guo_sun;
pub mod localization;
pub mod params;
pub mod residue;
pub mod special;

pub use crate::compare::{Comparison, Mode};
pub use guo_sun::{guo_sun_check, GuoSunVariant};
pub use localization::{
    class_g, class_g_matches_lattice, localization_pushforward, pushforward_target, verify_pushforward,
    zdb_expansion_check,
};
pub use params::{random_class, sample_alpha, AlphaAssignment, GrothClassExpr, PushforwardParams};
pub use residue::{residue_contributions, residue_pushforward};
pub use special::{special_case, SpecialCase};

/// Membership masks of the `k`-subsets of `[n]`, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<bool>> {
    use itertools::Itertools;
    (0..n)
        .combinations(k)
        .map(|s| {
            let mut mask = vec![false; n];
            for i in s {
                mask[i] = true;
            }
            mask
        })
        .collect()
}
