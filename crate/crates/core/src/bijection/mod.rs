//! Structural maps on domino tableaux and the closed-form counters.

mod counts;
mod gamma;
mod phi;
mod quotient;

pub use counts::{
    catalan_composition_count, count_domino_tableaux, count_hook, count_rectangle,
    count_rectangular, fibonacci_composition_count, hook_lengths, num_syt, rectangular_breakdown,
    RectangularCount,
};
pub use gamma::{classify_types, gamma, DominoType, GammaImage, IncreasingTableau, TypedDomino};
pub use phi::{
    from_word, hv_split, phi, phi_inverse, reduced_subset, tableau_from_bottom_labels, to_word,
    SubsetState,
};
pub use quotient::{beta_numbers, has_empty_two_core, two_quotient, QuotientPair};
