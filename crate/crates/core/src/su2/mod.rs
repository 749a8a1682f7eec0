//! Group presentations, exact abelianization, and a numerical search for
//! irreducible SU(2) representations.

pub mod presentation;
pub mod quaternion;
pub mod search;
pub mod smith;

pub use presentation::{
    lens_presentation, surgery_presentation, torus_knot_group, torus_peripheral_words,
    GroupPresentation, Word,
};
pub use quaternion::Quaternion;
pub use search::{
    classify_image, defect, defect_gradient, evaluate_word, irreducibility_margin, is_irreducible,
    minimize_defect, search_irreducible, ImageClass, QuaternionAssignment, RepSearchResult,
    DEFAULT_EPS, DEFAULT_RESTARTS, DEFAULT_TOL, NEGATIVE_RESULT_DISCLAIMER,
};
pub use smith::{abelianization_smith, smith_diagonal};
