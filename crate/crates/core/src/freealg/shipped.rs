//! Presentations shipped with the crate, embedded as data files.
//!
//! Each loader parses its file once and caches the result, so every caller
//! shares one presentation instance (element arithmetic requires identical
//! presentations, not merely equal ones).

use super::file::{parse_alg, AlgFile};
use super::Presentation;
use once_cell::sync::Lazy;

macro_rules! shipped {
    ($(#[$doc:meta])* $fn_name:ident, $file:literal) => {
        $(#[$doc])*
        pub fn $fn_name() -> Presentation {
            static CACHE: Lazy<AlgFile> = Lazy::new(|| {
                parse_alg(include_str!(concat!("../../data/", $file)))
                    .unwrap_or_else(|e| panic!("shipped file {} is invalid: {e}", $file))
            });
            CACHE.presentation.clone()
        }
    };
}

shipped!(
    /// Commutative sphere in projector coordinates (a, b, bs).
    classical,
    "classical.alg"
);
shipped!(
    /// Fuzzy sphere in Cartesian coordinates (x₁, x₂, x₃).
    fuzzy,
    "fuzzy.alg"
);
shipped!(
    /// q-deformed sphere in projector coordinates; λ -> 0 member of the
    /// q-fuzzy family.
    qsphere,
    "qsphere.alg"
);
shipped!(
    /// q-fuzzy sphere: two-parameter (q, λ) sphere.
    qfuzzy,
    "qfuzzy.alg"
);
shipped!(
    /// Two-parameter quantum sphere in the x, z coordinates.
    podles,
    "podles.alg"
);
shipped!(
    /// Braided 2x2 matrices with hermitian star.
    bqm2,
    "bqm2.alg"
);
shipped!(
    /// Braided SU(2): braided matrices with braided determinant 1.
    bqsu2,
    "bqsu2.alg"
);
shipped!(
    /// Coordinate algebra of quantum SU(2).
    cqsu2,
    "cqsu2.alg"
);
shipped!(
    /// Quantized enveloping algebra of su(2).
    uqsu2,
    "uqsu2.alg"
);

/// Source text of a shipped presentation file, addressed by file name (with
/// or without the `.alg` suffix).
pub fn source(name: &str) -> Option<&'static str> {
    let stem = name.strip_suffix(".alg").unwrap_or(name);
    Some(match stem {
        "classical" => include_str!("../../data/classical.alg"),
        "fuzzy" => include_str!("../../data/fuzzy.alg"),
        "qsphere" => include_str!("../../data/qsphere.alg"),
        "qfuzzy" => include_str!("../../data/qfuzzy.alg"),
        "podles" => include_str!("../../data/podles.alg"),
        "bqm2" => include_str!("../../data/bqm2.alg"),
        "bqsu2" => include_str!("../../data/bqsu2.alg"),
        "cqsu2" => include_str!("../../data/cqsu2.alg"),
        "uqsu2" => include_str!("../../data/uqsu2.alg"),
        _ => return None,
    })
}

/// File names of all shipped presentations.
pub fn names() -> &'static [&'static str] {
    &[
        "classical", "fuzzy", "qsphere", "qfuzzy", "podles", "bqm2", "bqsu2", "cqsu2", "uqsu2",
    ]
}
