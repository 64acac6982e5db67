//! Exact polynomial stability analysis.
//!
//! Half-plane root counting through Cauchy indices, the Hermite-Biehler
//! stability test together with interlacing certificates for polynomials
//! that are not stable, inverse sign rules for polynomials with one
//! positive root, and nonnegative realizations of spectra with a single
//! positive entry. Everything in the library is computed in exact rational
//! arithmetic; [`oracle`] is a separate numeric root finder used only to
//! cross-check results.

pub mod error;
pub mod halfplane;
pub mod niep;
pub mod oracle;
pub mod poly;
pub mod signrules;
pub mod sturm;

pub use error::{Error, Result};
pub use poly::{
    elementary_symmetric, even_odd_split, gcd, hb_polynomials, square_free_decomposition,
    GaussianRational, Rational, RationalPolynomial, Sign,
};
pub use sturm::{
    cauchy_index, compare_roots, count_real_roots, isolate_real_roots, sign_variations,
    AlgebraicRoot, Bound, RootLocation, SturmChain,
};
pub use halfplane::{
    half_plane_counts, interlacing_certificate, is_hurwitz_stable, extend_certificate,
    HalfPlaneCount, InterlacingCertificate, StabilityReport,
};
pub use niep::{
    characteristic_polynomial, companion_matrix, complex_spectrum_check, coefficient_tail_check,
    real_spectrum_check, realize_shifted, FailedCondition, Matrix, RealizationResult,
    SpectrumCandidate,
};
pub use signrules::{
    alternate_sign_violation, check_alternate_sign_rule, check_parity_sign_rule,
    degenerate_family, degenerate_form, descartes_bound, newton_like, obreschkoff_wedge,
    parity_sign_pattern, shifted_pair_family, with_positive_root, DescartesBound, EqualityClass,
    NewtonEqualityClass, NewtonPair, Parity, ParitySignPattern, PatternVerdict,
};
pub use oracle::{
    axis_root_count, numeric_half_plane_counts, numeric_half_plane_counts_from, numeric_roots,
    NumericRoot,
};
