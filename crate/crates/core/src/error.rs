use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Domain violations raised by the numerical operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The product of the four isotropic coordinates is negative, so the
    /// fourth root defining the H4 interval is not real.
    #[error("negative quartic form: product of isotropic coordinates is {product}")]
    NegativeQuarticForm { product: f64 },

    /// The cubic form of H3 is negative.
    #[error("negative cubic form: product of isotropic coordinates is {product}")]
    NegativeForm { product: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    /// Offset lies on or outside the ball `r < T` where the simultaneity
    /// cubic has a unique real root.
    #[error("offset outside domain: r^2 = {r2} is not below T^2 = {t2}")]
    OutsideDomain { r2: f64, t2: f64 },

    /// Surface value `S^4` outside `[0, T^4]`.
    #[error("outside causal region: S^4 = {s4} not in [0, T^4 = {t4}]")]
    OutsideCausalRegion { s4: f64, t4: f64 },

    #[error("superluminal velocity: smallest cone factor is {min_factor}")]
    Superluminal { min_factor: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Exponents of a group element do not sum to zero.
    #[error("invalid group element: exponents sum to {sum}, expected 0")]
    InvalidGroupElement { sum: f64 },

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    /// Short machine-readable name, used as a status string in output records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NegativeQuarticForm { .. } => "negative_quartic_form",
            Error::NegativeForm { .. } => "negative_form",
            Error::Domain(_) => "domain_error",
            Error::OutsideDomain { .. } => "outside_domain",
            Error::OutsideCausalRegion { .. } => "outside_causal_region",
            Error::Superluminal { .. } => "superluminal",
            Error::Degenerate(_) => "degenerate",
            Error::InvalidGroupElement { .. } => "invalid_group_element",
            Error::Config(_) => "config_error",
        }
    }
}
