//! Error type shared by all modules.

/// Failures reported by the solvers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The shunt admittance `G + jωC` vanishes, so `Z0` is undefined.
    #[error("shunt admittance is zero; characteristic impedance undefined")]
    ZeroAdmittance,
    /// Dimensions violate the geometry's constraints or formula branch.
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    /// An input is outside its documented domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A formula hits a nonphysical pole, such as `ZL = -Z0`.
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    /// A mapping is evaluated at its pole.
    #[error("pole: {0}")]
    Pole(String),
    /// No real solution exists.
    #[error("no solution: {0}")]
    NoSolution(String),
    /// An inverse problem has several branches and none was selected.
    #[error("branch ambiguity: {0}")]
    BranchAmbiguity(String),
    /// The requested quantity does not exist for this setup.
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// Both field amplitudes vanish.
    #[error("field amplitudes are zero")]
    ZeroField,
    /// The acoustic source moves at or above the wave speed.
    #[error("source speed reaches or exceeds the wave speed")]
    SupersonicSource,
    /// The field has a component along the propagation direction.
    #[error("field is not transverse to the propagation direction")]
    NotTransverse,
    /// Mode indices are not allowed for the family or guide.
    #[error("invalid mode: {0}")]
    InvalidMode(String),
    /// The operating frequency does not exceed the mode cutoff.
    #[error("frequency {f} Hz is at or below cutoff {f_c} Hz")]
    BelowCutoff {
        /// Operating frequency, Hz.
        f: f64,
        /// Cutoff frequency, Hz.
        f_c: f64,
    },
    /// The mode is absent from the root table.
    #[error("unknown mode: {0}")]
    UnknownMode(String),
    /// The combination is not modelled.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Result alias using [`Error`].
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
