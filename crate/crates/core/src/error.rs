use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no primitive generator")]
    ZeroVector,
    #[error("vector {0} is not primitive")]
    NotPrimitive(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("not a circuit: {0}")]
    NotACircuit(String),
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("point lies outside the support of the fan")]
    OutsideSupport,
    #[error("cone containing the subdivision ray is not simplicial")]
    NonSimplicialCarrier,
    #[error("fans have different supports")]
    SupportMismatch,
    #[error("cone is not in the fan")]
    ConeNotInFan,
    #[error("orbit is pointwise fixed")]
    OrbitFixed,
    #[error("not a cobordism: {0}")]
    NotACobordism(String),
    #[error("not π-injective: {0}")]
    NotPiInjective(String),
    #[error("quotient is not geometric: {0}")]
    QuotientNotGeometric(String),
    #[error("fixed component {0} is not minimal")]
    NotMinimal(usize),
    #[error("non-elementary component: {0}")]
    NonElementary(String),
    #[error("cobordism is not collapsible: components {cycle:?} form a cycle")]
    NonCollapsible { cycle: Vec<usize> },
    #[error("collapse disagrees with star closure: {0}")]
    CollapseInconsistent(String),
    #[error("wrong move kind: {0}")]
    WrongMoveKind(String),
    #[error("replay mismatch at step {step}: {detail}")]
    ReplayMismatch { step: usize, detail: String },
    #[error("construction invalid for input: {0}")]
    ConstructionInvalid(String),
    #[error("inconsistent gluing: {0}")]
    InconsistentGluing(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("malformed json: {0}")]
    Json(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroVector => "zero_vector",
            Error::NotPrimitive(_) => "not_primitive",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::NotACircuit(_) => "not_a_circuit",
            Error::DependentGenerators => "dependent_generators",
            Error::InvalidCone(_) => "invalid_cone",
            Error::InvalidFan(_) => "invalid_fan",
            Error::OutsideSupport => "outside_support",
            Error::NonSimplicialCarrier => "non_simplicial_carrier",
            Error::SupportMismatch => "support_mismatch",
            Error::ConeNotInFan => "cone_not_in_fan",
            Error::OrbitFixed => "orbit_fixed",
            Error::NotACobordism(_) => "not_a_cobordism",
            Error::NotPiInjective(_) => "not_pi_injective",
            Error::QuotientNotGeometric(_) => "quotient_not_geometric",
            Error::NotMinimal(_) => "not_minimal",
            Error::NonElementary(_) => "non_elementary",
            Error::NonCollapsible { .. } => "non_collapsible",
            Error::CollapseInconsistent(_) => "collapse_inconsistent",
            Error::WrongMoveKind(_) => "wrong_move_kind",
            Error::ReplayMismatch { .. } => "replay_mismatch",
            Error::ConstructionInvalid(_) => "construction_invalid",
            Error::InconsistentGluing(_) => "inconsistent_gluing",
            Error::InvalidInput(_) => "invalid_input",
            Error::Json(_) => "malformed_json",
        }
    }
}
