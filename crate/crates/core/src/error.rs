use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// An exhaustive search gave up after exhausting its node budget.
///
/// Refusals are never an answer: callers must not read them as "no".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: search budget of {limit} nodes exhausted")]
pub struct Refused {
    pub what: &'static str,
    pub limit: u64,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Refused(#[from] Refused),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The input has `K_{1,q}` as an induced minor: `independent` is an
    /// independent `q`-set and every one of its vertices has a neighbour in
    /// the component `component` of the remaining graph.
    #[error("graph has K_{{1,{q}}} as an induced minor (S = {independent:?}, C = {component:?})")]
    InducedStar {
        q: usize,
        independent: Vec<usize>,
        component: Vec<usize>,
    },
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
