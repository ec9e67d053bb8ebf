use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("root {0} listed twice")]
    DuplicateRoot(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathwidthError {
    #[error("instance too large: {n} vertices exceeds the exact-solver cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid path decomposition")]
    InvalidDecomposition,
    #[error("decomposition has width {width}, more than the allowed {limit}")]
    WidthTooLarge { width: usize, limit: usize },
    #[error("window size {ell} outside the admissible range 1..={max}")]
    WindowOutOfRange { ell: usize, max: usize },
    #[error("apex-join part {0} is not connected")]
    DisconnectedPart(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("host graph has {n} vertices; minor search supports at most {limit}")]
    HostTooLarge { n: usize, limit: usize },
    #[error("root arity mismatch: pattern has {pattern} roots, host has {host}")]
    RootArityMismatch { pattern: usize, host: usize },
    #[error("canonical form cap exceeded: {n} vertices > {cap}")]
    CanonTooLarge { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pathwidth(#[from] PathwidthError),
}

impl MinorError {
    /// Budget and size caps, as opposed to malformed input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            MinorError::BudgetExhausted(_)
                | MinorError::HostTooLarge { .. }
                | MinorError::CanonTooLarge { .. }
                | MinorError::Pathwidth(PathwidthError::TooLarge { .. })
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ErdosPosaError {
    #[error("oracle cap exceeded: {n} vertices > {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error("family must be nonempty and every member nonempty")]
    EmptyFamily,
    #[error("family contains no forest")]
    NoForest,
    #[error("constant overflow: {0}")]
    Overflow(String),
    #[error("contrived constants too small: {0}")]
    ConstantsTooSmall(String),
    #[error("hypothesis unsatisfied: {0}")]
    Hypothesis(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Pathwidth(#[from] PathwidthError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ErdosPosaError {
    pub fn is_budget(&self) -> bool {
        match self {
            ErdosPosaError::OracleCap { .. } | ErdosPosaError::Overflow(_) => true,
            ErdosPosaError::Minor(e) => e.is_budget(),
            ErdosPosaError::Pathwidth(e) => matches!(e, PathwidthError::TooLarge { .. }),
            _ => false,
        }
    }
}
