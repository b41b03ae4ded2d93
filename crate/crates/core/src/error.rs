use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("byte {byte} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("input ends before the encoded graph is complete")]
    TruncatedInput,
    #[error("{0} unexpected byte(s) after the encoded graph")]
    TrailingGarbage(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    TooLarge(usize),

    #[error("graph is disconnected")]
    Disconnected,
    #[error("work budget of {limit} recursion nodes exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("root set is empty")]
    EmptyRoot,
    #[error("root set does not induce a connected subgraph")]
    RootNotConnected,
    #[error("vertex {0} is not a cut vertex")]
    NotACutVertex(usize),
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
}

impl Error {
    /// True for errors raised while decoding graph input.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::ByteOutOfRange { .. }
                | Error::TruncatedInput
                | Error::TrailingGarbage(_)
                | Error::DuplicateEdge(..)
                | Error::SelfLoop(_)
                | Error::VertexOutOfRange { .. }
                | Error::Malformed(_)
                | Error::TooLarge(_)
        )
    }
}
