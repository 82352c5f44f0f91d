use crate::schreier::Generator;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("vertex {vertex} has degree {degree}, exceeding the bound {bound}")]
    DegreeBound { vertex: usize, degree: usize, bound: usize },

    #[error("weight vector has {len} entries for a graph on {n} vertices")]
    WeightLength { len: usize, n: usize },

    #[error("component bound k must be at least 1")]
    InvalidK,

    #[error("threshold eps must be nonnegative")]
    NegativeEps,

    #[error("graph has no vertices")]
    NoVertices,

    #[error("graph has {n} vertices, above the exhaustive cap of {cap}; use the multiplicative-weights path or raise the cap")]
    SizeLimit { n: usize, cap: usize },

    #[error("generator {generator} is not an involution: it moves {point} to {image}, which does not map back")]
    NotInvolution { generator: Generator, point: usize, image: usize },

    #[error("generator {generator} has {len} images, expected {n}")]
    ActionLength { generator: Generator, len: usize, n: usize },

    #[error("generator {generator} maps {point} to {image}, outside 0..{n}")]
    ActionOutOfRange { generator: Generator, point: usize, image: usize, n: usize },

    #[error("an action needs at least one point")]
    EmptyAction,

    #[error("cycle family needs an even length of at least 2, got {0}")]
    OddCycleLength(usize),

    #[error("round count must be at least 1")]
    NoRounds,

    #[error("certificate rejected: {0}")]
    CertificateRejected(&'static str),
}
