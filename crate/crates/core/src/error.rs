use thiserror::Error;

/// Everything that can go wrong while ingesting, cutting or factoring a disk.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("board has no cells")]
    EmptyBoard,
    #[error("region is not a disk: {0}")]
    NotADisk(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("slot {slot} of square {square} is glued more than once")]
    DoubleGluing { square: usize, slot: u8 },
    #[error("complex is not a disk: {0}")]
    NonDisk(String),
    #[error("interior vertex {vertex} lies in {degree} squares, expected 4")]
    InteriorDegreeViolation { vertex: usize, degree: usize },
    #[error("dual graph is not bipartite")]
    NotBipartite,
    #[error("census identity fails: {0}")]
    CensusViolation(String),
    #[error("vertex {0} is not a corner")]
    NotACorner(usize),
    #[error("diagonal from corner {0} repeats a vertex or square")]
    RepeatDetected(usize),
    #[error("diagonal from corner {0} is not good")]
    NotGoodDiagonal(usize),
    #[error("square {0} is reachable from both sides of the diagonal")]
    AmbiguousSide(usize),
    #[error("labeling is not a bijection onto the {0} squares")]
    BadLabeling(&'static str),
    #[error("cut-and-paste bookkeeping is inconsistent: {0}")]
    InconsistentMap(String),
    #[error("witness identity does not hold")]
    WitnessInvalid,
    #[error("computed middle block differs from the adjacency of the pasted region")]
    MiddleMismatch,
    #[error("product of the factors differs from the adjacency matrix")]
    ProductMismatch,
    #[error("factor entry {0} outside {{-1, 0, 1}}")]
    EntryOutOfRange(i64),
    #[error("disk has a single square; its black-to-white matrix is degenerate")]
    SingleSquare,
    #[error("matrix is {rows}x{cols}, determinant needs a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("system has no rational solution")]
    NoRationalSolution,
    #[error("disk has {black} black and {white} white squares")]
    NonSquareDisk { black: usize, white: usize },
    #[error("tiling disrespects a wedge of the diagonal")]
    NotInR,
    #[error("tiling is inconsistent with the disk: {0}")]
    InconsistentTiling(String),
    #[error("cut-and-paste along an excellent diagonal left the lattice: {0}")]
    BoardClosure(String),
    #[error("{0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyBoard => "EmptyBoard",
            Error::NotADisk(_) => "NotADisk",
            Error::Parse { .. } => "Parse",
            Error::DoubleGluing { .. } => "DoubleGluing",
            Error::NonDisk(_) => "NonDisk",
            Error::InteriorDegreeViolation { .. } => "InteriorDegreeViolation",
            Error::NotBipartite => "NotBipartite",
            Error::CensusViolation(_) => "CensusViolation",
            Error::NotACorner(_) => "NotACorner",
            Error::RepeatDetected(_) => "RepeatDetected",
            Error::NotGoodDiagonal(_) => "NotGoodDiagonal",
            Error::AmbiguousSide(_) => "AmbiguousSide",
            Error::BadLabeling(_) => "BadLabeling",
            Error::InconsistentMap(_) => "InconsistentMap",
            Error::WitnessInvalid => "WitnessInvalid",
            Error::MiddleMismatch => "MiddleMismatch",
            Error::ProductMismatch => "ProductMismatch",
            Error::EntryOutOfRange(_) => "EntryOutOfRange",
            Error::SingleSquare => "SingleSquare",
            Error::NonSquare { .. } => "NonSquare",
            Error::NoRationalSolution => "NoRationalSolution",
            Error::NonSquareDisk { .. } => "NonSquareDisk",
            Error::NotInR => "NotInR",
            Error::InconsistentTiling(_) => "InconsistentTiling",
            Error::BoardClosure(_) => "BoardClosure",
            Error::Usage(_) => "Usage",
            Error::Io(_) => "Io",
        }
    }

    /// Source line for parse errors, if known.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
