//! Quadricell maps, complete-graph embeddings and their census.

pub mod census;
pub mod complete;
pub mod error;
pub mod map;
pub mod perm;

pub use census::{BetaVariant, CensusError, CensusReport, Method};
pub use complete::{EmbeddingCode, LiftedAction, Sign, SurfaceKind};
pub use error::{BudgetExceeded, CodeError, MapError, ParseError, PermError};
pub use map::{FlagSet, Map, MapMorphism, Mode, ModeFilter, SurfaceType};
pub use perm::{CycleType, Permutation};
