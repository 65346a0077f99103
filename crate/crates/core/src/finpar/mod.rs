//! Finite sets and partial functions: the concrete model everything else is
//! measured against.

mod elem;
mod map;
mod model;
mod object;

pub use elem::Elem;
pub use map::PartialMap;
pub use model::FinParModel;
pub use object::{Construction, FinSet};
