//! Exact truncated q-series kernel and the identity layer built on it.

pub mod identities;
pub mod laurent;
pub mod recurrences;
pub mod series;

pub use identities::{PolyMismatch, SeriesMismatch};
pub use laurent::{LaurentPoly, QBinomialTable};
pub use series::{Caps, Mono, PochLength, Series, DEFAULT_TRACKER_CAP};
