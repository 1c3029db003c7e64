//! Support τ-tilting pairs of special biserial algebras via string
//! combinatorics.

mod catalog;
mod hasse;
mod pairs;
mod strings;

pub use catalog::{indecomposable_catalog, Catalog, CatalogEntry};
pub use hasse::{hasse_quiver, CountReport, HasseQuiver};
pub use pairs::{
    compatible, default_string_len, enumerate_stt_pairs, exchange_graph, Certificate, Summand, SttEnumeration,
    SttOptions, SttPair,
};
pub use strings::{
    detect_bands, enumerate_strings, string_quotient, Letter, StringRules, StringWord,
    DEFAULT_MAX_STRINGS,
};

use thiserror::Error;

use crate::gentle::GentleReport;
use crate::presentation::PresentationError;
use crate::repmod::ModuleError;

#[derive(Debug, Error)]
pub enum SttError {
    #[error("algebra is not special biserial\n{0}")]
    NotSpecialBiserial(GentleReport),
    #[error("infinitely many strings; band {witness}")]
    Infinite { witness: String },
    #[error(
        "presumed τ-tilting infinite: band {witness}; strings up to length {max_string_len} \
         gave {found} pairs without closing the exchange graph"
    )]
    PresumedInfinite {
        witness: String,
        max_string_len: usize,
        found: usize,
    },
    #[error("more than {limit} strings")]
    StringCap { limit: usize },
    #[error("inconsistent mutation order: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}
