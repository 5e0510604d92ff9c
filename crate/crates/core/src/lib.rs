//! Exact computational machinery for integral group rings of finite groups:
//! presentations with a solved word problem, group-ring matrices and their
//! invertibility, certificates of elementary equivalence, extension groups of
//! conjugate-factor presentations, and bounded exhaustive searches over them.

pub mod cohen;
pub mod coset;
pub mod error;
pub mod extension;
pub mod groups;
pub mod hom;
pub mod intmat;
pub mod json;
pub mod matrix;
pub mod presentation;
pub mod ring;
pub mod search;
pub mod snf;
pub mod table;
pub mod whitehead;
pub mod word;

pub use error::{Error, Result};
pub use presentation::GroupPresentation;
pub use table::{FiniteGroupTable, PresentedGroup};
pub use word::FreeWord;
