//! Exact desk-scale reasoning for four propositional non-monotonic
//! formalisms — default logic, autoepistemic logic, circumscription and
//! abduction — together with a Boolean clone classifier, a constraint
//! language classifier, and a complexity-prediction dispatcher built on top
//! of the two classifiers.
//!
//! Everything is computed exactly by finite enumeration under explicit caps;
//! exceeding a cap is a hard error, never a silent truncation. All values
//! are immutable after construction and every operation is pure, so the
//! types can be shared freely across threads.

pub mod dispatch;
pub mod error;
pub mod files;
pub mod formula;
pub mod func;
pub mod abduction;
pub mod ael;
pub mod circ;
pub mod default_logic;
pub mod post;
pub mod relations;
pub mod theory;

pub use error::{Error, Result};
