//! Biquaternion algebra, quaternion-valued differential forms, twistor and
//! ambitwistor geometry, and frustrated conformal transformations.
//!
//! Every value is immutable and every operation is a pure function, so the
//! whole crate can be used freely from several threads.

pub mod ambitwistor;
pub mod error;
pub mod fct;
pub mod field;
pub mod forms;
pub mod jet;
pub mod linalg;
pub mod moebius;
pub mod quat;
pub mod twistor;

pub use error::{Error, Result};
pub use field::Field;
pub use forms::{QOneForm, QTwoForm};
pub use quat::{Biquaternion, ConjKind, Quaternion, UnitImaginary};
