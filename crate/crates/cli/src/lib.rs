//! IO companion to `kfk-core`: JSON verdict schemas and the exhaustive
//! fibration sweep with CSV output.

pub mod json;
pub mod sweep;
