//! Counting special unipotent representations of real classical groups.
//!
//! The input is always a nilpotent orbit of the dual group, given as a
//! Young diagram with a label selecting the real form family. Counts are
//! computed by three routes that can be played against each other:
//! enumeration of painted bipartitions ([`paint`]), generating-function
//! recursion along descents ([`genfun`], [`descent`]), and multiplicities in
//! coherent-continuation representations of Weyl groups ([`weyl`], [`oracle`]).

pub mod cells;
pub mod check;
pub mod count;
pub mod descent;
pub mod diagram;
pub mod duality;
pub mod genfun;
pub mod oracle;
pub mod paint;
pub mod parity;
pub mod realforms;
pub mod weyl;

pub use diagram::{AlgebraFamily, YoungDiagram};
pub use parity::{GroupForm, Label, OrbitSpec, Variant};
