//! Object words, matchings, sliced tangle diagrams and PD codes.

pub mod lift;
pub mod matching;
pub mod pd;
pub mod sliced;
pub mod word;

pub use lift::positive_lift;
pub use matching::{enumerate_matchings, Endpoint, Matching};
pub use pd::{PdCrossing, PdDiagram};
pub use sliced::{Generator, Layer, Sign, SlicedDiagram};
pub use word::{ObjectWord, Orientation};

/// Closed diagram obtained by joining each top point to the bottom point below it.
pub fn closure(d: &SlicedDiagram) -> crate::Result<PdDiagram> {
    crate::tangle::Tangle::from_sliced(d).closure()?.to_pd()
}
