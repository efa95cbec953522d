//! K-promotion on m-packed labelings of finite posets.
//!
//! Posets are stored as validated cover lists over indices `0..n` with
//! bitmask closure caches (`n ≤ 64`). On top of that the crate provides
//! exhaustive enumeration of m-packed labelings, promotion, K-promotion,
//! toggles and rowmotion, orbit decomposition, exact q-analogue and
//! statistic machinery, and a verification harness.

pub mod analysis;
pub mod dynamics;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod ideal;
pub mod io;
pub mod labeling;
pub mod par;
pub mod poset;
pub mod verify;

pub use dynamics::{Decomposition, Operator, Orbit, OrbitDecomposition};
pub use enumerate::{count_packed, enumerate_packed, enumerate_packed_with, LabelingSet, PackedLabelings};
pub use error::{Error, Result};
pub use ideal::Ideal;
pub use labeling::{Label, PackedLabeling};
pub use par::Exec;
pub use poset::Poset;
