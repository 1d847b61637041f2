//! Enumeration and sampling engines: connected-class enumeration of the
//! infinite grid, exhaustive subset scans of small finite grids, seeded
//! random sampling, isoperimetric profiles and the ratio scan.

pub mod canonical;
pub mod connected;
pub mod profile;
pub mod region;
pub mod sample;

pub use canonical::CanonicalSet;
pub use connected::{count_connected_classes, visit_connected, MAX_CONNECTED_SIZE};
pub use profile::{profile, Measure, ProfileRow};
pub use region::{conjecture_scan, visit_region_subsets, RegionMasks, ScanResult};
pub use sample::{SampleStream, SplitMix64};
