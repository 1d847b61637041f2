//! Small mixing helpers shared by the hasher, canonical digests and the
//! deterministic sampler.

use std::collections::HashSet;
use std::hash::{BuildHasherDefault, Hasher};

pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Cheap non-cryptographic hasher for vertex coordinates.
#[derive(Default)]
pub struct CoordHasher(u64);

impl Hasher for CoordHasher {
    #[inline]
    fn finish(&self) -> u64 {
        self.0
    }

    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = mix64(self.0 ^ u64::from(b));
        }
    }

    #[inline]
    fn write_i32(&mut self, v: i32) {
        self.0 = mix64(self.0 ^ (v as u32 as u64));
    }
}

pub type FastSet<T> = HashSet<T, BuildHasherDefault<CoordHasher>>;
