//! Deterministic seeded sampling of vertex subsets from a finite window.

use crate::hexgrid::{finite_grid, Vertex, VertexSet};
use crate::mix::{mix64, FastSet, GOLDEN_GAMMA};
use crate::{Error, Result};

/// splitmix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform value in `0..n` without rejection (multiply-shift).
    #[inline]
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        ((u128::from(self.next_u64()) * u128::from(n)) >> 64) as u64
    }
}

/// A reproducible stream of uniform size-`size` subsets of the vertices
/// of the finite grid of the given window radius. Sample `i` depends only
/// on `(seed, i)`, so the stream can be consumed in any order.
pub struct SampleStream {
    population: Vec<Vertex>,
    size: usize,
    count: u64,
    seed: u64,
}

impl SampleStream {
    pub fn new(window_radius: u32, size: usize, count: u64, seed: u64) -> Result<Self> {
        if window_radius == 0 || size == 0 || count == 0 {
            return Err(Error::InvalidArguments(
                "window radius, size and count must be positive".into(),
            ));
        }
        let population: Vec<Vertex> = finite_grid(window_radius)?.vertices().iter().collect();
        if size > population.len() {
            return Err(Error::InvalidArguments(format!(
                "sample size {size} exceeds window population {}",
                population.len()
            )));
        }
        Ok(SampleStream {
            population,
            size,
            count,
            seed,
        })
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn population(&self) -> &[Vertex] {
        &self.population
    }

    /// The `index`-th sample: a uniform subset without replacement, via
    /// Floyd's algorithm over the i-th output of the seed stream.
    pub fn get(&self, index: u64) -> VertexSet {
        assert!(index < self.count);
        let mut rng = SplitMix64::new(
            mix64(self.seed ^ index.wrapping_mul(GOLDEN_GAMMA).wrapping_add(1)),
        );
        let n = self.population.len() as u64;
        let k = self.size as u64;
        let mut chosen: FastSet<u64> = FastSet::default();
        for j in (n - k)..n {
            let t = rng.below(j + 1);
            if !chosen.insert(t) {
                chosen.insert(j);
            }
        }
        chosen
            .into_iter()
            .map(|i| self.population[i as usize])
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        (0..self.count).map(|i| self.get(i))
    }
}
