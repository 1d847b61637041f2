//! The three perimeter measures (neighbor vertices, boundary vertices,
//! outgoing edges), gray-row counts, and outermost-neighbor analysis.

use std::collections::BTreeMap;

use crate::hexgrid::{
    neighbors, row_key, row_position, row_vertex, Direction, Edge, FiniteGrid, Vertex, VertexSet,
};
use crate::{Error, Result};

/// Where the complement is taken when measuring a set's perimeter.
#[derive(Clone, Debug)]
pub enum Region {
    Infinite,
    Finite(FiniteGrid),
}

impl Region {
    pub fn finite(grid: FiniteGrid) -> Region {
        Region::Finite(grid)
    }

    fn contains(&self, v: &Vertex) -> bool {
        match self {
            Region::Infinite => true,
            Region::Finite(g) => g.vertices().contains(v),
        }
    }

    fn check_contains(&self, w: &VertexSet) -> Result<()> {
        match self {
            Region::Infinite => Ok(()),
            Region::Finite(g) => {
                if w.is_subset(g.vertices()) {
                    Ok(())
                } else {
                    Err(Error::Containment)
                }
            }
        }
    }
}

/// Vertices outside `W` (but inside the region) adjacent to `W`.
pub fn neighbor_set(w: &VertexSet, region: &Region) -> Result<VertexSet> {
    region.check_contains(w)?;
    let black = w.to_fast_set();
    let mut out = VertexSet::new();
    for v in w.iter() {
        for n in neighbors(v) {
            if !black.contains(&n) && region.contains(&n) {
                out.insert(n);
            }
        }
    }
    Ok(out)
}

/// Vertices of `W` adjacent to the complement (taken within the region).
pub fn boundary_set(w: &VertexSet, region: &Region) -> Result<VertexSet> {
    region.check_contains(w)?;
    let black = w.to_fast_set();
    let mut out = VertexSet::new();
    for v in w.iter() {
        if neighbors(v)
            .into_iter()
            .any(|n| !black.contains(&n) && region.contains(&n))
        {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Edges from `W` to its complement within the region.
pub fn cut_edges(w: &VertexSet, region: &Region) -> Result<Vec<Edge>> {
    region.check_contains(w)?;
    let black = w.to_fast_set();
    let mut out = Vec::new();
    for v in w.iter() {
        for n in neighbors(v) {
            if !black.contains(&n) && region.contains(&n) {
                out.push(Edge::new(v, n).expect("neighbors are adjacent"));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Neighbors of `W ⊆ V(G_r)` lying outside the finite grid.
pub fn outside_neighbor_set(w: &VertexSet, grid: &FiniteGrid) -> Result<VertexSet> {
    if !w.is_subset(grid.vertices()) {
        return Err(Error::Containment);
    }
    let black = w.to_fast_set();
    let mut out = VertexSet::new();
    for v in w.iter() {
        for n in neighbors(v) {
            if !black.contains(&n) && !grid.vertices().contains(&n) {
                out.insert(n);
            }
        }
    }
    Ok(out)
}

/// Number of gray rows of `W` per direction: the distinct row keys its
/// vertices occupy.
pub fn gray_row_counts(w: &VertexSet) -> Result<(usize, usize, usize)> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let count = |d: Direction| {
        let mut keys: Vec<i32> = w.iter().map(|v| row_key(v, d)).collect();
        keys.sort_unstable();
        keys.dedup();
        keys.len()
    };
    Ok((
        count(Direction::D1),
        count(Direction::D2),
        count(Direction::D3),
    ))
}

/// For each gray row of direction `d`, the two white vertices immediately
/// beyond the extreme black vertices of that row. Exactly `2·l_d` vertices.
pub fn outermost_neighbors(w: &VertexSet, d: Direction) -> Result<VertexSet> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut extent: BTreeMap<i32, (i32, i32)> = BTreeMap::new();
    for v in w.iter() {
        let key = row_key(v, d);
        let pos = row_position(v, d);
        extent
            .entry(key)
            .and_modify(|(lo, hi)| {
                *lo = (*lo).min(pos);
                *hi = (*hi).max(pos);
            })
            .or_insert((pos, pos));
    }
    let mut out = VertexSet::new();
    for (key, (lo, hi)) in extent {
        out.insert(row_vertex(d, key, lo - 1));
        out.insert(row_vertex(d, key, hi + 1));
    }
    Ok(out)
}

/// For every vertex that is an outermost neighbor of some direction, the
/// number of directions (1..=3) for which it is outermost.
pub fn outermost_multiplicity(w: &VertexSet) -> Result<BTreeMap<Vertex, u8>> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut mult = BTreeMap::new();
    for d in Direction::ALL {
        for v in outermost_neighbors(w, d)?.iter() {
            *mult.entry(v).or_insert(0u8) += 1;
        }
    }
    Ok(mult)
}

/// Exact perimeter counts of one set under one region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerimeterReport {
    pub n_count: usize,
    pub b_count: usize,
    pub e_count: usize,
    pub l: (usize, usize, usize),
}

impl PerimeterReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n_count,
            "b": self.b_count,
            "e": self.e_count,
            "l": [self.l.0, self.l.1, self.l.2],
        })
    }
}

/// All measures of `W` at once. The empty set reports all-zero counts.
pub fn report(w: &VertexSet, region: &Region) -> Result<PerimeterReport> {
    if w.is_empty() {
        region.check_contains(w)?;
        return Ok(PerimeterReport {
            n_count: 0,
            b_count: 0,
            e_count: 0,
            l: (0, 0, 0),
        });
    }
    Ok(PerimeterReport {
        n_count: neighbor_set(w, region)?.len(),
        b_count: boundary_set(w, region)?.len(),
        e_count: cut_edges(w, region)?.len(),
        l: gray_row_counts(w)?,
    })
}
