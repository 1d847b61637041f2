//! Integer coordinate model of the infinite honeycomb grid, its three edge
//! classes, the row decomposition and the finite grids.
//!
//! Vertices live on the "brick wall" lattice: every vertex `(x, y)` has the
//! two horizontal neighbors `(x-1, y)` and `(x+1, y)`, and one vertical
//! neighbor whose side is determined by the parity of `x + y` (up for even,
//! down for odd). This gives every vertex degree 3 and makes the three
//! row-key functions closed-form integer expressions.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::mix::FastSet;
use crate::{Error, Result};

/// A grid vertex in brick-wall coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub x: i32,
    pub y: i32,
}

impl Vertex {
    pub const fn new(x: i32, y: i32) -> Self {
        Vertex { x, y }
    }

    /// 0 for even `x + y`, 1 for odd.
    #[inline]
    pub fn parity(self) -> i32 {
        (self.x + self.y).rem_euclid(2)
    }

    #[inline]
    pub fn translated(self, dx: i32, dy: i32) -> Self {
        Vertex::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The three neighbors of a vertex.
#[inline]
pub fn neighbors(v: Vertex) -> [Vertex; 3] {
    let vertical = if v.parity() == 0 {
        Vertex::new(v.x, v.y + 1)
    } else {
        Vertex::new(v.x, v.y - 1)
    };
    [Vertex::new(v.x - 1, v.y), Vertex::new(v.x + 1, v.y), vertical]
}

#[inline]
pub fn are_adjacent(u: Vertex, v: Vertex) -> bool {
    neighbors(u).contains(&v)
}

/// One of the three parallel edge classes. Removing all edges of one
/// direction splits the grid into disjoint infinite rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    D1,
    D2,
    D3,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::D1, Direction::D2, Direction::D3];

    pub fn index(self) -> u8 {
        match self {
            Direction::D1 => 1,
            Direction::D2 => 2,
            Direction::D3 => 3,
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Direction::D1),
            2 => Ok(Direction::D2),
            3 => Ok(Direction::D3),
            _ => Err(Error::InvalidArguments(format!("no direction {i}"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// An undirected grid edge, endpoints stored in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        if !are_adjacent(a, b) {
            return Err(Error::InvalidEdge(a, b));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge { u, v })
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }
}

/// Edge class of an edge: vertical edges are direction 3; horizontal edges
/// split by the parity of their left endpoint into directions 1 (even) and
/// 2 (odd). The three edges at any vertex carry three distinct directions.
pub fn edge_direction(e: &Edge) -> Direction {
    let (u, v) = e.endpoints();
    if u.x == v.x {
        Direction::D3
    } else {
        // u is the left endpoint by the canonical ordering
        debug_assert_eq!(u.x + 1, v.x);
        if u.parity() == 0 {
            Direction::D1
        } else {
            Direction::D2
        }
    }
}

/// Index of the row of direction `d` that contains `v`. Adjacent vertices
/// joined by an edge *not* of direction `d` share the key; an edge of
/// direction `d` changes the key by exactly one.
#[inline]
pub fn row_key(v: Vertex, d: Direction) -> i32 {
    match d {
        Direction::D1 => (v.y - v.x).div_euclid(2),
        Direction::D2 => (v.x + v.y).div_euclid(2),
        Direction::D3 => v.y,
    }
}

/// Position of `v` along its row of direction `d`. Consecutive positions
/// are adjacent vertices of the row path.
#[inline]
pub fn row_position(v: Vertex, d: Direction) -> i32 {
    match d {
        Direction::D1 => v.x + v.y,
        Direction::D2 => v.x - v.y,
        Direction::D3 => v.x,
    }
}

/// Inverse of (`row_key`, `row_position`): the vertex of row (`d`, `key`)
/// at position `pos`.
pub fn row_vertex(d: Direction, key: i32, pos: i32) -> Vertex {
    match d {
        Direction::D3 => Vertex::new(pos, key),
        Direction::D1 => {
            // t = y - x has the parity of pos = x + y
            let t = 2 * key + (pos & 1).abs();
            Vertex::new((pos - t) / 2, (pos + t) / 2)
        }
        Direction::D2 => {
            // u = x + y has the parity of pos = x - y
            let u = 2 * key + (pos & 1).abs();
            Vertex::new((u + pos) / 2, (u - pos) / 2)
        }
    }
}

/// The two (always adjacent) vertices where two rows of different
/// directions meet.
pub fn row_intersection(d1: Direction, k1: i32, d2: Direction, k2: i32) -> Result<[Vertex; 2]> {
    use Direction::*;
    if d1 == d2 {
        return Err(Error::InvalidArguments(
            "row intersection needs two distinct directions".into(),
        ));
    }
    let mut pair = match (d1, d2) {
        (D1, D3) => [
            Vertex::new(k2 - 2 * k1 - 1, k2),
            Vertex::new(k2 - 2 * k1, k2),
        ],
        (D2, D3) => [
            Vertex::new(2 * k1 - k2, k2),
            Vertex::new(2 * k1 + 1 - k2, k2),
        ],
        (D1, D2) => [
            Vertex::new(k2 - k1, k1 + k2),
            Vertex::new(k2 - k1, k1 + k2 + 1),
        ],
        (a, b) => return row_intersection(b, k2, a, k1),
    };
    pair.sort();
    debug_assert!(are_adjacent(pair[0], pair[1]));
    Ok(pair)
}

/// A finite set of grid vertices with exact membership and counting.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSet {
    verts: BTreeSet<Vertex>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet::default()
    }

    /// Builds a set from coordinate pairs, rejecting duplicates.
    pub fn from_pairs_strict(pairs: &[(i32, i32)]) -> Result<Self> {
        let mut verts = BTreeSet::new();
        for &(x, y) in pairs {
            if !verts.insert(Vertex::new(x, y)) {
                return Err(Error::InvalidArguments(format!(
                    "duplicate vertex ({x}, {y})"
                )));
            }
        }
        Ok(VertexSet { verts })
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.verts.insert(v)
    }

    pub fn remove(&mut self, v: &Vertex) -> bool {
        self.verts.remove(v)
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.verts.contains(v)
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.verts.iter().copied()
    }

    pub fn translated(&self, dx: i32, dy: i32) -> Self {
        self.iter().map(|v| v.translated(dx, dy)).collect()
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.verts.is_subset(&other.verts)
    }

    pub(crate) fn to_fast_set(&self) -> FastSet<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet {
            verts: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::collections::btree_set::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.verts.iter()
    }
}

/// The finite hexagonal grid of radius `r`: the union of all hexagonal
/// faces within face-distance `r - 1` of the central face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGrid {
    radius: u32,
    vertices: VertexSet,
}

impl FiniteGrid {
    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }
}

/// Hexagonal ("king-free") distance between faces in the skewed face
/// coordinates used below.
#[inline]
fn face_dist(u: i32, w: i32) -> i32 {
    if (u >= 0) == (w >= 0) {
        u.abs().max(w.abs())
    } else {
        u.abs() + w.abs()
    }
}

/// Builds the finite grid of radius `r >= 1`. The central face has vertex
/// set {(0,0), (1,0), (2,0), (0,1), (1,1), (2,1)}.
pub fn finite_grid(r: u32) -> Result<FiniteGrid> {
    if r == 0 {
        return Err(Error::InvalidArguments("radius must be at least 1".into()));
    }
    let rr = r as i32;

    // Faces are indexed by the brick coordinates (a, b) of their lower-left
    // vertex, with a + b even. In the skewed coordinates u = (a+b)/2,
    // w = (a-b)/2 face adjacency becomes the triangular-lattice neighbor
    // set, so the patch is { (u, w) : face_dist(u, w) <= r-1 }.
    //
    // Per b-line the admissible a-values form one interval, which lets us
    // emit the vertex rows directly instead of deduplicating face corners.
    let mut a_range = Vec::new(); // (b, a_min, a_max)
    for b in (1 - rr)..=(rr - 1) {
        let mut a_min = i32::MAX;
        let mut a_max = i32::MIN;
        for w in -rr..=rr {
            let u = w + b;
            if face_dist(u, w) <= rr - 1 {
                let a = u + w;
                a_min = a_min.min(a);
                a_max = a_max.max(a);
            }
        }
        debug_assert!(a_min <= a_max);
        a_range.push((b, a_min, a_max));
    }

    let range_for = |b: i32| -> Option<(i32, i32)> {
        if b < 1 - rr || b > rr - 1 {
            None
        } else {
            let (_, lo, hi) = a_range[(b - (1 - rr)) as usize];
            Some((lo, hi))
        }
    };

    let mut verts = Vec::with_capacity((6 * r * r) as usize);
    for y in (1 - rr)..=rr {
        // a face with lower-left (a, b) contributes x in [a, a+2] to the
        // rows y = b and y = b + 1
        let mut x_lo = i32::MAX;
        let mut x_hi = i32::MIN;
        for b in [y - 1, y] {
            if let Some((lo, hi)) = range_for(b) {
                x_lo = x_lo.min(lo);
                x_hi = x_hi.max(hi + 2);
            }
        }
        debug_assert!(x_lo <= x_hi);
        for x in x_lo..=x_hi {
            verts.push(Vertex::new(x, y));
        }
    }

    let vertices: VertexSet = verts.into_iter().collect();
    debug_assert_eq!(vertices.len(), (6 * r * r) as usize);
    Ok(FiniteGrid {
        radius: r,
        vertices,
    })
}

/// Face-adjacency BFS construction of the same patch. Quadratically slower
/// than `finite_grid`; kept as an independent route for cross-checking.
pub fn finite_grid_by_faces(r: u32) -> Result<FiniteGrid> {
    if r == 0 {
        return Err(Error::InvalidArguments("radius must be at least 1".into()));
    }
    let mut seen: FastSet<(i32, i32)> = FastSet::default();
    let mut queue = VecDeque::new();
    seen.insert((0, 0));
    queue.push_back(((0, 0), 0u32));
    let mut verts = VertexSet::new();
    while let Some(((a, b), depth)) = queue.pop_front() {
        for (dx, dy) in [(0, 0), (1, 0), (2, 0)] {
            verts.insert(Vertex::new(a + dx, b + dy));
            verts.insert(Vertex::new(a + dx, b + dy + 1));
        }
        if depth + 1 < r {
            for (na, nb) in [
                (a - 2, b),
                (a + 2, b),
                (a - 1, b - 1),
                (a + 1, b - 1),
                (a - 1, b + 1),
                (a + 1, b + 1),
            ] {
                if seen.insert((na, nb)) {
                    queue.push_back(((na, nb), depth + 1));
                }
            }
        }
    }
    Ok(FiniteGrid {
        radius: r,
        vertices: verts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(pairs: &[(i32, i32)]) -> VertexSet {
        pairs.iter().map(|&(x, y)| Vertex::new(x, y)).collect()
    }

    #[test]
    fn neighbor_rule() {
        let n0: VertexSet = neighbors(Vertex::new(0, 0)).into_iter().collect();
        assert_eq!(n0, vs(&[(-1, 0), (1, 0), (0, 1)]));
        let n1: VertexSet = neighbors(Vertex::new(1, 0)).into_iter().collect();
        assert_eq!(n1, vs(&[(0, 0), (2, 0), (1, -1)]));
        let n2: VertexSet = neighbors(Vertex::new(2, 1)).into_iter().collect();
        assert_eq!(n2, vs(&[(1, 1), (3, 1), (2, 0)]));
    }

    #[test]
    fn adjacency_is_symmetric_and_degree_three() {
        for x in -6..=6 {
            for y in -6..=6 {
                let v = Vertex::new(x, y);
                let ns = neighbors(v);
                assert_eq!(ns.len(), 3);
                for n in ns {
                    assert!(neighbors(n).contains(&v), "asymmetry at {v} -> {n}");
                }
            }
        }
    }

    #[test]
    fn edge_direction_examples() {
        let e = |a: (i32, i32), b: (i32, i32)| {
            Edge::new(Vertex::new(a.0, a.1), Vertex::new(b.0, b.1)).unwrap()
        };
        assert_eq!(edge_direction(&e((0, 0), (1, 0))), Direction::D1);
        assert_eq!(edge_direction(&e((1, 0), (2, 0))), Direction::D2);
        assert_eq!(edge_direction(&e((0, 0), (0, 1))), Direction::D3);
    }

    #[test]
    fn non_adjacent_pair_is_rejected() {
        assert!(Edge::new(Vertex::new(0, 0), Vertex::new(2, 0)).is_err());
        assert!(Edge::new(Vertex::new(0, 0), Vertex::new(0, 0)).is_err());
    }

    #[test]
    fn incident_edges_carry_all_three_directions() {
        for x in -5..=5 {
            for y in -5..=5 {
                let v = Vertex::new(x, y);
                let mut dirs: Vec<Direction> = neighbors(v)
                    .into_iter()
                    .map(|n| edge_direction(&Edge::new(v, n).unwrap()))
                    .collect();
                dirs.sort();
                assert_eq!(dirs, Direction::ALL.to_vec());
            }
        }
    }

    #[test]
    fn row_key_examples() {
        assert_eq!(row_key(Vertex::new(0, 0), Direction::D3), 0);
        assert_eq!(row_key(Vertex::new(2, 5), Direction::D1), 1);
        assert_eq!(row_key(Vertex::new(3, 1), Direction::D2), 2);
    }

    #[test]
    fn row_keys_cohere_along_edges() {
        // an edge changes exactly the key of its own direction, by one
        for x in -5..=5 {
            for y in -5..=5 {
                let v = Vertex::new(x, y);
                for n in neighbors(v) {
                    let ed = edge_direction(&Edge::new(v, n).unwrap());
                    for d in Direction::ALL {
                        let dk = (row_key(v, d) - row_key(n, d)).abs();
                        if d == ed {
                            assert_eq!(dk, 1);
                        } else {
                            assert_eq!(dk, 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn row_vertex_inverts_key_and_position() {
        for x in -6..=6 {
            for y in -6..=6 {
                let v = Vertex::new(x, y);
                for d in Direction::ALL {
                    assert_eq!(row_vertex(d, row_key(v, d), row_position(v, d)), v);
                }
            }
        }
        // consecutive positions on a row are adjacent
        for d in Direction::ALL {
            for key in -3..=3 {
                for pos in -6..6 {
                    let a = row_vertex(d, key, pos);
                    let b = row_vertex(d, key, pos + 1);
                    assert!(are_adjacent(a, b), "row {d}/{key} breaks at {pos}");
                    assert_eq!(row_key(a, d), key);
                }
            }
        }
    }

    /// Brute-force row intersection over a window.
    fn row_intersection_naive(d1: Direction, k1: i32, d2: Direction, k2: i32) -> Vec<Vertex> {
        let mut out = Vec::new();
        for x in -40..=40 {
            for y in -40..=40 {
                let v = Vertex::new(x, y);
                if row_key(v, d1) == k1 && row_key(v, d2) == k2 {
                    out.push(v);
                }
            }
        }
        out
    }

    #[test]
    fn row_intersection_examples() {
        assert_eq!(
            row_intersection(Direction::D1, 0, Direction::D3, 0).unwrap(),
            [Vertex::new(-1, 0), Vertex::new(0, 0)]
        );
        assert_eq!(
            row_intersection(Direction::D1, 0, Direction::D2, 0).unwrap(),
            [Vertex::new(0, 0), Vertex::new(0, 1)]
        );
        assert!(row_intersection(Direction::D1, 0, Direction::D1, 1).is_err());
    }

    #[test]
    fn row_intersection_matches_naive_and_is_adjacent() {
        for d1 in Direction::ALL {
            for d2 in Direction::ALL {
                if d1 == d2 {
                    continue;
                }
                for k1 in -4..=4 {
                    for k2 in -4..=4 {
                        let got = row_intersection(d1, k1, d2, k2).unwrap();
                        let naive = row_intersection_naive(d1, k1, d2, k2);
                        assert_eq!(got.to_vec(), naive);
                        assert!(are_adjacent(got[0], got[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn period_vectors_fix_their_direction_key() {
        let periods = [
            (Direction::D1, (1, 1)),
            (Direction::D2, (1, -1)),
            (Direction::D3, (2, 0)),
        ];
        for x in -5..=5 {
            for y in -5..=5 {
                let v = Vertex::new(x, y);
                for (d, (dx, dy)) in periods {
                    let t = v.translated(dx, dy);
                    assert_eq!(row_key(t, d), row_key(v, d));
                    for other in Direction::ALL {
                        if other != d {
                            assert_eq!((row_key(t, other) - row_key(v, other)).abs(), 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn finite_grid_sizes() {
        assert!(finite_grid(0).is_err());
        assert_eq!(finite_grid(1).unwrap().vertices().len(), 6);
        assert_eq!(finite_grid(2).unwrap().vertices().len(), 24);
        assert_eq!(finite_grid(3).unwrap().vertices().len(), 54);
        for r in 1..=30 {
            assert_eq!(finite_grid(r).unwrap().vertices().len(), (6 * r * r) as usize);
        }
    }

    #[test]
    fn finite_grid_matches_face_bfs() {
        for r in 1..=8 {
            assert_eq!(
                finite_grid(r).unwrap().vertices(),
                finite_grid_by_faces(r).unwrap().vertices()
            );
        }
    }

    #[test]
    fn radius_one_is_a_hexagon() {
        let g = finite_grid(1).unwrap();
        assert_eq!(
            g.vertices(),
            &vs(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)])
        );
        // the induced subgraph is a 6-cycle
        for v in g.vertices().iter() {
            let deg = neighbors(v)
                .into_iter()
                .filter(|n| g.vertices().contains(n))
                .count();
            assert_eq!(deg, 2);
        }
    }

    #[test]
    fn finite_grid_is_connected() {
        for r in 1..=6 {
            let g = finite_grid(r).unwrap();
            let start = g.vertices().iter().next().unwrap();
            let mut seen = VertexSet::new();
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for n in neighbors(v) {
                    if g.vertices().contains(&n) && seen.insert(n) {
                        stack.push(n);
                    }
                }
            }
            assert_eq!(seen.len(), g.vertices().len());
        }
    }

    proptest::proptest! {
        #[test]
        fn row_roundtrip_everywhere(x in -100_000i32..=100_000, y in -100_000i32..=100_000) {
            let v = Vertex::new(x, y);
            for d in Direction::ALL {
                proptest::prop_assert_eq!(row_vertex(d, row_key(v, d), row_position(v, d)), v);
            }
        }

        #[test]
        fn row_intersections_always_meet(k1 in -1000i32..=1000, k2 in -1000i32..=1000) {
            for d1 in Direction::ALL {
                for d2 in Direction::ALL {
                    if d1 == d2 {
                        continue;
                    }
                    let pair = row_intersection(d1, k1, d2, k2).unwrap();
                    for v in pair {
                        proptest::prop_assert_eq!(row_key(v, d1), k1);
                        proptest::prop_assert_eq!(row_key(v, d2), k2);
                    }
                    proptest::prop_assert!(are_adjacent(pair[0], pair[1]));
                }
            }
        }
    }

    #[test]
    fn duplicate_pairs_rejected() {
        assert!(VertexSet::from_pairs_strict(&[(0, 0), (0, 0)]).is_err());
        assert_eq!(
            VertexSet::from_pairs_strict(&[(0, 0), (1, 0)]).unwrap().len(),
            2
        );
    }
}
