//! Canonical forms for vertex sets under the grid symmetries used for
//! deduplication: parity-preserving translations together with the point
//! reflection through the midpoint of the edge {(0,0), (1,0)}. The
//! reflection is what identifies the two translation orbits of a single
//! vertex, so "one vertex" is one class.

use crate::hexgrid::{Vertex, VertexSet};
use crate::mix::mix64;

/// A vertex set in canonical position: translated so its smallest vertex
/// sits at the origin of its parity class, and minimal against its point
/// reflection.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalSet {
    verts: Vec<Vertex>,
}

/// 180° rotation about the midpoint of the edge {(0,0), (1,0)}; a grid
/// automorphism that swaps the two vertex parities.
#[inline]
fn point_reflect(v: Vertex) -> Vertex {
    Vertex::new(1 - v.x, -v.y)
}

/// Translate a sorted vertex list so its first vertex lands on (0,0) or
/// (1,0) according to its parity; the shift vector is parity-preserving.
fn normalize_translation(verts: &mut [Vertex]) {
    verts.sort_unstable();
    let m = verts[0];
    let ox = if m.parity() == 0 { 0 } else { 1 };
    let (dx, dy) = (ox - m.x, -m.y);
    for v in verts.iter_mut() {
        *v = v.translated(dx, dy);
    }
}

impl CanonicalSet {
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut a: Vec<Vertex> = iter.into_iter().collect();
        assert!(!a.is_empty(), "cannot canonicalize an empty set");
        let mut b: Vec<Vertex> = a.iter().map(|&v| point_reflect(v)).collect();
        normalize_translation(&mut a);
        normalize_translation(&mut b);
        CanonicalSet {
            verts: if b < a { b } else { a },
        }
    }

    pub fn from_set(w: &VertexSet) -> Self {
        Self::from_vertices(w.iter())
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn to_vertex_set(&self) -> VertexSet {
        self.verts.iter().copied().collect()
    }

    /// 64-bit digest of the canonical coordinates.
    pub fn digest(&self) -> u64 {
        let mut h = 0xCBF2_9CE4_8422_2325u64;
        for v in &self.verts {
            h = mix64(h ^ (v.x as u32 as u64));
            h = mix64(h ^ (v.y as u32 as u64));
        }
        h
    }
}
