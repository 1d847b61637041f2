//! Enumeration of connected induced subgraphs of the infinite grid, one
//! representative per canonical class, by canonical-parent growth: a
//! grown set is kept exactly when the designated removable vertex of its
//! canonical form leads back to the parent it grew from. This needs no
//! global seen-set and parallelizes over subtrees.

use rayon::prelude::*;

use crate::hexgrid::{neighbors, Vertex};
use crate::mix::FastSet;
use crate::search::canonical::CanonicalSet;
use crate::{Error, Result};

pub const MAX_CONNECTED_SIZE: usize = 14;

/// Is `verts` minus `skip` still connected (and non-empty)?
fn connected_without(verts: &[Vertex], skip: Vertex) -> bool {
    let remaining: FastSet<Vertex> = verts.iter().copied().filter(|&v| v != skip).collect();
    let Some(&start) = remaining.iter().next() else {
        return false;
    };
    let mut seen: FastSet<Vertex> = FastSet::default();
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for n in neighbors(v) {
            if remaining.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == remaining.len()
}

/// The designated removable vertex of a canonical form: the largest
/// vertex whose removal keeps the rest connected.
fn designated_vertex(c: &CanonicalSet) -> Vertex {
    let verts = c.vertices();
    *verts
        .iter()
        .rev()
        .find(|&&v| connected_without(verts, v))
        .expect("a connected graph has a non-cut vertex")
}

fn parent_of(c: &CanonicalSet) -> CanonicalSet {
    let d = designated_vertex(c);
    CanonicalSet::from_vertices(c.vertices().iter().copied().filter(|&v| v != d))
}

fn children_of(c: &CanonicalSet) -> Vec<CanonicalSet> {
    let verts = c.vertices();
    let black: FastSet<Vertex> = verts.iter().copied().collect();
    let mut out: Vec<CanonicalSet> = Vec::new();
    let mut seen: FastSet<u64> = FastSet::default();
    for &v in verts {
        for w in neighbors(v) {
            if black.contains(&w) {
                continue;
            }
            let grown =
                CanonicalSet::from_vertices(verts.iter().copied().chain(std::iter::once(w)));
            if !seen.insert(grown.digest()) {
                continue;
            }
            if out.contains(&grown) {
                continue; // digest collision guard
            }
            if &parent_of(&grown) == c {
                out.push(grown);
            }
        }
    }
    out
}

fn visit_rec<F>(c: &CanonicalSet, n_max: usize, f: &F)
where
    F: Fn(&CanonicalSet) + Sync,
{
    f(c);
    if c.len() >= n_max {
        return;
    }
    let children = children_of(c);
    if c.len() <= 6 {
        children.into_par_iter().for_each(|ch| visit_rec(&ch, n_max, f));
    } else {
        for ch in children {
            visit_rec(&ch, n_max, f);
        }
    }
}

/// Calls `f` exactly once per canonical class of connected sets with
/// between 1 and `n_max` vertices.
pub fn visit_connected<F>(n_max: usize, f: F) -> Result<()>
where
    F: Fn(&CanonicalSet) + Sync,
{
    if n_max == 0 || n_max > MAX_CONNECTED_SIZE {
        return Err(Error::ResourceGuard(format!(
            "connected enumeration supports sizes 1..={MAX_CONNECTED_SIZE}, got {n_max}"
        )));
    }
    let root = CanonicalSet::from_vertices([Vertex::new(0, 0)]);
    visit_rec(&root, n_max, &f);
    Ok(())
}

/// Number of classes per size, index 0 unused.
pub fn count_connected_classes(n_max: usize) -> Result<Vec<u64>> {
    use std::sync::atomic::{AtomicU64, Ordering};
    let counts: Vec<AtomicU64> = (0..=n_max).map(|_| AtomicU64::new(0)).collect();
    visit_connected(n_max, |c| {
        counts[c.len()].fetch_add(1, Ordering::Relaxed);
    })?;
    Ok(counts.into_iter().map(|a| a.into_inner()).collect())
}
