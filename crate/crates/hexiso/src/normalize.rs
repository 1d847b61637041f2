//! Bad-row detection and elimination: compressing a set into an
//! equal-cardinality form whose gray rows are contiguous in every
//! direction, without increasing its neighborhood.

use std::collections::BTreeSet;

use crate::hexgrid::{row_intersection, row_key, Direction, Vertex, VertexSet};
use crate::{Error, Result};

/// A white row lying strictly between two gray rows of its direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BadRow {
    pub direction: Direction,
    pub key: i32,
}

/// The finite parallelogram spanned by the direction-1 and direction-2
/// gray-key intervals. Only defined once those directions have no bad
/// rows; then it has exactly `2·l1·l2` vertices and contains the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Parallelogram {
    pub d1_range: (i32, i32),
    pub d2_range: (i32, i32),
    pub vertex_count: u64,
}

impl Parallelogram {
    pub fn contains(&self, v: Vertex) -> bool {
        let k1 = row_key(v, Direction::D1);
        let k2 = row_key(v, Direction::D2);
        k1 >= self.d1_range.0
            && k1 <= self.d1_range.1
            && k2 >= self.d2_range.0
            && k2 <= self.d2_range.1
    }

    pub fn vertices(&self) -> VertexSet {
        let mut out = VertexSet::new();
        for k1 in self.d1_range.0..=self.d1_range.1 {
            for k2 in self.d2_range.0..=self.d2_range.1 {
                for v in row_intersection(Direction::D1, k1, Direction::D2, k2)
                    .expect("distinct directions")
                {
                    out.insert(v);
                }
            }
        }
        out
    }

    /// Vertex counts of the parts strictly below / strictly above the
    /// horizontal row `y = key`.
    fn split_counts(&self, key: i32) -> (u64, u64) {
        let mut below = 0u64;
        let mut above = 0u64;
        for k1 in self.d1_range.0..=self.d1_range.1 {
            for k2 in self.d2_range.0..=self.d2_range.1 {
                // the two vertices of this cell sit at y = k1+k2 and k1+k2+1
                for y in [k1 + k2, k1 + k2 + 1] {
                    if y < key {
                        below += 1;
                    } else if y > key {
                        above += 1;
                    }
                }
            }
        }
        (below, above)
    }
}

/// One recorded elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub dir: u8,
    pub key: i32,
    pub agreeable: u8,
    pub shift: (i32, i32),
    pub moved: usize,
}

/// Replayable record of a full normalization run.
#[derive(Clone, Debug, Default)]
pub struct NormalizationTrace {
    pub steps: Vec<TraceStep>,
    /// Number of outer passes executed.
    pub iterations: usize,
    /// Parallelogram vertex count recorded once per pass, after
    /// directions 1 and 2 were cleaned.
    pub potential_history: Vec<u64>,
    /// How many direction-1/2 eliminations each pass performed.
    pub d12_steps_per_pass: Vec<usize>,
}

impl NormalizationTrace {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "steps": self
                .steps
                .iter()
                .map(|s| serde_json::json!({
                    "dir": s.dir,
                    "key": s.key,
                    "agreeable": s.agreeable,
                    "shift": [s.shift.0, s.shift.1],
                    "moved": s.moved,
                }))
                .collect::<Vec<_>>(),
            "iterations": self.iterations,
        })
    }
}

fn gray_keys(w: &VertexSet, d: Direction) -> BTreeSet<i32> {
    w.iter().map(|v| row_key(v, d)).collect()
}

/// All integer keys strictly between the extreme gray keys of direction
/// `d` that carry no vertex of `W`, in ascending order.
pub fn find_bad_rows(w: &VertexSet, d: Direction) -> Result<Vec<BadRow>> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let keys = gray_keys(w, d);
    let lo = *keys.first().expect("non-empty");
    let hi = *keys.last().expect("non-empty");
    Ok((lo + 1..hi)
        .filter(|k| !keys.contains(k))
        .map(|key| BadRow { direction: d, key })
        .collect())
}

/// The parallelogram of a set without direction-1/2 bad rows.
pub fn parallelogram(w: &VertexSet) -> Result<Parallelogram> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    for d in [Direction::D1, Direction::D2] {
        if !find_bad_rows(w, d)?.is_empty() {
            return Err(Error::Precondition(format!(
                "set has bad rows in direction {d}"
            )));
        }
    }
    let k1 = gray_keys(w, Direction::D1);
    let k2 = gray_keys(w, Direction::D2);
    let d1_range = (*k1.first().unwrap(), *k1.last().unwrap());
    let d2_range = (*k2.first().unwrap(), *k2.last().unwrap());
    let l1 = (d1_range.1 - d1_range.0 + 1) as u64;
    let l2 = (d2_range.1 - d2_range.0 + 1) as u64;
    Ok(Parallelogram {
        d1_range,
        d2_range,
        vertex_count: 2 * l1 * l2,
    })
}

/// Unit translation vector along direction `j`; it fixes `j`-keys and
/// changes each other direction's key by exactly one.
fn period(j: Direction) -> (i32, i32) {
    match j {
        Direction::D1 => (1, 1),
        Direction::D2 => (1, -1),
        Direction::D3 => (2, 0),
    }
}

/// Change of the direction-`i` key under one positive period step along
/// direction `j` (`i != j`).
fn key_delta(i: Direction, j: Direction) -> i32 {
    use Direction::*;
    match (i, j) {
        (D1, D2) | (D1, D3) | (D3, D2) => -1,
        (D2, D1) | (D2, D3) | (D3, D1) => 1,
        _ => 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MovedSide {
    /// Keys above the bad row move down.
    Above,
    /// Keys below the bad row move up.
    Below,
}

fn eliminate_with_side(
    w: &VertexSet,
    b: BadRow,
    j: Direction,
    side: MovedSide,
) -> Result<(VertexSet, TraceStep)> {
    if j == b.direction {
        return Err(Error::InvalidArguments(
            "agreeable direction must differ from the bad row's direction".into(),
        ));
    }
    if !find_bad_rows(w, b.direction)?.contains(&b) {
        return Err(Error::Precondition(format!(
            "row ({}, {}) is not a bad row of the set",
            b.direction, b.key
        )));
    }

    // maximal run of white keys containing the bad key
    let keys = gray_keys(w, b.direction);
    let mut lo = b.key;
    let mut hi = b.key;
    while !keys.contains(&(lo - 1)) {
        lo -= 1;
    }
    while !keys.contains(&(hi + 1)) {
        hi += 1;
    }
    let gap = (hi - lo + 1) as i32;

    // pick the sign of the period so the moved part's keys close the gap
    let toward = match side {
        MovedSide::Above => -1,
        MovedSide::Below => 1,
    };
    let sign = toward * key_delta(b.direction, j);
    let (px, py) = period(j);
    let shift = (gap * sign * px, gap * sign * py);

    let mut result = VertexSet::new();
    let mut moved = 0usize;
    for v in w.iter() {
        let k = row_key(v, b.direction);
        let moves = match side {
            MovedSide::Above => k > b.key,
            MovedSide::Below => k < b.key,
        };
        if moves {
            moved += 1;
            result.insert(v.translated(shift.0, shift.1));
        } else {
            result.insert(v);
        }
    }
    assert_eq!(result.len(), w.len(), "elimination must not collide vertices");

    Ok((
        result,
        TraceStep {
            dir: b.direction.index(),
            key: b.key,
            agreeable: j.index(),
            shift,
            moved,
        },
    ))
}

/// Eliminates one bad row by translating the part above it (in row keys)
/// toward the part below, along rows of direction `j`. Cardinality is
/// preserved and no `j`-direction bad rows are created.
pub fn eliminate_bad_row(w: &VertexSet, b: BadRow, j: Direction) -> Result<VertexSet> {
    eliminate_with_side(w, b, j, MovedSide::Above).map(|(set, _)| set)
}

fn has_any_bad_row(w: &VertexSet) -> Result<bool> {
    for d in Direction::ALL {
        if !find_bad_rows(w, d)?.is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Repeatedly eliminates bad rows until none remain in any direction.
///
/// Each pass first clears direction 1 agreeable to 2, then direction 2
/// agreeable to 1, records the parallelogram size, and then works on
/// direction-3 rows by moving the part of the set in the smaller
/// parallelogram component along the rows holding the parallelogram's
/// longer side. The result has the same cardinality and no more
/// neighbor vertices than the input.
pub fn normalize(w: &VertexSet) -> Result<(VertexSet, NormalizationTrace)> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let init_keys: usize = Direction::ALL.iter().map(|&d| gray_keys(w, d).len()).sum();
    let cap = 4 * (init_keys + w.len());

    let mut cur = w.clone();
    let mut trace = NormalizationTrace::default();

    loop {
        trace.iterations += 1;
        let mut d12_steps = 0usize;

        for (d, j) in [
            (Direction::D1, Direction::D2),
            (Direction::D2, Direction::D1),
        ] {
            while let Some(&b) = find_bad_rows(&cur, d)?.first() {
                let (next, step) = eliminate_with_side(&cur, b, j, MovedSide::Above)?;
                cur = next;
                trace.steps.push(step);
                d12_steps += 1;
                if trace.steps.len() > cap {
                    return Err(Error::NonTermination(format!(
                        "elimination cap {cap} exceeded"
                    )));
                }
            }
        }

        let p = parallelogram(&cur)?;
        if let Some(&prev) = trace.potential_history.last() {
            if p.vertex_count > prev {
                return Err(Error::NonTermination(format!(
                    "parallelogram grew from {prev} to {} vertices",
                    p.vertex_count
                )));
            }
        }
        trace.potential_history.push(p.vertex_count);
        trace.d12_steps_per_pass.push(d12_steps);

        while let Some(&b) = find_bad_rows(&cur, Direction::D3)?.first() {
            let p = parallelogram(&cur)?;
            let l1 = p.d1_range.1 - p.d1_range.0 + 1;
            let l2 = p.d2_range.1 - p.d2_range.0 + 1;
            // the longer parallelogram side lies in direction-1 rows when
            // l2 >= l1 (each direction-1 row meets 2·l2 of its vertices)
            let j = if l1 <= l2 {
                Direction::D1
            } else {
                Direction::D2
            };
            let (below, above) = p.split_counts(b.key);
            let side = if above <= below {
                MovedSide::Above
            } else {
                MovedSide::Below
            };
            let (next, step) = eliminate_with_side(&cur, b, j, side)?;
            cur = next;
            trace.steps.push(step);
            if trace.steps.len() > cap {
                return Err(Error::NonTermination(format!(
                    "elimination cap {cap} exceeded"
                )));
            }
            // a vertical move can re-open rows in directions 1/2; hand
            // those back to the next pass
            if !find_bad_rows(&cur, Direction::D1)?.is_empty()
                || !find_bad_rows(&cur, Direction::D2)?.is_empty()
            {
                break;
            }
        }

        if !has_any_bad_row(&cur)? {
            break;
        }
    }

    Ok((cur, trace))
}
