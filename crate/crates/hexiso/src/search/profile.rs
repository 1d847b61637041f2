//! Isoperimetric profiles: per size, the minimum of a perimeter measure
//! over the enumerated connected classes.

use std::sync::Mutex;

use crate::perimeter::{boundary_set, cut_edges, neighbor_set, Region};
use crate::search::canonical::CanonicalSet;
use crate::search::connected::visit_connected;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    N,
    B,
    E,
}

impl Measure {
    pub fn letter(self) -> char {
        match self {
            Measure::N => 'N',
            Measure::B => 'B',
            Measure::E => 'E',
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "N" | "n" => Ok(Measure::N),
            "B" | "b" => Ok(Measure::B),
            "E" | "e" => Ok(Measure::E),
            _ => Err(Error::InvalidArguments(format!("unknown measure {s:?}"))),
        }
    }
}

/// Minimum of one measure at one size. For E the connected minimum is the
/// true minimum over all finite sets (cut edges add over components and
/// the bound is concave in the size); for N and B the row is the minimum
/// over connected classes only, and is flagged as such.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRow {
    pub n: usize,
    pub measure: Measure,
    pub min_value: u64,
    pub argmin: CanonicalSet,
    pub connected_only: bool,
}

/// Profile of `measure` for sizes 1..=n_max over connected classes.
pub fn profile(n_max: usize, measure: Measure) -> Result<Vec<ProfileRow>> {
    let region = Region::Infinite;
    let eval = |c: &CanonicalSet| -> u64 {
        let w = c.to_vertex_set();
        let count = match measure {
            Measure::N => neighbor_set(&w, &region).expect("infinite region").len(),
            Measure::B => boundary_set(&w, &region).expect("infinite region").len(),
            Measure::E => cut_edges(&w, &region).expect("infinite region").len(),
        };
        count as u64
    };
    let best: Vec<Mutex<Option<(u64, CanonicalSet)>>> =
        (0..=n_max).map(|_| Mutex::new(None)).collect();
    visit_connected(n_max, |c| {
        let v = eval(c);
        let mut slot = best[c.len()].lock().unwrap();
        let replace = match &*slot {
            None => true,
            Some((bv, bc)) => v < *bv || (v == *bv && c < bc),
        };
        if replace {
            *slot = Some((v, c.clone()));
        }
    })?;
    Ok(best
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(n, slot)| {
            let (min_value, argmin) = slot.into_inner().unwrap().expect("size is reachable");
            ProfileRow {
                n,
                measure,
                min_value,
                argmin,
                connected_only: !matches!(measure, Measure::E),
            }
        })
        .collect())
}
