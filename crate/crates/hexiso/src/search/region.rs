//! Exhaustive subset scans of the small finite grids via bitmask
//! enumeration, and the exact ratio scan behind the conjectured constant.

use rayon::prelude::*;

use crate::hexgrid::{finite_grid, neighbors, Vertex, VertexSet};
use crate::{Error, Result};

/// Precomputed bitmask tables for one finite grid with at most 32
/// vertices, so r must be 1 or 2.
pub struct RegionMasks {
    r: u32,
    verts: Vec<Vertex>,
    nbr: Vec<u32>, // in-grid neighbors of vertex i
}

impl RegionMasks {
    pub fn new(r: u32) -> Result<Self> {
        if r == 0 || r > 2 {
            return Err(Error::ResourceGuard(format!(
                "exhaustive region scan supports r in {{1, 2}}, got {r}"
            )));
        }
        let grid = finite_grid(r)?;
        let verts: Vec<Vertex> = grid.vertices().iter().collect();
        let index = |v: &Vertex| verts.binary_search(v).ok();
        let nbr = verts
            .iter()
            .map(|&v| {
                let mut m = 0u32;
                for n in neighbors(v) {
                    if let Some(i) = index(&n) {
                        m |= 1 << i;
                    }
                }
                m
            })
            .collect();
        Ok(RegionMasks { r, verts, nbr })
    }

    pub fn radius(&self) -> u32 {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// In-grid neighbor vertices outside the mask.
    #[inline]
    pub fn n_in(&self, mask: u32) -> u32 {
        let mut reach = 0u32;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            reach |= self.nbr[i];
            m &= m - 1;
        }
        (reach & !mask).count_ones()
    }

    /// Vertices of the mask with an in-grid neighbor outside it.
    #[inline]
    pub fn b_in(&self, mask: u32) -> u32 {
        let mut b = 0u32;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            if self.nbr[i] & !mask != 0 {
                b |= 1 << i;
            }
            m &= m - 1;
        }
        b.count_ones()
    }

    /// In-grid cut edges of the mask.
    #[inline]
    pub fn e_in(&self, mask: u32) -> u32 {
        let mut e = 0u32;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            e += (self.nbr[i] & !mask).count_ones();
            m &= m - 1;
        }
        e
    }

    pub fn mask_to_set(&self, mask: u32) -> VertexSet {
        let mut m = mask;
        let mut out = VertexSet::new();
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out.insert(self.verts[i]);
            m &= m - 1;
        }
        out
    }
}

/// Calls `f(mask)` for every non-empty subset of at most `k_max` vertices.
/// Parallel over mask ranges; `f` sees each subset exactly once.
pub fn visit_region_subsets<F>(rm: &RegionMasks, k_max: usize, f: F) -> Result<()>
where
    F: Fn(u32) + Sync,
{
    let n = rm.vertex_count();
    if k_max == 0 || k_max > n {
        return Err(Error::InvalidArguments(format!(
            "k_max must be in 1..={n}, got {k_max}"
        )));
    }
    let top: u64 = 1u64 << n;
    let chunk: u64 = 1 << 16;
    let chunks = top.div_ceil(chunk);
    (0..chunks).into_par_iter().for_each(|c| {
        let lo = c * chunk;
        let hi = (lo + chunk).min(top);
        for mask in lo.max(1)..hi {
            if (mask.count_ones() as usize) <= k_max {
                f(mask as u32);
            }
        }
    });
    Ok(())
}

/// Exact minimum of measure²/|W| over the scanned subsets, for one
/// in-grid measure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub r: u32,
    pub measure: char, // 'N' or 'E'
    pub min_num: u128, // measure², reduced
    pub min_den: u128, // |W|, reduced
    pub witness: VertexSet,
    pub conjecture_consistent: bool,
}

impl ScanResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r,
            "measure": self.measure.to_string(),
            "min_ratio_sq": format!("{}/{}", self.min_num, self.min_den),
            "witness": self.witness.iter().map(|v| vec![v.x, v.y]).collect::<Vec<_>>(),
            "conjecture_consistent": self.conjecture_consistent,
        })
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// (measure², |W|, mask) with exact rational comparison on the first two
/// components and the mask as a deterministic tie-break.
type Best = (u128, u128, u32);

#[inline]
fn better(a: Best, b: Best) -> Best {
    // the reduce identity acts as +infinity
    if a.0 == u128::MAX {
        return b;
    }
    if b.0 == u128::MAX {
        return a;
    }
    // a.0/a.1 vs b.0/b.1 by cross-multiplication
    match (a.0 * b.1).cmp(&(b.0 * a.1)) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => {
            if a.2 <= b.2 {
                a
            } else {
                b
            }
        }
    }
}

/// Exact minimum of |N_in(W)|²/|W| and |E_in(W)|²/|W| over all non-empty
/// W of at most 3r² vertices. `conjecture_consistent` records whether the
/// minimum is at least 4/3.
pub fn conjecture_scan(r: u32) -> Result<[ScanResult; 2]> {
    let rm = RegionMasks::new(r)?;
    let k_max = (3 * r * r) as usize;
    let n = rm.vertex_count();
    let top: u64 = 1u64 << n;
    let chunk: u64 = 1 << 16;
    let chunks = top.div_ceil(chunk);
    let identity: [Best; 2] = [(u128::MAX, 1, u32::MAX); 2];
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk;
            let hi = (lo + chunk).min(top);
            let mut acc = identity;
            for mask in lo.max(1)..hi {
                let k = mask.count_ones() as usize;
                if k > k_max {
                    continue;
                }
                let mask = mask as u32;
                let nn = rm.n_in(mask) as u128;
                let ee = rm.e_in(mask) as u128;
                acc[0] = better(acc[0], (nn * nn, k as u128, mask));
                acc[1] = better(acc[1], (ee * ee, k as u128, mask));
            }
            acc
        })
        .reduce(
            || identity,
            |a, b| [better(a[0], b[0]), better(a[1], b[1])],
        );
    let result = |measure: char, (num, den, mask): Best| {
        let g = gcd(num, den).max(1);
        let (num, den) = (num / g, den / g);
        ScanResult {
            r,
            measure,
            min_num: num,
            min_den: den,
            witness: rm.mask_to_set(mask),
            conjecture_consistent: 3 * num >= 4 * den,
        }
    };
    Ok([result('N', best[0]), result('E', best[1])])
}
