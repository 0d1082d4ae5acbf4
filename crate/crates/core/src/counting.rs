//! Exact lattice point enumeration in dilates `kP` and their interiors.
//!
//! The scan walks the integer rows of the bounding box of `kP` over the first
//! `n - 1` coordinates and solves the halfspace system for the admissible
//! interval of the last coordinate, so a row costs `O(#facets)` regardless of
//! its length. Everything is integer arithmetic; the interior is the same
//! system with every right-hand side lowered by one.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{IntPoint, LatticePolytope};

/// Default bound on the number of bounding-box rows a single count may scan.
pub const DEFAULT_WORK_CAP: u128 = 100_000_000;

/// Environment variable consulted by [`work_cap_from_env`].
pub const WORK_CAP_ENV: &str = "EHRHART_WORK_CAP";

pub fn work_cap_from_env() -> u128 {
    std::env::var(WORK_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_WORK_CAP)
}

/// Halfspaces of `kP` (or of its interior) split into the part acting on the
/// row prefix and the coefficient of the last coordinate.
struct RowSystem {
    prefix_normals: Vec<Vec<i128>>,
    last: Vec<i128>,
    rhs: Vec<i128>,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl RowSystem {
    fn new(p: &LatticePolytope, k: u64, strict: bool) -> Self {
        let n = p.dim();
        let k = k as i128;
        let hs = p.halfspaces();
        let (lo, hi) = p.bounding_box();
        RowSystem {
            prefix_normals: hs
                .iter()
                .map(|h| h.normal[..n - 1].iter().map(|&a| a as i128).collect())
                .collect(),
            last: hs.iter().map(|h| h.normal[n - 1] as i128).collect(),
            rhs: hs
                .iter()
                .map(|h| k * h.rhs as i128 - i128::from(strict))
                .collect(),
            lo: lo.iter().map(|&x| (x as i128 * k) as i64).collect(),
            hi: hi.iter().map(|&x| (x as i128 * k) as i64).collect(),
        }
    }

    fn rows(&self) -> u128 {
        let n = self.lo.len();
        (0..n - 1)
            .map(|i| (self.hi[i] - self.lo[i] + 1).max(0) as u128)
            .product()
    }

    /// Interval of the last coordinate for the given partial sums, or `None`.
    #[inline]
    fn interval(&self, partial: &[i128]) -> Option<(i128, i128)> {
        let n = self.lo.len();
        let mut lo = self.lo[n - 1] as i128;
        let mut hi = self.hi[n - 1] as i128;
        for ((&a, &b), &s) in self.last.iter().zip(&self.rhs).zip(partial) {
            let r = b - s;
            if a > 0 {
                hi = hi.min(r.div_euclid(a));
            } else if a < 0 {
                // a x <= r  <=>  x >= ceil(r / a)
                lo = lo.max(-(r.div_euclid(-a)));
            } else if r < 0 {
                return None;
            }
            if lo > hi {
                return None;
            }
        }
        Some((lo, hi))
    }

    /// Visits every admissible row below the fixed first coordinate `x0`.
    fn walk(&self, x0: i64, visit: &mut dyn FnMut(&[i64], i128, i128)) {
        let n = self.lo.len();
        let m = self.rhs.len();
        let mut prefix = vec![0i64; n - 1];
        let mut partial = vec![0i128; m];
        prefix[0] = x0;
        for h in 0..m {
            partial[h] = self.prefix_normals[h][0] * x0 as i128;
        }
        self.descend(1, &mut prefix, &mut partial, visit);
    }

    fn descend(
        &self,
        level: usize,
        prefix: &mut [i64],
        partial: &mut [i128],
        visit: &mut dyn FnMut(&[i64], i128, i128),
    ) {
        if level == prefix.len() {
            if let Some((lo, hi)) = self.interval(partial) {
                visit(prefix, lo, hi);
            }
            return;
        }
        for x in self.lo[level]..=self.hi[level] {
            prefix[level] = x;
            for (s, a) in partial.iter_mut().zip(&self.prefix_normals) {
                *s += a[level] * x as i128;
            }
            self.descend(level + 1, prefix, partial, visit);
            for (s, a) in partial.iter_mut().zip(&self.prefix_normals) {
                *s -= a[level] * x as i128;
            }
        }
    }
}

fn count_impl(p: &LatticePolytope, k: u64, strict: bool, cap: u128) -> Result<u64> {
    if k == 0 {
        // 0P = {0}; its interior is empty.
        return Ok(u64::from(!strict));
    }
    let sys = RowSystem::new(p, k, strict);
    let n = p.dim();
    let rows = sys.rows();
    if rows > cap {
        return Err(Error::WorkCapExceeded { estimated: rows, cap });
    }
    if n == 1 {
        return Ok(match sys.interval(&vec![0; sys.rhs.len()]) {
            Some((lo, hi)) => (hi - lo + 1) as u64,
            None => 0,
        });
    }
    let total: u64 = (sys.lo[0]..=sys.hi[0])
        .into_par_iter()
        .map(|x0| {
            let mut c = 0u64;
            sys.walk(x0, &mut |_, lo, hi| c += (hi - lo + 1) as u64);
            c
        })
        .sum();
    Ok(total)
}

/// `#(kP ∩ Z^n)` under the default work cap.
pub fn count_points(p: &LatticePolytope, k: u64) -> Result<u64> {
    count_impl(p, k, false, DEFAULT_WORK_CAP)
}

/// `#(int(kP) ∩ Z^n)` under the default work cap.
pub fn count_interior(p: &LatticePolytope, k: u64) -> Result<u64> {
    count_impl(p, k, true, DEFAULT_WORK_CAP)
}

pub fn count_points_capped(p: &LatticePolytope, k: u64, cap: u128) -> Result<u64> {
    count_impl(p, k, false, cap)
}

pub fn count_interior_capped(p: &LatticePolytope, k: u64, cap: u128) -> Result<u64> {
    count_impl(p, k, true, cap)
}

/// Lists the lattice points of `kP` (or its interior), in lexicographic order.
///
/// Intended for small polytopes; no work cap is applied.
pub fn lattice_points(p: &LatticePolytope, k: u64, strict: bool) -> Vec<IntPoint> {
    let n = p.dim();
    if k == 0 {
        return if strict { vec![] } else { vec![IntPoint::origin(n)] };
    }
    let sys = RowSystem::new(p, k, strict);
    let mut out = Vec::new();
    if n == 1 {
        if let Some((lo, hi)) = sys.interval(&vec![0; sys.rhs.len()]) {
            out.extend((lo..=hi).map(|x| IntPoint(vec![x as i64])));
        }
        return out;
    }
    for x0 in sys.lo[0]..=sys.hi[0] {
        sys.walk(x0, &mut |prefix, lo, hi| {
            for x in lo..=hi {
                let mut v = prefix.to_vec();
                v.push(x as i64);
                out.push(IntPoint(v));
            }
        });
    }
    out
}

/// Smallest `k >= 1` with `int(kP) ∩ Z^n` nonempty; always at most `n + 1`.
pub fn min_dilate_with_interior(p: &LatticePolytope) -> Result<u64> {
    for k in 1..=p.dim() as u64 + 1 {
        if count_interior(p, k)? > 0 {
            return Ok(k);
        }
    }
    unreachable!("every lattice n-polytope has an interior point in its (n+1)-th dilate")
}

/// Closed and interior counts of the first few dilates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub polytope_label: String,
    pub closed_counts: Vec<(u64, u64)>,
    pub interior_counts: Vec<(u64, u64)>,
}

impl CountTable {
    /// Counts for `k = 0..=kmax` (closed) and `k = 1..=kmax` (interior).
    pub fn build(p: &LatticePolytope, kmax: u64, cap: u128) -> Result<Self> {
        let closed_counts = (0..=kmax)
            .map(|k| count_points_capped(p, k, cap).map(|c| (k, c)))
            .collect::<Result<Vec<_>>>()?;
        let interior_counts = (1..=kmax)
            .map(|k| count_interior_capped(p, k, cap).map(|c| (k, c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CountTable {
            polytope_label: p.label().to_string(),
            closed_counts,
            interior_counts,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("k,closed,interior\n");
        for &(k, c) in &self.closed_counts {
            let int = self
                .interior_counts
                .iter()
                .find(|(j, _)| *j == k)
                .map(|(_, v)| v.to_string())
                .unwrap_or_default();
            s.push_str(&format!("{k},{c},{int}\n"));
        }
        s
    }
}
