//! Exact facet enumeration by the double description method.
//!
//! The valid inequalities `a·x <= b` of `conv(points)` form the cone
//! `{(a, -b) : (p, 1)·(a, -b) <= 0 for all p}`; its extreme rays are the
//! facets. Rays are kept primitive in `BigInt` and adjacency is decided
//! combinatorially from zero sets, so no arithmetic ever leaves Z.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Halfspace, IntPoint, MAX_DIM};
use crate::linalg::{self, big_to_i64};

struct Ray {
    coords: Vec<BigInt>,
    zeros: FixedBitSet,
}

/// Irredundant facet description of `conv(points)`, sorted by normal.
pub fn convex_hull_halfspaces(points: &[IntPoint]) -> Result<Vec<Halfspace>> {
    let Some(first) = points.first() else {
        return Err(Error::DegenerateInput("empty point set".into()));
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::DegenerateInput("zero-dimensional points".into()));
    }
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim: n, max: MAX_DIM });
    }
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::InvalidInput("points of mixed dimension".into()));
    }
    let mut pts: Vec<&IntPoint> = points.iter().collect();
    pts.sort();
    pts.dedup();
    let m = pts.len();

    let rows: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|p| {
            let mut r: Vec<BigInt> = p.iter().map(|&x| BigInt::from(x)).collect();
            r.push(BigInt::from(1));
            r
        })
        .collect();

    // Greedy choice of n+1 affinely independent points.
    let mut basis: Vec<usize> = Vec::with_capacity(n + 1);
    for i in 0..m {
        let mut trial: Vec<Vec<BigInt>> = basis.iter().map(|&b| rows[b].clone()).collect();
        trial.push(rows[i].clone());
        if linalg::rank(&trial) == trial.len() {
            basis.push(i);
            if basis.len() == n + 1 {
                break;
            }
        }
    }
    if basis.len() < n + 1 {
        return Err(Error::DegenerateInput(format!(
            "affine hull has dimension {} < {}",
            basis.len().saturating_sub(1),
            n
        )));
    }

    let b: Vec<Vec<BigInt>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let (adj, det) = linalg::adjugate(&b);
    let flip = det.is_positive();
    let mut rays: Vec<Ray> = (0..=n)
        .map(|j| {
            // B * (-sign(det) adj e_j) = -|det| e_j
            let mut coords: Vec<BigInt> = (0..=n)
                .map(|i| if flip { -&adj[i][j] } else { adj[i][j].clone() })
                .collect();
            linalg::primitive(&mut coords);
            let mut zeros = FixedBitSet::with_capacity(m);
            for (k, &bi) in basis.iter().enumerate() {
                if k != j {
                    zeros.insert(bi);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    for i in (0..m).filter(|i| !basis.contains(i)) {
        let values: Vec<BigInt> = rays.iter().map(|r| linalg::dot(&rows[i], &r.coords)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&r| values[r].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&r| values[r].is_negative()).collect();

        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                if common.count_ones(..) + 1 < n {
                    continue;
                }
                let dominated = (0..rays.len())
                    .any(|r| r != p && r != q && common.is_subset(&rays[r].zeros));
                if dominated {
                    continue;
                }
                let mut coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(yq, yp)| &values[p] * yq - &values[q] * yp)
                    .collect();
                linalg::primitive(&mut coords);
                common.insert(i);
                fresh.push(Ray { coords, zeros: common });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, mut ray) in rays.into_iter().enumerate() {
            if values[r].is_zero() {
                ray.zeros.insert(i);
                next.push(ray);
            } else if values[r].is_negative() {
                next.push(ray);
            }
        }
        next.extend(fresh);
        rays = next;
    }

    let mut out = Vec::with_capacity(rays.len());
    for ray in rays {
        let mut normal: Vec<BigInt> = ray.coords[..n].to_vec();
        let g = linalg::gcd_all(normal.iter());
        if g.is_zero() {
            continue;
        }
        let neg_b = -&ray.coords[n];
        if !(&neg_b % &g).is_zero() {
            return Err(Error::InvalidInput("facet rhs not integral".into()));
        }
        let rhs = neg_b / &g;
        for x in normal.iter_mut() {
            *x = &*x / &g;
        }
        let normal: Option<Vec<i64>> = normal.iter().map(big_to_i64).collect();
        let (Some(normal), Some(rhs)) = (normal, big_to_i64(&rhs)) else {
            return Err(Error::Overflow("facet normal exceeds i64".into()));
        };
        out.push(Halfspace::new(normal, rhs));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<IntPoint> {
        v.iter().map(|p| IntPoint::from(p.to_vec())).collect()
    }

    fn hs(v: &[(&[i64], i64)]) -> Vec<Halfspace> {
        let mut out: Vec<Halfspace> = v.iter().map(|(a, b)| Halfspace::new(a.to_vec(), *b)).collect();
        out.sort();
        out
    }

    #[test]
    fn unit_square() {
        let h = convex_hull_halfspaces(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(
            h,
            hs(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 0], 1), (&[0, 1], 1)])
        );
    }

    #[test]
    fn simplex_s2_1() {
        let h = convex_hull_halfspaces(&pts(&[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
        assert_eq!(h, hs(&[(&[1, 1], 1), (&[-2, 1], 1), (&[1, -2], 1)]));
    }

    #[test]
    fn simplex_s3_1_is_reflexive() {
        let h = convex_hull_halfspaces(&pts(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[-1, -1, -1],
        ]))
        .unwrap();
        assert_eq!(h.len(), 4);
        assert!(h.iter().all(|f| f.rhs == 1));
    }

    #[test]
    fn redundant_points_are_ignored() {
        let h = convex_hull_halfspaces(&pts(&[
            &[0, 0],
            &[2, 0],
            &[0, 2],
            &[2, 2],
            &[1, 1],
            &[1, 0],
            &[2, 2],
        ]))
        .unwrap();
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn cube_and_crosspolytope_in_4d() {
        let mut cube = Vec::new();
        for mask in 0..16u32 {
            cube.push(IntPoint::from(
                (0..4).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect::<Vec<_>>(),
            ));
        }
        assert_eq!(convex_hull_halfspaces(&cube).unwrap().len(), 8);
        let mut cross = Vec::new();
        for i in 0..4 {
            for s in [-1, 1] {
                let mut v = vec![0; 4];
                v[i] = s;
                cross.push(IntPoint::from(v));
            }
        }
        let h = convex_hull_halfspaces(&cross).unwrap();
        assert_eq!(h.len(), 16);
        assert!(h.iter().all(|f| f.rhs == 1 && f.normal.iter().all(|x| x.abs() == 1)));
    }

    #[test]
    fn degenerate_and_oversized_inputs() {
        let flat = pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert!(matches!(
            convex_hull_halfspaces(&flat),
            Err(Error::DegenerateInput(_))
        ));
        let big = vec![IntPoint::from(vec![0; 7])];
        assert!(matches!(
            convex_hull_halfspaces(&big),
            Err(Error::DimensionTooLarge { dim: 7, .. })
        ));
    }

    #[test]
    fn one_dimensional_segment() {
        let h = convex_hull_halfspaces(&pts(&[&[-2], &[3], &[0]])).unwrap();
        assert_eq!(h, hs(&[(&[-1], 2), (&[1], 3)]));
    }
}
