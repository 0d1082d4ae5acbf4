//! Seeded random lattice polytopes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{IntPoint, LatticePolytope};
use crate::linalg;

/// Consecutive rejected draws tolerated before giving up.
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomPolytopeConfig {
    pub dim: usize,
    pub coord_bound: i64,
    pub num_points: usize,
    pub seed: u64,
    pub count: usize,
    /// Mirror every sampled point through the origin.
    pub symmetric: bool,
    pub require_interior: bool,
}

impl RandomPolytopeConfig {
    pub fn new(dim: usize, seed: u64, count: usize) -> Self {
        RandomPolytopeConfig {
            dim,
            coord_bound: 3,
            num_points: dim + 3,
            seed,
            count,
            symmetric: false,
            require_interior: false,
        }
    }
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn point(r: &mut ChaCha8Rng, dim: usize, bound: i64) -> Vec<i64> {
    (0..dim).map(|_| r.gen_range(-bound..=bound)).collect()
}

/// Hulls of uniformly sampled integer points in `[-b, b]^dim`.
pub fn generate_random(cfg: &RandomPolytopeConfig) -> Result<Vec<LatticePolytope>> {
    if cfg.dim == 0 || cfg.coord_bound < 1 || cfg.num_points == 0 {
        return Err(Error::InvalidInput("random polytope parameters must be positive".into()));
    }
    let mut r = rng(cfg.seed, 0);
    let mut out = Vec::with_capacity(cfg.count);
    let mut failures = 0;
    while out.len() < cfg.count {
        let mut pts: Vec<Vec<i64>> =
            (0..cfg.num_points).map(|_| point(&mut r, cfg.dim, cfg.coord_bound)).collect();
        if cfg.symmetric {
            let neg: Vec<Vec<i64>> = pts.iter().map(|p| p.iter().map(|x| -x).collect()).collect();
            pts.extend(neg);
        }
        let label = format!(
            "random-d{}{}-s{}-{}",
            cfg.dim,
            if cfg.symmetric { "sym" } else { "" },
            cfg.seed,
            out.len()
        );
        let ok = match LatticePolytope::from_points(pts.into_iter().map(IntPoint).collect(), label) {
            Ok(p) if !cfg.require_interior || !p.interior_lattice_points().is_empty() => Some(p),
            Ok(_) | Err(Error::DegenerateInput(_)) => None,
            Err(e) => return Err(e),
        };
        match ok {
            Some(p) => {
                out.push(p);
                failures = 0;
            }
            None => {
                failures += 1;
                if failures >= MAX_ATTEMPTS {
                    return Err(Error::ExhaustedAttempts { attempts: failures });
                }
            }
        }
    }
    Ok(out)
}

/// Random full-dimensional lattice simplices with vertices in `[-b, b]^dim`.
pub fn random_simplices(dim: usize, bound: i64, seed: u64, count: usize) -> Result<Vec<LatticePolytope>> {
    let mut r = rng(seed, 1);
    let mut out = Vec::with_capacity(count);
    let mut failures = 0;
    while out.len() < count {
        let pts: Vec<Vec<i64>> = (0..=dim).map(|_| point(&mut r, dim, bound)).collect();
        if linalg::affine_rank(&pts) == dim {
            let label = format!("simplex-d{dim}-s{seed}-{}", out.len());
            out.push(LatticePolytope::from_points(pts.into_iter().map(IntPoint).collect(), label)?);
            failures = 0;
        } else {
            failures += 1;
            if failures >= MAX_ATTEMPTS {
                return Err(Error::ExhaustedAttempts { attempts: failures });
            }
        }
    }
    Ok(out)
}

/// `conv{±v_1, .., ±v_n}` for random linearly independent `v_i`.
pub fn random_crosspolytopes(dim: usize, bound: i64, seed: u64, count: usize) -> Result<Vec<LatticePolytope>> {
    let mut r = rng(seed, 2);
    let mut out = Vec::with_capacity(count);
    let mut failures = 0;
    while out.len() < count {
        let vs: Vec<Vec<i64>> = (0..dim).map(|_| point(&mut r, dim, bound)).collect();
        if linalg::rank_i64(&vs) == dim {
            let mut pts = vs.clone();
            pts.extend(vs.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
            let label = format!("cross-d{dim}-s{seed}-{}", out.len());
            out.push(LatticePolytope::from_points(pts.into_iter().map(IntPoint).collect(), label)?);
            failures = 0;
        } else {
            failures += 1;
            if failures >= MAX_ATTEMPTS {
                return Err(Error::ExhaustedAttempts { attempts: failures });
            }
        }
    }
    Ok(out)
}

/// A random integer matrix with determinant ±1: a signed permutation times a
/// few elementary row operations.
pub fn random_unimodular(r: &mut ChaCha8Rng, dim: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
        .collect();
    if dim > 1 {
        for _ in 0..2 * dim {
            let i = r.gen_range(0..dim);
            let mut j = r.gen_range(0..dim - 1);
            if j >= i {
                j += 1;
            }
            let c = r.gen_range(-2..=2);
            for col in 0..dim {
                m[i][col] += c * m[j][col];
            }
        }
    }
    m.shuffle(r);
    for row in m.iter_mut() {
        if r.gen_bool(0.5) {
            row.iter_mut().for_each(|x| *x = -*x);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{determinant, to_big_matrix};
    use num_traits::Signed;

    #[test]
    fn deterministic_per_seed() {
        let cfg = RandomPolytopeConfig { num_points: 5, coord_bound: 2, ..RandomPolytopeConfig::new(2, 42, 10) };
        let a = generate_random(&cfg).unwrap();
        let b = generate_random(&cfg).unwrap();
        assert_eq!(a.len(), 10);
        assert_eq!(a, b);
        let c = generate_random(&RandomPolytopeConfig { seed: 43, ..cfg }).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn symmetric_and_interior_filters() {
        let sym = RandomPolytopeConfig { symmetric: true, ..RandomPolytopeConfig::new(3, 7, 10) };
        assert!(generate_random(&sym).unwrap().iter().all(|p| p.is_origin_symmetric()));
        let int = RandomPolytopeConfig { require_interior: true, ..RandomPolytopeConfig::new(3, 7, 10) };
        assert!(generate_random(&int).unwrap().iter().all(|p| !p.interior_lattice_points().is_empty()));
    }

    #[test]
    fn impossible_constraints_give_up() {
        // a single point per draw is never full-dimensional
        let cfg = RandomPolytopeConfig { num_points: 1, ..RandomPolytopeConfig::new(2, 1, 1) };
        assert!(matches!(generate_random(&cfg), Err(Error::ExhaustedAttempts { .. })));
    }

    #[test]
    fn simplices_and_crosspolytopes() {
        for p in random_simplices(4, 4, 3, 10).unwrap() {
            assert!(p.is_simplex());
        }
        for p in random_crosspolytopes(3, 2, 3, 10).unwrap() {
            assert_eq!(p.vertices().len(), 6);
            assert!(p.is_origin_symmetric());
        }
    }

    #[test]
    fn unimodular_matrices() {
        let mut r = rng(5, 0);
        for dim in 1..=4 {
            for _ in 0..20 {
                let u = random_unimodular(&mut r, dim);
                assert!(determinant(&to_big_matrix(&u)).abs() == 1.into());
            }
        }
    }
}
