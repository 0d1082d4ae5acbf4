//! Lattice points, halfspaces and full-dimensional lattice polytopes.

use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::counting;
use crate::error::{Error, Result};
use crate::hull::convex_hull_halfspaces;
use crate::linalg::{self, big_to_i64};

/// Largest ambient dimension accepted by the hull and counting code.
pub const MAX_DIM: usize = 6;

/// A point of Z^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoint(pub Vec<i64>);

impl Deref for IntPoint {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IntPoint {
    fn from(v: Vec<i64>) -> Self {
        IntPoint(v)
    }
}

impl IntPoint {
    pub fn origin(dim: usize) -> Self {
        IntPoint(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        IntPoint(v)
    }
}

/// A point with rational coordinates (e.g. a vertex of a polar dual).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(pub Vec<BigRational>);

impl RationalPoint {
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn to_int_point(&self) -> Option<IntPoint> {
        self.0
            .iter()
            .map(|x| if x.is_integer() { big_to_i64(&x.to_integer()) } else { None })
            .collect::<Option<Vec<_>>>()
            .map(IntPoint)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The halfspace `normal · x <= rhs` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: IntPoint,
    pub rhs: i64,
}

impl Halfspace {
    pub fn new(normal: Vec<i64>, rhs: i64) -> Self {
        Halfspace { normal: IntPoint(normal), rhs }
    }

    /// `normal · x`, computed without overflow for desk-scale inputs.
    #[inline]
    pub fn eval(&self, x: &[i64]) -> i128 {
        self.normal
            .iter()
            .zip(x)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    /// Slack `rhs - normal · x`.
    #[inline]
    pub fn slack(&self, x: &[i64]) -> i128 {
        self.rhs as i128 - self.eval(x)
    }

    pub fn is_primitive(&self) -> bool {
        let big: Vec<BigInt> = self.normal.iter().map(|&x| BigInt::from(x)).collect();
        linalg::gcd_all(big.iter()).is_one()
    }
}

/// A full-dimensional convex lattice polytope in Z^n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolytopeJson", into = "PolytopeJson")]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<IntPoint>,
    halfspaces: Vec<Halfspace>,
    label: String,
}

/// On-disk polytope format: `{"dim": n, "vertices": [[..], ..], "label": ".."}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    #[serde(default)]
    pub label: String,
}

impl TryFrom<PolytopeJson> for LatticePolytope {
    type Error = Error;

    fn try_from(j: PolytopeJson) -> Result<Self> {
        if j.vertices.iter().any(|v| v.len() != j.dim) {
            return Err(Error::InvalidInput(format!(
                "every vertex must have {} coordinates",
                j.dim
            )));
        }
        LatticePolytope::from_points(j.vertices.into_iter().map(IntPoint).collect(), j.label)
    }
}

impl From<LatticePolytope> for PolytopeJson {
    fn from(p: LatticePolytope) -> Self {
        PolytopeJson {
            dim: p.dim,
            vertices: p.vertices.into_iter().map(|v| v.0).collect(),
            label: p.label,
        }
    }
}

impl LatticePolytope {
    /// Convex hull of `points`; non-extreme and duplicate points are dropped.
    pub fn from_points(points: Vec<IntPoint>, label: impl Into<String>) -> Result<Self> {
        let halfspaces = convex_hull_halfspaces(&points)?;
        let dim = points[0].len();
        let mut candidates = points;
        candidates.sort();
        candidates.dedup();
        let vertices: Vec<IntPoint> = candidates
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<i64>> = halfspaces
                    .iter()
                    .filter(|h| h.slack(p) == 0)
                    .map(|h| h.normal.0.clone())
                    .collect();
                tight.len() >= dim && linalg::rank_i64(&tight) == dim
            })
            .collect();
        Ok(LatticePolytope {
            dim,
            vertices,
            halfspaces,
            label: label.into(),
        })
    }

    /// Builds a polytope from an H-description; its vertices must be integral.
    pub fn from_halfspaces(
        halfspaces: &[Halfspace],
        dim: usize,
        label: impl Into<String>,
    ) -> Result<Self> {
        let verts = vertices_from_halfspaces(halfspaces, dim)?;
        let mut points = Vec::with_capacity(verts.len());
        for v in &verts {
            match v.to_int_point() {
                Some(p) => points.push(p),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "halfspace system has non-integral vertex {v}"
                    )))
                }
            }
        }
        if points.is_empty() {
            return Err(Error::DegenerateInput("halfspace system has no vertices".into()));
        }
        Self::from_points(points, label)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntPoint] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.halfspaces.iter().all(|h| h.slack(x) >= 0)
    }

    pub fn contains_strictly(&self, x: &[i64]) -> bool {
        self.halfspaces.iter().all(|h| h.slack(x) > 0)
    }

    /// Is the vertex set closed under `x -> -x`?
    pub fn is_origin_symmetric(&self) -> bool {
        self.vertices.iter().all(|v| {
            let neg = IntPoint(v.iter().map(|x| -x).collect());
            self.vertices.binary_search(&neg).is_ok()
        })
    }

    /// Axis-aligned bounding box `(min, max)` of the vertices.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = self.vertices[0].0.clone();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            for i in 0..self.dim {
                lo[i] = lo[i].min(v[i]);
                hi[i] = hi[i].max(v[i]);
            }
        }
        (lo, hi)
    }

    /// `x -> U x + t` for an integer matrix with `|det U| = 1`.
    pub fn apply_unimodular(&self, u: &[Vec<i64>], t: &[i64]) -> Result<Self> {
        let n = self.dim;
        if u.len() != n || u.iter().any(|r| r.len() != n) || t.len() != n {
            return Err(Error::InvalidInput(format!("transform must be {n}x{n} with shift of length {n}")));
        }
        let det = linalg::determinant(&linalg::to_big_matrix(u));
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        let mut points = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let mut img = Vec::with_capacity(n);
            for i in 0..n {
                let s: i128 = (0..n).map(|j| u[i][j] as i128 * v[j] as i128).sum::<i128>() + t[i] as i128;
                img.push(i64::try_from(s).map_err(|_| Error::Overflow("transformed vertex".into()))?);
            }
            points.push(IntPoint(img));
        }
        Self::from_points(points, self.label.clone())
    }

    pub fn translate(&self, t: &[i64]) -> Result<Self> {
        let id: Vec<Vec<i64>> = (0..self.dim).map(|i| IntPoint::unit(self.dim, i).0).collect();
        self.apply_unimodular(&id, t)
    }

    /// The dilate `k P` as a lattice polytope.
    pub fn dilate(&self, k: i64) -> Result<Self> {
        if k <= 0 {
            return Err(Error::InvalidInput("dilation factor must be positive".into()));
        }
        let points = self
            .vertices
            .iter()
            .map(|v| IntPoint(v.iter().map(|x| x * k).collect()))
            .collect();
        Self::from_points(points, format!("{}*{}", k, self.label))
    }

    /// All lattice points strictly inside.
    pub fn interior_lattice_points(&self) -> Vec<IntPoint> {
        counting::lattice_points(self, 1, true)
    }

    /// Vertices of the polar dual of `P - center`.
    pub fn polar_dual(&self, center: &[i64]) -> Result<Vec<RationalPoint>> {
        if center.len() != self.dim || !self.contains_strictly(center) {
            return Err(Error::CenterNotInterior { point: center.to_vec() });
        }
        let mut out: Vec<RationalPoint> = self
            .halfspaces
            .iter()
            .map(|h| {
                let r = BigInt::from(h.slack(center));
                RationalPoint(
                    h.normal
                        .iter()
                        .map(|&a| BigRational::new(BigInt::from(a), r.clone()))
                        .collect(),
                )
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// The polar dual about `center` when it is a lattice polytope.
    pub fn integral_polar_dual(&self, center: &[i64]) -> Result<Option<Self>> {
        let verts = self.polar_dual(center)?;
        let pts: Option<Vec<IntPoint>> = verts.iter().map(|v| v.to_int_point()).collect();
        match pts {
            Some(p) => Ok(Some(Self::from_points(p, format!("dual({})", self.label))?)),
            None => Ok(None),
        }
    }

    pub fn facet_vertices(&self, facet: usize) -> Vec<&IntPoint> {
        let h = &self.halfspaces[facet];
        self.vertices.iter().filter(|v| h.slack(v) == 0).collect()
    }

    /// Maps facet `facet` by a unimodular transform onto Z^{n-1}.
    ///
    /// The image is lattice-equivalent to the facet inside `aff F ∩ Z^n`, so
    /// its Euclidean volume is the facet's relative (normalized) volume.
    pub fn flatten_facet(&self, facet: usize) -> Result<Self> {
        let n = self.dim;
        if n < 2 {
            return Err(Error::DimensionUnsupported(n));
        }
        let h = &self.halfspaces[facet];
        let w = linalg::unimodular_completion(&h.normal)
            .ok_or_else(|| Error::InvalidInput("facet normal is not primitive".into()))?;
        let winv = linalg::inverse(&linalg::to_rat_matrix(&w)).expect("unimodular");
        let mut points = Vec::new();
        for v in self.facet_vertices(facet) {
            let mut y = Vec::with_capacity(n - 1);
            for row in winv.iter().skip(1) {
                let s: BigRational = row
                    .iter()
                    .zip(v.iter())
                    .map(|(a, &x)| a * BigRational::from_integer(BigInt::from(x)))
                    .sum();
                debug_assert!(s.is_integer());
                y.push(big_to_i64(&s.to_integer()).ok_or_else(|| Error::Overflow("facet flattening".into()))?);
            }
            points.push(IntPoint(y));
        }
        Self::from_points(points, format!("facet{}({})", facet, self.label))
    }

    /// Exact Euclidean volume by recursive pyramid decomposition over facets.
    pub fn volume(&self) -> BigRational {
        if self.dim == 1 {
            let (lo, hi) = self.bounding_box();
            return BigRational::from_integer(BigInt::from(hi[0] - lo[0]));
        }
        let apex = &self.vertices[0];
        let mut total = BigRational::zero();
        for (i, h) in self.halfspaces.iter().enumerate() {
            let height = h.slack(apex);
            if height == 0 {
                continue;
            }
            let facet = self.flatten_facet(i).expect("facets of a valid polytope flatten");
            total += facet.volume() * BigRational::from_integer(BigInt::from(height));
        }
        total / BigRational::from_integer(BigInt::from(self.dim as i64))
    }

    /// `n! vol(P)`, always an integer.
    pub fn normalized_volume(&self) -> BigInt {
        let f: BigInt = (1..=self.dim as i64).map(BigInt::from).product();
        let v = self.volume() * BigRational::from_integer(f);
        debug_assert!(v.is_integer());
        v.to_integer()
    }
}

/// Exact vertex enumeration of `{x : h.normal · x <= h.rhs}` by brute force over
/// n-subsets of the constraints.
pub fn vertices_from_halfspaces(halfspaces: &[Halfspace], dim: usize) -> Result<Vec<RationalPoint>> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
    }
    if halfspaces.iter().any(|h| h.normal.len() != dim) {
        return Err(Error::InvalidInput("halfspace of wrong dimension".into()));
    }
    let m = halfspaces.len();
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut out: Vec<RationalPoint> = Vec::new();
    let mut idx: Vec<usize> = (0..dim).collect();
    if m < dim {
        return Ok(out);
    }
    loop {
        let a: Vec<Vec<BigRational>> = idx
            .iter()
            .map(|&i| halfspaces[i].normal.iter().map(|&x| rat(x)).collect())
            .collect();
        let b: Vec<BigRational> = idx.iter().map(|&i| rat(halfspaces[i].rhs)).collect();
        if let Some(x) = linalg::solve(&a, &b) {
            let feasible = halfspaces.iter().all(|h| {
                let s: BigRational = h.normal.iter().zip(&x).map(|(&a, xi)| rat(a) * xi).sum();
                s <= rat(h.rhs)
            });
            if feasible {
                out.push(RationalPoint(x));
            }
        }
        // next combination
        let mut i = dim;
        loop {
            if i == 0 {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            i -= 1;
            if idx[i] < m - dim + i {
                idx[i] += 1;
                for j in i + 1..dim {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
