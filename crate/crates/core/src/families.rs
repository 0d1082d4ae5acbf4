//! Named polytope families and fixed examples.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{Halfspace, IntPoint, LatticePolytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `conv{e_1, .., e_n, -l(e_1 + .. + e_n)}`
    Sn { n: usize, l: i64 },
    /// `conv{±l e_1, ±e_2, .., ±e_n}`
    CrossStar { n: usize, l: i64 },
    /// `{|x_1| <= l, |x_i| <= 1}`
    BoxQ { n: usize, l: i64 },
    /// `conv{0, e_1, e_2, (1, 1, k)}`
    Reeve { k: i64 },
    /// `conv{0, 2e_1, q e_2, 2e_1 + q e_2, e_3}`
    PyramidP { q: i64 },
    E1,
    E2,
    /// `-(1,1) + conv{0, 3e_1, 3e_2}`
    TriangleS,
    /// 3-polytopes whose complex roots have real part -1, one per `k` in 2..=5.
    RealPartMinus1Witness { k: i64 },
    /// `[0,1]^n`
    UnitCube { n: usize },
    /// `conv{±e_i}`
    StdCross { n: usize },
}

pub const FAMILY_NAMES: &[&str] = &[
    "sn", "cross-star", "box", "reeve", "pyramid", "e1", "e2", "triangle-s", "witness", "cube",
    "cross",
];

fn bad(family: &str, reason: impl Into<String>) -> Error {
    Error::BadParams { family: family.to_string(), reason: reason.into() }
}

fn check_dim(family: &str, n: usize) -> Result<()> {
    if n == 0 {
        Err(bad(family, "n must be at least 1"))
    } else if n > crate::lattice::MAX_DIM {
        Err(bad(family, format!("n must be at most {}", crate::lattice::MAX_DIM)))
    } else {
        Ok(())
    }
}

fn check_pos(family: &str, name: &str, v: i64) -> Result<()> {
    if v < 1 {
        Err(bad(family, format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

impl FamilySpec {
    /// Builds a spec from a family name and `key=value` parameters.
    pub fn from_parts(name: &str, params: &[(String, i64)]) -> Result<Self> {
        let get = |key: &str| params.iter().find(|(k, _)| k == key).map(|(_, v)| *v);
        let need = |key: &str| get(key).ok_or_else(|| bad(name, format!("missing parameter {key}")));
        let allowed: &[&str] = match name {
            "sn" | "cross-star" | "box" => &["n", "l"],
            "reeve" | "witness" => &["k"],
            "pyramid" => &["q"],
            "cube" | "cross" => &["n"],
            "e1" | "e2" | "triangle-s" => &[],
            _ => {
                return Err(bad(
                    name,
                    format!("unknown family; expected one of {}", FAMILY_NAMES.join(", ")),
                ))
            }
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(bad(name, format!("unexpected parameter {k}")));
        }
        let dim = |v: i64| -> Result<usize> {
            usize::try_from(v).map_err(|_| bad(name, "n must be at least 1"))
        };
        let spec = match name {
            "sn" => FamilySpec::Sn { n: dim(need("n")?)?, l: need("l")? },
            "cross-star" => FamilySpec::CrossStar { n: dim(need("n")?)?, l: need("l")? },
            "box" => FamilySpec::BoxQ { n: dim(need("n")?)?, l: need("l")? },
            "reeve" => FamilySpec::Reeve { k: need("k")? },
            "witness" => FamilySpec::RealPartMinus1Witness { k: need("k")? },
            "pyramid" => FamilySpec::PyramidP { q: need("q")? },
            "cube" => FamilySpec::UnitCube { n: dim(need("n")?)? },
            "cross" => FamilySpec::StdCross { n: dim(need("n")?)? },
            "e1" => FamilySpec::E1,
            "e2" => FamilySpec::E2,
            _ => FamilySpec::TriangleS,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let name = self.name();
        match *self {
            FamilySpec::Sn { n, l } | FamilySpec::CrossStar { n, l } | FamilySpec::BoxQ { n, l } => {
                check_dim(name, n)?;
                check_pos(name, "l", l)
            }
            FamilySpec::Reeve { k } => check_pos(name, "k", k),
            FamilySpec::PyramidP { q } => check_pos(name, "q", q),
            FamilySpec::RealPartMinus1Witness { k } => {
                if (2..=5).contains(&k) {
                    Ok(())
                } else {
                    Err(bad(name, "k must be one of 2, 3, 4, 5"))
                }
            }
            FamilySpec::UnitCube { n } | FamilySpec::StdCross { n } => check_dim(name, n),
            FamilySpec::E1 | FamilySpec::E2 | FamilySpec::TriangleS => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Sn { .. } => "sn",
            FamilySpec::CrossStar { .. } => "cross-star",
            FamilySpec::BoxQ { .. } => "box",
            FamilySpec::Reeve { .. } => "reeve",
            FamilySpec::PyramidP { .. } => "pyramid",
            FamilySpec::E1 => "e1",
            FamilySpec::E2 => "e2",
            FamilySpec::TriangleS => "triangle-s",
            FamilySpec::RealPartMinus1Witness { .. } => "witness",
            FamilySpec::UnitCube { .. } => "cube",
            FamilySpec::StdCross { .. } => "cross",
        }
    }

    pub fn build(&self) -> Result<LatticePolytope> {
        self.validate()?;
        let p = match *self {
            FamilySpec::Sn { n, l } => make_sn(n, l)?,
            FamilySpec::CrossStar { n, l } => make_cross_star(n, l)?,
            FamilySpec::BoxQ { n, l } => make_box_q(n, l)?,
            FamilySpec::Reeve { k } => make_reeve(k)?,
            FamilySpec::PyramidP { q } => make_pyramid_p(q)?,
            FamilySpec::E1 => make_e1(),
            FamilySpec::E2 => make_e2(),
            FamilySpec::TriangleS => make_triangle_s(),
            FamilySpec::RealPartMinus1Witness { k } => make_realpart_minus1_witness(k)?,
            FamilySpec::UnitCube { n } => make_unit_cube(n)?,
            FamilySpec::StdCross { n } => make_cross_star(n, 1)?,
        };
        Ok(p.with_label(self.to_string()))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match *self {
            FamilySpec::Sn { n, l } | FamilySpec::CrossStar { n, l } | FamilySpec::BoxQ { n, l } => {
                write!(f, "{name}:n={n},l={l}")
            }
            FamilySpec::Reeve { k } | FamilySpec::RealPartMinus1Witness { k } => {
                write!(f, "{name}:k={k}")
            }
            FamilySpec::PyramidP { q } => write!(f, "{name}:q={q}"),
            FamilySpec::UnitCube { n } | FamilySpec::StdCross { n } => write!(f, "{name}:n={n}"),
            FamilySpec::E1 | FamilySpec::E2 | FamilySpec::TriangleS => write!(f, "{name}"),
        }
    }
}

/// Parses `name` or `name:key=value,key=value`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = match s.split_once(':') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), ""),
        };
        let mut params = Vec::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| bad(name, format!("expected key=value, got {part:?}")))?;
            let v: i64 = v
                .trim()
                .parse()
                .map_err(|_| bad(name, format!("parameter {} is not an integer", k.trim())))?;
            params.push((k.trim().to_string(), v));
        }
        FamilySpec::from_parts(name, &params)
    }
}

fn build(points: Vec<Vec<i64>>, label: String) -> Result<LatticePolytope> {
    LatticePolytope::from_points(points.into_iter().map(IntPoint).collect(), label)
}

fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

pub fn make_sn(n: usize, l: i64) -> Result<LatticePolytope> {
    let spec = FamilySpec::Sn { n, l };
    spec.validate()?;
    let mut pts: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
    pts.push(vec![-l; n]);
    build(pts, spec.to_string())
}

pub fn make_cross_star(n: usize, l: i64) -> Result<LatticePolytope> {
    let spec = FamilySpec::CrossStar { n, l };
    spec.validate()?;
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        let s = if i == 0 { l } else { 1 };
        pts.push(unit(n, i, s));
        pts.push(unit(n, i, -s));
    }
    build(pts, spec.to_string())
}

fn box_points(bounds: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut pts = vec![vec![]];
    for &(lo, hi) in bounds {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                [lo, hi].into_iter().map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    pts
}

pub fn make_box_q(n: usize, l: i64) -> Result<LatticePolytope> {
    let spec = FamilySpec::BoxQ { n, l };
    spec.validate()?;
    let bounds: Vec<(i64, i64)> = (0..n).map(|i| if i == 0 { (-l, l) } else { (-1, 1) }).collect();
    build(box_points(&bounds), spec.to_string())
}

pub fn make_unit_cube(n: usize) -> Result<LatticePolytope> {
    let spec = FamilySpec::UnitCube { n };
    spec.validate()?;
    build(box_points(&vec![(0, 1); n]), spec.to_string())
}

pub fn make_reeve(k: i64) -> Result<LatticePolytope> {
    let spec = FamilySpec::Reeve { k };
    spec.validate()?;
    build(
        vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, k]],
        spec.to_string(),
    )
}

pub fn make_pyramid_p(q: i64) -> Result<LatticePolytope> {
    let spec = FamilySpec::PyramidP { q };
    spec.validate()?;
    build(
        vec![vec![0, 0, 0], vec![2, 0, 0], vec![0, q, 0], vec![2, q, 0], vec![0, 0, 1]],
        spec.to_string(),
    )
}

fn from_h(rows: &[(&[i64], i64)], label: &str) -> LatticePolytope {
    let hs: Vec<Halfspace> = rows.iter().map(|(a, b)| Halfspace::new(a.to_vec(), *b)).collect();
    LatticePolytope::from_halfspaces(&hs, 4, label).expect("fixed example is a lattice polytope")
}

/// The first 4-dimensional reflexive simplex example, given by its facets.
pub fn make_e1() -> LatticePolytope {
    from_h(
        &[
            (&[-1, 0, 0, 0], 1),
            (&[0, -1, 0, 0], 1),
            (&[0, 0, -1, 0], 1),
            (&[0, 0, -1, -2], 1),
            (&[2, 1, 2, 2], 1),
        ],
        "e1",
    )
}

/// The second 4-dimensional reflexive simplex example.
pub fn make_e2() -> LatticePolytope {
    from_h(
        &[
            (&[-1, 0, 0, 0], 1),
            (&[0, -1, 0, 0], 1),
            (&[-2, -3, -4, 0], 1),
            (&[-4, -5, 0, -8], 1),
            (&[10, 9, 4, 8], 1),
        ],
        "e2",
    )
}

pub fn make_triangle_s() -> LatticePolytope {
    build(vec![vec![-1, -1], vec![2, -1], vec![-1, 2]], "triangle-s".into()).expect("fixed triangle")
}

pub fn make_realpart_minus1_witness(k: i64) -> Result<LatticePolytope> {
    let spec = FamilySpec::RealPartMinus1Witness { k };
    spec.validate()?;
    let pts = match k {
        2 => vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]],
        3 => vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![2, 2, 3]],
        4 => vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![2, 3, 4]],
        _ => vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 2, 0], vec![2, 1, 0], vec![0, 0, 1]],
    };
    build(pts, spec.to_string())
}

/// Cartesian product `P x Q`.
pub fn product(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    let mut pts = Vec::with_capacity(p.vertices().len() * q.vertices().len());
    for a in p.vertices() {
        for b in q.vertices() {
            let mut v = a.0.clone();
            v.extend_from_slice(b);
            pts.push(v);
        }
    }
    build(pts, format!("{}x{}", p.label(), q.label()))
}

/// `conv{Q x 0, ±e_{n+1}}` for a polytope `Q` with the origin in its interior.
pub fn bipyramid(q: &LatticePolytope) -> Result<LatticePolytope> {
    let n = q.dim();
    if !q.contains_strictly(&vec![0; n]) {
        return Err(Error::DegenerateInput(
            "bipyramid base must contain the origin in its interior".into(),
        ));
    }
    let mut pts: Vec<Vec<i64>> = q
        .vertices()
        .iter()
        .map(|v| {
            let mut w = v.0.clone();
            w.push(0);
            w
        })
        .collect();
    pts.push(unit(n + 1, n, 1));
    pts.push(unit(n + 1, n, -1));
    build(pts, format!("bipyramid({})", q.label()))
}
