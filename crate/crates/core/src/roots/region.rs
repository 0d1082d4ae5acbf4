//! Location of the roots of 3-dimensional Ehrhart polynomials.

use serde::Serialize;

use super::RootSet;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionTag {
    /// Real root in `[-3, -1]`.
    RealInSegment,
    /// Root with `-1 <= re < 1` and `|z|^2 <= 3`.
    InDisc,
    /// `|z|^2 = 3` within tolerance.
    DiscBoundary,
    /// Non-real root on `(a + 1)^2 + b^2 = 2`.
    BoundarySemicircle,
    RealPartMinus1,
    RealPartMinusHalf,
    Outside,
}

impl RegionTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegionTag::RealInSegment => "real_in_segment",
            RegionTag::InDisc => "in_disc",
            RegionTag::DiscBoundary => "disc_boundary",
            RegionTag::BoundarySemicircle => "boundary_semicircle",
            RegionTag::RealPartMinus1 => "real_part_minus1",
            RegionTag::RealPartMinusHalf => "real_part_minus_half",
            RegionTag::Outside => "outside",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootVerdict {
    pub re: f64,
    pub im: f64,
    pub tags: Vec<RegionTag>,
    /// Signed distance into `[-3, -1]` for real roots (negative outside).
    pub segment_margin: Option<f64>,
    /// `3 - |z|^2`.
    pub disc_margin: f64,
    /// `2 - ((a + 1)^2 + b^2)`.
    pub semicircle_margin: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionVerdict {
    pub interior_points: u64,
    pub roots: Vec<RootVerdict>,
    /// Every root lies in `[-3, -1] ∪ {-1 <= a < 1, a^2 + b^2 <= 3}`.
    pub in_region: bool,
    /// Only for polytopes without interior points: real roots in
    /// `{-3, -2} ∪ (-2, 1)` and non-real roots in the half disc
    /// `(a + 1)^2 + b^2 <= 2, a >= -1`.
    pub no_interior_region: Option<bool>,
}

impl RegionVerdict {
    pub fn holds(&self) -> bool {
        self.in_region && self.no_interior_region.unwrap_or(true)
    }
}

/// Tags every root of a cubic Ehrhart polynomial; `l` is the number of
/// interior lattice points of the polytope.
pub fn classify_3d(r: &RootSet, l: u64) -> Result<RegionVerdict> {
    if r.count() != 3 {
        return Err(Error::WrongDegree { expected: 3, got: r.count() });
    }
    let tol = r.tol;
    let mut roots = Vec::with_capacity(r.roots.len());
    let mut in_region = true;
    let mut w_region = true;
    for z in &r.roots {
        let (a, b) = (z.re, z.im);
        let real = z.is_real();
        let norm2 = a * a + b * b;
        let semi = (a + 1.0).powi(2) + b * b;
        let mut tags = Vec::new();
        let segment_margin = real.then(|| (a + 3.0).min(-1.0 - a));
        let on_segment = segment_margin.is_some_and(|m| m >= -tol);
        if on_segment {
            tags.push(RegionTag::RealInSegment);
        }
        let on_disc = a >= -1.0 - tol && a < 1.0 + tol && norm2 <= 3.0 + tol;
        if on_disc {
            tags.push(RegionTag::InDisc);
        }
        if (norm2 - 3.0).abs() <= tol {
            tags.push(RegionTag::DiscBoundary);
        }
        if !real && (semi - 2.0).abs() <= tol {
            tags.push(RegionTag::BoundarySemicircle);
        }
        if !real && (a + 1.0).abs() <= tol {
            tags.push(RegionTag::RealPartMinus1);
        }
        if (a + 0.5).abs() <= tol {
            tags.push(RegionTag::RealPartMinusHalf);
        }
        if !on_segment && !on_disc {
            tags.push(RegionTag::Outside);
            in_region = false;
        }
        if l == 0 {
            let ok = if real {
                (a + 3.0).abs() <= tol || (a + 2.0).abs() <= tol || (a > -2.0 && a < 1.0)
            } else {
                semi <= 2.0 + tol && a >= -1.0 - tol
            };
            w_region &= ok;
        }
        roots.push(RootVerdict {
            re: a,
            im: b,
            tags,
            segment_margin,
            disc_margin: 3.0 - norm2,
            semicircle_margin: 2.0 - semi,
        });
    }
    Ok(RegionVerdict {
        interior_points: l,
        roots,
        in_region,
        no_interior_region: (l == 0).then_some(w_region),
    })
}
