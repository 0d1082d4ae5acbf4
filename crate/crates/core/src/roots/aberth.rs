//! Simultaneous root iteration in f64 and in 256-bit binary floats.

use dashu_float::ops::Abs;
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

pub type Float = FBig<HalfEven, 2>;

/// Working precision in bits for the refinement stage.
pub const PREC: usize = 256;

pub fn fl(x: f64) -> Float {
    Float::try_from(x).expect("finite").with_precision(PREC).value()
}

fn big(x: &BigInt) -> Float {
    let i: IBig = x.to_string().parse().expect("decimal integer");
    Float::from(i).with_precision(PREC).value()
}

pub fn from_rational(x: &BigRational) -> Float {
    big(x.numer()) / big(x.denom())
}

pub fn to_f64(x: &Float) -> f64 {
    x.to_f64().value()
}

/// Complex number over [`Float`].
#[derive(Clone, Debug)]
pub struct HpComplex {
    pub re: Float,
    pub im: Float,
}

impl HpComplex {
    pub fn new(re: Float, im: Float) -> Self {
        HpComplex { re, im }
    }

    pub fn from_c64(z: Complex64) -> Self {
        HpComplex { re: fl(z.re), im: fl(z.im) }
    }

    pub fn zero() -> Self {
        HpComplex { re: fl(0.0), im: fl(0.0) }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    pub fn add(&self, o: &Self) -> Self {
        HpComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Self) -> Self {
        HpComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &Self) -> Self {
        HpComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn scale(&self, s: &Float) -> Self {
        HpComplex { re: &self.re * s, im: &self.im * s }
    }

    pub fn norm_sqr(&self) -> Float {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        HpComplex { re: &self.re / &d, im: -(&self.im / &d) }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn is_zero(&self) -> bool {
        self.re == fl(0.0) && self.im == fl(0.0)
    }
}

/// Value and derivative of `sum c_i z^i` by Horner's rule.
fn horner_f64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn horner_hp(c: &[Float], z: &HpComplex) -> (HpComplex, HpComplex) {
    let mut p = HpComplex::zero();
    let mut dp = HpComplex::zero();
    for a in c.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z);
        p.re = &p.re + a;
    }
    (p, dp)
}

/// `|p(z)| / sum |c_i| |z|^i`, evaluated in extended precision.
pub fn relative_residual(c: &[Float], z: &HpComplex) -> f64 {
    let (p, _) = horner_hp(c, z);
    let r = z.abs();
    let mut scale = fl(0.0);
    for a in c.iter().rev() {
        scale = scale * &r + a.clone().abs();
    }
    if scale == fl(0.0) {
        return 0.0;
    }
    to_f64(&(p.abs() / scale))
}

/// Starting points on a slightly rotated circle around the root centroid.
fn initial_points(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let center = -c[n - 1] / (n as f64 * lead);
    // geometric mean of root magnitudes about the centroid is a decent radius
    let radius = (c[0].abs() / lead.abs()).powf(1.0 / n as f64).max(1.0);
    (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::new(center, 0.0) + Complex64::from_polar(radius, t)
        })
        .collect()
}

/// Aberth-Ehrlich iteration in f64 with Gauss-Seidel updates.
pub fn aberth_f64(c: &[f64], max_iter: usize) -> Vec<Complex64> {
    let n = c.len() - 1;
    let mut z = initial_points(c);
    for _ in 0..max_iter {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner_f64(c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let w = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let corr = w / (Complex64::new(1.0, 0.0) - w * s);
            if !corr.is_finite() {
                continue;
            }
            z[k] -= corr;
            worst = worst.max(corr.norm() / (1.0 + z[k].norm()));
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// Aberth-Ehrlich refinement in extended precision from the given seeds.
pub fn aberth_hp(c: &[Float], seeds: &[Complex64], max_iter: usize) -> Vec<HpComplex> {
    let n = seeds.len();
    let mut z: Vec<HpComplex> = seeds.iter().map(|&s| HpComplex::from_c64(s)).collect();
    let one = fl(1.0);
    let stop = fl(2f64.powi(-(PREC as i32) + 24));
    for _ in 0..max_iter {
        let mut worst = fl(0.0);
        for k in 0..n {
            let (p, dp) = horner_hp(c, &z[k]);
            if p.is_zero() {
                continue;
            }
            let w = p.div(&dp);
            let mut s = HpComplex::zero();
            for j in 0..n {
                if j != k {
                    let d = z[k].sub(&z[j]);
                    if !d.is_zero() {
                        s = s.add(&d.recip());
                    }
                }
            }
            let mut denom = w.mul(&s);
            denom.re = &one - &denom.re;
            denom.im = -denom.im;
            if denom.is_zero() {
                continue;
            }
            let corr = w.div(&denom);
            z[k] = z[k].sub(&corr);
            let rel = corr.abs() / (&one + z[k].abs());
            if rel > worst {
                worst = rel;
            }
        }
        if worst < stop {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_stage_finds_cubic_roots() {
        // (s - 1)(s - 2)(s + 3) = s^3 - 7s + 6
        let z = aberth_f64(&[6.0, -7.0, 0.0, 1.0], 500);
        let mut re: Vec<f64> = z.iter().map(|x| x.re).collect();
        re.sort_by(f64::total_cmp);
        for (a, b) in re.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn refinement_reaches_extended_precision() {
        // s^2 + 2: roots ±i sqrt 2
        let c: Vec<Float> = [2.0, 0.0, 1.0].iter().map(|&x| fl(x)).collect();
        let seeds = aberth_f64(&[2.0, 0.0, 1.0], 100);
        let z = aberth_hp(&c, &seeds, 50);
        let two = fl(2.0);
        for r in &z {
            let err = (r.im.clone().abs() - two.sqrt()).abs();
            assert!(to_f64(&err) < 1e-60);
            assert!(relative_residual(&c, r) < 1e-60);
        }
    }
}
