//! Integer polynomials in one variable (x) and two variables (x, z), with
//! gcd by primitive pseudo-remainder sequences.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::real::{Precision, Real};

/// Converts a big integer to a real at the given precision.
pub fn bigint_to_real<R: Real>(n: &BigInt, p: Precision) -> R {
    if let Some(v) = n.to_i64() {
        return R::from_i64(v, p);
    }
    let (sign, digits) = n.to_u32_digits();
    let base = R::pow2(32, p);
    let mut acc = R::zero(p);
    for d in digits.iter().rev() {
        acc = acc * base.clone() + R::from_i64(*d as i64, p);
    }
    if sign == Sign::Minus {
        -acc
    } else {
        acc
    }
}

/// Dense polynomial in x, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<BigInt>);

impl UPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: BigInt) -> Self {
        UPoly::new(vec![c])
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        UPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn x() -> Self {
        UPoly::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        UPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }

    pub fn scale(&self, k: &BigInt) -> UPoly {
        UPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.0.iter().cloned());
        UPoly(c)
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn div_scalar(&self, k: &BigInt) -> UPoly {
        UPoly(self.0.iter().map(|c| c / k).collect())
    }

    /// Divided by its content, leading coefficient positive.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// `lc(b)^(deg a - deg b + 1) a mod b`.
    pub fn prem(&self, b: &UPoly) -> UPoly {
        let mut r = self.clone();
        let db = b.degree();
        let lb = b.lc();
        while r.degree() >= db && !r.is_zero() {
            let k = (r.degree() - db) as usize;
            let lr = r.lc();
            r = r.scale(&lb).sub(&b.scale(&lr).shift(k));
        }
        r
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        if self.is_zero() {
            return o.primitive().scale(&o.content());
        }
        if o.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = if self.degree() >= o.degree() { (self.primitive(), o.primitive()) } else { (o.primitive(), self.primitive()) };
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c)
    }

    /// Exact quotient, if `o` divides `self` over the integers.
    pub fn div_exact(&self, o: &UPoly) -> Option<UPoly> {
        if o.is_zero() {
            return None;
        }
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); (self.degree() - o.degree() + 1).max(0) as usize];
        let lo = o.lc();
        while !r.is_zero() && r.degree() >= o.degree() {
            let k = (r.degree() - o.degree()) as usize;
            let (t, rem) = r.lc().div_rem(&lo);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&o.scale(&t).shift(k));
            q[k] = t;
        }
        r.is_zero().then(|| UPoly::new(q))
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval<R: Real>(&self, x: &R) -> R {
        let p = x.precision();
        self.0.iter().rev().fold(R::zero(p), |acc, c| acc * x.clone() + bigint_to_real::<R>(c, p))
    }

    /// Largest coefficient magnitude as f64 (for scale-aware thresholds).
    pub fn max_abs_f64(&self) -> f64 {
        self.0.iter().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).fold(0.0, f64::max)
    }
}

/// Polynomial in z whose coefficients are polynomials in x.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BPoly(Vec<UPoly>);

impl BPoly {
    pub fn new(mut c: Vec<UPoly>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        BPoly(c)
    }

    pub fn zero() -> Self {
        BPoly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        BPoly::new(vec![UPoly::from_i64s(&[c])])
    }

    pub fn x() -> Self {
        BPoly::new(vec![UPoly::x()])
    }

    pub fn z() -> Self {
        BPoly::new(vec![UPoly::zero(), UPoly::from_i64s(&[1])])
    }

    /// From `(i, j, c)` terms meaning `c x^i z^j`.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let dz = terms.iter().map(|t| t.1).max().map_or(0, |d| d + 1);
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); dz];
        for &(i, j, c) in terms {
            if rows[j].len() <= i {
                rows[j].resize(i + 1, BigInt::zero());
            }
            rows[j][i] += c;
        }
        BPoly::new(rows.into_iter().map(UPoly::new).collect())
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deg_z(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn deg_x(&self) -> isize {
        self.0.iter().map(UPoly::degree).max().unwrap_or(-1)
    }

    pub fn total_degree(&self) -> isize {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| j as isize + c.degree()).max().unwrap_or(-1)
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree() <= 0
    }

    pub fn lc(&self) -> UPoly {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &BPoly) -> BPoly {
        let n = self.0.len().max(o.0.len());
        let z = UPoly::zero();
        BPoly::new((0..n).map(|j| self.0.get(j).unwrap_or(&z).add(o.0.get(j).unwrap_or(&z))).collect())
    }

    pub fn neg(&self) -> BPoly {
        BPoly(self.0.iter().map(UPoly::neg).collect())
    }

    pub fn sub(&self, o: &BPoly) -> BPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &BPoly) -> BPoly {
        if self.is_zero() || o.is_zero() {
            return BPoly::zero();
        }
        let mut c = vec![UPoly::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        BPoly::new(c)
    }

    pub fn scale_x(&self, k: &UPoly) -> BPoly {
        BPoly::new(self.0.iter().map(|c| c.mul(k)).collect())
    }

    fn shift_z(&self, k: usize) -> BPoly {
        if self.is_zero() {
            return BPoly::zero();
        }
        let mut c = vec![UPoly::zero(); k];
        c.extend(self.0.iter().cloned());
        BPoly(c)
    }

    /// Content with respect to z: gcd in Z[x] of all coefficients.
    pub fn content_x(&self) -> UPoly {
        self.0.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
    }

    pub fn div_x_exact(&self, k: &UPoly) -> Option<BPoly> {
        Some(BPoly::new(self.0.iter().map(|c| c.div_exact(k)).collect::<Option<Vec<_>>>()?))
    }

    /// Sign-normalized so the leading coefficient's leading coefficient is positive.
    fn normalize_sign(self) -> BPoly {
        if self.lc().lc().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Primitive part with respect to z (content in Z[x] removed).
    pub fn primitive(&self) -> BPoly {
        if self.is_zero() {
            return BPoly::zero();
        }
        let c = self.content_x();
        self.div_x_exact(&c).expect("content divides").normalize_sign()
    }

    fn prem(&self, b: &BPoly) -> BPoly {
        let mut r = self.clone();
        let db = b.deg_z();
        let lb = b.lc();
        while !r.is_zero() && r.deg_z() >= db {
            let k = (r.deg_z() - db) as usize;
            let lr = r.lc();
            r = r.scale_x(&lb).sub(&b.scale_x(&lr).shift_z(k));
        }
        r
    }

    /// Greatest common divisor over Z[x, z], normalized to positive leading
    /// coefficient.
    pub fn gcd(&self, o: &BPoly) -> BPoly {
        if self.is_zero() {
            return o.clone().normalize_sign();
        }
        if o.is_zero() {
            return self.clone().normalize_sign();
        }
        let c = self.content_x().gcd(&o.content_x());
        let (mut a, mut b) = if self.deg_z() >= o.deg_z() { (self.primitive(), o.primitive()) } else { (o.primitive(), self.primitive()) };
        while !b.is_zero() {
            if b.deg_z() == 0 {
                // A primitive polynomial of z-degree 0 is a unit in this quotient.
                a = BPoly::constant(1);
                break;
            }
            let r = a.prem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive() };
        }
        let a = if a.deg_z() <= 0 { BPoly::constant(1) } else { a.primitive() };
        a.scale_x(&c).normalize_sign()
    }

    pub fn div_exact(&self, o: &BPoly) -> Option<BPoly> {
        if o.is_zero() {
            return None;
        }
        let mut r = self.clone();
        let mut q = vec![UPoly::zero(); (self.deg_z() - o.deg_z() + 1).max(0) as usize];
        let lo = o.lc();
        while !r.is_zero() && r.deg_z() >= o.deg_z() {
            let k = (r.deg_z() - o.deg_z()) as usize;
            let t = r.lc().div_exact(&lo)?;
            r = r.sub(&BPoly::new(vec![t.clone()]).mul(o).shift_z(k));
            q[k] = t;
        }
        r.is_zero().then(|| BPoly::new(q))
    }

    pub fn dx(&self) -> BPoly {
        BPoly::new(self.0.iter().map(UPoly::derivative).collect())
    }

    pub fn dz(&self) -> BPoly {
        BPoly::new(self.0.iter().enumerate().skip(1).map(|(j, c)| c.scale(&BigInt::from(j))).collect())
    }

    pub fn eval_rational(&self, x: &BigRational, z: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * z + c.eval_rational(x))
    }

    pub fn eval<R: Real>(&self, x: &R, z: &R) -> R {
        let p = x.precision();
        self.0.iter().rev().fold(R::zero(p), |acc, c| acc * z.clone() + c.eval(x))
    }

    /// Integer content (gcd of every coefficient).
    pub fn integer_content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(&c.content()))
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.0.iter().map(UPoly::max_abs_f64).fold(0.0, f64::max)
    }

    /// Sum of |coefficient| * |x|^i |z|^j: a scale for evaluation error.
    pub fn abs_eval_f64(&self, x: f64, z: f64) -> f64 {
        let (ax, az) = (x.abs(), z.abs());
        self.0
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * az + c.0.iter().rev().fold(0.0, |a, k| a * ax + k.abs().to_f64().unwrap_or(f64::INFINITY)))
    }
}

impl fmt::Display for BPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.0.iter().enumerate().rev() {
            for (i, k) in c.0.iter().enumerate().rev() {
                if k.is_zero() {
                    continue;
                }
                let mon = match (i, j) {
                    (0, 0) => String::new(),
                    (i, 0) => pw("x", i),
                    (0, j) => pw("z", j),
                    (i, j) => format!("{}*{}", pw("x", i), pw("z", j)),
                };
                terms.push(if mon.is_empty() {
                    k.to_string()
                } else if k.is_one() {
                    mon
                } else if *k == -BigInt::one() {
                    format!("-{mon}")
                } else {
                    format!("{k}*{mon}")
                });
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let s = terms.join(" + ").replace("+ -", "- ");
        write!(f, "{s}")
    }
}

fn pw(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(t: &[(usize, usize, i64)]) -> BPoly {
        BPoly::from_terms(t)
    }

    #[test]
    fn upoly_gcd() {
        // (x-1)(x+2) and (x-1)(3x+5)
        let a = UPoly::from_i64s(&[-2, 1, 1]);
        let b = UPoly::from_i64s(&[-5, 2, 3]);
        assert_eq!(a.gcd(&b), UPoly::from_i64s(&[-1, 1]));
        assert_eq!(UPoly::from_i64s(&[6, 12]).gcd(&UPoly::from_i64s(&[4, 8])), UPoly::from_i64s(&[2, 4]));
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&UPoly::from_i64s(&[0, 2])), None);
    }

    #[test]
    fn bpoly_gcd_common_factor() {
        let common = bp(&[(2, 1, 2), (2, 0, 1), (1, 1, -2), (1, 0, -1), (0, 1, 1)]);
        let f = bp(&[(3, 0, 1), (0, 2, -7), (1, 1, 3), (0, 0, 1)]);
        let g = bp(&[(0, 3, 2), (2, 0, 1), (1, 0, -4)]);
        let a = common.mul(&f).mul(&BPoly::constant(6));
        let b = common.mul(&g).mul(&BPoly::constant(4));
        let d = a.gcd(&b);
        assert_eq!(d, common.mul(&BPoly::constant(2)));
        assert_eq!(a.div_exact(&d).unwrap(), f.mul(&BPoly::constant(3)));
        assert!(f.gcd(&g).is_constant());
    }

    #[test]
    fn evaluation_and_derivatives() {
        let p = bp(&[(2, 1, 3), (0, 2, -1), (1, 0, 5)]);
        let x = BigRational::new(1.into(), 2.into());
        let z = BigRational::new(2.into(), 3.into());
        // 3/4*2/3 - 4/9 + 5/2
        assert_eq!(p.eval_rational(&x, &z), BigRational::new(1.into(), 2.into()) - BigRational::new(4.into(), 9.into()) + BigRational::new(5.into(), 2.into()));
        assert_eq!(p.eval(&0.5f64, &(2.0 / 3.0)), 3.0 * 0.25 * 2.0 / 3.0 - 4.0 / 9.0 + 2.5);
        assert_eq!(p.dx(), bp(&[(1, 1, 6), (0, 0, 5)]));
        assert_eq!(p.dz(), bp(&[(2, 0, 3), (0, 1, -2)]));
        assert_eq!(p.to_string(), "-z^2 + 3*x^2*z + 5*x");
    }

    #[test]
    fn big_coefficient_conversion() {
        let n: BigInt = "-123456789012345678901234567890".parse().unwrap();
        let v: f64 = bigint_to_real(&n, Precision::DOUBLE);
        assert!((v / -1.2345678901234568e29 - 1.0).abs() < 1e-15);
    }
}
