//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` modulo the
//! cyclotomic polynomial `Φ_N`, as integer numerators over one common positive
//! denominator. Elements living in different fields are combined inside
//! `Q(ζ_lcm)`.

use std::borrow::Cow;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, frac, parse_rational, Rational};
use crate::error::{Error, Result};

/// `Φ_n` as integer coefficients, lowest degree first.
///
/// Computed by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    cyclotomic_i64(n).into_iter().map(BigInt::from).collect()
}

fn cyclotomic_i64(n: u32) -> Vec<i64> {
    let n = n as usize;
    // x^n - 1
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = exact_div_monic(&p, &cyclotomic_i64(d as u32));
        }
    }
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let lead = rem[k + dd];
        q[k] = lead;
        if lead != 0 {
            for (i, c) in den.iter().enumerate() {
                rem[k + i] -= lead * c;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count()
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// The field `Q(ζ_N)` together with the reduction table `x^j mod Φ_N`.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u32,
    phi: usize,
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    /// The shared instance for conductor `n`.
    pub fn new(n: u32) -> Arc<Self> {
        assert!(n >= 1, "conductor must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard.entry(n).or_insert_with(|| Self::build(n)).clone()
    }

    fn build(n: u32) -> Arc<Self> {
        let phi_poly = cyclotomic_i64(n);
        let phi = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        if phi == 0 {
            unreachable!("Φ_n has positive degree");
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Φ_n
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * phi_poly[i];
                }
            }
        }
        Arc::new(CyclotomicField { n, phi, powers })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn zero(self: &Arc<Self>) -> CycNum {
        CycNum {
            field: self.clone(),
            num: vec![BigInt::zero(); self.phi],
            den: BigInt::one(),
        }
    }

    pub fn one(self: &Arc<Self>) -> CycNum {
        self.from_rational(&Rational::one())
    }

    pub fn from_int(self: &Arc<Self>, v: i64) -> CycNum {
        let mut z = self.zero();
        z.num[0] = BigInt::from(v);
        z
    }

    pub fn from_rational(self: &Arc<Self>, r: &Rational) -> CycNum {
        let mut z = self.zero();
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta(self: &Arc<Self>, k: i64) -> CycNum {
        let j = k.rem_euclid(self.n as i64) as usize;
        CycNum {
            field: self.clone(),
            num: self.powers[j].iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// Element with the given power-basis coefficients.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[Rational]) -> CycNum {
        assert_eq!(coeffs.len(), self.phi, "coefficient vector has wrong length");
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        CycNum::normalized(self.clone(), num, den)
    }

    /// Reduce an integer polynomial in `ζ` (arbitrary length) to the power basis.
    fn reduce(&self, poly: Vec<BigInt>) -> Vec<BigInt> {
        if poly.len() <= self.phi {
            let mut p = poly;
            p.resize(self.phi, BigInt::zero());
            return p;
        }
        let mut out: Vec<BigInt> = vec![BigInt::zero(); self.phi];
        let n = self.n as usize;
        for (k, c) in poly.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.phi {
                out[k] += c;
            } else {
                let row = &self.powers[k % n];
                for (o, &r) in out.iter_mut().zip(row) {
                    if r != 0 {
                        *o += &c * r;
                    }
                }
            }
        }
        out
    }
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn normalized(field: Arc<CyclotomicField>, num: Vec<BigInt>, den: BigInt) -> CycNum {
        let mut x = CycNum { field, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                if !c.is_zero() {
                    *c /= &g;
                }
            }
        }
    }

    pub fn from_rational(r: &Rational) -> CycNum {
        CyclotomicField::new(1).from_rational(r)
    }

    pub fn from_int(v: i64) -> CycNum {
        CyclotomicField::new(1).from_int(v)
    }

    pub fn zero() -> CycNum {
        Self::from_int(0)
    }

    pub fn one() -> CycNum {
        Self::from_int(1)
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u32, k: i64) -> CycNum {
        CyclotomicField::new(n).zeta(k)
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Power-basis coefficients as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Whether all coefficients are integers (the element lies in `Z[ζ_N]`).
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value, if the element is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// The same number viewed in `Q(ζ_m)`; requires `N | m`.
    pub fn embed(&self, m: u32) -> CycNum {
        self.embed_into(&CyclotomicField::new(m))
    }

    fn embed_into(&self, target: &Arc<CyclotomicField>) -> CycNum {
        if target.n == self.field.n {
            return CycNum {
                field: target.clone(),
                num: self.num.clone(),
                den: self.den.clone(),
            };
        }
        assert!(
            target.n % self.field.n == 0,
            "cannot embed Q(ζ_{}) into Q(ζ_{})",
            self.field.n,
            target.n
        );
        let step = (target.n / self.field.n) as usize;
        let mut poly = vec![BigInt::zero(); (self.field.phi - 1) * step + 1];
        for (j, c) in self.num.iter().enumerate() {
            poly[j * step] = c.clone();
        }
        CycNum {
            field: target.clone(),
            num: target.reduce(poly),
            den: self.den.clone(),
        }
    }

    /// Views `a` and `b` in a common field without copying when they already share one.
    fn align<'a>(a: &'a CycNum, b: &'a CycNum) -> (Cow<'a, CycNum>, Cow<'a, CycNum>) {
        if a.field.n == b.field.n {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let m = lcm_u32(a.field.n, b.field.n);
        if m == a.field.n {
            (Cow::Borrowed(a), Cow::Owned(b.embed_into(&a.field)))
        } else if m == b.field.n {
            (Cow::Owned(a.embed_into(&b.field)), Cow::Borrowed(b))
        } else {
            let f = CyclotomicField::new(m);
            (Cow::Owned(a.embed_into(&f)), Cow::Owned(b.embed_into(&f)))
        }
    }

    fn add_impl(&self, other: &CycNum, negate: bool) -> CycNum {
        let (a, b) = Self::align(self, other);
        let field = a.field.clone();
        let (num, den) = if a.den == b.den {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect();
            (num, a.den.clone())
        } else {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| {
                    let l = x * &b.den;
                    let r = y * &a.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect();
            (num, &a.den * &b.den)
        };
        CycNum::normalized(field, num, den)
    }

    fn scale_by(&self, r_num: &BigInt, r_den: &BigInt) -> CycNum {
        let num = self.num.iter().map(|c| c * r_num).collect();
        CycNum::normalized(self.field.clone(), num, &self.den * r_den)
    }

    fn mul_impl(&self, other: &CycNum) -> CycNum {
        let (a, b) = Self::align(self, other);
        if b.is_rational() {
            return a.scale_by(&b.num[0], &b.den).with_field(&a.field);
        }
        if a.is_rational() {
            return b.scale_by(&a.num[0], &a.den).with_field(&b.field);
        }
        let phi = a.field.phi;
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let num = a.field.reduce(prod);
        CycNum::normalized(a.field.clone(), num, &a.den * &b.den)
    }

    fn with_field(mut self, f: &Arc<CyclotomicField>) -> CycNum {
        if self.field.n == f.n {
            self.field = f.clone();
            self
        } else {
            self.embed_into(f)
        }
    }

    /// Multiplicative inverse, `None` for zero.
    ///
    /// Uses `x^{-1} = (∏_{k≠1} σ_k(x)) / N(x)` over the Galois group.
    pub fn inv(&self) -> Option<CycNum> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            let r = Rational::new(self.den.clone(), self.num[0].clone());
            return Some(self.field.from_rational(&r));
        }
        let n = self.field.n;
        let mut others = self.field.one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois_unchecked(k as i64);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("field norm must be rational");
        let inv_norm = Rational::new(norm.denom().clone(), norm.numer().clone());
        Some(others.scale_by(inv_norm.numer(), inv_norm.denom()))
    }

    /// The automorphism `ζ_N ↦ ζ_N^k`.
    pub fn galois(&self, k: i64) -> Result<CycNum> {
        let n = self.field.n as i64;
        if k.rem_euclid(n).gcd(&n) != 1 && n > 1 {
            return Err(Error::domain(format!(
                "galois exponent {k} is not coprime to conductor {n}"
            )));
        }
        Ok(self.galois_unchecked(k))
    }

    fn galois_unchecked(&self, k: i64) -> CycNum {
        let n = self.field.n as i64;
        let mut poly = vec![BigInt::zero(); n as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                poly[((j as i64) * k).rem_euclid(n) as usize] += c;
            }
        }
        CycNum {
            field: self.field.clone(),
            num: self.field.reduce(poly),
            den: self.den.clone(),
        }
    }

    /// Complex conjugation, i.e. `galois(N - 1)`.
    pub fn conj(&self) -> CycNum {
        if self.field.n <= 2 {
            return self.clone();
        }
        self.galois_unchecked(self.field.n as i64 - 1)
    }

    pub fn pow(&self, e: i64) -> CycNum {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Integer numerators and common denominator of the power-basis form.
    pub fn numerators(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    /// Scales by a rational.
    pub fn scale(&self, r: &Rational) -> CycNum {
        self.scale_by(r.numer(), r.denom())
    }
}

/// `e^{2πi a}` as an element of `Q(ζ_q)` where `q` is the denominator of `a mod 1`.
pub fn root_of_unity(a: &Rational) -> CycNum {
    let f = frac(a);
    let q = u32::try_from(f.denom().clone()).expect("root of unity order too large");
    let p = i64::try_from(f.numer().clone()).expect("root of unity exponent too large");
    CyclotomicField::new(q).zeta(p)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::align(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let n = self.field.n;
            match j {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", format_rational(&mag))?;
                    }
                    if j == 1 {
                        write!(f, "z{n}")?;
                    } else {
                        write!(f, "z{n}^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &'a CycNum) -> CycNum {
                let f: fn(&CycNum, &CycNum) -> CycNum = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &'a CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.mul_impl(&b.inv().expect("division by zero")));

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CycNumRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycNumRepr {
            conductor: self.field.n,
            coeffs: self.coeffs().iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CycNumRepr::deserialize(d)?;
        if repr.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let field = CyclotomicField::new(repr.conductor);
        if repr.coeffs.len() != field.degree() {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for conductor {}",
                field.degree(),
                repr.conductor
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(field.from_coeffs(&coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    fn poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(8), poly(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(24), poly(&[1, 0, 0, 0, -1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), poly(&[1, -1, 1]));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(root_of_unity(&rat(1, 2)), CycNum::from_int(-1));
        assert_eq!(root_of_unity(&int(0)), CycNum::one());
        assert_eq!(root_of_unity(&rat(5, 4)), CycNum::zeta(4, 1));
        let s = root_of_unity(&rat(1, 8)) + root_of_unity(&rat(3, 8));
        assert_eq!(&s * &s, CycNum::from_int(-2));
    }

    #[test]
    fn galois_action_on_sqrt_minus_two() {
        let z = CycNum::zeta(8, 1);
        let s = &z + &CycNum::zeta(8, 3);
        assert_eq!(z.galois(3).unwrap(), CycNum::zeta(8, 3));
        assert_eq!(s.galois(3).unwrap(), s);
        assert_eq!(s.galois(7).unwrap(), -&s);
        assert!(s.galois(2).is_err());
    }

    #[test]
    fn mixed_conductors_meet_in_lcm() {
        let a = CycNum::zeta(3, 1);
        let b = CycNum::zeta(8, 1);
        let p = &a * &b;
        assert_eq!(p.conductor(), 24);
        assert_eq!(p, CycNum::zeta(24, 8 + 3));
        // ζ_3 + ζ_3^2 = -1 regardless of the ambient field
        assert_eq!(&a + &CycNum::zeta(3, 2), CycNum::from_int(-1));
        assert_eq!(CycNum::zeta(4, 1), CycNum::zeta(8, 2));
    }

    #[test]
    fn inverse_and_division() {
        let x = CycNum::zeta(8, 1) + CycNum::from_rational(&rat(3, 2));
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(CycNum::zero().inv().is_none());
        assert_eq!(CycNum::zeta(12, 5).pow(-1), CycNum::zeta(12, 7));
    }

    #[test]
    fn display_and_serde_round_trip() {
        let x = CycNum::zeta(8, 1).scale(&rat(-1, 2)) + CycNum::from_int(3);
        assert_eq!(x.to_string(), "3 - 1/2*z8");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"conductor":8,"coeffs":["3","-1/2","0","0"]}"#);
        let back: CycNum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
