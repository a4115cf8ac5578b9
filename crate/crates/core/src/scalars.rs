//! Exact arithmetic in the cyclotomic field `Q(xi)`, `xi` a primitive m-th
//! root of unity, together with the loop parameters of the algebra.
//!
//! Elements are residues in `Q[x]/Phi_m(x)` with `x -> xi`. The residue of
//! degree below `phi(m)` is unique, so structural equality is field equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Integer polynomial, coefficients in increasing degree.
type IntPoly = Vec<i64>;

/// Per-modulus data shared by every element of the same field.
#[derive(Debug)]
pub struct CyclotomicField {
    m: u32,
    phi: IntPoly,
    /// `x^k mod Phi_m` for `k < table.len()`.
    table: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of the cyclotomic polynomial, lowest degree first.
    pub fn polynomial(&self) -> &[i64] {
        &self.phi
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> IntPoly {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// `Phi_m` by dividing `x^m - 1` by `Phi_d` for each proper divisor `d`.
pub fn cyclotomic_polynomial(m: u32) -> IntPoly {
    assert!(m >= 1);
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn build_field(m: u32) -> CyclotomicField {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    let len = (m as usize).max(2 * deg);
    let mut table = Vec::with_capacity(len);
    let mut cur = vec![0i64; deg];
    cur[0] = 1;
    if deg == 0 {
        unreachable!("Phi_m has positive degree");
    }
    for _ in 0..len {
        table.push(cur.clone());
        // multiply by x and reduce
        let top = cur[deg - 1];
        let mut next = vec![0i64; deg];
        next[1..deg].copy_from_slice(&cur[..(deg - 1)]);
        for (j, nj) in next.iter_mut().enumerate() {
            *nj -= top * phi[j];
        }
        cur = next;
    }
    CyclotomicField { m, phi, table }
}

/// The shared field record for modulus `m`.
pub fn field(m: u32) -> Arc<CyclotomicField> {
    thread_local! {
        static LOCAL: std::cell::RefCell<HashMap<u32, Arc<CyclotomicField>>> =
            std::cell::RefCell::new(HashMap::new());
    }
    LOCAL.with(|local| {
        local
            .borrow_mut()
            .entry(m)
            .or_insert_with(|| shared_field(m))
            .clone()
    })
}

fn shared_field(m: u32) -> Arc<CyclotomicField> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("field cache poisoned");
    guard
        .entry(m)
        .or_insert_with(|| Arc::new(build_field(m)))
        .clone()
}

/// An element of `Q(xi_m)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.m.hash(state);
        self.coeffs.hash(state);
    }
}

impl Cyclotomic {
    pub fn zero(m: u32) -> Self {
        let field = field(m);
        let d = field.degree();
        Cyclotomic {
            field,
            coeffs: vec![Rational::zero(); d],
        }
    }

    /// Zero of the same field as `self`.
    pub fn zero_like(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: vec![Rational::zero(); self.coeffs.len()],
        }
    }

    pub fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = Rational::one();
        z
    }

    pub fn one(m: u32) -> Self {
        Self::from_rational(m, Rational::one())
    }

    pub fn from_rational(m: u32, q: Rational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(m: u32, k: i64) -> Self {
        Self::from_rational(m, Rational::from_integer(BigInt::from(k)))
    }

    pub fn from_ratio(m: u32, p: i64, q: i64) -> Self {
        Self::from_rational(m, Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Build from an arbitrary-length coefficient vector in powers of `xi`,
    /// reducing modulo `Phi_m`.
    pub fn from_power_coeffs(m: u32, coeffs: &[Rational]) -> Self {
        let mut z = Self::zero(m);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                z.add_scaled_power(k as i64, c);
            }
        }
        z
    }

    /// `xi^k`, any integer `k`.
    pub fn xi_pow(m: u32, k: i64) -> Self {
        let mut z = Self::zero(m);
        z.add_scaled_power(k, &Rational::one());
        z
    }

    pub fn xi(m: u32) -> Self {
        Self::xi_pow(m, 1)
    }

    fn add_scaled_power(&mut self, k: i64, c: &Rational) {
        let m = self.field.m as i64;
        let e = k.rem_euclid(m) as usize;
        let row = &self.field.table[e];
        for (j, &t) in row.iter().enumerate() {
            if t != 0 {
                self.coeffs[j] += c * Rational::from_integer(BigInt::from(t));
            }
        }
    }

    pub fn modulus(&self) -> u32 {
        self.field.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Integer value if the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.field.m, other.field.m,
            "cyclotomic arithmetic across different fields"
        );
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiply by `xi^k`.
    pub fn mul_xi_pow(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut z = Self::zero(self.field.m);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                z.add_scaled_power(j as i64 + k, c);
            }
        }
        z
    }

    /// The automorphism `xi -> xi^k`; `k` must be coprime to `m`.
    pub fn galois(&self, k: i64) -> Self {
        let mut z = Self::zero(self.field.m);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                z.add_scaled_power(j as i64 * k, c);
            }
        }
        z
    }

    /// Complex conjugation, `xi -> xi^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.check(other);
        let d = self.coeffs.len();
        if d == 1 {
            return Cyclotomic {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out = Cyclotomic {
            field: self.field.clone(),
            coeffs: prod[..d].to_vec(),
        };
        for (k, c) in prod.iter().enumerate().skip(d) {
            if !c.is_zero() {
                out.add_scaled_power(k as i64, c);
            }
        }
        out
    }

    /// Multiplicative inverse.
    ///
    /// Solves `a * z = 1` as a linear system in the power basis; the matrix
    /// of multiplication by a non-zero field element is invertible.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.coeffs.len();
        if d == 1 {
            return Ok(Cyclotomic {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let m = self.field.m;
        // column j = self * xi^j
        let cols: Vec<Cyclotomic> = (0..d).map(|j| self.mul_xi_pow(j as i64)).collect();
        let mut a: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| !a[r][col].is_zero())
                .expect("multiplication by a non-zero element is invertible");
            a.swap(col, piv);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=d {
                        let t = &f * &a[col][c];
                        a[r][c] -= t;
                    }
                }
            }
        }
        let coeffs = a.into_iter().map(|row| row[d].clone()).collect();
        Ok(Cyclotomic {
            field: field(m),
            coeffs,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field.m);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                ($body)(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                ($body)(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                ($body)(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| {
    a.check(b);
    Cyclotomic {
        field: a.field.clone(),
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
    }
});
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| {
    a.check(b);
    Cyclotomic {
        field: a.field.clone(),
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
    }
});
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_ref(b));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.check(rhs);
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        self.check(rhs);
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -(self.clone())
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Validation(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = format_rational(&abs);
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "xi")?;
                    } else {
                        write!(f, "xi^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[m={}]({})", self.field.m, self)
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    m: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicJson {
            m: self.field.m,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CyclotomicJson::deserialize(d)?;
        if raw.m == 0 {
            return Err(serde::de::Error::custom("modulus must be positive"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Cyclotomic::from_power_coeffs(raw.m, &coeffs))
    }
}

/// Loop parameters `(delta_0, ..., delta_{m-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    delta: Vec<Cyclotomic>,
}

impl Params {
    pub fn new(delta: Vec<Cyclotomic>) -> Result<Self> {
        let m = delta.len() as u32;
        if m == 0 {
            return Err(Error::Validation("parameter vector is empty".into()));
        }
        if let Some(bad) = delta.iter().find(|d| d.modulus() != m) {
            return Err(Error::Validation(format!(
                "parameter lives in Q(xi_{}) but m = {m}",
                bad.modulus()
            )));
        }
        Ok(Params { delta })
    }

    pub fn from_rationals(delta: &[Rational]) -> Result<Self> {
        let m = delta.len() as u32;
        Self::new(
            delta
                .iter()
                .map(|q| Cyclotomic::from_rational(m.max(1), q.clone()))
                .collect(),
        )
    }

    pub fn from_ints(delta: &[i64]) -> Self {
        let m = delta.len() as u32;
        Self::new(delta.iter().map(|&k| Cyclotomic::from_int(m, k)).collect())
            .expect("integer parameters are valid")
    }

    /// Parameters with prescribed signed parameters, using
    /// `delta_i = sum_r xi^{-ir} signed_r`.
    pub fn from_signed(signed: &[Cyclotomic]) -> Result<Self> {
        let m = signed.len() as u32;
        let delta = (0..m as i64)
            .map(|i| {
                signed
                    .iter()
                    .enumerate()
                    .fold(Cyclotomic::zero(m), |acc, (r, s)| {
                        acc + s.mul_xi_pow(-i * r as i64)
                    })
            })
            .collect();
        Self::new(delta)
    }

    /// Deterministic "generic" rational parameters with large numerators and
    /// denominators, symmetric (`delta_i = delta_{m-i}`) so that they are
    /// admissible for the oriented product.
    pub fn generic(m: u32, seed: u64) -> Self {
        let raw = Self::generic_unrestricted(m, seed);
        let delta = (0..m as usize)
            .map(|i| raw.delta[i.min((m as usize - i) % m as usize)].clone())
            .collect();
        Params { delta }
    }

    /// Like [`Params::generic`] but every entry drawn independently; only
    /// meaningful for the unoriented product.
    pub fn generic_unrestricted(m: u32, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let delta = (0..m)
            .map(|_| {
                let p: i64 = rng.gen_range(1_000..1_000_000) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let q: i64 = rng.gen_range(1_000..1_000_000);
                Cyclotomic::from_ratio(m, p, q)
            })
            .collect();
        Params { delta }
    }

    /// `delta_i = delta_{m-i}` for all `i`. The oriented loop rule only gives
    /// an associative product for such parameters: `e_{1,2}` times
    /// `t_{1,2}` times an arc labelled `a` evaluates its loop to `delta_a`
    /// or `delta_{-a}` depending on the bracketing.
    pub fn is_symmetric(&self) -> bool {
        let m = self.delta.len();
        (0..m).all(|i| self.delta[i] == self.delta[(m - i) % m])
    }

    pub fn m(&self) -> u32 {
        self.delta.len() as u32
    }

    pub fn delta(&self) -> &[Cyclotomic] {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.delta.iter().all(Cyclotomic::is_zero)
    }

    /// Apply the automorphism `xi -> xi^{-1}` to every entry.
    pub fn conj(&self) -> Self {
        Params {
            delta: self.delta.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// `signed_r = (1/m) sum_i xi^{ir} delta_i`, for `r = 0..m`.
    pub fn signed_parameters(&self) -> Vec<Cyclotomic> {
        let m = self.m();
        let inv_m = Rational::new(BigInt::one(), BigInt::from(m));
        (0..m as i64)
            .map(|r| {
                self.delta
                    .iter()
                    .enumerate()
                    .fold(Cyclotomic::zero(m), |acc, (i, d)| {
                        acc + d.mul_xi_pow(i as i64 * r)
                    })
                    .scale(&inv_m)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_of_unity_identities() {
        let x = Cyclotomic::xi(4);
        assert!((&x * &x.pow(3)).is_one());
        // m = 6: xi^2 = xi - 1
        let x6 = Cyclotomic::xi(6);
        assert_eq!(x6.pow(2), &x6 - &Cyclotomic::one(6));
        for m in 1..=12u32 {
            let x = Cyclotomic::xi(m);
            assert_eq!(x.inv().unwrap(), Cyclotomic::xi_pow(m, m as i64 - 1));
            assert!(x.pow(m).is_one());
            let phi = field(m);
            let val = phi
                .polynomial()
                .iter()
                .enumerate()
                .fold(Cyclotomic::zero(m), |acc, (k, &c)| {
                    acc + Cyclotomic::xi_pow(m, k as i64).scale(&q(c, 1))
                });
            assert!(val.is_zero(), "Phi_{m}(xi) != 0");
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(Cyclotomic::zero(5).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn signed_parameter_examples() {
        let p = Params::from_ints(&[7]);
        assert_eq!(p.signed_parameters(), vec![Cyclotomic::from_int(1, 7)]);

        let p = Params::from_ints(&[5, 3]);
        let s = p.signed_parameters();
        assert_eq!(s[0], Cyclotomic::from_int(2, 4));
        assert_eq!(s[1], Cyclotomic::from_int(2, 1));

        let p = Params::from_ints(&[1, 1, 1]);
        let s = p.signed_parameters();
        assert!(s[0].is_one());
        assert!(s[1].is_zero() && s[2].is_zero());
    }

    #[test]
    fn json_round_trip() {
        let z = Cyclotomic::from_power_coeffs(3, &[q(1, 2), q(-3, 1), q(5, 7)]);
        let s = serde_json::to_string(&z).unwrap();
        assert!(s.starts_with(r#"{"m":3,"coeffs":[""#));
        let raw: serde_json::Value = serde_json::from_str(r#"{"m":2,"coeffs":["3/4"]}"#).unwrap();
        let h: Cyclotomic = serde_json::from_value(raw).unwrap();
        assert_eq!(h, Cyclotomic::from_ratio(2, 3, 4));
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
    }

    fn arb_elem(m: u32) -> impl Strategy<Value = Cyclotomic> {
        let d = field(m).degree();
        prop::collection::vec((-50i64..50, 1i64..20), d).prop_map(move |cs| {
            let coeffs: Vec<Rational> = cs.into_iter().map(|(a, b)| q(a, b)).collect();
            Cyclotomic::from_power_coeffs(m, &coeffs)
        })
    }

    fn arb_rationals(m: usize) -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((-40i64..40, 1i64..9), m)
            .prop_map(|v| v.into_iter().map(|(a, b)| q(a, b)).collect())
    }

    proptest! {
        #[test]
        fn field_axioms(m in 1u32..=9, seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut draw = || {
                let d = field(m).degree();
                let cs: Vec<Rational> = (0..d).map(|_| q(rng.gen_range(-30..30), rng.gen_range(1..9))).collect();
                Cyclotomic::from_power_coeffs(m, &cs)
            };
            let (a, b, c) = (draw(), draw(), draw());
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            // canonical reduction is idempotent
            let again = Cyclotomic::from_power_coeffs(m, a.coeffs());
            prop_assert_eq!(again, a);
        }

        #[test]
        fn galois_is_multiplicative(a in arb_elem(7), b in arb_elem(7)) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(a.conj().conj(), a);
        }

        #[test]
        fn inverse_signed_transform(m in 1usize..=8, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let raw: Vec<Rational> = (0..m).map(|_| q(rng.gen_range(-40..40), rng.gen_range(1..9))).collect();
            let p = Params::from_rationals(&raw).unwrap();
            let back = Params::from_signed(&p.signed_parameters()).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn galois_swaps_signed_parameters(raw in (1usize..=8).prop_flat_map(arb_rationals)) {
            // rational inputs are Galois-fixed, so conjugation swaps r and m-r
            let p = Params::from_rationals(&raw).unwrap();
            let m = p.m() as usize;
            let s = p.signed_parameters();
            for r in 0..m {
                prop_assert_eq!(&s[r].conj(), &s[(m - r) % m]);
            }
        }

        #[test]
        fn galois_transports_signed_parameters(a in arb_elem(5), b in arb_elem(5), c in arb_elem(5), d in arb_elem(5), e in arb_elem(5)) {
            let p = Params::new(vec![a, b, c, d, e]).unwrap();
            let s = p.signed_parameters();
            let sc = p.conj().signed_parameters();
            for r in 0..5 {
                prop_assert_eq!(&sc[r], &s[(5 - r) % 5].conj());
            }
        }
    }
}
