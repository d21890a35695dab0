//! Exact arithmetic in the cyclotomic field Q(zeta_N), N = 4r.
//!
//! Scalars are represented in the power basis 1, zeta, ..., zeta^(phi(N)-1)
//! modulo the N-th cyclotomic polynomial, with arbitrary-precision rational
//! coefficients stored as an integer vector over a common denominator. Every
//! arithmetic result is reduced eagerly so that equality is coefficient-wise.
//!
//! No complex embedding is chosen for arithmetic; `CycNum::to_complex` maps
//! zeta to exp(2*pi*i/N) for display only.

pub mod linalg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(usize),
    #[error("level r must be at least 2, got {0}")]
    OutOfRange(usize),
}

/// The field Q(zeta_N) with N = 4r, together with cached reduction data.
///
/// Immutable after construction; share via `Arc`.
pub struct CycField {
    n: usize,
    phi: usize,
    /// Integer coefficients of Phi_N, ascending, length phi+1, monic.
    minimal_poly: Vec<BigInt>,
    /// reduction[k] = integer coefficient vector of zeta^(phi+k) mod Phi_N,
    /// for k in 0..phi-1. Lets products reduce without polynomial division.
    reduction: Vec<Vec<BigInt>>,
    /// zeta_pows[k] = coefficient vector of zeta^k mod Phi_N, for k in 0..n.
    zeta_pows: Vec<Vec<BigInt>>,
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycField(N={}, phi={})", self.n, self.phi)
    }
}

fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn moebius(mut n: usize) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Exact division of integer polynomials; panics if the division is not exact.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    assert!(!lead.is_zero());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let (q, r) = rem[k + dd].div_rem(lead);
        assert!(r.is_zero(), "inexact polynomial division");
        if !q.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let t = &q * dj;
                rem[k + j] -= t;
            }
        }
        quot[k] = q;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder");
    quot
}

/// Phi_n(x) by the Moebius/divisor product, ascending integer coefficients.
fn cyclotomic_poly(n: usize) -> Vec<BigInt> {
    let mut num: Vec<BigInt> = vec![BigInt::one()];
    let mut den: Vec<BigInt> = vec![BigInt::one()];
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        match moebius(n / d) {
            1 => {
                // multiply num by (x^d - 1)
                let mut f = vec![BigInt::zero(); d + 1];
                f[0] = -BigInt::one();
                f[d] = BigInt::one();
                num = int_poly_mul(&num, &f);
            }
            -1 => {
                let mut f = vec![BigInt::zero(); d + 1];
                f[0] = -BigInt::one();
                f[d] = BigInt::one();
                den = int_poly_mul(&den, &f);
            }
            _ => {}
        }
    }
    int_poly_div_exact(&num, &den)
}

impl CycField {
    /// Field for the given cyclotomic order N; requires 4 | N and N >= 8.
    pub fn new(n: usize) -> Arc<CycField> {
        assert!(n.is_multiple_of(4) && n >= 8, "need N divisible by 4 and N >= 8");
        let phi = euler_phi(n);
        let minimal_poly = cyclotomic_poly(n);
        assert_eq!(minimal_poly.len(), phi + 1);
        assert!(minimal_poly[phi].is_one(), "Phi_N must be monic");

        // zeta^(phi+k) = -sum_j Phi_j zeta^(j+k), reduced iteratively.
        let mut reduction: Vec<Vec<BigInt>> = Vec::with_capacity(phi.max(1));
        let base: Vec<BigInt> = (0..phi).map(|j| -minimal_poly[j].clone()).collect();
        reduction.push(base);
        for k in 1..phi.max(1) {
            let prev = &reduction[k - 1];
            // multiply by zeta: shift, then fold the overflow back in
            let carry = prev[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            next[1..phi].clone_from_slice(&prev[..phi - 1]);
            if !carry.is_zero() {
                for j in 0..phi {
                    next[j] += &carry * &reduction[0][j];
                }
            }
            reduction.push(next);
        }

        let mut zeta_pows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut v = vec![BigInt::zero(); phi];
        v[0] = BigInt::one();
        zeta_pows.push(v);
        for _ in 1..n {
            let prev = zeta_pows.last().unwrap();
            let carry = prev[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            next[1..phi].clone_from_slice(&prev[..phi - 1]);
            if !carry.is_zero() {
                for j in 0..phi {
                    next[j] += &carry * &reduction[0][j];
                }
            }
            zeta_pows.push(next);
        }

        Arc::new(CycField {
            n,
            phi,
            minimal_poly,
            reduction,
            zeta_pows,
        })
    }

    /// Field at level r, i.e. Q(zeta_{4r}).
    pub fn for_level(r: usize) -> Result<Arc<CycField>, CycError> {
        if r < 2 {
            return Err(CycError::OutOfRange(r));
        }
        Ok(CycField::new(4 * r))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn minimal_poly(&self) -> &[BigInt] {
        &self.minimal_poly
    }

    pub fn zero(self: &Arc<Self>) -> CycNum {
        CycNum {
            field: self.clone(),
            num: vec![BigInt::zero(); self.phi],
            den: BigInt::one(),
        }
    }

    pub fn one(self: &Arc<Self>) -> CycNum {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, k: i64) -> CycNum {
        let mut num = vec![BigInt::zero(); self.phi];
        num[0] = BigInt::from(k);
        CycNum {
            field: self.clone(),
            num,
            den: BigInt::one(),
        }
    }

    /// zeta^k for any integer k (negative exponents wrap around).
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycNum {
        let k = k.rem_euclid(self.n as i64) as usize;
        CycNum {
            field: self.clone(),
            num: self.zeta_pows[k].clone(),
            den: BigInt::one(),
        }
    }

    /// The quantum integer [k] = (q^k - q^-k)/(q - q^-1) with q = zeta^2,
    /// computed as the geometric sum q^(k-1) + q^(k-3) + ... + q^(1-k).
    pub fn quantum_int(self: &Arc<Self>, k: i64) -> CycNum {
        let (sign, k) = if k < 0 { (-1, -k) } else { (1, k) };
        let mut num = vec![BigInt::zero(); self.phi];
        for j in 0..k {
            let e = (2 * (k - 1 - 2 * j)).rem_euclid(self.n as i64) as usize;
            for (c, z) in num.iter_mut().zip(&self.zeta_pows[e]) {
                *c += z;
            }
        }
        if sign < 0 {
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        CycNum {
            field: self.clone(),
            num,
            den: BigInt::one(),
        }
    }

    /// Canonical representative of an arbitrary rational-coefficient
    /// polynomial in zeta, given as integer coefficients over a common
    /// denominator (ascending powers, any length).
    pub fn reduce(self: &Arc<Self>, coeffs: &[BigInt], den: BigInt) -> CycNum {
        let mut num = vec![BigInt::zero(); self.phi];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.phi {
                num[k] += c;
            } else {
                // zeta^k = zeta^(k mod n) since zeta has order n
                let e = k % self.n;
                for (t, z) in num.iter_mut().zip(&self.zeta_pows[e]) {
                    *t += c * z;
                }
            }
        }
        let mut x = CycNum {
            field: self.clone(),
            num,
            den,
        };
        x.normalize();
        x
    }
}

/// A rational number as a reduced (numerator, positive denominator) pair.
/// Internal helper for the extended Euclidean algorithm.
#[derive(Clone, PartialEq, Eq)]
struct Rat {
    num: BigInt,
    den: BigInt,
}

impl Rat {
    fn new(num: BigInt, den: BigInt) -> Rat {
        assert!(!den.is_zero());
        let mut r = Rat { num, den };
        r.reduce();
        r
    }
    fn from_int(num: BigInt) -> Rat {
        Rat {
            num,
            den: BigInt::one(),
        }
    }
    fn zero() -> Rat {
        Rat::from_int(BigInt::zero())
    }
    fn one() -> Rat {
        Rat::from_int(BigInt::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn reduce(&mut self) {
        if self.den.is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = &self.num / &g;
            self.den = &self.den / &g;
        }
    }
    fn add(&self, o: &Rat) -> Rat {
        Rat::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }
    fn sub(&self, o: &Rat) -> Rat {
        Rat::new(&self.num * &o.den - &o.num * &self.den, &self.den * &o.den)
    }
    fn mul(&self, o: &Rat) -> Rat {
        Rat::new(&self.num * &o.num, &self.den * &o.den)
    }
    fn div(&self, o: &Rat) -> Rat {
        assert!(!o.is_zero());
        Rat::new(&self.num * &o.den, &self.den * &o.num)
    }
}

type QPoly = Vec<Rat>;

fn qp_trim(p: &mut QPoly) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn qp_deg(p: &QPoly) -> usize {
    p.len() - 1
}

fn qp_is_zero(p: &QPoly) -> bool {
    p.iter().all(Rat::is_zero)
}

fn qp_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out: QPoly = (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
            x.sub(&y)
        })
        .collect();
    qp_trim(&mut out);
    out
}

fn qp_mul(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    qp_trim(&mut out);
    out
}

/// Classical long division in Q[x]: a = q*b + rem with deg rem < deg b.
fn qp_divmod(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    assert!(!qp_is_zero(b));
    let db = qp_deg(b);
    let lead = b[db].clone();
    let mut rem = a.clone();
    qp_trim(&mut rem);
    if qp_deg(&rem) < db || qp_is_zero(&rem) {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); qp_deg(&rem) - db + 1];
    while !qp_is_zero(&rem) && qp_deg(&rem) >= db {
        let dr = qp_deg(&rem);
        let q = rem[dr].div(&lead);
        quot[dr - db] = q.clone();
        for j in 0..=db {
            rem[dr - db + j] = rem[dr - db + j].sub(&q.mul(&b[j]));
        }
        rem[dr] = Rat::zero();
        qp_trim(&mut rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    (quot, rem)
}

/// An element of Q(zeta_N): integer coefficient vector over a positive
/// common denominator, always reduced modulo Phi_N.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num[0].is_one()
            && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Rational coefficient of zeta^k, reduced, as (numerator, denominator).
    pub fn coeff(&self, k: usize) -> (BigInt, BigInt) {
        let g = self.num[k].gcd(&self.den);
        if g.is_one() {
            (self.num[k].clone(), self.den.clone())
        } else {
            (&self.num[k] / &g, &self.den / &g)
        }
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        assert!(!self.den.is_zero());
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    return;
                }
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        for c in self.num.iter_mut() {
            *c = &*c / &g;
        }
        self.den = &self.den / &g;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_N in Q[x].
    pub fn invert(&self) -> Result<CycNum, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero(self.field.n));
        }
        let phi_poly: QPoly = self
            .field
            .minimal_poly
            .iter()
            .map(|c| Rat::from_int(c.clone()))
            .collect();
        let mut x_poly: QPoly = self
            .num
            .iter()
            .map(|c| Rat::new(c.clone(), self.den.clone()))
            .collect();
        qp_trim(&mut x_poly);

        // r0 = Phi, r1 = x; s tracks the x-multiplier so that
        // s_k * x = r_k (mod Phi) throughout.
        let mut r0 = phi_poly;
        let mut r1 = x_poly;
        let mut s0: QPoly = vec![Rat::zero()];
        let mut s1: QPoly = vec![Rat::one()];
        while qp_deg(&r1) > 0 {
            let (q, rem) = qp_divmod(&r0, &r1);
            let s_next = qp_sub(&s0, &qp_mul(&q, &s1));
            r0 = r1;
            s0 = s1;
            r1 = rem;
            s1 = s_next;
        }
        assert!(
            !qp_is_zero(&r1),
            "gcd(x, Phi_N) must be a nonzero constant for x != 0"
        );
        // r1 = c (a nonzero rational constant) and s1 * x = c (mod Phi)
        let c = r1[0].clone();
        let mut num: Vec<BigInt> = Vec::with_capacity(s1.len());
        let mut den = BigInt::one();
        for t in &s1 {
            den = den.lcm(&t.den);
        }
        for t in &s1 {
            num.push(&t.num * (&den / &t.den));
        }
        // divide by c: multiply denominator by c.num and numerators by c.den
        for v in num.iter_mut() {
            *v = &*v * &c.den;
        }
        den *= &c.num;
        let inv = self.field.reduce(&num, den);
        debug_assert!((&inv * self).is_one(), "inverse check failed");
        Ok(inv)
    }

    pub fn pow(&self, k: u32) -> CycNum {
        let mut acc = self.field.one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Display-only complex embedding zeta -> exp(2 pi i / N).
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let n = self.field.n as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.to_f64().unwrap_or(f64::NAN) / den;
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / n;
            re += x * ang.cos();
            im += x * ang.sin();
        }
        (re, im)
    }

    /// Serialization form: coefficient strings "p/q" in ascending power order.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        (0..self.field.phi)
            .map(|k| {
                let (p, q) = self.coeff(k);
                format!("{}/{}", p, q)
            })
            .collect()
    }

    /// Parse the serialization form produced by `to_coeff_strings`.
    pub fn from_coeff_strings(field: &Arc<CycField>, parts: &[String]) -> Option<CycNum> {
        if parts.len() != field.phi {
            return None;
        }
        let mut acc = field.zero();
        for (k, s) in parts.iter().enumerate() {
            let (p, q) = s.split_once('/')?;
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                return None;
            }
            let mut v = vec![BigInt::zero(); k + 1];
            v[k] = p;
            acc = &acc + &field.reduce(&v, q);
        }
        Some(acc)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        debug_assert_eq!(self.field.n, other.field.n);
        self.den == other.den && self.num == other.num
    }
}
impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{}", k)?;
                    }
                }
            }
        }
        if !self.den.is_one() {
            write!(f, " / {}", self.den)?;
        }
        Ok(())
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        debug_assert_eq!(self.field.n, rhs.field.n);
        if self.den == rhs.den {
            let num = self
                .num
                .iter()
                .zip(&rhs.num)
                .map(|(a, b)| a + b)
                .collect();
            let mut out = CycNum {
                field: self.field.clone(),
                num,
                den: self.den.clone(),
            };
            out.normalize();
            return out;
        }
        let g = self.den.gcd(&rhs.den);
        let ls = &rhs.den / &g;
        let rs = &self.den / &g;
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &ls + b * &rs)
            .collect();
        let mut out = CycNum {
            field: self.field.clone(),
            num,
            den: &self.den * &ls,
        };
        out.normalize();
        out
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

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

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        debug_assert_eq!(self.field.n, rhs.field.n);
        let phi = self.field.phi;
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        let mut conv = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        // fold degrees >= phi back using the cached reduction rows
        let mut num = vec![BigInt::zero(); phi];
        num.clone_from_slice(&conv[..phi]);
        for (k, c) in conv.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            let row = &self.field.reduction[k - phi];
            for (t, rc) in num.iter_mut().zip(row) {
                if !rc.is_zero() {
                    *t += c * rc;
                }
            }
        }
        let mut out = CycNum {
            field: self.field.clone(),
            num,
            den: &self.den * &rhs.den,
        };
        out.normalize();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(r: usize) -> Arc<CycField> {
        CycField::for_level(r).unwrap()
    }

    #[test]
    fn minimal_poly_is_monic_of_degree_phi() {
        for r in 2..=8 {
            let f = field(r);
            assert_eq!(f.minimal_poly().len(), f.phi() + 1);
            assert!(f.minimal_poly()[f.phi()].is_one());
        }
    }

    #[test]
    fn zeta_to_the_n_reduces_to_one() {
        let f = field(3);
        let one = vec![BigInt::one()];
        let mut v = vec![BigInt::zero(); f.order() + 1];
        v[f.order()] = BigInt::one();
        assert_eq!(f.reduce(&v, BigInt::one()), f.reduce(&one, BigInt::one()));
    }

    #[test]
    fn zeta_to_half_n_is_minus_one() {
        let f = field(4);
        let mut v = vec![BigInt::zero(); f.order() / 2 + 1];
        v[f.order() / 2] = BigInt::one();
        assert_eq!(f.reduce(&v, BigInt::one()), f.from_int(-1));
    }

    #[test]
    fn minimal_poly_annihilates_zeta() {
        for r in [2, 3, 5] {
            let f = field(r);
            let x = f.reduce(f.minimal_poly(), BigInt::one());
            assert!(x.is_zero());
        }
    }

    #[test]
    fn invert_one_and_zeta() {
        let f = field(3);
        assert_eq!(f.one().invert().unwrap(), f.one());
        assert_eq!(
            f.zeta_pow(1).invert().unwrap(),
            f.zeta_pow(f.order() as i64 - 1)
        );
    }

    #[test]
    fn invert_zero_fails() {
        let f = field(3);
        assert_eq!(f.zero().invert(), Err(CycError::DivisionByZero(12)));
    }

    #[test]
    fn quantum_two_at_r3_is_self_inverse() {
        // q primitive 6th root: [2] = q + q^-1 = 1, so [2]^-1 = 1 = [2]
        let f = field(3);
        let q2 = f.quantum_int(2);
        assert_eq!(q2, f.one());
        assert_eq!(q2.invert().unwrap(), f.one());
    }

    #[test]
    fn quantum_int_checkpoints() {
        for r in 2..=8 {
            let f = field(r);
            assert!(f.quantum_int(0).is_zero());
            assert!(f.quantum_int(1).is_one());
            assert!(f.quantum_int(r as i64).is_zero(), "[r] = 0 at r = {}", r);
            assert_eq!(f.quantum_int(-2), -&f.quantum_int(2));
        }
    }

    #[test]
    fn quantum_int_at_r4_is_sqrt2() {
        let f = field(4);
        let q2 = f.quantum_int(2);
        assert_eq!(q2, &f.zeta_pow(2) + &f.zeta_pow(-2));
        let (re, im) = q2.to_complex();
        assert!((re - std::f64::consts::SQRT_2).abs() < 1e-9);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn quantum_int_periodicity_and_product_identity() {
        for r in [2usize, 3, 5] {
            let f = field(r);
            for n in -3i64..=(2 * r as i64 + 2) {
                assert_eq!(f.quantum_int(n + 2 * r as i64), f.quantum_int(n));
            }
            for n in 1..=(2 * r as i64) {
                let lhs = &f.quantum_int(n + 1) * &f.quantum_int(n - 1);
                let rhs = &(&f.quantum_int(n) * &f.quantum_int(n)) - &f.one();
                assert_eq!(lhs, rhs, "[n+1][n-1] = [n]^2 - 1 at n = {}", n);
            }
        }
    }

    #[test]
    fn coeff_string_roundtrip() {
        let f = field(3);
        let x = &(&f.quantum_int(2) * &f.zeta_pow(5).invert().unwrap()) + &f.from_int(-7);
        let s = x.to_coeff_strings();
        assert_eq!(s.len(), f.phi());
        let back = CycNum::from_coeff_strings(&f, &s).unwrap();
        assert_eq!(back, x);
    }

    fn arb_cyc(r: usize) -> impl Strategy<Value = CycNum> {
        let f = field(r);
        let phi = f.phi();
        (
            prop::collection::vec(-9i64..=9, phi),
            1i64..=7,
        )
            .prop_map(move |(cs, den)| {
                let v: Vec<BigInt> = cs.into_iter().map(BigInt::from).collect();
                f.reduce(&v, BigInt::from(den))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_cyc(4), b in arb_cyc(4), c in arb_cyc(4)) {
            // associativity and commutativity
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            // distributivity
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // inverses
            if !a.is_zero() {
                prop_assert!((&a * &a.invert().unwrap()).is_one());
            }
            prop_assert!((&a - &a).is_zero());
        }
    }
}
