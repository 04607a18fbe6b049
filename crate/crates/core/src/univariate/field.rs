//! Prime fields `F_p` and their extensions `F_p[t]/(m(t))`.
//!
//! An element is stored as the integer `Σ c_i p^i` built from its coefficients
//! `c_i` in the basis `1, t, ..., t^{k-1}`. The prime field sits inside every
//! extension as the integers `0..p`, so the constant embedding is the identity.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported characteristic.
pub const MAX_CHARACTERISTIC: u32 = 13;
/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 13 * 13 * 13;

pub fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Returns `(p, k)` when `q = p^k` with `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    degree: u32,
    /// Monic modulus over `F_p`, lowest degree first. `[0, 1]` for the prime field.
    modulus: Vec<u32>,
    size: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.size)?;
        if self.degree > 1 {
            write!(f, "[{}]", self.modulus_string())?;
        }
        Ok(())
    }
}

fn check_characteristic(p: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    if p > MAX_CHARACTERISTIC {
        return Err(Error::FieldTooLarge(p as u64));
    }
    Ok(())
}

impl FiniteField {
    pub fn prime(p: u32) -> Result<Self> {
        check_characteristic(p)?;
        Ok(Self::build(p, vec![0, 1]))
    }

    /// `F_p[t]/(modulus)`; the modulus must be monic and irreducible over `F_p`.
    pub fn extension(p: u32, modulus: &[u32]) -> Result<Self> {
        check_characteristic(p)?;
        let mut modulus: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        if modulus.len() < 2 || modulus.last() != Some(&1) {
            return Err(Error::InvalidField(
                "modulus must be monic of degree >= 1".into(),
            ));
        }
        let degree = (modulus.len() - 1) as u32;
        let size = (p as u64).pow(degree);
        if size > MAX_FIELD_SIZE as u64 {
            return Err(Error::FieldTooLarge(size));
        }
        if !is_irreducible_by_trial_division(p, &modulus) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }
        Ok(Self::build(p, modulus))
    }

    /// `F_{p^k}` using the first monic irreducible of degree `k` in enumeration order.
    pub fn canonical_extension(p: u32, k: u32) -> Result<Self> {
        check_characteristic(p)?;
        if k == 0 {
            return Err(Error::InvalidField(
                "extension degree must be positive".into(),
            ));
        }
        if k == 1 {
            return Self::prime(p);
        }
        let size = (p as u64).pow(k);
        if size > MAX_FIELD_SIZE as u64 {
            return Err(Error::FieldTooLarge(size));
        }
        let k = k as usize;
        for index in 0..size as u32 {
            let mut modulus = digits(index, p, k);
            modulus.push(1);
            if is_irreducible_by_trial_division(p, &modulus) {
                return Ok(Self::build(p, modulus));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Field of size `q` using the canonical modulus.
    pub fn of_size(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::canonical_extension(p, k)
    }

    fn build(p: u32, modulus: Vec<u32>) -> Self {
        let degree = (modulus.len() - 1) as u32;
        let size = p.pow(degree);
        let mut field = FiniteField {
            p,
            degree,
            modulus,
            size,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let order = size - 1;
        for g in 2..size.max(3) {
            let g = if size == 2 { 1 } else { g };
            let mut powers = Vec::with_capacity(order as usize);
            let mut cur = 1;
            for _ in 0..order {
                powers.push(cur);
                cur = field.mul_slow(cur, g);
            }
            let mut log = vec![u32::MAX; size as usize];
            let mut primitive = true;
            for (e, &v) in powers.iter().enumerate() {
                if log[v as usize] != u32::MAX {
                    primitive = false;
                    break;
                }
                log[v as usize] = e as u32;
            }
            if primitive {
                field.exp = powers;
                field.log = log;
                return field;
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// The class of `t` (a generator over the prime field); `None` for prime fields.
    pub fn generator(&self) -> Option<u32> {
        (self.degree > 1).then_some(self.p)
    }

    /// Coefficients of an element in the basis `1, t, ..., t^{k-1}`.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        digits(a, self.p, self.degree as usize)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> u32 {
        coeffs
            .iter()
            .take(self.degree as usize)
            .rev()
            .fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.degree {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.degree == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.degree {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.degree == 1 {
            return a * b % self.p;
        }
        let order = self.size - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % order) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let order = self.size - 1;
        Some(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Schoolbook product modulo the modulus; used to build the log tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let k = self.degree as usize;
        let (a, b) = (digits(a, self.p, k), digits(b, self.p, k));
        let mut prod = vec![0u32; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for top in (k..2 * k).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate().take(k) {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + self.p * self.p - c * m % self.p) % self.p;
            }
            prod[top] = 0;
        }
        self.from_coefficients(&prod[..k])
    }

    /// Renders an element; extension elements are polynomials in `t`.
    pub fn fmt_element(&self, a: u32) -> String {
        if self.degree == 1 {
            return a.to_string();
        }
        fmt_dense(&self.coefficients(a), "t", |c| c.to_string())
    }

    /// True when the rendering needs parentheses as a coefficient.
    pub fn is_compound(&self, a: u32) -> bool {
        self.coefficients(a).iter().filter(|&&c| c != 0).count() > 1
    }

    pub fn modulus_string(&self) -> String {
        fmt_dense(&self.modulus, "t", |c| c.to_string())
    }
}

fn digits(mut a: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(a % p);
        a /= p;
    }
    out
}

/// Formats a dense coefficient list (lowest degree first) with highest degree first.
pub(crate) fn fmt_dense(coeffs: &[u32], var: &str, coeff: impl Fn(u32) -> String) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => coeff(c),
            (1, _) => mono,
            _ => format!("{}{mono}", coeff(c)),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Trial division over `F_p` by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible_by_trial_division(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for index in 0..p.pow(d as u32) {
            let mut divisor = digits(index, p, d);
            divisor.push(1);
            if remainder_mod_p(p, poly, &divisor).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn remainder_mod_p(p: u32, num: &[u32], monic: &[u32]) -> Vec<u32> {
    let mut rem = num.to_vec();
    let d = monic.len() - 1;
    while rem.len() > d {
        let c = rem.pop().unwrap_or(0);
        let shift = rem.len() - d;
        for (i, &m) in monic.iter().enumerate().take(d) {
            rem[shift + i] = (rem[shift + i] + p * p - c * m % p) % p;
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FiniteField::prime(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(matches!(FiniteField::prime(4), Err(Error::InvalidField(_))));
        assert!(matches!(
            FiniteField::prime(17),
            Err(Error::FieldTooLarge(17))
        ));
        assert!(matches!(
            FiniteField::extension(2, &[1, 0, 1]),
            Err(Error::InvalidField(_))
        ));
        assert!(matches!(
            FiniteField::canonical_extension(13, 4),
            Err(Error::FieldTooLarge(_))
        ));
        assert!(FiniteField::canonical_extension(13, 3).is_ok());
    }

    #[test]
    fn gf4_matches_hand_tables() {
        let f = FiniteField::extension(2, &[1, 1, 1]).unwrap();
        let t = f.generator().unwrap();
        let t1 = f.add(t, 1);
        // t^2 = t + 1
        assert_eq!(f.mul(t, t), t1);
        // t (t + 1) = t^2 + t = 1
        assert_eq!(f.mul(t, t1), 1);
        assert_eq!(f.fmt_element(t1), "t + 1");
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for q in [2, 3, 4, 8, 9, 25, 27, 49, 121, 169] {
            let f = FiniteField::of_size(q).unwrap();
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "GF({q}) a={a}");
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn multiplication_agrees_with_schoolbook() {
        let f = FiniteField::of_size(27).unwrap();
        for a in 0..27 {
            for b in 0..27 {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(2197), Some((13, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
