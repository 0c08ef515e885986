//! Arithmetic in GF(p^e) for desk-scale orders (q <= 16).
//!
//! Elements are integers `0..q`, read as base-p digit vectors, i.e.
//! polynomial coefficients with the constant term in the lowest digit.
//! The modulus is the lexicographically smallest monic irreducible
//! polynomial of the right degree, found by exhaustive search, so every
//! run and every implementation of this rule builds the same field.
//! Addition and multiplication are precomputed tables.

use crate::error::{Error, Result};

const MAX_ORDER: usize = 16;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: usize,
    e: u32,
    q: usize,
    /// Monic modulus, coefficient i for x^i, length e + 1.
    modulus: Vec<usize>,
    add_table: Vec<usize>,
    mul_table: Vec<usize>,
    inv_table: Vec<usize>,
}

impl FiniteField {
    /// Builds GF(q). Fails when q is not a prime power or exceeds the
    /// desk-scale cap of 16.
    pub fn new(q: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::input(format!("field order {q} must be at least 2")));
        }
        if q > MAX_ORDER {
            return Err(Error::input(format!(
                "field order {q} exceeds the desk-scale cap {MAX_ORDER}"
            )));
        }
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::input(format!("{q} is not a prime power")))?;
        let modulus = smallest_irreducible(p, e);

        let digits: Vec<Vec<usize>> = (0..q).map(|a| to_digits(a, p, e)).collect();
        let mut add_table = vec![0; q * q];
        let mut mul_table = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<usize> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add_table[a * q + b] = from_digits(&sum, p);
                let prod = poly_mul_mod(&digits[a], &digits[b], p, &modulus);
                mul_table[a * q + b] = from_digits(&prod, p);
            }
        }
        let mut inv_table = vec![0; q];
        for a in 1..q {
            inv_table[a] = (1..q)
                .find(|&b| mul_table[a * q + b] == 1)
                .expect("every nonzero element of a field has an inverse");
        }
        Ok(FiniteField {
            p,
            e,
            q,
            modulus,
            add_table,
            mul_table,
            inv_table,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add_table[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse exists")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.q + b]
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no multiplicative inverse");
        self.inv_table[a]
    }
}

fn prime_power(q: usize) -> Option<(usize, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?; // smallest divisor is prime
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn to_digits(mut a: usize, p: usize, e: u32) -> Vec<usize> {
    let mut digits = vec![0; e as usize];
    for d in digits.iter_mut() {
        *d = a % p;
        a /= p;
    }
    digits
}

fn from_digits(digits: &[usize], p: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Smallest monic irreducible polynomial of degree e over GF(p), ordering
/// candidates by the base-p value of their low coefficients.
fn smallest_irreducible(p: usize, e: u32) -> Vec<usize> {
    if e == 1 {
        return vec![0, 1]; // x itself; arithmetic is plain mod p
    }
    for low in 0..p.pow(e) {
        let mut candidate = to_digits(low, p, e);
        candidate.push(1);
        if is_irreducible(&candidate, p) {
            return candidate;
        }
    }
    unreachable!("irreducible polynomials exist for every degree")
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut divisor = to_digits(low, p, d as u32);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_mul_mod(a: &[usize], b: &[usize], p: usize, modulus: &[usize]) -> Vec<usize> {
    let mut prod = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut rem = poly_rem(&prod, modulus, p);
    rem.resize(modulus.len() - 1, 0);
    rem
}

/// Remainder of `a` divided by monic `m`, coefficients mod p.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut rem = a.to_vec();
    let md = m.len() - 1;
    while rem.len() > md {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - md;
            for (i, &c) in m.iter().enumerate() {
                let sub = lead * c % p;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.pop();
    }
    rem
}
