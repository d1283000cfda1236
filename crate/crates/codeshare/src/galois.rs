//! Exact arithmetic in finite fields GF(p^m) and explicit embeddings
//! between them.
//!
//! Elements are polynomials over GF(p) reduced modulo a monic
//! irreducible of degree m. Each element carries a handle to its field,
//! so mixing fields is caught at the operation site. The canonical
//! integer encoding of an element (a_0, ..., a_{m-1}) is
//! sum a_i * p^i, a bijection onto 0..p^m.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest admissible field size. Every verification in this crate walks
/// all q elements at least once, so the cap is load-bearing.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Largest admissible characteristic; primality is checked by trial
/// division.
pub const MAX_CHARACTERISTIC: u64 = 1 << 16;

#[derive(Debug, PartialEq, Eq, Hash)]
struct FieldRepr {
    p: u64,
    m: usize,
    /// Monic irreducible modulus, coefficients low degree first,
    /// length m + 1.
    modulus: Vec<u64>,
}

/// A finite field GF(p^m). Cheap to clone; two handles compare equal
/// when characteristic, degree and modulus all agree.
#[derive(Clone)]
pub struct Field {
    repr: Arc<FieldRepr>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || self.repr == other.repr
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.repr.p, self.repr.m)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.repr.m == 1 {
            write!(f, "GF({})", self.repr.p)
        } else {
            write!(f, "GF({}^{})", self.repr.p, self.repr.m)
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------
// Polynomial arithmetic over GF(p), coefficients low degree first.
// ---------------------------------------------------------------------

fn poly_trim(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let deg_m = modulus.len() - 1;
    let mut rem: Vec<u64> = a.to_vec();
    poly_trim(&mut rem);
    while rem.len() > deg_m {
        let lead = rem[rem.len() - 1];
        if lead != 0 {
            let shift = rem.len() - 1 - deg_m;
            for (i, &mi) in modulus.iter().enumerate() {
                let idx = shift + i;
                let sub = (lead * mi) % p;
                rem[idx] = (rem[idx] + p - sub) % p;
            }
        }
        rem.pop();
        poly_trim(&mut rem);
    }
    rem
}

/// True when the monic polynomial has no monic factor of degree
/// 1..=deg/2, tested by exhaustive trial division.
fn poly_is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=(deg / 2) {
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut divisor = digits(enc, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Base-p digits of `value`, low digit first, padded to `len`.
fn digits(value: u64, p: u64, len: usize) -> Vec<u64> {
    let mut v = value;
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

impl Field {
    /// The field GF(p^m) with the monic irreducible modulus of smallest
    /// canonical coefficient encoding.
    pub fn new(p: u64, m: usize) -> Result<Field> {
        if m < 1 {
            return Err(Error::InvalidDegree);
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::CharacteristicTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let size = checked_size(p, m)?;
        for enc in 0..size {
            let mut candidate = digits(enc, p, m);
            candidate.push(1);
            if poly_is_irreducible(&candidate, p) {
                return Ok(Field {
                    repr: Arc::new(FieldRepr { p, m, modulus: candidate }),
                });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over GF(p)")
    }

    /// The field defined by an explicit monic irreducible modulus,
    /// coefficients low degree first, length m + 1.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::InvalidDegree);
        }
        let m = modulus.len() - 1;
        if p > MAX_CHARACTERISTIC {
            return Err(Error::CharacteristicTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        checked_size(p, m)?;
        if modulus[m] != 1 {
            return Err(Error::MalformedModulus);
        }
        for &c in &modulus {
            if c >= p {
                return Err(Error::CoefficientRange { value: c, p });
            }
        }
        if !poly_is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p });
        }
        Ok(Field {
            repr: Arc::new(FieldRepr { p, m, modulus }),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.repr.p
    }

    pub fn degree(&self) -> usize {
        self.repr.m
    }

    /// q = p^m.
    pub fn size(&self) -> u64 {
        self.repr.p.pow(self.repr.m as u32)
    }

    /// Modulus coefficients, low degree first, length m + 1.
    pub fn modulus(&self) -> &[u64] {
        &self.repr.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.repr.m],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1 % self.repr.p)
    }

    /// The element whose constant coefficient is `c` (c < p).
    pub fn constant(&self, c: u64) -> FieldElement {
        assert!(c < self.repr.p, "constant {} not reduced modulo {}", c, self.repr.p);
        let mut coeffs = vec![0; self.repr.m];
        coeffs[0] = c;
        FieldElement { field: self.clone(), coeffs }
    }

    /// The class of x, i.e. the element with coefficient vector
    /// (0, 1, 0, ...). For m = 1 this is the zero element.
    pub fn generator(&self) -> FieldElement {
        self.element_from_encoding(if self.repr.m == 1 { 0 } else { self.repr.p })
            .expect("generator encoding is in range")
    }

    pub fn element(&self, coeffs: Vec<u64>) -> Result<FieldElement> {
        if coeffs.len() != self.repr.m {
            return Err(Error::Shape(format!(
                "element needs {} coefficients, got {}",
                self.repr.m,
                coeffs.len()
            )));
        }
        for &c in &coeffs {
            if c >= self.repr.p {
                return Err(Error::CoefficientRange { value: c, p: self.repr.p });
            }
        }
        Ok(FieldElement { field: self.clone(), coeffs })
    }

    /// Inverse of the canonical encoding enc = sum a_i p^i.
    pub fn element_from_encoding(&self, enc: u64) -> Result<FieldElement> {
        if enc >= self.size() {
            return Err(Error::EncodingRange { enc, size: self.size() });
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs: digits(enc, self.repr.p, self.repr.m),
        })
    }

    /// All q elements in canonical encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |enc| {
            self.element_from_encoding(enc).expect("encoding in range")
        })
    }

    /// The first `count` nonzero elements in canonical encoding order.
    pub fn nonzero_elements(&self, count: usize) -> Result<Vec<FieldElement>> {
        let max = self.size() - 1;
        if count as u64 > max {
            return Err(Error::LengthExceedsField { n: count, q: self.size(), max });
        }
        (1..=count as u64).map(|enc| self.element_from_encoding(enc)).collect()
    }
}

fn checked_size(p: u64, m: usize) -> Result<u64> {
    let mut size: u64 = 1;
    for _ in 0..m {
        size = size.checked_mul(p).ok_or(Error::FieldTooLarge(u64::MAX))?;
        if size > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge(size));
        }
    }
    Ok(size)
}

// ---------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------

/// An element of a [`Field`], stored as m coefficients in 0..p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Canonical integer encoding sum a_i p^i.
    pub fn encoding(&self) -> u64 {
        let p = self.field.repr.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "field mismatch: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a^(q-2) = a^(-1) for nonzero a.
        Ok(self.pow(self.field.size() - 2))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.assert_same_field(rhs);
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.encoding(), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encoding())
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.field.repr.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement { field: self.field.clone(), coeffs }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.field.repr.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement { field: self.field.clone(), coeffs }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        &self.field.zero() - self
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.field.repr.p;
        let prod = poly_mul(&self.coeffs, &rhs.coeffs, p);
        let mut rem = poly_rem(&prod, &self.field.repr.modulus, p);
        rem.resize(self.field.repr.m, 0);
        FieldElement { field: self.field.clone(), coeffs: rem }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// ---------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------

/// A ring embedding GF(p^a) -> GF(p^b) with a | b, carried explicitly as
/// the image of the source generator x.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    source: Field,
    target: Field,
    image: FieldElement,
}

impl FieldEmbedding {
    /// The embedding whose generator image is the root of the source
    /// modulus with the smallest canonical encoding in the target.
    pub fn new(source: &Field, target: &Field) -> Result<FieldEmbedding> {
        if source.characteristic() != target.characteristic()
            || target.degree() % source.degree() != 0
        {
            return Err(Error::NoEmbedding);
        }
        for candidate in target.elements() {
            if eval_in(source.modulus(), &candidate, target).is_zero() {
                return Ok(FieldEmbedding {
                    source: source.clone(),
                    target: target.clone(),
                    image: candidate,
                });
            }
        }
        Err(Error::NoEmbedding)
    }

    pub fn identity(field: &Field) -> FieldEmbedding {
        FieldEmbedding::new(field, field).expect("a field embeds into itself")
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    /// Image of the source generator x.
    pub fn image(&self) -> &FieldElement {
        &self.image
    }

    /// Maps sum a_i x^i to sum a_i image^i.
    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert!(
            *a.field() == self.source,
            "embedding applied to an element of {}",
            a.field()
        );
        eval_in(a.coeffs(), &self.image, &self.target)
    }

    pub fn apply_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        v.iter().map(|a| self.apply(a)).collect()
    }

    /// Composition `other . self`; valid but not necessarily the
    /// smallest-root embedding for the combined hop.
    pub fn compose(&self, other: &FieldEmbedding) -> Result<FieldEmbedding> {
        if self.target != other.source {
            return Err(Error::NoEmbedding);
        }
        Ok(FieldEmbedding {
            source: self.source.clone(),
            target: other.target.clone(),
            image: other.apply(&self.image),
        })
    }

    /// The embedding really is one: the source modulus vanishes at the
    /// generator image.
    pub fn is_valid(&self) -> bool {
        eval_in(self.source.modulus(), &self.image, &self.target).is_zero()
    }
}

/// Evaluate a polynomial with GF(p) coefficients at a point of `field`.
fn eval_in(coeffs: &[u64], at: &FieldElement, field: &Field) -> FieldElement {
    let mut acc = field.zero();
    for &c in coeffs.iter().rev() {
        acc = &(&acc * at) + &field.constant(c);
    }
    acc
}

// ---------------------------------------------------------------------
// Serialization: {"p": int, "m": int, "modulus": [int, ...]}
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct FieldFile {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FieldFile {
            p: self.repr.p,
            m: self.repr.m,
            modulus: self.repr.modulus.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let file = FieldFile::deserialize(deserializer)?;
        if file.modulus.len() != file.m + 1 {
            return Err(serde::de::Error::custom("modulus length must be m + 1"));
        }
        Field::with_modulus(file.p, file.modulus).map_err(serde::de::Error::custom)
    }
}
