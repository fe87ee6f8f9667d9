//! Arithmetic in GF(p^k) over a dense polynomial basis.
//!
//! A [`FieldCtx`] fixes the prime, the degree and the defining modulus; every
//! [`FieldElement`] carries a shared handle to its context. The modulus is the
//! least monic irreducible polynomial of degree `k`, where polynomials are
//! ordered by their base-`p` packing `Σ c_i p^i`, so element encodings are
//! reproducible from `(p, k)` alone.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::numtheory::is_prime;

/// Largest supported field order. Packed elements must fit in a `u32`.
pub const MAX_FIELD_ORDER: u64 = u32::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{k} exceeds the supported bound {MAX_FIELD_ORDER}")]
    TooLarge { p: u64, k: u32 },
    #[error("operands belong to different fields")]
    ContextMismatch,
    #[error("zero has no multiplicative inverse")]
    DivisionByZero,
    #[error("{value} is not a packed element of a field of order {order}")]
    OutOfRange { value: u64, order: u64 },
    #[error("the twisting map x -> x^r needs GF(2^m) with m odd and m >= 3, got GF({p}^{k})")]
    NotSuzukiField { p: u64, k: u32 },
}

/// GF(p^k) together with its defining modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    p: u64,
    k: u32,
    /// Monic modulus, low degree first; `modulus.len() == k + 1`.
    modulus: Vec<u64>,
    order: u64,
}

/// Builds GF(p^k) with the least monic irreducible modulus of degree `k`.
pub fn field_make(p: u64, k: u32) -> Result<Arc<FieldCtx>, FieldError> {
    FieldCtx::new(p, k).map(Arc::new)
}

impl FieldCtx {
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = p
            .checked_pow(k)
            .filter(|&o| o <= MAX_FIELD_ORDER)
            .ok_or(FieldError::TooLarge { p, k })?;
        let modulus = least_irreducible(p, k);
        Ok(FieldCtx {
            p,
            k,
            modulus,
            order,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Exponent `r = 2^((m+1)/2)` of the Suzuki twist, when this is GF(2^m), m odd >= 3.
    pub fn suzuki_r(&self) -> Result<u64, FieldError> {
        if self.p != 2 || self.k < 3 || self.k % 2 == 0 {
            return Err(FieldError::NotSuzukiField {
                p: self.p,
                k: self.k,
            });
        }
        Ok(1u64 << ((self.k + 1) / 2))
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod ", self.p, self.k)?;
        let mut first = true;
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

// Polynomials over GF(p) as coefficient vectors, low degree first.

fn trim(poly: &mut Vec<u64>) {
    while poly.last() == Some(&0) {
        poly.pop();
    }
}

/// Remainder of `num` modulo the monic `den`.
fn poly_rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let d = den.len() - 1;
    debug_assert_eq!(den[d], 1);
    while rem.len() > d {
        let shift = rem.len() - 1 - d;
        let lead = rem[rem.len() - 1];
        for (i, &c) in den.iter().enumerate() {
            let sub = lead * c % p;
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        trim(&mut rem);
    }
    rem
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p` digits of `index`.
fn monic_from_index(mut index: u64, deg: u32, p: u64) -> Vec<u64> {
    let mut poly = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        poly.push(index % p);
        index /= p;
    }
    poly.push(1);
    poly
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub(crate) fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = (poly.len() - 1) as u32;
    for d in 1..=deg / 2 {
        for index in 0..p.pow(d) {
            let divisor = monic_from_index(index, d, p);
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    (0..p.pow(k))
        .map(|index| monic_from_index(index, k, p))
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial exists in every degree")
}

/// An element of GF(p^k) in reduced polynomial form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
    ctx: Arc<FieldCtx>,
}

/// Binary field operation selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn zero(ctx: &Arc<FieldCtx>) -> Self {
        FieldElement {
            coeffs: vec![0; ctx.k as usize],
            ctx: Arc::clone(ctx),
        }
    }

    pub fn one(ctx: &Arc<FieldCtx>) -> Self {
        let mut e = Self::zero(ctx);
        e.coeffs[0] = 1;
        e
    }

    /// The class of `x` in GF(p)[x]/(f). For `k = 1` this is `-f(0)`.
    pub fn generator(ctx: &Arc<FieldCtx>) -> Self {
        if ctx.k == 1 {
            let c = (ctx.p - ctx.modulus[0]) % ctx.p;
            return Self::from_packed(ctx, c).expect("residue below p");
        }
        let mut e = Self::zero(ctx);
        e.coeffs[1] = 1;
        e
    }

    /// Decodes the little-endian base-`p` packing.
    pub fn from_packed(ctx: &Arc<FieldCtx>, value: u64) -> Result<Self, FieldError> {
        if value >= ctx.order {
            return Err(FieldError::OutOfRange {
                value,
                order: ctx.order,
            });
        }
        let mut rest = value;
        let coeffs = (0..ctx.k)
            .map(|_| {
                let c = rest % ctx.p;
                rest /= ctx.p;
                c
            })
            .collect();
        Ok(FieldElement {
            coeffs,
            ctx: Arc::clone(ctx),
        })
    }

    /// Little-endian base-`p` packing `Σ coeffs[i]·p^i`, the serialized form.
    pub fn to_packed(&self) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.ctx.p + c)
    }

    /// Every element of the field, in packing order.
    pub fn all(ctx: &Arc<FieldCtx>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..ctx.order).map(move |v| Self::from_packed(ctx, v).expect("in range"))
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_ctx(&self, other: &Self) -> Result<(), FieldError> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(FieldError::ContextMismatch)
        }
    }

    fn with_coeffs(&self, coeffs: Vec<u64>) -> Self {
        FieldElement {
            coeffs,
            ctx: Arc::clone(&self.ctx),
        }
    }

    pub fn apply(&self, op: FieldOp, other: &Self) -> Result<Self, FieldError> {
        match op {
            FieldOp::Add => self.try_add(other),
            FieldOp::Sub => self.try_sub(other),
            FieldOp::Mul => self.try_mul(other),
            FieldOp::Div => self.try_div(other),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_ctx(other)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_ctx(other)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_ctx(other)?;
        let p = self.ctx.p;
        let k = self.ctx.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        let mut rem = poly_rem(&prod, &self.ctx.modulus, p);
        rem.resize(k, 0);
        Ok(self.with_coeffs(rem))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_ctx(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Self {
        let p = self.ctx.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        self.with_coeffs(coeffs)
    }

    /// Multiplicative inverse as `a^(q-2)`.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(self.ctx.order - 2))
    }

    /// Square-and-multiply exponentiation; `pow(0) == 1`.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// The Suzuki twist `a -> a^r`, `r = 2^((m+1)/2)`, as `(m+1)/2` squarings.
    pub fn frobenius_r(&self) -> Result<Self, FieldError> {
        let r = self.ctx.suzuki_r()?;
        let mut acc = self.clone();
        for _ in 0..r.trailing_zeros() {
            acc = &acc * &acc;
        }
        Ok(acc)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:?} in GF({}^{}))", self.coeffs, self.ctx.p, self.ctx.k)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_packed())
    }
}

// Operator sugar panics on mixed fields; use the `try_*` methods to handle that case.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field operands must share a context")
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Lookup tables over packed elements for the brute-force layer.
///
/// Built from [`FieldElement`] arithmetic, so both agree by construction.
#[derive(Debug, Clone)]
pub struct FieldTables {
    ctx: Arc<FieldCtx>,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Largest field for which [`FieldTables`] are built.
pub const MAX_TABLE_ORDER: u64 = 256;

impl FieldTables {
    pub fn new(ctx: &Arc<FieldCtx>) -> Result<Self, FieldError> {
        if ctx.order > MAX_TABLE_ORDER {
            return Err(FieldError::TooLarge {
                p: ctx.p,
                k: ctx.k,
            });
        }
        let q = ctx.order as usize;
        let elems: Vec<FieldElement> = FieldElement::all(ctx).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = (a + b).to_packed() as u16;
                mul[i * q + j] = (a * b).to_packed() as u16;
            }
        }
        let neg = elems.iter().map(|a| (-a).to_packed() as u16).collect();
        let inv = elems
            .iter()
            .map(|a| a.inv().map_or(0, |x| x.to_packed() as u16))
            .collect();
        Ok(FieldTables {
            ctx: Arc::clone(ctx),
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    /// Inverse of a nonzero element; maps zero to zero.
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u16, mut exp: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}
