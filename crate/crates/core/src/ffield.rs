//! Exact finite-field arithmetic.
//!
//! [`FiniteField`] covers `F_{p^k}` for any prime `p`, with elements encoded as the integer
//! `sum c_i p^i` of their coefficient vector over the polynomial basis. It is used for the
//! matrix entries of `PGL_2(q)` and for the quadratic extension `F_{q^2}`.
//!
//! [`BinaryField`] is the bit-packed `F_{2^m}` (`m <= 32`) used as the coefficient field of
//! group algebras.
//!
//! Both choose the lowest irreducible modulus in a fixed enumeration order, so every
//! construction (and hence every generator and class representative) is reproducible.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default upper bound on the field order.
pub const DEFAULT_FIELD_GUARD: u64 = 1 << 32;

/// Fields up to this order get discrete-log tables.
pub const LOG_TABLE_LIMIT: u64 = 1 << 16;

const ADD_TABLE_LIMIT: u64 = 1 << 10;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^k` with `p` prime; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let fs = prime_factors(q);
    if fs.len() != 1 {
        return None;
    }
    let p = fs[0];
    let mut k = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        k += 1;
    }
    Some((p, k))
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, little-endian coefficient vectors.
// ---------------------------------------------------------------------------

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a nonzero `f`.
fn poly_rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p) as u64;
    while r.len() > df {
        let dr = r.len() - 1;
        let c = r[dr] as u64 * lead_inv % p as u64;
        if c != 0 {
            for (i, &fc) in f.iter().enumerate() {
                let idx = dr - df + i;
                let sub = c * fc as u64 % p as u64;
                r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        trim(&mut r);
    }
    r
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = *a.get(i).unwrap_or(&0);
            let y = *b.get(i).unwrap_or(&0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_powmod(base: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_rem(&poly_mul(&result, &b, p), f, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), f, p);
        e >>= 1;
    }
    result
}

/// Rabin-style test: `x^{p^k} = x mod f` and `gcd(x^{p^d} - x, f) = 1` for every proper
/// divisor `d` of `k`, i.e. `f` has no root in any proper subfield.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    let mut h = x.clone();
    for d in 1..=k {
        h = poly_powmod(&h, p as u64, f, p);
        let diff = poly_sub(&h, &x, p);
        if d == k {
            return diff.is_empty();
        }
        if k.is_multiple_of(d) {
            let g = poly_gcd(&diff, f, p);
            if g.len() > 1 {
                return false;
            }
        }
    }
    unreachable!()
}

fn decode(mut v: u64, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push((v % p as u64) as u32);
        v /= p as u64;
    }
    out
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs
        .iter()
        .rev()
        .fold(0u64, |acc, &c| acc * p as u64 + c as u64) as u32
}

/// Lowest monic irreducible of degree `k` over `F_p`, ordered by the integer encoding of
/// its lower coefficients.
fn lowest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for low in 0..count {
        let mut f = decode(low, p, k);
        f.push(1);
        if k > 1 && f[0] == 0 {
            continue;
        }
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

// ---------------------------------------------------------------------------
// FiniteField
// ---------------------------------------------------------------------------

/// An element of a [`FiniteField`], encoded as `sum c_i p^i` over the polynomial basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }
}

#[derive(Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// `F_{p^k}` with a verified irreducible modulus.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: FieldElement,
    logs: Option<Arc<LogTables>>,
    add: Option<Arc<Vec<u16>>>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        Self::with_guard(p, k, DEFAULT_FIELD_GUARD)
    }

    pub fn with_guard(p: u32, k: u32, guard: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidInput("field degree must be positive".into()));
        }
        let order = (p as u64)
            .checked_pow(k)
            .filter(|&o| o < guard.min(DEFAULT_FIELD_GUARD));
        let order = match order {
            Some(o) => o,
            None => {
                return Err(Error::ResourceLimit(format!(
                    "field order {p}^{k} exceeds guard {guard}"
                )))
            }
        };
        let modulus = lowest_irreducible(p, k);
        debug_assert!(is_irreducible(&modulus, p));
        let mut field = FiniteField {
            p,
            k,
            order: order as u32,
            modulus,
            generator: FieldElement::ONE,
            logs: None,
            add: None,
        };
        field.generator = field.find_generator();
        if order <= LOG_TABLE_LIMIT {
            let n = order as usize - 1;
            let mut exp = vec![0u32; 2 * n.max(1)];
            let mut log = vec![0u32; order as usize];
            let mut x = FieldElement::ONE;
            for i in 0..n {
                exp[i] = x.0;
                log[x.0 as usize] = i as u32;
                x = field.mul_poly(x, field.generator);
            }
            for i in n..2 * n {
                exp[i] = exp[i - n];
            }
            field.logs = Some(Arc::new(LogTables { exp, log }));
        }
        if order <= ADD_TABLE_LIMIT && k > 1 {
            let q = order as usize;
            let mut table = vec![0u16; q * q];
            for a in 0..q {
                for b in 0..q {
                    table[a * q + b] = field.add_digits(a as u32, b as u32) as u16;
                }
            }
            field.add = Some(Arc::new(table));
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus, little-endian coefficients.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn element(&self, index: u32) -> FieldElement {
        assert!(index < self.order, "element index out of range");
        FieldElement(index)
    }

    /// Embeds an integer through the prime field.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(FieldElement)
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        decode(a.0 as u64, self.p, self.k)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x % self.p).collect();
        if c.len() > self.k as usize {
            c = poly_rem(&c, &self.modulus, self.p);
        }
        FieldElement(encode(&c, self.p))
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (p, mut a, mut b) = (self.p, a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.k {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if let Some(t) = &self.add {
            return FieldElement(t[a.0 as usize * self.order as usize + b.0 as usize] as u32);
        }
        FieldElement(self.add_digits(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let c: Vec<u32> = self
            .coeffs(a)
            .into_iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        FieldElement(encode(&c, self.p))
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((a.0 as u64 * b.0 as u64 % self.p as u64) as u32);
        }
        let prod = poly_mul(&self.coeffs(a), &self.coeffs(b), self.p);
        FieldElement(encode(&poly_rem(&prod, &self.modulus, self.p), self.p))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        match &self.logs {
            Some(t) => FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_poly(a, b),
        }
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        if let Some(t) = &self.logs {
            let n = self.order as u64 - 1;
            let l = t.log[a.0 as usize] as u64 * (e % n) % n;
            return FieldElement(t.exp[l as usize]);
        }
        let mut result = FieldElement::ONE;
        let mut b = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_poly(result, b);
            }
            b = self.mul_poly(b, b);
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        if let Some(t) = &self.logs {
            let n = self.order - 1;
            let l = (n - t.log[a.0 as usize]) % n;
            return Some(FieldElement(t.exp[l as usize]));
        }
        Some(self.pow(a, self.order as u64 - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: FieldElement) -> u64 {
        assert!(a.0 != 0, "zero has no multiplicative order");
        let n = self.order as u64 - 1;
        let mut ord = n;
        for r in prime_factors(n) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == FieldElement::ONE {
                ord /= r;
            }
        }
        ord
    }

    fn find_generator(&self) -> FieldElement {
        let n = self.order as u64 - 1;
        let factors = prime_factors(n);
        (1..self.order)
            .map(FieldElement)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow(g, n / r) != FieldElement::ONE)
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// Smallest element (in encoding order) generating the multiplicative group.
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Discrete log to the base [`Self::generator`], if tables are present.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        self.logs.as_ref().map(|t| t.log[a.0 as usize])
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        a.0 == 0 || self.p == 2 || self.pow(a, (self.order as u64 - 1) / 2) == FieldElement::ONE
    }
}

/// `F_q` inside `F_{q^2}` together with the generators used for class representatives:
/// `sigma` generates `F_{q^2}^*` and `tau = sigma^{q+1}` generates the embedded `F_q^*`.
#[derive(Debug, Clone)]
pub struct QuadraticExtension {
    pub base: FiniteField,
    pub ext: FiniteField,
    /// `image[a]` is the embedding of base element `a`.
    image: Vec<FieldElement>,
    preimage: HashMap<FieldElement, FieldElement>,
    pub sigma: FieldElement,
    /// `sigma^{q+1}` in the extension.
    pub tau: FieldElement,
    /// The base-field element mapping to `tau`.
    pub tau_base: FieldElement,
}

impl QuadraticExtension {
    pub fn new(base: &FiniteField) -> Result<Self> {
        let ext = FiniteField::new(base.characteristic(), 2 * base.degree())?;
        let q = base.order() as u64;
        // smallest root of the base modulus; for k = 1 the modulus is `x` and the root is 0
        let root = ext
            .elements()
            .find(|&r| {
                let mut acc = FieldElement::ZERO;
                for &c in base.modulus().iter().rev() {
                    acc = ext.add(ext.mul(acc, r), ext.from_int(c as i64));
                }
                acc == FieldElement::ZERO
            })
            .ok_or_else(|| Error::Assertion("base modulus has no root in extension".into()))?;
        let image: Vec<FieldElement> = base
            .elements()
            .map(|a| {
                let mut acc = FieldElement::ZERO;
                for &c in base.coeffs(a).iter().rev() {
                    acc = ext.add(ext.mul(acc, root), ext.from_int(c as i64));
                }
                acc
            })
            .collect();
        let preimage: HashMap<_, _> = image
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, FieldElement(i as u32)))
            .collect();
        if preimage.len() != image.len() {
            return Err(Error::Assertion("embedding is not injective".into()));
        }
        let sigma = ext.generator();
        let tau = ext.pow(sigma, q + 1);
        let tau_base = *preimage.get(&tau).ok_or_else(|| {
            Error::Assertion("sigma^(q+1) is not in the embedded base field".into())
        })?;
        Ok(QuadraticExtension {
            base: base.clone(),
            ext,
            image,
            preimage,
            sigma,
            tau,
            tau_base,
        })
    }

    pub fn embed(&self, a: FieldElement) -> FieldElement {
        self.image[a.0 as usize]
    }

    /// Inverse of [`Self::embed`] on its image.
    pub fn restrict(&self, a: FieldElement) -> Option<FieldElement> {
        self.preimage.get(&a).copied()
    }
}

// ---------------------------------------------------------------------------
// BinaryField: F_{2^m}, m <= 32, bit-packed polynomial basis.
// ---------------------------------------------------------------------------

fn clmul(a: u64, b: u64) -> u64 {
    let mut r = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    r
}

fn gf2_rem(mut a: u64, f: u64) -> u64 {
    let df = 63 - f.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= df {
        let shift = 63 - a.leading_zeros() - df;
        a ^= f << shift;
    }
    a
}

fn gf2_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = gf2_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn gf2_is_irreducible(f: u64) -> bool {
    let k = 63 - f.leading_zeros();
    if k == 1 {
        return true;
    }
    let x = 2u64;
    let mut h = x;
    for d in 1..=k {
        h = gf2_rem(clmul(h, h), f);
        if d == k {
            return h == x;
        }
        if k.is_multiple_of(d) && gf2_gcd(h ^ x, f) != 1 {
            return false;
        }
    }
    unreachable!()
}

#[derive(Debug)]
struct BinTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// `F_{2^m}` for `1 <= m <= 32`. Elements are `u32` bit patterns over the basis
/// `1, x, ..., x^{m-1}`. Cheap to clone.
#[derive(Debug, Clone)]
pub struct BinaryField {
    m: u32,
    modulus: u64,
    trace_mask: u32,
    tables: Option<Arc<BinTables>>,
}

impl PartialEq for BinaryField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for BinaryField {}

impl BinaryField {
    pub const MAX_DEGREE: u32 = 32;

    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > Self::MAX_DEGREE {
            return Err(Error::ResourceLimit(format!(
                "binary field degree {m} outside 1..=32"
            )));
        }
        let modulus = if m == 1 {
            0b10
        } else {
            ((1u64 << m)..(1u64 << (m + 1)))
                .filter(|f| f & 1 == 1)
                .find(|&f| gf2_is_irreducible(f))
                .expect("irreducible polynomials exist in every degree")
        };
        let mut field = BinaryField {
            m,
            modulus,
            trace_mask: 0,
            tables: None,
        };
        let mut mask = 0u32;
        for t in 0..m {
            if field.trace(1 << t) == 1 {
                mask |= 1 << t;
            }
        }
        field.trace_mask = mask;
        if m <= 16 && m > 1 {
            let n = (1usize << m) - 1;
            let factors = prime_factors(n as u64);
            let g = (2u32..(1u32 << m))
                .find(|&g| {
                    factors
                        .iter()
                        .all(|&r| field.pow_slow(g, n as u64 / r) != 1)
                })
                .expect("cyclic multiplicative group");
            let mut exp = vec![0u32; 2 * n];
            let mut log = vec![0u32; n + 1];
            let mut x = 1u32;
            for i in 0..n {
                exp[i] = x;
                log[x as usize] = i as u32;
                x = field.mul_slow(x, g);
            }
            for i in n..2 * n {
                exp[i] = exp[i - n];
            }
            field.tables = Some(Arc::new(BinTables { exp, log }));
        }
        Ok(field)
    }

    pub fn f2() -> Self {
        Self::new(1).expect("F_2 always constructible")
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        1u64 << self.m
    }

    /// The basis element `x` (a generator of the field over F_2 when `m > 1`).
    pub fn x(&self) -> u32 {
        if self.m == 1 {
            1
        } else {
            2
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return a & b;
        }
        gf2_rem(clmul(a as u64, b as u64), self.modulus) as u32
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        r
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if a == 1 {
            return b;
        }
        if b == 1 {
            return a;
        }
        match &self.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => self.mul_slow(a, b),
        }
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let n = (1u64 << self.m) - 1;
            return t.exp[(t.log[a as usize] as u64 * (e % n) % n) as usize];
        }
        self.pow_slow(a, e)
    }

    pub fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    /// `a^{2^e}`.
    pub fn frob(&self, a: u32, e: u32) -> u32 {
        let mut r = a;
        for _ in 0..(e % self.m) {
            r = self.square(r);
        }
        r
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, (1u64 << self.m) - 2))
        }
    }

    /// Absolute trace to F_2.
    pub fn trace(&self, a: u32) -> u32 {
        // the mask is filled in by the constructor; before that, sum the conjugates
        if self.trace_mask != 0 {
            return (a & self.trace_mask).count_ones() & 1;
        }
        let mut t = 0u32;
        let mut x = a;
        for _ in 0..self.m {
            t ^= x;
            x = self.mul_slow(x, x);
        }
        t & 1
    }

    pub fn contains(&self, a: u32) -> bool {
        self.m == 32 || a < (1u32 << self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.order(), 3);
        assert_eq!(f3.modulus(), &[0, 1]);
        assert_eq!(f3.generator(), FieldElement(2));
        assert_eq!(f3.mult_order(f3.generator()), 2);
    }

    #[test]
    fn f9_and_f49() {
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(f9.order() - 1, 8);
        assert_eq!(f9.mult_order(f9.generator()), 8);

        let f49 = FiniteField::new(7, 2).unwrap();
        for a in f49.elements().skip(1) {
            assert_eq!(f49.pow(a, 48), f49.one());
        }
        // exhaustive order check: the generator is the first element of order 48
        let first = f49
            .elements()
            .skip(1)
            .find(|&a| f49.mult_order(a) == 48)
            .unwrap();
        assert_eq!(first, f49.generator());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            FiniteField::new(4, 1),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FiniteField::new(3, 0),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FiniteField::new(3, 40),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            FiniteField::with_guard(7, 3, 100),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn frobenius_fixes_everything() {
        for (p, k) in [(3, 1), (3, 2), (5, 2), (7, 2), (3, 3), (2, 4)] {
            let f = FiniteField::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.pow(a, f.order() as u64), a);
            }
        }
        // a field without log tables
        let big = FiniteField::new(257, 2).unwrap();
        for i in (0..big.order()).step_by(661).take(100) {
            let a = FieldElement(i);
            assert_eq!(big.pow(a, big.order() as u64), a);
        }
    }

    #[test]
    fn table_and_poly_paths_agree() {
        let f = FiniteField::new(3, 4).unwrap();
        for a in f.elements().step_by(7) {
            for b in f.elements().step_by(5) {
                assert_eq!(
                    f.mul(a, b),
                    if a.0 == 0 || b.0 == 0 {
                        f.zero()
                    } else {
                        f.mul_poly(a, b)
                    }
                );
            }
        }
    }

    #[test]
    fn quadratic_extension_generators() {
        let f3 = FiniteField::new(3, 1).unwrap();
        let e3 = QuadraticExtension::new(&f3).unwrap();
        assert_eq!(e3.ext.pow(e3.sigma, 4), e3.tau);
        assert_eq!(e3.ext.mult_order(e3.tau), 2);

        let f9 = FiniteField::new(3, 2).unwrap();
        let e9 = QuadraticExtension::new(&f9).unwrap();
        assert_eq!(e9.tau, e9.ext.pow(e9.sigma, 10));
        assert_eq!(e9.ext.pow(e9.tau, 8), e9.ext.one());
        assert_ne!(e9.ext.pow(e9.tau, 4), e9.ext.one());
        assert!(e9.restrict(e9.tau).is_some());
        assert_eq!(f9.mult_order(e9.tau_base), 8);

        let f7 = FiniteField::new(7, 1).unwrap();
        let e7 = QuadraticExtension::new(&f7).unwrap();
        assert_eq!(e7.ext.mult_order(e7.tau), 6);
    }

    #[test]
    fn embedding_is_a_ring_map() {
        for (p, k) in [(3, 1), (3, 2), (5, 1), (7, 1)] {
            let base = FiniteField::new(p, k).unwrap();
            let e = QuadraticExtension::new(&base).unwrap();
            for a in base.elements() {
                for b in base.elements() {
                    assert_eq!(e.embed(base.add(a, b)), e.ext.add(e.embed(a), e.embed(b)));
                    assert_eq!(e.embed(base.mul(a, b)), e.ext.mul(e.embed(a), e.embed(b)));
                }
            }
        }
    }

    #[test]
    fn binary_fields() {
        let f2 = BinaryField::f2();
        assert_eq!(f2.mul(1, 1), 1);
        assert_eq!(f2.trace(1), 1);
        let f4 = BinaryField::new(2).unwrap();
        assert_eq!(f4.modulus(), 0b111);
        for m in [2, 3, 5, 8, 17, 20] {
            let f = BinaryField::new(m).unwrap();
            let n = f.order() - 1;
            for a in [1u32, 2, 3, 5, 0x1234].map(|v| v & ((1 << m) - 1) | 1) {
                assert_eq!(f.pow(a, n), 1, "m={m} a={a}");
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.frob(a, m), a);
            }
            // trace is F_2-linear and onto
            let t: Vec<u32> = (0..m).map(|i| f.trace(1 << i)).collect();
            assert!(t.contains(&1));
        }
        assert!(BinaryField::new(33).is_err());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
