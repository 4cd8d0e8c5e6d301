//! Arithmetic in GF(2^m), the coordinate map ψ between an extension field
//! and its base field, companion matrices, and polynomial helpers.
//!
//! Elements are stored as `u32` coefficient vectors in the polynomial basis
//! `{1, α, …, α^{m−1}}` with bit `i` holding the coefficient of `α^i`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{usage, Error, Result};
use crate::matgf::GfMatrix;

/// A field element in polynomial-basis bit form.
pub type Elem = u32;

/// Largest supported extension degree.
pub const MAX_M: u32 = 24;
const TABLE_MAX_M: u32 = 16;

struct Tables {
    exp: Vec<Elem>,
    log: Vec<u32>,
}

struct Inner {
    m: u32,
    /// Primitive polynomial including the `x^m` bit.
    poly: u32,
    tables: Option<Tables>,
}

/// The binary extension field GF(2^m) for a fixed primitive polynomial.
///
/// Cloning is cheap; the log/antilog tables are shared.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.m == other.0.m && self.0.poly == other.0.poly
    }
}
impl Eq for Field {}

impl core::fmt::Debug for Field {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "GF(2^{}; {:#x})", self.0.m, self.0.poly)
    }
}

fn clmul_reduce(mut a: u32, mut b: u32, poly: u32, m: u32) -> u32 {
    let top = 1u32 << m;
    let mut r = 0u32;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= poly;
        }
    }
    r
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn x_pow_mod(e: u64, poly: u32, m: u32) -> u32 {
    let mut base = clmul_reduce(1, 2, poly, m) & ((1 << m) - 1);
    if m == 1 {
        base = 1;
    }
    let mut acc = 1u32;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = clmul_reduce(acc, base, poly, m);
        }
        base = clmul_reduce(base, base, poly, m);
        e >>= 1;
    }
    acc
}

/// True when `poly` (with its `x^m` bit set) is primitive of degree `m`.
///
/// The order of `x` in GF(2)[x]/(poly) equals `2^m − 1` only when the
/// quotient ring is a field, so the order test alone decides primitivity.
pub fn is_primitive(poly: u32, m: u32) -> bool {
    if m == 0 || m > MAX_M || poly >> m != 1 || poly & 1 == 0 {
        return false;
    }
    let order = (1u64 << m) - 1;
    if x_pow_mod(order, poly, m) != 1 {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|p| x_pow_mod(order / p, poly, m) != 1)
}

/// Numerically smallest primitive polynomial of degree `m`.
pub fn default_primitive_poly(m: u32) -> Result<u32> {
    if m == 0 || m > MAX_M {
        return Err(usage!("extension degree {m} outside 1..={MAX_M}"));
    }
    let lo = 1u32 << m;
    (lo..lo << 1)
        .find(|&p| is_primitive(p, m))
        .ok_or_else(|| Error::Domain(alloc::format!("no primitive polynomial of degree {m}")))
}

impl Field {
    /// GF(2^m) with the default primitive polynomial.
    pub fn new(m: u32) -> Result<Field> {
        Field::with_poly(m, default_primitive_poly(m)?)
    }

    /// GF(2^m) with an explicit primitive polynomial (bit `i` = coefficient of `x^i`).
    pub fn with_poly(m: u32, poly: u32) -> Result<Field> {
        if m == 0 || m > MAX_M {
            return Err(usage!("extension degree {m} outside 1..={MAX_M}"));
        }
        if !is_primitive(poly, m) {
            return Err(usage!("{poly:#x} is not a primitive polynomial of degree {m}"));
        }
        let tables = (m <= TABLE_MAX_M).then(|| {
            let q = 1usize << m;
            let mut exp = vec![0; 2 * (q - 1)];
            let mut log = vec![0; q];
            let mut x: u32 = 1;
            for (i, slot) in exp.iter_mut().take(q - 1).enumerate() {
                *slot = x;
                log[x as usize] = i as u32;
                x <<= 1;
                if x & (1 << m) != 0 {
                    x ^= poly;
                }
            }
            for i in q - 1..2 * (q - 1) {
                exp[i] = exp[i - (q - 1)];
            }
            Tables { exp, log }
        });
        Ok(Field(Arc::new(Inner { m, poly, tables })))
    }

    /// Build from coefficient bits, low degree first, leading 1 included.
    pub fn from_coeffs(bits: &[u8]) -> Result<Field> {
        if bits.len() < 2 || bits.len() > MAX_M as usize + 1 {
            return Err(usage!("primitive polynomial must have degree 1..={MAX_M}"));
        }
        let mut poly = 0u32;
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(usage!("polynomial coefficient {b} is not a bit"));
            }
            poly |= (b as u32) << i;
        }
        Field::with_poly(bits.len() as u32 - 1, poly)
    }

    pub fn gf2() -> Field {
        Field::with_poly(1, 0b11).expect("x+1 is primitive")
    }

    pub fn gf4() -> Field {
        Field::with_poly(2, 0b111).expect("x^2+x+1 is primitive")
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    /// Field order `2^m`.
    pub fn q(&self) -> u32 {
        1 << self.0.m
    }

    pub fn poly(&self) -> u32 {
        self.0.poly
    }

    /// Coefficients of the primitive polynomial, low degree first.
    pub fn poly_coeffs(&self) -> Vec<u8> {
        (0..=self.0.m).map(|i| ((self.0.poly >> i) & 1) as u8).collect()
    }

    pub fn is_binary(&self) -> bool {
        self.0.m == 1
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.q()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => clmul_reduce(a, b, self.0.poly, self.0.m),
        }
    }

    #[inline]
    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let ord = (self.q() - 1) as u64;
            let l = (t.log[a as usize] as u64 * (e % ord)) % ord;
            return t.exp[l as usize];
        }
        let (mut base, mut e, mut acc) = (a, e, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::Domain("inverse of zero".into()));
        }
        if let Some(t) = &self.0.tables {
            let ord = self.q() - 1;
            return Ok(t.exp[((ord - t.log[a as usize]) % ord) as usize]);
        }
        Ok(self.pow(a, (self.q() - 2) as u64))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square root; Frobenius is a bijection in characteristic 2.
    pub fn sqrt(&self, a: Elem) -> Elem {
        let mut r = a;
        for _ in 1..self.0.m {
            r = self.square(r);
        }
        r
    }

    /// The primitive element α.
    pub fn alpha(&self) -> Elem {
        self.alpha_pow(1)
    }

    pub fn alpha_pow(&self, i: u64) -> Elem {
        let ord = (self.q() - 1) as u64;
        match &self.0.tables {
            Some(t) => t.exp[(i % ord) as usize],
            None => x_pow_mod(i % ord, self.0.poly, self.0.m),
        }
    }

    /// Discrete log base α; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            return Some(t.log[a as usize] as u64);
        }
        let mut x = 1;
        for i in 0..(self.q() - 1) as u64 {
            if x == a {
                return Some(i);
            }
            x = self.mul(x, 2);
        }
        None
    }

    /// Absolute trace to GF(2).
    pub fn trace(&self, a: Elem) -> Elem {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.0.m {
            acc ^= x;
            x = self.square(x);
        }
        acc
    }

    /// Conjugation `x ↦ x²`, the Frobenius of GF(4) over GF(2).
    pub fn conj(&self, a: Elem) -> Elem {
        self.square(a)
    }
}

/// Trace GF(4) → GF(2): `a + a²`.
pub fn trace_gf4(f: &Field, a: Elem) -> Result<Elem> {
    if f.m() != 2 {
        return Err(usage!("trace_gf4 needs GF(4), got {f:?}"));
    }
    Ok(a ^ f.square(a))
}

fn check_len(u: &[Elem], v: &[Elem]) -> Result<()> {
    if u.len() != v.len() {
        return Err(usage!("vector lengths differ: {} vs {}", u.len(), v.len()));
    }
    Ok(())
}

/// `Σ u_i v_i`.
pub fn euclidean(f: &Field, u: &[Elem], v: &[Elem]) -> Result<Elem> {
    check_len(u, v)?;
    Ok(u.iter().zip(v).fold(0, |s, (&a, &b)| s ^ f.mul(a, b)))
}

/// `Σ u_i v_i²` over GF(4).
pub fn hermitian(f: &Field, u: &[Elem], v: &[Elem]) -> Result<Elem> {
    check_len(u, v)?;
    if f.m() != 2 {
        return Err(usage!("Hermitian product needs GF(4)"));
    }
    Ok(u.iter().zip(v).fold(0, |s, (&a, &b)| s ^ f.mul(a, f.square(b))))
}

/// `Σ (u_i v_i² + u_i² v_i)` over GF(4); the result lies in GF(2).
pub fn trace_hermitian(f: &Field, u: &[Elem], v: &[Elem]) -> Result<Elem> {
    check_len(u, v)?;
    if f.m() != 2 {
        return Err(usage!("trace-Hermitian product needs GF(4)"));
    }
    Ok(u.iter().zip(v).fold(0, |s, (&a, &b)| {
        s ^ f.mul(a, f.square(b)) ^ f.mul(f.square(a), b)
    }))
}

/// Coordinates of `GF(2^{bρ})` over its subfield `GF(2^b)` in the basis
/// `{1, α, …, α^{ρ−1}}`, α the primitive element of the larger field.
#[derive(Clone)]
pub struct Extension {
    base: Field,
    ext: Field,
    degree: usize,
    /// Image of each base element inside `ext`.
    embed: Vec<Elem>,
    /// Packed base coordinates per ext element (only for non-binary bases).
    coords: Option<Arc<Vec<u32>>>,
}

impl core::fmt::Debug for Extension {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{:?} over {:?}", self.ext, self.base)
    }
}

impl Extension {
    pub fn new(base: &Field, ext: &Field) -> Result<Extension> {
        let (b, e) = (base.m(), ext.m());
        if e % b != 0 {
            return Err(usage!("GF(2^{e}) is not an extension of GF(2^{b})"));
        }
        let degree = (e / b) as usize;
        if b == 1 {
            return Ok(Extension {
                base: base.clone(),
                ext: ext.clone(),
                degree,
                embed: vec![0, 1],
                coords: None,
            });
        }
        if ext.q() > 1 << TABLE_MAX_M {
            return Err(usage!("coordinate table for {ext:?} over {base:?} is too large"));
        }
        // γ of order q−1 that is a root of the base field's primitive polynomial.
        let step = ((ext.q() - 1) / (base.q() - 1)) as u64;
        let coeffs = base.poly_coeffs();
        let gamma = (0..b)
            .map(|s| ext.pow(ext.alpha_pow(step), 1u64 << s))
            .find(|&g| {
                let mut acc = 0;
                let mut pw = 1;
                for &c in &coeffs {
                    if c == 1 {
                        acc ^= pw;
                    }
                    pw = ext.mul(pw, g);
                }
                acc == 0
            })
            .ok_or_else(|| Error::Inconsistent("no embedding of the base field".into()))?;
        let mut embed = vec![0; base.q() as usize];
        for a in 1..base.q() {
            embed[a as usize] = ext.pow(gamma, base.log(a).expect("nonzero"));
        }
        let mut coords = vec![u32::MAX; ext.q() as usize];
        let bq = base.q();
        for packed in 0..ext.q() {
            let mut val = 0;
            let mut apow = 1;
            for i in 0..degree {
                let a = (packed >> (i as u32 * b)) & (bq - 1);
                val ^= ext.mul(embed[a as usize], apow);
                apow = ext.mul(apow, ext.alpha());
            }
            coords[val as usize] = packed;
        }
        if coords.contains(&u32::MAX) {
            return Err(Error::Inconsistent("1, α, … is not a basis".into()));
        }
        Ok(Extension {
            base: base.clone(),
            ext: ext.clone(),
            degree,
            embed,
            coords: Some(Arc::new(coords)),
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    /// Extension degree ρ over the base field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Image of a base-field element in the extension.
    pub fn embed(&self, a: Elem) -> Elem {
        self.embed[a as usize]
    }

    /// ψ(β): the ρ base-field coordinates of β.
    pub fn psi(&self, beta: Elem) -> Vec<Elem> {
        let b = self.base.m();
        let mask = self.base.q() - 1;
        let packed = match &self.coords {
            None => beta,
            Some(c) => c[beta as usize],
        };
        (0..self.degree)
            .map(|i| (packed >> (i as u32 * b)) & mask)
            .collect()
    }

    /// ψ⁻¹: combine ρ base coordinates into one extension element.
    pub fn psi_inv(&self, a: &[Elem]) -> Result<Elem> {
        if a.len() != self.degree {
            return Err(usage!("ψ⁻¹ expects {} coordinates, got {}", self.degree, a.len()));
        }
        if self.coords.is_none() {
            return Ok(a.iter().enumerate().fold(0, |acc, (i, &x)| acc | (x & 1) << i));
        }
        let mut val = 0;
        let mut apow = 1;
        for &x in a {
            val ^= self.ext.mul(self.embed(x), apow);
            apow = self.ext.mul(apow, self.ext.alpha());
        }
        Ok(val)
    }

    /// Expand every entry of an extension-field matrix into a ρ-tall column.
    pub fn psi_matrix(&self, h: &GfMatrix) -> Result<GfMatrix> {
        if h.field() != &self.ext {
            return Err(usage!("ψ expects a matrix over {:?}", self.ext));
        }
        let rho = self.degree;
        let mut out = GfMatrix::zeros(&self.base, h.rows() * rho, h.cols());
        for i in 0..h.rows() {
            for j in 0..h.cols() {
                for (t, c) in self.psi(h.get(i, j)).into_iter().enumerate() {
                    out.set(i * rho + t, j, c);
                }
            }
        }
        Ok(out)
    }

    /// Pack each column of a ρ×n base-field matrix into one extension symbol.
    pub fn psi_inv_matrix(&self, h: &GfMatrix) -> Result<GfMatrix> {
        if h.field() != &self.base || h.rows() != self.degree {
            return Err(usage!(
                "ψ⁻¹ expects a {}-row matrix over {:?}",
                self.degree,
                self.base
            ));
        }
        let mut out = GfMatrix::zeros(&self.ext, 1, h.cols());
        for j in 0..h.cols() {
            out.set(0, j, self.psi_inv(&h.col(j))?);
        }
        Ok(out)
    }
}

/// Companion matrix `[a] = M^i` of `a = α^i`, with `[0] = 0`.
///
/// `M` has ones on the superdiagonal and the low coefficients of the
/// primitive polynomial in its last row. Row `r` of `[a]` is ψ(α^r·a), so
/// `[a]ᵀ·ψ(β) = ψ(a·β)`.
pub fn companion(f: &Field, a: Elem) -> GfMatrix {
    let m = f.m() as usize;
    let gf2 = Field::gf2();
    let mut out = GfMatrix::zeros(&gf2, m, m);
    let mut x = a;
    for r in 0..m {
        for c in 0..m {
            out.set(r, c, (x >> c) & 1);
        }
        x = f.mul(x, f.alpha());
    }
    out
}

/// Möbius function by trial factorization.
pub fn mobius(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let mut n = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of self-reciprocal irreducible binary polynomials of even degree `w = 2t`:
/// `(1/2t) Σ_{d | t, d odd} μ(d) 2^{t/d}`.
pub fn self_reciprocal_irreducible_count(w: u32) -> Result<u64> {
    if w < 2 || w % 2 == 1 || w > 62 {
        return Err(usage!("degree {w} must be even and in 2..=62"));
    }
    let t = (w / 2) as u64;
    let mut sum: i64 = 0;
    for d in (1..=t).filter(|d| t.is_multiple_of(*d) && d % 2 == 1) {
        sum += mobius(d) * (1i64 << (t / d));
    }
    Ok((sum / (2 * t as i64)) as u64)
}

/// All self-reciprocal irreducible binary polynomials of even degree `w`.
pub fn enumerate_self_reciprocal_irreducible(w: u32) -> Result<Vec<Poly>> {
    if w < 2 || w % 2 == 1 || w > 30 {
        return Err(usage!("degree {w} must be even and in 2..=30"));
    }
    let half = w / 2;
    let mut out = Vec::new();
    // Free coefficients are x^1..x^{w/2}; the rest mirror them.
    for free in 0u64..1 << half {
        let mut bits: u64 = 1 | 1 << w;
        for i in 0..half {
            if (free >> i) & 1 == 1 {
                bits |= 1 << (i + 1);
                bits |= 1 << (w - i - 1);
            }
        }
        if bin::is_irreducible(bits) {
            out.push(Poly::from_bits(bits));
        }
    }
    Ok(out)
}

/// Dense polynomials with coefficients in some [`Field`], low degree first.
///
/// Addition is XOR whatever the field, so only products and division need
/// the field passed in.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { coeffs: vec![1] }
    }

    pub fn monomial(c: Elem, deg: usize) -> Poly {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    /// Binary polynomial from bit `i` = coefficient of `x^i`.
    pub fn from_bits(bits: u64) -> Poly {
        Poly::new((0..64).map(|i| ((bits >> i) & 1) as Elem).collect())
    }

    /// Bit form of a binary polynomial of degree below 64.
    pub fn to_bits(&self) -> Result<u64> {
        if self.coeffs.len() > 64 || self.coeffs.iter().any(|&c| c > 1) {
            return Err(usage!("not a binary polynomial of degree < 64"));
        }
        Ok(self.coeffs.iter().enumerate().fold(0, |a, (i, &c)| a | (c as u64) << i))
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) ^ other.coeff(i)).collect())
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] ^= f.mul(a, b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, f: &Field, c: Elem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder.
    pub fn divrem(&self, f: &Field, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead_inv = f.inv(d.coeffs[dd])?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), Poly::new(r)));
        }
        let mut q = vec![0; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            let k = f.mul(c, lead_inv);
            q[i - dd] = k;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] ^= f.mul(k, dc);
            }
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.mul(acc, x) ^ c)
    }

    /// Formal derivative (characteristic 2: odd-degree terms survive).
    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| if i % 2 == 1 { c } else { 0 })
                .collect(),
        )
    }

    /// `x^{deg f} f(1/x)`.
    pub fn reciprocal(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(c)
    }

    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeff(0) != 0 && self.reciprocal() == *self
    }

    /// Irreducibility over GF(2) (binary coefficients, degree below 64).
    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(bin::is_irreducible(self.to_bits()?))
    }

    /// Smallest ρ with `f | x^ρ + 1`, for binary `f` with `f(0) ≠ 0`.
    pub fn period(&self) -> Result<u64> {
        let bits = self.to_bits()?;
        if bits & 1 == 0 {
            return Err(Error::Domain("period needs a nonzero constant term".into()));
        }
        bin::period(bits)
    }
}

/// Bit-packed GF(2)[x] arithmetic for degrees below 64.
pub(crate) mod bin {
    use crate::error::{Error, Result};

    pub fn deg(a: u64) -> i32 {
        63 - a.leading_zeros() as i32
    }

    pub fn rem(mut a: u128, p: u64) -> u64 {
        let dp = deg(p);
        let p = p as u128;
        while a != 0 && (127 - a.leading_zeros() as i32) >= dp {
            let s = (127 - a.leading_zeros() as i32) - dp;
            a ^= p << s;
        }
        a as u64
    }

    pub fn mul(a: u64, b: u64) -> u128 {
        let mut r = 0u128;
        for i in 0..64 {
            if (b >> i) & 1 == 1 {
                r ^= (a as u128) << i;
            }
        }
        r
    }

    pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
        rem(mul(a, b), p)
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let r = rem(a as u128, b);
            a = b;
            b = r;
        }
        a
    }

    /// `x^{2^k} mod p`.
    fn x_pow_2k(k: u32, p: u64) -> u64 {
        let mut x = rem(2, p);
        for _ in 0..k {
            x = mulmod(x, x, p);
        }
        x
    }

    /// Rabin's test.
    pub fn is_irreducible(p: u64) -> bool {
        let d = deg(p);
        if d < 1 {
            return false;
        }
        let d = d as u32;
        let x = rem(2, p);
        if x_pow_2k(d, p) != x {
            return false;
        }
        let mut n = d;
        let mut q = 2;
        let mut primes = alloc::vec::Vec::new();
        while q * q <= n {
            if n.is_multiple_of(q) {
                primes.push(q);
                while n.is_multiple_of(q) {
                    n /= q;
                }
            }
            q += 1;
        }
        if n > 1 {
            primes.push(n);
        }
        primes
            .into_iter()
            .all(|q| gcd(p, x_pow_2k(d / q, p) ^ x) == 1)
    }

    pub fn period(p: u64) -> Result<u64> {
        let d = deg(p);
        if d == 0 {
            return Ok(1);
        }
        if d > 32 {
            return Err(Error::Domain("period search limited to degree 32".into()));
        }
        let x = rem(2, p);
        let mut acc = x;
        let bound = 1u64 << d;
        for rho in 1..=bound {
            if acc == 1 {
                return Ok(rho);
            }
            acc = mulmod(acc, x, p);
        }
        Err(Error::Domain("polynomial has no period".into()))
    }
}
