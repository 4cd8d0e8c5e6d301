//! Component-code families: repetition, binary cyclic and BCH codes,
//! Reed–Solomon codes (plain, extended, generalized), Fire codes.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::LinearCode;
use crate::error::{usage, Error, Result};
use crate::galois::{Elem, Extension, Field, Poly, MAX_M};
use crate::matgf::GfMatrix;

/// `[n, 1, n]` binary repetition code; parity rows `e_i + e_{i+1}`.
pub fn repetition(n: usize) -> Result<LinearCode> {
    if n < 2 {
        return Err(usage!("repetition code needs n ≥ 2"));
    }
    let f = Field::gf2();
    let mut h = GfMatrix::zeros(&f, n - 1, n);
    for i in 0..n - 1 {
        h.set(i, i, 1);
        h.set(i, i + 1, 1);
    }
    Ok(LinearCode::from_parity(&h).with_distance(n))
}

/// Orbits of `Z_n` under multiplication by `q`, each sorted by first visit.
pub fn cyclotomic_cosets(n: usize, q: usize) -> Result<Vec<Vec<usize>>> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(usage!("cyclotomic cosets need gcd(n, q) = 1"));
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            coset.push(x);
            x = x * q % n;
        }
        out.push(coset);
    }
    Ok(out)
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Multiplicative order of 2 modulo odd `n`.
fn ord2(n: usize) -> usize {
    if n == 1 {
        return 1;
    }
    let mut x = 2 % n;
    let mut s = 1;
    while x != 1 {
        x = x * 2 % n;
        s += 1;
    }
    s
}

/// Field holding the n-th roots of unity and a primitive one among them.
fn root_field(n: usize) -> Option<(Field, Elem)> {
    let s = ord2(n);
    if s as u32 > MAX_M {
        return None;
    }
    let f = Field::new(s as u32).ok()?;
    let beta = f.alpha_pow(((f.q() as u64) - 1) / n as u64);
    Some((f, beta))
}

/// Binary cyclic code of odd length.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    code: LinearCode,
    n: usize,
    g: Poly,
    /// Exponents of the roots of `g`, when the splitting field is in range.
    z: Option<Vec<usize>>,
}

impl CyclicCode {
    pub fn code(&self) -> &LinearCode {
        &self.code
    }
    pub fn into_code(self) -> LinearCode {
        self.code
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn generator_poly(&self) -> &Poly {
        &self.g
    }
    pub fn defining_set(&self) -> Option<&[usize]> {
        self.z.as_deref()
    }
}

fn x_n_minus_1(n: usize) -> Poly {
    Poly::monomial(1, n).add(&Poly::one())
}

/// Length of the longest run of consecutive exponents (cyclically) in `z`.
fn longest_run(z: &[usize], n: usize) -> usize {
    let set: BTreeSet<usize> = z.iter().copied().collect();
    if set.len() == n {
        return n;
    }
    let mut best = 0;
    for &s in &set {
        if set.contains(&((s + n - 1) % n)) {
            continue;
        }
        let mut len = 0;
        while set.contains(&((s + len) % n)) {
            len += 1;
        }
        best = best.max(len);
    }
    best
}

/// Cyclic code generated by `g`, which must divide `x^n − 1`.
///
/// The parity check has rows `x^i·h̃(x)`, `i = 0..deg g`, where `h̃` is the
/// reciprocal of `h = (x^n − 1)/g`.
pub fn cyclic_from_generator(n: usize, g: &Poly) -> Result<CyclicCode> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(usage!("cyclic codes here need odd length, got {n}"));
    }
    if g.coeffs().iter().any(|&c| c > 1) {
        return Err(usage!("generator polynomial must be binary"));
    }
    let f2 = Field::gf2();
    let (h, r) = x_n_minus_1(n).divrem(&f2, g)?;
    if !r.is_zero() {
        return Err(usage!("g(x) does not divide x^{n} − 1"));
    }
    let rho = g.degree().expect("divides a nonzero polynomial");
    let hr = h.reciprocal();
    let mut hm = GfMatrix::zeros(&f2, rho, n);
    for i in 0..rho {
        for (j, &c) in hr.coeffs().iter().enumerate() {
            hm.set(i, i + j, c);
        }
    }
    let z = root_field(n).map(|(f, beta)| {
        let gf = Poly::new(g.coeffs().to_vec());
        (0..n).filter(|&i| gf.eval(&f, f.pow(beta, i as u64)) == 0).collect::<Vec<_>>()
    });
    let mut code = LinearCode::from_parity(&hm);
    if let Some(z) = &z {
        code = code.with_lower_bound(longest_run(z, n) + 1);
    }
    Ok(CyclicCode { code, n, g: g.clone(), z })
}

/// Cyclic code whose generator has roots `β^i`, `i ∈ z`, β a primitive n-th root of unity.
pub fn cyclic_from_defining_set(n: usize, z: &[usize]) -> Result<CyclicCode> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(usage!("cyclic codes here need odd length, got {n}"));
    }
    let set: BTreeSet<usize> = z.iter().copied().collect();
    if let Some(&bad) = set.iter().find(|&&i| i >= n || !set.contains(&(2 * i % n))) {
        return Err(usage!("defining set is not a union of cyclotomic cosets (at {bad})"));
    }
    let (f, beta) =
        root_field(n).ok_or_else(|| usage!("splitting field of x^{n} − 1 is too large"))?;
    let mut g = Poly::one();
    for &i in &set {
        g = g.mul(&f, &Poly::new(vec![f.pow(beta, i as u64), 1]));
    }
    if g.coeffs().iter().any(|&c| c > 1) {
        return Err(Error::Inconsistent("generator from a closed set is not binary".into()));
    }
    cyclic_from_generator(n, &g)
}

/// Cyclic repetition code, generator `(x^n − 1)/(x − 1)`.
pub fn repetition_cyclic(n: usize) -> Result<CyclicCode> {
    let (g, _) = x_n_minus_1(n).divrem(&Field::gf2(), &Poly::from_bits(0b11))?;
    let mut c = cyclic_from_generator(n, &g)?;
    c.code = c.code.with_distance(n);
    Ok(c)
}

/// Binary BCH code of length `2^m − 1` with defining set the cosets of
/// `b, b+1, …, b+δ−2`.
pub fn bch(m: u32, b: usize, delta: usize) -> Result<CyclicCode> {
    if !(2..=MAX_M).contains(&m) {
        return Err(usage!("BCH needs 2 ≤ m ≤ {MAX_M}"));
    }
    let n = (1usize << m) - 1;
    if delta < 2 || delta > n {
        return Err(usage!("design distance {delta} outside 2..={n}"));
    }
    let mut z = BTreeSet::new();
    for i in b..b + delta - 1 {
        let mut x = i % n;
        while z.insert(x) {
            x = 2 * x % n;
        }
    }
    let z: Vec<usize> = z.into_iter().collect();
    let mut c = cyclic_from_defining_set(n, &z)?;
    c.code = c.code.with_lower_bound(delta);
    Ok(c)
}

/// Result of checking Euclidean dual containment of a BCH code two ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualContainment {
    /// Design-distance criterion for narrow-sense primitive codes.
    pub predicted: Option<bool>,
    /// `H·Hᵀ = 0` on the parity check.
    pub verified: bool,
}

impl DualContainment {
    pub fn agrees(&self) -> bool {
        self.predicted.is_none_or(|p| p == self.verified)
    }
}

/// Dual containment of a primitive binary BCH code built by [`bch`].
///
/// A narrow-sense code of length `2^m − 1` is predicted dual-containing
/// exactly when `δ ≤ 2^⌈m/2⌉ − 1`.
pub fn bch_dual_containing_check(m: u32, b: usize, delta: usize) -> Result<DualContainment> {
    let c = bch(m, b, delta)?;
    let predicted = (b == 1).then(|| delta < (1usize << m.div_ceil(2)));
    Ok(DualContainment { predicted, verified: c.code.is_dual_containing() })
}

/// Reed–Solomon column type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RsColumn {
    /// Evaluation at a nonzero point `x`: `(x, x², …, x^r)ᵀ`.
    Point(Elem),
    /// The point zero: `(1, 0, …, 0)ᵀ`.
    Zero,
    /// The point at infinity: `(0, …, 0, 1)ᵀ`.
    Infinity,
}

/// Generalized Reed–Solomon code with `r = n − k` check rows.
#[derive(Clone, Debug)]
pub struct ReedSolomon {
    code: LinearCode,
    columns: Vec<RsColumn>,
    multipliers: Vec<Elem>,
}

impl ReedSolomon {
    pub fn code(&self) -> &LinearCode {
        &self.code
    }
    pub fn into_code(self) -> LinearCode {
        self.code
    }
    pub fn columns(&self) -> &[RsColumn] {
        &self.columns
    }
    pub fn multipliers(&self) -> &[Elem] {
        &self.multipliers
    }
    /// Number of check rows.
    pub fn r(&self) -> usize {
        self.code.rho()
    }
}

fn rs_columns(f: &Field, n: usize) -> Result<Vec<RsColumn>> {
    let q = f.q() as usize;
    if n == 0 || n > q + 1 {
        return Err(usage!("Reed–Solomon length {n} outside 1..={} over GF({q})", q + 1));
    }
    let mut cols: Vec<RsColumn>;
    if n < q && (q - 1).is_multiple_of(n) {
        let beta = f.alpha_pow(((q - 1) / n) as u64);
        cols = (1..=n).map(|j| RsColumn::Point(f.pow(beta, j as u64))).collect();
    } else if n < q - 1 {
        cols = (1..=n).map(|j| RsColumn::Point(f.alpha_pow(j as u64))).collect();
    } else {
        cols = (1..q).map(|j| RsColumn::Point(f.alpha_pow(j as u64))).collect();
        if n == q + 1 {
            cols.push(RsColumn::Zero);
        }
        if n >= q {
            cols.push(RsColumn::Infinity);
        }
    }
    Ok(cols)
}

fn column_vector(f: &Field, c: RsColumn, r: usize) -> Vec<Elem> {
    let mut v = vec![0; r];
    match c {
        RsColumn::Point(x) => {
            let mut p = x;
            for e in v.iter_mut() {
                *e = p;
                p = f.mul(p, x);
            }
        }
        RsColumn::Zero => v[0] = 1,
        RsColumn::Infinity => v[r - 1] = 1,
    }
    v
}

fn rs_parity(f: &Field, cols: &[RsColumn], mult: &[Elem], r: usize) -> GfMatrix {
    let mut h = GfMatrix::zeros(f, r, cols.len());
    if r == 0 {
        return h;
    }
    for (j, (&c, &v)) in cols.iter().zip(mult).enumerate() {
        for (i, x) in column_vector(f, c, r).into_iter().enumerate() {
            h.set(i, j, f.mul(x, v));
        }
    }
    h
}

/// `[n, k, n−k+1]` Reed–Solomon code over `f`.
///
/// Evaluation points are the powers `β^1, …, β^n` of an element of order
/// `n` when `n | q − 1`, else `α^1, …, α^n`; length `q` appends the point
/// at infinity, length `q + 1` also the point zero before it.
pub fn reed_solomon(f: &Field, n: usize, k: usize) -> Result<ReedSolomon> {
    if k == 0 || k > n {
        return Err(usage!("Reed–Solomon dimension {k} outside 1..={n}"));
    }
    let columns = rs_columns(f, n)?;
    let multipliers = vec![1; n];
    let h = rs_parity(f, &columns, &multipliers, n - k);
    let code = LinearCode::from_parity(&h).with_distance(n - k + 1);
    Ok(ReedSolomon { code, columns, multipliers })
}

/// Euclidean dual-containing `[n, n−d+1, d]` MDS code.
///
/// Uses the Reed–Solomon code of [`reed_solomon`] when it is already
/// dual-containing, otherwise rescales its columns: the squared multipliers
/// must lie in the null space of the pairwise row products.
pub fn mds_dual_containing(f: &Field, n: usize, d: usize) -> Result<ReedSolomon> {
    if d == 0 || d > n / 2 + 1 {
        return Err(usage!("a dual-containing MDS code of length {n} needs 1 ≤ d ≤ {}", n / 2 + 1));
    }
    let rs = reed_solomon(f, n, n - d + 1)?;
    if rs.code.is_dual_containing() {
        return Ok(rs);
    }
    let r = d - 1;
    let vecs: Vec<Vec<Elem>> = rs.columns.iter().map(|&c| column_vector(f, c, r)).collect();
    let mut a = GfMatrix::zeros(f, r * (r + 1) / 2, n);
    let mut row = 0;
    for i in 0..r {
        for i2 in i..r {
            for (j, v) in vecs.iter().enumerate() {
                a.set(row, j, f.mul(v[i], v[i2]));
            }
            row += 1;
        }
    }
    let weights = nowhere_zero(&a.null_space()).ok_or_else(|| {
        Error::Domain(format!(
            "no dual-containing generalized Reed–Solomon code of length {n}, distance {d} over GF({})",
            f.q()
        ))
    })?;
    let multipliers: Vec<Elem> = weights.iter().map(|&w| f.sqrt(w)).collect();
    let h = rs_parity(f, &rs.columns, &multipliers, r);
    let code = LinearCode::from_parity(&h).with_distance(d);
    if !code.is_dual_containing() {
        return Err(Error::Inconsistent("rescaled Reed–Solomon code is not dual-containing".into()));
    }
    Ok(ReedSolomon { code, columns: rs.columns, multipliers })
}

/// A vector with no zero entry in the row space of `basis`, if one is found.
fn nowhere_zero(basis: &GfMatrix) -> Option<Vec<Elem>> {
    let f = basis.field();
    let t = basis.rows();
    if t == 0 {
        return None;
    }
    let combine = |coef: &[Elem]| -> Option<Vec<Elem>> {
        let v = basis.vec_mul(coef).ok()?;
        v.iter().all(|&x| x != 0).then_some(v)
    };
    let bits = f.m() as usize * t;
    if bits <= 16 {
        for packed in 1u64..(1 << bits) {
            let coef: Vec<Elem> = (0..t)
                .map(|i| ((packed >> (i * f.m() as usize)) as Elem) & (f.q() - 1))
                .collect();
            if let Some(v) = combine(&coef) {
                return Some(v);
            }
        }
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..4096 {
        let coef: Vec<Elem> = (0..t).map(|_| rng.next_u32() & (f.q() - 1)).collect();
        if let Some(v) = combine(&coef) {
            return Some(v);
        }
    }
    None
}

/// Reversibility of a cyclic code: `g` self-reciprocal, cross-checked
/// against `Z = −Z (mod n)` when the defining set is known.
pub fn is_reversible(c: &CyclicCode) -> Result<bool> {
    let by_poly = c.g.is_self_reciprocal();
    if let Some(z) = &c.z {
        let set: BTreeSet<usize> = z.iter().copied().collect();
        let by_set = set.iter().all(|&i| set.contains(&((c.n - i) % c.n)));
        if by_set != by_poly {
            return Err(Error::Inconsistent(format!(
                "reversibility disagrees: self-reciprocal {by_poly}, symmetric defining set {by_set}"
            )));
        }
    }
    Ok(by_poly)
}

/// Parameters of a Fire code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FireSpec {
    pub b_poly: Poly,
    pub l: usize,
    /// Period of `b_poly`.
    pub rho_period: usize,
    /// Degree of `b_poly`.
    pub w: usize,
    pub n: usize,
}

#[derive(Clone, Debug)]
pub struct FireCode {
    pub cyclic: CyclicCode,
    pub spec: FireSpec,
}

/// Fire code with generator `(x^{2l−1} + 1)·b(x)` and length `lcm(2l−1, period(b))`.
pub fn fire_code(b: &Poly, l: usize) -> Result<FireCode> {
    let w = b.degree().ok_or_else(|| usage!("Fire code: b(x) is zero"))?;
    if w == 0 || !b.is_irreducible()? {
        return Err(usage!("Fire code: b(x) must be irreducible of positive degree"));
    }
    if l == 0 || l > w {
        return Err(usage!("Fire code: burst length l = {l} must satisfy 1 ≤ l ≤ deg b = {w}"));
    }
    let rho = b.period()? as usize;
    let span = 2 * l - 1;
    if span.is_multiple_of(rho) {
        return Err(usage!("Fire code: 2l − 1 = {span} is divisible by the period {rho} of b(x)"));
    }
    let n = lcm(span, rho);
    let g = x_n_minus_1(span).mul(&Field::gf2(), b);
    let cyclic = cyclic_from_generator(n, &g)?;
    Ok(FireCode { cyclic, spec: FireSpec { b_poly: b.clone(), l, rho_period: rho, w, n } })
}

/// Subfield subcode: parity check `ψ(H)` reduced to full rank.
pub fn subfield_subcode(ext: &Extension, c: &LinearCode) -> Result<LinearCode> {
    let h = ext.psi_matrix(c.h())?;
    Ok(LinearCode::from_parity(&h).with_lower_bound(c.distance().value.min(c.n())))
}
