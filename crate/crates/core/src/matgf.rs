//! Dense matrices over a [`Field`].
//!
//! Entries are stored row-major as field elements. Products, row reduction
//! and membership tests over GF(2) go through [`BitMatrix`], which packs
//! rows into `u64` words.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{usage, Error, Result};
use crate::galois::{companion, Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct GfMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl core::fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl GfMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> GfMatrix {
        GfMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> GfMatrix {
        let mut m = GfMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_data(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<GfMatrix> {
        if data.len() != rows * cols {
            return Err(usage!("{} entries for a {rows}x{cols} matrix", data.len()));
        }
        if let Some(bad) = data.iter().find(|&&x| !field.contains(x)) {
            return Err(usage!("entry {bad} is not in {field:?}"));
        }
        Ok(GfMatrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<GfMatrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(usage!("ragged rows"));
        }
        GfMatrix::from_data(field, rows.len(), cols, rows.concat())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_slice(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        self.row_slice(i).to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> GfMatrix {
        let mut t = GfMatrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Entrywise `x ↦ x²` (conjugation over GF(4)).
    pub fn conjugate(&self) -> GfMatrix {
        let mut c = self.clone();
        for x in c.data.iter_mut() {
            *x = self.field.square(*x);
        }
        c
    }

    /// Conjugate transpose over GF(4).
    pub fn dagger(&self) -> Result<GfMatrix> {
        if self.field.m() != 2 {
            return Err(usage!("dagger is defined over GF(4), not {:?}", self.field));
        }
        Ok(self.conjugate().transpose())
    }

    fn same_field(&self, other: &GfMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(usage!("field mismatch: {:?} vs {:?}", self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(usage!("shape mismatch in sum"));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        Ok(GfMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: Elem) -> GfMatrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = self.field.mul(*x, c);
        }
        out
    }

    pub fn matmul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(usage!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            ));
        }
        if self.field.is_binary() {
            let a = BitMatrix::from_gf(self);
            let bt = BitMatrix::from_gf(&other.transpose());
            return Ok(a.mul_transpose(&bt).to_gf());
        }
        let f = &self.field;
        let mut out = GfMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.data[i * other.cols + j] ^= f.mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A·Bᵀ`, the shape of every containment check in this crate.
    pub fn mul_transpose(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(usage!("A·Bᵀ needs equal column counts"));
        }
        if self.field.is_binary() {
            return Ok(BitMatrix::from_gf(self).mul_transpose(&BitMatrix::from_gf(other)).to_gf());
        }
        self.matmul(&other.transpose())
    }

    /// `A·vᵀ` as a vector.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(usage!("vector of length {} against {} columns", v.len(), self.cols));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row_slice(i)
                    .iter()
                    .zip(v)
                    .fold(0, |s, (&a, &b)| s ^ f.mul(a, b))
            })
            .collect())
    }

    /// `v·A` as a vector.
    pub fn vec_mul(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(usage!("vector of length {} against {} rows", v.len(), self.rows));
        }
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row_slice(i)) {
                *o ^= f.mul(c, a);
            }
        }
        Ok(out)
    }

    /// Kronecker product: block `(i,j)` is `a_ij·B`.
    pub fn kron(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = GfMatrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(usage!("vstack needs equal column counts"));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(GfMatrix { field: self.field.clone(), rows: self.rows + other.rows, cols, data })
    }

    pub fn hstack(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(usage!("hstack needs equal row counts"));
        }
        let mut out = GfMatrix::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.data[i * out.cols..i * out.cols + self.cols].copy_from_slice(self.row_slice(i));
            out.data[i * out.cols + self.cols..(i + 1) * out.cols]
                .copy_from_slice(other.row_slice(i));
        }
        Ok(out)
    }

    pub fn select_rows(&self, idx: &[usize]) -> GfMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row_slice(i));
        }
        GfMatrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> GfMatrix {
        let mut out = GfMatrix::zeros(&self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.set(i, k, self.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (GfMatrix, Vec<usize>) {
        if self.field.is_binary() {
            let mut b = BitMatrix::from_gf(self);
            let piv = b.rref();
            return (b.to_gf(), piv);
        }
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let k = m.get(i, c);
                if i == r || k == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) ^ f.mul(k, m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.rows.min(self.cols)
    }

    /// Indices of a maximal independent subset of rows, greedily in order.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut space = RowSpace::empty(&self.field, self.cols);
        (0..self.rows).filter(|&i| space.insert(self.row_slice(i))).collect()
    }

    /// Rows spanning `{x : A·xᵀ = 0}`, one per free column.
    pub fn null_space(&self) -> GfMatrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = GfMatrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate() {
                // characteristic 2: −x = x
                out.set(k, pc, r.get(pi, fc));
            }
        }
        out
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<GfMatrix> {
        if self.rows != self.cols {
            return Err(usage!("inverse of a non-square {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let aug = self.hstack(&GfMatrix::identity(&self.field, n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Domain("matrix is singular".into()));
        }
        Ok(r.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }
}

/// `L` with `L·S = I` for invertible square `S`.
pub fn solve_left_inverse(s: &GfMatrix) -> Result<GfMatrix> {
    s.inverse().map_err(|e| match e {
        Error::Domain(_) => Error::Hypothesis(alloc::format!(
            "H·Hᵀ ({}x{}) is not of full rank",
            s.rows(),
            s.cols()
        )),
        other => other,
    })
}

/// Replace each entry `b` of an extension-field matrix by its companion
/// matrix `[b]`, or by `[b]ᵀ` when `transposed` is set.
pub fn companion_expand(h: &GfMatrix, transposed: bool) -> GfMatrix {
    let f = h.field();
    let rho = f.m() as usize;
    let mut out = GfMatrix::zeros(&Field::gf2(), h.rows() * rho, h.cols() * rho);
    for i in 0..h.rows() {
        for j in 0..h.cols() {
            let b = h.get(i, j);
            if b == 0 {
                continue;
            }
            let c = companion(f, b);
            for r in 0..rho {
                for s in 0..rho {
                    let v = if transposed { c.get(s, r) } else { c.get(r, s) };
                    out.set(i * rho + r, j * rho + s, v);
                }
            }
        }
    }
    out
}

/// Pack a 0/1 slice into words, bit `j % 64` of word `j / 64`.
pub fn pack_bits(v: &[Elem]) -> Vec<u64> {
    let mut w = vec![0u64; v.len().div_ceil(64)];
    for (j, &x) in v.iter().enumerate() {
        if x & 1 == 1 {
            w[j / 64] |= 1 << (j % 64);
        }
    }
    w
}

pub fn unpack_bits(w: &[u64], len: usize) -> Vec<Elem> {
    (0..len).map(|j| ((w[j / 64] >> (j % 64)) & 1) as Elem).collect()
}

/// Row-packed binary matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn from_gf(m: &GfMatrix) -> BitMatrix {
        let mut b = BitMatrix::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            let p = pack_bits(m.row_slice(i));
            b.data[i * b.words..i * b.words + p.len()].copy_from_slice(&p);
        }
        b
    }

    pub fn to_gf(&self) -> GfMatrix {
        let mut m = GfMatrix::zeros(&Field::gf2(), self.rows, self.cols);
        for i in 0..self.rows {
            let r = unpack_bits(self.row(i), self.cols);
            m.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(&r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    /// `A·Bᵀ` via AND-and-parity of packed rows.
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = BitMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            let a = self.row(i);
            for j in 0..other.rows {
                let b = other.row(j);
                let ones: u32 = a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum();
                if ones & 1 == 1 {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// `A·vᵀ` for a packed vector.
    pub fn mul_packed(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.rows.div_ceil(64).max(1)];
        for i in 0..self.rows {
            let ones: u32 = self.row(i).iter().zip(v).map(|(x, y)| (x & y).count_ones()).sum();
            if ones & 1 == 1 {
                out[i / 64] |= 1 << (i % 64);
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let w = self.words;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            if p != r {
                for k in 0..w {
                    self.data.swap(p * w + k, r * w + k);
                }
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    for k in 0..w {
                        self.data[i * w + k] ^= self.data[r * w + k];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// Incrementally built row space supporting membership tests.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: Field,
    cols: usize,
    /// Echelon basis, each row normalized at its pivot.
    basis: Vec<(usize, Vec<Elem>)>,
    /// Packed form of `basis` for GF(2).
    packed: Vec<(usize, Vec<u64>)>,
}

impl RowSpace {
    pub fn empty(field: &Field, cols: usize) -> RowSpace {
        RowSpace { field: field.clone(), cols, basis: Vec::new(), packed: Vec::new() }
    }

    pub fn new(m: &GfMatrix) -> RowSpace {
        let mut s = RowSpace::empty(m.field(), m.cols());
        for i in 0..m.rows() {
            s.insert(m.row_slice(i));
        }
        s
    }

    pub fn dim(&self) -> usize {
        if self.field.is_binary() {
            self.packed.len()
        } else {
            self.basis.len()
        }
    }

    fn reduce_packed(&self, v: &mut [u64]) {
        for (p, row) in &self.packed {
            if (v[p / 64] >> (p % 64)) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
    }

    fn reduce(&self, v: &mut [Elem]) {
        let f = &self.field;
        for (p, row) in &self.basis {
            let k = v[*p];
            if k != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a ^= f.mul(k, b);
                }
            }
        }
    }

    /// Packed membership test for GF(2) spaces.
    pub fn contains_packed(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce_packed(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.cols);
        if self.field.is_binary() {
            return self.contains_packed(&pack_bits(v));
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Add a row; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.cols);
        if self.field.is_binary() {
            let mut w = pack_bits(v);
            self.reduce_packed(&mut w);
            let Some(p) = (0..self.cols).find(|&j| (w[j / 64] >> (j % 64)) & 1 == 1) else {
                return false;
            };
            for (_, row) in self.packed.iter_mut() {
                if (row[p / 64] >> (p % 64)) & 1 == 1 {
                    for (a, b) in row.iter_mut().zip(&w) {
                        *a ^= b;
                    }
                }
            }
            self.packed.push((p, w));
            return true;
        }
        let f = &self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.basis.iter_mut() {
            let k = row[p];
            if k != 0 {
                for (a, &b) in row.iter_mut().zip(&w) {
                    *a ^= f.mul(k, b);
                }
            }
        }
        self.basis.push((p, w));
        true
    }
}
