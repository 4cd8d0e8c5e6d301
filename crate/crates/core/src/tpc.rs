//! Tensor product codes `C2 ⊗ C1` with the inner code over the base field
//! and the outer code over the degree-ρ1 extension.
//!
//! A word is `n2` subblocks of `n1` symbols. Subblock `j` has inner symbol
//! `σ_j ∈ GF(q^ρ1)`; the word is a codeword iff `(σ_1, …, σ_n2) ∈ C2`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{min_distance, weight, Distance, LinearCode};
use crate::error::{usage, Error, Result};
use crate::galois::{Elem, Extension};
use crate::matgf::GfMatrix;

/// Parity-check form of the tensor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `ψ(H2 ⊗ ψ⁻¹(H1))`.
    Psi,
    /// Blocks `[h2_ij]ᵀ·H1` with companion matrices.
    CompanionTransposed,
    /// Blocks `[h2_ij]·H1`.
    CompanionPlain,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Psi => "psi",
            Variant::CompanionTransposed => "companion_t",
            Variant::CompanionPlain => "companion",
        }
    }

    pub fn parse(s: &str) -> Result<Variant> {
        match s {
            "psi" => Ok(Variant::Psi),
            "companion_t" => Ok(Variant::CompanionTransposed),
            "companion" => Ok(Variant::CompanionPlain),
            _ => Err(usage!("unknown variant {s:?} (psi, companion_t, companion)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TensorProductCode {
    c1: LinearCode,
    c2: LinearCode,
    ext: Extension,
    variant: Variant,
    /// Inner matrix placed on the right of each block (H1, or L·H1).
    inner: GfMatrix,
    h_ext: Option<GfMatrix>,
    h_base: GfMatrix,
    code: LinearCode,
    /// `K`: σ_j = ψ⁻¹(K·v_j).
    k_mat: GfMatrix,
    /// `R`: outer syndrome S_i = ψ⁻¹(R·(block i of h_base·v)).
    r_mat: GfMatrix,
    /// Maps ψ(σ_j) to the H1-syndrome of subblock j.
    sigma_to_h1: GfMatrix,
}

/// Companion matrix of `a` over the base field: row `r` is ψ(α^r·a).
pub fn companion_over(ext: &Extension, a: Elem) -> GfMatrix {
    let rho = ext.degree();
    let f = ext.ext();
    let mut out = GfMatrix::zeros(ext.base(), rho, rho);
    let mut x = a;
    for r in 0..rho {
        for (c, v) in ext.psi(x).into_iter().enumerate() {
            out.set(r, c, v);
        }
        x = f.mul(x, f.alpha());
    }
    out
}

/// `G_ij = Tr(α^{i+j})` (trace down to the base field); its inverse `T`
/// satisfies `T·[a] = [a]ᵀ·T` for every companion matrix.
pub fn trace_gram(ext: &Extension) -> GfMatrix {
    let rho = ext.degree();
    let f = ext.ext();
    let bq = ext.base().q() as u64;
    let tr = |x: Elem| {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..rho {
            acc ^= y;
            y = f.pow(y, bq);
        }
        ext.psi(acc)[0]
    };
    let mut g = GfMatrix::zeros(ext.base(), rho, rho);
    for i in 0..rho {
        for j in 0..rho {
            g.set(i, j, tr(f.alpha_pow((i + j) as u64)));
        }
    }
    g
}

impl TensorProductCode {
    /// Build `C2 ⊗ C1` in the given form.
    pub fn new(c1: &LinearCode, c2: &LinearCode, variant: Variant) -> Result<TensorProductCode> {
        let inner = c1.h().clone();
        build(c1, c2, variant, inner, None)
    }

    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }
    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }
    pub fn extension(&self) -> &Extension {
        &self.ext
    }
    pub fn variant(&self) -> Variant {
        self.variant
    }
    pub fn inner_matrix(&self) -> &GfMatrix {
        &self.inner
    }
    /// Parity check over the extension (ψ and transposed-companion forms).
    pub fn h_ext(&self) -> Option<&GfMatrix> {
        self.h_ext.as_ref()
    }
    /// ρ1ρ2 × n1n2 parity check over the base field.
    pub fn h_base(&self) -> &GfMatrix {
        &self.h_base
    }
    pub fn code(&self) -> &LinearCode {
        &self.code
    }
    pub fn n1(&self) -> usize {
        self.c1.n()
    }
    pub fn n2(&self) -> usize {
        self.c2.n()
    }
    pub fn rho1(&self) -> usize {
        self.c1.rho()
    }
    pub fn rho2(&self) -> usize {
        self.c2.rho()
    }
    pub fn n(&self) -> usize {
        self.n1() * self.n2()
    }
    pub fn k(&self) -> usize {
        self.code.k()
    }

    /// Inner symbols σ_j, one per subblock.
    pub fn inner_syndromes(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.n() {
            return Err(usage!("word of length {} for a code of length {}", v.len(), self.n()));
        }
        let n1 = self.n1();
        (0..self.n2())
            .map(|j| self.ext.psi_inv(&self.k_mat.mul_vec(&v[j * n1..(j + 1) * n1])?))
            .collect()
    }

    /// Outer syndrome over the extension from a base-field syndrome `h_base·v`.
    pub fn outer_syndrome(&self, s: &[Elem]) -> Result<Vec<Elem>> {
        let rho1 = self.rho1();
        if s.len() != rho1 * self.rho2() {
            return Err(usage!("syndrome of length {} for {} checks", s.len(), rho1 * self.rho2()));
        }
        s.chunks(rho1.max(1))
            .take(self.rho2())
            .map(|blk| self.ext.psi_inv(&self.r_mat.mul_vec(blk)?))
            .collect()
    }

    /// H1-syndrome of a subblock whose inner symbol is `sigma`.
    pub fn h1_syndrome(&self, sigma: Elem) -> Vec<Elem> {
        self.sigma_to_h1.mul_vec(&self.ext.psi(sigma)).expect("square")
    }

    /// Membership checked through `h_base` and through the inner symbols.
    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        let by_base = self.code.contains(v)?;
        let sigma = self.inner_syndromes(v)?;
        let by_blocks = self.c2.contains(&sigma)?;
        if by_base != by_blocks {
            return Err(Error::Inconsistent(alloc::format!(
                "membership routes disagree (parity check {by_base}, inner symbols {by_blocks})"
            )));
        }
        Ok(by_base)
    }
}

fn build(
    c1: &LinearCode,
    c2: &LinearCode,
    variant: Variant,
    inner: GfMatrix,
    l: Option<&GfMatrix>,
) -> Result<TensorProductCode> {
    let ext = Extension::new(c1.field(), c2.field())?;
    let (rho1, n1) = (c1.rho(), c1.n());
    if ext.degree() != rho1 {
        return Err(usage!(
            "outer field has degree {} over the inner field but ρ1 = n1 − k1 = {rho1}",
            ext.degree()
        ));
    }
    let (rho2, n2) = (c2.rho(), c2.n());
    let base = c1.field().clone();
    let h2 = c2.h();
    let (h_ext, h_base) = match variant {
        Variant::Psi => {
            let row = ext.psi_inv_matrix(&inner)?;
            let he = h2.kron(&row)?;
            let hb = ext.psi_matrix(&he)?;
            (Some(he), hb)
        }
        Variant::CompanionTransposed | Variant::CompanionPlain => {
            let mut hb = GfMatrix::zeros(&base, rho1 * rho2, n1 * n2);
            for i in 0..rho2 {
                for j in 0..n2 {
                    let b = h2.get(i, j);
                    if b == 0 {
                        continue;
                    }
                    let mut comp = companion_over(&ext, b);
                    if variant == Variant::CompanionTransposed {
                        comp = comp.transpose();
                    }
                    let blk = comp.matmul(&inner)?;
                    for r in 0..rho1 {
                        for c in 0..n1 {
                            hb.set(i * rho1 + r, j * n1 + c, blk.get(r, c));
                        }
                    }
                }
            }
            let he = (variant == Variant::CompanionTransposed)
                .then(|| h2.kron(&ext.psi_inv_matrix(&inner).expect("shape")))
                .transpose()?;
            (he, hb)
        }
    };
    let ident = GfMatrix::identity(&base, rho1);
    let (k_mat, r_mat, sigma_to_h1) = match variant {
        Variant::Psi | Variant::CompanionTransposed => (inner.clone(), ident.clone(), ident),
        Variant::CompanionPlain => {
            let t = trace_gram(&ext).inverse()?;
            let w = match l {
                Some(l) => t.matmul(l)?,
                None => t.clone(),
            };
            (t.matmul(&inner)?, t, w.inverse()?)
        }
    };
    let code = LinearCode::from_parity(&h_base)
        .with_lower_bound(c1.distance().value.min(c2.distance().value));
    if code.rho() != rho1 * rho2 {
        return Err(Error::Inconsistent(alloc::format!(
            "tensor product check has rank {} instead of ρ1ρ2 = {}",
            code.rho(),
            rho1 * rho2
        )));
    }
    Ok(TensorProductCode {
        c1: c1.clone(),
        c2: c2.clone(),
        ext,
        variant,
        inner,
        h_ext,
        h_base,
        code,
        k_mat,
        r_mat,
        sigma_to_h1,
    })
}

/// Build `C2 ⊗ C1` in the given form.
pub fn tpc_build(c1: &LinearCode, c2: &LinearCode, variant: Variant) -> Result<TensorProductCode> {
    TensorProductCode::new(c1, c2, variant)
}

/// Membership through both routes; errors if they disagree.
pub fn tpc_membership(t: &TensorProductCode, v: &[Elem]) -> Result<bool> {
    t.contains(v)
}

/// The code with blocks `[h2_ij]·L·H1`, `L = (H1·H1ᵀ)⁻¹`.
pub fn build_cl(c1: &LinearCode, c2: &LinearCode) -> Result<TensorProductCode> {
    let h1 = c1.h();
    let s = h1.mul_transpose(h1)?;
    let l = s.inverse().map_err(|_| {
        Error::Hypothesis("H1·H1ᵀ is singular; the construction needs it to have full rank".into())
    })?;
    let inner = l.matmul(h1)?;
    build(c1, c2, Variant::CompanionPlain, inner, Some(&l))
}

/// Product of two codes over the same field: parity check `H1 ⊗ H2`.
pub fn kron_product(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    if c1.field() != c2.field() {
        return Err(usage!("same-field product needs both codes over one field"));
    }
    let h = c1.h().kron(c2.h())?;
    Ok(LinearCode::from_parity(&h).with_lower_bound(c1.distance().value.min(c2.distance().value)))
}

/// Distance of a tensor product code: the `min{d1, d2}` lower bound and
/// an explicit codeword as upper bound.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub lower: usize,
    pub upper: Option<usize>,
    pub witness: Option<Vec<Elem>>,
}

impl Certificate {
    pub fn distance(&self) -> Distance {
        match self.upper {
            Some(u) if u == self.lower => Distance::exact(u),
            _ => Distance::at_least(self.lower),
        }
    }
}

/// A codeword of `c` supported inside `support`, if one exists there.
pub fn codeword_on_support(c: &LinearCode, support: &[usize]) -> Option<Vec<Elem>> {
    let sub = c.h().select_cols(support);
    let ns = sub.null_space();
    if ns.rows() == 0 {
        return None;
    }
    let mut v = vec![0; c.n()];
    for (t, &j) in support.iter().enumerate() {
        v[j] = ns.get(0, t);
    }
    Some(v)
}

fn outer_min_codeword(c2: &LinearCode, budget: u64) -> (Distance, Option<Vec<Elem>>) {
    let d = c2.distance();
    if d.exact && d.value == c2.rho() + 1 && d.value <= c2.n() {
        let supp: Vec<usize> = (0..d.value).collect();
        if let Some(v) = codeword_on_support(c2, &supp).filter(|v| weight(v) == d.value) {
            return (d, Some(v));
        }
    }
    let r = min_distance(c2, budget);
    (r.distance, r.witness)
}

/// Lower bound `min{d1, d2}` plus the lightest witness found.
pub fn certify_distance(t: &TensorProductCode, budget: u64) -> Result<Certificate> {
    let (n1, n2) = (t.n1(), t.n2());
    let r1 = min_distance(&t.c1, budget);
    let d1 = if r1.distance.exact { r1.distance.value } else { r1.distance.value.max(t.c1.distance().value) };
    let (d2info, w2) = outer_min_codeword(&t.c2, budget);
    let d2 = d2info.value.max(t.c2.distance().value);
    let lower = d1.min(d2);
    let mut best: Option<Vec<Elem>> = None;
    let mut consider = |v: Vec<Elem>| {
        if best.as_ref().is_none_or(|b| weight(&v) < weight(b)) {
            best = Some(v);
        }
    };
    if let Some(w) = r1.witness.filter(|_| n2 > 0) {
        let mut v = vec![0; n1 * n2];
        v[..n1].copy_from_slice(&w);
        consider(v);
    }
    if let Some(s) = w2 {
        if let Some(v) = realize_outer(t, &s) {
            consider(v);
        }
    }
    if let Some(v) = &best {
        if !t.contains(v)? || weight(v) == 0 {
            return Err(Error::Inconsistent("distance witness is not a nonzero codeword".into()));
        }
    }
    Ok(Certificate { lower, upper: best.as_ref().map(|v| weight(v)), witness: best })
}

/// Lift an outer codeword `s` to a word whose inner symbols are `μ·s`,
/// using one or two symbols per subblock.
fn realize_outer(t: &TensorProductCode, s: &[Elem]) -> Option<Vec<Elem>> {
    let ext = &t.ext;
    let fe = ext.ext();
    let base = ext.base();
    let n1 = t.n1();
    let cols: Vec<Elem> = (0..n1)
        .map(|c| ext.psi_inv(&t.k_mat.col(c)).expect("ρ1 rows"))
        .collect();
    let mut single: BTreeMap<Elem, [(usize, Elem); 1]> = BTreeMap::new();
    for (c, &x) in cols.iter().enumerate() {
        for lam in 1..base.q() {
            single.entry(fe.mul(x, ext.embed(lam))).or_insert([(c, lam)]);
        }
    }
    let mut double: BTreeMap<Elem, [(usize, Elem); 2]> = BTreeMap::new();
    for (c, &x) in cols.iter().enumerate() {
        for (c2, &y) in cols.iter().enumerate().skip(c + 1) {
            for l1 in 1..base.q() {
                for l2 in 1..base.q() {
                    let v = fe.mul(x, ext.embed(l1)) ^ fe.mul(y, ext.embed(l2));
                    double.entry(v).or_insert([(c, l1), (c2, l2)]);
                }
            }
        }
    }
    let mut best: Option<Vec<Elem>> = None;
    for mu in 1..fe.q() {
        let mut v = vec![0; t.n()];
        let mut ok = true;
        for (j, &sj) in s.iter().enumerate() {
            if sj == 0 {
                continue;
            }
            let target = fe.mul(mu, sj);
            let picks: &[(usize, Elem)] = match single.get(&target) {
                Some(p) => p,
                None => match double.get(&target) {
                    Some(p) => p,
                    None => {
                        ok = false;
                        break;
                    }
                },
            };
            for &(c, lam) in picks {
                v[j * n1 + c] = lam;
            }
        }
        if ok && best.as_ref().is_none_or(|b| weight(&v) < weight(b)) {
            let full = weight(&v) == weight(s);
            best = Some(v);
            if full {
                break;
            }
        }
    }
    best
}
