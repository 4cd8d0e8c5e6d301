//! Stabilizer codes in binary symplectic form and the tensor-product
//! quantum constructions.
//!
//! A row `(a|b)` of a stabilizer matrix stands for `X^a Z^b`. X-type rows
//! `(h|0)` detect Z errors and Z-type rows `(0|h)` detect X errors.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{min_distance, min_weight_difference, Distance, LinearCode, DEFAULT_BUDGET, K_MAX};
use crate::error::{hypothesis, usage, Error, Result};
use crate::families::{
    is_reversible, mds_dual_containing, reed_solomon, repetition, FireCode, ReedSolomon,
};
use crate::galois::{Elem, Extension, Field};
use crate::matgf::{BitMatrix, GfMatrix, RowSpace};
use crate::tpc::{build_cl, certify_distance, kron_product, tpc_build, TensorProductCode, Variant};

/// Whether no nonzero stabilizer element is lighter than the distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Purity {
    /// Checked by computing the stabilizer's minimum weight.
    Verified,
    /// Follows from the construction but too large to check here.
    Asserted,
    /// Some stabilizer element is lighter than the distance.
    Impure,
    Unknown,
}

impl Purity {
    pub fn name(&self) -> &'static str {
        match self {
            Purity::Verified => "verified",
            Purity::Asserted => "asserted",
            Purity::Impure => "impure",
            Purity::Unknown => "unknown",
        }
    }

    pub fn parse(s: &str) -> Result<Purity> {
        match s {
            "verified" => Ok(Purity::Verified),
            "asserted" => Ok(Purity::Asserted),
            "impure" => Ok(Purity::Impure),
            "unknown" => Ok(Purity::Unknown),
            _ => Err(usage!("unknown purity {s:?}")),
        }
    }
}

/// Construction that produced a stabilizer code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Css,
    Hermitian,
    /// Dual-containing tensor product code through CSS or Hermitian.
    TensorDualContaining,
    /// Pair of companion-form tensor product codes `C`, `C_L`.
    TensorReversible,
    RepetitionBurst,
    FireBurst,
    SelfDualSquare,
    SelfDualMds,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Css => "css",
            Provenance::Hermitian => "hermitian",
            Provenance::TensorDualContaining => "tensor-dual-containing",
            Provenance::TensorReversible => "tensor-reversible",
            Provenance::RepetitionBurst => "repetition-burst",
            Provenance::FireBurst => "fire-burst",
            Provenance::SelfDualSquare => "self-dual-square",
            Provenance::SelfDualMds => "self-dual-mds",
        }
    }

    pub fn parse(s: &str) -> Result<Provenance> {
        [
            Provenance::Css,
            Provenance::Hermitian,
            Provenance::TensorDualContaining,
            Provenance::TensorReversible,
            Provenance::RepetitionBurst,
            Provenance::FireBurst,
            Provenance::SelfDualSquare,
            Provenance::SelfDualMds,
        ]
        .into_iter()
        .find(|p| p.name() == s)
        .ok_or_else(|| usage!("unknown provenance {s:?}"))
    }
}

/// Claimed burst correction: up to `t` bursts of length ≤ `l`, one per subblock.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BurstCapability {
    pub l: usize,
    pub t: usize,
    pub n1: usize,
}

/// X-type and Z-type check rows of a CSS code.
#[derive(Clone, Debug)]
pub struct CssParts {
    pub hx: GfMatrix,
    pub hz: GfMatrix,
}

/// Classical tensor product codes decoding each error component.
#[derive(Clone, Debug)]
pub struct TensorSides {
    /// Parity check equals `hz`; corrects the X part `a`.
    pub x_side: TensorProductCode,
    /// Parity check equals `hx`; corrects the Z part `b`.
    pub z_side: TensorProductCode,
}

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    /// `(n−k) × 2n` binary matrix `(a|b)`.
    pub stab: GfMatrix,
    pub pure: Purity,
    pub provenance: Provenance,
    pub css: Option<CssParts>,
    pub sides: Option<Box<TensorSides>>,
    pub burst: Option<BurstCapability>,
}

/// Symplectic products `A·B'ᵀ + B·A'ᵀ` of all row pairs vanish.
pub fn symplectic_commute(stab: &GfMatrix) -> bool {
    let n2 = stab.cols();
    if !n2.is_multiple_of(2) || !stab.field().is_binary() {
        return false;
    }
    let n = n2 / 2;
    let a = BitMatrix::from_gf(&stab.select_cols(&(0..n).collect::<Vec<_>>()));
    let b = BitMatrix::from_gf(&stab.select_cols(&(n..n2).collect::<Vec<_>>()));
    let ab = a.mul_transpose(&b);
    let ba = b.mul_transpose(&a);
    (0..stab.rows()).all(|i| ab.row(i).iter().zip(ba.row(i)).all(|(x, y)| x == y))
}

/// Bit and phase error classes: the `a` and `b` projections.
pub fn classical_error_classes(
    errors: &[(Vec<Elem>, Vec<Elem>)],
) -> (Vec<Vec<Elem>>, Vec<Vec<Elem>>) {
    let mut ex: Vec<Vec<Elem>> = Vec::new();
    let mut ez: Vec<Vec<Elem>> = Vec::new();
    for (a, b) in errors {
        if !ex.contains(a) {
            ex.push(a.clone());
        }
        if !ez.contains(b) {
            ez.push(b.clone());
        }
    }
    (ex, ez)
}

fn enumerable(c: &LinearCode) -> bool {
    let bits = c.field().m() as usize * c.k();
    c.k() <= K_MAX && bits < 63 && (1u64 << bits) <= DEFAULT_BUDGET
}

/// Lower bound and optional light codeword supplied by a construction.
struct Hint {
    lower: usize,
    witness: Option<Vec<Elem>>,
}

/// `min wt(C \ span(stab))`, exact where it can be settled.
fn side_distance(c: &LinearCode, stab: &GfMatrix, hint: Option<&Hint>) -> Result<Distance> {
    if enumerable(c) {
        let d = LinearCode::from_generator(stab);
        return Ok(match min_weight_difference(c, &d, DEFAULT_BUDGET)? {
            Some((w, _)) => Distance::exact(w),
            None => Distance::infinite(),
        });
    }
    let span = RowSpace::new(stab);
    let (lower, witness) = match hint {
        Some(h) => (h.lower, h.witness.clone()),
        None => {
            let r = min_distance(c, DEFAULT_BUDGET);
            (r.distance.value, r.witness.filter(|_| r.distance.exact))
        }
    };
    if let Some(w) = witness {
        let wt = w.iter().filter(|&&x| x != 0).count();
        if wt == lower && c.contains(&w)? && !span.contains(&w) {
            return Ok(Distance::exact(lower));
        }
    }
    Ok(Distance::at_least(lower))
}

fn combine(x: Distance, z: Distance) -> Distance {
    let (lo, hi) = if x.value <= z.value { (x, z) } else { (z, x) };
    Distance { value: lo.value, exact: lo.exact && (hi.exact || hi.value >= lo.value) }
}

/// Minimum weight of the nonzero words spanned by `rows`, if computable.
fn span_min_weight(rows: &GfMatrix) -> Option<usize> {
    let c = LinearCode::from_generator(rows);
    if c.k() == 0 {
        return Some(usize::MAX);
    }
    enumerable(&c).then(|| min_distance(&c, DEFAULT_BUDGET).distance.value)
}

fn purity(stab_parts: &[&GfMatrix], d: Distance, fallback: Purity) -> Purity {
    let mut least = usize::MAX;
    for p in stab_parts {
        match span_min_weight(p) {
            Some(w) => least = least.min(w),
            None => return fallback,
        }
    }
    if !d.exact {
        return if least >= d.value { fallback } else { Purity::Unknown };
    }
    if least >= d.value {
        Purity::Verified
    } else {
        Purity::Impure
    }
}

fn css_from_checks(
    hx: &GfMatrix,
    hz: &GfMatrix,
    hint: Option<Hint>,
    fallback: Purity,
    provenance: Provenance,
) -> Result<StabilizerCode> {
    let f = hx.field();
    if !f.is_binary() || hz.field() != f || hx.cols() != hz.cols() {
        return Err(usage!("CSS checks must be binary matrices of equal length"));
    }
    if !hx.mul_transpose(hz)?.is_zero() {
        return Err(hypothesis!("X and Z checks do not commute (H_X·H_Zᵀ ≠ 0)"));
    }
    let n = hx.cols();
    let hx = hx.select_rows(&hx.independent_rows());
    let hz = hz.select_rows(&hz.independent_rows());
    let zero_x = GfMatrix::zeros(f, hx.rows(), n);
    let zero_z = GfMatrix::zeros(f, hz.rows(), n);
    let stab = hx.hstack(&zero_x)?.vstack(&zero_z.hstack(&hz)?)?;
    let k = n - hx.rows() - hz.rows();
    let c_x = LinearCode::from_parity(&hz);
    let c_z = LinearCode::from_parity(&hx);
    let d = if k == 0 {
        let a = min_distance(&c_x, DEFAULT_BUDGET).distance;
        let b = min_distance(&c_z, DEFAULT_BUDGET).distance;
        combine(a, b)
    } else {
        let dx = side_distance(&c_x, &hx, hint.as_ref())?;
        let dz = side_distance(&c_z, &hz, hint.as_ref())?;
        combine(dx, dz)
    };
    let pure = purity(&[&hx, &hz], d, fallback);
    Ok(StabilizerCode {
        n,
        k,
        d,
        stab,
        pure,
        provenance,
        css: Some(CssParts { hx, hz }),
        sides: None,
        burst: None,
    })
}

/// CSS code from `C2^⊥ ⊆ C1`: X-type rows from `H2`, Z-type rows from `H1`.
pub fn css(c1: &LinearCode, c2: &LinearCode) -> Result<StabilizerCode> {
    if c1.n() != c2.n() {
        return Err(usage!("CSS codes of lengths {} and {}", c1.n(), c2.n()));
    }
    if !c1.h().mul_transpose(c2.h())?.is_zero() {
        return Err(hypothesis!("C2^⊥ is not contained in C1 (H1·H2ᵀ ≠ 0)"));
    }
    css_from_checks(c2.h(), c1.h(), None, Purity::Unknown, Provenance::Css)
}

/// Binary `(a|b)` form of a GF(4) vector under `x = a·ω + b·ω²`.
pub fn gf4_to_symplectic(v: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let a = v.iter().map(|&x| (x & 1) ^ (x >> 1)).collect();
    let b = v.iter().map(|&x| x & 1).collect();
    (a, b)
}

/// Inverse of [`gf4_to_symplectic`].
pub fn symplectic_to_gf4(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(&a, &b)| if a == 1 { 2 } else { 0 } ^ if b == 1 { 3 } else { 0 }).collect()
}

fn hermitian_inner(d4: &LinearCode, hint: Option<Hint>, fallback: Purity, provenance: Provenance) -> Result<StabilizerCode> {
    let f = d4.field();
    if f.m() != 2 {
        return Err(usage!("Hermitian construction needs a GF(4) code"));
    }
    if !d4.is_hermitian_dual_containing()? {
        return Err(hypothesis!("code is not Hermitian dual-containing (H·H† ≠ 0)"));
    }
    let n = d4.n();
    let span = d4.h().conjugate();
    let gf2 = Field::gf2();
    let mut stab = GfMatrix::zeros(&gf2, 2 * span.rows(), 2 * n);
    for i in 0..span.rows() {
        for (t, c) in [2u32, 3].into_iter().enumerate() {
            let row: Vec<Elem> = span.row_slice(i).iter().map(|&x| f.mul(c, x)).collect();
            let (a, b) = gf4_to_symplectic(&row);
            for j in 0..n {
                stab.set(2 * i + t, j, a[j]);
                stab.set(2 * i + t, n + j, b[j]);
            }
        }
    }
    let k = 2 * d4.k() - n;
    let d = if k == 0 {
        min_distance(d4, DEFAULT_BUDGET).distance
    } else {
        side_distance(d4, &span, hint.as_ref())?
    };
    let pure = purity(&[&span], d, fallback);
    Ok(StabilizerCode { n, k, d, stab, pure, provenance, css: None, sides: None, burst: None })
}

/// `[[n, 2k−n, d]]` code from a Hermitian dual-containing `[n, k]` GF(4) code.
pub fn hermitian(d4: &LinearCode) -> Result<StabilizerCode> {
    hermitian_inner(d4, None, Purity::Unknown, Provenance::Hermitian)
}

fn tensor_hint(t: &TensorProductCode) -> Result<Hint> {
    let cert = certify_distance(t, DEFAULT_BUDGET)?;
    Ok(Hint { lower: cert.lower, witness: cert.witness })
}

/// Quantum code from a dual-containing tensor product `C2 ⊗ C1`: CSS over
/// GF(2), Hermitian over GF(4). Needs `C1` or `ψ(C2)` (Hermitian)
/// dual-containing.
pub fn qtpc_dual_containing(c1: &LinearCode, c2: &LinearCode) -> Result<StabilizerCode> {
    let t = tpc_build(c1, c2, Variant::Psi)?;
    let ext = t.extension().clone();
    let psi_h2 = ext.psi_matrix(c2.h())?;
    match c1.field().m() {
        1 => {
            let c1_dc = c1.is_dual_containing();
            let psi_dc = psi_h2.mul_transpose(&psi_h2)?.is_zero();
            if !c1_dc && !psi_dc {
                return Err(hypothesis!(
                    "neither C1 (H1·H1ᵀ ≠ 0) nor ψ(C2) (ψ(H2)·ψ(H2)ᵀ ≠ 0) is dual-containing"
                ));
            }
            if !t.code().is_dual_containing() {
                return Err(Error::Inconsistent("tensor product code is not dual-containing".into()));
            }
            let hint = tensor_hint(&t)?;
            let mut q = css_from_checks(t.h_base(), t.h_base(), Some(hint), Purity::Asserted, Provenance::TensorDualContaining)?;
            q.sides = Some(Box::new(TensorSides { x_side: t.clone(), z_side: t }));
            Ok(q)
        }
        2 => {
            let c1_dc = c1.is_hermitian_dual_containing()?;
            let psi_dc = psi_h2.matmul(&psi_h2.dagger()?)?.is_zero();
            if !c1_dc && !psi_dc {
                return Err(hypothesis!(
                    "neither C1 (H1·H1† ≠ 0) nor ψ(C2) (ψ(H2)·ψ(H2)† ≠ 0) is Hermitian dual-containing"
                ));
            }
            if !t.code().is_hermitian_dual_containing()? {
                return Err(Error::Inconsistent(
                    "tensor product code is not Hermitian dual-containing".into(),
                ));
            }
            let hint = tensor_hint(&t)?;
            hermitian_inner(t.code(), Some(hint), Purity::Asserted, Provenance::TensorDualContaining)
        }
        m => Err(usage!("inner code over GF(2^{m}); expected GF(2) or GF(4)")),
    }
}

/// CSS pair `C` (transposed companion blocks) and `C_L` (plain blocks with
/// `L·H1`). Needs `H1·H1ᵀ` of full rank and `C2` dual-containing.
pub fn qtpc_reversible(c1: &LinearCode, c2: &LinearCode) -> Result<StabilizerCode> {
    if !c1.field().is_binary() {
        return Err(usage!("the companion construction needs a binary inner code"));
    }
    if !c2.is_dual_containing() {
        return Err(hypothesis!("C2 is not dual-containing (H2·H2ᵀ ≠ 0)"));
    }
    let c = tpc_build(c1, c2, Variant::CompanionTransposed)?;
    let cl = build_cl(c1, c2)?;
    if !cl.h_base().mul_transpose(c.h_base())?.is_zero() {
        return Err(Error::Inconsistent("H_[C_L]·H_[C]ᵀ ≠ 0".into()));
    }
    let hint = tensor_hint(&c)?;
    let mut q = css_from_checks(cl.h_base(), c.h_base(), Some(hint), Purity::Asserted, Provenance::TensorReversible)?;
    q.sides = Some(Box::new(TensorSides { x_side: c, z_side: cl }));
    Ok(q)
}

/// Repetition `[n1, 1, n1]` inner code with a dual-containing
/// `[n2, n2−n1+1, n1]` MDS outer code over `GF(2^{n1−1})`.
pub fn qtpc_repetition_burst(n1: usize, n2: usize) -> Result<StabilizerCode> {
    if n1 < 3 || n1.is_multiple_of(2) {
        return Err(hypothesis!("n1 = {n1} must be odd and at least 3"));
    }
    if n1 > n2 / 2 + 1 {
        return Err(hypothesis!("n1 = {n1} exceeds ⌊n2/2⌋ + 1 = {}", n2 / 2 + 1));
    }
    let rho1 = n1 - 1;
    if rho1 as u32 > crate::galois::MAX_M {
        return Err(usage!("extension degree {rho1} too large"));
    }
    if n2 > 1 << rho1 {
        return Err(hypothesis!("n2 = {n2} exceeds 2^ρ1 = {}", 1usize << rho1));
    }
    let f = Field::new(rho1 as u32)?;
    let c2 = mds_dual_containing(&f, n2, n1)?.into_code();
    let c1 = repetition(n1)?;
    let mut q = qtpc_reversible(&c1, &c2)?;
    q.provenance = Provenance::RepetitionBurst;
    q.burst = Some(BurstCapability { l: n1.div_ceil(2) - 1, t: (n1 - 1) / 2, n1 });
    Ok(q)
}

/// Reversible Fire inner code with a dual-containing Reed–Solomon outer
/// code of dimension at least `⌈n2/2⌉`.
pub fn qtpc_fire_burst(fire: &FireCode, c2: &ReedSolomon) -> Result<StabilizerCode> {
    if !is_reversible(&fire.cyclic)? {
        return Err(hypothesis!("Fire code generator is not self-reciprocal (code not reversible)"));
    }
    let rs = c2.code();
    if rs.k() < rs.n().div_ceil(2) {
        return Err(hypothesis!("outer dimension {} below ⌈n2/2⌉ = {}", rs.k(), rs.n().div_ceil(2)));
    }
    let mut q = qtpc_reversible(fire.cyclic.code(), rs)?;
    q.provenance = Provenance::FireBurst;
    q.burst = Some(BurstCapability { l: fire.spec.l, t: rs.rho().div_ceil(2), n1: fire.spec.n });
    Ok(q)
}

fn check_self_dual(c: &LinearCode) -> Result<()> {
    if !c.n().is_multiple_of(2) || 2 * c.k() != c.n() {
        return Err(hypothesis!("code [{}, {}] is not of self-dual shape", c.n(), c.k()));
    }
    let ok = match c.field().m() {
        1 => c.is_dual_containing(),
        2 => c.is_hermitian_dual_containing()?,
        m => return Err(usage!("self-dual code over GF(2^{m}); expected GF(2) or GF(4)")),
    };
    if !ok {
        return Err(hypothesis!("code is not self-dual"));
    }
    Ok(())
}

fn kron_witness(c: &LinearCode) -> Option<Vec<Elem>> {
    let r = min_distance(c, DEFAULT_BUDGET);
    let w = r.witness.filter(|_| r.distance.exact)?;
    let mut v = vec![0; c.n() * c.n()];
    for (i, &x) in w.iter().enumerate() {
        v[i * c.n()] = x;
    }
    Some(v)
}

/// `[[n², n²/2, d]]` from a self-dual `[n, n/2, d]` code via `C ⊗ C` over one field.
pub fn self_dual_square(c: &LinearCode) -> Result<StabilizerCode> {
    check_self_dual(c)?;
    let t = kron_product(c, c)?;
    let d = min_distance(c, DEFAULT_BUDGET).distance;
    let hint = Hint { lower: d.value, witness: kron_witness(c) };
    let mut q = if c.field().is_binary() {
        css_from_checks(t.h(), t.h(), Some(hint), Purity::Unknown, Provenance::SelfDualSquare)?
    } else {
        hermitian_inner(&t, Some(hint), Purity::Unknown, Provenance::SelfDualSquare)?
    };
    q.provenance = Provenance::SelfDualSquare;
    Ok(q)
}

/// `[[n², n²−nd+n, d]]` from a self-dual `[n, n/2, d]` code and an
/// `[n, n−d+1, d]` Reed–Solomon code over the degree-n/2 extension.
pub fn self_dual_mds(c: &LinearCode) -> Result<StabilizerCode> {
    check_self_dual(c)?;
    let d = min_distance(c, DEFAULT_BUDGET).distance;
    if !d.exact {
        return Err(usage!("distance of the self-dual code could not be settled"));
    }
    let m = c.field().m() * (c.n() / 2) as u32;
    let ext = Field::new(m)?;
    Extension::new(c.field(), &ext)?;
    let c2 = reed_solomon(&ext, c.n(), c.n() - d.value + 1)?.into_code();
    let mut q = qtpc_dual_containing(c, &c2)?;
    q.provenance = Provenance::SelfDualMds;
    Ok(q)
}

impl StabilizerCode {
    /// Commutation, rank, and (for CSS codes) the split structure.
    pub fn check(&self) -> Vec<(&'static str, bool)> {
        let mut out = vec![
            ("stabilizer rows commute", symplectic_commute(&self.stab)),
            ("rank equals n − k", self.stab.rank() == self.n - self.k && self.stab.rows() == self.n - self.k),
        ];
        if let Some(css) = &self.css {
            out.push(("H_X·H_Zᵀ = 0", css.hx.mul_transpose(&css.hz).map(|m| m.is_zero()).unwrap_or(false)));
        }
        out
    }
}

/// Check-symbol count of a primitive narrow-sense BCH code of length
/// `2^m − 1` used in the comparison table: binary for odd `m`, quaternary
/// for even `m`, with the design distance rounded up to the next odd value.
pub fn bch_table_rho(m: u32, delta: usize) -> Result<usize> {
    if !(2..=30).contains(&m) || delta < 2 {
        return Err(usage!("table row needs m in 2..=30 and δ ≥ 2"));
    }
    let n = (1usize << m) - 1;
    let q = if m.is_multiple_of(2) { 4 } else { 2 };
    let odd = 2 * (delta - 1).div_ceil(2) + 1;
    let mut seen = alloc::collections::BTreeSet::new();
    for i in 1..odd {
        let mut x = i % n;
        while seen.insert(x) {
            x = x * q % n;
        }
    }
    Ok(seen.len())
}

/// `[[n, k, d]]` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuantumParams {
    pub n: u64,
    pub k: i64,
    pub d: u64,
}

/// Parameters of the concatenated comparison code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CqcSpec {
    pub m: u32,
    pub delta1: usize,
    pub eta1: usize,
    pub eta2: usize,
}

impl CqcSpec {
    pub fn n1(&self) -> usize {
        (1usize << self.m) - 1
    }

    /// Inner dimension `K1`.
    pub fn k1(&self) -> usize {
        if self.eta1 == 2 {
            self.n1() - 3
        } else {
            self.n1() - 2 * self.m as usize * (self.eta1 - 1).div_ceil(2)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let prod = self.eta1 * self.eta2;
        if self.eta1 < 2 || self.eta1 > self.eta2 {
            return Err(usage!("need 2 ≤ η1 ≤ η2, got η1 = {}, η2 = {}", self.eta1, self.eta2));
        }
        if prod != self.delta1 && prod + 1 != self.delta1 {
            return Err(usage!("η1·η2 = {prod} is neither δ1 = {} nor δ1 − 1", self.delta1));
        }
        Ok(())
    }
}

/// `[[n1·n2, K1·(n2 − 2η2 + 2), η1·η2]]`.
pub fn cqc_parameters(spec: &CqcSpec, n2: u64) -> Result<QuantumParams> {
    spec.validate()?;
    let n1 = spec.n1() as u64;
    let k = spec.k1() as i64 * (n2 as i64 - 2 * spec.eta2 as i64 + 2);
    Ok(QuantumParams { n: n1 * n2, k, d: (spec.eta1 * spec.eta2) as u64 })
}

/// `[[n1·n2, n1·n2 − 2ρ1(δ1−1), δ1]]` for a BCH inner code with an MDS outer code of distance δ1.
pub fn qtpc_bch_parameters(m: u32, delta1: usize, n2: u64) -> Result<QuantumParams> {
    let rho1 = bch_table_rho(m, delta1)? as i64;
    let n = ((1u64 << m) - 1) * n2;
    Ok(QuantumParams { n, k: n as i64 - 2 * rho1 * (delta1 as i64 - 1), d: delta1 as u64 })
}

/// Comparison-table row: `(m, δ1, η1, η2, smallest n2)`.
pub const BCH_COMPARISON_ROWS: [(u32, usize, usize, usize, u64); 14] = [
    (5, 7, 2, 3, 23),
    (5, 6, 2, 3, 13),
    (5, 5, 2, 2, 8),
    (5, 4, 2, 2, 2),
    (6, 7, 2, 3, 7),
    (6, 6, 2, 3, 6),
    (6, 5, 2, 2, 5),
    (6, 4, 2, 2, 4),
    (7, 15, 3, 5, 34),
    (7, 14, 2, 7, 14),
    (7, 13, 2, 6, 13),
    (7, 12, 3, 4, 18),
    (7, 11, 2, 5, 11),
    (7, 10, 2, 5, 10),
];

/// Largest outer length `q^ρ1 + 1` for a table row (`q = 2` odd m, `4` even m).
pub fn table_n2_max(m: u32, delta1: usize) -> Result<u128> {
    let rho = bch_table_rho(m, delta1)? as u32;
    let bits = if m.is_multiple_of(2) { 2 * rho } else { rho };
    if bits >= 127 {
        return Err(usage!("outer field too large"));
    }
    Ok((1u128 << bits) + 1)
}

/// `n2 ≥ ⌈(1 − 2/m)·n1⌉`, above which the tensor code has the larger dimension.
pub fn crossover_n2(m: u32) -> u64 {
    let n1 = (1u64 << m) - 1;
    ((m as u64 - 2) * n1).div_ceil(m as u64)
}
