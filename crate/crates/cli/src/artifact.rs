//! Code artifacts on disk and their verification.

use serde::{Deserialize, Serialize};

use tensorq_core::codes::{Distance, LinearCode};
use tensorq_core::matgf::{GfMatrix, RowSpace};
use tensorq_core::quantum::{symplectic_commute, Provenance, StabilizerCode};
use tensorq_core::{Elem, Error, Field, Result};

use crate::spec::{Built, CodeSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceJson {
    /// `null` when no nonzero word qualifies.
    pub value: Option<u64>,
    pub exact: bool,
}

impl From<Distance> for DistanceJson {
    fn from(d: Distance) -> Self {
        let value = (d.value != usize::MAX).then_some(d.value as u64);
        DistanceJson { value, exact: d.exact }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CssJson {
    pub hx: Vec<String>,
    pub hz: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurstJson {
    pub l: usize,
    pub t: usize,
    pub n1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerArtifact {
    pub n: usize,
    pub k: usize,
    pub d: DistanceJson,
    pub pure: String,
    pub provenance: String,
    /// Rows of the `(a|b)` matrix, `2n` bits each, most significant bit first.
    pub stab_ab: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub css: Option<CssJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub burst: Option<BurstJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<CodeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalArtifact {
    /// Field GF(2^m).
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub d: DistanceJson,
    pub h: Vec<Vec<Elem>>,
    pub dual_containing: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<CodeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Artifact {
    Stabilizer(StabilizerArtifact),
    Classical(ClassicalArtifact),
}

pub fn bits_to_hex(bits: &[Elem]) -> String {
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (j, &b) in bits.iter().enumerate() {
        if b & 1 == 1 {
            bytes[j / 8] |= 0x80 >> (j % 8);
        }
    }
    hex::encode(bytes)
}

pub fn hex_to_bits(s: &str, len: usize) -> Result<Vec<Elem>> {
    let bytes = hex::decode(s).map_err(|e| Error::Usage(format!("bad hex row {s:?}: {e}")))?;
    if bytes.len() != len.div_ceil(8) {
        return Err(Error::Usage(format!("hex row of {} bytes, expected {}", bytes.len(), len.div_ceil(8))));
    }
    let bits: Vec<Elem> = (0..len).map(|j| ((bytes[j / 8] >> (7 - j % 8)) & 1) as Elem).collect();
    if (len..bytes.len() * 8).any(|j| (bytes[j / 8] >> (7 - j % 8)) & 1 == 1) {
        return Err(Error::Usage(format!("hex row {s:?} has bits past column {len}")));
    }
    Ok(bits)
}

fn hex_rows(m: &GfMatrix) -> Vec<String> {
    (0..m.rows()).map(|i| bits_to_hex(m.row_slice(i))).collect()
}

fn parse_rows(rows: &[String], len: usize) -> Result<GfMatrix> {
    let parsed = rows.iter().map(|r| hex_to_bits(r, len)).collect::<Result<Vec<_>>>()?;
    if parsed.is_empty() {
        return Ok(GfMatrix::zeros(&Field::gf2(), 0, len));
    }
    GfMatrix::from_rows(&Field::gf2(), &parsed)
}

pub fn stabilizer_artifact(q: &StabilizerCode, spec: Option<&CodeSpec>) -> StabilizerArtifact {
    StabilizerArtifact {
        n: q.n,
        k: q.k,
        d: q.d.into(),
        pure: q.pure.name().into(),
        provenance: q.provenance.name().into(),
        stab_ab: hex_rows(&q.stab),
        css: q.css.as_ref().map(|c| CssJson { hx: hex_rows(&c.hx), hz: hex_rows(&c.hz) }),
        burst: q.burst.map(|b| BurstJson { l: b.l, t: b.t, n1: b.n1 }),
        spec: spec.cloned(),
    }
}

pub fn classical_artifact(c: &LinearCode, d: Distance, spec: Option<&CodeSpec>) -> ClassicalArtifact {
    ClassicalArtifact {
        m: c.field().m(),
        n: c.n(),
        k: c.k(),
        d: d.into(),
        h: c.h().to_rows(),
        dual_containing: c.is_dual_containing(),
        spec: spec.cloned(),
    }
}

pub fn artifact_for(built: &Built, spec: &CodeSpec) -> Artifact {
    match built {
        Built::Quantum { code, .. } => Artifact::Stabilizer(stabilizer_artifact(code, Some(spec))),
        Built::Classical { code, tpc } => {
            let d = match tpc {
                Some(t) => tensorq_core::tpc::certify_distance(t, tensorq_core::codes::DEFAULT_BUDGET)
                    .map(|c| c.distance())
                    .unwrap_or(code.distance()),
                None => tensorq_core::codes::min_distance(code, tensorq_core::codes::DEFAULT_BUDGET).distance,
            };
            Artifact::Classical(classical_artifact(code, d, Some(spec)))
        }
    }
}

pub fn parse_artifact(text: &str) -> Result<Artifact> {
    serde_json::from_str(text).map_err(|e| Error::Usage(format!("invalid artifact: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

fn same_row_space(a: &GfMatrix, b: &GfMatrix) -> bool {
    let (sa, sb) = (RowSpace::new(a), RowSpace::new(b));
    sa.dim() == sb.dim() && (0..b.rows()).all(|i| sa.contains(b.row_slice(i)))
}

/// Re-run the invariants that apply to an artifact.
pub fn verify(a: &Artifact) -> Result<Vec<Check>> {
    match a {
        Artifact::Stabilizer(s) => verify_stabilizer(s),
        Artifact::Classical(c) => verify_classical(c),
    }
}

fn verify_stabilizer(s: &StabilizerArtifact) -> Result<Vec<Check>> {
    if s.k > s.n {
        return Err(Error::Usage(format!("k = {} exceeds n = {}", s.k, s.n)));
    }
    let stab = parse_rows(&s.stab_ab, 2 * s.n)?;
    let mut out = Vec::new();
    out.push(check("stabilizer rows commute", symplectic_commute(&stab), format!("{} rows", stab.rows())));
    let rank = stab.rank();
    out.push(check(
        "rank(stab) = n − k",
        rank == s.n - s.k && stab.rows() == rank,
        format!("rank {rank}, rows {}, n − k = {}", stab.rows(), s.n - s.k),
    ));
    Provenance::parse(&s.provenance)?;
    tensorq_core::quantum::Purity::parse(&s.pure)?;
    if let Some(css) = &s.css {
        let hx = parse_rows(&css.hx, s.n)?;
        let hz = parse_rows(&css.hz, s.n)?;
        let prod = hx.mul_transpose(&hz)?;
        out.push(check("H_X·H_Zᵀ = 0", prod.is_zero(), format!("{}×{} product", prod.rows(), prod.cols())));
        let f = Field::gf2();
        let xs = hx.hstack(&GfMatrix::zeros(&f, hx.rows(), s.n))?;
        let zs = GfMatrix::zeros(&f, hz.rows(), s.n).hstack(&hz)?;
        out.push(check("stabilizer = (H_X|0) ⊕ (0|H_Z)", same_row_space(&xs.vstack(&zs)?, &stab), ""));
    }
    if let Some(spec) = &s.spec {
        match spec.build(None) {
            Ok(Built::Quantum { code, .. }) => {
                out.push(check(
                    "parameters match rebuild",
                    code.n == s.n && code.k == s.k,
                    format!("rebuilt [[{}, {}]]", code.n, code.k),
                ));
                out.push(check(
                    "distance matches rebuild",
                    DistanceJson::from(code.d) == s.d,
                    format!("rebuilt {:?}", DistanceJson::from(code.d)),
                ));
                out.push(check("stabilizer matches rebuild", same_row_space(&code.stab, &stab), ""));
                if let Some(sides) = &code.sides {
                    let (t, c) = (&sides.x_side, &sides.z_side);
                    let expect = t.n() - 2 * t.rho1() * t.rho2();
                    out.push(check(
                        "k = n1·n2 − 2ρ1ρ2",
                        s.k == expect,
                        format!("n1 = {}, n2 = {}, ρ1 = {}, ρ2 = {}", t.n1(), t.n2(), t.rho1(), t.rho2()),
                    ));
                    if t.variant() != c.variant() {
                        let p = c.h_base().mul_transpose(t.h_base())?;
                        out.push(check("H_[C_L]·H_[C]ᵀ = 0", p.is_zero(), ""));
                    } else {
                        let p = t.h_base().mul_transpose(t.h_base())?;
                        out.push(check("H·Hᵀ = 0 (dual-containing)", p.is_zero(), ""));
                    }
                }
            }
            Ok(Built::Classical { .. }) => {
                out.push(check("spec describes a quantum code", false, "classical spec"));
            }
            Err(e) => out.push(check("spec rebuilds", false, e.to_string())),
        }
    }
    Ok(out)
}

fn verify_classical(c: &ClassicalArtifact) -> Result<Vec<Check>> {
    let f = Field::new(c.m)?;
    if c.h.iter().flatten().any(|&x| x >= f.q()) {
        return Err(Error::Usage(format!("parity entry outside GF({})", f.q())));
    }
    let h = if c.h.is_empty() { GfMatrix::zeros(&f, 0, c.n) } else { GfMatrix::from_rows(&f, &c.h)? };
    let mut out = Vec::new();
    let rank = h.rank();
    out.push(check("rank(H) = n − k", h.cols() == c.n && rank + c.k == c.n, format!("rank {rank}")));
    let dc = h.mul_transpose(&h)?.is_zero();
    out.push(check("dual-containing flag", dc == c.dual_containing, format!("H·Hᵀ = 0 is {dc}")));
    if let Some(spec) = &c.spec {
        match spec.build(None).and_then(|b| b.classical()) {
            Ok(code) => out.push(check("parity check matches rebuild", same_row_space(code.h(), &h), "")),
            Err(e) => out.push(check("spec rebuilds", false, e.to_string())),
        }
    }
    Ok(out)
}
