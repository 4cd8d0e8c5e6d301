//! JSON code specifications and their construction.

use serde::{Deserialize, Serialize};

use tensorq_core::codes::LinearCode;
use tensorq_core::families::{
    bch, cyclic_from_generator, fire_code, mds_dual_containing, reed_solomon, repetition, FireCode,
};
use tensorq_core::quantum::{
    css, hermitian, qtpc_dual_containing, qtpc_fire_burst, qtpc_repetition_burst, qtpc_reversible,
    self_dual_mds, self_dual_square, StabilizerCode,
};
use tensorq_core::tpc::{tpc_build, TensorProductCode, Variant};
use tensorq_core::{Error, Field, GfMatrix, Poly, Result};

/// A code description. Outer codes of tensor products may omit `m`; it is
/// then taken as the inner field degree times the inner redundancy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CodeSpec {
    /// Explicit parity check over GF(2^m).
    Parity {
        #[serde(default = "one")]
        m: u32,
        rows: Vec<Vec<u32>>,
    },
    Repetition { n: usize },
    /// Cyclic binary code from generator bits (bit i = coefficient of x^i).
    Cyclic { n: usize, g: u64 },
    Bch {
        m: u32,
        #[serde(default = "one_usize")]
        b: usize,
        delta: usize,
    },
    Rs {
        #[serde(default)]
        m: Option<u32>,
        n: usize,
        k: usize,
    },
    /// Dual-containing MDS code of the given distance.
    Mds {
        #[serde(default)]
        m: Option<u32>,
        n: usize,
        d: usize,
    },
    Fire { b_poly: u64, l: usize },
    Tpc {
        inner: Box<CodeSpec>,
        outer: Box<CodeSpec>,
        #[serde(default)]
        variant: Option<String>,
    },
    Css { c1: Box<CodeSpec>, c2: Box<CodeSpec> },
    Hermitian { code: Box<CodeSpec> },
    TensorDualContaining { inner: Box<CodeSpec>, outer: Box<CodeSpec> },
    TensorReversible { inner: Box<CodeSpec>, outer: Box<CodeSpec> },
    RepetitionBurst { n1: usize, n2: usize },
    FireBurst { b_poly: u64, l: usize, outer: Box<CodeSpec> },
    SelfDualSquare { code: Box<CodeSpec> },
    SelfDualMds { code: Box<CodeSpec> },
}

fn one() -> u32 {
    1
}
fn one_usize() -> usize {
    1
}

/// Result of building a spec.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Built {
    Classical { code: LinearCode, tpc: Option<TensorProductCode> },
    Quantum { code: StabilizerCode, fire: Option<FireCode> },
}

impl Built {
    pub fn classical(self) -> Result<LinearCode> {
        match self {
            Built::Classical { code, .. } => Ok(code),
            Built::Quantum { .. } => Err(Error::Usage("expected a classical code spec".into())),
        }
    }
}

pub fn parse_spec(text: &str) -> Result<CodeSpec> {
    serde_json::from_str(text).map_err(|e| Error::Usage(format!("invalid code spec: {e}")))
}

impl CodeSpec {
    pub fn is_quantum(&self) -> bool {
        !matches!(
            self,
            CodeSpec::Parity { .. }
                | CodeSpec::Repetition { .. }
                | CodeSpec::Cyclic { .. }
                | CodeSpec::Bch { .. }
                | CodeSpec::Rs { .. }
                | CodeSpec::Mds { .. }
                | CodeSpec::Fire { .. }
                | CodeSpec::Tpc { .. }
        )
    }

    /// Build; `variant` overrides the tensor product form where one applies.
    pub fn build(&self, variant: Option<Variant>) -> Result<Built> {
        let classical = |code| Ok(Built::Classical { code, tpc: None });
        let quantum = |code| Ok(Built::Quantum { code, fire: None });
        match self {
            CodeSpec::Tpc { inner, outer, variant: v } => {
                let c1 = inner.classical(None)?;
                let c2 = outer.classical(Some(&c1))?;
                let v = match (variant, v) {
                    (Some(v), _) => v,
                    (None, Some(s)) => Variant::parse(s)?,
                    (None, None) => Variant::Psi,
                };
                let t = tpc_build(&c1, &c2, v)?;
                Ok(Built::Classical { code: t.code().clone(), tpc: Some(t) })
            }
            CodeSpec::Css { c1, c2 } => quantum(css(&c1.classical(None)?, &c2.classical(None)?)?),
            CodeSpec::Hermitian { code } => quantum(hermitian(&code.classical(None)?)?),
            CodeSpec::TensorDualContaining { inner, outer } => {
                let c1 = inner.classical(None)?;
                quantum(qtpc_dual_containing(&c1, &outer.classical(Some(&c1))?)?)
            }
            CodeSpec::TensorReversible { inner, outer } => {
                let c1 = inner.classical(None)?;
                quantum(qtpc_reversible(&c1, &outer.classical(Some(&c1))?)?)
            }
            CodeSpec::RepetitionBurst { n1, n2 } => quantum(qtpc_repetition_burst(*n1, *n2)?),
            CodeSpec::FireBurst { b_poly, l, outer } => {
                let fire = fire_code(&Poly::from_bits(*b_poly), *l)?;
                let rs = outer.reed_solomon(fire.cyclic.code())?;
                let code = qtpc_fire_burst(&fire, &rs)?;
                Ok(Built::Quantum { code, fire: Some(fire) })
            }
            CodeSpec::SelfDualSquare { code } => quantum(self_dual_square(&code.classical(None)?)?),
            CodeSpec::SelfDualMds { code } => quantum(self_dual_mds(&code.classical(None)?)?),
            _ => classical(self.classical(None)?),
        }
    }

    fn outer_field(m: Option<u32>, inner: Option<&LinearCode>) -> Result<Field> {
        let implied = inner.map(|c| c.field().m() * c.rho() as u32);
        match (m, implied) {
            (Some(m), Some(i)) if m != i => Err(Error::Usage(format!(
                "outer field GF(2^{m}) does not match the inner code (needs GF(2^{i}))"
            ))),
            (Some(m), _) | (None, Some(m)) => Field::new(m),
            (None, None) => Err(Error::Usage("field degree m is required".into())),
        }
    }

    fn reed_solomon(&self, inner: &LinearCode) -> Result<tensorq_core::families::ReedSolomon> {
        match self {
            CodeSpec::Rs { m, n, k } => reed_solomon(&Self::outer_field(*m, Some(inner))?, *n, *k),
            CodeSpec::Mds { m, n, d } => mds_dual_containing(&Self::outer_field(*m, Some(inner))?, *n, *d),
            _ => Err(Error::Usage("outer code must be of kind rs or mds".into())),
        }
    }

    /// Classical code; `inner` supplies the field of an outer code.
    pub fn classical(&self, inner: Option<&LinearCode>) -> Result<LinearCode> {
        match self {
            CodeSpec::Parity { m, rows } => {
                let f = Field::new(*m)?;
                if rows.is_empty() {
                    return Err(Error::Usage("parity check needs at least one row".into()));
                }
                if rows.iter().flatten().any(|&x| x >= f.q()) {
                    return Err(Error::Usage(format!("parity entry outside GF({})", f.q())));
                }
                Ok(LinearCode::from_parity(&GfMatrix::from_rows(&f, rows)?))
            }
            CodeSpec::Repetition { n } => repetition(*n),
            CodeSpec::Cyclic { n, g } => Ok(cyclic_from_generator(*n, &Poly::from_bits(*g))?.into_code()),
            CodeSpec::Bch { m, b, delta } => Ok(bch(*m, *b, *delta)?.into_code()),
            CodeSpec::Rs { m, n, k } => Ok(reed_solomon(&Self::outer_field(*m, inner)?, *n, *k)?.into_code()),
            CodeSpec::Mds { m, n, d } => {
                Ok(mds_dual_containing(&Self::outer_field(*m, inner)?, *n, *d)?.into_code())
            }
            CodeSpec::Fire { b_poly, l } => Ok(fire_code(&Poly::from_bits(*b_poly), *l)?.cyclic.into_code()),
            CodeSpec::Tpc { .. } => Ok(self.build(None)?.classical()?),
            _ => Err(Error::Usage("expected a classical code spec".into())),
        }
    }
}
