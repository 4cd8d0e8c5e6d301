//! Library side of the `tensorq` command: spec parsing, artifacts, and the
//! subcommands as functions from input text to output text.
//!
//! Exit codes: 0 pass, 1 property failure, 2 input error, 3 construction
//! hypothesis not met.

pub mod artifact;
pub mod spec;

use serde::{Deserialize, Serialize};

use tensorq_core::codes::{min_distance, DEFAULT_BUDGET};
use tensorq_core::decoder::{capability_report, BurstPattern, CapabilityReport, InnerDecoder, QuantumDecoder, Side};
use tensorq_core::quantum::{
    bch_table_rho, cqc_parameters, crossover_n2, qtpc_bch_parameters, table_n2_max, CqcSpec, QuantumParams,
    BCH_COMPARISON_ROWS,
};
use tensorq_core::tpc::{certify_distance, Variant};
use tensorq_core::{Elem, Error, Result};

use artifact::{artifact_for, parse_artifact, verify, Artifact, Check, DistanceJson};
use spec::{parse_spec, Built, CodeSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => EXIT_USAGE,
        Error::Hypothesis(_) | Error::Domain(_) => EXIT_HYPOTHESIS,
        Error::Inconsistent(_) => EXIT_FAIL,
    }
}

/// Text produced by a command and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    /// Human-readable summary for stdout.
    pub text: String,
    /// Machine-readable document for `--out`.
    pub document: String,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Accepts either a code spec or an artifact carrying one.
fn spec_from_input(text: &str) -> Result<CodeSpec> {
    if let Ok(a) = parse_artifact(text) {
        let spec = match a {
            Artifact::Stabilizer(s) => s.spec,
            Artifact::Classical(c) => c.spec,
        };
        return spec.ok_or_else(|| Error::Usage("artifact carries no spec to rebuild from".into()));
    }
    parse_spec(text)
}

pub fn cmd_build(spec_text: &str, variant: Option<Variant>) -> Result<Output> {
    let spec = parse_spec(spec_text)?;
    let built = spec.build(variant)?;
    let a = artifact_for(&built, &spec);
    let text = match &a {
        Artifact::Stabilizer(s) => format!(
            "[[{}, {}, {}]] {} ({}, purity {})\n",
            s.n,
            s.k,
            fmt_distance(&s.d),
            s.provenance,
            if s.css.is_some() { "CSS" } else { "Hermitian" },
            s.pure
        ),
        Artifact::Classical(c) => format!("[{}, {}, {}] over GF({})\n", c.n, c.k, fmt_distance(&c.d), 1u64 << c.m),
    };
    Ok(Output { code: EXIT_OK, text, document: json(&a) })
}

fn fmt_distance(d: &DistanceJson) -> String {
    match (d.value, d.exact) {
        (None, _) => "∞".into(),
        (Some(v), true) => v.to_string(),
        (Some(v), false) => format!("≥{v}"),
    }
}

pub fn cmd_verify(artifact_text: &str) -> Result<Output> {
    let a = parse_artifact(artifact_text)?;
    let checks: Vec<Check> = verify(&a)?;
    let ok = checks.iter().all(|c| c.pass);
    let mut text = String::new();
    for c in &checks {
        let mark = if c.pass { "pass" } else { "FAIL" };
        if c.detail.is_empty() {
            text.push_str(&format!("{mark}  {}\n", c.name));
        } else {
            text.push_str(&format!("{mark}  {} ({})\n", c.name, c.detail));
        }
    }
    Ok(Output { code: if ok { EXIT_OK } else { EXIT_FAIL }, text, document: json(&checks) })
}

#[derive(Clone, Debug, Serialize)]
struct DistanceDoc {
    n: usize,
    k: usize,
    d: DistanceJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<Elem>>,
}

pub fn cmd_distance(input: &str, variant: Option<Variant>, budget: u64) -> Result<Output> {
    let spec = spec_from_input(input)?;
    let doc = match spec.build(variant)? {
        Built::Quantum { code, .. } => DistanceDoc { n: code.n, k: code.k, d: code.d.into(), witness: None },
        Built::Classical { code, tpc: Some(t) } => {
            let cert = certify_distance(&t, budget)?;
            DistanceDoc { n: code.n(), k: code.k(), d: cert.distance().into(), witness: cert.witness }
        }
        Built::Classical { code, tpc: None } => {
            let r = min_distance(&code, budget);
            DistanceDoc { n: code.n(), k: code.k(), d: r.distance.into(), witness: r.witness }
        }
    };
    let text = format!("n = {}, k = {}, d = {}\n", doc.n, doc.k, fmt_distance(&doc.d));
    Ok(Output { code: EXIT_OK, text, document: json(&doc) })
}

/// Parameter-table request: rows of `(m, δ1, η1, η2)` with outer lengths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRequest {
    pub rows: Vec<RowRequest>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowRequest {
    pub m: u32,
    pub delta: usize,
    pub eta1: usize,
    pub eta2: usize,
    pub n2: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: u64,
    pub k: i64,
    pub d: u64,
}

impl From<QuantumParams> for Params {
    fn from(p: QuantumParams) -> Self {
        Params { n: p.n, k: p.k, d: p.d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub m: u32,
    pub delta: usize,
    pub eta1: usize,
    pub eta2: usize,
    pub n2: u64,
    pub rho1: usize,
    pub qtpc: Params,
    pub cqc: Params,
    pub n2_min: u64,
    /// Decimal, since it can exceed 64 bits.
    pub n2_max: String,
    pub in_range: bool,
    /// `n2 ≥ ⌈(1 − 2/m)·n1⌉`.
    pub crossover: bool,
    pub qtpc_larger: bool,
}

/// Smallest admissible outer length of a row: the frozen value for the
/// comparison rows, otherwise `δ1` (shortest MDS code of that distance).
fn n2_min(m: u32, delta: usize, eta1: usize, eta2: usize) -> u64 {
    BCH_COMPARISON_ROWS
        .iter()
        .find(|r| (r.0, r.1, r.2, r.3) == (m, delta, eta1, eta2))
        .map(|r| r.4)
        .unwrap_or(delta as u64)
}

pub fn table_row(m: u32, delta: usize, eta1: usize, eta2: usize, n2: u64) -> Result<TableRow> {
    let cqc = cqc_parameters(&CqcSpec { m, delta1: delta, eta1, eta2 }, n2)?;
    let qtpc = qtpc_bch_parameters(m, delta, n2)?;
    let lo = n2_min(m, delta, eta1, eta2);
    let hi = table_n2_max(m, delta)?;
    Ok(TableRow {
        m,
        delta,
        eta1,
        eta2,
        n2,
        rho1: bch_table_rho(m, delta)?,
        qtpc_larger: qtpc.k > cqc.k,
        qtpc: qtpc.into(),
        cqc: cqc.into(),
        n2_min: lo,
        n2_max: hi.to_string(),
        in_range: lo <= n2 && (n2 as u128) <= hi,
        crossover: n2 >= crossover_n2(m),
    })
}

/// The comparison rows, each at its smallest outer length unless `n2` is given.
pub fn default_table_request(n2: Option<u64>) -> TableRequest {
    TableRequest {
        rows: BCH_COMPARISON_ROWS
            .iter()
            .map(|&(m, delta, eta1, eta2, lo)| RowRequest { m, delta, eta1, eta2, n2: vec![n2.unwrap_or(lo)] })
            .collect(),
    }
}

fn table_text(rows: &[TableRow]) -> String {
    let mut s = String::from("m  δ1 η1 η2     n2  QTPC                      CQC                       range  cross  larger\n");
    for r in rows {
        let p = |p: &Params| format!("[[{}, {}, {}]]", p.n, p.k, p.d);
        s.push_str(&format!(
            "{:<2} {:<2} {:<2} {:<2} {:>6}  {:<25} {:<25} {:<6} {:<6} {}\n",
            r.m,
            r.delta,
            r.eta1,
            r.eta2,
            r.n2,
            p(&r.qtpc),
            p(&r.cqc),
            if r.in_range { "ok" } else { "OUT" },
            if r.crossover { "yes" } else { "no" },
            if r.qtpc_larger { "QTPC" } else { "CQC" }
        ));
    }
    s
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("m,delta,eta1,eta2,n2,rho1,qtpc_n,qtpc_k,qtpc_d,cqc_n,cqc_k,cqc_d,n2_min,n2_max,in_range,crossover,qtpc_larger\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.m, r.delta, r.eta1, r.eta2, r.n2, r.rho1, r.qtpc.n, r.qtpc.k, r.qtpc.d, r.cqc.n, r.cqc.k, r.cqc.d,
            r.n2_min, r.n2_max, r.in_range, r.crossover, r.qtpc_larger
        ));
    }
    s
}

/// `csv` selects CSV instead of JSON for the document.
pub fn cmd_table(request: Option<&str>, n2: Option<u64>, csv: bool) -> Result<Output> {
    let req = match request {
        Some(t) => serde_json::from_str::<TableRequest>(t).map_err(|e| Error::Usage(format!("invalid table request: {e}")))?,
        None => default_table_request(n2),
    };
    let mut rows = Vec::new();
    for r in &req.rows {
        for &n2 in &r.n2 {
            rows.push(table_row(r.m, r.delta, r.eta1, r.eta2, n2)?);
        }
    }
    let document = if csv { table_csv(&rows) } else { json(&rows) };
    Ok(Output { code: EXIT_OK, text: table_text(&rows), document })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareRequest {
    pub m: u32,
    pub delta: usize,
    pub eta1: usize,
    pub eta2: usize,
    pub n2: u64,
}

pub fn cmd_compare(request: &str) -> Result<Output> {
    let r: CompareRequest =
        serde_json::from_str(request).map_err(|e| Error::Usage(format!("invalid compare request: {e}")))?;
    let row = table_row(r.m, r.delta, r.eta1, r.eta2, r.n2)?;
    let text = format!(
        "QTPC [[{}, {}, {}]] vs CQC [[{}, {}, {}]]: {} has the larger dimension{}\n",
        row.qtpc.n,
        row.qtpc.k,
        row.qtpc.d,
        row.cqc.n,
        row.cqc.k,
        row.cqc.d,
        if row.qtpc_larger { "QTPC" } else { "CQC" },
        if row.in_range { "" } else { " (n2 outside the row's range)" }
    );
    Ok(Output { code: EXIT_OK, text, document: json(&row) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurstDoc {
    pub subblock: usize,
    pub start: usize,
    /// Pauli symbols `X`, `Z`, `Y`, `I`.
    pub paulis: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureDoc {
    pub bursts: Vec<BurstDoc>,
    pub sides: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub l: usize,
    pub mode: String,
    pub seed: u64,
    pub patterns: u64,
    pub successes: u64,
    pub failures: u64,
    pub first_failure: Option<FailureDoc>,
}

fn pattern_doc(p: &BurstPattern, sides: &[Side]) -> FailureDoc {
    let sym = |v: Elem| ['I', 'X', 'Z', 'Y'][v as usize & 3];
    FailureDoc {
        bursts: p
            .bursts
            .iter()
            .map(|b| BurstDoc { subblock: b.subblock, start: b.start, paulis: b.values.iter().map(|&v| sym(v)).collect() })
            .collect(),
        sides: sides.iter().map(|s| format!("{s:?}")).collect(),
    }
}

fn sim_report(n: usize, k: usize, r: &CapabilityReport) -> SimReport {
    SimReport {
        n,
        k,
        t: r.t,
        l: r.l,
        mode: r.mode.name().into(),
        seed: r.seed,
        patterns: r.patterns,
        successes: r.successes,
        failures: r.failures,
        first_failure: r.first_failure.as_ref().map(|f| pattern_doc(&f.pattern, &f.sides)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimOptions {
    pub t: Option<usize>,
    pub l: Option<usize>,
    pub trials: u64,
    pub seed: u64,
    pub budget: u64,
    /// Also report every burst count from 0 to `t` (CSV rows).
    pub sweep: bool,
}

/// Burst decoding simulation; the document is the JSON report, followed by
/// the per-t CSV in `Output::text` when `sweep` is set.
pub fn cmd_decode_sim(input: &str, opt: &SimOptions) -> Result<(Output, Option<String>)> {
    let spec = spec_from_input(input)?;
    let (q, fire) = match spec.build(None)? {
        Built::Quantum { code, fire } => (code, fire),
        Built::Classical { .. } => return Err(Error::Usage("decode-sim needs a quantum code spec".into())),
    };
    let burst = q.burst;
    let t = opt.t.or(burst.map(|b| b.t)).ok_or_else(|| Error::Usage("--t is required for codes without burst metadata".into()))?;
    let l = opt.l.or(burst.map(|b| b.l)).ok_or_else(|| Error::Usage("--l is required for codes without burst metadata".into()))?;
    let dec = match &fire {
        Some(f) => QuantumDecoder::with_inner(&q, InnerDecoder::fire(f)?)?,
        None => QuantumDecoder::new(&q)?,
    };
    let rep = capability_report(&dec, &q, t, l, opt.trials, opt.seed, opt.budget)?;
    let doc = sim_report(q.n, q.k, &rep);
    let mut text = format!(
        "[[{}, {}]] t = {t}, l = {l}: {} {} patterns, {} failures\n",
        q.n, q.k, doc.mode, doc.patterns, doc.failures
    );
    if let Some(f) = &doc.first_failure {
        text.push_str(&format!("first failure: {}\n", serde_json::to_string(f).expect("serializable")));
    }
    let csv = if opt.sweep {
        let mut s = String::from("t,mode,patterns,successes,failures,success_rate\n");
        for tt in 0..=t {
            let r = capability_report(&dec, &q, tt, l, opt.trials, opt.seed, opt.budget)?;
            let rate = r.success_rate().map(|x| format!("{x:.6}")).unwrap_or_default();
            s.push_str(&format!("{tt},{},{},{},{},{rate}\n", r.mode.name(), r.patterns, r.successes, r.failures));
        }
        Some(s)
    } else {
        None
    };
    let code = if rep.failures == 0 { EXIT_OK } else { EXIT_FAIL };
    Ok((Output { code, text, document: json(&doc) }, csv))
}

/// Default budget for exhaustive enumeration.
pub const DEFAULT_SIM_BUDGET: u64 = 1 << 20;
pub const DEFAULT_DISTANCE_BUDGET: u64 = DEFAULT_BUDGET;
