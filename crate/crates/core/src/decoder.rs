//! Two-stage decoding of tensor product codes, burst error patterns, and
//! capability checks for the burst-correcting quantum codes.
//!
//! Errors are handled at the classical symplectic level: the syndrome of
//! `X^a Z^b` is `(H_Z·a, H_X·b)`, with no measurement noise.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::codes::{weight, LinearCode};
use crate::error::{usage, Error, Result};
use crate::families::FireCode;
use crate::galois::{Elem, Field};
use crate::matgf::{GfMatrix, RowSpace};
use crate::quantum::StabilizerCode;
use crate::tpc::TensorProductCode;

/// Pauli error `X^a Z^b` on `n` qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliErrorVector {
    pub a: Vec<Elem>,
    pub b: Vec<Elem>,
}

impl PauliErrorVector {
    pub fn identity(n: usize) -> PauliErrorVector {
        PauliErrorVector { a: vec![0; n], b: vec![0; n] }
    }

    /// From symbols `0 = I`, `1 = X`, `2 = Z`, `3 = Y`.
    pub fn from_symbols(s: &[Elem]) -> PauliErrorVector {
        PauliErrorVector {
            a: s.iter().map(|&x| x & 1).collect(),
            b: s.iter().map(|&x| (x >> 1) & 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn weight(&self) -> usize {
        self.a.iter().zip(&self.b).filter(|(&a, &b)| a != 0 || b != 0).count()
    }

    pub fn add(&self, other: &PauliErrorVector) -> PauliErrorVector {
        let x = |u: &[Elem], v: &[Elem]| u.iter().zip(v).map(|(a, b)| a ^ b).collect();
        PauliErrorVector { a: x(&self.a, &other.a), b: x(&self.b, &other.b) }
    }
}

/// Symbol alphabet of burst values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// Single nonzero bit value.
    Binary,
    /// `X`, `Z`, `Y` encoded as 1, 2, 3.
    Pauli,
}

impl Alphabet {
    fn nonzero(&self) -> u64 {
        match self {
            Alphabet::Binary => 1,
            Alphabet::Pauli => 3,
        }
    }
}

/// A burst in one subblock: `values` start at offset `start`, with nonzero
/// first and last entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Burst {
    pub subblock: usize,
    pub start: usize,
    pub values: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurstPattern {
    pub n1: usize,
    pub n2: usize,
    pub l: usize,
    pub bursts: Vec<Burst>,
}

impl BurstPattern {
    pub fn t(&self) -> usize {
        self.bursts.len()
    }

    /// Confinement, distinct subblocks, length bound, nonzero endpoints.
    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.n2];
        self.bursts.iter().all(|b| {
            let len = b.values.len();
            let ok = b.subblock < self.n2
                && !seen[b.subblock]
                && (1..=self.l).contains(&len)
                && b.start + len <= self.n1
                && b.values[0] != 0
                && b.values[len - 1] != 0;
            if ok {
                seen[b.subblock] = true;
            }
            ok
        })
    }

    /// Symbol vector of length `n1·n2`.
    pub fn to_symbols(&self) -> Vec<Elem> {
        let mut v = vec![0; self.n1 * self.n2];
        for b in &self.bursts {
            let off = b.subblock * self.n1 + b.start;
            v[off..off + b.values.len()].copy_from_slice(&b.values);
        }
        v
    }

    pub fn to_pauli(&self) -> PauliErrorVector {
        PauliErrorVector::from_symbols(&self.to_symbols())
    }
}

fn check_burst_args(n1: usize, n2: usize, t: usize, l: usize) -> Result<()> {
    if t > n2 {
        return Err(usage!("{t} bursts in distinct subblocks need t ≤ n2 = {n2}"));
    }
    if t > 0 && (l == 0 || l > n1) {
        return Err(usage!("burst length {l} outside 1..={n1}"));
    }
    Ok(())
}

/// Bursts of length exactly `len` inside one subblock of length `n1`.
fn bursts_of_len(n1: usize, len: usize, a: u64) -> u128 {
    if len == 0 || len > n1 {
        return 0;
    }
    let ends = if len == 1 { a } else { a * a };
    let inner = (a + 1) as u128;
    (n1 - len + 1) as u128 * ends as u128 * inner.pow(len.saturating_sub(2) as u32)
}

fn single_bursts(n1: usize, l: usize, a: u64) -> u128 {
    (1..=l).map(|len| bursts_of_len(n1, len, a)).sum()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of patterns with exactly `t` bursts of length ≤ `l`.
pub fn count_burst_patterns(n1: usize, n2: usize, t: usize, l: usize, alphabet: Alphabet) -> u128 {
    if t == 0 {
        return 1;
    }
    let per = single_bursts(n1, l, alphabet.nonzero());
    binomial(n2, t).saturating_mul(per.saturating_pow(t as u32))
}

/// All bursts of length ≤ `l` in one subblock, in a fixed order.
fn local_bursts(n1: usize, l: usize, alphabet: Alphabet) -> Vec<(usize, Vec<Elem>)> {
    let a = alphabet.nonzero() as Elem;
    let mut out = Vec::new();
    for len in 1..=l.min(n1) {
        for start in 0..=n1 - len {
            let mut vals: Vec<Elem> = (0..len).map(|i| (i == 0 || i == len - 1) as Elem).collect();
            'odometer: loop {
                out.push((start, vals.clone()));
                for (i, v) in vals.iter_mut().enumerate() {
                    let top = if i == 0 || i == len - 1 { a } else { a + 1 };
                    let lo = if i == 0 || i == len - 1 { 1 } else { 0 };
                    if *v + 1 < top + lo {
                        *v += 1;
                        continue 'odometer;
                    }
                    *v = lo;
                }
                break;
            }
        }
    }
    out
}

/// Visit every pattern of exactly `t` bursts of length ≤ `l` in distinct
/// subblocks; `visit` returns `false` to stop. Returns whether it ran to the end.
pub fn for_each_burst_pattern(
    n1: usize,
    n2: usize,
    t: usize,
    l: usize,
    alphabet: Alphabet,
    mut visit: impl FnMut(&BurstPattern) -> bool,
) -> Result<bool> {
    check_burst_args(n1, n2, t, l)?;
    let local = local_bursts(n1, l, alphabet);
    let mut pat = BurstPattern { n1, n2, l, bursts: Vec::new() };
    if t == 0 {
        return Ok(visit(&pat));
    }
    let mut blocks: Vec<usize> = (0..t).collect();
    loop {
        let mut pick = vec![0usize; t];
        'tuples: loop {
            pat.bursts = blocks
                .iter()
                .zip(&pick)
                .map(|(&sb, &p)| Burst { subblock: sb, start: local[p].0, values: local[p].1.clone() })
                .collect();
            if !visit(&pat) {
                return Ok(false);
            }
            for p in pick.iter_mut() {
                *p += 1;
                if *p < local.len() {
                    continue 'tuples;
                }
                *p = 0;
            }
            break;
        }
        // next t-subset of 0..n2 in lexicographic order
        let mut i = t;
        while i > 0 && blocks[i - 1] == n2 - t + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(true);
        }
        blocks[i - 1] += 1;
        for j in i..t {
            blocks[j] = blocks[j - 1] + 1;
        }
    }
}

pub fn enumerate_burst_patterns(
    n1: usize,
    n2: usize,
    t: usize,
    l: usize,
    alphabet: Alphabet,
) -> Result<Vec<BurstPattern>> {
    let mut out = Vec::new();
    for_each_burst_pattern(n1, n2, t, l, alphabet, |p| {
        out.push(p.clone());
        true
    })?;
    Ok(out)
}

/// Uniform sample from the patterns of exactly `t` bursts of length ≤ `l`.
pub fn sample_burst_pattern<R: Rng>(
    rng: &mut R,
    n1: usize,
    n2: usize,
    t: usize,
    l: usize,
    alphabet: Alphabet,
) -> Result<BurstPattern> {
    check_burst_args(n1, n2, t, l)?;
    let a = alphabet.nonzero() as Elem;
    let mut blocks: Vec<usize> = (0..n2).collect();
    for i in 0..t {
        let j = rng.gen_range(i..n2);
        blocks.swap(i, j);
    }
    let mut bursts: Vec<Burst> = Vec::with_capacity(t);
    let total = single_bursts(n1, l, a as u64);
    for &sb in &blocks[..t] {
        let mut x = rng.gen_range(0..total);
        let mut len = 1;
        while x >= bursts_of_len(n1, len, a as u64) {
            x -= bursts_of_len(n1, len, a as u64);
            len += 1;
        }
        let start = rng.gen_range(0..=n1 - len);
        let values = (0..len)
            .map(|i| if i == 0 || i == len - 1 { rng.gen_range(1..=a) } else { rng.gen_range(0..=a) })
            .collect();
        bursts.push(Burst { subblock: sb, start, values });
    }
    bursts.sort_by_key(|b| b.subblock);
    Ok(BurstPattern { n1, n2, l, bursts })
}

/// Solves `H·e = s` on a fixed set of pivot columns.
#[derive(Clone, Debug)]
pub struct CosetSolver {
    n: usize,
    pivots: Vec<usize>,
    inv: GfMatrix,
}

impl CosetSolver {
    fn new(h: &GfMatrix) -> Result<CosetSolver> {
        let (_, pivots) = h.rref();
        if pivots.len() != h.rows() {
            return Err(usage!("parity check rows are dependent"));
        }
        let inv = h.select_cols(&pivots).inverse()?;
        Ok(CosetSolver { n: h.cols(), pivots, inv })
    }

    fn solve(&self, s: &[Elem]) -> Vec<Elem> {
        let x = self.inv.mul_vec(s).expect("syndrome length");
        let mut e = vec![0; self.n];
        for (&p, v) in self.pivots.iter().zip(x) {
            e[p] = v;
        }
        e
    }
}

/// Decoder for the inner code `C1`, fed with `H1`-syndromes.
#[derive(Clone, Debug)]
pub enum InnerDecoder {
    /// Binary repetition code: majority vote over the coset.
    Majority { solver: CosetSolver, n: usize },
    /// Coset leaders from the declared error class.
    Table { field: Field, leaders: BTreeMap<Vec<Elem>, Vec<Elem>> },
    /// Cyclic burst trapping for a Fire code.
    Trapping { solver: CosetSolver, g: Vec<Elem>, n: usize, l: usize },
}

/// Cap on the number of error patterns put into a syndrome table.
pub const TABLE_MAX: u64 = 1 << 20;

fn is_repetition(c: &LinearCode) -> bool {
    c.field().is_binary() && c.k() == 1 && c.contains(&vec![1; c.n()]).unwrap_or(false)
}

impl InnerDecoder {
    /// Majority for repetition codes, otherwise a table holding bursts of
    /// length ≤ `l` (when given) and then errors of weight ≤ ⌊(d1−1)/2⌋.
    pub fn for_code(c1: &LinearCode, l: Option<usize>) -> Result<InnerDecoder> {
        if is_repetition(c1) {
            return InnerDecoder::majority(c1);
        }
        let t = c1.distance().value.saturating_sub(1) / 2;
        InnerDecoder::table(c1, l, t)
    }

    pub fn majority(c1: &LinearCode) -> Result<InnerDecoder> {
        if !is_repetition(c1) {
            return Err(usage!("majority decoding needs a binary repetition code"));
        }
        Ok(InnerDecoder::Majority { solver: CosetSolver::new(c1.h())?, n: c1.n() })
    }

    pub fn table(c1: &LinearCode, l: Option<usize>, t: usize) -> Result<InnerDecoder> {
        let f = c1.field().clone();
        let n = c1.n();
        let a = (f.q() - 1) as u64;
        let mut cost = 1u128;
        if let Some(l) = l {
            cost += single_bursts(n, l, a);
        }
        cost += (1..=t).map(|w| binomial(n, w) * (a as u128).pow(w as u32)).sum::<u128>();
        if cost > TABLE_MAX as u128 {
            return Err(usage!("syndrome table would hold {cost} patterns (limit {TABLE_MAX})"));
        }
        let mut leaders = BTreeMap::new();
        let h = c1.h();
        let mut insert = |e: Vec<Elem>| {
            let s = h.mul_vec(&e).expect("length");
            leaders.entry(s).or_insert(e);
        };
        insert(vec![0; n]);
        if let Some(l) = l {
            for (start, vals) in local_bursts(n, l.min(n), Alphabet::Binary) {
                let mut e = vec![0; n];
                e[start..start + vals.len()].copy_from_slice(&vals);
                for_each_scaling(&f, &e, &mut insert);
            }
        }
        for w in 1..=t.min(n) {
            let mut supp: Vec<usize> = (0..w).collect();
            loop {
                let mut e = vec![0; n];
                for &p in &supp {
                    e[p] = 1;
                }
                for_each_scaling(&f, &e, &mut insert);
                let mut i = w;
                while i > 0 && supp[i - 1] == n - w + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                supp[i - 1] += 1;
                for j in i..w {
                    supp[j] = supp[j - 1] + 1;
                }
            }
        }
        Ok(InnerDecoder::Table { field: f, leaders })
    }

    /// Burst trapping with the Fire code's generator.
    pub fn fire(fire: &FireCode) -> Result<InnerDecoder> {
        let c = fire.cyclic.code();
        let g = fire.cyclic.generator_poly().coeffs().to_vec();
        Ok(InnerDecoder::Trapping { solver: CosetSolver::new(c.h())?, g, n: c.n(), l: fire.spec.l })
    }

    /// Error estimate for an `H1`-syndrome, or `None` when uncorrectable.
    pub fn decode(&self, s: &[Elem]) -> Option<Vec<Elem>> {
        match self {
            InnerDecoder::Majority { solver, n } => {
                let mut e = solver.solve(s);
                let w = weight(&e);
                if 2 * w == *n {
                    return None;
                }
                if 2 * w > *n {
                    e.iter_mut().for_each(|x| *x ^= 1);
                }
                Some(e)
            }
            InnerDecoder::Table { leaders, .. } => leaders.get(s).cloned(),
            InnerDecoder::Trapping { solver, g, n, l } => {
                let e0 = solver.solve(s);
                if e0.iter().all(|&x| x == 0) {
                    return Some(e0);
                }
                trap(&e0, g, *n, *l)
            }
        }
    }
}

/// Every nonzero multiple `c·e` of a pattern.
fn for_each_scaling(f: &Field, e: &[Elem], visit: &mut impl FnMut(Vec<Elem>)) {
    // binary patterns scaled by each nonzero symbol, and position-wise
    // combinations for larger fields are covered by the weight classes
    let q = f.q();
    let nz: Vec<usize> = (0..e.len()).filter(|&i| e[i] != 0).collect();
    let mut vals = vec![1 as Elem; nz.len()];
    loop {
        let mut v = e.to_vec();
        for (&p, &x) in nz.iter().zip(&vals) {
            v[p] = x;
        }
        visit(v);
        let mut i = 0;
        while i < vals.len() {
            vals[i] += 1;
            if vals[i] < q {
                break;
            }
            vals[i] = 1;
            i += 1;
        }
        if i == vals.len() {
            return;
        }
    }
}

/// `p mod g` over GF(2), coefficient vectors low degree first.
fn poly_mod2(p: &[Elem], g: &[Elem]) -> Vec<Elem> {
    let dg = g.len() - 1;
    let mut r = p.to_vec();
    for i in (dg..r.len()).rev() {
        if r[i] != 0 {
            for (j, &c) in g.iter().enumerate() {
                r[i - dg + j] ^= c;
            }
        }
    }
    r.truncate(dg);
    r.resize(dg, 0);
    r
}

/// Shift the remainder until it fits in the lowest `l` positions.
fn trap(e0: &[Elem], g: &[Elem], n: usize, l: usize) -> Option<Vec<Elem>> {
    let dg = g.len() - 1;
    let mut r = poly_mod2(e0, g);
    for i in 0..n {
        if r[l.min(dg)..].iter().all(|&x| x == 0) {
            let mut e = vec![0; n];
            for (j, &x) in r.iter().enumerate().take(l) {
                e[(j + n - i) % n] = x;
            }
            return Some(e);
        }
        // r ← x·r mod g
        let top = r[dg - 1];
        for j in (1..dg).rev() {
            r[j] = r[j - 1];
        }
        r[0] = 0;
        if top != 0 {
            for j in 0..dg {
                r[j] ^= g[j];
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Locator {
    Point(Elem),
    Zero,
    Infinity,
}

/// Bounded-distance decoder for a generalized Reed–Solomon outer code
/// (columns `u_j·(1, x_j, …, x_j^{r−1})ᵀ`, plus the point zero and the
/// point at infinity), recognised from its parity check.
#[derive(Clone, Debug)]
pub struct OuterDecoder {
    h: GfMatrix,
    loc: Vec<Locator>,
}

/// Coefficients low degree first.
fn eval_coeffs(f: &Field, c: &[Elem], x: Elem) -> Elem {
    c.iter().rev().fold(0, |acc, &a| f.add(f.mul(acc, x), a))
}

fn berlekamp_massey(f: &Field, s: &[Elem]) -> (Vec<Elem>, usize) {
    let mut c = vec![1 as Elem];
    let mut b = vec![1 as Elem];
    let (mut l, mut m, mut bb) = (0usize, 1usize, 1 as Elem);
    for n in 0..s.len() {
        let mut d = s[n];
        for i in 1..=l.min(c.len() - 1) {
            d ^= f.mul(c[i], s[n - i]);
        }
        if d == 0 {
            m += 1;
            continue;
        }
        let coef = f.div(d, bb).expect("nonzero");
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, 0);
        }
        for (i, &x) in b.iter().enumerate() {
            c[i + m] ^= f.mul(coef, x);
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            bb = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.truncate(l + 1);
    (c, l)
}

impl OuterDecoder {
    pub fn new(c2: &LinearCode) -> Result<OuterDecoder> {
        let h = c2.h().clone();
        let f = h.field().clone();
        let r = h.rows();
        let not_grs = || usage!("outer code is not a recognisable generalized Reed–Solomon code");
        let mut loc = Vec::with_capacity(h.cols());
        for j in 0..h.cols() {
            let col = h.col(j);
            let l = if r == 0 {
                Locator::Point(1)
            } else if col[0] == 0 {
                if col[r - 1] == 0 || col[..r - 1].iter().any(|&x| x != 0) {
                    return Err(not_grs());
                }
                Locator::Infinity
            } else if r == 1 {
                Locator::Point(1)
            } else {
                let x = f.div(col[1], col[0])?;
                let mut p = col[0];
                for &c in &col {
                    if c != p {
                        return Err(not_grs());
                    }
                    p = f.mul(p, x);
                }
                if x == 0 {
                    Locator::Zero
                } else {
                    Locator::Point(x)
                }
            };
            loc.push(l);
        }
        if r >= 2 {
            let mut seen = loc.clone();
            seen.sort_by_key(|l| match l {
                Locator::Point(x) => *x as u64,
                Locator::Zero => u64::MAX - 1,
                Locator::Infinity => u64::MAX,
            });
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err(not_grs());
            }
        }
        Ok(OuterDecoder { h, loc })
    }

    /// `⌊r/2⌋` symbol errors.
    pub fn radius(&self) -> usize {
        self.h.rows() / 2
    }

    fn solve_on(&self, support: &[usize], s: &[Elem]) -> Option<Vec<Elem>> {
        let f = self.h.field();
        let sub = self.h.select_cols(support);
        let col = GfMatrix::from_data(f, s.len(), 1, s.to_vec()).ok()?;
        let (red, piv) = sub.hstack(&col).ok()?.rref();
        let w = support.len();
        if piv.len() != w || piv.iter().any(|&p| p >= w) {
            return None;
        }
        let mut e = vec![0; self.h.cols()];
        for (i, &p) in support.iter().enumerate() {
            e[p] = red.get(i, w);
        }
        Some(e)
    }

    /// Error vector of weight ≤ radius with syndrome `s`, if one exists.
    pub fn decode_syndrome(&self, s: &[Elem]) -> Option<Vec<Elem>> {
        let f = self.h.field();
        let r = self.h.rows();
        let n = self.h.cols();
        if s.len() != r {
            return None;
        }
        if s.iter().all(|&x| x == 0) {
            return Some(vec![0; n]);
        }
        let t = self.radius();
        let zero = self.loc.iter().position(|l| *l == Locator::Zero);
        let inf = self.loc.iter().position(|l| *l == Locator::Infinity);
        for (with_zero, with_inf) in [(false, false), (false, true), (true, false), (true, true)] {
            if (with_zero && zero.is_none()) || (with_inf && inf.is_none()) {
                continue;
            }
            let lo = with_zero as usize;
            let hi = r - with_inf as usize;
            if lo > hi {
                continue;
            }
            let (lambda, nu) = berlekamp_massey(f, &s[lo..hi]);
            if 2 * nu > hi - lo {
                continue;
            }
            let mut support: Vec<usize> = (0..n)
                .filter(|&j| match self.loc[j] {
                    Locator::Point(x) => {
                        let xi = f.inv(x).expect("nonzero locator");
                        eval_coeffs(f, &lambda, xi) == 0
                    }
                    _ => false,
                })
                .collect();
            if support.len() != nu {
                continue;
            }
            support.extend(zero.filter(|_| with_zero));
            support.extend(inf.filter(|_| with_inf));
            if support.len() > t {
                continue;
            }
            if let Some(e) = self.solve_on(&support, s) {
                if weight(&e) <= t && self.h.mul_vec(&e).ok()? == s {
                    return Some(e);
                }
            }
        }
        None
    }

    /// Nearest codeword within the radius.
    pub fn decode_word(&self, y: &[Elem]) -> Option<Vec<Elem>> {
        let s = self.h.mul_vec(y).ok()?;
        let e = self.decode_syndrome(&s)?;
        Some(y.iter().zip(&e).map(|(a, b)| a ^ b).collect())
    }
}

/// Why two-stage decoding gave up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodeFailure {
    /// Outer syndrome beyond the outer decoding radius.
    Outer,
    /// Inner syndrome of a flagged subblock not in the table / not trapped.
    Inner { subblock: usize },
    /// The estimate does not reproduce the syndrome.
    Recheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TpcOutcome {
    Corrected(Vec<Elem>),
    Failed(DecodeFailure),
}

/// Outer decoding locates the erroneous subblocks and their inner
/// syndromes; inner decoding then corrects each flagged subblock.
#[derive(Clone, Debug)]
pub struct TpcDecoder {
    outer: OuterDecoder,
    inner: InnerDecoder,
}

impl TpcDecoder {
    pub fn new(t: &TensorProductCode, inner: InnerDecoder) -> Result<TpcDecoder> {
        Ok(TpcDecoder { outer: OuterDecoder::new(t.c2())?, inner })
    }

    /// Default inner decoder for `C1`, holding bursts of length ≤ `l` when given.
    pub fn for_code(t: &TensorProductCode, l: Option<usize>) -> Result<TpcDecoder> {
        TpcDecoder::new(t, InnerDecoder::for_code(t.c1(), l)?)
    }

    pub fn inner(&self) -> &InnerDecoder {
        &self.inner
    }

    pub fn outer(&self) -> &OuterDecoder {
        &self.outer
    }

    /// Decode a base-field syndrome `h_base·v`.
    pub fn decode(&self, t: &TensorProductCode, s: &[Elem]) -> Result<TpcOutcome> {
        let outer_s = t.outer_syndrome(s)?;
        let Some(sigma) = self.outer.decode_syndrome(&outer_s) else {
            return Ok(TpcOutcome::Failed(DecodeFailure::Outer));
        };
        let n1 = t.n1();
        let mut e = vec![0; t.n()];
        for (j, &sj) in sigma.iter().enumerate() {
            if sj == 0 {
                continue;
            }
            let Some(ej) = self.inner.decode(&t.h1_syndrome(sj)) else {
                return Ok(TpcOutcome::Failed(DecodeFailure::Inner { subblock: j }));
            };
            e[j * n1..(j + 1) * n1].copy_from_slice(&ej);
        }
        if t.h_base().mul_vec(&e)? != s {
            return Ok(TpcOutcome::Failed(DecodeFailure::Recheck));
        }
        Ok(TpcOutcome::Corrected(e))
    }
}

/// Two-stage decoding with the default decoders for `t`.
pub fn decode_tpc(t: &TensorProductCode, s: &[Elem]) -> Result<TpcOutcome> {
    TpcDecoder::for_code(t, None)?.decode(t, s)
}

/// Which error component a side corrects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The `a` part, seen by the Z-type checks.
    X,
    /// The `b` part, seen by the X-type checks.
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SideOutcome {
    /// Residual lies in the stabilizer.
    Recovered,
    /// Decoded, but the residual is a nontrivial logical operator.
    Logical,
    Failed(DecodeFailure),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumOutcome {
    pub x: SideOutcome,
    pub z: SideOutcome,
}

impl QuantumOutcome {
    pub fn success(&self) -> bool {
        self.x == SideOutcome::Recovered && self.z == SideOutcome::Recovered
    }

    pub fn failed_sides(&self) -> Vec<Side> {
        let mut v = Vec::new();
        if self.x != SideOutcome::Recovered {
            v.push(Side::X);
        }
        if self.z != SideOutcome::Recovered {
            v.push(Side::Z);
        }
        v
    }
}

/// Decoders for both sides of a tensor-product CSS code.
#[derive(Clone, Debug)]
pub struct QuantumDecoder {
    x: TpcDecoder,
    z: TpcDecoder,
    x_stab: RowSpace,
    z_stab: RowSpace,
}

impl QuantumDecoder {
    /// Default inner decoders, sized by the code's burst metadata.
    pub fn new(q: &StabilizerCode) -> Result<QuantumDecoder> {
        let sides = sides_of(q)?;
        let l = q.burst.map(|b| b.l);
        let inner = InnerDecoder::for_code(sides.x_side.c1(), l)?;
        QuantumDecoder::with_inner(q, inner)
    }

    /// Same inner decoder on both sides (they share `C1`).
    pub fn with_inner(q: &StabilizerCode, inner: InnerDecoder) -> Result<QuantumDecoder> {
        let sides = sides_of(q)?;
        let css = q.css.as_ref().ok_or_else(|| usage!("decoding needs a CSS code"))?;
        Ok(QuantumDecoder {
            x: TpcDecoder::new(&sides.x_side, inner.clone())?,
            z: TpcDecoder::new(&sides.z_side, inner)?,
            x_stab: RowSpace::new(&css.hx),
            z_stab: RowSpace::new(&css.hz),
        })
    }

    fn side(&self, t: &TensorProductCode, dec: &TpcDecoder, stab: &RowSpace, v: &[Elem]) -> Result<SideOutcome> {
        let s = t.h_base().mul_vec(v)?;
        Ok(match dec.decode(t, &s)? {
            TpcOutcome::Failed(f) => SideOutcome::Failed(f),
            TpcOutcome::Corrected(e) => {
                let res: Vec<Elem> = e.iter().zip(v).map(|(a, b)| a ^ b).collect();
                if stab.contains(&res) {
                    SideOutcome::Recovered
                } else {
                    SideOutcome::Logical
                }
            }
        })
    }
}

fn sides_of(q: &StabilizerCode) -> Result<&crate::quantum::TensorSides> {
    q.sides
        .as_deref()
        .ok_or_else(|| usage!("code from {} carries no tensor product sides", q.provenance.name()))
}

/// Decode both components of `e` independently from their syndromes.
pub fn qecc_decode(dec: &QuantumDecoder, q: &StabilizerCode, e: &PauliErrorVector) -> Result<QuantumOutcome> {
    let sides = sides_of(q)?;
    if e.n() != q.n || e.b.len() != q.n {
        return Err(usage!("error on {} qubits for a code on {}", e.n(), q.n));
    }
    Ok(QuantumOutcome {
        x: dec.side(&sides.x_side, &dec.x, &dec.x_stab, &e.a)?,
        z: dec.side(&sides.z_side, &dec.z, &dec.z_stab, &e.b)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    MonteCarlo,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::MonteCarlo => "mc",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureRecord {
    pub pattern: BurstPattern,
    pub sides: Vec<Side>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapabilityReport {
    pub mode: Mode,
    pub t: usize,
    pub l: usize,
    pub seed: u64,
    pub patterns: u64,
    pub successes: u64,
    pub failures: u64,
    pub first_failure: Option<FailureRecord>,
}

impl CapabilityReport {
    /// `None` when no pattern was tried.
    pub fn success_rate(&self) -> Option<f64> {
        (self.patterns > 0).then(|| self.successes as f64 / self.patterns as f64)
    }
}

/// Decoder over `(seed, trial)`: the stream of trial `i` is independent of
/// the order in which trials run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Pauli bursts in distinct subblocks. Exhaustive over all patterns with
/// at most `t` bursts when their number is within `budget`, else `trials`
/// Monte Carlo samples of exactly `t` bursts. `trials = 0` gives an empty
/// report.
pub fn capability_report(
    dec: &QuantumDecoder,
    q: &StabilizerCode,
    t: usize,
    l: usize,
    trials: u64,
    seed: u64,
    budget: u64,
) -> Result<CapabilityReport> {
    let sides = sides_of(q)?;
    let (n1, n2) = (sides.x_side.n1(), sides.x_side.n2());
    check_burst_args(n1, n2, t, l)?;
    let total: u128 = (0..=t).map(|k| count_burst_patterns(n1, n2, k, l, Alphabet::Pauli)).sum();
    let mut rep = CapabilityReport {
        mode: Mode::MonteCarlo,
        t,
        l,
        seed,
        patterns: 0,
        successes: 0,
        failures: 0,
        first_failure: None,
    };
    if trials == 0 {
        return Ok(rep);
    }
    let record = |rep: &mut CapabilityReport, p: &BurstPattern| -> Result<()> {
        let out = qecc_decode(dec, q, &p.to_pauli())?;
        rep.patterns += 1;
        if out.success() {
            rep.successes += 1;
        } else {
            rep.failures += 1;
            if rep.first_failure.is_none() {
                rep.first_failure = Some(FailureRecord { pattern: p.clone(), sides: out.failed_sides() });
            }
        }
        Ok(())
    };
    if total <= budget as u128 {
        rep.mode = Mode::Exhaustive;
        let mut err: Option<Error> = None;
        for k in 0..=t {
            for_each_burst_pattern(n1, n2, k, l, Alphabet::Pauli, |p| match record(&mut rep, p) {
                Ok(()) => true,
                Err(e) => {
                    err = Some(e);
                    false
                }
            })?;
            if let Some(e) = err.take() {
                return Err(e);
            }
        }
    } else {
        for i in 0..trials {
            let p = sample_burst_pattern(&mut trial_rng(seed, i), n1, n2, t, l, Alphabet::Pauli)?;
            record(&mut rep, &p)?;
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::families::{fire_code, reed_solomon, repetition};
    use crate::galois::Poly;
    use crate::quantum::qtpc_repetition_burst;
    use crate::tpc::{tpc_build, Variant};

    #[test]
    fn pattern_counts() {
        assert_eq!(enumerate_burst_patterns(3, 2, 0, 1, Alphabet::Binary).unwrap().len(), 1);
        assert_eq!(enumerate_burst_patterns(3, 2, 1, 1, Alphabet::Binary).unwrap().len(), 6);
        let all = enumerate_burst_patterns(3, 4, 2, 1, Alphabet::Binary).unwrap();
        assert_eq!(all.len(), 54);
        assert_eq!(count_burst_patterns(3, 4, 2, 1, Alphabet::Binary), 54);
        for len in 1..=4 {
            let n = enumerate_burst_patterns(6, 3, 2, len, Alphabet::Pauli).unwrap().len() as u128;
            assert_eq!(n, count_burst_patterns(6, 3, 2, len, Alphabet::Pauli));
        }
        let mut sorted = all.clone();
        sorted.sort_by_key(|p| p.to_symbols());
        sorted.dedup();
        assert_eq!(sorted.len(), 54);
        assert!(all.iter().all(|p| p.is_valid()));
        assert!(enumerate_burst_patterns(3, 2, 3, 1, Alphabet::Binary).is_err());
    }

    #[test]
    fn samples_are_valid() {
        for i in 0..200 {
            let p = sample_burst_pattern(&mut trial_rng(7, i), 15, 9, 2, 2, Alphabet::Pauli).unwrap();
            assert!(p.is_valid() && p.t() == 2);
        }
        assert_eq!(
            sample_burst_pattern(&mut trial_rng(7, 3), 15, 9, 2, 2, Alphabet::Pauli).unwrap(),
            sample_burst_pattern(&mut trial_rng(7, 3), 15, 9, 2, 2, Alphabet::Pauli).unwrap()
        );
    }

    #[test]
    fn rs_decoding() {
        let f = Field::new(3).unwrap();
        let rs = reed_solomon(&f, 7, 5).unwrap();
        let dec = OuterDecoder::new(rs.code()).unwrap();
        assert_eq!(dec.decode_syndrome(&[0, 0]), Some(vec![0; 7]));
        for pos in 0..7 {
            for v in 1..8 {
                let mut e = vec![0; 7];
                e[pos] = v;
                let s = rs.code().syndrome(&e).unwrap();
                assert_eq!(dec.decode_syndrome(&s), Some(e));
            }
        }
        let rs = reed_solomon(&f, 7, 3).unwrap();
        let dec = OuterDecoder::new(rs.code()).unwrap();
        let mut flagged = 0;
        for p1 in 0..7 {
            for p2 in p1 + 1..7 {
                for (v1, v2) in [(1, 1), (3, 5), (7, 2)] {
                    let mut e = vec![0; 7];
                    e[p1] = v1;
                    e[p2] = v2;
                    let s = rs.code().syndrome(&e).unwrap();
                    assert_eq!(dec.decode_syndrome(&s), Some(e.clone()));
                    e[(p2 + 1) % 7 + (p2 + 1 == p1) as usize] ^= 4;
                    if weight(&e) == 3 {
                        let s = rs.code().syndrome(&e).unwrap();
                        match dec.decode_syndrome(&s) {
                            None => flagged += 1,
                            Some(est) => assert!(est != e && weight(&est) <= 2),
                        }
                    }
                }
            }
        }
        assert!(flagged > 0);
    }

    #[test]
    fn rs_with_special_points() {
        let f = Field::new(3).unwrap();
        let rs = reed_solomon(&f, 9, 5).unwrap();
        let dec = OuterDecoder::new(rs.code()).unwrap();
        for p1 in 0..9 {
            for p2 in p1..9 {
                let mut e = vec![0; 9];
                e[p1] = 3;
                e[p2] ^= 6;
                let s = rs.code().syndrome(&e).unwrap();
                assert_eq!(dec.decode_syndrome(&s), Some(e), "{p1} {p2}");
            }
        }
    }

    #[test]
    fn repetition_syndrome() {
        let c = repetition(3).unwrap();
        let d = InnerDecoder::for_code(&c, None).unwrap();
        assert_eq!(d.decode(&[1, 0]), Some(vec![1, 0, 0]));
        assert_eq!(d.decode(&[0, 0]), Some(vec![0, 0, 0]));
        let table = InnerDecoder::table(&c, None, 1).unwrap();
        for s in [[0, 0], [1, 0], [0, 1], [1, 1]] {
            assert_eq!(d.decode(&s), table.decode(&s));
        }
    }

    #[test]
    fn fire_trapping_matches_table() {
        let fire = fire_code(&Poly::from_bits(0b1011), 2).unwrap();
        let c = fire.cyclic.code();
        let trap = InnerDecoder::fire(&fire).unwrap();
        let table = InnerDecoder::table(c, Some(2), 0).unwrap();
        for start in 0..21 {
            for vals in [vec![1], vec![1, 1], vec![1, 0]] {
                let mut e = vec![0; 21];
                for (i, &v) in vals.iter().enumerate() {
                    e[(start + i) % 21] = v;
                }
                let s = c.syndrome(&e).unwrap();
                assert_eq!(trap.decode(&s), Some(e.clone()));
                if start + 2 <= 21 {
                    assert_eq!(table.decode(&s), Some(e));
                }
            }
        }
    }

    #[test]
    fn two_stage_single_bursts() {
        let fire = fire_code(&Poly::from_bits(0b1011), 2).unwrap();
        let f64 = Field::new(6).unwrap();
        let rs = reed_solomon(&f64, 9, 6).unwrap();
        let t = tpc_build(fire.cyclic.code(), rs.code(), Variant::Psi).unwrap();
        assert_eq!((t.n(), t.k()), (189, 171));
        let dec = TpcDecoder::new(&t, InnerDecoder::fire(&fire).unwrap()).unwrap();
        let zero = vec![0; 72 / 4];
        assert_eq!(dec.decode(&t, &zero).unwrap(), TpcOutcome::Corrected(vec![0; 189]));
        let mut count = 0;
        for_each_burst_pattern(21, 9, 1, 2, Alphabet::Binary, |p| {
            let e = p.to_symbols();
            let s = t.h_base().mul_vec(&e).unwrap();
            assert_eq!(dec.decode(&t, &s).unwrap(), TpcOutcome::Corrected(e));
            count += 1;
            true
        })
        .unwrap();
        assert_eq!(count, 9 * (21 + 20));
    }

    #[test]
    fn twelve_qubit_code() {
        let q = qtpc_repetition_burst(3, 4).unwrap();
        let dec = QuantumDecoder::new(&q).unwrap();
        assert!(qecc_decode(&dec, &q, &PauliErrorVector::identity(12)).unwrap().success());
        let rep = capability_report(&dec, &q, 1, 1, 1, 0, 1 << 20).unwrap();
        assert_eq!((rep.mode, rep.patterns, rep.failures), (Mode::Exhaustive, 37, 0));
        let rep = capability_report(&dec, &q, 2, 1, 1, 0, 1 << 20).unwrap();
        assert!(rep.failures > 0 && rep.first_failure.is_some());
        let rep = capability_report(&dec, &q, 1, 1, 0, 0, 1 << 20).unwrap();
        assert_eq!((rep.patterns, rep.success_rate()), (0, None));
    }
}
