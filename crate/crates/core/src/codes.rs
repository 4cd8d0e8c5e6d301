//! Linear codes given by parity-check matrices.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{usage, Result};
use crate::galois::{trace_hermitian, Elem, Field};
use crate::matgf::{pack_bits, unpack_bits, BitMatrix, GfMatrix};

/// Largest dimension (in field symbols) enumerated codeword by codeword.
pub const K_MAX: usize = 22;
/// Largest weight tried by the column-dependency search.
pub const W_MAX: usize = 7;
/// Default work budget for distance computations.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// A minimum distance, or a lower bound on it.
///
/// `value == usize::MAX` with `exact` set means the code has no nonzero
/// codeword.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Distance {
    pub value: usize,
    pub exact: bool,
}

impl Distance {
    pub fn exact(value: usize) -> Distance {
        Distance { value, exact: true }
    }
    pub fn at_least(value: usize) -> Distance {
        Distance { value, exact: false }
    }
    pub fn infinite() -> Distance {
        Distance { value: usize::MAX, exact: true }
    }
}

/// A distance result with an optional minimum-weight codeword.
#[derive(Clone, Debug)]
pub struct DistanceResult {
    pub distance: Distance,
    pub witness: Option<Vec<Elem>>,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    h: GfMatrix,
    k: usize,
    d_exact: Option<usize>,
    d_lower: usize,
    /// Row count of the parity check as given, when rows had to be dropped.
    reduced_from: Option<usize>,
}

impl LinearCode {
    /// Code with parity check `h`; dependent rows are dropped (earliest kept).
    pub fn from_parity(h: &GfMatrix) -> LinearCode {
        let keep = h.independent_rows();
        let reduced_from = (keep.len() != h.rows()).then_some(h.rows());
        let h = if reduced_from.is_some() { h.select_rows(&keep) } else { h.clone() };
        let n = h.cols();
        let k = n - h.rows();
        LinearCode {
            field: h.field().clone(),
            n,
            h,
            k,
            d_exact: (k == n).then_some(1).filter(|_| n > 0),
            d_lower: 1,
            reduced_from,
        }
    }

    /// Code spanned by the rows of `g`.
    pub fn from_generator(g: &GfMatrix) -> LinearCode {
        LinearCode::from_parity(&g.null_space())
    }

    /// Record a known exact distance.
    pub fn with_distance(mut self, d: usize) -> LinearCode {
        self.d_exact = Some(d);
        self.d_lower = d;
        self
    }

    /// Record a lower bound (design distance).
    pub fn with_lower_bound(mut self, d: usize) -> LinearCode {
        self.d_lower = self.d_lower.max(d);
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// Number of check symbols ρ = n − k.
    pub fn rho(&self) -> usize {
        self.n - self.k
    }
    pub fn h(&self) -> &GfMatrix {
        &self.h
    }
    pub fn reduced_from(&self) -> Option<usize> {
        self.reduced_from
    }

    /// Best known distance information.
    pub fn distance(&self) -> Distance {
        match self.d_exact {
            Some(d) => Distance::exact(d),
            None => Distance::at_least(self.d_lower),
        }
    }

    pub fn generator(&self) -> GfMatrix {
        self.h.null_space()
    }

    pub fn syndrome(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.h.mul_vec(v)
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        Ok(self.syndrome(v)?.iter().all(|&x| x == 0))
    }

    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.k {
            return Err(usage!("message of length {} for dimension {}", msg.len(), self.k));
        }
        if self.k == 0 {
            return Ok(vec![0; self.n]);
        }
        self.generator().vec_mul(msg)
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_parity(&self.generator())
    }

    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        if self.field.m() != 2 {
            return Err(usage!("Hermitian dual needs GF(4)"));
        }
        Ok(LinearCode::from_parity(&self.generator().conjugate()))
    }

    /// `H·Hᵀ = 0`.
    pub fn is_dual_containing(&self) -> bool {
        self.h.mul_transpose(&self.h).expect("same code").is_zero()
    }

    /// `H·H† = 0` over GF(4).
    pub fn is_hermitian_dual_containing(&self) -> Result<bool> {
        Ok(self.h.matmul(&self.h.dagger()?)?.is_zero())
    }

    /// Self-orthogonality of the code under the trace-Hermitian form, checked
    /// on a GF(2) basis `{g, ω·g}` of the generator rows.
    pub fn is_trace_hermitian_self_orthogonal(&self) -> Result<bool> {
        if self.field.m() != 2 {
            return Err(usage!("trace-Hermitian form needs GF(4)"));
        }
        let g = self.generator();
        let mut basis = Vec::new();
        for i in 0..g.rows() {
            basis.push(g.row(i));
            basis.push(g.scale(2).row(i));
        }
        for a in &basis {
            for b in &basis {
                if trace_hermitian(&self.field, a, b)? != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

fn packed_weight(v: &[u64]) -> usize {
    v.iter().map(|w| w.count_ones() as usize).sum()
}

/// Visit every nonzero binary codeword spanned by `g` (Gray-code order).
/// Stops early when `visit` returns false.
pub(crate) fn for_each_binary_codeword(g: &GfMatrix, mut visit: impl FnMut(&[u64]) -> bool) {
    let k = g.rows();
    let rows: Vec<Vec<u64>> = (0..k).map(|i| pack_bits(g.row_slice(i))).collect();
    let mut cur = vec![0u64; g.cols().div_ceil(64).max(1)];
    for step in 1u64..(1u64 << k) {
        let bit = step.trailing_zeros() as usize;
        for (a, b) in cur.iter_mut().zip(&rows[bit]) {
            *a ^= b;
        }
        if !visit(&cur) {
            return;
        }
    }
}

/// Visit every nonzero codeword spanned by `g` over any field.
pub(crate) fn for_each_codeword(g: &GfMatrix, mut visit: impl FnMut(&[Elem]) -> bool) {
    let f = g.field();
    let (k, n) = (g.rows(), g.cols());
    let q = f.q();
    let mut digits = vec![0u32; k];
    let mut cur = vec![0; n];
    loop {
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            let old = digits[i];
            let new = (old + 1) % q;
            digits[i] = new;
            let delta = old ^ new;
            for (c, &x) in cur.iter_mut().zip(g.row_slice(i)) {
                *c ^= f.mul(delta, x);
            }
            if new != 0 {
                break;
            }
            i += 1;
        }
        if !visit(&cur) {
            return;
        }
    }
}

fn enumerable(field: &Field, k: usize, budget: u64) -> bool {
    let bits = field.m() as usize * k;
    k <= K_MAX && bits < 63 && (1u64 << bits) <= budget.max(1)
}

/// Minimum distance: exhaustive when `q^k` fits the budget, otherwise a
/// bounded search for small sets of dependent parity-check columns.
///
/// Never reports `exact` unless the search proved it.
pub fn min_distance(c: &LinearCode, budget: u64) -> DistanceResult {
    if c.k == 0 {
        return DistanceResult { distance: Distance::infinite(), witness: None };
    }
    if enumerable(&c.field, c.k, budget) {
        let g = c.generator();
        let mut best = usize::MAX;
        let mut wit = Vec::new();
        if c.field.is_binary() {
            let mut best_packed = Vec::new();
            for_each_binary_codeword(&g, |v| {
                let w = packed_weight(v);
                if w < best {
                    best = w;
                    best_packed = v.to_vec();
                }
                best > 1
            });
            wit = unpack_bits(&best_packed, c.n);
        } else {
            for_each_codeword(&g, |v| {
                let w = weight(v);
                if w < best {
                    best = w;
                    wit = v.to_vec();
                }
                best > 1
            });
        }
        return DistanceResult { distance: Distance::exact(best), witness: Some(wit) };
    }
    let (found, proven) = column_search(&c.h, W_MAX, budget);
    match found {
        Some(v) => DistanceResult { distance: Distance::exact(weight(&v)), witness: Some(v) },
        None => DistanceResult {
            distance: Distance::at_least(proven.max(c.d_lower)),
            witness: None,
        },
    }
}

fn normalize(f: &Field, v: &[Elem]) -> Option<(Vec<Elem>, Elem)> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv(lead).expect("nonzero");
    Some((v.iter().map(|&x| f.mul(x, inv)).collect(), lead))
}

struct Search<'a> {
    f: &'a Field,
    cols: Vec<Vec<Elem>>,
    index: BTreeMap<Vec<Elem>, Vec<(usize, Elem)>>,
    budget: u64,
    spent: u64,
}

impl Search<'_> {
    /// DFS over `depth` more columns after `start`, extending `acc`.
    fn dfs(
        &mut self,
        start: usize,
        depth: usize,
        acc: &mut Vec<Elem>,
        chosen: &mut Vec<(usize, Elem)>,
    ) -> Option<Option<Vec<(usize, Elem)>>> {
        if depth == 0 {
            self.spent += 1;
            if self.spent > self.budget {
                return Some(None);
            }
            let (u, mu) = normalize(self.f, acc)?;
            let last = chosen.last().map_or(0, |c| c.0);
            let hits = self.index.get(&u)?;
            let &(j, lam) = hits.iter().find(|(j, _)| *j > last)?;
            let mut out = chosen.clone();
            out.push((j, self.f.div(mu, lam).expect("nonzero")));
            return Some(Some(out));
        }
        let n = self.cols.len();
        let first = chosen.is_empty();
        for i in start..n {
            if self.cols[i].iter().all(|&x| x == 0) {
                continue;
            }
            let coeffs: Vec<Elem> = if first { vec![1] } else { (1..self.f.q()).collect() };
            for c in coeffs {
                for (a, &x) in acc.iter_mut().zip(&self.cols[i]) {
                    *a ^= self.f.mul(c, x);
                }
                chosen.push((i, c));
                let r = self.dfs(i + 1, depth - 1, acc, chosen);
                chosen.pop();
                for (a, &x) in acc.iter_mut().zip(&self.cols[i]) {
                    *a ^= self.f.mul(c, x);
                }
                if r.is_some() {
                    return r;
                }
            }
        }
        None
    }
}

/// Look for a codeword of weight ≤ `w_max` as a dependency among the
/// columns of `h`. Returns the first (lowest-weight) codeword found, or the
/// weight below which no codeword exists (proven by exhausting the search).
pub fn column_search(h: &GfMatrix, w_max: usize, budget: u64) -> (Option<Vec<Elem>>, usize) {
    let f = h.field();
    let n = h.cols();
    let cols: Vec<Vec<Elem>> = (0..n).map(|j| h.col(j)).collect();
    for (j, c) in cols.iter().enumerate() {
        if c.iter().all(|&x| x == 0) {
            let mut v = vec![0; n];
            v[j] = 1;
            return (Some(v), 1);
        }
    }
    let mut index: BTreeMap<Vec<Elem>, Vec<(usize, Elem)>> = BTreeMap::new();
    for (j, c) in cols.iter().enumerate() {
        let (u, lam) = normalize(f, c).expect("nonzero column");
        index.entry(u).or_default().push((j, lam));
    }
    let mut s = Search { f, cols, index, budget, spent: 0 };
    for w in 2..=w_max.min(n) {
        let mut acc = vec![0; h.rows()];
        let mut chosen = Vec::new();
        match s.dfs(0, w - 1, &mut acc, &mut chosen) {
            Some(Some(sel)) => {
                let mut v = vec![0; n];
                for (j, c) in sel {
                    v[j] = c;
                }
                return (Some(v), w);
            }
            Some(None) => return (None, w),
            None => {}
        }
    }
    (None, w_max.min(n) + 1)
}

/// `min{wt(c) : c ∈ C \ D}` for `D ⊆ C`; `None` when `C = D`.
pub fn min_weight_difference(
    c: &LinearCode,
    d: &LinearCode,
    budget: u64,
) -> Result<Option<(usize, Vec<Elem>)>> {
    if c.field != d.field || c.n != d.n {
        return Err(usage!("codes over different fields or lengths"));
    }
    let gd = d.generator();
    for i in 0..gd.rows() {
        if !c.contains(gd.row_slice(i))? {
            return Err(usage!("D is not contained in C"));
        }
    }
    if !enumerable(&c.field, c.k, budget) {
        return Err(usage!("dimension {} too large to enumerate within budget", c.k));
    }
    let g = c.generator();
    let mut best: Option<(usize, Vec<Elem>)> = None;
    if c.field.is_binary() {
        let hd = BitMatrix::from_gf(d.h());
        for_each_binary_codeword(&g, |v| {
            let w = packed_weight(v);
            if best.as_ref().is_none_or(|b| w < b.0)
                && hd.mul_packed(v).iter().any(|&x| x != 0)
            {
                best = Some((w, unpack_bits(v, c.n)));
            }
            true
        });
    } else {
        for_each_codeword(&g, |v| {
            let w = weight(v);
            if best.as_ref().is_none_or(|b| w < b.0)
                && d.syndrome(v).expect("length").iter().any(|&x| x != 0)
            {
                best = Some((w, v.to_vec()));
            }
            true
        });
    }
    Ok(best)
}
