//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails unless exactly the known deviations fail.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use tensorq_core::codes::{column_search, min_distance, weight, Distance, LinearCode, DEFAULT_BUDGET};
use tensorq_core::decoder::{capability_report, InnerDecoder, Mode, QuantumDecoder};
use tensorq_core::families::{
    bch, cyclic_from_generator, fire_code, is_reversible, mds_dual_containing, reed_solomon, repetition,
    repetition_cyclic, CyclicCode,
};
use tensorq_core::galois::{
    enumerate_self_reciprocal_irreducible, self_reciprocal_irreducible_count, Extension,
};
use tensorq_core::quantum::{
    cqc_parameters, hermitian, qtpc_bch_parameters, qtpc_dual_containing, qtpc_fire_burst, qtpc_reversible,
    self_dual_square, symplectic_commute, table_n2_max, CqcSpec, Purity, StabilizerCode, BCH_COMPARISON_ROWS,
};
use tensorq_core::tpc::{build_cl, certify_distance, companion_over, kron_product, tpc_build, tpc_membership, Variant};
use tensorq_core::{Elem, Field, GfMatrix, Poly};

/// Criteria whose literal form cannot hold; each has a passing corrected
/// or analog line next to it.
const KNOWN_DEVIATIONS: &[&str] = &["4-literal", "6-literal"];

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

fn gf2_rows(rows: &[&[Elem]]) -> LinearCode {
    let rows: Vec<Vec<Elem>> = rows.iter().map(|r| r.to_vec()).collect();
    LinearCode::from_parity(&GfMatrix::from_rows(&Field::gf2(), &rows).unwrap())
}

fn hamming() -> LinearCode {
    gf2_rows(&[&[1, 0, 1, 0, 1, 0, 1], &[0, 1, 1, 0, 0, 1, 1], &[0, 0, 0, 1, 1, 1, 1]])
}

fn c533() -> LinearCode {
    let h = GfMatrix::from_rows(&Field::gf4(), &[vec![1, 0, 1, 1, 1], vec![0, 1, 1, 2, 3]]).unwrap();
    LinearCode::from_parity(&h)
}

fn exact(q: &StabilizerCode, n: usize, k: usize, d: usize) -> Check {
    ensure!(
        (q.n, q.k, q.d) == (n, k, Distance::exact(d)),
        "got [[{}, {}, {:?}]], want [[{n}, {k}, {d}]]",
        q.n,
        q.k,
        q.d
    );
    ensure!(q.check().iter().all(|c| c.1), "stabilizer checks: {:?}", q.check());
    Ok(format!("[[{n}, {k}, {d}]]"))
}

// ---- 1 ----

fn example1() -> Check {
    let c1 = c533();
    let f16 = Field::new(4).map_err(e)?;
    for n2 in 3..=17 {
        let c2 = reed_solomon(&f16, n2, n2 - 2).map_err(e)?.into_code();
        let q = qtpc_dual_containing(&c1, &c2).map_err(e)?;
        exact(&q, 5 * n2, 5 * n2 - 8, 3).map_err(|m| format!("n2 = {n2}: {m}"))?;
        ensure!(q.pure == Purity::Verified, "n2 = {n2}: purity {:?}", q.pure);
        if n2 <= 9 {
            let t = tpc_build(&c1, &c2, Variant::Psi).map_err(e)?;
            let (w, lightest) = column_search(t.code().h(), 3, DEFAULT_BUDGET);
            let w = w.ok_or(format!("n2 = {n2}: no dependency of ≤ 3 columns"))?;
            ensure!(lightest == 3 && weight(&w) == 3, "n2 = {n2}: lightest dependency {lightest}");
            ensure!(tpc_membership(&t, &w).map_err(e)?, "n2 = {n2}: witness not a codeword");
        }
    }
    Ok("n2 = 3..17 all [[5n2, 5n2−8, 3]]; d = 3 by column search for n2 ≤ 9".into())
}

// ---- 2 ----

fn example2() -> Check {
    let f256 = Field::new(8).map_err(e)?;
    let rs = reed_solomon(&f256, 255, 247).map_err(e)?.into_code();
    let c1 = repetition(9).map_err(e)?;
    let ext = Extension::new(&Field::gf2(), &f256).map_err(e)?;
    let psi_h = ext.psi_matrix(rs.h()).map_err(e)?;
    ensure!(psi_h.mul_transpose(&psi_h).map_err(e)?.is_zero(), "ψ(H2)·ψ(H2)ᵀ ≠ 0");
    let t = tpc_build(&c1, &rs, Variant::Psi).map_err(e)?;
    let hb = t.h_base();
    let prod = hb.mul_transpose(hb).map_err(e)?;
    ensure!(prod.is_zero(), "h·hᵀ ≠ 0");
    let q = qtpc_dual_containing(&c1, &rs).map_err(e)?;
    exact(&q, 2295, 2167, 9)?;
    let stab = (q.stab.rows(), q.stab.cols() / 2);

    let f64_ = Field::new(6).map_err(e)?;
    let rs = reed_solomon(&f64_, 63, 57).map_err(e)?.into_code();
    let c1 = repetition(7).map_err(e)?;
    let t = tpc_build(&c1, &rs, Variant::Psi).map_err(e)?;
    let cert = certify_distance(&t, DEFAULT_BUDGET).map_err(e)?;
    let w = cert.witness.ok_or("no witness")?;
    ensure!(cert.lower == 7 && weight(&w) == 7, "bounds {} / {}", cert.lower, weight(&w));
    ensure!(tpc_membership(&t, &w).map_err(e)?, "witness fails membership");
    let q = qtpc_dual_containing(&c1, &rs).map_err(e)?;
    exact(&q, 441, 369, 7)?;
    Ok(format!(
        "[[2295, 2167, 9]], ψ(H2)ψ(H2)ᵀ = 0 and {}×{} ψ(H)·ψ(H)ᵀ = 0 (stabilizer {}×{}); analog [[441, 369, 7]] with weight-7 witness",
        prod.rows(),
        hb.cols(),
        stab.0,
        stab.1
    ))
}

// ---- 3 ----

/// Check symbols of the table's inner BCH code: residues whose orbit under
/// multiplication by q meets 1..δ'−1.
fn rho_oracle(m: u32, delta: usize) -> usize {
    let n = (1usize << m) - 1;
    let q = if m.is_multiple_of(2) { 4 } else { 2 };
    let top = if delta.is_multiple_of(2) { delta } else { delta - 1 };
    (0..n)
        .filter(|&x| {
            let mut y = x;
            loop {
                if (1..=top).contains(&y) {
                    return true;
                }
                y = y * q % n;
                if y == x {
                    return false;
                }
            }
        })
        .count()
}

fn table1() -> Check {
    let mut samples = 0;
    for (m, delta, eta1, eta2, n2_min) in BCH_COMPARISON_ROWS {
        let rho = rho_oracle(m, delta) as i64;
        if m % 2 == 1 {
            let top = if delta % 2 == 0 { delta + 1 } else { delta };
            let direct = bch(m, 1, top).map_err(e)?.code().rho() as i64;
            ensure!(direct == rho, "m = {m}, δ = {delta}: BCH redundancy {direct} vs coset count {rho}");
        }
        let n1 = (1i64 << m) - 1;
        let k1 = if eta1 == 2 { n1 - 3 } else { n1 - 2 * m as i64 * (eta1 as i64 / 2) };
        let max = table_n2_max(m, delta).map_err(e)?;
        for n2 in [n2_min, n2_min + 7, 2 * n2_min + 31] {
            ensure!((n2 as u128) <= max, "n2 = {n2} exceeds {max}");
            let q = qtpc_bch_parameters(m, delta, n2).map_err(e)?;
            let want = (n1 * n2 as i64, n1 * n2 as i64 - 2 * rho * (delta as i64 - 1), delta as i64);
            ensure!((q.n as i64, q.k, q.d as i64) == want, "QTPC m = {m}, δ = {delta}, n2 = {n2}: {q:?} vs {want:?}");
            let spec = CqcSpec { m, delta1: delta, eta1, eta2 };
            let c = cqc_parameters(&spec, n2).map_err(e)?;
            let want = (n1 * n2 as i64, k1 * (n2 as i64 - 2 * eta2 as i64 + 2), (eta1 * eta2) as i64);
            ensure!((c.n as i64, c.k, c.d as i64) == want, "CQC m = {m}, δ = {delta}, n2 = {n2}: {c:?} vs {want:?}");
            samples += 1;
        }
    }
    // frozen spot values
    let q = qtpc_bch_parameters(5, 7, 23).map_err(e)?;
    ensure!((q.n, q.k, q.d) == (713, 533, 7), "m = 5 row: {q:?}");
    let c = cqc_parameters(&CqcSpec { m: 5, delta1: 7, eta1: 2, eta2: 3 }, 23).map_err(e)?;
    ensure!((c.n, c.k, c.d) == (713, 532, 6), "m = 5 CQC: {c:?}");

    let c1 = bch(5, 1, 7).map_err(e)?.into_code();
    let c2 = reed_solomon(&Field::new(15).map_err(e)?, 23, 17).map_err(e)?.into_code();
    let built = qtpc_dual_containing(&c1, &c2).map_err(e)?;
    let rank = built.stab.rank();
    ensure!(built.n == 713 && rank == 713 - 533 && built.k == 533, "built [[{}, {}]], rank {rank}", built.n, built.k);
    Ok(format!("{samples} formula samples; built m = 5 instance [[713, 533]] with rank 180"))
}

// ---- 4 ----

fn example3_literal() -> Check {
    let f = Field::gf2();
    let b = Poly::from_bits(0b11101);
    let g = Poly::from_bits(0b1000_0001).mul(&f, &b);
    let irreducible = b.is_irreducible().map_err(e)?;
    match cyclic_from_generator(35, &g) {
        Ok(c) if c.code().k() == 24 => Ok("literal generator gives [35, 24]".into()),
        Ok(c) => Err(format!("literal generator gives [35, {}]", c.code().k())),
        Err(err) => Err(format!(
            "(x⁷+1)(1+x²+x³+x⁴) does not generate a length-35 cyclic code (b irreducible: {irreducible}): {err}"
        )),
    }
}

fn example3() -> Check {
    let fire = fire_code(&Poly::from_bits(0b11111), 4).map_err(e)?;
    let c = fire.cyclic.code();
    ensure!((c.n(), c.k()) == (35, 24), "Fire code [{}, {}]", c.n(), c.k());
    ensure!(is_reversible(&fire.cyclic).map_err(e)?, "Fire code not reversible");

    // every single cyclic burst of length ≤ 4: distinct syndromes, and trapping recovers it
    let dec = InnerDecoder::fire(&fire).map_err(e)?;
    let mut seen = BTreeSet::new();
    for len in 1..=4usize {
        for mid in 0u32..1 << len.saturating_sub(2) {
            let pat: Vec<Elem> = (0..len)
                .map(|i| if i == 0 || i == len - 1 { 1 } else { ((mid >> (i - 1)) & 1) as Elem })
                .collect();
            for start in 0..35 {
                let mut v = vec![0; 35];
                for (i, &x) in pat.iter().enumerate() {
                    v[(start + i) % 35] = x;
                }
                let s = c.syndrome(&v).map_err(e)?;
                ensure!(seen.insert(s.clone()), "two bursts share a syndrome");
                ensure!(dec.decode(&s).as_deref() == Some(&v[..]), "burst at {start} of length {len} miscorrected");
            }
        }
    }
    ensure!(seen.len() == 35 * 8, "{} bursts", seen.len());

    let f = Field::new(11).map_err(e)?;
    for t in 2..=12usize {
        let rs = mds_dual_containing(&f, 23, t).map_err(e)?;
        let q = qtpc_fire_burst(&fire, &rs).map_err(e)?;
        ensure!((q.n, q.k) == (805, 827 - 22 * t), "t = {t}: [[{}, {}]]", q.n, q.k);
        let sides = q.sides.as_ref().ok_or("no tensor sides")?;
        let p = sides.z_side.h_base().mul_transpose(sides.x_side.h_base()).map_err(e)?;
        ensure!(p.is_zero(), "t = {t}: H_[C_L]·H_[C]ᵀ ≠ 0");
        ensure!(symplectic_commute(&q.stab), "t = {t}: stabilizer does not commute");
    }
    Ok("b = 1+x+x²+x³+x⁴ Fire [35, 24]; 280 bursts corrected; t = 2..12 give [[805, 827−22t]] with H_[C_L]·H_[C]ᵀ = 0".into())
}

// ---- 5 ----

fn burst_exhaustion() -> Check {
    let q = tensorq_core::quantum::qtpc_repetition_burst(3, 4).map_err(e)?;
    exact(&q, 12, 4, 3)?;
    let dec = QuantumDecoder::new(&q).map_err(e)?;
    let r = capability_report(&dec, &q, 1, 1, 1, 0, u64::MAX).map_err(e)?;
    ensure!(r.mode == Mode::Exhaustive && r.failures == 0, "t = 1: {} failures of {}", r.failures, r.patterns);
    let r2 = capability_report(&dec, &q, 2, 1, 1, 0, u64::MAX).map_err(e)?;
    ensure!(r2.failures > 0 && r2.first_failure.is_some(), "t = 2 has no failing pattern");
    Ok(format!("t = 1: {} patterns, 0 failures; t = 2: {} of {} fail", r.patterns, r2.failures, r2.patterns))
}

// ---- 6 ----

fn burst_mc_literal() -> Check {
    let fire = fire_code(&Poly::from_bits(0b1011), 2).map_err(e)?;
    let rs = reed_solomon(&Field::new(6).map_err(e)?, 9, 6).map_err(e)?;
    ensure!((fire.cyclic.code().n(), fire.cyclic.code().k()) == (21, 15), "Fire code shape");
    match qtpc_fire_burst(&fire, &rs) {
        Ok(q) => Ok(format!("[[{}, {}]]", q.n, q.k)),
        Err(err) => Err(format!("Fire [21,15] ⊗ RS[9,6,4] is not a valid QTPC: {err}")),
    }
}

fn burst_mc_analog() -> Check {
    let fire = fire_code(&Poly::from_bits(0b11111), 2).map_err(e)?;
    let rs = mds_dual_containing(&Field::new(7).map_err(e)?, 9, 5).map_err(e)?;
    let q = qtpc_fire_burst(&fire, &rs).map_err(e)?;
    exact(&q, 135, 79, 4)?;
    let b = q.burst.ok_or("no burst claim")?;
    ensure!((b.t, b.l) == (2, 2), "claim t = {}, l = {}", b.t, b.l);
    let dec = QuantumDecoder::with_inner(&q, InnerDecoder::fire(&fire).map_err(e)?).map_err(e)?;
    let r = capability_report(&dec, &q, 2, 2, 10_000, 2024, 0).map_err(e)?;
    ensure!(r.mode == Mode::MonteCarlo && r.patterns == 10_000, "{:?} {}", r.mode, r.patterns);
    ensure!(r.failures == 0, "{} failures, first {:?}", r.failures, r.first_failure);
    Ok("Fire [15,8] ⊗ GRS[9,5,5] over GF(2^7) = [[135, 79, 4]]: 10⁴ trials of 2 bursts, 0 failures".into())
}

// ---- 7 ----

fn inner_corpus() -> Vec<(String, LinearCode, Option<CyclicCode>)> {
    let mut v: Vec<(String, LinearCode, Option<CyclicCode>)> = Vec::new();
    for n in [3, 5, 7] {
        let c = repetition_cyclic(n).unwrap();
        v.push((format!("rep({n})"), c.code().clone(), Some(c)));
    }
    v.push(("hamming".into(), hamming(), None));
    let cyc = cyclic_from_generator(7, &Poly::from_bits(0b1011)).unwrap();
    v.push(("cyclic(7, 1+x+x³)".into(), cyc.code().clone(), Some(cyc)));
    for (m, b, d) in [(4, 1, 3), (4, 1, 5), (4, 0, 4)] {
        let c = bch(m, b, d).unwrap();
        v.push((format!("bch({m},{b},{d})"), c.code().clone(), Some(c)));
    }
    let fire = fire_code(&Poly::from_bits(0b11111), 2).unwrap();
    v.push(("fire[15,8]".into(), fire.cyclic.code().clone(), Some(fire.cyclic)));
    v.push(("[5,3,3]₄".into(), c533(), None));
    v
}

fn outer_corpus(f: &Field) -> Vec<(String, LinearCode)> {
    let mut v = Vec::new();
    let top = (f.q() as usize + 1).min(11);
    let full = f.q() as usize - 1;
    for n in [4usize, 6, top, full] {
        if let Ok(c) = reed_solomon(f, n, n - 2) {
            v.push((format!("RS[{n},{}]", n - 2), c.into_code()));
        }
    }
    for (n, d) in [(top, 3), (top, 4), (5, 3)] {
        if let Ok(c) = mds_dual_containing(f, n, d) {
            v.push((format!("MDS[{n}, d={d}]"), c.into_code()));
        }
    }
    v
}

fn psi_and_companion(ext: &Extension) -> Check {
    let f = ext.ext();
    let step = (f.q() / 53).max(1);
    for a in (0..f.q()).step_by(step as usize) {
        let back = ext.psi_inv(&ext.psi(a)).map_err(e)?;
        ensure!(back == a, "ψ round trip fails at {a}");
        for b in (0..f.q()).step_by((step * 3) as usize) {
            let ab = companion_over(ext, f.mul(a, b));
            let prod = companion_over(ext, a).matmul(&companion_over(ext, b)).map_err(e)?;
            ensure!(ab == prod, "[ab] ≠ [a][b] at {a}, {b}");
            ensure!(companion_over(ext, a ^ b) == companion_over(ext, a).add(&companion_over(ext, b)).map_err(e)?, "[a+b]");
        }
    }
    Ok(String::new())
}

fn dual_suite() -> Check {
    let mut pairs = 0;
    let (mut l7, mut l7psi, mut t1, mut t2, mut herm) = (0, 0, 0, 0, 0);
    let mut t = Instant::now();
    for (name1, c1, cyc) in inner_corpus() {
        let m = c1.field().m() * c1.rho() as u32;
        let f = Field::new(m).map_err(e)?;
        let ext = Extension::new(c1.field(), &f).map_err(e)?;
        psi_and_companion(&ext).map_err(|m| format!("{name1}: {m}"))?;
        let reversible = match &cyc {
            Some(c) => is_reversible(c).map_err(e)?,
            None => false,
        };
        for (name2, c2) in outer_corpus(&f) {
            pairs += 1;
            let tag = format!("{name1} ⊗ {name2}");
            let psi2 = ext.psi_matrix(c2.h()).map_err(e)?;
            let psi2_dc = psi2.mul_transpose(&psi2).map_err(e)?.is_zero();
            for v in [Variant::Psi, Variant::CompanionTransposed, Variant::CompanionPlain] {
                if v != Variant::Psi && !c1.field().is_binary() {
                    continue;
                }
                let tp = tpc_build(&c1, &c2, v).map_err(|x| format!("{tag}: {x:?}"))?;
                let h = tp.h_base();
                ensure!(h.rank() == c1.rho() * c2.rho(), "{tag} {v:?}: rank {}", h.rank());
                ensure!(tp.k() == c1.n() * c2.n() - c1.rho() * c2.rho(), "{tag} {v:?}: k {}", tp.k());
                let dc = h.mul_transpose(h).map_err(e)?.is_zero();
                if c1.is_dual_containing() {
                    ensure!(dc, "{tag} {v:?}: dual-containing inner, product not dual-containing");
                    l7 += 1;
                }
                if psi2_dc && v == Variant::Psi {
                    ensure!(dc, "{tag}: ψ(C2) dual-containing, product not");
                    l7psi += 1;
                }
                if c1.field().q() == 4 && c1.is_hermitian_dual_containing().map_err(e)? {
                    ensure!(h.matmul(&h.dagger().map_err(e)?).map_err(e)?.is_zero(), "{tag}: h·h† ≠ 0");
                    herm += 1;
                }
            }
            let hyp = if c1.field().is_binary() {
                c1.is_dual_containing() || psi2_dc
            } else {
                c1.is_hermitian_dual_containing().map_err(e)?
            };
            if hyp {
                let q = qtpc_dual_containing(&c1, &c2).map_err(|x| format!("{tag}: {x:?}"))?;
                ensure!(q.k == c1.n() * c2.n() - 2 * c1.rho() * c2.rho(), "{tag}: k = {}", q.k);
                ensure!(symplectic_commute(&q.stab), "{tag}: stabilizer does not commute");
                t1 += 1;
            }
            if reversible && c2.is_dual_containing() {
                let cl = build_cl(&c1, &c2).map_err(|x| format!("{tag}: {x:?}"))?;
                let c = tpc_build(&c1, &c2, Variant::CompanionTransposed).map_err(e)?;
                ensure!(cl.h_base().mul_transpose(c.h_base()).map_err(e)?.is_zero(), "{tag}: H_[C_L]·H_[C]ᵀ ≠ 0");
                let q = qtpc_reversible(&c1, &c2).map_err(|x| format!("{tag}: {x:?}"))?;
                ensure!(symplectic_commute(&q.stab), "{tag}: stabilizer does not commute");
                ensure!(q.k == c1.n() * c2.n() - 2 * c1.rho() * c2.rho(), "{tag}: k = {}", q.k);
                t2 += 1;
            }
        }
        if t.elapsed() > Duration::from_secs(60) {
            return Err(format!("corpus too slow at {name1}"));
        }
        t = Instant::now();
    }
    // same-field products
    let binary: Vec<LinearCode> = inner_corpus().into_iter().map(|x| x.1).filter(|c| c.field().is_binary()).collect();
    let mut l6 = 0;
    for a in &binary {
        for b in &binary {
            if a.n() * b.n() > 256 {
                continue;
            }
            pairs += 1;
            let k = kron_product(a, b).map_err(e)?;
            if a.is_dual_containing() || b.is_dual_containing() {
                ensure!(k.is_dual_containing(), "same-field product of a dual-containing code is not dual-containing");
                l6 += 1;
            }
        }
    }
    ensure!(pairs >= 50, "only {pairs} pairs");
    ensure!(t1 > 0 && t2 > 0 && l7 > 0 && l7psi > 0 && herm > 0 && l6 > 0, "a hypothesis never held: {t1} {t2} {l7} {l7psi} {herm} {l6}");
    Ok(format!(
        "{pairs} pairs; containment checks: inner {l7}, ψ(C2) {l7psi}, Hermitian {herm}, same-field {l6}; dual-containing QTPCs {t1}, reversible QTPCs {t2}"
    ))
}

// ---- 8 ----

fn irreducible_by_division(p: u64) -> bool {
    let deg = 63 - p.leading_zeros();
    (2u64..1 << (deg / 2 + 1)).all(|d| {
        let dd = 63 - d.leading_zeros();
        if dd == 0 || dd > deg / 2 {
            return true;
        }
        let mut r = p;
        while r != 0 && 63 - r.leading_zeros() >= dd {
            r ^= d << (63 - r.leading_zeros() - dd);
        }
        r != 0
    })
}

fn self_reciprocal() -> Check {
    const FROZEN: [u64; 6] = [1, 1, 1, 2, 3, 5];
    let mut got = Vec::new();
    for (i, w) in (2..=12u32).step_by(2).enumerate() {
        let brute = (1u64 << w..1 << (w + 1))
            .filter(|&p| {
                let rev = (0..=w).fold(0u64, |acc, j| acc | ((p >> j) & 1) << (w - j));
                rev == p && irreducible_by_division(p)
            })
            .count() as u64;
        let formula = self_reciprocal_irreducible_count(w).map_err(e)?;
        let listed = enumerate_self_reciprocal_irreducible(w).map_err(e)?.len() as u64;
        ensure!(brute == FROZEN[i] && formula == brute && listed == brute, "w = {w}: brute {brute}, formula {formula}, enumerated {listed}");
        got.push(brute);
    }
    Ok(format!("w = 2..12: {got:?}"))
}

// ---- 9 ----

fn known_codes() -> Check {
    let steane = tensorq_core::quantum::css(&hamming(), &hamming()).map_err(e)?;
    exact(&steane, 7, 1, 3)?;
    ensure!(steane.pure == Purity::Verified, "Steane purity {:?}", steane.pure);
    let five = hermitian(&c533()).map_err(e)?;
    exact(&five, 5, 1, 3)?;
    let c = gf2_rows(&[&[1, 1]]);
    ensure!(min_distance(&c, DEFAULT_BUDGET).distance == Distance::exact(2), "[2,1,2] distance");
    let four = self_dual_square(&c).map_err(e)?;
    exact(&four, 4, 2, 2)?;
    Ok("[[7,1,3]] pure, [[5,1,3]], [[4,2,2]]".into())
}

/// Id, description, time limit in seconds, check.
type Criterion = (&'static str, &'static str, u64, fn() -> Check);

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        ("1", "Hermitian QTPC family [[5n2, 5n2−8, 3]]", 10, example1),
        ("2", "repetition ⊗ RS regression", 30, example2),
        ("3", "comparison table formulas", 60, table1),
        ("4-literal", "[35,24] Fire code from (x⁷+1)(1+x²+x³+x⁴)", 60, example3_literal),
        ("4", "Fire burst QTPCs [[805, 827−22t]]", 60, example3),
        ("5", "burst exhaustion on [[12,4,3]]", 5, burst_exhaustion),
        ("6-literal", "Monte Carlo on [[189,153]]", 60, burst_mc_literal),
        ("6", "Monte Carlo on the Fire ⊗ GRS analog", 60, burst_mc_analog),
        ("7", "dual-containment property suite", 120, dual_suite),
        ("8", "self-reciprocal irreducible counts", 5, self_reciprocal),
        ("9", "known small codes", 5, known_codes),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, run) in criteria {
        let t0 = Instant::now();
        let mut res = run();
        let dt = t0.elapsed();
        if res.is_ok() && dt > Duration::from_secs(limit) {
            res = Err(format!("took {dt:.1?}, limit {limit} s"));
        }
        match res {
            Ok(detail) => println!("PASS  {id:<9} {name} ({dt:.2?}): {detail}"),
            Err(detail) => {
                let known = if KNOWN_DEVIATIONS.contains(&id) { " [known deviation]" } else { "" };
                println!("FAIL  {id:<9} {name} ({dt:.2?}){known}: {detail}");
                failed.push(id);
            }
        }
    }
    assert_eq!(failed, KNOWN_DEVIATIONS, "unexpected set of failing criteria");
}
