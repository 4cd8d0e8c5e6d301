use proptest::prelude::*;

use tensorq_core::codes::{weight, LinearCode};
use tensorq_core::decoder::{
    qecc_decode, sample_burst_pattern, trial_rng, Alphabet, PauliErrorVector, QuantumDecoder,
    TpcDecoder, TpcOutcome,
};
use tensorq_core::families::{mds_dual_containing, reed_solomon};
use tensorq_core::galois::{Extension, Field};
use tensorq_core::matgf::{GfMatrix, RowSpace};
use tensorq_core::quantum::{qtpc_repetition_burst, symplectic_commute};
use tensorq_core::tpc::{build_cl, companion_over, tpc_build, Variant};
use tensorq_core::Elem;

fn full_rank_parity(f: &Field, rho: usize, n: usize, seed: &[Elem]) -> Option<LinearCode> {
    let mask = f.q() - 1;
    let data: Vec<Elem> = (0..rho * n).map(|i| seed[i % seed.len()].rotate_left(i as u32 % 7) & mask).collect();
    let h = GfMatrix::from_data(f, rho, n, data).ok()?;
    (h.rank() == rho).then(|| LinearCode::from_parity(&h))
}

fn inner_code() -> impl Strategy<Value = LinearCode> {
    (1u32..=2, 1usize..=3, 1usize..=4, prop::collection::vec(any::<u32>(), 8))
        .prop_filter_map("rank deficient", |(m, rho, extra, seed)| {
            let f = Field::new(m).ok()?;
            full_rank_parity(&f, rho, rho + extra, &seed)
        })
}

fn tpc_pair() -> impl Strategy<Value = (LinearCode, LinearCode)> {
    (inner_code(), 2usize..=9, 1usize..=8).prop_filter_map("outer shape", |(c1, n2, k2)| {
        let m = c1.field().m() * c1.rho() as u32;
        let ext = Field::new(m).ok()?;
        let n2 = n2.min(ext.q() as usize + 1);
        let k2 = k2.min(n2 - 1).max(1);
        let c2 = reed_solomon(&ext, n2, k2).ok()?.into_code();
        Some((c1, c2))
    })
}

fn add(u: &[Elem], v: &[Elem]) -> Vec<Elem> {
    u.iter().zip(v).map(|(a, b)| a ^ b).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(48) })]

    #[test]
    fn psi_roundtrip(base_m in 1u32..=2, deg in 1u32..=6, x in any::<u32>()) {
        let base = Field::new(base_m).unwrap();
        let ext = Field::new(base_m * deg).unwrap();
        let e = Extension::new(&base, &ext).unwrap();
        let x = x & (ext.q() - 1);
        let v = e.psi(x);
        prop_assert_eq!(v.len(), deg as usize);
        prop_assert_eq!(e.psi_inv(&v).unwrap(), x);
    }

    #[test]
    fn companion_homomorphism(base_m in 1u32..=2, deg in 1u32..=5, a in any::<u32>(), b in any::<u32>()) {
        let base = Field::new(base_m).unwrap();
        let f = Field::new(base_m * deg).unwrap();
        let e = Extension::new(&base, &f).unwrap();
        let (a, b) = (a & (f.q() - 1), b & (f.q() - 1));
        let ma = companion_over(&e, a);
        let mb = companion_over(&e, b);
        prop_assert_eq!(companion_over(&e, f.mul(a, b)), ma.matmul(&mb).unwrap());
        prop_assert_eq!(companion_over(&e, f.add(a, b)), ma.add(&mb).unwrap());
    }

    #[test]
    fn variants_agree((c1, c2) in tpc_pair()) {
        let psi = tpc_build(&c1, &c2, Variant::Psi).unwrap();
        let ct = tpc_build(&c1, &c2, Variant::CompanionTransposed).unwrap();
        let cp = tpc_build(&c1, &c2, Variant::CompanionPlain).unwrap();
        prop_assert_eq!(psi.h_base(), ct.h_base());
        prop_assert_eq!(psi.k(), cp.k());
        prop_assert_eq!(psi.k(), psi.n() - c1.rho() * c2.rho());
    }

    #[test]
    fn block_syndromes_are_linear((c1, c2) in tpc_pair(), seed in any::<u64>(), variant in 0usize..3) {
        let v = [Variant::Psi, Variant::CompanionTransposed, Variant::CompanionPlain][variant];
        let t = tpc_build(&c1, &c2, v).unwrap();
        let mask = c1.field().q() - 1;
        let mut s = seed;
        let mut word = || -> Vec<Elem> {
            (0..t.n()).map(|_| { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (s >> 33) as Elem & mask }).collect()
        };
        let (u, w) = (word(), word());
        let su = t.inner_syndromes(&u).unwrap();
        let sw = t.inner_syndromes(&w).unwrap();
        prop_assert_eq!(t.inner_syndromes(&add(&u, &w)).unwrap(), add(&su, &sw));
        prop_assert!(t.contains(&u).is_ok());
        let g = t.code().generator();
        if g.rows() > 0 {
            let msg: Vec<Elem> = (0..g.rows()).map(|i| u[i % u.len()]).collect();
            let cw = g.vec_mul(&msg).unwrap();
            prop_assert!(t.contains(&cw).unwrap());
        }
    }

    #[test]
    fn double_dual(c in inner_code()) {
        let dd = c.dual().dual();
        prop_assert_eq!(dd.k(), c.k());
        let span = RowSpace::new(&c.generator());
        let g = dd.generator();
        for i in 0..g.rows() {
            prop_assert!(span.contains(&g.row(i)));
        }
    }

    #[test]
    fn trace_hermitian_matches_hermitian(seed in prop::collection::vec(any::<u32>(), 8), rho in 1usize..=3, extra in 0usize..=3, square in any::<bool>()) {
        let f = Field::gf4();
        if let Some(c) = full_rank_parity(&f, rho, rho + extra + 1, &seed) {
            // also exercise self-orthogonal generators built as [A | A]
            let c = if square {
                let g = c.generator();
                LinearCode::from_generator(&g.hstack(&g).unwrap())
            } else {
                c
            };
            let g = c.generator();
            let herm = g.matmul(&g.dagger().unwrap()).unwrap().is_zero();
            prop_assert_eq!(c.is_trace_hermitian_self_orthogonal().unwrap(), herm);
        }
    }

    #[test]
    fn dual_containing_inner_gives_dual_containing_product(n2 in 2usize..=9, k2 in 1usize..=8, which in 0usize..3) {
        let f2 = Field::gf2();
        let c1 = match which {
            0 => tensorq_core::families::bch(4, 1, 3).unwrap().into_code(),
            1 => LinearCode::from_parity(&GfMatrix::from_rows(&f2, &[vec![1, 0, 1, 0, 1, 0, 1], vec![0, 1, 1, 0, 0, 1, 1], vec![0, 0, 0, 1, 1, 1, 1]]).unwrap()),
            _ => LinearCode::from_parity(&GfMatrix::from_rows(&f2, &[vec![1, 1]]).unwrap()),
        };
        prop_assert!(c1.is_dual_containing());
        let ext = Field::new(c1.rho() as u32).unwrap();
        let n2 = n2.min(ext.q() as usize + 1);
        let c2 = reed_solomon(&ext, n2, k2.min(n2 - 1).max(1)).unwrap().into_code();
        for v in [Variant::Psi, Variant::CompanionTransposed] {
            prop_assert!(tpc_build(&c1, &c2, v).unwrap().code().is_dual_containing());
        }
    }

    #[test]
    fn reversible_pair_is_cross_orthogonal(n1 in prop::sample::select(vec![3usize, 5]), n2 in 4usize..=9, d_pick in 0usize..3) {
        let c1 = tensorq_core::families::repetition(n1).unwrap();
        let ext = Field::new((n1 - 1) as u32).unwrap();
        let n2 = n2.min(ext.q() as usize + 1);
        let d = [2usize, 3, 4][d_pick].min(n2 / 2 + 1);
        let Ok(rs) = mds_dual_containing(&ext, n2, d) else { return Ok(()) };
        let c2 = rs.into_code();
        let c = tpc_build(&c1, &c2, Variant::CompanionTransposed).unwrap();
        let cl = build_cl(&c1, &c2).unwrap();
        prop_assert!(cl.h_base().mul_transpose(c.h_base()).unwrap().is_zero());
        prop_assert_eq!(cl.k(), c.k());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn decoder_soundness_and_degeneracy(trial in any::<u64>(), which in 0usize..2, stab_row in any::<prop::sample::Index>()) {
        let (n1, n2) = [(3usize, 4usize), (5, 9)][which];
        let q = qtpc_repetition_burst(n1, n2).unwrap();
        let dec = QuantumDecoder::new(&q).unwrap();
        let b = q.burst.unwrap();
        let p = sample_burst_pattern(&mut trial_rng(11, trial), n1, n2, b.t, b.l, Alphabet::Pauli).unwrap();
        let e = p.to_pauli();
        let out = qecc_decode(&dec, &q, &e).unwrap();
        prop_assert!(out.success());
        // adding a stabilizer element does not change the verdict
        let r = stab_row.index(q.stab.rows());
        let row = q.stab.row(r);
        let s = PauliErrorVector { a: row[..q.n].to_vec(), b: row[q.n..].to_vec() };
        prop_assert!(qecc_decode(&dec, &q, &e.add(&s)).unwrap().success());
        // the X verdict ignores the Z component and vice versa
        let zero_b = PauliErrorVector { a: e.a.clone(), b: vec![0; q.n] };
        let other_b = PauliErrorVector { a: e.a.clone(), b: add(&e.b, &s.b) };
        prop_assert_eq!(qecc_decode(&dec, &q, &zero_b).unwrap().x, out.x.clone());
        prop_assert_eq!(qecc_decode(&dec, &q, &other_b).unwrap().x, out.x);
        prop_assert!(symplectic_commute(&q.stab));
    }

    #[test]
    fn tpc_decoder_output_reproduces_syndrome((c1, c2) in tpc_pair(), seed in any::<u64>()) {
        let t = tpc_build(&c1, &c2, Variant::Psi).unwrap();
        let Ok(dec) = TpcDecoder::for_code(&t, None) else { return Ok(()) };
        let mask = c1.field().q() - 1;
        let mut s = seed | 1;
        let e: Vec<Elem> = (0..t.n()).map(|_| { s ^= s << 13; s ^= s >> 7; s ^= s << 17; if s % 5 == 0 { (s >> 40) as Elem & mask } else { 0 } }).collect();
        let syn = t.h_base().mul_vec(&e).unwrap();
        if let TpcOutcome::Corrected(est) = dec.decode(&t, &syn).unwrap() {
            prop_assert_eq!(t.h_base().mul_vec(&est).unwrap(), syn);
            prop_assert!(weight(&est) <= t.n());
        }
    }
}
