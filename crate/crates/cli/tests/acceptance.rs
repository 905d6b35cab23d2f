//! One line per acceptance criterion. Everything is exact: no tolerances.
//! Each check runs through the suite runner where a suite exists, and adds
//! the pinned values directly against the core library.

use std::time::{Duration, Instant};

use grolat_cli::{emit_report, run_suite, Format, Report, Status, SuiteConfig};
use grolat_core::algebra::{ratio, Scalar};
use grolat_core::grothendieck::skew_one_var;
use grolat_core::lattice::{
    matrix_element, r_elem, yang_baxter_failures, OpKind, OperatorWord, SpectralParam,
};
use grolat_core::partitions::{Partition, PositionSeq};
use grolat_core::pushforward::{
    class_g, guo_sun_check, localization_pushforward, random_class, residue_pushforward, sample_alpha,
    special_case, AlphaAssignment, GrothClassExpr, GuoSunVariant, Mode, PushforwardParams, SpecialCase,
};
use grolat_core::algebra::{LaurentPoly, RatFunc};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Gate {
    failed: Vec<String>,
}

impl Gate {
    fn line(&mut self, id: u32, what: &str, limit: Duration, start: Instant, outcome: Result<(), String>) {
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if took < limit {
                Ok(())
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("criterion {id:>2} PASS  {what} ({took:.2?})"),
            Err(e) => {
                println!("criterion {id:>2} FAIL  {what} ({took:.2?}): {e}");
                self.failed.push(format!("{id}: {e}"));
            }
        }
    }
}

fn cfg(suite: &str, m: usize, n: usize, k: usize, l: usize) -> SuiteConfig {
    let mut c = SuiteConfig::new(suite);
    (c.m_max, c.n_max, c.k_max, c.l_max) = (m, n, k, l);
    c
}

fn all_pass(c: &SuiteConfig) -> Result<Report, String> {
    let r = run_suite(c).map_err(|e| e.to_string())?;
    if r.cases.is_empty() {
        return Err(format!("{}: no cases", c.suite));
    }
    match r.cases.iter().find(|x| x.status == Status::Fail) {
        Some(bad) => Err(format!("{}: {:?} failed: {:?}", c.suite, bad.params, bad.diagnostic)),
        None => Ok(r),
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn worked_example() -> Result<(), String> {
    let u = SpectralParam::sym("u");
    let word = OperatorWord::new(vec![(OpKind::B, u.clone())]).map_err(|e| e.to_string())?;
    let bra = PositionSeq::new(vec![2, 5, 6, 9], 9).map_err(|e| e.to_string())?;
    let ket = PositionSeq::new(vec![3, 5, 7], 9).map_err(|e| e.to_string())?;
    let got = matrix_element(&bra, &word, &ket).map_err(|e| e.to_string())?;
    let z = &LaurentPoly::one() - &u.inv_poly();
    let expected = &z.pow(3) * &u.inv_poly().pow(2);
    ensure(got == expected, format!("matrix element {got} vs {expected}"))?;
    let lam: Partition = "5,3,3,1".parse().map_err(|e: grolat_core::Error| e.to_string())?;
    let mu: Partition = "4,3,2".parse().map_err(|e: grolat_core::Error| e.to_string())?;
    ensure(skew_one_var(&lam, &mu, &u) == got, "one-variable skew polynomial differs")?;
    all_pass(&cfg("worked-example", 9, 1, 0, 0)).map(|_| ())
}

fn yang_baxter() -> Result<(), String> {
    all_pass(&cfg("yang-baxter", 1, 1, 0, 0))?;
    let [u, v, w] = ["u", "v", "w"].map(SpectralParam::sym);
    ensure(yang_baxter_failures(&r_elem, &u, &v, &w).is_empty(), "unperturbed matrix fails")?;
    // bump a single entry, in turn each nonzero one
    for target in [(0u8, 0u8, 0u8, 0u8), (1, 1, 1, 1), (1, 0, 0, 1), (0, 1, 1, 0), (1, 0, 1, 0)] {
        let bumped = move |a: u8, b: u8, c: u8, d: u8, x: &SpectralParam, y: &SpectralParam| {
            let e = r_elem(a, b, c, d, x, y);
            if (a, b, c, d) == target {
                &e + &LaurentPoly::one()
            } else {
                e
            }
        };
        ensure(!yang_baxter_failures(&bumped, &u, &v, &w).is_empty(), format!("perturbation at {target:?} missed"))?;
    }
    Ok(())
}

fn commutation() -> Result<(), String> {
    let mut c = cfg("commutation", 5, 0, 0, 0);
    all_pass(&c)?;
    // the multiple exchange on m ≤ 4, n ≤ 4, every k
    (c.m_max, c.n_max, c.k_max) = (4, 4, 4);
    let r = all_pass(&c)?;
    let multi = r.cases.iter().filter(|x| x.params["relation"].starts_with("multiple-db")).count();
    ensure(multi == 4 * (2 + 3 + 4 + 5), format!("{multi} multiple-exchange cases"))
}

fn wavefunction() -> Result<(), String> {
    let r = all_pass(&cfg("wavefunction", 6, 3, 0, 0))?;
    // 3×3 box shapes that fit in n rows, n = 1, 2, 3
    ensure(r.cases.len() == 4 + 10 + 20, format!("{} cases", r.cases.len()))
}

fn layers() -> Result<(), String> {
    all_pass(&cfg("d-layers", 4, 3, 3, 0))?;
    all_pass(&cfg("mixed-layers", 4, 3, 3, 0)).map(|_| ())
}

fn evaluators() -> Result<(), String> {
    let r = all_pass(&cfg("evaluator-agreement", 1, 3, 0, 0))?;
    ensure(r.cases.len() == 20 * 20 * 3, format!("{} cases", r.cases.len()))
}

fn pushforward() -> Result<(), String> {
    let c = cfg("pushforward", 4, 3, 4, 4);
    let r = all_pass(&c)?;
    let expected = PushforwardParams::sweep(1..=4, 1..=3, 4, 4).len();
    ensure(r.cases.len() == expected, format!("{} of {expected} cases", r.cases.len()))?;
    let mut s = c;
    s.mode = Mode::Sample;
    s.trials = 20;
    s.seed = 2024;
    all_pass(&s)?;
    // hand-checked instance
    let p = PushforwardParams::new(2, 2, 1, 0, "1".parse().unwrap(), Partition::empty()).map_err(|e| e.to_string())?;
    let a = AlphaAssignment::ints(&[2, 3]).map_err(|e| e.to_string())?;
    let lhs = localization_pushforward(&class_g(&p).map_err(|e| e.to_string())?, &a).map_err(|e| e.to_string())?;
    let target = grolat_core::pushforward::pushforward_target(&p).map_err(|e| e.to_string())?;
    let rhs = grolat_core::grothendieck::skew_multi(&target, &p.mu, a.params());
    let third = ratio(1, 3);
    ensure(lhs.as_constant() == Some(third.clone()), format!("lhs {lhs}"))?;
    ensure(rhs.as_constant() == Some(third), format!("rhs {rhs}"))
}

fn guo_sun() -> Result<(), String> {
    let mut c = cfg("guo-sun", 4, 3, 3, 0);
    (c.box_rows, c.box_cols) = (2, 2);
    let r = all_pass(&c)?;
    let d = r.discrepancies.first().ok_or("printed-form discrepancy not recorded")?;
    ensure(d.reproduced, "printed form unexpectedly holds")?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let printed = guo_sun_check(&Partition::empty(), 1, 1, 2, GuoSunVariant::Printed, Mode::Symbolic, 1, &mut rng)
        .map_err(|e| e.to_string())?;
    ensure(!printed.holds && printed.lhs == "-z1*z2 + z1 + z2" && printed.rhs == "1", format!("{printed:?}"))?;
    let corrected = guo_sun_check(&Partition::empty(), 1, 1, 2, GuoSunVariant::Corrected, Mode::Symbolic, 1, &mut rng)
        .map_err(|e| e.to_string())?;
    ensure(corrected.holds, "corrected form fails at the witness")
}

fn residues() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let mut done = 0;
    'outer: loop {
        for n in 1..=3 {
            for k in 0..=n {
                if done == 50 {
                    break 'outer;
                }
                let f: GrothClassExpr = random_class(k, n, &mut rng);
                let a = sample_alpha(n, &mut rng);
                let res = residue_pushforward(&f, &a).map_err(|e| e.to_string())?;
                let loc = localization_pushforward(&f, &a).map_err(|e| e.to_string())?;
                ensure(RatFunc::from(LaurentPoly::constant(res.clone())) == loc, format!("{f} at {a}: {res} vs {loc}"))?;
                done += 1;
            }
        }
    }
    for n in 1..=4 {
        for k in 0..=n {
            let p = PushforwardParams::new(k, n, k, 0, Partition::empty(), Partition::empty()).map_err(|e| e.to_string())?;
            let c = special_case(SpecialCase::ResidueUnit, &p, Mode::Sample, 3, &mut rng).map_err(|e| e.to_string())?;
            ensure(c.holds, format!("unit class at n={n} k={k}: {c:?}"))?;
        }
    }
    let mut c = cfg("residues", 1, 4, 4, 0);
    c.mode = Mode::Sample;
    c.trials = 2;
    all_pass(&c).map(|_| ())
}

fn special_cases() -> Result<(), String> {
    let class = grolat_core::pushforward::GrothClassExpr::new(
        {
            let (_, w) = GrothClassExpr::standard_roots(1, 2);
            let z = &LaurentPoly::one() - &LaurentPoly::var_pow(w[0], -1);
            z.pow(2)
        },
        GrothClassExpr::standard_roots(1, 2).0,
        GrothClassExpr::standard_roots(1, 2).1,
    )
    .map_err(|e| e.to_string())?;
    let a = AlphaAssignment::ints(&[2, 3]).map_err(|e| e.to_string())?;
    let lhs = localization_pushforward(&class, &a).map_err(|e| e.to_string())?;
    let five_sixths: Scalar = ratio(5, 6);
    ensure(lhs.as_constant() == Some(five_sixths.clone()), format!("projective bundle gives {lhs}"))?;
    let rhs = grolat_core::grothendieck::groth_det_at(
        &Partition::new([1]).unwrap(),
        &a.params().iter().map(grolat_core::grothendieck::z_of_u).collect::<Vec<_>>(),
    )
    .map_err(|e| e.to_string())?;
    ensure(rhs.as_constant() == Some(five_sixths), format!("G_(1) at (2,3) gives {rhs}"))?;
    let r = all_pass(&cfg("special-cases", 4, 3, 4, 4))?;
    let seq = r.cases.iter().filter(|x| x.params["case"] == "sequence-target" && x.status == Status::Pass).count();
    ensure(seq > 0, "no sequence-target cases ran")
}

fn determinism() -> Result<(), String> {
    for (suite, mode) in [("pushforward", Mode::Sample), ("residues", Mode::Sample), ("guo-sun", Mode::Sample), ("wavefunction", Mode::Symbolic)] {
        let mut c = cfg(suite, 3, 2, 2, 2);
        c.mode = mode;
        c.trials = 3;
        c.seed = 99;
        let a = run_suite(&c).map_err(|e| e.to_string())?;
        let b = run_suite(&c).map_err(|e| e.to_string())?;
        for f in [Format::Json, Format::Markdown] {
            ensure(emit_report(&a, f) == emit_report(&b, f), format!("{suite} differs between runs"))?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let mut g = Gate { failed: Vec::new() };
    let sec = Duration::from_secs;
    let t = Instant::now();
    g.line(1, "worked example: single B element and one-variable skew polynomial", sec(1), t, worked_example());
    let t = Instant::now();
    g.line(2, "Yang-Baxter, symbolic, perturbations detected", sec(1), t, yang_baxter());
    let t = Instant::now();
    g.line(3, "exchange relations m <= 5; multiple exchange n <= 4, m <= 4", sec(120), t, commutation());
    let t = Instant::now();
    g.line(4, "wavefunction equals determinant, 3x3 box, n <= 3", sec(60), t, wavefunction());
    let t = Instant::now();
    g.line(5, "D-layer and mixed-layer reductions, m <= 4, n <= 3", sec(120), t, layers());
    let t = Instant::now();
    g.line(6, "four evaluators agree, 3x3 box pairs, n <= 3", sec(120), t, evaluators());
    let t = Instant::now();
    g.line(7, "pushforward symbolic sweep, 20 samples per case, 1/3 instance", sec(300), t, pushforward());
    let t = Instant::now();
    g.line(8, "Guo-Sun corrected form; printed form failure recorded", sec(60), t, guo_sun());
    let t = Instant::now();
    g.line(9, "residues vs localization on 50 classes; unit class = 1", sec(120), t, residues());
    let t = Instant::now();
    g.line(10, "projective bundle 5/6; sequence targets across the sweep", sec(60), t, special_cases());
    let t = Instant::now();
    g.line(11, "byte-identical reports on rerun", sec(120), t, determinism());
    assert!(g.failed.is_empty(), "failed criteria: {:?}", g.failed);
}
