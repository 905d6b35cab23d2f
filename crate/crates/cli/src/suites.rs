//! The suite registry: each entry expands a config into independent cases.

use std::collections::BTreeMap;

use grolat_core::algebra::LaurentPoly;
use grolat_core::grothendieck::{branching_check, skew_one_var, z_of_u};
use grolat_core::identities::{
    db_function_check, evaluator_agreement, lattice_skew_check, rectangle_factorization, schur_operator_check,
    stability_check, u_function_check, wavefunction_check,
};
use grolat_core::lattice::{
    check_d_layers_as_b, check_mixed_layers_as_b, commutation_failures, matrix_element, r_elem,
    yang_baxter_failures, LemmaReport, OpKind, OperatorWord, Relation, SpectralParam,
};
use grolat_core::partitions::{enumerate_in_box, Partition, PositionSeq};
use grolat_core::pushforward::{
    class_g_matches_lattice, guo_sun_check, localization_pushforward, random_class, residue_pushforward,
    sample_alpha, special_case, verify_pushforward, zdb_expansion_check, Comparison, GuoSunVariant, Mode,
    PushforwardParams, SpecialCase,
};
use grolat_core::algebra::RatFunc;
use rand_chacha::ChaCha8Rng;

use crate::config::SuiteConfig;
use crate::report::Discrepancy;

/// `Ok(None)` marks a case outside the identity's range (reported as skip).
pub type Outcome = grolat_core::Result<Option<Comparison>>;
type Job = Box<dyn Fn(&mut ChaCha8Rng) -> Outcome + Send + Sync>;

pub struct Case {
    pub params: BTreeMap<String, String>,
    job: Job,
}

impl Case {
    fn new(params: &[(&str, String)], job: impl Fn(&mut ChaCha8Rng) -> Outcome + Send + Sync + 'static) -> Case {
        Case {
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            job: Box::new(job),
        }
    }

    pub fn run(&self, rng: &mut ChaCha8Rng) -> Outcome {
        (self.job)(rng)
    }
}

pub struct SuiteInfo {
    pub name: &'static str,
    pub description: &'static str,
    build: fn(&SuiteConfig) -> Vec<Case>,
    known: fn() -> Vec<Discrepancy>,
}

impl SuiteInfo {
    pub fn cases(&self, cfg: &SuiteConfig) -> Vec<Case> {
        (self.build)(cfg)
    }

    pub fn discrepancies(&self) -> Vec<Discrepancy> {
        (self.known)()
    }
}

fn none() -> Vec<Discrepancy> {
    Vec::new()
}

pub static REGISTRY: &[SuiteInfo] = &[
    SuiteInfo {
        name: "worked-example",
        description: "single B-operator matrix element on 9 sites against the one-variable skew polynomial",
        build: worked_example,
        known: none,
    },
    SuiteInfo {
        name: "yang-baxter",
        description: "all 64 components of RRR = RRR for the five-vertex R-matrix, plus a perturbed matrix that must fail",
        build: yang_baxter,
        known: none,
    },
    SuiteInfo {
        name: "commutation",
        description: "exchange relations among monodromy entries and the multiple D/B exchange, on every basis state",
        build: commutation,
        known: none,
    },
    SuiteInfo {
        name: "wavefunction",
        description: "B-word amplitudes from the empty state equal the Grothendieck determinant at z = 1 - 1/u",
        build: wavefunction,
        known: none,
    },
    SuiteInfo {
        name: "d-layers",
        description: "D-word matrix elements equal B-word elements on a longer chain with a filled tail",
        build: d_layers,
        known: none,
    },
    SuiteInfo {
        name: "mixed-layers",
        description: "D...D B...B matrix elements equal B-word elements on a longer chain with a filled tail",
        build: mixed_layers,
        known: none,
    },
    SuiteInfo {
        name: "lattice-skew",
        description: "B-word matrix elements between nonempty states equal skew Grothendieck polynomials",
        build: lattice_skew,
        known: none,
    },
    SuiteInfo {
        name: "u-function",
        description: "D-word matrix elements equal skew polynomials of a rectangle-prepended shape",
        build: u_function,
        known: none,
    },
    SuiteInfo {
        name: "bd-function",
        description: "B-then-D partition function equals the class g written through skew polynomials",
        build: bd_function,
        known: none,
    },
    SuiteInfo {
        name: "db-function",
        description: "D-then-B partition function equals the skew polynomial of the pushforward target",
        build: db_function,
        known: none,
    },
    SuiteInfo {
        name: "db-expansion",
        description: "D-then-B partition function equals the localization-weighted sum of B-then-D functions",
        build: db_expansion,
        known: none,
    },
    SuiteInfo {
        name: "pushforward",
        description: "localization pushforward of the class g equals the skew polynomial of the target shape",
        build: pushforward,
        known: none,
    },
    SuiteInfo {
        name: "guo-sun",
        description: "Grothendieck polynomial of a rectangle-prepended shape as a localization-type sum",
        build: guo_sun,
        known: guo_sun_known,
    },
    SuiteInfo {
        name: "residues",
        description: "iterated residue integral against the localization sum, and the unit class integrating to 1",
        build: residues,
        known: none,
    },
    SuiteInfo {
        name: "special-cases",
        description: "non-skew, projective-bundle, sequence-target and residue specializations of the pushforward",
        build: special_cases,
        known: none,
    },
    SuiteInfo {
        name: "evaluator-agreement",
        description: "branching chain, skew determinant, Schur operators at beta = 1 and the lattice agree",
        build: evaluator_agreement_suite,
        known: none,
    },
    SuiteInfo {
        name: "schur-operators",
        description: "box-adding operator products equal the beta-deformed branching chain, beta symbolic",
        build: schur_operators,
        known: none,
    },
    SuiteInfo {
        name: "branching",
        description: "Grothendieck polynomial in l+1 variables splits over interlacing shapes",
        build: branching,
        known: none,
    },
    SuiteInfo {
        name: "factorization",
        description: "rectangles factor into monomials; a zero variable drops out",
        build: factorization,
        known: none,
    },
];

pub fn lookup(name: &str) -> Option<&'static SuiteInfo> {
    REGISTRY.iter().find(|s| s.name == name)
}

fn s(x: impl ToString) -> String {
    x.to_string()
}

fn lemma(r: LemmaReport) -> Comparison {
    Comparison {
        holds: r.ok(),
        lhs: format!("{} of {} matrix elements differ", r.failures.len(), r.checked),
        rhs: format!("0 of {} matrix elements differ", r.checked),
        note: (!r.ok()).then(|| r.failures.join(", ")),
    }
}

fn counted(what: &str, bad: usize, total: usize, detail: String) -> Comparison {
    Comparison {
        holds: bad == 0,
        lhs: format!("{bad} of {total} {what} fail"),
        rhs: format!("0 of {total} {what} fail"),
        note: (bad > 0).then_some(detail),
    }
}

fn shapes(cfg: &SuiteConfig) -> Vec<Partition> {
    enumerate_in_box(cfg.box_rows, cfg.box_cols)
}

fn ns(cfg: &SuiteConfig) -> std::ops::RangeInclusive<usize> {
    1..=cfg.n_max
}

fn ms(cfg: &SuiteConfig) -> std::ops::RangeInclusive<usize> {
    1..=cfg.m_max
}

fn sweep(cfg: &SuiteConfig) -> Vec<PushforwardParams> {
    PushforwardParams::sweep(ms(cfg), ns(cfg), cfg.k_max, cfg.l_max)
}

fn pf_params(p: &PushforwardParams) -> Vec<(&'static str, String)> {
    vec![
        ("m", s(p.m)),
        ("n", s(p.n)),
        ("k", s(p.k)),
        ("l", s(p.l)),
        ("lambda", s(&p.lambda)),
        ("mu", s(&p.mu)),
    ]
}

fn per_sweep(cfg: &SuiteConfig, f: fn(&PushforwardParams, Mode, usize, &mut ChaCha8Rng) -> Outcome) -> Vec<Case> {
    let (mode, trials) = (cfg.mode, cfg.trials);
    sweep(cfg)
        .into_iter()
        .map(|p| Case::new(&pf_params(&p), move |rng| f(&p, mode, trials, rng)))
        .collect()
}

fn worked_example(_: &SuiteConfig) -> Vec<Case> {
    vec![Case::new(
        &[("m", s(9)), ("x", s("3,5,7")), ("y", s("2,5,6,9")), ("lambda", s("5,3,3,1")), ("mu", s("4,3,2"))],
        |_| {
            let u = SpectralParam::sym("u");
            let word = OperatorWord::new(vec![(OpKind::B, u.clone())])?;
            let bra = PositionSeq::new(vec![2, 5, 6, 9], 9)?;
            let ket = PositionSeq::new(vec![3, 5, 7], 9)?;
            let got = matrix_element(&bra, &word, &ket)?;
            let closed = &z_of_u(&u).pow(3) * &u.inv_poly().pow(2);
            let skew = skew_one_var(&"5,3,3,1".parse()?, &"4,3,2".parse()?, &u);
            Ok(Some(Comparison::merge(vec![Comparison::of(&got, &closed), Comparison::of(&got, &skew)])))
        },
    )]
}

fn perturbed(e1: u8, e2: u8, d1: u8, d2: u8, u: &SpectralParam, w: &SpectralParam) -> LaurentPoly {
    let base = r_elem(e1, e2, d1, d2, u, w);
    if (e1, e2, d1, d2) == (0, 1, 1, 0) {
        base.scale(&grolat_core::algebra::int(2))
    } else {
        base
    }
}

fn yang_baxter(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = vec![
        Case::new(&[("r-matrix", s("five-vertex")), ("point", s("symbolic"))], |_| {
            let [u, v, w] = ["u", "v", "w"].map(SpectralParam::sym);
            let bad = yang_baxter_failures(&r_elem, &u, &v, &w);
            Ok(Some(counted("components", bad.len(), 64, format!("{bad:?}"))))
        }),
        Case::new(&[("r-matrix", s("perturbed")), ("point", s("symbolic"))], |_| {
            let [u, v, w] = ["u", "v", "w"].map(SpectralParam::sym);
            let bad = yang_baxter_failures(&perturbed, &u, &v, &w).len();
            Ok(Some(Comparison {
                holds: bad > 0,
                lhs: format!("perturbation detected in {bad} components"),
                rhs: "perturbation detected".into(),
                note: None,
            }))
        }),
    ];
    if cfg.mode == Mode::Sample {
        for t in 0..cfg.trials {
            out.push(Case::new(&[("r-matrix", s("five-vertex")), ("point", format!("sample-{t}"))], |rng| {
                let a = sample_alpha(3, rng);
                let p = a.params();
                let bad = yang_baxter_failures(&r_elem, &p[0], &p[1], &p[2]);
                Ok(Some(counted("components", bad.len(), 64, format!("at {a}: {bad:?}"))))
            }));
        }
    }
    out
}

fn commutation(cfg: &SuiteConfig) -> Vec<Case> {
    let mut rels = vec![Relation::DbExchange, Relation::DbSwap, Relation::BCommute, Relation::DCommute];
    rels.extend(Relation::all_rtt());
    let mut out = Vec::new();
    for m in ms(cfg) {
        for &rel in &rels {
            out.push(Case::new(&[("relation", s(rel)), ("m", s(m))], move |_| relation_case(rel, m)));
        }
    }
    for n in ns(cfg) {
        for k in 0..=n.min(cfg.k_max) {
            for m in ms(cfg) {
                let rel = Relation::MultipleDb { n, k };
                out.push(Case::new(&[("relation", s(rel)), ("m", s(m))], move |_| relation_case(rel, m)));
            }
        }
    }
    out
}

fn relation_case(rel: Relation, m: usize) -> Outcome {
    let u = SpectralParam::symbols("u", rel.arity());
    let bad = commutation_failures(rel, m, &u)?;
    Ok(Some(counted("basis states", bad.len(), 1 << m, format!("{bad:?}"))))
}

fn wavefunction(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in ns(cfg) {
        for lam in enumerate_in_box(cfg.box_rows.min(n), cfg.box_cols) {
            out.push(Case::new(&[("n", s(n)), ("lambda", s(&lam))], move |_| Ok(Some(wavefunction_check(&lam, n)?))));
        }
    }
    out
}

fn d_layers(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for m in ms(cfg) {
        for n in ns(cfg) {
            out.push(Case::new(&[("m", s(m)), ("n", s(n))], move |_| {
                Ok(Some(lemma(check_d_layers_as_b(m, &SpectralParam::symbols("u", n))?)))
            }));
        }
    }
    out
}

fn mixed_layers(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for m in ms(cfg) {
        for n in ns(cfg) {
            for k in 0..=n.min(cfg.k_max) {
                out.push(Case::new(&[("m", s(m)), ("n", s(n)), ("k", s(k))], move |_| {
                    Ok(Some(lemma(check_mixed_layers_as_b(m, k, &SpectralParam::symbols("u", n))?)))
                }));
            }
        }
    }
    out
}

fn shape_pairs(cfg: &SuiteConfig, f: fn(&Partition, &Partition, usize) -> grolat_core::Result<Comparison>) -> Vec<Case> {
    let shapes = shapes(cfg);
    let mut out = Vec::new();
    for n in ns(cfg) {
        for lam in &shapes {
            for mu in &shapes {
                let (lam, mu) = (lam.clone(), mu.clone());
                out.push(Case::new(&[("n", s(n)), ("lambda", s(&lam)), ("mu", s(&mu))], move |_| {
                    Ok(Some(f(&lam, &mu, n)?))
                }));
            }
        }
    }
    out
}

fn lattice_skew(cfg: &SuiteConfig) -> Vec<Case> {
    shape_pairs(cfg, lattice_skew_check)
}

fn evaluator_agreement_suite(cfg: &SuiteConfig) -> Vec<Case> {
    shape_pairs(cfg, evaluator_agreement)
}

fn schur_operators(cfg: &SuiteConfig) -> Vec<Case> {
    shape_pairs(cfg, schur_operator_check)
}

fn u_function(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for m in ms(cfg) {
        for l in 0..=m.min(cfg.l_max) {
            let shapes = enumerate_in_box(l, (m - l) as u32);
            for n in ns(cfg) {
                for lam in &shapes {
                    for mu in &shapes {
                        let (lam, mu) = (lam.clone(), mu.clone());
                        let params = [("m", s(m)), ("l", s(l)), ("n", s(n)), ("lambda", s(&lam)), ("mu", s(&mu))];
                        out.push(Case::new(&params, move |_| Ok(Some(u_function_check(m, l, &lam, &mu, n)?))));
                    }
                }
            }
        }
    }
    out
}

fn bd_function(cfg: &SuiteConfig) -> Vec<Case> {
    per_sweep(cfg, |p, _, _, _| Ok(Some(class_g_matches_lattice(p)?)))
}

fn db_function(cfg: &SuiteConfig) -> Vec<Case> {
    per_sweep(cfg, |p, _, _, _| Ok(Some(db_function_check(p)?)))
}

fn db_expansion(cfg: &SuiteConfig) -> Vec<Case> {
    per_sweep(cfg, |p, _, _, _| Ok(Some(zdb_expansion_check(p)?)))
}

fn pushforward(cfg: &SuiteConfig) -> Vec<Case> {
    per_sweep(cfg, |p, mode, trials, rng| Ok(Some(verify_pushforward(p, mode, trials, rng)?)))
}

fn guo_sun(cfg: &SuiteConfig) -> Vec<Case> {
    let (mode, trials) = (cfg.mode, cfg.trials);
    let mut out = Vec::new();
    for m in ms(cfg) {
        for n in ns(cfg) {
            for k in 0..=n.min(m).min(cfg.k_max) {
                for lam in enumerate_in_box(k.min(cfg.box_rows), ((m - k) as u32).min(cfg.box_cols)) {
                    out.push(Case::new(&[("m", s(m)), ("n", s(n)), ("k", s(k)), ("lambda", s(&lam))], move |rng| {
                        Ok(Some(guo_sun_check(&lam, m, k, n, GuoSunVariant::Corrected, mode, trials, rng)?))
                    }));
                }
            }
        }
    }
    out
}

/// The rectangle `m^{n-k}` often quoted on the left side fails already at
/// the smallest nontrivial point; the version that holds uses `(m-k)^{n-k}`.
pub fn guo_sun_printed_witness() -> grolat_core::Result<Comparison> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    guo_sun_check(&Partition::empty(), 1, 1, 2, GuoSunVariant::Printed, Mode::Symbolic, 1, &mut rng)
}

fn guo_sun_known() -> Vec<Discrepancy> {
    let (lhs, rhs, reproduced) = match guo_sun_printed_witness() {
        Ok(c) => (c.lhs, c.rhs, !c.holds),
        Err(e) => (format!("error: {e}"), String::new(), false),
    };
    vec![Discrepancy {
        name: "guo-sun-rectangle".into(),
        description: "left-side rectangle m^(n-k) as commonly quoted; (m-k)^(n-k) is the form that holds.".into(),
        witness: "m=1 n=2 k=1 lambda=()".into(),
        lhs,
        rhs,
        reproduced,
    }]
}

fn residues(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in ns(cfg) {
        for k in 0..=n.min(cfg.k_max) {
            for t in 0..cfg.trials {
                out.push(Case::new(&[("n", s(n)), ("k", s(k)), ("class", format!("random-{t}"))], move |rng| {
                    let f = random_class(k, n, rng);
                    let alpha = sample_alpha(n, rng);
                    let res = residue_pushforward(&f, &alpha)?;
                    let loc = localization_pushforward(&f, &alpha)?;
                    Ok(Some(Comparison::of(&RatFunc::from(LaurentPoly::constant(res)), &loc)
                        .with_note(format!("class {f} at alpha={alpha}"))))
                }));
            }
        }
    }
    for n in ns(cfg) {
        for k in 0..=n.min(cfg.k_max) {
            let (mode, trials) = (cfg.mode, cfg.trials);
            out.push(Case::new(&[("n", s(n)), ("k", s(k)), ("class", s("unit"))], move |rng| {
                let p = PushforwardParams::new(k, n, k, 0, Partition::empty(), Partition::empty())?;
                Ok(Some(special_case(SpecialCase::ResidueUnit, &p, mode, trials, rng)?))
            }));
        }
    }
    out
}

fn special_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let (mode, trials) = (cfg.mode, cfg.trials);
    let mut out = Vec::new();
    for case in SpecialCase::ALL {
        for p in sweep(cfg) {
            let mut params = pf_params(&p);
            params.push(("case", s(case)));
            out.push(Case::new(&params, move |rng| {
                if !case.applies(&p) {
                    return Ok(None);
                }
                Ok(Some(special_case(case, &p, mode, trials, rng)?))
            }));
        }
    }
    out
}

fn branching(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in ns(cfg) {
        for lam in shapes(cfg) {
            out.push(Case::new(&[("n", s(n)), ("lambda", s(&lam))], move |_| {
                let ok = branching_check(&lam, &SpectralParam::symbols("u", n))?;
                Ok(Some(counted("splittings", usize::from(!ok), 1, String::new())))
            }));
        }
    }
    out
}

fn factorization(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for w in 0..=cfg.box_cols {
        for rows in ns(cfg) {
            out.push(Case::new(&[("rectangle", format!("{w}^{rows}"))], move |_| {
                Ok(Some(rectangle_factorization(w, rows)?))
            }));
        }
    }
    for lam in shapes(cfg) {
        for n in lam.len().max(1)..=cfg.n_max {
            let lam = lam.clone();
            out.push(Case::new(&[("lambda", s(&lam)), ("n", s(n)), ("zero-padded", s(true))], move |_| {
                Ok(Some(stability_check(&lam, n)?))
            }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique_and_resolvable() {
        let mut names: Vec<_> = REGISTRY.iter().map(|s| s.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len());
        assert!(REGISTRY.iter().all(|s| lookup(s.name).is_some()));
        assert!(lookup("nope").is_none());
    }

    #[test]
    fn printed_rectangle_fails_at_witness() {
        let c = guo_sun_printed_witness().unwrap();
        assert!(!c.holds);
        assert_eq!(c.lhs, "-z1*z2 + z1 + z2");
        assert_eq!(c.rhs, "1");
    }
}
