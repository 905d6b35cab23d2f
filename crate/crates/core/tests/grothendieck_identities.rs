use std::collections::HashMap;

use grolat_core::algebra::Var;
use grolat_core::grothendieck::{branching_check, groth_det, skew_multi};
use grolat_core::identities::{
    db_function_check, evaluator_agreement, rectangle_factorization, stability_check, u_function_check,
    wavefunction_check,
};
use grolat_core::lattice::{check_d_layers_as_b, check_mixed_layers_as_b, SpectralParam};
use grolat_core::partitions::enumerate_in_box;
use grolat_core::pushforward::{class_g_matches_lattice, PushforwardParams};
use itertools::Itertools;

#[test]
fn wavefunction_is_the_determinant() {
    for n in 1..=3 {
        for lam in enumerate_in_box(3, 3).into_iter().filter(|l| l.len() <= n) {
            let c = wavefunction_check(&lam, n).unwrap();
            assert!(c.holds, "{lam} n={n}: {c:?}");
        }
    }
}

#[test]
fn four_evaluators_agree() {
    let shapes = enumerate_in_box(3, 3);
    for n in 1..=3 {
        for lam in &shapes {
            for mu in &shapes {
                let c = evaluator_agreement(lam, mu, n).unwrap();
                assert!(c.holds, "{lam} {mu} n={n}: {c:?}");
            }
        }
    }
}

#[test]
fn layer_reductions() {
    for m in 1..=4 {
        for n in 1..=3 {
            let u = SpectralParam::symbols("u", n);
            let r = check_d_layers_as_b(m, &u).unwrap();
            assert!(r.ok(), "{:?}", r.failures);
            for k in 0..=n {
                let r = check_mixed_layers_as_b(m, k, &u).unwrap();
                assert!(r.ok(), "{:?}", r.failures);
            }
        }
    }
}

#[test]
fn partition_functions_are_skew_polynomials() {
    for m in 1..=4usize {
        for l in 0..=m {
            let shapes = enumerate_in_box(l, (m - l) as u32);
            for n in 1..=3 {
                for lam in &shapes {
                    for mu in &shapes {
                        assert!(u_function_check(m, l, lam, mu, n).unwrap().holds, "m={m} l={l} {lam} {mu} n={n}");
                    }
                }
            }
        }
    }
    for p in PushforwardParams::sweep(1..=4, 1..=3, 3, 4) {
        assert!(class_g_matches_lattice(&p).unwrap().holds, "{p}");
        assert!(db_function_check(&p).unwrap().holds, "{p}");
    }
}

#[test]
fn rectangles_factorize_and_zeros_drop_out() {
    for m in 0..=3 {
        for rows in 1..=3 {
            assert!(rectangle_factorization(m, rows).unwrap().holds, "{m}^{rows}");
        }
    }
    for lam in enumerate_in_box(3, 3) {
        for n in lam.len().max(1)..=3 {
            assert!(stability_check(&lam, n).unwrap().holds, "{lam} n={n}");
        }
    }
}

#[test]
fn evaluators_symmetric_in_variables() {
    let z = Var::indexed("z", 3);
    let u = SpectralParam::symbols("u", 3);
    let shapes = enumerate_in_box(3, 3);
    for lam in &shapes {
        let g = groth_det(lam, &z).unwrap();
        for mu in &shapes {
            let s = skew_multi(lam, mu, &u);
            for perm in (0..3).permutations(3) {
                let pz: Vec<Var> = perm.iter().map(|&i| z[i]).collect();
                let rename: HashMap<Var, Var> = z.iter().copied().zip(pz.iter().copied()).collect();
                assert_eq!(g.rename(&rename), g, "{lam}");
                let pu: Vec<SpectralParam> = perm.iter().map(|&i| u[i].clone()).collect();
                assert_eq!(skew_multi(lam, mu, &pu), s, "{lam} {mu}");
            }
        }
    }
}

#[test]
fn branching_rule_in_box() {
    let u = SpectralParam::symbols("u", 3);
    for lam in enumerate_in_box(3, 3) {
        for n in 1..=3 {
            assert!(branching_check(&lam, &u[..n]).unwrap(), "{lam} n={n}");
        }
    }
}
