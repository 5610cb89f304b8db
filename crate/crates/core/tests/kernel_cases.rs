use arthurkit::endoscopy::validate;
use arthurkit::kernel_cases::{
    basic_triangles, compile, compile_with, to_dot, tower, ArrowLabel, CompileOptions, Diagram, TowerStep,
};
use arthurkit::orbits::{coefficient_kind, CoefficientKind};
use arthurkit::parameters::classify;
use arthurkit::{ArthurParameter, CuspidalDatum, EtaLabel, GroupDatum, GroupFamily, Sign, SimpleParameter};

fn symp(a: u32) -> CuspidalDatum {
    CuspidalDatum::symplectic("τ", a).with_central_nonvanishing(true)
}

fn one() -> SimpleParameter {
    SimpleParameter::new(CuspidalDatum::trivial(), 1)
}

#[test]
fn sp_example() {
    let k = compile(GroupFamily::Sp, &symp(2), 2, 2).unwrap();
    assert_eq!(k.ambient, GroupDatum::sp(4));
    assert_eq!(k.psi0, ArthurParameter::simple(symp(2), 4).plus(one()));
    assert_eq!(k.endoscopy.describe(), "SO_4 x Sp_2 -> Sp_6");
    assert_eq!(k.coefficient, CoefficientKind::Bessel);
    assert_eq!(k.conjecture_tag, "conj-5.2");
    assert!(k.satisfied());
}

#[test]
fn so_even_a_odd_example() {
    let tau = CuspidalDatum::orthogonal("τ", 3);
    let k = compile(GroupFamily::SOeven, &tau, 1, 2).unwrap();
    assert_eq!(k.ambient.defining_size(), 10);
    let ids: Vec<_> = k.psi0.summands().iter().map(|s| (s.tau.id.as_str().to_string(), s.b)).collect();
    assert_eq!(ids, vec![("τ".to_string(), 3), ("χ".to_string(), 1)]);
    assert_eq!(k.endoscopy.factors, (GroupDatum::sp(1), GroupDatum::sp(1)));
    assert_eq!(k.endoscopy.target.defining_size(), 6);
    assert_eq!(k.coefficient, CoefficientKind::FourierJacobi);
}

#[test]
fn unitary_example() {
    let tau = CuspidalDatum::conjugate("τ", 2, Sign::Plus);
    let opts = CompileOptions { kappa: Some(Sign::Plus), ..Default::default() };
    let k = compile_with(GroupFamily::U, &tau, 1, 1, &opts).unwrap();
    assert_eq!(k.ambient, GroupDatum::unitary(4, Sign::Plus));
    let (f1, f2) = &k.endoscopy.factors;
    assert_eq!((f1.index(), f2.index()), (2, 1));
    // kappa (-1)^c and kappa (-1)^(m_V - ac)
    assert_eq!((f1.kappa(), f2.kappa()), (Some(Sign::Minus), Some(Sign::Plus)));
    assert!(k.satisfied(), "{:?}", k.constraints);
}

#[test]
fn undefined_cell_errors() {
    let tau = CuspidalDatum::orthogonal("τ", 2);
    assert!(compile(GroupFamily::SOodd, &tau, 2, 2).is_err());
}

#[test]
fn failed_constraints_are_flagged() {
    // symplectic tau wants b even for Sp targets
    let k = compile(GroupFamily::Sp, &symp(2), 1, 2).unwrap();
    assert!(!k.satisfied());
    let k = compile(GroupFamily::Sp, &symp(2), 0, 2).unwrap();
    assert!(k.identity_transfer);
}

fn pool(a: u32) -> Vec<CuspidalDatum> {
    let mut v = vec![CuspidalDatum::orthogonal("τ", a)];
    if a % 2 == 0 {
        v.push(symp(a));
        v.push(CuspidalDatum::symplectic("τ", a));
    }
    for s in [Sign::Plus, Sign::Minus] {
        v.push(CuspidalDatum::conjugate("τ", a, s));
    }
    v
}

#[test]
fn compiled_cells_are_coherent() {
    let mut satisfied = 0;
    for a in 1..=6 {
        for tau in pool(a) {
            for target in [GroupFamily::Sp, GroupFamily::SOodd, GroupFamily::SOeven, GroupFamily::Mp, GroupFamily::U] {
                if (target == GroupFamily::U) != (tau.base != arthurkit::parameters::Base::Plain) {
                    continue;
                }
                for b in 0..=5 {
                    for c in 0..=6 {
                        let Ok(k) = compile(target, &tau, b, c) else { continue };
                        assert_eq!(k.d, a - 1);
                        assert_eq!(k.endoscopy.target.defining_size(), k.r());
                        if !k.satisfied() {
                            continue;
                        }
                        satisfied += 1;
                        let groups = classify(&k.psi0, k.ambient.kappa()).unwrap();
                        assert!(groups.iter().any(|g| g.same_shape(&k.ambient)), "{target} a={a} b={b} c={c}");
                        let v = validate(&k.endoscopy);
                        assert!(v.ok, "{target} a={a} b={b} c={c}: {:?}", v.reasons);
                        let want = coefficient_kind(k.ambient.family().orbit_family(), k.d, c, k.r()).unwrap();
                        assert_eq!(k.coefficient, want, "{target} a={a} b={b} c={c}");
                    }
                }
            }
        }
    }
    assert!(satisfied > 50, "only {satisfied} satisfied cells");
}

#[test]
fn tower_with_odd_orthogonal_base() {
    // SO_3 over a symplectic parameter of size 2; tau has a = 2
    let sigma = CuspidalDatum::symplectic("σ", 2);
    let base_psi = ArthurParameter::simple(sigma, 1);
    let tau = CuspidalDatum::symplectic("τ", 2);
    let nodes = tower(&GroupDatum::so_odd(1), &base_psi, &tau, 2).unwrap();
    let sizes: Vec<_> = nodes.iter().map(|n| n.group.defining_size()).collect();
    assert_eq!(sizes, vec![3 + 2, 3 + 6]);
    assert_eq!(nodes[0].parameter, base_psi.plus(SimpleParameter::new(tau.clone(), 1)));
    assert_eq!(nodes[1].parameter, base_psi.plus(SimpleParameter::new(tau.clone(), 3)));
    for w in nodes.windows(2) {
        assert_eq!(w[1].level_b, w[0].level_b + 2);
    }
    assert!(nodes.iter().all(|n| n.step == TowerStep::Ascend));
}

#[test]
fn tower_descends_while_summand_exists() {
    let sigma = CuspidalDatum::symplectic("σ", 2);
    let tau = CuspidalDatum::symplectic("τ", 2);
    let psi = ArthurParameter::simple(sigma.clone(), 1).plus(SimpleParameter::new(tau.clone(), 1));
    let nodes = tower(&GroupDatum::so_odd(2), &psi, &tau, 1).unwrap();
    assert_eq!(nodes[0].step, TowerStep::Descend);
    assert_eq!(nodes[0].parameter, ArthurParameter::simple(sigma, 1));
    assert_eq!(nodes[0].group, GroupDatum::so_odd(1));
    assert_eq!(nodes.len(), 2);
}

#[test]
fn metaplectic_chain_climbs() {
    let tau = symp(2);
    let nodes = tower(&GroupDatum::mp(1), &ArthurParameter::simple(tau.clone(), 1), &tau, 1).unwrap();
    assert_eq!(nodes.len(), 1);
    assert_eq!(nodes[0].group, GroupDatum::sp(2));
    assert_eq!(nodes[0].parameter, ArthurParameter::simple(tau, 2).plus(one()));
}

#[test]
fn tower_rejects_mismatched_base() {
    let tau = CuspidalDatum::symplectic("τ", 2);
    let psi = ArthurParameter::simple(CuspidalDatum::orthogonal("σ", 3), 1);
    assert!(tower(&GroupDatum::so_odd(1), &psi, &tau, 1).is_err());
}

#[test]
fn triangles() {
    let t = basic_triangles(&symp(2), 1).unwrap();
    let sizes: Vec<_> = t.basic.vertices.iter().map(|v| v.group.to_string()).collect();
    assert_eq!(sizes, vec!["Sp_8", "Mp_6", "Sp_4"]);
    let labels: Vec<_> = t.basic.edges.iter().map(|e| e.label).collect();
    assert_eq!(labels, vec![ArrowLabel::FJ, ArrowLabel::LFT, ArrowLabel::RES]);
    let dual = t.dual.as_ref().unwrap();
    let sizes: Vec<_> = dual.vertices.iter().map(|v| v.group.to_string()).collect();
    assert_eq!(sizes, vec!["Mp_6", "Sp_4", "Mp_2"]);

    for e in 1..=3 {
        let t = basic_triangles(&symp(2 * e), 0).unwrap();
        let sizes: Vec<_> = t.basic.vertices.iter().map(|v| v.group.defining_size()).collect();
        assert_eq!(sizes, vec![4 * e, 2 * e, 0]);
        assert!(t.dual.is_none());
    }

    for l in 0..4 {
        let t = basic_triangles(&symp(4), l).unwrap();
        for v in t.basic.vertices.iter().chain(t.dual.iter().flat_map(|d| &d.vertices)) {
            let gs = classify(&v.parameter, None).unwrap();
            assert!(gs.iter().any(|g| g.same_shape(&v.group)), "{} / {}", v.group, v.parameter);
        }
    }
}

#[test]
fn triangle_needs_hypotheses() {
    assert!(basic_triangles(&CuspidalDatum::symplectic("τ", 2), 1).is_err());
    assert!(basic_triangles(&CuspidalDatum::orthogonal("τ", 2).with_central_nonvanishing(true), 1).is_err());
}

#[test]
fn dot_output() {
    let empty = to_dot(Diagram::Tower(&[]));
    assert!(empty.starts_with("digraph"));
    assert!(!empty.contains("->"));

    let sigma = CuspidalDatum::symplectic("σ", 2);
    let nodes = tower(&GroupDatum::so_odd(1), &ArthurParameter::simple(sigma, 1), &CuspidalDatum::symplectic("τ", 2), 3)
        .unwrap();
    let dot = to_dot(Diagram::Tower(&nodes));
    assert_eq!(dot.matches("[label=").count(), 3);
    assert_eq!(dot.matches("->").count(), 2);
    assert_eq!(dot, to_dot(Diagram::Tower(&nodes)));

    let t = basic_triangles(&symp(2), 1).unwrap();
    let dot = to_dot(Diagram::Triangle(&t.basic));
    assert_eq!(dot.matches("->").count(), 3);
    for l in ["\"FJ\"", "\"RES\"", "\"LFT\""] {
        assert!(dot.contains(l), "{dot}");
    }
    assert!(dot.contains("Sp_8 / (τ,4)⊞(1,1)"));
}

#[test]
fn eta_pair_carries_free_token() {
    let k = compile(GroupFamily::SOeven, &CuspidalDatum::orthogonal("τ", 2), 1, 2).unwrap();
    let (e1, e2) = k.endoscopy.eta_pair.clone().unwrap();
    assert_eq!(e1, ArthurParameter::simple(CuspidalDatum::orthogonal("τ", 2), 1).central_eta());
    assert_eq!(e2, EtaLabel::token("ξ"));
    assert_eq!(k.endoscopy.target.eta(), Some(&(&e1 * &e2)));
}
