//! The nine acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion fails. Checks use oracles written here rather
//! than the library's own audit.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use arthurkit::audit::{run_audit, AuditConfig, Mode};
use arthurkit::endoscopy::validate;
use arthurkit::jordan::{pole_profile, reconstruct};
use arthurkit::kernel_cases::{compile, compile_with, CompileOptions};
use arthurkit::orbits::{coefficient_kind, grading};
use arthurkit::parameters::{classify, kappa_ab, sign_of_simple, Base, TypeTag};
use arthurkit::partitions::{bv_dual, collapse};
use arthurkit::spectral::{beta_factors, residual_points, rho_pair, x_plus, FactorKind, PoleCase, RhoName, SpectralFamily};
use arthurkit::{
    ArthurParameter, CuspidalDatum, Error, GroupFamily, OrbitFamily, Partition, Sign, SimpleParameter,
};
use num_rational::Rational64 as Q;

/// `Ok(checked)` or the first few failure messages.
type Outcome = Result<usize, Vec<String>>;

struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(msg());
        }
    }

    fn done(self) -> Outcome {
        if self.failures.is_empty() {
            Ok(self.checked)
        } else {
            Err(self.failures)
        }
    }
}

// ---------- partition oracles ----------

fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn dominates(x: &[u32], y: &[u32]) -> bool {
    let (mut sx, mut sy) = (0, 0);
    for i in 0..x.len().max(y.len()) {
        sx += x.get(i).copied().unwrap_or(0);
        sy += y.get(i).copied().unwrap_or(0);
        if sx < sy {
            return false;
        }
    }
    true
}

fn valid(x: &[u32], fam: OrbitFamily) -> bool {
    let bad_parity = match fam {
        OrbitFamily::A => return true,
        OrbitFamily::C => 1,
        OrbitFamily::B | OrbitFamily::D => 0,
    };
    let total: u32 = x.iter().sum();
    let total_ok = match fam {
        OrbitFamily::B => total % 2 == 1,
        OrbitFamily::C | OrbitFamily::D => total % 2 == 0,
        OrbitFamily::A => true,
    };
    total_ok && x.iter().filter(|&&p| p % 2 == bad_parity).all(|&p| x.iter().filter(|&&q| q == p).count() % 2 == 0)
}

/// The closed forms for the dual of `[b^a]`, under the parities where they
/// are stated. `C` with `b` even and `a` odd has none.
fn rect_closed_form(dual: OrbitFamily, a: u32, b: u32) -> Option<Vec<u32>> {
    let rep = |p: u32, k: u32| std::iter::repeat(p).take(k as usize);
    let v: Vec<u32> = match dual {
        OrbitFamily::C if b % 2 == 1 => rep(a + 1, 1).chain(rep(a, b - 1)).collect(),
        OrbitFamily::C if a % 2 == 0 => rep(a + 1, 1).chain(rep(a, b - 2)).chain([a - 1, 1]).collect(),
        OrbitFamily::D if b % 2 == 0 => rep(a, b).collect(),
        OrbitFamily::D => rep(a, b - 1).chain([a - 1, 1]).collect(),
        OrbitFamily::B => rep(a, b - 1).chain([a - 1]).collect(),
        _ => return None,
    };
    Some(v.into_iter().filter(|&p| p > 0).collect())
}

fn criterion_bv() -> Outcome {
    let mut t = Tally::new();
    for (dual, target) in [(OrbitFamily::C, OrbitFamily::B), (OrbitFamily::D, OrbitFamily::D), (OrbitFamily::B, OrbitFamily::C)] {
        for a in 1..=40u32 {
            for b in 1..=40 / a {
                let rect = vec![b; a as usize];
                if !valid(&rect, dual) {
                    continue;
                }
                let Some(want) = rect_closed_form(dual, a, b) else { continue };
                let got = bv_dual(&Partition::new(rect), dual, target).map(|p| p.parts().to_vec());
                t.check(got.as_ref() == Ok(&want), || format!("{dual}: [{b}^{a}] -> {got:?}, want {want:?}"));
            }
        }
    }
    t.done()
}

fn criterion_collapse() -> Outcome {
    let mut t = Tally::new();
    for total in 1..=20 {
        let all = partitions_of(total);
        for fam in [OrbitFamily::B, OrbitFamily::C, OrbitFamily::D] {
            let valids: Vec<&Vec<u32>> = all.iter().filter(|x| valid(x, fam)).collect();
            if valids.is_empty() {
                continue;
            }
            for q in &all {
                let below: Vec<&Vec<u32>> = valids.iter().copied().filter(|x| dominates(q, x)).collect();
                // In a finite poset a unique maximal element is the greatest one.
                let mut top = below[0];
                for x in &below {
                    if dominates(x, top) {
                        top = x;
                    }
                }
                let greatest = below.iter().all(|x| dominates(top, x));
                let got = collapse(&Partition::new(q.clone()), fam).map(|p| p.parts().to_vec());
                t.check(greatest && got.as_ref() == Ok(top), || {
                    format!("{fam} collapse of {q:?}: got {got:?}, brute force {top:?} (unique: {greatest})")
                });
            }
        }
    }
    t.done()
}

fn criterion_grading() -> Outcome {
    let mut t = Tally::new();
    for fam in [OrbitFamily::A, OrbitFamily::B, OrbitFamily::C, OrbitFamily::D] {
        for total in 1..=24u32 {
            for d in 1..=total {
                for c in 1..=total / d {
                    let r = total - c * d;
                    let q = Partition::hook_type(d, c, r);
                    if r == 0 || !valid(q.parts(), fam) {
                        continue;
                    }
                    let g = grading(fam, &q).unwrap();
                    let m = total as u64;
                    let dim = match fam {
                        OrbitFamily::A => m * m,
                        OrbitFamily::C => m * (m + 1) / 2,
                        _ => m * (m - 1) / 2,
                    };
                    t.check((g.dim(1) == 0) == (d % 2 == 1) && g.total_dim() == dim, || {
                        format!("{fam} {q}: g_1 = {}, total {} vs {dim}", g.dim(1), g.total_dim())
                    });
                }
            }
        }
    }
    t.done()
}

fn case_taus(a: u32) -> Vec<CuspidalDatum> {
    let mut v = vec![CuspidalDatum::orthogonal("τ", a)];
    if a % 2 == 0 {
        v.push(CuspidalDatum::symplectic("τ", a).with_central_nonvanishing(true));
        v.push(CuspidalDatum::symplectic("τ", a).with_central_nonvanishing(false));
    }
    v.push(CuspidalDatum::conjugate("τ", a, Sign::Plus));
    v.push(CuspidalDatum::conjugate("τ", a, Sign::Minus));
    v
}

fn criterion_cases() -> Outcome {
    let mut t = Tally::new();
    let targets = [GroupFamily::Sp, GroupFamily::SOodd, GroupFamily::SOeven, GroupFamily::Mp, GroupFamily::U];
    for a in 1..=6 {
        for tau in case_taus(a) {
            for target in targets {
                if (target == GroupFamily::U) != (tau.base == Base::QuadraticExt) {
                    continue;
                }
                for b in 0..=5 {
                    for c in 0..=6 {
                        let Ok(k) = compile(target, &tau, b, c) else { continue };
                        if !k.satisfied() {
                            continue;
                        }
                        let cell = format!("{target} a={a} {} b={b} c={c}", tau.id);
                        let classified = classify(&k.psi0, k.ambient.kappa())
                            .map(|gs| gs.iter().any(|g| g.same_shape(&k.ambient)))
                            .unwrap_or(false);
                        t.check(classified, || format!("{cell}: {} not in {}", k.psi0, k.ambient));
                        let kind = coefficient_kind(k.ambient.family().orbit_family(), k.d, c, k.r());
                        t.check(kind.as_ref() == Ok(&k.coefficient), || format!("{cell}: coefficient {kind:?}"));
                        let v = validate(&k.endoscopy);
                        t.check(v.ok, || format!("{cell}: {:?}", v.reasons));
                    }
                }
            }
        }
    }
    t.done()
}

fn criterion_signs() -> Outcome {
    let mut t = Tally::new();
    for kappa_a in [Sign::Plus, Sign::Minus] {
        for a in 1..=30u32 {
            let eta = kappa_a * Sign::pow_minus_one(a as i64 - 1);
            let tau = CuspidalDatum::conjugate("τ", a, eta);
            for b in 1..=30 / a {
                let lhs = kappa_ab(kappa_a, a, b) * Sign::pow_minus_one((a * b) as i64 - 1);
                let rhs = eta * Sign::pow_minus_one(b as i64 - 1);
                let tag = sign_of_simple(&SimpleParameter::new(tau.clone(), b), Some(kappa_a));
                t.check(lhs == rhs && tag == Ok(TypeTag::Conjugate(rhs)), || {
                    format!("kappa_a={kappa_a} a={a} b={b}: {lhs} vs {rhs}, tag {tag:?}")
                });
            }
        }
    }
    // Unitary cells through the compiler, m_V <= 40.
    for a in 1..=40u32 {
        for eta in [Sign::Plus, Sign::Minus] {
            let tau = CuspidalDatum::conjugate("τ", a, eta);
            for extra in [false, true] {
                for c in 1..=40 / a {
                    for b in 0..=40 / a - c {
                        let m_v = a * (b + c) + u32::from(extra);
                        if m_v > 40 {
                            continue;
                        }
                        let opts = CompileOptions { unitary_extra: extra, ..Default::default() };
                        let Ok(k) = compile_with(GroupFamily::U, &tau, b, c, &opts) else {
                            t.check(false, || format!("U a={a} b={b} c={c} extra={extra} did not compile"));
                            continue;
                        };
                        let kappa = k.ambient.kappa().unwrap();
                        let e = &k.endoscopy;
                        let n = e.target.index() as i64;
                        let (f1, f2) = &e.factors;
                        let (s1, s2) = e.signs.unwrap();
                        let rel_ok = s1 == Sign::pow_minus_one(n - f1.index() as i64)
                            && s2 == Sign::pow_minus_one(n - f2.index() as i64);
                        let abs_ok = f1.index() == m_v - a * c
                            && f1.kappa() == Some(kappa * Sign::pow_minus_one(c as i64))
                            && f2.kappa() == Some(kappa * Sign::pow_minus_one((m_v - a * c) as i64));
                        t.check(rel_ok && abs_ok, || format!("U({m_v}) a={a} c={c}: {}", e.describe()));
                    }
                }
            }
        }
    }
    t.done()
}

fn criterion_beta() -> Outcome {
    let mut t = Tally::new();
    let table = [
        (SpectralFamily::UEven, RhoName::AsaiPlus, RhoName::AsaiMinus),
        (SpectralFamily::UOdd, RhoName::AsaiMinus, RhoName::AsaiPlus),
        (SpectralFamily::SOodd, RhoName::Sym2, RhoName::Wedge2),
        (SpectralFamily::Sp, RhoName::Wedge2, RhoName::Sym2),
        (SpectralFamily::SOeven, RhoName::Wedge2, RhoName::Sym2),
    ];
    for (fam, rho, rho_minus) in table {
        t.check(rho_pair(fam) == Ok((rho, rho_minus)), || format!("{fam:?}: rho table"));
        for b in 1..=50u32 {
            let f = beta_factors(fam, b, true).unwrap();
            let bi = b as i64;
            let mut want = vec![(FactorKind::RankinSelberg, None, 1, Q::new(bi + 1, 2))];
            for i in 1..=(bi + 1) / 2 {
                want.push((FactorKind::Rho, Some(rho), 2, Q::from(bi + 2 - 2 * i)));
            }
            for i in 1..=bi / 2 {
                want.push((FactorKind::RhoMinus, Some(rho_minus), 2, Q::from(bi + 1 - 2 * i)));
            }
            let got: Vec<_> = f.iter().map(|x| (x.kind, x.rho_name, x.slope, x.intercept)).collect();
            t.check(got.len() == b as usize + 1 && got == want, || format!("{fam:?} b={b}: {got:?}"));
        }
    }
    t.check(rho_pair(SpectralFamily::Mp).is_err(), || "Mp has no table".into());
    t.done()
}

fn criterion_residual() -> Outcome {
    let mut t = Tally::new();
    for b in 1..=10i64 {
        for id in 1..=4u8 {
            let case = PoleCase::new(id).unwrap();
            let twice_top = [b, b - 2, b + 1, b - 1][id as usize - 1];
            let want: Vec<Q> = (1..=twice_top.max(0)).rev().filter(|x| (twice_top - x) % 2 == 0).map(|x| Q::new(x, 2)).collect();
            let got = x_plus(b as u32, case);
            let got_set: BTreeSet<Q> = got.iter().copied().collect();
            let want_set: BTreeSet<Q> = want.iter().copied().collect();
            t.check(got_set == want_set, || format!("b={b} {case}: X+ {got:?} want {want:?}"));
            let res = residual_points(b as u32, case);
            let want_res: Vec<(Q, bool)> = want
                .iter()
                .filter(|&&s| s <= Q::new(b + 1, 2))
                .map(|&s| (s, !(id == 3 && s == Q::new(b - 1, 2))))
                .collect();
            let mut got_res: Vec<(Q, bool)> = res.iter().map(|p| (p.s0, p.square_integrable)).collect();
            got_res.sort_by(|x, y| y.0.cmp(&x.0));
            t.check(got_res == want_res, || format!("b={b} {case}: residual {got_res:?} want {want_res:?}"));
        }
    }
    t.done()
}

/// Every set of distinct `(tau, b)` over `pool` with `N <= max_n`.
fn elliptic_parameters(pool: &[CuspidalDatum], max_n: u32) -> Vec<ArthurParameter> {
    let simples: Vec<SimpleParameter> = pool
        .iter()
        .flat_map(|t| (1..=max_n / t.a).map(move |b| SimpleParameter::new(t.clone(), b)))
        .collect();
    let mut out = Vec::new();
    fn go(i: usize, left: u32, simples: &[SimpleParameter], cur: &mut Vec<SimpleParameter>, out: &mut Vec<ArthurParameter>) {
        if i == simples.len() {
            if !cur.is_empty() {
                out.push(ArthurParameter::new(cur.clone()));
            }
            return;
        }
        go(i + 1, left, simples, cur, out);
        let n = simples[i].n();
        if n <= left {
            cur.push(simples[i].clone());
            go(i + 1, left - n, simples, cur, out);
            cur.pop();
        }
    }
    go(0, max_n, &simples, &mut Vec::new(), &mut out);
    out
}

/// Exact round trip where the per-`tau` same-parity rule holds; a
/// parity error from `reconstruct` where it does not.
fn criterion_jordan() -> Outcome {
    let mut t = Tally::new();
    let pool = vec![
        CuspidalDatum::trivial(),
        CuspidalDatum::symplectic("τ", 2),
        CuspidalDatum::orthogonal("σ", 3),
    ];
    let mut round_trips = 0;
    for psi in elliptic_parameters(&pool, 16) {
        let homogeneous = pool.iter().all(|tau| {
            let bs: BTreeSet<u32> = psi.summands().iter().filter(|s| s.tau.id == tau.id).map(|s| s.b % 2).collect();
            bs.len() <= 1
        });
        let profile = pole_profile(&psi).unwrap();
        let back = reconstruct(&profile, &pool, psi.n());
        if homogeneous {
            round_trips += 1;
            t.check(back.as_ref() == Ok(&psi), || format!("{psi}: {back:?}"));
        } else {
            t.check(matches!(back, Err(Error::ParityViolation(_))), || format!("{psi}: {back:?}"));
        }
    }
    t.check(round_trips > 100, || format!("only {round_trips} round trips"));
    t.done()
}

fn criterion_determinism() -> Outcome {
    let mut t = Tally::new();
    let cfg = AuditConfig::default();
    let first = run_audit(&cfg, Mode::default()).to_json();
    let second = run_audit(&cfg, Mode::default()).to_json();
    t.check(first == second, || "two audit runs differ".into());
    let seq = run_audit(&cfg, Mode::Sequential).to_json();
    t.check(first == seq, || "sequential audit differs from the default mode".into());
    let report: serde_json::Value = serde_json::from_str(&first).unwrap();
    t.check(report["total_failures"] == 0, || format!("audit failures: {}", report["total_failures"]));
    t.done()
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 9] = [
        ("1. BV closed forms on [b^a], ab <= 40", criterion_bv, Some(Duration::from_secs(1))),
        ("2. collapse = brute-force maximum, totals <= 20", criterion_collapse, Some(Duration::from_secs(30))),
        ("3. grading dichotomy and dimension, totals <= 24", criterion_grading, Some(Duration::from_secs(10))),
        ("4. case table a <= 6, b <= 5, c <= 6", criterion_cases, Some(Duration::from_secs(10))),
        ("5. sign identities, ab <= 30, m_V <= 40", criterion_signs, None),
        ("6. beta grammar and rho table, b <= 50", criterion_beta, None),
        ("7. X+ and residual annotations, b <= 10", criterion_residual, None),
        ("8. Jordan round trip, N <= 16", criterion_jordan, Some(Duration::from_secs(5))),
        ("9. audit determinism", criterion_determinism, None),
    ];
    let mut failed = Vec::new();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let slow = limit.is_some_and(|l| took > l);
        match (&outcome, slow) {
            (Ok(n), false) => println!("PASS {name} ({n} checks, {:.2}s)", took.as_secs_f64()),
            (Ok(n), true) => {
                println!("FAIL {name} ({n} checks, {:.2}s exceeds {:?})", took.as_secs_f64(), limit.unwrap());
                failed.push(name);
            }
            (Err(msgs), _) => {
                println!("FAIL {name} ({:.2}s)", took.as_secs_f64());
                for m in msgs {
                    println!("     {m}");
                }
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
