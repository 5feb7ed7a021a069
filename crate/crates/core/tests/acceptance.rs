//! Acceptance suite: one PASS/FAIL line per criterion, with its runtime and
//! budget. Everything is exact; the expected values are recomputed here by
//! direct formulas rather than read back from the library.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use peiffer_core::action::{point_to_action, semidirect, Point, DEFAULT_SEMIDIRECT_CAP as CAP};
use peiffer_core::census::{mutual_action_family, CensusConfig, FamilyMember};
use peiffer_core::compat::{check_compatible, reproduce_witness, MutualActions};
use peiffer_core::fixtures::{self, actions_of, perm};
use peiffer_core::freeword::{FreeProduct, Letter, Side};
use peiffer_core::group::{homomorphisms, is_isomorphic, FiniteGroup, GroupRef, DEFAULT_SEARCH_CAP};
use peiffer_core::lie::{
    self, check_lie_xmod, lie_compatible, lie_induced_actions, lie_peiffer, lie_peiffer_xmods,
    lie_universal_map, LieAlgebra, LieMutualActions, LieRef, Q,
};
use peiffer_core::peiffer::{
    induced_actions, peiffer_product, peiffer_xmods, strong_relation_check, symmetric_isomorphism,
    universal_map, InducedActionFailure,
};
use peiffer_core::xmod::{check_xmod, induced_mutual_actions};
use peiffer_core::Error;

type Outcome = Result<String, String>;

fn family() -> Vec<FamilyMember> {
    let config = CensusConfig { threads: Some(1), ..Default::default() };
    let fam = mutual_action_family(&fixtures::catalog(), &config).expect("family within caps");
    assert!(fam.iter().all(|f| f.mutual.m().order() * f.mutual.n().order() <= 36));
    fam
}

fn label(f: &FamilyMember) -> String {
    format!(
        "({}, {}, xi_nm #{}, xi_mn #{})",
        f.mutual.m().name().unwrap_or("?"),
        f.mutual.n().name().unwrap_or("?"),
        f.xi_nm_index,
        f.xi_mn_index
    )
}

/// Compatibility by the two group equations written out directly:
/// `ξ(ξ(m,n), m') = m·ξ(n, m⁻¹m'm)·m⁻¹` and its twin.
fn compatible_by_formula(mu: &MutualActions) -> bool {
    let (m, n) = (mu.m(), mu.n());
    let (nm, mn) = (mu.xi_nm(), mu.xi_mn());
    for a in m.elements() {
        for b in n.elements() {
            for a2 in m.elements() {
                let lhs = nm.act(mn.act(a, b), a2);
                let rhs = m.conj(a, nm.act(b, m.conj(m.inv(a), a2)));
                if lhs != rhs {
                    return false;
                }
            }
            for b2 in n.elements() {
                let lhs = mn.act(nm.act(b, a), b2);
                let rhs = n.conj(b, mn.act(a, n.conj(n.inv(b), b2)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn c1_forward_round_trip() -> Outcome {
    let mut checked = 0;
    for f in family() {
        let mu = &f.mutual;
        if !compatible_by_formula(mu) {
            continue;
        }
        let pp = peiffer_product(mu, CAP).map_err(|e| format!("{}: {e}", label(&f)))?;
        let (xm, xn) = peiffer_xmods(&pp).map_err(|e| format!("{}: {e}", label(&f)))?;
        for x in [&xm, &xn] {
            if !check_xmod(x.boundary(), x.action()).map_err(|e| e.to_string())?.is_valid() {
                return Err(format!("{}: Peiffer crossed module fails", label(&f)));
            }
        }
        let back = induced_mutual_actions(&xm, &xn).map_err(|e| e.to_string())?;
        // elementwise comparison of both tables
        let same = mu.m().elements().all(|a| {
            mu.n().elements().all(|b| {
                back.xi_mn().act(a, b) == mu.xi_mn().act(a, b) && back.xi_nm().act(b, a) == mu.xi_nm().act(b, a)
            })
        });
        if !same {
            return Err(format!("{}: induced actions differ from the originals", label(&f)));
        }
        checked += 1;
    }
    Ok(format!("{checked} compatible pairs"))
}

fn c2_backward() -> Outcome {
    let pairs = fixtures::coterminal_pairs();
    let names: Vec<&str> = pairs.iter().map(|(n, _, _)| n.as_str()).collect();
    for required in ["A3<S3 / id S3", "Z3<Z6 / id Z6"] {
        if !names.contains(&required) {
            return Err(format!("fixture {required} missing"));
        }
    }
    for g in fixtures::catalog() {
        let name = format!("id/id over {}", g.name().unwrap());
        if !names.contains(&name.as_str()) {
            return Err(format!("fixture {name} missing"));
        }
    }
    for (name, xm, xn) in &pairs {
        let mu = induced_mutual_actions(xm, xn).map_err(|e| format!("{name}: {e}"))?;
        if !check_compatible(&mu).compatible || !compatible_by_formula(&mu) {
            return Err(format!("{name}: induced actions are not compatible"));
        }
    }
    Ok(format!("{} coterminal pairs", pairs.len()))
}

fn c3_definition_equivalence() -> Outcome {
    let fam = family();
    let mut compatible = 0;
    for f in &fam {
        let verdict = check_compatible(&f.mutual).compatible;
        let formula = compatible_by_formula(&f.mutual);
        let pp = peiffer_product(&f.mutual, CAP).map_err(|e| e.to_string())?;
        let well_defined = induced_actions(&pp).is_ok();
        if verdict != formula || verdict != well_defined {
            return Err(format!(
                "{}: checker {verdict}, formula {formula}, well-defined {well_defined}",
                label(f)
            ));
        }
        compatible += usize::from(verdict);
    }
    Ok(format!("{} pairs, {compatible} compatible", fam.len()))
}

fn c4_pushout_symmetry() -> Outcome {
    let fam = family();
    let mut incompatible = 0;
    for f in &fam {
        let mu = &f.mutual;
        let iso = symmetric_isomorphism(mu, CAP, DEFAULT_SEARCH_CAP).map_err(|e| e.to_string())?;
        if iso.is_none() {
            return Err(format!("{}: the two constructions are not isomorphic", label(f)));
        }
        let order = peiffer_product(mu, CAP).map_err(|e| e.to_string())?.product().order();
        if (mu.m().order() * mu.n().order()) % order != 0 {
            return Err(format!("{}: |P| = {order} does not divide |M||N|", label(f)));
        }
        incompatible += usize::from(!compatible_by_formula(mu));
    }
    Ok(format!("{} pairs, {incompatible} of them incompatible", fam.len()))
}

fn c5_strong_check() -> Outcome {
    let mut compatible: Vec<FamilyMember> = family().into_iter().filter(|f| compatible_by_formula(&f.mutual)).collect();
    for f in &compatible {
        let pp = peiffer_product(&f.mutual, CAP).map_err(|e| e.to_string())?;
        let v = strong_relation_check(&pp, 2);
        if !v.passed {
            return Err(format!("{}: bound 2 fails: {:?}", label(f), v.witness));
        }
    }
    let count = compatible.len();
    compatible.sort_by_key(|f| std::cmp::Reverse(f.mutual.m().order() * f.mutual.n().order()));
    let mut largest = Vec::new();
    for f in compatible.iter().take(3) {
        let pp = peiffer_product(&f.mutual, CAP).map_err(|e| e.to_string())?;
        let v = strong_relation_check(&pp, 3);
        if !v.passed {
            return Err(format!("{}: bound 3 fails: {:?}", label(f), v.witness));
        }
        largest.push(format!("{} ({} checks)", label(f), v.checks));
    }
    Ok(format!("{count} pairs at bound 2; bound 3 on {}", largest.join(", ")))
}

fn c6_trivial_law() -> Outcome {
    let cat = fixtures::catalog();
    let mut pairs = 0;
    for m in &cat {
        for n in &cat {
            let pp = peiffer_product(&MutualActions::trivial(m, n), CAP).map_err(|e| e.to_string())?;
            let p = pp.product();
            if p.order() != m.order() * n.order() {
                return Err(format!("{:?} x {:?}: |P| = {}", m.name(), n.name(), p.order()));
            }
            let prod: GroupRef = Arc::new(FiniteGroup::direct_product(m, n));
            if is_isomorphic(p, &prod, DEFAULT_SEARCH_CAP).map_err(|e| e.to_string())?.is_none() {
                return Err(format!("{:?} x {:?}: P is not the direct product", m.name(), n.name()));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} catalog pairs"))
}

fn c7_universal_property() -> Outcome {
    let a3 = fixtures::a3_in_s3();
    let s3 = a3.boundary().cod().clone();
    let id = fixtures::identity_xmod(&s3);
    let mu = induced_mutual_actions(&a3, &id).map_err(|e| e.to_string())?;
    let pp = peiffer_product(&mu, CAP).map_err(|e| e.to_string())?;
    let u = universal_map(&pp, &a3, &id).map_err(|e| e.to_string())?;
    let p = pp.product();
    let h = &u.hom;
    let is_hom = p.elements().all(|x| p.elements().all(|y| h.apply(p.mul(x, y)) == s3.mul(h.apply(x), h.apply(y))));
    let triangles = mu.m().elements().all(|m| h.apply(pp.l_m().apply(m)) == a3.boundary().apply(m))
        && mu.n().elements().all(|n| h.apply(pp.l_n().apply(n)) == n);
    // uniqueness by brute force over Hom(P, S3)
    let commuting = homomorphisms(p, &s3)
        .into_iter()
        .filter(|k| {
            mu.m().elements().all(|m| k.apply(pp.l_m().apply(m)) == a3.boundary().apply(m))
                && mu.n().elements().all(|n| k.apply(pp.l_n().apply(n)) == n)
        })
        .count();
    if !is_hom || !triangles || !u.unique || commuting != 1 {
        return Err(format!(
            "hom {is_hom}, triangles {triangles}, generation certificate {}, commuting maps {commuting}",
            u.unique
        ));
    }
    Ok(format!("|P| = {}, unique among {} homomorphisms P -> S3", p.order(), homomorphisms(p, &s3).len()))
}

fn c8_negative_control() -> Outcome {
    let mu = fixtures::incompatible_s3_z2();
    let s3 = mu.m();
    let t = perm("(12)");
    if mu.xi_nm().act(1, perm("(123)")) != s3.conj(t, perm("(123)")) || !mu.xi_mn().is_trivial() {
        return Err("fixture is not conjugation by (12) / trivial".into());
    }
    let v = check_compatible(&mu);
    let w = v.witness.ok_or("reported compatible")?;
    if v.compatible || !reproduce_witness(&mu, &w) {
        return Err("witness does not reproduce".into());
    }
    // recompute the witness from the equation itself
    let (lhs, rhs) = match w.equation {
        1 => (
            mu.xi_nm().act(mu.xi_mn().act(w.m, w.n), w.target),
            s3.conj(w.m, mu.xi_nm().act(w.n, s3.conj(s3.inv(w.m), w.target))),
        ),
        _ => {
            let n = mu.n();
            (
                mu.xi_mn().act(mu.xi_nm().act(w.n, w.m), w.target),
                n.conj(w.n, mu.xi_mn().act(w.m, n.conj(n.inv(w.n), w.target))),
            )
        }
    };
    if (lhs, rhs) != (w.lhs, w.rhs) || lhs == rhs {
        return Err("witness values do not match the equation".into());
    }
    let pp = peiffer_product(&mu, CAP).map_err(|e| e.to_string())?;
    match induced_actions(&pp) {
        Err(Error::InducedActionsUndefined(InducedActionFailure::CosetDisagreement {
            coset,
            first,
            second,
            first_value,
            second_value,
            ..
        })) if first_value != second_value => {
            let sd = pp.semidirect();
            let q = pp.from_semidirect();
            if q.apply(sd.pair_index(first.0, first.1)) != coset || q.apply(sd.pair_index(second.0, second.1)) != coset {
                return Err("coset witness preimages lie in different cosets".into());
            }
            Ok(format!(
                "equation {} fails at m={}, n={}, target={}; coset {coset}: {first:?} vs {second:?}",
                w.equation, w.m, w.n, w.target
            ))
        }
        other => Err(format!("induced actions did not fail with a coset witness: {other:?}")),
    }
}

/// Reduced alternating words of length 1..=max with non-identity letters.
fn reduced_words(a: &FiniteGroup, x: &FiniteGroup, max: usize, visit: &mut impl FnMut(&[Letter])) {
    fn go(a: &FiniteGroup, x: &FiniteGroup, max: usize, w: &mut Vec<Letter>, visit: &mut impl FnMut(&[Letter])) {
        if !w.is_empty() {
            visit(w);
        }
        if w.len() == max {
            return;
        }
        for (side, g) in [(Side::M, a), (Side::N, x)] {
            if w.last().is_some_and(|l| l.side == side) {
                continue;
            }
            for e in g.elements().filter(|&e| e != g.identity()) {
                w.push(Letter::new(side, e));
                go(a, x, max, w, visit);
                w.pop();
            }
        }
    }
    go(a, x, max, &mut Vec::new(), visit);
}

fn c9_points_and_flat_words() -> Outcome {
    let cat = fixtures::catalog();
    let (mut actions, mut words) = (0, 0);
    for a in &cat {
        for x in &cat {
            for psi in actions_of(a, x) {
                let sd = semidirect(&psi, CAP).map_err(|e| e.to_string())?;
                let (back, _) = point_to_action(&Point::of_semidirect(&sd)).map_err(|e| e.to_string())?;
                if back != psi {
                    return Err(format!("{:?} on {:?}: point round trip changed the action", a.name(), x.name()));
                }
                actions += 1;
                let fp = FreeProduct::new(a, x);
                let g = &sd.group;
                let mut failure = None;
                reduced_words(a, x, 6, &mut |w| {
                    if failure.is_some() || fp.fold(w, Side::M) != a.identity() {
                        return;
                    }
                    words += 1;
                    let conj = g.product(w.iter().map(|l| match l.side {
                        Side::M => sd.j_a.apply(l.elem),
                        _ => sd.j_x.apply(l.elem),
                    }));
                    match fp.eval_flat_action(&psi, w, Side::M) {
                        Ok(v) if sd.j_x.apply(v) == conj => {}
                        other => failure = Some(format!("word {w:?}: {other:?} vs {conj}")),
                    }
                });
                if let Some(f) = failure {
                    return Err(f);
                }
            }
        }
    }
    Ok(format!("{actions} actions, {words} flat words"))
}

fn lie_direct_sum(m: &LieAlgebra, n: &LieAlgebra) -> Vec<Q> {
    let (dm, dn) = (m.dim(), n.dim());
    let d = dm + dn;
    let mut c = vec![Q::default(); d * d * d];
    for i in 0..dm {
        for j in 0..dm {
            for (k, v) in m.basis_bracket(i, j).iter().enumerate() {
                c[(i * d + j) * d + k] = v.clone();
            }
        }
    }
    for i in 0..dn {
        for j in 0..dn {
            for (k, v) in n.basis_bracket(i, j).iter().enumerate() {
                c[((dm + i) * d + dm + j) * d + dm + k] = v.clone();
            }
        }
    }
    c
}

fn c10_lie_suite() -> Outcome {
    // (a)
    let pairs = lie::fixtures::coterminal_pairs();
    for (name, xm, xn) in &pairs {
        let mu = lie_induced_actions(xm, xn).map_err(|e| format!("{name}: {e}"))?;
        if !lie_compatible(&mu).compatible {
            return Err(format!("(a) {name}: induced actions fail (C1)/(C2)"));
        }
    }
    let scalar = lie_compatible(&lie::fixtures::identity_scalar_pair());
    let w = scalar.witness.ok_or("(a) the identity-scalar pair passes")?;
    if w.residual != ["1"] {
        return Err(format!("(a) scalar residual {:?}, expected m·n·m' = 1", w.residual));
    }
    // (b)
    let algebras: Vec<LieRef> = vec![
        Arc::new(LieAlgebra::two_dim_solvable()),
        Arc::new(LieAlgebra::heisenberg()),
        Arc::new(LieAlgebra::sl2()),
        Arc::new(LieAlgebra::abelian(2)),
    ];
    let mut zero_pairs = 0;
    for m in &algebras {
        for n in &algebras {
            let mu = LieMutualActions::zero(m, n);
            let lp = lie_peiffer(&mu).map_err(|e| e.to_string())?;
            if lp.algebra().dim() != m.dim() + n.dim() || lp.ideal().dim() != 0 {
                return Err(format!("(b) dim P = {} for dims {} + {}", lp.algebra().dim(), m.dim(), n.dim()));
            }
            if lp.algebra().structure() != lie_direct_sum(m, n).as_slice() {
                return Err("(b) P is not the direct sum".into());
            }
            zero_pairs += 1;
            // zero actions are compatible, so they feed (c) as well
            let (pm, pn) = lie_peiffer_xmods(&lp).map_err(|e| format!("(c) zero actions: {e}"))?;
            for x in [&pm, &pn] {
                if !check_lie_xmod(x.boundary(), x.action()).map_err(|e| e.to_string())?.is_valid() {
                    return Err("(c) zero actions: Peiffer crossed module fails".into());
                }
            }
        }
    }
    // (c)
    for (name, xm, xn) in &pairs {
        let mu = lie_induced_actions(xm, xn).map_err(|e| e.to_string())?;
        let lp = lie_peiffer(&mu).map_err(|e| e.to_string())?;
        let (pm, pn) = lie_peiffer_xmods(&lp).map_err(|e| format!("(c) {name}: {e}"))?;
        for x in [&pm, &pn] {
            if !check_lie_xmod(x.boundary(), x.action()).map_err(|e| e.to_string())?.is_valid() {
                return Err(format!("(c) {name}: Peiffer crossed module fails"));
            }
        }
        let u = lie_universal_map(&lp, xm, xn).map_err(|e| format!("(c) {name}: {e}"))?;
        let h = u.hom.matrix();
        if h.mul(lp.l_m().matrix()) != *xm.boundary().matrix()
            || h.mul(lp.l_n().matrix()) != *xn.boundary().matrix()
            || !u.unique
        {
            return Err(format!("(c) {name}: universal map triangles or spanning fail"));
        }
    }
    Ok(format!(
        "(a) {} pairs + scalar control, (b) {zero_pairs} zero-action pairs, (c) {} universal maps",
        pairs.len(),
        pairs.len()
    ))
}

fn main() -> ExitCode {
    type Criterion = (u8, &'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "forward round trip", 60, c1_forward_round_trip),
        (2, "backward: coterminal crossed modules give compatible actions", 5, c2_backward),
        (3, "definition equivalence", 60, c3_definition_equivalence),
        (4, "pushout symmetry", 60, c4_pushout_symmetry),
        (5, "strong Peiffer check", 30, c5_strong_check),
        (6, "trivial-action law", 5, c6_trivial_law),
        (7, "universal property for A3 < S3", 1, c7_universal_property),
        (8, "negative control S3/Z2", 1, c8_negative_control),
        (9, "points and actions, flat words", 30, c9_points_and_flat_words),
        (10, "Lie suite", 5, c10_lie_suite),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the time budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "{tag} criterion {id:>2} {name}: {detail} [{:.2} s, budget {budget} s]",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
