//! Small named groups, actions and crossed modules used by the census, the
//! CLI and the test suites.

use std::sync::Arc;

use crate::action::Action;
use crate::compat::MutualActions;
use crate::group::{
    homomorphisms, permutations, AutomorphismGroup, FiniteGroup, GroupRef, Hom,
    DEFAULT_SEARCH_CAP,
};
use crate::xmod::CrossedModule;

pub fn klein_four() -> FiniteGroup {
    FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).with_name("Z2xZ2")
}

/// The desk-scale catalog: Z2, Z3, Z4, Z2×Z2, Z6, S3.
pub fn catalog() -> Vec<GroupRef> {
    vec![
        Arc::new(FiniteGroup::cyclic(2)),
        Arc::new(FiniteGroup::cyclic(3)),
        Arc::new(FiniteGroup::cyclic(4)),
        Arc::new(klein_four()),
        Arc::new(FiniteGroup::cyclic(6)),
        Arc::new(FiniteGroup::symmetric(3)),
    ]
}

/// Index in [`FiniteGroup::symmetric(3)`] of a permutation written in
/// 1-based cycle notation, e.g. `"(12)"`, `"(132)"` or `"()"`.
pub fn perm(cycles: &str) -> usize {
    let mut image: Vec<usize> = (0..3).collect();
    for cycle in cycles.split(')').map(|c| c.trim_start_matches('(')).filter(|c| !c.is_empty()) {
        let pts: Vec<usize> = cycle
            .chars()
            .map(|c| c.to_digit(10).expect("digit") as usize - 1)
            .collect();
        for (i, &p) in pts.iter().enumerate() {
            image[p] = pts[(i + 1) % pts.len()];
        }
    }
    permutations(3).iter().position(|p| *p == image).expect("permutation of 3 points")
}

/// All actions of `acting` on `target`, one per homomorphism into `Aut(target)`,
/// in the deterministic order of [`homomorphisms`]. The trivial action is first.
pub fn actions_of(acting: &GroupRef, target: &GroupRef) -> Vec<Action> {
    let aut = AutomorphismGroup::of(target, DEFAULT_SEARCH_CAP).expect("catalog-size target");
    homomorphisms(acting, &aut.group)
        .iter()
        .map(|h| Action::from_aut_hom(&aut, target, h).expect("hom lands in Aut"))
        .collect()
}

/// `M = S3`, `N = Z2`; `N` acts on `M` by conjugation with `(12)` and `M`
/// acts trivially on `N`. Not compatible.
pub fn incompatible_s3_z2() -> MutualActions {
    let s3: GroupRef = Arc::new(FiniteGroup::symmetric(3));
    let z2: GroupRef = Arc::new(FiniteGroup::cyclic(2));
    let t = perm("(12)");
    let xi_nm = Action::from_fn(&z2, &s3, |n, m| if n == 0 { m } else { s3.conj(t, m) })
        .expect("conjugation by an involution");
    let xi_mn = Action::trivial(&s3, &z2);
    MutualActions::new(s3, z2, xi_nm, xi_mn).expect("valid mutual actions")
}

/// `(id_G, conjugation)`.
pub fn identity_xmod(g: &GroupRef) -> CrossedModule {
    CrossedModule::new(Hom::identity(g), Action::conjugation(g)).expect("identity crossed module")
}

/// Inclusion of a normal subgroup, with the conjugation action of the big group.
pub fn normal_inclusion_xmod(g: &GroupRef, normal_gens: &[usize]) -> CrossedModule {
    let closure = g.normal_closure(normal_gens);
    let (sub, inc) = g.subgroup_as_group(&closure).expect("normal closure is a subgroup");
    let mut local = vec![usize::MAX; g.order()];
    for k in sub.elements() {
        local[inc.apply(k)] = k;
    }
    let action = Action::from_fn(g, &sub, |a, k| local[g.conj(a, inc.apply(k))])
        .expect("conjugation on a normal subgroup");
    CrossedModule::new(inc, action).expect("normal inclusion crossed module")
}

/// `A3 ↪ S3` with conjugation.
pub fn a3_in_s3() -> CrossedModule {
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    normal_inclusion_xmod(&s3, &[perm("(123)")])
}

/// `Z3 ↪ Z6` (multiples of 2) with the trivial conjugation action.
pub fn z3_in_z6() -> CrossedModule {
    let z6 = Arc::new(FiniteGroup::cyclic(6));
    normal_inclusion_xmod(&z6, &[2])
}

/// Coterminal crossed-module pairs: `(id, id)` over every catalog group,
/// `(A3 ↪ S3, id_S3)` and `(Z3 ↪ Z6, id_Z6)`, plus a few more mixed pairs.
pub fn coterminal_pairs() -> Vec<(String, CrossedModule, CrossedModule)> {
    let mut out = Vec::new();
    for g in catalog() {
        let name = g.name().unwrap_or("?").to_string();
        out.push((format!("id/id over {name}"), identity_xmod(&g), identity_xmod(&g)));
    }
    let a3 = a3_in_s3();
    let s3 = a3.boundary().cod().clone();
    out.push(("A3<S3 / id S3".into(), a3.clone(), identity_xmod(&s3)));
    out.push(("id S3 / A3<S3".into(), identity_xmod(&s3), a3.clone()));
    out.push(("A3<S3 / A3<S3".into(), a3.clone(), a3));
    let z3 = z3_in_z6();
    let z6 = z3.boundary().cod().clone();
    out.push(("Z3<Z6 / id Z6".into(), z3.clone(), identity_xmod(&z6)));
    out.push(("Z3<Z6 / Z3<Z6".into(), z3.clone(), z3));
    let v4: GroupRef = Arc::new(klein_four());
    let z2_in_v4 = normal_inclusion_xmod(&v4, &[1]);
    out.push(("Z2<V4 / id V4".into(), z2_in_v4, identity_xmod(&v4)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        assert_eq!(perm("()"), 0);
        assert_eq!(perm("(12)"), 2);
        assert_eq!(perm("(23)"), 1);
        assert_eq!(perm("(123)"), 3);
        assert_eq!(perm("(132)"), 4);
        assert_eq!(perm("(13)"), 5);
    }

    #[test]
    fn action_counts() {
        let c = catalog();
        let (z2, z3, s3) = (&c[0], &c[1], &c[5]);
        assert_eq!(actions_of(z2, z3).len(), 2);
        assert_eq!(actions_of(z3, z2).len(), 1);
        assert_eq!(actions_of(s3, s3).len(), 10);
        assert!(actions_of(s3, s3)[0].is_trivial());
    }
}
