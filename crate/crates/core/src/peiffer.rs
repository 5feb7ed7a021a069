//! The Peiffer product `M ⋈ N` of two groups acting on each other.
//!
//! It is built as a quotient of the finite group `M ⋊ N` (formed with the
//! action of `N` on `M`) rather than of the infinite free product: the
//! relators `(ⁿm) n m⁻¹ n⁻¹` already vanish in the semidirect product, so only
//! the images of `m n m⁻¹ (ᵐn)⁻¹` have to be killed. The construction makes
//! sense for every pair of mutual actions; the two induced actions of `M ⋈ N`
//! on `M` and `N` exist exactly when the pair is compatible.

use std::fmt;

use serde::Serialize;

use crate::action::{semidirect, Action, ActionFailure, SemidirectData};
use crate::compat::{check_compatible, MutualActions};
use crate::freeword::{Letter, Side};
use crate::group::{is_isomorphic, ElementSet, GroupRef, Hom};
use crate::xmod::{induced_mutual_actions, CrossedModule};
use crate::{Error, Result};

/// Default maximal word length for [`strong_relation_check`].
pub const DEFAULT_STRONG_WORD_BOUND: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InducedActionFailure {
    /// Two preimages `(m, n)` of the same coset act differently on `x`.
    CosetDisagreement {
        side: Side,
        coset: usize,
        first: (usize, usize),
        second: (usize, usize),
        x: usize,
        first_value: usize,
        second_value: usize,
    },
    /// The coset-wise values do not assemble into an action of `M ⋈ N`.
    NotAnAction { side: Side, failure: ActionFailure },
}

impl fmt::Display for InducedActionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InducedActionFailure::CosetDisagreement {
                side,
                coset,
                first,
                second,
                x,
                first_value,
                second_value,
            } => write!(
                f,
                "coset {coset}: preimages {first:?} and {second:?} send {side:?}-element {x} \
                 to {first_value} and {second_value}"
            ),
            InducedActionFailure::NotAnAction { side, failure } => {
                write!(f, "values on {side:?} are not an action: {failure}")
            }
        }
    }
}

/// `M ⋈ N` together with the data it was computed from.
#[derive(Debug, Clone)]
pub struct PeifferProduct {
    source: MutualActions,
    semidirect: SemidirectData,
    relators: Vec<usize>,
    product: GroupRef,
    from_semidirect: Hom,
    l_m: Hom,
    l_n: Hom,
    compatible: bool,
    actions: Option<(Action, Action)>,
}

impl PeifferProduct {
    pub fn source(&self) -> &MutualActions {
        &self.source
    }

    /// `M ⋊ N`; element `(m, n)` sits at index `m * |N| + n`.
    pub fn semidirect(&self) -> &SemidirectData {
        &self.semidirect
    }

    pub fn relators(&self) -> &[usize] {
        &self.relators
    }

    pub fn product(&self) -> &GroupRef {
        &self.product
    }

    pub fn from_semidirect(&self) -> &Hom {
        &self.from_semidirect
    }

    pub fn l_m(&self) -> &Hom {
        &self.l_m
    }

    pub fn l_n(&self) -> &Hom {
        &self.l_n
    }

    pub fn compatible(&self) -> bool {
        self.compatible
    }

    /// Actions of `M ⋈ N` on `M` and on `N`; present iff compatible.
    pub fn actions(&self) -> Option<&(Action, Action)> {
        self.actions.as_ref()
    }

    /// Image in `M ⋈ N` of a free-product word.
    pub fn word_image(&self, s: &[Letter]) -> usize {
        let p = &self.product;
        p.product(s.iter().map(|l| match l.side {
            Side::M => self.l_m.apply(l.elem),
            Side::N => self.l_n.apply(l.elem),
            Side::T => panic!("Peiffer products are binary"),
        }))
    }

    /// Minimal preimage in `M ⋊ N` of every element of `M ⋈ N`.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.product.order()];
        for g in self.semidirect.group.elements() {
            let p = self.from_semidirect.apply(g);
            if reps[p] == usize::MAX {
                reps[p] = g;
            }
        }
        reps
    }
}

/// `M ⋊ N` and the deduplicated relators `jM(m) jN(n) jM(m)⁻¹ jN(ᵐn)⁻¹`.
pub fn peiffer_relators(mutual: &MutualActions, cap: usize) -> Result<(SemidirectData, Vec<usize>)> {
    let sd = semidirect(mutual.xi_nm(), cap)?;
    let g = &sd.group;
    let mut rel = ElementSet::empty(g.order());
    for m in mutual.m().elements() {
        let jm = sd.j_x.apply(m);
        for n in mutual.n().elements() {
            let conj = g.conj(jm, sd.j_a.apply(n));
            let target = sd.j_a.apply(mutual.xi_mn().act(m, n));
            rel.insert(g.mul(conj, g.inv(target)));
        }
    }
    Ok((sd, rel.to_vec()))
}

/// Builds `M ⋈ N = (M ⋊ N) / ⟨⟨relators⟩⟩`, for any mutual actions.
pub fn peiffer_product(mutual: &MutualActions, cap: usize) -> Result<PeifferProduct> {
    let (sd, relators) = peiffer_relators(mutual, cap)?;
    let closure = sd.group.normal_closure(&relators);
    let (product, from_semidirect) = sd.group.quotient(&closure)?;
    let l_m = from_semidirect.compose(&sd.j_x)?;
    let l_n = from_semidirect.compose(&sd.j_a)?;
    let compatible = check_compatible(mutual).compatible;
    let mut pp = PeifferProduct {
        source: mutual.clone(),
        semidirect: sd,
        relators,
        product,
        from_semidirect,
        l_m,
        l_n,
        compatible,
        actions: None,
    };
    if compatible {
        pp.actions = Some(induced_actions(&pp)?);
    }
    Ok(pp)
}

/// Actions of `M ⋈ N` on `M` and `N` obtained by letting each preimage
/// `(m, n)` act through the word `m·n` in `M + N`. Every preimage of every
/// coset is compared, and the resulting tables must satisfy the action
/// axioms; either failure certifies incompatibility.
pub fn induced_actions(pp: &PeifferProduct) -> Result<(Action, Action)> {
    let mutual = &pp.source;
    let sd = &pp.semidirect;
    let p = &pp.product;
    let reps = pp.representatives();
    let mut out = Vec::with_capacity(2);
    for side in [Side::M, Side::N] {
        let target = match side {
            Side::M => mutual.m(),
            _ => mutual.n(),
        };
        let eval = |g: usize, x: usize| {
            let (m, n) = sd.pair(g);
            let word = [Letter::new(Side::M, m), Letter::new(Side::N, n)];
            mutual.coproduct_eval(&word, side, x)
        };
        for g in sd.group.elements() {
            let coset = pp.from_semidirect.apply(g);
            let rep = reps[coset];
            if rep == g {
                continue;
            }
            for x in target.elements() {
                let (first_value, second_value) = (eval(rep, x), eval(g, x));
                if first_value != second_value {
                    return Err(Error::InducedActionsUndefined(
                        InducedActionFailure::CosetDisagreement {
                            side,
                            coset,
                            first: sd.pair(rep),
                            second: sd.pair(g),
                            x,
                            first_value,
                            second_value,
                        },
                    ));
                }
            }
        }
        let action = Action::from_fn(p, target, |c, x| eval(reps[c], x)).map_err(|e| match e {
            Error::InvalidAction(failure) => {
                Error::InducedActionsUndefined(InducedActionFailure::NotAnAction { side, failure })
            }
            other => other,
        })?;
        out.push(action);
    }
    let on_n = out.pop().expect("two sides");
    let on_m = out.pop().expect("two sides");
    Ok((on_m, on_n))
}

/// `(l_M: M -> M⋈N, action on M)` and `(l_N: N -> M⋈N, action on N)`.
pub fn peiffer_xmods(pp: &PeifferProduct) -> Result<(CrossedModule, CrossedModule)> {
    let (on_m, on_n) = match &pp.actions {
        Some(a) => a.clone(),
        None => induced_actions(pp)?,
    };
    Ok((
        CrossedModule::new(pp.l_m.clone(), on_m)?,
        CrossedModule::new(pp.l_n.clone(), on_n)?,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongWitness {
    pub word: String,
    pub side: String,
    pub x: usize,
    /// image of the free-product action value
    pub lhs: usize,
    /// conjugate in `M ⋈ N`
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongVerdict {
    pub passed: bool,
    pub word_bound: usize,
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<StrongWitness>,
}

/// Checks `l(ˢx) = q(s)·l(x)·q(s)⁻¹` in `M ⋈ N` for every word `s` of
/// non-identity letters of length `1..=word_bound`, and every `x` in `M`
/// and in `N`. Words are scanned by length, then lexicographically.
pub fn strong_relation_check(pp: &PeifferProduct, word_bound: usize) -> StrongVerdict {
    let mutual = &pp.source;
    let p = &pp.product;
    let mut alphabet = Vec::new();
    for m in mutual.m().elements().filter(|&m| m != mutual.m().identity()) {
        alphabet.push(Letter::new(Side::M, m));
    }
    for n in mutual.n().elements().filter(|&n| n != mutual.n().identity()) {
        alphabet.push(Letter::new(Side::N, n));
    }
    let mut checks = 0;
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..word_bound {
        let mut next = Vec::with_capacity(words.len() * alphabet.len());
        for w in &words {
            for &l in &alphabet {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        for s in &next {
            let qs = pp.word_image(s);
            for (side, incl) in [(Side::M, &pp.l_m), (Side::N, &pp.l_n)] {
                for x in mutual.group(side).elements() {
                    checks += 1;
                    let lhs = incl.apply(mutual.coproduct_eval(s, side, x));
                    let rhs = p.conj(qs, incl.apply(x));
                    if lhs != rhs {
                        let word: Vec<String> = s.iter().map(ToString::to_string).collect();
                        return StrongVerdict {
                            passed: false,
                            word_bound,
                            checks,
                            witness: Some(StrongWitness {
                                word: word.join(" "),
                                side: format!("{side:?}"),
                                x,
                                lhs,
                                rhs,
                            }),
                        };
                    }
                }
            }
        }
        words = next;
    }
    StrongVerdict { passed: true, word_bound, checks, witness: None }
}

/// Isomorphism between the products built through `M ⋊ N` and `N ⋊ M`.
pub fn symmetric_isomorphism(mutual: &MutualActions, cap: usize, iso_cap: usize) -> Result<Option<Hom>> {
    let direct = peiffer_product(mutual, cap)?;
    let swapped = peiffer_product(&mutual.swapped(), cap)?;
    is_isomorphic(direct.product(), swapped.product(), iso_cap)
}

/// The comparison map `M ⋈ N -> L` for coterminal crossed modules inducing
/// the source actions.
#[derive(Debug, Clone)]
pub struct UniversalMap {
    pub hom: Hom,
    /// The images of `l_M` and `l_N` generate `M ⋈ N`, so no other map can
    /// make both triangles commute.
    pub unique: bool,
}

pub fn universal_map(pp: &PeifferProduct, xm_m: &CrossedModule, xm_n: &CrossedModule) -> Result<UniversalMap> {
    let induced = induced_mutual_actions(xm_m, xm_n)?;
    if &induced != pp.source() {
        return Err(Error::UniversalMap(
            "the crossed modules induce different mutual actions".into(),
        ));
    }
    let (mu, nu) = (xm_m.boundary(), xm_n.boundary());
    let l = mu.cod();
    let sd = &pp.semidirect;
    let lifted: Vec<usize> = sd
        .group
        .elements()
        .map(|g| {
            let (m, n) = sd.pair(g);
            l.mul(mu.apply(m), nu.apply(n))
        })
        .collect();
    let lifted = Hom::new(sd.group.clone(), l.clone(), lifted).map_err(|e| {
        Error::UniversalMap(format!("(m, n) ↦ μ(m)ν(n) is not a homomorphism: {e}"))
    })?;
    if let Some(&r) = pp.relators.iter().find(|&&r| lifted.apply(r) != l.identity()) {
        return Err(Error::UniversalMap(format!("relator {:?} is not killed", sd.pair(r))));
    }
    if let Some(k) = pp.from_semidirect.kernel().iter().find(|&k| lifted.apply(k) != l.identity()) {
        return Err(Error::UniversalMap(format!("kernel element {:?} is not killed", sd.pair(k))));
    }
    let reps = pp.representatives();
    let hom = Hom::new(
        pp.product.clone(),
        l.clone(),
        reps.iter().map(|&g| lifted.apply(g)).collect(),
    )
    .map_err(|e| Error::UniversalMap(format!("descended map is not a homomorphism: {e}")))?;
    if hom.compose(&pp.l_m)? != *mu || hom.compose(&pp.l_n)? != *nu {
        return Err(Error::UniversalMap("triangles do not commute".into()));
    }
    let gens: Vec<usize> = pp.l_m.map().iter().chain(pp.l_n.map()).copied().collect();
    let unique = pp.product.subgroup_generated(&gens).len() == pp.product.order();
    Ok(UniversalMap { hom, unique })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::action::DEFAULT_SEMIDIRECT_CAP as CAP;
    use crate::fixtures;
    use crate::group::{FiniteGroup, DEFAULT_SEARCH_CAP};
    use crate::xmod::check_xmod;

    fn arc(g: FiniteGroup) -> GroupRef {
        Arc::new(g)
    }

    #[test]
    fn relators_for_trivial_actions_are_commutators() {
        let (z2, s3) = (arc(FiniteGroup::cyclic(2)), arc(FiniteGroup::symmetric(3)));
        let mutual = MutualActions::trivial(&s3, &z2);
        let (sd, rel) = peiffer_relators(&mutual, CAP).unwrap();
        let g = &sd.group;
        let mut expected = ElementSet::empty(g.order());
        for m in s3.elements() {
            for n in z2.elements() {
                expected.insert(g.commutator(sd.j_x.apply(m), sd.j_a.apply(n)));
            }
        }
        assert_eq!(rel, expected.to_vec());
        assert!(rel.len() <= s3.order() * z2.order());
        // the pairs involving an identity give the identity relator
        assert!(rel.contains(&g.identity()));
    }

    #[test]
    fn trivial_actions_give_direct_product() {
        let (z2, z3) = (arc(FiniteGroup::cyclic(2)), arc(FiniteGroup::cyclic(3)));
        let pp = peiffer_product(&MutualActions::trivial(&z2, &z3), CAP).unwrap();
        assert_eq!(pp.product().order(), 6);
        assert!(is_isomorphic(pp.product(), &arc(FiniteGroup::cyclic(6)), DEFAULT_SEARCH_CAP).unwrap().is_some());
        assert!(pp.l_m().is_injective());

        // action of M × N on M is conjugation through the first projection
        let s3 = arc(FiniteGroup::symmetric(3));
        let pp = peiffer_product(&MutualActions::trivial(&s3, &z2), CAP).unwrap();
        let (on_m, on_n) = pp.actions().unwrap();
        for m in s3.elements() {
            for n in z2.elements() {
                let p = pp.from_semidirect().apply(pp.semidirect().pair_index(m, n));
                for x in s3.elements() {
                    assert_eq!(on_m.act(p, x), s3.conj(m, x));
                }
                for y in z2.elements() {
                    assert_eq!(on_n.act(p, y), y);
                }
            }
        }
        let (xm, xn) = peiffer_xmods(&pp).unwrap();
        assert!(check_xmod(xm.boundary(), xm.action()).unwrap().is_valid());
        assert!(check_xmod(xn.boundary(), xn.action()).unwrap().is_valid());
        assert!(xm.boundary().is_injective());
    }

    #[test]
    fn incompatible_fixture_is_total_but_has_no_actions() {
        let mutual = fixtures::incompatible_s3_z2();
        let pp = peiffer_product(&mutual, CAP).unwrap();
        assert!(!pp.compatible());
        assert!(pp.actions().is_none());
        assert_eq!((mutual.m().order() * mutual.n().order()) % pp.product().order(), 0);
        match induced_actions(&pp) {
            Err(Error::InducedActionsUndefined(InducedActionFailure::CosetDisagreement {
                coset,
                first,
                second,
                first_value,
                second_value,
                ..
            })) => {
                assert_ne!(first, second);
                assert_ne!(first_value, second_value);
                let sd = pp.semidirect();
                assert_eq!(pp.from_semidirect().apply(sd.pair_index(first.0, first.1)), coset);
                assert_eq!(pp.from_semidirect().apply(sd.pair_index(second.0, second.1)), coset);
            }
            other => panic!("expected a coset witness, got {other:?}"),
        }
        assert!(peiffer_xmods(&pp).is_err());
    }

    #[test]
    fn mutual_conjugation_on_s3() {
        let s3 = arc(FiniteGroup::symmetric(3));
        let conj = Action::conjugation(&s3);
        let mutual = MutualActions::new(s3.clone(), s3.clone(), conj.clone(), conj).unwrap();
        let pp = peiffer_product(&mutual, CAP).unwrap();
        let (on_m, on_n) = pp.actions().unwrap();
        // every element acts by an inner automorphism
        for p in pp.product().elements() {
            for act in [on_m, on_n] {
                let aut = act.automorphism(p);
                assert!(s3.elements().any(|g| s3.elements().all(|x| aut.apply(x) == s3.conj(g, x))));
            }
        }
        assert!(strong_relation_check(&pp, 2).passed);
        assert!(symmetric_isomorphism(&mutual, CAP, DEFAULT_SEARCH_CAP).unwrap().is_some());
    }

    #[test]
    fn strong_check_single_letters_are_the_defining_relations() {
        let a3 = fixtures::a3_in_s3();
        let s3 = a3.boundary().cod().clone();
        let mutual = induced_mutual_actions(&a3, &fixtures::identity_xmod(&s3)).unwrap();
        let pp = peiffer_product(&mutual, CAP).unwrap();
        let v1 = strong_relation_check(&pp, 1);
        assert!(v1.passed);
        let letters = (mutual.m().order() - 1) + (mutual.n().order() - 1);
        assert_eq!(v1.checks, letters * (mutual.m().order() + mutual.n().order()));
        assert!(strong_relation_check(&pp, 3).passed);
    }

    #[test]
    fn universal_map_for_a3_in_s3() {
        let a3 = fixtures::a3_in_s3();
        let s3 = a3.boundary().cod().clone();
        let id = fixtures::identity_xmod(&s3);
        let mutual = induced_mutual_actions(&a3, &id).unwrap();
        let pp = peiffer_product(&mutual, CAP).unwrap();
        let u = universal_map(&pp, &a3, &id).unwrap();
        assert!(u.unique);
        assert!(u.hom.is_surjective());
        assert_eq!(u.hom.compose(pp.l_m()).unwrap(), *a3.boundary());
        // the same crossed modules in the wrong order induce other actions
        let other = induced_mutual_actions(&id, &id).unwrap();
        let pp2 = peiffer_product(&other, CAP).unwrap();
        assert!(matches!(universal_map(&pp2, &a3, &id), Err(Error::UniversalMap(_)) | Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn universal_map_for_trivial_actions_is_an_isomorphism() {
        let (z2, s3) = (arc(FiniteGroup::cyclic(2)), arc(FiniteGroup::symmetric(3)));
        let l = arc(FiniteGroup::direct_product(&s3, &z2));
        let i_m = Hom::new(s3.clone(), l.clone(), s3.elements().map(|m| m * 2).collect()).unwrap();
        let i_n = Hom::new(z2.clone(), l.clone(), vec![0, 1]).unwrap();
        let conj = Action::conjugation(&l);
        let xm = CrossedModule::new(i_m.clone(), restrict_conjugation(&l, &i_m, &conj)).unwrap();
        let xn = CrossedModule::new(i_n.clone(), restrict_conjugation(&l, &i_n, &conj)).unwrap();
        let pp = peiffer_product(&MutualActions::trivial(&s3, &z2), CAP).unwrap();
        let u = universal_map(&pp, &xm, &xn).unwrap();
        assert!(u.hom.is_isomorphism());
    }

    fn restrict_conjugation(l: &GroupRef, inc: &Hom, conj: &Action) -> Action {
        let sub = inc.dom();
        let local = |v: usize| inc.map().iter().position(|&w| w == v).unwrap();
        Action::from_fn(l, sub, |a, x| local(conj.act(a, inc.apply(x)))).unwrap()
    }
}
