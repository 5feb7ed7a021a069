//! Group actions by automorphisms, stored as full tables `ψ(a, x)`.
//!
//! The semidirect product uses the convention
//! `(x, a)(x', a') = (x·ψ(a, x'), a·a')`, with the pair `(x, a)` at index
//! `x * |A| + a`. Everything downstream (Peiffer products in particular)
//! depends on this single choice.

use std::fmt;
use std::sync::Arc;

use crate::group::{AutomorphismGroup, ElementSet, FiniteGroup, GroupRef, Hom};
use crate::{Diagnostic, Error, Result};

/// Default bound on `|X|·|A|` for semidirect products.
pub const DEFAULT_SEMIDIRECT_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionFailure {
    /// `ψ(e, x) != x`
    Unit { x: usize, got: usize },
    /// `ψ(a, ·)` is not a bijection.
    NotBijective { a: usize },
    /// `ψ(a, x·y) != ψ(a, x)·ψ(a, y)`
    NotMultiplicative { a: usize, x: usize, y: usize },
    /// `ψ(a·b, x) != ψ(a, ψ(b, x))`
    Composition { a: usize, b: usize, x: usize },
}

impl fmt::Display for ActionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionFailure::Unit { x, got } => write!(f, "identity sends {x} to {got}"),
            ActionFailure::NotBijective { a } => write!(f, "row {a} is not a bijection"),
            ActionFailure::NotMultiplicative { a, x, y } => {
                write!(f, "row {a} is not multiplicative on ({x}, {y})")
            }
            ActionFailure::Composition { a, b, x } => {
                write!(f, "psi({a}*{b}, {x}) != psi({a}, psi({b}, {x}))")
            }
        }
    }
}

fn scan_action(
    acting: &FiniteGroup,
    target: &FiniteGroup,
    psi: impl Fn(usize, usize) -> usize,
) -> Option<ActionFailure> {
    let e = acting.identity();
    for x in target.elements() {
        let got = psi(e, x);
        if got != x {
            return Some(ActionFailure::Unit { x, got });
        }
    }
    for a in acting.elements() {
        let row = ElementSet::from_elements(target.order(), target.elements().map(|x| psi(a, x)));
        if row.len() != target.order() {
            return Some(ActionFailure::NotBijective { a });
        }
        for x in target.elements() {
            for y in target.elements() {
                if psi(a, target.mul(x, y)) != target.mul(psi(a, x), psi(a, y)) {
                    return Some(ActionFailure::NotMultiplicative { a, x, y });
                }
            }
        }
    }
    for a in acting.elements() {
        for b in acting.elements() {
            let ab = acting.mul(a, b);
            for x in target.elements() {
                if psi(ab, x) != psi(a, psi(b, x)) {
                    return Some(ActionFailure::Composition { a, b, x });
                }
            }
        }
    }
    None
}

/// Checks a raw table against the action axioms. Errors only on a dimension
/// mismatch or out-of-range entries.
pub fn check_action(
    acting: &FiniteGroup,
    target: &FiniteGroup,
    table: &[Vec<usize>],
) -> Result<Diagnostic<ActionFailure>> {
    if table.len() != acting.order() {
        return Err(Error::DimensionMismatch(format!(
            "action table has {} rows, acting group has order {}",
            table.len(),
            acting.order()
        )));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != target.order() {
            return Err(Error::DimensionMismatch(format!(
                "action row {a} has {} entries, target has order {}",
                row.len(),
                target.order()
            )));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= target.order()) {
            return Err(Error::ElementOutOfRange(v));
        }
    }
    Ok(Diagnostic::from_option(scan_action(acting, target, |a, x| table[a][x])))
}

/// An action of `acting` on `target` by automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    acting: GroupRef,
    target: GroupRef,
    table: Vec<usize>,
}

impl Action {
    pub fn new(acting: GroupRef, target: GroupRef, table: &[Vec<usize>]) -> Result<Self> {
        match check_action(&acting, &target, table)? {
            Diagnostic::Valid => Ok(Action {
                table: table.iter().flatten().copied().collect(),
                acting,
                target,
            }),
            Diagnostic::Invalid(f) => Err(Error::InvalidAction(f)),
        }
    }

    /// Builds the table from `psi` and checks the axioms.
    pub fn from_fn(
        acting: &GroupRef,
        target: &GroupRef,
        psi: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(acting.order() * target.order());
        for a in acting.elements() {
            for x in target.elements() {
                let v = psi(a, x);
                if v >= target.order() {
                    return Err(Error::ElementOutOfRange(v));
                }
                table.push(v);
            }
        }
        let act = Action { acting: acting.clone(), target: target.clone(), table };
        match scan_action(acting, target, |a, x| act.act(a, x)) {
            None => Ok(act),
            Some(f) => Err(Error::InvalidAction(f)),
        }
    }

    pub fn trivial(acting: &GroupRef, target: &GroupRef) -> Self {
        Action {
            acting: acting.clone(),
            target: target.clone(),
            table: acting.elements().flat_map(|_| target.elements()).collect(),
        }
    }

    /// `χ_A`: `ψ(a, x) = a x a⁻¹`
    pub fn conjugation(g: &GroupRef) -> Self {
        let table = g.elements().flat_map(|a| g.elements().map(move |x| g.conj(a, x))).collect();
        Action { acting: g.clone(), target: g.clone(), table }
    }

    /// `ψ'(a, x) = ψ(f(a), x)`
    pub fn pullback(f: &Hom, psi: &Action) -> Result<Self> {
        if f.cod() != psi.acting() {
            return Err(Error::GroupMismatch(
                "pullback: codomain of the map is not the acting group".into(),
            ));
        }
        let t = psi.target.order();
        let table = f
            .dom()
            .elements()
            .flat_map(|a| {
                let row = f.apply(a) * t;
                psi.table[row..row + t].iter().copied()
            })
            .collect();
        Ok(Action { acting: f.dom().clone(), target: psi.target.clone(), table })
    }

    /// The action corresponding to a homomorphism `acting -> Aut(target)`.
    pub fn from_aut_hom(aut: &AutomorphismGroup, target: &GroupRef, hom: &Hom) -> Result<Self> {
        if hom.cod() != &aut.group {
            return Err(Error::GroupMismatch("homomorphism does not land in Aut".into()));
        }
        let table = hom
            .dom()
            .elements()
            .flat_map(|a| aut.autos[hom.apply(a)].map().iter().copied())
            .collect();
        Ok(Action { acting: hom.dom().clone(), target: target.clone(), table })
    }

    pub fn acting(&self) -> &GroupRef {
        &self.acting
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.table[a * self.target.order() + x]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.target.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.acting.elements().all(|a| self.target.elements().all(|x| self.act(a, x) == x))
    }

    /// `ψ(a, ·)` as an automorphism of the target.
    pub fn automorphism(&self, a: usize) -> Hom {
        Hom::new_unchecked(
            self.target.clone(),
            self.target.clone(),
            self.target.elements().map(|x| self.act(a, x)).collect(),
        )
    }
}

/// `X ⋊ A` with its kernel inclusion, section and projection.
#[derive(Debug, Clone)]
pub struct SemidirectData {
    pub group: GroupRef,
    /// `x ↦ (x, e)`
    pub j_x: Hom,
    /// `a ↦ (e, a)`
    pub j_a: Hom,
    /// `(x, a) ↦ a`
    pub pi: Hom,
}

impl SemidirectData {
    pub fn pair_index(&self, x: usize, a: usize) -> usize {
        x * self.pi.cod().order() + a
    }

    pub fn pair(&self, g: usize) -> (usize, usize) {
        let na = self.pi.cod().order();
        (g / na, g % na)
    }
}

pub fn semidirect(psi: &Action, cap: usize) -> Result<SemidirectData> {
    let x = psi.target();
    let a = psi.acting();
    let size = x.order() * a.order();
    if size > cap {
        return Err(Error::CapExceeded { what: "semidirect product", size, cap });
    }
    let na = a.order();
    let group = FiniteGroup::from_fn(size, |g, h| {
        let (x1, a1) = (g / na, g % na);
        let (x2, a2) = (h / na, h % na);
        x.mul(x1, psi.act(a1, x2)) * na + a.mul(a1, a2)
    })?;
    let group = Arc::new(group);
    let j_x = Hom::new_unchecked(x.clone(), group.clone(), x.elements().map(|v| v * na + a.identity()).collect());
    let j_a = Hom::new_unchecked(a.clone(), group.clone(), a.elements().map(|b| x.identity() * na + b).collect());
    let pi = Hom::new_unchecked(group.clone(), a.clone(), group.elements().map(|g| g % na).collect());
    Ok(SemidirectData { group, j_x, j_a, pi })
}

/// A split epimorphism `p: G -> B` with splitting `s: B -> G`.
#[derive(Debug, Clone)]
pub struct Point {
    pub p: Hom,
    pub s: Hom,
}

impl Point {
    pub fn new(p: Hom, s: Hom) -> Result<Self> {
        if s.cod() != p.dom() || s.dom() != p.cod() {
            return Err(Error::GroupMismatch("point maps are not composable".into()));
        }
        if let Some(b) = p.cod().elements().find(|&b| p.apply(s.apply(b)) != b) {
            return Err(Error::NotAPoint(b));
        }
        Ok(Point { p, s })
    }

    pub fn of_semidirect(sd: &SemidirectData) -> Self {
        Point { p: sd.pi.clone(), s: sd.j_a.clone() }
    }
}

/// The action of `B` on the kernel of `p` by conjugation through `s`,
/// together with the kernel inclusion.
pub fn point_to_action(pt: &Point) -> Result<(Action, Hom)> {
    let g = pt.p.dom();
    let b = pt.p.cod();
    if let Some(bad) = b.elements().find(|&x| pt.p.apply(pt.s.apply(x)) != x) {
        return Err(Error::NotAPoint(bad));
    }
    let (kernel, inc) = g.subgroup_as_group(&pt.p.kernel())?;
    let mut local = vec![usize::MAX; g.order()];
    for k in kernel.elements() {
        local[inc.apply(k)] = k;
    }
    let action = Action::from_fn(b, &kernel, |x, k| {
        let v = local[g.conj(pt.s.apply(x), inc.apply(k))];
        assert!(v != usize::MAX, "conjugate left the kernel");
        v
    })?;
    Ok((action, inc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, perm};
    use crate::group::{is_isomorphic, DEFAULT_SEARCH_CAP};

    fn arc(g: FiniteGroup) -> GroupRef {
        Arc::new(g)
    }

    #[test]
    fn check_action_examples() {
        let s3 = arc(FiniteGroup::symmetric(3));
        assert!(check_action(&s3, &s3, &Action::conjugation(&s3).rows()).unwrap().is_valid());
        let mut bad = Action::trivial(&s3, &s3).rows();
        bad[s3.identity()].swap(1, 2);
        assert!(matches!(
            check_action(&s3, &s3, &bad).unwrap(),
            Diagnostic::Invalid(ActionFailure::Unit { x: 1, .. })
        ));
        // row 1 is a bijection of S3 that does not respect products
        let mut bad = Action::trivial(&s3, &s3).rows();
        bad[1].swap(0, 1);
        assert!(matches!(
            check_action(&s3, &s3, &bad).unwrap(),
            Diagnostic::Invalid(ActionFailure::NotMultiplicative { a: 1, .. })
        ));
        let z2 = arc(FiniteGroup::cyclic(2));
        let z3 = arc(FiniteGroup::cyclic(3));
        // every row is an automorphism, but Z3 -> Aut(Z3) is not a homomorphism
        let bad = vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 1, 2]];
        assert!(matches!(
            check_action(&z3, &z3, &bad).unwrap(),
            Diagnostic::Invalid(ActionFailure::Composition { .. })
        ));
        assert!(matches!(check_action(&z2, &z3, &[vec![0, 1, 2]]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn derived_actions() {
        let s3 = arc(FiniteGroup::symmetric(3));
        let z2 = arc(FiniteGroup::cyclic(2));
        let triv = Action::trivial(&z2, &s3);
        assert!(triv.rows().iter().all(|r| *r == (0..6).collect::<Vec<_>>()));
        let conj = Action::conjugation(&s3);
        // (12) and (123) in 1-based cycle notation
        assert_eq!(conj.act(perm("(12)"), perm("(123)")), perm("(132)"));
        let id = Hom::identity(&s3);
        assert_eq!(Action::pullback(&id, &conj).unwrap(), conj);
        assert!(Action::pullback(&Hom::identity(&z2), &conj).is_err());
    }

    #[test]
    fn pullback_is_functorial() {
        let s3 = arc(FiniteGroup::symmetric(3));
        let z2 = arc(FiniteGroup::cyclic(2));
        let z6 = arc(FiniteGroup::cyclic(6));
        let conj = Action::conjugation(&s3);
        for g in crate::group::homomorphisms(&z2, &s3) {
            for f in crate::group::homomorphisms(&z6, &z2) {
                let direct = Action::pullback(&g.compose(&f).unwrap(), &conj).unwrap();
                let staged = Action::pullback(&f, &Action::pullback(&g, &conj).unwrap()).unwrap();
                assert_eq!(direct, staged);
            }
        }
    }

    #[test]
    fn semidirect_examples() {
        let z2 = arc(FiniteGroup::cyclic(2));
        let z3 = arc(FiniteGroup::cyclic(3));
        let s3 = arc(FiniteGroup::symmetric(3));
        let sd = semidirect(&Action::trivial(&z2, &s3), DEFAULT_SEMIDIRECT_CAP).unwrap();
        let prod = arc(FiniteGroup::direct_product(&s3, &z2));
        assert!(is_isomorphic(&sd.group, &prod, DEFAULT_SEARCH_CAP).unwrap().is_some());

        let sd = semidirect(&Action::conjugation(&s3), DEFAULT_SEMIDIRECT_CAP).unwrap();
        let prod = arc(FiniteGroup::direct_product(&s3, &s3));
        assert!(is_isomorphic(&sd.group, &prod, DEFAULT_SEARCH_CAP).unwrap().is_some());

        let inversion = Action::from_fn(&z2, &z3, |a, x| if a == 0 { x } else { (3 - x) % 3 }).unwrap();
        let sd = semidirect(&inversion, DEFAULT_SEMIDIRECT_CAP).unwrap();
        assert!(!sd.group.is_abelian());
        assert!(is_isomorphic(&sd.group, &s3, DEFAULT_SEARCH_CAP).unwrap().is_some());

        assert!(matches!(
            semidirect(&Action::conjugation(&s3), 35),
            Err(Error::CapExceeded { size: 36, .. })
        ));
    }

    #[test]
    fn semidirect_invariants() {
        let s3 = arc(FiniteGroup::symmetric(3));
        let v4 = arc(fixtures::klein_four());
        for psi in fixtures::actions_of(&s3, &v4) {
            let sd = semidirect(&psi, DEFAULT_SEMIDIRECT_CAP).unwrap();
            assert_eq!(sd.group.order(), 24);
            assert_eq!(sd.pi.compose(&sd.j_a).unwrap(), Hom::identity(&s3));
            assert!(sd.j_x.is_injective());
            assert_eq!(sd.j_x.image(), sd.pi.kernel());
            for a in s3.elements() {
                for x in v4.elements() {
                    assert_eq!(
                        sd.group.conj(sd.j_a.apply(a), sd.j_x.apply(x)),
                        sd.j_x.apply(psi.act(a, x))
                    );
                }
            }
        }
    }

    #[test]
    fn point_examples() {
        let s3 = arc(FiniteGroup::symmetric(3));
        let z2 = arc(FiniteGroup::cyclic(2));
        for psi in fixtures::actions_of(&z2, &s3) {
            let sd = semidirect(&psi, DEFAULT_SEMIDIRECT_CAP).unwrap();
            let (back, _) = point_to_action(&Point::of_semidirect(&sd)).unwrap();
            assert_eq!(back, psi);
        }
        // product projection A × X -> A with the section a ↦ (a, e)
        let prod = arc(FiniteGroup::direct_product(&z2, &s3));
        let p = Hom::new(prod.clone(), z2.clone(), prod.elements().map(|g| g / 6).collect()).unwrap();
        let s = Hom::new(z2.clone(), prod.clone(), vec![0, 6]).unwrap();
        let (psi, inc) = point_to_action(&Point::new(p.clone(), s).unwrap()).unwrap();
        assert!(psi.is_trivial());
        assert_eq!(inc.image(), p.kernel());
        let bad = Hom::trivial(&z2, &prod);
        assert_eq!(Point::new(p.clone(), bad.clone()).unwrap_err(), Error::NotAPoint(1));
        assert_eq!(point_to_action(&Point { p, s: bad }).unwrap_err(), Error::NotAPoint(1));
    }
}
