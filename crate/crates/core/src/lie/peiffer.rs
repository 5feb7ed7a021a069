//! The Peiffer product of Lie algebras acting on each other: the quotient of
//! the semidirect sum `M ⋊ N` by the ideal generated by
//! `[m, n] - ρ_MN(m) n`, which in semidirect coordinates is
//! `-(ρ_NM(n) m, ρ_MN(m) n)`.

use std::sync::Arc;

use super::linalg::{is_zero_vec, unit_vec, zero_vec, Matrix, Subspace, Q};
use super::{
    check_lie_action, lie_compatible, lie_induced_actions, lie_semidirect, LieAction, LieAlgebra,
    LieCrossedModule, LieFailure, LieHom, LieMutualActions, LieRef, LieSemidirect,
};
use crate::{Diagnostic, Error, Result};

#[derive(Debug, Clone)]
pub struct LiePeiffer {
    source: LieMutualActions,
    semidirect: LieSemidirect,
    ideal: Subspace,
    /// Semidirect coordinates whose unit vectors form the quotient basis.
    free: Vec<usize>,
    algebra: LieRef,
    projection: Matrix,
    l_m: LieHom,
    l_n: LieHom,
    compatible: bool,
}

impl LiePeiffer {
    pub fn source(&self) -> &LieMutualActions {
        &self.source
    }

    pub fn semidirect(&self) -> &LieSemidirect {
        &self.semidirect
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn algebra(&self) -> &LieRef {
        &self.algebra
    }

    /// `M ⋊ N -> M ⋈ N`.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn l_m(&self) -> &LieHom {
        &self.l_m
    }

    pub fn l_n(&self) -> &LieHom {
        &self.l_n
    }

    pub fn compatible(&self) -> bool {
        self.compatible
    }

    /// Lift of the `a`-th quotient basis vector.
    pub fn lift(&self, a: usize) -> Vec<Q> {
        unit_vec(self.semidirect.algebra.dim(), self.free[a])
    }

    /// Coordinates in `M ⋈ N` of a semidirect-sum vector.
    pub fn project(&self, v: &[Q]) -> Vec<Q> {
        project(&self.ideal, &self.free, v)
    }
}

fn project(ideal: &Subspace, free: &[usize], v: &[Q]) -> Vec<Q> {
    let r = ideal.residue(v);
    free.iter().map(|&c| r[c].clone()).collect()
}

/// Builds `M ⋈ N` for any mutual actions.
pub fn lie_peiffer(mutual: &LieMutualActions) -> Result<LiePeiffer> {
    let sd = lie_semidirect(mutual.rho_nm())?;
    let s = &sd.algebra;
    let d = s.dim();
    let (dm, dn) = (mutual.m().dim(), mutual.n().dim());
    let mut ideal = Subspace::new(d);
    let mut pending = Vec::new();
    for i in 0..dm {
        let mi = unit_vec(dm, i);
        for j in 0..dn {
            let nj = unit_vec(dn, j);
            let mut g = mutual.rho_nm().act(&nj, &mi);
            g.extend(mutual.rho_mn().act(&mi, &nj));
            if ideal.insert(&g) {
                pending.push(g);
            }
        }
    }
    // close under brackets with the basis; each insertion raises the dimension
    while let Some(v) = pending.pop() {
        for k in 0..d {
            let w = s.bracket(&unit_vec(d, k), &v);
            if ideal.insert(&w) {
                pending.push(w);
            }
        }
    }
    let free = ideal.free_columns();
    let k = free.len();
    let mut structure = zero_vec(k * k * k);
    for (a, &fa) in free.iter().enumerate() {
        for (b, &fb) in free.iter().enumerate() {
            let br = project(&ideal, &free, s.basis_bracket(fa, fb));
            for (c, v) in br.into_iter().enumerate() {
                structure[(a * k + b) * k + c] = v;
            }
        }
    }
    let algebra = Arc::new(LieAlgebra::new(k, structure)?);
    let cols: Vec<Vec<Q>> = (0..d).map(|j| project(&ideal, &free, &unit_vec(d, j))).collect();
    let projection = Matrix::from_columns(k, &cols);
    let l_m = LieHom::new(mutual.m().clone(), algebra.clone(), projection.mul(sd.inc_m.matrix()))?;
    let l_n = LieHom::new(mutual.n().clone(), algebra.clone(), projection.mul(sd.inc_n.matrix()))?;
    Ok(LiePeiffer {
        source: mutual.clone(),
        semidirect: sd,
        ideal,
        free,
        algebra,
        projection,
        l_m,
        l_n,
        compatible: lie_compatible(mutual).compatible,
    })
}

/// `T_M(m, n) x = [m, x] + ρ_NM(n) x` and `T_N(m, n) y = ρ_MN(m) y + [n, y]`
/// on the semidirect sum.
fn operator_on(mutual: &LieMutualActions, side: char, s: &[Q]) -> Matrix {
    let dm = mutual.m().dim();
    let (m, n) = s.split_at(dm);
    match side {
        'M' => mutual.m().ad(m).add(&mutual.rho_nm().operator(n)),
        _ => mutual.rho_mn().operator(m).add(&mutual.n().ad(n)),
    }
}

/// Actions of `M ⋈ N` on `M` and `N`. They exist iff the ideal acts
/// trivially and the induced operators satisfy the action axioms.
pub fn lie_peiffer_actions(lp: &LiePeiffer) -> Result<(LieAction, LieAction)> {
    let mutual = &lp.source;
    let mut out = Vec::with_capacity(2);
    for side in ['M', 'N'] {
        for g in lp.ideal.basis() {
            if !operator_on(mutual, side, &g).is_zero() {
                return Err(Error::InvalidLie(LieFailure::IdealActsNontrivially { side, generator: g }));
            }
        }
        let target = if side == 'M' { mutual.m() } else { mutual.n() };
        let rho: Vec<Matrix> =
            (0..lp.algebra.dim()).map(|a| operator_on(mutual, side, &lp.lift(a))).collect();
        if let Diagnostic::Invalid(f) = check_lie_action(&lp.algebra, target, &rho)? {
            return Err(Error::InvalidLie(LieFailure::QuotientNotAnAction { side, failure: Box::new(f) }));
        }
        out.push(LieAction::new(lp.algebra.clone(), target.clone(), rho)?);
    }
    let on_n = out.pop().expect("two sides");
    let on_m = out.pop().expect("two sides");
    Ok((on_m, on_n))
}

pub fn lie_peiffer_xmods(lp: &LiePeiffer) -> Result<(LieCrossedModule, LieCrossedModule)> {
    let (on_m, on_n) = lie_peiffer_actions(lp)?;
    Ok((
        LieCrossedModule::new(lp.l_m.clone(), on_m)?,
        LieCrossedModule::new(lp.l_n.clone(), on_n)?,
    ))
}

#[derive(Debug, Clone)]
pub struct LieUniversalMap {
    pub hom: LieHom,
    /// The images of `l_M` and `l_N` span `M ⋈ N`.
    pub unique: bool,
}

/// The comparison map `M ⋈ N -> L` for coterminal Lie crossed modules
/// inducing the source actions.
pub fn lie_universal_map(
    lp: &LiePeiffer,
    xm_m: &LieCrossedModule,
    xm_n: &LieCrossedModule,
) -> Result<LieUniversalMap> {
    let induced = lie_induced_actions(xm_m, xm_n)?;
    if &induced != lp.source() {
        return Err(Error::UniversalMap("the crossed modules induce different mutual actions".into()));
    }
    let (mu, nu) = (xm_m.boundary(), xm_n.boundary());
    let l = mu.cod();
    let d = lp.semidirect.algebra.dim();
    let dm = lp.source.m().dim();
    let cols: Vec<Vec<Q>> = (0..d)
        .map(|j| if j < dm { mu.matrix().column(j) } else { nu.matrix().column(j - dm) })
        .collect();
    let lifted = LieHom::new(lp.semidirect.algebra.clone(), l.clone(), Matrix::from_columns(l.dim(), &cols))
        .map_err(|e| Error::UniversalMap(format!("(m, n) ↦ μ(m) + ν(n) is not a homomorphism: {e}")))?;
    if let Some(g) = lp.ideal.basis().into_iter().find(|g| !is_zero_vec(&lifted.apply(g))) {
        return Err(Error::UniversalMap(format!(
            "ideal element {} is not killed",
            super::linalg::format_vec(&g)
        )));
    }
    let descended: Vec<Vec<Q>> = (0..lp.algebra.dim()).map(|a| lifted.apply(&lp.lift(a))).collect();
    let hom = LieHom::new(lp.algebra.clone(), l.clone(), Matrix::from_columns(l.dim(), &descended))
        .map_err(|e| Error::UniversalMap(format!("descended map is not a homomorphism: {e}")))?;
    if hom.matrix().mul(lp.l_m.matrix()) != *mu.matrix() || hom.matrix().mul(lp.l_n.matrix()) != *nu.matrix() {
        return Err(Error::UniversalMap("triangles do not commute".into()));
    }
    let mut span = Subspace::new(lp.algebra.dim());
    for c in 0..dm {
        span.insert(&lp.l_m.matrix().column(c));
    }
    for c in 0..lp.source.n().dim() {
        span.insert(&lp.l_n.matrix().column(c));
    }
    let unique = span.dim() == lp.algebra.dim();
    Ok(LieUniversalMap { hom, unique })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{coterminal_pairs, identity_scalar_pair};
    use super::super::linalg::q;
    use super::*;

    #[test]
    fn zero_actions_give_direct_sum() {
        let l2: LieRef = Arc::new(LieAlgebra::two_dim_solvable());
        let sl2: LieRef = Arc::new(LieAlgebra::sl2());
        let lp = lie_peiffer(&LieMutualActions::zero(&l2, &sl2)).unwrap();
        // the ideal is spanned by [M, N] = 0
        assert_eq!(lp.ideal().dim(), 0);
        assert_eq!(lp.algebra().dim(), 5);
        assert_eq!(lp.algebra().as_ref(), lp.semidirect().algebra.as_ref());
        let (xm, xn) = lie_peiffer_xmods(&lp).unwrap();
        assert_eq!(xm.boundary().rank(), 2);
        assert_eq!(xn.boundary().rank(), 3);
    }

    #[test]
    fn incompatible_pair_has_no_actions() {
        let mutual = identity_scalar_pair();
        let lp = lie_peiffer(&mutual).unwrap();
        assert!(!lp.compatible());
        // generator (1, 1), and [e0, (1, 1)] = -e0, so the ideal is everything
        assert_eq!(lp.ideal().basis(), vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
        assert_eq!(lp.algebra().dim(), 0);
        assert!(matches!(
            lie_peiffer_actions(&lp),
            Err(Error::InvalidLie(LieFailure::IdealActsNontrivially { side: 'M', .. }))
        ));
    }

    #[test]
    fn coterminal_pairs_round_trip() {
        for (name, xm, xn) in coterminal_pairs() {
            let mutual = lie_induced_actions(&xm, &xn).unwrap();
            let lp = lie_peiffer(&mutual).unwrap();
            assert!(lp.compatible(), "{name}");
            assert!(lp.algebra().dim() <= mutual.m().dim() + mutual.n().dim(), "{name}");
            let (pm, pn) = lie_peiffer_xmods(&lp).unwrap();
            assert_eq!(lie_induced_actions(&pm, &pn).unwrap(), mutual, "{name}");
            let u = lie_universal_map(&lp, &xm, &xn).unwrap();
            assert!(u.unique, "{name}");
        }
    }

    #[test]
    fn identity_over_l2() {
        let l2: LieRef = Arc::new(LieAlgebra::two_dim_solvable());
        let id = LieCrossedModule::identity(&l2);
        let mutual = lie_induced_actions(&id, &id).unwrap();
        let lp = lie_peiffer(&mutual).unwrap();
        let u = lie_universal_map(&lp, &id, &id).unwrap();
        // the comparison map onto L2 is surjective
        assert_eq!(u.hom.rank(), 2);
    }

    #[test]
    fn zero_actions_into_direct_sum() {
        let l2: LieRef = Arc::new(LieAlgebra::two_dim_solvable());
        let sl2: LieRef = Arc::new(LieAlgebra::sl2());
        let sum = lie_semidirect(&LieAction::zero(&sl2, &l2)).unwrap().algebra;
        let basis = |range: std::ops::Range<usize>| range.map(|i| unit_vec(5, i)).collect::<Vec<_>>();
        let xm = LieCrossedModule::ideal_inclusion(&sum, &basis(0..2)).unwrap();
        let xn = LieCrossedModule::ideal_inclusion(&sum, &basis(2..5)).unwrap();
        let mutual = lie_induced_actions(&xm, &xn).unwrap();
        assert!(mutual.rho_nm().is_zero() && mutual.rho_mn().is_zero());
        let lp = lie_peiffer(&mutual).unwrap();
        let u = lie_universal_map(&lp, &xm, &xn).unwrap();
        assert_eq!(*u.hom.matrix(), Matrix::identity(5));
    }

    #[test]
    fn universal_map_rejects_foreign_actions() {
        let l2: LieRef = Arc::new(LieAlgebra::two_dim_solvable());
        let id = LieCrossedModule::identity(&l2);
        let lp = lie_peiffer(&LieMutualActions::zero(&l2, &l2)).unwrap();
        assert!(matches!(lie_universal_map(&lp, &id, &id), Err(Error::UniversalMap(_))));
    }
}
