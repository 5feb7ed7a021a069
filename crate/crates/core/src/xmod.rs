//! Crossed modules `∂: X -> A` with an action of `A` on `X`.

use std::fmt;

use crate::action::Action;
use crate::compat::MutualActions;
use crate::group::Hom;
use crate::{Diagnostic, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XmodFailure {
    /// `∂(ψ(a, x)) != a ∂(x) a⁻¹`
    Precrossed { a: usize, x: usize },
    /// `ψ(∂(x), x') != x x' x⁻¹`
    Peiffer { x: usize, x2: usize },
}

impl fmt::Display for XmodFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XmodFailure::Precrossed { a, x } => {
                write!(f, "precrossed condition fails at a={a}, x={x}")
            }
            XmodFailure::Peiffer { x, x2 } => write!(f, "Peiffer condition fails at x={x}, x'={x2}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    boundary: Hom,
    action: Action,
}

impl CrossedModule {
    /// Builds and validates a crossed module.
    pub fn new(boundary: Hom, action: Action) -> Result<Self> {
        match check_xmod(&boundary, &action)? {
            Diagnostic::Valid => Ok(CrossedModule { boundary, action }),
            Diagnostic::Invalid(f) => Err(Error::InvalidCrossedModule(f)),
        }
    }

    pub fn boundary(&self) -> &Hom {
        &self.boundary
    }

    pub fn action(&self) -> &Action {
        &self.action
    }
}

/// Checks the precrossed condition, then the Peiffer condition, each in
/// lexicographic order of the witness pair.
pub fn check_xmod(boundary: &Hom, action: &Action) -> Result<Diagnostic<XmodFailure>> {
    let (x, a) = (boundary.dom(), boundary.cod());
    if action.acting() != a || action.target() != x {
        return Err(Error::GroupMismatch(
            "the action must be of the boundary's codomain on its domain".into(),
        ));
    }
    for g in a.elements() {
        for v in x.elements() {
            if boundary.apply(action.act(g, v)) != a.conj(g, boundary.apply(v)) {
                return Ok(Diagnostic::Invalid(XmodFailure::Precrossed { a: g, x: v }));
            }
        }
    }
    for v in x.elements() {
        let dv = boundary.apply(v);
        for w in x.elements() {
            if action.act(dv, w) != x.conj(v, w) {
                return Ok(Diagnostic::Invalid(XmodFailure::Peiffer { x: v, x2: w }));
            }
        }
    }
    Ok(Diagnostic::Valid)
}

/// Mutual actions induced by coterminal crossed modules `μ: M -> L` and
/// `ν: N -> L`: `ᵐn = ψ_N(μ(m), n)` and `ⁿm = ψ_M(ν(n), m)`.
pub fn induced_mutual_actions(xm_m: &CrossedModule, xm_n: &CrossedModule) -> Result<MutualActions> {
    if xm_m.boundary.cod() != xm_n.boundary.cod() {
        return Err(Error::GroupMismatch("crossed modules are not coterminal".into()));
    }
    for xm in [xm_m, xm_n] {
        if let Diagnostic::Invalid(f) = check_xmod(&xm.boundary, &xm.action)? {
            return Err(Error::InvalidCrossedModule(f));
        }
    }
    let xi_mn = Action::pullback(&xm_m.boundary, &xm_n.action)?;
    let xi_nm = Action::pullback(&xm_n.boundary, &xm_m.action)?;
    MutualActions::new(
        xm_m.boundary.dom().clone(),
        xm_n.boundary.dom().clone(),
        xi_nm,
        xi_mn,
    )
}
