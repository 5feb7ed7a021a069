//! Mutual actions of two groups, the action of the free product `M + N` on
//! each factor, and the compatibility test.
//!
//! Notation: `ⁿm = ξ^N_M(n, m)` and `ᵐn = ξ^M_N(m, n)`. The pair is compatible
//! when `^(ᵐn)m' = ^(mnm⁻¹)m'` and `^(ⁿm)n' = ^(nmn⁻¹)n'` for all elements,
//! where the right-hand sides are computed by the free-product action.

use std::fmt;

use serde::Serialize;

use crate::action::Action;
use crate::freeword::{Letter, Side};
use crate::group::{FiniteGroup, GroupRef};
use crate::{Error, Result};

/// `N` acting on `M` (`xi_nm`) and `M` acting on `N` (`xi_mn`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutualActions {
    m: GroupRef,
    n: GroupRef,
    xi_nm: Action,
    xi_mn: Action,
}

impl MutualActions {
    pub fn new(m: GroupRef, n: GroupRef, xi_nm: Action, xi_mn: Action) -> Result<Self> {
        if xi_nm.acting() != &n || xi_nm.target() != &m {
            return Err(Error::GroupMismatch("xi_nm must be an action of N on M".into()));
        }
        if xi_mn.acting() != &m || xi_mn.target() != &n {
            return Err(Error::GroupMismatch("xi_mn must be an action of M on N".into()));
        }
        Ok(MutualActions { m, n, xi_nm, xi_mn })
    }

    pub fn trivial(m: &GroupRef, n: &GroupRef) -> Self {
        MutualActions {
            m: m.clone(),
            n: n.clone(),
            xi_nm: Action::trivial(n, m),
            xi_mn: Action::trivial(m, n),
        }
    }

    pub fn m(&self) -> &GroupRef {
        &self.m
    }

    pub fn n(&self) -> &GroupRef {
        &self.n
    }

    pub fn xi_nm(&self) -> &Action {
        &self.xi_nm
    }

    pub fn xi_mn(&self) -> &Action {
        &self.xi_mn
    }

    pub fn group(&self, side: Side) -> &FiniteGroup {
        match side {
            Side::M => &self.m,
            Side::N => &self.n,
            Side::T => panic!("mutual actions have no third factor"),
        }
    }

    /// The same data with the roles of `M` and `N` exchanged.
    pub fn swapped(&self) -> Self {
        MutualActions {
            m: self.n.clone(),
            n: self.m.clone(),
            xi_nm: self.xi_mn.clone(),
            xi_mn: self.xi_nm.clone(),
        }
    }

    /// Action of a single letter on an element of the factor `side`:
    /// conjugation within the same factor, the given action across factors.
    #[inline]
    pub fn letter_act(&self, letter: Letter, side: Side, x: usize) -> usize {
        match (letter.side, side) {
            (Side::M, Side::M) => self.m.conj(letter.elem, x),
            (Side::N, Side::N) => self.n.conj(letter.elem, x),
            (Side::N, Side::M) => self.xi_nm.act(letter.elem, x),
            (Side::M, Side::N) => self.xi_mn.act(letter.elem, x),
            _ => panic!("mutual actions have no third factor"),
        }
    }

    /// `ξ^{M+N}_side(s x s⁻¹)`, peeling letters off the right end of `s`:
    /// the empty word leaves `x` alone, and `s = s'ℓ` recurses on `s'` with
    /// `x` replaced by the action of the letter `ℓ`.
    ///
    /// Accepts unreduced words; the result only depends on the free-product
    /// element.
    pub fn coproduct_eval(&self, s: &[Letter], side: Side, x: usize) -> usize {
        s.iter().rev().fold(x, |acc, &l| self.letter_act(l, side, acc))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CompatWitness {
    /// 1: `^(ᵐn)m' = ^(mnm⁻¹)m'`; 2: `^(ⁿm)n' = ^(nmn⁻¹)n'`.
    pub equation: u8,
    pub m: usize,
    pub n: usize,
    /// `m'` for equation 1, `n'` for equation 2.
    pub target: usize,
    pub lhs: usize,
    pub rhs: usize,
}

impl fmt::Display for CompatWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (inner, word, var) = match self.equation {
            1 => ("^m n", "m n m^-1", "m'"),
            _ => ("^n m", "n m n^-1", "n'"),
        };
        write!(
            f,
            "equation {}: ^({inner}) {var} = {} but ^({word}) {var} = {} at m={}, n={}, {var}={}",
            self.equation, self.lhs, self.rhs, self.m, self.n, self.target
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CompatVerdict {
    pub compatible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CompatWitness>,
}

impl MutualActions {
    /// Both sides of equation 1 at `(m, n, m')`.
    pub fn equation_one(&self, m: usize, n: usize, m2: usize) -> (usize, usize) {
        let lhs = self.xi_nm.act(self.xi_mn.act(m, n), m2);
        let word = [Letter::new(Side::M, m), Letter::new(Side::N, n), Letter::new(Side::M, self.m.inv(m))];
        (lhs, self.coproduct_eval(&word, Side::M, m2))
    }

    /// Both sides of equation 2 at `(m, n, n')`.
    pub fn equation_two(&self, m: usize, n: usize, n2: usize) -> (usize, usize) {
        let lhs = self.xi_mn.act(self.xi_nm.act(n, m), n2);
        let word = [Letter::new(Side::N, n), Letter::new(Side::M, m), Letter::new(Side::N, self.n.inv(n))];
        (lhs, self.coproduct_eval(&word, Side::N, n2))
    }
}

/// Exhaustive compatibility test. The witness is the first failure in the
/// order: equation 1 before 2, then `m`, `n`, and the acted-on element
/// ascending.
pub fn check_compatible(mutual: &MutualActions) -> CompatVerdict {
    let (m, n) = (mutual.m(), mutual.n());
    for a in m.elements() {
        for b in n.elements() {
            for t in m.elements() {
                let (lhs, rhs) = mutual.equation_one(a, b, t);
                if lhs != rhs {
                    return incompatible(1, a, b, t, lhs, rhs);
                }
            }
        }
    }
    for a in m.elements() {
        for b in n.elements() {
            for t in n.elements() {
                let (lhs, rhs) = mutual.equation_two(a, b, t);
                if lhs != rhs {
                    return incompatible(2, a, b, t, lhs, rhs);
                }
            }
        }
    }
    CompatVerdict { compatible: true, witness: None }
}

fn incompatible(equation: u8, m: usize, n: usize, target: usize, lhs: usize, rhs: usize) -> CompatVerdict {
    CompatVerdict {
        compatible: false,
        witness: Some(CompatWitness { equation, m, n, target, lhs, rhs }),
    }
}

/// Re-evaluates a witness; true when it still exhibits `lhs != rhs`.
pub fn reproduce_witness(mutual: &MutualActions, w: &CompatWitness) -> bool {
    let (lhs, rhs) = match w.equation {
        1 => mutual.equation_one(w.m, w.n, w.target),
        _ => mutual.equation_two(w.m, w.n, w.target),
    };
    lhs == w.lhs && rhs == w.rhs && lhs != rhs
}
