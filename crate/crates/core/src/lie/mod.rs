//! Finite-dimensional Lie algebras over the rationals, given by structure
//! constants, with the same constructions as on the group side: actions by
//! derivations, semidirect sums, crossed modules, compatibility and the
//! Peiffer product.
//!
//! All arithmetic is exact. Every axiom is multilinear, so it is checked on
//! basis elements only.
//!
//! Compatibility of `ρ_NM: N -> Der(M)` and `ρ_MN: M -> Der(N)` is the pair of
//! identities, for all `m, m' ∈ M` and `n, n' ∈ N`:
//!
//! ```text
//! (C1)  ρ_NM(ρ_MN(m) n)(m') = [m, ρ_NM(n) m'] - ρ_NM(n)([m, m'])
//! (C2)  ρ_MN(ρ_NM(n) m)(n') = [n, ρ_MN(m) n'] - ρ_MN(m)([n, n'])
//! ```
//!
//! obtained by expanding `[[m, n], m']` with the Jacobi identity inside a
//! common algebra `L` through which both actions factor.

pub mod linalg;
mod peiffer;

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

pub use linalg::{Matrix, Subspace, Q};
pub use peiffer::{
    lie_peiffer, lie_peiffer_actions, lie_peiffer_xmods, lie_universal_map, LiePeiffer,
    LieUniversalMap,
};

use crate::{Diagnostic, Error, Result};
use linalg::{add_vec, format_vec, is_zero_vec, sub_vec, unit_vec, zero_vec};

pub type LieRef = Arc<LieAlgebra>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieFailure {
    /// `c_ij != -c_ji`
    Antisymmetry { i: usize, j: usize },
    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = residual != 0`
    Jacobi { i: usize, j: usize, k: usize, residual: Vec<Q> },
    /// `f([e_i, e_j]) - [f e_i, f e_j]` for a linear map `f`
    BracketNotPreserved { i: usize, j: usize, residual: Vec<Q> },
    /// `ρ([a_i, a_j]) - [ρ(a_i), ρ(a_j)]` is nonzero
    ActionNotHomomorphism { i: usize, j: usize },
    /// `ρ(a)[x_i, x_j] - [ρ(a) x_i, x_j] - [x_i, ρ(a) x_j]`
    NotDerivation { a: usize, i: usize, j: usize, residual: Vec<Q> },
    /// `∂(ρ(a) x) - [a, ∂x]`
    Equivariance { a: usize, x: usize, residual: Vec<Q> },
    /// `ρ(∂x)(x') - [x, x']`
    Peiffer { x: usize, x2: usize, residual: Vec<Q> },
    /// An element of the Peiffer ideal acts nontrivially on `M` or `N`.
    IdealActsNontrivially { side: char, generator: Vec<Q> },
    /// The induced operators on the Peiffer quotient are not an action.
    QuotientNotAnAction { side: char, failure: Box<LieFailure> },
}

impl fmt::Display for LieFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieFailure::Antisymmetry { i, j } => write!(f, "[e{i}, e{j}] != -[e{j}, e{i}]"),
            LieFailure::Jacobi { i, j, k, residual } => {
                write!(f, "Jacobi fails on (e{i}, e{j}, e{k}): {}", format_vec(residual))
            }
            LieFailure::BracketNotPreserved { i, j, residual } => {
                write!(f, "bracket of (e{i}, e{j}) not preserved: {}", format_vec(residual))
            }
            LieFailure::ActionNotHomomorphism { i, j } => {
                write!(f, "rho([e{i}, e{j}]) != [rho(e{i}), rho(e{j})]")
            }
            LieFailure::NotDerivation { a, i, j, residual } => {
                write!(f, "rho(e{a}) is not a derivation on (e{i}, e{j}): {}", format_vec(residual))
            }
            LieFailure::Equivariance { a, x, residual } => {
                write!(f, "equivariance fails at (a{a}, x{x}): {}", format_vec(residual))
            }
            LieFailure::Peiffer { x, x2, residual } => {
                write!(f, "Peiffer condition fails at (x{x}, x{x2}): {}", format_vec(residual))
            }
            LieFailure::IdealActsNontrivially { side, generator } => {
                write!(f, "ideal element {} acts nontrivially on {side}", format_vec(generator))
            }
            LieFailure::QuotientNotAnAction { side, failure } => {
                write!(f, "induced operators on {side} are not an action: {failure}")
            }
        }
    }
}

fn invalid<T>(f: LieFailure) -> Result<T> {
    Err(Error::InvalidLie(f))
}

/// Structure constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    structure: Vec<Q>,
}

/// Antisymmetry, then the Jacobi identity on basis triples `i <= j <= k`.
pub fn validate_lie(dim: usize, structure: &[Q]) -> Result<Diagnostic<LieFailure>> {
    if structure.len() != dim * dim * dim {
        return Err(Error::DimensionMismatch(format!(
            "{} structure constants for dimension {dim}",
            structure.len()
        )));
    }
    let alg = LieAlgebra { dim, structure: structure.to_vec() };
    Ok(Diagnostic::from_option(alg.scan()))
}

/// Structure constants from the brackets `[e_i, e_j]` listed for some pairs;
/// a missing `[e_j, e_i]` is filled in by antisymmetry, other pairs are zero.
pub fn structure_from_brackets(dim: usize, brackets: &[(usize, usize, Vec<Q>)]) -> Result<Vec<Q>> {
    let mut c = zero_vec(dim * dim * dim);
    let mut given = vec![false; dim * dim];
    for (i, j, coeffs) in brackets {
        if *i >= dim || *j >= dim || coeffs.len() != dim {
            return Err(Error::DimensionMismatch(format!("bracket ({i}, {j}) does not fit dimension {dim}")));
        }
        given[i * dim + j] = true;
        for (k, v) in coeffs.iter().enumerate() {
            c[(i * dim + j) * dim + k] = v.clone();
        }
    }
    for (i, j, coeffs) in brackets {
        if !given[j * dim + i] {
            for (k, v) in coeffs.iter().enumerate() {
                c[(j * dim + i) * dim + k] = -v.clone();
            }
        }
    }
    Ok(c)
}

impl LieAlgebra {
    pub fn new(dim: usize, structure: Vec<Q>) -> Result<Self> {
        match validate_lie(dim, &structure)? {
            Diagnostic::Valid => Ok(LieAlgebra { dim, structure }),
            Diagnostic::Invalid(f) => invalid(f),
        }
    }

    /// From the brackets `[e_i, e_j]` listed for some pairs; see
    /// [`structure_from_brackets`].
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<Q>)]) -> Result<Self> {
        Self::new(dim, structure_from_brackets(dim, brackets)?)
    }

    fn scan(&self) -> Option<LieFailure> {
        let d = self.dim;
        for i in 0..d {
            for j in i..d {
                let sum = add_vec(self.basis_bracket(i, j), self.basis_bracket(j, i));
                if !is_zero_vec(&sum) {
                    return Some(LieFailure::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..d {
            for j in i..d {
                for k in j..d {
                    let ei = unit_vec(d, i);
                    let ej = unit_vec(d, j);
                    let ek = unit_vec(d, k);
                    let t1 = self.bracket(&ei, self.basis_bracket(j, k));
                    let t2 = self.bracket(&ej, self.basis_bracket(k, i));
                    let t3 = self.bracket(&ek, self.basis_bracket(i, j));
                    let residual = add_vec(&add_vec(&t1, &t2), &t3);
                    if !is_zero_vec(&residual) {
                        return Some(LieFailure::Jacobi { i, j, k, residual });
                    }
                }
            }
        }
        None
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, structure: zero_vec(dim * dim * dim) }
    }

    /// Basis `x, y` with `[x, y] = y`.
    pub fn two_dim_solvable() -> Self {
        Self::from_brackets(2, &[(0, 1, vec![linalg::q(0), linalg::q(1)])]).expect("valid")
    }

    /// Basis `x, y, z` with `[x, y] = z` central.
    pub fn heisenberg() -> Self {
        let q = linalg::q;
        Self::from_brackets(3, &[(0, 1, vec![q(0), q(0), q(1)])]).expect("valid")
    }

    /// Basis `e, f, h` with `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
    pub fn sl2() -> Self {
        let q = linalg::q;
        Self::from_brackets(
            3,
            &[
                (2, 0, vec![q(2), q(0), q(0)]),
                (2, 1, vec![q(0), q(-2), q(0)]),
                (0, 1, vec![q(0), q(0), q(1)]),
            ],
        )
        .expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &[Q] {
        &self.structure
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Q] {
        let d = self.dim;
        &self.structure[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let d = self.dim;
        let mut out = zero_vec(d);
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let c = ui * vj;
                for (o, s) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !s.is_zero() {
                        *o += &c * s;
                    }
                }
            }
        }
        out
    }

    /// `ad(v) = [v, -]` as a matrix.
    pub fn ad(&self, v: &[Q]) -> Matrix {
        let d = self.dim;
        let cols: Vec<Vec<Q>> = (0..d).map(|j| self.bracket(v, &unit_vec(d, j))).collect();
        Matrix::from_columns(d, &cols)
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(Zero::is_zero)
    }
}

/// A linear map preserving brackets, as a `cod.dim × dom.dim` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieHom {
    dom: LieRef,
    cod: LieRef,
    matrix: Matrix,
}

impl LieHom {
    pub fn new(dom: LieRef, cod: LieRef, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != cod.dim() || matrix.cols() != dom.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                cod.dim(),
                dom.dim()
            )));
        }
        let d = dom.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = matrix.apply(dom.basis_bracket(i, j));
                let rhs = cod.bracket(&matrix.column(i), &matrix.column(j));
                let residual = sub_vec(&lhs, &rhs);
                if !is_zero_vec(&residual) {
                    return invalid(LieFailure::BracketNotPreserved { i, j, residual });
                }
            }
        }
        Ok(LieHom { dom, cod, matrix })
    }

    pub fn identity(l: &LieRef) -> Self {
        LieHom { dom: l.clone(), cod: l.clone(), matrix: Matrix::identity(l.dim()) }
    }

    pub fn zero(dom: &LieRef, cod: &LieRef) -> Self {
        LieHom { dom: dom.clone(), cod: cod.clone(), matrix: Matrix::zeros(cod.dim(), dom.dim()) }
    }

    pub fn dom(&self) -> &LieRef {
        &self.dom
    }

    pub fn cod(&self) -> &LieRef {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.matrix.apply(v)
    }

    /// Dimension of the image.
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// An action of `acting` on `target` by derivations: one matrix per basis
/// element of `acting`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAction {
    acting: LieRef,
    target: LieRef,
    rho: Vec<Matrix>,
}

fn scan_lie_action(acting: &LieAlgebra, target: &LieAlgebra, rho: &[Matrix]) -> Option<LieFailure> {
    let (da, dt) = (acting.dim(), target.dim());
    for i in 0..da {
        for j in i + 1..da {
            let lhs = Matrix::combination(acting.basis_bracket(i, j), rho, dt, dt);
            if lhs != rho[i].commutator(&rho[j]) {
                return Some(LieFailure::ActionNotHomomorphism { i, j });
            }
        }
    }
    for (a, r) in rho.iter().enumerate() {
        for i in 0..dt {
            for j in i + 1..dt {
                let lhs = r.apply(target.basis_bracket(i, j));
                let t1 = target.bracket(&r.column(i), &unit_vec(dt, j));
                let t2 = target.bracket(&unit_vec(dt, i), &r.column(j));
                let residual = sub_vec(&lhs, &add_vec(&t1, &t2));
                if !is_zero_vec(&residual) {
                    return Some(LieFailure::NotDerivation { a, i, j, residual });
                }
            }
        }
    }
    None
}

/// Checks that `rho` is a Lie homomorphism into `gl(target)` landing in the
/// derivations.
pub fn check_lie_action(acting: &LieAlgebra, target: &LieAlgebra, rho: &[Matrix]) -> Result<Diagnostic<LieFailure>> {
    if rho.len() != acting.dim() || rho.iter().any(|r| r.rows() != target.dim() || r.cols() != target.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "expected {} matrices of size {}x{}",
            acting.dim(),
            target.dim(),
            target.dim()
        )));
    }
    Ok(Diagnostic::from_option(scan_lie_action(acting, target, rho)))
}

impl LieAction {
    pub fn new(acting: LieRef, target: LieRef, rho: Vec<Matrix>) -> Result<Self> {
        match check_lie_action(&acting, &target, &rho)? {
            Diagnostic::Valid => Ok(LieAction { acting, target, rho }),
            Diagnostic::Invalid(f) => invalid(f),
        }
    }

    pub fn zero(acting: &LieRef, target: &LieRef) -> Self {
        let d = target.dim();
        LieAction {
            acting: acting.clone(),
            target: target.clone(),
            rho: (0..acting.dim()).map(|_| Matrix::zeros(d, d)).collect(),
        }
    }

    pub fn adjoint(l: &LieRef) -> Self {
        let d = l.dim();
        LieAction {
            acting: l.clone(),
            target: l.clone(),
            rho: (0..d).map(|i| l.ad(&unit_vec(d, i))).collect(),
        }
    }

    /// `ρ'(a) = ρ(f(a))`
    pub fn pullback(f: &LieHom, rho: &LieAction) -> Result<Self> {
        if f.cod() != rho.acting() {
            return Err(Error::GroupMismatch("pullback: codomain is not the acting algebra".into()));
        }
        let d = rho.target.dim();
        let mats = (0..f.dom().dim())
            .map(|i| Matrix::combination(&f.matrix().column(i), &rho.rho, d, d))
            .collect();
        Ok(LieAction { acting: f.dom().clone(), target: rho.target.clone(), rho: mats })
    }

    pub fn acting(&self) -> &LieRef {
        &self.acting
    }

    pub fn target(&self) -> &LieRef {
        &self.target
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// `ρ(a)` for an arbitrary vector `a`.
    pub fn operator(&self, a: &[Q]) -> Matrix {
        let d = self.target.dim();
        Matrix::combination(a, &self.rho, d, d)
    }

    pub fn act(&self, a: &[Q], x: &[Q]) -> Vec<Q> {
        self.operator(a).apply(x)
    }

    pub fn is_zero(&self) -> bool {
        self.rho.iter().all(Matrix::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCrossedModule {
    boundary: LieHom,
    action: LieAction,
}

/// Equivariance `∂(ρ(a)x) = [a, ∂x]`, then the Peiffer condition
/// `ρ(∂x)(x') = [x, x']`, on basis pairs in lexicographic order.
pub fn check_lie_xmod(boundary: &LieHom, action: &LieAction) -> Result<Diagnostic<LieFailure>> {
    let (x, a) = (boundary.dom(), boundary.cod());
    if action.acting() != a || action.target() != x {
        return Err(Error::GroupMismatch("the action must be of the boundary's codomain on its domain".into()));
    }
    let (dx, da) = (x.dim(), a.dim());
    for i in 0..da {
        for j in 0..dx {
            let lhs = boundary.apply(&action.matrices()[i].column(j));
            let rhs = a.bracket(&unit_vec(da, i), &boundary.matrix().column(j));
            let residual = sub_vec(&lhs, &rhs);
            if !is_zero_vec(&residual) {
                return Ok(Diagnostic::Invalid(LieFailure::Equivariance { a: i, x: j, residual }));
            }
        }
    }
    for i in 0..dx {
        let op = action.operator(&boundary.matrix().column(i));
        for j in 0..dx {
            let residual = sub_vec(&op.column(j), x.basis_bracket(i, j));
            if !is_zero_vec(&residual) {
                return Ok(Diagnostic::Invalid(LieFailure::Peiffer { x: i, x2: j, residual }));
            }
        }
    }
    Ok(Diagnostic::Valid)
}

impl LieCrossedModule {
    pub fn new(boundary: LieHom, action: LieAction) -> Result<Self> {
        match check_lie_xmod(&boundary, &action)? {
            Diagnostic::Valid => Ok(LieCrossedModule { boundary, action }),
            Diagnostic::Invalid(f) => invalid(f),
        }
    }

    pub fn identity(l: &LieRef) -> Self {
        LieCrossedModule { boundary: LieHom::identity(l), action: LieAction::adjoint(l) }
    }

    /// Inclusion of the ideal spanned by the given basis vectors of `l`, with
    /// the adjoint action restricted to it. The ideal is given the basis
    /// `basis` itself.
    pub fn ideal_inclusion(l: &LieRef, basis: &[Vec<Q>]) -> Result<Self> {
        let d = l.dim();
        let k = basis.len();
        let mut span = Subspace::new(d);
        for b in basis {
            if !span.insert(b) {
                return Err(Error::DimensionMismatch("ideal basis is linearly dependent".into()));
            }
        }
        let inc = Matrix::from_columns(d, basis);
        // coordinates of a vector of the ideal in `basis`
        let coords = |v: &[Q]| -> Result<Vec<Q>> { solve_in_basis(&inc, v) };
        let mut structure = zero_vec(k * k * k);
        for i in 0..k {
            for j in 0..k {
                let c = coords(&l.bracket(&basis[i], &basis[j]))?;
                for (t, v) in c.into_iter().enumerate() {
                    structure[(i * k + j) * k + t] = v;
                }
            }
        }
        let ideal = Arc::new(LieAlgebra::new(k, structure)?);
        let mut rho = Vec::with_capacity(d);
        for a in 0..d {
            let cols: Vec<Vec<Q>> = basis
                .iter()
                .map(|b| coords(&l.bracket(&unit_vec(d, a), b)))
                .collect::<Result<_>>()?;
            rho.push(Matrix::from_columns(k, &cols));
        }
        let boundary = LieHom::new(ideal.clone(), l.clone(), inc)?;
        let action = LieAction::new(l.clone(), ideal, rho)?;
        LieCrossedModule::new(boundary, action)
    }

    pub fn boundary(&self) -> &LieHom {
        &self.boundary
    }

    pub fn action(&self) -> &LieAction {
        &self.action
    }
}

/// Solves `cols · c = v` for a matrix with independent columns.
fn solve_in_basis(cols: &Matrix, v: &[Q]) -> Result<Vec<Q>> {
    let (n, k) = (cols.rows(), cols.cols());
    // augment [cols | v] and eliminate
    let mut rows: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut r: Vec<Q> = (0..k).map(|j| cols.get(i, j).clone()).collect();
            r.push(v[i].clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..k {
        let Some(p) = (pivot_row..n).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][c].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != pivot_row && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                let prow = rows[pivot_row].clone();
                for (x, y) in rows[r].iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[k].is_zero()) {
        return Err(Error::DimensionMismatch("vector is not in the span".into()));
    }
    let mut out = zero_vec(k);
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = rows[r][k].clone();
    }
    Ok(out)
}

/// `ρ_NM: N -> Der(M)` and `ρ_MN: M -> Der(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieMutualActions {
    m: LieRef,
    n: LieRef,
    rho_nm: LieAction,
    rho_mn: LieAction,
}

impl LieMutualActions {
    pub fn new(m: LieRef, n: LieRef, rho_nm: LieAction, rho_mn: LieAction) -> Result<Self> {
        if rho_nm.acting() != &n || rho_nm.target() != &m {
            return Err(Error::GroupMismatch("rho_nm must be an action of N on M".into()));
        }
        if rho_mn.acting() != &m || rho_mn.target() != &n {
            return Err(Error::GroupMismatch("rho_mn must be an action of M on N".into()));
        }
        Ok(LieMutualActions { m, n, rho_nm, rho_mn })
    }

    pub fn zero(m: &LieRef, n: &LieRef) -> Self {
        LieMutualActions {
            m: m.clone(),
            n: n.clone(),
            rho_nm: LieAction::zero(n, m),
            rho_mn: LieAction::zero(m, n),
        }
    }

    pub fn m(&self) -> &LieRef {
        &self.m
    }

    pub fn n(&self) -> &LieRef {
        &self.n
    }

    pub fn rho_nm(&self) -> &LieAction {
        &self.rho_nm
    }

    pub fn rho_mn(&self) -> &LieAction {
        &self.rho_mn
    }

    pub fn swapped(&self) -> Self {
        LieMutualActions {
            m: self.n.clone(),
            n: self.m.clone(),
            rho_nm: self.rho_mn.clone(),
            rho_mn: self.rho_nm.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieCompatWitness {
    pub equation: u8,
    /// Basis indices: `(m, n, m')` for C1, `(m, n, n')` for C2.
    pub m: usize,
    pub n: usize,
    pub target: usize,
    /// `lhs - rhs`, as rational strings.
    pub residual: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieCompatVerdict {
    pub compatible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LieCompatWitness>,
}

/// C1 residual at basis `(m_i, n_j, m_k)`.
fn c1_residual(mutual: &LieMutualActions, i: usize, j: usize, k: usize) -> Vec<Q> {
    let (m, n) = (&mutual.m, &mutual.n);
    let (dm, dn) = (m.dim(), n.dim());
    let mi = unit_vec(dm, i);
    let nj = unit_vec(dn, j);
    let mk = unit_vec(dm, k);
    let mn = mutual.rho_mn.act(&mi, &nj);
    let lhs = mutual.rho_nm.act(&mn, &mk);
    let t1 = m.bracket(&mi, &mutual.rho_nm.act(&nj, &mk));
    let t2 = mutual.rho_nm.act(&nj, &m.bracket(&mi, &mk));
    sub_vec(&lhs, &sub_vec(&t1, &t2))
}

/// Exhaustive exact check of C1 then C2 on basis triples.
pub fn lie_compatible(mutual: &LieMutualActions) -> LieCompatVerdict {
    let swapped = mutual.swapped();
    for (equation, mu) in [(1u8, mutual), (2u8, &swapped)] {
        let (dm, dn) = (mu.m.dim(), mu.n.dim());
        for i in 0..dm {
            for j in 0..dn {
                for k in 0..dm {
                    let r = c1_residual(mu, i, j, k);
                    if !is_zero_vec(&r) {
                        let (m, n) = if equation == 1 { (i, j) } else { (j, i) };
                        return LieCompatVerdict {
                            compatible: false,
                            witness: Some(LieCompatWitness {
                                equation,
                                m,
                                n,
                                target: k,
                                residual: r.iter().map(ToString::to_string).collect(),
                            }),
                        };
                    }
                }
            }
        }
    }
    LieCompatVerdict { compatible: true, witness: None }
}

/// The semidirect sum `M ⋊ N` on `M ⊕ N` (coordinates of `M` first) with
/// `[(m,n),(m',n')] = ([m,m'] + ρ(n)m' - ρ(n')m, [n,n'])`.
#[derive(Debug, Clone)]
pub struct LieSemidirect {
    pub algebra: LieRef,
    pub inc_m: LieHom,
    pub inc_n: LieHom,
}

pub fn lie_semidirect(rho: &LieAction) -> Result<LieSemidirect> {
    let m = rho.target();
    let n = rho.acting();
    let (dm, dn) = (m.dim(), n.dim());
    let d = dm + dn;
    let mut c = zero_vec(d * d * d);
    let mut set = |i: usize, j: usize, v: &[Q], offset: usize| {
        for (k, x) in v.iter().enumerate() {
            c[(i * d + j) * d + offset + k] = x.clone();
        }
    };
    for i in 0..dm {
        for j in 0..dm {
            set(i, j, m.basis_bracket(i, j), 0);
        }
    }
    for a in 0..dn {
        for j in 0..dm {
            let v = rho.matrices()[a].column(j);
            set(dm + a, j, &v, 0);
            let neg: Vec<Q> = v.iter().map(|x| -x.clone()).collect();
            set(j, dm + a, &neg, 0);
        }
        for b in 0..dn {
            set(dm + a, dm + b, n.basis_bracket(a, b), dm);
        }
    }
    let algebra = Arc::new(LieAlgebra::new(d, c)?);
    let inc_m = LieHom::new(
        m.clone(),
        algebra.clone(),
        Matrix::from_columns(d, &(0..dm).map(|i| unit_vec(d, i)).collect::<Vec<_>>()),
    )?;
    let inc_n = LieHom::new(
        n.clone(),
        algebra.clone(),
        Matrix::from_columns(d, &(0..dn).map(|i| unit_vec(d, dm + i)).collect::<Vec<_>>()),
    )?;
    Ok(LieSemidirect { algebra, inc_m, inc_n })
}

/// `ρ_MN(m) = ρ_{L,N}(μ m)` and `ρ_NM(n) = ρ_{L,M}(ν n)`.
pub fn lie_induced_actions(xm_m: &LieCrossedModule, xm_n: &LieCrossedModule) -> Result<LieMutualActions> {
    if xm_m.boundary.cod() != xm_n.boundary.cod() {
        return Err(Error::GroupMismatch("Lie crossed modules are not coterminal".into()));
    }
    let rho_mn = LieAction::pullback(&xm_m.boundary, &xm_n.action)?;
    let rho_nm = LieAction::pullback(&xm_n.boundary, &xm_m.action)?;
    for r in [&rho_mn, &rho_nm] {
        if let Diagnostic::Invalid(f) = check_lie_action(r.acting(), r.target(), r.matrices())? {
            return invalid(f);
        }
    }
    LieMutualActions::new(
        xm_m.boundary.dom().clone(),
        xm_n.boundary.dom().clone(),
        rho_nm,
        rho_mn,
    )
}

/// Named fixtures for tests, the CLI and the acceptance suite.
pub mod fixtures {
    use super::*;
    use linalg::q;

    /// `M = N = 1-dim abelian`, each acting on the other by the identity
    /// scalar. Violates C1: `m·n·m' = 0` would be required.
    pub fn identity_scalar_pair() -> LieMutualActions {
        let one = Arc::new(LieAlgebra::abelian(1));
        let id = || Matrix::identity(1);
        let rho_nm = LieAction::new(one.clone(), one.clone(), vec![id()]).expect("scalar action");
        let rho_mn = LieAction::new(one.clone(), one.clone(), vec![id()]).expect("scalar action");
        LieMutualActions::new(one.clone(), one, rho_nm, rho_mn).expect("consistent")
    }

    /// Coterminal Lie crossed-module pairs.
    pub fn coterminal_pairs() -> Vec<(String, LieCrossedModule, LieCrossedModule)> {
        let l2 = Arc::new(LieAlgebra::two_dim_solvable());
        let h3 = Arc::new(LieAlgebra::heisenberg());
        let sl2 = Arc::new(LieAlgebra::sl2());
        let ab2 = Arc::new(LieAlgebra::abelian(2));
        let y = LieCrossedModule::ideal_inclusion(&l2, &[vec![q(0), q(1)]]).expect("ideal");
        let z = LieCrossedModule::ideal_inclusion(&h3, &[vec![q(0), q(0), q(1)]]).expect("ideal");
        let yz = LieCrossedModule::ideal_inclusion(&h3, &[vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]])
            .expect("ideal");
        // 1-dim abelian module over L2 with x acting by 1, zero boundary
        let line = Arc::new(LieAlgebra::abelian(1));
        let scalar = LieAction::new(l2.clone(), line.clone(), vec![Matrix::identity(1), Matrix::zeros(1, 1)])
            .expect("x acts by 1");
        let line_mod = LieCrossedModule::new(LieHom::zero(&line, &l2), scalar).expect("crossed module");
        vec![
            ("id/id over L2".into(), LieCrossedModule::identity(&l2), LieCrossedModule::identity(&l2)),
            ("id/id over sl2".into(), LieCrossedModule::identity(&sl2), LieCrossedModule::identity(&sl2)),
            ("id/id over h3".into(), LieCrossedModule::identity(&h3), LieCrossedModule::identity(&h3)),
            ("id/id over ab2".into(), LieCrossedModule::identity(&ab2), LieCrossedModule::identity(&ab2)),
            ("<y> < L2 / id L2".into(), y.clone(), LieCrossedModule::identity(&l2)),
            ("id L2 / <y> < L2".into(), LieCrossedModule::identity(&l2), y.clone()),
            ("<y> < L2 / <y> < L2".into(), y.clone(), y.clone()),
            ("<z> < h3 / id h3".into(), z.clone(), LieCrossedModule::identity(&h3)),
            ("<y,z> < h3 / <z> < h3".into(), yz, z),
            ("line / id L2".into(), line_mod.clone(), LieCrossedModule::identity(&l2)),
            ("line / <y> < L2".into(), line_mod, y),
        ]
    }
}
