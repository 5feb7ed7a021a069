//! JSON file formats.
//!
//! Groups are `{"name"?, "order", "table"}`. Wherever a group (or Lie
//! algebra) is expected inside another file it may be given inline or as a
//! path string, resolved relative to the directory of the referring file.
//! Rationals are strings such as `"3"` or `"-2/5"`. Every object is
//! validated on load, and output objects list their fields alphabetically.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::action::Action;
use crate::group::{FiniteGroup, GroupRef, Hom};
use crate::lie::{structure_from_brackets, LieAction, LieAlgebra, LieCrossedModule, LieHom, LieRef, Matrix, Q};
use crate::peiffer::PeifferProduct;
use crate::xmod::CrossedModule;
use crate::{Error, Result};

fn parse_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{}: {e}", path.display()))
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| parse_err(path, e))?;
    serde_json::from_str(&text).map_err(|e| parse_err(path, e))
}

pub fn to_pretty(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialise")
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn of(g: &FiniteGroup) -> Self {
        GroupFile { name: g.name().map(str::to_string), order: g.order(), table: g.rows() }
    }

    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::Parse(format!(
                "order is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        let g = FiniteGroup::from_table(&self.table)?;
        Ok(match self.name {
            Some(n) => g.with_name(n),
            None => g,
        })
    }
}

/// A group given inline or by path.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Path(String),
    Inline(GroupFile),
}

impl GroupSpec {
    pub fn resolve(self, dir: &Path) -> Result<GroupRef> {
        match self {
            GroupSpec::Path(p) => load_group(&dir.join(p)),
            GroupSpec::Inline(g) => Ok(Arc::new(g.into_group()?)),
        }
    }
}

pub fn load_group(path: &Path) -> Result<GroupRef> {
    let file: GroupFile = read_json(path)?;
    file.into_group().map(Arc::new).map_err(|e| match e {
        Error::Parse(msg) => parse_err(path, msg),
        other => other,
    })
}

pub fn save_group(path: &Path, g: &FiniteGroup) -> Result<()> {
    fs::write(path, to_pretty(&GroupFile::of(g))).map_err(|e| parse_err(path, e))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acting: Option<GroupSpec>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<GroupSpec>,
}

/// A group named in a file must agree with one supplied by the caller.
fn pick_group(spec: Option<GroupSpec>, given: Option<&GroupRef>, dir: &Path, role: &str) -> Result<GroupRef> {
    match (spec.map(|s| s.resolve(dir)).transpose()?, given) {
        (Some(a), Some(b)) if a != *b => {
            Err(Error::GroupMismatch(format!("the {role} group in the file differs from the one supplied")))
        }
        (_, Some(b)) => Ok(b.clone()),
        (Some(a), None) => Ok(a),
        (None, None) => Err(Error::Parse(format!("no {role} group given"))),
    }
}

impl ActionFile {
    pub fn of(a: &Action) -> Self {
        ActionFile {
            acting: Some(GroupSpec::Inline(GroupFile::of(a.acting()))),
            table: a.rows(),
            target: Some(GroupSpec::Inline(GroupFile::of(a.target()))),
        }
    }

    /// Resolves the groups without checking the table.
    pub fn into_parts(
        self,
        dir: &Path,
        acting: Option<&GroupRef>,
        target: Option<&GroupRef>,
    ) -> Result<(GroupRef, GroupRef, Vec<Vec<usize>>)> {
        let acting = pick_group(self.acting, acting, dir, "acting")?;
        let target = pick_group(self.target, target, dir, "target")?;
        Ok((acting, target, self.table))
    }

    pub fn into_action(self, dir: &Path, acting: Option<&GroupRef>, target: Option<&GroupRef>) -> Result<Action> {
        let (acting, target, table) = self.into_parts(dir, acting, target)?;
        Action::new(acting, target, &table)
    }
}

/// Loads an action; groups passed by the caller fill in (and must agree
/// with) the groups named in the file.
pub fn load_action(path: &Path, acting: Option<&GroupRef>, target: Option<&GroupRef>) -> Result<Action> {
    let file: ActionFile = read_json(path)?;
    file.into_action(&base_dir(path), acting, target)
}

pub fn load_action_parts(
    path: &Path,
    acting: Option<&GroupRef>,
    target: Option<&GroupRef>,
) -> Result<(GroupRef, GroupRef, Vec<Vec<usize>>)> {
    let file: ActionFile = read_json(path)?;
    file.into_parts(&base_dir(path), acting, target)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionSpec {
    Path(String),
    Inline(ActionFile),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct XmodFile {
    pub action: ActionSpec,
    pub boundary: Vec<usize>,
    pub cod: GroupSpec,
    pub dom: GroupSpec,
}

impl XmodFile {
    pub fn of(xm: &CrossedModule) -> Self {
        let mut action = ActionFile::of(xm.action());
        action.acting = None;
        action.target = None;
        XmodFile {
            action: ActionSpec::Inline(action),
            boundary: xm.boundary().map().to_vec(),
            cod: GroupSpec::Inline(GroupFile::of(xm.boundary().cod())),
            dom: GroupSpec::Inline(GroupFile::of(xm.boundary().dom())),
        }
    }
}

/// Boundary and action of a crossed-module file, each valid on its own.
pub fn load_xmod_parts(path: &Path) -> Result<(Hom, Action)> {
    let file: XmodFile = read_json(path)?;
    let dir = base_dir(path);
    let dom = file.dom.resolve(&dir)?;
    let cod = file.cod.resolve(&dir)?;
    let boundary = Hom::new(dom.clone(), cod.clone(), file.boundary)?;
    let action = match file.action {
        ActionSpec::Path(p) => load_action(&dir.join(p), Some(&cod), Some(&dom))?,
        ActionSpec::Inline(a) => a.into_action(&dir, Some(&cod), Some(&dom))?,
    };
    Ok((boundary, action))
}

pub fn load_xmod(path: &Path) -> Result<CrossedModule> {
    let (boundary, action) = load_xmod_parts(path)?;
    CrossedModule::new(boundary, action)
}

pub fn parse_rational(s: &str) -> Result<Q> {
    s.trim().parse::<Q>().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

fn parse_vec(v: &[String]) -> Result<Vec<Q>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn show_vec(v: &[Q]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<Matrix> {
    let rows: Vec<Vec<Q>> = rows.iter().map(|r| parse_vec(r)).collect::<Result<_>>()?;
    Matrix::from_rows(&rows).ok_or_else(|| Error::Parse("matrix rows have different lengths".into()))
}

fn show_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| show_vec(r)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub coeffs: Vec<String>,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieFile {
    pub brackets: Vec<BracketEntry>,
    pub dim: usize,
}

impl LieFile {
    /// Lists `[e_i, e_j]` for `i < j` when nonzero.
    pub fn of(l: &LieAlgebra) -> Self {
        let d = l.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let b = l.basis_bracket(i, j);
                if b.iter().any(|x| *x != Q::default()) {
                    brackets.push(BracketEntry { coeffs: show_vec(b), i, j });
                }
            }
        }
        LieFile { brackets, dim: d }
    }

    fn parsed(&self) -> Result<Vec<(usize, usize, Vec<Q>)>> {
        self.brackets.iter().map(|b| Ok((b.i, b.j, parse_vec(&b.coeffs)?))).collect()
    }

    /// Structure constants, without checking the Lie axioms.
    pub fn structure(&self) -> Result<Vec<Q>> {
        structure_from_brackets(self.dim, &self.parsed()?)
    }

    pub fn into_lie(self) -> Result<LieAlgebra> {
        LieAlgebra::from_brackets(self.dim, &self.parsed()?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LieSpec {
    Path(String),
    Inline(LieFile),
}

impl LieSpec {
    pub fn resolve(self, dir: &Path) -> Result<LieRef> {
        match self {
            LieSpec::Path(p) => load_lie(&dir.join(p)),
            LieSpec::Inline(l) => Ok(Arc::new(l.into_lie()?)),
        }
    }
}

pub fn load_lie(path: &Path) -> Result<LieRef> {
    let file: LieFile = read_json(path)?;
    file.into_lie().map(Arc::new)
}

/// `matrices[a]` is `ρ(e_a)`, listed by rows.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LieActionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acting: Option<LieSpec>,
    pub matrices: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<LieSpec>,
}

fn pick_lie(spec: Option<LieSpec>, given: Option<&LieRef>, dir: &Path, role: &str) -> Result<LieRef> {
    match (spec.map(|s| s.resolve(dir)).transpose()?, given) {
        (Some(a), Some(b)) if a != *b => {
            Err(Error::GroupMismatch(format!("the {role} algebra in the file differs from the one supplied")))
        }
        (_, Some(b)) => Ok(b.clone()),
        (Some(a), None) => Ok(a),
        (None, None) => Err(Error::Parse(format!("no {role} algebra given"))),
    }
}

impl LieActionFile {
    pub fn of(rho: &LieAction) -> Self {
        LieActionFile {
            acting: Some(LieSpec::Inline(LieFile::of(rho.acting()))),
            matrices: rho.matrices().iter().map(show_matrix).collect(),
            target: Some(LieSpec::Inline(LieFile::of(rho.target()))),
        }
    }

    /// Resolves the algebras without checking the matrices.
    pub fn into_parts(
        self,
        dir: &Path,
        acting: Option<&LieRef>,
        target: Option<&LieRef>,
    ) -> Result<(LieRef, LieRef, Vec<Matrix>)> {
        let acting = pick_lie(self.acting, acting, dir, "acting")?;
        let target = pick_lie(self.target, target, dir, "target")?;
        let rho = self.matrices.iter().map(|m| parse_matrix(m)).collect::<Result<Vec<_>>>()?;
        Ok((acting, target, rho))
    }

    pub fn into_action(self, dir: &Path, acting: Option<&LieRef>, target: Option<&LieRef>) -> Result<LieAction> {
        let (acting, target, rho) = self.into_parts(dir, acting, target)?;
        LieAction::new(acting, target, rho)
    }
}

pub fn load_lie_action(path: &Path, acting: Option<&LieRef>, target: Option<&LieRef>) -> Result<LieAction> {
    let file: LieActionFile = read_json(path)?;
    file.into_action(&base_dir(path), acting, target)
}

pub fn load_lie_action_parts(
    path: &Path,
    acting: Option<&LieRef>,
    target: Option<&LieRef>,
) -> Result<(LieRef, LieRef, Vec<Matrix>)> {
    let file: LieActionFile = read_json(path)?;
    file.into_parts(&base_dir(path), acting, target)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LieActionSpec {
    Path(String),
    Inline(LieActionFile),
}

/// `boundary` is the `dim(cod) × dim(dom)` matrix, by rows.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LieXmodFile {
    pub action: LieActionSpec,
    pub boundary: Vec<Vec<String>>,
    pub cod: LieSpec,
    pub dom: LieSpec,
}

impl LieXmodFile {
    pub fn of(xm: &LieCrossedModule) -> Self {
        let mut action = LieActionFile::of(xm.action());
        action.acting = None;
        action.target = None;
        LieXmodFile {
            action: LieActionSpec::Inline(action),
            boundary: show_matrix(xm.boundary().matrix()),
            cod: LieSpec::Inline(LieFile::of(xm.boundary().cod())),
            dom: LieSpec::Inline(LieFile::of(xm.boundary().dom())),
        }
    }
}

pub fn load_lie_xmod_parts(path: &Path) -> Result<(LieHom, LieAction)> {
    let file: LieXmodFile = read_json(path)?;
    let dir = base_dir(path);
    let dom = file.dom.resolve(&dir)?;
    let cod = file.cod.resolve(&dir)?;
    let matrix = if file.boundary.is_empty() {
        Matrix::zeros(cod.dim(), dom.dim())
    } else {
        parse_matrix(&file.boundary)?
    };
    let boundary = LieHom::new(dom.clone(), cod.clone(), matrix)?;
    let action = match file.action {
        LieActionSpec::Path(p) => load_lie_action(&dir.join(p), Some(&cod), Some(&dom))?,
        LieActionSpec::Inline(a) => a.into_action(&dir, Some(&cod), Some(&dom))?,
    };
    Ok((boundary, action))
}

pub fn load_lie_xmod(path: &Path) -> Result<LieCrossedModule> {
    let (boundary, action) = load_lie_xmod_parts(path)?;
    LieCrossedModule::new(boundary, action)
}

pub fn matrix_json(m: &Matrix) -> Value {
    json!(show_matrix(m))
}

pub fn lie_json(l: &LieAlgebra) -> Value {
    serde_json::to_value(LieFile::of(l)).expect("serialisable")
}

/// `{"actions"?, "compatible", "lM", "lN", "order", "table"}`; the actions
/// are the tables of `M ⋈ N` on `M` and on `N`.
pub fn peiffer_json(pp: &PeifferProduct) -> Value {
    let mut out = serde_json::Map::new();
    if let Some((on_m, on_n)) = pp.actions() {
        out.insert("actions".into(), json!({ "on_m": on_m.rows(), "on_n": on_n.rows() }));
    }
    out.insert("compatible".into(), json!(pp.compatible()));
    out.insert("lM".into(), json!(pp.l_m().map()));
    out.insert("lN".into(), json!(pp.l_n().map()));
    out.insert("order".into(), json!(pp.product().order()));
    out.insert("table".into(), json!(pp.product().rows()));
    Value::Object(out)
}
