use thiserror::Error;

use crate::action::ActionFailure;
use crate::group::GroupAxiomFailure;
use crate::lie::LieFailure;
use crate::peiffer::InducedActionFailure;
use crate::xmod::XmodFailure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    OutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not a group: {0}")]
    InvalidGroup(GroupAxiomFailure),
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("subset is not a normal subgroup")]
    NotNormal,
    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("map is not a homomorphism: f({x}*{y}) != f({x})*f({y})")]
    NotHomomorphism { x: usize, y: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("not an action: {0}")]
    InvalidAction(ActionFailure),
    #[error("word is not in the flat subgroup (acting fold is {0})")]
    NotInFlat(usize),
    #[error("not a point: p(s({0})) != {0}")]
    NotAPoint(usize),
    #[error("induced actions are not well-defined: {0}")]
    InducedActionsUndefined(InducedActionFailure),
    #[error("not a crossed module: {0}")]
    InvalidCrossedModule(XmodFailure),
    #[error("universal map: {0}")]
    UniversalMap(String),
    #[error("invalid Lie structure: {0}")]
    InvalidLie(LieFailure),
    #[error("parse error: {0}")]
    Parse(String),
}
