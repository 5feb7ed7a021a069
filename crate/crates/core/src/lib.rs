//! Compatible actions, Peiffer products and crossed modules, made executable
//! for finite groups given by multiplication tables and for finite-dimensional
//! Lie algebras over the rationals.
//!
//! The group side is organised bottom-up:
//!
//! - [`group`]: tables, subgroups, normal closures, quotients, homomorphisms;
//! - [`freeword`]: reduced words in a free product `M + N` and the flat and
//!   cosmash subgroups living inside it;
//! - [`action`]: group actions as full tables, semidirect products and points;
//! - [`compat`]: the coproduct action of `M + N` and the compatibility test;
//! - [`peiffer`]: the Peiffer product as a quotient of `M ⋊ N`;
//! - [`xmod`]: crossed modules and the mutual actions a coterminal pair induces.
//!
//! [`lie`] mirrors the same constructions for Lie algebras given by structure
//! constants, [`census`] enumerates all mutual actions over a catalog of small
//! groups, and [`io`] holds the JSON file formats.

pub mod action;
pub mod census;
pub mod compat;
pub mod error;
pub mod fixtures;
pub mod freeword;
pub mod group;
pub mod io;
pub mod lie;
pub mod peiffer;
pub mod xmod;

pub use error::{Error, Result};

/// Outcome of an axiom check: either everything holds, or the first failure
/// found in a deterministic scan, with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic<F> {
    Valid,
    Invalid(F),
}

impl<F> Diagnostic<F> {
    pub fn is_valid(&self) -> bool {
        matches!(self, Diagnostic::Valid)
    }

    pub fn failure(&self) -> Option<&F> {
        match self {
            Diagnostic::Valid => None,
            Diagnostic::Invalid(f) => Some(f),
        }
    }

    pub(crate) fn from_option(failure: Option<F>) -> Self {
        match failure {
            None => Diagnostic::Valid,
            Some(f) => Diagnostic::Invalid(f),
        }
    }
}
