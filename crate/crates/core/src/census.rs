//! Enumeration of every pair of mutual actions over a catalog of groups,
//! with the compatibility verdict and the round-trip checks for each.
//!
//! Actions of `A` on `X` are enumerated as homomorphisms `A -> Aut(X)`, which
//! yields exactly the valid action tables.

use rayon::prelude::*;
use serde::Serialize;

use crate::action::DEFAULT_SEMIDIRECT_CAP;
use crate::compat::{check_compatible, MutualActions};
use crate::fixtures::actions_of;
use crate::group::{GroupRef, DEFAULT_SEARCH_CAP};
use crate::peiffer::{
    induced_actions, peiffer_product, peiffer_xmods, strong_relation_check, symmetric_isomorphism,
    DEFAULT_STRONG_WORD_BOUND,
};
use crate::xmod::{check_xmod, induced_mutual_actions};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CensusConfig {
    /// Catalog groups larger than this are skipped.
    pub max_order: usize,
    pub semidirect_cap: usize,
    pub strong_word_bound: usize,
    pub iso_cap: usize,
    /// Worker threads; `None` lets rayon decide.
    pub threads: Option<usize>,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            max_order: 12,
            semidirect_cap: DEFAULT_SEMIDIRECT_CAP,
            strong_word_bound: DEFAULT_STRONG_WORD_BOUND,
            iso_cap: DEFAULT_SEARCH_CAP,
            threads: None,
        }
    }
}

/// One pair of mutual actions, located in the catalog.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub m_index: usize,
    pub n_index: usize,
    /// Position among the actions of `N` on `M`.
    pub xi_nm_index: usize,
    /// Position among the actions of `M` on `N`.
    pub xi_mn_index: usize,
    pub mutual: MutualActions,
}

fn group_label(g: &GroupRef, idx: usize) -> String {
    g.name().map(str::to_string).unwrap_or_else(|| format!("G{idx}"))
}

/// Every ordered pair `(M, N)` of catalog groups (repetition allowed) with
/// both orders at most `max_order`, and every pair of actions between them.
pub fn mutual_action_family(catalog: &[GroupRef], config: &CensusConfig) -> Result<Vec<FamilyMember>> {
    let mut out = Vec::new();
    let eligible: Vec<usize> =
        (0..catalog.len()).filter(|&i| catalog[i].order() <= config.max_order).collect();
    for &i in &eligible {
        for &j in &eligible {
            let (m, n) = (&catalog[i], &catalog[j]);
            let size = m.order() * n.order();
            if size > config.semidirect_cap {
                return Err(Error::CapExceeded { what: "semidirect product", size, cap: config.semidirect_cap });
            }
            let on_m = actions_of(n, m);
            let on_n = actions_of(m, n);
            for (a, xi_nm) in on_m.iter().enumerate() {
                for (b, xi_mn) in on_n.iter().enumerate() {
                    out.push(FamilyMember {
                        m_index: i,
                        n_index: j,
                        xi_nm_index: a,
                        xi_mn_index: b,
                        mutual: MutualActions::new(m.clone(), n.clone(), xi_nm.clone(), xi_mn.clone())?,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Field order is alphabetical so serialised reports are stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub compatible: bool,
    /// `compatible` agrees with `well_defined`.
    pub definition_equivalence: bool,
    /// Compatible rows only: the Peiffer crossed modules are valid and
    /// induce the original actions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forward_round_trip: Option<bool>,
    pub m: String,
    pub n: String,
    pub peiffer_order: usize,
    /// Compatible rows only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_check: Option<bool>,
    /// The product built through `N ⋊ M` is isomorphic.
    pub symmetric_iso: bool,
    /// The induced actions of the Peiffer product exist.
    pub well_defined: bool,
    pub xi_mn: usize,
    pub xi_nm: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub catalog: Vec<String>,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn all_round_trips_hold(&self) -> bool {
        self.rows.iter().all(|r| {
            r.definition_equivalence
                && r.symmetric_iso
                && r.forward_round_trip.unwrap_or(true)
                && r.strong_check.unwrap_or(true)
        })
    }
}

pub fn census_row(member: &FamilyMember, catalog: &[GroupRef], config: &CensusConfig) -> Result<CensusRow> {
    let mutual = &member.mutual;
    let compatible = check_compatible(mutual).compatible;
    let pp = peiffer_product(mutual, config.semidirect_cap)?;
    let well_defined = induced_actions(&pp).is_ok();
    let forward_round_trip = compatible.then(|| match peiffer_xmods(&pp) {
        Ok((xm, xn)) => {
            check_xmod(xm.boundary(), xm.action()).is_ok_and(|d| d.is_valid())
                && check_xmod(xn.boundary(), xn.action()).is_ok_and(|d| d.is_valid())
                && induced_mutual_actions(&xm, &xn).is_ok_and(|back| &back == mutual)
        }
        Err(_) => false,
    });
    let strong_check = compatible.then(|| strong_relation_check(&pp, config.strong_word_bound).passed);
    let symmetric_iso = symmetric_isomorphism(mutual, config.semidirect_cap, config.iso_cap)?.is_some();
    Ok(CensusRow {
        compatible,
        definition_equivalence: compatible == well_defined,
        forward_round_trip,
        m: group_label(&catalog[member.m_index], member.m_index),
        n: group_label(&catalog[member.n_index], member.n_index),
        peiffer_order: pp.product().order(),
        strong_check,
        symmetric_iso,
        well_defined,
        xi_mn: member.xi_mn_index,
        xi_nm: member.xi_nm_index,
    })
}

/// Runs the census. Rows are independent; they are computed in parallel and
/// collected in family order, so the report does not depend on the thread
/// count.
pub fn enumerate(catalog: &[GroupRef], config: &CensusConfig) -> Result<CensusReport> {
    let family = mutual_action_family(catalog, config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let rows: Result<Vec<CensusRow>> =
        pool.install(|| family.par_iter().map(|m| census_row(m, catalog, config)).collect());
    Ok(CensusReport {
        catalog: catalog.iter().enumerate().map(|(i, g)| group_label(g, i)).collect(),
        rows: rows?,
    })
}
