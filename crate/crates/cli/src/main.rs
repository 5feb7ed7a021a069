//! `peiffer`: load groups, actions and crossed modules (or their Lie algebra
//! counterparts) from JSON, run one operation and print a JSON report.
//!
//! Exit status: 0 when the operation succeeds and the property holds, 1 when
//! the property is false (the report carries a witness), 2 on invalid input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use peiffer_core::action::{check_action, semidirect};
use peiffer_core::census::{enumerate, CensusConfig};
use peiffer_core::compat::{check_compatible, MutualActions};
use peiffer_core::freeword::{parse_letters, Side};
use peiffer_core::group::{validate_group, GroupRef, DEFAULT_SEARCH_CAP};
use peiffer_core::io::{self, GroupFile, LieFile, LieXmodFile, XmodFile};
use peiffer_core::lie::{
    check_lie_action, check_lie_xmod, lie_compatible, lie_induced_actions, lie_peiffer, lie_peiffer_actions,
    lie_peiffer_xmods, lie_semidirect, lie_universal_map, validate_lie, LieMutualActions, Matrix,
};
use peiffer_core::peiffer::{peiffer_product, peiffer_xmods, strong_relation_check, universal_map};
use peiffer_core::xmod::{check_xmod, induced_mutual_actions};
use peiffer_core::{fixtures, Diagnostic, Error};

#[derive(Parser)]
#[command(name = "peiffer", version, about = "Compatible actions, Peiffer products and crossed modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Catalog groups larger than this are skipped by `enumerate`.
    #[arg(long, global = true, default_value_t = 12)]
    max_order: usize,
    /// Largest semidirect product that will be built.
    #[arg(long, global = true, default_value_t = 4096)]
    semidirect_cap: usize,
    /// Longest word tried by the strong Peiffer check.
    #[arg(long, global = true, default_value_t = 2)]
    strong_word_bound: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MutualArgs {
    m: PathBuf,
    n: PathBuf,
    /// action of N on M
    xi_nm: PathBuf,
    /// action of M on N
    xi_mn: PathBuf,
}

#[derive(Args)]
struct ActionArgs {
    acting: PathBuf,
    target: PathBuf,
    action: PathBuf,
}

#[derive(Args)]
struct PairArgs {
    xm_m: PathBuf,
    xm_n: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Check the group axioms of a group file.
    Validate { group: PathBuf },
    /// Check the action axioms of an action table.
    CheckAction(ActionArgs),
    /// Decide whether two mutual actions are compatible.
    CheckCompat(MutualArgs),
    /// Build the semidirect product of an action.
    Semidirect(ActionArgs),
    /// Build the Peiffer product, with its actions when compatible.
    Peiffer(MutualArgs),
    /// Compare coproduct-action values with conjugation in the Peiffer product.
    StrongCheck(MutualArgs),
    /// Emit the two crossed modules over the Peiffer product.
    PeifferXmods(MutualArgs),
    /// The comparison map from the Peiffer product to the common codomain.
    UniversalMap(PairArgs),
    /// Check the crossed-module conditions.
    XmodCheck { xmod: PathBuf },
    /// Mutual actions induced by two coterminal crossed modules.
    InduceActions(PairArgs),
    /// Census of all mutual actions over a catalog (built-in if no files).
    Enumerate { groups: Vec<PathBuf> },
    /// Evaluate the action of a free-product word, e.g. "M:1 N:2 M:1".
    CoproductEval {
        #[command(flatten)]
        mutual: MutualArgs,
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "M")]
        side: Side,
        #[arg(long)]
        x: usize,
    },
    /// Check antisymmetry and Jacobi for a Lie algebra file
    LieValidate { algebra: PathBuf },
    /// Check that matrices define a Lie action by derivations
    LieCheckAction(ActionArgs),
    /// Decide whether two mutual Lie actions are compatible
    LieCheckCompat(MutualArgs),
    /// Build the semidirect sum of a Lie action
    LieSemidirect(ActionArgs),
    /// Build the Lie Peiffer product, with its actions when compatible
    LiePeiffer(MutualArgs),
    /// Emit the two Lie crossed modules over the Peiffer product
    LiePeifferXmods(MutualArgs),
    /// The comparison map from the Lie Peiffer product to the common codomain
    LieUniversalMap(PairArgs),
    /// Check the Lie crossed-module conditions
    LieXmodCheck { xmod: PathBuf },
    /// Mutual actions induced by two coterminal Lie crossed modules
    LieInduceActions(PairArgs),
}

struct Outcome {
    report: Value,
    holds: bool,
}

fn holds(report: Value) -> Outcome {
    Outcome { report, holds: true }
}

fn verdict(report: Value, holds: bool) -> Outcome {
    Outcome { report, holds }
}

type Run = Result<Outcome, Error>;

fn diagnostic<F: std::fmt::Display>(d: Diagnostic<F>) -> Outcome {
    match d {
        Diagnostic::Valid => holds(json!({ "valid": true })),
        Diagnostic::Invalid(f) => verdict(json!({ "valid": false, "witness": f.to_string() }), false),
    }
}

fn load_mutual(a: &MutualArgs) -> Result<MutualActions, Error> {
    let m = io::load_group(&a.m)?;
    let n = io::load_group(&a.n)?;
    let xi_nm = io::load_action(&a.xi_nm, Some(&n), Some(&m))?;
    let xi_mn = io::load_action(&a.xi_mn, Some(&m), Some(&n))?;
    MutualActions::new(m, n, xi_nm, xi_mn)
}

fn load_lie_mutual(a: &MutualArgs) -> Result<LieMutualActions, Error> {
    let m = io::load_lie(&a.m)?;
    let n = io::load_lie(&a.n)?;
    let rho_nm = io::load_lie_action(&a.xi_nm, Some(&n), Some(&m))?;
    let rho_mn = io::load_lie_action(&a.xi_mn, Some(&m), Some(&n))?;
    LieMutualActions::new(m, n, rho_nm, rho_mn)
}

fn matrices(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(io::matrix_json).collect())
}

fn threads_from_env() -> Result<Option<usize>, Error> {
    match std::env::var("PEIFFER_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::Parse(format!("PEIFFER_THREADS must be a number, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: &Cli) -> Run {
    let cap = cli.semidirect_cap;
    match &cli.command {
        Command::Validate { group } => {
            let file: GroupFile = io::read_json(group)?;
            if file.table.len() != file.order {
                return Err(Error::Parse(format!("order is {} but the table has {} rows", file.order, file.table.len())));
            }
            match validate_group(&file.table)? {
                Diagnostic::Valid => Ok(holds(json!({ "order": file.order, "valid": true }))),
                Diagnostic::Invalid(f) => Err(Error::InvalidGroup(f)),
            }
        }
        Command::CheckAction(a) => {
            let acting = io::load_group(&a.acting)?;
            let target = io::load_group(&a.target)?;
            let (acting, target, table) = io::load_action_parts(&a.action, Some(&acting), Some(&target))?;
            Ok(diagnostic(check_action(&acting, &target, &table)?))
        }
        Command::CheckCompat(a) => {
            let v = check_compatible(&load_mutual(a)?);
            Ok(verdict(serde_json::to_value(v).expect("serialisable"), v.compatible))
        }
        Command::Semidirect(a) => {
            let acting = io::load_group(&a.acting)?;
            let target = io::load_group(&a.target)?;
            let psi = io::load_action(&a.action, Some(&acting), Some(&target))?;
            let sd = semidirect(&psi, cap)?;
            Ok(holds(json!({
                "jA": sd.j_a.map(),
                "jX": sd.j_x.map(),
                "order": sd.group.order(),
                "pi": sd.pi.map(),
                "table": sd.group.rows(),
            })))
        }
        Command::Peiffer(a) => {
            let pp = peiffer_product(&load_mutual(a)?, cap)?;
            Ok(holds(io::peiffer_json(&pp)))
        }
        Command::StrongCheck(a) => {
            let pp = peiffer_product(&load_mutual(a)?, cap)?;
            let v = strong_relation_check(&pp, cli.strong_word_bound);
            let mut report = serde_json::to_value(&v).expect("serialisable");
            report["compatible"] = json!(pp.compatible());
            Ok(verdict(report, v.passed))
        }
        Command::PeifferXmods(a) => {
            let pp = peiffer_product(&load_mutual(a)?, cap)?;
            match peiffer_xmods(&pp) {
                Ok((xm, xn)) => Ok(holds(json!({ "m": XmodFile::of(&xm), "n": XmodFile::of(&xn) }))),
                Err(Error::InducedActionsUndefined(f)) => {
                    Ok(verdict(json!({ "compatible": false, "witness": f.to_string() }), false))
                }
                Err(e) => Err(e),
            }
        }
        Command::UniversalMap(a) => {
            let xm = io::load_xmod(&a.xm_m)?;
            let xn = io::load_xmod(&a.xm_n)?;
            let pp = peiffer_product(&induced_mutual_actions(&xm, &xn)?, cap)?;
            match universal_map(&pp, &xm, &xn) {
                Ok(u) => Ok(holds(json!({
                    "map": u.hom.map(),
                    "order": pp.product().order(),
                    "unique": u.unique,
                }))),
                Err(Error::UniversalMap(reason)) => Ok(verdict(json!({ "error": reason }), false)),
                Err(e) => Err(e),
            }
        }
        Command::XmodCheck { xmod } => {
            let (boundary, action) = io::load_xmod_parts(xmod)?;
            Ok(diagnostic(check_xmod(&boundary, &action)?))
        }
        Command::InduceActions(a) => {
            let mutual = induced_mutual_actions(&io::load_xmod(&a.xm_m)?, &io::load_xmod(&a.xm_n)?)?;
            Ok(holds(json!({
                "compatible": check_compatible(&mutual).compatible,
                "xi_mn": mutual.xi_mn().rows(),
                "xi_nm": mutual.xi_nm().rows(),
            })))
        }
        Command::Enumerate { groups } => {
            let catalog: Vec<GroupRef> = if groups.is_empty() {
                fixtures::catalog()
            } else {
                groups.iter().map(|p| io::load_group(p)).collect::<Result<_, _>>()?
            };
            let config = CensusConfig {
                max_order: cli.max_order,
                semidirect_cap: cap,
                strong_word_bound: cli.strong_word_bound,
                iso_cap: DEFAULT_SEARCH_CAP,
                threads: threads_from_env()?,
            };
            let report = enumerate(&catalog, &config)?;
            let ok = report.all_round_trips_hold();
            Ok(verdict(serde_json::to_value(&report).expect("serialisable"), ok))
        }
        Command::CoproductEval { mutual, word, side, x } => {
            let mutual = load_mutual(mutual)?;
            let letters = parse_letters(word)?;
            for l in &letters {
                if l.side == Side::T || l.elem >= mutual.group(l.side).order() {
                    return Err(Error::Parse(format!("letter {l} does not belong to M or N")));
                }
            }
            if *side == Side::T || *x >= mutual.group(*side).order() {
                return Err(Error::ElementOutOfRange(*x));
            }
            Ok(holds(json!({ "value": mutual.coproduct_eval(&letters, *side, *x) })))
        }
        Command::LieValidate { algebra } => {
            let file: LieFile = io::read_json(algebra)?;
            match validate_lie(file.dim, &file.structure()?)? {
                Diagnostic::Valid => Ok(holds(json!({ "dim": file.dim, "valid": true }))),
                Diagnostic::Invalid(f) => Err(Error::InvalidLie(f)),
            }
        }
        Command::LieCheckAction(a) => {
            let acting = io::load_lie(&a.acting)?;
            let target = io::load_lie(&a.target)?;
            let (acting, target, rho) = io::load_lie_action_parts(&a.action, Some(&acting), Some(&target))?;
            Ok(diagnostic(check_lie_action(&acting, &target, &rho)?))
        }
        Command::LieCheckCompat(a) => {
            let v = lie_compatible(&load_lie_mutual(a)?);
            let ok = v.compatible;
            Ok(verdict(serde_json::to_value(v).expect("serialisable"), ok))
        }
        Command::LieSemidirect(a) => {
            let acting = io::load_lie(&a.acting)?;
            let target = io::load_lie(&a.target)?;
            let rho = io::load_lie_action(&a.action, Some(&acting), Some(&target))?;
            let sd = lie_semidirect(&rho)?;
            Ok(holds(io::lie_json(&sd.algebra)))
        }
        Command::LiePeiffer(a) => {
            let lp = lie_peiffer(&load_lie_mutual(a)?)?;
            let mut report = json!({
                "algebra": io::lie_json(lp.algebra()),
                "compatible": lp.compatible(),
                "dim": lp.algebra().dim(),
                "lM": io::matrix_json(lp.l_m().matrix()),
                "lN": io::matrix_json(lp.l_n().matrix()),
            });
            if lp.compatible() {
                let (on_m, on_n) = lie_peiffer_actions(&lp)?;
                report["actions"] = json!({ "on_m": matrices(on_m.matrices()), "on_n": matrices(on_n.matrices()) });
            }
            Ok(holds(report))
        }
        Command::LiePeifferXmods(a) => {
            let lp = lie_peiffer(&load_lie_mutual(a)?)?;
            match lie_peiffer_xmods(&lp) {
                Ok((xm, xn)) => Ok(holds(json!({ "m": LieXmodFile::of(&xm), "n": LieXmodFile::of(&xn) }))),
                Err(Error::InvalidLie(f)) if !lp.compatible() => {
                    Ok(verdict(json!({ "compatible": false, "witness": f.to_string() }), false))
                }
                Err(e) => Err(e),
            }
        }
        Command::LieUniversalMap(a) => {
            let xm = io::load_lie_xmod(&a.xm_m)?;
            let xn = io::load_lie_xmod(&a.xm_n)?;
            let lp = lie_peiffer(&lie_induced_actions(&xm, &xn)?)?;
            match lie_universal_map(&lp, &xm, &xn) {
                Ok(u) => Ok(holds(json!({
                    "dim": lp.algebra().dim(),
                    "map": io::matrix_json(u.hom.matrix()),
                    "unique": u.unique,
                }))),
                Err(Error::UniversalMap(reason)) => Ok(verdict(json!({ "error": reason }), false)),
                Err(e) => Err(e),
            }
        }
        Command::LieXmodCheck { xmod } => {
            let (boundary, action) = io::load_lie_xmod_parts(xmod)?;
            Ok(diagnostic(check_lie_xmod(&boundary, &action)?))
        }
        Command::LieInduceActions(a) => {
            let mutual = lie_induced_actions(&io::load_lie_xmod(&a.xm_m)?, &io::load_lie_xmod(&a.xm_n)?)?;
            Ok(holds(json!({
                "compatible": lie_compatible(&mutual).compatible,
                "rho_mn": matrices(mutual.rho_mn().matrices()),
                "rho_nm": matrices(mutual.rho_nm().matrices()),
            })))
        }
    }
}

fn emit(out: Option<&Path>, report: &Value) -> Result<(), String> {
    let text = io::to_pretty(report);
    match out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = match run(&cli) {
        Ok(o) => (o.report, if o.holds { 0 } else { 1 }),
        Err(e) => {
            eprintln!("peiffer: {e}");
            (json!({ "error": e.to_string() }), 2)
        }
    };
    if let Err(msg) = emit(cli.out.as_deref(), &report) {
        eprintln!("peiffer: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
