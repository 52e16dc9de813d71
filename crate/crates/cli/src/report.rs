//! The machine-readable report shared by all commands.

use std::collections::BTreeMap;
use std::time::Instant;

use kideal::blocks::{layer_dims, InvariantDims, RadicalChain};
use kideal::commalg::{Multiply, QuotientAlgebra};
use kideal::decider::{decide_scalar_with, ClassRow, DeciderOptions, ScalarReport};
use kideal::symalg::{AlgebraTable, KuelshammerTower};
use kideal::verify::{self, Status, VerifyOptions};
use kideal::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub depth: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub guard: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub qmax: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threads: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub p: u32,
    pub exponent: u32,
    pub defect: u32,
    pub q_odd: u32,
    pub sylow_dihedral: Option<bool>,
    pub classes: Vec<ClassRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub algebra_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub commutator_dim: Option<usize>,
    pub center_dim: usize,
    pub t1perp_dim: usize,
    pub zbar_dim: usize,
    pub radical_dim: usize,
    pub radical_sq_dim: usize,
    pub jmodj2_dim: usize,
    /// `dim T_n^perp` for `n = 0, 1, ...`.
    pub tn_perp_chain: Vec<usize>,
    /// Dims of `J^k(Zbar)` for `k = 1, 2, ...` until zero.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub radical_chain: Option<Vec<usize>>,
}

impl Dims {
    fn from_invariants(d: &InvariantDims, chain: Vec<usize>) -> Self {
        Dims {
            algebra_dim: None,
            commutator_dim: None,
            center_dim: d.center,
            t1perp_dim: d.t1perp,
            zbar_dim: d.zbar,
            radical_dim: d.radical,
            radical_sq_dim: d.radical_sq,
            jmodj2_dim: d.radical_quot,
            tn_perp_chain: chain,
            radical_chain: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocksInfo {
    /// Degree of the field over which the block idempotents are defined.
    pub field_degree: u32,
    pub principal: usize,
    pub rows: Vec<InvariantDims>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarInfo {
    pub scalar_c: u32,
    pub jmodj2_direct: usize,
    pub jmodj2_subtraction: usize,
    pub presented_s: u32,
    pub presented_c0: InvariantDims,
    pub presented_c1: InvariantDims,
    pub presented_match: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssertionRow {
    pub name: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub computed: Option<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub detail: Vec<String>,
}

impl AssertionRow {
    fn compare(name: impl Into<String>, expected: i64, computed: i64) -> Self {
        AssertionRow {
            name: name.into(),
            outcome: if expected == computed { Outcome::Pass } else { Outcome::Fail },
            expected: Some(expected),
            computed: Some(computed),
            detail: vec![],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: Input,
    pub group: Option<GroupInfo>,
    pub dims: Option<Dims>,
    pub blocks: Option<BlocksInfo>,
    pub scalar: Option<ScalarInfo>,
    pub assertions: Vec<AssertionRow>,
    /// Wall-clock milliseconds per stage.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.assertions.iter().any(|a| a.outcome == Outcome::Fail)
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

pub fn pgl2_report(q: u32, depth: u32, guard: usize) -> Result<Report> {
    let opts = DeciderOptions { guard, depth, ..DeciderOptions::default() };
    let r = decide_scalar_with(q, opts)?;
    Ok(from_scalar(q, depth, guard, r))
}

fn from_scalar(q: u32, depth: u32, guard: usize, r: ScalarReport) -> Report {
    let group = GroupInfo {
        name: format!("PGL2({q})"),
        order: r.group_order,
        p: r.p,
        exponent: r.exponent,
        defect: r.n,
        q_odd: r.q_odd,
        sylow_dihedral: r.sylow_dihedral,
        classes: r.classes.clone(),
    };
    let mut assertions: Vec<AssertionRow> =
        r.checks.iter().map(|c| AssertionRow::compare(c.name.clone(), c.expected, c.computed)).collect();
    assertions.push(AssertionRow::compare(
        "decision routes agree",
        r.routes.direct as i64,
        r.routes.subtraction as i64,
    ));
    let timings = [
        ("group", r.timings.group_ms),
        ("classes", r.timings.classes_ms),
        ("center", r.timings.center_ms),
        ("kuelshammer", r.timings.kuelshammer_ms),
        ("blocks", r.timings.blocks_ms),
        ("presented", r.timings.presented_ms),
        ("total", r.timings.total_ms),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    Report {
        input: Input { command: "pgl2".into(), q: Some(q), depth: Some(depth), guard: Some(guard), ..Input::default() },
        group: Some(group),
        dims: Some(Dims::from_invariants(&r.whole, r.tn_perp_chain.clone())),
        blocks: Some(BlocksInfo { field_degree: r.ledger.field_degree, principal: r.ledger.principal, rows: r.ledger.blocks.clone() }),
        scalar: Some(ScalarInfo {
            scalar_c: r.c,
            jmodj2_direct: r.routes.direct,
            jmodj2_subtraction: r.routes.subtraction,
            presented_s: r.presented.s,
            presented_c0: r.presented.scalar0,
            presented_c1: r.presented.scalar1,
            presented_match: r.presented.matching.clone(),
        }),
        assertions,
        timings,
    }
}

/// Analysis of a table read from JSON. `depth` caps the `T_n^perp` chain; by default it runs
/// until the chain is stable.
pub fn algebra_report(file: &str, text: &str, depth: Option<u32>) -> Result<Report> {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let table = AlgebraTable::from_json(text)?;
    timings.insert("parse".to_string(), ms(t));

    let t = Instant::now();
    let validation = table.validate()?;
    timings.insert("validate".to_string(), ms(t));

    let t = Instant::now();
    let tower = KuelshammerTower::new(&table)?;
    let top = depth.unwrap_or(tower.stable_depth() as u32);
    let chain = (0..=top).map(|n| tower.tn_perp(n).map(|s| s.dim())).collect::<Result<Vec<_>>>()?;
    let t1 = tower.tn_perp(1)?;
    let dims = layer_dims(&table, tower.center(), &t1)?;
    let zbar = QuotientAlgebra::new(&table, tower.center(), &t1, None)?;
    let radical_chain = RadicalChain::new(&zbar.algebra)?.dims();
    timings.insert("kuelshammer".to_string(), ms(t));

    let mut d = Dims::from_invariants(&dims, chain);
    d.algebra_dim = Some(table.dim());
    d.commutator_dim = Some(tower.commutator().dim());
    d.radical_chain = Some(radical_chain);

    let assertions = vec![
        AssertionRow {
            name: "associativity and form".into(),
            outcome: Outcome::Pass,
            expected: None,
            computed: Some(validation.triples_checked as i64),
            detail: vec![format!(
                "{} triples ({}), form supported on {:?}",
                validation.triples_checked,
                if validation.exhaustive { "exhaustive" } else { "sampled" },
                validation.form_support
            )],
        },
        AssertionRow::compare("gram rank", validation.dim as i64, validation.gram_rank as i64),
        AssertionRow::compare("dim Z + dim K", table.dim() as i64, (tower.center().dim() + tower.commutator().dim()) as i64),
    ];
    Ok(Report {
        input: Input { command: "algebra".into(), file: Some(file.to_string()), depth, ..Input::default() },
        group: None,
        dims: Some(d),
        blocks: None,
        scalar: None,
        assertions,
        timings,
    })
}

pub fn verify_report(opts: VerifyOptions, threads: Option<usize>) -> Result<Report> {
    let t = Instant::now();
    let v = verify::run(opts)?;
    let mut timings: BTreeMap<String, f64> =
        v.criteria.iter().map(|c| (format!("criterion_{:02}", c.id), c.elapsed_ms)).collect();
    timings.insert("total".to_string(), ms(t));
    let assertions = v
        .criteria
        .into_iter()
        .map(|c| AssertionRow {
            name: format!("criterion {}: {}", c.id, c.title),
            outcome: match c.status {
                Status::Pass => Outcome::Pass,
                Status::Fail => Outcome::Fail,
                Status::Skipped => Outcome::Skipped,
            },
            expected: None,
            computed: None,
            detail: c.failures.into_iter().chain(c.notes).collect(),
        })
        .collect();
    Ok(Report {
        input: Input {
            command: "verify-paper".into(),
            qmax: Some(opts.qmax),
            seed: Some(opts.seed),
            threads,
            ..Input::default()
        },
        group: None,
        dims: None,
        blocks: None,
        scalar: None,
        assertions,
        timings,
    })
}
