//! End-to-end decision of the scalar `c` of the principal block of `kPGL_2(q)`.

use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::blocks::{block_idempotents, block_ledger, layer_dims, BlockLedger, InvariantDims};
use crate::classalgebra::{center_of_group_algebra, kuelshammer_perp_group, square_map, DefectData, TorusFamily};
use crate::error::{ensure, Error, Result};
use crate::ffield::{prime_power, BinaryField};
use crate::groups::{conjugacy_classes, dihedral_presentation, sylow2, Group, DEFAULT_GROUP_GUARD, DEFAULT_SYLOW_SEED};
use crate::symalg::{d2a_table, D2APresentation, KuelshammerTower, ValidationReport};

/// Groups up to this order get an explicit Sylow 2-subgroup as a check on `n`.
pub const SYLOW_CHECK_LIMIT: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeciderOptions {
    pub guard: usize,
    pub sylow_seed: u64,
    /// Largest `n` in the reported chain `T_0^perp >= T_1^perp >= ...`.
    pub depth: u32,
}

impl Default for DeciderOptions {
    fn default() -> Self {
        DeciderOptions { guard: DEFAULT_GROUP_GUARD, sylow_seed: DEFAULT_SYLOW_SEED, depth: 1 }
    }
}

/// A closed-form value checked against the computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: i64,
    pub computed: i64,
    pub holds: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: i64, computed: i64) -> Self {
        Check { name: name.into(), expected, computed, holds: expected == computed }
    }
}

/// `dim J/J^2` of the principal block, computed directly and by subtracting the other blocks
/// from the whole center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionRoutes {
    pub direct: usize,
    pub subtraction: usize,
}

/// Layer dims of `D(2A)^s(c)` for both scalars next to the principal block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedComparison {
    pub s: u32,
    pub scalar0: InvariantDims,
    pub scalar1: InvariantDims,
    /// Scalars whose presented algebra has the same six dims as the principal block.
    pub matching: Vec<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub group_ms: f64,
    pub classes_ms: f64,
    pub center_ms: f64,
    pub kuelshammer_ms: f64,
    pub blocks_ms: f64,
    pub presented_ms: f64,
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub label: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarReport {
    pub q: u32,
    pub p: u32,
    /// `q = p^exponent`.
    pub exponent: u32,
    pub group_order: usize,
    pub classes: Vec<ClassRow>,
    pub family: TorusFamily,
    /// Defect of the principal block: `|G|_2 = 2^n`.
    pub n: u32,
    pub q_odd: u32,
    /// Dihedral Sylow 2-subgroup of order `2^n` found, when the group is small enough to look.
    pub sylow_dihedral: Option<bool>,
    pub whole: InvariantDims,
    /// `dim T_n^perp` for `n = 0..=depth`.
    pub tn_perp_chain: Vec<usize>,
    pub ledger: BlockLedger,
    pub principal: InvariantDims,
    pub routes: DecisionRoutes,
    pub c: u32,
    pub presented: PresentedComparison,
    pub checks: Vec<Check>,
    pub timings: Timings,
}

impl ScalarReport {
    pub fn all_checks_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// The dichotomy `dim J/J^2 = 2 -> c = 1`, `3 -> c = 0`.
pub fn scalar_from_radical_quotient(dim: usize) -> Result<u32> {
    match dim {
        2 => Ok(1),
        3 => Ok(0),
        other => Err(Error::Assertion(format!("dichotomy violated: dim J/J^2 = {other}, expected 2 or 3"))),
    }
}

/// Checks that `q` is an odd prime power with `q = +-1 mod 8`.
pub fn check_scalar_input(q: u32) -> Result<(u32, u32)> {
    let (p, e) = match prime_power(q as u64) {
        Some((p, e)) if p != 2 => (p as u32, e),
        _ => return Err(Error::InvalidInput(format!("q = {q} is not an odd prime power"))),
    };
    if q % 8 == 3 || q % 8 == 5 {
        return Err(Error::MethodInapplicable(format!(
            "q = {q} = +-3 mod 8: the principal block has defect groups of order 8 and the center is too small"
        )));
    }
    Ok((p, e))
}

pub fn decide_scalar(q: u32) -> Result<ScalarReport> {
    decide_scalar_with(q, DeciderOptions::default())
}

pub fn decide_scalar_with(q: u32, opts: DeciderOptions) -> Result<ScalarReport> {
    let start = Instant::now();
    let (p, exponent) = check_scalar_input(q)?;
    let defect = DefectData::new(q)?;
    if defect.n < 4 {
        return Err(Error::MethodInapplicable(format!("defect n = {} < 4", defect.n)));
    }
    let mut timings = Timings::default();

    let t = Instant::now();
    let group = Arc::new(Group::pgl2_with_guard(q, opts.guard)?);
    timings.group_ms = ms(t);
    let n = group.order().trailing_zeros();
    ensure!(n == defect.n, "2-adic valuation {n} of |G| differs from {}", defect.n);
    let sylow_dihedral = if group.order() <= SYLOW_CHECK_LIMIT {
        let s = sylow2(&group, opts.sylow_seed)?;
        Some(s.order() == 1 << n && dihedral_presentation(&s).is_some())
    } else {
        None
    };

    let t = Instant::now();
    let part = Arc::new(conjugacy_classes(&group)?);
    timings.classes_ms = ms(t);

    let t = Instant::now();
    let center = center_of_group_algebra(group.clone(), part.clone())?;
    timings.center_ms = ms(t);

    let t = Instant::now();
    let squares = square_map(&group, &part)?;
    let t1perp = kuelshammer_perp_group(&squares, 1, &BinaryField::f2())?;
    let tn_perp_chain = (0..=opts.depth)
        .map(|k| kuelshammer_perp_group(&squares, k, &BinaryField::f2()).map(|t| t.dim()))
        .collect::<Result<Vec<_>>>()?;
    timings.kuelshammer_ms = ms(t);

    let t = Instant::now();
    let decomposition = block_idempotents(&center)?;
    let ledger = block_ledger(&center, &decomposition, &t1perp)?;
    timings.blocks_ms = ms(t);

    let whole = ledger.whole;
    let principal = ledger.blocks[ledger.principal];
    let others: usize = ledger
        .blocks
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ledger.principal)
        .map(|(_, b)| b.radical_quot)
        .sum();
    let routes = DecisionRoutes { direct: principal.radical_quot, subtraction: whole.radical_quot - others };
    ensure!(
        routes.direct == routes.subtraction,
        "decision routes disagree: direct {} vs subtraction {}",
        routes.direct,
        routes.subtraction
    );
    let c = scalar_from_radical_quotient(routes.direct)?;

    let t = Instant::now();
    let s = 1u32 << (n - 2);
    let scalar0 = presented_dims(s, 0)?.dims;
    let scalar1 = presented_dims(s, 1)?.dims;
    let matching = [(0u32, scalar0), (1u32, scalar1)]
        .iter()
        .filter(|(_, d)| *d == principal)
        .map(|(c, _)| *c)
        .collect();
    timings.presented_ms = ms(t);

    let qi = q as i64;
    let quarter = defect.quarter() as i64;
    let qo = defect.q_odd as i64;
    let cyclic = match defect.family {
        TorusFamily::A3 => (qi - 1) / 4,
        TorusFamily::A4 => (qi - 3) / 4,
    };
    let checks = vec![
        Check::new("dim Z", qi + 2, whole.center as i64),
        Check::new("dim T1perp", (qi + 3) / 2, whole.t1perp as i64),
        Check::new("dim Zbar", (qi + 1) / 2, whole.zbar as i64),
        Check::new("dim J(Zbar)", quarter - (qo - 1) / 2, whole.radical as i64),
        Check::new("dim J^2(Zbar)", quarter - (qo + 1), whole.radical_sq as i64),
        Check::new("block count", 1 + (qo - 1) / 2 + cyclic, ledger.blocks.len() as i64),
        Check::new("dim Z(B0)", (1i64 << (n - 2)) + 3, principal.center as i64),
    ];
    timings.total_ms = ms(start);

    Ok(ScalarReport {
        q,
        p,
        exponent,
        group_order: group.order(),
        classes: center
            .labels()
            .iter()
            .zip(center.class_sizes())
            .map(|(label, size)| ClassRow { label: label.clone(), size })
            .collect(),
        family: defect.family,
        n,
        q_odd: defect.q_odd,
        sylow_dihedral,
        whole,
        tn_perp_chain,
        ledger,
        principal,
        routes,
        c,
        presented: PresentedComparison { s, scalar0, scalar1, matching },
        checks,
        timings,
    })
}

/// Layer dims of a presented `D(2A)^s(c)` together with its validation report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedDims {
    pub s: u32,
    pub c: u32,
    pub validation: ValidationReport,
    pub dims: InvariantDims,
}

fn presented_dims(s: u32, c: u32) -> Result<PresentedDims> {
    let (table, validation) = d2a_table(D2APresentation::new(s, c)?)?;
    let tower = KuelshammerTower::new(&table)?;
    let dims = layer_dims(&table, tower.center(), &tower.tn_perp(1)?)?;
    Ok(PresentedDims { s, c, validation, dims })
}

/// Outcome of the dichotomy check on a presented algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedCheck {
    pub computed: PresentedDims,
    /// `3` for `c = 0`, `2` for `c = 1`.
    pub expected_radical_quot: usize,
    pub holds: bool,
}

/// Builds `D(2A)^s(c)` for `s = 2^{n-2}`, `n >= 4`, and compares its `dim J/J^2` of `Z/T_1^perp`
/// with the dichotomy value.
pub fn decide_scalar_presented(s: u32, c: u32) -> Result<PresentedCheck> {
    if !(s >= 4 && s.is_power_of_two()) {
        return Err(Error::MethodInapplicable(format!("s = {s} is not 2^(n-2) with n >= 4")));
    }
    if c > 1 {
        return Err(Error::InvalidInput(format!("scalar {c} is not 0 or 1")));
    }
    let computed = presented_dims(s, c)?;
    let expected_radical_quot = if c == 0 { 3 } else { 2 };
    let holds = computed.dims.radical_quot == expected_radical_quot;
    Ok(PresentedCheck { computed, expected_radical_quot, holds })
}
