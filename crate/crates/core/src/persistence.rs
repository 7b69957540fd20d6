//! Finite scans of the (strong) persistence property of powers.
//!
//! For an ideal `I` and a bound `kmax`, the scans compute `I^k` for
//! `k ≤ kmax + 1` and record, for each `k ≤ kmax`:
//!
//! - whether `(I^{k+1} : I) = I^k` (strong persistence at `k`);
//! - whether `Ass(I^k) ⊆ Ass(I^{k+1})` (persistence at `k`);
//! - whether `Ass(I^2) ⊆ Ass(I^k)` for `k ≥ 2`;
//! - whether the maximal ideal is associated, i.e. whether `depth R/I^k = 0`.
//!
//! Nothing here says anything about `k > kmax + 1`.

use serde::Serialize;

use crate::closure::is_integrally_closed;
use crate::error::{Error, Result};
use crate::fixtures::{counterexample_ideal, counterexample_sha256};
use crate::ideal::MonomialIdeal;
use crate::io::write_ideal;
use crate::monomial::Monomial;
use crate::primes::{associated_primes, AssMethod, AssReport, MonomialPrime};
use crate::random::{random_degree2_ideal, seeded};
use crate::resolution::{depth_quotient_with_cap, DEFAULT_LATTICE_CAP};

pub const DEFAULT_KMAX: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub kmax: u32,
    pub method: AssMethod,
    /// Recompute every Ass set with the other algorithm and compare.
    pub audit: bool,
    /// Compute depth exactly from Betti numbers instead of the
    /// depth-zero criterion.
    pub exact_depth: bool,
    pub lattice_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            kmax: DEFAULT_KMAX,
            method: AssMethod::WitnessSearch,
            audit: false,
            exact_depth: false,
            lattice_cap: DEFAULT_LATTICE_CAP,
        }
    }
}

impl ScanOptions {
    pub fn with_kmax(kmax: u32) -> Self {
        ScanOptions {
            kmax,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Depth {
    /// The maximal ideal is associated.
    Zero,
    /// The maximal ideal is not associated; the exact value was not computed.
    Positive,
    Exact(usize),
}

impl Depth {
    pub fn is_zero(self) -> bool {
        matches!(self, Depth::Zero | Depth::Exact(0))
    }

    /// `self < other`, when decidable from the available information.
    fn strictly_below(self, other: Depth) -> bool {
        match (self, other) {
            (Depth::Exact(a), Depth::Exact(b)) => a < b,
            (a, b) => a.is_zero() && !b.is_zero(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerRecord {
    pub k: u32,
    pub generator_count: usize,
    pub ass: Vec<MonomialPrime>,
    /// `(I^{k+1} : I) = I^k`.
    pub strong_persistence: bool,
    /// `I^k ⊆ (I^{k+1} : I)`; always expected to hold.
    pub colon_contains_power: bool,
    /// `Ass(I^k) ⊆ Ass(I^{k+1})`.
    pub ass_contained_in_next: bool,
    /// `Ass(I^2) ⊆ Ass(I^k)`, for `k ≥ 2`.
    pub square_ass_contained: Option<bool>,
    pub maximal_ideal_associated: bool,
    pub depth: Depth,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditOutcome {
    pub method: AssMethod,
    /// Powers whose Ass sets differ between the two algorithms.
    pub mismatches: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PersistenceReport {
    pub ideal: MonomialIdeal,
    pub kmax: u32,
    pub method: AssMethod,
    pub records: Vec<PowerRecord>,
    /// Ass of `I^{kmax+1}`, needed for the containment verdict at `kmax`.
    pub ass_next: Vec<MonomialPrime>,
    pub strong_violations: Vec<u32>,
    pub ass_violations: Vec<u32>,
    pub square_ass_failures: Vec<u32>,
    /// `k` with `depth R/I^k < depth R/I^{k+1}` among scanned powers.
    pub depth_increases: Vec<u32>,
    /// Strong persistence at `k` implied Ass containment at `k` everywhere.
    pub strong_implies_persistence: bool,
    pub audit: Option<AuditOutcome>,
}

impl PersistenceReport {
    /// Internal consistency: one-sided inclusion everywhere, the
    /// strong-implies-persistence implication, and a clean audit.
    pub fn is_consistent(&self) -> bool {
        self.strong_implies_persistence
            && self.records.iter().all(|r| r.colon_contains_power)
            && self.audit.as_ref().is_none_or(|a| a.mismatches.is_empty())
    }
}

fn other_method(m: AssMethod) -> AssMethod {
    match m {
        AssMethod::WitnessSearch => AssMethod::Decomposition,
        AssMethod::Decomposition => AssMethod::WitnessSearch,
    }
}

fn require_scan(ideal: &MonomialIdeal, kmax: u32) -> Result<()> {
    ideal.require_proper_nonzero()?;
    if kmax == 0 {
        return Err(Error::Precondition("kmax must be at least 1".into()));
    }
    Ok(())
}

/// Every `k ≤ kmax` with `(I^{k+1} : I) ≠ I^k`.
pub fn strong_persistence_scan(ideal: &MonomialIdeal, kmax: u32) -> Result<Vec<u32>> {
    require_scan(ideal, kmax)?;
    let powers = ideal.powers(kmax + 1)?;
    let mut out = Vec::new();
    for k in 1..=kmax {
        let colon = powers[k as usize].colon_ideal(ideal)?;
        if !colon.equals(&powers[k as usize - 1])? {
            out.push(k);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct AssScan {
    /// `Ass(I^k)` for `k = 1..=kmax+1`.
    pub ass: Vec<Vec<MonomialPrime>>,
    /// `k ≤ kmax` with `Ass(I^k) ⊄ Ass(I^{k+1})`.
    pub violations: Vec<u32>,
    /// `(k, Ass(I^2) ⊆ Ass(I^k))` for `2 ≤ k ≤ kmax`.
    pub square_checks: Vec<(u32, bool)>,
}

pub fn ass_persistence_scan(ideal: &MonomialIdeal, kmax: u32) -> Result<AssScan> {
    ass_persistence_scan_with(ideal, kmax, AssMethod::WitnessSearch)
}

pub fn ass_persistence_scan_with(ideal: &MonomialIdeal, kmax: u32, method: AssMethod) -> Result<AssScan> {
    require_scan(ideal, kmax)?;
    let reports = ideal
        .powers(kmax + 1)?
        .iter()
        .map(|p| associated_primes(p, method))
        .collect::<Result<Vec<_>>>()?;
    let violations = (1..=kmax)
        .filter(|&k| !reports[k as usize - 1].is_subset_of(&reports[k as usize]))
        .collect();
    let square_checks = (2..=kmax)
        .map(|k| (k, reports[1].is_subset_of(&reports[k as usize - 1])))
        .collect();
    Ok(AssScan {
        ass: reports.into_iter().map(|r| r.primes).collect(),
        violations,
        square_checks,
    })
}

/// The full per-power report.
pub fn persistence_report(ideal: &MonomialIdeal, opts: &ScanOptions) -> Result<PersistenceReport> {
    require_scan(ideal, opts.kmax)?;
    let kmax = opts.kmax;
    let powers = ideal.powers(kmax + 1)?;
    let ass: Vec<AssReport> = powers
        .iter()
        .map(|p| associated_primes(p, opts.method))
        .collect::<Result<_>>()?;
    let audit = if opts.audit {
        let method = other_method(opts.method);
        let mut mismatches = Vec::new();
        for (k, (p, rep)) in (1u32..).zip(powers.iter().zip(&ass)) {
            if associated_primes(p, method)?.primes != rep.primes {
                mismatches.push(k);
            }
        }
        Some(AuditOutcome { method, mismatches })
    } else {
        None
    };

    let mut records = Vec::with_capacity(kmax as usize);
    for k in 1..=kmax {
        let idx = k as usize - 1;
        let colon = powers[idx + 1].colon_ideal(ideal)?;
        let max_assoc = ass[idx].contains_maximal();
        let depth = if opts.exact_depth {
            Depth::Exact(depth_quotient_with_cap(&powers[idx], opts.lattice_cap)?)
        } else if max_assoc {
            Depth::Zero
        } else {
            Depth::Positive
        };
        records.push(PowerRecord {
            k,
            generator_count: powers[idx].len(),
            ass: ass[idx].primes.clone(),
            strong_persistence: colon.equals(&powers[idx])?,
            colon_contains_power: powers[idx].is_subset(&colon)?,
            ass_contained_in_next: ass[idx].is_subset_of(&ass[idx + 1]),
            square_ass_contained: (k >= 2).then(|| ass[1].is_subset_of(&ass[idx])),
            maximal_ideal_associated: max_assoc,
            depth,
        });
    }
    let pick = |f: &dyn Fn(&PowerRecord) -> bool| records.iter().filter(|r| f(r)).map(|r| r.k).collect::<Vec<_>>();
    let strong_violations = pick(&|r| !r.strong_persistence);
    let ass_violations = pick(&|r| !r.ass_contained_in_next);
    let square_ass_failures = pick(&|r| r.square_ass_contained == Some(false));
    let depth_increases = records
        .windows(2)
        .filter(|w| w[0].depth.strictly_below(w[1].depth))
        .map(|w| w[0].k)
        .collect();
    let strong_implies_persistence = records
        .iter()
        .all(|r| !r.strong_persistence || r.ass_contained_in_next);
    Ok(PersistenceReport {
        ideal: ideal.clone(),
        kmax,
        method: opts.method,
        ass_next: ass[kmax as usize].primes.clone(),
        records,
        strong_violations,
        ass_violations,
        square_ass_failures,
        depth_increases,
        strong_implies_persistence,
        audit,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Degree2Counterexample {
    pub trial: usize,
    pub ideal: String,
    pub violations: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Degree2Summary {
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub kmax: u32,
    pub passed: usize,
    pub counterexamples: Vec<Degree2Counterexample>,
}

impl Degree2Summary {
    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Draws `trials` random ideals with `deg(I) ≤ 2` and runs the strong
/// persistence scan on each.
///
/// Trial `t` uses `n = 1 + t mod n_max` variables and at most `n + 2`
/// generators, drawn by [`random_degree2_ideal`].
pub fn check_degree2_sweep(seed: u64, trials: usize, n_max: usize, kmax: u32) -> Result<Degree2Summary> {
    if trials == 0 || n_max == 0 {
        return Err(Error::Precondition("trials and n_max must be positive".into()));
    }
    let mut rng = seeded(seed);
    let mut passed = 0;
    let mut counterexamples = Vec::new();
    for trial in 0..trials {
        let n = 1 + trial % n_max;
        let ideal = random_degree2_ideal(&mut rng, n, n + 2)?;
        let violations = strong_persistence_scan(&ideal, kmax)?;
        if violations.is_empty() {
            passed += 1;
        } else {
            counterexamples.push(Degree2Counterexample {
                trial,
                ideal: write_ideal(&ideal),
                violations,
            });
        }
    }
    Ok(Degree2Summary {
        seed,
        trials,
        n_max,
        kmax,
        passed,
        counterexamples,
    })
}

/// Checks `(x^{k+1} J : x_i) = x^k J` for every `i ≤ t`, where
/// `x = (x_1, ..., x_t)` are the first `t` variables of `J`'s ring and none
/// of them divides a generator of `J`.
pub fn check_lemma_l2(t: usize, j: &MonomialIdeal, k: u32) -> Result<bool> {
    let n = j.nvars();
    if t == 0 || t > n {
        return Err(Error::Precondition(format!("need 1 ≤ t ≤ {n}, got t = {t}")));
    }
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    if j.support().iter().any(|&v| v < t) {
        return Err(Error::SupportOverlap { t });
    }
    let vars: Vec<usize> = (0..t).collect();
    let x = MonomialIdeal::prime(j.ring().clone(), &vars)?;
    let lhs_base = x.power(k + 1)?.multiply(j)?;
    let rhs = x.power(k)?.multiply(j)?;
    for i in 0..t {
        let lhs = lhs_base.colon_monomial(&Monomial::var(n, i))?;
        if !lhs.equals(&rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SquareAssOutcome {
    /// The square is not integrally closed; nothing to check.
    HypothesisNotMet,
    Holds,
    /// `Ass(I^2) ⊄ Ass(I^k)` at this `k` despite the hypothesis.
    Fails { k: u32 },
}

/// For square-free `I` with integrally closed `I^2`, checks
/// `Ass(I^2) ⊆ Ass(I^k)` for `2 ≤ k ≤ kmax`.
pub fn check_corollary_c1(ideal: &MonomialIdeal, kmax: u32) -> Result<SquareAssOutcome> {
    ideal.require_proper_nonzero()?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if kmax < 2 {
        return Err(Error::Precondition("kmax must be at least 2".into()));
    }
    let powers = ideal.powers(kmax)?;
    if !is_integrally_closed(&powers[1])? {
        return Ok(SquareAssOutcome::HypothesisNotMet);
    }
    let square = associated_primes(&powers[1], AssMethod::WitnessSearch)?;
    for k in 3..=kmax {
        let ass = associated_primes(&powers[k as usize - 1], AssMethod::WitnessSearch)?;
        if !square.is_subset_of(&ass) {
            return Ok(SquareAssOutcome::Fails { k });
        }
    }
    Ok(SquareAssOutcome::Holds)
}

#[derive(Debug, Clone, Serialize)]
pub struct Clause {
    pub id: char,
    pub statement: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub fixture_sha256: String,
    pub ideal: MonomialIdeal,
    pub kmax: u32,
    pub method: AssMethod,
    pub clauses: Vec<Clause>,
    /// `(k, Ass(I^k))` for `k ≤ kmax`.
    pub ass_by_power: Vec<(u32, Vec<MonomialPrime>)>,
    /// Union of the scanned Ass sets.
    pub ass_union: Vec<MonomialPrime>,
    /// Exact depths of `R/I^2` and `R/I^3`, when requested.
    pub exact_depths: Option<(usize, usize)>,
    pub audit: Option<AuditOutcome>,
    pub note: String,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.holds) && self.audit.as_ref().is_none_or(|a| a.mismatches.is_empty())
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.holds)
    }
}

fn fmt_primes(primes: &[MonomialPrime]) -> String {
    primes.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Builds the counterexample report without failing on a false clause.
pub fn counterexample_report(opts: &ScanOptions) -> Result<ExampleReport> {
    let kmax = opts.kmax.max(3);
    let ideal = counterexample_ideal();
    let powers = ideal.powers(kmax)?;
    let ass: Vec<AssReport> = powers
        .iter()
        .map(|p| associated_primes(p, opts.method))
        .collect::<Result<_>>()?;
    let audit = if opts.audit {
        let method = other_method(opts.method);
        let mut mismatches = Vec::new();
        for k in 1..=3u32 {
            let i = k as usize - 1;
            if associated_primes(&powers[i], method)?.primes != ass[i].primes {
                mismatches.push(k);
            }
        }
        Some(AuditOutcome { method, mismatches })
    } else {
        None
    };
    let (sq, cube) = (&ass[1], &ass[2]);
    let colon = powers[2].colon_ideal(&ideal)?;
    let colon_differs = !colon.equals(&powers[1])?;
    let missing: Vec<MonomialPrime> = sq.primes.iter().filter(|p| !cube.primes.contains(p)).cloned().collect();

    let exact_depths = if opts.exact_depth {
        Some((
            depth_quotient_with_cap(&powers[1], opts.lattice_cap)?,
            depth_quotient_with_cap(&powers[2], opts.lattice_cap)?,
        ))
    } else {
        None
    };
    let (depth_ok, depth_detail) = match exact_depths {
        Some((d2, d3)) => (
            d2 == 0 && d3 >= 1 && (d2 == 0) == sq.contains_maximal() && (d3 == 0) == cube.contains_maximal(),
            format!("exact: depth R/I^2 = {d2}, depth R/I^3 = {d3}"),
        ),
        None => (
            sq.contains_maximal() && !cube.contains_maximal(),
            format!(
                "depth-zero criterion: m {} Ass(I^2), m {} Ass(I^3)",
                if sq.contains_maximal() { "∈" } else { "∉" },
                if cube.contains_maximal() { "∈" } else { "∉" }
            ),
        ),
    };

    let witness = |rep: &AssReport, k: u32| -> Result<String> {
        Ok(match crate::primes::maximal_ideal_witness(&powers[k as usize - 1])? {
            Some(w) => format!("witness w = {} with (I^{k} : w) = m", rep.ideal.fmt_generator(&w)),
            None => format!("no w with (I^{k} : w) = m in the witness box"),
        })
    };

    let mut colon_detail = format!(
        "(I^3 : I) has {} generators, I^2 has {}",
        colon.len(),
        powers[1].len()
    );
    if let Some(extra) = colon.generators().iter().find(|g| !powers[1].contains_unchecked(g)) {
        colon_detail.push_str(&format!("; {} ∈ (I^3 : I) \\ I^2", colon.fmt_generator(extra)));
    }

    let clauses = vec![
        Clause {
            id: 'a',
            statement: "m ∈ Ass(I^2)".into(),
            holds: sq.contains_maximal(),
            detail: witness(sq, 2)?,
        },
        Clause {
            id: 'b',
            statement: "m ∉ Ass(I^3)".into(),
            holds: !cube.contains_maximal(),
            detail: witness(cube, 3)?,
        },
        Clause {
            id: 'c',
            statement: "(I^3 : I) ≠ I^2".into(),
            holds: colon_differs,
            detail: colon_detail,
        },
        Clause {
            id: 'd',
            statement: "Ass(I^2) ⊄ Ass(I^3)".into(),
            holds: !missing.is_empty(),
            detail: format!("in Ass(I^2) but not Ass(I^3): {}", fmt_primes(&missing)),
        },
        Clause {
            id: 'e',
            statement: "depth R/I^2 = 0 and depth R/I^3 ≥ 1".into(),
            holds: depth_ok,
            detail: depth_detail,
        },
        Clause {
            id: 'f',
            statement: format!("Ass(I^k) listed for k ≤ {kmax}"),
            holds: ass.len() == kmax as usize,
            detail: format!(
                "m occurs at k ∈ {{{}}} among the scanned powers",
                ass.iter()
                    .enumerate()
                    .filter(|(_, a)| a.contains_maximal())
                    .map(|(i, _)| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        },
    ];
    let mut union: Vec<MonomialPrime> = ass.iter().flat_map(|a| a.primes.iter().cloned()).collect();
    union.sort();
    union.dedup();
    Ok(ExampleReport {
        fixture_sha256: counterexample_sha256(),
        ideal,
        kmax,
        method: opts.method,
        clauses,
        ass_by_power: ass.iter().enumerate().map(|(i, a)| (i as u32 + 1, a.primes.clone())).collect(),
        ass_union: union,
        exact_depths,
        audit,
        note: format!(
            "Only powers k ≤ {kmax} were scanned; the stable set of associated primes and \
             membership of m in it are not decided here."
        ),
    })
}

/// Runs the counterexample checks and fails with the first false clause.
pub fn run_paper_example(opts: &ScanOptions) -> Result<ExampleReport> {
    let report = counterexample_report(opts)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::ClaimFailed {
            clause: c.id,
            statement: c.statement.clone(),
        });
    }
    if let Some(a) = report.audit.as_ref().filter(|a| !a.mismatches.is_empty()) {
        return Err(Error::ClaimFailed {
            clause: 'f',
            statement: format!("Ass audit disagrees at k = {:?}", a.mismatches),
        });
    }
    Ok(report)
}
