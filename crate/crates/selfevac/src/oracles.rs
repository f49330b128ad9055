//! Independent brute-force enumerators and the cross-check harness.
//!
//! Everything in `formulas` (and the structural laws in `tableaux`) is
//! validated here against counts obtained by explicit enumeration:
//! involutions are generated by a plain pairing recursion and filtered,
//! generalized involutions are enumerated as symmetric multiplicity
//! matrices, and compatible contents are found by scanning all words.
//! `crosscheck` runs the whole identity list at configurable caps and
//! returns one record per identity; a mismatch record always carries a
//! reproducible counterexample.
//!
//! The heavy enumerations partition their search space on the image of the
//! first position and reduce the per-branch histograms by summation, so the
//! result is deterministic regardless of scheduling; surveys are memoized
//! per process.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::formulas::{
    analyze, c_count, c_from_s, c_star_count, c_star_from_s_star, gen_count, polynomial_of,
    s_by_rises, s_star_by_rises, s_star_recurrence_rhs, s_star_total, s_star_total_rec, s_total,
    s_total_rec, PolynomialFamily, RecurrenceCoefficient,
};
use crate::involutions::{enumerate_involutions, Involution, InvolutionFilter};
use crate::tableaux::{
    biword_of_tableau, enumerate_gen, evacuate_standard, inverse_rsk, rsk_biword, rsk_involution,
    GeneralizedInvolution,
};

/// Seed used by the sampled property checks unless overridden; spelled so
/// the hex dump reads "self-evac".
pub const DEFAULT_SEED: u64 = 0x5E1F_EFAC;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration cap exceeded: {what} needs {requested}, cap is {cap}")]
    CapExceeded {
        what: String,
        requested: usize,
        cap: usize,
    },
}

/// Enumeration caps and sampling parameters for the cross-check suite.
///
/// The defaults finish in well under five minutes on one core; every field
/// can be overridden with a `key=value` list (see [`Caps::with_overrides`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` any involution enumeration (filtering or constructive)
    /// will run at.
    pub max_enumeration_n: usize,
    /// `k` range for the central-symbol deletion checks on `[2k+1]`.
    pub deletion_bijection_k: usize,
    /// Even-`n` range for the explicit total vs. recurrence comparison.
    pub total_formula_n: usize,
    /// `k` range for the pair-free recurrence checks.
    pub recurrence_k: usize,
    /// `k` range for whole-row formula checks (sums, palindromes).
    pub row_formula_k: usize,
    /// `k` and `m` ranges for the count-transfer and inversion round-trips.
    pub inversion_k: usize,
    pub inversion_m: usize,
    /// Length and alphabet ranges for biword counts vs. the matrix oracle.
    pub c_oracle_n: usize,
    pub c_oracle_m: usize,
    /// Ranges for the transfer formula applied to oracle rise rows.
    pub c_from_s_k: usize,
    pub c_from_s_m: usize,
    /// Ranges for compatible-content counting over every involution.
    pub gen_count_n: usize,
    pub gen_count_m: usize,
    /// Involution size for the RSK and evacuation laws.
    pub tableau_n: usize,
    /// Involution size for the descent-mirror and complement laws.
    pub mirror_n: usize,
    /// Exhaustive biword ranges for round-trips and commutation.
    pub biword_len: usize,
    pub biword_m: usize,
    /// Alphabet range for the self-evacuation characterization check.
    pub biword_check_m: usize,
    /// Ranges for the checks restricted to self-evacuated biwords.
    pub selfevac_biword_len: usize,
    pub selfevac_biword_m: usize,
    /// Seeded random biwords for the commutation law.
    pub sample_count: usize,
    pub sample_len: usize,
    pub sample_m: usize,
    pub seed: u64,
    /// Abort threshold for matrix enumeration states.
    pub matrix_state_limit: usize,
    /// Abort threshold for brute-force content scans (`m^n` words).
    pub word_scan_limit: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_enumeration_n: 14,
            deletion_bijection_k: 6,
            total_formula_n: 60,
            recurrence_k: 30,
            row_formula_k: 15,
            inversion_k: 8,
            inversion_m: 10,
            c_oracle_n: 8,
            c_oracle_m: 4,
            c_from_s_k: 4,
            c_from_s_m: 8,
            gen_count_n: 6,
            gen_count_m: 6,
            tableau_n: 8,
            mirror_n: 10,
            biword_len: 4,
            biword_m: 3,
            biword_check_m: 4,
            selfevac_biword_len: 6,
            selfevac_biword_m: 3,
            sample_count: 1000,
            sample_len: 8,
            sample_m: 5,
            seed: DEFAULT_SEED,
            matrix_state_limit: 10_000_000,
            word_scan_limit: 10_000_000,
        }
    }
}

impl Caps {
    /// Applies overrides given as `key=value[,key=value…]`, with keys named
    /// after the struct fields.
    pub fn with_overrides(spec: &str) -> Result<Caps, String> {
        let mut caps = Caps::default();
        for item in spec.split(',').filter(|s| !s.trim().is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {item:?}"))?;
            let value = value.trim();
            let parse = || {
                value
                    .parse::<usize>()
                    .map_err(|e| format!("bad value for {key}: {e}"))
            };
            match key.trim() {
                "max_enumeration_n" => caps.max_enumeration_n = parse()?,
                "deletion_bijection_k" => caps.deletion_bijection_k = parse()?,
                "total_formula_n" => caps.total_formula_n = parse()?,
                "recurrence_k" => caps.recurrence_k = parse()?,
                "row_formula_k" => caps.row_formula_k = parse()?,
                "inversion_k" => caps.inversion_k = parse()?,
                "inversion_m" => caps.inversion_m = parse()?,
                "c_oracle_n" => caps.c_oracle_n = parse()?,
                "c_oracle_m" => caps.c_oracle_m = parse()?,
                "c_from_s_k" => caps.c_from_s_k = parse()?,
                "c_from_s_m" => caps.c_from_s_m = parse()?,
                "gen_count_n" => caps.gen_count_n = parse()?,
                "gen_count_m" => caps.gen_count_m = parse()?,
                "tableau_n" => caps.tableau_n = parse()?,
                "mirror_n" => caps.mirror_n = parse()?,
                "biword_len" => caps.biword_len = parse()?,
                "biword_m" => caps.biword_m = parse()?,
                "biword_check_m" => caps.biword_check_m = parse()?,
                "selfevac_biword_len" => caps.selfevac_biword_len = parse()?,
                "selfevac_biword_m" => caps.selfevac_biword_m = parse()?,
                "sample_count" => caps.sample_count = parse()?,
                "sample_len" => caps.sample_len = parse()?,
                "sample_m" => caps.sample_m = parse()?,
                "seed" => {
                    caps.seed = value
                        .parse::<u64>()
                        .map_err(|e| format!("bad value for seed: {e}"))?
                }
                "matrix_state_limit" => caps.matrix_state_limit = parse()?,
                "word_scan_limit" => caps.word_scan_limit = parse()?,
                other => return Err(format!("unknown cap {other:?}")),
            }
        }
        Ok(caps)
    }
}

// ---------------------------------------------------------------------------
// Involution survey: filtering oracle
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct Survey {
    total: u64,
    self_evac_by_rises: Vec<u64>,
    fpf_by_rises: Vec<u64>,
}

impl Survey {
    fn empty(n: usize) -> Survey {
        let len = n.max(1);
        Survey {
            total: 0,
            self_evac_by_rises: vec![0; len],
            fpf_by_rises: vec![0; len],
        }
    }

    fn record(&mut self, values: &[usize]) {
        self.total += 1;
        let n = values.len();
        for i in 0..n {
            if values[i] + values[n - 1 - i] != n + 1 {
                return;
            }
        }
        let rises = (1..n).filter(|&i| values[i - 1] < values[i]).count();
        self.self_evac_by_rises[rises] += 1;
        if (0..n).all(|i| values[i] != i + 1) {
            self.fpf_by_rises[rises] += 1;
        }
    }

    fn merge(mut self, other: Survey) -> Survey {
        self.total += other.total;
        for (a, b) in self
            .self_evac_by_rises
            .iter_mut()
            .zip(other.self_evac_by_rises)
        {
            *a += b;
        }
        for (a, b) in self.fpf_by_rises.iter_mut().zip(other.fpf_by_rises) {
            *a += b;
        }
        self
    }
}

/// Visits every involution of `[n]` whose positions `< from` are already
/// assigned in `values` (0 marks a free position), in lexicographic order.
fn visit_involutions(values: &mut Vec<usize>, from: usize, f: &mut impl FnMut(&[usize])) {
    let n = values.len();
    let mut p = from;
    while p < n && values[p] != 0 {
        p += 1;
    }
    if p == n {
        f(values);
        return;
    }
    values[p] = p + 1;
    visit_involutions(values, p + 1, f);
    values[p] = 0;
    for v in p + 1..n {
        if values[v] == 0 {
            values[p] = v + 1;
            values[v] = p + 1;
            visit_involutions(values, p + 1, f);
            values[p] = 0;
            values[v] = 0;
        }
    }
}

fn survey_cache() -> &'static Mutex<HashMap<usize, Arc<Survey>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Survey>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn survey_involutions(n: usize) -> Arc<Survey> {
    if let Some(hit) = survey_cache().lock().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let survey = if n < 2 {
        let mut acc = Survey::empty(n);
        let mut values = vec![0; n];
        visit_involutions(&mut values, 0, &mut |v| acc.record(v));
        acc
    } else {
        // Partition on the image of position 1: branch 0 keeps it fixed,
        // branch v pairs it with position v+1.
        (0..n)
            .into_par_iter()
            .map(|branch| {
                let mut values = vec![0usize; n];
                if branch == 0 {
                    values[0] = 1;
                } else {
                    values[0] = branch + 1;
                    values[branch] = 1;
                }
                let mut acc = Survey::empty(n);
                visit_involutions(&mut values, 1, &mut |v| acc.record(v));
                acc
            })
            .reduce(|| Survey::empty(n), Survey::merge)
    };
    let survey = Arc::new(survey);
    survey_cache()
        .lock()
        .unwrap()
        .insert(n, Arc::clone(&survey));
    survey
}

fn check_enumeration_cap(n: usize, caps: &Caps) -> Result<(), OracleError> {
    if n > caps.max_enumeration_n {
        return Err(OracleError::CapExceeded {
            what: "involution enumeration size".into(),
            requested: n,
            cap: caps.max_enumeration_n,
        });
    }
    Ok(())
}

/// Rise histogram of the self-evacuated involutions on `[n]` (optionally
/// fixed-point-free), by filtering all involutions. Entry `d` counts those
/// with exactly `d` rises; the row has length `max(n, 1)`.
pub fn brute_s_row(
    n: usize,
    fixed_point_free: bool,
    caps: &Caps,
) -> Result<Vec<BigInt>, OracleError> {
    check_enumeration_cap(n, caps)?;
    let survey = survey_involutions(n);
    let row = if fixed_point_free {
        &survey.fpf_by_rises
    } else {
        &survey.self_evac_by_rises
    };
    Ok(row.iter().map(|&c| BigInt::from(c)).collect())
}

/// Number of involutions on `[n]` of any kind, by the same filtering pass.
pub fn brute_involution_total(n: usize, caps: &Caps) -> Result<BigInt, OracleError> {
    check_enumeration_cap(n, caps)?;
    Ok(BigInt::from(survey_involutions(n).total))
}

// ---------------------------------------------------------------------------
// Symmetric-matrix oracle for generalized involutions
// ---------------------------------------------------------------------------

/// A symmetric nonnegative integer matrix: the canonical encoding of a
/// generalized involution, used as the enumeration currency of the oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    entries: Vec<Vec<usize>>,
}

impl SymmetricMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self, OracleError> {
        let dim = entries.len();
        let ok = entries.iter().all(|row| row.len() == dim)
            && (0..dim).all(|i| (0..i).all(|j| entries[i][j] == entries[j][i]));
        if !ok {
            return Err(OracleError::CapExceeded {
                what: "not a symmetric matrix".into(),
                requested: 0,
                cap: 0,
            });
        }
        Ok(SymmetricMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry_sum(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn to_biword(&self) -> GeneralizedInvolution {
        GeneralizedInvolution::from_matrix(self.entries.clone())
            .expect("symmetric matrices are valid biwords")
    }
}

/// Visits every symmetric `dim×dim` matrix with the given entry sum, by
/// assigning the upper triangle cell by cell. Aborts with `CapExceeded`
/// after `limit` emitted matrices.
fn visit_symmetric_matrices(
    dim: usize,
    sum: usize,
    limit: usize,
    f: &mut impl FnMut(&SymmetricMatrix),
) -> Result<(), OracleError> {
    let cells: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (i..dim).map(move |j| (i, j)))
        .collect();
    let mut entries = vec![vec![0usize; dim]; dim];
    let mut states = 0usize;

    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        remaining: usize,
        entries: &mut Vec<Vec<usize>>,
        states: &mut usize,
        limit: usize,
        f: &mut impl FnMut(&SymmetricMatrix),
    ) -> Result<(), OracleError> {
        if idx == cells.len() {
            if remaining == 0 {
                *states += 1;
                if *states > limit {
                    return Err(OracleError::CapExceeded {
                        what: "symmetric matrix states".into(),
                        requested: *states,
                        cap: limit,
                    });
                }
                let matrix = SymmetricMatrix {
                    entries: entries.clone(),
                };
                f(&matrix);
            }
            return Ok(());
        }
        let (i, j) = cells[idx];
        let cost = if i == j { 1 } else { 2 };
        for c in 0..=remaining / cost {
            entries[i][j] = c;
            entries[j][i] = c;
            rec(cells, idx + 1, remaining - c * cost, entries, states, limit, f)?;
        }
        entries[i][j] = 0;
        entries[j][i] = 0;
        Ok(())
    }

    rec(&cells, 0, sum, &mut entries, &mut states, limit, f)
}

/// Counts self-evacuated generalized involutions of length `n` over `[m]`
/// by enumerating symmetric matrices and applying the column-pair symmetry
/// check directly; with `even_multiplicity_only`, keeps only biwords whose
/// repetitions all have even multiplicity.
pub fn brute_c(
    n: usize,
    m: usize,
    even_multiplicity_only: bool,
    caps: &Caps,
) -> Result<BigInt, OracleError> {
    let mut count: u64 = 0;
    visit_symmetric_matrices(m, n, caps.matrix_state_limit, &mut |matrix| {
        let alpha = matrix.to_biword();
        if !alpha.is_self_evacuated() {
            return;
        }
        if even_multiplicity_only && alpha.repetitions().iter().any(|&(_, r)| r % 2 != 0) {
            return;
        }
        count += 1;
    })?;
    Ok(BigInt::from(count))
}

/// All generalized involutions of length `n` over `[m]`, via the matrix
/// enumeration.
fn collect_biwords(
    n: usize,
    m: usize,
    caps: &Caps,
) -> Result<Vec<GeneralizedInvolution>, OracleError> {
    let mut out = Vec::new();
    visit_symmetric_matrices(m, n, caps.matrix_state_limit, &mut |matrix| {
        out.push(matrix.to_biword());
    })?;
    Ok(out)
}

/// Counts the contents compatible with `sigma` over `[m]` by scanning every
/// word in `[m]^n` and keeping the weakly increasing ones that are strict at
/// each rise.
pub fn brute_gen_count(sigma: &Involution, m: usize, caps: &Caps) -> Result<BigInt, OracleError> {
    let n = sigma.n();
    let scan = (m as u128).saturating_pow(n as u32);
    if scan > caps.word_scan_limit as u128 {
        return Err(OracleError::CapExceeded {
            what: format!("content scan {m}^{n}"),
            requested: usize::MAX,
            cap: caps.word_scan_limit,
        });
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let descent_at: Vec<bool> = (1..n).map(|i| sigma.image(i) > sigma.image(i + 1)).collect();
    let mut word = vec![1usize; n];
    let mut count: u64 = 0;
    loop {
        let compatible = (1..n).all(|i| {
            word[i - 1] <= word[i] && (descent_at[i - 1] || word[i - 1] < word[i])
        });
        if compatible {
            count += 1;
        }
        let mut i = n;
        while i > 0 && word[i - 1] == m {
            word[i - 1] = 1;
            i -= 1;
        }
        if i == 0 {
            break;
        }
        word[i - 1] += 1;
    }
    Ok(BigInt::from(count))
}

fn sample_biword(rng: &mut ChaCha8Rng, max_len: usize, max_m: usize) -> GeneralizedInvolution {
    let m = rng.gen_range(1..=max_m);
    let n = rng.gen_range(0..=max_len);
    let mut matrix = vec![vec![0usize; m]; m];
    let mut remaining = n;
    while remaining > 0 {
        let i = rng.gen_range(0..m);
        if remaining == 1 {
            matrix[i][i] += 1;
            remaining -= 1;
            continue;
        }
        let j = rng.gen_range(0..m);
        if i == j {
            matrix[i][i] += 1;
            remaining -= 1;
        } else {
            matrix[i][j] += 1;
            matrix[j][i] += 1;
            remaining -= 2;
        }
    }
    GeneralizedInvolution::from_matrix(matrix).expect("sampled matrix is symmetric")
}

// ---------------------------------------------------------------------------
// Cross-check harness
// ---------------------------------------------------------------------------

/// Which identities a `verify` run executes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifySuite {
    All,
    Formulas,
    Tableaux,
    Witnesses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Parameter assignment reproducing the mismatch, e.g. `"k=3"`.
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    Match,
    Mismatch { counterexample: Counterexample },
}

impl CheckStatus {
    pub fn is_match(&self) -> bool {
        matches!(self, CheckStatus::Match)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityRecord {
    pub identity: String,
    pub caps: String,
    #[serde(flatten)]
    pub status: CheckStatus,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    pub suite: String,
    pub seed: u64,
    pub records: Vec<IdentityRecord>,
}

impl CrossCheckReport {
    pub fn all_match(&self) -> bool {
        self.records.iter().all(|r| r.status.is_match())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

type CheckResult = Result<(), Counterexample>;

fn mismatch(params: String, lhs: impl ToString, rhs: impl ToString) -> CheckResult {
    Err(Counterexample {
        params,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

fn expect_eq<T: PartialEq + ToString>(params: impl Fn() -> String, lhs: T, rhs: T) -> CheckResult {
    if lhs == rhs {
        Ok(())
    } else {
        mismatch(params(), lhs.to_string(), rhs.to_string())
    }
}

fn pad(row: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = row.to_vec();
    while out.len() < len {
        out.push(BigInt::zero());
    }
    out
}

fn row_string(row: &[BigInt]) -> String {
    let items: Vec<String> = row.iter().map(BigInt::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Runs the identity suite at the given caps and returns one record per
/// identity. `coefficient` selects which coefficient the pair-free
/// recurrence step check uses; the printed literal one is refuted at
/// `k = 3`.
pub fn crosscheck(
    suite: VerifySuite,
    caps: &Caps,
    coefficient: RecurrenceCoefficient,
) -> CrossCheckReport {
    let suite_name = match suite {
        VerifySuite::All => "all",
        VerifySuite::Formulas => "formulas",
        VerifySuite::Tableaux => "tableaux",
        VerifySuite::Witnesses => "witnesses",
    };
    let mut records = Vec::new();
    let included = |s: VerifySuite| suite == VerifySuite::All || suite == s;

    let mut run = |name: &str, scope: String, member: VerifySuite, check: &dyn Fn() -> CheckResult| {
        if !included(member) {
            return;
        }
        let start = Instant::now();
        let status = match check() {
            Ok(()) => CheckStatus::Match,
            Err(counterexample) => CheckStatus::Mismatch { counterexample },
        };
        records.push(IdentityRecord {
            identity: name.to_string(),
            caps: scope,
            status,
            millis: start.elapsed().as_millis(),
        });
    };

    // ---- formulas -------------------------------------------------------

    run(
        "total_explicit_vs_recurrence",
        format!("even n <= {}", caps.total_formula_n),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.total_formula_n / 2 {
                expect_eq(
                    || format!("n={}", 2 * k),
                    s_total(2 * k),
                    s_total_rec(2 * k).unwrap(),
                )?;
            }
            Ok(())
        },
    );

    run(
        "total_odd_reduces_to_even",
        format!("k <= {}", caps.recurrence_k),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.recurrence_k {
                expect_eq(|| format!("k={k}"), s_total(2 * k + 1), s_total(2 * k))?;
            }
            Ok(())
        },
    );

    run(
        "total_vs_constructive_enumeration",
        format!("n <= {}", caps.max_enumeration_n),
        VerifySuite::Formulas,
        &|| {
            for n in 0..=caps.max_enumeration_n {
                let count =
                    enumerate_involutions(n, InvolutionFilter::SelfEvacuated).count();
                expect_eq(|| format!("n={n}"), s_total(n), BigInt::from(count))?;
            }
            Ok(())
        },
    );

    run(
        "total_vs_filter_oracle",
        format!("n <= {}", caps.max_enumeration_n),
        VerifySuite::Formulas,
        &|| {
            for n in 0..=caps.max_enumeration_n {
                let row = brute_s_row(n, false, caps).map_err(|e| Counterexample {
                    params: format!("n={n}"),
                    lhs: e.to_string(),
                    rhs: "oracle row".into(),
                })?;
                let sum: BigInt = row.iter().sum();
                expect_eq(|| format!("n={n}"), s_total(n), sum)?;
            }
            Ok(())
        },
    );

    run(
        "center_deletion_totals_oracle",
        format!("k <= {}", caps.deletion_bijection_k),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.deletion_bijection_k {
                if 2 * k + 1 > caps.max_enumeration_n {
                    break;
                }
                let even: BigInt = brute_s_row(2 * k, false, caps).unwrap().iter().sum();
                let odd: BigInt = brute_s_row(2 * k + 1, false, caps).unwrap().iter().sum();
                expect_eq(|| format!("k={k}"), even, odd)?;
            }
            Ok(())
        },
    );

    run(
        "center_deletion_bijection",
        format!("k <= {}", caps.deletion_bijection_k),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.deletion_bijection_k {
                if 2 * k + 1 > caps.max_enumeration_n {
                    break;
                }
                let even: std::collections::BTreeSet<Involution> =
                    enumerate_involutions(2 * k, InvolutionFilter::SelfEvacuated).collect();
                let mut images = std::collections::BTreeSet::new();
                for sigma in enumerate_involutions(2 * k + 1, InvolutionFilter::SelfEvacuated) {
                    let image = sigma.remove_central_fixed_point().ok_or(Counterexample {
                        params: format!("k={k}, sigma={sigma}"),
                        lhs: "center not fixed".into(),
                        rhs: "center fixed".into(),
                    })?;
                    if !images.insert(image) {
                        return mismatch(format!("k={k}, sigma={sigma}"), "duplicate image", "");
                    }
                }
                expect_eq(
                    || format!("k={k}"),
                    images.len().to_string(),
                    even.len().to_string(),
                )?;
                if images != even {
                    return mismatch(format!("k={k}"), "image set", "self-evacuated set");
                }
            }
            Ok(())
        },
    );

    run(
        "rise_row_sums",
        format!("k <= {}", caps.row_formula_k),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.row_formula_k {
                let sum: BigInt = (0..2 * k.max(1))
                    .map(|d| s_by_rises(2 * k, d).unwrap())
                    .sum();
                expect_eq(|| format!("k={k}"), sum, s_total(2 * k))?;
            }
            Ok(())
        },
    );

    run(
        "pair_free_rise_row_sums",
        format!("k <= {}", caps.row_formula_k),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.row_formula_k {
                let sum: BigInt = (0..(2 * k).max(1))
                    .map(|d| s_star_by_rises(2 * k, d).unwrap())
                    .sum();
                expect_eq(|| format!("k={k}"), sum, s_star_total(2 * k).unwrap())?;
            }
            Ok(())
        },
    );

    run(
        "rise_row_palindrome",
        format!("k <= {}", caps.row_formula_k),
        VerifySuite::Formulas,
        &|| {
            for k in 1..=caps.row_formula_k {
                for d in 0..2 * k {
                    expect_eq(
                        || format!("k={k}, d={d}"),
                        s_by_rises(2 * k, d).unwrap(),
                        s_by_rises(2 * k, 2 * k - 1 - d).unwrap(),
                    )?;
                }
            }
            Ok(())
        },
    );

    run(
        "pair_free_rise_row_palindrome",
        format!("k <= {}", caps.row_formula_k),
        VerifySuite::Formulas,
        &|| {
            for k in 1..=caps.row_formula_k {
                for d in 0..=2 * k - 2 {
                    expect_eq(
                        || format!("k={k}, d={d}"),
                        s_star_by_rises(2 * k, d).unwrap(),
                        s_star_by_rises(2 * k, 2 * k - 2 - d).unwrap(),
                    )?;
                }
            }
            Ok(())
        },
    );

    run(
        "biword_total_from_rise_row",
        format!("k <= {}, m <= {}", caps.inversion_k, caps.inversion_m),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.inversion_k {
                let row: Vec<BigInt> = (0..(2 * k).max(1))
                    .map(|d| s_by_rises(2 * k, d).unwrap())
                    .collect();
                for m in 1..=caps.inversion_m {
                    expect_eq(
                        || format!("k={k}, m={m}"),
                        c_from_s(2 * k, m, &row).unwrap(),
                        c_count(2 * k, m),
                    )?;
                }
            }
            Ok(())
        },
    );

    run(
        "rise_row_inversion_roundtrip",
        format!("k <= {}", caps.inversion_k),
        VerifySuite::Formulas,
        &|| {
            for k in 1..=caps.inversion_k {
                let row: Vec<BigInt> =
                    (0..2 * k).map(|d| s_by_rises(2 * k, d).unwrap()).collect();
                // Transfer the row to biword totals for every alphabet, then
                // invert those totals back and compare coefficientwise.
                let c_row: Vec<BigInt> = (1..=2 * k)
                    .map(|m| c_from_s(2 * k, m, &row).unwrap())
                    .collect();
                for d in 0..2 * k {
                    let mut back = BigInt::zero();
                    for j in 1..=d + 1 {
                        let half = (d + 1 - j) / 2;
                        let sign = (d as i64 - j as i64 + 2).div_euclid(2).rem_euclid(2) == 1;
                        let term = crate::formulas::binomial(k, half) * &c_row[j - 1];
                        if sign {
                            back -= term;
                        } else {
                            back += term;
                        }
                    }
                    expect_eq(|| format!("k={k}, d={d}"), back, row[d].clone())?;
                }
            }
            Ok(())
        },
    );

    run(
        "pair_free_inversion_roundtrip",
        format!("k <= {}", caps.inversion_k),
        VerifySuite::Formulas,
        &|| {
            for k in 1..=caps.inversion_k {
                let row: Vec<BigInt> = (0..2 * k - 1)
                    .map(|d| s_star_by_rises(2 * k, d).unwrap())
                    .collect();
                let c_row: Vec<BigInt> = (1..=2 * k)
                    .map(|m| c_star_from_s_star(2 * k, m, &row).unwrap())
                    .collect();
                for d in 0..2 * k - 1 {
                    let mut back = BigInt::zero();
                    for j in 1..=d + 1 {
                        let half = (d + 1 - j) / 2;
                        let sign = (d as i64 - j as i64 + 2).div_euclid(2).rem_euclid(2) == 1;
                        let term = crate::formulas::binomial(k, half) * &c_row[j - 1];
                        if sign {
                            back -= term;
                        } else {
                            back += term;
                        }
                    }
                    expect_eq(|| format!("k={k}, d={d}"), back, row[d].clone())?;
                }
            }
            Ok(())
        },
    );

    run(
        "biword_total_from_oracle_rise_row",
        format!("k <= {}, m <= {}", caps.c_from_s_k, caps.c_from_s_m),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.c_from_s_k {
                let row = brute_s_row(2 * k, false, caps).unwrap();
                for m in 1..=caps.c_from_s_m {
                    expect_eq(
                        || format!("k={k}, m={m}"),
                        c_from_s(2 * k, m, &row).unwrap(),
                        c_count(2 * k, m),
                    )?;
                }
            }
            Ok(())
        },
    );

    let coefficient_note = match coefficient {
        RecurrenceCoefficient::Corrected => "coefficient 2k-2",
        RecurrenceCoefficient::PrintedLiteral => "printed coefficient 2n-2, n=2k",
    };
    run(
        "pair_free_total_recurrence_step",
        format!("3 <= k <= {} ({coefficient_note})", caps.recurrence_k),
        VerifySuite::Formulas,
        &|| {
            // Start at k = 3, the first instance where both lower-order
            // terms count involutions on a positive number of symbols.
            for k in 3..=caps.recurrence_k {
                expect_eq(
                    || format!("k={k}"),
                    s_star_recurrence_rhs(k, coefficient),
                    s_star_total(2 * k).unwrap(),
                )?;
            }
            Ok(())
        },
    );

    run(
        "pair_free_total_explicit_vs_recurrence",
        format!("k <= {}", caps.recurrence_k),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.recurrence_k {
                expect_eq(
                    || format!("k={k}"),
                    s_star_total(2 * k).unwrap(),
                    s_star_total_rec(2 * k).unwrap(),
                )?;
            }
            Ok(())
        },
    );

    run(
        "pair_free_total_vs_filter_oracle",
        format!("even n <= {}", caps.max_enumeration_n),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.max_enumeration_n / 2 {
                let sum: BigInt = brute_s_row(2 * k, true, caps).unwrap().iter().sum();
                expect_eq(|| format!("n={}", 2 * k), s_star_total(2 * k).unwrap(), sum)?;
            }
            Ok(())
        },
    );

    run(
        "rise_rows_formula_vs_oracle",
        format!("n <= {}", caps.max_enumeration_n),
        VerifySuite::Formulas,
        &|| {
            for n in 0..=caps.max_enumeration_n {
                let oracle = brute_s_row(n, false, caps).unwrap();
                let formula = pad(
                    polynomial_of(PolynomialFamily::S, n).unwrap().coefficients(),
                    oracle.len(),
                );
                if formula != oracle {
                    return mismatch(
                        format!("n={n}"),
                        row_string(&formula),
                        row_string(&oracle),
                    );
                }
            }
            Ok(())
        },
    );

    run(
        "pair_free_rise_rows_formula_vs_oracle",
        format!("even n <= {}", caps.max_enumeration_n),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.max_enumeration_n / 2 {
                let oracle = brute_s_row(2 * k, true, caps).unwrap();
                let formula = pad(
                    polynomial_of(PolynomialFamily::SStar, 2 * k)
                        .unwrap()
                        .coefficients(),
                    oracle.len(),
                );
                if formula != oracle {
                    return mismatch(
                        format!("n={}", 2 * k),
                        row_string(&formula),
                        row_string(&oracle),
                    );
                }
            }
            Ok(())
        },
    );

    run(
        "biword_totals_vs_matrix_oracle",
        format!("even n <= {}, m <= {}", caps.c_oracle_n, caps.c_oracle_m),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.c_oracle_n / 2 {
                for m in 1..=caps.c_oracle_m {
                    expect_eq(
                        || format!("n={}, m={m}", 2 * k),
                        c_count(2 * k, m),
                        brute_c(2 * k, m, false, caps).unwrap(),
                    )?;
                }
            }
            Ok(())
        },
    );

    run(
        "odd_biword_totals_parity_rules",
        format!("odd n <= {}, m <= {}", caps.c_oracle_n - 1, caps.c_oracle_m),
        VerifySuite::Formulas,
        &|| {
            for k in 0..caps.c_oracle_n / 2 {
                let n = 2 * k + 1;
                for m in 1..=caps.c_oracle_m {
                    let oracle = brute_c(n, m, false, caps).unwrap();
                    let expected = if m % 2 == 0 {
                        BigInt::zero()
                    } else {
                        brute_c(n - 1, m, false, caps).unwrap()
                    };
                    expect_eq(|| format!("n={n}, m={m} (oracle rule)"), oracle.clone(), expected)?;
                    expect_eq(|| format!("n={n}, m={m} (formula)"), c_count(n, m), oracle)?;
                }
            }
            Ok(())
        },
    );

    run(
        "pair_free_biword_totals_vs_matrix_oracle",
        format!("even n <= {}, m <= {}", caps.c_oracle_n, caps.c_oracle_m),
        VerifySuite::Formulas,
        &|| {
            for k in 0..=caps.c_oracle_n / 2 {
                for m in 1..=caps.c_oracle_m {
                    expect_eq(
                        || format!("n={}, m={m}", 2 * k),
                        c_star_count(2 * k, m).unwrap(),
                        brute_c(2 * k, m, true, caps).unwrap(),
                    )?;
                }
            }
            Ok(())
        },
    );

    run(
        "gen_counts_vs_content_oracle",
        format!("n <= {}, m <= {}", caps.gen_count_n, caps.gen_count_m),
        VerifySuite::Formulas,
        &|| {
            for n in 0..=caps.gen_count_n {
                for sigma in enumerate_involutions(n, InvolutionFilter::All) {
                    let t = sigma.rise_count();
                    for m in 1..=caps.gen_count_m {
                        expect_eq(
                            || format!("sigma={sigma}, m={m}"),
                            gen_count(n, m, t),
                            brute_gen_count(&sigma, m, caps).unwrap(),
                        )?;
                    }
                }
            }
            Ok(())
        },
    );

    // ---- tableaux -------------------------------------------------------

    run(
        "rsk_roundtrip",
        format!("n <= {}", caps.tableau_n),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.tableau_n {
                for sigma in enumerate_involutions(n, InvolutionFilter::All) {
                    let back = inverse_rsk(&rsk_involution(&sigma));
                    if back != sigma {
                        return mismatch(format!("sigma={sigma}"), back, sigma);
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "evacuation_matches_complement_conjugation",
        format!("n <= {}", caps.tableau_n),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.tableau_n {
                for sigma in enumerate_involutions(n, InvolutionFilter::All) {
                    let slid = evacuate_standard(&rsk_involution(&sigma));
                    let conjugated = rsk_involution(&sigma.complement_conjugate());
                    if slid != conjugated {
                        return mismatch(
                            format!("sigma={sigma}"),
                            format!("{slid}"),
                            format!("{conjugated}"),
                        );
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "evacuation_involutive",
        format!("n <= {}", caps.tableau_n),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.tableau_n {
                for sigma in enumerate_involutions(n, InvolutionFilter::All) {
                    let t = rsk_involution(&sigma);
                    let back = evacuate_standard(&evacuate_standard(&t));
                    if back != t {
                        return mismatch(format!("sigma={sigma}"), format!("{back}"), format!("{t}"));
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "descent_mirror_under_evacuation",
        format!("n <= {}", caps.mirror_n),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.mirror_n {
                for sigma in enumerate_involutions(n, InvolutionFilter::All) {
                    let ev = sigma.complement_conjugate();
                    let mirrored = sigma.descent_set().mirrored(n);
                    if ev.descent_set() != mirrored {
                        return mismatch(
                            format!("sigma={sigma}"),
                            format!("{}", ev.descent_set()),
                            format!("{mirrored}"),
                        );
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "complement_compose_descent_exchange",
        format!("n <= {}", caps.mirror_n),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.mirror_n {
                for sigma in enumerate_involutions(n, InvolutionFilter::SelfEvacuated) {
                    let tau = sigma.complement_compose().map_err(|e| Counterexample {
                        params: format!("sigma={sigma}"),
                        lhs: e.to_string(),
                        rhs: "an involution".into(),
                    })?;
                    if !tau.is_self_evacuated() {
                        return mismatch(format!("sigma={sigma}"), tau, "self-evacuated");
                    }
                    if tau.descent_set() != sigma.rise_set() {
                        return mismatch(
                            format!("sigma={sigma}"),
                            format!("{}", tau.descent_set()),
                            format!("{}", sigma.rise_set()),
                        );
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "biword_rsk_roundtrip",
        format!("len <= {}, m <= {}", caps.biword_len, caps.biword_m),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.biword_len {
                for m in 1..=caps.biword_m {
                    for alpha in collect_biwords(n, m, caps).unwrap() {
                        let back = biword_of_tableau(&rsk_biword(&alpha));
                        if back != alpha {
                            return mismatch(
                                format!("alpha={alpha}, m={m}"),
                                format!("{back}"),
                                format!("{alpha}"),
                            );
                        }
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "biword_evacuation_involutive",
        format!("len <= {}, m <= {}", caps.biword_len, caps.biword_m),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.biword_len {
                for m in 1..=caps.biword_m {
                    for alpha in collect_biwords(n, m, caps).unwrap() {
                        if alpha.evacuate().evacuate() != alpha {
                            return mismatch(format!("alpha={alpha}, m={m}"), "ev(ev(alpha))", "alpha");
                        }
                        // symbol i occurs in alpha as often as m+1-i in ev(alpha)
                        let ev = alpha.evacuate();
                        let count = |a: &GeneralizedInvolution, s: usize| {
                            a.content().word().iter().filter(|&&x| x == s).count()
                        };
                        for s in 1..=m {
                            if count(&alpha, s) != count(&ev, m + 1 - s) {
                                return mismatch(
                                    format!("alpha={alpha}, m={m}, symbol={s}"),
                                    count(&alpha, s).to_string(),
                                    count(&ev, m + 1 - s).to_string(),
                                );
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "polarization_commutes_with_evacuation",
        format!("len <= {}, m <= {}", caps.biword_len, caps.biword_m),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.biword_len {
                for m in 1..=caps.biword_m {
                    for alpha in collect_biwords(n, m, caps).unwrap() {
                        let lhs = alpha.evacuate().polarize();
                        let rhs = alpha.polarize().complement_conjugate();
                        if lhs != rhs {
                            return mismatch(format!("alpha={alpha}, m={m}"), lhs, rhs);
                        }
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "polarization_commutes_with_evacuation_sampled",
        format!(
            "{} samples, len <= {}, m <= {}, seed {}",
            caps.sample_count, caps.sample_len, caps.sample_m, caps.seed
        ),
        VerifySuite::Tableaux,
        &|| {
            let mut rng = ChaCha8Rng::seed_from_u64(caps.seed);
            for i in 0..caps.sample_count {
                let alpha = sample_biword(&mut rng, caps.sample_len, caps.sample_m);
                let lhs = alpha.evacuate().polarize();
                let rhs = alpha.polarize().complement_conjugate();
                if lhs != rhs {
                    return mismatch(format!("sample {i}: alpha={alpha}"), lhs, rhs);
                }
            }
            Ok(())
        },
    );

    run(
        "biword_self_evacuation_characterization",
        format!("len <= {}, m <= {}", caps.biword_len, caps.biword_check_m),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.biword_len {
                for m in 1..=caps.biword_check_m {
                    for alpha in collect_biwords(n, m, caps).unwrap() {
                        let by_matrix = alpha.is_self_evacuated();
                        let by_parts = alpha.content().is_symmetric(m)
                            && alpha.polarize().is_self_evacuated();
                        if by_matrix != by_parts {
                            return mismatch(
                                format!("alpha={alpha}, m={m}"),
                                by_matrix.to_string(),
                                by_parts.to_string(),
                            );
                        }
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "self_evacuated_biword_polarization",
        format!(
            "len <= {}, m <= {}",
            caps.selfevac_biword_len, caps.selfevac_biword_m
        ),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.selfevac_biword_len {
                for m in 1..=caps.selfevac_biword_m {
                    for alpha in collect_biwords(n, m, caps).unwrap() {
                        if !alpha.is_self_evacuated() {
                            continue;
                        }
                        if !alpha.polarize().is_self_evacuated() {
                            return mismatch(
                                format!("alpha={alpha}, m={m}"),
                                alpha.polarize(),
                                "self-evacuated polarization",
                            );
                        }
                        if !alpha.content().is_symmetric(m) {
                            return mismatch(
                                format!("alpha={alpha}, m={m}"),
                                "asymmetric content",
                                "symmetric content",
                            );
                        }
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "even_multiplicity_iff_fixed_point_free_polarization",
        format!(
            "len <= {}, m <= {}",
            caps.selfevac_biword_len, caps.selfevac_biword_m
        ),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.selfevac_biword_len {
                for m in 1..=caps.selfevac_biword_m {
                    for alpha in collect_biwords(n, m, caps).unwrap() {
                        if !alpha.is_self_evacuated() {
                            continue;
                        }
                        let even = alpha.repetitions().iter().all(|&(_, r)| r % 2 == 0);
                        let fpf = !alpha.polarize().has_fixed_point();
                        if even != fpf {
                            return mismatch(
                                format!("alpha={alpha}, m={m}"),
                                format!("even multiplicities: {even}"),
                                format!("fixed-point-free polarization: {fpf}"),
                            );
                        }
                    }
                }
            }
            Ok(())
        },
    );

    run(
        "gen_enumeration_matches_count",
        format!("n <= {}, m <= {}", caps.gen_count_n, caps.gen_count_m),
        VerifySuite::Tableaux,
        &|| {
            for n in 0..=caps.gen_count_n {
                for sigma in enumerate_involutions(n, InvolutionFilter::All) {
                    for m in 1..=caps.gen_count_m {
                        let mut count = 0usize;
                        for alpha in enumerate_gen(&sigma, m, false).unwrap() {
                            if alpha.polarize() != sigma {
                                return mismatch(
                                    format!("sigma={sigma}, m={m}, alpha={alpha}"),
                                    alpha.polarize(),
                                    sigma,
                                );
                            }
                            count += 1;
                        }
                        expect_eq(
                            || format!("sigma={sigma}, m={m}"),
                            BigInt::from(count),
                            gen_count(n, m, sigma.rise_count()),
                        )?;
                    }
                }
            }
            Ok(())
        },
    );

    // ---- witnesses ------------------------------------------------------

    run(
        "log_concavity_failure_witness",
        "n = 100, d <= 2".into(),
        VerifySuite::Witnesses,
        &|| {
            let s0 = s_by_rises(100, 0).unwrap();
            let s1 = s_by_rises(100, 1).unwrap();
            let s2 = s_by_rises(100, 2).unwrap();
            expect_eq(|| "n=100, d=0".into(), s0.clone(), BigInt::from(1))?;
            expect_eq(|| "n=100, d=1".into(), s1.clone(), BigInt::from(50))?;
            expect_eq(|| "n=100, d=2".into(), s2.clone(), BigInt::from(11950))?;
            if &s0 * &s2 <= &s1 * &s1 {
                return mismatch(
                    "n=100".into(),
                    format!("{}", &s0 * &s2),
                    format!("> {}", &s1 * &s1),
                );
            }
            Ok(())
        },
    );

    run(
        "unimodality_failure_witness",
        "pair-free family, n = 8".into(),
        VerifySuite::Witnesses,
        &|| {
            let poly = polynomial_of(PolynomialFamily::SStar, 8).unwrap();
            let expected: Vec<BigInt> = [1, 2, 7, 5, 7, 2, 1].iter().map(|&v| BigInt::from(v)).collect();
            if poly.coefficients() != expected {
                return mismatch(
                    "n=8".into(),
                    row_string(poly.coefficients()),
                    row_string(&expected),
                );
            }
            let report = analyze(&poly);
            if report.unimodal || report.not_unimodal_witness != Some((2, 3, 4)) {
                return mismatch(
                    "n=8".into(),
                    format!("{:?}", report.not_unimodal_witness),
                    "witness (2, 3, 4)".to_string(),
                );
            }
            if report.log_concave {
                return mismatch("n=8".into(), "log-concave", "not log-concave");
            }
            if !report.symmetric {
                return mismatch("n=8".into(), "asymmetric", "symmetric");
            }
            Ok(())
        },
    );

    CrossCheckReport {
        suite: suite_name.to_string(),
        seed: caps.seed,
        records,
    }
}
