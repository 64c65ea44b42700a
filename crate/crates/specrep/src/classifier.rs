//! Closed-form classification of eigenvalue spectra.
//!
//! For `S_n` the decision procedure matches a short list of exceptional
//! `(lambda, mu)` pairs first, then tests the two sumset cases driven by the
//! lcm condition, and otherwise reports the full set of `o`-th roots of
//! unity. The alternating groups reduce to the `S_n` answer except for split
//! characters on their diagonal-hook classes, which have their own small
//! table. Everything here is validated against the character-theoretic
//! oracle by [`verify_range`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::characters::{AnCharLabel, AnClass, Sign};
use crate::cyclotomic::MinPoly;
use crate::partitions::{partitions_of, CycleType, Partition};
use crate::spectrum::{spectrum_oracle, SpectrumSet};
use crate::{Error, Result};

/// Which family of groups a query addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Symmetric,
    Alternating,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Group::Symmetric { "S" } else { "A" })
    }
}

/// The matched case of the classification theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CaseTag {
    SnI,
    SnII,
    SnIII,
    SnIV,
    SnV,
    SnVI,
    SnVII,
    SnVIII,
    SnIX,
    SnX,
    SnXI,
    SnFull,
    AnI,
    AnII,
    AnIII,
    AnIV,
    AnV,
    AnVI,
    AnVII,
    AnVIII,
    AnIX,
    AnX,
    AnFull,
}

impl CaseTag {
    /// Roman-numeral name as used in the classification tables.
    pub fn roman(&self) -> &'static str {
        use CaseTag::*;
        match self {
            SnI | AnI => "i",
            SnII | AnII => "ii",
            SnIII | AnIII => "iii",
            SnIV | AnIV => "iv",
            SnV | AnV => "v",
            SnVI | AnVI => "vi",
            SnVII | AnVII => "vii",
            SnVIII | AnVIII => "viii",
            SnIX | AnIX => "ix",
            SnX | AnX => "x",
            SnXI => "xi",
            SnFull | AnFull => "full",
        }
    }

    pub fn is_full(&self) -> bool {
        matches!(self, CaseTag::SnFull | CaseTag::AnFull)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.roman())
    }
}

/// A classified spectrum: the matched case, the eigenvalue exponent set, and
/// the minimal polynomial over it.
#[derive(Debug, Clone)]
pub struct ClassifiedResult {
    case: CaseTag,
    spectrum: SpectrumSet,
    minpoly: MinPoly,
}

impl ClassifiedResult {
    fn new(case: CaseTag, order: u64, exponents: BTreeSet<u64>) -> Self {
        debug_assert_eq!(case.is_full(), exponents.len() as u64 == order);
        let spectrum = SpectrumSet::from_exponents(order, exponents.clone());
        let minpoly = MinPoly::from_exponents(order, exponents).expect("nonempty spectrum");
        ClassifiedResult { case, spectrum, minpoly }
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    pub fn spectrum(&self) -> &SpectrumSet {
        &self.spectrum
    }

    pub fn minpoly(&self) -> &MinPoly {
        &self.minpoly
    }
}

/// The sumset `A(mu, t)`: exponents of all products of `t` roots of unity,
/// each of order dividing some part of `mu`, parts reusable. `t = 0` gives
/// `{0}` (the empty product).
pub fn sp_formula_a(mu: &CycleType, t: usize) -> SpectrumSet {
    let o = mu.order();
    let mut factor: BTreeSet<u64> = BTreeSet::new();
    for &r in mu.parts() {
        let step = o / r as u64;
        for k in 0..r as u64 {
            factor.insert(k * step);
        }
    }
    let mut acc: BTreeSet<u64> = [0u64].into_iter().collect();
    for _ in 0..t {
        if acc.len() as u64 == o {
            break; // sumsets only grow: 1 is always an admissible factor
        }
        let mut next = BTreeSet::new();
        for &a in &acc {
            for &b in &factor {
                next.insert((a + b) % o);
            }
        }
        acc = next;
    }
    SpectrumSet::from_exponents(o, acc)
}

/// True iff some multiset of `t` part values of `mu` (repetition allowed)
/// has lcm equal to the order. Equivalently, some subset of distinct part
/// values of size at most `t` reaches the lcm; for `t = 0` only the trivial
/// order qualifies (empty product).
pub fn lcm_selection_exists(mu: &CycleType, t: usize) -> bool {
    let o = mu.order();
    if o == 1 {
        return true; // the empty selection has lcm 1
    }
    if t == 0 {
        return false;
    }
    let mut distinct: Vec<u64> = mu.parts().iter().map(|&r| r as u64).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let k = distinct.len();
    for mask in 1u64..(1 << k) {
        if (mask.count_ones() as usize) > t {
            continue;
        }
        let mut l: u64 = 1;
        for (i, &d) in distinct.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l = num_integer::lcm(l, d);
            }
        }
        if l == o {
            return true;
        }
    }
    false
}

fn full_minus(o: u64, removed: &[u64]) -> BTreeSet<u64> {
    (0..o).filter(|e| !removed.contains(e)).collect()
}

/// Matches the finite list of exceptional `S_n` pairs; must run before the
/// sumset cases, which would misreport these pairs as full.
fn match_sn_exceptional(lambda: &Partition, mu: &CycleType) -> Option<(CaseTag, BTreeSet<u64>)> {
    let n = lambda.size();
    let o = mu.order();
    let lp = lambda.parts();
    let mp = mu.parts();

    let is_hook_two = |p: &[usize]| p.len() == n - 1 && p[0] == 2 && p[1..].iter().all(|&x| x == 1);
    let is_two_two_hook =
        |p: &[usize]| p.len() == n - 2 && p[0] == 2 && p[1] == 2 && p[2..].iter().all(|&x| x == 1);

    // (iii) standard representation on an n-cycle.
    if n >= 3 && lp == [n - 1, 1] && mp == [n] {
        return Some((CaseTag::SnIII, full_minus(o, &[0])));
    }
    // (iv) its conjugate: remove -1 for even n, 1 for odd n.
    if n >= 4 && is_hook_two(lp) && mp == [n] {
        let removed = if n.is_multiple_of(2) { o / 2 } else { 0 };
        return Some((CaseTag::SnIV, full_minus(o, &[removed])));
    }
    // (v)/(vi) the (n-2,2) pair on class (n-2,2), odd n.
    if n >= 5 && n % 2 == 1 && mp == [n - 2, 2] {
        if is_two_two_hook(lp) {
            return Some((CaseTag::SnV, full_minus(o, &[0])));
        }
        if lp == [n - 2, 2] {
            return Some((CaseTag::SnVI, full_minus(o, &[o / 2])));
        }
    }
    // (vii) lambda = (2,2) on three classes of S_4.
    if lp == [2, 2] {
        match mp {
            [4] => return Some((CaseTag::SnVII, [0, 2].into_iter().collect())),
            [3, 1] => return Some((CaseTag::SnVII, [1, 2].into_iter().collect())),
            [2, 2] => return Some((CaseTag::SnVII, [0].into_iter().collect())),
            _ => {}
        }
    }
    // (viii)/(ix) the two square shapes on a 6-cycle.
    if mp == [6] {
        if lp == [3, 3] {
            return Some((CaseTag::SnVIII, full_minus(6, &[2, 4])));
        }
        if lp == [2, 2, 2] {
            return Some((CaseTag::SnIX, full_minus(6, &[1, 5])));
        }
    }
    // (x)/(xi) the remaining finite list.
    let pair_x = [
        (&[2usize, 2, 2][..], &[3usize, 2, 1][..]),
        (&[4, 4][..], &[5, 3][..]),
        (&[2, 2, 2, 2][..], &[5, 3][..]),
        (&[2, 2, 2, 2, 2][..], &[5, 3, 2][..]),
    ];
    if pair_x.iter().any(|&(l, m)| lp == l && mp == m) {
        return Some((CaseTag::SnX, full_minus(o, &[0])));
    }
    let pair_xi = [
        (&[3usize, 3][..], &[3usize, 2, 1][..]),
        (&[5, 5][..], &[5, 3, 2][..]),
    ];
    if pair_xi.iter().any(|&(l, m)| lp == l && mp == m) {
        return Some((CaseTag::SnXI, full_minus(o, &[o / 2])));
    }
    None
}

/// The closed-form spectrum of `rho_lambda(sigma)` for `sigma` of cycle type
/// `mu` in `S_n`.
pub fn classify_sn(lambda: &Partition, mu: &CycleType) -> Result<ClassifiedResult> {
    let n = lambda.size();
    if n != mu.size() {
        return Err(Error::SizeMismatch { lambda: n, mu: mu.size() });
    }
    if n < 2 {
        return Err(Error::Precondition("classification needs n >= 2".into()));
    }
    let o = mu.order();
    if let Some((tag, exps)) = match_sn_exceptional(lambda, mu) {
        return Ok(ClassifiedResult::new(tag, o, exps));
    }
    let t_row = n - lambda.first_part();
    let t_col = n - lambda.conjugate().first_part();
    let row_applies = !lcm_selection_exists(mu, t_row);
    let col_applies = !lcm_selection_exists(mu, t_col);
    if row_applies {
        let a = sp_formula_a(mu, t_row);
        if col_applies {
            // Both sumset cases hold; they must agree up to the sign shift.
            let shift = mu.sign_exponent();
            let shifted: BTreeSet<u64> = sp_formula_a(mu, t_col)
                .exponents()
                .iter()
                .map(|&e| (e + shift) % o)
                .collect();
            assert_eq!(
                *a.exponents(),
                shifted,
                "sumset cases disagree for lambda={lambda} mu={mu}"
            );
        }
        return Ok(ClassifiedResult::new(CaseTag::SnI, o, a.exponents().clone()));
    }
    if col_applies {
        let shift = mu.sign_exponent();
        let exps: BTreeSet<u64> = sp_formula_a(mu, t_col)
            .exponents()
            .iter()
            .map(|&e| (e + shift) % o)
            .collect();
        return Ok(ClassifiedResult::new(CaseTag::SnII, o, exps));
    }
    Ok(ClassifiedResult::new(CaseTag::SnFull, o, (0..o).collect()))
}

/// The split-character exceptional table: `(chi^+-, hooks^+-)` entries at
/// `n = 3, 4, 5`. Matching signs pin eta to exponent 1 of `zeta_5` and omega
/// to exponent 1 of `zeta_3`.
fn match_an_split(
    n: usize,
    lambda: &Partition,
    chi_sign: Sign,
    cls_sign: Sign,
) -> Option<(CaseTag, BTreeSet<u64>)> {
    let same = chi_sign == cls_sign;
    match (n, lambda.parts()) {
        (5, [3, 1, 1]) => Some(if same {
            (CaseTag::AnIV, [0, 1, 4].into_iter().collect())
        } else {
            (CaseTag::AnV, [0, 2, 3].into_iter().collect())
        }),
        (4, [2, 2]) => Some(if same {
            (CaseTag::AnVI, [1].into_iter().collect())
        } else {
            (CaseTag::AnVII, [2].into_iter().collect())
        }),
        (3, [2, 1]) => Some(if same {
            (CaseTag::AnIX, [1].into_iter().collect())
        } else {
            (CaseTag::AnX, [2].into_iter().collect())
        }),
        _ => None,
    }
}

/// The closed-form spectrum for a nontrivial irreducible `A_n` character on
/// an `A_n` class. Unsplit situations inherit the `S_n` spectrum unchanged;
/// split characters on their diagonal-hook classes use the dedicated table.
pub fn classify_an(chi: &AnCharLabel, cls: &AnClass) -> Result<ClassifiedResult> {
    let n = chi.size();
    if n != cls.size() {
        return Err(Error::SizeMismatch { lambda: n, mu: cls.size() });
    }
    if n < 3 {
        return Err(Error::Precondition("alternating classification needs n >= 3".into()));
    }
    // Normalize to lambda_1 >= lambda'_1; the labels lambda and lambda' name
    // the same character.
    let mut lambda = chi.lambda().clone();
    let conj = lambda.conjugate();
    if lambda.first_part() < conj.first_part() {
        lambda = conj;
    }
    if lambda.parts() == [n] {
        return Err(Error::TrivialCharacter);
    }
    let mu = cls.cycle_type();
    let o = mu.order();

    if chi.split().is_some() && mu.parts() == lambda.diagonal_hooks().as_slice() {
        let chi_sign = chi.split().expect("split label");
        let cls_sign = cls.split().expect("diagonal-hook classes split");
        if let Some((tag, exps)) = match_an_split(n, &lambda, chi_sign, cls_sign) {
            return Ok(ClassifiedResult::new(tag, o, exps));
        }
        let t = n - lambda.first_part();
        if !lcm_selection_exists(mu, t) {
            let a = sp_formula_a(mu, t);
            return Ok(ClassifiedResult::new(CaseTag::AnI, o, a.exponents().clone()));
        }
        return Ok(ClassifiedResult::new(CaseTag::AnFull, o, (0..o).collect()));
    }

    // The character values are chi^lambda / d on every power, so the
    // eigenvalue set is the symmetric-group one.
    let sn = classify_sn(&lambda, mu)?;
    let tag = match sn.case() {
        CaseTag::SnFull => CaseTag::AnFull,
        CaseTag::SnI => CaseTag::AnI,
        CaseTag::SnIII => CaseTag::AnII,
        CaseTag::SnX => CaseTag::AnIII,
        CaseTag::SnVII => CaseTag::AnVIII,
        other => unreachable!(
            "S_n case {other:?} cannot arise on alternating classes (lambda={lambda}, mu={mu})"
        ),
    };
    Ok(ClassifiedResult::new(
        tag,
        o,
        sn.spectrum().exponents().clone(),
    ))
}

/// Minimal polynomial for a product of `m` independent `r`-cycles in `S_n`
/// (remaining points fixed): the closed form of the cycle-power case, used
/// as a fast path and as an independent cross-check of [`classify_sn`].
pub fn cycle_power_case(lambda: &Partition, r: usize, m: usize, n: usize) -> Result<MinPoly> {
    if r < 2 || r * m > n {
        return Err(Error::Precondition(format!(
            "need r >= 2 and r*m <= n, got r={r} m={m} n={n}"
        )));
    }
    if lambda.size() != n {
        return Err(Error::SizeMismatch { lambda: lambda.size(), mu: n });
    }
    if lambda.parts() == [n] {
        return Err(Error::TrivialCharacter);
    }
    let o = r as u64;
    let lp = lambda.parts();
    let is_hook_two = |p: &[usize]| p.len() == n - 1 && p[0] == 2 && p[1..].iter().all(|&x| x == 1);
    let is_sign = |p: &[usize]| p.len() == n && p.iter().all(|&x| x == 1);

    let exps: BTreeSet<u64> = if is_sign(lp) {
        let sgn_negative = (m * (r - 1)) % 2 == 1;
        if sgn_negative {
            [o / 2].into_iter().collect()
        } else {
            [0].into_iter().collect()
        }
    } else if r == n && m == 1 && lp == [n - 1, 1] {
        full_minus(o, &[0])
    } else if r == n && m == 1 && is_hook_two(lp) {
        full_minus(o, &[if n.is_multiple_of(2) { o / 2 } else { 0 }])
    } else if r == 6 && n == 6 && m == 1 && lp == [3, 3] {
        full_minus(6, &[2, 4])
    } else if r == 6 && n == 6 && m == 1 && lp == [2, 2, 2] {
        full_minus(6, &[1, 5])
    } else if n == 4 && lp == [2, 2] && (r, m) == (4, 1) {
        [0, 2].into_iter().collect()
    } else if n == 4 && lp == [2, 2] && (r, m) == (3, 1) {
        [1, 2].into_iter().collect()
    } else if n == 4 && lp == [2, 2] && (r, m) == (2, 2) {
        [0].into_iter().collect()
    } else {
        (0..o).collect()
    };
    MinPoly::from_exponents(o, exps)
}

// ---------------------------------------------------------------------------
// Exhaustive verification against the oracle
// ---------------------------------------------------------------------------

/// One classifier-vs-oracle disagreement.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub lambda: String,
    pub mu: String,
    pub classifier: Vec<u64>,
    pub oracle: Vec<u64>,
}

/// Per-degree slice of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct NReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub case_histogram: BTreeMap<String, usize>,
    pub elapsed_ms: u128,
}

/// Outcome of sweeping every character/class pair up to a degree bound.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub group: String,
    pub n_max: usize,
    pub per_n: Vec<NReport>,
    pub total_mismatches: usize,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.total_mismatches == 0
    }
}

enum Task {
    S(Partition, CycleType),
    A(AnCharLabel, AnClass),
}

struct TaskOutcome {
    lambda: String,
    mu: String,
    case: CaseTag,
    classifier: Vec<u64>,
    oracle: Vec<u64>,
}

fn run_task(task: &Task) -> TaskOutcome {
    match task {
        Task::S(lambda, mu) => {
            let classified = classify_sn(lambda, mu).expect("valid pair");
            let oracle = spectrum_oracle(&lambda.clone().into(), &mu.clone().into())
                .expect("valid pair");
            TaskOutcome {
                lambda: lambda.to_string(),
                mu: mu.to_string(),
                case: classified.case(),
                classifier: classified.spectrum().exponents().iter().copied().collect(),
                oracle: oracle.exponents().iter().copied().collect(),
            }
        }
        Task::A(chi, cls) => {
            let classified = classify_an(chi, cls).expect("valid pair");
            let oracle = spectrum_oracle(&chi.clone().into(), &cls.clone().into())
                .expect("valid pair");
            TaskOutcome {
                lambda: chi.to_string(),
                mu: cls.to_string(),
                case: classified.case(),
                classifier: classified.spectrum().exponents().iter().copied().collect(),
                oracle: oracle.exponents().iter().copied().collect(),
            }
        }
    }
}

/// Nontrivial `A_n` character labels in a deterministic order: one label per
/// conjugate pair, two signed labels per self-conjugate partition.
pub fn an_character_labels(n: usize) -> Vec<AnCharLabel> {
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        let conj = lambda.conjugate();
        if lambda.parts() == [n] || conj.parts() == [n] {
            continue; // restricts to the trivial character
        }
        if lambda == conj {
            out.push(AnCharLabel::new(lambda.clone(), Some(Sign::Plus)).unwrap());
            out.push(AnCharLabel::new(lambda, Some(Sign::Minus)).unwrap());
        } else if lambda.parts() > conj.parts() {
            out.push(AnCharLabel::new(lambda, None).unwrap());
        }
    }
    out
}

/// Conjugacy classes of `A_n` in a deterministic order, split classes as
/// signed pairs.
pub fn an_classes(n: usize) -> Vec<AnClass> {
    let mut out = Vec::new();
    for mu in partitions_of(n) {
        let ct = CycleType::new(mu);
        if ct.sign() != 1 {
            continue;
        }
        if ct.splits_in_alternating() {
            out.push(AnClass::new(ct.clone(), Some(Sign::Plus)).unwrap());
            out.push(AnClass::new(ct, Some(Sign::Minus)).unwrap());
        } else {
            out.push(AnClass::new(ct, None).unwrap());
        }
    }
    out
}

fn tasks_for(n: usize, group: Group) -> Vec<Task> {
    match group {
        Group::Symmetric => {
            let all = partitions_of(n);
            let mut tasks = Vec::with_capacity(all.len() * all.len());
            for lambda in &all {
                for mu in &all {
                    tasks.push(Task::S(lambda.clone(), CycleType::new(mu.clone())));
                }
            }
            tasks
        }
        Group::Alternating => {
            let labels = an_character_labels(n);
            let classes = an_classes(n);
            let mut tasks = Vec::with_capacity(labels.len() * classes.len());
            for chi in &labels {
                for cls in &classes {
                    tasks.push(Task::A(chi.clone(), cls.clone()));
                }
            }
            tasks
        }
    }
}

/// Compares the classifier against the oracle for every character and class
/// at each degree up to `n_max`, distributing independent pairs over
/// `workers` threads. Mismatches are report content, not errors.
pub fn verify_range(n_max: usize, group: Group, workers: usize) -> VerifyReport {
    let start = match group {
        Group::Symmetric => 2,
        Group::Alternating => 3,
    };
    let mut per_n = Vec::new();
    let mut total_mismatches = 0;
    for n in start..=n_max {
        let clock = Instant::now();
        let tasks = tasks_for(n, group);
        let outcomes = run_tasks(&tasks, workers);
        let mut mismatches = Vec::new();
        let mut case_histogram: BTreeMap<String, usize> = BTreeMap::new();
        for outcome in &outcomes {
            *case_histogram.entry(outcome.case.roman().to_string()).or_insert(0) += 1;
            if outcome.classifier != outcome.oracle {
                mismatches.push(Mismatch {
                    lambda: outcome.lambda.clone(),
                    mu: outcome.mu.clone(),
                    classifier: outcome.classifier.clone(),
                    oracle: outcome.oracle.clone(),
                });
            }
        }
        total_mismatches += mismatches.len();
        per_n.push(NReport {
            n,
            pairs_checked: outcomes.len(),
            mismatches,
            case_histogram,
            elapsed_ms: clock.elapsed().as_millis(),
        });
    }
    VerifyReport {
        group: group.to_string(),
        n_max,
        per_n,
        total_mismatches,
    }
}

/// Runs tasks over a fixed-size worker pool; results keep task order, so the
/// merged report is deterministic regardless of scheduling.
fn run_tasks(tasks: &[Task], workers: usize) -> Vec<TaskOutcome> {
    let workers = workers.max(1).min(tasks.len().max(1));
    if workers == 1 {
        return tasks.iter().map(run_task).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<TaskOutcome>>> =
        (0..tasks.len()).map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= tasks.len() {
                    break;
                }
                let outcome = run_task(&tasks[i]);
                *slots[i].lock().unwrap() = Some(outcome);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("task completed"))
        .collect()
}
