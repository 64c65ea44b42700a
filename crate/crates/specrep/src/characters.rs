//! Exact irreducible character values of the symmetric and alternating
//! groups.
//!
//! Symmetric-group values come from the Murnaghan–Nakayama rim-hook
//! recursion over first-column hook lengths. Alternating-group values follow
//! the splitting rules: a character `chi^lambda` with `lambda` self-conjugate
//! restricts to two conjugate irreducibles `chi^+/chi^-`, whose values on the
//! split classes are `(eps +- sqrt(eps * a_1 ... a_k)) / 2` over the diagonal
//! hooks `a_i`. Split classes themselves are told apart by conjugating onto
//! an explicit canonical representative.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::CyclotomicElement;
use crate::partitions::{partitions_of, CycleType, Partition};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama recursion
// ---------------------------------------------------------------------------

type MnKey = (Vec<usize>, Vec<usize>);

static MN_MEMO: OnceLock<RwLock<HashMap<MnKey, i64>>> = OnceLock::new();

fn mn_memo() -> &'static RwLock<HashMap<MnKey, i64>> {
    MN_MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The character value `chi^lambda(mu)` by the Murnaghan–Nakayama rule.
///
/// ```
/// use specrep::characters::mn_character;
/// use specrep::partitions::{CycleType, Partition};
///
/// let lambda = Partition::parse("3,2")?;
/// let mu = CycleType::parse("2,2,1")?;
/// assert_eq!(mn_character(&lambda, &mu)?, 1);
/// # Ok::<(), specrep::Error>(())
/// ```
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.size(),
            mu: mu.size(),
        });
    }
    Ok(mn_recurse(lambda.parts(), mu.parts()))
}

/// Strips the largest part of `mu` first; the verification sweeps re-query
/// the same tails across all powers of a permutation, so results are
/// memoized in a shared idempotent cache.
fn mn_recurse(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key: MnKey = (lambda.to_vec(), mu.to_vec());
    if let Some(&hit) = mn_memo().read().unwrap().get(&key) {
        return hit;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let k = lambda.len();
    let betas: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l + k - 1 - i)
        .collect();
    let mut total = 0i64;
    for (pos, &b) in betas.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if betas.contains(&target) {
            continue;
        }
        // Rim-hook height: beta numbers strictly between the endpoints.
        let crossings = betas.iter().filter(|&&x| target < x && x < b).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut nb = betas.clone();
        nb[pos] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let next: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (k - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_recurse(&next, rest);
    }
    mn_memo().write().unwrap().entry(key).or_insert(total);
    total
}

/// `chi^(lambda')(mu)` computed as `sign(mu) * chi^lambda(mu)`; used as a
/// cross-check against the direct recursion on the conjugate.
pub fn conjugate_twist(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    Ok(mu.sign() * mn_character(lambda, mu)?)
}

// ---------------------------------------------------------------------------
// Permutations (used only to resolve split classes)
// ---------------------------------------------------------------------------

/// A permutation of `{0, .., n-1}` in one-line form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&x| {
                let fresh = x < images.len() && !seen[x];
                if fresh {
                    seen[x] = true;
                }
                fresh
            })
        });
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn power(&self, k: u64) -> Permutation {
        let mut out = Permutation::identity(self.degree());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// Cycles sorted by decreasing length, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        cycles
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(Partition::from_unsorted(
            self.cycles().iter().map(|c| c.len()).collect(),
        ))
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }
}

/// The defining representative of the class `mu^+`: consecutive cycles
/// `(1..a_1)(a_1+1..a_1+a_2)...` for the odd distinct cycle lengths `a_i`.
pub fn canonical_split_permutation(mu: &CycleType) -> Result<Permutation> {
    if !mu.splits_in_alternating() {
        return Err(Error::NotSplitClass(mu.to_string()));
    }
    let n = mu.size();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in mu.parts() {
        for off in 0..len {
            images[start + off] = start + (off + 1) % len;
        }
        start += len;
    }
    Ok(Permutation::from_images(images))
}

/// Resolves the split class of an even permutation whose cycle type has odd
/// distinct parts: the sign of any conjugator onto the canonical
/// representative answers `+` or `-`. Well defined because the centralizer
/// of the canonical element is generated by its own (even) cycles.
pub fn split_class_of(pi: &Permutation) -> Result<AnClass> {
    let ct = pi.cycle_type();
    if !ct.splits_in_alternating() {
        return Err(Error::NotSplitClass(ct.to_string()));
    }
    // Align cycle listings: tau maps the j-th point of pi's listing to the
    // j-th point of the canonical listing, which is 0,1,..,n-1 in order.
    let mut tau_images = vec![0usize; pi.degree()];
    let mut j = 0;
    for cycle in pi.cycles() {
        for &point in &cycle {
            tau_images[point] = j;
            j += 1;
        }
    }
    let tau = Permutation::from_images(tau_images);
    let sign = if tau.sign() == 1 { Sign::Plus } else { Sign::Minus };
    AnClass::new(ct, Some(sign))
}

// ---------------------------------------------------------------------------
// Alternating-group labels and classes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// Splits a trailing `+`/`-` off a partition string, e.g. `"3,1-"`.
pub fn parse_signed(s: &str) -> Result<(Partition, Option<Sign>)> {
    let s = s.trim();
    if let Some(body) = s.strip_suffix('+') {
        Ok((Partition::parse(body)?, Some(Sign::Plus)))
    } else if let Some(body) = s.strip_suffix('-') {
        Ok((Partition::parse(body)?, Some(Sign::Minus)))
    } else {
        Ok((Partition::parse(s)?, None))
    }
}

/// A conjugacy class of `A_n`: an even cycle type, with a resolving sign
/// exactly when the type has odd distinct parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnClass {
    mu: CycleType,
    split: Option<Sign>,
}

impl AnClass {
    pub fn new(mu: CycleType, split: Option<Sign>) -> Result<Self> {
        if mu.sign() != 1 {
            return Err(Error::OddClass(mu.to_string()));
        }
        match (mu.splits_in_alternating(), split) {
            (true, Some(_)) | (false, None) => Ok(AnClass { mu, split }),
            (true, None) => Err(Error::SplitSignRequired(mu.to_string())),
            (false, Some(_)) => Err(Error::SplitSignNotAllowed(format!(
                "class {mu} does not split"
            ))),
        }
    }

    /// Parses `"5,3+"`-style class names; the sign is mandatory exactly for
    /// split classes.
    pub fn parse(s: &str) -> Result<Self> {
        let (mu, split) = parse_signed(s)?;
        AnClass::new(CycleType::new(mu), split)
    }

    pub fn cycle_type(&self) -> &CycleType {
        &self.mu
    }

    pub fn split(&self) -> Option<Sign> {
        self.split
    }

    pub fn size(&self) -> usize {
        self.mu.size()
    }

    pub fn order(&self) -> u64 {
        self.mu.order()
    }

    /// An explicit permutation in this class. Split minus classes conjugate
    /// the canonical representative by the transposition of the first two
    /// points.
    pub fn representative(&self) -> Permutation {
        match self.split {
            None => {
                let n = self.mu.size();
                let mut images: Vec<usize> = (0..n).collect();
                let mut start = 0;
                for &len in self.mu.parts() {
                    for off in 0..len {
                        images[start + off] = start + (off + 1) % len;
                    }
                    start += len;
                }
                Permutation::from_images(images)
            }
            Some(sign) => {
                let canonical = canonical_split_permutation(&self.mu).expect("split class");
                match sign {
                    Sign::Plus => canonical,
                    Sign::Minus => {
                        let mut swap: Vec<usize> = (0..self.mu.size()).collect();
                        swap.swap(0, 1);
                        let t = Permutation::from_images(swap);
                        t.compose(&canonical).compose(&t)
                    }
                }
            }
        }
    }
}

impl fmt::Display for AnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mu)?;
        if let Some(s) = self.split {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for AnClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AnClass::parse(s)
    }
}

/// A label for an irreducible character of `A_n`: a partition, with a sign
/// exactly when the partition is self-conjugate (the split pair `chi^+-`).
/// For `lambda != lambda'`, the labels `lambda` and `lambda'` name the same
/// restricted character.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnCharLabel {
    lambda: Partition,
    split: Option<Sign>,
}

impl AnCharLabel {
    pub fn new(lambda: Partition, split: Option<Sign>) -> Result<Self> {
        let self_conj = lambda.is_self_conjugate();
        match (self_conj, split) {
            (true, Some(_)) | (false, None) => Ok(AnCharLabel { lambda, split }),
            (true, None) => Err(Error::SplitSignRequired(format!(
                "character {lambda} is self-conjugate"
            ))),
            (false, Some(_)) => Err(Error::SplitSignNotAllowed(format!(
                "character {lambda} is not self-conjugate"
            ))),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (lambda, split) = parse_signed(s)?;
        AnCharLabel::new(lambda, split)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn split(&self) -> Option<Sign> {
        self.split
    }

    pub fn size(&self) -> usize {
        self.lambda.size()
    }

    /// Degree of the character: the full dimension for unsplit labels, half
    /// of it for split ones.
    pub fn degree(&self) -> u64 {
        let d = self.lambda.dimension();
        if self.split.is_some() {
            d / 2
        } else {
            d
        }
    }
}

impl fmt::Display for AnCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        if let Some(s) = self.split {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for AnCharLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AnCharLabel::parse(s)
    }
}

// ---------------------------------------------------------------------------
// Character values over Q(sqrt(d))
// ---------------------------------------------------------------------------

/// An exact value `rational + surd_coeff * sqrt(radicand)`; the radicand is
/// kept squarefree, and purely rational values have `surd_coeff = 0`,
/// `radicand = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterValue {
    rational: BigRational,
    surd_coeff: BigRational,
    radicand: i64,
}

impl CharacterValue {
    pub fn rational(q: BigRational) -> Self {
        CharacterValue {
            rational: q,
            surd_coeff: BigRational::zero(),
            radicand: 1,
        }
    }

    pub fn integer(k: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// `r + s*sqrt(d)`, normalized: the square part of `d` folds into `s`,
    /// and a perfect-square radicand collapses to a rational.
    pub fn new(rational: BigRational, surd_coeff: BigRational, radicand: i64) -> Self {
        assert!(radicand != 0);
        if surd_coeff.is_zero() {
            return Self::rational(rational);
        }
        let (square, squarefree) = extract_square(radicand);
        let coeff = surd_coeff * BigRational::from_integer(BigInt::from(square));
        if squarefree == 1 {
            Self::rational(rational + coeff)
        } else {
            CharacterValue {
                rational,
                surd_coeff: coeff,
                radicand: squarefree,
            }
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_coeff(&self) -> &BigRational {
        &self.surd_coeff
    }

    pub fn radicand(&self) -> i64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.surd_coeff.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.rational)
        } else {
            None
        }
    }

    /// Sum of two values; the radicands must agree unless one side is
    /// rational.
    pub fn add(&self, other: &CharacterValue) -> CharacterValue {
        assert!(
            self.is_rational() || other.is_rational() || self.radicand == other.radicand,
            "incompatible radicands {} and {}",
            self.radicand,
            other.radicand
        );
        let radicand = if self.is_rational() {
            other.radicand
        } else {
            self.radicand
        };
        CharacterValue::new(
            &self.rational + &other.rational,
            &self.surd_coeff + &other.surd_coeff,
            radicand,
        )
    }

    /// Exact embedding into a cyclotomic field.
    pub fn to_cyclotomic(&self) -> CyclotomicElement {
        let mut out = CyclotomicElement::from_rational(self.rational.clone());
        if !self.surd_coeff.is_zero() {
            let (root, _) = sqrt_as_cyclotomic(self.radicand);
            out = out.add(&root.scalar_mul(&self.surd_coeff));
        }
        out
    }
}

impl fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        let denom = self.rational.denom().lcm(self.surd_coeff.denom());
        let scale = BigRational::from_integer(denom.clone());
        let a = (&self.rational * &scale).to_integer();
        let b = (&self.surd_coeff * &scale).to_integer();
        let mut body = String::new();
        if !a.is_zero() {
            body.push_str(&a.to_string());
        }
        if b.is_one() {
            if !body.is_empty() {
                body.push('+');
            }
        } else if b == BigInt::from(-1) {
            body.push('-');
        } else {
            if !body.is_empty() && b.is_positive() {
                body.push('+');
            }
            body.push_str(&b.to_string());
            body.push('*');
        }
        body.push_str(&format!("sqrt({})", self.radicand));
        if denom.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{denom}")
        }
    }
}

fn extract_square(d: i64) -> (i64, i64) {
    let mut square = 1i64;
    let mut rest = d.abs();
    let mut p = 2i64;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            square *= p;
        }
        p += 1;
    }
    (square, rest * d.signum())
}

/// The value of the labelled `A_n` character on the given class.
///
/// Unsplit labels restrict `chi^lambda` unchanged. Split labels halve the
/// `S_n` value except on the diagonal-hook class of `lambda`, where the surd
/// formula applies: matching signs of character and class take the `+sqrt`
/// branch, mixed signs the `-sqrt` branch.
pub fn an_character_value(chi: &AnCharLabel, cls: &AnClass) -> Result<CharacterValue> {
    if chi.size() != cls.size() {
        return Err(Error::SizeMismatch {
            lambda: chi.size(),
            mu: cls.size(),
        });
    }
    let lambda = &chi.lambda;
    let mu = cls.cycle_type();
    match chi.split {
        None => Ok(CharacterValue::integer(mn_character(lambda, mu)?)),
        Some(chi_sign) => {
            let hooks = lambda.diagonal_hooks();
            if mu.parts() == hooks.as_slice() {
                let cls_sign = cls.split().expect("hook type classes split");
                let k = hooks.len();
                let eps: i64 = if ((lambda.size() - k) / 2).is_multiple_of(2) { 1 } else { -1 };
                let product: i64 = hooks.iter().map(|&a| a as i64).product();
                let branch: i64 = if chi_sign == cls_sign { 1 } else { -1 };
                let half = |v: i64| BigRational::new(BigInt::from(v), BigInt::from(2));
                Ok(CharacterValue::new(half(eps), half(branch), eps * product))
            } else {
                let v = mn_character(lambda, mu)?;
                Ok(CharacterValue::rational(BigRational::new(
                    BigInt::from(v),
                    BigInt::from(2),
                )))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Square roots inside cyclotomic fields
// ---------------------------------------------------------------------------

/// An exact square root of the nonzero integer `d` in a cyclotomic field:
/// the positive real branch for `d > 0`, the positive imaginary branch for
/// `d < 0`. Built from quadratic Gauss sums `sum_t zeta_p^(t^2)` (which give
/// `sqrt(p)` for `p = 1 mod 4` and `i*sqrt(p)` for `p = 3 mod 4`), together
/// with `sqrt(2) = zeta_8 + zeta_8^7` and `i = zeta_4`. The conductor of the
/// result divides `4|d_0|` for the squarefree part `d_0`.
pub fn sqrt_as_cyclotomic(d: i64) -> (CyclotomicElement, u64) {
    assert!(d != 0);
    let (square, d0) = extract_square(d);
    if d0 == 1 {
        return (CyclotomicElement::from_integer(square), 1);
    }
    let mut out = CyclotomicElement::from_integer(square);
    let mut quarter_turns: u64 = 0;
    let mut rest = d0.unsigned_abs();
    if rest % 2 == 0 {
        rest /= 2;
        let sqrt2 = CyclotomicElement::root_of_unity(8, 1).add(&CyclotomicElement::root_of_unity(8, 7));
        out = out.mul(&sqrt2);
    }
    let mut p = 3u64;
    while p * p <= rest {
        if rest % p == 0 {
            rest /= p;
            out = out.mul(&gauss_sum(p));
            if p % 4 == 3 {
                quarter_turns += 1;
            }
        }
        p += 2;
    }
    if rest > 1 {
        out = out.mul(&gauss_sum(rest));
        if rest % 4 == 3 {
            quarter_turns += 1;
        }
    }
    // The product so far equals i^quarter_turns * sqrt(|d0|); rotate onto
    // the requested branch.
    let target: u64 = if d0 > 0 { 0 } else { 1 };
    let correction = (4 + target - quarter_turns % 4) % 4;
    if correction != 0 {
        out = out.mul(&CyclotomicElement::root_of_unity(4, correction));
    }
    let n = out.conductor();
    (out, n)
}

fn gauss_sum(p: u64) -> CyclotomicElement {
    let mut out = CyclotomicElement::zero(p);
    for t in 0..p {
        out = out.add(&CyclotomicElement::root_of_unity(p, (t * t) % p));
    }
    out
}

// ---------------------------------------------------------------------------
// Persisted character tables
// ---------------------------------------------------------------------------

const CACHE_FORMAT: &str = "specrep-chars-v1";

/// The full character table of `S_n` keyed by `(lambda, mu)`.
pub fn character_table(n: usize) -> BTreeMap<(Partition, Partition), i64> {
    let mut out = BTreeMap::new();
    let all = partitions_of(n);
    for lambda in &all {
        for mu in &all {
            let value = mn_character(lambda, &CycleType::new(mu.clone())).expect("equal sizes");
            out.insert((lambda.clone(), mu.clone()), value);
        }
    }
    out
}

pub fn cache_file_name(n: usize) -> String {
    format!("{CACHE_FORMAT}-n{n}.json")
}

/// Writes the `S_n` character table as JSON mapping `"lambda|mu"` to values.
/// The cache is an optimization only; nothing depends on its presence.
pub fn save_character_cache(dir: &Path, n: usize) -> io::Result<PathBuf> {
    let table = character_table(n);
    let values: BTreeMap<String, i64> = table
        .into_iter()
        .map(|((lambda, mu), v)| (format!("{lambda}|{mu}"), v))
        .collect();
    let doc = serde_json::json!({
        "format": CACHE_FORMAT,
        "n": n,
        "values": values,
    });
    fs::create_dir_all(dir)?;
    let path = dir.join(cache_file_name(n));
    fs::write(&path, serde_json::to_string_pretty(&doc)?)?;
    Ok(path)
}

/// Loads a cache file written by [`save_character_cache`] into the shared
/// memo table. Returns `Ok(false)` when the file does not exist; entries
/// with an unexpected format tag are rejected.
pub fn load_character_cache(dir: &Path, n: usize) -> io::Result<bool> {
    let path = dir.join(cache_file_name(n));
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(false),
        Err(e) => return Err(e),
    };
    let doc: serde_json::Value = serde_json::from_str(&text)?;
    if doc["format"] != CACHE_FORMAT || doc["n"] != n {
        return Err(io::Error::new(
            io::ErrorKind::InvalidData,
            format!("unexpected cache format in {}", path.display()),
        ));
    }
    let values = doc["values"]
        .as_object()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidData, "missing values"))?;
    let mut memo = mn_memo().write().unwrap();
    for (key, value) in values {
        let (lambda_s, mu_s) = key
            .split_once('|')
            .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidData, "bad key"))?;
        let lambda = Partition::parse(lambda_s)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e.to_string()))?;
        let mu = Partition::parse(mu_s)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e.to_string()))?;
        let v = value
            .as_i64()
            .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidData, "bad value"))?;
        memo.entry((lambda.parts().to_vec(), mu.parts().to_vec()))
            .or_insert(v);
    }
    Ok(true)
}
