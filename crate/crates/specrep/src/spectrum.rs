//! Ground-truth eigenvalue computation.
//!
//! The oracle computes the multiplicity of the eigenvalue `zeta_o^e` of
//! `rho(sigma)` as the exact character inner product
//! `(1/o) * sum_i chi(sigma^i) * zeta_o^(-i*e)` over the cyclic group
//! generated by `sigma`, evaluated in a cyclotomic field large enough to
//! hold any surd character values. A second, independent route evaluates
//! spectra recursively through Littlewood–Richardson restriction, and a
//! closed form covers the standard representation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::characters::{
    an_character_value, mn_character, split_class_of, AnCharLabel, AnClass, CharacterValue,
};
use crate::cyclotomic::{CyclotomicElement, MinPoly};
use crate::lr::lr_set;
use crate::partitions::{partitions_of, CycleType, Partition, SkewShape};
use crate::{Error, Result};

/// The eigenvalue set of a representation matrix, encoded as the subset `E`
/// of `Z/oZ` with `{zeta_o^e : e in E}` the eigenvalues, optionally with
/// eigenspace dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSet {
    order: u64,
    exponents: BTreeSet<u64>,
    multiplicities: Option<BTreeMap<u64, u64>>,
}

impl SpectrumSet {
    pub fn from_exponents(order: u64, exponents: BTreeSet<u64>) -> Self {
        debug_assert!(exponents.iter().all(|&e| e < order));
        SpectrumSet { order, exponents, multiplicities: None }
    }

    /// Builds from eigenspace dimensions, dropping zero entries.
    pub fn from_multiplicities(order: u64, mults: BTreeMap<u64, u64>) -> Self {
        let mults: BTreeMap<u64, u64> = mults.into_iter().filter(|&(_, m)| m > 0).collect();
        let exponents = mults.keys().copied().collect();
        SpectrumSet { order, exponents, multiplicities: Some(mults) }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> &BTreeSet<u64> {
        &self.exponents
    }

    pub fn multiplicities(&self) -> Option<&BTreeMap<u64, u64>> {
        self.multiplicities.as_ref()
    }

    pub fn multiplicity(&self, e: u64) -> Option<u64> {
        self.multiplicities.as_ref().map(|m| m.get(&e).copied().unwrap_or(0))
    }

    pub fn is_full(&self) -> bool {
        self.exponents.len() as u64 == self.order
    }

    /// Spectra from different computation paths agree when the exponent sets
    /// agree; multiplicities are optional and not compared.
    pub fn same_exponents(&self, other: &SpectrumSet) -> bool {
        self.order == other.order && self.exponents == other.exponents
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mults = self.multiplicities.as_ref().map(|m| {
            m.iter()
                .map(|(e, v)| (e.to_string(), serde_json::json!(v)))
                .collect::<serde_json::Map<String, serde_json::Value>>()
        });
        serde_json::json!({
            "order": self.order,
            "exponents": self.exponents.iter().copied().collect::<Vec<u64>>(),
            "multiplicities": mults,
        })
    }
}

impl fmt::Display for SpectrumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exponents.iter().map(|e| e.to_string()).collect();
        write!(f, "o={} E={{{}}}", self.order, exps.join(","))
    }
}

/// A character of `S_n` or `A_n` to take spectra of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharSpec {
    Symmetric(Partition),
    Alternating(AnCharLabel),
}

impl CharSpec {
    pub fn size(&self) -> usize {
        match self {
            CharSpec::Symmetric(l) => l.size(),
            CharSpec::Alternating(l) => l.size(),
        }
    }
}

impl From<Partition> for CharSpec {
    fn from(l: Partition) -> Self {
        CharSpec::Symmetric(l)
    }
}

impl From<AnCharLabel> for CharSpec {
    fn from(l: AnCharLabel) -> Self {
        CharSpec::Alternating(l)
    }
}

/// A conjugacy class of `S_n` or `A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    Symmetric(CycleType),
    Alternating(AnClass),
}

impl ClassSpec {
    pub fn size(&self) -> usize {
        match self {
            ClassSpec::Symmetric(c) => c.size(),
            ClassSpec::Alternating(c) => c.size(),
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            ClassSpec::Symmetric(c) => c.order(),
            ClassSpec::Alternating(c) => c.order(),
        }
    }

    pub fn cycle_type(&self) -> &CycleType {
        match self {
            ClassSpec::Symmetric(c) => c,
            ClassSpec::Alternating(c) => c.cycle_type(),
        }
    }
}

impl From<CycleType> for ClassSpec {
    fn from(c: CycleType) -> Self {
        ClassSpec::Symmetric(c)
    }
}

impl From<AnClass> for ClassSpec {
    fn from(c: AnClass) -> Self {
        ClassSpec::Alternating(c)
    }
}

/// Exact character values on all powers `sigma^0 .. sigma^(o-1)`.
///
/// Powers are evaluated through their cycle types; only split-sign
/// resolution materializes actual permutations, once per power.
fn power_values(chi: &CharSpec, cls: &ClassSpec) -> Result<Vec<CharacterValue>> {
    if chi.size() != cls.size() {
        return Err(Error::SizeMismatch { lambda: chi.size(), mu: cls.size() });
    }
    let o = cls.order();
    match (chi, cls) {
        (CharSpec::Symmetric(lambda), ClassSpec::Symmetric(mu)) => (0..o)
            .map(|i| Ok(CharacterValue::integer(mn_character(lambda, &mu.power(i))?)))
            .collect(),
        (CharSpec::Alternating(label), ClassSpec::Alternating(cls)) => {
            let mu = cls.cycle_type();
            // A power lands on the diagonal-hook class of a split character
            // only when mu itself is that hook type.
            let split_powers = label.split().is_some()
                && mu.parts() == label.lambda().diagonal_hooks().as_slice();
            let powers: Vec<crate::characters::Permutation> = if split_powers {
                let rep = cls.representative();
                let mut acc = Vec::with_capacity(o as usize);
                let mut cur = crate::characters::Permutation::identity(mu.size());
                for _ in 0..o {
                    acc.push(cur.clone());
                    cur = rep.compose(&cur);
                }
                acc
            } else {
                Vec::new()
            };
            let hooks = label.lambda().diagonal_hooks();
            (0..o)
                .map(|i| {
                    let type_i = mu.power(i);
                    let power_cls = if split_powers && type_i.parts() == hooks.as_slice() {
                        split_class_of(&powers[i as usize])?
                    } else {
                        // Away from the diagonal-hook type the value does not
                        // depend on which split class the power landed in.
                        let sign = if type_i.splits_in_alternating() {
                            Some(crate::characters::Sign::Plus)
                        } else {
                            None
                        };
                        AnClass::new(type_i, sign).expect("powers of even permutations are even")
                    };
                    an_character_value(label, &power_cls)
                })
                .collect()
        }
        _ => Err(Error::Precondition(
            "character and class must belong to the same group".into(),
        )),
    }
}

/// Multiplicity of the eigenvalue `zeta_o^e` from one exact inner product.
/// The sum is grouped by residue into a single polynomial, reduced once, and
/// divided by the order; anything non-integral or negative is a fatal
/// internal inconsistency.
fn multiplicity_from_values(o: u64, values: &[CharacterValue], e: u64) -> u64 {
    let mut rational = vec![BigRational::zero(); o as usize];
    let mut surd = vec![BigRational::zero(); o as usize];
    let mut radicand: i64 = 1;
    for (i, v) in values.iter().enumerate() {
        let slot = ((o - (i as u64 * e) % o) % o) as usize;
        rational[slot] += v.rational_part();
        if !v.surd_coeff().is_zero() {
            debug_assert!(radicand == 1 || radicand == v.radicand());
            radicand = v.radicand();
            surd[slot] += v.surd_coeff();
        }
    }
    let mut total = CyclotomicElement::from_coeffs(o, rational);
    if surd.iter().any(|c| !c.is_zero()) {
        let (root, _) = crate::characters::sqrt_as_cyclotomic(radicand);
        total = total.add(&CyclotomicElement::from_coeffs(o, surd).mul(&root));
    }
    let value = total
        .as_rational()
        .unwrap_or_else(|| panic!("eigenspace inner product not rational (o={o}, e={e})"));
    let scaled = value / BigRational::from_integer(BigInt::from(o));
    assert!(
        scaled.is_integer() && !scaled.is_negative(),
        "eigenspace dimension {scaled} not a nonnegative integer (o={o}, e={e})"
    );
    scaled
        .to_integer()
        .try_into()
        .expect("dimension fits in u64")
}

/// Dimension of the `zeta_o^e`-eigenspace of `rho(sigma)`.
pub fn eigenvalue_multiplicity(chi: &CharSpec, cls: &ClassSpec, e: u64) -> Result<u64> {
    let values = power_values(chi, cls)?;
    let o = cls.order();
    Ok(multiplicity_from_values(o, &values, e % o))
}

/// The full spectrum with multiplicities, by running the inner product for
/// every residue. The multiplicities must add up to the character degree.
///
/// ```
/// use specrep::partitions::{CycleType, Partition};
/// use specrep::spectrum::spectrum_oracle;
///
/// let s = spectrum_oracle(
///     &Partition::parse("6,1")?.into(),
///     &CycleType::parse("3,2,2")?.into(),
/// )?;
/// assert_eq!(s.to_string(), "o=6 E={0,2,3,4}");
/// assert_eq!(s.multiplicity(0), Some(2));
/// # Ok::<(), specrep::Error>(())
/// ```
pub fn spectrum_oracle(chi: &CharSpec, cls: &ClassSpec) -> Result<SpectrumSet> {
    let values = power_values(chi, cls)?;
    let o = cls.order();
    let mut mults = BTreeMap::new();
    for e in 0..o {
        let m = multiplicity_from_values(o, &values, e);
        if m > 0 {
            mults.insert(e, m);
        }
    }
    let degree = values[0]
        .as_rational()
        .expect("identity value is rational")
        .clone();
    let total: u64 = mults.values().sum();
    assert_eq!(
        BigRational::from_integer(BigInt::from(total)),
        degree,
        "multiplicities must sum to the degree"
    );
    Ok(SpectrumSet::from_multiplicities(o, mults))
}

type LrSetKey = (Vec<usize>, Vec<usize>);

static LR_SET_MEMO: OnceLock<RwLock<HashMap<LrSetKey, Vec<Partition>>>> = OnceLock::new();
static VIA_LR_MEMO: OnceLock<RwLock<HashMap<LrSetKey, BTreeSet<u64>>>> = OnceLock::new();

fn lr_set_cached(outer: &Partition, inner: &Partition) -> Vec<Partition> {
    let memo = LR_SET_MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (outer.parts().to_vec(), inner.parts().to_vec());
    if let Some(hit) = memo.read().unwrap().get(&key) {
        return hit.clone();
    }
    let shape = SkewShape::new(outer.clone(), inner.clone()).expect("containment");
    let result: Vec<Partition> = lr_set(&shape).into_iter().collect();
    memo.write().unwrap().entry(key).or_insert_with(|| result.clone());
    result
}

/// Spectrum of `rho_lambda(sigma)` through restriction: peel the largest
/// cycle off `mu`, split `sigma` across a Young subgroup, and combine the
/// factor spectra of every constituent as exponent sumsets. Exponent sets
/// only; single-cycle types delegate to the oracle.
pub fn spectrum_via_lr(lambda: &Partition, mu: &CycleType) -> Result<SpectrumSet> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { lambda: lambda.size(), mu: mu.size() });
    }
    Ok(SpectrumSet::from_exponents(mu.order(), via_lr_recurse(lambda, mu)))
}

fn via_lr_recurse(lambda: &Partition, mu: &CycleType) -> BTreeSet<u64> {
    if mu.parts().len() <= 1 {
        let chi = CharSpec::Symmetric(lambda.clone());
        let cls = ClassSpec::Symmetric(mu.clone());
        return spectrum_oracle(&chi, &cls)
            .expect("sizes match")
            .exponents()
            .clone();
    }
    let memo = VIA_LR_MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (lambda.parts().to_vec(), mu.parts().to_vec());
    if let Some(hit) = memo.read().unwrap().get(&key) {
        return hit.clone();
    }
    let r = mu.parts()[0];
    let delta = CycleType::new(Partition::new(mu.parts()[1..].to_vec()).expect("sorted tail"));
    let o = mu.order();
    let lift_delta = o / delta.order();
    let lift_r = o / r as u64;
    let cycle = CycleType::new(Partition::new(vec![r]).unwrap());
    let mut out = BTreeSet::new();
    for nu in partitions_of(lambda.size() - r) {
        if !nu.contained_in(lambda) {
            continue;
        }
        let sp_nu = via_lr_recurse(&nu, &delta);
        for gamma in lr_set_cached(lambda, &nu) {
            let sp_gamma = via_lr_recurse(&gamma, &cycle);
            for &a in &sp_nu {
                for &b in &sp_gamma {
                    out.insert((a * lift_delta + b * lift_r) % o);
                }
            }
        }
    }
    memo.write().unwrap().entry(key).or_insert_with(|| out.clone());
    out
}

/// Closed-form spectrum of the standard representation `(n-1, 1)`: the union
/// over cycle lengths `n_i` of the roots with `eta^(n_i) = 1`, the eigenvalue
/// 1 appearing with multiplicity `#cycles - 1` (so not at all for a single
/// cycle), and every other eigenvalue with multiplicity the number of cycle
/// lengths it divides into.
pub fn standard_rep_spectrum(mu: &CycleType) -> Result<SpectrumSet> {
    let n = mu.size();
    if n < 2 {
        return Err(Error::Precondition(format!(
            "standard representation needs n >= 2, got {n}"
        )));
    }
    let o = mu.order();
    let k = mu.parts().len() as u64;
    let mut mults = BTreeMap::new();
    for e in 0..o {
        let m = if e == 0 {
            k - 1
        } else {
            mu.parts()
                .iter()
                .filter(|&&r| (e * r as u64).is_multiple_of(o))
                .count() as u64
        };
        if m > 0 {
            mults.insert(e, m);
        }
    }
    Ok(SpectrumSet::from_multiplicities(o, mults))
}

/// The squarefree minimal polynomial over the spectrum's eigenvalue set.
pub fn min_poly_from_spectrum(s: &SpectrumSet) -> Result<MinPoly> {
    MinPoly::from_exponents(s.order(), s.exponents().clone())
}
