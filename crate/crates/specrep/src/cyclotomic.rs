//! Exact arithmetic in cyclotomic fields `Q(zeta_N)` and minimal polynomials
//! supported on roots of unity.
//!
//! Elements are stored as length-`N` rational coefficient vectors over the
//! powers `zeta_N^0 .. zeta_N^(N-1)`, kept reduced modulo the `N`-th
//! cyclotomic polynomial. Conductors in this crate stay tiny (at most the
//! order of a permutation times a small square-root conductor), so the
//! uniform dense representation is used throughout.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn poly_trim(p: &mut Vec<i64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

/// Exact division of integer polynomials; `b` must be monic and divide `a`.
fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    debug_assert_eq!(*b.last().unwrap(), 1);
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        debug_assert!(rem.iter().all(|&c| c == 0));
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = rem[k];
        if c != 0 {
            quot[k - db] = c;
            for (i, &bc) in b.iter().enumerate() {
                rem[k - db + i] -= c * bc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division not exact");
    poly_trim(&mut quot);
    quot
}

static PHI_CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();

/// The `N`-th cyclotomic polynomial as ascending integer coefficients,
/// computed by dividing `x^N - 1` by the product of all proper `Phi_d`.
/// Results are cached for concurrent reuse.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    let cache = PHI_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().unwrap().get(&n) {
        return hit.clone();
    }
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_polynomial(d);
            poly = poly_div_exact(&poly, &phi_d);
        }
    }
    debug_assert_eq!(poly.len() as u64 - 1, euler_phi(n));
    let arc = Arc::new(poly);
    cache
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| arc.clone());
    arc
}

/// An exact element of `Q(zeta_N)` in canonical reduced coordinates.
#[derive(Debug, Clone)]
pub struct CyclotomicElement {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicElement {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1);
        CyclotomicElement {
            conductor,
            coeffs: vec![BigRational::zero(); conductor as usize],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        CyclotomicElement { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// `zeta_N^k` in canonical form.
    pub fn root_of_unity(conductor: u64, k: u64) -> Self {
        let mut el = Self::zero(conductor);
        el.coeffs[(k % conductor) as usize] = BigRational::one();
        el.reduce();
        el
    }

    /// Builds an element from arbitrary power coefficients; exponents are
    /// folded modulo the conductor, then the result is reduced canonically.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<BigRational>) -> Self {
        let mut el = Self::zero(conductor);
        for (j, c) in coeffs.into_iter().enumerate() {
            let slot = j % conductor as usize;
            el.coeffs[slot] += c;
        }
        el.reduce();
        el
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn reduce(&mut self) {
        let phi = cyclotomic_polynomial(self.conductor);
        let deg = phi.len() - 1;
        // Synthetic division by the monic modulus, top down.
        for k in (deg..self.coeffs.len()).rev() {
            if self.coeffs[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut self.coeffs[k], BigRational::zero());
            for (i, &pc) in phi.iter().enumerate().take(deg) {
                if pc != 0 {
                    let delta = &c * BigRational::from_integer(BigInt::from(pc));
                    self.coeffs[k - deg + i] -= delta;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Same number at a larger conductor `m` via `zeta_N = zeta_M^(M/N)`.
    pub fn embed(&self, m: u64) -> Result<Self> {
        if !m.is_multiple_of(self.conductor) {
            return Err(Error::ConductorNotDivisible { from: self.conductor, to: m });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let mut coeffs = vec![BigRational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[j * step] = c.clone();
            }
        }
        let mut el = CyclotomicElement { conductor: m, coeffs };
        el.reduce();
        Ok(el)
    }

    fn at_common_conductor(&self, other: &Self) -> (Self, Self) {
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m).unwrap(), other.embed(m).unwrap())
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.at_common_conductor(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.at_common_conductor(other);
        let n = a.conductor as usize;
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                coeffs[(i + j) % n] += x * y;
            }
        }
        let mut el = CyclotomicElement { conductor: a.conductor, coeffs };
        el.reduce();
        el
    }

    pub fn scalar_mul(&self, q: &BigRational) -> Self {
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// The rational value if this element is rational in canonical form.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.at_common_conductor(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicElement {}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match j {
                0 => format!("{c}"),
                1 => format!("{c}*z{}", self.conductor),
                _ => format!("{c}*z{}^{j}", self.conductor),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A squarefree polynomial whose roots are `o`-th roots of unity, recorded by
/// the exponent set `E`: `p(x) = prod_(e in E) (x - zeta_o^e)`.
///
/// When `E` is closed under multiplication by units modulo `o`, the
/// polynomial is rational and factors as a product of cyclotomic polynomials;
/// the sorted factor indices are stored. Otherwise `cyclotomic_factors` is
/// `None` and the display falls back to explicit root lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPoly {
    order: u64,
    exponents: BTreeSet<u64>,
    cyclotomic_factors: Option<Vec<u64>>,
}

impl MinPoly {
    pub fn from_exponents(order: u64, exponents: BTreeSet<u64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyExponentSet);
        }
        debug_assert!(exponents.iter().all(|&e| e < order));
        let cyclotomic_factors = galois_stable_factors(order, &exponents);
        Ok(MinPoly { order, exponents, cyclotomic_factors })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> &BTreeSet<u64> {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_full(&self) -> bool {
        self.exponents.len() as u64 == self.order
    }

    /// Indices `d` with `Phi_d` dividing the polynomial, when it is rational.
    pub fn cyclotomic_factors(&self) -> Option<&[u64]> {
        self.cyclotomic_factors.as_deref()
    }

    /// Renders the polynomial the way the classification tables write it:
    /// `x^o-1` when full; an expanded product of cyclotomic factors when the
    /// degree is at most two; otherwise a quotient of `x^o-1` by the missing
    /// factors. Non-rational polynomials print explicit root lists over a
    /// named root of unity.
    pub fn display(&self) -> String {
        let o = self.order;
        if self.is_full() {
            return power_form(o);
        }
        if let Some(factors) = &self.cyclotomic_factors {
            if self.exponents.len() <= 2 {
                return int_poly_string(&expand_phi_product(factors));
            }
            let missing: Vec<u64> = divisors(o)
                .into_iter()
                .filter(|d| !factors.contains(d))
                .collect();
            return format!(
                "({})/({})",
                power_form(o),
                int_poly_string(&expand_phi_product(&missing))
            );
        }
        let sym = root_symbol(o);
        let complement: Vec<u64> = (0..o).filter(|e| !self.exponents.contains(e)).collect();
        let body = if self.exponents.len() <= complement.len() {
            let factors: Vec<String> = self
                .exponents
                .iter()
                .map(|&e| format!("x-{}", root_str(sym, e)))
                .collect();
            if factors.len() == 1 {
                factors[0].clone()
            } else {
                factors.iter().map(|t| format!("({t})")).collect()
            }
        } else {
            let den: String = complement
                .iter()
                .map(|&e| format!("(x-{})", root_str(sym, e)))
                .collect();
            format!("({})/({})", power_form(o), den)
        };
        format!("{body} where {sym} = zeta_{o}")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order,
            "exponents": self.exponents.iter().copied().collect::<Vec<u64>>(),
            "cyclotomic_factors": self.cyclotomic_factors,
            "display": self.display(),
        })
    }
}

impl fmt::Display for MinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Serialize for MinPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// If `E` is closed under `e -> u*e` for every unit `u` mod `o`, the orbits
/// are the gcd classes and the factor indices are `o / gcd`; otherwise `None`.
fn galois_stable_factors(o: u64, exponents: &BTreeSet<u64>) -> Option<Vec<u64>> {
    let mut present = Vec::new();
    for g in divisors(o) {
        let class: Vec<u64> = (0..o).filter(|&e| e.gcd(&o) == g).collect();
        if class.is_empty() {
            continue;
        }
        let inside = class.iter().filter(|e| exponents.contains(e)).count();
        if inside == class.len() {
            present.push(o / g);
        } else if inside > 0 {
            return None;
        }
    }
    present.sort_unstable();
    Some(present)
}

fn expand_phi_product(ds: &[u64]) -> Vec<i64> {
    let mut acc = vec![1i64];
    for &d in ds {
        acc = poly_mul(&acc, &cyclotomic_polynomial(d));
    }
    acc
}

fn power_form(o: u64) -> String {
    if o == 1 {
        "x-1".to_string()
    } else {
        format!("x^{o}-1")
    }
}

fn int_poly_string(coeffs: &[i64]) -> String {
    let mut s = String::new();
    for k in (0..coeffs.len()).rev() {
        let v = coeffs[k];
        if v == 0 {
            continue;
        }
        if v < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        let a = v.abs();
        match (k, a) {
            (0, a) => s.push_str(&a.to_string()),
            (1, 1) => s.push('x'),
            (1, a) => s.push_str(&format!("{a}x")),
            (k, 1) => s.push_str(&format!("x^{k}")),
            (k, a) => s.push_str(&format!("{a}x^{k}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Names the generator in explicit-root displays: `w` for cube roots and `n`
/// for fifth roots, following the classification tables.
fn root_symbol(o: u64) -> &'static str {
    match o {
        3 => "w",
        5 => "n",
        _ => "z",
    }
}

fn root_str(sym: &str, e: u64) -> String {
    match e {
        0 => "1".to_string(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}
