//! Counting `c_{n,m}(u)`, the number of `w ∈ C(u)` of length `n` with all
//! letters at most `m`.
//!
//! Two independent routes are provided: [`count_centralizer`] enumerates
//! `[m]^n` and tests membership directly, while [`count_by_shapes`] sums
//! `g_m^λ · f^λ` over partitions `λ ⊢ n`, where `f^λ` counts standard
//! tableaux and `g_m^λ` counts admissible insertion tableaux using order
//! polynomials of labeled posets. [`expand_binomial`] interpolates the
//! latter in the basis `C(m, k)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::budget::{words_of_length, Budget};
use crate::centralizer::{staircase_word, Commutator};
use crate::error::{Error, Result};
use crate::tableau::{Partition, Word};

/// Largest poset whose linear extensions are enumerated by default.
pub const DEFAULT_POSET_BOUND: usize = 10;

/// `c_{n,m}(u)` by brute force over `[m]^n`.
pub fn count_centralizer(u: &[u32], n: usize, m: u32, budget: Budget) -> Result<u64> {
    budget.check(words_of_length(m, n))?;
    let c = Commutator::new(u);
    if n == 0 || m == 0 {
        return Ok(Word::all(m, n).filter(|w| c.commutes_with(w)).count() as u64);
    }
    let total = (1..=m)
        .into_par_iter()
        .map(|first| {
            let mut letters = vec![first; n];
            Word::all(m, n - 1)
                .filter(|tail| {
                    letters[1..].copy_from_slice(tail);
                    c.commutes_with(&letters)
                })
                .count() as u64
        })
        .sum();
    Ok(total)
}

/// Number of standard Young tableaux of shape `shape` (hook length formula).
pub fn f_lambda(shape: &Partition) -> BigUint {
    let n = shape.size();
    let mut num = BigUint::one();
    for k in 2..=n {
        num *= k;
    }
    let mut den = BigUint::one();
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in 1..=len {
            let arm = len - j;
            let leg = shape.column_len(j) - (i + 1);
            den *= arm + leg + 1;
        }
    }
    num / den
}

/// A strict partial order on the labels `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    size: usize,
    relations: Vec<(usize, usize)>,
    // bit j of below[i] set iff j+1 ⊲ i+1
    below: Vec<u64>,
}

impl LabeledPoset {
    /// Builds the poset generated by `relations`, where `(i, j)` means
    /// `i ⊲ j`. At most 64 elements.
    pub fn new(size: usize, relations: Vec<(usize, usize)>) -> Result<Self> {
        if size > 64 {
            return Err(Error::BoundExceeded { size, bound: 64 });
        }
        let mut below = vec![0u64; size];
        for &(i, j) in &relations {
            if i == 0 || j == 0 || i > size || j > size {
                return Err(Error::InvalidConfig(format!("relation ({i},{j}) outside 1..={size}")));
            }
            below[j - 1] |= 1 << (i - 1);
        }
        // transitive closure
        loop {
            let mut changed = false;
            for j in 0..size {
                let mut acc = below[j];
                let mut bits = below[j];
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    acc |= below[i];
                }
                if acc != below[j] {
                    below[j] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if (0..size).any(|i| below[i] >> i & 1 == 1) {
            return Err(Error::InvalidConfig("relations contain a cycle".into()));
        }
        Ok(LabeledPoset { size, relations, below })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    /// `i ⊲ j` (strict).
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j - 1] >> (i - 1) & 1 == 1
    }

    pub fn chain(n: usize) -> Self {
        LabeledPoset::new(n, (1..n).map(|i| (i, i + 1)).collect()).expect("acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        LabeledPoset::new(n, Vec::new()).expect("acyclic")
    }
}

/// The poset on the cells of `shape`, ordered so that a cell lies below
/// every cell weakly north-west of it, labeled row by row with each row
/// numbered right to left.
pub fn shape_poset(shape: &Partition) -> LabeledPoset {
    let mut offset = 0;
    let mut starts = Vec::with_capacity(shape.num_rows());
    for &len in shape.parts() {
        starts.push(offset);
        offset += len;
    }
    // label of 1-based cell (i, j)
    let label = |i: usize, j: usize| starts[i - 1] + shape.part(i) - j + 1;
    let mut relations = Vec::new();
    for i in 1..=shape.num_rows() {
        for j in 1..=shape.part(i) {
            if j < shape.part(i) {
                relations.push((label(i, j + 1), label(i, j)));
            }
            if j <= shape.part(i + 1) {
                relations.push((label(i + 1, j), label(i, j)));
            }
        }
    }
    LabeledPoset::new(shape.size(), relations).expect("shape posets are acyclic")
}

/// All linear extensions in lexicographic order, as permutations of `1..=n`.
pub fn linear_extensions(p: &LabeledPoset) -> Result<Vec<Vec<usize>>> {
    linear_extensions_bounded(p, DEFAULT_POSET_BOUND)
}

pub fn linear_extensions_bounded(p: &LabeledPoset, bound: usize) -> Result<Vec<Vec<usize>>> {
    if p.size > bound {
        return Err(Error::BoundExceeded { size: p.size, bound });
    }
    fn go(p: &LabeledPoset, placed: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p.size {
            out.push(cur.clone());
            return;
        }
        for i in 0..p.size {
            if placed >> i & 1 == 0 && p.below[i] & !placed == 0 {
                cur.push(i + 1);
                go(p, placed | 1 << i, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, 0, &mut Vec::with_capacity(p.size), &mut out);
    Ok(out)
}

/// `Σ_π x^{des π}` over linear extensions; `coefficients()[j]` counts the
/// extensions with `j` descents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DescentPoly(Vec<u64>);

impl DescentPoly {
    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    /// Number of linear extensions.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub fn descents(pi: &[usize]) -> usize {
    pi.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn descent_poly(p: &LabeledPoset) -> Result<DescentPoly> {
    descent_poly_bounded(p, DEFAULT_POSET_BOUND)
}

pub fn descent_poly_bounded(p: &LabeledPoset, bound: usize) -> Result<DescentPoly> {
    let mut coeffs = vec![0u64; p.size.max(1)];
    for pi in linear_extensions_bounded(p, bound)? {
        coeffs[descents(&pi)] += 1;
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(DescentPoly(coeffs))
}

/// `C(n, k)` for nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(t, k)` for any integer `t`, as the polynomial `t(t-1)...(t-k+1)/k!`.
pub fn binomial_signed(t: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (t - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Number of order-reversing maps `f: P -> {0, ..., m}` that are strict
/// where labels descend, computed as `Σ_π C(m + n - des π, n)`.
pub fn order_poly_count(p: &LabeledPoset, m: u64) -> Result<BigUint> {
    order_poly_from_descents(&descent_poly_bounded(p, DEFAULT_POSET_BOUND)?, p.size, m)
}

fn order_poly_from_descents(d: &DescentPoly, n: usize, m: u64) -> Result<BigUint> {
    let n = n as u64;
    Ok(d.0
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(j, &c)| {
            let top = (m + n).checked_sub(j as u64);
            top.map_or_else(BigUint::zero, |t| binomial(t, n) * c)
        })
        .sum())
}

/// The families of `u` for which the centralizer is characterized by the
/// shape of `P(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `u = a^k`.
    Single(u32),
    /// `u = k(k-1)...1`.
    Staircase(u32),
    /// `u = 12`.
    Word12,
}

impl Family {
    /// Recognises `a^k`, `12` and `k(k-1)...1`.
    pub fn from_word(u: &[u32]) -> Result<Family> {
        let unsupported = || Error::UnsupportedFamily(format!("[{}]", Word::new(u.to_vec()).map(|w| w.to_string()).unwrap_or_default()));
        match u {
            [] => Err(unsupported()),
            [a, rest @ ..] if rest.iter().all(|x| x == a) => Ok(Family::Single(*a)),
            [1, 2] => Ok(Family::Word12),
            _ if u == staircase_word(u[0]).letters() => Ok(Family::Staircase(u[0])),
            _ => Err(unsupported()),
        }
    }

    /// Representative word.
    pub fn word(&self) -> Word {
        match *self {
            Family::Single(a) => Word::new(vec![a]).expect("positive"),
            Family::Staircase(k) => staircase_word(k),
            Family::Word12 => Word::new(vec![1, 2]).expect("positive"),
        }
    }

    /// Number of leading rows whose entries are bounded by the family.
    pub fn constrained_rows(&self) -> usize {
        match *self {
            Family::Single(_) => 1,
            Family::Staircase(k) => k as usize,
            Family::Word12 => 2,
        }
    }

    /// Smallest `m` from which `c_{n,m}(u)` agrees with its polynomial.
    pub fn first_polynomial_m(&self, n: usize) -> u32 {
        match *self {
            Family::Single(a) => (n as u32).max(a),
            _ => n as u32,
        }
    }
}

/// Counts SSYT of shape `shape` with entries in `lo..=hi`.
fn count_ssyt_between(shape: &Partition, lo: u32, hi: u32, cache: &mut ShapeCache) -> Result<BigUint> {
    if shape.is_empty() {
        return Ok(BigUint::one());
    }
    if hi < lo {
        return Ok(BigUint::zero());
    }
    let d = cache.descents(shape)?;
    order_poly_from_descents(&d, shape.size(), (hi - lo) as u64)
}

#[derive(Default)]
struct ShapeCache(HashMap<Partition, DescentPoly>);

impl ShapeCache {
    fn descents(&mut self, shape: &Partition) -> Result<DescentPoly> {
        if let Some(d) = self.0.get(shape) {
            return Ok(d.clone());
        }
        let d = descent_poly_bounded(&shape_poset(shape), shape.size().max(DEFAULT_POSET_BOUND))?;
        self.0.insert(shape.clone(), d.clone());
        Ok(d)
    }
}

/// Admissible fillings of the first two rows for `u = 12`: row 2 is all
/// 2s, row 1 is 1s over row 2 followed by singleton columns that must
/// include both a 1 and a 2 when there are any.
fn word12_top_rows(shape: &Partition, m: u32) -> u64 {
    if shape.is_empty() {
        return 1;
    }
    if m < 2 {
        return 0;
    }
    match shape.part(1) - shape.part(2) {
        0 => 1,
        1 => 0,
        s => (s - 1) as u64,
    }
}

/// `g_m^λ`: insertion tableaux of shape `λ` with entries in `[m]` that
/// belong to `P(C(u))` for the family.
fn g_lambda(family: Family, shape: &Partition, m: u32, cache: &mut ShapeCache) -> Result<BigUint> {
    let r = family.constrained_rows();
    let lower = shape.rows(r + 1, shape.num_rows());
    let top = match family {
        // By the Bender-Knuth bijection the count does not depend on a <= m.
        Family::Single(a) if a > m => return Ok(if shape.is_empty() { BigUint::one() } else { BigUint::zero() }),
        Family::Single(_) => BigUint::one(),
        Family::Staircase(k) => count_ssyt_between(&shape.rows(1, r), 1, k.min(m), cache)?,
        Family::Word12 => BigUint::from(word12_top_rows(shape, m)),
    };
    if top.is_zero() {
        return Ok(top);
    }
    Ok(top * count_ssyt_between(&lower, r as u32 + 1, m, cache)?)
}

/// `c_{n,m}(u)` as `Σ_{λ ⊢ n} g_m^λ f^λ` for a family `u`.
pub fn count_by_shapes(family: Family, n: usize, m: u32) -> Result<BigUint> {
    let mut cache = ShapeCache::default();
    count_by_shapes_cached(family, n, m, &mut cache)
}

fn count_by_shapes_cached(family: Family, n: usize, m: u32, cache: &mut ShapeCache) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for shape in Partition::all(n) {
        let g = g_lambda(family, &shape, m, cache)?;
        if !g.is_zero() {
            total += g * f_lambda(&shape);
        }
    }
    Ok(total)
}

/// Integer coefficients `a_k` of `Σ a_k C(m, k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BinomialPoly(Vec<BigInt>);

impl BinomialPoly {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BinomialPoly(coeffs)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    /// Degree in `m`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, m: u64) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(k, a)| a * BigInt::from(binomial(m, k as u64)))
            .sum()
    }

    /// Coefficients as machine integers, when they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }
}

/// `C(m,1) + 4*C(m,2) + C(m,3)`; the constant term is printed bare.
impl fmt::Display for BinomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "C(m,{k})")?,
                (_, false) => write!(f, "{mag}*C(m,{k})")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A JSON array of integers; coefficients beyond `i64` are written as
/// decimal strings.
impl Serialize for BinomialPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for a in &self.0 {
            match a.to_i64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&a.to_string())?,
            }
        }
        seq.end()
    }
}

/// Fits a degree-`samples.len() - 1` polynomial through consecutive values
/// at `start, start + 1, ...` and returns its binomial-basis coefficients.
pub fn interpolate_binomial(start: u64, samples: &[BigInt]) -> BinomialPoly {
    let d = samples.len().saturating_sub(1);
    // forward differences at `start`
    let mut diffs = Vec::with_capacity(samples.len());
    let mut row = samples.to_vec();
    while !row.is_empty() {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // values at 0..=d by Newton's forward formula
    let mut values: Vec<BigInt> = (0..=d as u64)
        .map(|x| {
            let t = BigInt::from(x) - BigInt::from(start);
            diffs
                .iter()
                .enumerate()
                .map(|(j, dj)| dj * binomial_signed(&t, j as u64))
                .sum()
        })
        .collect();
    // forward differences at 0 are the binomial coefficients
    let mut coeffs = Vec::with_capacity(values.len());
    while !values.is_empty() {
        coeffs.push(values[0].clone());
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    BinomialPoly::new(coeffs)
}

/// How [`expand_binomial_with`] obtains sample values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Counter {
    Shapes,
    BruteForce(Budget),
}

/// `c_{n,m}(u)` in the basis `C(m, k)`, for `u` in one of the supported
/// families, using [`count_by_shapes`].
pub fn expand_binomial(u: &[u32], n: usize) -> Result<BinomialPoly> {
    expand_binomial_with(u, n, Counter::Shapes)
}

/// Samples `c_{n,m}(u)` at `d + 2` consecutive values of `m` starting where
/// the family is polynomial (`d = n - r`), fits on the first `d + 1` and
/// checks the last.
pub fn expand_binomial_with(u: &[u32], n: usize, counter: Counter) -> Result<BinomialPoly> {
    let family = Family::from_word(u)?;
    let r = family.constrained_rows();
    if n < r {
        return Err(Error::LengthBelowFamily { n, r });
    }
    let d = n - r;
    let start = family.first_polynomial_m(n);
    let mut cache = ShapeCache::default();
    let mut count = |m: u32| -> Result<BigInt> {
        Ok(match counter {
            Counter::Shapes => BigInt::from(count_by_shapes_cached(family, n, m, &mut cache)?),
            Counter::BruteForce(budget) => BigInt::from(count_centralizer(u, n, m, budget)?),
        })
    };
    let samples = (0..=d as u32).map(|i| count(start + i)).collect::<Result<Vec<_>>>()?;
    let poly = interpolate_binomial(start as u64, &samples);
    let check_m = start + d as u32 + 1;
    let actual = count(check_m)?;
    let predicted = poly.eval(check_m as u64);
    if predicted != actual {
        return Err(Error::ValidationFailed {
            m: check_m,
            predicted: predicted.to_string(),
            actual: actual.to_string(),
        });
    }
    Ok(poly)
}

/// `C(n, floor(n/2))`.
pub fn central_binomial(n: u64) -> BigUint {
    binomial(n, n / 2)
}
