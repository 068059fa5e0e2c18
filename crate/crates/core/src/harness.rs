//! Exhaustive sweeps over finite ranges of `u` and `w` that look for
//! counterexamples to the open conjectures about centralizers.
//!
//! A sweep never proves anything: a `holds` verdict means no violation was
//! found inside the configured range, which the report echoes. Work is split
//! into contiguous lexicographic shards processed in parallel and merged in
//! order, so the report does not depend on the shard count.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::budget::{words_up_to, Budget};
use crate::centralizer::{in_centralizer, Commutator};
use crate::enumeration::expand_binomial;
use crate::error::{Error, Result};
use crate::involutions::{rc_m, tau_m};
use crate::rsk::{insert_word, p_tableau};
use crate::tableau::{Ssyt, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// Rows `1..=ℓ(P(u))` of `P(w)` are bounded by `max u` for `w ∈ C(u)`.
    MaxRi,
    /// `C(u^k) ⊆ C(u^{k+1})` for all large `k`, with eventual equality.
    Stability,
    /// Positivity, log-concavity and the mode of the coefficients of
    /// `c_{n,m}(1)` in the basis `C(m, k)`.
    Coefficients,
    /// `P(C(RC_m(u))) = τ_m(P(C(u)))`.
    Rc,
}

impl Conjecture {
    pub fn id(&self) -> &'static str {
        match self {
            Conjecture::MaxRi => "maxri",
            Conjecture::Stability => "stability",
            Conjecture::Coefficients => "coeffs",
            Conjecture::Rc => "rc",
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maxri" => Ok(Conjecture::MaxRi),
            "stability" => Ok(Conjecture::Stability),
            "coeffs" | "coefficients" => Ok(Conjecture::Coefficients),
            "rc" => Ok(Conjecture::Rc),
            other => Err(Error::InvalidConfig(format!("unknown conjecture {other:?}"))),
        }
    }
}

impl Serialize for Conjecture {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

fn serialize_budget<S: Serializer>(b: &Budget, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(b.0)
}

/// Ranges and execution limits of one sweep.
///
/// The `u` words examined are those with `1 <= |u| <= u_length`,
/// `max u <= u_alphabet` and, when `u_sum` is set, `max u + |u| <= u_sum`;
/// setting `u` replaces that family by a single word. `w` ranges over every
/// word in `[w_alphabet]` of length at most `w_length`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub conjecture: Conjecture,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<Word>,
    pub u_alphabet: u32,
    pub u_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_sum: Option<u32>,
    pub w_alphabet: u32,
    pub w_length: usize,
    /// Largest power `u^k` examined by the stability sweep.
    pub k_bound: usize,
    /// Fixed `m` for the reverse-complement sweep; otherwise every
    /// admissible `m` is tried.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rc_m: Option<u32>,
    /// Largest `n` for the coefficient check.
    pub n_max: usize,
    /// Number of lexicographic blocks; does not affect the report.
    #[serde(skip)]
    pub shards: usize,
    #[serde(serialize_with = "serialize_budget")]
    pub budget: Budget,
}

impl SweepConfig {
    /// Desk-scale defaults for `conjecture`.
    pub fn new(conjecture: Conjecture) -> Self {
        SweepConfig {
            conjecture,
            u: None,
            u_alphabet: 6,
            u_length: 6,
            u_sum: Some(7),
            w_alphabet: 4,
            w_length: 5,
            k_bound: 4,
            rc_m: None,
            n_max: 8,
            shards: 1,
            budget: Budget::from_env(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidConfig(format!("{what} must be at least 1")));
        if self.u_alphabet == 0 {
            return bad("u alphabet bound");
        }
        if self.u_length == 0 {
            return bad("u length bound");
        }
        if self.w_alphabet == 0 {
            return bad("w alphabet bound");
        }
        if self.w_length == 0 {
            return bad("w length bound");
        }
        if self.k_bound == 0 {
            return bad("k bound");
        }
        if self.n_max == 0 {
            return bad("n bound");
        }
        if self.shards == 0 {
            return bad("shard count");
        }
        if self.budget.0 == 0 {
            return bad("budget");
        }
        if self.u_sum == Some(0) {
            return bad("u sum bound");
        }
        if self.conjecture == Conjecture::Stability && self.k_bound < 2 {
            return Err(Error::InvalidConfig("stability needs k bound >= 2".into()));
        }
        if let Some(u) = &self.u {
            if u.is_empty() {
                return Err(Error::InvalidConfig("u must be nonempty".into()));
            }
        }
        Ok(())
    }

    /// The `u` words covered by this configuration, shortest first.
    pub fn u_words(&self) -> Vec<Word> {
        if let Some(u) = &self.u {
            return vec![u.clone()];
        }
        (1..=self.u_length)
            .flat_map(|n| Word::all(self.u_alphabet, n))
            .filter(|u| self.u_sum.is_none_or(|s| u.max_letter() as usize + u.len() <= s as usize))
            .collect()
    }

    /// Every `w` examined, shortest first.
    pub fn w_words(&self) -> Vec<Word> {
        Word::all_up_to(self.w_alphabet, self.w_length).collect()
    }

    /// `(u, m)` pairs for the reverse-complement sweep.
    pub fn rc_pairs(&self) -> Vec<(Word, u32)> {
        self.u_words()
            .into_iter()
            .flat_map(|u| {
                let lo = u.max_letter();
                let hi = match (self.rc_m, self.u_sum) {
                    (Some(m), _) => return if m >= lo { vec![(u, m)] } else { vec![] },
                    (None, Some(s)) if self.u.is_none() => (s as usize).saturating_sub(u.len()) as u32,
                    _ => self.u_alphabet.max(lo),
                };
                (lo..=hi).map(|m| (u.clone(), m)).collect()
            })
            .collect()
    }
}

/// Stops a running sweep early, from another thread or at a deadline.
#[derive(Clone, Debug, Default)]
pub struct Cancel {
    flag: Arc<AtomicBool>,
    deadline: Option<Instant>,
}

impl Cancel {
    pub fn new() -> Self {
        Cancel::default()
    }

    pub fn with_deadline(limit: Duration) -> Self {
        Cancel { flag: Arc::default(), deadline: Some(Instant::now() + limit) }
    }

    /// Shares this token's flag and adds a deadline `limit` from now.
    pub fn with_limit(&self, limit: Duration) -> Self {
        Cancel { flag: Arc::clone(&self.flag), deadline: Some(Instant::now() + limit) }
    }

    pub fn cancel(&self) {
        self.flag.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.flag.load(Ordering::Relaxed) || self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Counterexample,
    Incomplete,
}

/// A reproducible violation; see [`replay`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub u: Word,
    pub w: Word,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl Counterexample {
    fn new(u: &Word, w: &Word, detail: String) -> Self {
        Counterexample { u: u.clone(), w: w.clone(), detail, k: None, m: None, n: None }
    }
}

/// Outcome for a single `u` (or `(u, m)`, or `n`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub u: Word,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub verdict: Verdict,
    /// Smallest `K` with `C(u^k) ⊆ C(u^{k+1})` for `K <= k < k_bound`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_containment: Option<usize>,
    /// Smallest `L` with `C(u^k) = C(u^{k+1})` for `L <= k < k_bound`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_equality: Option<usize>,
    pub detail: String,
}

impl Instance {
    fn new(u: &Word, verdict: Verdict, detail: String) -> Self {
        Instance { u: u.clone(), m: None, n: None, verdict, k_containment: None, l_equality: None, detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub conjecture: Conjecture,
    pub config: SweepConfig,
    pub checked: u64,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub instances: Vec<Instance>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with `elapsed_ms` zeroed, for byte-for-byte comparisons.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

struct Partial {
    checked: u64,
    counterexamples: Vec<Counterexample>,
    instances: Vec<Instance>,
}

/// Maps `f` over `items` in `shards` contiguous blocks and concatenates the
/// results in order. The flag is false if the sweep was cancelled.
fn sharded<T: Sync, R: Send>(items: &[T], shards: usize, cancel: &Cancel, f: impl Fn(&T) -> R + Sync) -> (Vec<R>, bool) {
    if items.is_empty() {
        return (Vec::new(), true);
    }
    let size = items.len().div_ceil(shards.max(1));
    let blocks: Vec<(Vec<R>, bool)> = items
        .par_chunks(size)
        .map(|block| {
            let mut out = Vec::with_capacity(block.len());
            for item in block {
                if cancel.is_cancelled() {
                    return (out, false);
                }
                out.push(f(item));
            }
            (out, true)
        })
        .collect();
    let complete = blocks.iter().all(|(_, done)| *done);
    (blocks.into_iter().flat_map(|(r, _)| r).collect(), complete)
}

fn finish(cfg: &SweepConfig, start: Instant, partials: Vec<Partial>, complete: bool) -> SweepReport {
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    let mut instances = Vec::new();
    for p in partials {
        checked += p.checked;
        counterexamples.extend(p.counterexamples);
        instances.extend(p.instances);
    }
    let verdict = if !complete {
        Verdict::Incomplete
    } else if counterexamples.is_empty() {
        Verdict::Holds
    } else {
        Verdict::Counterexample
    };
    SweepReport {
        conjecture: cfg.conjecture,
        config: cfg.clone(),
        checked,
        verdict,
        counterexamples,
        instances,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// `w` with its insertion tableau.
struct WSpace {
    words: Vec<Word>,
    tableaux: Vec<Ssyt>,
}

impl WSpace {
    fn new(cfg: &SweepConfig) -> Self {
        let words = cfg.w_words();
        let tableaux = words.iter().map(|w| p_tableau(w)).collect();
        WSpace { words, tableaux }
    }

    fn len(&self) -> usize {
        self.words.len()
    }

    /// Membership of every `w` in `C(u)`.
    fn membership(&self, u: &[u32]) -> Vec<bool> {
        let c = Commutator::new(u);
        self.words
            .iter()
            .zip(&self.tableaux)
            .map(|(w, p)| commutes_given_p(&c, w, p))
            .collect()
    }
}

fn commutes_given_p(c: &Commutator, w: &[u32], p_w: &Ssyt) -> bool {
    let mut wu = p_w.clone();
    insert_word(&mut wu, c.u());
    let mut uw = p_tableau(c.u());
    insert_word(&mut uw, w);
    uw == wu
}

/// Runs the sweep described by `cfg`.
pub fn run_sweep(cfg: &SweepConfig, cancel: &Cancel) -> Result<SweepReport> {
    cfg.validate()?;
    match cfg.conjecture {
        Conjecture::MaxRi => max_ri_sweep(cfg, cancel),
        Conjecture::Stability => stability_sweep(cfg, cancel),
        Conjecture::Coefficients => coefficients_sweep(cfg, cancel),
        Conjecture::Rc => rc_sweep(cfg, cancel),
    }
}

/// Rows `1..=ℓ` of `P(w)` bounded by `max u` for every `w ∈ C(u)` in range.
pub fn check_max_ri(cfg: &SweepConfig) -> Result<SweepReport> {
    let cfg = SweepConfig { conjecture: Conjecture::MaxRi, ..cfg.clone() };
    run_sweep(&cfg, &Cancel::new())
}

fn max_ri_sweep(cfg: &SweepConfig, cancel: &Cancel) -> Result<SweepReport> {
    let start = Instant::now();
    let us = cfg.u_words();
    cfg.budget.check(us.len() as u128 * words_up_to(cfg.w_alphabet, cfg.w_length))?;
    let space = WSpace::new(cfg);
    let (partials, complete) = sharded(&us, cfg.shards, cancel, |u| {
        let rows = p_tableau(u).num_rows();
        let bound = u.max_letter();
        let c = Commutator::new(u);
        let mut members = 0;
        let mut cxs = Vec::new();
        for (w, p) in space.words.iter().zip(&space.tableaux) {
            if !commutes_given_p(&c, w, p) {
                continue;
            }
            members += 1;
            if let Some(i) = (1..=rows).find(|&i| p.row(i).last().is_some_and(|&x| x > bound)) {
                let x = p.row(i).last().unwrap();
                cxs.push(Counterexample::new(
                    u,
                    w,
                    format!("row {i} of P(w) has maximum {x} > max u = {bound} (P(u) has {rows} rows)"),
                ));
            }
        }
        let verdict = if cxs.is_empty() { Verdict::Holds } else { Verdict::Counterexample };
        let detail = format!("{members} of {} words commute; P(u) has {rows} rows", space.len());
        Partial { checked: space.len() as u64, counterexamples: cxs, instances: vec![Instance::new(u, verdict, detail)] }
    });
    Ok(finish(cfg, start, partials, complete))
}

/// Stability of `C(u^k)` in `k` for a single `u`.
pub fn check_stability(u: &Word, cfg: &SweepConfig) -> Result<SweepReport> {
    let cfg = SweepConfig { conjecture: Conjecture::Stability, u: Some(u.clone()), ..cfg.clone() };
    run_sweep(&cfg, &Cancel::new())
}

/// Smallest `K` such that `holds[k]` for every step `k >= K`; steps are
/// numbered from 1. `None` if the last step fails.
fn eventual_start(holds: &[bool]) -> Option<usize> {
    match holds.iter().rposition(|&h| !h) {
        None => Some(1),
        Some(i) if i + 1 == holds.len() => None,
        Some(i) => Some(i + 2),
    }
}

struct StabilityOutcome {
    k_containment: Option<usize>,
    l_equality: Option<usize>,
    /// First `w` in `C(u^k) \ C(u^{k+1})` for every failing `k`.
    witnesses: Vec<(usize, Word)>,
}

fn stability_for(u: &Word, space: &WSpace, k_bound: usize, shards: usize, cancel: &Cancel) -> Option<StabilityOutcome> {
    let powers: Vec<usize> = (1..=k_bound).collect();
    let (sets, complete) = sharded(&powers, shards, cancel, |&k| space.membership(&u.power(k)));
    if !complete {
        return None;
    }
    let mut contained = Vec::with_capacity(k_bound - 1);
    let mut equal = Vec::with_capacity(k_bound - 1);
    let mut witnesses = Vec::new();
    for k in 1..k_bound {
        let (a, b) = (&sets[k - 1], &sets[k]);
        let escape = (0..space.len()).find(|&i| a[i] && !b[i]);
        if let Some(i) = escape {
            witnesses.push((k, space.words[i].clone()));
        }
        contained.push(escape.is_none());
        equal.push(a == b);
    }
    Some(StabilityOutcome {
        k_containment: eventual_start(&contained),
        l_equality: eventual_start(&equal),
        witnesses,
    })
}

fn stability_sweep(cfg: &SweepConfig, cancel: &Cancel) -> Result<SweepReport> {
    let start = Instant::now();
    let us = cfg.u_words();
    let per_u = words_up_to(cfg.w_alphabet, cfg.w_length) * cfg.k_bound as u128;
    cfg.budget.check(us.len() as u128 * per_u)?;
    let space = WSpace::new(cfg);
    // a single u is sharded over its powers, a family over the u words
    let (inner, outer) = if us.len() == 1 { (cfg.shards, 1) } else { (1, cfg.shards) };
    let (partials, complete) = sharded(&us, outer, cancel, |u| {
        let Some(out) = stability_for(u, &space, cfg.k_bound, inner, cancel) else {
            return None;
        };
        let top = cfg.k_bound - 1;
        let cxs: Vec<Counterexample> = out
            .witnesses
            .iter()
            .filter(|(k, _)| *k == top)
            .map(|(k, w)| Counterexample {
                k: Some(*k),
                ..Counterexample::new(u, w, format!("w in C(u^{k}) but not in C(u^{})", k + 1))
            })
            .collect();
        let show = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
        let mut detail = format!("K={} L={}", show(out.k_containment), show(out.l_equality));
        for (k, w) in &out.witnesses {
            detail.push_str(&format!("; C(u^{k}) not in C(u^{}) e.g. w={w}", k + 1));
        }
        let verdict = if cxs.is_empty() { Verdict::Holds } else { Verdict::Counterexample };
        let instance = Instance {
            k_containment: out.k_containment,
            l_equality: out.l_equality,
            ..Instance::new(u, verdict, detail)
        };
        Some(Partial { checked: per_u as u64, counterexamples: cxs, instances: vec![instance] })
    });
    let complete = complete && partials.iter().all(Option::is_some);
    Ok(finish(cfg, start, partials.into_iter().flatten().collect(), complete))
}

/// Which of the four coefficient properties fail, if any.
pub fn coefficient_failures(n: usize, a: &[i128]) -> Vec<String> {
    let get = |k: usize| a.get(k).copied().unwrap_or(0);
    let mut fails = Vec::new();
    if get(0) != 0 || get(1) != 1 {
        fails.push(format!("(a) a_0 = {}, a_1 = {}", get(0), get(1)));
    }
    if let Some(k) = (1..n).find(|&k| get(k) < 1) {
        fails.push(format!("(b) a_{k} = {} is not positive", get(k)));
    }
    if let Some(k) = (1..n.saturating_sub(1)).find(|&k| get(k) * get(k) < get(k - 1) * get(k + 1)) {
        fails.push(format!("(c) a_{k}^2 < a_{}*a_{}", k - 1, k + 1));
    }
    let mode = n.div_ceil(2);
    if n >= 2 && (1..n).any(|k| get(k) > get(mode)) {
        fails.push(format!("(d) a_{mode} is not the maximum of a_1..a_{}", n - 1));
    }
    fails
}

/// The coefficient properties of `c_{n,m}(1)` for `2 <= n <= n_max`.
pub fn check_coefficients(n_max: usize) -> Result<SweepReport> {
    let cfg = SweepConfig { n_max, ..SweepConfig::new(Conjecture::Coefficients) };
    run_sweep(&cfg, &Cancel::new())
}

fn coefficient_vector(n: usize) -> Result<Vec<i128>> {
    let poly = expand_binomial(&[1], n)?;
    poly.coefficients()
        .iter()
        .map(|c| i128::try_from(c).map_err(|_| Error::InvalidConfig(format!("coefficient {c} of n={n} overflows"))))
        .collect()
}

fn coefficients_sweep(cfg: &SweepConfig, cancel: &Cancel) -> Result<SweepReport> {
    let start = Instant::now();
    // largest brute-force-free step is linear extensions of n - 1 cells
    if cfg.n_max > 12 {
        cfg.budget.check((1..=cfg.n_max as u128).product())?;
    }
    let ns: Vec<usize> = (2..=cfg.n_max).collect();
    let one = Word::new(vec![1]).expect("positive");
    let (results, complete) = sharded(&ns, cfg.shards, cancel, |&n| -> Result<Partial> {
        let a = coefficient_vector(n)?;
        let fails = coefficient_failures(n, &a);
        let shown = a.iter().map(i128::to_string).collect::<Vec<_>>().join(",");
        let cxs = fails
            .iter()
            .map(|f| Counterexample { n: Some(n), ..Counterexample::new(&one, &Word::empty(), format!("n={n} [{shown}]: {f}")) })
            .collect::<Vec<_>>();
        let verdict = if cxs.is_empty() { Verdict::Holds } else { Verdict::Counterexample };
        let instance = Instance { n: Some(n), ..Instance::new(&one, verdict, format!("[{shown}]")) };
        Ok(Partial { checked: 1, counterexamples: cxs, instances: vec![instance] })
    });
    let partials = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(finish(cfg, start, partials, complete))
}

/// `P(C(RC_m(u))) = τ_m(P(C(u)))` for a single `(u, m)`, compared inside
/// the `w` range.
pub fn check_rc(u: &Word, m: u32, cfg: &SweepConfig) -> Result<SweepReport> {
    let cfg = SweepConfig { conjecture: Conjecture::Rc, u: Some(u.clone()), rc_m: Some(m), ..cfg.clone() };
    if u.max_letter() > m {
        return Err(Error::InvalidConfig(format!("max u = {} exceeds m = {m}", u.max_letter())));
    }
    run_sweep(&cfg, &Cancel::new())
}

fn tableau_set(space: &WSpace, u: &[u32]) -> BTreeSet<Ssyt> {
    space
        .membership(u)
        .into_iter()
        .zip(&space.tableaux)
        .filter_map(|(inside, p)| inside.then(|| p.clone()))
        .collect()
}

fn rc_sweep(cfg: &SweepConfig, cancel: &Cancel) -> Result<SweepReport> {
    let start = Instant::now();
    let pairs = cfg.rc_pairs();
    let per_pair = 2 * words_up_to(cfg.w_alphabet, cfg.w_length);
    cfg.budget.check(pairs.len() as u128 * per_pair)?;
    let space = WSpace::new(cfg);
    let in_range = |t: &Ssyt| t.num_cells() <= cfg.w_length && t.max_entry() <= cfg.w_alphabet;
    let (partials, complete) = sharded(&pairs, cfg.shards, cancel, |(u, m)| {
        let m = *m;
        let v = rc_m(u, m);
        let ours = tableau_set(&space, u);
        let theirs = tableau_set(&space, &v);
        let mut cxs = Vec::new();
        // a tableau whose image leaves the range cannot be compared
        for (from, src, dst) in [(u, &ours, &theirs), (&v, &theirs, &ours)] {
            for t in src {
                let image = tau_m(t, m);
                if in_range(&image) && !dst.contains(&image) {
                    cxs.push(Counterexample {
                        m: Some(m),
                        ..Counterexample::new(
                            from,
                            &t.row_word(),
                            format!("tau_{m}(P(w)) = {:?} is not P of a word in C(RC_{m}(u))", image.rows()),
                        )
                    });
                }
            }
        }
        let verdict = if cxs.is_empty() { Verdict::Holds } else { Verdict::Counterexample };
        let detail = format!("RC_{m}(u) = {v}; |P(C(u))| = {}, |P(C(RC_{m}(u)))| = {}", ours.len(), theirs.len());
        let instance = Instance { m: Some(m), ..Instance::new(u, verdict, detail) };
        Partial { checked: per_pair as u64, counterexamples: cxs, instances: vec![instance] }
    });
    Ok(finish(cfg, start, partials, complete))
}

/// Re-derives a counterexample from its payload alone; true iff the
/// violation is reproduced.
pub fn replay(conjecture: Conjecture, cx: &Counterexample) -> bool {
    let (u, w) = (&cx.u, &cx.w);
    match conjecture {
        Conjecture::MaxRi => {
            let rows = p_tableau(u).num_rows();
            let p = p_tableau(w);
            in_centralizer(u, w) && (1..=rows).any(|i| p.row(i).last().is_some_and(|&x| x > u.max_letter()))
        }
        Conjecture::Stability => cx.k.is_some_and(|k| {
            in_centralizer(&u.power(k), w) && !in_centralizer(&u.power(k + 1), w)
        }),
        Conjecture::Coefficients => cx
            .n
            .is_some_and(|n| coefficient_vector(n).is_ok_and(|a| !coefficient_failures(n, &a).is_empty())),
        Conjecture::Rc => cx.m.is_some_and(|m| {
            u.max_letter() <= m
                && in_centralizer(u, w)
                && !in_centralizer(&rc_m(u, m), &tau_m(&p_tableau(w), m).row_word())
        }),
    }
}
