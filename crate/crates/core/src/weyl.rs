//! Irreducible representations of symmetric and hyperoctahedral groups,
//! Littlewood–Richardson products and the closed-form inductions used by
//! the coherent-continuation multiplicity oracle.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{partitions, YoungDiagram};
use crate::parity::CellType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("sizes do not match: |{a}| + |{b}| != |{target}|")]
    SizeMismatch { a: YoungDiagram, b: YoungDiagram, target: YoungDiagram },
    #[error("rank mismatch: irrep of rank {irrep} against group of rank {group}")]
    RankMismatch { irrep: usize, group: usize },
    #[error("cannot parse irrep {0:?}")]
    Parse(String),
}

/// Irreducible of the hyperoctahedral group `W_n`, `n = |left| + |right|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BipartitionIrrep {
    pub left: YoungDiagram,
    pub right: YoungDiagram,
}

impl BipartitionIrrep {
    pub fn new(left: YoungDiagram, right: YoungDiagram) -> Self {
        Self { left, right }
    }

    pub fn rank(&self) -> usize {
        self.left.size() + self.right.size()
    }

    /// Twist by the quadratic character `ε`, which swaps the two halves.
    pub fn twist(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone())
    }

    pub fn dimension(&self) -> u128 {
        binomial(self.rank(), self.left.size()) * self.left.hook_dimension() * self.right.hook_dimension()
    }
}

impl fmt::Display for BipartitionIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

impl FromStr for BipartitionIrrep {
    type Err = WeylError;

    /// Parses `"2,1|1"`: left rows, a bar, right rows.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (l, r) = s.split_once('|').ok_or_else(|| WeylError::Parse(s.to_string()))?;
        let parse = |x: &str| x.parse::<YoungDiagram>().map_err(|_| WeylError::Parse(s.to_string()));
        Ok(Self::new(parse(l)?, parse(r)?))
    }
}

/// Irreducible of the index-two subgroup `W'_n`: an unordered pair, with a
/// decoration exactly when the two halves coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WPrimeIrrep {
    pub left: YoungDiagram,
    pub right: YoungDiagram,
    pub decoration: Option<CellType>,
}

impl WPrimeIrrep {
    /// Canonicalizes the pair; the decoration is dropped for unequal halves.
    pub fn new(a: YoungDiagram, b: YoungDiagram, decoration: CellType) -> Self {
        if a == b {
            Self { left: a, right: b, decoration: Some(decoration) }
        } else {
            let (left, right) = if a >= b { (a, b) } else { (b, a) };
            Self { left, right, decoration: None }
        }
    }

    pub fn rank(&self) -> usize {
        self.left.size() + self.right.size()
    }
}

impl fmt::Display for WPrimeIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.decoration {
            Some(t) => write!(f, "({}, {})_{}", self.left, self.right, t),
            None => write!(f, "({}, {})'", self.left, self.right),
        }
    }
}

/// An irreducible of one of the integral Weyl group factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WIrrep {
    W(BipartitionIrrep),
    WPrime(WPrimeIrrep),
}

impl WIrrep {
    /// The underlying ordered pair of diagrams.
    pub fn halves(&self) -> (&YoungDiagram, &YoungDiagram) {
        match self {
            WIrrep::W(x) => (&x.left, &x.right),
            WIrrep::WPrime(x) => (&x.left, &x.right),
        }
    }
}

impl fmt::Display for WIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WIrrep::W(x) => x.fmt(f),
            WIrrep::WPrime(x) => x.fmt(f),
        }
    }
}

/// A genuine representation as a multiset of irreducibles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualRep<K: Ord> {
    terms: BTreeMap<K, u64>,
}

impl<K: Ord> Default for VirtualRep<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> VirtualRep<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(k: K) -> Self {
        let mut v = Self::new();
        v.add(k, 1);
        v
    }

    pub fn add(&mut self, k: K, m: u64) {
        if m > 0 {
            *self.terms.entry(k).or_insert(0) += m;
        }
    }

    pub fn add_all(&mut self, other: &Self) {
        for (k, &m) in &other.terms {
            self.add(k.clone(), m);
        }
    }

    pub fn multiplicity(&self, k: &K) -> u64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

thread_local! {
    static LR_CACHE: RefCell<HashMap<(YoungDiagram, YoungDiagram, YoungDiagram), u64>> =
        RefCell::new(HashMap::new());
}

/// Littlewood–Richardson coefficient `c^target_{a,b}`.
pub fn lr_coeff(a: &YoungDiagram, b: &YoungDiagram, target: &YoungDiagram) -> Result<u64, WeylError> {
    if a.size() + b.size() != target.size() {
        return Err(WeylError::SizeMismatch { a: a.clone(), b: b.clone(), target: target.clone() });
    }
    if !target.contains(a) || !target.contains(b) {
        return Ok(0);
    }
    if b.is_empty() || a.is_empty() {
        return Ok(1);
    }
    let key = (a.clone(), b.clone(), target.clone());
    if let Some(v) = LR_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return Ok(v);
    }
    let v = lr_tableaux(a, b, target);
    LR_CACHE.with(|c| c.borrow_mut().insert(key, v));
    Ok(v)
}

/// Counts LR tableaux of skew shape `target/a` and content `b` by filling
/// cells in reverse reading order (rows top to bottom, each right to left).
fn lr_tableaux(a: &YoungDiagram, b: &YoungDiagram, target: &YoungDiagram) -> u64 {
    let cells: Vec<(usize, usize)> =
        (1..=target.len()).flat_map(|i| ((a.r(i) + 1)..=target.r(i)).rev().map(move |j| (i, j))).collect();
    let width = target.r(1) + 1;
    let height = target.len() + 1;
    let mut grid = vec![0usize; width * height];
    let mut content = vec![0usize; b.len() + 1];

    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        a: &YoungDiagram,
        b: &YoungDiagram,
        target: &YoungDiagram,
        grid: &mut [usize],
        width: usize,
        content: &mut [usize],
    ) -> u64 {
        let Some(&(i, j)) = cells.get(k) else { return 1 };
        let mut hi = b.len();
        if j < target.r(i) {
            hi = hi.min(grid[i * width + j + 1]);
        }
        let mut lo = 1;
        if i > 1 && j > a.r(i - 1) {
            lo = grid[(i - 1) * width + j] + 1;
        }
        let mut total = 0;
        for v in lo..=hi {
            if content[v] >= b.r(v) || (v > 1 && content[v] + 1 > content[v - 1]) {
                continue;
            }
            content[v] += 1;
            grid[i * width + j] = v;
            total += go(k + 1, cells, a, b, target, grid, width, content);
            grid[i * width + j] = 0;
            content[v] -= 1;
        }
        total
    }

    go(0, &cells, a, b, target, &mut grid, width, &mut content)
}

/// Product of two `W` irreducibles induced up to `W_{a+b}`.
pub fn induct_bipartitions(x: &BipartitionIrrep, y: &BipartitionIrrep) -> VirtualRep<BipartitionIrrep> {
    let mut out = VirtualRep::new();
    let nl = x.left.size() + y.left.size();
    let nr = x.right.size() + y.right.size();
    let lefts: Vec<(YoungDiagram, u64)> = partitions(nl)
        .into_iter()
        .filter_map(|l| {
            let m = lr_coeff(&x.left, &y.left, &l).unwrap_or(0);
            (m > 0).then_some((l, m))
        })
        .collect();
    let rights: Vec<(YoungDiagram, u64)> = partitions(nr)
        .into_iter()
        .filter_map(|r| {
            let m = lr_coeff(&x.right, &y.right, &r).unwrap_or(0);
            (m > 0).then_some((r, m))
        })
        .collect();
    for (l, ml) in &lefts {
        for (r, mr) in &rights {
            out.add(BipartitionIrrep::new(l.clone(), r.clone()), ml * mr);
        }
    }
    out
}

/// Induction of a product of representations of `W_a × W_b` to `W_{a+b}`.
pub fn induct(x: &VirtualRep<BipartitionIrrep>, y: &VirtualRep<BipartitionIrrep>) -> VirtualRep<BipartitionIrrep> {
    let mut out = VirtualRep::new();
    for (a, ma) in x.iter() {
        for (b, mb) in y.iter() {
            for (c, mc) in induct_bipartitions(a, b).iter() {
                out.add(c.clone(), ma * mb * mc);
            }
        }
    }
    out
}

/// Multiplicity of one irreducible in the induction of `x ⊗ y`, without
/// materializing the whole product.
pub fn induct_multiplicity(
    x: &VirtualRep<BipartitionIrrep>,
    y: &VirtualRep<BipartitionIrrep>,
    target: &BipartitionIrrep,
) -> u64 {
    let mut total = 0;
    for (a, ma) in x.iter() {
        for (b, mb) in y.iter() {
            if a.left.size() + b.left.size() != target.left.size() {
                continue;
            }
            let l = lr_coeff(&a.left, &b.left, &target.left).unwrap_or(0);
            if l == 0 {
                continue;
            }
            let r = lr_coeff(&a.right, &b.right, &target.right).unwrap_or(0);
            total += ma * mb * l * r;
        }
    }
    total
}

/// The closed-form induced representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialInduction {
    /// `η` from `H_t` to `W_{2t}`.
    EtaToW,
    /// `η` from `H_t` to `W'_{2t}`.
    EtaToWPrime,
    /// `sgn` from `S_t` to `W_t`.
    SignToW,
    /// trivial from `S_t` to `W_t`.
    TrivialToW,
    /// `ε` from `W_t` to `S_{2t}`.
    EpsilonToS,
    /// trivial from `W_t` to `S_{2t}`.
    TrivialWToS,
}

fn column(k: usize) -> YoungDiagram {
    YoungDiagram::from_rows(vec![1; k])
}

fn row(k: usize) -> YoungDiagram {
    YoungDiagram::from_rows([k])
}

pub fn eta_to_w(t: usize) -> VirtualRep<BipartitionIrrep> {
    let mut v = VirtualRep::new();
    for s in partitions(t) {
        v.add(BipartitionIrrep::new(s.clone(), s), 1);
    }
    v
}

pub fn eta_to_wprime(t: usize) -> VirtualRep<WPrimeIrrep> {
    let mut v = VirtualRep::new();
    for s in partitions(t) {
        v.add(WPrimeIrrep::new(s.clone(), s, CellType::I), 1);
    }
    v
}

pub fn sign_to_w(t: usize) -> VirtualRep<BipartitionIrrep> {
    let mut v = VirtualRep::new();
    for s in 0..=t {
        v.add(BipartitionIrrep::new(column(s), column(t - s)), 1);
    }
    v
}

pub fn trivial_to_w(t: usize) -> VirtualRep<BipartitionIrrep> {
    let mut v = VirtualRep::new();
    for c in 0..=t {
        v.add(BipartitionIrrep::new(row(c), row(t - c)), 1);
    }
    v
}

pub fn epsilon_to_s(t: usize) -> VirtualRep<YoungDiagram> {
    let mut v = VirtualRep::new();
    for s in partitions(2 * t) {
        if s.cols().iter().all(|c| c % 2 == 0) {
            v.add(s, 1);
        }
    }
    v
}

pub fn trivial_w_to_s(t: usize) -> VirtualRep<YoungDiagram> {
    let mut v = VirtualRep::new();
    for s in partitions(2 * t) {
        if s.rows().iter().all(|r| r % 2 == 0) {
            v.add(s, 1);
        }
    }
    v
}

/// Index of the source subgroup in the target group, for dimension audits.
pub fn special_induction_index(kind: SpecialInduction, t: usize) -> u128 {
    let w = |n: usize| factorial(n) << n;
    match kind {
        SpecialInduction::EtaToW => w(2 * t) / (factorial(t) << (2 * t)),
        SpecialInduction::EtaToWPrime if t == 0 => 1,
        SpecialInduction::EtaToWPrime => (w(2 * t) / 2) / (factorial(t) << (2 * t)),
        SpecialInduction::SignToW | SpecialInduction::TrivialToW => w(t) / factorial(t),
        SpecialInduction::EpsilonToS | SpecialInduction::TrivialWToS => factorial(2 * t) / w(t),
    }
}

/// Representation of `S_n` tensored with `sgn`.
pub fn s_twist_sign(v: &VirtualRep<YoungDiagram>) -> VirtualRep<YoungDiagram> {
    let mut out = VirtualRep::new();
    for (k, m) in v.iter() {
        out.add(k.transpose(), m);
    }
    out
}

/// Restriction from `W_n` to `W'_n`.
pub fn restrict_to_wprime(x: &BipartitionIrrep) -> Vec<WPrimeIrrep> {
    if x.left == x.right && x.rank() > 0 {
        vec![
            WPrimeIrrep::new(x.left.clone(), x.right.clone(), CellType::I),
            WPrimeIrrep::new(x.left.clone(), x.right.clone(), CellType::II),
        ]
    } else {
        vec![WPrimeIrrep::new(x.left.clone(), x.right.clone(), CellType::I)]
    }
}

/// Lowest degree in which an irreducible occurs in the coinvariant algebra.
pub fn a_invariant_s(lambda: &YoungDiagram) -> usize {
    lambda.n_invariant()
}

pub fn a_invariant_w(x: &BipartitionIrrep) -> usize {
    2 * x.left.n_invariant() + 2 * x.right.n_invariant() + x.right.size()
}

pub fn a_invariant_wprime(x: &WPrimeIrrep) -> usize {
    2 * x.left.n_invariant() + 2 * x.right.n_invariant() + x.left.size().min(x.right.size())
}

pub fn a_invariant(x: &WIrrep) -> usize {
    match x {
        WIrrep::W(b) => a_invariant_w(b),
        WIrrep::WPrime(b) => a_invariant_wprime(b),
    }
}
