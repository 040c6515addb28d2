//! Non-crossing partitions of `{1..n}`: enumeration, the partial orders
//! `<=` (reverse refinement), `<<` and the interval refinement order,
//! Kreweras complementation, Möbius values and block nesting.
//!
//! Elements are 1-based throughout. A partition is always held in canonical
//! form: elements ascending inside each block, blocks sorted by minimum.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Largest `n` for which `NC(n)` is enumerated unless a caller asks otherwise.
pub const DEFAULT_LIMIT: usize = 12;

/// Largest `n` accepted by [`moebius_oracle`].
pub const ORACLE_LIMIT: usize = 8;

/// Catalan number `(2n)! / (n! (n+1)!)`, with `catalan(0) = 1`.
pub fn catalan(n: usize) -> u64 {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockRole {
    Inner,
    Outer,
}

/// A non-crossing partition of `{1..n}` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct NcPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
    // labels[i - 1] is the index of the block containing i.
    labels: Vec<usize>,
}

impl NcPartition {
    /// Validates and canonicalizes `blocks`, which must partition `{1..n}`
    /// without crossings.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        validate_set_partition(n, &blocks)?;
        let p = Self::from_blocks_unchecked(n, blocks);
        if has_crossing(&p.labels) {
            return Err(Error::InvalidPartition(format!("{p} has a crossing")));
        }
        Ok(p)
    }

    /// Builds from blocks already known to form a non-crossing partition.
    pub(crate) fn from_blocks_unchecked(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut labels = vec![0; n];
        for (idx, b) in blocks.iter().enumerate() {
            for &e in b {
                labels[e - 1] = idx;
            }
        }
        NcPartition { blocks, n, labels }
    }

    /// Groups `1..=n` by label value.
    pub(crate) fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match seen.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, idx)) => blocks[idx].push(i + 1),
                None => {
                    seen.push((l, blocks.len()));
                    blocks.push(vec![i + 1]);
                }
            }
        }
        Self::from_blocks_unchecked(n, blocks)
    }

    /// The discrete partition `0_n`.
    pub fn zero(n: usize) -> Self {
        Self::from_blocks_unchecked(n, (1..=n).map(|i| vec![i]).collect())
    }

    /// The one-block partition `1_n`.
    pub fn one(n: usize) -> Self {
        Self::from_blocks_unchecked(n, vec![(1..=n).collect()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, idx: usize) -> &[usize] {
        &self.blocks[idx]
    }

    /// Number of blocks, `|π|`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing element `i` (1-based).
    pub fn block_of(&self, i: usize) -> usize {
        self.labels[i - 1]
    }

    /// True when every block is a run of consecutive integers.
    pub fn is_interval(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }

    /// JSON array-of-arrays form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.blocks).expect("blocks serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = serde_json::from_str(s)?;
        Self::try_from(blocks)
    }
}

impl TryFrom<Vec<Vec<usize>>> for NcPartition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().map(Vec::len).sum();
        Self::new(n, blocks)
    }
}

impl From<NcPartition> for Vec<Vec<usize>> {
    fn from(p: NcPartition) -> Self {
        p.blocks
    }
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "{{")?;
            for (i, e) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPartition({self})")
    }
}

/// Parses a brace list such as `{1,5,6}{2,4}{3}` into raw blocks of integers.
pub(crate) fn parse_brace_blocks(s: &str) -> Result<Vec<Vec<i64>>> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
    let mut blocks = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('{')
            .ok_or_else(|| bad("expected '{'"))?;
        let close = body.find('}').ok_or_else(|| bad("unclosed block"))?;
        let inner = &body[..close];
        let block = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad("bad element")))
            .collect::<Result<Vec<_>>>()?;
        blocks.push(block);
        rest = body[close + 1..].trim_start();
    }
    if blocks.is_empty() {
        return Err(bad("no blocks"));
    }
    Ok(blocks)
}

impl FromStr for NcPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_brace_blocks(s)?;
        let blocks = raw
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|e| {
                        usize::try_from(e)
                            .ok()
                            .filter(|&e| e >= 1)
                            .ok_or_else(|| Error::InvalidPartition(format!("element {e} < 1")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::try_from(blocks)
    }
}

fn validate_set_partition(n: usize, blocks: &[Vec<usize>]) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidPartition("ground set must be non-empty".into()));
    }
    let mut seen = vec![false; n];
    for b in blocks {
        if b.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for &e in b {
            if e == 0 || e > n {
                return Err(Error::InvalidPartition(format!("element {e} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[e - 1], true) {
                return Err(Error::InvalidPartition(format!("element {e} repeated")));
            }
        }
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidPartition(format!("element {} missing", missing + 1)));
    }
    Ok(())
}

/// Looks for `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub(crate) fn has_crossing(labels: &[usize]) -> bool {
    let m = labels.len();
    for a in 0..m {
        for b in a + 1..m {
            if labels[b] == labels[a] {
                continue;
            }
            for c in b + 1..m {
                if labels[c] != labels[a] {
                    continue;
                }
                if (c + 1..m).any(|d| labels[d] == labels[b]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Decides whether a raw set partition of `{1..n}` is non-crossing.
pub fn is_noncrossing(n: usize, blocks: &[Vec<usize>]) -> Result<bool> {
    validate_set_partition(n, blocks)?;
    let mut labels = vec![0; n];
    for (idx, b) in blocks.iter().enumerate() {
        for &e in b {
            labels[e - 1] = idx;
        }
    }
    Ok(!has_crossing(&labels))
}

/// All of `NC(n)` in lexicographic order of canonical form.
pub fn enumerate_nc(n: usize) -> Result<Vec<NcPartition>> {
    enumerate_nc_limited(n, DEFAULT_LIMIT)
}

pub fn enumerate_nc_limited(n: usize, limit: usize) -> Result<Vec<NcPartition>> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    if n == 0 {
        return Err(Error::InvalidPartition("ground set must be non-empty".into()));
    }
    let mut out: Vec<NcPartition> = nc_raw(n)
        .into_iter()
        .map(|blocks| NcPartition::from_blocks_unchecked(n, blocks))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Raw block lists of every non-crossing partition of `{1..len}`.
///
/// The block containing 1 is `{1 = a_0 < ... < a_r}`; the gaps between
/// consecutive `a_t` and the tail after `a_r` are partitioned independently.
fn nc_raw(len: usize) -> Vec<Vec<Vec<usize>>> {
    let mut memo: Vec<Vec<Vec<Vec<usize>>>> = vec![vec![vec![]]];
    for size in 1..=len {
        let mut level = Vec::new();
        // Subsets of {2..size} joining 1, encoded as bit masks.
        for mask in 0u32..(1u32 << (size - 1)) {
            let mut first = vec![1];
            first.extend((0..size - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 2));
            let mut gaps = Vec::new();
            for w in first.windows(2) {
                gaps.push((w[0] + 1, w[1] - w[0] - 1));
            }
            let last = *first.last().unwrap();
            gaps.push((last + 1, size - last));
            let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![first]];
            for &(start, glen) in &gaps {
                if glen == 0 {
                    continue;
                }
                let mut next = Vec::with_capacity(partial.len() * memo[glen].len());
                for p in &partial {
                    for sub in &memo[glen] {
                        let mut q = p.clone();
                        q.extend(
                            sub.iter()
                                .map(|b| b.iter().map(|e| e + start - 1).collect::<Vec<_>>()),
                        );
                        next.push(q);
                    }
                }
                partial = next;
            }
            level.extend(partial);
        }
        memo.push(level);
    }
    memo.swap_remove(len)
}

/// Interval partitions `Int(n)`, in lexicographic order; `2^(n-1)` of them.
pub fn interval_partitions(n: usize) -> Result<Vec<NcPartition>> {
    interval_partitions_limited(n, DEFAULT_LIMIT)
}

pub fn interval_partitions_limited(n: usize, limit: usize) -> Result<Vec<NcPartition>> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    if n == 0 {
        return Err(Error::InvalidPartition("ground set must be non-empty".into()));
    }
    let mut out: Vec<NcPartition> = (0u32..(1u32 << (n - 1)))
        .map(|cuts| {
            // Bit b set means a block boundary between b+1 and b+2.
            let mut blocks = vec![vec![1]];
            for e in 2..=n {
                if cuts >> (e - 2) & 1 == 1 {
                    blocks.push(vec![e]);
                } else {
                    blocks.last_mut().unwrap().push(e);
                }
            }
            NcPartition::from_blocks_unchecked(n, blocks)
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn check_sizes(pi: &NcPartition, rho: &NcPartition) -> Result<()> {
    if pi.n != rho.n {
        return Err(Error::SizeMismatch(pi.n, rho.n));
    }
    Ok(())
}

pub(crate) fn leq_unchecked(pi: &NcPartition, rho: &NcPartition) -> bool {
    pi.blocks.iter().all(|b| {
        let l = rho.labels[b[0] - 1];
        b.iter().all(|&e| rho.labels[e - 1] == l)
    })
}

pub(crate) fn ll_unchecked(pi: &NcPartition, rho: &NcPartition) -> bool {
    leq_unchecked(pi, rho)
        && rho
            .blocks
            .iter()
            .all(|w| pi.labels[w[0] - 1] == pi.labels[w[w.len() - 1] - 1])
}

pub(crate) fn sqsubseteq_unchecked(pi: &NcPartition, rho: &NcPartition) -> bool {
    leq_unchecked(pi, rho)
        && rho.blocks.iter().all(|w| {
            let mut finished: Vec<usize> = Vec::new();
            let mut current = pi.labels[w[0] - 1];
            for &e in &w[1..] {
                let l = pi.labels[e - 1];
                if l != current {
                    if finished.contains(&l) {
                        return false;
                    }
                    finished.push(current);
                    current = l;
                }
            }
            true
        })
}

/// Reverse refinement: every block of `rho` is a union of blocks of `pi`.
pub fn leq(pi: &NcPartition, rho: &NcPartition) -> Result<bool> {
    check_sizes(pi, rho)?;
    Ok(leq_unchecked(pi, rho))
}

/// `pi << rho`: `pi <= rho` and each block of `rho` has its min and max in a
/// common block of `pi`.
pub fn ll(pi: &NcPartition, rho: &NcPartition) -> Result<bool> {
    check_sizes(pi, rho)?;
    Ok(ll_unchecked(pi, rho))
}

/// Interval refinement: `pi <= rho` and `pi` induces an interval partition on
/// every block of `rho`.
pub fn sqsubseteq(pi: &NcPartition, rho: &NcPartition) -> Result<bool> {
    check_sizes(pi, rho)?;
    Ok(sqsubseteq_unchecked(pi, rho))
}

/// Kreweras complement `K_n(pi)`.
///
/// Computed as the cycle structure of `pi^{-1} ∘ γ`, where `γ = (1 2 ... n)`
/// and each block of `pi` is read as an increasing cycle.
pub fn kreweras(pi: &NcPartition) -> NcPartition {
    let n = pi.n;
    // prev[j]: predecessor of j in its block, cyclically.
    let mut prev = vec![0; n + 1];
    for b in &pi.blocks {
        for (t, &e) in b.iter().enumerate() {
            prev[e] = b[(t + b.len() - 1) % b.len()];
        }
    }
    let k = |i: usize| prev[i % n + 1];
    let mut labels = vec![usize::MAX; n];
    let mut next_label = 0;
    for start in 1..=n {
        if labels[start - 1] != usize::MAX {
            continue;
        }
        let mut i = start;
        while labels[i - 1] == usize::MAX {
            labels[i - 1] = next_label;
            i = k(i);
        }
        next_label += 1;
    }
    NcPartition::from_labels(&labels)
}

/// `(-1)^(|pi|-1) * prod_{V in K(pi)} Cat_{|V|-1}` as a machine integer.
pub(crate) fn moebius_to_one_i64(pi: &NcPartition) -> i64 {
    let magnitude: i64 = kreweras(pi)
        .blocks
        .iter()
        .map(|v| catalan(v.len() - 1) as i64)
        .product();
    if pi.num_blocks() % 2 == 1 {
        magnitude
    } else {
        -magnitude
    }
}

/// `Möb_n(pi, 1_n)` from the signed Catalan product over `K_n(pi)`.
pub fn moebius_to_one(pi: &NcPartition) -> Rational {
    int(moebius_to_one_i64(pi))
}

/// `Möb_n(pi, rho)` by recursive inversion of the zeta function over the
/// enumerated interval `[pi, rho]`. Test oracle only.
pub fn moebius_oracle(pi: &NcPartition, rho: &NcPartition) -> Result<Rational> {
    check_sizes(pi, rho)?;
    if pi.n > ORACLE_LIMIT {
        return Err(Error::LimitExceeded { n: pi.n, limit: ORACLE_LIMIT });
    }
    if !leq_unchecked(pi, rho) {
        return Err(Error::NotComparable);
    }
    let mut interval: Vec<&NcPartition> = Vec::new();
    let all = lattice(pi.n);
    for tau in &all.partitions {
        if leq_unchecked(pi, tau) && leq_unchecked(tau, rho) {
            interval.push(tau);
        }
    }
    // Coarsest first, so every strict upper bound is already solved.
    interval.sort_by_key(|t| t.num_blocks());
    let mut mu: Vec<i64> = Vec::with_capacity(interval.len());
    for (idx, tau) in interval.iter().enumerate() {
        let value = if *tau == rho {
            1
        } else {
            -(0..idx)
                .filter(|&j| interval[j] != *tau && leq_unchecked(tau, interval[j]))
                .map(|j| mu[j])
                .sum::<i64>()
        };
        mu.push(value);
    }
    let at = interval.iter().position(|t| *t == pi).expect("pi in interval");
    Ok(int(mu[at]))
}

/// Inner/outer role of every block, indexed like [`NcPartition::blocks`].
pub fn block_roles(pi: &NcPartition) -> Vec<BlockRole> {
    pi.blocks
        .iter()
        .map(|v| {
            let nested = pi
                .blocks
                .iter()
                .any(|w| w[0] < v[0] && v[v.len() - 1] < w[w.len() - 1]);
            if nested {
                BlockRole::Inner
            } else {
                BlockRole::Outer
            }
        })
        .collect()
}

/// The minimal block inside which block `idx` is nested.
pub fn parent_block(pi: &NcPartition, idx: usize) -> Result<usize> {
    let v = &pi.blocks[idx];
    // Nesting blocks form a chain; the innermost one has the largest minimum.
    pi.blocks
        .iter()
        .enumerate()
        .filter(|(_, w)| w[0] < v[0] && v[v.len() - 1] < w[w.len() - 1])
        .max_by_key(|(_, w)| w[0])
        .map(|(j, _)| j)
        .ok_or(Error::NotInner(v[0]))
}

fn inner_block_of(pi: &NcPartition, i: usize) -> Result<usize> {
    if i == 0 || i > pi.n {
        return Err(Error::PositionOutOfRange { position: i, len: pi.n });
    }
    let idx = pi.block_of(i);
    if block_roles(pi)[idx] != BlockRole::Inner {
        return Err(Error::NotInner(i));
    }
    Ok(idx)
}

/// Splits the inner block `P` containing `i` into `{j <= i}` and `{j > i}`.
pub fn cut(pi: &NcPartition, i: usize) -> Result<NcPartition> {
    let idx = inner_block_of(pi, i)?;
    let p = &pi.blocks[idx];
    if p[p.len() - 1] == i {
        return Err(Error::IsBlockMax(i));
    }
    let mut blocks: Vec<Vec<usize>> = pi
        .blocks
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != idx)
        .map(|(_, b)| b.clone())
        .collect();
    blocks.push(p.iter().copied().filter(|&j| j <= i).collect());
    blocks.push(p.iter().copied().filter(|&j| j > i).collect());
    Ok(NcPartition::from_blocks_unchecked(pi.n, blocks))
}

/// Merges the inner block containing `i` with its parent block.
pub fn attach(pi: &NcPartition, i: usize) -> Result<NcPartition> {
    let idx = inner_block_of(pi, i)?;
    let parent = parent_block(pi, idx)?;
    let mut blocks: Vec<Vec<usize>> = pi
        .blocks
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != idx && j != parent)
        .map(|(_, b)| b.clone())
        .collect();
    let mut merged = pi.blocks[idx].clone();
    merged.extend_from_slice(&pi.blocks[parent]);
    blocks.push(merged);
    Ok(NcPartition::from_blocks_unchecked(pi.n, blocks))
}

/// True when `pi << 1_n`, i.e. `pi` has a unique outer block and it holds 1 and n.
pub fn is_ll_one(pi: &NcPartition) -> bool {
    pi.block_of(1) == pi.block_of(pi.n)
}

/// The lower ideal `{pi : pi << rho}`.
///
/// Built directly as a product over the blocks `W` of `rho` of the partitions
/// of `W` that are `<< 1_W`; the result is sorted canonically.
pub fn enumerate_ll_below(rho: &NcPartition) -> Result<Vec<NcPartition>> {
    let mut partial: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for w in &rho.blocks {
        let local: Vec<NcPartition> = enumerate_nc(w.len())?
            .into_iter()
            .filter(is_ll_one)
            .collect();
        let mut next = Vec::with_capacity(partial.len() * local.len());
        for p in &partial {
            for sigma in &local {
                let mut q = p.clone();
                q.extend(
                    sigma
                        .blocks
                        .iter()
                        .map(|b| b.iter().map(|&e| w[e - 1]).collect::<Vec<_>>()),
                );
                next.push(q);
            }
        }
        partial = next;
    }
    let mut out: Vec<NcPartition> = partial
        .into_iter()
        .map(|b| NcPartition::from_blocks_unchecked(rho.n, b))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The bijection `F_n^(m)` from `{rho in NC(n+1) : rho << 1_(n+1)}` onto
/// `NC(n)`: translate cyclically by `m`, then merge `m` with `m+1`.
pub fn f_nm(rho: &NcPartition, m: usize) -> Result<NcPartition> {
    if !is_ll_one(rho) {
        return Err(Error::NotLLOne);
    }
    let n = rho.n.checked_sub(1).filter(|&n| n >= 1).ok_or(Error::NotLLOne)?;
    if m == 0 || m > n {
        return Err(Error::PositionOutOfRange { position: m, len: n });
    }
    let translate = |k: usize| (m + k - 1) % (n + 1) + 1;
    let merge = |k: usize| if k <= m { k } else { k - 1 };
    let blocks: Vec<Vec<usize>> = rho
        .blocks
        .iter()
        .map(|b| {
            let mut out: Vec<usize> = b.iter().map(|&k| merge(translate(k))).collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();
    Ok(NcPartition::from_blocks_unchecked(n, blocks))
}

/// Inverse of [`f_nm`]: split `m` into `m, m+1`, then translate back by `-m`.
pub fn f_nm_inverse(pi: &NcPartition, m: usize) -> Result<NcPartition> {
    let n = pi.n;
    if m == 0 || m > n {
        return Err(Error::PositionOutOfRange { position: m, len: n });
    }
    let untranslate = |k: usize| (k + n - m) % (n + 1) + 1;
    let blocks: Vec<Vec<usize>> = pi
        .blocks
        .iter()
        .map(|b| {
            let mut split = Vec::with_capacity(b.len() + 1);
            for &k in b {
                match k.cmp(&m) {
                    std::cmp::Ordering::Less => split.push(k),
                    std::cmp::Ordering::Equal => {
                        split.push(m);
                        split.push(m + 1);
                    }
                    std::cmp::Ordering::Greater => split.push(k + 1),
                }
            }
            split.into_iter().map(untranslate).collect()
        })
        .collect();
    Ok(NcPartition::from_blocks_unchecked(n + 1, blocks))
}

/// Cached per-`n` data shared by the cumulant transforms.
pub(crate) struct Level {
    pub partitions: Vec<NcPartition>,
    pub moebius: Vec<i64>,
    pub roles: Vec<Vec<BlockRole>>,
    pub intervals: Vec<NcPartition>,
}

static LEVELS: [OnceLock<Level>; DEFAULT_LIMIT + 1] = [const { OnceLock::new() }; DEFAULT_LIMIT + 1];

/// Memoized `NC(n)` with Möbius values and block roles.
///
/// Panics when `n` is 0 or above [`DEFAULT_LIMIT`]; callers check degrees first.
pub(crate) fn lattice(n: usize) -> &'static Level {
    assert!((1..=DEFAULT_LIMIT).contains(&n), "lattice size {n} out of range");
    LEVELS[n].get_or_init(|| {
        let partitions = enumerate_nc(n).expect("within limit");
        let moebius = partitions.iter().map(moebius_to_one_i64).collect();
        let roles = partitions.iter().map(block_roles).collect();
        let intervals = interval_partitions(n).expect("within limit");
        Level { partitions, moebius, roles, intervals }
    })
}

/// Elements of `{1..n}` that belong to inner blocks of `pi` and are not the
/// maximum of their block: the valid arguments of [`cut`].
pub fn cuttable_elements(pi: &NcPartition) -> Vec<usize> {
    let roles = block_roles(pi);
    (1..=pi.n)
        .filter(|&i| {
            let idx = pi.block_of(i);
            roles[idx] == BlockRole::Inner && *pi.blocks[idx].last().unwrap() != i
        })
        .collect()
}

/// Distinct elements of a set, sorted; convenience for tests and callers
/// that assemble blocks by hand.
pub fn sorted_set(items: impl IntoIterator<Item = usize>) -> Vec<usize> {
    items.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NcPartition {
        s.parse().unwrap()
    }

    fn figure1() -> NcPartition {
        p("{1,5,6}{2,4}{3}{7}{8,10}{9}")
    }

    #[test]
    fn catalan_and_binomial() {
        let cat: Vec<u64> = (0..=10).map(catalan).collect();
        assert_eq!(cat, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(16, 8), 12870);
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_nc(1).unwrap(), vec![NcPartition::one(1)]);
        assert_eq!(enumerate_nc(4).unwrap().len(), 14);
        assert_eq!(enumerate_nc(10).unwrap().len(), 16796);
        let four = enumerate_nc(4).unwrap();
        assert!(four.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(four[0], NcPartition::zero(4));
        assert_eq!(four[13], p("{1,4}{2,3}"));
        assert!(matches!(enumerate_nc(13), Err(Error::LimitExceeded { n: 13, limit: 12 })));
        assert_eq!(enumerate_nc_limited(5, 4).unwrap_err().to_string(), "n = 5 exceeds the configured limit 4");
    }

    #[test]
    fn noncrossing_test() {
        let fig: Vec<Vec<usize>> = vec![vec![1, 5, 6], vec![2, 4], vec![3], vec![7], vec![8, 10], vec![9]];
        assert!(is_noncrossing(10, &fig).unwrap());
        assert!(!is_noncrossing(4, &[vec![1, 3], vec![2, 4]]).unwrap());
        assert!(is_noncrossing(6, &[(1..=6).collect()]).unwrap());
        assert!(matches!(is_noncrossing(3, &[vec![1, 2]]), Err(Error::InvalidPartition(_))));
        assert!(matches!(is_noncrossing(3, &[vec![1, 2], vec![2, 3]]), Err(Error::InvalidPartition(_))));
        assert!(NcPartition::new(4, vec![vec![1, 3], vec![2, 4]]).is_err());
    }

    #[test]
    fn text_and_json_forms() {
        let f = figure1();
        assert_eq!(f.to_string(), "{1,5,6}{2,4}{3}{7}{8,10}{9}");
        assert_eq!(p("{3}{2,4}{6,1,5}{9}{10,8}{7}"), f);
        assert_eq!(f.to_json(), "[[1,5,6],[2,4],[3],[7],[8,10],[9]]");
        assert_eq!(NcPartition::from_json(&f.to_json()).unwrap(), f);
        assert!("{1,3}{2,4}".parse::<NcPartition>().is_err());
        assert!("{1,2".parse::<NcPartition>().is_err());
        assert!("{0}".parse::<NcPartition>().is_err());
    }

    #[test]
    fn order_examples() {
        let z = NcPartition::zero(3);
        let o = NcPartition::one(3);
        for q in enumerate_nc(3).unwrap() {
            assert!(leq(&z, &q).unwrap());
            assert!(leq(&q, &o).unwrap());
            assert!(ll(&q, &q).unwrap());
            assert!(sqsubseteq(&q, &q).unwrap());
        }
        assert!(leq(&p("{1,2}{3}"), &o).unwrap());
        assert!(!leq(&o, &p("{1,2}{3}")).unwrap());
        assert!(!ll(&NcPartition::zero(4), &NcPartition::one(4)).unwrap());
        assert!(ll(&p("{1,4}{2}{3}"), &NcPartition::one(4)).unwrap());
        assert!(sqsubseteq(&z, &o).unwrap());
        assert!(!sqsubseteq(&p("{1,3}{2}"), &o).unwrap());
        assert!(matches!(leq(&z, &NcPartition::one(4)), Err(Error::SizeMismatch(3, 4))));
        // n = 1: 0_1 = 1_1 and every predicate is reflexively true.
        let one = NcPartition::one(1);
        assert_eq!(one, NcPartition::zero(1));
        assert!(leq(&one, &one).unwrap() && ll(&one, &one).unwrap() && sqsubseteq(&one, &one).unwrap());
    }

    #[test]
    fn kreweras_examples() {
        assert_eq!(kreweras(&figure1()), p("{1,4}{2,3}{5}{6,7,10}{8,9}"));
        for n in 1..=6 {
            assert_eq!(kreweras(&NcPartition::zero(n)), NcPartition::one(n));
            assert_eq!(kreweras(&NcPartition::one(n)), NcPartition::zero(n));
        }
    }

    /// Largest sigma (under reverse refinement) such that the interleaving of
    /// pi on odd points and sigma on even points is non-crossing.
    fn kreweras_by_interleaving(pi: &NcPartition) -> NcPartition {
        let n = pi.n();
        let admissible: Vec<NcPartition> = enumerate_nc(n)
            .unwrap()
            .into_iter()
            .filter(|sigma| {
                let mut labels = vec![0; 2 * n];
                for i in 1..=n {
                    labels[2 * i - 2] = pi.block_of(i);
                    labels[2 * i - 1] = n + sigma.block_of(i);
                }
                !has_crossing(&labels)
            })
            .collect();
        let top: Vec<&NcPartition> = admissible
            .iter()
            .filter(|s| admissible.iter().all(|t| leq_unchecked(t, s)))
            .collect();
        assert_eq!(top.len(), 1);
        top[0].clone()
    }

    #[test]
    fn kreweras_matches_interleaving_definition() {
        for n in 1..=6 {
            for pi in enumerate_nc(n).unwrap() {
                assert_eq!(kreweras(&pi), kreweras_by_interleaving(&pi), "{pi}");
            }
        }
    }

    #[test]
    fn moebius_examples() {
        for n in 1..=5 {
            assert_eq!(moebius_to_one(&NcPartition::one(n)), int(1));
        }
        assert_eq!(moebius_to_one(&NcPartition::zero(3)), int(2));
        assert_eq!(moebius_to_one(&NcPartition::zero(4)), int(-5));
        assert_eq!(moebius_oracle(&NcPartition::zero(3), &NcPartition::one(3)).unwrap(), int(2));
        assert_eq!(moebius_oracle(&NcPartition::zero(4), &NcPartition::one(4)).unwrap(), int(-5));
        assert_eq!(moebius_oracle(&NcPartition::zero(2), &NcPartition::one(2)).unwrap(), int(-1));
        assert_eq!(moebius_oracle(&NcPartition::zero(5), &NcPartition::one(5)).unwrap(), int(14));
        let f = p("{1,2}{3}{4}");
        assert_eq!(moebius_oracle(&f, &f).unwrap(), int(1));
        assert!(matches!(
            moebius_oracle(&p("{1,2,3}"), &p("{1}{2,3}")),
            Err(Error::NotComparable)
        ));
        assert!(matches!(
            moebius_oracle(&NcPartition::zero(9), &NcPartition::one(9)),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn moebius_closed_form_matches_oracle_small() {
        for n in 1..=5 {
            let one = NcPartition::one(n);
            for pi in enumerate_nc(n).unwrap() {
                assert_eq!(moebius_to_one(&pi), moebius_oracle(&pi, &one).unwrap());
            }
        }
    }

    #[test]
    fn roles_and_parents() {
        let f = figure1();
        let roles = block_roles(&f);
        let inner: Vec<String> = f
            .blocks()
            .iter()
            .zip(&roles)
            .filter(|(_, r)| **r == BlockRole::Inner)
            .map(|(b, _)| format!("{b:?}"))
            .collect();
        assert_eq!(inner, ["[2, 4]", "[3]", "[9]"]);
        assert!(block_roles(&NcPartition::one(4)).iter().all(|r| *r == BlockRole::Outer));
        assert!(block_roles(&p("{1,2}{3}{4,5}")).iter().all(|r| *r == BlockRole::Outer));

        assert_eq!(f.block(parent_block(&f, f.block_of(2)).unwrap()), [1, 5, 6]);
        assert_eq!(f.block(parent_block(&f, f.block_of(3)).unwrap()), [2, 4]);
        assert_eq!(f.block(parent_block(&f, f.block_of(9)).unwrap()), [8, 10]);
        let q = p("{1,3}{2}");
        assert_eq!(q.block(parent_block(&q, q.block_of(2)).unwrap()), [1, 3]);
        assert!(matches!(parent_block(&f, 0), Err(Error::NotInner(1))));
    }

    #[test]
    fn cut_and_attach_examples() {
        assert_eq!(cut(&p("{1,4}{2,3}"), 2).unwrap(), p("{1,4}{2}{3}"));
        assert_eq!(cut(&p("{1,5}{2,3,4}"), 3).unwrap(), p("{1,5}{2,3}{4}"));
        assert!(matches!(cut(&p("{1,4}{2,3}"), 3), Err(Error::IsBlockMax(3))));
        assert!(matches!(cut(&p("{1,4}{2,3}"), 1), Err(Error::NotInner(1))));
        assert_eq!(attach(&p("{1,4}{2,3}"), 2).unwrap(), NcPartition::one(4));
        assert_eq!(attach(&figure1(), 9).unwrap(), p("{1,5,6}{2,4}{3}{7}{8,9,10}"));
        assert!(matches!(attach(&figure1(), 7), Err(Error::NotInner(7))));
        assert!(matches!(attach(&figure1(), 11), Err(Error::PositionOutOfRange { .. })));
    }

    #[test]
    fn ll_lower_ideal() {
        assert_eq!(enumerate_ll_below(&NcPartition::one(3)).unwrap().len(), 2);
        assert_eq!(enumerate_ll_below(&NcPartition::one(4)).unwrap().len(), 5);
        let r = p("{1,2}{3}{4,5}");
        assert_eq!(enumerate_ll_below(&r).unwrap(), vec![r.clone()]);
        let one4 = NcPartition::one(4);
        let filtered: Vec<NcPartition> = enumerate_nc(4)
            .unwrap()
            .into_iter()
            .filter(|q| ll(q, &one4).unwrap())
            .collect();
        assert_eq!(enumerate_ll_below(&one4).unwrap(), filtered);
    }

    #[test]
    fn f_nm_examples() {
        let rho = p("{1,4,9,10}{2,3}{5,6,8}{7}");
        let pi = f_nm(&rho, 3).unwrap();
        assert_eq!(pi, p("{1,7,8}{2,3,6}{4,5}{9}"));
        assert_eq!(f_nm_inverse(&pi, 3).unwrap(), rho);
        assert_eq!(f_nm(&NcPartition::one(2), 1).unwrap(), NcPartition::one(1));
        assert!(matches!(f_nm(&p("{1,2}{3}"), 1), Err(Error::NotLLOne)));
        assert_eq!(moebius_to_one(&pi), moebius_to_one(&rho));
    }

    #[test]
    fn interval_partition_examples() {
        assert_eq!(interval_partitions(1).unwrap(), vec![NcPartition::one(1)]);
        let three = interval_partitions(3).unwrap();
        assert_eq!(three.len(), 4);
        let filtered: Vec<NcPartition> = enumerate_nc(3)
            .unwrap()
            .into_iter()
            .filter(NcPartition::is_interval)
            .collect();
        assert_eq!(three, filtered);
        // Maximal for <<: nothing strictly above.
        for n in 1..=5 {
            let all = enumerate_nc(n).unwrap();
            for q in interval_partitions(n).unwrap() {
                assert!(all.iter().all(|r| !ll(&q, r).unwrap() || *r == q));
            }
        }
    }
}
