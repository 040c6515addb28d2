//! Symmetric non-crossing partitions of `{±1..±n}` for the two circular
//! orders `1..n, -1..-n` (type B) and `1..n, -n..-1` (type B-opp).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nc::{self, block_roles, has_crossing, BlockRole, NcPartition};

/// Default largest `n` for signed enumeration; `C(16, 8) = 12870`.
pub const TYPEB_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    TypeB,
    TypeBOpp,
}

impl Flavor {
    /// Position of label `x` on the circle, in `0..2n`.
    fn position(self, n: usize, x: i64) -> usize {
        let a = x.unsigned_abs() as usize;
        match (self, x > 0) {
            (_, true) => a - 1,
            (Flavor::TypeB, false) => n + a - 1,
            (Flavor::TypeBOpp, false) => 2 * n - a,
        }
    }

    fn label(self, n: usize, p: usize) -> i64 {
        if p < n {
            (p + 1) as i64
        } else {
            match self {
                Flavor::TypeB => -((p - n + 1) as i64),
                Flavor::TypeBOpp => -((2 * n - p) as i64),
            }
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::TypeB => "B",
            Flavor::TypeBOpp => "B-opp",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "b" | "typeb" | "type-b" => Ok(Flavor::TypeB),
            "b-opp" | "bopp" | "typebopp" | "type-b-opp" => Ok(Flavor::TypeBOpp),
            _ => Err(Error::Parse(format!("unknown flavor {s:?}"))),
        }
    }
}

/// A symmetric partition of `{±1..±n}`, non-crossing for its flavor's
/// circular order, held in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SignedRepr", into = "SignedRepr")]
pub struct SignedNcPartition {
    flavor: Flavor,
    n: usize,
    blocks: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct SignedRepr {
    flavor: Flavor,
    n: usize,
    blocks: Vec<Vec<i64>>,
}

impl TryFrom<SignedRepr> for SignedNcPartition {
    type Error = Error;

    fn try_from(r: SignedRepr) -> Result<Self> {
        Self::new(r.n, r.flavor, r.blocks)
    }
}

impl From<SignedNcPartition> for SignedRepr {
    fn from(s: SignedNcPartition) -> Self {
        SignedRepr { flavor: s.flavor, n: s.n, blocks: s.blocks }
    }
}

/// Positives ascending, then negatives by absolute value.
fn canonical_block(block: &mut [i64]) {
    block.sort_unstable_by_key(|&x| (x < 0, x.abs()));
}

fn canonical_blocks(mut blocks: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    for b in &mut blocks {
        canonical_block(b);
    }
    blocks.sort_unstable_by_key(|b| {
        let m = b.iter().map(|x| x.abs()).min().unwrap_or(0);
        // Ties on the minimum absolute value go to the block holding +m.
        (m, !b.contains(&m))
    });
    blocks
}

fn negated(block: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = block.iter().map(|x| -x).collect();
    canonical_block(&mut out);
    out
}

impl SignedNcPartition {
    pub fn new(n: usize, flavor: Flavor, blocks: Vec<Vec<i64>>) -> Result<Self> {
        let invalid = |m: String| Error::InvalidPartition(m);
        if n == 0 {
            return Err(invalid("ground set must be non-empty".into()));
        }
        let mut labels = vec![usize::MAX; 2 * n];
        for (idx, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(invalid("empty block".into()));
            }
            for &x in b {
                if x == 0 || x.unsigned_abs() as usize > n {
                    return Err(invalid(format!("label {x} outside ±1..±{n}")));
                }
                let p = flavor.position(n, x);
                if labels[p] != usize::MAX {
                    return Err(invalid(format!("label {x} repeated")));
                }
                labels[p] = idx;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(invalid("labels missing".into()));
        }
        let blocks = canonical_blocks(blocks);
        for b in &blocks {
            let nb = negated(b);
            if !blocks.contains(&nb) {
                return Err(invalid(format!("negation of block {b:?} is not a block")));
            }
        }
        if has_crossing(&labels) {
            return Err(invalid(format!("crossing in {flavor} circular order")));
        }
        let sigma = SignedNcPartition { flavor, n, blocks };
        if flavor == Flavor::TypeB && sigma.zero_blocks().len() > 1 {
            return Err(invalid("type B partition with two zero-blocks".into()));
        }
        Ok(sigma)
    }

    fn from_blocks_unchecked(n: usize, flavor: Flavor, blocks: Vec<Vec<i64>>) -> Self {
        SignedNcPartition { flavor, n, blocks: canonical_blocks(blocks) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.blocks
    }

    /// Indices of the blocks `U` with `U = -U`.
    pub fn zero_blocks(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.iter().any(|&x| x > 0) && b.contains(&-b[0]))
            .map(|(i, _)| i)
            .collect()
    }

    /// `Abs(σ)`: the partition of `{1..n}` by absolute values.
    pub fn abs_partition(&self) -> NcPartition {
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for b in &self.blocks {
            let a = abs_set(b);
            if !seen.contains(&a) {
                seen.push(a);
            }
        }
        NcPartition::from_blocks_unchecked(self.n, seen)
    }

    /// The absolute-value sets of the zero-blocks, and of one block from each
    /// pair `U != -U`.
    pub fn abs_structure(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut zero = Vec::new();
        let mut pairs: Vec<Vec<usize>> = Vec::new();
        for b in &self.blocks {
            let a = abs_set(b);
            if b.len() == 2 * a.len() {
                zero.push(a);
            } else if !pairs.contains(&a) {
                pairs.push(a);
            }
        }
        (zero, pairs)
    }

    /// Forward map of the pair bijection: `(Abs(σ), Abs of zero-blocks)`.
    pub fn to_pair(&self) -> (NcPartition, Vec<Vec<usize>>) {
        let (zero, _) = self.abs_structure();
        (self.abs_partition(), zero)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("signed partition serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Parses the brace form, e.g. `{1,3,-1,-3}{2}{-2}`.
    pub fn parse(s: &str, flavor: Flavor) -> Result<Self> {
        let blocks = nc::parse_brace_blocks(s)?;
        let n = blocks.iter().map(Vec::len).sum::<usize>() / 2;
        Self::new(n, flavor, blocks)
    }
}

fn abs_set(block: &[i64]) -> Vec<usize> {
    nc::sorted_set(block.iter().map(|x| x.unsigned_abs() as usize))
}

impl fmt::Display for SignedNcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let items: Vec<String> = b.iter().map(i64::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedNcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signed[{}]({self})", self.flavor)
    }
}

/// All symmetric non-crossing partitions of the given flavor, sorted.
pub fn enumerate_signed(n: usize, flavor: Flavor) -> Result<Vec<SignedNcPartition>> {
    enumerate_signed_limited(n, flavor, TYPEB_LIMIT)
}

pub fn enumerate_signed_limited(
    n: usize,
    flavor: Flavor,
    limit: usize,
) -> Result<Vec<SignedNcPartition>> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    if n == 0 {
        return Err(Error::InvalidPartition("ground set must be non-empty".into()));
    }
    let mut out = match flavor {
        Flavor::TypeB => symmetric_search(n, flavor),
        Flavor::TypeBOpp => {
            let mut all = Vec::new();
            for pi in nc::enumerate_nc(n)? {
                let outer: Vec<Vec<usize>> = pi
                    .blocks()
                    .iter()
                    .zip(block_roles(&pi))
                    .filter(|(_, r)| *r == BlockRole::Outer)
                    .map(|(b, _)| b.clone())
                    .collect();
                for mask in 0u32..(1u32 << outer.len()) {
                    let s: Vec<Vec<usize>> = (0..outer.len())
                        .filter(|t| mask >> t & 1 == 1)
                        .map(|t| outer[t].clone())
                        .collect();
                    all.push(pair_to_signed(&pi, &s));
                }
            }
            all
        }
    };
    out.sort_unstable();
    Ok(out)
}

/// Direct search over symmetric partitions of the circle: the block of the
/// first free position is grown one element at a time, placed together with
/// its negation, and kept only while no crossing appears.
pub(crate) fn symmetric_search(n: usize, flavor: Flavor) -> Vec<SignedNcPartition> {
    let m = 2 * n;
    let neg = |p: usize| flavor.position(n, -flavor.label(n, p));
    let mut labels = vec![usize::MAX; m];
    let mut out = Vec::new();

    fn assigned_crossing(labels: &[usize]) -> bool {
        let compact: Vec<usize> = labels.iter().copied().filter(|&l| l != usize::MAX).collect();
        has_crossing(&compact)
    }

    fn place(
        labels: &mut Vec<usize>,
        next_label: usize,
        neg: &dyn Fn(usize) -> usize,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        let Some(p) = labels.iter().position(|&l| l == usize::MAX) else {
            emit(labels);
            return;
        };
        grow(labels, next_label, vec![p], neg, emit);
    }

    fn grow(
        labels: &mut Vec<usize>,
        next_label: usize,
        block: Vec<usize>,
        neg: &dyn Fn(usize) -> usize,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        // Option 1: close the block here.
        let mut mirror: Vec<usize> = block.iter().map(|&p| neg(p)).collect();
        mirror.sort_unstable();
        let is_zero = mirror == block;
        let disjoint_free = mirror
            .iter()
            .all(|q| !block.contains(q) && labels[*q] == usize::MAX);
        if is_zero || disjoint_free {
            for &p in &block {
                labels[p] = next_label;
            }
            let mut used = 1;
            if !is_zero {
                for &q in &mirror {
                    labels[q] = next_label + 1;
                }
                used = 2;
            }
            if !assigned_crossing(labels) {
                place(labels, next_label + used, neg, emit);
            }
            for &p in block.iter().chain(if is_zero { &[][..] } else { &mirror[..] }) {
                labels[p] = usize::MAX;
            }
        }
        // Option 2: extend with a later free position.
        let last = *block.last().unwrap();
        for q in last + 1..labels.len() {
            if labels[q] != usize::MAX {
                continue;
            }
            let mut ext = block.clone();
            ext.push(q);
            // Prune when the partial block already crosses assigned blocks.
            for &p in &ext {
                labels[p] = next_label;
            }
            let crossing = assigned_crossing(labels);
            for &p in &ext {
                labels[p] = usize::MAX;
            }
            if !crossing {
                grow(labels, next_label, ext, neg, emit);
            }
        }
    }

    let mut emit = |labels: &[usize]| {
        let max = labels.iter().max().copied().unwrap_or(0);
        let mut blocks: Vec<Vec<i64>> = vec![Vec::new(); max + 1];
        for (p, &l) in labels.iter().enumerate() {
            blocks[l].push(flavor.label(n, p));
        }
        blocks.retain(|b| !b.is_empty());
        out.push(SignedNcPartition::from_blocks_unchecked(n, flavor, blocks));
    };
    place(&mut labels, 0, &neg, &mut emit);
    out
}

fn pair_to_signed(pi: &NcPartition, s: &[Vec<usize>]) -> SignedNcPartition {
    let mut blocks = Vec::new();
    for b in pi.blocks() {
        let pos: Vec<i64> = b.iter().map(|&x| x as i64).collect();
        let negs: Vec<i64> = pos.iter().map(|x| -x).collect();
        if s.contains(b) {
            blocks.push(pos.into_iter().chain(negs).collect());
        } else {
            blocks.push(pos);
            blocks.push(negs);
        }
    }
    SignedNcPartition::from_blocks_unchecked(pi.n(), Flavor::TypeBOpp, blocks)
}

/// Inverse map of the pair bijection: blocks in `s` become zero-blocks
/// `W ∪ -W`; every other block `V` splits into `V` and `-V`.
pub fn from_pair(pi: &NcPartition, s: &[Vec<usize>]) -> Result<SignedNcPartition> {
    let roles = block_roles(pi);
    for w in s {
        let mut sorted = w.clone();
        sorted.sort_unstable();
        let ok = pi
            .blocks()
            .iter()
            .zip(&roles)
            .any(|(b, r)| *b == sorted && *r == BlockRole::Outer);
        if !ok {
            return Err(Error::NotOuter(sorted));
        }
    }
    let normalized: Vec<Vec<usize>> = s
        .iter()
        .map(|w| {
            let mut w = w.clone();
            w.sort_unstable();
            w
        })
        .collect();
    Ok(pair_to_signed(pi, &normalized))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nc::binomial;

    fn b(s: &str) -> SignedNcPartition {
        SignedNcPartition::parse(s, Flavor::TypeB).unwrap()
    }

    fn bo(s: &str) -> SignedNcPartition {
        SignedNcPartition::parse(s, Flavor::TypeBOpp).unwrap()
    }

    #[test]
    fn small_counts() {
        let one = enumerate_signed(1, Flavor::TypeB).unwrap();
        assert_eq!(one.len(), 2);
        assert!(one.contains(&b("{1,-1}")));
        assert!(one.contains(&b("{1}{-1}")));
        for n in 1..=4 {
            assert_eq!(enumerate_signed(n, Flavor::TypeB).unwrap().len() as u64, binomial(2 * n, n));
            assert_eq!(enumerate_signed(n, Flavor::TypeBOpp).unwrap().len() as u64, binomial(2 * n, n));
        }
        assert!(matches!(enumerate_signed(9, Flavor::TypeB), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn opp_enumeration_matches_direct_search() {
        for n in 1..=5 {
            let mut direct = symmetric_search(n, Flavor::TypeBOpp);
            direct.sort_unstable();
            assert_eq!(direct, enumerate_signed(n, Flavor::TypeBOpp).unwrap());
        }
    }

    #[test]
    fn figure_examples() {
        let left = bo("{1,3,-1,-3}{2}{-2}{4,5}{-4,-5}");
        let right = bo("{1,3,-1,-3}{2}{-2}{4,5,-4,-5}");
        let five = enumerate_signed(5, Flavor::TypeBOpp).unwrap();
        assert!(five.contains(&left) && five.contains(&right));
        assert_eq!(right.zero_blocks().len(), 2);
        assert_eq!(left.abs_partition(), "{1,3}{2}{4,5}".parse().unwrap());

        let fig2 = b("{1,3,-1,-3}{2}{-2}{4,5}{-4,-5}");
        let z = fig2.zero_blocks();
        assert_eq!(z.len(), 1);
        assert_eq!(fig2.blocks()[z[0]], vec![1, 3, -1, -3]);
        assert_eq!(fig2.to_string(), "{1,3,-1,-3}{2}{-2}{4,5}{-4,-5}");
    }

    #[test]
    fn validation() {
        // Nested in the type B order, crossing in the opp order.
        assert!(SignedNcPartition::parse("{1,-2}{-1,2}", Flavor::TypeB).is_ok());
        // Symmetric but crossing in the opp order.
        assert!(SignedNcPartition::parse("{1,-2}{-1,2}", Flavor::TypeBOpp).is_err());
        assert!(SignedNcPartition::parse("{1}{-1}{2}", Flavor::TypeB).is_err());
        assert!(SignedNcPartition::parse("{1,2}{-1}{-2}", Flavor::TypeB).is_err());
        let s = bo("{2,-2}{1}{-1}");
        assert_eq!(SignedNcPartition::from_json(&s.to_json()).unwrap(), s);
        assert_eq!(s.to_string(), "{1}{-1}{2,-2}");
    }

    #[test]
    fn zero_block_rules() {
        for n in 1..=5 {
            for s in enumerate_signed(n, Flavor::TypeB).unwrap() {
                assert!(s.zero_blocks().len() <= 1);
            }
            for s in enumerate_signed(n, Flavor::TypeBOpp).unwrap() {
                for blk in s.blocks() {
                    let mixed = blk.iter().any(|&x| x > 0) && blk.iter().any(|&x| x < 0);
                    let zero = s.zero_blocks().iter().any(|&i| s.blocks()[i] == *blk);
                    assert_eq!(mixed, zero, "{s}");
                }
            }
        }
    }

    #[test]
    fn pair_bijection_examples() {
        let one = NcPartition::one(3);
        assert_eq!(from_pair(&one, &[vec![1, 2, 3]]).unwrap(), bo("{1,2,3,-1,-2,-3}"));
        assert_eq!(from_pair(&one, &[]).unwrap(), bo("{1,2,3}{-1,-2,-3}"));
        let pi: NcPartition = "{1,4}{2,3}".parse().unwrap();
        assert!(matches!(from_pair(&pi, &[vec![2, 3]]), Err(Error::NotOuter(_))));
        let total: u64 = crate::nc::enumerate_nc(5)
            .unwrap()
            .iter()
            .map(|p| 1u64 << block_roles(p).iter().filter(|r| **r == BlockRole::Outer).count())
            .sum();
        assert_eq!(total, binomial(10, 5));
    }
}
