//! Degree-truncated families of multilinear functionals on a `k`-dimensional
//! space, evaluated on basis words, and the tensor of a linear map
//! `V -> V ⊗ V`.
//!
//! A word is a slice of letters in `1..=k`. A family of degree `N` stores one
//! exact rational for every word of length `1..=N`; the degree-zero value is
//! implied by the family's [`Kind`] (see [`Unit`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, ratio, Rational};

/// What a family represents. Only used for tagging and for the implied
/// degree-zero value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Moment,
    FreeCumulant,
    BooleanCumulant,
    CfreeCumulant,
    CcCumulant,
    Infinitesimal,
    InfinitesimalCumulant,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Moment,
        Kind::FreeCumulant,
        Kind::BooleanCumulant,
        Kind::CfreeCumulant,
        Kind::CcCumulant,
        Kind::Infinitesimal,
        Kind::InfinitesimalCumulant,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Moment => "moment",
            Kind::FreeCumulant => "free-cumulant",
            Kind::BooleanCumulant => "boolean-cumulant",
            Kind::CfreeCumulant => "cfree-cumulant",
            Kind::CcCumulant => "cc-cumulant",
            Kind::Infinitesimal => "infinitesimal",
            Kind::InfinitesimalCumulant => "infinitesimal-cumulant",
        }
    }

    /// Moments of a distribution take the value 1 on the empty word; every
    /// other kind takes 0 there.
    pub fn unit(self) -> Unit {
        match self {
            Kind::Moment => Unit::One,
            _ => Unit::Zero,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    One,
    Zero,
}

/// Number of words of each length `1..=n` over `k` letters, or `None` if the
/// table would not fit in memory addressing.
fn word_count(k: usize, len: usize) -> Option<usize> {
    k.checked_pow(len as u32)
}

/// Index of `word` among the words of its length, in lexicographic order.
fn word_index(k: usize, word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &l| acc * k + (l - 1))
}

/// Every word of length `len` over `1..=k`, in lexicographic order.
pub fn words(k: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = word_count(k, len).expect("word count fits usize");
    (0..total).map(move |mut idx| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = idx % k + 1;
            idx /= k;
        }
        w
    })
}

/// Every word of length `1..=n`, ordered by length and then lexicographically.
pub fn all_words(k: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).flat_map(move |len| words(k, len))
}

/// Parses `"1,2,1"` into a word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&l| l >= 1)
                .ok_or_else(|| Error::InvalidWord(s.to_string()))
        })
        .collect()
}

pub fn format_word(word: &[usize]) -> String {
    let parts: Vec<String> = word.iter().map(usize::to_string).collect();
    parts.join(",")
}

/// The subword of `word` at the (1-based) positions in `positions`, taken in
/// increasing order.
pub fn subword(word: &[usize], positions: &[usize]) -> Vec<usize> {
    positions.iter().map(|&p| word[p - 1]).collect()
}

/// Degree-truncated family of multilinear functionals on basis words.
#[derive(Clone, PartialEq, Eq)]
pub struct MultilinearFamily {
    k: usize,
    degree: usize,
    kind: Kind,
    // values[len - 1][word_index(word)]
    values: Vec<Vec<Rational>>,
}

impl fmt::Debug for MultilinearFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultilinearFamily(k={}, N={}, {})", self.k, self.degree, self.kind)
    }
}

impl MultilinearFamily {
    /// Builds a family by evaluating `f` on every word of length `1..=degree`,
    /// shortest words first.
    pub fn from_fn(
        k: usize,
        degree: usize,
        kind: Kind,
        mut f: impl FnMut(&[usize]) -> Rational,
    ) -> Self {
        assert!(k >= 1 && degree >= 1, "families need k >= 1 and N >= 1");
        let values = (1..=degree)
            .map(|len| words(k, len).map(|w| f(&w)).collect())
            .collect();
        MultilinearFamily { k, degree, kind, values }
    }

    /// Like [`Self::from_fn`], but `f` also sees the values computed so far,
    /// which is how the recursive cumulant definitions are evaluated.
    pub fn build_recursive(
        k: usize,
        degree: usize,
        kind: Kind,
        mut f: impl FnMut(&MultilinearFamily, &[usize]) -> Rational,
    ) -> Self {
        let mut fam = MultilinearFamily::zeros(k, degree, kind);
        for len in 1..=degree {
            for (idx, w) in words(k, len).enumerate() {
                let v = f(&fam, &w);
                fam.values[len - 1][idx] = v;
            }
        }
        fam
    }

    pub fn zeros(k: usize, degree: usize, kind: Kind) -> Self {
        Self::from_fn(k, degree, kind, |_| Rational::zero())
    }

    /// Builds from an explicit word table, which must cover every word of
    /// length `1..=degree` exactly once.
    pub fn from_map(
        k: usize,
        degree: usize,
        kind: Kind,
        table: &BTreeMap<Vec<usize>, Rational>,
    ) -> Result<Self> {
        if k == 0 || degree == 0 {
            return Err(Error::ShapeMismatch("k and N must be positive".into()));
        }
        for w in table.keys() {
            if w.is_empty() || w.len() > degree || w.iter().any(|&l| l == 0 || l > k) {
                return Err(Error::InvalidWord(format_word(w)));
            }
        }
        let mut missing = None;
        let fam = Self::from_fn(k, degree, kind, |w| match table.get(w) {
            Some(v) => v.clone(),
            None => {
                missing.get_or_insert_with(|| format_word(w));
                Rational::zero()
            }
        });
        match missing {
            Some(w) => Err(Error::InvalidWord(format!("missing value for word {w}"))),
            None => Ok(fam),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Truncation degree `N`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn unit(&self) -> Unit {
        self.kind.unit()
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    /// Value at `word`; panics on an invalid word. Hot path for the sums.
    pub fn at(&self, word: &[usize]) -> &Rational {
        &self.values[word.len() - 1][word_index(self.k, word)]
    }

    /// Checked lookup.
    pub fn get(&self, word: &[usize]) -> Result<&Rational> {
        if word.is_empty() || word.len() > self.degree || word.iter().any(|&l| l == 0 || l > self.k) {
            return Err(Error::InvalidWord(format_word(word)));
        }
        Ok(self.at(word))
    }

    pub fn set(&mut self, word: &[usize], value: Rational) -> Result<()> {
        self.get(word)?;
        self.values[word.len() - 1][word_index(self.k, word)] = value;
        Ok(())
    }

    /// Value at the subword of `word` selected by `positions` (1-based),
    /// always read in increasing position order.
    pub fn restrict(&self, word: &[usize], positions: &[usize]) -> Result<Rational> {
        if positions.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&p) = positions.iter().find(|&&p| p == 0 || p > word.len()) {
            return Err(Error::PositionOutOfRange { position: p, len: word.len() });
        }
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.get(&subword(word, &sorted)).cloned()
    }

    /// True iff every value is invariant under one-step cyclic rotation.
    pub fn is_tracial(&self) -> bool {
        (2..=self.degree).all(|len| {
            words(self.k, len).all(|w| {
                let mut r = w[1..].to_vec();
                r.push(w[0]);
                self.at(&w) == self.at(&r)
            })
        })
    }

    /// The first word at which traciality fails, if any.
    pub fn tracial_violation(&self) -> Option<Vec<usize>> {
        (2..=self.degree).find_map(|len| {
            words(self.k, len).find(|w| {
                let mut r = w[1..].to_vec();
                r.push(w[0]);
                self.at(w) != self.at(&r)
            })
        })
    }

    /// Same family, read only up to `degree`.
    pub fn truncate(&self, degree: usize) -> Result<Self> {
        if degree == 0 || degree > self.degree {
            return Err(Error::DegreeTooLow { needed: degree, have: self.degree });
        }
        Ok(MultilinearFamily {
            k: self.k,
            degree,
            kind: self.kind,
            values: self.values[..degree].to_vec(),
        })
    }

    /// The family over `k + offset` letters that reads letter `l + offset` as
    /// letter `l`; words touching letters `<= offset` get the value 0.
    pub fn relabel(&self, offset: usize) -> Self {
        Self::from_fn(self.k + offset, self.degree, self.kind, |w| {
            if w.iter().all(|&l| l > offset) {
                let shifted: Vec<usize> = w.iter().map(|l| l - offset).collect();
                self.at(&shifted).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// The restriction to the letters `first..first + count`, relabelled as
    /// `1..=count`.
    pub fn restrict_to_letters(&self, first: usize, count: usize) -> Result<Self> {
        if first == 0 || count == 0 || first + count - 1 > self.k {
            return Err(Error::ShapeMismatch(format!(
                "letters {first}..{} outside 1..={}",
                first + count,
                self.k
            )));
        }
        Ok(Self::from_fn(count, self.degree, self.kind, |w| {
            let shifted: Vec<usize> = w.iter().map(|l| l + first - 1).collect();
            self.at(&shifted).clone()
        }))
    }

    pub fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.k != other.k || self.degree != other.degree {
            return Err(Error::ShapeMismatch(format!(
                "(k={}, N={}) vs (k={}, N={})",
                self.k, self.degree, other.k, other.degree
            )));
        }
        Ok(())
    }

    /// Entrywise combination of two families of the same shape.
    pub fn zip_with(
        &self,
        other: &Self,
        kind: Kind,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Self> {
        self.check_same_shape(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            .collect();
        Ok(MultilinearFamily { k: self.k, degree: self.degree, kind, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, self.kind, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, self.kind, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let values = self
            .values
            .iter()
            .map(|row| row.iter().map(|x| x * c).collect())
            .collect();
        MultilinearFamily { values, ..self.clone() }
    }

    /// The first word at which two same-shape families differ.
    pub fn first_difference(&self, other: &Self) -> Option<Vec<usize>> {
        if self.k != other.k || self.degree != other.degree {
            return Some(Vec::new());
        }
        all_words(self.k, self.degree).find(|w| self.at(w) != other.at(w))
    }

    /// `(word, value)` pairs, shortest words first.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> + '_ {
        all_words(self.k, self.degree).map(move |w| {
            let v = self.at(&w);
            (w, v)
        })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let values: serde_json::Map<String, serde_json::Value> = self
            .entries()
            .map(|(w, v)| (format_word(&w), serde_json::Value::String(format_rational(v))))
            .collect();
        serde_json::json!({
            "k": self.k,
            "N": self.degree,
            "kind": self.kind,
            "unit": self.unit(),
            "values": values,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("family serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            k: usize,
            #[serde(rename = "N")]
            n: usize,
            kind: Kind,
            unit: Unit,
            values: BTreeMap<String, String>,
        }
        let r: Repr = serde_json::from_str(s)?;
        if r.unit != r.kind.unit() {
            return Err(Error::Parse(format!(
                "unit {:?} does not match kind {}",
                r.unit, r.kind
            )));
        }
        let mut table = BTreeMap::new();
        for (w, v) in &r.values {
            let word = parse_word(w)?;
            if table.insert(word, parse_rational(v)?).is_some() {
                return Err(Error::InvalidWord(format!("duplicate word {w}")));
            }
        }
        Self::from_map(r.k, r.n, r.kind, &table)
    }

    /// Seeded random family with small rational values.
    pub fn random(k: usize, degree: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_fn(k, degree, Kind::Moment, |_| small_rational(&mut rng))
    }

    /// Seeded random family constant on cyclic rotation classes: one value is
    /// drawn per necklace, at its lexicographically least rotation.
    pub fn random_tracial(k: usize, degree: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::build_recursive(k, degree, Kind::Moment, |fam, w| {
            let least = least_rotation(w);
            if least == w {
                small_rational(&mut rng)
            } else {
                // Lexicographically smaller, so already filled in.
                fam.at(&least).clone()
            }
        })
    }
}

fn least_rotation(w: &[usize]) -> Vec<usize> {
    (0..w.len())
        .map(|s| w[s..].iter().chain(&w[..s]).copied().collect::<Vec<_>>())
        .min()
        .expect("non-empty word")
}

/// Numerator in `-9..=9`, denominator in `1..=4`.
pub(crate) fn small_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    ratio(num, den)
}

/// Seeded random family; see [`MultilinearFamily::random`].
pub fn random_family(k: usize, degree: usize, seed: u64) -> MultilinearFamily {
    MultilinearFamily::random(k, degree, seed)
}

/// Seeded random tracial family; see [`MultilinearFamily::random_tracial`].
pub fn random_tracial(k: usize, degree: usize, seed: u64) -> MultilinearFamily {
    MultilinearFamily::random_tracial(k, degree, seed)
}

/// Coefficients of a linear map `Δ: V -> V ⊗ V` on the basis `e_1..e_k`:
/// `Δ(e_i) = Σ_{j,l} d[i][j][l] e_j ⊗ e_l`, with `j` the first tensor factor.
#[derive(Clone, PartialEq, Eq)]
pub struct DeltaTensor {
    k: usize,
    d: Vec<Rational>,
}

impl fmt::Debug for DeltaTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeltaTensor(k={})", self.k)
    }
}

impl DeltaTensor {
    pub fn zero(k: usize) -> Self {
        assert!(k >= 1, "tensor needs k >= 1");
        DeltaTensor { k, d: vec![Rational::zero(); k * k * k] }
    }

    /// `Δ(e_i) = e_i ⊗ e_i`.
    pub fn diagonal(k: usize) -> Self {
        let mut t = Self::zero(k);
        for i in 1..=k {
            t.set(i, i, i, Rational::from_integer(1.into()));
        }
        t
    }

    /// Seeded random tensor with the same value distribution as the
    /// random families.
    pub fn random(k: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = Self::zero(k);
        for v in &mut t.d {
            *v = small_rational(&mut rng);
        }
        t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn offset(&self, i: usize, j: usize, l: usize) -> usize {
        ((i - 1) * self.k + (j - 1)) * self.k + (l - 1)
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> &Rational {
        &self.d[self.offset(i, j, l)]
    }

    pub fn set(&mut self, i: usize, j: usize, l: usize, value: Rational) {
        let o = self.offset(i, j, l);
        self.d[o] = value;
    }

    /// Non-zero coefficients of `Δ(e_i)` as `(j, l, value)`.
    pub fn nonzero(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        let k = self.k;
        (1..=k)
            .flat_map(move |j| (1..=k).map(move |l| (j, l)))
            .map(move |(j, l)| (j, l, self.get(i, j, l)))
            .filter(|(_, _, v)| !v.is_zero())
    }

    pub fn to_json(&self) -> String {
        let mut entries = Vec::new();
        for i in 1..=self.k {
            for (j, l, v) in self.nonzero(i) {
                entries.push(serde_json::json!({
                    "i": i, "j": j, "l": l, "value": format_rational(v)
                }));
            }
        }
        serde_json::to_string_pretty(&serde_json::json!({ "k": self.k, "entries": entries }))
            .expect("tensor serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Entry {
            i: usize,
            j: usize,
            l: usize,
            value: String,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            k: usize,
            entries: Vec<Entry>,
        }
        let r: Repr = serde_json::from_str(s)?;
        if r.k == 0 {
            return Err(Error::Parse("tensor k must be positive".into()));
        }
        let mut t = Self::zero(r.k);
        for e in r.entries {
            if [e.i, e.j, e.l].iter().any(|&x| x == 0 || x > r.k) {
                return Err(Error::Parse(format!(
                    "tensor index ({}, {}, {}) outside 1..={}",
                    e.i, e.j, e.l, r.k
                )));
            }
            t.set(e.i, e.j, e.l, parse_rational(&e.value)?);
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn word_enumeration() {
        let w: Vec<Vec<usize>> = words(2, 2).collect();
        assert_eq!(w, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(all_words(3, 3).count(), 3 + 9 + 27);
        assert_eq!(parse_word("1,2,1").unwrap(), vec![1, 2, 1]);
        assert!(parse_word("1,0").is_err());
        assert_eq!(format_word(&[3, 1]), "3,1");
    }

    #[test]
    fn restrict_examples() {
        let f = MultilinearFamily::random(2, 3, 5);
        let w = [1, 2, 1];
        assert_eq!(f.restrict(&w, &[1, 3]).unwrap(), *f.at(&[1, 1]));
        assert_eq!(f.restrict(&w, &[3, 1]).unwrap(), *f.at(&[1, 1]));
        assert_eq!(f.restrict(&w, &[1, 2, 3]).unwrap(), *f.at(&w));
        assert_eq!(f.restrict(&w, &[2]).unwrap(), *f.at(&[2]));
        assert!(matches!(f.restrict(&w, &[]), Err(Error::EmptySubset)));
        assert!(matches!(f.restrict(&w, &[4]), Err(Error::PositionOutOfRange { position: 4, len: 3 })));
    }

    #[test]
    fn traciality() {
        assert!(MultilinearFamily::random(1, 5, 3).is_tracial());
        let t = MultilinearFamily::random_tracial(3, 5, 11);
        assert!(t.is_tracial());
        for w in all_words(3, 5) {
            for s in 0..w.len() {
                let r: Vec<usize> = w[s..].iter().chain(&w[..s]).copied().collect();
                assert_eq!(t.at(&w), t.at(&r));
            }
        }
        let mut f = MultilinearFamily::zeros(2, 2, Kind::Moment);
        f.set(&[1, 2], int(1)).unwrap();
        assert!(!f.is_tracial());
        assert_eq!(f.tracial_violation(), Some(vec![1, 2]));
    }

    #[test]
    fn random_is_deterministic_and_small() {
        let a = MultilinearFamily::random(2, 4, 42);
        assert_eq!(a, MultilinearFamily::random(2, 4, 42));
        assert_ne!(a, MultilinearFamily::random(2, 4, 43));
        assert_eq!(random_tracial(2, 4, 9), random_tracial(2, 4, 9));
        for (_, v) in a.entries() {
            assert!(v.numer().magnitude() <= &9u32.into());
            assert!(*v.denom() >= 1.into() && *v.denom() <= 4.into());
        }
        assert_eq!(a.entries().count(), 2 + 4 + 8 + 16);
    }

    #[test]
    fn relabel_and_letters() {
        let f = MultilinearFamily::random(1, 3, 1);
        assert_eq!(f.relabel(0), f);
        let g = f.relabel(1);
        assert_eq!(g.k(), 2);
        assert_eq!(g.at(&[2, 2]), f.at(&[1, 1]));
        assert!(g.at(&[1, 2]).is_zero());
        assert_eq!(g.restrict_to_letters(2, 1).unwrap(), f);
        assert!(g.restrict_to_letters(2, 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = MultilinearFamily::random(2, 3, 8).with_kind(Kind::CfreeCumulant);
        let text = f.to_json();
        assert!(text.contains("\"unit\": \"zero\""));
        assert_eq!(MultilinearFamily::from_json(&text).unwrap(), f);
        let bad_unit = text.replace("\"zero\"", "\"one\"");
        assert!(MultilinearFamily::from_json(&bad_unit).is_err());
        let missing = r#"{"k":1,"N":2,"kind":"moment","unit":"one","values":{"1":"1"}}"#;
        assert!(matches!(MultilinearFamily::from_json(missing), Err(Error::InvalidWord(_))));
        let ok = r#"{"k":1,"N":2,"kind":"moment","unit":"one","values":{"1":"1/2","1,1":"-3"}}"#;
        let g = MultilinearFamily::from_json(ok).unwrap();
        assert_eq!(*g.at(&[1, 1]), int(-3));
        let extra = r#"{"k":1,"N":1,"kind":"moment","unit":"one","values":{"1":"1","2":"0"}}"#;
        assert!(MultilinearFamily::from_json(extra).is_err());
    }

    #[test]
    fn tensor_json_and_accessors() {
        let t = DeltaTensor::random(2, 4);
        assert_eq!(DeltaTensor::from_json(&t.to_json()).unwrap(), t);
        let d = DeltaTensor::diagonal(2);
        assert_eq!(*d.get(2, 2, 2), int(1));
        assert!(d.get(1, 2, 1).is_zero());
        assert_eq!(d.nonzero(1).count(), 1);
        assert!(DeltaTensor::from_json(r#"{"k":1,"entries":[{"i":1,"j":2,"l":1,"value":"1"}]}"#).is_err());
    }
}
