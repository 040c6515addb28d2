//! Outcome of an identity check over many words.

use serde::Serialize;

use crate::functionals::{format_word, MultilinearFamily};
use crate::rational::{format_rational, Rational};

/// Where an identity first failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub word: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl Verification {
    pub fn pass(checked: usize) -> Self {
        Verification { ok: true, checked, counterexample: None }
    }

    pub fn fail(word: &[usize], lhs: &Rational, rhs: &Rational, detail: impl Into<String>) -> Self {
        Verification {
            ok: false,
            checked: 0,
            counterexample: Some(Counterexample {
                word: word.to_vec(),
                lhs: format_rational(lhs),
                rhs: format_rational(rhs),
                detail: detail.into(),
            }),
        }
    }

    /// Entrywise comparison of two families of the same shape; kinds are
    /// ignored.
    pub fn compare(lhs: &MultilinearFamily, rhs: &MultilinearFamily, detail: &str) -> Self {
        if lhs.k() != rhs.k() || lhs.degree() != rhs.degree() {
            return Verification {
                ok: false,
                checked: 0,
                counterexample: Some(Counterexample {
                    word: Vec::new(),
                    lhs: format!("k={}, N={}", lhs.k(), lhs.degree()),
                    rhs: format!("k={}, N={}", rhs.k(), rhs.degree()),
                    detail: format!("{detail}: shapes differ"),
                }),
            };
        }
        let mut checked = 0;
        for (w, a) in lhs.entries() {
            let b = rhs.at(&w);
            if a != b {
                return Self::fail(&w, a, b, format!("{detail} at word {}", format_word(&w)));
            }
            checked += 1;
        }
        Self::pass(checked)
    }

    /// Combines sequential checks: the first failure wins, counts add up.
    pub fn and(self, next: impl FnOnce() -> Verification) -> Self {
        if !self.ok {
            return self;
        }
        let n = next();
        Verification { checked: self.checked + n.checked, ..n }
    }
}
