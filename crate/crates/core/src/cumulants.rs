//! Moment/cumulant transforms by direct summation over `NC(n)`, `Int(n)` and
//! the signed lattices: free, Boolean, infinitesimal, c-free and the
//! alternative c-free cumulants, plus the explicit and identity-side
//! formulas used to cross-check them.
//!
//! Every transform maps a degree-`N` family to a degree-`N` family.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::functionals::{subword, Kind, MultilinearFamily};
use crate::nc::{self, lattice, BlockRole, NcPartition, DEFAULT_LIMIT};
use crate::rational::{int, Rational};
use crate::typeb::{enumerate_signed, Flavor, TYPEB_LIMIT};

fn check_degree(f: &MultilinearFamily, limit: usize) -> Result<()> {
    if f.degree() > limit {
        return Err(Error::LimitExceeded { n: f.degree(), limit });
    }
    Ok(())
}

fn check_pair(a: &MultilinearFamily, b: &MultilinearFamily) -> Result<()> {
    a.check_same_shape(b)?;
    check_degree(a, DEFAULT_LIMIT)
}

/// `∏_{V in blocks} f(word|V)`.
fn product<'a>(
    f: &MultilinearFamily,
    word: &[usize],
    blocks: impl IntoIterator<Item = &'a Vec<usize>>,
) -> Rational {
    let mut acc = Rational::one();
    for b in blocks {
        let v = f.at(&subword(word, b));
        if v.is_zero() {
            return Rational::zero();
        }
        acc *= v;
    }
    acc
}

/// `Σ_{V_o in π} g(word|V_o) ∏_{V != V_o} f(word|V)`.
fn distinguished_sum(
    f: &MultilinearFamily,
    g: &MultilinearFamily,
    word: &[usize],
    blocks: &[Vec<usize>],
) -> Rational {
    let mut total = Rational::zero();
    for (o, vo) in blocks.iter().enumerate() {
        let head = g.at(&subword(word, vo));
        if head.is_zero() {
            continue;
        }
        let rest = product(
            f,
            word,
            blocks.iter().enumerate().filter(|&(j, _)| j != o).map(|(_, b)| b),
        );
        total += head * rest;
    }
    total
}

/// `κ_n(word)` from moments `φ`: `Σ_{π in NC(n)} Möb(π, 1_n) ∏ φ(word|V)`.
pub fn free_cumulant_at(phi: &MultilinearFamily, word: &[usize]) -> Rational {
    let level = lattice(word.len());
    let mut total = Rational::zero();
    for (pi, &m) in level.partitions.iter().zip(&level.moebius) {
        let p = product(phi, word, pi.blocks());
        if !p.is_zero() {
            total += p * int(m);
        }
    }
    total
}

/// `β_n(word)` from moments `χ`: `Σ_{π in Int(n)} (-1)^(|π|-1) ∏ χ(word|V)`.
pub fn boolean_cumulant_at(chi: &MultilinearFamily, word: &[usize]) -> Rational {
    let mut total = Rational::zero();
    for pi in &lattice(word.len()).intervals {
        let p = product(chi, word, pi.blocks());
        if pi.num_blocks() % 2 == 1 {
            total += p;
        } else {
            total -= p;
        }
    }
    total
}

pub fn free_cumulants(phi: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_degree(phi, DEFAULT_LIMIT)?;
    Ok(MultilinearFamily::from_fn(phi.k(), phi.degree(), Kind::FreeCumulant, |w| {
        free_cumulant_at(phi, w)
    }))
}

/// `φ_n(word) = Σ_{π in NC(n)} ∏ κ(word|V)`.
pub fn moments_from_free(kappa: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_degree(kappa, DEFAULT_LIMIT)?;
    Ok(MultilinearFamily::from_fn(kappa.k(), kappa.degree(), Kind::Moment, |w| {
        lattice(w.len())
            .partitions
            .iter()
            .map(|pi| product(kappa, w, pi.blocks()))
            .sum()
    }))
}

pub fn boolean_cumulants(chi: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_degree(chi, DEFAULT_LIMIT)?;
    Ok(MultilinearFamily::from_fn(chi.k(), chi.degree(), Kind::BooleanCumulant, |w| {
        boolean_cumulant_at(chi, w)
    }))
}

/// `φ_n(word) = Σ_{π in Int(n)} ∏ β(word|V)`.
pub fn moments_from_boolean(beta: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_degree(beta, DEFAULT_LIMIT)?;
    Ok(MultilinearFamily::from_fn(beta.k(), beta.degree(), Kind::Moment, |w| {
        lattice(w.len())
            .intervals
            .iter()
            .map(|pi| product(beta, w, pi.blocks()))
            .sum()
    }))
}

/// Infinitesimal free cumulants `κ′` of `(φ, φ′)`: the Möbius-weighted sum
/// over `NC(n)` in which one distinguished block carries `φ′`.
pub fn infinitesimal_cumulants(
    phi: &MultilinearFamily,
    phi_prime: &MultilinearFamily,
) -> Result<MultilinearFamily> {
    check_pair(phi, phi_prime)?;
    Ok(MultilinearFamily::from_fn(
        phi.k(),
        phi.degree(),
        Kind::InfinitesimalCumulant,
        |w| {
            let level = lattice(w.len());
            let mut total = Rational::zero();
            for (pi, &m) in level.partitions.iter().zip(&level.moebius) {
                let s = distinguished_sum(phi, phi_prime, w, pi.blocks());
                if !s.is_zero() {
                    total += s * int(m);
                }
            }
            total
        },
    ))
}

/// `φ′` from the free cumulants `κ_φ` and the infinitesimal cumulants `κ′`.
pub fn infinitesimal_moments(
    kappa_phi: &MultilinearFamily,
    kappa_prime: &MultilinearFamily,
) -> Result<MultilinearFamily> {
    check_pair(kappa_phi, kappa_prime)?;
    Ok(MultilinearFamily::from_fn(
        kappa_phi.k(),
        kappa_phi.degree(),
        Kind::Infinitesimal,
        |w| {
            lattice(w.len())
                .partitions
                .iter()
                .map(|pi| distinguished_sum(kappa_phi, kappa_prime, w, pi.blocks()))
                .sum()
        },
    ))
}

/// Inner blocks read `inner`, outer blocks read `outer`.
fn inner_outer_product(
    inner: &MultilinearFamily,
    outer: &MultilinearFamily,
    word: &[usize],
    pi: &NcPartition,
    roles: &[BlockRole],
) -> Rational {
    let mut acc = Rational::one();
    for (b, role) in pi.blocks().iter().zip(roles) {
        let f = match role {
            BlockRole::Inner => inner,
            BlockRole::Outer => outer,
        };
        let v = f.at(&subword(word, b));
        if v.is_zero() {
            return Rational::zero();
        }
        acc *= v;
    }
    acc
}

/// c-free cumulants `κ^(c)` of `(φ, χ)`, solved degree by degree from the
/// moment formula with inner blocks on `κ_φ` and outer blocks on `κ^(c)`.
pub fn cfree_cumulants(phi: &MultilinearFamily, chi: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_pair(phi, chi)?;
    let kappa = free_cumulants(phi)?;
    Ok(MultilinearFamily::build_recursive(
        phi.k(),
        phi.degree(),
        Kind::CfreeCumulant,
        |partial, w| {
            let n = w.len();
            let level = lattice(n);
            let one = NcPartition::one(n);
            let mut rest = Rational::zero();
            for (pi, roles) in level.partitions.iter().zip(&level.roles) {
                if *pi != one {
                    rest += inner_outer_product(&kappa, partial, w, pi, roles);
                }
            }
            chi.at(w) - rest
        },
    ))
}

/// `χ` from `φ` and the c-free cumulants.
pub fn moments_from_cfree(
    phi: &MultilinearFamily,
    kappa_c: &MultilinearFamily,
) -> Result<MultilinearFamily> {
    check_pair(phi, kappa_c)?;
    let kappa = free_cumulants(phi)?;
    Ok(MultilinearFamily::from_fn(phi.k(), phi.degree(), Kind::Moment, |w| {
        let level = lattice(w.len());
        level
            .partitions
            .iter()
            .zip(&level.roles)
            .map(|(pi, roles)| inner_outer_product(&kappa, kappa_c, w, pi, roles))
            .sum()
    }))
}

/// Partitions `π << 1_n` paired with `Möb(π, 1_n)` and the index of their
/// outer block.
fn ll_one_terms(n: usize) -> impl Iterator<Item = (&'static NcPartition, i64, usize)> {
    let level = lattice(n);
    level
        .partitions
        .iter()
        .zip(&level.moebius)
        .filter(|(pi, _)| nc::is_ll_one(pi))
        .map(|(pi, &m)| (pi, m, pi.block_of(1)))
}

/// `β_χ(word|V_o) ∏_{V != V_o} f(word|V)`, with `V_o` the block at index `o`.
fn outer_head_product(
    head: &MultilinearFamily,
    rest: &MultilinearFamily,
    word: &[usize],
    pi: &NcPartition,
    o: usize,
) -> Rational {
    let h = head.at(&subword(word, pi.block(o)));
    if h.is_zero() {
        return Rational::zero();
    }
    h * product(
        rest,
        word,
        pi.blocks().iter().enumerate().filter(|&(j, _)| j != o).map(|(_, b)| b),
    )
}

/// The non-recursive c-free formula: a Möbius-weighted sum over
/// `π << 1_n` with the Boolean cumulant of `χ` on the outer block and
/// moments of `φ` on every other block.
pub fn cfree_explicit(phi: &MultilinearFamily, chi: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_pair(phi, chi)?;
    let beta_chi = boolean_cumulants(chi)?;
    Ok(MultilinearFamily::from_fn(phi.k(), phi.degree(), Kind::CfreeCumulant, |w| {
        ll_one_terms(w.len())
            .map(|(pi, m, o)| outer_head_product(&beta_chi, phi, w, pi, o) * int(m))
            .sum()
    }))
}

/// Free cumulants of `φ` written through its Boolean cumulants:
/// `Σ_{π << 1_n} (-1)^(|π|-1) ∏ β_φ(word|V)`.
pub fn free_from_boolean_explicit(phi: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_degree(phi, DEFAULT_LIMIT)?;
    let beta = boolean_cumulants(phi)?;
    Ok(MultilinearFamily::from_fn(phi.k(), phi.degree(), Kind::FreeCumulant, |w| {
        ll_one_terms(w.len())
            .map(|(pi, _, _)| signed(product(&beta, w, pi.blocks()), pi.num_blocks() - 1))
            .sum()
    }))
}

/// c-free cumulants written through Boolean cumulants: as
/// [`free_from_boolean_explicit`] but the outer block reads `β_χ`.
pub fn cfree_from_boolean_explicit(
    phi: &MultilinearFamily,
    chi: &MultilinearFamily,
) -> Result<MultilinearFamily> {
    check_pair(phi, chi)?;
    let beta_phi = boolean_cumulants(phi)?;
    let beta_chi = boolean_cumulants(chi)?;
    Ok(MultilinearFamily::from_fn(phi.k(), phi.degree(), Kind::CfreeCumulant, |w| {
        ll_one_terms(w.len())
            .map(|(pi, _, o)| signed(outer_head_product(&beta_chi, &beta_phi, w, pi, o), pi.num_blocks() - 1))
            .sum()
    }))
}

fn signed(x: Rational, exponent: usize) -> Rational {
    if exponent.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

/// Both sides of the fixed-outer-block identity: for `V_o ∋ 1, n`,
/// `Σ_{π ∋ V_o} (-1)^(1+|π|) ∏_{V != V_o} β_φ(word|V)` and
/// `Σ_{ρ ∋ V_o} Möb(ρ, 1_n) ∏_{V != V_o} φ(word|V)`, sums over `NC(n)`.
pub fn fixed_outer_block_sides(
    phi: &MultilinearFamily,
    beta_phi: &MultilinearFamily,
    word: &[usize],
    v_o: &[usize],
) -> Result<(Rational, Rational)> {
    let n = word.len();
    if n < 2 || v_o.first() != Some(&1) || v_o.last() != Some(&n) {
        return Err(Error::InvalidPartition(format!(
            "fixed block {v_o:?} must contain 1 and {n}"
        )));
    }
    let level = lattice(n);
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for (pi, &m) in level.partitions.iter().zip(&level.moebius) {
        let o = pi.block_of(1);
        if pi.block(o) != v_o {
            continue;
        }
        let others = || pi.blocks().iter().enumerate().filter(|&(j, _)| j != o).map(|(_, b)| b);
        lhs += signed(product(beta_phi, word, others()), pi.num_blocks() + 1);
        rhs += product(phi, word, others()) * int(m);
    }
    Ok((lhs, rhs))
}

/// Per-`n` summary of a signed lattice: for every partition, the
/// absolute-value sets of its zero-blocks and of one block per pair.
type SignedSummary = Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)>;

static OPP_LEVELS: [OnceLock<SignedSummary>; TYPEB_LIMIT + 1] =
    [const { OnceLock::new() }; TYPEB_LIMIT + 1];
static B_LEVELS: [OnceLock<SignedSummary>; TYPEB_LIMIT + 1] =
    [const { OnceLock::new() }; TYPEB_LIMIT + 1];

fn signed_summary(n: usize, flavor: Flavor) -> &'static SignedSummary {
    let table = match flavor {
        Flavor::TypeB => &B_LEVELS,
        Flavor::TypeBOpp => &OPP_LEVELS,
    };
    table[n].get_or_init(|| {
        enumerate_signed(n, flavor)
            .expect("within limit")
            .iter()
            .map(|s| s.abs_structure())
            .collect()
    })
}

/// `∏_Z zero(word|Z) ∏_pairs pair(word|U)`.
fn signed_product(
    zero: &MultilinearFamily,
    pair: &MultilinearFamily,
    word: &[usize],
    zeros: &[Vec<usize>],
    pairs: &[Vec<usize>],
) -> Rational {
    let z = product(zero, word, zeros);
    if z.is_zero() {
        return z;
    }
    z * product(pair, word, pairs)
}

/// Alternative c-free cumulants `κ^(cc)`, solved degree by degree from the
/// B-opp moment formula (positive blocks on `κ_φ`, zero-blocks on `κ^(cc)`).
pub fn cc_cumulants(phi: &MultilinearFamily, chi: &MultilinearFamily) -> Result<MultilinearFamily> {
    phi.check_same_shape(chi)?;
    check_degree(phi, TYPEB_LIMIT)?;
    let kappa = free_cumulants(phi)?;
    Ok(MultilinearFamily::build_recursive(
        phi.k(),
        phi.degree(),
        Kind::CcCumulant,
        |partial, w| {
            let n = w.len();
            let full: Vec<usize> = (1..=n).collect();
            let mut rest = Rational::zero();
            for (zeros, pairs) in signed_summary(n, Flavor::TypeBOpp) {
                // The one-block partition is the term being solved for.
                if pairs.is_empty() && zeros.len() == 1 && zeros[0] == full {
                    continue;
                }
                rest += signed_product(partial, &kappa, w, zeros, pairs);
            }
            chi.at(w) - rest
        },
    ))
}

/// `χ` from `φ` and the alternative c-free cumulants.
pub fn moments_from_cc(phi: &MultilinearFamily, kappa_cc: &MultilinearFamily) -> Result<MultilinearFamily> {
    phi.check_same_shape(kappa_cc)?;
    check_degree(phi, TYPEB_LIMIT)?;
    let kappa = free_cumulants(phi)?;
    Ok(MultilinearFamily::from_fn(phi.k(), phi.degree(), Kind::Moment, |w| {
        signed_summary(w.len(), Flavor::TypeBOpp)
            .iter()
            .map(|(zeros, pairs)| signed_product(kappa_cc, &kappa, w, zeros, pairs))
            .sum()
    }))
}

/// `φ′` as a single sum over type B partitions with a zero-block `Z`:
/// `κ′(word|Abs Z) ∏_{pairs} κ_φ(word|Abs U)`.
pub fn infinitesimal_moments_type_b(
    kappa_phi: &MultilinearFamily,
    kappa_prime: &MultilinearFamily,
) -> Result<MultilinearFamily> {
    kappa_phi.check_same_shape(kappa_prime)?;
    check_degree(kappa_phi, TYPEB_LIMIT)?;
    Ok(MultilinearFamily::from_fn(
        kappa_phi.k(),
        kappa_phi.degree(),
        Kind::Infinitesimal,
        |w| {
            signed_summary(w.len(), Flavor::TypeB)
                .iter()
                .filter(|(zeros, _)| !zeros.is_empty())
                .map(|(zeros, pairs)| signed_product(kappa_prime, kappa_phi, w, zeros, pairs))
                .sum()
        },
    ))
}

/// `χ - φ` as a sum over B-opp partitions with at least one zero-block:
/// zero-blocks on `κ^(cc)`, pairs on `κ_φ`.
pub fn chi_minus_phi_type_b_opp(
    kappa_phi: &MultilinearFamily,
    kappa_cc: &MultilinearFamily,
) -> Result<MultilinearFamily> {
    kappa_phi.check_same_shape(kappa_cc)?;
    check_degree(kappa_phi, TYPEB_LIMIT)?;
    Ok(MultilinearFamily::from_fn(
        kappa_phi.k(),
        kappa_phi.degree(),
        Kind::Moment,
        |w| {
            signed_summary(w.len(), Flavor::TypeBOpp)
                .iter()
                .filter(|(zeros, _)| !zeros.is_empty())
                .map(|(zeros, pairs)| signed_product(kappa_cc, kappa_phi, w, zeros, pairs))
                .sum()
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functionals::random_family;
    use crate::nc::catalan;
    use crate::rational::ratio;

    fn k1(values: &[i64], kind: Kind) -> MultilinearFamily {
        MultilinearFamily::from_fn(1, values.len(), kind, |w| int(values[w.len() - 1]))
    }

    #[test]
    fn semicircle_moments_and_cumulants() {
        let moments: Vec<i64> = (1..=8)
            .map(|n| if n % 2 == 0 { catalan(n / 2) as i64 } else { 0 })
            .collect();
        let phi = k1(&moments, Kind::Moment);
        let kappa = free_cumulants(&phi).unwrap();
        for n in 1..=8 {
            let expect = if n == 2 { 1 } else { 0 };
            assert_eq!(*kappa.at(&vec![1; n]), int(expect), "n={n}");
        }
        let sc = k1(&[0, 1, 0, 0], Kind::FreeCumulant);
        assert_eq!(*moments_from_free(&sc).unwrap().at(&[1, 1, 1, 1]), int(2));
    }

    #[test]
    fn boolean_small_cases() {
        let b = k1(&[0, 1, 0, 0], Kind::BooleanCumulant);
        assert_eq!(*moments_from_boolean(&b).unwrap().at(&[1, 1, 1, 1]), int(1));
        let chi = random_family(2, 3, 1);
        let beta = boolean_cumulants(&chi).unwrap();
        assert_eq!(beta.at(&[2]), chi.at(&[2]));
        assert_eq!(*beta.at(&[1, 2]), chi.at(&[1, 2]) - chi.at(&[1]) * chi.at(&[2]));
        // Length-one support: moments factor over letters.
        let single = MultilinearFamily::from_fn(2, 3, Kind::BooleanCumulant, |w| {
            if w.len() == 1 { ratio(w[0] as i64 + 1, 2) } else { int(0) }
        });
        let m = moments_from_boolean(&single).unwrap();
        assert_eq!(*m.at(&[1, 2, 2]), ratio(1, 1) * ratio(3, 2) * ratio(3, 2));
    }

    #[test]
    fn free_degree_two() {
        let phi = random_family(2, 3, 2);
        let kappa = free_cumulants(&phi).unwrap();
        assert_eq!(kappa.at(&[1]), phi.at(&[1]));
        assert_eq!(*kappa.at(&[2, 1]), phi.at(&[2, 1]) - phi.at(&[2]) * phi.at(&[1]));
    }

    #[test]
    fn infinitesimal_degree_two() {
        let phi = random_family(2, 3, 3);
        let dphi = random_family(2, 3, 4);
        let kp = infinitesimal_cumulants(&phi, &dphi).unwrap();
        assert_eq!(kp.at(&[2]), dphi.at(&[2]));
        let expect = dphi.at(&[1, 2]) - dphi.at(&[1]) * phi.at(&[2]) - phi.at(&[1]) * dphi.at(&[2]);
        assert_eq!(*kp.at(&[1, 2]), expect);
        let zero = MultilinearFamily::zeros(2, 3, Kind::Infinitesimal);
        assert!(infinitesimal_cumulants(&phi, &zero).unwrap().entries().all(|(_, v)| v.is_zero()));
        let kz = MultilinearFamily::zeros(2, 3, Kind::InfinitesimalCumulant);
        let kappa = free_cumulants(&phi).unwrap();
        assert!(infinitesimal_moments(&kappa, &kz).unwrap().entries().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn cfree_special_cases() {
        let phi = random_family(2, 4, 5);
        let chi = random_family(2, 4, 6);
        let kc = cfree_cumulants(&phi, &chi).unwrap();
        assert_eq!(kc.at(&[1]), chi.at(&[1]));
        assert_eq!(*kc.at(&[1, 2]), chi.at(&[1, 2]) - chi.at(&[1]) * chi.at(&[2]));
        let same = cfree_cumulants(&phi, &phi).unwrap();
        assert_eq!(same.first_difference(&free_cumulants(&phi).unwrap().with_kind(Kind::CfreeCumulant)), None);
        assert_eq!(moments_from_cfree(&phi, &kc).unwrap(), chi);
        assert_eq!(cfree_explicit(&phi, &chi).unwrap(), kc);
    }

    #[test]
    fn cc_special_cases() {
        let phi = random_family(2, 4, 7);
        let chi = random_family(2, 4, 8);
        let cc = cc_cumulants(&phi, &chi).unwrap();
        assert_eq!(*cc.at(&[2]), chi.at(&[2]) - phi.at(&[2]));
        assert!(cc_cumulants(&phi, &phi).unwrap().entries().all(|(_, v)| v.is_zero()));
        assert_eq!(moments_from_cc(&phi, &cc).unwrap(), chi);
    }

    #[test]
    fn shape_errors() {
        let a = random_family(2, 3, 1);
        let b = random_family(1, 3, 1);
        assert!(matches!(cfree_cumulants(&a, &b), Err(Error::ShapeMismatch(_))));
        assert!(matches!(infinitesimal_moments(&a, &b), Err(Error::ShapeMismatch(_))));
        let big = random_family(1, 9, 1);
        assert!(matches!(cc_cumulants(&big, &big), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn fixed_outer_block_rejects_bad_block() {
        let phi = random_family(1, 3, 1);
        let beta = boolean_cumulants(&phi).unwrap();
        assert!(fixed_outer_block_sides(&phi, &beta, &[1, 1, 1], &[1, 2]).is_err());
        let (l, r) = fixed_outer_block_sides(&phi, &beta, &[1, 1, 1], &[1, 3]).unwrap();
        assert_eq!(l, r);
    }
}
