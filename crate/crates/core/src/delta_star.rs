//! The `Δ*` transformation induced by a linear map `Δ: V -> V ⊗ V`, the
//! cyclic Boolean-cumulant map `Ψ_k`, the twisted functionals used to prove
//! the main identity, and the verifiers built on them.
//!
//! Everything is expanded over basis words; no tensor power is materialized.
//! Degree contract: a family of degree `N + 1` goes in, degree `N` comes out.

use num_traits::Zero;

use crate::cumulants::{boolean_cumulant_at, boolean_cumulants, cfree_cumulants, infinitesimal_cumulants};
use crate::error::{Error, Result};
use crate::functionals::{subword, words, DeltaTensor, Kind, MultilinearFamily};
use crate::nc::{self, NcPartition};
use crate::rational::{int, Rational};
use crate::verification::Verification;

fn output_degree(f: &MultilinearFamily) -> Result<usize> {
    if f.degree() < 2 {
        return Err(Error::DegreeTooLow { needed: 2, have: f.degree() });
    }
    Ok(f.degree() - 1)
}

fn check_dims(delta: &DeltaTensor, f: &MultilinearFamily) -> Result<()> {
    if delta.k() != f.k() {
        return Err(Error::DimMismatch { tensor: delta.k(), family: f.k() });
    }
    Ok(())
}

fn require_tracial(f: &MultilinearFamily) -> Result<()> {
    if f.is_tracial() {
        Ok(())
    } else {
        Err(Error::NotTracial)
    }
}

/// The length-`(n+1)` word `(l, i_{m+1}, .., i_n, i_1, .., i_{m-1}, j)`.
fn twisted_word(word: &[usize], m: usize, j: usize, l: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity(word.len() + 1);
    w.push(l);
    w.extend_from_slice(&word[m..]);
    w.extend_from_slice(&word[..m - 1]);
    w.push(j);
    w
}

/// `Σ_{j,l} d[i_m][j][l] g(l, i_{m+1}, .., i_n, i_1, .., i_{m-1}, j)`.
fn twisted_sum(
    delta: &DeltaTensor,
    word: &[usize],
    m: usize,
    mut g: impl FnMut(&[usize]) -> Rational,
) -> Rational {
    let mut total = Rational::zero();
    for (j, l, d) in delta.nonzero(word[m - 1]) {
        total += d * g(&twisted_word(word, m, j, l));
    }
    total
}

/// `Δ*(f)`: `ψ_n(i_1..i_n) = Σ_m Σ_{j,l} d[i_m][j][l] f(l, i_{m+1}..i_n, i_1..i_{m-1}, j)`.
///
/// With the diagonal tensor and `n = 2` this reads `f(i,j,i) + f(j,i,j)`.
pub fn delta_star(delta: &DeltaTensor, f: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_dims(delta, f)?;
    let degree = output_degree(f)?;
    let kind = match f.kind() {
        Kind::CfreeCumulant | Kind::CcCumulant | Kind::InfinitesimalCumulant => Kind::InfinitesimalCumulant,
        _ => Kind::Infinitesimal,
    };
    Ok(MultilinearFamily::from_fn(f.k(), degree, kind, |w| {
        (1..=w.len())
            .map(|m| twisted_sum(delta, w, m, |t| f.at(t).clone()))
            .sum()
    }))
}

/// `Ψ_Δ(χ) = Δ*(β_χ)`.
pub fn psi_delta(delta: &DeltaTensor, chi: &MultilinearFamily) -> Result<MultilinearFamily> {
    check_dims(delta, chi)?;
    output_degree(chi)?;
    let beta = boolean_cumulants(chi)?;
    delta_star(delta, &beta)
}

/// `Ψ_k(ν)`: `μ′(i_1..i_n) = Σ_m β_{n+1;ν}(i_m, .., i_n, i_1, .., i_m)`, the
/// wrap-around tuple of length `n + 1` that starts and ends with `i_m`.
pub fn psi_k(nu: &MultilinearFamily) -> Result<MultilinearFamily> {
    let degree = output_degree(nu)?;
    let beta = boolean_cumulants(nu)?;
    Ok(MultilinearFamily::from_fn(nu.k(), degree, Kind::Infinitesimal, |w| {
        (1..=w.len())
            .map(|m| beta.at(&wrap_word(w, m)).clone())
            .sum()
    }))
}

/// `(i_m, .., i_n, i_1, .., i_m)`.
fn wrap_word(word: &[usize], m: usize) -> Vec<usize> {
    let mut t = word[m - 1..].to_vec();
    t.extend_from_slice(&word[..m]);
    t
}

/// `γ^(m)_π(word)`: on the block `V_o ∋ m`, with `m` of rank `r` in it and
/// `y = word|V_o` of length `p`, the value
/// `Σ_{j,l} d[y_r][j][l] β_{p+1;χ}(l, y_{r+1}, .., y_p, y_1, .., y_{r-1}, j)`;
/// every other block reads `φ`.
pub fn eval_gamma(
    delta: &DeltaTensor,
    chi: &MultilinearFamily,
    phi: &MultilinearFamily,
    pi: &NcPartition,
    m: usize,
    word: &[usize],
) -> Result<Rational> {
    if word.len() != pi.n() {
        return Err(Error::ShapeMismatch(format!(
            "word of length {} for a partition of {}",
            word.len(),
            pi.n()
        )));
    }
    if m == 0 || m > pi.n() {
        return Err(Error::ShapeMismatch(format!("m = {m} outside 1..={}", pi.n())));
    }
    check_dims(delta, chi)?;
    let o = pi.block_of(m);
    let v_o = pi.block(o);
    let r = v_o.iter().position(|&x| x == m).expect("m in its block") + 1;
    if chi.degree() < v_o.len() + 1 {
        return Err(Error::DegreeTooLow { needed: v_o.len() + 1, have: chi.degree() });
    }
    let y = subword(word, v_o);
    let head = twisted_sum(delta, &y, r, |t| boolean_cumulant_at(chi, t));
    if head.is_zero() {
        return Ok(head);
    }
    let mut value = head;
    for (idx, b) in pi.blocks().iter().enumerate() {
        if idx != o {
            value *= phi.get(&subword(word, b))?;
        }
    }
    Ok(value)
}

/// `η_ρ(word)`: Boolean cumulant of `χ` on the outer block `W_o ∋ 1, n`,
/// `φ` on every other block.
pub fn eval_eta(
    chi: &MultilinearFamily,
    phi: &MultilinearFamily,
    rho: &NcPartition,
    word: &[usize],
) -> Result<Rational> {
    if !nc::is_ll_one(rho) {
        return Err(Error::NotLLOne);
    }
    if word.len() != rho.n() {
        return Err(Error::ShapeMismatch(format!(
            "word of length {} for a partition of {}",
            word.len(),
            rho.n()
        )));
    }
    let o = rho.block_of(1);
    let w_o = rho.block(o);
    if chi.degree() < w_o.len() {
        return Err(Error::DegreeTooLow { needed: w_o.len(), have: chi.degree() });
    }
    let mut value = boolean_cumulant_at(chi, &subword(word, w_o));
    if value.is_zero() {
        return Ok(value);
    }
    for (idx, b) in rho.blocks().iter().enumerate() {
        if idx != o {
            value *= phi.get(&subword(word, b))?;
        }
    }
    Ok(value)
}

/// Checks `γ^(m)_π = η_ρ ∘ Γ^m_{n+1} ∘ Δ^(m)_n` with `π = F_n^(m)(ρ)` on every
/// word of length `n`.
pub fn verify_lemma_67(
    delta: &DeltaTensor,
    chi: &MultilinearFamily,
    phi: &MultilinearFamily,
    n: usize,
    m: usize,
    rho: &NcPartition,
) -> Result<Verification> {
    require_tracial(phi)?;
    if rho.n() != n + 1 {
        return Err(Error::SizeMismatch(rho.n(), n + 1));
    }
    let pi = nc::f_nm(rho, m)?;
    let mut checked = 0;
    for w in words(phi.k(), n) {
        let lhs = eval_gamma(delta, chi, phi, &pi, m, &w)?;
        let mut rhs = Rational::zero();
        for (j, l, d) in delta.nonzero(w[m - 1]) {
            rhs += d * eval_eta(chi, phi, rho, &twisted_word(&w, m, j, l))?;
        }
        if lhs != rhs {
            return Ok(Verification::fail(&w, &lhs, &rhs, format!("rho = {rho}, m = {m}, pi = {pi}")));
        }
        checked += 1;
    }
    Ok(Verification::pass(checked))
}

/// With `φ′ := Δ*(β_χ)`, checks that the infinitesimal cumulants of `(φ, φ′)`
/// equal `Δ*` of the c-free cumulants of `(φ, χ)`. Inputs have degree
/// `N + 1`; the comparison runs to degree `N`.
pub fn verify_theorem_17(
    delta: &DeltaTensor,
    phi: &MultilinearFamily,
    chi: &MultilinearFamily,
) -> Result<Verification> {
    phi.check_same_shape(chi)?;
    check_dims(delta, phi)?;
    require_tracial(phi)?;
    let degree = output_degree(phi)?;
    let phi_prime = psi_delta(delta, chi)?;
    let lhs = infinitesimal_cumulants(&phi.truncate(degree)?, &phi_prime)?;
    let rhs = delta_star(delta, &cfree_cumulants(phi, chi)?)?;
    Ok(Verification::compare(&lhs, &rhs, "infinitesimal cumulants vs transformed c-free cumulants"))
}

/// With `μ′ := Ψ_k(ν)`, checks `κ′(i_1..i_n) = Σ_m κ^(c)_{n+1}(i_m..i_n, i_1..i_m)`
/// on every word of length `n <= N` (inputs of degree `N + 1`).
pub fn verify_theorem_14(mu: &MultilinearFamily, nu: &MultilinearFamily) -> Result<Verification> {
    mu.check_same_shape(nu)?;
    require_tracial(mu)?;
    let degree = output_degree(mu)?;
    let mu_prime = psi_k(nu)?;
    let lhs = infinitesimal_cumulants(&mu.truncate(degree)?, &mu_prime)?;
    let kc = cfree_cumulants(mu, nu)?;
    let rhs = MultilinearFamily::from_fn(mu.k(), degree, Kind::InfinitesimalCumulant, |w| {
        (1..=w.len()).map(|m| kc.at(&wrap_word(w, m)).clone()).sum()
    });
    Ok(Verification::compare(&lhs, &rhs, "infinitesimal cumulants vs cyclic c-free sum"))
}

/// One-variable reading of `Ψ_1`: `μ′(X^n) = n · β_{n+1;ν}` for `n <= N`.
pub fn verify_single_variable_psi(nu: &MultilinearFamily) -> Result<Verification> {
    if nu.k() != 1 {
        return Err(Error::ShapeMismatch(format!("expected k = 1, got {}", nu.k())));
    }
    let mu_prime = psi_k(nu)?;
    let beta = boolean_cumulants(nu)?;
    let expect = MultilinearFamily::from_fn(1, mu_prime.degree(), Kind::Infinitesimal, |w| {
        int(w.len() as i64) * beta.at(&vec![1; w.len() + 1])
    });
    Ok(Verification::compare(&mu_prime, &expect, "single-variable psi vs n * beta_(n+1)"))
}

/// Runs [`verify_lemma_67`] for every `ρ << 1_(n+1)` and every `m`.
pub fn verify_lemma_67_exhaustive(
    delta: &DeltaTensor,
    chi: &MultilinearFamily,
    phi: &MultilinearFamily,
    n: usize,
) -> Result<Verification> {
    let mut total = Verification::pass(0);
    for rho in nc::enumerate_ll_below(&NcPartition::one(n + 1))? {
        for m in 1..=n {
            let v = verify_lemma_67(delta, chi, phi, n, m, &rho)?;
            total = total.and(|| v);
            if !total.ok {
                return Ok(total);
            }
        }
    }
    Ok(total)
}
