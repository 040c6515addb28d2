//! Free products and additive convolutions, built in cumulant space and
//! converted back to moments: `⋆`, `⋆_c`, `⋆_B` concatenate cumulant tables
//! block-diagonally (mixed words get 0), while `⊞`, `⊞_c`, `⊞_B` add them.

use num_traits::Zero;

use crate::cumulants::{
    cfree_cumulants, free_cumulants, infinitesimal_cumulants, infinitesimal_moments,
    moments_from_cfree, moments_from_free,
};
use crate::delta_star::psi_k;
use crate::error::{Error, Result};
use crate::functionals::{Kind, MultilinearFamily};
use crate::verification::Verification;

fn same_degree(a: &MultilinearFamily, b: &MultilinearFamily) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(())
}

/// Table over `k + ℓ` letters equal to `f1` on words in `1..=k`, to `f2`
/// (relabelled) on words in `k+1..=k+ℓ`, and 0 on mixed words.
pub fn block_diagonal(f1: &MultilinearFamily, f2: &MultilinearFamily, kind: Kind) -> Result<MultilinearFamily> {
    same_degree(f1, f2)?;
    let k = f1.k();
    Ok(MultilinearFamily::from_fn(k + f2.k(), f1.degree(), kind, |w| {
        if w.iter().all(|&l| l <= k) {
            f1.at(w).clone()
        } else if w.iter().all(|&l| l > k) {
            let shifted: Vec<usize> = w.iter().map(|l| l - k).collect();
            f2.at(&shifted).clone()
        } else {
            Zero::zero()
        }
    }))
}

/// `μ1 ⋆ μ2` over `k + ℓ` letters.
pub fn free_product(mu1: &MultilinearFamily, mu2: &MultilinearFamily) -> Result<MultilinearFamily> {
    same_degree(mu1, mu2)?;
    let kappa = block_diagonal(&free_cumulants(mu1)?, &free_cumulants(mu2)?, Kind::FreeCumulant)?;
    moments_from_free(&kappa)
}

fn pair_shape(a: &MultilinearFamily, b: &MultilinearFamily) -> Result<()> {
    a.check_same_shape(b)
}

/// `(μ1, ν1) ⋆_c (μ2, ν2)`.
pub fn cfree_product(
    mu1: &MultilinearFamily,
    nu1: &MultilinearFamily,
    mu2: &MultilinearFamily,
    nu2: &MultilinearFamily,
) -> Result<(MultilinearFamily, MultilinearFamily)> {
    pair_shape(mu1, nu1)?;
    pair_shape(mu2, nu2)?;
    same_degree(mu1, mu2)?;
    let mu = free_product(mu1, mu2)?;
    let kc = block_diagonal(
        &cfree_cumulants(mu1, nu1)?,
        &cfree_cumulants(mu2, nu2)?,
        Kind::CfreeCumulant,
    )?;
    let nu = moments_from_cfree(&mu, &kc)?;
    Ok((mu, nu))
}

/// `(μ1, μ1′) ⋆_B (μ2, μ2′)`.
pub fn infinitesimal_product(
    mu1: &MultilinearFamily,
    dmu1: &MultilinearFamily,
    mu2: &MultilinearFamily,
    dmu2: &MultilinearFamily,
) -> Result<(MultilinearFamily, MultilinearFamily)> {
    pair_shape(mu1, dmu1)?;
    pair_shape(mu2, dmu2)?;
    same_degree(mu1, mu2)?;
    let mu = free_product(mu1, mu2)?;
    let kp = block_diagonal(
        &infinitesimal_cumulants(mu1, dmu1)?,
        &infinitesimal_cumulants(mu2, dmu2)?,
        Kind::InfinitesimalCumulant,
    )?;
    let dmu = infinitesimal_moments(&free_cumulants(&mu)?, &kp)?;
    Ok((mu, dmu))
}

/// `μ1 ⊞ μ2`: free cumulants add.
pub fn boxplus(mu1: &MultilinearFamily, mu2: &MultilinearFamily) -> Result<MultilinearFamily> {
    mu1.check_same_shape(mu2)?;
    moments_from_free(&free_cumulants(mu1)?.add(&free_cumulants(mu2)?)?)
}

/// `(μ1, ν1) ⊞_c (μ2, ν2)`: free cumulants of the `μ`s and c-free cumulants
/// of the pairs add.
pub fn boxplus_c(
    mu1: &MultilinearFamily,
    nu1: &MultilinearFamily,
    mu2: &MultilinearFamily,
    nu2: &MultilinearFamily,
) -> Result<(MultilinearFamily, MultilinearFamily)> {
    pair_shape(mu1, nu1)?;
    pair_shape(mu2, nu2)?;
    mu1.check_same_shape(mu2)?;
    let mu = boxplus(mu1, mu2)?;
    let kc = cfree_cumulants(mu1, nu1)?.add(&cfree_cumulants(mu2, nu2)?)?;
    let nu = moments_from_cfree(&mu, &kc)?;
    Ok((mu, nu))
}

/// `(μ1, μ1′) ⊞_B (μ2, μ2′)`: infinitesimal cumulants add.
pub fn boxplus_b(
    mu1: &MultilinearFamily,
    dmu1: &MultilinearFamily,
    mu2: &MultilinearFamily,
    dmu2: &MultilinearFamily,
) -> Result<(MultilinearFamily, MultilinearFamily)> {
    pair_shape(mu1, dmu1)?;
    pair_shape(mu2, dmu2)?;
    mu1.check_same_shape(mu2)?;
    let mu = boxplus(mu1, mu2)?;
    let kp = infinitesimal_cumulants(mu1, dmu1)?.add(&infinitesimal_cumulants(mu2, dmu2)?)?;
    let dmu = infinitesimal_moments(&free_cumulants(&mu)?, &kp)?;
    Ok((mu, dmu))
}

fn require_tracial(f: &MultilinearFamily) -> Result<()> {
    if f.is_tracial() {
        Ok(())
    } else {
        Err(Error::NotTracial)
    }
}

fn lowered(f: &MultilinearFamily) -> Result<MultilinearFamily> {
    if f.degree() < 2 {
        return Err(Error::DegreeTooLow { needed: 2, have: f.degree() });
    }
    f.truncate(f.degree() - 1)
}

/// Checks `(μ1, Ψ(ν1)) ⋆_B (μ2, Ψ(ν2)) = (μ̃, Ψ(ν̃))` with
/// `(μ̃, ν̃) = (μ1, ν1) ⋆_c (μ2, ν2)`. Inputs have degree `N + 1`.
pub fn verify_theorem_13(
    mu1: &MultilinearFamily,
    nu1: &MultilinearFamily,
    mu2: &MultilinearFamily,
    nu2: &MultilinearFamily,
) -> Result<Verification> {
    require_tracial(mu1)?;
    require_tracial(mu2)?;
    let (mu, nu) = cfree_product(mu1, nu1, mu2, nu2)?;
    let (mu_b, dmu_b) = infinitesimal_product(&lowered(mu1)?, &psi_k(nu1)?, &lowered(mu2)?, &psi_k(nu2)?)?;
    Ok(Verification::compare(&mu_b, &lowered(&mu)?, "distribution part of the infinitesimal product")
        .and(|| Verification::compare(&dmu_b, &psi_k(&nu).expect("degree checked"), "infinitesimal part vs psi of the c-free product")))
}

/// Checks `(μ1, Ψ(ν1)) ⊞_B (μ2, Ψ(ν2)) = (μ, Ψ(ν))` with
/// `(μ, ν) = (μ1, ν1) ⊞_c (μ2, ν2)`. Inputs have degree `N + 1`.
pub fn verify_theorem_12(
    mu1: &MultilinearFamily,
    nu1: &MultilinearFamily,
    mu2: &MultilinearFamily,
    nu2: &MultilinearFamily,
) -> Result<Verification> {
    require_tracial(mu1)?;
    require_tracial(mu2)?;
    let (mu, nu) = boxplus_c(mu1, nu1, mu2, nu2)?;
    let (mu_b, dmu_b) = boxplus_b(&lowered(mu1)?, &psi_k(nu1)?, &lowered(mu2)?, &psi_k(nu2)?)?;
    Ok(Verification::compare(&mu_b, &lowered(&mu)?, "distribution part of the infinitesimal convolution")
        .and(|| Verification::compare(&dmu_b, &psi_k(&nu).expect("degree checked"), "infinitesimal part vs psi of the c-free convolution")))
}

/// Restricting every product to either input's letters gives that input back:
/// checked for `⋆`, `⋆_c` (both components) and `⋆_B` (both components).
pub fn verify_product_restrictions(
    mu1: &MultilinearFamily,
    nu1: &MultilinearFamily,
    dmu1: &MultilinearFamily,
    mu2: &MultilinearFamily,
    nu2: &MultilinearFamily,
    dmu2: &MultilinearFamily,
) -> Result<Verification> {
    let (k, l) = (mu1.k(), mu2.k());
    let (mu, nu) = cfree_product(mu1, nu1, mu2, nu2)?;
    let (mu_b, dmu) = infinitesimal_product(mu1, dmu1, mu2, dmu2)?;
    let pieces: [(&MultilinearFamily, &MultilinearFamily, &MultilinearFamily, &str); 3] = [
        (&mu, mu1, mu2, "free product"),
        (&nu, nu1, nu2, "c-free product, second component"),
        (&dmu, dmu1, dmu2, "infinitesimal product, second component"),
    ];
    let mut v = Verification::compare(&mu_b, &mu, "free part of the infinitesimal product");
    for (whole, left, right, label) in pieces {
        let lo = whole.restrict_to_letters(1, k)?;
        let hi = whole.restrict_to_letters(k + 1, l)?;
        v = v
            .and(|| Verification::compare(&lo, left, &format!("{label} on the first letters")))
            .and(|| Verification::compare(&hi, right, &format!("{label} on the last letters")));
        // The upper block must also match the relabelled input on the full alphabet.
        let relabelled = right.relabel(k);
        v = v.and(|| {
            let mut checked = 0;
            for (w, value) in relabelled.entries() {
                if w.iter().all(|&x| x > k) {
                    if whole.at(&w) != value {
                        return Verification::fail(&w, whole.at(&w), value, format!("{label} vs relabelled input"));
                    }
                    checked += 1;
                }
            }
            Verification::pass(checked)
        });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functionals::random_family;
    use crate::rational::int;

    fn semicircle(k_len: usize) -> MultilinearFamily {
        let kappa = MultilinearFamily::from_fn(1, k_len, Kind::FreeCumulant, |w| {
            int(if w.len() == 2 { 1 } else { 0 })
        });
        moments_from_free(&kappa).unwrap()
    }

    #[test]
    fn free_product_examples() {
        let s = semicircle(4);
        let p = free_product(&s, &s).unwrap();
        assert!(p.at(&[1, 2]).is_zero());
        assert_eq!(p.restrict_to_letters(1, 1).unwrap(), s);
        let trivial = MultilinearFamily::zeros(1, 4, Kind::FreeCumulant);
        let flat = moments_from_free(&trivial).unwrap();
        let mu1 = random_family(2, 4, 1);
        let q = free_product(&mu1, &flat).unwrap();
        let kq = free_cumulants(&q).unwrap();
        assert_eq!(kq.restrict_to_letters(1, 2).unwrap(), free_cumulants(&mu1).unwrap());
        assert!(kq.entries().filter(|(w, _)| w.contains(&3)).all(|(_, v)| v.is_zero()));
        assert!(matches!(free_product(&mu1, &semicircle(3)), Err(Error::DegreeMismatch(4, 3))));
    }

    #[test]
    fn boxplus_examples() {
        let s = semicircle(4);
        let two = boxplus(&s, &s).unwrap();
        assert_eq!(*two.at(&[1, 1]), int(2));
        assert_eq!(*two.at(&[1, 1, 1, 1]), int(8));
        let a = random_family(2, 4, 2);
        let b = random_family(2, 4, 3);
        assert_eq!(boxplus(&a, &b).unwrap(), boxplus(&b, &a).unwrap());
        let zero = moments_from_free(&MultilinearFamily::zeros(2, 4, Kind::FreeCumulant)).unwrap();
        assert_eq!(boxplus(&a, &zero).unwrap(), a);
    }

    #[test]
    fn cfree_product_collapses_when_equal() {
        let mu1 = random_family(1, 4, 4);
        let mu2 = random_family(1, 4, 5);
        let (mu, nu) = cfree_product(&mu1, &mu1, &mu2, &mu2).unwrap();
        assert_eq!(mu, nu);
        let (m, n) = boxplus_c(&mu1, &mu1, &mu2, &mu2).unwrap();
        assert_eq!(m, n);
    }

    #[test]
    fn infinitesimal_zero_inputs() {
        let mu1 = random_family(1, 4, 6);
        let mu2 = random_family(2, 4, 7);
        let z1 = MultilinearFamily::zeros(1, 4, Kind::Infinitesimal);
        let z2 = MultilinearFamily::zeros(2, 4, Kind::Infinitesimal);
        let (_, d) = infinitesimal_product(&mu1, &z1, &mu2, &z2).unwrap();
        assert!(d.entries().all(|(_, v)| v.is_zero()));
        let (_, d) = boxplus_b(&mu2, &z2, &mu2, &z2).unwrap();
        assert!(d.entries().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn restrictions_hold() {
        let v = verify_product_restrictions(
            &random_family(2, 3, 1),
            &random_family(2, 3, 2),
            &random_family(2, 3, 3),
            &random_family(1, 3, 4),
            &random_family(1, 3, 5),
            &random_family(1, 3, 6),
        )
        .unwrap();
        assert!(v.ok, "{v:?}");
    }
}
