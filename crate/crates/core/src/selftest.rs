//! The acceptance suite as library functions: each criterion runs its
//! exhaustive or seeded checks and returns a one-line report. Reports never
//! contain timings, so output is reproducible byte for byte.

use serde::Serialize;

use crate::cumulants::{
    boolean_cumulants, cc_cumulants, cfree_cumulants, cfree_explicit, cfree_from_boolean_explicit,
    chi_minus_phi_type_b_opp, fixed_outer_block_sides, free_cumulants, free_from_boolean_explicit,
    infinitesimal_cumulants, infinitesimal_moments, infinitesimal_moments_type_b, moments_from_boolean,
    moments_from_cfree, moments_from_free,
};
use crate::delta_star::{verify_lemma_67_exhaustive, verify_single_variable_psi, verify_theorem_14, verify_theorem_17};
use crate::error::Result;
use crate::functionals::{format_word, random_family, random_tracial, words, DeltaTensor, Kind, MultilinearFamily};
use crate::nc::{
    self, attach, binomial, catalan, cut, cuttable_elements, enumerate_ll_below, enumerate_nc, f_nm,
    f_nm_inverse, is_ll_one, kreweras, leq_unchecked, ll_unchecked, moebius_oracle, moebius_to_one,
    sqsubseteq_unchecked, NcPartition,
};
use crate::products::{verify_product_restrictions, verify_theorem_12, verify_theorem_13};
use crate::typeb::{enumerate_signed, from_pair, Flavor};
use crate::verification::Verification;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub ok: bool,
    pub checks: usize,
    pub detail: String,
}

impl CriterionReport {
    /// `PASS  3  name (N checks)` or `FAIL ...: detail`.
    pub fn line(&self) -> String {
        let status = if self.ok { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {:>2}  {} ({} checks)", self.id, self.name, self.checks);
        if !self.detail.is_empty() {
            s.push_str(": ");
            s.push_str(&self.detail);
        }
        s
    }
}

/// Accumulates checks for one criterion, remembering the first failure.
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn verification(&mut self, v: Verification, context: impl FnOnce() -> String) {
        let ok = v.ok;
        self.checks += v.checked.max(1) - 1;
        self.check(ok, || {
            let c = v.counterexample.expect("failed verification has a counterexample");
            format!(
                "{}: word ({}) lhs {} rhs {} [{}]",
                context(),
                format_word(&c.word),
                c.lhs,
                c.rhs,
                c.detail
            )
        });
    }

    fn families(&mut self, lhs: &MultilinearFamily, rhs: &MultilinearFamily, context: impl FnOnce() -> String) {
        self.verification(Verification::compare(lhs, rhs, "families differ"), context);
    }

    fn finish(self, id: u32, name: &str) -> CriterionReport {
        CriterionReport {
            id,
            name: name.to_string(),
            ok: self.failure.is_none(),
            checks: self.checks,
            detail: self.failure.unwrap_or_default(),
        }
    }
}

/// Seed for the `index`-th random object of a criterion, derived from the
/// user seed.
pub fn sub_seed(seed: u64, criterion: u64, index: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(criterion.wrapping_mul(1_000_003))
        .wrapping_add(index.wrapping_mul(7919))
}

fn wrap(id: u32, name: &str, body: impl FnOnce(&mut Tally) -> Result<()>) -> CriterionReport {
    let mut t = Tally::new();
    if let Err(e) = body(&mut t) {
        t.check(false, || format!("error: {e}"));
    }
    t.finish(id, name)
}

pub fn criterion_1() -> CriterionReport {
    wrap(1, "NC(n) counted by Catalan numbers, n = 1..10", |t| {
        for n in 1..=10 {
            let got = enumerate_nc(n)?.len() as u64;
            t.check(got == catalan(n), || format!("n={n}: {got} != {}", catalan(n)));
        }
        Ok(())
    })
}

pub fn criterion_2() -> CriterionReport {
    wrap(2, "Kreweras complement is an order-reversing bijection, n <= 7", |t| {
        let fig: NcPartition = "{1,5,6}{2,4}{3}{7}{8,10}{9}".parse()?;
        let expect: NcPartition = "{1,4}{2,3}{5}{6,7,10}{8,9}".parse()?;
        let got = kreweras(&fig);
        t.check(got == expect, || format!("worked example gave {got}"));
        for n in 1..=7 {
            let all = enumerate_nc(n)?;
            let images: Vec<NcPartition> = all.iter().map(kreweras).collect();
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.dedup();
            t.check(sorted == all, || format!("n={n}: not a bijection"));
            for (a, ka) in all.iter().zip(&images) {
                for (b, kb) in all.iter().zip(&images) {
                    let ok = leq_unchecked(a, b) == leq_unchecked(kb, ka);
                    t.check(ok, || format!("n={n}: order not reversed at {a}, {b}"));
                }
            }
        }
        Ok(())
    })
}

pub fn criterion_3() -> CriterionReport {
    wrap(3, "Moebius closed form equals zeta-inversion oracle, n <= 7", |t| {
        for n in 1..=7 {
            let one = NcPartition::one(n);
            for pi in enumerate_nc(n)? {
                let closed = moebius_to_one(&pi);
                let oracle = moebius_oracle(&pi, &one)?;
                t.check(closed == oracle, || format!("{pi}: {closed} vs {oracle}"));
            }
        }
        Ok(())
    })
}

pub fn criterion_4() -> CriterionReport {
    wrap(4, "Lower-ideal cardinality and upper-ideal alternating sum, n <= 7", |t| {
        for n in 1..=7 {
            let all = enumerate_nc(n)?;
            for rho in &all {
                let below: Vec<NcPartition> = all.iter().filter(|p| ll_unchecked(p, rho)).cloned().collect();
                let formula: u64 = rho.blocks().iter().map(|w| catalan(w.len() - 1)).product();
                t.check(below.len() as u64 == formula, || {
                    format!("{rho}: {} below vs formula {formula}", below.len())
                });
                t.check(enumerate_ll_below(rho)? == below, || format!("{rho}: constructed ideal differs"));
            }
            for pi in &all {
                let sum: i64 = all
                    .iter()
                    .filter(|rho| ll_unchecked(pi, rho))
                    .map(|rho| if (pi.num_blocks() + rho.num_blocks()) % 2 == 0 { 1 } else { -1 })
                    .sum();
                let expect = i64::from(pi.is_interval());
                t.check(sum == expect, || format!("{pi}: alternating sum {sum}"));
            }
        }
        Ok(())
    })
}

fn kreweras_ideal_checks(t: &mut Tally, n: usize) -> Result<()> {
    let all = enumerate_nc(n)?;
    let domain: Vec<&NcPartition> = all.iter().filter(|p| is_ll_one(p)).collect();
    let mut image: Vec<NcPartition> = domain.iter().map(|p| kreweras(p)).collect();
    image.sort_unstable();
    let target: Vec<NcPartition> = all
        .iter()
        .filter(|s| s.block(s.block_of(n)) == [n])
        .cloned()
        .collect();
    t.check(image == target, || format!("n={n}: image is not the set with singleton {{{n}}}"));
    for a in &domain {
        for b in &domain {
            let ok = sqsubseteq_unchecked(a, b) == ll_unchecked(&kreweras(b), &kreweras(a));
            t.check(ok, || format!("n={n}: order mismatch at {a}, {b}"));
        }
    }
    for pi in &domain {
        for i in cuttable_elements(pi) {
            let lhs = kreweras(&cut(pi, i)?);
            let rhs = attach(&kreweras(pi), i)?;
            t.check(lhs == rhs, || format!("{pi}, i={i}: {lhs} vs {rhs}"));
        }
    }
    for rho in enumerate_ll_below(&NcPartition::one(n + 1))? {
        for m in 1..=n {
            let back = f_nm_inverse(&f_nm(&rho, m)?, m)?;
            t.check(back == rho, || format!("F^({m}) round trip failed at {rho}"));
        }
    }
    Ok(())
}

/// The Kreweras anti-isomorphism and cut/attach checks for a single `n`.
pub fn kreweras_ideal_report(n: usize) -> CriterionReport {
    wrap(5, &format!("Kreweras anti-isomorphism on the << 1_n ideal and cut/attach, n = {n}"), |t| {
        kreweras_ideal_checks(t, n)
    })
}

pub fn criterion_5() -> CriterionReport {
    wrap(5, "Kreweras anti-isomorphism on the << 1_n ideal and cut/attach, n <= 7", |t| {
        for n in 1..=7 {
            kreweras_ideal_checks(t, n)?;
        }
        Ok(())
    })
}

pub fn criterion_6() -> CriterionReport {
    wrap(6, "Type B and B-opp counts equal C(2n,n), pair bijection round-trips", |t| {
        for n in 1..=7 {
            let c = binomial(2 * n, n);
            for flavor in [Flavor::TypeB, Flavor::TypeBOpp] {
                let got = enumerate_signed(n, flavor)?.len() as u64;
                t.check(got == c, || format!("n={n} {flavor}: {got} != {c}"));
            }
            let weighted: u64 = enumerate_nc(n)?
                .iter()
                .map(|p| 1u64 << nc::block_roles(p).iter().filter(|r| **r == nc::BlockRole::Outer).count())
                .sum();
            t.check(weighted == c, || format!("n={n}: outer-subset count {weighted}"));
        }
        for n in 1..=6 {
            for sigma in enumerate_signed(n, Flavor::TypeBOpp)? {
                let (pi, s) = sigma.to_pair();
                let back = from_pair(&pi, &s)?;
                t.check(back == sigma, || format!("{sigma} -> {back}"));
                t.check(nc::is_noncrossing(n, pi.blocks())?, || format!("Abs({sigma}) crosses"));
            }
        }
        Ok(())
    })
}

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20240601;

const ROUND_TRIP_SEEDS: u64 = 20;

pub fn criterion_7(seed: u64) -> CriterionReport {
    wrap(7, "moment/cumulant round trips: free, Boolean, infinitesimal, c-free", |t| {
        for k in 1..=2usize {
            for s in 0..ROUND_TRIP_SEEDS {
                let base = sub_seed(seed, 7, s * 10 + k as u64 * 1000);
                let phi = random_family(k, 5, base);
                let other = random_family(k, 5, base + 1);
                let ctx = || format!("k={k}, seed index {s}");

                t.families(&moments_from_free(&free_cumulants(&phi)?)?, &phi, || format!("free moments, {}", ctx()));
                let kap = other.clone().with_kind(Kind::FreeCumulant);
                t.families(&free_cumulants(&moments_from_free(&kap)?)?, &kap, || format!("free cumulants, {}", ctx()));

                t.families(&moments_from_boolean(&boolean_cumulants(&phi)?)?, &phi, || format!("Boolean moments, {}", ctx()));
                t.families(&boolean_cumulants(&moments_from_boolean(&other)?)?, &other, || format!("Boolean cumulants, {}", ctx()));

                let kphi = free_cumulants(&phi)?;
                let dphi = other.clone().with_kind(Kind::Infinitesimal);
                let kp = infinitesimal_cumulants(&phi, &dphi)?;
                t.families(&infinitesimal_moments(&kphi, &kp)?, &dphi, || format!("infinitesimal moments, {}", ctx()));
                let kp2 = random_family(k, 5, base + 2).with_kind(Kind::InfinitesimalCumulant);
                t.families(&infinitesimal_cumulants(&phi, &infinitesimal_moments(&kphi, &kp2)?)?, &kp2, || {
                    format!("infinitesimal cumulants, {}", ctx())
                });

                let kc = cfree_cumulants(&phi, &other)?;
                t.families(&moments_from_cfree(&phi, &kc)?, &other, || format!("c-free moments, {}", ctx()));
                let kc2 = random_family(k, 5, base + 3).with_kind(Kind::CfreeCumulant);
                t.families(&cfree_cumulants(&phi, &moments_from_cfree(&phi, &kc2)?)?, &kc2, || {
                    format!("c-free cumulants, {}", ctx())
                });
            }
        }
        Ok(())
    })
}

pub fn criterion_8(seed: u64) -> CriterionReport {
    wrap(8, "explicit c-free formula and the Boolean-side identities, k=2, N=5", |t| {
        for s in 0..ROUND_TRIP_SEEDS {
            let phi = random_family(2, 5, sub_seed(seed, 8, 2 * s));
            let chi = random_family(2, 5, sub_seed(seed, 8, 2 * s + 1));
            let kc = cfree_cumulants(&phi, &chi)?;
            t.families(&cfree_explicit(&phi, &chi)?, &kc, || format!("explicit c-free formula, pair {s}"));
            t.families(&free_from_boolean_explicit(&phi)?, &free_cumulants(&phi)?, || {
                format!("free via Boolean, pair {s}")
            });
            t.families(&cfree_from_boolean_explicit(&phi, &chi)?, &kc, || format!("c-free via Boolean, pair {s}"));
            let beta = boolean_cumulants(&phi)?;
            for n in 2..=5usize {
                // Every V_o containing 1 and n: choose a subset of the middle.
                for mask in 0u32..(1 << (n - 2)) {
                    let mut v_o = vec![1];
                    v_o.extend((0..n - 2).filter(|b| mask >> b & 1 == 1).map(|b| b + 2));
                    v_o.push(n);
                    for w in words(2, n) {
                        let (lhs, rhs) = fixed_outer_block_sides(&phi, &beta, &w, &v_o)?;
                        t.check(lhs == rhs, || {
                            format!("fixed block {v_o:?}, word ({}), pair {s}: {lhs} vs {rhs}", format_word(&w))
                        });
                    }
                }
            }
        }
        Ok(())
    })
}

pub fn criterion_9(seed: u64) -> CriterionReport {
    wrap(9, "alternative c-free cumulants and the signed-lattice formulas, k=2, N=5", |t| {
        for s in 0..ROUND_TRIP_SEEDS {
            let phi = random_family(2, 5, sub_seed(seed, 9, 3 * s));
            let chi = random_family(2, 5, sub_seed(seed, 9, 3 * s + 1));
            let dphi = random_family(2, 5, sub_seed(seed, 9, 3 * s + 2)).with_kind(Kind::Infinitesimal);
            let kphi = free_cumulants(&phi)?;
            let cc = cc_cumulants(&phi, &chi)?;
            let diff = cfree_cumulants(&phi, &chi)?.sub(&kphi)?;
            t.families(&cc, &diff, || format!("cc = c-free minus free, pair {s}"));
            let kp = infinitesimal_cumulants(&phi, &dphi)?;
            t.families(&infinitesimal_moments_type_b(&kphi, &kp)?, &dphi, || format!("type B formula for phi', pair {s}"));
            t.families(&chi_minus_phi_type_b_opp(&kphi, &cc)?, &chi.sub(&phi)?, || {
                format!("B-opp formula for chi - phi, pair {s}")
            });
        }
        Ok(())
    })
}

pub fn criterion_10(seed: u64) -> CriterionReport {
    wrap(10, "infinitesimal cumulants of (phi, Delta*(beta_chi)) equal Delta* of c-free cumulants, k=2, N=4", |t| {
        for s in 0..50 {
            let phi = random_tracial(2, 5, sub_seed(seed, 10, 3 * s));
            let chi = random_family(2, 5, sub_seed(seed, 10, 3 * s + 1));
            let delta = DeltaTensor::random(2, sub_seed(seed, 10, 3 * s + 2));
            t.verification(verify_theorem_17(&delta, &phi, &chi)?, || format!("triple {s}"));
        }
        Ok(())
    })
}

pub fn criterion_11(seed: u64) -> CriterionReport {
    wrap(11, "infinitesimal cumulants of (mu, Psi(nu)) are cyclic c-free sums, k=2 N=4 and k=1 N=6", |t| {
        for s in 0..50 {
            let mu = random_tracial(2, 5, sub_seed(seed, 11, 2 * s));
            let nu = random_family(2, 5, sub_seed(seed, 11, 2 * s + 1));
            t.verification(verify_theorem_14(&mu, &nu)?, || format!("k=2 pair {s}"));
        }
        for s in 0..50 {
            let mu = random_family(1, 7, sub_seed(seed, 11, 1000 + 2 * s));
            let nu = random_family(1, 7, sub_seed(seed, 11, 1001 + 2 * s));
            t.verification(verify_theorem_14(&mu, &nu)?, || format!("k=1 pair {s}"));
            t.verification(verify_single_variable_psi(&nu)?, || format!("k=1 n*beta check {s}"));
        }
        Ok(())
    })
}

pub fn criterion_12(seed: u64) -> CriterionReport {
    wrap(12, "twisted Boolean functional identity, all rho << 1_(n+1) and all m, n <= 4, k=2", |t| {
        for n in 1..=4usize {
            let phi = random_tracial(2, n + 1, sub_seed(seed, 12, 3 * n as u64));
            let chi = random_family(2, n + 1, sub_seed(seed, 12, 3 * n as u64 + 1));
            let delta = DeltaTensor::random(2, sub_seed(seed, 12, 3 * n as u64 + 2));
            t.verification(verify_lemma_67_exhaustive(&delta, &chi, &phi, n)?, || format!("n={n}"));
        }
        Ok(())
    })
}

pub fn criterion_13(seed: u64) -> CriterionReport {
    wrap(13, "convolution and product identities with Psi, plus product restrictions", |t| {
        for k in 1..=2usize {
            for s in 0..25u64 {
                let base = sub_seed(seed, 13, k as u64 * 100 + 4 * s);
                let mu1 = random_tracial(k, 5, base);
                let nu1 = random_family(k, 5, base + 1);
                let mu2 = random_tracial(k, 5, base + 2);
                let nu2 = random_family(k, 5, base + 3);
                t.verification(verify_theorem_12(&mu1, &nu1, &mu2, &nu2)?, || format!("convolution, k={k}, instance {s}"));
            }
        }
        for (k, l) in [(1usize, 1usize), (2, 1)] {
            for s in 0..25u64 {
                let base = sub_seed(seed, 13, 10_000 + k as u64 * 1000 + 6 * s);
                let mu1 = random_tracial(k, 4, base);
                let nu1 = random_family(k, 4, base + 1);
                let mu2 = random_tracial(l, 4, base + 2);
                let nu2 = random_family(l, 4, base + 3);
                t.verification(verify_theorem_13(&mu1, &nu1, &mu2, &nu2)?, || {
                    format!("product, (k,l)=({k},{l}), instance {s}")
                });
                let d1 = random_family(k, 4, base + 4).with_kind(Kind::Infinitesimal);
                let d2 = random_family(l, 4, base + 5).with_kind(Kind::Infinitesimal);
                t.verification(verify_product_restrictions(&mu1, &nu1, &d1, &mu2, &nu2, &d2)?, || {
                    format!("restrictions, (k,l)=({k},{l}), instance {s}")
                });
            }
        }
        Ok(())
    })
}

/// Regenerates every seeded input twice and compares serializations.
pub fn criterion_14(seed: u64) -> CriterionReport {
    wrap(14, "seeded inputs are reproducible", |t| {
        let render = || {
            let mut out = String::new();
            for criterion in 7..=13u64 {
                for index in 0..4 {
                    let s = sub_seed(seed, criterion, index);
                    out.push_str(&random_family(2, 3, s).to_json());
                    out.push_str(&random_tracial(2, 3, s).to_json());
                    out.push_str(&DeltaTensor::random(2, s).to_json());
                }
            }
            out
        };
        let a = render();
        let b = render();
        t.check(a == b, || "two generations differ".to_string());
        Ok(())
    })
}

/// Every criterion, in order.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(seed),
        criterion_8(seed),
        criterion_9(seed),
        criterion_10(seed),
        criterion_11(seed),
        criterion_12(seed),
        criterion_13(seed),
        criterion_14(seed),
    ]
}
