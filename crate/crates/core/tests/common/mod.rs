//! Random input generators and brute-force helpers shared by the
//! integration tests.
#![allow(dead_code)]

use monolin::{Monomial, MonomialIdeal, RingContext};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A degree-`d` monomial in `n` variables with every exponent at most
/// `max_exp`. Requires `d <= n * max_exp`.
pub fn random_monomial_of_degree(rng: &mut impl Rng, n: usize, d: u32, max_exp: u32) -> Monomial {
    let mut exps = vec![0; n];
    let mut left = d;
    while left > 0 {
        let i = rng.gen_range(0..n);
        if exps[i] < max_exp {
            exps[i] += 1;
            left -= 1;
        }
    }
    Monomial::new(exps)
}

/// An equigenerated ideal in `x1..xn` with at most `m` generators of
/// degree `d`.
pub fn random_equigenerated(
    rng: &mut impl Rng,
    n: usize,
    d: u32,
    m: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let gens = (0..m)
        .map(|_| random_monomial_of_degree(rng, n, d, max_exp))
        .collect();
    MonomialIdeal::new(RingContext::standard(n), gens).unwrap()
}

/// A random equigenerated ideal with `n <= max_n`, `1 <= d <= max_d`,
/// `m <= max_m` and exponents at most `max_exp`.
pub fn random_equigenerated_within(
    rng: &mut impl Rng,
    max_n: usize,
    max_d: u32,
    max_m: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_n);
    let d = rng.gen_range(1..=max_d.min(n as u32 * max_exp));
    let m = rng.gen_range(1..=max_m);
    random_equigenerated(rng, n, d, m, max_exp)
}

/// A squarefree ideal in `x1..xn` generated by at most `m` distinct
/// `d`-subsets.
pub fn random_squarefree(rng: &mut impl Rng, n: usize, d: usize, m: usize) -> MonomialIdeal {
    let all: Vec<usize> = (0..n).collect();
    let gens = (0..m)
        .map(|_| {
            let mut exps = vec![0; n];
            for &i in all.choose_multiple(rng, d) {
                exps[i] = 1;
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(RingContext::standard(n), gens).unwrap()
}

/// A proper nonzero ideal with generators of mixed degrees.
pub fn random_ideal(
    rng: &mut impl Rng,
    max_n: usize,
    max_m: usize,
    max_deg: u32,
    max_exp: u32,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let gens = (0..m)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg.min(n as u32 * max_exp));
            random_monomial_of_degree(rng, n, d, max_exp)
        })
        .collect();
    MonomialIdeal::new(RingContext::standard(n), gens).unwrap()
}

/// All monomials in `n` variables of degree at most `max_deg`.
pub fn monomials_up_to(n: usize, max_deg: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=max_deg - used).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// `u` lies in the ideal generated by `gens`, generators not minimalized.
pub fn in_span(gens: &[Monomial], u: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(u))
}
