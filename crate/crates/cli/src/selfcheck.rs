//! `selfcheck`: random ideals run through every pair of methods that must
//! agree.

use monolin::{
    betti_closed_form, betti_from_quotients, deequify, equify, lin, oracle_table, retrieve_source,
    star_lin, Monomial, MonomialIdeal, RingContext,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_ideal(rng: &mut ChaCha8Rng, squarefree: bool) -> MonomialIdeal {
    let n = rng.gen_range(2..=5);
    let d = rng.gen_range(1..=if squarefree { n.min(3) } else { 3 });
    let m = rng.gen_range(1..=4);
    let vars: Vec<usize> = (0..n).collect();
    let gens = (0..m)
        .map(|_| {
            let mut e = vec![0; n];
            if squarefree {
                for &v in vars.choose_multiple(rng, d) {
                    e[v] = 1;
                }
            } else {
                for _ in 0..d {
                    e[rng.gen_range(0..n)] += 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(RingContext::standard(n), gens).expect("generators fit the ring")
}

fn check(i: &MonomialIdeal) -> Result<(), String> {
    let e = |x: monolin::Error| format!("{i}: {x}");
    for l in [lin(i).map_err(e)?, star_lin(i).map_err(e)?] {
        let og = l.canonical_order().map_err(e)?;
        if !og.has_linear_quotients() {
            return Err(format!("{i}: canonical order lacks linear quotients"));
        }
        if betti_from_quotients(&og).map_err(e)? != oracle_table(l.ideal()).map_err(e)? {
            return Err(format!("{i}: quotient formula and oracle disagree"));
        }
    }
    if i.is_squarefree()
        && betti_closed_form(i).map_err(e)?
            != oracle_table(star_lin(i).map_err(e)?.ideal()).map_err(e)?
    {
        return Err(format!("{i}: closed form and oracle disagree"));
    }
    if retrieve_source(&lin(i).map_err(e)?).map_err(e)? != *i {
        return Err(format!("{i}: retrieval is not the identity"));
    }
    if deequify(&equify(i).map_err(e)?).map_err(e)? != *i {
        return Err(format!("{i}: equification does not round trip"));
    }
    Ok(())
}

pub fn run(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for k in 0..cases {
        let i = random_ideal(&mut rng, k % 2 == 1);
        if let Err(msg) = check(&i) {
            failures.push(msg);
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "selfcheck seed {seed}: {cases} ideals, all checks passed\n"
        ))
    } else {
        Err(format!(
            "selfcheck seed {seed}: {} of {cases} ideals failed\n{}",
            failures.len(),
            failures.join("\n")
        ))
    }
}
