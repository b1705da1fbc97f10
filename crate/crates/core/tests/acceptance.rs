//! End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
//! process exits nonzero if any check fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use monolin::quotients::OrderedGenerators;
use monolin::{
    betti_closed_form, betti_from_quotients, betti_splitting_check, cluster_profile, deequify,
    equify, find_linear_quotient_order, ideal, is_linear_resolution, is_polymatroidal,
    lattice_embedding_check, lin, oracle_table, pd_and_depth, power_complete, radical_star_lin,
    radical_star_lin_betti, retrieve_source, star_lin, syzygy_redundant, syzygy_redundant_eq,
    veronese_betti, BettiTable, Criterion, Error, ExponentBound, Hypergraph, LcmLattice, Monomial,
    MonomialIdeal, OracleConfig, OrderSearch, RingContext,
};
use rand::Rng;

type Outcome = Result<String, String>;

/// Ideal, (nodes, covers) of its lcm-lattice, the same for its
/// equification, and the equified node labels.
type Figure<'a> = (
    &'a MonomialIdeal,
    (usize, usize),
    (usize, usize),
    &'a [&'a str],
);

type Check = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: Error) -> String {
    e.to_string()
}

fn table(entries: &[(usize, u64, u64)]) -> BettiTable {
    BettiTable::from_entries(entries.iter().map(|&(i, j, v)| ((i, j), v)))
}

fn std_ideal(n: usize, text: &str) -> MonomialIdeal {
    ideal(&RingContext::standard(n), text).unwrap()
}

fn three_triangles() -> Outcome {
    let i = std_ideal(5, "x1*x2*x3, x1*x2*x4, x1*x2*x5");
    let l = star_lin(&i).map_err(err)?;
    ensure!(
        l.ideal().num_gens() == 19,
        "{} generators",
        l.ideal().num_gens()
    );
    let og = l.canonical_order().map_err(err)?;
    let expected = [
        "(0)",
        "(x3)",
        "(x3, x4)",
        "(x2)",
        "(x2, x4)",
        "(x2, x3)",
        "(x1)",
        "(x1, x4)",
        "(x1, x3)",
        "(x1, x2)",
        "(x1, x4, x5)",
        "(x2, x4, x5)",
        "(x3, x4, x5)",
        "(x1, x3, x5)",
        "(x2, x3, x5)",
        "(x3, x4, x5, y1)",
        "(x1, x3, x4)",
        "(x2, x3, x4)",
        "(x3, x4, x5, y1, y2)",
    ];
    for (k, want) in expected.iter().enumerate() {
        let got = og.colon_ideal(k).to_string();
        ensure!(got == *want, "J_{} = {got}, expected {want}", k + 1);
    }
    let row = vec![19, 45, 43, 21, 6, 1];
    let quotients = betti_from_quotients(&og).map_err(err)?;
    let closed = betti_closed_form(&i).map_err(err)?;
    let oracle = oracle_table(l.ideal()).map_err(err)?;
    ensure!(
        cluster_profile(&i).map_err(err)?.cluster_count(3) == 1,
        "C_3 != 1"
    );
    for (name, t) in [
        ("quotients", &quotients),
        ("closed form", &closed),
        ("oracle", &oracle),
    ] {
        ensure!(
            t.row(3) == row && t.row_labels() == vec![3],
            "{name} gives {t}"
        );
    }
    Ok("19 generators, 19 colon ideals, row 19 45 43 21 6 1 three ways".into())
}

fn order_matters() -> Outcome {
    let i = std_ideal(5, "x1*x2*x3, x3*x4*x5, x2*x3*x4");
    let seq = |text: &[&str]| -> Vec<Monomial> {
        text.iter()
            .map(|t| monolin::parse_monomial(t, i.ring()).unwrap())
            .collect()
    };
    let given = OrderedGenerators::from_sequence(&i, &seq(&["x1*x2*x3", "x3*x4*x5", "x2*x3*x4"]))
        .map_err(err)?;
    ensure!(!given.has_linear_quotients(), "given order passes");
    ensure!(
        given.first_failure() == Some(1),
        "first failure {:?}",
        given.first_failure()
    );
    ensure!(
        given.colon_ideal(1).to_string() == "(x1*x2)",
        "colon {}",
        given.colon_ideal(1)
    );
    let good = OrderedGenerators::from_sequence(&i, &seq(&["x1*x2*x3", "x2*x3*x4", "x3*x4*x5"]))
        .map_err(err)?;
    ensure!(good.has_linear_quotients(), "reordered sequence fails");
    ensure!(good.r() == vec![0, 1, 1], "r = {:?}", good.r());
    let t = betti_from_quotients(&good).map_err(err)?;
    ensure!(t.totals() == vec![3, 2], "totals {:?}", t.totals());
    ensure!(t == oracle_table(&i).map_err(err)?, "oracle disagrees");
    Ok("given order fails with (x1*x2); reorder r = 0,1,1, totals 3,2".into())
}

fn equification_tables() -> Outcome {
    let balanced = std_ideal(3, "x1^2, x1*x2^2*x3^2, x2^3*x3^2");
    let balanced_eq = equify(&balanced).map_err(err)?;
    let want = [
        (&balanced, table(&[(0, 2, 1), (0, 5, 2), (1, 6, 2)])),
        (&balanced_eq, table(&[(0, 5, 3), (1, 6, 1), (1, 9, 1)])),
    ];
    for (x, t) in &want {
        let got = oracle_table(x).map_err(err)?;
        ensure!(&got == t, "{} has table\n{got}", x);
        ensure!(got.totals() == vec![3, 2], "totals {:?}", got.totals());
    }
    let lopsided = std_ideal(4, "x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3");
    let lopsided_eq = equify(&lopsided).map_err(err)?;
    let t = oracle_table(&lopsided).map_err(err)?;
    ensure!(
        t == table(&[(0, 3, 1), (0, 5, 1), (0, 6, 1), (1, 6, 1), (1, 8, 1)]),
        "I:\n{t}"
    );
    let te = oracle_table(&lopsided_eq).map_err(err)?;
    ensure!(
        te == table(&[(0, 6, 3), (1, 9, 1), (1, 11, 2), (2, 13, 1)]),
        "I^eq:\n{te}"
    );
    ensure!(
        t.totals() == vec![3, 2] && te.totals() == vec![3, 3, 1],
        "totals"
    );
    // Canonical order x1^2x2^2x3, x1x2x4, x3^3x4^3: the pair of the second
    // and third generators in the order x1x2x4, x1^2x2^2x3, x3^3x4^3 is (0, 2).
    let plain = syzygy_redundant(&lopsided, 0, 2).map_err(err)?;
    ensure!(plain.redundant, "syzygy not redundant for I");
    let witness = &lopsided.gens()[plain.witness.unwrap()];
    ensure!(
        witness.display(lopsided.ring()).to_string() == "x1*x2*x4",
        "witness {witness:?}"
    );
    let eq = syzygy_redundant_eq(&lopsided, 0, 2).map_err(err)?;
    ensure!(!eq.redundant, "syzygy redundant after equification");
    ensure!(
        !syzygy_redundant(&lopsided_eq, 0, 2).map_err(err)?.redundant,
        "lifted pair redundant"
    );
    Ok("both examples match cell for cell; syzygy redundant only before equification".into())
}

fn radical_formulas() -> Outcome {
    let cases = [
        ("x1^2*x2, x1*x2*x3", "x1*x2, x1*x3, x2*x3, x1*y1", 1usize),
        ("x1^2*x2^2, x2^2*x3^2", "x1*x2, x1*x3, x2*x3", 0),
    ];
    for (src, rad, p) in cases {
        let i = std_ideal(3, src);
        let r = radical_star_lin(&i).map_err(err)?;
        let want = ideal(r.ideal.ring(), rad).map_err(err)?;
        ensure!(r.ideal == want, "radical of LIN({src}) = {}", r.ideal);
        ensure!(r.pathological.len() == p, "p = {}", r.pathological.len());
        ensure!(
            r.ideal == star_lin(&i).map_err(err)?.ideal().radical(),
            "direct radical differs"
        );
        let formula = radical_star_lin_betti(&i).map_err(err)?;
        let quotients = betti_from_quotients(&r.ordered().map_err(err)?).map_err(err)?;
        let oracle = oracle_table(&r.ideal).map_err(err)?;
        ensure!(
            formula == quotients && quotients == oracle,
            "Betti tables differ for {src}"
        );
    }
    Ok("both radicals and their Betti numbers match".into())
}

fn splitting_counterexample() -> Outcome {
    let i = std_ideal(3, "x1^3*x2, x2*x3^3");
    let l = lin(&i).map_err(err)?;
    let whole = l.ideal().clone();
    let c = l.part_ideal(l.complete_range());
    let last = l.part_ideal(l.last_range());
    let report = betti_splitting_check(&whole, &c, &last, &OracleConfig::default()).map_err(err)?;
    let want = [
        (
            "Lin(I)",
            &report.i_table,
            table(&[(0, 4, 11), (1, 5, 16), (2, 6, 6)]),
        ),
        (
            "C",
            &report.j_table,
            table(&[(0, 4, 7), (1, 5, 8), (2, 6, 2)]),
        ),
        (
            "L",
            &report.k_table,
            table(&[(0, 4, 4), (1, 5, 2), (1, 7, 1), (1, 8, 1), (2, 9, 1)]),
        ),
        (
            "C∩L",
            &report.meet_table,
            table(&[(0, 5, 6), (1, 6, 4), (1, 7, 1), (1, 8, 1), (2, 9, 1)]),
        ),
    ];
    for (name, got, expect) in want {
        ensure!(*got == expect, "{name}:\n{got}");
    }
    ensure!(!report.is_splitting(), "reported as a splitting");
    for (a, b, v) in [(0, 4, 11), (1, 5, 16), (2, 6, 6)] {
        ensure!(
            report.i_table.get(a, b) == v && report.predicted(a, b) == v,
            "cell ({a},{b})"
        );
    }
    ensure!(
        report.j_table.get(1, 5) + report.k_table.get(1, 5) + report.meet_table.get(0, 5) == 16,
        "16 = 8 + 2 + 6 fails"
    );
    Ok(format!(
        "four tables match; {} mismatching cells",
        report.mismatches.len()
    ))
}

fn linearization_property() -> Outcome {
    let mut rng = common::rng(36);
    let config = OracleConfig::default();
    let (mut checked, mut skipped) = (0, 0);
    for case in 0..200 {
        let i = common::random_equigenerated_within(&mut rng, 6, 4, 6, 3);
        for l in [lin(&i).map_err(err)?, star_lin(&i).map_err(err)?] {
            let og = l.canonical_order().map_err(err)?;
            ensure!(
                og.has_linear_quotients(),
                "case {case}: {} fails at {:?}",
                i,
                og.first_failure()
            );
            let quotients = betti_from_quotients(&og).map_err(err)?;
            match monolin::oracle_betti(l.ideal(), &config) {
                Ok((_, oracle)) => {
                    ensure!(oracle.is_linear(l.degree()), "case {case}: {i} not linear");
                    ensure!(oracle == quotients, "case {case}: {i} tables differ");
                    checked += 1;
                }
                Err(Error::Resource(_)) => skipped += 1,
                Err(e) => return Err(err(e)),
            }
        }
    }
    Ok(format!(
        "400 orders pass; {checked} oracle comparisons, {skipped} over the lattice cap"
    ))
}

fn cropping_property() -> Outcome {
    let mut rng = common::rng(29);
    let mut done = 0;
    let mut nontrivial = 0;
    while done < 200 {
        let og = if done % 2 == 0 {
            let i = common::random_ideal(&mut rng, 4, 6, 4, 3);
            match find_linear_quotient_order(&i, 100_000).map_err(err)? {
                OrderSearch::Found(order) => monolin::colon_sequence(&i, &order).map_err(err)?,
                _ => continue,
            }
        } else {
            let i = common::random_equigenerated_within(&mut rng, 4, 3, 4, 3);
            lin(&i).map_err(err)?.canonical_order().map_err(err)?
        };
        ensure!(
            og.has_linear_quotients(),
            "generated order lacks linear quotients"
        );
        // Bound by the lcm of a random subset of generators, so that at least
        // that subset survives the crop.
        let n = og.ideal().ring().len();
        let v = og
            .ideal()
            .gens()
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .fold(Monomial::one(n), |acc, g| acc.lcm(g));
        let v = ExponentBound(v.exponents().to_vec());
        let cropped = og.crop(&v).map_err(err)?;
        ensure!(
            cropped.has_linear_quotients(),
            "{} cropped at {:?} loses linear quotients",
            og.ideal(),
            v.0
        );
        if cropped.len() > 1 {
            nontrivial += 1;
        }
        done += 1;
    }
    Ok(format!(
        "200 pairs, {nontrivial} with at least two surviving generators"
    ))
}

fn polymatroidal_classification() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        let ring = RingContext::standard(n);
        for d in 1..=3u64 {
            let all =
                power_complete(&ring, d, &ExponentBound::uniform(n, d as u32)).map_err(err)?;
            let pool = all.gens();
            let mut stack: Vec<Vec<usize>> = (0..pool.len()).map(|a| vec![a]).collect();
            while let Some(subset) = stack.pop() {
                let gens: Vec<Monomial> = subset.iter().map(|&a| pool[a].clone()).collect();
                let i = MonomialIdeal::new(ring.clone(), gens).map_err(err)?;
                let poly = is_polymatroidal(lin(&i).map_err(err)?.ideal()).map_err(err)?;
                let m = subset.len();
                ensure!(poly == (d == 1 || m == 1), "{i}: polymatroidal = {poly}");
                count += 1;
                if m < 4 {
                    let last = *subset.last().unwrap();
                    for b in last + 1..pool.len() {
                        let mut next = subset.clone();
                        next.push(b);
                        stack.push(next);
                    }
                }
            }
        }
    }
    Ok(format!("{count} ideals classified"))
}

fn equification_bounds() -> Outcome {
    let mut rng = common::rng(59);
    for case in 0..100 {
        let i = common::random_ideal(&mut rng, 5, 6, 5, 4);
        let e = equify(&i).map_err(err)?;
        let (a, b) = (
            oracle_table(&i).map_err(err)?,
            oracle_table(&e).map_err(err)?,
        );
        ensure!(a.total(0) == b.total(0), "case {case}: {i} changes beta_0");
        for (k, &t) in a.totals().iter().enumerate() {
            ensure!(t <= b.total(k), "case {case}: {i} beta_{k} drops");
        }
    }
    Ok("100 ideals".into())
}

fn squarefree_closed_forms() -> Outcome {
    let expect = [10, 15, 6];
    for (k, &v) in expect.iter().enumerate() {
        ensure!(
            veronese_betti(5, 3, k as u64).map_err(err)? == v,
            "Veronese 5,3 column {k}"
        );
    }
    let mut rng = common::rng(48);
    for case in 0..100 {
        let n = rng.gen_range(2..=6);
        let d = rng.gen_range(1..=n.min(4));
        let m = rng.gen_range(1..=6);
        let i = common::random_squarefree(&mut rng, n, d, m);
        let l = star_lin(&i).map_err(err)?;
        let og = l.canonical_order().map_err(err)?;
        let closed = betti_closed_form(&i).map_err(err)?;
        let quotients = betti_from_quotients(&og).map_err(err)?;
        let oracle = oracle_table(l.ideal()).map_err(err)?;
        ensure!(
            closed == quotients && quotients == oracle,
            "case {case}: {i} tables differ"
        );
        let (pd, _) = pd_and_depth(&i).map_err(err)?;
        ensure!(
            oracle.projective_dimension() == Some(pd as usize),
            "case {case}: pd"
        );
        let mut last = og.r()[l.last_range()].to_vec();
        last.sort_unstable();
        let census = cluster_profile(&i).map_err(err)?.last_part_r_census();
        ensure!(last == census, "case {case}: census {census:?} vs {last:?}");
        let complete = l.part_ideal(l.complete_range());
        let ct = oracle_table(&complete).map_err(err)?;
        for k in 0..=n {
            let v = veronese_betti(n as u64, d as u64, k as u64).map_err(err)?;
            ensure!(
                ct.get(k, (k + d) as u64) == v,
                "case {case}: Veronese column {k}"
            );
        }
        let complete_r: Vec<u64> = og.r()[l.complete_range()]
            .iter()
            .map(|&x| x as u64)
            .collect();
        let direct: Vec<u64> = l
            .complete_part()
            .iter()
            .map(monolin::squarefree::veronese_r)
            .collect();
        ensure!(complete_r == direct, "case {case}: complete-part r values");
    }
    Ok("Veronese 10,15,6; 100 ideals agree three ways".into())
}

fn hypergraph_criterion() -> Outcome {
    let config = OracleConfig::default();
    let mut instances: Vec<(String, Hypergraph)> = vec![
        ("C4".into(), monolin::hypergraph::cycle(4)),
        ("C5".into(), monolin::hypergraph::cycle(5)),
    ];
    let mut rng = common::rng(421);
    for _ in 0..60 {
        let n = rng.gen_range(2..=5);
        let d = rng.gen_range(1..=n.min(3));
        let m = rng.gen_range(1..=4);
        let i = common::random_squarefree(&mut rng, n, d, m);
        if n + i.num_gens() > 16 {
            continue;
        }
        for l in [lin(&i).map_err(err)?, star_lin(&i).map_err(err)?] {
            instances.push((
                format!("LIN of {i}"),
                Hypergraph::from_ideal(l.ideal()).map_err(err)?,
            ));
        }
    }
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let d = rng.gen_range(1..=n.min(3));
        let e = rng.gen_range(1..=8);
        let i = common::random_squarefree(&mut rng, n, d, e);
        instances.push((
            format!("random {i}"),
            Hypergraph::from_ideal(&i).map_err(err)?,
        ));
    }
    let (mut applicable, mut linear, mut skipped) = (0, 0, 0);
    for (name, h) in &instances {
        let verdict = match h.linear_resolution_criterion() {
            Ok(Criterion::Applicable { linear, .. }) => linear,
            Ok(Criterion::Inapplicable(_)) => continue,
            Err(Error::Resource(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(err(e)),
        };
        let oracle = match is_linear_resolution(&h.edge_ideal(), &config) {
            Ok(v) => v,
            Err(Error::Resource(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(err(e)),
        };
        ensure!(
            verdict == oracle,
            "{name}: criterion {verdict}, oracle {oracle}"
        );
        applicable += 1;
        linear += verdict as usize;
    }
    for name in ["C4", "C5"] {
        let h = &instances.iter().find(|x| x.0 == name).unwrap().1;
        ensure!(
            matches!(
                h.linear_resolution_criterion().map_err(err)?,
                Criterion::Inapplicable(_)
            ),
            "{name} should not be triangulated"
        );
    }
    ensure!(applicable >= 50, "only {applicable} applicable instances");
    Ok(format!(
        "{} instances, {applicable} applicable ({linear} linear), {skipped} over caps, 0 disagreements",
        instances.len()
    ))
}

fn dot_counts(dot: &str) -> (usize, usize) {
    (dot.matches("label=").count(), dot.matches("->").count())
}

fn labels(dot: &str) -> BTreeSet<String> {
    dot.split("label=\"")
        .skip(1)
        .map(|s| s.split('"').next().unwrap().to_string())
        .collect()
}

/// Hasse diagram size computed from scratch.
fn cover_count(l: &LcmLattice) -> usize {
    let e = l.elements();
    let below = |a: &Monomial, b: &Monomial| a != b && a.divides(b);
    let mut count = 0;
    for a in e {
        for b in e {
            if below(a, b) && !e.iter().any(|c| below(a, c) && below(c, b)) {
                count += 1;
            }
        }
    }
    count
}

fn round_trips_and_lattices() -> Outcome {
    let mut rng = common::rng(512);
    for case in 0..100 {
        let i = common::random_equigenerated_within(&mut rng, 6, 4, 6, 3);
        ensure!(
            retrieve_source(&lin(&i).map_err(err)?).map_err(err)? == i,
            "case {case}: retrieve"
        );
        let j = common::random_ideal(&mut rng, 5, 6, 6, 4);
        ensure!(
            deequify(&equify(&j).map_err(err)?).map_err(err)? == j,
            "case {case}: deequify"
        );
    }
    let lopsided = std_ideal(4, "x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3");
    let balanced = std_ideal(3, "x1^2, x1*x2^2*x3^2, x2^3*x3^2");
    let figures: [Figure; 2] = [
        (
            &balanced,
            (7, 9),
            (7, 9),
            &[
                "1",
                "x1^2*z^3",
                "x2^3*x3^2",
                "x1*x2^2*x3^2",
                "x1^2*x2^2*x3^2*z^3",
                "x1*x2^3*x3^2",
                "x1^2*x2^3*x3^2*z^3",
            ],
        ),
        (
            &lopsided,
            (7, 9),
            (8, 12),
            &[
                "1",
                "x1*x2*x4*z^3",
                "x1^2*x2^2*x3*z",
                "x3^3*x4^3",
                "x1^2*x2^2*x3*x4*z^3",
                "x1*x2*x3^3*x4^3*z^3",
                "x1^2*x2^2*x3^3*x4^3*z",
                "x1^2*x2^2*x3^3*x4^3*z^3",
            ],
        ),
    ];
    for (i, plain, lifted, eq_labels) in figures {
        let a = LcmLattice::new(i, 1000).map_err(err)?;
        let b = LcmLattice::new(&equify(i).map_err(err)?, 1000).map_err(err)?;
        ensure!(
            dot_counts(&a.to_dot()) == plain,
            "{i}: {:?}",
            dot_counts(&a.to_dot())
        );
        ensure!(
            dot_counts(&b.to_dot()) == lifted,
            "{i}^eq: {:?}",
            dot_counts(&b.to_dot())
        );
        ensure!(
            cover_count(&a) == plain.1 && cover_count(&b) == lifted.1,
            "{i}: covers"
        );
        let want: BTreeSet<String> = eq_labels.iter().map(|s| s.to_string()).collect();
        ensure!(
            labels(&b.to_dot()) == want,
            "{i}^eq labels {:?}",
            labels(&b.to_dot())
        );
        let e = lattice_embedding_check(i, 1000).map_err(err)?;
        ensure!(
            e.holds() && (e.size, e.size_eq) == (plain.0, lifted.0),
            "{i}: embedding"
        );
    }
    Ok("200 round trips; lattices 7 nodes, 7 vs 7, 7 vs 8".into())
}

fn main() {
    let checks: [Check; 12] = [
        (
            "three-triangle linearization",
            three_triangles,
            Duration::from_secs(5),
        ),
        (
            "generator order and linear quotients",
            order_matters,
            Duration::from_secs(1),
        ),
        (
            "equification Betti tables and syzygies",
            equification_tables,
            Duration::from_secs(5),
        ),
        (
            "radical of the starred linearization",
            radical_formulas,
            Duration::from_secs(2),
        ),
        (
            "complete/last part splitting counterexample",
            splitting_counterexample,
            Duration::from_secs(5),
        ),
        (
            "linearizations have linear quotients",
            linearization_property,
            Duration::from_secs(300),
        ),
        (
            "cropping preserves linear quotients",
            cropping_property,
            Duration::from_secs(300),
        ),
        (
            "polymatroidal classification",
            polymatroidal_classification,
            Duration::from_secs(300),
        ),
        (
            "equification bounds Betti numbers",
            equification_bounds,
            Duration::from_secs(300),
        ),
        (
            "squarefree closed forms",
            squarefree_closed_forms,
            Duration::from_secs(300),
        ),
        (
            "hypergraph diameter criterion",
            hypergraph_criterion,
            Duration::from_secs(300),
        ),
        (
            "round trips and lcm-lattice figures",
            round_trips_and_lattices,
            Duration::from_secs(300),
        ),
    ];
    let mut failures = 0;
    for (k, (name, check, limit)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(format!("panicked: {p:?}")));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > *limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            o => o,
        };
        match &outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        checks.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
