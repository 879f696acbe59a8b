//! Seeded instance suites. Every line on stdout depends only on the suite and
//! seed; wall-clock times go to stderr.

use std::time::Instant;

use anyhow::{bail, Result};
use pebblemotion::gadgets::{gen_ind_gadget, gen_stcut_gadget_default, sat_bruteforce, Cnf3, Literal};
use pebblemotion::oracle::{oracle_bounded, oracle_ind, oracle_solve};
use pebblemotion::random::{random_connected_graph, random_sigma, random_tree};
use pebblemotion::{solve, GadgetError, Goal, Instance, Measure, Method, SolveError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Suite;

#[derive(Default)]
struct Tally {
    checked: usize,
    skipped: usize,
    violations: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) -> &'static str {
        self.checked += 1;
        if ok {
            "ok"
        } else {
            self.violations += 1;
            "VIOLATION"
        }
    }
}

fn goal_for(rng: &mut ChaCha8Rng, n: usize) -> Goal {
    match rng.gen_range(0..if n >= 3 { 4 } else { 3 }) {
        0 => Goal::Con,
        1 => Goal::Ind,
        2 => Goal::Clique,
        _ => {
            let s = rng.gen_range(0..n);
            Goal::StCut { s, t: (s + rng.gen_range(1..n)) % n }
        }
    }
}

/// Solves with `auto` and checks the labelled guarantee against the oracle.
fn check_against_oracle(tally: &mut Tally, id: usize, inst: &Instance, measure: Measure) {
    let tag = format!(
        "{id:4} n={} k={} {}-{}",
        inst.vertex_count(),
        inst.pebble_count(),
        inst.goal().name(),
        measure
    );
    let got = solve(inst, measure, Method::Auto);
    let want = oracle_solve(inst, measure);
    match (got, want) {
        (Ok(r), Ok(opt)) => {
            let ok = inst.validate(&r.solution) && r.guarantee.admits(r.cost, opt.cost);
            let verdict = tally.record(ok);
            println!("{tag} {} cost={} opt={} guarantee={} {verdict}", r.method, r.cost, opt.cost, r.guarantee);
        }
        (Err(a), Err(b)) if a.is_infeasible() && b.is_infeasible() => {
            let verdict = tally.record(true);
            println!("{tag} infeasible {verdict}");
        }
        (Err(SolveError::GuardExceeded { .. }), _) | (_, Err(SolveError::GuardExceeded { .. })) => {
            tally.skipped += 1;
            println!("{tag} skipped (guard)");
        }
        (a, b) => {
            let verdict = tally.record(false);
            println!("{tag} solver={:?} oracle={:?} {verdict}", a.map(|r| r.cost), b.map(|r| r.cost));
        }
    }
}

fn small(seed: u64, tally: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for id in 0..60 {
        let n = rng.gen_range(2..=7);
        let k = rng.gen_range(1..=4);
        let g = random_connected_graph(n, rng.gen_range(0.0..0.6), &mut rng);
        let sigma = random_sigma(n, k, &mut rng);
        let goal = goal_for(&mut rng, n);
        let inst = Instance::new(g, sigma, goal).expect("generated instance is valid");
        for measure in Measure::ALL {
            check_against_oracle(tally, id, &inst, measure);
        }
    }
}

fn trees(seed: u64, tally: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for id in 0..60 {
        let n = rng.gen_range(1..=9);
        let k = rng.gen_range(1..=4);
        let g = random_tree(n, &mut rng);
        let sigma = random_sigma(n, k, &mut rng);
        for goal in [Goal::Con, Goal::Ind] {
            let inst = Instance::new(g.clone(), sigma.clone(), goal).expect("generated instance is valid");
            for measure in [Measure::Sum, Measure::Num] {
                check_against_oracle(tally, id, &inst, measure);
            }
        }
    }
    for (id, (n, k)) in [(500, 20), (2000, 50)].into_iter().enumerate() {
        let g = random_tree(n, &mut rng);
        let inst = Instance::new(g, random_sigma(n, k, &mut rng), Goal::Con).expect("valid");
        let start = Instant::now();
        match solve(&inst, Measure::Sum, Method::Exact) {
            Ok(r) => {
                let verdict = tally.record(inst.validate(&r.solution));
                println!("large{id} n={n} k={k} con-sum {} cost={} {verdict}", r.method, r.cost);
            }
            Err(e) => {
                let verdict = tally.record(false);
                println!("large{id} n={n} k={k} con-sum error={e} {verdict}");
            }
        }
        eprintln!("large{id}: {:.2?}", start.elapsed());
    }
}

fn random_formula(rng: &mut ChaCha8Rng) -> Cnf3 {
    let tau = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=2);
    let clauses = (0..m)
        .map(|_| {
            [(); 3].map(|_| {
                let v = rng.gen_range(1..=tau);
                if rng.gen_bool(0.5) {
                    Literal::pos(v)
                } else {
                    Literal::neg(v)
                }
            })
        })
        .collect();
    Cnf3::new(tau, clauses).expect("literals are in range")
}

fn gadgets(seed: u64, tally: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for id in 0..40 {
        let f = random_formula(&mut rng);
        let sat = sat_bruteforce(&f)?;
        let tm = (f.variable_count() + f.clause_count()) as u64;
        match gen_ind_gadget(&f) {
            Ok(g) => {
                let max = oracle_ind(&g.instance, Measure::Max)?.cost;
                let sum = oracle_ind(&g.instance, Measure::Sum)?.cost;
                let verdict = tally.record(sat == (max <= 1) && sat == (sum <= tm));
                println!("{id:4} {f} sat={sat} ind max={max} sum={sum} {verdict}");
            }
            Err(GadgetError::Disconnected) => {
                tally.skipped += 1;
                println!("{id:4} {f} ind skipped (disconnected gadget)");
            }
            Err(e) => return Err(e.into()),
        }
        let cut = gen_stcut_gadget_default(&f)?;
        let found = oracle_bounded(&cut.instance, 1)?.is_some();
        let verdict = tally.record(sat == found);
        println!("{id:4} {f} sat={sat} stcut radius-1={found} {verdict}");
    }
    Ok(())
}

pub fn run(suite: Suite, seed: u64) -> Result<()> {
    let start = Instant::now();
    let mut tally = Tally::default();
    let name = match suite {
        Suite::Small => {
            small(seed, &mut tally);
            "small"
        }
        Suite::Trees => {
            trees(seed, &mut tally);
            "trees"
        }
        Suite::Gadgets => {
            gadgets(seed, &mut tally)?;
            "gadgets"
        }
    };
    println!(
        "suite {name} seed {seed}: {} checked, {} skipped, {} violations",
        tally.checked, tally.skipped, tally.violations
    );
    eprintln!("elapsed {:.2?}", start.elapsed());
    if tally.violations > 0 {
        bail!("{} violations", tally.violations);
    }
    Ok(())
}
