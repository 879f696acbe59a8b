use std::path::PathBuf;
use std::process::{Command, Output};

use pebblemotion::format::{parse_instance, parse_solution};
use pebblemotion::{solve, Measure, Method};

const STAR_CON: &str = "pebblemotion v1\ngraph 4\ne 0 1\ne 0 2\ne 0 3\np 1\np 2\ngoal con\n";
const C4_CON: &str = "pebblemotion v1\ngraph 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\np 0\np 2\ngoal con\n";
const ADJACENT_CUT: &str = "pebblemotion v1\ngraph 3\ne 0 1\ne 1 2\np 2\ngoal stcut 0 1\n";

fn file(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pebblemotion")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn exact_solve_on_a_star() {
    let path = file("star.txt", STAR_CON);
    let o = run(&["solve", "--measure", "sum", "--method", "exact", "--in", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cost"], 1);
    assert_eq!(v["guarantee"], "exact");
    assert_eq!(v["measure"], "sum");
    assert_eq!(v["method"], "tree-dp-con-sum");
    assert_eq!(v["mu"].as_array().unwrap().len(), 2);
}

#[test]
fn exact_on_non_tree_fails() {
    let path = file("c4.txt", C4_CON);
    let o = run(&["solve", "--measure", "sum", "--method", "exact", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exact solver requires a tree"), "{}", stderr(&o));
}

#[test]
fn infeasible_exits_two() {
    let path = file("adjacent.txt", ADJACENT_CUT);
    let o = run(&["solve", "--measure", "max", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("infeasible"));
}

#[test]
fn verify_identity_solution() {
    let inst = file("verify.txt", "pebblemotion v1\ngraph 3\ne 0 1\ne 1 2\np 0\np 1\ngoal con\n");
    let sol = file("verify.sol", "mu 0 0\nmu 1 1\n");
    let o = run(&["verify", "--in", inst.to_str().unwrap(), "--solution", sol.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "valid\nsum 0\nmax 0\nnum 0\n");
    let bad = file("verify-bad.sol", "mu 0 0\nmu 1 2\n");
    let o = run(&["verify", "--in", inst.to_str().unwrap(), "--solution", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid\n"));
}

#[test]
fn verify_agrees_with_every_solver() {
    let cases = [
        ("v-star.txt", STAR_CON),
        ("v-c4.txt", C4_CON),
        (
            "v-clique.txt",
            "pebblemotion v1\ngraph 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\ne 0 2\np 0\np 3\np 4\ngoal clique\n",
        ),
        ("v-ind.txt", "pebblemotion v1\ngraph 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\np 1\np 1\np 2\ngoal ind\n"),
        ("v-cut.txt", "pebblemotion v1\ngraph 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\np 0\np 0\ngoal stcut 0 2\n"),
    ];
    for (name, text) in cases {
        let path = file(name, text);
        let inst = parse_instance(text).unwrap();
        for measure in Measure::ALL {
            for method in Method::ALL {
                let Ok(expected) = solve(&inst, measure, method) else { continue };
                let o = run(&[
                    "solve",
                    "--measure",
                    measure.name(),
                    "--method",
                    method.name(),
                    "--in",
                    path.to_str().unwrap(),
                ]);
                assert_eq!(o.status.code(), Some(0), "{name} {measure} {method}: {}", stderr(&o));
                let out = stdout(&o);
                assert!(out.starts_with(&format!("cost {}\n", expected.cost)), "{out}");
                let sol_text: String = out.lines().filter(|l| l.starts_with("mu ")).map(|l| format!("{l}\n")).collect();
                assert_eq!(parse_solution(&sol_text, &inst).unwrap(), expected.solution);
                let sol = file(&format!("{name}.{measure}.{method}.sol"), &sol_text);
                let v = run(&["verify", "--in", path.to_str().unwrap(), "--solution", sol.to_str().unwrap()]);
                assert_eq!(v.status.code(), Some(0));
                assert!(stdout(&v).contains(&format!("\n{measure} {}\n", expected.cost)));
            }
        }
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let path = file("broken.txt", "pebblemotion v1\ngraph 3\ne 0 1\ne 1 1\np 0\ngoal con\n");
    let o = run(&["solve", "--measure", "sum", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn guard_values_are_reported() {
    let mut text = String::from("pebblemotion v1\ngraph 30\n");
    for v in 0..30 {
        text.push_str(&format!("e {v} {}\n", (v + 1) % 30));
    }
    for v in 0..6 {
        text.push_str(&format!("p {}\n", 5 * v));
    }
    text.push_str("goal con\n");
    let path = file("guard.txt", &text);
    let o = run(&["solve", "--measure", "max", "--method", "oracle", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("729000000") && err.contains("10000000") && err.contains("PEBBLE_ORACLE_LIMIT"), "{err}");
}

#[test]
fn gadgets_round_trip_through_solve() {
    let cnf = file("f.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    let o = run(&["gen", "ind-gadget", "--cnf", cnf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("# threshold max 1"));
    let inst = parse_instance(&text).unwrap();
    let gadget = file("ind-gadget.txt", &text);
    let s = run(&["solve", "--measure", "max", "--method", "oracle", "--in", gadget.to_str().unwrap()]);
    assert_eq!(s.status.code(), Some(0));
    let cost: u64 = stdout(&s).lines().next().unwrap()[5..].parse().unwrap();
    assert!(cost > 1, "unsatisfiable formula, cost {cost}");
    assert_eq!(inst.pebble_count(), 6);

    let o = run(&["gen", "stcut-gadget", "--cnf", cnf.to_str().unwrap(), "--h", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(parse_instance(&stdout(&o)).is_ok());
    let o = run(&["gen", "stcut-gadget", "--cnf", cnf.to_str().unwrap(), "--h", "2"]);
    assert_eq!(o.status.code(), Some(1));

    let graph = file("p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
    for kind in ["clique-num-vc", "clique-sum-vc", "clique-max-dc"] {
        let o = run(&["gen", kind, "--graph", graph.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stderr(&o));
        assert!(parse_instance(&stdout(&o)).is_ok());
    }
}

#[test]
fn bench_is_deterministic() {
    for suite in ["small", "trees", "gadgets"] {
        let a = run(&["bench", "--suite", suite, "--seed", "7"]);
        let b = run(&["bench", "--suite", suite, "--seed", "7"]);
        assert_eq!(a.status.code(), Some(0), "{suite}: {}", stdout(&a));
        assert_eq!(a.stdout, b.stdout);
        assert!(stdout(&a).contains(" 0 violations"));
    }
}
