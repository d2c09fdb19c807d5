use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const WORKED_TOURNAMENT: &str = "# digraph v1
vertices: A B C D E
edge: A B
edge: B C
edge: C D
edge: D E
edge: E A
edge: A C
edge: B D
edge: B E
edge: C E
edge: A D
";

const TRANSITIVE: &str = "# digraph v1\nvertices: a b c\nedge: a b\nedge: a c\nedge: b c\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ntdice")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn cycle_prints_triple_and_probability() {
    let o = run(&["cycle", "--dice", "3", "--sides", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "# dice-set v1\nA: 9 5 1\nB: 8 4 3\nC: 7 6 2\n# victorious probability: 5/9\n"
    );
}

#[test]
fn cycle_of_five() {
    let o = run(&["cycle", "--dice", "5", "--sides", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("A: 15 7 1\nB: 14 6 5\nC: 13 10 2\nD: 12 9 3\nE: 11 8 4\n"));
}

#[test]
fn cycle_rejects_too_few_dice() {
    let o = run(&["cycle", "--dice", "2", "--sides", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at least 3"));
}

#[test]
fn cycle_then_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("set.txt");
    let o = run(&["cycle", "--dice", "6", "--sides", "5", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("victorious probability: 13/25"));
    let v = run(&["verify", s(&out)]);
    assert_eq!(v.status.code(), Some(0));
    let text = stdout(&v);
    assert!(text.contains("balanced: yes (13/25)"));
    assert!(text.contains("non-transitive: yes"));
}

#[test]
fn tournament_with_chord_order() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "t.txt", WORKED_TOURNAMENT);
    let out = dir.path().join("dice.txt");
    let o = run(&["tournament", s(&g), "--chord-order", "A>C,B>D,B>E,C>E,A>D", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "realized");
    let dice = fs::read_to_string(&out).unwrap();
    assert!(dice.contains("A: 35 27 25 17 11 10 2\n"));
    assert!(dice.contains("E: 32 30 21 18 14 6 4\n"));

    let v = run(&["verify", s(&out), "--graph", s(&g)]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("realized"));
}

#[test]
fn tournament_transitive_gives_one_sided_dice() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "t.txt", TRANSITIVE);
    let o = run(&["tournament", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("a: 3\nb: 2\nc: 1\n"));
    assert!(text.contains("realized"));

    let bad = run(&["tournament", s(&g), "--chord-order", "a>c"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.txt", "# digraph v1\nvertices: a b\nedge: a z\n");
    let o = run(&["tournament", s(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let d = write(&dir, "bad_dice.txt", "# dice-set v1\nA: 3 2 1\nB: 6 5\n");
    assert_eq!(run(&["verify", s(&d)]).status.code(), Some(2));
    assert_eq!(run(&["verify", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["cycle", "--dice", "x", "--sides", "3"]).status.code(), Some(2));
}

#[test]
fn verify_flags_broken_sets() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "good.txt", "# dice-set v1\nA: 9 5 1\nB: 8 4 3\nC: 7 6 2\n");
    assert_eq!(run(&["verify", s(&good)]).status.code(), Some(0));

    let unbalanced = write(&dir, "u.txt", "# dice-set v1\nA: 8 6 1\nB: 7 5 4\nC: 9 3 2\n");
    let o = run(&["verify", s(&unbalanced)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("balanced: no"));

    let transitive = write(&dir, "t.txt", "# dice-set v1\nA: 9 8 7\nB: 6 5 4\nC: 3 2 1\n");
    let o = run(&["verify", s(&transitive)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("non-transitive: no"));

    let g = write(&dir, "g.txt", "# digraph v1\nvertices: A B C\nedge: B A\nedge: C B\nedge: A C\n");
    let o = run(&["verify", s(&good), "--graph", s(&g)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not realized"));
}

#[test]
fn simulate_lands_near_exact() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.txt", "# dice-set v1\nA: 9 5 1\nB: 8 4 3\nC: 7 6 2\n");
    let o = run(&["simulate", s(&d), "--rolls", "200000", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in lines {
        let est: f64 = line.split("estimate ").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
        assert!((est - 5.0 / 9.0).abs() < 0.0035, "{line}");
        assert!(line.contains("exact 5/9"));
    }
}

#[test]
fn connectable_reports_cut() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "t.txt", TRANSITIVE);
    let o = run(&["connectable", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "no\ncut: {a} | {b, c}\n");

    let sparse = write(&dir, "s.txt", "# digraph v1\nvertices: a b c d\nedge: a b\n");
    assert_eq!(stdout(&run(&["connectable", s(&sparse)])), "yes\n");
}

#[test]
fn oracle_three_sides() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("all.txt");
    let o = run(&["oracle", "--sides", "3", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("victorious probabilities: 5/9\n"));
    let sets = ntdice::format::parse_dice_sets(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(!sets.is_empty());

    assert_eq!(run(&["oracle", "--sides", "7"]).status.code(), Some(2));
    let none = run(&["oracle", "--sides", "3", "--victories", "6"]);
    assert!(stdout(&none).contains("victorious probabilities: none"));
}
