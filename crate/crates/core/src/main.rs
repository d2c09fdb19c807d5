//! `ntdice` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ntdice::format::{parse_dice_set, parse_digraph, write_dice_set, write_dice_sets};
use ntdice::oracle::{enumerate_balanced_triples, mc_estimate, three_sigma, EnumerationOptions};
use ntdice::{
    build_cycle_set, build_strong_tournament_dice, build_tournament_dice, connectability,
    is_balanced, is_non_transitive, is_strong, probability, realizes_by_name, victory_matrix,
    Connectability, DiceSet, Digraph, Error, RealizationReport, Tournament,
};

#[derive(Parser)]
#[command(name = "ntdice", version, about = "Build and verify non-transitive dice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a balanced non-transitive cycle of dice.
    Cycle {
        /// Number of dice (at least 3).
        #[arg(long)]
        dice: usize,
        /// Sides per die (at least 3).
        #[arg(long)]
        sides: usize,
        /// Write the dice set here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build dice realizing a tournament read from a digraph file.
    Tournament {
        graph: PathBuf,
        /// Chord order for a strong tournament, e.g. "A>C,B>D".
        #[arg(long)]
        chord_order: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a dice set: victory matrix, balance, non-transitivity and,
    /// with --graph, realization of that digraph by die name.
    Verify {
        dice: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Estimate each cycle-adjacent matchup by seeded rolls.
    Simulate {
        dice: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        rolls: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide whether a digraph can be completed to a strong tournament.
    Connectable { graph: PathBuf },
    /// Enumerate every balanced non-transitive triple of m-sided dice.
    Oracle {
        #[arg(long)]
        sides: usize,
        /// Keep only triples with this many victories per cycle edge.
        #[arg(long)]
        victories: Option<u64>,
        #[arg(long)]
        max: Option<usize>,
        /// Allow more than 6 sides.
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure with the exit code it maps to.
enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::ConstructionInvariant(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_dice(path: &Path) -> Result<DiceSet, Failure> {
    parse_dice_set(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Digraph, Failure> {
    parse_digraph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_chord_order(text: &str) -> Result<Vec<(String, String)>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            item.split_once('>')
                .map(|(w, l)| (w.trim().to_string(), l.trim().to_string()))
                .ok_or_else(|| Failure::Input(format!("bad chord {item:?}, expected winner>loser")))
        })
        .collect()
}

fn cmd_cycle(n: usize, m: usize, out: Option<&Path>) -> CmdResult {
    let set = build_cycle_set(n, m)?;
    let p = is_balanced(&set)?.ok_or_else(|| Failure::Check("result is not balanced".into()))?;
    match out {
        Some(_) => {
            emit(&write_dice_set(&set), out)?;
            println!("victorious probability: {p}");
        }
        None => emit(&format!("{}# victorious probability: {p}\n", write_dice_set(&set)), None)?,
    }
    Ok(true)
}

fn print_report(report: &RealizationReport) {
    if report.realized() {
        println!("realized");
    } else {
        println!("not realized: {} violating pair(s)", report.violations.len());
        for v in &report.violations {
            let (die_w, vert_w) = &report.mapping[v.winner];
            let (die_l, vert_l) = &report.mapping[v.loser];
            println!(
                "  {die_w} beats {die_l} with {} but {vert_w} -> {vert_l} is not an arc",
                v.probability
            );
        }
    }
}

fn cmd_tournament(graph: &Path, chord_order: Option<&str>, out: Option<&Path>) -> CmdResult {
    let g = load_graph(graph)?;
    let t = Tournament::new(g).map_err(|e| Failure::Input(format!("{}: {e}", graph.display())))?;
    let built = match chord_order {
        Some(text) => {
            if !is_strong(t.as_digraph()) {
                return Err(Failure::Input("--chord-order needs a strong tournament".into()));
            }
            let order = parse_chord_order(text)?;
            build_strong_tournament_dice(&t, Some(&order))?
        }
        None => build_tournament_dice(&t)?,
    };
    let mut text = write_dice_set(&built.dice);
    for (die, vertex) in &built.report.mapping {
        text.push_str(&format!("# map {die} -> {vertex}\n"));
    }
    emit(&text, out)?;
    print_report(&built.report);
    Ok(built.report.realized())
}

fn cmd_verify(dice: &Path, graph: Option<&Path>) -> CmdResult {
    let set = load_dice(dice)?;
    let matrix = victory_matrix(&set);
    let names: Vec<&str> = set.dice().iter().map(|d| d.name()).collect();
    let width = names.iter().map(|n| n.len()).max().unwrap_or(1).max(3);
    println!("victory matrix (counts out of {}):", set.sides() * set.sides());
    print!("{:width$}", "");
    for n in &names {
        print!(" {n:>width$}");
    }
    println!();
    for (i, row) in matrix.rows().iter().enumerate() {
        print!("{:width$}", names[i]);
        for c in row {
            print!(" {c:>width$}");
        }
        println!();
    }

    let mut cycle_ok = false;
    if set.len() >= 3 {
        let balanced = is_balanced(&set)?;
        let non_transitive = is_non_transitive(&set)?;
        match balanced {
            Some(p) => println!("balanced: yes ({p})"),
            None => {
                let probs: Vec<String> = (0..set.len())
                    .map(|i| {
                        probability(set.die(i), set.die((i + 1) % set.len()))
                            .map(|p| p.to_string())
                            .unwrap_or_default()
                    })
                    .collect();
                println!("balanced: no ({})", probs.join(", "));
            }
        }
        println!("non-transitive: {}", if non_transitive { "yes" } else { "no" });
        cycle_ok = balanced.is_some() && non_transitive;
    } else {
        println!("balanced: n/a (fewer than 3 dice)");
        println!("non-transitive: n/a (fewer than 3 dice)");
    }

    match graph {
        Some(path) => {
            let g = load_graph(path)?;
            let report = realizes_by_name(&set, &g)?;
            print_report(&report);
            Ok(report.realized())
        }
        None => Ok(cycle_ok),
    }
}

fn cmd_simulate(dice: &Path, rolls: u64, seed: u64) -> CmdResult {
    let set = load_dice(dice)?;
    if set.len() < 2 {
        return Err(Failure::Input("need at least two dice to simulate".into()));
    }
    let pairs: Vec<(usize, usize)> = if set.len() == 2 {
        vec![(0, 1)]
    } else {
        (0..set.len()).map(|i| (i, (i + 1) % set.len())).collect()
    };
    for (k, (i, j)) in pairs.into_iter().enumerate() {
        let (a, b) = (set.die(i), set.die(j));
        let est = mc_estimate(a, b, rolls, seed.wrapping_add(k as u64))?;
        let exact = probability(a, b)?;
        let p = exact.to_f64();
        println!(
            "{} vs {}: estimate {:.6} over {rolls} rolls; exact {exact} = {p:.6}; 3 sigma {:.6}",
            a.name(),
            b.name(),
            est.value(),
            three_sigma(p, rolls)
        );
    }
    Ok(true)
}

fn cmd_connectable(graph: &Path) -> CmdResult {
    let g = load_graph(graph)?;
    let names = |vs: &[usize]| vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(", ");
    match connectability(&g) {
        Connectability::Connectable => println!("yes"),
        Connectability::DirectedCut { from, to } => {
            println!("no");
            println!("cut: {{{}}} | {{{}}}", names(&from), names(&to));
        }
        Connectability::TwoVertices => {
            println!("no");
            println!("no strong tournament has two vertices");
        }
    }
    Ok(true)
}

fn cmd_oracle(
    sides: usize,
    victories: Option<u64>,
    max: Option<usize>,
    allow_large: bool,
    out: Option<&Path>,
) -> CmdResult {
    let options = EnumerationOptions {
        max_results: max,
        victories,
        allow_large,
    };
    let sets = enumerate_balanced_triples(sides, options)?;
    let mut values = BTreeSet::new();
    for s in &sets {
        if let Some(p) = is_balanced(s)? {
            values.insert((p.numerator(), p.denominator()));
        }
    }
    println!("{} balanced non-transitive triple(s) with {sides} sides", sets.len());
    let listed: Vec<String> = values.iter().map(|(n, d)| format!("{n}/{d}")).collect();
    println!("victorious probabilities: {}", if listed.is_empty() { "none".into() } else { listed.join(" ") });
    if let Some(path) = out {
        emit(&write_dice_sets(&sets), Some(path))?;
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Cycle { dice, sides, out } => cmd_cycle(*dice, *sides, out.as_deref()),
        Command::Tournament {
            graph,
            chord_order,
            out,
        } => cmd_tournament(graph, chord_order.as_deref(), out.as_deref()),
        Command::Verify { dice, graph } => cmd_verify(dice, graph.as_deref()),
        Command::Simulate { dice, rolls, seed } => cmd_simulate(dice, *rolls, *seed),
        Command::Connectable { graph } => cmd_connectable(graph),
        Command::Oracle {
            sides,
            victories,
            max,
            allow_large,
            out,
        } => cmd_oracle(*sides, *victories, *max, *allow_large, out.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
