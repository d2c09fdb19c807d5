//! Independent ground truth for the constructive modules: exhaustive
//! enumeration, Monte Carlo estimates and brute-force connectability.
//!
//! Nothing here reuses the construction code paths. Victory counts are taken
//! by direct double loops and strongness by plain reachability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dice::{die_name, DiceSet, Die};
use crate::error::{invalid, Error, Result};
use crate::graph::Digraph;

/// Largest side count enumerated without an explicit override.
pub const MAX_ENUMERATION_SIDES: usize = 6;

/// Largest vertex count accepted by [`brute_force_connectable`].
pub const MAX_BRUTE_FORCE_VERTICES: usize = 7;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Stop after this many results (taken in lexicographic order).
    pub max_results: Option<usize>,
    /// Keep only sets with exactly this many victories per cycle edge.
    pub victories: Option<u64>,
    /// Lift the side-count cost guard.
    pub allow_large: bool,
}

fn pair_wins(a: &[u64], b: &[u64]) -> u64 {
    let mut wins = 0;
    for x in a {
        for y in b {
            if x > y {
                wins += 1;
            }
        }
    }
    wins
}

fn collect(m: usize, owner: &mut Vec<u8>, sizes: &mut [usize; 3], out: &mut Vec<[Vec<u64>; 3]>, want: Option<u64>) {
    if owner.len() == 3 * m {
        let mut faces: [Vec<u64>; 3] = Default::default();
        for (label, &d) in owner.iter().enumerate().rev() {
            faces[d as usize].push(label as u64 + 1);
        }
        let v = pair_wins(&faces[0], &faces[1]);
        let balanced = v == pair_wins(&faces[1], &faces[2]) && v == pair_wins(&faces[2], &faces[0]);
        let dominant = 2 * v > (m * m) as u64;
        if balanced && dominant && want.is_none_or(|w| w == v) {
            out.push(faces);
        }
        return;
    }
    for d in 0..3 {
        if sizes[d] < m {
            sizes[d] += 1;
            owner.push(d as u8);
            collect(m, owner, sizes, out, want);
            owner.pop();
            sizes[d] -= 1;
        }
    }
}

/// Every canonical triple of `m`-sided dice, ordered as the cycle A, B, C,
/// that is balanced and non-transitive.
///
/// All `(3m)! / (m!)^3` assignments are visited; results come in
/// lexicographic order of the owner sequence of labels `1, 2, ..., 3m`.
/// Rotations of one cyclic set count as distinct results.
pub fn enumerate_balanced_triples(m: usize, options: EnumerationOptions) -> Result<Vec<DiceSet>> {
    if m == 0 {
        return Err(invalid("dice need at least one side"));
    }
    if m > MAX_ENUMERATION_SIDES && !options.allow_large {
        return Err(Error::CostGuard(format!(
            "enumerating {m}-sided triples is too expensive without an override"
        )));
    }

    // Fan out over the owners of the first few labels.
    let depth = (3 * m).min(3);
    let mut prefixes: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| (0..3u8).map(move |d| [p.as_slice(), &[d]].concat()))
            .filter(|p| (0..3u8).all(|d| p.iter().filter(|&&x| x == d).count() <= m))
            .collect();
    }
    let found: Vec<Vec<[Vec<u64>; 3]>> = prefixes
        .into_par_iter()
        .map(|mut owner| {
            let mut sizes = [0usize; 3];
            for &d in &owner {
                sizes[d as usize] += 1;
            }
            let mut out = Vec::new();
            collect(m, &mut owner, &mut sizes, &mut out, options.victories);
            out
        })
        .collect();

    found
        .into_iter()
        .flatten()
        .take(options.max_results.unwrap_or(usize::MAX))
        .map(|faces| {
            let dice = faces
                .into_iter()
                .enumerate()
                .map(|(i, f)| Die::new(die_name(i), f))
                .collect::<Result<Vec<_>>>()?;
            DiceSet::new(dice)
        })
        .collect()
}

/// A seeded Monte Carlo estimate of `P(a > b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Estimate {
    pub wins: u64,
    pub rolls: u64,
}

impl Estimate {
    pub fn value(&self) -> f64 {
        self.wins as f64 / self.rolls as f64
    }
}

/// Three binomial standard deviations of an estimate of `p` from `rolls` trials.
pub fn three_sigma(p: f64, rolls: u64) -> f64 {
    3.0 * (p * (1.0 - p) / rolls as f64).sqrt()
}

/// Rolls both dice `rolls` times with a ChaCha8 stream seeded by `seed`.
pub fn mc_estimate<L: PartialOrd>(a: &Die<L>, b: &Die<L>, rolls: u64, seed: u64) -> Result<Estimate> {
    if rolls == 0 {
        return Err(invalid("need at least one roll"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (fa, fb) = (a.faces(), b.faces());
    let mut wins = 0;
    for _ in 0..rolls {
        let x = &fa[rng.gen_range(0..fa.len())];
        let y = &fb[rng.gen_range(0..fb.len())];
        if x > y {
            wins += 1;
        }
    }
    Ok(Estimate { wins, rolls })
}

fn strongly_connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let reach_all = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                let arc = if forward { adj[u][v] } else { adj[v][u] };
                if arc && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    n > 0 && reach_all(true) && reach_all(false)
}

/// Tries every orientation of the missing pairs and reports whether any of
/// them leaves the digraph strongly connected.
pub fn brute_force_connectable(g: &Digraph) -> Result<bool> {
    let n = g.len();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::CostGuard(format!(
            "brute force over {n} vertices exceeds the limit of {MAX_BRUTE_FORCE_VERTICES}"
        )));
    }
    let missing = g.missing_pairs();
    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_arc(u, v)).collect()).collect();
    for mask in 0u64..(1u64 << missing.len()) {
        for (bit, &(u, v)) in missing.iter().enumerate() {
            let forward = mask >> bit & 1 == 1;
            adj[u][v] = forward;
            adj[v][u] = !forward;
        }
        if strongly_connected(&adj) {
            return Ok(true);
        }
    }
    Ok(false)
}
