//! Balanced non-transitive dice cycles of any length.
//!
//! A base triple is found by exhaustive search, then the cycle is grown one
//! die at a time: the new die copies the last die a tenth of a unit lower, just
//! enough of its smallest faces are raised a tenth above their partners
//! to bring the last die's lead back to the victorious count, and the set is
//! relabeled by rank.

use crate::dice::{die_name, is_balanced, is_non_transitive, normalize, DiceSet, Die, Rational};
use crate::error::{invalid, Error, Result};

/// Parameters for [`search_base_triple`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseTripleSearchConfig {
    sides: usize,
    target_victories: Option<u64>,
}

impl BaseTripleSearchConfig {
    pub fn new(sides: usize, target_victories: Option<u64>) -> Result<Self> {
        if sides < 3 {
            return Err(invalid(format!("base triple needs at least 3 sides, got {sides}")));
        }
        if let Some(v) = target_victories {
            let (lo, hi) = victory_range(sides);
            if v < lo || v > hi {
                return Err(invalid(format!(
                    "target of {v} victories is outside {lo}..={hi} for {sides} sides"
                )));
            }
        }
        Ok(BaseTripleSearchConfig {
            sides,
            target_victories,
        })
    }

    pub fn sides(&self) -> usize {
        self.sides
    }

    pub fn target_victories(&self) -> Option<u64> {
        self.target_victories
    }
}

/// Smallest dominating count and the largest count [`extend_cycle`] supports.
fn victory_range(m: usize) -> (u64, u64) {
    let m = m as u64;
    (m * m / 2 + 1, m * (m + 1) / 2)
}

/// Depth-first search over label assignments, smallest label first.
struct TripleSearch {
    m: usize,
    target: u64,
    sizes: [usize; 3],
    // wins[d] = victories of die d over die d+1 (mod 3) so far
    wins: [u64; 3],
    owner: Vec<usize>,
}

impl TripleSearch {
    fn run(m: usize, target: u64) -> Option<DiceSet> {
        let mut s = TripleSearch {
            m,
            target,
            sizes: [0; 3],
            wins: [0; 3],
            owner: Vec::with_capacity(3 * m),
        };
        // Rotating the dice maps solutions to solutions, so label 1 can sit on
        // the first die without losing the lexicographically first one.
        s.place(0);
        if !s.feasible() || !s.descend() {
            return None;
        }
        let mut faces: [Vec<u64>; 3] = Default::default();
        for (label, &d) in s.owner.iter().enumerate().rev() {
            faces[d].push(label as u64 + 1);
        }
        let dice = faces
            .into_iter()
            .enumerate()
            .map(|(i, f)| Die::new(die_name(i), f))
            .collect::<Result<Vec<_>>>()
            .ok()?;
        DiceSet::new(dice).ok()
    }

    fn place(&mut self, d: usize) {
        self.wins[d] += self.sizes[(d + 1) % 3] as u64;
        self.sizes[d] += 1;
        self.owner.push(d);
    }

    fn unplace(&mut self, d: usize) {
        self.owner.pop();
        self.sizes[d] -= 1;
        self.wins[d] -= self.sizes[(d + 1) % 3] as u64;
    }

    fn feasible(&self) -> bool {
        (0..3).all(|d| {
            let left = (self.m - self.sizes[d]) as u64;
            // Later faces of d exceed every face the next die holds now.
            let low = self.wins[d] + left * self.sizes[(d + 1) % 3] as u64;
            let high = self.wins[d] + left * self.m as u64;
            low <= self.target && self.target <= high
        })
    }

    fn descend(&mut self) -> bool {
        if self.owner.len() == 3 * self.m {
            return self.wins.iter().all(|&w| w == self.target);
        }
        for d in 0..3 {
            if self.sizes[d] == self.m {
                continue;
            }
            self.place(d);
            if self.feasible() && self.descend() {
                return true;
            }
            self.unplace(d);
        }
        false
    }
}

/// Searches for a balanced non-transitive triple of `m`-sided dice.
///
/// With a target, only that victory count is tried; otherwise counts are
/// tried upwards from the smallest dominating one and the first hit is
/// returned. `Ok(None)` means the requested count has no solution.
pub fn search_base_triple(config: &BaseTripleSearchConfig) -> Result<Option<DiceSet>> {
    let m = config.sides;
    match config.target_victories {
        Some(v) => Ok(TripleSearch::run(m, v)),
        None => {
            let lo = victory_range(m).0;
            let hi = (m * m) as u64;
            Ok((lo..=hi).find_map(|v| TripleSearch::run(m, v)))
        }
    }
}

/// The lexicographically first balanced non-transitive triple of `m`-sided
/// dice with the smallest possible victorious probability.
///
/// Labels `1..=3m` are assigned in increasing order, trying dice A, B, C in
/// turn. For `m = 3` this yields `{9,5,1}, {8,4,3}, {7,6,2}` at 5/9.
pub fn base_triple(m: usize) -> Result<DiceSet> {
    let config = BaseTripleSearchConfig::new(m, None)?;
    search_base_triple(&config)?
        .ok_or_else(|| Error::Internal(format!("no balanced triple found for {m} sides")))
}

/// Number of single-face raises needed to extend a cycle with victory count `v`.
pub fn raises_needed(m: usize, victories: u64) -> Result<u64> {
    let (_, hi) = victory_range(m);
    if victories > hi {
        return Err(Error::UnsupportedBase(format!(
            "victory count {victories} exceeds {hi}, the most a copied die concedes"
        )));
    }
    Ok(hi - victories)
}

/// Appends one die to a canonical balanced non-transitive set, keeping the
/// victorious probability.
///
/// The new die copies the last die with every label lowered by 1/10, then its
/// `m(m+1)/2 - V` smallest labels are raised to 1/10 above their originals.
/// Each raise crosses only the original label, so the last die loses exactly
/// one victory per raise and the first die's matchup is untouched. The offset
/// stays below 1/2 so a raised face never meets the next face of its own die.
pub fn extend_cycle(s: &DiceSet) -> Result<DiceSet> {
    if !s.is_canonical() {
        return Err(invalid("extend_cycle needs a canonical dice set"));
    }
    if !is_non_transitive(s)? {
        return Err(invalid("dice set is not non-transitive"));
    }
    let p = is_balanced(s)?.ok_or_else(|| invalid("dice set is not balanced"))?;
    let m = s.sides();
    let raises = raises_needed(m, p.numerator())? as usize;
    if raises > m {
        return Err(Error::UnsupportedBase(format!(
            "{raises} raises needed but the die has only {m} faces"
        )));
    }

    let offset = Rational::new(1, 10);
    let last = s.die(s.len() - 1);
    let mut faces: Vec<Rational> = last
        .faces()
        .iter()
        .map(|&f| Rational::from_integer(f as i64) - offset)
        .collect();
    for f in faces.iter_mut().rev().take(raises) {
        *f += offset * 2;
    }
    let name = (s.len()..)
        .map(die_name)
        .find(|n| s.index_of(n).is_none())
        .expect("unbounded name supply");

    let mut dice = s.to_rational().into_dice();
    dice.push(Die::new(name, faces)?);
    let out = normalize(&dice)?;

    debug_assert!(is_non_transitive(&out)?);
    if is_balanced(&out)? != Some(p) {
        return Err(Error::Internal("extension changed the victorious probability".into()));
    }
    Ok(out)
}

/// A balanced non-transitive set of `n` dice with `m` sides each, labeled `1..=n*m`.
pub fn build_cycle_set(n: usize, m: usize) -> Result<DiceSet> {
    if n < 3 || m < 3 {
        return Err(invalid(format!("need at least 3 dice and 3 sides, got {n} x {m}")));
    }
    let mut s = base_triple(m)?;
    for _ in 3..n {
        s = extend_cycle(&s)?;
    }
    Ok(s)
}
