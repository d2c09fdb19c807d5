//! Dice sets realizing tournaments.
//!
//! A strong tournament on `n` vertices is realized by `2n - 3`-sided dice:
//! a balanced 3-sided cycle along a Hamilton cycle, shifted up by `n^2 - 3n`,
//! then two labels above and two below the base for every chord. Any other
//! tournament is split into strong components that are built separately,
//! brought to a common side count and stacked in condensation order.

use crate::cycle::build_cycle_set;
use crate::dice::{realizes, victories, DiceSet, Die, RealizationReport};
use crate::error::{invalid, Error, Result};
use crate::graph::{hamilton_cycle, strong_components, Tournament};

/// Adds `k` to every label. The result must stay positive.
pub fn shift_labels(s: &DiceSet, k: i64) -> Result<DiceSet> {
    let dice = s
        .dice()
        .iter()
        .map(|d| {
            let faces = d
                .faces()
                .iter()
                .map(|&f| {
                    let v = f as i64 + k;
                    if v <= 0 {
                        Err(invalid(format!("shifting {f} by {k} leaves no positive label")))
                    } else {
                        Ok(v as u64)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Die::new(d.name(), faces)
        })
        .collect::<Result<Vec<_>>>()?;
    DiceSet::new(dice)
}

/// Replaces the label of rank `k` with the `r` labels `r(k-1)+1 ..= rk` on
/// the same die. Every victory count is multiplied by `r^2`.
pub fn blow_up(s: &DiceSet, r: u64) -> Result<DiceSet> {
    if r < 1 {
        return Err(invalid("blow-up factor must be at least 1"));
    }
    if !s.is_canonical() {
        return Err(invalid("blow-up needs a canonical dice set"));
    }
    let dice = s
        .dice()
        .iter()
        .map(|d| {
            let faces = d
                .faces()
                .iter()
                .flat_map(|&k| (r * (k - 1) + 1..=r * k).rev())
                .collect();
            Die::new(d.name(), faces)
        })
        .collect::<Result<Vec<_>>>()?;
    DiceSet::new(dice)
}

/// Label schedule for one chord stage of an `n`-vertex construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordPlan {
    /// 1-based stage index.
    pub stage: usize,
    pub winner: usize,
    pub loser: usize,
    /// `(smaller, larger)` labels above the shifted base.
    pub above: (u64, u64),
    /// `(smaller, larger)` labels below the shifted base.
    pub below: (u64, u64),
    /// Victories of the winner over the loser on the 3-sided base.
    pub base_victories: u64,
}

impl ChordPlan {
    /// Labels gained by the winner: the larger one above, and below the
    /// smaller one if the base already gave it 5 of 9, else the larger.
    pub fn winner_labels(&self) -> (u64, u64) {
        let below = if self.base_victories == 5 {
            self.below.0
        } else {
            self.below.1
        };
        (self.above.1, below)
    }

    pub fn loser_labels(&self) -> (u64, u64) {
        let below = if self.base_victories == 5 {
            self.below.1
        } else {
            self.below.0
        };
        (self.above.0, below)
    }
}

/// Number of chords of an `n`-vertex tournament relative to a Hamilton cycle.
pub fn chord_count(n: usize) -> usize {
    n * n.saturating_sub(3) / 2
}

/// Dice in the middle of chord augmentation.
///
/// Die `i` belongs to the `i`-th vertex of the Hamilton cycle. Dice gain
/// faces at different stages, so face counts differ until every chord is in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordState {
    n: usize,
    base: Vec<Die>,
    dice: Vec<Die>,
    used: Vec<bool>,
}

impl ChordState {
    /// Starts from a 3-sided balanced cycle set, shifted up by `n^2 - 3n`.
    pub fn new(base: &DiceSet) -> Result<Self> {
        let n = base.len();
        if n < 3 || base.sides() != 3 || !base.is_canonical() {
            return Err(invalid("chord augmentation needs a canonical 3-sided set of at least 3 dice"));
        }
        let shifted = shift_labels(base, (n * n - 3 * n) as i64)?;
        let dice = shifted.into_dice();
        Ok(ChordState {
            n,
            base: dice.clone(),
            dice,
            used: vec![false; chord_count(n)],
        })
    }

    pub fn dice(&self) -> &[Die] {
        &self.dice
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_complete(&self) -> bool {
        self.used.iter().all(|&u| u)
    }

    /// The label schedule for chord `winner -> loser` at `stage`.
    pub fn plan(&self, winner: usize, loser: usize, stage: usize) -> Result<ChordPlan> {
        let n = self.n;
        if winner >= n || loser >= n || winner == loser {
            return Err(invalid(format!("bad chord ({winner}, {loser})")));
        }
        if (winner + 1) % n == loser || (loser + 1) % n == winner {
            return Err(invalid(format!("({winner}, {loser}) is a cycle pair, not a chord")));
        }
        if stage == 0 || stage > self.used.len() {
            return Err(invalid(format!(
                "stage {stage} outside 1..={}",
                self.used.len()
            )));
        }
        let base_victories = victories(&self.base[winner], &self.base[loser])?;
        if !matches!(base_victories, 4 | 5) {
            return Err(Error::ConstructionInvariant(format!(
                "base victories of {} over {} is {base_victories}, expected 4 or 5",
                self.base[winner].name(),
                self.base[loser].name()
            )));
        }
        let (n, t) = (n as u64, stage as u64);
        let top = n * n + 2 * t;
        let bottom = n * n - 3 * n - 2 * t + 2;
        Ok(ChordPlan {
            stage,
            winner,
            loser,
            above: (top - 1, top),
            below: (bottom - 1, bottom),
            base_victories,
        })
    }

    /// Applies chord `winner -> loser` using the labels of `stage`.
    pub fn add_chord(&self, winner: usize, loser: usize, stage: usize) -> Result<ChordState> {
        let plan = self.plan(winner, loser, stage)?;
        if self.used[stage - 1] {
            return Err(invalid(format!("stage {stage} already used")));
        }
        let mut next = self.clone();
        next.used[stage - 1] = true;
        let (wa, wb) = plan.winner_labels();
        let (la, lb) = plan.loser_labels();
        next.dice[winner] = grow(&self.dice[winner], [wa, wb])?;
        next.dice[loser] = grow(&self.dice[loser], [la, lb])?;
        Ok(next)
    }

    /// Finished dice as a set; fails while chords are outstanding.
    pub fn into_dice_set(self) -> Result<DiceSet> {
        if !self.is_complete() {
            return Err(invalid("chord stages outstanding"));
        }
        DiceSet::new(self.dice)
    }
}

fn grow(d: &Die, labels: [u64; 2]) -> Result<Die> {
    let mut faces = d.faces().to_vec();
    faces.extend(labels);
    Die::from_unsorted(d.name(), faces)
}

/// Dice realizing a tournament, one die per vertex and named after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TournamentDice {
    pub dice: DiceSet,
    /// Vertex index of each die.
    pub mapping: Vec<usize>,
    pub report: RealizationReport,
}

/// Realizes a strong tournament with balanced non-transitive `2n-3`-sided
/// dice, listed in Hamilton-cycle order.
///
/// `chord_order` lists every non-cycle arc as `(winner, loser)` vertex
/// names; by default chords go in increasing order of the winner's and then
/// the loser's cycle position.
pub fn build_strong_tournament_dice(
    t: &Tournament,
    chord_order: Option<&[(String, String)]>,
) -> Result<TournamentDice> {
    let n = t.len();
    let cycle = hamilton_cycle(t)?;
    let mut position = vec![0; n];
    for (p, &v) in cycle.iter().enumerate() {
        position[v] = p;
    }

    let mut chords: Vec<(usize, usize)> = t
        .as_digraph()
        .arcs()
        .map(|(u, v)| (position[u], position[v]))
        .filter(|&(pu, pv)| (pu + 1) % n != pv)
        .collect();
    chords.sort_unstable();

    let order = match chord_order {
        None => chords,
        Some(names) => {
            let g = t.as_digraph();
            let mut given = names
                .iter()
                .map(|(w, l)| {
                    let w = g.index_of(w).ok_or_else(|| invalid(format!("unknown vertex {w}")))?;
                    let l = g.index_of(l).ok_or_else(|| invalid(format!("unknown vertex {l}")))?;
                    Ok((position[w], position[l]))
                })
                .collect::<Result<Vec<_>>>()?;
            let listed = given.clone();
            given.sort_unstable();
            if given != chords {
                return Err(invalid(
                    "chord order is not a permutation of the tournament's chords",
                ));
            }
            listed
        }
    };

    let base = build_cycle_set(n, 3)?;
    let base = DiceSet::new(
        base.into_dice()
            .into_iter()
            .zip(&cycle)
            .map(|(d, &v)| d.renamed(t.as_digraph().name(v)))
            .collect(),
    )?;
    let mut state = ChordState::new(&base)?;
    for (stage, &(w, l)) in order.iter().enumerate() {
        state = state.add_chord(w, l, stage + 1)?;
    }
    let dice = state.into_dice_set()?;
    if !dice.is_canonical() {
        return Err(Error::Internal("chord labels do not tile 1..n(2n-3)".into()));
    }
    let report = realizes(&dice, t.as_digraph(), &cycle)?;
    Ok(TournamentDice {
        dice,
        mapping: cycle,
        report,
    })
}

/// Realizes any tournament.
///
/// Each strong component gets its own dice (a single 1-sided die for a
/// singleton); all components are blown up to the least common multiple of
/// their side counts and stacked so that a dominating component's labels all
/// exceed a dominated one's. Dice are listed component by component in
/// condensation order.
pub fn build_tournament_dice(t: &Tournament) -> Result<TournamentDice> {
    let cond = strong_components(t.as_digraph());
    let mut parts: Vec<(DiceSet, Vec<usize>)> = Vec::with_capacity(cond.len());
    for comp in cond.components() {
        let part = match comp.len() {
            1 => {
                let die = Die::new(t.as_digraph().name(comp[0]), vec![1])?;
                (DiceSet::new(vec![die])?, comp.clone())
            }
            2 => {
                return Err(Error::Internal(
                    "tournament has a strong component of size 2".into(),
                ))
            }
            _ => {
                let sub = t.induced(comp);
                let built = build_strong_tournament_dice(&sub, None)?;
                let mapping = built.mapping.iter().map(|&i| comp[i]).collect();
                (built.dice, mapping)
            }
        };
        parts.push(part);
    }

    let sides = parts
        .iter()
        .fold(1u64, |acc, (s, _)| num_integer::lcm(acc, s.sides() as u64));
    let mut dice = Vec::with_capacity(t.len());
    let mut mapping = Vec::with_capacity(t.len());
    let mut below: u64 = parts.iter().map(|(s, _)| s.len() as u64).sum::<u64>() * sides;
    for (part, map) in parts {
        let grown = blow_up(&part, sides / part.sides() as u64)?;
        below -= grown.len() as u64 * sides;
        let stacked = shift_labels(&grown, below as i64)?;
        dice.extend(stacked.into_dice());
        mapping.extend(map);
    }
    let dice = DiceSet::new(dice)?;
    let report = realizes(&dice, t.as_digraph(), &mapping)?;
    Ok(TournamentDice {
        dice,
        mapping,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dice::{probability, victory_matrix};
    use crate::graph::Digraph;

    fn set(rows: &[(&str, &[u64])]) -> DiceSet {
        DiceSet::new(rows.iter().map(|(n, f)| Die::new(*n, f.to_vec()).unwrap()).collect()).unwrap()
    }

    fn five() -> DiceSet {
        set(&[
            ("A", &[15, 7, 1]),
            ("B", &[14, 6, 5]),
            ("C", &[13, 10, 2]),
            ("D", &[12, 9, 3]),
            ("E", &[11, 8, 4]),
        ])
    }

    #[test]
    fn shift_examples() {
        let shifted = shift_labels(&five(), 10).unwrap();
        assert_eq!(
            shifted,
            set(&[
                ("A", &[25, 17, 11]),
                ("B", &[24, 16, 15]),
                ("C", &[23, 20, 12]),
                ("D", &[22, 19, 13]),
                ("E", &[21, 18, 14]),
            ])
        );
        assert_eq!(shift_labels(&five(), 0).unwrap(), five());
        let one = set(&[("A", &[3, 2, 1])]);
        assert_eq!(shift_labels(&one, 2).unwrap(), set(&[("A", &[5, 4, 3])]));
        assert!(shift_labels(&one, -1).is_err());
    }

    #[test]
    fn blow_up_examples() {
        assert_eq!(blow_up(&five(), 1).unwrap(), five());
        assert_eq!(blow_up(&set(&[("A", &[1])]), 3).unwrap(), set(&[("A", &[3, 2, 1])]));
        assert!(blow_up(&five(), 0).is_err());
        let triple = set(&[("A", &[9, 5, 1]), ("B", &[8, 4, 3]), ("C", &[7, 6, 2])]);
        let big = blow_up(&triple, 2).unwrap();
        assert_eq!(big.sides(), 6);
        assert!(big.is_canonical());
        assert_eq!(victory_matrix(&big).rows(), victory_matrix(&triple).scaled(4).rows());
    }

    #[test]
    fn first_two_chords_follow_worked_example() {
        let state = ChordState::new(&five()).unwrap();
        let plan = state.plan(0, 2, 1).unwrap();
        assert_eq!(plan.base_victories, 4);
        assert_eq!(plan.winner_labels(), (27, 10));
        assert_eq!(plan.loser_labels(), (26, 9));
        let state = state.add_chord(0, 2, 1).unwrap();
        assert_eq!(state.dice()[0].faces(), &[27, 25, 17, 11, 10]);
        assert_eq!(state.dice()[2].faces(), &[26, 23, 20, 12, 9]);
        assert_eq!(probability(&state.dice()[0], &state.dice()[2]).unwrap().to_string(), "13/25");

        let plan = state.plan(1, 3, 2).unwrap();
        assert_eq!(plan.base_victories, 5);
        assert_eq!(plan.winner_labels(), (29, 7));
        assert_eq!(plan.loser_labels(), (28, 8));
        let state = state.add_chord(1, 3, 2).unwrap();
        assert_eq!(probability(&state.dice()[1], &state.dice()[3]).unwrap().to_string(), "13/25");
        assert!(state.add_chord(0, 3, 2).is_err());
    }

    #[test]
    fn chord_errors() {
        let state = ChordState::new(&five()).unwrap();
        assert!(state.plan(0, 1, 1).is_err());
        assert!(state.plan(0, 0, 1).is_err());
        assert!(state.plan(0, 2, 6).is_err());
        assert!(state.plan(0, 2, 0).is_err());
        assert!(state.clone().into_dice_set().is_err());

        // A base whose chord count is 6 of 9 trips the invariant check.
        let odd = set(&[
            ("A", &[15, 14, 1]),
            ("B", &[13, 7, 2]),
            ("C", &[12, 6, 3]),
            ("D", &[11, 8, 4]),
            ("E", &[10, 9, 5]),
        ]);
        let state = ChordState::new(&odd).unwrap();
        assert!(matches!(state.plan(0, 2, 1), Err(Error::ConstructionInvariant(_))));
    }

    #[test]
    fn three_cycle_needs_no_chords() {
        let g = Digraph::with_arcs(&["x", "y", "z"], &[("x", "y"), ("y", "z"), ("z", "x")]).unwrap();
        let t = Tournament::new(g).unwrap();
        let built = build_strong_tournament_dice(&t, None).unwrap();
        assert_eq!(built.dice.sides(), 3);
        assert_eq!(
            built.dice,
            set(&[("x", &[9, 5, 1]), ("y", &[8, 4, 3]), ("z", &[7, 6, 2])])
        );
        assert!(built.report.realized());
        assert_eq!(build_tournament_dice(&t).unwrap(), built);
    }

    #[test]
    fn transitive_gets_one_sided_dice() {
        let g = Digraph::with_arcs(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c")]).unwrap();
        let t = Tournament::new(g).unwrap();
        let built = build_tournament_dice(&t).unwrap();
        assert_eq!(built.dice, set(&[("a", &[3]), ("b", &[2]), ("c", &[1])]));
        assert!(built.report.realized());
        assert!(build_strong_tournament_dice(&t, None).is_err());
    }

    #[test]
    fn cycle_over_sink() {
        let g = Digraph::with_arcs(
            &["A", "B", "C", "S"],
            &[("A", "B"), ("B", "C"), ("C", "A"), ("A", "S"), ("B", "S"), ("C", "S")],
        )
        .unwrap();
        let t = Tournament::new(g).unwrap();
        let built = build_tournament_dice(&t).unwrap();
        assert_eq!(
            built.dice,
            set(&[("A", &[12, 8, 4]), ("B", &[11, 7, 6]), ("C", &[10, 9, 5]), ("S", &[3, 2, 1])])
        );
        let m = victory_matrix(&built.dice);
        for i in 0..3 {
            assert_eq!(m.get(i, 3), 9);
        }
        assert!(built.report.realized());
    }

    #[test]
    fn bad_chord_order() {
        let t = crate::graph::random_strong_tournament(5, 1).unwrap();
        let wrong = vec![("A".to_string(), "B".to_string())];
        assert!(build_strong_tournament_dice(&t, Some(&wrong)).is_err());
    }
}
