//! Dice, dice sets and the exact probability engine.
//!
//! A die is a fair die whose faces carry distinct labels; dice in a set never
//! share a label, so two dice can never tie. All probabilities are kept as
//! integer victory counts over `m_a * m_b` and compared by cross-multiplication.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;

use crate::error::{invalid, Result};
use crate::graph::Digraph;

/// Exact rational label used while a construction is in flight.
pub type Rational = Ratio<i64>;

/// Name for the `index`-th die of a construction: `A`..`Z`, then `AA`, `AB`, ...
pub fn die_name(index: usize) -> String {
    let mut n = index + 1;
    let mut out = Vec::new();
    while n > 0 {
        n -= 1;
        out.push(b'A' + (n % 26) as u8);
        n /= 26;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

/// Checks a die or vertex name: nonempty, no whitespace, no `:`, `#`, `,` or `>`.
pub(crate) fn validate_name(name: &str) -> Result<()> {
    if name.is_empty() {
        return Err(invalid("empty name"));
    }
    if name
        .chars()
        .any(|c| c.is_whitespace() || matches!(c, ':' | '#' | ',' | '>'))
    {
        return Err(invalid(format!("name {name:?} contains a reserved character")));
    }
    Ok(())
}

/// One fair die: a name and a strictly descending list of labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Die<L = u64> {
    name: String,
    faces: Vec<L>,
}

impl<L: Ord> Die<L> {
    /// Builds a die from faces that are already strictly descending.
    pub fn new(name: impl Into<String>, faces: Vec<L>) -> Result<Self> {
        let name = name.into();
        validate_name(&name)?;
        if faces.is_empty() {
            return Err(invalid(format!("die {name} has no faces")));
        }
        if faces.windows(2).any(|w| w[0] <= w[1]) {
            return Err(invalid(format!(
                "faces of die {name} are not strictly descending"
            )));
        }
        Ok(Die { name, faces })
    }

    /// Builds a die from faces in any order; repeated labels are rejected.
    pub fn from_unsorted(name: impl Into<String>, mut faces: Vec<L>) -> Result<Self> {
        faces.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(name, faces)
    }
}

impl<L> Die<L> {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Labels, largest first.
    pub fn faces(&self) -> &[L] {
        &self.faces
    }

    pub fn sides(&self) -> usize {
        self.faces.len()
    }

    pub(crate) fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

impl<L: fmt::Display> fmt::Display for Die<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.name)?;
        for face in &self.faces {
            write!(f, " {face}")?;
        }
        Ok(())
    }
}

/// An ordered collection of equally-sided dice with pairwise disjoint labels.
///
/// The order of the dice is the intended cycle `A_1 > A_2 > ... > A_n > A_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiceSet<L = u64> {
    dice: Vec<Die<L>>,
}

impl<L: Ord + Clone> DiceSet<L> {
    pub fn new(dice: Vec<Die<L>>) -> Result<Self> {
        if let Some(first) = dice.first() {
            let m = first.sides();
            if let Some(d) = dice.iter().find(|d| d.sides() != m) {
                return Err(invalid(format!(
                    "die {} has {} faces, expected {m}",
                    d.name(),
                    d.sides()
                )));
            }
        }
        let mut names = HashSet::new();
        for d in &dice {
            if !names.insert(d.name()) {
                return Err(invalid(format!("duplicate die name {}", d.name())));
            }
        }
        check_disjoint(&dice)?;
        Ok(DiceSet { dice })
    }
}

impl<L> DiceSet<L> {
    pub fn dice(&self) -> &[Die<L>] {
        &self.dice
    }

    pub fn die(&self, index: usize) -> &Die<L> {
        &self.dice[index]
    }

    /// Number of dice.
    pub fn len(&self) -> usize {
        self.dice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dice.is_empty()
    }

    /// Common face count `m` (0 for an empty set).
    pub fn sides(&self) -> usize {
        self.dice.first().map_or(0, Die::sides)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.dice.iter().position(|d| d.name() == name)
    }

    pub fn into_dice(self) -> Vec<Die<L>> {
        self.dice
    }
}

impl DiceSet<u64> {
    /// True when the labels are exactly `1..=n*m`.
    pub fn is_canonical(&self) -> bool {
        let mut labels = self.labels();
        labels.sort_unstable();
        labels.iter().zip(1u64..).all(|(&l, k)| l == k)
    }

    /// All labels, die by die.
    pub fn labels(&self) -> Vec<u64> {
        self.dice.iter().flat_map(|d| d.faces().iter().copied()).collect()
    }

    /// Lifts integer labels into the rational construction domain.
    pub fn to_rational(&self) -> DiceSet<Rational> {
        DiceSet {
            dice: self
                .dice
                .iter()
                .map(|d| Die {
                    name: d.name.clone(),
                    faces: d.faces.iter().map(|&f| Rational::from_integer(f as i64)).collect(),
                })
                .collect(),
        }
    }
}

impl<L: fmt::Display> fmt::Display for DiceSet<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.dice {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

fn check_disjoint<L: Ord + Clone>(dice: &[Die<L>]) -> Result<()> {
    let mut all: Vec<(&L, usize)> = dice
        .iter()
        .enumerate()
        .flat_map(|(i, d)| d.faces().iter().map(move |f| (f, i)))
        .collect();
    all.sort_by(|a, b| a.0.cmp(b.0));
    for w in all.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(invalid(format!(
                "dice {} and {} share a label",
                dice[w[0].1].name(),
                dice[w[1].1].name()
            )));
        }
    }
    Ok(())
}

/// An exact probability `numerator / denominator`.
///
/// The denominator is the number of face pairs (`m^2` for equal dice) and is
/// kept unreduced; equality and ordering use cross-multiplication.
#[derive(Debug, Clone, Copy)]
pub struct Probability {
    numerator: u64,
    denominator: u64,
}

impl Probability {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 || numerator > denominator {
            return Err(invalid(format!(
                "{numerator}/{denominator} is not a probability"
            )));
        }
        Ok(Probability {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// Strictly greater than one half.
    pub fn exceeds_half(&self) -> bool {
        2 * u128::from(self.numerator) > u128::from(self.denominator)
    }

    /// Lowest-terms numerator and denominator.
    pub fn reduced(&self) -> (u64, u64) {
        let g = num_integer::gcd(self.numerator, self.denominator);
        (self.numerator / g, self.denominator / g)
    }

    /// Lossy conversion for display and Monte Carlo comparison only.
    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl PartialEq for Probability {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Probability {}

impl PartialOrd for Probability {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Probability {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = u128::from(self.numerator) * u128::from(other.denominator);
        let rhs = u128::from(other.numerator) * u128::from(self.denominator);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Number of face pairs `(x, y)` with `x` on `a`, `y` on `b` and `x > y`.
///
/// Fails if the two dice share a label.
pub fn victories<L: Ord>(a: &Die<L>, b: &Die<L>) -> Result<u64> {
    // Walk both face lists from the smallest label upwards.
    let bf = b.faces();
    let mut below = 0usize;
    let mut count = 0u64;
    for x in a.faces().iter().rev() {
        while below < bf.len() && bf[bf.len() - 1 - below] < *x {
            below += 1;
        }
        if below < bf.len() && bf[bf.len() - 1 - below] == *x {
            return Err(invalid(format!(
                "dice {} and {} share a label",
                a.name(),
                b.name()
            )));
        }
        count += below as u64;
    }
    Ok(count)
}

/// `P(a > b)` as an exact fraction over `m_a * m_b`.
pub fn probability<L: Ord>(a: &Die<L>, b: &Die<L>) -> Result<Probability> {
    let wins = victories(a, b)?;
    Probability::new(wins, (a.sides() * b.sides()) as u64)
}

/// Pairwise victory counts of a dice set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VictoryMatrix {
    sides: usize,
    counts: Vec<Vec<u64>>,
}

impl VictoryMatrix {
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn sides(&self) -> usize {
        self.sides
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i][j]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn probability(&self, i: usize, j: usize) -> Probability {
        Probability {
            numerator: self.counts[i][j],
            denominator: (self.sides * self.sides) as u64,
        }
    }

    /// Entrywise multiple, used to compare blown-up sets.
    pub fn scaled(&self, factor: u64) -> VictoryMatrix {
        VictoryMatrix {
            sides: self.sides,
            counts: self
                .counts
                .iter()
                .map(|row| row.iter().map(|c| c * factor).collect())
                .collect(),
        }
    }
}

pub fn victory_matrix<L: Ord>(s: &DiceSet<L>) -> VictoryMatrix {
    let n = s.len();
    let counts = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        0
                    } else {
                        victories(s.die(i), s.die(j)).expect("dice set labels are disjoint")
                    }
                })
                .collect()
        })
        .collect();
    VictoryMatrix {
        sides: s.sides(),
        counts,
    }
}

/// Probabilities `P(dice[i] > dice[i+1 mod n])` in list order.
pub fn cycle_probabilities<L: Ord>(s: &DiceSet<L>) -> Vec<Probability> {
    let n = s.len();
    (0..n)
        .map(|i| probability(s.die(i), s.die((i + 1) % n)).expect("dice set labels are disjoint"))
        .collect()
}

fn require_cycle<L>(s: &DiceSet<L>) -> Result<()> {
    if s.len() < 3 {
        return Err(invalid(format!(
            "a cycle needs at least 3 dice, got {}",
            s.len()
        )));
    }
    Ok(())
}

/// Every die beats the next one in list order, and the last beats the first.
pub fn is_non_transitive<L: Ord>(s: &DiceSet<L>) -> Result<bool> {
    require_cycle(s)?;
    Ok(cycle_probabilities(s).iter().all(Probability::exceeds_half))
}

/// The common cycle probability when all `n` cycle edges agree.
///
/// Dominance is not required; conjoin with [`is_non_transitive`] for that.
pub fn is_balanced<L: Ord>(s: &DiceSet<L>) -> Result<Option<Probability>> {
    require_cycle(s)?;
    let probs = cycle_probabilities(s);
    let first = probs[0];
    Ok(probs.iter().all(|p| *p == first).then_some(first))
}

/// Relabels by global rank (smallest label becomes 1), keeping names and order.
///
/// Victory counts are unchanged because only relative order matters.
pub fn normalize<L: Ord + Clone>(dice: &[Die<L>]) -> Result<DiceSet<u64>> {
    let mut slots: Vec<(&L, usize, usize)> = dice
        .iter()
        .enumerate()
        .flat_map(|(i, d)| d.faces().iter().enumerate().map(move |(k, f)| (f, i, k)))
        .collect();
    slots.sort_by(|a, b| a.0.cmp(b.0));
    if let Some(w) = slots.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(invalid(format!(
            "duplicate label on dice {} and {}",
            dice[w[0].1].name(),
            dice[w[1].1].name()
        )));
    }
    let mut faces: Vec<Vec<u64>> = dice.iter().map(|d| vec![0; d.sides()]).collect();
    for (rank, (_, i, k)) in slots.into_iter().enumerate() {
        faces[i][k] = rank as u64 + 1;
    }
    let out = dice
        .iter()
        .zip(faces)
        .map(|(d, f)| Die::new(d.name(), f))
        .collect::<Result<Vec<_>>>()?;
    DiceSet::new(out)
}

impl<L: Ord + Clone> DiceSet<L> {
    /// Rank relabeling of this set; see [`normalize`].
    pub fn normalized(&self) -> DiceSet<u64> {
        normalize(&self.dice).expect("dice set labels are disjoint")
    }
}

/// One ordered pair of dice and its exact winning probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairProbability {
    pub winner: usize,
    pub loser: usize,
    pub probability: Probability,
}

/// Outcome of checking a dice set against a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationReport {
    /// `(die name, vertex name)` in dice order.
    pub mapping: Vec<(String, String)>,
    /// Every ordered pair `(i, j)` where die `i` beats die `j` with probability above one half.
    pub dominant: Vec<PairProbability>,
    /// Dominant pairs whose image is not an arc of the digraph.
    pub violations: Vec<PairProbability>,
}

impl RealizationReport {
    pub fn realized(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every strictly winning pair of dice maps onto an arc of `g`.
///
/// `mapping[i]` is the vertex index of die `i`; it must be a bijection onto
/// the vertices of `g`.
pub fn realizes<L: Ord>(s: &DiceSet<L>, g: &Digraph, mapping: &[usize]) -> Result<RealizationReport> {
    if mapping.len() != s.len() || s.len() != g.len() {
        return Err(invalid(format!(
            "mapping covers {} of {} dice onto {} vertices",
            mapping.len(),
            s.len(),
            g.len()
        )));
    }
    let mut seen = vec![false; g.len()];
    for &v in mapping {
        if v >= g.len() || std::mem::replace(&mut seen[v], true) {
            return Err(invalid("mapping is not one-to-one onto the vertices"));
        }
    }
    let matrix = victory_matrix(s);
    let mut dominant = Vec::new();
    let mut violations = Vec::new();
    for i in 0..s.len() {
        for j in 0..s.len() {
            if i == j {
                continue;
            }
            let p = matrix.probability(i, j);
            if p.exceeds_half() {
                let pair = PairProbability {
                    winner: i,
                    loser: j,
                    probability: p,
                };
                if !g.has_arc(mapping[i], mapping[j]) {
                    violations.push(pair.clone());
                }
                dominant.push(pair);
            }
        }
    }
    Ok(RealizationReport {
        mapping: s
            .dice()
            .iter()
            .zip(mapping)
            .map(|(d, &v)| (d.name().to_string(), g.name(v).to_string()))
            .collect(),
        dominant,
        violations,
    })
}

/// [`realizes`] with each die mapped to the vertex of the same name.
pub fn realizes_by_name<L: Ord>(s: &DiceSet<L>, g: &Digraph) -> Result<RealizationReport> {
    let mapping = s
        .dice()
        .iter()
        .map(|d| {
            g.index_of(d.name())
                .ok_or_else(|| invalid(format!("die {} has no vertex of the same name", d.name())))
        })
        .collect::<Result<Vec<_>>>()?;
    realizes(s, g, &mapping)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn die(name: &str, faces: &[u64]) -> Die {
        Die::new(name, faces.to_vec()).unwrap()
    }

    fn set(rows: &[(&str, &[u64])]) -> DiceSet {
        DiceSet::new(rows.iter().map(|(n, f)| die(n, f)).collect()).unwrap()
    }

    fn brute_victories(a: &[u64], b: &[u64]) -> u64 {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| (x, y)))
            .filter(|(x, y)| x > y)
            .count() as u64
    }

    fn worked_triple() -> DiceSet {
        set(&[("A", &[9, 5, 1]), ("B", &[8, 4, 3]), ("C", &[7, 6, 2])])
    }

    #[test]
    fn die_names_roll_over() {
        assert_eq!(die_name(0), "A");
        assert_eq!(die_name(25), "Z");
        assert_eq!(die_name(26), "AA");
        assert_eq!(die_name(27), "AB");
    }

    #[test]
    fn die_rejects_bad_faces() {
        assert!(Die::new("A", vec![3u64, 3, 1]).is_err());
        assert!(Die::new("A", vec![1u64, 2]).is_err());
        assert!(Die::<u64>::new("A", vec![]).is_err());
        assert!(Die::new("", vec![1u64]).is_err());
        assert!(Die::new("a b", vec![1u64]).is_err());
        assert!(Die::from_unsorted("A", vec![2u64, 2]).is_err());
        assert_eq!(Die::from_unsorted("A", vec![1u64, 3, 2]).unwrap().faces(), &[3, 2, 1]);
    }

    #[test]
    fn dice_set_rejects_overlap_and_mixed_sides() {
        assert!(DiceSet::new(vec![die("A", &[3, 1]), die("B", &[2, 1])]).is_err());
        assert!(DiceSet::new(vec![die("A", &[3, 1]), die("B", &[2])]).is_err());
        assert!(DiceSet::new(vec![die("A", &[3, 1]), die("A", &[4, 2])]).is_err());
    }

    #[test]
    fn victories_examples() {
        assert_eq!(victories(&die("A", &[9, 5, 1]), &die("B", &[8, 4, 3])).unwrap(), 5);
        assert_eq!(victories(&die("A", &[6, 5, 4]), &die("B", &[3, 2, 1])).unwrap(), 9);
        let a = die("A", &[35, 27, 25, 17, 11, 10, 2]);
        let c = die("C", &[33, 26, 23, 20, 12, 9, 3]);
        assert_eq!(victories(&a, &c).unwrap(), 25);
        assert_eq!(brute_victories(a.faces(), c.faces()), 25);
    }

    #[test]
    fn victories_rejects_shared_label() {
        let err = victories(&die("A", &[5, 3]), &die("B", &[4, 3])).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        assert!(victories(&die("A", &[5, 3]), &die("B", &[5, 1])).is_err());
    }

    #[test]
    fn probability_examples() {
        let p = probability(&die("A", &[9, 5, 1]), &die("B", &[8, 4, 3])).unwrap();
        assert_eq!((p.numerator(), p.denominator()), (5, 9));
        let p = probability(&die("X", &[4, 2]), &die("Y", &[3, 1])).unwrap();
        assert_eq!(p, Probability::new(3, 4).unwrap());
        let p = probability(&die("A", &[15, 7, 1]), &die("C", &[13, 10, 2])).unwrap();
        assert_eq!(p.to_string(), "4/9");
        assert!(!p.exceeds_half());
    }

    #[test]
    fn probability_compares_exactly() {
        let a = Probability::new(20, 36).unwrap();
        let b = Probability::new(5, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.reduced(), (5, 9));
        assert!(Probability::new(13, 25).unwrap() < Probability::new(5, 9).unwrap());
        assert!(!Probability::new(8, 16).unwrap().exceeds_half());
        assert!(Probability::new(10, 9).is_err());
    }

    #[test]
    fn triple_matrix() {
        let m = victory_matrix(&worked_triple());
        assert_eq!(m.get(0, 1), 5);
        assert_eq!(m.get(1, 2), 5);
        assert_eq!(m.get(2, 0), 5);
        for i in 0..3 {
            assert_eq!(m.get(i, i), 0);
            for j in 0..3 {
                if i != j {
                    assert!(matches!(m.get(i, j), 4 | 5));
                    assert_eq!(m.get(i, j) + m.get(j, i), 9);
                }
            }
        }
    }

    #[test]
    fn single_die_matrix() {
        let m = victory_matrix(&set(&[("A", &[1])]));
        assert_eq!(m.rows(), &[vec![0]]);
    }

    #[test]
    fn predicates() {
        assert!(is_non_transitive(&worked_triple()).unwrap());
        assert_eq!(is_balanced(&worked_triple()).unwrap().unwrap().to_string(), "5/9");

        let ordered = set(&[("A", &[6, 5, 4]), ("B", &[3, 2, 1]), ("C", &[9, 8, 7])]);
        assert!(!is_non_transitive(&ordered).unwrap());

        let stacked = set(&[("A", &[9, 8, 7]), ("B", &[6, 5, 4]), ("C", &[3, 2, 1])]);
        assert_eq!(is_balanced(&stacked).unwrap(), None);

        let two = set(&[("A", &[2]), ("B", &[1])]);
        assert!(is_non_transitive(&two).is_err());
        assert!(is_balanced(&two).is_err());
    }

    #[test]
    fn normalize_worked_extension() {
        let r = |n: i64, d: i64| Rational::new(n, d);
        let dice = vec![
            Die::new("A", vec![r(9, 1), r(5, 1), r(1, 1)]).unwrap(),
            Die::new("B", vec![r(8, 1), r(4, 1), r(3, 1)]).unwrap(),
            Die::new("C", vec![r(7, 1), r(6, 1), r(2, 1)]).unwrap(),
            Die::new("D", vec![r(69, 10), r(59, 10), r(21, 10)]).unwrap(),
        ];
        let out = normalize(&dice).unwrap();
        let expect = set(&[
            ("A", &[12, 6, 1]),
            ("B", &[11, 5, 4]),
            ("C", &[10, 8, 2]),
            ("D", &[9, 7, 3]),
        ]);
        assert_eq!(out, expect);
        assert!(out.is_canonical());
    }

    #[test]
    fn normalize_small_rationals() {
        let r = |n: i64, d: i64| Rational::new(n, d);
        let dice = vec![
            Die::new("A", vec![r(5, 2), r(3, 2)]).unwrap(),
            Die::new("B", vec![r(13, 5), r(1, 2)]).unwrap(),
        ];
        let out = normalize(&dice).unwrap();
        assert_eq!(out, set(&[("A", &[3, 2]), ("B", &[4, 1])]));
    }

    #[test]
    fn normalize_identity_and_duplicates() {
        assert_eq!(worked_triple().normalized(), worked_triple());
        let dup = vec![die("A", &[3, 1]), die("B", &[3, 2])];
        assert!(matches!(normalize(&dup), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn canonical_check() {
        assert!(worked_triple().is_canonical());
        assert!(!set(&[("A", &[10, 2]), ("B", &[3, 1])]).is_canonical());
    }
}
