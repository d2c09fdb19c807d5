//! Construction and exact verification of non-transitive dice.
//!
//! * [`dice`]: dice, dice sets, exact victory counts and the defining predicates.
//! * [`graph`]: digraphs, tournaments, strong components, Hamilton cycles and
//!   strong connectability.
//! * [`cycle`]: balanced non-transitive sets of `n` dice with `m` sides.
//! * [`tournament`]: dice sets whose "beats" relation is a given tournament.
//! * [`oracle`]: exhaustive enumeration, Monte Carlo and brute-force checks.
//! * [`format`]: the `dice-set v1` and `digraph v1` text formats.
//!
//! ```
//! use ntdice::{build_cycle_set, is_balanced, is_non_transitive};
//!
//! let set = build_cycle_set(5, 3).unwrap();
//! assert!(is_non_transitive(&set).unwrap());
//! assert_eq!(is_balanced(&set).unwrap().unwrap().to_string(), "5/9");
//! ```

pub mod cycle;
pub mod dice;
pub mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod tournament;

pub use cycle::{base_triple, build_cycle_set, extend_cycle, search_base_triple, BaseTripleSearchConfig};
pub use dice::{
    is_balanced, is_non_transitive, normalize, probability, realizes, realizes_by_name, victories,
    victory_matrix, DiceSet, Die, Probability, Rational, RealizationReport, VictoryMatrix,
};
pub use error::{Error, Result};
pub use graph::{
    connectability, hamilton_cycle, is_strong, is_strongly_connectable, random_strong_tournament,
    random_tournament, strong_components, Condensation, Connectability, Digraph, Tournament,
};
pub use tournament::{
    blow_up, build_strong_tournament_dice, build_tournament_dice, shift_labels, ChordPlan,
    ChordState, TournamentDice,
};
