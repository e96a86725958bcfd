//! Seeded random instances for randomized bound verification.
//!
//! The game distribution is deliberately small: a shared pool of `2n` cells
//! with weights drawn uniformly from `{1..100}/100`, two or three actions
//! per agent, each action a fresh element covering one or two pool cells.
//! Small enough for exhaustive equilibrium enumeration, overlapping enough
//! to exercise the submodular structure.

use rand::Rng;

use crate::games::{Game, UtilitySpec};
use crate::graphs::ConstraintGraph;
use crate::scalar::{frac, Scalar};
use crate::welfare::{CoverageWelfare, GroundSet};

/// Random marginal-contribution coverage game on the given graph.
pub fn random_game<R: Scalar>(graph: &ConstraintGraph, rng: &mut impl Rng) -> Game<R> {
    let n = graph.n();
    let pool = 2 * n;
    let cells: Vec<(String, R)> = (0..pool)
        .map(|k| (format!("c{k}"), frac(rng.gen_range(1..=100), 100)))
        .collect();

    let mut elements = Vec::new();
    let mut action_sets = Vec::with_capacity(n);
    for agent in 1..=n {
        let count = rng.gen_range(2..=3usize);
        let mut actions = Vec::with_capacity(count);
        for k in 0..count {
            let name = format!("a{agent}_{k}");
            let first = rng.gen_range(0..pool);
            let mut covered = vec![format!("c{first}")];
            if rng.gen_bool(0.5) {
                let mut second = rng.gen_range(0..pool);
                while second == first {
                    second = rng.gen_range(0..pool);
                }
                covered.push(format!("c{second}"));
            }
            elements.push((name, covered));
            actions.push(k);
        }
        action_sets.push(actions);
    }

    let ground = GroundSet::new(cells, elements).expect("generated ground set is valid");
    // element indices follow insertion order: rebuild per-agent action sets
    let mut next = 0usize;
    let sets = action_sets
        .iter()
        .map(|actions| {
            actions
                .iter()
                .map(|_| {
                    let s = crate::bits::ElemSet::singleton(next);
                    next += 1;
                    s
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();

    Game::new(
        CoverageWelfare::new(ground),
        sets,
        vec![UtilitySpec::MarginalContribution; n],
        graph.clone(),
    )
    .expect("generated game is valid")
}

/// Random digraph on `n` nodes; each ordered pair carries an edge with
/// probability 1/2.
pub fn random_digraph(n: usize, rng: &mut impl Rng) -> ConstraintGraph {
    let mut edges = Vec::new();
    for j in 1..=n {
        for i in 1..=n {
            if i != j && rng.gen_bool(0.5) {
                edges.push((j, i));
            }
        }
    }
    ConstraintGraph::new(n, &edges).expect("generated graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::Limits;
    use crate::Rat64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_games_are_valid_and_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let graph = ConstraintGraph::complete(3);
        for _ in 0..20 {
            let game = random_game::<Rat64>(&graph, &mut rng);
            let report = game.check_valid_utility(&Limits::default()).unwrap();
            assert!(report.is_valid());
            assert!(game
                .check_consistency(&Limits::default())
                .unwrap()
                .is_consistent());
        }
    }

    #[test]
    fn generation_is_deterministic_per_seed() {
        let graph = ConstraintGraph::complete(4);
        let game_a = random_game::<Rat64>(&graph, &mut ChaCha8Rng::seed_from_u64(42));
        let game_b = random_game::<Rat64>(&graph, &mut ChaCha8Rng::seed_from_u64(42));
        assert_eq!(game_a.action_sets(), game_b.action_sets());
        for x in game_a.profiles() {
            assert_eq!(game_a.welfare_of(&x), game_b.welfare_of(&x));
        }
    }
}
