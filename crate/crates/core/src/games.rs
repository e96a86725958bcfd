//! The game model: agents with subset-valued actions, graph-masked
//! utilities, validity and consistency certification, and exhaustive
//! equilibrium search.
//!
//! Utility evaluation always goes through the agent's *view* of a profile:
//! the actions of unobserved agents are replaced by the empty set. A tabular
//! utility maps specific views to values and falls back to the marginal
//! contribution `f(x_i, view) − f(view − i)` everywhere else.
//!
//! Equilibrium uses the weak inequality — a tie never breaks an equilibrium —
//! and best-response dynamics moves only on strict improvement, preferring
//! the incumbent action and then the lowest action index.

use std::collections::{BTreeMap, HashSet};

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::graphs::ConstraintGraph;
use crate::scalar::Scalar;
use crate::welfare::{check_properties, CoverageWelfare, PropertyCheck};

/// Exhaustive-search caps. Oversized inputs are rejected, never sampled.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Cap on the number of full action profiles.
    pub profile_cap: u64,
    /// Cap on ground-set size for welfare property checks.
    pub ground_cap: usize,
    /// Cap on `(agent, action, A ⊆ B, joint action)` consistency checks.
    pub consistency_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            profile_cap: 1 << 20,
            ground_cap: 16,
            consistency_cap: 1 << 22,
        }
    }
}

/// One action per agent; position `i` holds agent `i+1`'s element subset.
/// The empty set doubles as the masked placeholder for unobserved agents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionProfile(pub Vec<ElemSet>);

impl ActionProfile {
    pub fn union(&self) -> ElemSet {
        self.0
            .iter()
            .fold(ElemSet::EMPTY, |acc, &s| acc.union(s))
    }

    fn union_without(&self, skip: usize) -> ElemSet {
        self.0
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .fold(ElemSet::EMPTY, |acc, (_, &s)| acc.union(s))
    }
}

impl std::fmt::Debug for ActionProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[derive(Clone, Debug)]
pub enum UtilitySpec<R> {
    /// `f(x_i, view) − f(view − i)`.
    MarginalContribution,
    /// Explicit values on chosen views, marginal contribution elsewhere.
    Tabular {
        overrides: BTreeMap<ActionProfile, R>,
    },
}

#[derive(Clone, Debug)]
pub struct Game<R> {
    welfare: CoverageWelfare<R>,
    action_sets: Vec<Vec<ElemSet>>,
    utilities: Vec<UtilitySpec<R>>,
    graph: ConstraintGraph,
}

#[derive(Clone, Debug)]
pub struct BlockingDeviation<R> {
    pub agent: usize,
    pub action_index: usize,
    pub current: R,
    pub improved: R,
}

#[derive(Clone, Debug)]
pub struct EquilibriumCheck<R> {
    pub stable: bool,
    pub blocking: Option<BlockingDeviation<R>>,
}

#[derive(Clone, Debug)]
pub struct DominanceViolation<R> {
    pub agent: usize,
    pub profile: ActionProfile,
    pub utility: R,
    pub marginal: R,
}

#[derive(Clone, Debug)]
pub struct SumViolation<R> {
    pub profile: ActionProfile,
    pub total_utility: R,
    pub welfare: R,
}

/// Certification of the three validity conditions, evaluated with
/// complete-information views (the definition predates graph constraints;
/// the graph enters only through the equilibrium condition).
#[derive(Clone, Debug)]
pub struct VugReport<R> {
    pub welfare: PropertyCheck<R>,
    pub dominance: Option<DominanceViolation<R>>,
    pub sum: Option<SumViolation<R>>,
}

impl<R> VugReport<R> {
    pub fn is_valid(&self) -> bool {
        self.welfare.all_pass() && self.dominance.is_none() && self.sum.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct ConsistencyViolation<R> {
    pub agent: usize,
    pub action: ElemSet,
    /// Labels of the smaller and larger observed-agent sets, `A ⊆ B`.
    pub smaller: Vec<usize>,
    pub larger: Vec<usize>,
    /// The joint action of `B` (padded profile); `A`'s actions are its
    /// restriction.
    pub profile: ActionProfile,
    pub utility_small: R,
    pub utility_large: R,
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport<R> {
    pub violation: Option<ConsistencyViolation<R>>,
    pub checks: u64,
}

impl<R> ConsistencyReport<R> {
    pub fn is_consistent(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Clone, Debug)]
pub enum BestResponseOutcome {
    /// A full sweep made no strict improvement; the profile is an equilibrium.
    Converged { profile: ActionProfile, sweeps: usize },
    /// A previously seen profile recurred.
    Cycle { repeated: ActionProfile },
    /// Sweep budget exhausted without convergence or a repeat.
    Exhausted { last: ActionProfile },
}

impl<R: Scalar> Game<R> {
    pub fn new(
        welfare: CoverageWelfare<R>,
        action_sets: Vec<Vec<ElemSet>>,
        utilities: Vec<UtilitySpec<R>>,
        graph: ConstraintGraph,
    ) -> Result<Self> {
        let n = graph.n();
        if action_sets.len() != n {
            return Err(Error::InvalidGame(format!(
                "{} action sets for {} agents",
                action_sets.len(),
                n
            )));
        }
        if utilities.len() != n {
            return Err(Error::InvalidGame(format!(
                "{} utility specs for {} agents",
                utilities.len(),
                n
            )));
        }
        let elem_count = welfare.ground().element_count();
        let all = (0..elem_count).fold(ElemSet::EMPTY, |s, i| s.with(i));
        for (i, set) in action_sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidGame(format!(
                    "agent {} has an empty action set",
                    i + 1
                )));
            }
            for a in set {
                if !a.is_subset_of(all) {
                    return Err(Error::InvalidGame(format!(
                        "agent {} action uses elements outside the ground set",
                        i + 1
                    )));
                }
            }
        }
        for (i, u) in utilities.iter().enumerate() {
            if let UtilitySpec::Tabular { overrides } = u {
                for key in overrides.keys() {
                    if key.0.len() != n {
                        return Err(Error::InvalidGame(format!(
                            "override for agent {} has arity {}",
                            i + 1,
                            key.0.len()
                        )));
                    }
                    for (j, &a) in key.0.iter().enumerate() {
                        if !a.is_empty() && !action_sets[j].contains(&a) {
                            return Err(Error::InvalidGame(format!(
                                "override for agent {} references an illegal action of agent {}",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(Game {
            welfare,
            action_sets,
            utilities,
            graph,
        })
    }

    pub fn n_agents(&self) -> usize {
        self.graph.n()
    }

    pub fn welfare(&self) -> &CoverageWelfare<R> {
        &self.welfare
    }

    pub fn graph(&self) -> &ConstraintGraph {
        &self.graph
    }

    pub fn actions(&self, agent: usize) -> &[ElemSet] {
        &self.action_sets[agent - 1]
    }

    pub fn action_sets(&self) -> &[Vec<ElemSet>] {
        &self.action_sets
    }

    pub fn utility_spec(&self, agent: usize) -> &UtilitySpec<R> {
        &self.utilities[agent - 1]
    }

    /// Welfare of a profile: `f` of the union of all chosen subsets.
    pub fn welfare_of(&self, x: &ActionProfile) -> R {
        self.welfare.evaluate(x.union())
    }

    /// Agent's view of a profile: unobserved coordinates become empty.
    pub fn masked_view(&self, agent: usize, x: &ActionProfile) -> ActionProfile {
        let mut view = x.clone();
        for j in 1..=self.n_agents() {
            if j != agent && !self.graph.observes(agent, j) {
                view.0[j - 1] = ElemSet::EMPTY;
            }
        }
        view
    }

    /// Utility of an already-masked (or deliberately padded) profile.
    /// Tabular overrides key on exactly this view.
    pub fn utility_on_view(&self, agent: usize, view: &ActionProfile) -> R {
        if let UtilitySpec::Tabular { overrides } = &self.utilities[agent - 1] {
            if let Some(v) = overrides.get(view) {
                return v.clone();
            }
        }
        let rest = view.union_without(agent - 1);
        self.welfare.evaluate(view.0[agent - 1].union(rest)) - self.welfare.evaluate(rest)
    }

    /// Utility under the game's information constraints.
    pub fn utility(&self, agent: usize, x: &ActionProfile) -> R {
        let view = self.masked_view(agent, x);
        self.utility_on_view(agent, &view)
    }

    /// Number of full profiles, if it fits in the cap arithmetic.
    pub fn profile_count(&self) -> Option<u64> {
        self.action_sets
            .iter()
            .try_fold(1u64, |acc, s| acc.checked_mul(s.len() as u64))
    }

    fn ensure_profiles_within(&self, cap: u64) -> Result<u64> {
        match self.profile_count() {
            Some(c) if c <= cap => Ok(c),
            Some(c) => Err(Error::SizeLimit {
                what: "profile enumeration",
                needed: c as u128,
                cap: cap as u128,
            }),
            None => Err(Error::SizeLimit {
                what: "profile enumeration",
                needed: u128::MAX,
                cap: cap as u128,
            }),
        }
    }

    /// All profiles in canonical order (lexicographic by action index).
    pub fn profiles(&self) -> ProfileIter<'_, R> {
        ProfileIter {
            game: self,
            indices: vec![0; self.n_agents()],
            done: false,
        }
    }

    pub fn profile_from_indices(&self, indices: &[usize]) -> ActionProfile {
        assert_eq!(indices.len(), self.n_agents());
        ActionProfile(
            indices
                .iter()
                .enumerate()
                .map(|(i, &k)| self.action_sets[i][k])
                .collect(),
        )
    }

    /// Weak-inequality equilibrium test with a blocking-deviation witness.
    pub fn is_equilibrium(&self, x: &ActionProfile) -> EquilibriumCheck<R> {
        for agent in 1..=self.n_agents() {
            let mut view = self.masked_view(agent, x);
            let current = self.utility_on_view(agent, &view);
            for (k, &alt) in self.action_sets[agent - 1].iter().enumerate() {
                if alt == x.0[agent - 1] {
                    continue;
                }
                view.0[agent - 1] = alt;
                let improved = self.utility_on_view(agent, &view);
                if improved > current {
                    return EquilibriumCheck {
                        stable: false,
                        blocking: Some(BlockingDeviation {
                            agent,
                            action_index: k,
                            current,
                            improved,
                        }),
                    };
                }
            }
        }
        EquilibriumCheck {
            stable: true,
            blocking: None,
        }
    }

    /// Exhaustively test every profile; the result may be empty, since a
    /// pure equilibrium is not guaranteed to exist.
    pub fn enumerate_equilibria(&self, limits: &Limits) -> Result<Vec<ActionProfile>> {
        self.ensure_profiles_within(limits.profile_cap)?;
        Ok(self
            .profiles()
            .filter(|x| self.is_equilibrium(x).stable)
            .collect())
    }

    /// Exhaustive welfare argmax; ties resolve to the earliest profile in
    /// canonical order.
    pub fn optimum(&self, limits: &Limits) -> Result<(ActionProfile, R)> {
        self.ensure_profiles_within(limits.profile_cap)?;
        let mut best: Option<(ActionProfile, R)> = None;
        for x in self.profiles() {
            let w = self.welfare_of(&x);
            match &best {
                Some((_, bw)) if *bw >= w => {}
                _ => best = Some((x, w)),
            }
        }
        best.ok_or_else(|| Error::InvalidGame("no profiles".into()))
    }

    /// Worst equilibrium welfare over optimal welfare.
    pub fn empirical_poa(&self, limits: &Limits) -> Result<R> {
        let eqs = self.enumerate_equilibria(limits)?;
        if eqs.is_empty() {
            return Err(Error::NoPureEquilibrium);
        }
        let (_, opt) = self.optimum(limits)?;
        if opt.is_zero() {
            return Err(Error::DegenerateOptimum);
        }
        let worst = eqs
            .iter()
            .map(|x| self.welfare_of(x))
            .min()
            .expect("nonempty");
        Ok(worst / opt)
    }

    /// Certify the validity conditions over every full profile:
    /// utilities dominate marginal contributions (item 2) and never sum past
    /// the welfare (item 3); item 1 is the welfare property check.
    pub fn check_valid_utility(&self, limits: &Limits) -> Result<VugReport<R>> {
        self.ensure_profiles_within(limits.profile_cap)?;
        let welfare = check_properties(&self.welfare, limits.ground_cap)?;
        let mut dominance = None;
        let mut sum = None;
        'outer: for x in self.profiles() {
            let total_welfare = self.welfare_of(&x);
            let mut total_utility = R::zero();
            for agent in 1..=self.n_agents() {
                let u = self.utility_on_view(agent, &x);
                let marginal =
                    total_welfare.clone() - self.welfare.evaluate(x.union_without(agent - 1));
                if u < marginal && dominance.is_none() {
                    dominance = Some(DominanceViolation {
                        agent,
                        profile: x.clone(),
                        utility: u.clone(),
                        marginal,
                    });
                }
                total_utility = total_utility + u;
            }
            if total_utility > total_welfare && sum.is_none() {
                sum = Some(SumViolation {
                    profile: x.clone(),
                    total_utility,
                    welfare: total_welfare,
                });
            }
            if dominance.is_some() && sum.is_some() {
                break 'outer;
            }
        }
        Ok(VugReport {
            welfare,
            dominance,
            sum,
        })
    }

    /// Certify monotone shrinkage of raw utilities: for every agent, action,
    /// and nested observed sets `A ⊆ B` with a joint action for `B`, the
    /// utility seen with `A` (the restriction of `B`'s joint action) is at
    /// least the utility seen with `B`. Masking is bypassed: the sets range
    /// over hypothetical neighborhoods, not the realized graph.
    pub fn check_consistency(&self, limits: &Limits) -> Result<ConsistencyReport<R>> {
        let n = self.n_agents();
        // total work: for each agent i and action, sum over B of |X_B| * 2^|B|
        let mut work: u128 = 0;
        for i in 0..n {
            let mut per_b: u128 = 1;
            for (j, s) in self.action_sets.iter().enumerate() {
                if j != i {
                    per_b = per_b.saturating_mul(1 + 2 * s.len() as u128);
                }
            }
            work = work.saturating_add(per_b.saturating_mul(self.action_sets[i].len() as u128));
        }
        if work > limits.consistency_cap as u128 {
            return Err(Error::SizeLimit {
                what: "consistency check",
                needed: work,
                cap: limits.consistency_cap as u128,
            });
        }

        let mut checks = 0u64;
        for agent in 1..=n {
            let others: Vec<usize> = (1..=n).filter(|&j| j != agent).collect();
            for &own in &self.action_sets[agent - 1] {
                for b_mask in 0u32..(1u32 << others.len()) {
                    let members: Vec<usize> = (0..others.len())
                        .filter(|&k| b_mask & (1 << k) != 0)
                        .map(|k| others[k])
                        .collect();
                    let mut joint = vec![0usize; members.len()];
                    loop {
                        let mut padded = ActionProfile(vec![ElemSet::EMPTY; n]);
                        padded.0[agent - 1] = own;
                        for (slot, &j) in members.iter().enumerate() {
                            padded.0[j - 1] = self.action_sets[j - 1][joint[slot]];
                        }
                        let u_large = self.utility_on_view(agent, &padded);
                        // every proper subset A of B, actions restricted
                        for a_mask in 0u32..(1u32 << members.len()) {
                            if a_mask == (1u32 << members.len()) - 1 {
                                continue;
                            }
                            let mut small = padded.clone();
                            for (slot, &j) in members.iter().enumerate() {
                                if a_mask & (1 << slot) == 0 {
                                    small.0[j - 1] = ElemSet::EMPTY;
                                }
                            }
                            let u_small = self.utility_on_view(agent, &small);
                            checks += 1;
                            if u_small < u_large {
                                let smaller: Vec<usize> = members
                                    .iter()
                                    .enumerate()
                                    .filter(|&(slot, _)| a_mask & (1 << slot) != 0)
                                    .map(|(_, &j)| j)
                                    .collect();
                                return Ok(ConsistencyReport {
                                    violation: Some(ConsistencyViolation {
                                        agent,
                                        action: own,
                                        smaller,
                                        larger: members.clone(),
                                        profile: padded,
                                        utility_small: u_small,
                                        utility_large: u_large,
                                    }),
                                    checks,
                                });
                            }
                        }
                        // advance the joint action odometer
                        let mut slot = 0;
                        loop {
                            if slot == members.len() {
                                break;
                            }
                            joint[slot] += 1;
                            if joint[slot] < self.action_sets[members[slot] - 1].len() {
                                break;
                            }
                            joint[slot] = 0;
                            slot += 1;
                        }
                        if slot == members.len() {
                            break;
                        }
                    }
                }
            }
        }
        Ok(ConsistencyReport {
            violation: None,
            checks,
        })
    }

    /// Iterated strict best response in the given agent order. A full sweep
    /// with no strict improvement is convergence; a repeated profile is a
    /// cycle.
    pub fn best_response_path(
        &self,
        init: &ActionProfile,
        order: &[usize],
        max_sweeps: usize,
    ) -> BestResponseOutcome {
        let mut current = init.clone();
        let mut visited: HashSet<ActionProfile> = HashSet::new();
        visited.insert(current.clone());
        for sweep in 0..max_sweeps {
            let mut changed = false;
            for &agent in order {
                let mut view = self.masked_view(agent, &current);
                let incumbent = current.0[agent - 1];
                let mut best_value = self.utility_on_view(agent, &view);
                let mut best_action = incumbent;
                for &alt in &self.action_sets[agent - 1] {
                    if alt == incumbent {
                        continue;
                    }
                    view.0[agent - 1] = alt;
                    let v = self.utility_on_view(agent, &view);
                    // strictly better than anything seen so far; first such
                    // action in declaration order wins
                    if v > best_value {
                        best_value = v;
                        best_action = alt;
                    }
                }
                if best_action != incumbent {
                    current.0[agent - 1] = best_action;
                    changed = true;
                    if !visited.insert(current.clone()) {
                        return BestResponseOutcome::Cycle { repeated: current };
                    }
                }
            }
            if !changed {
                return BestResponseOutcome::Converged {
                    profile: current,
                    sweeps: sweep + 1,
                };
            }
        }
        BestResponseOutcome::Exhausted { last: current }
    }
}

pub struct ProfileIter<'a, R> {
    game: &'a Game<R>,
    indices: Vec<usize>,
    done: bool,
}

impl<'a, R: Scalar> Iterator for ProfileIter<'a, R> {
    type Item = ActionProfile;

    fn next(&mut self) -> Option<ActionProfile> {
        if self.done {
            return None;
        }
        let profile = self.game.profile_from_indices(&self.indices);
        // increment with the last agent fastest so profiles are lexicographic
        let mut pos = self.indices.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.indices[pos] += 1;
            if self.indices[pos] < self.game.action_sets[pos].len() {
                break;
            }
            self.indices[pos] = 0;
        }
        Some(profile)
    }
}
