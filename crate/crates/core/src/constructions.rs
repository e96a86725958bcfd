//! Closed-form bound evaluators and generators for tight worst-case
//! instances.
//!
//! Three bounds are computed per graph: `1/(1+τ)` from the information-group
//! count, `1/(1+α*(Ḡ))` from the fractional independence number of the
//! reciprocal subgraph (valid for consistent utilities), and the upper bound
//! `1/α(G)` that no utility design can beat.
//!
//! The tight-instance generator realizes the overlapping-boxes geometry: a
//! tiny box of area `ε`, a box of area `1+ε` nested inside a box of area `2`,
//! and one disjoint unit box per remaining information group. Crafted
//! tabular utilities make a low-welfare profile an equilibrium while the
//! game still certifies as a valid utility game.

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::games::{ActionProfile, Game, UtilitySpec};
use crate::graphs::{
    fractional_clique_cover, fractional_independence, independence_number, information_groups,
    ConstraintGraph, InformationPartition, DEFAULT_INDEPENDENCE_CAP,
};
use crate::scalar::{frac, int, Scalar};
use crate::welfare::{CoverageWelfare, GroundSet};
use std::collections::BTreeMap;

/// `1/(1 + τ(G))`. Meaningful as a tight price-of-anarchy value only when
/// the graph has at least one edge.
pub fn theorem1_bound<R: Scalar>(g: &ConstraintGraph) -> R {
    let tau = information_groups(g).tau() as i64;
    frac(1, 1 + tau)
}

/// `1/(1 + α*(Ḡ))` where `Ḡ` keeps only reciprocal edges.
pub fn theorem2_bound<R: Scalar>(g: &ConstraintGraph) -> R {
    let gbar = g.reciprocal_subgraph();
    let alpha_star = fractional_independence::<R>(&gbar).value;
    R::one() / (R::one() + alpha_star)
}

/// `1/α(G)`: upper bound on the guarantee of any utility design.
pub fn prop3_bound<R: Scalar>(g: &ConstraintGraph, independence_cap: usize) -> Result<R> {
    let (alpha, _) = independence_number(g, independence_cap)?;
    Ok(frac(1, alpha as i64))
}

/// Everything the analysis front end reports for one graph.
#[derive(Clone, Debug)]
pub struct BoundReport<R> {
    pub n: usize,
    pub tau: usize,
    pub groups: Vec<Vec<usize>>,
    pub group_common_in_neighbors: Vec<Vec<usize>>,
    pub gbar_edges: Vec<(usize, usize)>,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub gbar_cliques: Vec<Vec<usize>>,
    pub alpha_star_gbar: R,
    pub alpha_star_weights: Vec<R>,
    pub k_star_gbar: R,
    pub k_star_weights: Vec<R>,
    /// Strong duality `α* = k*`, asserted as exact rational equality.
    pub duality_exact: bool,
    /// Theorem hypothesis: the graph has at least one edge.
    pub thm1_hypothesis_met: bool,
    pub thm1_bound: R,
    pub thm2_bound: R,
    pub prop3_bound: R,
    pub empirical_poa: Option<R>,
}

pub fn bound_report<R: Scalar>(
    g: &ConstraintGraph,
    independence_cap: usize,
) -> Result<BoundReport<R>> {
    let part = information_groups(g);
    let tau = part.tau();
    let gbar = g.reciprocal_subgraph();
    let (alpha, alpha_witness) = independence_number(g, independence_cap)?;
    let fi = fractional_independence::<R>(&gbar);
    let fc = fractional_clique_cover::<R>(&gbar);
    let duality_exact = fi.value == fc.value;
    let thm2 = R::one() / (R::one() + fi.value.clone());
    Ok(BoundReport {
        n: g.n(),
        tau,
        groups: part.groups,
        group_common_in_neighbors: part.common_in_neighbors,
        gbar_edges: gbar.edges(),
        alpha,
        alpha_witness,
        gbar_cliques: fi.cliques.cliques.clone(),
        alpha_star_gbar: fi.value,
        alpha_star_weights: fi.node_weights,
        k_star_gbar: fc.value,
        k_star_weights: fc.clique_weights,
        duality_exact,
        thm1_hypothesis_met: g.has_any_edge(),
        thm1_bound: frac(1, 1 + tau as i64),
        thm2_bound: thm2,
        prop3_bound: frac(1, alpha as i64),
        empirical_poa: None,
    })
}

/// Complete graph minus `n−1` directed edges chosen so that every node ends
/// up in its own information group, driving the group-count bound from
/// `1/2` down to `1/(n+1)`. The removals are `(1,2)`, `(3,1)`, then
/// `(k, k−1)` for `k = 4..n`; node `n` keeps its full in-neighborhood.
pub fn attack_graph(n: usize) -> ConstraintGraph {
    assert!(n >= 2, "attack graph needs at least two agents");
    let mut removed = vec![(1, 2)];
    if n >= 3 {
        removed.push((3, 1));
    }
    for k in 4..=n {
        removed.push((k, k - 1));
    }
    let g = ConstraintGraph::complete(n).without_edges(&removed);
    debug_assert_eq!(information_groups(&g).tau(), n);
    g
}

/// Which construction the generator used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Thm1Variant {
    /// Complete graph (`τ = 1`): two agents with mutually covered boxes and
    /// plain marginal-contribution utilities; ties hold the low equilibrium.
    CoveredPair,
    /// General `τ ≥ 2` boxes construction with crafted utility overrides.
    Standard,
    /// `τ = 2` where one group observes the other completely and is not
    /// observed back; overrides live on the blind group's partial views.
    BlindBipartite,
}

#[derive(Clone, Debug)]
pub struct Theorem1Instance<R> {
    pub game: Game<R>,
    pub equilibrium: ActionProfile,
    /// Exact equilibrium-to-optimum ratio the instance is built to achieve:
    /// `(1+2ε)/(1+τ+ε)` for `τ ≥ 2`, `1/2` for the complete graph.
    pub predicted_ratio: R,
    pub tau: usize,
    pub groups: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub p_flags: Vec<bool>,
    pub variant: Thm1Variant,
}

#[derive(Clone, Debug)]
pub struct Prop3Instance<R> {
    pub game: Game<R>,
    pub equilibrium: ActionProfile,
    pub independent_set: Vec<usize>,
    pub alpha: usize,
    /// `1 + (n−α)ε`: welfare of the all-shared-resource equilibrium.
    pub predicted_equilibrium_welfare: R,
    /// `(1+(n−α)ε)/(α+(n−α)ε)`: the worst equilibrium ratio.
    pub predicted_ratio: R,
}

fn validate_eps<R: Scalar>(eps: &R) -> Result<()> {
    if *eps <= R::zero() || *eps >= R::one() {
        return Err(Error::EpsilonRange(eps.to_string()));
    }
    Ok(())
}

/// Ground set of the boxes geometry for `tau ≥ 2` groups.
fn boxes_ground<R: Scalar>(tau: usize, eps: &R) -> GroundSet<R> {
    let mut cells = vec![
        ("c_eps".to_string(), eps.clone()),
        ("c_sm".to_string(), R::one() + eps.clone()),
        ("c_big".to_string(), R::one() - eps.clone()),
    ];
    let mut elements = vec![
        ("s_eps".to_string(), vec!["c_eps".to_string()]),
        ("s_sm".to_string(), vec!["c_sm".to_string()]),
        (
            "s_big".to_string(),
            vec!["c_sm".to_string(), "c_big".to_string()],
        ),
    ];
    for t in 2..=tau {
        cells.push((format!("c_{t}"), R::one()));
        elements.push((format!("s_{t}"), vec![format!("c_{t}")]));
    }
    GroundSet::new(cells, elements).expect("boxes ground set is well formed")
}

pub fn build_theorem1_instance<R: Scalar>(
    g: &ConstraintGraph,
    eps: &R,
) -> Result<Theorem1Instance<R>> {
    validate_eps(eps)?;
    let part = information_groups(g);
    let tau = part.tau();

    if tau == 1 {
        return covered_pair_instance(g, &part);
    }

    // An edge between groups lifts to a common in-neighbor of the whole
    // target group (members share closed in-neighborhoods), so candidates
    // are exactly the inter-group edges.
    let group_view_size = |gi: usize| -> usize {
        part.groups[gi].len() + part.common_in_neighbors[gi].len()
    };
    let mut candidates: Vec<(usize, usize)> = Vec::new(); // (target group idx, observed neighbor)
    for (j, i) in g.edges() {
        let gj = part.group_of(j);
        let gi = part.group_of(i);
        if gj != gi {
            candidates.push((gi, j));
        }
    }
    if candidates.is_empty() {
        return Err(Error::ConstructionInfeasible(format!(
            "no edge crosses between information groups {:?}; the bound 1/(1+{tau}) is still \
             proven as a lower bound, but the tightness construction needs an inter-group edge",
            part.groups
        )));
    }
    let pick = candidates
        .iter()
        .find(|&&(gi, _)| group_view_size(gi) < g.n())
        .copied();
    match pick {
        Some((t1, j2)) => standard_instance(g, &part, t1, j2, eps),
        None if tau == 2 => blind_bipartite_instance(g, &part, eps),
        None => {
            // τ ≥ 3: a fully observed target group is harmless, use the
            // first candidate.
            let (t1, j2) = candidates[0];
            standard_instance(g, &part, t1, j2, eps)
        }
    }
}

/// τ = 1 (complete graph): two value-1 boxes, each covered by the other
/// agent's value-2 box. Marginal-contribution ties keep the poor profile an
/// equilibrium, and the ratio is exactly 1/2.
fn covered_pair_instance<R: Scalar>(
    g: &ConstraintGraph,
    part: &InformationPartition,
) -> Result<Theorem1Instance<R>> {
    let n = g.n();
    if n < 2 {
        return Err(Error::ConstructionInfeasible(
            "the graph has no edges; the tight construction needs at least one".into(),
        ));
    }
    let cells = ["c_a", "c_b", "c_ax", "c_bx"]
        .iter()
        .map(|c| (c.to_string(), R::one()))
        .collect();
    let elements = vec![
        ("a_sm".to_string(), vec!["c_a".to_string()]),
        (
            "a_big".to_string(),
            vec!["c_b".to_string(), "c_ax".to_string()],
        ),
        ("b_sm".to_string(), vec!["c_b".to_string()]),
        (
            "b_big".to_string(),
            vec!["c_a".to_string(), "c_bx".to_string()],
        ),
    ];
    let ground = GroundSet::new(cells, elements)?;
    let a_sm = ground.element_set(&["a_sm"])?;
    let a_big = ground.element_set(&["a_big"])?;
    let b_sm = ground.element_set(&["b_sm"])?;
    let b_big = ground.element_set(&["b_big"])?;
    let mut action_sets = vec![vec![ElemSet::EMPTY]; n];
    action_sets[0] = vec![a_sm, a_big];
    action_sets[1] = vec![b_sm, b_big];
    let game = Game::new(
        CoverageWelfare::new(ground),
        action_sets,
        vec![UtilitySpec::MarginalContribution; n],
        g.clone(),
    )?;
    let mut eq = vec![ElemSet::EMPTY; n];
    eq[0] = a_sm;
    eq[1] = b_sm;
    let equilibrium = ActionProfile(eq);
    debug_assert!(game.is_equilibrium(&equilibrium).stable);
    Ok(Theorem1Instance {
        game,
        equilibrium,
        predicted_ratio: frac(1, 2),
        tau: 1,
        groups: part.groups.clone(),
        representatives: vec![1],
        p_flags: vec![part.groups[0].len() > 1],
        variant: Thm1Variant::CoveredPair,
    })
}

/// The general boxes construction. Group `t1` leads with representative
/// `j_1` (its least member) whose actions are the tiny box or the big box;
/// the observed neighbor `j2` represents its own group and plays the nested
/// small box in equilibrium, as do all other representatives.
fn standard_instance<R: Scalar>(
    g: &ConstraintGraph,
    part: &InformationPartition,
    t1: usize,
    j2: usize,
    eps: &R,
) -> Result<Theorem1Instance<R>> {
    let n = g.n();
    let tau = part.tau();
    let t2 = part.group_of(j2);

    // group order: T1, then j2's group, then the rest by least member
    let mut order = vec![t1, t2];
    for gi in 0..tau {
        if gi != t1 && gi != t2 {
            order.push(gi);
        }
    }
    // representatives: least member, except j2 represents its group
    let representatives: Vec<usize> = order
        .iter()
        .enumerate()
        .map(|(pos, &gi)| if pos == 1 { j2 } else { part.groups[gi][0] })
        .collect();
    let j1 = representatives[0];

    let ground = boxes_ground::<R>(tau, eps);
    let s_eps = ground.element_set(&["s_eps"])?;
    let s_sm = ground.element_set(&["s_sm"])?;
    let eps_and_big = ground.element_set(&["s_eps", "s_big"])?;

    let mut action_sets = vec![vec![s_eps]; n];
    action_sets[j1 - 1] = vec![s_eps, eps_and_big];
    for (t, &rep) in representatives.iter().enumerate().skip(1) {
        let unit = ground.element_set(&[format!("s_{}", t + 1).as_str()])?;
        action_sets[rep - 1] = vec![s_sm, unit];
    }

    let mut eq = vec![s_eps; n];
    for &rep in representatives.iter().skip(1) {
        eq[rep - 1] = s_sm;
    }
    let equilibrium = ActionProfile(eq);

    // crafted utilities: each representative is granted 1+ε on exactly its
    // view of the equilibrium; marginal contribution everywhere else
    let welfare = CoverageWelfare::new(ground);
    let plain = Game::new(
        welfare.clone(),
        action_sets.clone(),
        vec![UtilitySpec::MarginalContribution; n],
        g.clone(),
    )?;
    let bonus = R::one() + eps.clone();
    let mut utilities = vec![UtilitySpec::MarginalContribution; n];
    for &rep in &representatives {
        let view = plain.masked_view(rep, &equilibrium);
        let mut overrides = BTreeMap::new();
        overrides.insert(view, bonus.clone());
        utilities[rep - 1] = UtilitySpec::Tabular { overrides };
    }
    let game = Game::new(welfare, action_sets, utilities, g.clone())?;
    debug_assert!(game.is_equilibrium(&equilibrium).stable);

    let p_flags = order
        .iter()
        .map(|&gi| part.common_in_neighbors[gi].contains(&j1) || part.groups[gi].len() > 1)
        .collect();

    let two_eps = int::<R>(2) * eps.clone();
    let predicted_ratio =
        (R::one() + two_eps) / (int::<R>(1 + tau as i64) + eps.clone());

    Ok(Theorem1Instance {
        game,
        equilibrium,
        predicted_ratio,
        tau,
        groups: order.iter().map(|&gi| part.groups[gi].clone()).collect(),
        representatives,
        p_flags,
        variant: Thm1Variant::Standard,
    })
}

/// τ = 2 with a one-way complete split: every member of the blind group is
/// observed by the whole seeing group, and observes none of it. The seeing
/// group's views are always full profiles, so the usual crafted bonus there
/// would break the utility-sum condition. Instead the blind group's least
/// member carries the big box and a tie-valued override on its own partial
/// view, and the seeing group's least member carries an off-path override
/// that plants the consistency violation these instances are expected to
/// exhibit.
fn blind_bipartite_instance<R: Scalar>(
    g: &ConstraintGraph,
    part: &InformationPartition,
    eps: &R,
) -> Result<Theorem1Instance<R>> {
    let n = g.n();
    let full_gi = (0..2)
        .find(|&gi| part.groups[gi].len() + part.common_in_neighbors[gi].len() == n)
        .expect("one group is fully observed");
    let blind_gi = 1 - full_gi;
    let seeing = &part.groups[full_gi];
    let blind = &part.groups[blind_gi];
    let q = blind[0]; // blind leader: big box
    let p = seeing[0]; // seeing leader: small box

    let ground = boxes_ground::<R>(2, eps);
    let s_eps = ground.element_set(&["s_eps"])?;
    let s_sm = ground.element_set(&["s_sm"])?;
    let s_2 = ground.element_set(&["s_2"])?;
    let eps_and_big = ground.element_set(&["s_eps", "s_big"])?;

    let mut action_sets = vec![vec![s_eps]; n];
    action_sets[q - 1] = vec![s_eps, eps_and_big];
    action_sets[p - 1] = vec![s_sm, s_2];

    let mut eq = vec![s_eps; n];
    eq[p - 1] = s_sm;
    let equilibrium = ActionProfile(eq);

    let welfare = CoverageWelfare::new(ground);
    let plain = Game::new(
        welfare.clone(),
        action_sets.clone(),
        vec![UtilitySpec::MarginalContribution; n],
        g.clone(),
    )?;

    // tie override: the blind leader values staying on the tiny box exactly
    // as much as grabbing the big one
    let stay_view = plain.masked_view(q, &equilibrium);
    let mut dev_view = stay_view.clone();
    dev_view.0[q - 1] = eps_and_big;
    let tie_value = plain.utility_on_view(q, &dev_view);
    let mut q_overrides = BTreeMap::new();
    q_overrides.insert(stay_view, tie_value);

    // off-path override on a padded view the seeing leader never actually
    // holds; it only surfaces in the consistency check
    let mut lonely = ActionProfile(vec![ElemSet::EMPTY; n]);
    lonely.0[p - 1] = s_sm;
    let mut p_overrides = BTreeMap::new();
    p_overrides.insert(lonely, R::zero());

    let mut utilities = vec![UtilitySpec::MarginalContribution; n];
    utilities[q - 1] = UtilitySpec::Tabular {
        overrides: q_overrides,
    };
    utilities[p - 1] = UtilitySpec::Tabular {
        overrides: p_overrides,
    };
    let game = Game::new(welfare, action_sets, utilities, g.clone())?;
    debug_assert!(game.is_equilibrium(&equilibrium).stable);

    let two_eps = int::<R>(2) * eps.clone();
    let predicted_ratio = (R::one() + two_eps) / (int::<R>(3) + eps.clone());

    Ok(Theorem1Instance {
        game,
        equilibrium,
        predicted_ratio,
        tau: 2,
        groups: vec![blind.clone(), seeing.clone()],
        representatives: vec![q, p],
        p_flags: vec![blind.len() > 1, true],
        variant: Thm1Variant::BlindBipartite,
    })
}

/// Shared-resource instance: one unit resource `s_0` every independent-set
/// agent can grab, a unit resource per independent-set agent, and an
/// `ε`-resource for everyone else. Marginal-contribution ties make the
/// all-shared profile an equilibrium under masking, since independent
/// agents never see each other.
pub fn build_prop3_instance<R: Scalar>(
    g: &ConstraintGraph,
    eps: &R,
    independence_cap: usize,
) -> Result<Prop3Instance<R>> {
    validate_eps(eps)?;
    let n = g.n();
    let (alpha, j_set) = independence_number(g, independence_cap)?;

    let mut cells = vec![("c_0".to_string(), R::one())];
    let mut elements = vec![("s_0".to_string(), vec!["c_0".to_string()])];
    for i in 1..=n {
        let w = if j_set.contains(&i) {
            R::one()
        } else {
            eps.clone()
        };
        cells.push((format!("c_{i}"), w));
        elements.push((format!("s_{i}"), vec![format!("c_{i}")]));
    }
    let ground = GroundSet::new(cells, elements)?;
    let s0 = ground.element_set(&["s_0"])?;

    let mut action_sets = Vec::with_capacity(n);
    let mut eq = Vec::with_capacity(n);
    for i in 1..=n {
        let own = ground.element_set(&[format!("s_{i}").as_str()])?;
        if j_set.contains(&i) {
            action_sets.push(vec![s0, own]);
            eq.push(s0);
        } else {
            action_sets.push(vec![own]);
            eq.push(own);
        }
    }
    let game = Game::new(
        CoverageWelfare::new(ground),
        action_sets,
        vec![UtilitySpec::MarginalContribution; n],
        g.clone(),
    )?;
    let equilibrium = ActionProfile(eq);
    debug_assert!(game.is_equilibrium(&equilibrium).stable);

    let spread = int::<R>((n - alpha) as i64) * eps.clone();
    let predicted_equilibrium_welfare = R::one() + spread.clone();
    let predicted_ratio =
        predicted_equilibrium_welfare.clone() / (int::<R>(alpha as i64) + spread);

    Ok(Prop3Instance {
        game,
        equilibrium,
        independent_set: j_set,
        alpha,
        predicted_equilibrium_welfare,
        predicted_ratio,
    })
}

/// Convenience wrapper using the default independence cap.
pub fn default_prop3_instance<R: Scalar>(
    g: &ConstraintGraph,
    eps: &R,
) -> Result<Prop3Instance<R>> {
    build_prop3_instance(g, eps, DEFAULT_INDEPENDENCE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::Limits;
    use crate::scalar::approx;
    use crate::Rat64;
    use num::Signed;

    fn example_family() -> [ConstraintGraph; 4] {
        let g1 = ConstraintGraph::complete(4);
        let g2 = g1.without_edges(&[(1, 2)]);
        let g3 = g2.without_edges(&[(3, 1)]);
        let g4 = g3.without_edges(&[(4, 3)]);
        [g1, g2, g3, g4]
    }

    fn ring(n: usize) -> ConstraintGraph {
        let mut edges = Vec::new();
        for v in 1..=n {
            let w = v % n + 1;
            edges.push((v, w));
            edges.push((w, v));
        }
        ConstraintGraph::new(n, &edges).unwrap()
    }

    fn milli() -> Rat64 {
        frac(1, 1000)
    }

    #[test]
    fn bounds_on_the_example_family() {
        let [g1, _, _, g4] = example_family();
        assert_eq!(theorem1_bound::<Rat64>(&g1), frac(1, 2));
        assert_eq!(theorem2_bound::<Rat64>(&g1), frac(1, 2));
        assert_eq!(prop3_bound::<Rat64>(&g1, 24).unwrap(), frac(1, 1));
        assert_eq!(theorem1_bound::<Rat64>(&g4), frac(1, 5));
        assert_eq!(theorem2_bound::<Rat64>(&g4), frac(1, 3));
        // every pair still shares an edge in one direction, so alpha = 1
        assert_eq!(prop3_bound::<Rat64>(&g4, 24).unwrap(), frac(1, 1));
    }

    #[test]
    fn bounds_on_rings_and_edgeless() {
        let c5 = ring(5);
        assert_eq!(theorem2_bound::<Rat64>(&c5), frac(2, 7));
        assert_eq!(prop3_bound::<Rat64>(&c5, 24).unwrap(), frac(1, 2));
        let edgeless = ConstraintGraph::new(6, &[]).unwrap();
        assert_eq!(prop3_bound::<Rat64>(&edgeless, 24).unwrap(), frac(1, 6));
    }

    #[test]
    fn theorem2_never_below_theorem1() {
        let [g1, g2, g3, g4] = example_family();
        for g in [g1, g2, g3, g4, ring(5), attack_graph(5)] {
            assert!(theorem2_bound::<Rat64>(&g) >= theorem1_bound::<Rat64>(&g));
        }
    }

    #[test]
    fn attack_graph_matches_example_rightmost() {
        let [_, _, _, g4] = example_family();
        assert_eq!(attack_graph(4).edges(), g4.edges());
        assert_eq!(attack_graph(2).edges(), vec![(2, 1)]);
        for n in [2usize, 3, 4, 5, 6] {
            let g = attack_graph(n);
            assert_eq!(information_groups(&g).tau(), n);
            assert_eq!(g.edge_count(), n * (n - 1) - (n - 1));
        }
    }

    #[test]
    fn theorem1_instance_on_attack_graph_4() {
        let g = attack_graph(4);
        let inst = build_theorem1_instance::<Rat64>(&g, &milli()).unwrap();
        assert_eq!(inst.variant, Thm1Variant::Standard);
        assert_eq!(inst.tau, 4);
        let limits = Limits::default();
        assert!(inst.game.check_valid_utility(&limits).unwrap().is_valid());
        let eqs = inst.game.enumerate_equilibria(&limits).unwrap();
        assert!(eqs.contains(&inst.equilibrium));
        let poa = inst.game.empirical_poa(&limits).unwrap();
        assert_eq!(poa, frac::<Rat64>(1002, 5001));
        assert_eq!(poa, inst.predicted_ratio);
    }

    #[test]
    fn theorem1_instance_on_second_example_graph() {
        let [_, g2, _, _] = example_family();
        let inst = build_theorem1_instance::<Rat64>(&g2, &milli()).unwrap();
        assert_eq!(inst.tau, 2);
        assert_eq!(inst.variant, Thm1Variant::Standard);
        let limits = Limits::default();
        assert!(inst.game.check_valid_utility(&limits).unwrap().is_valid());
        let poa = inst.game.empirical_poa(&limits).unwrap();
        assert_eq!(poa, frac::<Rat64>(1002, 3001));
        assert_eq!(poa, inst.predicted_ratio);
        // the paper's deviation value: grabbing the big box on the leader's
        // equilibrium view gains exactly 1 - eps
        let j1 = inst.representatives[0];
        let mut dev = inst.game.masked_view(j1, &inst.equilibrium);
        dev.0[j1 - 1] = inst.game.actions(j1)[1];
        assert_eq!(
            inst.game.utility_on_view(j1, &dev),
            frac::<Rat64>(999, 1000)
        );
    }

    #[test]
    fn theorem1_instance_on_complete_graph() {
        let g = ConstraintGraph::complete(4);
        let inst = build_theorem1_instance::<Rat64>(&g, &milli()).unwrap();
        assert_eq!(inst.variant, Thm1Variant::CoveredPair);
        let limits = Limits::default();
        assert!(inst.game.check_valid_utility(&limits).unwrap().is_valid());
        let poa = inst.game.empirical_poa(&limits).unwrap();
        assert_eq!(poa, frac::<Rat64>(1, 2));
    }

    #[test]
    fn theorem1_instance_on_single_edge_uses_blind_variant() {
        let g = attack_graph(2);
        let inst = build_theorem1_instance::<Rat64>(&g, &milli()).unwrap();
        assert_eq!(inst.variant, Thm1Variant::BlindBipartite);
        let limits = Limits::default();
        assert!(inst.game.check_valid_utility(&limits).unwrap().is_valid());
        let poa = inst.game.empirical_poa(&limits).unwrap();
        assert_eq!(poa, frac::<Rat64>(1002, 3001));
        assert_eq!(poa, inst.predicted_ratio);
        assert!(!inst
            .game
            .check_consistency(&limits)
            .unwrap()
            .is_consistent());
    }

    #[test]
    fn theorem1_instances_with_tau_at_least_2_are_inconsistent() {
        let [_, g2, g3, g4] = example_family();
        for g in [g2, g3, g4, attack_graph(2), attack_graph(5)] {
            let inst = build_theorem1_instance::<Rat64>(&g, &milli()).unwrap();
            let report = inst.game.check_consistency(&Limits::default()).unwrap();
            assert!(!report.is_consistent(), "crafted instance must be inconsistent");
            assert!(report.violation.is_some());
        }
    }

    #[test]
    fn theorem1_refuses_disjoint_complete_components() {
        let g = ConstraintGraph::new(4, &[(1, 2), (2, 1), (3, 4), (4, 3)]).unwrap();
        match build_theorem1_instance::<Rat64>(&g, &milli()) {
            Err(Error::ConstructionInfeasible(msg)) => {
                assert!(msg.contains("inter-group"));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn epsilon_validation() {
        let g = attack_graph(3);
        assert!(matches!(
            build_theorem1_instance::<Rat64>(&g, &frac(3, 2)),
            Err(Error::EpsilonRange(_))
        ));
        assert!(matches!(
            build_prop3_instance::<Rat64>(&g, &frac(0, 1), 24),
            Err(Error::EpsilonRange(_))
        ));
    }

    #[test]
    fn prop3_instance_on_ring_5() {
        let inst = build_prop3_instance::<Rat64>(&ring(5), &milli(), 24).unwrap();
        assert_eq!(inst.alpha, 2);
        let limits = Limits::default();
        let w = inst.game.welfare_of(&inst.equilibrium);
        assert_eq!(w, frac::<Rat64>(1003, 1000)); // 1 + 3 eps
        assert_eq!(w, inst.predicted_equilibrium_welfare);
        let eqs = inst.game.enumerate_equilibria(&limits).unwrap();
        assert!(eqs.contains(&inst.equilibrium));
        let poa = inst.game.empirical_poa(&limits).unwrap();
        assert_eq!(poa, frac::<Rat64>(1003, 2003));
        assert_eq!(poa, inst.predicted_ratio);
        // within 2 eps of the 1/alpha limit
        let gap = poa - frac::<Rat64>(1, 2);
        assert!(gap.abs() < frac::<Rat64>(2, 1000), "gap {}", approx(&gap));
    }

    #[test]
    fn prop3_instance_on_complete_graph_is_lossless() {
        let inst =
            build_prop3_instance::<Rat64>(&ConstraintGraph::complete(4), &milli(), 24).unwrap();
        assert_eq!(inst.alpha, 1);
        let poa = inst.game.empirical_poa(&Limits::default()).unwrap();
        assert_eq!(poa, frac::<Rat64>(1, 1));
    }

    #[test]
    fn bound_report_is_internally_consistent() {
        let g = attack_graph(4);
        let report = bound_report::<Rat64>(&g, 24).unwrap();
        assert_eq!(report.tau, 4);
        assert!(report.duality_exact);
        assert!(report.thm1_hypothesis_met);
        assert_eq!(report.thm1_bound, frac(1, 5));
        assert_eq!(report.thm2_bound, frac(1, 3));
        assert_eq!(report.alpha_star_gbar, frac(2, 1));
        assert!(report.thm2_bound >= report.thm1_bound);
    }
}
