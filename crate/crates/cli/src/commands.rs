//! Command implementations. Each returns the rendered report plus a flag
//! that signals a found bound violation (exit code 1).

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vug_core::constructions::{
    attack_graph, bound_report, build_prop3_instance, build_theorem1_instance, Thm1Variant,
};
use vug_core::fileformat::{game_to_file, load_graph, parse_rational, save_game};
use vug_core::games::{ActionProfile, Game, Limits};
use vug_core::graphs::{
    fractional_independence, information_groups, ConstraintGraph, DEFAULT_INDEPENDENCE_CAP,
    MAX_NODES,
};
use vug_core::random::random_game;
use vug_core::scalar::{frac, int};
use vug_core::{BigRat, Error, Result, Scalar};

use crate::args::{
    AnalyzeArgs, EquilibriaArgs, Format, GraphInput, SweepArgs, Theorem, VerifyArgs, WorstCaseArgs,
};
use crate::report::{
    rat, sweep_csv, to_json, AnalyzeReport, EquilibriaReport, EquilibriumEntry, SweepRow,
    VerifyReport, VerifyViolation, WorstCaseReport,
};

#[derive(Debug)]
pub struct Output {
    pub report: String,
    pub violation: bool,
}

fn load_input(input: &GraphInput) -> Result<ConstraintGraph> {
    match (&input.graph, input.complete) {
        (Some(path), None) => load_graph(path),
        (None, Some(n)) => {
            if n == 0 || n > MAX_NODES {
                return Err(Error::InvalidGraph(format!(
                    "--complete takes 1..={MAX_NODES}, got {n}"
                )));
            }
            Ok(ConstraintGraph::complete(n))
        }
        (None, None) => Err(Error::InvalidGraph(
            "provide --graph PATH or --complete N".into(),
        )),
        (Some(_), Some(_)) => Err(Error::InvalidGraph(
            "--graph and --complete are mutually exclusive".into(),
        )),
    }
}

fn parse_epsilon(text: &str) -> Result<BigRat> {
    let eps: BigRat = parse_rational(text)?;
    if eps <= int(0) || eps >= int(1) {
        return Err(Error::EpsilonRange(text.to_string()));
    }
    Ok(eps)
}

fn profile_names<R: Scalar>(game: &Game<R>, x: &ActionProfile) -> Vec<Vec<String>> {
    x.0.iter()
        .map(|&a| game.welfare().ground().names_of_set(a))
        .collect()
}

pub fn run_analyze(args: &AnalyzeArgs) -> Result<Output> {
    let g = load_input(&args.input)?;
    let b = bound_report::<BigRat>(&g, DEFAULT_INDEPENDENCE_CAP)?;
    let report = AnalyzeReport {
        n: b.n,
        edge_count: g.edge_count(),
        edges: g.edges(),
        tau: b.tau,
        information_groups: b.groups,
        group_common_in_neighbors: b.group_common_in_neighbors,
        reciprocal_edges: b.gbar_edges,
        alpha: b.alpha,
        alpha_witness: b.alpha_witness,
        reciprocal_maximal_cliques: b.gbar_cliques,
        alpha_star_reciprocal: rat(&b.alpha_star_gbar),
        alpha_star_weights: b.alpha_star_weights.iter().map(rat).collect(),
        k_star_reciprocal: rat(&b.k_star_gbar),
        k_star_weights: b.k_star_weights.iter().map(rat).collect(),
        duality_exact: b.duality_exact,
        thm1_hypothesis_met: b.thm1_hypothesis_met,
        thm1_bound: rat(&b.thm1_bound),
        thm2_bound: rat(&b.thm2_bound),
        prop3_bound: rat(&b.prop3_bound),
    };
    let rendered = match args.format {
        Format::Json => to_json(&report),
        Format::Csv => format!(
            "n,tau,alpha,alpha_star,k_star,duality_exact,thm1,thm2,prop3\n\
             {},{},{},{},{},{},{},{},{}\n",
            report.n,
            report.tau,
            report.alpha,
            report.alpha_star_reciprocal.exact,
            report.k_star_reciprocal.exact,
            report.duality_exact,
            report.thm1_bound.exact,
            report.thm2_bound.exact,
            report.prop3_bound.exact,
        ),
    };
    Ok(Output {
        report: rendered,
        violation: false,
    })
}

pub fn run_worst_case(args: &WorstCaseArgs) -> Result<Output> {
    let g = load_input(&args.input)?;
    let eps = parse_epsilon(&args.epsilon)?;
    let limits = Limits::default();

    let report = match args.theorem {
        Theorem::One => {
            let inst = build_theorem1_instance::<BigRat>(&g, &eps)?;
            summarize_worst_case(
                "theorem1",
                Some(match inst.variant {
                    Thm1Variant::CoveredPair => "covered-pair",
                    Thm1Variant::Standard => "standard",
                    Thm1Variant::BlindBipartite => "blind-bipartite",
                }),
                &eps,
                &inst.game,
                &inst.equilibrium,
                &inst.predicted_ratio,
                Some(inst.tau),
                None,
                Some(inst.groups.clone()),
                Some(inst.representatives.clone()),
                Some(inst.p_flags.clone()),
                None,
                args.out_game.as_deref(),
                &limits,
            )?
        }
        Theorem::Prop3 => {
            let inst = build_prop3_instance::<BigRat>(&g, &eps, DEFAULT_INDEPENDENCE_CAP)?;
            summarize_worst_case(
                "prop3",
                None,
                &eps,
                &inst.game,
                &inst.equilibrium,
                &inst.predicted_ratio,
                None,
                Some(inst.alpha),
                None,
                None,
                None,
                Some(inst.independent_set.clone()),
                args.out_game.as_deref(),
                &limits,
            )?
        }
    };

    let violation = !report.exact_match || !report.designated_is_equilibrium;
    Ok(Output {
        report: to_json(&report),
        violation,
    })
}

#[allow(clippy::too_many_arguments)]
fn summarize_worst_case(
    construction: &str,
    variant: Option<&str>,
    eps: &BigRat,
    game: &Game<BigRat>,
    designated: &ActionProfile,
    predicted: &BigRat,
    tau: Option<usize>,
    alpha: Option<usize>,
    groups: Option<Vec<Vec<usize>>>,
    representatives: Option<Vec<usize>>,
    p_flags: Option<Vec<bool>>,
    independent_set: Option<Vec<usize>>,
    out_game: Option<&Path>,
    limits: &Limits,
) -> Result<WorstCaseReport> {
    let designated_check = game.is_equilibrium(designated);
    let equilibria = game.enumerate_equilibria(limits)?;
    let (opt_profile, opt_welfare) = game.optimum(limits)?;
    let poa = game.empirical_poa(limits)?;
    let vug = game.check_valid_utility(limits)?;
    let consistency = game.check_consistency(limits)?;

    if let Some(path) = out_game {
        save_game(game, path)?;
    }

    Ok(WorstCaseReport {
        construction: construction.to_string(),
        variant: variant.map(str::to_string),
        epsilon: rat(eps),
        tau,
        alpha,
        groups,
        representatives,
        group_covers_tiny_box: p_flags,
        independent_set,
        predicted_ratio: rat(predicted),
        designated_equilibrium: profile_names(game, designated),
        designated_is_equilibrium: designated_check.stable,
        designated_welfare: rat(&game.welfare_of(designated)),
        equilibrium_count: equilibria.len(),
        optimum_profile: profile_names(game, &opt_profile),
        optimum_welfare: rat(&opt_welfare),
        empirical_poa: rat(&poa),
        exact_match: poa == *predicted,
        valid_utility: vug.is_valid(),
        consistent: consistency.is_consistent(),
        game_path: out_game.map(|p| p.display().to_string()),
        game: game_to_file(game),
    })
}

pub fn run_equilibria(args: &EquilibriaArgs) -> Result<Output> {
    let game: Game<BigRat> = vug_core::fileformat::load_game(&args.game)?;
    let limits = Limits::default();
    let equilibria = game.enumerate_equilibria(&limits)?;
    let (opt_profile, opt_welfare) = game.optimum(&limits)?;
    let poa = if equilibria.is_empty() || opt_welfare == int(0) {
        None
    } else {
        Some(game.empirical_poa(&limits)?)
    };
    let vug = game.check_valid_utility(&limits)?;
    let consistency = game.check_consistency(&limits)?;

    let validity_failure = if vug.is_valid() {
        None
    } else if let Some(d) = &vug.dominance {
        Some(format!(
            "utility of agent {} falls below its marginal contribution at {:?}",
            d.agent, d.profile
        ))
    } else if let Some(s) = &vug.sum {
        Some(format!(
            "total utility {} exceeds welfare {} at {:?}",
            s.total_utility, s.welfare, s.profile
        ))
    } else {
        Some("welfare properties failed".to_string())
    };
    let consistency_witness = consistency.violation.as_ref().map(|v| {
        format!(
            "agent {} action {:?}: observing {:?} gives {}, the subset {:?} gives {}",
            v.agent, v.action, v.larger, v.utility_large, v.smaller, v.utility_small
        )
    });

    let report = EquilibriaReport {
        agents: game.n_agents(),
        profile_count: game.profile_count().unwrap_or(u64::MAX),
        equilibrium_count: equilibria.len(),
        no_pure_equilibrium: equilibria.is_empty(),
        equilibria: equilibria
            .iter()
            .map(|x| EquilibriumEntry {
                actions: profile_names(&game, x),
                welfare: rat(&game.welfare_of(x)),
            })
            .collect(),
        optimum: EquilibriumEntry {
            actions: profile_names(&game, &opt_profile),
            welfare: rat(&opt_welfare),
        },
        empirical_poa: poa.as_ref().map(rat),
        valid_utility: vug.is_valid(),
        validity_failure,
        consistent: consistency.is_consistent(),
        consistency_witness,
    };
    Ok(Output {
        report: to_json(&report),
        violation: false,
    })
}

pub fn run_verify(args: &VerifyArgs) -> Result<Output> {
    let g = load_input(&args.input)?;
    let limits = Limits::default();
    let tau = information_groups(&g).tau();
    let thm1: BigRat = frac(1, 1 + tau as i64);
    let alpha_star = fractional_independence::<BigRat>(&g.reciprocal_subgraph()).value;
    let thm2: BigRat = int::<BigRat>(1) / (int::<BigRat>(1) + alpha_star.clone());

    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut games_with_equilibria = 0u32;
    let mut total_equilibria = 0u64;
    let mut min_ratio: Option<BigRat> = None;
    let mut violations = Vec::new();

    for index in 0..args.count {
        let game = random_game::<BigRat>(&g, &mut rng);
        let equilibria = game.enumerate_equilibria(&limits)?;
        if equilibria.is_empty() {
            continue;
        }
        games_with_equilibria += 1;
        total_equilibria += equilibria.len() as u64;
        let (_, opt) = game.optimum(&limits)?;
        if opt == int(0) {
            continue;
        }
        for eq in &equilibria {
            let ratio = game.welfare_of(eq) / opt.clone();
            if min_ratio.as_ref().map_or(true, |m| ratio < *m) {
                min_ratio = Some(ratio.clone());
            }
            if ratio < thm1 {
                violations.push(VerifyViolation {
                    game_index: index,
                    bound: "theorem1".into(),
                    ratio: rat(&ratio),
                    bound_value: rat(&thm1),
                    game: game_to_file(&game),
                });
            }
            if ratio < thm2 {
                violations.push(VerifyViolation {
                    game_index: index,
                    bound: "theorem2".into(),
                    ratio: rat(&ratio),
                    bound_value: rat(&thm2),
                    game: game_to_file(&game),
                });
            }
        }
    }

    let pass = violations.is_empty();
    let report = VerifyReport {
        n: g.n(),
        edge_count: g.edge_count(),
        count: args.count,
        seed: args.seed,
        tau,
        thm1_bound: rat(&thm1),
        alpha_star_reciprocal: rat(&alpha_star),
        thm2_bound: rat(&thm2),
        games_run: args.count,
        games_with_equilibria,
        total_equilibria,
        min_ratio: min_ratio.as_ref().map(rat),
        min_margin_thm1: min_ratio.as_ref().map(|m| rat(&(m.clone() - thm1.clone()))),
        min_margin_thm2: min_ratio.as_ref().map(|m| rat(&(m.clone() - thm2.clone()))),
        violations,
        pass,
    };
    Ok(Output {
        report: to_json(&report),
        violation: !pass,
    })
}

pub fn run_sweep(args: &SweepArgs) -> Result<Output> {
    if args.min < 2 || args.min > args.max {
        return Err(Error::InvalidGraph(format!(
            "sweep range must satisfy 2 <= min <= max, got {}..{}",
            args.min, args.max
        )));
    }
    let eps = parse_epsilon(&args.epsilon)?;
    let limits = Limits::default();
    let mut rows = Vec::new();
    for n in args.min..=args.max {
        let g = attack_graph(n);
        let b = bound_report::<BigRat>(&g, DEFAULT_INDEPENDENCE_CAP)?;
        let inst = build_theorem1_instance::<BigRat>(&g, &eps)?;
        let (empirical, matches) = if n <= args.enumerate_up_to {
            let poa = inst.game.empirical_poa(&limits)?;
            let m = poa == inst.predicted_ratio;
            (Some(poa), Some(m))
        } else {
            (None, None)
        };
        rows.push(SweepRow {
            n,
            tau: b.tau,
            thm1_bound: rat(&b.thm1_bound),
            thm2_bound: rat(&b.thm2_bound),
            prop3_bound: rat(&b.prop3_bound),
            predicted_poa: rat(&inst.predicted_ratio),
            empirical_poa: empirical.as_ref().map(rat),
            empirical_matches: matches,
        });
    }
    let violation = rows
        .iter()
        .any(|r| matches!(r.empirical_matches, Some(false)));
    let rendered = match args.format {
        Format::Csv => sweep_csv(&rows),
        Format::Json => to_json(&rows),
    };
    Ok(Output {
        report: rendered,
        violation,
    })
}
