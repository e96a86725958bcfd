//! Command-level behavior: exit codes, file handling, report round-trips.

use clap::Parser;
use vug_cli::args::{
    AnalyzeArgs, Cli, EquilibriaArgs, Format, GraphInput, Theorem, VerifyArgs, WorstCaseArgs,
};
use vug_cli::commands::{run_analyze, run_equilibria, run_verify, run_worst_case};
use vug_cli::exit_code;
use vug_core::Error;

fn complete(n: usize) -> GraphInput {
    GraphInput {
        graph: None,
        complete: Some(n),
    }
}

fn graph_file(path: std::path::PathBuf) -> GraphInput {
    GraphInput {
        graph: Some(path),
        complete: None,
    }
}

#[test]
fn cli_parses_the_documented_flags() {
    let cli = Cli::parse_from([
        "vug",
        "worst-case",
        "--complete",
        "4",
        "--theorem",
        "prop3",
        "--epsilon",
        "1/100",
    ]);
    match cli.command {
        vug_cli::Command::WorstCase(args) => {
            assert_eq!(args.theorem, Theorem::Prop3);
            assert_eq!(args.epsilon, "1/100");
        }
        other => panic!("unexpected parse: {other:?}"),
    }
    Cli::parse_from(["vug", "sweep", "--min", "2", "--max", "5", "--format", "json"]);
    Cli::parse_from(["vug", "verify", "--complete", "3", "--count", "10", "--seed", "1"]);
}

#[test]
fn analyze_reports_known_quantities() {
    let out = run_analyze(&AnalyzeArgs {
        input: complete(4),
        out: None,
        format: Format::Json,
    })
    .unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(v["tau"], 1);
    assert_eq!(v["thm1_bound"]["exact"], "1/2");
    assert_eq!(v["duality_exact"], true);
}

#[test]
fn malformed_graph_files_give_parse_errors_with_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.graph");
    std::fs::write(&path, "3 1\noops\n").unwrap();
    let err = run_analyze(&AnalyzeArgs {
        input: graph_file(path),
        out: None,
        format: Format::Json,
    })
    .unwrap_err();
    match &err {
        Error::Parse { line, .. } => assert_eq!(*line, 2),
        other => panic!("expected parse error, got {other:?}"),
    }
    assert_eq!(exit_code(&err), 2);
}

#[test]
fn size_cap_maps_to_exit_code_3() {
    let err = Error::SizeLimit {
        what: "x",
        needed: 10,
        cap: 1,
    };
    assert_eq!(exit_code(&err), 3);
}

#[test]
fn worst_case_game_file_replays_identically() {
    let dir = tempfile::tempdir().unwrap();
    let game_path = dir.path().join("worst.json");
    let out = run_worst_case(&WorstCaseArgs {
        input: complete(4),
        theorem: Theorem::One,
        epsilon: "1/1000".into(),
        out_game: Some(game_path.clone()),
        out: None,
    })
    .unwrap();
    assert!(!out.violation);
    let report: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(report["exact_match"], true);

    let replay = run_equilibria(&EquilibriaArgs {
        game: game_path,
        out: None,
    })
    .unwrap();
    let replayed: serde_json::Value = serde_json::from_str(&replay.report).unwrap();
    assert_eq!(
        replayed["empirical_poa"]["exact"],
        report["empirical_poa"]["exact"]
    );
    assert_eq!(
        replayed["equilibrium_count"],
        report["equilibrium_count"]
    );
}

#[test]
fn infeasible_construction_is_a_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.graph");
    std::fs::write(&path, "4 4\n1 2\n2 1\n3 4\n4 3\n").unwrap();
    let err = run_worst_case(&WorstCaseArgs {
        input: graph_file(path),
        theorem: Theorem::One,
        epsilon: "1/1000".into(),
        out_game: None,
        out: None,
    })
    .unwrap_err();
    match &err {
        Error::ConstructionInfeasible(msg) => {
            assert!(msg.contains("inter-group edge"), "diagnostic: {msg}");
        }
        other => panic!("expected infeasibility, got {other:?}"),
    }
}

#[test]
fn equilibria_reports_empty_list_without_crashing() {
    // hand-written matching-pennies game file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pennies.json");
    let json = r#"{
      "ground": {
        "cells": { "pot": "1" },
        "elements": { "h": ["pot"], "t": ["pot"] }
      },
      "agents": [
        { "actions": [["h"], ["t"]] },
        { "actions": [["h"], ["t"]] }
      ],
      "utilities": [
        { "kind": "tabular-override", "overrides": [
          { "profile": [["h"], ["h"]], "value": "1" },
          { "profile": [["t"], ["t"]], "value": "1" },
          { "profile": [["h"], ["t"]], "value": "0" },
          { "profile": [["t"], ["h"]], "value": "0" }
        ]},
        { "kind": "tabular-override", "overrides": [
          { "profile": [["h"], ["h"]], "value": "0" },
          { "profile": [["t"], ["t"]], "value": "0" },
          { "profile": [["h"], ["t"]], "value": "1" },
          { "profile": [["t"], ["h"]], "value": "1" }
        ]}
      ],
      "graph": { "n": 2, "edges": [[1, 2], [2, 1]] }
    }"#;
    std::fs::write(&path, json).unwrap();
    let out = run_equilibria(&EquilibriaArgs { game: path, out: None }).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(v["no_pure_equilibrium"], true);
    assert_eq!(v["equilibrium_count"], 0);
    assert!(v.get("empirical_poa").is_none());
}

#[test]
fn verify_reports_are_deterministic_per_seed() {
    let args = VerifyArgs {
        input: complete(3),
        count: 40,
        seed: 99,
        out: None,
    };
    let a = run_verify(&args).unwrap();
    let b = run_verify(&args).unwrap();
    assert_eq!(a.report, b.report);
    assert!(!a.violation);
}
