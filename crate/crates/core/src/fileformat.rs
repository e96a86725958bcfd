//! On-disk formats: plain-text graphs and JSON game files.
//!
//! Graph files: first significant line `n m`, then `m` lines `j i`, one
//! directed edge each, meaning agent `i` observes agent `j`. `#` starts a
//! comment; blank lines are skipped. Labels are 1-based.
//!
//! Game files are JSON with four sections: `ground` (cell weights as exact
//! `"p/q"` strings and element→cell coverage), `agents` (action sets as
//! element-name lists), `utilities` (kind plus optional tabular overrides),
//! and `graph` (inline edge list or a path to a graph file).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::games::{ActionProfile, Game, UtilitySpec};
use crate::graphs::ConstraintGraph;
use crate::scalar::Scalar;
use crate::welfare::{CoverageWelfare, GroundSet};

pub fn parse_rational<R: Scalar>(s: &str) -> Result<R> {
    s.trim()
        .parse::<R>()
        .map_err(|_| Error::BadRational(s.to_string()))
}

pub fn parse_graph_text(text: &str) -> Result<ConstraintGraph> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, header line)
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two integers, got `{line}`"),
            });
        }
        let a: usize = fields[0].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad integer `{}`", fields[0]),
        })?;
        let b: usize = fields[1].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad integer `{}`", fields[1]),
        })?;
        match header {
            None => header = Some((a, b, line_no)),
            Some((n, m, _)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("edge ({a}, {b}) out of range 1..={n}"),
                    });
                }
                if a == b {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("self-loop at node {a}"),
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m, header_line) = header.ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    ConstraintGraph::new(n, &edges)
}

pub fn graph_to_text(g: &ConstraintGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (j, i) in edges {
        out.push_str(&format!("{j} {i}\n"));
    }
    out
}

pub fn load_graph(path: &Path) -> Result<ConstraintGraph> {
    parse_graph_text(&std::fs::read_to_string(path)?)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GameFile {
    pub ground: GroundSection,
    pub agents: Vec<AgentSection>,
    pub utilities: Vec<UtilitySection>,
    pub graph: GraphSection,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroundSection {
    /// cell name → exact weight as a `"p/q"` string
    pub cells: BTreeMap<String, String>,
    /// element name → covered cells
    pub elements: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AgentSection {
    /// each action is a list of element names; `[]` is the empty action
    pub actions: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UtilitySection {
    /// `"marginal-contribution"` or `"tabular-override"`
    pub kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub overrides: Vec<OverrideSection>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OverrideSection {
    /// one entry per agent; element names, `[]` standing for the empty set
    pub profile: Vec<Vec<String>>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSection {
    File { file: String },
    Inline { n: usize, edges: Vec<(usize, usize)> },
}

pub const KIND_MARGINAL: &str = "marginal-contribution";
pub const KIND_TABULAR: &str = "tabular-override";

/// Serialize a game. Cells and elements are emitted in sorted-name order;
/// reloading therefore permutes internal indices but preserves semantics.
pub fn game_to_file<R: Scalar>(game: &Game<R>) -> GameFile {
    let ground = game.welfare().ground();
    let cells: BTreeMap<String, String> = ground
        .cell_names()
        .iter()
        .enumerate()
        .map(|(i, name)| (name.clone(), ground.cell_weight(i).to_string()))
        .collect();
    let elements: BTreeMap<String, Vec<String>> = ground
        .element_names()
        .iter()
        .enumerate()
        .map(|(i, name)| {
            (
                name.clone(),
                ground
                    .cells_of_element(i)
                    .into_iter()
                    .map(|c| ground.cell_names()[c].clone())
                    .collect(),
            )
        })
        .collect();

    let agents = game
        .action_sets()
        .iter()
        .map(|set| AgentSection {
            actions: set.iter().map(|a| ground.names_of_set(*a)).collect(),
        })
        .collect();

    let utilities = (1..=game.n_agents())
        .map(|agent| match game.utility_spec(agent) {
            UtilitySpec::MarginalContribution => UtilitySection {
                kind: KIND_MARGINAL.into(),
                overrides: Vec::new(),
            },
            UtilitySpec::Tabular { overrides } => UtilitySection {
                kind: KIND_TABULAR.into(),
                overrides: overrides
                    .iter()
                    .map(|(profile, value)| OverrideSection {
                        profile: profile
                            .0
                            .iter()
                            .map(|a| ground.names_of_set(*a))
                            .collect(),
                        value: value.to_string(),
                    })
                    .collect(),
            },
        })
        .collect();

    GameFile {
        ground: GroundSection { cells, elements },
        agents,
        utilities,
        graph: GraphSection::Inline {
            n: game.graph().n(),
            edges: game.graph().edges(),
        },
    }
}

/// Materialize a game. `base` resolves a relative graph-file reference.
pub fn game_from_file<R: Scalar>(file: &GameFile, base: Option<&Path>) -> Result<Game<R>> {
    let cells: Vec<(String, R)> = file
        .ground
        .cells
        .iter()
        .map(|(name, w)| Ok((name.clone(), parse_rational::<R>(w)?)))
        .collect::<Result<_>>()?;
    let elements: Vec<(String, Vec<String>)> = file
        .ground
        .elements
        .iter()
        .map(|(name, covered)| (name.clone(), covered.clone()))
        .collect();
    let ground = GroundSet::new(cells, elements)?;

    let mut action_sets = Vec::with_capacity(file.agents.len());
    for agent in &file.agents {
        let mut set = Vec::with_capacity(agent.actions.len());
        for action in &agent.actions {
            set.push(ground.element_set(action)?);
        }
        action_sets.push(set);
    }

    let n = file.agents.len();
    let mut utilities = Vec::with_capacity(file.utilities.len());
    for section in &file.utilities {
        match section.kind.as_str() {
            KIND_MARGINAL => utilities.push(UtilitySpec::MarginalContribution),
            KIND_TABULAR => {
                let mut overrides = BTreeMap::new();
                for entry in &section.overrides {
                    if entry.profile.len() != n {
                        return Err(Error::InvalidGame(format!(
                            "override profile arity {} for {} agents",
                            entry.profile.len(),
                            n
                        )));
                    }
                    let mut coords = Vec::with_capacity(n);
                    for names in &entry.profile {
                        coords.push(if names.is_empty() {
                            ElemSet::EMPTY
                        } else {
                            ground.element_set(names)?
                        });
                    }
                    overrides.insert(ActionProfile(coords), parse_rational::<R>(&entry.value)?);
                }
                utilities.push(UtilitySpec::Tabular { overrides });
            }
            other => {
                return Err(Error::InvalidGame(format!("unknown utility kind `{other}`")));
            }
        }
    }

    let graph = match &file.graph {
        GraphSection::Inline { n, edges } => ConstraintGraph::new(*n, edges)?,
        GraphSection::File { file: rel } => {
            let path = match base {
                Some(dir) => dir.join(rel),
                None => Path::new(rel).to_path_buf(),
            };
            load_graph(&path)?
        }
    };

    Game::new(CoverageWelfare::new(ground), action_sets, utilities, graph)
}

pub fn save_game<R: Scalar>(game: &Game<R>, path: &Path) -> Result<()> {
    let file = game_to_file(game);
    std::fs::write(path, serde_json::to_string_pretty(&file)?)?;
    Ok(())
}

pub fn load_game<R: Scalar>(path: &Path) -> Result<Game<R>> {
    let text = std::fs::read_to_string(path)?;
    let file: GameFile = serde_json::from_str(&text)?;
    game_from_file(&file, path.parent())
}
