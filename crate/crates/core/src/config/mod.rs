//! The 16 nodes and 16 trope planes of a Kummer quartic as a 4×4 grid
//! model, and the line-counting argument excluding del Pezzo cubic
//! symmetroids as contact cubics.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::gin::sextic_theorem_report;
use crate::lattice::enumerate_cubic_splittings;

pub const GRID: usize = 4;

/// Line counts of del Pezzo cubic symmetroids.
pub const LINE_COUNTS: [u32; 3] = [2, 5, 9];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("position ({0}, {1}) is outside the 4x4 grid")]
    OutOfGrid(usize, usize),
    #[error("positions must be distinct")]
    EqualPositions,
    #[error("line count {0} is not one of 2, 5, 9")]
    UnsupportedLineCount(u32),
}

/// Grid position `(row, column)` of a node or a trope plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pos(pub usize, pub usize);

impl Pos {
    pub fn new(r: usize, c: usize) -> Result<Pos, ConfigError> {
        if r >= GRID || c >= GRID {
            return Err(ConfigError::OutOfGrid(r, c));
        }
        Ok(Pos(r, c))
    }

    pub fn all() -> impl Iterator<Item = Pos> {
        (0..GRID).flat_map(|r| (0..GRID).map(move |c| Pos(r, c)))
    }

    pub fn transpose(self) -> Pos {
        Pos(self.1, self.0)
    }
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IncidenceRule {
    /// Node `(r', c')` lies on trope `(r, c)` iff exactly one of `r' = r`,
    /// `c' = c` holds.
    RowXorColumn,
    /// Same row only, excluding the node at the trope's position. Not a
    /// (16, 6) configuration.
    SameRowOnly,
}

/// Incidence between the 16 trope positions and the 16 node positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridConfig {
    pub rule: IncidenceRule,
    /// Read both grids transposed.
    pub transposed: bool,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            rule: IncidenceRule::RowXorColumn,
            transposed: false,
        }
    }
}

fn distinct_pair(a: Pos, b: Pos) -> Result<(), ConfigError> {
    for p in [a, b] {
        Pos::new(p.0, p.1)?;
    }
    if a == b {
        return Err(ConfigError::EqualPositions);
    }
    Ok(())
}

impl GridConfig {
    pub fn with_rule(rule: IncidenceRule) -> GridConfig {
        GridConfig {
            rule,
            transposed: false,
        }
    }

    pub fn transposed(self) -> GridConfig {
        GridConfig {
            transposed: !self.transposed,
            ..self
        }
    }

    pub fn incident(&self, trope: Pos, node: Pos) -> bool {
        let (t, n) = if self.transposed {
            (trope.transpose(), node.transpose())
        } else {
            (trope, node)
        };
        match self.rule {
            IncidenceRule::RowXorColumn => (n.0 == t.0) != (n.1 == t.1),
            IncidenceRule::SameRowOnly => n.0 == t.0 && n.1 != t.1,
        }
    }

    pub fn nodes_of_trope(&self, trope: Pos) -> Vec<Pos> {
        Pos::all().filter(|&n| self.incident(trope, n)).collect()
    }

    pub fn tropes_of_node(&self, node: Pos) -> Vec<Pos> {
        Pos::all().filter(|&t| self.incident(t, node)).collect()
    }

    pub fn common_nodes(&self, t1: Pos, t2: Pos) -> Result<Vec<Pos>, ConfigError> {
        distinct_pair(t1, t2)?;
        Ok(Pos::all()
            .filter(|&n| self.incident(t1, n) && self.incident(t2, n))
            .collect())
    }

    pub fn tropes_through_pair(&self, n1: Pos, n2: Pos) -> Result<Vec<Pos>, ConfigError> {
        distinct_pair(n1, n2)?;
        Ok(Pos::all()
            .filter(|&t| self.incident(t, n1) && self.incident(t, n2))
            .collect())
    }

    /// Exhaustive incidence census.
    pub fn census(&self) -> Census {
        let mut c = Census::default();
        let all: Vec<Pos> = Pos::all().collect();
        for &p in &all {
            *c.nodes_per_trope
                .entry(self.nodes_of_trope(p).len())
                .or_default() += 1;
            *c.tropes_per_node
                .entry(self.tropes_of_node(p).len())
                .or_default() += 1;
        }
        for (k, &a) in all.iter().enumerate() {
            for &b in &all[k + 1..] {
                let common = self.common_nodes(a, b).expect("distinct");
                *c.common_nodes_per_trope_pair
                    .entry(common.len())
                    .or_default() += 1;
                let through = self.tropes_through_pair(a, b).expect("distinct");
                *c.tropes_per_node_pair.entry(through.len()).or_default() += 1;
            }
        }
        c
    }
}

/// Histograms `value -> number of objects` for the four incidence counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub nodes_per_trope: BTreeMap<usize, usize>,
    pub tropes_per_node: BTreeMap<usize, usize>,
    pub common_nodes_per_trope_pair: BTreeMap<usize, usize>,
    pub tropes_per_node_pair: BTreeMap<usize, usize>,
}

fn max_key(h: &BTreeMap<usize, usize>) -> usize {
    h.keys().next_back().copied().unwrap_or(0)
}

impl Census {
    /// Largest number of trope planes containing a fixed pair of nodes.
    pub fn max_tropes_per_node_pair(&self) -> usize {
        max_key(&self.tropes_per_node_pair)
    }

    pub fn max_common_nodes(&self) -> usize {
        max_key(&self.common_nodes_per_trope_pair)
    }

    pub fn max_nodes_per_trope(&self) -> usize {
        max_key(&self.nodes_per_trope)
    }
}

/// Census checked against the (16, 6) non-degenerate configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationReport {
    pub census: Census,
    pub failures: Vec<String>,
}

impl ConfigurationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_configuration() -> ConfigurationReport {
    verify(&GridConfig::default())
}

pub fn verify(config: &GridConfig) -> ConfigurationReport {
    let census = config.census();
    let expected = [
        ("nodes per trope", &census.nodes_per_trope, 6, 16),
        ("tropes per node", &census.tropes_per_node, 6, 16),
        (
            "common nodes per trope pair",
            &census.common_nodes_per_trope_pair,
            2,
            120,
        ),
        ("tropes per node pair", &census.tropes_per_node_pair, 2, 120),
    ];
    let failures = expected
        .iter()
        .filter(|(_, h, v, n)| **h != BTreeMap::from([(*v, *n)]))
        .map(|(name, h, v, n)| format!("{name}: expected {{{v}: {n}}}, found {h:?}"))
        .collect();
    ConfigurationReport { census, failures }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepStatus {
    /// Taken as input, not derived here.
    Premise,
    /// Follows from the census or from earlier steps.
    Derived,
    /// Contradicts an earlier step.
    Contradiction,
    /// Does not decide the case.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ExclusionVerdict {
    Impossible,
    Undecided,
}

/// Named integers recorded by a trace step, serialized as an ordered map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Numbers(Vec<(&'static str, i64)>);

impl Numbers {
    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, i64)> + '_ {
        self.0.iter().copied()
    }
}

impl<const N: usize> From<[(&'static str, i64); N]> for Numbers {
    fn from(v: [(&'static str, i64); N]) -> Self {
        Numbers(v.to_vec())
    }
}

impl Serialize for Numbers {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub claim: String,
    pub numbers: Numbers,
    pub status: StepStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionTrace {
    pub lines: u32,
    pub steps: Vec<TraceStep>,
    pub verdict: ExclusionVerdict,
}

/// Inputs produced by the other modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExclusionInputs {
    /// Largest genus of a sextic curve on an irreducible cubic surface.
    pub sextic_genus_bound: i64,
    /// Whether a sextic of that genus on an irreducible cubic is a complete
    /// intersection with a quadric.
    pub extremal_is_complete_intersection: bool,
}

impl ExclusionInputs {
    pub fn from_sextic_report() -> ExclusionInputs {
        let r = sextic_theorem_report();
        ExclusionInputs {
            sextic_genus_bound: r.max_genus_on_cubic,
            extremal_is_complete_intersection: r.complete_intersection == Some((2, 3)),
        }
    }
}

pub fn exclusion_report(lines: u32) -> Result<ExclusionTrace, ConfigError> {
    exclusion_report_with(lines, ExclusionInputs::from_sextic_report())
}

/// Runs the exclusion argument for a contact cubic with `lines` lines.
pub fn exclusion_report_with(
    lines: u32,
    inputs: ExclusionInputs,
) -> Result<ExclusionTrace, ConfigError> {
    if !LINE_COUNTS.contains(&lines) {
        return Err(ConfigError::UnsupportedLineCount(lines));
    }
    let mut steps = Vec::new();
    let finish = |steps, verdict| {
        Ok(ExclusionTrace {
            lines,
            steps,
            verdict,
        })
    };

    let census = GridConfig::default().census();
    let max_pair = census.max_tropes_per_node_pair() as i64;
    let common = census.max_common_nodes() as i64;
    let on_trope = census.max_nodes_per_trope() as i64;
    let tropes = 16i64;
    steps.push(TraceStep {
        claim: "incidence census: two trope planes share exactly `common_nodes` nodes, and no node pair lies on more than `max_tropes_per_node_pair` trope planes".into(),
        numbers: [
            ("tropes", tropes),
            ("nodes_per_trope", on_trope),
            ("common_nodes", common),
            ("max_tropes_per_node_pair", max_pair),
        ]
        .into(),
        status: StepStatus::Derived,
    });

    let splittings = enumerate_cubic_splittings(inputs.sextic_genus_bound);
    let cubic_nodes = match splittings.as_slice() {
        [s] if inputs.extremal_is_complete_intersection => {
            let (nodes, genus) = if s.genus2 == inputs.sextic_genus_bound {
                (s.j_size, s.genus2)
            } else {
                (s.i_size, s.genus1)
            };
            steps.push(TraceStep {
                claim: "the contact curve splits uniquely; the cubic S carries the member of maximal genus, a (2,3) complete intersection through `cubic_nodes` nodes".into(),
                numbers: [
                    ("sextic_genus_bound", inputs.sextic_genus_bound),
                    ("splittings", 1),
                    ("member_genus", genus),
                    ("cubic_nodes", i64::from(nodes)),
                ]
                .into(),
                status: StepStatus::Derived,
            });
            i64::from(nodes)
        }
        _ => {
            steps.push(TraceStep {
                claim: "the contact curve class is not determined, so S need not be a contact cubic along a (2,3) complete intersection".into(),
                numbers: [
                    ("sextic_genus_bound", inputs.sextic_genus_bound),
                    ("splittings", splittings.len() as i64),
                    ("complete_intersection", i64::from(inputs.extremal_is_complete_intersection)),
                ]
                .into(),
                status: StepStatus::Inconclusive,
            });
            return finish(steps, ExclusionVerdict::Undecided);
        }
    };

    let others = tropes - 1;
    steps.push(TraceStep {
        claim:
            "each of the trope planes other than T meets S in a curve containing one of its lines"
                .into(),
        numbers: [("other_tropes", others), ("lines", i64::from(lines))].into(),
        status: StepStatus::Premise,
    });

    // a line on two trope planes is their intersection and contains their
    // common nodes; a third plane through it puts that node pair on three
    // planes
    let max_per_line = max_pair;
    let forced = (others + i64::from(lines) - 1) / i64::from(lines);
    let pigeonhole = forced > max_per_line;
    steps.push(TraceStep {
        claim: "pigeonhole: some line lies on `forced` trope planes, but a line lies on at most `max_tropes_per_line`".into(),
        numbers: [
            ("other_tropes", others),
            ("lines", i64::from(lines)),
            ("forced", forced),
            ("max_tropes_per_line", max_per_line),
        ]
        .into(),
        status: if pigeonhole { StepStatus::Contradiction } else { StepStatus::Inconclusive },
    });
    if pigeonhole {
        return finish(steps, ExclusionVerdict::Impossible);
    }

    // with at most two planes per line, the excess over one plane per line
    // is carried by lines on two planes
    let double_lines = others - i64::from(lines) * (max_per_line - 1);
    steps.push(TraceStep {
        claim: "at least `double_lines` lines of S lie on two trope planes other than T".into(),
        numbers: [
            ("other_tropes", others),
            ("lines", i64::from(lines)),
            ("double_lines", double_lines),
        ]
        .into(),
        status: if double_lines > 0 {
            StepStatus::Derived
        } else {
            StepStatus::Inconclusive
        },
    });
    if double_lines <= 0 {
        return finish(steps, ExclusionVerdict::Undecided);
    }

    // both nodes of such a line on T would put the pair on T and on the two
    // planes through the line
    let off_t_per_line = if max_pair < 3 { common - 1 } else { 0 };
    steps.push(TraceStep {
        claim: "each such line passes through `common_nodes` nodes, at most one of them on T"
            .into(),
        numbers: [
            ("common_nodes", common),
            ("max_tropes_per_node_pair", max_pair),
            ("nodes_off_t_per_line", off_t_per_line),
        ]
        .into(),
        status: if off_t_per_line > 0 {
            StepStatus::Derived
        } else {
            StepStatus::Inconclusive
        },
    });

    let nodes_on_s = on_trope + off_t_per_line.min(1);
    let contradiction = nodes_on_s > cubic_nodes;
    steps.push(TraceStep {
        claim: "S passes through the nodes on T and at least one more, so through at least `nodes_on_s` nodes, but its class allows `cubic_nodes`".into(),
        numbers: [
            ("nodes_on_t", on_trope),
            ("nodes_on_s", nodes_on_s),
            ("cubic_nodes", cubic_nodes),
        ]
        .into(),
        status: if contradiction { StepStatus::Contradiction } else { StepStatus::Inconclusive },
    });
    let verdict = if contradiction {
        ExclusionVerdict::Impossible
    } else {
        ExclusionVerdict::Undecided
    };
    finish(steps, verdict)
}
