//! Verification harness: one check per bound or identity about squared edge
//! ideals, a parallel batch driver over graph corpora, and a random
//! counterexample hunter.
//!
//! Every check computes both sides exactly and returns a [`CheckOutcome`].
//! "Not applicable" is a regular status, so corpora need no pre-filtering.

mod checks;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::random_graph;
use crate::depth::DEFAULT_VAR_CAP;
use crate::error::HarnessError;
use crate::graph::{Graph, VertexSet};
use crate::homology::FieldChoice;

pub use checks::*;
pub use report::{write_atomic, Finding, Summary, VerificationReport};

/// The families of checks the harness knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckId {
    /// `depth I(G) >= alpha2(G) + 1`.
    Spn,
    /// Star packing after deleting the neighbourhoods of a triangle.
    Star,
    /// Intersection of the two colons by the ends of an edge.
    Int,
    Depthlem,
    Cordepth,
    Last,
    /// The three lower bounds for `depth I(G)^2`.
    Main,
    /// The three sharp instances.
    Examples,
    Banerjee,
    Morey,
    Symbolic,
    Order,
    Deletion,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::Spn,
        CheckId::Star,
        CheckId::Int,
        CheckId::Depthlem,
        CheckId::Cordepth,
        CheckId::Last,
        CheckId::Main,
        CheckId::Examples,
        CheckId::Banerjee,
        CheckId::Morey,
        CheckId::Symbolic,
        CheckId::Order,
        CheckId::Deletion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Spn => "spn",
            CheckId::Star => "star",
            CheckId::Int => "int",
            CheckId::Depthlem => "depthlem",
            CheckId::Cordepth => "cordepth",
            CheckId::Last => "last",
            CheckId::Main => "main",
            CheckId::Examples => "examples",
            CheckId::Banerjee => "banerjee",
            CheckId::Morey => "morey",
            CheckId::Symbolic => "symbolic",
            CheckId::Order => "order",
            CheckId::Deletion => "deletion",
        }
    }

    /// True for checks that run per corpus graph (everything but `examples`).
    pub fn per_graph(self) -> bool {
        self != CheckId::Examples
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(HarnessError::UnknownCheck(s))
    }
}

/// Resolves a list of check names. `all` expands to every check; `main1`,
/// `main2` and `main3` select the `main` family.
pub fn parse_checks<S: AsRef<str>>(names: &[S]) -> Result<Vec<CheckId>, HarnessError> {
    let mut out = Vec::new();
    for name in names {
        let name = name.as_ref().trim();
        if name.eq_ignore_ascii_case("all") {
            out.extend(CheckId::ALL);
        } else if matches!(name, "main1" | "main2" | "main3") {
            out.push(CheckId::Main);
        } else {
            out.push(name.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

/// One side of a checked relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Ideal(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Ideal(s) => f.write_str(s),
        }
    }
}

/// The instance a parameterized check was run on.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub triangle: Option<[String; 3]>,
}

impl Params {
    pub fn is_empty(&self) -> bool {
        self.edge.is_none() && self.a.is_none() && self.triangle.is_none()
    }

    fn key(&self) -> String {
        let mut s = String::new();
        if let Some([u, v]) = &self.edge {
            s.push_str(&format!("e={u}{v};"));
        }
        if let Some(a) = &self.a {
            s.push_str(&format!("A={};", a.join(",")));
        }
        if let Some(t) = &self.triangle {
            s.push_str(&format!("t={};", t.join(",")));
        }
        s
    }
}

/// Evidence attached to an outcome; always present on failures.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Centres of a maximum star packing of the input graph.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub centers: Option<Vec<String>>,
    /// The set `L` of common neighbours, where relevant.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<Vec<String>>,
    /// A generator lying in one side but not the other.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check_id: String,
    /// graph6 string of the input graph.
    pub graph_id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<Value>,
    #[serde(skip_serializing_if = "Params::is_empty", default)]
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// The deletion set was drawn at random rather than enumerated.
    #[serde(default)]
    pub sampled: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub field_char: Option<FieldChoice>,
    pub elapsed_ms: f64,
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }

    fn sort_key(&self) -> (String, String, String, Option<FieldChoice>) {
        (
            self.check_id.clone(),
            self.graph_id.clone(),
            self.params.key(),
            self.field_char,
        )
    }
}

/// Limits for a suite run.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    /// Stop after this many corpus graphs.
    pub max_graphs: Option<usize>,
    /// Skip graphs not yet started once this much time has passed.
    pub time_limit: Option<Duration>,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub checks: Vec<CheckId>,
    /// Each depth-valued check runs once per listed field.
    pub fields: Vec<FieldChoice>,
    pub seed: u64,
    /// Deletion sets are enumerated exhaustively while the admissible pool has
    /// at most this many elements, and sampled otherwise.
    pub exhaustive_pool_limit: usize,
    /// Number of sampled deletion sets per edge when sampling.
    pub samples_per_edge: usize,
    pub var_cap: usize,
    pub budget: Budget,
}

impl SuiteConfig {
    pub fn new(checks: Vec<CheckId>, fields: Vec<FieldChoice>) -> Self {
        SuiteConfig {
            checks,
            fields,
            seed: 0,
            exhaustive_pool_limit: 10,
            samples_per_edge: 64,
            var_cap: DEFAULT_VAR_CAP,
            budget: Budget::default(),
        }
    }
}

/// Deletion sets `A` to try for the edge `x_i x_j`: every subset of the
/// admissible pool when it is small, otherwise a seeded sample that always
/// includes the empty set and the whole pool. The flag reports sampling.
pub fn deletion_sets(g: &Graph, i: usize, j: usize, config: &SuiteConfig) -> (Vec<VertexSet>, bool) {
    let pool: Vec<usize> = g.admissible_pool(i, j).iter().collect();
    if pool.len() <= config.exhaustive_pool_limit {
        let sets = (0u64..1 << pool.len())
            .map(|bits| crate::graph::Bits(bits).map(|k| pool[k]).collect())
            .collect();
        return (sets, false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(config.seed, &format!("{}:{i}:{j}", g.to_graph6())));
    let mut sets = vec![VertexSet::EMPTY, pool.iter().copied().collect()];
    while sets.len() < config.samples_per_edge.max(2) {
        let s: VertexSet = pool
            .iter()
            .copied()
            .filter(|_| rand::Rng::gen_bool(&mut rng, 0.5))
            .collect();
        sets.push(s);
    }
    sets.sort();
    sets.dedup();
    (sets, true)
}

/// FNV-1a over `text`, folded into `seed`.
fn mix_seed(seed: u64, text: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Runs the configured checks over every graph in `corpus`.
pub fn run_suite(corpus: &[Graph], descriptor: &str, config: &SuiteConfig) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    let limit = config.budget.max_graphs.unwrap_or(usize::MAX).min(corpus.len());
    let graphs = &corpus[..limit];
    let per_graph: Vec<CheckId> = config.checks.iter().copied().filter(|c| c.per_graph()).collect();

    let results: Vec<Result<Option<Vec<CheckOutcome>>, HarnessError>> = graphs
        .par_iter()
        .map(|g| {
            if config.budget.time_limit.is_some_and(|t| start.elapsed() > t) {
                return Ok(None);
            }
            let mut out = Vec::new();
            for &check in &per_graph {
                out.extend(run_check_on_graph(check, g, config)?);
            }
            Ok(Some(out))
        })
        .collect();

    let mut outcomes = Vec::new();
    let mut truncated = limit < corpus.len();
    for r in results {
        match r? {
            Some(v) => outcomes.extend(v),
            None => truncated = true,
        }
    }
    if config.checks.contains(&CheckId::Examples) {
        for (k, &field) in config.fields.iter().enumerate() {
            let mut v = check_examples_sharp(field)?;
            if k > 0 {
                v.retain(|o| o.field_char.is_some());
            }
            outcomes.extend(v);
        }
    }
    outcomes.sort_by_key(|a| a.sort_key());
    let findings = field_disagreements(&outcomes);
    let field_char = match config.fields.as_slice() {
        [f] => f.to_string(),
        _ => "both".to_string(),
    };
    Ok(VerificationReport::new(
        descriptor.to_string(),
        field_char,
        config.seed,
        outcomes,
        findings,
        truncated,
    ))
}

/// All outcomes of one check family on one graph, quantified over edges and
/// deletion sets where the check is parameterized.
pub fn run_check_on_graph(check: CheckId, g: &Graph, config: &SuiteConfig) -> Result<Vec<CheckOutcome>, HarnessError> {
    let ctx = Ctx::new(g, config.var_cap);
    let mut out = Vec::new();
    let edges = g.edges();
    match check {
        CheckId::Spn => {
            for &f in &config.fields {
                out.push(ctx.prop_spn(f)?);
            }
        }
        CheckId::Star => out.extend(ctx.lemma_star()),
        CheckId::Int => {
            for &(i, j) in &edges {
                out.push(ctx.lemma_int(i, j)?);
            }
        }
        CheckId::Main => {
            for &f in &config.fields {
                out.extend(ctx.main(f)?);
            }
        }
        CheckId::Examples => {}
        CheckId::Morey => {
            for &(i, j) in &edges {
                out.push(ctx.morey(i, j)?);
            }
        }
        CheckId::Symbolic => {
            for &f in &config.fields {
                let mut v = ctx.symbolic_square(f)?;
                if f != config.fields[0] {
                    // the field-free equalities only need one run
                    v.retain(|o| o.field_char.is_some());
                }
                out.extend(v);
            }
        }
        CheckId::Order => out.push(ctx.order_decomposition()?),
        CheckId::Depthlem | CheckId::Cordepth | CheckId::Last | CheckId::Banerjee | CheckId::Deletion => {
            for &(i, j) in &edges {
                let (sets, sampled) = deletion_sets(g, i, j, config);
                for a in sets {
                    let mut batch = Vec::new();
                    match check {
                        CheckId::Depthlem => {
                            for &f in &config.fields {
                                batch.push(ctx.lemma_depthlem(i, j, a, f)?);
                            }
                        }
                        CheckId::Cordepth => {
                            for &f in &config.fields {
                                batch.push(ctx.cor_cordepth(i, j, a, f)?);
                            }
                        }
                        CheckId::Last => {
                            for &f in &config.fields {
                                batch.push(ctx.lemma_last(i, j, a, f)?);
                            }
                        }
                        CheckId::Banerjee => batch.push(ctx.banerjee_colon(i, j, a)?),
                        _ => batch.push(ctx.deletion_bound(i, j, a)?),
                    }
                    for o in &mut batch {
                        o.sampled = sampled;
                    }
                    out.extend(batch);
                }
            }
            if edges.is_empty() {
                out.push(CheckOutcome::not_applicable(check.name(), g, "graph has no edges"));
            }
        }
    }
    Ok(out)
}

/// Depth-valued outcomes whose left-hand sides differ between fields.
fn field_disagreements(outcomes: &[CheckOutcome]) -> Vec<Finding> {
    let mut groups: BTreeMap<(String, String, String), Vec<&CheckOutcome>> = BTreeMap::new();
    for o in outcomes.iter().filter(|o| o.field_char.is_some()) {
        groups
            .entry((o.check_id.clone(), o.graph_id.clone(), o.params.key()))
            .or_default()
            .push(o);
    }
    groups
        .into_values()
        .filter(|g| g.windows(2).any(|w| w[0].lhs != w[1].lhs))
        .map(|g| Finding {
            check_id: g[0].check_id.clone(),
            graph_id: g[0].graph_id.clone(),
            params: g[0].params.clone(),
            values: g
                .iter()
                .map(|o| {
                    (
                        o.field_char.expect("filtered").to_string(),
                        o.lhs.clone().unwrap_or(Value::Int(-1)),
                    )
                })
                .collect(),
        })
        .collect()
}

/// Seeded random search for violations of one check family on `G(n, p)`.
#[derive(Clone, Debug)]
pub struct HuntConfig {
    pub n: usize,
    pub count: usize,
    pub edge_probability: f64,
    /// Only outcomes whose id starts with this prefix count (e.g. `main1`).
    pub check_prefix: String,
    pub suite: SuiteConfig,
}

pub fn hunt(config: &HuntConfig) -> Result<VerificationReport, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.suite.seed);
    let corpus: Vec<Graph> = (0..config.count)
        .map(|_| random_graph(config.n, config.edge_probability, &mut rng))
        .collect::<Result<_, _>>()?;
    let descriptor = format!(
        "random G({}, {}) x{} seed={}",
        config.n, config.edge_probability, config.count, config.suite.seed
    );
    let mut report = run_suite(&corpus, &descriptor, &config.suite)?;
    report.retain(|o| o.check_id.starts_with(&config.check_prefix));
    Ok(report)
}
