use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rigikit", version, about = "Generic rigidity of graphs: ranks, constructions and exhaustive checks")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Seed for every random choice; recorded in the output.
    #[arg(long, global = true, env = "RIGIKIT_SEED", default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Include wall times in reports.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Also write witness and violation graph6 strings to this file.
    #[arg(long, global = true)]
    pub witness_out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File whose first non-empty line is a graph6 string.
    #[arg(long)]
    pub g6_file: Option<PathBuf>,
    /// File with an `n m` header and one `u v` line per edge.
    #[arg(long)]
    pub edge_list: Option<PathBuf>,
    /// Catalog name such as W5 or glued_cliques(5,5,2).
    #[arg(long)]
    pub catalog: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct GraphDim {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long = "dim", short = 'd')]
    pub dim: usize,
}

#[derive(Args, Debug, Clone)]
pub struct Pair {
    #[arg(long)]
    pub u: usize,
    #[arg(long)]
    pub v: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank of the rigidity matroid.
    Rank {
        #[command(flatten)]
        g: GraphDim,
        /// Independent evaluation points; the maximum rank is reported.
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Whether the graph is rigid, with its degrees of freedom.
    Rigid {
        #[command(flatten)]
        g: GraphDim,
    },
    /// Degrees of freedom.
    Dof {
        #[command(flatten)]
        g: GraphDim,
    },
    /// The closure: the graph plus every linked pair.
    Closure {
        #[command(flatten)]
        g: GraphDim,
    },
    /// Whether a non-adjacent pair is linked.
    Linked {
        #[command(flatten)]
        g: GraphDim,
        #[command(flatten)]
        pair: Pair,
    },
    /// Whether an edge is a bridge.
    Bridge {
        #[command(flatten)]
        g: GraphDim,
        #[command(flatten)]
        pair: Pair,
    },
    /// A circuit of the graph, or the fundamental circuit of a linked pair.
    Circuit {
        #[command(flatten)]
        g: GraphDim,
        #[arg(long, requires = "v")]
        u: Option<usize>,
        #[arg(long, requires = "u")]
        v: Option<usize>,
    },
    /// Rank increase from coning the graph.
    Rup {
        #[command(flatten)]
        g: GraphDim,
    },
    /// Rank contribution of a vertex (all vertices if none is given).
    Rc {
        #[command(flatten)]
        g: GraphDim,
        #[arg(long)]
        vertex: Option<usize>,
        /// Estimate from this many random orderings instead of exactly.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Star rank contribution of a vertex (all vertices if none is given).
    Rcstar {
        #[command(flatten)]
        g: GraphDim,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// Also evaluate the three lower bounds.
        #[arg(long)]
        bounds: bool,
    },
    /// Apply a rigidity-preserving operation.
    Construct {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum)]
        op: Operation,
        #[arg(long = "dim", short = 'd', default_value_t = 0)]
        dim: usize,
        /// Attachment set, comma separated.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        /// Edge removed by a 1-extension, as `u,w`.
        #[arg(long, value_delimiter = ',')]
        edge: Vec<usize>,
        /// Vertex to split.
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        nu: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        nv: Vec<usize>,
        /// Cycle attachment pairs, as `a-b,c-d,...`.
        #[arg(long, value_delimiter = ',')]
        pairs: Vec<String>,
    },
    /// List catalog entries, or show and recheck one.
    Catalog {
        name: Option<String>,
    },
    /// All graphs of order n up to isomorphism, optionally filtered.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FilterKind::All)]
        filter: FilterKind,
        #[arg(long, default_value_t = 0)]
        bound: i64,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
    /// f(n, d): one more than the largest minimum degree of a non-rigid graph.
    ComputeF {
        #[arg(long)]
        n: usize,
        #[arg(long = "dim", short = 'd')]
        dim: usize,
    },
    /// g(n, d): one more than the largest eta of a non-rigid, non-complete graph.
    ComputeG {
        #[arg(long)]
        n: usize,
        #[arg(long = "dim", short = 'd')]
        dim: usize,
    },
    /// Exhaustive or seeded verification of one claim.
    Verify {
        #[arg(long, value_enum)]
        claim: Claim,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "dim", short = 'd')]
        dim: Option<usize>,
        /// Bound checked by `degree-sum`.
        #[arg(long)]
        kind: Option<String>,
        /// Instances for the seeded construction checks.
        #[arg(long, default_value_t = 300)]
        instances: usize,
    },
    /// Fraction of rigid samples of G(n, p).
    RandomExperiment {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long = "dim", short = 'd')]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Pair-contraction chain on a graph or on a sample of G(n, 1/2).
    ChainCheck {
        #[command(flatten)]
        input: ChainInput,
        #[arg(long = "dim", short = 'd')]
        dim: usize,
        #[arg(long, value_enum, default_value_t = PairingKind::Default)]
        pairing: PairingKind,
        /// Pairings tried by `--pairing search`.
        #[arg(long, default_value_t = 32)]
        attempts: usize,
    },
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct ChainInput {
    #[arg(long)]
    pub graph6: Option<String>,
    #[arg(long)]
    pub g6_file: Option<PathBuf>,
    #[arg(long)]
    pub edge_list: Option<PathBuf>,
    #[arg(long)]
    pub catalog: Option<String>,
    /// Draw the graph from G(n, 1/2) with the run seed.
    #[arg(long)]
    pub n: Option<usize>,
}

impl ChainInput {
    pub fn graph_input(&self) -> GraphInput {
        GraphInput {
            graph6: self.graph6.clone(),
            g6_file: self.g6_file.clone(),
            edge_list: self.edge_list.clone(),
            catalog: self.catalog.clone(),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    ZeroExt,
    OneExt,
    VertexSplit,
    SpiderSplit,
    Cone,
    CycleAttach,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterKind {
    All,
    MinDegree,
    Eta,
    ComplementEdgeSum,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingKind {
    Default,
    Greedy,
    Search,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    #[value(name = "R3")]
    R3,
    #[value(name = "R2")]
    R2,
    #[value(name = "global-2d")]
    Global2d,
    Ecount,
    DegreeSum,
    SimplicialVertex,
    Minlarge,
    Minlarge3,
    Claim2,
    SmallCircuits,
    Easybound,
    S1s2s3,
    RcSum,
    RcBounds,
    Coning,
    Preservation,
    CycleConstruction,
}
