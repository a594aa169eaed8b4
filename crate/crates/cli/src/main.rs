use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Output;

#[derive(Parser, Debug)]
#[command(name = "uvbraid", version, about = "Word problem, certificates and quotients for UV_n(c)")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Number of strands.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Number of crossing types.
    #[arg(long, global = true)]
    pub c: Option<usize>,
    /// Modulus of the finite quotient.
    #[arg(long, global = true)]
    pub d: Option<u64>,
    /// Crossing type for `chi`.
    #[arg(long, global = true)]
    pub t: Option<usize>,
    /// Exponent tuple ε_1,…,ε_{c+1} for `hom phi`, e.g. `1,0,1`.
    #[arg(long, global = true)]
    pub eps: Option<String>,
    /// Degree of the target symmetric group for `hom enumerate`.
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// A word, e.g. "r1 s2.1 S1.2".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Oracle search depth.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Oracle beam width.
    #[arg(long, global = true)]
    pub width: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for the randomized checks of `verify-paper`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form (δ-part, permutation) of --word.
    Nf,
    /// Decide whether two words are equal.
    Eq { u: String, v: String },
    /// Decide whether --word is the identity.
    Trivial,
    /// Decide whether --word lies in the pure subgroup.
    Pure,
    /// The two projections of --word to S_n and the section of its π^K image.
    Perm,
    /// The commutation graph of the δ generators.
    Graph {
        #[arg(value_enum, default_value_t = GraphView::Stats)]
        view: GraphView,
    },
    /// Clique number of the commutation graph, i.e. the cohomological dimension.
    Vcd,
    /// Howson property via P3-freeness of the commutation graph.
    Howson,
    /// An induced square in the commutation graph, if any.
    LerfWitness,
    /// Evidence that the centre is trivial.
    CenterWitness,
    /// Homomorphisms to symmetric groups.
    Hom {
        #[command(subcommand)]
        action: HomAction,
    },
    /// Abelianization of --word in Z^c + Z/2.
    Ab,
    /// Parity of the colour-t exponent sum of --word.
    Chi,
    /// The finite quotient (Z/d)^c x S_n.
    Quot {
        #[command(subcommand)]
        action: QuotAction,
    },
    /// Bounded relator-rewriting search.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Run every structural check and report claim by claim.
    VerifyPaper,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GraphView {
    Dot,
    Stats,
}

#[derive(Subcommand, Debug)]
enum HomAction {
    /// Check a homomorphism given as JSON (file path, or stdin when omitted).
    Check { file: Option<String> },
    /// The homomorphism φ_ε given by --eps.
    Phi,
    /// Enumerate all homomorphisms into S_m.
    Enumerate {
        #[arg(long, default_value_t = 50_000_000)]
        max_nodes: u64,
        #[arg(long, default_value_t = 300)]
        max_seconds: u64,
    },
}

#[derive(Subcommand, Debug)]
enum QuotAction {
    /// Image of --word.
    Eval,
    /// Order of the quotient, with a surjectivity certificate.
    Order,
}

#[derive(Subcommand, Debug)]
enum OracleAction {
    /// Search for a rewriting proof that u = v.
    Eq { u: String, v: String },
}

fn run(cli: Cli) -> Result<Output, String> {
    let g = &cli.global;
    match cli.command {
        Command::Nf => commands::nf(g),
        Command::Eq { u, v } => commands::eq(g, &u, &v),
        Command::Trivial => commands::trivial(g),
        Command::Pure => commands::pure(g),
        Command::Perm => commands::perm(g),
        Command::Graph { view: GraphView::Dot } => commands::graph_dot(g),
        Command::Graph { view: GraphView::Stats } => commands::graph_stats(g),
        Command::Vcd => commands::vcd(g),
        Command::Howson => commands::howson(g),
        Command::LerfWitness => commands::lerf_witness(g),
        Command::CenterWitness => commands::center_witness(g),
        Command::Hom { action: HomAction::Check { file } } => commands::hom_check(g, file.as_deref()),
        Command::Hom { action: HomAction::Phi } => commands::hom_phi(g),
        Command::Hom { action: HomAction::Enumerate { max_nodes, max_seconds } } => {
            commands::hom_enumerate(g, max_nodes, max_seconds)
        }
        Command::Ab => commands::ab(g),
        Command::Chi => commands::chi(g),
        Command::Quot { action: QuotAction::Eval } => commands::quot_eval(g),
        Command::Quot { action: QuotAction::Order } => commands::quot_order(g),
        Command::Oracle { action: OracleAction::Eq { u, v } } => commands::oracle_eq(g, &u, &v),
        Command::VerifyPaper => commands::verify_paper(g),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 64,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.global.format;
    match run(cli) {
        Ok(out) => {
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json output") + "\n",
                Format::Text => out.text,
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
