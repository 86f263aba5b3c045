use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Exact computations on affine Schubert varieties")]
pub struct Cli {
    /// Root datum as inline JSON or `@path`, e.g. '{"type":"A","rank":2,"isogeny":"adj"}'.
    #[arg(long, global = true)]
    pub datum: Option<String>,

    /// Prime for the Z[1/p] degree lattice.
    #[arg(long, global = true, default_value_t = 2)]
    pub p: i64,

    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Maximal length for exhaustive enumerations.
    #[arg(long, global = true, default_value_t = 10)]
    pub bound: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root datum tables.
    #[command(name = "root-datum", subcommand)]
    RootDatum(RootDatumCmd),
    /// Affine Weyl group queries.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Admissible sets.
    #[command(subcommand)]
    Adm(AdmCmd),
    /// Demazure characters.
    #[command(subcommand)]
    Demazure(DemazureCmd),
    /// Degree vectors and positivity.
    #[command(subcommand)]
    Picard(PicardCmd),
    /// Section dimension comparison.
    #[command(subcommand)]
    Coherence(CoherenceCmd),
    /// Seeded randomized property checks.
    Selftest(SelftestArgs),
}

#[derive(Debug, Subcommand)]
pub enum RootDatumCmd {
    Show,
}

#[derive(Debug, Subcommand)]
pub enum WeylCmd {
    Length(ElementArg),
    #[command(name = "reduced-word")]
    ReducedWord(ElementArg),
    Leq(LeqArgs),
    Interval(ElementArg),
}

#[derive(Debug, Args)]
pub struct ElementArg {
    /// {"translation":[...],"word":[...]}, meaning t_λ · s_{w1} ⋯ s_{wk}.
    #[arg(long)]
    pub element: String,
}

#[derive(Debug, Args)]
pub struct LeqArgs {
    #[arg(long)]
    pub left: String,
    #[arg(long)]
    pub right: String,
}

#[derive(Debug, Subcommand)]
pub enum AdmCmd {
    List(AdmArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    #[default]
    Lift,
    MaxRep,
}

#[derive(Debug, Args)]
pub struct AdmArgs {
    /// Dominant coweight, e.g. '[1,0]'.
    #[arg(long)]
    pub mu: String,
    /// Facet as a JSON array of affine nodes.
    #[arg(long)]
    pub facet: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub policy: Policy,
}

#[derive(Debug, Subcommand)]
pub enum DemazureCmd {
    Char(DemazureArgs),
}

#[derive(Debug, Args)]
pub struct DemazureArgs {
    /// JSON array of node indices or symbols.
    #[arg(long)]
    pub word: String,
    /// {"fund":[...],"level":k}
    #[arg(long)]
    pub weight: String,
    /// Length-zero element appended to the word, as an element document.
    #[arg(long)]
    pub omega: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum PicardCmd {
    Degrees(PicardDegreesArgs),
    Matrix(WordArg),
    Anticanonical(WordQArgs),
    #[command(name = "certify-fano")]
    CertifyFano(WordQArgs),
}

#[derive(Debug, Args)]
pub struct WordArg {
    #[arg(long)]
    pub word: String,
}

#[derive(Debug, Args)]
pub struct PicardDegreesArgs {
    #[arg(long)]
    pub word: String,
    #[arg(long)]
    pub weight: String,
}

#[derive(Debug, Args)]
pub struct WordQArgs {
    #[arg(long)]
    pub word: String,
    /// JSON array of powers of p; defaults to all ones.
    #[arg(long)]
    pub q: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum CoherenceCmd {
    Verify(CoherenceArgs),
}

#[derive(Debug, Args)]
pub struct CoherenceArgs {
    #[arg(long)]
    pub mu: String,
    /// Multiples of the base weight: `a..b`, `a..=b`, a single integer, or a JSON array.
    #[arg(long, default_value = "1..=4")]
    pub charges: String,
    #[arg(long)]
    pub facet: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub policy: Policy,
    /// Base weight {"fund":[...],"level":k}; defaults to ρ.
    #[arg(long)]
    pub weight: Option<String>,
    /// Shift one chain coefficient (negative control).
    #[arg(long)]
    pub perturb: bool,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random cases per check.
    #[arg(long, default_value_t = 50)]
    pub cases: usize,
}
