use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rigidkit::maxwell::{EnumOptions, DEFAULT_ENUM_CAP, ENUM_CAP_ENV};
use rigidkit::report::{
    analyze, nullity_table, render_table, AnalysisRequest, Expectations, TableFamily, TableOptions,
};
use rigidkit::rigidity::{DEFAULT_RANGE, DEFAULT_SEED, DEFAULT_TRIALS};
use rigidkit::{Classification, Edge, Family, GraphFile, RankMode, RankOptions};

mod selftest;

#[derive(Parser)]
#[command(
    name = "rigidkit",
    version,
    about = "Hyperbanana constructions, Maxwell counts and generic rigidity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file for one of the built-in families.
    Gen(GenArgs),
    /// Run Maxwell, rigidity and implied-edge analyses on a graph file.
    Check(CheckArgs),
    /// List implied edges of a graph file.
    Implied(ImpliedArgs),
    /// Nullity table for the odd or even hyperbanana family.
    Table(TableArgs),
    /// Reproduce the headline results on small instances.
    Selftest(RankArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Banana,
    Hyperbanana,
    EvenHyperbanana,
    Complete,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Dimension.
    #[arg(short = 'd', long)]
    d: usize,
    /// Number of banana vertices (or the order of a complete graph).
    #[arg(short = 'b', long)]
    b: usize,
    /// Output path; standard output when omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct RankArgs {
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Coordinates are drawn from [-range, range].
    #[arg(long, default_value_t = DEFAULT_RANGE)]
    range: i64,
    /// Confirm the first trial with exact rational elimination.
    #[arg(long)]
    exact: bool,
    /// Exact elimination on every trial.
    #[arg(long, conflicts_with = "exact")]
    exact_all: bool,
    /// Worker threads for subset enumeration (0 = all cores).
    #[arg(long, default_value_t = 0)]
    parallelism: usize,
    /// Largest vertex count for exhaustive enumeration.
    #[arg(long, env = ENUM_CAP_ENV, default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: usize,
}

impl RankArgs {
    fn rank_options(&self) -> RankOptions {
        let mode = if self.exact_all {
            RankMode::Both
        } else if self.exact {
            RankMode::Exact
        } else {
            RankMode::Modp
        };
        RankOptions {
            trials: self.trials,
            seed: self.seed,
            range: self.range,
            mode,
        }
    }

    fn enum_options(&self) -> EnumOptions {
        EnumOptions {
            parallelism: self.parallelism,
            cap: self.enum_cap,
            force_condition2: false,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PassFail {
    Pass,
    Fail,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long)]
    maxwell: bool,
    #[arg(long)]
    classify: bool,
    #[arg(long)]
    implied: bool,
    /// Run Maxwell condition 2 even when condition 1 fails.
    #[arg(long)]
    force_condition2: bool,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    rank: RankArgs,
    #[arg(long, value_enum)]
    expect_maxwell: Option<PassFail>,
    #[arg(long)]
    expect_class: Option<Classification>,
    #[arg(long)]
    expect_rank: Option<usize>,
    #[arg(long)]
    expect_nullity: Option<usize>,
    #[arg(long)]
    expect_dof: Option<usize>,
    #[arg(long)]
    expect_implied: Option<usize>,
}

#[derive(Args)]
struct ImpliedArgs {
    file: PathBuf,
    /// Candidate pairs as `u-v,u-v,...`; all non-edges when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_pair)]
    pairs: Option<Vec<Edge>>,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    rank: RankArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Odd,
    Even,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: TableKind,
    #[arg(long, default_value_t = 2)]
    b_min: usize,
    #[arg(long, default_value_t = 4)]
    b_max: usize,
    /// Skip the Maxwell column.
    #[arg(long)]
    no_maxwell: bool,
    /// Fail on conjecture mismatches too.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    rank: RankArgs,
}

fn parse_pair(s: &str) -> std::result::Result<Edge, String> {
    let (u, v) = s
        .split_once('-')
        .ok_or_else(|| format!("pair `{s}` is not of the form u-v"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad vertex `{x}` in pair `{s}`"))
    };
    Ok((parse(u)?, parse(v)?))
}

fn read_graph(path: &PathBuf) -> Result<GraphFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    GraphFile::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn gen(args: &GenArgs) -> Result<ExitCode> {
    let (d, b) = (args.d, args.b);
    let family = match args.family {
        FamilyKind::Banana => Family::Banana { d, b },
        FamilyKind::Hyperbanana => Family::Hyperbanana { d, b },
        FamilyKind::EvenHyperbanana => Family::EvenHyperbanana { d, b },
        FamilyKind::Complete => Family::Complete { k: b },
    };
    let mut file = GraphFile::from_family(family)?;
    file.d = d;
    if !family.is_maxwell_family() {
        eprintln!(
            "warning: {family} is outside the Maxwell families (d = 2b-1 for hyperbanana, d = 2b for even-hyperbanana)"
        );
    }
    let mut summary = format!("{family}: d={d} n={} m={}", file.graph.n(), file.graph.m());
    if let Some(l) = family.labels()? {
        let range = |v: &[usize]| match (v.first(), v.last()) {
            (Some(a), Some(z)) => format!("{a}..={z}"),
            _ => "-".to_string(),
        };
        summary += &format!(
            "\n  v1 {}  v2 {}  u {}",
            range(&l.v1),
            range(&l.v2),
            range(&l.u)
        );
        if !l.e_plus.is_empty() {
            summary += &format!("  e+ {:?}", l.e_plus);
        }
    }
    match &args.out {
        Some(path) => {
            fs::write(path, file.to_text())
                .with_context(|| format!("writing {}", path.display()))?;
            println!("{summary}");
        }
        None => {
            print!("{}", file.to_text());
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check(args: &CheckArgs) -> Result<ExitCode> {
    let file = read_graph(&args.file)?;
    let any = args.maxwell || args.classify || args.implied;
    let mut enumeration = args.rank.enum_options();
    enumeration.force_condition2 = args.force_condition2;
    let req = AnalysisRequest {
        maxwell: args.maxwell || !any,
        classify: args.classify || !any,
        implied: args.implied,
        implied_candidates: None,
        rank: args.rank.rank_options(),
        enumeration,
        expect: Expectations {
            maxwell: args.expect_maxwell.map(|e| matches!(e, PassFail::Pass)),
            classification: args.expect_class,
            rank: args.expect_rank,
            nullity: args.expect_nullity,
            dof: args.expect_dof,
            implied_count: args.expect_implied,
        },
    };
    let report = analyze(&file, &req)?;
    if args.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    Ok(if report.expectations_met() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn implied(args: &ImpliedArgs) -> Result<ExitCode> {
    let file = read_graph(&args.file)?;
    let found = rigidkit::implied_edges(
        &file.graph,
        file.d,
        args.pairs.as_deref(),
        &args.rank.rank_options(),
    )?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&found)?);
    } else {
        println!("{} implied edge(s)", found.len());
        for (u, v) in found {
            println!("{u} {v}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn table(args: &TableArgs) -> Result<ExitCode> {
    if args.b_min > args.b_max {
        bail!("empty b range {}..={}", args.b_min, args.b_max);
    }
    let kind = match args.family {
        TableKind::Odd => TableFamily::Odd,
        TableKind::Even => TableFamily::Even,
    };
    let mut rank = args.rank.rank_options();
    rank.mode = RankMode::Modp;
    let opts = TableOptions {
        rank,
        enumeration: args.rank.enum_options(),
        maxwell: !args.no_maxwell,
        exact: args.rank.exact || args.rank.exact_all,
    };
    let rows = nullity_table(kind, args.b_min..=args.b_max, &opts)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        print!("{}", render_table(&rows));
    }
    let failed = rows.iter().any(|r| {
        let proven = r.status == "THEOREM";
        let exact_off = r.exact_nullity.is_some_and(|e| e != r.nullity);
        let maxwell_off = r.maxwell == Some(false);
        ((proven || args.strict) && !r.matches) || exact_off || maxwell_off
    });
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Check(a) => check(a),
        Command::Implied(a) => implied(a),
        Command::Table(a) => table(a),
        Command::Selftest(a) => selftest::run(a.rank_options(), a.enum_options()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
