use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grouptool::catalog;
use grouptool::dsub::{d_m_group, d_mn_group, l_result, CoprimePair};
use grouptool::eseries::{compute_e_series, DEFAULT_MAX_STEPS};
use grouptool::group::{perm, Limits};
use grouptool::report::{
    CatalogView, ClassifyView, DView, DsubView, ESeriesView, Format, FrobeniusView, Report,
    ResultView, TwoFrobeniusView, VerifyView,
};
use grouptool::structure::{find_frobenius, find_two_frobenius};
use grouptool::verify::{self, Caps, Workspace};
use grouptool::{Error, Group};

#[derive(Parser, Debug)]
#[command(
    name = "grouptool",
    version,
    about = "Coprime-order subgroup operators and E-series for finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// L_m, D_m(G) and D_{m,n}(G)
    Dsub(GroupArgs),
    /// The alternating E-series
    Eseries(GroupArgs),
    /// Nilpotent, Frobenius or 2-Frobenius, with witnesses
    Classify(GroupArgs),
    /// Run property suites over the catalog corpus
    Verify {
        /// Suite id, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Catalog names, or one group's summary with --group
    Catalog {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        group: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Catalog name such as S4, D10, F21 or S3xC3
    #[arg(long, group = "source")]
    group: Option<String>,
    /// Permutation generators in cycle notation, e.g. "(1 2 3), (1 2)"
    #[arg(long, group = "source")]
    gens: Option<String>,
    /// Cayley table as CSV of 0-based ids
    #[arg(long, group = "source")]
    cayley: Option<PathBuf>,
    #[arg(long, requires = "n", conflicts_with = "pi")]
    m: Option<u64>,
    #[arg(long, requires = "m", conflicts_with = "pi")]
    n: Option<u64>,
    /// Primes of m; m is the matching part of |G| and n the rest
    #[arg(long, value_delimiter = ',')]
    pi: Option<Vec<u64>>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct CommonArgs {
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    subgroup_cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Exit status categories.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::InternalInconsistency(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl CommonArgs {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }

    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(max) = self.max_order {
            limits.max_order = max;
        }
        limits
    }
}

fn load_group(args: &GroupArgs) -> Result<Group, Failure> {
    let max_order = args.common.limits().max_order;
    if let Some(name) = &args.group {
        let g = catalog::build(name)?;
        if g.order() > max_order {
            return Err(Error::CapExceeded {
                what: "group",
                order: g.order(),
                cap: max_order,
            }
            .into());
        }
        Ok(g)
    } else if let Some(text) = &args.gens {
        let perms = perm::parse_cycle_notation(text)?;
        Ok(Group::from_permutations(&perms, max_order)?
            .with_name(format!("<{text}>"))
            .with_source(format!("gens:{text}")))
    } else if let Some(path) = &args.cayley {
        Ok(catalog::load_cayley_csv(path)?)
    } else {
        Err(Failure::Usage(
            "one of --group, --gens or --cayley is required".into(),
        ))
    }
}

fn params(args: &GroupArgs, g: &Group) -> Result<CoprimePair, Failure> {
    match (args.m, args.n, &args.pi) {
        (Some(m), Some(n), None) => Ok(CoprimePair::new(m, n)?),
        (None, None, Some(primes)) => Ok(CoprimePair::from_primes(g.order() as u64, primes)?),
        _ => Err(Failure::Usage("give either --m and --n, or --pi".into())),
    }
}

fn write_report(report: &Report, common: &CommonArgs) -> Result<(), Failure> {
    let io_error = |e: io::Error| Failure::Runtime(format!("io error: {e}"));
    match &common.out {
        Some(path) => {
            let file = File::create(path).map_err(io_error)?;
            report
                .emit(common.format(), &mut BufWriter::new(file))
                .map_err(io_error)
        }
        None => report
            .emit(common.format(), &mut io::stdout().lock())
            .map_err(io_error),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Dsub(args) => {
            let g = load_group(&args)?;
            let pair = params(&args, &g)?;
            let view = DsubView {
                l_m: DView::new(&g, &l_result(&g, pair.m())),
                d_m: DView::new(&g, &d_m_group(&g, pair.m())?),
                d_mn: DView::new(&g, &d_mn_group(&g, pair)?),
            };
            write_report(
                &Report::new("dsub", Some(&g), Some(pair), ResultView::Dsub(view)),
                &args.common,
            )?;
            Ok(true)
        }
        Command::Eseries(args) => {
            let g = load_group(&args)?;
            let pair = params(&args, &g)?;
            let r = compute_e_series(&g, pair, DEFAULT_MAX_STEPS);
            let view = ResultView::ESeries(ESeriesView::new(&r));
            write_report(
                &Report::new("eseries", Some(&g), Some(pair), view),
                &args.common,
            )?;
            Ok(true)
        }
        Command::Classify(args) => {
            let g = load_group(&args)?;
            let pair = params(&args, &g)?;
            let limits = args.common.limits();
            let r = compute_e_series(&g, pair, DEFAULT_MAX_STEPS);
            let view = ClassifyView {
                classification: r.classification,
                length: r.length,
                nilpotent: g.is_nilpotent(),
                frobenius: find_frobenius(&g, &limits)?
                    .as_ref()
                    .map(FrobeniusView::new),
                two_frobenius: find_two_frobenius(&g, &limits)?
                    .as_ref()
                    .map(TwoFrobeniusView::new),
            };
            write_report(
                &Report::new("classify", Some(&g), Some(pair), ResultView::Classify(view)),
                &args.common,
            )?;
            Ok(true)
        }
        Command::Verify { suite, common } => {
            let mut caps = Caps::default();
            if let Some(max) = common.max_order {
                caps.max_order = max;
            }
            if let Some(cap) = common.subgroup_cap {
                caps.subgroup_cap = cap;
            }
            let corpus = catalog::standard_corpus(caps.max_order);
            let workspace = Workspace::new(&corpus)?;
            let reports = if suite == "all" {
                workspace.run_all(&caps)
            } else {
                vec![workspace.run_suite(&suite, &caps)?]
            };
            let ok = !verify::any_failure(&reports);
            let view = VerifyView::new(caps, corpus.len(), reports);
            write_report(
                &Report::new("verify", None, None, ResultView::Verify(view)),
                &common,
            )?;
            Ok(ok)
        }
        Command::Catalog {
            list,
            group,
            common,
        } => {
            let max = common.max_order.unwrap_or(200);
            let entries = match (&group, list) {
                (Some(name), false) => vec![catalog::CatalogEntry::new(catalog::parse_name(name)?)],
                (None, _) => catalog::standard_corpus(max),
                (Some(_), true) => {
                    return Err(Failure::Usage("--list and --group are exclusive".into()))
                }
            };
            let g = match &group {
                Some(name) => Some(catalog::build(name)?),
                None => None,
            };
            let view = ResultView::Catalog(CatalogView::new(&entries));
            write_report(&Report::new("catalog", g.as_ref(), None, view), &common)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
