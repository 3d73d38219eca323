use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use artinqp_cli::commands::{self, Cocyclic};
use artinqp_cli::{CliError, Outcome};

#[derive(Parser)]
#[command(name = "artinqp", version, about = "Exact quasi-projectivity checks for even Artin groups")]
struct Cli {
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CocyclicArg {
    /// Use the co-cyclic subgroup at vertex U of index K.
    #[arg(long, num_args = 2, value_names = ["U", "K"])]
    cocyclic: Option<Vec<String>>,
}

impl CocyclicArg {
    fn get(&self) -> Result<Option<Cocyclic>, CliError> {
        let Some(v) = &self.cocyclic else { return Ok(None) };
        let k = v[1].parse::<u32>().map_err(|_| CliError::Usage(format!("bad index {:?}", v[1])))?;
        Ok(Some(Cocyclic { u: v[0].clone(), k }))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Artin presentation or a co-cyclic subgroup presentation.
    Present {
        graph: PathBuf,
        #[command(flatten)]
        cc: CocyclicArg,
    },
    /// Print the Alexander matrix.
    Alexander {
        graph: PathBuf,
        #[command(flatten)]
        cc: CocyclicArg,
        #[arg(long)]
        json: bool,
    },
    /// Generic rank, and ranks on the tori of a torus file.
    Rank {
        graph: PathBuf,
        #[command(flatten)]
        cc: CocyclicArg,
        #[arg(long)]
        torus: Option<PathBuf>,
    },
    /// Decide quasi-projectivity. Exit 0 for QP, 3 for not QP.
    Decide {
        graph: PathBuf,
        /// Check the obstruction witness and print the ranks.
        #[arg(long)]
        verify: bool,
        /// Emit a certificate.
        #[arg(long)]
        json: bool,
    },
    /// Re-check a certificate produced by `decide --json`.
    Verify { certificate: PathBuf },
}

fn read(p: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(p).map_err(|err| CliError::Io { path: p.display().to_string(), err })
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    match cli.cmd {
        Cmd::Present { graph, cc } => commands::present(&read(&graph)?, cc.get()?.as_ref()),
        Cmd::Alexander { graph, cc, json } => commands::alexander(&read(&graph)?, cc.get()?.as_ref(), json),
        Cmd::Rank { graph, cc, torus } => {
            let t = torus.as_ref().map(read).transpose()?;
            commands::rank(&read(&graph)?, cc.get()?.as_ref(), t.as_deref())
        }
        Cmd::Decide { graph, verify, json } => commands::decide(&read(&graph)?, verify, json),
        Cmd::Verify { certificate } => commands::verify_certificate(&read(&certificate)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
