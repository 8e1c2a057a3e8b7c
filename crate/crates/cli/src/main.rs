mod commands;
mod target;

use std::path::PathBuf;
use std::process::ExitCode;

use artin_morse::Exec;
use clap::{Parser, Subcommand, ValueEnum};

/// Twisted homology of Artin groups with coefficients in Q[q^±1].
///
/// Families are written `A 5` or `A:5` (also B, tA, tC). Commands that take
/// a family also accept a graph file `{"vertices": n, "edges": [[i, j, m|"inf"], ...]}`
/// with 0-based vertices. ARTIN_MORSE_MAX_N caps exhaustive enumeration
/// (default 12).
///
/// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
#[derive(Parser, Debug)]
#[command(name = "artin-morse", version, about, long_about)]
struct Cli {
    /// Run every job on the current thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print H_*(G_W; R) as free rank plus cyclotomic torsion per degree.
    Homology {
        /// Family name, `family:n`, or graph file.
        target: String,
        n: Option<usize>,
        /// Defaults to morse for families and snf for graph files.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Keep only phi_d torsion.
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the critical cells of the cataloged matching for one phi_d.
    Critical {
        target: String,
        n: Option<usize>,
        #[arg(long)]
        d: usize,
        /// For A only: restrict to simplices containing 1..=f.
        #[arg(long, default_value_t = 0)]
        f: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check cataloged matchings over a parameter grid, plus the Smith form
    /// oracle on small instances. Ranges like `2..8` are inclusive.
    Verify {
        family: String,
        n_range: String,
        /// Defaults to 2..=2n+2 for each n.
        d_range: Option<String>,
        /// Largest n for the oracle; defaults to 5 for A and B, 4 for tA and tC.
        #[arg(long)]
        oracle_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduced Betti numbers of Ind_r of the path A_n, or of a graph file.
    Independence {
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Graph file; only the listed pairs matter, labels are ignored.
        #[arg(long, conflicts_with = "n")]
        graph: Option<PathBuf>,
        /// Membership test, e.g. `2,3,5`. Vertices are 1-based for A_n and
        /// 0-based for graph files.
        #[arg(long)]
        contains: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ranks of the E1 page of the phi_d filtration.
    E1 {
        target: String,
        n: Option<usize>,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Morse,
    Snf,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Whether every check a command ran came out as expected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Failed,
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let (out, verdict) = match cli.command {
        Command::Homology { target, n, method, d, format } => {
            commands::homology(&target::Target::parse(&target, n)?, method, d, format, exec)?
        }
        Command::Critical { target, n, d, f, format } => {
            commands::critical(&target::Target::parse(&target, n)?, d, f, format, exec)?
        }
        Command::Verify { family, n_range, d_range, oracle_max, format } => commands::verify(
            family.parse()?,
            target::parse_range(&n_range)?,
            d_range.as_deref().map(target::parse_range).transpose()?,
            oracle_max,
            format,
            exec,
        )?,
        Command::Independence { n, r, graph, contains, format } => {
            let contains = contains.as_deref().map(target::parse_vertices).transpose()?;
            commands::independence(n, r, graph.as_deref(), contains.as_deref(), format)?
        }
        Command::E1 { target, n, d, format } => commands::e1(&target::Target::parse(&target, n)?, d, format)?,
    };
    print!("{out}");
    Ok(verdict)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version also come through here
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(cli);
    if let Err(e) = &result {
        eprintln!("error: {e:#}");
    }
    ExitCode::from(exit_code(&result))
}

fn exit_code(result: &anyhow::Result<Verdict>) -> u8 {
    match result {
        Ok(Verdict::Ok) => 0,
        Ok(Verdict::Failed) => 2,
        Err(_) => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(Verdict::Ok)), 0);
        assert_eq!(exit_code(&Ok(Verdict::Failed)), 2);
        assert_eq!(exit_code(&Err(anyhow::anyhow!("bad input"))), 1);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
