//! Command line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 malformed or mismatching data,
//! 3 usage error.

use std::fs;
use std::io::{self, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser as ClapParser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::boundary_dict::DictKind;
use crate::codec::{self, FormatError, PhraseBoundaries};
use crate::corpus;
use crate::parsing::{ParseConfig, Parsing};

#[derive(Debug, ClapParser)]
#[command(name = "lzend", version, about = "LZ-End compression")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a file and write its LZE1 encoding.
    Encode {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        parse: ParseArgs,
        /// Decode in memory and compare before writing.
        #[arg(long)]
        verify: bool,
    },
    /// Restore the original bytes from an LZE1 file.
    Decode {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print a byte range of the original text from an LZE1 file.
    Extract {
        input: PathBuf,
        #[arg(long)]
        start: usize,
        #[arg(long)]
        len: usize,
    },
    /// Parse a file and print phrase statistics.
    Stats {
        input: PathBuf,
        /// Read an LZE1 file instead of parsing raw bytes.
        #[arg(long, conflicts_with_all = ["max_phrase_len", "merge_first", "dict"])]
        encoded: bool,
        #[command(flatten)]
        parse: ParseArgs,
    },
    /// Time the parse phase on a file or a generated corpus.
    Bench {
        /// Read the input from a file instead of generating it.
        #[arg(long, conflicts_with = "kind")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CorpusKind::Random)]
        kind: CorpusKind,
        /// Generated input size in bytes.
        #[arg(long, default_value_t = 10 << 20)]
        size: usize,
        /// Word length for the periodic corpus.
        #[arg(long, default_value_t = 1000)]
        period: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        parse: ParseArgs,
    },
}

#[derive(Debug, Args, Clone, Copy)]
pub struct ParseArgs {
    /// Upper bound on phrase length.
    #[arg(long, short = 'H', value_name = "H")]
    pub max_phrase_len: Option<NonZeroUsize>,
    /// Search for merges before extensions.
    #[arg(long)]
    pub merge_first: bool,
    /// Boundary dictionary implementation.
    #[arg(long, value_enum, default_value_t = DictArg::Btree)]
    pub dict: DictArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DictArg {
    Btree,
    BitTrie,
}

impl From<ParseArgs> for ParseConfig {
    fn from(a: ParseArgs) -> Self {
        ParseConfig {
            max_phrase_len: a.max_phrase_len,
            merge_first: a.merge_first,
            dict: match a.dict {
                DictArg::Btree => DictKind::BTree,
                DictArg::BitTrie => DictKind::BitTrie,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorpusKind {
    Random,
    Runs,
    Periodic,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("verification failed: decoded output differs from input")]
    VerifyMismatch,
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Format(_) | CliError::VerifyMismatch => 2,
            CliError::Usage(_) => 3,
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

/// Runs with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let rendered = e.render();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "lzend: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Encode {
            input,
            output,
            parse,
            verify,
        } => {
            let text = read(&input)?;
            let parsing = crate::parse(&text, parse.into());
            if verify && codec::decode(&parsing)? != text {
                return Err(CliError::VerifyMismatch);
            }
            write(&output, &codec::serialize(&parsing))?;
            let _ = writeln!(
                err,
                "{}: {} bytes -> {} phrases",
                input.display(),
                text.len(),
                parsing.len()
            );
        }
        Command::Decode { input, output } => {
            let parsing = codec::deserialize(&read(&input)?)?;
            write(&output, &codec::decode(&parsing)?)?;
        }
        Command::Extract { input, start, len } => {
            let parsing = codec::deserialize(&read(&input)?)?;
            let bounds = PhraseBoundaries::new(&parsing);
            let bytes = codec::extract(&parsing, &bounds, start, len)?;
            out.write_all(&bytes).map_err(stdout_err)?;
            out.flush().map_err(stdout_err)?;
        }
        Command::Stats {
            input,
            encoded,
            parse,
        } => {
            let bytes = read(&input)?;
            let parsing = if encoded {
                codec::deserialize(&bytes)?
            } else {
                crate::parse(&bytes, parse.into())
            };
            print_stats(&input, &parsing, out).map_err(stdout_err)?;
        }
        Command::Bench {
            input,
            kind,
            size,
            period,
            seed,
            parse,
        } => {
            let (label, text) = match input {
                Some(path) => (path.display().to_string(), read(&path)?),
                None => {
                    if kind == CorpusKind::Periodic && period == 0 {
                        return Err(CliError::Usage("--period must be positive".into()));
                    }
                    let text = match kind {
                        CorpusKind::Random => corpus::random_bytes(size, seed),
                        CorpusKind::Runs => corpus::runs(size, seed),
                        CorpusKind::Periodic => corpus::periodic(size, period, seed),
                    };
                    (format!("{kind:?}").to_lowercase(), text)
                }
            };
            let (_, report) = crate::bench::run(&text, parse.into());
            writeln!(
                out,
                "input={label} n={} z={} ratio={:.6} maxlen={} merges={} queries={} index_secs={:.3} parse_secs={:.3}",
                report.n,
                report.z,
                report.ratio(),
                report.max_phrase_len,
                report.merges,
                report.dict_queries,
                report.index_time.as_secs_f64(),
                report.parse_time.as_secs_f64(),
            )
            .map_err(stdout_err)?;
        }
    }
    Ok(())
}

/// Human readable block followed by one `key=value` line.
pub fn print_stats(path: &Path, parsing: &Parsing, out: &mut dyn Write) -> io::Result<()> {
    let n = parsing.text_len();
    let z = parsing.len();
    let ratio = parsing.ratio();
    let maxlen = parsing.max_phrase_len();
    writeln!(out, "file:            {}", path.display())?;
    writeln!(out, "length:          {n} bytes")?;
    writeln!(out, "phrases:         {z}")?;
    writeln!(out, "phrases/byte:    {ratio:.6}")?;
    writeln!(out, "longest phrase:  {maxlen}")?;
    writeln!(out, "n={n} z={z} ratio={ratio:.6} maxlen={maxlen}")
}
