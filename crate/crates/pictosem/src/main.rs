use std::net::{IpAddr, Ipv4Addr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use pictosem::corpus::{load_corpus, report_json, report_table};
use pictosem::network_io::{serialize_network, Format};
use pictosem::resources::{analyzer_config, read, read_lexicon};
use pictosem::{service, Resources};
use pictosem_core::{analyze, run_benchmark, transfer, validate_lexicon, Severity, Utterance};

#[derive(Parser)]
#[command(name = "pictosem", version, about = "Analyse icon sequences and render them as French sentences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Acceptability threshold; attachments must score above it.
    #[arg(long, allow_negative_numbers = true)]
    threshold: Option<f64>,
    /// Locality constant in (0, 1].
    #[arg(long)]
    locality: Option<f64>,
}

#[derive(Args)]
struct TransferFiles {
    lexicon: PathBuf,
    dictionary: PathBuf,
    templates: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Check a lexicon and list its findings.
    Validate {
        #[arg(env = "PICTOSEM_LEXICON")]
        lexicon: PathBuf,
    },
    /// Print the semantic network of a sequence.
    Analyze {
        lexicon: PathBuf,
        #[arg(required = true)]
        sequence: Vec<String>,
        #[command(flatten)]
        config: ConfigArgs,
        /// graph-text or json.
        #[arg(long, default_value = "graph-text")]
        format: Format,
    },
    /// Print the sentence for a sequence.
    Transfer {
        #[command(flatten)]
        files: TransferFiles,
        #[arg(required = true)]
        sequence: Vec<String>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Run a gold corpus; JSON report on stdout, table on stderr.
    Bench {
        #[command(flatten)]
        files: TransferFiles,
        corpus: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Serve the HTTP API.
    Serve {
        #[command(flatten)]
        files: TransferFiles,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value_t = IpAddr::V4(Ipv4Addr::LOCALHOST))]
        host: IpAddr,
    },
}

impl TransferFiles {
    fn load(&self) -> anyhow::Result<Resources> {
        Resources::load(&self.lexicon, &self.dictionary, &self.templates)
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Validate { lexicon } => {
            let lex = read_lexicon(&lexicon)?;
            let report = validate_lexicon(&lex);
            for f in &report.findings {
                let tag = match f.severity() {
                    Severity::Error => "error",
                    Severity::Warning => "warning",
                };
                println!("{tag}: {f}");
            }
            println!(
                "{} symbols, {} errors, {} warnings",
                lex.symbols().len(),
                report.errors().count(),
                report.warnings().count()
            );
            Ok(!report.has_errors())
        }
        Command::Analyze { lexicon, sequence, config, format } => {
            let lex = read_lexicon(&lexicon)?;
            let cfg = analyzer_config(config.threshold, config.locality)?;
            let net = analyze(&lex, &Utterance::new(sequence), &cfg)?;
            let text = serialize_network(&net, format);
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(true)
        }
        Command::Transfer { files, sequence, config } => {
            let res = files.load()?;
            let cfg = analyzer_config(config.threshold, config.locality)?;
            let s = transfer(&res.lexicon, &res.dictionary, &res.templates, &Utterance::new(sequence), &cfg)?;
            println!("{s}");
            Ok(true)
        }
        Command::Bench { files, corpus, config } => {
            let res = files.load()?;
            let cfg = analyzer_config(config.threshold, config.locality)?;
            let items = load_corpus(&read(&corpus)?).with_context(|| format!("{}", corpus.display()))?;
            let report = run_benchmark(&res.lexicon, &res.dictionary, &res.templates, &items, &cfg)?;
            print!("{}", report_json(&report, &items));
            eprint!("{}", report_table(&report, &items));
            Ok(true)
        }
        Command::Serve { files, port, host } => {
            let res = Arc::new(files.load()?);
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(service::serve(res, SocketAddr::new(host, port)))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
