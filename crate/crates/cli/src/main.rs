mod args;
mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.into())
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }

    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Curvature(a) => commands::curvature(a, &mut out),
        Command::Generate(a) => commands::generate_cmd(a, &mut out),
        Command::Classify(a) => commands::classify_cmd(a, &mut out),
        Command::Named(a) => commands::named(a, &mut out),
    }
    .and_then(|()| out.flush().map_err(Failure::from));

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Domain(m) => eprintln!("error: {m}"),
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
