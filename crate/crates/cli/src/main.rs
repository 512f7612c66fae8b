use clap::Parser;
use goat_cli::commands::{emit, run};
use goat_cli::{Cli, ExitCode};
use log::LevelFilter;

fn init_logging() {
    let level = match std::env::var("GOAT_LOG").as_deref() {
        Ok("debug") => LevelFilter::Debug,
        Ok("info") => LevelFilter::Info,
        Ok("quiet") => LevelFilter::Off,
        _ => LevelFilter::Warn,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .init();
}

fn main() {
    init_logging();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version print to stdout and exit 0; parse errors exit 2
            let code = if e.use_stderr() { ExitCode::Usage as i32 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match run(&cli).and_then(|out| emit(&out.body, cli.output.as_deref()).map(|_| out.code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("goat: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code as i32);
}
