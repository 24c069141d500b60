fn main() {
    let stdout = std::io::stdout();
    let result = apery_cli::run(std::env::args_os(), &mut stdout.lock());
    std::process::exit(result.status.exit_code());
}
