use std::io::Write;

fn main() {
    let done = simlab_cli::run_cli(std::env::args_os());
    print!("{}", done.stdout);
    eprint!("{}", done.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(done.code);
}
