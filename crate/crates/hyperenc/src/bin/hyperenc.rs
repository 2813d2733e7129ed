use hyperenc::cli;

fn main() {
    let out = cli::run(std::env::args(), None);
    if !out.stdout.is_empty() {
        println!("{}", out.stdout);
    }
    std::process::exit(out.exit_code);
}
