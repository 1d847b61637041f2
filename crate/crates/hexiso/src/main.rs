use std::io::Write;

fn main() {
    let (code, out) = hexiso::cli::run(std::env::args_os());
    print!("{out}");
    std::io::stdout().flush().ok();
    std::process::exit(code);
}
