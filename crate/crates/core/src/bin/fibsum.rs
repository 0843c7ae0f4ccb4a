use std::io;

fn main() {
    let code = fibsum::cli::run(std::env::args_os(), fibsum::catalog::enumerate_catalog(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code.into());
}
