use std::io::{self, BufReader};

use baire_lab::cli::{main_with, Io};

fn main() {
    let (mut out, mut err) = (io::stdout(), io::stderr());
    let code = main_with(
        std::env::args_os(),
        Io {
            out: &mut out,
            err: &mut err,
            input: Box::new(BufReader::new(io::stdin())),
        },
    );
    std::process::exit(code);
}
