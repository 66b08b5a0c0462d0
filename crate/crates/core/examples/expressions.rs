//! Parsing algebra expressions and running the batch commands from code.

use qhaar::cli::*;
use qhaar::haar::haar_state;

fn main() {
    for s in ["c e g det^-1", "(a e - q b d)^2 det^-2", "k^* a a^* k", "x[1,3] x[2,2] x[3,1] det^-1"] {
        let e = parse(s, 3).unwrap();
        let x = to_element(&e, 3).unwrap();
        println!("{e}  ->  h = {}", haar_state(&x).unwrap());
    }

    let cfg = Config { format: Format::Csv, ..Config::default() };
    print!("{}", run_command(&Command::Table { m: 1 }, &cfg).unwrap().output);

    match parse("a + i", 3) {
        Err(e) => println!("{e} (exit status {})", exit_code(&e)),
        Ok(_) => unreachable!(),
    }
}
