use std::io::Read;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (text, code) = superelliptic_cli::run(std::env::args(), || {
        let mut buf = String::new();
        let _ = std::io::stdin().read_to_string(&mut buf);
        buf
    });
    print!("{text}");
    ExitCode::from(code as u8)
}
