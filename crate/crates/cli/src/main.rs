use std::io::Write;

fn main() {
    let (code, out) = equibezout::run(std::env::args_os());
    let stream = if code == equibezout::EXIT_OK { out.as_str() } else { "" };
    let _ = std::io::stdout().write_all(stream.as_bytes());
    if code != equibezout::EXIT_OK {
        let _ = std::io::stderr().write_all(out.as_bytes());
    }
    std::process::exit(code);
}
