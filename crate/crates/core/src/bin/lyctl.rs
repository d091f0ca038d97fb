use std::io::IsTerminal;

fn main() {
    let (code, text) = lie_yamaguti::cli::run(std::env::args_os());
    let text = if std::env::var_os("NO_COLOR").is_some() || !std::io::stdout().is_terminal() {
        text
    } else {
        colorize(code, text)
    };
    if code == lie_yamaguti::cli::EXIT_INPUT {
        eprintln!("{text}");
    } else {
        println!("{text}");
    }
    std::process::exit(code);
}

fn colorize(code: i32, text: String) -> String {
    let color = match code {
        0 => "32",
        1 => "31",
        _ => "33",
    };
    match text.split_once('\n') {
        Some((first, rest)) => format!("\x1b[{color}m{first}\x1b[0m\n{rest}"),
        None => format!("\x1b[{color}m{text}\x1b[0m"),
    }
}
