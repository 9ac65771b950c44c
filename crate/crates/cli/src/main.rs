use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let as_json = symprod_cli::wants_json(&args);
    let result = symprod_cli::run(&args);
    let text = result.render(as_json && !result.is_help());
    if result.exit_code != 0 && !as_json {
        let message = result.outputs["error"]["message"].as_str().unwrap_or("failed");
        eprintln!("{}", message.trim_end());
    } else {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(text.as_bytes());
    }
    ExitCode::from(result.exit_code as u8)
}
