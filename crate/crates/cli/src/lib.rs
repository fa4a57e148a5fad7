pub mod commands;
pub mod emit;
pub mod problem;

pub use commands::{parse_partition, run_check, Check};
pub use emit::{report_json, report_text};
pub use problem::{parse_problem_file, parse_rational, Code, Diagnostic, PointEntry, ProblemFile, Schema};

pub const EXIT_EXISTS: i32 = 0;
pub const EXIT_NOT_EXISTS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Reads a problem file from a path, or from stdin when the path is `-`.
pub fn load_problem(path: &std::path::Path) -> Result<ProblemFile, Diagnostic> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Diagnostic::new(Code::Io, "", format!("{}: {e}", path.display())))?;
    parse_problem_file(&text)
}
