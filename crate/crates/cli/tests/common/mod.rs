#![allow(dead_code)]

use std::path::PathBuf;

pub const THUE_MORSE: &str = "F(z) - (1-z)*F(z^2) = 0";

/// `(golden file name, arguments after the program name)`.
pub fn golden_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("thue_morse.txt", vec!["thue-morse", "--count", "32"]),
        ("expand.json", vec!["expand", "--eq", THUE_MORSE, "--prefix", "1", "--order", "32"]),
        ("space.json", vec!["space", "--eq", THUE_MORSE, "--order", "16"]),
        ("verify.json", vec!["verify", "--eq", THUE_MORSE, "--order", "128"]),
        ("kernel.json", vec!["kernel", "--eq", THUE_MORSE, "--order", "1024", "--depth", "4"]),
        ("rank.json", vec!["rank", "--eq", THUE_MORSE, "--order", "1024", "--depth", "4"]),
        ("represent.json", vec!["represent", "--eq", THUE_MORSE, "--order", "1024", "--depth", "4"]),
        ("automaton.dot", vec!["automaton", "--eq", THUE_MORSE, "--order", "1024", "--depth", "4"]),
        (
            "automaton.json",
            vec!["automaton", "--eq", THUE_MORSE, "--order", "1024", "--depth", "4", "--format", "json"],
        ),
        (
            "classify.json",
            vec![
                "classify", "--eq", THUE_MORSE, "--order", "1024", "--deg-bound", "16",
                "--ode-order", "6", "--ode-deg", "8",
            ],
        ),
        ("decompose.txt", vec!["decompose", "--eq", THUE_MORSE, "--order", "64", "--format", "text"]),
        ("minimize.json", vec!["minimize", "--eq", "F(z) - (1-z)*(1-z^2)*F(z^4) = 0"]),
        ("radius.json", vec!["radius", "--eq", THUE_MORSE]),
        ("orbit.json", vec!["orbit", "--eq", THUE_MORSE, "--steps", "5", "--j", "0"]),
    ]
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn run_args(args: &[&str]) -> mahler_cli::Execution {
    mahler_cli::run(std::iter::once("mahler").chain(args.iter().copied()))
}

/// Compares every golden case against its file; `None` when all match.
pub fn golden_mismatch() -> Option<String> {
    for (name, args) in golden_cases() {
        let first = run_args(&args);
        let second = run_args(&args);
        if first != second {
            return Some(format!("{name}: output differs between runs"));
        }
        if first.code != 0 {
            return Some(format!("{name}: exit {} ({})", first.code, first.stderr));
        }
        let path = golden_dir().join(name);
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == first.stdout => {}
            Ok(_) => return Some(format!("{name}: output differs from the golden file")),
            Err(e) => return Some(format!("{}: {e}", path.display())),
        }
    }
    None
}

/// Twenty equations in assorted surface forms.
pub const EQUATION_CORPUS: [&str; 20] = [
    "F(z) - (1-z)*F(z^2) = 0",
    "(1-z^2)*F(z^2) - (1-z)*F(z) = 0",
    "F(z) = (1 - z)*F(z^2)",
    "z*F(z) - F(z^2) = 0",
    "z^3*F(z) + (2 - z)*F(z^2) - F(z^4) = 0",
    "F(z) - (1 + z + z^2)*F(z^3) = 0",
    "3/2*F(z) + (z - 1/3)*F(z^3) + z^2*F(z^9) = 0",
    "(1 + z)^2*F(z) - (1 - z)^3*F(z^2) = 0",
    "-F(z) + z*F(z^5) = 0",
    "F(z) + F(z^4) = 0",
    "F(z) - z*F(z^4) + 2*F(z^16) = 0",
    "(z - 2)*(z + 2)*F(z) = (z^2 - 4)*F(z^2) + z*F(z^2)",
    "F(z) - (1 - z)*(1 - z^2)*F(z^4) = 0",
    "7*F(z) - 7*z^5*F(z^6) = 0",
    "(1/2 - 1/2*z)*F(z) + -(-z)*F(z^7) = 0",
    "z^4*F(z) - (1 - z)*F(z^3) = 0",
    "F(z) - 2*z*F(z^2) - 3*z^2*F(z^4) + 4*z^3*F(z^8) = 0",
    "(1 - z - z^2)*F(z) - F(z^10) = 0",
    "F(z) = 0",
    "z^2*F(z) - (z + z^2)*F(z^2) + (1 - z^3)*F(z^4) = 0",
];
