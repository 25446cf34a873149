//! Thue-Morse outputs pinned to files under `tests/golden`.
//! Set `MAHLER_UPDATE_GOLDEN=1` to rewrite them.

mod common;

use common::{golden_cases, golden_dir, golden_mismatch, run_args};

#[test]
fn thue_morse_outputs_match_golden_files() {
    if std::env::var_os("MAHLER_UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        for (name, args) in golden_cases() {
            let exec = run_args(&args);
            assert_eq!(exec.code, 0, "{name}: {}", exec.stderr);
            std::fs::write(golden_dir().join(name), exec.stdout).unwrap();
        }
    }
    if let Some(msg) = golden_mismatch() {
        panic!("{msg}");
    }
}
