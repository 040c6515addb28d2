//! Acceptance suite: one PASS/FAIL line per criterion. Criteria 1 to 13 come
//! from `nccum selftest`; criterion 14 runs it twice and compares the bytes.

use std::process::{Command, Output};
use std::thread;

const SEED: &str = "20240601";

fn selftest() -> Output {
    Command::new(env!("CARGO_BIN_EXE_nccum"))
        .args(["selftest", "--seed", SEED])
        .output()
        .expect("failed to run nccum")
}

#[test]
fn acceptance() {
    let second = thread::spawn(selftest);
    let first = selftest();
    let second = second.join().expect("second run panicked");

    let text = String::from_utf8(first.stdout.clone()).expect("utf-8 output");
    let mut results: Vec<(u32, bool, String)> = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .map(|l| {
            let id: u32 = l[4..].split_whitespace().next().unwrap().parse().unwrap();
            (id, l.starts_with("PASS"), l.to_string())
        })
        .collect();
    // The in-process criterion 14 only checks regeneration; replace it with
    // the cross-process comparison.
    results.retain(|(id, _, _)| *id != 14);
    let identical = first.stdout == second.stdout && first.status.code() == second.status.code();
    results.push((
        14,
        identical,
        format!(
            "{} 14  selftest --seed {SEED} is byte-identical across two runs ({} bytes)",
            if identical { "PASS" } else { "FAIL" },
            first.stdout.len()
        ),
    ));

    for (_, _, line) in &results {
        println!("{line}");
    }
    let ids: Vec<u32> = results.iter().map(|r| r.0).collect();
    assert_eq!(ids, (1..=14).collect::<Vec<_>>(), "missing criteria in:\n{text}");
    assert!(first.status.success(), "selftest exited with {:?}", first.status);
    assert!(results.iter().all(|r| r.1), "some criteria failed");
}
