// Drives the command line in memory: generate, check and color.

use ababfree::cli::{run_with, EXIT_FALSIFIED, EXIT_OK};

fn call(args: &[&str], input: &str) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ababfree").chain(args.iter().copied());
    let code = run_with(argv, &mut input.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned())
}

pub fn run_example() -> Result<(), String> {
    let (code, hc) = call(&["gen-hc", "--c", "2", "--m", "3"], "");
    if code != EXIT_OK {
        return Err(format!("gen-hc exited with {code}"));
    }
    let (code, verdict) = call(&["check-free", "--l", "2.5"], &hc);
    println!("check-free --l 2.5: {} (exit {code})", verdict.trim());
    let (code, oracle) = call(&["oracle-color", "--c", "2"], &hc);
    println!("oracle-color --c 2: {} (exit {code})", oracle.trim());
    if code != EXIT_FALSIFIED {
        return Err("H_2 should not be 2-colorable".into());
    }

    let (_, disks) = call(&["enum-disks", "--random", "8", "--seed", "7"], "");
    let (_, colored) = call(&["color3", "--with-hypergraph"], &disks);
    let (code, report) = call(&["verify", "--max-colors", "3"], &colored);
    println!("verify: {} (exit {code})", report.trim());
    if code != EXIT_OK {
        return Err("disk hypergraph coloring failed verification".into());
    }
    Ok(())
}

fn main() -> Result<(), String> {
    run_example()
}
