//! Check every correspondence on the bundled fixtures and on random
//! instances. Pass a seed and a count to change the sample.

use revnets::analysis::run_suite;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(0, |s| s.parse().expect("seed"));
    let count = args.next().map_or(20, |s| s.parse().expect("count"));
    let report = run_suite(seed, count).expect("suite runs");
    for v in report.verdicts.iter().filter(|v| !v.passed()) {
        println!("{v}");
    }
    println!("seed {seed}: {} passed, {} failed", report.passed, report.failed);
    if !report.all_passed() {
        std::process::exit(1);
    }
}
