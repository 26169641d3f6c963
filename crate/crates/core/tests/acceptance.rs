//! Acceptance suite: one PASS/FAIL line per criterion. Set `VIC_JOBS` to
//! bound the worker threads.

use vic::reproduce::{render, run, Options, CRITERIA};

fn main() {
    let jobs = std::env::var("VIC_JOBS").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    let opts = Options::default();
    let mut failed = 0;
    for id in 1..=CRITERIA {
        let row = pool.install(|| run(id, &opts));
        print!("{}", render(std::slice::from_ref(&row)));
        if !row.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
