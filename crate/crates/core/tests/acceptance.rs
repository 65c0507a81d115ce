use cluster_scatter::suite::{all_passed, run_all};

fn main() {
    let results = run_all();
    for r in &results {
        println!("{}", r.line());
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!("{passed}/{} criteria passed", results.len());
    if !all_passed(&results) {
        std::process::exit(1);
    }
}
