use kgrass::verify::{run_suite, Scale, SUITES};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let only: Option<&str> = args.get(1).map(|s| s.as_str());
    for &name in SUITES {
        if let Some(o) = only {
            if o != name {
                continue;
            }
        }
        let t = std::time::Instant::now();
        let scale = match name {
            "cross-rep" | "involution" => Scale { cap: 8, max_len: 5, ..Scale::default() },
            _ => Scale::default(),
        };
        let r = run_suite(name, scale).unwrap();
        println!(
            "[{}] {}: {} cases, {} failures ({:?})",
            if r.passed() { "PASS" } else { "FAIL" },
            name,
            r.cases,
            r.failures.len(),
            t.elapsed()
        );
        for f in r.failures.iter().take(5) {
            println!("    - {f}");
        }
    }
}
