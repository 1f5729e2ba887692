//! Checks described in a TOML manifest, run and reported as JSON and as a table.

use fsing::corpus::run_corpus;
use fsing::manifest::Manifest;
use fsing::report::{run_manifest, RunOptions};

const MANIFEST: &str = r#"
[rings.e8]
p = 5
vars = ["x", "y", "z"]
weights = [15, 10, 6]
relations = ["x^2 + y^3 + z^5"]

[[check]]
kind = "ainv"
ring = "e8"
expect = -1

[[check]]
kind = "fclosure"
ring = "e8"
element = "x"
ideal = ["y", "z"]
expect = true

[[check]]
kind = "veronese"
ring = "e8"
n = 7
truncation = 6
"#;

fn main() -> fsing::Result<()> {
    let manifest = Manifest::parse(MANIFEST)?;
    let report = run_manifest(&manifest, RunOptions::default());
    println!("{}", report.to_json());
    print!("{}", report.to_table());

    let corpus = run_corpus(Some("ex6.6"), RunOptions::default())?;
    print!("\n{}", corpus.to_table());
    std::process::exit(report.exit_code().max(corpus.exit_code()));
}
