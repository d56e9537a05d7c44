//! The verified bounds table as CSV on standard output.

use shufflenet::cli::bounds_table;
use shufflenet::verify::CheckOptions;

fn main() {
    let max_n: u32 = std::env::args().nth(1).map_or(12, |s| s.parse().expect("a size"));
    let rows = bounds_table(max_n, CheckOptions::default()).unwrap();
    let mut out = csv::Writer::from_writer(std::io::stdout());
    for row in rows {
        out.serialize(row).unwrap();
    }
    out.flush().unwrap();
}
