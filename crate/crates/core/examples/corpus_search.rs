// Enumerate small semigroups, keep the stretched ones of rank 3 and print
// them as a table and as CSV.

use numsg_hilbert::corpus::{self, CorpusQuery, Filter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let query = CorpusQuery::new(25, 4).with_filter(Filter::Rank(3));
    let result = corpus::search(&query)?;
    print!("{}", corpus::render_table(&result));

    let mut csv = Vec::new();
    corpus::write_csv(&result.rows[..result.rows.len().min(5)], &mut csv)?;
    print!("{}", String::from_utf8(csv)?);

    for row in &result.rows {
        assert!(matches!(
            row.pattern.as_deref(),
            Some("Prop5.4(I)") | Some("Prop5.4(II)")
        ));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
