//! Sweep the deficit over a grid of alphas, the way the `scan` subcommand
//! does. The excluded alpha = 1/2 is flagged in its row while the rest of
//! the scan proceeds.
//!
//! ```bash
//! cargo run -p strongcommon --example alpha_scan
//! ```

use strongcommon::cli::cmd_scan;
use strongcommon::density::Caps;
use strongcommon::graph::Graph;
use strongcommon::rational::ratio;

fn main() {
    let caps = Caps::default();
    // C5 with a chord: girth 3, six edges
    let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap();

    let grid = vec![
        ratio(11, 20),
        ratio(3, 5),
        ratio(1, 2),
        ratio(2, 3),
        ratio(3, 4),
        ratio(9, 10),
    ];
    let report = cmd_scan(&g, &grid, None, &caps).unwrap();

    println!("{:<8} {:<12} {:<14} {:<10} deficit", "alpha", "epsilon0", "epsilon", "sign");
    for row in &report.rows {
        match &row.error {
            Some(error) => println!("{:<8} excluded: {error}", row.alpha),
            None => println!(
                "{:<8} {:<12} {:<14} {:<10} {}",
                row.alpha,
                row.epsilon0.as_deref().unwrap_or("-"),
                row.epsilon.as_deref().unwrap_or("-"),
                row.sign.as_deref().unwrap_or("-"),
                row.deficit.as_deref().unwrap_or("-"),
            ),
        }
    }
    println!("\nfull JSON document:\n{}", serde_json::to_string_pretty(&report).unwrap());
}
