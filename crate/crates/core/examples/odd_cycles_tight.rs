//! Odd cycles sit exactly on the strong-commonness bound for every
//! witness kernel — their deficit is identically zero — while one extra
//! edge already forces it negative. This is why the certification needs
//! "not a cycle" and why it cannot be improved to include the cycles.
//!
//! ```bash
//! cargo run -p strongcommon --example odd_cycles_tight
//! ```

use strongcommon::commonness::witness_deficit;
use strongcommon::density::Caps;
use strongcommon::graph::Graph;
use strongcommon::rational::{format_rational, ratio};

fn main() {
    let caps = Caps::default();
    let alpha = ratio(3, 4);
    let epsilon = ratio(1, 8);

    println!("witness deficit at alpha = 3/4, epsilon = 1/8\n");
    for k in [3usize, 5, 7] {
        let deficit = witness_deficit(&Graph::cycle(k), &alpha, &epsilon, &caps).unwrap();
        println!("  C{k}:                 {}", format_rational(&deficit));
    }

    let paw = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    let deficit = witness_deficit(&paw, &alpha, &epsilon, &caps).unwrap();
    println!("  C3 + pendant edge:  {}", format_rational(&deficit));

    let c5_pendant = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]).unwrap();
    let deficit = witness_deficit(&c5_pendant, &alpha, &epsilon, &caps).unwrap();
    println!("  C5 + pendant edge:  {}", format_rational(&deficit));

    // padding with isolated vertices changes nothing: densities ignore them
    let padded = Graph::new(5, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let deficit = witness_deficit(&padded, &alpha, &epsilon, &caps).unwrap();
    println!("  C3 + two isolated:  {}", format_rational(&deficit));
    println!("\nzero for bare and padded odd cycles, strictly negative once an extra edge exists");
}
