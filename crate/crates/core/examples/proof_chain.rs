//! Walk the exact bound chain that certifies a negative deficit: two
//! truncation bounds, their combination, and the mean-value form whose
//! negative epsilon^k term dominates the tail for epsilon below the
//! threshold.
//!
//! ```bash
//! cargo run -p strongcommon --example proof_chain
//! ```

use strongcommon::commonness::{epsilon_threshold, proof_chain_bounds};
use strongcommon::density::Caps;
use strongcommon::graph::Graph;
use strongcommon::rational::{format_rational, ratio, Rational};

fn line(label: &str, value: &Rational) {
    println!("  {label:<22} {}", format_rational(value));
}

fn main() {
    let caps = Caps::default();
    let petersen = Graph::parse_graph6("IheA@GUAo").unwrap();
    let alpha = ratio(3, 5);
    let threshold = epsilon_threshold(&petersen, &alpha).unwrap();
    let epsilon = &threshold / ratio(2, 1);
    println!(
        "Petersen at alpha = 3/5: epsilon0 = {}, using epsilon = epsilon0/2",
        format_rational(&threshold)
    );

    let chain = proof_chain_bounds(&petersen, &alpha, &epsilon, &caps).unwrap();
    println!(
        "girth {} with {} shortest cycles\n",
        chain.girth, chain.num_girth_cycles
    );
    line("t(phi)", &chain.actual_phi);
    line("<= upper_phi", &chain.upper_phi);
    line("t(1-phi)", &chain.actual_complement);
    line("<= upper_complement", &chain.upper_complement);
    line("lhs", &chain.lhs());
    line("<= combined_upper", &chain.combined_upper);
    line("<= mvt_upper", &chain.mvt_upper);
    line("rhs", &chain.rhs);
    println!();
    assert!(chain.holds());
    let margin = &chain.rhs - &chain.mvt_upper;
    println!(
        "chain holds; the mean-value bound undercuts the right-hand side by {}",
        format_rational(&margin)
    );
    println!(
        "exact deficit: {}",
        format_rational(&(chain.lhs() - &chain.rhs))
    );
}
