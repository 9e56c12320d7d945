//! Expand the witness density `t_H(alpha + epsilon f)` as an exact
//! polynomial in epsilon. Coefficients 1..k-1 vanish for girth k, and the
//! first surviving coefficient counts shortest cycles with a minus sign —
//! the structure the whole certification rests on.
//!
//! ```bash
//! cargo run -p strongcommon --example eps_polynomial
//! ```

use strongcommon::density::{eps_polynomial, Caps};
use strongcommon::graph::Graph;
use strongcommon::rational::{format_rational, ratio};

fn show(name: &str, g: &Graph) {
    let caps = Caps::default();
    let alpha = ratio(3, 4);
    let polynomial = eps_polynomial(g, &alpha, &caps).unwrap();
    let coefficients: Vec<String> = polynomial
        .coefficients()
        .iter()
        .map(format_rational)
        .collect();
    println!("{name} (girth {}):", g.girth());
    println!("  [{}]", coefficients.join(", "));
    let eps = ratio(1, 10);
    println!(
        "  value at epsilon = 1/10: {}",
        format_rational(&polynomial.evaluate(&eps))
    );
    println!();
}

fn main() {
    println!("t_H(3/4 + epsilon f) as a polynomial in epsilon\n");
    show("paw", &Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap());
    show("C5", &Graph::cycle(5));
    show("K4", &Graph::complete(4));
    show("Petersen", &Graph::parse_graph6("IheA@GUAo").unwrap());
    show("tree", &Graph::path(5));
}
