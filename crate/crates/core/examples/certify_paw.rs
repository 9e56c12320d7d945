//! Produce a complete counterexample certificate for the paw graph and
//! replay it through the independent evaluator.
//!
//! ```bash
//! cargo run -p strongcommon --example certify_paw
//! ```

use strongcommon::commonness::certify;
use strongcommon::density::Caps;
use strongcommon::graph::Graph;
use strongcommon::rational::{format_rational, ratio};

fn main() {
    let caps = Caps::default();
    let paw = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();

    // alpha may be any rational in (0, 1) except 1/2; epsilon defaults to
    // half the sufficiency threshold.
    let certificate = certify(&paw, &ratio(3, 4), None, &caps).unwrap();
    print!("{}", certificate.to_canonical_json());

    let replay = certificate.replay(&caps).unwrap();
    println!(
        "\nreplayed through the {} evaluator: deficit {}",
        replay.evaluator,
        format_rational(&replay.deficit)
    );
    println!("the deficit is exactly -epsilon^3/2 for the paw: both sides agree, the graph is not strongly common");
}
