//! Build the two-point witness kernel `alpha + epsilon f`, inspect its
//! values and edge density, and export it as a step graphon on [0, 1].
//!
//! ```bash
//! cargo run -p strongcommon --example witness_kernel
//! ```

use strongcommon::kernel::StepKernel;
use strongcommon::rational::{format_rational, ratio};

fn main() {
    let alpha = ratio(3, 4);
    let epsilon = ratio(1, 8);
    let kernel = StepKernel::witness(&alpha, &epsilon);

    println!("witness kernel at alpha = 3/4, epsilon = 1/8:");
    for i in 0..2 {
        let row: Vec<String> = (0..2).map(|j| format_rational(kernel.value(i, j))).collect();
        println!("  [{}]", row.join(", "));
    }
    println!("edge density: {}", format_rational(&kernel.edge_density()));
    println!("is a graphon: {}", kernel.is_graphon());

    let complement = kernel.complement();
    println!(
        "complement edge density: {}",
        format_rational(&complement.edge_density())
    );

    // Kernels serialize with rationals as "p/q" strings.
    println!("\nkernel JSON: {}", serde_json::to_string(&kernel).unwrap());

    let export = kernel.export_step_graphon().unwrap();
    println!(
        "step graphon export: {}",
        serde_json::to_string(&export).unwrap()
    );

    // The signed part f alone is not a graphon and export refuses it.
    let signed = StepKernel::witness(&ratio(0, 1), &ratio(1, 1));
    println!(
        "\npure sign kernel is a graphon: {} (export: {:?})",
        signed.is_graphon(),
        signed.export_step_graphon().err().map(|e| e.to_string())
    );
}
