//! Parse graphs from both text formats and inspect the structure that
//! drives certification: girth, cycle counts, cycle-space dimension.
//!
//! ```bash
//! cargo run -p strongcommon --example analyze_graph
//! ```

use strongcommon::graph::Graph;

fn describe(name: &str, g: &Graph) {
    println!("{name}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("  girth:              {}", g.girth());
    println!("  is a cycle:         {}", g.is_cycle());
    println!("  witness applicable: {}", g.witness_applicable());
    if let Some(k) = g.girth().finite() {
        println!("  {k}-cycle subsets:    {}", g.count_k_cycle_subsets(k));
    }
    println!("  cycle-space dim:    {}", g.cycle_space_basis().len());
    println!("  graph6:             {}", g.to_graph6());
    println!();
}

fn main() {
    // Edge-list format: vertex count, then one "u v" pair per line.
    let paw = Graph::parse_edge_list("4\n0 1\n1 2\n0 2\n2 3\n").unwrap();
    describe("paw (triangle + pendant edge)", &paw);

    // graph6 format: "Bw" is the triangle.
    let triangle = Graph::parse_graph6("Bw").unwrap();
    describe("triangle from graph6", &triangle);

    let petersen = Graph::parse_graph6("IheA@GUAo").unwrap();
    describe("Petersen graph", &petersen);

    describe("path P4", &Graph::path(4));
    describe("two disjoint triangles", &Graph::cycle(3).disjoint_union(&Graph::cycle(3)));
}
