//! Read and write graphs as edge lists and JSON.

use chromcomp::io::{read_graph, write_graph, GraphFormat};

fn main() -> chromcomp::Result<()> {
    let text = "# a path with a duplicate edge\n4 4\n1 2\n2 3\n3 4\n2 1\n";
    let g = read_graph(text, GraphFormat::EdgeList, true)?;
    println!("order {}, size {}", g.order(), g.size());
    print!("{}", write_graph(&g, GraphFormat::EdgeList, false));
    let json = write_graph(&g, GraphFormat::Json, false);
    print!("{json}");
    assert_eq!(read_graph(&json, GraphFormat::sniff(&json), false)?, g);
    print!("{}", write_graph(&g.complement(), GraphFormat::EdgeList, false));
    Ok(())
}
