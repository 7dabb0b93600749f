//! Graphviz output for a reversible net. Reversers are drawn dashed.

use revnets::fixtures;
use revnets::net::to_dot;

fn main() {
    let doc = fixtures::net("rcn-simple.net");
    let partition = doc.partition().unwrap();
    print!("{}", to_dot(&doc.net, partition.backward()));
}
