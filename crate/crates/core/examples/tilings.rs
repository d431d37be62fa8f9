//! Enumerate domino tilings with their parities.

use qdisk::adjacency::Labeling;
use qdisk::parse_board;
use qdisk::tilings::{enumerate_tilings, signed_count, superposition, tiling_parity};

fn main() {
    let board = parse_board("####\n####\n####\n").expect("a board");
    let disk = board.disk();
    let lab = Labeling::canonical(disk);
    let ts = enumerate_tilings(disk);
    for (i, t) in ts.iter().enumerate() {
        println!("{i}: {:+} {:?}", tiling_parity(t, &lab).expect("b = w"), t.dominos);
    }
    println!("signed count: {}", signed_count(disk).expect("b = w"));
    let s = superposition(&ts[0], &ts[ts.len() - 1]);
    println!("first vs last: curve lengths {:?}", s.lengths());
}
