//! List the diagonals of a board with their flags.

use qdisk::diagonals::{all_diagonals, canonical_good_diagonal};
use qdisk::parse_board;

fn main() {
    let board = parse_board(include_str!("../fixtures/six_corners.txt")).expect("a board");
    print!("{}", board.render());
    for d in all_diagonals(board.disk()) {
        let p = board.disk().vertex_point(d.corner()).expect("board vertex");
        println!(
            "corner at {p:?}: {} squares, good={} balanced={} excellent={:?}",
            d.len(),
            d.good,
            d.balanced,
            d.excellent
        );
    }
    let c = canonical_good_diagonal(board.disk());
    println!("canonical diagonal starts at {:?}", board.disk().vertex_point(c.corner()));
}
