//! Pair tilings of opposite parity and follow the loner down the recursion.

use qdisk::parse_board;
use qdisk::tilings::quasi_perfect_matching;

fn main() {
    let board = parse_board(include_str!("../fixtures/loner.txt")).expect("a board");
    print!("{}", board.render());
    let m = quasi_perfect_matching(board.disk()).expect("matching");
    println!("pairs (even, odd): {:?}", m.pairs);
    println!("loner: {:?}", m.loner);
    for step in &m.loner_trace {
        println!("depth {}: {} squares, {} tiling(s)", step.depth, step.squares.len(), step.tilings);
    }
}
