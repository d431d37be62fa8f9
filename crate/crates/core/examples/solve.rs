//! Integer solutions of B x = v, and a system with no rational solution.

use qdisk::ldu::solve_disk;
use qdisk::parse_board;

fn main() {
    let board = parse_board(include_str!("../fixtures/rect5x4.txt")).expect("a board");
    let v = [1, 0, 0, 0, 0, 0, 0, 0, 0, -1];
    println!("x = {:?}", solve_disk(board.disk(), &v).expect("solvable"));
    let square = parse_board("##\n##\n").expect("a board");
    println!("2x2 with v = (1, 0): {:?}", solve_disk(square.disk(), &[1, 0]));
}
