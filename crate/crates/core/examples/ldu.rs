//! Factor a black-to-white matrix as L D U with entries in {-1, 0, 1}.

use qdisk::ldu::{ldu_factorize, rank_det};
use qdisk::parse_board;

fn main() {
    let board = parse_board("###.\n####\n.###\n").expect("a board");
    let f = ldu_factorize(board.disk()).expect("factorization");
    println!("L =\n{}\nU =\n{}", f.l, f.u);
    println!("D has ones at {:?} in a {}x{} matrix", f.d.ones, f.d.rows, f.d.cols);
    for step in &f.trace {
        println!("depth {}: diagonal {:?}, {} piece(s)", step.depth, step.diagonal, step.components);
    }
    let rd = rank_det(&f);
    println!("rank {}, det {:?}", rd.rank, rd.det);
}
