//! Cut a rectangle along an excellent diagonal and print the boards left.

use qdisk::cutpaste::board_cut_and_paste;
use qdisk::parse_board;

fn main() {
    let mut boards = vec![parse_board(include_str!("../fixtures/rect5x4.txt")).expect("a board")];
    while let Some(b) = boards.pop() {
        if b.len() < 2 {
            continue;
        }
        let (d, cp, pieces) = board_cut_and_paste(&b).expect("boards stay boards");
        println!("{}diagonal of length {}, deleted side {:?}", b.render(), d.len(), cp.deleted_side);
        for p in &pieces {
            println!("piece:\n{}", p.normalized().render());
        }
        boards.extend(pieces);
    }
}
