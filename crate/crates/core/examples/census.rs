//! Parse a board and print its vertex and edge census.

use qdisk::{parse_board, validate};

fn main() {
    let board = parse_board("####\n#..#\n#..#\n#...\n").expect("a board");
    let census = validate(board.disk()).expect("a disk");
    println!("{}", board.render());
    println!("corners: {}", census.corners());
    println!("boundary vertices by degree: {:?}", census.boundary_by_degree);
    println!("sum of (2 - r) V_r: {}", census.corner_excess());
    if let Some(b) = census.board {
        println!("turning vertices: +{} -{}", b.positive, b.negative);
    }
}
