//! Black-to-white adjacency matrix of a disk that is not a board.

use qdisk::ldu::canonical_matrix;
use qdisk::parse_glued;

fn main() {
    let disk = parse_glued(include_str!("../fixtures/thirteen.glue")).expect("a disk");
    let m = canonical_matrix(&disk);
    let cols: Vec<String> = m.col_squares.iter().map(|&s| disk.name(s)).collect();
    println!("   {}", cols.join(" "));
    for (i, row) in m.entries.rows().into_iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("{:>2} {}", disk.name(m.row_squares[i]), cells.join(" "));
    }
}
