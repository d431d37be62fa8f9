//! Compare determinant, signed tiling count and elimination on all small boards.

use qdisk::check::crosscheck_disk;
use qdisk::corpus::for_each_board;

fn main() {
    let (mut checked, mut bad) = (0, 0);
    let mut dets = [0usize; 3];
    for_each_board(8, |b| {
        if b.len() < 2 {
            return;
        }
        let c = crosscheck_disk(b.disk()).expect("factorization");
        checked += 1;
        if !c.discrepancies().is_empty() {
            bad += 1;
        }
        if let Some(d) = c.det {
            dets[(d + 1) as usize] += 1;
        }
    });
    println!("{checked} boards, {bad} discrepancies, det -1/0/1: {dets:?}");
}
