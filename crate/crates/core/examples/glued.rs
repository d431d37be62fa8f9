//! Build a disk from explicit gluings and check the factorization on it.

use qdisk::corpus::random_glued_disks;
use qdisk::ldu::{ldu_factorize, rank_det};
use qdisk::{render_glued, validate};

fn main() {
    for disk in random_glued_disks(5, 3, 8, 12) {
        print!("{}", render_glued(&disk));
        let c = validate(&disk).expect("a disk");
        let f = ldu_factorize(&disk).expect("factorization");
        println!("boundary degrees {:?}, {:?}\n", c.boundary_by_degree, rank_det(&f));
    }
}
