//! Properties of the small fixture boards: each one was picked by exhaustive
//! search for the property it is named after.

use qdisk::cutpaste::{board_cut_and_paste, cut_and_paste};
use qdisk::diagonals::{all_diagonals, canonical_good_diagonal};
use qdisk::ldu::{det, ldu_factorize};
use qdisk::tilings::{count_tilings, quasi_perfect_matching};
use qdisk::{parse_board, validate, Board};

fn board(name: &str) -> Board {
    let text = std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap();
    parse_board(&text).unwrap()
}

#[test]
fn six_corners() {
    let b = board("six_corners.txt");
    let census = validate(b.disk()).unwrap();
    assert_eq!(census.boundary_by_degree[&1], 6);
    let excess: usize = census.boundary_by_degree.iter().filter(|(&r, _)| r >= 3).map(|(&r, &n)| (r - 2) * n).sum();
    assert_eq!(excess, 2);
    let ds = all_diagonals(b.disk());
    assert_eq!(ds.len(), 6);
    assert_eq!(ds.iter().filter(|d| !d.good).count(), 1);
    assert_eq!(ds.iter().filter(|d| d.good && d.balanced).count(), 3);
    assert_eq!(ds.iter().filter(|d| d.good && !d.balanced).count(), 2);
    let canon = canonical_good_diagonal(b.disk());
    assert!(canon.good);
}

#[test]
fn three_pieces() {
    let b = board("three_pieces.txt");
    let pieces: Vec<usize> = all_diagonals(b.disk())
        .iter()
        .filter(|d| d.good && d.len() >= 2)
        .map(|d| cut_and_paste(b.disk(), d).unwrap().components.len())
        .collect();
    assert!(pieces.contains(&3), "{pieces:?}");
}

#[test]
fn closure_needs_an_excellent_diagonal() {
    let b = board("closure.txt");
    let leaves_lattice = all_diagonals(b.disk())
        .iter()
        .filter(|d| d.good && d.excellent == Some(false))
        .any(|d| !cut_and_paste(b.disk(), d).unwrap().boards_preserved());
    assert!(leaves_lattice);
    let (d, _, boards) = board_cut_and_paste(&b).unwrap();
    assert_eq!(d.excellent, Some(true));
    assert!(!boards.is_empty());
}

#[test]
fn loner_descends_to_a_unique_tiling() {
    let b = board("loner.txt");
    assert_eq!(count_tilings(b.disk()), 3);
    assert_eq!(det(&ldu_factorize(b.disk()).unwrap()).unwrap().abs(), 1);
    let m = quasi_perfect_matching(b.disk()).unwrap();
    assert_eq!(m.pairs.len(), 1);
    assert!(m.loner.is_some());
    let steps: Vec<(usize, usize)> = m.loner_trace.iter().map(|s| (s.squares.len(), s.tilings)).collect();
    assert_eq!(steps, [(10, 3), (8, 3), (4, 1), (2, 1)]);
}

#[test]
fn two_by_two() {
    let b = board("board2x2.txt");
    assert_eq!(det(&ldu_factorize(b.disk()).unwrap()).unwrap(), 0);
    assert!(quasi_perfect_matching(b.disk()).unwrap().loner.is_none());
}
