use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qdisk::adjacency::{black_to_white, Labeling};
use qdisk::corpus::{random_board, random_glued_disk};
use qdisk::diagonals::all_diagonals;
use qdisk::ldu::{canonical_matrix, ldu_factorize, rank_det};
use qdisk::oracle::{bareiss_det, rank_mod2, rational_rank};
use qdisk::tilings::{enumerate_tilings, rho, signed_count};
use qdisk::{parse_board, parse_glued, render_glued, validate, Board, Color, QuadDisk};

fn board(seed: u64, cells: usize) -> Board {
    random_board(&mut ChaCha8Rng::seed_from_u64(seed), cells)
}

fn glued(seed: u64, squares: usize) -> QuadDisk {
    random_glued_disk(&mut ChaCha8Rng::seed_from_u64(seed), squares)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn census_holds(seed in any::<u64>(), n in 1usize..20) {
        let b = board(seed, n);
        let c = validate(b.disk()).unwrap();
        prop_assert_eq!(c.corner_excess(), 4);
        let board = c.board.unwrap();
        prop_assert_eq!(board.positive as i64 - board.negative as i64, 2);
        prop_assert!(all_diagonals(b.disk()).iter().filter(|d| d.good).count() >= 4);
    }

    #[test]
    fn glued_census_holds(seed in any::<u64>(), n in 4usize..16) {
        let d = glued(seed, n);
        prop_assert_eq!(validate(&d).unwrap().corner_excess(), 4);
        prop_assert!(all_diagonals(&d).iter().filter(|x| x.good).count() >= 4);
    }

    #[test]
    fn board_text_round_trips(seed in any::<u64>(), n in 1usize..20) {
        let b = board(seed, n).normalized();
        let again = parse_board(&b.render()).unwrap();
        prop_assert_eq!(again.cells(), b.cells());
    }

    #[test]
    fn glue_text_round_trips(seed in any::<u64>(), n in 4usize..14) {
        let d = glued(seed, n);
        let again = parse_glued(&render_glued(&d)).unwrap();
        prop_assert_eq!(again.canonical_code(), d.canonical_code());
        prop_assert_eq!(again.glue_table(), d.glue_table());
    }

    #[test]
    fn relabeling_conjugates_the_matrix(seed in any::<u64>(), n in 2usize..16) {
        let d = board(seed, n).into_disk();
        let mut order: Vec<usize> = (0..d.num_squares()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        let r = d.reindexed(&order).unwrap();
        // Square i of r is square order[i] of d, so the same adjacency
        // appears when rows and columns are listed through `order`.
        let lab = Labeling::canonical(&r);
        let back = Labeling {
            rows: lab.rows.iter().map(|&s| order[s]).collect(),
            cols: lab.cols.iter().map(|&s| order[s]).collect(),
        };
        prop_assert_eq!(black_to_white(&r, &lab).unwrap().entries, black_to_white(&d, &back).unwrap().entries);
        prop_assert_eq!(r.canonical_code(), d.canonical_code());
    }

    #[test]
    fn factorization_reconstructs(seed in any::<u64>(), n in 2usize..18, glue in any::<bool>()) {
        let d = if glue { glued(seed, n.max(4)) } else { board(seed, n).into_disk() };
        let f = ldu_factorize(&d).unwrap();
        let b = black_to_white(&d, &f.labeling).unwrap();
        prop_assert_eq!(f.product(), b.entries);
        prop_assert!(f.l.iter().chain(f.u.iter()).all(|x| x.abs() <= 1));
        let m = canonical_matrix(&d).entries;
        let rd = rank_det(&f);
        prop_assert_eq!(rd.rank, rational_rank(&m));
        prop_assert_eq!(rd.rank, rank_mod2(&m));
        if d.count(Color::Black) == d.count(Color::White) {
            prop_assert_eq!(rd.det.map(i128::from), bareiss_det(&m));
        }
    }

    #[test]
    fn swapping_colors_transposes(seed in any::<u64>(), n in 2usize..14) {
        let d = board(seed, n).into_disk();
        let s = d.with_swapped_colors();
        prop_assert_eq!(canonical_matrix(&s).entries, canonical_matrix(&d).entries.t().to_owned());
    }

    #[test]
    fn rho_is_a_parity_reversing_involution(seed in any::<u64>(), half in 1usize..8) {
        let b = board(seed, 2 * half);
        let d = b.disk();
        prop_assume!(d.count(Color::Black) == d.count(Color::White));
        let lab = Labeling::canonical(d);
        let mut loners = 0;
        for t in enumerate_tilings(d) {
            match rho(d, &t).unwrap() {
                Some(img) => {
                    prop_assert_eq!(rho(d, &img).unwrap(), Some(t.clone()));
                    let (p, q) = (qdisk::tilings::tiling_parity(&t, &lab).unwrap(), qdisk::tilings::tiling_parity(&img, &lab).unwrap());
                    prop_assert_eq!(p, -q);
                }
                None => loners += 1,
            }
        }
        prop_assert_eq!(loners, signed_count(d).unwrap().unsigned_abs() as usize);
    }
}
