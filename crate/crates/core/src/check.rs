//! Cross-checks of the factorization against brute force and elimination.

use serde::Serialize;

use crate::disk::{Color, QuadDisk};
use crate::error::Result;
use crate::ldu::{canonical_matrix, det, ldu_factorize, rank};
use crate::oracle::{bareiss_det, rank_mod2, rational_rank};
use crate::tilings::signed_count;

/// Every quantity computed for one disk, by every available route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiskCheck {
    pub squares: usize,
    pub black: usize,
    pub white: usize,
    /// Rank of the defective identity in the factorization.
    pub rank: usize,
    pub rank_rational: usize,
    pub rank_mod2: usize,
    /// The remaining fields are only filled when `black == white`.
    pub det: Option<i64>,
    pub signed_count: Option<i64>,
    pub oracle_det: Option<i128>,
}

impl DiskCheck {
    /// Human-readable descriptions of every disagreement.
    pub fn discrepancies(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.rank != self.rank_rational {
            out.push(format!("rank {} but rational elimination gives {}", self.rank, self.rank_rational));
        }
        if self.rank != self.rank_mod2 {
            out.push(format!("rank {} but rank mod 2 is {}", self.rank, self.rank_mod2));
        }
        if let (Some(d), Some(s), Some(o)) = (self.det, self.signed_count, self.oracle_det) {
            if d.abs() > 1 {
                out.push(format!("determinant {d} outside {{-1, 0, 1}}"));
            }
            if d != s {
                out.push(format!("determinant {d} but signed tiling count {s}"));
            }
            if d as i128 != o {
                out.push(format!("determinant {d} but elimination gives {o}"));
            }
        }
        out
    }
}

/// Factors the disk (which verifies the product) and compares rank and
/// determinant with the oracles.
pub fn crosscheck_disk(disk: &QuadDisk) -> Result<DiskCheck> {
    let f = ldu_factorize(disk)?;
    let b = canonical_matrix(disk).entries;
    let square = disk.count(Color::Black) == disk.count(Color::White);
    Ok(DiskCheck {
        squares: disk.num_squares(),
        black: disk.count(Color::Black),
        white: disk.count(Color::White),
        rank: rank(&f),
        rank_rational: rational_rank(&b),
        rank_mod2: rank_mod2(&b),
        det: if square { Some(det(&f)?) } else { None },
        signed_count: if square { Some(signed_count(disk)?) } else { None },
        oracle_det: if square { bareiss_det(&b) } else { None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::parse_board;

    #[test]
    fn small_boards_agree() {
        for text in ["##\n##", "###\n###", "##.\n###", "####\n####\n####\n####", "###\n#.."] {
            let b = parse_board(text).unwrap();
            let c = crosscheck_disk(b.disk()).unwrap();
            assert!(c.discrepancies().is_empty(), "{text}: {:?}", c.discrepancies());
        }
    }

    #[test]
    fn square_data_only_when_balanced() {
        let c = crosscheck_disk(parse_board("###").unwrap().disk()).unwrap();
        assert_eq!((c.det, c.signed_count, c.oracle_det), (None, None, None));
        assert_eq!(c.rank, 1);
    }
}
