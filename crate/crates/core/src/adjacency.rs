//! Black-to-white adjacency matrices under explicit labelings.

use ndarray::Array2;
use serde::Serialize;

use crate::cutpaste::CutPasteResult;
use crate::diagonals::Diagonal;
use crate::disk::{Color, QuadDisk};
use crate::error::{Error, Result};

/// Order of the black squares (rows) and of the white squares (columns).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labeling {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Labeling {
    /// Blacks and whites each in increasing square index.
    pub fn canonical(disk: &QuadDisk) -> Labeling {
        Labeling { rows: disk.squares_of(Color::Black), cols: disk.squares_of(Color::White) }
    }

    /// Checks that rows list every black square once and columns every white
    /// square once.
    pub fn check(&self, disk: &QuadDisk) -> Result<()> {
        check_bijection(&self.rows, &disk.squares_of(Color::Black), "black")?;
        check_bijection(&self.cols, &disk.squares_of(Color::White), "white")
    }

    /// Exchanges rows and columns.
    pub fn transposed(&self) -> Labeling {
        Labeling { rows: self.cols.clone(), cols: self.rows.clone() }
    }
}

fn check_bijection(order: &[usize], expected: &[usize], what: &'static str) -> Result<()> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != expected {
        return Err(Error::BadLabeling(what));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BWMatrix {
    pub entries: Array2<i64>,
    pub row_squares: Vec<usize>,
    pub col_squares: Vec<usize>,
}

impl BWMatrix {
    pub fn rows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn cols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn labeling(&self) -> Labeling {
        Labeling { rows: self.row_squares.clone(), cols: self.col_squares.clone() }
    }

    /// Entries as nested rows, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries.rows().into_iter().map(|r| r.to_vec()).collect()
    }
}

/// The `b x w` matrix with entry 1 where the labeled black and white squares
/// share an edge.
pub fn black_to_white(disk: &QuadDisk, labeling: &Labeling) -> Result<BWMatrix> {
    labeling.check(disk)?;
    Ok(adjacency_unchecked(disk, labeling))
}

pub(crate) fn adjacency_unchecked(disk: &QuadDisk, labeling: &Labeling) -> BWMatrix {
    let mut col_of = vec![usize::MAX; disk.num_squares()];
    for (j, &s) in labeling.cols.iter().enumerate() {
        col_of[s] = j;
    }
    let mut entries = Array2::zeros((labeling.rows.len(), labeling.cols.len()));
    for (i, &s) in labeling.rows.iter().enumerate() {
        for t in disk.neighbors(s) {
            entries[[i, col_of[t]]] = 1;
        }
    }
    BWMatrix { entries, row_squares: labeling.rows.clone(), col_squares: labeling.cols.clone() }
}

/// Labeling of a disk that puts the squares removed by a cut-and-paste
/// first, in diagonal order, followed by the squares of the pieces in their
/// own labelings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutLabeling {
    pub labeling: Labeling,
    /// Number of removed black and white squares.
    pub removed_rows: usize,
    pub removed_cols: usize,
    /// Position, along the flank color's axis, of the survivor of each merge.
    pub survivor_positions: Vec<usize>,
}

/// Builds the removed-first labeling. `inner[c]` labels component `c` of the
/// cut-and-paste with component-local square indices.
pub fn cutpaste_labeling(
    disk: &QuadDisk,
    d: &Diagonal,
    cp: &CutPasteResult,
    inner: &[Labeling],
) -> Result<CutLabeling> {
    if inner.len() != cp.components.len() {
        return Err(Error::InconsistentMap(format!(
            "{} inner labelings for {} components",
            inner.len(),
            cp.components.len()
        )));
    }
    if cp.removed_diagonal != d.squares {
        return Err(Error::InconsistentMap("cut-and-paste does not match the diagonal".into()));
    }
    let diagonal_black = disk.color(d.squares[0]) == Color::Black;
    let (mut rows, mut cols) = if diagonal_black {
        (cp.removed_diagonal.clone(), cp.removed_flanks.clone())
    } else {
        (cp.removed_flanks.clone(), cp.removed_diagonal.clone())
    };
    let (removed_rows, removed_cols) = (rows.len(), cols.len());
    for (c, lab) in inner.iter().enumerate() {
        lab.check(&cp.components[c])?;
        rows.extend(lab.rows.iter().map(|&j| cp.origins[c][j]));
        cols.extend(lab.cols.iter().map(|&j| cp.origins[c][j]));
    }
    let labeling = Labeling { rows, cols };
    labeling.check(disk).map_err(|_| Error::InconsistentMap("labeling misses or repeats a square".into()))?;
    let axis = if diagonal_black { &labeling.cols } else { &labeling.rows };
    let removed_on_axis = if diagonal_black { removed_cols } else { removed_rows };
    let mut survivor_positions = Vec::with_capacity(cp.merges.len());
    for m in &cp.merges {
        let p = axis
            .iter()
            .position(|&s| s == m.survivor)
            .ok_or_else(|| Error::InconsistentMap(format!("survivor {} is unlabeled", m.survivor)))?;
        if p < removed_on_axis {
            return Err(Error::InconsistentMap(format!("survivor {} labeled among removed squares", m.survivor)));
        }
        survivor_positions.push(p);
    }
    Ok(CutLabeling { labeling, removed_rows, removed_cols, survivor_positions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::parse_board;
    use crate::cutpaste::cut_and_paste;
    use crate::diagonals::trace_diagonal;
    use crate::glue::parse_glued;
    use ndarray::array;

    #[test]
    fn domino_matrix() {
        let d = parse_glued("squares 2\nglue 0 1 1 3\n").unwrap();
        let m = black_to_white(&d, &Labeling::canonical(&d)).unwrap();
        assert_eq!(m.entries, array![[1]]);
    }

    #[test]
    fn bad_labeling() {
        let d = parse_board("##\n##").unwrap();
        let lab = Labeling { rows: vec![0, 0], cols: vec![1, 2] };
        assert_eq!(black_to_white(d.disk(), &lab), Err(Error::BadLabeling("black")));
    }

    #[test]
    fn relabeling_permutes_matrix() {
        let b = parse_board("###\n###").unwrap();
        let lab = Labeling::canonical(b.disk());
        let m = black_to_white(b.disk(), &lab).unwrap();
        let mut rev = lab.clone();
        rev.rows.reverse();
        let r = black_to_white(b.disk(), &rev).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(r.entries[[i, j]], m.entries[[2 - i, j]]);
            }
        }
    }

    #[test]
    fn two_by_two_cut_labeling() {
        let b = parse_board("##\n##").unwrap();
        let d = trace_diagonal(b.disk(), 0).unwrap();
        let cp = cut_and_paste(b.disk(), &d).unwrap();
        let inner: Vec<Labeling> = cp.components.iter().map(Labeling::canonical).collect();
        let cl = cutpaste_labeling(b.disk(), &d, &cp, &inner).unwrap();
        assert_eq!(cl.labeling.rows, vec![0, 3]);
        assert_eq!(cl.labeling.cols, vec![2, 1]);
        assert_eq!(cl.survivor_positions, vec![1]);
    }
}
