//! Boards: disks made of unit cells of the integer lattice.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::disk::{Color, GlueTable, QuadDisk, CORNER_OFFSET};
use crate::error::{Error, Result};

/// A finite set of lattice cells whose union is a disk.
///
/// Cell `(x, y)` is the unit square with lower-left corner `(x, y)`. Squares of
/// the derived disk are indexed row-major from the bottom row, left to right.
#[derive(Clone, Debug)]
pub struct Board {
    cells: Vec<(i32, i32)>,
    disk: QuadDisk,
}

impl Board {
    /// Builds a board from cells given in any order.
    pub fn from_cells(cells: &[(i32, i32)]) -> Result<Board> {
        if cells.is_empty() {
            return Err(Error::EmptyBoard);
        }
        let mut sorted: Vec<(i32, i32)> = cells.to_vec();
        sorted.sort_by_key(|&(x, y)| (y, x));
        let before = sorted.len();
        sorted.dedup();
        if sorted.len() != before {
            return Err(Error::NotADisk("repeated cell".into()));
        }
        check_simply_connected(&sorted)?;
        let disk = lattice_disk(&sorted, None).map_err(|e| match e {
            Error::NotADisk(m) => Error::NotADisk(m),
            other => Error::NotADisk(other.to_string()),
        })?;
        Ok(Board { cells: sorted, disk })
    }

    pub fn cells(&self) -> &[(i32, i32)] {
        &self.cells
    }

    pub fn disk(&self) -> &QuadDisk {
        &self.disk
    }

    pub fn into_disk(self) -> QuadDisk {
        self.disk
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Index of the square at `cell`, if present.
    pub fn square_at(&self, cell: (i32, i32)) -> Option<usize> {
        self.cells.binary_search_by_key(&(cell.1, cell.0), |&(x, y)| (y, x)).ok()
    }

    /// Vertex id of a lattice point on the board.
    pub fn vertex_at_point(&self, p: (i32, i32)) -> Option<usize> {
        for (c, &(dx, dy)) in CORNER_OFFSET.iter().enumerate() {
            if let Some(s) = self.square_at((p.0 - dx, p.1 - dy)) {
                return Some(self.disk.vertex_at(s, c as u8));
            }
        }
        None
    }

    /// Same board translated so the bounding box starts at the origin.
    pub fn normalized(&self) -> Board {
        let (x0, y0) = self.origin();
        let cells: Vec<_> = self.cells.iter().map(|&(x, y)| (x - x0, y - y0)).collect();
        Board::from_cells(&cells).expect("translation preserves validity")
    }

    fn origin(&self) -> (i32, i32) {
        let x0 = self.cells.iter().map(|c| c.0).min().unwrap_or(0);
        let y0 = self.cells.iter().map(|c| c.1).min().unwrap_or(0);
        (x0, y0)
    }

    /// Renders the bounding box as rows of `#` and `.`, top row first.
    pub fn render(&self) -> String {
        let (x0, y0) = self.origin();
        let x1 = self.cells.iter().map(|c| c.0).max().unwrap_or(0);
        let y1 = self.cells.iter().map(|c| c.1).max().unwrap_or(0);
        let set: HashSet<_> = self.cells.iter().copied().collect();
        let mut out = String::new();
        for y in (y0..=y1).rev() {
            for x in x0..=x1 {
                out.push(if set.contains(&(x, y)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

/// Parses a grid of `#` (cell) and `.` (empty); the last line is row `y = 0`.
pub fn parse_board(text: &str) -> Result<Board> {
    let mut lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    let rows = lines.len() as i32;
    let mut cells = Vec::new();
    for (r, line) in lines.iter().enumerate() {
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push((c as i32, rows - 1 - r as i32)),
                '.' | ' ' => {}
                other => {
                    return Err(Error::Parse {
                        line: r + 1,
                        message: format!("unexpected character {other:?} in board"),
                    })
                }
            }
        }
    }
    Board::from_cells(&cells)
}

pub fn render_board(board: &Board) -> String {
    board.render()
}

fn check_simply_connected(cells: &[(i32, i32)]) -> Result<()> {
    let set: HashSet<(i32, i32)> = cells.iter().copied().collect();
    let mut seen = HashSet::from([cells[0]]);
    let mut queue = VecDeque::from([cells[0]]);
    while let Some((x, y)) = queue.pop_front() {
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let q = (x + dx, y + dy);
            if set.contains(&q) && seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    if seen.len() != set.len() {
        return Err(Error::NotADisk("cells are not edge-connected".into()));
    }
    let x0 = cells.iter().map(|c| c.0).min().unwrap() - 1;
    let x1 = cells.iter().map(|c| c.0).max().unwrap() + 1;
    let y0 = cells.iter().map(|c| c.1).min().unwrap() - 1;
    let y1 = cells.iter().map(|c| c.1).max().unwrap() + 1;
    let mut outside = HashSet::from([(x0, y0)]);
    let mut queue = VecDeque::from([(x0, y0)]);
    while let Some((x, y)) = queue.pop_front() {
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let q = (x + dx, y + dy);
            if q.0 < x0 || q.0 > x1 || q.1 < y0 || q.1 > y1 || set.contains(&q) {
                continue;
            }
            if outside.insert(q) {
                queue.push_back(q);
            }
        }
    }
    let area = ((x1 - x0 + 1) * (y1 - y0 + 1)) as usize;
    if outside.len() + set.len() != area {
        return Err(Error::NotADisk("region encloses a hole".into()));
    }
    Ok(())
}

/// Disk of a set of cells already sorted by `(y, x)`, glued along shared
/// lattice edges. Rejects cell sets whose corners pinch at a lattice point.
pub(crate) fn lattice_disk(cells: &[(i32, i32)], colors: Option<Vec<Color>>) -> Result<QuadDisk> {
    let index: HashMap<(i32, i32), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut glue: GlueTable = vec![[None; 4]; cells.len()];
    for (i, &(x, y)) in cells.iter().enumerate() {
        if let Some(&j) = index.get(&(x + 1, y)) {
            glue[i][1] = Some((j, 3));
            glue[j][3] = Some((i, 1));
        }
        if let Some(&j) = index.get(&(x, y + 1)) {
            glue[i][2] = Some((j, 0));
            glue[j][0] = Some((i, 2));
        }
    }
    let disk =
        QuadDisk::from_parts(glue, colors, None, Some(cells.to_vec())).map_err(|e| Error::NotADisk(e.to_string()))?;
    let points: BTreeSet<(i32, i32)> =
        cells.iter().flat_map(|&(x, y)| CORNER_OFFSET.iter().map(move |&(dx, dy)| (x + dx, y + dy))).collect();
    if points.len() != disk.num_vertices() {
        return Err(Error::NotADisk("cells touch only at a vertex".into()));
    }
    Ok(disk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::validate;

    #[test]
    fn two_by_two() {
        let b = parse_board("##\n##").unwrap();
        assert_eq!(b.len(), 4);
        let d = b.disk();
        assert_eq!(d.count(Color::Black), 2);
        assert_eq!(d.color(0), d.color(3));
        assert_eq!(d.dual_graph(), vec![vec![1, 2], vec![0, 3], vec![0, 3], vec![1, 2]]);
        let c = validate(d).unwrap();
        assert_eq!(c.interior_vertices, 1);
    }

    #[test]
    fn tromino_and_pinch() {
        let b = parse_board("##\n#.").unwrap();
        assert_eq!(b.cells(), &[(0, 0), (0, 1), (1, 1)]);
        assert!(matches!(parse_board("#.\n.#"), Err(Error::NotADisk(_))));
        assert!(matches!(parse_board("..\n.."), Err(Error::EmptyBoard)));
    }

    #[test]
    fn holes_are_rejected() {
        assert!(matches!(parse_board("###\n#.#\n###"), Err(Error::NotADisk(_))));
    }

    #[test]
    fn pinched_annulus_is_rejected() {
        // The cells are edge-connected, the complement has no enclosed cell,
        // yet the two arms touch at a single point.
        let r = parse_board("##.\n#.#\n###");
        assert!(r.is_err());
    }

    #[test]
    fn two_by_three_census() {
        let b = parse_board("###\n###").unwrap();
        let c = validate(b.disk()).unwrap();
        assert_eq!(c.corners(), 4);
        assert_eq!(c.boundary_by_degree[&2], 6);
        assert_eq!(c.interior_vertices, 2);
        let bc = c.board.unwrap();
        assert_eq!(bc.positive as i64 - bc.negative as i64, 2);
    }

    #[test]
    fn render_round_trip() {
        let text = ".#.\n###\n#..\n";
        let b = parse_board(text).unwrap();
        assert_eq!(b.render(), text);
        assert_eq!(parse_board(&b.render()).unwrap().cells(), b.cells());
    }

    #[test]
    fn lattice_points_map_to_vertices() {
        let b = parse_board("##\n##").unwrap();
        let v = b.vertex_at_point((1, 1)).unwrap();
        assert!(b.disk().vertex(v).interior);
        assert_eq!(b.disk().vertex_point(v), Some((1, 1)));
    }
}
