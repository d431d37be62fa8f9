//! Diagonals: maximal chains of squares meeting corner to corner, starting
//! at a corner of the disk.

use serde::Serialize;

use crate::disk::{next_slot, opposite_slot, QuadDisk, SlotRef};
use crate::error::{Error, Result};

/// A diagonal `v_0 .. v_k` together with the squares along and beside it.
///
/// `squares[i]` is the square between `vertices[i]` and `vertices[i + 1]`,
/// entered at corner `entry[i]`. At each interior vertex `v_i` (`1 <= i < k`)
/// the two remaining squares are the flanks: `right[i - 1]` and `left[i - 1]`,
/// each stored with its corner at `v_i`. The terminal flanks are the squares
/// across the two edges of the last square at `v_k`, when those edges are
/// glued.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagonal {
    pub vertices: Vec<usize>,
    pub squares: Vec<usize>,
    pub entry: Vec<u8>,
    pub right: Vec<SlotRef>,
    pub left: Vec<SlotRef>,
    pub right_terminal: Option<SlotRef>,
    pub left_terminal: Option<SlotRef>,
    pub good: bool,
    pub balanced: bool,
    /// Only defined for disks embedded in the lattice.
    pub excellent: Option<bool>,
}

/// Classification flags of a diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub good: bool,
    pub balanced: bool,
    pub excellent: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl Diagonal {
    /// Number of squares `k`.
    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn corner(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("a diagonal has at least two vertices")
    }

    pub fn flags(&self) -> Flags {
        Flags { good: self.good, balanced: self.balanced, excellent: self.excellent }
    }

    /// Flank on `side` at interior vertex `v_i`, `1 <= i < k`.
    pub fn flank(&self, side: Side, i: usize) -> SlotRef {
        match side {
            Side::Left => self.left[i - 1],
            Side::Right => self.right[i - 1],
        }
    }

    pub fn terminal(&self, side: Side) -> Option<SlotRef> {
        match side {
            Side::Left => self.left_terminal,
            Side::Right => self.right_terminal,
        }
    }

    /// Slot of the last square carrying the terminal edge on `side`.
    pub fn terminal_slot(&self, side: Side) -> u8 {
        let c = *self.entry.last().expect("nonempty diagonal");
        match side {
            Side::Right => next_slot(c),
            Side::Left => opposite_slot(c),
        }
    }

    /// Side whose terminal edge is interior, for balanced diagonals.
    pub fn interior_terminal_side(&self) -> Option<Side> {
        match (self.right_terminal.is_some(), self.left_terminal.is_some()) {
            (true, false) => Some(Side::Right),
            (false, true) => Some(Side::Left),
            _ => None,
        }
    }
}

/// Traces the diagonal starting at a corner vertex.
pub fn trace_diagonal(disk: &QuadDisk, corner: usize) -> Result<Diagonal> {
    if corner >= disk.num_vertices() || !disk.vertex(corner).is_corner() {
        return Err(Error::NotACorner(corner));
    }
    let (mut s, mut c) = disk.vertex(corner).fan[0];
    let mut vertices = vec![corner];
    let mut squares = vec![s];
    let mut entry = vec![c];
    let mut right = Vec::new();
    let mut left = Vec::new();
    let mut seen_vertex = vec![false; disk.num_vertices()];
    let mut seen_square = vec![false; disk.num_squares()];
    seen_vertex[corner] = true;
    seen_square[s] = true;
    loop {
        let far = opposite_slot(c);
        let v = disk.vertex_at(s, far);
        if seen_vertex[v] {
            return Err(Error::RepeatDetected(corner));
        }
        seen_vertex[v] = true;
        vertices.push(v);
        let vx = disk.vertex(v);
        if !vx.interior {
            break;
        }
        let fan = &vx.fan;
        let p = fan.iter().position(|&x| x == (s, far)).expect("square lies in the fan of its corner");
        right.push(fan[(p + 1) % 4]);
        let (t, ct) = fan[(p + 2) % 4];
        left.push(fan[(p + 3) % 4]);
        for &(q, _) in [fan[(p + 1) % 4], fan[(p + 2) % 4], fan[(p + 3) % 4]].iter() {
            if seen_square[q] {
                return Err(Error::RepeatDetected(corner));
            }
        }
        for &(q, _) in [fan[(p + 1) % 4], fan[(p + 3) % 4]].iter() {
            seen_square[q] = true;
        }
        seen_square[t] = true;
        s = t;
        c = ct;
        squares.push(s);
        entry.push(c);
    }
    let right_slot = next_slot(c);
    let left_slot = opposite_slot(c);
    let right_terminal = disk.partner(s, right_slot);
    let left_terminal = disk.partner(s, left_slot).map(|(t, f)| (t, next_slot(f)));
    for &(q, _) in right_terminal.iter().chain(left_terminal.iter()) {
        if seen_square[q] {
            return Err(Error::RepeatDetected(corner));
        }
    }
    let boundary_ends = right_terminal.is_none() as u8 + left_terminal.is_none() as u8;
    let mut d = Diagonal {
        vertices,
        squares,
        entry,
        right,
        left,
        right_terminal,
        left_terminal,
        good: boundary_ends >= 1,
        balanced: boundary_ends == 1,
        excellent: None,
    };
    d.excellent = classify_diagonal(disk, &d).excellent;
    Ok(d)
}

/// Recomputes the flags of a traced diagonal from the disk.
pub fn classify_diagonal(disk: &QuadDisk, d: &Diagonal) -> Flags {
    let last = *d.squares.last().expect("nonempty diagonal");
    let c = *d.entry.last().expect("nonempty diagonal");
    let free = [next_slot(c), opposite_slot(c)].iter().filter(|&&e| disk.partner(last, e).is_none()).count();
    let good = free >= 1;
    let excellent = disk.is_board().then(|| {
        let (right_arc, left_arc) = boundary_arcs(disk, d);
        good && (monotone(disk, &arc_points(disk, &right_arc)) || monotone(disk, &arc_points(disk, &left_arc)))
    });
    Flags { good, balanced: free == 1, excellent }
}

/// One diagonal per corner, in increasing corner id order.
pub fn all_diagonals(disk: &QuadDisk) -> Vec<Diagonal> {
    let out: Vec<Diagonal> = disk
        .corners()
        .into_iter()
        .map(|v| trace_diagonal(disk, v).expect("diagonals of a valid disk never repeat"))
        .collect();
    debug_assert!(out.iter().filter(|d| d.good).count() >= 4);
    out
}

/// The two boundary arcs cut out by a diagonal's endpoints, as indices into
/// the boundary circuit. The counterclockwise arc from `v_0` to `v_k` lies on
/// the right of the diagonal and comes first.
pub fn boundary_arcs(disk: &QuadDisk, d: &Diagonal) -> (Vec<usize>, Vec<usize>) {
    let ring = disk.boundary_vertices();
    let m = ring.len();
    let a = ring.iter().position(|&v| v == d.corner()).expect("corner on boundary");
    let b = ring.iter().position(|&v| v == d.end()).expect("end on boundary");
    let steps = (b + m - a) % m;
    let right = (0..steps).map(|i| (a + i) % m).collect();
    let left = (steps..m).map(|i| (a + i) % m).collect();
    (right, left)
}

fn arc_points(disk: &QuadDisk, arc: &[usize]) -> Vec<(i32, i32)> {
    let ring = disk.boundary_vertices();
    let m = ring.len();
    let mut pts: Vec<(i32, i32)> = arc.iter().map(|&i| disk.vertex_point(ring[i]).expect("board")).collect();
    if let Some(&last) = arc.last() {
        pts.push(disk.vertex_point(ring[(last + 1) % m]).expect("board"));
    }
    pts
}

fn monotone(_disk: &QuadDisk, pts: &[(i32, i32)]) -> bool {
    let dx: Vec<i32> = pts.windows(2).map(|w| w[1].0 - w[0].0).collect();
    let dy: Vec<i32> = pts.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let one_way = |d: &[i32]| d.iter().all(|&x| x >= 0) || d.iter().all(|&x| x <= 0);
    one_way(&dx) && one_way(&dy)
}

/// Excellent diagonal of a board whose boundary arc is minimal under inclusion
/// among the arcs of all diagonals. Ties go to the corner lowest in row-major
/// order (bottom row first).
pub fn minimal_arc_excellent(disk: &QuadDisk) -> Diagonal {
    let diagonals = all_diagonals(disk);
    let m = disk.boundary().len();
    let as_mask = |arc: &[usize]| {
        let mut mask = vec![false; m];
        for &i in arc {
            mask[i] = true;
        }
        mask
    };
    let arcs: Vec<(usize, Vec<bool>)> = diagonals
        .iter()
        .enumerate()
        .flat_map(|(i, d)| {
            let (r, l) = boundary_arcs(disk, d);
            [(i, as_mask(&r)), (i, as_mask(&l))]
        })
        .collect();
    let strictly_inside = |a: &[bool], b: &[bool]| a != b && a.iter().zip(b).all(|(&x, &y)| !x || y);
    let minimal: Vec<usize> =
        arcs.iter().filter(|(_, a)| !arcs.iter().any(|(_, b)| strictly_inside(b, a))).map(|(i, _)| *i).collect();
    let key = |d: &Diagonal| {
        let (x, y) = disk.vertex_point(d.corner()).expect("board");
        (y, x)
    };
    let pick = |pool: &mut dyn Iterator<Item = &Diagonal>| pool.min_by_key(|d| key(d)).cloned();
    pick(&mut minimal.iter().map(|&i| &diagonals[i]).filter(|d| d.excellent == Some(true)))
        .or_else(|| pick(&mut diagonals.iter().filter(|d| d.excellent == Some(true))))
        .expect("every board has an excellent diagonal")
}

/// Diagonal used to drive recursions: the minimal-arc excellent diagonal on
/// boards, the good diagonal with the smallest corner id otherwise.
pub fn canonical_good_diagonal(disk: &QuadDisk) -> Diagonal {
    if disk.is_board() {
        return minimal_arc_excellent(disk);
    }
    disk.corners()
        .into_iter()
        .map(|v| trace_diagonal(disk, v).expect("diagonals of a valid disk never repeat"))
        .find(|d| d.good)
        .expect("every disk has a good diagonal")
}
