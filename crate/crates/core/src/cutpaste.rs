//! Cut-and-paste along a good diagonal.
//!
//! The diagonal squares are deleted together with the flanks on one side.
//! Each deleted flank `s^x_i` (`i < k`) is absorbed by the opposite flank
//! `s^y_i`: the survivor keeps its own two far edges and takes over the two
//! far edges of the absorbed square. The region left over splits into
//! disks wherever it was only held together at a vertex.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::board::Board;
use crate::diagonals::{boundary_arcs, Diagonal, Side};
use crate::disk::{next_slot, opposite_slot, prev_slot, Color, GlueTable, QuadDisk, SlotRef, SLOT_DIRECTION};
use crate::error::{Error, Result};

/// A flank absorbed into the opposite flank at the same diagonal vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Merge {
    /// Diagonal vertex index `i`, `1 <= i < k`.
    pub index: usize,
    pub survivor: usize,
    pub absorbed: usize,
}

#[derive(Clone, Debug)]
pub struct CutPasteResult {
    pub components: Vec<QuadDisk>,
    /// Original square of each square of each component.
    pub origins: Vec<Vec<usize>>,
    /// Diagonal squares in diagonal order.
    pub removed_diagonal: Vec<usize>,
    /// Deleted flanks in diagonal order: absorbed flanks, then the terminal
    /// flank when the diagonal is balanced.
    pub removed_flanks: Vec<usize>,
    pub merges: Vec<Merge>,
    pub deleted_side: Side,
    /// Side of every square not on the diagonal.
    pub side_of: Vec<Option<Side>>,
    /// `(component, square)` of every retained original square.
    pub square_map: Vec<Option<(usize, usize)>>,
    /// For boards: the side translated to realize the components in the
    /// lattice, when that succeeded.
    pub moved_side: Option<Side>,
}

impl CutPasteResult {
    pub fn total_squares(&self) -> usize {
        self.components.iter().map(|c| c.num_squares()).sum()
    }

    /// Whether every component carries lattice coordinates.
    pub fn boards_preserved(&self) -> bool {
        self.moved_side.is_some()
    }

    /// Components as boards, when the cut-and-paste stayed in the lattice.
    pub fn boards(&self) -> Result<Vec<Board>> {
        self.components
            .iter()
            .map(|c| match c.coords() {
                Some(cells) => Board::from_cells(cells),
                None => Err(Error::BoardClosure("component has no lattice realization".into())),
            })
            .collect()
    }
}

/// Side of each square off the diagonal, found by flooding the dual graph
/// with the diagonal squares removed from the two families of flanks.
pub fn side_classification(disk: &QuadDisk, d: &Diagonal) -> Result<Vec<Option<Side>>> {
    let n = disk.num_squares();
    let mut on_diagonal = vec![false; n];
    for &s in &d.squares {
        on_diagonal[s] = true;
    }
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut queue = VecDeque::new();
    let seeds = d
        .right
        .iter()
        .chain(d.right_terminal.iter())
        .map(|&(s, _)| (s, Side::Right))
        .chain(d.left.iter().chain(d.left_terminal.iter()).map(|&(s, _)| (s, Side::Left)));
    for (s, sd) in seeds {
        match side[s] {
            Some(prev) if prev != sd => return Err(Error::AmbiguousSide(s)),
            Some(_) => {}
            None => {
                side[s] = Some(sd);
                queue.push_back(s);
            }
        }
    }
    while let Some(u) = queue.pop_front() {
        let su = side[u];
        for t in disk.neighbors(u) {
            if on_diagonal[t] {
                continue;
            }
            match side[t] {
                None => {
                    side[t] = su;
                    queue.push_back(t);
                }
                Some(st) if Some(st) != su => return Err(Error::AmbiguousSide(t)),
                Some(_) => {}
            }
        }
    }
    if let Some(s) = (0..n).find(|&s| !on_diagonal[s] && side[s].is_none()) {
        return Err(Error::InconsistentMap(format!("square {s} is not reached from any flank")));
    }
    Ok(side)
}

/// Side whose flanks are deleted: forced for balanced diagonals, left
/// otherwise.
pub fn deleted_side(d: &Diagonal) -> Side {
    if d.balanced {
        d.interior_terminal_side().expect("balanced diagonals have one interior terminal edge")
    } else {
        Side::Left
    }
}

/// Cut-and-paste deleting the canonical side.
pub fn cut_and_paste(disk: &QuadDisk, d: &Diagonal) -> Result<CutPasteResult> {
    cut_and_paste_side(disk, d, deleted_side(d))
}

/// Cut-and-paste deleting the flanks on `side`. For balanced diagonals the
/// side must be the one whose terminal edge is interior.
pub fn cut_and_paste_side(disk: &QuadDisk, d: &Diagonal, side: Side) -> Result<CutPasteResult> {
    if !d.good {
        return Err(Error::NotGoodDiagonal(d.corner()));
    }
    let x = side;
    let y = x.opposite();
    if d.balanced && d.terminal(x).is_none() {
        return Err(Error::InconsistentMap("balanced diagonals delete the side of the interior terminal edge".into()));
    }
    let n = disk.num_squares();
    let k = d.len();
    let side_of = side_classification(disk, d)?;

    let mut removed = vec![false; n];
    for &s in &d.squares {
        removed[s] = true;
    }
    let mut removed_flanks = Vec::new();
    let mut merges = Vec::new();
    // Where each slot of each square ends up, `None` when it disappears.
    let mut slot_map: Vec<[Option<SlotRef>; 4]> = (0..n).map(|s| [0u8, 1, 2, 3].map(|e| Some((s, e)))).collect();
    for s in &d.squares {
        slot_map[*s] = [None; 4];
    }
    for i in 1..k {
        let (u, cu) = d.flank(y, i);
        let (a, ca) = d.flank(x, i);
        removed[a] = true;
        removed_flanks.push(a);
        merges.push(Merge { index: i, survivor: u, absorbed: a });
        slot_map[a] = [None; 4];
        // Slots toward the diagonal squares before and after `v_i`.
        let (u_before, u_after, a_before, a_after) = match y {
            Side::Right => (cu, prev_slot(cu), prev_slot(ca), ca),
            Side::Left => (prev_slot(cu), cu, ca, prev_slot(ca)),
        };
        slot_map[a][opposite_slot(a_after) as usize] = Some((u, u_before));
        slot_map[a][opposite_slot(a_before) as usize] = Some((u, u_after));
        slot_map[u][u_before as usize] = None;
        slot_map[u][u_after as usize] = None;
    }
    if d.balanced {
        let (t, _) = d.terminal(x).expect("checked above");
        removed[t] = true;
        removed_flanks.push(t);
        slot_map[t] = [None; 4];
    }

    let mut glue: BTreeMap<usize, [Option<SlotRef>; 4]> =
        (0..n).filter(|&s| !removed[s]).map(|s| (s, [None; 4])).collect();
    for a in 0..n {
        for e in 0..4u8 {
            let Some((b, f)) = disk.partner(a, e) else { continue };
            let (Some((na, ne)), Some((nb, nf))) = (slot_map[a][e as usize], slot_map[b][f as usize]) else {
                continue;
            };
            let slots = glue
                .get_mut(&na)
                .ok_or_else(|| Error::InconsistentMap(format!("slot mapped onto deleted square {na}")))?;
            match slots[ne as usize] {
                None => slots[ne as usize] = Some((nb, nf)),
                Some(p) if p == (nb, nf) => {}
                Some(_) => {
                    return Err(Error::InconsistentMap(format!("slot {ne} of square {na} receives two gluings")))
                }
            }
        }
    }

    let retained: Vec<usize> = glue.keys().copied().collect();
    let colors: Vec<Color> = disk.colors().to_vec();
    let groups = split_components(&retained, &glue);
    let mut square_map = vec![None; n];
    let mut components = Vec::with_capacity(groups.len());
    for (ci, group) in groups.iter().enumerate() {
        for (j, &s) in group.iter().enumerate() {
            square_map[s] = Some((ci, j));
        }
    }
    let mut tables = Vec::with_capacity(groups.len());
    for group in &groups {
        let table: GlueTable = group
            .iter()
            .map(|s| {
                glue[s].map(|p| {
                    p.map(|(t, f)| {
                        let (_, j) = square_map[t].expect("partner retained");
                        (j, f)
                    })
                })
            })
            .collect();
        tables.push(table);
    }

    let placed = if disk.is_board() { realize(disk, d, &side_of, &merges, x, &groups, &tables) } else { None };
    let moved_side = placed.as_ref().map(|(z, _)| *z);
    for (ci, group) in groups.iter().enumerate() {
        let comp_colors = group.iter().map(|&s| colors[s]).collect();
        let names = disk.names().map(|nm| group.iter().map(|&s| nm[s].clone()).collect());
        let coords = placed.as_ref().map(|(_, pos)| pos[ci].clone());
        let comp = QuadDisk::from_parts(tables[ci].clone(), Some(comp_colors), names, coords)
            .map_err(|e| Error::InconsistentMap(format!("component {ci} is not a disk: {e}")))?;
        components.push(comp);
    }

    Ok(CutPasteResult {
        components,
        origins: groups,
        removed_diagonal: d.squares.clone(),
        removed_flanks,
        merges,
        deleted_side: x,
        side_of,
        square_map,
        moved_side,
    })
}

/// Splits a glued region into connected pieces. Pieces are ordered by their
/// smallest square and list their squares in increasing order.
fn split_components(squares: &[usize], glue: &BTreeMap<usize, [Option<SlotRef>; 4]>) -> Vec<Vec<usize>> {
    let mut seen: BTreeMap<usize, bool> = squares.iter().map(|&s| (s, false)).collect();
    let mut out = Vec::new();
    for &root in squares {
        if seen[&root] {
            continue;
        }
        seen.insert(root, true);
        let mut group = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(t, _) in glue[&u].iter().flatten() {
                if !seen[&t] {
                    seen.insert(t, true);
                    group.push(t);
                    queue.push_back(t);
                }
            }
        }
        group.sort_unstable();
        out.push(group);
    }
    out
}

/// Splits a region given by a gluing table into its component disks, each
/// validated. Returns the squares of each piece alongside the disk.
pub fn detach(glue: &GlueTable, colors: &[Color]) -> Result<Vec<(Vec<usize>, QuadDisk)>> {
    let squares: Vec<usize> = (0..glue.len()).collect();
    let table: BTreeMap<usize, [Option<SlotRef>; 4]> = glue.iter().copied().enumerate().collect();
    let mut out = Vec::new();
    for group in split_components(&squares, &table) {
        let mut local = vec![usize::MAX; glue.len()];
        for (j, &s) in group.iter().enumerate() {
            local[s] = j;
        }
        let sub: GlueTable = group.iter().map(|&s| glue[s].map(|p| p.map(|(t, f)| (local[t], f)))).collect();
        let sub_colors = group.iter().map(|&s| colors[s]).collect();
        let disk = QuadDisk::from_parts(sub, Some(sub_colors), None, None)?;
        out.push((group, disk));
    }
    Ok(out)
}

type Placement = (Side, Vec<Vec<(i32, i32)>>);

/// Places every component in the lattice by translating one side of the
/// diagonal onto the other. Tries the side with a monotone boundary arc
/// first and returns `None` if neither side works.
fn realize(
    disk: &QuadDisk,
    d: &Diagonal,
    side_of: &[Option<Side>],
    merges: &[Merge],
    deleted: Side,
    groups: &[Vec<usize>],
    tables: &[GlueTable],
) -> Option<Placement> {
    let coords = disk.coords()?;
    let (right_arc, left_arc) = boundary_arcs(disk, d);
    let ring = disk.boundary_vertices();
    let m = ring.len();
    let monotone = |arc: &[usize]| {
        let pts: Vec<(i32, i32)> = arc
            .iter()
            .map(|&i| ring[i])
            .chain(arc.last().map(|&i| ring[(i + 1) % m]))
            .map(|v| disk.vertex_point(v).expect("board"))
            .collect();
        let ok = |f: &dyn Fn(&(i32, i32)) -> i32| {
            let ds: Vec<i32> = pts.windows(2).map(|w| f(&w[1]) - f(&w[0])).collect();
            ds.iter().all(|&x| x >= 0) || ds.iter().all(|&x| x <= 0)
        };
        ok(&|p| p.0) && ok(&|p| p.1)
    };
    let mut order = Vec::new();
    if monotone(&right_arc) {
        order.push(Side::Right);
    }
    if monotone(&left_arc) {
        order.push(Side::Left);
    }
    for s in [Side::Right, Side::Left] {
        if !order.contains(&s) {
            order.push(s);
        }
    }
    let absorbed_of: BTreeMap<usize, usize> = merges.iter().map(|m| (m.survivor, m.absorbed)).collect();
    'sides: for z in order {
        let shift = if d.len() >= 2 {
            let (fixed, _) = d.flank(z.opposite(), 1);
            let (moved, _) = d.flank(z, 1);
            (coords[fixed].0 - coords[moved].0, coords[fixed].1 - coords[moved].1)
        } else {
            (0, 0)
        };
        let place = |s: usize| -> (i32, i32) {
            if let Some(&a) = absorbed_of.get(&s) {
                // The merged square sits where the fixed flank was.
                return if z == deleted.opposite() { coords[a] } else { coords[s] };
            }
            let (x, y) = coords[s];
            if side_of[s] == Some(z) {
                (x + shift.0, y + shift.1)
            } else {
                (x, y)
            }
        };
        let mut out = Vec::with_capacity(groups.len());
        for (group, table) in groups.iter().zip(tables) {
            let pos: Vec<(i32, i32)> = group.iter().map(|&s| place(s)).collect();
            let index: BTreeMap<(i32, i32), usize> = pos.iter().enumerate().map(|(j, &p)| (p, j)).collect();
            if index.len() != pos.len() {
                continue 'sides;
            }
            for (j, slots) in table.iter().enumerate() {
                for e in 0..4u8 {
                    let (dx, dy) = SLOT_DIRECTION[e as usize];
                    let there = index.get(&(pos[j].0 + dx, pos[j].1 + dy)).copied();
                    match (slots[e as usize], there) {
                        (None, None) => {}
                        (Some((t, f)), Some(u)) if t == u && f == next_slot(next_slot(e)) => {}
                        _ => continue 'sides,
                    }
                }
            }
            if Board::from_cells(&pos).is_err() {
                continue 'sides;
            }
            out.push(pos);
        }
        return Some((z, out));
    }
    None
}

/// Cut-and-paste along the board's canonical excellent diagonal, returning
/// the resulting boards.
pub fn board_cut_and_paste(board: &Board) -> Result<(Diagonal, CutPasteResult, Vec<Board>)> {
    let d = crate::diagonals::minimal_arc_excellent(board.disk());
    let cp = cut_and_paste(board.disk(), &d)?;
    if !cp.boards_preserved() {
        return Err(Error::BoardClosure(format!("diagonal from vertex {}", d.corner())));
    }
    let boards = cp.boards()?;
    Ok((d, cp, boards))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::parse_board;
    use crate::diagonals::{all_diagonals, trace_diagonal};
    use crate::glue::parse_glued;

    #[test]
    fn domino_vanishes() {
        let d = parse_glued("squares 2\nglue 0 1 1 3\n").unwrap();
        let diag = trace_diagonal(&d, 0).unwrap();
        let cp = cut_and_paste(&d, &diag).unwrap();
        assert!(cp.components.is_empty());
        assert_eq!(cp.removed_diagonal, vec![0]);
        assert_eq!(cp.removed_flanks, vec![1]);
    }

    #[test]
    fn two_by_two_sides_and_result() {
        let b = parse_board("##\n##").unwrap();
        let diag = trace_diagonal(b.disk(), 0).unwrap();
        let sides = side_classification(b.disk(), &diag).unwrap();
        assert_eq!(sides, vec![None, Some(Side::Right), Some(Side::Left), None]);
        let cp = cut_and_paste(b.disk(), &diag).unwrap();
        assert_eq!(cp.deleted_side, Side::Left);
        assert_eq!(cp.removed_flanks, vec![2]);
        assert_eq!(cp.merges, vec![Merge { index: 1, survivor: 1, absorbed: 2 }]);
        assert_eq!(cp.total_squares(), 1);
        assert_eq!(cp.square_map[1], Some((0, 0)));
    }

    #[test]
    fn bad_diagonal_is_refused() {
        let b = parse_board("###\n###\n###").unwrap();
        let bad = all_diagonals(b.disk()).into_iter().find(|d| !d.good);
        if let Some(bad) = bad {
            assert!(matches!(cut_and_paste(b.disk(), &bad), Err(Error::NotGoodDiagonal(_))));
        }
    }

    #[test]
    fn square_counts_drop_as_expected() {
        for text in ["###\n###", "####\n####\n####", "#..\n###\n.##", ".##.\n####\n.##."] {
            let b = parse_board(text).unwrap();
            for d in all_diagonals(b.disk()).into_iter().filter(|d| d.good) {
                let cp = cut_and_paste(b.disk(), &d).unwrap();
                let k = d.len();
                let flanks = if d.balanced { k } else { k - 1 };
                assert_eq!(cp.removed_flanks.len(), flanks);
                assert_eq!(cp.total_squares(), b.len() - k - flanks, "{text}");
            }
        }
    }

    #[test]
    fn excellent_cut_keeps_a_board() {
        let b = parse_board("###\n###\n###").unwrap();
        let (_, cp, boards) = board_cut_and_paste(&b).unwrap();
        assert!(cp.boards_preserved());
        assert_eq!(boards.iter().map(|b| b.len()).sum::<usize>(), cp.total_squares());
    }

    #[test]
    fn detach_splits_pieces() {
        let d = parse_board("##").unwrap();
        let mut table = d.disk().glue_table().clone();
        table[0][1] = None;
        table[1][3] = None;
        let parts = detach(&table, d.disk().colors()).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(detach(&Vec::new(), &[]).unwrap().is_empty());
    }
}
