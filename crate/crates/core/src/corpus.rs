//! Deterministic families of test disks: every board up to a size, rectangles,
//! seeded random boards and seeded random glued disks that are not boards.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::board::Board;
use crate::disk::{Color, QuadDisk};

type Visit<'a> = &'a mut dyn FnMut(&[(i32, i32)]);

/// Calls `f` on every fixed polyomino with at most `max_cells` cells, each
/// exactly once, in Redelmeier's enumeration order.
pub fn for_each_polyomino(max_cells: usize, mut f: impl FnMut(&[(i32, i32)])) {
    if max_cells == 0 {
        return;
    }
    let m = max_cells as i32;
    let width = (2 * m + 1) as usize;
    let mut seen = vec![false; width * (m as usize + 1)];
    let slot = |(x, y): (i32, i32)| (y as usize) * width + (x + m) as usize;
    seen[slot((0, 0))] = true;
    let mut untried = vec![(0, 0)];
    let mut poly = Vec::with_capacity(max_cells);
    grow(&mut untried, &mut poly, &mut seen, &slot, max_cells, m, &mut f);
}

fn grow(
    untried: &mut Vec<(i32, i32)>,
    poly: &mut Vec<(i32, i32)>,
    seen: &mut [bool],
    slot: &dyn Fn((i32, i32)) -> usize,
    max: usize,
    m: i32,
    f: Visit,
) {
    while let Some(c) = untried.pop() {
        poly.push(c);
        f(poly);
        if poly.len() < max {
            let mut added = Vec::new();
            for (dx, dy) in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
                let q = (c.0 + dx, c.1 + dy);
                let inside = (q.1 > 0 || (q.1 == 0 && q.0 >= 0)) && q.1 <= m && q.0.abs() <= m;
                if inside && !seen[slot(q)] {
                    seen[slot(q)] = true;
                    added.push(q);
                }
            }
            let mut next = untried.clone();
            next.extend_from_slice(&added);
            grow(&mut next, poly, seen, slot, max, m, f);
            for q in added {
                seen[slot(q)] = false;
            }
        }
        poly.pop();
    }
}

/// Calls `f` on every board (polyomino without holes or pinches) with at most
/// `max_cells` cells.
pub fn for_each_board(max_cells: usize, mut f: impl FnMut(Board)) {
    for_each_polyomino(max_cells, |cells| {
        if let Ok(b) = Board::from_cells(cells) {
            f(b);
        }
    });
}

/// All boards up to `max_cells`, collected. Use [`for_each_board`] for large
/// sizes.
pub fn all_boards(max_cells: usize) -> Vec<Board> {
    let mut out = Vec::new();
    for_each_board(max_cells, |b| out.push(b));
    out
}

/// Rectangles `w x h` with `1 <= w, h <= max_side`.
pub fn rectangles(max_side: usize) -> Vec<Board> {
    let mut out = Vec::new();
    for h in 1..=max_side as i32 {
        for w in 1..=max_side as i32 {
            let cells: Vec<_> = (0..h).flat_map(|y| (0..w).map(move |x| (x, y))).collect();
            out.push(Board::from_cells(&cells).expect("rectangles are boards"));
        }
    }
    out
}

/// A random board with exactly `cells` cells, grown from a single cell.
pub fn random_board(rng: &mut ChaCha8Rng, cells: usize) -> Board {
    loop {
        let mut set = vec![(0, 0)];
        while set.len() < cells {
            let &(x, y) = set.choose(rng).expect("nonempty");
            let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
            let q = (x + dx, y + dy);
            if !set.contains(&q) {
                set.push(q);
            }
        }
        if let Ok(b) = Board::from_cells(&set) {
            return b;
        }
    }
}

/// `count` random boards with sizes drawn from `min_cells..=max_cells`.
pub fn random_boards(seed: u64, count: usize, min_cells: usize, max_cells: usize) -> Vec<Board> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_cells..=max_cells);
            random_board(&mut rng, n)
        })
        .collect()
}

/// A random disk grown by attaching squares along one boundary edge, or
/// along two boundary edges around a vertex lying in three squares. Returned
/// only once some boundary vertex lies in four or more squares, which no
/// board allows; that needs at least four squares, so smaller sizes are
/// raised to four.
pub fn random_glued_disk(rng: &mut ChaCha8Rng, squares: usize) -> QuadDisk {
    let squares = squares.max(4);
    loop {
        if let Some(d) = try_glued(rng, squares) {
            return d;
        }
    }
}

fn try_glued(rng: &mut ChaCha8Rng, squares: usize) -> Option<QuadDisk> {
    let mut gluings: Vec<(usize, u8, usize, u8)> = Vec::new();
    let mut disk = QuadDisk::from_gluings(1, &[]).ok()?;
    while disk.num_squares() < squares {
        let n = disk.num_squares();
        let boundary = disk.boundary().to_vec();
        let m = boundary.len();
        let i = rng.gen_range(0..m);
        let (s1, e1) = boundary[i];
        let v = disk.vertex_at(s1, (e1 + 1) & 3);
        let mut attempt = gluings.clone();
        if disk.vertex(v).degree() == 3 && rng.gen_bool(0.5) {
            let (s2, e2) = boundary[(i + 1) % m];
            attempt.push((n, 1, s1, e1));
            attempt.push((n, 0, s2, e2));
        } else {
            attempt.push((n, 0, s1, e1));
        }
        if let Ok(next) = QuadDisk::from_gluings(n + 1, &attempt) {
            gluings = attempt;
            disk = next;
        }
    }
    let non_board = disk.vertices().iter().any(|v| !v.interior && v.degree() >= 4);
    non_board.then_some(disk)
}

/// `count` random non-board disks with sizes drawn from `min..=max` squares.
pub fn random_glued_disks(seed: u64, count: usize, min: usize, max: usize) -> Vec<QuadDisk> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min..=max);
            random_glued_disk(&mut rng, n)
        })
        .collect()
}

/// Whether a disk has as many black as white squares.
pub fn balanced_colors(disk: &QuadDisk) -> bool {
    disk.count(Color::Black) == disk.count(Color::White)
}

/// A disk produced by a corpus generator.
#[derive(Clone, Debug)]
pub enum Region {
    Board(Board),
    Glued(QuadDisk),
}

impl Region {
    pub fn disk(&self) -> &QuadDisk {
        match self {
            Region::Board(b) => b.disk(),
            Region::Glued(d) => d,
        }
    }

    pub fn board(&self) -> Option<&Board> {
        match self {
            Region::Board(b) => Some(b),
            Region::Glued(_) => None,
        }
    }

    /// The region in its own text format.
    pub fn render(&self) -> String {
        match self {
            Region::Board(b) => b.render(),
            Region::Glued(d) => crate::glue::render_glued(d),
        }
    }
}

/// Seeded random family: `count` disks with sizes in `min..=max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub seed: u64,
    pub count: usize,
    pub min: usize,
    pub max: usize,
}

/// Which generators to run, in this order, and which regions to keep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusSpec {
    /// Every board with at most this many cells.
    pub all_boards: Option<usize>,
    /// Every rectangle with sides up to this length.
    pub rectangles: Option<usize>,
    pub random_boards: Option<RandomSpec>,
    pub glued: Option<RandomSpec>,
    /// Keep only disks with as many black as white squares.
    pub square_only: bool,
    /// Drop glued disks.
    pub boards_only: bool,
}

impl CorpusSpec {
    pub fn is_empty(&self) -> bool {
        self.all_boards.is_none() && self.rectangles.is_none() && self.random_boards.is_none() && self.glued.is_none()
    }

    fn keeps(&self, disk: &QuadDisk) -> bool {
        !self.square_only || balanced_colors(disk)
    }

    /// Streams the corpus without holding it in memory.
    pub fn for_each(&self, mut f: impl FnMut(Region)) {
        if let Some(n) = self.all_boards {
            for_each_board(n, |b| {
                if self.keeps(b.disk()) {
                    f(Region::Board(b))
                }
            });
        }
        let mut boards = Vec::new();
        if let Some(n) = self.rectangles {
            boards.extend(rectangles(n));
        }
        if let Some(r) = self.random_boards {
            boards.extend(random_boards(r.seed, r.count, r.min, r.max));
        }
        for b in boards {
            if self.keeps(b.disk()) {
                f(Region::Board(b));
            }
        }
        if let (Some(r), false) = (self.glued, self.boards_only) {
            for d in random_glued_disks(r.seed, r.count, r.min, r.max) {
                if self.keeps(&d) {
                    f(Region::Glued(d));
                }
            }
        }
    }

    pub fn collect(&self) -> Vec<Region> {
        let mut out = Vec::new();
        self.for_each(|r| out.push(r));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_polyomino_counts() {
        let mut counts = [0usize; 9];
        for_each_polyomino(8, |p| counts[p.len()] += 1);
        assert_eq!(&counts[1..], &[1, 2, 6, 19, 63, 216, 760, 2725]);
    }

    #[test]
    fn boards_exclude_holes() {
        let mut counts = [0usize; 8];
        for_each_board(7, |b| counts[b.len()] += 1);
        // The first polyomino with a hole has seven cells.
        assert_eq!(&counts[1..7], &[1, 2, 6, 19, 63, 216]);
        assert!(counts[7] < 760);
    }

    #[test]
    fn random_boards_are_reproducible() {
        let a = random_boards(7, 5, 4, 12);
        let b = random_boards(7, 5, 4, 12);
        assert_eq!(
            a.iter().map(|x| x.cells().to_vec()).collect::<Vec<_>>(),
            b.iter().map(|x| x.cells().to_vec()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn spec_filters() {
        let spec = CorpusSpec { all_boards: Some(4), square_only: true, ..Default::default() };
        let all = spec.collect();
        assert!(all.iter().all(|r| balanced_colors(r.disk())));
        // Two dominoes and every tetromino except the four T orientations.
        assert_eq!(all.len(), 17);
        let glued = CorpusSpec {
            glued: Some(RandomSpec { seed: 1, count: 3, min: 5, max: 8 }),
            boards_only: true,
            ..Default::default()
        };
        assert!(glued.collect().is_empty());
    }

    #[test]
    fn glued_disks_are_not_boards() {
        for d in random_glued_disks(3, 5, 6, 14) {
            assert!(d.vertices().iter().any(|v| !v.interior && v.degree() >= 4));
            crate::disk::validate(&d).unwrap();
        }
    }
}
