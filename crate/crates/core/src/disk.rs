//! Quadriculated disks as square complexes.
//!
//! A disk is a set of squares, each with four edge slots numbered
//! counterclockwise, together with a partial involution pairing slots. Slot
//! `e` runs from corner `e` to corner `e + 1`; gluing slot `e` of `a` to slot
//! `f` of `b` identifies corner `e` of `a` with corner `f + 1` of `b` and
//! corner `e + 1` of `a` with corner `f` of `b`, so glued edges are traversed
//! in opposite directions and the complex is oriented.
//!
//! Vertices are never stored by the caller: they are the orbits of corners
//! under the gluing, computed once at construction as fans of squares listed
//! counterclockwise around the vertex.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// Partner of an edge slot: `(square, slot)`.
pub type SlotRef = (usize, u8);

/// Gluing table: for each square, the partner of each of its four slots.
pub type GlueTable = Vec<[Option<SlotRef>; 4]>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// A vertex as the fan of `(square, corner)` pairs around it, counterclockwise.
///
/// For boundary vertices the fan starts at the square whose clockwise edge at
/// the vertex lies on the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub fan: Vec<SlotRef>,
    pub interior: bool,
}

impl Vertex {
    /// Number of squares containing the vertex.
    pub fn degree(&self) -> usize {
        self.fan.len()
    }

    pub fn is_corner(&self) -> bool {
        !self.interior && self.fan.len() == 1
    }
}

#[derive(Clone, Debug)]
pub struct QuadDisk {
    glue: GlueTable,
    colors: Vec<Color>,
    names: Option<Vec<String>>,
    coords: Option<Vec<(i32, i32)>>,
    corner_vertex: Vec<[usize; 4]>,
    vertices: Vec<Vertex>,
    boundary: Vec<SlotRef>,
}

#[inline]
pub(crate) fn next_slot(e: u8) -> u8 {
    (e + 1) & 3
}

#[inline]
pub(crate) fn prev_slot(e: u8) -> u8 {
    (e + 3) & 3
}

#[inline]
pub(crate) fn opposite_slot(e: u8) -> u8 {
    (e + 2) & 3
}

/// Lattice step across slot `e` of a unit cell: bottom, right, top, left.
pub(crate) const SLOT_DIRECTION: [(i32, i32); 4] = [(0, -1), (1, 0), (0, 1), (-1, 0)];

/// Offset of corner `c` of the unit cell from its lower-left corner.
pub(crate) const CORNER_OFFSET: [(i32, i32); 4] = [(0, 0), (1, 0), (1, 1), (0, 1)];

impl QuadDisk {
    /// Builds a disk from a list of gluings `(a, e, b, f)`.
    ///
    /// Colors are assigned canonically: square 0 is black.
    pub fn from_gluings(squares: usize, gluings: &[(usize, u8, usize, u8)]) -> Result<QuadDisk> {
        let glue = glue_table(squares, gluings)?;
        QuadDisk::from_parts(glue, None, None, None)
    }

    /// Builds and validates a disk from a complete gluing table.
    ///
    /// When `colors` is `None` the canonical coloring (square 0 black) is used;
    /// otherwise the given coloring must be proper.
    pub fn from_parts(
        glue: GlueTable,
        colors: Option<Vec<Color>>,
        names: Option<Vec<String>>,
        coords: Option<Vec<(i32, i32)>>,
    ) -> Result<QuadDisk> {
        let n = glue.len();
        if n == 0 {
            return Err(Error::NonDisk("no squares".into()));
        }
        check_involution(&glue)?;
        let (corner_vertex, vertices) = derive_vertices(&glue)?;
        check_connected(&glue)?;
        let boundary = boundary_circuit(&glue)?;
        let e_interior = glue.iter().flatten().filter(|p| p.is_some()).count() / 2;
        let edges = e_interior + boundary.len();
        if vertices.len() + n != edges + 1 {
            return Err(Error::NonDisk(format!(
                "Euler characteristic {} != 1",
                vertices.len() as i64 - edges as i64 + n as i64
            )));
        }
        let colors = match colors {
            Some(c) => {
                if c.len() != n {
                    return Err(Error::BadLabeling("colored"));
                }
                for (s, slots) in glue.iter().enumerate() {
                    for &(t, _) in slots.iter().flatten() {
                        if c[s] == c[t] {
                            return Err(Error::NotBipartite);
                        }
                    }
                }
                c
            }
            None => bicolor_table(&glue)?,
        };
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::BadLabeling("named"));
            }
        }
        if let Some(coords) = &coords {
            if coords.len() != n {
                return Err(Error::BadLabeling("placed"));
            }
        }
        Ok(QuadDisk { glue, colors, names, coords, corner_vertex, vertices, boundary })
    }

    pub fn num_squares(&self) -> usize {
        self.glue.len()
    }

    pub fn glue_table(&self) -> &GlueTable {
        &self.glue
    }

    /// Partner of slot `e` of square `s`, or `None` for a boundary edge.
    pub fn partner(&self, s: usize, e: u8) -> Option<SlotRef> {
        self.glue[s][e as usize]
    }

    pub fn color(&self, s: usize) -> Color {
        self.colors[s]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    /// Squares of one color in index order.
    pub fn squares_of(&self, color: Color) -> Vec<usize> {
        (0..self.num_squares()).filter(|&s| self.colors[s] == color).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of a square: its declared name, or its index.
    pub fn name(&self, s: usize) -> String {
        match &self.names {
            Some(n) => n[s].clone(),
            None => s.to_string(),
        }
    }

    /// Lattice position of each square when the disk is embedded in the plane.
    pub fn coords(&self) -> Option<&[(i32, i32)]> {
        self.coords.as_deref()
    }

    pub fn is_board(&self) -> bool {
        self.coords.is_some()
    }

    /// Lattice point of a vertex, for embedded disks.
    pub fn vertex_point(&self, v: usize) -> Option<(i32, i32)> {
        let coords = self.coords.as_ref()?;
        let (s, c) = self.vertices[v].fan[0];
        let (x, y) = coords[s];
        let (dx, dy) = CORNER_OFFSET[c as usize];
        Some((x + dx, y + dy))
    }

    /// Squares glued to `s`, in increasing index order.
    pub fn neighbors(&self, s: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.glue[s].iter().flatten().map(|&(t, _)| t).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.glue[a].iter().flatten().any(|&(t, _)| t == b)
    }

    /// Adjacency lists of the dual graph.
    pub fn dual_graph(&self) -> Vec<Vec<usize>> {
        (0..self.num_squares()).map(|s| self.neighbors(s)).collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Vertex at corner `c` of square `s`.
    pub fn vertex_at(&self, s: usize, c: u8) -> usize {
        self.corner_vertex[s][c as usize]
    }

    /// Corner vertices in increasing id order.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v].is_corner()).collect()
    }

    /// Boundary edges as `(square, slot)` in counterclockwise circuit order.
    pub fn boundary(&self) -> &[SlotRef] {
        &self.boundary
    }

    /// Boundary vertices in counterclockwise order, aligned with [`boundary`]:
    /// entry `i` is the start of boundary edge `i`.
    ///
    /// [`boundary`]: QuadDisk::boundary
    pub fn boundary_vertices(&self) -> Vec<usize> {
        self.boundary.iter().map(|&(s, e)| self.vertex_at(s, e)).collect()
    }

    /// Same complex with black and white exchanged.
    pub fn with_swapped_colors(&self) -> QuadDisk {
        let mut out = self.clone();
        for c in &mut out.colors {
            *c = c.opposite();
        }
        out
    }

    /// Same complex with names attached.
    pub fn with_names(mut self, names: Vec<String>) -> Result<QuadDisk> {
        if names.len() != self.num_squares() {
            return Err(Error::BadLabeling("named"));
        }
        self.names = Some(names);
        Ok(self)
    }

    /// Renumbers squares so that new square `i` is old square `order[i]`.
    /// Colors, names and coordinates travel with their squares.
    pub fn reindexed(&self, order: &[usize]) -> Result<QuadDisk> {
        let n = self.num_squares();
        let mut inverse = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(Error::BadLabeling("indexed"));
            }
            inverse[old] = new;
        }
        if order.len() != n {
            return Err(Error::BadLabeling("indexed"));
        }
        let glue = order.iter().map(|&old| self.glue[old].map(|p| p.map(|(t, f)| (inverse[t], f)))).collect();
        let colors = order.iter().map(|&old| self.colors[old]).collect();
        let names = self.names.as_ref().map(|v| order.iter().map(|&o| v[o].clone()).collect());
        let coords = self.coords.as_ref().map(|v| order.iter().map(|&o| v[o]).collect());
        QuadDisk::from_parts(glue, Some(colors), names, coords)
    }

    /// Orientation-preserving, color-preserving isomorphism invariant.
    ///
    /// Two disks have equal codes exactly when one can be relabeled (squares
    /// renumbered, slots rotated) into the other.
    pub fn canonical_code(&self) -> Vec<u32> {
        let n = self.num_squares();
        let mut best: Option<Vec<u32>> = None;
        for root in 0..n {
            for offset in 0..4u8 {
                let code = self.code_from(root, offset);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        best.unwrap_or_default()
    }

    fn code_from(&self, root: usize, offset: u8) -> Vec<u32> {
        let n = self.num_squares();
        let mut id = vec![u32::MAX; n];
        let mut rot = vec![0u8; n];
        let mut order = Vec::with_capacity(n);
        id[root] = 0;
        rot[root] = offset;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for j in 0..4u8 {
                if let Some((t, f)) = self.glue[u][((rot[u] + j) & 3) as usize] {
                    if id[t] == u32::MAX {
                        id[t] = order.len() as u32;
                        rot[t] = (f + 8 - opposite_slot(j)) & 3;
                        order.push(t);
                    }
                }
            }
        }
        let mut code = Vec::with_capacity(n * 9);
        for &u in &order {
            code.push(self.colors[u] as u32);
            for j in 0..4u8 {
                match self.glue[u][((rot[u] + j) & 3) as usize] {
                    Some((t, f)) => {
                        code.push(id[t]);
                        code.push(((f + 8 - rot[t]) & 3) as u32);
                    }
                    None => {
                        code.push(u32::MAX);
                        code.push(u32::MAX);
                    }
                }
            }
        }
        code
    }
}

/// Builds a gluing table from `(a, e, b, f)` lines, rejecting reuse of a slot.
pub fn glue_table(squares: usize, gluings: &[(usize, u8, usize, u8)]) -> Result<GlueTable> {
    let mut glue: GlueTable = vec![[None; 4]; squares];
    for &(a, e, b, f) in gluings {
        if a >= squares || b >= squares {
            return Err(Error::NonDisk(format!("gluing {a} {e} {b} {f} names a missing square")));
        }
        if e > 3 || f > 3 {
            return Err(Error::NonDisk(format!("gluing {a} {e} {b} {f} uses a slot outside 0..3")));
        }
        if a == b && e == f {
            return Err(Error::DoubleGluing { square: a, slot: e });
        }
        if glue[a][e as usize].is_some() {
            return Err(Error::DoubleGluing { square: a, slot: e });
        }
        if glue[b][f as usize].is_some() {
            return Err(Error::DoubleGluing { square: b, slot: f });
        }
        glue[a][e as usize] = Some((b, f));
        glue[b][f as usize] = Some((a, e));
    }
    Ok(glue)
}

fn check_involution(glue: &GlueTable) -> Result<()> {
    for (s, slots) in glue.iter().enumerate() {
        for (e, p) in slots.iter().enumerate() {
            if let Some((t, f)) = *p {
                if t >= glue.len() || f > 3 {
                    return Err(Error::NonDisk(format!("slot {e} of square {s} glued outside the complex")));
                }
                if glue[t][f as usize] != Some((s, e as u8)) {
                    return Err(Error::DoubleGluing { square: s, slot: e as u8 });
                }
                if t == s {
                    return Err(Error::NonDisk(format!("square {s} is glued to itself")));
                }
            }
        }
    }
    Ok(())
}

#[inline]
fn ccw_step(glue: &GlueTable, (s, c): SlotRef) -> Option<SlotRef> {
    glue[s][prev_slot(c) as usize]
}

#[inline]
fn cw_step(glue: &GlueTable, (s, c): SlotRef) -> Option<SlotRef> {
    glue[s][c as usize].map(|(t, f)| (t, next_slot(f)))
}

type Vertices = (Vec<[usize; 4]>, Vec<Vertex>);

fn derive_vertices(glue: &GlueTable) -> Result<Vertices> {
    let n = glue.len();
    let mut corner_vertex = vec![[usize::MAX; 4]; n];
    let mut vertices = Vec::new();
    let limit = 4 * n + 1;
    for s in 0..n {
        for c in 0..4u8 {
            if corner_vertex[s][c as usize] != usize::MAX {
                continue;
            }
            let origin = (s, c);
            let mut start = origin;
            let mut interior = false;
            let mut steps = 0;
            while let Some(p) = cw_step(glue, start) {
                if p == origin {
                    interior = true;
                    break;
                }
                start = p;
                steps += 1;
                if steps > limit {
                    return Err(Error::NonDisk("corner orbit does not close".into()));
                }
            }
            if interior {
                start = origin;
            }
            let mut fan = vec![start];
            let mut cur = start;
            while let Some(p) = ccw_step(glue, cur) {
                if p == start {
                    break;
                }
                fan.push(p);
                cur = p;
                if fan.len() > limit {
                    return Err(Error::NonDisk("corner orbit does not close".into()));
                }
            }
            let id = vertices.len();
            for &(t, d) in &fan {
                if corner_vertex[t][d as usize] != usize::MAX {
                    return Err(Error::NonDisk(format!("corner {d} of square {t} lies on two vertices")));
                }
                corner_vertex[t][d as usize] = id;
            }
            let mut seen: Vec<usize> = fan.iter().map(|&(t, _)| t).collect();
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NonDisk(format!("a square meets vertex {id} twice")));
            }
            if interior && fan.len() != 4 {
                return Err(Error::InteriorDegreeViolation { vertex: id, degree: fan.len() });
            }
            vertices.push(Vertex { fan, interior });
        }
    }
    Ok((corner_vertex, vertices))
}

fn check_connected(glue: &GlueTable) -> Result<()> {
    let n = glue.len();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &(t, _) in glue[u].iter().flatten() {
            if !seen[t] {
                seen[t] = true;
                count += 1;
                queue.push_back(t);
            }
        }
    }
    if count != n {
        return Err(Error::NonDisk("dual graph is disconnected".into()));
    }
    Ok(())
}

fn boundary_circuit(glue: &GlueTable) -> Result<Vec<SlotRef>> {
    let total: usize = glue.iter().flatten().filter(|p| p.is_none()).count();
    let first = glue
        .iter()
        .enumerate()
        .find_map(|(s, slots)| slots.iter().position(|p| p.is_none()).map(|e| (s, e as u8)))
        .ok_or_else(|| Error::NonDisk("no boundary edges".into()))?;
    let mut circuit = vec![first];
    let mut cur = first;
    loop {
        let (s, e) = cur;
        // Walk clockwise around the end vertex until the outgoing boundary edge.
        let mut corner = (s, next_slot(e));
        while let Some(p) = cw_step(glue, corner) {
            corner = p;
        }
        let next = corner;
        if next == first {
            break;
        }
        circuit.push(next);
        cur = next;
        if circuit.len() > total {
            return Err(Error::NonDisk("boundary does not close".into()));
        }
    }
    if circuit.len() != total {
        return Err(Error::NonDisk(format!(
            "boundary splits into several circuits ({} of {} edges on the first)",
            circuit.len(),
            total
        )));
    }
    Ok(circuit)
}

fn bicolor_table(glue: &GlueTable) -> Result<Vec<Color>> {
    let n = glue.len();
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for root in 0..n {
        if colors[root].is_some() {
            continue;
        }
        colors[root] = Some(Color::Black);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = colors[u].expect("colored on enqueue");
            for &(t, _) in glue[u].iter().flatten() {
                match colors[t] {
                    None => {
                        colors[t] = Some(cu.opposite());
                        queue.push_back(t);
                    }
                    Some(ct) if ct == cu => return Err(Error::NotBipartite),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(colors.into_iter().map(|c| c.expect("every square colored")).collect())
}

/// Canonical proper 2-coloring of the dual graph: square 0 is black.
pub fn bicolor(disk: &QuadDisk) -> Result<Vec<Color>> {
    bicolor_table(disk.glue_table())
}

/// Dual graph with neighbors in increasing index order.
pub fn dual_graph(disk: &QuadDisk) -> Vec<Vec<usize>> {
    disk.dual_graph()
}

/// Vertex and edge counts of a disk, with the identities they satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryCensus {
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "V_I")]
    pub interior_vertices: usize,
    /// `V_r`: boundary vertices lying in exactly `r` squares, keyed by `r`.
    #[serde(rename = "V_r")]
    pub boundary_by_degree: BTreeMap<usize, usize>,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "E_I")]
    pub interior_edges: usize,
    #[serde(rename = "E_B")]
    pub boundary_edges: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    #[serde(rename = "board", skip_serializing_if = "Option::is_none")]
    pub board: Option<BoardCensus>,
}

/// Boundary vertices of a board classified by the restriction of `x + y` to
/// the boundary: extremal corners, extremal non-corners, and the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoardCensus {
    #[serde(rename = "V_B_plus")]
    pub positive: usize,
    #[serde(rename = "V_B_minus")]
    pub negative: usize,
    #[serde(rename = "V_B_zero")]
    pub neutral: usize,
}

impl BoundaryCensus {
    pub fn corners(&self) -> usize {
        self.boundary_by_degree.get(&1).copied().unwrap_or(0)
    }

    /// `V_1 - V_3 - 2 V_4 - ... - (r - 2) V_r`.
    pub fn corner_excess(&self) -> i64 {
        self.boundary_by_degree.iter().map(|(&r, &count)| (2 - r as i64) * count as i64).sum()
    }

    /// `V_3 + 2 V_4 + ... + (r - 2) V_r`, the number of possible bad ends.
    pub fn bad_end_budget(&self) -> i64 {
        self.boundary_by_degree.iter().filter(|(&r, _)| r >= 3).map(|(&r, &count)| (r as i64 - 2) * count as i64).sum()
    }
}

/// Counts vertices, edges and faces and checks every identity they obey.
pub fn census(disk: &QuadDisk) -> BoundaryCensus {
    let mut by_degree = BTreeMap::new();
    let mut interior = 0;
    for v in disk.vertices() {
        if v.interior {
            interior += 1;
        } else {
            *by_degree.entry(v.degree()).or_insert(0) += 1;
        }
    }
    let boundary_edges = disk.boundary().len();
    let interior_edges = (4 * disk.num_squares() - boundary_edges) / 2;
    let board = disk.coords().map(|_| board_census(disk));
    BoundaryCensus {
        vertices: disk.num_vertices(),
        interior_vertices: interior,
        boundary_by_degree: by_degree,
        edges: interior_edges + boundary_edges,
        interior_edges,
        boundary_edges,
        faces: disk.num_squares(),
        board,
    }
}

fn board_census(disk: &QuadDisk) -> BoardCensus {
    let ring = disk.boundary_vertices();
    let m = ring.len();
    let height = |v: usize| {
        let (x, y) = disk.vertex_point(v).expect("board vertices have lattice points");
        x + y
    };
    let mut out = BoardCensus { positive: 0, negative: 0, neutral: 0 };
    for i in 0..m {
        let v = ring[i];
        let h = height(v);
        let before = height(ring[(i + m - 1) % m]) - h;
        let after = height(ring[(i + 1) % m]) - h;
        if before.signum() == after.signum() {
            if disk.vertex(v).is_corner() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
        } else {
            out.neutral += 1;
        }
    }
    out
}

/// Computes the census and reports the first identity that fails.
pub fn validate(disk: &QuadDisk) -> Result<BoundaryCensus> {
    let c = census(disk);
    let excess = c.corner_excess();
    if excess != 4 {
        return Err(Error::CensusViolation(format!("V1 - V3 - 2V4 - ... = {excess}, expected 4")));
    }
    if 4 * c.faces != 2 * c.edges - c.boundary_edges {
        return Err(Error::CensusViolation("4F != 2E - E_B".into()));
    }
    let boundary_vertices: usize = c.boundary_by_degree.values().sum();
    if boundary_vertices != c.boundary_edges {
        return Err(Error::CensusViolation("E_B != V_1 + V_2 + ... + V_r".into()));
    }
    if c.vertices + c.faces != c.edges + 1 {
        return Err(Error::CensusViolation("V - E + F != 1".into()));
    }
    if let Some(b) = c.board {
        if b.positive as i64 - b.negative as i64 != 2 {
            return Err(Error::CensusViolation(format!(
                "V_B+ - V_B- = {}, expected 2",
                b.positive as i64 - b.negative as i64
            )));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn domino() -> QuadDisk {
        QuadDisk::from_gluings(2, &[(0, 1, 1, 3)]).unwrap()
    }

    #[test]
    fn unit_square_census() {
        let d = QuadDisk::from_gluings(1, &[]).unwrap();
        let c = validate(&d).unwrap();
        assert_eq!(c.corners(), 4);
        assert_eq!(c.boundary_by_degree.len(), 1);
        assert_eq!(c.interior_vertices, 0);
        assert_eq!(d.corners().len(), 4);
    }

    #[test]
    fn domino_is_bicolored_and_has_one_dual_edge() {
        let d = domino();
        assert_eq!(d.colors(), &[Color::Black, Color::White]);
        assert_eq!(d.dual_graph(), vec![vec![1], vec![0]]);
        let c = validate(&d).unwrap();
        assert_eq!(c.corners(), 4);
        assert_eq!(c.boundary_by_degree[&2], 2);
        assert_eq!(c.vertices, 6);
    }

    #[test]
    fn self_gluing_is_rejected() {
        assert!(matches!(QuadDisk::from_gluings(1, &[(0, 0, 0, 2)]), Err(Error::NonDisk(_))));
        assert!(matches!(QuadDisk::from_gluings(1, &[(0, 0, 0, 0)]), Err(Error::DoubleGluing { .. })));
    }

    #[test]
    fn reused_slot_is_double_gluing() {
        assert!(matches!(
            QuadDisk::from_gluings(3, &[(0, 1, 1, 3), (0, 1, 2, 3)]),
            Err(Error::DoubleGluing { square: 0, slot: 1 })
        ));
    }

    #[test]
    fn annulus_fails_disk_check() {
        // Two squares glued along opposite edges twice form an annulus.
        let r = QuadDisk::from_gluings(2, &[(0, 1, 1, 3), (0, 3, 1, 1)]);
        assert!(r.is_err());
    }

    #[test]
    fn interior_vertex_of_degree_three_is_rejected() {
        // Three squares around a vertex, closed up: a cone point.
        let r = QuadDisk::from_gluings(3, &[(0, 1, 1, 0), (1, 1, 2, 0), (2, 1, 0, 0)]);
        assert!(matches!(r, Err(Error::InteriorDegreeViolation { degree: 3, .. })));
    }

    #[test]
    fn odd_cycle_is_not_bipartite() {
        // Five squares around a vertex are not allowed either; the error
        // reported first is the interior degree.
        let r = QuadDisk::from_gluings(5, &[(0, 1, 1, 0), (1, 1, 2, 0), (2, 1, 3, 0), (3, 1, 4, 0), (4, 1, 0, 0)]);
        assert!(r.is_err());
    }

    #[test]
    fn canonical_code_ignores_numbering() {
        let a = QuadDisk::from_gluings(3, &[(0, 1, 1, 3), (1, 2, 2, 0)]).unwrap();
        let b = a.reindexed(&[2, 0, 1]).unwrap();
        // Reindexing may flip which square is canonically black, so compare
        // with the colors carried along.
        assert_eq!(a.canonical_code(), b.canonical_code());
        let c = QuadDisk::from_gluings(3, &[(0, 1, 1, 3), (1, 1, 2, 3)]).unwrap();
        assert_ne!(a.canonical_code(), c.canonical_code());
    }
}
