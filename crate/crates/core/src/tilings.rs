//! Domino tilings, their parities, and the parity-reversing matching built by
//! recursive cut-and-paste.

use std::collections::HashMap;

use serde::Serialize;

use crate::adjacency::Labeling;
use crate::cutpaste::{cut_and_paste, CutPasteResult};
use crate::diagonals::{canonical_good_diagonal, Diagonal};
use crate::disk::{Color, QuadDisk};
use crate::error::{Error, Result};

/// A set of dominos, each a pair of glued squares `(a, b)` with `a < b`,
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tiling {
    pub dominos: Vec<(usize, usize)>,
}

impl Tiling {
    pub fn new(mut dominos: Vec<(usize, usize)>) -> Tiling {
        for p in &mut dominos {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        dominos.sort_unstable();
        Tiling { dominos }
    }

    /// Partner of every square covered by the tiling.
    pub fn partners(&self) -> HashMap<usize, usize> {
        let mut m = HashMap::with_capacity(2 * self.dominos.len());
        for &(a, b) in &self.dominos {
            m.insert(a, b);
            m.insert(b, a);
        }
        m
    }

    fn partner_vec(&self, n: usize) -> Vec<usize> {
        let mut v = vec![usize::MAX; n];
        for &(a, b) in &self.dominos {
            v[a] = b;
            v[b] = a;
        }
        v
    }

    /// Checks that the tiling is a perfect matching of the disk's dual graph.
    pub fn check(&self, disk: &QuadDisk) -> Result<()> {
        let n = disk.num_squares();
        let mut covered = vec![false; n];
        for &(a, b) in &self.dominos {
            if b >= n || !disk.adjacent(a, b) {
                return Err(Error::InconsistentTiling(format!("({a}, {b}) is not a domino")));
            }
            for s in [a, b] {
                if std::mem::replace(&mut covered[s], true) {
                    return Err(Error::InconsistentTiling(format!("square {s} covered twice")));
                }
            }
        }
        if let Some(s) = covered.iter().position(|&c| !c) {
            return Err(Error::InconsistentTiling(format!("square {s} uncovered")));
        }
        Ok(())
    }
}

/// All tilings, ordered lexicographically by their sorted domino lists.
pub fn enumerate_tilings(disk: &QuadDisk) -> Vec<Tiling> {
    let n = disk.num_squares();
    let graph = disk.dual_graph();
    let mut out = Vec::new();
    if disk.count(Color::Black) != disk.count(Color::White) {
        return out;
    }
    let mut partner = vec![usize::MAX; n];
    let mut stack = Vec::with_capacity(n / 2);
    fill(&graph, &mut partner, &mut stack, 0, &mut out);
    out
}

fn fill(
    graph: &[Vec<usize>],
    partner: &mut [usize],
    stack: &mut Vec<(usize, usize)>,
    from: usize,
    out: &mut Vec<Tiling>,
) {
    let Some(s) = (from..graph.len()).find(|&s| partner[s] == usize::MAX) else {
        out.push(Tiling { dominos: stack.clone() });
        return;
    };
    for &t in &graph[s] {
        if partner[t] != usize::MAX {
            continue;
        }
        partner[s] = t;
        partner[t] = s;
        stack.push((s.min(t), s.max(t)));
        fill(graph, partner, stack, s + 1, out);
        stack.pop();
        partner[s] = usize::MAX;
        partner[t] = usize::MAX;
    }
}

/// Number of tilings.
pub fn count_tilings(disk: &QuadDisk) -> usize {
    enumerate_tilings(disk).len()
}

/// Sign of the permutation sending each white square's position to its
/// partner's position under `labeling`.
pub fn tiling_parity(t: &Tiling, labeling: &Labeling) -> Result<i64> {
    let (b, w) = (labeling.rows.len(), labeling.cols.len());
    if b != w {
        return Err(Error::NonSquareDisk { black: b, white: w });
    }
    let partners = t.partners();
    let row_of: HashMap<usize, usize> = labeling.rows.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let perm: Vec<usize> = labeling
        .cols
        .iter()
        .map(|s| partners.get(s).and_then(|p| row_of.get(p)).copied())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InconsistentTiling("a white square has no black partner".into()))?;
    let mut seen = vec![false; w];
    let mut sign = 1;
    for start in 0..w {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    Ok(sign)
}

/// Sum of the parities of all tilings under the canonical labeling.
pub fn signed_count(disk: &QuadDisk) -> Result<i64> {
    let (b, w) = (disk.count(Color::Black), disk.count(Color::White));
    if b != w {
        return Err(Error::NonSquareDisk { black: b, white: w });
    }
    let lab = Labeling::canonical(disk);
    enumerate_tilings(disk).iter().map(|t| tiling_parity(t, &lab)).sum()
}

/// The closed curves of the superposition of two tilings: cycles alternating
/// between dominos of each, with shared dominos discarded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperpositionCurve {
    /// Squares of each curve in traversal order, starting at the smallest.
    pub curves: Vec<Vec<usize>>,
    /// Dominos common to both tilings.
    pub discarded: Vec<(usize, usize)>,
}

impl SuperpositionCurve {
    /// Length of each curve, counted in dual-graph edges.
    pub fn lengths(&self) -> Vec<usize> {
        self.curves.iter().map(|c| c.len()).collect()
    }
}

pub fn superposition(t1: &Tiling, t2: &Tiling) -> SuperpositionCurve {
    let p1 = t1.partners();
    let p2 = t2.partners();
    let mut squares: Vec<usize> = p1.keys().copied().collect();
    squares.sort_unstable();
    let mut seen: HashMap<usize, bool> = HashMap::new();
    let mut curves = Vec::new();
    let mut discarded = Vec::new();
    for &s in &squares {
        if seen.contains_key(&s) {
            continue;
        }
        if p1.get(&s) == p2.get(&s) {
            seen.insert(s, true);
            seen.insert(p1[&s], true);
            discarded.push((s.min(p1[&s]), s.max(p1[&s])));
            continue;
        }
        let mut curve = Vec::new();
        let mut cur = s;
        let mut use_first = true;
        loop {
            seen.insert(cur, true);
            curve.push(cur);
            let next = if use_first { p1[&cur] } else { p2[&cur] };
            use_first = !use_first;
            if next == s {
                break;
            }
            cur = next;
        }
        curves.push(curve);
    }
    discarded.sort_unstable();
    SuperpositionCurve { curves, discarded }
}

/// Two tilings are compatible when their superposition is a single curve
/// whose length is a multiple of 4.
pub fn compatible(t1: &Tiling, t2: &Tiling) -> bool {
    let s = superposition(t1, t2);
    s.curves.len() == 1 && s.curves[0].len().is_multiple_of(4)
}

/// Split of a set of tilings by whether the diagonal square `s_{i-1/2}` is
/// ever paired backward, across an edge at `v_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedgePartition {
    /// Indices of tilings pairing some diagonal square backward.
    pub disrespecting: Vec<usize>,
    /// Indices of tilings pairing every diagonal square forward.
    pub respecting: Vec<usize>,
    /// For each disrespecting tiling (aligned with `disrespecting`), the
    /// least wedge index `i >= 2` it disrespects.
    pub first_disrespected: Vec<usize>,
}

/// Least `i` such that `s_{i-1/2}` is paired backward, or `None` when every
/// diagonal square is paired forward.
pub fn first_disrespected(d: &Diagonal, partner: &dyn Fn(usize) -> Option<usize>) -> Option<usize> {
    (2..=d.len()).find(|&i| {
        let p = partner(d.squares[i - 1]);
        p == Some(d.right[i - 2].0) || p == Some(d.left[i - 2].0)
    })
}

/// Whether every diagonal square is paired with a flank at its far vertex.
pub fn respects_all(d: &Diagonal, partner: &dyn Fn(usize) -> Option<usize>) -> bool {
    let k = d.len();
    (1..=k).all(|i| {
        let p = partner(d.squares[i - 1]);
        let (r, l) = if i < k {
            (Some(d.right[i - 1].0), Some(d.left[i - 1].0))
        } else {
            (d.right_terminal.map(|x| x.0), d.left_terminal.map(|x| x.0))
        };
        p.is_some() && (p == r || p == l)
    })
}

pub fn wedge_partition(d: &Diagonal, tilings: &[Tiling]) -> WedgePartition {
    let mut out = WedgePartition { disrespecting: vec![], respecting: vec![], first_disrespected: vec![] };
    for (id, t) in tilings.iter().enumerate() {
        let p = t.partners();
        let partner = |s: usize| p.get(&s).copied();
        match first_disrespected(d, &partner) {
            Some(i) => {
                out.disrespecting.push(id);
                out.first_disrespected.push(i);
            }
            // A diagonal square not paired backward is paired forward: its
            // only other edges carry the flanks at its far vertex.
            None => out.respecting.push(id),
        }
    }
    out
}

/// Restricts a respecting tiling to the pieces of the cut-and-paste. Each
/// returned tiling uses the squares of its component.
pub fn project_tiling(d: &Diagonal, cp: &CutPasteResult, t: &Tiling) -> Result<Vec<Tiling>> {
    let p = t.partners();
    let partner = |s: usize| p.get(&s).copied();
    if !respects_all(d, &partner) {
        return Err(Error::NotInR);
    }
    let mut image: HashMap<usize, usize> = HashMap::new();
    for m in &cp.merges {
        image.insert(m.absorbed, m.survivor);
    }
    let diagonal: std::collections::HashSet<usize> = d.squares.iter().copied().collect();
    let mut parts: Vec<Vec<(usize, usize)>> = vec![Vec::new(); cp.components.len()];
    for &(a, b) in &t.dominos {
        if diagonal.contains(&a) || diagonal.contains(&b) {
            continue;
        }
        let (a2, b2) = (image.get(&a).copied().unwrap_or(a), image.get(&b).copied().unwrap_or(b));
        let (Some((ca, ja)), Some((cb, jb))) = (cp.square_map[a2], cp.square_map[b2]) else {
            return Err(Error::InconsistentTiling(format!("domino ({a}, {b}) leaves the pieces")));
        };
        if ca != cb {
            return Err(Error::InconsistentTiling(format!("domino ({a}, {b}) joins two pieces")));
        }
        parts[ca].push((ja, jb));
    }
    let out: Vec<Tiling> = parts.into_iter().map(Tiling::new).collect();
    for (c, t) in out.iter().enumerate() {
        t.check(&cp.components[c])?;
    }
    Ok(out)
}

/// Inverse of [`project_tiling`].
pub fn lift_tiling(disk: &QuadDisk, d: &Diagonal, cp: &CutPasteResult, parts: &[Tiling]) -> Result<Tiling> {
    if parts.len() != cp.components.len() {
        return Err(Error::InconsistentTiling("one tiling per piece expected".into()));
    }
    let absorbed_of: HashMap<usize, usize> = cp.merges.iter().map(|m| (m.survivor, m.absorbed)).collect();
    let candidates = |s: usize| -> Vec<usize> {
        match absorbed_of.get(&s) {
            Some(&a) => vec![s, a],
            None => vec![s],
        }
    };
    let mut dominos = Vec::new();
    let mut used = vec![false; disk.num_squares()];
    for (c, part) in parts.iter().enumerate() {
        part.check(&cp.components[c])?;
        for &(ja, jb) in &part.dominos {
            let (a, b) = (cp.origins[c][ja], cp.origins[c][jb]);
            let options: Vec<(usize, usize)> = candidates(a)
                .into_iter()
                .flat_map(|x| candidates(b).into_iter().map(move |y| (x, y)))
                .filter(|&(x, y)| disk.adjacent(x, y))
                .collect();
            let [(x, y)] = options[..] else {
                return Err(Error::InconsistentTiling(format!("domino ({a}, {b}) lifts in {} ways", options.len())));
            };
            used[x] = true;
            used[y] = true;
            dominos.push((x, y));
        }
    }
    let k = d.len();
    for m in &cp.merges {
        let free = match (used[m.survivor], used[m.absorbed]) {
            (true, false) => m.absorbed,
            (false, true) => m.survivor,
            _ => return Err(Error::InconsistentTiling(format!("merged square {} lifts badly", m.survivor))),
        };
        dominos.push((d.squares[m.index - 1], free));
    }
    if !d.balanced {
        return Err(Error::NotInR);
    }
    let (t, _) = d.terminal(cp.deleted_side).ok_or(Error::NotInR)?;
    dominos.push((d.squares[k - 1], t));
    let out = Tiling::new(dominos);
    out.check(disk)?;
    Ok(out)
}

/// Flip of the 2x2 block around `v_{i-1}` for a tiling whose first
/// disrespected wedge is `i`.
fn flip_at(d: &Diagonal, t: &Tiling, i: usize) -> Tiling {
    let before = d.squares[i - 2];
    let after = d.squares[i - 1];
    let p = t.partners();
    let (f1, f2) = (p[&before], p[&after]);
    let dominos = t
        .dominos
        .iter()
        .map(|&(a, b)| {
            if a == before || b == before {
                (before, f2)
            } else if a == after || b == after {
                (after, f1)
            } else {
                (a, b)
            }
        })
        .collect();
    Tiling::new(dominos)
}

/// One level of the matching recursion, recorded for the loner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchStep {
    pub depth: usize,
    /// Squares of the disk at this level, as squares of the input.
    pub squares: Vec<usize>,
    /// Diagonal squares, as squares of the input.
    pub diagonal: Vec<usize>,
    /// Number of tilings of the disk at this level.
    pub tilings: usize,
    /// Number of pieces left by the cut-and-paste.
    pub components: usize,
}

/// The diagonal and cut-and-paste chosen at every level of the recursion,
/// computed once and shared by all tilings of a disk.
#[derive(Clone, Debug)]
pub struct CutTree {
    pub diagonal: Diagonal,
    /// `None` below two squares, where no tiling reaches the surgery.
    pub cut: Option<CutPasteResult>,
    pub children: Vec<CutTree>,
}

impl CutTree {
    pub fn build(disk: &QuadDisk) -> Result<CutTree> {
        let diagonal = canonical_good_diagonal(disk);
        if disk.num_squares() < 2 {
            return Ok(CutTree { diagonal, cut: None, children: Vec::new() });
        }
        let cut = cut_and_paste(disk, &diagonal)?;
        let children = cut.components.iter().map(CutTree::build).collect::<Result<_>>()?;
        Ok(CutTree { diagonal, cut: Some(cut), children })
    }
}

/// Image of a tiling under the matching, or `None` for the loner.
pub fn rho(disk: &QuadDisk, t: &Tiling) -> Result<Option<Tiling>> {
    rho_with(&CutTree::build(disk)?, disk, t)
}

/// [`rho`] against a prebuilt recursion tree of `disk`.
pub fn rho_with(tree: &CutTree, disk: &QuadDisk, t: &Tiling) -> Result<Option<Tiling>> {
    let d = &tree.diagonal;
    let p = t.partner_vec(disk.num_squares());
    let partner = |s: usize| Some(p[s]).filter(|&x| x != usize::MAX);
    if let Some(i) = first_disrespected(d, &partner) {
        return Ok(Some(flip_at(d, t, i)));
    }
    if !respects_all(d, &partner) {
        return Err(Error::InconsistentTiling("tiling neither respects nor disrespects the diagonal".into()));
    }
    let cp = tree
        .cut
        .as_ref()
        .ok_or_else(|| Error::InconsistentTiling("tiling of a disk with fewer than two squares".into()))?;
    let mut parts = project_tiling(d, cp, t)?;
    for c in 0..parts.len() {
        if let Some(image) = rho_with(&tree.children[c], &cp.components[c], &parts[c])? {
            parts[c] = image;
            return lift_tiling(disk, d, cp, &parts).map(Some);
        }
    }
    Ok(None)
}

/// Records the descent of a loner through every level of the recursion.
pub fn loner_trace(disk: &QuadDisk, t: &Tiling) -> Result<Vec<MatchStep>> {
    let origin: Vec<usize> = (0..disk.num_squares()).collect();
    let mut out = Vec::new();
    trace_inner(disk, t, &origin, 0, &mut out)?;
    Ok(out)
}

fn trace_inner(disk: &QuadDisk, t: &Tiling, origin: &[usize], depth: usize, out: &mut Vec<MatchStep>) -> Result<()> {
    let d = canonical_good_diagonal(disk);
    let cp = cut_and_paste(disk, &d)?;
    out.push(MatchStep {
        depth,
        squares: origin.to_vec(),
        diagonal: d.squares.iter().map(|&s| origin[s]).collect(),
        tilings: count_tilings(disk),
        components: cp.components.len(),
    });
    let parts = project_tiling(&d, &cp, t)?;
    for (c, part) in parts.iter().enumerate() {
        let sub: Vec<usize> = cp.origins[c].iter().map(|&s| origin[s]).collect();
        trace_inner(&cp.components[c], part, &sub, depth + 1, out)?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingResult {
    /// Pairs of tiling ids `(even, odd)`, ordered by the smaller id.
    pub pairs: Vec<(usize, usize)>,
    pub loner: Option<usize>,
    /// Image of every tiling id; `None` marks the loner.
    pub images: Vec<Option<usize>>,
    pub parities: Vec<i64>,
    pub loner_trace: Vec<MatchStep>,
}

/// The matching on all tilings of a disk, indexed by [`enumerate_tilings`].
pub fn quasi_perfect_matching(disk: &QuadDisk) -> Result<MatchingResult> {
    let tilings = enumerate_tilings(disk);
    let lab = Labeling::canonical(disk);
    let index: HashMap<&Tiling, usize> = tilings.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut images = Vec::with_capacity(tilings.len());
    let mut parities = Vec::with_capacity(tilings.len());
    let tree = if tilings.is_empty() { None } else { Some(CutTree::build(disk)?) };
    for t in &tilings {
        parities.push(tiling_parity(t, &lab)?);
        let tree = tree.as_ref().expect("built when tilings exist");
        let img = match rho_with(tree, disk, t)? {
            Some(r) => Some(*index.get(&r).ok_or_else(|| Error::InconsistentTiling("image is not a tiling".into()))?),
            None => None,
        };
        images.push(img);
    }
    let mut pairs = Vec::new();
    let mut loner = None;
    for (i, img) in images.iter().enumerate() {
        match *img {
            Some(j) if i < j => pairs.push(if parities[i] == 1 { (i, j) } else { (j, i) }),
            Some(_) => {}
            None => {
                if loner.replace(i).is_some() {
                    return Err(Error::InconsistentTiling("two tilings are left unmatched".into()));
                }
            }
        }
    }
    let loner_trace = match loner {
        Some(i) if disk.num_squares() > 0 => loner_trace(disk, &tilings[i])?,
        _ => Vec::new(),
    };
    Ok(MatchingResult { pairs, loner, images, parities, loner_trace })
}

/// Union of per-piece tilings, as a tiling on the retained original squares.
pub fn union_tiling(cp: &CutPasteResult, parts: &[Tiling]) -> Tiling {
    Tiling::new(
        parts
            .iter()
            .enumerate()
            .flat_map(|(c, t)| t.dominos.iter().map(move |&(a, b)| (cp.origins[c][a], cp.origins[c][b])))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::parse_board;

    #[test]
    fn counts() {
        assert_eq!(count_tilings(parse_board("##\n##").unwrap().disk()), 2);
        assert_eq!(count_tilings(parse_board("###\n###").unwrap().disk()), 3);
        assert_eq!(count_tilings(parse_board("####\n####\n####\n####").unwrap().disk()), 36);
        assert_eq!(count_tilings(parse_board("###").unwrap().disk()), 0);
    }

    #[test]
    fn enumeration_is_sorted() {
        let ts = enumerate_tilings(parse_board("####\n####\n####").unwrap().disk());
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parities_and_signed_counts() {
        let b = parse_board("##\n##").unwrap();
        let lab = Labeling::canonical(b.disk());
        let ts = enumerate_tilings(b.disk());
        assert_eq!(tiling_parity(&ts[0], &lab).unwrap(), -tiling_parity(&ts[1], &lab).unwrap());
        assert_eq!(signed_count(b.disk()), Ok(0));
        assert_eq!(signed_count(parse_board("###\n###").unwrap().disk()).unwrap().abs(), 1);
        assert_eq!(signed_count(parse_board("####\n####\n####\n####").unwrap().disk()), Ok(0));
        assert!(matches!(signed_count(parse_board("###").unwrap().disk()), Err(Error::NonSquareDisk { .. })));
    }

    #[test]
    fn superpositions() {
        let b = parse_board("##\n##").unwrap();
        let ts = enumerate_tilings(b.disk());
        assert!(!compatible(&ts[0], &ts[0]));
        assert!(superposition(&ts[0], &ts[0]).curves.is_empty());
        assert_eq!(superposition(&ts[0], &ts[1]).lengths(), vec![4]);
        assert!(compatible(&ts[0], &ts[1]));
    }

    #[test]
    fn matchings_of_small_boards() {
        let m = quasi_perfect_matching(parse_board("##").unwrap().disk()).unwrap();
        assert!(m.pairs.is_empty());
        assert_eq!(m.loner, Some(0));
        let m = quasi_perfect_matching(parse_board("###\n###").unwrap().disk()).unwrap();
        assert_eq!(m.pairs.len(), 1);
        assert!(m.loner.is_some());
        let m = quasi_perfect_matching(parse_board("####\n####\n####\n####").unwrap().disk()).unwrap();
        assert_eq!(m.pairs.len(), 18);
        assert_eq!(m.loner, None);
    }

    #[test]
    fn two_by_two_partition() {
        let b = parse_board("##\n##").unwrap();
        let d = canonical_good_diagonal(b.disk());
        let ts = enumerate_tilings(b.disk());
        let wp = wedge_partition(&d, &ts);
        // The diagonal is unbalanced, so no tiling respects every wedge.
        assert!(wp.respecting.is_empty());
        assert_eq!(wp.first_disrespected, vec![2, 2]);
    }
}
