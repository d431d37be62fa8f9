//! Exact `L D U` factorization of black-to-white matrices with all entries in
//! `{-1, 0, 1}`, built by recursive cut-and-paste.
//!
//! `L` is lower triangular and `U` upper triangular, both with diagonal
//! entries `±1`; `D` is an identity matrix padded with zero rows and columns.

use ndarray::{s, Array2};
use serde::Serialize;

use crate::adjacency::{adjacency_unchecked, black_to_white, cutpaste_labeling, BWMatrix, CutLabeling, Labeling};
use crate::cutpaste::{cut_and_paste, CutPasteResult};
use crate::diagonals::{canonical_good_diagonal, Diagonal, Side};
use crate::disk::{Color, QuadDisk};
use crate::error::{Error, Result};

/// A rectangular 0/1 matrix with at most one 1 in each row and column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectiveIdentity {
    pub rows: usize,
    pub cols: usize,
    /// Positions of the ones, sorted.
    pub ones: Vec<(usize, usize)>,
}

impl DefectiveIdentity {
    /// `I_{rows, cols}`: ones at `(i, i)`.
    pub fn identity(rows: usize, cols: usize) -> DefectiveIdentity {
        DefectiveIdentity { rows, cols, ones: (0..rows.min(cols)).map(|i| (i, i)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.ones.len()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && self.ones.len() == self.rows && self.ones.iter().all(|&(i, j)| i == j)
    }

    pub fn to_matrix(&self) -> Array2<i64> {
        let mut m = Array2::zeros((self.rows, self.cols));
        for &(i, j) in &self.ones {
            m[[i, j]] = 1;
        }
        m
    }

    pub fn transposed(&self) -> DefectiveIdentity {
        let mut ones: Vec<_> = self.ones.iter().map(|&(i, j)| (j, i)).collect();
        ones.sort_unstable();
        DefectiveIdentity { rows: self.cols, cols: self.rows, ones }
    }

    /// Column holding the 1 of each row, if any.
    fn row_targets(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.rows];
        for &(i, j) in &self.ones {
            out[i] = Some(j);
        }
        out
    }
}

/// One level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub depth: usize,
    /// Squares of the disk factored at this level, as squares of the input.
    pub squares: Vec<usize>,
    /// Diagonal squares, as squares of the input.
    pub diagonal: Vec<usize>,
    pub length: usize,
    pub balanced: bool,
    /// The diagonal squares were white and the level was factored transposed.
    pub transposed: bool,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LduFactorization {
    pub l: Array2<i64>,
    pub d: DefectiveIdentity,
    pub u: Array2<i64>,
    pub labeling: Labeling,
    pub trace: Vec<TraceStep>,
}

impl LduFactorization {
    pub fn product(&self) -> Array2<i64> {
        self.l.dot(&self.d.to_matrix()).dot(&self.u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Eliminate columns using `M11 N = M12`.
    Column,
    /// Eliminate rows using `N M11 = M21`.
    Row,
}

/// Three factors whose product is the input matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFactors {
    pub left: Array2<i64>,
    pub middle: Array2<i64>,
    pub right: Array2<i64>,
}

fn defective(rows: usize, cols: usize) -> Array2<i64> {
    DefectiveIdentity::identity(rows, cols).to_matrix()
}

fn diag(entries: &[i64]) -> Array2<i64> {
    let mut m = Array2::zeros((entries.len(), entries.len()));
    for (i, &x) in entries.iter().enumerate() {
        m[[i, i]] = x;
    }
    m
}

fn block(tl: &Array2<i64>, tr: &Array2<i64>, bl: &Array2<i64>, br: &Array2<i64>) -> Array2<i64> {
    let (r0, c0) = tl.dim();
    let mut m = Array2::zeros((r0 + bl.nrows(), c0 + tr.ncols()));
    m.slice_mut(s![..r0, ..c0]).assign(tl);
    m.slice_mut(s![..r0, c0..]).assign(tr);
    m.slice_mut(s![r0.., ..c0]).assign(bl);
    m.slice_mut(s![r0.., c0..]).assign(br);
    m
}

/// Block diagonal matrix from square or rectangular blocks.
pub fn block_diagonal(blocks: &[Array2<i64>]) -> Array2<i64> {
    let rows = blocks.iter().map(|b| b.nrows()).sum();
    let cols = blocks.iter().map(|b| b.ncols()).sum();
    let mut m = Array2::zeros((rows, cols));
    let (mut r, mut c) = (0, 0);
    for b in blocks {
        m.slice_mut(s![r..r + b.nrows(), c..c + b.ncols()]).assign(b);
        r += b.nrows();
        c += b.ncols();
    }
    m
}

/// Eliminates the off-diagonal block of `m` using a witness `N`.
///
/// `m` is split after `n` rows and `n_prime` columns. In column orientation
/// (`n_prime <= n`) the witness satisfies `M11 N = M12` and
/// `m = [M11 I, 0; M21 I, I] [I, 0; 0, M22 - M21 N] [I, N; 0, I]`.
/// In row orientation (`n_prime >= n`) it satisfies `N M11 = M21` and
/// `m = [I, 0; N, I] [I, 0; 0, M22 - N M12] [I M11, I M12; 0, I]`.
pub fn block_eliminate(
    m: &Array2<i64>,
    n: usize,
    n_prime: usize,
    witness: &Array2<i64>,
    orientation: Orientation,
) -> Result<BlockFactors> {
    let (rows, cols) = m.dim();
    if n > rows || n_prime > cols {
        return Err(Error::WitnessInvalid);
    }
    let (mm, mp) = (rows - n, cols - n_prime);
    let m11 = m.slice(s![..n, ..n_prime]).to_owned();
    let m12 = m.slice(s![..n, n_prime..]).to_owned();
    let m21 = m.slice(s![n.., ..n_prime]).to_owned();
    let m22 = m.slice(s![n.., n_prime..]).to_owned();
    match orientation {
        Orientation::Column => {
            if n_prime > n || witness.dim() != (n_prime, mp) || m11.dot(witness) != m12 {
                return Err(Error::WitnessInvalid);
            }
            let pad = defective(n_prime, n);
            let left = block(&m11.dot(&pad), &Array2::zeros((n, mm)), &m21.dot(&pad), &Array2::eye(mm));
            let middle = block(
                &defective(n, n_prime),
                &Array2::zeros((n, mp)),
                &Array2::zeros((mm, n_prime)),
                &(&m22 - &m21.dot(witness)),
            );
            let right = block(&Array2::eye(n_prime), witness, &Array2::zeros((mp, n_prime)), &Array2::eye(mp));
            Ok(BlockFactors { left, middle, right })
        }
        Orientation::Row => {
            if n_prime < n || witness.dim() != (mm, n) || witness.dot(&m11) != m21 {
                return Err(Error::WitnessInvalid);
            }
            let pad = defective(n_prime, n);
            let left = block(&Array2::eye(n), &Array2::zeros((n, mm)), witness, &Array2::eye(mm));
            let middle = block(
                &defective(n, n_prime),
                &Array2::zeros((n, mp)),
                &Array2::zeros((mm, n_prime)),
                &(&m22 - &witness.dot(&m12)),
            );
            let right = block(&pad.dot(&m11), &pad.dot(&m12), &Array2::zeros((mp, n_prime)), &Array2::eye(mp));
            Ok(BlockFactors { left, middle, right })
        }
    }
}

/// Factors of one cut-and-paste step for a diagonal of black squares:
/// `B = [L, 0; X, S_rows] [I, 0; 0, B'] [I, Y; 0, S_cols]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFactors {
    pub l: Array2<i64>,
    pub x: Array2<i64>,
    pub y: Array2<i64>,
    pub u: Array2<i64>,
    /// Signs of the retained black squares: `-1` right of the diagonal.
    pub row_signs: Vec<i64>,
    /// Signs of the retained white squares: `-1` right of the diagonal.
    pub col_signs: Vec<i64>,
    pub witness: Array2<i64>,
    /// `M22 - M21 N` for `M = S_b B S_w`; equals the adjacency of the pieces.
    pub middle: Array2<i64>,
    /// The full matrix under the removed-first labeling.
    pub matrix: BWMatrix,
}

impl StepFactors {
    pub fn left(&self) -> Array2<i64> {
        let k = self.l.nrows();
        block(&self.l, &Array2::zeros((k, self.row_signs.len())), &self.x, &diag(&self.row_signs))
    }

    pub fn right(&self) -> Array2<i64> {
        let k = self.u.nrows();
        block(&self.u, &self.y, &Array2::zeros((self.col_signs.len(), k)), &diag(&self.col_signs))
    }
}

fn sign_of(side: Option<Side>) -> i64 {
    if side == Some(Side::Right) {
        -1
    } else {
        1
    }
}

/// One inductive step. The diagonal must consist of black squares; `inner`
/// is the adjacency of the pieces under the labeling used in `cl`.
pub fn ldu_step(
    disk: &QuadDisk,
    d: &Diagonal,
    cp: &CutPasteResult,
    cl: &CutLabeling,
    inner: &Array2<i64>,
) -> Result<StepFactors> {
    if disk.color(d.squares[0]) != Color::Black {
        return Err(Error::BadLabeling("black diagonal"));
    }
    let matrix = black_to_white(disk, &cl.labeling)?;
    let (k, kw) = (cl.removed_rows, cl.removed_cols);
    let rows = &cl.labeling.rows[k..];
    let cols = &cl.labeling.cols[kw..];
    let row_signs: Vec<i64> = rows.iter().map(|&s| sign_of(cp.side_of[s])).collect();
    let col_signs: Vec<i64> = cols.iter().map(|&s| sign_of(cp.side_of[s])).collect();
    let full_rows: Vec<i64> = std::iter::repeat_n(1, k).chain(row_signs.iter().copied()).collect();
    let full_cols: Vec<i64> = std::iter::repeat_n(1, kw).chain(col_signs.iter().copied()).collect();
    let m = diag(&full_rows).dot(&matrix.entries).dot(&diag(&full_cols));

    let mut witness = Array2::zeros((kw, cols.len()));
    for (i, &p) in cl.survivor_positions.iter().enumerate() {
        witness[[i, p - kw]] = col_signs[p - kw];
    }
    let f = block_eliminate(&m, k, kw, &witness, Orientation::Column)?;
    let middle = f.middle.slice(s![k.., kw..]).to_owned();
    if middle != *inner {
        return Err(Error::MiddleMismatch);
    }
    let mut l = f.left.slice(s![..k, ..k]).to_owned();
    if !d.balanced {
        l[[k - 1, k - 1]] = 1;
    }
    let x = diag(&row_signs).dot(&f.left.slice(s![k.., ..k]));
    let y = witness.dot(&diag(&col_signs));
    let step = StepFactors { l, x, y, u: Array2::eye(kw), row_signs, col_signs, witness, middle, matrix };
    for m in [&step.l, &step.x, &step.y] {
        if let Some(&bad) = m.iter().find(|v| v.abs() > 1) {
            return Err(Error::EntryOutOfRange(bad));
        }
    }
    Ok(step)
}

/// Blocks of the elimination `B = [I, 0; X, I] [B11, 0; 0, B~] [I, Y; 0, I]`
/// for a balanced step, where `B11` is unimodular lower bidiagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurBlocks {
    pub x: Array2<i64>,
    pub y: Array2<i64>,
    pub complement: Array2<i64>,
}

/// Schur complement form of a matrix whose leading `k x k` block is lower
/// triangular with unit diagonal. Returns `None` otherwise.
pub fn schur_blocks(b: &Array2<i64>, k: usize) -> Option<SchurBlocks> {
    let b11 = b.slice(s![..k, ..k]).to_owned();
    if (0..k).any(|i| b11[[i, i]] != 1 || (i + 1..k).any(|j| b11[[i, j]] != 0)) {
        return None;
    }
    // Inverse of a unit lower triangular matrix by forward substitution.
    let mut inv = Array2::<i64>::zeros((k, k));
    for c in 0..k {
        for i in 0..k {
            let mut v = if i == c { 1 } else { 0 };
            for j in 0..i {
                v -= b11[[i, j]] * inv[[j, c]];
            }
            inv[[i, c]] = v;
        }
    }
    let b12 = b.slice(s![..k, k..]);
    let b21 = b.slice(s![k.., ..k]);
    let b22 = b.slice(s![k.., k..]);
    let x = b21.dot(&inv);
    let y = inv.dot(&b12);
    let complement = &b22 - &x.dot(&b12);
    Some(SchurBlocks { x, y, complement })
}

struct Factor {
    l: Array2<i64>,
    d: DefectiveIdentity,
    u: Array2<i64>,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Factor {
    fn transposed(self) -> Factor {
        Factor {
            l: self.u.t().to_owned(),
            d: self.d.transposed(),
            u: self.l.t().to_owned(),
            rows: self.cols,
            cols: self.rows,
        }
    }
}

fn factor(disk: &QuadDisk, origin: &[usize], depth: usize, trace: &mut Vec<TraceStep>) -> Result<Factor> {
    if disk.num_squares() == 1 {
        let one = Array2::eye(1);
        let none = Array2::zeros((0, 0));
        return Ok(match disk.color(0) {
            Color::Black => {
                Factor { l: one, d: DefectiveIdentity::identity(1, 0), u: none, rows: vec![0], cols: vec![] }
            }
            Color::White => {
                Factor { l: none, d: DefectiveIdentity::identity(0, 1), u: one, rows: vec![], cols: vec![0] }
            }
        });
    }
    let d = canonical_good_diagonal(disk);
    if disk.color(d.squares[0]) == Color::White {
        let swapped = disk.with_swapped_colors();
        return Ok(factor_black(&swapped, &d, origin, depth, trace, true)?.transposed());
    }
    factor_black(disk, &d, origin, depth, trace, false)
}

fn factor_black(
    disk: &QuadDisk,
    d: &Diagonal,
    origin: &[usize],
    depth: usize,
    trace: &mut Vec<TraceStep>,
    transposed: bool,
) -> Result<Factor> {
    let cp = cut_and_paste(disk, d)?;
    trace.push(TraceStep {
        depth,
        squares: origin.to_vec(),
        diagonal: d.squares.iter().map(|&s| origin[s]).collect(),
        length: d.len(),
        balanced: d.balanced,
        transposed,
        components: cp.components.len(),
    });
    let mut subs = Vec::with_capacity(cp.components.len());
    for (c, comp) in cp.components.iter().enumerate() {
        let sub_origin: Vec<usize> = cp.origins[c].iter().map(|&s| origin[s]).collect();
        subs.push(factor(comp, &sub_origin, depth + 1, trace)?);
    }
    let inner: Vec<Labeling> = subs.iter().map(|f| Labeling { rows: f.rows.clone(), cols: f.cols.clone() }).collect();
    let cl = cutpaste_labeling(disk, d, &cp, &inner)?;
    let inner_matrix = block_diagonal(
        &cp.components.iter().zip(&inner).map(|(c, lab)| adjacency_unchecked(c, lab).entries).collect::<Vec<_>>(),
    );
    let step = ldu_step(disk, d, &cp, &cl, &inner_matrix)?;

    let (k, kw) = (cl.removed_rows, cl.removed_cols);
    let l_inner = block_diagonal(&subs.iter().map(|f| f.l.clone()).collect::<Vec<_>>());
    let u_inner = block_diagonal(&subs.iter().map(|f| f.u.clone()).collect::<Vec<_>>());
    let b = cl.labeling.rows.len();
    let w = cl.labeling.cols.len();
    let l = block(&step.l, &Array2::zeros((k, b - k)), &step.x, &diag(&step.row_signs).dot(&l_inner));
    let u = block(&step.u, &step.y, &Array2::zeros((w - kw, kw)), &u_inner.dot(&diag(&step.col_signs)));
    let mut ones: Vec<(usize, usize)> = (0..k.min(kw)).map(|i| (i, i)).collect();
    let (mut r, mut c) = (k, kw);
    for f in &subs {
        ones.extend(f.d.ones.iter().map(|&(i, j)| (i + r, j + c)));
        r += f.d.rows;
        c += f.d.cols;
    }
    Ok(Factor { l, d: DefectiveIdentity { rows: b, cols: w, ones }, u, rows: cl.labeling.rows, cols: cl.labeling.cols })
}

/// Factors the black-to-white matrix of a disk with at least two squares.
///
/// The product `L D U` equals the matrix under the returned labeling, which
/// is built recursively: squares removed by each cut-and-paste come first.
pub fn ldu_factorize(disk: &QuadDisk) -> Result<LduFactorization> {
    if disk.num_squares() < 2 {
        return Err(Error::SingleSquare);
    }
    let origin: Vec<usize> = (0..disk.num_squares()).collect();
    let mut trace = Vec::new();
    let f = factor(disk, &origin, 0, &mut trace)?;
    let labeling = Labeling { rows: f.rows, cols: f.cols };
    let out = LduFactorization { l: f.l, d: f.d, u: f.u, labeling, trace };
    verify(disk, &out)?;
    Ok(out)
}

/// Checks shape, triangularity, entry bounds and the product identity.
pub fn verify(disk: &QuadDisk, f: &LduFactorization) -> Result<()> {
    for m in [&f.l, &f.u] {
        if let Some(&bad) = m.iter().find(|v| v.abs() > 1) {
            return Err(Error::EntryOutOfRange(bad));
        }
        for i in 0..m.nrows() {
            if m[[i, i]].abs() != 1 {
                return Err(Error::ProductMismatch);
            }
        }
    }
    let lower = (0..f.l.nrows()).all(|i| (i + 1..f.l.ncols()).all(|j| f.l[[i, j]] == 0));
    let upper = (0..f.u.nrows()).all(|i| (0..i).all(|j| f.u[[i, j]] == 0));
    if !lower || !upper {
        return Err(Error::ProductMismatch);
    }
    let b = black_to_white(disk, &f.labeling)?;
    if f.product() != b.entries {
        return Err(Error::ProductMismatch);
    }
    Ok(())
}

/// Rank, and determinant when the matrix is square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankDet {
    pub rank: usize,
    pub det: Option<i64>,
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
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
    sign
}

/// Sign relating a labeling to the canonical one (squares of each color in
/// increasing order).
pub fn labeling_sign(labeling: &Labeling) -> i64 {
    let rank = |order: &[usize]| {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        order.iter().map(|s| sorted.binary_search(s).expect("present")).collect::<Vec<_>>()
    };
    permutation_sign(&rank(&labeling.rows)) * permutation_sign(&rank(&labeling.cols))
}

pub fn rank(f: &LduFactorization) -> usize {
    f.d.rank()
}

/// Determinant of the matrix under the canonical labeling.
pub fn det(f: &LduFactorization) -> Result<i64> {
    if f.d.rows != f.d.cols {
        return Err(Error::NonSquare { rows: f.d.rows, cols: f.d.cols });
    }
    if !f.d.is_identity() {
        return Ok(0);
    }
    let dl: i64 = (0..f.l.nrows()).map(|i| f.l[[i, i]]).product();
    let du: i64 = (0..f.u.nrows()).map(|i| f.u[[i, i]]).product();
    Ok(dl * du * labeling_sign(&f.labeling))
}

pub fn rank_det(f: &LduFactorization) -> RankDet {
    RankDet { rank: rank(f), det: det(f).ok() }
}

/// Solves `B x = v` over the integers using the factorization.
///
/// `b` may use any labeling; `v` follows its rows and the solution its
/// columns. Free coordinates are set to 0.
pub fn solve_integer(f: &LduFactorization, b: &BWMatrix, v: &[i64]) -> Result<Vec<i64>> {
    if v.len() != b.rows() {
        return Err(Error::Usage(format!("right-hand side has {} entries, expected {}", v.len(), b.rows())));
    }
    let max_square = b.row_squares.iter().chain(&b.col_squares).copied().max().map_or(0, |m| m + 1);
    let mut row_pos = vec![usize::MAX; max_square];
    for (i, &s) in b.row_squares.iter().enumerate() {
        row_pos[s] = i;
    }
    let rhs: Vec<i128> = f
        .labeling
        .rows
        .iter()
        .map(|&s| row_pos.get(s).copied().filter(|&p| p != usize::MAX).map(|p| v[p] as i128))
        .collect::<Option<_>>()
        .ok_or(Error::BadLabeling("black"))?;
    let n = rhs.len();
    let mut t = vec![0i128; n];
    for i in 0..n {
        let mut acc = rhs[i];
        for j in 0..i {
            acc -= f.l[[i, j]] as i128 * t[j];
        }
        t[i] = acc * f.l[[i, i]] as i128;
    }
    let w = f.u.nrows();
    let mut z = vec![0i128; w];
    for (i, target) in f.d.row_targets().into_iter().enumerate() {
        match target {
            Some(j) => z[j] = t[i],
            None if t[i] != 0 => return Err(Error::NoRationalSolution),
            None => {}
        }
    }
    let mut y = vec![0i128; w];
    for i in (0..w).rev() {
        let mut acc = z[i];
        for j in i + 1..w {
            acc -= f.u[[i, j]] as i128 * y[j];
        }
        y[i] = acc * f.u[[i, i]] as i128;
    }
    let mut x = vec![0i64; b.cols()];
    for (j, &s) in f.labeling.cols.iter().enumerate() {
        let p = b.col_squares.iter().position(|&c| c == s).ok_or(Error::BadLabeling("white"))?;
        x[p] = i64::try_from(y[j]).map_err(|_| Error::EntryOutOfRange(i64::MAX))?;
    }
    let check = b.entries.dot(&ndarray::Array1::from(x.clone()));
    if check.iter().zip(v).any(|(a, b)| a != b) {
        return Err(Error::ProductMismatch);
    }
    Ok(x)
}

/// Factors a disk and solves `B x = v` under its canonical labeling.
pub fn solve_disk(disk: &QuadDisk, v: &[i64]) -> Result<Vec<i64>> {
    let f = ldu_factorize(disk)?;
    let b = black_to_white(disk, &Labeling::canonical(disk))?;
    solve_integer(&f, &b, v)
}

/// Canonical adjacency matrix of a disk.
pub fn canonical_matrix(disk: &QuadDisk) -> BWMatrix {
    adjacency_unchecked(disk, &Labeling::canonical(disk))
}
