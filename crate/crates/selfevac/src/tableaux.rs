//! Young tableaux, RSK, evacuation, and generalized involutions.
//!
//! Semistandard tableaux here follow the strict-rows/weak-columns
//! convention: entries strictly increase along every row and weakly
//! increase down every column (the transpose of the more common textbook
//! convention). The matching insertion procedure bumps the leftmost entry
//! `≥ x`, so that a biword whose bottom row weakly *decreases* within equal
//! top symbols inserts to exactly these tableaux. Standard tableaux are
//! strict in both directions and the two conventions agree.
//!
//! A generalized involution is a biword with a symmetric multiset of
//! columns, weakly increasing top row, and weakly decreasing bottom row
//! within equal top symbols. Internally it is stored as a symmetric `m×m`
//! multiplicity matrix — the unique canonical form — and the biword is a
//! derived view, sorted by top symbol ascending and bottom symbol
//! descending within equal tops.

use std::fmt;

use thiserror::Error;

use crate::involutions::Involution;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("malformed biword: {0}")]
    MalformedBiword(String),
    /// The operation requires a self-evacuated involution.
    #[error("involution is not self-evacuated")]
    NotSelfEvacuated,
}

/// A Ferrers diagram given by its weakly decreasing row lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Self, TableauError> {
        if rows.contains(&0) {
            return Err(TableauError::MalformedTableau("empty row in shape".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::MalformedTableau(
                "row lengths must weakly decrease".into(),
            ));
        }
        Ok(Shape { rows })
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.rows
    }

    /// Column lengths, i.e. the conjugate partition.
    pub fn column_lengths(&self) -> Vec<usize> {
        let cols = self.rows.first().copied().unwrap_or(0);
        (0..cols)
            .map(|c| self.rows.iter().take_while(|&&len| len > c).count())
            .collect()
    }

    pub fn boxes(&self) -> usize {
        self.rows.iter().sum()
    }
}

fn shape_of(rows: &[Vec<usize>]) -> Result<Shape, TableauError> {
    Shape::new(rows.iter().map(Vec::len).collect())
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    let mut first_row = true;
    for row in rows {
        if !first_row {
            writeln!(f)?;
        }
        let mut first = true;
        for e in row {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        first_row = false;
    }
    Ok(())
}

/// A standard Young tableau: each of `1..=n` used once, strictly increasing
/// along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        shape_of(&rows)?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for row in &rows {
            for &e in row {
                if e < 1 || e > n || seen[e - 1] {
                    return Err(TableauError::MalformedTableau(format!(
                        "entries must be 1..={n} each exactly once"
                    )));
                }
                seen[e - 1] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::MalformedTableau(
                    "rows must strictly increase".into(),
                ));
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r][c] <= rows[r - 1][c] {
                    return Err(TableauError::MalformedTableau(
                        "columns must strictly increase".into(),
                    ));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        shape_of(&self.rows).expect("tableau shape is valid")
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// A semistandard tableau over `[m]` in the strict-rows/weak-columns
/// convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
    alphabet: usize,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<usize>>, alphabet: usize) -> Result<Self, TableauError> {
        if alphabet == 0 {
            return Err(TableauError::MalformedTableau(
                "alphabet must be nonempty".into(),
            ));
        }
        shape_of(&rows)?;
        for row in &rows {
            if row.iter().any(|&e| e < 1 || e > alphabet) {
                return Err(TableauError::MalformedTableau(format!(
                    "entries must lie in 1..={alphabet}"
                )));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::MalformedTableau(
                    "rows must strictly increase".into(),
                ));
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r][c] < rows[r - 1][c] {
                    return Err(TableauError::MalformedTableau(
                        "columns must weakly increase".into(),
                    ));
                }
            }
        }
        Ok(SemistandardTableau { rows, alphabet })
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        shape_of(&self.rows).expect("tableau shape is valid")
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// The weakly increasing top word of a biword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Content {
    word: Vec<usize>,
}

impl Content {
    pub fn new(word: Vec<usize>) -> Result<Self, TableauError> {
        if word.windows(2).any(|w| w[0] > w[1]) {
            return Err(TableauError::MalformedBiword(
                "content must be weakly increasing".into(),
            ));
        }
        if word.contains(&0) {
            return Err(TableauError::MalformedBiword(
                "content symbols are 1-based".into(),
            ));
        }
        Ok(Content { word })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `x_i + x_{n+1−i} = m+1` for all `i`.
    pub fn is_symmetric(&self, m: usize) -> bool {
        let n = self.word.len();
        (0..n).all(|i| self.word[i] + self.word[n - 1 - i] == m + 1)
    }

    /// A content fits an involution exactly when it increases strictly at
    /// every rise; at descents both `<` and `=` steps are allowed.
    pub fn is_compatible_with(&self, sigma: &Involution) -> bool {
        if self.word.len() != sigma.n() {
            return false;
        }
        (1..sigma.n()).all(|i| {
            self.word[i - 1] <= self.word[i]
                && (sigma.image(i) >= sigma.image(i + 1) || self.word[i - 1] < self.word[i])
        })
    }
}

/// A generalized involution: a biword over `[m]` whose columns form a
/// symmetric multiset, stored canonically as a symmetric multiplicity
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedInvolution {
    alphabet: usize,
    length: usize,
    matrix: Vec<Vec<usize>>,
}

impl GeneralizedInvolution {
    /// Builds from a symmetric multiplicity matrix; the dimension is the
    /// alphabet size.
    pub fn from_matrix(matrix: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let m = matrix.len();
        if m == 0 {
            return Err(TableauError::MalformedBiword(
                "alphabet must be nonempty".into(),
            ));
        }
        if matrix.iter().any(|row| row.len() != m) {
            return Err(TableauError::MalformedBiword("matrix must be square".into()));
        }
        for i in 0..m {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(TableauError::MalformedBiword(
                        "multiplicity matrix must be symmetric".into(),
                    ));
                }
            }
        }
        let length = matrix.iter().flatten().sum();
        Ok(GeneralizedInvolution {
            alphabet: m,
            length,
            matrix,
        })
    }

    /// Builds from biword columns, which must already satisfy the biword
    /// axioms (and hence be in canonical order).
    pub fn from_pairs(alphabet: usize, pairs: &[(usize, usize)]) -> Result<Self, TableauError> {
        if alphabet == 0 {
            return Err(TableauError::MalformedBiword(
                "alphabet must be nonempty".into(),
            ));
        }
        for &(x, y) in pairs {
            if x < 1 || x > alphabet || y < 1 || y > alphabet {
                return Err(TableauError::MalformedBiword(format!(
                    "symbols must lie in 1..={alphabet}"
                )));
            }
        }
        for w in pairs.windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            if x0 > x1 {
                return Err(TableauError::MalformedBiword(
                    "top row must weakly increase".into(),
                ));
            }
            if x0 == x1 && y0 < y1 {
                return Err(TableauError::MalformedBiword(
                    "bottom row must weakly decrease within equal top symbols".into(),
                ));
            }
        }
        let mut matrix = vec![vec![0usize; alphabet]; alphabet];
        for &(x, y) in pairs {
            matrix[x - 1][y - 1] += 1;
        }
        for i in 0..alphabet {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(TableauError::MalformedBiword(
                        "column multiset must be symmetric".into(),
                    ));
                }
            }
        }
        Ok(GeneralizedInvolution {
            alphabet,
            length: pairs.len(),
            matrix,
        })
    }

    pub fn empty(alphabet: usize) -> Self {
        GeneralizedInvolution::from_matrix(vec![vec![0; alphabet]; alphabet])
            .expect("zero matrix is a valid biword")
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    /// The biword columns in canonical order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let m = self.alphabet;
        let mut pairs = Vec::with_capacity(self.length);
        for x in 1..=m {
            for y in (1..=m).rev() {
                for _ in 0..self.matrix[x - 1][y - 1] {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }

    pub fn content(&self) -> Content {
        let mut word = Vec::with_capacity(self.length);
        for x in 1..=self.alphabet {
            let count: usize = self.matrix[x - 1].iter().sum();
            word.extend(std::iter::repeat_n(x, count));
        }
        Content::new(word).expect("row sums give a weakly increasing word")
    }

    /// The evacuated biword: columns `(m+1−x, m+1−y)` read in reverse.
    /// On the matrix this is the 180° rotation `B[i][j] = A[m+1−i][m+1−j]`.
    pub fn evacuate(&self) -> Self {
        let m = self.alphabet;
        let matrix = (0..m)
            .map(|i| (0..m).map(|j| self.matrix[m - 1 - i][m - 1 - j]).collect())
            .collect();
        GeneralizedInvolution {
            alphabet: m,
            length: self.length,
            matrix,
        }
    }

    /// Whether the biword is fixed by evacuation: every column `(i, j)`
    /// comes with the column `(m+1−j, m+1−i)`.
    ///
    /// Equivalent to the pair of conditions "the content is symmetric and
    /// the polarization is self-evacuated"; debug builds verify that the two
    /// routes agree.
    pub fn is_self_evacuated(&self) -> bool {
        let m = self.alphabet;
        let by_matrix = (0..m)
            .all(|i| (0..m).all(|j| self.matrix[i][j] == self.matrix[m - 1 - j][m - 1 - i]));
        debug_assert_eq!(
            by_matrix,
            self.content().is_symmetric(m) && self.polarize().is_self_evacuated(),
            "matrix symmetry must agree with the content/polarization characterization"
        );
        by_matrix
    }

    /// Ranks the bottom word into an involution on `[n]`.
    ///
    /// Equal bottom symbols are ranked by position, later occurrences lower.
    pub fn polarize(&self) -> Involution {
        let pairs = self.pairs();
        let n = pairs.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            let (ya, yb) = (pairs[a].1, pairs[b].1);
            ya.cmp(&yb).then(b.cmp(&a))
        });
        let mut values = vec![0usize; n];
        for (rank, &idx) in order.iter().enumerate() {
            values[idx] = rank + 1;
        }
        Involution::new(values).expect("polarization of a symmetric biword is an involution")
    }

    /// Maximal runs of consecutive `(a, a)` columns, as `(symbol, run
    /// length)` pairs.
    pub fn repetitions(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        let mut run_symbol: Option<usize> = None;
        for (x, y) in self.pairs() {
            if x == y {
                if run_symbol == Some(x) {
                    runs.last_mut().unwrap().1 += 1;
                } else {
                    runs.push((x, 1));
                }
                run_symbol = Some(x);
            } else {
                run_symbol = None;
            }
        }
        runs
    }
}

impl fmt::Display for GeneralizedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = self.pairs();
        let line = |f: &mut fmt::Formatter<'_>, pick: fn(&(usize, usize)) -> usize| {
            let mut first = true;
            for p in &pairs {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", pick(p))?;
                first = false;
            }
            Ok(())
        };
        line(f, |p| p.0)?;
        writeln!(f)?;
        line(f, |p| p.1)
    }
}

// ---------------------------------------------------------------------------
// Insertion engine
// ---------------------------------------------------------------------------

/// Inserts `value` by bumping the leftmost entry `≥ value` in each row;
/// returns the coordinates of the box added at the end of the bumping path.
fn insert_value(rows: &mut Vec<Vec<usize>>, value: usize) -> (usize, usize) {
    let mut v = value;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![v]);
            return (r, 0);
        }
        let row = &mut rows[r];
        let c = row.partition_point(|&e| e < v);
        if c == row.len() {
            row.push(v);
            return (r, c);
        }
        std::mem::swap(&mut row[c], &mut v);
        r += 1;
    }
}

fn insert_pairs(pairs: &[(usize, usize)]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for &(x, y) in pairs {
        let (r, c) = insert_value(&mut p, y);
        if r == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(c, q[r].len(), "recording box must extend its row");
        q[r].push(x);
    }
    (p, q)
}

/// Reverses [`insert_pairs`]: repeatedly removes the bottom-most box holding
/// the largest recording entry and un-bumps the insertion tableau through
/// the rows above (displacing the rightmost entry `≤ v`). Returns the
/// columns in insertion order.
fn extract_pairs(mut p: Vec<Vec<usize>>, mut q: Vec<Vec<usize>>) -> Vec<(usize, usize)> {
    let total: usize = p.iter().map(Vec::len).sum();
    let mut out = Vec::with_capacity(total);
    for _ in 0..total {
        let mut best: (usize, usize) = (0, 0); // (row, value)
        for (r, row) in q.iter().enumerate() {
            let &last = row.last().expect("no empty rows in a tableau");
            if r == 0 || last >= best.1 {
                best = (r, last);
            }
        }
        let (r, x) = best;
        q[r].pop();
        if q[r].is_empty() {
            debug_assert_eq!(r, q.len() - 1);
            q.pop();
        }
        let mut v = p[r].pop().expect("shapes of P and Q agree");
        if p[r].is_empty() {
            p.pop();
        }
        for upper in (0..r).rev() {
            let row = &mut p[upper];
            let c = row.partition_point(|&e| e <= v);
            std::mem::swap(&mut row[c - 1], &mut v);
        }
        out.push((x, v));
    }
    out.reverse();
    out
}

/// The tableau of an involution under Robinson–Schensted row insertion.
///
/// For involutions the insertion and recording tableaux coincide, so the
/// single tableau determines `sigma`; see [`inverse_rsk`].
pub fn rsk_involution(sigma: &Involution) -> StandardTableau {
    let pairs: Vec<(usize, usize)> = (1..=sigma.n()).map(|i| (i, sigma.image(i))).collect();
    let (p, q) = insert_pairs(&pairs);
    debug_assert_eq!(p, q, "involutions insert to equal P and Q");
    StandardTableau { rows: p }
}

/// The unique involution mapping to `t` under [`rsk_involution`].
pub fn inverse_rsk(t: &StandardTableau) -> Involution {
    let pairs = extract_pairs(t.rows.clone(), t.rows.clone());
    let mut values = vec![0usize; pairs.len()];
    for (x, y) in pairs {
        values[x - 1] = y;
    }
    Involution::new(values).expect("a standard tableau extracts to an involution")
}

/// The semistandard tableau of a generalized involution; insertion and
/// recording tableaux coincide because the column multiset is symmetric.
pub fn rsk_biword(alpha: &GeneralizedInvolution) -> SemistandardTableau {
    let (p, q) = insert_pairs(&alpha.pairs());
    debug_assert_eq!(p, q, "generalized involutions insert to equal P and Q");
    SemistandardTableau {
        rows: p,
        alphabet: alpha.alphabet(),
    }
}

/// The inverse of [`rsk_biword`].
pub fn biword_of_tableau(t: &SemistandardTableau) -> GeneralizedInvolution {
    let pairs = extract_pairs(t.rows.clone(), t.rows.clone());
    GeneralizedInvolution::from_pairs(t.alphabet(), &pairs)
        .expect("a semistandard tableau extracts to a generalized involution")
}

/// Evacuation of a standard tableau by repeated jeu-de-taquin slides.
///
/// Round `j` removes the smallest remaining entry from the top-left box,
/// slides the hole outward (always pulling in the smaller neighbor), deletes
/// the boundary box where the hole comes to rest, and writes `n+1−j` at that
/// position of the result. The same shape comes back, and applying the map
/// twice is the identity.
pub fn evacuate_standard(t: &StandardTableau) -> StandardTableau {
    let n = t.n();
    let mut work = t.rows.clone();
    let mut out: Vec<Vec<usize>> = t.rows.iter().map(|row| vec![0; row.len()]).collect();
    for step in 1..=n {
        let (mut r, mut c) = (0, 0);
        loop {
            let right = if c + 1 < work[r].len() {
                Some(work[r][c + 1])
            } else {
                None
            };
            let below = if r + 1 < work.len() && c < work[r + 1].len() {
                Some(work[r + 1][c])
            } else {
                None
            };
            match (right, below) {
                (None, None) => break,
                (Some(x), None) => {
                    work[r][c] = x;
                    c += 1;
                }
                (None, Some(x)) => {
                    work[r][c] = x;
                    r += 1;
                }
                (Some(a), Some(b)) => {
                    if a < b {
                        work[r][c] = a;
                        c += 1;
                    } else {
                        work[r][c] = b;
                        r += 1;
                    }
                }
            }
        }
        work[r].pop();
        if work[r].is_empty() {
            debug_assert_eq!(r, work.len() - 1);
            work.pop();
        }
        out[r][c] = n + 1 - step;
    }
    StandardTableau { rows: out }
}

// ---------------------------------------------------------------------------
// Enumeration of Gen_m(sigma)
// ---------------------------------------------------------------------------

/// Lazily enumerates the generalized involutions over `[m]` polarizing to
/// `sigma`, one per compatible content, contents in lexicographic order.
///
/// A content is compatible when it is weakly increasing with strict steps at
/// every rise of `sigma`; the biword is then recovered as `y_i = x_{σ(i)}`.
/// With `self_evac_only` set, only symmetric contents are emitted and
/// `sigma` itself must be self-evacuated.
pub fn enumerate_gen(
    sigma: &Involution,
    m: usize,
    self_evac_only: bool,
) -> Result<GenEnumerator, TableauError> {
    assert!(m >= 1, "alphabet must be nonempty");
    if self_evac_only && !sigma.is_self_evacuated() {
        return Err(TableauError::NotSelfEvacuated);
    }
    let n = sigma.n();
    // gaps[i] = 1 exactly at the rises, the minimum step x_{i+1} - x_i.
    let gaps: Vec<usize> = (1..n)
        .map(|i| usize::from(sigma.image(i) < sigma.image(i + 1)))
        .collect();
    let mut first = Vec::with_capacity(n);
    if n > 0 {
        first.push(1usize);
        for &g in &gaps {
            let prev = *first.last().unwrap();
            first.push(prev + g);
        }
    }
    let current = if first.last().copied().unwrap_or(1) <= m {
        Some(first)
    } else {
        None
    };
    Ok(GenEnumerator {
        sigma: sigma.clone(),
        m,
        gaps,
        current,
        self_evac_only,
    })
}

/// See [`enumerate_gen`].
#[derive(Debug)]
pub struct GenEnumerator {
    sigma: Involution,
    m: usize,
    gaps: Vec<usize>,
    current: Option<Vec<usize>>,
    self_evac_only: bool,
}

impl GenEnumerator {
    fn advance(&mut self) {
        let word = match self.current.take() {
            Some(w) => w,
            None => return,
        };
        if word.is_empty() {
            return; // the single empty content has been emitted
        }
        let n = word.len();
        for j in (0..n).rev() {
            let mut next = word[..j].to_vec();
            next.push(word[j] + 1);
            for i in j + 1..n {
                let prev = *next.last().unwrap();
                next.push(prev + self.gaps[i - 1]);
            }
            if *next.last().unwrap() <= self.m {
                self.current = Some(next);
                return;
            }
        }
    }

    fn build(&self, word: &[usize]) -> GeneralizedInvolution {
        let pairs: Vec<(usize, usize)> = (1..=word.len())
            .map(|i| (word[i - 1], word[self.sigma.image(i) - 1]))
            .collect();
        GeneralizedInvolution::from_pairs(self.m, &pairs)
            .expect("compatible contents produce valid biwords")
    }
}

impl Iterator for GenEnumerator {
    type Item = GeneralizedInvolution;

    fn next(&mut self) -> Option<GeneralizedInvolution> {
        loop {
            let word = self.current.clone()?;
            let keep = !self.self_evac_only
                || Content::new(word.clone())
                    .expect("generated contents are weakly increasing")
                    .is_symmetric(self.m);
            self.advance();
            if keep {
                return Some(self.build(&word));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::{enumerate_involutions, InvolutionFilter};

    fn inv(s: &str) -> Involution {
        s.parse().unwrap()
    }

    fn staircase_biword() -> GeneralizedInvolution {
        let mut matrix = vec![vec![0usize; 4]; 4];
        for a in 0..4 {
            matrix[a][a] = a + 1;
        }
        GeneralizedInvolution::from_matrix(matrix).unwrap()
    }

    #[test]
    fn rsk_of_degenerate_involutions() {
        let t = rsk_involution(&Involution::identity(3));
        assert_eq!(t.rows(), &[vec![1, 2, 3]]);

        let t = rsk_involution(&inv("21"));
        assert_eq!(t.rows(), &[vec![1], vec![2]]);

        let t = rsk_involution(&Involution::identity(0));
        assert_eq!(t.n(), 0);
        assert_eq!(inverse_rsk(&t), Involution::identity(0));
    }

    #[test]
    fn rsk_round_trip_exhaustive() {
        for sigma in enumerate_involutions(6, InvolutionFilter::All) {
            let t = rsk_involution(&sigma);
            assert_eq!(inverse_rsk(&t), sigma);
        }
    }

    #[test]
    fn rsk_is_injective_on_small_sizes() {
        let tableaux: std::collections::BTreeSet<Vec<Vec<usize>>> =
            enumerate_involutions(6, InvolutionFilter::All)
                .map(|s| rsk_involution(&s).rows().to_vec())
                .collect();
        assert_eq!(tableaux.len(), 76);
    }

    #[test]
    fn tableau_construction_validates() {
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(matches!(
            StandardTableau::new(vec![vec![1, 3], vec![2, 2]]),
            Err(TableauError::MalformedTableau(_))
        ));
        assert!(matches!(
            StandardTableau::new(vec![vec![2, 1], vec![3, 4]]),
            Err(TableauError::MalformedTableau(_))
        ));
        assert!(matches!(
            StandardTableau::new(vec![vec![1], vec![2, 3]]),
            Err(TableauError::MalformedTableau(_))
        ));
        // Weak columns are fine semistandard, rejected standard.
        assert!(SemistandardTableau::new(vec![vec![1, 2], vec![1, 2]], 2).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![1, 2]]).is_err());
    }

    #[test]
    fn evacuation_of_published_pair() {
        let t = rsk_involution(&inv("32146578"));
        let expected = rsk_involution(&inv("12435876"));
        assert_eq!(evacuate_standard(&t), expected);
    }

    #[test]
    fn evacuation_is_an_involution_exhaustive() {
        for sigma in enumerate_involutions(6, InvolutionFilter::All) {
            let t = rsk_involution(&sigma);
            let ev = evacuate_standard(&t);
            assert_eq!(ev.shape().row_lengths(), t.shape().row_lengths());
            assert_eq!(evacuate_standard(&ev), t);
            assert_eq!(ev, rsk_involution(&sigma.complement_conjugate()));
        }
    }

    #[test]
    fn staircase_tableau_and_its_evacuation() {
        let alpha = staircase_biword();
        assert_eq!(
            alpha.content().word(),
            &[1, 2, 2, 3, 3, 3, 4, 4, 4, 4],
            "content of the staircase biword"
        );
        let s = rsk_biword(&alpha);
        assert_eq!(
            s.rows(),
            &[vec![1, 2, 3, 4], vec![2, 3, 4], vec![3, 4], vec![4]]
        );
        assert_eq!(s.to_string(), "1 2 3 4\n2 3 4\n3 4\n4");

        let ev = alpha.evacuate();
        assert_eq!(ev.content().word(), &[1, 1, 1, 1, 2, 2, 2, 3, 3, 4]);
        let ev_tableau = rsk_biword(&ev);
        assert_eq!(
            ev_tableau.rows(),
            &[vec![1, 2, 3, 4], vec![1, 2, 3], vec![1, 2], vec![1]]
        );
        assert_eq!(alpha.evacuate().evacuate(), alpha);
    }

    #[test]
    fn biword_round_trip_small() {
        for alpha in [
            staircase_biword(),
            GeneralizedInvolution::from_pairs(2, &[(1, 2), (2, 1)]).unwrap(),
            GeneralizedInvolution::from_pairs(1, &[(1, 1)]).unwrap(),
            GeneralizedInvolution::empty(3),
        ] {
            assert_eq!(biword_of_tableau(&rsk_biword(&alpha)), alpha);
        }
    }

    #[test]
    fn single_box_biword() {
        let alpha = GeneralizedInvolution::from_pairs(3, &[(2, 2)]).unwrap();
        let t = rsk_biword(&alpha);
        assert_eq!(t.rows(), &[vec![2]]);
    }

    #[test]
    fn polarization_of_published_biwords() {
        let alpha = GeneralizedInvolution::from_pairs(
            6,
            &[
                (1, 4),
                (1, 3),
                (2, 2),
                (3, 1),
                (4, 6),
                (4, 4),
                (4, 1),
                (6, 4),
            ],
        )
        .unwrap();
        assert_eq!(alpha.polarize(), inv("74328615"));

        let beta = GeneralizedInvolution::from_pairs(
            6,
            &[
                (1, 5),
                (1, 3),
                (1, 1),
                (3, 1),
                (4, 6),
                (4, 4),
                (5, 1),
                (6, 4),
            ],
        )
        .unwrap();
        assert_eq!(beta.polarize(), alpha.polarize());
    }

    #[test]
    fn polarization_commutes_with_evacuation_on_staircase() {
        let alpha = staircase_biword();
        let sigma1 = alpha.polarize();
        let sigma2 = alpha.evacuate().polarize();
        assert_eq!(sigma1.values(), &[1, 3, 2, 6, 5, 4, 10, 9, 8, 7]);
        assert_eq!(sigma2.values(), &[4, 3, 2, 1, 7, 6, 5, 9, 8, 10]);
        assert_eq!(sigma1.complement_conjugate(), sigma2);
    }

    #[test]
    fn biword_self_evacuation_checks() {
        let ones = GeneralizedInvolution::from_pairs(1, &[(1, 1), (1, 1)]).unwrap();
        assert!(ones.is_self_evacuated());

        assert!(!staircase_biword().is_self_evacuated());

        let anti = GeneralizedInvolution::from_pairs(2, &[(1, 2), (2, 1)]).unwrap();
        assert!(anti.is_self_evacuated());
        assert_eq!(anti.evacuate(), anti);
    }

    #[test]
    fn repetition_runs() {
        assert_eq!(
            staircase_biword().repetitions(),
            vec![(1, 1), (2, 2), (3, 3), (4, 4)]
        );
        let anti = GeneralizedInvolution::from_pairs(2, &[(1, 2), (2, 1)]).unwrap();
        assert!(anti.repetitions().is_empty());
        let quad = GeneralizedInvolution::from_pairs(1, &[(1, 1); 4]).unwrap();
        assert_eq!(quad.repetitions(), vec![(1, 4)]);
    }

    #[test]
    fn biword_axioms_are_enforced() {
        assert!(matches!(
            GeneralizedInvolution::from_pairs(3, &[(2, 2), (1, 1)]),
            Err(TableauError::MalformedBiword(_))
        ));
        assert!(matches!(
            GeneralizedInvolution::from_pairs(3, &[(1, 1), (1, 2)]),
            Err(TableauError::MalformedBiword(_))
        ));
        assert!(matches!(
            GeneralizedInvolution::from_pairs(3, &[(1, 2)]),
            Err(TableauError::MalformedBiword(_))
        ));
        assert!(matches!(
            GeneralizedInvolution::from_matrix(vec![vec![0, 1], vec![0, 0]]),
            Err(TableauError::MalformedBiword(_))
        ));
    }

    #[test]
    fn gen_enumeration_counts() {
        let count = |sigma: &Involution, m: usize| enumerate_gen(sigma, m, false).unwrap().count();
        assert_eq!(count(&Involution::identity(1), 3), 3);
        assert_eq!(count(&inv("21"), 3), 6);
        assert_eq!(count(&Involution::identity(2), 3), 3);
        assert_eq!(count(&Involution::identity(0), 5), 1);
    }

    #[test]
    fn gen_enumeration_emits_biwords_of_sigma() {
        for sigma in enumerate_involutions(5, InvolutionFilter::All) {
            let mut contents = std::collections::BTreeSet::new();
            for alpha in enumerate_gen(&sigma, 4, false).unwrap() {
                assert_eq!(alpha.polarize(), sigma);
                assert!(alpha.content().is_compatible_with(&sigma));
                assert!(contents.insert(alpha.content().word().to_vec()));
            }
        }
    }

    #[test]
    fn gen_enumeration_self_evacuated_slice() {
        assert!(matches!(
            enumerate_gen(&inv("132"), 2, true),
            Err(TableauError::NotSelfEvacuated)
        ));
        // For a self-evacuated sigma, symmetric contents are counted by
        // C(k + floor((m-1-t)/2), floor((m-1-t)/2)).
        let sigma = inv("21");
        let symmetric: Vec<_> = enumerate_gen(&sigma, 3, true).unwrap().collect();
        assert_eq!(symmetric.len(), 2);
        for alpha in &symmetric {
            assert!(alpha.is_self_evacuated());
        }
        assert_eq!(enumerate_gen(&sigma, 2, true).unwrap().count(), 1);
    }

    #[test]
    fn semistandard_tableaux_are_exactly_the_rsk_images() {
        // Brute-force every semistandard filling with at most 4 boxes over
        // [3] and check the correspondence round-trips from the tableau side.
        let mut count = 0usize;
        for rows in all_semistandard(4, 3) {
            let t = SemistandardTableau::new(rows, 3).unwrap();
            let alpha = biword_of_tableau(&t);
            assert_eq!(rsk_biword(&alpha), t);
            count += 1;
        }
        assert!(count > 20, "enumeration should not be vacuous: {count}");
    }

    /// All semistandard tableaux (strict rows, weak columns) with up to
    /// `max_boxes` boxes over `[m]`, by brute force over shapes and
    /// fillings.
    fn all_semistandard(max_boxes: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
        fn partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=n.min(max_part)).rev() {
                for mut rest in partitions(n - first, first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }

        let mut out = vec![vec![]];
        for boxes in 1..=max_boxes {
            for shape in partitions(boxes, boxes) {
                let mut filling = vec![1usize; boxes];
                loop {
                    let mut rows = Vec::new();
                    let mut taken = 0;
                    for &len in &shape {
                        rows.push(filling[taken..taken + len].to_vec());
                        taken += len;
                    }
                    if SemistandardTableau::new(rows.clone(), m).is_ok() {
                        out.push(rows);
                    }
                    // odometer over [m]^boxes
                    let mut i = boxes;
                    while i > 0 && filling[i - 1] == m {
                        filling[i - 1] = 1;
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    filling[i - 1] += 1;
                }
            }
        }
        out
    }
}
