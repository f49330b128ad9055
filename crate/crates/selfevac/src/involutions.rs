//! Involutions of the symmetric group in one-line notation.
//!
//! Everything here is 1-based: an involution on `[n] = {1, …, n}` is stored
//! as the value sequence `σ(1), …, σ(n)`. The complement map `ψ` sends `i`
//! to `n+1−i`; an involution is *self-evacuated* when it commutes with `ψ`,
//! i.e. `σ(i) + σ(n+1−i) = n+1` for all `i`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors from involution construction, parsing, and `ψ`-operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    /// The value sequence is not a permutation of `1..=n`.
    #[error("values are not a permutation of 1..={0}")]
    NotAPermutation(usize),
    /// The permutation is not its own inverse.
    #[error("permutation is not self-inverse")]
    NotSelfInverse,
    /// The operation requires `σ(i) + σ(n+1−i) = n+1` to hold for all `i`.
    #[error("involution is not self-evacuated")]
    NotSelfEvacuated,
    /// The input text does not denote an involution.
    #[error("cannot parse involution: {0}")]
    Parse(String),
}

/// A self-inverse permutation of `{1, …, n}` in one-line notation.
///
/// The canonical text form is a comma-free digit string for `n ≤ 9`
/// (`"2143"`) and a comma-separated list otherwise (`"1,2,11,…"`); both
/// [`fmt::Display`] and [`FromStr`] use it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    values: Vec<usize>,
}

/// A strictly increasing set of positions in `{1, …, n−1}`.
///
/// Used for descent and rise sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionSet {
    positions: Vec<usize>,
}

impl PositionSet {
    fn from_sorted(positions: Vec<usize>) -> Self {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        PositionSet { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    /// The set `{n−i : i ∈ self}`, i.e. the reflection of the positions of a
    /// word of length `n` about its middle.
    pub fn mirrored(&self, n: usize) -> PositionSet {
        let mut positions: Vec<usize> = self.positions.iter().map(|&i| n - i).collect();
        positions.sort_unstable();
        PositionSet::from_sorted(positions)
    }
}

impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.positions {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// The cycle structure of an involution, split by how cycles interact with
/// the complement map.
///
/// A transposition `(i, j)` is *smooth* when `i ≠ n+1−j`; a non-smooth one
/// pairs a position with its complement. For a self-evacuated involution,
/// smooth transpositions come in complement pairs and fixed points come in
/// pairs `{i, n+1−i}`, except for a central fixed point when `n` is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub fixed_points: Vec<usize>,
    pub smooth_transpositions: Vec<(usize, usize)>,
    pub nonsmooth_transpositions: Vec<(usize, usize)>,
}

impl Involution {
    /// Validates and wraps a value sequence in one-line notation.
    pub fn new(values: Vec<usize>) -> Result<Self, InvolutionError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v < 1 || v > n || seen[v - 1] {
                return Err(InvolutionError::NotAPermutation(n));
            }
            seen[v - 1] = true;
        }
        for i in 1..=n {
            if values[values[i - 1] - 1] != i {
                return Err(InvolutionError::NotSelfInverse);
            }
        }
        Ok(Involution { values })
    }

    /// Constructor for enumeration internals that build involutions by
    /// pairing positions; skips re-validation in release builds.
    fn from_parts(values: Vec<usize>) -> Self {
        debug_assert!(Involution::new(values.clone()).is_ok());
        Involution { values }
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            values: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `σ(i)` for a 1-based position.
    pub fn image(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Positions `i` with `σ(i) > σ(i+1)`.
    pub fn descent_set(&self) -> PositionSet {
        PositionSet::from_sorted(
            (1..self.n())
                .filter(|&i| self.values[i - 1] > self.values[i])
                .collect(),
        )
    }

    /// Positions `i` with `σ(i) < σ(i+1)`; the complement of the descent set
    /// in `{1, …, n−1}`.
    pub fn rise_set(&self) -> PositionSet {
        PositionSet::from_sorted(
            (1..self.n())
                .filter(|&i| self.values[i - 1] < self.values[i])
                .collect(),
        )
    }

    pub fn descent_count(&self) -> usize {
        (1..self.n())
            .filter(|&i| self.values[i - 1] > self.values[i])
            .count()
    }

    pub fn rise_count(&self) -> usize {
        self.n().saturating_sub(1) - self.descent_count()
    }

    /// `σ(i) + σ(n+1−i) = n+1` for all `i`; equivalent to `σψ = ψσ`.
    pub fn is_self_evacuated(&self) -> bool {
        let n = self.n();
        (1..=n).all(|i| self.values[i - 1] + self.values[n - i] == n + 1)
    }

    pub fn has_fixed_point(&self) -> bool {
        self.values.iter().enumerate().any(|(i, &v)| v == i + 1)
    }

    /// The conjugate `ψσψ`, i.e. `i ↦ n+1−σ(n+1−i)`.
    ///
    /// This is how evacuation acts on involutions; its fixed points are
    /// exactly the self-evacuated involutions.
    pub fn complement_conjugate(&self) -> Involution {
        let n = self.n();
        let values = (1..=n).map(|i| n + 1 - self.values[n - i]).collect();
        Involution::from_parts(values)
    }

    /// The product `ψσ`, i.e. `i ↦ n+1−σ(i)`.
    ///
    /// Only defined on self-evacuated involutions, where the result is again
    /// a self-evacuated involution whose descents sit exactly at the rises
    /// of `σ`.
    pub fn complement_compose(&self) -> Result<Involution, InvolutionError> {
        if !self.is_self_evacuated() {
            return Err(InvolutionError::NotSelfEvacuated);
        }
        let n = self.n();
        let values = self.values.iter().map(|&v| n + 1 - v).collect();
        Ok(Involution::from_parts(values))
    }

    /// Splits the cycle decomposition into fixed points, smooth
    /// transpositions, and non-smooth transpositions.
    pub fn cycle_report(&self) -> CycleReport {
        let n = self.n();
        let mut report = CycleReport {
            fixed_points: Vec::new(),
            smooth_transpositions: Vec::new(),
            nonsmooth_transpositions: Vec::new(),
        };
        for i in 1..=n {
            let j = self.values[i - 1];
            if j == i {
                report.fixed_points.push(i);
            } else if i < j {
                if i == n + 1 - j {
                    report.nonsmooth_transpositions.push((i, j));
                } else {
                    report.smooth_transpositions.push((i, j));
                }
            }
        }
        report
    }

    /// For odd `n` with `σ((n+1)/2) = (n+1)/2`, deletes the central symbol
    /// and relabels, producing an involution on `[n−1]`. Returns `None`
    /// otherwise.
    ///
    /// Restricted to self-evacuated involutions this is the bijection behind
    /// `s_{2k} = s_{2k+1}`.
    pub fn remove_central_fixed_point(&self) -> Option<Involution> {
        let n = self.n();
        if n == 0 || n % 2 == 0 {
            return None;
        }
        let c = (n + 1) / 2;
        if self.image(c) != c {
            return None;
        }
        let shift = |v: usize| if v > c { v - 1 } else { v };
        let values = (1..=n)
            .filter(|&i| i != c)
            .map(|i| shift(self.image(i)))
            .collect();
        Some(Involution::from_parts(values))
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let mut first = true;
            for v in &self.values {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
            Ok(())
        }
    }
}

impl FromStr for Involution {
    type Err = InvolutionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Involution { values: Vec::new() });
        }
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| InvolutionError::Parse(format!("bad entry {t:?}: {e}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d >= 1 => Ok(d as usize),
                    _ => Err(InvolutionError::Parse(format!(
                        "bad digit {c:?} in comma-free form"
                    ))),
                })
                .collect::<Result<_, _>>()?
        };
        Involution::new(values)
    }
}

/// Which involutions [`enumerate_involutions`] yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionFilter {
    All,
    SelfEvacuated,
    SelfEvacuatedFixedPointFree,
}

/// Lazily enumerates involutions on `[n]` in lexicographic order of one-line
/// notation, each exactly once.
///
/// `All` pairs up free positions directly. The self-evacuated filters are
/// constructive: the first free position `p` is sent to `p`, to some inner
/// free position `r` (forcing the complement quadruple `p→r, r→p,
/// n+1−r→n+1−p, n+1−p→n+1−r`), or to its mirror `n+1−p`, and the generator
/// recurses on the remaining symmetric set of free positions. Nothing is
/// filtered, so the self-evacuated enumeration stays fast at `n = 14` and
/// beyond. For `SelfEvacuatedFixedPointFree` with odd `n` the sequence is
/// empty, since the central position would have to be fixed.
pub fn enumerate_involutions(n: usize, filter: InvolutionFilter) -> InvolutionIter {
    InvolutionIter {
        n,
        filter,
        stack: vec![Frame {
            values: vec![0; n],
            free: (1..=n).collect(),
        }],
    }
}

#[derive(Debug)]
struct Frame {
    values: Vec<usize>,
    free: Vec<usize>,
}

/// See [`enumerate_involutions`].
#[derive(Debug)]
pub struct InvolutionIter {
    n: usize,
    filter: InvolutionFilter,
    stack: Vec<Frame>,
}

impl Iterator for InvolutionIter {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        while let Some(frame) = self.stack.pop() {
            if frame.free.is_empty() {
                return Some(Involution::from_parts(frame.values));
            }
            self.expand(frame);
        }
        None
    }
}

impl InvolutionIter {
    fn expand(&mut self, frame: Frame) {
        let mut children: Vec<Frame> = Vec::new();
        match self.filter {
            InvolutionFilter::All => {
                let p = frame.free[0];
                {
                    let mut values = frame.values.clone();
                    values[p - 1] = p;
                    children.push(Frame {
                        values,
                        free: frame.free[1..].to_vec(),
                    });
                }
                for (idx, &v) in frame.free.iter().enumerate().skip(1) {
                    let mut values = frame.values.clone();
                    values[p - 1] = v;
                    values[v - 1] = p;
                    let mut free = frame.free[1..].to_vec();
                    free.remove(idx - 1);
                    children.push(Frame { values, free });
                }
            }
            InvolutionFilter::SelfEvacuated | InvolutionFilter::SelfEvacuatedFixedPointFree => {
                let fixed_point_free =
                    self.filter == InvolutionFilter::SelfEvacuatedFixedPointFree;
                let n = self.n;
                let p = frame.free[0];
                let q = *frame.free.last().unwrap();
                if p == q {
                    // Only the central position of an odd n remains; it must
                    // be a fixed point.
                    if !fixed_point_free {
                        let mut values = frame.values.clone();
                        values[p - 1] = p;
                        children.push(Frame {
                            values,
                            free: Vec::new(),
                        });
                    }
                } else {
                    let inner = &frame.free[1..frame.free.len() - 1];
                    if !fixed_point_free {
                        let mut values = frame.values.clone();
                        values[p - 1] = p;
                        values[q - 1] = q;
                        children.push(Frame {
                            values,
                            free: inner.to_vec(),
                        });
                    }
                    for &r in inner {
                        if 2 * r == n + 1 {
                            // The central symbol cannot join a transposition.
                            continue;
                        }
                        let mirror = n + 1 - r;
                        let mut values = frame.values.clone();
                        values[p - 1] = r;
                        values[r - 1] = p;
                        values[mirror - 1] = q;
                        values[q - 1] = mirror;
                        let free = inner
                            .iter()
                            .copied()
                            .filter(|&x| x != r && x != mirror)
                            .collect();
                        children.push(Frame { values, free });
                    }
                    {
                        let mut values = frame.values.clone();
                        values[p - 1] = q;
                        values[q - 1] = p;
                        children.push(Frame {
                            values,
                            free: inner.to_vec(),
                        });
                    }
                }
            }
        }
        // Children were built in ascending σ(p) order; pushing them reversed
        // makes the stack pop them in lexicographic order.
        self.stack.extend(children.into_iter().rev());
    }
}
