//! Screening homology classes against `lower ≤ Q(x) ≤ upper`.
//!
//! Classes are reported up to sign: every listed class has its first nonzero
//! coordinate positive, and sets are sorted lexicographically.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::lattice::{coords_gcd, pairing_raw, HomologyClass};
use crate::monodromy::{
    make_figure_eight, screening_form, ConnectedSumDecomposition, FiberedMonodromy, QuadraticForm,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScreenConstraint {
    pub lower: i64,
    pub upper: i64,
}

impl ScreenConstraint {
    pub fn new(lower: i64, upper: i64) -> Result<Self> {
        if lower > upper {
            return Err(Error::InvalidConstraint { lower, upper });
        }
        Ok(Self { lower, upper })
    }

    pub fn admits(&self, value: i64) -> bool {
        (self.lower..=self.upper).contains(&value)
    }
}

impl Default for ScreenConstraint {
    fn default() -> Self {
        Self {
            lower: -1,
            upper: 1,
        }
    }
}

/// Which classes an enumeration may return, and how many workers to use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub allow_zero: bool,
    pub allow_imprimitive: bool,
    /// `None` uses the ambient rayon pool; `Some(1)` runs on the caller's thread.
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionSet {
    pub classes: Vec<HomologyClass>,
    /// `Q` at each class, aligned with `classes`.
    pub values: Vec<i64>,
    pub bound: i64,
    pub constraint: ScreenConstraint,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, x: &HomologyClass) -> bool {
        self.classes.binary_search(x).is_ok()
    }

    fn from_unsorted(
        mut pairs: Vec<(HomologyClass, i64)>,
        bound: i64,
        constraint: ScreenConstraint,
    ) -> Self {
        pairs.sort();
        pairs.dedup();
        let (classes, values) = pairs.into_iter().unzip();
        Self {
            classes,
            values,
            bound,
            constraint,
        }
    }
}

fn check_bound(bound: i64) -> Result<()> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound));
    }
    // The box side 2B + 1 must itself be representable.
    error::add(error::mul(bound, 2, "box size")?, 1, "box size")?;
    Ok(())
}

/// Visits every point of `[-bound, bound]^len`, in lexicographic order.
fn for_each_in_box(
    prefix: &mut Vec<i64>,
    len: usize,
    bound: i64,
    f: &mut dyn FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if prefix.len() == len {
        return f(prefix);
    }
    for v in -bound..=bound {
        prefix.push(v);
        for_each_in_box(prefix, len, bound, f)?;
        prefix.pop();
    }
    Ok(())
}

/// Every sign-normalized class in the box `|xᵢ| ≤ bound` with `Q(x)` inside
/// the constraint. Zero and imprimitive classes are skipped unless the
/// options allow them.
///
/// This is a plain scan and serves as the reference for the parametrized
/// enumerators below.
pub fn brute_force_solutions(
    q: &QuadraticForm,
    bound: i64,
    constraint: ScreenConstraint,
    opts: &EnumerationOptions,
) -> Result<SolutionSet> {
    check_bound(bound)?;
    let dim = q.dim();

    // Normalized classes split into slabs by the position `p` of the first
    // nonzero coordinate and its value `1..=bound`.
    let slabs: Vec<(usize, i64)> = (0..dim)
        .flat_map(|p| (1..=bound).map(move |v| (p, v)))
        .collect();

    let scan = |&(p, lead): &(usize, i64)| -> Result<Vec<(HomologyClass, i64)>> {
        let mut found = Vec::new();
        let mut prefix = vec![0i64; p];
        prefix.push(lead);
        for_each_in_box(&mut prefix, dim, bound, &mut |x| {
            if !opts.allow_imprimitive && coords_gcd(x) != 1 {
                return Ok(());
            }
            let value = q.value_raw(x)?;
            if constraint.admits(value) {
                found.push((HomologyClass::new(x.to_vec())?, value));
            }
            Ok(())
        })?;
        Ok(found)
    };

    let chunks: Vec<Vec<(HomologyClass, i64)>> = match opts.workers {
        Some(1) => slabs.iter().map(scan).collect::<Result<_>>()?,
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|_| Error::Empty("worker pool"))?
            .install(|| slabs.par_iter().map(scan).collect::<Result<_>>())?,
        None => slabs.par_iter().map(scan).collect::<Result<_>>()?,
    };

    let mut pairs: Vec<(HomologyClass, i64)> = chunks.into_iter().flatten().collect();
    if opts.allow_zero {
        let zero = HomologyClass::new(vec![0; dim])?;
        let value = q.value(&zero)?;
        if constraint.admits(value) {
            pairs.push((zero, value));
        }
    }
    Ok(SolutionSet::from_unsorted(pairs, bound, constraint))
}

/// Fibonacci numbers `f₀ = 0, f₁ = 1, …, f_max_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FibonacciFamily {
    pub max_index: usize,
}

impl FibonacciFamily {
    /// Shortest family whose last term exceeds `bound`.
    pub fn covering(bound: i64) -> Self {
        let (mut a, mut b, mut k) = (0i64, 1i64, 1usize);
        while b <= bound {
            (a, b) = (b, a.saturating_add(b));
            k += 1;
        }
        Self { max_index: k }
    }

    pub fn numbers(&self) -> Result<Vec<i64>> {
        let mut f = vec![0i64, 1];
        while f.len() <= self.max_index {
            let n = f.len();
            f.push(error::add(f[n - 1], f[n - 2], "fibonacci")?);
        }
        f.truncate(self.max_index + 1);
        Ok(f)
    }

    /// `(f_{k+1}, f_k)` and `(f_k, −f_{k+1})` for every `k` in range.
    pub fn pairs(&self) -> Result<Vec<(i64, i64)>> {
        let f = self.numbers()?;
        Ok(f.windows(2)
            .flat_map(|w| [(w[1], w[0]), (w[0], -w[1])])
            .collect())
    }
}

/// Figure-eight solution set predicted by the Fibonacci parametrization,
/// restricted to the box: the larger of two successive Fibonacci numbers
/// comes first when the coordinates share a sign, second when they differ.
pub fn fibonacci_solutions(bound: i64) -> Result<SolutionSet> {
    check_bound(bound)?;
    let q = screening_form(&make_figure_eight());
    let mut pairs = Vec::new();
    for (m, n) in FibonacciFamily::covering(bound).pairs()? {
        if m.abs() > bound || n.abs() > bound {
            continue;
        }
        let x = HomologyClass::genus1(m, n).normalized()?;
        let value = q.value(&x)?;
        pairs.push((x, value));
    }
    Ok(SolutionSet::from_unsorted(
        pairs,
        bound,
        ScreenConstraint::default(),
    ))
}

/// Pushes `x` down its orbit under `h` to a canonical small representative.
///
/// Each step applies `h` or `h⁻¹` when that strictly shrinks the largest
/// coordinate. When neither does, the classes reachable without growing are
/// explored; if one of them can still shrink the descent continues from
/// there, otherwise the lexicographically largest normalized class of that
/// plateau is returned. `Q` is preserved at every step.
pub fn descent_reduce(h: &FiberedMonodromy, x: &HomologyClass) -> Result<HomologyClass> {
    if h.genus() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: 2 * h.genus(),
        });
    }
    if x.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: x.dim(),
        });
    }
    if x.is_zero() {
        return Err(Error::ZeroClass);
    }
    let inv = h.inverse()?;
    let step = |c: &HomologyClass| -> Result<[HomologyClass; 2]> {
        Ok([
            crate::monodromy::act(h, c)?.normalized()?,
            crate::monodromy::act(&inv, c)?.normalized()?,
        ])
    };

    let mut current = x.normalized()?;
    loop {
        let level = current.sup_norm();
        let mut plateau = vec![current.clone()];
        let mut frontier = 0;
        let mut lower: Option<HomologyClass> = None;
        while frontier < plateau.len() && lower.is_none() {
            for next in step(&plateau[frontier])? {
                let norm = next.sup_norm();
                if norm < level {
                    lower = Some(next);
                    break;
                }
                if norm == level && !plateau.contains(&next) {
                    plateau.push(next);
                }
            }
            frontier += 1;
        }
        match lower {
            Some(next) => current = next,
            None => return Ok(plateau.into_iter().max().expect("plateau holds current")),
        }
    }
}

/// Pairwise intersection numbers of a family of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingTable {
    pub table: Vec<Vec<i64>>,
    /// Every off-diagonal entry lies in `{-1, 0, 1}`. Necessary, not
    /// sufficient, for simultaneously disjoint arc representatives.
    pub admissible: bool,
}

pub fn family_pairing_table(classes: &[HomologyClass]) -> Result<PairingTable> {
    if let Some(first) = classes.first() {
        if let Some(bad) = classes.iter().find(|c| c.dim() != first.dim()) {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                found: bad.dim(),
            });
        }
    }
    let table = classes
        .iter()
        .map(|x| {
            classes
                .iter()
                .map(|y| pairing_raw(x.coords(), y.coords()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let admissible = table.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &v)| i == j || (-1..=1).contains(&v))
    });
    Ok(PairingTable { table, admissible })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScreenedClass {
    pub class: HomologyClass,
    pub value: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub block: usize,
    pub genus: usize,
    pub classes: Vec<ScreenedClass>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedSumReport {
    pub constraint: ScreenConstraint,
    pub blocks: Vec<BlockReport>,
    pub pass: bool,
}

/// Screens classes of each summand's homology against that summand's form.
pub fn screen_connected_sum(
    d: &ConnectedSumDecomposition,
    per_block_classes: &[Vec<HomologyClass>],
    constraint: ScreenConstraint,
) -> Result<ConnectedSumReport> {
    if d.blocks.len() != per_block_classes.len() {
        return Err(Error::DimensionMismatch {
            expected: d.blocks.len(),
            found: per_block_classes.len(),
        });
    }
    let blocks = d
        .blocks
        .iter()
        .zip(per_block_classes)
        .enumerate()
        .map(|(i, (h, classes))| {
            let q = screening_form(h);
            let classes = classes
                .iter()
                .map(|x| {
                    if x.dim() != q.dim() {
                        return Err(Error::DimensionMismatch {
                            expected: q.dim(),
                            found: x.dim(),
                        });
                    }
                    let value = q.value(x)?;
                    Ok(ScreenedClass {
                        class: x.clone(),
                        value,
                        pass: constraint.admits(value),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(BlockReport {
                block: i,
                genus: h.genus(),
                pass: classes.iter().all(|c| c.pass),
                classes,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConnectedSumReport {
        constraint,
        pass: blocks.iter().all(|b| b.pass),
        blocks,
    })
}
