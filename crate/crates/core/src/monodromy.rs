//! Monodromies of fibered 3-manifolds, seen through their action on the
//! first homology of the closed fiber.
//!
//! Classes are column vectors and a monodromy acts on the left. The
//! screening form of a monodromy `M` is `Q(x) = xᵀ·Jᵀ·M·x`, where `J` is the
//! standard intersection form (see [`standard_symplectic`]). Equivalently
//! `Q(x) = ⟨Mx, x⟩ = −⟨x, Mx⟩`. On a genus-one block `Jᵀ = [[0, -1], [1, 0]]`,
//! which is the left factor in the familiar product that turns the
//! figure-eight matrix into `−m² + mn + n²`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    is_symplectic, pairing_raw, standard_symplectic, symplectic_inverse, HomologyClass, IntMatrix,
};

/// Integer symplectic matrix on `H₁(F) ≅ Z^{2g}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FiberedMonodromy {
    genus: usize,
    matrix: IntMatrix,
}

impl FiberedMonodromy {
    /// Validates that `matrix` is `2g×2g` and preserves the intersection form.
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !is_symplectic(&matrix)? {
            return Err(Error::NotSymplectic);
        }
        Ok(Self {
            genus: matrix.rows() / 2,
            matrix,
        })
    }

    pub fn identity(genus: usize) -> Result<Self> {
        Self::new(IntMatrix::identity(2 * genus))
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self {
            genus: self.genus,
            matrix: symplectic_inverse(&self.matrix)?,
        })
    }

    pub fn compose(&self, other: &FiberedMonodromy) -> Result<Self> {
        Self::new(self.matrix.checked_mul(&other.matrix)?)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        (0..k).try_fold(Self::identity(self.genus)?, |acc, _| acc.compose(self))
    }
}

/// On-disk form `{"genus": int, "matrix": [[int]]}`.
#[derive(Deserialize)]
struct MonodromyFile {
    genus: usize,
    matrix: IntMatrix,
}

impl<'de> Deserialize<'de> for FiberedMonodromy {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MonodromyFile::deserialize(d)?;
        if raw.genus == 0 || raw.matrix.rows() != 2 * raw.genus {
            return Err(serde::de::Error::custom(Error::DimensionMismatch {
                expected: 2 * raw.genus,
                found: raw.matrix.rows(),
            }));
        }
        FiberedMonodromy::new(raw.matrix).map_err(serde::de::Error::custom)
    }
}

/// Figure-eight knot: `[[2, 1], [1, 1]]`.
pub fn make_figure_eight() -> FiberedMonodromy {
    FiberedMonodromy {
        genus: 1,
        matrix: IntMatrix::from_rows(vec![vec![2, 1], vec![1, 1]]).expect("2x2"),
    }
}

/// Trefoil: `[[0, 1], [-1, 1]]`, of order six.
pub fn make_trefoil() -> FiberedMonodromy {
    FiberedMonodromy {
        genus: 1,
        matrix: IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 1]]).expect("2x2"),
    }
}

/// Looks up one of the built-in monodromies by name.
pub fn builtin(name: &str) -> Option<FiberedMonodromy> {
    match name {
        "figure8" | "figure-eight" | "4_1" => Some(make_figure_eight()),
        "trefoil" | "3_1" => Some(make_trefoil()),
        _ => None,
    }
}

/// Summands of a monodromy that is a connected sum along an invariant
/// separating curve. The curve itself is implicit in the block boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedSumDecomposition {
    pub blocks: Vec<FiberedMonodromy>,
}

impl ConnectedSumDecomposition {
    /// Coordinate offset of each block in the assembled basis.
    pub fn offsets(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, b| {
                let start = *acc;
                *acc += 2 * b.genus;
                Some(start)
            })
            .collect()
    }

    pub fn assemble(&self) -> FiberedMonodromy {
        let mats: Vec<&IntMatrix> = self.blocks.iter().map(|b| &b.matrix).collect();
        FiberedMonodromy {
            genus: self.blocks.iter().map(|b| b.genus).sum(),
            matrix: IntMatrix::block_diagonal(&mats),
        }
    }
}

/// Block-diagonal sum, first part's coordinates first.
pub fn connected_sum(
    parts: &[FiberedMonodromy],
) -> Result<(FiberedMonodromy, ConnectedSumDecomposition)> {
    if parts.is_empty() {
        return Err(Error::Empty("connected sum of no monodromies"));
    }
    let decomposition = ConnectedSumDecomposition {
        blocks: parts.to_vec(),
    };
    Ok((decomposition.assemble(), decomposition))
}

/// `Q(x) = xᵀ·B·x` on `Z^{2g}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticForm {
    genus: usize,
    matrix: IntMatrix,
}

impl QuadraticForm {
    /// Raw coefficient matrix; no relation to a monodromy is implied.
    pub fn from_matrix(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.rows() == 0 || !matrix.rows().is_multiple_of(2) {
            return Err(Error::OddDimension(matrix.rows()));
        }
        Ok(Self {
            genus: matrix.rows() / 2,
            matrix,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn value(&self, x: &HomologyClass) -> Result<i64> {
        self.value_raw(x.coords())
    }

    pub(crate) fn value_raw(&self, x: &[i64]) -> Result<i64> {
        self.matrix.quadratic_value(x)
    }

    /// For a genus-one form, the coefficients `(a, b, c)` of
    /// `a·m² + b·mn + c·n²`.
    pub fn binary_coefficients(&self) -> Option<(i64, i64, i64)> {
        if self.genus != 1 {
            return None;
        }
        let m = &self.matrix;
        Some((m[(0, 0)], m[(0, 1)].checked_add(m[(1, 0)])?, m[(1, 1)]))
    }

    /// Restriction to the coordinates `offset..offset + 2·genus`.
    pub fn restrict(&self, offset: usize, genus: usize) -> Self {
        Self {
            genus,
            matrix: self.matrix.block(offset, offset, 2 * genus, 2 * genus),
        }
    }
}

/// `B = Jᵀ·M`, so that `Q(x) = ⟨Mx, x⟩`.
pub fn screening_form(h: &FiberedMonodromy) -> QuadraticForm {
    let jt = standard_symplectic(h.genus).transpose();
    let matrix = jt
        .checked_mul(&h.matrix)
        .expect("entries of Jᵀ are 0 and ±1 with one nonzero per row");
    QuadraticForm {
        genus: h.genus,
        matrix,
    }
}

/// `Q(x)` computed through the pairing rather than the stored matrix.
pub fn screening_value_via_pairing(h: &FiberedMonodromy, x: &HomologyClass) -> Result<i64> {
    let hx = h.matrix.checked_mul_vec(x.coords())?;
    pairing_raw(&hx, x.coords())
}

pub fn act(h: &FiberedMonodromy, x: &HomologyClass) -> Result<HomologyClass> {
    HomologyClass::new(h.matrix.checked_mul_vec(x.coords())?)
}
