//! Genus bookkeeping for compressing a fiber along an essential curve, and
//! the case table for surgery on a curve whose isotopy class the monodromy
//! fixes.
//!
//! Nothing here decides anything about Heegaard splittings. The possible
//! outcomes (S³, lens space, S¹×S², torus bundle) only appear as names in
//! the descriptions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closed orientable surface, one genus per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberSurface {
    pub genera: Vec<u32>,
}

impl FiberSurface {
    pub fn connected(genus: u32) -> Self {
        Self {
            genera: vec![genus],
        }
    }

    pub fn components(&self) -> usize {
        self.genera.len()
    }

    pub fn total_genus(&self) -> u32 {
        self.genera.iter().sum()
    }

    /// Genus of a connected surface with the same Euler characteristic,
    /// `1 − χ/2`. One compression always lowers it by exactly one.
    pub fn euler_genus(&self) -> i64 {
        1 - self.euler_characteristic() / 2
    }

    /// `Σ (2 − 2gᵢ)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.genera.iter().map(|&g| 2 - 2 * i64::from(g)).sum()
    }
}

/// An essential simple closed curve on the fiber, with what is known about
/// how the monodromy moves it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveOnFiber {
    pub separating: bool,
    /// Genera of the two sides, present iff `separating`.
    pub split: Option<(u32, u32)>,
    /// Whether `h(c)` is isotopic to `c`.
    pub isotopy_class_fixed: Option<bool>,
    /// Whether that isotopy preserves the orientation of `c`.
    pub orientation_preserved: Option<bool>,
}

impl CurveOnFiber {
    pub fn non_separating() -> Self {
        Self {
            separating: false,
            split: None,
            isotopy_class_fixed: None,
            orientation_preserved: None,
        }
    }

    pub fn separating(g1: u32, g2: u32) -> Self {
        Self {
            separating: true,
            split: Some((g1, g2)),
            isotopy_class_fixed: None,
            orientation_preserved: None,
        }
    }

    pub fn fixed(mut self, orientation_preserved: Option<bool>) -> Self {
        self.isotopy_class_fixed = Some(true);
        self.orientation_preserved = orientation_preserved;
        self
    }

    fn validate(&self, genus: u32) -> Result<()> {
        match (self.separating, self.split) {
            (false, None) => {
                if genus == 0 {
                    return Err(Error::InvalidSurface(
                        "a sphere has no essential curve".into(),
                    ));
                }
                Ok(())
            }
            (true, Some((g1, g2))) => {
                if g1 == 0 || g2 == 0 {
                    return Err(Error::InvalidSurface(format!(
                        "split ({g1}, {g2}) bounds a disk, so the curve is inessential"
                    )));
                }
                if g1.checked_add(g2) != Some(genus) {
                    return Err(Error::InvalidSurface(format!(
                        "split ({g1}, {g2}) does not add up to genus {genus}"
                    )));
                }
                Ok(())
            }
            (true, None) => Err(Error::InvalidSurface(
                "separating curve needs a split".into(),
            )),
            (false, Some(_)) => Err(Error::InvalidSurface(
                "non-separating curve cannot carry a split".into(),
            )),
        }
    }
}

/// Compress a connected surface along `c`.
pub fn compress(f: &FiberSurface, c: &CurveOnFiber) -> Result<FiberSurface> {
    let [genus] = f.genera[..] else {
        return Err(Error::InvalidSurface(format!(
            "expected a connected surface, got {} components",
            f.components()
        )));
    };
    c.validate(genus)?;
    Ok(match c.split {
        None => FiberSurface::connected(genus - 1),
        Some((g1, g2)) => FiberSurface {
            genera: vec![g1, g2],
        },
    })
}

/// `genus(F″) < genus(F)`.
pub fn genus_drop_check(genus_before: u32, genus_after: u32) -> bool {
    genus_after < genus_before
}

/// Target manifold that the surgery is hoped to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurgeryTarget {
    /// `#₂(S¹×S²)`.
    DoubleS1xS2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum SurgeryOutcome {
    /// `M_surg ≅ N # (S¹×S²)` with `N` fibered, fiber of the given genus.
    #[serde(rename = "sum_with_s1xs2")]
    SumWithS1xS2 { n_fiber_genus: u32 },
    /// `M_surg ≅ M₁ # M₂` with `Mᵢ` fibered, fiber genus `gᵢ`.
    SumOfFibered { fiber_genera: (u32, u32) },
}

fn fibered_name(genus: u32) -> String {
    match genus {
        0 => "S¹×S²".to_string(),
        1 => "a torus bundle".to_string(),
        g => format!("a manifold fibering with genus-{g} fiber"),
    }
}

impl fmt::Display for SurgeryOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryOutcome::SumWithS1xS2 { n_fiber_genus } => write!(
                f,
                "M_surg = N # (S¹×S²), N fibers over the circle with fiber F' of genus {n_fiber_genus} (N is {})",
                fibered_name(*n_fiber_genus)
            ),
            SurgeryOutcome::SumOfFibered { fiber_genera: (g1, g2) } => write!(
                f,
                "M_surg = M₁ # M₂, Mᵢ fibers over the circle with fiber Fᵢ of genus {g1} and {g2} (M₁ is {}, M₂ is {})",
                fibered_name(*g1),
                fibered_name(*g2)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetVerdict {
    pub target: SurgeryTarget,
    pub consistent: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotopicCase {
    pub outcome: SurgeryOutcome,
    pub description: String,
    pub target: Option<TargetVerdict>,
}

/// Case table for surgery (fiber framing) on a curve `c` with `h(c) ≃ c`.
///
/// Non-separating curves, and separating curves whose isotopy reverses
/// orientation, give `N # (S¹×S²)`; separating curves with an
/// orientation-preserving isotopy give `M₁ # M₂`. If the target is
/// `#₂(S¹×S²)`, only a torus fiber is consistent.
pub fn isotopic_case_classify(
    genus: u32,
    c: &CurveOnFiber,
    target: Option<SurgeryTarget>,
) -> Result<IsotopicCase> {
    if c.isotopy_class_fixed != Some(true) {
        return Err(Error::Hypothesis("h(c) must be isotopic to c"));
    }
    c.validate(genus)?;
    let outcome = match (c.split, c.orientation_preserved) {
        (None, _) => SurgeryOutcome::SumWithS1xS2 {
            n_fiber_genus: genus - 1,
        },
        // h swaps the two sides, so N fibers with either one of them.
        (Some((g1, g2)), Some(false)) => {
            if g1 != g2 {
                return Err(Error::InvalidSurface(format!(
                    "an orientation-reversing isotopy swaps the sides, but they have genus {g1} and {g2}"
                )));
            }
            SurgeryOutcome::SumWithS1xS2 { n_fiber_genus: g1 }
        }
        (Some(split), Some(true)) => SurgeryOutcome::SumOfFibered {
            fiber_genera: split,
        },
        (Some(_), None) => {
            return Err(Error::Hypothesis(
                "separating case needs the orientation behaviour of the isotopy",
            ))
        }
    };
    let target = target.map(|t| match t {
        SurgeryTarget::DoubleS1xS2 if genus == 1 => TargetVerdict {
            target: t,
            consistent: true,
            reason: "F is a torus, so F' is a sphere and N ≅ S¹×S²".into(),
        },
        SurgeryTarget::DoubleS1xS2 => TargetVerdict {
            target: t,
            consistent: false,
            reason: format!(
                "impossible: #₂(S¹×S²) with h(c) ≃ c forces F to be a torus, but F has genus {genus}"
            ),
        },
    });
    Ok(IsotopicCase {
        description: outcome.to_string(),
        outcome,
        target,
    })
}
