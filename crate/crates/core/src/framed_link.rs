//! Framed links in S³, recorded by their framing/linking matrix.
//!
//! A handle slide of component `i` over component `j` acts on the matrix by
//! the congruence `A ↦ Eᵀ A E` with `E = I + ε·e_{j,i}`, so the new framing of
//! component `i` is `u + v + 2ε·link(i, j)`. Component indices are stable:
//! the band sum replaces component `i` in place.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{cokernel_invariants, AbelianGroupInvariants, IntMatrix};

/// Symmetric matrix with framings on the diagonal and pairwise linking
/// numbers off it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FramedLink {
    n: usize,
    matrix: IntMatrix,
}

impl FramedLink {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.rows() == 0 {
            return Err(Error::Empty("a framed link needs at least one component"));
        }
        if let Some((row, col)) = matrix.asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        Ok(Self {
            n: matrix.rows(),
            matrix,
        })
    }

    /// `n`-component 0-framed unlink.
    pub fn unlink(n: usize) -> Result<Self> {
        Self::new(IntMatrix::zeros(n, n))
    }

    pub fn components(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn framing(&self, i: usize) -> i64 {
        self.matrix[(i, i)]
    }

    pub fn linking(&self, i: usize, j: usize) -> i64 {
        self.matrix[(i, j)]
    }
}

/// On-disk form `{"n": int, "matrix": [[int]]}`.
#[derive(Deserialize)]
struct FramedLinkFile {
    n: usize,
    matrix: IntMatrix,
}

impl<'de> Deserialize<'de> for FramedLink {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FramedLinkFile::deserialize(d)?;
        if raw.matrix.rows() != raw.n {
            return Err(serde::de::Error::custom(Error::DimensionMismatch {
                expected: raw.n,
                found: raw.matrix.rows(),
            }));
        }
        FramedLink::new(raw.matrix).map_err(serde::de::Error::custom)
    }
}

/// Orientation of the band in a handle slide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum BandSign {
    Plus,
    Minus,
}

impl BandSign {
    pub fn value(self) -> i64 {
        match self {
            BandSign::Plus => 1,
            BandSign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            BandSign::Plus => BandSign::Minus,
            BandSign::Minus => BandSign::Plus,
        }
    }
}

impl TryFrom<i64> for BandSign {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(BandSign::Plus),
            -1 => Ok(BandSign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }
}

impl From<BandSign> for i64 {
    fn from(s: BandSign) -> i64 {
        s.value()
    }
}

/// Slide component `slider` over component `over`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlideMove {
    pub slider: usize,
    pub over: usize,
    pub sign: BandSign,
}

impl SlideMove {
    pub fn new(slider: usize, over: usize, sign: BandSign) -> Self {
        Self { slider, over, sign }
    }

    pub fn validate(&self, components: usize) -> Result<()> {
        if self.slider == self.over || self.slider >= components || self.over >= components {
            return Err(Error::InvalidSlide {
                slider: self.slider,
                over: self.over,
                components,
            });
        }
        Ok(())
    }

    /// The slide that undoes this one.
    pub fn inverse(&self) -> Self {
        Self {
            sign: self.sign.flipped(),
            ..*self
        }
    }

    /// Same band read from the dual link: `over` now slides over `slider`.
    pub fn dual(&self) -> Self {
        Self {
            slider: self.over,
            over: self.slider,
            sign: self.sign,
        }
    }

    /// `E = I + ε·e_{over, slider}`.
    pub fn elementary_matrix(&self, components: usize) -> IntMatrix {
        let mut e = IntMatrix::identity(components);
        e[(self.over, self.slider)] = self.sign.value();
        e
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlideSequence {
    pub moves: Vec<SlideMove>,
}

impl SlideSequence {
    pub fn new(moves: Vec<SlideMove>) -> Self {
        Self { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

pub fn apply_slide(link: &FramedLink, m: &SlideMove) -> Result<FramedLink> {
    m.validate(link.n)?;
    let e = m.elementary_matrix(link.n);
    let matrix = e.transpose().checked_mul(&link.matrix)?.checked_mul(&e)?;
    Ok(FramedLink { n: link.n, matrix })
}

pub fn apply_sequence(link: &FramedLink, seq: &SlideSequence) -> Result<FramedLink> {
    seq.moves
        .iter()
        .try_fold(link.clone(), |l, m| apply_slide(&l, m))
}

/// Necessary condition for surgery on the link to give `#ₙ(S¹×S²)`: every
/// framing and every linking number vanishes.
pub fn is_gpr_admissible(link: &FramedLink) -> bool {
    link.matrix.is_zero()
}

/// First homology of the manifold obtained by surgery: `coker(A)`.
pub fn surgery_homology(link: &FramedLink) -> Result<AbelianGroupInvariants> {
    cokernel_invariants(&link.matrix)
}

/// Dualizes every slide and reverses their order. An involution.
pub fn dual_slide_sequence(seq: &SlideSequence) -> SlideSequence {
    SlideSequence {
        moves: seq.moves.iter().rev().map(SlideMove::dual).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use BandSign::{Minus, Plus};

    fn link(rows: &[&[i64]]) -> FramedLink {
        FramedLink::new(IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap())
            .unwrap()
    }

    #[test]
    fn rejects_asymmetric_and_empty() {
        let m = IntMatrix::from_rows(vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert!(matches!(
            FramedLink::new(m),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        ));
        assert!(FramedLink::new(IntMatrix::zeros(0, 0)).is_err());
    }

    #[test]
    fn zero_link_stays_zero() {
        let l = FramedLink::unlink(2).unwrap();
        for m in [SlideMove::new(0, 1, Plus), SlideMove::new(1, 0, Minus)] {
            assert_eq!(apply_slide(&l, &m).unwrap(), l);
        }
    }

    #[test]
    fn framing_formula() {
        let l = link(&[&[1, 3], &[3, 2]]);
        let plus = apply_slide(&l, &SlideMove::new(0, 1, Plus)).unwrap();
        assert_eq!(plus.framing(0), 9);
        assert_eq!(plus.linking(0, 1), 5);
        assert_eq!(plus.framing(1), 2);
        let minus = apply_slide(&l, &SlideMove::new(0, 1, Minus)).unwrap();
        assert_eq!(minus.framing(0), -3);
        assert_eq!(minus.linking(0, 1), 1);
    }

    #[test]
    fn invalid_slides() {
        let l = FramedLink::unlink(2).unwrap();
        assert!(matches!(
            apply_slide(&l, &SlideMove::new(0, 0, Plus)),
            Err(Error::InvalidSlide { .. })
        ));
        assert!(apply_slide(&l, &SlideMove::new(0, 2, Plus)).is_err());
        assert!(matches!(BandSign::try_from(2), Err(Error::InvalidSign(2))));
    }

    #[test]
    fn admissibility() {
        assert!(is_gpr_admissible(&FramedLink::unlink(2).unwrap()));
        assert!(!is_gpr_admissible(&link(&[&[1]])));
        assert!(!is_gpr_admissible(&link(&[&[0, 1], &[1, 0]])));
    }

    #[test]
    fn homology_of_surgery() {
        let h = surgery_homology(&FramedLink::unlink(2).unwrap()).unwrap();
        assert_eq!(h.free_rank, 2);
        assert!(h.torsion.is_empty());
        assert!(surgery_homology(&link(&[&[1]])).unwrap().is_trivial());
        let five = surgery_homology(&link(&[&[5]])).unwrap();
        assert_eq!(five.torsion, vec![5]);
        assert_eq!(five.free_rank, 0);
    }

    #[test]
    fn dual_sequences() {
        assert!(dual_slide_sequence(&SlideSequence::default()).is_empty());
        let one = SlideSequence::new(vec![SlideMove::new(1, 2, Plus)]);
        assert_eq!(
            dual_slide_sequence(&one).moves,
            vec![SlideMove::new(2, 1, Plus)]
        );
        let two = SlideSequence::new(vec![
            SlideMove::new(1, 2, Plus),
            SlideMove::new(3, 1, Minus),
        ]);
        assert_eq!(
            dual_slide_sequence(&two).moves,
            vec![SlideMove::new(1, 3, Minus), SlideMove::new(2, 1, Plus)]
        );
    }

    #[test]
    fn link_file_format() {
        let l: FramedLink =
            serde_json::from_str(r#"{"n": 2, "matrix": [[0, 0], [0, 0]]}"#).unwrap();
        assert!(is_gpr_admissible(&l));
        assert!(
            serde_json::from_str::<FramedLink>(r#"{"n": 3, "matrix": [[0, 0], [0, 0]]}"#).is_err()
        );
        assert!(
            serde_json::from_str::<FramedLink>(r#"{"n": 2, "matrix": [[0, 1], [0, 0]]}"#).is_err()
        );
    }

    fn random_link() -> impl Strategy<Value = FramedLink> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(-9i64..=9, n * n).prop_map(move |data| {
                let mut m = IntMatrix::zeros(n, n);
                for i in 0..n {
                    for j in i..n {
                        m[(i, j)] = data[i * n + j];
                        m[(j, i)] = data[i * n + j];
                    }
                }
                FramedLink::new(m).unwrap()
            })
        })
    }

    fn link_and_move() -> impl Strategy<Value = (FramedLink, SlideMove)> {
        random_link()
            .prop_filter("needs two components", |l| l.components() >= 2)
            .prop_flat_map(|l| {
                let n = l.components();
                (Just(l), 0..n, 1..n, any::<bool>()).prop_map(move |(l, i, off, plus)| {
                    let sign = if plus { Plus } else { Minus };
                    (l, SlideMove::new(i, (i + off) % n, sign))
                })
            })
    }

    proptest! {
        #[test]
        fn slide_then_inverse_is_identity((l, m) in link_and_move()) {
            let there = apply_slide(&l, &m).unwrap();
            prop_assert!(there.matrix().is_symmetric());
            prop_assert_eq!(apply_slide(&there, &m.inverse()).unwrap(), l);
        }

        #[test]
        fn slides_preserve_homology_and_admissibility((l, m) in link_and_move()) {
            let there = apply_slide(&l, &m).unwrap();
            prop_assert_eq!(surgery_homology(&there).unwrap(), surgery_homology(&l).unwrap());
            prop_assert_eq!(is_gpr_admissible(&there), is_gpr_admissible(&l));
        }

        #[test]
        fn dual_is_involution(moves in proptest::collection::vec((0usize..6, 0usize..6, any::<bool>()), 0..20)) {
            let seq = SlideSequence::new(moves.into_iter()
                .map(|(i, j, p)| SlideMove::new(i, j, if p { Plus } else { Minus }))
                .collect());
            prop_assert_eq!(dual_slide_sequence(&dual_slide_sequence(&seq)), seq);
        }
    }
}
