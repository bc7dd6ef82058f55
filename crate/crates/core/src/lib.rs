//! Integer algebra for framed links and fibered monodromies.
//!
//! - [`lattice`]: checked integer matrices, Smith normal form, cokernels and
//!   the intersection pairing on surface homology.
//! - [`framed_link`]: framing/linking matrices, handle slides and their duals.
//! - [`monodromy`]: symplectic monodromies, connected sums, screening forms.
//! - [`screen`]: enumeration of classes with small screening value.
//! - [`fiber_calc`]: genus bookkeeping for compressions of a fiber.

pub mod error;
pub mod fiber_calc;
pub mod framed_link;
pub mod lattice;
pub mod monodromy;
pub mod screen;

pub use error::{Error, Result};
pub use fiber_calc::{
    compress, genus_drop_check, isotopic_case_classify, CurveOnFiber, FiberSurface, IsotopicCase,
    SurgeryOutcome, SurgeryTarget, TargetVerdict,
};
pub use framed_link::{
    apply_sequence, apply_slide, dual_slide_sequence, is_gpr_admissible, surgery_homology,
    BandSign, FramedLink, SlideMove, SlideSequence,
};
pub use lattice::{
    cokernel_invariants, is_primitive, is_symplectic, smith_normal_form, standard_symplectic,
    symplectic_inverse, symplectic_pairing, AbelianGroupInvariants, HomologyClass, IntMatrix,
    SmithDecomposition,
};
pub use monodromy::{
    act, builtin, connected_sum, make_figure_eight, make_trefoil, screening_form,
    ConnectedSumDecomposition, FiberedMonodromy, QuadraticForm,
};
pub use screen::{
    brute_force_solutions, descent_reduce, family_pairing_table, fibonacci_solutions,
    screen_connected_sum, ConnectedSumReport, EnumerationOptions, FibonacciFamily, PairingTable,
    ScreenConstraint, SolutionSet,
};
