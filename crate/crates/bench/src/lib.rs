//! Fixtures shared by the benchmarks.

use slide_screen_core::{
    connected_sum, make_figure_eight, make_trefoil, FiberedMonodromy, IntMatrix,
};

/// Deterministic `n×n` matrix with small mixed-sign entries.
pub fn dense_matrix(n: usize) -> IntMatrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (((i * 7 + j * 13 + i * j) % 19) as i64) - 9)
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows).expect("rectangular by construction")
}

/// Figure-eight ⊕ trefoil, genus 2.
pub fn genus_two_sum() -> FiberedMonodromy {
    connected_sum(&[make_figure_eight(), make_trefoil()])
        .expect("nonempty")
        .0
}
