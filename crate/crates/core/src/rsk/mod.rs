//! RSK correspondence and Young's lattice.

mod insertion;
mod tableau;
mod young;

pub use insertion::{insertion_tableau, inverse_rsk, rsk};
pub use tableau::{Partition, Tableau};
pub use young::{
    all_syt, check_harmonicity_transfer, count_syt, count_young_paths, exact_projected_marginal,
    link_count, predicted_marginal, project_path, projected_marginal, projected_path_counts,
    verify_linkyz, young_kernel, LinkCount, LinkTerm, YoungMarginal, ENUMERATION_BOUND,
};

/// `{i : i + 1 lies in a strictly lower row than i}`.
pub fn tableau_descents(q: &Tableau) -> Vec<usize> {
    q.descents()
}
