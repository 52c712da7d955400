//! Workloads shared by the benchmarks.

use bettiforge::{Family, Graph};

/// Named graphs for the Hochster sweep benchmarks, smallest first.
pub fn sweep_workloads() -> Vec<(String, Graph)> {
    [
        Family::Cycle(8),
        Family::Cycle(10),
        Family::Wheel(8),
        Family::Jahangir(4),
        Family::Fan(2, 7),
    ]
    .into_iter()
    .map(|f| {
        (
            f.to_string(),
            f.build().expect("fixed family parameters are valid"),
        )
    })
    .collect()
}
