//! The classified list of sigma-unbranched data attached to enhanced Tits
//! data of Coxeter type. Four rows extend to infinite families wired to the
//! trace machinery; the starred rows are sporadic and stored for
//! completeness only.

use crate::diagram::{DynkinDiagram, SigmaDatum};
use crate::families::Family;

/// The group type of a stored row, with enough structure to instantiate the
/// diagram and Frobenius action at a given rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Trivial,
    /// `B_n`, split.
    TypeB,
    /// `C_n`, split.
    TypeC,
    /// `A_n`, split (only used at rank 1 here).
    TypeA,
    /// `2D_n`: type D with the fork swap.
    TwistedD,
    /// `2A_n`: type A with the flip.
    TwistedA,
    /// `2(A_1 x A_1)`: two disconnected nodes swapped.
    TwistedA1A1,
}

/// Which nodes make up `J` and `L` for a row, as 1-based Bourbaki indices
/// produced at instantiation time.
#[derive(Clone, Debug)]
pub struct TitsRow {
    /// The enhanced Tits datum label, for display.
    pub label: &'static str,
    pub group: GroupSpec,
    /// Sporadic rows (not part of the four infinite families).
    pub starred: bool,
    /// The infinite family this row instantiates, when applicable.
    pub family: Option<Family>,
    /// Rank of the produced group, as a function of the row parameter `n`.
    pub group_rank: fn(usize) -> usize,
    /// Minimal admissible row parameter.
    pub min_n: usize,
    /// `J` as a predicate on 1-based node indices given the group rank.
    pub j_nodes: fn(usize) -> Vec<usize>,
    /// `L` as an ordered list of 1-based node indices given the group rank.
    pub l_nodes: fn(usize) -> Vec<usize>,
}

fn all_but(rank: usize, excluded: usize) -> Vec<usize> {
    (1..=rank).filter(|&i| i != excluded).collect()
}

/// All rows of the classification table. The trivial first row cannot be
/// instantiated as a sigma-unbranched datum (its diagram is empty).
pub fn rows() -> Vec<TitsRow> {
    vec![
        TitsRow {
            label: "(A_n, w1, S)",
            group: GroupSpec::Trivial,
            starred: false,
            family: None,
            group_rank: |_| 0,
            min_n: 1,
            j_nodes: |_| vec![],
            l_nodes: |_| vec![],
        },
        TitsRow {
            label: "(B_n, w1, S)",
            group: GroupSpec::TwistedD,
            starred: false,
            family: Some(Family::EvenSO),
            group_rank: |n| n,
            min_n: 2,
            j_nodes: |r| all_but(r, r - 1),
            l_nodes: |r| (1..=r - 1).collect(),
        },
        TitsRow {
            label: "(B_n, w1, S~-{n})",
            group: GroupSpec::TypeB,
            starred: false,
            family: Some(Family::OddSO),
            group_rank: |n| n - 1,
            min_n: 2,
            j_nodes: |r| all_but(r, r),
            l_nodes: |r| (1..=r).collect(),
        },
        TitsRow {
            label: "(B-C_n, w1, S)",
            group: GroupSpec::TwistedD,
            starred: false,
            family: Some(Family::EvenSO),
            group_rank: |n| n,
            min_n: 2,
            j_nodes: |r| all_but(r, r - 1),
            l_nodes: |r| (1..=r - 1).collect(),
        },
        TitsRow {
            label: "(B-C_n, w1, S~-{n})",
            group: GroupSpec::TypeB,
            starred: false,
            family: Some(Family::OddSO),
            group_rank: |n| n - 1,
            min_n: 2,
            j_nodes: |r| all_but(r, r),
            l_nodes: |r| (1..=r).collect(),
        },
        TitsRow {
            label: "(C-B_n, w1, S)",
            group: GroupSpec::TypeB,
            starred: false,
            family: Some(Family::OddSO),
            group_rank: |n| n,
            min_n: 1,
            j_nodes: |r| all_but(r, r),
            l_nodes: |r| (1..=r).collect(),
        },
        TitsRow {
            label: "(C-BC_n, w1, S)",
            group: GroupSpec::TypeB,
            starred: false,
            family: Some(Family::OddSO),
            group_rank: |n| n,
            min_n: 1,
            j_nodes: |r| all_but(r, r),
            l_nodes: |r| (1..=r).collect(),
        },
        TitsRow {
            label: "(C-BC_n, w1, S~-{n})",
            group: GroupSpec::TypeC,
            starred: false,
            family: Some(Family::Sp),
            group_rank: |n| n,
            min_n: 1,
            j_nodes: |r| all_but(r, r),
            l_nodes: |r| (1..=r).collect(),
        },
        TitsRow {
            label: "(D_n, w1, S)",
            group: GroupSpec::TwistedD,
            starred: false,
            family: Some(Family::EvenSO),
            group_rank: |n| n - 1,
            min_n: 3,
            j_nodes: |r| all_but(r, r - 1),
            l_nodes: |r| (1..=r - 1).collect(),
        },
        TitsRow {
            label: "(2A'_n, w1, S)",
            group: GroupSpec::TwistedA,
            starred: false,
            family: Some(Family::Unitary),
            group_rank: |n| 2 * ((n - 1) / 2),
            min_n: 3,
            j_nodes: |r| all_but(r, r / 2),
            l_nodes: |r| (1..=r / 2).collect(),
        },
        TitsRow {
            label: "(2B_n, w1, S~-{n})",
            group: GroupSpec::TypeB,
            starred: false,
            family: Some(Family::OddSO),
            group_rank: |n| n,
            min_n: 1,
            j_nodes: |r| all_but(r, r),
            l_nodes: |r| (1..=r).collect(),
        },
        TitsRow {
            label: "(2B-C_n, w1, S~-{n})",
            group: GroupSpec::TypeC,
            starred: false,
            family: Some(Family::Sp),
            group_rank: |n| n,
            min_n: 1,
            j_nodes: |r| all_but(r, r),
            l_nodes: |r| (1..=r).collect(),
        },
        TitsRow {
            label: "(2D_n, w1, S)",
            group: GroupSpec::TwistedD,
            starred: false,
            family: Some(Family::EvenSO),
            group_rank: |n| n,
            min_n: 2,
            j_nodes: |r| all_but(r, r - 1),
            l_nodes: |r| (1..=r - 1).collect(),
        },
        TitsRow {
            label: "(A_3, w2, S)",
            group: GroupSpec::TwistedA1A1,
            starred: true,
            family: None,
            group_rank: |_| 2,
            min_n: 3,
            j_nodes: |_| vec![1],
            l_nodes: |_| vec![2],
        },
        TitsRow {
            label: "(2A'_3, w2, S)",
            group: GroupSpec::TwistedA,
            starred: true,
            family: None,
            group_rank: |_| 3,
            min_n: 3,
            j_nodes: |_| vec![2, 3],
            l_nodes: |_| vec![2, 1],
        },
        TitsRow {
            label: "(C_2, w2, S)",
            group: GroupSpec::TwistedA1A1,
            starred: true,
            family: None,
            group_rank: |_| 2,
            min_n: 2,
            j_nodes: |_| vec![1],
            l_nodes: |_| vec![2],
        },
        TitsRow {
            label: "(C_2, w2, S~-{1})",
            group: GroupSpec::TypeA,
            starred: false,
            family: None,
            group_rank: |_| 1,
            min_n: 2,
            j_nodes: |_| vec![],
            l_nodes: |_| vec![1],
        },
        TitsRow {
            label: "(2C_2, w2, S~-{1})",
            group: GroupSpec::TypeB,
            starred: false,
            family: None,
            group_rank: |_| 2,
            min_n: 2,
            j_nodes: |_| vec![1],
            l_nodes: |_| vec![1, 2],
        },
        TitsRow {
            label: "(2C-B_2, w1, S~-{1})",
            group: GroupSpec::TypeB,
            starred: true,
            family: None,
            group_rank: |_| 2,
            min_n: 2,
            j_nodes: |_| vec![2],
            l_nodes: |_| vec![2, 1],
        },
    ]
}

impl TitsRow {
    /// Instantiate the row at parameter `n >= min_n`; `None` for the
    /// trivial-group row.
    pub fn instantiate(&self, n: usize) -> Option<SigmaDatum> {
        assert!(n >= self.min_n);
        let rank = (self.group_rank)(n);
        if rank == 0 {
            return None;
        }
        let (diagram, sigma) = match self.group {
            GroupSpec::Trivial => return None,
            GroupSpec::TypeA => (DynkinDiagram::type_a(rank), (0..rank).collect::<Vec<_>>()),
            GroupSpec::TypeB => (DynkinDiagram::type_b(rank), (0..rank).collect()),
            GroupSpec::TypeC => (DynkinDiagram::type_c(rank), (0..rank).collect()),
            GroupSpec::TwistedD => {
                let mut s: Vec<usize> = (0..rank).collect();
                s.swap(rank - 2, rank - 1);
                (DynkinDiagram::type_d(rank), s)
            }
            GroupSpec::TwistedA => (DynkinDiagram::type_a(rank), (0..rank).rev().collect()),
            GroupSpec::TwistedA1A1 => {
                let d = DynkinDiagram::type_d(2); // two disconnected nodes
                (d, vec![1, 0])
            }
        };
        Some(SigmaDatum {
            diagram,
            sigma,
            j: (self.j_nodes)(rank).into_iter().map(|i| i - 1).collect(),
            l_nodes: (self.l_nodes)(rank).into_iter().map(|i| i - 1).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_nontrivial_rows_validate_at_minimal_rank() {
        let mut validated = 0;
        for row in rows() {
            let Some(datum) = row.instantiate(row.min_n) else {
                continue;
            };
            datum
                .validate_unbranched()
                .unwrap_or_else(|e| panic!("row {} failed: {e:?}", row.label));
            validated += 1;
        }
        assert_eq!(validated, 18);
    }

    #[test]
    fn family_rows_match_family_data() {
        for row in rows() {
            let Some(family) = row.family else { continue };
            let n = row.min_n.max(3);
            let datum = row.instantiate(n).unwrap();
            let group_rank = (row.group_rank)(n);
            let famrank = match family {
                Family::Unitary => group_rank / 2,
                _ => group_rank,
            };
            if famrank < family.min_rank() {
                continue;
            }
            let famdatum = family.datum(famrank);
            assert_eq!(datum.j, famdatum.j, "row {}", row.label);
            assert_eq!(datum.l_nodes, famdatum.l_nodes, "row {}", row.label);
        }
    }
}
