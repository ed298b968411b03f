//! Built-in quiver catalog.
//!
//! The plain entries are the quivers attached to the Newton polygons with a
//! single interior point (labels by affine symmetry type), plus the two
//! larger quivers for the remaining q-Painlevé symmetry types A1/A0 (catalog
//! data only; no generator words are provided for those). The extended
//! entries are the two frozen-vertex extensions of the A7' quiver used by
//! the tau-function dynamics; the 6-row variant also carries the compatible
//! skew form Λ used by the quantum tau algebra.

use crate::{ExtQuiver, Quiver, QuiverError};

/// A catalog entry: either a plain quiver or an extended (frozen) one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogEntry {
    Plain(Quiver),
    Extended(ExtQuiver),
}

impl CatalogEntry {
    pub fn as_plain(&self) -> Option<&Quiver> {
        match self {
            CatalogEntry::Plain(q) => Some(q),
            CatalogEntry::Extended(_) => None,
        }
    }

    pub fn as_extended(&self) -> Option<&ExtQuiver> {
        match self {
            CatalogEntry::Plain(_) => None,
            CatalogEntry::Extended(e) => Some(e),
        }
    }
}

pub fn catalog_labels() -> &'static [&'static str] {
    &[
        "A8", "A7p", "A7", "A6", "A5", "A4", "A3", "A2", "A1", "A0", "A7p-ext8", "A7p-ext6",
    ]
}

fn arrows(n: usize, list: &[(usize, usize, i64)]) -> Quiver {
    Quiver::from_arrows(n, list).expect("catalog arrow list is valid")
}

/// Unit-weight arrows.
fn simple(n: usize, list: &[(usize, usize)]) -> Quiver {
    let weighted: Vec<(usize, usize, i64)> = list.iter().map(|&(a, b)| (a, b, 1)).collect();
    arrows(n, &weighted)
}

pub fn catalog(label: &str) -> Result<CatalogEntry, QuiverError> {
    let entry = match label {
        // Triangle with triple arrows.
        "A8" => CatalogEntry::Plain(arrows(3, &[(1, 2, 3), (2, 3, 3), (3, 1, 3)])),
        // Square cycle of double arrows.
        "A7p" => CatalogEntry::Plain(arrows(
            4,
            &[(1, 2, 2), (2, 3, 2), (3, 4, 2), (4, 1, 2)],
        )),
        // The other 4-vertex quiver: mixed single/double/triple arrows.
        "A7" => CatalogEntry::Plain(arrows(
            4,
            &[(1, 2, 2), (2, 3, 1), (3, 4, 2), (4, 1, 3), (2, 4, 1), (1, 3, 1)],
        )),
        "A6" => CatalogEntry::Plain(arrows(
            5,
            &[
                (1, 2, 2),
                (2, 3, 2),
                (3, 4, 1),
                (3, 5, 1),
                (4, 1, 1),
                (5, 1, 1),
                (4, 5, 1),
                (2, 4, 1),
                (5, 2, 1),
            ],
        )),
        "A5" => CatalogEntry::Plain(simple(
            6,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 1),
                (1, 3),
                (3, 5),
                (5, 1),
                (2, 4),
                (4, 6),
                (6, 2),
            ],
        )),
        "A4" => CatalogEntry::Plain(simple(
            7,
            &[
                (2, 4),
                (4, 5),
                (5, 7),
                (7, 1),
                (4, 6),
                (7, 2),
                (6, 2),
                (1, 4),
                (2, 3),
                (5, 6),
                (6, 7),
                (1, 3),
                (3, 5),
                (3, 6),
                (6, 1),
            ],
        )),
        "A3" => CatalogEntry::Plain(simple(
            8,
            &[
                (1, 4),
                (2, 3),
                (3, 6),
                (4, 5),
                (5, 8),
                (6, 7),
                (7, 2),
                (8, 1),
                (1, 3),
                (3, 5),
                (5, 7),
                (7, 1),
                (2, 4),
                (4, 6),
                (6, 8),
                (8, 2),
            ],
        )),
        "A2" => CatalogEntry::Plain(simple(
            9,
            &[
                (5, 7),
                (8, 1),
                (2, 4),
                (6, 7),
                (6, 8),
                (6, 9),
                (9, 1),
                (9, 2),
                (9, 3),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 7),
                (7, 1),
                (1, 4),
                (4, 8),
                (7, 2),
                (1, 5),
                (4, 9),
                (7, 3),
                (1, 6),
                (5, 9),
                (8, 3),
                (2, 6),
                (5, 8),
                (8, 2),
                (2, 5),
            ],
        )),
        "A1" => CatalogEntry::Plain(simple(
            10,
            &[
                (6, 7),
                (8, 1),
                (2, 5),
                (5, 10),
                (7, 4),
                (9, 1),
                (9, 2),
                (9, 3),
                (9, 4),
                (3, 5),
                (3, 6),
                (10, 4),
                (4, 6),
                (6, 10),
                (4, 5),
                (10, 3),
                (10, 2),
                (10, 1),
                (5, 7),
                (7, 1),
                (1, 5),
                (5, 8),
                (7, 2),
                (1, 6),
                (5, 9),
                (7, 3),
                (8, 4),
                (6, 9),
                (8, 3),
                (6, 8),
                (8, 2),
                (2, 6),
            ],
        )),
        "A0" => CatalogEntry::Plain(simple(
            11,
            &[
                (8, 9),
                (10, 1),
                (2, 7),
                (9, 4),
                (11, 1),
                (11, 2),
                (11, 3),
                (11, 4),
                (3, 7),
                (3, 8),
                (4, 8),
                (4, 7),
                (7, 9),
                (9, 1),
                (1, 7),
                (7, 10),
                (9, 2),
                (1, 8),
                (7, 11),
                (9, 3),
                (10, 4),
                (8, 11),
                (10, 3),
                (8, 10),
                (10, 2),
                (2, 8),
                (5, 8),
                (5, 7),
                (9, 5),
                (10, 5),
                (11, 5),
                (6, 8),
                (6, 7),
                (9, 6),
                (10, 6),
                (11, 6),
            ],
        )),
        // A7' with four frozen directions carrying q^{±1/4}, Z^{±1/4}.
        "A7p-ext8" => {
            let base = base_a7p();
            CatalogEntry::Extended(
                ExtQuiver::new(
                    base,
                    vec![
                        vec![1, 0, 1, 0],
                        vec![1, -1, 1, -1],
                        vec![-1, 0, -1, 0],
                        vec![-1, 1, -1, 1],
                    ],
                    None,
                )
                .expect("catalog data is consistent"),
            )
        }
        // A7' with two frozen directions (q^{1/4}, Z^{1/4}) and the
        // compatible skew form Λ of the quantum tau algebra.
        "A7p-ext6" => {
            let base = base_a7p();
            CatalogEntry::Extended(
                ExtQuiver::new(
                    base,
                    vec![vec![2, 0, 2, 0], vec![2, -2, 2, -2]],
                    Some(vec![
                        vec![0, 0, 0, 1, 1, 0],
                        vec![0, 0, -1, 0, 1, -1],
                        vec![0, 1, 0, 0, 1, 0],
                        vec![-1, 0, 0, 0, 1, -1],
                        vec![-1, -1, -1, -1, 0, 0],
                        vec![0, 1, 0, 1, 0, 0],
                    ]),
                )
                .expect("catalog data is consistent"),
            )
        }
        other => return Err(QuiverError::UnknownLabel(other.to_string())),
    };
    Ok(entry)
}

fn base_a7p() -> Quiver {
    arrows(4, &[(1, 2, 2), (2, 3, 2), (3, 4, 2), (4, 1, 2)])
}
