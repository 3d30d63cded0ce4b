//! Hard-coded catalogs of 1-environments of edges, triplets and stars.
//!
//! Each entry is an adjacency list transcribed from the corresponding
//! drawing; the completeness of the catalogs is enforced by tests that
//! classify every environment of many random 3-regular graphs.

use super::{marked_isomorphic, Graph, MarkedGraph};
use crate::{Error, Result};

/// Which local support a catalog describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvKind {
    Edge,
    Triplet,
    Star,
}

impl EnvKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EnvKind::Edge => "edge",
            EnvKind::Triplet => "triplet",
            EnvKind::Star => "star",
        }
    }
}

/// One catalog entry: a marked graph plus a short structural signature used
/// as a cheap pre-filter during classification.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub env: MarkedGraph,
    pub signature: (usize, usize, Vec<usize>),
}

impl CatalogEntry {
    fn new(
        name: &'static str,
        n: usize,
        marked: &[usize],
        pairs: &[(usize, usize)],
    ) -> CatalogEntry {
        let graph = Graph::from_edge_list(n, pairs).expect("catalog entries are simple graphs");
        let env = MarkedGraph::new(graph, marked.to_vec());
        let signature = signature_of(&env);
        CatalogEntry {
            name,
            env,
            signature,
        }
    }
}

fn signature_of(env: &MarkedGraph) -> (usize, usize, Vec<usize>) {
    let mut degrees: Vec<usize> = (0..env.graph.n()).map(|v| env.graph.degree(v)).collect();
    degrees.sort_unstable();
    (env.graph.n(), env.graph.edge_count(), degrees)
}

/// An ordered list of pairwise non-equivalent 1-environments of one support
/// kind. Entry 0 is always the tree environment.
#[derive(Debug, Clone)]
pub struct EnvironmentCatalog {
    pub kind: EnvKind,
    pub entries: Vec<CatalogEntry>,
}

impl EnvironmentCatalog {
    /// Index of the unique entry equivalent to `env`, or [`Error::NoMatch`].
    pub fn classify(&self, env: &MarkedGraph) -> Result<usize> {
        let sig = signature_of(env);
        for (i, entry) in self.entries.iter().enumerate() {
            if entry.signature == sig && marked_isomorphic(env, &entry.env, self.kind) {
                return Ok(i);
            }
        }
        Err(Error::NoMatch)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Index of the catalog entry equivalent to `env`.
pub fn classify_environment(env: &MarkedGraph, catalog: &EnvironmentCatalog) -> Result<usize> {
    catalog.classify(env)
}

/// The three 1-environments of an edge in a 3-regular graph, by the number of
/// triangles through the marked edge (0, 1, 2).
pub fn edge_catalog() -> EnvironmentCatalog {
    let entries = vec![
        CatalogEntry::new("G1", 6, &[0, 1], &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
        CatalogEntry::new("G2", 5, &[0, 1], &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]),
        CatalogEntry::new("G3", 4, &[0, 1], &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
    ];
    EnvironmentCatalog {
        kind: EnvKind::Edge,
        entries,
    }
}

/// The eleven 1-environments of a triplet (c, j, k) = (0, 1, 2) in a
/// 3-regular graph.
pub fn triplet_catalog() -> EnvironmentCatalog {
    let entries = vec![
        // The tree: no coincidences among the outer neighbors.
        CatalogEntry::new(
            "G1",
            8,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7)],
        ),
        // Triangle through c and j.
        CatalogEntry::new(
            "G2",
            7,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 5), (2, 6)],
        ),
        // Two triangles sharing the edge from c to its third neighbor.
        CatalogEntry::new(
            "G3",
            6,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 4), (2, 5)],
        ),
        // As G3 with the remaining neighbors of j and k identified.
        CatalogEntry::new(
            "G4",
            5,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 4), (2, 4)],
        ),
        // j and k share both remaining neighbors; the third neighbor of c
        // dangles from c.
        CatalogEntry::new(
            "G5",
            6,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (1, 5), (2, 5)],
        ),
        // Triangle through c and j plus a square through j and k.
        CatalogEntry::new(
            "G6",
            6,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5)],
        ),
        // A single square through j and k.
        CatalogEntry::new(
            "G7",
            7,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (1, 5), (2, 6)],
        ),
        // The marked triplet itself is a triangle.
        CatalogEntry::new(
            "G8",
            6,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)],
        ),
        // Marked triangle plus a second triangle through c and j.
        CatalogEntry::new(
            "G9",
            5,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4)],
        ),
        // The complete graph K4.
        CatalogEntry::new(
            "G10",
            4,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        ),
        // Marked triangle plus a crossed square on j, k; the third neighbor
        // of c dangles from c.
        CatalogEntry::new(
            "G11",
            5,
            &[0, 1, 2],
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 4)],
        ),
    ];
    EnvironmentCatalog {
        kind: EnvKind::Triplet,
        entries,
    }
}

/// The eight 1-environments of a star (c; j, k, l) = (0; 1, 2, 3) in a
/// triangle-free 3-regular graph.
pub fn star_catalog() -> EnvironmentCatalog {
    let entries = vec![
        // The tree.
        CatalogEntry::new(
            "G1",
            10,
            &[0, 1, 2, 3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (3, 8),
                (3, 9),
            ],
        ),
        // One square: one pair of neighbors shares one further vertex.
        CatalogEntry::new(
            "G2",
            9,
            &[0, 1, 2, 3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (2, 4),
                (3, 4),
                (1, 5),
                (1, 6),
                (2, 7),
                (3, 8),
            ],
        ),
        // A twin of c adjacent to all three neighbors.
        CatalogEntry::new(
            "G3",
            8,
            &[0, 1, 2, 3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        ),
        // Two squares through the same pair of neighbors.
        CatalogEntry::new(
            "G4",
            8,
            &[0, 1, 2, 3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (2, 4),
                (3, 4),
                (2, 5),
                (3, 5),
                (1, 6),
                (1, 7),
            ],
        ),
        // Two squares through two different pairs of neighbors.
        CatalogEntry::new(
            "G5",
            8,
            &[0, 1, 2, 3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (1, 5),
                (3, 5),
                (2, 6),
                (3, 7),
            ],
        ),
        // A twin plus one extra square.
        CatalogEntry::new(
            "G6",
            7,
            &[0, 1, 2, 3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (2, 5),
                (3, 5),
                (1, 6),
            ],
        ),
        // Two twins: the complete bipartite graph K_{3,3}.
        CatalogEntry::new(
            "G7",
            6,
            &[0, 1, 2, 3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (1, 5),
                (2, 5),
                (3, 5),
            ],
        ),
        // All three pairs of neighbors carry a square.
        CatalogEntry::new(
            "G8",
            7,
            &[0, 1, 2, 3],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (1, 5),
                (3, 5),
                (2, 6),
                (3, 6),
            ],
        ),
    ];
    EnvironmentCatalog {
        kind: EnvKind::Star,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        edge_tree, p_environment, random_three_regular, star_tree, triplet_tree, triplets,
    };

    #[test]
    fn catalog_sizes() {
        assert_eq!(edge_catalog().len(), 3);
        assert_eq!(triplet_catalog().len(), 11);
        assert_eq!(star_catalog().len(), 8);
    }

    #[test]
    fn entries_pairwise_inequivalent() {
        for cat in [edge_catalog(), triplet_catalog(), star_catalog()] {
            for i in 0..cat.len() {
                for j in i + 1..cat.len() {
                    assert!(
                        !marked_isomorphic(&cat.entries[i].env, &cat.entries[j].env, cat.kind),
                        "{} entries {} and {} are equivalent",
                        cat.kind.as_str(),
                        cat.entries[i].name,
                        cat.entries[j].name
                    );
                }
            }
        }
    }

    #[test]
    fn first_entry_is_the_tree() {
        assert!(marked_isomorphic(
            &edge_catalog().entries[0].env,
            &edge_tree(1),
            EnvKind::Edge
        ));
        assert!(marked_isomorphic(
            &triplet_catalog().entries[0].env,
            &triplet_tree(1),
            EnvKind::Triplet
        ));
        assert!(marked_isomorphic(
            &star_catalog().entries[0].env,
            &star_tree(1),
            EnvKind::Star
        ));
    }

    #[test]
    fn known_classifications() {
        let k4 = Graph::complete(4);
        let cat = triplet_catalog();
        let env = p_environment(&k4, &[0, 1, 2], 1);
        assert_eq!(
            cat.classify(&env).unwrap(),
            9,
            "K4 triplet environment is G10"
        );

        let k33 = Graph::complete_bipartite(3, 3);
        let env = p_environment(&k33, &[0, 3, 4], 1);
        assert_eq!(
            cat.classify(&env).unwrap(),
            4,
            "K33 triplet environment is G5"
        );

        let star_cat = star_catalog();
        let env = p_environment(&k33, &[0, 3, 4, 5], 1);
        assert_eq!(
            star_cat.classify(&env).unwrap(),
            6,
            "K33 star environment is G7"
        );

        // Petersen has girth 5: all 1-environments are trees.
        let pet = Graph::petersen();
        let edge_cat = edge_catalog();
        let env = p_environment(&pet, &[0, 1], 1);
        assert_eq!(edge_cat.classify(&env).unwrap(), 0);

        // The cube graph: every pair of star neighbors shares a second
        // vertex, which is G8.
        let cube = Graph::from_edge_list(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        let env = p_environment(&cube, &[0, 1, 3, 4], 1);
        assert_eq!(
            star_cat.classify(&env).unwrap(),
            7,
            "cube star environment is G8"
        );
    }

    #[test]
    fn no_match_is_reported() {
        // A path is not a valid edge environment of any 3-regular graph.
        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let env = MarkedGraph::new(path, vec![0, 1]);
        assert!(matches!(edge_catalog().classify(&env), Err(Error::NoMatch)));
    }

    #[test]
    fn catalogs_complete_on_random_cubic_graphs() {
        let edge_cat = edge_catalog();
        let triplet_cat = triplet_catalog();
        let star_cat = star_catalog();
        let mut graphs = 0;
        for n in (4..=20).step_by(2) {
            for seed in 0..13 {
                let g = random_three_regular(n, seed ^ (n as u64) << 8).unwrap();
                graphs += 1;
                for &(u, v) in g.edges() {
                    let env = p_environment(&g, &[u, v], 1);
                    edge_cat.classify(&env).expect("edge catalog is complete");
                }
                for t in triplets(&g) {
                    let env = p_environment(&g, &[t.c, t.j, t.k], 1);
                    triplet_cat
                        .classify(&env)
                        .expect("triplet catalog is complete");
                }
                if !g.has_triangle() {
                    for c in 0..g.n() {
                        let nbrs = g.neighbors(c);
                        let s = [c, nbrs[0], nbrs[1], nbrs[2]];
                        let env = p_environment(&g, &s, 1);
                        star_cat.classify(&env).expect("star catalog is complete");
                    }
                }
            }
        }
        assert!(graphs >= 100);
    }
}
