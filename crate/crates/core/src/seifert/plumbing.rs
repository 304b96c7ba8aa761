//! Plumbing-graph invariants and the translation between the fractured
//! spectrum and the full Hodge-type spectrum.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exact::rational::{rat_int, Rational};
use crate::hvs::spectrum::Spectrum;
use crate::seifert::{Result, SeifertError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSpec {
    pub genus: usize,
}

/// A decorated plumbing graph: vertices carry genus, edges may repeat
/// (each independent cycle counts), arrowheads mark link components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingGraph {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<(usize, usize)>,
    pub arrowheads: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlumbingInvariants {
    /// Number of independent cycles.
    pub c: usize,
    /// Total genus.
    pub g: usize,
    /// Number of link components (arrowheads).
    pub n: usize,
    /// First Betti number of the plumbed manifold: `2g + c`.
    pub b1_m: usize,
}

/// Computes `(c, g, n, b1)` of a connected plumbing graph.
pub fn plumbing_invariants(graph: &PlumbingGraph) -> Result<PlumbingInvariants> {
    let v = graph.vertices.len();
    if v == 0 {
        return Err(SeifertError::Disconnected);
    }
    for &(a, b) in &graph.edges {
        if a >= v || b >= v {
            return Err(SeifertError::BadGraphIndex(a.max(b)));
        }
    }
    for &a in &graph.arrowheads {
        if a >= v {
            return Err(SeifertError::BadGraphIndex(a));
        }
    }
    // connectivity by union-find
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in &graph.edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let root = find(&mut parent, 0);
    if (0..v).any(|x| find(&mut parent, x) != root) {
        return Err(SeifertError::Disconnected);
    }
    let c = graph.edges.len() + 1 - v;
    let g = graph.vertices.iter().map(|x| x.genus).sum();
    let n = graph.arrowheads.len();
    Ok(PlumbingInvariants { c, g, n, b1_m: 2 * g + c })
}

/// `Sp_full = Sp_frct + g * {1, 2} + c * {2}`.
pub fn mhs_spectrum(sp_frct: &Spectrum, c: usize, g: usize) -> Spectrum {
    let mut extra = Spectrum::new();
    extra.insert(Rational::one(), g).expect("1 is in range");
    extra.insert(rat_int(2), g + c).expect("2 is in range");
    sp_frct.union(&extra)
}

/// The integral multiplicities the translated spectrum must carry:
/// `c + g` at 2 and `c + g + n - 1` at 1.
pub fn expected_mhs_integral(c: usize, g: usize, n: usize) -> (usize, usize) {
    (c + g + n.saturating_sub(1), c + g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn graph_examples() {
        // a path (tree) with genus 0 and one arrowhead
        let tree = PlumbingGraph {
            vertices: vec![VertexSpec { genus: 0 }, VertexSpec { genus: 0 }],
            edges: vec![(0, 1)],
            arrowheads: vec![0],
        };
        assert_eq!(
            plumbing_invariants(&tree).unwrap(),
            PlumbingInvariants { c: 0, g: 0, n: 1, b1_m: 0 }
        );

        // a 3-cycle with two arrowheads
        let cycle = PlumbingGraph {
            vertices: vec![VertexSpec { genus: 0 }; 3],
            edges: vec![(0, 1), (1, 2), (2, 0)],
            arrowheads: vec![0, 1],
        };
        assert_eq!(
            plumbing_invariants(&cycle).unwrap(),
            PlumbingInvariants { c: 1, g: 0, n: 2, b1_m: 1 }
        );

        // single vertex of genus 2
        let vertex = PlumbingGraph {
            vertices: vec![VertexSpec { genus: 2 }],
            edges: vec![],
            arrowheads: vec![0],
        };
        assert_eq!(
            plumbing_invariants(&vertex).unwrap(),
            PlumbingInvariants { c: 0, g: 2, n: 1, b1_m: 4 }
        );

        // disconnected graphs are rejected
        let split = PlumbingGraph {
            vertices: vec![VertexSpec { genus: 0 }; 2],
            edges: vec![],
            arrowheads: vec![],
        };
        assert!(matches!(plumbing_invariants(&split), Err(SeifertError::Disconnected)));
    }

    #[test]
    fn spectrum_translation() {
        let mut sp = Spectrum::new();
        sp.insert(rat_int(1), 1).unwrap();
        let out = mhs_spectrum(&sp, 0, 1);
        assert_eq!(out.entries(), vec![rat_int(1), rat_int(1), rat_int(2)]);

        assert!(mhs_spectrum(&Spectrum::new(), 0, 0).is_empty());

        let mut sp = Spectrum::new();
        sp.insert(rat(1, 2), 1).unwrap();
        sp.insert(rat(3, 2), 1).unwrap();
        let out = mhs_spectrum(&sp, 2, 0);
        assert_eq!(out.entries(), vec![rat(1, 2), rat(3, 2), rat_int(2), rat_int(2)]);
    }
}
