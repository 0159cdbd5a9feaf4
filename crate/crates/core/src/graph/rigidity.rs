use super::{distance_count_matrix, Graph};
use crate::error::{Error, Result};

/// Default node-count cap for the brute-force searches over `S_n`.
pub const DEFAULT_CAP: usize = 8;

/// True iff the rows of the distance-count matrix are pairwise distinct.
pub fn is_geometrically_rigid(g: &Graph) -> bool {
    !distance_count_matrix(g).has_duplicate_rows()
}

/// True iff the identity is the only automorphism. Brute force over all
/// permutations, so `n` must not exceed `cap`.
pub fn is_rigid(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.n();
    if n > cap {
        return Err(Error::Capacity {
            what: "rigidity check",
            n,
            cap,
        });
    }
    let arcs: Vec<(usize, usize)> = g.arcs().collect();
    let out_deg: Vec<usize> = (0..n).map(|u| g.successors(u).len()).collect();
    let in_deg: Vec<usize> = (0..n).map(|u| g.predecessors(u).len()).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(!search_automorphism(
        g, &arcs, &out_deg, &in_deg, 0, &mut image, &mut used, false,
    ))
}

/// Depth-first extension of a partial node map; returns true as soon as a
/// non-identity automorphism is found.
#[allow(clippy::too_many_arguments)]
fn search_automorphism(
    g: &Graph,
    arcs: &[(usize, usize)],
    out_deg: &[usize],
    in_deg: &[usize],
    next: usize,
    image: &mut [usize],
    used: &mut [bool],
    moved: bool,
) -> bool {
    let n = g.n();
    if next == n {
        return moved && arcs.iter().all(|&(u, v)| g.has_arc(image[u], image[v]));
    }
    for target in 0..n {
        if used[target] || out_deg[target] != out_deg[next] || in_deg[target] != in_deg[next] {
            continue;
        }
        image[next] = target;
        // arcs among already-mapped nodes must be preserved
        let consistent = (0..next).all(|w| {
            g.has_arc(next, w) == g.has_arc(target, image[w])
                && g.has_arc(w, next) == g.has_arc(image[w], target)
        });
        if !consistent {
            continue;
        }
        used[target] = true;
        let found = search_automorphism(
            g,
            arcs,
            out_deg,
            in_deg,
            next + 1,
            image,
            used,
            moved || target != next,
        );
        used[target] = false;
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rigid3_is_rigid_but_not_geometrically() {
        let g = Graph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap();
        assert!(is_rigid(&g, DEFAULT_CAP).unwrap());
        assert!(!is_geometrically_rigid(&g));
    }

    #[test]
    fn edge_has_swap_automorphism() {
        let g = Graph::undirected(2, [(0, 1)]).unwrap();
        assert!(!is_rigid(&g, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn single_node_is_rigid() {
        let g = Graph::empty(1);
        assert!(is_rigid(&g, DEFAULT_CAP).unwrap());
        assert!(is_geometrically_rigid(&g));
    }

    #[test]
    fn capacity() {
        let g = Graph::empty(9);
        assert!(matches!(is_rigid(&g, 8), Err(Error::Capacity { .. })));
        assert!(is_rigid(&g, 9).is_ok());
    }
}
