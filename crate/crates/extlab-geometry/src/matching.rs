//! Maximum bipartite matching by augmenting paths (Kuhn). Left vertices are
//! processed in index order and adjacency lists scanned as given, so with
//! ascending adjacency the lowest-indexed right vertex wins ties; results
//! are deterministic.

/// adj[u] lists the right vertices reachable from left vertex u.
/// Returns the matched right vertex per left vertex.
pub fn maximum_matching(n_right: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut match_right: Vec<Option<usize>> = vec![None; n_right];
    for u in 0..adj.len() {
        let mut seen = vec![false; n_right];
        augment(u, adj, &mut seen, &mut match_right);
    }
    let mut match_left = vec![None; adj.len()];
    for (v, m) in match_right.iter().enumerate() {
        if let Some(u) = *m {
            match_left[u] = Some(v);
        }
    }
    match_left
}

fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if match_right[v].is_none() || augment(match_right[v].unwrap(), adj, seen, match_right) {
            match_right[v] = Some(u);
            return true;
        }
    }
    false
}
