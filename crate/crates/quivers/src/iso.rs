use crate::{Perm, Quiver, QuiverError};

/// Brute-force quiver isomorphism with pruning, for n ≤ 11.
///
/// Returns σ with ε2_{σ(i)σ(j)} = ε1_{ij}, or `None` if the quivers are not
/// isomorphic. The search assigns images one vertex at a time and rejects a
/// partial assignment as soon as any matrix entry disagrees, which keeps the
/// worst case far below 11! in practice (degree multisets diverge early).
pub fn quiver_isomorphic(q1: &Quiver, q2: &Quiver) -> Result<Option<Perm>, QuiverError> {
    let n = q1.n();
    if n > 11 {
        return Err(QuiverError::TooLarge(n));
    }
    if n != q2.n() {
        return Ok(None);
    }
    // Cheap invariant: sorted row-sum multiset must agree.
    let mut s1 = q1.row_sums();
    let mut s2 = q2.row_sums();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(None);
    }
    let mut assigned = vec![0usize; n]; // assigned[i] = σ(i+1), 0 = unset
    let mut used = vec![false; n];
    if dfs(q1, q2, 0, &mut assigned, &mut used) {
        return Ok(Some(
            Perm::from_images(assigned).expect("search produced a bijection"),
        ));
    }
    Ok(None)
}

fn dfs(q1: &Quiver, q2: &Quiver, depth: usize, assigned: &mut [usize], used: &mut [bool]) -> bool {
    let n = q1.n();
    if depth == n {
        return true;
    }
    let i = depth + 1;
    for cand in 1..=n {
        if used[cand - 1] {
            continue;
        }
        // Consistency against everything already assigned (including self).
        let ok = (1..=i).all(|k| {
            let img_k = if k == i { cand } else { assigned[k - 1] };
            q2.eps(cand, img_k) == q1.eps(i, k) && q2.eps(img_k, cand) == q1.eps(k, i)
        });
        if !ok {
            continue;
        }
        assigned[depth] = cand;
        used[cand - 1] = true;
        if dfs(q1, q2, depth + 1, assigned, used) {
            return true;
        }
        assigned[depth] = 0;
        used[cand - 1] = false;
    }
    false
}
