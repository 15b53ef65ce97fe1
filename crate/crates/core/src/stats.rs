//! Statistics on plain integer sequences. Positions are 1-based.

/// `{i ∈ [n−1] : w_i > w_{i+1}}`.
pub fn descent_set<T: Ord>(w: &[T]) -> Vec<usize> {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn des<T: Ord>(w: &[T]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn maj<T: Ord>(w: &[T]) -> usize {
    descent_set(w).into_iter().sum()
}

/// Pairs `i < j` with `w_i > w_j`.
pub fn inv<T: Ord>(w: &[T]) -> usize {
    let mut count = 0;
    for (i, a) in w.iter().enumerate() {
        count += w[i + 1..].iter().filter(|b| a > *b).count();
    }
    count
}

/// Weak inversions: pairs `i < j` with `w_i ≥ w_j`.
pub fn imv<T: Ord>(w: &[T]) -> usize {
    let mut count = 0;
    for (i, a) in w.iter().enumerate() {
        count += w[i + 1..].iter().filter(|b| a >= *b).count();
    }
    count
}
