//! Permutation helpers shared by the brute-force enumerators.

/// Advances `v` to its lexicographic successor. Returns `false` (leaving `v`
/// sorted ascending) once the last permutation has been passed.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `start..start + n` in lexicographic order.
pub fn all_permutations(n: usize, start: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (start..start + n).collect();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Checks that `values` is a permutation of `start..start + values.len()`.
pub fn is_permutation(values: &[usize], start: usize) -> bool {
    let n = values.len();
    let mut seen = vec![false; n];
    for &v in values {
        if v < start || v >= start + n || seen[v - start] {
            return false;
        }
        seen[v - start] = true;
    }
    true
}

/// Inverse of a 0-based permutation.
pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}
