//! Enumeration of same-color permutations and of shuffle coset representatives.

/// All permutations of `0..k` in lexicographic order, each with its sign.
pub fn permutations(k: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        out.push((p.clone(), sign(&p)));
        if !next_permutation(&mut p) {
            break;
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn sign(p: &[usize]) -> i32 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Calls `f(perm, sign)` for every element of `S_{b_1} x ... x S_{b_m}` acting on
/// consecutive blocks of sizes `blocks`; `perm[i]` is the image of position `i`.
pub fn for_each_block_permutation<F: FnMut(&[usize], i32)>(blocks: &[usize], mut f: F) {
    let per_block: Vec<Vec<(Vec<usize>, i32)>> = blocks.iter().map(|&k| permutations(k)).collect();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, &k| {
            let o = *acc;
            *acc += k;
            Some(o)
        })
        .collect();
    let total: usize = blocks.iter().sum();
    let mut idx = vec![0usize; blocks.len()];
    let mut perm = vec![0usize; total];
    loop {
        let mut s = 1;
        for (b, &i) in idx.iter().enumerate() {
            let (p, sg) = &per_block[b][i];
            s *= sg;
            for (t, &x) in p.iter().enumerate() {
                perm[offsets[b] + t] = offsets[b] + x;
            }
        }
        f(&perm, s);
        // odometer
        let mut b = 0;
        loop {
            if b == blocks.len() {
                return;
            }
            idx[b] += 1;
            if idx[b] < per_block[b].len() {
                break;
            }
            idx[b] = 0;
            b += 1;
        }
    }
}

/// All `k`-element subsets of `0..m` as increasing vectors, lexicographic.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..m {
            if m - s < k - cur.len() {
                break;
            }
            cur.push(s);
            rec(s + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// Shuffle coset representatives of `S_{k+l} / (S_k x S_l)` per color: for every
/// color, the set of indices (0-based, within the color) assigned to the left factor.
pub fn for_each_shuffle<F: FnMut(&[Vec<usize>])>(left: &[usize], right: &[usize], mut f: F) {
    let choices: Vec<Vec<Vec<usize>>> = left.iter().zip(right).map(|(&k, &l)| subsets(k + l, k)).collect();
    let mut idx = vec![0usize; choices.len()];
    let mut pick: Vec<Vec<usize>> = choices.iter().map(|c| c[0].clone()).collect();
    loop {
        for (b, &i) in idx.iter().enumerate() {
            pick[b].clone_from(&choices[b][i]);
        }
        f(&pick);
        let mut b = 0;
        loop {
            if b == choices.len() {
                return;
            }
            idx[b] += 1;
            if idx[b] < choices[b].len() {
                break;
            }
            idx[b] = 0;
            b += 1;
        }
    }
}
