//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's search or counting code.

#![allow(dead_code)]

use vincular::{Permutation, VincularPattern};

/// Every permutation of `[n]` by repeated insertion, no ordering assumed.
pub fn perms(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for v in 1..=n as u32 {
        let mut next = Vec::with_capacity(out.len() * v as usize);
        for p in &out {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Occurrences of `pattern` in `host` by trying every increasing tuple of
/// positions.
pub fn naive_count(pattern: &VincularPattern, host: &[u32]) -> usize {
    let letters = pattern.underlying().into_letters();
    let k = letters.len();
    // Positions that must be adjacent to their successor.
    let mut glued = vec![false; k];
    let mut i = 0;
    for &len in pattern.type_signature() {
        glued[i..i + len - 1].fill(true);
        i += len;
    }
    let mut count = 0;
    let mut pos = vec![0usize; k];
    fn rec(
        depth: usize,
        start: usize,
        pos: &mut Vec<usize>,
        host: &[u32],
        letters: &[u32],
        glued: &[bool],
        count: &mut usize,
    ) {
        let k = letters.len();
        if depth == k {
            let iso = (0..k).all(|a| {
                (0..k).all(|b| (host[pos[a]] < host[pos[b]]) == (letters[a] < letters[b]))
            });
            let adjacent = (0..k - 1).all(|a| !glued[a] || pos[a + 1] == pos[a] + 1);
            if iso && adjacent {
                *count += 1;
            }
            return;
        }
        for p in start..host.len() {
            pos[depth] = p;
            rec(depth + 1, p + 1, pos, host, letters, glued, count);
        }
    }
    rec(0, 0, &mut pos, host, &letters, &glued, &mut count);
    count
}

pub fn naive_avoids(set: &[VincularPattern], host: &[u32]) -> bool {
    set.iter().all(|p| naive_count(p, host) == 0)
}

/// Naive `S_n(P)` in lexicographic order.
pub fn naive_avoiders(set: &[VincularPattern], n: usize) -> Vec<Permutation> {
    let mut out: Vec<Vec<u32>> = perms(n)
        .into_iter()
        .filter(|p| naive_avoids(set, p))
        .collect();
    out.sort();
    out.into_iter()
        .map(|p| Permutation::new(p).unwrap())
        .collect()
}

/// Set partitions of `[n]` as block lists, by placing each element into an
/// existing block or a new one.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = vec![Vec::new()];
    for x in 1..=n as u32 {
        let mut next = Vec::new();
        for blocks in &out {
            for b in 0..blocks.len() {
                let mut c: Vec<Vec<u32>> = blocks.clone();
                c[b].push(x);
                next.push(c);
            }
            let mut c = blocks.clone();
            c.push(vec![x]);
            next.push(c);
        }
        out = next;
    }
    out
}

/// Blocks taken by decreasing minimum have decreasing maxima.
pub fn strongly_monotone(blocks: &[Vec<u32>]) -> bool {
    let mut spans: Vec<(u32, u32)> = blocks
        .iter()
        .map(|b| (*b.iter().min().unwrap(), *b.iter().max().unwrap()))
        .collect();
    spans.sort();
    spans.windows(2).all(|w| w[0].1 < w[1].1)
}

/// No two blocks with `min A < min B < max A < max B`.
pub fn non_overlapping(blocks: &[Vec<u32>]) -> bool {
    let spans: Vec<(u32, u32)> = blocks
        .iter()
        .map(|b| (*b.iter().min().unwrap(), *b.iter().max().unwrap()))
        .collect();
    spans
        .iter()
        .all(|a| spans.iter().all(|b| !(a.0 < b.0 && b.0 < a.1 && a.1 < b.1)))
}

pub fn bell(n: usize) -> u64 {
    set_partitions(n).len() as u64
}

/// Balanced `{u, d}` words of length `2n` never dipping below zero, as
/// strings, by filtering all `2^(2n)` words.
pub fn dyck_strings(n: usize) -> Vec<String> {
    let len = 2 * n;
    let mut out = Vec::new();
    for mask in 0u64..1 << len {
        let mut h = 0i32;
        let mut ok = true;
        let mut s = String::with_capacity(len);
        for i in 0..len {
            if mask & (1 << (len - 1 - i)) == 0 {
                h += 1;
                s.push('u');
            } else {
                h -= 1;
                s.push('d');
            }
            if h < 0 {
                ok = false;
                break;
            }
        }
        if ok && h == 0 {
            out.push(s);
        }
    }
    out
}

pub fn catalan(n: usize) -> u64 {
    dyck_strings(n).len() as u64
}

/// Compositions of `n` as `a+b+c` strings.
pub fn composition_strings(n: usize) -> Vec<String> {
    fn rec(left: usize, parts: &mut Vec<usize>, out: &mut Vec<String>) {
        if left == 0 {
            let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            out.push(s.join("+"));
            return;
        }
        for p in 1..=left {
            parts.push(p);
            rec(left - p, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Involutions in `S_n`.
pub fn involution_count(n: usize) -> u64 {
    perms(n)
        .iter()
        .filter(|p| {
            p.iter()
                .enumerate()
                .all(|(i, &x)| p[x as usize - 1] as usize == i + 1)
        })
        .count() as u64
}

/// Motzkin numbers by counting paths of `n` steps in `{U, F, D}` staying
/// weakly above zero and ending at zero.
pub fn motzkin(n: usize) -> u64 {
    let mut heights = vec![0u64; n + 2];
    heights[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u64; n + 2];
        for h in 0..=n {
            let c = heights[h];
            if c == 0 {
                continue;
            }
            next[h] += c;
            next[h + 1] += c;
            if h > 0 {
                next[h - 1] += c;
            }
        }
        heights = next;
    }
    heights[0]
}

pub fn pattern_list(text: &str) -> Vec<VincularPattern> {
    text.split(',').map(|t| t.parse().unwrap()).collect()
}
