//! Suffix array construction by induced sorting (SA-IS).
//!
//! Works over arbitrary integer alphabets so the same core serves the
//! global byte text and the small-alphabet pair strings used by the
//! per-block suffix sorts.

const EMPTY: u32 = u32::MAX;

/// Suffix array of a byte string.
pub fn suffix_array_bytes(text: &[u8]) -> Vec<u32> {
    let s: Vec<u32> = text.iter().map(|&b| b as u32 + 1).collect();
    suffix_array_u32(&s)
}

/// Suffix array of an integer string (values need not be small, but the
/// construction allocates buckets of size max+2).
pub fn suffix_array_u32(text: &[u32]) -> Vec<u32> {
    if text.is_empty() {
        return Vec::new();
    }
    // Append a unique smallest sentinel; every input value is shifted so the
    // sentinel slot 0 stays unique.
    let mut s: Vec<u32> = Vec::with_capacity(text.len() + 1);
    s.extend(text.iter().map(|&c| c.checked_add(1).expect("symbol too large")));
    s.push(0);
    let k = *s.iter().max().unwrap() as usize + 1;
    let sa = sais(&s, k);
    // Drop the sentinel suffix (always first).
    sa[1..].to_vec()
}

/// Core SA-IS over `s`, whose last symbol is a unique minimum.
fn sais(s: &[u32], k: usize) -> Vec<u32> {
    let n = s.len();
    let mut sa = vec![EMPTY; n];
    if n == 1 {
        sa[0] = 0;
        return sa;
    }

    // S/L types; the sentinel is S-type.
    let mut is_s = vec![false; n];
    is_s[n - 1] = true;
    for i in (0..n - 1).rev() {
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
    }
    let lms = |i: usize| i > 0 && is_s[i] && !is_s[i - 1];

    let mut bucket = vec![0u32; k];
    for &c in s {
        bucket[c as usize] += 1;
    }

    // First round: seed with LMS positions in any order, induce to sort the
    // LMS substrings.
    let lms_positions: Vec<u32> = (0..n).filter(|&i| lms(i)).map(|i| i as u32).collect();
    place_lms(&mut sa, s, &bucket, &lms_positions);
    induce(&mut sa, s, &is_s, &bucket);

    // Name the LMS substrings in their induced (sorted) order.
    let m = lms_positions.len();
    let mut name_of = vec![EMPTY; n];
    let mut names = 0u32;
    let mut prev = EMPTY;
    for &p in sa.iter() {
        let p = p as usize;
        if !lms(p) {
            continue;
        }
        if prev == EMPTY || !lms_substrings_equal(s, &lms, prev as usize, p) {
            names += 1;
        }
        name_of[p] = names - 1;
        prev = p as u32;
    }

    // Order of LMS suffixes: direct if names are unique, else recurse on the
    // reduced string of names in text order.
    let sorted_lms: Vec<u32> = if names as usize == m {
        let mut order = vec![0u32; m];
        let mut idx = 0;
        for i in 0..n {
            if lms(i) {
                order[name_of[i] as usize] = i as u32;
                idx += 1;
            }
        }
        debug_assert_eq!(idx, m);
        order
    } else {
        let reduced: Vec<u32> = (0..n).filter(|&i| lms(i)).map(|i| name_of[i]).collect();
        let sub = sais(&reduced, names as usize);
        sub.iter().map(|&r| lms_positions[r as usize]).collect()
    };

    // Final round: seed with the fully sorted LMS suffixes and induce.
    sa.fill(EMPTY);
    place_lms(&mut sa, s, &bucket, &sorted_lms);
    induce(&mut sa, s, &is_s, &bucket);
    sa
}

/// Puts LMS positions at their bucket tails, preserving the given order.
fn place_lms(sa: &mut [u32], s: &[u32], bucket: &[u32], lms_sorted: &[u32]) {
    let mut tail = bucket_tails(bucket);
    for &p in lms_sorted.iter().rev() {
        let c = s[p as usize] as usize;
        tail[c] -= 1;
        sa[tail[c] as usize] = p;
    }
}

fn induce(sa: &mut [u32], s: &[u32], is_s: &[bool], bucket: &[u32]) {
    let n = s.len();
    // L-type pass, left to right.
    let mut head = bucket_heads(bucket);
    for i in 0..n {
        let j = sa[i];
        if j != EMPTY && j > 0 && !is_s[j as usize - 1] {
            let c = s[j as usize - 1] as usize;
            sa[head[c] as usize] = j - 1;
            head[c] += 1;
        }
    }
    // S-type pass, right to left; overwrites the seeded entries.
    let mut tail = bucket_tails(bucket);
    for i in (0..n).rev() {
        let j = sa[i];
        if j != EMPTY && j > 0 && is_s[j as usize - 1] {
            let c = s[j as usize - 1] as usize;
            tail[c] -= 1;
            sa[tail[c] as usize] = j - 1;
        }
    }
}

fn bucket_heads(bucket: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(bucket.len());
    let mut sum = 0;
    for &b in bucket {
        out.push(sum);
        sum += b;
    }
    out
}

fn bucket_tails(bucket: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(bucket.len());
    let mut sum = 0;
    for &b in bucket {
        sum += b;
        out.push(sum);
    }
    out
}

/// Two LMS substrings are equal iff they match symbol-for-symbol and end at
/// their next LMS position simultaneously.
fn lms_substrings_equal(s: &[u32], lms: &dyn Fn(usize) -> bool, a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    let mut d = 0;
    loop {
        let end_a = d > 0 && lms(a + d);
        let end_b = d > 0 && lms(b + d);
        if end_a && end_b {
            return true;
        }
        if end_a != end_b || s[a + d] != s[b + d] {
            return false;
        }
        d += 1;
    }
}
