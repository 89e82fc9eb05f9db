//! Ranking and unranking of sorted multisets over `0..n`.
//!
//! A size-`m` multiset maps to a strictly increasing combination over
//! `0..n+m-1` by adding the position to each element; ranks are lexicographic
//! over those combinations. Prefix-sum tables make ranking O(m).

#[derive(Debug, Clone)]
pub struct MultisetCodec {
    n: usize,
    m: usize,
    universe: usize, // n + m - 1 (combination alphabet size)
    count: u64,
    /// prefix[x * m + t] = sum over y < x of C(universe - 1 - y, t)
    prefix: Vec<u64>,
}

impl MultisetCodec {
    pub fn new(n: usize, m: usize) -> MultisetCodec {
        assert!(n >= 1);
        if m == 0 {
            return MultisetCodec {
                n,
                m,
                universe: 0,
                count: 1,
                prefix: Vec::new(),
            };
        }
        let universe = n + m - 1;
        let binom = binomial_table(universe);
        let mut prefix = vec![0u64; (universe + 1) * m];
        for t in 0..m {
            let mut acc = 0u64;
            for x in 0..=universe {
                prefix[x * m + t] = acc;
                if x < universe {
                    acc += binom.get(universe - 1 - x, t);
                }
            }
        }
        let count = binom.get(universe, m);
        MultisetCodec {
            n,
            m,
            universe,
            count,
            prefix,
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Rank of a sorted multiset.
    pub fn rank(&self, multiset: &[usize]) -> u64 {
        debug_assert_eq!(multiset.len(), self.m);
        debug_assert!(multiset.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(multiset.iter().all(|&a| a < self.n));
        let mut rank = 0u64;
        let mut prev = 0usize;
        for (i, &a) in multiset.iter().enumerate() {
            let b = a + i;
            let t = self.m - 1 - i;
            rank += self.prefix[b * self.m + t] - self.prefix[prev * self.m + t];
            prev = b + 1;
        }
        rank
    }

    /// Inverse of [`rank`]; writes into `out` (length m).
    pub fn unrank(&self, mut rank: u64, out: &mut Vec<usize>) {
        out.clear();
        debug_assert!(rank < self.count);
        let mut prev = 0usize;
        for i in 0..self.m {
            let t = self.m - 1 - i;
            let mut b = prev;
            loop {
                let skipped = self.prefix[(b + 1) * self.m + t] - self.prefix[prev * self.m + t];
                if skipped > rank {
                    break;
                }
                b += 1;
                debug_assert!(b < self.universe);
            }
            rank -= self.prefix[b * self.m + t] - self.prefix[prev * self.m + t];
            out.push(b - i);
            prev = b + 1;
        }
    }

    /// Visits every multiset in rank order without per-step unranking.
    pub fn for_each(&self, mut f: impl FnMut(u64, &[usize])) {
        if self.m == 0 {
            f(0, &[]);
            return;
        }
        let mut ms = vec![0usize; self.m];
        let mut rank = 0u64;
        loop {
            f(rank, &ms);
            rank += 1;
            // lexicographic odometer: bump the last element that can grow
            let mut i = self.m;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if ms[i] + 1 < self.n {
                    ms[i] += 1;
                    for j in (i + 1)..self.m {
                        ms[j] = ms[i];
                    }
                    break;
                }
            }
        }
    }
}

struct Binomials {
    width: usize,
    values: Vec<u64>,
}

impl Binomials {
    fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.values[n * self.width + k]
        }
    }
}

fn binomial_table(max_n: usize) -> Binomials {
    let width = max_n + 1;
    let mut values = vec![0u64; width * width];
    for i in 0..=max_n {
        values[i * width] = 1;
        for j in 1..=i {
            let up_left = values[(i - 1) * width + j - 1];
            let up = if j <= i - 1 { values[(i - 1) * width + j] } else { 0 };
            values[i * width + j] = up_left
                .checked_add(up)
                .expect("binomial overflow: instance too large");
        }
    }
    Binomials { width, values }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_stars_and_bars() {
        assert_eq!(MultisetCodec::new(2, 2).count(), 3);
        assert_eq!(MultisetCodec::new(4, 3).count(), 20);
        assert_eq!(MultisetCodec::new(7, 0).count(), 1);
        assert_eq!(MultisetCodec::new(32, 4).count(), 52360);
    }

    #[test]
    fn rank_unrank_roundtrip_exhaustive() {
        for n in 1..=6 {
            for m in 0..=4 {
                let codec = MultisetCodec::new(n, m);
                let mut seen = vec![false; codec.count() as usize];
                let mut buf = Vec::new();
                codec.for_each(|rank, ms| {
                    assert_eq!(codec.rank(ms), rank, "n={n} m={m} ms={ms:?}");
                    codec.unrank(rank, &mut buf);
                    assert_eq!(buf.as_slice(), ms);
                    assert!(!seen[rank as usize]);
                    seen[rank as usize] = true;
                });
                assert!(seen.iter().all(|&s| s));
            }
        }
    }

    #[test]
    fn ranks_are_lexicographic() {
        let codec = MultisetCodec::new(3, 2);
        let expected: Vec<Vec<usize>> = vec![
            vec![0, 0],
            vec![0, 1],
            vec![0, 2],
            vec![1, 1],
            vec![1, 2],
            vec![2, 2],
        ];
        for (r, ms) in expected.iter().enumerate() {
            assert_eq!(codec.rank(ms), r as u64);
        }
    }
}
