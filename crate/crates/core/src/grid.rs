//! Dense indexing of a truncated directed set.
//!
//! Every supported family truncates to a box: coordinate `i` ranges over
//! `[min_i, bound]`. Elements are indexed in mixed radix with the first
//! coordinate most significant, so index order is lexicographic order and every
//! strict successor of an element has a larger index.

use crate::directed::{DirectedSet, Element, Factor};
use crate::error::{Error, Result};

pub(crate) struct BoxGrid {
    factors: Vec<Factor>,
    bound: u64,
    extents: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
    primes: Vec<u64>,
}

impl BoxGrid {
    pub(crate) fn new(ds: &DirectedSet, bound: u64, cap: u64) -> Result<Self> {
        let factors = ds.factors();
        let extents: Vec<usize> = factors
            .iter()
            .map(|f| (bound + 1).saturating_sub(f.min()) as usize)
            .collect();
        let requested: u128 = extents.iter().map(|&e| e as u128).product();
        if requested > u128::from(cap) {
            return Err(Error::ResourceLimit { requested, cap });
        }
        let mut strides = vec![1usize; extents.len()];
        for i in (0..extents.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * extents[i + 1];
        }
        let primes = if factors.iter().any(|f| matches!(f, Factor::Divisor { .. })) {
            primes_up_to(bound)
        } else {
            Vec::new()
        };
        Ok(BoxGrid {
            factors,
            bound,
            extents,
            strides,
            len: requested as usize,
            primes,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn bound(&self) -> u64 {
        self.bound
    }

    pub(crate) fn index_of(&self, coords: &[u64]) -> Option<usize> {
        if coords.len() != self.factors.len() {
            return None;
        }
        let mut idx = 0;
        for (i, (&c, f)) in coords.iter().zip(&self.factors).enumerate() {
            if c < f.min() || c > self.bound {
                return None;
            }
            idx += (c - f.min()) as usize * self.strides[i];
        }
        Some(idx)
    }

    fn decode(&self, mut idx: usize, out: &mut [u64]) {
        for i in 0..self.factors.len() {
            let k = idx / self.strides[i];
            idx %= self.strides[i];
            out[i] = self.factors[i].min() + k as u64;
        }
    }

    #[cfg(test)]
    pub(crate) fn element(&self, idx: usize) -> Element {
        let mut buf = vec![0; self.factors.len()];
        self.decode(idx, &mut buf);
        Element::new(&buf)
    }

    /// Visits every element in index order.
    pub(crate) fn for_each(&self, mut f: impl FnMut(usize, &[u64])) {
        self.for_each_in(self.bound, |idx, c| f(idx, c));
    }

    /// Visits the sub-box with every coordinate `≤ sub_bound`, in index order.
    pub(crate) fn for_each_in(&self, sub_bound: u64, mut f: impl FnMut(usize, &[u64])) {
        let d = self.factors.len();
        let top = sub_bound.min(self.bound);
        let mins: Vec<u64> = self.factors.iter().map(|f| f.min()).collect();
        if mins.iter().any(|&m| m > top) {
            return;
        }
        let mut coords = mins.clone();
        loop {
            let idx = coords
                .iter()
                .zip(&mins)
                .zip(&self.strides)
                .map(|((&c, &m), &s)| (c - m) as usize * s)
                .sum();
            f(idx, &coords);
            let mut i = d;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if coords[i] < top {
                    coords[i] += 1;
                    break;
                }
                coords[i] = mins[i];
            }
        }
    }

    pub(crate) fn elements(&self) -> Vec<Element> {
        let mut out = Vec::with_capacity(self.len);
        self.for_each(|_, c| out.push(Element::new(c)));
        out
    }

    /// Replaces `values[β]` by `Σ_{α ≤ β} values[α]`, one coordinate at a time:
    /// prefix sums along chains, divisor sums (over primes) along divisibility
    /// factors.
    pub(crate) fn down_sums(&self, values: &mut [u64]) {
        debug_assert_eq!(values.len(), self.len);
        for (i, factor) in self.factors.iter().enumerate() {
            let extent = self.extents[i];
            let stride = self.strides[i];
            if extent == 0 {
                continue;
            }
            let block = extent * stride;
            for outer in 0..self.len / block {
                for inner in 0..stride {
                    let base = outer * block + inner;
                    match *factor {
                        Factor::Chain => {
                            for k in 1..extent {
                                values[base + k * stride] += values[base + (k - 1) * stride];
                            }
                        }
                        Factor::Divisor { min } => {
                            let at = |v: u64| base + (v - min) as usize * stride;
                            for &p in &self.primes {
                                if p > self.bound {
                                    break;
                                }
                                for m in min.max(1)..=self.bound / p {
                                    let src = values[at(m)];
                                    values[at(m * p)] += src;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// For every element `β`, the minimum and maximum of `values` over the
    /// truncated up-set `{α ≥ β}`, by dynamic programming over cover steps
    /// (`+1` on chains, `×p` for primes `p` on divisibility factors).
    pub(crate) fn tail_extrema<T: Copy + PartialOrd>(&self, values: &[T]) -> (Vec<T>, Vec<T>) {
        debug_assert_eq!(values.len(), self.len);
        let mut lo = values.to_vec();
        let mut hi = values.to_vec();
        let mut coords = vec![0u64; self.factors.len()];
        for idx in (0..self.len).rev() {
            self.decode(idx, &mut coords);
            let (mut l, mut h) = (lo[idx], hi[idx]);
            let mut visit = |c: usize| {
                if lo[c] < l {
                    l = lo[c];
                }
                if hi[c] > h {
                    h = hi[c];
                }
            };
            for (i, factor) in self.factors.iter().enumerate() {
                let v = coords[i];
                match factor {
                    Factor::Chain => {
                        if v < self.bound {
                            visit(idx + self.strides[i]);
                        }
                    }
                    Factor::Divisor { .. } => {
                        let limit = self.bound / v;
                        for &p in &self.primes {
                            if p > limit {
                                break;
                            }
                            visit(idx + ((v * p - v) as usize) * self.strides[i]);
                        }
                    }
                }
            }
            lo[idx] = l;
            hi[idx] = h;
        }
        (lo, hi)
    }
}

/// Sieve of Eratosthenes, recomputed per call.
pub(crate) fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn down_sums_match_enumeration() {
        for spec in ["N", "N^2", "div", "div1", "prod(div,N)", "prod(N,div1)"] {
            let ds: DirectedSet = spec.parse().unwrap();
            let grid = BoxGrid::new(&ds, 12, 1 << 20).unwrap();
            let elems = grid.elements();
            // weight each element by a deterministic pattern
            let weight = |e: &Element| e.coords().iter().sum::<u64>() % 3;
            let mut values: Vec<u64> = elems.iter().map(weight).collect();
            grid.down_sums(&mut values);
            for (idx, b) in elems.iter().enumerate() {
                let brute: u64 = elems
                    .iter()
                    .filter(|a| ds.leq_unchecked(a.coords(), b.coords()))
                    .map(weight)
                    .sum();
                assert_eq!(values[idx], brute, "{spec} at {b}");
            }
        }
    }

    #[test]
    fn tail_extrema_match_enumeration() {
        for spec in ["N", "N^2", "div", "div1", "prod(div,N)"] {
            let ds: DirectedSet = spec.parse().unwrap();
            let grid = BoxGrid::new(&ds, 15, 1 << 20).unwrap();
            let elems = grid.elements();
            let values: Vec<i64> = elems
                .iter()
                .map(|e| e.coords().iter().fold(7i64, |acc, &c| (acc * 31 + c as i64) % 101))
                .collect();
            let (lo, hi) = grid.tail_extrema(&values);
            for (idx, b) in elems.iter().enumerate() {
                let up: Vec<i64> = elems
                    .iter()
                    .zip(&values)
                    .filter(|(a, _)| ds.leq_unchecked(b.coords(), a.coords()))
                    .map(|(_, &v)| v)
                    .collect();
                assert_eq!(lo[idx], *up.iter().min().unwrap(), "{spec} at {b}");
                assert_eq!(hi[idx], *up.iter().max().unwrap(), "{spec} at {b}");
            }
        }
    }

    #[test]
    fn index_round_trip() {
        let ds: DirectedSet = "prod(N^2,div1)".parse().unwrap();
        let grid = BoxGrid::new(&ds, 6, 1 << 20).unwrap();
        for (idx, e) in grid.elements().iter().enumerate() {
            assert_eq!(grid.index_of(e.coords()), Some(idx));
            assert_eq!(&grid.element(idx), e);
        }
        assert_eq!(grid.index_of(&[1, 1, 1]), None);
        assert_eq!(grid.index_of(&[7, 1, 2]), None);
    }

    #[test]
    fn primes() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(primes_up_to(1).is_empty());
    }
}
