//! Instance generators: random frameworks, exhaustive framework spaces and
//! multiset profiles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::framework::ArgumentationFramework;

pub const DEFAULT_EDGE_PROBABILITY: f64 = 0.3;

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("a{i}")).collect()
}

/// A directed graph on `a1..an` where each ordered pair, self-loops
/// included, is an attack with probability `edge_prob`.
pub fn random_framework(seed: u64, n_args: usize, edge_prob: f64) -> Result<ArgumentationFramework> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::Config(format!("edge probability must be in [0, 1], got {edge_prob}")));
    }
    if n_args > crate::framework::MAX_ARGUMENTS {
        return Err(Error::Size { arguments: n_args, cap: crate::framework::MAX_ARGUMENTS });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attacks = Vec::new();
    for a in 0..n_args {
        for b in 0..n_args {
            if rng.gen_bool(edge_prob) {
                attacks.push((a, b));
            }
        }
    }
    ArgumentationFramework::from_indices(names(n_args), attacks)
}

/// Framework on `a1..an` whose attacks are the set bits of `mask`, bit
/// `a * n + b` standing for `a ⇀ b`.
pub(crate) fn framework_from_mask(n: usize, mask: u64) -> ArgumentationFramework {
    let attacks = (0..n * n).filter(|bit| mask >> bit & 1 == 1).map(|bit| (bit / n, bit % n));
    ArgumentationFramework::from_indices(names(n), attacks).expect("valid indices")
}

/// Every framework on `a1..an`, in attack-mask order. Only sensible for `n <= 4`.
pub fn all_frameworks(n: usize) -> impl Iterator<Item = ArgumentationFramework> {
    assert!(n <= 4, "exhaustive framework spaces are limited to 4 arguments");
    (0..1u64 << (n * n)).map(move |mask| framework_from_mask(n, mask))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn permute_mask(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for bit in 0..n * n {
        if mask >> bit & 1 == 1 {
            let (a, b) = (perm[bit / n], perm[bit % n]);
            out |= 1 << (a * n + b);
        }
    }
    out
}

/// One framework per isomorphism class on `n <= 4` arguments: the member
/// with the smallest attack mask. Every property checked over frameworks is
/// invariant under renaming arguments, so this covers the full space.
pub struct CanonicalFrameworks {
    n: usize,
    perms: Vec<Vec<usize>>,
    next: u64,
}

impl Iterator for CanonicalFrameworks {
    type Item = (u64, ArgumentationFramework);

    fn next(&mut self) -> Option<Self::Item> {
        let end = 1u64 << (self.n * self.n);
        while self.next < end {
            let mask = self.next;
            self.next += 1;
            if self.perms.iter().all(|p| permute_mask(self.n, mask, p) >= mask) {
                return Some((mask, framework_from_mask(self.n, mask)));
            }
        }
        None
    }
}

pub fn canonical_frameworks(n: usize) -> CanonicalFrameworks {
    assert!(n <= 4, "exhaustive framework spaces are limited to 4 arguments");
    CanonicalFrameworks { n, perms: permutations(n), next: 0 }
}

/// Non-decreasing index tuples of length `k` over `0..n`: the multisets of size `k`.
pub fn multisets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current = if n == 0 && k > 0 { None } else { Some(vec![0; k]) };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut i = k;
        current = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if out[i] + 1 < n {
                let mut next = out.clone();
                let v = out[i] + 1;
                for slot in &mut next[i..] {
                    *slot = v;
                }
                break Some(next);
            }
        };
        Some(out)
    })
}
