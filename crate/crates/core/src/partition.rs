//! Segre partitions and the indexing data derived from them.

use crate::error::{AlgebraError, Result};

/// Drops zero parts; they correspond to empty blocks.
pub fn normalize(alpha: &[usize]) -> Vec<usize> {
    alpha.iter().copied().filter(|&a| a > 0).collect()
}

fn validate(alpha: &[usize]) -> Result<()> {
    if alpha.is_empty() || alpha.contains(&0) {
        return Err(AlgebraError::NonPositivePart);
    }
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(AlgebraError::NotSortedDescending);
    }
    Ok(())
}

/// `tau_j = #{i : alpha_i >= j}` for `j = 1..=alpha_1`.
pub fn conjugate_partition(alpha: &[usize]) -> Result<Vec<usize>> {
    validate(alpha)?;
    Ok((1..=alpha[0]).map(|j| alpha.iter().filter(|&&a| a >= j).count()).collect())
}

/// All partitions of `r` in nonincreasing order, reverse lexicographic.
pub fn partitions_of(r: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        go(r, r, &mut Vec::new(), &mut out);
    }
    out
}

/// A generalized Segre characteristic together with its conjugate, the
/// distinct part values with their frequencies and cumulative frequencies,
/// and the prefix sums that number the partial chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreData {
    alpha: Vec<usize>,
    tau: Vec<usize>,
    beta: Vec<usize>,
    freq: Vec<usize>,
    cumfreq: Vec<usize>,
    sigma: Vec<usize>,
}

impl SegreData {
    pub fn new(alpha: &[usize]) -> Result<Self> {
        validate(alpha)?;
        let tau = conjugate_partition(alpha)?;
        let mut beta: Vec<usize> = Vec::new();
        let mut freq: Vec<usize> = Vec::new();
        for &a in alpha {
            if beta.last() == Some(&a) {
                *freq.last_mut().unwrap() += 1;
            } else {
                beta.push(a);
                freq.push(1);
            }
        }
        let cumfreq = freq
            .iter()
            .scan(0, |acc, &n| {
                *acc += n;
                Some(*acc)
            })
            .collect();
        let sigma = alpha
            .iter()
            .scan(0, |acc, &a| {
                *acc += a;
                Some(*acc)
            })
            .collect();
        Ok(Self { alpha: alpha.to_vec(), tau, beta, freq, cumfreq, sigma })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }
    pub fn tau(&self) -> &[usize] {
        &self.tau
    }
    pub fn beta(&self) -> &[usize] {
        &self.beta
    }
    pub fn freq(&self) -> &[usize] {
        &self.freq
    }
    pub fn cumfreq(&self) -> &[usize] {
        &self.cumfreq
    }
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Number of chains (parts of alpha).
    pub fn m(&self) -> usize {
        self.alpha.len()
    }

    /// Total number of partial chains, `sum(alpha)`.
    pub fn r(&self) -> usize {
        *self.sigma.last().unwrap()
    }

    /// Number of distinct part values.
    pub fn h(&self) -> usize {
        self.beta.len()
    }

    /// Largest part, i.e. the number of Weyr levels.
    pub fn height(&self) -> usize {
        self.alpha[0]
    }

    /// 0-based position of partial chain `pos` (0-based, bottom of the chain
    /// first) of chain `chain` in the Jordan ordering.
    pub fn jordan_index(&self, chain: usize, pos: usize) -> usize {
        debug_assert!(pos < self.alpha[chain]);
        self.sigma[chain] - self.alpha[chain] + pos
    }

    /// Chains present at Weyr level `level` (1-based): those with
    /// `alpha_i >= level`, which are the first `tau_level` chains.
    pub fn chains_at_level(&self, level: usize) -> std::ops::Range<usize> {
        0..self.tau[level - 1]
    }

    /// 0-based position of (level, chain) in the Weyr ordering.
    pub fn weyr_index(&self, level: usize, chain: usize) -> usize {
        debug_assert!(chain < self.tau[level - 1]);
        self.tau[..level - 1].iter().sum::<usize>() + chain
    }

    /// Jordan position of the partial chain that sits at Weyr level `level`
    /// of chain `chain`: level 1 holds the last partial chain
    /// (block `sigma_i`), level `k` the block `sigma_i - k + 1`.
    pub fn level_to_jordan(&self, level: usize, chain: usize) -> usize {
        self.sigma[chain] - level
    }

    /// Weyr reordering of the `r` partial chains: entry `t` is the Jordan
    /// position placed at Weyr position `t`.
    pub fn weyr_order(&self) -> Vec<usize> {
        (1..=self.height())
            .flat_map(|level| self.chains_at_level(level).map(move |i| (level, i)))
            .map(|(level, i)| self.level_to_jordan(level, i))
            .collect()
    }
}
