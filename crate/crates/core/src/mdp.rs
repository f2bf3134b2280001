//! Exact finite-MDP mathematics.
//!
//! An MDP is the tuple `{S, A, T, R, gamma}` with `T : S x A x S -> [0,1]`
//! row-stochastic and `gamma in [0,1)`. Values are the discounted fixed point
//!
//! ```text
//!   V_pi = R_pi + gamma * T_pi * V_pi,
//!   T_pi(s,s') = sum_a pi(s,a) T(s,a,s'),
//!   R_pi(s)    = sum_a pi(s,a) sum_s' T(s,a,s') R(s,a,s').
//! ```
//!
//! For `gamma < 1` the system `(I - gamma T_pi) V = R_pi` is nonsingular, so
//! values are computed by a direct dense solve (state spaces here are tens of
//! states), never by iterative approximation. Episodic problems are encoded
//! with a rollover/absorbing structure in `T` so the same solver applies.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Row-sum tolerance for stochastic matrices.
pub const STOCHASTIC_TOL: f64 = 1e-9;

/// Discounted state values, indexed by state.
pub type ValueVector = Vec<f64>;

/// Discounted state-action values, indexed by [`q_index`].
pub type ActionValueVector = Vec<f64>;

/// Flat index of the `(state, action)` pair in an [`ActionValueVector`].
#[inline]
pub fn q_index(state: usize, action: usize, n_actions: usize) -> usize {
    state * n_actions + action
}

/// A finite Markov decision process with known transition and reward tensors.
///
/// Used as ground truth by the simulation harness and as the estimated model
/// (built from `T_hat`, `R_hat`) by the monitors.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct Mdp {
    n_states: usize,
    n_actions: usize,
    /// `T(s,a,s')`, row-major over `[s][a][s']`.
    transition: Vec<f64>,
    /// `R(s,a,s')`, same layout. One real per triple (deterministic reward).
    reward: Vec<f64>,
    discount: f64,
}

impl Mdp {
    /// Builds an MDP, checking every invariant: each `T(s,a,.)` row sums to 1
    /// within [`STOCHASTIC_TOL`] with non-negative entries, `gamma < 1`, and
    /// all rewards finite.
    pub fn new(
        n_states: usize,
        n_actions: usize,
        transition: Vec<f64>,
        reward: Vec<f64>,
        discount: f64,
    ) -> Result<Self> {
        if n_states == 0 || n_actions == 0 {
            return Err(Error::InvalidMdp("state and action sets must be non-empty".into()));
        }
        let len = n_states * n_actions * n_states;
        if transition.len() != len || reward.len() != len {
            return Err(Error::InvalidMdp(format!(
                "tensor length {} or {} does not match |S||A||S| = {}",
                transition.len(),
                reward.len(),
                len
            )));
        }
        if !(0.0..1.0).contains(&discount) {
            return Err(Error::InvalidMdp(format!(
                "discount {} outside [0, 1)",
                discount
            )));
        }
        for s in 0..n_states {
            for a in 0..n_actions {
                let row = &transition[(s * n_actions + a) * n_states..][..n_states];
                if row.iter().any(|&p| !(p >= 0.0) || !p.is_finite()) {
                    return Err(Error::InvalidMdp(format!(
                        "negative or non-finite transition probability at ({s},{a})"
                    )));
                }
                let sum: f64 = row.iter().sum();
                if (sum - 1.0).abs() > STOCHASTIC_TOL {
                    return Err(Error::InvalidMdp(format!(
                        "transition row ({s},{a}) sums to {sum}, expected 1"
                    )));
                }
            }
        }
        if reward.iter().any(|r| !r.is_finite()) {
            return Err(Error::InvalidMdp("non-finite reward entry".into()));
        }
        Ok(Self {
            n_states,
            n_actions,
            transition,
            reward,
            discount,
        })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_actions(&self) -> usize {
        self.n_actions
    }

    pub fn discount(&self) -> f64 {
        self.discount
    }

    /// `T(s, a, s')`.
    #[inline]
    pub fn t(&self, s: usize, a: usize, sp: usize) -> f64 {
        self.transition[(s * self.n_actions + a) * self.n_states + sp]
    }

    /// `R(s, a, s')`.
    #[inline]
    pub fn r(&self, s: usize, a: usize, sp: usize) -> f64 {
        self.reward[(s * self.n_actions + a) * self.n_states + sp]
    }

    /// Smallest and largest reward over all triples.
    pub fn reward_bounds(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &r in &self.reward {
            lo = lo.min(r);
            hi = hi.max(r);
        }
        (lo, hi)
    }

    /// The policy-induced chain `T_pi(s,s')` (row-major `n_states x n_states`)
    /// and reward vector `R_pi(s)`.
    pub fn on_policy_system(&self, policy: &PolicyTable) -> Result<(Vec<f64>, Vec<f64>)> {
        self.check_policy(policy)?;
        let n = self.n_states;
        let mut t_pi = vec![0.0; n * n];
        let mut r_pi = vec![0.0; n];
        for s in 0..n {
            for a in 0..self.n_actions {
                let w = policy.prob(s, a);
                if w == 0.0 {
                    continue;
                }
                for sp in 0..n {
                    let p = self.t(s, a, sp);
                    t_pi[s * n + sp] += w * p;
                    r_pi[s] += w * p * self.r(s, a, sp);
                }
            }
        }
        Ok((t_pi, r_pi))
    }

    fn check_policy(&self, policy: &PolicyTable) -> Result<()> {
        if policy.n_states() != self.n_states || policy.n_actions() != self.n_actions {
            return Err(Error::InvalidPolicy(format!(
                "policy shape ({}, {}) does not match MDP ({}, {})",
                policy.n_states(),
                policy.n_actions(),
                self.n_states,
                self.n_actions
            )));
        }
        Ok(())
    }
}

/// A stochastic policy `pi(s, a)`; deterministic policies are one-hot rows.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PolicyTable {
    n_states: usize,
    n_actions: usize,
    /// Row-major `[s][a]`, each row a distribution over actions.
    probs: Vec<f64>,
}

impl PolicyTable {
    /// Builds a policy from per-state action distributions, validating that
    /// every row sums to 1 within [`STOCHASTIC_TOL`] with entries in `[0,1]`.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n_states = rows.len();
        if n_states == 0 {
            return Err(Error::InvalidPolicy("no states".into()));
        }
        let n_actions = rows[0].len();
        if n_actions == 0 {
            return Err(Error::InvalidPolicy("no actions".into()));
        }
        let mut probs = Vec::with_capacity(n_states * n_actions);
        for (s, row) in rows.iter().enumerate() {
            if row.len() != n_actions {
                return Err(Error::InvalidPolicy(format!(
                    "row {s} has {} entries, expected {n_actions}",
                    row.len()
                )));
            }
            if row.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
                return Err(Error::InvalidPolicy(format!(
                    "row {s} has an entry outside [0,1]"
                )));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > STOCHASTIC_TOL {
                return Err(Error::InvalidPolicy(format!(
                    "row {s} sums to {sum}, expected 1"
                )));
            }
            probs.extend_from_slice(row);
        }
        Ok(Self {
            n_states,
            n_actions,
            probs,
        })
    }

    /// The uniform policy over all actions.
    pub fn uniform(n_states: usize, n_actions: usize) -> Self {
        Self {
            n_states,
            n_actions,
            probs: vec![1.0 / n_actions as f64; n_states * n_actions],
        }
    }

    /// A deterministic (one-hot) policy from one action per state.
    pub fn deterministic(actions: &[usize], n_actions: usize) -> Result<Self> {
        let n_states = actions.len();
        let mut probs = vec![0.0; n_states * n_actions];
        for (s, &a) in actions.iter().enumerate() {
            if a >= n_actions {
                return Err(Error::InvalidPolicy(format!(
                    "action {a} out of range for state {s}"
                )));
            }
            probs[s * n_actions + a] = 1.0;
        }
        Ok(Self {
            n_states,
            n_actions,
            probs,
        })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_actions(&self) -> usize {
        self.n_actions
    }

    /// `pi(s, a)`.
    #[inline]
    pub fn prob(&self, s: usize, a: usize) -> f64 {
        self.probs[s * self.n_actions + a]
    }

    /// The single action of a one-hot row, if the row is one-hot.
    pub fn action_of(&self, s: usize) -> Option<usize> {
        let row = &self.probs[s * self.n_actions..][..self.n_actions];
        let mut hot = None;
        for (a, &p) in row.iter().enumerate() {
            if p == 1.0 {
                if hot.is_some() {
                    return None;
                }
                hot = Some(a);
            } else if p != 0.0 {
                return None;
            }
        }
        hot
    }

    /// Samples an action from `pi(s, .)` using the given uniform draw in `[0,1)`.
    pub fn sample_action(&self, s: usize, u: f64) -> usize {
        let row = &self.probs[s * self.n_actions..][..self.n_actions];
        let mut acc = 0.0;
        for (a, &p) in row.iter().enumerate() {
            acc += p;
            if u < acc {
                return a;
            }
        }
        self.n_actions - 1
    }
}

/// Solves `(I - gamma * T_pi) V = R_pi` by dense LU factorization.
///
/// `t_pi` is row-major `n x n`. Singularity is only possible through an
/// invariant violation, so it is reported, not regularized away.
pub(crate) fn solve_value_system(t_pi: &[f64], r_pi: &[f64], discount: f64) -> Result<Vec<f64>> {
    let n = r_pi.len();
    debug_assert_eq!(t_pi.len(), n * n);
    let mut a = DMatrix::<f64>::identity(n, n);
    for s in 0..n {
        for sp in 0..n {
            a[(s, sp)] -= discount * t_pi[s * n + sp];
        }
    }
    let b = DVector::from_column_slice(r_pi);
    match a.lu().solve(&b) {
        Some(v) => Ok(v.iter().copied().collect()),
        None => Err(Error::Singular(
            "value system (I - gamma T_pi) is singular; transition rows are not stochastic".into(),
        )),
    }
}

/// Exact discounted value of `policy`, via the linear system above.
pub fn value_of_policy(mdp: &Mdp, policy: &PolicyTable) -> Result<ValueVector> {
    let (t_pi, r_pi) = mdp.on_policy_system(policy)?;
    solve_value_system(&t_pi, &r_pi, mdp.discount())
}

/// Action values `Q(s,a) = sum_s' T(s,a,s') [R(s,a,s') + gamma V_pi(s')]`.
pub fn action_value_of_policy(mdp: &Mdp, policy: &PolicyTable) -> Result<ActionValueVector> {
    let v = value_of_policy(mdp, policy)?;
    Ok(action_values_from(mdp, &v))
}

/// Action values backed up from an arbitrary state-value vector.
pub fn action_values_from(mdp: &Mdp, values: &[f64]) -> ActionValueVector {
    let (n, m) = (mdp.n_states(), mdp.n_actions());
    let mut q = vec![0.0; n * m];
    for s in 0..n {
        for a in 0..m {
            let mut acc = 0.0;
            for sp in 0..n {
                acc += mdp.t(s, a, sp) * (mdp.r(s, a, sp) + mdp.discount() * values[sp]);
            }
            q[q_index(s, a, m)] = acc;
        }
    }
    q
}

/// Greedy (one-hot) policy from a value vector; ties break to the lowest
/// action index so runs are reproducible.
pub fn policy_improvement(mdp: &Mdp, values: &[f64]) -> PolicyTable {
    let q = action_values_from(mdp, values);
    greedy_from_q(&q, mdp.n_states(), mdp.n_actions())
}

fn greedy_from_q(q: &[f64], n_states: usize, n_actions: usize) -> PolicyTable {
    let mut actions = Vec::with_capacity(n_states);
    for s in 0..n_states {
        let mut best = 0;
        let mut best_q = q[q_index(s, 0, n_actions)];
        for a in 1..n_actions {
            let qa = q[q_index(s, a, n_actions)];
            if qa > best_q {
                best_q = qa;
                best = a;
            }
        }
        actions.push(best);
    }
    PolicyTable::deterministic(&actions, n_actions).expect("greedy actions are in range")
}

/// Alternates evaluation and greedy improvement until the policy is unchanged
/// (exact one-hot equality; policies are discrete). Returns the optimal policy.
///
/// Errors after `|A|^|S| + 1` improvements, which cannot occur for exact
/// arithmetic and signals numerical trouble.
pub fn policy_iteration(mdp: &Mdp, initial: &PolicyTable) -> Result<PolicyTable> {
    let limit = (mdp.n_actions() as u128)
        .saturating_pow(mdp.n_states() as u32)
        .saturating_add(1);
    let mut current = initial.clone();
    let mut improvements: u128 = 0;
    loop {
        let v = value_of_policy(mdp, &current)?;
        let improved = policy_improvement(mdp, &v);
        if improved == current {
            return Ok(improved);
        }
        // The initial policy may be stochastic; from the first improvement on,
        // both sides of the comparison are one-hot.
        current = improved;
        improvements += 1;
        if improvements > limit {
            return Err(Error::Param(format!(
                "policy iteration did not converge within {limit} improvements"
            )));
        }
    }
}

/// One expected on-policy update applied simultaneously to every `(s,a)`:
///
/// ```text
///   Q'(s,a) = (1-alpha) Q(s,a)
///           + alpha sum_s' T(s,a,s') [R(s,a,s') + gamma sum_a' pi(s',a') Q(s',a')]
/// ```
///
/// Equals `alpha R + B Q` in the matrix form of the update operator.
pub fn full_q_update(
    mdp: &Mdp,
    policy: &PolicyTable,
    q: &[f64],
    learning_rate: f64,
) -> Result<ActionValueVector> {
    if !(learning_rate > 0.0 && learning_rate <= 1.0) {
        return Err(Error::Param(format!(
            "learning rate {learning_rate} outside (0, 1]"
        )));
    }
    let (n, m) = (mdp.n_states(), mdp.n_actions());
    if q.len() != n * m {
        return Err(Error::Param(format!(
            "Q length {} does not match |S||A| = {}",
            q.len(),
            n * m
        )));
    }
    // On-policy expectation of Q at each state, reused across source pairs.
    let mut vq = vec![0.0; n];
    for sp in 0..n {
        for ap in 0..m {
            vq[sp] += policy.prob(sp, ap) * q[q_index(sp, ap, m)];
        }
    }
    let mut out = vec![0.0; n * m];
    for s in 0..n {
        for a in 0..m {
            let mut backup = 0.0;
            for sp in 0..n {
                backup += mdp.t(s, a, sp) * (mdp.r(s, a, sp) + mdp.discount() * vq[sp]);
            }
            let i = q_index(s, a, m);
            out[i] = (1.0 - learning_rate) * q[i] + learning_rate * backup;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::random_mdp;
    use approx::assert_abs_diff_eq;

    fn self_loop(reward: f64, discount: f64) -> Mdp {
        Mdp::new(1, 1, vec![1.0], vec![reward], discount).unwrap()
    }

    /// Independent oracle: truncated power series `sum_k gamma^k (T_pi)^k R_pi`.
    fn truncated_series_value(mdp: &Mdp, policy: &PolicyTable, terms: usize) -> Vec<f64> {
        let n = mdp.n_states();
        let (t_pi, r_pi) = mdp.on_policy_system(policy).unwrap();
        let mut v = vec![0.0; n];
        let mut term = r_pi.clone();
        let mut scale = 1.0;
        for _ in 0..terms {
            for s in 0..n {
                v[s] += scale * term[s];
            }
            let mut next = vec![0.0; n];
            for s in 0..n {
                for sp in 0..n {
                    next[s] += t_pi[s * n + sp] * term[sp];
                }
            }
            term = next;
            scale *= mdp.discount();
        }
        v
    }

    #[test]
    fn value_of_self_loop_is_geometric_series() {
        let mdp = self_loop(1.0, 0.5);
        let pi = PolicyTable::uniform(1, 1);
        let v = value_of_policy(&mdp, &pi).unwrap();
        assert_abs_diff_eq!(v[0], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn value_of_zero_rewards_is_zero() {
        let mdp = random_mdp(5, 3, 0.9, 7);
        let zeroed = Mdp::new(
            5,
            3,
            (0..5 * 3 * 5).map(|i| mdp.t(i / 15, (i / 5) % 3, i % 5)).collect(),
            vec![0.0; 5 * 3 * 5],
            0.9,
        )
        .unwrap();
        let pi = PolicyTable::uniform(5, 3);
        let v = value_of_policy(&zeroed, &pi).unwrap();
        assert!(v.iter().all(|&x| x.abs() < 1e-12));
    }

    #[test]
    fn value_matches_truncated_series_oracle() {
        for seed in 0..10 {
            let mdp = random_mdp(4, 2, 0.9, seed);
            let pi = PolicyTable::uniform(4, 2);
            let v = value_of_policy(&mdp, &pi).unwrap();
            let oracle = truncated_series_value(&mdp, &pi, 500);
            for s in 0..4 {
                assert_abs_diff_eq!(v[s], oracle[s], epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn action_value_of_self_loop() {
        let mdp = self_loop(1.0, 0.5);
        let pi = PolicyTable::uniform(1, 1);
        let q = action_value_of_policy(&mdp, &pi).unwrap();
        assert_abs_diff_eq!(q[0], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn action_values_average_back_to_state_values() {
        for seed in 0..10 {
            let mdp = random_mdp(5, 3, 0.85, 100 + seed);
            let pi = PolicyTable::uniform(5, 3);
            let v = value_of_policy(&mdp, &pi).unwrap();
            let q = action_value_of_policy(&mdp, &pi).unwrap();
            for s in 0..5 {
                let mixed: f64 = (0..3).map(|a| pi.prob(s, a) * q[q_index(s, a, 3)]).sum();
                assert_abs_diff_eq!(mixed, v[s], epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn improvement_with_single_action_returns_it() {
        let mdp = random_mdp(4, 1, 0.9, 3);
        let pi = policy_improvement(&mdp, &[0.0; 4]);
        for s in 0..4 {
            assert_eq!(pi.action_of(s), Some(0));
        }
    }

    #[test]
    fn improvement_picks_dominant_action() {
        // Action 0 always pays 1, action 1 always pays 0; both self-loop.
        let t = vec![
            1.0, 0.0, 1.0, 0.0, // s0: a0 -> s0, a1 -> s0
            0.0, 1.0, 0.0, 1.0, // s1: a0 -> s1, a1 -> s1
        ];
        let r = vec![1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0];
        let mdp = Mdp::new(2, 2, t, r, 0.7).unwrap();
        let pi = policy_improvement(&mdp, &[0.0, 0.0]);
        assert_eq!(pi.action_of(0), Some(0));
        assert_eq!(pi.action_of(1), Some(0));
    }

    #[test]
    fn improvement_matches_q_argmax_oracle() {
        let mdp = random_mdp(5, 3, 0.9, 42);
        let pi0 = PolicyTable::uniform(5, 3);
        let v = value_of_policy(&mdp, &pi0).unwrap();
        let q = action_values_from(&mdp, &v);
        let improved = policy_improvement(&mdp, &v);
        for s in 0..5 {
            let mut best = 0;
            for a in 1..3 {
                if q[q_index(s, a, 3)] > q[q_index(s, best, 3)] {
                    best = a;
                }
            }
            assert_eq!(improved.action_of(s), Some(best));
        }
    }

    #[test]
    fn improvement_invariant_under_per_state_shift() {
        // argmax_a Q(s,a) is unchanged when each state's Q row is shifted by a
        // per-state constant; realized here by shifting V, which shifts every
        // Q(s,.) row through the backup by gamma * shift.
        let mdp = random_mdp(6, 3, 0.8, 9);
        let pi0 = PolicyTable::uniform(6, 3);
        let v = value_of_policy(&mdp, &pi0).unwrap();
        let shifted: Vec<f64> = v.iter().map(|x| x + 17.25).collect();
        assert_eq!(
            policy_improvement(&mdp, &v),
            policy_improvement(&mdp, &shifted)
        );
    }

    #[test]
    fn iteration_single_action_returns_initial() {
        let mdp = random_mdp(4, 1, 0.9, 11);
        let init = PolicyTable::uniform(4, 1);
        let best = policy_iteration(&mdp, &init).unwrap();
        for s in 0..4 {
            assert_eq!(best.action_of(s), Some(0));
        }
    }

    #[test]
    fn iteration_finds_dominant_policy() {
        let t = vec![
            1.0, 0.0, 1.0, 0.0, //
            0.0, 1.0, 0.0, 1.0,
        ];
        let r = vec![1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0];
        let mdp = Mdp::new(2, 2, t, r, 0.7).unwrap();
        let best = policy_iteration(&mdp, &PolicyTable::uniform(2, 2)).unwrap();
        assert_eq!(best.action_of(0), Some(0));
        assert_eq!(best.action_of(1), Some(0));
    }

    #[test]
    fn iteration_dominates_random_policies() {
        use rand::{Rng, SeedableRng};
        let mdp = random_mdp(4, 2, 0.9, 21);
        let best = policy_iteration(&mdp, &PolicyTable::uniform(4, 2)).unwrap();
        let v_best = value_of_policy(&mdp, &best).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..100 {
            let rows: Vec<Vec<f64>> = (0..4)
                .map(|_| {
                    let x: f64 = rng.gen_range(0.01..0.99);
                    vec![x, 1.0 - x]
                })
                .collect();
            let pi = PolicyTable::from_rows(rows).unwrap();
            let v = value_of_policy(&mdp, &pi).unwrap();
            for s in 0..4 {
                assert!(v_best[s] >= v[s] - 1e-9, "state {s}: {} < {}", v_best[s], v[s]);
            }
        }
    }

    #[test]
    fn full_update_keeps_fixed_point() {
        let mdp = random_mdp(5, 2, 0.9, 31);
        let pi = PolicyTable::uniform(5, 2);
        let q = action_value_of_policy(&mdp, &pi).unwrap();
        let next = full_q_update(&mdp, &pi, &q, 0.6).unwrap();
        for i in 0..q.len() {
            assert_abs_diff_eq!(next[i], q[i], epsilon = 1e-9);
        }
    }

    #[test]
    fn full_update_single_bellman_backup() {
        let mdp = self_loop(1.0, 0.5);
        let pi = PolicyTable::uniform(1, 1);
        let q1 = full_q_update(&mdp, &pi, &[0.0], 1.0).unwrap();
        assert_abs_diff_eq!(q1[0], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn full_update_contracts_consecutive_differences() {
        let alpha = 0.7;
        for seed in 0..10 {
            let mdp = random_mdp(5, 2, 0.9, 200 + seed);
            let pi = PolicyTable::uniform(5, 2);
            let factor = 1.0 - alpha * (1.0 - mdp.discount());
            let mut q_prev = vec![0.0; 10];
            let mut q = full_q_update(&mdp, &pi, &q_prev, alpha).unwrap();
            let mut delta_prev = inf_norm_diff(&q, &q_prev);
            for _ in 0..50 {
                let q_next = full_q_update(&mdp, &pi, &q, alpha).unwrap();
                let delta = inf_norm_diff(&q_next, &q);
                assert!(
                    delta <= factor * delta_prev + 1e-9,
                    "contraction violated: {delta} > {factor} * {delta_prev}"
                );
                q_prev = q;
                q = q_next;
                delta_prev = inf_norm_diff(&q, &q_prev);
            }
        }
    }

    #[test]
    fn invalid_rows_are_rejected() {
        assert!(Mdp::new(1, 1, vec![0.5], vec![0.0], 0.9).is_err());
        assert!(Mdp::new(1, 1, vec![1.0], vec![0.0], 1.0).is_err());
        assert!(Mdp::new(1, 1, vec![1.0], vec![f64::NAN], 0.9).is_err());
        assert!(PolicyTable::from_rows(vec![vec![0.4, 0.4]]).is_err());
    }

    fn inf_norm_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}
