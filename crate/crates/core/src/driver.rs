//! Runs the four subroutines and keeps the longest certified path.

use std::collections::BTreeMap;
use std::thread;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::{Graph, VertexSet, WitnessStructure};
use crate::oracle::oracle_path_contraction;
use crate::subroutines::{two_bag_witness, Subroutine, SubroutineResult};

/// Thresholds handed to the subroutines.
///
/// With `α`, `β`, `γ` chosen so that `2 - α - β/2 + γ/2 <= α` and
/// `1 - γ/2 <= α`, every witness structure falls into one of the four
/// shapes, so the best of the four results is optimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Constants {
    alpha: Fraction,
    beta: Fraction,
    gamma: Fraction,
    epsilon: Fraction,
}

impl Constants {
    /// Checks both inequalities exactly and derives `ε = 1 - β/2 - γ/2`.
    pub fn new(alpha: Fraction, beta: Fraction, gamma: Fraction) -> Result<Self> {
        let one = Ratio::from_integer(1);
        let (a, b, c) = (alpha.ratio(), beta.ratio(), gamma.ratio());
        let half = Ratio::new(1, 2);
        if Ratio::from_integer(2) - a - b * half + c * half > a {
            return Err(Error::InvalidConstants(format!(
                "2 - α - β/2 + γ/2 > α for α={alpha}, β={beta}, γ={gamma}"
            )));
        }
        if one - c * half > a {
            return Err(Error::InvalidConstants(format!("1 - γ/2 > α for α={alpha}, γ={gamma}")));
        }
        let eps = one - b * half - c * half;
        if eps <= Ratio::from_integer(0) {
            return Err(Error::InvalidConstants(format!(
                "1 - β/2 - γ/2 is not positive for β={beta}, γ={gamma}"
            )));
        }
        let epsilon = Fraction::from_ratio(eps)?;
        Ok(Constants {
            alpha,
            beta,
            gamma,
            epsilon,
        })
    }

    /// Replaces the derived `ε`. Intended for experiments; the optimality
    /// argument only covers the derived value.
    pub fn with_epsilon(mut self, epsilon: Fraction) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn alpha(&self) -> Fraction {
        self.alpha
    }

    pub fn beta(&self) -> Fraction {
        self.beta
    }

    pub fn gamma(&self) -> Fraction {
        self.gamma
    }

    pub fn epsilon(&self) -> Fraction {
        self.epsilon
    }

    pub fn param(&self, r: Subroutine) -> Fraction {
        match r {
            Subroutine::Soepc => self.beta,
            Subroutine::Bpc => self.alpha,
            Subroutine::Tdcpc => self.gamma,
            Subroutine::Nsoepc => self.epsilon,
        }
    }
}

impl Default for Constants {
    /// `α = 0.9996`, `β = 0.9885`, `γ = 0.9864`.
    fn default() -> Self {
        let f = |p| Fraction::new(p, 10_000).expect("valid default");
        Constants::new(f(9996), f(9885), f(9864)).expect("defaults satisfy the constraints")
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub t: usize,
    pub witness: WitnessStructure,
    /// Absent for one- and two-vertex graphs, which skip the subroutines.
    pub per_subroutine: BTreeMap<Subroutine, usize>,
    pub elapsed: BTreeMap<Subroutine, Duration>,
    pub total: Duration,
}

pub fn solve(g: &Graph, c: &Constants) -> Result<SolveReport> {
    solve_with_threads(g, c, 1)
}

/// Like [`solve`]; with `threads > 1` the four subroutines run concurrently.
/// The result does not depend on `threads`.
pub fn solve_with_threads(g: &Graph, c: &Constants, threads: usize) -> Result<SolveReport> {
    let start = Instant::now();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let short = |t, witness| SolveReport {
        t,
        witness,
        per_subroutine: BTreeMap::new(),
        elapsed: BTreeMap::new(),
        total: start.elapsed(),
    };
    match g.n() {
        1 => return Ok(short(1, WitnessStructure::new(vec![g.vertices()]))),
        2 => {
            let bags = vec![VertexSet::singleton(0), VertexSet::singleton(1)];
            return Ok(short(2, WitnessStructure::new(bags)));
        }
        _ => {}
    }

    let timed = |r: Subroutine| {
        let t0 = Instant::now();
        let res = r.run(g, c.param(r));
        (res, t0.elapsed())
    };
    let results: Vec<(SubroutineResult, Duration)> = if threads > 1 {
        thread::scope(|scope| {
            let handles: Vec<_> = Subroutine::ALL.map(|r| scope.spawn(move || timed(r))).into();
            handles
                .into_iter()
                .map(|h| h.join().expect("subroutine panicked"))
                .collect()
        })
    } else {
        Subroutine::ALL.into_iter().map(timed).collect()
    };

    let mut best: Option<&SubroutineResult> = None;
    for (res, _) in &results {
        if best.is_none_or(|b| res.t > b.t) {
            best = Some(res);
        }
    }
    let best = best.expect("four results");
    let (t, witness) = if best.t >= 2 {
        (best.t, best.witness.clone().expect("subroutines always certify"))
    } else {
        (2, two_bag_witness(g))
    };
    debug_assert!(witness.check(g).is_ok());
    Ok(SolveReport {
        t,
        witness,
        per_subroutine: results.iter().map(|(r, _)| (r.subroutine, r.t)).collect(),
        elapsed: results.iter().map(|(r, d)| (r.subroutine, *d)).collect(),
        total: start.elapsed(),
    })
}

/// Whether [`solve`] agrees with the exhaustive two-coloring search.
pub fn oracle_equivalent(g: &Graph, c: &Constants) -> Result<bool> {
    let ours = solve(g, c)?.t;
    let (theirs, _) = oracle_path_contraction(g)?;
    Ok(ours == theirs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path};

    #[test]
    fn defaults_are_consistent() {
        let c = Constants::default();
        assert_eq!(c.epsilon(), Fraction::new(251, 20_000).unwrap());
        let f = |p, q| Fraction::new(p, q).unwrap();
        assert!(Constants::new(f(1, 2), f(1, 2), f(1, 2)).is_err());
        assert!(Constants::new(Fraction::ONE, Fraction::ONE, Fraction::ONE).is_err());
    }

    #[test]
    fn examples() {
        let c = Constants::default();
        assert_eq!(solve(&path(10), &c).unwrap().t, 10);
        assert_eq!(solve(&complete(5), &c).unwrap().t, 2);
        assert_eq!(solve(&cycle(6), &c).unwrap().t, 2);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(oracle_equivalent(&star, &c).unwrap());
        assert!(oracle_equivalent(&path(12), &c).unwrap());
    }

    #[test]
    fn tiny_graphs() {
        let c = Constants::default();
        let one = solve(&Graph::new(1).unwrap(), &c).unwrap();
        assert_eq!((one.t, one.per_subroutine.len()), (1, 0));
        let two = solve(&path(2), &c).unwrap();
        assert_eq!(two.t, 2);
        assert!(two.witness.check(&path(2)).is_ok());
        let split = Graph::new(3).unwrap();
        assert_eq!(solve(&split, &c).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn threads_do_not_change_results() {
        let c = Constants::default();
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 5)]).unwrap();
        let a = solve_with_threads(&g, &c, 1).unwrap();
        let b = solve_with_threads(&g, &c, 4).unwrap();
        assert_eq!(
            (a.t, &a.witness, &a.per_subroutine),
            (b.t, &b.witness, &b.per_subroutine)
        );
    }
}
