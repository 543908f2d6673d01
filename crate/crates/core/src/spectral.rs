//! Largest eigenvalues of the adjacency matrix `A(G)` and the signless
//! Laplacian `Q(G) = D(G) + A(G)`.
//!
//! The production path is power iteration with a Rayleigh-quotient estimate.
//! [`eigen_oracle`] is an unrelated cyclic Jacobi solver on the dense matrix,
//! used to cross-check it.

use serde::{Deserialize, Serialize};

use crate::error::SpectralError;
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_CMP_TOL: f64 = 1e-8;
pub const MAX_ITERATIONS: usize = 1_000_000;
/// Largest order accepted by [`eigen_oracle`].
pub const DENSE_MAX: usize = 64;

const JACOBI_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Result of a power iteration run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate {
    pub value: f64,
    /// `max_i |(Mx)_i - λ x_i|` at termination.
    pub residual: f64,
    pub iterations: usize,
}

impl SpectralEstimate {
    pub fn compare(&self, threshold: f64, tol: f64) -> ThresholdOutcome {
        compare_threshold(self.value, threshold, tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Matrix {
    Adjacency,
    SignlessLaplacian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Above,
    Below,
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdOutcome {
    pub relation: Relation,
    /// `value - threshold`.
    pub margin: f64,
}

/// Three-way comparison of `value` against `threshold`; anything within
/// `tol` of the threshold is [`Relation::Boundary`].
pub fn compare_threshold(value: f64, threshold: f64, tol: f64) -> ThresholdOutcome {
    let margin = value - threshold;
    let relation = if margin.abs() <= tol {
        Relation::Boundary
    } else if margin > 0.0 {
        Relation::Above
    } else {
        Relation::Below
    };
    ThresholdOutcome { relation, margin }
}

fn neighbor_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).collect()).collect()
}

/// Power iteration on `diag + A`, where `A` is given by neighbor lists.
/// Returns the Rayleigh quotient of `diag + A` minus `shift`.
fn power_iteration(adj: &[Vec<usize>], diag: &[f64], shift: f64, tol: f64) -> Result<SpectralEstimate, SpectralError> {
    if !(tol > 0.0) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let n = adj.len();
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + i as f64 * 1e-6).collect();
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;

    for it in 1..=MAX_ITERATIONS {
        for i in 0..n {
            y[i] = diag[i] * x[i] + adj[i].iter().map(|&j| x[j]).sum::<f64>();
        }
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = x.iter().zip(&y).map(|(a, b)| (b - lambda * a).abs()).fold(0.0, f64::max);
        let value = lambda - shift;
        if residual <= tol * value.max(1.0) {
            return Ok(SpectralEstimate { value: value.max(0.0), residual, iterations: it });
        }
        let ny = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if ny == 0.0 {
            return Ok(SpectralEstimate { value: 0.0, residual: 0.0, iterations: it });
        }
        for i in 0..n {
            x[i] = y[i] / ny;
        }
    }
    Err(SpectralError::NoConvergence { iterations: MAX_ITERATIONS, residual })
}

/// Spectral radius `ρ(G)` of the adjacency matrix.
///
/// Iterates on `A + I` so that bipartite spectra (symmetric about zero) do
/// not oscillate, then removes the shift.
pub fn rho(g: &Graph, tol: f64) -> Result<SpectralEstimate, SpectralError> {
    if tol > 0.0 && g.edge_count() == 0 {
        return Ok(SpectralEstimate { value: 0.0, residual: 0.0, iterations: 0 });
    }
    let adj = neighbor_lists(g);
    power_iteration(&adj, &vec![1.0; g.n()], 1.0, tol)
}

/// Signless Laplacian spectral radius `q(G)`.
pub fn q_radius(g: &Graph, tol: f64) -> Result<SpectralEstimate, SpectralError> {
    let adj = neighbor_lists(g);
    let diag: Vec<f64> = adj.iter().map(|nb| nb.len() as f64).collect();
    power_iteration(&adj, &diag, 0.0, tol)
}

/// Dense symmetric matrix of `g` for the chosen operator.
pub fn dense_matrix(g: &Graph, which: Matrix) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut m = vec![vec![0.0; n]; n];
    for (u, row) in m.iter_mut().enumerate() {
        for v in g.neighbors(u) {
            row[v] = 1.0;
        }
        if which == Matrix::SignlessLaplacian {
            row[u] = g.degree(u) as f64;
        }
    }
    m
}

/// All eigenvalues of a dense symmetric matrix, ascending, by cyclic Jacobi
/// rotations.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    let frob = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let stop = JACOBI_TOL * frob.max(1.0);
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Full spectrum of `A(G)` or `Q(G)`, ascending, via dense Jacobi.
pub fn eigen_oracle(g: &Graph, which: Matrix) -> Result<Vec<f64>, SpectralError> {
    if g.n() > DENSE_MAX {
        return Err(SpectralError::TooLarge { n: g.n(), max: DENSE_MAX });
    }
    Ok(jacobi_eigenvalues(dense_matrix(g, which)))
}

/// The bound `q(G) <= 2m/(n-1) + n - 2`, valid for every graph on `n >= 2`
/// vertices.
pub fn q_upper_bound(g: &Graph) -> Result<f64, SpectralError> {
    let n = g.n();
    if n < 2 {
        return Err(SpectralError::TooSmall { n, min: 2 });
    }
    Ok(2.0 * g.edge_count() as f64 / (n - 1) as f64 + n as f64 - 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilyId};
    use crate::graph::BipartiteGraph;

    fn fam(id: FamilyId) -> Graph {
        make_family(id).unwrap().graph()
    }

    fn top(g: &Graph, which: Matrix) -> f64 {
        *eigen_oracle(g, which).unwrap().last().unwrap()
    }

    #[test]
    fn rho_examples() {
        let k23 = BipartiteGraph::complete(2, 3).unwrap().to_graph();
        let r = rho(&k23, DEFAULT_TOL).unwrap();
        assert!((r.value - 6f64.sqrt()).abs() < 1e-8, "{r:?}");
        assert!(r.residual <= DEFAULT_TOL * r.value.max(1.0));
        assert!((rho(&Graph::complete(5).unwrap(), DEFAULT_TOL).unwrap().value - 4.0).abs() < 1e-9);
        let ex = fam(FamilyId::Kpn2Plus4e { n: 4, p: 4 });
        let r = rho(&ex, DEFAULT_TOL).unwrap();
        let oracle = top(&ex, Matrix::Adjacency);
        assert!((r.value - oracle).abs() < 1e-8);
        assert!(r.value < 12f64.sqrt() - 1e-8);
    }

    #[test]
    fn q_examples() {
        let k23 = BipartiteGraph::complete(2, 3).unwrap().to_graph();
        assert!((q_radius(&k23, DEFAULT_TOL).unwrap().value - 5.0).abs() < 1e-8);
        let nc0 = fam(FamilyId::NcMember { index: 0 });
        assert!((q_radius(&nc0, DEFAULT_TOL).unwrap().value - 13.1789).abs() < 5e-5);
        for n in 1..10 {
            let q = q_radius(&Graph::complete(n).unwrap(), DEFAULT_TOL).unwrap().value;
            assert!((q - (2 * n - 2) as f64).abs() < 1e-8);
        }
    }

    #[test]
    fn oracle_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let eig = eigen_oracle(&p3, Matrix::Adjacency).unwrap();
        let s2 = 2f64.sqrt();
        for (a, b) in eig.iter().zip([-s2, 0.0, s2]) {
            assert!((a - b).abs() < 1e-10);
        }
        assert!((top(&fam(FamilyId::Star { leaves: 3 }), Matrix::SignlessLaplacian) - 4.0).abs() < 5e-5);
        assert!((top(&fam(FamilyId::NpMember { index: 6 }), Matrix::SignlessLaplacian) - 2.0).abs() < 5e-5);
        assert!(eigen_oracle(&Graph::empty(65).unwrap(), Matrix::Adjacency).is_err());
    }

    #[test]
    fn comparator_examples() {
        assert_eq!(compare_threshold(5.0, 5.0, 1e-8).relation, Relation::Boundary);
        let t = 2.0 * 9.0 - 5.0 + 3.0 / 8.0;
        let o = compare_threshold(13.1789, t, 1e-8);
        assert_eq!(o.relation, Relation::Below);
        assert!((o.margin + 0.1961).abs() < 1e-4);
        let o = compare_threshold(9.7720, 2.0 * 7.0 - 5.0 + 0.5, 1e-8);
        assert_eq!(o.relation, Relation::Above);
    }

    #[test]
    fn upper_bound_examples() {
        for n in 2..9 {
            let b = q_upper_bound(&Graph::complete(n).unwrap()).unwrap();
            assert!((b - (2 * n - 2) as f64).abs() < 1e-12);
        }
        let k4v = fam(FamilyId::Kn1PlusVertex { n: 5 });
        assert!((q_upper_bound(&k4v).unwrap() - 6.0).abs() < 1e-12);
        assert!((q_radius(&k4v, DEFAULT_TOL).unwrap().value - 6.0).abs() < 1e-8);
        let c4 = fam(FamilyId::Cycle { n: 4 });
        assert!((q_upper_bound(&c4).unwrap() - 14.0 / 3.0).abs() < 1e-12);
        assert!((q_radius(&c4, DEFAULT_TOL).unwrap().value - 4.0).abs() < 1e-8);
        assert!(q_upper_bound(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn degenerate_inputs() {
        let e = Graph::empty(4).unwrap();
        assert_eq!(rho(&e, DEFAULT_TOL).unwrap().value, 0.0);
        assert_eq!(q_radius(&e, DEFAULT_TOL).unwrap().value, 0.0);
        assert_eq!(rho(&Graph::empty(1).unwrap(), DEFAULT_TOL).unwrap().value, 0.0);
        assert!(matches!(rho(&e, 0.0), Err(SpectralError::InvalidTolerance(_))));
        assert!(matches!(q_radius(&e, f64::NAN), Err(SpectralError::InvalidTolerance(_))));
    }
}
