use super::{bracket, c, turn_weight, vertex_weight, ModelParams, ThetaError, C64, SINGULAR};
use crate::lattice::{classify_vertex, enumerate_states, heights, TurnKind, VertexKind};

/// One vertex of a state: kind, line indices and the height entering its
/// weight.
#[derive(Debug, Clone, Copy)]
struct PlannedVertex {
    kind: VertexKind,
    line: usize,
    col: usize,
    upper: bool,
    height: i64,
}

/// Largest tolerated ratio of the summed term moduli to the modulus of the sum.
pub const MAX_CANCELLATION: f64 = 1e6;

/// Vertex data of every state for one `n`, so that repeated weighted sums
/// do not re-enumerate.
#[derive(Debug, Clone)]
pub struct BrutePlan {
    n: usize,
    states: Vec<(Vec<PlannedVertex>, Vec<TurnKind>)>,
}

impl BrutePlan {
    pub fn new(n: usize) -> BrutePlan {
        let states = enumerate_states(n)
            .iter()
            .map(|s| {
                let grid = heights(s).expect("enumerated states have heights");
                let mut vertices = Vec::with_capacity(2 * n * n);
                for row in 0..2 * n {
                    let upper = row % 2 == 1;
                    for col in 0..n {
                        let kind = classify_vertex(s, row, col).expect("ice rule holds");
                        let height = if upper {
                            grid.get(row + 1, col)
                        } else {
                            grid.get(row, col)
                        };
                        vertices.push(PlannedVertex {
                            kind,
                            line: row / 2,
                            col,
                            upper,
                            height,
                        });
                    }
                }
                (vertices, s.turns().to_vec())
            })
            .collect();
        BrutePlan { n, states }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Sum over states of the product of all vertex and turn weights.
    pub fn partition(&self, params: &ModelParams) -> Result<C64, ThetaError> {
        Ok(self.partition_with_scale(params)?.0)
    }

    /// As [`BrutePlan::partition`], but a draw where the terms cancel by more
    /// than [`MAX_CANCELLATION`] is near-singular: the sum then sits close to
    /// a zero and carries too few correct digits to compare.
    pub fn partition_conditioned(&self, params: &ModelParams) -> Result<C64, ThetaError> {
        let (total, scale) = self.partition_with_scale(params)?;
        if scale > MAX_CANCELLATION * total.norm() {
            return Err(ThetaError::NearSingular(
                "cancellation in the sum over states",
            ));
        }
        Ok(total)
    }

    /// The sum together with the sum of the moduli of its terms; their ratio
    /// measures the cancellation in the sum.
    pub fn partition_with_scale(&self, params: &ModelParams) -> Result<(C64, f64), ThetaError> {
        check_size(self.n, params)?;
        let mut total = c(0.0, 0.0);
        let mut scale = 0.0;
        for (vertices, turns) in &self.states {
            let mut w = c(1.0, 0.0);
            for v in vertices {
                let lam = if v.upper {
                    params.lambda[v.line] - params.mu[v.col]
                } else {
                    params.lambda[v.line] + params.mu[v.col]
                };
                w *= vertex_weight(v.kind, lam, params.rho + v.height as f64, params)?;
            }
            for (i, &t) in turns.iter().enumerate() {
                w *= turn_weight(t, params.lambda[i], params.rho, params)?;
            }
            total += w;
            scale += w.norm();
        }
        if !total.is_finite() {
            return Err(ThetaError::NonFinite("brute-force partition function"));
        }
        Ok((total, scale))
    }
}

fn check_size(n: usize, params: &ModelParams) -> Result<(), ThetaError> {
    if params.lambda.len() != n || params.mu.len() != n {
        return Err(ThetaError::SizeMismatch {
            params: params.lambda.len(),
            requested: n,
        });
    }
    Ok(())
}

/// Partition function as a sum over all states.
pub fn partition_brute(n: usize, params: &ModelParams) -> Result<C64, ThetaError> {
    BrutePlan::new(n).partition(params)
}

/// Partition function from the determinant formula.
pub fn partition_filali(n: usize, params: &ModelParams) -> Result<C64, ThetaError> {
    check_size(n, params)?;
    let b = |x: C64| bracket(x, params);
    let one = c(1.0, 0.0);
    let (lam, mu, rho, zeta) = (&params.lambda, &params.mu, params.rho, params.zeta);
    let ni = n as i64;

    let mut num = b(one)?.powi((ni - 2 * ni * ni) as i32);
    let mut den = c(1.0, 0.0);
    for i in 0..n {
        let i1 = i as i64 + 1;
        num *= b(lam[i] * 2.0)?
            * b(zeta - mu[i])?
            * b(rho + zeta + mu[i])?
            * b(rho + (2 * i1 - ni - 2) as f64)?;
        den *= b(zeta + lam[i])? * b(rho + zeta + lam[i])? * b(rho + (ni - i1) as f64)?;
    }
    let mut k = vec![vec![c(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let f = b(lam[i] + mu[j] + 1.0)?
                * b(lam[i] - mu[j] + 1.0)?
                * b(lam[i] + mu[j])?
                * b(lam[i] - mu[j])?;
            if f.norm() < SINGULAR {
                return Err(ThetaError::NearSingular("determinant entry"));
            }
            num *= f;
            k[i][j] = f.inv();
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            den *= b(lam[i] + lam[j] + 1.0)?
                * b(lam[i] - lam[j])?
                * b(mu[j] + mu[i])?
                * b(mu[j] - mu[i])?;
        }
    }
    if den.norm() < SINGULAR {
        return Err(ThetaError::NearSingular("determinant prefactor"));
    }
    let z = num / den * complex_det(k);
    if !z.is_finite() {
        return Err(ThetaError::NonFinite("determinant formula"));
    }
    Ok(z)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn complex_det(mut m: Vec<Vec<C64>>) -> C64 {
    let n = m.len();
    let mut det = c(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))
            .expect("nonempty range");
        if m[pivot][col].norm() == 0.0 {
            return c(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            for k in col..n {
                let v = m[col][k];
                m[r][k] -= f * v;
            }
        }
    }
    det
}
