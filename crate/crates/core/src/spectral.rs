use nalgebra::DMatrix;

use crate::error::Result;
use crate::graph::Graph;

/// Largest eigenvalue of the Laplacian `D - A` of a simple graph.
pub fn laplacian_lambda_max(g: &Graph) -> Result<f64> {
    g.require_loopless()?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0.0);
    }
    let mut lap = DMatrix::<f64>::zeros(n, n);
    for &(u, v) in g.edges() {
        lap[(u, v)] -= 1.0;
        lap[(v, u)] -= 1.0;
        lap[(u, u)] += 1.0;
        lap[(v, v)] += 1.0;
    }
    let eig = lap.symmetric_eigen();
    Ok(eig.eigenvalues.iter().copied().fold(f64::MIN, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, petersen};
    use crate::error::Error;
    use crate::graph::GraphBuilder;
    use crate::label::VertexLabel;
    use std::f64::consts::PI;

    #[test]
    fn small_values() {
        assert!((laplacian_lambda_max(&complete(2)).unwrap() - 2.0).abs() < 1e-9);
        assert!((laplacian_lambda_max(&cycle(4)).unwrap() - 4.0).abs() < 1e-9);
        let c5 = 2.0 + 2.0 * (PI / 5.0).cos();
        assert!((laplacian_lambda_max(&cycle(5)).unwrap() - c5).abs() < 1e-9);
        // Petersen spectrum of D - A is {0, 2^5, 5^4}.
        assert!((laplacian_lambda_max(&petersen()).unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn cycles_match_closed_form() {
        for n in 3..=12 {
            let expected = 2.0 - 2.0 * (2.0 * PI * (n / 2) as f64 / n as f64).cos();
            let got = laplacian_lambda_max(&cycle(n)).unwrap();
            assert!((got - expected).abs() < 1e-9, "C_{n}: {got} vs {expected}");
        }
    }

    #[test]
    fn rejects_loops() {
        let mut b = GraphBuilder::new();
        let v = b.add_vertex(VertexLabel::atom("x")).unwrap();
        b.add_edge(v, v);
        assert!(matches!(laplacian_lambda_max(&b.build()), Err(Error::LoopPresent(_))));
    }
}
