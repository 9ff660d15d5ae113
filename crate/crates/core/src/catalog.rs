//! Named complexes used as fixtures and by the command-line tool.

use crate::complex::SimplicialComplex;
use crate::moore;

fn build<const N: usize>(m: usize, facets: &[[usize; N]]) -> SimplicialComplex {
    SimplicialComplex::new(m, facets).expect("catalog entries are well formed")
}

/// `M(2)`, the 7-vertex projective plane.
pub fn moore_rp2() -> SimplicialComplex {
    moore::moore_complex(2).expect("p = 2 is valid")
}

/// The 6-vertex projective plane (half of the icosahedron); 1-neighborly.
pub fn rp2_six() -> SimplicialComplex {
    build(
        6,
        &[
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [2, 4, 5],
            [3, 5, 6],
            [2, 4, 6],
        ],
    )
}

/// The 7-vertex torus: facets `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus_seven() -> SimplicialComplex {
    let f = |x: usize| x % 7 + 1;
    let facets: Vec<[usize; 3]> =
        (0..7).flat_map(|i| [[f(i), f(i + 1), f(i + 3)], [f(i), f(i + 2), f(i + 3)]]).collect();
    build(7, &facets)
}

/// Octahedral 2-sphere; antipodal pairs `{1,2}`, `{3,4}`, `{5,6}`.
pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [1, 2] {
        for b in [3, 4] {
            for c in [5, 6] {
                facets.push([a, b, c]);
            }
        }
    }
    build(6, &facets)
}

/// Suspension of an `n`-gon: equator `1..=n`, poles `n+1` and `n+2`.
pub fn bipyramid(n: usize) -> SimplicialComplex {
    let facets: Vec<[usize; 3]> = (1..=n)
        .flat_map(|i| {
            let j = i % n + 1;
            [[i, j, n + 1], [i, j, n + 2]]
        })
        .collect();
    build(n + 2, &facets)
}

/// A triangle with a pendant edge: facets `{1,2,3}` and `{3,4}`.
pub fn remark_complex() -> SimplicialComplex {
    SimplicialComplex::new(4, [vec![1, 2, 3], vec![3, 4]]).expect("well formed")
}

/// `m` isolated points.
pub fn points(m: usize) -> SimplicialComplex {
    SimplicialComplex::new(m, (1..=m).map(|v| [v])).expect("well formed")
}

/// Look up a fixture by name (`m2`, `rp2-6`, `torus-7`, `octahedron`,
/// `bipyramid-<n>`, `remark`, `cycle-<n>`, `simplex-<m>`, `boundary-<m>`,
/// `points-<m>`, `moore-<p>`).
pub fn by_name(name: &str) -> Option<SimplicialComplex> {
    let param = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    match name {
        "m2" => Some(moore_rp2()),
        "rp2-6" => Some(rp2_six()),
        "torus-7" => Some(torus_seven()),
        "octahedron" => Some(octahedron()),
        "remark" => Some(remark_complex()),
        _ => {
            if let Some(n) = param("bipyramid-").filter(|&n| n >= 3) {
                Some(bipyramid(n))
            } else if let Some(n) = param("cycle-").filter(|&n| n >= 3) {
                SimplicialComplex::cycle(n).ok()
            } else if let Some(m) = param("simplex-") {
                SimplicialComplex::simplex(m).ok()
            } else if let Some(m) = param("boundary-").filter(|&m| m >= 2) {
                SimplicialComplex::simplex_boundary(m).ok()
            } else if let Some(m) = param("points-") {
                SimplicialComplex::new(m, (1..=m).map(|v| [v])).ok()
            } else if let Some(p) = param("moore-") {
                moore::moore_complex(p).ok()
            } else {
                None
            }
        }
    }
}
