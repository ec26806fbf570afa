use rayon::prelude::*;

use super::numpoly::NumPoly;
use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// Euler characteristics of `{f >= 0}`, `{f <= 0}` and `{f = 0}` inside a
/// ball, estimated on a uniform grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridChi {
    pub resolution: usize,
    pub chi_ge: i64,
    pub chi_le: i64,
    pub chi_eq: i64,
    /// The last three resolutions agreed.
    pub stable: bool,
}

/// Counts at one resolution.
///
/// The ball is replaced by the union of grid cells (segments in 1-d,
/// squares in 2-d) lying entirely inside it. Each square is split into four
/// triangles around its centre, and `f` is interpolated linearly on every
/// simplex. Then `{f >= 0}` retracts onto the full subcomplex spanned by the
/// vertices with `f >= 0`, likewise for `{f <= 0}` with `f < 0`, and the zero
/// set is a graph with one vertex per sign-changing edge and one segment per
/// sign-changing triangle. Vertices where `f` vanishes count as positive.
fn chi_at(f: &NumPoly, radius: f64, m: usize) -> (i64, i64, i64) {
    let h = 2.0 * radius / m as f64;
    let coord = |i: usize| -radius + h * i as f64;
    match f.nvars() {
        1 => {
            let signs: Vec<bool> = (0..=m).map(|i| f.eval(&[coord(i)]) >= 0.0).collect();
            let pos_v = signs.iter().filter(|&&s| s).count() as i64;
            let neg_v = m as i64 + 1 - pos_v;
            let (mut pos_e, mut neg_e, mut change) = (0i64, 0i64, 0i64);
            for w in signs.windows(2) {
                match (w[0], w[1]) {
                    (true, true) => pos_e += 1,
                    (false, false) => neg_e += 1,
                    _ => change += 1,
                }
            }
            (pos_v - pos_e, neg_v - neg_e, change)
        }
        2 => {
            let r2 = radius * radius * (1.0 + 1e-12);
            let inside = |i: usize, j: usize| {
                let (x, y) = (coord(i), coord(j));
                x * x + y * y <= r2
            };
            let signs: Vec<Vec<bool>> = (0..=m)
                .into_par_iter()
                .map(|i| (0..=m).map(|j| f.eval2(coord(i), coord(j)) >= 0.0).collect())
                .collect();
            let centres: Vec<Vec<bool>> = (0..m)
                .into_par_iter()
                .map(|i| (0..m).map(|j| f.eval2(coord(i) + h / 2.0, coord(j) + h / 2.0) >= 0.0).collect())
                .collect();
            let cell_in = |i: usize, j: usize| {
                inside(i, j) && inside(i + 1, j) && inside(i, j + 1) && inside(i + 1, j + 1)
            };
            let cells: Vec<Vec<bool>> = (0..m)
                .into_par_iter()
                .map(|i| (0..m).map(|j| cell_in(i, j)).collect())
                .collect();
            let (mut vert, mut hedge, mut vedge) = (
                vec![vec![false; m + 1]; m + 1],
                vec![vec![false; m + 1]; m],
                vec![vec![false; m]; m + 1],
            );
            // Per sign class: vertices, edges, triangles; and zero-set counts.
            let mut pos = [0i64; 3];
            let mut neg = [0i64; 3];
            let (mut zv, mut ze) = (0i64, 0i64);
            for i in 0..m {
                for j in 0..m {
                    if !cells[i][j] {
                        continue;
                    }
                    vert[i][j] = true;
                    vert[i + 1][j] = true;
                    vert[i][j + 1] = true;
                    vert[i + 1][j + 1] = true;
                    hedge[i][j] = true;
                    hedge[i][j + 1] = true;
                    vedge[i][j] = true;
                    vedge[i + 1][j] = true;
                    let c = centres[i][j];
                    let corners = [
                        signs[i][j],
                        signs[i + 1][j],
                        signs[i + 1][j + 1],
                        signs[i][j + 1],
                    ];
                    let class = |s: bool| if s { 0 } else { 1 };
                    let mut counts = [[0i64; 3]; 2];
                    counts[class(c)][0] += 1;
                    for k in 0..4 {
                        let (a, b) = (corners[k], corners[(k + 1) % 4]);
                        // spoke centre-corner
                        if a == c {
                            counts[class(c)][1] += 1;
                        } else {
                            zv += 1;
                        }
                        // triangle centre, corner k, corner k+1
                        if a == b && b == c {
                            counts[class(c)][2] += 1;
                        } else {
                            ze += 1;
                        }
                    }
                    for (acc, cnt) in [(&mut pos, counts[0]), (&mut neg, counts[1])] {
                        for t in 0..3 {
                            acc[t] += cnt[t];
                        }
                    }
                }
            }
            for i in 0..=m {
                for j in 0..=m {
                    if vert[i][j] {
                        if signs[i][j] {
                            pos[0] += 1
                        } else {
                            neg[0] += 1
                        }
                    }
                    if i < m && hedge[i][j] {
                        if signs[i][j] != signs[i + 1][j] {
                            zv += 1;
                        } else if signs[i][j] {
                            pos[1] += 1;
                        } else {
                            neg[1] += 1;
                        }
                    }
                    if j < m && vedge[i][j] {
                        if signs[i][j] != signs[i][j + 1] {
                            zv += 1;
                        } else if signs[i][j] {
                            pos[1] += 1;
                        } else {
                            neg[1] += 1;
                        }
                    }
                }
            }
            (pos[0] - pos[1] + pos[2], neg[0] - neg[1] + neg[2], zv - ze)
        }
        _ => unreachable!("checked by caller"),
    }
}

/// Grid estimate of the Euler characteristics of the sublevel, superlevel
/// and level sets of `f` (parameters fixed) in the ball of radius `radius`,
/// for one or two space variables. Starts at `resolution` cells per side and
/// doubles until three consecutive resolutions agree or `max_resolution` is
/// reached. Two agreeing resolutions are not enough: a critical value close
/// to zero can pinch the level set below the cell size at both.
pub fn grid_euler(f: &Polynomial, radius: f64, resolution: usize, max_resolution: usize) -> Result<GridChi> {
    let num = NumPoly::new(f)?;
    if !(1..=2).contains(&num.nvars()) {
        return Err(Error::Input(format!(
            "grid Euler characteristics need one or two space variables, got {}",
            num.nvars()
        )));
    }
    if !(radius > 0.0) || resolution < 2 {
        return Err(Error::Input("grid needs a positive radius and resolution >= 2".into()));
    }
    let mut m = resolution;
    let mut history = vec![chi_at(&num, radius, m)];
    while 2 * m <= max_resolution {
        m *= 2;
        history.push(chi_at(&num, radius, m));
        if let [.., a, b, c] = history.as_slice() {
            if a == b && b == c {
                break;
            }
        }
    }
    let last = *history.last().expect("at least one resolution");
    let stable = history.len() >= 3 && history[history.len() - 3..].iter().all(|h| *h == last);
    Ok(GridChi {
        resolution: m,
        chi_ge: last.0,
        chi_le: last.1,
        chi_eq: last.2,
        stable,
    })
}
