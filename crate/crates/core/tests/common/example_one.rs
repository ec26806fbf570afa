//! Pham–Brieskorn family x1^3 + x2^3 + u + d x2 + c x1 + b x1 x2.

use std::sync::Arc;

use logdisc_core::hyper::{DeformationSpec, Hypersurface};
use logdisc_core::polyring::VarTable;

use super::p;

pub fn vt() -> Arc<VarTable> {
    VarTable::new(&["x1", "x2"], &["u", "d", "c", "b"]).unwrap()
}

pub fn family() -> Hypersurface {
    let vt = vt();
    let basis = ["1", "x2", "x1", "x1*x2"].iter().map(|s| p(&vt, s)).collect();
    Hypersurface::new(DeformationSpec::new(p(&vt, "x1^3 + x2^3"), basis).unwrap(), None).unwrap()
}

pub const CORE: &str = "256*b^2*d^3 + 768*d^2*c^2 + 96*b^4*d*c - b^8 + 256*c^3*b^2";

pub const MAXWELL: &str = "(d - c)^2*(d^2 + d*c + c^2)^2";

pub const TAU: [[[&str; 4]; 4]; 4] = [
    [["1", "0", "0", "0"], ["0", "-1/3*d", "0", "1/9*b*c"], ["0", "0", "-1/3*c", "1/9*b*d"], ["0", "1/9*b*c", "1/9*b*d", "1/9*d*c"]],
    [["0", "1", "0", "0"], ["1", "0", "0", "1/9*b^2"], ["0", "0", "-1/3*b", "-1/3*c"], ["0", "1/9*b^2", "-1/3*c", "1/9*b*d"]],
    [["0", "0", "1", "0"], ["0", "-1/3*b", "0", "-1/3*d"], ["1", "0", "0", "1/9*b^2"], ["0", "-1/3*d", "1/9*b^2", "1/9*b*c"]],
    [["0", "0", "0", "1"], ["0", "0", "1", "0"], ["0", "1", "0", "0"], ["1", "0", "0", "1/9*b^2"]],
];

pub const SIGMA: [[&str; 4]; 4] = [
    ["3*u", "2*d", "2*c", "b"],
    ["-2/3*d^2 + 1/9*b^2*c", "3*u + 1/9*b^3", "-b*d", "2*c"],
    ["-2/3*c^2 + 1/9*b^2*d", "-b*c", "3*u + 1/9*b^3", "2*d"],
    ["5/9*b*c*d", "-2/3*c^2 + 1/3*b^2*d", "-2/3*d^2 + 1/3*b^2*c", "3*u + 1/9*b^3"],
];

pub const DET_SIGMA: &str = "8/3*b^2*c^4*d - 1/243*b^8*c*d + 8/3*d^4*c*b^2 + 23/27*b^4*d^2*c^2 + 32*u*b*c^2*d^2 \
     - 11/9*u*b^5*c*d - 30*u^2*b^2*d*c - 1/243*b^6*d^3 - 1/243*b^6*c^3 - 32/9*d^3*c^3 \
     + 24*u^2*d^3 + 1/3*u^2*b^6 + 9*u^3*b^3 + 1/243*u*b^9 - 20/9*u*c^3*b^3 - 20/9*u*b^3*d^3 \
     + 24*c^3*u^2 + 81*u^4 + 16/9*d^6 + 16/9*c^6";

pub const BH: [[&str; 4]; 4] = [
    ["8*b^2", "16*b*c", "16*b*d", "b^4 + 16*d*c"],
    ["16*b*c", "-8*b^2*d", "b^4 + 16*d*c", "8/3*b^3*c - 16/3*b*d^2"],
    ["16*b*d", "b^4 + 16*d*c", "-8*b^2*c", "8/3*b^3*d - 16/3*b*c^2"],
    // The printed (4,4) entry carries a stray closing parenthesis.
    ["b^4 + 16*d*c", "8/3*b^3*c - 16/3*b*d^2", "8/3*b^3*d - 16/3*b*c^2", "56/9*b^2*d*c + 1/9*b^6"],
];

const E12: &str = "-64/3*d^2*b^2 + 14/3*b^4*c + 48*u*b*c + 32*d*c^2";
const E13: &str = "-64/3*c^2*b^2 + 14/3*b^4*d + 48*u*b*d + 32*d^2*c";
const E14: &str = "152/9*b^3*d*c - 32/3*b*c^3 - 32/3*b*d^3 + 3*u*b^4 + 48*u*d*c + 1/9*b^7";
const E24: &str = "-106/27*c^2*b^4 - 32/3*c^3*d + 17/27*b^6*d + 176/9*b^2*c*d^2 + 8*u*b^3*d - 16*u*b*c^2";
const E44: &str = "245/81*b^5*c*d + 16*b*c^2*d^2 - 32/9*c^3*b^3 - 32/9*b^3*d^3 + 56/3*u*b^2*d*c \
     + 1/3*u*b^6 + 1/81*b^9";

/// The printed (2,4) = (4,2) = (3,4) = (4,3) value belongs to (3,4) and
/// (4,3); (2,4) and (4,2) are its image under x1 <-> x2, which swaps c, d.
pub fn bhf() -> [[String; 4]; 4] {
    let mirrored: String = E24.chars().map(|ch| match ch { 'c' => 'd', 'd' => 'c', o => o }).collect();
    let s = |x: &str| x.to_string();
    [
        [s("24*u*b^2 + 80*b*c*d + b^5"), s(E12), s(E13), s(E14)],
        [s(E12), s("-112/3*b*c*d^2 + 64/9*b^3*c^2 - 24*b^2*d*u - 17/9*b^5*d"), s(E14), mirrored.clone()],
        [s(E13), s(E14), s("-112/3*b*d*c^2 + 64/9*b^3*d^2 - 17/9*b^5*c - 24*b^2*c*u"), s(E24)],
        [s(E14), mirrored, s(E24), s(E44)],
    ]
}
