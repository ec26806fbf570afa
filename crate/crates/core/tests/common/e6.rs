//! Versal deformation of E6: x^3 + y^4 + g x y^2 + d y^2 + c x y + b y + a x + u.

use std::sync::Arc;

use logdisc_core::hyper::{DeformationSpec, Hypersurface};
use logdisc_core::polyring::VarTable;

use super::p;

pub const P1: &str = "a*b/12 - b*d*g/24 + a*c*g^2/72 - b*g^4/144";
pub const P2: &str = "a*c/12 - c*d*g/24 - b*g^2/24 - c*g^4/144";
pub const P3: &str = "b*c/12 + a*d/6 - d^2*g/12 + c^2*g^2/72 + a*g^3/36 - d*g^4/72";
pub const Q3: &str = "a*b/12 - c*d^2/12 + c^3*g/48 - b*d*g/12 + a*c*g^2/18 - c*d*g^3/24 - b*g^4/144";
pub const Q5: &str = "b*c/12 + a*d/6 - d^2*g/12 + 11*c^2*g^2/144 + a*g^3/36 - d*g^4/72";

pub const T16: &str = "5*c^2/12 + 2*a*g/3 - d*g^2/2 - g^5/36";
pub const T26: &str = "b*c/2 + 2*a*d/3 - d^2*g/3 + 11*c^2*g^2/36 + a*g^3/6 - d*g^4/9 - g^7/216";
pub const T36: &str = "a*c/2 - 11*c*d*g/12 - b*g^2/3 - c*g^4/8";
pub const T46: &str = "a*b/2 - c*d^2/3 + 25*c^3*g/144 - 5*b*d*g/12 + 5*a*c*g^2/12 - 7*c*d*g^3/18 - 5*b*g^4/72 - c*g^6/36";
pub const T55: &str = "d^2 - 5*c^2*g/12 - a*g^2/3 + d*g^3/3 + g^6/72";
pub const T56: &str = "-3*c^2*d/8 - 7*b*c*g/12 - 2*a*d*g/3 + 5*d^2*g^2/12 - 5*c^2*g^3/24 - a*g^4/12 + 5*d*g^5/72 + g^8/432";
pub const T66: &str = "5*c^4/144 - 5*b*c*d/12 - a*d^2/3 - b^2*g/8 + 23*a*c^2*g/72 + d^3*g/6 + a^2*g^2/9 \
    - 35*c^2*d*g^2/72 - 17*b*c*g^3/72 - 5*a*d*g^3/18 + d^2*g^4/8 - 59*c^2*g^5/864 - a*g^6/54 \
    + d*g^7/72 + g^10/2592";

pub fn vt() -> Arc<VarTable> {
    VarTable::new(&["x", "y"], &["u", "a", "b", "c", "d", "g"]).unwrap()
}

pub fn family() -> Hypersurface {
    let vt = vt();
    let basis = ["1", "x", "y", "x*y", "y^2", "x*y^2"].iter().map(|s| p(&vt, s)).collect();
    Hypersurface::new(DeformationSpec::new(p(&vt, "x^3 + y^4"), basis).unwrap(), None).unwrap()
}

pub const ZETA: [&str; 6] = ["6", "g^2/3", "0", "5*c*g/6", "-2*d - g^3/6", T16];

pub fn tau() -> [[[&'static str; 6]; 6]; 6] {
    let acg = "a*c/12 - b*g^2/24";
    let bcg = "-b/4 - c*g^2/24";
    let ad = "-a/3 + d*g/6";
    let cdb = "c*d/6 + b*g/12";
    let cag = "c^2/12 + a*g/6 - d*g^2/12";
    let acd = "a*c/12 - c*d*g/8 - b*g^2/24";
    let dg3 = "-d/2 - g^3/12";
    let c2 = "c^2/12 + a*g/6 - d*g^2/6 - g^5/72";
    let bcg6 = "-b/4 - c*g^2/6";
    let cdb3 = "c*d/6 + b*g/12 + c*g^3/24";
    let tau1 = [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "-a/3", "0", "b*g/12", "0", "b*c/12"],
        ["0", "0", "0", "0", "-b/4", acg],
        ["0", "b*g/12", "0", "b*c/12", acg, P1],
        ["0", "0", "-b/4", acg, "0", "-b*c*g/16"],
        ["0", "b*c/12", acg, P1, "-b*c*g/16", "-b*c*d/24 - b^2*g/48 + a*c^2*g/48 - b*c*g^3/48"],
    ];
    let tau2 = [
        ["0", "1", "0", "0", "0", "0"],
        ["1", "0", "0", "c*g/12", "0", "c^2/12"],
        ["0", "0", "0", "0", "-c/4", bcg],
        ["0", "c*g/12", "0", "c^2/12", bcg, P2],
        ["0", "0", "-c/4", bcg, "0", "-c^2*g/16"],
        ["0", "c^2/12", bcg, P2, "-c^2*g/16", "-c^2*d/24 - b*c*g/12 - c^2*g^3/48"],
    ];
    let tau3 = [
        ["0", "0", "1", "0", "0", "0"],
        ["0", "-c/3", "0", ad, "0", cdb],
        ["1", "0", "0", "0", "-d/2", cag],
        ["0", ad, "0", cdb, cag, P3],
        ["0", "0", "-d/2", cag, "-b/4", acd],
        ["0", cdb, cag, P3, acd, Q3],
    ];
    let tau4 = [
        ["0", "0", "0", "1", "0", "0"],
        ["0", "0", "1", "g^2/6", "0", "c*g/4"],
        ["0", "1", "0", "0", "-g/2", dg3],
        ["1", "g^2/6", "0", "c*g/4", dg3, c2],
        ["0", "0", "-g/2", dg3, "-c/4", bcg6],
        ["0", "c*g/4", dg3, c2, bcg6, "a*c/12 - c*d*g/4 - b*g^2/12 - 7*c*g^4/144"],
    ];
    let tau5 = [
        ["0", "0", "0", "0", "1", "0"],
        ["0", "-g/3", "0", "-c/3", "0", ad],
        ["0", "0", "1", "0", "0", "c*g/4"],
        ["0", "-c/3", "0", ad, "c*g/4", cdb3],
        ["1", "0", "0", "c*g/4", "-d/2", cag],
        ["0", ad, "c*g/4", cdb3, cag, Q5],
    ];
    let tau6 = [
        ["0", "0", "0", "0", "0", "1"],
        ["0", "0", "0", "0", "1", "g^2/6"],
        ["0", "0", "0", "1", "0", "0"],
        ["0", "0", "1", "g^2/6", "0", "c*g/4"],
        ["0", "1", "0", "0", "-g/2", dg3],
        ["1", "g^2/6", "0", "c*g/4", dg3, c2],
    ];
    [tau1, tau2, tau3, tau4, tau5, tau6]
}

pub fn trace_matrix() -> [[&'static str; 6]; 6] {
    let z4 = "5*c*g/6";
    let z5 = "-2*d - g^3/6";
    let t24 = "2*c*d/3 + b*g/2 + 2*c*g^3/9";
    let t35 = "-3*b/2 - c*g^2/2";
    [
        ["6", "g^2/3", "0", z4, z5, T16],
        ["g^2/3", "-2*a + 2*d*g/3 + g^4/18", z4, t24, T16, T26],
        ["0", z4, z5, T16, t35, T36],
        [z4, t24, T16, T26, T36, T46],
        [z5, T16, t35, T36, T55, T56],
        [T16, T26, T36, T46, T56, T66],
    ]
}
