"""Quick check that the extension module loads and agrees with the CLI."""

from pathlib import Path

import logdisc

FIXTURES = Path(__file__).resolve().parent.parent / "crates" / "core" / "fixtures"


def main():
    a2 = logdisc.Model.from_file(FIXTURES / "a2.ls")
    assert a2.kind == "hypersurface" and a2.mu == 2, a2
    assert a2.discriminant() == "4/3*b^3 + 9*u^2"

    out = a2.run("count", {"u": 1, "b": -3})
    assert out["count"] == 0 and out["realCriticalPoints"] == 2, out
    try:
        a2.count("u=0,b=0")
    except logdisc.DegenerateError:
        pass
    else:
        raise AssertionError("expected a degenerate point")

    e6 = logdisc.Model.from_file(FIXTURES / "e6.ls")
    tables = e6.run("tables")
    assert tables["mu"] == 6 and len(tables["tau"]) == 6

    cusp = logdisc.Model.from_file(FIXTURES / "cusp_curve.ls")
    assert cusp.kind == "ci"
    assert cusp.discriminant() == "4/27*t^3 + u^2"

    assert logdisc.inertia([[1, 0], [0, "-1/2"]]) == (1, 1, 0)
    assert logdisc.normalize("(x + a)^2 - a^2", ["x"], ["a"]) == "x^2 + 2*x*a"

    pts = logdisc.critical_points("x^3 - 3*x + 1", ["x"], expected=2)
    assert sorted(p["morse_index"] for p in pts) == [0, 1], pts
    assert logdisc.grid_euler("1 - x^2 - y^2", ["x", "y"], ball=2.0) == (1, 0, 0)

    print("smoke test ok")


if __name__ == "__main__":
    main()
