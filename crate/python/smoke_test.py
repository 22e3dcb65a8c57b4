"""Smoke test for the `minplus` extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`,
then run `python python/smoke_test.py`.
"""

import math
from fractions import Fraction

import minplus as mp


def main():
    a = mp.Matrix.worked_example()
    assert a.order == 7
    g = a.charpoly_tropdet()
    h = a.charpoly_flv()
    inf = math.inf
    assert g.coeffs == [0, 3, 8, 6, 20, inf, inf, inf], g.coeffs
    assert h.coeffs == [0, 3, 6, 6, 9, 12, 12, 15], h.coeffs
    assert g.canonicalize().coeffs == [0, 2, 4, 6, 20, inf, inf, inf]

    gf, hf = g.factorize(), h.factorize()
    assert gf.factors == [(2, 3), (14, 1)] and gf.xpower == 3
    assert hf.factors == [(2, 6), (3, 1)] and hf.xpower == 0
    assert gf.min_root() == hf.min_root() == a.min_cycle_mean() == 2
    assert gf.expand() == g.canonicalize()
    assert not g.is_equivalent(h)

    p = mp.Polynomial([0, 2, 6])
    assert str(p.factorize()) == "(x ⊕ 2) ⊗ (x ⊕ 4)"
    assert [(x, y) for x, y, _, _ in p.breakpoints()] == [(2, 4), (4, 6)]
    assert p.plot_points() == [(1, 2), (2, 4), (4, 6), (5, 6)]
    assert p.evaluate(Fraction(5, 2)) == Fraction(9, 2)
    assert p.evaluate(None) == 6

    circuits = a.circuits()
    assert [c["vertices"] for c in circuits] == [[2], [1, 3], [0, 2, 1], [0, 2, 3, 1]]
    assert not a.is_separated()
    assert a.coefficient_check()["pass"]
    assert a.verify_separated_factorization()["hypothesis_met"] is False

    m, cycles, averages = mp.random_separated(seed=3)
    assert m.is_separated()
    report = m.verify_separated_factorization()
    assert report["hypothesis_met"] and report["pass"], report
    assert len(cycles) == len(averages)

    b = mp.Matrix([[1, None], [Fraction(1, 2), "inf"]])
    assert b.otimes(mp.Matrix.identity(2)) == b
    assert b.tropdet() == inf
    assert b.power(2).rows() == [[2, inf], [Fraction(3, 2), inf]]

    try:
        a.charpoly_tropdet(cap=3)
    except mp.CapExceededError:
        pass
    else:
        raise AssertionError("cap not enforced")

    print("smoke test passed")


if __name__ == "__main__":
    main()
