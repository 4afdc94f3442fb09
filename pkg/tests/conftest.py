"""Shared fixtures: named slopes, a high-precision numeric oracle, and the
permutation sweeps reused by several acceptance checks."""

import pytest
from mpmath import mp

import sturmlab as sl
import sturmlab.cli

mp.dps = 80

# Numeric values of the named test slopes, good to roughly 80 digits.  These
# back the oracle-side of the exact/numeric dual checks in the unit tests.
MP_VALUES = {
    "phi": (mp.sqrt(5) - 1) / 2,
    "1/e": 1 / mp.e,
    "sqrt2-1": mp.sqrt(2) - 1,
    "e": mp.e,
}

SWEEP_SLOPES = ("phi", "1/e", "sqrt2-1")
SWEEP_N = 500


def make_slope(name, budget=None):
    if name == "phi":
        return sl.phi(budget)
    if name == "1/e":
        return sl.EulerEInv(budget)
    if name == "sqrt2-1":
        return sl.QuadraticSurd(-1, 1, 2, 1, budget)
    if name == "e":
        return sl.EulerE(budget)
    raise KeyError(name)


def mp_floor(x):
    """Floor of a high-precision value, refusing to answer near a tie."""
    f = mp.floor(x)
    assert min(x - f, f + 1 - x) > mp.mpf(10) ** -60, "numeric oracle too close to an integer"
    return int(f)


def mp_frac(name, k):
    return mp.frac(k * MP_VALUES[name])


@pytest.fixture(params=["phi", "1/e", "sqrt2-1", "e"])
def named_slope(request):
    return request.param, make_slope(request.param)


@pytest.fixture(scope="session")
def pi_sweeps():
    """(slope, [pi_direct(alpha, n) for n = 1..500]) per sub-unit test slope.

    Built once; the sign, order-prediction and recurrence checks all compare
    their own construction against this directly-sorted baseline.
    """
    out = {}
    for name in SWEEP_SLOPES:
        alpha = make_slope(name)
        out[name] = (alpha, [sl.pi_direct(alpha, n) for n in range(1, SWEEP_N + 1)])
    return out


@pytest.fixture
def run_cli(capsys):
    """Invoke the command line main() and capture (rc, stdout, stderr)."""

    def run(argv):
        rc = sturmlab.cli.main(argv)
        captured = capsys.readouterr()
        return rc, captured.out, captured.err

    return run
