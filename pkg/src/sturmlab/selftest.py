"""Built-in quick checks against embedded reference values.

Run via ``sturmlab selftest``.  Each check prints one PASS/FAIL line; the
suite exits nonzero on any failure.  These are smoke checks; the full test
suite lives outside the package.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import farey, matrep, permtool, sturmian
from .irrational import EulerE, EulerEInv, phi
from .permtool import FracPermutation

WORD_PREFIX_INV_E = [0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1]

FACTORS_INV_E_6 = (
    (1, 0, 1, 0, 0, 1),
    (1, 0, 0, 1, 0, 1),
    (1, 0, 0, 1, 0, 0),
    (0, 1, 0, 1, 0, 0),
    (0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 1, 0),
    (0, 0, 1, 0, 0, 1),
)

MATRIX_INV_E_6 = (
    (1, 1, 1, 0, 0, 0),
    (0, 0, 0, 1, 1, 0),
    (0, -1, -1, -1, -1, 0),
    (0, 1, 1, 1, 0, 0),
    (0, 0, 0, 0, 1, 1),
    (0, 0, -1, -1, -1, -1),
)

AUX_52314 = (
    (1, 1, 1, 1, 0, 0),
    (1, 1, 0, 0, 1, 1),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 1, 0),
    (1, 0, 0, 0, 0, 1),
)

MATRIX_52314 = (
    (1, 1, 1, 1, 0),
    (0, 0, -1, -1, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, 1),
    (0, -1, -1, -1, -1),
)

ADJ_43_S5 = (
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 0, 1, 1, 0),
    (0, 0, 0, -1, 0),
    (0, 0, 0, 1, 1),
)

MATRIX_PHI_5 = (
    (1, 1, 1, 1, 0),
    (0, 0, -1, -1, 0),
    (0, 0, 1, 1, 1),
    (0, 0, 0, -1, -1),
    (0, -1, -1, 0, 0),
)

TABLE_E_SPOTS = {8: (1, 7), 37: (1, 37), 70: (-1, 14), 71: (-1, 14)}


def run(seed: int = 0, report=print) -> int:
    failures = 0
    total = 0

    def check(name: str, ok: bool, detail: str = ""):
        nonlocal failures, total
        total += 1
        if ok:
            report(f"PASS {name}")
        else:
            failures += 1
            report(f"FAIL {name}" + (f" ({detail})" if detail else ""))

    inv_e = EulerEInv()
    gold = sturmian.characteristic_prefix(inv_e, 21)
    check("word-prefix-1/e", gold == WORD_PREFIX_INV_E, f"got {gold}")

    fs = sturmian.factor_set(inv_e, 6)
    check("factors-1/e-6", fs.factors == FACTORS_INV_E_6, f"got {fs.factors}")

    m6 = matrep.m_from_alpha(inv_e, 6)
    check("matrix-1/e-6", m6.entries == MATRIX_INV_E_6)
    check(
        "matrix-1/e-6-geometric",
        matrep.m_from_alpha(inv_e, 6, via="factors").entries == m6.entries,
    )

    sig = FracPermutation(5, (5, 2, 3, 1, 4))
    check("descent-52314", matrep.descent_set(sig) == frozenset({1, 2, 5}))
    check(
        "descent-135426",
        matrep.descent_set(FracPermutation(6, (1, 3, 5, 4, 2, 6)))
        == frozenset({1, 3, 5}),
    )
    check("aux-52314", matrep.aux_matrix(sig).rows() == [list(r) for r in AUX_52314])
    check("matrix-52314", matrep.factor_matrix(sig).entries == MATRIX_52314)

    adj = FracPermutation(5, (1, 2, 4, 3, 5))
    check("adjacent-transposition-matrix", matrep.factor_matrix(adj).entries == ADJ_43_S5)

    ph = phi()
    pi5 = permtool.pi_direct(ph, 5)
    check("perm-phi-5", pi5.one_line == (5, 2, 4, 1, 3))
    check("perm-phi-5-order", permtool.order(pi5) == 4)
    check("perm-phi-5-sign", permtool.sign_direct(pi5) == -1)
    check("perm-phi-5-recurrence", permtool.pi_sos(ph, 5).one_line == pi5.one_line)
    check("matrix-phi-5", matrep.factor_matrix(pi5).entries == MATRIX_PHI_5)

    prod = matrep.mat_mul(ADJ_43_S5, MATRIX_PHI_5)
    composed = adj.compose(pi5)
    check(
        "worked-product",
        prod == matrep.factor_matrix(composed).rows()
        and composed.one_line == (5, 2, 3, 1, 4),
    )

    e = EulerE()
    ok = True
    detail = ""
    for n, (sgn, orde) in TABLE_E_SPOTS.items():
        pin = permtool.pi_direct(e, n)
        got = (permtool.sign_direct(pin), permtool.order(pin))
        if got != (sgn, orde):
            ok, detail = False, f"n={n}: got {got}, want {(sgn, orde)}"
            break
    check("table-e-spots", ok, detail)

    check("integral-1", farey.exact_integral(1).value == 1)
    check("integral-2", farey.exact_integral(2).value == Fraction(3, 2))
    check("volume-1/e-6", matrep.simplex_volume(inv_e, 6) == Fraction(1, 720))

    rng = random.Random(seed)
    ok = True
    for _ in range(50):
        line = list(range(1, 9))
        rng.shuffle(line)
        s = FracPermutation(8, tuple(line))
        if matrep.reconstruct_sigma(matrep.factor_matrix(s)).one_line != s.one_line:
            ok = False
            break
    check("reconstruct-roundtrip", ok)

    q = matrep.intertwiner(4, 0, 1)
    qm, qi = q.matrix(), q.inverse()
    ok = True
    import itertools

    for line in itertools.permutations(range(1, 5)):
        s = FracPermutation(4, line)
        left = matrep.mat_mul(matrep.mat_mul(qi, matrep.factor_matrix(s).rows()), qm)
        if [[int(x) for x in row] for row in left] != [
            list(r) for r in matrep.perm_matrix(s)
        ]:
            ok = False
            break
    check("conjugation-s4", ok)

    report(f"{'OK' if failures == 0 else 'FAILED'}: {total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1
