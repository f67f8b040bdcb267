import itertools
import math

import pytest

from braidrack import core_quandle, dihedral_quandle, trivial_rack, ts_rack
from braidrack.racks import cyclic_group_table, is_homomorphism

ACCEPTANCE_RESULTS = []


def s3_cayley():
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    return [[idx[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]


def valid_ts_params(max_m):
    for m in range(1, max_m + 1):
        for t in range(m):
            for s in range(m):
                if math.gcd(t, m) == 1 and (s * s - (1 - t) * s) % m == 0:
                    yield m, t, s


def small_racks(max_order=5):
    """Builtin-family racks up to ``max_order``, deduplicated by table."""
    out = {}
    for n in range(1, max_order + 1):
        for r in (dihedral_quandle(n), trivial_rack(n), core_quandle(cyclic_group_table(n), name=f"coreZ{n}")):
            out.setdefault(r.table.tobytes() + bytes([n]), r)
    for m, t, s in valid_ts_params(max_order):
        r = ts_rack(m, t, s)
        out.setdefault(r.table.tobytes() + bytes([m]), r)
    return list(out.values())


def brute_force_homs(source, target, fixed=None):
    fixed = fixed or {}
    found = []
    for phi in itertools.product(range(target.order), repeat=source.order):
        if any(phi[x] != v for x, v in fixed.items()):
            continue
        if is_homomorphism(source, target, phi):
            found.append(phi)
    return found


@pytest.fixture
def R3():
    return dihedral_quandle(3)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
