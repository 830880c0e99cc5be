import pytest

from deephole.gf import build_field, field_of_order

# criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def gf11():
    return build_field(11)


@pytest.fixture(scope="session", params=[2, 4, 5, 7, 8, 9, 11, 16, 25, 27])
def small_field(request):
    return field_of_order(request.param)


def naive_mul(field, a, b):
    """Schoolbook product of encodings, reduced by the modulus; no tables."""
    p, m = field.p, field.m
    if m == 1:
        return a * b % p
    da = [(a // p ** i) % p for i in range(m)]
    db = [(b // p ** i) % p for i in range(m)]
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] += x * y
    mod = field.modulus
    for top in range(2 * m - 2, m - 1, -1):
        c = prod[top] % p
        if c:
            for i, mc in enumerate(mod):
                prod[top - m + i] -= c * mc
    return sum((c % p) * p ** i for i, c in enumerate(prod[:m]))


def naive_add(field, a, b):
    p, m = field.p, field.m
    return sum((((a // p ** i) + (b // p ** i)) % p) * p ** i for i in range(m))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE, key=lambda c: int(c.split()[0])):
        ok, detail = ACCEPTANCE[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {cid}: {detail}")
