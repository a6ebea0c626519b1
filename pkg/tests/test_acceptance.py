"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` to see the summary lines; they are
written around pytest's capture so they also appear in plain runs.
"""

import itertools
import json
import random
import time
from pathlib import Path

import numpy as np
import pytest

from ldicode import (
    NoCanonicalForm,
    PhiVector,
    canonicalize,
    commutator_matrix,
    compose,
    detection_distance,
    entry_bound,
    format_code_file,
    lifted_entry_bound,
    min_entanglement,
    oracle_distance,
    parse_code_file,
    rates,
    symplectic_product,
    threshold,
    transform,
    verify,
)
from ldicode.cli import main
from ldicode.modular import rank_mod
from ldicode.symplectic import product_matrix

from .codes import random_code, random_stabilizer_code

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"

DOUBLE_TEXT = """\
q 5
n 4
k 4
entries unbounded
 0 11  3  4   12 11 11 12
14  6 14  9   13  8  5  0
 4 13 10 11   10  1  3  2
 0 13  4  9   11  5  0  0
"""

FOUR_TEXT = """\
q 2
n 4
k 4
0 1 0 0 | 1 0 1 0
0 0 0 0 | 1 1 0 1
1 1 1 0 | 1 0 0 1
0 1 1 1 | 1 1 1 0
"""


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


def _checks(named):
    failed = [name for name, ok in named if not ok]
    return not failed, failed


def test_criterion_1_double_code(report):
    start = time.perf_counter()
    code = parse_code_file(DOUBLE_TEXT)
    g5, g3 = code.reduced(5), code.reduced(3)
    c5 = min_entanglement(code).c
    d5 = detection_distance(g5, 5)
    d5_oracle = oracle_distance(g5, 5)
    cm3 = commutator_matrix(code, 3)
    d3 = detection_distance(g3, 3)
    d3_oracle = oracle_distance(g3, 3)
    elapsed = time.perf_counter() - start
    ok, failed = _checks(
        [
            ("c over 5 is 2", c5 == 2),
            ("distance over 5 is 2", d5.distance == 2 and d5_oracle.distance == 2),
            ("commutator mod 3 is zero", cm3.is_zero() and min_entanglement(code, 3).c == 0),
            ("distance over 3 is 3", d3.distance == 3 and d3_oracle.distance == 3),
            ("under 10 s", elapsed < 10),
        ]
    )
    report(
        1,
        ok,
        f"c_5={c5} d_5={d5.distance} (oracle {d5_oracle.distance}) commutator mod 3 zero={cm3.is_zero()} "
        f"d_3={d3.distance} (oracle {d3_oracle.distance}) in {elapsed:.2f} s" + (f"; failed: {failed}" if failed else ""),
    )


def test_criterion_2_four_qubit_pipeline(report):
    code = parse_code_file(FOUR_TEXT)
    c = min_entanglement(code).c
    canon = canonicalize(code).code.generators
    rows, failed = [], []
    for p in (3, 5, 7, 11, 13):
        start = time.perf_counter()
        res = transform(code, p)
        elapsed = time.perf_counter() - start
        out = res.output
        # (d): the lift adds at most (nu^-1 q - 1)(q - 1) on top of B; see lifted_entry_bound
        cap = lifted_entry_bound(code, p)
        biggest = int(np.abs(out).max())
        checks = {
            "a": not np.any(product_matrix(out, out) % p),
            "b": np.array_equal(out % 2, canon),
            "c": min_entanglement(res.code, p).c == 0,
            "d": biggest <= cap,
            "time": elapsed < 1.0,
        }
        failed += [f"p={p}:{k}" for k, v in checks.items() if not v]
        dist = detection_distance(out, p).distance
        rows.append(f"p={p} max|entry|={biggest}<=B+{cap - entry_bound(code)} d'={dist} {elapsed * 1e3:.1f} ms")
    ok = c == 1 and not failed
    report(2, ok, f"c={c}; " + "; ".join(rows) + (f"; failed: {failed}" if failed else ""))


def test_criterion_3_bounds(report):
    four = parse_code_file(FOUR_TEXT)
    double = parse_code_file(DOUBLE_TEXT)
    got = (entry_bound(four), threshold(four, 3), entry_bound(double), threshold(double, 2))
    # big-integer evaluation written out independently
    q, n, k = 2, 4, 4
    B1 = (2 + (n - k) * (q - 1)) * (q - 1)
    q = 5
    B2 = (2 + (n - k) * (q - 1)) * (q - 1)
    expected = (B1, pow(B1, 4) * pow(4, 2), B2, pow(B2, 2) * pow(2, 1))
    ok = got == expected == (2, 256, 8, 128)
    report(3, ok, f"B={got[0]} p*={got[1]} (four-qubit, d=3); B={got[2]} p*={got[3]} (double code over 5, d=2)")


def test_criterion_4_property_suite(report):
    rng = np.random.default_rng(2024)
    primes = [2, 3, 5, 7, 11]
    done = resampled = zero_c = 0
    failures = []
    while done < 240:
        q = int(rng.choice([2, 3, 5, 7]))
        n = int(rng.integers(2, 6))
        k = int(rng.integers(1, n + 1))
        code = random_code(rng, q, n, k)
        try:
            canonicalize(code)
        except NoCanonicalForm:
            resampled += 1
            continue
        p = int(rng.choice([r for r in primes if r != q]))
        bad, commuting = _property_failures(code, p)
        failures += bad
        zero_c += commuting
        done += 1
    stabilizers = 0
    while stabilizers < 60:
        q = int(rng.choice([2, 3, 5, 7]))
        n = int(rng.integers(2, 6))
        k = int(rng.integers(1, n + 1))
        code = random_stabilizer_code(rng, q, n, k)
        p = int(rng.choice([r for r in primes if r != q]))
        bad, commuting = _property_failures(code, p)
        failures += bad
        zero_c += commuting
        stabilizers += 1
    ok = not failures and done + stabilizers >= 200
    report(
        4,
        ok,
        f"{done} random + {stabilizers} commuting instances, {zero_c} with c=0, "
        f"{resampled} resampled (no canonical form), {len(failures)} failures" + (f": {failures[:5]}" if failures else ""),
    )


def _property_failures(code, p):
    q, k = code.q, code.k
    res = transform(code, p)
    out, L = res.output, res.L
    bad = []
    if not np.array_equal(out % q, res.source.code.generators):
        bad.append("mod-q")
    if np.any(product_matrix(out, out) % p):
        bad.append("mod-p commutation")
    if np.any(np.triu(L) != 0):
        bad.append("L not strictly lower")
    if np.any(L % q != 0):
        bad.append("L not divisible by q")
    if rank_mod(out % p, p) != k:
        bad.append("rank")
    commuting = min_entanglement(code).c == 0
    if commuting and np.any(product_matrix(out, out) != 0):
        bad.append("c=0 input left a nonzero integer commutator")
    return [f"q={q} p={p} n={code.n} k={k}: {b}" for b in bad], commuting


def test_criterion_5_oracle_equivalence(report):
    rng = np.random.default_rng(5)
    disagreements = 0
    for _ in range(100):
        p = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(1, 4))
        k = int(rng.integers(1, 2 * n + 1))
        g = random_code(rng, p, n, k).generators
        a, b = detection_distance(g, p), oracle_distance(g, p)
        if (a.d_pure, a.d, a.witness, a.pure_witness, a.degenerate) != (
            b.d_pure,
            b.d,
            b.witness,
            b.pure_witness,
            b.degenerate,
        ):
            disagreements += 1
    report(5, disagreements == 0, f"100 instances (n<=3, p<=5), {disagreements} disagreements")


def _operator(v, q):
    """Explicit matrix of the phase-free Pauli with exponents ``v``."""
    w = np.exp(2j * np.pi / q)
    X = np.roll(np.eye(q), 1, axis=0)
    Z = np.diag([w**j for j in range(q)])
    n = len(v) // 2
    out = np.eye(1)
    for r in range(n):
        out = np.kron(out, np.linalg.matrix_power(X, v[r]) @ np.linalg.matrix_power(Z, v[n + r]))
    return out


def _nonzero(x, q):
    return x % q != 0 if q else x != 0


def test_criterion_6_algebra(report):
    rnd = random.Random(6)
    bad = []
    for _ in range(1000):
        q = rnd.choice([None, 2, 3, 5, 7])
        n = rnd.randint(1, 5)
        lo, hi = (-20, 20) if q is None else (0, q - 1)
        a, b, c = (PhiVector(tuple(rnd.randint(lo, hi) for _ in range(2 * n)), q) for _ in range(3))
        s, t = rnd.randint(-5, 5), rnd.randint(-5, 5)
        ab, ba = symplectic_product(a, b), symplectic_product(b, a)
        if _nonzero(ab + ba, q):
            bad.append("antisymmetry")
        lin = PhiVector(tuple(s * x + t * y for x, y in zip(a.entries, b.entries)))
        cc = PhiVector(c.entries)
        lhs = symplectic_product(lin, cc)
        rhs = s * symplectic_product(PhiVector(a.entries), cc) + t * symplectic_product(PhiVector(b.entries), cc)
        if _nonzero(lhs - rhs, q):
            bad.append("bilinearity")
    pairs = 1000

    # composition matches operator products up to phase, and q-fold composition is the identity
    for q in (2, 3, 5):
        for _ in range(40):
            n = rnd.randint(1, 2)
            a = PhiVector(tuple(rnd.randrange(q) for _ in range(2 * n)), q)
            b = PhiVector(tuple(rnd.randrange(q) for _ in range(2 * n)), q)
            prod = _operator(a.entries, q) @ _operator(b.entries, q)
            target = _operator(compose(a, b).entries, q)
            idx = np.unravel_index(np.argmax(np.abs(target)), target.shape)
            phase = prod[idx] / target[idx]
            if not (np.isclose(abs(phase), 1) and np.allclose(prod, phase * target)):
                bad.append(f"homomorphism q={q}")
            acc = PhiVector.zeros(n, q)
            for _ in range(q):
                acc = compose(acc, a)
            if acc != PhiVector.zeros(n, q):
                bad.append(f"order q={q}")

    # single-register commutation versus explicit q x q matrices
    for q in (2, 3, 5):
        for u in itertools.product(range(q), repeat=2):
            for v in itertools.product(range(q), repeat=2):
                P, Q = _operator(u, q), _operator(v, q)
                commute = np.allclose(P @ Q, Q @ P)
                if commute != (symplectic_product(PhiVector(u, q), PhiVector(v, q), q) == 0):
                    bad.append(f"commutation q={q} {u} {v}")
    report(6, not bad, f"{pairs} random pairs + homomorphism/order/commutation checks, {len(bad)} failures")


def test_criterion_7_rates(report, tmp_path, capsys):
    code = parse_code_file(FOUR_TEXT)
    before = rates(code.n, code.k, min_entanglement(code).c)
    res = transform(code, 3)
    after = rates(res.code.n, res.code.k, min_entanglement(res.code).c)
    lifted = tmp_path / "lifted.code"
    lifted.write_text(format_code_file(res.code))
    main(["rates", str(DATA / "four_qubit_ea.code"), "--json"])
    cli_before = json.loads(capsys.readouterr().out)
    main(["rates", str(lifted), "--json"])
    cli_after = json.loads(capsys.readouterr().out)
    ok = (
        (str(before.ea_rate), str(before.tradeoff[0]), str(before.tradeoff[1]), str(before.catalytic))
        == ("1/4", "1/4", "1/4", "0")
        and after.c == 0
        and after.ea_rate == after.tradeoff[0] == 0
        and after.catalytic == before.catalytic
        and (cli_before["ea_rate"], cli_before["tradeoff"], cli_before["catalytic"]) == ("1/4", ["1/4", "1/4"], "0")
        and (cli_after["c"], cli_after["ea_rate"], cli_after["tradeoff"][0]) == (0, "0", "0")
    )
    report(
        7,
        ok,
        f"before: ea={before.ea_rate} tradeoff=({before.tradeoff[0]}, {before.tradeoff[1]}) catalytic={before.catalytic}; "
        f"after: c={after.c} ea={after.ea_rate} tradeoff=({after.tradeoff[0]}, {after.tradeoff[1]}) catalytic={after.catalytic}",
    )


def test_criterion_8_cli_contract(report, tmp_path, capsys):
    four = str(DATA / "four_qubit_ea.code")
    problems = []

    def run(*argv):
        try:
            code = main([str(a) for a in argv])
        except SystemExit as exc:
            code = exc.code
        out = capsys.readouterr().out
        return code, out

    # round trip: canonical file -> transform -> parse reproduces in-memory results
    canon_file, lift_file = tmp_path / "c.code", tmp_path / "l.code"
    run("canonical", four, "-o", canon_file)
    run("transform", canon_file, "--to-p", 5, "-o", lift_file)
    src = parse_code_file(Path(four).read_text())
    canon = canonicalize(src)
    res = transform(src, 5)
    if parse_code_file(canon_file.read_text()) != canon.code:
        problems.append("canonical file")
    lifted = parse_code_file(lift_file.read_text())
    if not np.array_equal(lifted.generators, res.output) or format_code_file(lifted) != lift_file.read_text():
        problems.append("lifted file")
    if format_code_file(parse_code_file(Path(four).read_text())) != format_code_file(src):
        problems.append("source file")
    if not verify(res).ok:
        problems.append("verify")

    # deterministic JSON
    for argv in (
        ("info", four),
        ("canonical", four),
        ("transform", four, "--to-p", 7),
        ("bounds", four),
        ("rates", four),
        ("distance", four, "--p", 2),
        ("scan", four, "--primes", "3,5"),
    ):
        a, b = run(*argv, "--json")[1], run(*argv, "--json")[1]
        if a != b or not a:
            problems.append(f"json {argv[0]}")

    # exit codes under fault injection
    def bad_file(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path

    corrupted = lift_file.read_text().replace("| 1", "| 3", 1)
    cases = [
        (("transform", four, "--to-p", 2), 1),
        (("bounds", four, "--to-p", 2), 1),
        (("info", bad_file("dep.code", "q 3\nn 2\nk 2\n1 2 0 1\n2 1 0 2\n")), 1),
        (("transform", bad_file("dep2.code", "q 2\nn 2\nk 2\n1 1 0 0\n1 1 0 0\n"), "--to-p", 3), 1),
        (("verify", bad_file("corrupt.code", corrupted), "--source", four), 1),
        (("verify", four), 1),
        (("info", bad_file("rows.code", "q 2\nn 4\nk 4\n0 1 0 0 1 0 1 0\n")), 2),
        (("info", bad_file("word.code", "q 2\nn 1\nk 1\n1 ?\n")), 2),
        (("info", bad_file("empty.code", "q 2\nn 2\nk 0\n")), 2),
        (("info", bad_file("q.code", "q 9\nn 1\nk 1\n1 0\n")), 2),
        (("info", tmp_path / "missing.code"), 2),
        (("verify", lift_file, "--source", four), 0),
    ]
    for argv, expected in cases:
        got = run(*argv)[0]
        if got != expected:
            problems.append(f"exit {argv[0]} {Path(str(argv[1])).name}: {got} != {expected}")
    capsys.readouterr()
    report(8, not problems, f"round trip, JSON determinism, {len(cases)} exit-code cases" + (f"; {problems}" if problems else ""))
