import numpy as np
import pytest

from ldicode import (
    CodeSpec,
    DependentGenerators,
    HadamardSwap,
    NoCanonicalForm,
    RowAdd,
    canonicalize,
    hadamard_swap,
    min_entanglement,
    replay,
)
from ldicode.canonical import is_canonical, step_from_dict, step_to_dict
from ldicode.errors import RegisterOutOfRange, RowOutOfRange
from ldicode.modular import rank_mod, solve_in_rowspace

from .codes import FOUR_QUBIT_EA, QUOTED_LIFT, random_code


def gf2_gauss_jordan(rows):
    """Textbook elimination on lists of bits."""
    rows = [list(r) for r in rows]
    r = 0
    for col in range(len(rows[0])):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        r += 1
    return rows


def test_four_qubit_with_forced_hadamard():
    code = hadamard_swap(CodeSpec(2, FOUR_QUBIT_EA), 4)
    canon = canonicalize(code)
    assert canon.hadamards == []
    expected = gf2_gauss_jordan(code.generators.tolist())
    assert canon.code.generators.tolist() == expected
    assert np.array_equal(canon.code.x, np.eye(4))
    assert canon.z1.tolist() == [[1, 0, 1, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 1, 0, 0]]


def test_four_qubit_greedy_picks_register_four():
    canon = canonicalize(CodeSpec(2, FOUR_QUBIT_EA))
    assert canon.hadamards == [4]
    assert canon.z1.tolist() == [[1, 0, 1, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 1, 0, 0]]


def test_quoted_lift_row_four_not_reproducible():
    # rows 1-3 of the quoted lift agree mod 2 with the canonical form; row 4 is
    # not even in the row space of the Hadamard-transformed generators
    code = hadamard_swap(CodeSpec(2, FOUR_QUBIT_EA), 4)
    quoted = np.array(QUOTED_LIFT) % 2
    canon = canonicalize(code).code.generators
    assert np.array_equal(quoted[:3], canon[:3])
    assert solve_in_rowspace(code.generators, quoted[3], 2) is None


def test_already_canonical_is_untouched():
    code = CodeSpec(3, [[1, 0, 2, 1, 0, 2], [0, 1, 1, 2, 2, 0]])
    canon = canonicalize(code)
    assert canon.log == ()
    assert canon.code == code


def test_all_z_code_needs_hadamards_everywhere():
    code = CodeSpec(3, [[0, 0, 1, 0], [0, 0, 0, 1]])
    canon = canonicalize(code)
    assert sorted(canon.hadamards) == [1, 2]
    assert np.array_equal(canon.code.x, np.eye(2))


def test_greedy_dead_end_uses_hadamard_search():
    # X1 X2 and Z1: the greedy pivot on X1 strands the second row
    code = CodeSpec(2, [[1, 1, 0, 0], [0, 0, 1, 0]])
    canon = canonicalize(code)
    assert canon.hadamards == [1]
    assert is_canonical(canon.code)
    assert replay(canon.log, code) == canon.code


def test_no_canonical_form():
    # X1 and Z1 on two qudits: any X half has rank one
    with pytest.raises(NoCanonicalForm):
        canonicalize(CodeSpec(2, [[1, 0, 0, 0], [0, 0, 1, 0]]))
    with pytest.raises(NoCanonicalForm):
        canonicalize(CodeSpec(3, np.eye(4, dtype=int)[:3]))


def test_dependent_generators():
    with pytest.raises(DependentGenerators):
        canonicalize(CodeSpec(5, [[1, 2, 0, 1], [2, 4, 0, 2]]))


def test_replay_basics(four_qubit):
    assert replay((), four_qubit) == four_qubit
    there = replay([RowAdd(0, 1, 3)], CodeSpec(5, [[1, 0, 0, 0], [0, 1, 0, 0]]))
    back = replay([RowAdd(0, 1, -3)], there)
    assert back == CodeSpec(5, [[1, 0, 0, 0], [0, 1, 0, 0]])
    with pytest.raises(RegisterOutOfRange):
        replay([HadamardSwap(5)], four_qubit)
    with pytest.raises(RowOutOfRange):
        replay([RowAdd(7, 0, 1)], four_qubit)


def test_log_serialization_round_trip(four_qubit):
    canon = canonicalize(four_qubit)
    again = tuple(step_from_dict(step_to_dict(s)) for s in canon.log)
    assert again == canon.log


def _kernel_weights(code):
    from itertools import product

    from ldicode.pauli import weights

    q, n = code.q, code.n
    vecs = np.array(list(product(range(q), repeat=2 * n)))
    g = code.generators
    prods = (vecs[:, :n] @ g[:, n:].T - vecs[:, n:] @ g[:, :n].T) % q
    return sorted(weights(vecs[~np.any(prods, axis=1)]).tolist())


@pytest.mark.parametrize("q", [2, 3, 5])
def test_random_codes(q):
    rng = np.random.default_rng(q)
    done = 0
    while done < 70:
        n = int(rng.integers(2, 5))
        k = int(rng.integers(1, n + 1))
        code = random_code(rng, q, n, k)
        try:
            canon = canonicalize(code)
        except NoCanonicalForm:
            continue
        done += 1
        assert np.array_equal(canon.code.x[:, :k], np.eye(k))
        assert replay(canon.log, code) == canon.code
        assert rank_mod(canon.code.generators, q) == k
        assert min_entanglement(canon.code).c == min_entanglement(code).c
        assert canonicalize(canon.code).code == canon.code
        if q ** (2 * n) <= 5000:
            assert _kernel_weights(canon.code) == _kernel_weights(code)
