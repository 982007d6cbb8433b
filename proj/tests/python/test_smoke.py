"""Smoke tests for the python bindings: the headline results end to end."""

import sys
from fractions import Fraction

import charnet as cn


def test_field_and_matrix():
    f5 = cn.PrimeField(5)
    assert f5.inv(3) == 2
    assert cn.char_divides(cn.PrimeField(3), 6)
    assert not cn.char_divides(cn.PrimeField(5), 6)

    m = cn.Matrix(5, [[2, 4], [1, 2]])
    r, rank = cn.rref(m)
    assert rank == 1
    assert r.tolist()[0] == [1, 2]

    s = cn.Matrix(3, [[1, 0], [1, 1]])
    t = cn.Matrix(3, [[0, 1]])
    solved = cn.solve_left(s, t)
    assert solved is not None and solved.tolist() == [[2, 1]]


def test_subspaces():
    a = cn.Subspace.span(cn.Matrix(2, [[1, 0, 0], [0, 1, 0]]))
    b = cn.Subspace.span(cn.Matrix(2, [[0, 1, 0], [0, 0, 1]]))
    assert cn.sum_spaces(a, b).dim == 3
    assert cn.intersect(a, b).dim == 1
    assert cn.h_joint([a, b]) == 3
    assert cn.h_cond([a], [b]) == 1


def test_networks_and_codes():
    bfly = cn.gen_butterfly()
    assert bfly.num_nodes == 9
    assert cn.validate(bfly) == []
    assert cn.count_free_coefficients(bfly, 1, 1) == 9

    n1 = cn.gen_n1_prime(2, 1)
    assert n1.num_sources == 3 and n1.num_terminals == 4
    assert cn.verify_solution(n1, cn.explicit_n1_code(2, 1, 2))
    assert not cn.verify_solution(n1, cn.explicit_n1_code(2, 1, 5))

    n2 = cn.gen_n2_prime(2, 1)
    assert cn.verify_solution(n2, cn.explicit_n2_code(2, 1, 3))
    try:
        cn.explicit_n2_code(2, 1, 2)
        raise AssertionError("expected CharDividesQError")
    except cn.CharDividesQError:
        pass

    joined = cn.join_copies(n1, 2)
    lifted = cn.lift_joined_code(n1, cn.explicit_n1_code(2, 1, 2), 2)
    assert lifted.k == 2
    assert cn.verify_solution(joined, lifted)

    # round-trip through JSON
    again = cn.NetworkSpec.from_json(n1.to_json())
    assert again.to_json() == n1.to_json()
    assert "digraph" in bfly.to_dot()


def test_search():
    out = cn.search_scalar(cn.gen_butterfly(), 2)
    assert out.status == "found"
    assert cn.verify_solution(cn.gen_butterfly(), out.witness)

    none = cn.search_scalar(cn.gen_n2_prime(2, 1), 2)
    assert none.status == "exhausted-none"
    assert none.witness is None


def test_inequalities_and_bounds():
    for q, p in [(2, 2), (3, 3), (6, 2)]:
        assert cn.eval_inequality(cn.build_eq0(q), cn.witness_eq0(q, p)) == -1
    for q, p in [(2, 3), (3, 2)]:
        assert cn.eval_inequality(cn.build_thmeq1(q), cn.witness_thmeq1(q, p)) == -1

    assert cn.bound_n1(2, 1, 1) == "6/7"
    assert cn.bound_n2(2, 1, 1) == "6/7"
    assert cn.bound_n2_alt(2, 1, 1) == "9/10"
    assert cn.bound_fraction("n2alt", 2) == Fraction(9, 10)
    assert cn.bound_fraction("n2alt", 4) > cn.bound_fraction("n2", 4)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
