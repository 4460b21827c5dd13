"""Acceptance suite. Each test covers one shipped criterion and prints a
single PASS line with the measured numbers (run with -s or -v to see them).
"""

import random
import time

import pytest

from pcskit import (
    build_semigroup,
    consolidate,
    cross_validate,
    cyclic_group,
    decide,
    division_witness,
    enumerate_semigroups,
    is_member,
    power_semigroup,
    transformation_semigroup,
    verify_power_theorem,
)
from pcskit.pcs import check_pg_equals_bg
from pcskit.terms import (
    Concat,
    IntPow,
    OmegaPow,
    Pseudoidentity,
    Var,
    builtin,
    check,
    format_term,
    parse,
    transform_star_rz,
)
from pcskit.varieties import bg_by_unique_inverses, is_member_by_identity

from conftest import B2_TABLE, RZ2_MON_TABLE, rees_samples


def _report(n, text):
    print(f"criterion {n}: PASS  {text}")


def test_criterion_1_method_agreement_sweep(census_upto_4):
    started = time.perf_counter()
    total = 0
    members = 0
    for order in range(1, 5):
        rep = cross_validate(census_upto_4[order],
                             spec=f"order {order} exhaustive")
        assert not rep.disagreements, rep.disagreements
        assert not rep.failures, rep.failures
        total += rep.count_examined
        members += rep.count_members
    elapsed = time.perf_counter() - started
    assert total == 1 + 8 + 113 + 3492
    assert elapsed < 300, f"sweep took {elapsed:.0f}s"
    _report(1, f"{total} tables, {members} members, 0 disagreements, "
               f"{elapsed:.1f}s single-threaded")


def test_criterion_2_powers_of_cs_are_members(census_upto_4):
    cs = []
    for order in range(1, 5):
        for table in census_upto_4[order]:
            S = build_semigroup(list(map(list, table)))
            if is_member(S, "CS"):
                cs.append(S)
    samples = rees_samples()
    assert len(samples) >= 10
    checked = 0
    for S in cs + samples:
        for with_empty in (False, True):
            P = power_semigroup(S, with_empty=with_empty, cap=64).result
            v = decide(P)
            assert v.member, (S.rows, with_empty, v.per_method)
            checked += 1
    _report(2, f"{len(cs)} census CS + {len(samples)} Rees samples, "
               f"{checked} power semigroups all members")


def test_criterion_3_named_verdicts(census_upto_4, rz2, rz2_mon, b2):
    assert decide(rz2).member
    v = decide(rz2_mon)
    assert not v.member
    # adjoined identity is element 0 here; the pinned witness pair is the
    # identity with itself
    assert v.per_method["asb"][1] == (0, 0)
    assert v.per_method["ideals"][1] == ("L", 0)
    assert decide(b2).member
    commutative = 0
    for order in range(1, 5):
        for table in census_upto_4[order]:
            S = build_semigroup(list(map(list, table)))
            if S.is_commutative():
                assert decide(S).member, S.rows
                commutative += 1
    _report(3, f"RZ2 in, RZ2^1 out with witness (0,0), B2 in, "
               f"{commutative} commutative tables all in")


def test_criterion_4_power_groups_are_block_groups():
    started = time.perf_counter()
    groups = [cyclic_group(n) for n in range(1, 7)]
    groups.append(transformation_semigroup([(1, 0, 2), (1, 2, 0)]))
    assert groups[-1].order == 6
    for G in groups:
        assert check_pg_equals_bg(G, cap=12)
    elapsed = time.perf_counter() - started
    assert elapsed < 10, f"{elapsed:.1f}s"
    _report(4, f"P(G) passes BG for Z1..Z6 and S3 in {elapsed:.2f}s")


def test_criterion_5_power_theorem_verifier(census_upto_4):
    cs = []
    for order in range(1, 5):
        for table in census_upto_4[order]:
            S = build_semigroup(list(map(list, table)))
            if is_member(S, "CS"):
                cs.append(S)
    for table in enumerate_semigroups(5):
        S = build_semigroup(list(map(list, table)))
        if is_member(S, "CS"):
            cs.append(S)
    samples = rees_samples()
    for S in cs + samples:
        rep = verify_power_theorem(S, cap=8)
        assert rep.ok, (S.rows, rep.failures)
    _report(5, f"{len(cs)} census CS (orders 1..5) + {len(samples)} "
               f"Rees samples, all three checks pass")


def test_criterion_6_consolidation_and_division(census_upto_4, rz2):
    c = consolidate(rz2)
    assert c.result.order == 7
    assert is_member(c.result, "BG")
    members = 0
    for order in range(1, 4):
        for table in census_upto_4[order]:
            S = build_semigroup(list(map(list, table)))
            if not decide(S).member:
                continue
            members += 1
            assert is_member(consolidate(S).result, "BG"), S.rows
            rep = division_witness(S)
            assert rep.ok, (S.rows, rep)
    _report(6, f"BG(RZ2) order 7 in BG; {members} members of order <= 3 "
               f"all consolidate into BG with verified division")


def test_criterion_7_basis_transform_equivalence(census_upto_4):
    derived = transform_star_rz(builtin("bg"))
    assert len(derived) == 4
    star = builtin("star")
    iii = builtin("pcs-iii")
    for order in range(1, 4):
        for table in census_upto_4[order]:
            S = build_semigroup(list(map(list, table)))
            conj = all(check(S, pid).satisfied for pid in derived)
            assert conj == check(S, star).satisfied, S.rows
            assert conj == check(S, iii).satisfied, S.rows
    _report(7, "transform gives 4 identities; conjunction == star == "
               "basis:iii on all 122 tables of order <= 3")


def test_criterion_8_engine_agreement(census_upto_4):
    compared = 0
    for order in range(1, 5):
        for table in census_upto_4[order]:
            S = build_semigroup(list(map(list, table)))
            for v in ("BG", "ER", "EL"):
                structural = is_member(S, v).ok
                assert is_member_by_identity(S, v).ok == structural, (v,)
            assert bg_by_unique_inverses(S).ok == is_member(S, "BG").ok
            compared += 1
    _report(8, f"structural, identity and unique-inverse engines agree "
               f"on all {compared} tables of order <= 4")


def _random_term(rng, depth):
    kind = rng.randrange(4) if depth > 0 else 0
    if kind == 0:
        return Var(rng.choice("abcstuvwxyz"))
    if kind == 1:
        parts = []
        for _ in range(rng.randint(2, 3)):
            t = _random_term(rng, depth - 1)
            if isinstance(t, Concat):
                parts.extend(t.parts)
            else:
                parts.append(t)
        return Concat(tuple(parts))
    if kind == 2:
        return OmegaPow(_random_term(rng, depth - 1), rng.randrange(4))
    return IntPow(_random_term(rng, depth - 1), rng.randint(2, 7))


def test_criterion_9_parser_round_trip():
    rng = random.Random(20260826)
    cases = 10000
    for _ in range(cases):
        pid = Pseudoidentity(_random_term(rng, 3), _random_term(rng, 3))
        text = format_term(pid)
        again = parse(text)
        assert (again.lhs, again.rhs) == (pid.lhs, pid.rhs), text
        assert format_term(again) == text
    from pcskit.terms import BUILTIN_NAMES
    for name in BUILTIN_NAMES:
        pid = builtin(name)
        text = format_term(pid)
        again = parse(text)
        assert format_term(again) == text
        assert (again.lhs, again.rhs) == (pid.lhs, pid.rhs)
    _report(9, f"{cases} random ASTs and all 9 builtins round-trip exactly")
