"""Omega-terms and pseudoidentities over finite semigroups.

Grammar (stable public syntax, shared with the CLI):

    variables       single lowercase letters
    concatenation   juxtaposition, left to right
    grouping        parentheses
    exponents       ^w, ^(w+K), ^(w-K), ^K (integer K >= 2), binding to the
                    immediately preceding atom
    pseudoidentity  term = term

Whitespace is ignored.  omega is interpreted as the idempotent power;
x^(omega+k) normalizes k modulo the period of x.
"""

import string
from dataclasses import dataclass

import numpy as np

from .core import omega_power
from .errors import (
    EmptyTerm,
    FreshVariableExhausted,
    TermSyntaxError,
    UnboundVariable,
    UnknownName,
)


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Concat:
    parts: tuple    # >= 2 terms, none of which is itself a Concat


@dataclass(frozen=True)
class OmegaPow:
    base: "Term"
    offset: int = 0     # exponent omega + offset


@dataclass(frozen=True)
class IntPow:
    base: "Term"
    exponent: int       # >= 2


Term = (Var, Concat, OmegaPow, IntPow)


@dataclass(frozen=True)
class Pseudoidentity:
    lhs: "Term"
    rhs: "Term"
    name: str = None


def concat(parts):
    """Canonical concatenation: flattens nested Concats, drops 1-element lists."""
    flat = []
    for p in parts:
        if isinstance(p, Concat):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if not flat:
        raise EmptyTerm("empty concatenation")
    if len(flat) == 1:
        return flat[0]
    return Concat(tuple(flat))


def variables(t):
    """Variable names in order of first occurrence."""
    out = []

    def walk(u):
        if isinstance(u, Var):
            if u.name not in out:
                out.append(u.name)
        elif isinstance(u, Concat):
            for p in u.parts:
                walk(p)
        else:
            walk(u.base)

    if isinstance(t, Pseudoidentity):
        walk(t.lhs)
        walk(t.rhs)
    else:
        walk(t)
    return out


# parsing


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise TermSyntaxError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self):
        c = self.peek()
        self.pos += 1
        return c

    def parse_int(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_atom(self):
        c = self.peek()
        if c is None:
            self.error("unexpected end of input")
        if c == "(":
            self.take()
            inner = self.parse_term()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return inner
        if c in string.ascii_lowercase:
            # 'w' only means omega inside exponent position
            self.take()
            return Var(c)
        self.error(f"unexpected character {c!r}")

    def parse_exponent(self, base):
        # called just after '^'
        c = self.peek()
        if c == "w":
            self.take()
            return OmegaPow(base, 0)
        if c == "(":
            self.take()
            if self.peek() != "w":
                self.error("expected 'w' in exponent")
            self.take()
            sign = self.peek()
            if sign not in ("+", "-"):
                self.error("expected '+' or '-' in exponent")
            self.take()
            k = self.parse_int()
            if k < 1:
                self.error("exponent offset must be >= 1")
            if self.peek() != ")":
                self.error("expected ')' closing exponent")
            self.take()
            return OmegaPow(base, k if sign == "+" else -k)
        if c is not None and c.isdigit():
            k = self.parse_int()
            if k < 2:
                self.error("integer exponent must be >= 2")
            return IntPow(base, k)
        self.error("expected exponent after '^'")

    def parse_factor(self):
        t = self.parse_atom()
        while self.peek() == "^":
            self.take()
            t = self.parse_exponent(t)
        return t

    def parse_term(self):
        parts = []
        while True:
            c = self.peek()
            if c is None or c in ")=":
                break
            parts.append(self.parse_factor())
        if not parts:
            self.error("empty term")
        return concat(parts)


def parse(text, name=None):
    """Parse a term, or a pseudoidentity when the text contains '='."""
    if not text.strip():
        raise EmptyTerm("empty input")
    p = _Parser(text)
    lhs = p.parse_term()
    if p.peek() == "=":
        p.take()
        rhs = p.parse_term()
        if p.peek() is not None:
            p.error("trailing input after pseudoidentity")
        return Pseudoidentity(lhs, rhs, name=name)
    if p.peek() is not None:
        p.error("trailing input after term")
    return lhs


def format_term(t):
    """Minimal-parentheses text that round-trips through parse."""
    if isinstance(t, Pseudoidentity):
        return f"{format_term(t.lhs)} = {format_term(t.rhs)}"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Concat):
        return "".join(format_term(p) for p in t.parts)
    base = t.base
    base_s = base.name if isinstance(base, Var) else f"({format_term(base)})"
    if isinstance(t, IntPow):
        return f"{base_s}^{t.exponent}"
    if t.offset == 0:
        return f"{base_s}^w"
    sign = "+" if t.offset > 0 else "-"
    return f"{base_s}^(w{sign}{abs(t.offset)})"


# evaluation


def evaluate(S, t, assignment):
    """Value of t in S under a variable -> element assignment."""
    if isinstance(t, Var):
        if t.name not in assignment:
            raise UnboundVariable(t.name)
        return assignment[t.name]
    if isinstance(t, Concat):
        rows = S.rows
        acc = evaluate(S, t.parts[0], assignment)
        for p in t.parts[1:]:
            acc = rows[acc][evaluate(S, p, assignment)]
        return acc
    if isinstance(t, OmegaPow):
        return omega_power(S, evaluate(S, t.base, assignment), t.offset)
    # IntPow
    v = evaluate(S, t.base, assignment)
    acc = v
    for _ in range(t.exponent - 1):
        acc = S.rows[acc][v]
    return acc


def _evaluate_grid(S, t, axes, nvars, const=None):
    """Evaluate t simultaneously over all assignments.

    Variable i runs along axis i of an nvars-dimensional grid; returns an
    integer array broadcastable to shape (n,)*nvars.  Variables listed in
    ``const`` are pinned to a single element instead of spanning an axis.
    """
    n = S.order
    if isinstance(t, Var):
        if const and t.name in const:
            return np.int32(const[t.name])
        shape = [1] * nvars
        shape[axes[t.name]] = n
        return np.arange(n, dtype=np.int32).reshape(shape)
    if isinstance(t, Concat):
        table = S.table
        acc = _evaluate_grid(S, t.parts[0], axes, nvars, const)
        for p in t.parts[1:]:
            acc = table[acc, _evaluate_grid(S, p, axes, nvars, const)]
        return acc
    if isinstance(t, OmegaPow):
        return S.omega_map(t.offset)[_evaluate_grid(S, t.base, axes, nvars, const)]
    v = _evaluate_grid(S, t.base, axes, nvars, const)
    acc = v
    for _ in range(t.exponent - 1):
        acc = S.table[acc, v]
    return acc


@dataclass(frozen=True)
class CheckResult:
    satisfied: bool
    assignment: dict = None     # counterexample, variable -> element
    lhs_value: int = None
    rhs_value: int = None


# above this many assignments, check() pins the leading variables and sweeps
# the rest, keeping peak memory at one grid of this size per term node
_GRID_LIMIT = 1 << 24


def _check_grid(S, pid, vnames, const):
    n = S.order
    axes = {name: i for i, name in enumerate(vnames)}
    nvars = len(vnames)
    lhs = _evaluate_grid(S, pid.lhs, axes, nvars, const)
    rhs = _evaluate_grid(S, pid.rhs, axes, nvars, const)
    # every free variable occurs on at least one side, so mutual broadcast
    # yields the full (n,)*nvars grid
    lhs, rhs = np.broadcast_arrays(np.asarray(lhs), np.asarray(rhs))
    diff = lhs != rhs
    if not diff.any():
        return None
    flat = int(np.argmax(diff.ravel()))
    idx = np.unravel_index(flat, diff.shape)
    assignment = dict(const or {})
    assignment.update({name: int(idx[axes[name]]) for name in vnames})
    return CheckResult(
        satisfied=False,
        assignment=assignment,
        lhs_value=int(lhs[idx]),
        rhs_value=int(rhs[idx]),
    )


def check(S, pid):
    """Exhaustively test a pseudoidentity over S.

    On failure, returns the lexicographically first counterexample in
    variable order of first occurrence, elements ordered by index.
    """
    vnames = variables(pid)
    for name in vnames:
        if name not in string.ascii_lowercase:
            raise UnboundVariable(name)
    n = S.order
    pinned = 0
    while pinned < len(vnames) and n ** (len(vnames) - pinned) > _GRID_LIMIT:
        pinned += 1
    free = vnames[pinned:]
    for combo in np.ndindex(*([n] * pinned)):
        const = {vnames[i]: int(combo[i]) for i in range(pinned)}
        failure = _check_grid(S, pid, free, const)
        if failure is not None:
            return failure
    return CheckResult(satisfied=True)


# basis transformation for V * RZ


def _substitute(t, mapping):
    if isinstance(t, Var):
        return mapping[t.name]
    if isinstance(t, Concat):
        return concat([_substitute(p, mapping) for p in t.parts])
    if isinstance(t, OmegaPow):
        return OmegaPow(_substitute(t.base, mapping), t.offset)
    return IntPow(_substitute(t.base, mapping), t.exponent)


def transform_star_rz(pid):
    """The 2^n pseudoidentities x pi(y1 x, ..., yn x) = x sigma(...).

    For each subset of variable positions, a kept position i substitutes
    x_i -> x_i * x while an empty position substitutes x_i -> x, with x a
    fresh variable; both sides are then prefixed with x.
    """
    vnames = variables(pid)
    fresh = next((c for c in string.ascii_lowercase if c not in vnames), None)
    if fresh is None:
        raise FreshVariableExhausted("no unused variable letter remains")
    fx = Var(fresh)
    out = []
    n = len(vnames)
    for mask in range(1 << n):
        mapping = {}
        for i, name in enumerate(vnames):
            if mask >> i & 1:
                mapping[name] = concat([Var(name), fx])
            else:
                mapping[name] = fx
        lhs = concat([fx, _substitute(pid.lhs, mapping)])
        rhs = concat([fx, _substitute(pid.rhs, mapping)])
        out.append(Pseudoidentity(lhs, rhs))
    return out


# named identities, stored verbatim

_BUILTIN_TEXT = {
    "bg": "(x^w y^w)^w = (y^w x^w)^w",
    "er": "(x^w y^w)^w = (x^w y^w)^w x^w",
    "el": "(y^w x^w)^w = x^w (y^w x^w)^w",
    "pcs-i": "((sxt)^w(syt)^w)^w = ((syt)^w(sxt)^w)^w",
    "pcs-i-prime": "((st)^w(syt)^w)^w = ((syt)^w(st)^w)^w",
    "pcs-ii-1": "((ax)^w(bx)^w)^w = ((ax)^w(bx)^w)^w(ax)^w",
    "pcs-ii-2": "((xb)^w(xa)^w)^w = (xa)^w((xb)^w(xa)^w)^w",
    "pcs-iii": "x((ax)^w(bx)^w)^w = x((bx)^w(ax)^w)^w",
    "star": "x((yx)^w(zx)^w)^w = x((zx)^w(yx)^w)^w",
}

BUILTIN_NAMES = tuple(_BUILTIN_TEXT)

_builtin_cache = {}


def builtin(name):
    if name not in _BUILTIN_TEXT:
        raise UnknownName(f"unknown identity {name!r}; know {sorted(_BUILTIN_TEXT)}")
    if name not in _builtin_cache:
        _builtin_cache[name] = parse(_BUILTIN_TEXT[name], name=name)
    return _builtin_cache[name]
