"""Minimal certificate kernel replaying the non-existence deductions.

A deduction script targets a catalog algebra (at concrete rational
parameters, or with a parameter kept symbolic) and proves that no
structure of the targeted kind exists, by deriving a contradiction from
the symbolically computed obstruction polynomials:

* kind "gcs":     Nijenhuis coefficients of the generic pairing-compatible
                  matrix on the cotangent algebra, plus the entries of
                  J^2 + id ("a structure would make all of these zero"),
* kind "complex": the same data for a fully generic square matrix on the
                  algebra itself (almost complex structures).

The kernel only checks certificates; it never searches.  Every step's
witness identity is re-verified by exact polynomial arithmetic, and each
rule is sound over the reals:

  assert_identity       pin a generator to its displayed polynomial form
  linear_combine        sum multiples of vanishing polynomials
  deduce_zero_squares   from sum c_i q_i^2 = 0 with c_i > 0, every q_i = 0
  substitute            rewrite a variable using a derived hypothesis
  cancel_nonzero        strip factors that are nonzero on the target's
                        parameter region (catalog-backed)
  case_split            from f g = 0 branch on f = 0 / g = 0; both
                        branches must conclude
  contradiction         a vanishing polynomial equal to (positive
                        constant) + sum of squares

A script is Proved when its main line (and every case-split branch)
ends in a contradiction.
"""

from __future__ import annotations

import json
import pathlib
import re
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .lie import LieAlgebra, cotangent
from .poly import Polynomial, parse_poly, ExprError, _Parser
from .gcs import (orthogonal_shape, free_square_shape, nijenhuis,
                  symbolic_involution)
from . import catalog

SCHEMA = "replay/1"

_GEN_N = re.compile(r"^N_(\d)(\d)\^(\d)$")
_GEN_J = re.compile(r"^J2I_(\d)\^(\d)$")


class ReplayError(ValueError):
    """Malformed script or target (distinct from a Failed verdict)."""


class Verdict:
    def __init__(self, proved: bool, step: Optional[str] = None,
                 reason: Optional[str] = None):
        self.proved = proved
        self.step = step
        self.reason = reason

    def __repr__(self):
        if self.proved:
            return "Proved"
        return f"Failed(step {self.step}: {self.reason})"

    def to_dict(self) -> dict:
        return {"proved": self.proved, "step": self.step, "reason": self.reason}


class _Fail(Exception):
    def __init__(self, step: str, reason: str):
        self.step = step
        self.reason = reason


_GEN_CACHE: Dict[tuple, Dict[str, Polynomial]] = {}


def _generators(algebra: str, params: Tuple[Tuple[str, Fraction], ...],
                kind: str) -> Dict[str, Polynomial]:
    """All named obstruction polynomials for a target, cached."""
    key = (algebra, params, kind)
    if key in _GEN_CACHE:
        return _GEN_CACHE[key]
    e = catalog.entry(algebra)
    if params:
        L = e.instantiate(dict(params))
    else:
        L = e.symbolic() if e.params else e.instantiate({})
    if kind == "gcs":
        domain = cotangent(L).total
        J, _ = orthogonal_shape(L.dim)
    elif kind == "complex":
        domain = L
        J, _ = free_square_shape(L.dim)
    else:
        raise ReplayError(f"unknown target kind {kind!r}")
    gens: Dict[str, Polynomial] = {}
    for (i, j, k), p in nijenhuis(domain, J).items():
        gens[f"N_{i + 1}{j + 1}^{k + 1}"] = Polynomial.of(p)
    for (i, j), p in symbolic_involution(J).items():
        gens[f"J2I_{i + 1}^{j + 1}"] = Polynomial.of(p)
    _GEN_CACHE[key] = gens
    return gens


class _State:
    """Substitutions plus derived hypotheses along one proof branch."""

    def __init__(self, gens: Dict[str, Polynomial], nonzero: List[Polynomial],
                 param_env: Dict[str, Fraction]):
        self.gens = gens
        self.nonzero = nonzero
        self.param_env = param_env
        self.subs: Dict[str, Polynomial] = {}
        self.hyps: Dict[str, Polynomial] = {}
        self.counter = 0

    def clone(self) -> "_State":
        s = _State(self.gens, self.nonzero, self.param_env)
        s.subs = dict(self.subs)
        s.hyps = dict(self.hyps)
        s.counter = self.counter
        return s

    def value(self, source: str) -> Polynomial:
        if source in self.hyps:
            return self.hyps[source]
        if source in self.gens:
            return self.gens[source].subs(self.subs) if self.subs else self.gens[source]
        raise _Fail("?", f"unresolved generator or hypothesis {source!r}")

    def add_hyp(self, p: Polynomial) -> str:
        self.counter += 1
        name = f"h{self.counter}"
        self.hyps[name] = p
        return name

    def parse(self, text) -> Polynomial:
        try:
            p = _Parser(str(text), env=self.param_env).parse()
        except ExprError as err:
            raise _Fail("?", f"bad polynomial {text!r}: {err}")
        return p

    def combination(self, terms: Sequence) -> Polynomial:
        acc = Polynomial()
        for coeff_text, source in terms:
            acc = acc + self.parse(coeff_text) * self.value(source)
        return acc

    def apply_substitution(self, var: str, value: Polynomial):
        step = {var: value}
        self.subs = {w: p.subs(step) for w, p in self.subs.items()}
        if var not in self.subs:
            self.subs[var] = value
        self.hyps = {h: p.subs(step) for h, p in self.hyps.items()}

    def factor_backed(self, f: Polynomial) -> bool:
        """A factor may be cancelled when it is a nonzero rational or a
        rational multiple of a declared-nonzero constraint polynomial."""
        if f.is_constant():
            return f.constant_value() != 0
        for g in self.nonzero:
            ratio = _proportional(f, g)
            if ratio is not None:
                return True
        return False


def _proportional(p: Polynomial, q: Polynomial) -> Optional[Fraction]:
    """c with p == c q, or None."""
    if p.is_zero() or q.is_zero():
        return None
    if set(p.terms) != set(q.terms):
        return None
    mono = next(iter(p.terms))
    c = p.terms[mono] / q.terms[mono]
    return c if p == Polynomial.constant(c) * q else None


def _positive_rational(text) -> Fraction:
    v = Fraction(str(text))
    return v


def check_script(doc: dict) -> Verdict:
    """Replay one deduction script; Proved only if every branch of every
    split ends in a contradiction and every witness identity holds."""
    if doc.get("schema") != SCHEMA:
        raise ReplayError(f"unsupported schema {doc.get('schema')!r}")
    target = doc.get("target", {})
    algebra = target.get("algebra")
    if not algebra:
        raise ReplayError("target.algebra missing")
    e = catalog.entry(algebra)
    raw_params = target.get("params", {})
    symbolic = target.get("symbolic", False)
    if symbolic and raw_params:
        raise ReplayError("symbolic targets take no parameter values")
    if not symbolic and e.params and set(raw_params) != set(e.params):
        raise ReplayError(f"target params must assign exactly {e.params}")
    params = tuple(sorted((k, Fraction(v)) for k, v in raw_params.items()))
    kind = target.get("kind", "gcs")

    entry_nonzero = [parse_poly(t) for t in e.nonzero]
    declared = []
    for t in target.get("nonzero", []):
        p = parse_poly(t)
        if not any(_proportional(p, g) is not None for g in entry_nonzero):
            raise ReplayError(
                f"nonzero fact {t!r} is not backed by the constraints of {algebra}")
        if params:
            v = p.subs(dict(params))
            if v.is_constant() and v.constant_value() == 0:
                raise ReplayError(f"nonzero fact {t!r} vanishes at {dict(params)}")
        declared.append(p if symbolic else p.subs(dict(params)))

    gens = _generators(algebra, params, kind)
    env = {k: Fraction(v) for k, v in params}
    state = _State(gens, declared, env)
    try:
        concluded = _run_steps(doc.get("steps", []), state, "")
    except _Fail as f:
        return Verdict(False, f.step, f.reason)
    if not concluded:
        return Verdict(False, "end", "script does not end in a contradiction")
    return Verdict(True)


def _run_steps(steps: Sequence[dict], state: _State, path: str) -> bool:
    concluded = False
    for idx, step in enumerate(steps, start=1):
        label = f"{path}{idx}"
        if concluded:
            raise _Fail(label, "step after the branch already concluded")
        op = step.get("op")
        try:
            if op == "assert_identity":
                _do_assert(step, state)
            elif op == "linear_combine":
                _do_combine(step, state)
            elif op == "deduce_zero_squares":
                _do_squares(step, state)
            elif op == "substitute":
                _do_substitute(step, state)
            elif op == "cancel_nonzero":
                _do_cancel(step, state)
            elif op == "case_split":
                _do_split(step, state, label)
                concluded = True
            elif op == "contradiction":
                _do_contradiction(step, state)
                concluded = True
            else:
                raise _Fail(label, f"unknown op {op!r}")
        except _Fail as f:
            raise _Fail(f.step if f.step != "?" else label, f.reason)
    return concluded


def _do_assert(step: dict, state: _State):
    gen = step["generator"]
    actual = state.value(gen)
    expected = state.parse(step["expected"])
    if actual != expected:
        raise _Fail("?", f"identity mismatch for {gen}: computed "
                         f"{actual}, script says {expected}")


def _do_combine(step: dict, state: _State):
    combo = state.combination(step["terms"])
    result = state.parse(step["result"])
    if combo != result:
        raise _Fail("?", f"linear combination mismatch: computed {combo}, "
                         f"script says {result}")
    state.add_hyp(result)


def _do_squares(step: dict, state: _State):
    combo = state.combination(step["terms"])
    total = Polynomial()
    qs = []
    for c_text, q_text in step["squares"]:
        c = _positive_rational(c_text)
        if c <= 0:
            raise _Fail("?", f"square coefficient {c} must be positive")
        q = state.parse(q_text)
        qs.append(q)
        total = total + Polynomial.constant(c) * q * q
    if combo != total:
        raise _Fail("?", f"squares witness does not reproduce the "
                         f"combination: {combo} != {total}")
    for q in qs:
        state.add_hyp(q)


def _do_substitute(step: dict, state: _State):
    var = step["variable"]
    value = state.parse(step.get("value", "0"))
    candidate = Polynomial.var(var) - value
    for p in state.hyps.values():
        if _proportional(p, candidate) is not None:
            state.apply_substitution(var, value)
            return
    raise _Fail("?", f"no hypothesis justifies {var} = {value}")


def _do_cancel(step: dict, state: _State):
    combo = state.combination(step["terms"])
    scale = Fraction(str(step.get("scale", "1")))
    if scale == 0:
        raise _Fail("?", "scale must be nonzero")
    result = state.parse(step["result"])
    product = Polynomial.constant(scale) * result
    for f_text in step["factors"]:
        f = state.parse(f_text)
        if not state.factor_backed(f):
            raise _Fail("?", f"factor {f_text!r} is not known to be nonzero "
                             "on the target's parameter region")
        product = product * f
    if combo != product:
        raise _Fail("?", f"cancellation witness mismatch: {combo} != {product}")
    state.add_hyp(result)


def _do_split(step: dict, state: _State, label: str):
    combo = state.combination(step["terms"])
    scale = Fraction(str(step.get("scale", "1")))
    f = state.parse(step["factors"][0])
    g = state.parse(step["factors"][1])
    if combo != Polynomial.constant(scale) * f * g:
        raise _Fail(label, f"factorization witness mismatch: {combo} != "
                           f"{scale}*({f})*({g})")
    branches = step["branches"]
    if len(branches) != 2:
        raise _Fail(label, "case split needs exactly two branches")
    for bi, (fac, branch) in enumerate(zip((f, g), branches)):
        sub = state.clone()
        sub.add_hyp(fac)
        if not _run_steps(branch, sub, f"{label}.{bi + 1}."):
            raise _Fail(f"{label}.{bi + 1}", "branch does not conclude")


def _do_contradiction(step: dict, state: _State):
    combo = state.combination(step["terms"])
    const = Fraction(str(step["constant"]))
    if const <= 0:
        raise _Fail("?", f"contradiction constant {const} must be positive")
    total = Polynomial.constant(const)
    for c_text, q_text in step.get("squares", []):
        c = Fraction(str(c_text))
        if c < 0:
            raise _Fail("?", f"square coefficient {c} must be nonnegative")
        q = state.parse(q_text)
        total = total + Polynomial.constant(c) * q * q
    if combo != total:
        raise _Fail("?", f"contradiction witness mismatch: {combo} != {total}")


# ---------------------------------------------------------------------------
# shipped scripts
# ---------------------------------------------------------------------------

SCRIPTS_DIR = pathlib.Path(__file__).parent / "scripts"


def shipped_scripts() -> Dict[str, dict]:
    out = {}
    for path in sorted(SCRIPTS_DIR.glob("*.json")):
        if path.name == "manifest.json":
            continue
        out[path.stem] = json.loads(path.read_text())
    return out


def load_script(path: str) -> dict:
    return json.loads(pathlib.Path(path).read_text())


def coverage_manifest() -> dict:
    return json.loads((SCRIPTS_DIR / "manifest.json").read_text())


def check_shipped(name: str, params: Optional[Mapping[str, Fraction]] = None) -> Verdict:
    """Check one shipped script, optionally overriding target parameters."""
    doc = shipped_scripts()[name]
    if params is not None:
        doc = json.loads(json.dumps(doc))
        doc["target"]["params"] = {k: str(v) for k, v in params.items()}
        doc["target"]["symbolic"] = False
    return check_script(doc)
