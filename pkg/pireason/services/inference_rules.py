"""
Inference rules for partial entailment, re-derived by random sweep.

Each rule is checked on concrete instances. Cells marked "yes" in the
rule table are swept with seeded random instances and must survive all of
them; cells marked "no" carry a counterexample that fails the rule check.
A sweep is a falsification run, not a proof.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from .. import config
from ..errors import InstanceGenerationError, RuleShapeError, Table2ViolationError
from .formula import (
    And, Atom, Formula, Iff, Implies, Not, Or, Theory, atoms, substitute_atom, to_text,
)
from .parser import parse
from .partial_entailment import KINDS, EntailmentKind, is_trivial, partially_entails
from .semantics import entails, entails_theory, equivalent, theories_equivalent

logger = logging.getLogger(__name__)


class RuleId(Enum):
    REF = "REF"
    LE = "LE"
    RE = "RE"
    BE = "BE"
    REV = "REV"
    TRAN = "TRAN"
    AS = "AS"
    LO = "LO"
    LS = "LS"
    RA = "RA"
    RO = "RO"
    MONO = "MONO"
    LN = "LN"
    RN = "RN"
    CP = "CP"

    @property
    def is_extension(self) -> bool:
        """Contraposition is not part of the original rule table."""
        return self is RuleId.CP


_ALL_YES = {k: True for k in KINDS}
_ALL_NO = {k: False for k in KINDS}

# Expected verdict per rule and kind
TABLE2: Dict[RuleId, Dict[EntailmentKind, bool]] = {
    RuleId.REF: _ALL_YES,
    RuleId.LE: _ALL_YES,
    RuleId.RE: _ALL_YES,
    RuleId.BE: _ALL_YES,
    RuleId.REV: _ALL_YES,
    RuleId.TRAN: {EntailmentKind.WEAK: False, EntailmentKind.PLAIN: False, EntailmentKind.STRONG: True},
    RuleId.AS: _ALL_NO,
    RuleId.LO: _ALL_NO,
    RuleId.LS: {EntailmentKind.WEAK: True, EntailmentKind.PLAIN: False, EntailmentKind.STRONG: False},
    RuleId.RA: _ALL_NO,
    RuleId.RO: _ALL_NO,
    RuleId.MONO: _ALL_NO,
    RuleId.LN: _ALL_NO,
    RuleId.RN: _ALL_NO,
    RuleId.CP: _ALL_NO,
}

_BINARY = (And, Or, Implies, Iff)

# Slots each rule schema reads besides the theory
_NEEDS_R = {RuleId.LE, RuleId.RE, RuleId.TRAN, RuleId.LO, RuleId.LS, RuleId.RA, RuleId.RO}
_NEEDS_ALT = {RuleId.BE, RuleId.MONO}


@dataclass(frozen=True)
class RuleInstance:
    """Concrete values for a rule schema's metavariables."""
    theory: Theory
    p: Formula
    q: Formula
    kind: EntailmentKind
    r: Optional[Formula] = None
    alt_theory: Optional[Theory] = None
    x: Optional[str] = None
    y: Optional[str] = None

    def formulas(self) -> List[Formula]:
        return [f for f in (self.p, self.q, self.r) if f is not None]

    def __str__(self) -> str:
        parts = [f"theory={self.theory}"]
        if self.alt_theory is not None:
            parts.append(f"alt_theory={self.alt_theory}")
        parts.append(f"P={to_text(self.p)}")
        parts.append(f"Q={to_text(self.q)}")
        if self.r is not None:
            parts.append(f"R={to_text(self.r)}")
        if self.x is not None:
            parts.append(f"substitution={self.x}/{self.y}")
        return ", ".join(parts)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "theory": [to_text(f) for f in self.theory],
            "alt_theory": None if self.alt_theory is None else [to_text(f) for f in self.alt_theory],
            "p": to_text(self.p),
            "q": to_text(self.q),
            "r": None if self.r is None else to_text(self.r),
            "x": self.x,
            "y": self.y,
        }


@dataclass(frozen=True)
class RuleVerdict:
    """
    Outcome of one table cell.

    `confirmed` is true when no counterexample was found; a cell agrees
    with the table when `confirmed` equals `expected`.
    """
    rule: RuleId
    kind: EntailmentKind
    expected: bool
    confirmed: bool
    counterexample: Optional[RuleInstance] = None
    source: Optional[str] = None

    @property
    def agrees(self) -> bool:
        return self.confirmed == self.expected

    def to_dict(self) -> dict:
        return {
            "rule": self.rule.value,
            "kind": self.kind.value,
            "expected": self.expected,
            "confirmed": self.confirmed,
            "agrees": self.agrees,
            "extension": self.rule.is_extension,
            "source": self.source,
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
        }


# ==================== RULE CHECKING ====================

def _require(inst: RuleInstance, rule: RuleId) -> None:
    if rule in _NEEDS_R and inst.r is None:
        raise RuleShapeError(f"Rule {rule.value} needs a formula R")
    if rule in _NEEDS_ALT and inst.alt_theory is None:
        raise RuleShapeError(f"Rule {rule.value} needs a second theory")
    if rule is RuleId.AS and (inst.x is None or inst.y is None):
        raise RuleShapeError("Rule AS needs atoms x and y")
    if rule is RuleId.REV and len(inst.theory) > 0:
        raise RuleShapeError("Rule REV is stated for the empty theory")


def check_rule_instance(rule: RuleId, inst: RuleInstance) -> bool:
    """True iff the rule's implication holds on this instance."""
    _require(inst, rule)

    def holds(left: Formula, right: Formula, theory: Theory = inst.theory) -> bool:
        return partially_entails(inst.kind, theory, left, right).holds

    p, q, r, theory = inst.p, inst.q, inst.r, inst.theory

    if rule is RuleId.REF:
        return holds(p, p)
    if rule is RuleId.LE:
        return not (equivalent(theory, p, r) and holds(p, q)) or holds(r, q)
    if rule is RuleId.RE:
        return not (equivalent(theory, q, r) and holds(p, q)) or holds(p, r)
    if rule is RuleId.BE:
        if not theories_equivalent(theory, inst.alt_theory):
            return True
        return holds(p, q) == holds(p, q, inst.alt_theory)
    if rule is RuleId.REV:
        return not holds(p, q) or bool(atoms(p) & atoms(q))
    if rule is RuleId.TRAN:
        return not (holds(p, q) and holds(q, r)) or holds(p, r)
    if rule is RuleId.AS:
        if not holds(p, q):
            return True
        return holds(substitute_atom(p, inst.x, inst.y), substitute_atom(q, inst.x, inst.y))
    if rule is RuleId.LO:
        return not (holds(p, q) and holds(r, q)) or holds(Or(p, r), q)
    if rule is RuleId.LS:
        return not (entails(theory, Implies(p, r)) and holds(r, q)) or holds(p, q)
    if rule is RuleId.RA:
        return not (holds(p, q) and holds(p, r)) or holds(p, And(r, q))
    if rule is RuleId.RO:
        return not holds(p, q) or holds(p, Or(q, r))
    if rule is RuleId.MONO:
        if not (entails_theory(inst.alt_theory, theory) and holds(p, q)):
            return True
        return holds(p, q, inst.alt_theory)
    if rule is RuleId.LN:
        return not holds(p, q) or not holds(Not(p), q)
    if rule is RuleId.RN:
        return not holds(p, q) or not holds(p, Not(q))
    if rule is RuleId.CP:
        return not holds(p, q) or holds(Not(q), Not(p))
    raise RuleShapeError(f"Unknown rule {rule!r}")


BUILT_FORMULA_RULES = (RuleId.AS, RuleId.LO, RuleId.RA, RuleId.RO, RuleId.LN, RuleId.RN, RuleId.CP)


def built_formulas(rule: RuleId, inst: RuleInstance) -> List[Formula]:
    """Formulas the rule's conclusion builds from the slots."""
    if rule is RuleId.AS:
        return [substitute_atom(inst.p, inst.x, inst.y), substitute_atom(inst.q, inst.x, inst.y)]
    if rule is RuleId.LO:
        return [Or(inst.p, inst.r)]
    if rule is RuleId.RA:
        return [And(inst.r, inst.q)]
    if rule is RuleId.RO:
        return [Or(inst.q, inst.r)]
    if rule is RuleId.LN:
        return [Not(inst.p)]
    if rule is RuleId.RN:
        return [Not(inst.q)]
    if rule is RuleId.CP:
        return [Not(inst.p), Not(inst.q)]
    return []


def instance_is_nontrivial(rule: RuleId, inst: RuleInstance) -> bool:
    """No slot formula and no built formula is decided by a theory the rule consults."""
    _require(inst, rule)
    theories = [inst.theory]
    if rule is RuleId.MONO:
        theories.append(inst.alt_theory)
    formulas = inst.formulas() + built_formulas(rule, inst)
    return not any(is_trivial(t, f) for t in theories for f in formulas)


def formula_size(formula: Formula) -> int:
    """Number of nodes in the tree."""
    if isinstance(formula, Not):
        return 1 + formula_size(formula.child)
    if isinstance(formula, _BINARY):
        return 1 + formula_size(formula.left) + formula_size(formula.right)
    return 1


def instance_size(inst: RuleInstance) -> int:
    """Total node count over the slots and the theories."""
    theory_formulas = list(inst.theory)
    if inst.alt_theory is not None:
        theory_formulas.extend(inst.alt_theory)
    return sum(formula_size(f) for f in inst.formulas() + theory_formulas)


# ==================== RANDOM INSTANCES ====================


def formula_depth(formula: Formula) -> int:
    if isinstance(formula, Not):
        return 1 + formula_depth(formula.child)
    if isinstance(formula, _BINARY):
        return 1 + max(formula_depth(formula.left), formula_depth(formula.right))
    return 0


def random_formula(rng: random.Random, pool, depth: int) -> Formula:
    """A constant-free formula over `pool` of depth at most `depth`."""
    if depth <= 0 or rng.random() < 0.3:
        return Atom(rng.choice(pool))
    if rng.random() < 0.2:
        return Not(random_formula(rng, pool, depth - 1))
    node = rng.choice(_BINARY)
    return node(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1))


def _rewrite(rng: random.Random, formula: Formula, theory: Theory) -> Formula:
    """A formula equivalent to `formula` under `theory`."""
    options: List[Callable[[], Formula]] = [
        lambda: Not(Not(formula)),
        lambda: And(formula, formula),
        lambda: Or(formula, formula),
    ]
    if isinstance(formula, (And, Or, Iff)):
        options.append(lambda: type(formula)(formula.right, formula.left))
    if len(theory) > 0:
        member = rng.choice(theory.formulas)
        options.append(lambda: And(formula, member))
    return rng.choice(options)()


def _split_conjunctions(theory: Theory) -> Theory:
    """Replace every top-level conjunction by its conjuncts."""
    out: List[Formula] = []
    stack = list(reversed(theory.formulas))
    while stack:
        formula = stack.pop()
        if isinstance(formula, And):
            stack.append(formula.right)
            stack.append(formula.left)
        else:
            out.append(formula)
    return Theory(tuple(out))


class _InstanceFactory:
    """Builds one candidate instance per call, or None when the draw is unusable."""

    def __init__(self, rule: RuleId, kind: EntailmentKind, rng: random.Random):
        self.rule = rule
        self.kind = kind
        self.rng = rng
        self.depth = config.GENERATOR_MAX_DEPTH

    def _pool(self) -> Tuple[str, ...]:
        size = self.rng.randint(2, len(config.GENERATOR_ATOMS))
        return tuple(self.rng.sample(config.GENERATOR_ATOMS, size))

    def _formula(self, pool, depth: Optional[int] = None) -> Formula:
        return random_formula(self.rng, pool, self.depth if depth is None else depth)

    def _theory(self, pool) -> Theory:
        if self.rule is RuleId.REV:
            return Theory()
        size = self.rng.randint(0, config.GENERATOR_MAX_THEORY)
        formulas = []
        for _ in range(size):
            if self.rule is RuleId.BE and self.rng.random() < 0.5:
                formulas.append(And(self._formula(pool, self.depth - 1), self._formula(pool, self.depth - 1)))
            else:
                formulas.append(self._formula(pool))
        return Theory(tuple(formulas))

    def build(self) -> Optional[RuleInstance]:
        rng = self.rng
        pool = self._pool()
        theory = self._theory(pool)
        p = self._formula(pool)
        q = self._formula(pool)
        r = None
        alt = None
        x = y = None

        rule = self.rule
        if rule is RuleId.LE:
            r = _rewrite(rng, p, theory) if rng.random() < 0.75 else self._formula(pool)
        elif rule is RuleId.RE:
            r = _rewrite(rng, q, theory) if rng.random() < 0.75 else self._formula(pool)
        elif rule is RuleId.LS:
            r = self._formula(pool, self.depth - 1)
            if rng.random() < 0.75:
                p = And(r, self._formula(pool, self.depth - 1))
        elif rule is RuleId.TRAN:
            r = self._formula(pool)
            if rng.random() < 0.5:
                p = self._formula(pool, self.depth - 2)
                q = And(p, self._formula(pool, self.depth - 2))
                r = And(q, self._formula(pool, self.depth - 2))
        elif rule in _NEEDS_R:
            r = self._formula(pool)
        elif rule is RuleId.BE:
            alt = _split_conjunctions(theory)
            if alt == theory and len(theory) > 0:
                alt = theory.extend(rng.choice(theory.formulas))
        elif rule is RuleId.MONO:
            alt = theory.extend(self._formula(pool))
        elif rule is RuleId.AS:
            x = rng.choice(sorted(atoms(p) | atoms(q)))
            y = rng.choice(pool)

        inst = RuleInstance(theory, p, q, self.kind, r=r, alt_theory=alt, x=x, y=y)
        return inst if self._usable(inst) else None

    def _usable(self, inst: RuleInstance) -> bool:
        if any(formula_depth(f) > self.depth for f in inst.formulas()):
            return False
        return instance_is_nontrivial(self.rule, inst)


def generate_instances(rule: RuleId, kind: EntailmentKind, count: int, seed: int) -> List[RuleInstance]:
    """Deterministic nontrivial instances for one cell; replayable from the seed."""
    if count <= 0:
        raise ValueError("count must be positive")
    rng = random.Random(f"{seed}/{rule.value}/{kind.value}")
    factory = _InstanceFactory(rule, kind, rng)
    limit = count * config.GENERATION_ATTEMPT_FACTOR
    instances: List[RuleInstance] = []
    attempts = 0
    while len(instances) < count:
        if attempts >= limit:
            raise InstanceGenerationError(
                f"Only {len(instances)} of {count} nontrivial {rule.value}/{kind.value} "
                f"instances after {attempts} attempts"
            )
        attempts += 1
        inst = factory.build()
        if inst is not None:
            instances.append(inst)
    logger.debug(f"{rule.value}/{kind.value}: {count} instances in {attempts} attempts")
    return instances


# ==================== KNOWN COUNTEREXAMPLES ====================

def _instance(kind: EntailmentKind, p: str, q: str, r: Optional[str] = None,
              theory: Tuple[str, ...] = (), alt: Optional[Tuple[str, ...]] = None,
              x: Optional[str] = None, y: Optional[str] = None) -> RuleInstance:
    return RuleInstance(
        Theory(tuple(parse(f) for f in theory)),
        parse(p),
        parse(q),
        kind,
        r=None if r is None else parse(r),
        alt_theory=None if alt is None else Theory(tuple(parse(f) for f in alt)),
        x=x,
        y=y,
    )


def published_counterexample(rule: RuleId, kind: EntailmentKind) -> Optional[RuleInstance]:
    """Counterexamples published alongside the rule table."""
    if rule is RuleId.TRAN and kind in (EntailmentKind.WEAK, EntailmentKind.PLAIN):
        return _instance(kind, "x", "x & y", r="y")
    if rule is RuleId.LS and kind in (EntailmentKind.PLAIN, EntailmentKind.STRONG):
        return _instance(kind, "x & !y", "x & y", r="x")
    if rule in (RuleId.LN, RuleId.RN):
        return _instance(kind, "x", "x <-> y")
    return None


def derived_counterexample(rule: RuleId, kind: EntailmentKind) -> Optional[RuleInstance]:
    """Hand-checked counterexamples for the remaining "no" cells."""
    if rule is RuleId.AS:
        return _instance(kind, "z", "z & x | !z & y", x="x", y="y")
    if rule is RuleId.LO:
        if kind is EntailmentKind.WEAK:
            return _instance(kind, "x & z", "x & y | !x & v", r="!x & w")
        return _instance(kind, "x & z", "x & z & !w | !x & w & !z", r="!x & w")
    if rule is RuleId.RA:
        return _instance(kind, "x", "z & (x | y)", r="y & (x | z)")
    if rule is RuleId.RO:
        return _instance(kind, "x", "x & y", r="!x & y")
    if rule is RuleId.MONO:
        return _instance(kind, "x", "x & !z", alt=("z -> x",))
    if rule is RuleId.CP:
        return _instance(kind, "x", "x & y")
    return None


# ==================== TABLE REPORT ====================

def sweep_cell(rule: RuleId, kind: EntailmentKind, samples: int, seed: int) -> RuleVerdict:
    expected = TABLE2[rule][kind]

    if expected:
        for inst in generate_instances(rule, kind, samples, seed):
            if not check_rule_instance(rule, inst):
                logger.error(f"{rule.value}/{kind.value} failed on {inst}")
                raise Table2ViolationError(rule.value, kind.value, inst)
        logger.info(f"{rule.value}/{kind.value}: {samples} instances, no counterexample")
        return RuleVerdict(rule, kind, expected, True)

    known = published_counterexample(rule, kind)
    if known is not None and not check_rule_instance(rule, known):
        return RuleVerdict(rule, kind, expected, False, known, "published")

    failing = [inst for inst in generate_instances(rule, kind, samples, seed)
               if not check_rule_instance(rule, inst)]
    if failing:
        smallest = min(failing, key=instance_size)
        logger.info(
            f"{rule.value}/{kind.value}: {len(failing)} counterexamples found by search, "
            f"keeping one of size {instance_size(smallest)}"
        )
        return RuleVerdict(rule, kind, expected, False, smallest, "derived")

    fallback = derived_counterexample(rule, kind)
    if fallback is not None and not check_rule_instance(rule, fallback):
        logger.info(f"{rule.value}/{kind.value}: search found nothing, using the curated counterexample")
        return RuleVerdict(rule, kind, expected, False, fallback, "derived")

    logger.warning(f"{rule.value}/{kind.value}: expected to fail but no counterexample found")
    return RuleVerdict(rule, kind, expected, True)


def _sweep_cell_args(args: Tuple[RuleId, EntailmentKind, int, int]) -> RuleVerdict:
    return sweep_cell(*args)


def table2_report(samples_per_cell: int, seed: int, workers: int = 1) -> List[RuleVerdict]:
    """One verdict per (rule, kind), in table order."""
    if samples_per_cell < config.MIN_SAMPLES_PER_CELL:
        raise ValueError(
            f"samples_per_cell must be at least {config.MIN_SAMPLES_PER_CELL}, got {samples_per_cell}"
        )
    cells = [(rule, kind, samples_per_cell, seed) for rule in RuleId for kind in KINDS]
    logger.info(f"Sweeping {len(cells)} cells, {samples_per_cell} samples each, seed {seed}")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_cell_args, cells))
    return [_sweep_cell_args(cell) for cell in cells]


class RuleSweeper:
    """Owns the sweep's worker count; handlers ask it for reports."""

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.workers = workers

    def report(self, samples_per_cell: int, seed: int, workers: Optional[int] = None) -> List[RuleVerdict]:
        count = self.workers if workers is None else workers
        if count < 1:
            raise ValueError(f"workers must be at least 1, got {count}")
        return table2_report(samples_per_cell, seed, count)
