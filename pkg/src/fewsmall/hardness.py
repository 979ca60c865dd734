"""CNF formulas compiled into families of two-bin vector packing instances.

Instance t of the family has one item per variable plus two items T and F of
dimension m+2.  Dimension m+1 forces T and F into different bins, dimension
m+2 lets exactly t variable items join T, and dimension j <= m stays within
capacity in the T-bin exactly when the assignment "variables next to T are
true" satisfies clause j.  So instance t is packable iff some satisfying
assignment sets exactly t variables to true.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .model import PackingInstance, serialize_instance


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    var_count: int
    clauses: tuple[frozenset[int], ...]

    def __post_init__(self):
        clauses = tuple(frozenset(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.var_count < 0:
            raise CnfError("variable count must be non-negative")
        for j, c in enumerate(clauses):
            for lit in c:
                if lit == 0 or abs(lit) > self.var_count:
                    raise CnfError(f"clause {j + 1} refers to variable {abs(lit)} beyond {self.var_count}"
                                   if lit else f"clause {j + 1} contains literal 0")
                if -lit in c:
                    raise CnfError(f"clause {j + 1} contains both {abs(lit)} and -{abs(lit)}")

    @classmethod
    def from_clauses(cls, var_count: int, clauses: Iterable[Iterable[int]]) -> "CnfFormula":
        """Build a formula, silently dropping tautological clauses (always satisfied)."""
        kept = []
        for c in clauses:
            c = frozenset(c)
            if not any(-lit in c for lit in c):
                kept.append(c)
        return cls(var_count, tuple(kept))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: tuple[bool, ...]) -> bool:
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.var_count} {self.m}"]
        lines += [" ".join(str(l) for l in sorted(c, key=lambda x: (abs(x), x))) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF: ``c`` comment lines, one ``p cnf n m`` header, clauses ended by 0.

    Clauses may span lines.  A trailing clause without its 0 is accepted, a
    ``%`` line ends the input (as in some benchmark files), and tautological
    clauses are dropped.
    """
    header: Optional[tuple[int, int]] = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("c"):
            continue
        if s.startswith("%"):
            break
        if s.startswith("p"):
            parts = s.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {lineno}: bad problem line {s!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfError(f"line {lineno}: bad problem line {s!r}") from None
            continue
        if header is None:
            raise CnfError(f"line {lineno}: clause before the 'p cnf' header")
        for tok in s.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfError(f"line {lineno}: {tok!r} is not a literal") from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                if abs(lit) > header[0]:
                    raise CnfError(f"line {lineno}: variable {abs(lit)} exceeds the declared {header[0]}")
                current.append(lit)
    if current:
        clauses.append(current)
    if header is None:
        raise CnfError("missing 'p cnf' header")
    return CnfFormula.from_clauses(header[0], clauses)


# ---------------------------------------------------------------------------
# the family

def negated_count(clause: frozenset[int]) -> int:
    return sum(1 for l in clause if l < 0)


def variable_item(formula: CnfFormula, i: int) -> tuple[Fraction, ...]:
    """Item of variable i (1-based)."""
    n = formula.var_count
    coords = []
    for c in formula.clauses:
        if i in c:
            coords.append(Fraction(0))
        elif -i in c:
            coords.append(Fraction(2, 2 * n))
        else:
            coords.append(Fraction(1, 2 * n))
    return tuple(coords) + (Fraction(0), Fraction(1, n))


def true_item(formula: CnfFormula, t: int) -> tuple[Fraction, ...]:
    n = formula.var_count
    coords = [1 - Fraction(t + negated_count(c) - 1, 2 * n) for c in formula.clauses]
    return tuple(coords) + (Fraction(1), Fraction(n - t, n))


def false_item(formula: CnfFormula, t: int) -> tuple[Fraction, ...]:
    n = formula.var_count
    return tuple(Fraction(0) for _ in formula.clauses) + (Fraction(1), Fraction(t, n))


@dataclass(frozen=True)
class HardInstanceFamily:
    formula: CnfFormula
    instances: tuple[PackingInstance, ...]

    # item layout inside every instance
    @property
    def t_index(self) -> int:
        return self.formula.var_count

    @property
    def f_index(self) -> int:
        return self.formula.var_count + 1


def cnf_to_packing_family(formula: CnfFormula) -> HardInstanceFamily:
    n = formula.var_count
    if n < 1:
        raise CnfError("the formula needs at least one variable")
    variables = tuple(variable_item(formula, i) for i in range(1, n + 1))
    instances = []
    for t in range(n + 1):
        items = variables + (true_item(formula, t), false_item(formula, t))
        instances.append(PackingInstance(items, frozenset(), 2, formula.m + 2))
    return HardInstanceFamily(formula, tuple(instances))


def family_documents(family: HardInstanceFamily) -> list[tuple[str, bytes]]:
    """(file name, document) per instance; the promise check is switched off in each."""
    width = len(str(family.formula.var_count))
    return [(f"t{t:0{width}d}.json", serialize_instance(inst, promise="none", t=t))
            for t, inst in enumerate(family.instances)]


@dataclass(frozen=True)
class Violation:
    t: int
    assignment: tuple[bool, ...]
    dimension: int          # 1-based; 0 for whole-instance problems
    detail: str


@dataclass
class FamilyReport:
    checked_assignments: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        head = f"{self.checked_assignments} assignments checked, {len(self.violations)} violations"
        lines = [head] + [f"t={v.t} assignment={''.join('1' if b else '0' for b in v.assignment)} "
                          f"dim={v.dimension}: {v.detail}" for v in self.violations[:20]]
        if len(self.violations) > 20:
            lines.append(f"... {len(self.violations) - 20} more")
        return "\n".join(lines)


def verify_family(family: HardInstanceFamily) -> FamilyReport:
    """Check, for every assignment with exactly t true variables, that instance t encodes it faithfully.

    For the split "true variables with T, the rest with F" the T-bin must stay
    within capacity in clause dimension j exactly when clause j is satisfied
    (alpha + delta >= 1, where alpha counts true variables occurring positively
    and delta false variables occurring negatively), the F-bin must never
    overflow in a clause dimension, and both bins must be exactly full in the
    counting dimension.  The coordinates are read from the instances, so a
    tampered instance shows up here.
    """
    formula = family.formula
    n, m = formula.var_count, formula.m
    report = FamilyReport()
    for t, inst in enumerate(family.instances):
        if inst.n != n + 2 or inst.dimension != m + 2 or inst.bins != 2:
            report.violations.append(Violation(t, (), 0, "instance has the wrong shape"))
            continue
        T, F = inst.items[n], inst.items[n + 1]
        if T[m] + F[m] <= 1:
            report.violations.append(Violation(t, (), m + 1, "T and F could share a bin"))
        for true_vars in itertools.combinations(range(n), t):
            chosen = set(true_vars)
            assignment = tuple(i in chosen for i in range(n))
            report.checked_assignments += 1
            t_load = [T[j] + sum(inst.items[i][j] for i in true_vars) for j in range(m + 2)]
            f_load = [F[j] + sum(inst.items[i][j] for i in range(n) if i not in chosen) for j in range(m + 2)]
            for j, clause in enumerate(formula.clauses):
                alpha = sum(1 for l in clause if l > 0 and assignment[l - 1])
                delta = sum(1 for l in clause if l < 0 and not assignment[-l - 1])
                fits_t = t_load[j] <= 1
                if fits_t != (alpha + delta >= 1):
                    what = "fits although the clause is falsified" if fits_t else "overflows although the clause is satisfied"
                    report.violations.append(Violation(t, assignment, j + 1, f"T-bin {what}"))
                if f_load[j] > 1:
                    report.violations.append(Violation(t, assignment, j + 1, "F-bin overflows"))
            for name, load in (("T", t_load), ("F", f_load)):
                if load[m + 1] != 1:
                    report.violations.append(Violation(t, assignment, m + 2, f"{name}-bin count load is {load[m + 1]}, not 1"))
    return report


def mutate_family(family: HardInstanceFamily, t: int, item: int, dim: int, delta: Fraction) -> HardInstanceFamily:
    """Copy of ``family`` with one coordinate of one instance shifted by ``delta`` (clamped at 0)."""
    inst = family.instances[t]
    items = [list(v) for v in inst.items]
    items[item][dim] = max(Fraction(0), items[item][dim] + delta)
    changed = PackingInstance(tuple(tuple(v) for v in items), inst.small, inst.bins, inst.dimension)
    instances = list(family.instances)
    instances[t] = changed
    return HardInstanceFamily(family.formula, tuple(instances))
