"""3-SAT to graphs of fixed diameter, and finite checks of the reduction claims.

Given a 3-CNF ``F`` on ``n`` variables with ``l`` clauses, ``G_d(F)`` has an
independent (total/dual/outer) MV set of size ``alpha = n + l + d - 3``
exactly when ``F`` is satisfiable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .graphcore import Graph, GraphError, diameter, from_edge_list
from .invariants import DEFAULT_CAPS, SolverCaps, independence_number, mu_independent_variant


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """Clauses are tuples of nonzero DIMACS literals (``-i`` is the negation of ``x_i``)."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.num_vars

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def missing_literals(self) -> list[int]:
        present = {lit for c in self.clauses for lit in c}
        return [lit for i in range(1, self.num_vars + 1) for lit in (i, -i) if lit not in present]

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def normalize(num_vars: int, clauses, repair: bool = False) -> CnfFormula:
    """Check the 3-SAT shape; optionally pad so every literal occurs.

    Padding adds two fresh variables ``a, b`` and, per missing literal ``L``,
    the clauses ``L | a | b`` and ``L | -a | -b`` (satisfied by ``a=1, b=0``).
    """
    out = []
    for raw in clauses:
        lits = tuple(dict.fromkeys(raw))
        for lit in lits:
            if lit == 0 or abs(lit) > num_vars:
                raise CnfError(f"literal {lit} out of range for {num_vars} variables")
            if -lit in lits:
                raise CnfError(f"tautological clause {raw}")
        if len(lits) != 3:
            raise CnfError(f"clause {raw} has {len(lits)} distinct literals, expected 3")
        out.append(lits)
    F = CnfFormula(num_vars, tuple(out))
    missing = F.missing_literals()
    if missing:
        if not repair:
            raise CnfError(f"literals {missing} do not occur in any clause")
        a, b = num_vars + 1, num_vars + 2
        extra = []
        for lit in missing:
            extra += [(lit, a, b), (lit, -a, -b)]
        F = CnfFormula(num_vars + 2, F.clauses + tuple(extra))
    return F


def parse_dimacs(text: str, repair: bool = False) -> CnfFormula:
    header = None
    tokens = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in "c%":
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"malformed header {line!r}")
            try:
                header = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfError(f"malformed header {line!r}") from None
            continue
        if header is None:
            raise CnfError("clause before 'p cnf' header")
        try:
            tokens += [int(t) for t in line.split()]
        except ValueError:
            raise CnfError(f"malformed clause line {line!r}") from None
    if header is None:
        raise CnfError("missing 'p cnf' header")
    clauses = []
    cur = []
    for t in tokens:
        if t == 0:
            if not cur:
                raise CnfError("empty clause")
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(t)
    if cur:
        raise CnfError("last clause is not terminated by 0")
    nv, nc = header
    if len(clauses) != nc:
        raise CnfError(f"header announces {nc} clauses, found {len(clauses)}")
    return normalize(nv, clauses, repair)


def brute_force_sat(F: CnfFormula, max_vars: int = 24) -> tuple[bool, ...] | None:
    if F.num_vars > max_vars:
        raise CnfError(f"{F.num_vars} variables exceeds the brute-force limit {max_vars}")
    for bits in itertools.product((False, True), repeat=F.num_vars):
        if F.satisfied_by(bits):
            return bits
    return None


def random_formula(rng: random.Random, num_vars: int, num_clauses: int, tries: int = 1000) -> CnfFormula:
    """Uniform 3-clauses over distinct variables, resampled until every literal occurs."""
    if 3 * num_clauses < 2 * num_vars:
        raise CnfError("too few clauses for every literal to occur")
    for _ in range(tries):
        clauses = []
        for _ in range(num_clauses):
            vs = rng.sample(range(1, num_vars + 1), 3)
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
        try:
            return normalize(num_vars, clauses)
        except CnfError:
            continue
    raise CnfError(f"could not sample a normalized formula in {tries} tries")


# -- gadget -------------------------------------------------------------------

@dataclass(frozen=True)
class GadgetGraph:
    """``G_d(F)`` with role tags.

    Vertex order: literals ``x1+ x1- x2+ ...``, clause vertices ``c1..cl``,
    leaves ``c1'..cl'``, tail path ``v1..v_{d-2}``, then ``z1..z_{d-3}``.
    """

    graph: Graph
    roles: tuple[str, ...]
    n: int
    l: int
    d: int
    formula: CnfFormula = field(repr=False)

    def index(self, role: str) -> int:
        return self.roles.index(role)

    def group(self, kind: str) -> tuple[int, ...]:
        """Vertices of ``X``, ``C``, ``C'`` or ``Z``."""
        pred = {
            "X": lambda r: r.startswith("x"),
            "C": lambda r: r.startswith("c") and not r.endswith("'"),
            "C'": lambda r: r.endswith("'"),
            "Z": lambda r: r[0] in "vz",
        }[kind]
        return tuple(i for i, r in enumerate(self.roles) if pred(r))

    @property
    def target(self) -> int:
        """Predicted independence number."""
        return self.n + self.l + self.d - 3 if self.d >= 4 else self.n + self.l

    def decode(self, S: Sequence[int]) -> tuple[bool, ...]:
        """Truth assignment read off a set: ``x_i- in S`` means ``x_i`` true."""
        S = set(S)
        return tuple(self.index(f"x{i}-") in S for i in range(1, self.n + 1))

    def sidecar(self) -> dict:
        return {
            "schema": "mvsets.gadget/1",
            "n": self.n,
            "l": self.l,
            "d": self.d,
            "order": self.graph.n,
            "predicted_alpha": self.target,
            "target": self.target,
            "roles": list(self.roles),
            "clauses": [list(c) for c in self.formula.clauses],
        }


def _check_formula(F: CnfFormula) -> None:
    for c in F.clauses:
        if len(c) != 3 or len({abs(l) for l in c}) != 3:
            raise CnfError(f"clause {c} is not a 3-clause over distinct variables")
    if F.missing_literals():
        raise CnfError("formula is not normalized: some literal never occurs")


def build_gadget(F: CnfFormula, d: int) -> GadgetGraph:
    if d < 4:
        raise GraphError("build_gadget needs d >= 4; use build_gadget_d3 for d = 3")
    _check_formula(F)
    n, l = F.num_vars, len(F.clauses)
    roles = []
    for i in range(1, n + 1):
        roles += [f"x{i}+", f"x{i}-"]
    roles += [f"c{j}" for j in range(1, l + 1)]
    roles += [f"c{j}'" for j in range(1, l + 1)]
    roles += [f"v{s}" for s in range(1, d - 1)]
    roles += [f"z{s}" for s in range(1, d - 2)]
    idx = {r: i for i, r in enumerate(roles)}

    def lit(x: int) -> int:
        return idx[f"x{abs(x)}{'+' if x > 0 else '-'}"]

    edges = []
    for i in range(1, n + 1):
        edges += [(idx[f"x{i}+"], idx[f"x{i}-"]), (idx[f"x{i}+"], idx["v1"]), (idx[f"x{i}-"], idx["v1"])]
    for j, clause in enumerate(F.clauses, 1):
        edges.append((idx[f"c{j}"], idx[f"c{j}'"]))
        edges += [(idx[f"c{j}"], lit(x)) for x in clause]
    edges += [(idx[f"c{a}"], idx[f"c{b}"]) for a, b in itertools.combinations(range(1, l + 1), 2)]
    for s in range(1, d - 2):
        edges += [(idx[f"v{s}"], idx[f"v{s + 1}"]), (idx[f"v{s}"], idx[f"z{s}"]), (idx[f"v{s + 1}"], idx[f"z{s}"])]
    G = from_edge_list(len(roles), edges, f"G{d}(F)")
    return GadgetGraph(G, tuple(roles), n, l, d, F)


def build_gadget_d3(F: CnfFormula) -> GadgetGraph:
    """``G_4(F)`` without ``z1`` and ``v2``."""
    g4 = build_gadget(F, 4)
    drop = {g4.index("z1"), g4.index("v2")}
    keep = [i for i in range(g4.graph.n) if i not in drop]
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[a], pos[b]) for a, b in g4.graph.edges() if a in pos and b in pos]
    G = from_edge_list(len(keep), edges, "G3(F)")
    return GadgetGraph(G, tuple(g4.roles[i] for i in keep), g4.n, g4.l, 3, F)


def gadget(F: CnfFormula, d: int) -> GadgetGraph:
    return build_gadget_d3(F) if d == 3 else build_gadget(F, d)


# -- claim verification --------------------------------------------------------

CLAIM_VARIANTS = ("mv", "total", "dual", "outer")


@dataclass
class ClaimReport:
    n: int
    l: int
    d: int
    order: int
    diameter: float
    alpha: int
    target: int
    satisfiable: bool
    assignment: tuple[bool, ...] | None
    sigma: dict[str, int]
    equals_alpha: dict[str, bool]
    decoded: dict[str, tuple[bool, ...] | None]
    checked_variants: tuple[str, ...]
    passed: bool

    def to_dict(self) -> dict:
        out = asdict(self)
        out["schema"] = "mvsets.claims/1"
        return out


def verify_claims(F: CnfFormula, d: int, caps: SolverCaps = DEFAULT_CAPS,
                  variants: Sequence[str] = CLAIM_VARIANTS) -> ClaimReport:
    """Measure alpha and each independent visibility number on the gadget and
    compare with the SAT oracle.

    ``passed`` requires ``alpha == target``, diameter ``d``, and for each checked
    variant: satisfiable iff the number reaches alpha, with the set decoded
    into a satisfying assignment whenever it does.  At ``d = 3`` the plain
    independent MV number is reported but not checked (it always equals
    alpha on diameter-three graphs).
    """
    g = gadget(F, d)
    G = g.graph
    alpha = independence_number(G, caps).value
    model = brute_force_sat(F)
    sat = model is not None
    checked = tuple(v for v in variants if not (d == 3 and v == "mv"))
    sigma, equals, decoded = {}, {}, {}
    ok = alpha == g.target and diameter(G) == d
    for var in variants:
        res = mu_independent_variant(G, var, caps)
        sigma[var] = res.value
        equals[var] = res.value == alpha
        decoded[var] = g.decode(res.certificate) if equals[var] else None
        if var in checked:
            ok &= equals[var] == sat
            if equals[var]:
                ok &= F.satisfied_by(decoded[var])
    return ClaimReport(g.n, g.l, d, G.n, diameter(G), alpha, g.target, sat, model,
                       sigma, equals, decoded, checked, bool(ok))


# -- fixed instances -----------------------------------------------------------

def sample_formula() -> CnfFormula:
    """``(x1 | x2 | -x3) & (-x1 | -x2 | x4) & (x2 | x3 | -x4)``."""
    return normalize(4, [(1, 2, -3), (-1, -2, 4), (2, 3, -4)])


SAMPLE_TOTAL_ROLES = ("x1-", "x2+", "x3-", "x4+", "c1'", "c2'", "c3'", "z1", "z2")


def sample_total_set(g: GadgetGraph) -> tuple[int, ...]:
    """A known independent total MV set of size alpha in ``G_5`` of :func:`sample_formula`."""
    return tuple(sorted(g.index(r) for r in SAMPLE_TOTAL_ROLES))


def complete_unsat_formula(num_vars: int = 3) -> CnfFormula:
    """All ``2^3`` sign patterns on variables 1..3 (unsatisfiable)."""
    if num_vars != 3:
        raise CnfError("the complete clause set is built on three variables")
    clauses = [tuple(s * v for s, v in zip(signs, (1, 2, 3)))
               for signs in itertools.product((1, -1), repeat=3)]
    return normalize(3, clauses)


def split_unsat_formula() -> CnfFormula:
    """Unsatisfiable on four variables: each sign pattern of ``(x1, x2)`` is killed
    by a clause pair on ``x3`` or ``x4``."""
    clauses = []
    for s1, s2, third in ((1, 1, 3), (1, -1, 4), (-1, 1, 3), (-1, -1, 4)):
        clauses += [(s1, 2 * s2, third), (s1, 2 * s2, -third)]
    return normalize(4, clauses)


def permute_formula(F: CnfFormula, rng: random.Random) -> CnfFormula:
    """Random variable renaming, sign flips and clause shuffle (preserves satisfiability)."""
    perm = list(range(1, F.num_vars + 1))
    rng.shuffle(perm)
    flip = [rng.choice((1, -1)) for _ in perm]
    clauses = [tuple((1 if l > 0 else -1) * flip[abs(l) - 1] * perm[abs(l) - 1] for l in c)
               for c in F.clauses]
    rng.shuffle(clauses)
    return normalize(F.num_vars, clauses)
