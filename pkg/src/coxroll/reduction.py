"""Mirror reduction: what reflection group a mirror inherits from the ambient one.

The reduction of an irreducible finite type is hard-coded as table data and
cross-checked against the root-system oracle (generate the roots, take the
subsystem orthogonal to the chosen mirror, read off its type).  The two
routes are independent on purpose; tests require them to agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import scheme
from .roots import RootSystem, generate_roots
from .scheme import (CoxeterMatrix, CoxeterType, SchemeError, classify,
                     decompose)

ORBIT_ALL = "all"
ORBIT_SHORT = "short"
ORBIT_LONG = "long"


class OrbitError(SchemeError):
    """Unknown mirror orbit for the given type."""


def orbit_names(factor):
    """Valid orbit identifiers for an irreducible finite factor."""
    fam, n, m = factor.family, factor.rank, factor.m
    if fam == "BC" or fam == "F" or (fam == "G" and m % 2 == 0):
        return (ORBIT_SHORT, ORBIT_LONG)
    return (ORBIT_ALL,)


def table_reduce(factor, orbit=ORBIT_ALL):
    """Reduction of one irreducible finite factor, straight from table data.

    The BC_n long-orbit entry is A1+BC(n-2): the mirrors orthogonal to a
    long-root mirror of BC_n form a BC(n-2) block plus the opposite
    diagonal, and the order identity |W|/orbit = 2*deck*|Delta| pins the
    order at 2^(n-2)(n-2)!*2.  (A1+D(n-2) is sometimes printed instead; it
    has the wrong order for n >= 4.)
    """
    fam, n, m = factor.family, factor.rank, factor.m
    valid = orbit_names(factor)
    if orbit not in valid:
        raise OrbitError(f"orbit {orbit!r} invalid for {factor}; expected {valid}")
    if fam == "A":
        if n == 1:
            return scheme.empty_type()
        return scheme.A(n - 2) + scheme.R()
    if fam == "BC":
        if orbit == ORBIT_SHORT:
            return scheme.BC(n - 1)
        return scheme.A(1) + scheme.BC(n - 2)
    if fam == "D":
        return scheme.A(1) + scheme.D(n - 2)
    if fam == "E":
        return {6: scheme.A(5), 7: scheme.D(6), 8: scheme.E(7)}[n]
    if fam == "F":
        return scheme.BC(3)
    if fam == "G":
        if m % 2 == 1:
            return scheme.R()
        return scheme.A(1)
    if fam == "H":
        return scheme.A(1) + scheme.A(1) if n == 3 else scheme.H(3)
    raise OrbitError(f"{factor} is not an irreducible finite type")


def oracle_reduce(matrix, root_index, rs=None):
    """Reduction at a mirror, computed from the root system.

    Enumerates the roots, takes the positive roots orthogonal to the chosen
    one, extracts their simple system and type, and pads with R factors so
    the total rank is rank - 1 (the orthogonal complement of the subsystem
    span inside the mirror contributes trivial directions).
    """
    if rs is None:
        rs = generate_roots(matrix)
    subset = rs.orthogonal_set(root_index)
    return rs.subsystem_type(subset, pad_to=matrix.rank - 1)


def orbit_name(matrix, rs, orbit):
    """Canonical name of a mirror orbit of an irreducible finite matrix.

    Two-orbit types are told apart by the label multiset at a simple node of
    the orbit ("short" is the node seeing only the heavy bond); where both
    orbits look alike (BC2, F4, G2 even) the orbit holding the smallest
    generator index is called "long".  Ties only happen where both table
    entries coincide.
    """
    orbits = rs.orbits()
    if len(orbits) == 1:
        return ORBIT_ALL
    if len(orbits) != 2:
        raise OrbitError(f"{classify(matrix)} has {len(orbits)} mirror orbits")
    n = matrix.rank

    def multisets(orb):
        out = set()
        for k in orb:
            if k < n:
                labels = tuple(sorted(matrix.label(k, j)
                                      for j in range(n)
                                      if j != k and matrix.label(k, j) >= 3))
                out.add(labels)
        return out

    a, b = orbits
    ma, mb = multisets(a), multisets(b)
    if ma != mb:
        # BC_n (n >= 3): the short orbit holds the node whose only bond is the 4
        if (4,) in ma and (4,) not in mb:
            return ORBIT_SHORT if orbit == a else ORBIT_LONG
        if (4,) in mb and (4,) not in ma:
            return ORBIT_SHORT if orbit == b else ORBIT_LONG
    # symmetric cases: smallest generator index gets "long"
    first = a if min(a) < min(b) else b
    return ORBIT_LONG if orbit == first else ORBIT_SHORT


@dataclass(frozen=True)
class ReductionResult:
    source: CoxeterType
    orbit: str
    result: CoxeterType
    table_result: CoxeterType | None = None

    @property
    def table_agrees(self):
        return self.table_result is not None and self.table_result == self.result

    def to_json(self):
        payload = {"source": str(self.source), "orbit": self.orbit,
                   "result": str(self.result)}
        if self.table_result is not None:
            payload["table"] = str(self.table_result)
            payload["table_agrees"] = self.table_agrees
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def reduce_mirror(matrix, generator, check_table=False):
    """Reduction at the mirror of one generator, with optional table check.

    The table check requires an irreducible finite matrix; reducible inputs
    get the oracle result only.
    """
    rs = generate_roots(matrix)
    k = rs.simple_root_index(generator)
    result = oracle_reduce(matrix, k, rs=rs)
    source = classify(matrix)
    orbit = orbit_name(matrix, rs, rs.orbit_of(k)) if len(source.factors) == 1 \
        else f"generator {generator}"
    table = None
    if check_table:
        if len(source.factors) != 1:
            raise SchemeError("table check needs an irreducible scheme")
        table = table_reduce(source.irreducible_factor(), orbit)
    return ReductionResult(source, orbit, result, table)


# ---------------------------------------------------------------------------
# Equipments


@dataclass(frozen=True)
class Equipment:
    """All finite strata of a scheme: generator subsets with finite type."""

    matrix: CoxeterMatrix
    strata: dict  # frozenset of generators -> CoxeterType

    def type_of(self, subset):
        key = frozenset(subset)
        if key not in self.strata:
            raise SchemeError(f"{sorted(key)} is not a finite stratum")
        return self.strata[key]

    def to_json(self):
        rows = [{"generators": sorted(s), "type": str(t)}
                for s, t in sorted(self.strata.items(),
                                   key=lambda kv: (len(kv[0]), sorted(kv[0])))]
        return json.dumps({"rank": self.matrix.rank, "strata": rows},
                          sort_keys=True, separators=(",", ":"))


def equipment_of(matrix):
    """Enumerate every nonempty generator subset with a finite principal type."""
    n = matrix.rank
    strata = {}
    for mask in range(1, 1 << n):
        subset = frozenset(i for i in range(n) if mask & (1 << i))
        t = classify(matrix.submatrix(subset))
        if t.finite:
            strata[subset] = t
    return Equipment(matrix, strata)


def equipment_reduce(matrix, subset, generator):
    """Reduction of a finite stratum at the mirror of one of its generators.

    This is the equipment of the corresponding stratum of the developed
    chamber: restrict to the stratum's principal submatrix and reduce there.
    """
    nodes = sorted(subset)
    if generator not in nodes:
        raise SchemeError(f"generator {generator} not in stratum {nodes}")
    sub = matrix.submatrix(nodes)
    t = classify(sub)
    if not t.finite:
        raise SchemeError(f"stratum {nodes} has non-finite type {t}")
    rs = generate_roots(sub)
    return oracle_reduce(sub, rs.simple_root_index(nodes.index(generator)), rs=rs)
