"""Permutation classes with cyclic displacements in {0, 1, q}.

For a permutation sigma of {1, ..., p} call (sigma(j) - j) mod p the
displacement of j.  The class with profile (r, s) collects the
permutations whose displacements take the value 1 exactly r times, q
exactly s times and 0 on the remaining p-r-s fixed points.

The class is nonempty iff p divides r+sq and r+s <= p; every member
then decomposes into k = gcd(r, s, (r+sq)/p) nontrivial cycles, each
walking r/k steps of size 1 and s/k steps of size q, and all members
share the sign (-1)^(r+s+k).  ``construct_witness`` builds an explicit
member from a lattice path that hugs the line s*x - r*y = 0.

Residues modulo p are always taken in {1, ..., p}: a reduction that
would give 0 gives p instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import EmptyClass, InvalidKey, NotACycle, TooLarge

#: largest p accepted by exhaustive class enumeration
ENUMERATION_LIMIT = 10


def reduce_1p(value: int, p: int) -> int:
    """Reduce into the residue system {1, ..., p}."""
    return (value - 1) % p + 1


def rotate(z: int, q: int, p: int) -> int:
    """The circle rotation z -> z + q in residues {1, ..., p}."""
    return reduce_1p(z + q, p)


class Permutation:
    """A permutation of {1, ..., p} stored in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        p = len(images)
        if sorted(images) != list(range(1, p + 1)):
            raise ValueError("images are not a bijection of {1, ..., p}")
        self.images = images

    @classmethod
    def identity(cls, p: int) -> "Permutation":
        return cls(range(1, p + 1))

    @classmethod
    def from_cycles(cls, p: int, cycles) -> "Permutation":
        """Build from disjoint cycles given as point sequences."""
        images = list(range(1, p + 1))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in seen:
                    raise ValueError(f"point {a} appears in two cycles")
                seen.add(a)
                images[a - 1] = b
        return cls(images)

    @property
    def p(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each rotated to start at its least point."""
        out = []
        seen = [False] * self.p
        for start in range(1, self.p + 1):
            if seen[start - 1]:
                continue
            cyc = []
            j = start
            while not seen[j - 1]:
                seen[j - 1] = True
                cyc.append(j)
                j = self.images[j - 1]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        """Number of cycles including fixed points."""
        return len(self.cycles(include_fixed=True))

    def sign(self) -> int:
        return -1 if (self.p - self.cycle_count()) % 2 else 1

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.p + 1) if self.images[i - 1] == i)

    def one_line(self) -> str:
        return "{" + ",".join(str(v) for v in self.images) + "}"

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def displacement_profile(
    sigma: Permutation, p: int, q: int
) -> Optional[tuple[int, int, int]]:
    """Counts (r, s, fixed) of displacements 1, q and 0.

    Returns None when some displacement falls outside {0, 1, q}, i.e.
    the permutation belongs to no class.
    """
    if sigma.p != p:
        raise ValueError(f"permutation acts on {sigma.p} points, not {p}")
    r = s = fixed = 0
    for j in range(1, p + 1):
        d = (sigma(j) - j) % p
        if d == 0:
            fixed += 1
        elif d == 1:
            r += 1
        elif d == q:
            s += 1
        else:
            return None
    return (r, s, fixed)


@dataclass(frozen=True)
class PermClassKey:
    """Identifies the class of profile (r, s) inside (p, q).

    Derived quantities: ``ell`` = (r+sq)/p when p divides r+sq (None
    otherwise, and the class is empty), and ``k`` = gcd(r, s, ell), the
    number of nontrivial cycles of every member.  The identity-only
    class (0, 0) has ell = 0 and k = 0 by convention.
    """

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p < 3 or not 2 <= self.q <= self.p - 1:
            raise ValueError(f"need p >= 3 and 2 <= q <= p-1, got {self}")
        if self.r < 0 or self.s < 0:
            raise ValueError("r and s must be nonnegative")

    @property
    def divisible(self) -> bool:
        return (self.r + self.s * self.q) % self.p == 0

    @property
    def ell(self) -> Optional[int]:
        if not self.divisible:
            return None
        return (self.r + self.s * self.q) // self.p

    @property
    def k(self) -> Optional[int]:
        ell = self.ell
        if ell is None:
            return None
        return math.gcd(self.r, self.s, ell)

    @property
    def is_empty(self) -> bool:
        return not (self.divisible and self.r + self.s <= self.p)


@dataclass(frozen=True)
class StructureReport:
    """Shared cycle structure of every member of a nonempty class."""

    k: int                        # number of nontrivial cycles
    cycles_each: tuple[int, int]  # (1-steps, q-steps) per cycle
    sign: int

    @property
    def cycle_length(self) -> int:
        return self.cycles_each[0] + self.cycles_each[1]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "ones_per_cycle": self.cycles_each[0],
            "q_steps_per_cycle": self.cycles_each[1],
            "sign": self.sign,
        }


def predict_structure(key: PermClassKey) -> StructureReport:
    """Cycle count, per-cycle step profile and sign of the class.

    k = gcd(r, s, ell) nontrivial cycles, each with r/k 1-steps and s/k
    q-steps, common sign (-1)^(r+s+k).  The identity class (0, 0) gets
    the degenerate report k=0, sign +1.
    """
    if not key.divisible:
        raise EmptyClass(f"{key.p} does not divide {key.r}+{key.s}*{key.q}")
    if key.r == 0 and key.s == 0:
        return StructureReport(0, (0, 0), 1)
    k = key.k
    sign = -1 if (key.r + key.s + k) % 2 else 1
    return StructureReport(k, (key.r // k, key.s // k), sign)


def enumerate_class(key: PermClassKey) -> list[Permutation]:
    """All members of the class, sorted by one-line notation (p <= 10).

    Walks the positions in order, choosing displacement 0, 1 or q at
    each and pruning on image collisions and on the remaining (r, s)
    budget, so only class members are ever completed.
    """
    if key.p > ENUMERATION_LIMIT:
        raise TooLarge(f"enumeration is limited to p <= {ENUMERATION_LIMIT}")
    if key.is_empty:
        return []
    found: list[Permutation] = []
    p, q, r, s = key.p, key.q, key.r, key.s
    images = [0] * p

    def walk(j: int, used: int, left_r: int, left_s: int) -> None:
        if j == p:
            found.append(Permutation(images))
            return
        if left_r + left_s > p - j:
            return
        for d, dr, ds in ((0, 0, 0), (1, 1, 0), (q, 0, 1)):
            if dr > left_r or ds > left_s:
                continue
            im = (j + d) % p
            bit = 1 << im
            if used & bit:
                continue
            images[j] = im + 1
            walk(j + 1, used | bit, left_r - dr, left_s - ds)

    walk(0, 0, r, s)
    found.sort(key=lambda w: w.images)
    return found


def enumerate_by_profile(p: int, q: int) -> dict[tuple[int, int], list[Permutation]]:
    """All displacement-constrained permutations grouped by (r, s).

    One search over the whole displacement product space (p <= 10);
    cheaper than calling :func:`enumerate_class` per profile when a
    full sweep is wanted.
    """
    if p > ENUMERATION_LIMIT:
        raise TooLarge(f"enumeration is limited to p <= {ENUMERATION_LIMIT}")
    out: dict[tuple[int, int], list[Permutation]] = {}
    images = [0] * p

    def walk(j: int, used: int, r: int, s: int) -> None:
        if j == p:
            out.setdefault((r, s), []).append(Permutation(images))
            return
        for d, dr, ds in ((0, 0, 0), (1, 1, 0), (q, 0, 1)):
            im = (j + d) % p
            bit = 1 << im
            if used & bit:
                continue
            images[j] = im + 1
            walk(j + 1, used | bit, r + dr, s + ds)

    walk(0, 0, 0, 0)
    for members in out.values():
        members.sort(key=lambda w: w.images)
    return out


# ---------------------------------------------------------------------------
# cycle words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleWord:
    """A cycle encoded as a start point and a word of displacements."""

    start: int
    word: tuple[int, ...]


def _walk_word(start: int, word, p: int) -> list[int]:
    # points visited by the word; NotACycle on early repeats or an open end
    points = [start]
    seen = {start}
    v = start
    for i, step in enumerate(word):
        v = reduce_1p(v + step, p)
        if i == len(word) - 1:
            if v != start:
                raise NotACycle(
                    f"word from {start} ends at {v}, not back at the start"
                )
            break
        if v in seen:
            raise NotACycle(f"point {v} revisited before the word ended")
        seen.add(v)
        points.append(v)
    return points


def cycle_from_word(cw: CycleWord, p: int, q: int) -> Permutation:
    """The permutation that is one cycle given by (start; word).

    The word must consist of steps 1 and q; successive partial sums
    from the start (residues in {1, ..., p}) must visit distinct points
    and return to the start exactly when the word is exhausted.
    """
    if not cw.word:
        raise ValueError("empty cycle word")
    if not 1 <= cw.start <= p:
        raise ValueError(f"start {cw.start} outside {{1, ..., {p}}}")
    bad = set(cw.word) - {1, q}
    if bad:
        raise ValueError(f"word steps {sorted(bad)} not in {{1, {q}}}")
    points = _walk_word(cw.start, cw.word, p)
    return Permutation.from_cycles(p, [points])


# ---------------------------------------------------------------------------
# lattice paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePath:
    """A monotone east/north path from (0, 0)."""

    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.vertices or self.vertices[0] != (0, 0):
            raise ValueError("path must start at (0, 0)")
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if (x1 - x0, y1 - y0) not in ((1, 0), (0, 1)):
                raise ValueError("steps must be unit east or north moves")

    @classmethod
    def from_word(cls, word: str) -> "LatticePath":
        """Build from a string of E/N step letters."""
        x = y = 0
        verts = [(0, 0)]
        for ch in word:
            if ch == "E":
                x += 1
            elif ch == "N":
                y += 1
            else:
                raise ValueError(f"step letter {ch!r} is not E or N")
            verts.append((x, y))
        return cls(tuple(verts))

    @property
    def end(self) -> tuple[int, int]:
        return self.vertices[-1]

    def step_word(self) -> str:
        out = []
        for (x0, _), (x1, _) in zip(self.vertices, self.vertices[1:]):
            out.append("E" if x1 > x0 else "N")
        return "".join(out)

    def displacement_word(self, q: int) -> tuple[int, ...]:
        """East -> 1, north -> q."""
        return tuple(1 if ch == "E" else q for ch in self.step_word())

    def within_band(self) -> bool:
        """Whether -r < s*x - r*y <= s holds at every vertex.

        True for every path built by :func:`build_path` with r >= 1;
        meaningless (and False at the origin) when r = 0.
        """
        r, s = self.end
        return all(-r < s * x - r * y <= s for x, y in self.vertices)


def build_path(r: int, s: int) -> LatticePath:
    """The east/north path from (0, 0) to (r, s) hugging s*x - r*y = 0.

    From (x, y) step east when s*x <= r*y and north otherwise ("go east
    when weakly above the line").  For r >= 1 this rule provably stays
    inside the box and ends at (r, s).  For r = 0 the rule would step
    east off the vertical target line, so the forced all-north path is
    returned instead.
    """
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError("need r, s >= 0 with r + s >= 1")
    if r == 0:
        return LatticePath(tuple((0, i) for i in range(s + 1)))
    x = y = 0
    verts = [(0, 0)]
    for _ in range(r + s):
        if s * x <= r * y:
            x += 1
        else:
            y += 1
        verts.append((x, y))
    if verts[-1] != (r, s):
        raise AssertionError(f"path construction missed ({r}, {s})")
    return LatticePath(tuple(verts))


def path_bound_check(path: LatticePath, r: int, s: int) -> bool:
    """Whether |a*s - b*r| <= r+s-1 for every vertex pair of the path.

    Here (a, b) is the coordinate difference of the pair.  Holds for
    every constructed path; a hand-made path can fail.
    """
    verts = path.vertices
    bound = r + s - 1
    n = len(verts)
    for i in range(n):
        xi, yi = verts[i]
        for j in range(i + 1, n):
            a = verts[j][0] - xi
            b = verts[j][1] - yi
            if abs(a * s - b * r) > bound:
                return False
    return True


# ---------------------------------------------------------------------------
# witness construction
# ---------------------------------------------------------------------------

def construct_witness(key: PermClassKey) -> Permutation:
    """An explicit member of the class, built from the lattice path.

    With k = gcd(r, s, ell), the word of the path to (r/k, s/k) is
    walked from the k start points 1 + (j-1)(q-1), reduced into
    {1, ..., p}.  The resulting cycles are provably disjoint, and the
    product is a class member; both facts are re-checked here.
    """
    p, q, r, s = key.p, key.q, key.r, key.s
    if not key.divisible:
        raise EmptyClass(f"{p} does not divide {r}+{s}*{q}")
    if r == 0 and s == 0:
        return Permutation.identity(p)
    if r + s > p:
        raise InvalidKey(f"r+s = {r + s} exceeds p = {p}")
    k = key.k
    word = build_path(r // k, s // k).displacement_word(q)
    taken: dict[int, int] = {}
    for j in range(1, k + 1):
        start = reduce_1p(1 + (j - 1) * (q - 1), p)
        points = _walk_word(start, word, p)
        for a, b in zip(points, points[1:] + points[:1]):
            if a in taken:
                raise AssertionError(
                    f"witness cycles for {key} are not disjoint at point {a}"
                )
            taken[a] = b
    sigma = Permutation(tuple(taken.get(i, i) for i in range(1, p + 1)))
    if displacement_profile(sigma, p, q) != (r, s, p - r - s):
        raise AssertionError(f"witness for {key} has the wrong profile")
    return sigma


# ---------------------------------------------------------------------------
# cyclic order
# ---------------------------------------------------------------------------

def cyclic_order(points) -> bool:
    """Whether distinct points appear in clockwise order around Z_p.

    True iff some rotation of the sequence is strictly increasing,
    equivalently iff the cyclic sequence has exactly one descent.
    Repeated values are never in cyclic order.
    """
    zs = list(points)
    m = len(zs)
    if m <= 1:
        return True
    if len(set(zs)) != m:
        return False
    descents = sum(1 for i in range(m) if zs[i] > zs[(i + 1) % m])
    return descents == 1
