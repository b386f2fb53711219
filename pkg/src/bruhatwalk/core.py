"""
Coxeter systems and exact group arithmetic.

Elements are canonical: the ShortLex-minimal reduced word over 0-based
generator indices.  Two engines produce them:

* ``WordEngine`` works for any Coxeter matrix (including ``INF`` entries) by
  enumerating braid-move closures of reduced words.
* ``PermutationEngine`` is a fast path for type A, where the group is the
  symmetric group and an element is a permutation in one-line notation.

>>> A2 = named_system("A2")
>>> A2.format_word(A2.reduce([1, 0, 1, 0]))
's1 s2'
>>> A2.reduce([0, 1, 0]).length
3
"""

from __future__ import annotations

import math
import re
import threading
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "INF", "WORD", "PERMUTATION",
    "CoxeterError", "ResourceLimitError",
    "Element", "CoxeterSystem", "build_system", "named_system", "family_matrix",
    "braid_closure", "tits_reduce", "is_type_a",
]

INF = math.inf

WORD = "word"
PERMUTATION = "permutation"

DEFAULT_MAX_WORD_LENGTH = 24
DEFAULT_MAX_CLOSURE_SIZE = 10**6


class CoxeterError(ValueError):
    """Invalid Coxeter matrix, generator name or engine request."""


class ResourceLimitError(RuntimeError):
    """A configured size limit was hit; the answer is unknown, not wrong."""


@dataclass(frozen=True)
class Element:
    """A group element in canonical form.

    ``word`` is always the ShortLex-minimal reduced word.  ``perm`` is the
    one-line permutation of ``1..k+1`` when the element came from the
    permutation engine, else ``None``.
    """
    word: tuple[int, ...]
    perm: tuple[int, ...] | None = None

    @property
    def length(self) -> int:
        return len(self.word)

    def sort_key(self):
        return (len(self.word), self.word)


# --- matrices -------------------------------------------------------------

def _check_matrix(matrix) -> tuple[tuple[float | int, ...], ...]:
    rows = [list(r) for r in matrix]
    k = len(rows)
    if k == 0:
        raise CoxeterError("a Coxeter system needs at least one generator")
    for i, row in enumerate(rows):
        if len(row) != k:
            raise CoxeterError(f"row {i} has {len(row)} entries, expected {k}")
        if row[i] != 1:
            raise CoxeterError(f"diagonal entry m[{i}][{i}] must be 1, got {row[i]}")
        for j, m in enumerate(row):
            if i == j:
                continue
            if m != INF and (m != int(m) or m < 2):
                raise CoxeterError(f"m[{i}][{j}] = {m}: entries must be integers >= 2 or INF")
            if rows[j][i] != m:
                raise CoxeterError(f"matrix is not symmetric at ({i}, {j})")
    return tuple(tuple(INF if m == INF else int(m) for m in row) for row in rows)


def _from_edges(k: int, edges: dict[tuple[int, int], float | int]):
    m = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
    for (i, j), v in edges.items():
        m[i][j] = m[j][i] = v
    return m


def _path(k: int, labels: Sequence[float | int]):
    return _from_edges(k, {(i, i + 1): labels[i] for i in range(k - 1)})


def family_matrix(name: str) -> list[list[float | int]]:
    """Coxeter matrix of a named family (Bourbaki labelling).

    Accepted names: ``A<n>``, ``B<n>``, ``D<n>``, ``I2(<m>)``, ``H3``, ``H4``,
    ``F4``, ``E6``, ``E7``, ``E8``, ``~A<n>`` (affine), ``FREE<d>`` or
    ``FREE_INVOLUTIONS(<d>)``, and ``GRID``.
    """
    key = name.strip().upper().replace(" ", "")
    if key == "GRID":
        # D_inf x D_inf: s1,s2 and s3,s4 generate the two axes
        return _from_edges(4, {(0, 1): INF, (2, 3): INF})
    if mt := re.fullmatch(r"FREE(?:_INVOLUTIONS)?\(?(\d+)\)?", key):
        d = int(mt.group(1))
        if d < 1:
            raise CoxeterError("FREE needs at least one generator")
        return [[1 if i == j else INF for j in range(d)] for i in range(d)]
    if mt := re.fullmatch(r"I2\(?(\d+|INF)\)?", key):
        m = INF if mt.group(1) == "INF" else int(mt.group(1))
        return [[1, m], [m, 1]]
    if mt := re.fullmatch(r"(?:~|AFFINE_?)A(\d+)", key):
        n = int(mt.group(1))
        if n < 1:
            raise CoxeterError("affine A needs rank >= 1")
        if n == 1:
            return [[1, INF], [INF, 1]]
        return _from_edges(n + 1, {(i, (i + 1) % (n + 1)): 3 for i in range(n + 1)})
    mt = re.fullmatch(r"([A-H])(\d+)", key)
    if not mt:
        raise CoxeterError(f"unknown Coxeter family {name!r}")
    fam, n = mt.group(1), int(mt.group(2))
    if fam == "A" and n >= 1:
        return _path(n, [3] * (n - 1))
    if fam == "B" and n >= 2:
        return _path(n, [3] * (n - 2) + [4])
    if fam == "D" and n >= 4:
        edges = {(i, i + 1): 3 for i in range(n - 2)}
        edges[(n - 3, n - 1)] = 3
        return _from_edges(n, edges)
    if fam == "H" and n in (3, 4):
        return _path(n, [5] + [3] * (n - 2))
    if fam == "F" and n == 4:
        return _path(4, [3, 4, 3])
    if fam == "E" and n in (6, 7, 8):
        edges = {(0, 2): 3, (1, 3): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
        return _from_edges(n, edges)
    raise CoxeterError(f"unknown Coxeter family {name!r}")


def is_type_a(matrix) -> bool:
    k = len(matrix)
    return all(
        matrix[i][j] == (3 if abs(i - j) == 1 else 2)
        for i in range(k) for j in range(k) if i != j
    )


# --- braid moves ----------------------------------------------------------

def _braid_moves(word: tuple[int, ...], matrix) -> Iterable[tuple[int, ...]]:
    n = len(word)
    for pos in range(n - 1):
        a, b = word[pos], word[pos + 1]
        if a == b:
            continue
        m = matrix[a][b]
        if m == INF or pos + m > n:
            continue
        if all(word[pos + j] == (a if j % 2 == 0 else b) for j in range(2, m)):
            swapped = tuple(b if j % 2 == 0 else a for j in range(m))
            yield word[:pos] + swapped + word[pos + m:]


def braid_closure(word: Sequence[int], matrix,
                  max_size: int = DEFAULT_MAX_CLOSURE_SIZE) -> frozenset[tuple[int, ...]]:
    """All words reachable from ``word`` by braid moves."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in _braid_moves(queue.popleft(), matrix):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_size:
                    raise ResourceLimitError(
                        f"braid closure exceeded max_closure_size={max_size}")
                queue.append(nxt)
    return frozenset(seen)


def tits_reduce(word: Sequence[int], matrix,
                max_size: int = DEFAULT_MAX_CLOSURE_SIZE) -> tuple[int, ...]:
    """Whole-word solution of the word problem.

    Repeatedly take the braid closure, cancel the first adjacent repeated pair
    found (scanning the closure in sorted order), and restart; once no
    cancellation applies return the ShortLex-minimal word of the closure.
    Kept as a slow independent route next to the incremental engine.
    """
    current = tuple(word)
    while True:
        closure = braid_closure(current, matrix, max_size)
        for w in sorted(closure):
            j = next((j for j in range(len(w) - 1) if w[j] == w[j + 1]), None)
            if j is not None:
                current = w[:j] + w[j + 2:]
                break
        else:
            return min(closure)


# --- engines --------------------------------------------------------------

class WordEngine:
    """Incremental braid-closure engine.

    For a canonical ``w`` the reduced words of ``w*s`` are either the reduced
    words of ``w`` ending in ``s`` with that letter dropped (length goes
    down), or else ``word(w) + s`` is reduced and its braid closure is the
    full set (length goes up).  Reduced-word sets and products are memoized.
    """

    def __init__(self, matrix, max_word_length: int, max_closure_size: int):
        self.matrix = matrix
        self.max_word_length = max_word_length
        self.max_closure_size = max_closure_size
        self._reduced: dict[tuple[int, ...], frozenset[tuple[int, ...]]] = {(): frozenset({()})}
        self._products: dict[tuple[tuple[int, ...], int], Element] = {}
        self._lock = threading.Lock()

    def identity(self) -> Element:
        return Element(())

    def reduced_words(self, w: Element) -> frozenset[tuple[int, ...]]:
        rw = self._reduced.get(w.word)
        if rw is None:
            rw = braid_closure(w.word, self.matrix, self.max_closure_size)
            with self._lock:
                self._reduced[w.word] = rw
        return rw

    def right_multiply(self, w: Element, g: int) -> Element:
        key = (w.word, g)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        shorter = [x[:-1] for x in self.reduced_words(w) if x[-1] == g] if w.word else []
        if shorter:
            canon = min(shorter)
            words = frozenset(shorter)
        else:
            longer = w.word + (g,)
            if len(longer) > self.max_word_length:
                raise ResourceLimitError(
                    f"reduced word longer than max_word_length={self.max_word_length}")
            words = braid_closure(longer, self.matrix, self.max_closure_size)
            canon = min(words)
        out = Element(canon)
        with self._lock:
            self._reduced.setdefault(canon, words)
            self._products[key] = out
        return out

    def inverse(self, w: Element) -> Element:
        # reversal of a reduced word is reduced; only the tiebreak changes
        words = frozenset(x[::-1] for x in self.reduced_words(w))
        canon = min(words)
        with self._lock:
            self._reduced.setdefault(canon, words)
        return Element(canon)


class PermutationEngine:
    """Type A_k as permutations of ``1..k+1``; s_i swaps positions i, i+1."""

    def __init__(self, rank: int):
        self.rank = rank
        self.n = rank + 1

    def identity(self) -> Element:
        return Element((), tuple(range(1, self.n + 1)))

    def element(self, perm: Sequence[int]) -> Element:
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise CoxeterError(f"{perm} is not a permutation of 1..{self.n}")
        return Element(self._lexmin_word(perm), perm)

    @staticmethod
    def _lexmin_word(perm: tuple[int, ...]) -> tuple[int, ...]:
        # the lex-least reduced word starts with the smallest left descent;
        # s_i is a left descent iff value i+2 sits left of value i+1
        pos = [0] * (len(perm) + 1)
        for p, v in enumerate(perm):
            pos[v] = p
        word = []
        while True:
            i = next((i for i in range(len(perm) - 1) if pos[i + 2] < pos[i + 1]), None)
            if i is None:
                return tuple(word)
            word.append(i)
            pos[i + 1], pos[i + 2] = pos[i + 2], pos[i + 1]

    def right_multiply(self, w: Element, g: int) -> Element:
        p = list(w.perm)
        p[g], p[g + 1] = p[g + 1], p[g]
        return self.element(p)

    def inverse(self, w: Element) -> Element:
        inv = [0] * self.n
        for i, v in enumerate(w.perm):
            inv[v - 1] = i + 1
        return self.element(inv)

    def multiply(self, u: Element, v: Element) -> Element:
        return self.element(tuple(u.perm[j - 1] for j in v.perm))


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


# --- systems --------------------------------------------------------------

class CoxeterSystem:
    """A Coxeter system (W, S) with an element engine.

    Generators are addressed by 0-based index internally and by name
    (default ``s1..sk``) at the text boundary.
    """

    def __init__(self, matrix, names: Sequence[str] | None = None, engine: str = WORD,
                 max_word_length: int = DEFAULT_MAX_WORD_LENGTH,
                 max_closure_size: int = DEFAULT_MAX_CLOSURE_SIZE,
                 label: str | None = None):
        self.matrix = _check_matrix(matrix)
        k = len(self.matrix)
        self.names = tuple(names) if names is not None else tuple(f"s{i + 1}" for i in range(k))
        if len(self.names) != k or len(set(self.names)) != k:
            raise CoxeterError(f"need {k} distinct generator names, got {list(self.names)}")
        if any(not n or any(c.isspace() for c in n) or n in ("e", "id") for n in self.names):
            raise CoxeterError("generator names must be non-empty, whitespace-free, not 'e'/'id'")
        self.label = label
        self.max_word_length = max_word_length
        self.max_closure_size = max_closure_size
        if engine == PERMUTATION:
            if not is_type_a(self.matrix):
                raise CoxeterError("the permutation engine only supports type A matrices")
            self._engine = PermutationEngine(k)
        elif engine == WORD:
            self._engine = WordEngine(self.matrix, max_word_length, max_closure_size)
        else:
            raise CoxeterError(f"unknown engine {engine!r}")
        self.engine = engine

    def __repr__(self):
        tag = self.label or f"rank {self.rank}"
        return f"CoxeterSystem({tag}, engine={self.engine})"

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def generators(self) -> range:
        return range(self.rank)

    def m(self, i: int, j: int):
        return self.matrix[i][j]

    def _check_gen(self, g: int) -> None:
        if not (isinstance(g, int) and 0 <= g < self.rank):
            raise CoxeterError(f"generator index {g!r} out of range for rank {self.rank}")

    # arithmetic

    def identity(self) -> Element:
        return self._engine.identity()

    def right_multiply(self, w: Element, g: int) -> Element:
        self._check_gen(g)
        return self._engine.right_multiply(w, g)

    def reduce(self, word: Iterable[int]) -> Element:
        """Canonical element equal to the product of ``word``'s generators."""
        w = self.identity()
        for g in word:
            w = self.right_multiply(w, g)
        return w

    def multiply(self, u: Element, v: Element) -> Element:
        if self.engine == PERMUTATION:
            return self._engine.multiply(u, v)
        w = u
        for g in v.word:
            w = self._engine.right_multiply(w, g)
        return w

    def inverse(self, w: Element) -> Element:
        return self._engine.inverse(w)

    def length(self, w: Element) -> int:
        return w.length

    def distance(self, u: Element, v: Element) -> int:
        """Graph distance in the Cayley graph: l(u^-1 v)."""
        return self.multiply(self.inverse(u), v).length

    def conjugate(self, w: Element, g: int) -> Element:
        """The reflection w s w^-1."""
        return self.multiply(self.right_multiply(w, g), self.inverse(w))

    def element_from_perm(self, perm: Sequence[int]) -> Element:
        if self.engine == PERMUTATION:
            return self._engine.element(perm)
        # place the permutation's lex-min word into this engine
        return self.reduce(PermutationEngine._lexmin_word(tuple(perm)))

    def reduced_words(self, w: Element) -> frozenset[tuple[int, ...]]:
        if self.engine == WORD:
            return self._engine.reduced_words(w)
        return braid_closure(w.word, self.matrix, self.max_closure_size)

    # text boundary

    def gen_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise CoxeterError(f"unknown generator {name!r}; have {list(self.names)}") from None

    def parse_word(self, text: str | Sequence[str]) -> list[int]:
        tokens = text.split() if isinstance(text, str) else list(text)
        return [self.gen_index(t) for t in tokens if t not in ("e", "id", "1")]

    def format_word(self, w: Element | Sequence[int]) -> str:
        word = w.word if isinstance(w, Element) else w
        return " ".join(self.names[g] for g in word)

    def matrix_json(self) -> list[list[int]]:
        """Matrix with INF written as 0."""
        return [[0 if m == INF else int(m) for m in row] for row in self.matrix]


def build_system(matrix, names: Sequence[str] | None = None, engine: str = WORD,
                 **limits) -> CoxeterSystem:
    return CoxeterSystem(matrix, names, engine, **limits)


def named_system(name: str, names: Sequence[str] | None = None, engine: str = WORD,
                 **limits) -> CoxeterSystem:
    return CoxeterSystem(family_matrix(name), names, engine, label=name, **limits)
