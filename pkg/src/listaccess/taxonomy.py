"""Request-sequence taxonomy: labels, classifier, generators, enumeration.

Tree of labels (``n`` = sequence length, ``l`` = list size)::

    GROUP1 (n == l)
        A       every list element requested -> TYPE_I | TYPE_II | TYPE_III
        B       some element missing         -> TYPE_IV[p] | TYPE_V
    GROUP2 (n > l)
        C_a_i   l | n, all present, equal frequencies -> TYPE_VI[m] | TYPE_VII[m] | (untyped)
        C_a_ii  l | n, all present, unequal frequencies
        C_b     l | n, some element missing
        D       l does not divide n

Canonical strings look like ``GROUP1/A/TYPE_III``, ``GROUP1/B/TYPE_IV[p=2]``
and ``GROUP2/C_a_i/TYPE_VI[m=2]``.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .core_list import ListState, RequestSequence, as_list, as_sequence
from .errors import (
    ClassTooLarge,
    ElementNotInList,
    InconsistentSpec,
    SequenceShorterThanList,
)

MAX_ATTEMPTS = 10_000
MAX_ENUMERATION = 10**6


class Group(enum.Enum):
    GROUP1 = "GROUP1"
    GROUP2 = "GROUP2"


class Klass(enum.Enum):
    A = "A"
    B = "B"
    C_a_i = "C_a_i"
    C_a_ii = "C_a_ii"
    C_b = "C_b"
    D = "D"


class TypeTag(enum.Enum):
    TYPE_I = "TYPE_I"
    TYPE_II = "TYPE_II"
    TYPE_III = "TYPE_III"
    TYPE_IV = "TYPE_IV"
    TYPE_V = "TYPE_V"
    TYPE_VI = "TYPE_VI"
    TYPE_VII = "TYPE_VII"


_GROUP_OF = {
    Klass.A: Group.GROUP1,
    Klass.B: Group.GROUP1,
    Klass.C_a_i: Group.GROUP2,
    Klass.C_a_ii: Group.GROUP2,
    Klass.C_b: Group.GROUP2,
    Klass.D: Group.GROUP2,
}

_CLASS_OF = {
    TypeTag.TYPE_I: Klass.A,
    TypeTag.TYPE_II: Klass.A,
    TypeTag.TYPE_III: Klass.A,
    TypeTag.TYPE_IV: Klass.B,
    TypeTag.TYPE_V: Klass.B,
    TypeTag.TYPE_VI: Klass.C_a_i,
    TypeTag.TYPE_VII: Klass.C_a_i,
}


@dataclass(frozen=True)
class SequenceClass:
    """A node of the taxonomy.

    Classification always yields a leaf.  As a *spec* for generation or
    enumeration, a Class A or B node without a type tag stands for the
    whole class, TYPE_IV without ``p`` for any position, and TYPE_VI/VII
    without ``m`` take ``m`` from the requested length.
    """

    group: Group
    klass: Klass
    type_tag: Optional[TypeTag] = None
    repeated_position: Optional[int] = None
    multiplier: Optional[int] = None

    def __post_init__(self):
        if _GROUP_OF[self.klass] is not self.group:
            raise InconsistentSpec(f"class {self.klass.value} is not under {self.group.value}")
        if self.type_tag is not None and _CLASS_OF[self.type_tag] is not self.klass:
            raise InconsistentSpec(f"{self.type_tag.value} is not under class {self.klass.value}")
        if self.repeated_position is not None:
            if self.type_tag is not TypeTag.TYPE_IV:
                raise InconsistentSpec("a repeated position only applies to TYPE_IV")
            if self.repeated_position < 1:
                raise InconsistentSpec("repeated position must be >= 1")
        if self.multiplier is not None:
            if self.type_tag not in (TypeTag.TYPE_VI, TypeTag.TYPE_VII):
                raise InconsistentSpec("a multiplier only applies to TYPE_VI/TYPE_VII")
            if self.multiplier < 2:
                raise InconsistentSpec("multiplier must be >= 2")

    @classmethod
    def of(cls, klass: Klass, type_tag=None, p=None, m=None) -> "SequenceClass":
        return cls(_GROUP_OF[klass], klass, type_tag, p, m)

    @classmethod
    def parse(cls, text: str) -> "SequenceClass":
        return parse_class(text)

    def __str__(self):
        parts = [self.group.value, self.klass.value]
        if self.type_tag is not None:
            tag = self.type_tag.value
            if self.repeated_position is not None:
                tag += f"[p={self.repeated_position}]"
            if self.multiplier is not None:
                tag += f"[m={self.multiplier}]"
            parts.append(tag)
        return "/".join(parts)

    @property
    def is_leaf(self) -> bool:
        if self.klass in (Klass.A, Klass.B):
            return self.type_tag is not None and (
                self.type_tag is not TypeTag.TYPE_IV or self.repeated_position is not None
            )
        if self.type_tag in (TypeTag.TYPE_VI, TypeTag.TYPE_VII):
            return self.multiplier is not None
        return True

    def covers(self, label: "SequenceClass") -> bool:
        """True when the leaf ``label`` falls inside this node."""
        if (self.group, self.klass) != (label.group, label.klass):
            return False
        if self.type_tag is None:
            # an untyped C_a_i node is itself a leaf
            return self.klass in (Klass.A, Klass.B) or label.type_tag is None
        if self.type_tag is not label.type_tag:
            return False
        if self.repeated_position is not None and self.repeated_position != label.repeated_position:
            return False
        if self.multiplier is not None and self.multiplier != label.multiplier:
            return False
        return True


_CLASS_RE = re.compile(
    r"^(?P<group>GROUP[12])/(?P<klass>A|B|C_a_i|C_a_ii|C_b|D)"
    r"(?:/(?P<tag>TYPE_(?:VII|VI|V|IV|III|II|I))(?:\[(?P<key>[pm])=(?P<val>\d+)\])?)?$"
)


def parse_class(text: str) -> SequenceClass:
    """Parse the canonical string form; the inverse of ``str()``."""
    match = _CLASS_RE.match(text.strip())
    if match is None:
        raise InconsistentSpec(f"malformed class string {text!r}")
    tag = TypeTag(match["tag"]) if match["tag"] else None
    p = m = None
    if match["key"] == "p":
        p = int(match["val"])
    elif match["key"] == "m":
        m = int(match["val"])
    return SequenceClass(Group(match["group"]), Klass(match["klass"]), tag, p, m)


def _repeats_of(seq: tuple, block: tuple) -> bool:
    b = len(block)
    return len(seq) % b == 0 and all(seq[i] == block[i % b] for i in range(len(seq)))


def classify(lst, seq) -> SequenceClass:
    """Return the most specific taxonomy leaf for ``seq`` served on ``lst``."""
    lst = as_list(lst)
    seq = as_sequence(seq)
    members = set(lst.elements)
    for idx, r in enumerate(seq):
        if r not in members:
            raise ElementNotInList(r, idx)
    l, n = len(lst), len(seq)
    if n < l:
        raise SequenceShorterThanList(f"n={n} is shorter than the list size l={l}")

    order = lst.elements
    reverse = order[::-1]
    requests = seq.requests
    freq = Counter(requests)
    covers_all = len(freq) == l

    if n == l:
        if covers_all:
            if requests == order:
                return SequenceClass.of(Klass.A, TypeTag.TYPE_I)
            if requests == reverse:
                return SequenceClass.of(Klass.A, TypeTag.TYPE_II)
            return SequenceClass.of(Klass.A, TypeTag.TYPE_III)
        if len(freq) == 1:
            return SequenceClass.of(Klass.B, TypeTag.TYPE_IV, p=order.index(requests[0]) + 1)
        return SequenceClass.of(Klass.B, TypeTag.TYPE_V)

    if n % l:
        return SequenceClass.of(Klass.D)
    if not covers_all:
        return SequenceClass.of(Klass.C_b)
    if len(set(freq.values())) > 1:
        return SequenceClass.of(Klass.C_a_ii)
    m = n // l
    if _repeats_of(requests, order):
        return SequenceClass.of(Klass.C_a_i, TypeTag.TYPE_VI, m=m)
    if _repeats_of(requests, reverse):
        return SequenceClass.of(Klass.C_a_i, TypeTag.TYPE_VII, m=m)
    return SequenceClass.of(Klass.C_a_i)


# ---------------------------------------------------------------------------
# length resolution and class sizes


def resolve_length(l: int, spec: SequenceClass, n: Optional[int] = None) -> int:
    """Check ``n`` against ``spec`` for a list of size ``l``; fill it in when implied.

    TYPE_IV accepts any ``n >= 1``: the single-element pattern is meaningful
    for every length, although it only classifies back to TYPE_IV when
    ``n == l``.
    """
    if spec.type_tag is TypeTag.TYPE_IV:
        if spec.repeated_position is not None and spec.repeated_position > l:
            raise InconsistentSpec(f"position p={spec.repeated_position} exceeds l={l}")
        n = l if n is None else n
        if n < 1:
            raise InconsistentSpec("TYPE_IV needs n >= 1")
        return n
    if spec.group is Group.GROUP1:
        if n is not None and n != l:
            raise InconsistentSpec(f"{spec} requires n == l ({l}), got n={n}")
        return l
    if spec.type_tag in (TypeTag.TYPE_VI, TypeTag.TYPE_VII) and spec.multiplier is not None:
        want = spec.multiplier * l
        if n is not None and n != want:
            raise InconsistentSpec(f"{spec} requires n == m*l == {want}, got n={n}")
        return want
    if n is None:
        raise InconsistentSpec(f"{spec} needs an explicit length n")
    if n <= l:
        raise InconsistentSpec(f"{spec} requires n > l ({l}), got n={n}")
    if spec.klass is Klass.D:
        if n % l == 0:
            raise InconsistentSpec(f"class D requires n not a multiple of l={l}, got n={n}")
    elif n % l:
        raise InconsistentSpec(f"{spec} requires n to be a multiple of l={l}, got n={n}")
    return n


def _surjections(n: int, l: int) -> int:
    return sum((-1) ** j * math.comb(l, j) * (l - j) ** n for j in range(l + 1))


def class_size(l: int, spec: SequenceClass, n: Optional[int] = None) -> int:
    """Number of length-``n`` sequences over an ``l``-element list inside ``spec``."""
    n = resolve_length(l, spec, n)
    tag, klass = spec.type_tag, spec.klass
    if tag is TypeTag.TYPE_IV:
        patterns = 1 if spec.repeated_position is not None else l
        if n != l:
            return patterns
        # at n == l a one-element list makes the pattern a TYPE_I sequence
        return 0 if l == 1 else patterns
    if klass is Klass.A:
        perms = math.factorial(l)
        if tag is None:
            return perms
        if tag is TypeTag.TYPE_I:
            return 1
        if tag is TypeTag.TYPE_II:
            return 1 if l > 1 else 0
        return max(perms - 2, 0) if l > 1 else 0
    if klass is Klass.B:
        # l == 1: the single sequence is a permutation, hence class A
        singles = l if l > 1 else 0
        rest = l**l - math.factorial(l) - singles if l > 1 else 0
        if tag is None:
            return singles + rest
        return rest
    if klass is Klass.D:
        return l**n
    surj = _surjections(n, l)
    if klass is Klass.C_b:
        return l**n - surj
    m = n // l
    equal = math.factorial(n) // math.factorial(m) ** l
    if klass is Klass.C_a_ii:
        return surj - equal
    if tag is None:
        return equal - (2 if l > 1 else 1)
    if tag is TypeTag.TYPE_VII and l == 1:
        return 0
    return 1


# ---------------------------------------------------------------------------
# generation


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _reject(rng, draw, accept, what):
    for _ in range(MAX_ATTEMPTS):
        candidate = draw(rng)
        if accept(candidate):
            return candidate
    raise InconsistentSpec(f"no {what} sequence found in {MAX_ATTEMPTS} attempts")


def generate(lst, class_spec: SequenceClass, seed=0, n: Optional[int] = None) -> RequestSequence:
    """Draw a sequence from ``class_spec`` deterministically for ``seed``.

    ``seed`` is an int (fed to :class:`random.Random`) or a ``Random``
    instance.  Whenever the target is a leaf and ``n`` is in range for
    that leaf, ``classify`` maps the result back to ``class_spec``.
    """
    lst = as_list(lst)
    spec = class_spec
    l = len(lst)
    n = resolve_length(l, spec, n)
    if class_size(l, spec, n) == 0 and spec.type_tag is not TypeTag.TYPE_IV:
        raise InconsistentSpec(f"{spec} is empty for l={l}, n={n}")
    rng = _rng(seed)
    order = lst.elements
    tag, klass = spec.type_tag, spec.klass

    if tag is TypeTag.TYPE_IV:
        p = spec.repeated_position
        if p is None:
            # l == 1 has no TYPE_IV leaf at n == l but the pattern still exists
            p = rng.randint(1, l)
        return RequestSequence((order[p - 1],) * n)

    if klass is Klass.A:
        if tag is TypeTag.TYPE_I:
            return RequestSequence(order)
        if tag is TypeTag.TYPE_II:
            return RequestSequence(order[::-1])

        def shuffled(r):
            items = list(order)
            r.shuffle(items)
            return tuple(items)

        if tag is None:
            return RequestSequence(shuffled(rng))
        return RequestSequence(
            _reject(rng, shuffled, lambda s: s != order and s != order[::-1], "TYPE_III")
        )

    if klass is Klass.B:
        def uniform(r):
            return tuple(r.choice(order) for _ in range(n))

        if tag is None:
            return RequestSequence(_reject(rng, uniform, lambda s: len(set(s)) < l, "class B"))
        return RequestSequence(_reject(rng, uniform, lambda s: 1 < len(set(s)) < l, "TYPE_V"))

    if klass is Klass.D:
        return RequestSequence(tuple(rng.choice(order) for _ in range(n)))

    m = n // l
    if klass is Klass.C_a_i:
        if tag is TypeTag.TYPE_VI:
            return RequestSequence(order * m)
        if tag is TypeTag.TYPE_VII:
            return RequestSequence(order[::-1] * m)

        def multiset(r):
            items = list(order) * m
            r.shuffle(items)
            return tuple(items)

        return RequestSequence(
            _reject(
                rng,
                multiset,
                lambda s: not _repeats_of(s, order) and not _repeats_of(s, order[::-1]),
                "C_a_i",
            )
        )

    if klass is Klass.C_a_ii:
        def covering(r):
            items = list(order) + [r.choice(order) for _ in range(n - l)]
            r.shuffle(items)
            return tuple(items)

        return RequestSequence(
            _reject(rng, covering, lambda s: len(set(Counter(s).values())) > 1, "C_a_ii")
        )

    # C_b: leave out one element chosen at random, draw the rest uniformly
    missing = rng.randrange(l)
    pool = order[:missing] + order[missing + 1:]
    return RequestSequence(tuple(rng.choice(pool) for _ in range(n)))


# ---------------------------------------------------------------------------
# enumeration


def _multiset_permutations(counts: dict, order: tuple, n: int) -> Iterator[tuple]:
    prefix = []

    def walk():
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for e in order:
            if counts[e]:
                counts[e] -= 1
                prefix.append(e)
                yield from walk()
                prefix.pop()
                counts[e] += 1

    return walk()


def enumerate_class(lst, class_spec: SequenceClass, n: Optional[int] = None) -> list[RequestSequence]:
    """Every sequence of length ``n`` inside ``class_spec``, in lexicographic list order.

    Like ``generate``, TYPE_IV accepts any ``n`` and then returns the
    single-element patterns themselves.
    """
    lst = as_list(lst)
    spec = class_spec
    l = len(lst)
    n = resolve_length(l, spec, n)
    count = class_size(l, spec, n)
    if count > MAX_ENUMERATION:
        raise ClassTooLarge(count, MAX_ENUMERATION)
    order = lst.elements

    if spec.type_tag is TypeTag.TYPE_IV:
        ps = [spec.repeated_position] if spec.repeated_position else range(1, l + 1)
        patterns = [RequestSequence((order[p - 1],) * n) for p in ps]
        if n != l:
            return patterns
        candidates = [s.requests for s in patterns]
    elif spec.klass is Klass.A:
        candidates = itertools.permutations(order)
    elif spec.klass is Klass.C_a_i:
        candidates = _multiset_permutations({e: n // l for e in order}, order, n)
    else:
        space = l**n
        if space > MAX_ENUMERATION:
            raise ClassTooLarge(space, MAX_ENUMERATION)
        candidates = itertools.product(order, repeat=n)

    found = []
    for cand in candidates:
        seq = RequestSequence(cand)
        if spec.covers(classify(lst, seq)):
            found.append(seq)
    return found


ClassLike = Union[SequenceClass, str]


def as_class(spec: ClassLike) -> SequenceClass:
    return spec if isinstance(spec, SequenceClass) else parse_class(spec)


def leaves(l: int, n: int) -> list[SequenceClass]:
    """All non-empty leaf labels at (l, n), in taxonomy order."""
    out = []
    if n < l:
        return out
    if n == l:
        candidates = [
            SequenceClass.of(Klass.A, TypeTag.TYPE_I),
            SequenceClass.of(Klass.A, TypeTag.TYPE_II),
            SequenceClass.of(Klass.A, TypeTag.TYPE_III),
            *(SequenceClass.of(Klass.B, TypeTag.TYPE_IV, p=p) for p in range(1, l + 1)),
            SequenceClass.of(Klass.B, TypeTag.TYPE_V),
        ]
    elif n % l:
        candidates = [SequenceClass.of(Klass.D)]
    else:
        m = n // l
        candidates = [
            SequenceClass.of(Klass.C_a_i, TypeTag.TYPE_VI, m=m),
            SequenceClass.of(Klass.C_a_i, TypeTag.TYPE_VII, m=m),
            SequenceClass.of(Klass.C_a_i),
            SequenceClass.of(Klass.C_a_ii),
            SequenceClass.of(Klass.C_b),
        ]
    for c in candidates:
        if class_size(l, c, n) > 0:
            out.append(c)
    return out
