"""Finite approximation spaces over explicit atom universes.

Subsets are bitmasks over an ordered atom list, so set algebra is exact
integer arithmetic.  An approximation space pairs a universe with a
partition into blocks; lower and upper approximations, rough-equality
classes and the order induced on them are computed by direct enumeration.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence

EMPTY_NAME = "0"
FULL_NAME = "S"

# Enumerating all subsets is exponential; refuse silly universes unless asked.
DEFAULT_MAX_ATOMS = 16


class UniverseMismatchError(ValueError):
    """Operands live over different universes."""


class UnknownAtomError(ValueError):
    """An atom name does not belong to the universe."""


class Universe:
    """Ordered list of distinct atom names.  Atom i owns bit i."""

    __slots__ = ("atoms", "_index")

    def __init__(self, atoms: Sequence[str], max_atoms: int = DEFAULT_MAX_ATOMS):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("universe must contain at least one atom")
        if len(set(atoms)) != len(atoms):
            raise ValueError(f"duplicate atom names in {atoms!r}")
        for name in atoms:
            if not name or name in (EMPTY_NAME, FULL_NAME):
                raise ValueError(f"atom name {name!r} is empty or reserved")
        if len(atoms) > max_atoms:
            raise ValueError(
                f"universe has {len(atoms)} atoms, cap is {max_atoms}; "
                "raise max_atoms explicitly if this is intended"
            )
        self.atoms = atoms
        self._index = {name: i for i, name in enumerate(atoms)}

    @property
    def size(self) -> int:
        return len(self.atoms)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownAtomError(f"unknown atom {name!r}") from None

    def subset(self, names: Iterable[str] = ()) -> Subset:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return Subset(self, mask)

    def singleton(self, name: str) -> Subset:
        return Subset(self, 1 << self.index(name))

    def from_mask(self, mask: int) -> Subset:
        return Subset(self, mask)

    @property
    def empty(self) -> Subset:
        return Subset(self, 0)

    @property
    def full(self) -> Subset:
        return Subset(self, (1 << self.size) - 1)

    def parse(self, text: str) -> Subset:
        """Parse the canonical serialization: "0", "S", or concatenated atoms.

        Atom names are matched greedily, longest first, so multi-character
        atoms round-trip as long as no name is a prefix ambiguity casualty.
        """
        if text == EMPTY_NAME:
            return self.empty
        if text == FULL_NAME:
            return self.full
        by_length = sorted(self.atoms, key=len, reverse=True)
        mask = 0
        pos = 0
        while pos < len(text):
            for name in by_length:
                if text.startswith(name, pos):
                    mask |= 1 << self._index[name]
                    pos += len(name)
                    break
            else:
                raise UnknownAtomError(
                    f"cannot read an atom at position {pos} of {text!r}"
                )
        return Subset(self, mask)

    def subsets(self) -> Iterator[Subset]:
        """All subsets in canonical (binary counting) order."""
        for mask in range(1 << self.size):
            yield Subset(self, mask)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"Universe({list(self.atoms)!r})"


class Subset:
    """Immutable subset of a universe, stored as a bitmask."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: Universe, mask: int):
        if not 0 <= mask < (1 << universe.size):
            raise ValueError(f"mask {mask:#x} out of range for {universe!r}")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Subset is immutable")

    def _check(self, other: Subset) -> None:
        if self.universe != other.universe:
            raise UniverseMismatchError(
                f"{self!r} and {other!r} belong to different universes"
            )

    def union(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.mask | other.mask)

    def intersection(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.mask & other.mask)

    def difference(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.mask & ~other.mask)

    def complement(self) -> Subset:
        return Subset(self.universe, self.mask ^ self.universe.full.mask)

    def is_subset_of(self, other: Subset) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def is_proper_subset_of(self, other: Subset) -> bool:
        return self.is_subset_of(other) and self.mask != other.mask

    def meets(self, other: Subset) -> bool:
        self._check(other)
        return self.mask & other.mask != 0

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def atom_names(self) -> tuple[str, ...]:
        return tuple(
            name for i, name in enumerate(self.universe.atoms) if self.mask >> i & 1
        )

    # Operator sugar mirroring set algebra.
    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = is_subset_of
    __lt__ = is_proper_subset_of

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.universe.index(name) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atom_names())

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subset)
            and self.universe == other.universe
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.universe.atoms, self.mask))

    def __str__(self) -> str:
        if self.mask == 0:
            return EMPTY_NAME
        if self.mask == self.universe.full.mask:
            return FULL_NAME
        return "".join(self.atom_names())

    def __repr__(self) -> str:
        return f"<Subset {self}>"


class ApproxTriple(tuple):
    """(x, lower, upper) with the usual sandwich invariant."""

    __slots__ = ()

    def __new__(cls, x: Subset, lower: Subset, upper: Subset):
        assert lower <= x <= upper
        return super().__new__(cls, (x, lower, upper))

    @property
    def x(self) -> Subset:
        return self[0]

    @property
    def lower(self) -> Subset:
        return self[1]

    @property
    def upper(self) -> Subset:
        return self[2]

    def __repr__(self) -> str:
        return f"({self[0]}, {self[1]}, {self[2]})"


class ApproximationSpace:
    """A universe partitioned into blocks by an equivalence relation."""

    __slots__ = ("universe", "blocks", "_block_of_atom")

    def __init__(self, universe: Universe, blocks: Sequence[Subset]):
        seen = 0
        for block in blocks:
            if block.universe != universe:
                raise UniverseMismatchError("block over a foreign universe")
            if block.is_empty:
                raise ValueError("blocks must be nonempty")
            if block.mask & seen:
                raise ValueError(f"blocks overlap at {block}")
            seen |= block.mask
        if seen != universe.full.mask:
            raise ValueError("blocks do not cover the universe")
        # Canonical block order: by smallest member.
        ordered = tuple(sorted(blocks, key=lambda b: b.mask & -b.mask))
        self.universe = universe
        self.blocks = ordered
        lookup = {}
        for block in ordered:
            for name in block:
                lookup[name] = block
        self._block_of_atom = lookup

    @classmethod
    def from_partition(
        cls, atoms: Sequence[str], blocks: Sequence[Iterable[str]]
    ) -> ApproximationSpace:
        universe = Universe(atoms)
        return cls(universe, [universe.subset(b) for b in blocks])

    @classmethod
    def from_pairs(
        cls, atoms: Sequence[str], pairs: Iterable[tuple[str, str]]
    ) -> ApproximationSpace:
        """Space of the least equivalence containing the given pairs."""
        universe = Universe(atoms)
        parent = {name: name for name in universe.atoms}

        def find(x: str) -> str:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            universe.index(a), universe.index(b)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[str, list[str]] = {}
        for name in universe.atoms:
            groups.setdefault(find(name), []).append(name)
        return cls(universe, [universe.subset(g) for g in groups.values()])

    @classmethod
    def discrete(cls, atoms: Sequence[str]) -> ApproximationSpace:
        return cls.from_partition(atoms, [[a] for a in atoms])

    def block_of(self, atom: str) -> Subset:
        try:
            return self._block_of_atom[atom]
        except KeyError:
            raise UnknownAtomError(f"unknown atom {atom!r}") from None

    def _check(self, x: Subset) -> None:
        if x.universe != self.universe:
            raise UniverseMismatchError(f"{x!r} is over a foreign universe")

    def lower(self, x: Subset) -> Subset:
        self._check(x)
        mask = 0
        for block in self.blocks:
            if block.mask & ~x.mask == 0:
                mask |= block.mask
        return Subset(self.universe, mask)

    def upper(self, x: Subset) -> Subset:
        self._check(x)
        mask = 0
        for block in self.blocks:
            if block.mask & x.mask:
                mask |= block.mask
        return Subset(self.universe, mask)

    def boundary(self, x: Subset) -> Subset:
        return self.upper(x).difference(self.lower(x))

    def is_definite(self, x: Subset) -> bool:
        return self.lower(x) == x and self.upper(x) == x

    def definiteness(self, x: Subset) -> dict[str, bool]:
        self._check(x)
        lower_def = self.lower(x) == x
        upper_def = self.upper(x) == x
        return {
            "lowerDefinite": lower_def,
            "upperDefinite": upper_def,
            "definite": lower_def and upper_def,
        }

    def triples(self) -> list[ApproxTriple]:
        """One triple per nonempty subset, in canonical order."""
        out = []
        for mask in range(1, 1 << self.universe.size):
            x = Subset(self.universe, mask)
            out.append(ApproxTriple(x, self.lower(x), self.upper(x)))
        return out

    def rough_eq(self, a: Subset, b: Subset) -> bool:
        return self.lower(a) == self.lower(b) and self.upper(a) == self.upper(b)

    def rough_class_of(self, x: Subset) -> RoughClass:
        return RoughClass(self, self.lower(x), self.upper(x))

    def rough_classes(self, include_empty: bool = False) -> list[RoughClass]:
        """Classes of nonempty subsets, ordered by smallest member.

        The class of the empty set is prepended on request; it is the zero
        of the quotient order and is never roughly equal to a nonempty set.
        """
        seen: dict[tuple[int, int], None] = {}
        for mask in range(1, 1 << self.universe.size):
            x = Subset(self.universe, mask)
            key = (self.lower(x).mask, self.upper(x).mask)
            seen.setdefault(key, None)
        classes = [
            RoughClass(
                self, Subset(self.universe, lo), Subset(self.universe, up)
            )
            for lo, up in seen
        ]
        classes.sort(key=lambda c: c.sample_member().mask)
        if include_empty:
            classes.insert(0, self.rough_class_of(self.universe.empty))
        return classes

    def quotient_order(self) -> RoughOrderPoset:
        return RoughOrderPoset(self.rough_classes(include_empty=True))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ApproximationSpace)
            and self.universe == other.universe
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.universe.atoms, tuple(b.mask for b in self.blocks)))

    def __repr__(self) -> str:
        blocks = ", ".join(str(b) for b in self.blocks)
        return f"<ApproximationSpace blocks=[{blocks}]>"


class RoughClass:
    """All subsets sharing one (lower, upper) approximation pair.

    Stored by its bounds; members are enumerated on demand.  The boundary
    of a realizable pair never contains a singleton block: such a block
    would be forced into the lower approximation of any member.
    """

    __slots__ = ("space", "lower", "upper", "_boundary_blocks")

    def __init__(self, space: ApproximationSpace, lower: Subset, upper: Subset):
        if not lower <= upper:
            raise ValueError(f"bounds out of order: {lower} vs {upper}")
        if space.lower(lower) != lower or space.upper(upper) != upper:
            raise ValueError(f"bounds ({lower}, {upper}) are not definite")
        boundary = upper - lower
        blocks = tuple(b for b in space.blocks if b.mask & boundary.mask)
        covered = 0
        for b in blocks:
            assert b <= boundary
            if b.size < 2:
                raise ValueError(
                    f"boundary of ({lower}, {upper}) holds singleton block {b}"
                )
            covered |= b.mask
        assert covered == boundary.mask
        self.space = space
        self.lower = lower
        self.upper = upper
        self._boundary_blocks = blocks

    def contains(self, x: Subset) -> bool:
        return (
            self.space.lower(x) == self.lower and self.space.upper(x) == self.upper
        )

    def member_count(self) -> int:
        n = 1
        for block in self._boundary_blocks:
            n *= (1 << block.size) - 2
        return n

    def members(self) -> Iterator[Subset]:
        """Every member: lower plus a nonempty proper slice of each boundary block."""
        universe = self.space.universe
        per_block = []
        for block in self._boundary_blocks:
            bits = [1 << universe.index(name) for name in block]
            slices = []
            for mask in range(1, 1 << len(bits)):
                if mask == (1 << len(bits)) - 1:
                    continue
                slices.append(sum(bit for i, bit in enumerate(bits) if mask >> i & 1))
            per_block.append(slices)
        for choice in product(*per_block):
            yield Subset(universe, self.lower.mask | sum(choice))

    def sample_member(self) -> Subset:
        """The member with the smallest canonical index."""
        mask = self.lower.mask
        for block in self._boundary_blocks:
            mask |= block.mask & -block.mask
        return Subset(self.space.universe, mask)

    @property
    def is_definite_class(self) -> bool:
        return self.lower == self.upper

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RoughClass)
            and self.space == other.space
            and self.lower == other.lower
            and self.upper == other.upper
        )

    def __hash__(self) -> int:
        return hash((self.lower.mask, self.upper.mask, self.space.universe.atoms))

    def __str__(self) -> str:
        return f"[{self.sample_member()}]"

    def __repr__(self) -> str:
        return f"<RoughClass bounds=({self.lower}, {self.upper})>"


class RoughOrderPoset:
    """Rough classes under componentwise inclusion of their bounds."""

    __slots__ = ("elements",)

    def __init__(self, elements: Sequence[RoughClass]):
        self.elements = tuple(elements)

    def leq(self, a: RoughClass, b: RoughClass) -> bool:
        return a.lower <= b.lower and a.upper <= b.upper

    def comparable(self, a: RoughClass, b: RoughClass) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def bottom(self) -> RoughClass:
        bottoms = [a for a in self.elements if all(self.leq(a, b) for b in self.elements)]
        assert len(bottoms) == 1
        return bottoms[0]

    def top(self) -> RoughClass:
        tops = [a for a in self.elements if all(self.leq(b, a) for b in self.elements)]
        assert len(tops) == 1
        return tops[0]

    def is_antichain(self, family: Sequence[RoughClass]) -> bool:
        return all(
            not self.comparable(a, b)
            for i, a in enumerate(family)
            for b in family[i + 1 :]
        )

    def maximal_antichains(self, limit: int) -> list[tuple[RoughClass, ...]]:
        """Maximal antichains in deterministic order, at most `limit` of them.

        DFS over index-increasing antichains; a complete candidate is kept
        when every element of the poset is comparable to one of its members.
        """
        if limit < 1:
            raise ValueError("limit must be at least 1")
        n = len(self.elements)
        comp = [
            [self.comparable(self.elements[i], self.elements[j]) for j in range(n)]
            for i in range(n)
        ]
        out: list[tuple[RoughClass, ...]] = []

        def extend(prefix: list[int], start: int) -> None:
            if len(out) >= limit:
                return
            if prefix and all(any(comp[j][m] for m in prefix) for j in range(n)):
                out.append(tuple(self.elements[i] for i in prefix))
                if len(out) >= limit:
                    return
            for k in range(start, n):
                if all(not comp[k][m] for m in prefix):
                    extend(prefix + [k], k + 1)

        extend([], 0)
        return out
